#include "trisect/report.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace trisect {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: break;
    }
    return "skip";
}

void Report::add(std::string name, CheckStatus status, std::string details) {
    checks_.push_back({std::move(name), status, std::move(details)});
}

void Report::check(std::string name, bool ok, std::string details) {
    add(std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details));
}

int Report::count(CheckStatus s) const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(),
                                          [s](const CheckRecord& c) { return c.status == s; }));
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["command"] = command_;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks_)
        j["checks"].push_back({{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}});
    j["summary"] = {{"pass", count(CheckStatus::Pass)},
                    {"fail", count(CheckStatus::Fail)},
                    {"skip", count(CheckStatus::Skip)},
                    {"exit_code", exit_code()}};
    j["data"] = data_;
    return j;
}

void Report::print(std::ostream& os) const {
    os << "== " << command_ << "\n";
    for (const auto& l : lines_) os << l << "\n";
    std::size_t width = 4;
    for (const auto& c : checks_) width = std::max(width, c.name.size());
    for (const auto& c : checks_) {
        os << "  [" << to_string(c.status) << "] " << c.name << std::string(width - c.name.size(), ' ');
        if (!c.details.empty()) os << "  " << c.details;
        os << "\n";
    }
    os << "summary: " << count(CheckStatus::Pass) << " pass, " << count(CheckStatus::Fail) << " fail, "
       << count(CheckStatus::Skip) << " skip\n";
}

void Report::write_json(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report to '" + path + "'");
    out << to_json().dump(2) << "\n";
}

}  // namespace trisect
