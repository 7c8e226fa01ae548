#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace trisect {

enum class CheckStatus { Pass, Fail, Skip };

const char* to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string details;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

class Report {
public:
    explicit Report(std::string command) : command_(std::move(command)) {}

    void add(std::string name, CheckStatus status, std::string details = {});
    /// Pass when `ok`, Fail otherwise.
    void check(std::string name, bool ok, std::string details = {});
    void line(std::string text) { lines_.push_back(std::move(text)); }

    nlohmann::json& data() { return data_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    int count(CheckStatus s) const;
    int exit_code() const { return count(CheckStatus::Fail) == 0 ? kExitOk : kExitFail; }

    nlohmann::json to_json() const;
    void print(std::ostream& os) const;
    /// Throws std::runtime_error when the file cannot be written.
    void write_json(const std::string& path) const;

private:
    std::string command_;
    std::vector<std::string> lines_;
    std::vector<CheckRecord> checks_;
    nlohmann::json data_ = nlohmann::json::object();
};

}  // namespace trisect
