#include "trisect/picard.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "trisect/errors.hpp"

namespace trisect {

FormalDivisor::FormalDivisor(std::string symbol, int coefficient) {
    add(symbol, coefficient);
}

FormalDivisor FormalDivisor::from_terms(const Terms& terms) {
    FormalDivisor d;
    for (const auto& [s, c] : terms) d.add(s, c);
    return d;
}

int FormalDivisor::coefficient(const std::string& symbol) const {
    auto it = terms_.find(symbol);
    return it == terms_.end() ? 0 : it->second;
}

void FormalDivisor::add(const std::string& symbol, int coefficient) {
    if (coefficient == 0) return;
    int& c = terms_[symbol];
    c += coefficient;
    if (c == 0) terms_.erase(symbol);
}

FormalDivisor& FormalDivisor::operator+=(const FormalDivisor& other) {
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
}

FormalDivisor& FormalDivisor::operator-=(const FormalDivisor& other) {
    for (const auto& [s, c] : other.terms_) add(s, -c);
    return *this;
}

FormalDivisor FormalDivisor::operator-() const {
    FormalDivisor d;
    for (const auto& [s, c] : terms_) d.terms_[s] = -c;
    return d;
}

FormalDivisor operator*(int k, const FormalDivisor& d) {
    FormalDivisor out;
    for (const auto& [s, c] : d.terms_) out.add(s, k * c);
    return out;
}

std::string FormalDivisor::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const int a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << s;
        first = false;
    }
    return os.str();
}

void EquivalenceLedger::declare(const std::string& symbol, int degree) {
    auto [it, inserted] = degrees_.emplace(symbol, degree);
    if (!inserted && it->second != degree) {
        throw InvalidRelation("symbol '" + symbol + "' already declared with degree " +
                              std::to_string(it->second));
    }
}

int EquivalenceLedger::symbol_degree(const std::string& symbol) const {
    auto it = degrees_.find(symbol);
    if (it == degrees_.end()) throw UnknownSymbol("no degree declared for '" + symbol + "'");
    return it->second;
}

void EquivalenceLedger::relate(const FormalDivisor& relation) {
    const int deg = degree(relation, *this);
    if (deg != 0) {
        throw InvalidRelation("relation " + relation.to_string() + " ~ 0 has degree " +
                              std::to_string(deg));
    }
    if (!relation.empty()) relations_.push_back(relation);
}

int degree(const FormalDivisor& d, const EquivalenceLedger& ledger) {
    int total = 0;
    for (const auto& [s, c] : d.terms()) total += c * ledger.symbol_degree(s);
    return total;
}

namespace {

using Big = boost::multiprecision::cpp_int;
using Row = std::vector<Big>;

// Row-style Hermite normal form of the lattice spanned by `rows`; returns the
// nonzero rows in echelon order with positive pivots.
std::vector<Row> hermite_rows(std::vector<Row> rows, std::size_t ncols) {
    std::vector<Row> basis;
    std::size_t top = 0;
    for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
        // Euclid on column `col` among rows[top..]
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = top; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[top], rows[best]);
            bool reduced = false;
            for (std::size_t i = top + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0) continue;
                const Big q = rows[i][col] / rows[top][col];
                for (std::size_t j = col; j < ncols; ++j) rows[i][j] -= q * rows[top][j];
                if (rows[i][col] != 0) reduced = true;
            }
            if (!reduced) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0) {
            for (auto& x : rows[top]) x = -x;
        }
        ++top;
    }
    rows.resize(top);
    for (auto& r : rows) basis.push_back(std::move(r));
    return basis;
}

}  // namespace

bool equivalent(const FormalDivisor& d1, const FormalDivisor& d2, const EquivalenceLedger& ledger) {
    if (degree(d1, ledger) != degree(d2, ledger)) return false;
    const FormalDivisor target = d1 - d2;
    if (target.empty()) return true;

    std::set<std::string> symbols;
    for (const auto& [s, c] : target.terms()) symbols.insert(s);
    for (const auto& rel : ledger.relations())
        for (const auto& [s, c] : rel.terms()) symbols.insert(s);
    const std::vector<std::string> cols(symbols.begin(), symbols.end());
    auto to_row = [&](const FormalDivisor& d) {
        Row r(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) r[j] = d.coefficient(cols[j]);
        return r;
    };

    std::vector<Row> rows;
    for (const auto& rel : ledger.relations()) rows.push_back(to_row(rel));
    const auto basis = hermite_rows(std::move(rows), cols.size());

    Row v = to_row(target);
    for (const auto& b : basis) {
        std::size_t pivot = 0;
        while (b[pivot] == 0) ++pivot;
        for (std::size_t j = 0; j < pivot; ++j)
            if (v[j] != 0) return false;
        if (v[pivot] % b[pivot] != 0) return false;
        const Big q = v[pivot] / b[pivot];
        for (std::size_t j = pivot; j < cols.size(); ++j) v[j] -= q * b[j];
    }
    return std::all_of(v.begin(), v.end(), [](const Big& x) { return x == 0; });
}

H0Value h0_line_bundle(int genus, int deg, bool nonspecial_assumed) {
    if (deg < 0) return H0Value::exactly(0);
    const int chi = deg - genus + 1;
    if (deg >= 2 * genus - 1) return H0Value::exactly(chi);
    if (nonspecial_assumed) return H0Value::exactly(std::max(0, chi));
    if (deg == 2 * genus - 2) return H0Value::range(chi, chi + 1);
    // Clifford: a special divisor of degree deg has h^0 <= deg/2 + 1.
    return H0Value::range(std::max(0, chi), deg / 2 + 1);
}

}  // namespace trisect
