#pragma once

// Formal divisors on the base curve Y, a ledger of declared linear
// equivalences, and degree-level Riemann-Roch.

#include <map>
#include <string>
#include <vector>

namespace trisect {

/// An integer combination of named base-curve divisors (points or classes).
/// Zero coefficients are never stored, so structural equality is equality of
/// formal sums.
class FormalDivisor {
public:
    using Terms = std::map<std::string, int>;

    FormalDivisor() = default;
    FormalDivisor(std::string symbol, int coefficient = 1);
    static FormalDivisor from_terms(const Terms& terms);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    int coefficient(const std::string& symbol) const;

    FormalDivisor& operator+=(const FormalDivisor& other);
    FormalDivisor& operator-=(const FormalDivisor& other);
    FormalDivisor operator-() const;
    friend FormalDivisor operator+(FormalDivisor a, const FormalDivisor& b) { return a += b; }
    friend FormalDivisor operator-(FormalDivisor a, const FormalDivisor& b) { return a -= b; }
    friend FormalDivisor operator*(int k, const FormalDivisor& d);

    /// Adds `coefficient * symbol`.
    void add(const std::string& symbol, int coefficient);

    std::string to_string() const;

    bool operator==(const FormalDivisor&) const = default;

private:
    Terms terms_;
};

/// Declared symbol degrees plus relations asserted linearly equivalent to 0.
class EquivalenceLedger {
public:
    /// Declares (or re-declares with the same value) a symbol's degree.
    /// Throws InvalidRelation when the symbol already has a different degree.
    void declare(const std::string& symbol, int degree);
    bool declared(const std::string& symbol) const { return degrees_.count(symbol) != 0; }
    int symbol_degree(const std::string& symbol) const;

    /// Adds `relation ~ 0`. Every symbol must be declared and the relation
    /// must have degree 0.
    void relate(const FormalDivisor& relation);
    /// Convenience for `lhs ~ rhs`.
    void relate(const FormalDivisor& lhs, const FormalDivisor& rhs) { relate(lhs - rhs); }

    const std::map<std::string, int>& degrees() const { return degrees_; }
    const std::vector<FormalDivisor>& relations() const { return relations_; }

    bool operator==(const EquivalenceLedger&) const = default;

private:
    std::map<std::string, int> degrees_;
    std::vector<FormalDivisor> relations_;
};

/// Sum of coefficient * declared degree. Throws UnknownSymbol.
int degree(const FormalDivisor& d, const EquivalenceLedger& ledger);

/// True iff d1 - d2 lies in the integer span of the ledger's relations.
/// Returns false immediately when the degrees differ.
bool equivalent(const FormalDivisor& d1, const FormalDivisor& d2, const EquivalenceLedger& ledger);

/// h^0 of a line bundle of the given degree on a genus-g curve. `lo == hi`
/// means the value is determined.
struct H0Value {
    int lo = 0;
    int hi = 0;

    bool exact() const { return lo == hi; }
    static H0Value exactly(int v) { return {v, v}; }
    static H0Value range(int lo, int hi) { return {lo, hi}; }
    bool operator==(const H0Value&) const = default;
};

/// Degree-level Riemann-Roch. With `nonspecial_assumed` the bundle is taken
/// to be general in its degree, i.e. h^0 = max(0, deg - g + 1).
H0Value h0_line_bundle(int genus, int deg, bool nonspecial_assumed);

}  // namespace trisect
