#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qgalois/cyclotomic.hpp"

namespace qg {

// Commuting monomial: variable name -> exponent (> 0 entries only).
using Monomial = std::map<std::string, long>;

long mono_degree(const Monomial& m);
// graded-lex: higher total degree first, then lexicographic with the
// alphabetically first variable most significant.
bool mono_graded_lex_less(const Monomial& a, const Monomial& b);

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return mono_graded_lex_less(b, a);
    }
};

// Multivariate polynomial over the cyclotomic rationals. Terms are kept in
// descending graded-lex order; zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Cyclotomic, MonoGreater>;

    MultiPoly() = default;
    MultiPoly(const Cyclotomic& c); // NOLINT(google-explicit-constructor)
    MultiPoly(const Rat& r) : MultiPoly(Cyclotomic(r)) {} // NOLINT
    MultiPoly(long v) : MultiPoly(Cyclotomic(v)) {}       // NOLINT

    static MultiPoly variable(const std::string& name, long exp = 1);
    static MultiPoly term(Monomial m, Cyclotomic c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Cyclotomic constant_value() const; // 0 if zero, requires is_constant
    bool is_one() const { return is_constant() && constant_value().is_one(); }

    long total_degree() const; // -1 for zero
    long degree_in(const std::string& var) const;
    std::set<std::string> variables() const;

    const Monomial& leading_monomial() const;
    const Cyclotomic& leading_coeff() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly pow(long e) const; // e >= 0

    MultiPoly scaled(const Cyclotomic& c) const;

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }
    bool operator<(const MultiPoly& o) const; // deterministic total order

    std::string str() const;

    // Exact division; throws std::logic_error if not divisible.
    static MultiPoly div_exact(const MultiPoly& f, const MultiPoly& g);
    // GCD over the coefficient field, normalized so the graded-lex leading
    // coefficient is 1. gcd(0, 0) = 0.
    static MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);

private:
    void insert_term(const Monomial& m, const Cyclotomic& c);
    TermMap terms_;
};

} // namespace qg
