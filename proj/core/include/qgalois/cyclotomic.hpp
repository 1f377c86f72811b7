#pragma once

#include <vector>
#include <string>

#include "qgalois/rational.hpp"

namespace qg {

// Element of a cyclotomic field Q(zeta_m), stored in the power basis
// 1, zeta, ..., zeta^{phi(m)-1} modulo the m-th cyclotomic polynomial.
// Purely rational values are demoted to order 1 so that equal values have
// equal stored representations whenever they arise from the same field.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), coeffs_(1, Rat(0)) {}
    Cyclotomic(const Rat& r) : order_(1), coeffs_(1, r) {} // NOLINT(google-explicit-constructor)
    Cyclotomic(long v) : order_(1), coeffs_(1, Rat(v)) {}  // NOLINT(google-explicit-constructor)

    // zeta_m, a primitive m-th root of unity
    static Cyclotomic root(long m);
    // zeta_m^k (k may be negative)
    static Cyclotomic root_power(long m, long k);

    long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const { return is_rational() && coeffs_[0] == 1; }
    bool is_rational() const;
    // Requires is_rational()
    Rat rational_value() const;

    // True iff the value is a root of unity in Q(zeta_m).
    bool is_root_of_unity() const;
    // Multiplicative order (requires is_root_of_unity()).
    long root_of_unity_order() const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic inverse() const;
    Cyclotomic pow(long e) const;

    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Deterministic total order, used for canonical term maps.
    bool operator<(const Cyclotomic& o) const;

    // Power-basis rendering: "z4 + 1", "-3/2", "2*z3^1"... zeta_m prints as z<m>.
    std::string str() const;

    // Euler's totient; exposed because callers size exponent tables with it.
    static long phi(long m);
    // Coefficients of the m-th cyclotomic polynomial, constant term first,
    // length phi(m)+1, monic.
    static const std::vector<Rat>& cyclotomic_polynomial(long m);

private:
    Cyclotomic(long order, std::vector<Rat> coeffs)
        : order_(order), coeffs_(std::move(coeffs)) {}

    // Re-express in Q(zeta_M) for m | M.
    Cyclotomic lifted(long M) const;
    // Drop to order 1 when the value is rational.
    void normalize();

    long order_;
    std::vector<Rat> coeffs_;
};

} // namespace qg
