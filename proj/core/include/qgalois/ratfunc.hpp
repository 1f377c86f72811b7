#pragma once

#include <map>
#include <string>

#include "qgalois/multipoly.hpp"

namespace qg {

// Element of the coefficient field: a reduced fraction of multivariate
// polynomials. Canonical form: gcd(num, den) = 1 and the denominator's
// graded-lex leading coefficient is 1, so equal values have identical
// stored representations.
class RatFunc {
public:
    RatFunc() : num_(), den_(Cyclotomic(1L)) {}
    RatFunc(const MultiPoly& p) : num_(p), den_(Cyclotomic(1L)) {} // NOLINT
    RatFunc(const Cyclotomic& c) : num_(c), den_(Cyclotomic(1L)) {} // NOLINT
    RatFunc(const Rat& r) : num_(r), den_(Cyclotomic(1L)) {}        // NOLINT
    RatFunc(long v) : num_(Rat(v)), den_(Cyclotomic(1L)) {}         // NOLINT
    RatFunc(MultiPoly num, MultiPoly den);

    static RatFunc variable(const std::string& name, long exp = 1);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Cyclotomic constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(long e) const;

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool operator<(const RatFunc& o) const {
        if (num_ != o.num_) return num_ < o.num_;
        return den_ < o.den_;
    }

    std::string str() const;

private:
    void reduce();
    MultiPoly num_, den_;
};

// Substitution map: variable name -> replacement value.
using Subst = std::map<std::string, RatFunc>;

RatFunc substitute(const MultiPoly& p, const Subst& s);
RatFunc substitute(const RatFunc& f, const Subst& s);

// Composition: (compose(a, b))(v) = a applied to b's images, i.e. first b
// then a as field endomorphisms acting on variables.
Subst compose_subst(const Subst& outer, const Subst& inner);

// Exact specialization with the standing quantum-parameter guard: binding a
// variable named q / q<i> to a root of unity throws ForbiddenSpecialization.
RatFunc specialize(const RatFunc& f, const Subst& bindings);

bool is_quantum_parameter(const std::string& name);

} // namespace qg
