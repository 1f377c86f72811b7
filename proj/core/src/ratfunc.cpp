#include "qgalois/ratfunc.hpp"

#include <cctype>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qg {

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("RatFunc: zero denominator");
    reduce();
}

RatFunc RatFunc::variable(const std::string& name, long exp) {
    if (exp >= 0) return RatFunc(MultiPoly::variable(name, exp));
    return RatFunc(MultiPoly(Cyclotomic(1L)), MultiPoly::variable(name, -exp));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = MultiPoly(Cyclotomic(1L));
        return;
    }
    MultiPoly g = MultiPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = MultiPoly::div_exact(num_, g);
        den_ = MultiPoly::div_exact(den_, g);
    }
    Cyclotomic lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Cyclotomic inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RatFunc RatFunc::operator-() const {
    RatFunc out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-cancel before multiplying to keep intermediate degrees small
    MultiPoly g1 = MultiPoly::gcd(num_, o.den_);
    MultiPoly g2 = MultiPoly::gcd(o.num_, den_);
    MultiPoly n1 = g1.is_one() ? num_ : MultiPoly::div_exact(num_, g1);
    MultiPoly d2 = g1.is_one() ? o.den_ : MultiPoly::div_exact(o.den_, g1);
    MultiPoly n2 = g2.is_one() ? o.num_ : MultiPoly::div_exact(o.num_, g2);
    MultiPoly d1 = g2.is_one() ? den_ : MultiPoly::div_exact(den_, g2);
    return RatFunc(n1 * n2, d1 * d2);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("RatFunc::inverse of zero");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw DivisionByZero("RatFunc: division by zero");
    return *this * o.inverse();
}

RatFunc RatFunc::pow(long e) const {
    if (e == 0) return RatFunc(1);
    RatFunc b = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    RatFunc acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    std::ostringstream os;
    os << "(" << num_.str() << ")/(" << den_.str() << ")";
    return os.str();
}

RatFunc substitute(const MultiPoly& p, const Subst& s) {
    RatFunc out;
    for (const auto& [m, c] : p.terms()) {
        RatFunc t{MultiPoly(c)};
        for (const auto& [v, e] : m) {
            auto it = s.find(v);
            if (it != s.end())
                t *= it->second.pow(e);
            else
                t *= RatFunc(MultiPoly::variable(v, e));
        }
        out += t;
    }
    return out;
}

RatFunc substitute(const RatFunc& f, const Subst& s) {
    RatFunc den = substitute(f.den(), s);
    if (den.is_zero()) throw DivisionByZero("substitute: denominator vanishes");
    return substitute(f.num(), s) / den;
}

Subst compose_subst(const Subst& outer, const Subst& inner) {
    Subst out = outer;
    for (const auto& [v, img] : inner) out[v] = substitute(img, outer);
    // variables moved only by `outer` keep their outer images (already present)
    return out;
}

bool is_quantum_parameter(const std::string& name) {
    if (name.empty() || name[0] != 'q') return false;
    for (size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    return true;
}

RatFunc specialize(const RatFunc& f, const Subst& bindings) {
    for (const auto& [v, val] : bindings) {
        if (is_quantum_parameter(v) && val.is_constant()) {
            Cyclotomic c = val.constant_value();
            if (!c.is_zero() && c.is_root_of_unity())
                throw ForbiddenSpecialization("cannot bind " + v + " to a root of unity");
        }
    }
    return substitute(f, bindings);
}

} // namespace qg
