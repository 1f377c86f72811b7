#include "qgalois/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qg {

namespace {

// Remainder of p modulo the monic polynomial d, both dense with constant
// term first. p is consumed.
std::vector<Rat> poly_rem(std::vector<Rat> p, const std::vector<Rat>& d) {
    const size_t dd = d.size() - 1;
    while (p.size() > dd) {
        Rat lead = p.back();
        if (lead != 0) {
            size_t shift = p.size() - 1 - dd;
            for (size_t i = 0; i < dd; ++i) p[shift + i] -= lead * d[i];
        }
        p.pop_back();
    }
    p.resize(dd, Rat(0));
    return p;
}

// Exact division of p by monic d; throws on nonzero remainder (internal use only).
std::vector<Rat> poly_div_exact(std::vector<Rat> p, const std::vector<Rat>& d) {
    const size_t dd = d.size() - 1;
    if (p.size() <= dd) throw std::logic_error("poly_div_exact: degree too small");
    std::vector<Rat> q(p.size() - dd, Rat(0));
    std::vector<Rat> r = std::move(p);
    for (size_t k = r.size() - 1; ; --k) {
        if (k < dd) break;
        Rat c = r[k];
        q[k - dd] = c;
        if (c != 0) {
            for (size_t i = 0; i <= dd; ++i) r[k - dd + i] -= c * d[i];
        }
        if (k == dd) break;
    }
    for (size_t i = 0; i < dd; ++i)
        if (r[i] != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return q;
}

void trim(std::vector<Rat>& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

} // namespace

long Cyclotomic::phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<Rat>& Cyclotomic::cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Rat>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d
    std::vector<Rat> num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        // compute Phi_d without holding the lock recursively: cache is
        // filled in increasing order, so a plain lookup-or-recurse works
        auto dit = cache.find(d);
        const std::vector<Rat>* phid;
        if (dit != cache.end()) {
            phid = &dit->second;
        } else {
            // d == 1 base case or smaller divisor not yet cached
            if (d == 1) {
                cache[1] = {Rat(-1), Rat(1)};
                phid = &cache[1];
            } else {
                // build recursively inline (divisors of d are < m too)
                std::vector<Rat> nd(d + 1, Rat(0));
                nd[0] = -1;
                nd[d] = 1;
                for (long e = 1; e < d; ++e) {
                    if (d % e != 0) continue;
                    auto eit = cache.find(e);
                    if (eit == cache.end() && e == 1) {
                        cache[1] = {Rat(-1), Rat(1)};
                        eit = cache.find(1);
                    }
                    nd = poly_div_exact(std::move(nd), eit->second);
                    trim(nd);
                }
                cache[d] = nd;
                phid = &cache[d];
            }
        }
        num = poly_div_exact(std::move(num), *phid);
        trim(num);
    }
    auto [ins, ok] = cache.emplace(m, std::move(num));
    return ins->second;
}

Cyclotomic Cyclotomic::root(long m) {
    if (m < 1) throw std::invalid_argument("cyclo_root: order must be >= 1");
    if (m == 1) return Cyclotomic(Rat(1));
    return root_power(m, 1);
}

Cyclotomic Cyclotomic::root_power(long m, long k) {
    k %= m;
    if (k < 0) k += m;
    if (k == 0) return Cyclotomic(Rat(1));
    std::vector<Rat> p(k + 1, Rat(0));
    p[k] = 1;
    std::vector<Rat> red = poly_rem(std::move(p), cyclotomic_polynomial(m));
    Cyclotomic out(m, std::move(red));
    out.normalize();
    return out;
}

bool Cyclotomic::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& r) { return r == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rat Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::logic_error("Cyclotomic::rational_value on irrational element");
    return coeffs_[0];
}

void Cyclotomic::normalize() {
    if (order_ != 1 && is_rational()) {
        Rat v = coeffs_[0];
        order_ = 1;
        coeffs_.assign(1, v);
    }
}

Cyclotomic Cyclotomic::lifted(long M) const {
    if (M == order_) return *this;
    long step = M / order_;
    std::vector<Rat> p;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        size_t deg = j * step;
        if (p.size() <= deg) p.resize(deg + 1, Rat(0));
        p[deg] += coeffs_[j];
    }
    if (p.empty()) p.assign(1, Rat(0));
    std::vector<Rat> red = poly_rem(std::move(p), cyclotomic_polynomial(M));
    return Cyclotomic(M, std::move(red));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    long M = std::lcm(order_, o.order_);
    Cyclotomic a = lifted(M), b = o.lifted(M);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.normalize();
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    long M = std::lcm(order_, o.order_);
    Cyclotomic a = lifted(M), b = o.lifted(M);
    std::vector<Rat> prod(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    std::vector<Rat> red = M == 1 ? std::vector<Rat>{prod[0]} : poly_rem(std::move(prod), cyclotomic_polynomial(M));
    Cyclotomic out(M, std::move(red));
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw DivisionByZero("Cyclotomic::inverse of zero");
    if (order_ == 1) return Cyclotomic(Rat(1) / coeffs_[0]);
    // extended Euclid in Q[x]: maintain r_i = t_i*Phi_m + s_i*this
    auto is_z = [](const std::vector<Rat>& p) {
        return p.size() == 1 && p[0] == 0;
    };
    auto divmod = [&](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> r = a, q(1, Rat(0));
        if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rat(0));
        while (!is_z(r) && r.size() >= b.size()) {
            Rat c = r.back() / b.back();
            size_t shift = r.size() - b.size();
            q[shift] = c;
            for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= c * b[i];
            trim(r);
            if (r.size() >= b.size() && r.back() == 0) trim(r);
        }
        return std::pair{q, r};
    };
    auto mul = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> p(a.size() + b.size() - 1, Rat(0));
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) p[i + j] += a[i] * b[j];
        trim(p);
        return p;
    };
    auto sub = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
        std::vector<Rat> p(std::max(a.size(), b.size()), Rat(0));
        for (size_t i = 0; i < a.size(); ++i) p[i] += a[i];
        for (size_t i = 0; i < b.size(); ++i) p[i] -= b[i];
        trim(p);
        return p;
    };

    std::vector<Rat> r0 = cyclotomic_polynomial(order_);
    std::vector<Rat> r1 = coeffs_;
    trim(r1);
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    while (!is_z(r1)) {
        auto [q, r] = divmod(r0, r1);
        std::vector<Rat> s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 is the gcd, a nonzero constant since Phi_m is irreducible
    if (r0.size() != 1 || r0[0] == 0) throw std::logic_error("Cyclotomic::inverse: gcd not constant");
    Rat scale = Rat(1) / r0[0];
    for (auto& c : s0) c *= scale;
    std::vector<Rat> red = poly_rem(std::move(s0), cyclotomic_polynomial(order_));
    Cyclotomic out(order_, std::move(red));
    out.normalize();
    return out;
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

Cyclotomic Cyclotomic::pow(long e) const {
    if (e == 0) return Cyclotomic(Rat(1));
    Cyclotomic b = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Cyclotomic acc(Rat(1));
    while (k) {
        if (k & 1) acc = acc * b;
        b = b * b;
        k >>= 1;
    }
    return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    long M = std::lcm(order_, o.order_);
    Cyclotomic a = lifted(M), b = o.lifted(M);
    return a.coeffs_ == b.coeffs_;
}

bool Cyclotomic::operator<(const Cyclotomic& o) const {
    long M = std::lcm(order_, o.order_);
    Cyclotomic a = lifted(M), b = o.lifted(M);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    }
    return false;
}

bool Cyclotomic::is_root_of_unity() const {
    if (is_zero()) return false;
    // roots of unity in Q(zeta_m) have order dividing lcm(2, m)
    long n = std::lcm(2L, order_);
    return pow(n).is_one();
}

long Cyclotomic::root_of_unity_order() const {
    long n = std::lcm(2L, order_);
    for (long k = 1; k <= n; ++k)
        if (pow(k).is_one()) return k;
    throw std::logic_error("root_of_unity_order: not a root of unity");
}

std::string Cyclotomic::str() const {
    if (is_rational()) return coeffs_[0].get_str();
    std::ostringstream os;
    bool first = true;
    std::string sym = "z" + std::to_string(order_);
    for (size_t j = coeffs_.size(); j-- > 0;) {
        const Rat& c = coeffs_[j];
        if (c == 0) continue;
        Rat ab = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            os << ab.get_str();
        } else {
            if (ab != 1) os << ab.get_str() << "*";
            os << sym;
            if (j > 1) os << "^" << j;
        }
    }
    if (first) return "0";
    return os.str();
}

} // namespace qg
