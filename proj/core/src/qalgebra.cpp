#include "qgalois/qalgebra.hpp"

#include <algorithm>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qg {

std::string family_name(QFamily f) {
    switch (f) {
        case QFamily::AffineSpace: return "affine";
        case QFamily::Torus: return "torus";
        case QFamily::Weyl: return "weyl";
    }
    return "?";
}

QAlgebraKind QAlgebraKind::uniform(QFamily f, int n, const RatFunc& q) {
    return QAlgebraKind{f, n, std::vector<RatFunc>(n, q)};
}

QAlgebraKind QAlgebraKind::multiparam(QFamily f, int n) {
    std::vector<RatFunc> ps;
    for (int i = 1; i <= n; ++i) ps.push_back(RatFunc::variable("q" + std::to_string(i)));
    return QAlgebraKind{f, n, std::move(ps)};
}

long QExp::degree() const {
    long d = 0;
    for (long v : a) d += v;
    for (long v : b) d += v;
    return d;
}

bool QExpGreater::operator()(const QExp& l, const QExp& r) const {
    long dl = l.degree(), dr = r.degree();
    if (dl != dr) return dl > dr;
    if (l.a != r.a) return l.a > r.a;
    return l.b > r.b;
}

QAlgebraElement QAlgebraElement::scalar(const QAlgebraKind& k, const RatFunc& c) {
    QAlgebraElement e(k);
    QExp ex{std::vector<long>(k.rank, 0), std::vector<long>(k.rank, 0)};
    e.insert_term(ex, c);
    return e;
}

QAlgebraElement QAlgebraElement::gen_x(const QAlgebraKind& k, int i, long exp) {
    QExp ex{std::vector<long>(k.rank, 0), std::vector<long>(k.rank, 0)};
    ex.a[i - 1] = exp;
    QAlgebraElement e(k);
    e.insert_term(ex, RatFunc(1));
    return e;
}

QAlgebraElement QAlgebraElement::gen_y(const QAlgebraKind& k, int i, long exp) {
    QExp ex{std::vector<long>(k.rank, 0), std::vector<long>(k.rank, 0)};
    ex.b[i - 1] = exp;
    QAlgebraElement e(k);
    e.insert_term(ex, RatFunc(1));
    return e;
}

QAlgebraElement QAlgebraElement::monomial(const QAlgebraKind& k, std::vector<long> a,
                                          std::vector<long> b, RatFunc coeff) {
    QAlgebraElement e(k);
    e.insert_term(QExp{std::move(a), std::move(b)}, coeff);
    return e;
}

void QAlgebraElement::insert_term(const QExp& e, const RatFunc& c) {
    if (c.is_zero()) return;
    if (kind_.family != QFamily::Torus) {
        for (long v : e.a)
            if (v < 0) throw std::logic_error("negative x-exponent outside the torus");
        for (long v : e.b)
            if (v < 0) throw std::logic_error("negative y-exponent outside the torus");
    }
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QAlgebraElement QAlgebraElement::operator-() const {
    QAlgebraElement out(kind_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

QAlgebraElement QAlgebraElement::operator+(const QAlgebraElement& o) const {
    if (kind_ != o.kind_) throw KindMismatch();
    QAlgebraElement out = *this;
    for (const auto& [e, c] : o.terms_) out.insert_term(e, c);
    return out;
}

QAlgebraElement QAlgebraElement::operator-(const QAlgebraElement& o) const {
    return *this + (-o);
}

QAlgebraElement QAlgebraElement::scaled(const RatFunc& c) const {
    QAlgebraElement out(kind_);
    if (c.is_zero()) return out;
    for (const auto& [e, cc] : terms_) out.terms_.emplace(e, cc * c);
    return out;
}

RatFunc q_int(long a, const RatFunc& q) {
    // (q^a - 1)/(q - 1) = 1 + q + ... + q^{a-1}
    RatFunc s(0);
    for (long j = 0; j < a; ++j) s += q.pow(j);
    return s;
}

RatFunc q_factorial(long k, const RatFunc& q) {
    RatFunc f(1);
    for (long j = 1; j <= k; ++j) f *= q_int(j, q);
    return f;
}

RatFunc q_binomial(long n, long k, const RatFunc& q) {
    if (k < 0 || k > n) return RatFunc(0);
    return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

QAlgebraElement QAlgebraElement::operator*(const QAlgebraElement& o) const {
    if (kind_ != o.kind_) throw KindMismatch();
    const int n = kind_.rank;
    QAlgebraElement out(kind_);
    for (const auto& [eu, cu] : terms_) {
        for (const auto& [ev, cv] : o.terms_) {
            if (kind_.family != QFamily::Weyl) {
                // pure exponent shuffle with a q-power cocycle:
                // moving y_i^{b_i} across x_i^{a'_i} costs q_i^{b_i a'_i}
                RatFunc c = cu * cv;
                QExp e{std::vector<long>(n), std::vector<long>(n)};
                for (int i = 0; i < n; ++i) {
                    long cross = eu.b[i] * ev.a[i];
                    if (cross != 0) c *= kind_.params[i].pow(cross);
                    e.a[i] = eu.a[i] + ev.a[i];
                    e.b[i] = eu.b[i] + ev.b[i];
                }
                out.insert_term(e, c);
                continue;
            }
            // Weyl: per-index closed form
            //   y^b x^a = sum_k q^{(a-k)(b-k)} [a k]_q [b k]_q [k]_q! x^{a-k} y^{b-k}
            // indices are independent, so expand the cartesian product.
            struct Partial {
                RatFunc c;
                QExp e;
            };
            std::vector<Partial> acc{{cu * cv, QExp{std::vector<long>(n), std::vector<long>(n)}}};
            for (int i = 0; i < n; ++i) {
                const long au = eu.a[i], bu = eu.b[i];
                const long av = ev.a[i], bv = ev.b[i];
                const RatFunc& q = kind_.params[i];
                std::vector<Partial> next;
                long kmax = std::min(bu, av);
                for (long k = 0; k <= kmax; ++k) {
                    RatFunc coef = q.pow((av - k) * (bu - k)) * q_binomial(av, k, q) *
                                   q_binomial(bu, k, q) * q_factorial(k, q);
                    if (coef.is_zero()) continue;
                    for (const auto& p : acc) {
                        Partial np = p;
                        np.c *= coef;
                        np.e.a[i] = au + av - k;
                        np.e.b[i] = bu + bv - k;
                        next.push_back(std::move(np));
                    }
                }
                acc = std::move(next);
            }
            for (const auto& p : acc) out.insert_term(p.e, p.c);
        }
    }
    return out;
}

QAlgebraElement QAlgebraElement::pow(long e) const {
    if (e < 0) throw std::invalid_argument("QAlgebraElement::pow: negative exponent");
    QAlgebraElement acc = one(kind_);
    QAlgebraElement b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

long QAlgebraElement::total_degree() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.degree();
}

QAlgebraElement QAlgebraElement::invert_monomial() const {
    if (kind_.family != QFamily::Torus)
        throw KindMismatch("monomial inversion is defined on the torus only");
    if (terms_.size() != 1) throw NotAMonomial();
    const auto& [e, c] = *terms_.begin();
    // (x^a y^b)(x^{-a} y^{-b}) = prod_i q_i^{-a_i b_i}, so scale by its inverse
    RatFunc coeff = c.inverse();
    QExp inv{e.a, e.b};
    for (int i = 0; i < kind_.rank; ++i) {
        coeff *= kind_.params[i].pow(e.a[i] * e.b[i]);
        inv.a[i] = -e.a[i];
        inv.b[i] = -e.b[i];
    }
    QAlgebraElement out(kind_);
    out.insert_term(inv, coeff);
    return out;
}

std::string QAlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        if (!first) os << " + ";
        first = false;
        bool is_unit_mono = true;
        for (long v : e.a)
            if (v != 0) is_unit_mono = false;
        for (long v : e.b)
            if (v != 0) is_unit_mono = false;
        bool simple = c.is_polynomial() && c.num().terms().size() == 1 &&
                      c.num().leading_coeff().is_rational() &&
                      c.num().leading_coeff().rational_value() >= 0;
        if (is_unit_mono) {
            if (simple) os << cs;
            else os << "(" << cs << ")";
            continue;
        }
        bool printed = false;
        if (cs == "1") {
            // omit unit coefficient
        } else if (simple) {
            os << cs;
            printed = true;
        } else {
            os << "(" << cs << ")";
            printed = true;
        }
        auto emit = [&](const char* base, const std::vector<long>& v) {
            for (size_t i = 0; i < v.size(); ++i) {
                if (v[i] == 0) continue;
                if (printed) os << "*";
                printed = true;
                os << base << (i + 1);
                if (v[i] != 1) os << "^" << v[i];
            }
        };
        emit("x", e.a);
        emit("y", e.b);
        if (!printed) os << "1";
    }
    return os.str();
}

std::pair<QAlgebraElement, QAlgebraElement> qa_weyl_power_identity(long a) {
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::Weyl, 1);
    RatFunc q = RatFunc::variable("q");
    QAlgebraElement x = QAlgebraElement::gen_x(k, 1);
    QAlgebraElement y = QAlgebraElement::gen_y(k, 1);
    QAlgebraElement lhs = y * x.pow(a);
    QAlgebraElement rhs =
        a == 0 ? y
               : (x.pow(a) * y).scaled(q.pow(a)) + x.pow(a - 1).scaled(q_int(a, q));
    return {lhs, rhs};
}

} // namespace qg
