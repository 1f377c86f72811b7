#include "qgalois/actions.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgalois/errors.hpp"

namespace qg {

namespace {

RatFunc root_scalar(int m, long k) {
    long r = ((k % m) + m) % m;
    return RatFunc(Cyclotomic::root_power(m, r));
}

bool is_identity_perm(const std::vector<int>& p) {
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i)) return false;
    return true;
}

} // namespace

QAlgebraElement act(const ReflGroupElement& h, const QAlgebraElement& u) {
    const QAlgebraKind& k = u.kind();
    if (h.rank() != k.rank) throw UndefinedAction("group rank differs from algebra rank");
    if (k.family == QFamily::Weyl) {
        for (long d : h.diag)
            if (d % h.m != 0)
                throw UndefinedAction("only permutations act on the Weyl family");
    }
    if (!is_identity_perm(h.perm)) {
        for (const auto& p : k.params)
            if (p != k.params[0])
                throw UndefinedAction("permutations require equal deformation parameters");
    }
    QAlgebraElement out = QAlgebraElement::zero(k);
    for (const auto& [e, c] : u.terms()) {
        long w = 0;
        std::vector<long> a(k.rank, 0), b(k.rank, 0);
        for (int i = 0; i < k.rank; ++i) {
            w += h.diag[i] * e.a[i];
            a[h.perm[i]] = e.a[i];
            b[h.perm[i]] = e.b[i];
        }
        out += QAlgebraElement::monomial(k, std::move(a), std::move(b),
                                         c * root_scalar(h.m, w));
    }
    return out;
}

SkewElement act(const ReflGroupElement& h, const SkewElement& u,
                const std::string& var_prefix) {
    const ActionPtr& act_ = u.action();
    if (h.rank() != act_->rank())
        throw UndefinedAction("group rank differs from skew ring rank");
    Subst sub;
    for (int i = 0; i < h.rank(); ++i)
        sub[var_prefix + std::to_string(i + 1)] =
            root_scalar(h.m, h.diag[i]) *
            RatFunc::variable(var_prefix + std::to_string(h.perm[i] + 1));
    SkewElement out = SkewElement::zero(act_);
    for (const auto& [mvec, c] : u.terms()) {
        IntVec mp(h.rank(), 0);
        for (int i = 0; i < h.rank(); ++i) mp[h.perm[i]] = mvec[i];
        out += SkewElement::term(act_, std::move(mp), substitute(c, sub));
    }
    return out;
}

GwaElement diagonal_act(const ReflGroupElement& h, const GwaElement& u) {
    if (!is_identity_perm(h.perm))
        throw UndefinedAction("diagonal action requires a trivial permutation part");
    if (h.rank() != u.data()->rank())
        throw UndefinedAction("group rank differs from algebra rank");
    GwaElement out = GwaElement::zero(u.data());
    for (const auto& [z, c] : u.terms()) {
        long w = 0;
        for (int i = 0; i < h.rank(); ++i) w += h.diag[i] * z[i];
        out += GwaElement::term(u.data(), z, c * root_scalar(h.m, w));
    }
    return out;
}

SkewElement diagonal_act(const ReflGroupElement& h, const SkewElement& u) {
    if (!is_identity_perm(h.perm))
        throw UndefinedAction("diagonal action requires a trivial permutation part");
    if (h.rank() != u.action()->rank())
        throw UndefinedAction("group rank differs from skew ring rank");
    SkewElement out = SkewElement::zero(u.action());
    for (const auto& [mvec, c] : u.terms()) {
        long w = 0;
        for (int i = 0; i < h.rank(); ++i) w += h.diag[i] * mvec[i];
        out += SkewElement::term(u.action(), mvec, c * root_scalar(h.m, w));
    }
    return out;
}

QAlgebraElement reynolds(const std::vector<ReflGroupElement>& group,
                         const QAlgebraElement& u) {
    if (group.empty()) throw std::invalid_argument("reynolds: empty group");
    QAlgebraElement sum = QAlgebraElement::zero(u.kind());
    for (const auto& h : group) sum += act(h, u);
    return sum.scaled(RatFunc(make_rat(1, static_cast<long>(group.size()))));
}

namespace {

// all exponent rows (a_1..a_n, b_1..b_n) >= 0 of total degree d, graded-lex
void enumerate_exponents(int slots, long degree, std::vector<long>& cur,
                         std::vector<std::vector<long>>& out) {
    if (slots == 1) {
        cur.push_back(degree);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long v = degree; v >= 0; --v) {
        cur.push_back(v);
        enumerate_exponents(slots - 1, degree - v, cur, out);
        cur.pop_back();
    }
}

// coefficient of the monomial e in u, zero if absent
RatFunc coeff_of(const QAlgebraElement& u, const QExp& e) {
    auto it = u.terms().find(e);
    return it == u.terms().end() ? RatFunc(0) : it->second;
}

} // namespace

std::vector<QAlgebraElement> invariant_basis(const std::vector<ReflGroupElement>& group,
                                             const QAlgebraKind& kind, long degree) {
    if (kind.rank > 4) throw std::invalid_argument("invariant_basis: rank capped at 4");
    if (degree < 0 || degree > 10)
        throw std::invalid_argument("invariant_basis: degree capped at 10");
    std::vector<std::vector<long>> rows;
    std::vector<long> cur;
    enumerate_exponents(2 * kind.rank, degree, cur, rows);

    std::vector<QAlgebraElement> basis; // pivots, leading terms strictly decreasing
    for (const auto& row : rows) {
        std::vector<long> a(row.begin(), row.begin() + kind.rank);
        std::vector<long> b(row.begin() + kind.rank, row.end());
        QAlgebraElement v = reynolds(group, QAlgebraElement::monomial(kind, a, b));
        for (const auto& p : basis) {
            if (v.is_zero()) break;
            const QExp& lead = p.terms().begin()->first;
            RatFunc c = coeff_of(v, lead);
            if (!c.is_zero()) v -= p.scaled(c);
        }
        if (v.is_zero()) continue;
        v = v.scaled(RatFunc(1) / v.terms().begin()->second);
        // keep earlier pivots reduced against the new one
        const QExp& lead = v.terms().begin()->first;
        for (auto& p : basis) {
            RatFunc c = coeff_of(p, lead);
            if (!c.is_zero()) p -= v.scaled(c);
        }
        basis.push_back(std::move(v));
    }
    std::sort(basis.begin(), basis.end(),
              [](const QAlgebraElement& l, const QAlgebraElement& r) {
                  return QExpGreater{}(l.terms().begin()->first, r.terms().begin()->first);
              });
    return basis;
}

} // namespace qg
