#include "qgalois/reflgroup.hpp"

#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qgalois/errors.hpp"

namespace qg {

void ReflGroupElement::reduce() {
    for (auto& d : diag) d = ((d % m) + m) % m;
}

ReflGroupElement ReflGroupElement::identity(int m, int n) {
    ReflGroupElement e;
    e.m = m;
    e.diag.assign(n, 0);
    e.perm.resize(n);
    std::iota(e.perm.begin(), e.perm.end(), 0);
    return e;
}

ReflGroupElement ReflGroupElement::diagonal(int m, IntVec diag) {
    ReflGroupElement e = identity(m, static_cast<int>(diag.size()));
    e.diag = std::move(diag);
    e.reduce();
    return e;
}

ReflGroupElement ReflGroupElement::transposition(int m, int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("transposition: bad indices");
    ReflGroupElement e = identity(m, n);
    std::swap(e.perm[i - 1], e.perm[j - 1]);
    return e;
}

ReflGroupElement ReflGroupElement::operator*(const ReflGroupElement& o) const {
    if (m != o.m || rank() != o.rank())
        throw std::invalid_argument("ReflGroupElement: mixed groups");
    // (a*b)(x_i) = zeta^{b_i + a_{b.perm[i]}} x_{a.perm[b.perm[i]]}
    ReflGroupElement out;
    out.m = m;
    out.diag.resize(rank());
    out.perm.resize(rank());
    for (int i = 0; i < rank(); ++i) {
        out.diag[i] = o.diag[i] + diag[o.perm[i]];
        out.perm[i] = perm[o.perm[i]];
    }
    out.reduce();
    return out;
}

ReflGroupElement ReflGroupElement::inverse() const {
    ReflGroupElement out;
    out.m = m;
    out.diag.resize(rank());
    out.perm.resize(rank());
    for (int i = 0; i < rank(); ++i) out.perm[perm[i]] = i;
    for (int i = 0; i < rank(); ++i) out.diag[i] = -diag[out.perm[i]];
    out.reduce();
    return out;
}

bool ReflGroupElement::operator<(const ReflGroupElement& o) const {
    if (m != o.m) return m < o.m;
    if (perm != o.perm) return perm < o.perm;
    return diag < o.diag;
}

std::string ReflGroupElement::str() const {
    std::ostringstream os;
    os << "(diag";
    for (long d : diag) os << " " << d;
    os << " | perm";
    for (int p : perm) os << " " << p + 1;
    os << " | zeta" << m << ")";
    return os.str();
}

std::vector<ReflGroupElement> gmpn_generators(int m, int p, int n) {
    if (m < 1 || n < 1 || p < 1 || m % p != 0)
        throw std::invalid_argument("gmpn_generators: need p | m, m >= 1, n >= 1");
    std::vector<ReflGroupElement> gens;
    if (p < m) {
        IntVec d(n, 0);
        d[0] = p;
        gens.push_back(ReflGroupElement::diagonal(m, d));
    }
    if (n >= 2 && m > 1) {
        IntVec d(n, 0);
        d[0] = 1;
        d[1] = -1;
        gens.push_back(ReflGroupElement::diagonal(m, d));
    }
    for (int i = 1; i < n; ++i)
        gens.push_back(ReflGroupElement::transposition(m, n, i, i + 1));
    if (gens.empty()) gens.push_back(ReflGroupElement::identity(m, n));
    return gens;
}

std::vector<ReflGroupElement> diagonal_generators(int m, int n) {
    std::vector<ReflGroupElement> gens;
    for (int i = 0; i < n; ++i) {
        IntVec d(n, 0);
        d[i] = 1;
        gens.push_back(ReflGroupElement::diagonal(m, d));
    }
    return gens;
}

std::vector<ReflGroupElement> symmetric_generators(int n) {
    std::vector<ReflGroupElement> gens;
    for (int i = 1; i < n; ++i)
        gens.push_back(ReflGroupElement::transposition(1, n, i, i + 1));
    if (gens.empty()) gens.push_back(ReflGroupElement::identity(1, n));
    return gens;
}

std::vector<ReflGroupElement> close_group(const std::vector<ReflGroupElement>& gens,
                                          std::size_t cap) {
    if (gens.empty()) throw std::invalid_argument("close_group: no generators");
    std::set<ReflGroupElement> seen;
    std::vector<ReflGroupElement> frontier{
        ReflGroupElement::identity(gens[0].m, gens[0].rank())};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<ReflGroupElement> next;
        for (const auto& h : frontier) {
            for (const auto& g : gens) {
                ReflGroupElement hg = h * g;
                if (seen.insert(hg).second) {
                    if (seen.size() > cap)
                        throw GroupTooLarge("group closure exceeds cap " +
                                            std::to_string(cap));
                    next.push_back(std::move(hg));
                }
            }
        }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

long gmpn_order(int m, int p, int n) {
    if (m < 1 || n < 1 || p < 1 || m % p != 0)
        throw std::invalid_argument("gmpn_order: need p | m, m >= 1, n >= 1");
    long v = 1;
    for (int i = 0; i < n; ++i) v *= m;
    for (int i = 2; i <= n; ++i) v *= i;
    return v / p;
}

} // namespace qg
