#pragma once

#include <string>
#include <vector>

#include "qgalois/lattice.hpp"

namespace qg {

// Monomial matrix (g, pi) with m-th-root-of-unity entries, acting on
// variables by x_i -> zeta_m^{g_i} x_{pi(i)}.
struct ReflGroupElement {
    int m = 1;
    IntVec diag;           // exponents of zeta_m, kept reduced mod m
    std::vector<int> perm; // 0-based, i -> perm[i]

    int rank() const { return static_cast<int>(perm.size()); }

    static ReflGroupElement identity(int m, int n);
    static ReflGroupElement diagonal(int m, IntVec diag);
    static ReflGroupElement transposition(int m, int n, int i, int j); // 1-based

    // composition of actions: (a*b)(x) = a(b(x))
    ReflGroupElement operator*(const ReflGroupElement& o) const;
    ReflGroupElement inverse() const;

    bool operator==(const ReflGroupElement& o) const {
        return m == o.m && diag == o.diag && perm == o.perm;
    }
    bool operator<(const ReflGroupElement& o) const;

    std::string str() const;

private:
    void reduce();
};

// Generators of G(m, p, n) = A(m, p, n) x| S_n with p | m:
// diag(p, 0, ..., 0), diag(1, -1, 0, ..., 0), adjacent transpositions.
std::vector<ReflGroupElement> gmpn_generators(int m, int p, int n);
// Generators of the full diagonal group G_m x ... x G_m.
std::vector<ReflGroupElement> diagonal_generators(int m, int n);
// Adjacent transpositions generating S_n (as permutation matrices, m = 1).
std::vector<ReflGroupElement> symmetric_generators(int n);

// Closure of the generators, sorted; throws GroupTooLarge past the cap.
std::vector<ReflGroupElement> close_group(const std::vector<ReflGroupElement>& gens,
                                          std::size_t cap = 100000);

// |G(m, p, n)| = m^n n! / p
long gmpn_order(int m, int p, int n);

} // namespace qg
