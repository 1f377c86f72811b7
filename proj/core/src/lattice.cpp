#include "qgalois/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>

namespace qg {

HnfCertificate hermite_normal_form(const IntMat& rows, int n) {
    const int m = static_cast<int>(rows.size());
    IntMat a = rows;
    IntMat u(m, IntVec(m, 0));
    for (int i = 0; i < m; ++i) u[i][i] = 1;

    int pivot_row = 0;
    for (int col = 0; col < n && pivot_row < m; ++col) {
        // euclidean elimination below the pivot
        while (true) {
            int best = -1;
            for (int r = pivot_row; r < m; ++r) {
                if (a[r][col] == 0) continue;
                if (best < 0 || std::llabs(a[r][col]) < std::llabs(a[best][col])) best = r;
            }
            if (best < 0) break;
            std::swap(a[pivot_row], a[best]);
            std::swap(u[pivot_row], u[best]);
            bool reduced = true;
            for (int r = pivot_row + 1; r < m; ++r) {
                if (a[r][col] == 0) continue;
                long q = a[r][col] / a[pivot_row][col];
                for (int c = 0; c < n; ++c) a[r][c] -= q * a[pivot_row][c];
                for (int c = 0; c < m; ++c) u[r][c] -= q * u[pivot_row][c];
                if (a[r][col] != 0) reduced = false;
            }
            if (reduced) break;
        }
        if (a[pivot_row][col] == 0) continue;
        if (a[pivot_row][col] < 0) {
            for (int c = 0; c < n; ++c) a[pivot_row][c] = -a[pivot_row][c];
            for (int c = 0; c < m; ++c) u[pivot_row][c] = -u[pivot_row][c];
        }
        // reduce entries above the pivot into [0, pivot)
        for (int r = 0; r < pivot_row; ++r) {
            long p = a[pivot_row][col];
            long q = a[r][col] / p;
            if (a[r][col] % p < 0) q -= 1; // floor division
            if (q == 0) continue;
            for (int c = 0; c < n; ++c) a[r][c] -= q * a[pivot_row][c];
            for (int c = 0; c < m; ++c) u[r][c] -= q * u[pivot_row][c];
        }
        ++pivot_row;
    }

    HnfCertificate cert;
    cert.transform = u;
    for (int r = 0; r < pivot_row; ++r) cert.hnf.push_back(a[r]);
    cert.full_rank_identity = (pivot_row == n);
    if (cert.full_rank_identity) {
        for (int r = 0; r < n && cert.full_rank_identity; ++r)
            for (int c = 0; c < n; ++c)
                if (cert.hnf[r][c] != (r == c ? 1 : 0)) {
                    cert.full_rank_identity = false;
                    break;
                }
    }
    return cert;
}

GroupGenResult generates_group(const std::vector<IntVec>& S, int n) {
    HnfCertificate cert = hermite_normal_form(S, n);
    return {cert.full_rank_identity, std::move(cert)};
}

bool generates_monoid(const std::vector<IntVec>& S, int n) {
    // any N-combination summing to e_i has total degree 1, so e_i itself
    // must be one of the generators
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        if (std::find(S.begin(), S.end(), e) == S.end()) return false;
    }
    return true;
}

namespace {

bool reachable_all(const std::vector<IntVec>& S, int n, long radius,
                   const std::vector<IntVec>& targets) {
    std::set<IntVec> seen;
    std::queue<IntVec> work;
    IntVec zero(n, 0);
    seen.insert(zero);
    work.push(zero);
    while (!work.empty()) {
        IntVec v = work.front();
        work.pop();
        for (const auto& s : S) {
            IntVec w = v;
            bool in_box = true;
            for (int i = 0; i < n; ++i) {
                w[i] += s[i];
                if (std::llabs(w[i]) > radius) in_box = false;
            }
            if (!in_box || seen.count(w)) continue;
            seen.insert(w);
            work.push(w);
        }
    }
    return std::all_of(targets.begin(), targets.end(),
                       [&](const IntVec& t) { return seen.count(t) > 0; });
}

} // namespace

bool generates_group_bruteforce(const std::vector<IntVec>& S, int n, long radius) {
    // close S under negation: in a group every generator is invertible
    std::vector<IntVec> gens = S;
    for (const auto& s : S) {
        IntVec neg(n);
        for (int i = 0; i < n; ++i) neg[i] = -s[i];
        gens.push_back(neg);
    }
    std::vector<IntVec> targets;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        targets.push_back(e);
    }
    return reachable_all(gens, n, radius, targets);
}

bool generates_monoid_bruteforce(const std::vector<IntVec>& S, int n, long radius) {
    std::vector<IntVec> targets;
    for (int i = 0; i < n; ++i) {
        IntVec e(n, 0);
        e[i] = 1;
        targets.push_back(e);
    }
    return reachable_all(S, n, radius, targets);
}

} // namespace qg
