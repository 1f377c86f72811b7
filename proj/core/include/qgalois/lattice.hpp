#pragma once

#include <vector>

namespace qg {

using IntVec = std::vector<long>;
using IntMat = std::vector<IntVec>;

// Row-style Hermite normal form over Z with the unimodular transform
// recorded: transform * input = hnf (up to dropped zero rows the transform
// is square with determinant +-1).
struct HnfCertificate {
    IntMat hnf;       // row HNF, zero rows removed
    IntMat transform; // unimodular, transform * input_rows = hnf rows + zero rows
    bool full_rank_identity; // hnf == n x n identity
};

HnfCertificate hermite_normal_form(const IntMat& rows, int n);

// True iff the integer span of S is all of Z^n; certificate is the HNF.
struct GroupGenResult {
    bool generates;
    HnfCertificate certificate;
};
GroupGenResult generates_group(const std::vector<IntVec>& S, int n);

// True iff every standard basis vector of N^n is an N-linear combination of
// S. For N^n this reduces to: e_i is in S for every i.
bool generates_monoid(const std::vector<IntVec>& S, int n);

// Brute-force reachability oracle: BFS over N-combinations of S inside the
// box [-radius, radius]^n, checking that every e_i and -e_i is reachable
// (group case) or every e_i (monoid case). Test support.
bool generates_group_bruteforce(const std::vector<IntVec>& S, int n, long radius);
bool generates_monoid_bruteforce(const std::vector<IntVec>& S, int n, long radius);

} // namespace qg
