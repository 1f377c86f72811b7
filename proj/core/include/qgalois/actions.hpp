#pragma once

#include <vector>

#include "qgalois/gwa.hpp"
#include "qgalois/qalgebra.hpp"
#include "qgalois/reflgroup.hpp"
#include "qgalois/skewring.hpp"

namespace qg {

// h(x_i) = zeta^{g_i} x_{pi(i)}, h(y_i) = y_{pi(i)}. The Weyl family only
// admits the pure permutation part (simultaneous on x and y): a nontrivial
// scalar would break y_i x_i = q x_i y_i + 1.
QAlgebraElement act(const ReflGroupElement& h, const QAlgebraElement& u);

// Same action on the coefficient variables <prefix>1..<prefix>n together
// with h(eps_i) = eps_{pi(i)} on the monoid part.
SkewElement act(const ReflGroupElement& h, const SkewElement& u,
                const std::string& var_prefix = "x");

// Diagonal character action on a generalized Weyl algebra:
// X_i -> zeta^{g_i} X_i, Y_i -> zeta^{-g_i} Y_i, base fixed. Requires a
// trivial permutation part.
GwaElement diagonal_act(const ReflGroupElement& h, const GwaElement& u);
// The matching action on the skew side: f * m -> zeta^{<g, m>} f * m.
SkewElement diagonal_act(const ReflGroupElement& h, const SkewElement& u);

// Averaging operator (1/|G|) sum_h h(u).
QAlgebraElement reynolds(const std::vector<ReflGroupElement>& group,
                         const QAlgebraElement& u);

// Deterministic basis of the degree-d invariants spanned by monomials with
// nonnegative exponents: leading coefficients 1, fully inter-reduced,
// ordered by graded-lex leading term.
std::vector<QAlgebraElement> invariant_basis(const std::vector<ReflGroupElement>& group,
                                             const QAlgebraKind& kind, long degree);

} // namespace qg
