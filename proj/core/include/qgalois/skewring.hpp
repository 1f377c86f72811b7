#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qgalois/lattice.hpp"
#include "qgalois/ratfunc.hpp"

namespace qg {

enum class Ambient { Nn, Zn };

// Action of N^n or Z^n on the coefficient field by commuting substitution
// endomorphisms, one per basis vector. For Zn every generator map carries
// an explicit inverse.
class MonoidAction {
public:
    MonoidAction(int rank, Ambient ambient, std::vector<Subst> generator_maps,
                 std::vector<Subst> inverse_maps = {});

    int rank() const { return rank_; }
    Ambient ambient() const { return ambient_; }
    const std::vector<Subst>& generator_maps() const { return maps_; }

    // sigma_m: apply generator i |m_i| times (inverse map for m_i < 0)
    RatFunc apply(const IntVec& m, const RatFunc& f) const;
    // image of a single variable under sigma_m
    RatFunc apply_var(const IntVec& m, const std::string& var) const;

    bool operator==(const MonoidAction& o) const;

private:
    void check_commuting() const;
    int rank_;
    Ambient ambient_;
    std::vector<Subst> maps_;
    std::vector<Subst> inverses_;
};

using ActionPtr = std::shared_ptr<const MonoidAction>;

// The q-scaling action epsilon_i : x_i -> q x_i, x_j -> x_j on variables
// x1..xn.
ActionPtr qscale_action(int n, Ambient ambient, const RatFunc& q = RatFunc::variable("q"),
                        const std::string& var_prefix = "x");
// The shift action epsilon_i : h_i -> q^{-1}(h_i - 1) used by the quantum
// Weyl embedding, on variables h1..hn (Zn).
ActionPtr qweyl_shift_action(int n, const RatFunc& q = RatFunc::variable("q"));

// Finite sum of f_m * m with f_m in the coefficient field and m an exponent
// vector in N^n or Z^n. Multiplication: (f*m)(g*m') = f*sigma_m(g)*(m+m').
class SkewElement {
public:
    using TermMap = std::map<IntVec, RatFunc>;

    explicit SkewElement(ActionPtr action) : action_(std::move(action)) {}

    static SkewElement zero(const ActionPtr& a) { return SkewElement(a); }
    static SkewElement scalar(const ActionPtr& a, const RatFunc& c);
    static SkewElement one(const ActionPtr& a) { return scalar(a, RatFunc(1)); }
    static SkewElement term(const ActionPtr& a, IntVec m, RatFunc coeff);
    // basis monoid element epsilon_i (1-based)
    static SkewElement eps(const ActionPtr& a, int i, long exp = 1);

    const ActionPtr& action() const { return action_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SkewElement operator-() const;
    SkewElement operator+(const SkewElement& o) const;
    SkewElement operator-(const SkewElement& o) const;
    SkewElement operator*(const SkewElement& o) const; // throws ActionMismatch
    SkewElement& operator+=(const SkewElement& o) { return *this = *this + o; }
    SkewElement& operator-=(const SkewElement& o) { return *this = *this - o; }
    SkewElement& operator*=(const SkewElement& o) { return *this = *this * o; }
    SkewElement scaled(const RatFunc& c) const;
    SkewElement pow(long e) const; // e >= 0

    bool operator==(const SkewElement& o) const;
    bool operator!=(const SkewElement& o) const { return !(*this == o); }

    // supp: exponent vectors with nonzero coefficient
    std::set<IntVec> supp() const;

    std::string str() const;

private:
    void insert_term(const IntVec& m, const RatFunc& c);
    ActionPtr action_;
    TermMap terms_;
};

} // namespace qg
