#pragma once

#include <map>
#include <string>
#include <vector>

#include "qgalois/ratfunc.hpp"

namespace qg {

enum class QFamily { AffineSpace, Torus, Weyl };

std::string family_name(QFamily f);

// Which algebra an element lives in: the family, the rank n, and the
// deformation parameters (q_1,...,q_n), all equal to the symbol q in the
// single-parameter case.
struct QAlgebraKind {
    QFamily family;
    int rank;
    std::vector<RatFunc> params;

    // single-parameter kind: q_i = q for all i
    static QAlgebraKind uniform(QFamily f, int n, const RatFunc& q = RatFunc::variable("q"));
    // multiparameter kind with q_i = q<i>
    static QAlgebraKind multiparam(QFamily f, int n);

    bool operator==(const QAlgebraKind& o) const {
        return family == o.family && rank == o.rank && params == o.params;
    }
    bool operator!=(const QAlgebraKind& o) const { return !(*this == o); }
};

// Normal-form exponents of x_1^{a_1}...x_n^{a_n} y_1^{b_1}...y_n^{b_n}.
struct QExp {
    std::vector<long> a, b;
    long degree() const;
    bool operator==(const QExp& o) const { return a == o.a && b == o.b; }
};

// graded-lex on the concatenated exponent vector, leading term first
struct QExpGreater {
    bool operator()(const QExp& l, const QExp& r) const;
};

// Element of a quantum affine space, quantum torus, or quantum Weyl algebra
// in PBW normal form (all x's left of all y's, indices ascending).
class QAlgebraElement {
public:
    using TermMap = std::map<QExp, RatFunc, QExpGreater>;

    explicit QAlgebraElement(QAlgebraKind kind) : kind_(std::move(kind)) {}

    static QAlgebraElement zero(const QAlgebraKind& k) { return QAlgebraElement(k); }
    static QAlgebraElement scalar(const QAlgebraKind& k, const RatFunc& c);
    static QAlgebraElement one(const QAlgebraKind& k) { return scalar(k, RatFunc(1)); }
    // x_i / y_i, 1-based index
    static QAlgebraElement gen_x(const QAlgebraKind& k, int i, long exp = 1);
    static QAlgebraElement gen_y(const QAlgebraKind& k, int i, long exp = 1);
    static QAlgebraElement monomial(const QAlgebraKind& k, std::vector<long> a,
                                    std::vector<long> b, RatFunc coeff = RatFunc(1));

    const QAlgebraKind& kind() const { return kind_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    QAlgebraElement operator-() const;
    QAlgebraElement operator+(const QAlgebraElement& o) const;
    QAlgebraElement operator-(const QAlgebraElement& o) const;
    // PBW normal-form product; throws KindMismatch on different kinds
    QAlgebraElement operator*(const QAlgebraElement& o) const;
    QAlgebraElement& operator+=(const QAlgebraElement& o) { return *this = *this + o; }
    QAlgebraElement& operator-=(const QAlgebraElement& o) { return *this = *this - o; }
    QAlgebraElement& operator*=(const QAlgebraElement& o) { return *this = *this * o; }
    QAlgebraElement scaled(const RatFunc& c) const;
    QAlgebraElement pow(long e) const; // e >= 0

    bool operator==(const QAlgebraElement& o) const {
        return kind_ == o.kind_ && terms_ == o.terms_;
    }
    bool operator!=(const QAlgebraElement& o) const { return !(*this == o); }

    // total degree of the leading term (0 for zero element)
    long total_degree() const;

    // Torus only: two-sided inverse of a single monomial.
    QAlgebraElement invert_monomial() const;

    std::string str() const;

private:
    void insert_term(const QExp& e, const RatFunc& c);
    QAlgebraKind kind_;
    TermMap terms_;
};

// Both sides of the closed-form rewrite y x^a = q^a x^a y + [a]_q x^{a-1}
// in A_1^q: first computed by the multiplication engine, second assembled
// from the closed form. Callers assert equality.
std::pair<QAlgebraElement, QAlgebraElement> qa_weyl_power_identity(long a);

// q-integer [a]_q = (q^a - 1)/(q - 1) as an element of the coefficient field.
RatFunc q_int(long a, const RatFunc& q);
RatFunc q_factorial(long k, const RatFunc& q);
RatFunc q_binomial(long n, long k, const RatFunc& q);

} // namespace qg
