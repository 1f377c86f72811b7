#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qgalois/errors.hpp"
#include "qgalois/ratfunc.hpp"

namespace qg {

// Noncommutative polynomial over named generators with coefficients in the
// scalar tower. Words are the common language for presentations, claimed
// generator images, and the expression grammar; target algebras supply the
// only multiplication.
class Word {
public:
    struct Term {
        RatFunc coeff;
        std::vector<std::string> letters; // product of generators, left to right
        bool operator==(const Term& o) const {
            return coeff == o.coeff && letters == o.letters;
        }
    };

    Word() = default;

    static Word gen(const std::string& name);
    static Word scalar(const RatFunc& c);
    static Word one() { return scalar(RatFunc(1)); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Word operator-() const;
    Word operator+(const Word& o) const;
    Word operator-(const Word& o) const;
    Word operator*(const Word& o) const;
    Word& operator+=(const Word& o) { return *this = *this + o; }
    Word& operator-=(const Word& o) { return *this = *this - o; }
    Word& operator*=(const Word& o) { return *this = *this * o; }
    Word scaled(const RatFunc& c) const;
    Word pow(long e) const; // e >= 0

    bool operator==(const Word& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    void canonicalize();
    std::vector<Term> terms_;
};

// A presented algebra: generator names plus defining relation words
// (each relation is an expression that must vanish).
struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, Word>> relations; // name -> word
};

struct RelationResult {
    std::string relation;
    bool pass;
    std::string residual; // target-side rendering of the nonzero value
};

struct HomCertificate {
    bool pass;
    std::vector<RelationResult> relations;
};

// Substitute generator images into a word; linear over the scalar field.
// Throws MissingImage when a letter has no image.
template <class A>
A eval_word(const Word& w, const std::map<std::string, A>& images, const A& one) {
    A acc = one.scaled(RatFunc(0));
    for (const auto& t : w.terms()) {
        A prod = one.scaled(t.coeff);
        for (const auto& g : t.letters) {
            auto it = images.find(g);
            if (it == images.end()) throw MissingImage(g);
            prod = prod * it->second;
        }
        acc = acc + prod;
    }
    return acc;
}

// The certificate behind every claimed map: pass iff all defining relations
// evaluate to zero in the target; nonzero residuals are retained.
template <class A>
HomCertificate certify_hom(const Presentation& p, const std::map<std::string, A>& images,
                           const A& one) {
    HomCertificate cert{true, {}};
    for (const auto& [name, rel] : p.relations) {
        A value = eval_word(rel, images, one);
        bool ok = value.is_zero();
        cert.relations.push_back({name, ok, ok ? std::string{} : value.str()});
        if (!ok) cert.pass = false;
    }
    return cert;
}

// Equivariance on generators: for every group generator (index g) and every
// algebra generator x, the claimed map must satisfy
//   phi(source_action[g](x)) == target_action[g](phi(x)).
// It extends to the whole algebra by the homomorphism property.
template <class A>
HomCertificate certify_equivariance(
    const std::vector<std::string>& generators, const std::map<std::string, A>& images,
    const std::vector<std::map<std::string, Word>>& source_actions,
    const std::vector<std::function<A(const A&)>>& target_actions, const A& one) {
    if (source_actions.size() != target_actions.size())
        throw UndefinedAction("source/target group generator counts differ");
    HomCertificate cert{true, {}};
    for (size_t g = 0; g < source_actions.size(); ++g) {
        for (const auto& x : generators) {
            auto it = source_actions[g].find(x);
            if (it == source_actions[g].end())
                throw UndefinedAction("no source action for generator " + x);
            auto im = images.find(x);
            if (im == images.end()) throw MissingImage(x);
            A lhs = eval_word(it->second, images, one);
            A rhs = target_actions[g](im->second);
            A diff = lhs - rhs;
            bool ok = diff.is_zero();
            cert.relations.push_back({"equivariance[g" + std::to_string(g) + "](" + x + ")",
                                      ok, ok ? std::string{} : diff.str()});
            if (!ok) cert.pass = false;
        }
    }
    return cert;
}

} // namespace qg
