#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qgalois/skewring.hpp"

namespace qg {

// Defining data of a generalized Weyl algebra D(a, sigma) of rank n over a
// commutative base: n commuting automorphisms sigma_i given as substitutions
// (with inverses) and n central elements a_i with sigma_i(a_j) = a_j, i != j.
class GwaData {
public:
    GwaData(std::vector<std::string> base_vars, std::vector<Subst> sigma,
            std::vector<Subst> sigma_inv, std::vector<RatFunc> a);

    int rank() const { return static_cast<int>(a_.size()); }
    const std::vector<std::string>& base_vars() const { return base_vars_; }
    const std::vector<RatFunc>& a() const { return a_; }

    // sigma_i^k(f), k may be negative
    RatFunc sigma_pow(int i, long k, const RatFunc& f) const;

    // the associated Z^n action on Frac(D) for the skew-group-ring embedding
    ActionPtr skew_action() const { return skew_action_; }

    bool operator==(const GwaData& o) const {
        return base_vars_ == o.base_vars_ && sigma_ == o.sigma_ &&
               sigma_inv_ == o.sigma_inv_ && a_ == o.a_;
    }

private:
    std::vector<std::string> base_vars_;
    std::vector<Subst> sigma_, sigma_inv_;
    std::vector<RatFunc> a_;
    ActionPtr skew_action_;
};

using GwaDataPtr = std::shared_ptr<const GwaData>;

// Normal-form element: sum of d * Z^z where z_i > 0 encodes X_i^{z_i} and
// z_i < 0 encodes Y_i^{-z_i}; the coefficient d lies in (the fraction field
// of) the base.
class GwaElement {
public:
    using TermMap = std::map<IntVec, RatFunc>;

    explicit GwaElement(GwaDataPtr data) : data_(std::move(data)) {}

    static GwaElement zero(const GwaDataPtr& d) { return GwaElement(d); }
    static GwaElement scalar(const GwaDataPtr& d, const RatFunc& c);
    static GwaElement one(const GwaDataPtr& d) { return scalar(d, RatFunc(1)); }
    static GwaElement gen_X(const GwaDataPtr& d, int i, long exp = 1);
    static GwaElement gen_Y(const GwaDataPtr& d, int i, long exp = 1);
    static GwaElement term(const GwaDataPtr& d, IntVec z, RatFunc coeff);

    const GwaDataPtr& data() const { return data_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    GwaElement operator-() const;
    GwaElement operator+(const GwaElement& o) const;
    GwaElement operator-(const GwaElement& o) const;
    GwaElement operator*(const GwaElement& o) const; // throws DataMismatch
    GwaElement& operator+=(const GwaElement& o) { return *this = *this + o; }
    GwaElement& operator-=(const GwaElement& o) { return *this = *this - o; }
    GwaElement& operator*=(const GwaElement& o) { return *this = *this * o; }
    GwaElement scaled(const RatFunc& c) const;
    GwaElement pow(long e) const; // e >= 0

    bool operator==(const GwaElement& o) const;
    bool operator!=(const GwaElement& o) const { return !(*this == o); }

    // ring homomorphism into Frac(D) * Z^n: X_i -> 1*eps_i, Y_i -> a_i*eps_i^{-1}
    SkewElement embed() const;

    std::string str() const;

private:
    void insert_term(const IntVec& z, const RatFunc& c);
    GwaDataPtr data_;
    TermMap terms_;
};

// Catalog of the realized algebras.
enum class GwaInstanceName { QuantumWeylA1, QuantumSphere, QSO3, Usl2 };

GwaInstanceName gwa_instance_from_string(const std::string& name); // throws UnknownInstance
std::string gwa_instance_to_string(GwaInstanceName name);

struct GwaInstance {
    GwaInstanceName name;
    GwaDataPtr data;
    // presented generators and their images in the GWA
    std::vector<std::string> generators;
    std::map<std::string, GwaElement> generator_images;
    // human-readable defining relation words in the presented generators
    // (each must evaluate to zero under generator_images; certified by the
    // hom checker at construction)
    std::vector<std::string> relations;
};

// Fully populated, relation-verified instance. Throws UnknownInstance.
GwaInstance gwa_instance(GwaInstanceName name);
GwaInstance gwa_instance(const std::string& name);

} // namespace qg
