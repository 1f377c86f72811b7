#include "qgalois/gwa.hpp"

#include <sstream>

#include "qgalois/errors.hpp"
#include "qgalois/word.hpp"

namespace qg {

GwaData::GwaData(std::vector<std::string> base_vars, std::vector<Subst> sigma,
                 std::vector<Subst> sigma_inv, std::vector<RatFunc> a)
    : base_vars_(std::move(base_vars)), sigma_(std::move(sigma)),
      sigma_inv_(std::move(sigma_inv)), a_(std::move(a)) {
    const int n = rank();
    if (static_cast<int>(sigma_.size()) != n || static_cast<int>(sigma_inv_.size()) != n)
        throw std::invalid_argument("GwaData: need one automorphism (and inverse) per index");
    for (const auto& ai : a_)
        if (ai.is_zero()) throw std::invalid_argument("GwaData: a_i must be nonzero");
    // sigma_i(a_j) = a_j for i != j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && substitute(a_[j], sigma_[i]) != a_[j])
                throw std::invalid_argument("GwaData: sigma_i must fix a_j for i != j");
    // commutation and invertibility are checked by the action construction
    skew_action_ = std::make_shared<MonoidAction>(n, Ambient::Zn, sigma_, sigma_inv_);
}

RatFunc GwaData::sigma_pow(int i, long k, const RatFunc& f) const {
    RatFunc out = f;
    const Subst& s = k >= 0 ? sigma_[i] : sigma_inv_[i];
    for (long t = 0; t < (k >= 0 ? k : -k); ++t) out = substitute(out, s);
    return out;
}

GwaElement GwaElement::scalar(const GwaDataPtr& d, const RatFunc& c) {
    GwaElement e(d);
    e.insert_term(IntVec(d->rank(), 0), c);
    return e;
}

GwaElement GwaElement::gen_X(const GwaDataPtr& d, int i, long exp) {
    IntVec z(d->rank(), 0);
    z[i - 1] = exp;
    return term(d, std::move(z), RatFunc(1));
}

GwaElement GwaElement::gen_Y(const GwaDataPtr& d, int i, long exp) {
    IntVec z(d->rank(), 0);
    z[i - 1] = -exp;
    return term(d, std::move(z), RatFunc(1));
}

GwaElement GwaElement::term(const GwaDataPtr& d, IntVec z, RatFunc coeff) {
    GwaElement e(d);
    e.insert_term(z, coeff);
    return e;
}

void GwaElement::insert_term(const IntVec& z, const RatFunc& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(z);
    if (it == terms_.end()) {
        terms_.emplace(z, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GwaElement GwaElement::operator-() const {
    GwaElement out(data_);
    for (const auto& [z, c] : terms_) out.terms_.emplace(z, -c);
    return out;
}

GwaElement GwaElement::operator+(const GwaElement& o) const {
    if (!(*data_ == *o.data_)) throw DataMismatch();
    GwaElement out = *this;
    for (const auto& [z, c] : o.terms_) out.insert_term(z, c);
    return out;
}

GwaElement GwaElement::operator-(const GwaElement& o) const { return *this + (-o); }

GwaElement GwaElement::operator*(const GwaElement& o) const {
    if (!(*data_ == *o.data_)) throw DataMismatch();
    const int n = data_->rank();
    GwaElement out(data_);
    for (const auto& [z, c] : terms_) {
        for (const auto& [zp, cp] : o.terms_) {
            // (c W_z)(c' W_z') = c sigma_z(c') (prod_i f_i) W_{z+z'}
            RatFunc coeff = c * data_->skew_action()->apply(z, cp);
            IntVec sum(n);
            for (int i = 0; i < n; ++i) {
                long s = z[i], t = zp[i];
                sum[i] = s + t;
                if (s > 0 && t < 0) {
                    // X^s Y^{-t}: one a-factor per cancelled pair
                    long k = std::min(s, -t);
                    for (long j = 0; j < k; ++j)
                        coeff = coeff * data_->sigma_pow(i, s - j, data_->a()[i]);
                } else if (s < 0 && t > 0) {
                    // Y^{-s} X^t
                    long k = std::min(-s, t);
                    for (long j = 0; j < k; ++j)
                        coeff = coeff * data_->sigma_pow(i, s + 1 + j, data_->a()[i]);
                }
            }
            out.insert_term(sum, coeff);
        }
    }
    return out;
}

GwaElement GwaElement::scaled(const RatFunc& c) const {
    GwaElement out(data_);
    if (c.is_zero()) return out;
    for (const auto& [z, cc] : terms_) out.terms_.emplace(z, c * cc);
    return out;
}

GwaElement GwaElement::pow(long e) const {
    if (e < 0) throw std::invalid_argument("GwaElement::pow: negative exponent");
    GwaElement acc = one(data_);
    GwaElement b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

bool GwaElement::operator==(const GwaElement& o) const {
    return *data_ == *o.data_ && terms_ == o.terms_;
}

SkewElement GwaElement::embed() const {
    ActionPtr act = data_->skew_action();
    SkewElement out = SkewElement::zero(act);
    for (const auto& [z, c] : terms_) {
        SkewElement m = SkewElement::scalar(act, c);
        for (int i = 0; i < data_->rank(); ++i) {
            if (z[i] > 0) {
                m *= SkewElement::eps(act, i + 1, z[i]);
            } else if (z[i] < 0) {
                SkewElement yi = SkewElement::term(act, [&] {
                    IntVec e(data_->rank(), 0);
                    e[i] = -1;
                    return e;
                }(), data_->a()[i]);
                m *= yi.pow(-z[i]);
            }
        }
        out += m;
    }
    return out;
}

std::string GwaElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [z, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < z.size(); ++i) {
            if (z[i] > 0) {
                os << "*X" << (i + 1);
                if (z[i] != 1) os << "^" << z[i];
            } else if (z[i] < 0) {
                os << "*Y" << (i + 1);
                if (z[i] != -1) os << "^" << -z[i];
            }
        }
    }
    return os.str();
}

GwaInstanceName gwa_instance_from_string(const std::string& name) {
    if (name == "quantum-weyl-a1") return GwaInstanceName::QuantumWeylA1;
    if (name == "quantum-sphere") return GwaInstanceName::QuantumSphere;
    if (name == "qso3") return GwaInstanceName::QSO3;
    if (name == "usl2") return GwaInstanceName::Usl2;
    throw UnknownInstance(name);
}

std::string gwa_instance_to_string(GwaInstanceName name) {
    switch (name) {
        case GwaInstanceName::QuantumWeylA1: return "quantum-weyl-a1";
        case GwaInstanceName::QuantumSphere: return "quantum-sphere";
        case GwaInstanceName::QSO3: return "qso3";
        case GwaInstanceName::Usl2: return "usl2";
    }
    throw UnknownInstance("?");
}

namespace {

GwaInstance build_quantum_weyl_a1() {
    RatFunc q = RatFunc::variable("q");
    RatFunc h = RatFunc::variable("h1");
    Subst sigma{{"h1", (h - RatFunc(1)) / q}};
    Subst sigma_inv{{"h1", q * h + RatFunc(1)}};
    auto data = std::make_shared<GwaData>(std::vector<std::string>{"h1"},
                                          std::vector<Subst>{sigma},
                                          std::vector<Subst>{sigma_inv},
                                          std::vector<RatFunc>{h});
    GwaInstance inst;
    inst.name = GwaInstanceName::QuantumWeylA1;
    inst.data = data;
    inst.generators = {"x", "y"};
    inst.generator_images = {{"x", GwaElement::gen_X(data, 1)},
                             {"y", GwaElement::gen_Y(data, 1)}};
    return inst;
}

GwaInstance build_usl2() {
    RatFunc H = RatFunc::variable("H");
    RatFunc C = RatFunc::variable("C");
    Subst sigma{{"H", H - RatFunc(1)}};
    Subst sigma_inv{{"H", H + RatFunc(1)}};
    RatFunc a = C - H * (H + RatFunc(1));
    auto data = std::make_shared<GwaData>(std::vector<std::string>{"C", "H"},
                                          std::vector<Subst>{sigma},
                                          std::vector<Subst>{sigma_inv},
                                          std::vector<RatFunc>{a});
    GwaInstance inst;
    inst.name = GwaInstanceName::Usl2;
    inst.data = data;
    inst.generators = {"e", "f", "h", "c"};
    inst.generator_images = {{"e", GwaElement::gen_X(data, 1)},
                             {"f", GwaElement::gen_Y(data, 1)},
                             {"h", GwaElement::scalar(data, H)},
                             {"c", GwaElement::scalar(data, C)}};
    return inst;
}

GwaInstance build_qso3() {
    RatFunc q = RatFunc::variable("q");
    RatFunc H = RatFunc::variable("H");
    RatFunc C = RatFunc::variable("C");
    Subst sigma{{"H", q.pow(2) * H}};
    Subst sigma_inv{{"H", H / q.pow(2)}};
    RatFunc a = C + H * H / (q * (RatFunc(1) + q.pow(2)));
    auto data = std::make_shared<GwaData>(std::vector<std::string>{"C", "H"},
                                          std::vector<Subst>{sigma},
                                          std::vector<Subst>{sigma_inv},
                                          std::vector<RatFunc>{a});
    GwaInstance inst;
    inst.name = GwaInstanceName::QSO3;
    inst.data = data;
    inst.generators = {"X", "Y", "H", "C"};
    inst.generator_images = {{"X", GwaElement::gen_X(data, 1)},
                             {"Y", GwaElement::gen_Y(data, 1)},
                             {"H", GwaElement::scalar(data, H)},
                             {"C", GwaElement::scalar(data, C)}};
    return inst;
}

GwaInstance build_quantum_sphere() {
    // lambda is the square of the formal symbol l, so lambda^{1/2} = l
    RatFunc l = RatFunc::variable("l");
    RatFunc c = RatFunc::variable("c");
    RatFunc d = RatFunc::variable("d");
    RatFunc H = RatFunc::variable("H");
    Subst sigma{{"H", l.pow(2) * H}};
    Subst sigma_inv{{"H", H / l.pow(2)}};
    RatFunc a = -(c - H) * (d + H) / l;
    auto data = std::make_shared<GwaData>(std::vector<std::string>{"H"},
                                          std::vector<Subst>{sigma},
                                          std::vector<Subst>{sigma_inv},
                                          std::vector<RatFunc>{a});
    GwaInstance inst;
    inst.name = GwaInstanceName::QuantumSphere;
    inst.data = data;
    inst.generators = {"X", "Y", "H"};
    inst.generator_images = {{"X", GwaElement::gen_X(data, 1)},
                             {"Y", GwaElement::gen_Y(data, 1)},
                             {"H", GwaElement::scalar(data, H)}};
    return inst;
}

// relation words for each instance, built programmatically
std::vector<std::pair<std::string, Word>> relation_words(const GwaInstance& inst) {
    RatFunc q = RatFunc::variable("q");
    std::vector<std::pair<std::string, Word>> rels;
    auto W = [](const std::string& s) { return Word::gen(s); };
    switch (inst.name) {
        case GwaInstanceName::QuantumWeylA1: {
            rels.emplace_back("y*x - q*x*y - 1",
                              W("y") * W("x") - (W("x") * W("y")).scaled(q) - Word::one());
            break;
        }
        case GwaInstanceName::Usl2: {
            rels.emplace_back("h*e - e*h - e", W("h") * W("e") - W("e") * W("h") - W("e"));
            rels.emplace_back("h*f - f*h + f", W("h") * W("f") - W("f") * W("h") + W("f"));
            rels.emplace_back("e*f - f*e - 2*h",
                              W("e") * W("f") - W("f") * W("e") - W("h").scaled(RatFunc(2)));
            rels.emplace_back("h*(h+1) + f*e - c",
                              W("h") * W("h") + W("h") + W("f") * W("e") - W("c"));
            rels.emplace_back("c central (e)", W("c") * W("e") - W("e") * W("c"));
            rels.emplace_back("c central (f)", W("c") * W("f") - W("f") * W("c"));
            break;
        }
        case GwaInstanceName::QSO3: {
            RatFunc inv = RatFunc(1) / (q + q.pow(3));
            rels.emplace_back("X*H - q^2*H*X",
                              W("X") * W("H") - (W("H") * W("X")).scaled(q.pow(2)));
            rels.emplace_back("Y*H - q^-2*H*Y",
                              W("Y") * W("H") - (W("H") * W("Y")).scaled(q.pow(-2)));
            rels.emplace_back("C central (X)", W("C") * W("X") - W("X") * W("C"));
            rels.emplace_back("C central (Y)", W("C") * W("Y") - W("Y") * W("C"));
            rels.emplace_back("Y*X = C + H^2/(q(1+q^2))",
                              W("Y") * W("X") - W("C") - (W("H") * W("H")).scaled(inv));
            // sigma(a) = C + q^4 H^2 / (q(1+q^2)) = C + q^3 H^2/(1+q^2)
            rels.emplace_back("X*Y = C + q^3*H^2/(1+q^2)",
                              W("X") * W("Y") - W("C") -
                                  (W("H") * W("H")).scaled(q.pow(3) / (RatFunc(1) + q.pow(2))));
            break;
        }
        case GwaInstanceName::QuantumSphere: {
            RatFunc l = RatFunc::variable("l");
            RatFunc c = RatFunc::variable("c");
            RatFunc d = RatFunc::variable("d");
            rels.emplace_back("X*H - l^2*H*X",
                              W("X") * W("H") - (W("H") * W("X")).scaled(l.pow(2)));
            rels.emplace_back("Y*H - l^-2*H*Y",
                              W("Y") * W("H") - (W("H") * W("Y")).scaled(l.pow(-2)));
            // YX = a = -(1/l)(c - H)(d + H) = -(1/l)(cd + (c-d)H - H^2)
            Word a_word = Word::scalar(-c * d / l) - W("H").scaled((c - d) / l) +
                          (W("H") * W("H")).scaled(RatFunc(1) / l);
            rels.emplace_back("l*Y*X + (c-H)(d+H)", (W("Y") * W("X") - a_word).scaled(l));
            // XY = sigma(a) = -(1/l)(c - l^2 H)(d + l^2 H)
            Word sa_word = Word::scalar(-c * d / l) - W("H").scaled((c - d) * l) +
                           (W("H") * W("H")).scaled(l.pow(3));
            rels.emplace_back("l*X*Y + (c-l^2H)(d+l^2H)", (W("X") * W("Y") - sa_word).scaled(l));
            break;
        }
    }
    return rels;
}

void certify_instance(GwaInstance& inst) {
    Presentation p;
    p.generators = inst.generators;
    p.relations = relation_words(inst);
    inst.relations.clear();
    for (const auto& [name, w] : p.relations) inst.relations.push_back(name);
    HomCertificate cert = certify_hom(p, inst.generator_images, GwaElement::one(inst.data));
    if (!cert.pass) {
        std::string what = "GWA instance failed relation certification:";
        for (const auto& r : cert.relations)
            if (!r.pass) what += " [" + r.relation + " -> " + r.residual + "]";
        throw std::logic_error(what);
    }
}

} // namespace

GwaInstance gwa_instance(GwaInstanceName name) {
    GwaInstance inst;
    switch (name) {
        case GwaInstanceName::QuantumWeylA1: inst = build_quantum_weyl_a1(); break;
        case GwaInstanceName::QuantumSphere: inst = build_quantum_sphere(); break;
        case GwaInstanceName::QSO3: inst = build_qso3(); break;
        case GwaInstanceName::Usl2: inst = build_usl2(); break;
    }
    certify_instance(inst);
    return inst;
}

GwaInstance gwa_instance(const std::string& name) {
    return gwa_instance(gwa_instance_from_string(name));
}

} // namespace qg
