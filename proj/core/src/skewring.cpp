#include "qgalois/skewring.hpp"

#include <cstdlib>
#include <sstream>

#include "qgalois/errors.hpp"

namespace qg {

MonoidAction::MonoidAction(int rank, Ambient ambient, std::vector<Subst> generator_maps,
                           std::vector<Subst> inverse_maps)
    : rank_(rank), ambient_(ambient), maps_(std::move(generator_maps)),
      inverses_(std::move(inverse_maps)) {
    if (static_cast<int>(maps_.size()) != rank_)
        throw std::invalid_argument("MonoidAction: one generator map per basis vector");
    if (ambient_ == Ambient::Zn) {
        if (static_cast<int>(inverses_.size()) != rank_)
            throw std::invalid_argument("MonoidAction: Zn actions need inverse maps");
        // each stored inverse must actually invert its generator map
        for (int i = 0; i < rank_; ++i) {
            for (const auto& [v, img] : maps_[i]) {
                if (substitute(img, inverses_[i]) != RatFunc::variable(v))
                    throw std::invalid_argument("MonoidAction: inverse map mismatch for " + v);
            }
        }
    }
    check_commuting();
}

void MonoidAction::check_commuting() const {
    std::set<std::string> vars;
    for (const auto& s : maps_)
        for (const auto& [v, img] : s) vars.insert(v);
    for (int i = 0; i < rank_; ++i) {
        for (int j = i + 1; j < rank_; ++j) {
            for (const auto& v : vars) {
                RatFunc x = RatFunc::variable(v);
                if (substitute(substitute(x, maps_[j]), maps_[i]) !=
                    substitute(substitute(x, maps_[i]), maps_[j]))
                    throw std::invalid_argument("MonoidAction: generator maps do not commute");
            }
        }
    }
}

RatFunc MonoidAction::apply(const IntVec& m, const RatFunc& f) const {
    RatFunc out = f;
    for (int i = 0; i < rank_; ++i) {
        long e = m[i];
        if (e == 0) continue;
        if (e < 0 && ambient_ == Ambient::Nn)
            throw std::invalid_argument("MonoidAction: negative exponent in Nn");
        const Subst& s = e > 0 ? maps_[i] : inverses_[i];
        for (long k = 0; k < std::abs(e); ++k) out = substitute(out, s);
    }
    return out;
}

RatFunc MonoidAction::apply_var(const IntVec& m, const std::string& var) const {
    return apply(m, RatFunc::variable(var));
}

bool MonoidAction::operator==(const MonoidAction& o) const {
    return rank_ == o.rank_ && ambient_ == o.ambient_ && maps_ == o.maps_ &&
           inverses_ == o.inverses_;
}

ActionPtr qscale_action(int n, Ambient ambient, const RatFunc& q,
                        const std::string& var_prefix) {
    std::vector<Subst> maps(n), invs;
    for (int i = 0; i < n; ++i) {
        std::string v = var_prefix + std::to_string(i + 1);
        maps[i][v] = q * RatFunc::variable(v);
    }
    if (ambient == Ambient::Zn) {
        invs.resize(n);
        for (int i = 0; i < n; ++i) {
            std::string v = var_prefix + std::to_string(i + 1);
            invs[i][v] = RatFunc::variable(v) / q;
        }
    }
    return std::make_shared<MonoidAction>(n, ambient, std::move(maps), std::move(invs));
}

ActionPtr qweyl_shift_action(int n, const RatFunc& q) {
    std::vector<Subst> maps(n), invs(n);
    for (int i = 0; i < n; ++i) {
        std::string v = "h" + std::to_string(i + 1);
        RatFunc h = RatFunc::variable(v);
        maps[i][v] = (h - RatFunc(1)) / q; // q^{-1}(h - 1)
        invs[i][v] = q * h + RatFunc(1);
    }
    return std::make_shared<MonoidAction>(n, Ambient::Zn, std::move(maps), std::move(invs));
}

SkewElement SkewElement::scalar(const ActionPtr& a, const RatFunc& c) {
    SkewElement e(a);
    e.insert_term(IntVec(a->rank(), 0), c);
    return e;
}

SkewElement SkewElement::term(const ActionPtr& a, IntVec m, RatFunc coeff) {
    SkewElement e(a);
    e.insert_term(m, coeff);
    return e;
}

SkewElement SkewElement::eps(const ActionPtr& a, int i, long exp) {
    IntVec m(a->rank(), 0);
    m[i - 1] = exp;
    return term(a, std::move(m), RatFunc(1));
}

void SkewElement::insert_term(const IntVec& m, const RatFunc& c) {
    if (c.is_zero()) return;
    if (action_->ambient() == Ambient::Nn) {
        for (long v : m)
            if (v < 0) throw std::invalid_argument("SkewElement: negative exponent in Nn");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewElement SkewElement::operator-() const {
    SkewElement out(action_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

SkewElement SkewElement::operator+(const SkewElement& o) const {
    if (!(*action_ == *o.action_)) throw ActionMismatch();
    SkewElement out = *this;
    for (const auto& [m, c] : o.terms_) out.insert_term(m, c);
    return out;
}

SkewElement SkewElement::operator-(const SkewElement& o) const { return *this + (-o); }

SkewElement SkewElement::operator*(const SkewElement& o) const {
    if (!(*action_ == *o.action_)) throw ActionMismatch();
    SkewElement out(action_);
    for (const auto& [m, f] : terms_) {
        for (const auto& [mp, g] : o.terms_) {
            IntVec sum(m.size());
            for (size_t i = 0; i < m.size(); ++i) sum[i] = m[i] + mp[i];
            out.insert_term(sum, f * action_->apply(m, g));
        }
    }
    return out;
}

SkewElement SkewElement::scaled(const RatFunc& c) const {
    SkewElement out(action_);
    if (c.is_zero()) return out;
    for (const auto& [m, cc] : terms_) out.terms_.emplace(m, c * cc);
    return out;
}

SkewElement SkewElement::pow(long e) const {
    if (e < 0) throw std::invalid_argument("SkewElement::pow: negative exponent");
    SkewElement acc = one(action_);
    SkewElement b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

bool SkewElement::operator==(const SkewElement& o) const {
    return *action_ == *o.action_ && terms_ == o.terms_;
}

std::set<IntVec> SkewElement::supp() const {
    std::set<IntVec> s;
    for (const auto& [m, c] : terms_) s.insert(m);
    return s;
}

std::string SkewElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            os << "*e" << (i + 1);
            if (m[i] != 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace qg
