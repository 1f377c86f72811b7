#include "qgalois/word.hpp"

#include <algorithm>
#include <sstream>

namespace qg {

Word Word::gen(const std::string& name) {
    Word w;
    w.terms_.push_back({RatFunc(1), {name}});
    return w;
}

Word Word::scalar(const RatFunc& c) {
    Word w;
    if (!c.is_zero()) w.terms_.push_back({c, {}});
    return w;
}

void Word::canonicalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() > b.letters.size();
        return a.letters < b.letters;
    });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().letters == t.letters) {
            merged.back().coeff += t.coeff;
        } else {
            merged.push_back(std::move(t));
        }
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

Word Word::operator-() const {
    Word out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

Word Word::operator+(const Word& o) const {
    Word out = *this;
    out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
    out.canonicalize();
    return out;
}

Word Word::operator-(const Word& o) const { return *this + (-o); }

Word Word::operator*(const Word& o) const {
    Word out;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            Term t{a.coeff * b.coeff, a.letters};
            t.letters.insert(t.letters.end(), b.letters.begin(), b.letters.end());
            out.terms_.push_back(std::move(t));
        }
    }
    out.canonicalize();
    return out;
}

Word Word::scaled(const RatFunc& c) const {
    Word out;
    if (c.is_zero()) return out;
    out.terms_ = terms_;
    for (auto& t : out.terms_) t.coeff = t.coeff * c;
    return out;
}

Word Word::pow(long e) const {
    if (e < 0) throw std::invalid_argument("Word::pow: negative exponent");
    Word acc = one();
    Word b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

std::string Word::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")";
        for (const auto& g : t.letters) os << "*" << g;
    }
    return os.str();
}

} // namespace qg
