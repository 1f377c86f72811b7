#include "qgalois/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qg {

long mono_degree(const Monomial& m) {
    long d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool mono_graded_lex_less(const Monomial& a, const Monomial& b) {
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    // lexicographic: compare exponents variable by variable, names ascending;
    // the monomial with the larger exponent at the first difference is larger
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->first != ib->first) {
            // earlier name with positive exponent wins
            return ia->first > ib->first; // a lacks the earlier variable -> a smaller
        }
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    if (ia == a.end() && ib == b.end()) return false;
    return ia == a.end();
}

MultiPoly::MultiPoly(const Cyclotomic& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name, long exp) {
    MultiPoly p;
    if (exp == 0) return MultiPoly(Cyclotomic(1L));
    if (exp < 0) throw std::invalid_argument("MultiPoly::variable: negative exponent");
    p.terms_.emplace(Monomial{{name, exp}}, Cyclotomic(1L));
    return p;
}

MultiPoly MultiPoly::term(Monomial m, Cyclotomic c) {
    MultiPoly p;
    if (!c.is_zero()) {
        std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
        p.terms_.emplace(std::move(m), std::move(c));
    }
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Cyclotomic MultiPoly::constant_value() const {
    if (terms_.empty()) return Cyclotomic(0L);
    if (!is_constant()) throw std::logic_error("MultiPoly::constant_value on non-constant");
    return terms_.begin()->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return mono_degree(terms_.begin()->first);
}

long MultiPoly::degree_in(const std::string& var) const {
    long d = 0;
    for (const auto& [m, c] : terms_) {
        auto it = m.find(var);
        if (it != m.end()) d = std::max(d, it->second);
    }
    return d;
}

std::set<std::string> MultiPoly::variables() const {
    std::set<std::string> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vs.insert(v);
    return vs;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
    return terms_.begin()->first;
}

const Cyclotomic& MultiPoly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading_coeff of zero");
    return terms_.begin()->second;
}

void MultiPoly::insert_term(const Monomial& m, const Cyclotomic& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.insert_term(m, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.insert_term(m, -c);
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb) m[v] += e;
            out.insert_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
    MultiPoly acc(Cyclotomic(1L));
    MultiPoly b = *this;
    while (e) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

MultiPoly MultiPoly::scaled(const Cyclotomic& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, cc] : terms_) out.terms_.emplace(m, cc * c);
    return out;
}

bool MultiPoly::operator<(const MultiPoly& o) const {
    auto ia = terms_.begin(), ib = o.terms_.begin();
    for (; ia != terms_.end() && ib != o.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return mono_graded_lex_less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == terms_.end() && ib != o.terms_.end();
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
        if (first) {
            first = false;
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            if (neg) { os << " - "; cs = cs.substr(1); }
            else os << " + ";
        }
        bool needs_paren = !c.is_rational();
        bool coeff_is_one = !needs_paren && cs == "1";
        if (m.empty()) {
            if (needs_paren) os << "(" << cs << ")";
            else os << cs;
            continue;
        }
        if (needs_paren) os << "(" << cs << ")*";
        else if (!coeff_is_one) os << cs << "*";
        bool fv = true;
        for (const auto& [v, e] : m) {
            if (!fv) os << "*";
            fv = false;
            os << v;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// univariate view in `var`: coefficients by exponent, constant term first
std::vector<MultiPoly> coeffs_in(const MultiPoly& f, const std::string& var) {
    std::vector<MultiPoly> out(f.degree_in(var) + 1);
    for (const auto& [m, c] : f.terms()) {
        long e = 0;
        Monomial rest = m;
        auto it = rest.find(var);
        if (it != rest.end()) {
            e = it->second;
            rest.erase(it);
        }
        out[e] += MultiPoly::term(rest, c);
    }
    return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, const std::string& var) {
    MultiPoly out;
    for (size_t e = 0; e < cs.size(); ++e)
        out += cs[e] * MultiPoly::variable(var, static_cast<long>(e));
    return out;
}

long deg_of(const std::vector<MultiPoly>& cs) {
    for (size_t i = cs.size(); i-- > 0;)
        if (!cs[i].is_zero()) return static_cast<long>(i);
    return -1;
}

} // namespace

MultiPoly MultiPoly::div_exact(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw std::logic_error("div_exact by zero");
    MultiPoly rem = f, quot;
    while (!rem.is_zero()) {
        const Monomial& lmf = rem.leading_monomial();
        const Monomial& lmg = g.leading_monomial();
        Monomial q = lmf;
        for (const auto& [v, e] : lmg) {
            auto it = q.find(v);
            if (it == q.end() || it->second < e)
                throw std::logic_error("div_exact: not divisible");
            it->second -= e;
            if (it->second == 0) q.erase(it);
        }
        MultiPoly t = term(q, rem.leading_coeff() / g.leading_coeff());
        quot += t;
        rem -= t * g;
    }
    return quot;
}

MultiPoly MultiPoly::gcd(const MultiPoly& f, const MultiPoly& g) {
    auto monic = [](const MultiPoly& p) {
        if (p.is_zero()) return p;
        return p.scaled(p.leading_coeff().inverse());
    };
    if (f.is_zero()) return monic(g);
    if (g.is_zero()) return monic(f);
    if (f.is_constant() || g.is_constant()) return MultiPoly(Cyclotomic(1L));

    auto vf = f.variables();
    auto vg = g.variables();
    std::set<std::string> vars;
    vars.insert(vf.begin(), vf.end());
    vars.insert(vg.begin(), vg.end());
    const std::string var = *vars.begin();

    std::vector<MultiPoly> A = coeffs_in(f, var);
    std::vector<MultiPoly> B = coeffs_in(g, var);

    auto content = [](const std::vector<MultiPoly>& cs) {
        MultiPoly c;
        for (const auto& p : cs) c = gcd(c, p);
        return c;
    };
    auto divide_out = [](std::vector<MultiPoly>& cs, const MultiPoly& c) {
        for (auto& p : cs)
            if (!p.is_zero()) p = div_exact(p, c);
    };

    MultiPoly cf = content(A), cg = content(B);
    divide_out(A, cf);
    divide_out(B, cg);
    MultiPoly c = gcd(cf, cg);

    // primitive PRS in `var` with pseudo-division
    while (true) {
        long da = deg_of(A), db = deg_of(B);
        if (db < 0) break;
        if (da < db) {
            std::swap(A, B);
            std::swap(da, db);
        }
        // pseudo-remainder of A by B: R = lb*R - lr*x^{dr-db}*B until deg drops
        const MultiPoly lb = B[db];
        std::vector<MultiPoly> R = A;
        long dr = da;
        while (dr >= db) {
            MultiPoly lr = R[dr];
            for (auto& p : R) p = p * lb;
            for (long i = 0; i <= db; ++i) R[dr - db + i] -= lr * B[i];
            dr = deg_of(R);
        }
        if (dr < 0) {
            A = B;
            B.assign(1, MultiPoly());
            break;
        }
        R.resize(dr + 1);
        MultiPoly cr = content(R);
        divide_out(R, cr);
        A = B;
        B = R;
    }
    long da = deg_of(A);
    std::vector<MultiPoly> res(A.begin(), A.begin() + da + 1);
    MultiPoly out = c * from_coeffs(res, var);
    return monic(out);
}

} // namespace qg
