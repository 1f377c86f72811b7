#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "qgalois/actions.hpp"
#include "qgalois/claims.hpp"
#include "qgalois/gwa.hpp"
#include "qgalois/lattice.hpp"
#include "qgalois/parser.hpp"
#include "qgalois/qalgebra.hpp"
#include "qgalois/reflgroup.hpp"
#include "qgalois/skewring.hpp"
#include "qgalois/word.hpp"

using namespace qg;

namespace {

void report(int criterion, const std::string& what, bool pass) {
    std::cout << "criterion " << criterion << " [" << (pass ? "PASS" : "FAIL") << "] "
              << what << "\n";
    CHECK(pass);
}

// single-step rewriter on formal words in {x, y}: each application replaces
// the leftmost "yx" by q*"xy" + "" until no "yx" remains
using RWord = std::map<std::string, RatFunc>;

RWord rw_normalize(RWord w) {
    RatFunc q = RatFunc::variable("q");
    while (true) {
        bool changed = false;
        for (auto it = w.begin(); it != w.end(); ++it) {
            size_t pos = it->first.find("yx");
            if (pos == std::string::npos || it->second.is_zero()) continue;
            std::string s = it->first;
            RatFunc c = it->second;
            w.erase(it);
            std::string swapped = s;
            swapped[pos] = 'x';
            swapped[pos + 1] = 'y';
            std::string dropped = s.substr(0, pos) + s.substr(pos + 2);
            w[swapped] += c * q;
            w[dropped] += c;
            changed = true;
            break;
        }
        if (!changed) break;
    }
    for (auto it = w.begin(); it != w.end();)
        it = it->second.is_zero() ? w.erase(it) : std::next(it);
    return w;
}

GwaElement translate_to_gwa(const QAlgebraElement& u, const GwaDataPtr& d) {
    GwaElement out = GwaElement::zero(d);
    for (const auto& [e, c] : u.terms())
        out += (GwaElement::gen_X(d, 1).pow(e.a[0]) * GwaElement::gen_Y(d, 1).pow(e.b[0]))
                   .scaled(c);
    return out;
}

std::vector<std::vector<long>> exponent_rows(int slots, long degree) {
    std::vector<std::vector<long>> rows;
    std::vector<long> cur;
    std::function<void(int, long)> rec = [&](int s, long d) {
        if (s == 1) {
            cur.push_back(d);
            rows.push_back(cur);
            cur.pop_back();
            return;
        }
        for (long v = 0; v <= d; ++v) {
            cur.push_back(v);
            rec(s - 1, d - v);
            cur.pop_back();
        }
    };
    rec(slots, degree);
    return rows;
}

// brute-force fixed-space dimension: one per monomial orbit whose averaged
// root-of-unity weight does not vanish
long orbit_oracle_dimension(const std::vector<ReflGroupElement>& group,
                            const QAlgebraKind& kind, long degree) {
    long dim = 0;
    std::set<std::vector<long>> seen;
    for (const auto& row : exponent_rows(2 * kind.rank, degree)) {
        if (seen.count(row)) continue;
        // the orbit of this exponent row under the permutation parts
        std::set<std::vector<long>> orbit;
        for (const auto& h : group) {
            std::vector<long> img(row.size());
            for (int i = 0; i < kind.rank; ++i) {
                img[h.perm[i]] = row[i];
                img[kind.rank + h.perm[i]] = row[kind.rank + i];
            }
            orbit.insert(img);
        }
        seen.insert(orbit.begin(), orbit.end());
        // sum of scalar weights over the stabilizer of the exponents
        Cyclotomic total(0L);
        for (const auto& h : group) {
            bool fixes = true;
            for (int i = 0; i < kind.rank && fixes; ++i)
                fixes = row[h.perm[i]] == row[i] &&
                        row[kind.rank + h.perm[i]] == row[kind.rank + i];
            if (!fixes) continue;
            long w = 0;
            for (int i = 0; i < kind.rank; ++i) w += h.diag[i] * row[i];
            total += Cyclotomic::root_power(h.m, ((w % h.m) + h.m) % h.m);
        }
        if (!total.is_zero()) ++dim;
    }
    return dim;
}

std::string run_cli(const std::string& args, int& exit_code) {
    const char* cli = std::getenv("QGALOIS_CLI");
    REQUIRE(cli != nullptr);
    std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    exit_code = WEXITSTATUS(pclose(pipe));
    return out;
}

} // namespace

TEST_CASE("quantum Weyl rewrite identity for 1 <= a <= 20") {
    bool pass = true;
    RatFunc q = RatFunc::variable("q");
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::Weyl, 1);
    for (long a = 1; a <= 20; ++a) {
        auto [engine, closed] = qa_weyl_power_identity(a);
        pass = pass && engine == closed;
        // independent oracle: iterated single-step rewriting of y x^a
        RWord w{{std::string("y") + std::string(a, 'x'), RatFunc(1)}};
        RWord nf = rw_normalize(w);
        QAlgebraElement oracle = QAlgebraElement::zero(k);
        for (const auto& [s, c] : nf) {
            long nx = static_cast<long>(std::count(s.begin(), s.end(), 'x'));
            long ny = static_cast<long>(s.size()) - nx;
            pass = pass && s == std::string(nx, 'x') + std::string(ny, 'y');
            oracle += QAlgebraElement::monomial(k, {nx}, {ny}, c);
        }
        pass = pass && oracle == engine;
        // and the closed form really is q^a x^a y + [a]_q x^{a-1}
        auto rhs = QAlgebraElement::monomial(k, {a}, {1}, q.pow(a)) +
                   QAlgebraElement::monomial(k, {a - 1}, {0}, q_int(a, q));
        pass = pass && closed == rhs;
    }
    report(1, "y*x^a = q^a*x^a*y + [a]_q*x^(a-1), engine vs single-step rewriting", pass);
}

TEST_CASE("claim manifest certificates") {
    auto outcomes = run_all_claims();
    bool pass = outcomes.size() >= 30;
    int negatives = 0;
    bool literal_control = false;
    for (const auto& o : outcomes) {
        pass = pass && o.ok;
        if (!o.expect_pass) {
            ++negatives;
            pass = pass && !o.certificate_pass;
            if (o.id == "weyl-embed-inverse-weight-negative") literal_control = true;
        }
    }
    pass = pass && negatives >= 3 && literal_control;
    report(2, "all " + std::to_string(outcomes.size()) +
                  " manifest claims behave as expected, with >= 3 negative controls",
           pass);
}

TEST_CASE("support criterion for the symmetric-invariant Weyl algebra") {
    bool pass = true;
    for (int n : {2, 3}) {
        ActionPtr a = qweyl_shift_action(n);
        SkewElement u = SkewElement::zero(a), v = SkewElement::zero(a);
        for (int i = 1; i <= n; ++i) {
            IntVec e(n, 0);
            e[i - 1] = -1;
            u += SkewElement::eps(a, i);
            v += SkewElement::term(a, e, RatFunc::variable("h" + std::to_string(i)));
        }
        std::set<IntVec> expect_u, expect_v;
        for (int i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            expect_u.insert(e);
            e[i] = -1;
            expect_v.insert(e);
        }
        pass = pass && u.supp() == expect_u && v.supp() == expect_v;
        std::vector<IntVec> joint(expect_u.begin(), expect_u.end());
        joint.insert(joint.end(), expect_v.begin(), expect_v.end());
        auto gen = generates_group(joint, n);
        pass = pass && gen.generates && gen.certificate.full_rank_identity;
    }
    report(3, "images of sum(x_i), sum(y_i) have supports {e_i}, {-e_i} generating Z^n",
           pass);
}

TEST_CASE("invariant-ring oracle for the cyclic diagonal actions") {
    bool pass = true;
    for (int n : {1, 2}) {
        for (int m : {2, 3}) {
            auto group = close_group(diagonal_generators(m, n));
            QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, n);
            for (long d = 0; d <= 8; ++d) {
                auto basis = invariant_basis(group, k, d);
                // closed-form count: exponent rows with every x-exponent
                // divisible by m; these are exactly the images of the
                // degree-d part of O_{q^m} under x_i -> x_i^m
                long count = 0;
                std::set<std::vector<long>> divisible;
                for (const auto& row : exponent_rows(2 * n, d)) {
                    bool ok = true;
                    for (int i = 0; i < n; ++i) ok = ok && row[i] % m == 0;
                    if (ok) {
                        ++count;
                        divisible.insert(row);
                    }
                }
                pass = pass && static_cast<long>(basis.size()) == count;
                for (const auto& v : basis) {
                    pass = pass && v.terms().size() == 1;
                    const QExp& e = v.terms().begin()->first;
                    std::vector<long> key = e.a;
                    key.insert(key.end(), e.b.begin(), e.b.end());
                    pass = pass && divisible.count(key) == 1;
                }
            }
        }
    }
    report(4, "cyclic-action invariants match the x_i -> x_i^m image, degrees <= 8",
           pass);
}

TEST_CASE("reflection group equivariance and orders") {
    bool pass = run_claim("affine-skew-equivariant-g2-1-2").ok &&
                run_claim("affine-skew-equivariant-g3-3-2").ok;
    pass = pass && close_group(gmpn_generators(2, 1, 2)).size() == 8 &&
           close_group(gmpn_generators(3, 3, 2)).size() == 6 &&
           gmpn_order(2, 1, 2) == 8 && gmpn_order(3, 3, 2) == 6;
    report(5, "skew-ring isomorphism commutes with G(2,1,2) and G(3,3,2); orders 8, 6",
           pass);
}

TEST_CASE("generalized Weyl algebra instance identities") {
    bool pass = true;
    for (const char* name : {"quantum-weyl-a1", "quantum-sphere", "qso3", "usl2"}) {
        GwaInstance inst = gwa_instance(name);
        const GwaDataPtr& d = inst.data;
        for (int i = 1; i <= d->rank(); ++i) {
            auto X = GwaElement::gen_X(d, i), Y = GwaElement::gen_Y(d, i);
            RatFunc ai = d->a()[i - 1];
            pass = pass && Y * X == GwaElement::scalar(d, ai) &&
                   X * Y == GwaElement::scalar(d, d->sigma_pow(i - 1, 1, ai));
        }
    }
    {
        GwaInstance inst = gwa_instance("usl2");
        auto X = inst.generator_images.at("e");
        auto Y = inst.generator_images.at("f");
        auto H = inst.generator_images.at("h");
        auto C = inst.generator_images.at("c");
        pass = pass && X * Y - Y * X == H.scaled(RatFunc(2)) && H * X - X * H == X &&
               H * Y - Y * H == -Y;
        for (int m : {2, 3, 4}) {
            auto g = ReflGroupElement::diagonal(m, {1});
            pass = pass && diagonal_act(g, C) == C;
            pass = pass &&
                   diagonal_act(g, X * Y - Y * X) ==
                       diagonal_act(g, X) * diagonal_act(g, Y) -
                           diagonal_act(g, Y) * diagonal_act(g, X) &&
                   diagonal_act(g, H * X - X * H) == diagonal_act(g, X);
        }
    }
    {
        GwaInstance inst = gwa_instance("quantum-sphere");
        auto X = inst.generator_images.at("X");
        auto H = inst.generator_images.at("H");
        RatFunc lambda = RatFunc::variable("l").pow(2);
        pass = pass && X * H == (H * X).scaled(lambda);
    }
    report(6, "YX = a, XY = sigma(a); sl2 brackets; sphere weight; cyclic actions",
           pass);
}

TEST_CASE("dual-engine consistency on the first quantum Weyl algebra") {
    std::mt19937 rng(71);
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::Weyl, 1);
    GwaInstance inst = gwa_instance("quantum-weyl-a1");
    auto rand_elt = [&] {
        std::uniform_int_distribution<long> de(0, 2);
        std::uniform_int_distribution<int> dc(-3, 3);
        QAlgebraElement out = QAlgebraElement::zero(k);
        for (int t = 0; t < 2; ++t) {
            int c = dc(rng);
            if (c == 0) c = 1;
            out += QAlgebraElement::monomial(k, {de(rng)}, {de(rng)}, RatFunc(c));
        }
        return out; // total degree <= 4
    };
    bool pass = true;
    for (int r = 0; r < 200; ++r) {
        auto u = rand_elt();
        auto v = rand_elt();
        pass = pass && translate_to_gwa(u * v, inst.data) ==
                           translate_to_gwa(u, inst.data) * translate_to_gwa(v, inst.data);
    }
    report(7, "PBW engine and GWA engine agree on 200 random products under x->X, y->Y",
           pass);
}

TEST_CASE("associativity suites") {
    std::mt19937 rng(73);
    std::uniform_int_distribution<long> de(0, 2);
    std::uniform_int_distribution<int> dc(-3, 3);
    bool pass = true;
    int qa = 0, sk = 0, gw = 0;

    QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, 2);
    auto rand_qa = [&] {
        QAlgebraElement out = QAlgebraElement::zero(k);
        for (int t = 0; t < 2; ++t) {
            int c = dc(rng);
            if (c == 0) c = 1;
            out += QAlgebraElement::monomial(k, {de(rng), de(rng)}, {de(rng), de(rng)},
                                             RatFunc(c));
        }
        return out;
    };
    for (int r = 0; r < 500; ++r, ++qa) {
        auto u = rand_qa(), v = rand_qa(), w = rand_qa();
        pass = pass && (u * v) * w == u * (v * w);
    }

    ActionPtr a = qscale_action(2, Ambient::Zn);
    auto rand_sk = [&] {
        SkewElement out = SkewElement::zero(a);
        for (int t = 0; t < 2; ++t) {
            int c = dc(rng);
            if (c == 0) c = 1;
            out += SkewElement::term(a, {de(rng) - 1, de(rng) - 1},
                                     RatFunc(c) * RatFunc::variable("x1").pow(de(rng)));
        }
        return out;
    };
    for (int r = 0; r < 500; ++r, ++sk) {
        auto u = rand_sk(), v = rand_sk(), w = rand_sk();
        pass = pass && (u * v) * w == u * (v * w);
    }

    GwaInstance inst = gwa_instance("quantum-weyl-a1");
    auto rand_gw = [&] {
        GwaElement out = GwaElement::zero(inst.data);
        for (int t = 0; t < 2; ++t) {
            int c = dc(rng);
            if (c == 0) c = 1;
            out += GwaElement::term(inst.data, {de(rng) - 1},
                                    RatFunc(c) * RatFunc::variable("h1").pow(de(rng)));
        }
        return out;
    };
    for (int r = 0; r < 500; ++r, ++gw) {
        auto u = rand_gw(), v = rand_gw(), w = rand_gw();
        pass = pass && (u * v) * w == u * (v * w);
    }
    pass = pass && qa >= 500 && sk >= 500 && gw >= 500;
    report(8, "500 exact associativity triples in each of the three engines", pass);
}

TEST_CASE("Reynolds operator against the orbit oracle") {
    std::mt19937 rng(79);
    bool pass = true;
    struct GroupCase {
        std::vector<ReflGroupElement> group;
        int n;
    };
    std::vector<GroupCase> cases;
    for (int m : {2, 3})
        for (int n : {1, 2})
            cases.push_back({close_group(diagonal_generators(m, n)), n});
    cases.push_back({close_group(gmpn_generators(2, 1, 2)), 2});
    cases.push_back({close_group(gmpn_generators(3, 3, 2)), 2});
    for (const auto& [group, n] : cases) {
        QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, n);
        std::uniform_int_distribution<long> de(0, 2);
        std::uniform_int_distribution<int> dc(-3, 3);
        for (int r = 0; r < 10; ++r) {
            QAlgebraElement u = QAlgebraElement::zero(k);
            for (int t = 0; t < 3; ++t) {
                int c = dc(rng);
                if (c == 0) c = 1;
                std::vector<long> ea(n), eb(n);
                for (int i = 0; i < n; ++i) {
                    ea[i] = de(rng);
                    eb[i] = de(rng);
                }
                u += QAlgebraElement::monomial(k, ea, eb, RatFunc(c));
            }
            auto ru = reynolds(group, u);
            pass = pass && reynolds(group, ru) == ru;
            for (const auto& h : group) pass = pass && act(h, ru) == ru;
        }
        for (long d = 0; d <= 5; ++d)
            pass = pass && static_cast<long>(invariant_basis(group, k, d).size()) ==
                               orbit_oracle_dimension(group, k, d);
    }
    report(9, "idempotence, invariance, and dimensions vs monomial-orbit enumeration",
           pass);
}

TEST_CASE("CLI determinism and parser round-trip") {
    int c1 = -1, c2 = -1;
    std::string r1 = run_cli("--json verify all", c1);
    std::string r2 = run_cli("--json verify all", c2);
    bool pass = c1 == 0 && c2 == 0 && !r1.empty() && r1 == r2;

    std::mt19937 rng(83);
    std::uniform_int_distribution<int> dl(0, 3), dc(-4, 4), dq(0, 2), dt(1, 3);
    RatFunc q = RatFunc::variable("q");
    for (int r = 0; r < 100; ++r) {
        Word w;
        for (int t = 0; t < dt(rng); ++t) {
            int c = dc(rng);
            if (c == 0) c = 1;
            Word term = Word::scalar(RatFunc(c) * q.pow(dq(rng)));
            for (int i = 0; i < dl(rng); ++i) term *= Word::gen(rng() % 2 ? "x" : "y");
            w += term;
        }
        pass = pass && parse_element(w.str()) == w;
    }
    report(10, "verify all emits byte-identical JSON twice; parse o print = id on 100 "
               "random elements",
           pass);
}
