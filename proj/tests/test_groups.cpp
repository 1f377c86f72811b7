#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "qgalois/actions.hpp"
#include "qgalois/errors.hpp"
#include "qgalois/gwa.hpp"
#include "qgalois/reflgroup.hpp"

using namespace qg;

namespace {

QAlgebraElement rand_qa(std::mt19937& rng, const QAlgebraKind& k, int nterms, long lo) {
    std::uniform_int_distribution<long> de(lo, 2);
    std::uniform_int_distribution<int> dc(-3, 3);
    QAlgebraElement out = QAlgebraElement::zero(k);
    for (int t = 0; t < nterms; ++t) {
        std::vector<long> a(k.rank), b(k.rank);
        for (int i = 0; i < k.rank; ++i) {
            a[i] = de(rng);
            b[i] = de(rng);
        }
        int c = dc(rng);
        if (c == 0) c = 1;
        out += QAlgebraElement::monomial(k, a, b, RatFunc(c));
    }
    return out;
}

// dimension of the degree-d invariants by averaging characters: each group
// element contributes the sum, over monomials fixed by its permutation part,
// of the root-of-unity scalar it produces on that monomial
long dimension_by_character_sum(const std::vector<ReflGroupElement>& group,
                                const QAlgebraKind& kind, long degree) {
    std::vector<std::vector<long>> rows;
    std::vector<long> cur;
    std::function<void(int, long)> rec = [&](int slots, long d) {
        if (slots == 1) {
            cur.push_back(d);
            rows.push_back(cur);
            cur.pop_back();
            return;
        }
        for (long v = 0; v <= d; ++v) {
            cur.push_back(v);
            rec(slots - 1, d - v);
            cur.pop_back();
        }
    };
    rec(2 * kind.rank, degree);

    Cyclotomic total(0L);
    for (const auto& h : group) {
        for (const auto& row : rows) {
            std::vector<long> a(row.begin(), row.begin() + kind.rank);
            std::vector<long> b(row.begin() + kind.rank, row.end());
            bool fixed = true;
            for (int i = 0; i < kind.rank && fixed; ++i)
                fixed = a[h.perm[i]] == a[i] && b[h.perm[i]] == b[i];
            if (!fixed) continue;
            long w = 0;
            for (int i = 0; i < kind.rank; ++i) w += h.diag[i] * a[i];
            total += Cyclotomic::root_power(h.m, ((w % h.m) + h.m) % h.m);
        }
    }
    Rat avg = total.order() == 1 ? total.coeffs()[0] / Rat(group.size()) : Rat(-1);
    REQUIRE(avg.get_den() == 1);
    return avg.get_num().get_si();
}

} // namespace

TEST_CASE("closure sizes match the order formula") {
    struct Case { int m, p, n; };
    for (auto [m, p, n] : {Case{2, 1, 2}, {3, 3, 2}, {1, 1, 3}, {4, 1, 1}, {2, 2, 2},
                           {4, 2, 2}, {3, 1, 2}, {6, 3, 2}, {2, 1, 3}}) {
        auto g = close_group(gmpn_generators(m, p, n));
        CHECK(static_cast<long>(g.size()) == gmpn_order(m, p, n));
    }
    CHECK(gmpn_order(2, 1, 2) == 8);
    CHECK(gmpn_order(3, 3, 2) == 6);
    CHECK(close_group(diagonal_generators(3, 2)).size() == 9);
    CHECK(close_group(symmetric_generators(4)).size() == 24);
}

TEST_CASE("group axioms hold in closures") {
    for (auto gens : {gmpn_generators(3, 1, 2), gmpn_generators(4, 2, 2)}) {
        auto g = close_group(gens);
        auto id = ReflGroupElement::identity(g[0].m, g[0].rank());
        std::set<ReflGroupElement> set(g.begin(), g.end());
        CHECK(set.count(id) == 1);
        for (const auto& h : g) {
            CHECK(h * h.inverse() == id);
            CHECK(h.inverse() * h == id);
            CHECK(set.count(h.inverse()) == 1);
        }
        // closed under multiplication, spot-checked associativity
        std::mt19937 rng(7);
        std::uniform_int_distribution<size_t> d(0, g.size() - 1);
        for (int r = 0; r < 50; ++r) {
            const auto &a = g[d(rng)], &b = g[d(rng)], &c = g[d(rng)];
            CHECK(set.count(a * b) == 1);
            CHECK((a * b) * c == a * (b * c));
        }
    }
}

TEST_CASE("closure cap throws") {
    CHECK_THROWS_AS(close_group(gmpn_generators(6, 1, 3), 100), GroupTooLarge);
}

TEST_CASE("action by algebra automorphisms") {
    std::mt19937 rng(11);
    auto g22 = close_group(gmpn_generators(2, 1, 2));
    QAlgebraKind aff = QAlgebraKind::uniform(QFamily::AffineSpace, 2);
    QAlgebraKind tor = QAlgebraKind::uniform(QFamily::Torus, 2);
    std::uniform_int_distribution<size_t> dh(0, g22.size() - 1);
    for (int r = 0; r < 80; ++r) {
        for (const auto& [k, lo] : {std::pair{aff, 0L}, {tor, -2L}}) {
            auto u = rand_qa(rng, k, 2, lo);
            auto v = rand_qa(rng, k, 2, lo);
            const auto &h1 = g22[dh(rng)], &h2 = g22[dh(rng)];
            CHECK(act(h1, u * v) == act(h1, u) * act(h1, v));
            CHECK(act(h1, u + v) == act(h1, u) + act(h1, v));
            CHECK(act(h1 * h2, u) == act(h1, act(h2, u)));
        }
    }
    auto id = ReflGroupElement::identity(2, 2);
    auto u = rand_qa(rng, aff, 3, 0);
    CHECK(act(id, u) == u);
}

TEST_CASE("Weyl family admits only permutations") {
    QAlgebraKind w = QAlgebraKind::uniform(QFamily::Weyl, 2);
    auto u = QAlgebraElement::gen_x(w, 1) * QAlgebraElement::gen_y(w, 2);
    auto s = ReflGroupElement::transposition(1, 2, 1, 2);
    CHECK(act(s, u) == QAlgebraElement::gen_x(w, 2) * QAlgebraElement::gen_y(w, 1));
    auto d = ReflGroupElement::diagonal(2, {1, 0});
    CHECK_THROWS_AS(act(d, u), UndefinedAction);
    // permutations stay automorphisms of the Weyl relations
    std::mt19937 rng(13);
    for (int r = 0; r < 60; ++r) {
        auto a = rand_qa(rng, w, 2, 0);
        auto b = rand_qa(rng, w, 2, 0);
        CHECK(act(s, a * b) == act(s, a) * act(s, b));
    }
}

TEST_CASE("skew ring action by automorphisms") {
    std::mt19937 rng(17);
    auto g = close_group(gmpn_generators(3, 1, 2));
    ActionPtr nn = qscale_action(2, Ambient::Nn);
    std::uniform_int_distribution<size_t> dh(0, g.size() - 1);
    std::uniform_int_distribution<long> de(0, 2);
    std::uniform_int_distribution<int> dc(1, 3), dv(1, 2);
    auto rand_skew = [&] {
        SkewElement out = SkewElement::zero(nn);
        for (int t = 0; t < 2; ++t) {
            IntVec m{de(rng), de(rng)};
            out += SkewElement::term(
                nn, m, RatFunc(dc(rng)) * RatFunc::variable("x" + std::to_string(dv(rng))));
        }
        return out;
    };
    for (int r = 0; r < 80; ++r) {
        auto u = rand_skew();
        auto v = rand_skew();
        const auto &h1 = g[dh(rng)], &h2 = g[dh(rng)];
        CHECK(act(h1, u * v) == act(h1, u) * act(h1, v));
        CHECK(act(h1 * h2, u) == act(h1, act(h2, u)));
    }
}

TEST_CASE("diagonal character action and the skew-side extension agree") {
    std::mt19937 rng(19);
    for (int m : {2, 3, 4}) {
        GwaInstance inst = gwa_instance("usl2");
        const GwaDataPtr& d = inst.data;
        auto g = ReflGroupElement::diagonal(m, {1});
        RatFunc xi{Cyclotomic::root(m)};
        GwaElement e = inst.generator_images.at("e");
        GwaElement f = inst.generator_images.at("f");
        GwaElement h = inst.generator_images.at("h");
        CHECK(diagonal_act(g, e) == e.scaled(xi));
        CHECK(diagonal_act(g, f) == f.scaled(RatFunc(1) / xi));
        CHECK(diagonal_act(g, h) == h);
        std::uniform_int_distribution<long> dz(-2, 2);
        std::uniform_int_distribution<int> dc(1, 3);
        for (int r = 0; r < 40; ++r) {
            GwaElement u = GwaElement::term(d, {dz(rng)}, RatFunc(dc(rng))) +
                           GwaElement::term(d, {dz(rng)}, RatFunc::variable("H"));
            GwaElement v = GwaElement::term(d, {dz(rng)}, RatFunc::variable("C"));
            CHECK(diagonal_act(g, u * v) == diagonal_act(g, u) * diagonal_act(g, v));
            // the embedding intertwines the two actions
            CHECK(diagonal_act(g, u).embed() == diagonal_act(g, u.embed()));
        }
    }
}

TEST_CASE("averaging operator projects onto invariants") {
    std::mt19937 rng(23);
    auto g = close_group(gmpn_generators(2, 1, 2));
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, 2);
    for (int r = 0; r < 30; ++r) {
        auto u = rand_qa(rng, k, 3, 0);
        auto ru = reynolds(g, u);
        CHECK(reynolds(g, ru) == ru);
        for (const auto& h : g) CHECK(act(h, ru) == ru);
    }
}

TEST_CASE("invariant bases: sign action on one variable pair") {
    // G_2 acting by x -> -x, y -> y: invariants need even x-degree
    auto g = close_group(diagonal_generators(2, 1));
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, 1);
    for (long d = 0; d <= 5; ++d) {
        auto basis = invariant_basis(g, k, d);
        CHECK(static_cast<long>(basis.size()) == d / 2 + 1);
        for (const auto& v : basis) {
            CHECK(v.terms().size() == 1);
            CHECK(v.terms().begin()->first.a[0] % 2 == 0);
        }
    }
}

TEST_CASE("invariant dimensions match the character-sum oracle") {
    struct Case { int m, p, n; };
    for (auto [m, p, n] : {Case{2, 1, 2}, {3, 3, 2}, {3, 1, 1}, {2, 2, 2}}) {
        auto g = close_group(gmpn_generators(m, p, n));
        QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, n);
        for (long d = 0; d <= 4; ++d) {
            auto basis = invariant_basis(g, k, d);
            CHECK(static_cast<long>(basis.size()) == dimension_by_character_sum(g, k, d));
            // basis elements are invariant, normalized, with distinct leads
            std::set<std::vector<long>> leads;
            for (const auto& v : basis) {
                CHECK(v.terms().begin()->second == RatFunc(1));
                for (const auto& h : g) CHECK(act(h, v) == v);
                auto lead = v.terms().begin()->first;
                std::vector<long> key = lead.a;
                key.insert(key.end(), lead.b.begin(), lead.b.end());
                CHECK(leads.insert(key).second);
            }
        }
    }
}
