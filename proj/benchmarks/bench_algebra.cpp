#include <benchmark/benchmark.h>

#include <random>

#include "qgalois/actions.hpp"
#include "qgalois/gwa.hpp"
#include "qgalois/qalgebra.hpp"
#include "qgalois/reflgroup.hpp"
#include "qgalois/skewring.hpp"

using namespace qg;

namespace {

QAlgebraElement random_qa(std::mt19937& rng, const QAlgebraKind& k, int nterms) {
    std::uniform_int_distribution<long> de(0, 3);
    std::uniform_int_distribution<int> dc(1, 5);
    QAlgebraElement out = QAlgebraElement::zero(k);
    for (int t = 0; t < nterms; ++t) {
        std::vector<long> a(k.rank), b(k.rank);
        for (int i = 0; i < k.rank; ++i) {
            a[i] = de(rng);
            b[i] = de(rng);
        }
        out += QAlgebraElement::monomial(k, a, b, RatFunc(dc(rng)));
    }
    return out;
}

void bm_weyl_product(benchmark::State& state) {
    std::mt19937 rng(1);
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::Weyl, static_cast<int>(state.range(0)));
    auto u = random_qa(rng, k, 4);
    auto v = random_qa(rng, k, 4);
    for (auto _ : state) benchmark::DoNotOptimize(u * v);
}

void bm_affine_product(benchmark::State& state) {
    std::mt19937 rng(2);
    QAlgebraKind k =
        QAlgebraKind::uniform(QFamily::AffineSpace, static_cast<int>(state.range(0)));
    auto u = random_qa(rng, k, 6);
    auto v = random_qa(rng, k, 6);
    for (auto _ : state) benchmark::DoNotOptimize(u * v);
}

void bm_skew_product(benchmark::State& state) {
    std::mt19937 rng(3);
    int n = static_cast<int>(state.range(0));
    ActionPtr a = qweyl_shift_action(n);
    std::uniform_int_distribution<long> de(-2, 2);
    auto rand_skew = [&] {
        SkewElement out = SkewElement::zero(a);
        for (int t = 0; t < 4; ++t) {
            IntVec m(n);
            for (int i = 0; i < n; ++i) m[i] = de(rng);
            out += SkewElement::term(a, m, RatFunc::variable("h1") + RatFunc(t));
        }
        return out;
    };
    auto u = rand_skew(), v = rand_skew();
    for (auto _ : state) benchmark::DoNotOptimize(u * v);
}

void bm_gwa_product(benchmark::State& state) {
    GwaInstance inst = gwa_instance("usl2");
    std::mt19937 rng(4);
    std::uniform_int_distribution<long> de(-3, 3);
    auto rand_gwa = [&] {
        GwaElement out = GwaElement::zero(inst.data);
        for (int t = 0; t < 4; ++t)
            out += GwaElement::term(inst.data, {de(rng)},
                                    RatFunc::variable("H") + RatFunc(t));
        return out;
    };
    auto u = rand_gwa(), v = rand_gwa();
    for (auto _ : state) benchmark::DoNotOptimize(u * v);
}

void bm_gwa_embed(benchmark::State& state) {
    GwaInstance inst = gwa_instance("quantum-weyl-a1");
    GwaElement u = GwaElement::zero(inst.data);
    for (long z = -3; z <= 3; ++z)
        u += GwaElement::term(inst.data, {z}, RatFunc::variable("h1") + RatFunc(z));
    for (auto _ : state) benchmark::DoNotOptimize(u.embed());
}

void bm_reynolds(benchmark::State& state) {
    int m = static_cast<int>(state.range(0));
    auto group = close_group(gmpn_generators(m, 1, 2));
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, 2);
    std::mt19937 rng(5);
    auto u = random_qa(rng, k, 5);
    for (auto _ : state) benchmark::DoNotOptimize(reynolds(group, u));
}

void bm_invariant_basis(benchmark::State& state) {
    auto group = close_group(gmpn_generators(2, 1, 2));
    QAlgebraKind k = QAlgebraKind::uniform(QFamily::AffineSpace, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(invariant_basis(group, k, state.range(0)));
}

} // namespace

BENCHMARK(bm_weyl_product)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_affine_product)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_skew_product)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_gwa_product);
BENCHMARK(bm_gwa_embed);
BENCHMARK(bm_reynolds)->Arg(2)->Arg(3);
BENCHMARK(bm_invariant_basis)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
