#include <benchmark/benchmark.h>

#include "virlike/classifier.hpp"
#include "virlike/span.hpp"

using namespace virlike;

namespace {

void BM_BracketBasis(benchmark::State& state) {
    long i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bracket_basis(i % 5 - 2, 1, 1, i % 7 - 3));
        ++i;
    }
}
BENCHMARK(BM_BracketBasis);

void BM_BracketElements(benchmark::State& state) {
    LieElement x, y;
    for (long i = 0; i < state.range(0); ++i) {
        x.add_term(GenIndex::basis(i, -i), Rational(1, 3));
        y.add_term(GenIndex::basis(-i, i + 1), Rational(2, 5));
    }
    for (auto _ : state) benchmark::DoNotOptimize(bracket(x, y));
}
BENCHMARK(BM_BracketElements)->Arg(4)->Arg(16);

void BM_JacobiTriple(benchmark::State& state) {
    const LieElement x = LieElement::generator(1, -1);
    const LieElement y = LieElement::generator(-1, -2);
    const LieElement z = LieElement::generator(0, 3);
    for (auto _ : state) benchmark::DoNotOptimize(jacobi_defect(x, y, z));
}
BENCHMARK(BM_JacobiTriple);

void BM_ClosureWitness(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            generation_witness(2, 1, WitnessVariant::S, IndexBox{0, 8, -8, 12}, state.range(0)));
    }
}
BENCHMARK(BM_ClosureWitness)->Arg(1)->Arg(3);

void BM_Tabulate(benchmark::State& state) {
    const FamilySpec spec{FamilyId::F3, Rational(0), Rational(1, 2), Rational(1, 3)};
    const Window w = Window::symmetric(state.range(0), state.range(0), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(tabulate(spec, w));
}
BENCHMARK(BM_Tabulate)->Arg(2)->Arg(4);

void BM_FgEquationResidual(benchmark::State& state) {
    const FamilySpec spec{FamilyId::F3, Rational(0), Rational(1, 2), Rational(1, 3)};
    const Window w = Window::symmetric(state.range(0), state.range(0), 2, 2);
    const ActionTable t = tabulate(spec, w);
    for (auto _ : state) benchmark::DoNotOptimize(fg_equation_residual(t));
}
BENCHMARK(BM_FgEquationResidual)->Arg(2)->Arg(3);

void BM_ModuleAxiomResidual(benchmark::State& state) {
    const FamilySpec spec{FamilyId::F2, Rational(0), Rational(1, 2), Rational(1, 3)};
    const Window w = Window::symmetric(state.range(0), state.range(0), 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(module_axiom_residual(spec, w));
}
BENCHMARK(BM_ModuleAxiomResidual)->Arg(2)->Arg(3);

void BM_FitFamily(benchmark::State& state) {
    const FamilySpec spec{FamilyId::F5, Rational(0), Rational(2), Rational(1, 3)};
    const ActionTable t = tabulate(spec, Window::symmetric(3, 3, 2, 2));
    for (auto _ : state) benchmark::DoNotOptimize(fit_family(t));
}
BENCHMARK(BM_FitFamily);

void BM_RigiditySweep(benchmark::State& state) {
    const std::vector<Rational> grid{Rational(0), Rational(1, 2)};
    const Window w = Window::symmetric(2, 2, 2, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            rigidity_sweep(DeformationId::APrime, Rational(1, 2), Rational(0), grid, w));
    }
}
BENCHMARK(BM_RigiditySweep);

}  // namespace

BENCHMARK_MAIN();
