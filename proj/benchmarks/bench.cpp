#include <benchmark/benchmark.h>

#include "mpp/correspondence.hpp"
#include "mpp/expr.hpp"

using namespace mpp;

namespace {

const PsiConductor psi0 = PsiConductor::standard(0);

void BM_WeylReduce(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<SignedPermutation> elems = allElements(n);
  for (auto _ : state) {
    long total = 0;
    for (const SignedPermutation& w : elems) total += reducedWord(w).letters.size();
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(elems.size()));
}
BENCHMARK(BM_WeylReduce)->Arg(3)->Arg(4)->Arg(5);

void BM_TInvariantWordMode(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<SignedPermutation> elems = allElements(n);
  for (auto _ : state) {
    long total = 0;
    for (const SignedPermutation& w : elems) total += t_invariant(w, TMode::Word);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(elems.size()));
}
BENCHMARK(BM_TInvariantWordMode)->Arg(4)->Arg(5);

void BM_EnumerateBounded(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  EnumOpts opts;
  opts.phaseI = true;
  for (auto _ : state) {
    auto all = enumerate_parameters(rank, opts);
    benchmark::DoNotOptimize(all.size());
  }
}
BENCHMARK(BM_EnumerateBounded)->Arg(3)->Arg(4)->Arg(5);

void BM_VerifyExhaustive(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  EnumOpts opts;
  std::vector<EnhancedParameter> all = enumerate_enhanced(rank, opts);
  for (auto _ : state) {
    Pipeline pipe(psi0);  // fresh memo each round
    int classified = 0;
    for (const EnhancedParameter& e : all) {
      if (pipe.block_membership(e) == Membership::Outside) continue;
      classified += pipe.verify_pipeline(e).agreement ? 1 : 0;
    }
    benchmark::DoNotOptimize(classified);
  }
}
BENCHMARK(BM_VerifyExhaustive)->Arg(2)->Arg(3)->Arg(4);

void BM_FourierRoundTrip(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  ComponentGroup g;
  for (int b = 0; b < k; ++b) g.basis.push_back(b);
  PacketTable members;
  int tag = 0;
  for (const GroupElement& chi : g.elements())
    members[print_signs(chi)] = VirtualCharacter::basis(
        Symbol{Symbol::PacketMember, {}, "m" + std::to_string(tag++), ""});
  for (auto _ : state) {
    PacketTable back = fourier_to_members(g, fourier_to_stable(g, members));
    benchmark::DoNotOptimize(back.size());
  }
}
BENCHMARK(BM_FourierRoundTrip)->Arg(4)->Arg(6)->Arg(8);

void BM_LGamma(benchmark::State& state) {
  Parameter phi = normalize(parse_param_expr("2*[1 x S(2)] + [sgn x S(4)] + [1 x S(6)]"));
  for (auto _ : state) {
    LGamma lg = L_and_gamma(phi, psi0);
    benchmark::DoNotOptimize(lg.gammaHalf);
  }
}
BENCHMARK(BM_LGamma);

}  // namespace

BENCHMARK_MAIN();
