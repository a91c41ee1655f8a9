#include <benchmark/benchmark.h>

#include "coc/kernel.hpp"
#include "coc/matcher.hpp"
#include "coc/reduction.hpp"
#include "coc/syntax.hpp"
#include "coc/synthesizer.hpp"
#include "coc/vernacular.hpp"

namespace {

using coc::Term;

coc::Context axioms(const std::vector<std::pair<const char*, const char*>>& decls) {
  coc::Context ctx;
  for (const auto& [name, type] : decls) ctx.push_back(coc::Universal{name, coc::parse_term(type)});
  return ctx;
}

// A chain A0 -> A1 -> ... -> An of n implications; the goal A0 -> An needs
// n nested applications.
coc::SynthesisRequest chain(int n) {
  coc::SynthesisRequest r;
  for (int k = 0; k <= n; ++k) r.context.push_back(coc::Universal{"A" + std::to_string(k), Term::prop()});
  for (int k = 0; k < n; ++k)
    r.context.push_back(coc::Universal{"f" + std::to_string(k),
                                       coc::make_arrow(Term::free("A" + std::to_string(k)),
                                                       Term::free("A" + std::to_string(k + 1)))});
  r.goal = coc::make_arrow(Term::free("A0"), Term::free("A" + std::to_string(n)));
  return r;
}

void BM_SynthesizeTransitivity(benchmark::State& state) {
  coc::SynthesisRequest r = chain(2);
  for (auto _ : state) benchmark::DoNotOptimize(coc::synthesize(r));
}
BENCHMARK(BM_SynthesizeTransitivity);

// Longer chains are out of reach in one step; this measures finite failure.
void BM_SynthesizeChainFailure(benchmark::State& state) {
  coc::SynthesisRequest r = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coc::synthesize(r));
}
BENCHMARK(BM_SynthesizeChainFailure)->DenseRange(3, 7, 2);

void BM_SynthesizeLeibniz(benchmark::State& state) {
  coc::SynthesisRequest r;
  r.context = axioms({{"A", "Prop"},
                      {"x", "A"},
                      {"y", "A"},
                      {"P", "(z:A)Prop"},
                      {"h", "(Q:(z:A)Prop)((Q x))->(Q y)"},
                      {"px", "(P x)"}});
  r.goal = coc::parse_term("(P y)");
  for (auto _ : state) benchmark::DoNotOptimize(coc::synthesize(r));
}
BENCHMARK(BM_SynthesizeLeibniz);

void BM_MatchProjectionImitation(benchmark::State& state) {
  // F a = f a (f a ... a): every a may be projected or imitated.
  int n = static_cast<int>(state.range(0));
  coc::MatchProblem p;
  p.context = axioms({{"o", "Prop"}, {"a", "o"}, {"f", "(x:o)(y:o)o"}});
  p.context.push_back(coc::Existential{"F", coc::parse_term("(z:o)o")});
  p.existentials = {"F"};
  Term rhs = Term::free("a");
  for (int k = 0; k < n; ++k) rhs = Term::app(Term::app(Term::free("f"), Term::free("a")), rhs);
  p.equations.push_back({Term::app(Term::free("F"), Term::free("a")), rhs});
  coc::MatchOptions opts;
  opts.max_solutions = 1u << 20;
  for (auto _ : state) benchmark::DoNotOptimize(coc::solve(p, opts));
  state.SetComplexityN(n);
}
BENCHMARK(BM_MatchProjectionImitation)->DenseRange(1, 5, 1);

void BM_KernelCheckChurch(benchmark::State& state) {
  coc::Context ctx;
  Term nat = coc::parse_term("(X:Prop)((x:X)X)->(x:X)X");
  Term two = coc::parse_term("[X:Prop][s:(x:X)X][z:X](s (s z))");
  for (auto _ : state) coc::check_type(ctx, two, nat);
}
BENCHMARK(BM_KernelCheckChurch);

void BM_NormalizeChurchPower(benchmark::State& state) {
  coc::Context ctx;
  // (two two) normalizes to four.
  Term two = coc::parse_term("[s:(x:A)A][z:A](s (s z))");
  Term t = Term::app(Term::app(coc::parse_term("[n:((x:A)A)->(x:A)A][m:((x:A)A)->(x:A)A][s:(x:A)A](n (m s))"), two), two);
  for (auto _ : state) benchmark::DoNotOptimize(coc::normalize(t, ctx));
}
BENCHMARK(BM_NormalizeChurchPower);

void BM_CheckScriptNested(benchmark::State& state) {
  const char* script =
      "Axiom A : Prop. Axiom B : Prop. Axiom C : Prop. Axiom f : (x:A)B. Axiom g : (x:B)C. Axiom a : A.\n"
      "Remark main. Statement C. Remark lemma. Statement B. Using f, a. Using g, lemma.\n";
  for (auto _ : state) benchmark::DoNotOptimize(coc::check_script(script));
}
BENCHMARK(BM_CheckScriptNested);

}  // namespace

BENCHMARK_MAIN();
