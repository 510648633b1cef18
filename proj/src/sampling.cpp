#include "cybiv/sampling.hpp"

#include "cybiv/threefold.hpp"

namespace cybiv {

ExactScalar random_small_scalar(Rng& rng, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  return ExactScalar(d(rng));
}

ChartPoly random_combination(const std::vector<ChartMonomial>& monomials, Rng& rng, int max_terms, int range) {
  ChartPoly out;
  if (monomials.empty()) return out;
  std::uniform_int_distribution<size_t> pick(0, monomials.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  int n = count(rng);
  for (int i = 0; i < n; ++i) out.add_term(monomials[pick(rng)], random_small_scalar(rng, range));
  return out;
}

ChartPoly random_global_function(const ThreefoldSpec& spec, int max_fiber_degree, Rng& rng, int max_terms) {
  return random_combination(global_function_monomials(spec, max_fiber_degree), rng, max_terms);
}

ChartPoly random_laurent(Rng& rng, int zr, int fr, int max_terms) {
  std::vector<ChartMonomial> ms;
  for (int r = -zr; r <= zr; ++r)
    for (int s = 0; s <= fr; ++s)
      for (int t = 0; t + s <= fr; ++t) ms.emplace_back(r, s, t);
  return random_combination(ms, rng, max_terms);
}

BivectorField random_section(const std::vector<BivectorField>& basis, Rng& rng, int max_terms) {
  BivectorField out(basis.front().spec, {ChartPoly(), ChartPoly(), ChartPoly()});
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> count(1, max_terms);
  int n = count(rng);
  for (int i = 0; i < n; ++i) out += random_small_scalar(rng) * basis[pick(rng)];
  return out;
}

}  // namespace cybiv
