#pragma once

#include <random>
#include <vector>

#include "cybiv/bivector.hpp"

namespace cybiv {

using Rng = std::mt19937_64;

/// Random nonzero-or-zero small integer in [-range, range].
ExactScalar random_small_scalar(Rng& rng, int range = 3);

/// Random polynomial with up to max_terms terms drawn from the given monomials.
ChartPoly random_combination(const std::vector<ChartMonomial>& monomials, Rng& rng, int max_terms = 3, int range = 3);

/// Random global function of fiber degree <= max_fiber_degree.
ChartPoly random_global_function(const ThreefoldSpec& spec, int max_fiber_degree, Rng& rng, int max_terms = 3);

/// Random Laurent polynomial with z-exponents in [-zr, zr] and fiber exponents <= fr.
ChartPoly random_laurent(Rng& rng, int zr = 2, int fr = 2, int max_terms = 4);

/// Random rational combination of up to max_terms elements of a section basis.
BivectorField random_section(const std::vector<BivectorField>& basis, Rng& rng, int max_terms = 3);

}  // namespace cybiv
