#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cybiv/chart_poly.hpp"

namespace cybiv {

enum class Chart { U, V };

/// Variable names of a chart: {"z","u1","u2"} or {"xi","v1","v2"}.
const std::array<std::string, 3>& chart_variable_names(Chart chart);
std::string chart_name(Chart chart);

/// Parse failure with the 0-based character offset of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t position, const std::string& message);
  [[nodiscard]] size_t position() const { return position_; }
  /// The message without the position prefix.
  [[nodiscard]] const std::string& detail() const { return detail_; }

 private:
  size_t position_;
  std::string detail_;
};

/// Parses a sum of terms such as "3/2*z^2*u1 - xi^-1 + 4".  Factors are
/// separated by '*', exponents follow '^' and may be negative ("z^-1" or
/// "z^(-1)").  Only the variable names of the given chart are accepted.
ChartPoly parse_poly(std::string_view text, Chart chart);

/// Canonical text form: terms in decreasing monomial order, "0" for zero.
std::string format_poly(const ChartPoly& p, Chart chart = Chart::U);

/// Variants with explicit variable names (used for surface coordinates).
using VariableNames = std::array<std::string, 3>;
ChartPoly parse_poly(std::string_view text, const VariableNames& names);
std::string format_poly(const ChartPoly& p, const VariableNames& names);

/// Names of surface charts: (z, u) on U and (xi, v) on V, and (u, v) on a fiber plane.
const VariableNames& surface_variable_names(Chart chart);
const VariableNames& plane_variable_names();

/// Monomial without coefficient, e.g. "z^2*u1" or "1".
std::string format_monomial(const ChartMonomial& m, Chart chart = Chart::U);
std::string format_monomial(const ChartMonomial& m, const VariableNames& names);

}  // namespace cybiv
