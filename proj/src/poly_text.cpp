#include "cybiv/poly_text.hpp"

#include <cctype>
#include <sstream>

namespace cybiv {

const std::array<std::string, 3>& chart_variable_names(Chart chart) {
  static const std::array<std::string, 3> u_names{"z", "u1", "u2"};
  static const std::array<std::string, 3> v_names{"xi", "v1", "v2"};
  return chart == Chart::U ? u_names : v_names;
}

std::string chart_name(Chart chart) { return chart == Chart::U ? "U" : "V"; }

const VariableNames& surface_variable_names(Chart chart) {
  static const VariableNames u_names{"z", "u", "~"};
  static const VariableNames v_names{"xi", "v", "~"};
  return chart == Chart::U ? u_names : v_names;
}

const VariableNames& plane_variable_names() {
  static const VariableNames names{"~", "u", "v"};
  return names;
}

ParseError::ParseError(size_t position, const std::string& message)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const VariableNames& names) : text_(text), names_(names) {}

  ChartPoly parse() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    ChartPoly result;
    bool first = true;
    while (true) {
      skip_space();
      int sign = 1;
      if (!at_end() && (peek() == '+' || peek() == '-')) {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        if (at_end()) break;
        throw ParseError(pos_, std::string("expected '+' or '-', found '") + peek() + "'");
      }
      first = false;
      skip_space();
      result += parse_term() * ExactScalar(sign);
      skip_space();
      if (at_end()) break;
    }
    return result;
  }

 private:
  [[nodiscard]] bool at_end() const { return pos_ >= text_.size(); }
  [[nodiscard]] char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  ChartPoly parse_term() {
    ExactScalar coeff(1);
    ChartMonomial mono;
    bool expect_factor = true;
    bool any = false;
    while (expect_factor) {
      skip_space();
      if (at_end()) throw ParseError(pos_, "expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        size_t start = pos_;
        std::string name;
        while (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) name += text_[pos_++];
        int var = -1;
        for (int i = 0; i < 3; ++i) {
          if (names_[i] == name) var = i;
        }
        if (var < 0) throw ParseError(start, "unknown variable '" + name + "'");
        int e = 1;
        skip_space();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = parse_exponent();
        }
        if (var != 0 && e < 0) throw ParseError(start, "negative exponent on fiber variable '" + name + "'");
        if (var == 0) mono.ez += e;
        if (var == 1) mono.eu1 += e;
        if (var == 2) mono.eu2 += e;
      } else {
        throw ParseError(pos_, std::string("unexpected character '") + peek() + "'");
      }
      any = true;
      skip_space();
      expect_factor = !at_end() && peek() == '*';
      if (expect_factor) ++pos_;
    }
    if (!any) throw ParseError(pos_, "empty term");
    return ChartPoly(mono, coeff);
  }

  ExactScalar parse_number() {
    size_t start = pos_;
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
    if (!at_end() && peek() == '/') {
      ++pos_;
      digits += '/';
      size_t den_start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
      if (pos_ == den_start) throw ParseError(pos_, "expected denominator");
    }
    try {
      return ExactScalar::parse(digits);
    } catch (const std::exception& e) {
      throw ParseError(start, e.what());
    }
  }

  int parse_exponent() {
    skip_space();
    bool paren = !at_end() && peek() == '(';
    if (paren) ++pos_;
    skip_space();
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 100000) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected exponent");
    if (paren) {
      skip_space();
      if (at_end() || peek() != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
    }
    return static_cast<int>(sign * value);
  }

  std::string_view text_;
  const VariableNames& names_;
  size_t pos_ = 0;
};

}  // namespace

ChartPoly parse_poly(std::string_view text, const VariableNames& names) { return PolyParser(text, names).parse(); }

ChartPoly parse_poly(std::string_view text, Chart chart) { return parse_poly(text, chart_variable_names(chart)); }

std::string format_monomial(const ChartMonomial& m, Chart chart) { return format_monomial(m, chart_variable_names(chart)); }

std::string format_monomial(const ChartMonomial& m, const VariableNames& names) {
  std::ostringstream os;
  bool any = false;
  const int exps[3] = {m.ez, m.eu1, m.eu2};
  for (int i = 0; i < 3; ++i) {
    if (exps[i] == 0) continue;
    if (any) os << '*';
    os << names[i];
    if (exps[i] != 1) os << '^' << exps[i];
    any = true;
  }
  return any ? os.str() : "1";
}

std::string format_poly(const ChartPoly& p, Chart chart) { return format_poly(p, chart_variable_names(chart)); }

std::string format_poly(const ChartPoly& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    ExactScalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit_monomial = m == ChartMonomial{};
    if (unit_monomial) {
      os << mag.to_string();
    } else {
      if (!mag.is_one()) os << mag.to_string() << '*';
      os << format_monomial(m, names);
    }
  }
  return os.str();
}

}  // namespace cybiv
