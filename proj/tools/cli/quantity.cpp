#include "cli/quantity.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cavq::cli {
namespace {

const std::map<std::string, double, std::less<>>& unit_table(Dimension dim) {
  static const std::map<std::string, double, std::less<>> none{};
  static const std::map<std::string, double, std::less<>> length{
      {"m", 1.0}, {"cm", 1e-2}, {"mm", 1e-3}, {"um", 1e-6}, {"\xC2\xB5m", 1e-6}, {"nm", 1e-9}};
  static const std::map<std::string, double, std::less<>> time{
      {"s", 1.0}, {"ms", 1e-3}, {"us", 1e-6}, {"\xC2\xB5s", 1e-6}, {"ns", 1e-9}, {"ps", 1e-12}};
  static const std::map<std::string, double, std::less<>> frequency{
      {"Hz", 1.0}, {"kHz", 1e3}, {"MHz", 1e6}, {"GHz", 1e9}, {"THz", 1e12}};
  static const std::map<std::string, double, std::less<>> power{
      {"W", 1.0}, {"mW", 1e-3}, {"kW", 1e3}};
  switch (dim) {
    case Dimension::Length: return length;
    case Dimension::Time: return time;
    case Dimension::Frequency: return frequency;
    case Dimension::Power: return power;
    case Dimension::None: break;
  }
  return none;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Recursive-descent evaluator for angle expressions.
class AngleParser {
 public:
  explicit AngleParser(std::string_view text) : text_(text) {}

  double parse() {
    const double v = expr();
    skip();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("bad angle '" + std::string(text_) + "': " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  double expr() {
    double v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  double term() {
    double v = unary();
    for (;;) {
      if (accept('*')) v *= unary();
      else if (accept('/')) v /= unary();
      else return v;
    }
  }

  double unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return primary();
  }

  bool at_pi() const {
    return text_.substr(pos_, 2) == "pi" || text_.substr(pos_, 2) == "PI";
  }

  double primary() {
    skip();
    if (accept('(')) {
      const double v = expr();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (at_pi()) {
      pos_ += 2;
      return std::numbers::pi;
    }
    const std::string rest(text_.substr(pos_));
    char* end = nullptr;
    const double v = std::strtod(rest.c_str(), &end);
    if (end == rest.c_str()) fail("expected a number or 'pi'");
    pos_ += static_cast<std::size_t>(end - rest.c_str());
    if (at_pi()) {  // "2pi"
      pos_ += 2;
      return v * std::numbers::pi;
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

double parse_quantity(std::string_view text, Dimension dim) {
  const std::string s(trim(text));
  if (s.empty()) {
    throw std::invalid_argument("empty numeric value");
  }
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end == s.c_str() || !std::isfinite(v)) {
    throw std::invalid_argument("bad number '" + s + "'");
  }
  const std::string_view unit = trim(std::string_view(end));
  if (unit.empty()) {
    return v;
  }
  const auto& table = unit_table(dim);
  const auto it = table.find(unit);
  if (it == table.end()) {
    throw std::invalid_argument("unknown unit '" + std::string(unit) + "' in '" + s + "'");
  }
  return v * it->second;
}

double parse_angle(std::string_view text) {
  const double v = AngleParser(trim(text)).parse();
  if (!std::isfinite(v)) {
    throw std::invalid_argument("angle '" + std::string(text) + "' is not finite");
  }
  return v;
}

std::vector<double> parse_grid(std::string_view text) {
  text = trim(text);
  std::vector<double> grid;
  if (text.find(':') != std::string_view::npos) {
    const auto c1 = text.find(':');
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) {
      throw std::invalid_argument("grid range must be start:stop:count");
    }
    const double start = parse_angle(text.substr(0, c1));
    const double stop = parse_angle(text.substr(c1 + 1, c2 - c1 - 1));
    const double count = parse_angle(text.substr(c2 + 1));
    if (count < 1 || count != std::floor(count)) {
      throw std::invalid_argument("grid count must be a positive integer");
    }
    const auto n = static_cast<int>(count);
    for (int i = 0; i < n; ++i) {
      grid.push_back(n == 1 ? start : start + (stop - start) * i / (n - 1));
    }
    return grid;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    grid.push_back(parse_angle(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return grid;
}

std::vector<long long> parse_int_list(std::string_view text) {
  std::vector<long long> out;
  for (double v : parse_grid(text)) {
    if (v < 1 || v != std::floor(v)) {
      throw std::invalid_argument("expected positive integers in '" + std::string(text) + "'");
    }
    out.push_back(static_cast<long long>(v));
  }
  return out;
}

}  // namespace cavq::cli
