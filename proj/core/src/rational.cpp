#include "maplaw/rational.hpp"

#include "maplaw/errors.hpp"

#include <array>
#include <cctype>
#include <charconv>

namespace maplaw {

const char* mode_name(Mode mode) noexcept {
  return mode == Mode::exact ? "exact" : "float";
}

std::optional<Mode> mode_from_name(std::string_view name) noexcept {
  if (name == "exact") return Mode::exact;
  if (name == "float" || name == "floating") return Mode::floating;
  return std::nullopt;
}

std::string to_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_text(std::string_view text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  return true;
}

std::optional<Rational> parse_impl(std::string_view text) {
  // trim surrounding whitespace
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!is_integer_text(num) || !is_integer_text(den)) return std::nullopt;
    const BigInt d{std::string(den)};
    if (d == 0) return std::nullopt;
    return Rational(BigInt{std::string(num)}, d);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !is_integer_text(whole)) return std::nullopt;
    if (!frac.empty() && !is_integer_text(frac)) return std::nullopt;
    BigInt scaled = whole.empty() ? BigInt(0) : BigInt{std::string(whole)};
    BigInt den(1);
    for (char c : frac) {
      scaled = scaled * 10 + (c - '0');
      den *= 10;
    }
    Rational result(scaled, den);
    return negative ? Rational(-result) : result;
  }

  if (!is_integer_text(text)) return std::nullopt;
  return Rational(BigInt{std::string(text)});
}

}  // namespace

std::optional<Rational> try_parse_rational(std::string_view text) noexcept {
  try {
    return parse_impl(text);
  } catch (...) {
    return std::nullopt;
  }
}

Rational parse_rational(std::string_view text) {
  auto parsed = try_parse_rational(text);
  if (!parsed) raise(Errc::parse_error, "not a rational literal: '" + std::string(text) + "'");
  return *parsed;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

std::string fnv1a_hex(std::string_view bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::uint64_t hash = fnv1a(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return out;
}

}  // namespace maplaw
