#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace maplaw {

// Exact arbitrary-precision rational scalar. All core arithmetic runs on
// this type; doubles appear only at comparison/report boundaries.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Arithmetic mode for the few places where tolerance semantics exist at
// all (point collision detection, hyperplane direction validation).
enum class Mode { exact, floating };

constexpr double kDefaultTolerance = 1e-9;
constexpr double kDirectionTolerance = 1e-12;

const char* mode_name(Mode mode) noexcept;
std::optional<Mode> mode_from_name(std::string_view name) noexcept;

// Canonical text form: reduced "p/q" with the sign on p, or a bare
// integer when q == 1. This is the wire format for every serializer.
std::string to_string(const Rational& value);

// Accepts integers ("-3"), fractions ("5/7", "-5/7"), and decimal
// literals ("2.25", converted exactly). Throws Errc::parse_error.
Rational parse_rational(std::string_view text);
std::optional<Rational> try_parse_rational(std::string_view text) noexcept;

double to_double(const Rational& value);

// FNV-1a, the fingerprint primitive behind info_type_id and report
// hashes. 64-bit, stable across platforms.
std::uint64_t fnv1a(std::string_view bytes) noexcept;
std::string fnv1a_hex(std::string_view bytes);

}  // namespace maplaw
