#pragma once

#include "json.hpp"

#include <string>

namespace maplaw::toml_lite {

// Minimal TOML reader covering the subset used by spec documents:
// comments, [table] and [[array-of-tables]] headers (dotted), bare or
// quoted keys, strings, integers, floats, booleans, and (possibly
// multiline) arrays. Throws maplaw::Error(Errc::parse_error) with a line
// reference on malformed input.
nlohmann::json parse(const std::string& text);

}  // namespace maplaw::toml_lite
