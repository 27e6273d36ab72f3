#pragma once

#include <cstdint>
#include <string>

namespace eri {

inline constexpr double kSecondsPerDay = 86400.0;

// Parses "YYYY-MM-DDThh:mm:ss[.frac][Z|+hh:mm|-hh:mm]" to epoch seconds.
// Fractional seconds are truncated. Throws ParseError on malformed input.
std::int64_t parse_rfc3339(const std::string& text);

// Formats epoch seconds as "YYYY-MM-DDThh:mm:ssZ".
std::string format_rfc3339(std::int64_t epoch_s);

}  // namespace eri
