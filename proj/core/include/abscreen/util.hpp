#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abscreen::util {

std::string to_lower(std::string_view s);
std::string trim(std::string_view s);

/// Lowercase, strip ASCII punctuation, collapse whitespace runs to single
/// spaces, trim. Used as the duplicate/ground-truth matching key for titles.
std::string normalize_title(std::string_view title);

/// First run of four consecutive ASCII digits at the start of the (trimmed)
/// value, e.g. "1999/03/01" -> 1999. Returns nullopt when absent.
std::optional<int> parse_year_prefix(std::string_view value);

/// FNV-1a 64-bit. Stable across platforms; used to derive per-review
/// sampling seeds, never for security.
std::uint64_t fnv1a64(std::string_view s);

/// ISO-8601 UTC with second precision, e.g. "2026-08-09T12:34:56Z".
std::string iso8601_utc(std::chrono::system_clock::time_point tp);
std::string now_iso8601_utc();

/// Round half away from zero at three decimals (report precision).
double round3(double x);

/// Minimal RFC-4180 CSV: quoted fields, doubled quotes, commas and newlines
/// inside quotes. Returns one vector of fields per row.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

std::string csv_escape(std::string_view field);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

} // namespace abscreen::util
