#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace credence::util {

std::string to_lower_ascii(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);

// Splits into physical lines on '\n'; a trailing newline does not produce an
// empty final line. '\r' before the separator is dropped.
std::vector<std::string> split_lines(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

bool file_exists(const std::string& path);
std::string read_file(const std::string& path);  // throws MissingFileError
void write_file(const std::string& path, std::string_view content);
void ensure_dir(const std::string& path);

// Canonical float formatting used in every artifact file, so that outputs
// are byte-stable across runs and worker counts.
std::string format_double(double v);

// FNV-1a 64-bit; used for input digests in run manifests and for deriving
// per-component RNG seeds from string tags.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

std::optional<long long> parse_int(std::string_view s);
std::optional<double> parse_double(std::string_view s);

}  // namespace credence::util
