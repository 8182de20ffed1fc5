#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kd {

inline std::uint64_t fnv64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ULL) {
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ULL;
    return h;
}

std::string to_hex(std::uint64_t v);

// fixed-point decimal formatting, locale-independent (value rounded to
// `frac` fractional digits)
std::string format_fixed(double value, int frac);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// shipped data files (rules, widgets, netlists); honors KITEDART_DATA_DIR
std::string data_path(const std::string& relative);

}  // namespace kd
