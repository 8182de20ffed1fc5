#include "kitedart/util.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "kitedart/errors.hpp"

#ifndef KITEDART_DATA_DIR
#define KITEDART_DATA_DIR ""
#endif

namespace kd {

std::string to_hex(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

std::string format_fixed(double value, int frac) {
    double scale = std::pow(10.0, frac);
    long long scaled = llround(value * scale);
    bool neg = scaled < 0;
    unsigned long long mag = neg ? static_cast<unsigned long long>(-scaled)
                                 : static_cast<unsigned long long>(scaled);
    unsigned long long div = static_cast<unsigned long long>(scale);
    std::string s = neg ? "-" : "";
    s += std::to_string(mag / div);
    if (frac > 0) {
        std::string f = std::to_string(mag % div);
        s += "." + std::string(static_cast<std::size_t>(frac) - f.size(), '0') + f;
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

std::string data_path(const std::string& relative) {
    if (const char* env = std::getenv("KITEDART_DATA_DIR"); env && *env)
        return std::string(env) + "/" + relative;
    return std::string(KITEDART_DATA_DIR) + "/" + relative;
}

}  // namespace kd
