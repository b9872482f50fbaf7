#pragma once

#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "sinr/error.hpp"

// Small locale-independent text helpers shared by the CSV readers/writers.
namespace sinr::text {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    if (!out.empty()) {
        // tolerate CRLF input
        std::string& last = out.back();
        while (!last.empty() && (last.back() == '\r' || last.back() == '\n')) last.pop_back();
    }
    return out;
}

inline double parse_double(const std::string& s, const std::string& where) {
    const std::string t = trim(s);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw error(where + ": not a number: '" + t + "'");
    return value;
}

inline long long parse_int(const std::string& s, const std::string& where) {
    const std::string t = trim(s);
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size())
        throw error(where + ": not an integer: '" + t + "'");
    return value;
}

/// Shortest round-trip decimal form; byte-stable across runs.
inline std::string format(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace sinr::text
