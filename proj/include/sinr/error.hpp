#pragma once

#include <stdexcept>
#include <string>

namespace sinr {

// Library-wide error type. Messages are meant to be actionable: they name
// the offending file/row/column or link where that information exists.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sinr
