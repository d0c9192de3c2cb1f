#pragma once

#include <stdexcept>
#include <string>

namespace slw {

// Bad mathematical input (wrong dimensions, composite "prime", s out of range).
// The CLI maps this to exit code 2.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A completed-zeta argument landed on a pole of xi (0 or 1) inside a
// contributing term. Mapped to exit code 3.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested a regime outside this release (adjacent character supports,
// Weyl enumeration beyond the rank cap, ...). Mapped to exit code 3.
class unsupported_error : public std::runtime_error {
public:
    explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerically degenerate Gram block in the real Iwasawa decomposition.
class conditioning_error : public std::runtime_error {
public:
    explicit conditioning_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace slw
