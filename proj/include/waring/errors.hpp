#ifndef WARING_ERRORS_HPP
#define WARING_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace waring {

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised for inputs whose degree is outside what an operation supports (d < 3 etc).
class DegreeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotHomogeneousError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SingularError : public std::runtime_error {
public:
    SingularError() : std::runtime_error("matrix is singular") {}
};

// Brute-force routines refuse instances above a configurable size.
class SizeGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

} // namespace waring

#endif
