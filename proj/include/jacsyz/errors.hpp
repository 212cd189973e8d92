#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jacsyz {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text violates the polynomial grammar; position is a 0-based byte offset.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

class NotHomogeneous : public Error {
public:
    NotHomogeneous(const std::string& first, const std::string& second)
        : Error("polynomial is not homogeneous: terms '" + first + "' and '" + second +
                "' have different degrees"),
          first_(first),
          second_(second) {}
    const std::string& first_term() const noexcept { return first_; }
    const std::string& second_term() const noexcept { return second_; }

private:
    std::string first_, second_;
};

class ZeroPolynomial : public Error {
public:
    ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class AmbientMismatch : public Error {
public:
    AmbientMismatch(std::size_t a, std::size_t b)
        : Error("ambient dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class DegreeTooLow : public Error {
public:
    DegreeTooLow(int gen_degree, int k)
        : Error("generator of degree " + std::to_string(gen_degree) +
                " does not fit in degree " + std::to_string(k)) {}
};

class NotStabilized : public Error {
public:
    NotStabilized() : Error("Milnor algebra dimensions did not stabilize up to kmax") {}
};

class SmoothInput : public Error {
public:
    SmoothInput() : Error("hypersurface is smooth: coincidence threshold is undefined") {}
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class IdentityViolation : public Error {
public:
    using Error::Error;
};

}  // namespace jacsyz
