#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace kumlat {

// Base for all domain-rule violations. `code()` is the stable
// machine-readable name used in CLI error objects.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class DimensionMismatch : public DomainError {
public:
    explicit DimensionMismatch(const std::string& what)
        : DomainError("DimensionMismatch", what) {}
};

class DegenerateLattice : public DomainError {
public:
    explicit DegenerateLattice(const std::string& what)
        : DomainError("DegenerateLattice", what) {}
};

class ZeroVector : public DomainError {
public:
    explicit ZeroVector(const std::string& what)
        : DomainError("ZeroVector", what) {}
};

class InvalidLattice : public DomainError {
public:
    explicit InvalidLattice(const std::string& what)
        : DomainError("InvalidLattice", what) {}
};

class InvalidSurface : public DomainError {
public:
    explicit InvalidSurface(const std::string& what)
        : DomainError("InvalidSurface", what) {}
};

class OutOfRegime : public DomainError {
public:
    explicit OutOfRegime(const std::string& what)
        : DomainError("OutOfRegime", what) {}
};

class OutOfRange : public DomainError {
public:
    explicit OutOfRange(const std::string& what)
        : DomainError("OutOfRange", what) {}
};

class GenusMismatch : public DomainError {
public:
    explicit GenusMismatch(const std::string& what)
        : DomainError("GenusMismatch", what) {}
};

class InvalidDegree : public DomainError {
public:
    explicit InvalidDegree(const std::string& what)
        : DomainError("InvalidDegree", what) {}
};

// Malformed textual input (CLI flag values, gram strings). Maps to a usage
// error, not a domain error.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An internal cross-check between two independent computations disagreed.
// Fatal: signals a bug, never a bad input.
class ConsistencyFailure : public std::runtime_error {
public:
    explicit ConsistencyFailure(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace kumlat
