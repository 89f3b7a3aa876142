#pragma once

#include <stdexcept>
#include <string>

namespace grushin {

/// Argument outside an operation's admissible domain.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// An iterative scheme did not reach its tolerance within its budget.
class NonConvergence : public std::runtime_error {
public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// An integrand produced NaN or infinity at an interior node.
class NonFiniteIntegrand : public std::runtime_error {
public:
    explicit NonFiniteIntegrand(const std::string& what) : std::runtime_error(what) {}
};

/// A slab set fails the nesting checks required by the rearrangement.
class NotSchwarzSymmetric : public std::runtime_error {
public:
    explicit NotSchwarzSymmetric(const std::string& what) : std::runtime_error(what) {}
};

/// A profile carries too few usable points for the requested diagnostic.
class DegenerateProfile : public std::runtime_error {
public:
    explicit DegenerateProfile(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace grushin
