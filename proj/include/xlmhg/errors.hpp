#ifndef XLMHG_ERRORS_HPP
#define XLMHG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace xlmhg {

/// Raised when an argument lies outside the domain of an operation
/// (illegal hypergeometric indices, statistic outside (0,1), bad X/L, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Raised by the brute-force oracle when a universe is too large to enumerate.
class SizeError : public std::length_error {
public:
    explicit SizeError(const std::string& what) : std::length_error(what) {}
};

/// Malformed input documents (ranked lists, membership files, config files).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Inconsistent simulation settings.
class ConfigError : public std::invalid_argument {
public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace xlmhg

#endif  // XLMHG_ERRORS_HPP
