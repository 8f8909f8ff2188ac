#pragma once

#include <stdexcept>
#include <string>

namespace kiss {

// Error conditions raised by the exact pipeline. Everything that is data
// rather than a usage error (e.g. kissing violations) is reported through
// result structs, not exceptions.

struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string& what) : std::domain_error(what) {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct DuplicateVector : std::invalid_argument {
    explicit DuplicateVector(const std::string& what) : std::invalid_argument(what) {}
};

struct NonUnitVector : std::invalid_argument {
    explicit NonUnitVector(const std::string& what) : std::invalid_argument(what) {}
};

struct BasisMismatch : std::invalid_argument {
    explicit BasisMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct BasisError : std::invalid_argument {
    explicit BasisError(const std::string& what) : std::invalid_argument(what) {}
};

struct TooLarge : std::invalid_argument {
    explicit TooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct IncompatibleWithBasis : std::invalid_argument {
    explicit IncompatibleWithBasis(const std::string& what) : std::invalid_argument(what) {}
};

struct ConstructionMismatch : std::logic_error {
    explicit ConstructionMismatch(const std::string& what) : std::logic_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kiss
