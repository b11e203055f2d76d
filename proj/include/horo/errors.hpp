#pragma once

#include <stdexcept>
#include <string>

namespace horo {

struct ModulusMismatch : std::invalid_argument {
    explicit ModulusMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct IdenticalEnds : std::invalid_argument {
    explicit IdenticalEnds(const std::string& what) : std::invalid_argument(what) {}
};

struct RadiusTooLarge : std::invalid_argument {
    explicit RadiusTooLarge(const std::string& what) : std::invalid_argument(what) {}
};

struct TraceTooSmall : std::invalid_argument {
    explicit TraceTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct ParamsNotSquare : std::invalid_argument {
    explicit ParamsNotSquare(const std::string& what) : std::invalid_argument(what) {}
};

struct UnknownSuite : std::invalid_argument {
    explicit UnknownSuite(const std::string& what) : std::invalid_argument(what) {}
};

struct BadFormat : std::invalid_argument {
    explicit BadFormat(const std::string& what) : std::invalid_argument(what) {}
};

struct MissingSeed : std::invalid_argument {
    explicit MissingSeed(const std::string& what) : std::invalid_argument(what) {}
};

struct ParseError : std::invalid_argument {
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

struct IncidenceViolation : std::logic_error {
    explicit IncidenceViolation(const std::string& what) : std::logic_error(what) {}
};

struct NonConvergence : std::runtime_error {
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

} // namespace horo
