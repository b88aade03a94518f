#pragma once

#include <stdexcept>
#include <string>

namespace heckeforge {

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct SingularSpecialization : std::domain_error {
    explicit SingularSpecialization(const std::string& what) : std::domain_error(what) {}
};

struct RankMismatch : std::invalid_argument {
    explicit RankMismatch(const std::string& what) : std::invalid_argument(what) {}
};

struct PositionOutOfRange : std::out_of_range {
    explicit PositionOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct XiNotAllowed : std::invalid_argument {
    explicit XiNotAllowed(const std::string& what) : std::invalid_argument(what) {}
};

struct RankTooSmall : std::invalid_argument {
    explicit RankTooSmall(const std::string& what) : std::invalid_argument(what) {}
};

struct NotWellDefined : std::runtime_error {
    explicit NotWellDefined(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace heckeforge
