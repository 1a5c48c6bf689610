#pragma once

#include <stdexcept>
#include <string>

namespace holoflow {

// Exception taxonomy. Every precondition violation maps onto one of these;
// numeric code never returns sentinel values.

struct ZeroDenominatorError : std::domain_error {
    explicit ZeroDenominatorError(const std::string& what) : std::domain_error(what) {}
};

struct IndexError : std::out_of_range {
    explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

struct SingularMatrixError : std::domain_error {
    explicit SingularMatrixError(const std::string& what) : std::domain_error(what) {}
};

struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

struct RecipeError : std::invalid_argument {
    explicit RecipeError(const std::string& what) : std::invalid_argument(what) {}
};

struct ProfileError : std::invalid_argument {
    explicit ProfileError(const std::string& what) : std::invalid_argument(what) {}
};

struct SpecError : std::invalid_argument {
    explicit SpecError(const std::string& what) : std::invalid_argument(what) {}
};

struct PoleError : std::domain_error {
    explicit PoleError(const std::string& what) : std::domain_error(what) {}
};

struct DegenerateFlowError : std::domain_error {
    explicit DegenerateFlowError(const std::string& what) : std::domain_error(what) {}
};

} // namespace holoflow
