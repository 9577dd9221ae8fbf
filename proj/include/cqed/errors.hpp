#pragma once

#include <stdexcept>
#include <string>

namespace cqed {

// Base of every error thrown by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NonPositiveUnitRate : public Error {
public:
    explicit NonPositiveUnitRate(const std::string& m) : Error(m) {}
};

class NegativeRate : public Error {
public:
    explicit NegativeRate(const std::string& m) : Error(m) {}
};

class NonFiniteParameter : public Error {
public:
    explicit NonFiniteParameter(const std::string& m) : Error(m) {}
};

class DegenerateLeadingCoefficient : public Error {
public:
    explicit DegenerateLeadingCoefficient(const std::string& m) : Error(m) {}
};

class NonConvergent : public Error {
public:
    explicit NonConvergent(const std::string& m) : Error(m) {}
};

class IntegratorDivergence : public Error {
public:
    explicit IntegratorDivergence(const std::string& m) : Error(m) {}
};

class NonConvergedDiscretization : public Error {
public:
    explicit NonConvergedDiscretization(const std::string& m) : Error(m) {}
};

class GridTooCoarse : public Error {
public:
    explicit GridTooCoarse(const std::string& m) : Error(m) {}
};

class ConfigInvalid : public Error {
public:
    explicit ConfigInvalid(const std::string& m) : Error(m) {}
};

// A solver error surfaced by the scenario runner.
class ComputeFailed : public Error {
public:
    explicit ComputeFailed(const std::string& m) : Error(m) {}
};

} // namespace cqed
