#ifndef DLPCERT_ERRORS_HPP
#define DLPCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dlpcert {

// Thrown when an enumeration or dense expansion would exceed the configured
// work budget.  Callers are expected to catch this and refuse, never truncate.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedField : std::runtime_error {
    explicit UnsupportedField(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct DivisibilityError : std::runtime_error {
    explicit DivisibilityError(const std::string& what) : std::runtime_error(what) {}
};

struct InfeasibleInput : std::runtime_error {
    explicit InfeasibleInput(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateInput : std::runtime_error {
    explicit DegenerateInput(const std::string& what) : std::runtime_error(what) {}
};

struct NoRoot : std::runtime_error {
    explicit NoRoot(const std::string& what) : std::runtime_error(what) {}
};

struct NotSymmetric : std::runtime_error {
    explicit NotSymmetric(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dlpcert

#endif
