#pragma once

#include <stdexcept>
#include <string>

namespace ifslab {

// Base class for all library errors. Every error carries a stable machine
// readable code (used by the CLI for structured error JSON) and a human
// readable message.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero")
        : Error("division_by_zero", msg) {}
};

// Raised when adaptive refinement cannot separate a value from zero. This
// usually means a generic witness accidentally satisfies an algebraic
// relation and should be redeclared as algebraic.
struct IndeterminateSign : Error {
    explicit IndeterminateSign(const std::string& msg)
        : Error("indeterminate_sign", msg) {}
};

struct SingletonAttractor : Error {
    explicit SingletonAttractor(const std::string& msg = "attractor is a single point")
        : Error("singleton_attractor", msg) {}
};

struct OracleBudgetExceeded : Error {
    explicit OracleBudgetExceeded(const std::string& msg)
        : Error("oracle_budget_exceeded", msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg)
        : Error("budget_exceeded", msg) {}
};

struct TruncatedGraph : Error {
    explicit TruncatedGraph(const std::string& msg =
                                "graph exploration was truncated; analysis requires a closed graph")
        : Error("truncated_graph", msg) {}
};

struct MultipleSinkComponents : Error {
    explicit MultipleSinkComponents(const std::string& msg)
        : Error("multiple_sink_components", msg) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& msg = "edge sequence is not an admissible path")
        : Error("not_admissible", msg) {}
};

struct ZeroSpectralRadius : Error {
    explicit ZeroSpectralRadius(const std::string& msg = "cycle matrix is nilpotent")
        : Error("zero_spectral_radius", msg) {}
};

struct NonSquare : Error {
    explicit NonSquare(const std::string& msg = "matrix is not square")
        : Error("non_square", msg) {}
};

struct PathBudgetExceeded : Error {
    explicit PathBudgetExceeded(const std::string& msg)
        : Error("path_budget_exceeded", msg) {}
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& msg)
        : Error("parse_error",
                "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line;
    int col;
};

struct ValidationError : Error {
    explicit ValidationError(const std::string& msg) : Error("validation_error", msg) {}
};

} // namespace ifslab
