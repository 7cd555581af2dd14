#pragma once

#include <stdexcept>
#include <string>

namespace linesum {

// Domain error with a stable machine-readable code, surfaced by the CLI
// as {"error": code, "detail": what()}.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

struct MalformedDirection : Error {
    explicit MalformedDirection(const std::string& d)
        : Error("malformed_direction", d) {}
};

struct InvalidDirectionSet : Error {
    explicit InvalidDirectionSet(const std::string& d)
        : Error("invalid_direction_set", d) {}
};

struct IncompatibleLineSums : Error {
    explicit IncompatibleLineSums(const std::string& d)
        : Error("incompatible_line_sums", d) {}
};

struct InconsistentTotals : Error {
    explicit InconsistentTotals(const std::string& d)
        : Error("inconsistent_totals", d) {}
};

struct NotZeroSum : Error {
    explicit NotZeroSum(const std::string& d) : Error("not_zero_sum", d) {}
};

struct DecompositionResidual : Error {
    explicit DecompositionResidual(const std::string& d)
        : Error("decomposition_residual", d) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& d)
        : Error("index_out_of_range", d) {}
};

// Thm 4.1 corollary: D < |f0|^2 or negative slack means no binary solution.
struct NoBinarySolution : Error {
    explicit NoBinarySolution(const std::string& d)
        : Error("no_binary_solution", d) {}
};

struct NonIntegerResult : Error {
    explicit NonIntegerResult(const std::string& d)
        : Error("non_integer_result", d) {}
};

struct DimensionTooLarge : Error {
    explicit DimensionTooLarge(const std::string& d)
        : Error("dimension_too_large", d) {}
};

struct NotAdmissible : Error {
    explicit NotAdmissible(const std::string& d)
        : Error("not_admissible", d) {}
};

struct DependentDirections : Error {
    explicit DependentDirections(const std::string& d)
        : Error("dependent_directions", d) {}
};

struct OverlappingRectangles : Error {
    explicit OverlappingRectangles(const std::string& d)
        : Error("overlapping_rectangles", d) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& d) : Error("parse_error", d) {}
};

}  // namespace linesum
