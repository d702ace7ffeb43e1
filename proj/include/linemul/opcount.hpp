#pragma once

#include <string>

#include <json.hpp>

#include "linemul/grid.hpp"

namespace linemul {

enum class Method { Grid, Schoolbook, Count };

Method method_from_name(const std::string& name); // "grid" | "schoolbook" | "count"
std::string method_name(Method m);

// Work tallies from one instrumented run. Counting conventions: a
// two-operand digit addition counts once; absorbing an incoming carry
// counts as one carryOperation, not an addition; unaryIncrements tracks
// the counting baseline only (zero for the other methods).
struct OpCount {
    Method method = Method::Grid;
    std::int64_t digit_multiplications = 0;
    std::int64_t digit_additions = 0;
    std::int64_t carry_operations = 0;
    std::int64_t unary_increments = 0;
};

// Runs the multiplication with `method` and reports measured counts.
OpCount count_ops(const DigitString& a, const DigitString& b, Method method);

// All three methods side by side.
struct OpComparison {
    OpCount grid;
    OpCount schoolbook;
    OpCount count;
    std::int64_t group_count = 0; // len(a) * len(b)
    bool multiplications_equal = false;
};

OpComparison compare_ops(const DigitString& a, const DigitString& b);

std::string render_comparison_text(const OpComparison& c);
nlohmann::ordered_json comparison_json(const OpComparison& c);

} // namespace linemul
