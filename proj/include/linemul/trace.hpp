#pragma once

#include <string>

#include <json.hpp>

#include "linemul/grid.hpp"

namespace linemul {

// Everything one multiplication run writes down: the grid, the diagonal
// totals, every carry step, and the result.
struct StepTrace {
    DigitString factor_a;
    DigitString factor_b;
    std::string method = "grid";
    PartialProductGrid grid;
    DiagonalSums diagonals;     // most-significant first
    CarryLedger ledger;         // units-first
    DigitString result;
    std::int64_t group_count = 0; // rows * cols
};

StepTrace build_trace(const DigitString& a, const DigitString& b);

// Fixed key order: factors, base, method, grid, diagonals, carrySteps,
// result, groupCount. grid and diagonals are most-significant-first,
// carrySteps units-first. writtenDigit is always an array of digits
// (most-significant first); only the leftmost diagonal's step can hold
// more than one.
nlohmann::ordered_json trace_json(const StepTrace& t);

// trace_json, dumped with 2-space indent and a trailing newline.
std::string serialize_trace(const StepTrace& t);

} // namespace linemul
