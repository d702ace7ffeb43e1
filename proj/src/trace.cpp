#include "linemul/trace.hpp"

namespace linemul {

StepTrace build_trace(const DigitString& a, const DigitString& b) {
    StepTrace t{a,       b, "grid", build_grid(a, b), DiagonalSums{{}, a.base},
                CarryLedger{}, DigitString{{0}, a.base}, 0};
    t.diagonals = diagonal_sums(t.grid);
    auto [result, ledger] = resolve_carries(t.diagonals);
    t.result = std::move(result);
    t.ledger = std::move(ledger);
    t.group_count = static_cast<std::int64_t>(t.grid.rows()) *
                    static_cast<std::int64_t>(t.grid.cols());
    return t;
}

nlohmann::ordered_json trace_json(const StepTrace& t) {
    nlohmann::ordered_json j;
    j["factors"] = {format_digits(t.factor_a), format_digits(t.factor_b)};
    j["base"] = t.factor_a.base.value();
    j["method"] = t.method;
    j["grid"] = t.grid.cells;
    j["diagonals"] = t.diagonals.sums;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : t.ledger.steps) {
        nlohmann::ordered_json step;
        step["diagonalIndex"] = s.diagonal;
        step["rawSum"] = s.raw_sum;
        step["incomingCarry"] = s.incoming_carry;
        step["writtenDigit"] = s.written;
        step["outgoingCarry"] = s.outgoing_carry;
        steps.push_back(std::move(step));
    }
    j["carrySteps"] = std::move(steps);
    j["result"] = format_digits(t.result);
    j["groupCount"] = t.group_count;
    return j;
}

std::string serialize_trace(const StepTrace& t) {
    return trace_json(t).dump(2) + "\n";
}

} // namespace linemul
