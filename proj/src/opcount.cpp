#include "linemul/opcount.hpp"

#include <array>
#include <iomanip>
#include <sstream>

namespace linemul {

Method method_from_name(const std::string& name) {
    if (name == "grid") return Method::Grid;
    if (name == "schoolbook") return Method::Schoolbook;
    if (name == "count") return Method::Count;
    throw Error("InvalidMethod", "unknown method '" + name + "'");
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Grid: return "grid";
        case Method::Schoolbook: return "schoolbook";
        case Method::Count: return "count";
    }
    return "?";
}

OpCount count_ops(const DigitString& a, const DigitString& b, Method method) {
    OpCounter counter;
    switch (method) {
        case Method::Grid:
            grid_multiply(a, b, &counter, CellMode::Multiply);
            break;
        case Method::Schoolbook:
            schoolbook_multiply(a, b, &counter);
            break;
        case Method::Count:
            grid_multiply(a, b, &counter, CellMode::UnaryCount);
            break;
    }
    return {method, counter.digit_multiplications, counter.digit_additions,
            counter.carry_operations, counter.unary_increments};
}

OpComparison compare_ops(const DigitString& a, const DigitString& b) {
    OpComparison c{count_ops(a, b, Method::Grid), count_ops(a, b, Method::Schoolbook),
                   count_ops(a, b, Method::Count),
                   static_cast<std::int64_t>(a.size()) * static_cast<std::int64_t>(b.size()),
                   false};
    c.multiplications_equal =
        c.grid.digit_multiplications == c.schoolbook.digit_multiplications;
    return c;
}

std::string render_comparison_text(const OpComparison& c) {
    const std::array<const OpCount*, 3> rows{&c.grid, &c.schoolbook, &c.count};
    std::ostringstream out;
    out << "method      multiplications  additions  carries  unary-increments\n";
    for (const OpCount* r : rows) {
        std::string name = method_name(r->method);
        name.resize(12, ' ');
        out << name << std::setw(15) << r->digit_multiplications << "  " << std::setw(9)
            << r->digit_additions << "  " << std::setw(7) << r->carry_operations << "  "
            << std::setw(16) << r->unary_increments << "\n";
    }
    out << "groups: " << c.group_count << "\n";
    out << "multiplications grid == schoolbook: "
        << (c.multiplications_equal ? "yes" : "NO") << "\n";
    return out.str();
}

namespace {

nlohmann::ordered_json opcount_json(const OpCount& o) {
    nlohmann::ordered_json j;
    j["method"] = method_name(o.method);
    j["digitMultiplications"] = o.digit_multiplications;
    j["digitAdditions"] = o.digit_additions;
    j["carryOperations"] = o.carry_operations;
    j["unaryIncrements"] = o.unary_increments;
    return j;
}

} // namespace

nlohmann::ordered_json comparison_json(const OpComparison& c) {
    nlohmann::ordered_json j;
    j["grid"] = opcount_json(c.grid);
    j["schoolbook"] = opcount_json(c.schoolbook);
    j["count"] = opcount_json(c.count);
    j["groupCount"] = c.group_count;
    j["multiplicationsEqual"] = c.multiplications_equal;
    return j;
}

} // namespace linemul
