#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linemul/diagram.hpp"
#include "linemul/opcount.hpp"
#include "linemul/trace.hpp"

namespace {

using namespace linemul;

struct Args {
    std::string factor_a;
    std::string factor_b;
    int base = 10;
    std::string method = "grid";
    std::string out_path;
    std::string format;
    bool show_counts = false;
    bool show_bands = false;
};

void add_common(CLI::App* cmd, Args& args) {
    cmd->add_option("A", args.factor_a, "first factor")->required();
    cmd->add_option("B", args.factor_b, "second factor")->required();
    cmd->add_option("--base", args.base, "radix, 2..16 (default 10)");
    cmd->add_option("--out", args.out_path, "write output to a file instead of stdout");
}

void write_output(const Args& args, const std::string& text) {
    if (args.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(args.out_path, std::ios::binary);
    if (!f) throw Error("IoError", "cannot open '" + args.out_path + "' for writing");
    f << text;
}

DigitString multiply_with(const DigitString& a, const DigitString& b, Method m) {
    switch (m) {
        case Method::Schoolbook: return schoolbook_multiply(a, b);
        case Method::Count: return grid_multiply(a, b, nullptr, CellMode::UnaryCount);
        case Method::Grid: break;
    }
    return grid_multiply(a, b);
}

int run(int argc, char** argv) {
    CLI::App app{"line-crossing multiplication: multiply, draw, trace, compare"};
    app.require_subcommand(1);

    Args args;

    auto* multiply = app.add_subcommand("multiply", "print the product");
    add_common(multiply, args);
    multiply->add_option("--method", args.method, "grid | schoolbook | count")
        ->check(CLI::IsMember({"grid", "schoolbook", "count"}));

    auto* render = app.add_subcommand("render", "draw the line diagram (svg) or grid (ascii)");
    add_common(render, args);
    render->add_option("--format", args.format, "svg | ascii (default svg)")
        ->check(CLI::IsMember({"svg", "ascii"}));
    render->add_flag("--show-counts", args.show_counts, "label each diagonal band's count");
    render->add_flag("--show-bands", args.show_bands, "shade the readout bands");

    auto* trace = app.add_subcommand("trace", "emit the step-by-step JSON trace");
    add_common(trace, args);

    auto* compare = app.add_subcommand("compare", "grid vs schoolbook, with a value check");
    add_common(compare, args);

    auto* opcount = app.add_subcommand("opcount", "instrumented operation counts per method");
    add_common(opcount, args);
    opcount->add_option("--format", args.format, "plain | json (default plain)")
        ->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    const Base base{args.base};
    const DigitString a = parse_digits(args.factor_a, base);
    const DigitString b = parse_digits(args.factor_b, base);

    if (multiply->parsed()) {
        write_output(args, format_digits(multiply_with(a, b, method_from_name(args.method))) + "\n");
    } else if (render->parsed()) {
        if (args.format == "ascii") {
            write_output(args, render_ascii(build_grid(a, b)));
        } else {
            DiagramConfig cfg = default_config(base);
            cfg.show_counts = args.show_counts;
            cfg.show_bands = args.show_bands;
            write_output(args, render_svg(build_diagram(a, b, cfg)));
        }
    } else if (trace->parsed()) {
        write_output(args, serialize_trace(build_trace(a, b)));
    } else if (compare->parsed()) {
        const DigitString via_grid = grid_multiply(a, b);
        const DigitString via_school = schoolbook_multiply(a, b);
        const bool digits_match = via_grid == via_school;
        const bool value_match = to_value(via_grid) == to_value(a) * to_value(b);
        std::ostringstream out;
        out << "grid:       " << format_digits(via_grid) << "\n";
        out << "schoolbook: " << format_digits(via_school) << "\n";
        out << "value check (big-integer): " << (value_match ? "ok" : "FAILED") << "\n";
        out << (digits_match && value_match ? "VERIFIED" : "MISMATCH") << "\n";
        write_output(args, out.str());
        if (!(digits_match && value_match)) return 1;
    } else if (opcount->parsed()) {
        const OpComparison cmp = compare_ops(a, b);
        if (args.format == "json")
            write_output(args, comparison_json(cmp).dump(2) + "\n");
        else
            write_output(args, render_comparison_text(cmp));
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const linemul::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
