// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cstdio>
#include <functional>
#include <map>
#include <set>

#include "linemul/diagram.hpp"
#include "linemul/opcount.hpp"
#include "linemul/trace.hpp"
#include "support.hpp"

using namespace linemul;
using testsupport::random_factor;
using testsupport::ref_product;
using testsupport::run_cli;

namespace {

const Base b10{10};

DigitString num(const std::string& s, Base base = b10) { return parse_digits(s, base); }

bool criterion_1() {
    const auto g = build_grid(num("21"), num("23"));
    if (g.cells != std::vector<std::vector<int>>{{4, 6}, {2, 3}}) return false;
    if (diagonal_sums(g).sums != std::vector<std::int64_t>{4, 8, 3}) return false;
    return format_digits(grid_multiply(num("21"), num("23"))) == "483";
}

bool criterion_2() {
    const auto sums = diagonal_sums(build_grid(num("123"), num("321")));
    if (sums.sums != std::vector<std::int64_t>{3, 8, 14, 8, 3}) return false;
    const auto [result, ledger] = resolve_carries(sums);
    const auto& mid = ledger.steps[2]; // units-first, so index 2 is diagonal k=2
    if (mid.diagonal != 2 || mid.raw_sum != 14) return false;
    if (mid.written != std::vector<int>{4} || mid.outgoing_carry != 1) return false;
    return format_digits(result) == "39483";
}

bool criterion_3() {
    const auto d = build_diagram(num("67"), num("85"), default_config(b10));
    std::map<std::pair<int, int>, int> sizes;
    for (const auto& p : d.intersections) ++sizes[{p.i, p.j}];
    const std::multiset<int> got{sizes[{0, 0}], sizes[{0, 1}], sizes[{1, 0}], sizes[{1, 1}]};
    if (got != std::multiset<int>{48, 30, 56, 35}) return false;

    const auto t = build_trace(num("67"), num("85"));
    if (t.ledger.steps.size() != 3) return false;
    const auto& s0 = t.ledger.steps[0];
    const auto& s1 = t.ledger.steps[1];
    const auto& s2 = t.ledger.steps[2];
    if (s0.raw_sum != 35 || s0.written != std::vector<int>{5} || s0.outgoing_carry != 3)
        return false;
    if (s1.raw_sum + s1.incoming_carry != 89 || s1.written != std::vector<int>{9} ||
        s1.outgoing_carry != 8)
        return false;
    if (s2.written != std::vector<int>{5, 6}) return false;
    if (format_digits(t.result) != "5695") return false;

    const auto text = serialize_trace(t);
    if (text != serialize_trace(build_trace(num("67"), num("85")))) return false;
    return text == testsupport::read_file(std::string(LINEMUL_GOLDEN_DIR) + "/trace_67x85.json");
}

bool criterion_4() {
    return binomial_terms(num("21"), num("23")) ==
           std::vector<PolynomialTerm>{{4, 2}, {8, 1}, {3, 0}};
}

bool criterion_5() {
    std::mt19937 rng(64);
    const auto eight_a = random_factor(rng, 8, b10);
    const auto eight_b = random_factor(rng, 8, b10);
    if (count_ops(eight_a, eight_b, Method::Grid).digit_multiplications != 64) return false;
    if (count_ops(num("12345678"), num("87654321"), Method::Grid).digit_multiplications != 64)
        return false;

    std::uniform_int_distribution<int> len_pick(1, 12);
    for (int n = 0; n < 200; ++n) {
        const int la = len_pick(rng), lb = len_pick(rng);
        const auto a = random_factor(rng, la, b10);
        const auto b = random_factor(rng, lb, b10);
        const auto expected = static_cast<std::int64_t>(la) * lb;
        if (count_ops(a, b, Method::Grid).digit_multiplications != expected) return false;
        if (build_trace(a, b).group_count != expected) return false;
    }
    return true;
}

bool criterion_6() {
    std::mt19937 rng(1000);
    std::uniform_int_distribution<int> len_pick(1, 12);
    const int bases[] = {2, 10, 16};
    for (int n = 0; n < 1000; ++n) {
        const Base base{bases[n % 3]};
        const auto a = random_factor(rng, len_pick(rng), base);
        const auto b = random_factor(rng, len_pick(rng), base);
        const auto via_grid = grid_multiply(a, b);
        if (!(via_grid == schoolbook_multiply(a, b))) return false;
        if (to_value(via_grid) != ref_product(a, b)) return false;
    }
    return true;
}

bool criterion_7() {
    std::mt19937 rng(7777);
    std::uniform_int_distribution<int> len_pick(1, 4);
    const auto cfg = default_config(b10);
    for (int n = 0; n < 100; ++n) {
        const auto a = random_factor(rng, len_pick(rng), b10);
        const auto b = random_factor(rng, len_pick(rng), b10);
        const auto d = build_diagram(a, b, cfg);
        const auto g = build_grid(a, b);

        std::map<std::pair<int, int>, int> sizes;
        for (const auto& p : d.intersections) ++sizes[{p.i, p.j}];
        for (std::size_t i = 0; i < g.rows(); ++i)
            for (std::size_t j = 0; j < g.cols(); ++j)
                if (sizes[{static_cast<int>(i), static_cast<int>(j)}] != g.cells[i][j])
                    return false;

        const auto sums = diagonal_sums(g);
        for (const auto& band : cluster_readout(d.intersections))
            if (static_cast<std::int64_t>(band.points.size()) !=
                sums.sums[static_cast<std::size_t>(band.diagonal)])
                return false;

        // Separation: every inter-cluster gap beats the widest
        // nearest-neighbor spacing inside any one cluster.
        const auto& pts = d.intersections;
        std::int64_t min_inter = -1, max_intra_nn = 0;
        for (std::size_t p = 0; p < pts.size(); ++p) {
            std::int64_t nn = -1;
            for (std::size_t q = 0; q < pts.size(); ++q) {
                if (p == q) continue;
                const std::int64_t dx = pts[p].x2 - pts[q].x2, dy = pts[p].y2 - pts[q].y2;
                const std::int64_t d2 = dx * dx + dy * dy;
                if (pts[p].i == pts[q].i && pts[p].j == pts[q].j) {
                    if (nn < 0 || d2 < nn) nn = d2;
                } else if (min_inter < 0 || d2 < min_inter) {
                    min_inter = d2;
                }
            }
            if (nn > max_intra_nn) max_intra_nn = nn;
        }
        if (min_inter >= 0 && min_inter <= max_intra_nn) return false;
    }
    return true;
}

bool criterion_8() {
    for (int base = 2; base <= 16; ++base)
        for (int i = 0; i < base; ++i)
            for (int j = 0; j < base; ++j)
                if (unary_count_oracle(i, j) != i * j) return false;
    return true;
}

bool criterion_9() {
    const std::pair<const char*, const char*> cases[] = {
        {"21", "23"}, {"123", "321"}, {"67", "85"}};
    for (const auto& [fa, fb] : cases) {
        const auto a = num(fa), b = num(fb);
        const auto d = build_diagram(a, b, default_config(b10));
        const auto svg = render_svg(d);
        if (svg != render_svg(build_diagram(a, b, default_config(b10)))) return false;

        std::size_t lines = 0, dashed = 0, circles = 0;
        for (std::size_t at = svg.find("<line "); at != std::string::npos;
             at = svg.find("<line ", at + 1)) {
            ++lines;
            const auto end = svg.find('\n', at);
            if (svg.substr(at, end - at).find("stroke-dasharray") != std::string::npos)
                ++dashed;
        }
        for (std::size_t at = svg.find("<circle "); at != std::string::npos;
             at = svg.find("<circle ", at + 1))
            ++circles;

        std::size_t digit_sum = 0;
        for (int v : a.digits) digit_sum += static_cast<std::size_t>(v);
        for (int v : b.digits) digit_sum += static_cast<std::size_t>(v);
        if (lines - dashed != digit_sum) return false;
        if (circles != d.intersections.size()) return false;
    }
    return true;
}

bool criterion_10() {
    if (run_cli("multiply 21 23").output != "483\n") return false;
    if (run_cli("multiply 123 321").output != "39483\n") return false;
    if (run_cli("multiply 67 85").output != "5695\n") return false;
    if (run_cli("multiply zz 3 --base 10").exit_code != 1) return false;
    if (run_cli("multiply 21").exit_code != 2) return false;
    if (run_cli("multiply").exit_code != 2) return false;
    return true;
}

} // namespace

int main() {
    const std::pair<const char*, std::function<bool()>> criteria[] = {
        {"paper example 21x23 (grid, diagonals, result)", criterion_1},
        {"paper example 123x321 (diagonals, middle carry, result)", criterion_2},
        {"paper example 67x85 (clusters, carry chain, golden trace)", criterion_3},
        {"binomial view of 21x23", criterion_4},
        {"chessboard claim: multiplications = digits x digits", criterion_5},
        {"1000-pair method equivalence across bases 2/10/16", criterion_6},
        {"geometry fidelity and cluster separation", criterion_7},
        {"unary counting oracle, exhaustive per base", criterion_8},
        {"SVG structural counts and determinism", criterion_9},
        {"CLI contract (outputs and exit codes)", criterion_10},
    };

    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        bool ok = false;
        try {
            ok = check();
        } catch (const std::exception& e) {
            std::printf("criterion %2d: FAIL  %s (exception: %s)\n", index, name, e.what());
            ++failures;
            continue;
        }
        std::printf("criterion %2d: %s  %s\n", index, ok ? "PASS" : "FAIL", name);
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
