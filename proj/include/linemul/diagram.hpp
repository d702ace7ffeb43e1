#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linemul/digits.hpp"
#include "linemul/grid.hpp"

namespace linemul {

// Spacings are integral abstract SVG user units so every intersection
// lands on an exact half-integer coordinate.
struct DiagramConfig {
    std::int64_t line_spacing = 10;
    std::int64_t group_spacing = 110;
    double marker_radius = 2.5;
    bool show_counts = false;
    bool show_bands = false;
};

// group_spacing = 10*(base-1)+20 keeps clusters separated for any base.
DiagramConfig default_config(Base base);

// A line of slope +1 (family A, y = x + offset) or slope -1 (family B,
// y = -x + offset). A digit 0 is drawn as one dashed placeholder guide
// line that contributes no intersections.
struct DiagramLine {
    int group;       // digit index within the factor, most significant first
    int index;       // position within the group
    bool placeholder;
    std::int64_t offset;
};

// Coordinates are doubled to stay integral: the real point is (x2/2, y2/2).
struct IntersectionPoint {
    std::int64_t x2, y2;
    int i, j; // cluster key: digit indices into factor A and B

    int diagonal() const noexcept { return i + j; }
};

struct LineDiagram {
    std::vector<DiagramLine> family_a; // slope +1
    std::vector<DiagramLine> family_b; // slope -1
    std::vector<IntersectionPoint> intersections;
    DiagramConfig config;
    DigitString factor_a;
    DigitString factor_b;
};

// Lays out both families; does not compute intersections.
LineDiagram layout_lines(const DigitString& a, const DigitString& b,
                         const DiagramConfig& cfg);

// Exact pairwise intersections of the solid lines, labeled by cluster.
std::vector<IntersectionPoint> compute_intersections(const LineDiagram& d);

// layout_lines + compute_intersections, intersections stored on the diagram.
LineDiagram build_diagram(const DigitString& a, const DigitString& b,
                          const DiagramConfig& cfg);

// Points grouped by anti-diagonal, units-first, matching the readout order.
struct ReadoutBand {
    int diagonal;
    std::vector<IntersectionPoint> points;
};

std::vector<ReadoutBand> cluster_readout(const std::vector<IntersectionPoint>& points);

// Deterministic SVG 1.1; placeholders dashed, one circle per intersection,
// count labels and diagonal bands per config.
std::string render_svg(const LineDiagram& d);

// Side-by-side text view: bracketed cell products, diagonal sums, result.
std::string render_ascii(const PartialProductGrid& g);

} // namespace linemul
