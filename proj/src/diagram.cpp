#include "linemul/diagram.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

namespace linemul {

DiagramConfig default_config(Base base) {
    DiagramConfig cfg;
    cfg.line_spacing = 10;
    cfg.group_spacing = 10 * (base.value() - 1) + 20;
    cfg.marker_radius = 2.5;
    return cfg;
}

namespace {

void validate_config(const DiagramConfig& cfg, Base base) {
    if (cfg.line_spacing <= 0 || cfg.group_spacing <= 0 || cfg.marker_radius <= 0)
        throw InvalidConfig("spacings and marker radius must be positive");
    if (cfg.group_spacing <= (base.value() - 1) * cfg.line_spacing)
        throw InvalidConfig("group spacing must exceed (base-1) * line spacing");
}

// One group per digit; a 0 gets a single dashed placeholder at the
// group's first slot so the grid of groups stays intact.
std::vector<DiagramLine> make_family(const DigitString& f,
                                     std::int64_t (*offset_of)(int, int, const DigitString&,
                                                               const DiagramConfig&),
                                     const DiagramConfig& cfg) {
    std::vector<DiagramLine> lines;
    for (int g = 0; g < static_cast<int>(f.size()); ++g) {
        const int digit = f.digits[static_cast<std::size_t>(g)];
        if (digit == 0) {
            lines.push_back({g, 0, true, offset_of(g, 0, f, cfg)});
            continue;
        }
        for (int s = 0; s < digit; ++s)
            lines.push_back({g, s, false, offset_of(g, s, f, cfg)});
    }
    return lines;
}

std::int64_t offset_a(int group, int index, const DigitString&, const DiagramConfig& cfg) {
    return -(group * cfg.group_spacing + index * cfg.line_spacing);
}

std::int64_t offset_b(int group, int index, const DigitString& f, const DiagramConfig& cfg) {
    return (static_cast<std::int64_t>(f.size()) - 1 - group) * cfg.group_spacing +
           index * cfg.line_spacing;
}

std::string fmt1(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

} // namespace

LineDiagram layout_lines(const DigitString& a, const DigitString& b,
                         const DiagramConfig& cfg) {
    if (!(a.base == b.base))
        throw BaseMismatch("factors use base " + std::to_string(a.base.value()) +
                           " and base " + std::to_string(b.base.value()));
    validate_config(cfg, a.base);

    LineDiagram d{{}, {}, {}, cfg, a, b};
    d.family_a = make_family(a, offset_a, cfg);
    d.family_b = make_family(b, offset_b, cfg);
    return d;
}

std::vector<IntersectionPoint> compute_intersections(const LineDiagram& d) {
    // y = x + ca meets y = -x + cb at x = (cb-ca)/2, y = (cb+ca)/2.
    std::vector<IntersectionPoint> points;
    for (const auto& la : d.family_a) {
        if (la.placeholder) continue;
        for (const auto& lb : d.family_b) {
            if (lb.placeholder) continue;
            points.push_back({lb.offset - la.offset, lb.offset + la.offset,
                              la.group, lb.group});
        }
    }
    return points;
}

LineDiagram build_diagram(const DigitString& a, const DigitString& b,
                          const DiagramConfig& cfg) {
    LineDiagram d = layout_lines(a, b, cfg);
    d.intersections = compute_intersections(d);
    return d;
}

std::vector<ReadoutBand> cluster_readout(const std::vector<IntersectionPoint>& points) {
    std::map<int, std::vector<IntersectionPoint>, std::greater<>> by_diag;
    for (const auto& p : points) by_diag[p.diagonal()].push_back(p);
    std::vector<ReadoutBand> bands;
    bands.reserve(by_diag.size());
    for (auto& [k, pts] : by_diag) bands.push_back({k, std::move(pts)});
    return bands;
}

std::string render_svg(const LineDiagram& d) {
    const auto& cfg = d.config;
    const std::int64_t margin2 = 4 * cfg.line_spacing; // doubled units

    std::int64_t ca_min = 0, ca_max = 0, cb_min = 0, cb_max = 0;
    bool first = true;
    for (const auto& l : d.family_a) {
        ca_min = first ? l.offset : std::min(ca_min, l.offset);
        ca_max = first ? l.offset : std::max(ca_max, l.offset);
        first = false;
    }
    first = true;
    for (const auto& l : d.family_b) {
        cb_min = first ? l.offset : std::min(cb_min, l.offset);
        cb_max = first ? l.offset : std::max(cb_max, l.offset);
        first = false;
    }

    struct Seg {
        double x1, y1, x2, y2;
        bool dashed;
    };
    std::vector<Seg> segs;
    std::int64_t bx_min = 0, bx_max = 0, by_min = 0, by_max = 0;
    bool bfirst = true;
    auto grow = [&](std::int64_t x2, std::int64_t y2) {
        bx_min = bfirst ? x2 : std::min(bx_min, x2);
        bx_max = bfirst ? x2 : std::max(bx_max, x2);
        by_min = bfirst ? y2 : std::min(by_min, y2);
        by_max = bfirst ? y2 : std::max(by_max, y2);
        bfirst = false;
    };

    for (const auto& l : d.family_a) {
        const std::int64_t x0 = cb_min - l.offset - margin2;
        const std::int64_t x1 = cb_max - l.offset + margin2;
        grow(x0, x0 + 2 * l.offset);
        grow(x1, x1 + 2 * l.offset);
        segs.push_back({double(x0), double(x0 + 2 * l.offset), double(x1),
                        double(x1 + 2 * l.offset), l.placeholder});
    }
    for (const auto& l : d.family_b) {
        const std::int64_t x0 = l.offset - ca_max - margin2;
        const std::int64_t x1 = l.offset - ca_min + margin2;
        grow(x0, -x0 + 2 * l.offset);
        grow(x1, -x1 + 2 * l.offset);
        segs.push_back({double(x0), double(-x0 + 2 * l.offset), double(x1),
                        double(-x1 + 2 * l.offset), l.placeholder});
    }

    const double pad = 10.0;
    // Doubled coords to SVG user units; SVG's y axis points down.
    auto sx = [&](double x2) { return (x2 - double(bx_min)) / 2.0 + pad; };
    auto sy = [&](double y2) { return (double(by_max) - y2) / 2.0 + pad; };
    const double width = double(bx_max - bx_min) / 2.0 + 2 * pad;
    const double height = double(by_max - by_min) / 2.0 + 2 * pad;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << fmt1(width) << "\" height=\"" << fmt1(height) << "\" viewBox=\"0 0 "
        << fmt1(width) << " " << fmt1(height) << "\">\n";
    out << "<title>" << format_digits(d.factor_a) << " x " << format_digits(d.factor_b)
        << " (base " << d.factor_a.base.value() << ")</title>\n";

    const auto bands = cluster_readout(d.intersections);

    if (cfg.show_bands) {
        for (const auto& band : bands) {
            std::int64_t ylo = band.points.front().y2, yhi = ylo;
            for (const auto& p : band.points) {
                ylo = std::min(ylo, p.y2);
                yhi = std::max(yhi, p.y2);
            }
            const double top = sy(double(yhi) + double(cfg.line_spacing));
            const double bot = sy(double(ylo) - double(cfg.line_spacing));
            out << "<rect x=\"0\" y=\"" << fmt1(top) << "\" width=\"" << fmt1(width)
                << "\" height=\"" << fmt1(bot - top)
                << "\" fill=\"#dce6f5\" opacity=\"0.6\"/>\n";
        }
    }

    for (const auto& s : segs) {
        out << "<line x1=\"" << fmt1(sx(s.x1)) << "\" y1=\"" << fmt1(sy(s.y1))
            << "\" x2=\"" << fmt1(sx(s.x2)) << "\" y2=\"" << fmt1(sy(s.y2)) << "\" stroke=\""
            << (s.dashed ? "#999999" : "#222222") << "\" stroke-width=\"1.5\"";
        if (s.dashed) out << " stroke-dasharray=\"6,4\"";
        out << "/>\n";
    }

    for (const auto& p : d.intersections) {
        out << "<circle cx=\"" << fmt1(sx(double(p.x2))) << "\" cy=\""
            << fmt1(sy(double(p.y2))) << "\" r=\"" << fmt1(cfg.marker_radius)
            << "\" fill=\"#c0392b\"/>\n";
    }

    if (cfg.show_counts) {
        for (const auto& band : bands) {
            double xsum = 0, ysum = 0;
            for (const auto& p : band.points) {
                xsum += double(p.x2);
                ysum += double(p.y2);
            }
            const double n = double(band.points.size());
            out << "<text x=\"" << fmt1(sx(xsum / n)) << "\" y=\"" << fmt1(sy(ysum / n))
                << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#1a5276\">"
                << band.points.size() << "</text>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

std::string render_ascii(const PartialProductGrid& g) {
    const auto sums = diagonal_sums(g);
    const auto result = resolve_carries(sums).first;

    std::size_t cell_width = 1;
    for (const auto& row : g.cells)
        for (int c : row) cell_width = std::max(cell_width, std::to_string(c).size());

    std::ostringstream out;
    out << format_digits(g.factor_a) << " x " << format_digits(g.factor_b) << "  (base "
        << g.base.value() << ")\n\n";
    for (const auto& row : g.cells) {
        out << " ";
        for (int c : row) {
            std::string s = std::to_string(c);
            out << " (" << std::string(cell_width - s.size(), ' ') << s << ")";
        }
        out << "\n";
    }
    out << "\ndiagonals: ";
    for (std::size_t k = 0; k < sums.sums.size(); ++k) {
        if (k) out << " ";
        out << sums.sums[k];
    }
    out << "\nresult:    " << format_digits(result) << "\n";
    return out.str();
}

} // namespace linemul
