#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simsheaf/format.hpp"
#include "simsheaf/graph.hpp"
#include "simsheaf/sheaf.hpp"

namespace simsheaf {

/// Edge list with both similarity values and the negative-correlation
/// flag, one row per retained pair.
inline void emit_edgelist(const SimilarityGraph& g, std::ostream& out,
                          TableFormat fmt = TableFormat::csv) {
    const char sep = separator(fmt);
    out << "source" << sep << "target" << sep << "cosine" << sep << "pearson" << sep
        << "negative" << '\n';
    for (const auto& e : g.edges)
        out << csv_field(e.source, sep) << sep << csv_field(e.target, sep) << sep
            << format_double(e.cos) << sep << format_double(e.r) << sep
            << (e.negative ? "true" : "false") << '\n';
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

} // namespace detail

/// Undirected DOT graph.  Every node appears as a statement even when
/// isolated; negative-correlation edges render dashed.
inline void emit_dot(const SimilarityGraph& g, std::ostream& out) {
    out << "graph G {\n";
    for (const auto& node : g.nodes) out << "  " << detail::dot_quote(node) << ";\n";
    for (const auto& e : g.edges) {
        out << "  " << detail::dot_quote(e.source) << " -- " << detail::dot_quote(e.target)
            << " [weight=" << format_double(e.cos);
        if (e.negative) out << ", style=dashed";
        out << "];\n";
    }
    out << "}\n";
}

/// Pajek network: a *Vertices section in node order with 1-based ids,
/// then a *Edges section with the cosine as edge weight.  Both sections
/// appear even when empty.
inline void emit_pajek(const SimilarityGraph& g, std::ostream& out) {
    out << "*Vertices " << g.nodes.size() << '\n';
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        out << (i + 1) << " \"" << g.nodes[i] << "\"\n";
    out << "*Edges\n";
    const auto index_of = [&](const std::string& label) {
        return static_cast<std::size_t>(std::find(g.nodes.begin(), g.nodes.end(), label) -
                                        g.nodes.begin()) +
               1;
    };
    for (const auto& e : g.edges)
        out << index_of(e.source) << ' ' << index_of(e.target) << ' ' << format_double(e.cos)
            << '\n';
}

struct CloudExport {
    std::string csv;
    std::string svg;
};

namespace detail {

inline double svg_x(double cos) { return 60.0 + cos * 560.0; }
inline double svg_y(double r) { return 230.0 - r * 210.0; }

// Clip a sheaf line to r in [-1, 1] before mapping, so the drawn segment
// stays a straight line inside the plot rectangle.
inline void svg_line(std::ostream& out, const SheafLine& line, std::string_view color) {
    const double reach = 1.0 / line.slope;
    const double c0 = std::max(0.0, line.cos_at_r0 - reach);
    const double c1 = std::min(1.0, line.cos_at_r0 + reach);
    out << "  <line x1=\"" << fixed2(svg_x(c0)) << "\" y1=\"" << fixed2(svg_y(line.slope * (c0 - line.cos_at_r0)))
        << "\" x2=\"" << fixed2(svg_x(c1)) << "\" y2=\"" << fixed2(svg_y(line.slope * (c1 - line.cos_at_r0)))
        << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"/>\n";
}

} // namespace detail

/// Scatter of (cos, r) pairs with the two envelope lines, as a CSV table
/// and a 640x480 SVG.  The CSV carries the points first, then sampled
/// rows for each envelope line tagged envelope:min / envelope:max.
inline CloudExport emit_cloud(std::span<const CloudPoint> points, const Envelope& env) {
    CloudExport out;

    std::ostringstream csv;
    csv << "pair,cos,r,a,b\n";
    for (const auto& p : points)
        csv << csv_field(p.first + "|" + p.second, ',') << ',' << format_double(p.cos) << ','
            << format_double(p.r) << ',' << format_double(p.a) << ',' << format_double(p.b)
            << '\n';
    for (const auto& [tag, line] :
         {std::pair{"envelope:min", env.min_line}, std::pair{"envelope:max", env.max_line}})
        for (int i = 0; i <= 10; ++i) {
            const double c = i / 10.0;
            csv << tag << ',' << format_double(c) << ',' << format_double(predict_r(line, c))
                << ',' << format_double(line.a) << ',' << format_double(line.b) << '\n';
        }
    out.csv = csv.str();

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"480\" "
           "viewBox=\"0 0 640 480\">\n"
        << "  <rect x=\"60\" y=\"20\" width=\"560\" height=\"420\" fill=\"none\" "
           "stroke=\"black\"/>\n"
        << "  <line x1=\"60\" y1=\"230\" x2=\"620\" y2=\"230\" stroke=\"#cccccc\"/>\n"
        << "  <text x=\"340\" y=\"468\" text-anchor=\"middle\">Cos</text>\n"
        << "  <text x=\"20\" y=\"230\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
           "230)\">r</text>\n"
        << "  <text x=\"60\" y=\"456\" text-anchor=\"middle\">0</text>\n"
        << "  <text x=\"620\" y=\"456\" text-anchor=\"middle\">1</text>\n"
        << "  <text x=\"48\" y=\"444\" text-anchor=\"end\">-1</text>\n"
        << "  <text x=\"48\" y=\"24\" text-anchor=\"end\">1</text>\n";
    detail::svg_line(svg, env.min_line, "#1f77b4");
    detail::svg_line(svg, env.max_line, "#d62728");
    for (const auto& p : points) {
        const double x = std::clamp(detail::svg_x(p.cos), 60.0, 620.0);
        const double y = std::clamp(detail::svg_y(p.r), 20.0, 440.0);
        svg << "  <circle cx=\"" << detail::fixed2(x) << "\" cy=\"" << detail::fixed2(y)
            << "\" r=\"3\" fill=\"black\" fill-opacity=\"0.6\"/>\n";
    }
    svg << "</svg>\n";
    out.svg = svg.str();
    return out;
}

} // namespace simsheaf
