#include "bookem/svg.hpp"

#include <algorithm>
#include <array>

namespace bookem {

namespace {

constexpr int kSpacing = 40;
constexpr int kMargin = 30;
constexpr int kLabelSpace = 28;
constexpr int kParallelStep = 14;

// Named strokes in page-index order.
constexpr std::array<const char*, 8> kPalette = {
    "teal", "darkorange", "slateblue", "crimson",
    "seagreen", "goldenrod", "orchid", "steelblue",
};

struct Arc {
    int x1, x2, rx, ry;
    int page;
    EdgeId edge;
};

std::string arc_path(const Arc& a, int baseline) {
    return "M " + std::to_string(a.x1) + " " + std::to_string(baseline) + " A " +
           std::to_string(a.rx) + " " + std::to_string(a.ry) + " 0 0 1 " + std::to_string(a.x2) +
           " " + std::to_string(baseline);
}

}  // namespace

std::string render_arc_diagram(const Multigraph& g, const CyclicOrder& omega,
                               const PageColoring& c, const RenderOptions& opts) {
    if (omega.size() != g.vertex_count()) throw BadParameter("order does not match graph");
    if (static_cast<int>(c.page_of.size()) != g.edge_count())
        throw BadParameter("coloring does not match graph");
    std::vector<int> pos = omega.positions();

    const int n = g.vertex_count();
    auto x_of = [&](int position) { return kMargin + kSpacing * position; };

    std::vector<Arc> arcs;
    int max_ry = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int i = pos[static_cast<size_t>(g.edge(e).a)];
        int j = pos[static_cast<size_t>(g.edge(e).b)];
        if (i > j) std::swap(i, j);
        Arc a;
        a.x1 = x_of(i);
        a.x2 = x_of(j);
        a.rx = (a.x2 - a.x1) / 2;
        a.ry = a.rx + kParallelStep * g.parallel_copy_index(e);
        a.page = c[e];
        a.edge = e;
        max_ry = std::max(max_ry, a.ry);
        arcs.push_back(a);
    }

    const int baseline = kMargin + max_ry;
    const int width = 2 * kMargin + kSpacing * std::max(n - 1, 0);
    const int height = baseline + kLabelSpace;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " + std::to_string(width) +
           " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Spine, then arcs page by page, then vertices on top.
    if (n > 0) {
        svg += "<line x1=\"" + std::to_string(x_of(0)) + "\" y1=\"" + std::to_string(baseline) +
               "\" x2=\"" + std::to_string(x_of(n - 1)) + "\" y2=\"" + std::to_string(baseline) +
               "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    int pages = 0;
    for (int p : c.page_of) pages = std::max(pages, p + 1);
    for (int p = 0; p < pages; ++p) {
        for (const Arc& a : arcs) {
            if (a.page != p) continue;
            svg += "<path d=\"" + arc_path(a, baseline) + "\" fill=\"none\" stroke=\"" +
                   kPalette[static_cast<size_t>(p) % kPalette.size()] + "\" stroke-width=\"2\"/>\n";
        }
    }
    for (const Arc& a : arcs) {  // uncolored edges in gray dashes
        if (a.page >= 0) continue;
        svg += "<path d=\"" + arc_path(a, baseline) +
               "\" fill=\"none\" stroke=\"gray\" stroke-dasharray=\"6 3\" stroke-width=\"2\"/>\n";
    }

    if (opts.highlight_conflicts) {
        std::vector<char> bad(static_cast<size_t>(g.edge_count()), 0);
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
                if (c[e] < 0 || c[e] != c[f]) continue;
                if (g.edge(e).shares_vertex(g.edge(f)) || crosses_at(pos, g.edge(e), g.edge(f)))
                    bad[static_cast<size_t>(e)] = bad[static_cast<size_t>(f)] = 1;
            }
        }
        for (const Arc& a : arcs) {
            if (!bad[static_cast<size_t>(a.edge)]) continue;
            svg += "<path d=\"" + arc_path(a, baseline) +
                   "\" fill=\"none\" stroke=\"red\" stroke-dasharray=\"4 2\" stroke-width=\"2\"/>\n";
        }
    }

    for (int i = 0; i < n; ++i) {
        int x = x_of(i);
        svg += "<circle cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(baseline) +
               "\" r=\"3\" fill=\"black\"/>\n";
        svg += "<text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(baseline + 18) +
               "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" +
               std::to_string(omega.sequence[static_cast<size_t>(i)]) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace bookem
