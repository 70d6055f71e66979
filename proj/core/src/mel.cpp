#include "bookem/mel.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace bookem {

namespace {

struct LineScanner {
    std::string_view text;
    size_t at = 0;
    int line_no = 0;

    // Next non-blank, non-comment line; empty optional at end of input.
    std::optional<std::string_view> next() {
        while (at < text.size()) {
            size_t end = text.find('\n', at);
            if (end == std::string_view::npos) end = text.size();
            std::string_view line = text.substr(at, end - at);
            at = end + 1;
            ++line_no;
            size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string_view::npos) continue;
            if (line[first] == '#') continue;
            return line;
        }
        return std::nullopt;
    }
};

std::vector<std::string> tokens_of(std::string_view line) {
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

long long parse_int(const std::string& tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
    return value;
}

}  // namespace

Multigraph read_mel(std::string_view text) {
    LineScanner scan{text};

    auto header = scan.next();
    if (!header) throw ParseError("missing header line", scan.line_no);
    auto head_tokens = tokens_of(*header);
    if (head_tokens.size() != 2) throw ParseError("header must be 'n m'", scan.line_no);
    long long n = parse_int(head_tokens[0], scan.line_no);
    long long m = parse_int(head_tokens[1], scan.line_no);
    if (n < 0 || m < 0 || n > 1'000'000 || m > 10'000'000)
        throw ParseError("header out of range", scan.line_no);

    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(static_cast<size_t>(m));
    for (long long i = 0; i < m; ++i) {
        auto line = scan.next();
        if (!line) throw ParseError("expected " + std::to_string(m) + " edges, got " +
                                        std::to_string(i), scan.line_no);
        auto toks = tokens_of(*line);
        if (toks.size() != 2) throw ParseError("edge line must be 'u v'", scan.line_no);
        long long u = parse_int(toks[0], scan.line_no);
        long long v = parse_int(toks[1], scan.line_no);
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError("vertex index out of range", scan.line_no);
        if (u == v)
            throw LoopRejected("loop at line " + std::to_string(scan.line_no));
        edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
    if (scan.next()) throw ParseError("trailing content after edge list", scan.line_no);
    return Multigraph(static_cast<int>(n), edges);
}

std::string write_mel(const Multigraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const Edge& e : g.edges())
        out += std::to_string(e.a) + " " + std::to_string(e.b) + "\n";
    return out;
}

namespace {

std::string edge_token(const Multigraph& g, EdgeId e) {
    std::string tok = std::to_string(g.edge(e).a) + "-" + std::to_string(g.edge(e).b);
    int copy = g.parallel_copy_index(e);
    if (copy > 0) tok += "#" + std::to_string(copy);
    return tok;
}

}  // namespace

std::string write_embedding(const Multigraph& g, const CyclicOrder& omega, const PageColoring& c) {
    if (omega.size() != g.vertex_count()) throw BadParameter("order does not match graph");
    if (static_cast<int>(c.page_of.size()) != g.edge_count())
        throw BadParameter("coloring does not match graph");
    omega.positions();  // validates the permutation

    std::string out = "order:";
    for (Vertex v : omega.sequence) out += " " + std::to_string(v);
    out += "\n";

    int pages = 0;
    for (int p : c.page_of) pages = std::max(pages, p + 1);
    for (int p = 0; p < pages; ++p) {
        out += "page " + std::to_string(p) + ":";
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (c[e] == p) out += " " + edge_token(g, e);
        out += "\n";
    }
    return out;
}

std::pair<CyclicOrder, PageColoring> read_embedding(std::string_view text, const Multigraph& g) {
    LineScanner scan{text};

    auto order_line = scan.next();
    if (!order_line) throw ParseError("missing order line", scan.line_no);
    auto toks = tokens_of(*order_line);
    if (toks.empty() || toks[0] != "order:")
        throw ParseError("first line must start with 'order:'", scan.line_no);
    if (static_cast<int>(toks.size()) - 1 != g.vertex_count())
        throw ParseError("order must list all " + std::to_string(g.vertex_count()) + " vertices",
                         scan.line_no);

    CyclicOrder omega;
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 1; i < toks.size(); ++i) {
        long long v = parse_int(toks[i], scan.line_no);
        if (v < 0 || v >= g.vertex_count() || seen[static_cast<size_t>(v)])
            throw ParseError("order is not a permutation of the vertices", scan.line_no);
        seen[static_cast<size_t>(v)] = 1;
        omega.sequence.push_back(static_cast<Vertex>(v));
    }

    // Parallel copies of each unordered pair, sorted by id, resolve the #k suffix.
    auto resolve = [&](Vertex u, Vertex v, int copy, int line_no) -> EdgeId {
        int rank = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (!g.edge(e).same_pair(Edge{u, v})) continue;
            if (rank == copy) return e;
            ++rank;
        }
        throw ParseError("edge " + std::to_string(u) + "-" + std::to_string(v) + "#" +
                             std::to_string(copy) + " is not in the graph", line_no);
    };

    PageColoring coloring;
    coloring.page_of.assign(static_cast<size_t>(g.edge_count()), -1);
    int expected_page = 0;
    while (auto line = scan.next()) {
        auto page_toks = tokens_of(*line);
        if (page_toks.size() < 2 || page_toks[0] != "page" || page_toks[1].back() != ':')
            throw ParseError("expected 'page <index>:'", scan.line_no);
        std::string idx = page_toks[1].substr(0, page_toks[1].size() - 1);
        long long page = parse_int(idx, scan.line_no);
        if (page != expected_page)
            throw ParseError("page lines must be consecutive from 0", scan.line_no);
        ++expected_page;

        for (size_t t = 2; t < page_toks.size(); ++t) {
            const std::string& tok = page_toks[t];
            size_t dash = tok.find('-');
            if (dash == std::string::npos || dash == 0)
                throw ParseError("edge token must be 'u-v' or 'u-v#k'", scan.line_no);
            size_t hash = tok.find('#', dash);
            long long u = parse_int(tok.substr(0, dash), scan.line_no);
            long long v = parse_int(tok.substr(dash + 1, (hash == std::string::npos
                                                              ? std::string::npos
                                                              : hash - dash - 1)),
                                    scan.line_no);
            long long copy = (hash == std::string::npos)
                                 ? 0
                                 : parse_int(tok.substr(hash + 1), scan.line_no);
            if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || copy < 0)
                throw ParseError("edge token out of range", scan.line_no);
            EdgeId e = resolve(static_cast<Vertex>(u), static_cast<Vertex>(v),
                               static_cast<int>(copy), scan.line_no);
            if (coloring.page_of[static_cast<size_t>(e)] != -1)
                throw ParseError("edge assigned to two pages", scan.line_no);
            coloring.page_of[static_cast<size_t>(e)] = static_cast<int>(page);
        }
    }
    return {omega, coloring};
}

}  // namespace bookem
