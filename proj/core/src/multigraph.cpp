#include "bookem/multigraph.hpp"

#include <algorithm>

namespace bookem {

Multigraph::Multigraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list)
    : n_(vertex_count) {
    if (vertex_count < 0) throw BadParameter("vertex_count must be nonnegative");
    edges_.reserve(edge_list.size());
    incidence_.resize(static_cast<size_t>(n_));
    for (size_t i = 0; i < edge_list.size(); ++i) {
        auto [a, b] = edge_list[i];
        if (a < 0 || a >= n_ || b < 0 || b >= n_)
            throw BadIndex("edge " + std::to_string(i) + " has endpoint out of range");
        if (a == b)
            throw LoopRejected("edge " + std::to_string(i) + " is a loop at vertex " +
                               std::to_string(a));
        EdgeId id = static_cast<EdgeId>(i);
        edges_.push_back(Edge{a, b});
        incidence_[static_cast<size_t>(a)].push_back(id);
        incidence_[static_cast<size_t>(b)].push_back(id);
    }
}

int Multigraph::max_degree() const {
    int d = 0;
    for (const auto& inc : incidence_) d = std::max(d, static_cast<int>(inc.size()));
    return d;
}

bool Multigraph::is_k_regular(int k) const {
    for (const auto& inc : incidence_)
        if (static_cast<int>(inc.size()) != k) return false;
    return true;
}

int Multigraph::parallel_copy_index(EdgeId e) const {
    const Edge& ref = edge(e);
    int rank = 0;
    for (EdgeId f = 0; f < e; ++f)
        if (edges_[static_cast<size_t>(f)].same_pair(ref)) ++rank;
    return rank;
}

int Multigraph::multiplicity(EdgeId e) const {
    const Edge& ref = edge(e);
    int count = 0;
    for (const Edge& f : edges_)
        if (f.same_pair(ref)) ++count;
    return count;
}

bool Multigraph::same_edges(const Multigraph& other) const {
    if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].a != other.edges_[i].a || edges_[i].b != other.edges_[i].b) return false;
    }
    return true;
}

Multigraph build_multigraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    return Multigraph(vertex_count, edge_list);
}

}  // namespace bookem
