#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bookem {

using Vertex = int;
using EdgeId = int;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loops are forbidden everywhere; parallel edges are first-class.
struct LoopRejected : GraphError {
    using GraphError::GraphError;
};

struct BadIndex : GraphError {
    using GraphError::GraphError;
};

struct BadParameter : GraphError {
    using GraphError::GraphError;
};

struct Edge {
    Vertex a;
    Vertex b;

    bool incident(Vertex v) const { return a == v || b == v; }
    Vertex other(Vertex v) const { return v == a ? b : a; }
    bool shares_vertex(const Edge& e) const {
        return incident(e.a) || incident(e.b);
    }
    // Unordered-pair equality (parallel copies compare equal).
    bool same_pair(const Edge& e) const {
        return (a == e.a && b == e.b) || (a == e.b && b == e.a);
    }
    Vertex lo() const { return a < b ? a : b; }
    Vertex hi() const { return a < b ? b : a; }
};

// Loopless multigraph with dense edge ids 0..m-1 in construction order.
// Immutable after construction; all queries are const.
class Multigraph {
  public:
    Multigraph() = default;
    Multigraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    std::span<const Edge> edges() const { return edges_; }

    // Ids of edges incident to v, ascending.
    std::span<const EdgeId> incident(Vertex v) const { return incidence_[static_cast<size_t>(v)]; }

    int degree(Vertex v) const { return static_cast<int>(incidence_[static_cast<size_t>(v)].size()); }
    int max_degree() const;
    bool is_k_regular(int k) const;

    // Rank of e among edges with the same unordered endpoint pair, by id.
    // 0 for the first copy; used by the embedding text format.
    int parallel_copy_index(EdgeId e) const;

    // Number of edges joining the same unordered pair as e (including e).
    int multiplicity(EdgeId e) const;

    bool same_edges(const Multigraph& other) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

Multigraph build_multigraph(int vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

}  // namespace bookem
