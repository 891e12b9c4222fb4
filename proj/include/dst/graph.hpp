#ifndef DST_GRAPH_HPP
#define DST_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dst/distinguish.hpp"
#include "dst/group.hpp"
#include "dst/partition.hpp"

namespace dst
{

// Vertex label recording how a vertex was built: the subset for Johnson and
// line graphs, the coordinate tuple for Cartesian products.
using VertexLabel = std::vector<Point>;

/// Finite simple graph on vertices {0, ..., n-1}.
class Graph
{
public:
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const noexcept { return _n; }
  std::size_t edge_count() const noexcept { return _edge_count; }

  // Throws Error(BadParameters) on loops and Error(PointOutOfRange) on bad
  // endpoints. Adding an existing edge is a no-op.
  void add_edge(Point u, Point v);

  bool adjacent(Point u, Point v) const noexcept { return _adj[u * _n + v]; }
  std::vector<Point> const &neighbors(Point u) const noexcept { return _nbrs[u]; }
  std::size_t degree(Point u) const noexcept { return _nbrs[u].size(); }

  // Edges (u, v) with u < v, sorted.
  std::vector<std::pair<Point, Point>> edges() const;

  bool has_labels() const noexcept { return !_labels.empty(); }
  std::vector<VertexLabel> const &labels() const noexcept { return _labels; }
  // Throws Error(BadParameters) unless there is one distinct label per vertex.
  void set_labels(std::vector<VertexLabel> labels);

private:
  std::size_t _n;
  std::size_t _edge_count = 0;
  std::vector<char> _adj;
  std::vector<std::vector<Point>> _nbrs;
  std::vector<VertexLabel> _labels;
};

Graph complete_graph(std::size_t v);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

// l-subsets of {1..m} in lexicographic order, adjacent when they share l-1
// points. Requires 1 <= l <= m-1.
Graph johnson_graph(std::size_t m, std::size_t l);

// Vertex (x, y) has index x * |V(Y)| + y.
Graph cartesian_product(Graph const &x, Graph const &y);
// Row-major n-tuples. Requires n >= 1.
Graph cartesian_power(Graph const &x, std::size_t n);

// Vertices are the edges of x in edges() order. Throws Error(NoEdges).
Graph line_graph(Graph const &x);

// Path 1-2-...-m plus the chord {2, 4}. Requires m >= 4.
Graph t_graph(std::size_t m);

/// Hypergraph on {0, ..., m-1}; edges are sorted, distinct and nonempty.
class Hypergraph
{
public:
  explicit Hypergraph(std::size_t vertex_count) : _m(vertex_count) {}

  std::size_t vertex_count() const noexcept { return _m; }
  std::vector<std::vector<Point>> const &edges() const noexcept { return _edges; }

  // Throws Error(EdgeOutOfRange) or Error(BadParameters) for an empty or
  // repeated edge.
  void add_edge(std::vector<Point> edge);

private:
  std::size_t _m;
  std::vector<std::vector<Point>> _edges;
};

// All consecutive l-windows on {0..vertex_count-1}, plus `extra_edge` when
// given. Requires l >= 3 and vertex_count >= l + 2.
Hypergraph modified_hyperpath(std::size_t vertex_count, std::size_t l,
                              std::optional<std::vector<Point>> const &extra_edge = {});

// Every vertex permutation preserving the edge set, by exhaustive scan.
// Limited to 10 vertices.
std::vector<Permutation> hypergraph_automorphisms(Hypergraph const &h);
bool is_asymmetric(Hypergraph const &h);

// Two cells over V(J(m, l)): l-subsets that are edges of h, and the rest.
// Cells are labelled by first occurrence, so an empty cell just vanishes.
Partition hypergraph_partition(Hypergraph const &h, std::size_t m, std::size_t l);

// The T_m edges versus the other 2-subsets, as a partition of V(J(m, 2)).
Partition tm_partition(std::size_t m);

struct AutomorphismBudget
{
  std::size_t max_vertices = 64;
  std::uint64_t max_nodes = 50'000'000;
};

// Strong generating set of Aut(x), found by backtracking with
// distance-preserving domain filtering.
PermGroup automorphism_group(Graph const &x, AutomorphismBudget const &budget = {});

bool is_asymmetric(Graph const &x, AutomorphismBudget const &budget = {});

std::size_t graph_distinguishing_number(Graph const &x, SearchBudget const &budget = {},
                                        AutomorphismBudget const &aut_budget = {});

// True iff `map` (vertex i of a to vertex map[i] of b) is an isomorphism.
bool is_isomorphism(Graph const &a, Graph const &b, std::vector<Point> const &map);

// "n <count>" header, label comments, then one 1-based "u v" per edge.
std::string format_edge_list(Graph const &x);
Graph parse_edge_list(std::string_view text);

/*
 * Builder expressions:
 *   johnson m l | complete v | Kv | cycle n | path n | tgraph m
 *   power <expr> n | product <expr> <expr> | linegraph <expr> | ( <expr> )
 */
Graph build_graph(std::string_view expression);

} // namespace dst

#endif // DST_GRAPH_HPP
