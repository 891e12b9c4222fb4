#include "dst/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "dst/error.hpp"

namespace dst
{

Graph::Graph(std::size_t n)
  : _n(n), _adj(n * n, 0), _nbrs(n)
{}

void Graph::add_edge(Point u, Point v)
{
  if (u >= _n || v >= _n)
    throw Error(ErrorKind::PointOutOfRange,
                "edge {" + std::to_string(u + 1) + ", " + std::to_string(v + 1) +
                  "} outside a graph on " + std::to_string(_n) + " vertices");
  if (u == v)
    throw Error(ErrorKind::BadParameters, "loop at vertex " + std::to_string(u + 1));
  if (_adj[u * _n + v])
    return;

  _adj[u * _n + v] = _adj[v * _n + u] = 1;
  _nbrs[u].insert(std::lower_bound(_nbrs[u].begin(), _nbrs[u].end(), v), v);
  _nbrs[v].insert(std::lower_bound(_nbrs[v].begin(), _nbrs[v].end(), u), u);
  ++_edge_count;
}

std::vector<std::pair<Point, Point>> Graph::edges() const
{
  std::vector<std::pair<Point, Point>> result;
  result.reserve(_edge_count);
  for (Point u = 0; u < _n; ++u)
    for (Point v : _nbrs[u])
      if (u < v)
        result.emplace_back(u, v);
  return result;
}

void Graph::set_labels(std::vector<VertexLabel> labels)
{
  if (labels.size() != _n)
    throw Error(ErrorKind::BadParameters, "need one label per vertex");
  std::set<VertexLabel> distinct(labels.begin(), labels.end());
  if (distinct.size() != labels.size())
    throw Error(ErrorKind::BadParameters, "vertex labels must be distinct");
  _labels = std::move(labels);
}

Graph complete_graph(std::size_t v)
{
  if (v < 1)
    throw Error(ErrorKind::BadParameters, "complete graph needs a vertex");
  Graph g(v);
  for (Point a = 0; a < v; ++a)
    for (Point b = a + 1; b < v; ++b)
      g.add_edge(a, b);
  return g;
}

Graph path_graph(std::size_t n)
{
  if (n < 1)
    throw Error(ErrorKind::BadParameters, "path needs a vertex");
  Graph g(n);
  for (Point a = 0; a + 1 < n; ++a)
    g.add_edge(a, a + 1);
  return g;
}

Graph cycle_graph(std::size_t n)
{
  if (n < 3)
    throw Error(ErrorKind::BadParameters, "cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<Point>(n - 1));
  return g;
}

Graph johnson_graph(std::size_t m, std::size_t l)
{
  if (l < 1 || l + 1 > m)
    throw Error(ErrorKind::BadParameters,
                "J(" + std::to_string(m) + "," + std::to_string(l) +
                  ") needs 1 <= l <= m-1");

  auto subsets = lex_subsets(m, l);
  Graph g(subsets.size());
  for (Point a = 0; a < subsets.size(); ++a) {
    for (Point b = a + 1; b < subsets.size(); ++b) {
      std::vector<Point> common;
      std::set_intersection(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                            subsets[b].end(), std::back_inserter(common));
      if (common.size() + 1 == l)
        g.add_edge(a, b);
    }
  }
  g.set_labels(std::move(subsets));
  return g;
}

Graph cartesian_product(Graph const &x, Graph const &y)
{
  std::size_t nx = x.vertex_count(), ny = y.vertex_count();
  Graph g(nx * ny);
  auto index = [ny](Point a, Point b) { return static_cast<Point>(a * ny + b); };

  for (Point a = 0; a < nx; ++a) {
    for (auto [b1, b2] : y.edges())
      g.add_edge(index(a, b1), index(a, b2));
  }
  for (auto [a1, a2] : x.edges()) {
    for (Point b = 0; b < ny; ++b)
      g.add_edge(index(a1, b), index(a2, b));
  }

  std::vector<VertexLabel> labels;
  for (Point a = 0; a < nx; ++a)
    for (Point b = 0; b < ny; ++b)
      labels.push_back({a, b});
  g.set_labels(std::move(labels));
  return g;
}

Graph cartesian_power(Graph const &x, std::size_t n)
{
  if (n < 1)
    throw Error(ErrorKind::BadParameters, "Cartesian power needs n >= 1");

  std::size_t base = x.vertex_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= base;

  Graph g(total);
  std::vector<VertexLabel> labels(total, VertexLabel(n));
  for (std::size_t v = 0; v < total; ++v) {
    std::size_t rest = v;
    for (std::size_t i = n; i-- > 0;) {
      labels[v][i] = static_cast<Point>(rest % base);
      rest /= base;
    }
  }

  // Changing coordinate i (weight base^(n-1-i)) along an edge of x.
  std::size_t weight = 1;
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t v = 0; v < total; ++v) {
      Point here = labels[v][i];
      for (Point there : x.neighbors(here))
        if (here < there)
          g.add_edge(static_cast<Point>(v),
                     static_cast<Point>(v + (there - here) * weight));
    }
    weight *= base;
  }

  g.set_labels(std::move(labels));
  return g;
}

Graph line_graph(Graph const &x)
{
  auto es = x.edges();
  if (es.empty())
    throw Error(ErrorKind::NoEdges, "line graph of an edgeless graph");

  Graph g(es.size());
  for (Point a = 0; a < es.size(); ++a) {
    for (Point b = a + 1; b < es.size(); ++b) {
      auto [u1, v1] = es[a];
      auto [u2, v2] = es[b];
      if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
        g.add_edge(a, b);
    }
  }

  std::vector<VertexLabel> labels;
  for (auto [u, v] : es)
    labels.push_back({u, v});
  g.set_labels(std::move(labels));
  return g;
}

Graph t_graph(std::size_t m)
{
  if (m < 4)
    throw Error(ErrorKind::BadParameters, "T_m needs m >= 4");
  Graph g = path_graph(m);
  g.add_edge(1, 3);
  return g;
}

void Hypergraph::add_edge(std::vector<Point> edge)
{
  if (edge.empty())
    throw Error(ErrorKind::BadParameters, "hypergraph edges must be nonempty");
  std::sort(edge.begin(), edge.end());
  if (std::adjacent_find(edge.begin(), edge.end()) != edge.end())
    throw Error(ErrorKind::BadParameters, "hypergraph edge repeats a vertex");
  if (edge.back() >= _m)
    throw Error(ErrorKind::EdgeOutOfRange,
                "edge vertex " + std::to_string(edge.back() + 1) + " outside [1, " +
                  std::to_string(_m) + "]");
  if (std::find(_edges.begin(), _edges.end(), edge) != _edges.end())
    throw Error(ErrorKind::BadParameters, "repeated hypergraph edge");
  _edges.push_back(std::move(edge));
}

Hypergraph modified_hyperpath(std::size_t vertex_count, std::size_t l,
                              std::optional<std::vector<Point>> const &extra_edge)
{
  if (l < 3 || vertex_count < l + 2)
    throw Error(ErrorKind::BadParameters,
                "hyperpath needs l >= 3 and at least l + 2 vertices");

  Hypergraph h(vertex_count);
  for (Point start = 0; start + l <= vertex_count; ++start) {
    std::vector<Point> window(l);
    for (std::size_t i = 0; i < l; ++i)
      window[i] = static_cast<Point>(start + i);
    h.add_edge(std::move(window));
  }
  if (extra_edge)
    h.add_edge(*extra_edge);
  return h;
}

namespace
{

std::uint32_t edge_mask(std::vector<Point> const &edge)
{
  std::uint32_t mask = 0;
  for (Point x : edge)
    mask |= std::uint32_t{1} << x;
  return mask;
}

} // namespace

std::vector<Permutation> hypergraph_automorphisms(Hypergraph const &h)
{
  std::size_t m = h.vertex_count();
  if (m > 10)
    throw Error(ErrorKind::SearchBudgetExceeded,
                "exhaustive hypergraph scan limited to 10 vertices");

  std::unordered_set<std::uint32_t> edge_set;
  for (auto const &e : h.edges())
    edge_set.insert(edge_mask(e));

  std::vector<Permutation> result;
  std::vector<Point> images(m);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    bool preserved = std::all_of(h.edges().begin(), h.edges().end(), [&](auto const &e) {
      std::uint32_t mask = 0;
      for (Point x : e)
        mask |= std::uint32_t{1} << images[x];
      return edge_set.count(mask) > 0;
    });
    if (preserved)
      result.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

bool is_asymmetric(Hypergraph const &h)
{
  return hypergraph_automorphisms(h).size() == 1;
}

Partition hypergraph_partition(Hypergraph const &h, std::size_t m, std::size_t l)
{
  if (l < 1 || l > m)
    throw Error(ErrorKind::BadParameters, "need 1 <= l <= m");

  auto subsets = lex_subsets(m, l);
  std::map<std::vector<Point>, std::size_t> index;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    index.emplace(subsets[i], i);

  std::vector<std::size_t> labels(subsets.size(), 1);
  for (auto const &e : h.edges()) {
    auto it = index.find(e);
    if (it == index.end())
      throw Error(ErrorKind::EdgeNotAnLSubset,
                  "hypergraph edge of size " + std::to_string(e.size()) +
                    " is not a " + std::to_string(l) + "-subset of [1, " +
                    std::to_string(m) + "]");
    labels[it->second] = 0;
  }
  return Partition::from_labels(labels);
}

Partition tm_partition(std::size_t m)
{
  Graph t = t_graph(m);
  Hypergraph h(m);
  for (auto [u, v] : t.edges())
    h.add_edge({u, v});
  return hypergraph_partition(h, m, 2);
}

namespace
{

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

class AutomorphismSearch
{
public:
  AutomorphismSearch(Graph const &x, AutomorphismBudget const &budget)
    : _n(x.vertex_count()), _budget(budget.max_nodes)
  {
    compute_distances(x);

    std::map<std::vector<std::size_t>, std::size_t> classes;
    _class_of.resize(_n);
    for (Point u = 0; u < _n; ++u) {
      std::vector<std::size_t> invariant{x.degree(u)};
      std::vector<std::size_t> nbr_degrees;
      for (Point w : x.neighbors(u))
        nbr_degrees.push_back(x.degree(w));
      std::sort(nbr_degrees.begin(), nbr_degrees.end());
      invariant.insert(invariant.end(), nbr_degrees.begin(), nbr_degrees.end());
      _class_of[u] = classes.emplace(invariant, classes.size()).first->second;
    }

    _initial.fill(0);
    for (Point u = 0; u < _n; ++u)
      for (Point w = 0; w < _n; ++w)
        if (_class_of[u] == _class_of[w])
          _initial[u] |= bit(w);
  }

  // Lexicographically least automorphism fixing 0..level-1 and sending level
  // to target.
  std::optional<Permutation> find(std::size_t level, Point target)
  {
    Domains dom = _initial;
    std::vector<Point> map(_n);
    for (Point x = 0; x < level; ++x) {
      if (!assign(dom, x, x))
        return std::nullopt;
      map[x] = x;
    }
    if (!(dom[level] & bit(target)) || !assign(dom, level, target))
      return std::nullopt;
    map[level] = target;

    if (!extend(level + 1, dom, map))
      return std::nullopt;
    return Permutation::from_images(std::move(map));
  }

  Mask candidates(std::size_t level) const
  {
    Domains dom = _initial;
    for (Point x = 0; x < level; ++x)
      if (!assign(dom, x, x))
        return 0;
    return dom[level];
  }

private:
  using Domains = std::array<Mask, 64>;

  void compute_distances(Graph const &x)
  {
    constexpr std::uint8_t unreachable = 0xff;
    _dist.assign(_n * _n, unreachable);
    for (Point s = 0; s < _n; ++s) {
      std::deque<Point> queue{s};
      _dist[s * _n + s] = 0;
      while (!queue.empty()) {
        Point u = queue.front();
        queue.pop_front();
        for (Point w : x.neighbors(u)) {
          if (_dist[s * _n + w] == unreachable) {
            _dist[s * _n + w] = static_cast<std::uint8_t>(_dist[s * _n + u] + 1);
            queue.push_back(w);
          }
        }
      }
    }

    // Distance classes indexed 0..n-1, with n standing for "unreachable".
    _at_distance.assign(_n * (_n + 1), 0);
    for (Point s = 0; s < _n; ++s)
      for (Point w = 0; w < _n; ++w)
        _at_distance[s * (_n + 1) + distance_index(s, w)] |= bit(w);
  }

  std::size_t distance_index(Point a, Point b) const
  {
    auto d = _dist[a * _n + b];
    return d == 0xff ? _n : d;
  }

  // Vertices are assigned in index order, so everything after x is open.
  bool assign(Domains &dom, Point x, Point y) const
  {
    dom[x] = bit(y);
    for (Point z = x + 1; z < _n; ++z) {
      dom[z] &= _at_distance[y * (_n + 1) + distance_index(x, z)] & ~bit(y);
      if (!dom[z])
        return false;
    }
    return true;
  }

  bool extend(std::size_t x, Domains const &dom, std::vector<Point> &map)
  {
    if (x == _n)
      return true;
    if (++_nodes > _budget)
      throw Error(ErrorKind::SearchBudgetExceeded,
                  "automorphism search exceeded " + std::to_string(_budget) + " nodes");

    for (Mask cand = dom[x]; cand; cand &= cand - 1) {
      auto y = static_cast<Point>(std::countr_zero(cand));
      Domains next = dom;
      if (!assign(next, static_cast<Point>(x), y))
        continue;
      map[x] = y;
      if (extend(x + 1, next, map))
        return true;
    }
    return false;
  }

  std::size_t _n;
  std::uint64_t _budget;
  std::uint64_t _nodes = 0;
  std::vector<std::uint8_t> _dist;
  std::vector<Mask> _at_distance;
  std::vector<std::size_t> _class_of;
  Domains _initial;
};

Mask orbit_of(Point x, std::vector<Permutation> const &gens)
{
  Mask orbit = bit(x);
  std::vector<Point> queue{x};
  while (!queue.empty()) {
    Point u = queue.back();
    queue.pop_back();
    for (auto const &g : gens) {
      Point w = g[u];
      if (!(orbit & bit(w))) {
        orbit |= bit(w);
        queue.push_back(w);
      }
    }
  }
  return orbit;
}

} // namespace

PermGroup automorphism_group(Graph const &x, AutomorphismBudget const &budget)
{
  std::size_t n = x.vertex_count();
  if (n == 0)
    throw Error(ErrorKind::BadParameters, "automorphisms of the empty graph");
  if (n > budget.max_vertices || n > 64)
    throw Error(ErrorKind::SearchBudgetExceeded,
                "automorphism search limited to " +
                  std::to_string(std::min<std::size_t>(budget.max_vertices, 64)) +
                  " vertices, got " + std::to_string(n));

  AutomorphismSearch search(x, budget);

  // Deepest level first, so the generators already found for the pointwise
  // stabilizer of 0..level-1 prune the orbit of `level`.
  std::vector<Permutation> gens;
  for (std::size_t level = n; level-- > 0;) {
    auto p = static_cast<Point>(level);
    Mask orbit = orbit_of(p, gens);
    for (Mask cand = search.candidates(level); cand; cand &= cand - 1) {
      auto target = static_cast<Point>(std::countr_zero(cand));
      if (orbit & bit(target))
        continue;
      if (auto g = search.find(level, target)) {
        gens.push_back(std::move(*g));
        orbit = orbit_of(p, gens);
      }
    }
  }

  if (gens.empty())
    return PermGroup::trivial(n);
  return PermGroup(std::move(gens));
}

bool is_asymmetric(Graph const &x, AutomorphismBudget const &budget)
{
  return automorphism_group(x, budget).order() == 1;
}

std::size_t graph_distinguishing_number(Graph const &x, SearchBudget const &budget,
                                        AutomorphismBudget const &aut_budget)
{
  return distinguishing_number(automorphism_group(x, aut_budget), budget);
}

bool is_isomorphism(Graph const &a, Graph const &b, std::vector<Point> const &map)
{
  std::size_t n = a.vertex_count();
  if (b.vertex_count() != n || map.size() != n || a.edge_count() != b.edge_count())
    return false;

  std::vector<bool> hit(n, false);
  for (Point v : map) {
    if (v >= n || hit[v])
      return false;
    hit[v] = true;
  }
  for (auto [u, v] : a.edges())
    if (!b.adjacent(map[u], map[v]))
      return false;
  return true;
}

std::string format_edge_list(Graph const &x)
{
  std::ostringstream os;
  os << "n " << x.vertex_count() << '\n';
  if (x.has_labels()) {
    for (std::size_t v = 0; v < x.vertex_count(); ++v) {
      os << "# label " << v + 1 << ':';
      for (Point p : x.labels()[v])
        os << ' ' << p + 1;
      os << '\n';
    }
  }
  for (auto [u, v] : x.edges())
    os << u + 1 << ' ' << v + 1 << '\n';
  return os.str();
}

Graph parse_edge_list(std::string_view text)
{
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<Graph> graph;

  auto fail = [&](std::string const &msg) {
    return Error(ErrorKind::MalformedInput, "line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(is, line)) {
    ++line_no;
    auto hash = line.find('#');
    std::istringstream ls(line.substr(0, hash));
    std::string first;
    if (!(ls >> first))
      continue;

    if (!graph) {
      long long n = 0;
      std::string extra;
      if (first != "n" || !(ls >> n) || n < 1 || (ls >> extra))
        throw fail("expected \"n <count>\"");
      graph.emplace(static_cast<std::size_t>(n));
      continue;
    }

    long long u = 0, v = 0;
    std::string extra;
    std::istringstream es(line.substr(0, hash));
    if (!(es >> u >> v) || (es >> extra))
      throw fail("expected \"u v\"");
    auto n = static_cast<long long>(graph->vertex_count());
    if (u < 1 || v < 1 || u > n || v > n)
      throw Error(ErrorKind::PointOutOfRange,
                  "line " + std::to_string(line_no) + ": vertex outside [1, " +
                    std::to_string(n) + "]");
    try {
      graph->add_edge(static_cast<Point>(u - 1), static_cast<Point>(v - 1));
    } catch (Error const &e) {
      throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
    }
  }

  if (!graph)
    throw Error(ErrorKind::MalformedInput, "missing \"n <count>\" header");
  return std::move(*graph);
}

namespace
{

class BuilderParser
{
public:
  explicit BuilderParser(std::string_view text)
  {
    std::string token;
    for (char c : text) {
      if (c == '(' || c == ')') {
        flush(token);
        _tokens.emplace_back(1, c);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush(token);
      } else {
        token += c;
      }
    }
    flush(token);
  }

  Graph parse()
  {
    Graph g = expr();
    if (_pos != _tokens.size())
      fail("unexpected \"" + _tokens[_pos] + "\"");
    return g;
  }

private:
  void flush(std::string &token)
  {
    if (!token.empty())
      _tokens.push_back(std::move(token));
    token.clear();
  }

  std::string next(char const *what)
  {
    if (_pos >= _tokens.size())
      fail(std::string("expected ") + what);
    return _tokens[_pos++];
  }

  std::size_t number()
  {
    auto tok = next("a number");
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        tok.size() > 6)
      fail("expected a number, got \"" + tok + "\"");
    return std::stoul(tok);
  }

  Graph expr()
  {
    auto head = next("a graph expression");
    if (head == "(") {
      Graph g = expr();
      if (next("')'") != ")")
        fail("expected ')'");
      return g;
    }
    if (head == "johnson") {
      auto m = number();
      auto l = number();
      return johnson_graph(m, l);
    }
    if (head == "complete")
      return complete_graph(number());
    if (head.size() > 1 && (head[0] == 'K' || head[0] == 'C' || head[0] == 'P') &&
        std::all_of(head.begin() + 1, head.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) &&
        head.size() <= 7) {
      auto n = std::stoul(head.substr(1));
      if (head[0] == 'K')
        return complete_graph(n);
      if (head[0] == 'C')
        return cycle_graph(n);
      return path_graph(n);
    }
    if (head == "cycle")
      return cycle_graph(number());
    if (head == "path")
      return path_graph(number());
    if (head == "tgraph")
      return t_graph(number());
    if (head == "power") {
      Graph base = expr();
      return cartesian_power(base, number());
    }
    if (head == "product") {
      Graph a = expr();
      Graph b = expr();
      return cartesian_product(a, b);
    }
    if (head == "linegraph")
      return line_graph(expr());
    fail("unknown graph builder \"" + head + "\"");
  }

  [[noreturn]] void fail(std::string const &msg) const
  {
    throw Error(ErrorKind::MalformedInput, "graph expression: " + msg);
  }

  std::vector<std::string> _tokens;
  std::size_t _pos = 0;
};

} // namespace

Graph build_graph(std::string_view expression)
{
  return BuilderParser(expression).parse();
}

} // namespace dst
