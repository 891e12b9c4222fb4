#include "dst/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>

#include "dst/error.hpp"

namespace dst
{

/*
 * Sims table in the style of Knuth's "Efficient representation of perm
 * groups": level k holds the strong generators fixing 0..k-1 and, for every
 * point j in the orbit of k, a transversal element mapping k to j. Levels whose
 * orbit is {k} stay unallocated.
 */
struct PermGroup::Chain
{
  std::size_t degree = 0;
  std::vector<std::vector<Permutation>> gens;
  std::vector<std::vector<std::optional<Permutation>>> table;

  explicit Chain(std::size_t n) : degree(n), gens(n), table(n) {}

  void open_level(std::size_t k)
  {
    if (table[k].empty()) {
      table[k].resize(degree);
      table[k][k] = Permutation(degree);
    }
  }

  // Residue of g after sifting from level k on; identity iff g is a member of
  // the stabilizer of 0..k-1 as currently represented.
  bool sifts_through(std::size_t k, Permutation g) const
  {
    for (; k < degree; ++k) {
      Point j = g[static_cast<Point>(k)];
      if (j == k)
        continue;
      if (table[k].empty() || !table[k][j])
        return false;
      g *= inverse(*table[k][j]);
    }
    return true;
  }

  void add_generator(std::size_t k, Permutation const &g)
  {
    open_level(k);
    gens[k].push_back(g);

    std::vector<Permutation> transversal;
    for (auto const &t : table[k])
      if (t)
        transversal.push_back(*t);

    for (auto const &t : transversal)
      ensure_member(k, t * g);
  }

  void ensure_member(std::size_t k, Permutation const &sigma)
  {
    Point j = sigma[static_cast<Point>(k)];
    if (table[k][j]) {
      Permutation tau = sigma * inverse(*table[k][j]);
      if (!sifts_through(k + 1, tau))
        add_generator(k + 1, tau);
    } else {
      table[k][j] = sigma;
      for (std::size_t i = 0; i < gens[k].size(); ++i)
        ensure_member(k, sigma * gens[k][i]);
    }
  }

  std::size_t orbit_length(std::size_t k) const
  {
    return static_cast<std::size_t>(
      std::count_if(table[k].begin(), table[k].end(),
                    [](auto const &t) { return t.has_value(); }));
  }
};

struct PermGroup::State
{
  std::once_flag chain_once;
  std::unique_ptr<Chain> chain;

  std::mutex elements_mutex;
  std::shared_ptr<std::vector<Permutation> const> elements;
};

PermGroup::PermGroup(std::vector<Permutation> generators)
  : _generators(std::move(generators)),
    _state(std::make_shared<State>())
{
  if (_generators.empty())
    throw Error(ErrorKind::EmptyGeneratorList, "group needs at least one generator");

  _degree = _generators.front().degree();
  for (auto const &g : _generators) {
    if (g.degree() != _degree)
      throw Error(ErrorKind::DegreeMismatch,
                  "generator " + format_permutation(g) + " has degree " +
                    std::to_string(g.degree()) + ", expected " +
                    std::to_string(_degree));
  }
}

PermGroup PermGroup::trivial(std::size_t degree)
{
  return PermGroup({Permutation(degree)});
}

PermGroup::Chain const &PermGroup::chain() const
{
  std::call_once(_state->chain_once, [this] {
    auto chain = std::make_unique<Chain>(_degree);
    for (auto const &g : _generators) {
      if (!g.is_identity() && !chain->sifts_through(0, g))
        chain->add_generator(0, g);
    }
    _state->chain = std::move(chain);
  });
  return *_state->chain;
}

BigInt PermGroup::order() const
{
  BigInt result = 1;
  for (auto len : fundamental_orbit_lengths())
    result *= static_cast<unsigned long>(len);
  return result;
}

bool PermGroup::contains(Permutation const &g) const
{
  if (g.degree() != _degree)
    return false;
  return chain().sifts_through(0, g);
}

std::vector<Point> PermGroup::base() const
{
  auto const &c = chain();
  std::vector<Point> result;
  for (std::size_t k = 0; k < _degree; ++k)
    if (!c.table[k].empty() && c.orbit_length(k) > 1)
      result.push_back(static_cast<Point>(k));
  return result;
}

std::vector<std::size_t> PermGroup::fundamental_orbit_lengths() const
{
  auto const &c = chain();
  std::vector<std::size_t> result;
  for (auto b : base())
    result.push_back(c.orbit_length(b));
  return result;
}

std::shared_ptr<std::vector<Permutation> const>
PermGroup::elements(std::uint64_t cap) const
{
  BigInt n = order();
  if (n > BigInt(std::to_string(cap)))
    throw Error(ErrorKind::OrderExceedsCap,
                "group order " + n.get_str() + " exceeds element cap " +
                  std::to_string(cap));

  std::lock_guard lock(_state->elements_mutex);
  if (_state->elements)
    return _state->elements;

  auto const &c = chain();
  auto b = base();

  // Every element factors uniquely as t_last * ... * t_first.
  std::vector<Permutation> current{Permutation(_degree)};
  for (auto it = b.rbegin(); it != b.rend(); ++it) {
    std::vector<Permutation> next;
    next.reserve(current.size() * c.orbit_length(*it));
    for (auto const &x : current)
      for (auto const &t : c.table[*it])
        if (t)
          next.push_back(x * *t);
    current = std::move(next);
  }
  std::sort(current.begin(), current.end());

  _state->elements =
    std::make_shared<std::vector<Permutation> const>(std::move(current));
  return _state->elements;
}

namespace
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : _parent(n)
  {
    std::iota(_parent.begin(), _parent.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x)
  {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x = _parent[x];
    }
    return x;
  }

  // Smaller root wins so representatives are deterministic.
  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    _parent[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> _parent;
};

} // namespace

Partition orbits(PermGroup const &group)
{
  UnionFind uf(group.degree());
  for (auto const &g : group.generators())
    for (Point x = 0; x < group.degree(); ++x)
      uf.unite(x, g[x]);

  std::vector<std::size_t> labels(group.degree());
  for (Point x = 0; x < group.degree(); ++x)
    labels[x] = uf.find(x);
  return Partition::from_labels(labels);
}

bool is_transitive(PermGroup const &group)
{
  return orbits(group).cell_count() == 1;
}

std::vector<Point> minimal_block(PermGroup const &group, Point a, Point b)
{
  std::size_t n = group.degree();
  if (a >= n || b >= n)
    throw Error(ErrorKind::PointOutOfRange, "block seed outside the point set");
  if (a == b)
    throw Error(ErrorKind::EqualPoints, "minimal block needs two distinct points");
  if (!is_transitive(group))
    throw Error(ErrorKind::NotTransitive, "minimal block needs a transitive group");

  // Merge the classes of (a, b) and propagate images under the generators
  // until the equivalence is invariant.
  UnionFind uf(n);
  std::vector<std::pair<Point, Point>> pending{{a, b}};
  while (!pending.empty()) {
    auto [x, y] = pending.back();
    pending.pop_back();
    if (!uf.unite(x, y))
      continue;
    for (auto const &g : group.generators())
      pending.emplace_back(g[x], g[y]);
  }

  std::vector<Point> block;
  auto root = uf.find(a);
  for (Point x = 0; x < n; ++x)
    if (uf.find(x) == root)
      block.push_back(x);
  return block;
}

std::vector<Point> nontrivial_block(PermGroup const &group)
{
  if (group.degree() < 2 || !is_transitive(group))
    return {};
  for (Point b = 1; b < group.degree(); ++b) {
    auto block = minimal_block(group, 0, b);
    if (block.size() < group.degree())
      return block;
  }
  return {};
}

bool is_primitive(PermGroup const &group)
{
  if (!is_transitive(group))
    return false;
  return group.degree() < 2 || nontrivial_block(group).empty();
}

std::size_t minimum_degree(PermGroup const &group, std::uint64_t cap)
{
  if (group.order() < 2)
    throw Error(ErrorKind::TrivialGroup, "minimum degree of the trivial group");

  std::size_t best = group.degree();
  for (auto const &g : *group.elements(cap))
    if (!g.is_identity())
      best = std::min(best, support_size(g));
  return best;
}

bool setwise_stabilizer_is_trivial(PermGroup const &group,
                                   std::span<Point const> subset,
                                   std::uint64_t cap)
{
  std::vector<bool> in_subset(group.degree(), false);
  for (Point x : subset) {
    if (x >= group.degree())
      throw Error(ErrorKind::PointOutOfRange,
                  "subset point " + std::to_string(x + 1) + " outside the point set");
    in_subset[x] = true;
  }

  for (auto const &g : *group.elements(cap)) {
    if (g.is_identity())
      continue;
    bool fixes = std::all_of(subset.begin(), subset.end(),
                             [&](Point x) { return in_subset[g[x]]; });
    if (fixes)
      return false;
  }
  return true;
}

BigInt factorial(std::size_t n)
{
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

bool contains_alternating(PermGroup const &group)
{
  return 2 * group.order() >= factorial(group.degree());
}

std::vector<std::vector<Point>> lex_subsets(std::size_t n, std::size_t k)
{
  std::vector<std::vector<Point>> result;
  if (k > n)
    return result;

  std::vector<Point> current(k);
  std::iota(current.begin(), current.end(), Point{0});
  for (;;) {
    result.push_back(current);
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j)
      current[j] = current[j - 1] + 1;
  }
  return result;
}

PermGroup induced_subset_action(PermGroup const &group, std::size_t subset_size)
{
  if (subset_size < 1 || subset_size > group.degree())
    throw Error(ErrorKind::BadSubsetSize,
                "subset size " + std::to_string(subset_size) + " outside [1, " +
                  std::to_string(group.degree()) + "]");

  auto subsets = lex_subsets(group.degree(), subset_size);
  std::map<std::vector<Point>, Point> index;
  for (std::size_t i = 0; i < subsets.size(); ++i)
    index.emplace(subsets[i], static_cast<Point>(i));

  std::vector<Permutation> induced;
  for (auto const &g : group.generators()) {
    std::vector<Point> images(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::vector<Point> image;
      for (Point x : subsets[i])
        image.push_back(g[x]);
      std::sort(image.begin(), image.end());
      images[i] = index.at(image);
    }
    induced.push_back(Permutation::from_images(std::move(images)));
  }
  return PermGroup(std::move(induced));
}

namespace
{

std::string trim(std::string_view s)
{
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos)
    return {};
  auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

} // namespace

GroupFile parse_group_file(std::string_view text)
{
  GroupFile file;
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  auto fail = [&](ErrorKind kind, std::string const &msg) -> Error {
    return Error(kind, "line " + std::to_string(line_no) + ": " + msg);
  };

  while (std::getline(is, line)) {
    ++line_no;
    if (line_no == 1) {
      std::istringstream header(line);
      std::string keyword, extra;
      long long degree = 0;
      if (!(header >> keyword >> degree) || keyword != "degree" || (header >> extra))
        throw fail(ErrorKind::MalformedInput, "expected \"degree <v>\"");
      if (degree < 1)
        throw fail(ErrorKind::MalformedInput, "degree must be positive");
      file.degree = static_cast<std::size_t>(degree);
      continue;
    }

    auto content = trim(line);
    if (content.empty()) {
      file.layout.push_back({GroupFile::Line::Kind::Blank, {}});
      continue;
    }
    if (content.front() == '#') {
      file.layout.push_back({GroupFile::Line::Kind::Comment, line});
      continue;
    }

    auto hash = line.find('#');
    std::string perm_text = line.substr(0, hash);
    std::string trailing;
    if (hash != std::string::npos) {
      auto keep = perm_text.find_last_not_of(" \t");
      trailing = line.substr(keep == std::string::npos ? 0 : keep + 1);
      perm_text = perm_text.substr(0, keep == std::string::npos ? 0 : keep + 1);
    }

    try {
      file.generators.push_back(parse_permutation(perm_text, file.degree));
    } catch (Error const &e) {
      throw fail(e.kind(), e.what());
    }
    file.layout.push_back({GroupFile::Line::Kind::Generator, trailing});
  }

  if (line_no == 0)
    throw Error(ErrorKind::MalformedInput, "line 1: expected \"degree <v>\"");
  if (file.generators.empty())
    throw Error(ErrorKind::EmptyGeneratorList, "group file lists no generators");
  return file;
}

std::string format_group_file(GroupFile const &file)
{
  std::ostringstream os;
  os << "degree " << file.degree << '\n';

  if (file.layout.empty()) {
    for (auto const &g : file.generators)
      os << format_permutation(g) << '\n';
    return os.str();
  }

  std::size_t next = 0;
  for (auto const &line : file.layout) {
    switch (line.kind) {
      case GroupFile::Line::Kind::Blank:
        break;
      case GroupFile::Line::Kind::Comment:
        os << line.text;
        break;
      case GroupFile::Line::Kind::Generator:
        os << format_permutation(file.generators.at(next++)) << line.text;
        break;
    }
    os << '\n';
  }
  return os.str();
}

std::string format_group_file(PermGroup const &group)
{
  return format_group_file(GroupFile{group.degree(), group.generators(), {}});
}

PermGroup load_group(std::string_view text)
{
  return PermGroup(parse_group_file(text).generators);
}

PermGroup load_group_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw Error(ErrorKind::MalformedInput, "cannot open group file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_group(ss.str());
}

} // namespace dst
