#include "dst/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "dst/corpus.hpp"
#include "dst/error.hpp"

namespace dst
{

namespace
{

struct Outcome
{
  CheckStatus status;
  std::string detail;
};

bool is_budget_error(Error const &e)
{
  return e.kind() == ErrorKind::OrderExceedsCap ||
         e.kind() == ErrorKind::SearchBudgetExceeded;
}

Outcome verdict(bool ok, std::string detail)
{
  return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

// Runs `body` on every corpus group, counting cap/budget skips.
Outcome over_corpus(std::function<bool(PermGroup const &)> const &filter,
                    std::function<std::string(std::string_view, PermGroup const &)> const &body,
                    char const *what)
{
  std::size_t checked = 0, skipped = 0;
  std::vector<std::string> failures;
  for (auto const &entry : corpus()) {
    PermGroup group = load_group(entry.text);
    if (!filter(group))
      continue;
    try {
      auto failure = body(entry.name, group);
      if (!failure.empty())
        failures.push_back(failure);
      ++checked;
    } catch (Error const &e) {
      if (!is_budget_error(e))
        throw;
      ++skipped;
    }
  }

  std::ostringstream os;
  os << checked << ' ' << what << " checked";
  if (skipped)
    os << ", " << skipped << " skipped (cap)";
  for (auto const &f : failures)
    os << "; FAIL " << f;
  if (checked == 0 && failures.empty())
    return {CheckStatus::Skipped, os.str()};
  return verdict(failures.empty(), os.str());
}

// Orbits on the power set by closing each subset under the generators.
std::uint64_t direct_subset_orbit_count(PermGroup const &group)
{
  std::size_t v = group.degree();
  std::uint64_t total = std::uint64_t{1} << v;
  std::vector<char> seen(total, 0);
  std::uint64_t orbits = 0;
  std::vector<std::uint64_t> stack;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (seen[start])
      continue;
    ++orbits;
    seen[start] = 1;
    stack.push_back(start);
    while (!stack.empty()) {
      auto mask = stack.back();
      stack.pop_back();
      for (auto const &g : group.generators()) {
        std::uint64_t image = 0;
        for (Point x = 0; x < v; ++x)
          if (mask >> x & 1)
            image |= std::uint64_t{1} << g[x];
        if (!seen[image]) {
          seen[image] = 1;
          stack.push_back(image);
        }
      }
    }
  }
  return orbits;
}

Outcome check_main_threshold(VerifyConfig const &config)
{
  auto report = main_threshold(config.main_scan);
  std::ostringstream os;
  os << "threshold " << report.threshold << " over [2, " << report.scan_limit << "]"
     << ", first conflict at " << report.first_holding
     << ", conflict(335) = " << (maroti_conflict(335) ? "true" : "false");
  bool ok = report.threshold == 336 && report.first_holding == 336 &&
            report.all_beyond_hold && !maroti_conflict(335);
  return verdict(ok, os.str());
}

Outcome check_babai_threshold(VerifyConfig const &config)
{
  auto report = babai_threshold(config.babai_scan);
  std::ostringstream os;
  os << "threshold " << report.threshold << " over [2, " << report.scan_limit << "]";
  if (report.first_counterexample)
    os << ", counterexample " << *report.first_counterexample;
  bool ok = report.threshold >= (1u << 19) && report.threshold <= (1u << 22) &&
            report.all_beyond_hold;
  return verdict(ok, os.str());
}

Outcome check_cartesian_powers(VerifyConfig const &config)
{
  struct Case { char const *expr; std::size_t expected; };
  Case const cases[] = {{"power K2 2", 3}, {"power K3 2", 3}, {"power K2 3", 3},
                        {"power K2 4", 2}, {"power K4 2", 2}, {"power K3 3", 2}};
  std::ostringstream os;
  bool ok = true;
  for (auto const &c : cases) {
    auto d = graph_distinguishing_number(build_graph(c.expr), config.budget,
                                         config.automorphism_budget);
    ok = ok && d == c.expected;
    os << c.expr << " -> " << d << "; ";
  }
  return verdict(ok, os.str());
}

Outcome check_johnson_5_2(VerifyConfig const &config)
{
  auto aut = automorphism_group(johnson_graph(5, 2), config.automorphism_budget);
  auto subset = find_distinguishing_subset(aut, config.budget);
  auto d = distinguishing_number(aut, config.budget);
  std::ostringstream os;
  os << "|Aut J(5,2)| = " << aut.order() << ", D = " << d
     << (subset ? ", distinguishing subset found" : ", no distinguishing subset");
  return verdict(aut.order() == 120 && !subset && d == 3, os.str());
}

Outcome check_tm_construction(VerifyConfig const &config)
{
  std::ostringstream os;
  os << std::boolalpha;
  bool ok = true;
  for (std::size_t m = 5; m <= 8; ++m) {
    bool asym = is_asymmetric(t_graph(m), config.automorphism_budget);
    auto aut = automorphism_group(johnson_graph(m, 2), config.automorphism_budget);
    bool dist = is_distinguishing(aut, tm_partition(m), config.budget.element_cap);
    bool expected = m >= 6;
    ok = ok && asym == expected && dist == expected;
    os << "m=" << m << ": asymmetric " << asym << ", distinguishing " << dist << "; ";
  }
  return verdict(ok, os.str());
}

Outcome check_hyperpath(VerifyConfig const &config)
{
  constexpr std::size_t m = 7, l = 3;
  auto windows = modified_hyperpath(m, l).edges();
  PermGroup action = induced_subset_action(corpus_group("symmetric_7"), l);

  for (auto const &extra : lex_subsets(m, l)) {
    if (std::find(windows.begin(), windows.end(), extra) != windows.end())
      continue;
    auto h = modified_hyperpath(m, l, extra);
    if (!is_asymmetric(h))
      continue;
    bool dist = is_distinguishing(action, hypergraph_partition(h, m, l),
                                  config.budget.element_cap);
    std::ostringstream os;
    os << "extra edge {";
    for (std::size_t i = 0; i < extra.size(); ++i)
      os << (i ? " " : "") << extra[i] + 1;
    os << "}: asymmetric, partition of J(7,3) "
       << (dist ? "distinguishing" : "NOT distinguishing");
    return verdict(dist, os.str());
  }
  return verdict(false, "no asymmetric modified hyperpath on 7 vertices");
}

Outcome check_lemma1(VerifyConfig const &config)
{
  std::size_t applicable = 0;
  auto outcome = over_corpus(
    [](PermGroup const &) { return true; },
    [&](std::string_view name, PermGroup const &g) -> std::string {
      auto report = lemma1_check(g, config.budget);
      if (report.distinguishing_number >= 3)
        ++applicable;
      return report.bound_ok ? "" : std::string(name);
    },
    "groups");

  auto aut = automorphism_group(johnson_graph(5, 2), config.automorphism_budget);
  auto report = lemma1_check(aut, config.budget);
  bool j52 = report.distinguishing_number == 3 && report.bound_ok;
  outcome.detail += "; " + std::to_string(applicable) +
                    " corpus groups with D >= 3; Aut J(5,2): (" +
                    BigInt(report.order - 1).get_str() + ")^2 >= 2^" +
                    std::to_string(report.minimum_degree) + (j52 ? "" : " FAIL");
  if (!j52)
    outcome.status = CheckStatus::Fail;
  return outcome;
}

Outcome check_burnside(VerifyConfig const &config)
{
  return over_corpus(
    [](PermGroup const &g) { return g.degree() <= 12 && g.order() <= 10'000; },
    [&](std::string_view name, PermGroup const &g) -> std::string {
      auto burnside = subset_orbit_count(g, config.budget.element_cap);
      return burnside == direct_subset_orbit_count(g) ? "" : std::string(name);
    },
    "groups");
}

Outcome check_fixed_subset_bound(VerifyConfig const &config)
{
  return over_corpus(
    [](PermGroup const &g) { return g.order() <= 100'000; },
    [&](std::string_view name, PermGroup const &g) -> std::string {
      for (auto const &p : *g.elements(config.budget.element_cap)) {
        if (p.is_identity())
          continue;
        std::size_t bound = g.degree() - (support_size(p) + 1) / 2;
        if (cycle_count(p) > bound)
          return std::string(name) + " at " + format_permutation(p);
      }
      return "";
    },
    "groups");
}

bool is_prime(std::size_t n)
{
  if (n < 2)
    return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

Outcome check_primitivity(VerifyConfig const &)
{
  std::size_t prime_checked = 0;
  std::vector<std::string> failures;
  for (auto const &entry : corpus()) {
    PermGroup g = load_group(entry.text);
    if (!is_prime(g.degree()) || !is_transitive(g))
      continue;
    ++prime_checked;
    if (!is_primitive(g))
      failures.push_back(std::string(entry.name));
  }

  std::ostringstream os;
  os << prime_checked << " transitive prime-degree groups primitive";
  for (char const *name : {"cyclic_4", "cyclic_6", "dihedral_6"}) {
    PermGroup g = corpus_group(name);
    auto block = nontrivial_block(g);
    bool ok = !is_primitive(g) && !block.empty() && g.degree() % block.size() == 0;
    os << "; " << name << " block size " << block.size();
    if (!ok)
      failures.push_back(name);
  }
  for (auto const &f : failures)
    os << "; FAIL " << f;
  return verdict(failures.empty(), os.str());
}

Outcome check_mathieu(VerifyConfig const &config)
{
  PermGroup m11 = corpus_group("mathieu_11");
  bool primitive = is_primitive(m11);
  auto delta = minimum_degree(m11, config.budget.element_cap);
  bool babai = babai_min_degree_ok(m11, config.budget.element_cap);
  auto subset = find_distinguishing_subset(m11, config.budget);

  std::ostringstream os;
  os << std::boolalpha;
  os << "|M11| = " << m11.order() << ", primitive " << primitive << ", delta " << delta
     << ", 4*delta^2 = " << 4 * delta * delta << " > 11: " << babai
     << ", D = " << (subset ? 2 : distinguishing_number(m11, config.budget));
  return verdict(m11.order() == 7920 && primitive && delta == 8 && babai && subset,
                 os.str());
}

Outcome check_johnson_isomorphisms(VerifyConfig const &)
{
  std::size_t checked = 0;
  std::vector<std::string> failures;
  for (std::size_t m = 2; m <= 8; ++m) {
    for (std::size_t l = 1; l < m; ++l) {
      Graph a = johnson_graph(m, l), b = johnson_graph(m, m - l);
      auto target = lex_subsets(m, m - l);
      std::vector<Point> map;
      for (auto const &s : a.labels()) {
        std::vector<Point> comp;
        for (Point x = 0; x < m; ++x)
          if (!std::binary_search(s.begin(), s.end(), x))
            comp.push_back(x);
        map.push_back(static_cast<Point>(
          std::lower_bound(target.begin(), target.end(), comp) - target.begin()));
      }
      ++checked;
      if (!is_isomorphism(a, b, map))
        failures.push_back("J(" + std::to_string(m) + "," + std::to_string(l) + ")");
    }
  }
  for (std::size_t m = 4; m <= 8; ++m) {
    Graph lk = line_graph(complete_graph(m)), j = johnson_graph(m, 2);
    std::vector<Point> map;
    for (auto const &label : lk.labels())
      map.push_back(static_cast<Point>(
        std::find(j.labels().begin(), j.labels().end(), label) - j.labels().begin()));
    ++checked;
    if (!is_isomorphism(lk, j, map))
      failures.push_back("L(K_" + std::to_string(m) + ")");
  }

  std::ostringstream os;
  os << checked << " labelled isomorphisms checked";
  for (auto const &f : failures)
    os << "; FAIL " << f;
  return verdict(failures.empty(), os.str());
}

struct Check
{
  char const *id;
  char const *title;
  Outcome (*run)(VerifyConfig const &);
};

Check const checks[] = {
  {"threshold-336", "Maroti conflict threshold is 336", check_main_threshold},
  {"babai-threshold", "Babai combination threshold within [2^19, 2^22]", check_babai_threshold},
  {"cartesian-powers", "Cartesian power exceptions have D = 3", check_cartesian_powers},
  {"johnson-5-2", "Aut J(5,2) has D = 3", check_johnson_5_2},
  {"tm-construction", "T_m partitions distinguish J(m,2) for m >= 6", check_tm_construction},
  {"hyperpath", "asymmetric hyperpath distinguishes J(7,3)", check_hyperpath},
  {"lemma1", "order bound for D >= 3", check_lemma1},
  {"burnside", "Burnside count matches direct orbit enumeration", check_burnside},
  {"fixed-subset-bound", "per-element fixed-subset bound", check_fixed_subset_bound},
  {"primitivity", "prime degree primitive, known blocks found", check_primitivity},
  {"mathieu", "M11 order, primitivity, Babai bound, D = 2", check_mathieu},
  {"johnson-isomorphisms", "J(m,l) ~ J(m,m-l) and L(K_m) ~ J(m,2)", check_johnson_isomorphisms},
};

} // namespace

std::vector<std::string> verification_check_ids()
{
  std::vector<std::string> ids;
  for (auto const &c : checks)
    ids.emplace_back(c.id);
  return ids;
}

std::vector<CheckResult> run_verification(VerifyConfig const &config)
{
  std::vector<CheckResult> results;
  for (auto const &c : checks) {
    CheckResult r{c.id, c.title, CheckStatus::Pass, {}, 0};
    auto start = std::chrono::steady_clock::now();
    try {
      auto outcome = c.run(config);
      r.status = outcome.status;
      r.detail = std::move(outcome.detail);
    } catch (Error const &e) {
      r.status = is_budget_error(e) ? CheckStatus::Skipped : CheckStatus::Fail;
      r.detail = std::string(to_string(e.kind())) + ": " + e.what();
    }
    r.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string to_string(CheckStatus status)
{
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

} // namespace dst
