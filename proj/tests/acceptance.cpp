// Acceptance run: one line per criterion, exit status 1 if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "random_graphs.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string fixed(double x, int prec = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

const std::string kOctaneCsv = std::string(SOMBOR_DATA_DIR) + "/octane/octane_properties.csv";

Outcome octane_values() {
  const std::vector<double> printed{9.0710,  11.4787, 11.3005, 11.3005, 11.1224, 15.9907, 13.4787, 13.7082, 13.8663,
                                    15.7387, 13.3005, 13.3005, 15.4868, 17.8416, 18.3983, 17.7678, 15.6568, 22.2426};
  auto computed = octane_index_values(load_dataset(kOctaneCsv), IndexKind::SO_red);
  auto expected = printed;
  std::sort(computed.begin(), computed.end());
  std::sort(expected.begin(), expected.end());
  // greedy multiset match: pair each printed value with the nearest unused computed value
  std::vector<bool> used(computed.size(), false);
  std::vector<std::string> unmatched;
  for (double p : expected) {
    std::size_t best = computed.size();
    for (std::size_t i = 0; i < computed.size(); ++i)
      if (!used[i] && (best == computed.size() || std::abs(computed[i] - p) < std::abs(computed[best] - p))) best = i;
    if (best < computed.size() && std::abs(computed[best] - p) <= 5e-4) {
      used[best] = true;
    } else {
      unmatched.push_back(fixed(p));
    }
  }
  std::vector<std::string> left;
  for (std::size_t i = 0; i < computed.size(); ++i)
    if (!used[i]) left.push_back(fixed(computed[i]));
  Outcome o;
  o.pass = unmatched.empty() && computed.size() == printed.size();
  std::ostringstream d;
  d << (printed.size() - unmatched.size()) << "/" << printed.size() << " matched";
  for (std::size_t i = 0; i < unmatched.size(); ++i)
    d << "; printed " << unmatched[i] << " vs computed " << (i < left.size() ? left[i] : "none");
  o.detail = d.str();
  return o;
}

Outcome table_audit() {
  const AuditReport rep = audit_tables();
  std::size_t ok = 0, eq_ok = 0;
  for (const auto& c : rep.constants) ok += c.matches ? 1 : 0;
  for (const auto& e : rep.equations) eq_ok += e.ok ? 1 : 0;
  std::set<std::string> exceptions;
  for (const auto& f : rep.findings) exceptions.insert(f.label);
  Outcome o;
  // the gamma51 repair is reported twice (raw identity failure and the repair itself)
  o.pass = rep.passed() && exceptions == std::set<std::string>{"gamma25", "gamma51"} && eq_ok == rep.equations.size();
  o.detail = std::to_string(ok) + "/" + std::to_string(rep.constants.size()) + " constants, " + std::to_string(eq_ok) +
             "/" + std::to_string(rep.equations.size()) + " equations, exceptions:";
  for (const auto& f : rep.findings)
    if (!f.documented) o.detail += " " + f.label + "(undocumented)";
  for (const auto& label : exceptions) o.detail += " " + label;
  return o;
}

Outcome theorem_pair(const char* id, std::vector<int> ns, double budget_per_n) {
  Outcome o{true, ""};
  for (int n : ns) {
    for (IndexKind k : {IndexKind::SO, IndexKind::SO_red}) {
      const auto t0 = std::chrono::steady_clock::now();
      const TheoremReport rep = verify_theorem(id, n, k);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const bool fast = secs < budget_per_n;
      o.pass = o.pass && rep.passed && fast;
      o.detail += (o.detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " " +
                  std::string(index_name(k)) + (rep.passed ? " ok" : " MISMATCH") + (fast ? "" : " SLOW") + " (" +
                  fixed(secs, 2) + "s, " + std::to_string(rep.population) + " graphs)";
    }
  }
  return o;
}

Outcome transform_suite() {
  std::size_t sites = 0, bad = 0;
  std::map<std::string, std::size_t> cases;
  for (int c = 0; c <= 3; ++c)
    for (int n = 1; n <= 10; ++n) {
      GraphPopulation pop;
      try {
        pop = enumerate(n, c);
      } catch (const Error& e) {
        if (e.code() == Errc::InfeasibleClass) continue;
        throw;
      }
      pop.for_each([&](std::size_t, const MolGraph& g) {
        const double so = sombor_index(g).value, red = reduced_sombor_index(g).value;
        for (Lemma l : kAllLemmas)
          for (const auto& s : find_sites(g, l)) {
            const MolGraph h = apply_transform(g, s);
            ++sites;
            ++cases[std::string(lemma_name(l)) + "/t" + std::to_string(s.t)];
            const bool ok = h.is_connected() && h.is_chemical() && h.edge_count() == g.edge_count() &&
                            sombor_index(h).value - so < -1e-9 && reduced_sombor_index(h).value - red < -1e-9;
            if (!ok) ++bad;
          }
      });
    }
  Outcome o;
  std::set<std::string> lemmas;
  for (const auto& [key, count] : cases) lemmas.insert(key.substr(0, 2));
  o.pass = bad == 0 && lemmas.size() == 4;
  o.detail = std::to_string(sites) + " sites, " + std::to_string(cases.size()) + " lemma/t cases, " +
             std::to_string(bad) + " counterexamples";
  return o;
}

Outcome oracle_equivalence() {
  int classes = 0, differing = 0;
  std::size_t graphs = 0;
  std::string where;
  for (int c = 0; c <= 3; ++c)
    for (int n = 1; n <= 8; ++n) {
      GraphPopulation fast, slow;
      try {
        fast = enumerate(n, c);
      } catch (const Error& e) {
        if (e.code() != Errc::InfeasibleClass) throw;
        bool oracle_empty = false;
        try {
          enumerate_naive_oracle(n, c);
        } catch (const Error& e2) {
          oracle_empty = e2.code() == Errc::InfeasibleClass;
        }
        if (!oracle_empty) {
          ++differing;
          where += " n=" + std::to_string(n) + ",c=" + std::to_string(c);
        }
        continue;
      }
      slow = enumerate_naive_oracle(n, c);
      ++classes;
      graphs += fast.size();
      if (fast.codes != slow.codes) {
        ++differing;
        where += " n=" + std::to_string(n) + ",c=" + std::to_string(c);
      }
    }
  Outcome o;
  o.pass = differing == 0;
  o.detail = std::to_string(classes) + " classes, " + std::to_string(graphs) + " graphs, " +
             std::to_string(differing) + " differ" + where;
  return o;
}

Outcome regression() {
  const RegressionReport rep = reproduce_published_models(load_dataset(kOctaneCsv));
  Outcome o;
  o.pass = rep.models_ok() && rep.models.size() == 4;
  for (const auto& m : rep.models) {
    o.detail += (o.detail.empty() ? "" : "; ") + std::string(property_name(m.published.property)) +
                " a=" + fixed(m.fitted.intercept) + " b=" + fixed(m.fitted.slope, 5) +
                " R2=" + fixed(m.fitted.r_squared) + (m.ok() ? "" : " OUT");
  }
  return o;
}

Outcome identity_suite() {
  std::mt19937_64 rng(20240601);
  int failures = 0;
  for (int i = 0; i < 10000; ++i) {
    const MolGraph g = sombor::testing::random_chemical_graph(rng);
    const EdgeTypeVector m = edge_type_vector(g);
    const DegreeDistribution dd = degree_distribution(g);
    bool ok = g.is_connected() && m.total() == g.edge_count() && dd.degree_sum() == 2 * g.edge_count();
    for (int k = 1; k <= 4; ++k) ok = ok && m.endpoint_count(k) == k * dd.count(k);
    for (IndexKind kind : kAllIndexKinds) {
      const double direct = compute_index(g, kind).value;
      ok = ok && std::abs(index_from_edge_vector(m, kind).value - direct) <= 1e-9 * std::max(1.0, std::abs(direct));
    }
    failures += ok ? 0 : 1;
  }
  return {failures == 0, "10000 graphs, " + std::to_string(failures) + " failures"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "octane so_red values", 1, octane_values},
      {2, "table audit", 1, table_audit},
      {3, "trees 3.3/3.4 n=13..15", 3 * 30, [] { return theorem_pair("3.3", {13, 14, 15}, 30); }},
      {4, "unicyclic 3.6/3.7 n=8..10", 3 * 60, [] { return theorem_pair("3.6", {8, 9, 10}, 60); }},
      {5, "bicyclic 3.9/3.10 n=9,10", 2 * 300, [] { return theorem_pair("3.9", {9, 10}, 300); }},
      {6, "tricyclic 3.12/3.13 n=10,11", 2 * 900, [] { return theorem_pair("3.12", {10, 11}, 900); }},
      {7, "transformations n<=10", 600, transform_suite},
      {8, "enumerator vs naive oracle n<=8", 600, oracle_equivalence},
      {9, "octane regressions", 1, regression},
      {10, "random identity suite", 10, identity_suite},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_seconds;
    const bool pass = o.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %2d %-4s %-34s %8.2fs  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                o.detail.c_str(), in_time ? "" : " [over time budget]");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
