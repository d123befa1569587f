#pragma once

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sombor/sombor.hpp"

#ifndef SOMBOR_DATA_DIR
#define SOMBOR_DATA_DIR "data"
#endif

namespace sombor::cli {

enum class Format { Text, Csv };

struct Options {
  std::string file;
  std::string kind;
  int n = -1;
  int c = -1;
  bool count_only = false;
  std::string output;
  std::string format = "text";
  int precision = 4;
  bool precision_set = false;
  double tolerance = kRankTolerance;
  int top = 10;
  std::string lemma;
  std::vector<int> anchors;
  std::string theorem;
  std::string data;
  bool dump_catalog = false;
};

namespace detail {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

// Thrown for option combinations CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::MalformedInput, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MolGraph load_graph(const std::string& path) { return parse_graph(read_text(path)); }

inline IndexKind require_kind(const std::string& s) {
  if (auto k = parse_index_kind(s)) return *k;
  throw UsageError("unknown index kind '" + s + "' (so, so_red, m1, m2, f, randic, sci, sdd)");
}

inline Format require_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  throw UsageError("--format must be text or csv");
}

inline void require_class(const Options& o) {
  if (o.n < 0) throw UsageError("--n is required");
  if (o.c < 0) throw UsageError("--c is required");
}

inline std::string fmt(double x, const Options& o) { return format_value(x, o.precision); }

inline std::string padded(const std::string& s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

inline std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

// --------------------------------------------------------------------------

inline int cmd_index(const Options& o, std::ostream& out) {
  if (!o.kind.empty()) {
    const IndexKind kind = require_kind(o.kind);
    out << fmt(compute_index(load_graph(o.file), kind).value, o) << '\n';
    return kExitOk;
  }
  const MolGraph g = load_graph(o.file);
  for (IndexKind k : kAllIndexKinds) out << padded(std::string(index_name(k)), 8) << fmt(compute_index(g, k).value, o) << '\n';
  return kExitOk;
}

inline int cmd_enum(const Options& o, std::ostream& out) {
  require_class(o);
  const GraphPopulation pop = enumerate(o.n, o.c);
  if (!o.count_only && !o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw Error(Errc::MalformedInput, "cannot write " + o.output);
    pop.for_each([&](std::size_t i, const MolGraph& g) {
      file << "# graph " << i + 1 << "/" << pop.size() << " n=" << o.n << " c=" << o.c << " code=" << pop.codes[i].hex()
           << '\n'
           << write_graph(g);
    });
  }
  out << o.n << ' ' << o.c << ' ' << pop.size() << '\n';
  return kExitOk;
}

inline int cmd_rank(const Options& o, std::ostream& out) {
  require_class(o);
  const IndexKind kind = require_kind(o.kind.empty() ? "so" : o.kind);
  const Format format = require_format(o.format);
  if (o.top < 0) throw UsageError("--top must be non-negative");
  if (!(o.tolerance >= 0)) throw UsageError("--tolerance must be non-negative");
  const GraphPopulation pop = enumerate(o.n, o.c);
  const RankedOrdering ranked = rank_by_index(pop, kind, o.tolerance);
  const std::size_t shown = o.top == 0 ? ranked.groups.size() : std::min<std::size_t>(o.top, ranked.groups.size());

  if (format == Format::Csv) {
    out << "rank,value,size,families\n";
  } else {
    out << "# n=" << o.n << " c=" << o.c << " kind=" << index_name(kind) << " graphs=" << pop.size()
        << " groups=" << ranked.groups.size() << " shown=" << shown << '\n';
    out << padded("rank", 6) << padded("value", 12) << padded("size", 6) << "families\n";
  }
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& grp = ranked.groups[i];
    std::vector<std::string> labels;
    for (std::size_t idx : grp.members) labels.push_back(classify(pop.graph(idx)).name());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    if (format == Format::Csv) {
      out << i + 1 << ',' << fmt(grp.value, o) << ',' << grp.members.size() << ',' << join(labels, ";") << '\n';
    } else {
      out << padded(std::to_string(i + 1), 6) << padded(fmt(grp.value, o), 12)
          << padded(std::to_string(grp.members.size()), 6) << join(labels, ",") << '\n';
    }
  }
  return kExitOk;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
  const MolGraph g = load_graph(o.file);
  out << classify(g).name() << '\n';
  return kExitOk;
}

inline int cmd_transform(const Options& o, std::ostream& out) {
  const auto lemma = parse_lemma(o.lemma);
  if (!lemma) throw UsageError("--lemma must be one of T1, T2, T3, T4");
  const MolGraph g = load_graph(o.file);
  if (o.anchors.empty()) {
    const auto sites = find_sites(g, *lemma);
    for (const auto& s : sites) {
      std::vector<std::string> a;
      for (int v : s.anchors()) a.push_back(std::to_string(v));
      out << lemma_name(*lemma) << " anchors=" << join(a, ",") << " k=" << s.k() << " l=" << s.l() << " t=" << s.t
          << '\n';
    }
    if (sites.empty()) out << "# no " << lemma_name(*lemma) << " sites\n";
    return kExitOk;
  }
  const TransformSite site = make_site(g, *lemma, o.anchors);
  const MolGraph h = apply_transform(g, site);
  const double d_so = sombor_index(h).value - sombor_index(g).value;
  const double d_red = reduced_sombor_index(h).value - reduced_sombor_index(g).value;
  if (!o.output.empty()) {
    std::ofstream file(o.output);
    if (!file) throw Error(Errc::MalformedInput, "cannot write " + o.output);
    file << write_graph(h);
    out << "delta_so " << fmt(d_so, o) << "\ndelta_so_red " << fmt(d_red, o) << '\n';
  } else {
    out << write_graph(h) << "# delta_so " << fmt(d_so, o) << "\n# delta_so_red " << fmt(d_red, o) << '\n';
  }
  return kExitOk;
}

inline int verify_support(const Options& o, std::ostream& out) {
  if (o.n < 0) throw UsageError("--n is required");
  const std::string family = o.theorem == "3.1" ? "Phi" : "Omega";
  std::vector<IndexKind> kinds{IndexKind::SO, IndexKind::SO_red};
  if (!o.kind.empty()) kinds = {require_kind(o.kind)};
  for (IndexKind k : kinds)
    if (k != IndexKind::SO && k != IndexKind::SO_red) throw UsageError("theorem " + o.theorem + " concerns so and so_red");
  if (family == "Omega" && o.n < catalog().at("Omega").min_n) {
    throw Error(Errc::InfeasibleN, "theorem 3.2 needs n >= 13");
  }

  bool ok = true;
  out << "theorem " << o.theorem << " n=" << o.n << " family=" << family << '\n';
  for (IndexKind k : kinds) {
    const SupportReport rep = theorem31_32_support(o.n, k);
    for (const auto& chk : rep.checks) {
      if (chk.family != family) continue;
      out << "kind=" << index_name(k) << " subclass=\"" << chk.subclass << "\" size=" << chk.subclass_size
          << " members=" << chk.family_members << " family_value=" << fmt(chk.family_value, o)
          << " best_other=" << (chk.best_other ? fmt(*chk.best_other, o) : std::string("none"))
          << " status=" << (chk.passed ? "ok" : "violated") << '\n';
      ok = ok && chk.passed;
    }
  }
  out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
  return ok ? kExitOk : kExitFail;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  if (o.theorem == "3.1" || o.theorem == "3.2") return verify_support(o, out);
  if (o.n < 0) throw UsageError("--n is required");
  const TheoremStatement* th = nullptr;
  for (const auto& t : theorem_statements())
    if (t.id == o.theorem) th = &t;
  if (!th) throw UsageError("unknown theorem '" + o.theorem + "' (3.1 3.2 3.3 3.4 3.6 3.7 3.9 3.10 3.12 3.13)");
  const IndexKind kind = o.kind.empty() ? th->kind : require_kind(o.kind);
  if (kind != IndexKind::SO && kind != IndexKind::SO_red) throw UsageError("ordering theorems concern so and so_red");

  const TheoremReport rep = verify_theorem(o.theorem, o.n, kind);
  out << "theorem " << rep.theorem << " kind=" << index_name(rep.kind) << " n=" << rep.n << " c=" << rep.c
      << " population=" << rep.population << '\n';
  std::vector<std::string> expected;
  for (const auto& g : rep.groups) expected.push_back(g.expected);
  out << "order: [" << join(expected, ", ") << "]\n";
  out << padded("group", 7) << padded("expected", 10) << padded("value", 12) << padded("closed_form", 13)
      << padded("size", 6) << padded("observed", 16) << "status\n";
  for (std::size_t i = 0; i < rep.groups.size(); ++i) {
    const auto& g = rep.groups[i];
    out << padded(std::to_string(i + 1), 7) << padded(g.expected, 10) << padded(fmt(g.value, o), 12)
        << padded(fmt(g.closed_form, o), 13) << padded(std::to_string(g.size), 6)
        << padded(join(g.observed, ","), 16) << (g.ok ? "ok" : "mismatch") << '\n';
  }
  if (rep.next_value) out << "next value: " << fmt(*rep.next_value, o) << '\n';
  out << "minimum gap: " << format_value(rep.min_gap, std::max(o.precision, 6)) << '\n';
  out << "result: " << (rep.passed ? "PASS" : "FAIL") << '\n';
  return rep.passed ? kExitOk : kExitFail;
}

inline int cmd_audit(const Options& o, std::ostream& out) {
  const Format format = require_format(o.format);
  if (o.dump_catalog) {
    out << kFamilyCatalogText;
    return kExitOk;
  }
  const int prec = o.precision_set ? o.precision : 9;
  const AuditReport rep = audit_tables();
  auto status = [](bool ok) { return ok ? "ok" : "mismatch"; };

  if (format == Format::Csv) {
    out << "section,label,item,printed,recomputed,status\n";
    for (const auto& id : rep.identities)
      out << "identity," << id.label << ',' << (id.repaired ? "repaired" : "as_printed") << ",,," << status(id.ok())
          << '\n';
    for (const auto& c : rep.constants)
      out << "constant," << c.label << ',' << index_name(c.kind) << ',' << c.printed << ','
          << format_value(c.recomputed, prec) << ',' << (c.matches ? "ok" : c.superseded ? "superseded" : "mismatch")
          << '\n';
    for (const auto& e : rep.equations)
      out << "equation," << e.name << ',' << e.expression << ',' << format_value(e.printed, 9) << ','
          << format_value(e.recomputed, prec) << ',' << status(e.ok) << '\n';
    for (const auto& f : rep.findings)
      out << "finding," << f.label << ",\"" << f.what << "\",,," << (f.documented ? "documented" : "undocumented")
          << '\n';
  } else {
    out << "# identities (" << rep.identities.size() << ")\n";
    for (const auto& id : rep.identities)
      out << padded(id.label, 10) << padded(id.repaired ? "repaired" : "as-printed", 12) << status(id.ok())
          << (id.detail.empty() ? "" : "  " + id.detail) << '\n';
    out << "# constants (" << rep.constants.size() << ")\n";
    out << padded("label", 10) << padded("index", 8) << padded("printed", 14) << padded("recomputed", 16) << "status\n";
    for (const auto& c : rep.constants)
      out << padded(c.label, 10) << padded(std::string(index_name(c.kind)), 8) << padded(c.printed, 14)
          << padded(format_value(c.recomputed, prec), 16)
          << (c.matches ? "ok" : c.superseded ? "superseded" : "mismatch") << '\n';
    out << "# equations\n";
    for (const auto& e : rep.equations)
      out << padded(e.name, 20) << padded(e.expression, 38) << padded(format_value(e.recomputed, prec), 16)
          << status(e.ok) << '\n';
    out << "# findings (" << rep.findings.size() << ", undocumented " << rep.undocumented_findings() << ")\n";
    for (const auto& f : rep.findings)
      out << padded(f.label, 10) << (f.documented ? "documented  " : "NEW  ") << f.what << '\n';
    out << "result: " << (rep.passed() ? "PASS" : "FAIL") << '\n';
  }
  return rep.passed() ? kExitOk : kExitFail;
}

inline int cmd_regress(const Options& o, std::ostream& out) {
  const Format format = require_format(o.format);
  const std::string path = o.data.empty() ? std::string(SOMBOR_DATA_DIR) + "/octane/octane_properties.csv" : o.data;
  const auto records = load_dataset(path);
  const RegressionReport rep = reproduce_published_models(records);

  if (format == Format::Csv) {
    out << "section,property,index,intercept,slope,r_squared,published,status\n";
    for (const auto& m : rep.models)
      out << "model," << property_name(m.published.property) << ",so_red," << fmt(m.fitted.intercept, o) << ','
          << fmt(m.fitted.slope, o) << ',' << fmt(m.fitted.r_squared, o) << ',' << fmt(m.published.r_squared, o) << ','
          << (m.ok() ? "ok" : "out_of_tolerance") << '\n';
    for (const auto& c : rep.grid)
      out << "r_squared," << property_name(c.property) << ',' << index_name(c.kind) << ",,," << fmt(c.fitted, o) << ','
          << fmt(c.published, o) << ',' << (c.flagged ? "flagged" : "ok") << '\n';
  } else {
    out << "# models against so_red (n=" << records.size() << ")\n";
    out << padded("property", 10) << padded("intercept", 12) << padded("slope", 12) << padded("r_squared", 11)
        << padded("r", 9) << "status\n";
    for (const auto& m : rep.models)
      out << padded(std::string(property_name(m.published.property)), 10) << padded(fmt(m.fitted.intercept, o), 12)
          << padded(fmt(m.fitted.slope, o), 12) << padded(fmt(m.fitted.r_squared, o), 11)
          << padded(fmt(m.pearson, o), 9) << (m.ok() ? "ok" : "out-of-tolerance") << '\n';
    out << "# r_squared grid (fitted/published, * = differs by more than " << kGridFlagThreshold << ")\n";
    out << padded("property", 10);
    for (IndexKind k : kGridKinds) out << padded(std::string(index_name(k)), 16);
    out << '\n';
    for (Property p : kAllProperties) {
      out << padded(std::string(property_name(p)), 10);
      for (const auto& c : rep.grid) {
        if (c.property != p) continue;
        out << padded(fmt(c.fitted, o) + "/" + fmt(c.published, o) + (c.flagged ? "*" : ""), 16);
      }
      out << '\n';
    }
  }
  return rep.models_ok() ? kExitOk : kExitFail;
}

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  Options o;
  CLI::App app{"Sombor-index toolkit for chemical graphs", "sombor"};
  app.require_subcommand(1, 1);

  auto* index = app.add_subcommand("index", "Compute indices of a .graph file");
  index->add_option("--file", o.file, "Input .graph file")->required();
  index->add_option("--kind", o.kind, "so, so_red, m1, m2, f, randic, sci, sdd (default: all)");

  auto* en = app.add_subcommand("enum", "Enumerate connected chemical graphs with n vertices and cyclomatic number c");
  en->add_option("--n", o.n, "Vertex count")->required();
  en->add_option("--c", o.c, "Cyclomatic number 0..3")->required();
  en->add_flag("--count-only", o.count_only, "Print only the count line");
  en->add_option("--output", o.output, "Write all members as concatenated .graph records");

  auto* rank = app.add_subcommand("rank", "Rank a population by an index");
  rank->add_option("--n", o.n, "Vertex count")->required();
  rank->add_option("--c", o.c, "Cyclomatic number 0..3")->required();
  rank->add_option("--kind", o.kind, "Index (default so)");
  rank->add_option("--top", o.top, "Number of value groups to print, 0 = all (default 10)");
  rank->add_option("--tolerance", o.tolerance, "Values within this distance share a group (default 1e-9)");

  auto* cls = app.add_subcommand("classify", "Name the extremal family of a .graph file");
  cls->add_option("--file", o.file, "Input .graph file")->required();

  auto* tr = app.add_subcommand("transform", "List or apply index-decreasing transformations");
  tr->add_option("--file", o.file, "Input .graph file")->required();
  tr->add_option("--lemma", o.lemma, "T1, T2, T3 or T4")->required();
  tr->add_option("--anchors", o.anchors, "Comma separated anchor vertices; omit to list sites")->delimiter(',');
  tr->add_option("--output", o.output, "Write the transformed graph here");

  auto* ver = app.add_subcommand("verify", "Verify an ordering theorem by exhaustive ranking");
  ver->add_option("--theorem", o.theorem, "3.1 3.2 3.3 3.4 3.6 3.7 3.9 3.10 3.12 3.13")->required();
  ver->add_option("--n", o.n, "Vertex count")->required();
  ver->add_option("--kind", o.kind, "so or so_red (default: the theorem's own index)");

  auto* aud = app.add_subcommand("audit", "Check the family tables against identities and recomputation");
  aud->add_flag("--dump-catalog", o.dump_catalog, "Print the bundled catalog and exit");

  auto* reg = app.add_subcommand("regress", "Reproduce the octane regressions");
  reg->add_option("--data", o.data, "octane_properties.csv (default: bundled)");

  for (auto* sub : {index, en, rank, cls, tr, ver, aud, reg}) {
    auto* prec = sub->add_option("--precision", o.precision, "Decimal places (truncated)");
    prec->check(CLI::Range(0, 15));
    (void)prec;
  }
  for (auto* sub : {rank, aud, reg}) sub->add_option("--format", o.format, "text or csv");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    if (auto* p = sub->get_option_no_throw("--precision"); p && p->count() > 0) o.precision_set = true;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "index") return cmd_index(o, out);
    if (name == "enum") return cmd_enum(o, out);
    if (name == "rank") return cmd_rank(o, out);
    if (name == "classify") return cmd_classify(o, out);
    if (name == "transform") return cmd_transform(o, out);
    if (name == "verify") return cmd_verify(o, out);
    if (name == "audit") return cmd_audit(o, out);
    return cmd_regress(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace sombor::cli
