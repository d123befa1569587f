#pragma once

#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sombor/canonical.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

inline constexpr std::size_t kOctaneIsomers = 18;

enum class Property { AcenFac, Entropy, SNar, HNar };

inline constexpr std::array<Property, 4> kAllProperties{Property::AcenFac, Property::Entropy, Property::SNar,
                                                        Property::HNar};

inline std::string_view property_name(Property p) {
  switch (p) {
    case Property::AcenFac: return "acenfac";
    case Property::Entropy: return "entropy";
    case Property::SNar: return "snar";
    case Property::HNar: return "hnar";
  }
  return "?";
}

struct PropertyRecord {
  std::string isomer_name;
  std::string graph_file;
  MolGraph graph;
  double acenfac = 0.0, entropy = 0.0, snar = 0.0, hnar = 0.0;

  double get(Property p) const {
    switch (p) {
      case Property::AcenFac: return acenfac;
      case Property::Entropy: return entropy;
      case Property::SNar: return snar;
      case Property::HNar: return hnar;
    }
    return 0.0;
  }
};

namespace detail {

// Splits one CSV line; double quotes protect commas, "" is a literal quote.
inline std::vector<std::string> split_csv_line(const std::string& line, int line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch != '"') {
        fields.back() += ch;
      } else if (i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else {
        quoted = false;
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.emplace_back();
    } else if (ch != '\r') {
      fields.back() += ch;
    }
  }
  if (quoted) throw Error(Errc::MalformedCSV, "line " + std::to_string(line_no) + ": unterminated quote");
  return fields;
}

inline double parse_real(const std::string& s, int line_no, std::string_view column) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v)) {
    throw Error(Errc::MalformedCSV,
                "line " + std::to_string(line_no) + ": column " + std::string(column) + " is not a number: '" + s + "'");
  }
  return v;
}

}  // namespace detail

/// Loads the octane property table; graph paths are resolved relative to the CSV file.
inline std::vector<PropertyRecord> load_dataset(const std::filesystem::path& csv) {
  std::ifstream in(csv);
  if (!in) throw Error(Errc::MissingFixture, "cannot open dataset " + csv.string());
  const auto base = csv.parent_path();

  std::string line;
  int line_no = 0;
  while (std::getline(in, line) && line.find_first_not_of(" \t\r") == std::string::npos) ++line_no;
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "name,graph,acenfac,entropy,snar,hnar") {
    throw Error(Errc::MalformedCSV, "expected header 'name,graph,acenfac,entropy,snar,hnar'");
  }

  std::vector<PropertyRecord> out;
  std::set<CanonicalCode> codes;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto f = detail::split_csv_line(line, line_no);
    if (f.size() != 6) {
      throw Error(Errc::MalformedCSV, "line " + std::to_string(line_no) + ": expected 6 fields, got " +
                                          std::to_string(f.size()));
    }
    PropertyRecord r;
    r.isomer_name = f[0];
    r.graph_file = f[1];
    r.acenfac = detail::parse_real(f[2], line_no, "acenfac");
    r.entropy = detail::parse_real(f[3], line_no, "entropy");
    r.snar = detail::parse_real(f[4], line_no, "snar");
    r.hnar = detail::parse_real(f[5], line_no, "hnar");

    const auto path = base / r.graph_file;
    std::ifstream gin(path);
    if (!gin) throw Error(Errc::MissingFixture, "fixture not found: " + path.string());
    std::stringstream text;
    text << gin.rdbuf();
    try {
      r.graph = parse_graph(text.str());
    } catch (const Error& e) {
      throw Error(Errc::NonChemicalFixture, r.graph_file + ": " + e.what());
    }
    const bool tree = r.graph.is_connected() && r.graph.edge_count() == r.graph.vertex_count() - 1;
    if (r.graph.vertex_count() != 8 || !tree || !r.graph.is_chemical()) {
      throw Error(Errc::NonChemicalFixture, r.graph_file + " is not a chemical tree on 8 vertices");
    }
    if (!codes.insert(canonical_code(r.graph)).second) {
      throw Error(Errc::WrongIsomerCount, r.graph_file + " duplicates an earlier isomer");
    }
    out.push_back(std::move(r));
  }
  if (out.size() != kOctaneIsomers) {
    throw Error(Errc::WrongIsomerCount, "expected 18 isomers, got " + std::to_string(out.size()));
  }
  return out;
}

inline std::vector<double> octane_index_values(const std::vector<PropertyRecord>& records, IndexKind kind) {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(compute_index(r.graph, kind).value);
  return out;
}

struct RegressionModel {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  std::size_t sample_size = 0;

  double predict(double x) const { return intercept + slope * x; }
};

/// Ordinary least squares y = intercept + slope·x. A constant response gives slope 0 and R² = 0.
inline RegressionModel fit_linear(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw Error(Errc::DegenerateInput, "x and y differ in length");
  if (x.size() < 3) throw Error(Errc::DegenerateInput, "need at least 3 points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 1e-300 * (1 + mx * mx)) throw Error(Errc::DegenerateInput, "x is constant");

  RegressionModel m;
  m.sample_size = x.size();
  m.slope = sxy / sxx;
  m.intercept = my - m.slope * mx;
  if (syy == 0.0) {
    m.slope = 0.0;
    m.intercept = my;
    m.r_squared = 0.0;
    return m;
  }
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double e = y[i] - m.predict(x[i]);
    ss_res += e * e;
  }
  m.r_squared = 1.0 - ss_res / syy;
  return m;
}

inline double pearson_r(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    syy += y[i] * y[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
}

/// Published single-descriptor models against SO_red and their acceptance windows.
struct PublishedModel {
  Property property;
  double intercept, slope, r_squared;
  double intercept_tol, slope_tol, r_squared_tol;
};

inline constexpr std::array<PublishedModel, 4> kPublishedModels{{
    {Property::AcenFac, 0.4881, -0.0105, 0.9213, 5e-3, 5e-4, 5e-3},
    {Property::Entropy, 124.5, -1.317, 0.8922, 1.0, 5e-2, 5e-3},
    {Property::SNar, 5.003, -0.1015, 0.9736, 5e-3, 5e-4, 5e-3},
    {Property::HNar, 1.793, -0.02654, 0.9341, 5e-3, 5e-4, 5e-3},
}};

/// Published R² grid: rows follow kAllProperties, columns follow kGridKinds.
inline constexpr std::array<IndexKind, 7> kGridKinds{IndexKind::SO_red, IndexKind::M1,     IndexKind::M2, IndexKind::F,
                                                    IndexKind::Randic, IndexKind::SCI, IndexKind::SDD};

inline constexpr std::array<std::array<double, 7>, 4> kPublishedRSquared{{
    {0.9213, 0.9468, 0.973, 0.9313, 0.8176, 0.8647, 0.8118},
    {0.8922, 0.9107, 0.8868, 0.9077, 0.8205, 0.8518, 0.8276},
    {0.9736, 0.9974, 0.8940, 0.9453, 0.9487, 0.9710, 0.9252},
    {0.9341, 0.9774, 0.8941, 0.9453, 0.9487, 0.9710, 0.9252},
}};

inline constexpr double kGridFlagThreshold = 0.02;

struct ModelCheck {
  PublishedModel published;
  RegressionModel fitted;
  double pearson = 0.0;
  bool intercept_ok = false, slope_ok = false, r_squared_ok = false;
  bool ok() const { return intercept_ok && slope_ok && r_squared_ok; }
};

struct GridCell {
  Property property;
  IndexKind kind;
  double fitted = 0.0;
  double published = 0.0;
  bool flagged = false;  // |fitted − published| > 0.02
};

struct RegressionReport {
  std::vector<ModelCheck> models;
  std::vector<GridCell> grid;
  bool models_ok() const {
    for (const auto& m : models)
      if (!m.ok()) return false;
    return !models.empty();
  }
};

inline RegressionReport reproduce_published_models(const std::vector<PropertyRecord>& records) {
  RegressionReport rep;
  const auto so_red = octane_index_values(records, IndexKind::SO_red);
  auto column = [&](Property p) {
    std::vector<double> y;
    for (const auto& r : records) y.push_back(r.get(p));
    return y;
  };
  for (const auto& pub : kPublishedModels) {
    const auto y = column(pub.property);
    ModelCheck mc{pub, fit_linear(so_red, y), pearson_r(so_red, y)};
    mc.intercept_ok = std::abs(mc.fitted.intercept - pub.intercept) <= pub.intercept_tol;
    mc.slope_ok = std::abs(mc.fitted.slope - pub.slope) <= pub.slope_tol;
    mc.r_squared_ok = std::abs(mc.fitted.r_squared - pub.r_squared) <= pub.r_squared_tol;
    rep.models.push_back(mc);
  }
  for (std::size_t pi = 0; pi < kAllProperties.size(); ++pi) {
    const auto y = column(kAllProperties[pi]);
    for (std::size_t ki = 0; ki < kGridKinds.size(); ++ki) {
      const auto x = octane_index_values(records, kGridKinds[ki]);
      GridCell cell{kAllProperties[pi], kGridKinds[ki], fit_linear(x, y).r_squared, kPublishedRSquared[pi][ki]};
      cell.flagged = std::abs(cell.fitted - cell.published) > kGridFlagThreshold;
      rep.grid.push_back(cell);
    }
  }
  return rep;
}

}  // namespace sombor
