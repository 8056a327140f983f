#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cyclehom/bar_cycles.hpp"
#include "cyclehom/bredon.hpp"
#include "cyclehom/errors.hpp"
#include "cyclehom/io.hpp"
#include "cyclehom/spectral.hpp"

namespace {

using cyclehom::BigInt;
using cyclehom::CoefficientRing;
using cyclehom::Error;
using cyclehom::FgAbelianGroup;
using cyclehom::ParseError;
using cyclehom::UnsupportedCoefficient;
using cyclehom::ValidationError;
using nlohmann::ordered_json;

// Flag combinations outside the supported surface; mapped to exit code 4.
struct UnsupportedParameter : Error {
  using Error::Error;
};

struct Config {
  std::int64_t default_truncation = 0;  // 0: derive from the requested degree
  int parallelism = 1;
};

Config load_config(const std::string& path) {
  Config config;
  if (path.empty()) return config;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw ParseError("config file " + path + " is not a JSON object");
  if (doc.contains("default_truncation")) {
    if (!doc["default_truncation"].is_number_integer())
      throw ParseError("config field \"default_truncation\" must be an integer");
    config.default_truncation = doc["default_truncation"].get<std::int64_t>();
    if (config.default_truncation < 1)
      throw ValidationError("config default_truncation must be positive");
  }
  if (doc.contains("parallelism")) {
    if (!doc["parallelism"].is_number_integer())
      throw ParseError("config field \"parallelism\" must be an integer");
    config.parallelism = doc["parallelism"].get<int>();
    if (config.parallelism < 1) throw ValidationError("config parallelism must be positive");
  }
  return config;
}

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParseError(what + " \"" + text + "\" is not an integer");
  }
  if (used != text.size()) throw ParseError(what + " \"" + text + "\" is not an integer");
  return value;
}

// "p,q", optionally wrapped in parentheses.
cyclehom::bredon::Bidegree parse_bidegree(std::string text) {
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')')
    text = text.substr(1, text.size() - 2);
  const std::size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw ParseError("bidegree \"" + text + "\" must have the form p,q");
  return {parse_integer(text.substr(0, comma), "bidegree entry"),
          parse_integer(text.substr(comma + 1), "bidegree entry")};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos)
    throw ParseError("range \"" + text + "\" must have the form lo..hi");
  const std::int64_t lo = parse_integer(text.substr(0, dots), "range bound");
  const std::int64_t hi = parse_integer(text.substr(dots + 2), "range bound");
  if (lo > hi) throw ParseError("range \"" + text + "\" is empty");
  return {lo, hi};
}

ordered_json group_to_json(const FgAbelianGroup& h) {
  ordered_json out;
  out["rank"] = h.free_rank();
  ordered_json torsion = ordered_json::array();
  for (const BigInt& t : h.torsion()) torsion.push_back(t.str());
  out["torsion"] = std::move(torsion);
  return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << '\n'; }

std::int64_t resolve_truncation(std::int64_t requested, std::int64_t max_degree,
                                const Config& config) {
  std::int64_t truncation = requested;
  if (truncation == 0)
    truncation = config.default_truncation > 0 ? config.default_truncation : max_degree + 1;
  if (max_degree < 0) throw ValidationError("max degree must be nonnegative");
  if (truncation < max_degree + 1)
    throw ValidationError("truncation " + std::to_string(truncation) +
                          " is too small; computing degree " + std::to_string(max_degree) +
                          " needs at least " + std::to_string(max_degree + 1));
  return truncation;
}

void cmd_group_homology(const std::string& group_file, const std::string& coeff_text,
                        std::int64_t max_degree, std::int64_t truncation_arg,
                        const Config& config) {
  const auto g = cyclehom::io::load_group(group_file);
  const auto coeff = CoefficientRing::parse(coeff_text);
  const std::int64_t truncation = resolve_truncation(truncation_arg, max_degree, config);

  auto complex = cyclehom::cycles::normalized_bar_complex(g, truncation);
  if (!coeff.is_integers()) complex = complex.tensor(coeff);
  const auto homology = complex.homology_range(0, max_degree, config.parallelism);

  ordered_json doc;
  doc["format_version"] = "1";
  doc["command"] = "group-homology";
  doc["group"] = g.name();
  doc["group_order"] = g.order();
  doc["coefficients"] = coeff.to_string();
  doc["max_degree"] = max_degree;
  doc["truncation"] = truncation;
  ordered_json degrees = ordered_json::array();
  for (std::int64_t i = 0; i <= max_degree; ++i) {
    ordered_json row;
    row["degree"] = i;
    row["homology"] = group_to_json(homology[static_cast<std::size_t>(i)]);
    degrees.push_back(std::move(row));
  }
  doc["degrees"] = std::move(degrees);
  doc["meta"] = {{"engine", "cyclehom"},
                 {"route", "normalized orbit-free bar complex, sparse Smith reduction"}};
  emit(doc);
}

void cmd_galois(const std::string& action_file, const std::string& coeff_text,
                std::int64_t max_degree, std::int64_t truncation_arg, bool compare_invariants,
                const Config& config) {
  const auto action = cyclehom::io::load_action(action_file);
  const auto coeff = CoefficientRing::parse(coeff_text);
  const std::int64_t truncation = resolve_truncation(truncation_arg, max_degree, config);

  auto orbit = cyclehom::cycles::normalized_orbit_complex(action, truncation);
  if (!coeff.is_integers()) orbit = orbit.tensor(coeff);
  const auto identified = orbit.homology_range(0, max_degree, config.parallelism);

  // The identified-equals-invariants theorem needs the symmetry order
  // invertible in the coefficients: Q always works, Z/n needs gcd(n, order)
  // = 1, and integral coefficients are outside the statement.
  const bool in_hypothesis =
      coeff.is_rationals() ||
      (coeff.is_mod() && cyclehom::big_gcd(coeff.modulus(), BigInt(action.order())) == 1);

  ordered_json doc;
  doc["format_version"] = "1";
  doc["command"] = "galois";
  doc["action"] = action.group().name();
  doc["group_order"] = action.group().order();
  doc["symmetry_order"] = action.order();
  doc["coefficients"] = coeff.to_string();
  doc["max_degree"] = max_degree;
  doc["truncation"] = truncation;
  if (compare_invariants)
    doc["hypothesis"] = in_hypothesis ? "in-hypothesis" : "out-of-hypothesis";

  ordered_json degrees = ordered_json::array();
  for (std::int64_t i = 0; i <= max_degree; ++i) {
    ordered_json row;
    row["degree"] = i;
    row["identified"] = group_to_json(identified[static_cast<std::size_t>(i)]);
    if (compare_invariants) {
      const FgAbelianGroup fixed =
          cyclehom::cycles::invariants_homology(action, coeff, i, truncation);
      row["invariants"] = group_to_json(fixed);
      if (!in_hypothesis)
        row["verdict"] = "out-of-hypothesis";
      else
        row["verdict"] = identified[static_cast<std::size_t>(i)] == fixed ? "equal" : "unequal";
    }
    degrees.push_back(std::move(row));
  }
  doc["degrees"] = std::move(degrees);
  doc["meta"] = {{"engine", "cyclehom"},
                 {"route", "normalized orbit complex; invariants via canonical Smith coordinates"}};
  emit(doc);
}

void cmd_ss(const std::string& group_file, const std::string& coeff_text, std::int64_t max_s,
            std::int64_t max_t) {
  const auto g = cyclehom::io::load_group(group_file);
  const auto coeff = CoefficientRing::parse(coeff_text);
  if (!coeff.is_mod())
    throw UnsupportedCoefficient("spectral pages are computed over Z/l with l prime, got " +
                                 coeff.to_string());
  if (max_s < 0 || max_t < 0) throw ValidationError("grid bounds must be nonnegative");

  // One slot of slack per direction keeps every reported entry equal to the
  // unbounded grid's value; the slack column and row are not reported.
  const auto grid = cyclehom::spectral::build_constant_row_grid(
      g, max_s + 1, max_t + 1, CoefficientRing::integers());
  const cyclehom::spectral::SpectralRun run(grid, coeff.modulus());
  const auto e1 = run.page(1);
  const auto e2 = run.page(2);

  auto window_dims = [&](const cyclehom::spectral::SpectralPage& page) {
    ordered_json rows = ordered_json::array();
    for (std::int64_t s = 0; s <= max_s; ++s) {
      ordered_json row = ordered_json::array();
      for (std::int64_t t = 0; t <= max_t; ++t) row.push_back(page.dim(s, t));
      rows.push_back(std::move(row));
    }
    return rows;
  };

  bool degenerate = true;
  for (std::int64_t s = 0; s <= max_s; ++s)
    for (std::int64_t t = 1; t <= max_t; ++t)
      if (e2.dim(s, t) != 0) degenerate = false;

  const std::int64_t edge_limit = std::min(max_s, max_t);

  ordered_json doc;
  doc["format_version"] = "1";
  doc["command"] = "ss";
  doc["group"] = g.name();
  doc["group_order"] = g.order();
  doc["modulus"] = coeff.modulus().str();
  doc["window"] = {{"max_s", max_s}, {"max_t", max_t}};
  doc["grid_layout"] = "dims[s][t]";
  doc["e1"] = window_dims(e1);
  doc["e2"] = window_dims(e2);
  doc["degenerate_above_bottom_row"] = degenerate;
  ordered_json bottom = ordered_json::array();
  for (std::int64_t s = 0; s <= max_s; ++s) bottom.push_back(e2.dim(s, 0));
  doc["bottom_row"] = std::move(bottom);
  ordered_json edges = ordered_json::array();
  for (std::int64_t n = 0; n <= edge_limit; ++n) {
    ordered_json row;
    row["degree"] = n;
    row["total_dim"] = run.total_cohomology_dim(n);
    row["edge_isomorphism"] = run.edge_is_isomorphism(n);
    edges.push_back(std::move(row));
  }
  doc["edge"] = std::move(edges);
  doc["meta"] = {
      {"engine", "cyclehom"},
      {"orientation",
       "stored grid is homological with arrows decreasing s and t; pages and the edge map are "
       "computed for the mod-l dual, with the first filtration by s"},
      {"internal_window", {{"max_s", max_s + 1}, {"max_t", max_t + 1}}}};
  emit(doc);
}

std::string join_generators(const std::vector<cyclehom::bredon::BredonMonomial>& row) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ", ";
    out += row[i].to_string();
  }
  return out;
}

ordered_json generators_json(const std::vector<cyclehom::bredon::BredonMonomial>& row) {
  ordered_json out = ordered_json::array();
  for (const auto& monomial : row) out.push_back(monomial.to_string());
  return out;
}

void cmd_bredon(const std::string& point_arg, const std::string& cpinf_arg,
                const std::string& table_arg, bool generators, const std::string& format) {
  const int modes = (point_arg.empty() ? 0 : 1) + (cpinf_arg.empty() ? 0 : 1) +
                    (table_arg.empty() ? 0 : 1);
  if (modes != 1)
    throw ParseError("choose exactly one of --point, --cpinf, --gm-table");
  if (format != "json" && format != "csv")
    throw UnsupportedParameter("unsupported output format \"" + format + "\"");

  ordered_json doc;
  doc["format_version"] = "1";
  doc["command"] = "bredon";

  if (!point_arg.empty()) {
    if (generators)
      throw UnsupportedParameter(
          "--generators applies to the projective-space tables, not the point");
    const auto d = parse_bidegree(point_arg);
    if (format == "csv") {
      std::cout << "p,q,dim\n"
                << d.p << ',' << d.q << ',' << cyclehom::bredon::point_dim(d) << '\n';
      return;
    }
    doc["mode"] = "point";
    doc["bidegree"] = {{"p", d.p}, {"q", d.q}};
    doc["dim"] = cyclehom::bredon::point_dim(d);
  } else if (!cpinf_arg.empty()) {
    const auto d = parse_bidegree(cpinf_arg);
    if (generators && d.q != 0)
      throw UnsupportedParameter("generator enumeration is only available on the (s, 0) row");
    const std::int64_t dim = cyclehom::bredon::cp_dim(d);
    if (format == "csv") {
      std::cout << (generators ? "p,q,dim,generators\n" : "p,q,dim\n");
      std::cout << d.p << ',' << d.q << ',' << dim;
      if (generators)
        std::cout << ",\"" << join_generators(cyclehom::bredon::row_generators(d.p)) << '"';
      std::cout << '\n';
      return;
    }
    doc["mode"] = "cpinf";
    doc["bidegree"] = {{"p", d.p}, {"q", d.q}};
    doc["dim"] = dim;
    if (generators) doc["generators"] = generators_json(cyclehom::bredon::row_generators(d.p));
  } else {
    const auto [lo, hi] = parse_range(table_arg);
    if (format == "csv") {
      std::cout << (generators ? "degree,dim,generators\n" : "degree,dim\n");
      for (std::int64_t s = lo; s <= hi; ++s) {
        std::cout << s << ',' << cyclehom::bredon::cp_dim({s, 0});
        if (generators)
          std::cout << ",\"" << join_generators(cyclehom::bredon::row_generators(s)) << '"';
        std::cout << '\n';
      }
      return;
    }
    doc["mode"] = "gm-table";
    doc["range"] = {{"from", lo}, {"to", hi}};
    ordered_json rows = ordered_json::array();
    for (std::int64_t s = lo; s <= hi; ++s) {
      ordered_json row;
      row["degree"] = s;
      row["dim"] = cyclehom::bredon::cp_dim({s, 0});
      if (generators) row["generators"] = generators_json(cyclehom::bredon::row_generators(s));
      rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
  }

  doc["meta"] = {{"engine", "cyclehom"},
                 {"convention", "monomials printed as x_(a,b)·c^j with the c factor explicit"}};
  emit(doc);
}

void cmd_seed_corpus(const std::string& dir) {
  const auto files = cyclehom::io::write_seed_corpus(dir);
  ordered_json doc;
  doc["format_version"] = "1";
  doc["command"] = "seed-corpus";
  doc["dir"] = dir;
  ordered_json list = ordered_json::array();
  for (const auto& f : files) list.push_back(f);
  doc["files"] = std::move(list);
  doc["meta"] = {{"engine", "cyclehom"}};
  emit(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic homology of finite groups, their symmetry quotients, "
               "spectral-sequence windows, and bigraded cohomology tables"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "JSON config: default_truncation, parallelism");

  std::string group_file, action_file, coeff_text = "Z";
  std::int64_t max_degree = 3, truncation = 0, max_s = 4, max_t = 4;
  bool compare_invariants = false;

  auto* gh = app.add_subcommand("group-homology", "Homology of a finite group");
  gh->add_option("group", group_file, "group file (JSON)")->required();
  gh->add_option("--coeff", coeff_text, "coefficients: Z, Q, or Z/n");
  gh->add_option("--max-degree", max_degree, "highest degree to report");
  gh->add_option("--truncation", truncation, "bar truncation (default: max degree + 1)");

  auto* ga = app.add_subcommand("galois", "Homology of the symmetry-orbit complex");
  ga->add_option("action", action_file, "action file (JSON)")->required();
  ga->add_option("--coeff", coeff_text, "coefficients: Z, Q, or Z/n");
  ga->add_option("--max-degree", max_degree, "highest degree to report");
  ga->add_option("--truncation", truncation, "bar truncation (default: max degree + 1)");
  ga->add_flag("--compare-invariants", compare_invariants,
               "also compute fixed classes and report per-degree verdicts");

  auto* ss = app.add_subcommand("ss", "Spectral-sequence window of the constant-row grid");
  ss->add_option("group", group_file, "group file (JSON)")->required();
  ss->add_option("--coeff", coeff_text, "coefficients Z/l, l prime")->required();
  ss->add_option("--max-s", max_s, "reported window width");
  ss->add_option("--max-t", max_t, "reported window height");

  std::string point_arg, cpinf_arg, table_arg, format = "json";
  bool generators = false;
  auto* br = app.add_subcommand("bredon", "Bigraded cohomology tables");
  br->add_option("--point", point_arg, "dim of the point table at p,q");
  br->add_option("--cpinf", cpinf_arg, "dim of the projective-space table at p,q");
  br->add_option("--gm-table", table_arg, "dimension table rows lo..hi");
  br->add_flag("--generators", generators, "list row generators");
  br->add_option("--format", format, "json or csv");

  std::string corpus_dir;
  auto* sc = app.add_subcommand("seed-corpus", "Write the bundled example inputs");
  sc->add_option("--dir", corpus_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    const Config config = load_config(config_path);
    if (gh->parsed())
      cmd_group_homology(group_file, coeff_text, max_degree, truncation, config);
    else if (ga->parsed())
      cmd_galois(action_file, coeff_text, max_degree, truncation, compare_invariants, config);
    else if (ss->parsed())
      cmd_ss(group_file, coeff_text, max_s, max_t);
    else if (br->parsed())
      cmd_bredon(point_arg, cpinf_arg, table_arg, generators, format);
    else if (sc->parsed())
      cmd_seed_corpus(corpus_dir);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnsupportedParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const cyclehom::UnsupportedCoefficient& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const cyclehom::CompositeModulus& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
