#pragma once

// Command-line front end. Every subcommand loads its inputs, calls the
// library and formats the result; exit status is 0 on success, 1 on a domain
// error and 2 on a usage error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frc/frc.hpp"
#include "json.hpp"

namespace frc::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table1Row {
  FrParams params;
  std::size_t k = 0;
  std::int64_t recursive = 0;
  std::int64_t dual = 0;
};

// Parameter sets compared in the published recursive-vs-dual table.
inline std::vector<Table1Row> table1() {
  const std::vector<std::pair<FrParams, std::size_t>> rows{
      {{10, 2, 5, 4}, 3},   {{10, 4, 10, 4}, 4},  {{10, 4, 8, 5}, 3},   {{11, 3, 11, 3}, 6},
      {{11, 4, 11, 4}, 5},  {{12, 2, 8, 3}, 5},   {{12, 2, 8, 3}, 7},   {{12, 2, 6, 4}, 3},
      {{12, 2, 6, 4}, 5},   {{12, 3, 12, 3}, 7},  {{12, 4, 12, 4}, 6},  {{12, 5, 15, 4}, 6},
      {{12, 6, 18, 4}, 6},  {{12, 7, 21, 4}, 6},  {{12, 8, 24, 4}, 6},  {{13, 3, 13, 3}, 8},
      {{13, 8, 26, 4}, 7},  {{14, 8, 28, 4}, 8},  {{14, 12, 42, 4}, 8},
  };
  std::vector<Table1Row> out;
  for (const auto& [p, k] : rows) out.push_back({p, k, recursive_bound(p, k), dual_bound(p, k)});
  return out;
}

namespace detail {

inline SearchOptions search_options_from_env() {
  SearchOptions opt;
  if (const char* cap = std::getenv("FRC_MAX_ENUM")) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(cap, &pos);
      if (pos != std::string(cap).size() || v == 0) throw std::invalid_argument(cap);
      opt.max_states = v;
    } catch (const std::exception&) {
      throw UsageError(std::string("FRC_MAX_ENUM must be a positive integer, got '") + cap + "'");
    }
  }
  return opt;
}

struct LoadedCode {
  std::string descriptor;
  FrCode code;
  std::optional<std::size_t> t;
};

// A path is read from disk; anything else is looked up in the catalog.
inline LoadedCode load_code(const std::string& spec, bool force_catalog) {
  if (!force_catalog && std::filesystem::exists(spec)) {
    auto loaded = io::read_structure_file(spec);
    return {"file:" + spec, validate_fr(std::move(loaded.structure)), loaded.t};
  }
  auto entry = catalog::lookup(spec);
  return {"catalog:" + entry.name, std::move(entry.code), entry.design_t};
}

inline json params_json(const FrParams& p) {
  return {{"n", p.n}, {"alpha", p.alpha}, {"theta", p.theta}, {"rho", p.rho}};
}

inline std::vector<std::size_t> parse_list(const std::string& s, const char* what) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      const long long v = std::stoll(tok, &pos);
      if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string("malformed ") + what + ": '" + s + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Left-aligned fixed-width columns.
inline void print_table(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      out << r[c];
      if (c + 1 < r.size()) out << std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

inline std::string format_structure(const IncidenceStructure& s, const std::string& format) {
  if (format == "matrix") return io::format_matrix_text(s);
  return io::to_json(s).dump(2) + "\n";
}

}  // namespace detail

// Runs one command line (args excludes the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Fractional repetition code toolkit", "frc"};
  app.require_subcommand(1);

  std::string code_arg, catalog_arg, format = "json";
  auto add_code = [&](CLI::App* sub, bool required) {
    auto* grp = sub->add_option_group("input");
    grp->add_option("--code", code_arg, "code file (text matrix or JSON) or catalog name");
    grp->add_option("--catalog", catalog_arg, "catalog entry name");
    if (required) grp->require_option(1);
    else grp->require_option(0, 1);
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(allowed));
  };
  auto load = [&]() { return catalog_arg.empty() ? load_code(code_arg, false) : load_code(catalog_arg, true); };

  auto* validate = app.add_subcommand("validate", "check a structure is an FR code and print its parameters");
  add_code(validate, true);
  add_format(validate, {"json", "table"});

  std::string method = "auto";
  auto* hierarchy = app.add_subcommand("hierarchy", "supported file sizes M_k and complementary sizes N_k");
  add_code(hierarchy, true);
  add_format(hierarchy, {"json", "csv", "table"});
  hierarchy->add_option("--method", method, "enumeration orientation")->check(CLI::IsMember({"auto", "direct"}));

  auto* dual_cmd = app.add_subcommand("dual", "transpose of a code");
  add_code(dual_cmd, true);
  add_format(dual_cmd, {"json", "matrix"});

  std::string params_arg;
  std::size_t k_arg = 0;
  auto* bounds = app.add_subcommand("bounds", "recursive, dual and floor upper bounds on M_k");
  add_code(bounds, false);
  bounds->add_option("--params", params_arg, "n,alpha,theta,rho");
  bounds->add_option("--k", k_arg, "single reconstruction degree");
  add_format(bounds, {"json", "csv", "table"});

  std::string left_arg, right_arg;
  bool brute = false;
  auto* tensor_cmd = app.add_subcommand("tensor", "tensor product of two codes");
  tensor_cmd->add_option("--left", left_arg, "first factor (file or catalog name)")->required();
  tensor_cmd->add_option("--right", right_arg, "second factor (file or catalog name)")->required();
  tensor_cmd->add_flag("--brute-force", brute, "enumerate the product instead of convolving factor chains");

  std::size_t g_arg = 0;
  std::string alphas_arg;
  auto* gfr_cmd = app.add_subcommand("gfr", "(g, alpha_1..alpha_s)-GFR code");
  gfr_cmd->add_option("--g", g_arg, "size of the trivial code")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  gfr_cmd->add_option("--alphas", alphas_arg, "comma-separated folds")->required();
  gfr_cmd->add_flag("--brute-force", brute, "enumerate the code instead of convolving");

  std::string design_arg;
  std::size_t t_arg = 0;
  auto* design_cmd = app.add_subcommand("design-check", "verify a t-design and its optimality");
  design_cmd->add_option("--design", design_arg, "design file (JSON with \"t\") or catalog name")->required();
  design_cmd->add_option("--t", t_arg, "strength, overriding the file");
  add_format(design_cmd, {"json", "table"});

  std::string dump_name;
  auto* catalog_cmd = app.add_subcommand("catalog", "built-in codes");
  catalog_cmd->require_subcommand(1);
  auto* cat_list = catalog_cmd->add_subcommand("list", "list entries");
  auto* cat_dump = catalog_cmd->add_subcommand("dump", "print one entry");
  cat_dump->add_option("name", dump_name, "entry name")->required();
  add_format(cat_list, {"json", "table"});
  add_format(cat_dump, {"json", "matrix"});

  std::size_t file_size = 0, seed = 1;
  std::optional<std::size_t> fail_node;
  std::string reconstruct_arg;
  auto* dress_cmd = app.add_subcommand("dress-demo", "encode, distribute, repair and reconstruct a random file");
  add_code(dress_cmd, true);
  dress_cmd->add_option("--file-size", file_size, "outer code dimension M")->required();
  dress_cmd->add_option("--fail", fail_node, "node to fail and repair");
  dress_cmd->add_option("--reconstruct", reconstruct_arg, "comma-separated nodes to decode from");
  dress_cmd->add_option("--seed", seed, "random file seed");

  bool no_timing = false;
  auto* report_cmd = app.add_subcommand("report", "parameters, hierarchy, bounds and optimality flags");
  add_code(report_cmd, true);
  add_format(report_cmd, {"json", "table"});
  report_cmd->add_flag("--no-timing", no_timing, "omit the timing footer");

  auto* table1_cmd = app.add_subcommand("table1", "recursive vs dual bound comparison table");
  add_format(table1_cmd, {"json", "csv", "table"});

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const SearchOptions opt = search_options_from_env();

    if (validate->parsed()) {
      const auto c = load();
      const bool simple = is_simple(c.code.structure());
      if (format == "table") {
        out << "input   " << c.descriptor << "\nparams  " << c.code.params() << "\nsimple  " << (simple ? "yes" : "no")
            << '\n';
      } else {
        json j = params_json(c.code.params());
        j["input"] = c.descriptor;
        j["simple"] = simple;
        out << j.dump(2) << '\n';
      }
    } else if (hierarchy->parsed()) {
      const auto c = load();
      const Hierarchy h =
          full_hierarchy(c.code, method == "direct" ? HierarchyMethod::direct : HierarchyMethod::automatic, opt);
      if (format == "csv") {
        out << staircase_csv(h);
      } else if (format == "table") {
        std::vector<std::vector<std::string>> rows;
        for (std::size_t k = 0; k <= h.n; ++k) rows.push_back({std::to_string(k), std::to_string(h.M(k)), std::to_string(h.N(k))});
        print_table(out, {"k", "M_k", "N_k"}, rows);
      } else {
        out << to_json(h).dump() << '\n';
      }
    } else if (dual_cmd->parsed()) {
      out << format_structure(dual(load().code).structure(), format);
    } else if (bounds->parsed()) {
      FrParams p;
      if (!params_arg.empty()) {
        if (!code_arg.empty() || !catalog_arg.empty()) throw UsageError("give either --params or a code, not both");
        const auto v = parse_list(params_arg, "--params");
        if (v.size() != 4) throw UsageError("--params needs n,alpha,theta,rho");
        p = {v[0], v[1], v[2], v[3]};
        p.check();
      } else if (!code_arg.empty() || !catalog_arg.empty()) {
        p = load().code.params();
      } else {
        throw UsageError("bounds needs --params or a code");
      }
      const BoundProfile prof = bound_profile(p);
      std::vector<BoundRow> rows = prof.rows;
      if (k_arg != 0) {
        if (k_arg > p.n) throw InvalidInput("k = " + std::to_string(k_arg) + " outside 1.." + std::to_string(p.n));
        rows = {prof.rows[k_arg - 1]};
      }
      if (format == "csv") {
        out << "k,recursive,dual,floor,tightest\n";
        for (const auto& r : rows)
          out << r.k << ',' << r.recursive << ',' << r.dual << ',' << r.floor << ',' << r.tightest() << '\n';
      } else if (format == "table") {
        std::vector<std::vector<std::string>> t;
        for (const auto& r : rows)
          t.push_back({std::to_string(r.k), std::to_string(r.recursive), std::to_string(r.dual), std::to_string(r.floor),
                       std::to_string(r.tightest())});
        out << "params " << p << '\n';
        print_table(out, {"k", "recursive", "dual", "floor", "tightest"}, t);
      } else {
        json j{{"params", params_json(p)}, {"rows", json::array()}};
        for (const auto& r : rows) j["rows"].push_back(to_json(r));
        out << j.dump(2) << '\n';
      }
    } else if (tensor_cmd->parsed()) {
      const auto a = load_code(left_arg, false), b = load_code(right_arg, false);
      const FrCode prod = tensor(a.code, b.code);
      Hierarchy h;
      if (brute) {
        h = full_hierarchy(prod, HierarchyMethod::automatic, opt);
      } else {
        const auto chain = tensor_hierarchy(full_hierarchy(a.code, HierarchyMethod::automatic, opt).n_values,
                                            full_hierarchy(b.code, HierarchyMethod::automatic, opt).n_values);
        std::vector<std::size_t> m;
        for (std::size_t v : chain) m.push_back(prod.theta() - v);
        h = make_hierarchy(prod.theta(), std::move(m));
      }
      json j{{"params", params_json(prod.params())},
             {"code", io::to_json(prod.structure())},
             {"hierarchy", to_json(h)},
             {"hierarchy_method", brute ? "enumeration" : "max-convolution"}};
      out << j.dump() << '\n';
    } else if (gfr_cmd->parsed()) {
      const auto alphas = parse_list(alphas_arg, "--alphas");
      for (auto a : alphas)
        if (a == 0) throw UsageError("--alphas entries must be positive");
      const FrCode code = gfr(g_arg, alphas);
      const Hierarchy h = brute ? full_hierarchy(code, HierarchyMethod::direct, opt) : gfr_hierarchy(g_arg, alphas);
      json j{{"params", params_json(code.params())},
             {"code", io::to_json(code.structure())},
             {"hierarchy", to_json(h)},
             {"hierarchy_method", brute ? "enumeration" : "max-convolution"}};
      out << j.dump() << '\n';
    } else if (design_cmd->parsed()) {
      IncidenceStructure s;
      std::optional<std::size_t> t;
      if (std::filesystem::exists(design_arg)) {
        auto loaded = io::read_structure_file(design_arg);
        s = std::move(loaded.structure);
        t = loaded.t;
      } else {
        const TDesign d = catalog::lookup_design(design_arg);
        s = d.structure();
        t = d.t();
      }
      if (t_arg != 0) t = t_arg;
      if (!t) throw UsageError("design strength unknown: add \"t\" to the file or pass --t");
      const TDesign d = verify_t_design(s, *t);
      const OptimalityReport rep = check_design_optimality(d, opt);
      const auto predicted = design_hierarchy(d);
      if (format == "table") {
        out << d.t() << "-(" << d.v() << "," << d.m() << "," << d.lambda() << ") design, b = " << d.b() << '\n';
        out << "lambda^j_i (rows i, columns j):\n";
        for (std::size_t i = 0; i <= d.t(); ++i) {
          out << "  i=" << i << ':';
          for (std::size_t j = 0; i + j <= d.t(); ++j) out << ' ' << lambda_i_j(d.params(), i, j);
          out << '\n';
        }
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : rep.rows)
          rows.push_back({std::to_string(r.file_size), std::to_string(r.smallest_k), std::to_string(r.degree_bound),
                          std::to_string(r.lambda_prediction), r.optimal() ? "yes" : "no"});
        print_table(out, {"M", "smallest_k", "lower_bound", "lambda+1", "optimal"}, rows);
      } else {
        json lam = json::array();
        for (std::size_t i = 0; i <= d.t(); ++i) {
          json row = json::array();
          for (std::size_t j = 0; i + j <= d.t(); ++j) row.push_back(lambda_i_j(d.params(), i, j));
          lam.push_back(row);
        }
        json pred = json::array();
        for (const auto& v : predicted) pred.push_back(v ? json(*v) : json(nullptr));
        json rows = json::array();
        for (const auto& r : rep.rows)
          rows.push_back({{"M", r.file_size}, {"smallest_k", r.smallest_k}, {"lower_bound", r.degree_bound},
                          {"lambda_prediction", r.lambda_prediction}, {"optimal", r.optimal()}});
        json j{{"t", d.t()},         {"v", d.v()},          {"m", d.m()},
               {"lambda", d.lambda()}, {"b", d.b()},          {"lambda_i_j", lam},
               {"predicted_M", pred}, {"hierarchy", to_json(rep.hierarchy)},
               {"optimality", rows},  {"all_optimal", rep.all_optimal()}};
        out << j.dump(2) << '\n';
      }
    } else if (cat_list->parsed()) {
      const auto all = catalog::entries();
      if (format == "table") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& e : all) rows.push_back({e.name, e.code.params().to_string(), e.provenance});
        print_table(out, {"name", "params", "provenance"}, rows);
      } else {
        json j = json::array();
        for (const auto& e : all)
          j.push_back({{"name", e.name}, {"params", params_json(e.code.params())}, {"provenance", e.provenance}});
        out << j.dump(2) << '\n';
      }
    } else if (cat_dump->parsed()) {
      const auto e = catalog::lookup(dump_name);
      if (format == "matrix") {
        out << io::format_matrix_text(e.code.structure());
      } else {
        json j = io::to_json(e.code.structure());
        if (e.design_t) j["t"] = *e.design_t;
        out << j.dump() << '\n';
      }
    } else if (dress_cmd->parsed()) {
      const auto c = load();
      const FrCode& code = c.code;
      if (file_size < 1 || file_size > code.theta())
        throw InvalidInput("--file-size must be in 1.." + std::to_string(code.theta()));
      std::mt19937 rng(static_cast<std::uint32_t>(seed));
      std::uniform_int_distribution<int> byte(0, 255);
      std::vector<Gf256> file;
      for (std::size_t i = 0; i < file_size; ++i) file.emplace_back(static_cast<std::uint8_t>(byte(rng)));
      DressSystem sys = distribute(code, mds_encode(file, code.theta()), file_size);
      const Hierarchy h = full_hierarchy(code, HierarchyMethod::automatic, opt);

      json j{{"input", c.descriptor},
             {"params", params_json(code.params())},
             {"file_size", file_size},
             {"seed", seed},
             {"any_k_guarantee", min_degree_for(h, file_size)},
             {"nodes", json::array()}};
      for (std::size_t i = 0; i < sys.node_count(); ++i) {
        json pts = json::array();
        for (const auto& s : sys.node(i)) pts.push_back(s.point);
        j["nodes"].push_back(pts);
      }
      if (fail_node) {
        const auto before = sys.node(*fail_node);
        const RepairReport rep = sys.repair(*fail_node);
        json transfers = json::array();
        for (const auto& t : rep.transfers)
          transfers.push_back({{"helper", t.helper}, {"point", t.point}, {"value", t.value.value()}});
        j["repair"] = {{"failed", rep.failed},
                       {"transfers", transfers},
                       {"symbols_transferred", rep.symbols_transferred()},
                       {"bytes_transferred", rep.symbols_transferred()},
                       {"uncoded", rep.uncoded},
                       {"restored_exactly", sys.node(*fail_node) == before}};
      }
      if (!reconstruct_arg.empty()) {
        const auto nodes = parse_list(reconstruct_arg, "--reconstruct");
        const Reconstruction r = sys.reconstruct(nodes);
        std::size_t downloaded = 0;
        for (auto i : nodes) downloaded += sys.node(i).size();
        j["reconstruct"] = {{"nodes", nodes},
                            {"success", r.ok()},
                            {"distinct_symbols", r.distinct_symbols},
                            {"deficit", r.deficit},
                            {"bytes_downloaded", downloaded},
                            {"file_matches", r.ok() && *r.file == file}};
      }
      out << j.dump(2) << '\n';
    } else if (report_cmd->parsed()) {
      const auto start = std::chrono::steady_clock::now();
      const auto c = load();
      const FrParams p = c.code.params();
      const Hierarchy h = full_hierarchy(c.code, HierarchyMethod::automatic, opt);
      const BoundProfile prof = bound_profile(p);
      std::vector<std::size_t> meets_rec, meets_dual, meets_floor;
      for (const auto& r : prof.rows) {
        const auto m = static_cast<std::int64_t>(h.M(r.k));
        if (m == r.recursive) meets_rec.push_back(r.k);
        if (m == r.dual) meets_dual.push_back(r.k);
        if (m == r.floor) meets_floor.push_back(r.k);
      }
      const auto pareto = pareto_points(h, transfer_to_dual(h));
      const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      if (format == "table") {
        out << "input   " << c.descriptor << "\nparams  " << p << "\nsimple  "
            << (is_simple(c.code.structure()) ? "yes" : "no") << '\n';
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : prof.rows) {
          const auto m = static_cast<std::int64_t>(h.M(r.k));
          std::string flags;
          if (m == r.recursive) flags += "R";
          if (m == r.dual) flags += "D";
          if (m == r.floor) flags += "F";
          rows.push_back({std::to_string(r.k), std::to_string(h.M(r.k)), std::to_string(h.N(r.k)), std::to_string(r.recursive),
                          std::to_string(r.dual), std::to_string(r.floor), flags.empty() ? "-" : flags});
        }
        print_table(out, {"k", "M_k", "N_k", "recursive", "dual", "floor", "meets"}, rows);
        out << "pareto ";
        for (const auto& pt : pareto) out << " (" << pt.k0 << "," << pt.l0 << ")";
        out << '\n';
        if (!no_timing) out << "# elapsed " << std::fixed << std::setprecision(3) << ms << " ms\n";
      } else {
        json bounds_rows = json::array();
        for (const auto& r : prof.rows) bounds_rows.push_back(to_json(r));
        json par = json::array();
        for (const auto& pt : pareto) par.push_back({pt.k0, pt.l0});
        json j{{"input", c.descriptor},
               {"params", params_json(p)},
               {"simple", is_simple(c.code.structure())},
               {"hierarchy", to_json(h)},
               {"bounds", bounds_rows},
               {"meets_bound", {{"recursive", meets_rec}, {"dual", meets_dual}, {"floor", meets_floor}}},
               {"pareto", par}};
        out << j.dump(2) << '\n';
        if (!no_timing) out << "# elapsed " << std::fixed << std::setprecision(3) << ms << " ms\n";
      }
    } else if (table1_cmd->parsed()) {
      const auto rows = table1();
      if (format == "csv") {
        out << "params,k,recursive,dual\n";
        for (const auto& r : rows) out << '"' << r.params << "\"," << r.k << ',' << r.recursive << ',' << r.dual << '\n';
      } else if (format == "table") {
        std::vector<std::vector<std::string>> t;
        for (const auto& r : rows)
          t.push_back({r.params.to_string(), std::to_string(r.k), std::to_string(r.recursive), std::to_string(r.dual)});
        print_table(out, {"params", "k", "recursive", "dual"}, t);
      } else {
        json j = json::array();
        for (const auto& r : rows)
          j.push_back({{"params", params_json(r.params)}, {"k", r.k}, {"recursive", r.recursive}, {"dual", r.dual}});
        out << j.dump(2) << '\n';
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace frc::cli
