#include "cnlt/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "cnlt/adjoint_engine.hpp"
#include "cnlt/cascades.hpp"
#include "cnlt/qseries.hpp"

namespace cnlt::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kMaxRank = 12;
constexpr int kMaxDegree = 400;

bool check(bool ok, const std::string& message, std::ostream& err) {
  if (!ok) err << "error: " << message << "\n";
  return ok;
}

bool valid_n(const RunConfig& cfg, std::ostream& err) {
  return check(cfg.n >= 1 && cfg.n <= kMaxRank,
               "--n must be between 1 and " + std::to_string(kMaxRank), err);
}

bool valid_k(const RunConfig& cfg, std::ostream& err) {
  return check(cfg.k >= 1, "--k must be at least 1", err);
}

bool valid_m(const RunConfig& cfg, std::ostream& err) {
  return check(cfg.max_degree >= 0 && cfg.max_degree <= kMaxDegree,
               "--max-degree must be between 0 and " + std::to_string(kMaxDegree), err);
}

Json point_list(const SymplecticAlgebra& g, const std::vector<int>& ranks) {
  Json out = Json::array();
  for (int r : ranks) out.push_back(g.point(r).label());
  return out;
}

std::string joined(const SymplecticAlgebra& g, const std::vector<int>& ranks) {
  std::string s;
  for (int r : ranks) s += (s.empty() ? "" : " ") + g.point(r).label();
  return s;
}

void print_json(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

}  // namespace

int cmd_dump_algebra(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!valid_n(cfg, err)) return kUsage;
  SymplecticAlgebra g(cfg.n);
  if (cfg.output == Output::Csv) {
    out << "rank,point,kind,height,root\n";
    for (int r = 0; r < g.dim(); ++r) {
      const auto& p = g.point(r);
      std::string root;
      for (int x : p.root) root += (root.empty() ? "" : " ") + std::to_string(x);
      out << r << "," << p.label() << "," << to_string(p.kind) << "," << p.height << ","
          << root << "\n";
    }
    return kOk;
  }
  Json basis = Json::array();
  for (int r = 0; r < g.dim(); ++r) {
    const auto& p = g.point(r);
    basis.push_back({{"rank", r},
                     {"point", p.label()},
                     {"kind", to_string(p.kind)},
                     {"height", p.height},
                     {"root", p.root}});
  }
  Json constants = Json::array();
  for (int a = 0; a < g.dim(); ++a)
    for (int b = 0; b < g.dim(); ++b)
      for (const auto& [c, v] : g.bracket_terms(a, b)) constants.push_back({a, b, c, v});
  print_json({{"n", cfg.n},
              {"dim", g.dim()},
              {"basis", basis},
              {"structure_constants", constants}},
             out);
  return kOk;
}

int cmd_gen_conditions(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!valid_n(cfg, err)) return kUsage;
  SymplecticAlgebra g(cfg.n);
  auto conds = difference_conditions(g);
  if (cfg.output == Output::Csv) {
    out << "pivot,upper,lower\n";
    for (const auto& c : conds)
      out << c.pivot.label() << "," << joined(g, c.upper) << "," << joined(g, c.lower) << "\n";
    return kOk;
  }
  Json list = Json::array();
  for (const auto& c : conds)
    list.push_back({{"pivot", c.pivot.label()},
                    {"upper", point_list(g, c.upper)},
                    {"lower", point_list(g, c.lower)}});
  print_json({{"n", cfg.n}, {"count", conds.size()}, {"conditions", list}}, out);
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!valid_n(cfg, err) || !valid_k(cfg, err) || !valid_m(cfg, err)) return kUsage;
  SymplecticAlgebra g(cfg.n);
  auto counts = count_D(g, cfg.k, cfg.max_degree, cfg.grading);
  auto render = [&](const ColoredPartition& p) {
    return cfg.grading == Grading::Principal
               ? format_colored_integers(to_colored_integers(g, p))
               : p.to_string(g);
  };
  if (cfg.output == Output::Json) {
    Json rows = Json::array();
    for (int m = 0; m <= cfg.max_degree; ++m) {
      Json row = {{"m", m}, {"count", counts[m]}};
      if (cfg.list) {
        Json parts = Json::array();
        for (const auto& p : enumerate_D(g, cfg.k, m, cfg.grading)) parts.push_back(render(p));
        row["partitions"] = parts;
      }
      rows.push_back(row);
    }
    print_json({{"n", cfg.n}, {"k", cfg.k}, {"grading", to_string(cfg.grading)}, {"rows", rows}},
               out);
    return kOk;
  }
  if (cfg.list) {
    out << "m,partition\n";
    for (int m = 0; m <= cfg.max_degree; ++m)
      for (const auto& p : enumerate_D(g, cfg.k, m, cfg.grading))
        out << m << "," << render(p) << "\n";
    return kOk;
  }
  out << "m,count\n";
  for (int m = 0; m <= cfg.max_degree; ++m) out << m << "," << counts[m] << "\n";
  return kOk;
}

int cmd_count_leading_terms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!valid_n(cfg, err) || !valid_k(cfg, err)) return kUsage;
  SymplecticAlgebra g(cfg.n);
  std::vector<std::pair<int, long>> rows;
  for (int b = 0; b <= cfg.k + 1; ++b) rows.push_back({b, count_leading_terms(g, cfg.k, b, cfg.k + 1 - b)});
  if (cfg.output == Output::Json) {
    Json shapes = Json::array();
    for (auto [b, c] : rows) shapes.push_back({{"b", b}, {"a", cfg.k + 1 - b}, {"count", c}});
    print_json({{"n", cfg.n}, {"k", cfg.k}, {"shapes", shapes}}, out);
    return kOk;
  }
  out << "b,a,count\n";
  for (auto [b, c] : rows) out << b << "," << cfg.k + 1 - b << "," << c << "\n";
  return kOk;
}

int cmd_qseries(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!check(cfg.n == 2, "the product formula is only available for --n 2", err) ||
      !valid_k(cfg, err) || !valid_m(cfg, err))
    return kUsage;
  auto s = c2_character_product(cfg.k, cfg.max_degree);
  if (cfg.output == Output::Json) {
    Json coeffs = Json::array();
    for (const auto& c : s.coefficients()) coeffs.push_back(c.get_str());
    print_json({{"n", 2}, {"k", cfg.k}, {"coefficients", coeffs}}, out);
    return kOk;
  }
  out << "m,coefficient\n";
  for (int m = 0; m <= s.max_degree(); ++m) out << m << "," << s[m].get_str() << "\n";
  return kOk;
}

int cmd_check_identity(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!valid_n(cfg, err) || !valid_k(cfg, err) || !valid_m(cfg, err)) return kUsage;
  SymplecticAlgebra g(cfg.n);
  auto d = count_D(g, cfg.k, cfg.max_degree, Grading::Principal);
  bool all = true;
  Json rows = Json::array();
  std::ostringstream csv;
  if (cfg.n == 2) {
    auto product = c2_character_product(cfg.k, cfg.max_degree);
    csv << "m,product,three_color,d_count,verdict\n";
    for (int m = 0; m <= cfg.max_degree; ++m) {
      BigInt colored = count_three_color_partitions(cfg.k, m);
      bool pass = product[m] == colored && product[m] == d[m];
      all = all && pass;
      csv << m << "," << product[m].get_str() << "," << colored.get_str() << "," << d[m] << ","
          << (pass ? "PASS" : "FAIL") << "\n";
      rows.push_back({{"m", m},
                      {"product", product[m].get_str()},
                      {"three_color", colored.get_str()},
                      {"d_count", d[m]},
                      {"verdict", pass ? "PASS" : "FAIL"}});
    }
  } else {
    // No product formula: compare the condition-based count with partitions
    // avoiding every leading term.
    LeadingTermIndex index(g, cfg.k);
    std::vector<long> free(cfg.max_degree + 1, 0);
    for (const auto& p : all_partitions_up_to(g, cfg.max_degree, Grading::Principal))
      if (!contains_leading_term(p, index)) ++free[p.principal_degree(g)];
    csv << "m,d_count,lt_free_count,verdict\n";
    for (int m = 0; m <= cfg.max_degree; ++m) {
      bool pass = d[m] == free[m];
      all = all && pass;
      csv << m << "," << d[m] << "," << free[m] << "," << (pass ? "PASS" : "FAIL") << "\n";
      rows.push_back({{"m", m},
                      {"d_count", d[m]},
                      {"lt_free_count", free[m]},
                      {"verdict", pass ? "PASS" : "FAIL"}});
    }
  }
  if (cfg.output == Output::Json)
    print_json({{"n", cfg.n},
                {"k", cfg.k},
                {"comparison", cfg.n == 2 ? "product" : "internal"},
                {"ok", all},
                {"rows", rows}},
               out);
  else
    out << csv.str();
  return all ? kOk : kFail;
}

int cmd_verify_theorem(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!valid_n(cfg, err) || !valid_k(cfg, err) ||
      !check(cfg.j >= 1, "--j must be at least 1", err) ||
      !check(cfg.jobs >= 1, "--jobs must be at least 1", err) ||
      !check(cfg.dim_cap >= 1, "--dim-cap must be at least 1", err))
    return kUsage;
  SymplecticAlgebra g(cfg.n);
  TheoremReport report;
  try {
    report = verify_theorem(g, cfg.k, cfg.j, cfg.construct, cfg.dim_cap, cfg.jobs);
  } catch (const DimensionCapExceeded& e) {
    err << "error: " << e.what() << "; raise --dim-cap\n";
    return kUsage;
  }
  Json shapes = Json::array();
  for (const auto& s : report.shapes) {
    Json row = {{"shape", {s.b, s.a}},
                {"orbit_dim", s.orbit_dim},
                {"lt_count", s.lt_count},
                {"parametrized_count", s.parametrized_count},
                {"inclusion", s.inclusion},
                {"equality", s.equality},
                {"construction_failures", s.construction_failures}};
    if (!s.constructed) row["construction_failures"] = nullptr;
    shapes.push_back(row);
  }
  print_json({{"n", report.n},
              {"k", report.k},
              {"j", report.j},
              {"ok", report.ok()},
              {"shapes", shapes}},
             out);
  return report.ok() ? kOk : kFail;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Leading terms, difference conditions and q-series for C_n^(1)", "cnlt"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string grading = "principal";
  bool json = false, csv = false;

  auto add_n = [&](CLI::App* c) { c->add_option("--n", cfg.n, "rank n")->required(); };
  auto add_k = [&](CLI::App* c) { c->add_option("--k", cfg.k, "level k")->required(); };
  auto add_format = [&](CLI::App* c) {
    auto* j = c->add_flag("--json", json, "JSON output");
    c->add_flag("--csv", csv, "CSV output")->excludes(j);
  };
  auto add_m = [&](CLI::App* c) {
    c->add_option("--max-degree", cfg.max_degree, "truncation degree M")->capture_default_str();
  };

  auto* dump = app.add_subcommand("dump-algebra", "basis and structure constants");
  add_n(dump);
  add_format(dump);

  auto* conds = app.add_subcommand("gen-conditions", "difference conditions");
  add_n(conds);
  add_format(conds);

  auto* enumerate = app.add_subcommand("enumerate", "count partitions satisfying the conditions");
  add_n(enumerate);
  add_k(enumerate);
  add_m(enumerate);
  enumerate->add_option("--grading", grading, "principal or homogeneous")
      ->check(CLI::IsMember({"principal", "homogeneous"}))
      ->capture_default_str();
  enumerate->add_flag("--list", cfg.list, "list the partitions");
  add_format(enumerate);

  auto* count = app.add_subcommand("count-leading-terms", "leading terms per shape");
  add_n(count);
  add_k(count);
  add_format(count);

  auto* qseries = app.add_subcommand("qseries", "principally specialized character product");
  add_n(qseries);
  add_k(qseries);
  add_m(qseries);
  add_format(qseries);

  auto* identity = app.add_subcommand("check-identity", "product, colored and D counts per m");
  add_n(identity);
  add_k(identity);
  add_m(identity);
  add_format(identity);

  auto* theorem = app.add_subcommand("verify-theorem", "orbit leading terms against cascades");
  add_n(theorem);
  add_k(theorem);
  theorem->add_option("--j", cfg.j, "degree j")->capture_default_str();
  theorem->add_flag("--construct", cfg.construct, "also run the arrow construction");
  theorem->add_option("--jobs", cfg.jobs, "concurrent shapes")->capture_default_str();
  theorem->add_option("--dim-cap", cfg.dim_cap, "orbit dimension cap")->capture_default_str();
  theorem->add_flag("--json", json, "JSON output (the only format)");

  std::vector<std::string> argv_store{"cnlt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  cfg.grading = parse_grading(grading);
  cfg.output = json ? Output::Json : csv ? Output::Csv : Output::Text;

  if (dump->parsed()) return cmd_dump_algebra(cfg, out, err);
  if (conds->parsed()) return cmd_gen_conditions(cfg, out, err);
  if (enumerate->parsed()) return cmd_enumerate(cfg, out, err);
  if (count->parsed()) return cmd_count_leading_terms(cfg, out, err);
  if (qseries->parsed()) return cmd_qseries(cfg, out, err);
  if (identity->parsed()) return cmd_check_identity(cfg, out, err);
  return cmd_verify_theorem(cfg, out, err);
}

}  // namespace cnlt::cli
