#include "gmis/cli.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "gmis/branching_ode.hpp"
#include "gmis/estimators.hpp"
#include "gmis/exact_trees.hpp"
#include "gmis/generators.hpp"
#include "gmis/kc_transform.hpp"
#include "gmis/parallel.hpp"
#include "gmis/pgf_solver.hpp"

namespace gmis {

namespace {

using nlohmann::json;

// Thrown by handlers for bad input that CLI11 cannot catch on its own.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string format = "csv";
  std::string out;
  unsigned threads = 0;
};

struct GraphOptions {
  std::string graph;
  std::size_t n = 0;
  double lambda = 1.0;
  std::size_t d = 2;
  std::size_t depth = 0;
};

// What a subcommand produced. `data` goes to --out (or stdout); `summary` is
// the human-readable line.
struct Output {
  std::string data;
  std::string summary;
  json params = json::object();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> extra_files;  // written by the handler itself
  int status = kExitOk;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--out", c.out, "Write data to this file (a run manifest is written next to it)");
  sub->add_option("--threads", c.threads, "Worker threads (0: $GREEDY_MIS_THREADS or 1)")->capture_default_str();
}

void add_graph(CLI::App* sub, GraphOptions& g) {
  sub->add_option("--graph", g.graph,
                  "Family: path, cycle, star, gnp, regular, uniform_tree, functional_mapping, "
                  "functional_permutation, d_ary_truncated");
  sub->add_option("--n", g.n, "Number of vertices");
  sub->add_option("--lambda", g.lambda, "gnp mean degree (edge probability lambda/n)")->capture_default_str();
  sub->add_option("--d", g.d, "regular degree or d_ary_truncated arity")->capture_default_str();
  sub->add_option("--depth", g.depth, "d_ary_truncated depth")->capture_default_str();
}

GeneratorSpec to_spec(const GraphOptions& g) {
  if (g.graph.empty()) throw UsageError("--graph is required");
  GeneratorSpec spec;
  spec.family = parse_family(g.graph);
  spec.n = g.n;
  spec.lambda = g.lambda;
  spec.d = g.d;
  spec.depth = g.depth;
  check_spec(spec);
  return spec;
}

json spec_json(const GeneratorSpec& spec) {
  return {{"graph", std::string(family_name(spec.family))},
          {"n", spec.order()},
          {"lambda", spec.lambda},
          {"d", spec.d},
          {"depth", spec.depth}};
}

json estimate_json(const GeneratorSpec& spec, const Estimate& e) {
  return {{"family", std::string(family_name(spec.family))},
          {"n", spec.order()},
          {"param", spec.param_string()},
          {"trials", e.trials},
          {"seed", e.seed},
          {"mean", e.mean},
          {"var", e.variance},
          {"stderr", e.std_error},
          {"ci_lo", e.ci_lo},
          {"ci_hi", e.ci_hi}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
  if (!f) throw UsageError("write failed for '" + path + "'");
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return read_edge_list(in);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_manifests(const std::string& subcommand, const std::vector<std::string>& args, const Output& o,
                     const std::vector<std::string>& outputs) {
  json m = {{"subcommand", subcommand},
            {"args", args},
            {"params", o.params},
            {"seed", o.seed ? json(*o.seed) : json(nullptr)},
            {"version", kVersion},
            {"timestamp", utc_timestamp()},
            {"outputs", outputs}};
  for (const auto& path : outputs) write_text(path + ".manifest.json", dump(m));
}

// simulate ----------------------------------------------------------------

Output simulate(const GraphOptions& g, const std::string& input, const std::string& export_path,
                std::size_t trials, std::uint64_t seed, const Common& c) {
  Output o;
  o.seed = seed;
  GeneratorSpec spec;
  Estimate e;
  const unsigned threads = resolve_threads(c.threads);
  if (!input.empty()) {
    if (!g.graph.empty()) throw UsageError("--graph and --input are mutually exclusive");
    const Graph graph = read_graph_file(input);
    e = mc_iota(graph, trials, seed, threads);
    spec.n = graph.order();
    o.params = {{"input", input}};
    if (!export_path.empty()) {
      std::ofstream f(export_path);
      write_edge_list(f, graph);
      o.extra_files.push_back(export_path);
    }
  } else {
    spec = to_spec(g);
    e = mc_iota(spec, trials, seed, threads);
    o.params = spec_json(spec);
    if (!export_path.empty()) {
      // The graph of trial 0.
      Rng rng(derive_seed(seed, 0, 0));
      std::ofstream f(export_path);
      write_edge_list(f, generate(spec, rng));
      o.extra_files.push_back(export_path);
    }
  }
  o.params["trials"] = trials;
  o.params["seed"] = seed;
  if (c.format == "json") {
    json j = estimate_json(spec, e);
    if (!input.empty()) j["family"] = "file";
    o.data = dump(j);
  } else {
    std::string row = estimate_csv_row(spec, e);
    if (!input.empty()) row = "file" + row.substr(row.find(','));
    o.data = estimate_csv_header() + "\n" + row + "\n";
  }
  o.summary = "mean " + fixed(e.mean) + "  95% CI [" + fixed(e.ci_lo) + ", " + fixed(e.ci_hi) + "]  over " +
              std::to_string(e.trials) + " trials";
  return o;
}

// exact -------------------------------------------------------------------

Output exact(std::optional<long> alpha_n, const std::string& tree_path, std::size_t cap, const Common& c) {
  if (alpha_n.has_value() == !tree_path.empty()) throw UsageError("exactly one of --alpha or --tree is required");
  Output o;
  Rational value;
  std::string quantity;
  if (alpha_n) {
    if (*alpha_n < -1) throw UsageError("--alpha must be at least -1");
    value = alpha(*alpha_n);
    quantity = "alpha_" + std::to_string(*alpha_n);
    o.params = {{"alpha", *alpha_n}};
  } else {
    const Graph forest = read_graph_file(tree_path);
    value = exact_expected_mis(forest, cap);
    quantity = "E[i(T)]";
    o.params = {{"tree", tree_path}, {"cap", cap}};
  }
  const double approx = value.get_d();
  if (c.format == "json") {
    o.data = dump({{"quantity", quantity}, {"rational", to_string(value)}, {"decimal", approx}});
  } else {
    o.data = "quantity,rational,decimal\n" + quantity + "," + to_string(value) + "," + format_double(approx) + "\n";
  }
  o.summary = quantity + " = " + to_string(value) + " ~ " + fixed(approx, 12);
  return o;
}

// ode ---------------------------------------------------------------------

std::string curve_csv(const OdeSolution& sol, const BranchingSpec& spec) {
  std::string s = "x";
  for (const auto& t : spec.types) s += ",y_" + t;
  s += ",occupancy\n";
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    s += format_double(sol.grid[i]);
    double occ = 0.0;
    for (std::size_t k = 0; k < sol.y.size(); ++k) {
      s += "," + format_double(sol.y[k][i]);
      occ += sol.root[k] * sol.y[k][i];
    }
    s += "," + format_double(occ) + "\n";
  }
  return s;
}

Output ode(const std::string& name, const PresetParams& p, double step, const std::string& curve_path,
           const Common& c) {
  Output o;
  const auto spec = preset(name, p);
  if (!(step > 0.0 && step <= 1.0)) throw UsageError("--step must lie in (0, 1]");
  const auto sol = solve(spec, step);
  std::optional<double> closed;
  try {
    closed = closed_form(name, p);
  } catch (const std::invalid_argument&) {
  }
  o.params = {{"preset", name}, {"lambda", p.lambda}, {"d", p.d}, {"step", step}};
  if (!curve_path.empty()) {
    write_text(curve_path, curve_csv(sol, spec));
    o.extra_files.push_back(curve_path);
  }
  if (c.format == "json") {
    o.data = dump({{"preset", name},
                   {"lambda", p.lambda},
                   {"d", p.d},
                   {"step", step},
                   {"iota", sol.iota},
                   {"closed_form", closed ? json(*closed) : json(nullptr)}});
  } else {
    o.data = "preset,lambda,d,step,iota,closed_form\n" + name + "," + format_double(p.lambda) + "," +
             std::to_string(p.d) + "," + format_double(step) + "," + format_double(sol.iota) + "," +
             (closed ? format_double(*closed) : "") + "\n";
  }
  o.summary = name + ": iota = " + fixed(sol.iota, 9);
  if (closed) o.summary += "  (closed form " + fixed(*closed, 9) + ")";
  return o;
}

// pgf ---------------------------------------------------------------------

Output pgf(const std::string& family, double lambda, std::size_t d, const std::vector<double>& coeffs, bool iid,
           double x, const Common& c) {
  Output o;
  PgfSpec spec{Pgf::deterministic(0), iid};
  if (family == "poisson") spec.g = Pgf::poisson(lambda);
  else if (family == "deterministic") spec.g = Pgf::deterministic(d);
  else if (family == "coeffs") {
    if (coeffs.empty()) throw UsageError("--coeffs is required for --family coeffs");
    spec.g = Pgf::coefficients(coeffs);
  }
  validate(spec);
  const double h = iid ? solve_h_iid(spec, x) : solve_h(spec, x);
  const double occupancy = iid ? 0.5 * (1.0 - h * h) : 1.0 - h;
  o.params = {{"family", family}, {"lambda", lambda}, {"d", d}, {"coeffs", coeffs}, {"iid", iid}, {"x", x}};
  if (c.format == "json") {
    o.data = dump({{"pgf", spec.g.describe()}, {"iid", iid}, {"x", x}, {"h", h}, {"occupancy", occupancy}});
  } else {
    o.data = "pgf,iid,x,h,occupancy\n\"" + spec.g.describe() + "\"," + (iid ? "1" : "0") + "," + format_double(x) +
             "," + format_double(h) + "," + format_double(occupancy) + "\n";
  }
  o.summary = spec.g.describe() + (iid ? " (iid degrees)" : "") + ": occupancy at x = " + format_double(x) + " is " +
              fixed(occupancy, 9);
  return o;
}

// kc verify ---------------------------------------------------------------

Output kc_verify(std::size_t n_max, const std::string& report_path, const Common& c) {
  if (n_max < 2 || n_max > kMaxFreeTreeOrder) throw UsageError("--n-max must lie in [2, 9]");
  Output o;
  const auto report = verify_kc_nu(n_max, resolve_threads(c.threads));
  o.params = {{"n_max", n_max}};
  if (!report_path.empty()) {
    std::string s = "n,tree,x,y,proper,leaves_before,leaves_after,nu_before,nu_after\n";
    for (const auto& r : report.records) {
      s += std::to_string(r.n) + "," + r.tree_code + "," + std::to_string(r.x) + "," + std::to_string(r.y) + "," +
           (r.proper ? "1" : "0") + "," + std::to_string(r.leaves_before) + "," + std::to_string(r.leaves_after) +
           "," + to_string(r.nu_before) + "," + to_string(r.nu_after) + "\n";
    }
    write_text(report_path, s);
    o.extra_files.push_back(report_path);
  }
  if (c.format == "json") {
    json v = json::array();
    for (const auto& viol : report.violations) {
      v.push_back({{"kind", viol.kind}, {"tree", viol.tree}, {"x", viol.x}, {"y", viol.y}, {"detail", viol.detail}});
    }
    o.data = dump({{"n_max", n_max},
                   {"trees", report.trees},
                   {"transformations", report.transformations},
                   {"proper", report.proper},
                   {"violations", v}});
  } else {
    o.data = "n_max,trees,transformations,proper,violations\n" + std::to_string(n_max) + "," +
             std::to_string(report.trees) + "," + std::to_string(report.transformations) + "," +
             std::to_string(report.proper) + "," + std::to_string(report.violations.size()) + "\n";
  }
  o.summary = std::to_string(report.violations.size()) + " violations over " + std::to_string(report.trees) +
              " trees and " + std::to_string(report.transformations) + " transformations";
  for (const auto& viol : report.violations) {
    o.summary += "\n  " + viol.kind + " on " + viol.tree + " (x=" + std::to_string(viol.x) +
                 ", y=" + std::to_string(viol.y) + "): " + viol.detail;
  }
  if (!report.ok()) o.status = kExitVerification;
  return o;
}

// constants ---------------------------------------------------------------

Output constants(const Common& c) {
  Output o;
  const auto table = constants_table();
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& e : table) {
      rows.push_back({{"name", e.name}, {"params", e.params}, {"formula", e.formula}, {"value", e.value}});
    }
    o.data = dump(rows);
  } else {
    o.data = "name,params,formula,value\n";
    for (const auto& e : table) {
      o.data += e.name + "," + e.params + ",\"" + e.formula + "\"," + format_double(e.value) + "\n";
    }
  }
  for (const auto& e : table) {
    o.summary += (o.summary.empty() ? "" : "\n") + e.name + "(" + e.params + ")  " + e.formula + " = " +
                 fixed(e.value, 9);
  }
  return o;
}

// correlation -------------------------------------------------------------

Output correlation(const GraphOptions& g, std::size_t trials, std::size_t pairs, std::size_t max_distance,
                   std::uint64_t seed, const Common& c) {
  Output o;
  o.seed = seed;
  const auto spec = to_spec(g);
  const auto table = covariance_by_distance(spec, trials, pairs, seed, max_distance, resolve_threads(c.threads));
  o.params = spec_json(spec);
  o.params["trials"] = trials;
  o.params["pairs"] = pairs;
  o.params["max_distance"] = max_distance;
  o.params["seed"] = seed;
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : table.rows) {
      rows.push_back({{"dist", std::to_string(r.distance) + (r.open_ended ? "+" : "")},
                      {"pairs", r.pairs},
                      {"cov", r.cov}});
    }
    o.data = dump(rows);
  } else {
    o.data = decay_csv_header() + "\n";
    for (const auto& r : table.rows) o.data += decay_csv_row(r) + "\n";
  }
  double far = 0.0;
  for (const auto& r : table.rows) {
    if (r.open_ended) far = r.cov;
  }
  o.summary = std::to_string(table.rows.size()) + " distance buckets; cov at distance >= " +
              std::to_string(max_distance) + " is " + format_double(far);
  return o;
}

// rounds ------------------------------------------------------------------

Output rounds(const GraphOptions& g, std::size_t trials, std::uint64_t seed, const Common& c) {
  Output o;
  o.seed = seed;
  const auto spec = to_spec(g);
  const auto r = rounds_stats(spec, trials, seed, resolve_threads(c.threads));
  o.params = spec_json(spec);
  o.params["trials"] = trials;
  o.params["seed"] = seed;
  if (c.format == "json") {
    json j = estimate_json(spec, r.estimate);
    j["min"] = r.min;
    j["max"] = r.max;
    o.data = dump(j);
  } else {
    o.data = estimate_csv_header() + ",min,max\n" + estimate_csv_row(spec, r.estimate) + "," +
             std::to_string(r.min) + "," + std::to_string(r.max) + "\n";
  }
  o.summary = "rounds: mean " + fixed(r.estimate.mean, 3) + ", min " + std::to_string(r.min) + ", max " +
              std::to_string(r.max);
  return o;
}

// trees-verify ------------------------------------------------------------

Output trees_verify(std::size_t n, const Common& c) {
  if (n < 1 || n > kMaxFreeTreeOrder) throw UsageError("--n must lie in [1, 9]");
  Output o;
  const auto report = verify_path_minimum(n);
  o.params = {{"n", n}};
  if (c.format == "json") {
    json rows = json::array();
    for (const auto& r : report.rows) {
      rows.push_back({{"code", r.code},
                      {"leaves", r.leaves},
                      {"is_path", r.is_path},
                      {"value", to_string(r.value)},
                      {"decimal", r.value.get_d()}});
    }
    o.data = dump({{"n", n},
                   {"trees", report.rows.size()},
                   {"path_is_minimum", report.path_is_minimum},
                   {"unique_minimum", report.unique_minimum},
                   {"rows", rows}});
  } else {
    o.data = "code,leaves,is_path,value,decimal\n";
    for (const auto& r : report.rows) {
      o.data += r.code + "," + std::to_string(r.leaves) + "," + (r.is_path ? "1" : "0") + "," + to_string(r.value) +
                "," + format_double(r.value.get_d()) + "\n";
    }
  }
  const std::string count = std::to_string(report.rows.size());
  if (report.path_is_minimum) {
    o.summary = "path minimal among " + count + " trees" + (report.unique_minimum ? "" : " (tied)");
  } else {
    o.summary = "path NOT minimal among " + count + " trees";
    o.status = kExitVerification;
  }
  return o;
}

void usage_error(CLI::App& app, const std::string& message, std::ostream& err) {
  err << "error: " << message << "\n\n" << app.help();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random greedy maximal independent sets: simulation, exact values on trees, limit constants",
               "gmis"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common common;
  GraphOptions gopt;
  std::size_t trials = 100;
  std::uint64_t seed = 0;

  auto* sim = app.add_subcommand("simulate", "Monte-Carlo estimate of the greedy independence ratio");
  std::string input, export_path;
  add_graph(sim, gopt);
  sim->add_option("--input", input, "Edge-list file (fixed graph; only labellings are resampled)");
  sim->add_option("--export", export_path, "Write the graph of trial 0 as an edge list");
  sim->add_option("--trials", trials, "Number of trials")->capture_default_str();
  sim->add_option("--seed", seed, "Master seed")->required();
  add_common(sim, common);

  auto* ex = app.add_subcommand("exact", "Exact expected greedy MIS size on paths and forests");
  std::optional<long> alpha_n;
  std::string tree_path;
  std::size_t cap = kDefaultExactCap;
  ex->add_option("--alpha", alpha_n, "alpha_N, the expected value on the N-vertex path");
  ex->add_option("--tree", tree_path, "Edge-list file of a forest");
  ex->add_option("--cap", cap, "Largest forest order accepted by --tree")->capture_default_str();
  add_common(ex, common);

  auto* od = app.add_subcommand("ode", "Solve the limiting branching-process ODE for a preset");
  std::string preset_name;
  PresetParams pp;
  double step = 1e-4;
  std::string curve_path;
  od->add_option("--preset", preset_name, "infinite_ray_star, poisson_gw, size_biased_gw, d_ary, d_regular")
      ->required();
  od->add_option("--lambda", pp.lambda, "Offspring mean (poisson_gw, size_biased_gw)")->capture_default_str();
  od->add_option("--d", pp.d, "Degree or arity (infinite_ray_star, d_ary, d_regular)")->capture_default_str();
  od->add_option("--step", step, "RK4 step, must be 1/M")->capture_default_str();
  od->add_option("--dump-curve", curve_path, "Write x,y_<type>...,occupancy to this CSV file");
  add_common(od, common);

  auto* pg = app.add_subcommand("pgf", "Occupancy from the pgf shortcut");
  std::string pgf_family;
  double pgf_lambda = 1.0;
  std::size_t pgf_d = 2;
  std::vector<double> pgf_coeffs;
  bool pgf_iid = false;
  double pgf_x = 1.0;
  pg->add_option("--family", pgf_family, "Offspring or degree law")
      ->required()
      ->check(CLI::IsMember({"poisson", "deterministic", "coeffs"}));
  pg->add_option("--lambda", pgf_lambda, "Poisson mean")->capture_default_str();
  pg->add_option("--d", pgf_d, "Deterministic count")->capture_default_str();
  pg->add_option("--coeffs", pgf_coeffs, "p0,p1,... for --family coeffs")->delimiter(',');
  pg->add_flag("--iid", pgf_iid, "Treat the law as an iid degree distribution");
  pg->add_option("--x", pgf_x, "Label threshold in [0, 1]")->capture_default_str();
  add_common(pg, common);

  auto* kc_cmd = app.add_subcommand("kc", "KC-transformation checks");
  kc_cmd->require_subcommand(1);
  auto* kcv = kc_cmd->add_subcommand("verify", "Check the nu inequalities over all small trees and bare paths");
  std::size_t n_max = kMaxFreeTreeOrder;
  std::string report_path;
  kcv->add_option("--n-max", n_max, "Largest tree order (2..9)")->capture_default_str();
  kcv->add_option("--report", report_path, "Write one CSV row per transformation");
  add_common(kcv, common);

  auto* con = app.add_subcommand("constants", "Closed-form limit constants");
  add_common(con, common);

  auto* cor = app.add_subcommand("correlation", "Occupancy covariance by graph distance");
  GraphOptions cor_g;
  std::size_t pairs = 2000;
  std::size_t max_distance = 10;
  std::size_t cor_trials = 1000;
  add_graph(cor, cor_g);
  cor->add_option("--trials", cor_trials, "Labellings per pair")->capture_default_str();
  cor->add_option("--pairs", pairs, "Sampled vertex pairs")->capture_default_str();
  cor->add_option("--max-distance", max_distance, "Distances from this value on are pooled")->capture_default_str();
  cor->add_option("--seed", seed, "Master seed")->required();
  add_common(cor, common);

  auto* rnd = app.add_subcommand("rounds", "Round count of the parallel greedy process");
  GraphOptions rnd_g;
  std::size_t rnd_trials = 20;
  add_graph(rnd, rnd_g);
  rnd->add_option("--trials", rnd_trials, "Number of trials")->capture_default_str();
  rnd->add_option("--seed", seed, "Master seed")->required();
  add_common(rnd, common);

  auto* tv = app.add_subcommand("trees-verify", "Exact values of all free trees of order n; is the path minimal?");
  std::size_t tv_n = kMaxFreeTreeOrder;
  tv->add_option("--n", tv_n, "Tree order (1..9)")->capture_default_str();
  add_common(tv, common);

  auto* rep = app.add_subcommand("replay", "Re-run the command recorded in a run manifest");
  std::string manifest_path;
  rep->add_option("manifest", manifest_path, "Manifest JSON file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    CLI::App* failed = &app;
    for (auto* sub : app.get_subcommands()) {
      failed = sub;
      for (auto* nested : sub->get_subcommands()) failed = nested;
    }
    usage_error(*failed, e.what(), err);
    return kExitUsage;
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    if (active == rep) {
      const json m = json::parse(read_text(manifest_path));
      const auto replay_args = m.at("args").get<std::vector<std::string>>();
      if (!replay_args.empty() && replay_args.front() == "replay") throw UsageError("manifest records a replay");
      return run_cli(replay_args, out, err);
    }
    Output o;
    std::string name = active->get_name();
    if (active == sim) o = simulate(gopt, input, export_path, trials, seed, common);
    else if (active == ex) o = exact(alpha_n, tree_path, cap, common);
    else if (active == od) o = ode(preset_name, pp, step, curve_path, common);
    else if (active == pg) o = pgf(pgf_family, pgf_lambda, pgf_d, pgf_coeffs, pgf_iid, pgf_x, common);
    else if (active == kc_cmd) {
      name = "kc verify";
      o = kc_verify(n_max, report_path, common);
    } else if (active == con) o = constants(common);
    else if (active == cor) o = correlation(cor_g, cor_trials, pairs, max_distance, seed, common);
    else if (active == rnd) o = rounds(rnd_g, rnd_trials, seed, common);
    else o = trees_verify(tv_n, common);

    o.params["format"] = common.format;
    std::vector<std::string> outputs = o.extra_files;
    if (!common.out.empty()) {
      write_text(common.out, o.data);
      outputs.insert(outputs.begin(), common.out);
      out << o.summary << "\n";
    } else {
      out << o.data;
      // Verification verdicts are always shown.
      if (active == kc_cmd || active == tv) out << o.summary << "\n";
    }
    if (!outputs.empty()) write_manifests(name, args, o, outputs);
    return o.status;
  } catch (const UsageError& e) {
    usage_error(*active, e.what(), err);
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    usage_error(*active, e.what(), err);
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gmis
