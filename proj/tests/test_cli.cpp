#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gmis/cli.hpp"

using namespace gmis;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gmis_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("help lists every flag") {
  const std::map<std::string, std::vector<std::string>> flags = {
      {"simulate",
       {"--graph", "--n", "--lambda", "--d", "--depth", "--input", "--export", "--trials", "--seed", "--format",
        "--out", "--threads"}},
      {"exact", {"--alpha", "--tree", "--cap", "--format", "--out", "--threads"}},
      {"ode", {"--preset", "--lambda", "--d", "--step", "--dump-curve", "--format", "--out", "--threads"}},
      {"pgf", {"--family", "--lambda", "--d", "--coeffs", "--iid", "--x", "--format", "--out", "--threads"}},
      {"constants", {"--format", "--out", "--threads"}},
      {"correlation",
       {"--graph", "--n", "--lambda", "--d", "--depth", "--trials", "--pairs", "--max-distance", "--seed", "--format",
        "--out", "--threads"}},
      {"rounds", {"--graph", "--n", "--lambda", "--d", "--depth", "--trials", "--seed", "--format", "--out",
                  "--threads"}},
      {"trees-verify", {"--n", "--format", "--out", "--threads"}},
  };
  const auto top = run({"--help"});
  CHECK(top.code == 0);
  for (const auto& [sub, list] : flags) {
    CHECK(top.out.find(sub) != std::string::npos);
    const auto r = run({sub, "--help"});
    CHECK(r.code == 0);
    for (const auto& f : list) CHECK_MESSAGE(r.out.find(f) != std::string::npos, sub << " " << f);
  }
  const auto kc = run({"kc", "verify", "--help"});
  CHECK(kc.code == 0);
  for (const char* f : {"--n-max", "--report", "--format", "--out", "--threads"}) CHECK(kc.out.find(f) != std::string::npos);
  CHECK(run({"replay", "--help"}).code == 0);
}

TEST_CASE("usage errors") {
  for (const std::vector<std::string>& args : std::vector<std::vector<std::string>>{
           {},
           {"frobnicate"},
           {"simulate", "--graph", "path", "--n", "10"},
           {"simulate", "--graph", "path", "--n", "10", "--seed", "1", "--bogus"},
           {"simulate", "--graph", "nope", "--n", "10", "--seed", "1"},
           {"simulate", "--graph", "cycle", "--n", "2", "--seed", "1"},
           {"simulate", "--graph", "path", "--n", "10", "--seed", "1", "--format", "xml"},
           {"correlation", "--graph", "cycle", "--n", "50"},
           {"exact"},
           {"exact", "--alpha", "3", "--tree", "x.txt"},
           {"exact", "--tree", "/nonexistent/tree.txt"},
           {"ode", "--preset", "nope"},
           {"ode", "--preset", "poisson_gw", "--step", "0.3"},
           {"pgf", "--family", "coeffs"},
           {"kc"},
           {"kc", "verify", "--n-max", "12"},
           {"trees-verify", "--n", "10"},
       }) {
    const auto r = run(args);
    CHECK_MESSAGE(r.code == kExitUsage, args.size());
    CHECK(!r.err.empty());
  }
}

TEST_CASE("simulate") {
  const auto r = run({"simulate", "--graph", "path", "--n", "100000", "--trials", "20", "--seed", "7", "--format",
                      "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["mean"].get<double>() - 0.432332) < 0.005);
  for (const char* k : {"family", "n", "param", "trials", "seed", "mean", "var", "stderr", "ci_lo", "ci_hi"}) {
    CHECK(j.contains(k));
  }

  const auto csv = run({"simulate", "--graph", "gnp", "--n", "1000", "--lambda", "2", "--trials", "10", "--seed",
                        "3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("family,n,param,trials,seed,mean,var,stderr,ci_lo,ci_hi\ngnp,1000,lambda=2,10,3,", 0) == 0);
}

TEST_CASE("output is identical for any thread count") {
  const std::vector<std::string> base{"simulate", "--graph", "uniform_tree", "--n", "2000", "--trials", "30", "--seed",
                                      "5"};
  auto with = [&](const char* t) {
    auto a = base;
    a.push_back("--threads");
    a.push_back(t);
    return run(a).out;
  };
  CHECK(with("1") == with("4"));
}

TEST_CASE("exact") {
  const auto a = run({"exact", "--alpha", "3"});
  CHECK(a.code == 0);
  CHECK(a.out.find("alpha_3,5/3,") != std::string::npos);

  const auto dir = scratch_dir("exact");
  {
    std::ofstream f(dir / "star.txt");
    f << "4 3\n0 1\n0 2\n0 3\n";
  }
  const auto t = run({"exact", "--tree", (dir / "star.txt").string(), "--format", "json"});
  CHECK(t.code == 0);
  CHECK(nlohmann::json::parse(t.out)["rational"] == "5/2");
}

TEST_CASE("ode and pgf") {
  const auto o = run({"ode", "--preset", "poisson_gw", "--lambda", "1", "--format", "json"});
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(std::abs(j["iota"].get<double>() - std::log(2.0)) < 1e-6);

  const auto dir = scratch_dir("ode");
  const auto curve = dir / "curve.csv";
  const auto c = run({"ode", "--preset", "size_biased_gw", "--step", "0.01", "--dump-curve", curve.string()});
  REQUIRE(c.code == 0);
  const auto text = slurp(curve);
  CHECK(text.rfind("x,y_spine,y_tree,occupancy\n0,0,0,0\n", 0) == 0);
  CHECK(fs::exists(curve.string() + ".manifest.json"));

  const auto p = run({"pgf", "--family", "deterministic", "--d", "3", "--iid", "--format", "json"});
  REQUIRE(p.code == 0);
  CHECK(std::abs(nlohmann::json::parse(p.out)["occupancy"].get<double>() - 0.375) < 1e-9);
  const auto q = run({"pgf", "--family", "coeffs", "--coeffs", "0.5,0.5", "--x", "0.5"});
  CHECK(q.code == 0);
}

TEST_CASE("constants") {
  const auto r = run({"constants"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("name,params,formula,value\n", 0) == 0);
  CHECK(r.out.find("infinite_ray_star,d=2,") != std::string::npos);
  CHECK(r.out.find("d_regular,d=3,") != std::string::npos);
}

TEST_CASE("verification subcommands") {
  const auto t = run({"trees-verify", "--n", "6"});
  CHECK(t.code == 0);
  CHECK(t.out.find("path minimal among 6 trees") != std::string::npos);

  const auto dir = scratch_dir("kc");
  const auto report = dir / "kc.csv";
  const auto k = run({"kc", "verify", "--n-max", "6", "--report", report.string()});
  CHECK(k.code == 0);
  CHECK(k.out.find("0 violations") != std::string::npos);
  CHECK(slurp(report).rfind("n,tree,x,y,proper,leaves_before,leaves_after,nu_before,nu_after\n", 0) == 0);
}

TEST_CASE("correlation and rounds") {
  const auto c = run({"correlation", "--graph", "cycle", "--n", "200", "--trials", "100", "--pairs", "300", "--seed",
                      "4"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("dist,pairs,cov\n", 0) == 0);
  const auto r = run({"rounds", "--graph", "star", "--n", "50", "--trials", "10", "--seed", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["max"].get<int>() <= 2);
}

TEST_CASE("manifest replay reproduces data files byte for byte") {
  const auto dir = scratch_dir("replay");
  const auto out = dir / "sim.csv";
  const auto graph = dir / "graph.txt";
  const auto r = run({"simulate", "--graph", "regular", "--d", "3", "--n", "500", "--trials", "25", "--seed", "19",
                      "--out", out.string(), "--export", graph.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("mean") != std::string::npos);
  const auto manifest_path = out.string() + ".manifest.json";
  REQUIRE(fs::exists(manifest_path));
  REQUIRE(fs::exists(graph.string() + ".manifest.json"));
  const auto m = nlohmann::json::parse(slurp(manifest_path));
  CHECK(m["subcommand"] == "simulate");
  CHECK(m["seed"] == 19);
  CHECK(m["version"] == kVersion);
  CHECK(m.contains("timestamp"));
  CHECK(m["params"]["d"] == 3);
  CHECK(m["outputs"].size() == 2);

  const auto data = slurp(out);
  const auto exported = slurp(graph);
  fs::remove(out);
  fs::remove(graph);
  const auto again = run({"replay", manifest_path});
  CHECK(again.code == 0);
  CHECK(slurp(out) == data);
  CHECK(slurp(graph) == exported);

  // The exported graph simulates through --input.
  const auto from_file = run({"simulate", "--input", graph.string(), "--trials", "10", "--seed", "1"});
  CHECK(from_file.code == 0);
  CHECK(from_file.out.find("\nfile,500,") != std::string::npos);
}
