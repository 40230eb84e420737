#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "frc/frc.hpp"
#include "frc_cli.hpp"

namespace frc {
namespace {

using nlohmann::json;
using V = std::vector<std::size_t>;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  const Result r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("frc_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hierarchy"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hierarchy", "--catalog", "fano", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"hierarchy", "--catalog", "no-such-code"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"bounds", "--params", "9,2,6,4"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"bounds", "--params", "9,2,x,3"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"bounds"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"dress-demo", "--catalog", "trivial-5", "--file-size", "3", "--fail", "1"}).code, cli::kExitDomain);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, HierarchyCompleteGraph) {
  const json j = run_json({"hierarchy", "--catalog", "complete-graph-5"});
  EXPECT_EQ(j.at("M").get<V>(), (V{0, 4, 7, 9, 10, 10}));
  EXPECT_EQ(run({"hierarchy", "--catalog", "complete-graph-5", "--format", "csv"}).out,
            "k,N_k\n0,10\n1,6\n2,3\n3,1\n4,0\n5,0\n");
  EXPECT_EQ(run_json({"hierarchy", "--catalog", "complete-graph-5", "--method", "direct"}), j);
}

TEST(Cli, BoundsExample3) {
  const json j = run_json({"bounds", "--params", "9,2,6,3", "--k", "4"});
  ASSERT_EQ(j.at("rows").size(), 1u);
  EXPECT_EQ(j["rows"][0]["recursive"], 5);
  EXPECT_EQ(j["rows"][0]["dual"], 4);
  EXPECT_EQ(run({"bounds", "--params", "9,2,6,3", "--k", "10"}).code, cli::kExitDomain);
}

TEST(Cli, Table1) {
  const json j = run_json({"table1"});
  ASSERT_EQ(j.size(), 19u);
  for (const auto& row : j) EXPECT_LT(row["dual"].get<int>(), row["recursive"].get<int>());
  EXPECT_EQ(run({"table1", "--format", "csv"}).out.substr(0, 24), "params,k,recursive,dual\n");
}

TEST(Cli, DeterministicOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"report", "--catalog", "example3", "--no-timing"},
        std::vector<std::string>{"report", "--catalog", "octahedron", "--no-timing", "--format", "table"},
        std::vector<std::string>{"dress-demo", "--catalog", "octahedron", "--file-size", "9", "--fail", "2",
                                 "--reconstruct", "0,3,5", "--seed", "4"},
        std::vector<std::string>{"catalog", "list"}}) {
    const Result a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  const Result timed = run({"report", "--catalog", "example3"});
  EXPECT_NE(timed.out.find("# elapsed "), std::string::npos);
  EXPECT_EQ(run({"report", "--catalog", "example3", "--no-timing"}).out.find("elapsed"), std::string::npos);
}

// Each subcommand reports exactly what the library computes.
TEST(Cli, ThinAdapters) {
  const FrCode ex3 = catalog::example3_code();
  const json rep = json::parse(run({"report", "--catalog", "example3", "--no-timing"}).out);
  EXPECT_EQ(rep.at("hierarchy"), to_json(full_hierarchy(ex3)));
  const BoundProfile prof = bound_profile(ex3.params());
  for (std::size_t i = 0; i < prof.rows.size(); ++i) EXPECT_EQ(rep["bounds"][i], to_json(prof.rows[i]));
  EXPECT_EQ(rep["meets_bound"]["dual"].get<V>(), (V{1, 2, 4, 5, 6, 7, 8, 9}));

  const json val = run_json({"validate", "--catalog", "octahedron"});
  EXPECT_EQ(val["theta"], 12);
  EXPECT_EQ(val["simple"], is_simple(catalog::octahedron_code().structure()));

  const json d = run_json({"dual", "--catalog", "complete-graph-5"});
  EXPECT_EQ(d, io::to_json(dual(catalog::complete_graph_code(5)).structure()));

  const json g = run_json({"gfr", "--g", "5", "--alphas", "3,1"});
  const V a31{3, 1};
  EXPECT_EQ(g["hierarchy"], to_json(gfr_hierarchy(5, a31)));
  EXPECT_EQ(g["code"], io::to_json(gfr(5, a31).structure()));

  const json t = run_json({"tensor", "--left", "trivial-3", "--right", "trivial-3"});
  const json tb = run_json({"tensor", "--left", "trivial-3", "--right", "trivial-3", "--brute-force"});
  EXPECT_EQ(t["hierarchy"], tb["hierarchy"]);
  EXPECT_EQ(t["code"], io::to_json(tensor(catalog::trivial_code(3), catalog::trivial_code(3)).structure()));

  const json des = run_json({"design-check", "--design", "fano"});
  EXPECT_EQ(des["all_optimal"], true);
  EXPECT_EQ(des["hierarchy"], to_json(direct_hierarchy(design_to_fr(catalog::fano_plane()))));
}

TEST(Cli, DressDemoTranscript) {
  const json j = run_json({"dress-demo", "--catalog", "octahedron", "--file-size", "9", "--fail", "0", "--reconstruct",
                           "1,2,3"});
  EXPECT_EQ(j["any_k_guarantee"], 3);
  EXPECT_EQ(j["repair"]["symbols_transferred"], 4);
  EXPECT_EQ(j["repair"]["uncoded"], true);
  EXPECT_EQ(j["repair"]["restored_exactly"], true);
  EXPECT_EQ(j["reconstruct"]["success"], true);
  EXPECT_EQ(j["reconstruct"]["file_matches"], true);
}

TEST(Cli, FileInputs) {
  const std::string matrix = temp_file("k5.txt", io::format_matrix_text(catalog::complete_graph_code(5).structure()));
  EXPECT_EQ(run_json({"hierarchy", "--code", matrix}).at("M").get<V>(), (V{0, 4, 7, 9, 10, 10}));
  const std::string fano_json = temp_file("fano.json", run({"catalog", "dump", "fano"}).out);
  EXPECT_EQ(run_json({"design-check", "--design", fano_json})["all_optimal"], true);

  EXPECT_EQ(run({"hierarchy", "--code", temp_file("bad1.txt", "2 3\n101\n01x\n")}).code, cli::kExitDomain);
  EXPECT_EQ(run({"hierarchy", "--code", temp_file("bad2.json", "{\"theta\": 2, \"blocks\": [[0,2]]}")}).code,
            cli::kExitDomain);
  EXPECT_EQ(run({"validate", "--code", temp_file("bad3.txt", "2 2\n11\n10\n")}).code, cli::kExitDomain);
}

TEST(Cli, EnumerationCap) {
  ::setenv("FRC_MAX_ENUM", "10", 1);
  const Result capped = run({"gfr", "--g", "5", "--alphas", "3,1", "--brute-force"});
  ::setenv("FRC_MAX_ENUM", "zero", 1);
  const Result bad = run({"hierarchy", "--catalog", "fano"});
  ::unsetenv("FRC_MAX_ENUM");
  EXPECT_EQ(capped.code, cli::kExitDomain);
  EXPECT_NE(capped.err.find("error"), std::string::npos);
  EXPECT_EQ(bad.code, cli::kExitUsage);
  EXPECT_EQ(run({"hierarchy", "--catalog", "fano"}).code, 0);
}

}  // namespace
}  // namespace frc
