#include <catch2/catch_amalgamated.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rd/cli.hpp"
#include "rd/io.hpp"

using namespace rd;

namespace {

const std::string kWorkspace = std::string(RD_DATA_DIR) + "/workspace.json";
const std::string kBadDyck = std::string(RD_DATA_DIR) + "/dyck_bad.json";

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("verify passes on the shipped system", "[cli]") {
  CliRun r = run({"verify", "--file", kWorkspace, "--name", "sys-zero-id"});
  REQUIRE(r.exit_code == 0);
  Json report = Json::parse(r.out);
  REQUIRE(report["passed"] == Json(true));
  REQUIRE(report["check"] == Json("rb-system"));
}

TEST_CASE("verify fails with a witness on the corrupted Dyck file", "[cli]") {
  CliRun r = run({"verify", "--file", kBadDyck, "--check", "dyck"});
  REQUIRE(r.exit_code == 1);
  Json report = Json::parse(r.out);
  REQUIRE(report["passed"] == Json(false));
  bool has_9b = false;
  for (const Json& w : report["report"]["witnesses"]) {
    if (w["axiom"] == Json("9b")) {
      has_9b = true;
    }
  }
  REQUIRE(has_9b);
}

TEST_CASE("verify rejects a non-associative algebra file with exit 2", "[cli]") {
  std::string path = temp_path("rd_bad_algebra.json");
  {
    std::ofstream f(path);
    f << R"({"field":{"type":"Q"},"dim":2,
         "structure_constants":[[["0","0"],["1","0"]],[["0","0"],["1","0"]]]})";
  }
  CliRun r = run({"verify", "--file", path, "--check", "rb-system"});
  REQUIRE(r.exit_code == 2);
  REQUIRE(r.err.find("not associative") != std::string::npos);
}

TEST_CASE("verify rejects mismatched check flags", "[cli]") {
  CliRun r = run({"verify", "--file", kWorkspace, "--name", "sys-zero-id", "--check",
                  "rb-weight"});
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("construct a Dyck algebra and verify the round trip", "[cli]") {
  std::string path = temp_path("rd_dyck_m2.json");
  CliRun build = run({"construct", "--file", kWorkspace, "--name", "gen32", "--make",
                      "dyck", "--m", "2", "--out", path});
  REQUIRE(build.exit_code == 0);
  CliRun check = run({"verify", "--file", path, "--check", "dyck"});
  REQUIRE(check.exit_code == 0);

  Json artifact = load_json_file(path);
  REQUIRE(artifact["m"] == Json(2));
  REQUIRE(artifact["dim"] == Json(3));
}

TEST_CASE("construct surfaces a missing square root as exit 3", "[cli]") {
  std::string path = temp_path("rd_noroots.json");
  CliRun r = run({"construct", "--file", kWorkspace, "--name", "gen01-noroots", "--make",
                  "system-from-generalized", "--out", path});
  REQUIRE(r.exit_code == 3);
  Json report = load_json_file(path);
  REQUIRE(report["note"] == Json("NoRootsInField"));
  REQUIRE(report["discriminant"] == Json("-4"));
}

TEST_CASE("construct demands a level for Dyck building", "[cli]") {
  CliRun r = run({"construct", "--file", kWorkspace, "--name", "gen32", "--make", "dyck"});
  REQUIRE(r.exit_code == 2);
}

TEST_CASE("construct rejects a source that fails its predicate", "[cli]") {
  // qx3_id has weight -1, not 0, so the weighted split must refuse.
  std::string path = temp_path("rd_ws_badweight.json");
  Json ws = load_json_file(kWorkspace);
  ws["targets"]["bad-weight"] = Json{{"check", "rb-weight"},
                                     {"algebra", "qx3"},
                                     {"R", "qx3_id"},
                                     {"lambda", "zero_q"}};
  write_json_file(path, ws);
  CliRun r = run({"construct", "--file", path, "--name", "bad-weight", "--make",
                  "system-from-weighted"});
  REQUIRE(r.exit_code == 1);
}

TEST_CASE("search writes a census and respects the guard", "[cli]") {
  std::string path = temp_path("rd_census.json");
  CliRun r = run({"search", "--file", kWorkspace, "--algebra", "f2_idem1", "--target",
                  "rb-system", "--out", path});
  REQUIRE(r.exit_code == 0);
  Json census = load_json_file(path);
  REQUIRE(census["total_scanned"] == Json(4));
  REQUIRE(census["hits"].size() == 3);

  std::string blocked = temp_path("rd_blocked.json");
  std::filesystem::remove(blocked);
  CliRun g = run({"search", "--file", kWorkspace, "--algebra", "f2_dual", "--target",
                  "homothetic-triple", "--guard", "10", "--out", blocked});
  REQUIRE(g.exit_code == 4);
  REQUIRE(!std::filesystem::exists(blocked));
}

TEST_CASE("search cross-validation reports no failures on shipped algebras", "[cli]") {
  std::string path = temp_path("rd_census_cv.json");
  CliRun r = run({"search", "--file", kWorkspace, "--algebra", "f3_idem1", "--target",
                  "homothetic-triple", "--cross-validate", "--out", path});
  REQUIRE(r.exit_code == 0);
  Json census = load_json_file(path);
  REQUIRE(census["cross_validation"]["failures"].empty());
}

TEST_CASE("unknown flags and missing files exit 2", "[cli]") {
  REQUIRE(run({"verify", "--file", "/nonexistent/x.json"}).exit_code == 2);
  REQUIRE(run({"verify", "--no-such-flag"}).exit_code == 2);
  REQUIRE(run({"frobnicate"}).exit_code == 2);
}

TEST_CASE("help exits cleanly", "[cli]") {
  CliRun r = run({"--help"});
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("verify") != std::string::npos);
}

TEST_CASE("text format prints a summary line", "[cli]") {
  CliRun r = run({"verify", "--file", kWorkspace, "--name", "homo-scalar1", "--format",
                  "text"});
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.out.find("PASS homo-scalar1") != std::string::npos);
}
