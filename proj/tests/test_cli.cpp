#include <filesystem>

#include "doctest.h"
#include "support.hpp"
#include "twogroups/cli.hpp"
#include "twogroups/covering.hpp"

using namespace twogroups;

namespace {

cli::Outcome run(const std::string& sub, const std::string& kind, const std::string& file, bool verify = false) {
  cli::Command c;
  c.subcommand = sub;
  c.inputs[kind] = support::catalog_path(file);
  c.verify_boundary = verify;
  return cli::run(c);
}

io::Json result(const cli::Outcome& o) { return io::parse(o.report); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("validate on the XM2 strict 2-group passes") {
    const cli::Outcome o = run("validate", "twogroup", "xm2_strict.json");
    CHECK(o.exit_code == cli::kPass);
    const io::Json j = result(o);
    CHECK(j["schema_version"] == cli::kSchemaVersion);
    CHECK(j["status"] == "PASS");
    for (const auto& c : j["result"]["coherence"]["checks"]) CHECK(c["status"] == "PASS");
    CHECK(j["inputs"][0]["checksum"] ==
          io::checksum_hex(io::read_file(support::catalog_path("xm2_strict.json"))));
  }

  TEST_CASE("strictify on T_omega reports NotSemistrict with witness d_1") {
    const cli::Outcome o = run("strictify", "twogroup", "t_omega.json");
    CHECK(o.exit_code == cli::kViolation);
    const io::Json j = result(o);
    CHECK(j["result"]["result"] == "NotSemistrict");
    CHECK(j["result"]["witness"] == io::Json::array({"d_1"}));
  }

  TEST_CASE("pi1 with boundary verification certifies the Z/2 complex") {
    const cli::Outcome o = run("pi1", "complex", "cayley_z2.json", true);
    CHECK(o.exit_code == cli::kPass);
    CHECK(result(o)["result"]["summary"] == "iso certified, |Γ|=2");
  }

  TEST_CASE("pi1 on a non-simply-connected space is inconclusive") {
    EquivariantComplex c;
    c.vertices = {"v0", "v1"};
    c.edges = {{"e0", 0, 1, "a"}, {"e1", 1, 0, "a"}};
    c.gamma = cyclic_group(2);
    c.vertex_action = {0, 1, 1, 0};
    c.edge_action = {0, 1, 1, 0};
    const auto path = std::filesystem::temp_directory_path() / "twogroups_double_circle.json";
    io::write_file(path.string(), io::write_complex(c).dump(2));
    cli::Command cmd;
    cmd.subcommand = "pi1";
    cmd.inputs["complex"] = path.string();
    cmd.verify_boundary = true;
    cmd.move_budget = 200;
    CHECK(cli::run(cmd).exit_code == cli::kInconclusive);
    std::filesystem::remove(path);
  }

  TEST_CASE("violations and structural errors map to exit codes 1 and 2") {
    CHECK(run("validate", "xmod", "broken_pfeiffer.json").exit_code == cli::kViolation);
    CHECK(run("validate", "twogroup", "t_omega_tampered.json").exit_code == cli::kViolation);
    CHECK(run("kan-check", "partial-group", "partial_v1.json").exit_code == cli::kViolation);
    CHECK(run("validate", "twogroup", "no_such_file.json").exit_code == cli::kStructural);
    CHECK(run("validate", "twogroup", "xm1.json").exit_code == cli::kStructural);
    cli::Command c;
    c.subcommand = "frobnicate";
    const cli::Outcome o = cli::run(c);
    CHECK(o.exit_code == cli::kStructural);
    CHECK_FALSE(o.diagnostic.empty());
  }

  TEST_CASE("every subcommand has a catalog input that passes") {
    CHECK(run("extract-xmod", "twogroup", "xm1_strict.json").exit_code == cli::kPass);
    CHECK(run("xmod-to-2group", "xmod", "xm2.json").exit_code == cli::kPass);
    CHECK(run("bibundle-check", "bibundle", "bibundle_identity_z3.json").exit_code == cli::kPass);
    CHECK(run("nerve", "groupoid", "groupoid_z2.json").exit_code == cli::kPass);
    CHECK(run("kan-check", "simplicial", "nerve_z2.json").exit_code == cli::kPass);
    CHECK(run("roundtrip", "xmod", "xm1.json").exit_code == cli::kPass);
    CHECK(run("strictify", "twogroup", "semistrict_lunit.json").exit_code == cli::kPass);
  }

  TEST_CASE("reports are deterministic") {
    for (const auto& [sub, kind, file] :
         std::vector<std::tuple<std::string, std::string, std::string>>{
             {"validate", "xmod", "xm6.json"}, {"roundtrip", "xmod", "xm2.json"},
             {"pi1", "complex", "cayley_s3.json"}}) {
      CHECK(run(sub, kind, file, true).report == run(sub, kind, file, true).report);
    }
  }

  TEST_CASE("text format flattens the report") {
    cli::Command c;
    c.subcommand = "validate";
    c.inputs["xmod"] = support::catalog_path("xm1.json");
    c.format = "text";
    const cli::Outcome o = cli::run(c);
    CHECK(o.exit_code == cli::kPass);
    CHECK(o.report.find("status = PASS") != std::string::npos);
  }
}
