#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "biphoton/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = biphoton::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("state --named HV (golden)") {
    const Result r = invoke({"state", "--named", "HV"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out ==
          "c1 = 0.000000000,0.000000000\n"
          "c2 = 1.000000000,0.000000000\n"
          "c3 = 0.000000000,0.000000000\n"
          "photon1: theta = 0.000000, phi = 0.000000\n"
          "photon2: theta = 3.141593, phi = 0.000000\n"
          "global_phase = 0.000000\n"
          "P = 0.000000\n"
          "S = 0.000000,0.000000,0.000000\n");
  }

  TEST_CASE("state via explicit amplitudes and via angles") {
    const Result hh = invoke({"state", "--c", "1,0;0,0;0,0"});
    CHECK(hh.code == 0);
    CHECK(contains(hh.out, "P = 1.000000"));
    CHECK(contains(hh.out, "S = 0.000000,0.000000,2.000000"));

    const Result near_hv = invoke({"state", "--modes", "0,0,3.14159,0"});
    CHECK(near_hv.code == 0);
    CHECK(contains(near_hv.out, "photon2: theta = 3.141590"));
    CHECK(contains(near_hv.out, "P = 0.00000"));
  }

  TEST_CASE("state input selection is exclusive") {
    CHECK(invoke({"state"}).code == 2);
    CHECK(invoke({"state", "--named", "HV", "--c", "1,0;0,0;0,0"}).code == 2);
  }

  TEST_CASE("coincide goldens") {
    const Result rl = invoke({"coincide", "--input", "RL", "--tuned", "H,V"});
    CHECK(rl.code == 0);
    CHECK(rl.out ==
          "exact_probability = 0.000000000\n"
          "overlap_squared = 0.000000000\n"
          "same_arm_probability = 0.500000000\n"
          "orthogonal: yes\n");

    const Result dd = invoke({"coincide", "--input", "DD", "--tuned", "H,H"});
    CHECK(dd.code == 0);
    CHECK(contains(dd.out, "overlap_squared = 0.500000000"));
    CHECK(contains(dd.out, "orthogonal: no"));

    const Result hv = invoke({"coincide", "--input", "HV", "--tuned", "HV"});
    CHECK(contains(hv.out, "exact_probability = 0.250000000"));
  }

  TEST_CASE("coincide accepts mode angle literals") {
    const Result r =
        invoke({"coincide", "--input", "modes 0:0 3.141592653589793:0", "--tuned", "H,V"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "overlap_squared = 1.000000000"));
  }

  TEST_CASE("ideal table (golden)") {
    const Result r = invoke({"table"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "input,detected,P_in,P_det,probability\n"
          "HV,HV,0.000000,0.000000,1.000000000\n"
          "RL,HV,0.000000,0.000000,0.000000000\n"
          "DDb,HV,0.000000,0.000000,0.000000000\n"
          "HV,DDb,0.000000,0.000000,0.000000000\n"
          "DDb,DDb,0.000000,0.000000,1.000000000\n"
          "HV,HH,0.000000,1.000000,0.000000000\n"
          "DDb,HH,0.000000,1.000000,0.500000000\n");
  }

  TEST_CASE("table --mc is deterministic and lands near the reference rates") {
    const Result a = invoke({"table", "--mc", "--seed", "7"});
    const Result b = invoke({"table", "--mc", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "input,detected,P_in,P_det,rate,stderr"));

    // first data row: HV,HV with a rate between 3 and 5
    std::istringstream lines(a.out);
    std::string header, row1;
    std::getline(lines, header);
    std::getline(lines, row1);
    const auto rate_pos = row1.find(",0.000000,0.000000,");
    REQUIRE(rate_pos != std::string::npos);
    const double rate = std::stod(row1.substr(rate_pos + 19));
    CHECK(rate > 3.0);
    CHECK(rate < 5.0);
  }

  TEST_CASE("table rejects a bad observable") {
    const Result r = invoke({"table", "--observable", "wrong"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(contains(r.err, "observable"));
  }

  TEST_CASE("scan flat input (golden)") {
    const Result r = invoke({"scan", "--input", "HV", "--arm", "2", "--steps", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "theta,phi,intensity\n"
          "0.000000,0.000000,0.500000000\n"
          "0.000000,3.141593,0.500000000\n"
          "3.141593,0.000000,0.500000000\n"
          "3.141593,3.141593,0.500000000\n"
          "# max=0.500000000 min=0.500000000 visibility=0.000000 P=0.000000\n");
  }

  TEST_CASE("scan visibility trailer equals P") {
    const Result hh = invoke({"scan", "--input", "HH", "--arm", "1", "--steps", "2"});
    CHECK(contains(hh.out, "visibility=1.000000 P=1.000000"));

    const Result hd = invoke({"scan", "--input", "modes H D", "--arm", "1", "--steps", "2"});
    CHECK(contains(hd.out, "visibility=0.942809 P=0.942809"));
  }

  TEST_CASE("scan argument validation") {
    CHECK(invoke({"scan", "--input", "HV", "--arm", "3"}).code == 2);
    CHECK(invoke({"scan", "--input", "HV", "--arm", "1", "--steps", "0"}).code == 2);
    CHECK(invoke({"scan", "--input", "modes H", "--arm", "1"}).code == 2);
  }

  TEST_CASE("mc runs an experiment file deterministically") {
    const auto path = write_temp("biphoton_cli_exp.json", R"({
      "state": {"named": "HV"},
      "tuning": {"arm1": {"named": "H"}, "arm2": {"named": "V"}},
      "montecarlo": {"seed": 5}
    })");
    const Result a = invoke({"mc", "--config", path.string()});
    const Result b = invoke({"mc", "--config", path.string()});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(contains(a.out, "input,detected,P_in,P_det,rate,stderr"));

    const Result c = invoke({"mc", "--config", path.string(), "--seed", "9"});
    CHECK(c.code == 0);
    CHECK(c.out != a.out);
    std::filesystem::remove(path);
  }

  TEST_CASE("mc propagates validation failures as exit 3") {
    const auto path = write_temp("biphoton_cli_bad_state.json", R"({
      "state": {"c": [[1.0, 0.0], [1.0, 0.0], [0.0, 0.0]]},
      "tuning": {"arm1": {"named": "H"}, "arm2": {"named": "V"}}
    })");
    const Result r = invoke({"mc", "--config", path.string()});
    CHECK(r.code == 3);
    CHECK(contains(r.err, "norm"));
    std::filesystem::remove(path);
  }

  TEST_CASE("mc reports unknown keys as exit 2") {
    const auto path = write_temp("biphoton_cli_bad_key.json", R"({
      "state": {"named": "HV"},
      "tuning": {"arm1": {"named": "H"}, "arm2": {"named": "V"}},
      "surprise": true
    })");
    const Result r = invoke({"mc", "--config", path.string()});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "'surprise'"));
    std::filesystem::remove(path);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"warp"}).code == 2);
    CHECK(invoke({"state", "--named", "XY"}).code == 2);
    CHECK(invoke({"mc", "--config", "/missing/file.json"}).code == 2);
    const Result bad_norm = invoke({"state", "--c", "1,0;1,0;1,0"});
    CHECK(bad_norm.code == 3);
    CHECK(bad_norm.out.empty());
  }

  TEST_CASE("help goes to the output stream with exit 0") {
    const Result r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "Subcommands"));
    CHECK(contains(r.out, "coincide"));
  }
}
