#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace apolar;
using namespace testing_helpers;

TEST_CASE("analyze report has the documented keys", "[cli]") {
  RunConfig cfg;
  const auto r = cmd_analyze(kAnnihilated, cfg);
  for (const char* key : {"schema", "input", "field", "hf", "dim_I2", "perp_dims", "tangent_dim", "on_E", "verdict",
                          "primes_used", "timings_ms"})
    CHECK(r.report.contains(key));
  CHECK(r.report["schema"] == "apolar-report/1");
  CHECK(r.report["primes_used"].size() == 3);
  CHECK(r.report["timings_ms"].empty());
  CHECK(r.report["verdict"] == "NonSmoothableCertified");
  CHECK(r.exit_code == 0);
}

TEST_CASE("exit codes follow the verdict", "[cli]") {
  RunConfig cfg;
  cfg.primes = 1;
  CHECK(cmd_analyze(kReference, cfg).exit_code == 2);
  CHECK(cmd_analyze("x5^3", cfg).exit_code == 3);
  cfg.field = "q";
  CHECK(cmd_analyze(kAnnihilated, cfg).exit_code == 0);
  CHECK(cmd_analyze(kAnnihilated, cfg).report["primes_used"].empty());
}

TEST_CASE("reports are deterministic in the seed", "[cli]") {
  RunConfig cfg;
  cfg.seed = 17;
  CHECK(cmd_analyze(kAnnihilated, cfg).report.dump() == cmd_analyze(kAnnihilated, cfg).report.dump());
  CHECK(cmd_construct("gr26", cfg).text == cmd_construct("gr26", cfg).text);
  RunConfig other = cfg;
  other.seed = 18;
  CHECK(config_primes(cfg) != config_primes(other));
}

TEST_CASE("usage errors", "[cli]") {
  RunConfig cfg;
  cfg.field = "z";
  CHECK_THROWS_AS(cmd_analyze(kAnnihilated, cfg), UsageError);
  cfg.field = "fp";
  cfg.primes = 0;
  CHECK_THROWS_AS(cmd_analyze(kAnnihilated, cfg), UsageError);
  cfg.primes = 1;
  CHECK_THROWS_AS(cmd_analyze("x0^2 + x1", cfg), UsageError);
  CHECK_THROWS_AS(cmd_construct("nonsense", cfg), UsageError);
  CHECK_THROWS_AS(cmd_construct("waring:0", cfg), UsageError);
}

TEST_CASE("family command", "[cli]") {
  RunConfig cfg;
  cfg.primes = 1;
  const auto r = cmd_family("t*x1^2 + x1*x2", {"1", "2", "-1/3"}, cfg);
  CHECK(r.report["flag"] == "CONSTANT");
  CHECK(r.report["lengths"][0]["length"] == 4);
  const auto jump = cmd_family("t*x1", {"0", "1"}, cfg);
  CHECK(jump.report["flag"] == "JUMP");
}

TEST_CASE("construct dvap lists the identification", "[cli]") {
  RunConfig cfg;
  cfg.field = "q";
  const auto r = cmd_construct("dvap", cfg, std::string("x0^6"));
  CHECK(r.report["identification"][0] == "x0 = w0^2");
  CHECK(r.text == "x0^3");
}
