#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "steincq/errors.hpp"
#include "steincq/examples.hpp"
#include "steincq/io.hpp"
#include "steincq/random.hpp"
#include "steincq/resource_ops.hpp"

using namespace steincq;

namespace {

std::string temp_path(const std::string& name) { return "/tmp/steincq_test_" + name; }

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const char* cli = std::getenv("STEINCQ_CLI");
  REQUIRE(cli != nullptr);
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  while (fgets(buf, sizeof(buf), pipe)) r.output += buf;
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

}  // namespace

TEST_CASE("channel files round-trip bit-exactly") {
  std::mt19937_64 rng(91);
  const CqChannel e = random_channel(3, 4, rng);
  const std::string path = temp_path("roundtrip.chan");
  write_channel(path, e);
  const CqChannel back = read_channel(path);
  REQUIRE(back.alphabet_size() == 3);
  REQUIRE(back.out_dim() == 4);
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) CHECK(back.output(x)(i, j) == e.output(x)(i, j));
  // serialization is stable: writing the reloaded channel reproduces the file
  const std::string path2 = temp_path("roundtrip2.chan");
  write_channel(path2, back);
  std::ifstream f1(path), f2(path2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  CHECK(s1.str() == s2.str());
}

TEST_CASE("channel parsing rejects malformed input") {
  CHECK_THROWS_AS(channel_from_json("{"), Error);
  CHECK_THROWS_AS(channel_from_json("{\"alphabet_size\":1}"), Error);
  CHECK_THROWS_AS(
      channel_from_json(
          "{\"alphabet_size\":1,\"out_dim\":2,\"outputs\":[[[1.0,0.0],[0.0,0.0]]]}"),
      Error);
  // a non-density output
  CHECK_THROWS_AS(
      channel_from_json("{\"alphabet_size\":1,\"out_dim\":2,\"outputs\":[[[2.0,0.0],[0.0,0.0],["
                        "0.0,0.0],[0.0,0.0]]]}"),
      Error);
}

TEST_CASE("free-set specs parse from JSON") {
  const FreeSetDescriptor rep =
      read_free_set("{\"kind\":\"replacer\",\"n\":2,\"params\":{\"alphabet_size\":2,"
                    "\"out_dim\":2}}");
  CHECK(rep.kind() == FreeSetKind::replacer);
  CHECK(rep.copies() == 2);
  CHECK(rep.alphabet_size() == 4);

  const std::string chan_path = temp_path("singleton.chan");
  write_channel(chan_path, example_channel_depolarizing());
  const FreeSetDescriptor sing = read_free_set(
      "{\"kind\":\"singleton_iid\",\"n\":1,\"params\":{\"channel_file\":\"" + chan_path +
      "\"}}");
  CHECK(sing.kind() == FreeSetKind::singleton_iid);

  const FreeSetDescriptor ppt =
      read_free_set("{\"kind\":\"ppt_output\",\"params\":{\"alphabet_size\":2}}");
  CHECK(ppt.kind() == FreeSetKind::ppt_output);
  CHECK(ppt.out_dim() == 4);

  CHECK_THROWS_AS(read_free_set("{\"kind\":\"mystery\"}"), Error);
}

TEST_CASE("smoothed channels serialize with their projectors") {
  std::vector<DensityMatrix> outs{DensityMatrix::classical({0.6, 0.4}),
                                  DensityMatrix::classical({0.45, 0.55})};
  const CqChannel e(2, 2, outs);
  const CqChannel f = CqChannel::replacer(2, DensityMatrix::classical({0.55, 0.45}));
  const SmoothedChannel sc = smooth_channel(e, f, 0.15, 2);
  const std::string path = temp_path("smoothed.json");
  write_smoothed_channel(path, sc);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("projectors") != std::string::npos);
  CHECK(ss.str().find("dmax_bound") != std::string::npos);
}

TEST_CASE("cli: divergence command reproduces the worked example") {
  const std::string e1 = temp_path("cli_e1.chan"), f = temp_path("cli_f.chan");
  write_channel(e1, example_channel_e1());
  write_channel(f, example_channel_depolarizing());
  const CliResult r = run_cli("div --kind d " + e1 + " " + f);
  CHECK(r.exit_code == 0);
  CHECK(r.output.substr(0, 12) == "0.6931471805");

  const CliResult dh = run_cli("div --kind dh --eps 0.5 " + e1 + " " + f);
  CHECK(dh.exit_code == 0);
  CHECK(dh.output.find("mode=lb") != std::string::npos);
}

TEST_CASE("cli: identical channels give zero for every kind") {
  const std::string f = temp_path("cli_same.chan");
  write_channel(f, example_channel_depolarizing());
  for (const std::string kind : {"d", "renyi", "dmax", "diamond", "choi-dist"}) {
    const CliResult r = run_cli("div --kind " + kind + " " + f + " " + f);
    CHECK(r.exit_code == 0);
    CHECK(std::abs(std::strtod(r.output.c_str(), nullptr)) <= 1e-9);
  }
}

TEST_CASE("cli: input errors exit with code 2") {
  CHECK(run_cli("div --kind d /nonexistent.chan /nonexistent.chan").exit_code == 2);
  const std::string bad = temp_path("bad.chan");
  std::ofstream(bad) << "not json";
  CHECK(run_cli("validate " + bad).exit_code == 2);
}

TEST_CASE("cli: capacity and robustness on the mixed example channel") {
  const std::string e1 = temp_path("cli_e1b.chan");
  write_channel(e1, example_channel_e1());
  const CliResult cap = run_cli("capacity " + e1 + " --tol 1e-9");
  CHECK(cap.exit_code == 0);
  CHECK(cap.output.find("lower=") != std::string::npos);

  const CliResult rob = run_cli("robustness " + e1 + " --set replacer");
  CHECK(rob.exit_code == 0);
  CHECK(rob.output.substr(0, 18) == "value=0.4054651081");
}

TEST_CASE("cli: sweeps emit deterministic CSV") {
  const std::string rho = temp_path("cli_rho.chan"), sigma = temp_path("cli_sigma.chan");
  write_channel(rho, CqChannel::replacer(1, DensityMatrix::classical({0.6, 0.4})));
  write_channel(sigma, CqChannel::replacer(1, DensityMatrix::maximally_mixed(2)));
  const std::string args = "sweep-stein " + rho + " " + sigma + " --eps 0.05 --alpha 1.1 --nmax 4";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output.substr(0, 44) == b.output.substr(0, 44));  // header + first row prefix
  CHECK(a.output.find("n,dh_over_n_lb,d_over_n,upper_bound,wall_ms") == 0);

  const CliResult j = run_cli(args + " --format json");
  CHECK(j.exit_code == 0);
  CHECK(j.output.find("\"dh_over_n_lb\"") != std::string::npos);
}

TEST_CASE("cli: smooth prints one row per copy count") {
  const std::string e = temp_path("cli_es.chan"), f = temp_path("cli_fs.chan");
  std::vector<DensityMatrix> outs{DensityMatrix::classical({0.6, 0.4}),
                                  DensityMatrix::classical({0.45, 0.55})};
  write_channel(e, CqChannel(2, 2, outs));
  write_channel(f, CqChannel::replacer(2, DensityMatrix::classical({0.55, 0.45})));
  const CliResult r = run_cli("smooth " + e + " " + f + " --rate 0.15 --k 1 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("k,km,dmax_to_set,bound,diamond_to_iid,spec_count") == 0);
  int rows = 0;
  for (char c : r.output)
    if (c == '\n') ++rows;
  CHECK(rows == 3);
}

TEST_CASE("superchannel recipes round-trip through files") {
  std::mt19937_64 rng(92);
  const SuperchannelRecipe theta =
      build_superchannel(random_density(2, rng).matrix(), 1, random_channel(2, 2, rng),
                         random_channel(2, 2, rng));
  const std::string path = temp_path("recipe.json");
  write_recipe(path, theta);
  const SuperchannelRecipe back = read_recipe(path);
  CHECK(back.probe_letter == 1);
  Matrix d = back.test_operator;
  d -= theta.test_operator;
  CHECK(d.max_abs() == 0.0);
  const CqChannel n = random_channel(2, 2, rng);
  const CqChannel a = apply_superchannel(theta, n);
  const CqChannel b = apply_superchannel(back, n);
  for (std::size_t y = 0; y < 2; ++y) {
    Matrix diff = a.output(y);
    diff -= b.output(y);
    CHECK(diff.max_abs() <= 1e-15);
  }
}

TEST_CASE("cli: oversized sweeps truncate with a warning row") {
  const std::string rho = temp_path("cli_rho3.chan"), sigma = temp_path("cli_sigma3.chan");
  std::mt19937_64 rng(93);
  std::vector<DensityMatrix> outs{
      DensityMatrix::classical(random_distribution(4, rng)),
      DensityMatrix::classical(random_distribution(4, rng))};
  write_channel(rho, CqChannel(2, 4, outs));
  write_channel(sigma, CqChannel::depolarizing(2, 4));
  // 4^7 = 16384 > 4096: rows past n = 6 are cut
  const CliResult r =
      run_cli("sweep-gqsl " + rho + " --set singleton=" + sigma + " --eps 0.2 --nmax 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# truncated") != std::string::npos);
}
