// Command-line front end: divergence evaluation, capacity, robustness,
// smoothing, superchannel application, Stein/GQSL sweeps, and the worked
// examples, over channel-spec JSON files.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "steincq/channel_divergences.hpp"
#include "steincq/errors.hpp"
#include "steincq/examples.hpp"
#include "steincq/io.hpp"
#include "steincq/random.hpp"
#include "steincq/resource_ops.hpp"
#include "steincq/sweeps.hpp"

using namespace steincq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNonConvergence = 3;

std::string fmt(double v) {
  if (v == kInf) return "inf";
  if (v == -kInf) return "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

// --set accepts "replacer", "ppt", "singleton=<channel file>", or a JSON
// free-set spec (inline or a path).
FreeSetDescriptor parse_set(const std::string& spec, const CqChannel& shape_of) {
  if (spec == "replacer")
    return FreeSetDescriptor::replacer(shape_of.alphabet_size(), shape_of.out_dim(), 1);
  if (spec == "ppt") return FreeSetDescriptor::ppt_output(shape_of.alphabet_size(), 1);
  if (spec.rfind("singleton=", 0) == 0)
    return FreeSetDescriptor::singleton_iid(read_channel(spec.substr(10)), 1);
  return read_free_set(spec);
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  nlohmann::json j;
  in >> j;
  const std::size_t d = j.at("dim").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (entries.size() != d * d) fail(Errc::parse_error, "matrix entry count mismatch");
  Matrix m(d, d);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k, ++idx)
      m(i, k) = cplx(entries[idx][0].get<double>(), entries[idx][1].get<double>());
  return m;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) fail(Errc::parse_error, "cannot write " + out_path);
  f << text;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream ss;
  ss << "n,dh_over_n_lb,d_over_n,upper_bound,wall_ms\n";
  for (const SweepRow& r : rows)
    ss << r.n << ',' << fmt(r.dh_over_n) << ',' << fmt(r.d_over_n) << ',' << fmt(r.upper_bound)
       << ',' << fmt(r.wall_ms) << '\n';
  return ss.str();
}

std::string rows_to_json(const std::vector<SweepRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRow& r : rows)
    arr.push_back({{"n", r.n},
                   {"dh_over_n_lb", r.dh_over_n},
                   {"d_over_n", r.d_over_n},
                   {"upper_bound", r.upper_bound},
                   {"wall_ms", r.wall_ms}});
  return arr.dump(2) + "\n";
}

bool check_sweep_rows(const std::vector<SweepRow>& rows) {
  for (const SweepRow& r : rows)
    if (!(r.dh_over_n <= r.upper_bound + 1e-8)) return false;
  return true;
}

struct ExampleReport {
  int failures = 0;
  void line(const std::string& name, double expected, double got, double tol) {
    const bool ok = std::abs(expected - got) <= tol;
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": expected " << fmt(expected)
              << ", computed " << fmt(got) << " (tol " << fmt(tol) << ")\n";
  }
};

int cmd_examples(std::uint64_t seed) {
  ExampleReport rep;
  const double ln2 = std::log(2.0);

  const ResourceQuartet q = resource_quartet();
  rep.line("R(E1)", ln2, q.r_e1, 1e-9);
  rep.line("Rtilde(E1)", 0.5 * ln2, q.rtilde_e1, 1e-9);
  rep.line("R(E2)", ln2, q.r_e2, 1e-9);
  rep.line("Rtilde(E2)", ln2, q.rtilde_e2, 1e-9);

  for (std::size_t n = 1; n <= 8; ++n) {
    const SuperchannelSeparationRow row = superchannel_separation_row(n);
    const std::string tag = "n=" + std::to_string(n);
    rep.line("choi distance " + tag, std::pow(2.0, 1.0 - static_cast<double>(n)), row.choi_dist,
             1e-12);
    rep.line("diamond distance " + tag, 2.0, row.diamond_dist, 1e-12);
    rep.line("post-superchannel choi distance " + tag, 2.0, row.post_choi_dist, 1e-12);
    rep.line("superchannel deficit " + tag, 0.0, row.deficit, 1e-12);
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> ax_dist(2, 4), d_dist(2, 3);
  for (int i = 0; i < 20; ++i) {
    const CqChannel e = random_channel(ax_dist(rng), d_dist(rng), rng);
    const FreeSetDescriptor s = FreeSetDescriptor::replacer(e.alphabet_size(), e.out_dim(), 1);
    const double radius = divergence_to_set(DivKind::umegaki, e, s, 2.0, 4e-7).value;
    const double cap = holevo_capacity(e, 4e-7).lower;
    rep.line("capacity identity #" + std::to_string(i), cap, radius, 1e-6);
  }

  std::cout << (rep.failures == 0 ? "all checks passed\n"
                                  : std::to_string(rep.failures) + " checks failed\n");
  return rep.failures == 0 ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerics for hypothesis testing and resource theories of c-q channels"};
  app.require_subcommand(1);

  std::string kind = "d", set_spec, out_path, format = "csv";
  std::string file_a, file_b, lambda_file, pass_file, fail_file;
  double eps = 0.1, alpha = 2.0, tol = 1e-8, rate = 0.0;
  std::size_t nmax = 6, probe = 0;
  std::uint64_t seed = 20260809;
  std::vector<std::size_t> k_list{1};

  auto* div = app.add_subcommand("div", "divergence between two channels");
  div->add_option("--kind", kind, "d | renyi | dmax | dh | diamond | choi-dist");
  div->add_option("e", file_a, "channel-spec file")->required();
  div->add_option("f", file_b, "channel-spec file")->required();
  div->add_option("--alpha", alpha, "Renyi order");
  div->add_option("--eps", eps, "type-I error budget for dh");

  auto* capacity = app.add_subcommand("capacity", "Holevo capacity bracket");
  capacity->add_option("e", file_a)->required();
  capacity->add_option("--tol", tol, "bracket width target");

  auto* robustness = app.add_subcommand("robustness", "log robustness to a free set");
  robustness->add_option("e", file_a)->required();
  robustness->add_option("--set", set_spec, "replacer | singleton=<file> | ppt | spec JSON")
      ->required();

  auto* decompose = app.add_subcommand("decompose", "robustness decomposition");
  decompose->add_option("e", file_a)->required();
  decompose->add_option("--set", set_spec)->required();
  decompose->add_option("--out", out_path, "prefix for the F / complement channel files");

  auto* smooth = app.add_subcommand("smooth", "D_max smoothing of an IID channel");
  smooth->add_option("e", file_a, "single-copy channel")->required();
  smooth->add_option("f", file_b, "free channel over X^m")->required();
  smooth->add_option("--rate", rate, "target exponent R")->required();
  smooth->add_option("--k", k_list, "copy counts of the free channel");
  smooth->add_option("--out", out_path, "serialize the last smoothed channel here");

  auto* superchannel = app.add_subcommand("superchannel", "apply a measure-and-prepare recipe");
  superchannel->add_option("n", file_a, "tested channel")->required();
  superchannel->add_option("--lambda", lambda_file, "test operator JSON {dim, entries}")
      ->required();
  superchannel->add_option("--probe", probe, "classical probe letter");
  superchannel->add_option("--pass", pass_file)->required();
  superchannel->add_option("--fail", fail_file)->required();
  superchannel->add_option("--out", out_path, "write the output channel here");

  auto* sweep_stein_cmd = app.add_subcommand("sweep-stein", "state-level Stein sweep");
  sweep_stein_cmd->add_option("rho", file_a, "one-letter channel holding rho")->required();
  sweep_stein_cmd->add_option("sigma", file_b, "one-letter channel holding sigma")->required();
  sweep_stein_cmd->add_option("--eps", eps);
  sweep_stein_cmd->add_option("--alpha", alpha);
  sweep_stein_cmd->add_option("--nmax", nmax);
  sweep_stein_cmd->add_option("--out", out_path);
  sweep_stein_cmd->add_option("--format", format, "csv | json");

  auto* sweep_gqsl_cmd = app.add_subcommand("sweep-gqsl", "channel-level GQSL sweep");
  sweep_gqsl_cmd->add_option("e", file_a, "base channel")->required();
  sweep_gqsl_cmd->add_option("--set", set_spec, "replacer | singleton=<file>")->required();
  sweep_gqsl_cmd->add_option("--eps", eps);
  sweep_gqsl_cmd->add_option("--alpha", alpha);
  sweep_gqsl_cmd->add_option("--nmax", nmax);
  sweep_gqsl_cmd->add_option("--tol", tol);
  sweep_gqsl_cmd->add_option("--out", out_path);
  sweep_gqsl_cmd->add_option("--format", format, "csv | json");

  auto* examples = app.add_subcommand("examples", "reproduce the worked examples");
  examples->add_option("--seed", seed);

  auto* validate = app.add_subcommand("validate", "validate a channel-spec file");
  validate->add_option("e", file_a)->required();
  validate->add_option("--set", set_spec, "also report the free-set axioms");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*div) {
      const CqChannel e = read_channel(file_a);
      const CqChannel f = read_channel(file_b);
      if (kind == "diamond") {
        std::cout << fmt(diamond_distance(e, f)) << "\n";
      } else if (kind == "choi-dist") {
        std::cout << fmt(choi_trace_distance(e, f)) << "\n";
      } else if (kind == "dh") {
        if (!(eps > 0.0 && eps < 1.0)) fail(Errc::eps_out_of_range, "eps must lie in (0,1)");
        double best = -kInf;
        std::size_t arg = 0;
        for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
          const double v = hypothesis_test(e.output_state(x), f.output_state(x), eps).value;
          if (v > best) {
            best = v;
            arg = x;
          }
        }
        std::cout << fmt(best) << " argmax_letter=" << arg << " mode=lb\n";
      } else {
        DivKind dk;
        if (kind == "d")
          dk = DivKind::umegaki;
        else if (kind == "renyi")
          dk = DivKind::renyi;
        else if (kind == "dmax")
          dk = DivKind::dmax;
        else
          fail(Errc::parse_error, "unknown divergence kind " + kind);
        const ChannelDivergenceResult r = channel_divergence(dk, e, f, alpha);
        std::cout << fmt(r.value) << " argmax_letter=" << r.arg_input << "\n";
      }
    } else if (*capacity) {
      const CapacityResult r = holevo_capacity(read_channel(file_a), tol);
      std::cout << "lower=" << fmt(r.lower) << " upper=" << fmt(r.upper)
                << " iterations=" << r.iterations << " p=[";
      for (std::size_t x = 0; x < r.optimal_p.size(); ++x)
        std::cout << (x ? "," : "") << fmt(r.optimal_p[x]);
      std::cout << "]\n";
    } else if (*robustness) {
      const CqChannel e = read_channel(file_a);
      const RobustnessResult r = log_robustness(e, parse_set(set_spec, e));
      std::cout << "value=" << fmt(r.value) << " bracket=[" << fmt(r.bracket_lo) << ","
                << fmt(r.bracket_hi) << "]\n";
    } else if (*decompose) {
      const CqChannel e = read_channel(file_a);
      const FreeSetDescriptor s = parse_set(set_spec, e);
      const RobustnessDecomposition d = robustness_decompose(e, s);
      double residual = 0.0;
      for (std::size_t x = 0; x < e.alphabet_size(); ++x) {
        Matrix lhs = e.output(x);
        Matrix c = d.complement.output(x);
        c *= cplx(d.r, 0.0);
        lhs += c;
        lhs *= cplx(1.0 / (1.0 + d.r), 0.0);
        lhs -= d.free_channel.output(x);
        residual = std::max(residual, lhs.max_abs());
      }
      std::cout << "r=" << fmt(d.r) << " log_robustness=" << fmt(std::log1p(d.r))
                << " reconstruction_residual=" << fmt(residual)
                << " membership_violation=" << fmt(membership(d.free_channel, s).violation)
                << "\n";
      if (!out_path.empty()) {
        write_channel(out_path + ".free.chan", d.free_channel);
        write_channel(out_path + ".complement.chan", d.complement);
      }
    } else if (*smooth) {
      const CqChannel e = read_channel(file_a);
      const CqChannel f = read_channel(file_b);
      const std::size_t m = exact_log(f.alphabet_size(), e.alphabet_size());
      std::cout << "k,km,dmax_to_set,bound,diamond_to_iid,spec_count\n";
      for (std::size_t k : k_list) {
        const SmoothedChannel sc = smooth_channel(e, f, rate, k);
        const FreeSetDescriptor s = FreeSetDescriptor::singleton_iid(f, sc.copies / m);
        const double dm = log_robustness(sc.channel, s).value;
        const double dd = diamond_distance(tensor_power(e, sc.copies), sc.channel);
        std::cout << k << ',' << sc.copies << ',' << fmt(dm) << ',' << fmt(sc.dmax_bound) << ','
                  << fmt(dd) << ',' << sc.spec_count << "\n";
        if (!out_path.empty()) write_smoothed_channel(out_path, sc);
        if (!(dm <= sc.dmax_bound + 1e-8))
          fail(Errc::precondition_violated, "smoothing bound violated");
      }
    } else if (*superchannel) {
      const CqChannel n = read_channel(file_a);
      const SuperchannelRecipe theta =
          build_superchannel(read_matrix_file(lambda_file), probe, read_channel(pass_file),
                             read_channel(fail_file));
      const CqChannel out = apply_superchannel(theta, n);
      const double w = trace_product(theta.test_operator, n.output(probe));
      std::cout << "pass_weight=" << fmt(w) << "\n";
      if (!out_path.empty())
        write_channel(out_path, out);
      else
        std::cout << channel_to_json(out) << "\n";
    } else if (*sweep_stein_cmd) {
      const CqChannel rc = read_channel(file_a);
      const CqChannel sc = read_channel(file_b);
      const std::vector<SweepRow> rows =
          sweep_stein(rc.output_state(0), sc.output_state(0), eps, alpha, nmax);
      emit(format == "json" ? rows_to_json(rows) : rows_to_csv(rows), out_path);
      if (!check_sweep_rows(rows)) return kExitCheckFailure;
    } else if (*sweep_gqsl_cmd) {
      const CqChannel e = read_channel(file_a);
      std::vector<SweepRow> rows;
      if (set_spec == "replacer") {
        rows = sweep_gqsl(e, SweepFamily::replacer, nullptr, eps, alpha, nmax, tol);
      } else if (set_spec.rfind("singleton=", 0) == 0) {
        const CqChannel f = read_channel(set_spec.substr(10));
        rows = sweep_gqsl(e, SweepFamily::singleton, &f, eps, alpha, nmax, tol);
      } else {
        fail(Errc::parse_error, "sweep-gqsl supports replacer and singleton families");
      }
      std::string text = format == "json" ? rows_to_json(rows) : rows_to_csv(rows);
      if (rows.size() < nmax && format != "json")
        text += "# truncated at n=" + std::to_string(rows.size()) +
                ": enumeration too large\n";
      emit(text, out_path);
      if (!check_sweep_rows(rows)) return kExitCheckFailure;
    } else if (*examples) {
      return cmd_examples(seed);
    } else if (*validate) {
      const CqChannel e = read_channel(file_a);
      std::cout << "ok alphabet_size=" << e.alphabet_size() << " out_dim=" << e.out_dim()
                << "\n";
      if (!set_spec.empty()) {
        const FreeSetDescriptor s = parse_set(set_spec, e);
        const auto a = s.check_axioms();
        std::cout << "axioms convex_closed=" << a.convex_closed
                  << " permutation_closed=" << a.permutation_closed
                  << " tensor_closed=" << a.tensor_closed
                  << " full_rank_member=" << a.full_rank_member
                  << " choi_min_eigenvalue=" << fmt(a.choi_min_eigenvalue) << "\n";
        std::cout << "membership violation=" << fmt(membership(e, s).violation) << "\n";
      }
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return err.code() == Errc::non_convergence || err.code() == Errc::convergence_failure
               ? kExitNonConvergence
               : kExitInputError;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
