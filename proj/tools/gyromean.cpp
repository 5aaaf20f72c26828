// gyromean command-line tool.
//
//   gyromean compute --op OP --a FILE [--b FILE] [--t REAL] [--x FILE] [--out FILE]
//   gyromean geodesic --kind {gyroline|cogyroline} --a FILE --b FILE --samples N --space {cone|density}
//   gyromean verify [--seed U64] [--trials N] [--dims LIST] [--report FILE] [--format json|csv]
//   gyromean counterexample [--report FILE] [--format json|csv]
//
// Exit status: 0 pass, 1 property violation, 2 input error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>

#include "gyromean/gyromean.hpp"

namespace {

using namespace gyromean;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

PositiveDefinite read_pd(const std::string& path) { return PositiveDefinite(io::read_matrix_file(path)); }

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
  } else {
    io::write_json_file(out, j);
  }
}

void emit_report(const campaign::Report& r, const std::string& path, const std::string& format) {
  const std::string text = format == "csv" ? r.to_csv() : r.to_json().dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(Errc::invalid_argument, "cannot write " + path);
  f << text;
}

void print_summary(const campaign::Report& r, std::ostream& os) {
  std::size_t failed = 0;
  for (const auto& p : r.properties) {
    if (p.pass) continue;
    ++failed;
    os << "FAIL " << p.id << "  violations=" << p.violations << " errors=" << p.errors
       << " premise_held=" << p.premise_held << " max=" << p.max_violation << "  " << p.witness << '\n';
  }
  for (const auto& a : r.missing_anchors) os << "MISSING " << a << '\n';
  os << r.properties.size() - failed << '/' << r.properties.size() << " properties pass"
     << (r.pass ? "" : "; campaign FAILED") << '\n';
}

std::uint64_t default_seed() {
  const char* env = std::getenv("GYROMEAN_SEED");
  if (env == nullptr || *env == '\0') return 42;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(env, &used, 0);
    if (used != std::string(env).size()) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::invalid_argument, std::string("GYROMEAN_SEED is not an unsigned integer: ") + env);
  }
}

int run_compute(const std::string& op, const std::string& a_path, const std::string& b_path, double t,
                const std::string& x_path, const std::string& out) {
  static const std::map<std::string, DistanceKind> distances = {
      {"thompson", DistanceKind::thompson},
      {"riemannian", DistanceKind::riemannian},
      {"semimetric-op", DistanceKind::semimetric_op},
      {"semimetric-frob", DistanceKind::semimetric_frob},
  };
  const auto a = read_pd(a_path);
  if (b_path.empty()) throw Error(Errc::invalid_argument, "--b is required for --op " + op);
  const auto b = read_pd(b_path);
  if (op == "geo" || op == "spectral") {
    const auto m = op == "geo" ? geo_mean(a, b, t) : spectral_mean(a, b, t);
    emit(io::matrix_to_json(m.matrix()), out);
  } else if (auto it = distances.find(op); it != distances.end()) {
    emit({{"op", op}, {"value", distance(it->second, a, b)}}, out);
  } else if (op == "gyr") {
    if (x_path.empty()) throw Error(Errc::invalid_argument, "--x is required for --op gyr");
    emit(io::matrix_to_json(cone::gyration(a, b, read_pd(x_path)).matrix()), out);
  } else if (op == "coop") {
    emit(io::matrix_to_json(cone::cooperation(a, b).matrix()), out);
  } else {
    throw Error(Errc::invalid_argument, "unknown op '" + op + "'");
  }
  return kExitPass;
}

int run_geodesic(const std::string& kind, const std::string& a_path, const std::string& b_path, int samples,
                 const std::string& space, const std::string& out) {
  if (samples < 2) throw Error(Errc::invalid_argument, "--samples must be at least 2");
  const bool co = kind == "cogyroline";
  const auto a = read_pd(a_path);
  const auto b = read_pd(b_path);
  json points = json::array();
  for (int i = 0; i < samples; ++i) {
    const double t = static_cast<double>(i) / (samples - 1);
    Matrix m;
    if (space == "density") {
      const density::DensityMatrix ra(a);
      const density::DensityMatrix rb(b);
      m = (co ? density::cogyroline(t, ra, rb) : density::gyroline(t, ra, rb)).matrix();
    } else {
      m = (co ? cone::cogyroline(t, a, b) : cone::gyroline(t, a, b)).matrix();
    }
    points.push_back({{"t", t}, {"matrix", io::matrix_to_json(m)}});
  }
  emit({{"kind", kind}, {"space", space}, {"points", std::move(points)}}, out);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted geometric means of positive definite matrices"};
  app.require_subcommand(1);

  std::string op;
  std::string a_path;
  std::string b_path;
  std::string x_path;
  std::string out;
  double t = 0.5;
  auto* compute = app.add_subcommand("compute", "Evaluate a mean, distance or gyro operation");
  compute->add_option("--op", op, "Operation")
      ->required()
      ->check(CLI::IsMember({"geo", "spectral", "thompson", "riemannian", "semimetric-op", "semimetric-frob", "gyr",
                             "coop"}));
  compute->add_option("--a", a_path, "First matrix (JSON)")->required();
  compute->add_option("--b", b_path, "Second matrix (JSON)");
  compute->add_option("--t", t, "Weight");
  compute->add_option("--x", x_path, "Matrix acted on by the gyration (JSON)");
  compute->add_option("--out", out, "Write the result here instead of stdout");

  std::string kind = "gyroline";
  std::string space = "cone";
  int samples = 11;
  auto* geodesic = app.add_subcommand("geodesic", "Sample a gyroline or cogyroline");
  geodesic->add_option("--kind", kind)->check(CLI::IsMember({"gyroline", "cogyroline"}));
  geodesic->add_option("--a", a_path)->required();
  geodesic->add_option("--b", b_path)->required();
  geodesic->add_option("--samples", samples);
  geodesic->add_option("--space", space)->check(CLI::IsMember({"cone", "density"}));
  geodesic->add_option("--out", out);

  campaign::CampaignConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string report;
  std::string format = "json";
  auto* verify = app.add_subcommand("verify", "Run the seeded property campaign");
  verify->add_option("--seed", seed, "Seed (default: $GYROMEAN_SEED or 42)");
  verify->add_option("--trials", cfg.trials, "Trials per dimension")->capture_default_str();
  verify->add_option("--dims", cfg.dims, "Matrix dimensions")->delimiter(',')->capture_default_str();
  verify->add_option("--cond-cap", cfg.cond_cap, "Condition number cap")->capture_default_str();
  verify->add_option("--fixtures", cfg.closed_form_fixtures, "Closed-form fixtures")->capture_default_str();
  verify->add_option("--threads", cfg.threads, "Worker threads, 0 for all cores")->capture_default_str();
  verify->add_option("--only", cfg.only, "Run only these property ids")->delimiter(',');
  verify->add_option("--report", report, "Report file (default: stdout)");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* counter = app.add_subcommand("counterexample", "Reproduce the fixed counterexamples");
  counter->add_option("--report", report, "Report file (default: stdout)");
  counter->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*compute) return run_compute(op, a_path, b_path, t, x_path, out);
    if (*geodesic) return run_geodesic(kind, a_path, b_path, samples, space, out);
    if (*verify) {
      cfg.seed = seed ? *seed : default_seed();
      cfg.validate();
      const auto start = std::chrono::steady_clock::now();
      const auto r = campaign::run_campaign(cfg);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      emit_report(r, report, format);
      print_summary(r, std::cerr);
      std::cerr << "elapsed " << secs << " s\n";
      return r.pass ? kExitPass : kExitViolation;
    }
    const auto r = campaign::reproduce_counterexamples();
    emit_report(r, report, format);
    print_summary(r, std::cerr);
    return r.pass ? kExitPass : kExitViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == Errc::no_convergence || e.code() == Errc::generation_failure ? kExitViolation : kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
