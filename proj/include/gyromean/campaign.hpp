#pragma once

// Seeded property campaign over every mean, metric, inequality, gyro model
// and closed form in the library, plus the fixed counterexample checks.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <functional>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "gyromean/ball.hpp"
#include "gyromean/closed_forms.hpp"
#include "gyromean/gyro_cone.hpp"
#include "gyromean/gyro_density.hpp"
#include "gyromean/means.hpp"
#include "gyromean/metrics.hpp"
#include "gyromean/order.hpp"
#include "gyromean/random.hpp"

namespace gyromean::campaign {

using nlohmann::json;

inline constexpr std::string_view kVersion = "1.0.0";
/// Conditional properties whose premise held fewer times than this fail.
inline constexpr std::size_t kMinPremiseHeld = 50;

struct CampaignConfig {
  std::uint64_t seed = 42;
  int trials = 200;
  std::vector<Index> dims{2, 3, 4, 6};
  double cond_cap = 1e4;
  std::vector<double> t_grid{0.1, 0.25, 0.5, 0.75, 0.9};
  std::vector<double> p_grid{1.0, 1.5, 2.0, 3.0, 5.0};
  int closed_form_fixtures = 500;
  Tolerances tol{};
  /// 0 picks std::thread::hardware_concurrency(). Never affects results.
  unsigned threads = 1;
  /// Restrict the run to these property ids; empty runs everything.
  std::vector<std::string> only;
  bool findings = true;

  void validate() const {
    if (trials < 1) throw Error(Errc::invalid_argument, "trials must be at least 1");
    if (dims.empty()) throw Error(Errc::invalid_argument, "dims must not be empty");
    for (Index d : dims) {
      if (d < 2 || d > 8) throw Error(Errc::invalid_argument, "dims must lie in [2, 8]");
    }
    if (!(cond_cap > 1.0)) throw Error(Errc::invalid_argument, "cond_cap must exceed 1");
    if (t_grid.empty() || p_grid.empty()) throw Error(Errc::invalid_argument, "t_grid and p_grid must not be empty");
    for (double t : t_grid) {
      if (!(t > 0.0 && t <= 1.0)) throw Error(Errc::invalid_argument, "t_grid values must lie in (0, 1]");
    }
    for (double p : p_grid) {
      if (!(p >= 1.0)) throw Error(Errc::invalid_argument, "p_grid values must be at least 1");
    }
    if (closed_form_fixtures < 1) throw Error(Errc::invalid_argument, "closed_form_fixtures must be at least 1");
    tol.validate();
  }

  json to_json() const {
    return {{"seed", seed},
            {"trials", trials},
            {"dims", dims},
            {"cond_cap", cond_cap},
            {"t_grid", t_grid},
            {"p_grid", p_grid},
            {"closed_form_fixtures", closed_form_fixtures},
            {"only", only},
            {"tolerances",
             {{"hermiticity", tol.hermiticity},
              {"pd", tol.pd},
              {"reconstruct", tol.reconstruct},
              {"loewner", tol.loewner},
              {"equality", tol.equality}}}};
  }
};

enum class Kind { identity, inequality, conditional };

constexpr std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::identity: return "identity";
    case Kind::inequality: return "inequality";
    case Kind::conditional: return "conditional";
  }
  return "?";
}

/// One evaluated sample. value is a residual or a negated margin; larger is worse.
struct Observation {
  bool premise = true;
  bool required = true;
  bool violated = false;
  double value = 0.0;
  std::string note;
};

struct PropertyRecord {
  std::string id;
  std::string anchor;
  Kind kind = Kind::identity;
  std::size_t samples = 0;
  std::size_t premise_held = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  double max_violation = -std::numeric_limits<double>::infinity();
  double threshold = 0.0;
  std::string witness;
  bool pass = false;
};

struct Finding {
  std::string id;
  std::string description;
  json values;
};

namespace detail {

inline json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

}  // namespace detail

struct Report {
  std::vector<PropertyRecord> properties;
  std::vector<Finding> findings;
  std::vector<std::string> missing_anchors;
  bool coverage_checked = false;
  json environment;
  std::string timestamp;
  bool pass = false;

  const PropertyRecord* find(std::string_view id) const {
    for (const auto& p : properties) {
      if (p.id == id) return &p;
    }
    return nullptr;
  }

  json to_json(bool with_timestamp = true) const {
    json props = json::array();
    for (const auto& p : properties) {
      props.push_back({{"id", p.id},
                       {"anchor", p.anchor},
                       {"kind", to_string(p.kind)},
                       {"samples", p.samples},
                       {"premise_held", p.premise_held},
                       {"violations", p.violations},
                       {"errors", p.errors},
                       {"max_violation", detail::number(p.max_violation)},
                       {"threshold", p.threshold},
                       {"witness", p.witness},
                       {"pass", p.pass}});
    }
    json finds = json::array();
    for (const auto& f : findings) {
      finds.push_back({{"id", f.id}, {"description", f.description}, {"values", f.values}});
    }
    json j = {{"environment", environment},
              {"pass", pass},
              {"coverage", {{"checked", coverage_checked}, {"missing_anchors", missing_anchors}}},
              {"properties", std::move(props)},
              {"findings", std::move(finds)}};
    if (with_timestamp) j["timestamp"] = timestamp;
    return j;
  }

  std::string to_csv() const {
    std::ostringstream os;
    os << std::setprecision(17);
    os << "id,anchor,kind,samples,premise_held,violations,errors,max_violation,threshold,pass\n";
    for (const auto& p : properties) {
      os << p.id << ',' << detail::csv_field(p.anchor) << ',' << to_string(p.kind) << ',' << p.samples << ','
         << p.premise_held << ',' << p.violations << ',' << p.errors << ',' << p.max_violation << ','
         << p.threshold << ',' << (p.pass ? "true" : "false") << '\n';
    }
    return os.str();
  }
};

/// Per-trial context handed to property evaluators.
struct Trial {
  rng::Stream& rng;
  Index dim;
  std::size_t index;
  const CampaignConfig& cfg;

  double cycle(const std::vector<double>& grid, std::size_t stride = 1) const {
    return grid[(index / stride) % grid.size()];
  }
  PositiveDefinite pd() { return rng::gen_random_pd(rng, dim, cfg.cond_cap); }
  PositiveDefinite pd_log(double cap) { return rng::gen_pd_log_spectrum(rng, dim, std::max(cap, 1.0 + 1e-9)); }
};

using TrialFn = std::function<void(Trial&, std::vector<Observation>&)>;

enum class Domain {
  matrix_dims,  // cfg.trials samples for each of cfg.dims
  fixtures,     // cfg.closed_form_fixtures samples at a fixed dimension
};

struct Property {
  std::string id;
  std::string anchor;
  Kind kind;
  double threshold;
  Domain domain;
  Index fixture_dim;
  TrialFn run;
};

namespace detail {

inline void residual(std::vector<Observation>& out, double value, double threshold, std::string note = {}) {
  out.push_back({true, true, !(value <= threshold), value, std::move(note)});
}

inline void from_check(std::vector<Observation>& out, const order::CheckResult& r) {
  out.push_back({r.premise_held, r.conclusion_required, r.violated(), -r.margin, r.witness});
}

/// Margin-valued inequality: holds when margin >= -slack.
inline void margin(std::vector<Observation>& out, double m, double slack, std::string note = {}) {
  out.push_back({true, true, !(m >= -slack), -m, std::move(note)});
}

inline double rel(const Matrix& a, const Matrix& b) { return relative_distance(a, b); }

inline double op_norm(const Matrix& m) {
  return std::sqrt(std::max(eigh(Hermitian::symmetrized(m * m.adjoint())).eigenvalues.maxCoeff(), 0.0));
}

inline std::string tag(const char* name, double v) {
  std::ostringstream os;
  os << name << '=' << v;
  return os.str();
}

/// U diag(d1) U*, U diag(d2) U* with a shared random unitary.
inline std::pair<PositiveDefinite, PositiveDefinite> commuting_pair(Trial& tr, RealVector& d1, RealVector& d2,
                                                                    double cond_cap = 0.0) {
  const Matrix u = rng::random_unitary(tr.rng, tr.dim);
  const double half = 0.5 * std::log(cond_cap > 1.0 ? cond_cap : tr.cfg.cond_cap);
  d1.resize(tr.dim);
  d2.resize(tr.dim);
  for (Index i = 0; i < tr.dim; ++i) {
    d1(i) = std::exp(tr.rng.uniform(-half, half));
    d2(i) = std::exp(tr.rng.uniform(-half, half));
  }
  auto make = [&](const RealVector& d) {
    return PositiveDefinite::from_computed(u * d.cast<Complex>().asDiagonal() * u.adjoint());
  };
  return {make(d1), make(d2)};
}

inline PositiveDefinite unitary_congruence(const PositiveDefinite& a, const Matrix& u) {
  return PositiveDefinite::from_computed(u.adjoint() * a.matrix() * u);
}

inline gyro::AxiomSample<PositiveDefinite> cone_sample(Trial& tr) {
  auto a = tr.pd();
  auto b = tr.pd();
  auto c = tr.pd();
  return {a, b, c, tr.rng.uniform(-1.0, 1.0), tr.rng.uniform(-1.0, 1.0)};
}

inline gyro::AxiomSample<ball::BallVector> ball_sample(Trial& tr) {
  auto a = rng::random_ball_vector(tr.rng, tr.dim, 0.9);
  auto b = rng::random_ball_vector(tr.rng, tr.dim, 0.9);
  auto c = rng::random_ball_vector(tr.rng, tr.dim, 0.9);
  return {a, b, c, tr.rng.uniform(-2.0, 2.0), tr.rng.uniform(-2.0, 2.0)};
}

template <class M>
void axioms(std::vector<Observation>& out, const M& model, const gyro::AxiomSample<typename M::element_type>& s,
            double threshold) {
  const std::vector<gyro::AxiomSample<typename M::element_type>> one{s};
  const auto rep = gyro::axiom_suite(model, one, threshold);
  std::string worst_name;
  double worst = -1.0;
  for (const auto& [name, r] : rep.residuals) {
    if (r > worst) {
      worst = r;
      worst_name = name;
    }
  }
  residual(out, worst, threshold, "worst axiom " + worst_name);
}

/// ⊖a ⊕ (a ⊕ (b ⊕ c)) ... generic gyration ⊖(a⊕b) ⊕ (a⊕(b⊕c)).
template <class M>
typename M::element_type generic_gyration(const M& m, const typename M::element_type& a,
                                          const typename M::element_type& b, const typename M::element_type& c) {
  return m.add(m.neg(m.add(a, b)), m.add(a, m.add(b, c)));
}

inline ball::Vector e3(double x, double y, double z) {
  ball::Vector v(3);
  v << x, y, z;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Property registry

inline std::vector<Property> spectral_properties() {
  using namespace detail;
  std::vector<Property> ps;
  ps.push_back({"spectral.eigh_reconstruction", "Hermitian eigendecomposition reconstructs its input", Kind::identity,
                1e-10, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto h = rng::random_hermitian(tr.rng, tr.dim);
                  const auto d = eigh(h);
                  const double recon = (d.reconstruct() - h.matrix()).norm() / (1.0 + h.matrix().norm());
                  const double ortho = (d.vectors.adjoint() * d.vectors - Matrix::Identity(tr.dim, tr.dim)).norm();
                  bool sorted = true;
                  for (Index i = 1; i < d.dim(); ++i) sorted = sorted && d.eigenvalues(i - 1) <= d.eigenvalues(i);
                  residual(out, sorted ? std::max(recon, ortho) : std::numeric_limits<double>::infinity(), 1e-10);
                }});
  ps.push_back({"spectral.functional_calculus", "functional calculus: powers compose, sqrt, exp-log", Kind::identity,
                1e-10, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const double s = tr.rng.uniform(-1.0, 1.0);
                  const double t = tr.rng.uniform(-1.0, 1.0);
                  const double r = std::max({rel(powm(a, 1.0).matrix(), a.matrix()),
                                             rel(powm(powm(a, t), s).matrix(), powm(a, s * t).matrix()),
                                             rel(sqrtm(sqrtm(a)).matrix(), powm(a, 0.25).matrix()),
                                             rel(expm(logm(a)).matrix(), a.matrix())});
                  residual(out, r, 1e-10, tag("s", s) + ' ' + tag("t", t));
                }});
  ps.push_back({"spectral.inversion_antitone", "inversion reverses the Loewner order", Kind::conditional, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto x = tr.pd();
                  const auto p = tr.pd();
                  const auto y = PositiveDefinite::from_computed(x.matrix() + tr.rng.uniform(0.01, 1.0) * p.matrix());
                  const double slack = tr.cfg.tol.loewner;
                  const bool premise = loewner_le(x.hermitian(), y.hermitian(), slack);
                  const double m = loewner_margin(inverse(y).hermitian(), inverse(x).hermitian());
                  out.push_back({premise, premise, premise && m < -slack, -m, {}});
                }});
  ps.push_back({"spectral.loewner_transitivity", "Loewner order is transitive at doubled tolerance",
                Kind::conditional, 0.0, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto x = tr.pd();
                  const auto y = PositiveDefinite::from_computed(x.matrix() + tr.pd().matrix() * tr.rng.uniform());
                  const auto z = PositiveDefinite::from_computed(y.matrix() + tr.pd().matrix() * tr.rng.uniform());
                  const double tol = tr.cfg.tol.loewner;
                  const bool premise = loewner_compare(x.hermitian(), y.hermitian(), tol) == Ordering::LE &&
                                       loewner_compare(y.hermitian(), z.hermitian(), tol) == Ordering::LE;
                  const auto c = loewner_compare(x.hermitian(), z.hermitian(), 2.0 * tol);
                  const bool ok = c == Ordering::LE || c == Ordering::EQ;
                  out.push_back({premise, premise, premise && !ok, ok ? 0.0 : 1.0, std::string(to_string(c))});
                }});
  ps.push_back({"spectral.congruence_order", "congruence preserves the Loewner order", Kind::conditional, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto x = tr.pd();
                  const auto y = PositiveDefinite::from_computed(x.matrix() + tr.rng.uniform(0.01, 1.0) * tr.pd().matrix());
                  const Matrix s = rng::ginibre(tr.rng, tr.dim, tr.dim);
                  const double slack = tr.cfg.tol.loewner;
                  const bool premise = loewner_le(x.hermitian(), y.hermitian(), slack);
                  const double scale = std::max(1.0, s.squaredNorm());
                  const double m =
                      loewner_margin(congruence(x.hermitian(), s), congruence(y.hermitian(), s)) / scale;
                  out.push_back({premise, premise, premise && m < -slack, -m, {}});
                }});
  ps.push_back({"spectral.polar_unitarity", "polar factor is unitary and reproduces its input", Kind::identity, 1e-10,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const Matrix m = rng::ginibre(tr.rng, tr.dim, tr.dim);
                  const Matrix u = polar_unitary(m);
                  const auto p = sqrtm(PositiveDefinite::from_computed(m * m.adjoint()));
                  const double r = std::max((u * u.adjoint() - Matrix::Identity(tr.dim, tr.dim)).norm(),
                                            rel(p.matrix() * u, m));
                  residual(out, r, 1e-10);
                }});
  return ps;
}

inline std::vector<Property> means_properties() {
  using namespace detail;
  std::vector<Property> ps;
  ps.push_back({"means.riccati", "metric mean solves the Riccati equation", Kind::identity, 1e-9, Domain::matrix_dims,
                0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto x = geo_mean(a, b, 0.5);
                  residual(out, riccati_residual(a, b, x) / std::max(1.0, b.matrix().norm()), 1e-9);
                }});
  ps.push_back({"means.karcher", "metric mean solves the two-point Karcher equation", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  for (double t : tr.cfg.t_grid) residual(out, karcher_residual(a, b, t, geo_mean(a, b, t)), 1e-9, tag("t", t));
                }});
  ps.push_back({"means.spectral_defining", "spectral mean solves its defining equation", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto g = geo_mean(inverse(a), b, 0.5);
                  for (double t : tr.cfg.t_grid) {
                    const double scale = std::max(1.0, powm(g, t).matrix().norm());
                    residual(out, spectral_defining_residual(a, b, t, spectral_mean(a, b, t)) / scale, 1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"means.block_maximality", "metric mean is certified by the block positivity characterization",
                Kind::inequality, 1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double scale = std::max(1.0, a.max_eig() + b.max_eig());
                  margin(out, block_psd_margin(a, b, geo_mean(a, b, 0.5).hermitian()) / scale, 1e-9);
                }});
  ps.push_back({"means.spectral_half_eigenvalues", "spectral midpoint eigenvalues are square roots of those of AB",
                Kind::identity, 1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const RealVector sq = spectral_mean(a, b, 0.5).spectrum().eigenvalues.array().square();
                  const Matrix h = sqrtm(a).matrix();
                  const RealVector ab = eigh(Hermitian::symmetrized(h * b.matrix() * h)).eigenvalues;
                  residual(out, (sq - ab).norm() / std::max(1.0, ab.norm()), 1e-9);
                }});
  ps.push_back({"means.spectral_inverse", "spectral mean commutes with inversion", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double t = tr.cycle(tr.cfg.t_grid);
                  residual(out, rel(spectral_mean(inverse(a), inverse(b), t).matrix(), inverse(spectral_mean(a, b, t)).matrix()),
                           1e-9, tag("t", t));
                }});
  ps.push_back({"means.parameter_symmetry", "both means are symmetric under (A,B,t) to (B,A,1-t)", Kind::identity,
                1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double t = tr.cycle(tr.cfg.t_grid);
                  for (auto k : {MeanKind::metric, MeanKind::spectral}) {
                    residual(out, rel(mean(k, a, b, t).matrix(), mean(k, b, a, 1.0 - t).matrix()), 1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"means.unitary_covariance", "both means are unitarily covariant", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const Matrix u = rng::random_unitary(tr.rng, tr.dim);
                  const double t = tr.cycle(tr.cfg.t_grid);
                  for (auto k : {MeanKind::metric, MeanKind::spectral}) {
                    const Matrix lhs = u.adjoint() * mean(k, a, b, t).matrix() * u;
                    const Matrix rhs = mean(k, unitary_congruence(a, u), unitary_congruence(b, u), t).matrix();
                    residual(out, rel(lhs, rhs), 1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"means.joint_homogeneity", "both means are jointly homogeneous", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double x = std::exp(tr.rng.uniform(-1.0, 1.0));
                  const double y = std::exp(tr.rng.uniform(-1.0, 1.0));
                  const double t = tr.cycle(tr.cfg.t_grid);
                  for (auto k : {MeanKind::metric, MeanKind::spectral}) {
                    const Matrix lhs = mean(k, a.scaled(x), b.scaled(y), t).matrix();
                    const Matrix rhs = std::pow(x, 1.0 - t) * std::pow(y, t) * mean(k, a, b, t).matrix();
                    residual(out, rel(lhs, rhs), 1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"means.spectral_interpolation", "spectral curve reparametrizes under nested means", Kind::identity,
                1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double s = tr.rng.uniform();
                  const double t = tr.rng.uniform();
                  const double u = tr.rng.uniform();
                  const Matrix lhs = spectral_mean(spectral_mean(a, b, s), spectral_mean(a, b, u), t).matrix();
                  const Matrix rhs = spectral_mean(a, b, (1.0 - t) * s + t * u).matrix();
                  residual(out, rel(lhs, rhs), 1e-8, tag("s", s) + ' ' + tag("t", t) + ' ' + tag("u", u));
                }});
  ps.push_back({"means.left_inverse_roundtrip", "both means are bijective in the second argument", Kind::identity,
                1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const double t = tr.cycle(tr.cfg.t_grid);
                  const double cap = std::pow(tr.cfg.cond_cap, t / 2.0);
                  const auto a = tr.pd_log(cap);
                  const auto c = tr.pd_log(cap);
                  for (auto k : {MeanKind::metric, MeanKind::spectral}) {
                    const auto x = mean_left_inverse(k, a, c, t);
                    residual(out, rel(mean(k, a, x, t).matrix(), c.matrix()), 1e-8, tag("t", t));
                  }
                }});
  ps.push_back({"means.commuting_reduction", "both means reduce to A^(1-t) B^t on commuting pairs", Kind::identity,
                1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  RealVector d1;
                  RealVector d2;
                  const auto [a, b] = commuting_pair(tr, d1, d2);
                  const double t = tr.cycle(tr.cfg.t_grid);
                  const Matrix expect = powm(a, 1.0 - t).matrix() * powm(b, t).matrix();
                  for (auto k : {MeanKind::metric, MeanKind::spectral}) {
                    residual(out, rel(mean(k, a, b, t).matrix(), expect), 1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"means.noncommuting_distinct", "the two midpoints differ on non-commuting pairs", Kind::inequality,
                -1e-10, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double d = rel(geo_mean(a, b, 0.5).matrix(), spectral_mean(a, b, 0.5).matrix());
                  out.push_back({true, true, !(d > 1e-10), -d, {}});
                }});
  return ps;
}

inline std::vector<Property> metric_properties() {
  using namespace detail;
  using DK = DistanceKind;
  std::vector<Property> ps;
  ps.push_back({"metrics.thompson_sup_ratio", "Thompson metric as the larger log order ratio", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double lhs = std::max(std::log(sup_ratio(a, b)), std::log(sup_ratio(b, a)));
                  residual(out, std::abs(lhs - distance(DK::thompson, a, b)), 1e-9);
                }});
  ps.push_back({"metrics.semimetric_axioms", "semi-metric is nonnegative, symmetric and separates points",
                Kind::identity, 1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto near = PositiveDefinite::from_computed(
                      a.matrix() + 1e-6 * a.max_eig() * rng::random_hermitian(tr.rng, tr.dim).matrix() / tr.dim);
                  for (auto k : {DK::semimetric_op, DK::semimetric_frob}) {
                    const double dab = distance(k, a, b);
                    const double r = std::max(std::abs(dab - distance(k, b, a)), distance(k, a, a));
                    const bool separates = dab > 0.0 && distance(k, a, near) > 0.0;
                    out.push_back({true, true, !(r <= 1e-9) || !separates, separates ? r : 1.0,
                                   std::string(to_string(k))});
                  }
                }});
  ps.push_back({"metrics.semimetric_invariances", "semi-metric invariance under scaling, inversion and unitaries",
                Kind::identity, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double alpha = std::exp(tr.rng.uniform(-2.0, 2.0));
                  const Matrix u = rng::random_unitary(tr.rng, tr.dim);
                  for (auto k : {DK::semimetric_op, DK::semimetric_frob}) {
                    const double d = distance(k, a, b);
                    const double r = std::max({std::abs(distance(k, a.scaled(alpha), b.scaled(alpha)) - d),
                                               std::abs(distance(k, inverse(a), inverse(b)) - d),
                                               std::abs(distance(k, unitary_congruence(a, u), unitary_congruence(b, u)) - d)});
                    residual(out, r, 1e-8, std::string(to_string(k)));
                  }
                }});
  ps.push_back({"metrics.semimetric_power_commuting", "semi-metric scales by |t| under powers of commuting pairs",
                Kind::identity, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  RealVector d1;
                  RealVector d2;
                  // |t| <= 2, so the powers stay within the condition cap.
                  const auto [a, b] = commuting_pair(tr, d1, d2, std::sqrt(tr.cfg.cond_cap));
                  const double t = tr.rng.uniform(-2.0, 2.0);
                  for (auto k : {DK::semimetric_op, DK::semimetric_frob}) {
                    residual(out, std::abs(distance(k, powm(a, t), powm(b, t)) - std::abs(t) * distance(k, a, b)), 1e-8,
                             tag("t", t));
                  }
                }});
  ps.push_back({"metrics.semimetric_midpoint", "spectral midpoint halves the semi-metric", Kind::identity, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto m = spectral_mean(a, b, 0.5);
                  for (auto k : {DK::semimetric_op, DK::semimetric_frob}) {
                    const auto [x, y] = midpoint_deviation(k, a, b, m);
                    residual(out, std::max(x, y), 1e-8, std::string(to_string(k)));
                  }
                }});
  ps.push_back({"metrics.semimetric_weighted_division", "spectral curve divides the semi-metric proportionally",
                Kind::identity, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  for (double t : tr.cfg.t_grid) {
                    const auto m = spectral_mean(a, b, t);
                    for (auto k : {DK::semimetric_op, DK::semimetric_frob}) {
                      const double d = distance(k, a, b);
                      const double r = std::max(std::abs(distance(k, a, m) - t * d),
                                                std::abs(distance(k, b, m) - (1.0 - t) * d));
                      residual(out, r, 1e-8, std::string(to_string(k)) + ' ' + tag("t", t));
                    }
                  }
                }});
  ps.push_back({"metrics.geodesic_midpoint", "metric mean is the Riemannian and Thompson midpoint", Kind::identity,
                1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto m = geo_mean(a, b, 0.5);
                  for (auto k : {DK::riemannian, DK::thompson}) {
                    const auto [x, y] = midpoint_deviation(k, a, b, m);
                    residual(out, std::max(x, y), 1e-8, std::string(to_string(k)));
                  }
                }});
  ps.push_back({"metrics.d_le_delta", "Frobenius semi-metric is dominated by the Riemannian metric",
                Kind::inequality, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  from_check(out, order::check_d_le_delta(tr.pd(), tr.pd(), tr.cfg.tol.loewner));
                }});
  ps.push_back({"metrics.d_eq_delta_commuting", "Frobenius semi-metric equals the Riemannian metric when commuting",
                Kind::identity, 1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  RealVector d1;
                  RealVector d2;
                  const auto [a, b] = commuting_pair(tr, d1, d2);
                  residual(out, std::abs(distance(DK::semimetric_frob, a, b) - distance(DK::riemannian, a, b)), 1e-9);
                }});
  return ps;
}

inline std::vector<Property> order_properties() {
  using namespace detail;
  std::vector<Property> ps;
  ps.push_back({"order.loewner_heinz", "square root is operator monotone", Kind::conditional, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = PositiveDefinite::from_computed(a.matrix() + tr.rng.uniform(0.01, 1.0) * tr.pd().matrix());
                  const auto h = rng::random_hermitian(tr.rng, tr.dim);
                  const double alpha = std::sqrt(0.99 * tr.rng.uniform(0.1, 1.0) * a.min_eig()) / norm(h, NormKind::operator_norm);
                  from_check(out, order::check_loewner_heinz(alpha * h, a, b, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.furuta", "Furuta-type inequality for B below A", Kind::conditional, 1e-8, Domain::matrix_dims,
                0, [](Trial& tr, std::vector<Observation>& out) {
                  const double p = tr.cycle(tr.cfg.p_grid);
                  const double cap = std::pow(tr.cfg.cond_cap, 1.0 / (2.0 * p));
                  const auto a = tr.pd_log(cap);
                  auto k = tr.pd_log(cap);
                  k = k.scaled(0.95 * tr.rng.uniform(0.1, 1.0) / k.max_eig());
                  const Matrix h = sqrtm(a).matrix();
                  const auto b = PositiveDefinite::from_computed(h * k.matrix() * h);
                  from_check(out, order::check_furuta(a, b, p, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.ando_hiai", "Ando-Hiai inequality", Kind::conditional, 1e-8, Domain::matrix_dims, 0,
                [](Trial& tr, std::vector<Observation>& out) {
                  const double p = tr.cycle(tr.cfg.p_grid);
                  const double cap = std::pow(tr.cfg.cond_cap, 1.0 / p);
                  const auto a0 = tr.pd_log(cap);
                  const auto b0 = tr.pd_log(cap);
                  const double s = 1.0 / geo_mean(a0, b0, 0.5).max_eig();
                  from_check(out, order::check_ando_hiai(a0.scaled(s), b0.scaled(s), p, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.main_spectral_ah", "spectral-mean premise implies the Ando-Hiai conclusion",
                Kind::conditional, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const double t = tr.cycle(tr.cfg.t_grid);
                  const double p = tr.cycle(tr.cfg.p_grid, tr.cfg.t_grid.size());
                  const double cap = std::pow(tr.cfg.cond_cap, 1.0 / p);
                  const auto a = tr.pd_log(cap);
                  const auto b0 = tr.pd_log(cap);
                  // A^{-1} ♮_t (sB) = s^t (A^{-1} ♮_t B); choose s so it sits just below A^{-1}.
                  const auto x = spectral_mean(inverse(a), b0, t);
                  const Matrix h = sqrtm(a).matrix();
                  const double top = eigh(Hermitian::symmetrized(h * x.matrix() * h)).eigenvalues.maxCoeff();
                  const double s = std::pow(0.999 * tr.rng.uniform(0.2, 1.0) / top, 1.0 / t);
                  from_check(out, order::check_main_spectral_ah(a, b0.scaled(s), t, p, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.power_chain", "power chain A^(p+1) # (A #_(p/2) B) below A", Kind::conditional, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const double p = tr.cycle(tr.cfg.p_grid);
                  const double cap = std::pow(tr.cfg.cond_cap, 1.0 / (p + 1.0));
                  const auto a0 = tr.pd_log(cap);
                  const auto b0 = tr.pd_log(cap);
                  const double s = tr.rng.uniform(0.5, 1.0) / geo_mean(a0, b0, 0.5).max_eig();
                  from_check(out, order::check_power_chain(a0.scaled(s), b0.scaled(s), p, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.equivalence_five", "five equivalent characterizations of B below A", Kind::conditional, 0.0,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd_log(tr.cfg.cond_cap);
                  PositiveDefinite b = a;
                  if (tr.index % 2 == 0) {
                    const auto k = rng::random_contraction(tr.rng, tr.dim, 0.95, tr.cfg.cond_cap);
                    const Matrix h = sqrtm(a).matrix();
                    b = PositiveDefinite::from_computed(h * k.matrix() * h);
                  } else {
                    b = tr.pd_log(tr.cfg.cond_cap);
                  }
                  const auto r = order::check_equivalence_five(a, b, tr.cfg.tol.loewner);
                  out.push_back({r.premise_held, true, r.violated(), r.conclusion_held ? 0.0 : 1.0, r.witness});
                }});
  ps.push_back({"order.contraction", "a congruence contraction of X forces S below I", Kind::conditional, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto x = tr.pd();
                  const auto s0 = rng::random_hermitian(tr.rng, tr.dim);
                  const Matrix m = powm(x, -0.5).matrix() * s0.matrix() * sqrtm(x).matrix();
                  const double scale = 0.99 * tr.rng.uniform(0.2, 1.0) / op_norm(m);
                  from_check(out, order::check_contraction(scale * s0, x, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.bounds_spectral", "two-sided bounds on the spectral mean", Kind::conditional, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  static const std::vector<double> ts{0.25, 0.5, 0.75};
                  const double t = tr.cycle(ts);
                  auto a = tr.pd();
                  const auto b = tr.pd();
                  for (int i = 0; i < 200 && min_eigenvalue(order::spectral_bounds(a, b, t).bracket) <= tr.cfg.tol.pd; ++i) {
                    a = a.scaled(0.5);
                  }
                  from_check(out, order::check_bounds_spectral(a, b, t, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.bounds_spectral_lower", "lower bound on the spectral mean", Kind::inequality, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  static const std::vector<double> ts{0.25, 0.5, 0.75};
                  const double t = tr.cycle(ts);
                  from_check(out, order::check_bounds_spectral(tr.pd(), tr.pd(), t, tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.log_sum_condition", "nonpositive log A + log B bounds the metric mean by I",
                Kind::conditional, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double top = eigh(logm(a) + logm(b)).eigenvalues.maxCoeff();
                  const double c = top + tr.rng.uniform(0.0, 1.0);
                  from_check(out, order::check_log_sum_condition(a, b.scaled(std::exp(-c)), tr.cfg.tol.loewner));
                }});
  ps.push_back({"order.log_sum_chain", "A, B below I implies the log-sum condition and A # B below I",
                Kind::conditional, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  auto a = tr.pd();
                  auto b = tr.pd();
                  a = a.scaled(tr.rng.uniform(0.2, 1.0) / a.max_eig());
                  b = b.scaled(tr.rng.uniform(0.2, 1.0) / b.max_eig());
                  const auto id = Hermitian::identity(tr.dim);
                  const double slack = tr.cfg.tol.loewner;
                  const bool premise = loewner_le(a.hermitian(), id, slack) && loewner_le(b.hermitian(), id, slack);
                  const double m = std::min(min_eigenvalue(Hermitian::symmetrized(-(logm(a) + logm(b)).matrix())),
                                            loewner_margin(geo_mean(a, b, 0.5).hermitian(), id));
                  out.push_back({premise, premise, premise && m < -slack, -m, {}});
                }});
  ps.push_back({"order.logmaj_mean", "metric mean eigenvalues are log-majorized by those of A^(1-t) B^t",
                Kind::inequality, 1e-8, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  for (double t : tr.cfg.t_grid) from_check(out, order::check_logmaj_mean(a, b, t, tr.cfg.tol.equality));
                }});
  return ps;
}

inline std::vector<Property> gyro_properties() {
  using namespace detail;
  std::vector<Property> ps;
  ps.push_back({"gyro.cone_axioms", "gyrovector space axioms on the positive definite cone", Kind::identity, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  axioms(out, cone::Model{}, cone_sample(tr), 1e-8);
                }});
  ps.push_back({"gyro.cone_gyration_unitarity", "cone gyrations are unitary conjugations", Kind::identity, 1e-10,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const Matrix u = cone::gyration_unitary(tr.pd(), tr.pd());
                  residual(out, (u * u.adjoint() - Matrix::Identity(tr.dim, tr.dim)).norm(), 1e-10);
                }});
  ps.push_back({"gyro.cone_inner_product", "cone gyrations preserve the trace inner product", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto x = tr.pd();
                  const auto y = tr.pd();
                  const Complex before = cone::inner_product(x.matrix(), y.matrix());
                  const Complex after = cone::inner_product(cone::gyration(a, b, x).matrix(), cone::gyration(a, b, y).matrix());
                  residual(out, std::abs(after - before) / std::max(1.0, std::abs(before)), 1e-9);
                }});
  ps.push_back({"gyro.cone_cooperation", "cone cooperation of an inverse is a squared metric mean", Kind::identity,
                1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const auto g = geo_mean(inverse(a), b, 0.5).matrix();
                  residual(out,
                           std::max(rel(cone::cooperation(cone::neg(a), b).matrix(), g * g),
                                    rel(cone::cooperation(a, PositiveDefinite::identity(tr.dim)).matrix(), a.matrix())),
                           1e-9);
                }});
  ps.push_back({"gyro.cone_gyrolines", "cone gyrolines and cogyrolines are the metric and spectral means",
                Kind::identity, 1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  for (double t : tr.cfg.t_grid) {
                    residual(out, rel(cone::gyroline(t, a, b).matrix(), geo_mean(a, b, t).matrix()), 1e-9,
                             "gyroline " + tag("t", t));
                    residual(out, rel(cone::cogyroline(t, a, b).matrix(), spectral_mean(a, b, t).matrix()), 1e-9,
                             "cogyroline " + tag("t", t));
                  }
                  residual(out, rel(cone::scalar(0.5, cone::cooperation(a, b)).matrix(), geo_mean(a, b, 0.5).matrix()),
                           1e-9, "gyromidpoint");
                }});
  ps.push_back({"gyro.density_axioms", "gyrovector space axioms on invertible density matrices", Kind::identity, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto s = cone_sample(tr);
                  using density::DensityMatrix;
                  axioms(out, density::Model{},
                         gyro::AxiomSample<DensityMatrix>{DensityMatrix::normalized(s.a), DensityMatrix::normalized(s.b),
                                                          DensityMatrix::normalized(s.c), s.s, s.t},
                         1e-8);
                }});
  ps.push_back({"gyro.density_gyrolines", "density gyrolines and cogyrolines are normalized means", Kind::identity,
                1e-9, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto rho = density::DensityMatrix::normalized(tr.pd());
                  const auto sigma = density::DensityMatrix::normalized(tr.pd());
                  const density::Model m;
                  for (double t : tr.cfg.t_grid) {
                    residual(out, rel(gyro::gyroline(m, t, rho, sigma).matrix(), density::gyroline(t, rho, sigma).matrix()),
                             1e-9, "gyroline " + tag("t", t));
                    residual(out,
                             rel(gyro::cogyroline(m, t, rho, sigma).matrix(), density::cogyroline(t, rho, sigma).matrix()),
                             1e-9, "cogyroline " + tag("t", t));
                  }
                }});
  ps.push_back({"gyro.density_projection", "trace normalization commutes with the metric mean", Kind::identity, 1e-9,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = tr.pd();
                  const auto b = tr.pd();
                  const double t = tr.cycle(tr.cfg.t_grid);
                  const auto lhs = density::gyroline(t, density::DensityMatrix::normalized(a), density::DensityMatrix::normalized(b));
                  const auto rhs = density::DensityMatrix::normalized(geo_mean(a, b, t));
                  residual(out, rel(lhs.matrix(), rhs.matrix()), 1e-9, tag("t", t));
                }});
  ps.push_back({"gyro.einstein_axioms", "gyrovector space axioms for Einstein addition", Kind::identity, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  axioms(out, ball::EinsteinModel{}, ball_sample(tr), 1e-8);
                }});
  ps.push_back({"gyro.mobius_axioms", "gyrovector space axioms for Mobius addition", Kind::identity, 1e-8,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  axioms(out, ball::MobiusModel{}, ball_sample(tr), 1e-8);
                }});
  ps.push_back({"gyro.ball_gyration_formulas", "explicit ball gyrations match the defining composition",
                Kind::identity, 1e-10, Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto s = ball_sample(tr);
                  const ball::EinsteinModel e;
                  const ball::MobiusModel m;
                  residual(out, (e.gyr(s.a, s.b, s.c).coords() - generic_gyration(e, s.a, s.b, s.c).coords()).norm(), 1e-10,
                           "einstein");
                  residual(out, (m.gyr(s.a, s.b, s.c).coords() - generic_gyration(m, s.a, s.b, s.c).coords()).norm(), 1e-10,
                           "mobius");
                }});
  return ps;
}

inline std::vector<Property> ball_properties() {
  using namespace detail;
  std::vector<Property> ps;
  ps.push_back({"ball.gamma_identity", "Lorentz factor of an Einstein sum", Kind::identity, 1e-10, Domain::matrix_dims,
                0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, tr.dim);
                  const auto v = rng::random_ball_vector(tr.rng, tr.dim);
                  const double expect = ball::gamma(u) * ball::gamma(v) * (1.0 + u.coords().dot(v.coords()));
                  residual(out, std::abs(ball::gamma(ball::einstein_add(u, v)) - expect) / expect, 1e-10);
                }});
  ps.push_back({"ball.rapidity_symmetry", "rapidity distance is symmetric", Kind::identity, 1e-12, Domain::matrix_dims,
                0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, tr.dim);
                  const auto v = rng::random_ball_vector(tr.rng, tr.dim);
                  residual(out, std::abs(ball::rapidity_distance(u, v) - ball::rapidity_distance(v, u)), 1e-12);
                }});
  ps.push_back({"ball.gyromidpoint", "Einstein gyromidpoint is half the cooperation", Kind::identity, 1e-10,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, tr.dim);
                  const auto v = rng::random_ball_vector(tr.rng, tr.dim);
                  const auto half = ball::scalar(0.5, ball::einstein_cooperation(u, v));
                  residual(out, (ball::gyromidpoint(u, v).coords() - half.coords()).norm(), 1e-10);
                }});
  ps.push_back({"ball.midpoint_triangle", "rapidity from the origin to the gyromidpoint", Kind::inequality, 1e-10,
                Domain::matrix_dims, 0, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, tr.dim);
                  const auto v = rng::random_ball_vector(tr.rng, tr.dim);
                  const auto o = ball::BallVector::zero(tr.dim);
                  margin(out, closed_form::midpoint_vector_check(u, v), 1e-10, "ratio form");
                  const double direct = ball::rapidity_distance(o, u) + ball::rapidity_distance(o, v) -
                                        2.0 * ball::rapidity_distance(o, ball::gyromidpoint(u, v));
                  margin(out, direct, 1e-10, "rapidity form");
                }});
  ps.push_back({"bloch.isomorphism", "Bloch map carries Einstein operations to density operations", Kind::identity,
                1e-10, Domain::fixtures, 3, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, 3);
                  const auto v = rng::random_ball_vector(tr.rng, 3);
                  const double t = tr.rng.uniform(-2.0, 2.0);
                  const auto ru = ball::bloch_to_density(u);
                  const auto rv = ball::bloch_to_density(v);
                  residual(out, (ball::bloch_to_density(ball::einstein_add(u, v)).matrix() - density::add(ru, rv).matrix()).norm(),
                           1e-10, "add");
                  residual(out, (ball::bloch_to_density(ball::scalar(t, v)).matrix() - density::scalar(t, rv).matrix()).norm(),
                           1e-10, "scalar " + tag("t", t));
                }});
  ps.push_back({"bloch.spectrum", "qubit state eigenvalues and determinant from the Bloch norm", Kind::identity, 1e-12,
                Domain::fixtures, 3, [](Trial& tr, std::vector<Observation>& out) {
                  const auto v = rng::random_ball_vector(tr.rng, 3);
                  const auto rho = ball::bloch_to_density(v);
                  const double r = v.norm();
                  const auto& ev = rho.pd().spectrum().eigenvalues;
                  const double det = (rho.matrix().determinant()).real();
                  residual(out,
                           std::max({std::abs(ev(0) - (1.0 - r) / 2.0), std::abs(ev(1) - (1.0 + r) / 2.0),
                                     std::abs(det - (1.0 - r * r) / 4.0), std::abs(det - 1.0 / (4.0 * std::pow(ball::gamma(v), 2)))}),
                           1e-12);
                }});
  ps.push_back({"bloch.inverse_identity", "density inverse of a qubit state is the antipodal state",
                Kind::identity, 1e-10, Domain::fixtures, 3, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, 3);
                  const auto ru = ball::bloch_to_density(u);
                  const Matrix anti = ball::bloch_to_density(-u).matrix();
                  const double g = ball::gamma(u);
                  residual(out,
                           std::max((density::neg(ru).matrix() - anti).norm(),
                                    (inverse(ru.pd()).matrix() / (4.0 * g * g) - anti).norm()),
                           1e-10);
                }});
  ps.push_back({"bloch.roundtrip", "Bloch vector extraction inverts the Bloch map", Kind::identity, 1e-12,
                Domain::fixtures, 3, [](Trial& tr, std::vector<Observation>& out) {
                  const auto v = rng::random_ball_vector(tr.rng, 3);
                  residual(out, (ball::density_to_bloch(ball::bloch_to_density(v)).coords() - v.coords()).norm(), 1e-12);
                }});
  return ps;
}

inline std::vector<Property> closed_form_properties() {
  using namespace detail;
  namespace cf = closed_form;
  std::vector<Property> ps;
  ps.push_back({"closed.l_map_symmetry", "L_t is invariant under x to 1/x", Kind::identity, 1e-12, Domain::fixtures, 2,
                [](Trial& tr, std::vector<Observation>& out) {
                  const double t = tr.rng.uniform(-2.0, 2.0);
                  const double x = std::exp(tr.rng.uniform(-5.0, 5.0));
                  const double a = cf::l_map(t, x);
                  residual(out, std::abs(a - cf::l_map(t, 1.0 / x)) / std::max(1.0, std::abs(a)), 1e-12,
                           tag("t", t) + ' ' + tag("x", x));
                }});
  ps.push_back({"closed.gm2_det1", "2x2 metric mean as a combination of A and B", Kind::identity, 1e-9,
                Domain::fixtures, 2, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap, true);
                  const auto b = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap, true);
                  for (double t : tr.cfg.t_grid) {
                    const Matrix g = geo_mean(a, b, t).matrix();
                    for (auto br : {cf::Branch::larger, cf::Branch::smaller}) {
                      residual(out, rel(cf::gm2_det1(a, b, t, br).matrix(), g), 1e-9, tag("t", t));
                    }
                  }
                  residual(out, rel(cf::gm2_det1_half(a, b).matrix(), geo_mean(a, b, 0.5).matrix()), 1e-9, "half");
                  const double lambda = cf::unit_det_ratio_eigenvalue(a, b, cf::Branch::larger);
                  const double expect = 1.0 / std::sqrt((a.matrix() + b.matrix()).determinant().real());
                  residual(out, std::abs(cf::l_map(0.5, lambda) - expect) / expect, 1e-9, "L_1/2");
                }});
  ps.push_back({"closed.sgm2_det1", "2x2 spectral mean for unit determinants", Kind::identity, 1e-9, Domain::fixtures,
                2, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap, true);
                  const auto b = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap, true);
                  for (double t : tr.cfg.t_grid) {
                    const Matrix s = spectral_mean(a, b, t).matrix();
                    residual(out, std::max(rel(cf::sgm2_det1(a, b, t).matrix(), s), rel(cf::sgm2(a, b, t).matrix(), s)),
                             1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"closed.sgm2_general", "2x2 spectral mean for arbitrary determinants", Kind::identity, 1e-9,
                Domain::fixtures, 2, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap).scaled(std::exp(tr.rng.uniform(-2.0, 2.0)));
                  const auto b = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap).scaled(std::exp(tr.rng.uniform(-2.0, 2.0)));
                  for (double t : tr.cfg.t_grid) {
                    const Matrix s = spectral_mean(a, b, t).matrix();
                    residual(out, std::max(rel(cf::sgm2_general(a, b, t).matrix(), s), rel(cf::sgm2(a, b, t).matrix(), s)),
                             1e-9, tag("t", t));
                  }
                }});
  ps.push_back({"closed.det_shift", "determinant of a shifted 2x2 matrix", Kind::identity, 1e-12, Domain::fixtures, 2,
                [](Trial& tr, std::vector<Observation>& out) {
                  const double c = tr.rng.uniform(-3.0, 3.0);
                  residual(out, cf::det_shift_identity(c, rng::ginibre(tr.rng, 2, 2)), 1e-12, tag("c", c));
                }});
  ps.push_back({"closed.qubit_geo_mean", "qubit metric mean from Bloch vectors", Kind::identity, 1e-9,
                Domain::fixtures, 3, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, 3);
                  const auto v = rng::random_ball_vector(tr.rng, 3);
                  const auto ru = ball::bloch_to_density(u).pd();
                  const auto rv = ball::bloch_to_density(v).pd();
                  for (double t : tr.cfg.t_grid) {
                    const Matrix g = geo_mean(ru, rv, t).matrix();
                    for (auto br : {cf::Branch::larger, cf::Branch::smaller}) {
                      residual(out, rel(cf::qubit_geo_mean(u, v, t, br).matrix(), g), 1e-9, tag("t", t));
                    }
                  }
                  // The two branches are the reciprocal eigenvalues of A B^{-1}, A = 2γ_u ρ_u, B = 2γ_v ρ_v.
                  const double big = cf::qubit_mu(u, v, cf::Branch::larger);
                  const double small = cf::qubit_mu(u, v, cf::Branch::smaller);
                  const auto ev = relative_spectrum(rv.scaled(2.0 * ball::gamma(v)), ru.scaled(2.0 * ball::gamma(u)));
                  residual(out, std::max({std::abs(big * small - 1.0), std::abs(small - ev(0)) / ev(0),
                                          std::abs(big - ev(1)) / ev(1)}),
                           1e-9, "mu branches");
                }});
  ps.push_back({"closed.qubit_spectral_mean", "qubit spectral mean from Bloch vectors", Kind::identity, 1e-9,
                Domain::fixtures, 3, [](Trial& tr, std::vector<Observation>& out) {
                  const auto u = rng::random_ball_vector(tr.rng, 3);
                  const auto v = rng::random_ball_vector(tr.rng, 3);
                  const auto ru = ball::bloch_to_density(u).pd();
                  const auto rv = ball::bloch_to_density(v).pd();
                  for (double t : tr.cfg.t_grid) {
                    residual(out, rel(cf::qubit_spectral_mean(u, v, t).matrix(), spectral_mean(ru, rv, t).matrix()), 1e-9,
                             tag("t", t));
                  }
                }});
  ps.push_back({"closed.norm_product", "norm of a 2x2 sum against determinant and norms", Kind::inequality, 1e-10,
                Domain::fixtures, 2, [](Trial& tr, std::vector<Observation>& out) {
                  const auto a = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap, true);
                  const auto b = rng::gen_random_pd(tr.rng, 2, tr.cfg.cond_cap, true);
                  const double scale = std::max(1.0, a.max_eig() + b.max_eig());
                  margin(out, cf::norm_product_check(a, b) / scale, 1e-10, "unit determinant");
                  const auto c = a.scaled(std::exp(tr.rng.uniform(-2.0, 2.0)));
                  const auto d = b.scaled(std::exp(tr.rng.uniform(-2.0, 2.0)));
                  const double scale2 = std::max(1.0, c.max_eig() + d.max_eig());
                  margin(out, cf::norm_product_check_scaled(c, d) / scale2, 1e-10, "rescaled");
                }});
  return ps;
}

inline std::vector<Property> all_properties() {
  std::vector<Property> all;
  for (auto&& group : {spectral_properties(), means_properties(), metric_properties(), order_properties(),
                       gyro_properties(), ball_properties(), closed_form_properties()}) {
    for (auto& p : group) all.push_back(p);
  }
  return all;
}

/// Every statement the campaign must cover; a missing anchor fails the run.
inline const std::vector<std::string>& required_anchors() {
  static const std::vector<std::string> anchors = {
      "Hermitian eigendecomposition reconstructs its input",
      "functional calculus: powers compose, sqrt, exp-log",
      "inversion reverses the Loewner order",
      "Loewner order is transitive at doubled tolerance",
      "congruence preserves the Loewner order",
      "polar factor is unitary and reproduces its input",
      "metric mean solves the Riccati equation",
      "metric mean solves the two-point Karcher equation",
      "spectral mean solves its defining equation",
      "metric mean is certified by the block positivity characterization",
      "spectral midpoint eigenvalues are square roots of those of AB",
      "spectral mean commutes with inversion",
      "both means are symmetric under (A,B,t) to (B,A,1-t)",
      "both means are unitarily covariant",
      "both means are jointly homogeneous",
      "spectral curve reparametrizes under nested means",
      "both means are bijective in the second argument",
      "both means reduce to A^(1-t) B^t on commuting pairs",
      "the two midpoints differ on non-commuting pairs",
      "Thompson metric as the larger log order ratio",
      "semi-metric is nonnegative, symmetric and separates points",
      "semi-metric invariance under scaling, inversion and unitaries",
      "semi-metric scales by |t| under powers of commuting pairs",
      "spectral midpoint halves the semi-metric",
      "spectral curve divides the semi-metric proportionally",
      "metric mean is the Riemannian and Thompson midpoint",
      "Frobenius semi-metric is dominated by the Riemannian metric",
      "Frobenius semi-metric equals the Riemannian metric when commuting",
      "square root is operator monotone",
      "Furuta-type inequality for B below A",
      "Ando-Hiai inequality",
      "spectral-mean premise implies the Ando-Hiai conclusion",
      "power chain A^(p+1) # (A #_(p/2) B) below A",
      "five equivalent characterizations of B below A",
      "a congruence contraction of X forces S below I",
      "two-sided bounds on the spectral mean",
      "lower bound on the spectral mean",
      "nonpositive log A + log B bounds the metric mean by I",
      "A, B below I implies the log-sum condition and A # B below I",
      "metric mean eigenvalues are log-majorized by those of A^(1-t) B^t",
      "gyrovector space axioms on the positive definite cone",
      "cone gyrations are unitary conjugations",
      "cone gyrations preserve the trace inner product",
      "cone cooperation of an inverse is a squared metric mean",
      "cone gyrolines and cogyrolines are the metric and spectral means",
      "gyrovector space axioms on invertible density matrices",
      "density gyrolines and cogyrolines are normalized means",
      "trace normalization commutes with the metric mean",
      "gyrovector space axioms for Einstein addition",
      "gyrovector space axioms for Mobius addition",
      "explicit ball gyrations match the defining composition",
      "Lorentz factor of an Einstein sum",
      "rapidity distance is symmetric",
      "Einstein gyromidpoint is half the cooperation",
      "rapidity from the origin to the gyromidpoint",
      "Bloch map carries Einstein operations to density operations",
      "qubit state eigenvalues and determinant from the Bloch norm",
      "density inverse of a qubit state is the antipodal state",
      "Bloch vector extraction inverts the Bloch map",
      "L_t is invariant under x to 1/x",
      "2x2 metric mean as a combination of A and B",
      "2x2 spectral mean for unit determinants",
      "2x2 spectral mean for arbitrary determinants",
      "determinant of a shifted 2x2 matrix",
      "qubit metric mean from Bloch vectors",
      "qubit spectral mean from Bloch vectors",
      "norm of a 2x2 sum against determinant and norms",
  };
  return anchors;
}

// ---------------------------------------------------------------------------
// Findings: measured quantities reported without a pass/fail verdict.

namespace detail {

inline Finding geodesic_experiment(const CampaignConfig& cfg) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double sum = 0.0;
  std::size_t n = 0;
  std::size_t above = 0;
  for (Index dim : cfg.dims) {
    for (int i = 0; i < cfg.trials; ++i) {
      rng::Stream s(cfg.seed, rng::hash_name("finding.geodesic"), static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(i));
      const auto a = rng::gen_random_pd(s, dim, cfg.cond_cap);
      const auto b = rng::gen_random_pd(s, dim, cfg.cond_cap);
      const double x = s.uniform();
      const double y = s.uniform();
      const double gap = distance(DistanceKind::semimetric_op, spectral_mean(a, b, x), spectral_mean(a, b, y)) -
                         std::abs(x - y) * distance(DistanceKind::semimetric_op, a, b);
      lo = std::min(lo, gap);
      hi = std::max(hi, gap);
      sum += gap;
      above += gap > 1e-8 ? 1 : 0;
      ++n;
    }
  }
  return {"semimetric.geodesic_gap",
          "d(A#s, A#t) - |s-t| d(A,B) along the spectral curve, operator-norm semi-metric",
          {{"samples", n}, {"min", lo}, {"max", hi}, {"mean", sum / static_cast<double>(n)}, {"count_above_1e-8", above}}};
}

inline Finding sufficient_condition_cooccurrence(const CampaignConfig& cfg) {
  std::size_t n = 0;
  std::size_t c1 = 0;
  std::size_t c2 = 0;
  std::size_t c3 = 0;
  std::size_t concl = 0;
  std::size_t c3_not_c1 = 0;
  std::size_t c3_not_c2 = 0;
  std::size_t c1_not_c3 = 0;
  std::size_t c2_not_c3 = 0;
  for (Index dim : cfg.dims) {
    for (int i = 0; i < cfg.trials; ++i) {
      rng::Stream s(cfg.seed, rng::hash_name("finding.sufficient"), static_cast<std::uint64_t>(dim), static_cast<std::uint64_t>(i));
      const auto a = rng::gen_pd_log_spectrum(s, dim, 1e2).scaled(std::exp(s.uniform(-2.5, 0.5)));
      const auto b = rng::gen_pd_log_spectrum(s, dim, 1e2).scaled(std::exp(s.uniform(-2.5, 0.5)));
      const auto r = order::sufficient_conditions(a, b, 0.5, cfg.tol.loewner);
      ++n;
      c1 += r.both_below_identity;
      c2 += r.log_sum_nonpositive;
      c3 += r.spectral_condition;
      concl += r.mean_below_identity;
      c3_not_c1 += r.spectral_condition && !r.both_below_identity;
      c3_not_c2 += r.spectral_condition && !r.log_sum_nonpositive;
      c1_not_c3 += r.both_below_identity && !r.spectral_condition;
      c2_not_c3 += r.log_sum_nonpositive && !r.spectral_condition;
    }
  }
  return {"order.sufficient_condition_cooccurrence",
          "frequencies of the three sufficient conditions for A # B <= I (spectral condition at t = 1/2)",
          {{"samples", n},
           {"both_below_identity", c1},
           {"log_sum_nonpositive", c2},
           {"spectral_condition", c3},
           {"mean_below_identity", concl},
           {"spectral_without_both_below", c3_not_c1},
           {"spectral_without_log_sum", c3_not_c2},
           {"both_below_without_spectral", c1_not_c3},
           {"log_sum_without_spectral", c2_not_c3}}};
}

/// Constants of the qubit identities as they are commonly misstated, measured
/// against the general path so the discrepancy is on record.
inline std::vector<Finding> qubit_constant_checks(const CampaignConfig& cfg) {
  namespace cf = closed_form;
  double inv_variant = 0.0;
  double inv_correct = 0.0;
  double mu_product = 0.0;
  double mu_geo = 0.0;
  double sgm_variant = 0.0;
  double sgm_correct = 0.0;
  std::size_t asym_violations = 0;
  std::size_t sym_violations = 0;
  const auto n = static_cast<std::size_t>(cfg.closed_form_fixtures);
  for (std::size_t i = 0; i < n; ++i) {
    rng::Stream s(cfg.seed, rng::hash_name("finding.qubit"), 3, i);
    const auto u = rng::random_ball_vector(s, 3);
    const auto v = rng::random_ball_vector(s, 3);
    const double t = s.uniform(0.05, 0.95);
    const double gu = ball::gamma(u);
    const double gv = ball::gamma(v);
    const auto ru = ball::bloch_to_density(u).pd();
    const auto rv = ball::bloch_to_density(v).pd();
    const Matrix anti = ball::bloch_to_density(-u).matrix();
    inv_variant = std::max(inv_variant, (inverse(ru).matrix() / (4.0 * gu) - anti).norm());
    inv_correct = std::max(inv_correct, (inverse(ru).matrix() / (4.0 * gu * gu) - anti).norm());

    const double r = ball::einstein_add(u, -v).norm();
    const double base = gu * (1.0 - u.coords().dot(v.coords()));
    const double mu_hi = base * (1.0 + r);
    const double mu_lo = base * (1.0 - r);
    mu_product = std::max(mu_product, std::abs(mu_hi * mu_lo - 1.0));
    const Matrix variant = cf::l_map(1.0 - t, mu_hi) * std::pow(gu / gv, t) * ru.matrix() +
                           cf::l_map(t, mu_hi) * std::pow(gu / gv, t - 1.0) * rv.matrix();
    mu_geo = std::max(mu_geo, relative_distance(variant, geo_mean(ru, rv, t).matrix()));

    const auto m = powm(PositiveDefinite::from_computed(anti + gv * rv.matrix()), t);
    const Matrix sp = std::pow(2.0, 1.0 + t) * gu * (m.matrix() * ru.matrix() * m.matrix()) /
                      std::pow(1.0 + ball::gamma(ball::einstein_add(u, v)), t);
    const Matrix exact = spectral_mean(ru, rv, t).matrix();
    sgm_variant = std::max(sgm_variant, relative_distance(sp, exact));
    sgm_correct = std::max(sgm_correct, relative_distance(cf::qubit_spectral_mean(u, v, t).matrix(), exact));

    const double mn = ball::gyromidpoint(u, v).norm();
    const double lhs = (1.0 + mn) / (1.0 - mn);
    const double nu = u.norm();
    const double nv = v.norm();
    asym_violations += lhs > std::sqrt((1.0 + nu) * (1.0 + nv) / ((1.0 - nu) * (1.0 + nv))) * (1.0 + 1e-12);
    sym_violations += cf::midpoint_vector_check(u, v) < -1e-10;
  }
  double sgm2_variant = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    rng::Stream s(cfg.seed, rng::hash_name("finding.sgm2"), 2, i);
    const auto a = rng::gen_random_pd(s, 2, cfg.cond_cap).scaled(std::exp(s.uniform(-2.0, 2.0)));
    const auto b = rng::gen_random_pd(s, 2, cfg.cond_cap).scaled(std::exp(s.uniform(-2.0, 2.0)));
    const double t = s.uniform(0.05, 0.95);
    const double k = std::sqrt(a.determinant() * b.determinant());
    const double tr = (a.matrix() * b.matrix()).trace().real();
    const auto m = powm(PositiveDefinite::from_computed(k * inverse(a).matrix() + b.matrix()), t);
    const Matrix variant = std::pow(k / (k * k + 1.0 + k * tr), t) * (m.matrix() * a.matrix() * m.matrix());
    sgm2_variant = std::max(sgm2_variant, relative_distance(variant, spectral_mean(a, b, t).matrix()));
  }
  return {
      {"closed.sgm2_general_variant",
       "[k / (k^2 + 1 + k tr(AB))]^t (k A^-1 + B)^t A (k A^-1 + B)^t against the spectral mean, k = sqrt(det A det B)",
       {{"samples", n}, {"variant_max_relative_error", sgm2_variant}}},
      {"bloch.inverse_constant",
       "max Frobenius error of rho_(-u) against rho_u^(-1)/(4 gamma) and rho_u^(-1)/(4 gamma^2)",
       {{"samples", n}, {"over_4_gamma", inv_variant}, {"over_4_gamma_squared", inv_correct}}},
      {"qubit.mu_without_gamma_v",
       "mu = gamma_u (1 - u.v)(1 +- r): deviation of the root product from 1 and of the resulting mean",
       {{"samples", n}, {"max_root_product_error", mu_product}, {"max_relative_mean_error", mu_geo}}},
      {"qubit.spectral_mean_variant",
       "2^(1+t) gamma_u (rho_(-u) + gamma_v rho_v)^t rho_u (...)^t / (1 + gamma_(u+v))^t against the spectral mean",
       {{"samples", n}, {"variant_max_relative_error", sgm_variant}, {"library_max_relative_error", sgm_correct}}},
      {"ball.midpoint_asymmetric_bound",
       "violations of (1+|m|)/(1-|m|) <= sqrt((1+|u|)(1+|v|)/((1-|u|)(1+|v|))) versus the symmetric bound",
       {{"samples", n}, {"asymmetric_violations", asym_violations}, {"symmetric_violations", sym_violations}}},
  };
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Runner

namespace detail {

struct WorkItem {
  std::size_t property;
  Index dim;
  std::size_t trial;
};

struct TrialOutcome {
  std::vector<Observation> observations;
  bool error = false;
  std::string error_message;
};

inline PropertyRecord aggregate(const Property& p, const std::vector<WorkItem>& items,
                                const std::vector<TrialOutcome>& outcomes, std::size_t begin, std::size_t end) {
  PropertyRecord rec;
  rec.id = p.id;
  rec.anchor = p.anchor;
  rec.kind = p.kind;
  rec.threshold = p.threshold;
  std::string worst_note;
  std::string first_error;
  for (std::size_t i = begin; i < end; ++i) {
    const auto& oc = outcomes[i];
    const auto where = "dim=" + std::to_string(items[i].dim) + " trial=" + std::to_string(items[i].trial);
    if (oc.error) {
      ++rec.errors;
      ++rec.samples;
      if (first_error.empty()) first_error = where + ": " + oc.error_message;
      continue;
    }
    for (const auto& o : oc.observations) {
      ++rec.samples;
      rec.premise_held += o.premise ? 1 : 0;
      if (!o.required) continue;
      rec.violations += o.violated ? 1 : 0;
      if (o.value > rec.max_violation || (std::isnan(o.value) && !std::isnan(rec.max_violation))) {
        rec.max_violation = o.value;
        worst_note = where + (o.note.empty() ? "" : ": " + o.note);
      }
    }
  }
  rec.witness = first_error.empty() ? worst_note : first_error;
  rec.pass = rec.samples > 0 && rec.errors == 0 && rec.violations == 0 &&
             (p.kind != Kind::conditional || rec.premise_held >= kMinPremiseHeld);
  return rec;
}

}  // namespace detail

inline Report run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const auto props = all_properties();
  std::vector<const Property*> selected;
  for (const auto& p : props) {
    if (cfg.only.empty() || std::find(cfg.only.begin(), cfg.only.end(), p.id) != cfg.only.end()) selected.push_back(&p);
  }
  for (const auto& id : cfg.only) {
    const bool known = std::any_of(props.begin(), props.end(), [&](const Property& p) { return p.id == id; });
    if (!known) throw Error(Errc::invalid_argument, "unknown property id '" + id + "'");
  }

  std::vector<detail::WorkItem> items;
  std::vector<std::size_t> offsets{0};
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const auto& p = *selected[k];
    if (p.domain == Domain::matrix_dims) {
      for (Index d : cfg.dims) {
        for (int i = 0; i < cfg.trials; ++i) items.push_back({k, d, static_cast<std::size_t>(i)});
      }
    } else {
      for (int i = 0; i < cfg.closed_form_fixtures; ++i) items.push_back({k, p.fixture_dim, static_cast<std::size_t>(i)});
    }
    offsets.push_back(items.size());
  }

  std::vector<detail::TrialOutcome> outcomes(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& it = items[i];
      const auto& p = *selected[it.property];
      rng::Stream stream(cfg.seed, rng::hash_name(p.id), static_cast<std::uint64_t>(it.dim), it.trial);
      Trial tr{stream, it.dim, it.trial, cfg};
      try {
        p.run(tr, outcomes[i].observations);
      } catch (const std::exception& e) {
        outcomes[i].error = true;
        outcomes[i].error_message = e.what();
      }
    }
  };
  unsigned n_threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  Report rep;
  for (std::size_t k = 0; k < selected.size(); ++k) {
    rep.properties.push_back(detail::aggregate(*selected[k], items, outcomes, offsets[k], offsets[k + 1]));
  }
  if (cfg.only.empty()) {
    rep.coverage_checked = true;
    for (const auto& anchor : required_anchors()) {
      const auto hits = std::count_if(rep.properties.begin(), rep.properties.end(),
                                      [&](const PropertyRecord& r) { return r.anchor == anchor; });
      if (hits != 1) rep.missing_anchors.push_back(anchor);
    }
  }
  if (cfg.findings) {
    rep.findings.push_back(detail::geodesic_experiment(cfg));
    rep.findings.push_back(detail::sufficient_condition_cooccurrence(cfg));
    for (auto& f : detail::qubit_constant_checks(cfg)) rep.findings.push_back(std::move(f));
  }
  rep.environment = {{"seed", cfg.seed}, {"config", cfg.to_json()}, {"version", kVersion}};
  rep.timestamp = detail::utc_timestamp();
  rep.pass = rep.missing_anchors.empty() &&
             std::all_of(rep.properties.begin(), rep.properties.end(), [](const PropertyRecord& r) { return r.pass; });
  return rep;
}

// ---------------------------------------------------------------------------
// Fixed counterexamples

/// The 2x2 triple on which the semi-metric violates the triangle inequality.
struct CounterexampleTriple {
  PositiveDefinite a;
  PositiveDefinite b;
  PositiveDefinite c;
};

inline CounterexampleTriple counterexample_triple() {
  Matrix a(2, 2);
  Matrix b(2, 2);
  Matrix c(2, 2);
  a << 5.0, 0.0, 0.0, 0.2;
  b << 2.0, -3.0, -3.0, 5.0;
  c << 1.0, -2.0, -2.0, 5.0;
  return {PositiveDefinite(a), PositiveDefinite(b), PositiveDefinite(c)};
}

/// Published reference values for d(A,B), d(B,C), d(A,C) on the triple.
inline constexpr std::array<double, 3> kReferenceDistances{1.117270, 0.173732, 1.305274};
inline constexpr double kReferenceTolerance = 1e-5;

inline Report reproduce_counterexamples() {
  const auto [a, b, c] = counterexample_triple();
  Report rep;
  json variants = json::object();
  bool any_match = false;
  bool any_triangle_failure = false;
  std::string matched;
  double best_dev = std::numeric_limits<double>::infinity();
  for (auto k : {DistanceKind::semimetric_op, DistanceKind::semimetric_frob}) {
    const std::array<double, 3> d{distance(k, a, b), distance(k, b, c), distance(k, a, c)};
    double dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i) dev = std::max(dev, std::abs(d[i] - kReferenceDistances[i]));
    best_dev = std::min(best_dev, dev);
    const bool match = dev <= kReferenceTolerance;
    const bool triangle_fails = d[2] > d[0] + d[1];
    any_match = any_match || match;
    any_triangle_failure = any_triangle_failure || triangle_fails;
    if (match && matched.empty()) matched = std::string(to_string(k));
    variants[std::string(to_string(k))] = {{"d_ab", d[0]},           {"d_bc", d[1]},
                                          {"d_ac", d[2]},           {"max_deviation", dev},
                                          {"matches_reference", match}, {"triangle_fails", triangle_fails}};
  }
  // Same quantities without the leading factor 2.
  json halves = json::object();
  {
    const auto k = DistanceKind::semimetric_op;
    const std::array<double, 3> d{distance(k, a, b) / 2, distance(k, b, c) / 2, distance(k, a, c) / 2};
    double dev = 0.0;
    for (std::size_t i = 0; i < 3; ++i) dev = std::max(dev, std::abs(d[i] - kReferenceDistances[i]));
    halves = {{"d_ab", d[0]}, {"d_bc", d[1]}, {"d_ac", d[2]}, {"max_deviation", dev}};
  }

  PropertyRecord values;
  values.id = "counterexample.reference_values";
  values.anchor = "semi-metric values on the reference triple";
  values.kind = Kind::identity;
  values.samples = 2;
  values.premise_held = 2;
  values.threshold = kReferenceTolerance;
  values.max_violation = best_dev;
  values.violations = any_match ? 0 : 1;
  values.witness = any_match ? "matched by " + matched
                             : "no norm variant matches; " + variants.dump() + "; half operator-norm values " +
                                   halves.dump();
  values.pass = any_match;
  rep.properties.push_back(values);

  PropertyRecord tri;
  tri.id = "counterexample.triangle_failure";
  tri.anchor = "semi-metric violates the triangle inequality";
  tri.kind = Kind::identity;
  tri.samples = 2;
  tri.premise_held = 2;
  tri.witness = variants.dump();
  tri.pass = any_triangle_failure;
  tri.violations = any_triangle_failure ? 0 : 1;
  tri.max_violation = 0.0;
  rep.properties.push_back(tri);

  // Hermitian S with S <= I while S X S <= X fails.
  Matrix s(2, 2);
  Matrix x(2, 2);
  s << 0.0, 1.0, 1.0, 0.0;
  x << 2.0, 0.5, 0.5, 1.0;
  const Hermitian sh(s);
  const PositiveDefinite xp(x);
  const double contraction = loewner_margin(sh, Hermitian::identity(2));
  const double converse = loewner_margin(congruence(xp.hermitian(), s), xp.hermitian());
  PropertyRecord conv;
  conv.id = "counterexample.contraction_converse";
  conv.anchor = "S below I does not imply S X S below X";
  conv.kind = Kind::identity;
  conv.samples = 1;
  conv.premise_held = 1;
  conv.max_violation = converse;
  conv.threshold = 0.0;
  conv.pass = contraction >= 0.0 && converse < 0.0;
  conv.violations = conv.pass ? 0 : 1;
  std::ostringstream os;
  os << "margin(S <= I)=" << contraction << " margin(SXS <= X)=" << converse;
  conv.witness = os.str();
  rep.properties.push_back(conv);

  rep.findings.push_back({"counterexample.norm_variants", "semi-metric on the reference triple, both norms", variants});
  rep.findings.push_back(
      {"counterexample.half_operator_norm", "||log(A^-1 # B)|| in operator norm on the reference triple", halves});
  rep.environment = {{"version", kVersion}};
  rep.timestamp = detail::utc_timestamp();
  rep.pass = std::all_of(rep.properties.begin(), rep.properties.end(), [](const PropertyRecord& r) { return r.pass; });
  return rep;
}

}  // namespace gyromean::campaign
