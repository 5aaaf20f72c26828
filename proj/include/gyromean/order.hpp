#pragma once

// Executable checkers for Loewner-order theorems about the two means and for
// the majorization relations between their spectra. Each checker evaluates
// the premise and the conclusion independently and reports the smallest
// eigenvalue slack over the orderings it asserts.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gyromean/means.hpp"
#include "gyromean/metrics.hpp"

namespace gyromean::order {

enum class InequalityCase {
  loewner_heinz,
  furuta,
  ando_hiai,
  main_spectral_AH,
  power_chain,
  equivalence_five,
  contraction,
  bounds_spectral,
  log_sum_condition,
  d_le_delta,
  logmaj_mean,
};

inline constexpr std::array kAllCases = {
    InequalityCase::loewner_heinz,     InequalityCase::furuta,           InequalityCase::ando_hiai,
    InequalityCase::main_spectral_AH,  InequalityCase::power_chain,      InequalityCase::equivalence_five,
    InequalityCase::contraction,       InequalityCase::bounds_spectral,  InequalityCase::log_sum_condition,
    InequalityCase::d_le_delta,        InequalityCase::logmaj_mean,
};

constexpr std::string_view to_string(InequalityCase c) noexcept {
  switch (c) {
    case InequalityCase::loewner_heinz: return "loewner_heinz";
    case InequalityCase::furuta: return "furuta";
    case InequalityCase::ando_hiai: return "ando_hiai";
    case InequalityCase::main_spectral_AH: return "main_spectral_AH";
    case InequalityCase::power_chain: return "power_chain";
    case InequalityCase::equivalence_five: return "equivalence_five";
    case InequalityCase::contraction: return "contraction";
    case InequalityCase::bounds_spectral: return "bounds_spectral";
    case InequalityCase::log_sum_condition: return "log_sum_condition";
    case InequalityCase::d_le_delta: return "d_le_delta";
    case InequalityCase::logmaj_mean: return "logmaj_mean";
  }
  return "?";
}

inline InequalityCase parse_case(std::string_view name) {
  for (auto c : kAllCases) {
    if (to_string(c) == name) return c;
  }
  throw Error(Errc::unknown_case, "no inequality case named '" + std::string(name) + "'");
}

struct CheckResult {
  bool premise_held = false;
  bool conclusion_held = false;
  /// True when the conclusion is asserted for these inputs: the premise for
  /// conditional statements, always for unconditional ones.
  bool conclusion_required = false;
  /// Smallest eigenvalue slack over the asserted orderings (negative = violated).
  double margin = std::numeric_limits<double>::infinity();
  std::string witness;

  bool violated() const { return conclusion_required && !conclusion_held; }
};

namespace detail {

inline Hermitian identity_like(const PositiveDefinite& a) { return Hermitian::identity(a.dim()); }

inline std::string describe(Index n, std::initializer_list<std::pair<const char*, double>> scalars) {
  std::ostringstream os;
  os << "n=" << n;
  for (const auto& [name, value] : scalars) os << ' ' << name << '=' << value;
  return os.str();
}

inline CheckResult conditional(bool premise, double margin, double slack, std::string witness) {
  return CheckResult{premise, margin >= -slack, premise, margin, std::move(witness)};
}

inline CheckResult unconditional(double margin, double slack, std::string witness) {
  return CheckResult{true, margin >= -slack, true, margin, std::move(witness)};
}

inline void require_same_dim(const Hermitian& a, const PositiveDefinite& b) {
  if (a.dim() != b.dim()) throw Error(Errc::dimension_mismatch, "operands differ in size");
}

}  // namespace detail

/// C^2 <= A <= B  implies  C <= A^{1/2} <= B^{1/2}.
inline CheckResult check_loewner_heinz(const Hermitian& c, const PositiveDefinite& a, const PositiveDefinite& b,
                                       double slack = Tolerances{}.loewner) {
  detail::require_same_dim(c, a);
  gyromean::detail::require_same_dim(a, b);
  const auto c2 = Hermitian::symmetrized(c.matrix() * c.matrix());
  const bool premise = loewner_le(c2, a.hermitian(), slack) && loewner_le(a.hermitian(), b.hermitian(), slack);
  const auto ah = sqrtm(a).hermitian();
  const auto bh = sqrtm(b).hermitian();
  const double margin = std::min(loewner_margin(c, ah), loewner_margin(ah, bh));
  return detail::conditional(premise, margin, slack, detail::describe(a.dim(), {}));
}

/// B <= A  implies  A^p # B^{-p} >= I for p > 0.
inline CheckResult check_furuta(const PositiveDefinite& a, const PositiveDefinite& b, double p,
                                double slack = Tolerances{}.loewner) {
  gyromean::detail::require_same_dim(a, b);
  if (!(p > 0.0)) throw Error(Errc::invalid_argument, "Furuta exponent must be positive");
  const bool premise = loewner_le(b.hermitian(), a.hermitian(), slack);
  const auto m = geo_mean(powm(a, p), powm(b, -p), 0.5);
  const double margin = loewner_margin(detail::identity_like(a), m.hermitian());
  return detail::conditional(premise, margin, slack, detail::describe(a.dim(), {{"p", p}}));
}

/// A # B <= I  implies  A^p # B^p <= I for p >= 1.
inline CheckResult check_ando_hiai(const PositiveDefinite& a, const PositiveDefinite& b, double p,
                                   double slack = Tolerances{}.loewner) {
  gyromean::detail::require_same_dim(a, b);
  if (!(p >= 1.0)) throw Error(Errc::invalid_argument, "Ando-Hiai exponent must be at least 1");
  const auto id = detail::identity_like(a);
  const bool premise = loewner_le(geo_mean(a, b, 0.5).hermitian(), id, slack);
  const double margin = loewner_margin(geo_mean(powm(a, p), powm(b, p), 0.5).hermitian(), id);
  return detail::conditional(premise, margin, slack, detail::describe(a.dim(), {{"p", p}}));
}

/// A^{-1} ♮_t B <= A^{-1}  implies  A # B <= I and A^p # B^p <= I for p >= 1.
inline CheckResult check_main_spectral_ah(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                                          double p, double slack = Tolerances{}.loewner) {
  gyromean::detail::require_same_dim(a, b);
  if (!(t > 0.0 && t <= 1.0)) throw Error(Errc::weight_out_of_range, "weight must lie in (0, 1]");
  if (!(p >= 1.0)) throw Error(Errc::invalid_argument, "exponent must be at least 1");
  const auto ainv = inverse(a);
  const auto id = detail::identity_like(a);
  const bool premise = loewner_le(spectral_mean(ainv, b, t).hermitian(), ainv.hermitian(), slack);
  const double margin = std::min(loewner_margin(geo_mean(a, b, 0.5).hermitian(), id),
                                 loewner_margin(geo_mean(powm(a, p), powm(b, p), 0.5).hermitian(), id));
  return detail::conditional(premise, margin, slack, detail::describe(a.dim(), {{"t", t}, {"p", p}}));
}

/// A # B <= I  implies  A^{p+1} # (A #_{p/2} B) <= A for p > 0; at p = 2 the
/// special case A^3 # B <= A is evaluated on its own as well.
inline CheckResult check_power_chain(const PositiveDefinite& a, const PositiveDefinite& b, double p,
                                     double slack = Tolerances{}.loewner) {
  gyromean::detail::require_same_dim(a, b);
  if (!(p > 0.0)) throw Error(Errc::invalid_argument, "exponent must be positive");
  const bool premise = loewner_le(geo_mean(a, b, 0.5).hermitian(), detail::identity_like(a), slack);
  const auto lhs = geo_mean(powm(a, p + 1.0), geo_mean(a, b, p / 2.0), 0.5);
  double margin = loewner_margin(lhs.hermitian(), a.hermitian());
  if (p == 2.0) {
    margin = std::min(margin, loewner_margin(geo_mean(powm(a, 3.0), b, 0.5).hermitian(), a.hermitian()));
  }
  return detail::conditional(premise, margin, slack, detail::describe(a.dim(), {{"p", p}}));
}

/// Margins of the five statements
///   (1) A^{-1} ♮ B <= I   (2) A ♮ B^{-1} >= I   (3) A # B <= A
///   (4) A # B >= B        (5) B <= A
inline std::array<double, 5> equivalence_margins(const PositiveDefinite& a, const PositiveDefinite& b) {
  gyromean::detail::require_same_dim(a, b);
  const auto id = detail::identity_like(a);
  const auto g = geo_mean(a, b, 0.5).hermitian();
  return {
      loewner_margin(spectral_mean(inverse(a), b, 0.5).hermitian(), id),
      loewner_margin(id, spectral_mean(a, inverse(b), 0.5).hermitian()),
      loewner_margin(g, a.hermitian()),
      loewner_margin(b.hermitian(), g),
      loewner_margin(b.hermitian(), a.hermitian()),
  };
}

inline std::array<bool, 5> equivalence_statements(const PositiveDefinite& a, const PositiveDefinite& b,
                                                  double tol = Tolerances{}.loewner) {
  const auto m = equivalence_margins(a, b);
  std::array<bool, 5> out{};
  for (std::size_t i = 0; i < 5; ++i) out[i] = m[i] >= -tol;
  return out;
}

/// The five statements must be all true or all false. premise_held records
/// statement (5).
inline CheckResult check_equivalence_five(const PositiveDefinite& a, const PositiveDefinite& b,
                                          double slack = Tolerances{}.loewner) {
  const auto m = equivalence_margins(a, b);
  std::array<bool, 5> s{};
  for (std::size_t i = 0; i < 5; ++i) s[i] = m[i] >= -slack;
  const bool consistent = std::all_of(s.begin(), s.end(), [&](bool v) { return v == s[0]; });
  double closest = std::numeric_limits<double>::infinity();
  for (double v : m) closest = std::min(closest, std::abs(v));
  std::ostringstream os;
  os << detail::describe(a.dim(), {}) << " statements=";
  for (bool v : s) os << (v ? 'T' : 'F');
  return CheckResult{s[4], consistent, true, consistent ? closest : -closest, os.str()};
}

/// S X S <= X (S Hermitian, X positive definite)  implies  S <= I.
inline CheckResult check_contraction(const Hermitian& s, const PositiveDefinite& x,
                                     double slack = Tolerances{}.loewner) {
  detail::require_same_dim(s, x);
  const auto sxs = congruence(x.hermitian(), s.matrix());
  const bool premise = loewner_le(sxs, x.hermitian(), slack);
  const double margin = loewner_margin(s, Hermitian::identity(s.dim()));
  return detail::conditional(premise, margin, slack, detail::describe(s.dim(), {}));
}

struct SpectralBounds {
  Hermitian lower;
  /// 2^{1+t} (A^{-1} + B)^{-t} - A; the upper bound is its inverse and only
  /// bounds A ♮_t B when this bracket is positive definite.
  Hermitian bracket;
};

inline SpectralBounds spectral_bounds(const PositiveDefinite& a, const PositiveDefinite& b, double t) {
  gyromean::detail::require_same_dim(a, b);
  gyromean::detail::require_unit_interval(t);
  const double c = std::pow(2.0, 1.0 + t);
  const auto ainv = inverse(a);
  const auto s1 = PositiveDefinite::from_computed(a.matrix() + inverse(b).matrix());
  const auto s2 = PositiveDefinite::from_computed(ainv.matrix() + b.matrix());
  return {Hermitian::symmetrized(c * powm(s1, -t).matrix() - ainv.matrix()),
          Hermitian::symmetrized(c * powm(s2, -t).matrix() - a.matrix())};
}

/// lower <= A ♮_t B always; A ♮_t B <= bracket^{-1} whenever the bracket is
/// positive definite (premise_held).
inline CheckResult check_bounds_spectral(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                                         double slack = Tolerances{}.loewner) {
  const auto bounds = spectral_bounds(a, b, t);
  const auto m = spectral_mean(a, b, t).hermitian();
  double margin = loewner_margin(bounds.lower, m);
  const bool bracket_pd = min_eigenvalue(bounds.bracket) > Tolerances{}.pd;
  if (bracket_pd) {
    const auto upper = inverse(PositiveDefinite(bounds.bracket)).hermitian();
    margin = std::min(margin, loewner_margin(m, upper));
  }
  return CheckResult{bracket_pd, margin >= -slack, true, margin,
                     detail::describe(a.dim(), {{"t", t}, {"bracket_pd", bracket_pd ? 1.0 : 0.0}})};
}

/// log A + log B <= 0  implies  A # B <= I.
inline CheckResult check_log_sum_condition(const PositiveDefinite& a, const PositiveDefinite& b,
                                           double slack = Tolerances{}.loewner) {
  gyromean::detail::require_same_dim(a, b);
  const auto sum = logm(a) + logm(b);
  const bool premise = loewner_le(sum, Hermitian::symmetrized(Matrix::Zero(a.dim(), a.dim())), slack);
  const double margin = loewner_margin(geo_mean(a, b, 0.5).hermitian(), detail::identity_like(a));
  return detail::conditional(premise, margin, slack, detail::describe(a.dim(), {}));
}

/// The three listed sufficient conditions for A # B <= I, and the conclusion.
struct SufficientConditions {
  bool both_below_identity;   // A <= I and B <= I
  bool log_sum_nonpositive;   // log A + log B <= 0
  bool spectral_condition;    // A^{-1} ♮_t B <= A^{-1}
  bool mean_below_identity;   // A # B <= I
};

inline SufficientConditions sufficient_conditions(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                                                  double tol = Tolerances{}.loewner) {
  gyromean::detail::require_same_dim(a, b);
  const auto id = detail::identity_like(a);
  const auto ainv = inverse(a);
  return {
      loewner_le(a.hermitian(), id, tol) && loewner_le(b.hermitian(), id, tol),
      min_eigenvalue(Hermitian::symmetrized(-(logm(a) + logm(b)).matrix())) >= -tol,
      loewner_le(spectral_mean(ainv, b, t).hermitian(), ainv.hermitian(), tol),
      loewner_le(geo_mean(a, b, 0.5).hermitian(), id, tol),
  };
}

/// d(A,B) <= delta(A,B) with d the Frobenius semi-metric.
inline CheckResult check_d_le_delta(const PositiveDefinite& a, const PositiveDefinite& b,
                                    double slack = Tolerances{}.loewner) {
  const double d = distance(DistanceKind::semimetric_frob, a, b);
  const double delta = distance(DistanceKind::riemannian, a, b);
  return detail::unconditional(delta - d, slack, detail::describe(a.dim(), {{"d", d}, {"delta", delta}}));
}

struct MajorizationResult {
  bool weakly_majorized = false;
  bool totals_equal = false;
  /// Smallest prefix slack sum_k(y) - sum_k(x) over k < n (log sums when log-scale).
  double margin = std::numeric_limits<double>::infinity();

  bool majorized() const { return weakly_majorized && totals_equal; }
};

/// Prefix-sum (or prefix-product when log_scale) dominance of x by y after
/// sorting both in decreasing order.
inline MajorizationResult weak_majorize(std::vector<double> x, std::vector<double> y, bool log_scale,
                                        double tol = Tolerances{}.equality) {
  if (x.size() != y.size()) throw Error(Errc::length_mismatch, "majorization vectors differ in length");
  if (log_scale) {
    for (const auto* v : {&x, &y}) {
      for (double e : *v) {
        if (!(e > 0.0)) throw Error(Errc::non_positive_entry, "log-majorization needs positive entries");
      }
    }
  }
  std::sort(x.begin(), x.end(), std::greater<>());
  std::sort(y.begin(), y.end(), std::greater<>());
  MajorizationResult r;
  r.weakly_majorized = true;
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    sx += log_scale ? std::log(x[k]) : x[k];
    sy += log_scale ? std::log(y[k]) : y[k];
    const double scale = std::max({1.0, std::abs(sx), std::abs(sy)});
    if (sx > sy + tol * scale) r.weakly_majorized = false;
    if (k + 1 < x.size()) r.margin = std::min(r.margin, sy - sx);
    if (k + 1 == x.size()) r.totals_equal = std::abs(sx - sy) <= tol * scale;
  }
  return r;
}

inline std::vector<double> to_std(const RealVector& v) { return {v.data(), v.data() + v.size()}; }

/// lambda(A #_t B) is log-majorized by lambda(A^{1-t} B^t). The product is
/// evaluated through its similar positive matrix A^{(1-t)/2} B^t A^{(1-t)/2}.
inline CheckResult check_logmaj_mean(const PositiveDefinite& a, const PositiveDefinite& b, double t,
                                     double tol = Tolerances{}.equality) {
  gyromean::detail::require_same_dim(a, b);
  gyromean::detail::require_unit_interval(t);
  const auto lhs = geo_mean(a, b, t).spectrum().eigenvalues;
  const Matrix ah = powm(a, (1.0 - t) / 2.0).matrix();
  const auto rhs = eigh(Hermitian::symmetrized(ah * powm(b, t).matrix() * ah)).eigenvalues;
  const auto r = weak_majorize(to_std(lhs), to_std(rhs), true, tol);
  const double margin = r.totals_equal ? r.margin : -std::numeric_limits<double>::infinity();
  return CheckResult{true, r.majorized(), true, margin, detail::describe(a.dim(), {{"t", t}})};
}

/// Case-agnostic inputs for dispatch by tag.
struct CaseInputs {
  std::vector<Matrix> matrices;
  std::vector<double> scalars;
  Tolerances tol{};
};

inline CheckResult check(InequalityCase c, const CaseInputs& in) {
  auto need = [&](std::size_t nm, std::size_t ns) {
    if (in.matrices.size() != nm || in.scalars.size() != ns) {
      throw Error(Errc::invalid_argument, std::string(to_string(c)) + " expects " + std::to_string(nm) +
                                              " matrices and " + std::to_string(ns) + " scalars");
    }
  };
  auto pd = [&](std::size_t i) { return PositiveDefinite(in.matrices[i], in.tol); };
  auto herm = [&](std::size_t i) { return Hermitian(in.matrices[i], in.tol); };
  const double slack = in.tol.loewner;
  switch (c) {
    case InequalityCase::loewner_heinz: need(3, 0); return check_loewner_heinz(herm(0), pd(1), pd(2), slack);
    case InequalityCase::furuta: need(2, 1); return check_furuta(pd(0), pd(1), in.scalars[0], slack);
    case InequalityCase::ando_hiai: need(2, 1); return check_ando_hiai(pd(0), pd(1), in.scalars[0], slack);
    case InequalityCase::main_spectral_AH:
      need(2, 2);
      return check_main_spectral_ah(pd(0), pd(1), in.scalars[0], in.scalars[1], slack);
    case InequalityCase::power_chain: need(2, 1); return check_power_chain(pd(0), pd(1), in.scalars[0], slack);
    case InequalityCase::equivalence_five: need(2, 0); return check_equivalence_five(pd(0), pd(1), slack);
    case InequalityCase::contraction: need(2, 0); return check_contraction(herm(0), pd(1), slack);
    case InequalityCase::bounds_spectral:
      need(2, 1);
      return check_bounds_spectral(pd(0), pd(1), in.scalars[0], slack);
    case InequalityCase::log_sum_condition: need(2, 0); return check_log_sum_condition(pd(0), pd(1), slack);
    case InequalityCase::d_le_delta: need(2, 0); return check_d_le_delta(pd(0), pd(1), slack);
    case InequalityCase::logmaj_mean:
      need(2, 1);
      return check_logmaj_mean(pd(0), pd(1), in.scalars[0], in.tol.equality);
  }
  throw Error(Errc::unknown_case, "unhandled inequality case");
}

}  // namespace gyromean::order
