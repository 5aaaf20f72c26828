#pragma once

// Model-agnostic gyrovector-space machinery: cooperation, gyrolines,
// cogyrolines and the axiom suite, for any type satisfying GyroModel.

#include <algorithm>
#include <array>
#include <concepts>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gyromean::gyro {

template <class M>
concept GyroModel = requires(const M& m, const typename M::element_type& x, double t) {
  { m.identity_like(x) } -> std::convertible_to<typename M::element_type>;
  { m.add(x, x) } -> std::convertible_to<typename M::element_type>;
  { m.neg(x) } -> std::convertible_to<typename M::element_type>;
  { m.scalar(t, x) } -> std::convertible_to<typename M::element_type>;
  { m.gyr(x, x, x) } -> std::convertible_to<typename M::element_type>;
  { m.residual(x, x) } -> std::convertible_to<double>;
};

/// a ⊞ b = a ⊕ gyr[a, ⊖b] b
template <GyroModel M>
typename M::element_type cooperation(const M& m, const typename M::element_type& a,
                                     const typename M::element_type& b) {
  return m.add(a, m.gyr(a, m.neg(b), b));
}

/// L(t; a, b) = a ⊕ t ⊗ (⊖a ⊕ b)
template <GyroModel M>
typename M::element_type gyroline(const M& m, double t, const typename M::element_type& a,
                                  const typename M::element_type& b) {
  return m.add(a, m.scalar(t, m.add(m.neg(a), b)));
}

/// L^c(t; a, b) = t ⊗ (⊖a ⊞ b) ⊕ a
template <GyroModel M>
typename M::element_type cogyroline(const M& m, double t, const typename M::element_type& a,
                                    const typename M::element_type& b) {
  return m.add(m.scalar(t, cooperation(m, m.neg(a), b)), a);
}

template <class E>
struct AxiomSample {
  E a;
  E b;
  E c;
  double s;
  double t;
};

inline constexpr std::array<const char*, 13> kAxiomNames = {
    "G1_identity",          "G2_inverse",          "G3_gyroassociativity",   "G3_automorphism",
    "G4_trivial_gyration",  "G5_loop",             "gyrocommutativity",      "cooperation_commutativity",
    "V1_scalar_identities", "V2_distributivity",   "V3_scalar_associativity", "V4_gyration_scalar",
    "left_gyrotranslation",
};

struct AxiomReport {
  std::vector<std::pair<std::string, double>> residuals;  // one per kAxiomNames entry
  double threshold = 1e-8;
  std::size_t samples = 0;

  double worst() const {
    double w = 0.0;
    for (const auto& r : residuals) w = std::max(w, r.second);
    return w;
  }
  double at(const std::string& name) const {
    for (const auto& r : residuals) {
      if (r.first == name) return r.second;
    }
    return 0.0;
  }
  bool passed() const { return samples > 0 && worst() < threshold; }
};

/// Max residual of every axiom over the samples. Gyrations are compared as
/// maps through their action on the probes {a, b, c} of each sample.
template <GyroModel M>
AxiomReport axiom_suite(const M& m, std::span<const AxiomSample<typename M::element_type>> samples,
                        double threshold = 1e-8) {
  AxiomReport rep;
  rep.threshold = threshold;
  std::array<double, kAxiomNames.size()> worst{};
  auto upd = [&](std::size_t i, double r) { worst[i] = std::max(worst[i], r); };

  for (const auto& smp : samples) {
    const auto& a = smp.a;
    const auto& b = smp.b;
    const auto& c = smp.c;
    const auto e = m.identity_like(a);
    const std::array probes = {&a, &b, &c};

    upd(0, std::max(m.residual(m.add(e, a), a), m.residual(m.add(a, e), a)));
    upd(1, std::max(m.residual(m.add(a, m.neg(a)), e), m.residual(m.add(m.neg(a), a), e)));
    upd(2, m.residual(m.add(a, m.add(b, c)), m.add(m.add(a, b), m.gyr(a, b, c))));
    upd(3, m.residual(m.gyr(a, b, m.add(c, a)), m.add(m.gyr(a, b, c), m.gyr(a, b, a))));
    const auto ab = m.add(a, b);
    for (const auto* p : probes) {
      upd(4, m.residual(m.gyr(e, a, *p), *p));
      upd(5, m.residual(m.gyr(ab, b, *p), m.gyr(a, b, *p)));
    }
    upd(6, m.residual(ab, m.gyr(a, b, m.add(b, a))));
    upd(7, m.residual(cooperation(m, a, b), cooperation(m, b, a)));
    upd(8, std::max({m.residual(m.scalar(1.0, a), a), m.residual(m.scalar(0.0, a), e),
                     m.residual(m.scalar(smp.t, e), e), m.residual(m.scalar(-1.0, a), m.neg(a))}));
    upd(9, m.residual(m.scalar(smp.s + smp.t, a), m.add(m.scalar(smp.s, a), m.scalar(smp.t, a))));
    upd(10, m.residual(m.scalar(smp.s * smp.t, a), m.scalar(smp.s, m.scalar(smp.t, a))));
    upd(11, m.residual(m.gyr(a, b, m.scalar(smp.t, c)), m.scalar(smp.t, m.gyr(a, b, c))));
    upd(12, m.residual(m.add(c, gyroline(m, smp.t, a, b)), gyroline(m, smp.t, m.add(c, a), m.add(c, b))));
    ++rep.samples;
  }
  for (std::size_t i = 0; i < kAxiomNames.size(); ++i) rep.residuals.emplace_back(kAxiomNames[i], worst[i]);
  return rep;
}

template <GyroModel M>
AxiomReport axiom_suite(const M& m, const std::vector<AxiomSample<typename M::element_type>>& samples,
                        double threshold = 1e-8) {
  return axiom_suite(m, std::span<const AxiomSample<typename M::element_type>>(samples), threshold);
}

}  // namespace gyromean::gyro
