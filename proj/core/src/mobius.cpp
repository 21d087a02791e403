#include "palais/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace palais {

namespace {

// Matrix sending z1, z2, z3 to 0, 1, infinity.
MobiusMap to_standard_triple(Complex z1, Complex z2, Complex z3) {
  return {z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1)};
}

MobiusMap compose_adjugate(const MobiusMap& b, const MobiusMap& a) {
  // adj(B) * A; projectively equal to B^{-1} A.
  const MobiusMap adj{b.delta, -b.beta, -b.gamma, b.alpha};
  return {adj.alpha * a.alpha + adj.beta * a.gamma,
          adj.alpha * a.beta + adj.beta * a.delta,
          adj.gamma * a.alpha + adj.delta * a.gamma,
          adj.gamma * a.beta + adj.delta * a.delta};
}

double coeff_norm(const MobiusMap& m) {
  return std::max({std::abs(m.alpha), std::abs(m.beta), std::abs(m.gamma),
                   std::abs(m.delta)});
}

}  // namespace

const char* to_string(MobiusClass c) {
  switch (c) {
    case MobiusClass::identity: return "identity";
    case MobiusClass::translation: return "translation";
    case MobiusClass::parabolic: return "parabolic";
    case MobiusClass::general: return "general";
  }
  return "unknown";
}

MobiusMap MobiusMap::normalized() const {
  const Complex d = det();
  if (d == Complex{0.0}) {
    throw std::invalid_argument("MobiusMap::normalized: singular matrix");
  }
  const Complex s = std::sqrt(d);
  MobiusMap out{alpha / s, beta / s, gamma / s, delta / s};
  const double scale = coeff_norm(out);
  const Complex coeffs[4] = {out.alpha, out.beta, out.gamma, out.delta};
  for (const Complex& c : coeffs) {
    if (std::abs(c) <= 1e-12 * scale) continue;
    const bool flip =
        c.real() < -1e-12 * std::abs(c) ||
        (std::abs(c.real()) <= 1e-12 * std::abs(c) && c.imag() < 0.0);
    if (flip) {
      out.alpha = -out.alpha;
      out.beta = -out.beta;
      out.gamma = -out.gamma;
      out.delta = -out.delta;
    }
    break;
  }
  return out;
}

MobiusClass classify_mobius(const MobiusMap& map, double tol) {
  const MobiusMap m = map.normalized();
  const double to_id = std::max({std::abs(m.alpha - 1.0), std::abs(m.beta),
                                 std::abs(m.gamma), std::abs(m.delta - 1.0)});
  const double to_neg_id =
      std::max({std::abs(m.alpha + 1.0), std::abs(m.beta), std::abs(m.gamma),
                std::abs(m.delta + 1.0)});
  if (std::min(to_id, to_neg_id) <= tol) return MobiusClass::identity;
  if (std::abs(m.gamma) <= tol && std::abs(m.alpha - m.delta) <= tol) {
    return MobiusClass::translation;
  }
  const Complex tr = m.trace();
  if (std::min(std::abs(tr - 2.0), std::abs(tr + 2.0)) <= tol) {
    return MobiusClass::parabolic;
  }
  return MobiusClass::general;
}

double mobius_distance(const MobiusMap& a, const MobiusMap& b) {
  const MobiusMap na = a.normalized();
  const MobiusMap nb = b.normalized();
  const double direct =
      std::max({std::abs(na.alpha - nb.alpha), std::abs(na.beta - nb.beta),
                std::abs(na.gamma - nb.gamma), std::abs(na.delta - nb.delta)});
  const double flipped =
      std::max({std::abs(na.alpha + nb.alpha), std::abs(na.beta + nb.beta),
                std::abs(na.gamma + nb.gamma), std::abs(na.delta + nb.delta)});
  return std::min(direct, flipped);
}

HolonomyMap fit_return_map(std::span<const std::pair<Complex, Complex>> pairs,
                           double classify_tol) {
  if (pairs.size() < 3) {
    throw std::invalid_argument("fit_return_map: need at least 3 pairs");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (pairs[i].first == pairs[j].first) {
        throw std::invalid_argument(
            "fit_return_map: degenerate configuration, inputs not distinct");
      }
      if (pairs[i].second == pairs[j].second) {
        throw std::invalid_argument(
            "fit_return_map: degenerate configuration, outputs not distinct");
      }
    }
  }
  const MobiusMap a =
      to_standard_triple(pairs[0].first, pairs[1].first, pairs[2].first);
  const MobiusMap b =
      to_standard_triple(pairs[0].second, pairs[1].second, pairs[2].second);
  HolonomyMap result;
  result.mobius = compose_adjugate(b, a).normalized();
  result.classification = classify_mobius(result.mobius, classify_tol);
  for (std::size_t i = 3; i < pairs.size(); ++i) {
    const double err = std::abs(result.mobius.apply(pairs[i].first) -
                                pairs[i].second);
    result.consistency_error = std::max(result.consistency_error, err);
  }
  if (result.consistency_error > 1e-8) {
    throw std::runtime_error(
        "fit_return_map: extra pair deviates from the fitted map by " +
        std::to_string(result.consistency_error));
  }
  return result;
}

std::string HolonomyMap::to_json_string() const {
  std::ostringstream out;
  out.precision(17);
  auto emit = [&out](const char* name, Complex c) {
    out << '"' << name << "\":[" << c.real() << ',' << c.imag() << ']';
  };
  out << '{';
  emit("alpha", mobius.alpha);
  out << ',';
  emit("beta", mobius.beta);
  out << ',';
  emit("gamma", mobius.gamma);
  out << ',';
  emit("delta", mobius.delta);
  out << ",\"classification\":\"" << to_string(classification) << '"';
  out << ",\"consistency_error\":" << consistency_error << '}';
  return out.str();
}

}  // namespace palais
