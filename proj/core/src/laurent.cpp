#include "palais/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace palais {

namespace {
bool nonzero(Complex c) { return c.real() != 0.0 || c.imag() != 0.0; }
}  // namespace

LaurentSeries::LaurentSeries(int lowest_index, std::vector<Complex> coefficients)
    : lowest_(lowest_index), coeffs_(std::move(coefficients)) {
  normalize();
}

void LaurentSeries::normalize() {
  // Trim leading zeros so the coefficient at lowest_index is nonzero.
  std::size_t lead = 0;
  while (lead < coeffs_.size() && !nonzero(coeffs_[lead])) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    lowest_ += static_cast<int>(lead);
  }
}

LaurentSeries LaurentSeries::constant(Complex c) {
  return LaurentSeries(0, {c});
}

LaurentSeries LaurentSeries::monomial(int k, Complex c) {
  return LaurentSeries(k, {c});
}

LaurentSeries LaurentSeries::from_terms(
    std::initializer_list<std::pair<int, Complex>> terms) {
  if (terms.size() == 0) return LaurentSeries();
  int lo = terms.begin()->first;
  int hi = lo;
  for (const auto& [p, c] : terms) {
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  std::vector<Complex> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [p, c] : terms) coeffs[static_cast<std::size_t>(p - lo)] += c;
  return LaurentSeries(lo, std::move(coeffs));
}

int LaurentSeries::truncation_degree() const {
  if (coeffs_.empty()) return lowest_;
  return lowest_ + static_cast<int>(coeffs_.size()) - 1;
}

Complex LaurentSeries::coeff(int p) const {
  const int offset = p - lowest_;
  if (offset < 0 || offset >= static_cast<int>(coeffs_.size())) return {};
  return coeffs_[static_cast<std::size_t>(offset)];
}

Complex LaurentSeries::eval(Complex z) const {
  if (coeffs_.empty()) return {};
  if (lowest_ < 0 && z == Complex{0.0}) {
    throw std::domain_error("LaurentSeries::eval: pole at z = 0");
  }
  // Horner over nonnegative part, explicit powers for the principal part.
  Complex value{0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    value = value * z + *it;
  }
  if (lowest_ > 0) {
    value *= ipow(z, lowest_);
  } else if (lowest_ < 0) {
    value /= ipow(z, -lowest_);
  }
  return value;
}

Complex LaurentSeries::derivative_at_zero(int k) const {
  if (lowest_ < 0) {
    throw std::domain_error(
        "LaurentSeries::derivative_at_zero: series has a pole at 0");
  }
  if (k < 0) throw std::domain_error("derivative_at_zero: negative order");
  double factorial = 1.0;
  for (int j = 2; j <= k; ++j) factorial *= j;
  return factorial * coeff(k);
}

LaurentSeries LaurentSeries::reciprocal(int out_truncation) const {
  if (coeffs_.empty()) {
    throw std::domain_error("LaurentSeries::reciprocal: zero series");
  }
  // (*this) = z^nu * u(z) with u(0) != 0; invert the unit part by the
  // standard convolution recurrence.
  const int nu = lowest_;
  const Complex lead = coeffs_.front();
  const int out_count = out_truncation + nu + 1;  // indices -nu .. out_truncation
  if (out_count <= 0) {
    return LaurentSeries(-nu, std::vector<Complex>{1.0 / lead}).truncated(
        out_truncation);
  }
  std::vector<Complex> inv(static_cast<std::size_t>(out_count));
  inv[0] = 1.0 / lead;
  for (int k = 1; k < out_count; ++k) {
    Complex acc{0.0};
    for (int j = 1; j <= k; ++j) {
      const int uj = j;  // coefficient of z^j in the unit part
      const Complex u =
          (uj < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(uj)] : Complex{0.0};
      acc += u * inv[static_cast<std::size_t>(k - j)];
    }
    inv[static_cast<std::size_t>(k)] = -acc / lead;
  }
  return LaurentSeries(-nu, std::move(inv));
}

LaurentSeries LaurentSeries::derivative() const {
  if (coeffs_.empty()) return LaurentSeries();
  std::vector<Complex> out;
  out.reserve(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int p = lowest_ + static_cast<int>(i);
    out.push_back(static_cast<double>(p) * coeffs_[i]);
  }
  return LaurentSeries(lowest_ - 1, std::move(out));
}

LaurentSeries LaurentSeries::truncated(int new_truncation) const {
  if (coeffs_.empty() || new_truncation >= truncation_degree()) return *this;
  if (new_truncation < lowest_) return LaurentSeries();
  std::vector<Complex> out(coeffs_.begin(),
                           coeffs_.begin() + (new_truncation - lowest_ + 1));
  return LaurentSeries(lowest_, std::move(out));
}

LaurentSeries LaurentSeries::shifted(int k) const {
  if (coeffs_.empty()) return *this;
  return LaurentSeries(lowest_ + k, coeffs_);
}

void LaurentSeries::declare_annulus(double inner, double outer) {
  annulus_inner_ = inner;
  annulus_outer_ = outer;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.lowest_, b.lowest_);
  const int hi = std::max(a.truncation_degree(), b.truncation_degree());
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int p = lo; p <= hi; ++p) {
    out[static_cast<std::size_t>(p - lo)] = a.coeff(p) + b.coeff(p);
  }
  return LaurentSeries(lo, std::move(out));
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.is_zero() || b.is_zero()) return LaurentSeries();
  // A product coefficient is reliable only while every contributing pair of
  // retained coefficients is present.
  const int lo = a.lowest_ + b.lowest_;
  const int hi = std::min(a.truncation_degree() + b.lowest_,
                          b.truncation_degree() + a.lowest_);
  if (hi < lo) return LaurentSeries();
  std::vector<Complex> out(static_cast<std::size_t>(hi - lo + 1));
  for (int i = 0; i < a.term_count(); ++i) {
    const int pa = a.lowest_ + i;
    const Complex ca = a.coeffs_[static_cast<std::size_t>(i)];
    if (!nonzero(ca)) continue;
    for (int j = 0; j < b.term_count(); ++j) {
      const int p = pa + b.lowest_ + j;
      if (p > hi) break;
      out[static_cast<std::size_t>(p - lo)] +=
          ca * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return LaurentSeries(lo, std::move(out));
}

bool LaurentSeries::operator==(const LaurentSeries& other) const {
  return lowest_ == other.lowest_ && coeffs_ == other.coeffs_;
}

Complex residue_of_inverse_wg(const LaurentSeries& g) {
  if (g.is_zero()) {
    throw std::invalid_argument("residue_of_inverse_wg: g is identically zero");
  }
  if (g.lowest_index() < 0) {
    throw std::domain_error("residue_of_inverse_wg: g must be holomorphic at 0");
  }
  const LaurentSeries wg = g.shifted(1);  // w * g(w)
  return wg.reciprocal(kDefaultTruncation).coeff(-1);
}

}  // namespace palais
