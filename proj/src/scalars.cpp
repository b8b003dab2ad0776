#include "pgeigen/scalars.hpp"

#include <cmath>
#include <numbers>

namespace pgeigen {

namespace detail {

void check_prime(int p) {
  bool prime = p >= 2;
  for (int d = 2; prime && d * d <= p; ++d)
    if (p % d == 0) prime = false;
  require(prime, errc::invalid_parameter, "conductor must be prime, got " + std::to_string(p));
}

void check_same_conductor(int a, int b) {
  require(a == b, errc::incompatible_scalars,
          "conductor mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace detail

CycloNum::CycloNum(int p) {
  detail::check_prime(p);
  p_ = p;
  coords_.assign(p - 1, Rat(0));
}

CycloNum CycloNum::from_rational(int p, const Rat& r) {
  CycloNum c(p);
  c.coords_[0] = r;
  return c;
}

bool CycloNum::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

const Rat& CycloNum::rational_value() const {
  require(is_rational(), errc::invalid_parameter, "cyclotomic value is not rational");
  return coords_[0];
}

CycloNum CycloNum::conjugate() const {
  CycloNum r(p_);
  for (int i = 0; i < p_ - 1; ++i) {
    if (coords_[i] == 0) continue;
    int e = (p_ - i) % p_;  // zeta^i -> zeta^{p-i}
    if (e <= p_ - 2) {
      r.coords_[e] += coords_[i];
    } else {  // e == p-1: use zeta^{p-1} = -(1 + ... + zeta^{p-2})
      for (int j = 0; j <= p_ - 2; ++j) r.coords_[j] -= coords_[i];
    }
  }
  return r;
}

std::complex<double> CycloNum::eval() const {
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < p_ - 1; ++i) {
    if (coords_[i] == 0) continue;
    double angle = 2.0 * std::numbers::pi * i / p_;
    acc += coords_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  detail::check_same_conductor(p_, o.p_);
  for (int i = 0; i < p_ - 1; ++i) coords_[i] += o.coords_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  detail::check_same_conductor(p_, o.p_);
  for (int i = 0; i < p_ - 1; ++i) coords_[i] -= o.coords_[i];
  return *this;
}

CycloNum CycloNum::operator-() const {
  CycloNum r(p_);
  for (int i = 0; i < p_ - 1; ++i) r.coords_[i] = -coords_[i];
  return r;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  detail::check_same_conductor(a.p_, b.p_);
  int p = a.p_;
  std::vector<Rat> raw(2 * p - 3, Rat(0));  // degrees 0 .. 2p-4
  for (int i = 0; i < p - 1; ++i) {
    if (a.coords_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (b.coords_[j] == 0) continue;
      raw[i + j] += a.coords_[i] * b.coords_[j];
    }
  }
  CycloNum r(p);
  for (int e = 0; e <= 2 * p - 4; ++e) {
    if (raw[e] == 0) continue;
    if (e <= p - 2) {
      r.coords_[e] += raw[e];
    } else if (e == p - 1) {
      for (int j = 0; j <= p - 2; ++j) r.coords_[j] -= raw[e];
    } else {  // p <= e <= 2p-4, and zeta^p = 1
      r.coords_[e - p] += raw[e];
    }
  }
  return r;
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  detail::check_same_conductor(a.p_, b.p_);
  return a.coords_ == b.coords_;
}

CycloNum root_of_unity(int p, long t) {
  detail::check_prime(p);
  long e = t % p;
  if (e < 0) e += p;
  CycloNum r(p);
  if (e <= p - 2) {
    r.coord(static_cast<int>(e)) = 1;
  } else {
    for (int j = 0; j <= p - 2; ++j) r.coord(j) = -1;
  }
  return r;
}

PhiPoly PhiPoly::constant(const CycloNum& c) {
  PhiPoly r(c.conductor());
  if (!c.is_zero()) r.coeffs_.push_back(c);
  return r;
}

PhiPoly PhiPoly::from_rational(int p, const Rat& r) {
  return constant(CycloNum::from_rational(p, r));
}

PhiPoly PhiPoly::monomial(int p, int deg, const Rat& coeff) {
  return monomial(p, deg, CycloNum::from_rational(p, coeff));
}

PhiPoly PhiPoly::monomial(int p, int deg, const CycloNum& coeff) {
  require(deg >= 0, errc::invalid_parameter, "monomial degree must be nonnegative");
  detail::check_same_conductor(p, coeff.conductor());
  PhiPoly r(p);
  if (!coeff.is_zero()) {
    r.coeffs_.assign(deg + 1, CycloNum(p));
    r.coeffs_[deg] = coeff;
  }
  return r;
}

CycloNum PhiPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return CycloNum(p_);
  return coeffs_[i];
}

bool PhiPoly::is_rational() const {
  return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0].is_rational());
}

PhiPoly PhiPoly::conjugate() const {
  PhiPoly r(p_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.conjugate());
  r.strip();
  return r;
}

Rat PhiPoly::eval_rational(const Rat& phi) const {
  Rat acc(0);
  for (int i = degree(); i >= 0; --i) {
    require(coeffs_[i].is_rational(), errc::invalid_parameter,
            "polynomial has non-rational coefficients");
    acc = acc * phi + coeffs_[i].rational_value();
  }
  return acc;
}

std::complex<double> PhiPoly::eval(const Rat& phi) const {
  std::complex<double> acc(0.0, 0.0);
  double x = phi.get_d();
  for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i].eval();
  return acc;
}

void PhiPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PhiPoly& PhiPoly::operator+=(const PhiPoly& o) {
  detail::check_same_conductor(p_, o.p_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), CycloNum(p_));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

PhiPoly& PhiPoly::operator-=(const PhiPoly& o) {
  detail::check_same_conductor(p_, o.p_);
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), CycloNum(p_));
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

PhiPoly PhiPoly::operator-() const {
  PhiPoly r(p_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

PhiPoly operator*(const PhiPoly& a, const PhiPoly& b) {
  detail::check_same_conductor(a.p_, b.p_);
  PhiPoly r(a.p_);
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, CycloNum(a.p_));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  r.strip();
  return r;
}

bool operator==(const PhiPoly& a, const PhiPoly& b) {
  detail::check_same_conductor(a.p_, b.p_);
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  return true;
}

std::complex<double> eval_complex(const PhiPoly& s, const Rat& phi) {
  require(phi > 0, errc::invalid_parameter, "phi must be positive");
  return s.eval(phi);
}

}  // namespace pgeigen
