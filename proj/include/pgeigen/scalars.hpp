#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "pgeigen/errors.hpp"

namespace pgeigen {

using Int = mpz_class;
using Rat = mpq_class;

/// Element of the cyclotomic field Q(zeta_p), p prime, written in the power
/// basis {1, zeta, ..., zeta^{p-2}} with zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
/// For p = 2 the basis is {1} and the field is plain Q.  Coordinates are exact
/// rationals, so equality of coordinate vectors is equality in the field.
class CycloNum {
 public:
  /// Zero of conductor 2 (plain rational zero); default so containers work.
  CycloNum() : p_(2), coords_(1) {}

  /// Zero of conductor p.
  explicit CycloNum(int p);

  static CycloNum from_rational(int p, const Rat& r);

  int conductor() const { return p_; }
  const std::vector<Rat>& coords() const { return coords_; }
  Rat& coord(int i) { return coords_[i]; }

  bool is_zero() const;
  /// True when all coordinates above the constant one vanish.
  bool is_rational() const;
  /// The constant coordinate; only meaningful when is_rational().
  const Rat& rational_value() const;

  /// Complex conjugate (zeta -> zeta^{p-1}).
  CycloNum conjugate() const;

  /// Numeric value with zeta = exp(2*pi*i/p).
  std::complex<double> eval() const;

  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum operator-() const;
  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend bool operator==(const CycloNum& a, const CycloNum& b);
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

 private:
  int p_;
  std::vector<Rat> coords_;  // length p-1
};

/// zeta_p^t reduced into the power basis.  p must be prime.
CycloNum root_of_unity(int p, long t);

/// Polynomial in the positive real parameter phi with CycloNum coefficients.
/// Stored densely by degree with trailing zeros stripped, so coordinatewise
/// equality is polynomial identity.  All scalars produced by the exact
/// pipeline live here; no division by phi-dependent quantities ever occurs.
class PhiPoly {
 public:
  PhiPoly() : p_(2) {}
  /// Zero polynomial of conductor p.
  explicit PhiPoly(int p) : p_(p) {}

  static PhiPoly constant(const CycloNum& c);
  static PhiPoly from_rational(int p, const Rat& r);
  /// coeff * phi^deg.
  static PhiPoly monomial(int p, int deg, const Rat& coeff);
  static PhiPoly monomial(int p, int deg, const CycloNum& coeff);

  int conductor() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of phi^i (zero beyond the degree).
  CycloNum coeff(int i) const;
  bool is_rational() const;

  PhiPoly conjugate() const;

  /// Exact value at a rational phi; requires rational coefficients.
  Rat eval_rational(const Rat& phi) const;
  /// Numeric value at a rational phi (coefficients may be cyclotomic).
  std::complex<double> eval(const Rat& phi) const;

  PhiPoly& operator+=(const PhiPoly& o);
  PhiPoly& operator-=(const PhiPoly& o);
  PhiPoly operator-() const;
  friend PhiPoly operator+(PhiPoly a, const PhiPoly& b) { return a += b; }
  friend PhiPoly operator-(PhiPoly a, const PhiPoly& b) { return a -= b; }
  friend PhiPoly operator*(const PhiPoly& a, const PhiPoly& b);
  friend bool operator==(const PhiPoly& a, const PhiPoly& b);
  friend bool operator!=(const PhiPoly& a, const PhiPoly& b) { return !(a == b); }

 private:
  void strip();
  int p_;
  std::vector<CycloNum> coeffs_;  // coeffs_[i] multiplies phi^i
};

/// Value of s at phi; rejects phi <= 0 since the weighted matrix is only
/// defined for positive phi.
std::complex<double> eval_complex(const PhiPoly& s, const Rat& phi);

namespace detail {
void check_prime(int p);
void check_same_conductor(int a, int b);
}  // namespace detail

}  // namespace pgeigen
