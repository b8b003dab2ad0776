#pragma once

#include <vector>

#include "pgeigen/errors.hpp"

namespace pgeigen {

/// Element of F_{p^m} as the coefficient vector of a residue polynomial,
/// little-endian: coeffs[i] multiplies x^i, each in [0, p).  Equality is
/// coefficient-wise; every element has exactly one representation.
struct FieldElem {
  std::vector<int> coeffs;
  friend bool operator==(const FieldElem&, const FieldElem&) = default;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

/// F_{p^m} = F_p[x]/(f) for a fixed irreducible monic f per (p, m); supported
/// orders are the prime powers up to 16.  Arithmetic is table-driven; elements
/// are interchangeably handled as FieldElem digit vectors or as packed integer
/// values sum_i coeffs[i] p^i in [0, q).
class Field {
 public:
  /// The shared instance for F_{p^m}.  Rejects non-prime p and orders
  /// outside the modulus table.
  static const Field& get(int p, int m);
  /// The shared instance of the field with q elements.
  static const Field& get_order(long q);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  /// Modulus coefficients c_0..c_m (monic, c_m = 1).
  const std::vector<int>& modulus() const { return modulus_; }

  FieldElem element(int value) const;
  int value(const FieldElem& a) const;
  FieldElem zero() const { return element(0); }
  FieldElem one() const { return element(1); }

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  /// Multiplicative inverse; inverting zero raises division-by-zero.
  FieldElem inv(const FieldElem& a) const;

  /// Absolute trace Tr(a) = a + a^p + ... + a^{p^{m-1}} as an element of the
  /// prime field, returned as an integer in [0, p).
  int trace(const FieldElem& a) const;

  // Packed-value arithmetic for inner loops.
  int add_v(int a, int b) const { return add_table_[a * q_ + b]; }
  int mul_v(int a, int b) const { return mul_table_[a * q_ + b]; }
  int neg_v(int a) const { return neg_table_[a]; }
  int inv_v(int a) const;
  int sub_v(int a, int b) const { return add_table_[a * q_ + neg_table_[b]]; }
  int trace_v(int a) const { return trace_table_[a]; }

 private:
  Field(int p, int m, std::vector<int> modulus);
  void check_elem(const FieldElem& a) const;

  int p_, m_, q_;
  std::vector<int> modulus_;
  std::vector<int> add_table_, mul_table_, neg_table_, inv_table_, trace_table_;
};

}  // namespace pgeigen
