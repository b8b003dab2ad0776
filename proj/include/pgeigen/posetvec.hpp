#pragma once

#include <map>

#include "pgeigen/lattice.hpp"
#include "pgeigen/scalars.hpp"

namespace pgeigen {

/// Element of the free module C[B_q(n)] with PhiPoly coefficients, stored
/// sparsely: only nonzero entries are kept, keyed by subspace in canonical
/// order.  The exact pipeline never materializes these densely.
class PosetVector {
 public:
  PosetVector() : p_(2), m_(1), ambient_(0) {}
  PosetVector(const Field& f, int ambient)
      : p_(f.p()), m_(f.m()), ambient_(ambient) {}

  /// The basis vector of a single subspace with coefficient 1.
  static PosetVector indicator(const Subspace& x);

  const Field& field() const { return Field::get(p_, m_); }
  int ambient() const { return ambient_; }
  int conductor() const { return p_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  const std::map<Subspace, PhiPoly>& entries() const { return entries_; }

  /// Coefficient of x (zero when absent).
  PhiPoly coeff(const Subspace& x) const;

  /// Accumulate c into the coefficient of x, dropping the entry when it
  /// cancels to zero.  x must belong to this vector's lattice.
  void add_term(const Subspace& x, const PhiPoly& c);

  PosetVector& operator+=(const PosetVector& o);
  PosetVector& operator-=(const PosetVector& o);
  PosetVector operator-() const;
  friend PosetVector operator+(PosetVector a, const PosetVector& b) { return a += b; }
  friend PosetVector operator-(PosetVector a, const PosetVector& b) { return a -= b; }
  friend PosetVector operator*(const PhiPoly& s, const PosetVector& v);
  friend bool operator==(const PosetVector& a, const PosetVector& b);
  friend bool operator!=(const PosetVector& a, const PosetVector& b) { return !(a == b); }

 private:
  int p_, m_, ambient_;
  std::map<Subspace, PhiPoly> entries_;
};

}  // namespace pgeigen
