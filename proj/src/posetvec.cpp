#include "pgeigen/posetvec.hpp"

namespace pgeigen {

PosetVector PosetVector::indicator(const Subspace& x) {
  PosetVector v(x.field(), x.ambient());
  v.entries_.emplace(x, PhiPoly::from_rational(x.p(), 1));
  return v;
}

PhiPoly PosetVector::coeff(const Subspace& x) const {
  auto it = entries_.find(x);
  return it == entries_.end() ? PhiPoly(p_) : it->second;
}

void PosetVector::add_term(const Subspace& x, const PhiPoly& c) {
  require(x.p() == p_ && x.m() == m_ && x.ambient() == ambient_, errc::invalid_pair,
          "subspace does not belong to this vector's lattice");
  if (c.is_zero()) return;
  auto [it, inserted] = entries_.emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) entries_.erase(it);
  }
}

PosetVector& PosetVector::operator+=(const PosetVector& o) {
  require(p_ == o.p_ && m_ == o.m_ && ambient_ == o.ambient_, errc::invalid_pair,
          "vectors live over different lattices");
  for (const auto& [x, c] : o.entries_) add_term(x, c);
  return *this;
}

PosetVector& PosetVector::operator-=(const PosetVector& o) {
  require(p_ == o.p_ && m_ == o.m_ && ambient_ == o.ambient_, errc::invalid_pair,
          "vectors live over different lattices");
  for (const auto& [x, c] : o.entries_) add_term(x, -c);
  return *this;
}

PosetVector PosetVector::operator-() const {
  PosetVector r(field(), ambient_);
  for (const auto& [x, c] : entries_) r.entries_.emplace(x, -c);
  return r;
}

PosetVector operator*(const PhiPoly& s, const PosetVector& v) {
  detail::check_same_conductor(s.conductor(), v.p_);
  PosetVector r(v.field(), v.ambient_);
  if (s.is_zero()) return r;
  for (const auto& [x, c] : v.entries_) {
    PhiPoly scaled = s * c;
    if (!scaled.is_zero()) r.entries_.emplace(x, std::move(scaled));
  }
  return r;
}

bool operator==(const PosetVector& a, const PosetVector& b) {
  require(a.p_ == b.p_ && a.m_ == b.m_ && a.ambient_ == b.ambient_, errc::invalid_pair,
          "vectors live over different lattices");
  return a.entries_ == b.entries_;
}

}  // namespace pgeigen
