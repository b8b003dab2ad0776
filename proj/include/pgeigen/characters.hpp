#pragma once

#include "pgeigen/posetvec.hpp"

namespace pgeigen {

/// Additive character chi_a of H(n+1, F_q) identified with F_q^n:
///   chi_a(g) = zeta_p^{Tr(a . g)}
/// where a . g is the F_q dot product and Tr the absolute trace to F_p.
/// This realization is normative for the whole pipeline.
struct Character {
  int p = 2, m = 1;
  int level = 0;          // n: the character lives on H(n+1, F_q)
  std::vector<int> a;     // packed values, length n

  const Field& field() const { return Field::get(p, m); }
  bool trivial() const {
    for (int v : a)
      if (v != 0) return false;
    return true;
  }
  friend bool operator==(const Character&, const Character&) = default;
  friend auto operator<=>(const Character&, const Character&) = default;
};

/// chi(g) as a root of unity in Q(zeta_p).
CycloNum char_value(const Character& chi, const GroupElem& g);

/// The q^n - 1 nontrivial characters of H(n+1, F_q), ordered by their
/// a-vector lexicographically.
std::vector<Character> nontrivial_characters(const Field& f, int level);

/// Isotypic projection of the orbit of x in the boundary of B_q(n+1):
///   p(chi)(x) = sum_{g in H} conj(chi(g)) g(x).
PosetVector project_boundary(const Character& chi, const Subspace& x);

/// p(chi) applied to hat(y) for y in B_q(n); the building block of the
/// isotypic decomposition of the theta image.
PosetVector project(const Character& chi, const Subspace& y);

/// The unique hyperplane X of F_q^n with a nonzero chi-projection, found by
/// exhaustive search; nonexistence or nonuniqueness is a fatal invariant
/// violation.  Coincides with the orthogonal complement of a.
Subspace x_of_chi(const Character& chi);

}  // namespace pgeigen
