#pragma once

#include "pgeigen/characters.hpp"
#include "pgeigen/posetvec.hpp"

namespace pgeigen {

/// Entry A(x, y) of the weighted adjacency matrix on B_q(n):
///   1                       when x covers y,
///   phi q^{dim x}           when y covers x,
///   (phi - 1)/(q - 1) q^{dim x}  on the diagonal,
///   0                       otherwise.
PhiPoly adjacency_entry(const Subspace& x, const Subspace& y);

/// A applied to v, walking cover relations on the sparse support.
PosetVector apply_adjacency(const PosetVector& v);

/// The diagonal dual matrix: scales the coefficient of x by q^{-dim x}.
PosetVector apply_dual(const PosetVector& v);

/// Coefficientwise reinterpretation of v inside C[B_q(new_ambient)].
PosetVector embed_vector(const PosetVector& v, int new_ambient);

/// Relabel the support of v (over B_q(n+1)) by the group element g.
PosetVector act_vector(const GroupElem& g, const PosetVector& v);

/// theta_n: C[B_q(n)] -> C[B_q(n+1)], x -> sum of its orbit class
/// { z in boundary : z meet F_q^n = x }, i.e. the boundary covers of x.
PosetVector theta(const PosetVector& v);

/// lambda(chi): C[B_q(X(chi))] -> C[B_q(n+1)], y -> q^{-dim y} p(chi)(hat y).
/// The support of v must consist of subspaces of X(chi).
PosetVector lambda_chi(const Character& chi, const PosetVector& v);

/// mu(x): the poset isomorphism B_q(n-1) -> B_q(x) for a hyperplane x of
/// F_q^n, relabeling y by (columns of x) * (columns of y).
PosetVector mu_x(const Subspace& x, const PosetVector& v);

/// Unnormalized Kemp inner product
///   <u, v> = sum_x conj(u(x)) v(x) phi^{dim x} q^{C(dim x, 2)}.
PhiPoly inner(const PosetVector& u, const PosetVector& v);

/// The three graded pieces of A: U raises from level k, D lowers from level
/// k, I restricts to level k.  Entries of v outside level k are dropped.
enum class UpDownKind { U, D, I };
PosetVector updown(UpDownKind kind, int k, const PosetVector& v);

}  // namespace pgeigen
