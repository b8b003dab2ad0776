#pragma once

#include "pgeigen/operators.hpp"

namespace pgeigen {

/// One step of an eigenvector index: append 0 or 1 (one ambient dimension up)
/// or a nontrivial character (two ambient dimensions up).
struct IndexEntry {
  enum class Kind { zero, one, chi };
  Kind kind = Kind::zero;
  Character character;  // meaningful only when kind == chi

  friend bool operator==(const IndexEntry&, const IndexEntry&) = default;
  friend auto operator<=>(const IndexEntry&, const IndexEntry&) = default;
};

/// Index of one canonical eigenvector of B_q(n).  Well-formed sequences are
/// produced by the recursion: starting from the empty index at level 0,
/// appending 0 or 1 raises the level by one, appending a nontrivial character
/// of level l+1 raises the level from l to l+2; the final level is n.
struct IndexSeq {
  int p = 2, m = 1;
  int n = 0;
  std::vector<IndexEntry> entries;

  const Field& field() const { return Field::get(p, m); }
  /// Number of nonzero entries; the eigenvector lies in the weight() block.
  int weight() const;

  friend bool operator==(const IndexSeq&, const IndexSeq&) = default;
  friend auto operator<=>(const IndexSeq&, const IndexSeq&) = default;
};

/// Throws invalid-index unless alpha is well formed.
void validate_index(const IndexSeq& alpha);

/// All indices for B_q(n) in canonical order: recursively, for each index of
/// B_q(n-1) its 0-extension then its 1-extension; afterwards, for each
/// nontrivial character (a-vector lexicographic) the chi-extensions of every
/// index of B_q(n-2).
std::vector<IndexSeq> enumerate_indices(const Field& f, int n);

/// The eigenvector v_alpha, built by the defining recursion
///   v_{beta 0} = q^k v_beta + theta(v_beta)
///   v_{beta 1} = phi q^{n-1-k} v_beta - theta(v_beta)      (k = weight(beta))
///   v_{beta chi} = lambda(chi) mu(X(chi)) v_beta
/// from v_{()} = the point of B_q(0).  Memoized across calls.
PosetVector build_vector(const IndexSeq& alpha);

struct BasisEntry {
  IndexSeq index;
  PosetVector vec;
};

/// The full eigenbasis of B_q(n) in enumerate_indices order, built bottom-up
/// level by level (each theta image computed once per parent).
std::vector<BasisEntry> build_basis(const Field& f, int n);

}  // namespace pgeigen
