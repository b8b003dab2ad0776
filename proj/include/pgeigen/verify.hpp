#pragma once

#include <string>
#include <vector>

#include "pgeigen/eigenbasis.hpp"

namespace pgeigen {

struct CheckFailure {
  std::string check;    // which named subcheck failed
  std::string witness;  // the offending object(s), serialized
};

struct SuiteReport {
  std::string suite;
  long q = 0;
  int n = 0;
  std::string phi_mode;  // "symbolic" for the exact suites, "rational" numeric
  long checks = 0;
  std::vector<CheckFailure> failures;
  double seconds = 0.0;
  bool skipped = false;
  std::string skip_reason;

  bool pass() const { return !skipped && failures.empty(); }
};

struct VerifyOptions {
  /// 0 runs every pair; a positive value caps pair checks at a seeded random
  /// sample of this size (draws are rng() % m with mt19937_64, so results
  /// are reproducible across platforms for a fixed seed).
  long pair_budget = 0;
  unsigned long long seed = 0;
  /// Threads for the per-vector and per-pair checks; results are merged in
  /// deterministic order, so only wall time depends on this.
  int workers = 1;
  /// Suites skip (with a reason) rather than run when the lattice they need
  /// has more subspaces than this.
  long max_lattice = 20000;
};

/// A v_alpha = lambda_{weight(alpha)} v_alpha as exact polynomials in phi for
/// every index, each basis vector nonzero, and the per-weight multiplicities
/// equal to the Gaussian binomials.
SuiteReport suite_eigen(const Field& f, int n, const VerifyOptions& opts = {});

/// <v_alpha, v_beta> = 0 for distinct indices (all pairs, or a seeded sample
/// under pair_budget) and <v_alpha, v_alpha> != 0, in exact arithmetic.
SuiteReport suite_orthogonality(const Field& f, int n, const VerifyOptions& opts = {});

/// Tridiagonality of the dual matrix on the eigenbasis: <v_beta, A* v_alpha>
/// vanishes exactly whenever the weights differ by 2 or more, and for n >= 2
/// some weight-adjacent pair has a nonzero coefficient.
SuiteReport suite_qpoly(const Field& f, int n, const VerifyOptions& opts = {});

/// The structural identities behind the construction, checked exhaustively
/// on B_q(n) with top level n+1: weighted symmetry of A, orbit and stabilizer
/// sizes, biregularity between orbit classes, the isotypic decomposition of
/// the boundary, the theta / embedding / intertwiner exchange relations for
/// A and its dual, eigenvector lifting, inner product scalings, and the
/// subspace-counting identities.  Requires n >= 1.
SuiteReport suite_structure(const Field& f, int n, const VerifyOptions& opts = {});

/// Independent numeric check at a rational phi > 0: a dense copy of A is
/// eigendecomposed by an off-the-shelf solver, the spectrum is matched
/// against the closed form (absolute tolerance per eigenvalue), eigenvalues
/// must be numerically real, and every exact basis vector must satisfy
/// ||A v - lambda v||_inf <= tol * ||v||_inf.
SuiteReport suite_crosscheck(const Field& f, int n, const Rat& phi, double tol,
                             const VerifyOptions& opts = {});

}  // namespace pgeigen
