#pragma once

#include <utility>

#include "pgeigen/scalars.hpp"

namespace pgeigen {

/// Gaussian binomial [n choose k]_q: the number of k-dimensional subspaces of
/// F_q^n.  Computed by the Pascal-type recurrence
///   [n+1 k] = [n k] + [n k-1] + (q^n - 1) [n-1 k-1]
/// with [0 k] = delta(0,k) and zero for negative arguments, memoized.
/// q may be any integer >= 2 (primality is not needed for the count).
Int qbinom(long n, long k, long q);

/// Galois number G_q(n) = sum_k [n choose k]_q, the total number of subspaces.
Int galois(long n, long q);

/// q = p^m for p prime; returns (p, m) or rejects q.
std::pair<int, int> prime_power(long q);

/// q^e as an exact rational, for any integer exponent.
Rat q_power(long q, long e);

/// Eigenvalue of the weighted adjacency matrix on the weight-k eigenspace:
///   (phi q^{n-k} - q^k) / (q - 1)
/// as an exact linear polynomial in phi.  Requires 0 <= k <= n and q a prime
/// power (the conductor of the result is the characteristic of F_q).
PhiPoly eigenvalue_poly(int n, int k, long q);

/// Unnormalized Kemp weight of a k-dimensional subspace: phi^k q^{k(k-1)/2}.
PhiPoly kemp_weight(int k, long q);

/// Normalizing product P_q(n) = prod_{k=0}^{n-1} (1 + phi q^k); the total
/// Kemp mass sum_X w(X) over B_q(n) by the q-binomial theorem.
PhiPoly pq_product(int n, long q);

}  // namespace pgeigen
