#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "pgeigen/field.hpp"

namespace pgeigen {

/// Subspace of F_q^n held in Schubert normal form: the unique column reduced
/// echelon basis whose k columns have strictly increasing pivot rows (the last
/// nonzero row of each column), pivot entries 1, and zeros elsewhere in every
/// pivot row.  Entries are packed field values in [0, q); the normal form
/// makes bitwise comparison of images equality of subspaces.
class Subspace {
 public:
  /// The zero subspace {0} of F_q^ambient.
  static Subspace zero(const Field& f, int ambient);
  /// The full space F_q^ambient.
  static Subspace full(const Field& f, int ambient);
  /// Schubert normal form of the span of arbitrary generating vectors
  /// (each of length ambient, packed values).
  static Subspace canonicalize(const Field& f, int ambient,
                               const std::vector<std::vector<int>>& vectors);

  const Field& field() const { return Field::get(p_, m_); }
  int p() const { return p_; }
  int m() const { return m_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(cols_.size()); }
  /// Columns of the normal-form basis matrix, each of length ambient().
  const std::vector<std::vector<int>>& cols() const { return cols_; }
  /// Pivot row of each column, strictly increasing.
  const std::vector<int>& pivots() const { return pivots_; }

  /// Membership of a packed vector in the subspace.
  bool contains_vector(const std::vector<int>& v) const;

  /// Ordering: ambient, then dimension, then pivot pattern lexicographically,
  /// then the free entries in column-major order.  enumerate() emits
  /// subspaces in exactly this order.
  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

 private:
  Subspace(const Field& f, int ambient, std::vector<std::vector<int>> cols,
           std::vector<int> pivots);
  int p_, m_, ambient_;
  std::vector<std::vector<int>> cols_;
  std::vector<int> pivots_;

  friend class Lattice;
  friend std::vector<Subspace> enumerate(const Field&, int, int);
  friend Subspace hat(const Subspace&);
  friend Subspace meet_hyperplane(const Subspace&);
  friend Subspace embed(const Subspace&, int);
};

/// All k-dimensional subspaces of F_q^n in canonical order: pivot patterns
/// lexicographically, then free entries lexicographically (column-major).
std::vector<Subspace> enumerate(const Field& f, int n, int k);

/// All of B_q(n), ordered by dimension and then as enumerate().
std::vector<Subspace> enumerate_all(const Field& f, int n);

/// Whether x covers y in B_q(n): y is a subspace of x and dim x = dim y + 1.
bool covers(const Subspace& x, const Subspace& y);

/// Whether y is a subspace of x (same ambient required).
bool contains(const Subspace& x, const Subspace& y);

/// Whether x lies in the boundary of B_q(n), i.e. x is not a subspace of the
/// coordinate hyperplane F_q^{n-1} x {0}.
bool in_boundary(const Subspace& x);

/// span(x, e_{n+1}) inside F_q^{n+1} for x in B_q(n).
Subspace hat(const Subspace& x);

/// x itself when x already lies in F_q^n, else the hyperplane section
/// x meet (F_q^n x {0}), one dimension down.  Here x lives in F_q^{n+1}.
Subspace meet_hyperplane(const Subspace& x);

/// x in B_q(n) reinterpreted inside F_q^{new_ambient} (zero padding).
Subspace embed(const Subspace& x, int new_ambient);

/// Element of the unipotent group H(n+1, F_q) of maps fixing F_q^n pointwise
/// and e_{n+1} mod F_q^n: e_{n+1} -> e_{n+1} + sum_i a[i] e_{i+1}.
/// Isomorphic to the additive group F_q^n.
struct GroupElem {
  int p = 2, m = 1;
  std::vector<int> a;  // packed values, length n
  int level() const { return static_cast<int>(a.size()); }
  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

/// All q^n elements of H(n+1, F_q), ordered by a-vector lexicographically.
std::vector<GroupElem> group_elements(const Field& f, int n);

/// Image of x (in F_q^{n+1}) under the group element g (over F_q^n).
Subspace act(const GroupElem& g, const Subspace& x);

/// H-orbit of x in B_q(n+1), in canonical subspace order.
std::vector<Subspace> orbit(const Subspace& x);

/// Elements of H fixing x setwise, in group order.
std::vector<GroupElem> stabilizer(const Subspace& x);

/// Cached combinatorial data of one lattice B_q(n): the canonical subspace
/// ordering, index lookup, and both cover adjacency lists.
class Lattice {
 public:
  static const Lattice& get(const Field& f, int n);

  const Field& field() const { return Field::get(p_, m_); }
  int n() const { return n_; }
  const std::vector<Subspace>& all() const { return all_; }
  std::size_t size() const { return all_.size(); }
  const Subspace& at(std::size_t i) const { return all_[i]; }
  std::size_t index_of(const Subspace& x) const;
  /// Indices of the subspaces covering all()[i].
  const std::vector<std::size_t>& covers_above(std::size_t i) const { return up_[i]; }
  /// Indices of the subspaces covered by all()[i].
  const std::vector<std::size_t>& covers_below(std::size_t i) const { return down_[i]; }
  /// Half-open index range [first, last) of the dimension-k block.
  std::pair<std::size_t, std::size_t> level_range(int k) const;

 private:
  Lattice(const Field& f, int n);
  int p_, m_, n_;
  std::vector<Subspace> all_;
  std::vector<std::vector<std::size_t>> up_, down_;
  std::vector<std::size_t> level_offset_;
};

}  // namespace pgeigen
