#include "pgeigen/operators.hpp"

#include "pgeigen/qcomb.hpp"

namespace pgeigen {

namespace {

// (phi - 1)/(q - 1) * q^k
PhiPoly diagonal_coeff(int p, long q, int k) {
  Rat scale = q_power(q, k) / Rat(q - 1);
  return PhiPoly::monomial(p, 1, scale) - PhiPoly::from_rational(p, scale);
}

// phi * q^k
PhiPoly down_coeff(int p, long q, int k) { return PhiPoly::monomial(p, 1, q_power(q, k)); }

}  // namespace

PhiPoly adjacency_entry(const Subspace& x, const Subspace& y) {
  require(x.p() == y.p() && x.m() == y.m() && x.ambient() == y.ambient(), errc::invalid_pair,
          "entries are indexed by one lattice");
  int p = x.p();
  long q = x.field().q();
  if (x == y) return diagonal_coeff(p, q, x.dim());
  if (x.dim() == y.dim() + 1 && contains(x, y)) return PhiPoly::from_rational(p, 1);
  if (y.dim() == x.dim() + 1 && contains(y, x)) return down_coeff(p, q, x.dim());
  return PhiPoly(p);
}

PosetVector apply_adjacency(const PosetVector& v) {
  const Field& f = v.field();
  const Lattice& L = Lattice::get(f, v.ambient());
  int p = f.p();
  long q = f.q();
  PosetVector out(f, v.ambient());
  for (const auto& [x, c] : v.entries()) {
    std::size_t i = L.index_of(x);
    int k = x.dim();
    for (std::size_t j : L.covers_above(i)) out.add_term(L.at(j), c);
    if (k > 0) {
      PhiPoly dc = down_coeff(p, q, k - 1) * c;
      for (std::size_t j : L.covers_below(i)) out.add_term(L.at(j), dc);
    }
    out.add_term(x, diagonal_coeff(p, q, k) * c);
  }
  return out;
}

PosetVector apply_dual(const PosetVector& v) {
  const Field& f = v.field();
  PosetVector out(f, v.ambient());
  for (const auto& [x, c] : v.entries())
    out.add_term(x, PhiPoly::from_rational(f.p(), q_power(f.q(), -x.dim())) * c);
  return out;
}

PosetVector embed_vector(const PosetVector& v, int new_ambient) {
  PosetVector out(v.field(), new_ambient);
  for (const auto& [x, c] : v.entries()) out.add_term(embed(x, new_ambient), c);
  return out;
}

PosetVector act_vector(const GroupElem& g, const PosetVector& v) {
  PosetVector out(v.field(), v.ambient());
  for (const auto& [x, c] : v.entries()) out.add_term(act(g, x), c);
  return out;
}

PosetVector theta(const PosetVector& v) {
  const Field& f = v.field();
  int n = v.ambient();
  const Lattice& L = Lattice::get(f, n + 1);
  PosetVector out(f, n + 1);
  for (const auto& [x, c] : v.entries()) {
    std::size_t i = L.index_of(embed(x, n + 1));
    for (std::size_t j : L.covers_above(i)) {
      const Subspace& z = L.at(j);
      if (in_boundary(z)) out.add_term(z, c);
    }
  }
  return out;
}

PosetVector lambda_chi(const Character& chi, const PosetVector& v) {
  require(chi.p == v.field().p() && chi.m == v.field().m(), errc::invalid_pair,
          "character and vector fields differ");
  require(v.ambient() == chi.level, errc::invalid_pair,
          "lambda of a level-n character expects vectors over B_q(n)");
  const Field& f = v.field();
  Subspace x = x_of_chi(chi);
  PosetVector out(f, chi.level + 1);
  for (const auto& [y, c] : v.entries()) {
    require(contains(x, y), errc::invalid_support,
            "support must lie below the character's hyperplane");
    PhiPoly scaled = PhiPoly::from_rational(f.p(), q_power(f.q(), -y.dim())) * c;
    PosetVector pr = project(chi, y);
    for (const auto& [z, w] : pr.entries()) out.add_term(z, scaled * w);
  }
  return out;
}

PosetVector mu_x(const Subspace& x, const PosetVector& v) {
  const Field& f = x.field();
  int n = x.ambient();
  require(x.dim() == n - 1, errc::invalid_parameter, "relabeling needs a hyperplane");
  require(v.field().p() == x.p() && v.field().m() == x.m() && v.ambient() == n - 1,
          errc::invalid_pair, "vector must live over B_q(n-1)");
  PosetVector out(f, n);
  for (const auto& [y, c] : v.entries()) {
    std::vector<std::vector<int>> image;
    image.reserve(y.dim());
    for (const auto& ycol : y.cols()) {
      std::vector<int> w(n, 0);
      for (int i = 0; i < n - 1; ++i) {
        if (ycol[i] == 0) continue;
        for (int r = 0; r < n; ++r) w[r] = f.add_v(w[r], f.mul_v(ycol[i], x.cols()[i][r]));
      }
      image.push_back(std::move(w));
    }
    Subspace z = Subspace::canonicalize(f, n, image);
    require(z.dim() == y.dim(), errc::invariant_violated, "relabeling degenerated");
    out.add_term(z, c);
  }
  return out;
}

PhiPoly inner(const PosetVector& u, const PosetVector& v) {
  require(u.field().p() == v.field().p() && u.field().m() == v.field().m() &&
              u.ambient() == v.ambient(),
          errc::invalid_pair, "inner product needs one lattice");
  const Field& f = u.field();
  PhiPoly acc(f.p());
  auto iu = u.entries().begin();
  auto iv = v.entries().begin();
  while (iu != u.entries().end() && iv != v.entries().end()) {
    if (iu->first < iv->first) {
      ++iu;
    } else if (iv->first < iu->first) {
      ++iv;
    } else {
      acc += iu->second.conjugate() * iv->second * kemp_weight(iu->first.dim(), f.q());
      ++iu;
      ++iv;
    }
  }
  return acc;
}

PosetVector updown(UpDownKind kind, int k, const PosetVector& v) {
  const Field& f = v.field();
  const Lattice& L = Lattice::get(f, v.ambient());
  PosetVector out(f, v.ambient());
  for (const auto& [x, c] : v.entries()) {
    if (x.dim() != k) continue;
    switch (kind) {
      case UpDownKind::U:
        for (std::size_t j : L.covers_above(L.index_of(x))) out.add_term(L.at(j), c);
        break;
      case UpDownKind::D:
        for (std::size_t j : L.covers_below(L.index_of(x))) out.add_term(L.at(j), c);
        break;
      case UpDownKind::I:
        out.add_term(x, c);
        break;
    }
  }
  return out;
}

}  // namespace pgeigen
