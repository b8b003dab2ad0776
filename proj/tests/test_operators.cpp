#include <doctest.h>

#include "pgeigen/operators.hpp"
#include "pgeigen/qcomb.hpp"
#include "test_util.hpp"

using namespace pgeigen;

// phi polynomial with the given rational coefficients, lowest degree first.
static PhiPoly poly(int p, std::vector<Rat> cs) {
  PhiPoly out(p);
  for (std::size_t i = 0; i < cs.size(); ++i)
    out += PhiPoly::monomial(p, static_cast<int>(i), cs[i]);
  return out;
}

TEST_CASE("weighted adjacency entries") {
  const Field& f2 = Field::get(2, 1);
  Subspace zero = Subspace::zero(f2, 2);
  Subspace ex = Subspace::canonicalize(f2, 2, {{1, 0}});
  Subspace ey = Subspace::canonicalize(f2, 2, {{0, 1}});
  Subspace full = Subspace::full(f2, 2);

  // Moving down one level contributes 1.
  CHECK(adjacency_entry(ex, zero) == poly(2, {Rat(1)}));
  CHECK(adjacency_entry(full, ex) == poly(2, {Rat(1)}));
  // Moving up one level contributes phi q^{dim x}.
  CHECK(adjacency_entry(zero, ex) == poly(2, {Rat(0), Rat(1)}));
  CHECK(adjacency_entry(ex, full) == poly(2, {Rat(0), Rat(2)}));
  // Diagonal contributes (phi - 1)/(q - 1) q^{dim x}.
  CHECK(adjacency_entry(zero, zero) == poly(2, {Rat(-1), Rat(1)}));
  CHECK(adjacency_entry(ex, ex) == poly(2, {Rat(-2), Rat(2)}));
  CHECK(adjacency_entry(full, full) == poly(2, {Rat(-4), Rat(4)}));
  // Everything else vanishes.
  CHECK(adjacency_entry(ex, ey).is_zero());
  CHECK(adjacency_entry(full, zero).is_zero());

  const Field& f3 = Field::get(3, 1);
  Subspace line3 = Subspace::canonicalize(f3, 2, {{1, 0}});
  CHECK(adjacency_entry(line3, line3) == poly(3, {Rat(-3, 2), Rat(3, 2)}));

  testutil::expect_error(errc::invalid_pair,
                         [&] { adjacency_entry(zero, Subspace::zero(f2, 3)); });
}

TEST_CASE("applying the adjacency matrix agrees with its entries") {
  for (long q : {2L, 3L}) {
    const Field& f = Field::get_order(q);
    for (const Subspace& y : enumerate_all(f, 2)) {
      PosetVector col = apply_adjacency(PosetVector::indicator(y));
      for (const Subspace& x : enumerate_all(f, 2))
        CHECK(col.coeff(x) == adjacency_entry(x, y));
    }
  }
}

TEST_CASE("dual matrix is diagonal with entries q^{-dim}") {
  const Field& f3 = Field::get(3, 1);
  Subspace plane = Subspace::canonicalize(f3, 3, {{1, 0, 0}, {0, 1, 0}});
  PosetVector v = apply_dual(PosetVector::indicator(plane));
  CHECK(v.support_size() == 1);
  CHECK(v.coeff(plane) == poly(3, {Rat(1, 9)}));

  for (const Subspace& x : enumerate_all(f3, 2)) {
    PosetVector d = apply_dual(PosetVector::indicator(x));
    CHECK(d.support_size() == 1);
    CHECK(d.coeff(x) == poly(3, {q_power(3, -x.dim())}));
  }
}

TEST_CASE("boundary sum operator on the smallest lattice") {
  // theta on B_2(1): the zero subspace goes to the two boundary points of
  // B_2(2); the full line goes to the whole plane.
  const Field& f2 = Field::get(2, 1);
  Subspace zero = Subspace::zero(f2, 1);
  Subspace line = Subspace::full(f2, 1);

  PosetVector tz = theta(PosetVector::indicator(zero));
  CHECK(tz.support_size() == 2);
  CHECK(tz.coeff(Subspace::canonicalize(f2, 2, {{0, 1}})) == poly(2, {Rat(1)}));
  CHECK(tz.coeff(Subspace::canonicalize(f2, 2, {{1, 1}})) == poly(2, {Rat(1)}));

  PosetVector tl = theta(PosetVector::indicator(line));
  CHECK(tl.support_size() == 1);
  CHECK(tl.coeff(Subspace::full(f2, 2)) == poly(2, {Rat(1)}));

  // In general theta(x) sums the boundary covers of the embedded x.
  const Field& f3 = Field::get(3, 1);
  for (const Subspace& x : enumerate_all(f3, 2)) {
    PosetVector t = theta(PosetVector::indicator(x));
    for (const auto& [z, c] : t.entries()) {
      CHECK(in_boundary(z));
      CHECK(covers(z, embed(x, 3)));
      CHECK(c == poly(3, {Rat(1)}));
    }
    CHECK(t.support_size() == static_cast<std::size_t>(q_power(3, 2 - x.dim()).get_num().get_si()));
  }
}

TEST_CASE("embedding and relabeling of vectors") {
  const Field& f2 = Field::get(2, 1);
  Subspace line = Subspace::full(f2, 1);
  PosetVector v = poly(2, {Rat(0), Rat(3)}) * PosetVector::indicator(line);
  PosetVector e = embed_vector(v, 3);
  CHECK(e.ambient() == 3);
  CHECK(e.support_size() == 1);
  CHECK(e.coeff(embed(line, 3)) == poly(2, {Rat(0), Rat(3)}));

  // act_vector permutes the support, preserving coefficients.
  GroupElem g{2, 1, {1}};
  Subspace e2 = Subspace::canonicalize(f2, 2, {{0, 1}});
  Subspace diag = Subspace::canonicalize(f2, 2, {{1, 1}});
  PosetVector w = PosetVector::indicator(e2) + poly(2, {Rat(2)}) * PosetVector::indicator(diag);
  PosetVector aw = act_vector(g, w);
  CHECK(aw.coeff(diag) == poly(2, {Rat(1)}));
  CHECK(aw.coeff(e2) == poly(2, {Rat(2)}));
}

TEST_CASE("isotypic relabeling of a point vector") {
  // The q = 2, n = 2 chi-indexed eigenvector: lambda(chi) mu(X(chi)) applied
  // to the point of B_2(0) is the signed difference of the two boundary
  // points of B_2(2).
  const Field& f2 = Field::get(2, 1);
  Character chi{2, 1, 1, {1}};
  Subspace x = x_of_chi(chi);
  CHECK(x == Subspace::zero(f2, 1));

  PosetVector base = PosetVector::indicator(Subspace::zero(f2, 0));
  PosetVector moved = mu_x(x, base);
  CHECK(moved.ambient() == 1);
  CHECK(moved.coeff(Subspace::zero(f2, 1)) == poly(2, {Rat(1)}));

  PosetVector out = lambda_chi(chi, moved);
  CHECK(out.ambient() == 2);
  CHECK(out.support_size() == 2);
  CHECK(out.coeff(Subspace::canonicalize(f2, 2, {{0, 1}})) == poly(2, {Rat(1)}));
  CHECK(out.coeff(Subspace::canonicalize(f2, 2, {{1, 1}})) == poly(2, {Rat(-1)}));
}

TEST_CASE("hyperplane relabeling is a poset isomorphism") {
  const Field& f3 = Field::get(3, 1);
  Subspace hyper = Subspace::canonicalize(f3, 2, {{2, 1}});
  // The full line of B_3(1) maps to the hyperplane itself.
  PosetVector v = mu_x(hyper, PosetVector::indicator(Subspace::full(f3, 1)));
  CHECK(v.support_size() == 1);
  CHECK(v.coeff(hyper) == poly(3, {Rat(1)}));

  // Dimension is preserved and distinct subspaces stay distinct.
  for (const Subspace& y : enumerate_all(f3, 1)) {
    PosetVector img = mu_x(hyper, PosetVector::indicator(y));
    CHECK(img.support_size() == 1);
    CHECK(img.entries().begin()->first.dim() == y.dim());
  }

  testutil::expect_error(errc::invalid_parameter, [&] {
    mu_x(Subspace::full(f3, 2), PosetVector::indicator(Subspace::zero(f3, 1)));
  });
}

TEST_CASE("inner product weights by level mass") {
  const Field& f2 = Field::get(2, 1);
  Subspace zero = Subspace::zero(f2, 2);
  Subspace ex = Subspace::canonicalize(f2, 2, {{1, 0}});
  Subspace full = Subspace::full(f2, 2);

  PosetVector vz = PosetVector::indicator(zero);
  PosetVector vx = PosetVector::indicator(ex);
  PosetVector vf = PosetVector::indicator(full);

  CHECK(inner(vz, vz) == poly(2, {Rat(1)}));           // phi^0 q^0
  CHECK(inner(vx, vx) == poly(2, {Rat(0), Rat(1)}));   // phi^1 q^0
  CHECK(inner(vf, vf) == poly(2, {Rat(0), Rat(0), Rat(2)}));  // phi^2 q^1
  CHECK(inner(vz, vx).is_zero());

  // Sesquilinearity: the left argument is conjugated.
  PhiPoly z = PhiPoly::constant(root_of_unity(3, 1));
  const Field& f3 = Field::get(3, 1);
  PosetVector w = PosetVector::indicator(Subspace::zero(f3, 1));
  CHECK(inner(z * w, w) == PhiPoly::constant(root_of_unity(3, 2)));
  CHECK(inner(w, z * w) == z);

  testutil::expect_error(errc::invalid_pair,
                         [&] { inner(vz, PosetVector::indicator(Subspace::zero(f2, 3))); });
}

TEST_CASE("adjacency is self-adjoint for the weighted inner product") {
  for (long q : {2L, 3L}) {
    const Field& f = Field::get_order(q);
    int p = f.p();
    // A mixed test vector with scalar coefficients of both degrees.
    PosetVector u(f, 2), v(f, 2);
    auto all = enumerate_all(f, 2);
    for (std::size_t i = 0; i < all.size(); ++i) {
      u.add_term(all[i], poly(p, {Rat(static_cast<long>(i) + 1)}));
      v.add_term(all[i], poly(p, {Rat(1), Rat(static_cast<long>(i % 3))}));
    }
    CHECK(inner(apply_adjacency(u), v) == inner(u, apply_adjacency(v)));
    CHECK(inner(apply_dual(u), v) == inner(u, apply_dual(v)));
  }
}

TEST_CASE("inner products transform predictably under the construction maps") {
  // <theta u, theta v> = phi q^n <u, v>, <embed u, embed v> = <u, v>, and
  // theta images are orthogonal to embedded ones.
  for (long q : {2L, 3L}) {
    const Field& f = Field::get_order(q);
    int p = f.p();
    int n = 2;
    PhiPoly scale = PhiPoly::monomial(p, 1, q_power(q, n));
    auto all = enumerate_all(f, n);
    PosetVector u(f, n), v(f, n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      u.add_term(all[i], poly(p, {Rat(1), Rat(static_cast<long>(i))}));
      v.add_term(all[i], poly(p, {Rat(static_cast<long>(2 * i) + 1)}));
    }
    CHECK(inner(theta(u), theta(v)) == scale * inner(u, v));
    CHECK(inner(embed_vector(u, n + 1), embed_vector(v, n + 1)) == inner(u, v));
    CHECK(inner(theta(u), embed_vector(v, n + 1)).is_zero());
  }
}

TEST_CASE("graded pieces of the adjacency matrix") {
  const Field& f2 = Field::get(2, 1);
  Subspace ex = Subspace::canonicalize(f2, 2, {{1, 0}});
  PosetVector v = PosetVector::indicator(ex);

  PosetVector up = updown(UpDownKind::U, 1, v);
  CHECK(up.support_size() == 1);
  CHECK(up.coeff(Subspace::full(f2, 2)) == poly(2, {Rat(1)}));

  PosetVector down = updown(UpDownKind::D, 1, v);
  CHECK(down.support_size() == 1);
  CHECK(down.coeff(Subspace::zero(f2, 2)) == poly(2, {Rat(1)}));

  CHECK(updown(UpDownKind::I, 1, v) == v);
  // Entries outside the stated level are dropped.
  CHECK(updown(UpDownKind::U, 0, v).is_zero());
  CHECK(updown(UpDownKind::I, 2, v).is_zero());

  // A = U_k + phi q^{k-1} D_k + (phi-1)/(q-1) q^k I_k on each level.
  for (long q : {2L, 3L}) {
    const Field& f = Field::get_order(q);
    int p = f.p();
    for (const Subspace& y : enumerate_all(f, 2)) {
      int k = y.dim();
      PosetVector ind = PosetVector::indicator(y);
      PosetVector expect = updown(UpDownKind::U, k, ind);
      expect += PhiPoly::monomial(p, 1, q_power(q, k - 1)) * updown(UpDownKind::D, k, ind);
      PhiPoly diag = poly(p, {Rat(-q_power(q, k) / Rat(q - 1)), q_power(q, k) / Rat(q - 1)});
      expect += diag * updown(UpDownKind::I, k, ind);
      CHECK(apply_adjacency(ind) == expect);
    }
  }
}

TEST_CASE("support restrictions are enforced") {
  const Field& f2 = Field::get(2, 1);
  Character chi{2, 1, 2, {0, 1}};
  Subspace x = x_of_chi(chi);  // a hyperplane of F_2^2
  // A vector supported outside X(chi) is rejected.
  PosetVector bad(f2, 2);
  Subspace outside = Subspace::full(f2, 2);
  bad.add_term(outside, PhiPoly::from_rational(2, Rat(1)));
  testutil::expect_error(errc::invalid_support, [&] { lambda_chi(chi, bad); });

  // Ambient mismatch with the character level.
  testutil::expect_error(errc::invalid_pair, [&] {
    lambda_chi(chi, PosetVector::indicator(Subspace::zero(f2, 1)));
  });
}
