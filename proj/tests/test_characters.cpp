#include <doctest.h>

#include <set>

#include "pgeigen/characters.hpp"
#include "test_util.hpp"

using namespace pgeigen;

static Character make_chi(const Field& f, std::vector<int> a) {
  return Character{f.p(), f.m(), static_cast<int>(a.size()), std::move(a)};
}

TEST_CASE("character values are trace roots of unity") {
  const Field& f3 = Field::get(3, 1);
  Character chi = make_chi(f3, {1, 2});
  GroupElem g{3, 1, {2, 2}};
  // a . g = 1*2 + 2*2 = 6 = 0 in F_3.
  CHECK(char_value(chi, g) == CycloNum::from_rational(3, Rat(1)));
  GroupElem h{3, 1, {1, 0}};
  CHECK(char_value(chi, h) == root_of_unity(3, 1));

  Character triv = make_chi(f3, {0, 0});
  CHECK(triv.trivial());
  for (const auto& e : group_elements(f3, 2))
    CHECK(char_value(triv, e) == CycloNum::from_rational(3, Rat(1)));
}

TEST_CASE("characters are multiplicative, exhaustively") {
  for (long q : {2L, 3L, 4L}) {
    const Field& f = Field::get_order(q);
    auto elems = group_elements(f, 2);
    for (const auto& chi : nontrivial_characters(f, 2))
      for (const auto& g : elems)
        for (const auto& h : elems) {
          GroupElem sum{f.p(), f.m(), {f.add_v(g.a[0], h.a[0]), f.add_v(g.a[1], h.a[1])}};
          CHECK(char_value(chi, sum) == char_value(chi, g) * char_value(chi, h));
        }
  }
}

TEST_CASE("nontrivial character roster") {
  for (long q : {2L, 3L, 4L, 5L}) {
    const Field& f = Field::get_order(q);
    for (int level = 1; level <= 2; ++level) {
      auto chis = nontrivial_characters(f, level);
      std::size_t qn = 1;
      for (int i = 0; i < level; ++i) qn *= static_cast<std::size_t>(q);
      CHECK(chis.size() == qn - 1);
      std::set<std::vector<int>> seen;
      for (const auto& chi : chis) {
        CHECK_FALSE(chi.trivial());
        CHECK(chi.level == level);
        CHECK(seen.insert(chi.a).second);
      }
      // Lexicographic order.
      for (std::size_t i = 1; i < chis.size(); ++i) CHECK(chis[i - 1].a < chis[i].a);
    }
  }
}

TEST_CASE("projection of a point against the sign character") {
  // q = 2, level 1: the nontrivial character separates the two boundary
  // points of B_2(2); the projection of the hat of the zero subspace is
  // their signed difference, and the hat of the full line is fixed by the
  // group so its nontrivial projection vanishes.
  const Field& f2 = Field::get(2, 1);
  Character chi = make_chi(f2, {1});
  Subspace zero = Subspace::zero(f2, 1);
  Subspace line = Subspace::full(f2, 1);

  PosetVector pr = project(chi, zero);
  Subspace e2 = Subspace::canonicalize(f2, 2, {{0, 1}});
  Subspace diag = Subspace::canonicalize(f2, 2, {{1, 1}});
  CHECK(pr.support_size() == 2);
  CHECK(pr.coeff(e2) == PhiPoly::from_rational(2, Rat(1)));
  CHECK(pr.coeff(diag) == PhiPoly::from_rational(2, Rat(-1)));

  CHECK(project(chi, line).is_zero());
}

TEST_CASE("projections are equivariant and complete") {
  const Field& f3 = Field::get(3, 1);
  int level = 1;
  auto elems = group_elements(f3, level);
  for (const Subspace& y : enumerate_all(f3, level)) {
    // Summing the projections over every character (trivial included)
    // recovers q^level times the hat indicator.
    PosetVector total = project(Character{3, 1, level, std::vector<int>(level, 0)}, y);
    for (const auto& chi : nontrivial_characters(f3, level)) {
      PosetVector pr = project(chi, y);
      total += pr;
      // Relabeling multiplies the chi-isotypic part by chi(g).
      for (const auto& g : elems) {
        PosetVector lhs;
        {
          PosetVector moved(f3, level + 1);
          for (const auto& [x, c] : pr.entries()) moved.add_term(act(g, x), c);
          lhs = moved;
        }
        PosetVector rhs = PhiPoly::constant(char_value(chi, g)) * pr;
        CHECK(lhs == rhs);
      }
    }
    PosetVector expect = PhiPoly::from_rational(3, Rat(3)) * PosetVector::indicator(hat(y));
    CHECK(total == expect);
  }
}

TEST_CASE("distinguished hyperplane is the kernel of the character vector") {
  // Frozen table at q = 3, level 2, plus the defining property in general.
  const Field& f3 = Field::get(3, 1);
  auto expect_cols = [&](std::vector<int> a) {
    return x_of_chi(make_chi(f3, std::move(a))).cols();
  };
  using Cols = std::vector<std::vector<int>>;
  CHECK(expect_cols({0, 1}) == Cols{{1, 0}});
  CHECK(expect_cols({1, 0}) == Cols{{0, 1}});
  CHECK(expect_cols({1, 1}) == Cols{{2, 1}});
  CHECK(expect_cols({1, 2}) == Cols{{1, 1}});
  CHECK(expect_cols({2, 2}) == Cols{{2, 1}});

  for (long q : {2L, 3L, 4L}) {
    const Field& f = Field::get_order(q);
    for (int level = 1; level <= 2; ++level)
      for (const auto& chi : nontrivial_characters(f, level)) {
        Subspace x = x_of_chi(chi);
        CHECK(x.ambient() == level);
        CHECK(x.dim() == level - 1);
        // Every column of x is orthogonal to the character vector.
        for (const auto& col : x.cols()) {
          int dot = 0;
          for (int i = 0; i < level; ++i) dot = f.add_v(dot, f.mul_v(chi.a[i], col[i]));
          CHECK(dot == 0);
        }
      }
  }
}

TEST_CASE("level mismatches are rejected") {
  const Field& f2 = Field::get(2, 1);
  Character chi = make_chi(f2, {1, 0});
  testutil::expect_error(errc::invalid_pair,
                         [&] { char_value(chi, GroupElem{2, 1, {1}}); });
  testutil::expect_error(errc::invalid_pair,
                         [&] { project(chi, Subspace::zero(f2, 1)); });
  testutil::expect_error(errc::invalid_pair,
                         [&] { project_boundary(chi, Subspace::zero(f2, 2)); });
  testutil::expect_error(errc::invalid_parameter,
                         [&] { x_of_chi(make_chi(f2, {0, 0})); });
  testutil::expect_error(errc::invalid_parameter,
                         [&] { nontrivial_characters(f2, -1); });
}
