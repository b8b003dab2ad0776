#include <doctest.h>

#include <map>

#include "pgeigen/field.hpp"
#include "test_util.hpp"

using namespace pgeigen;

TEST_CASE("moduli are the fixed table entries") {
  CHECK(Field::get(2, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field::get(7, 1).modulus() == std::vector<int>{0, 1});
  CHECK(Field::get(2, 2).modulus() == std::vector<int>{1, 1, 1});
  CHECK(Field::get(2, 3).modulus() == std::vector<int>{1, 1, 0, 1});
  CHECK(Field::get(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});
  CHECK(Field::get(3, 2).modulus() == std::vector<int>{1, 0, 1});
}

TEST_CASE("prime field arithmetic is mod p") {
  const Field& f5 = Field::get(5, 1);
  CHECK(f5.q() == 5);
  CHECK(f5.add_v(3, 4) == 2);
  CHECK(f5.mul_v(3, 4) == 2);
  CHECK(f5.neg_v(2) == 3);
  CHECK(f5.inv_v(2) == 3);
  CHECK(f5.inv_v(4) == 4);
  for (int a = 0; a < 5; ++a) CHECK(f5.trace_v(a) == a);
}

TEST_CASE("known products in the quartic and quadratic extensions") {
  // F_4 = F_2[w]/(w^2+w+1): packed 2 = w, 3 = w+1.
  const Field& f4 = Field::get(2, 2);
  CHECK(f4.mul_v(2, 2) == 3);  // w^2 = w + 1
  CHECK(f4.mul_v(2, 3) == 1);  // w (w+1) = 1
  CHECK(f4.inv_v(2) == 3);
  CHECK(f4.inv_v(3) == 2);

  // F_9 = F_3[x]/(x^2+1): packed 3 = x.
  const Field& f9 = Field::get(3, 2);
  CHECK(f9.mul_v(3, 3) == 2);  // x^2 = -1
  CHECK(f9.inv_v(3) == 6);     // x * 2x = 2x^2 = 1
}

TEST_CASE("element and value conversions are inverse") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 11L, 13L, 16L}) {
    const Field& f = Field::get_order(q);
    for (int v = 0; v < f.q(); ++v) {
      FieldElem e = f.element(v);
      CHECK(static_cast<int>(e.coeffs.size()) == f.m());
      for (int c : e.coeffs) {
        CHECK(c >= 0);
        CHECK(c < f.p());
      }
      CHECK(f.value(e) == v);
    }
  }
}

TEST_CASE("field axioms hold exhaustively") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L}) {
    const Field& f = Field::get_order(q);
    int n = f.q();
    for (int a = 0; a < n; ++a) {
      CHECK(f.add_v(a, 0) == a);
      CHECK(f.mul_v(a, 1) == a);
      CHECK(f.mul_v(a, 0) == 0);
      CHECK(f.add_v(a, f.neg_v(a)) == 0);
      if (a != 0) CHECK(f.mul_v(a, f.inv_v(a)) == 1);
      for (int b = 0; b < n; ++b) {
        CHECK(f.add_v(a, b) == f.add_v(b, a));
        CHECK(f.mul_v(a, b) == f.mul_v(b, a));
        for (int c = 0; c < n; ++c) {
          CHECK(f.add_v(f.add_v(a, b), c) == f.add_v(a, f.add_v(b, c)));
          CHECK(f.mul_v(f.mul_v(a, b), c) == f.mul_v(a, f.mul_v(b, c)));
          CHECK(f.mul_v(a, f.add_v(b, c)) == f.add_v(f.mul_v(a, b), f.mul_v(a, c)));
        }
      }
    }
  }
}

TEST_CASE("structured element interface agrees with packed arithmetic") {
  for (long q : {4L, 9L, 8L}) {
    const Field& f = Field::get_order(q);
    for (int a = 0; a < f.q(); ++a)
      for (int b = 0; b < f.q(); ++b) {
        FieldElem ea = f.element(a), eb = f.element(b);
        CHECK(f.value(f.add(ea, eb)) == f.add_v(a, b));
        CHECK(f.value(f.mul(ea, eb)) == f.mul_v(a, b));
        CHECK(f.value(f.neg(ea)) == f.neg_v(a));
        if (a != 0) CHECK(f.value(f.inv(ea)) == f.inv_v(a));
        CHECK(f.trace(ea) == f.trace_v(a));
      }
  }
}

TEST_CASE("trace is additive, surjective, and balanced") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 16L}) {
    const Field& f = Field::get_order(q);
    std::map<int, int> fiber;
    for (int a = 0; a < f.q(); ++a) {
      int t = f.trace_v(a);
      CHECK(t >= 0);
      CHECK(t < f.p());
      fiber[t]++;
      for (int b = 0; b < f.q(); ++b)
        CHECK(f.trace_v(f.add_v(a, b)) == (f.trace_v(a) + f.trace_v(b)) % f.p());
    }
    // Each prime-field value is hit exactly p^{m-1} times.
    int expected = f.q() / f.p();
    CHECK(static_cast<int>(fiber.size()) == f.p());
    for (auto& [t, count] : fiber) CHECK(count == expected);
  }
}

TEST_CASE("frozen trace tables") {
  const Field& f4 = Field::get(2, 2);
  int t4[] = {0, 0, 1, 1};
  for (int v = 0; v < 4; ++v) CHECK(f4.trace_v(v) == t4[v]);

  const Field& f9 = Field::get(3, 2);
  int t9[] = {0, 2, 1, 0, 2, 1, 0, 2, 1};
  for (int v = 0; v < 9; ++v) CHECK(f9.trace_v(v) == t9[v]);
}

TEST_CASE("rejections") {
  testutil::expect_error(errc::division_by_zero, [] { Field::get(2, 1).inv_v(0); });
  testutil::expect_error(errc::division_by_zero, [] {
    const Field& f = Field::get(3, 2);
    f.inv(f.zero());
  });
  testutil::expect_error(errc::invalid_parameter, [] { Field::get(4, 1); });
  testutil::expect_error(errc::invalid_parameter, [] { Field::get(6, 1); });
  testutil::expect_error(errc::invalid_parameter, [] { Field::get(2, 0); });
  testutil::expect_error(errc::unsupported_field, [] { Field::get(2, 5); });
  testutil::expect_error(errc::unsupported_field, [] { Field::get(5, 2); });
  testutil::expect_error(errc::unsupported_field, [] { Field::get_order(6); });
  testutil::expect_error(errc::unsupported_field, [] { Field::get_order(32); });
  testutil::expect_error(errc::invalid_parameter, [] { Field::get(2, 1).element(5); });
}
