#include "pgeigen/qcomb.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace pgeigen {

namespace {

Int int_pow(long base, long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return r;
}

Rat rat_pow(long base, long exp) {
  if (exp >= 0) return Rat(int_pow(base, exp));
  return Rat(1) / Rat(int_pow(base, -exp));
}

std::mutex memo_mutex;
std::map<std::tuple<long, long, long>, Int> qbinom_memo;

Int qbinom_rec(long n, long k, long q) {
  if (n < 0 || k < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 1;
  if (k > n) return 0;
  auto key = std::make_tuple(n, k, q);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = qbinom_memo.find(key);
    if (it != qbinom_memo.end()) return it->second;
  }
  Int value = qbinom_rec(n - 1, k, q) + qbinom_rec(n - 1, k - 1, q) +
              (int_pow(q, n - 1) - 1) * qbinom_rec(n - 2, k - 1, q);
  std::lock_guard<std::mutex> lock(memo_mutex);
  return qbinom_memo.emplace(key, std::move(value)).first->second;
}

}  // namespace

Int qbinom(long n, long k, long q) {
  require(q >= 2, errc::invalid_parameter, "qbinom requires q >= 2");
  return qbinom_rec(n, k, q);
}

Int galois(long n, long q) {
  require(q >= 2, errc::invalid_parameter, "galois requires q >= 2");
  require(n >= 0, errc::invalid_parameter, "galois requires n >= 0");
  Int total = 0;
  for (long k = 0; k <= n; ++k) total += qbinom_rec(n, k, q);
  return total;
}

Rat q_power(long q, long e) {
  require(q >= 1, errc::invalid_parameter, "base must be positive");
  return rat_pow(q, e);
}

std::pair<int, int> prime_power(long q) {
  require(q >= 2, errc::invalid_parameter, "q must be at least 2");
  long p = q;
  for (long d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  int m = 0;
  long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  require(rest == 1, errc::invalid_parameter, "q = " + std::to_string(q) + " is not a prime power");
  return {static_cast<int>(p), m};
}

PhiPoly eigenvalue_poly(int n, int k, long q) {
  require(n >= 0 && k >= 0 && k <= n, errc::invalid_parameter, "need 0 <= k <= n");
  auto [p, m] = prime_power(q);
  (void)m;
  Rat denom(q - 1);
  PhiPoly lin = PhiPoly::monomial(p, 1, rat_pow(q, n - k) / denom);
  return lin - PhiPoly::from_rational(p, rat_pow(q, k) / denom);
}

PhiPoly kemp_weight(int k, long q) {
  require(k >= 0, errc::invalid_parameter, "dimension must be nonnegative");
  auto [p, m] = prime_power(q);
  (void)m;
  return PhiPoly::monomial(p, k, rat_pow(q, static_cast<long>(k) * (k - 1) / 2));
}

PhiPoly pq_product(int n, long q) {
  require(n >= 0, errc::invalid_parameter, "n must be nonnegative");
  auto [p, m] = prime_power(q);
  (void)m;
  PhiPoly acc = PhiPoly::from_rational(p, 1);
  for (int k = 0; k < n; ++k) {
    acc = acc * (PhiPoly::from_rational(p, 1) + PhiPoly::monomial(p, 1, rat_pow(q, k)));
  }
  return acc;
}

}  // namespace pgeigen
