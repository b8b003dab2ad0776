#include "pgeigen/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace pgeigen {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, little-endian, for modulus validation only.
using Poly = std::vector<int>;

Poly poly_mul_mod_p(const Poly& a, const Poly& b, int p) {
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

// Remainder of a by monic divisor d over F_p.
Poly poly_rem(Poly a, const Poly& d, int p) {
  while (a.size() >= d.size() && !(a.size() == 1 && a[0] == 0)) {
    int lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - d.size();
      for (size_t i = 0; i < d.size(); ++i) {
        a[shift + i] = ((a[shift + i] - lead * d[i]) % p + p) % p;
      }
    }
    a.pop_back();
    while (a.size() > 1 && a.back() == 0) a.pop_back();
  }
  return a;
}

bool poly_is_zero(const Poly& a) {
  for (int c : a)
    if (c != 0) return false;
  return true;
}

// No monic divisor of degree 1..deg/2 over F_p.
bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long packed = 0; packed < count; ++packed) {
      Poly g(d + 1, 0);
      long v = packed;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_is_zero(poly_rem(f, g, p))) return false;
    }
  }
  return true;
}

// Fixed moduli, one per supported extension (prime orders use x itself).
const std::map<std::pair<int, int>, Poly> kModuli = {
    {{2, 2}, {1, 1, 1}},        // x^2 + x + 1
    {{2, 3}, {1, 1, 0, 1}},     // x^3 + x + 1
    {{2, 4}, {1, 1, 0, 0, 1}},  // x^4 + x + 1
    {{3, 2}, {1, 0, 1}},        // x^2 + 1
};

constexpr int kMaxOrder = 16;

}  // namespace

Field::Field(int p, int m, std::vector<int> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < m_; ++i) q_ *= p_;
  require(is_irreducible(modulus_, p_), errc::invariant_violated,
          "modulus table entry is reducible");

  auto digits = [&](int value) {
    std::vector<int> d(m_);
    for (int i = 0; i < m_; ++i) {
      d[i] = value % p_;
      value /= p_;
    }
    return d;
  };
  auto pack = [&](const Poly& poly) {
    int v = 0;
    for (int i = m_ - 1; i >= 0; --i) v = v * p_ + (i < static_cast<int>(poly.size()) ? poly[i] : 0);
    return v;
  };

  add_table_.resize(q_ * q_);
  mul_table_.resize(q_ * q_);
  neg_table_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    Poly da = digits(a);
    Poly na(m_);
    for (int i = 0; i < m_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_table_[a] = pack(na);
    for (int b = 0; b < q_; ++b) {
      Poly db = digits(b);
      Poly sum(m_);
      for (int i = 0; i < m_; ++i) sum[i] = (da[i] + db[i]) % p_;
      add_table_[a * q_ + b] = pack(sum);
      Poly prod = poly_rem(poly_mul_mod_p(da, db, p_), modulus_, p_);
      mul_table_[a * q_ + b] = pack(prod);
    }
  }

  inv_table_.assign(q_, 0);
  for (int a = 1; a < q_; ++a) {
    for (int b = 1; b < q_; ++b) {
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = b;
        break;
      }
    }
    require(inv_table_[a] != 0, errc::invariant_violated, "missing inverse in field table");
  }

  trace_table_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    int acc = 0;
    int power = a;
    for (int i = 0; i < m_; ++i) {
      acc = add_v(acc, power);
      int next = power;
      for (int j = 1; j < p_; ++j) next = mul_v(next, power);  // power^p
      power = next;
    }
    require(acc < p_, errc::invariant_violated, "trace left the prime field");
    trace_table_[a] = acc;
  }
}

const Field& Field::get(int p, int m) {
  require(is_prime(p), errc::invalid_parameter, "p = " + std::to_string(p) + " is not prime");
  require(m >= 1, errc::invalid_parameter, "m must be positive");
  long q = 1;
  for (int i = 0; i < m; ++i) q *= p;
  require(q <= kMaxOrder, errc::unsupported_field,
          "field order " + std::to_string(q) + " exceeds the supported bound " +
              std::to_string(kMaxOrder));
  Poly modulus;
  if (m == 1) {
    modulus = {0, 1};  // F_p = F_p[x]/(x)
  } else {
    auto it = kModuli.find({p, m});
    require(it != kModuli.end(), errc::unsupported_field,
            "no modulus on record for p=" + std::to_string(p) + ", m=" + std::to_string(m));
    modulus = it->second;
  }

  static std::mutex registry_mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new Field(p, m, modulus));
  return *slot;
}

const Field& Field::get_order(long q) {
  require(q >= 2 && q <= kMaxOrder, errc::unsupported_field,
          "field order " + std::to_string(q) + " is outside the supported range");
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
  require(rest == 1, errc::unsupported_field, "field order must be a prime power");
  return get(static_cast<int>(p), m);
}

void Field::check_elem(const FieldElem& a) const {
  require(static_cast<int>(a.coeffs.size()) == m_, errc::invalid_parameter,
          "element has wrong number of coefficients");
  for (int c : a.coeffs)
    require(c >= 0 && c < p_, errc::invalid_parameter, "element coefficient out of range");
}

FieldElem Field::element(int value) const {
  require(value >= 0 && value < q_, errc::invalid_parameter, "element value out of range");
  FieldElem a;
  a.coeffs.resize(m_);
  for (int i = 0; i < m_; ++i) {
    a.coeffs[i] = value % p_;
    value /= p_;
  }
  return a;
}

int Field::value(const FieldElem& a) const {
  check_elem(a);
  int v = 0;
  for (int i = m_ - 1; i >= 0; --i) v = v * p_ + a.coeffs[i];
  return v;
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  return element(add_v(value(a), value(b)));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  return element(mul_v(value(a), value(b)));
}

FieldElem Field::neg(const FieldElem& a) const { return element(neg_v(value(a))); }

FieldElem Field::inv(const FieldElem& a) const { return element(inv_v(value(a))); }

int Field::inv_v(int a) const {
  require(a != 0, errc::division_by_zero, "zero has no multiplicative inverse");
  return inv_table_[a];
}

int Field::trace(const FieldElem& a) const { return trace_table_[value(a)]; }

}  // namespace pgeigen
