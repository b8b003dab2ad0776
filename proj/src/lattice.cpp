#include "pgeigen/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

namespace pgeigen {

namespace {

// v -= c * b over F_q, in place.
void subtract_scaled(const Field& f, std::vector<int>& v, int c, const std::vector<int>& b) {
  if (c == 0) return;
  for (size_t i = 0; i < v.size(); ++i) v[i] = f.sub_v(v[i], f.mul_v(c, b[i]));
}

int last_nonzero_row(const std::vector<int>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i)
    if (v[i] != 0) return i;
  return -1;
}

}  // namespace

Subspace::Subspace(const Field& f, int ambient, std::vector<std::vector<int>> cols,
                   std::vector<int> pivots)
    : p_(f.p()), m_(f.m()), ambient_(ambient), cols_(std::move(cols)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(const Field& f, int ambient) {
  require(ambient >= 0, errc::invalid_parameter, "ambient dimension must be nonnegative");
  return Subspace(f, ambient, {}, {});
}

Subspace Subspace::full(const Field& f, int ambient) {
  require(ambient >= 0, errc::invalid_parameter, "ambient dimension must be nonnegative");
  std::vector<std::vector<int>> cols(ambient, std::vector<int>(ambient, 0));
  std::vector<int> pivots(ambient);
  for (int j = 0; j < ambient; ++j) {
    cols[j][j] = 1;
    pivots[j] = j;
  }
  return Subspace(f, ambient, std::move(cols), std::move(pivots));
}

Subspace Subspace::canonicalize(const Field& f, int ambient,
                                const std::vector<std::vector<int>>& vectors) {
  require(ambient >= 0, errc::invalid_parameter, "ambient dimension must be nonnegative");
  // Basis columns kept in increasing pivot order throughout.
  std::vector<std::vector<int>> basis;
  std::vector<int> pivots;
  for (auto v : vectors) {
    require(static_cast<int>(v.size()) == ambient, errc::invalid_parameter,
            "generator has wrong length");
    for (int e : v)
      require(e >= 0 && e < f.q(), errc::invalid_parameter, "generator entry out of range");
    for (size_t t = 0; t < basis.size(); ++t) subtract_scaled(f, v, v[pivots[t]], basis[t]);
    int piv = last_nonzero_row(v);
    if (piv < 0) continue;
    int scale = f.inv_v(v[piv]);
    for (int& e : v) e = f.mul_v(scale, e);
    for (size_t t = 0; t < basis.size(); ++t) subtract_scaled(f, basis[t], basis[t][piv], v);
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), piv);
    size_t idx = pos - pivots.begin();
    pivots.insert(pos, piv);
    basis.insert(basis.begin() + idx, std::move(v));
  }
  return Subspace(f, ambient, std::move(basis), std::move(pivots));
}

bool Subspace::contains_vector(const std::vector<int>& v) const {
  const Field& f = field();
  require(static_cast<int>(v.size()) == ambient_, errc::invalid_parameter,
          "vector has wrong length");
  std::vector<int> w = v;
  for (size_t t = 0; t < cols_.size(); ++t) subtract_scaled(f, w, w[pivots_[t]], cols_[t]);
  return last_nonzero_row(w) < 0;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.cols_.size() <=> b.cols_.size(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.cols_ <=> b.cols_;
}

std::vector<Subspace> enumerate(const Field& f, int n, int k) {
  require(n >= 0, errc::invalid_parameter, "ambient dimension must be nonnegative");
  std::vector<Subspace> out;
  if (k < 0 || k > n) return out;
  // Pivot patterns in lexicographic order.
  std::vector<int> r(k);
  for (int i = 0; i < k; ++i) r[i] = i;
  int q = f.q();
  while (true) {
    std::vector<std::pair<int, int>> free_pos;  // (col, row), column-major
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < r[j]; ++i) {
        bool is_earlier_pivot = false;
        for (int t = 0; t < j; ++t)
          if (r[t] == i) is_earlier_pivot = true;
        if (!is_earlier_pivot) free_pos.emplace_back(j, i);
      }
    }
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      std::vector<std::vector<int>> cols(k, std::vector<int>(n, 0));
      for (int j = 0; j < k; ++j) cols[j][r[j]] = 1;
      for (size_t t = 0; t < free_pos.size(); ++t) cols[free_pos[t].first][free_pos[t].second] = vals[t];
      out.push_back(Subspace(f, n, std::move(cols), r));
      int t = static_cast<int>(vals.size()) - 1;
      while (t >= 0 && vals[t] == q - 1) vals[t--] = 0;
      if (t < 0) break;
      ++vals[t];
    }
    // Next pivot pattern.
    int t = k - 1;
    while (t >= 0 && r[t] == n - k + t) --t;
    if (t < 0) break;
    ++r[t];
    for (int i = t + 1; i < k; ++i) r[i] = r[i - 1] + 1;
  }
  return out;
}

std::vector<Subspace> enumerate_all(const Field& f, int n) {
  std::vector<Subspace> out;
  for (int k = 0; k <= n; ++k) {
    auto level = enumerate(f, n, k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

bool contains(const Subspace& x, const Subspace& y) {
  require(x.p() == y.p() && x.m() == y.m() && x.ambient() == y.ambient(), errc::invalid_pair,
          "subspaces live in different lattices");
  if (y.dim() > x.dim()) return false;
  for (const auto& c : y.cols())
    if (!x.contains_vector(c)) return false;
  return true;
}

bool covers(const Subspace& x, const Subspace& y) {
  require(x.p() == y.p() && x.m() == y.m() && x.ambient() == y.ambient(), errc::invalid_pair,
          "subspaces live in different lattices");
  return x.dim() == y.dim() + 1 && contains(x, y);
}

bool in_boundary(const Subspace& x) {
  require(x.ambient() >= 1, errc::invalid_parameter, "boundary needs ambient dimension >= 1");
  return !x.pivots().empty() && x.pivots().back() == x.ambient() - 1;
}

Subspace hat(const Subspace& x) {
  const Field& f = x.field();
  int n = x.ambient();
  std::vector<std::vector<int>> cols;
  cols.reserve(x.dim() + 1);
  for (const auto& c : x.cols()) {
    auto padded = c;
    padded.push_back(0);
    cols.push_back(std::move(padded));
  }
  std::vector<int> last(n + 1, 0);
  last[n] = 1;
  cols.push_back(std::move(last));
  auto pivots = x.pivots();
  pivots.push_back(n);
  return Subspace(f, n + 1, std::move(cols), std::move(pivots));
}

Subspace meet_hyperplane(const Subspace& x) {
  const Field& f = x.field();
  require(x.ambient() >= 1, errc::invalid_parameter, "need ambient dimension >= 1");
  int n = x.ambient() - 1;
  auto cols = x.cols();
  auto pivots = x.pivots();
  if (in_boundary(x)) {
    cols.pop_back();  // the unique column with pivot row n
    pivots.pop_back();
  }
  for (auto& c : cols) c.pop_back();  // row n is zero on what remains
  return Subspace(f, n, std::move(cols), std::move(pivots));
}

Subspace embed(const Subspace& x, int new_ambient) {
  require(new_ambient >= x.ambient(), errc::invalid_parameter,
          "embedding cannot shrink the ambient space");
  auto cols = x.cols();
  for (auto& c : cols) c.resize(new_ambient, 0);
  return Subspace(x.field(), new_ambient, std::move(cols), x.pivots());
}

std::vector<GroupElem> group_elements(const Field& f, int n) {
  require(n >= 0, errc::invalid_parameter, "group level must be nonnegative");
  long total = 1;
  for (int i = 0; i < n; ++i) total *= f.q();
  std::vector<GroupElem> out;
  out.reserve(total);
  for (long v = 0; v < total; ++v) {
    GroupElem g;
    g.p = f.p();
    g.m = f.m();
    g.a.resize(n);
    long rest = v;
    for (int i = n - 1; i >= 0; --i) {
      g.a[i] = static_cast<int>(rest % f.q());
      rest /= f.q();
    }
    out.push_back(std::move(g));
  }
  return out;
}

Subspace act(const GroupElem& g, const Subspace& x) {
  const Field& f = Field::get(g.p, g.m);
  require(x.p() == g.p && x.m() == g.m, errc::invalid_pair, "group and subspace fields differ");
  int n = g.level();
  require(x.ambient() == n + 1, errc::invalid_pair,
          "group of level n acts on subspaces of F_q^{n+1}");
  std::vector<std::vector<int>> image;
  image.reserve(x.dim());
  for (const auto& c : x.cols()) {
    auto v = c;
    int top = c[n];
    if (top != 0)
      for (int i = 0; i < n; ++i) v[i] = f.add_v(v[i], f.mul_v(top, g.a[i]));
    image.push_back(std::move(v));
  }
  return Subspace::canonicalize(f, n + 1, image);
}

std::vector<Subspace> orbit(const Subspace& x) {
  require(x.ambient() >= 1, errc::invalid_parameter, "orbit needs ambient dimension >= 1");
  std::set<Subspace> seen;
  for (const auto& g : group_elements(x.field(), x.ambient() - 1)) seen.insert(act(g, x));
  return std::vector<Subspace>(seen.begin(), seen.end());
}

std::vector<GroupElem> stabilizer(const Subspace& x) {
  require(x.ambient() >= 1, errc::invalid_parameter, "stabilizer needs ambient dimension >= 1");
  std::vector<GroupElem> out;
  for (const auto& g : group_elements(x.field(), x.ambient() - 1))
    if (act(g, x) == x) out.push_back(g);
  return out;
}

Lattice::Lattice(const Field& f, int n) : p_(f.p()), m_(f.m()), n_(n) {
  all_ = enumerate_all(f, n);
  level_offset_.assign(n + 2, 0);
  for (const auto& x : all_) ++level_offset_[x.dim() + 1];
  for (int k = 0; k <= n; ++k) level_offset_[k + 1] += level_offset_[k];

  up_.assign(all_.size(), {});
  down_.assign(all_.size(), {});
  for (int k = 0; k + 1 <= n; ++k) {
    auto [lo, hi] = level_range(k);
    auto [Lo, Hi] = level_range(k + 1);
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = Lo; j < Hi; ++j) {
        if (contains(all_[j], all_[i])) {
          up_[i].push_back(j);
          down_[j].push_back(i);
        }
      }
    }
  }
}

std::pair<std::size_t, std::size_t> Lattice::level_range(int k) const {
  require(k >= 0 && k <= n_, errc::invalid_parameter, "level out of range");
  return {level_offset_[k], level_offset_[k + 1]};
}

std::size_t Lattice::index_of(const Subspace& x) const {
  auto it = std::lower_bound(all_.begin(), all_.end(), x);
  require(it != all_.end() && *it == x, errc::invalid_parameter, "subspace not in this lattice");
  return it - all_.begin();
}

const Lattice& Lattice::get(const Field& f, int n) {
  require(n >= 0, errc::invalid_parameter, "ambient dimension must be nonnegative");
  static std::mutex registry_mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<Lattice>> registry;
  std::lock_guard<std::mutex> lock(registry_mutex);
  auto& slot = registry[{f.p(), f.m(), n}];
  if (!slot) slot.reset(new Lattice(f, n));
  return *slot;
}

}  // namespace pgeigen
