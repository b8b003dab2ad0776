#include "pgeigen/eigenbasis.hpp"

#include <map>
#include <mutex>

#include "pgeigen/qcomb.hpp"

namespace pgeigen {

int IndexSeq::weight() const {
  int w = 0;
  for (const auto& e : entries)
    if (e.kind != IndexEntry::Kind::zero) ++w;
  return w;
}

void validate_index(const IndexSeq& alpha) {
  const Field& f = alpha.field();
  require(alpha.n >= 0, errc::invalid_index, "negative level");
  int level = 0;
  for (const auto& e : alpha.entries) {
    if (e.kind == IndexEntry::Kind::chi) {
      const Character& chi = e.character;
      require(chi.p == alpha.p && chi.m == alpha.m, errc::invalid_index,
              "character over the wrong field");
      require(chi.level == level + 1, errc::invalid_index,
              "character level must exceed the running level by one");
      require(static_cast<int>(chi.a.size()) == chi.level, errc::invalid_index,
              "character vector has the wrong length");
      for (int v : chi.a)
        require(v >= 0 && v < f.q(), errc::invalid_index, "character entry out of range");
      require(!chi.trivial(), errc::invalid_index, "character entries must be nontrivial");
      level += 2;
    } else {
      level += 1;
    }
  }
  require(level == alpha.n, errc::invalid_index,
          "entries reach level " + std::to_string(level) + ", expected " +
              std::to_string(alpha.n));
}

std::vector<IndexSeq> enumerate_indices(const Field& f, int n) {
  require(n >= 0, errc::invalid_parameter, "n must be nonnegative");
  std::vector<std::vector<IndexSeq>> levels(n + 1);
  levels[0] = {IndexSeq{f.p(), f.m(), 0, {}}};
  for (int l = 1; l <= n; ++l) {
    for (const auto& beta : levels[l - 1]) {
      for (auto kind : {IndexEntry::Kind::zero, IndexEntry::Kind::one}) {
        IndexSeq ext = beta;
        ext.n = l;
        ext.entries.push_back(IndexEntry{kind, {}});
        levels[l].push_back(std::move(ext));
      }
    }
    if (l >= 2) {
      for (const auto& chi : nontrivial_characters(f, l - 1)) {
        for (const auto& gamma : levels[l - 2]) {
          IndexSeq ext = gamma;
          ext.n = l;
          ext.entries.push_back(IndexEntry{IndexEntry::Kind::chi, chi});
          levels[l].push_back(std::move(ext));
        }
      }
    }
  }
  return levels[n];
}

namespace {

PosetVector base_point(const Field& f) {
  return PosetVector::indicator(Subspace::zero(f, 0));
}

// Extends v_beta one level up along the 0 or 1 branch; th = theta(v_beta).
PosetVector extend_zero(const Field& f, const PosetVector& vb, const PosetVector& th, int k,
                        int target) {
  return PhiPoly::from_rational(f.p(), q_power(f.q(), k)) * embed_vector(vb, target) + th;
}

PosetVector extend_one(const Field& f, const PosetVector& vb, const PosetVector& th, int k,
                       int target) {
  return PhiPoly::monomial(f.p(), 1, q_power(f.q(), target - 1 - k)) * embed_vector(vb, target) -
         th;
}

PosetVector extend_chi(const Character& chi, const PosetVector& vb) {
  return lambda_chi(chi, mu_x(x_of_chi(chi), vb));
}

std::mutex memo_mutex;
std::map<IndexSeq, PosetVector> vector_memo;

PosetVector build_vector_rec(const IndexSeq& alpha) {
  const Field& f = alpha.field();
  if (alpha.entries.empty()) return base_point(f);
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = vector_memo.find(alpha);
    if (it != vector_memo.end()) return it->second;
  }
  IndexSeq beta = alpha;
  IndexEntry last = beta.entries.back();
  beta.entries.pop_back();
  beta.n = alpha.n - (last.kind == IndexEntry::Kind::chi ? 2 : 1);
  PosetVector vb = build_vector_rec(beta);
  PosetVector result;
  if (last.kind == IndexEntry::Kind::chi) {
    result = extend_chi(last.character, vb);
  } else {
    PosetVector th = theta(vb);
    result = last.kind == IndexEntry::Kind::zero
                 ? extend_zero(f, vb, th, beta.weight(), alpha.n)
                 : extend_one(f, vb, th, beta.weight(), alpha.n);
  }
  std::lock_guard<std::mutex> lock(memo_mutex);
  return vector_memo.emplace(alpha, std::move(result)).first->second;
}

}  // namespace

PosetVector build_vector(const IndexSeq& alpha) {
  validate_index(alpha);
  return build_vector_rec(alpha);
}

std::vector<BasisEntry> build_basis(const Field& f, int n) {
  require(n >= 0, errc::invalid_parameter, "n must be nonnegative");
  std::vector<std::vector<BasisEntry>> levels(n + 1);
  levels[0].push_back({IndexSeq{f.p(), f.m(), 0, {}}, base_point(f)});
  for (int l = 1; l <= n; ++l) {
    for (const auto& parent : levels[l - 1]) {
      PosetVector th = theta(parent.vec);
      int k = parent.index.weight();
      IndexSeq i0 = parent.index;
      i0.n = l;
      i0.entries.push_back(IndexEntry{IndexEntry::Kind::zero, {}});
      levels[l].push_back({std::move(i0), extend_zero(f, parent.vec, th, k, l)});
      IndexSeq i1 = parent.index;
      i1.n = l;
      i1.entries.push_back(IndexEntry{IndexEntry::Kind::one, {}});
      levels[l].push_back({std::move(i1), extend_one(f, parent.vec, th, k, l)});
    }
    if (l >= 2) {
      for (const auto& chi : nontrivial_characters(f, l - 1)) {
        for (const auto& parent : levels[l - 2]) {
          IndexSeq ic = parent.index;
          ic.n = l;
          ic.entries.push_back(IndexEntry{IndexEntry::Kind::chi, chi});
          levels[l].push_back({std::move(ic), extend_chi(chi, parent.vec)});
        }
      }
    }
  }
  return std::move(levels[n]);
}

}  // namespace pgeigen
