#include "pgeigen/characters.hpp"

#include <map>
#include <mutex>

namespace pgeigen {

CycloNum char_value(const Character& chi, const GroupElem& g) {
  require(chi.p == g.p && chi.m == g.m, errc::invalid_pair,
          "character and group element fields differ");
  require(chi.level == g.level(), errc::invalid_pair,
          "character and group element levels differ");
  const Field& f = chi.field();
  int dot = 0;
  for (int i = 0; i < chi.level; ++i) dot = f.add_v(dot, f.mul_v(chi.a[i], g.a[i]));
  return root_of_unity(f.p(), f.trace_v(dot));
}

std::vector<Character> nontrivial_characters(const Field& f, int level) {
  require(level >= 0, errc::invalid_parameter, "character level must be nonnegative");
  std::vector<Character> out;
  for (const auto& g : group_elements(f, level)) {
    Character chi{f.p(), f.m(), level, g.a};
    if (!chi.trivial()) out.push_back(std::move(chi));
  }
  return out;
}

PosetVector project_boundary(const Character& chi, const Subspace& x) {
  require(chi.p == x.p() && chi.m == x.m(), errc::invalid_pair,
          "character and subspace fields differ");
  require(x.ambient() == chi.level + 1, errc::invalid_pair,
          "character of level n projects inside B_q(n+1)");
  const Field& f = chi.field();
  PosetVector acc(f, x.ambient());
  for (const auto& g : group_elements(f, chi.level)) {
    CycloNum w = char_value(chi, g).conjugate();
    acc.add_term(act(g, x), PhiPoly::constant(w));
  }
  return acc;
}

PosetVector project(const Character& chi, const Subspace& y) {
  require(chi.p == y.p() && chi.m == y.m(), errc::invalid_pair,
          "character and subspace fields differ");
  require(y.ambient() == chi.level, errc::invalid_pair,
          "project expects y in B_q(n) for a character of level n");
  return project_boundary(chi, hat(y));
}

Subspace x_of_chi(const Character& chi) {
  require(chi.level >= 1, errc::invalid_parameter, "need level >= 1");
  require(!chi.trivial(), errc::invalid_parameter,
          "the trivial character has no distinguished hyperplane");

  static std::mutex cache_mutex;
  static std::map<Character, Subspace> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(chi);
    if (it != cache.end()) return it->second;
  }

  const Field& f = chi.field();
  int n = chi.level;
  const Subspace* found = nullptr;
  auto hyperplanes = enumerate(f, n, n - 1);
  for (const auto& y : hyperplanes) {
    if (!project(chi, y).is_zero()) {
      require(found == nullptr, errc::invariant_violated,
              "several hyperplanes have a nonzero projection");
      found = &y;
    }
  }
  require(found != nullptr, errc::invariant_violated,
          "no hyperplane has a nonzero projection");

  std::lock_guard<std::mutex> lock(cache_mutex);
  return cache.emplace(chi, *found).first->second;
}

}  // namespace pgeigen
