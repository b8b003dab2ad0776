#include "pgeigen/verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <thread>

#include "pgeigen/json_io.hpp"
#include "pgeigen/qcomb.hpp"

namespace pgeigen {

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::size_t draw_below(std::mt19937_64& rng, std::size_t m) { return rng() % m; }

void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& body) {
  int w = std::max(1, workers);
  if (w == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::size_t chunk = (count + w - 1) / w;
  std::vector<std::thread> threads;
  for (int t = 0; t < w; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &body] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : threads) th.join();
}

using IndexPair = std::pair<std::size_t, std::size_t>;

// Unordered pairs of [0, count), exhaustive, or a seeded sample of size
// budget (with replacement) when the full set would exceed the budget.
std::vector<IndexPair> select_pairs(std::size_t count, long budget, unsigned long long seed) {
  std::vector<IndexPair> pairs;
  unsigned long long total = count < 2 ? 0ull : 1ull * count * (count - 1) / 2;
  if (budget > 0 && total > static_cast<unsigned long long>(budget)) {
    std::mt19937_64 rng(seed);
    pairs.reserve(budget);
    for (long t = 0; t < budget; ++t) {
      std::size_t i = draw_below(rng, count);
      std::size_t j = draw_below(rng, count - 1);
      if (j >= i) ++j;
      pairs.emplace_back(std::min(i, j), std::max(i, j));
    }
  } else {
    pairs.reserve(total);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

std::vector<IndexPair> sample_list(std::vector<IndexPair> pairs, long budget,
                                   unsigned long long seed) {
  if (budget <= 0 || pairs.size() <= static_cast<std::size_t>(budget)) return pairs;
  std::mt19937_64 rng(seed);
  std::vector<IndexPair> out;
  out.reserve(budget);
  for (long t = 0; t < budget; ++t) out.push_back(pairs[draw_below(rng, pairs.size())]);
  return out;
}

struct Checker {
  SuiteReport& r;
  template <class W>
  void operator()(bool ok, const char* name, W&& witness) {
    ++r.checks;
    if (!ok) r.failures.push_back({name, witness()});
  }
};

bool skip_if_large(SuiteReport& r, const Int& size, const VerifyOptions& opts) {
  if (size <= opts.max_lattice) return false;
  r.skipped = true;
  r.skip_reason = "lattice has " + size.get_str() + " subspaces, bound is " +
                  std::to_string(opts.max_lattice);
  return true;
}

void harvest(SuiteReport& r, std::vector<std::optional<CheckFailure>>& slots) {
  for (auto& s : slots)
    if (s) r.failures.push_back(std::move(*s));
  slots.clear();
}

}  // namespace

SuiteReport suite_eigen(const Field& f, int n, const VerifyOptions& opts) {
  SuiteReport r{"eigen", f.q(), n, "symbolic"};
  Timer timer;
  if (skip_if_large(r, galois(n, f.q()), opts)) {
    r.seconds = timer.elapsed();
    return r;
  }
  Lattice::get(f, n);
  auto basis = build_basis(f, n);
  std::vector<PhiPoly> lambda;
  for (int k = 0; k <= n; ++k) lambda.push_back(eigenvalue_poly(n, k, f.q()));

  std::vector<std::optional<CheckFailure>> slots(basis.size());
  parallel_for(basis.size(), opts.workers, [&](std::size_t i) {
    const auto& [alpha, v] = basis[i];
    if (v.is_zero()) {
      slots[i] = CheckFailure{"eigenvector-nonzero", index_json(alpha).dump()};
      return;
    }
    if (!(apply_adjacency(v) == lambda[alpha.weight()] * v))
      slots[i] = CheckFailure{"eigen-equation", index_json(alpha).dump()};
  });
  r.checks += 2 * static_cast<long>(basis.size());
  harvest(r, slots);

  std::vector<long> counts(n + 1, 0);
  for (const auto& e : basis) ++counts[e.index.weight()];
  for (int k = 0; k <= n; ++k) {
    ++r.checks;
    if (Int(counts[k]) != qbinom(n, k, f.q()))
      r.failures.push_back({"eigenvalue-multiplicity",
                            "k=" + std::to_string(k) + " count=" + std::to_string(counts[k])});
  }
  r.seconds = timer.elapsed();
  return r;
}

SuiteReport suite_orthogonality(const Field& f, int n, const VerifyOptions& opts) {
  SuiteReport r{"orthogonality", f.q(), n, "symbolic"};
  Timer timer;
  if (skip_if_large(r, galois(n, f.q()), opts)) {
    r.seconds = timer.elapsed();
    return r;
  }
  auto basis = build_basis(f, n);

  std::vector<std::optional<CheckFailure>> slots(basis.size());
  parallel_for(basis.size(), opts.workers, [&](std::size_t i) {
    if (inner(basis[i].vec, basis[i].vec).is_zero())
      slots[i] = CheckFailure{"norm-nonzero", index_json(basis[i].index).dump()};
  });
  r.checks += static_cast<long>(basis.size());
  harvest(r, slots);

  auto pairs = select_pairs(basis.size(), opts.pair_budget, opts.seed);
  std::vector<std::optional<CheckFailure>> pair_slots(pairs.size());
  parallel_for(pairs.size(), opts.workers, [&](std::size_t t) {
    auto [i, j] = pairs[t];
    if (!inner(basis[i].vec, basis[j].vec).is_zero())
      pair_slots[t] = CheckFailure{
          "pairwise-orthogonal",
          index_json(basis[i].index).dump() + " " + index_json(basis[j].index).dump()};
  });
  r.checks += static_cast<long>(pairs.size());
  harvest(r, pair_slots);
  r.seconds = timer.elapsed();
  return r;
}

SuiteReport suite_qpoly(const Field& f, int n, const VerifyOptions& opts) {
  SuiteReport r{"qpoly", f.q(), n, "symbolic"};
  Timer timer;
  if (skip_if_large(r, galois(n, f.q()), opts)) {
    r.seconds = timer.elapsed();
    return r;
  }
  auto basis = build_basis(f, n);
  std::vector<PosetVector> dual;
  dual.reserve(basis.size());
  for (const auto& e : basis) dual.push_back(apply_dual(e.vec));

  std::vector<IndexPair> far_pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (std::abs(basis[i].index.weight() - basis[j].index.weight()) >= 2)
        far_pairs.emplace_back(i, j);
  far_pairs = sample_list(std::move(far_pairs), opts.pair_budget, opts.seed);

  std::vector<std::optional<CheckFailure>> slots(far_pairs.size());
  parallel_for(far_pairs.size(), opts.workers, [&](std::size_t t) {
    auto [i, j] = far_pairs[t];
    if (!inner(basis[i].vec, dual[j]).is_zero())
      slots[t] = CheckFailure{
          "distant-coefficient-vanishes",
          index_json(basis[i].index).dump() + " " + index_json(basis[j].index).dump()};
  });
  r.checks += static_cast<long>(far_pairs.size());
  harvest(r, slots);

  if (n >= 2) {
    bool found = false;
    for (std::size_t i = 0; i < basis.size() && !found; ++i)
      for (std::size_t j = 0; j < basis.size() && !found; ++j)
        if (std::abs(basis[i].index.weight() - basis[j].index.weight()) == 1 &&
            !inner(basis[i].vec, dual[j]).is_zero())
          found = true;
    ++r.checks;
    if (!found)
      r.failures.push_back(
          {"adjacent-coupling-present", "no weight-adjacent pair has a nonzero coefficient"});
  }
  r.seconds = timer.elapsed();
  return r;
}

SuiteReport suite_structure(const Field& f, int n, const VerifyOptions& opts) {
  require(n >= 1, errc::invalid_parameter, "structure suite needs n >= 1");
  SuiteReport r{"structure", f.q(), n, "symbolic"};
  Timer timer;
  if (skip_if_large(r, galois(n + 1, f.q()), opts)) {
    r.seconds = timer.elapsed();
    return r;
  }
  const long q = f.q();
  const int p = f.p();
  const Lattice& Ln = Lattice::get(f, n);
  const Lattice& Lup = Lattice::get(f, n + 1);
  const Lattice& Ldown = Lattice::get(f, n - 1);
  Checker check{r};

  auto rational = [&](const Rat& x) { return PhiPoly::from_rational(p, x); };
  const PhiPoly phi_qn = PhiPoly::monomial(p, 1, q_power(q, n));
  const auto group = group_elements(f, n);
  auto pair_witness = [](const Subspace& a, const Subspace& b) {
    return [&a, &b] { return subspace_json(a).dump() + " " + subspace_json(b).dump(); };
  };

  // Weighted symmetry of the adjacency matrix: w(x) A(x,y) = w(y) A(y,x).
  for (std::size_t i = 0; i < Ln.size(); ++i) {
    for (std::size_t j = i; j < Ln.size(); ++j) {
      const Subspace& x = Ln.at(i);
      const Subspace& y = Ln.at(j);
      check(kemp_weight(x.dim(), q) * adjacency_entry(x, y) ==
                kemp_weight(y.dim(), q) * adjacency_entry(y, x),
            "weight-symmetry", pair_witness(x, y));
    }
  }

  // Boundary orbit geometry in B_q(n+1).
  std::vector<std::size_t> boundary;
  for (std::size_t i = 0; i < Lup.size(); ++i)
    if (in_boundary(Lup.at(i))) boundary.push_back(i);

  std::map<std::size_t, std::vector<std::size_t>> classes;  // meet index -> members
  std::vector<std::size_t> meet_key(Lup.size(), 0);
  for (std::size_t i : boundary) {
    std::size_t key = Ln.index_of(meet_hyperplane(Lup.at(i)));
    meet_key[i] = key;
    classes[key].push_back(i);
  }
  std::map<std::size_t, std::vector<GroupElem>> stabs;
  for (std::size_t i : boundary) stabs[i] = stabilizer(Lup.at(i));

  for (std::size_t i : boundary) {
    const Subspace& x = Lup.at(i);
    int k = x.dim();
    auto orb = orbit(x);
    std::vector<Subspace> cls;
    for (std::size_t j : classes[meet_key[i]]) cls.push_back(Lup.at(j));
    check(orb == cls, "orbit-equals-meet-class", [&] { return subspace_json(x).dump(); });
    check(Int(static_cast<long>(orb.size())) == Int(q_power(q, n + 1 - k).get_num()),
          "orbit-size", [&] { return subspace_json(x).dump(); });
    check(Int(static_cast<long>(stabs[i].size())) == Int(q_power(q, k - 1).get_num()),
          "stabilizer-size", [&] { return subspace_json(x).dump(); });
  }

  // hat and meet_hyperplane are mutually inverse up to orbit classes.
  for (std::size_t i = 0; i < Ln.size(); ++i) {
    const Subspace& y = Ln.at(i);
    Subspace h = hat(y);
    check(in_boundary(h) && meet_hyperplane(h) == y, "hat-meet-inverse",
          [&] { return subspace_json(y).dump(); });
  }

  // Biregularity between covering orbit classes: every member of the upper
  // class covers exactly q members of the lower one, and every member of the
  // lower class is covered by exactly one member of the upper one.
  std::set<std::pair<std::size_t, std::size_t>> class_pairs;
  for (std::size_t i : boundary)
    for (std::size_t j : Lup.covers_above(i))
      if (in_boundary(Lup.at(j))) class_pairs.insert({meet_key[i], meet_key[j]});
  for (auto [low_key, up_key] : class_pairs) {
    const auto& lows = classes[low_key];
    const auto& ups = classes[up_key];
    for (std::size_t j : ups) {
      long deg = 0;
      for (std::size_t i : lows)
        if (covers(Lup.at(j), Lup.at(i))) ++deg;
      check(deg == q, "class-biregularity-upper", [&] { return subspace_json(Lup.at(j)).dump(); });
    }
    for (std::size_t i : lows) {
      long deg = 0;
      for (std::size_t j : ups)
        if (covers(Lup.at(j), Lup.at(i))) ++deg;
      check(deg == 1, "class-biregularity-lower", [&] { return subspace_json(Lup.at(i)).dump(); });
    }
  }

  // Exchange relations with the raising map theta and the embedding.
  std::vector<PosetVector> thetas(Ln.size());
  for (std::size_t i = 0; i < Ln.size(); ++i) {
    const Subspace& x = Ln.at(i);
    int k = x.dim();
    PosetVector v = PosetVector::indicator(x);
    PosetVector th = theta(v);
    thetas[i] = th;
    PosetVector av = apply_adjacency(v);
    PosetVector emb = embed_vector(v, n + 1);

    PosetVector residue =
        updown(UpDownKind::D, k + 1, th) - rational(q_power(q, n - k)) * emb;
    bool boundary_only = true;
    for (const auto& [z, c] : residue.entries())
      if (!in_boundary(z)) boundary_only = false;
    bool invariant = true;
    for (const auto& g : group) {
      if (!(act_vector(g, residue) == residue)) {
        invariant = false;
        break;
      }
    }
    check(boundary_only && invariant, "theta-lowering-decomposition",
          [&] { return subspace_json(x).dump(); });

    check(apply_adjacency(th) == phi_qn * emb + rational(q) * theta(av), "adjacency-theta",
          [&] { return subspace_json(x).dump(); });
    check(apply_adjacency(emb) == embed_vector(av, n + 1) + th, "adjacency-embed",
          [&] { return subspace_json(x).dump(); });
    check(apply_dual(emb) == embed_vector(apply_dual(v), n + 1), "dual-embed",
          [&] { return subspace_json(x).dump(); });
    check(apply_dual(th) == rational(Rat(1) / q) * theta(apply_dual(v)), "dual-theta",
          [&] { return subspace_json(x).dump(); });
  }

  // Intertwining relations for every nontrivial character.
  auto chis = nontrivial_characters(f, n);
  for (const auto& chi : chis) {
    Subspace xh = x_of_chi(chi);
    for (std::size_t i = 0; i < Ldown.size(); ++i) {
      PosetVector u = PosetVector::indicator(Ldown.at(i));
      PosetVector lu = lambda_chi(chi, mu_x(xh, u));
      check(apply_adjacency(lu) ==
                rational(q) * lambda_chi(chi, mu_x(xh, apply_adjacency(u))),
            "adjacency-intertwiner",
            [&] { return character_json(chi).dump() + " " + subspace_json(Ldown.at(i)).dump(); });
      check(apply_dual(lu) == rational(Rat(1) / q) * lambda_chi(chi, mu_x(xh, apply_dual(u))),
            "dual-intertwiner",
            [&] { return character_json(chi).dump() + " " + subspace_json(Ldown.at(i)).dump(); });
    }
  }

  // The relabeling map into each hyperplane is a poset isomorphism.
  for (const auto& xh : enumerate(f, n, n - 1)) {
    std::vector<Subspace> images;
    for (std::size_t i = 0; i < Ldown.size(); ++i) {
      PosetVector img = mu_x(xh, PosetVector::indicator(Ldown.at(i)));
      images.push_back(img.entries().begin()->first);
    }
    for (std::size_t i = 0; i < Ldown.size(); ++i) {
      check(images[i].dim() == Ldown.at(i).dim() && contains(xh, images[i]),
            "relabel-into-hyperplane", [&] { return subspace_json(Ldown.at(i)).dump(); });
      for (std::size_t j = 0; j < Ldown.size(); ++j) {
        if (i == j) continue;
        bool before = Ldown.at(i).dim() == Ldown.at(j).dim() + 1 && covers(Ldown.at(i), Ldown.at(j));
        bool after = images[i].dim() == images[j].dim() + 1 && covers(images[i], images[j]);
        check(before == after, "relabel-poset-isomorphism",
              pair_witness(Ldown.at(i), Ldown.at(j)));
      }
    }
  }

  // Lifting eigenvectors one level: both theta branches and the chi branch.
  auto basis_n = build_basis(f, n);
  for (const auto& [alpha, v] : basis_n) {
    int k = alpha.weight();
    PosetVector th = theta(v);
    PosetVector emb = embed_vector(v, n + 1);
    PosetVector lift0 = rational(q_power(q, k)) * emb + th;
    PosetVector lift1 = PhiPoly::monomial(p, 1, q_power(q, n - k)) * emb - th;
    check(apply_adjacency(lift0) == eigenvalue_poly(n + 1, k, q) * lift0, "eigen-lift-zero",
          [&] { return index_json(alpha).dump(); });
    check(apply_adjacency(lift1) == eigenvalue_poly(n + 1, k + 1, q) * lift1, "eigen-lift-one",
          [&] { return index_json(alpha).dump(); });
  }
  auto basis_down = build_basis(f, n - 1);
  for (const auto& chi : chis) {
    Subspace xh = x_of_chi(chi);
    for (const auto& [beta, u] : basis_down) {
      PosetVector w = lambda_chi(chi, mu_x(xh, u));
      check(apply_adjacency(w) == eigenvalue_poly(n + 1, beta.weight() + 1, q) * w,
            "eigen-lift-chi",
            [&] { return character_json(chi).dump() + " " + index_json(beta).dump(); });
    }
  }

  // Isotypic decomposition of the boundary under the unipotent group.
  std::vector<Character> all_chis;
  all_chis.push_back(Character{p, f.m(), n, std::vector<int>(n, 0)});
  all_chis.insert(all_chis.end(), chis.begin(), chis.end());
  // proj[c][i] = projection of the i-th subspace of B_q(n) by all_chis[c].
  std::vector<std::vector<PosetVector>> proj(all_chis.size());
  for (std::size_t c = 0; c < all_chis.size(); ++c) {
    proj[c].reserve(Ln.size());
    for (std::size_t i = 0; i < Ln.size(); ++i)
      proj[c].push_back(project(all_chis[c], Ln.at(i)));
  }

  for (std::size_t c = 0; c < all_chis.size(); ++c) {
    for (std::size_t i = 0; i < Ln.size(); ++i) {
      for (std::size_t j = i + 1; j < Ln.size(); ++j) {
        bool disjoint = true;
        for (const auto& [z, w] : proj[c][i].entries())
          if (!proj[c][j].coeff(z).is_zero()) disjoint = false;
        check(disjoint, "isotypic-disjoint-supports", [&] {
          return character_json(all_chis[c]).dump() + " " + subspace_json(Ln.at(i)).dump() + " " +
                 subspace_json(Ln.at(j)).dump();
        });
      }
    }
  }

  for (std::size_t c = 0; c < all_chis.size(); ++c) {
    for (std::size_t i = 0; i < Ln.size(); ++i) {
      bool ok = true;
      for (const auto& g : group) {
        PhiPoly scale = PhiPoly::constant(char_value(all_chis[c], g));
        if (!(act_vector(g, proj[c][i]) == scale * proj[c][i])) {
          ok = false;
          break;
        }
      }
      check(ok, "isotypic-equivariance", [&] {
        return character_json(all_chis[c]).dump() + " " + subspace_json(Ln.at(i)).dump();
      });
    }
  }

  for (std::size_t i = 0; i < Ln.size(); ++i) {
    PosetVector total(f, n + 1);
    for (std::size_t c = 0; c < all_chis.size(); ++c) total += proj[c][i];
    check(total == rational(q_power(q, n)) * PosetVector::indicator(hat(Ln.at(i))),
          "isotypic-completeness", [&] { return subspace_json(Ln.at(i)).dump(); });
  }

  for (std::size_t c = 1; c < all_chis.size(); ++c) {
    const Character& chi = all_chis[c];
    for (std::size_t i = 0; i < Ln.size(); ++i) {
      const auto& st = stabs[Lup.index_of(hat(Ln.at(i)))];
      bool trivial_on_stab = true;
      for (const auto& g : st)
        if (!(char_value(chi, g) == CycloNum::from_rational(p, 1))) trivial_on_stab = false;
      check(proj[c][i].is_zero() != trivial_on_stab, "projection-vanishing-criterion", [&] {
        return character_json(chi).dump() + " " + subspace_json(Ln.at(i)).dump();
      });
    }
  }

  for (std::size_t c = 1; c < all_chis.size(); ++c) {
    for (std::size_t i = 0; i < Ln.size(); ++i) {
      for (std::size_t j : Ln.covers_below(i)) {
        check(proj[c][i].is_zero() || !proj[c][j].is_zero(), "projection-monotonicity", [&] {
          return character_json(all_chis[c]).dump() + " " + subspace_json(Ln.at(i)).dump();
        });
      }
    }
    for (int k = 1; k <= n + 1; ++k) {
      auto [lo, hi] = Ln.level_range(k - 1);
      long nonzero = 0;
      for (std::size_t i = lo; i < hi; ++i)
        if (!proj[c][i].is_zero()) ++nonzero;
      check(Int(nonzero) == qbinom(n - 1, k - 1, q), "projection-count", [&] {
        return character_json(all_chis[c]).dump() + " k=" + std::to_string(k);
      });
    }
  }

  // Each hyperplane of F_q^n is the distinguished hyperplane of exactly q-1
  // nontrivial characters, and that hyperplane is the kernel of a-pairing.
  {
    std::map<std::size_t, long> fiber;
    for (const auto& chi : chis) {
      Subspace xh = x_of_chi(chi);
      ++fiber[Ln.index_of(xh)];
      bool orthogonal = xh.dim() == n - 1;
      for (const auto& col : xh.cols()) {
        int dot = 0;
        for (int t = 0; t < n; ++t) dot = f.add_v(dot, f.mul_v(chi.a[t], col[t]));
        if (dot != 0) orthogonal = false;
      }
      check(orthogonal, "distinguished-hyperplane-orthogonal",
            [&] { return character_json(chi).dump(); });
    }
    for (const auto& y : enumerate(f, n, n - 1)) {
      check(fiber[Ln.index_of(y)] == q - 1, "distinguished-hyperplane-fiber",
            [&] { return subspace_json(y).dump(); });
    }
  }

  // Inner product scalings of the three building maps (unnormalized pairing).
  for (std::size_t i = 0; i < Ln.size(); ++i) {
    PosetVector u = PosetVector::indicator(Ln.at(i));
    PosetVector eu = embed_vector(u, n + 1);
    for (std::size_t j = i; j < Ln.size(); ++j) {
      PosetVector v = PosetVector::indicator(Ln.at(j));
      PhiPoly base = inner(u, v);
      check(inner(eu, embed_vector(v, n + 1)) == base, "inner-embed",
            pair_witness(Ln.at(i), Ln.at(j)));
      check(inner(thetas[i], thetas[j]) == phi_qn * base, "inner-theta",
            pair_witness(Ln.at(i), Ln.at(j)));
      check(inner(eu, thetas[j]).is_zero(), "inner-mixed", pair_witness(Ln.at(i), Ln.at(j)));
    }
  }
  for (const auto& chi : chis) {
    Subspace xh = x_of_chi(chi);
    std::vector<PosetVector> lam;
    lam.reserve(Ldown.size());
    for (std::size_t i = 0; i < Ldown.size(); ++i)
      lam.push_back(lambda_chi(chi, mu_x(xh, PosetVector::indicator(Ldown.at(i)))));
    for (std::size_t i = 0; i < Ldown.size(); ++i) {
      for (std::size_t j = i; j < Ldown.size(); ++j) {
        PhiPoly base = inner(PosetVector::indicator(Ldown.at(i)),
                             PosetVector::indicator(Ldown.at(j)));
        check(inner(lam[i], lam[j]) == phi_qn * base, "inner-intertwiner",
              pair_witness(Ldown.at(i), Ldown.at(j)));
      }
    }
  }

  // Counting identities tying the boundary to the Gaussian binomials.
  {
    std::vector<long> boundary_level(n + 2, 0);
    for (std::size_t i : boundary) ++boundary_level[Lup.at(i).dim()];
    std::vector<long> class_level(n + 2, 0);
    for (const auto& [key, members] : classes) class_level[Lup.at(members.front()).dim()] += 1;
    for (int k = 1; k <= n + 1; ++k) {
      Int expected = qbinom(n, k - 1, q) +
                     (Int(q_power(q, n).get_num()) - 1) * qbinom(n - 1, k - 1, q);
      check(Int(boundary_level[k]) == expected, "boundary-level-count",
            [&] { return "k=" + std::to_string(k); });
      check(Int(boundary_level[k]) == qbinom(n + 1, k, q) - qbinom(n, k, q),
            "boundary-level-difference", [&] { return "k=" + std::to_string(k); });
      check(Int(class_level[k]) == qbinom(n, k - 1, q), "orbit-class-count",
            [&] { return "k=" + std::to_string(k); });
    }
    check(galois(n + 1, q) ==
              2 * galois(n, q) + (Int(q_power(q, n).get_num()) - 1) * galois(n - 1, q),
          "subspace-total-recurrence", [] { return std::string("galois"); });
  }

  r.seconds = timer.elapsed();
  return r;
}

SuiteReport suite_crosscheck(const Field& f, int n, const Rat& phi, double tol,
                             const VerifyOptions& opts) {
  require(phi > 0, errc::invalid_parameter, "phi must be positive");
  require(tol > 0, errc::invalid_parameter, "tolerance must be positive");
  SuiteReport r{"crosscheck", f.q(), n, "rational"};
  Timer timer;
  if (skip_if_large(r, galois(n, f.q()), opts)) {
    r.seconds = timer.elapsed();
    return r;
  }
  const Lattice& L = Lattice::get(f, n);
  const long q = f.q();
  const std::size_t G = L.size();

  Eigen::MatrixXd A(G, G);
  for (std::size_t i = 0; i < G; ++i)
    for (std::size_t j = 0; j < G; ++j)
      A(i, j) = adjacency_entry(L.at(i), L.at(j)).eval_rational(phi).get_d();

  Eigen::EigenSolver<Eigen::MatrixXd> solver(A);
  if (solver.info() != Eigen::Success) {
    r.failures.push_back({"solver", "numeric eigendecomposition did not converge"});
    ++r.checks;
    r.seconds = timer.elapsed();
    return r;
  }
  Eigen::VectorXcd ev = solver.eigenvalues();

  for (std::size_t i = 0; i < G; ++i) {
    ++r.checks;
    if (std::abs(ev(i).imag()) > tol)
      r.failures.push_back({"eigenvalue-real", "index " + std::to_string(i) + " imag " +
                                                   std::to_string(ev(i).imag())});
  }

  std::vector<double> actual(G), expected;
  for (std::size_t i = 0; i < G; ++i) actual[i] = ev(i).real();
  std::sort(actual.begin(), actual.end(), std::greater<>());
  for (int k = 0; k <= n; ++k) {
    double lam = eigenvalue_poly(n, k, q).eval_rational(phi).get_d();
    long mult = qbinom(n, k, q).get_si();
    expected.insert(expected.end(), mult, lam);
  }
  std::sort(expected.begin(), expected.end(), std::greater<>());
  for (std::size_t i = 0; i < G; ++i) {
    ++r.checks;
    if (std::abs(actual[i] - expected[i]) > tol)
      r.failures.push_back({"spectrum-match", "rank " + std::to_string(i) + ": numeric " +
                                                  std::to_string(actual[i]) + " vs exact " +
                                                  std::to_string(expected[i])});
  }

  Eigen::MatrixXcd Ac = A.cast<std::complex<double>>();
  auto basis = build_basis(f, n);
  for (const auto& [alpha, v] : basis) {
    Eigen::VectorXcd u = Eigen::VectorXcd::Zero(G);
    for (const auto& [x, c] : v.entries()) u(L.index_of(x)) = c.eval(phi);
    double lam = eigenvalue_poly(n, alpha.weight(), q).eval_rational(phi).get_d();
    double residual = (Ac * u - lam * u).lpNorm<Eigen::Infinity>();
    double scale = u.lpNorm<Eigen::Infinity>();
    ++r.checks;
    if (!(scale > 0) || residual > tol * scale)
      r.failures.push_back({"residual", index_json(alpha).dump() + " residual " +
                                            std::to_string(residual)});
  }
  r.seconds = timer.elapsed();
  return r;
}

}  // namespace pgeigen
