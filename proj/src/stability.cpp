#include "qsi/stability.hpp"

#include "qsi/exceptional.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace qsi {

StabilityConfig& stability_config() {
  static StabilityConfig cfg;
  return cfg;
}

namespace {

Int box_size(const IVec& a, Int cap) {
  Int b = 1;
  for (Int x : a) {
    b *= (x + 1);
    if (b > cap) return cap + 1;
  }
  return b;
}

// Any embedded subvector g with sigma(g) in [lo, hi], excluding 0 and a.
bool exists_embedded_in_window(const Quiver& Q, const IVec& a, const Weight& sigma, Int lo,
                               Int hi) {
  subsearch::Options opt;
  opt.objective = &sigma.v;
  opt.obj_min = lo;
  opt.obj_max = hi;
  opt.exclude_zero = true;
  opt.exclude_full = true;
  bool found = false;
  subsearch::enumerate(Q, a, opt, [&](const IVec& g) {
    if (ext_is_zero(Q, g, ivec_sub(a, g))) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool semistable_scan(const Quiver& Q, const DimVector& a, const Weight& sigma) {
  return !exists_embedded_in_window(Q, a.v, sigma, 1, std::numeric_limits<Int>::max());
}

bool stable_scan(const Quiver& Q, const DimVector& a, const Weight& sigma) {
  return !exists_embedded_in_window(Q, a.v, sigma, 0, std::numeric_limits<Int>::max());
}

}  // namespace

bool is_semistable_dim(const Quiver& Q, const DimVector& a, const Weight& sigma) {
  if (!Q.is_acyclic()) throw DomainError("acyclic", "use stability_via_doubling for cyclic quivers");
  check_dim_vector(Q, a);
  check_on_vertices(Q, sigma.v);
  if (weight_eval(sigma, a.v) != 0) return false;
  if (ivec_is_zero(a.v)) return true;
  if (box_size(a.v, stability_config().direct_box_threshold) <=
      stability_config().direct_box_threshold)
    return semistable_scan(Q, a, sigma);
  return si_dim(Q, a, sigma) > 0;
}

bool is_stable_dim(const Quiver& Q, const DimVector& a, const Weight& sigma) {
  if (!Q.is_acyclic()) throw DomainError("acyclic", "use stability_via_doubling for cyclic quivers");
  check_dim_vector(Q, a);
  check_on_vertices(Q, sigma.v);
  if (ivec_is_zero(a.v)) return false;
  if (weight_eval(sigma, a.v) != 0) return false;
  if (box_size(a.v, stability_config().direct_box_threshold) <=
      stability_config().direct_box_threshold)
    return stable_scan(Q, a, sigma);
  if (!is_semistable_dim(Q, a, sigma)) return false;
  auto dec = sigma_stable_decomposition(Q, a, sigma);
  return dec.factors.size() == 1 && dec.factors[0].second == 1 && dec.factors[0].first == a;
}

namespace {

// Minimal proper embedded sigma-null subvector, by total size then lex;
// nullopt when a is sigma-stable (no such subvector).
std::optional<IVec> minimal_peel(const Quiver& Q, const IVec& rem, const Weight& sigma) {
  const Int total = ivec_total(rem);
  for (Int S = 1; S < total; ++S) {
    std::vector<IVec> candidates;
    subsearch::Options opt;
    opt.size_min = S;
    opt.size_max = S;
    opt.objective = &sigma.v;
    opt.obj_min = 0;
    opt.obj_max = 0;
    subsearch::enumerate(Q, rem, opt, [&](const IVec& g) {
      candidates.push_back(g);
      return true;
    });
    std::sort(candidates.begin(), candidates.end());
    for (auto& g : candidates)
      if (ext_is_zero(Q, g, ivec_sub(rem, g))) return g;
  }
  return std::nullopt;
}

// Order distinct stable roots so that root_i o root_j = 1 for i < j.
// <r_i, r_j> = -ext(r_i, r_j) here (hom vanishes between distinct stable
// roots), so a pair may be ordered (i,j) only when <r_i,r_j> = 0.
std::vector<int> certificate_order(const Quiver& Q, const std::vector<DimVector>& roots) {
  const size_t k = roots.size();
  std::vector<std::vector<char>> bad(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (i != j && euler_form(Q, roots[i], roots[j]) != 0) bad[i][j] = 1;
  std::vector<char> used(k, 0);
  std::vector<int> order;
  for (size_t step = 0; step < k; ++step) {
    int pick = -1;
    for (size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (size_t j = 0; j < k; ++j)
        if (!used[j] && j != i && bad[i][j]) ok = false;
      if (ok && (pick < 0 || roots[i].v < roots[pick].v)) pick = static_cast<int>(i);
    }
    if (pick < 0)
      throw DomainError("certificate_order", "no strongly perpendicular order exists");
    used[pick] = 1;
    order.push_back(pick);
  }
  // The order must realize circ = 1 on every forward pair.
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (circ(Q, roots[order[i]], roots[order[j]]) != 1)
        throw DomainError("certificate_order", "forward pair with circ != 1");
  return order;
}

void check_decomposition_invariants(const Quiver& Q, const IVec& a,
                                    const StableDecomposition& dec) {
  IVec sum(a.size(), 0);
  for (auto& [root, mult] : dec.factors) {
    if (mult <= 0) throw DomainError("positive_multiplicity", "nonpositive multiplicity");
    sum = ivec_add(sum, ivec_scale(mult, root.v));
    if (mult > 1 && euler_form(Q, root, root) < 0)
      throw DomainError("imaginary_multiplicity",
                        "imaginary non-isotropic root with multiplicity > 1");
  }
  if (sum != a) throw DomainError("decomposition_sum", "factors do not sum to alpha");
}

}  // namespace

StableDecomposition sigma_stable_decomposition(const Quiver& Q, const DimVector& a,
                                               const Weight& sigma) {
  if (!Q.is_acyclic()) throw DomainError("acyclic", "stable decomposition needs an acyclic quiver");
  check_dim_vector(Q, a);
  if (ivec_is_zero(a.v)) throw DomainError("nonzero_alpha", "cannot decompose the zero vector");
  if (!is_semistable_dim(Q, a, sigma))
    throw DomainError("alpha_semistable", "alpha is not sigma-semi-stable");

  // Recursive peeling. A minimal embedded sigma-null proper subvector is
  // sigma-stable, so each peel emits one Jordan-Hoelder factor.
  std::vector<IVec> parts;
  IVec rem = a.v;
  while (!ivec_is_zero(rem)) {
    auto g = minimal_peel(Q, rem, sigma);
    if (!g) {
      parts.push_back(rem);  // rem itself stable
      break;
    }
    parts.push_back(*g);
    rem = ivec_sub(rem, *g);
  }

  std::map<IVec, Int> grouped;
  for (auto& p : parts) grouped[p]++;
  std::vector<DimVector> roots;
  std::vector<Int> mults;
  for (auto& [v, m] : grouped) {
    roots.push_back(DimVector{v});
    mults.push_back(m);
  }
  auto order = certificate_order(Q, roots);
  StableDecomposition dec;
  dec.total = a.v;
  for (int idx : order) dec.factors.push_back({roots[idx], mults[idx]});
  check_decomposition_invariants(Q, a.v, dec);
  return dec;
}

HNType hn_type(const Quiver& Q, const DimVector& a, const Weight& sigma, const Weight& tau) {
  if (!Q.is_acyclic()) throw DomainError("acyclic", "hn_type needs an acyclic quiver");
  check_dim_vector(Q, a);
  for (int v = 0; v < Q.n(); ++v)
    if (a.v[v] > 0 && tau.v[v] <= 0)
      throw DomainError("tau_positive", "tau must be positive on nonzero subvectors of alpha");

  HNType result;
  IVec rem = a.v;
  while (!ivec_is_zero(rem)) {
    // Maximal slope sigma/tau among embedded subvectors, tie-broken by size.
    IVec best;
    bool have = false;
    subsearch::Options opt;
    opt.exclude_zero = true;
    bool ambiguous = false;
    subsearch::enumerate(Q, rem, opt, [&](const IVec& g) {
      if (!ext_is_zero(Q, g, ivec_sub(rem, g))) return true;
      if (!have) {
        best = g;
        have = true;
        return true;
      }
      Int lhs = weight_eval(sigma, g) * weight_eval(tau, best);
      Int rhs = weight_eval(sigma, best) * weight_eval(tau, g);
      if (lhs > rhs) {
        best = g;
        ambiguous = false;
      } else if (lhs == rhs) {
        Int sg = ivec_total(g), sb = ivec_total(best);
        if (sg > sb) {
          best = g;
          ambiguous = false;
        } else if (sg == sb) {
          ambiguous = true;  // resolved only if a strictly better one appears
        }
      }
      return true;
    });
    if (!have) throw DomainError("hn_internal", "no embedded subvector found");
    if (ambiguous)
      throw DomainError("hn_uniqueness",
                        "maximal-slope maximal-size subvector not unique; HN theory violated");
    Int num = weight_eval(sigma, best), den = weight_eval(tau, best);
    Int g = std::gcd(std::abs(num), std::abs(den));
    if (g > 0) {
      num /= g;
      den /= g;
    }
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (!result.blocks.empty()) {
      // Strictly decreasing slopes top-down.
      auto& prev = result.blocks.back();
      if (prev.slope_num * den <= num * prev.slope_den)
        throw DomainError("hn_monotone", "HN slopes not strictly decreasing");
    }
    result.blocks.push_back(HNBlock{DimVector{best}, num, den});
    rem = ivec_sub(rem, best);
  }
  return result;
}

StableDecomposition sigma_tau_stable_decomposition(const Quiver& Q, const DimVector& a,
                                                   const Weight& sigma, const Weight& tau) {
  HNType hn = hn_type(Q, a, sigma, tau);
  std::map<IVec, Int> grouped;
  for (auto& block : hn.blocks) {
    // Block of slope p/q is (q sigma - p tau)-semistable; decompose there.
    Weight shifted{ivec_sub(ivec_scale(block.slope_den, sigma.v),
                            ivec_scale(block.slope_num, tau.v))};
    auto dec = sigma_stable_decomposition(Q, block.dim, shifted);
    for (auto& [root, mult] : dec.factors) grouped[root.v] += mult;
  }
  std::vector<DimVector> roots;
  std::vector<Int> mults;
  for (auto& [v, m] : grouped) {
    roots.push_back(DimVector{v});
    mults.push_back(m);
  }
  auto order = certificate_order(Q, roots);
  StableDecomposition dec;
  dec.total = a.v;
  for (int idx : order) dec.factors.push_back({roots[idx], mults[idx]});
  check_decomposition_invariants(Q, a.v, dec);
  return dec;
}

RootQuiver root_quiver(const Quiver& Q, const std::vector<DimVector>& roots) {
  if (roots.empty()) throw DomainError("roots_nonempty", "need at least one root");
  const int s = static_cast<int>(roots.size());
  std::vector<std::string> names;
  for (int i = 0; i < s; ++i) names.push_back(std::to_string(i + 1));
  std::vector<std::pair<int, int>> arrows;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) {
      Int e = euler_form(Q, roots[i], roots[j]);
      if (i != j) {
        if (e > 0)
          throw DomainError("nonpositive_pairing", "positive off-diagonal Euler pairing");
        for (Int k = 0; k < -e; ++k) arrows.emplace_back(i, j);
      } else {
        if (e > 1) throw DomainError("root_self_pairing", "<d,d> > 1 is not a root");
        for (Int k = 0; k < 1 - e; ++k) arrows.emplace_back(i, i);
      }
    }

  RootQuiver rq{Quiver::make(std::move(names), std::move(arrows), true), false};
  // Strong connectivity by repeated BFS (s is small).
  auto reaches = [&](int from, int to) {
    std::vector<char> seen(s, 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (int arr : rq.quiver.arrows_out()[v]) {
        int h = rq.quiver.head(arr);
        if (!seen[h]) {
          seen[h] = 1;
          stack.push_back(h);
        }
      }
    }
    return false;
  };
  rq.path_connected = true;
  for (int i = 0; i < s && rq.path_connected; ++i)
    for (int j = 0; j < s && rq.path_connected; ++j)
      if (i != j && !reaches(i, j)) rq.path_connected = false;
  return rq;
}

bool is_simple_dim(const Quiver& Q, const DimVector& a) {
  check_dim_vector(Q, a);
  if (ivec_is_zero(a.v)) throw DomainError("nonzero_alpha", "zero vector is not simple");

  // Unit vector at a loop-free vertex.
  std::vector<int> support;
  for (int v = 0; v < Q.n(); ++v)
    if (a.v[v] > 0) support.push_back(v);
  if (support.size() == 1 && a.v[support[0]] == 1) {
    IVec dv(Q.n(), 0);
    dv[support[0]] = 1;
    if (euler_form(Q, dv, dv) == 1) return true;
  }

  for (int v = 0; v < Q.n(); ++v) {
    IVec dv(Q.n(), 0);
    dv[v] = 1;
    if (euler_form(Q, dv, a.v) > 0 || euler_form(Q, a.v, dv) > 0) return false;
  }

  // Support subquiver must be strongly connected.
  const int k = static_cast<int>(support.size());
  std::vector<int> pos(Q.n(), -1);
  for (int i = 0; i < k; ++i) pos[support[i]] = i;
  auto reaches = [&](int from, int to) {
    std::vector<char> seen(Q.n(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (v == to) return true;
      for (int arr : Q.arrows_out()[v]) {
        int h = Q.head(arr);
        if (pos[h] >= 0 && !seen[h]) {
          seen[h] = 1;
          stack.push_back(h);
        }
      }
    }
    return false;
  };
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && !reaches(support[i], support[j])) return false;

  if (euler_form(Q, a.v, a.v) == 0) {
    Int g = 0;
    for (Int x : a.v) g = std::gcd(g, std::abs(x));
    if (g != 1) return false;  // isotropic must be indivisible
  }
  return true;
}

bool stability_via_doubling(const Quiver& Q, const DimVector& a, const Weight& sigma,
                            bool stable) {
  check_dim_vector(Q, a);
  check_on_vertices(Q, sigma.v);
  DoubledQuiver D = double_quiver(Q);
  DimVector ahat = D.lift_dim(a);
  Weight shat = D.lift_weight(sigma);

  // Effective bound: unbalanced embedded subvectors have tau <= -1, balanced
  // ones are m-independent, so any m > 2 sum |sigma(x)| a(x) decides.
  Int m_star = 1;
  for (int v = 0; v < Q.n(); ++v) m_star += 2 * std::abs(sigma.v[v]) * a.v[v];
  Int m = 1;
  while (m < m_star) {
    m *= 2;
    if (m > stability_config().doubling_cap)
      throw CapExceeded("stability_via_doubling: m schedule exhausted the configured cap");
  }
  Weight w{ivec_add(shat.v, ivec_scale(m, D.tau.v))};
  // The doubled quiver is built for the combinatorial subvector test; the
  // shifted weight makes the weight-space route useless here.
  if (weight_eval(w, ahat.v) != 0) return false;
  return stable ? stable_scan(D.doubled, ahat, w) : semistable_scan(D.doubled, ahat, w);
}

}  // namespace qsi

namespace qsi {

std::optional<bool> sigma_stable_criterion_crosscheck(const Quiver& Q, const DimVector& a,
                                                      const Weight& sigma, Int entry_cap) {
  if (!Q.is_acyclic()) throw DomainError("acyclic", "criterion needs an acyclic quiver");
  check_dim_vector(Q, a);
  const int n = Q.n();

  // All sigma-stable vectors inside the box.
  std::vector<IVec> stable;
  IVec cur(n, 0);
  auto gen = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (!ivec_is_zero(cur) && is_stable_dim(Q, DimVector{cur}, sigma)) stable.push_back(cur);
      return;
    }
    for (Int v = 0; v <= entry_cap; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  gen(gen, 0);
  if (stable.empty()) return std::nullopt;

  // Ray generators: indivisible members that are not sums of two members.
  std::set<IVec> member_set(stable.begin(), stable.end());
  std::vector<IVec> gens;
  for (auto& d : stable) {
    Int g = 0;
    for (Int x : d) g = std::gcd(g, std::abs(x));
    if (g != 1) continue;
    bool decomposable = false;
    for (auto& u : stable) {
      if (u == d || !ivec_leq(u, d)) continue;
      IVec rest = ivec_sub(d, u);
      if (!ivec_is_zero(rest) && member_set.count(rest)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(d);
  }

  // Express alpha as a positive rational combination of an independent subset.
  const size_t k = gens.size();
  std::vector<int> chosen;
  std::vector<int> best;
  auto try_subset = [&](const std::vector<int>& idx) -> bool {
    std::vector<DimVector> sub;
    for (int i : idx) sub.push_back(DimVector{gens[i]});
    // Clear denominators by scaling alpha: try small multipliers.
    for (Int m = 1; m <= 24; ++m) {
      auto sol = solve_nonneg_combination(sub, DimVector{ivec_scale(m, a.v)});
      if (!sol) continue;
      bool positive = true;
      for (Int c : *sol)
        if (c <= 0) positive = false;
      if (positive) return true;
    }
    return false;
  };
  auto rec = [&](auto&& self, size_t start) -> bool {
    if (!chosen.empty() && try_subset(chosen)) {
      best = chosen;
      return true;
    }
    if (chosen.size() >= static_cast<size_t>(n)) return false;
    for (size_t i = start; i < k; ++i) {
      chosen.push_back(static_cast<int>(i));
      if (self(self, i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;

  std::vector<DimVector> deltas;
  for (int i : best) deltas.push_back(DimVector{gens[i]});

  // Case (1): alpha is one of the deltas and real.
  for (auto& d : deltas)
    if (d.v == a.v && euler_form(Q, d, d) == 1) return true;
  // Case (2): nonpositive pairings, path connectivity, indivisible isotropic.
  for (auto& d : deltas)
    if (euler_form(Q, d, a) > 0 || euler_form(Q, a, d) > 0) return false;
  RootQuiver rq = root_quiver(Q, deltas);
  if (!rq.path_connected) return false;
  if (euler_form(Q, a, a) == 0) {
    Int g = 0;
    for (Int x : a.v) g = std::gcd(g, std::abs(x));
    if (g != 1) return false;
  }
  return true;
}

}  // namespace qsi
