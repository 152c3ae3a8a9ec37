#include "qsi/exceptional.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

#include "qsi/siweights.hpp"
#include "qsi/stability.hpp"

namespace qsi {

using Rat = boost::multiprecision::cpp_rational;

ExceptionalConfig& exceptional_config() {
  static ExceptionalConfig cfg;
  return cfg;
}

bool is_exceptional_sequence(const Quiver& Q, const std::vector<DimVector>& roots) {
  if (roots.empty()) throw DomainError("nonempty_sequence", "empty sequence");
  for (auto& r : roots) {
    check_dim_vector(Q, r);
    if (ivec_is_zero(r.v)) return false;
    if (euler_form(Q, r, r) != 1) return false;
    if (!is_schur_root(Q, r)) return false;
  }
  for (size_t i = 0; i < roots.size(); ++i)
    for (size_t j = i + 1; j < roots.size(); ++j) {
      if (euler_form(Q, roots[i], roots[j]) != 0) return false;  // hom - ext
      if (!ext_is_zero(Q, roots[i].v, roots[j].v)) return false;
    }
  return true;
}

std::vector<DimVector> braid_mutate(const Quiver& Q, const std::vector<DimVector>& seq, int i,
                                    bool inverse) {
  if (i < 0 || i + 1 >= static_cast<int>(seq.size()))
    throw DomainError("braid_index", "mutation index out of range");
  std::vector<DimVector> out = seq;
  const IVec& a = seq[i].v;
  const IVec& b = seq[i + 1].v;
  IVec cand;
  if (!inverse) {
    // New first root is perpendicular to e_i: coefficient <e_{i+1}, e_i>.
    Int c = euler_form(Q, b, a);
    cand = ivec_sub(b, ivec_scale(c, a));
  } else {
    // New second root must satisfy <e_{i+1}, e'_i> = 0, forcing the
    // coefficient <e_{i+1}, e_i> here as well.
    Int c = euler_form(Q, b, a);
    cand = ivec_sub(a, ivec_scale(c, b));
  }
  bool nonneg = true, nonpos = true;
  for (Int x : cand) {
    if (x < 0) nonneg = false;
    if (x > 0) nonpos = false;
  }
  IVec picked;
  if (nonneg && !ivec_is_zero(cand)) {
    picked = cand;
  } else if (nonpos && !ivec_is_zero(cand)) {
    picked = ivec_scale(-1, cand);
  } else {
    throw DomainError("braid_candidate",
                      "neither reflection candidate is a dimension vector; invalid sequence");
  }
  if (!inverse) {
    out[i] = DimVector{picked};
    out[i + 1] = seq[i];
  } else {
    out[i] = seq[i + 1];
    out[i + 1] = DimVector{picked};
  }
  if (!is_exceptional_sequence(Q, out))
    throw DomainError("braid_output", "mutation did not produce an exceptional sequence");
  return out;
}

namespace {

bool in_perp(const Quiver& Q, const std::vector<DimVector>& seq, PerpSide side, const IVec& b) {
  for (auto& e : seq) {
    if (side == PerpSide::Right) {
      if (euler_form(Q, e.v, b) != 0) return false;
      if (!ext_is_zero(Q, e.v, b)) return false;
    } else {
      if (euler_form(Q, b, e.v) != 0) return false;
      if (!ext_is_zero(Q, b, e.v)) return false;
    }
  }
  return true;
}

// All members of the perpendicular monoid within the box, by DFS over the
// linear equations <e_i, .> = 0 (resp. <., e_i> = 0) with suffix bounds,
// then the ext filter.
std::vector<IVec> perp_members(const Quiver& Q, const std::vector<DimVector>& seq, PerpSide side,
                               Int box) {
  const int n = Q.n();
  std::vector<IVec> funcs;  // linear functionals that must vanish
  for (auto& e : seq) {
    IVec w(n);
    for (int v = 0; v < n; ++v) {
      IVec dv(n, 0);
      dv[v] = 1;
      w[v] = side == PerpSide::Right ? euler_form(Q, e.v, dv) : euler_form(Q, dv, e.v);
    }
    funcs.push_back(w);
  }
  const int k = static_cast<int>(funcs.size());
  std::vector<IVec> smin(k, IVec(n + 1, 0)), smax(k, IVec(n + 1, 0));
  for (int f = 0; f < k; ++f)
    for (int v = n - 1; v >= 0; --v) {
      smin[f][v] = smin[f][v + 1] + std::min<Int>(0, box * funcs[f][v]);
      smax[f][v] = smax[f][v + 1] + std::max<Int>(0, box * funcs[f][v]);
    }
  std::vector<IVec> members;
  IVec g(n, 0);
  IVec acc(k, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      for (int f = 0; f < k; ++f)
        if (acc[f] != 0) return;
      if (in_perp(Q, seq, side, g)) members.push_back(g);
      return;
    }
    for (Int val = 0; val <= box; ++val) {
      g[v] = val;
      bool feasible = true;
      for (int f = 0; f < k && feasible; ++f) {
        Int partial = acc[f] + val * funcs[f][v];
        if (partial + smin[f][v + 1] > 0 || partial + smax[f][v + 1] < 0) feasible = false;
      }
      if (feasible) {
        for (int f = 0; f < k; ++f) acc[f] += val * funcs[f][v];
        self(self, v + 1);
        for (int f = 0; f < k; ++f) acc[f] -= val * funcs[f][v];
      }
    }
    g[v] = 0;
  };
  rec(rec, 0);
  return members;
}

}  // namespace

DimVector PerpEmbedding::embed(const IVec& beta) const {
  if (beta.size() != simples.size())
    throw DomainError("embed_length", "coefficient vector has wrong length");
  IVec out(simples.empty() ? 0 : simples[0].v.size(), 0);
  for (size_t i = 0; i < simples.size(); ++i)
    out = ivec_add(out, ivec_scale(beta[i], simples[i].v));
  return DimVector{out};
}

std::optional<IVec> PerpEmbedding::preimage(const DimVector& g) const {
  return solve_nonneg_combination(simples, g);
}

std::optional<IVec> solve_nonneg_combination(const std::vector<DimVector>& simples,
                                             const DimVector& g) {
  // Solve sum b_i simples_i = g exactly; simples are linearly independent.
  const int k = static_cast<int>(simples.size());
  const int n = static_cast<int>(g.v.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(k + 1));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < k; ++c) m[r][c] = simples[c].v[r];
    m[r][k] = g.v[r];
  }
  int row = 0;
  std::vector<int> pivot(k, -1);
  for (int col = 0; col < k && row < n; ++col) {
    int p = -1;
    for (int r = row; r < n; ++r)
      if (m[r][col] != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (int c = col; c <= k; ++c) m[row][c] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c <= k; ++c) m[r][c] -= f * m[row][c];
    }
    pivot[col] = row;
    ++row;
  }
  IVec b(k, 0);
  for (int c = 0; c < k; ++c) {
    if (pivot[c] < 0) return std::nullopt;
    Rat x = m[pivot[c]][k];
    if (boost::multiprecision::denominator(x) != 1) return std::nullopt;
    Count num = boost::multiprecision::numerator(x);
    if (num < 0) return std::nullopt;
    b[c] = static_cast<Int>(num);
  }
  // Consistency rows.
  for (int r = 0; r < n; ++r) {
    Int s = 0;
    for (int c = 0; c < k; ++c) s += b[c] * simples[c].v[r];
    if (s != g.v[r]) return std::nullopt;
  }
  return b;
}

PerpEmbedding perp_quiver(const Quiver& Q, const std::vector<DimVector>& seq, PerpSide side) {
  if (!is_exceptional_sequence(Q, seq))
    throw DomainError("exceptional_sequence", "perp_quiver needs an exceptional sequence");
  const int n = Q.n();
  const int k = static_cast<int>(seq.size());
  if (k >= n) {
    if (k == n) return PerpEmbedding{Quiver::make({}, {}, false), {}, side};
    throw DomainError("sequence_length", "sequence longer than the vertex count");
  }

  Int max_entry = 1;
  for (auto& e : seq)
    for (Int x : e.v) max_entry = std::max(max_entry, x);

  for (Int box = 2 * max_entry; box <= exceptional_config().hilbert_bound_limit; box *= 2) {
    auto members = perp_members(Q, seq, side, box);
    std::set<IVec> member_set(members.begin(), members.end());
    std::sort(members.begin(), members.end(), [](const IVec& a, const IVec& b) {
      Int sa = ivec_total(a), sb = ivec_total(b);
      return sa != sb ? sa < sb : a < b;
    });
    // Minimal additive generators.
    std::vector<IVec> gens;
    for (auto& mvec : members) {
      if (ivec_is_zero(mvec)) continue;
      bool decomposable = false;
      for (auto& u : members) {
        if (ivec_is_zero(u) || !ivec_leq(u, mvec) || u == mvec) continue;
        if (member_set.count(ivec_sub(mvec, u))) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable) gens.push_back(mvec);
    }
    if (static_cast<int>(gens.size()) != n - k) continue;  // widen the box

    // Completeness: every member must decompose over the generators.
    std::set<IVec> reachable;
    reachable.insert(IVec(n, 0));
    std::vector<IVec> frontier{IVec(n, 0)};
    while (!frontier.empty()) {
      std::vector<IVec> next;
      for (auto& f : frontier)
        for (auto& gvec : gens) {
          IVec s = ivec_add(f, gvec);
          bool inbox = true;
          for (Int x : s)
            if (x > box) inbox = false;
          if (inbox && member_set.count(s) && reachable.insert(s).second) next.push_back(s);
        }
      frontier = std::move(next);
    }
    bool complete = true;
    for (auto& mvec : members)
      if (!reachable.count(mvec)) complete = false;
    if (!complete) continue;

    // Order generators into an exceptional sequence: ext(g_i, g_j) = 0 for
    // i < j; distinct perp-simples have no homs either way.
    std::vector<int> order;
    std::vector<char> used(gens.size(), 0);
    for (size_t step = 0; step < gens.size(); ++step) {
      int pick = -1;
      for (size_t i = 0; i < gens.size(); ++i) {
        if (used[i]) continue;
        bool ok = true;
        for (size_t j = 0; j < gens.size(); ++j)
          if (!used[j] && j != i && !ext_is_zero(Q, gens[i], gens[j])) ok = false;
        if (ok && (pick < 0 || gens[i] < gens[pick])) pick = static_cast<int>(i);
      }
      if (pick < 0)
        throw DomainError("perp_order", "perpendicular simples admit no acyclic order");
      used[pick] = 1;
      order.push_back(pick);
    }

    std::vector<DimVector> simples;
    for (int i : order) simples.push_back(DimVector{gens[i]});
    std::vector<std::string> names;
    for (int i = 0; i < n - k; ++i) names.push_back("p" + std::to_string(i + 1));
    std::vector<std::pair<int, int>> arrows;
    for (int i = 0; i < n - k; ++i)
      for (int j = 0; j < n - k; ++j) {
        if (i == j) continue;
        Int e = euler_form(Q, simples[i], simples[j]);
        for (Int t = 0; t < -e; ++t) arrows.emplace_back(i, j);
      }
    PerpEmbedding emb{Quiver::make(std::move(names), std::move(arrows), false), simples, side};
    return emb;
  }
  throw CapExceeded(
      "perp_quiver: Hilbert basis search exhausted exceptional_config().hilbert_bound_limit "
      "without finding exactly n-k complete generators");
}

namespace {

void validate_schur_sequence(const Quiver& Q, const std::vector<DimVector>& seq) {
  if (seq.empty()) throw DomainError("nonempty_sequence", "empty Schur sequence");
  for (auto& g : seq)
    if (!is_schur_root(Q, g))
      throw DomainError("schur_sequence", "sequence member is not a Schur root");
  for (size_t i = 0; i < seq.size(); ++i)
    for (size_t j = i + 1; j < seq.size(); ++j) {
      if (euler_form(Q, seq[i], seq[j]) != 0 || circ(Q, seq[i], seq[j]) != 1)
        throw DomainError("schur_sequence", "forward pair with circ != 1");
    }
}

Refinement refine_impl(const Quiver& Q, const std::vector<DimVector>& seq, int depth) {
  if (depth > exceptional_config().refine_depth_cap)
    throw CapExceeded("refine_schur_sequence: recursion depth cap");
  if (seq.empty()) return Refinement{{}, {0}};
  if (is_exceptional_sequence(Q, seq)) {
    Refinement out;
    out.exceptional = seq;
    for (size_t i = 0; i <= seq.size(); ++i) out.block_bounds.push_back(static_cast<int>(i));
    return out;
  }

  const DimVector& head = seq[0];
  RootClass cls = classify_root(Q, head);

  if (cls.real()) {
    if (seq.size() == 1) return Refinement{{head}, {0, 1}};
    PerpEmbedding perp = perp_quiver(Q, {head}, PerpSide::Right);
    std::vector<DimVector> pulled;
    for (size_t i = 1; i < seq.size(); ++i) {
      auto pre = perp.preimage(seq[i]);
      if (!pre)
        throw DomainError("refinement_perp",
                          "tail root does not lie in the perpendicular category lattice");
      pulled.push_back(DimVector{*pre});
    }
    Refinement sub = refine_impl(perp.sub_quiver, pulled, depth + 1);
    Refinement out;
    out.exceptional.push_back(head);
    for (auto& e : sub.exceptional) out.exceptional.push_back(perp.embed(e.v));
    out.block_bounds.push_back(0);
    for (size_t i = 1; i < sub.block_bounds.size(); ++i)
      out.block_bounds.push_back(sub.block_bounds[i] + 1);
    out.block_bounds.insert(out.block_bounds.begin() + 1, 1);
    return out;
  }

  // Imaginary head: decompose against sigma = -<., delta>, delta the tail sum.
  IVec delta(Q.n(), 0);
  for (size_t i = 1; i < seq.size(); ++i) delta = ivec_add(delta, seq[i].v);
  Weight sigma = right_weight(Q, DimVector{delta});
  auto dec = sigma_stable_decomposition(Q, head, sigma);
  if (dec.factors.size() == 1 && dec.factors[0].second == 1 && dec.factors[0].first == head)
    throw DomainError("refinement_progress",
                      "imaginary head is sigma-stable against its tail; cannot refine");
  std::vector<DimVector> refined_seq;
  for (auto& [root, mult] : dec.factors) refined_seq.push_back(root);
  const size_t head_parts = refined_seq.size();
  for (size_t i = 1; i < seq.size(); ++i) refined_seq.push_back(seq[i]);

  Refinement sub = refine_impl(Q, refined_seq, depth + 1);
  // Merge the first head_parts blocks into one block for the original head.
  Refinement out;
  out.exceptional = sub.exceptional;
  out.block_bounds.push_back(0);
  for (size_t i = head_parts; i < sub.block_bounds.size(); ++i)
    out.block_bounds.push_back(sub.block_bounds[i]);
  return out;
}

}  // namespace

Refinement refine_schur_sequence(const Quiver& Q, const std::vector<DimVector>& seq) {
  validate_schur_sequence(Q, seq);
  Refinement out = refine_impl(Q, seq, 0);
  if (!is_exceptional_sequence(Q, out.exceptional))
    throw DomainError("refinement_output", "refinement is not an exceptional sequence");
  if (out.block_bounds.size() != seq.size() + 1)
    throw DomainError("refinement_blocks", "block count mismatch");
  return out;
}

}  // namespace qsi
