#include "qsi/homext.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qsi {

HomExtConfig& homext_config() {
  static HomExtConfig cfg;
  return cfg;
}

namespace subsearch {

IVec euler_objective(const Quiver& Q, const IVec& b) {
  IVec w(Q.n());
  for (int v = 0; v < Q.n(); ++v) {
    w[v] = b[v];
    for (int a : Q.arrows_out()[v]) w[v] -= b[Q.head(a)];
  }
  return w;
}

void enumerate(const Quiver& Q, const IVec& ambient, const Options& opt,
               const std::function<bool(const IVec&)>& visit) {
  const auto& topo = Q.topo_order();
  const int n = Q.n();
  const Int size_max = opt.size_max < 0 ? ivec_total(ambient) : opt.size_max;

  // Suffix bounds in topo position order for size and objective pruning.
  IVec suf_cap(n + 1, 0);
  IVec suf_obj_min(n + 1, 0), suf_obj_max(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) {
    int v = topo[i];
    suf_cap[i] = suf_cap[i + 1] + ambient[v];
    Int contrib = opt.objective ? ambient[v] * (*opt.objective)[v] : 0;
    suf_obj_min[i] = suf_obj_min[i + 1] + std::min<Int>(0, contrib);
    suf_obj_max[i] = suf_obj_max[i + 1] + std::max<Int>(0, contrib);
  }

  IVec g(n, 0);
  long long nodes = 0;
  const long long cap = homext_config().node_cap;
  bool stopped = false;

  auto rec = [&](auto&& self, int pos, Int size, Int obj) -> void {
    if (stopped) return;
    if (++nodes > cap)
      throw CapExceeded("subvector search node cap exceeded (homext_config().node_cap)");
    if (pos == n) {
      if (size < opt.size_min) return;
      if (opt.objective && (obj < opt.obj_min || obj > opt.obj_max)) return;
      if (opt.exclude_zero && size == 0) return;
      if (opt.exclude_full && g == ambient) return;
      if (!visit(g)) stopped = true;
      return;
    }
    int v = topo[pos];
    // Arc lower bound from already-assigned tails (topo order guarantees it).
    Int lo = 0;
    for (int a : Q.arrows_in()[v]) {
      int t = Q.tail(a);
      lo = std::max(lo, g[t] - ambient[t] + std::min(ambient[t], ambient[v]));
    }
    if (lo > ambient[v]) return;
    Int w = opt.objective ? (*opt.objective)[v] : 0;
    for (Int val = lo; val <= ambient[v]; ++val) {
      Int nsize = size + val;
      if (nsize > size_max) break;
      if (nsize + suf_cap[pos + 1] < opt.size_min) continue;
      if (opt.objective) {
        Int nobj = obj + val * w;
        if (nobj + suf_obj_max[pos + 1] < opt.obj_min) continue;
        if (nobj + suf_obj_min[pos + 1] > opt.obj_max) continue;
        g[v] = val;
        self(self, pos + 1, nsize, nobj);
      } else {
        g[v] = val;
        self(self, pos + 1, nsize, obj);
      }
      g[v] = 0;
      if (stopped) return;
    }
  };
  rec(rec, 0, 0, 0);
}

}  // namespace subsearch

namespace {

struct PairCache {
  std::unordered_map<std::pair<IVec, IVec>, bool, IVecPairHash> ext0;
  std::shared_mutex mu;
};

PairCache& cache_for(const Quiver& Q) {
  static std::unordered_map<uint64_t, PairCache> registry;
  static std::shared_mutex reg_mu;
  {
    std::shared_lock lock(reg_mu);
    auto it = registry.find(Q.digest());
    if (it != registry.end()) return it->second;
  }
  std::unique_lock lock(reg_mu);
  return registry[Q.digest()];
}

}  // namespace

bool ext_is_zero(const Quiver& Q, const IVec& a, const IVec& b) {
  if (!Q.is_acyclic()) throw DomainError("acyclic", "generic ext needs an acyclic quiver");
  check_on_vertices(Q, a);
  check_on_vertices(Q, b);
  if (ivec_is_zero(a) || ivec_is_zero(b)) return true;
  if (euler_form(Q, a, b) < 0) return false;

  auto& cache = cache_for(Q);
  auto key = std::make_pair(a, b);
  {
    std::shared_lock lock(cache.mu);
    auto it = cache.ext0.find(key);
    if (it != cache.ext0.end()) return it->second;
  }

  // ext(a,b) > 0 iff some embedded g <= a has <g,b> < 0; g = a itself was
  // handled above, and <0,b> = 0, so only proper nonzero candidates matter.
  IVec w = subsearch::euler_objective(Q, b);
  subsearch::Options opt;
  opt.objective = &w;
  opt.obj_min = std::numeric_limits<Int>::min();
  opt.obj_max = -1;
  opt.exclude_zero = true;
  bool witness = false;
  subsearch::enumerate(Q, a, opt, [&](const IVec& g) {
    if (g == a) return true;
    if (ext_is_zero(Q, g, ivec_sub(a, g))) {  // g embeds in a
      witness = true;
      return false;
    }
    return true;
  });
  bool result = !witness;
  {
    std::unique_lock lock(cache.mu);
    cache.ext0.emplace(key, result);
  }
  return result;
}

bool embeds(const Quiver& Q, const DimVector& a, const DimVector& b) {
  check_dim_vector(Q, a);
  check_dim_vector(Q, b);
  if (!ivec_leq(a.v, b.v)) return false;
  return ext_is_zero(Q, a.v, ivec_sub(b.v, a.v));
}

bool surjects(const Quiver& Q, const DimVector& b, const DimVector& bq) {
  check_dim_vector(Q, b);
  check_dim_vector(Q, bq);
  if (!ivec_leq(bq.v, b.v)) return false;
  return ext_is_zero(Q, ivec_sub(b.v, bq.v), bq.v);
}

Int ext_generic(const Quiver& Q, const DimVector& a, const DimVector& b) {
  check_dim_vector(Q, a);
  check_dim_vector(Q, b);
  if (ivec_is_zero(a.v) || ivec_is_zero(b.v)) return 0;
  Int best = std::max<Int>(0, -euler_form(Q, a.v, b.v));
  IVec w = subsearch::euler_objective(Q, b.v);
  subsearch::Options opt;
  opt.objective = &w;
  opt.obj_min = std::numeric_limits<Int>::min();
  opt.obj_max = -best - 1;  // only candidates beating the current bound
  bool improved = true;
  while (improved) {
    improved = false;
    opt.obj_max = -best - 1;
    subsearch::enumerate(Q, a.v, opt, [&](const IVec& g) {
      Int val = -weight_eval(Weight{w}, g);
      // weight_eval(w, g) = <g, b>
      if (val > best && ext_is_zero(Q, g, ivec_sub(a.v, g))) {
        best = val;
        improved = true;
        return false;  // restart with the sharper bound
      }
      return true;
    });
  }
  return best;
}

Int hom_generic(const Quiver& Q, const DimVector& a, const DimVector& b) {
  return euler_form(Q, a.v, b.v) + ext_generic(Q, a, b);
}

std::vector<IVec> sub_dimensions(const Quiver& Q, const IVec& a) {
  check_on_vertices(Q, a);
  std::vector<IVec> subs;
  subsearch::Options opt;
  subsearch::enumerate(Q, a, opt, [&](const IVec& g) {
    if (ivec_is_zero(g) || g == a || ext_is_zero(Q, g, ivec_sub(a, g))) subs.push_back(g);
    return true;
  });
  std::sort(subs.begin(), subs.end());
  return subs;
}

namespace {

// Split searches are exhaustive over componentwise decompositions; the
// configured size guard keeps them at desk scale.
void check_split_budget(const IVec& a, const char* who) {
  if (ivec_total(a) > homext_config().max_total_size)
    throw CapExceeded(std::string(who) +
                      ": |alpha| exceeds homext_config().max_total_size for the split search");
}

bool has_orthogonal_split(const Quiver& Q, const IVec& a, IVec* out_part) {
  bool found = false;
  // Plain box enumeration (not subsearch): split parts need not satisfy the
  // subrepresentation arc condition.
  IVec g(a.size(), 0);
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (found) return true;
    if (i == a.size()) {
      if (ivec_is_zero(g) || g == a) return false;
      IVec rest = ivec_sub(a, g);
      if (ext_is_zero(Q, g, rest) && ext_is_zero(Q, rest, g)) {
        found = true;
        if (out_part) *out_part = g;
        return true;
      }
      return false;
    }
    for (Int v = 0; v <= a[i]; ++v) {
      g[i] = v;
      if (self(self, i + 1)) return true;
    }
    g[i] = 0;
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

bool is_schur_root(const Quiver& Q, const DimVector& a) {
  check_dim_vector(Q, a);
  if (ivec_is_zero(a.v)) throw DomainError("nonzero_alpha", "the zero vector is not a root");
  check_split_budget(a.v, "is_schur_root");

  static std::unordered_map<uint64_t, std::unordered_map<IVec, bool, IVecHash>> memo;
  static std::shared_mutex mu;
  {
    std::shared_lock lock(mu);
    auto it = memo.find(Q.digest());
    if (it != memo.end()) {
      auto jt = it->second.find(a.v);
      if (jt != it->second.end()) return jt->second;
    }
  }
  bool schur = !has_orthogonal_split(Q, a.v, nullptr);
  {
    std::unique_lock lock(mu);
    memo[Q.digest()][a.v] = schur;
  }
  return schur;
}

RootClass classify_root(const Quiver& Q, const DimVector& a) {
  Int self = euler_form(Q, a.v, a.v);
  if (!is_schur_root(Q, a)) return RootClass{RootTag::NotSchur, self};
  if (self == 1) return RootClass{RootTag::RealSchur, self};
  if (self == 0) return RootClass{RootTag::IsotropicSchur, self};
  if (self < 0) return RootClass{RootTag::ImaginaryNonisotropicSchur, self};
  throw DomainError("root_self_pairing", "Schur root with <a,a> > 1 should not exist");
}

CanonicalDecomposition canonical_decomposition(const Quiver& Q, const DimVector& a) {
  check_dim_vector(Q, a);
  if (ivec_is_zero(a.v)) throw DomainError("nonzero_alpha", "cannot decompose the zero vector");
  check_split_budget(a.v, "canonical_decomposition");

  // Kac: summands are Schur roots with pairwise vanishing ext; any orthogonal
  // split refines, so recurse until every part is Schur.
  std::vector<IVec> parts;
  auto split = [&](auto&& self, const IVec& v) -> void {
    IVec g;
    if (!is_schur_root(Q, DimVector{v}) && has_orthogonal_split(Q, v, &g)) {
      self(self, g);
      self(self, ivec_sub(v, g));
    } else {
      parts.push_back(v);
    }
  };
  split(split, a.v);

  // Group multiplicities.
  std::map<IVec, Int> grouped;
  for (auto& p : parts) grouped[p]++;
  std::vector<std::pair<DimVector, Int>> summands;
  for (auto& [v, m] : grouped) summands.push_back({DimVector{v}, m});

  // Order per Lemma 5.2: hom(s_i, s_j) = 0 for i < j. Kahn with lexicographic
  // tie-break on the root.
  const size_t k = summands.size();
  std::vector<std::vector<char>> blocks(k, std::vector<char>(k, 0));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (i != j && hom_generic(Q, summands[i].first, summands[j].first) != 0)
        blocks[i][j] = 1;  // i cannot precede j
  std::vector<char> used(k, 0);
  std::vector<std::pair<DimVector, Int>> ordered;
  for (size_t step = 0; step < k; ++step) {
    int pick = -1;
    for (size_t i = 0; i < k; ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (size_t j = 0; j < k; ++j)
        if (!used[j] && j != i && blocks[i][j]) ok = false;
      if (ok && (pick < 0 || summands[i].first.v < summands[pick].first.v)) {
        pick = static_cast<int>(i);
      }
    }
    if (pick < 0)
      throw DomainError("canonical_order", "no hom-vanishing order exists; decomposition bug");
    used[pick] = 1;
    ordered.push_back(summands[pick]);
  }
  return CanonicalDecomposition{std::move(ordered)};
}

bool is_prehomogeneous(const Quiver& Q, const DimVector& a) {
  auto dec = canonical_decomposition(Q, a);
  for (auto& [root, mult] : dec.summands)
    if (!classify_root(Q, root).real()) return false;
  return true;
}

}  // namespace qsi
