#include "qsi/conefaces.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace qsi {

using Rat = boost::multiprecision::cpp_rational;

ConeConfig& cone_config() {
  static ConeConfig cfg;
  return cfg;
}

std::vector<DimVector> sigma_inequalities(const Quiver& Q, const DimVector& alpha) {
  check_dim_vector(Q, alpha);
  std::vector<DimVector> out;
  for (auto& g : sub_dimensions(Q, alpha.v))
    if (!ivec_is_zero(g) && g != alpha.v) out.push_back(DimVector{g});
  return out;
}

std::vector<IVec> weight_nullspace(const Quiver& Q, const std::vector<DimVector>& roots) {
  const int n = Q.n();
  const int r = static_cast<int>(roots.size());
  // Row-reduce the r x n system sigma(root_i) = 0 over Q.
  std::vector<std::vector<Rat>> m(r, std::vector<Rat>(n));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = roots[i].v[j];
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < r; ++col) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (m[i][col] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[p], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (int c = col; c < n; ++c) m[row][c] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int c = col; c < n; ++c) m[i][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<char> is_pivot(n, 0);
  for (int c : pivot_col) is_pivot[c] = 1;

  std::vector<IVec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(n, 0);
    v[free] = 1;
    for (int i = 0; i < row; ++i) v[pivot_col[i]] = -m[i][free];
    // Clear denominators, reduce content.
    Count lcm = 1;
    for (auto& x : v) {
      Count den = boost::multiprecision::denominator(x);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    IVec iv(n);
    Count g = 0;
    for (int j = 0; j < n; ++j) {
      Count num = boost::multiprecision::numerator(v[j]) *
                  (lcm / boost::multiprecision::denominator(v[j]));
      iv[j] = static_cast<Int>(num);
      g = boost::multiprecision::gcd(g, boost::multiprecision::abs(num));
    }
    if (g > 1)
      for (auto& x : iv) x /= static_cast<Int>(g);
    basis.push_back(iv);
  }
  return basis;
}

namespace {

std::vector<int> find_certificate(const Quiver& Q, const std::vector<DimVector>& roots,
                                  std::map<std::pair<int, int>, Count>* circ_cache) {
  const int r = static_cast<int>(roots.size());
  auto pair_ok = [&](int i, int j) {  // i may precede j
    if (euler_form(Q, roots[i], roots[j]) != 0) return false;
    if (euler_form(Q, roots[j], roots[i]) > 0) return false;
    auto key = std::make_pair(i, j);
    auto it = circ_cache->find(key);
    Count c;
    if (it != circ_cache->end()) {
      c = it->second;
    } else {
      c = circ(Q, roots[i], roots[j]);
      circ_cache->emplace(key, c);
    }
    return c == 1;
  };
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  // Lexicographically first valid permutation.
  std::sort(perm.begin(), perm.end());
  do {
    bool ok = true;
    for (int i = 0; i < r && ok; ++i)
      for (int j = i + 1; j < r && ok; ++j)
        if (!pair_ok(perm[i], perm[j])) ok = false;
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {};
}

FaceDescriptor lift_descriptor(const FaceDescriptor& fd, const std::vector<int>& support,
                               int full_n) {
  FaceDescriptor out = fd;
  out.restricted_support = true;
  out.roots.clear();
  for (auto& root : fd.roots) {
    IVec lifted(full_n, 0);
    for (size_t i = 0; i < support.size(); ++i) lifted[support[i]] = root.v[i];
    out.roots.push_back(DimVector{lifted});
  }
  return out;
}

}  // namespace

std::vector<FaceDescriptor> enumerate_faces(const Quiver& Q, const DimVector& alpha, int r,
                                            int jobs) {
  check_dim_vector(Q, alpha);
  if (ivec_is_zero(alpha.v)) throw DomainError("nonzero_alpha", "alpha must be nonzero");

  // Non-sincere alpha: the bijection is applied on the support subquiver and
  // the result flagged.
  std::vector<int> support;
  for (int v = 0; v < Q.n(); ++v)
    if (alpha.v[v] > 0) support.push_back(v);
  if (static_cast<int>(support.size()) < Q.n()) {
    Quiver sub = Q.restricted(support);
    IVec a;
    for (int v : support) a.push_back(alpha.v[v]);
    auto faces = enumerate_faces(sub, DimVector{a}, r, jobs);
    std::vector<FaceDescriptor> out;
    for (auto& fd : faces) out.push_back(lift_descriptor(fd, support, Q.n()));
    return out;
  }

  const int n = Q.n();
  if (r < 1 || r > n - 1) throw DomainError("face_rank_range", "need 1 <= r <= n-1");
  if (r > cone_config().max_face_rank)
    throw CapExceeded("enumerate_faces: r exceeds cone_config().max_face_rank");

  // Candidate roots: Schur roots <= alpha componentwise.
  std::vector<DimVector> cand;
  IVec g(n, 0);
  auto gen = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      if (!ivec_is_zero(g) && is_schur_root(Q, DimVector{g})) cand.push_back(DimVector{g});
      return;
    }
    for (Int v = 0; v <= alpha.v[pos]; ++v) {
      g[pos] = v;
      self(self, pos + 1);
    }
    g[pos] = 0;
  };
  gen(gen, 0);
  std::sort(cand.begin(), cand.end(),
            [](const DimVector& a, const DimVector& b) { return a.v < b.v; });

  std::vector<FaceDescriptor> faces;
  std::mutex faces_mu;

  auto coeff_search = [&](const std::vector<DimVector>& roots) -> std::vector<IVec> {
    // Positive-integer solutions of sum a_i roots_i = alpha.
    std::vector<IVec> sols;
    IVec coeff(roots.size(), 0);
    auto rec = [&](auto&& self, size_t i, IVec rem) -> void {
      if (i == roots.size()) {
        if (ivec_is_zero(rem)) sols.push_back(coeff);
        return;
      }
      Int cap = std::numeric_limits<Int>::max();
      for (int v = 0; v < n; ++v)
        if (roots[i].v[v] > 0) cap = std::min(cap, rem[v] / roots[i].v[v]);
      for (Int c = 1; c <= cap; ++c) {
        coeff[i] = c;
        IVec next = rem;
        bool ok = true;
        for (int v = 0; v < n; ++v) {
          next[v] -= c * roots[i].v[v];
          if (next[v] < 0) ok = false;
        }
        if (ok) self(self, i + 1, next);
      }
      coeff[i] = 0;
    };
    rec(rec, 0, alpha.v);
    return sols;
  };

  auto consider = [&](const std::vector<DimVector>& roots) {
    for (auto& coeff : coeff_search(roots)) {
      // Multiplicity-1 rule for imaginary non-isotropic roots.
      bool ok = true;
      for (size_t i = 0; i < roots.size() && ok; ++i)
        if (coeff[i] > 1 && euler_form(Q, roots[i], roots[i]) < 0) ok = false;
      if (!ok) continue;
      std::map<std::pair<int, int>, Count> local;
      auto cert = find_certificate(Q, roots, &local);
      if (cert.empty()) continue;
      FaceDescriptor fd;
      fd.roots = roots;
      fd.coefficients = coeff;
      fd.codim = r - 1;
      fd.certificate = cert;
      std::lock_guard<std::mutex> lock(faces_mu);
      faces.push_back(std::move(fd));
    }
  };

  // All r-subsets of candidates, the first index partitioned across workers.
  auto worker = [&](size_t first_mod, size_t stride) {
    std::vector<int> idx;
    auto choose = [&](auto&& self, size_t start) -> void {
      if (static_cast<int>(idx.size()) == r) {
        std::vector<DimVector> roots;
        for (int i : idx) roots.push_back(cand[i]);
        consider(roots);
        return;
      }
      for (size_t i = start; i < cand.size(); ++i) {
        if (idx.empty() && i % stride != first_mod) continue;
        idx.push_back(static_cast<int>(i));
        self(self, i + 1);
        idx.pop_back();
      }
    };
    choose(choose, 0);
  };
  if (jobs <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back(worker, static_cast<size_t>(t), static_cast<size_t>(jobs));
    for (auto& th : pool) th.join();
  }
  std::sort(faces.begin(), faces.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
    std::vector<IVec> ra, rb;
    for (auto& x : a.roots) ra.push_back(x.v);
    for (auto& x : b.roots) rb.push_back(x.v);
    return std::tie(ra, a.coefficients) < std::tie(rb, b.coefficients);
  });
  return faces;
}

FaceDescriptor face_of_weight(const Quiver& Q, const DimVector& alpha, const Weight& sigma) {
  check_dim_vector(Q, alpha);
  check_on_vertices(Q, sigma.v);

  std::vector<int> support;
  for (int v = 0; v < Q.n(); ++v)
    if (alpha.v[v] > 0) support.push_back(v);
  if (static_cast<int>(support.size()) < Q.n()) {
    Quiver sub = Q.restricted(support);
    IVec a, s;
    for (int v : support) {
      a.push_back(alpha.v[v]);
      s.push_back(sigma.v[v]);
    }
    return lift_descriptor(face_of_weight(sub, DimVector{a}, Weight{s}), support, Q.n());
  }

  if (!is_semistable_dim(Q, alpha, sigma))
    throw DomainError("sigma_in_Sigma", "sigma is not in Sigma(Q,alpha)");
  auto dec = sigma_stable_decomposition(Q, alpha, sigma);
  for (auto& [root, mult] : dec.factors)
    if (weight_eval(sigma, root.v) != 0)
      throw DomainError("face_internal", "sigma does not vanish on a stable factor");

  // Canonical storage: roots sorted lex; certificate permutes sorted indices.
  std::vector<size_t> order(dec.factors.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return dec.factors[a].first.v < dec.factors[b].first.v;
  });
  std::vector<int> where(dec.factors.size());
  for (size_t pos = 0; pos < order.size(); ++pos) where[order[pos]] = static_cast<int>(pos);

  FaceDescriptor fd;
  for (size_t pos = 0; pos < order.size(); ++pos) {
    fd.roots.push_back(dec.factors[order[pos]].first);
    fd.coefficients.push_back(dec.factors[order[pos]].second);
  }
  for (size_t i = 0; i < dec.factors.size(); ++i) fd.certificate.push_back(where[i]);
  fd.codim = static_cast<int>(fd.roots.size()) - 1;
  return fd;
}

std::vector<Count> ray_series(const Quiver& Q, const DimVector& alpha, const Weight& sigma_ray,
                              int m_max) {
  Int g = 0;
  for (Int x : sigma_ray.v) g = std::gcd(g, std::abs(x));
  if (g != 1) throw DomainError("ray_indivisible", "sigma_ray must be indivisible");
  FaceDescriptor fd = face_of_weight(Q, alpha, sigma_ray);
  int n_eff = 0;
  for (int v = 0; v < Q.n(); ++v)
    if (alpha.v[v] > 0) ++n_eff;
  if (static_cast<int>(fd.roots.size()) != n_eff - 1)
    throw DomainError("extremal_ray", "sigma_ray does not span an extremal ray");
  return si_series(Q, alpha, sigma_ray, m_max);
}

Weight interior_weight(const Quiver& Q, const DimVector& alpha, const FaceDescriptor& face) {
  auto basis = weight_nullspace(Q, face.roots);
  const int k = static_cast<int>(basis.size());
  if (k == 0) throw DomainError("interior_weight", "face span has no weights");
  auto ineqs = sigma_inequalities(Q, alpha);

  // Classify inequalities: identically zero on the span, or required strict.
  std::vector<IVec> strict;
  for (auto& d : ineqs) {
    bool on_face = true;
    for (auto& b : basis)
      if (weight_eval(Weight{b}, d.v) != 0) on_face = false;
    if (!on_face) strict.push_back(d.v);
  }

  for (Int box = 1; box <= cone_config().interior_box_limit; box *= 2) {
    IVec c(k, -box);
    while (true) {
      IVec sigma(Q.n(), 0);
      for (int i = 0; i < k; ++i) sigma = ivec_add(sigma, ivec_scale(c[i], basis[i]));
      if (!ivec_is_zero(sigma)) {
        bool ok = true;
        for (auto& d : strict)
          if (weight_eval(Weight{sigma}, d) >= 0) {
            ok = false;
            break;
          }
        if (ok) return Weight{sigma};
      }
      int pos = k - 1;
      while (pos >= 0 && c[pos] == box) {
        c[pos] = -box;
        --pos;
      }
      if (pos < 0) break;
      ++c[pos];
    }
  }
  throw CapExceeded("interior_weight: coefficient box limit exhausted");
}

}  // namespace qsi
