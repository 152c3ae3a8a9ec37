#include "qsi/lr.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace qsi {
namespace lrdetail {

namespace {

struct TripleKey {
  IVec a, b, c;
  bool operator==(const TripleKey& o) const { return a == o.a && b == o.b && c == o.c; }
};
struct TripleKeyHash {
  size_t operator()(const TripleKey& k) const {
    return static_cast<size_t>(hash_mix(hash_mix(ivec_hash(k.a), ivec_hash(k.b)), ivec_hash(k.c)));
  }
};

std::shared_mutex lr_mutex;
std::unordered_map<TripleKey, Count, TripleKeyHash> lr_cache;

IVec trim(IVec v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Counts LR skew tableaux of shape nu/lam with content mu: semistandard
// fillings whose right-to-left, top-to-bottom reading word is lattice.
Count count_lr_tableaux(const IVec& lam, const IVec& mu, const IVec& nu) {
  const int rows = static_cast<int>(nu.size());
  const int labels = static_cast<int>(mu.size());
  IVec lam_pad = lam;
  lam_pad.resize(rows, 0);

  // Cells in reading order.
  struct Cell {
    int r, c;
    bool above_in_skew;  // the cell (r-1,c) is a skew cell (constraint applies)
    bool has_right;      // the cell (r,c+1) is a skew cell
  };
  std::vector<Cell> cells;
  for (int r = 0; r < rows; ++r)
    for (int c = static_cast<int>(nu[r]) - 1; c >= static_cast<int>(lam_pad[r]); --c)
      cells.push_back({r, c, r > 0 && c >= lam_pad[r - 1], c + 1 < nu[r]});

  std::vector<IVec> val(rows);
  for (int r = 0; r < rows; ++r) val[r].assign(static_cast<size_t>(nu[r]), 0);
  IVec count(static_cast<size_t>(labels) + 1, 0);

  Count total = 0;
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      ++total;
      return;
    }
    const Cell& cell = cells[idx];
    Int hi = cell.has_right ? val[cell.r][cell.c + 1] : labels;
    Int lo = cell.above_in_skew ? val[cell.r - 1][cell.c] + 1 : 1;
    for (Int v = lo; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;            // content quota
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
      count[v]++;
      val[cell.r][cell.c] = v;
      self(self, idx + 1);
      count[v]--;
    }
  };
  rec(rec, 0);
  return total;
}

bool is_rectangle(const IVec& v) {
  if (v.empty()) return false;
  for (Int x : v)
    if (x != v[0]) return false;
  return true;
}

}  // namespace

Count lr_normalized(const IVec& lam_in, const IVec& mu_in, const IVec& nu_in) {
  IVec lam = trim(lam_in), mu = trim(mu_in), nu = trim(nu_in);
  if (ivec_total(lam) + ivec_total(mu) != ivec_total(nu)) return 0;
  if (lam.size() > nu.size() || mu.size() > nu.size()) return 0;
  for (size_t i = 0; i < lam.size(); ++i)
    if (lam[i] > nu[i]) return 0;
  // Horn-type necessary bound keeps hopeless calls out of the DFS.
  for (size_t i = 0; i < nu.size(); ++i) {
    Int li = i < lam.size() ? lam[i] : 0;
    Int m1 = mu.empty() ? 0 : mu[0];
    if (nu[i] > li + m1) return 0;
  }
  if (mu.empty()) return lam == nu ? 1 : 0;

  // c_{lam,mu}^{rect} is 0/1 by complementation.
  if (is_rectangle(nu)) {
    const size_t d = nu.size();
    const Int w = nu[0];
    IVec lp = lam, mp = mu;
    lp.resize(d, 0);
    mp.resize(d, 0);
    for (size_t i = 0; i < d; ++i)
      if (mp[i] != w - lp[d - 1 - i]) return 0;
    return 1;
  }

  TripleKey key{lam, mu, nu};
  {
    std::shared_lock lock(lr_mutex);
    auto it = lr_cache.find(key);
    if (it != lr_cache.end()) return it->second;
  }
  Count result = count_lr_tableaux(lam, mu, nu);
  {
    std::unique_lock lock(lr_mutex);
    lr_cache.emplace(key, result);
  }
  return result;
}

Count coefficient_in_product(const IVec& target_in, std::vector<IVec> list, int d) {
  IVec target = trim(target_in);
  if (static_cast<int>(target.size()) > d) return 0;
  for (auto& l : list)
    if (static_cast<int>(trim(l).size()) > d) return 0;
  while (true) {
    // Drop empty factors.
    std::vector<IVec> nl;
    for (auto& l : list) {
      IVec t = trim(l);
      if (!t.empty()) nl.push_back(std::move(t));
    }
    list = std::move(nl);
    if (list.empty()) return target.empty() ? 1 : 0;
    if (list.size() == 1) return list[0] == target ? 1 : 0;
    if (list.size() == 2) return lr_normalized(list[0], list[1], target);

    if (is_rectangle(target)) {
      // Peel the last factor: coefficient of a rectangle R in X x C equals
      // [X = complement of C in R].
      const size_t dr = target.size();
      const Int w = target[0];
      IVec last = list.back();
      list.pop_back();
      if (last.size() > dr || last[0] > w) return 0;
      last.resize(dr, 0);
      IVec comp(dr);
      for (size_t i = 0; i < dr; ++i) comp[i] = w - last[dr - 1 - i];
      target = trim(comp);
      continue;
    }

    // General fold: expand the first two factors, bounded by the target.
    IVec a = list[0], b = list[1];
    auto terms = expand_product({a, b}, d);
    Count total = 0;
    std::vector<IVec> rest(list.begin() + 2, list.end());
    for (auto& [p, c] : terms) {
      bool contained = p.size() <= target.size();
      for (size_t i = 0; contained && i < p.size(); ++i)
        if (p[i] > target[i]) contained = false;
      if (!contained) continue;
      std::vector<IVec> sub;
      sub.push_back(p);
      for (auto& r : rest) sub.push_back(r);
      total += c * coefficient_in_product(target, sub, d);
    }
    return total;
  }
}

namespace {

std::shared_mutex prod_mutex;
struct ProdKey {
  IVec a, b;
  int d;
  bool operator==(const ProdKey& o) const { return d == o.d && a == o.a && b == o.b; }
};
struct ProdKeyHash {
  size_t operator()(const ProdKey& k) const {
    return static_cast<size_t>(hash_mix(hash_mix(ivec_hash(k.a), ivec_hash(k.b)), k.d));
  }
};
std::unordered_map<ProdKey, std::map<IVec, Count>, ProdKeyHash> prod_cache;

// All nu with c_{a,b}^nu != 0 and at most max_len rows. Candidates are built
// by DFS over rows within the bound max(a_i, nu_{i+1}) <= nu_i <= a_i + b_1.
std::map<IVec, Count> expand_pair(const IVec& a, const IVec& b, int max_len) {
  ProdKey key{a, b, max_len};
  {
    std::shared_lock lock(prod_mutex);
    auto it = prod_cache.find(key);
    if (it != prod_cache.end()) return it->second;
  }
  std::map<IVec, Count> out;
  const Int total = ivec_total(a) + ivec_total(b);
  const Int b1 = b.empty() ? 0 : b[0];
  IVec nu;
  auto rec = [&](auto&& self, int row, Int remaining, Int prev) -> void {
    if (remaining == 0) {
      // Rows below must stay at their lambda floor (= 0 beyond len(a)), and
      // containment a <= nu forces a to be exhausted.
      for (size_t i = nu.size(); i < a.size(); ++i)
        if (a[i] > 0) return;
      Count c = lr_normalized(a, b, nu);
      if (c != 0) out[trim(nu)] += c;
      return;
    }
    if (row >= max_len) return;
    Int floor_ = row < static_cast<int>(a.size()) ? a[row] : 0;
    Int cap = std::min(prev, floor_ + b1);
    for (Int v = cap; v >= std::max<Int>(floor_, 1); --v) {
      if (v > remaining) continue;
      nu.push_back(v);
      self(self, row + 1, remaining - v, v);
      nu.pop_back();
    }
    // Row stops here (all later rows zero): only valid if remaining == 0,
    // handled above.
  };
  if (total == 0) {
    out[IVec{}] = 1;
  } else {
    rec(rec, 0, total, total);
  }
  {
    std::unique_lock lock(prod_mutex);
    prod_cache.emplace(key, out);
  }
  return out;
}

}  // namespace

std::map<IVec, Count> expand_product(const std::vector<IVec>& list, int max_len) {
  std::map<IVec, Count> acc;
  acc[IVec{}] = 1;
  for (const auto& l : list) {
    IVec t = trim(l);
    if (static_cast<int>(t.size()) > max_len) return {};
    std::map<IVec, Count> next;
    for (auto& [p, c] : acc)
      for (auto& [q, c2] : expand_pair(p, t, max_len)) next[q] += c * c2;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace lrdetail

Count lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu) {
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  if (lam.length() != mu.length() || lam.length() != nu.length())
    throw DomainError("common_length", "lr_coefficient needs sequences of one common length");
  const size_t n = lam.length();
  if (n == 0) return 1;
  const Int a = -lam.parts.back(), b = -mu.parts.back();
  IVec l = lam.shifted(a).parts, m = mu.shifted(b).parts, v = nu.shifted(a + b).parts;
  if (v.back() < 0) return 0;
  return lrdetail::lr_normalized(l, m, v);
}

std::map<Partition, Count> tensor_multiplicities(const Partition& lam, const Partition& mu,
                                                 int max_len) {
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  if (!lam.nonnegative() || !mu.nonnegative())
    throw DomainError("nonnegative_parts", "tensor_multiplicities needs nonnegative partitions");
  auto raw = lrdetail::expand_product({lam.parts, mu.parts}, max_len);
  std::map<Partition, Count> out;
  for (auto& [p, c] : raw) out[Partition(p)] = c;
  return out;
}

Count sl_invariant_dim(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
  if (n <= 0) throw DomainError("positive_n", "n must be positive");
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
  Partition l = lam.padded(n), m = mu.padded(n), v = nu.padded(n);
  if (!l.nonnegative() || !m.nonnegative() || !v.nonnegative())
    throw DomainError("nonnegative_parts", "sl_invariant_dim needs nonnegative parts");
  Int total = l.sum() + m.sum() + v.sum();
  if (total % n != 0) return 0;
  Int deg = total / n;
  IVec star(n);
  for (int i = 0; i < n; ++i) star[i] = deg - v.parts[n - 1 - i];
  return lr_coefficient(l, m, Partition(star));
}

}  // namespace qsi
