#include "qsi/hornklyachko.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "qsi/siweights.hpp"

namespace qsi {

TripleFlagData triple_flag(int n) {
  if (n < 1) throw DomainError("positive_n", "n must be positive");
  TripleFlagData T;
  T.n = n;
  std::vector<std::string> names;
  auto arm = [&](char c) {
    for (int i = 1; i <= n - 1; ++i) names.push_back(std::string(1, c) + std::to_string(i));
  };
  arm('x');
  arm('y');
  arm('z');
  names.push_back("c");
  std::vector<std::pair<int, int>> arrows;
  for (int armbase : {0, n - 1, 2 * (n - 1)}) {
    for (int i = 1; i < n - 1; ++i) arrows.emplace_back(armbase + i - 1, armbase + i);
    if (n >= 2) arrows.emplace_back(armbase + n - 2, 3 * (n - 1));
  }
  T.quiver = Quiver::make(std::move(names), std::move(arrows), false);
  IVec b;
  for (int arm_i = 0; arm_i < 3; ++arm_i)
    for (int i = 1; i <= n - 1; ++i) b.push_back(i);
  b.push_back(n);
  T.beta = DimVector{b};
  return T;
}

namespace {

void require_triple(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
  if (static_cast<int>(lam.length()) != n || static_cast<int>(mu.length()) != n ||
      static_cast<int>(nu.length()) != n)
    throw DomainError("triple_length", "partitions must have length n");
  require_partition(lam, "lambda");
  require_partition(mu, "mu");
  require_partition(nu, "nu");
}

}  // namespace

Weight weight_of_triple(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
  require_triple(lam, mu, nu, n);
  // Shift-normalize so lambda_n = mu_n = 0.
  Int a = lam.parts[n - 1], b = mu.parts[n - 1];
  Partition l = lam.shifted(-a), m = mu.shifted(-b), v = nu.shifted(-(a + b));
  TripleFlagData T = triple_flag(n);
  Weight sigma;
  sigma.v.assign(T.quiver.n(), 0);
  for (int k = 1; k <= n - 1; ++k) {
    sigma.v[T.x(k)] = l.parts[k - 1] - l.parts[k];
    sigma.v[T.y(k)] = m.parts[k - 1] - m.parts[k];
    sigma.v[T.z(k)] = v.parts[n - k - 1] - v.parts[n - k];
  }
  sigma.v[T.center()] = -v.parts[0];  // lambda_n + mu_n - nu_1 after the shift
  return sigma;
}

std::tuple<Partition, Partition, Partition> triple_of_weight(const Weight& sigma, Int a, Int b,
                                                             int n) {
  TripleFlagData T = triple_flag(n);
  check_on_vertices(T.quiver, sigma.v);
  IVec lam(n), mu(n), nu(n);
  for (int k = 1; k <= n; ++k) {
    Int sl = 0, sm = 0;
    for (int t = k; t <= n - 1; ++t) {
      sl += sigma.v[T.x(t)];
      sm += sigma.v[T.y(t)];
    }
    lam[k - 1] = sl + a;
    mu[k - 1] = sm + b;
  }
  for (int j = 1; j <= n; ++j) {
    Int s = -sigma.v[T.center()];
    for (int t = n + 1 - j; t <= n - 1; ++t) s -= sigma.v[T.z(t)];
    nu[j - 1] = s + a + b;
  }
  return {Partition(lam), Partition(mu), Partition(nu)};
}

Count lr_via_quiver(const Partition& lam, const Partition& mu, const Partition& nu, int n) {
  require_triple(lam, mu, nu, n);
  TripleFlagData T = triple_flag(n);
  return si_dim(T.quiver, T.beta, weight_of_triple(lam, mu, nu, n));
}

HornList horn_triples(int n, int r, HornMode mode) {
  if (r <= 0 || r >= n) throw DomainError("subset_rank_range", "need 0 < r < n");
  HornList out;
  if (mode == HornMode::Minimal && n == 2)
    out.warning =
        "minimal mode is only characterized for n >= 3; reporting the unfiltered nonzero list";

  std::vector<std::vector<int>> subsets;
  std::vector<int> cur;
  auto gen = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == r) {
      subsets.push_back(cur);
      return;
    }
    for (int v = start; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  gen(gen, 1);

  for (auto& I : subsets)
    for (auto& J : subsets)
      for (auto& K : subsets) {
        Count c = lr_coefficient(lambda_of_subset(I, n), lambda_of_subset(J, n),
                                 lambda_of_subset(K, n));
        if (c == 0) continue;
        bool keep = mode == HornMode::Nonzero || (n == 2) || c == 1;
        if (keep) out.triples.push_back(HornTriple{I, J, K, c});
      }
  return out;
}

WallInequality wall_to_IJK(const TripleFlagData& T, const DimVector& beta1) {
  check_dim_vector(T.quiver, beta1);
  const int n = T.n;

  // One-arm simple: a monotonicity inequality.
  std::vector<int> support;
  for (int v = 0; v < T.quiver.n(); ++v)
    if (beta1.v[v] > 0) support.push_back(v);
  if (support.size() == 1 && beta1.v[support[0]] == 1 && support[0] != T.center()) {
    WallInequality w;
    w.monotonicity = true;
    int v = support[0];
    if (v < n - 1) {
      w.arm = 'x';
      w.index = v + 1;  // sigma(x_i) >= 0 <=> lambda_i >= lambda_{i+1}
    } else if (v < 2 * (n - 1)) {
      w.arm = 'y';
      w.index = v - (n - 1) + 1;
    } else {
      w.arm = 'z';
      w.index = n - (v - 2 * (n - 1) + 1);  // sigma(z_k) >= 0 <=> nu_{n-k} >= nu_{n-k+1}
    }
    return w;
  }

  auto arm_jumps = [&](std::function<int(int)> vert) {
    std::vector<int> jumps;
    Int prev = 0;
    for (int i = 1; i <= n; ++i) {
      Int cur = i == n ? beta1.v[T.center()] : beta1.v[vert(i)];
      if (cur < prev || cur > prev + 1)
        throw DomainError("wall_pair_jumps",
                          "beta_1 must be nondecreasing along arms with jumps <= 1");
      if (cur == prev + 1) jumps.push_back(i);
      prev = cur;
    }
    return jumps;
  };
  WallInequality w;
  w.I = arm_jumps([&](int i) { return T.x(i); });
  w.J = arm_jumps([&](int i) { return T.y(i); });
  std::vector<int> K_raw = arm_jumps([&](int i) { return T.z(i); });
  for (int k : K_raw) w.K.push_back(n + 1 - k);
  std::sort(w.K.begin(), w.K.end());
  return w;
}

ProductCheck product_formula_check(const Partition& lam, const Partition& mu, const Partition& nu,
                                   const std::vector<int>& I, const std::vector<int>& J,
                                   const std::vector<int>& K) {
  const int n = static_cast<int>(lam.length());
  require_triple(lam, mu, nu, n);
  if (I.size() != J.size() || I.size() != K.size() || I.empty() ||
      static_cast<int>(I.size()) >= n)
    throw DomainError("subset_rank_range", "need equal subset sizes with 0 < r < n");

  auto pick = [&](const Partition& p, const std::vector<int>& S, bool complement) {
    std::vector<char> in(n + 1, 0);
    for (int s : S) {
      if (s < 1 || s > n) throw DomainError("subset_range", "subset element out of 1..n");
      in[s] = 1;
    }
    IVec parts;
    for (int i = 1; i <= n; ++i)
      if (in[i] != complement) parts.push_back(p.parts[i - 1]);
    return Partition(parts);
  };

  Int lhs_sum = 0, rhs_sum = 0;
  for (int i : I) lhs_sum += lam.parts[i - 1];
  for (int j : J) lhs_sum += mu.parts[j - 1];
  for (int k : K) rhs_sum += nu.parts[k - 1];
  if (lhs_sum != rhs_sum)
    throw DomainError("wall_equality",
                      "the (I,J,K) inequality does not hold with equality for this triple");

  ProductCheck pc;
  pc.lam_star = pick(lam, I, false);
  pc.mu_star = pick(mu, J, false);
  pc.nu_star = pick(nu, K, false);
  pc.lam_sharp = pick(lam, I, true);
  pc.mu_sharp = pick(mu, J, true);
  pc.nu_sharp = pick(nu, K, true);
  pc.lhs = lr_coefficient(lam, mu, nu);
  pc.rhs_star = lr_coefficient(pc.lam_star, pc.mu_star, pc.nu_star);
  pc.rhs_sharp = lr_coefficient(pc.lam_sharp, pc.mu_sharp, pc.nu_sharp);
  pc.equal = pc.lhs == pc.rhs_star * pc.rhs_sharp;
  return pc;
}

namespace {

std::vector<Partition> partitions_up_to(int n, Int size_bound) {
  std::vector<Partition> out;
  IVec cur(n, 0);
  auto rec = [&](auto&& self, int pos, Int cap, Int remaining) -> void {
    if (pos == n) {
      out.push_back(Partition(cur));
      return;
    }
    for (Int v = 0; v <= std::min(cap, remaining); ++v) {
      cur[pos] = v;
      self(self, pos + 1, v, remaining - v);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, size_bound, size_bound);
  return out;
}

}  // namespace

ScanReport scan_properties(
    int n, Int size_bound, int jobs,
    const std::function<Count(const Partition&, const Partition&, const Partition&)>& lr_hook) {
  if (n < 2) throw DomainError("scan_n", "scan needs n >= 2");
  auto lr = lr_hook ? lr_hook : [](const Partition& a, const Partition& b, const Partition& c) {
    return lr_coefficient(a, b, c);
  };
  auto parts = partitions_up_to(n, size_bound);
  TripleFlagData T = triple_flag(n);

  const size_t total_pairs = parts.size() * parts.size();
  std::mutex merge_mu;
  ScanReport report;
  std::atomic<size_t> cursor{0};

  auto worker = [&]() {
    ScanReport local;
    while (true) {
      size_t at = cursor.fetch_add(1);
      if (at >= total_pairs) break;
      const Partition& lam = parts[at / parts.size()];
      const Partition& mu = parts[at % parts.size()];
      for (const Partition& nu : parts) {
        local.triples_scanned++;
        Count c = lr(lam, mu, nu);
        Count c2 = lr(Partition(ivec_scale(2, lam.parts)), Partition(ivec_scale(2, mu.parts)),
                      Partition(ivec_scale(2, nu.parts)));
        local.saturation_checks++;
        if (c2 != 0 && c == 0)
          local.violations.push_back(ScanViolation{lam, mu, nu, "saturation"});
        if (c != 0) local.nonzero++;
        if (c == 1) {
          local.fulton_checks++;
          Count c3 = lr(Partition(ivec_scale(3, lam.parts)), Partition(ivec_scale(3, mu.parts)),
                        Partition(ivec_scale(3, nu.parts)));
          if (c2 != 1 || c3 != 1)
            local.violations.push_back(ScanViolation{lam, mu, nu, "fulton"});
        }
        if (c != 0) {
          // Face codimension l: the minimal face containing sigma has
          // (#distinct stable roots - 1).
          Weight sigma = weight_of_triple(lam, mu, nu, n);
          FaceDescriptor fd = face_of_weight(T.quiver, T.beta, sigma);
          int l = fd.codim;
          int jsum = partition_jumps(lam) + partition_jumps(mu) + partition_jumps(nu);
          local.jump_checks++;
          if (jsum > 4 * n - 4 - l)
            local.violations.push_back(ScanViolation{lam, mu, nu, "jump_bound_a"});
          if (c > 1 && jsum > 4 * n - 6 - l)
            local.violations.push_back(ScanViolation{lam, mu, nu, "jump_bound_b"});
        }
      }
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    report.triples_scanned += local.triples_scanned;
    report.nonzero += local.nonzero;
    report.saturation_checks += local.saturation_checks;
    report.fulton_checks += local.fulton_checks;
    report.jump_checks += local.jump_checks;
    for (auto& v : local.violations) report.violations.push_back(v);
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const ScanViolation& a, const ScanViolation& b) {
              return std::tie(a.kind, a.lam.parts, a.mu.parts, a.nu.parts) <
                     std::tie(b.kind, b.lam.parts, b.mu.parts, b.nu.parts);
            });
  return report;
}

}  // namespace qsi
