#pragma once

#include <functional>
#include <string>
#include <tuple>
#include <vector>

#include "qsi/conefaces.hpp"
#include "qsi/lr.hpp"
#include "qsi/partition.hpp"
#include "qsi/quiver.hpp"

namespace qsi {

// T_{n,n,n} with vertex order x1..x_{n-1}, y1..y_{n-1}, z1..z_{n-1}, c and the
// staircase dimension vector (1..n-1; 1..n-1, n; 1..n-1).
struct TripleFlagData {
  int n = 0;
  Quiver quiver;
  DimVector beta;
  int x(int i) const { return i - 1; }            // 1 <= i <= n-1
  int y(int i) const { return n - 1 + i - 1; }
  int z(int i) const { return 2 * (n - 1) + i - 1; }
  int center() const { return 3 * (n - 1); }
};

TripleFlagData triple_flag(int n);

// sigma(lam,mu,nu) with dim SI(T,beta)_sigma = c_{lam,mu}^nu; inverse up to
// the (a,b) shift pair of the bijection psi.
Weight weight_of_triple(const Partition& lam, const Partition& mu, const Partition& nu, int n);
std::tuple<Partition, Partition, Partition> triple_of_weight(const Weight& sigma, Int a, Int b,
                                                             int n);

Count lr_via_quiver(const Partition& lam, const Partition& mu, const Partition& nu, int n);

enum class HornMode { Nonzero, Minimal };

struct HornTriple {
  std::vector<int> I, J, K;
  Count lr_value;
};
struct HornList {
  std::vector<HornTriple> triples;
  std::string warning;  // set for minimal mode at n = 2
};

HornList horn_triples(int n, int r, HornMode mode);

// Translation of a wall-pair member into subset data. Nondecreasing beta_1
// with jumps <= 1 gives the (I,J,K) inequality
//   sum_I lambda_i + sum_J mu_j <= sum_K nu_k
// (K already reflected); a one-arm simple gives a monotonicity inequality.
struct WallInequality {
  bool monotonicity = false;
  char arm = 0;   // 'x' -> lambda, 'y' -> mu, 'z' -> nu
  int index = 0;  // lambda_index >= lambda_{index+1}
  std::vector<int> I, J, K;
};

WallInequality wall_to_IJK(const TripleFlagData& T, const DimVector& beta1);

struct ProductCheck {
  Count lhs, rhs_star, rhs_sharp;
  bool equal = false;
  Partition lam_star, mu_star, nu_star, lam_sharp, mu_sharp, nu_sharp;
};

ProductCheck product_formula_check(const Partition& lam, const Partition& mu, const Partition& nu,
                                   const std::vector<int>& I, const std::vector<int>& J,
                                   const std::vector<int>& K);

struct ScanViolation {
  Partition lam, mu, nu;
  std::string kind;
};

struct ScanReport {
  long long triples_scanned = 0;
  long long nonzero = 0;
  long long saturation_checks = 0, fulton_checks = 0, jump_checks = 0;
  std::vector<ScanViolation> violations;
};

// Exhaustive scan over monotone nonnegative triples with |.| <= size_bound:
// saturation, Fulton (N = 2, 3), and the face-codimension jump bounds. The
// lr hook exists so tests can corrupt the engine and see violations surface.
ScanReport scan_properties(
    int n, Int size_bound, int jobs = 1,
    const std::function<Count(const Partition&, const Partition&, const Partition&)>& lr_hook = {});

}  // namespace qsi
