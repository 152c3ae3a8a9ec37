#pragma once

#include <optional>
#include <vector>

#include "qsi/homext.hpp"
#include "qsi/quiver.hpp"
#include "qsi/siweights.hpp"

namespace qsi {

struct StabilityConfig {
  Int direct_box_threshold = 300000;  // subvector box bound for direct scans
  Int doubling_cap = 1 << 20;         // largest m tried by stability_via_doubling
};
StabilityConfig& stability_config();

// sigma-(semi)stability of a dimension vector: sigma(a) = 0 and sigma <= 0
// (resp. < 0) on embedded proper nonzero subvectors. Large instances route
// through dim SI(Q,a)_sigma != 0 (same set by the theorem on Sigma(Q,a)).
bool is_semistable_dim(const Quiver& Q, const DimVector& a, const Weight& sigma);
bool is_stable_dim(const Quiver& Q, const DimVector& a, const Weight& sigma);

struct StableDecomposition {
  // Distinct stable roots with multiplicities, listed in certificate order:
  // root_i o root_j = 1 for i < j.
  std::vector<std::pair<DimVector, Int>> factors;
  IVec total;
};

StableDecomposition sigma_stable_decomposition(const Quiver& Q, const DimVector& a,
                                               const Weight& sigma);

struct HNBlock {
  DimVector dim;
  Int slope_num, slope_den;  // reduced, den > 0
};
struct HNType {
  std::vector<HNBlock> blocks;  // top-down: strictly decreasing slopes
};

HNType hn_type(const Quiver& Q, const DimVector& a, const Weight& sigma, const Weight& tau);

StableDecomposition sigma_tau_stable_decomposition(const Quiver& Q, const DimVector& a,
                                                   const Weight& sigma, const Weight& tau);

struct RootQuiver {
  Quiver quiver;  // -<d_i,d_j> arrows i->j, 1-<d_i,d_i> loops
  bool path_connected;
};
RootQuiver root_quiver(const Quiver& Q, const std::vector<DimVector>& roots);

// Simple dimension vectors for arbitrary quivers (cycles allowed).
bool is_simple_dim(const Quiver& Q, const DimVector& a);

// (Semi)stability through the separated doubling; agrees with the direct test
// on acyclic quivers and with is_simple_dim at sigma = 0.
bool stability_via_doubling(const Quiver& Q, const DimVector& a, const Weight& sigma,
                            bool stable);

// Cross-check (not the primary test): the extremal-ray criterion for
// sigma-stability. Enumerates sigma-stable vectors with entries <= entry_cap,
// sieves ray generators, expresses alpha over an independent subset and
// applies the pairing / path-connectivity / indivisibility conditions.
// nullopt when no expression is found inside the cap.
std::optional<bool> sigma_stable_criterion_crosscheck(const Quiver& Q, const DimVector& a,
                                                      const Weight& sigma, Int entry_cap);

}  // namespace qsi
