#pragma once

#include <vector>

#include "qsi/lr.hpp"
#include "qsi/quiver.hpp"

namespace qsi {

struct SiConfig {
  long long max_labelings = 20000000;  // feasible-labeling DFS node guard
};
SiConfig& si_config();

// dim SI(Q,beta)_sigma: enumerate per-arrow partition labelings whose degrees
// balance sigma(x)*beta(x) at each vertex, contracting Schur functors against
// the determinant character at every vertex. 0 whenever sigma(beta) != 0.
Count si_dim(const Quiver& Q, const DimVector& beta, const Weight& sigma);

// a o b = dim SI(Q,b)_{<a,.>}; requires <a,b> = 0.
Count circ(const Quiver& Q, const DimVector& a, const DimVector& b);

// dim SI(Q,beta)_{m sigma} for m = 0..m_max.
std::vector<Count> si_series(const Quiver& Q, const DimVector& beta, const Weight& sigma,
                             int m_max);

}  // namespace qsi
