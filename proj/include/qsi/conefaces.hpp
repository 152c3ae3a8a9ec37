#pragma once

#include <vector>

#include "qsi/quiver.hpp"
#include "qsi/stability.hpp"

namespace qsi {

struct ConeConfig {
  Int max_face_rank = 8;          // largest r accepted by enumerate_faces
  Int interior_box_limit = 64;    // coefficient box for interior-weight search
};
ConeConfig& cone_config();

// A face of R+Sigma(Q,alpha): quiver Schur sequence with coefficients.
struct FaceDescriptor {
  std::vector<DimVector> roots;  // sorted lexicographically (canonical form)
  std::vector<Int> coefficients;
  int codim = 0;                      // r - 1, relative to dim Sigma = n - 1
  std::vector<int> certificate;       // ordering with circ = 1 forward pairs
  bool restricted_support = false;    // computed on the support subquiver
};

// All gamma embedded in alpha with 0 != gamma != alpha: the (non-minimal)
// inequality list sigma(gamma) <= 0 cutting out Sigma(Q,alpha).
std::vector<DimVector> sigma_inequalities(const Quiver& Q, const DimVector& alpha);

// Faces of dimension n - r via the Schur-sequence bijection. Candidate
// subsets are partitioned across jobs worker threads; output order is
// canonical (sorted by root sets) regardless of jobs.
std::vector<FaceDescriptor> enumerate_faces(const Quiver& Q, const DimVector& alpha, int r,
                                            int jobs = 1);

FaceDescriptor face_of_weight(const Quiver& Q, const DimVector& alpha, const Weight& sigma);

std::vector<Count> ray_series(const Quiver& Q, const DimVector& alpha, const Weight& sigma_ray,
                              int m_max);

// Deterministic integral weight in the relative interior of the face spanned
// by the descriptor's roots (strict on every other inequality).
Weight interior_weight(const Quiver& Q, const DimVector& alpha, const FaceDescriptor& face);

// Integer basis of { sigma : sigma(root_i) = 0 } (content-reduced rows).
std::vector<IVec> weight_nullspace(const Quiver& Q, const std::vector<DimVector>& roots);

}  // namespace qsi
