#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qsi/quiver.hpp"

namespace qsi {

enum class RootTag { RealSchur, IsotropicSchur, ImaginaryNonisotropicSchur, NotSchur };

struct RootClass {
  RootTag tag;
  Int self_pairing;
  bool is_schur() const { return tag != RootTag::NotSchur; }
  bool real() const { return tag == RootTag::RealSchur; }
  bool isotropic() const { return tag == RootTag::IsotropicSchur; }
  bool imaginary_nonisotropic() const { return tag == RootTag::ImaginaryNonisotropicSchur; }
};

struct HomExtConfig {
  Int max_total_size = 24;          // split searches: Schur roots, canonical decomposition
  long long node_cap = 200000000;   // subvector DFS node guard per top-level call
};
HomExtConfig& homext_config();

// Generic ext/hom of Schofield: ext(a,b) = max{ -<g,b> : g embedded in a }.
Int ext_generic(const Quiver& Q, const DimVector& a, const DimVector& b);
Int hom_generic(const Quiver& Q, const DimVector& a, const DimVector& b);

// ext(a,b) == 0, without computing the max. Memoized pairwise.
bool ext_is_zero(const Quiver& Q, const IVec& a, const IVec& b);

// a embeds in b (a general b-dimensional representation has an a-dimensional
// subrepresentation); dual quotient relation.
bool embeds(const Quiver& Q, const DimVector& a, const DimVector& b);
bool surjects(const Quiver& Q, const DimVector& b, const DimVector& bq);

// All g with g embedded in a, sorted lexicographically. Includes 0 and a.
std::vector<IVec> sub_dimensions(const Quiver& Q, const IVec& a);

RootClass classify_root(const Quiver& Q, const DimVector& a);
bool is_schur_root(const Quiver& Q, const DimVector& a);

struct CanonicalDecomposition {
  std::vector<std::pair<DimVector, Int>> summands;  // ordered, multiplicity-grouped
};
CanonicalDecomposition canonical_decomposition(const Quiver& Q, const DimVector& a);

bool is_prehomogeneous(const Quiver& Q, const DimVector& a);

namespace subsearch {

// DFS over subvectors g <= ambient satisfying the generic-rank arc condition
//   g(ha) >= g(ta) - ambient(ta) + min(ambient(ta), ambient(ha)),
// a necessary condition for g to be the dimension vector of a subrepresentation
// of a general ambient-dimensional representation. Vertices are assigned in
// topological order; candidates are reported in vertex input order.
struct Options {
  Int size_min = 0;
  Int size_max = -1;                 // -1: no bound
  const IVec* objective = nullptr;   // prune unless obj(g) can land in [obj_min, obj_max]
  Int obj_min = 0, obj_max = 0;
  bool exclude_zero = false;
  bool exclude_full = false;
};

// visit returns false to stop the enumeration early.
void enumerate(const Quiver& Q, const IVec& ambient, const Options& opt,
               const std::function<bool(const IVec&)>& visit);

// Per-vertex coefficients of the linear form g -> <g, b>.
IVec euler_objective(const Quiver& Q, const IVec& b);

}  // namespace subsearch

}  // namespace qsi
