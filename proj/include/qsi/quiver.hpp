#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsi/basics.hpp"

namespace qsi {

// Finite directed graph with named vertices. Arrows are stored as index pairs
// (tail, head) in input order; all dimension vectors and weights over a quiver
// are dense IVecs indexed the same way.
class Quiver {
 public:
  static Quiver make(std::vector<std::string> vertex_names,
                     std::vector<std::pair<int, int>> arrows, bool allows_cycles);

  int n() const { return static_cast<int>(names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
  int tail(int a) const { return arrows_[a].first; }
  int head(int a) const { return arrows_[a].second; }
  bool allows_cycles() const { return allows_cycles_; }
  bool is_acyclic() const { return acyclic_; }

  // Topological order of vertex indices; only meaningful when acyclic.
  const std::vector<int>& topo_order() const;
  const std::vector<std::vector<int>>& arrows_out() const { return out_; }
  const std::vector<std::vector<int>>& arrows_in() const { return in_; }

  int index_of(const std::string& name) const;  // -1 when absent

  // Stable across arrow input order; used as a cross-quiver memo key.
  uint64_t digest() const { return digest_; }

  // Full subquiver on the given vertex subset (sorted indices), vertices renamed
  // by their original names. Arrows keep input order.
  Quiver restricted(const std::vector<int>& vertices) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> arrows_;
  bool allows_cycles_ = false;
  bool acyclic_ = false;
  std::vector<int> topo_;
  std::vector<std::vector<int>> out_, in_;
  uint64_t digest_ = 0;
};

struct DimVector {
  IVec v;
  bool operator==(const DimVector& o) const { return v == o.v; }
};

struct Weight {
  IVec v;
  bool operator==(const Weight& o) const { return v == o.v; }
};

inline Int weight_eval(const Weight& sigma, const IVec& alpha) {
  Int s = 0;
  for (size_t i = 0; i < alpha.size(); ++i) s += sigma.v[i] * alpha[i];
  return s;
}

// Euler (Ringel) form <a,b> = sum_x a(x)b(x) - sum_arrows a(ta)b(ha).
Int euler_form(const Quiver& Q, const IVec& a, const IVec& b);
inline Int euler_form(const Quiver& Q, const DimVector& a, const DimVector& b) {
  return euler_form(Q, a.v, b.v);
}

// sigma(.) = <alpha,.> and sigma(.) = -<.,beta> respectively.
Weight left_weight(const Quiver& Q, const DimVector& alpha);
Weight right_weight(const Quiver& Q, const DimVector& beta);

// JSON I/O per the external interface schemas.
Quiver parse_quiver(const std::string& text);
std::string quiver_to_json(const Quiver& Q);
DimVector parse_dim_vector(const Quiver& Q, const std::string& text);
Weight parse_weight(const Quiver& Q, const std::string& text);
std::string vector_on_quiver_to_json(const Quiver& Q, const IVec& v);

void check_dim_vector(const Quiver& Q, const DimVector& d);  // size + nonnegativity
void check_on_vertices(const Quiver& Q, const IVec& v);      // size only

// Separated doubling Q^ of a quiver with oriented cycles: vertices Q0 x {0,1},
// one arrow (ta,0)->(ha,1) per arrow and one arrow (x,0)->(x,1) per vertex.
struct DoubledQuiver {
  Quiver base;
  Quiver doubled;
  Weight tau;  // +1 on level 0, -1 on level 1

  int lifted_index(int base_vertex, int level) const;  // level in {0,1}
  DimVector lift_dim(const DimVector& alpha) const;
  Weight lift_weight(const Weight& sigma) const;
};

DoubledQuiver double_quiver(const Quiver& Q);

}  // namespace qsi
