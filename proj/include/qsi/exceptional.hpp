#pragma once

#include <optional>
#include <vector>

#include "qsi/homext.hpp"
#include "qsi/quiver.hpp"

namespace qsi {

struct ExceptionalConfig {
  Int hilbert_bound_limit = 64;   // componentwise doubling cap for the basis search
  int refine_depth_cap = 64;
};
ExceptionalConfig& exceptional_config();

// Real Schur roots with e_i perp e_j (hom = ext = 0) for i < j.
bool is_exceptional_sequence(const Quiver& Q, const std::vector<DimVector>& roots);

// Braid generator s_i (or its inverse) acting between positions i, i+1
// (0-based i). The mutated root is the sign-normalized reflection
// e_{i+1} - <e_{i+1}, e_i> e_i (dual formula for the inverse).
std::vector<DimVector> braid_mutate(const Quiver& Q, const std::vector<DimVector>& seq, int i,
                                    bool inverse);

enum class PerpSide { Right, Left };

struct PerpEmbedding {
  Quiver sub_quiver;                 // n-k vertices, acyclic
  std::vector<DimVector> simples;    // dimension vectors in the ambient quiver
  PerpSide side = PerpSide::Right;
  DimVector embed(const IVec& beta) const;                // I(b) = sum b_i simples_i
  std::optional<IVec> preimage(const DimVector& g) const; // solve I(b) = g over N
};

PerpEmbedding perp_quiver(const Quiver& Q, const std::vector<DimVector>& seq, PerpSide side);

struct Refinement {
  std::vector<DimVector> exceptional;
  std::vector<int> block_bounds;  // b_0 = 0 < b_1 < ... < b_r = length
};

// Refine a Schur sequence to an exceptional sequence with block sums.
Refinement refine_schur_sequence(const Quiver& Q, const std::vector<DimVector>& seq);

// Unique solution of sum c_i gens_i = target over nonnegative integers, when
// the gens are linearly independent; nullopt otherwise.
std::optional<IVec> solve_nonneg_combination(const std::vector<DimVector>& gens,
                                             const DimVector& target);

}  // namespace qsi
