#pragma once

#include <cstdint>
#include <vector>

#include "qsi/quiver.hpp"

namespace qsi {

// Dense matrices over F_p, p < 2^31. Row-major.
struct FpMatrix {
  int rows = 0, cols = 0;
  long long p = 0;
  std::vector<long long> a;
  FpMatrix(int r, int c, long long prime) : rows(r), cols(c), p(prime), a(size_t(r) * c, 0) {}
  long long& at(int r, int c) { return a[size_t(r) * cols + c]; }
  long long at(int r, int c) const { return a[size_t(r) * cols + c]; }
};

int fp_rank(FpMatrix m);                 // Gaussian elimination
long long fp_det(FpMatrix m);            // 0..p-1; square only
bool is_prime_u64(unsigned long long n); // deterministic Miller-Rabin

// Deterministic RNG for oracle sampling; explicit seeding only.
struct OracleRng {
  uint64_t state;
  explicit OracleRng(uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
  uint64_t next() {  // splitmix64
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  long long mod(long long p) { return static_cast<long long>(next() % static_cast<uint64_t>(p)); }
};

// Random representation of dimension d over F_p: one matrix per arrow.
std::vector<FpMatrix> random_representation(const Quiver& Q, const IVec& d, long long p,
                                            OracleRng& rng);

// The Ringel matrix d^V_W : sum_x Hom(V(x),W(x)) -> sum_a Hom(V(ta),W(ha)),
// (phi_x) -> (W(a) phi(ta) - phi(ha) V(a)). Hom and Ext are its kernel and
// cokernel.
FpMatrix ringel_matrix(const Quiver& Q, const IVec& dimV, const IVec& dimW,
                       const std::vector<FpMatrix>& V, const std::vector<FpMatrix>& W,
                       long long p);

struct HomExtEstimate {
  Int hom = 0;
  Int ext = 0;
};

// Samples `trials` independent pairs and reports the minimum Hom dimension
// observed (with ext = hom - <a,b>). Correct with probability -> 1.
HomExtEstimate generic_pair_oracle(const Quiver& Q, const DimVector& a, const DimVector& b,
                                   int trials, uint64_t seed, long long prime);

// Rank of the samples x samples matrix M_ij = det d^{V_i}_{W_j}; a lower bound
// for a o b that is exact with probability -> 1 as samples grows.
Int det_rank_oracle(const Quiver& Q, const DimVector& a, const DimVector& b, int samples,
                    uint64_t seed, long long prime);

constexpr long long kDefaultOraclePrime = 2147483647LL;  // 2^31 - 1, prime

}  // namespace qsi
