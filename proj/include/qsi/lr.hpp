#pragma once

#include <map>
#include <vector>

#include "qsi/basics.hpp"
#include "qsi/partition.hpp"

namespace qsi {

// Littlewood-Richardson coefficient c_{lambda,mu}^nu for weakly decreasing
// integer sequences of one common length. Negative parts are handled by the
// shift normalization c_{l+a,m+b}^{n+(a+b)} before the tableau rule.
Count lr_coefficient(const Partition& lam, const Partition& mu, const Partition& nu);

// Full decomposition s_lam * s_mu = sum c^nu s_nu restricted to nu with at
// most max_len nonzero parts. Keys are trimmed partitions.
std::map<Partition, Count> tensor_multiplicities(const Partition& lam, const Partition& mu,
                                                 int max_len);

// dim (V_lam x V_mu x V_nu)^{SL_n} via the c_{lam,mu}^{nu*} conversion.
Count sl_invariant_dim(const Partition& lam, const Partition& mu, const Partition& nu, int n);

namespace lrdetail {

// All inputs trimmed, nonnegative, weakly decreasing. Memoized.
Count lr_normalized(const IVec& lam, const IVec& mu, const IVec& nu);

// Coefficient of S_target in S_{list[0]} x ... x S_{list[k-1]} as polynomial
// GL_d representations (everything has at most d rows). Rectangular targets
// peel factors by rectangle complementation, so sink contractions cost a
// single tableau count.
Count coefficient_in_product(const IVec& target, std::vector<IVec> list, int d);

// Expansion of a product of Schur functors into the Schur basis with at most
// max_len rows. Result keys trimmed.
std::map<IVec, Count> expand_product(const std::vector<IVec>& list, int max_len);

}  // namespace lrdetail

}  // namespace qsi
