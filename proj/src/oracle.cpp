#include "qsi/oracle.hpp"

#include <algorithm>

namespace qsi {

namespace {

long long mulmod(long long a, long long b, long long p) {
  return static_cast<long long>((__int128)a * b % p);
}

long long powmod(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

long long inv_mod(long long a, long long p) { return powmod(a, p - 2, p); }

}  // namespace

bool is_prime_u64(unsigned long long n) {
  if (n < 2) return false;
  for (unsigned long long q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  unsigned long long d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto witness = [&](unsigned long long a) {
    unsigned long long x = 1, base = a % n, e = d;
    while (e) {
      if (e & 1) x = (unsigned long long)((__int128)x * base % n);
      base = (unsigned long long)((__int128)base * base % n);
      e >>= 1;
    }
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
      x = (unsigned long long)((__int128)x * x % n);
      if (x == n - 1) return false;
    }
    return true;
  };
  for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    if (witness(a)) return false;
  return true;
}

int fp_rank(FpMatrix m) {
  const long long p = m.p;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
    long long inv = inv_mod(m.at(rank, col), p);
    for (int c = col; c < m.cols; ++c) m.at(rank, c) = mulmod(m.at(rank, c), inv, p);
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      long long f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) {
        m.at(r, c) = (m.at(r, c) - mulmod(f, m.at(rank, c), p) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

long long fp_det(FpMatrix m) {
  if (m.rows != m.cols) throw DomainError("square_matrix", "determinant of a non-square matrix");
  const long long p = m.p;
  long long det = 1 % p;
  for (int col = 0; col < m.cols; ++col) {
    int pivot = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = (p - det) % p;
    }
    det = mulmod(det, m.at(col, col), p);
    long long inv = inv_mod(m.at(col, col), p);
    for (int r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      long long f = mulmod(m.at(r, col), inv, p);
      for (int c = col; c < m.cols; ++c)
        m.at(r, c) = (m.at(r, c) - mulmod(f, m.at(col, c), p) % p + p) % p;
    }
  }
  return det;
}

std::vector<FpMatrix> random_representation(const Quiver& Q, const IVec& d, long long p,
                                            OracleRng& rng) {
  std::vector<FpMatrix> rep;
  rep.reserve(Q.arrow_count());
  for (int a = 0; a < Q.arrow_count(); ++a) {
    FpMatrix m(static_cast<int>(d[Q.head(a)]), static_cast<int>(d[Q.tail(a)]), p);
    for (auto& x : m.a) x = rng.mod(p);
    rep.push_back(std::move(m));
  }
  return rep;
}

FpMatrix ringel_matrix(const Quiver& Q, const IVec& dimV, const IVec& dimW,
                       const std::vector<FpMatrix>& V, const std::vector<FpMatrix>& W,
                       long long p) {
  // Column block per vertex x: entries of phi(x), a dimW(x) x dimV(x) matrix.
  // Row block per arrow a: entries of W(a) phi(ta) - phi(ha) V(a).
  std::vector<int> col_off(Q.n() + 1, 0);
  for (int x = 0; x < Q.n(); ++x)
    col_off[x + 1] = col_off[x] + static_cast<int>(dimV[x] * dimW[x]);
  std::vector<int> row_off(Q.arrow_count() + 1, 0);
  for (int a = 0; a < Q.arrow_count(); ++a)
    row_off[a + 1] = row_off[a] + static_cast<int>(dimV[Q.tail(a)] * dimW[Q.head(a)]);

  FpMatrix M(row_off.back(), col_off.back(), p);
  auto phi_col = [&](int x, int i, int j) {  // phi(x)_{i,j}, i < dimW(x), j < dimV(x)
    return col_off[x] + i * static_cast<int>(dimV[x]) + j;
  };
  for (int a = 0; a < Q.arrow_count(); ++a) {
    int t = Q.tail(a), h = Q.head(a);
    int vt = static_cast<int>(dimV[t]), wh = static_cast<int>(dimW[h]);
    int vh = static_cast<int>(dimV[h]), wt = static_cast<int>(dimW[t]);
    // Entry (i,j) of W(a) phi(t): sum_k W(a)_{i,k} phi(t)_{k,j}, k < dimW(t).
    for (int i = 0; i < wh; ++i)
      for (int j = 0; j < vt; ++j) {
        int row = row_off[a] + i * vt + j;
        for (int k = 0; k < wt; ++k) {
          long long& cell = M.at(row, phi_col(t, k, j));
          cell = (cell + W[a].at(i, k)) % p;
        }
        // minus phi(h) V(a): sum_k phi(h)_{i,k} V(a)_{k,j}, k < dimV(h).
        for (int k = 0; k < vh; ++k) {
          long long& cell = M.at(row, phi_col(h, i, k));
          cell = (cell - V[a].at(k, j) % p + p) % p;
        }
      }
  }
  return M;
}

static void check_oracle_args(int trials, long long prime) {
  if (trials < 1) throw DomainError("trials_positive", "need at least one trial");
  if (prime <= 1000000 || !is_prime_u64(static_cast<unsigned long long>(prime)))
    throw DomainError("prime_valid", "prime must be a prime > 10^6");
}

HomExtEstimate generic_pair_oracle(const Quiver& Q, const DimVector& a, const DimVector& b,
                                   int trials, uint64_t seed, long long prime) {
  check_dim_vector(Q, a);
  check_dim_vector(Q, b);
  check_oracle_args(trials, prime);
  Int cols = 0;
  for (int x = 0; x < Q.n(); ++x) cols += a.v[x] * b.v[x];
  OracleRng rng(seed);
  Int best_hom = cols;  // nullity can never exceed the domain dimension
  for (int t = 0; t < trials; ++t) {
    auto V = random_representation(Q, a.v, prime, rng);
    auto W = random_representation(Q, b.v, prime, rng);
    FpMatrix M = ringel_matrix(Q, a.v, b.v, V, W, prime);
    Int nullity = cols - fp_rank(M);
    best_hom = std::min(best_hom, nullity);
  }
  HomExtEstimate est;
  est.hom = best_hom;
  est.ext = best_hom - euler_form(Q, a, b);
  return est;
}

Int det_rank_oracle(const Quiver& Q, const DimVector& a, const DimVector& b, int samples,
                    uint64_t seed, long long prime) {
  check_dim_vector(Q, a);
  check_dim_vector(Q, b);
  if (samples < 1) throw DomainError("samples_positive", "need at least one sample");
  if (prime <= 1000000 || !is_prime_u64(static_cast<unsigned long long>(prime)))
    throw DomainError("prime_valid", "prime must be a prime > 10^6");
  if (euler_form(Q, a, b) != 0)
    throw DomainError("perpendicular_pair",
                      "d^V_W is not square: euler_form(alpha,beta) must vanish");
  OracleRng rng(seed);
  std::vector<std::vector<FpMatrix>> Vs, Ws;
  for (int s = 0; s < samples; ++s) {
    Vs.push_back(random_representation(Q, a.v, prime, rng));
    Ws.push_back(random_representation(Q, b.v, prime, rng));
  }
  FpMatrix M(samples, samples, prime);
  for (int i = 0; i < samples; ++i)
    for (int j = 0; j < samples; ++j)
      M.at(i, j) = fp_det(ringel_matrix(Q, a.v, b.v, Vs[i], Ws[j], prime));
  return fp_rank(M);
}

}  // namespace qsi
