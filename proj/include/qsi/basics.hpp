#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsi {

// Entries of dimension vectors and weights. Euler-form values stay far below
// 64 bits at any size this library admits; multiplicities do not, see Count.
using Int = long long;

// Littlewood-Richardson coefficients, weight-space dimensions, series values.
using Count = boost::multiprecision::cpp_int;

using IVec = std::vector<Int>;

inline Int ivec_total(const IVec& v) {
  Int s = 0;
  for (Int x : v) s += x;
  return s;
}

inline bool ivec_leq(const IVec& a, const IVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline IVec ivec_sub(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline IVec ivec_add(const IVec& a, const IVec& b) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline IVec ivec_scale(Int c, const IVec& a) {
  IVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool ivec_is_zero(const IVec& a) {
  for (Int x : a)
    if (x != 0) return false;
  return true;
}

inline uint64_t hash_mix(uint64_t h, uint64_t x) {
  x *= 0x9e3779b97f4a7c15ULL;
  x ^= x >> 32;
  h ^= x;
  return h * 0x100000001b3ULL;
}

inline uint64_t ivec_hash(const IVec& v, uint64_t seed = 0xcbf29ce484222325ULL) {
  uint64_t h = seed;
  for (Int x : v) h = hash_mix(h, static_cast<uint64_t>(x) + 0x2545f4914f6cdd1dULL);
  return hash_mix(h, v.size());
}

struct IVecHash {
  size_t operator()(const IVec& v) const { return static_cast<size_t>(ivec_hash(v)); }
};

struct IVecPairHash {
  size_t operator()(const std::pair<IVec, IVec>& p) const {
    return static_cast<size_t>(hash_mix(ivec_hash(p.first), ivec_hash(p.second)));
  }
};

// Precondition failure in library operations; the CLI maps it to exit code 1.
struct DomainError : std::runtime_error {
  std::string precondition;
  DomainError(std::string precond, const std::string& msg)
      : std::runtime_error(msg), precondition(std::move(precond)) {}
};

// A configured search or enumeration cap was exhausted. Reported, not guessed.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qsi
