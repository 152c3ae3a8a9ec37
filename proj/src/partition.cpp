#include "qsi/partition.hpp"

#include <algorithm>

#include "json.hpp"

namespace qsi {

bool Partition::weakly_decreasing() const {
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i - 1] < parts[i]) return false;
  return true;
}

bool Partition::nonnegative() const {
  return parts.empty() || parts.back() >= 0;
}

Partition Partition::padded(size_t n) const {
  IVec p = parts;
  while (p.size() < n) p.push_back(0);
  if (p.size() > n) {
    for (size_t i = n; i < p.size(); ++i)
      if (p[i] != 0)
        throw DomainError("partition_pad", "cannot truncate a nonzero part");
    p.resize(n);
  }
  return Partition(p);
}

Partition Partition::trimmed() const {
  IVec p = parts;
  while (!p.empty() && p.back() == 0) p.pop_back();
  return Partition(p);
}

Partition Partition::shifted(Int a) const {
  IVec p = parts;
  for (Int& x : p) x += a;
  return Partition(p);
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

void require_partition(const Partition& p, const char* who) {
  if (!p.weakly_decreasing())
    throw DomainError("weakly_decreasing", std::string(who) + " is not weakly decreasing");
}

int partition_jumps(const Partition& p) {
  int j = 0;
  for (size_t i = 1; i < p.parts.size(); ++i)
    if (p.parts[i - 1] != p.parts[i]) ++j;
  return j;
}

Partition lambda_of_subset(const std::vector<int>& I, int n) {
  if (I.empty()) throw DomainError("subset_nonempty", "empty subset");
  for (size_t k = 0; k < I.size(); ++k) {
    if (I[k] < 1 || I[k] > n) throw DomainError("subset_range", "subset element out of 1..n");
    if (k > 0 && I[k] <= I[k - 1])
      throw DomainError("subset_increasing", "subset not strictly increasing");
  }
  const int r = static_cast<int>(I.size());
  IVec p(r);
  for (int k = 0; k < r; ++k) p[r - 1 - k] = I[k] - (k + 1);
  return Partition(p);
}

Partition staircase_partition(const IVec& x, const IVec& y) {
  if (x.size() != y.size())
    throw DomainError("staircase_lengths", "x and y must have equal length");
  auto nondecr = [](const IVec& v) {
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i - 1] > v[i]) return false;
    return !v.empty() && v.front() >= 0;
  };
  if (!nondecr(x) || !nondecr(y))
    throw DomainError("staircase_monotone", "x and y must be nondecreasing and nonnegative");
  const size_t n = x.size();
  IVec p;
  for (size_t k = n - 1; k >= 1; --k)
    for (Int rep = 0; rep < y[k] - y[k - 1]; ++rep) p.push_back(x[k - 1]);
  for (Int rep = 0; rep < y[0]; ++rep) p.push_back(0);
  return Partition(p);
}

std::string partition_to_json(const Partition& p) {
  nlohmann::json j = p.parts;
  return j.dump();
}

Partition parse_partition(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("partition_json_wellformed", std::string("malformed partition: ") + e.what());
  }
  if (!j.is_array()) throw DomainError("partition_json_schema", "partition must be a JSON array");
  Partition p{IVec(j.begin(), j.end())};
  require_partition(p, "partition");
  return p;
}

}  // namespace qsi
