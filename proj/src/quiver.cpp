#include "qsi/quiver.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "json.hpp"

namespace qsi {

using nlohmann::json;

Quiver Quiver::make(std::vector<std::string> vertex_names,
                    std::vector<std::pair<int, int>> arrows, bool allows_cycles) {
  Quiver Q;
  Q.names_ = std::move(vertex_names);
  Q.arrows_ = std::move(arrows);
  Q.allows_cycles_ = allows_cycles;

  std::set<std::string> seen;
  for (const auto& nm : Q.names_)
    if (!seen.insert(nm).second)
      throw DomainError("distinct_vertex_ids", "duplicate vertex id: " + nm);

  const int n = Q.n();
  Q.out_.assign(n, {});
  Q.in_.assign(n, {});
  for (int a = 0; a < Q.arrow_count(); ++a) {
    auto [t, h] = Q.arrows_[a];
    if (t < 0 || t >= n || h < 0 || h >= n)
      throw DomainError("arrow_endpoints_declared", "arrow endpoint out of range");
    Q.out_[t].push_back(a);
    Q.in_[h].push_back(a);
  }

  // Kahn's algorithm; loops and 2-cycles surface as leftovers.
  std::vector<int> indeg(n, 0);
  for (auto& [t, h] : Q.arrows_) {
    (void)t;
    indeg[h]++;
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    Q.topo_.push_back(v);
    for (int a : Q.out_[v])
      if (--indeg[Q.head(a)] == 0) ready.push(Q.head(a));
  }
  Q.acyclic_ = (static_cast<int>(Q.topo_.size()) == n);
  if (!Q.acyclic_) {
    Q.topo_.clear();
    if (!allows_cycles)
      throw DomainError("acyclic", "oriented cycle present but allows_cycles is false");
  }

  uint64_t h = hash_mix(0x9ddfea08eb382d69ULL, static_cast<uint64_t>(n));
  std::vector<std::pair<int, int>> sorted_arrows = Q.arrows_;
  std::sort(sorted_arrows.begin(), sorted_arrows.end());
  for (auto& [t, hd] : sorted_arrows) h = hash_mix(hash_mix(h, t), hd);
  Q.digest_ = h;
  return Q;
}

const std::vector<int>& Quiver::topo_order() const {
  if (!acyclic_) throw DomainError("acyclic", "topological order requested on a cyclic quiver");
  return topo_;
}

int Quiver::index_of(const std::string& name) const {
  for (int i = 0; i < n(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Quiver Quiver::restricted(const std::vector<int>& vertices) const {
  std::vector<int> back(n(), -1);
  std::vector<std::string> nm;
  for (size_t i = 0; i < vertices.size(); ++i) {
    back[vertices[i]] = static_cast<int>(i);
    nm.push_back(names_[vertices[i]]);
  }
  std::vector<std::pair<int, int>> ar;
  for (auto& [t, h] : arrows_)
    if (back[t] >= 0 && back[h] >= 0) ar.emplace_back(back[t], back[h]);
  return Quiver::make(std::move(nm), std::move(ar), allows_cycles_);
}

Int euler_form(const Quiver& Q, const IVec& a, const IVec& b) {
  check_on_vertices(Q, a);
  check_on_vertices(Q, b);
  Int s = 0;
  for (int x = 0; x < Q.n(); ++x) s += a[x] * b[x];
  for (auto& [t, h] : Q.arrows()) s -= a[t] * b[h];
  return s;
}

Weight left_weight(const Quiver& Q, const DimVector& alpha) {
  check_on_vertices(Q, alpha.v);
  Weight w;
  w.v.assign(Q.n(), 0);
  for (int x = 0; x < Q.n(); ++x) w.v[x] = alpha.v[x];
  for (auto& [t, h] : Q.arrows()) w.v[h] -= alpha.v[t];
  return w;
}

Weight right_weight(const Quiver& Q, const DimVector& beta) {
  check_on_vertices(Q, beta.v);
  Weight w;
  w.v.assign(Q.n(), 0);
  for (int x = 0; x < Q.n(); ++x) w.v[x] = -beta.v[x];
  for (auto& [t, h] : Q.arrows()) w.v[t] += beta.v[h];
  return w;
}

void check_on_vertices(const Quiver& Q, const IVec& v) {
  if (static_cast<int>(v.size()) != Q.n())
    throw DomainError("vertex_set_match", "vector defined on wrong vertex set");
}

void check_dim_vector(const Quiver& Q, const DimVector& d) {
  check_on_vertices(Q, d.v);
  for (Int x : d.v)
    if (x < 0) throw DomainError("dim_vector_nonnegative", "negative dimension vector entry");
}

Quiver parse_quiver(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError("quiver_json_wellformed", std::string("malformed quiver JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw DomainError("quiver_json_schema", "quiver JSON needs \"vertices\" and \"arrows\"");
  std::vector<std::string> names;
  for (auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i) idx[names[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> arrows;
  for (auto& a : j.at("arrows")) {
    std::string t = a.at("tail").get<std::string>();
    std::string h = a.at("head").get<std::string>();
    if (!idx.count(t) || !idx.count(h))
      throw DomainError("arrow_endpoints_declared",
                        "dangling arrow endpoint: " + t + " -> " + h);
    arrows.emplace_back(idx[t], idx[h]);
  }
  bool cyc = j.value("allows_cycles", false);
  return Quiver::make(std::move(names), std::move(arrows), cyc);
}

std::string quiver_to_json(const Quiver& Q) {
  json j;
  j["vertices"] = Q.vertex_names();
  j["arrows"] = json::array();
  for (auto& [t, h] : Q.arrows())
    j["arrows"].push_back({{"tail", Q.vertex_names()[t]}, {"head", Q.vertex_names()[h]}});
  j["allows_cycles"] = Q.allows_cycles();
  return j.dump();
}

static IVec parse_vertex_map(const Quiver& Q, const std::string& text, bool nonneg,
                             const char* what) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError("vector_json_wellformed", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("vector_json_schema", std::string(what) + " must be a JSON object");
  IVec v(Q.n(), 0);
  std::vector<bool> set(Q.n(), false);
  for (auto it = j.begin(); it != j.end(); ++it) {
    int i = Q.index_of(it.key());
    if (i < 0)
      throw DomainError("vertex_set_match", "unknown vertex id: " + it.key());
    v[i] = it.value().get<Int>();
    set[i] = true;
  }
  for (int i = 0; i < Q.n(); ++i)
    if (!set[i])
      throw DomainError("vertex_set_match",
                        "missing entry for vertex " + Q.vertex_names()[i]);
  if (nonneg)
    for (Int x : v)
      if (x < 0) throw DomainError("dim_vector_nonnegative", "negative dimension vector entry");
  return v;
}

DimVector parse_dim_vector(const Quiver& Q, const std::string& text) {
  return DimVector{parse_vertex_map(Q, text, true, "dimension vector")};
}

Weight parse_weight(const Quiver& Q, const std::string& text) {
  return Weight{parse_vertex_map(Q, text, false, "weight")};
}

std::string vector_on_quiver_to_json(const Quiver& Q, const IVec& v) {
  json j = json::object();
  for (int i = 0; i < Q.n(); ++i) j[Q.vertex_names()[i]] = v[i];
  return j.dump();
}

int DoubledQuiver::lifted_index(int base_vertex, int level) const {
  return 2 * base_vertex + level;
}

DimVector DoubledQuiver::lift_dim(const DimVector& alpha) const {
  check_on_vertices(base, alpha.v);
  DimVector d;
  d.v.assign(doubled.n(), 0);
  for (int x = 0; x < base.n(); ++x) d.v[2 * x] = d.v[2 * x + 1] = alpha.v[x];
  return d;
}

Weight DoubledQuiver::lift_weight(const Weight& sigma) const {
  check_on_vertices(base, sigma.v);
  Weight w;
  w.v.assign(doubled.n(), 0);
  for (int x = 0; x < base.n(); ++x) w.v[2 * x] = w.v[2 * x + 1] = sigma.v[x];
  return w;
}

DoubledQuiver double_quiver(const Quiver& Q) {
  std::vector<std::string> names;
  for (int x = 0; x < Q.n(); ++x) {
    names.push_back(Q.vertex_names()[x] + "@0");
    names.push_back(Q.vertex_names()[x] + "@1");
  }
  std::vector<std::pair<int, int>> arrows;
  for (auto& [t, h] : Q.arrows()) arrows.emplace_back(2 * t, 2 * h + 1);
  for (int x = 0; x < Q.n(); ++x) arrows.emplace_back(2 * x, 2 * x + 1);

  DoubledQuiver D{Q, Quiver::make(std::move(names), std::move(arrows), false), Weight{}};
  D.tau.v.assign(D.doubled.n(), 0);
  for (int x = 0; x < Q.n(); ++x) {
    D.tau.v[2 * x] = 1;
    D.tau.v[2 * x + 1] = -1;
  }
  return D;
}

}  // namespace qsi
