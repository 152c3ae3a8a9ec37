// Command-line front end: every library operation bound to JSON file inputs
// and a structured JSON output document. Exit codes: 0 success, 1 domain
// error (precondition failure), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "qsi/conefaces.hpp"
#include "qsi/exceptional.hpp"
#include "qsi/homext.hpp"
#include "qsi/hornklyachko.hpp"
#include "qsi/lr.hpp"
#include "qsi/oracle.hpp"
#include "qsi/partition.hpp"
#include "qsi/quiver.hpp"
#include "qsi/siweights.hpp"
#include "qsi/stability.hpp"

using json = nlohmann::json;
using namespace qsi;

namespace {

// Inline JSON or a path to a file holding it.
std::string load_text(const std::string& arg) {
  if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return arg;
  std::ifstream in(arg);
  if (!in) throw CLI::ValidationError("cannot open file: " + arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json count_json(const Count& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

json counts_json(const std::vector<Count>& cs) {
  json arr = json::array();
  for (auto& c : cs) arr.push_back(count_json(c));
  return arr;
}

json vec_json(const Quiver& Q, const IVec& v) {
  json j = json::object();
  for (int i = 0; i < Q.n(); ++i) j[Q.vertex_names()[i]] = v[i];
  return j;
}

json descriptor_json(const Quiver& Q, const FaceDescriptor& fd) {
  json j;
  j["roots"] = json::array();
  for (auto& r : fd.roots) j["roots"].push_back(vec_json(Q, r.v));
  j["coefficients"] = fd.coefficients;
  j["codim"] = fd.codim;
  j["certificate"] = fd.certificate;
  if (fd.restricted_support) j["restricted_support"] = true;
  return j;
}

json partition_json(const Partition& p) { return json(p.parts); }

struct Io {
  json inputs = json::object();
  std::optional<uint64_t> seed;
  std::optional<long long> prime;

  int emit(const json& result) const {
    json doc;
    doc["result"] = result;
    doc["inputs_echo"] = inputs;
    doc["provenance"] = {{"seed", seed ? json(*seed) : json()},
                         {"prime", prime ? json(*prime) : json()}};
    std::cout << doc.dump() << "\n";
    return 0;
  }

  // Streaming variant for large enumerations.
  int emit_stream(const std::vector<json>& lines, const json& summary) const {
    for (auto& l : lines) std::cout << l.dump() << "\n";
    json doc;
    doc["result"] = summary;
    doc["inputs_echo"] = inputs;
    doc["provenance"] = {{"seed", seed ? json(*seed) : json()},
                         {"prime", prime ? json(*prime) : json()}};
    std::cout << doc.dump() << "\n";
    return 0;
  }
};

Partition parse_partition_arg(const std::string& text, Io& io, const char* name) {
  std::string t = load_text(text);
  io.inputs[name] = json::parse(t);
  return parse_partition(t);
}

std::vector<DimVector> parse_roots(const Quiver& Q, const std::string& text, Io& io) {
  std::string t = load_text(text);
  json j = json::parse(t, nullptr, false);
  if (j.is_discarded() || !j.is_array())
    throw DomainError("roots_json_schema", "roots must be a JSON array of vertex maps");
  io.inputs["roots"] = j;
  std::vector<DimVector> out;
  for (auto& e : j) out.push_back(parse_dim_vector(Q, e.dump()));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of quiver semi-invariants"};
  app.require_subcommand(1);

  // Shared option storage; each verb registers what it needs.
  std::string quiver_arg, alpha_arg, beta_arg, sigma_arg, tau_arg, roots_arg, beta1_arg;
  std::string lam_arg, mu_arg, nu_arg, i_arg, j_arg, k_arg, mode_arg = "nonzero",
              side_arg = "right", dir_arg = "left", kind_arg;
  int n_arg = 0, r_arg = 0, codim_arg = 0, mmax_arg = 0, index_arg = 1, trials_arg = 20,
      jobs_arg = 1;
  Int size_bound_arg = 4;
  std::optional<uint64_t> seed_arg;
  long long prime_arg = kDefaultOraclePrime;

  auto add_quiver = [&](CLI::App* cmd) {
    cmd->add_option("--quiver", quiver_arg, "quiver JSON (inline or file)")->required();
  };

  std::map<std::string, std::function<int()>> runners;

  auto make = [&](const char* name, const char* desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    return cmd;
  };

  // --- quiver-core / homext ---------------------------------------------
  {
    CLI::App* c = make("euler", "Euler form <alpha,beta>");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--beta", beta_arg)->required();
    runners["euler"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      DimVector b = parse_dim_vector(Q, load_text(beta_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["beta"] = vec_json(Q, b.v);
      return io.emit(euler_form(Q, a, b));
    };
  }
  for (const char* verb : {"ext", "hom", "embeds"}) {
    CLI::App* c = make(verb, "generic homological data of a dimension-vector pair");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--beta", beta_arg)->required();
    runners[verb] = [&, verb]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      DimVector b = parse_dim_vector(Q, load_text(beta_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["beta"] = vec_json(Q, b.v);
      std::string v(verb);
      if (v == "ext") return io.emit(ext_generic(Q, a, b));
      if (v == "hom") return io.emit(hom_generic(Q, a, b));
      return io.emit(embeds(Q, a, b));
    };
  }
  {
    CLI::App* c = make("schur", "Schur-root test with root class");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    runners["schur"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      RootClass rc = classify_root(Q, a);
      const char* tag = rc.real()                      ? "real-schur"
                        : rc.isotropic()               ? "isotropic-schur"
                        : rc.imaginary_nonisotropic()  ? "imaginary-nonisotropic-schur"
                                                       : "not-schur";
      return io.emit(json{{"schur", rc.is_schur()}, {"class", tag},
                          {"self_pairing", rc.self_pairing}});
    };
  }
  {
    CLI::App* c = make("candecomp", "canonical decomposition");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    runners["candecomp"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      auto dec = canonical_decomposition(Q, a);
      json out = json::array();
      for (auto& [root, mult] : dec.summands)
        out.push_back({{"root", vec_json(Q, root.v)}, {"multiplicity", mult}});
      return io.emit(out);
    };
  }

  // --- siweights -----------------------------------------------------------
  {
    CLI::App* c = make("si-dim", "dim SI(Q,beta)_sigma");
    add_quiver(c);
    c->add_option("--beta", beta_arg)->required();
    c->add_option("--sigma", sigma_arg)->required();
    runners["si-dim"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector b = parse_dim_vector(Q, load_text(beta_arg));
      Weight s = parse_weight(Q, load_text(sigma_arg));
      io.inputs["beta"] = vec_json(Q, b.v);
      io.inputs["sigma"] = vec_json(Q, s.v);
      return io.emit(count_json(si_dim(Q, b, s)));
    };
  }
  {
    CLI::App* c = make("circ", "alpha o beta");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--beta", beta_arg)->required();
    runners["circ"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      DimVector b = parse_dim_vector(Q, load_text(beta_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["beta"] = vec_json(Q, b.v);
      return io.emit(count_json(circ(Q, a, b)));
    };
  }
  {
    CLI::App* c = make("si-series", "dim SI(Q,beta)_{m sigma}, m = 0..m_max");
    add_quiver(c);
    c->add_option("--beta", beta_arg)->required();
    c->add_option("--sigma", sigma_arg)->required();
    c->add_option("--m-max", mmax_arg)->required();
    runners["si-series"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector b = parse_dim_vector(Q, load_text(beta_arg));
      Weight s = parse_weight(Q, load_text(sigma_arg));
      io.inputs["beta"] = vec_json(Q, b.v);
      io.inputs["sigma"] = vec_json(Q, s.v);
      io.inputs["m_max"] = mmax_arg;
      return io.emit(counts_json(si_series(Q, b, s, mmax_arg)));
    };
  }
  {
    CLI::App* c = make("oracle", "randomized linear-algebra oracles over F_p");
    add_quiver(c);
    c->add_option("--kind", kind_arg, "pair | detrank")->required();
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--beta", beta_arg)->required();
    c->add_option("--trials", trials_arg, "trials (pair) or samples (detrank)");
    c->add_option("--seed", seed_arg, "explicit RNG seed (required)");
    c->add_option("--prime", prime_arg);
    runners["oracle"] = [&]() {
      if (!seed_arg)
        throw CLI::RequiredError("--seed (randomized verbs demand an explicit seed)");
      Io io;
      io.seed = seed_arg;
      io.prime = prime_arg;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      DimVector b = parse_dim_vector(Q, load_text(beta_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["beta"] = vec_json(Q, b.v);
      io.inputs["kind"] = kind_arg;
      io.inputs["trials"] = trials_arg;
      if (kind_arg == "pair") {
        auto est = generic_pair_oracle(Q, a, b, trials_arg, *seed_arg, prime_arg);
        return io.emit(json{{"hom", est.hom}, {"ext", est.ext}});
      }
      if (kind_arg == "detrank")
        return io.emit(det_rank_oracle(Q, a, b, trials_arg, *seed_arg, prime_arg));
      throw CLI::ValidationError("--kind must be pair or detrank");
    };
  }

  // --- stability -----------------------------------------------------------
  for (const char* verb : {"semistable", "stable"}) {
    CLI::App* c = make(verb, "King (semi)stability of a dimension vector");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--sigma", sigma_arg)->required();
    runners[verb] = [&, verb]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      Weight s = parse_weight(Q, load_text(sigma_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["sigma"] = vec_json(Q, s.v);
      bool strict = std::string(verb) == "stable";
      if (!Q.is_acyclic()) return io.emit(stability_via_doubling(Q, a, s, strict));
      return io.emit(strict ? is_stable_dim(Q, a, s) : is_semistable_dim(Q, a, s));
    };
  }
  {
    CLI::App* c = make("stable-decomp", "sigma-stable decomposition");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--sigma", sigma_arg)->required();
    c->add_option("--tau", tau_arg, "optional: (sigma:tau)-stable decomposition");
    runners["stable-decomp"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      Weight s = parse_weight(Q, load_text(sigma_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["sigma"] = vec_json(Q, s.v);
      StableDecomposition dec;
      if (!tau_arg.empty()) {
        Weight t = parse_weight(Q, load_text(tau_arg));
        io.inputs["tau"] = vec_json(Q, t.v);
        dec = sigma_tau_stable_decomposition(Q, a, s, t);
      } else {
        dec = sigma_stable_decomposition(Q, a, s);
      }
      json out = json::array();
      for (auto& [root, mult] : dec.factors)
        out.push_back({{"root", vec_json(Q, root.v)}, {"multiplicity", mult}});
      return io.emit(out);
    };
  }
  {
    CLI::App* c = make("hn-type", "generic Harder-Narasimhan type");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--sigma", sigma_arg)->required();
    c->add_option("--tau", tau_arg)->required();
    runners["hn-type"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      Weight s = parse_weight(Q, load_text(sigma_arg));
      Weight t = parse_weight(Q, load_text(tau_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["sigma"] = vec_json(Q, s.v);
      io.inputs["tau"] = vec_json(Q, t.v);
      auto hn = hn_type(Q, a, s, t);
      json out = json::array();
      for (auto& b : hn.blocks)
        out.push_back({{"dim", vec_json(Q, b.dim.v)},
                       {"slope", {{"num", b.slope_num}, {"den", b.slope_den}}}});
      return io.emit(out);
    };
  }
  {
    CLI::App* c = make("simple-dim", "simple dimension vector test (cycles allowed)");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    runners["simple-dim"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      return io.emit(is_simple_dim(Q, a));
    };
  }

  // --- cone faces ------------------------------------------------------
  auto face_runner = [&](int r) {
    Io io;
    Quiver Q = parse_quiver(load_text(quiver_arg));
    io.inputs["quiver"] = json::parse(quiver_to_json(Q));
    DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
    io.inputs["alpha"] = vec_json(Q, a.v);
    auto faces = enumerate_faces(Q, a, r, jobs_arg);
    std::vector<json> lines;
    for (auto& fd : faces) lines.push_back(descriptor_json(Q, fd));
    return io.emit_stream(lines, json{{"count", faces.size()}, {"r", r}});
  };
  {
    CLI::App* c = make("walls", "codimension-1 faces of R+Sigma(Q,alpha)");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--jobs", jobs_arg, "worker threads");
    runners["walls"] = [&]() { return face_runner(2); };
  }
  {
    CLI::App* c = make("faces", "faces of given codimension");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--jobs", jobs_arg, "worker threads");
    c->add_option("--codim", codim_arg)->required();
    runners["faces"] = [&]() { return face_runner(codim_arg + 1); };
  }
  {
    CLI::App* c = make("rays", "extremal rays");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--jobs", jobs_arg, "worker threads");
    runners["rays"] = [&]() {
      Quiver Q = parse_quiver(load_text(quiver_arg));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      int n_eff = 0;
      for (Int x : a.v)
        if (x > 0) ++n_eff;
      return face_runner(n_eff - 1);
    };
  }
  {
    CLI::App* c = make("ray-series", "weight multiplicities along an extremal ray");
    add_quiver(c);
    c->add_option("--alpha", alpha_arg)->required();
    c->add_option("--sigma", sigma_arg)->required();
    c->add_option("--m-max", mmax_arg)->required();
    runners["ray-series"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      DimVector a = parse_dim_vector(Q, load_text(alpha_arg));
      Weight s = parse_weight(Q, load_text(sigma_arg));
      io.inputs["alpha"] = vec_json(Q, a.v);
      io.inputs["sigma"] = vec_json(Q, s.v);
      io.inputs["m_max"] = mmax_arg;
      return io.emit(counts_json(ray_series(Q, a, s, mmax_arg)));
    };
  }

  // --- exceptional -----------------------------------------------------
  {
    CLI::App* c = make("exc-check", "exceptional sequence test");
    add_quiver(c);
    c->add_option("--roots", roots_arg)->required();
    runners["exc-check"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      auto roots = parse_roots(Q, roots_arg, io);
      return io.emit(is_exceptional_sequence(Q, roots));
    };
  }
  {
    CLI::App* c = make("braid", "braid mutation s_i / s_i^{-1}");
    add_quiver(c);
    c->add_option("--roots", roots_arg)->required();
    c->add_option("--index", index_arg, "1-based mutation position i")->required();
    c->add_option("--direction", dir_arg, "left (s_i) or right (s_i^{-1})");
    runners["braid"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      auto roots = parse_roots(Q, roots_arg, io);
      io.inputs["index"] = index_arg;
      io.inputs["direction"] = dir_arg;
      if (dir_arg != "left" && dir_arg != "right")
        throw CLI::ValidationError("--direction must be left or right");
      auto out = braid_mutate(Q, roots, index_arg - 1, dir_arg == "right");
      json arr = json::array();
      for (auto& r : out) arr.push_back(vec_json(Q, r.v));
      return io.emit(arr);
    };
  }
  {
    CLI::App* c = make("perp", "perpendicular-category quiver and embedding");
    add_quiver(c);
    c->add_option("--roots", roots_arg)->required();
    c->add_option("--side", side_arg, "right | left");
    runners["perp"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      auto roots = parse_roots(Q, roots_arg, io);
      io.inputs["side"] = side_arg;
      if (side_arg != "right" && side_arg != "left")
        throw CLI::ValidationError("--side must be right or left");
      auto perp = perp_quiver(Q, roots, side_arg == "right" ? PerpSide::Right : PerpSide::Left);
      json out;
      out["sub_quiver"] = json::parse(quiver_to_json(perp.sub_quiver));
      out["simples"] = json::array();
      for (auto& s : perp.simples) out["simples"].push_back(vec_json(Q, s.v));
      return io.emit(out);
    };
  }
  {
    CLI::App* c = make("refine", "refine a Schur sequence to an exceptional one");
    add_quiver(c);
    c->add_option("--roots", roots_arg)->required();
    runners["refine"] = [&]() {
      Io io;
      Quiver Q = parse_quiver(load_text(quiver_arg));
      io.inputs["quiver"] = json::parse(quiver_to_json(Q));
      auto roots = parse_roots(Q, roots_arg, io);
      auto ref = refine_schur_sequence(Q, roots);
      json out;
      out["exceptional"] = json::array();
      for (auto& r : ref.exceptional) out["exceptional"].push_back(vec_json(Q, r.v));
      out["block_bounds"] = ref.block_bounds;
      return io.emit(out);
    };
  }

  // --- horn-klyachko ------------------------------------------------------
  {
    CLI::App* c = make("lr", "Littlewood-Richardson coefficient");
    c->add_option("--n", n_arg)->required();
    c->add_option("--lam", lam_arg)->required();
    c->add_option("--mu", mu_arg)->required();
    c->add_option("--nu", nu_arg)->required();
    runners["lr"] = [&]() {
      Io io;
      io.inputs["n"] = n_arg;
      Partition lam = parse_partition_arg(lam_arg, io, "lam").padded(n_arg);
      Partition mu = parse_partition_arg(mu_arg == "same" ? lam_arg : mu_arg, io, "mu")
                         .padded(n_arg);
      Partition nu = parse_partition_arg(nu_arg, io, "nu").padded(n_arg);
      return io.emit(count_json(lr_coefficient(lam, mu, nu)));
    };
  }
  {
    CLI::App* c = make("horn", "Horn subset triples with LR values");
    c->add_option("--n", n_arg)->required();
    c->add_option("-r,--r", r_arg)->required();
    c->add_option("--mode", mode_arg, "nonzero | minimal");
    runners["horn"] = [&]() {
      Io io;
      io.inputs["n"] = n_arg;
      io.inputs["r"] = r_arg;
      io.inputs["mode"] = mode_arg;
      if (mode_arg != "nonzero" && mode_arg != "minimal")
        throw CLI::ValidationError("--mode must be nonzero or minimal");
      auto list = horn_triples(n_arg, r_arg,
                               mode_arg == "nonzero" ? HornMode::Nonzero : HornMode::Minimal);
      std::vector<json> lines;
      for (auto& t : list.triples)
        lines.push_back(json{{"I", t.I}, {"J", t.J}, {"K", t.K},
                             {"lr_value", count_json(t.lr_value)}});
      json summary{{"count", list.triples.size()}};
      if (!list.warning.empty()) summary["warning"] = list.warning;
      return io.emit_stream(lines, summary);
    };
  }
  {
    CLI::App* c = make("wall-ijk", "translate a wall-pair member into subset data");
    c->add_option("--n", n_arg)->required();
    c->add_option("--beta1", beta1_arg)->required();
    runners["wall-ijk"] = [&]() {
      Io io;
      io.inputs["n"] = n_arg;
      TripleFlagData T = triple_flag(n_arg);
      DimVector b1 = parse_dim_vector(T.quiver, load_text(beta1_arg));
      io.inputs["beta1"] = vec_json(T.quiver, b1.v);
      WallInequality w = wall_to_IJK(T, b1);
      if (w.monotonicity)
        return io.emit(json{{"monotonicity", true}, {"arm", std::string(1, w.arm)},
                            {"index", w.index}});
      return io.emit(json{{"monotonicity", false}, {"I", w.I}, {"J", w.J}, {"K", w.K}});
    };
  }
  {
    CLI::App* c = make("product-check", "LR product formula on a wall equality");
    c->add_option("--lam", lam_arg)->required();
    c->add_option("--mu", mu_arg)->required();
    c->add_option("--nu", nu_arg)->required();
    c->add_option("--i", i_arg)->required();
    c->add_option("--j", j_arg)->required();
    c->add_option("--k", k_arg)->required();
    runners["product-check"] = [&]() {
      Io io;
      Partition lam = parse_partition_arg(lam_arg, io, "lam");
      Partition mu = parse_partition_arg(mu_arg == "same" ? lam_arg : mu_arg, io, "mu");
      Partition nu = parse_partition_arg(nu_arg, io, "nu");
      auto subset = [&](const std::string& s, const char* nm) {
        json j = json::parse(load_text(s));
        io.inputs[nm] = j;
        return std::vector<int>(j.begin(), j.end());
      };
      auto I = subset(i_arg, "I"), J = subset(j_arg, "J"), K = subset(k_arg, "K");
      ProductCheck pc = product_formula_check(lam, mu, nu, I, J, K);
      return io.emit(json{{"lhs", count_json(pc.lhs)},
                          {"rhs_star", count_json(pc.rhs_star)},
                          {"rhs_sharp", count_json(pc.rhs_sharp)},
                          {"equal", pc.equal},
                          {"star", {{"lam", partition_json(pc.lam_star)},
                                    {"mu", partition_json(pc.mu_star)},
                                    {"nu", partition_json(pc.nu_star)}}},
                          {"sharp", {{"lam", partition_json(pc.lam_sharp)},
                                     {"mu", partition_json(pc.mu_sharp)},
                                     {"nu", partition_json(pc.nu_sharp)}}}});
    };
  }
  {
    CLI::App* c = make("scan", "saturation / Fulton / jump-bound property scan");
    c->add_option("--n", n_arg)->required();
    c->add_option("--size-bound", size_bound_arg)->required();
    c->add_option("--jobs", jobs_arg, "worker threads");
    runners["scan"] = [&]() {
      Io io;
      io.inputs["n"] = n_arg;
      io.inputs["size_bound"] = size_bound_arg;
      io.inputs["jobs"] = jobs_arg;
      auto report = scan_properties(n_arg, size_bound_arg, jobs_arg);
      std::vector<json> lines;
      for (auto& v : report.violations)
        lines.push_back(json{{"kind", v.kind},
                             {"lam", partition_json(v.lam)},
                             {"mu", partition_json(v.mu)},
                             {"nu", partition_json(v.nu)}});
      return io.emit_stream(
          lines, json{{"triples_scanned", report.triples_scanned},
                      {"nonzero", report.nonzero},
                      {"saturation_checks", report.saturation_checks},
                      {"fulton_checks", report.fulton_checks},
                      {"jump_checks", report.jump_checks},
                      {"violations", report.violations.size()}});
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // any parse problem is a usage error
  }

  try {
    for (auto& [name, runner] : runners)
      if (app.got_subcommand(name)) return runner();
    std::cerr << "no runner for subcommand\n";
    return 2;
  } catch (const DomainError& e) {
    json err{{"error", {{"kind", "domain"}, {"precondition", e.precondition},
                        {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const CapExceeded& e) {
    json err{{"error", {{"kind", "cap"}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    json err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 1;
  }
}
