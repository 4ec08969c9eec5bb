#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bkcheck/bk_triples.hpp"
#include "bkcheck/cache.hpp"
#include "bkcheck/chevalley.hpp"
#include "bkcheck/errors.hpp"
#include "bkcheck/irreducible.hpp"
#include "bkcheck/parallel.hpp"
#include "bkcheck/poset.hpp"
#include "bkcheck/ramification.hpp"
#include "bkcheck/schubert.hpp"

using namespace bkcheck;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitViolation = 4;
constexpr int kReportFormatVersion = 1;

/// Groups above this order need --allow-large for the |W|^2 triple scans.
constexpr int kLargeGroup = 2000;

struct RunConfig {
  std::string types;
  int max_rank = 0;
  std::uint64_t seed = 42;
  int samples = -1;  // -1: the subcommand's default
  int jobs = 1;
  std::string cache_dir;
  std::string format = "json";
  std::string sum_condition = "gamma+beta";
  int posets = 50;
  bool allow_large = false;
  bool elements = false;
  std::string backend = "orbit";
};

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}
  bool json_lines() const { return cfg_.format == "json"; }

  void record(json r) {
    if (!json_lines()) return;
    stamp(r);
    out_ << r.dump() << '\n';
  }
  /// Summary object (JSON) and one human-readable line (table).
  void summary(json r, const std::string& line) {
    if (json_lines()) {
      r["record"] = "summary";
      stamp(r);
      out_ << r.dump() << '\n';
    } else {
      out_ << line << '\n';
    }
  }

 private:
  void stamp(json& r) const {
    r["format_version"] = kReportFormatVersion;
    r["seed"] = cfg_.seed;
  }
  const RunConfig& cfg_;
  std::ostream& out_;
};

std::vector<std::string> split_types(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::vector<std::string> types_up_to_rank(int max_rank) {
  std::vector<std::string> out;
  for (int r = 1; r <= max_rank; ++r) {
    out.push_back("A" + std::to_string(r));
    if (r >= 2) out.push_back("B" + std::to_string(r));
    if (r >= 3) out.push_back("C" + std::to_string(r));
    if (r >= 4) out.push_back("D" + std::to_string(r));
    if (r == 2) out.push_back("G2");
    if (r == 4) out.push_back("F4");
    if (r >= 6 && r <= 8) out.push_back("E" + std::to_string(r));
  }
  return out;
}

std::vector<std::string> selected_types(const RunConfig& cfg) {
  if (!cfg.types.empty()) return split_types(cfg.types);
  if (cfg.max_rank > 0) return types_up_to_rank(cfg.max_rank);
  throw ValidationError("select types with --type or --max-rank");
}

json word_json(const WeylGroup& W, WeylElement w) {
  json out = json::array();
  for (int i : W.reduced_word(w)) out.push_back(i + 1);
  return out;
}

json root_json(const RootSystem& R, int r) {
  json out = json::array();
  const IntVector& c = R.coords(R.absolute(r));
  const int sign = R.is_positive(r) ? 1 : -1;
  for (int k = 0; k < R.rank(); ++k) out.push_back(sign * c(k));
  return out;
}

json triple_json(const WeylGroup& W, const BKTriple& t) {
  return {{"type", W.roots().label()}, {"u", word_json(W, t.u)}, {"v", word_json(W, t.v)}, {"w", word_json(W, t.w)}};
}

struct Context {
  const RunConfig& cfg;
  Cache cache;
  Emitter& emit;
  int exit = kExitOk;
  void violation() { exit = kExitViolation; }
};

struct Loaded {
  std::shared_ptr<const RootSystem> roots;
  std::unique_ptr<WeylGroup> group;
};

Loaded load(Context& ctx, const std::string& type) {
  Loaded out;
  out.roots = std::make_shared<const RootSystem>(build_root_system(type));
  out.group = std::make_unique<WeylGroup>(load_weyl_group(ctx.cache, out.roots));
  return out;
}

void require_small(const Context& ctx, const WeylGroup& W, const char* what) {
  if (W.size() > kLargeGroup && !ctx.cfg.allow_large)
    throw ResourceError(std::string(what) + " on " + W.roots().label() + " scans " + std::to_string(W.size()) +
                        "^2 pairs; pass --allow-large to run it");
}

std::vector<BKTriple> triples_for(Context& ctx, const WeylGroup& W, const char* what) {
  require_small(ctx, W, what);
  std::vector<BKTriple> all = enumerate_bk_triples(W, ctx.cfg.jobs);
  const int k = ctx.cfg.samples < 0 ? 0 : ctx.cfg.samples;
  return sample_triples(all, static_cast<std::size_t>(k), ctx.cfg.seed);
}

void cmd_roots(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    const RootSystem R = build_root_system(type);
    json doc = to_json(R);
    doc["positive_roots"] = R.num_positive();
    doc["rank"] = R.rank();
    doc["highest_root"] = root_json(R, R.num_positive() - 1);
    ctx.emit.summary(doc, R.label() + "  rank: " + std::to_string(R.rank()) + ", positive roots: " +
                              std::to_string(R.num_positive()) + ", highest root: " + R.format_root(R.num_positive() - 1));
  }
}

void cmd_weyl(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    std::vector<int> by_length(static_cast<std::size_t>(W.length(W.longest()) + 1), 0);
    for (WeylElement w = 0; w < W.size(); ++w) {
      ++by_length[static_cast<std::size_t>(W.length(w))];
      if (ctx.cfg.elements)
        ctx.emit.record({{"type", W.roots().label()},
                         {"element", w},
                         {"word", word_json(W, w)},
                         {"length", W.length(w)},
                         {"descents", W.descent_count(w)}});
    }
    ctx.emit.summary({{"type", W.roots().label()},
                      {"order", W.size()},
                      {"longest_length", W.length(W.longest())},
                      {"elements_by_length", by_length}},
                     W.roots().label() + "  order: " + std::to_string(W.size()) +
                         ", l(w0): " + std::to_string(W.length(W.longest())));
  }
}

void cmd_bk_enumerate(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    const auto triples = triples_for(ctx, W, "bk enumerate");
    for (const auto& t : triples) ctx.emit.record(triple_json(W, t));
    ctx.emit.summary({{"type", W.roots().label()}, {"triples", triples.size()}},
                     W.roots().label() + "  triples: " + std::to_string(triples.size()));
  }
}

void cmd_verify_main(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    const auto triples = triples_for(ctx, W, "verify main");
    std::vector<Rational> values(triples.size());
    if (ctx.cfg.backend == "symbolic") {
      const auto table = load_schubert_table(ctx.cache, W);
      for (std::size_t k = 0; k < triples.size(); ++k) values[k] = table->cup_constant(triples[k].u, triples[k].v, triples[k].w);
    } else {
      const OrbitSchubertTable table(W);
      auto computed = parallel_collect<Rational>(static_cast<int>(triples.size()), ctx.cfg.jobs, [&](int begin, int end) {
        std::vector<Rational> out;
        for (int k = begin; k < end; ++k) {
          const BKTriple& t = triples[static_cast<std::size_t>(k)];
          out.push_back(table.cup_value(t.u, t.v, t.w));
        }
        return out;
      });
      values = std::move(computed);
    }
    std::size_t bad = 0;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      json r = triple_json(W, triples[k]);
      r["checks"] = {{"c", to_string(values[k])}, {"c_is_one", values[k] == 1}};
      ctx.emit.record(std::move(r));
      if (values[k] != 1) ++bad;
    }
    if (bad) ctx.violation();
    const std::string verdict = bad ? "violations: " + std::to_string(bad) : std::string("all c=1");
    ctx.emit.summary({{"type", W.roots().label()}, {"check", "main"}, {"triples", triples.size()}, {"violations", bad}},
                     W.roots().label() + "  triples: " + std::to_string(triples.size()) + ", " + verdict);
  }
}

/// Runs a boolean check per BK triple and reports failures.
template <typename Check>
void per_triple(Context& ctx, const char* name, Check&& check) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    const auto triples = triples_for(ctx, W, name);
    auto results = parallel_collect<json>(static_cast<int>(triples.size()), ctx.cfg.jobs, [&](int begin, int end) {
      std::vector<json> out;
      for (int k = begin; k < end; ++k) out.push_back(check(W, triples[static_cast<std::size_t>(k)]));
      return out;
    });
    std::size_t bad = 0, open_counterexamples = 0;
    for (std::size_t k = 0; k < triples.size(); ++k) {
      if (!results[k].value("pass", false)) ++bad;
      if (!results[k].value("question", true)) ++open_counterexamples;
      json r = triple_json(W, triples[k]);
      r["checks"] = std::move(results[k]);
      ctx.emit.record(std::move(r));
    }
    if (bad) ctx.violation();
    json s{{"type", W.roots().label()}, {"check", name}, {"triples", triples.size()}, {"failures", bad}};
    std::string line = W.roots().label() + "  " + name + "  triples: " + std::to_string(triples.size()) +
                       ", failures: " + std::to_string(bad);
    if (std::string(name) == "descents") {
      s["question_counterexamples"] = open_counterexamples;
      line += ", question counterexamples: " + std::to_string(open_counterexamples);
    }
    ctx.emit.summary(s, line);
  }
}

void cmd_verify_descents(Context& ctx) {
  // The descent question is open, so a counterexample is reported but is not a violation.
  per_triple(ctx, "descents", [](const WeylGroup& W, const BKTriple& t) {
    const bool identities = check_descent_identities(W, t);
    const DescentQuestionOutcome q = descent_question(W, t);
    return json{{"pass", identities}, {"descent_sums", identities}, {"question", q.holds()},
                {"question_pairs", {q.pair_holds[0], q.pair_holds[1], q.pair_holds[2]}}};
  });
}

void cmd_verify_bruhat(Context& ctx) {
  per_triple(ctx, "bruhat", [](const WeylGroup& W, const BKTriple& t) {
    return json{{"pass", check_bruhat_corollary(W, t)}};
  });
}

void cmd_verify_faces(Context& ctx) {
  per_triple(ctx, "faces", [](const WeylGroup& W, const BKTriple& t) {
    const auto witness = face_witness(W, t);
    json r{{"pass", witness.has_value() && verify_face_witness(W, t, *witness)}};
    if (witness) {
      auto vec = [](const RationalVector& v) {
        json a = json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
        return a;
      };
      r["lambda"] = {vec(witness->lambda1), vec(witness->lambda2), vec(witness->lambda3)};
    }
    return r;
  });
}

void cmd_verify_rho(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    require_small(ctx, W, "verify rho");
    std::size_t checked = 0, bad = 0;
    for_each_decomposition(W, [&](const Decomposition& d) {
      ++checked;
      if (!check_rho_product(W, d.w, d.x, d.y)) {
        ++bad;
        ctx.emit.record({{"type", W.roots().label()}, {"w", word_json(W, d.w)}, {"w1", word_json(W, d.x)},
                         {"w2", word_json(W, d.y)}, {"checks", {{"pass", false}}}});
      }
    });
    if (bad) ctx.violation();
    ctx.emit.summary({{"type", W.roots().label()}, {"check", "rho"}, {"decompositions", checked}, {"failures", bad}},
                     W.roots().label() + "  rho  decompositions: " + std::to_string(checked) +
                         ", failures: " + std::to_string(bad));
  }
}

void cmd_verify_combi(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    const RootSystem& R = W.roots();
    const CombiReport rep = verify_combi(W, ctx.cfg.jobs);
    for (const auto& v : rep.violations)
      ctx.emit.record({{"type", R.label()}, {"phi1", word_json(W, v.x)}, {"phi2", word_json(W, v.y)},
                       {"beta", root_json(R, v.beta)}, {"gamma", root_json(R, v.gamma)}, {"witness", root_json(R, v.witness)}});
    if (!rep.ok()) ctx.violation();
    ctx.emit.summary({{"type", R.label()},
                      {"check", "combi"},
                      {"decompositions", rep.decompositions},
                      {"instances", rep.instances},
                      {"violations", rep.violations.size()},
                      {"thetax_failures", rep.thetax_failures}},
                     R.label() + "  combi  decompositions: " + std::to_string(rep.decompositions) + ", instances: " +
                         std::to_string(rep.instances) + ", violations: " + std::to_string(rep.violations.size()));
  }
}

void cmd_verify_kernel(Context& ctx) {
  const int samples = ctx.cfg.samples < 0 ? 20 : ctx.cfg.samples;
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    const ChevalleyAlgebra A(L.roots);
    const KernelReport rep = verify_kernel_nonzero(A, W, samples, ctx.cfg.seed, false, ctx.cfg.jobs);
    if (!rep.ok()) ctx.violation();
    ctx.emit.summary({{"type", W.roots().label()},
                      {"check", "kernel"},
                      {"samples", samples},
                      {"instances", rep.instances},
                      {"matrices", rep.matrices},
                      {"kernel_zero", rep.kernel_zero},
                      {"criterion_failures", rep.criterion_failures},
                      {"block_failures", rep.block_failures},
                      {"profile_failures", rep.profile_failures}},
                     W.roots().label() + "  kernel  instances: " + std::to_string(rep.instances) + ", matrices: " +
                         std::to_string(rep.matrices) + ", kernel zero: " + std::to_string(rep.kernel_zero));
  }
}

json mobius_json(const MobiusReport& r) {
  return {{"posets", r.posets}, {"intervals", r.intervals}, {"det_mismatches", r.det_mismatches},
          {"mobius_mismatches", r.mobius_mismatches}, {"pass", r.ok()}};
}

void cmd_verify_mobius(Context& ctx) {
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    if (W.size() > 400 && !ctx.cfg.allow_large)
      throw ResourceError("verify mobius on " + W.roots().label() + " checks every Bruhat interval; pass --allow-large");
    const MobiusReport rep = check_bruhat_intervals(W, ctx.cfg.seed);
    if (!rep.ok()) ctx.violation();
    json s = mobius_json(rep);
    s["type"] = W.roots().label();
    s["check"] = "mobius";
    ctx.emit.summary(s, W.roots().label() + "  mobius  intervals: " + std::to_string(rep.intervals) +
                            ", mismatches: " + std::to_string(rep.det_mismatches + rep.mobius_mismatches));
  }
}

void cmd_mobius_selftest(Context& ctx) {
  const MobiusReport rep = mobius_selftest(ctx.cfg.posets, ctx.cfg.seed);
  if (!rep.ok()) ctx.violation();
  json s = mobius_json(rep);
  s["check"] = "mobius-selftest";
  ctx.emit.summary(s, std::string("mobius-selftest  posets: ") + std::to_string(rep.posets) + ", intervals: " +
                          std::to_string(rep.intervals) + ", " + (rep.ok() ? "pass" : "FAIL"));
}

void cmd_irreducible(Context& ctx) {
  const SumCondition cond = parse_sum_condition(ctx.cfg.sum_condition);
  for (const auto& type : selected_types(ctx.cfg)) {
    const RootSystem R = build_root_system(type);
    if (R.rank() > 7) throw ResourceError("irreducible search is limited to rank 7");
    json counts = json::object();
    for (SumCondition c : {SumCondition::GammaPlusBeta, SumCondition::GammaPlusPhi})
      counts[to_string(c)] = {{"raw", enumerate_irreducible(R, c, false).size()},
                              {"up_to_aut", enumerate_irreducible(R, c, true).size()}};
    if (ctx.emit.json_lines() && R.rank() >= 2) {
      const ReductionSearch search(R, R.rank() - 1);
      for (const Triple& t : candidate_triples(R, cond)) {
        json r{{"type", R.label()},
               {"beta", root_json(R, t.beta)},
               {"phi", root_json(R, t.phi)},
               {"gamma", root_json(R, t.gamma)},
               {"phi_plus_beta", t.phi_plus_beta},
               {"gamma_plus_phi", t.gamma_plus_phi},
               {"gamma_plus_beta", t.gamma_plus_beta}};
        if (const auto w = search.find(t)) {
          json basis = json::array();
          for (int b : w->basis) basis.push_back(root_json(R, b));
          auto vec = [](const RationalVector& v) {
            json a = json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_string(v(i)));
            return a;
          };
          r["irreducible"] = false;
          r["witness"] = {{"basis", basis}, {"phi_minus_beta", vec(w->phi_minus_beta)}, {"gamma_minus_phi", vec(w->gamma_minus_phi)}};
        } else {
          r["irreducible"] = true;
        }
        ctx.emit.record(std::move(r));
      }
    }
    const std::string key = to_string(cond);
    ctx.emit.summary({{"type", R.label()}, {"check", "irreducible"}, {"sum_condition", key},
                      {"irreducible", counts[key]["raw"]}, {"irreducible_up_to_aut", counts[key]["up_to_aut"]},
                      {"counts", counts}},
                     R.label() + "  irreducible (" + key + "): " + counts[key]["raw"].dump() + ", up to Aut: " +
                         counts[key]["up_to_aut"].dump());
  }
}

void cmd_ramification(Context& ctx) {
  const int samples = ctx.cfg.samples < 0 ? 20 : ctx.cfg.samples;
  for (const auto& type : selected_types(ctx.cfg)) {
    Loaded L = load(ctx, type);
    const WeylGroup& W = *L.group;
    const ChevalleyAlgebra A(L.roots);
    const KernelReport rep = verify_kernel_nonzero(A, W, samples, ctx.cfg.seed, true, ctx.cfg.jobs);
    for (const auto& rec : rep.records) {
      json dets = json::array();
      for (const auto& d : rec.plus_determinants) dets.push_back(to_string(d));
      ctx.emit.record({{"type", W.roots().label()},
                       {"v", word_json(W, rec.v)},
                       {"w", word_json(W, rec.w)},
                       {"x", word_json(W, rec.x)},
                       {"y", word_json(W, rec.y)},
                       {"sample", rec.sample},
                       {"kernel_dim", rec.kernel_dim},
                       {"profile", rec.kind == ProfileCase::Interleaved ? "interleaved" : "triangular"},
                       {"plus_determinants", dets},
                       {"criterion_holds", rec.criterion_holds},
                       {"blocks_ok", rec.blocks_ok}});
    }
    if (!rep.ok()) ctx.violation();
    ctx.emit.summary({{"type", W.roots().label()}, {"check", "ramification"}, {"samples", samples},
                      {"instances", rep.instances}, {"matrices", rep.matrices}, {"kernel_zero", rep.kernel_zero},
                      {"criterion_failures", rep.criterion_failures}},
                     W.roots().label() + "  ramification  matrices: " + std::to_string(rep.matrices) +
                         ", kernel zero: " + std::to_string(rep.kernel_zero));
  }
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Exact verification of Belkale-Kumar structure constants and related root-system combinatorics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--type", cfg.types, "Cartan type(s), comma separated (F4, B3, A1xA2)");
  app.add_option("--max-rank", cfg.max_rank, "All irreducible types up to this rank")->check(CLI::Range(1, 8));
  app.add_option("--seed", cfg.seed, "PRNG seed, recorded in every report");
  app.add_option("--samples", cfg.samples, "Triple sample size (0 = all) or random matrices per instance")->check(CLI::Range(0, 1 << 30));
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1, 256));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Cache directory (overrides ") + kCacheDirEnv + ")");
  app.add_option("--format", cfg.format, "json (JSON lines) or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--allow-large", cfg.allow_large, "Allow |W|^2 scans on groups with more than 2000 elements");

  int status = kExitOk;
  std::function<void(Context&)> action;
  auto bind = [&](CLI::App* sub, void (*fn)(Context&)) {
    sub->fallthrough();
    sub->callback([&action, fn]() { action = fn; });
  };

  bind(app.add_subcommand("roots", "Root system tables"), cmd_roots);
  auto* weyl = app.add_subcommand("weyl", "Weyl group enumeration");
  weyl->add_flag("--elements", cfg.elements, "One record per element");
  bind(weyl, cmd_weyl);

  auto* bk = app.add_subcommand("bk", "Belkale-Kumar triples");
  bk->require_subcommand(1);
  bk->fallthrough();
  bind(bk->add_subcommand("enumerate", "List BK triples"), cmd_bk_enumerate);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->require_subcommand(1);
  verify->fallthrough();
  auto* vmain = verify->add_subcommand("main", "c_uv^w = 1 on BK triples");
  vmain->add_option("--backend", cfg.backend, "orbit or symbolic (cached polynomial table)")
      ->check(CLI::IsMember({"orbit", "symbolic"}));
  bind(vmain, cmd_verify_main);
  bind(verify->add_subcommand("combi", "Biconvex decompositions and dominance intervals"), cmd_verify_combi);
  bind(verify->add_subcommand("descents", "Descent count identities and the open descent question"), cmd_verify_descents);
  bind(verify->add_subcommand("bruhat", "Simultaneous descent set is trivial"), cmd_verify_bruhat);
  bind(verify->add_subcommand("rho", "rho-product multiplicativity"), cmd_verify_rho);
  bind(verify->add_subcommand("faces", "Strictly dominant face witnesses"), cmd_verify_faces);
  bind(verify->add_subcommand("kernel", "Nonzero kernel of the ramification matrix"), cmd_verify_kernel);
  bind(verify->add_subcommand("mobius", "Determinantal Moebius function on Bruhat intervals"), cmd_verify_mobius);

  auto* irr = app.add_subcommand("irreducible", "Irreducible triple classification");
  irr->add_option("--sum-condition", cfg.sum_condition, "gamma+beta or gamma+phi");
  bind(irr, cmd_irreducible);
  bind(app.add_subcommand("ramification", "Ramification matrix records"), cmd_ramification);
  auto* selftest = app.add_subcommand("mobius-selftest", "Random poset determinant and Moebius checks");
  selftest->add_option("--posets", cfg.posets, "Number of random posets")->check(CLI::Range(1, 100000));
  bind(selftest, cmd_mobius_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    Emitter emit(cfg, std::cout);
    Context ctx{cfg, Cache::from_settings(cfg.cache_dir), emit};
    action(ctx);
    status = ctx.exit;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitResource;
  }
  std::cout.flush();
  return status;
}
