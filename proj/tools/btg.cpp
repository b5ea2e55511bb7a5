// btg: command-line front end for the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.

#include "btg/cocycle.hpp"
#include "btg/dimension.hpp"
#include "btg/gasket.hpp"
#include "btg/itm.hpp"
#include "btg/renorm.hpp"
#include "btg/simplicial.hpp"
#include "btg/spectrum.hpp"
#include "btg/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Global {
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

// Exactly one of (alpha, beta) or (a, b, c).
struct ParamOptions {
  std::string alpha, beta, a, b, c;

  void add(CLI::App* app) {
    app->add_option("--alpha", alpha, "alpha as p/q or decimal");
    app->add_option("--beta", beta, "beta as p/q or decimal");
    app->add_option("--a", a, "length a");
    app->add_option("--b", b, "length b");
    app->add_option("--c", c, "length c");
  }

  btg::BtParams params() const {
    bool ab = !alpha.empty() || !beta.empty();
    bool abc = !a.empty() || !b.empty() || !c.empty();
    if (ab == abc) throw CLI::ValidationError("give either --alpha/--beta or --a/--b/--c");
    if (ab) {
      if (alpha.empty() || beta.empty()) throw CLI::ValidationError("--alpha and --beta go together");
      return btg::BtParams(btg::parse_rational(alpha), btg::parse_rational(beta));
    }
    if (a.empty() || b.empty() || c.empty()) throw CLI::ValidationError("--a, --b and --c go together");
    return btg::BtParams::from_lengths(
        btg::LengthVector(btg::parse_rational(a), btg::parse_rational(b), btg::parse_rational(c)));
  }
};

json lengths_json(const btg::LengthVector& p) { return {btg::to_string(p.a()), btg::to_string(p.b()), btg::to_string(p.c())}; }

std::string outcome_name(btg::InductionOutcome o) {
  switch (o) {
    case btg::InductionOutcome::Hole:
      return "Hole";
    case btg::InductionOutcome::Survived:
      return "Survived";
    case btg::InductionOutcome::Degenerate:
      return "Degenerate";
  }
  return "?";
}

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream os(path, binary ? std::ios::binary : std::ios::out);
  if (!os) throw IoError("cannot open " + path + " for writing");
  return os;
}

void finish(std::ostream& os, const std::string& path) {
  os.flush();
  if (!os) throw IoError("write failed: " + path);
}

// Prints to stdout, or to a file when `path` is set.
void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << '\n';
    return;
  }
  auto os = open_out(path);
  os << text << '\n';
  finish(os, path);
}

btg::EdgePolicy parse_policy(const std::string& s) {
  if (s == "uniform") return btg::policy::UniformEdges{};
  if (s.rfind("weighted:", 0) == 0) {
    std::string rest = s.substr(9);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw CLI::ValidationError("weighted policy is weighted:p_a,p_b");
    return btg::policy::Weighted{std::stod(rest.substr(0, comma)), std::stod(rest.substr(comma + 1))};
  }
  if (s.rfind("periodic:", 0) == 0) return btg::policy::Periodic{btg::parse_word(s.substr(9))};
  throw CLI::ValidationError("policy must be uniform, weighted:p_a,p_b or periodic:WORD");
}

json lyapunov_json(const btg::LyapunovOptions& o, const btg::LyapunovEstimate& e) {
  auto arr = [](const std::array<long double, 3>& a) {
    return json::array({static_cast<double>(a[0]), static_cast<double>(a[1]), static_cast<double>(a[2])});
  };
  return {{"policy", btg::describe(o.policy)},
          {"steps", o.steps},
          {"trials", o.trials},
          {"seed", o.seed},
          {"lambda", arr(e.mean)},
          {"stderr", arr(e.stderr_)},
          {"lambda3_direct", static_cast<double>(e.lambda3_direct)},
          {"det_drift", static_cast<double>(e.det_drift)}};
}

std::string affinity_csv(const btg::AffinityEstimate& e) {
  std::ostringstream os;
  os << std::setprecision(10) << "depth,plain_root,increment_root\n";
  for (std::size_t i = 0; i < e.depths.size(); ++i)
    os << e.depths[i] << ',' << static_cast<double>(e.plain_roots[i]) << ','
       << static_cast<double>(e.increment_roots[i]) << '\n';
  return os.str();
}

json affinity_json(const btg::AffinityEstimate& e) {
  json roots = json::array();
  for (std::size_t i = 0; i < e.depths.size(); ++i)
    roots.push_back({{"depth", e.depths[i]},
                     {"plain", static_cast<double>(e.plain_roots[i])},
                     {"increment", static_cast<double>(e.increment_roots[i])}});
  return {{"s_star", static_cast<double>(e.s_star)},
          {"tol", static_cast<double>(e.tol)},
          {"iterations", e.iterations},
          {"roots", roots}};
}

btg::Chart parse_chart(const std::string& s) { return s == "alphabeta" ? btg::Chart::AlphaBeta : btg::Chart::Simplex; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bruin-Troubetzkoy maps: induction, cocycle spectrum, dimension estimates and gasket rendering"};
  app.require_subcommand(1);
  app.set_config("--config", "", "flat key=value file; command-line flags override it");
  Global g;
  app.add_option("--seed", g.seed, "master seed for randomized commands")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads, 0 = all cores")->capture_default_str();

  std::function<int()> action;

  // classify
  auto* classify = app.add_subcommand("classify", "finite/infinite type verdict from the induction");
  ParamOptions cp;
  cp.add(classify);
  std::size_t max_steps = 1000;
  classify->add_option("--max-steps", max_steps, "induction step budget")->capture_default_str();
  classify->callback([&] {
    action = [&] {
      btg::BtParams p = cp.params();
      btg::InductionRun r = btg::run_induction({btg::Perm::P123, p.lengths()}, max_steps);
      btg::Classification c = btg::classify(p, max_steps);
      std::string verdict = std::holds_alternative<btg::verdict::FiniteType>(c)     ? "FiniteType"
                            : std::holds_alternative<btg::verdict::InfiniteUpTo>(c) ? "InfiniteUpTo"
                                                                                    : "Degenerate";
      std::string prefix = btg::to_string(btg::Word(r.word.begin(), r.word.begin() + std::min<std::size_t>(64, r.word.size())));
      json j{{"verdict", verdict},
             {"steps", std::holds_alternative<btg::verdict::InfiniteUpTo>(c) ? max_steps : r.step},
             {"word_prefix", prefix},
             {"description", btg::describe(c)}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });

  // induce
  auto* induce = app.add_subcommand("induce", "run the induction and print the itinerary");
  ParamOptions ip;
  ip.add(induce);
  std::size_t induce_steps = 100;
  std::string trace;
  induce->add_option("--max-steps", induce_steps, "step budget")->capture_default_str();
  induce->add_option("--trace", trace, "write a per-step CSV trace here");
  induce->callback([&] {
    action = [&] {
      btg::BtParams p = ip.params();
      btg::InductionState start{btg::Perm::P123, p.lengths()};
      btg::InductionRun r = btg::run_induction(start, induce_steps);
      if (!trace.empty()) {
        auto os = open_out(trace);
        btg::write_trace_csv(os, start, induce_steps);
        finish(os, trace);
      }
      json j{{"word", btg::to_string(r.word)},
             {"outcome", outcome_name(r.outcome)},
             {"step", r.step},
             {"final_state", {{"perm", std::string(btg::name(r.final_state.perm))},
                              {"lengths", lengths_json(r.final_state.lengths)}}}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });

  // gauss
  auto* gauss = app.add_subcommand("gauss", "the Gauss-type map versus the accelerated induction");
  std::string galpha, gbeta;
  gauss->add_option("--alpha", galpha, "alpha in (0,1)")->required();
  gauss->add_option("--beta", gbeta, "beta in (0, alpha)")->required();
  gauss->callback([&] {
    action = [&] {
      btg::Rational a = btg::parse_rational(galpha);
      btg::Rational b = btg::parse_rational(gbeta);
      if (!(b > 0 && b < a && a < 1)) throw std::invalid_argument("need 0 < beta < alpha < 1");
      btg::GaussPair direct = btg::gauss_step(a, b);
      auto via = btg::gauss_via_induction(a, b);
      json j{{"gauss_step", {btg::to_string(direct.alpha), btg::to_string(direct.beta)}}};
      if (auto* gp = std::get_if<btg::GaussPair>(&via)) {
        j["via_induction"] = {btg::to_string(gp->alpha), btg::to_string(gp->beta)};
        j["equal"] = *gp == direct;
      } else {
        j["via_induction"] = nullptr;
        j["not_applicable_beta_prime"] = btg::to_string(std::get<btg::NotApplicable>(via).beta_prime);
      }
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });

  // simplicial-check
  auto* simp = app.add_subcommand("simplicial-check", "strong non-degeneracy condition (2) on the ARC graph");
  bool show_log = false;
  simp->add_flag("--log", show_log, "include the per-subset log");
  simp->callback([&] {
    action = [&] {
      btg::SimplicialGraph graph = btg::arc_graph();
      btg::Cond2Report r = btg::check_strong_nondegeneracy_cond2(graph);
      json j{{"ok", r.ok}, {"subsets_checked", r.subsets_checked}, {"graph", json::parse(graph.to_json())}};
      json fails = json::array();
      for (const auto& f : r.failures)
        fails.push_back({{"label_mask", f.label_mask}, {"vertex", graph.vertices()[f.vertex]}});
      j["failures"] = fails;
      if (show_log) j["log"] = r.log;
      std::cout << j.dump(2) << '\n';
      return r.ok ? kOk : kVerifyFailed;
    };
  });

  // lyapunov
  auto* lyap = app.add_subcommand("lyapunov", "Monte Carlo Lyapunov spectrum of the cocycle");
  btg::LyapunovOptions lo;
  std::string policy = "uniform";
  std::string lyap_out;
  lyap->add_option("--steps", lo.steps, "letters per trial")->capture_default_str();
  lyap->add_option("--trials", lo.trials, "independent trials")->capture_default_str();
  lyap->add_option("--cadence", lo.cadence, "letters per exact block")->capture_default_str();
  lyap->add_option("--policy", policy, "uniform | weighted:p_a,p_b | periodic:WORD")->capture_default_str();
  lyap->add_option("--out", lyap_out, "write JSON here instead of stdout");
  lyap->callback([&] {
    action = [&] {
      lo.policy = parse_policy(policy);
      lo.seed = g.seed;
      lo.threads = g.threads;
      emit(lyapunov_json(lo, btg::lyapunov_estimate(lo)).dump(2), lyap_out);
      return kOk;
    };
  });

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "cone norms, the reference table and contraction certificates");
  spectrum->require_subcommand(1);
  auto* table1 = spectrum->add_subcommand("table1", "reproduce the reference table for A CA B CB");
  table1->callback([&] {
    action = [&] {
      btg::Table1Comparison c = btg::compare_table1();
      json rows = json::array();
      for (const auto& r : btg::table1_reproduce())
        rows.push_back({{"u", r.u_name},
                        {"v", r.v_name},
                        {"z", {btg::to_string(r.z[0]), btg::to_string(r.z[1]), btg::to_string(r.z[2])}},
                        {"mtz", {btg::to_string(r.mtz[0]), btg::to_string(r.mtz[1]), btg::to_string(r.mtz[2])}},
                        {"z_norm", btg::to_string(r.z_norm)},
                        {"mtz_norm", btg::to_string(r.mtz_norm)}});
      json j{{"rows", rows},
             {"rows_matching", c.rows_matching},
             {"norms_matching", c.norms_matching},
             {"max_ratio", btg::to_string(c.max_ratio)},
             {"mismatches", c.mismatches}};
      std::cout << j.dump(2) << '\n';
      return c.rows_matching == c.rows ? kOk : kVerifyFailed;
    };
  });
  auto* cone = spectrum->add_subcommand("cone", "sup of the restricted D-norm for a word's product");
  std::string cone_word;
  cone->add_option("word", cone_word, "word over A, a (=CA), B, b (=CB)")->required();
  cone->callback([&] {
    action = [&] {
      btg::Word w = btg::parse_word(cone_word);
      if (!btg::is_admissible(w)) throw std::invalid_argument("word is not admissible");
      btg::ConeNormResult r = btg::cone_sup_dnorm(btg::product(w).matrix);
      std::ostringstream z;
      z << r.maximizer;
      json j{{"word", cone_word},
             {"value", btg::to_string(r.value)},
             {"maximizer", z.str()},
             {"u", r.u.name},
             {"v", r.v.name},
             {"pairs", r.pairs},
             {"survivors", r.survivors}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });
  auto* cert = spectrum->add_subcommand("certificate", "contraction certificate for a random admissible word");
  std::size_t cert_len = 10000;
  cert->add_option("--length", cert_len, "word length")->capture_default_str();
  cert->callback([&] {
    action = [&] {
      btg::Word w = btg::random_word(g.seed, cert_len);
      auto r = btg::contraction_certificate(w);
      if (auto* nc = std::get_if<btg::NotContracted>(&r)) throw std::invalid_argument(nc->reason);
      const auto& c = std::get<btg::ContractionCertificate>(r);
      json j{{"length", cert_len},
             {"log_measured", static_cast<double>(c.log_measured)},
             {"log_bound", static_cast<double>(c.log_bound)},
             {"pattern_count", c.pattern_count},
             {"block_end", c.block_end},
             {"ok", c.ok}};
      std::cout << j.dump(2) << '\n';
      return c.ok ? kOk : kVerifyFailed;
    };
  });

  // dimension
  auto* dim = app.add_subcommand("dimension", "pressure, affinity dimension and semigroup checks");
  dim->require_subcommand(1);
  auto* aff = dim->add_subcommand("affinity", "pressure roots on [1,2] per depth");
  int depth = 14;
  double tol = 1e-4;
  std::string format = "json";
  std::string dim_out;
  aff->add_option("--depth", depth, "maximal depth n")->capture_default_str();
  aff->add_option("--tol", tol, "bisection tolerance")->capture_default_str();
  aff->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  aff->add_option("--out", dim_out, "output file");
  aff->callback([&] {
    action = [&] {
      btg::AffinityEstimate e = btg::affinity_dimension_estimate(depth, tol, g.threads);
      emit(format == "csv" ? affinity_csv(e) : affinity_json(e).dump(2), dim_out);
      return kOk;
    };
  });
  auto* pres = dim->add_subcommand("pressure", "pressure(n, s)");
  int pn = 10;
  double ps = 1.5;
  pres->add_option("--depth", pn, "n")->capture_default_str();
  pres->add_option("--s", ps, "s >= 0")->capture_default_str();
  pres->callback([&] {
    action = [&] {
      json j{{"depth", pn}, {"s", ps}, {"pressure", static_cast<double>(btg::pressure(pn, ps, g.threads))}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });
  auto* g0 = dim->add_subcommand("gamma0", "phi^{3/2} sums over the D1, D3 semigroup");
  int ell_max = 15;
  g0->add_option("--ell-max", ell_max, "largest word length")->capture_default_str();
  g0->callback([&] {
    action = [&] {
      btg::Gamma0Series s = btg::gamma0_series(ell_max);
      json rows = json::array();
      for (std::size_t i = 0; i < s.lengths.size(); ++i)
        rows.push_back({{"length", s.lengths[i]},
                        {"sum", static_cast<double>(s.sums[i])},
                        {"arc_sum", static_cast<double>(s.arc_sums[i])}});
      json j{{"rows", rows},
             {"s_min", static_cast<double>(s.s_min)},
             {"slope", static_cast<double>(s.slope)},
             {"loglog_slope", static_cast<double>(s.loglog_slope)},
             {"arcs_tile", s.arcs_tile}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });
  auto* gl = dim->add_subcommand("gamma", "semigroup lemma checks on random words");
  std::size_t samples = 10000, max_len = 40;
  gl->add_option("--samples", samples, "sample size")->capture_default_str();
  gl->add_option("--max-len", max_len, "maximal word length")->capture_default_str();
  gl->callback([&] {
    action = [&] {
      btg::GammaLemmaReport r = btg::verify_gamma_lemmas(samples, max_len, g.seed);
      json j{{"ok", r.ok},
             {"generators_ok", r.generators_ok},
             {"containment_ok", r.containment_ok},
             {"containment_checked", r.containment_checked},
             {"containment_failures", r.containment_failures},
             {"epsilon2", static_cast<double>(r.epsilon2)},
             {"diam_constant", static_cast<double>(r.diam_constant)},
             {"area_constant", static_cast<double>(r.area_constant)},
             {"distortion_samples", r.distortion_samples}};
      std::cout << j.dump(2) << '\n';
      return r.ok ? kOk : kVerifyFailed;
    };
  });
  auto* zar = dim->add_subcommand("zariski", "Lie algebra rank check");
  zar->callback([&] {
    action = [&] {
      btg::ZariskiReport z = btg::zariski_report();
      json mats = json::array();
      for (const auto& m : z.computed) {
        std::ostringstream os;
        os << m;
        mats.push_back(os.str());
      }
      json j{{"ok", z.ok},
             {"rank", z.rank_computed},
             {"published_rank", z.rank_printed},
             {"traceless", z.all_traceless},
             {"computed", mats},
             {"published_mismatches", z.mismatches}};
      std::cout << j.dump(2) << '\n';
      return z.ok ? kOk : kVerifyFailed;
    };
  });
  auto* box = dim->add_subcommand("box", "box-counting slope of a rendered gasket");
  btg::RenderConfig box_cfg;
  box_cfg.depth = 18;
  box_cfg.resolution = 4096;
  std::vector<int> sides{4, 8, 16, 32, 64, 128};
  box->add_option("--depth", box_cfg.depth, "render depth")->capture_default_str();
  box->add_option("--size", box_cfg.resolution, "raster width")->capture_default_str();
  box->add_option("--sides", sides, "box sides in pixels")->capture_default_str();
  box->callback([&] {
    action = [&] {
      box_cfg.threads = g.threads;
      btg::Raster r = btg::render(box_cfg);
      btg::BoxCount b = btg::box_counting_dimension(r.bits, r.width, r.height, sides);
      json j{{"slope", static_cast<double>(b.slope)}, {"stderr", static_cast<double>(b.stderr_)}, {"counts", b.counts}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });

  // gasket
  auto* gasket = app.add_subcommand("gasket", "render or sample the gasket");
  gasket->require_subcommand(1);
  auto* render = gasket->add_subcommand("render", "binary PPM image");
  btg::RenderConfig rc;
  std::string chart = "simplex", mode = "fill", render_out = "gasket.ppm";
  render->add_option("--depth", rc.depth, "subdivision depth")->capture_default_str();
  render->add_option("--size", rc.resolution, "image width in pixels")->capture_default_str();
  render->add_option("--chart", chart, "simplex or alphabeta")->check(CLI::IsMember({"simplex", "alphabeta"}))->capture_default_str();
  render->add_option("--mode", mode, "fill or carve")->check(CLI::IsMember({"fill", "carve"}))->capture_default_str();
  render->add_option("--out", render_out, "output PPM")->capture_default_str();
  render->callback([&] {
    action = [&] {
      rc.chart = parse_chart(chart);
      rc.mode = mode == "carve" ? btg::RenderMode::CarveHoles : btg::RenderMode::FillCylinders;
      rc.threads = g.threads;
      btg::Raster r = btg::render(rc);
      auto os = open_out(render_out, true);
      btg::write_ppm(os, r);
      finish(os, render_out);
      json j{{"out", render_out}, {"width", r.width}, {"height", r.height}, {"pixels", r.count()}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });
  auto* sample = gasket->add_subcommand("sample", "point cloud CSV");
  int sdepth = 10, per_cyl = 1;
  std::string schart = "simplex", sample_out;
  sample->add_option("--depth", sdepth, "cylinder depth")->capture_default_str();
  sample->add_option("--per-cylinder", per_cyl, "points per cylinder")->capture_default_str();
  sample->add_option("--chart", schart, "simplex or alphabeta")->check(CLI::IsMember({"simplex", "alphabeta"}))->capture_default_str();
  sample->add_option("--out", sample_out, "output CSV (stdout if omitted)");
  sample->callback([&] {
    action = [&] {
      auto pts = btg::sample_points(sdepth, per_cyl, g.seed);
      std::ostringstream os;
      btg::write_points_csv(os, pts, parse_chart(schart));
      std::string text = os.str();
      text.pop_back();
      emit(text, sample_out);
      return kOk;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "lemma verification suites");
  std::string suite = "all", verify_out;
  std::vector<std::string> suite_names{"all"};
  for (const auto& s : btg::verify_suites()) suite_names.push_back(s);
  verify->add_option("suite", suite, "suite name")->check(CLI::IsMember(suite_names))->capture_default_str();
  verify->add_option("--out", verify_out, "write the JSON report here");
  verify->callback([&] {
    action = [&] {
      btg::VerifyReport r = btg::run_verify(suite, g.seed);
      emit(r.to_json(), verify_out);
      for (const auto& c : r.checks)
        std::cerr << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << '\n';
      return r.passed() ? kOk : kVerifyFailed;
    };
  });

  // report
  auto* report = app.add_subcommand("report", "bundle of artifacts: gasket.ppm, lyapunov.json, dimension.csv");
  std::string out_dir = "report";
  int report_depth = 12, report_size = 512;
  std::size_t report_steps = 100000;
  report->add_option("--out-dir", out_dir, "output directory")->capture_default_str();
  report->add_option("--render-depth", report_depth, "gasket depth")->capture_default_str();
  report->add_option("--render-size", report_size, "gasket width")->capture_default_str();
  report->add_option("--steps", report_steps, "Lyapunov letters per trial")->capture_default_str();
  report->callback([&] {
    action = [&] {
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());
      btg::RenderConfig c;
      c.depth = report_depth;
      c.resolution = report_size;
      c.threads = g.threads;
      btg::Raster r = btg::render(c);
      std::string ppm = (fs::path(out_dir) / "gasket.ppm").string();
      auto os = open_out(ppm, true);
      btg::write_ppm(os, r);
      finish(os, ppm);

      btg::LyapunovOptions o;
      o.steps = report_steps;
      o.seed = g.seed;
      o.threads = g.threads;
      emit(lyapunov_json(o, btg::lyapunov_estimate(o)).dump(2), (fs::path(out_dir) / "lyapunov.json").string());

      std::string csv = affinity_csv(btg::affinity_dimension_estimate(14, 1e-4, g.threads));
      csv.pop_back();
      emit(csv, (fs::path(out_dir) / "dimension.csv").string());
      json j{{"out_dir", out_dir}, {"files", {"gasket.ppm", "lyapunov.json", "dimension.csv"}}};
      std::cout << j.dump(2) << '\n';
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
