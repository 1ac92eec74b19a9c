#include "cayley/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cayley/counterexample.hpp"
#include "cayley/errors.hpp"
#include "cayley/growth.hpp"
#include "cayley/isoperimetry.hpp"
#include "cayley/json_io.hpp"
#include "cayley/ringlike.hpp"

namespace cayley::cli {

Oracles Oracles::standard() {
  return Oracles{[](const VertexSet& a) { return cayley::boundary(a); },
                 [](const VertexSet& a) { return cayley::depth(a); }};
}

namespace {

struct RunConfig {
  std::string group;
  std::string set_path;
  std::size_t random_size = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_radius = 20;
  std::uint64_t radius = 0;
  std::string center;
  std::int64_t i = 0;
  std::int64_t k = 0;
  std::string c;
  std::int64_t cap = counterexample::kDefaultCap;
  std::int64_t window = ringlike::kDefaultWindow;
  std::size_t budget = 0;
  std::size_t cell_cap = counterexample::kDefaultGridCells;
  std::int64_t imax = 6;
  std::int64_t kmax = 8;
  std::vector<std::int64_t> diagonal;
  std::string out_path;
  std::string emit_set;
  std::string format = "json";
};

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, const Oracles& oracles)
      : cfg_(cfg), out_(out), oracles_(oracles) {}

  Budget budget() const {
    Budget b = Budget::from_env();
    if (cfg_.budget > 0) b.max_vertices = cfg_.budget;
    return b;
  }

  GroupGraph host() const {
    if (cfg_.group.empty()) throw ParseError("--group is required");
    return GroupGraph::parse(cfg_.group);
  }

  VertexSet load_set() const {
    if (!cfg_.set_path.empty()) {
      VertexSet a = read_set_file(cfg_.set_path);
      if (!cfg_.group.empty() && GroupGraph::parse(cfg_.group) != a.host()) {
        throw ParseError("--group " + cfg_.group + " does not match the set file's group " + a.host().name());
      }
      return a;
    }
    if (cfg_.random_size > 0) {
      std::mt19937_64 rng(cfg_.seed);
      return random_connected_set(host(), cfg_.random_size, rng);
    }
    throw ParseError("a set is required: pass --set PATH or --random N");
  }

  Vertex parse_center(const GroupGraph& g) const {
    if (cfg_.center.empty()) return g.identity();
    if (g.is_free_group()) return g.parse_word(cfg_.center);
    std::string s = cfg_.center;
    std::replace_if(s.begin(), s.end(), [](char ch) { return ch == '(' || ch == ')' || ch == '[' || ch == ']'; }, ' ');
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream is(s);
    Vertex v;
    Vertex::Coord c = 0;
    while (is >> c) v.push_back(c);
    if (!is.eof()) throw ParseError("invalid center '" + cfg_.center + "'");
    g.validate(v);
    return v;
  }

  void emit(const Json& j) { write(j.dump(2) + "\n"); }

  void write(const std::string& text) {
    if (cfg_.out_path.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out_path);
    if (!f) throw Error("cannot write output file '" + cfg_.out_path + "'");
    f << text;
  }

  void maybe_emit_set(const VertexSet& a) const {
    if (!cfg_.emit_set.empty()) write_set_file(cfg_.emit_set, a);
  }

  int growth() {
    const GroupGraph g = host();
    const GrowthReport r = classify_growth(g, cfg_.max_radius, budget());
    if (cfg_.format == "csv") {
      std::string text = "r,b\n";
      for (std::size_t n = 0; n < r.sizes.size(); ++n) text += std::to_string(n) + "," + std::to_string(r.sizes[n]) + "\n";
      write(text);
    } else {
      Json j{{"group", g.name()}, {"maxRadius", cfg_.max_radius}};
      j.update(to_json(r));
      emit(j);
    }
    return r.dichotomy_holds() ? kExitOk : kExitViolation;
  }

  int ball() {
    const GroupGraph g = host();
    const Vertex center = parse_center(g);
    const VertexSet b = cayley::ball(g, center, cfg_.radius, budget());
    maybe_emit_set(b);
    Json j{{"group", g.name()}, {"center", vertex_to_json(g, center)}, {"radius", cfg_.radius}, {"size", b.size()}};
    j["vertices"] = set_to_json(b)["vertices"];
    emit(j);
    return kExitOk;
  }

  int boundary() {
    const VertexSet a = load_set();
    const VertexSet bd = oracles_.boundary(a);
    Json j{{"group", a.host().name()}, {"sizeA", a.size()}, {"boundarySize", bd.size()}};
    j["boundary"] = set_to_json(bd)["vertices"];
    emit(j);
    return kExitOk;
  }

  int depth() {
    const VertexSet a = load_set();
    emit(Json{{"group", a.host().name()}, {"sizeA", a.size()}, {"depth", oracles_.depth(a)}});
    return kExitOk;
  }

  int varopoulos() {
    const VertexSet a = load_set();
    const VaropoulosResult r = varopoulos_check(a, budget());
    Json j{{"group", a.host().name()}, {"sizeA", a.size()}};
    j.update(to_json(r));
    emit(j);
    return r.holds ? kExitOk : kExitViolation;
  }

  int separation() {
    const VertexSet a = load_set();
    const SeparationReport r = classify_separation(a, oracles_.boundary(a).size(), oracles_.depth(a));
    Json j{{"group", a.host().name()}};
    j.update(to_json(r));
    bool ok = r.consistent();
    if (r.branch == SeparationBranch::RingLike && a.host().is_cylinder()) {
      const auto b2 = ringlike::theorem_impr_branch2(a, cfg_.window);
      j["branch2"] = to_json(b2);
      ok = ok && b2.holds();
    }
    emit(j);
    return ok ? kExitOk : kExitViolation;
  }

  counterexample::GridParams params() const { return counterexample::GridParams::make(cfg_.i, cfg_.k); }

  int cx_stats() {
    const auto p = params();
    const auto s = counterexample::stats(p, cfg_.cell_cap);
    if (!cfg_.emit_set.empty()) maybe_emit_set(counterexample::build(p));
    emit(to_json(s));
    return s.closed_forms_match ? kExitOk : kExitViolation;
  }

  int cx_find() {
    if (cfg_.c.empty()) throw ParseError("--c is required");
    const auto r = counterexample::find_params(parse_rational(cfg_.c), cfg_.cap, cfg_.cell_cap);
    if (!cfg_.emit_set.empty()) maybe_emit_set(counterexample::build(r.params));
    Json j{{"c", to_string(parse_rational(cfg_.c))}};
    j.update(to_json(r));
    emit(j);
    return r.verified ? kExitOk : kExitViolation;
  }

  int cx_torus() {
    const auto e = counterexample::embed_torus(params());
    maybe_emit_set(e.set);
    emit(to_json(e));
    return e.preserved && e.half_volume ? kExitOk : kExitViolation;
  }

  int rl_check() {
    const auto sys = ringlike::cyclic_system(host(), cfg_.window);
    emit(to_json(sys));
    return sys.holds() ? kExitOk : kExitViolation;
  }

  int rl_cover() {
    const VertexSet a = load_set();
    const auto sys = ringlike::cyclic_system(a.host(), cfg_.window);
    const auto cover = ringlike::interval_cover(sys, a);
    Json j{{"group", a.host().name()}, {"sizeA", a.size()}};
    j.update(to_json(cover, sys));
    emit(j);
    return sys.holds() && cover.holds ? kExitOk : kExitViolation;
  }

  int sweep_ratio() {
    std::vector<counterexample::CounterexampleStats> rows;
    if (!cfg_.diagonal.empty()) {
      std::vector<std::int64_t> ks = cfg_.diagonal;
      std::sort(ks.begin(), ks.end());
      for (std::int64_t k : ks) rows.push_back(counterexample::stats(counterexample::GridParams::make(k, k), cfg_.cell_cap));
    } else {
      rows = counterexample::sweep(cfg_.imax, cfg_.kmax, cfg_.cell_cap);
    }
    const bool ok = std::all_of(rows.begin(), rows.end(), [](const auto& s) { return s.closed_forms_match; });
    if (cfg_.format == "csv") {
      std::string text = "i,k,sizeA,boundarySize,depthOracle,ratio,closedFormsMatch\n";
      for (const auto& s : rows) {
        text += std::to_string(s.params.i) + "," + std::to_string(s.params.k) + "," + std::to_string(s.size_a) + "," +
                std::to_string(s.boundary_size) + "," + std::to_string(s.depth_oracle) + "," + to_string(s.ratio) +
                "," + (s.closed_forms_match ? "true" : "false") + "\n";
      }
      write(text);
    } else {
      Json arr = Json::array();
      for (const auto& s : rows) arr.push_back(to_json(s));
      emit(Json{{"rows", std::move(arr)}, {"closedFormsMatch", ok}});
    }
    return ok ? kExitOk : kExitViolation;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  const Oracles& oracles_;
};

void add_set_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--group", cfg.group, "group grammar, e.g. z^2, torus:31x31, free:2, cyl:3");
  sub->add_option("--set", cfg.set_path, "set literal JSON file");
  sub->add_option("--random", cfg.random_size, "use a random BFS-accretion set of this size");
  sub->add_option("--seed", cfg.seed, "PRNG seed for --random")->capture_default_str();
  sub->add_option("--budget", cfg.budget, "BFS vertex budget (default 10^7 or ISO_BUDGET)");
  sub->add_option("--out", cfg.out_path, "write output here instead of stdout");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Oracles& oracles) {
  CLI::App app{"Isoperimetry and separation checks on implicit Cayley graphs", "cayley-iso"};
  app.require_subcommand(1);
  RunConfig cfg;
  Runner runner(cfg, out, oracles);
  std::function<int()> action;
  auto on = [&](CLI::App* sub, int (Runner::*fn)()) { sub->callback([&action, &runner, fn] { action = [&runner, fn] { return (runner.*fn)(); }; }); };

  auto* growth = app.add_subcommand("growth", "ball sizes b(0..R) and the linear/quadratic growth dichotomy");
  growth->add_option("--group", cfg.group)->required();
  growth->add_option("--max-radius", cfg.max_radius)->capture_default_str();
  growth->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  growth->add_option("--budget", cfg.budget);
  growth->add_option("--out", cfg.out_path);
  on(growth, &Runner::growth);

  auto* ball = app.add_subcommand("ball", "enumerate a ball");
  ball->add_option("--group", cfg.group)->required();
  ball->add_option("--radius", cfg.radius)->required();
  ball->add_option("--center", cfg.center, "e.g. 1,2 or aB; defaults to the identity");
  ball->add_option("--budget", cfg.budget);
  ball->add_option("--out", cfg.out_path);
  ball->add_option("--emit-set", cfg.emit_set);
  on(ball, &Runner::ball);

  auto* bd = app.add_subcommand("boundary", "vertex boundary of a set");
  add_set_options(bd, cfg);
  on(bd, &Runner::boundary);

  auto* dp = app.add_subcommand("depth", "depth of a set");
  add_set_options(dp, cfg);
  on(dp, &Runner::depth);

  auto* var = app.add_subcommand("varopoulos", "check |A| <= 2m|dA|");
  add_set_options(var, cfg);
  on(var, &Runner::varopoulos);

  auto* sep = app.add_subcommand("separation", "small-set / ring-like classification");
  add_set_options(sep, cfg);
  sep->add_option("--window", cfg.window)->capture_default_str();
  on(sep, &Runner::separation);

  auto* cx = app.add_subcommand("counterexample", "perforated squares A_i(k)");
  cx->require_subcommand(1);
  auto* cx_stats = cx->add_subcommand("stats", "oracle measurements of A_i(k)");
  cx_stats->add_option("--i", cfg.i)->required();
  cx_stats->add_option("--k", cfg.k)->required();
  auto* cx_find = cx->add_subcommand("find", "first diagonal A_k(k) with ratio < c");
  cx_find->add_option("--c", cfg.c, "target ratio: 0.5, 1/10, 1e-6")->required();
  cx_find->add_option("--cap", cfg.cap)->capture_default_str();
  auto* cx_torus = cx->add_subcommand("torus", "embed A_i(k) into torus:(3ki+1)x(3ki+1)");
  cx_torus->add_option("--i", cfg.i)->required();
  cx_torus->add_option("--k", cfg.k)->required();
  for (auto* sub : {cx_stats, cx_find, cx_torus}) {
    sub->add_option("--out", cfg.out_path);
    sub->add_option("--emit-set", cfg.emit_set);
  }
  cx_stats->add_option("--cell-cap", cfg.cell_cap);
  cx_find->add_option("--cell-cap", cfg.cell_cap);
  on(cx_stats, &Runner::cx_stats);
  on(cx_find, &Runner::cx_find);
  on(cx_torus, &Runner::cx_torus);

  auto* rl = app.add_subcommand("ringlike", "cyclic systems on Z x Z_m");
  rl->require_subcommand(1);
  auto* rl_check = rl->add_subcommand("check", "block parameters s, t and cohesiveness q");
  rl_check->add_option("--group", cfg.group)->required();
  rl_check->add_option("--window", cfg.window)->capture_default_str();
  rl_check->add_option("--out", cfg.out_path);
  auto* rl_cover = rl->add_subcommand("cover", "interval cover and slack bound for a set");
  add_set_options(rl_cover, cfg);
  rl_cover->add_option("--window", cfg.window)->capture_default_str();
  on(rl_check, &Runner::rl_check);
  on(rl_cover, &Runner::rl_cover);

  auto* sw = app.add_subcommand("sweep", "parameter sweeps");
  sw->require_subcommand(1);
  auto* sw_ratio = sw->add_subcommand("ratio", "stats over a grid of (i, k)");
  sw_ratio->add_option("--imax", cfg.imax)->capture_default_str();
  sw_ratio->add_option("--kmax", cfg.kmax)->capture_default_str();
  sw_ratio->add_option("--diagonal", cfg.diagonal, "explicit i = k values instead of the grid")->delimiter(',');
  sw_ratio->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv"}));
  sw_ratio->add_option("--cell-cap", cfg.cell_cap);
  sw_ratio->add_option("--out", cfg.out_path);
  on(sw_ratio, &Runner::sweep_ratio);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    return action ? action() : kExitError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kExitError;
  }
}

}  // namespace cayley::cli
