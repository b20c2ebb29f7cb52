#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <pne/pne.hpp>

namespace {

using namespace pne;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out.good()) throw Error("write failed: " + path);
}

std::uint64_t cap_from_env_or(std::uint64_t fallback) {
  const char* env = std::getenv("PNE_CAP");
  if (!env) return fallback;
  const std::string s(env);
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size() || s.empty()) throw Error("");
    return v;
  } catch (...) {
    throw Error("PNE_CAP: '" + s + "' is not a valid profile cap");
  }
}

std::string profile_text(const Profile& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

// The penalty view of a discrete preference game; coordination games have
// no such view.
DpgPenalty penalty_view(const Game& game, const char* who) {
  if (const auto* p = std::get_if<DpgPenalty>(&game)) return *p;
  if (const auto* p = std::get_if<DpgParam>(&game)) return to_penalty_form(*p);
  throw Error(std::string(who) + ": requires a discrete preference game, not a coordination game");
}

struct GenOptions {
  std::string kind;
  std::string out;
  std::uint64_t seed = 0;
  std::uint32_t players = 8;
  std::string edge_prob = "1/2";
  std::uint32_t points = 3;
  std::string alpha = "1/2";
  std::vector<std::uint32_t> dims;
  std::vector<std::uint32_t> factor_sizes;
  std::uint64_t cost_max = 10;
};

int run_gen(const GenOptions& o) {
  if (o.kind == "dpg-discrete") {
    DpgParam game = generate_dpg_discrete(o.players, parse_rational(o.edge_prob), o.points,
                                          parse_rational(o.alpha), o.seed);
    write_file(o.out, io::serialize_instance(Game(std::move(game))));
  } else if (o.kind == "grid-dpg") {
    if (o.dims.empty()) throw Error("gen grid-dpg: --dims is required");
    if (o.factor_sizes.empty()) throw Error("gen grid-dpg: --factor-sizes is required");
    GeneratedGrid gg =
        generate_grid_dpg(o.dims, o.factor_sizes, parse_rational(o.alpha), o.seed);
    write_file(o.out,
               io::serialize_instance(Game(std::move(gg.game)), gg.grid, gg.preferences));
  } else {
    Ncg game = generate_ncg_symsub(o.players, parse_rational(o.edge_prob), o.cost_max, o.seed);
    write_file(o.out, io::serialize_instance(Game(std::move(game))));
  }
  return 0;
}

struct SolveOptions {
  std::string algo;
  std::string in;
  std::string out;
  std::string policy = "lowest-index";
  std::optional<std::uint64_t> cap;
  std::optional<std::uint64_t> seed;
  bool timing = false;
};

int run_solve(const SolveOptions& o) {
  const io::ParsedInstance inst = io::parse_instance(read_file(o.in));
  const std::uint64_t cap = o.cap ? *o.cap : cap_from_env_or(kDefaultProfileCap);

  const auto t0 = std::chrono::steady_clock::now();
  Profile x;
  std::optional<std::uint64_t> moves;
  std::optional<BrdTrace> trace;

  if (o.algo == "brd") {
    BrdTrace t =
        run_brd(inst.game, Profile(player_count(inst.game), 0), parse_brd_policy(o.policy));
    x = t.final;
    moves = t.steps.size();
    trace = std::move(t);
  } else if (o.algo == "path-dp") {
    x = solve_path_dp(inst.game);
  } else if (o.algo == "grid") {
    const auto* dpg = std::get_if<DpgParam>(&inst.game);
    if (!dpg) throw Error("grid solving requires kind dpg_param");
    if (!inst.grid) throw Error("instance has no grid block (required by --algo grid)");
    x = solve_grid(*dpg, *inst.grid);
  } else if (o.algo == "product-decompose") {
    const DpgPenalty penalties = penalty_view(inst.game, "product decomposition");
    SubgameFamily family = decompose_penalties(penalties);
    if (penalties.metric.product_info().ell != Ell::finite(1))
      throw Error("decomposition solving requires a 1-product metric (only there is the "
                  "composition an equilibrium)");
    std::vector<Profile> pnes;
    for (const Game& factor : family.factors)
      pnes.push_back(
          run_brd(factor, Profile(player_count(factor), 0), BrdPolicy::LowestIndex).final);
    x = compose_subgame_pne(family, pnes).profile;
  } else if (o.algo == "brute") {
    PneSet set = brute_force_pne_set(inst.game, cap);
    if (set.profiles.empty()) throw Error("no pure Nash equilibrium found by enumeration");
    x = set.profiles.front();
  } else {  // ncg-symsub
    const auto* ncg = std::get_if<Ncg>(&inst.game);
    if (!ncg) throw Error("ncg-symsub solving requires kind ncg");
    NcgSolveResult r = solve_ncg_symsub(*ncg);
    x = std::move(r.profile);
    moves = r.moves;
  }

  const auto elapsed = std::chrono::steady_clock::now() - t0;
  const bool ok = is_pne(inst.game, x);

  io::ResultFile result;
  result.solver = o.algo;
  result.profile = x;
  result.verified = ok;
  result.potential_value = potential(inst.game, x);
  result.seed = o.seed;
  result.moves = moves;
  result.trace = std::move(trace);
  if (o.timing)
    result.wall_time_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count());
  write_file(o.out, io::serialize_result(result));

  if (!ok) {
    std::cerr << "verification failed: solver output is not an equilibrium" << std::endl;
    return 1;
  }
  return 0;
}

int run_verify(const std::string& in, const std::string& profile_path) {
  const io::ParsedInstance inst = io::parse_instance(read_file(in));
  const Profile x = io::parse_profile_argument(read_file(profile_path));
  const std::optional<Deviation> dev = find_deviation(inst.game, x);
  if (!dev) {
    std::cout << "PNE: no improving unilateral deviation from " << profile_text(x) << std::endl;
    return 0;
  }
  std::cout << "not a PNE: player " << dev->player << " improves " << dev->from << " -> "
            << dev->to << " (cost " << to_string(dev->old_cost) << " -> "
            << to_string(dev->new_cost) << ")" << std::endl;
  return 1;
}

int run_potential(const std::string& in, const std::string& profile_path,
                  const std::string& which) {
  const io::ParsedInstance inst = io::parse_instance(read_file(in));
  const Profile x = io::parse_profile_argument(read_file(profile_path));
  if (which == "phi") {
    check_profile(inst.game, x);
    std::cout << to_string(potential(inst.game, x)) << std::endl;
  } else {
    SubgameFamily family = decompose_penalties(penalty_view(inst.game, "psi"));
    std::cout << to_string(psi(family, x)) << std::endl;
  }
  return 0;
}

int run_reduce(const std::string& to, const std::string& in, const std::string& out) {
  const io::ParsedInstance inst = io::parse_instance(read_file(in));
  if (to == "ncg") {
    if (std::holds_alternative<Ncg>(inst.game))
      throw Error("reduce --to ncg: input is already a coordination game");
    Ncg image = dpg_to_ncg(penalty_view(inst.game, "reduction"));
    write_file(out, io::serialize_instance(Game(std::move(image))));
  } else {
    const auto* ncg = std::get_if<Ncg>(&inst.game);
    if (!ncg) throw Error("reduce --to dpg: input must be a coordination game");
    DpgPenalty image = ncg_to_dpg(*ncg, check_symmetric_submodular(*ncg));
    write_file(out, io::serialize_instance(Game(std::move(image))));
  }
  return 0;
}

int run_trace(const std::string& in) {
  const io::ResultFile result = io::parse_result(read_file(in));
  if (!result.trace) throw Error("result file has no trace (only --algo brd records one)");
  const BrdTrace& t = *result.trace;
  std::cout << "start:  " << profile_text(t.start) << "  potential "
            << to_string(t.start_potential) << "\n";
  for (std::size_t k = 0; k < t.steps.size(); ++k) {
    const BrdStep& s = t.steps[k];
    std::cout << "step " << (k + 1) << ": player " << s.player << ": " << s.from << " -> "
              << s.to << "  drop " << to_string(s.cost_drop) << "  potential "
              << to_string(s.potential_after) << "\n";
  }
  std::cout << "final:  " << profile_text(t.final) << "  steps " << t.steps.size() << "\n";
  if (t.bound)
    std::cout << "certified step bound: ceil(" << to_string(*t.bound) << ") = "
              << rational_ceil(*t.bound).str() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pure Nash equilibria of discrete preference and network coordination games"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate a random instance file");
  cmd_gen->add_option("--kind", gen.kind, "instance family")
      ->required()
      ->check(CLI::IsMember({"dpg-discrete", "grid-dpg", "ncg-symsub"}));
  cmd_gen->add_option("--out", gen.out, "output instance file")->required();
  cmd_gen->add_option("--seed", gen.seed, "64-bit generator seed");
  cmd_gen->add_option("--players", gen.players, "player count (dpg-discrete, ncg-symsub)");
  cmd_gen->add_option("--edge-prob", gen.edge_prob, "edge probability, a rational like 1/3");
  cmd_gen->add_option("--points", gen.points, "metric point count (dpg-discrete)");
  cmd_gen->add_option("--alpha", gen.alpha, "preference weight in [0,1), a rational");
  cmd_gen->add_option("--dims", gen.dims, "grid dimensions (grid-dpg)")->delimiter(',');
  cmd_gen->add_option("--factor-sizes", gen.factor_sizes, "factor metric sizes (grid-dpg)")
      ->delimiter(',');
  cmd_gen->add_option("--cost-max", gen.cost_max, "max integer edge cost (ncg-symsub)");

  SolveOptions solve;
  CLI::App* cmd_solve = app.add_subcommand("solve", "compute a pure Nash equilibrium");
  cmd_solve->add_option("--algo", solve.algo, "solving algorithm")
      ->required()
      ->check(CLI::IsMember(
          {"brd", "path-dp", "grid", "product-decompose", "brute", "ncg-symsub"}));
  cmd_solve->add_option("--in", solve.in, "instance file")->required();
  cmd_solve->add_option("--out", solve.out, "result file")->required();
  cmd_solve->add_option("--policy", solve.policy, "brd mover policy")
      ->check(CLI::IsMember({"lowest-index", "round-robin"}));
  cmd_solve->add_option("--cap", solve.cap,
                        "profile enumeration cap (default from PNE_CAP, else 2^20)");
  cmd_solve->add_option("--seed", solve.seed, "seed echoed into the result file");
  cmd_solve->add_flag("--timing", solve.timing, "record wall_time_ms in the result file");

  std::string verify_in, verify_profile;
  CLI::App* cmd_verify = app.add_subcommand("verify", "check a profile for equilibrium");
  cmd_verify->add_option("--in", verify_in, "instance file")->required();
  cmd_verify->add_option("--profile", verify_profile, "result file or bare JSON profile array")
      ->required();

  std::string pot_in, pot_profile, pot_which = "phi";
  CLI::App* cmd_pot = app.add_subcommand("potential", "evaluate a potential function");
  cmd_pot->add_option("--in", pot_in, "instance file")->required();
  cmd_pot->add_option("--profile", pot_profile, "result file or bare JSON profile array")
      ->required();
  cmd_pot->add_option("--which", pot_which, "phi (exact) or psi (axis decomposition)")
      ->check(CLI::IsMember({"phi", "psi"}));

  std::string red_to, red_in, red_out;
  CLI::App* cmd_red = app.add_subcommand("reduce", "rewrite an instance as the other kind");
  cmd_red->add_option("--to", red_to, "target kind")
      ->required()
      ->check(CLI::IsMember({"ncg", "dpg"}));
  cmd_red->add_option("--in", red_in, "instance file")->required();
  cmd_red->add_option("--out", red_out, "output instance file")->required();

  std::string trace_in;
  CLI::App* cmd_trace = app.add_subcommand("trace", "print the best-response trace of a result");
  cmd_trace->add_option("--in", trace_in, "result file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << "\n" << app.help();
    return 2;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_solve->parsed()) return run_solve(solve);
    if (cmd_verify->parsed()) return run_verify(verify_in, verify_profile);
    if (cmd_pot->parsed()) return run_potential(pot_in, pot_profile, pot_which);
    if (cmd_red->parsed()) return run_reduce(red_to, red_in, red_out);
    if (cmd_trace->parsed()) return run_trace(trace_in);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << std::endl;
    return 2;
  }
  return 0;
}
