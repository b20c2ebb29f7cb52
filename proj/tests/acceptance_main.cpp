// Acceptance gate: one pass/fail line per criterion, exit code = number of
// failures.  Usage: acceptance <pne-cli-binary> <data-dir>
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <pne/pne.hpp>

namespace fs = std::filesystem;
using namespace pne;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

template <class Body>
void criterion(int number, const char* name, long budget_ms, Body&& body) {
  std::string detail;
  bool ok = false;
  const auto t0 = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const long ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
  if (budget_ms > 0 && ms >= budget_ms) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::printf("criterion %2d  %-38s %s  %6ld ms%s%s\n", number, name, ok ? "PASS" : "FAIL", ms,
              detail.empty() ? "" : "  ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

Rational table_alpha(Rng& rng) {
  static const Rational values[] = {Rational(0), make_rational(1, 2), make_rational(2, 3),
                                    make_rational(3, 4)};
  return values[rng.below(4)];
}

Rational small_nonneg(Rng& rng) {
  return make_rational(static_cast<std::int64_t>(rng.below(9)),
                       static_cast<std::int64_t>(rng.below(3)) + 1);
}

PlayerGraph random_graph(Rng& rng, std::uint32_t n, bool weighted) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j)
      if (rng.chance(1, 2)) {
        edges.push_back({i, j});
        weights.push_back(small_nonneg(rng));
      }
  if (weighted) return PlayerGraph(n, std::move(edges), std::move(weights));
  return PlayerGraph(n, std::move(edges));
}

PlayerGraph path_graph(std::uint32_t n, Rng* weighted_by) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    edges.push_back({i, i + 1});
    if (weighted_by) weights.push_back(small_nonneg(*weighted_by) + make_rational(1, 4));
  }
  if (weighted_by) return PlayerGraph(n, std::move(edges), std::move(weights));
  return PlayerGraph(n, std::move(edges));
}

// Discrete metrics of a given size need labels; any labels do.
FiniteMetric build_discrete_of_size(std::uint32_t points) {
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < points; ++i) labels.push_back("p" + std::to_string(i));
  return build_discrete(labels);
}

FiniteMetric random_metric(Rng& rng, std::uint32_t points) {
  if (points < 2 || rng.chance(1, 2)) return build_discrete_of_size(points);
  // Positive-weight path graphs always induce a metric.
  return build_graph_metric(path_graph(points, &rng));
}

DpgParam random_param(Rng& rng, std::uint32_t n, std::uint32_t points) {
  FiniteMetric metric = random_metric(rng, points);
  std::vector<StrategyIndex> beta(n);
  for (auto& b : beta) b = static_cast<StrategyIndex>(rng.below(points));
  return DpgParam(random_graph(rng, n, false), std::move(metric), std::move(beta),
                  table_alpha(rng));
}

DpgPenalty random_penalty(Rng& rng, std::uint32_t n, std::uint32_t points) {
  FiniteMetric metric = random_metric(rng, points);
  std::vector<std::vector<Rational>> p(n, std::vector<Rational>(points));
  for (auto& row : p)
    for (auto& v : row) v = small_nonneg(rng);
  return DpgPenalty(random_graph(rng, n, true), std::move(metric), std::move(p));
}

Ncg random_ncg(Rng& rng, std::uint32_t n) {
  PlayerGraph graph = random_graph(rng, n, false);
  std::vector<std::uint32_t> sets(n);
  for (auto& s : sets) s = 2 + static_cast<std::uint32_t>(rng.below(4));
  std::vector<std::vector<std::vector<Rational>>> costs;
  for (const Edge& e : graph.edges()) {
    std::vector<std::vector<Rational>> table(sets[e.u], std::vector<Rational>(sets[e.v]));
    for (auto& row : table)
      for (auto& v : row) v = small_nonneg(rng);
    costs.push_back(std::move(table));
  }
  return Ncg(std::move(graph), std::move(sets), std::move(costs));
}

Profile random_profile(Rng& rng, const Game& g) {
  Profile x(player_count(g));
  for (std::uint32_t i = 0; i < x.size(); ++i)
    x[i] = static_cast<StrategyIndex>(rng.below(strategy_count(g, i)));
  return x;
}

template <class G>
bool check_identity_tuples(Rng& rng, const G& g, int tuples) {
  const Game game(g);
  for (int t = 0; t < tuples; ++t) {
    Profile x = random_profile(rng, game);
    const PlayerIndex i = static_cast<PlayerIndex>(rng.below(player_count(game)));
    const std::uint32_t m = strategy_count(game, i);
    if (m < 2) return false;
    StrategyIndex to = static_cast<StrategyIndex>(rng.below(m - 1));
    if (to >= x[i]) ++to;  // a genuine deviation
    Profile y = x;
    y[i] = to;
    if (potential(game, y) - potential(game, x) !=
        player_cost(game, y, i) - player_cost(game, x, i))
      return false;
  }
  return true;
}

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <pne-cli-binary> <data-dir>\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path data_dir = argv[2];

  // 1. The potential is exact: any unilateral move changes it by exactly the
  //    mover's cost change, over random tuples of every game kind.
  criterion(1, "exact-potential identity", 30000, [](std::string& detail) {
    Rng rng(1001);
    int done = 0;
    for (int round = 0; round < 200; ++round) {
      const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(11));      // <= 12
      const std::uint32_t pts = 2 + static_cast<std::uint32_t>(rng.below(4));     // <= 5
      if (!check_identity_tuples(rng, random_param(rng, n, pts), 5)) return false;
      if (!check_identity_tuples(rng, random_penalty(rng, n, pts), 5)) return false;
      if (!check_identity_tuples(rng, random_ncg(rng, n), 5)) return false;
      done += 15;
    }
    detail = std::to_string(done) + " tuples (1000 per kind)";
    return true;
  });

  // 2. Best-response dynamics on discrete-metric parameterized games: each
  //    step drops the potential by at least mu(alpha) and the run halts within
  //    ceil(phi(start)/mu(alpha)) steps.
  criterion(2, "brd step bound on discrete metrics", 60000, [](std::string& detail) {
    if (mu(Rational(0)) != 1 || mu(make_rational(1, 2)) != make_rational(1, 2) ||
        mu(make_rational(2, 3)) != make_rational(1, 3) ||
        mu(make_rational(3, 4)) != make_rational(1, 4)) {
      detail = "mu table mismatch";
      return false;
    }
    Rng rng(2002);
    int runs = 0;
    for (int round = 0; round < 200; ++round) {
      const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(11));
      const std::uint32_t pts = 2 + static_cast<std::uint32_t>(rng.below(4));
      std::vector<StrategyIndex> beta(n);
      for (auto& b : beta) b = static_cast<StrategyIndex>(rng.below(pts));
      const DpgParam g(random_graph(rng, n, false), build_discrete_of_size(pts),
                       std::move(beta), table_alpha(rng));
      const Rational step_floor = mu(g.alpha);
      for (BrdPolicy policy : {BrdPolicy::LowestIndex, BrdPolicy::RoundRobin}) {
        Profile x = random_profile(rng, g);
        const BrdTrace t = run_brd(g, x, policy);
        Rational prev = potential(g, x);
        if (prev != t.start_potential) return false;
        for (const BrdStep& s : t.steps) {
          if (x[s.player] != s.from) return false;
          x[s.player] = s.to;
          const Rational cur = potential(g, x);
          if (prev - cur < step_floor || s.cost_drop != prev - cur) return false;
          prev = cur;
        }
        if (x != t.final || !is_pne(g, x)) return false;
        if (Int(t.steps.size()) > rational_ceil(t.start_potential / step_floor)) return false;
        ++runs;
      }
    }
    detail = std::to_string(runs) + " runs over 200 instances";
    return true;
  });

  // 3. The path dynamic program reaches the exact brute-force minimum
  //    potential, and its output is an equilibrium, over every enumerable
  //    (points, players) shape.
  criterion(3, "path dp matches brute-force minimum", 60000, [](std::string& detail) {
    Rng rng(3003);
    int instances = 0;
    for (std::uint32_t pts = 2; pts <= 5; ++pts) {
      for (std::uint32_t n = 2; n <= 12; ++n) {
        std::uint64_t space = 1;
        for (std::uint32_t i = 0; i < n; ++i) space *= pts;
        if (space > 4096) break;
        for (int seed_round = 0; seed_round < 3; ++seed_round) {
          std::vector<StrategyIndex> beta(n);
          for (auto& b : beta) b = static_cast<StrategyIndex>(rng.below(pts));
          const DpgParam a(path_graph(n, nullptr), random_metric(rng, pts), std::move(beta),
                           table_alpha(rng));
          std::vector<std::vector<Rational>> p(n, std::vector<Rational>(pts));
          for (auto& row : p)
            for (auto& v : row) v = small_nonneg(rng);
          const DpgPenalty b(path_graph(n, &rng), random_metric(rng, pts), std::move(p));

          const auto check = [&](const auto& g) {
            const Profile dp = solve_path_dp(g);
            const Profile best = minimize_potential_bruteforce(g);
            return potential(g, dp) == potential(g, best) && is_pne(g, dp);
          };
          if (!check(a) || !check(b)) return false;
          instances += 2;
        }
      }
    }
    detail = std::to_string(instances) + " path instances, all shapes <= 4096 profiles";
    return true;
  });

  // 4. Composing factor equilibria player-tuple-wise lands inside the
  //    brute-force equilibrium set of the cartesian product game.
  criterion(4, "cartesian composition lands in pne set", 120000, [](std::string& detail) {
    using Shape = std::vector<std::pair<std::uint32_t, std::uint32_t>>;  // (players, points)
    const std::vector<Shape> shapes = {
        {{2, 2}, {2, 2}},          {{3, 2}, {2, 2}},          {{2, 3}, {2, 2}},
        {{2, 2}, {1, 3}},          {{3, 2}, {1, 2}},          {{2, 2}, {2, 2}, {1, 2}},
        {{2, 2}, {1, 2}, {1, 2}},  {{2, 2}, {1, 2}, {1, 3}},  {{1, 2}, {1, 2}, {1, 3}},
        {{3, 2}, {2, 2}, {1, 1}}};
    Rng rng(4004);
    for (int round = 0; round < 100; ++round) {
      const Shape& shape = shapes[round % shapes.size()];
      const Rational alpha = table_alpha(rng);
      std::vector<DpgParam> factors;
      std::vector<Profile> pnes;
      for (const auto& [n, pts] : shape) {
        std::vector<StrategyIndex> beta(n);
        for (auto& b : beta) b = static_cast<StrategyIndex>(rng.below(pts));
        factors.emplace_back(random_graph(rng, n, false), build_discrete_of_size(pts),
                             std::move(beta), alpha);
        pnes.push_back(brute_force_pne_set(factors.back()).profiles.front());
      }
      const DpgParam product = cartesian_game(factors);
      if (profile_space_size(Game(product)) > 4096) return false;
      const Profile composed = compose_pne(factors, pnes);
      if (!brute_force_pne_set(product).contains(composed)) return false;
    }
    detail = "100 families of 2-3 factors";
    return true;
  });

  // 5. The grid pipeline end to end, confirmed by full enumeration at 256 and
  //    262144 profiles.
  criterion(5, "grid pipeline vs full enumeration", 120000, [](std::string& detail) {
    Rng rng(5005);
    const auto check = [&](std::vector<std::uint32_t> dims, std::uint64_t seed) {
      const GeneratedGrid g = generate_grid_dpg(dims, {2, 2}, table_alpha(rng), seed);
      const Profile x = solve_grid(g.game, g.grid);
      return is_pne(g.game, x) && brute_force_pne_set(g.game).contains(x);
    };
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
      if (!check({2, 2}, seed)) return false;
    for (std::uint64_t seed = 1; seed <= 2; ++seed)
      if (!check({3, 3}, seed)) return false;
    detail = "8 runs at 2x2 (256 profiles), 2 runs at 3x3 (262144 profiles)";
    return true;
  });

  // 6. On 1-product metrics the axis-subgame sum equals the potential, both
  //    on full small enumerations and on sampled profiles of larger games.
  criterion(6, "axis-subgame sum equals potential (ell=1)", 0, [](std::string& detail) {
    Rng rng(6006);
    for (int round = 0; round < 8; ++round) {
      const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.below(2));
      auto [metric, idx] = build_product(
          {build_discrete_of_size(2), build_discrete_of_size(2)}, Ell::finite(1));
      std::vector<std::vector<Rational>> p(n, std::vector<Rational>(4));
      for (auto& row : p)
        for (auto& v : row) v = small_nonneg(rng);
      const DpgPenalty g(random_graph(rng, n, true), std::move(metric), std::move(p));
      const SubgameFamily family = decompose_penalties(g);
      bool equal = true;
      for_each_profile(g, [&](const Profile& x) {
        if (psi(family, x) != potential(g, x)) equal = false;
      });
      if (!equal) return false;
    }
    int sampled = 0;
    for (int round = 0; round < 2; ++round) {
      auto [metric, idx] = build_product(
          {build_discrete_of_size(2), build_discrete_of_size(3)}, Ell::finite(1));
      std::vector<std::vector<Rational>> p(8, std::vector<Rational>(6));
      for (auto& row : p)
        for (auto& v : row) v = small_nonneg(rng);
      const DpgPenalty g(random_graph(rng, 8, true), std::move(metric), std::move(p));
      const SubgameFamily family = decompose_penalties(g);
      for (int s = 0; s < 6000; ++s) {
        Profile x(8);
        for (auto& v : x) v = static_cast<StrategyIndex>(rng.below(6));
        if (psi(family, x) != potential(g, x)) return false;
        ++sampled;
      }
    }
    detail = "8 full enumerations + " + std::to_string(sampled) + " sampled profiles";
    return true;
  });

  // 7. The stored max-product instance admits an improving move that the
  //    axis-subgame sum fails to order; its 1-product re-encoding does not.
  criterion(7, "ordinal gap witness on stored instance", 0, [&](std::string& detail) {
    const auto load = [&](const char* name) {
      return std::get<DpgPenalty>(
          io::parse_instance(read_all(data_dir / name)).game);
    };
    const DpgPenalty gap = load("ordinal_gap_linf.json");
    const SubgameFamily family = decompose_penalties(gap);

    const auto t0 = Clock::now();
    const auto witness = find_ordinal_violation(family);
    const long ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
    if (!witness || ms >= 1000) return false;
    if (witness->cost_after >= witness->cost_before) return false;
    if (witness->psi_after < witness->psi_before) return false;

    const DpgPenalty flat = load("ordinal_gap_l1.json");
    if (find_ordinal_violation(decompose_penalties(flat))) return false;
    detail = "witness found in " + std::to_string(ms) + " ms; none on the ell=1 re-encoding";
    return true;
  });

  // 8. Both reductions preserve the potential pointwise and the equilibrium
  //    set exactly; the two-strategy reduction never emits negative weights.
  criterion(8, "reductions preserve potential and pne sets", 0, [](std::string& detail) {
    Rng rng(8008);
    for (int round = 0; round < 100; ++round) {
      const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.below(3));
      const std::uint32_t pts = 2 + static_cast<std::uint32_t>(rng.below(2));
      std::vector<Edge> edges;
      std::vector<Rational> weights;
      for (std::uint32_t i = 0; i + 1 < n; ++i) {
        edges.push_back({i, i + 1});
        weights.push_back(small_nonneg(rng));
      }
      for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 2; j < n; ++j)
          if (rng.chance(1, 4)) {
            edges.push_back({i, j});
            weights.push_back(small_nonneg(rng));
          }
      std::vector<std::vector<Rational>> p(n, std::vector<Rational>(pts));
      for (auto& row : p)
        for (auto& v : row) v = small_nonneg(rng);
      const DpgPenalty g(PlayerGraph(n, std::move(edges), std::move(weights)),
                         random_metric(rng, pts), std::move(p));
      const Ncg h = dpg_to_ncg(g);
      bool equal = true;
      for_each_profile(g, [&](const Profile& x) {
        if (potential(g, x) != potential(h, x)) equal = false;
      });
      if (!equal) return false;
      if (brute_force_pne_set(g).profiles != brute_force_pne_set(h).profiles) return false;
    }
    for (int round = 0; round < 100; ++round) {
      const std::uint32_t n = 4 + static_cast<std::uint32_t>(rng.below(7));
      const Ncg g = generate_ncg_symsub(n, make_rational(1, 2), 10, 80000 + round);
      const SubmodularityReport report = check_symmetric_submodular(g);
      if (!report.all_pass()) return false;
      const DpgPenalty h = ncg_to_dpg(g, report);
      for (std::size_t k = 0; k < h.graph.edges().size(); ++k)
        if (h.graph.weight(k) < 0) return false;
      bool equal = true;
      for_each_profile(g, [&](const Profile& x) {
        if (potential(g, x) != potential(h, x)) equal = false;
      });
      if (!equal) return false;
      if (brute_force_pne_set(g).profiles != brute_force_pne_set(h).profiles) return false;
    }
    detail = "100 instances per direction";
    return true;
  });

  // 9. Two-strategy solving at sizes far beyond enumeration: the only claim
  //    checked is that the output is an equilibrium of the original game.
  //    Move counts are reported; no running-time bound is certified.
  criterion(9, "large two-strategy ncg solving", 0, [](std::string& detail) {
    Rng rng(9009);
    std::uint64_t total_moves = 0, max_moves = 0;
    for (int round = 0; round < 200; ++round) {
      const std::uint32_t n = 20 + static_cast<std::uint32_t>(rng.below(181));  // <= 200
      std::vector<std::uint32_t> degree(n, 0);
      std::vector<Edge> edges;
      std::vector<std::vector<bool>> seen(n);
      for (auto& row : seen) row.assign(n, false);
      for (std::uint32_t attempt = 0; attempt < 3 * n; ++attempt) {
        const auto a = static_cast<std::uint32_t>(rng.below(n));
        const auto b = static_cast<std::uint32_t>(rng.below(n));
        const std::uint32_t u = std::min(a, b), v = std::max(a, b);
        if (u == v || seen[u][v] || degree[u] >= 8 || degree[v] >= 8) continue;
        seen[u][v] = true;
        ++degree[u], ++degree[v];
        edges.push_back({u, v});
      }
      PlayerGraph graph(n, std::move(edges));
      // Keep the submodularity slack small so the all-zeros start is rarely
      // already stable and the dynamics have real work to do.
      std::vector<std::vector<std::vector<Rational>>> costs;
      for (std::size_t k = 0; k < graph.edges().size(); ++k) {
        const Rational agree0(static_cast<std::int64_t>(rng.below(13)));
        const Rational agree1(static_cast<std::int64_t>(rng.below(13)));
        const Rational disagree = rational_ceil((agree0 + agree1) / 2) +
                                  Rational(static_cast<std::int64_t>(rng.below(2)));
        costs.push_back({{agree0, disagree}, {disagree, agree1}});
      }
      const Ncg g(std::move(graph), std::vector<std::uint32_t>(n, 2), std::move(costs));
      if (!check_symmetric_submodular(g).all_pass()) return false;
      const NcgSolveResult r = solve_ncg_symsub(g);
      if (!is_pne(g, r.profile)) return false;
      total_moves += r.moves;
      max_moves = std::max(max_moves, r.moves);
    }
    detail = "200 instances (n up to 200, degree <= 8); mean moves " +
             std::to_string(total_moves / 200) + "." + std::to_string(total_moves * 10 / 200 % 10) +
             ", max " + std::to_string(max_moves) + "; no time bound certified";
    return true;
  });

  // 10. Every CLI command, run twice with the same seed, produces identical
  //     bytes (result files and captured stdout alike).
  criterion(10, "cli byte reproducibility", 0, [&](std::string& detail) {
    const fs::path tmp = fs::path("accept_tmp");
    fs::remove_all(tmp);
    std::vector<std::string> produced;
    for (int pass = 1; pass <= 2; ++pass) {
      const fs::path dir = tmp / ("pass" + std::to_string(pass));
      fs::create_directories(dir);
      const auto at = [&](const char* name) { return (dir / name).string(); };
      const std::vector<std::string> commands = {
          " gen --kind dpg-discrete --players 8 --points 4 --alpha 2/3 --edge-prob 1/2"
          " --seed 11 --out " + quoted(at("a.json")),
          " gen --kind grid-dpg --dims 2,3 --factor-sizes 2,2 --alpha 1/2 --seed 7 --out " +
              quoted(at("g.json")),
          " gen --kind grid-dpg --dims 4 --factor-sizes 3 --alpha 1/2 --seed 9 --out " +
              quoted(at("p.json")),
          " gen --kind ncg-symsub --players 12 --edge-prob 1/3 --cost-max 9 --seed 5 --out " +
              quoted(at("n.json")),
          " solve --algo brd --in " + quoted(at("a.json")) + " --out " + quoted(at("brd.json")) +
              " --seed 3 --policy round-robin",
          " solve --algo brute --in " + quoted(at("a.json")) + " --out " +
              quoted(at("brute.json")),
          " solve --algo path-dp --in " + quoted(at("p.json")) + " --out " +
              quoted(at("dp.json")),
          " solve --algo grid --in " + quoted(at("g.json")) + " --out " + quoted(at("grid.json")),
          " solve --algo product-decompose --in " + quoted(at("g.json")) + " --out " +
              quoted(at("prod.json")),
          " solve --algo ncg-symsub --in " + quoted(at("n.json")) + " --out " +
              quoted(at("symsub.json")),
          " verify --in " + quoted(at("a.json")) + " --profile " + quoted(at("brute.json")) +
              " > " + quoted(at("verify.txt")) + " 2>&1",
          " potential --in " + quoted(at("a.json")) + " --profile " + quoted(at("brute.json")) +
              " --which phi > " + quoted(at("phi.txt")) + " 2>&1",
          " potential --in " + quoted(at("g.json")) + " --profile " + quoted(at("grid.json")) +
              " --which psi > " + quoted(at("psi.txt")) + " 2>&1",
          " reduce --to ncg --in " + quoted(at("g.json")) + " --out " +
              quoted(at("red_ncg.json")),
          " reduce --to dpg --in " + quoted(at("n.json")) + " --out " +
              quoted(at("red_dpg.json")),
          " trace --in " + quoted(at("brd.json")) + " > " + quoted(at("trace.txt")) + " 2>&1",
      };
      for (const std::string& args : commands)
        if (std::system((quoted(cli) + args).c_str()) != 0) {
          detail = "command failed:" + args;
          return false;
        }
      if (pass == 1)
        for (const auto& entry : fs::directory_iterator(dir))
          produced.push_back(entry.path().filename().string());
    }
    if (produced.size() < 16) {
      detail = "expected 16 artifacts, saw " + std::to_string(produced.size());
      return false;
    }
    for (const std::string& name : produced)
      if (read_all(tmp / "pass1" / name) != read_all(tmp / "pass2" / name)) {
        detail = "bytes differ: " + name;
        return false;
      }
    fs::remove_all(tmp);
    detail = std::to_string(produced.size()) + " artifacts byte-identical across runs";
    return true;
  });

  return failures;
}
