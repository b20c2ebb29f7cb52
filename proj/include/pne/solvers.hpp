#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "pne/games.hpp"

namespace pne {

inline constexpr std::uint64_t kDefaultProfileCap = 1ull << 20;

template <class G>
inline Int profile_space_size(const G& g) {
  Int total = 1;
  PlayerIndex n;
  if constexpr (std::is_same_v<G, Game>)
    n = player_count(g);
  else
    n = g.graph.player_count();
  for (PlayerIndex i = 0; i < n; ++i) total *= strategy_count(g, i);
  return total;
}

template <class G>
inline std::uint64_t checked_profile_count(const G& g, std::uint64_t cap) {
  const Int total = profile_space_size(g);
  if (total > cap)
    throw Error("brute force: profile space of " + total.str() + " profiles exceeds cap " +
                std::to_string(cap));
  return total.convert_to<std::uint64_t>();
}

// Calls f once per profile, in lexicographic order (player 0 slowest).
template <class G, class F>
inline void for_each_profile(const G& g, F&& f) {
  PlayerIndex n;
  if constexpr (std::is_same_v<G, Game>)
    n = player_count(g);
  else
    n = g.graph.player_count();
  Profile x(n, 0);
  for (;;) {
    f(static_cast<const Profile&>(x));
    PlayerIndex i = n;
    while (i > 0) {
      --i;
      if (++x[i] < strategy_count(g, i)) break;
      x[i] = 0;
      if (i == 0) return;
    }
  }
}

// All pure Nash equilibria of an enumerable game, lexicographically sorted.
struct PneSet {
  std::vector<Profile> profiles;

  bool contains(const Profile& x) const {
    return std::binary_search(profiles.begin(), profiles.end(), x);
  }
};

// Exhaustive oracle: exactly the profiles with no improving unilateral move.
template <class G>
inline PneSet brute_force_pne_set(const G& g, std::uint64_t cap = kDefaultProfileCap) {
  checked_profile_count(g, cap);
  PneSet out;
  for_each_profile(g, [&](const Profile& x) {
    if (is_pne(g, x)) out.profiles.push_back(x);
  });
  return out;  // enumeration order is lexicographic, so already sorted and unique
}

// Lexicographically smallest global minimizer of the exact potential. A
// global minimizer admits no improving move, so it is a PNE; that is
// asserted before returning.
template <class G>
inline Profile minimize_potential_bruteforce(const G& g, std::uint64_t cap = kDefaultProfileCap) {
  checked_profile_count(g, cap);
  Profile best;
  Rational best_phi;
  for_each_profile(g, [&](const Profile& x) {
    Rational phi = potential(g, x);
    if (best.empty() || phi < best_phi) {
      best = x;
      best_phi = std::move(phi);
    }
  });
  if (!is_pne(g, best))
    throw Error("minimize_potential: global minimizer is not a PNE (exactness violated)");
  return best;
}

namespace detail {

struct PathStageCosts {
  // stage(i, s): standalone cost of player i playing point s.
  std::function<Rational(PlayerIndex, StrategyIndex)> stage;
  // edge(i, s, t): coupling cost between players i and i+1 playing (s, t).
  std::function<Rational(PlayerIndex, StrategyIndex, StrategyIndex)> edge;
  PlayerIndex players;
  std::uint32_t points;
};

inline PathStageCosts path_costs(const DpgParam& g) {
  return {[&g](PlayerIndex i, StrategyIndex s) { return g.alpha * g.metric.dist(s, g.beta[i]); },
          [&g](PlayerIndex, StrategyIndex s, StrategyIndex t) {
            return (1 - g.alpha) * g.metric.dist(s, t);
          },
          g.graph.player_count(), static_cast<std::uint32_t>(g.metric.point_count())};
}

inline PathStageCosts path_costs(const DpgPenalty& g) {
  return {[&g](PlayerIndex i, StrategyIndex s) {
            Rational acc = 0;
            for (std::size_t u = 0; u < g.metric.point_count(); ++u)
              if (g.penalties[i][u] != 0) acc += g.penalties[i][u] * g.metric.dist(u, s);
            return acc;
          },
          [&g](PlayerIndex i, StrategyIndex s, StrategyIndex t) {
            return g.graph.weight(i) * g.metric.dist(s, t);  // edge i joins i and i+1
          },
          g.graph.player_count(), static_cast<std::uint32_t>(g.metric.point_count())};
}

inline Profile solve_path_dp_impl(const PathStageCosts& c) {
  const PlayerIndex n = c.players;
  const std::uint32_t m = c.points;

  // Forward pass: f[i][s] = min potential of the prefix 0..i with player i at s.
  std::vector<std::vector<Rational>> f(n, std::vector<Rational>(m));
  std::vector<std::vector<StrategyIndex>> back(n, std::vector<StrategyIndex>(m, 0));
  for (StrategyIndex s = 0; s < m; ++s) f[0][s] = c.stage(0, s);
  for (PlayerIndex i = 1; i < n; ++i) {
    for (StrategyIndex s = 0; s < m; ++s) {
      StrategyIndex arg = 0;
      Rational best = f[i - 1][0] + c.edge(i - 1, 0, s);
      for (StrategyIndex t = 1; t < m; ++t) {
        Rational cand = f[i - 1][t] + c.edge(i - 1, t, s);
        if (cand < best) {
          best = std::move(cand);
          arg = t;
        }
      }
      f[i][s] = c.stage(i, s) + best;
      back[i][s] = arg;
    }
  }

  StrategyIndex last = 0;
  for (StrategyIndex s = 1; s < m; ++s)
    if (f[n - 1][s] < f[n - 1][last]) last = s;

  Profile x(n);
  x[n - 1] = last;
  for (PlayerIndex i = n - 1; i > 0; --i) x[i - 1] = back[i][x[i]];
  return x;
}

}  // namespace detail

// Global potential minimizer of a discrete preference game on the
// consecutive-index path, by forward DP with lowest-index tie-breaks at
// every argmin. O(M * |L|^2).
template <class G>
  requires std::is_same_v<G, DpgParam> || std::is_same_v<G, DpgPenalty>
inline Profile solve_path_dp(const G& g) {
  if (!is_consecutive_path(g.graph))
    throw Error("path dp: player graph is not the consecutive path 0-1-...-(n-1)");
  Profile x = detail::solve_path_dp_impl(detail::path_costs(g));
  if (!is_pne(g, x))
    throw Error("path dp: potential minimizer is not a PNE (exactness violated)");
  return x;
}

inline Profile solve_path_dp(const Game& g) {
  return std::visit(
      []<class T>(const T& gg) -> Profile {
        if constexpr (std::is_same_v<T, Ncg>)
          throw Error("path dp: requires a discrete preference game");
        else
          return solve_path_dp(gg);
      },
      g);
}

struct TwoStrategyResult {
  Profile profile;
  std::uint64_t moves = 0;  // improving moves made before the sweep stabilized
};

// PNE of a penalty game on a two-point metric: round-robin best-response
// sweeps from the all-zero profile. The exact potential guarantees
// termination regardless of the visiting order.
inline TwoStrategyResult solve_two_strategy(const DpgPenalty& g) {
  if (g.metric.point_count() != 2)
    throw Error("two-strategy solver: metric must have exactly 2 points");
  const PlayerIndex n = g.graph.player_count();
  TwoStrategyResult result;
  result.profile.assign(n, 0);

  bool moved = true;
  while (moved) {
    moved = false;
    for (PlayerIndex i = 0; i < n; ++i) {
      if (auto move = detail::improving_best_response(g, result.profile, i)) {
        result.profile[i] = move->first;
        ++result.moves;
        moved = true;
      }
    }
  }
  return result;
}

}  // namespace pne
