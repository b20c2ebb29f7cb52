#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pne/games.hpp"

namespace pne {

// Minimum per-step potential drop of best response dynamics on a discrete
// metric:
//   mu(a) = min{ 1-a,  a + (1-a) * floor(1 - a/(1-a)),  -a + (1-a) * floor(1 + a/(1-a)) }.
// Strictly positive on all of [0, 1).
inline Rational mu(const Rational& alpha) {
  if (alpha < 0 || alpha >= 1) throw Error("mu: alpha must satisfy 0 <= alpha < 1");
  const Rational one_minus = 1 - alpha;
  const Rational ratio = alpha / one_minus;
  const Rational onto_beta = alpha + one_minus * Rational(rational_floor(1 - ratio));
  const Rational off_beta = -alpha + one_minus * Rational(rational_floor(1 + ratio));
  Rational m = one_minus;
  if (onto_beta < m) m = onto_beta;
  if (off_beta < m) m = off_beta;
  return m;
}

// D_i(x): how many neighbors of i play a strategy different from i's.
inline std::uint32_t disagreement_count(const DpgParam& g, const Profile& x, PlayerIndex i) {
  check_profile(g, x);
  std::uint32_t count = 0;
  for (auto [j, k] : g.graph.neighbors(i))
    if (x[j] != x[i]) ++count;
  return count;
}

enum class BrdPolicy { LowestIndex, RoundRobin };

inline BrdPolicy parse_brd_policy(const std::string& name) {
  if (name == "lowest-index") return BrdPolicy::LowestIndex;
  if (name == "round-robin") return BrdPolicy::RoundRobin;
  throw Error("brd: unknown policy '" + name + "' (expected lowest-index or round-robin)");
}

struct BrdStep {
  PlayerIndex player = 0;
  StrategyIndex from = 0;
  StrategyIndex to = 0;
  Rational cost_drop;        // strictly positive
  Rational potential_after;  // recomputed from scratch, not telescoped
};

// Full record of one best-response run. `bound` carries the step-bound
// certificate Phi_max / mu(alpha) and is present only for parameterized
// games on a discrete metric, where the bound applies.
struct BrdTrace {
  Profile start;
  Rational start_potential;  // Phi_max
  std::optional<Rational> bound;
  std::vector<BrdStep> steps;
  Profile final;
};

// Runs best response dynamics until no player can improve: one mover per
// step, moving to a full best response. Termination follows from the exact
// potential decreasing by the mover's cost drop each step; this is asserted
// at every step by recomputing the potential. For DpgParam on a discrete
// metric the trace additionally certifies steps <= ceil(Phi_max / mu(alpha))
// and a per-step drop >= mu(alpha).
template <class G>
inline BrdTrace run_brd(const G& g, Profile start, BrdPolicy policy) {
  check_profile(g, start);
  const PlayerIndex n = static_cast<PlayerIndex>(start.size());

  BrdTrace trace;
  trace.start = start;
  trace.start_potential = potential(g, start);

  std::optional<Rational> drop_floor;
  if constexpr (std::is_same_v<G, DpgParam>) {
    if (g.metric.kind() == MetricKind::Discrete) {
      drop_floor = mu(g.alpha);
      trace.bound = trace.start_potential / *drop_floor;
    }
  } else if constexpr (std::is_same_v<G, Game>) {
    if (const auto* dpg = std::get_if<DpgParam>(&g)) {
      if (dpg->metric.kind() == MetricKind::Discrete) {
        drop_floor = mu(dpg->alpha);
        trace.bound = trace.start_potential / *drop_floor;
      }
    }
  }

  Profile x = std::move(start);
  Rational phi = trace.start_potential;
  PlayerIndex cursor = 0;  // round-robin scan position

  for (;;) {
    std::optional<std::pair<StrategyIndex, Rational>> move;
    PlayerIndex mover = 0;
    if (policy == BrdPolicy::LowestIndex) {
      for (PlayerIndex i = 0; i < n && !move; ++i) {
        move = detail::improving_best_response(g, x, i);
        mover = i;
      }
    } else {
      for (PlayerIndex step = 0; step < n && !move; ++step) {
        const PlayerIndex i = (cursor + step) % n;
        move = detail::improving_best_response(g, x, i);
        mover = i;
      }
      if (move) cursor = (mover + 1) % n;
    }
    if (!move) break;

    auto [to, drop] = std::move(*move);
    const StrategyIndex from = x[mover];
    x[mover] = to;
    Rational phi_after = potential(g, x);
    if (phi - phi_after != drop)
      throw Error("brd: potential drop does not match cost drop (exactness violated)");
    if (drop_floor && drop < *drop_floor)
      throw Error("brd: step drop below mu(alpha), contradicting the discrete-metric bound");
    phi = phi_after;
    trace.steps.push_back(BrdStep{mover, from, to, std::move(drop), std::move(phi_after)});
  }

  if (trace.bound && Rational(trace.steps.size()) > Rational(rational_ceil(*trace.bound)))
    throw Error("brd: step count exceeds the discrete-metric bound");

  trace.final = std::move(x);
  return trace;
}

}  // namespace pne
