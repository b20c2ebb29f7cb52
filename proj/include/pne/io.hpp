#pragma once

#include <json.hpp>

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pne/compose.hpp"
#include "pne/dynamics.hpp"
#include "pne/games.hpp"

// JSON instance and result files. Parsing is strict: unknown fields are
// rejected and every structural error names the offending JSON path. All
// rationals cross the boundary as [numerator, denominator] integer pairs,
// never as decimal text.
namespace pne::io {

using nlohmann::json;

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
  throw Error(path + ": " + what);
}

inline std::int64_t get_int64(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (j.is_number_unsigned() &&
      j.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    fail(path, "integer out of 64-bit signed range");
  return j.get<std::int64_t>();
}

inline std::uint32_t get_u32(const json& j, const std::string& path) {
  const std::int64_t v = get_int64(j, path);
  if (v < 0 || v > std::numeric_limits<std::uint32_t>::max()) fail(path, "out of range");
  return static_cast<std::uint32_t>(v);
}

inline std::uint64_t get_u64(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  if (!j.is_number_unsigned() && j.get<std::int64_t>() < 0) fail(path, "must be nonnegative");
  return j.get<std::uint64_t>();
}

inline Rational get_rational(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a [numerator, denominator] pair");
  const Int num = get_int64(j[0], path + "[0]");
  const Int den = get_int64(j[1], path + "[1]");
  if (den == 0) fail(path, "zero denominator");
  return make_rational(num, den);
}

inline json rational_json(const Rational& r) {
  if (!fits_int64(numerator(r)) || !fits_int64(denominator(r)))
    throw Error("serialize: rational " + to_string(r) + " exceeds the 64-bit file range");
  return json::array({numerator(r).convert_to<std::int64_t>(),
                      denominator(r).convert_to<std::int64_t>()});
}

inline std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

inline bool get_bool(const json& j, const std::string& path) {
  if (!j.is_boolean()) fail(path, "expected a boolean");
  return j.get<bool>();
}

inline const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

inline void check_fields(const json& j, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* a : allowed)
      if (it.key() == a) {
        known = true;
        break;
      }
    if (!known) fail(path, "unknown field '" + it.key() + "'");
  }
}

inline const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, "missing field '" + std::string(key) + "'");
  return *it;
}

// ---------------------------------------------------------------------------
// Graphs.

inline PlayerGraph parse_graph(const json& j, const std::string& path) {
  check_fields(j, path, {"players", "edges", "weights"});
  const PlayerIndex n = get_u32(require(j, "players", path), path + ".players");

  const json& je = get_array(require(j, "edges", path), path + ".edges");
  std::vector<Edge> edges;
  edges.reserve(je.size());
  for (std::size_t k = 0; k < je.size(); ++k) {
    const std::string ep = path + ".edges[" + std::to_string(k) + "]";
    if (!je[k].is_array() || je[k].size() != 2) fail(ep, "expected a [u, v] pair");
    edges.push_back({get_u32(je[k][0], ep + "[0]"), get_u32(je[k][1], ep + "[1]")});
  }

  std::optional<std::vector<Rational>> weights;
  if (j.contains("weights")) {
    const json& jw = get_array(j["weights"], path + ".weights");
    weights.emplace();
    for (std::size_t k = 0; k < jw.size(); ++k)
      weights->push_back(get_rational(jw[k], path + ".weights[" + std::to_string(k) + "]"));
  }

  try {
    return PlayerGraph(n, std::move(edges), std::move(weights));
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

inline json graph_json(const PlayerGraph& g) {
  json j;
  j["players"] = g.player_count();
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(json::array({e.u, e.v}));
  j["edges"] = std::move(edges);
  if (g.is_weighted()) {
    json weights = json::array();
    for (std::size_t k = 0; k < g.edges().size(); ++k) weights.push_back(rational_json(g.weight(k)));
    j["weights"] = std::move(weights);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Metrics. The serialized form mirrors provenance: rebuilding from it yields
// a structurally equal metric.

inline FiniteMetric parse_metric(const json& j, const std::string& path) {
  const std::string type = get_string(require(j, "type", path), path + ".type");

  if (type == "explicit") {
    check_fields(j, path, {"type", "labels", "dist"});
    std::vector<std::string> labels;
    if (j.contains("labels")) {
      const json& jl = get_array(j["labels"], path + ".labels");
      for (std::size_t x = 0; x < jl.size(); ++x)
        labels.push_back(get_string(jl[x], path + ".labels[" + std::to_string(x) + "]"));
    }
    const json& jd = get_array(require(j, "dist", path), path + ".dist");
    std::vector<std::vector<Rational>> dist;
    for (std::size_t x = 0; x < jd.size(); ++x) {
      const std::string rp = path + ".dist[" + std::to_string(x) + "]";
      const json& row = get_array(jd[x], rp);
      dist.emplace_back();
      for (std::size_t y = 0; y < row.size(); ++y)
        dist.back().push_back(get_rational(row[y], rp + "[" + std::to_string(y) + "]"));
      if (dist.back().size() != jd.size()) fail(rp, "matrix must be square");
    }
    try {
      return FiniteMetric::explicit_matrix(std::move(labels), std::move(dist));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  if (type == "discrete") {
    check_fields(j, path, {"type", "labels"});
    const json& jl = get_array(require(j, "labels", path), path + ".labels");
    std::vector<std::string> labels;
    for (std::size_t x = 0; x < jl.size(); ++x)
      labels.push_back(get_string(jl[x], path + ".labels[" + std::to_string(x) + "]"));
    try {
      return build_discrete(std::move(labels));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  if (type == "graph") {
    check_fields(j, path, {"type", "points", "edges", "weights"});
    const PlayerIndex points = get_u32(require(j, "points", path), path + ".points");
    const json& je = get_array(require(j, "edges", path), path + ".edges");
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < je.size(); ++k) {
      const std::string ep = path + ".edges[" + std::to_string(k) + "]";
      if (!je[k].is_array() || je[k].size() != 2) fail(ep, "expected a [u, v] pair");
      edges.push_back({get_u32(je[k][0], ep + "[0]"), get_u32(je[k][1], ep + "[1]")});
    }
    std::optional<std::vector<Rational>> weights;
    if (j.contains("weights")) {
      const json& jw = get_array(j["weights"], path + ".weights");
      weights.emplace();
      for (std::size_t k = 0; k < jw.size(); ++k)
        weights->push_back(get_rational(jw[k], path + ".weights[" + std::to_string(k) + "]"));
    }
    try {
      return build_graph_metric(PlayerGraph(points, std::move(edges), std::move(weights)));
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  if (type == "product") {
    check_fields(j, path, {"type", "ell", "factors"});
    const json& jell = require(j, "ell", path);
    Ell ell = Ell::finite(1);
    if (jell.is_string()) {
      if (jell.get<std::string>() != "inf")
        fail(path + ".ell", "expected a positive integer or \"inf\"");
      ell = Ell::infinity();
    } else {
      const std::uint32_t order = get_u32(jell, path + ".ell");
      if (order == 0) fail(path + ".ell", "expected a positive integer or \"inf\"");
      ell = Ell::finite(order);
    }
    const json& jf = get_array(require(j, "factors", path), path + ".factors");
    std::vector<FiniteMetric> factors;
    for (std::size_t t = 0; t < jf.size(); ++t)
      factors.push_back(parse_metric(jf[t], path + ".factors[" + std::to_string(t) + "]"));
    try {
      return build_product(std::move(factors), ell).first;
    } catch (const Error& e) {
      fail(path, e.what());
    }
  }

  fail(path + ".type", "unknown metric type '" + type + "'");
}

inline json metric_json(const FiniteMetric& m) {
  json j;
  switch (m.kind()) {
    case MetricKind::Explicit: {
      j["type"] = "explicit";
      j["labels"] = m.labels();
      json dist = json::array();
      for (const auto& row : m.matrix()) {
        json r = json::array();
        for (const auto& d : row) r.push_back(rational_json(d));
        dist.push_back(std::move(r));
      }
      j["dist"] = std::move(dist);
      break;
    }
    case MetricKind::Discrete:
      j["type"] = "discrete";
      j["labels"] = m.labels();
      break;
    case MetricKind::GraphDerived: {
      const PlayerGraph& g = m.graph_info().source;
      j["type"] = "graph";
      json as_graph = graph_json(g);
      j["points"] = as_graph["players"];
      j["edges"] = as_graph["edges"];
      if (as_graph.contains("weights")) j["weights"] = as_graph["weights"];
      break;
    }
    case MetricKind::Product: {
      const auto& info = m.product_info();
      j["type"] = "product";
      j["ell"] = info.ell.is_infinity ? json("inf") : json(info.ell.order);
      json factors = json::array();
      for (const auto& f : info.factors) factors.push_back(metric_json(f));
      j["factors"] = std::move(factors);
      break;
    }
  }
  return j;
}

// ---------------------------------------------------------------------------
// Instance files.

inline constexpr int kFormatVersion = 1;

struct ParsedInstance {
  Game game;
  std::optional<GridSpec> grid;
  std::optional<AxisPreference> axis_preferences;
};

inline Profile parse_profile_array(const json& j, const std::string& path) {
  const json& ja = get_array(j, path);
  Profile x;
  x.reserve(ja.size());
  for (std::size_t i = 0; i < ja.size(); ++i)
    x.push_back(get_u32(ja[i], path + "[" + std::to_string(i) + "]"));
  return x;
}

inline json profile_json(const Profile& x) {
  json j = json::array();
  for (StrategyIndex s : x) j.push_back(s);
  return j;
}

inline ParsedInstance parse_instance_json(const json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  const int version =
      static_cast<int>(get_int64(require(j, "format_version", "$"), "$.format_version"));
  if (version != kFormatVersion)
    fail("$.format_version", "unsupported version " + std::to_string(version));
  const std::string kind = get_string(require(j, "kind", "$"), "$.kind");

  if (kind == "dpg_param")
    check_fields(j, "$", {"format_version", "kind", "graph", "metric", "beta", "alpha", "grid"});
  else if (kind == "dpg_penalty")
    check_fields(j, "$", {"format_version", "kind", "graph", "metric", "penalties", "grid"});
  else if (kind == "ncg")
    check_fields(j, "$", {"format_version", "kind", "graph", "strategy_sets", "edge_costs",
                          "grid"});
  else
    fail("$.kind", "unknown kind '" + kind + "' (expected dpg_param, dpg_penalty or ncg)");

  PlayerGraph graph = parse_graph(require(j, "graph", "$"), "$.graph");

  std::optional<Game> game;
  if (kind == "dpg_param") {
    FiniteMetric metric = parse_metric(require(j, "metric", "$"), "$.metric");
    Profile beta = parse_profile_array(require(j, "beta", "$"), "$.beta");
    Rational alpha = get_rational(require(j, "alpha", "$"), "$.alpha");
    game.emplace(DpgParam(std::move(graph), std::move(metric), std::move(beta),
                          std::move(alpha)));
  } else if (kind == "dpg_penalty") {
    FiniteMetric metric = parse_metric(require(j, "metric", "$"), "$.metric");
    const json& jp = get_array(require(j, "penalties", "$"), "$.penalties");
    std::vector<std::vector<Rational>> penalties;
    for (std::size_t i = 0; i < jp.size(); ++i) {
      const std::string rp = "$.penalties[" + std::to_string(i) + "]";
      const json& row = get_array(jp[i], rp);
      penalties.emplace_back();
      for (std::size_t s = 0; s < row.size(); ++s)
        penalties.back().push_back(get_rational(row[s], rp + "[" + std::to_string(s) + "]"));
    }
    game.emplace(DpgPenalty(std::move(graph), std::move(metric), std::move(penalties)));
  } else {
    const json& js = get_array(require(j, "strategy_sets", "$"), "$.strategy_sets");
    std::vector<std::uint32_t> sets;
    for (std::size_t i = 0; i < js.size(); ++i)
      sets.push_back(get_u32(js[i], "$.strategy_sets[" + std::to_string(i) + "]"));
    const json& jc = get_array(require(j, "edge_costs", "$"), "$.edge_costs");
    std::vector<std::vector<std::vector<Rational>>> costs;
    for (std::size_t k = 0; k < jc.size(); ++k) {
      const std::string kp = "$.edge_costs[" + std::to_string(k) + "]";
      const json& table = get_array(jc[k], kp);
      costs.emplace_back();
      for (std::size_t a = 0; a < table.size(); ++a) {
        const std::string ap = kp + "[" + std::to_string(a) + "]";
        const json& row = get_array(table[a], ap);
        costs.back().emplace_back();
        for (std::size_t b = 0; b < row.size(); ++b)
          costs.back().back().push_back(get_rational(row[b], ap + "[" + std::to_string(b) + "]"));
      }
    }
    game.emplace(Ncg(std::move(graph), std::move(sets), std::move(costs)));
  }

  ParsedInstance out{std::move(*game), std::nullopt, std::nullopt};
  if (j.contains("grid")) {
    const json& jg = j["grid"];
    check_fields(jg, "$.grid", {"dims", "axis_preferences"});
    const json& jd = get_array(require(jg, "dims", "$.grid"), "$.grid.dims");
    std::vector<std::uint32_t> dims;
    for (std::size_t t = 0; t < jd.size(); ++t) {
      dims.push_back(get_u32(jd[t], "$.grid.dims[" + std::to_string(t) + "]"));
      if (dims.back() == 0) fail("$.grid.dims[" + std::to_string(t) + "]", "must be positive");
    }
    if (dims.empty()) fail("$.grid.dims", "must be nonempty");

    const auto* dpg = std::get_if<DpgParam>(&out.game);
    if (!dpg) fail("$.grid", "grid block is only valid for kind dpg_param");
    out.grid.emplace(std::move(dims));
    if (!(build_grid_graph(*out.grid) == dpg->graph))
      fail("$.grid.dims", "grid does not match the game graph");

    if (jg.contains("axis_preferences")) {
      const json& ja = get_array(jg["axis_preferences"], "$.grid.axis_preferences");
      AxisPreference pref;
      for (std::size_t t = 0; t < ja.size(); ++t)
        pref.per_axis.push_back(
            parse_profile_array(ja[t], "$.grid.axis_preferences[" + std::to_string(t) + "]"));

      std::variant<AxisPreference, ConditionBViolation> derived;
      try {
        derived = check_condition_b(*dpg, *out.grid);
      } catch (const Error& e) {
        fail("$.grid.axis_preferences", e.what());
      }
      if (const auto* v = std::get_if<ConditionBViolation>(&derived))
        fail("$.grid.axis_preferences", v->describe());
      if (std::get<AxisPreference>(derived).per_axis != pref.per_axis)
        fail("$.grid.axis_preferences", "inconsistent with the players' preferred strategies");
      out.axis_preferences = std::move(pref);
    }
  }
  return out;
}

inline ParsedInstance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("$: malformed JSON: " + std::string(e.what()));
  }
  return parse_instance_json(j);
}

inline json instance_json(const Game& game, const std::optional<GridSpec>& grid = std::nullopt,
                          const std::optional<AxisPreference>& pref = std::nullopt) {
  json j;
  j["format_version"] = kFormatVersion;
  if (const auto* g = std::get_if<DpgParam>(&game)) {
    j["kind"] = "dpg_param";
    j["graph"] = graph_json(g->graph);
    j["metric"] = metric_json(g->metric);
    j["beta"] = profile_json(g->beta);
    j["alpha"] = rational_json(g->alpha);
  } else if (const auto* g = std::get_if<DpgPenalty>(&game)) {
    j["kind"] = "dpg_penalty";
    j["graph"] = graph_json(g->graph);
    j["metric"] = metric_json(g->metric);
    json penalties = json::array();
    for (const auto& row : g->penalties) {
      json r = json::array();
      for (const auto& p : row) r.push_back(rational_json(p));
      penalties.push_back(std::move(r));
    }
    j["penalties"] = std::move(penalties);
  } else {
    const auto& ncg = std::get<Ncg>(game);
    j["kind"] = "ncg";
    j["graph"] = graph_json(ncg.graph);
    j["strategy_sets"] = ncg.strategy_sets;
    json costs = json::array();
    for (const auto& table : ncg.edge_costs) {
      json t = json::array();
      for (const auto& row : table) {
        json r = json::array();
        for (const auto& c : row) r.push_back(rational_json(c));
        t.push_back(std::move(r));
      }
      costs.push_back(std::move(t));
    }
    j["edge_costs"] = std::move(costs);
  }
  if (grid) {
    j["grid"]["dims"] = grid->dims();
    if (pref) {
      json axes = json::array();
      for (const auto& axis : pref->per_axis) axes.push_back(profile_json(axis));
      j["grid"]["axis_preferences"] = std::move(axes);
    }
  }
  return j;
}

inline std::string serialize_instance(const Game& game,
                                      const std::optional<GridSpec>& grid = std::nullopt,
                                      const std::optional<AxisPreference>& pref = std::nullopt) {
  return instance_json(game, grid, pref).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Result files.

inline json trace_json(const BrdTrace& t) {
  json j;
  j["start"] = profile_json(t.start);
  j["start_potential"] = rational_json(t.start_potential);
  if (t.bound) j["bound"] = rational_json(*t.bound);
  json steps = json::array();
  for (const BrdStep& s : t.steps) {
    json js;
    js["player"] = s.player;
    js["from"] = s.from;
    js["to"] = s.to;
    js["cost_drop"] = rational_json(s.cost_drop);
    js["potential_after"] = rational_json(s.potential_after);
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  j["final"] = profile_json(t.final);
  return j;
}

inline BrdTrace parse_trace(const json& j, const std::string& path) {
  check_fields(j, path, {"start", "start_potential", "bound", "steps", "final"});
  BrdTrace t;
  t.start = parse_profile_array(require(j, "start", path), path + ".start");
  t.start_potential =
      get_rational(require(j, "start_potential", path), path + ".start_potential");
  if (j.contains("bound")) t.bound = get_rational(j["bound"], path + ".bound");
  const json& js = get_array(require(j, "steps", path), path + ".steps");
  for (std::size_t k = 0; k < js.size(); ++k) {
    const std::string sp = path + ".steps[" + std::to_string(k) + "]";
    check_fields(js[k], sp, {"player", "from", "to", "cost_drop", "potential_after"});
    BrdStep s;
    s.player = get_u32(require(js[k], "player", sp), sp + ".player");
    s.from = get_u32(require(js[k], "from", sp), sp + ".from");
    s.to = get_u32(require(js[k], "to", sp), sp + ".to");
    s.cost_drop = get_rational(require(js[k], "cost_drop", sp), sp + ".cost_drop");
    s.potential_after =
        get_rational(require(js[k], "potential_after", sp), sp + ".potential_after");
    t.steps.push_back(std::move(s));
  }
  t.final = parse_profile_array(require(j, "final", path), path + ".final");
  return t;
}

struct ResultFile {
  std::string solver;
  Profile profile;
  bool verified = false;
  Rational potential_value;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> moves;
  std::optional<BrdTrace> trace;
  std::optional<std::uint64_t> wall_time_ms;  // absent unless timing was requested
};

inline json result_json(const ResultFile& r) {
  json j;
  j["format_version"] = kFormatVersion;
  j["solver"] = r.solver;
  j["profile"] = profile_json(r.profile);
  j["verified"] = r.verified;
  j["potential"] = rational_json(r.potential_value);
  if (r.seed) j["seed"] = *r.seed;
  if (r.moves) j["moves"] = *r.moves;
  if (r.trace) j["trace"] = trace_json(*r.trace);
  if (r.wall_time_ms) j["wall_time_ms"] = *r.wall_time_ms;
  return j;
}

inline std::string serialize_result(const ResultFile& r) { return result_json(r).dump(2) + "\n"; }

inline ResultFile parse_result(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("$: malformed JSON: " + std::string(e.what()));
  }
  check_fields(j, "$", {"format_version", "solver", "profile", "verified", "potential", "seed",
                        "moves", "trace", "wall_time_ms"});
  const int version =
      static_cast<int>(get_int64(require(j, "format_version", "$"), "$.format_version"));
  if (version != kFormatVersion)
    fail("$.format_version", "unsupported version " + std::to_string(version));
  ResultFile r;
  r.solver = get_string(require(j, "solver", "$"), "$.solver");
  r.profile = parse_profile_array(require(j, "profile", "$"), "$.profile");
  r.verified = get_bool(require(j, "verified", "$"), "$.verified");
  r.potential_value = get_rational(require(j, "potential", "$"), "$.potential");
  if (j.contains("seed")) r.seed = get_u64(j["seed"], "$.seed");
  if (j.contains("moves")) r.moves = get_u64(j["moves"], "$.moves");
  if (j.contains("trace")) r.trace = parse_trace(j["trace"], "$.trace");
  if (j.contains("wall_time_ms")) r.wall_time_ms = get_u64(j["wall_time_ms"], "$.wall_time_ms");
  return r;
}

// A profile argument on the command line may be a bare JSON array or a full
// result file; both shapes resolve to the profile.
inline Profile parse_profile_argument(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("$: malformed JSON: " + std::string(e.what()));
  }
  if (j.is_array()) return parse_profile_array(j, "$");
  if (j.is_object()) return parse_result(text).profile;
  fail("$", "expected a profile array or a result file");
}

}  // namespace pne::io
