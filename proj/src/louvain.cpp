#include "iwn/louvain.hpp"

#include <algorithm>
#include <utility>

#include <fmt/format.h>

#include "iwn/error.hpp"
#include "iwn/modularity.hpp"

namespace iwn {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Classic: return "cl";
    case Method::Hybrid: return "hl";
    case Method::Midpoint: return "midpoint";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "cl") return Method::Classic;
  if (name == "hl") return Method::Hybrid;
  if (name == "midpoint") return Method::Midpoint;
  return std::nullopt;
}

IWNetwork Strategy::prepare(const IWNetwork& net) const {
  return method_ == Method::Midpoint ? net.midpoints() : net;
}

IWNetwork Strategy::aggregate(const IWNetwork& net, const Partition& p) const {
  return method_ == Method::Hybrid ? aggregate_minmax(net, p) : aggregate_sum(net, p);
}

namespace {

// Endpoint-wise running sums. Unlike Interval they tolerate the rounding
// left behind by incremental removal.
struct Bounds {
  double lo = 0.0;
  double hi = 0.0;

  Bounds& operator+=(const Interval& x) {
    lo += x.lo();
    hi += x.hi();
    return *this;
  }
  Bounds& operator-=(const Interval& x) {
    lo -= x.lo();
    hi -= x.hi();
    return *this;
  }
};

Bounds plus(Bounds a, const Interval& x) { return a += x; }

struct Community {
  std::vector<std::size_t> members;  // ascending
  Bounds inner;                      // o_C
  Bounds strength;                   // s_C
};

// Community bookkeeping for one level of the hierarchy. Scalar strategies
// run on the midpoint projection, so the same interval sums serve both.
class Level {
 public:
  Level(const IWNetwork& net, Method method, const Partition& start)
      : net_(uses_scalar_gain(method) ? net.midpoints() : net),
        method_(method),
        community_(start.assignment()),
        communities_(start.community_count()) {
    const std::size_t n = net_.size();
    strength_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      strength_.push_back(strength(net_, v));
      total_ += strength_.back();
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& c = communities_[community_[v]];
      c.members.push_back(v);
      c.strength += strength_[v];
      for (std::size_t u = 0; u < n; ++u) {
        if (community_[u] == community_[v]) c.inner += net_.weight(v, u);
      }
    }
  }

  std::size_t community_of(std::size_t v) const { return community_[v]; }

  std::string name(std::size_t c) const { return community_name(net_, communities_[c].members); }

  std::vector<CandidateGain> evaluate(std::size_t v) const {
    const std::size_t former = community_[v];
    const Interval& self = net_.weight(v, v);
    const auto links = link_sums(v);

    Community without = communities_[former];
    remove(without, v, self, links[former]);

    std::vector<std::size_t> candidates;
    for (std::size_t u = 0; u < net_.size(); ++u) {
      if (net_.has_edge(v, u)) candidates.push_back(community_[u]);
    }
    if (!without.members.empty()) candidates.push_back(former);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<CandidateGain> gains;
    gains.reserve(candidates.size());
    for (std::size_t c : candidates) {
      const Community& target = c == former ? without : communities_[c];
      gains.push_back({c, gain(v, target, links[c])});
    }
    return gains;
  }

  void move(std::size_t v, std::size_t to) {
    const std::size_t from = community_[v];
    if (from == to) return;
    const Interval& self = net_.weight(v, v);
    const auto links = link_sums(v);
    remove(communities_[from], v, self, links[from]);
    auto& target = communities_[to];
    target.members.insert(std::upper_bound(target.members.begin(), target.members.end(), v), v);
    target.inner += links[to];
    target.inner += links[to];
    target.inner += self;
    target.strength += strength_[v];
    community_[v] = to;
  }

  Partition partition() const { return Partition(community_); }

 private:
  // Σ_{u∈C, u≠v} w_vu for every community C.
  std::vector<Interval> link_sums(std::size_t v) const {
    std::vector<Interval> links(communities_.size());
    for (std::size_t u = 0; u < net_.size(); ++u) {
      if (u != v && net_.has_edge(v, u)) links[community_[u]] += net_.weight(v, u);
    }
    return links;
  }

  void remove(Community& c, std::size_t v, const Interval& self, const Interval& link) const {
    c.members.erase(std::find(c.members.begin(), c.members.end(), v));
    if (c.members.empty()) {
      c.inner = {};
      c.strength = {};
      return;
    }
    c.inner -= link;
    c.inner -= link;
    c.inner -= self;
    c.strength -= strength_[v];
  }

  // D(o_C, e_C) with e_C the adjusted expectation of C as one merged vertex.
  double interval_term(const Bounds& inner, const Bounds& s) const {
    const double rest_lo = total_.lo() - s.lo;
    const double rest_hi = total_.hi() - s.hi;
    const double e_lo = s.lo == 0.0 ? 0.0 : s.lo * s.lo / (s.lo + rest_hi);
    const double e_hi = s.hi == 0.0 ? 0.0 : s.hi * s.hi / (s.hi + rest_lo);
    return dominant_difference(inner.lo - e_lo, inner.hi - e_hi);
  }

  double gain(std::size_t v, const Community& target, const Interval& link) const {
    const Interval& self = net_.weight(v, v);
    if (uses_scalar_gain(method_)) {
      // 2 (o_vC − s_v s_C / 2w)
      return 2.0 * (link.lo() - strength_[v].lo() * target.strength.lo / total_.lo());
    }
    Bounds joined = target.inner;
    joined += link;
    joined += link;
    joined += self;
    const double after = interval_term(joined, plus(target.strength, strength_[v]));
    const double before = target.members.empty() ? 0.0
                                                 : interval_term(target.inner, target.strength);
    const double alone = interval_term(plus(Bounds{}, self), plus(Bounds{}, strength_[v]));
    return after - before - alone;
  }

  IWNetwork net_;
  Method method_;
  std::vector<Interval> strength_;
  Interval total_;
  std::vector<std::size_t> community_;
  std::vector<Community> communities_;
};

void check_runnable(const IWNetwork& net) {
  if (net.empty()) throw Error(Errc::EmptyNetwork, "network has no vertices");
  if (total_weight(net).hi() == 0.0) throw Error(Errc::ZeroTotalWeight, "total weight is [0,0]");
}

Pass optimise(const IWNetwork& level, Strategy strategy, const RunOptions& options) {
  const Method method = strategy.method();
  Pass pass;
  pass.network = level;
  Level state(level, method, Partition::singletons(level.size()));

  if (level.size() > 1) {
    bool moved_any = true;
    while (moved_any) {
      if (pass.iterations.size() == options.max_sweeps) {
        throw Error(Errc::IterationLimit,
                    fmt::format("no convergence after {} sweeps", options.max_sweeps));
      }
      moved_any = false;
      Iteration it;
      for (std::size_t v = 0; v < level.size(); ++v) {
        const std::size_t former = state.community_of(v);
        const auto gains = state.evaluate(v);

        VisitEvent visit;
        visit.vertex = level.label(v);
        double former_gain = 0.0;
        const CandidateGain* best = nullptr;
        for (const auto& g : gains) {
          visit.tries.push_back({state.name(g.community), g.gain});
          if (g.community == former) former_gain = g.gain;
          if (best == nullptr || g.gain > best->gain) best = &g;
        }
        if (best != nullptr && best->community != former && best->gain > 0.0 &&
            best->gain > former_gain) {
          visit.moved = true;
          visit.destination = state.name(best->community);
          state.move(v, best->community);
          moved_any = true;
        } else {
          visit.destination = state.name(former);
        }
        it.visits.push_back(std::move(visit));
      }
      it.modularity = modularity(level, state.partition(), method);
      pass.iterations.push_back(std::move(it));
    }
  }

  pass.partition = state.partition();
  pass.changed = pass.partition.community_count() < level.size();
  if (pass.changed) {
    pass.aggregated = strategy.aggregate(level, pass.partition);
    pass.modularity =
        modularity(pass.aggregated, Partition::singletons(pass.aggregated.size()), method);
  } else {
    pass.aggregated = level;
    pass.modularity = modularity(level, pass.partition, method);
  }
  return pass;
}

}  // namespace

std::vector<CandidateGain> evaluate_moves(const IWNetwork& net, const Partition& p,
                                          std::size_t vertex, Strategy strategy) {
  check_runnable(net);
  if (p.vertex_count() != net.size() || vertex >= net.size()) {
    throw Error(Errc::InvalidPartition,
                fmt::format("vertex {} / partition of {} for a network of {}", vertex,
                            p.vertex_count(), net.size()));
  }
  return Level(net, strategy.method(), p).evaluate(vertex);
}

LouvainRun run(const IWNetwork& net, Strategy strategy, RunOptions options) {
  check_runnable(net);
  const Method method = strategy.method();

  LouvainRun result;
  result.method = method;
  result.initial = strategy.prepare(net);
  result.initial_modularity =
      modularity(result.initial, Partition::singletons(result.initial.size()), method);

  IWNetwork level = result.initial;
  for (;;) {
    result.passes.push_back(optimise(level, strategy, options));
    const Pass& pass = result.passes.back();
    if (!pass.changed) break;
    level = pass.aggregated;
  }

  const auto singletons = Partition::singletons(level.size());
  result.final_partition = compose_partitions(result);
  result.final_q = modularity(level, singletons, method);
  result.final_q_max = q_max(level, singletons, method);
  if (result.final_q_max != 0.0) result.final_q_norm = result.final_q / result.final_q_max;
  result.final_network = std::move(level);
  return result;
}

Partition compose_partitions(const LouvainRun& run) {
  if (run.passes.empty()) return Partition::singletons(run.initial.size());
  std::vector<std::size_t> membership(run.passes.front().network.size());
  for (std::size_t v = 0; v < membership.size(); ++v) membership[v] = v;
  for (const auto& pass : run.passes) {
    if (!pass.changed) continue;
    for (auto& c : membership) c = pass.partition.community_of(c);
  }
  return Partition(membership);
}

}  // namespace iwn
