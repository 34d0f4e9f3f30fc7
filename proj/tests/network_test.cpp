#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "iwn/error.hpp"
#include "iwn/network.hpp"
#include "iwn/partition.hpp"
#include "support.hpp"

using namespace iwn;
using test::toy;

namespace {

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::InvalidNetwork;
}

std::vector<DirectedFlowRecord> parse(const std::string& text) {
  std::istringstream in(text);
  return read_edge_csv(in);
}

}  // namespace

TEST(Network, Strength) {
  const IWNetwork net = toy();
  EXPECT_EQ(strength(net, 0), Interval(2, 4));
  EXPECT_EQ(strength(net, 1), Interval(2, 4));
  EXPECT_EQ(strength(net, 2), Interval(4, 6));
  EXPECT_EQ(strength(net, 3), Interval(2, 4));
  const IWNetwork lonely = test::make_network(3, {{{0, 1}, Interval(1, 2)}});
  EXPECT_EQ(strength(lonely, 2), Interval());
}

TEST(Network, TotalWeight) {
  EXPECT_EQ(total_weight(toy()), Interval(10, 18));
  EXPECT_EQ(total_weight(IWNetwork()), Interval());
  EXPECT_EQ(total_weight(test::toy_midpoint()), Interval(14, 14));
  EXPECT_EQ(toy().midpoints(), test::toy_midpoint());
}

TEST(Network, RejectsBadMatrices) {
  EXPECT_EQ(code_of([] { IWNetwork({"a", "b"}, {Interval()}); }), Errc::InvalidNetwork);
  EXPECT_EQ(code_of([] {
              IWNetwork({"a", "b"}, {Interval(), Interval(1, 2), Interval(1, 3), Interval()});
            }),
            Errc::InvalidNetwork);
  EXPECT_EQ(code_of([] {
              IWNetwork({"a", "b"}, {Interval(), Interval(-1, 2), Interval(-1, 2), Interval()});
            }),
            Errc::NegativeWeight);
}

TEST(Network, SymmetrizeEnvelope) {
  const std::vector<DirectedFlowRecord> records{{"A", "B", 1496, 1585}, {"B", "A", 1782, 1814}};
  // envelope taken directly over the records
  double lo = records[0].lo;
  double hi = records[0].hi;
  for (const auto& r : records) {
    lo = std::min(lo, r.lo);
    hi = std::max(hi, r.hi);
  }
  const IngestResult got = symmetrize(records, 0.0);
  EXPECT_EQ(got.network.labels(), (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(got.network.weight(0, 1), Interval(lo, hi));
  EXPECT_EQ(got.network.weight(1, 0), Interval(lo, hi));
  EXPECT_EQ(got.network.weight(0, 1), Interval(1496, 1814));
  EXPECT_EQ(got.network.weight(0, 0), Interval());
}

TEST(Network, SymmetrizeSingleDirection) {
  const std::vector<DirectedFlowRecord> records{{"A", "B", 5, 7}};
  EXPECT_EQ(symmetrize(records, 0.0).network.weight(1, 0), Interval(5, 7));
}

TEST(Network, SymmetrizeThreshold) {
  const std::vector<DirectedFlowRecord> records{{"A", "B", 10, 40}, {"B", "C", 60, 90}};
  const IngestResult got = symmetrize(records, 50.0);
  EXPECT_EQ(got.network.size(), 3u);
  EXPECT_EQ(got.network.weight(0, 1), Interval());
  EXPECT_EQ(got.network.weight(1, 2), Interval(60, 90));
  EXPECT_EQ(got.dropped_below_threshold, 1u);
}

TEST(Network, SymmetrizeThresholdBeforeEnvelope) {
  // the weak direction is discarded and does not lower the envelope
  const std::vector<DirectedFlowRecord> records{{"A", "B", 10, 40}, {"B", "A", 55, 70}};
  EXPECT_EQ(symmetrize(records, 50.0).network.weight(0, 1), Interval(55, 70));
}

TEST(Network, SelfLoopsAndDuplicates) {
  const std::vector<DirectedFlowRecord> loops{{"A", "A", 1, 2}, {"A", "B", 1, 2}};
  const IngestResult got = symmetrize(loops, 0.0);
  EXPECT_EQ(got.dropped_self_loops, 1u);
  EXPECT_EQ(got.network.weight(0, 0), Interval());

  const std::vector<DirectedFlowRecord> twice{{"A", "B", 1, 2}, {"A", "B", 1, 3}};
  EXPECT_EQ(code_of([&] { symmetrize(twice, 0.0); }), Errc::DuplicateEdge);

  const std::vector<DirectedFlowRecord> both{{"A", "B", 1, 2}, {"B", "A", 1, 3}};
  EXPECT_NO_THROW(symmetrize(both, 0.0));
  EXPECT_EQ(code_of([&] { from_undirected(both, 0.0); }), Errc::DuplicateEdge);

  const std::vector<DirectedFlowRecord> negative{{"A", "B", -1, 2}};
  EXPECT_EQ(code_of([&] { symmetrize(negative, 0.0); }), Errc::NegativeWeight);
  const std::vector<DirectedFlowRecord> reversed{{"A", "B", 3, 2}};
  EXPECT_EQ(code_of([&] { symmetrize(reversed, 0.0); }), Errc::InvalidInterval);
}

TEST(Network, SymmetrizeRandomInvariants) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> w(0.0, 100.0);
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  for (int round = 0; round < 200; ++round) {
    std::vector<DirectedFlowRecord> records;
    for (const auto& s : names) {
      for (const auto& d : names) {
        if (s == d || std::bernoulli_distribution(0.5)(rng)) continue;
        double lo = w(rng);
        double hi = w(rng);
        if (lo > hi) std::swap(lo, hi);
        records.push_back({s, d, lo, hi});
      }
    }
    const double threshold = w(rng) / 2;
    const IWNetwork net = symmetrize(records, threshold).network;
    for (std::size_t i = 0; i < net.size(); ++i) {
      EXPECT_EQ(net.weight(i, i), Interval());
      for (std::size_t j = 0; j < net.size(); ++j) {
        EXPECT_EQ(net.weight(i, j), net.weight(j, i));
        // brute-force envelope over surviving records of the unordered pair
        std::optional<Interval> env;
        for (const auto& r : records) {
          const bool match = (r.src == net.label(i) && r.dst == net.label(j)) ||
                             (r.src == net.label(j) && r.dst == net.label(i));
          if (i == j || !match || r.hi < threshold) continue;
          env = env ? Interval(std::min(env->lo(), r.lo), std::max(env->hi(), r.hi))
                    : Interval(r.lo, r.hi);
        }
        EXPECT_EQ(net.weight(i, j), env.value_or(Interval()));
      }
    }
  }
}

TEST(Network, AggregateSum) {
  const IWNetwork net = toy();
  const IWNetwork agg = aggregate_sum(net, test::partition_of({0, 0, 1, 1}));
  EXPECT_EQ(agg.labels(), (std::vector<std::string>{"v1,v2", "v3,v4"}));
  EXPECT_EQ(agg.weight(0, 0), Interval(2, 6));
  EXPECT_EQ(agg.weight(0, 1), Interval(2, 2));
  EXPECT_EQ(agg.weight(1, 0), Interval(2, 2));
  EXPECT_EQ(agg.weight(1, 1), Interval(4, 8));
  EXPECT_EQ(aggregate_sum(net, Partition::singletons(4)), net);
  const IWNetwork one = aggregate_sum(net, Partition::all_in_one(4));
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(one.weight(0, 0), total_weight(net));
}

TEST(Network, AggregateMinMax) {
  const IWNetwork net = toy();
  const IWNetwork agg = aggregate_minmax(net, test::partition_of({0, 0, 1, 1}));
  EXPECT_EQ(agg.weight(0, 0), Interval(1, 3));
  EXPECT_EQ(agg.weight(0, 1), Interval(1, 1));
  EXPECT_EQ(agg.weight(1, 0), Interval(1, 1));
  EXPECT_EQ(agg.weight(1, 1), Interval(2, 4));
  EXPECT_EQ(aggregate_minmax(net, Partition::singletons(4)), net);
  // no edge between the two groups stays absent
  const IWNetwork apart = aggregate_minmax(test::make_network(3, {{{0, 1}, Interval(1, 2)}}),
                                           test::partition_of({0, 0, 1}));
  EXPECT_EQ(apart.weight(0, 1), Interval());
}

TEST(NetworkProperty, Aggregation) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> size(2, 8);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = size(rng);
    const IWNetwork net = test::random_network(rng, n, 3.0);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::size_t> a(n);
    for (auto& c : a) c = pick(rng);
    const Partition p(a);

    const IWNetwork summed = aggregate_sum(net, p);
    const Interval t0 = total_weight(net);
    const Interval t1 = total_weight(summed);
    EXPECT_NEAR(t0.lo(), t1.lo(), 1e-9);
    EXPECT_NEAR(t0.hi(), t1.hi(), 1e-9);

    const IWNetwork env = aggregate_minmax(net, p);
    for (std::size_t c = 0; c < p.community_count(); ++c) {
      for (std::size_t d = 0; d < p.community_count(); ++d) {
        double lo = INFINITY;
        double hi = 0.0;
        for (std::size_t i : p.members(c)) {
          for (std::size_t j : p.members(d)) {
            if (!net.has_edge(i, j)) continue;
            lo = std::min(lo, net.weight(i, j).lo());
            hi = std::max(hi, net.weight(i, j).hi());
          }
        }
        EXPECT_EQ(env.weight(c, d), lo == INFINITY ? Interval() : Interval(lo, hi));
      }
    }

    // relabelling the communities permutes rows and columns only
    std::vector<std::size_t> reversed(n);
    for (std::size_t v = 0; v < n; ++v) reversed[n - 1 - v] = a[v];
    std::vector<std::size_t> order(n);
    for (std::size_t v = 0; v < n; ++v) order[v] = n - 1 - v;
    std::vector<std::string> labels;
    std::vector<Interval> w(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      labels.push_back(net.label(order[i]));
      for (std::size_t j = 0; j < n; ++j) w[i * n + j] = net.weight(order[i], order[j]);
    }
    const IWNetwork flipped(labels, w);
    const Partition q(reversed);
    const IWNetwork summed2 = aggregate_sum(flipped, q);
    for (std::size_t c = 0; c < p.community_count(); ++c) {
      // community c of p is the one holding the same original vertex in q
      const std::size_t v = p.members(c).front();
      const std::size_t c2 = q.community_of(n - 1 - v);
      for (std::size_t d = 0; d < p.community_count(); ++d) {
        const std::size_t u = p.members(d).front();
        const std::size_t d2 = q.community_of(n - 1 - u);
        EXPECT_NEAR(summed.weight(c, d).lo(), summed2.weight(c2, d2).lo(), 1e-9);
        EXPECT_NEAR(summed.weight(c, d).hi(), summed2.weight(c2, d2).hi(), 1e-9);
      }
    }
  }
}

TEST(EdgeCsv, ParsesRecords) {
  const auto records = parse("\xEF\xBB\xBFsrc,dst,lo,hi\n v1 , v2 ,1,3\n\n\"v2\",v3,0.5,1e1\n");
  ASSERT_EQ(records.size(), 2u);
  EXPECT_EQ(records[0].src, "v1");
  EXPECT_EQ(records[0].dst, "v2");
  EXPECT_EQ(records[0].lo, 1.0);
  EXPECT_EQ(records[1].src, "v2");
  EXPECT_EQ(records[1].hi, 10.0);
}

TEST(EdgeCsv, ReportsLineNumbers) {
  try {
    parse("src,dst,lo,hi\nv1,v2,1,3\nv2,v3,one,2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  EXPECT_EQ(code_of([] { parse("src,dst,lo,hi\nv1,v2,1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse("a,b,c\nv1,v2,1,2\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { parse("src,dst,lo,hi\nv1,v2,-1,2\n"); }), Errc::NegativeWeight);
  EXPECT_EQ(code_of([] { parse("src,dst,lo,hi\nv1,v2,3,2\n"); }), Errc::InvalidInterval);
  EXPECT_EQ(code_of([] { read_edge_csv_file("/nonexistent/edges.csv"); }), Errc::ParseError);
}

TEST(EdgeCsv, ToyFixture) {
  const auto records = read_edge_csv_file(IWN_FIXTURES "/toy_interval.csv");
  EXPECT_EQ(symmetrize(records, 0.0).network, toy());
  EXPECT_EQ(from_undirected(records, 0.0).network, toy());
}
