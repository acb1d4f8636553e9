#include <doctest.h>

#include <random>

#include "elorder/max_flow.hpp"

using elorder::MaxFlow;

namespace {

struct Arc {
  int from, to;
  std::int64_t cap;
};

// Minimum s-t cut by enumerating every vertex bipartition.
std::int64_t brute_min_cut(int nodes, const std::vector<Arc>& arcs, int s, int t) {
  std::int64_t best = -1;
  for (std::uint32_t mask = 0; mask < (1U << nodes); ++mask) {
    if (!(mask & (1U << s)) || (mask & (1U << t))) continue;
    std::int64_t cut = 0;
    for (const auto& a : arcs) {
      if ((mask & (1U << a.from)) && !(mask & (1U << a.to))) cut += a.cap;
    }
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

}  // namespace

TEST_CASE("max flow equals brute-force min cut on random graphs") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const int nodes = 2 + static_cast<int>(rng() % 7);
    std::vector<Arc> arcs;
    const int m = static_cast<int>(rng() % 18);
    for (int i = 0; i < m; ++i) {
      arcs.push_back({static_cast<int>(rng() % nodes), static_cast<int>(rng() % nodes),
                      static_cast<std::int64_t>(rng() % 10)});
    }
    MaxFlow mf(nodes);
    for (const auto& a : arcs) mf.add_edge(a.from, a.to, a.cap);
    const auto flow = mf.solve(0, nodes - 1);
    CHECK(flow == brute_min_cut(nodes, arcs, 0, nodes - 1));

    // The residual source side is a minimum cut.
    const auto reach = mf.residual_reachable(0);
    CHECK_FALSE(reach[nodes - 1]);
    std::int64_t cut = 0;
    for (const auto& a : arcs) {
      if (reach[a.from] && !reach[a.to]) cut += a.cap;
    }
    CHECK(cut == flow);
  }
}

TEST_CASE("per-edge flows are conserved") {
  MaxFlow mf(4);
  const auto a = mf.add_edge(0, 1, 3);
  const auto b = mf.add_edge(0, 2, 2);
  const auto c = mf.add_edge(1, 3, 2);
  const auto d = mf.add_edge(2, 3, 3);
  const auto e = mf.add_edge(1, 2, 1);
  CHECK(mf.solve(0, 3) == 5);
  CHECK(mf.flow_on(a) == mf.flow_on(c) + mf.flow_on(e));
  CHECK(mf.flow_on(b) + mf.flow_on(e) == mf.flow_on(d));
}
