#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "vcdim/convert.hpp"
#include "vcdim/exact.hpp"
#include "vcdim/generators.hpp"
#include "vcdim/shatter.hpp"

using namespace vcdim;

namespace {

std::vector<std::vector<Vertex>> subsets_up_to(std::size_t n, std::size_t max_size) {
  std::vector<std::vector<Vertex>> out;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) > max_size) continue;
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) s.push_back(v);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("hypergraph construction normalises edges and derives stats") {
    Hypergraph h(4, {{2, 0, 2}, {}, {1, 2, 3}});
    CHECK(h.edge(0) == VertexSet{0, 2});
    CHECK(h.dimension() == 3);
    CHECK(h.max_degree() == 2);
    CHECK(h.degree(2) == 2);
    CHECK(std::vector<std::uint32_t>(h.incidence(2).begin(), h.incidence(2).end()) ==
          std::vector<std::uint32_t>{0, 2});
    CHECK_THROWS_AS(Hypergraph(2, {{0, 2}}), InputError);
  }

  TEST_CASE("graph rejects self-loops and merges parallel edges") {
    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), InputError);
    const std::vector<Edge> twice{{0, 1}, {1, 0}, {1, 2}};
    Graph g(3, twice);
    CHECK(g.num_edges() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
  }

  TEST_CASE("single-vertex shattering examples") {
    const Hypergraph a(1, {{}, {0}});
    const std::vector<Vertex> s{0};
    CHECK(is_shattered(a, s));
    const auto cert = witness_of(a, s);
    REQUIRE(cert);
    CHECK(cert->witnesses == std::vector<std::uint32_t>{0, 1});

    const Hypergraph b(2, {{0}, {1}});
    const std::vector<Vertex> ab{0, 1};
    CHECK_FALSE(is_shattered(b, ab));
    CHECK_FALSE(witness_of(b, ab));
  }

  TEST_CASE("empty set is shattered iff there is an edge") {
    CHECK(is_shattered(Hypergraph(2, {{}}), std::span<const Vertex>{}));
    CHECK_FALSE(is_shattered(Hypergraph(2, {}), std::span<const Vertex>{}));
  }

  TEST_CASE("out-of-range or repeated vertices are input errors") {
    const Hypergraph h(2, {{0}});
    const std::vector<Vertex> bad{5};
    CHECK_THROWS_AS(is_shattered(h, bad), InputError);
    const std::vector<Vertex> twice{0, 0};
    CHECK_THROWS_AS(is_shattered(h, twice), InputError);
  }

  TEST_CASE("Fano plane: every pair shattered, no triple") {
    const Hypergraph fano = fano_plane();
    for (const auto& s : subsets_up_to(7, 3)) {
      if (s.size() == 2) {
        CHECK(oracle::shattered(fano, s));
        CHECK(is_shattered(fano, s));
      } else if (s.size() == 3) {
        CHECK_FALSE(oracle::shattered(fano, s));
        CHECK_FALSE(is_shattered(fano, s));
      }
    }
  }

  TEST_CASE("instance shattering examples") {
    const auto c5 = GenVCInstance::whole_graph(cycle_graph(5));
    const std::vector<Vertex> v13{0, 2};
    CHECK(is_shattered(c5, v13));
    CHECK(oracle::shattered(c5, v13));

    const auto k33 = GenVCInstance::whole_graph(complete_bipartite_graph(3, 3));
    for (const auto& s : subsets_up_to(6, 2)) {
      if (s.size() == 2) CHECK_FALSE(is_shattered(k33, s));
    }

    const GenVCInstance no_y(path_graph(3), {0, 1}, {});
    CHECK_FALSE(is_shattered(no_y, std::span<const Vertex>{}));

    const GenVCInstance x_only(path_graph(3), {0}, {1});
    const std::vector<Vertex> outside{2};
    CHECK_THROWS_AS(is_shattered(x_only, outside), InputError);
  }

  TEST_CASE("certificates re-verify and agree with the naive oracle on random hypergraphs") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      const Hypergraph h = gen_random_hypergraph(6 + seed % 3, 4 + seed % 9, 0.45, seed);
      for (const auto& s : subsets_up_to(h.num_vertices(), 3)) {
        const bool expected = oracle::shattered(h, s);
        CHECK(is_shattered(h, s) == expected);
        const auto cert = witness_of(h, s);
        CHECK(cert.has_value() == expected);
        if (cert) {
          CHECK_FALSE(certificate_failure(h, *cert));
          // Lowest-index witness per pattern.
          for (std::size_t p = 0; p < cert->witnesses.size(); ++p) {
            for (std::uint32_t e = 0; e < cert->witnesses[p]; ++e) {
              std::uint64_t trace = 0;
              for (std::size_t i = 0; i < s.size(); ++i) {
                const auto& edge = h.edge(e);
                if (std::find(edge.begin(), edge.end(), s[i]) != edge.end()) trace |= 1ULL << i;
              }
              CHECK(trace != p);
            }
          }
        }
      }
    }
  }

  TEST_CASE("monotonicity: subsets of shattered sets are shattered") {
    for (std::uint64_t seed = 100; seed < 130; ++seed) {
      const Hypergraph h = gen_random_hypergraph(7, 16, 0.5, seed);
      for (const auto& s : subsets_up_to(7, 3)) {
        if (!is_shattered(h, s)) continue;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
          auto t = s;
          t.erase(t.begin() + static_cast<std::ptrdiff_t>(drop));
          CHECK(is_shattered(h, t));
        }
        CHECK(h.num_edges() >= (std::size_t{1} << s.size()));
      }
    }
  }

  TEST_CASE("perturbed certificate names the failing pattern") {
    const Hypergraph h = gen_powerset(2);
    const std::vector<Vertex> s{0, 1};
    auto cert = *witness_of(h, s);
    std::swap(cert.witnesses[1], cert.witnesses[2]);
    const auto failure = certificate_failure(h, cert);
    REQUIRE(failure);
    CHECK(failure->find("\"10\"") != std::string::npos);
  }

  TEST_CASE("incidence instance preserves shattering") {
    const auto single = to_incidence_instance(Hypergraph(1, {{0}}));
    CHECK(single.graph().num_vertices() == 2);
    CHECK(single.graph().num_edges() == 1);
    CHECK(single.x() == VertexSet{0});
    CHECK(single.y() == VertexSet{1});

    const auto fano = to_incidence_instance(fano_plane());
    CHECK(fano.graph().num_vertices() == 14);
    CHECK(fano.graph().num_edges() == 21);

    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const Hypergraph h = gen_random_hypergraph(5 + seed % 4, 3 + seed % 10, 0.5, seed * 7);
      const auto inst = to_incidence_instance(h);
      for (const auto& s : subsets_up_to(h.num_vertices(), 3)) {
        REQUIRE(is_shattered(inst, s) == is_shattered(h, s));
      }
    }
  }

  TEST_CASE("split graph: edge-vertices form a clique, originals stay independent") {
    CHECK(to_split_graph(Hypergraph(1, {{0}})).num_edges() == 1);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Hypergraph h = gen_random_hypergraph(6, 5, 0.4, seed);
      const Graph g = to_split_graph(h);
      const auto n = static_cast<Vertex>(h.num_vertices());
      for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
          if (u >= n && v >= n) CHECK(g.adjacent(u, v));
          if (u < n && v < n) CHECK_FALSE(g.adjacent(u, v));
          if (u < n && v >= n) {
            const auto& e = h.edge(v - n);
            CHECK(g.adjacent(u, v) == std::binary_search(e.begin(), e.end(), u));
          }
        }
      }
    }
  }

  TEST_CASE("universal vertex keeps the VC-dimension") {
    const Hypergraph h2 = add_universal_vertex(Hypergraph(1, {{0}}));
    CHECK(h2.num_vertices() == 2);
    CHECK(h2.edge(0) == VertexSet{0, 1});
    CHECK(add_universal_vertex(Hypergraph(2, {{}})).edge(0) == VertexSet{2});
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
      const Hypergraph h = gen_random_hypergraph(1 + seed % 8, 1 + seed % 12, 0.5, seed * 3);
      const Hypergraph hu = add_universal_vertex(h);
      CHECK(oracle::vc(hu) == oracle::vc(h));
      for (const auto& s : subsets_up_to(h.num_vertices(), 2)) {
        CHECK(is_shattered(hu, s) == is_shattered(h, s));
      }
    }
  }

  TEST_CASE("neighbourhood hypergraph relabels X densely") {
    const GenVCInstance inst(path_graph(4), {1, 3}, {0, 2});
    const Hypergraph h = neighbourhood_hypergraph(inst);
    CHECK(h.num_vertices() == 2);
    CHECK(h.edge(0) == VertexSet{0});     // N(0) ∩ X = {1}
    CHECK(h.edge(1) == VertexSet{0, 1});  // N(2) ∩ X = {1, 3}
  }

  TEST_CASE("pattern strings list bit 0 first") {
    CHECK(pattern_string(0b01, 2) == "10");
    CHECK(pattern_string(0b110, 3) == "011");
    CHECK(pattern_string(0, 0).empty());
  }
}
