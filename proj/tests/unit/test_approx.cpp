#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "../support/oracles.hpp"
#include "vcdim/degree_approx.hpp"
#include "vcdim/exact.hpp"
#include "vcdim/generators.hpp"

using namespace vcdim;

TEST_SUITE("degree_approx") {
  TEST_CASE("good ordering examples") {
    const Hypergraph single(1, {{}, {0}});
    const std::vector<std::uint32_t> w{0, 1};
    CHECK(witness_decides_size_k(single, w, 1) == VertexSet{0});
    const auto order = find_good_ordering(single, w, 1);
    REQUIRE(order);
    CHECK(order->ordering == std::vector<std::uint32_t>{0, 1});

    const Hypergraph empties(2, {{}, {}});
    CHECK_FALSE(witness_decides_size_k(empties, w, 1));
  }

  TEST_CASE("malformed witness sets are input errors") {
    const Hypergraph h = gen_powerset(2);
    const std::vector<std::uint32_t> three{0, 1, 2};
    CHECK_THROWS_AS(witness_decides_size_k(h, three, 2), InputError);
    const std::vector<std::uint32_t> repeated{0, 0};
    CHECK_THROWS_AS(witness_decides_size_k(h, repeated, 1), InputError);
    const std::vector<std::uint32_t> missing{0, 9};
    CHECK_THROWS_AS(witness_decides_size_k(h, missing, 1), InputError);
  }

  TEST_CASE("witness_decides_size_k matches exhaustive search and ignores member order") {
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
      const Hypergraph h = gen_random_hypergraph(5 + seed % 3, 8, 0.5, seed);
      for (int k = 1; k <= 2; ++k) {
        const std::size_t size = std::size_t{1} << k;
        std::vector<std::uint32_t> idx(h.num_edges());
        std::iota(idx.begin(), idx.end(), 0U);
        for (int trial = 0; trial < 6; ++trial) {
          std::shuffle(idx.begin(), idx.end(), rng);
          std::vector<std::uint32_t> w(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(size));
          const auto got = witness_decides_size_k(h, w, k);
          CHECK(got.has_value() == oracle::witnesses_some_set(h, w, k));
          if (got) {
            CHECK(got->size() == static_cast<std::size_t>(k));
            CHECK(oracle::shattered(h, *got));
          }
          auto shuffled = w;
          std::shuffle(shuffled.begin(), shuffled.end(), rng);
          CHECK(witness_decides_size_k(h, shuffled, k) == got);
        }
      }
    }
  }

  TEST_CASE("approx_size_k examples") {
    const auto p3 = approx_size_k(gen_powerset(3), 3);
    CHECK(p3.mode == ApproxOutcome::Mode::found);
    REQUIRE(p3.certificate);
    CHECK(p3.certificate->size() == 2);
    CHECK_FALSE(certificate_failure(gen_powerset(3), *p3.certificate));

    const auto fano = approx_size_k(fano_plane(), 3);
    CHECK(fano.mode == ApproxOutcome::Mode::refuted);
    CHECK(vc_bruteforce(fano_plane()).vc_dimension < 3);

    const Hypergraph single(1, {{}, {0}});
    const auto one = approx_size_k(single, 1);
    CHECK(one.mode == ApproxOutcome::Mode::found);
    REQUIRE(one.certificate);
    CHECK(one.certificate->size() == 0);
    CHECK(one.certificate->witnesses.size() == 1);

    CHECK_THROWS_AS(approx_size_k(single, 0), InputError);
  }

  TEST_CASE("approx_max examples") {
    const auto p3 = approx_max(gen_powerset(3));
    CHECK((p3.certificate_size == 2 || p3.certificate_size == 3));
    CHECK(p3.upper_bound >= 3);

    const auto fano = approx_max(fano_plane());
    CHECK((fano.certificate_size == 1 || fano.certificate_size == 2));
    CHECK(fano.upper_bound >= 2);

    const auto single = approx_max(Hypergraph(2, {{0, 1}}));
    CHECK(single.certificate_size == 0);
    CHECK(single.upper_bound >= 0);

    const auto none = approx_max(Hypergraph(2, {}));
    CHECK(none.certificate_size == -1);
    CHECK(none.upper_bound == -1);
    CHECK_FALSE(none.certificate);
  }

  TEST_CASE("1-additive contract on random hypergraphs") {
    for (std::uint64_t seed = 1; seed <= 120; ++seed) {
      const Hypergraph h = gen_random_hypergraph(3 + seed % 8, 1 + seed % 20, 0.5, seed * 31);
      const int vc = oracle::vc(h);
      const auto r = approx_max(h);
      CHECK((r.certificate_size == vc || r.certificate_size == vc - 1));
      CHECK(r.upper_bound >= vc);
      for (int k : r.refuted) CHECK(vc < k);
      if (r.certificate) {
        CHECK(static_cast<int>(r.certificate->size()) == r.certificate_size);
        CHECK_FALSE(certificate_failure(h, *r.certificate));
      }
      for (int k = 1; k <= 4; ++k) {
        const auto o = approx_size_k(h, k);
        if (o.mode == ApproxOutcome::Mode::refuted) {
          CHECK(vc < k);
        } else {
          REQUIRE(o.certificate);
          CHECK(o.certificate->size() == static_cast<std::size_t>(k - 1));
          CHECK_FALSE(certificate_failure(h, *o.certificate));
        }
      }
    }
  }
}
