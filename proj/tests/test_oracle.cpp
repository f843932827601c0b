// Copyright 2026 The Enigma Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <limits>

#include "catch_amalgamated.hpp"

#include "enigma/enigma1.hpp"
#include "enigma/errors.hpp"
#include "enigma/oracle.hpp"
#include "support.hpp"

namespace enigma {

using testing::close;

namespace {

IsingModel single_edge() { return IsingModel({0.0, 0.0}, {{{0, 1}, 1.0}}); }

}  // namespace

TEST_CASE("brute_force hand cases", "[oracle]") {
    SECTION("single edge") {
        auto r = brute_force(single_edge());
        CHECK(r.global_min == -1.0);
        CHECK(r.argmin_set == std::set<std::string>{"01", "10"});
        CHECK(r.gap == 2.0);
        CHECK(r.energies == std::vector<double>{-1.0, -1.0, 1.0, 1.0});
    }
    SECTION("single field") {
        auto r = brute_force(IsingModel(std::vector<double>{1.0}, {}));
        CHECK(r.global_min == -1.0);
        CHECK(r.argmin_set == std::set<std::string>{"0"});
        CHECK(r.gap == 2.0);
    }
    SECTION("flat spectrum") {
        auto r = brute_force(IsingModel(3, 0.5));
        CHECK(r.argmin_set.size() == 8);
        CHECK(r.gap == std::numeric_limits<double>::infinity());
    }
    SECTION("qubo input uses the same bit order") {
        auto r = brute_force(QuboModel(2, {{{0, 0}, -1.0}}));
        CHECK(r.argmin_set == std::set<std::string>{"10", "11"});
        CHECK(r.global_min == -1.0);
    }
    SECTION("size cap") {
        CHECK_THROWS_AS(brute_force(IsingModel(kBruteForceMaxVariables + 1)), ResourceError);
    }
}

TEST_CASE("brute_force agrees with naive enumeration", "[oracle][property]") {
    Rng rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const index_type n = 1 + trial % 12;
        auto m = testing::random_ising(n, rng);
        auto r = brute_force(m);
        auto naive = testing::naive_ising_energies(m);
        REQUIRE(r.state_energies.size() == naive.size());
        for (std::size_t s = 0; s < naive.size(); ++s) REQUIRE(close(r.state_energies[s], naive[s], 1e-12));
        auto sorted = testing::sorted(naive);
        REQUIRE(r.global_min == r.energies.front());
        for (std::size_t s = 0; s < naive.size(); ++s) REQUIRE(close(r.energies[s], sorted[s], 1e-12));
        for (const auto& bits : r.argmin_set) REQUIRE(close(energy_of(m, bits), r.global_min, 1e-12));

        auto q = brute_force(ising_to_qubo(m));
        for (std::size_t s = 0; s < naive.size(); ++s) REQUIRE(close(q.energies[s], r.energies[s], 1e-12));
        REQUIRE(q.argmin_set == r.argmin_set);
    }
}

TEST_CASE("encrypt1 spectrum relation", "[oracle]") {
    Rng rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = testing::random_ising(2 + trial % 7, rng);
        auto [e, key] = obfuscate1(m, rng);
        auto a = brute_force(m);
        auto b = brute_force(e);
        for (std::size_t s = 0; s < a.energies.size(); ++s) {
            REQUIRE(close(b.energies[s], key.tau * (a.energies[s] - m.offset()), 1e-12));
        }
    }
}

TEST_CASE("argmin_distribution", "[oracle]") {
    auto d = argmin_distribution(brute_force(single_edge()), 2);
    CHECK(d.counts() == OutcomeDistribution::Counts{{"01", 0.5}, {"10", 0.5}});
    CHECK(d.is_normalized());
}

TEST_CASE("ar", "[oracle]") {
    const auto m = single_edge();
    CHECK(ar(OutcomeDistribution(2, {{"01", 1.0}}), m, -1.0) == 1.0);
    CHECK(ar(OutcomeDistribution(2, {{"00", 0.25}, {"01", 0.25}, {"10", 0.25}, {"11", 0.25}}), m, -1.0) == 0.0);
    CHECK(ar(OutcomeDistribution(2, {{"01", 0.5}, {"11", 0.5}}), m, -1.0) == 0.0);
    CHECK(ar(OutcomeDistribution(2, {{"11", 1.0}}), m, -1.0) == -1.0);
    CHECK(expected_value(OutcomeDistribution(2, {{"00", 0.5}, {"01", 0.5}}), m) == 0.0);

    CHECK_THROWS_AS(ar(OutcomeDistribution(2, {{"01", 1.0}}), m, 0.0), UndefinedMetricError);
    CHECK_THROWS_AS(ar(OutcomeDistribution(2, {{"01", 0.5}}), m, -1.0), DomainError);
    CHECK_THROWS_AS(ar(OutcomeDistribution(3, {{"011", 1.0}}), m, -1.0), DimensionError);
}

TEST_CASE("rar", "[oracle]") {
    const auto m = single_edge();
    OutcomeDistribution mixed(2, {{"01", 0.4}, {"10", 0.3}, {"00", 0.2}, {"11", 0.1}});
    CHECK(rar(mixed, m, -1.0, 2) == 1.0);
    CHECK(rar(mixed, m, -1.0, 3) == Catch::Approx((0.4 + 0.3 - 0.2) / 0.9));
    CHECK(rar(mixed, m, -1.0, 4) == ar(mixed, m, -1.0));
    CHECK(rar(mixed, m, -1.0) == ar(mixed, m, -1.0));
    CHECK(rar(OutcomeDistribution(2, {{"01", 0.6}, {"11", 0.4}}), m, -1.0, 1) == 1.0);

    SECTION("equal weights prefer lower energy") {
        OutcomeDistribution tie(2, {{"00", 0.5}, {"01", 0.5}});
        CHECK(rar(tie, m, -1.0, 1) == 1.0);
    }
    SECTION("errors") {
        CHECK_THROWS_AS(rar(mixed, m, 0.0, 2), UndefinedMetricError);
        CHECK_THROWS_AS(rar(mixed, m, -1.0, 0), DomainError);
    }
}

TEST_CASE("metrics are bounded by one", "[oracle][property]") {
    Rng rng(31);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const index_type n = 2 + trial % 6;
        auto m = testing::random_ising(n, rng);
        auto r = brute_force(m);
        if (r.global_min >= 0.0) continue;
        OutcomeDistribution d(n);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if (u(rng) < 0.5) d.add(index_to_bitstring(s, n), u(rng));
        }
        if (d.empty() || d.total_weight() == 0.0) continue;
        d = d.normalized();
        const double a = ar(d, m, r.global_min);
        REQUIRE(a <= 1.0);
        REQUIRE(close(a, expected_value(d, m) / r.global_min, 1e-12));
        REQUIRE(rar(d, m, r.global_min, std::size_t{1} << n) == a);
        for (std::size_t k = 1; k <= 6; ++k) REQUIRE(rar(d, m, r.global_min, k) <= 1.0);
        REQUIRE(ar(argmin_distribution(r, n), m, r.global_min) <= 1.0);
        ++checked;
    }
    CHECK(checked > 50);
}

}  // namespace enigma
