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

#include <numeric>

#include "catch_amalgamated.hpp"

#include "enigma/benchgen.hpp"
#include "enigma/errors.hpp"

namespace enigma {

namespace {

bool connected(const ProblemGraph& g) {
    std::vector<std::size_t> parent(g.num_nodes);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : g.edges) parent[find(a)] = find(b);
    for (std::size_t v = 0; v < g.num_nodes; ++v) {
        if (find(v) != find(0)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("family names", "[benchgen]") {
    for (Family f : kAllFamilies) CHECK(parse_family(to_string(f)) == f);
    CHECK(to_string(Family::regular3) == "regular3");
    CHECK_THROWS_AS(parse_family("grid"), DomainError);
}

TEST_CASE("generated structure", "[benchgen]") {
    Rng rng(17);
    SECTION("sk is complete") {
        auto g = problem_graph(generate(Family::sk, 4, rng));
        CHECK(g.edges.size() == 6);
        CHECK(g.is_regular(3));
    }
    SECTION("regular3 is 3-regular") {
        for (index_type n : {4, 6, 8, 10, 16}) {
            auto g = problem_graph(generate(Family::regular3, n, rng));
            CHECK(g.edges.size() == 3 * n / 2);
            CHECK(g.is_regular(3));
        }
    }
    SECTION("ba1 is a tree") {
        for (int t = 0; t < 20; ++t) {
            auto g = problem_graph(generate(Family::ba1, 8, rng));
            CHECK(g.edges.size() == 7);
            CHECK(connected(g));
        }
    }
    SECTION("ba2 edge count") {
        // seed triangle plus two edges per later node
        auto g = problem_graph(generate(Family::ba2, 9, rng));
        CHECK(g.edges.size() == 3 + 2 * 6);
        CHECK(connected(g));
    }
}

TEST_CASE("weights are unit spin-glass couplings", "[benchgen]") {
    Rng rng(3);
    int positive = 0, total = 0;
    for (int t = 0; t < 100; ++t) {
        Family f = kAllFamilies[t % kAllFamilies.size()];
        auto m = generate(f, f == Family::regular3 ? 8 : 3 + t % 8, rng);
        for (double h : m.linear()) REQUIRE(h == 0.0);
        REQUIRE(m.offset() == 0.0);
        for (const auto& [pair, v] : m.quadratic()) {
            REQUIRE((v == 1.0 || v == -1.0));
            positive += v > 0;
            ++total;
        }
    }
    CHECK(std::abs(static_cast<double>(positive) / total - 0.5) < 0.05);
}

TEST_CASE("er edge density", "[benchgen]") {
    Rng rng(8);
    const index_type n = 10;
    const double trials = 45.0, p = kErdosRenyiProbability;
    const int draws = 200;
    double sum = 0.0;
    for (int d = 0; d < draws; ++d) sum += generate(Family::er, n, rng).num_interactions();
    const double sigma = std::sqrt(trials * p * (1 - p) / draws);
    CHECK(std::abs(sum / draws - trials * p) < 3.0 * sigma);
}

TEST_CASE("deterministic per seed", "[benchgen]") {
    for (Family f : kAllFamilies) {
        Rng a(21), b(21);
        CHECK(generate(f, 8, a) == generate(f, 8, b));
    }
}

TEST_CASE("invalid sizes", "[benchgen]") {
    Rng rng(1);
    CHECK_THROWS_AS(generate(Family::regular3, 5, rng), DomainError);
    CHECK_THROWS_AS(generate(Family::regular3, 2, rng), DomainError);
    CHECK_THROWS_AS(generate(Family::sk, 1, rng), DomainError);
    CHECK_THROWS_AS(generate(Family::ba2, 2, rng), DomainError);
    CHECK_NOTHROW(generate(Family::ba1, 2, rng));
}

}  // namespace enigma
