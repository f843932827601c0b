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

#include "catch_amalgamated.hpp"

#include "enigma/enigma1.hpp"
#include "enigma/errors.hpp"
#include "enigma/oracle.hpp"
#include "support.hpp"

namespace enigma {

using testing::close;
using testing::spins_of;

TEST_CASE("gen_key1", "[enigma1]") {
    SECTION("reproducible per seed") {
        Rng a(42), b(42);
        auto k1 = gen_key1(4, a);
        auto k2 = gen_key1(4, b);
        CHECK(k1 == k2);
        CHECK(k1.tau >= 1.0);
        CHECK_NOTHROW(k1.validate());
    }
    SECTION("target fraction concentrates at one half") {
        Rng rng(7);
        const int draws = 10000;
        const index_type n = 16;
        double total = 0.0;
        int tau_in_range = 0;
        for (int d = 0; d < draws; ++d) {
            auto k = gen_key1(n, rng);
            total += static_cast<double>(k.targets.size()) / n;
            REQUIRE(k.tau >= 1.0);
            if (k.tau <= 4.0) ++tau_in_range;
        }
        CHECK(std::abs(total / draws - 0.5) < 0.02);
        // 1 + |N(1,1)| <= 4 holds with probability ~0.977.
        CHECK(tau_in_range >= 0.95 * draws);
    }
    SECTION("tau override") {
        Rng rng(1);
        CHECK(gen_key1(3, rng, 2.5).tau == 2.5);
        CHECK_THROWS_AS(gen_key1(3, rng, -1.0), InvalidKeyError);
    }
    SECTION("empty problem") {
        Rng rng(1);
        CHECK_THROWS_AS(gen_key1(0, rng), DomainError);
    }
}

TEST_CASE("encrypt1", "[enigma1]") {
    SECTION("sign rules and scaling") {
        IsingModel m({1.0, -1.0}, {{{0, 1}, 2.0}});
        KeyI key{2, {0}, 2.0, 0.0};
        auto e = encrypt1(m, key);
        CHECK(e.linear() == std::vector<double>{-2.0, -2.0});
        CHECK(e.quadratic(0, 1) == -4.0);
    }
    SECTION("identity key only drops the offset") {
        IsingModel m({0.5, -1.5, 2.0}, {{{0, 2}, 3.0}}, 7.0);
        auto e = encrypt1(m, KeyI{3, {}, 1.0, 7.0});
        CHECK(e.linear() == m.linear());
        CHECK(e.quadratic() == m.quadratic());
        CHECK(e.offset() == 0.0);
    }
    SECTION("both endpoints flipped keeps the coupling sign") {
        IsingModel m({0.0, 0.0}, {{{0, 1}, 1.25}});
        auto e = encrypt1(m, KeyI{2, {0, 1}, 3.0, 0.0});
        CHECK(e.quadratic(0, 1) == 3.75);
    }
    SECTION("size mismatch") {
        CHECK_THROWS_AS(encrypt1(IsingModel(3), KeyI{2, {}, 1.0, 0.0}), DimensionError);
    }
    SECTION("sparsity pattern is unchanged") {
        Rng rng(9);
        auto m = testing::random_ising(7, rng);
        auto [e, key] = obfuscate1(m, rng);
        CHECK(problem_graph(e).edges == problem_graph(m).edges);
        CHECK(key.offset == m.offset());
    }
}

TEST_CASE("encrypt1 spectrum law and argmin bijection", "[enigma1][property]") {
    Rng rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const index_type n = 2 + trial % 8;
        auto m = testing::random_ising(n, rng);
        auto [e, key] = obfuscate1(m, rng);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            auto z = spins_of(s, n);
            const double original = eval_ising(m, z);
            const double encrypted = eval_ising(e, flip_targets(z, key));
            REQUIRE(close(encrypted, key.tau * (original - m.offset()), 1e-12, 1e-12));
            REQUIRE(close(recover_energy1(encrypted, key, m.offset()), original, 1e-12, 1e-12));
        }
        auto orig = brute_force(m);
        auto enc = brute_force(e);
        REQUIRE(orig.argmin_set.size() == enc.argmin_set.size());
        OutcomeDistribution ground = decrypt1(argmin_distribution(enc, n), key);
        for (const auto& [bits, w] : ground.counts()) REQUIRE(orig.argmin_set.count(bits) == 1);
        REQUIRE(enc.gap >= orig.gap);
    }
}

TEST_CASE("decrypt1", "[enigma1]") {
    OutcomeDistribution d(2, {{"01", 0.7}, {"10", 0.3}});
    KeyI key{2, {0}, 1.5, 0.0};
    auto out = decrypt1(d, key);
    CHECK(out.counts() == OutcomeDistribution::Counts{{"11", 0.7}, {"00", 0.3}});
    CHECK(decrypt1(d, KeyI{2, {}, 1.0, 0.0}) == d);
    CHECK(decrypt1(out, key) == d);
    CHECK(out.total_weight() == d.total_weight());
    CHECK_THROWS_AS(decrypt1(OutcomeDistribution(3), key), DimensionError);
}

TEST_CASE("recover_energy1 and attack_complexity1", "[enigma1]") {
    CHECK(recover_energy1(-8.0, KeyI{1, {}, 2.0, 3.0}, 3.0) == -1.0);
    CHECK(recover_energy1(0.0, KeyI{1, {}, 1.7, 0.0}, 0.0) == 0.0);
    CHECK_THROWS_AS(recover_energy1(1.0, KeyI{1, {}, 0.0, 0.0}, 0.0), InvalidKeyError);
    CHECK(attack_complexity1(3) == 3.0);
    CHECK(attack_complexity1(127) == 127.0);
    CHECK(attack_complexity1(1) == 1.0);
}

}  // namespace enigma
