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

#include "enigma/benchgen.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "enigma/errors.hpp"

namespace enigma {

Family parse_family(std::string_view name) {
    if (name == "regular3") return Family::regular3;
    if (name == "sk") return Family::sk;
    if (name == "er") return Family::er;
    if (name == "ba1") return Family::ba1;
    if (name == "ba2") return Family::ba2;
    throw DomainError("unknown benchmark family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
    switch (family) {
        case Family::regular3: return "regular3";
        case Family::sk: return "sk";
        case Family::er: return "er";
        case Family::ba1: return "ba1";
        case Family::ba2: return "ba2";
    }
    return "unknown";
}

namespace {

std::vector<Pair> random_regular3(index_type n, Rng& rng) {
    if (n < 4 || (n * 3) % 2 != 0) {
        throw DomainError("3-regular graphs need an even node count of at least 4, got " + std::to_string(n));
    }
    std::vector<index_type> stubs;
    stubs.reserve(3 * n);
    for (index_type v = 0; v < n; ++v) stubs.insert(stubs.end(), 3, v);

    for (int attempt = 0; attempt < kRegularRetryCap; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::set<Pair> edges;
        bool simple = true;
        for (std::size_t k = 0; k < stubs.size(); k += 2) {
            const index_type a = std::min(stubs[k], stubs[k + 1]);
            const index_type b = std::max(stubs[k], stubs[k + 1]);
            if (a == b || !edges.emplace(a, b).second) {
                simple = false;
                break;
            }
        }
        if (simple) return {edges.begin(), edges.end()};
    }
    throw DomainError("no simple 3-regular pairing found within the retry cap");
}

std::vector<Pair> complete(index_type n) {
    std::vector<Pair> edges;
    for (index_type i = 0; i < n; ++i) {
        for (index_type j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    }
    return edges;
}

std::vector<Pair> erdos_renyi(index_type n, Rng& rng) {
    std::bernoulli_distribution keep(kErdosRenyiProbability);
    std::vector<Pair> edges;
    for (index_type i = 0; i < n; ++i) {
        for (index_type j = i + 1; j < n; ++j) {
            if (keep(rng)) edges.emplace_back(i, j);
        }
    }
    return edges;
}

// Preferential attachment seeded from a clique on attach + 1 nodes.
std::vector<Pair> barabasi_albert(index_type n, index_type attach, Rng& rng) {
    if (n < attach + 1) {
        throw DomainError("attachment factor " + std::to_string(attach) + " needs at least " +
                          std::to_string(attach + 1) + " nodes");
    }
    std::vector<Pair> edges = complete(attach + 1);
    // Each node appears once per incident edge, so a uniform pick is degree-proportional.
    std::vector<index_type> stubs;
    for (auto [a, b] : edges) {
        stubs.push_back(a);
        stubs.push_back(b);
    }
    for (index_type v = attach + 1; v < n; ++v) {
        std::set<index_type> targets;
        while (targets.size() < attach) {
            std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
            targets.insert(stubs[pick(rng)]);
        }
        for (index_type t : targets) {
            edges.emplace_back(t, v);
            stubs.push_back(t);
            stubs.push_back(v);
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace

IsingModel generate(Family family, index_type n, Rng& rng) {
    if (n < 2) throw DomainError("benchmark instances need at least 2 nodes");
    std::vector<Pair> edges;
    switch (family) {
        case Family::regular3: edges = random_regular3(n, rng); break;
        case Family::sk: edges = complete(n); break;
        case Family::er: edges = erdos_renyi(n, rng); break;
        case Family::ba1: edges = barabasi_albert(n, 1, rng); break;
        case Family::ba2: edges = barabasi_albert(n, 2, rng); break;
    }
    IsingModel model(n);
    std::bernoulli_distribution sign(0.5);
    for (auto [a, b] : edges) model.set_quadratic(a, b, sign(rng) ? 1.0 : -1.0);
    return model;
}

}  // namespace enigma
