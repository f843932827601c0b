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

#pragma once

#include <array>
#include <string_view>

#include "enigma/core.hpp"

namespace enigma {

/// Benchmark graph families. All instances have h = 0 and J_ij uniform on {-1, +1}.
enum class Family {
    regular3,  // random 3-regular (configuration model)
    sk,        // complete graph
    er,        // Erdos-Renyi, edge probability 0.6
    ba1,       // Barabasi-Albert, 1 edge per new node
    ba2,       // Barabasi-Albert, 2 edges per new node
};

inline constexpr std::array<Family, 5> kAllFamilies = {Family::regular3, Family::sk, Family::er, Family::ba1,
                                                       Family::ba2};

Family parse_family(std::string_view name);
std::string_view to_string(Family family);

inline constexpr double kErdosRenyiProbability = 0.6;
inline constexpr int kRegularRetryCap = 1000;

IsingModel generate(Family family, index_type n, Rng& rng);

}  // namespace enigma
