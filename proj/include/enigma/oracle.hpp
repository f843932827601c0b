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

// Exhaustive ground truth and solution-quality metrics.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "enigma/core.hpp"
#include "enigma/outcome.hpp"

namespace enigma {

inline constexpr index_type kBruteForceMaxVariables = 24;

struct SpectrumReport {
    /// Energy of basis state s, where bit i of s is variable i.
    std::vector<double> state_energies;
    /// All 2^n energies, ascending.
    std::vector<double> energies;
    /// Bitstrings whose energy is within `tolerance` of `global_min`.
    std::set<std::string> argmin_set;
    double global_min = 0.0;
    /// First level above the ground level minus `global_min`; +inf for a flat spectrum.
    double gap = 0.0;
    /// Absolute tolerance separating ground-level ties from excited states.
    double tolerance = 0.0;
};

/// Enumerates every configuration in Gray-code order, updating the energy
/// with one single-variable flip per step. Throws ResourceError above
/// kBruteForceMaxVariables.
SpectrumReport brute_force(const IsingModel& model);
SpectrumReport brute_force(const QuboModel& model);

/// Distribution that puts equal weight on every ground state.
OutcomeDistribution argmin_distribution(const SpectrumReport& report, index_type n);

/// Energy of a bitstring under the z = 2x - 1 convention.
double energy_of(const IsingModel& model, const std::string& bits);
double energy_of(const QuboModel& model, const std::string& bits);

double expected_value(const OutcomeDistribution& dist, const IsingModel& model);

/// Expected energy over `global_min` for a normalized distribution, evaluated
/// as 1 + sum w (E - global_min) / global_min so the ground level maps to 1
/// under rounding.
double ar(const OutcomeDistribution& dist, const IsingModel& model, double global_min);

/// `ar` over the k heaviest outcomes (ties: lower energy, then lexicographic),
/// renormalized.
double rar(const OutcomeDistribution& dist, const IsingModel& model, double global_min, std::size_t k = 5);

}  // namespace enigma
