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

// Dense statevector QAOA.
//
// Each layer applies the diagonal cost phase exp(-i gamma f(z)) and then
// exp(-i beta X) on every qubit. Basis state s has qubit i in bit i of s, with
// bit 1 meaning z_i = +1. The constant offset only contributes a global phase
// and is left out of the cost phase.

#pragma once

#include <complex>
#include <vector>

#include "enigma/core.hpp"
#include "enigma/outcome.hpp"

namespace enigma {

inline constexpr index_type kSimulatorMaxQubits = 16;

struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t layers() const noexcept { return gammas.size(); }
};

using StateVector = std::vector<std::complex<double>>;

/// Energies of all basis states without the offset, indexed by state.
std::vector<double> diagonal_energies(const IsingModel& model);

StateVector simulate(const IsingModel& model, const QaoaParams& params);

/// sum_s |amp_s|^2 f(s), offset included.
double expectation(const IsingModel& model, const QaoaParams& params);

double norm(const StateVector& state);

struct OptimizeOptions {
    std::size_t layers = 1;
    /// Total coordinate sweeps, split evenly over the restarts.
    std::size_t max_iters = 200;
    std::size_t restarts = 10;
    /// Objective evaluations per one-dimensional golden-section search.
    std::size_t line_evals = 24;
};

struct OptimizeResult {
    QaoaParams params;
    double best_value = 0.0;
    /// Best-so-far expectation after each sweep; non-increasing.
    std::vector<double> trace;
};

/// Multi-start coordinate descent. Each restart draws (gamma, beta) uniformly
/// from [0, pi) x [0, pi) per layer and then refines one coordinate at a time
/// with golden-section search over a window that shrinks between sweeps.
OptimizeResult optimize(const IsingModel& model, const OptimizeOptions& options, Rng& rng);

/// Multinomial sampling of |amp|^2; the returned counts are normalized.
OutcomeDistribution sample(const StateVector& state, std::size_t shots, Rng& rng);

}  // namespace enigma
