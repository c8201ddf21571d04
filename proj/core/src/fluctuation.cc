// Copyright 2026 The coherework Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coherework/fluctuation.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "coherework/errors.h"
#include "coherework/parallel.h"
#include "coherework/projection.h"
#include "coherework/random.h"

namespace coherework {

std::vector<double> TransitionTable::row_marginals() const {
    std::vector<double> out(rows, 0.0);
    for (std::size_t m = 0; m < rows; m++) {
        for (std::size_t n = 0; n < cols; n++) {
            out[m] += at(m, n);
        }
    }
    return out;
}

std::vector<double> TransitionTable::column_marginals() const {
    std::vector<double> out(cols, 0.0);
    for (std::size_t m = 0; m < rows; m++) {
        for (std::size_t n = 0; n < cols; n++) {
            out[n] += at(m, n);
        }
    }
    return out;
}

TransitionTable transition_table(const Hamiltonian &h0, const Hamiltonian &htau, const ComplexMatrix &v,
                                 Temperature t) {
    std::size_t d = h0.dim();
    if (htau.dim() != d || v.rows() != d || v.cols() != d) {
        throw Error(ErrorKind::DimMismatch, "transition_table: dimensions differ");
    }
    if (!v.is_unitary(kDefaultTolerance)) {
        throw Error(ErrorKind::NotUnitary, "transition_table: v is not unitary");
    }
    double beta = t.beta();
    const auto &levels0 = h0.levels();
    const auto &levelst = htau.levels();

    // |<e^tau_i| v |e^0_j>|^2
    ComplexMatrix overlap = htau.spectrum().eigenvectors.adjoint() * v * h0.spectrum().eigenvectors;

    std::vector<double> state_energies0 = h0.spectrum().eigenvalues;
    auto state_weights = thermal_populations(state_energies0, beta);

    TransitionTable table;
    table.rows = levelst.size();
    table.cols = levels0.size();
    table.probs.assign(table.rows * table.cols, 0.0);
    table.beta = beta;
    for (const auto &level : levels0) {
        table.e0.push_back(level.energy);
    }
    for (const auto &level : levelst) {
        table.etau.push_back(level.energy);
    }
    for (std::size_t m = 0; m < table.rows; m++) {
        for (std::size_t n = 0; n < table.cols; n++) {
            double p = 0.0;
            for (std::size_t i : levelst[m].indices) {
                for (std::size_t j : levels0[n].indices) {
                    p += state_weights[j] * std::norm(overlap(i, j));
                }
            }
            table.probs[m * table.cols + n] = p;
        }
    }
    return table;
}

double jarzynski_average(const TransitionTable &table) {
    double sum = 0.0;
    for (std::size_t m = 0; m < table.rows; m++) {
        for (std::size_t n = 0; n < table.cols; n++) {
            sum += std::exp(-table.beta * (table.etau[m] - table.e0[n])) * table.at(m, n);
        }
    }
    return sum;
}

double free_energy_difference(const Hamiltonian &h0, const Hamiltonian &htau, Temperature t) {
    double beta = t.beta();
    double log_z0 = log_partition_function(h0.spectrum().eigenvalues, beta);
    double log_zt = log_partition_function(htau.spectrum().eigenvalues, beta);
    return -(log_zt - log_z0) / beta;
}

double average_unitary_work(const TransitionTable &table) {
    double sum = 0.0;
    for (std::size_t m = 0; m < table.rows; m++) {
        for (std::size_t n = 0; n < table.cols; n++) {
            sum -= (table.etau[m] - table.e0[n]) * table.at(m, n);
        }
    }
    return sum;
}

ProjectionHeat projection_heat(const DensityMatrix &rho_tau, const Hamiltonian &htau, Temperature t) {
    if (rho_tau.dim() != htau.dim()) {
        throw Error(ErrorKind::DimMismatch, "projection_heat: state and Hamiltonian dimensions differ");
    }
    auto eta = project(rho_tau, ProjectorSet::from_hamiltonian(htau));
    double heat = (von_neumann_entropy(eta) - von_neumann_entropy(rho_tau)) * t.kt();
    return ProjectionHeat{heat, heat, 0.0};
}

namespace {

double unit_uniform(Rng &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

TrajectoryStats sample_trajectories(const TransitionTable &table, std::uint64_t n_samples, std::uint64_t seed,
                                    std::size_t threads) {
    if (n_samples == 0) {
        throw Error(ErrorKind::InvalidArgument, "sample_trajectories: n_samples must be >= 1");
    }
    std::size_t cells = table.probs.size();
    std::vector<double> cdf(cells);
    double running = 0.0;
    std::size_t last_nonzero = 0;
    for (std::size_t c = 0; c < cells; c++) {
        running += table.probs[c];
        cdf[c] = running;
        if (table.probs[c] > 0.0) {
            last_nonzero = c;
        }
    }

    std::uint64_t chunks = (n_samples + kSampleChunk - 1) / kSampleChunk;
    if (threads == 0) {
        threads = configured_thread_count();
    }
    threads = static_cast<std::size_t>(std::min<std::uint64_t>(threads, chunks));

    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(cells, 0));
    auto work = [&](std::size_t worker) {
        auto &counts = partial[worker];
        for (std::uint64_t chunk = worker; chunk < chunks; chunk += threads) {
            Rng rng(derive_seed(seed, chunk));
            std::uint64_t begin = chunk * kSampleChunk;
            std::uint64_t end = std::min(n_samples, begin + kSampleChunk);
            for (std::uint64_t s = begin; s < end; s++) {
                double u = unit_uniform(rng) * running;
                auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
                std::size_t cell = std::min(static_cast<std::size_t>(it - cdf.begin()), last_nonzero);
                counts[cell]++;
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 1; w < threads; w++) {
        pool.emplace_back(work, w);
    }
    work(0);
    for (auto &th : pool) {
        th.join();
    }

    TrajectoryStats stats{n_samples, seed, 0.0, 0.0, 0.0, 0.0, {}, std::vector<std::uint64_t>(cells, 0)};
    for (const auto &counts : partial) {
        for (std::size_t c = 0; c < cells; c++) {
            stats.cell_counts[c] += counts[c];
        }
    }

    auto n = static_cast<double>(n_samples);
    double sum_x = 0.0;
    double sum_w = 0.0;
    std::vector<HistogramBin> bins;
    for (std::size_t c = 0; c < cells; c++) {
        if (stats.cell_counts[c] == 0) {
            continue;
        }
        double delta_e = table.etau[c / table.cols] - table.e0[c % table.cols];
        auto k = static_cast<double>(stats.cell_counts[c]);
        sum_x += k * std::exp(-table.beta * delta_e);
        sum_w += k * -delta_e;
        bins.push_back({delta_e, stats.cell_counts[c]});
    }
    stats.mean_exp_beta_w = sum_x / n;
    stats.mean_work = sum_w / n;

    double ss_x = 0.0;
    double ss_w = 0.0;
    for (std::size_t c = 0; c < cells; c++) {
        if (stats.cell_counts[c] == 0) {
            continue;
        }
        double delta_e = table.etau[c / table.cols] - table.e0[c % table.cols];
        auto k = static_cast<double>(stats.cell_counts[c]);
        double dx = std::exp(-table.beta * delta_e) - stats.mean_exp_beta_w;
        double dw = -delta_e - stats.mean_work;
        ss_x += k * dx * dx;
        ss_w += k * dw * dw;
    }
    if (n_samples > 1) {
        stats.stderr_exp_beta_w = std::sqrt(ss_x / (n - 1.0) / n);
        stats.stderr_work = std::sqrt(ss_w / (n - 1.0) / n);
    }

    std::stable_sort(bins.begin(), bins.end(),
                     [](const HistogramBin &a, const HistogramBin &b) { return a.delta_e < b.delta_e; });
    for (const auto &bin : bins) {
        if (!stats.histogram.empty() && stats.histogram.back().delta_e == bin.delta_e) {
            stats.histogram.back().count += bin.count;
        } else {
            stats.histogram.push_back(bin);
        }
    }
    return stats;
}

}  // namespace coherework
