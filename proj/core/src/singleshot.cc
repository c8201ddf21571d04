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

#include "coherework/singleshot.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "coherework/errors.h"
#include "coherework/protocol.h"
#include "units.h"

namespace coherework {

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw Error(ErrorKind::InvalidArgument, "Distribution: empty");
    }
    double sum = 0.0;
    for (double p : probs_) {
        if (!std::isfinite(p) || p < 0.0) {
            throw Error(ErrorKind::InvalidArgument, "Distribution: entries must be finite and >= 0");
        }
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance) {
        throw Error(ErrorKind::InvalidArgument, "Distribution: sum is " + std::to_string(sum));
    }
}

Distribution Distribution::normalized(std::vector<double> weights) {
    double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
    if (!(sum > 0.0) || !std::isfinite(sum)) {
        throw Error(ErrorKind::InvalidArgument, "Distribution: weights must have a positive finite sum");
    }
    for (double &w : weights) {
        w /= sum;
    }
    return Distribution(std::move(weights));
}

namespace {

// A group of equally likely outcomes, with its total p and q mass.
struct Atom {
    double p;
    double q;
    double ratio;
};

Atom make_atom(double p, double q) {
    double ratio = q > 0.0 ? p / q : (p > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
    return {p, q, ratio};
}

void check_eps(double eps, const char *who) {
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, std::string(who) + ": eps must lie in [0, 1)");
    }
}

void sort_by_ratio(std::vector<Atom> &atoms) {
    std::stable_sort(atoms.begin(), atoms.end(), [](const Atom &a, const Atom &b) { return a.ratio > b.ratio; });
}

double d_min_atoms(std::vector<Atom> atoms, double eps) {
    double accepted_q = 0.0;
    if (eps == 0.0) {
        for (const auto &a : atoms) {
            if (a.p > 0.0) {
                accepted_q += a.q;
            }
        }
        return -std::log2(accepted_q);
    }
    sort_by_ratio(atoms);
    double target = 1.0 - eps;
    double accepted_p = 0.0;
    for (const auto &a : atoms) {
        double need = target - accepted_p;
        if (need <= 0.0 || a.p <= 0.0) {
            break;
        }
        if (a.p >= need) {
            accepted_q += a.q * (need / a.p);
            break;
        }
        accepted_p += a.p;
        accepted_q += a.q;
    }
    return -std::log2(accepted_q);
}

double d_max_atoms(std::vector<Atom> atoms, double eps) {
    sort_by_ratio(atoms);
    if (eps == 0.0) {
        return std::log2(atoms.front().ratio);
    }
    // f(r) = sum_k max(0, p_k - r q_k) is linear between consecutive ratios
    // and grows as r decreases; walk down until it exceeds eps.
    double head_p = 0.0;
    double head_q = 0.0;
    double r = 0.0;
    for (std::size_t j = 0; j < atoms.size(); j++) {
        head_p += atoms[j].p;
        head_q += atoms[j].q;
        double next_ratio = j + 1 < atoms.size() ? atoms[j + 1].ratio : 0.0;
        if (head_p - next_ratio * head_q > eps) {
            r = (head_p - eps) / head_q;
            break;
        }
    }
    return std::log2(std::max(1.0, r));
}

std::vector<Atom> single_atoms(const Distribution &p, const Distribution &q, const char *who) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimMismatch, std::string(who) + ": distributions have different sizes");
    }
    std::vector<Atom> atoms;
    atoms.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); k++) {
        atoms.push_back(make_atom(p[k], q[k]));
    }
    return atoms;
}

double type_class_count(std::size_t n, std::size_t alphabet) {
    // C(n + k - 1, k - 1) in floating point; only compared to a limit.
    double count = 1.0;
    for (std::size_t i = 1; i < alphabet; i++) {
        count = count * static_cast<double>(n + i) / static_cast<double>(i);
    }
    return count;
}

// Total mass of the type class with letter counts `counts` under `dist`.
double class_mass(std::span<const double> dist, std::span<const std::size_t> counts, double log_multiplicity) {
    double product = 1.0;
    double log_product = 0.0;
    for (std::size_t k = 0; k < dist.size(); k++) {
        if (counts[k] == 0) {
            continue;
        }
        if (dist[k] == 0.0) {
            return 0.0;
        }
        product *= std::pow(dist[k], static_cast<double>(counts[k]));
        log_product += static_cast<double>(counts[k]) * std::log(dist[k]);
    }
    double mass = std::exp(log_multiplicity) * product;
    if (product == 0.0 || !std::isfinite(mass)) {
        mass = std::exp(log_multiplicity + log_product);
    }
    return mass;
}

}  // namespace

double d_min_eps(const Distribution &p, const Distribution &q, double eps) {
    check_eps(eps, "d_min_eps");
    return d_min_atoms(single_atoms(p, q, "d_min_eps"), eps);
}

double d_max_eps(const Distribution &p, const Distribution &q, double eps) {
    check_eps(eps, "d_max_eps");
    return d_max_atoms(single_atoms(p, q, "d_max_eps"), eps);
}

double relative_entropy_bits(const Distribution &p, const Distribution &q) {
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimMismatch, "relative_entropy_bits: distributions have different sizes");
    }
    double d = 0.0;
    for (std::size_t k = 0; k < p.size(); k++) {
        if (p[k] == 0.0) {
            continue;
        }
        if (q[k] == 0.0) {
            return std::numeric_limits<double>::infinity();
        }
        d += p[k] * std::log2(p[k] / q[k]);
    }
    return std::max(0.0, d);
}

IidRates iid_rate(const Distribution &p, const Distribution &q, double eps, std::size_t n_copies) {
    check_eps(eps, "iid_rate");
    if (p.size() != q.size()) {
        throw Error(ErrorKind::DimMismatch, "iid_rate: distributions have different sizes");
    }
    if (n_copies == 0) {
        throw Error(ErrorKind::InvalidArgument, "iid_rate: n_copies must be >= 1");
    }
    std::size_t k = p.size();
    double classes = type_class_count(n_copies, k);
    if (classes > static_cast<double>(kMaxTypeClasses)) {
        throw Error(ErrorKind::AlphabetTooLarge, "iid_rate: " + std::to_string(classes) +
                                                     " type classes exceed the enumeration limit");
    }

    std::vector<Atom> atoms;
    atoms.reserve(static_cast<std::size_t>(classes));
    std::vector<std::size_t> counts(k, 0);
    double log_n_fact = std::lgamma(static_cast<double>(n_copies) + 1.0);

    // Enumerate compositions of n_copies into k parts, last part implied.
    auto emit = [&]() {
        double log_mult = log_n_fact;
        for (std::size_t c : counts) {
            log_mult -= std::lgamma(static_cast<double>(c) + 1.0);
        }
        atoms.push_back(make_atom(class_mass(p.probs(), counts, log_mult), class_mass(q.probs(), counts, log_mult)));
    };
    auto recurse = [&](auto &self, std::size_t letter, std::size_t remaining) -> void {
        if (letter + 1 == k) {
            counts[letter] = remaining;
            emit();
            return;
        }
        for (std::size_t c = 0; c <= remaining; c++) {
            counts[letter] = c;
            self(self, letter + 1, remaining - c);
        }
    };
    recurse(recurse, 0, n_copies);

    auto n = static_cast<double>(n_copies);
    return IidRates{d_min_atoms(atoms, eps) / n, d_max_atoms(atoms, eps) / n, atoms.size()};
}

ConsistencyWork consistency_work(const DensityMatrix &rho, const Hamiltonian &h, Temperature t, double eps,
                                 std::size_t n_copies) {
    check_eps(eps, "consistency_work");
    auto plan = build_plan(rho, h, t);
    Distribution gibbs = Distribution::normalized(thermal_populations(plan.energies0, t.beta()));
    Distribution rho1 = Distribution::normalized(plan.rotated_populations);
    Distribution eta = Distribution::normalized(plan.target_populations);

    double rotated_energy = 0.0;
    for (std::size_t k = 0; k < plan.energies0.size(); k++) {
        rotated_energy += plan.rotated_populations[k] * plan.energies0[k];
    }
    double rotation_work = average_energy(rho, h) - rotated_energy;
    double rate_min = iid_rate(rho1, gibbs, eps, n_copies).rate_min;
    double rate_max = iid_rate(eta, gibbs, eps, n_copies).rate_max;
    double work = rotation_work + internal::kLn2 * t.kt() * (rate_min - rate_max);
    return ConsistencyWork{work, rotation_work, rate_min, rate_max, 2.0 * eps - eps * eps};
}

}  // namespace coherework
