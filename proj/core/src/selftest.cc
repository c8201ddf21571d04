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

#include "coherework/selftest.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numbers>
#include <random>
#include <string>

#include "coherework/correlations.h"
#include "coherework/errors.h"
#include "coherework/fluctuation.h"
#include "coherework/linalg.h"
#include "coherework/projection.h"
#include "coherework/protocol.h"
#include "coherework/random.h"
#include "coherework/singleshot.h"
#include "coherework/states.h"

namespace coherework::selftest {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char *format, double a) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), format, a);
    return buf;
}

// Collects the first failure and a running worst-case metric.
class Checker {
   public:
    void expect(bool ok, const std::string &what) {
        if (!ok && passed_) {
            passed_ = false;
            failure_ = what;
        }
    }
    void within(double value, double expected, double tol, const std::string &what) {
        double err = std::abs(value - expected);
        worst_ = std::max(worst_, err);
        expect(err <= tol, what + ": got " + fmt("%.12g", value) + ", expected " + fmt("%.12g", expected));
    }
    bool passed() const {
        return passed_;
    }
    double worst() const {
        return worst_;
    }
    std::string detail(const std::string &on_pass) const {
        return passed_ ? on_pass : failure_;
    }

   private:
    bool passed_ = true;
    std::string failure_;
    double worst_ = 0.0;
};

// Independent oracles built directly from eigenvalues and matrix products.

double entropy_of(const ComplexMatrix &m) {
    double s = 0.0;
    for (double x : hermitian_eig(m).eigenvalues) {
        if (x > 0.0) {
            s -= x * std::log(x);
        }
    }
    return s;
}

ComplexMatrix dephase(const ComplexMatrix &rho, const ProjectorSet &p) {
    ComplexMatrix out(rho.rows(), rho.cols());
    for (const auto &projector : p.projectors()) {
        out += projector * rho * projector;
    }
    return out;
}

double energy_of(const ComplexMatrix &rho, const ComplexMatrix &h) {
    return (rho * h).trace().real();
}

double binary_entropy(double x) {
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

// --- shared random instances -------------------------------------------------

double uniform(Rng &rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::size_t uniform_index(Rng &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Hamiltonian random_hamiltonian(Rng &rng, std::size_t d, bool degenerate) {
    if (!degenerate) {
        return Hamiltonian(random_hermitian(rng, d));
    }
    std::vector<double> energies(d);
    for (std::size_t k = 0; k < d; k++) {
        energies[k] = k < 2 ? -0.5 : uniform(rng, -2.0, 2.0);
    }
    return Hamiltonian::from_basis(random_unitary(rng, d), energies);
}

// Coarse-grained projectors onto blocks of columns of a random unitary.
ProjectorSet random_projectors(Rng &rng, std::size_t d, bool rank_one) {
    ComplexMatrix u = random_unitary(rng, d);
    if (rank_one) {
        return ProjectorSet::from_basis(u);
    }
    std::size_t blocks = uniform_index(rng, 1, d);
    std::vector<ComplexMatrix> projectors(blocks, ComplexMatrix(d, d));
    for (std::size_t c = 0; c < d; c++) {
        std::size_t b = c < blocks ? c : uniform_index(rng, 0, blocks - 1);
        auto col = u.column(c);
        projectors[b] += ComplexMatrix::outer(col, col);
    }
    return ProjectorSet(std::move(projectors));
}

struct ProjectionInstance {
    DensityMatrix rho;
    Hamiltonian h;
    ProjectorSet p;
    Temperature t;
};

std::vector<ProjectionInstance> projection_instances() {
    Rng rng(20260101);
    std::vector<ProjectionInstance> out;
    for (std::size_t i = 0; i < 1000; i++) {
        std::size_t d = 2 + i % 5;
        auto rho = random_density_matrix(rng, d);
        auto h = random_hamiltonian(rng, d, i % 4 == 3);
        std::size_t kind = i % 3;
        ProjectorSet p = kind == 0 ? ProjectorSet::from_hamiltonian(h) : random_projectors(rng, d, kind == 1);
        Temperature t(std::exp(uniform(rng, -1.0, 1.0)));
        out.push_back({std::move(rho), std::move(h), std::move(p), t});
    }
    return out;
}

DensityMatrix qubit_example() {
    return bloch_state(0.8, kPi / 3.0);
}

Hamiltonian qubit_hamiltonian() {
    return Hamiltonian::diagonal(std::vector<double>{-1.0, 1.0});
}

// --- criteria ----------------------------------------------------------------

CriterionResult criterion_projection_work() {
    Checker c;
    std::size_t commuting = 0;
    for (const auto &inst : projection_instances()) {
        const auto &rho = inst.rho.matrix();
        ComplexMatrix eta = dephase(rho, inst.p);
        double ds = entropy_of(eta) - entropy_of(rho);
        double du = energy_of(eta, inst.h.matrix()) - energy_of(rho, inst.h.matrix());
        auto w = optimal_projection_work(inst.rho, inst.h, inst.p, inst.t);
        c.within(w.work, ds * inst.t.kt() - du, 1e-9, "work identity");
        c.within(w.entropy_change, ds, 1e-9, "entropy change");
        c.expect(w.entropy_change >= -1e-10, "negative entropy change");
        c.expect(w.first_law_residual() <= 1e-9, "first law residual");

        // The dephased state commutes with every projector in the set.
        auto w0 = optimal_projection_work(DensityMatrix(eta), inst.h, inst.p, inst.t);
        c.within(w0.work, 0.0, 1e-9, "commuting state work");
        commuting++;
    }
    return {1, "projection work identity", c.passed(),
            c.detail("1000 instances + " + std::to_string(commuting) + " commuting, max residual " +
                     fmt("%.1e", c.worst())),
            0, 10};
}

// Extra error from raising populations below the clamp c: each of d
// populations moves by at most c, shifting entropies by about
// c (1 + |ln c|) and energies by c max|E| per level.
double clamp_budget(const ProtocolPlan &plan) {
    std::size_t clamped = 0;
    auto eigs = plan.rho0.eigenvalues();
    for (double x : eigs) {
        clamped += x < plan.purity_clamp;
    }
    for (double x : plan.target_populations) {
        clamped += x <= plan.purity_clamp;
    }
    if (clamped == 0) {
        return 0.0;
    }
    double c = plan.purity_clamp;
    double d = static_cast<double>(eigs.size());
    double scale = std::max(std::abs(plan.h0.min_energy()), std::abs(plan.h0.max_energy()));
    return 4.0 * d * c * ((1.0 + std::abs(std::log(c))) * plan.temperature.kt() + scale);
}

CriterionResult criterion_three_step() {
    Checker c;
    for (const auto &inst : projection_instances()) {
        auto plan = build_plan(inst.rho, inst.h, inst.t, PlanOptions{1e-9, Pairing::DescendingPopulation});
        validate_plan(plan);
        auto ledger = exact_step_works(plan);
        auto total = ledger.totals();
        auto w = optimal_projection_work(inst.rho, inst.h, ProjectorSet::from_hamiltonian(inst.h), inst.t);
        c.within(total.work, w.work, 1e-9 + clamp_budget(plan), "three-step total");
        for (const auto &e : ledger.entries) {
            c.expect(e.first_law_residual() <= 1e-9, "first law in step " + e.label);
        }
    }
    return {2, "three-step protocol attains the optimum", c.passed(),
            c.detail("1000 instances, max |total - optimum| " + fmt("%.1e", c.worst())), 0, 10};
}

CriterionResult criterion_quasi_static() {
    Checker c;
    auto rho = qubit_example();
    auto h = qubit_hamiltonian();
    Temperature t(1.0);
    double exact = binary_entropy(0.65) - binary_entropy(0.8);
    double w_opt = optimal_projection_work(rho, h, ProjectorSet::from_hamiltonian(h), t).work;
    c.within(w_opt, exact, 1e-12, "qubit optimum");

    auto plan = build_plan(rho, h, t);
    std::vector<double> xs;
    std::vector<double> ys;
    double last_err = 0.0;
    for (std::size_t steps : {100u, 1000u, 10000u, 100000u}) {
        last_err = std::abs(simulate(plan, steps).totals().work - exact);
        xs.push_back(std::log10(static_cast<double>(steps)));
        ys.push_back(std::log10(last_err));
    }
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        mx += xs[i] / 4.0;
        my += ys[i] / 4.0;
    }
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < xs.size(); i++) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    double slope = sxy / sxx;
    c.expect(std::abs(slope + 1.0) <= 0.1, "log-log slope " + fmt("%.4f", slope));
    c.expect(last_err < 1e-4, "error at 1e5 steps " + fmt("%.3e", last_err));
    return {3, "quasi-static convergence", c.passed(),
            c.detail("slope " + fmt("%.4f", slope) + ", error at 1e5 steps " + fmt("%.3e", last_err)), 0, 20};
}

CriterionResult criterion_entropy_bound() {
    Checker c;
    Rng rng(20260104);
    double tightest = 1e300;
    for (std::size_t i = 0; i < 1000; i++) {
        std::size_t d = 2 + i % 5;
        auto rho = i % 7 == 0 ? random_pure_state(rng, d) : random_density_matrix(rng, d);
        auto p = random_projectors(rng, d, true);
        auto b = entropy_change_bound(rho, p);
        double ds = entropy_of(dephase(rho.matrix(), p)) - entropy_of(rho.matrix());
        c.expect(b.bound <= ds + 1e-12, "bound exceeds entropy change");
        c.expect(b.delta_a >= -1e-12 && b.delta_a <= 1.0 + 1e-12, "delta_a outside [0, 1]");
        tightest = std::min(tightest, ds - b.bound);
    }
    for (std::size_t i = 0; i < 200; i++) {
        double a = uniform(rng, 0.0, 1.0);
        double theta = uniform(rng, 0.0, kPi);
        double phi = uniform(rng, 0.0, 2.0 * kPi);
        auto b = entropy_change_bound(bloch_state(a, theta, phi), ProjectorSet::computational(2));
        double s = 2.0 * a - 1.0;
        double closed = 0.25 * s * s * std::sin(theta) * std::sin(theta);
        c.within(b.bound, closed, 1e-12, "qubit closed form");
    }
    auto plus = bloch_state(1.0, kPi / 2.0);
    auto b = entropy_change_bound(plus, ProjectorSet::computational(2));
    c.within(b.bound, 0.25, 1e-12, "mutually unbiased bound");
    double ds = entropy_of(dephase(plus.matrix(), ProjectorSet::computational(2))) - entropy_of(plus.matrix());
    c.within(ds, std::numbers::ln2, 1e-12, "mutually unbiased entropy change");
    return {4, "entropy-change lower bound", c.passed(),
            c.detail("1000 instances, min slack " + fmt("%.2e", tightest) + ", qubit form exact"), 0, 10};
}

CriterionResult criterion_jarzynski() {
    Checker c;
    Rng rng(20260105);
    for (std::size_t i = 0; i < 100; i++) {
        std::size_t d = 2 + i % 5;
        auto h0 = random_hamiltonian(rng, d, i % 5 == 4);
        auto ht = random_hamiltonian(rng, d, i % 7 == 6);
        auto v = random_unitary(rng, d);
        Temperature t(std::exp(uniform(rng, -1.0, 0.7)));
        auto table = transition_table(h0, ht, v, t);

        double total = 0.0;
        for (double x : table.probs) {
            c.expect(x >= 0.0, "negative transition probability");
            total += x;
        }
        c.within(total, 1.0, 1e-10, "table normalization");
        auto cols = table.column_marginals();
        auto thermal = thermal_populations(h0.spectrum().eigenvalues, t.beta());
        for (std::size_t n = 0; n < h0.levels().size(); n++) {
            double w = 0.0;
            for (std::size_t j : h0.levels()[n].indices) {
                w += thermal[j];
            }
            c.within(cols[n], w, 1e-10, "column marginal");
        }

        // Z_tau / Z_0 by direct summation.
        double z0 = 0.0;
        double zt = 0.0;
        for (double e : h0.spectrum().eigenvalues) {
            z0 += std::exp(-t.beta() * e);
        }
        for (double e : ht.spectrum().eigenvalues) {
            zt += std::exp(-t.beta() * e);
        }
        double target = zt / z0;
        c.within(jarzynski_average(table) / target, 1.0, 1e-10, "Jarzynski identity");

        ComplexMatrix rho0 = gibbs_state(h0, t).matrix();
        ComplexMatrix rho_t = v * rho0 * v.adjoint();
        double state_side = energy_of(rho0, h0.matrix()) - energy_of(rho_t, ht.matrix());
        c.within(average_unitary_work(table), state_side, 1e-10, "average unitary work");

        auto heat = projection_heat(DensityMatrix(rho_t), ht, t);
        c.expect(heat.heat >= -1e-10, "negative projection heat");
        c.expect(heat.extra_work == heat.heat, "extra work differs from heat");
        ComplexMatrix comm = rho_t * ht.matrix() - ht.matrix() * rho_t;
        bool commutes = hs_norm(comm) <= 1e-9;
        c.expect(commutes == (heat.heat <= 1e-10), "heat vanishes iff commuting");

        auto diag_heat = projection_heat(gibbs_state(ht, t), ht, t);
        c.within(diag_heat.heat, 0.0, 1e-10, "commuting projection heat");
    }
    return {5, "Jarzynski identity and unitary work", c.passed(),
            c.detail("100 instances, max residual " + fmt("%.1e", c.worst())), 0, 10};
}

bool same_stats(const TrajectoryStats &a, const TrajectoryStats &b) {
    auto bits_equal = [](double x, double y) { return std::memcmp(&x, &y, sizeof(double)) == 0; };
    bool same = a.cell_counts == b.cell_counts && bits_equal(a.mean_exp_beta_w, b.mean_exp_beta_w) &&
                bits_equal(a.stderr_exp_beta_w, b.stderr_exp_beta_w) && bits_equal(a.mean_work, b.mean_work) &&
                bits_equal(a.stderr_work, b.stderr_work) && a.histogram.size() == b.histogram.size();
    for (std::size_t i = 0; same && i < a.histogram.size(); i++) {
        same = bits_equal(a.histogram[i].delta_e, b.histogram[i].delta_e) &&
               a.histogram[i].count == b.histogram[i].count;
    }
    return same;
}

CriterionResult criterion_monte_carlo() {
    Checker c;
    Rng rng(20260106);
    double worst_z = 0.0;
    for (std::uint64_t i = 0; i < 10; i++) {
        std::size_t d = 2 + i % 3;
        auto h0 = random_hamiltonian(rng, d, false);
        auto ht = random_hamiltonian(rng, d, false);
        auto v = random_unitary(rng, d);
        Temperature t(std::exp(uniform(rng, -1.0, 0.5)));
        auto table = transition_table(h0, ht, v, t);
        double exact = jarzynski_average(table);
        std::uint64_t seed = 1000 + i;
        auto first = sample_trajectories(table, 1'000'000, seed);
        auto again = sample_trajectories(table, 1'000'000, seed, 1);
        double z = std::abs(first.mean_exp_beta_w - exact) / first.stderr_exp_beta_w;
        worst_z = std::max(worst_z, z);
        c.expect(z < 5.0, "estimate " + fmt("%.3f", z) + " standard errors from exact");
        c.expect(same_stats(first, again), "rerun is not bit-identical");
    }
    return {6, "Monte-Carlo soundness", c.passed(),
            c.detail("10 instances, worst deviation " + fmt("%.2f", worst_z) + " standard errors"), 0, 30};
}

// --- single-shot oracles ---

// Minimum q(T) over vertices of the test polytope: a subset plus at most one
// fractional outcome.
double d_min_vertex_oracle(const std::vector<double> &p, const std::vector<double> &q, double eps) {
    std::size_t d = p.size();
    double best = 1e300;
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); mask++) {
        double pa = 0.0;
        double qa = 0.0;
        for (std::size_t k = 0; k < d; k++) {
            if (mask >> k & 1) {
                pa += p[k];
                qa += q[k];
            }
        }
        if (pa >= 1.0 - eps - 1e-15) {
            best = std::min(best, qa);
        }
        for (std::size_t j = 0; j < d; j++) {
            if (mask >> j & 1 || p[j] <= 0.0) {
                continue;
            }
            double need = 1.0 - eps - pa;
            if (need > 0.0 && need <= p[j]) {
                best = std::min(best, qa + q[j] * need / p[j]);
            }
        }
    }
    return -std::log2(best);
}

// max over subsets A of p(A) - r q(A).
double shaved_mass(const std::vector<double> &p, const std::vector<double> &q, double r) {
    double best = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << p.size()); mask++) {
        double s = 0.0;
        for (std::size_t k = 0; k < p.size(); k++) {
            if (mask >> k & 1) {
                s += p[k] - r * q[k];
            }
        }
        best = std::max(best, s);
    }
    return best;
}

double d_max_subset_oracle(const std::vector<double> &p, const std::vector<double> &q, double eps) {
    double lo = 1.0;
    double hi = 1.0;
    for (std::size_t k = 0; k < p.size(); k++) {
        hi = std::max(hi, p[k] / q[k]);
    }
    if (shaved_mass(p, q, lo) <= eps) {
        return 0.0;
    }
    for (int it = 0; it < 200; it++) {
        double mid = 0.5 * (lo + hi);
        (shaved_mass(p, q, mid) <= eps ? hi : lo) = mid;
    }
    return std::log2(hi);
}

// Grid over the 1-simplex at resolution 1e-4.
double d_max_grid_oracle(const std::vector<double> &p, const std::vector<double> &q, double eps) {
    double best = 1e300;
    for (int i = 0; i <= 10000; i++) {
        double x = i * 1e-4;
        if (std::abs(x - p[0]) > eps + 1e-12) {
            continue;
        }
        best = std::min(best, std::max(std::log2(x / q[0]), std::log2((1.0 - x) / q[1])));
    }
    return best;
}

std::vector<double> random_simplex(Rng &rng, std::size_t d, double floor, bool allow_zero) {
    std::vector<double> w(d);
    double sum = 0.0;
    for (auto &x : w) {
        x = std::exponential_distribution<double>(1.0)(rng) + floor;
        sum += x;
    }
    for (auto &x : w) {
        x /= sum;
    }
    if (allow_zero && d > 2) {
        double dropped = w[d - 1];
        w[d - 1] = 0.0;
        for (std::size_t k = 0; k + 1 < d; k++) {
            w[k] /= 1.0 - dropped;
        }
    }
    return w;
}

double kl_bits(const std::vector<double> &p, const std::vector<double> &q) {
    double s = 0.0;
    for (std::size_t k = 0; k < p.size(); k++) {
        if (p[k] > 0.0) {
            s += p[k] * std::log2(p[k] / q[k]);
        }
    }
    return s;
}

CriterionResult criterion_single_shot() {
    Checker c;
    auto rho = qubit_example();
    auto h = qubit_hamiltonian();
    Temperature t(1.0);
    double w_opt = binary_entropy(0.65) - binary_entropy(0.8);
    double prev = 1e300;
    std::string errors;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
        double err = std::abs(consistency_work(rho, h, t, 0.05, n).work - w_opt);
        c.expect(err < prev, "error did not decrease at n = " + std::to_string(n));
        errors += (errors.empty() ? "" : " ") + fmt("%.4f", err);
        prev = err;
    }

    // eps = 0, n = 1 anchor with both entropies evaluated from their
    // definitions: -log2 q(supp p) and max_k log2(p_k / q_k).
    {
        auto plan = build_plan(rho, h, t);
        auto gibbs = thermal_populations(plan.energies0, t.beta());
        double q_support = 0.0;
        for (std::size_t k = 0; k < gibbs.size(); k++) {
            q_support += plan.rotated_populations[k] > 0.0 ? gibbs[k] : 0.0;
        }
        double max_ratio = 0.0;
        for (std::size_t k = 0; k < gibbs.size(); k++) {
            max_ratio = std::max(max_ratio, plan.target_populations[k] / gibbs[k]);
        }
        double rotated_energy = plan.rotated_populations[0] * -1.0 + plan.rotated_populations[1] * 1.0;
        double w_a = energy_of(rho.matrix(), h.matrix()) - rotated_energy;
        double anchor = w_a + std::numbers::ln2 / t.beta() * (-std::log2(q_support) - std::log2(max_ratio));
        c.within(consistency_work(rho, h, t, 0.0, 1).work, anchor, 1e-12, "eps = 0, n = 1 anchor");
    }

    Rng rng(20260107);
    for (std::size_t i = 0; i < 500; i++) {
        std::size_t d = 2 + i % 5;
        auto p = random_simplex(rng, d, 0.0, i % 4 == 0);
        auto q = random_simplex(rng, d, 0.05, false);
        Distribution dp(p);
        Distribution dq(q);
        double kl = kl_bits(p, q);
        c.expect(d_min_eps(dp, dq, 0.0) <= kl + 1e-12, "d_min above relative entropy");
        c.expect(kl <= d_max_eps(dp, dq, 0.0) + 1e-12, "d_max below relative entropy");
    }

    for (std::size_t i = 0; i < 300; i++) {
        std::size_t d = 2 + i % 3;
        auto p = random_simplex(rng, d, 0.0, i % 5 == 0);
        auto q = random_simplex(rng, d, 0.3, false);
        double eps = uniform(rng, 0.0, 0.3);
        Distribution dp(p);
        Distribution dq(q);
        c.within(d_min_eps(dp, dq, eps), d_min_vertex_oracle(p, q, eps), 1e-9, "d_min vs vertex enumeration");
        c.within(d_max_eps(dp, dq, eps), d_max_subset_oracle(p, q, eps), 1e-9, "d_max vs subset search");
        if (d == 2) {
            double grid = d_max_grid_oracle(p, q, eps);
            double greedy = d_max_eps(dp, dq, eps);
            c.expect(greedy <= grid + 1e-12, "d_max above grid minimum");
            // A 1e-4 step in p_0 moves log2(x / q) by at most 1e-4 / (x ln 2), x = q 2^D.
            double step = 1e-4 / (std::numbers::ln2 * std::min(q[0], q[1]) * std::exp2(greedy));
            c.expect(grid - greedy <= step + 1e-12, "d_max differs from grid by more than one grid step");
        }
    }
    return {7, "single-shot consistency", c.passed(), c.detail("errors n=8..64: " + errors), 0, 60};
}

CriterionResult criterion_correlations() {
    Checker c;
    Rng rng(20260108);
    for (std::size_t i = 0; i < 500; i++) {
        std::size_t da = 2 + i % 2;
        std::size_t rank = i % 3 == 0 ? 1 + i % 4 : 0;
        BipartiteState state(random_density_matrix(rng, 2 * da, std::min<std::size_t>(rank, 2 * da)), 2, da);
        auto p = random_projectors(rng, 2, true);
        auto lemma = verify_lemma1(state, p);
        c.expect(lemma.holds, "S(rho_SA) below conditional ancilla entropy sum");

        double delta = delta_correlation(state, p);
        auto rho_s = state.system();
        double s_s = entropy_of(rho_s.matrix());
        c.expect(delta >= -1e-10, "negative correlation measure");
        c.expect(delta <= s_s + 1e-10, "correlation measure above S(rho_S)");

        auto eta = local_project(state, p);
        double lhs = entropy_of(eta.rho().matrix()) - entropy_of(state.rho().matrix());
        double rhs = entropy_of(dephase(rho_s.matrix(), p)) - s_s + delta;
        c.within(lhs, rhs, 1e-9, "entropy decomposition");
        c.expect(hs_norm(eta.ancilla().matrix() - state.ancilla().matrix()) <= 1e-10, "ancilla marginal changed");

        auto h_s = random_hamiltonian(rng, 2, false);
        Temperature t(std::exp(uniform(rng, -1.0, 1.0)));
        auto global = global_optimal_work(state, h_s, p, t);
        auto local = optimal_projection_work(rho_s, h_s, p, t);
        c.within(global.work, local.work + delta * t.kt(), 1e-9, "global work decomposition");

        auto product = BipartiteState::product(random_density_matrix(rng, 2), random_density_matrix(rng, da));
        c.within(delta_correlation(product, p), 0.0, 1e-9, "product state");
        auto pure = BipartiteState::purification(rho_s);
        c.within(delta_correlation(pure, p), s_s, 1e-9, "purification");
    }

    auto rho_s = qubit_example();
    auto h = qubit_hamiltonian();
    auto p = ProjectorSet::from_hamiltonian(h);
    Temperature t(1.0);
    double best = global_optimal_work(BipartiteState::purification(rho_s), h, p, t).work;
    c.within(best, binary_entropy(0.65), 1e-12, "purification work");
    double runner_up = -1e300;
    for (std::size_t i = 0; i < 200; i++) {
        auto sample = random_extension(rng, rho_s, 2, 2 + i % 2);
        c.within(hs_norm(sample.system().matrix() - rho_s.matrix()), 0.0, 1e-10, "fixed marginal");
        double w = global_optimal_work(sample, h, p, t).work;
        c.expect(w <= best + 1e-8, "sample beats the purification");
        runner_up = std::max(runner_up, w);
    }
    return {8, "correlation-assisted work", c.passed(),
            c.detail("500 instances; purification " + fmt("%.6f", best) + " vs best sample " +
                     fmt("%.6f", runner_up)),
            0, 30};
}

CriterionResult criterion_fixed_energy() {
    Checker c;
    Rng rng(20260109);
    auto h = qubit_hamiltonian();
    auto p = ProjectorSet::from_hamiltonian(h);
    for (std::size_t i = 0; i < 50; i++) {
        auto rho = i == 0 ? qubit_example() : random_density_matrix(rng, 2);
        Temperature t(i == 0 ? 1.0 : std::exp(uniform(rng, -1.0, 1.0)));
        auto m = max_work_fixed_energy(rho, h, t);
        c.within(m.work, optimal_projection_work(rho, h, p, t).work, 1e-9, "qubit coincidence");
        c.expect(hs_norm(m.sigma.matrix() - project(rho, p).matrix()) <= 1e-8, "qubit sigma differs from eta");
    }

    auto h3 = Hamiltonian::diagonal(std::vector<double>{-1.0, 0.0, 1.0});
    auto p3 = ProjectorSet::from_hamiltonian(h3);
    Temperature t(1.0);
    auto rho3 = random_density_matrix(rng, 3);
    auto m = max_work_fixed_energy(rho3, h3, t);
    double w_proj = optimal_projection_work(rho3, h3, p3, t).work;
    double gap = m.work - w_proj;
    double dist = hs_norm(m.sigma.matrix() - project(rho3, p3).matrix());
    c.expect(dist > 1e-6, "qutrit sigma equals eta");
    c.expect(gap > 1e-6, "qutrit maximum work does not exceed projection work");
    return {9, "maximum work at fixed energy", c.passed(),
            c.detail("qubit coincidence to " + fmt("%.1e", c.worst()) + ", qutrit margin " + fmt("%.6f", gap)), 0,
            5};
}

using CriterionFn = CriterionResult (*)();

constexpr CriterionFn kCriteria[] = {
    criterion_projection_work, criterion_three_step, criterion_quasi_static,
    criterion_entropy_bound,   criterion_jarzynski,  criterion_monte_carlo,
    criterion_single_shot,     criterion_correlations, criterion_fixed_energy,
};

constexpr double kTotalBudgetSeconds = 180.0;

}  // namespace

CriterionResult run_criterion(int id) {
    if (id < 1 || id > 9) {
        throw Error(ErrorKind::InvalidArgument, "run_criterion: id must be in 1..9");
    }
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
        r = kCriteria[id - 1]();
    } catch (const Error &e) {
        r = {id, "criterion " + std::to_string(id), false,
             std::string("unexpected ") + std::string(error_kind_name(e.kind())) + ": " + e.what(), 0, 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
        r.passed = false;
        r.detail = "over runtime budget of " + fmt("%.0f", r.budget_seconds) + " s";
    }
    return r;
}

std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult &)> &on_result) {
    std::vector<CriterionResult> results;
    double total = 0.0;
    for (int id = 1; id <= 9; id++) {
        results.push_back(run_criterion(id));
        total += results.back().seconds;
        if (on_result) {
            on_result(results.back());
        }
    }
    int failed = 0;
    for (const auto &r : results) {
        failed += !r.passed;
    }
    CriterionResult agg{10, "aggregate", failed == 0 && total <= kTotalBudgetSeconds, "", total,
                        kTotalBudgetSeconds};
    if (failed != 0) {
        agg.detail = std::to_string(failed) + " of 9 criteria failed";
    } else if (total > kTotalBudgetSeconds) {
        agg.detail = "over runtime budget of " + fmt("%.0f", kTotalBudgetSeconds) + " s";
    } else {
        agg.detail = "criteria 1-9 passed";
    }
    results.push_back(agg);
    if (on_result) {
        on_result(results.back());
    }
    return results;
}

std::string summary_line(const CriterionResult &r) {
    char id[8];
    std::snprintf(id, sizeof(id), "%2d", r.id);
    return std::string(r.passed ? "PASS " : "FAIL ") + id + "  " + r.title + ": " + r.detail;
}

bool all_passed(const std::vector<CriterionResult> &results) {
    return std::all_of(results.begin(), results.end(), [](const CriterionResult &r) { return r.passed; });
}

}  // namespace coherework::selftest
