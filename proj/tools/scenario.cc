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

#include "scenario.h"

#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <vector>

#include "coherework/correlations.h"
#include "coherework/errors.h"
#include "coherework/fluctuation.h"
#include "coherework/projection.h"
#include "coherework/protocol.h"
#include "coherework/random.h"
#include "coherework/singleshot.h"

namespace coherework::cli {

namespace {

// Read-only view of one scenario value with its path for error messages.
class Node {
   public:
    Node(const Json &j, std::string path) : j_(&j), path_(std::move(path)) {
    }

    const std::string &path() const {
        return path_;
    }
    const Json &raw() const {
        return *j_;
    }
    [[noreturn]] void fail(const std::string &message) const {
        throw SchemaError(path_.empty() ? "<root>" : path_, message);
    }

    bool has(std::string_view key) const {
        return j_->is_object() && j_->contains(key);
    }
    Node at(std::string_view key) const {
        require_object();
        if (!j_->contains(key)) {
            Node(*j_, join(key)).fail("required field is missing");
        }
        return Node((*j_)[std::string(key)], join(key));
    }
    std::optional<Node> get(std::string_view key) const {
        require_object();
        if (!j_->contains(key)) {
            return std::nullopt;
        }
        return Node((*j_)[std::string(key)], join(key));
    }
    Node operator[](std::size_t i) const {
        return Node((*j_)[i], path_ + "[" + std::to_string(i) + "]");
    }

    void require_object() const {
        if (!j_->is_object()) {
            fail("expected an object");
        }
    }
    void allow_only(std::initializer_list<std::string_view> keys) const {
        require_object();
        for (const auto &item : j_->items()) {
            bool known = false;
            for (auto k : keys) {
                known = known || item.key() == k;
            }
            if (!known) {
                Node(item.value(), join(item.key())).fail("unknown field");
            }
        }
    }

    double number() const {
        if (!j_->is_number()) {
            fail("expected a number");
        }
        double x = j_->get<double>();
        if (!std::isfinite(x)) {
            fail("expected a finite number");
        }
        return x;
    }
    double positive() const {
        double x = number();
        if (!(x > 0.0)) {
            fail("must be > 0");
        }
        return x;
    }
    std::uint64_t unsigned_integer(std::uint64_t min = 0, std::uint64_t max = UINT64_MAX) const {
        if (!j_->is_number_integer() || (j_->is_number_integer() && !j_->is_number_unsigned() && j_->get<std::int64_t>() < 0)) {
            fail("expected a nonnegative integer");
        }
        auto x = j_->get<std::uint64_t>();
        if (x < min || x > max) {
            fail("must lie in [" + std::to_string(min) + ", " + std::to_string(max) + "]");
        }
        return x;
    }
    std::string string() const {
        if (!j_->is_string()) {
            fail("expected a string");
        }
        return j_->get<std::string>();
    }
    bool boolean() const {
        if (!j_->is_boolean()) {
            fail("expected a boolean");
        }
        return j_->get<bool>();
    }
    std::size_t array_size(std::size_t min = 0) const {
        if (!j_->is_array()) {
            fail("expected an array");
        }
        if (j_->size() < min) {
            fail("expected at least " + std::to_string(min) + " entries");
        }
        return j_->size();
    }

    Complex complex() const {
        if (j_->is_number()) {
            return {number(), 0.0};
        }
        if (!j_->is_array() || j_->size() != 2) {
            fail("expected a number or a [re, im] pair");
        }
        return {(*this)[0].number(), (*this)[1].number()};
    }
    std::vector<double> reals(std::size_t min = 1) const {
        std::vector<double> out(array_size(min));
        for (std::size_t i = 0; i < out.size(); i++) {
            out[i] = (*this)[i].number();
        }
        return out;
    }
    std::vector<Complex> complexes(std::size_t min = 1) const {
        std::vector<Complex> out(array_size(min));
        for (std::size_t i = 0; i < out.size(); i++) {
            out[i] = (*this)[i].complex();
        }
        return out;
    }
    ComplexMatrix matrix() const {
        std::size_t rows = array_size(1);
        std::size_t cols = (*this)[0].array_size(1);
        ComplexMatrix m(rows, cols);
        for (std::size_t r = 0; r < rows; r++) {
            Node row = (*this)[r];
            if (row.array_size() != cols) {
                row.fail("rows must all have " + std::to_string(cols) + " entries");
            }
            for (std::size_t c = 0; c < cols; c++) {
                m(r, c) = row[c].complex();
            }
        }
        if (rows != cols) {
            fail("matrix must be square");
        }
        return m;
    }
    std::string choice(std::initializer_list<std::string_view> options) const {
        std::string s = string();
        for (auto o : options) {
            if (s == o) {
                return s;
            }
        }
        std::string list;
        for (auto o : options) {
            list += (list.empty() ? "" : ", ") + std::string(o);
        }
        fail("must be one of: " + list);
    }

   private:
    std::string join(std::string_view key) const {
        return path_.empty() ? std::string(key) : path_ + "." + std::string(key);
    }

    const Json *j_;
    std::string path_;
};

constexpr std::uint64_t kMaxDim = 64;
constexpr std::uint64_t kMaxSteps = 10'000'000;
constexpr std::uint64_t kMaxSamples = 100'000'000;

Json complex_json(Complex z) {
    return Json::array({z.real(), z.imag()});
}

Json matrix_json(const ComplexMatrix &m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(complex_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Json vector_json(std::span<const double> v) {
    return Json(std::vector<double>(v.begin(), v.end()));
}

struct Context {
    std::vector<std::uint64_t> seeds;
};

Hamiltonian parse_hamiltonian(const Node &n, Context &ctx) {
    std::string type = n.at("type").choice({"diagonal", "matrix", "random"});
    if (type == "diagonal") {
        n.allow_only({"type", "energies"});
        return Hamiltonian::diagonal(n.at("energies").reals());
    }
    if (type == "matrix") {
        n.allow_only({"type", "entries"});
        return Hamiltonian(n.at("entries").matrix());
    }
    n.allow_only({"type", "dim", "seed"});
    std::size_t d = n.at("dim").unsigned_integer(1, kMaxDim);
    std::uint64_t seed = n.at("seed").unsigned_integer();
    ctx.seeds.push_back(seed);
    Rng rng(seed);
    return Hamiltonian(random_hermitian(rng, d));
}

// `h` and `t` feed the "gibbs" constructor.
DensityMatrix parse_state(const Node &n, const Hamiltonian *h, std::optional<Temperature> t, Context &ctx) {
    std::string type = n.at("type").choice({"matrix", "pure", "bloch", "gibbs", "random", "maximally_mixed"});
    if (type == "matrix") {
        n.allow_only({"type", "entries"});
        return DensityMatrix(n.at("entries").matrix());
    }
    if (type == "pure") {
        n.allow_only({"type", "amplitudes"});
        auto amps = n.at("amplitudes").complexes();
        double norm = 0.0;
        for (auto z : amps) {
            norm += std::norm(z);
        }
        if (std::abs(norm - 1.0) > 1e-10) {
            throw Error(ErrorKind::InvalidState, "DensityMatrix: pure state amplitudes have norm^2 " +
                                                     std::to_string(norm));
        }
        return DensityMatrix::pure(amps);
    }
    if (type == "bloch") {
        n.allow_only({"type", "a", "theta", "phi"});
        double a = n.at("a").number();
        if (a < 0.0 || a > 1.0) {
            n.at("a").fail("must lie in [0, 1]");
        }
        double phi = n.has("phi") ? n.at("phi").number() : 0.0;
        return bloch_state(a, n.at("theta").number(), phi);
    }
    if (type == "gibbs") {
        n.allow_only({"type"});
        if (h == nullptr || !t) {
            n.fail("gibbs state needs a hamiltonian and beta in the same scenario");
        }
        return gibbs_state(*h, *t);
    }
    if (type == "maximally_mixed") {
        n.allow_only({"type", "dim"});
        return DensityMatrix::maximally_mixed(n.at("dim").unsigned_integer(1, kMaxDim));
    }
    n.allow_only({"type", "dim", "seed", "rank"});
    std::size_t d = n.at("dim").unsigned_integer(1, kMaxDim);
    std::size_t rank = n.has("rank") ? n.at("rank").unsigned_integer(0, d) : 0;
    std::uint64_t seed = n.at("seed").unsigned_integer();
    ctx.seeds.push_back(seed);
    Rng rng(seed);
    return random_density_matrix(rng, d, rank);
}

ProjectorSet parse_projectors(const std::optional<Node> &n, const Hamiltonian &h) {
    if (!n) {
        return ProjectorSet::from_hamiltonian(h);
    }
    std::string type = n->at("type").choice({"energy", "computational", "basis", "projectors"});
    if (type == "energy") {
        n->allow_only({"type"});
        return ProjectorSet::from_hamiltonian(h);
    }
    if (type == "computational") {
        n->allow_only({"type"});
        return ProjectorSet::computational(h.dim());
    }
    if (type == "basis") {
        n->allow_only({"type", "matrix"});
        return ProjectorSet::from_basis(n->at("matrix").matrix());
    }
    n->allow_only({"type", "matrices"});
    Node list = n->at("matrices");
    std::vector<ComplexMatrix> projectors;
    for (std::size_t i = 0; i < list.array_size(1); i++) {
        projectors.push_back(list[i].matrix());
    }
    return ProjectorSet(std::move(projectors));
}

ComplexMatrix parse_unitary(const Node &n, std::size_t dim, Context &ctx) {
    std::string type = n.at("type").choice({"identity", "matrix", "random"});
    if (type == "identity") {
        n.allow_only({"type"});
        return ComplexMatrix::identity(dim);
    }
    if (type == "matrix") {
        n.allow_only({"type", "entries"});
        return n.at("entries").matrix();
    }
    n.allow_only({"type", "seed"});
    std::uint64_t seed = n.at("seed").unsigned_integer();
    ctx.seeds.push_back(seed);
    Rng rng(seed);
    return random_unitary(rng, dim);
}

Temperature parse_beta(const Node &root) {
    return Temperature(root.at("beta").positive());
}

void require_dims(const Node &n, std::size_t got, std::size_t want) {
    if (got != want) {
        throw Error(ErrorKind::DimMismatch, n.path() + ": dimension " + std::to_string(got) +
                                                " does not match the Hamiltonian dimension " + std::to_string(want));
    }
}

Json work_json(const WorkReport &w) {
    return {{"work", w.work},
            {"entropy_change", w.entropy_change},
            {"energy_change", w.energy_change},
            {"heat_absorbed", w.heat_absorbed},
            {"first_law_residual", w.first_law_residual()}};
}

Json ledger_json(const WorkLedger &ledger) {
    Json entries = Json::array();
    auto entry = [](const LedgerEntry &e) {
        return Json{{"label", e.label},
                    {"work", e.work},
                    {"heat_absorbed", e.heat_absorbed},
                    {"energy_change", e.energy_change},
                    {"entropy_change", e.entropy_change},
                    {"first_law_residual", e.first_law_residual()}};
    };
    for (const auto &e : ledger.entries) {
        entries.push_back(entry(e));
    }
    return {{"entries", entries},
            {"totals", entry(ledger.totals())},
            {"purity_clamp", ledger.purity_clamp},
            {"quasi_static_steps", ledger.quasi_static_steps}};
}

Json series_json(std::string name, std::string x_label, std::string y_label, std::vector<double> x,
                 std::vector<double> y) {
    return {{"name", std::move(name)},
            {"x_label", std::move(x_label)},
            {"y_label", std::move(y_label)},
            {"x", std::move(x)},
            {"y", std::move(y)}};
}

struct Output {
    Json results = Json::object();
    Json series = Json::array();
};

Output run_project(const Node &root, Context &ctx) {
    root.allow_only({"kind", "state", "hamiltonian", "beta", "projectors"});
    auto t = parse_beta(root);
    auto h = parse_hamiltonian(root.at("hamiltonian"), ctx);
    auto rho = parse_state(root.at("state"), &h, t, ctx);
    require_dims(root.at("state"), rho.dim(), h.dim());
    auto p = parse_projectors(root.get("projectors"), h);
    if (auto n = root.get("projectors")) {
        require_dims(*n, p.dim(), h.dim());
    }

    Output out;
    auto w = optimal_projection_work(rho, h, p, t);
    out.results = work_json(w);
    out.results["eta"] = matrix_json(project(rho, p).matrix());
    if (p.is_rank_one()) {
        auto b = entropy_change_bound(rho, p);
        out.results["entropy_bound"] = {
            {"bound", b.bound}, {"delta_a", b.delta_a}, {"purity_distance_sq", b.purity_distance_sq}};
    }
    double u = average_energy(rho, h);
    double span = h.max_energy() - h.min_energy();
    if (u > h.min_energy() + 1e-9 * span && u < h.max_energy() - 1e-9 * span) {
        auto m = max_work_fixed_energy(rho, h, t);
        out.results["max_work_fixed_energy"] = {{"lambda_star", m.lambda_star}, {"work", m.work}};
    }
    return out;
}

Output run_protocol(const Node &root, Context &ctx) {
    root.allow_only({"kind", "state", "hamiltonian", "beta", "steps", "purity_clamp", "pairing"});
    auto t = parse_beta(root);
    auto h = parse_hamiltonian(root.at("hamiltonian"), ctx);
    auto rho = parse_state(root.at("state"), &h, t, ctx);
    require_dims(root.at("state"), rho.dim(), h.dim());

    PlanOptions options;
    if (auto n = root.get("purity_clamp")) {
        options.purity_clamp = n->number();
        if (options.purity_clamp < 0.0 || options.purity_clamp > kMaxPurityClamp) {
            n->fail("must lie in [0, 0.001]");
        }
    }
    if (auto n = root.get("pairing")) {
        options.pairing = n->choice({"descending_population", "index_order"}) == "index_order"
                              ? Pairing::IndexOrder
                              : Pairing::DescendingPopulation;
    }
    std::vector<std::size_t> steps{10, 100, 1000};
    if (auto n = root.get("steps")) {
        steps.clear();
        for (std::size_t i = 0; i < n->array_size(1); i++) {
            steps.push_back((*n)[i].unsigned_integer(1, kMaxSteps));
        }
    }

    auto plan = build_plan(rho, h, t, options);
    validate_plan(plan);
    double optimum = optimal_projection_work(rho, h, ProjectorSet::from_hamiltonian(h), t).work;

    Output out;
    out.results["optimal_work"] = optimum;
    out.results["exact"] = ledger_json(exact_step_works(plan));
    out.results["pairing"] = options.pairing == Pairing::IndexOrder ? "index_order" : "descending_population";
    out.results["h1"] = vector_json(plan.energies1);
    out.results["h2"] = vector_json(plan.energies2);
    out.results["rotated_populations"] = vector_json(plan.rotated_populations);
    out.results["target_populations"] = vector_json(plan.target_populations);
    Json runs = Json::array();
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t s : steps) {
        auto ledger = simulate(plan, s);
        runs.push_back(ledger_json(ledger));
        xs.push_back(static_cast<double>(s));
        ys.push_back(std::abs(ledger.totals().work - optimum));
    }
    out.results["simulated"] = runs;
    out.series.push_back(series_json("convergence", "steps", "abs_work_error", xs, ys));
    return out;
}

Output run_bound_scan(const Node &root, Context &) {
    root.allow_only({"kind", "a", "points", "phi"});
    double a = root.at("a").number();
    if (a < 0.0 || a > 1.0) {
        root.at("a").fail("must lie in [0, 1]");
    }
    std::size_t points = root.has("points") ? root.at("points").unsigned_integer(2, 100000) : 91;
    double phi = root.has("phi") ? root.at("phi").number() : 0.0;
    auto basis = ProjectorSet::computational(2);
    std::vector<double> thetas;
    std::vector<double> bounds;
    std::vector<double> changes;
    for (std::size_t i = 0; i < points; i++) {
        double theta = std::numbers::pi * static_cast<double>(i) / static_cast<double>(points - 1);
        auto rho = bloch_state(a, theta, phi);
        thetas.push_back(theta);
        bounds.push_back(entropy_change_bound(rho, basis).bound);
        changes.push_back(von_neumann_entropy(project(rho, basis)) - von_neumann_entropy(rho));
    }
    Output out;
    out.results["a"] = a;
    out.results["points"] = points;
    out.results["max_bound"] = *std::max_element(bounds.begin(), bounds.end());
    out.results["max_entropy_change"] = *std::max_element(changes.begin(), changes.end());
    out.series.push_back(series_json("entropy_bound", "theta", "bound", thetas, bounds));
    out.series.push_back(series_json("entropy_change", "theta", "entropy_change", thetas, changes));
    return out;
}

Output run_jarzynski(const Node &root, Context &ctx) {
    root.allow_only({"kind", "hamiltonian", "hamiltonian_final", "unitary", "beta", "n_samples", "seed"});
    auto t = parse_beta(root);
    auto h0 = parse_hamiltonian(root.at("hamiltonian"), ctx);
    auto ht = parse_hamiltonian(root.at("hamiltonian_final"), ctx);
    require_dims(root.at("hamiltonian_final"), ht.dim(), h0.dim());
    auto v = parse_unitary(root.at("unitary"), h0.dim(), ctx);
    std::uint64_t n_samples = root.has("n_samples") ? root.at("n_samples").unsigned_integer(0, kMaxSamples) : 0;
    std::uint64_t seed = root.has("seed") ? root.at("seed").unsigned_integer() : 0;

    auto table = transition_table(h0, ht, v, t);
    DensityMatrix rho_t(v * gibbs_state(h0, t).matrix() * v.adjoint());
    auto heat = projection_heat(rho_t, ht, t);
    double unitary_work = average_unitary_work(table);

    Output out;
    Json probs = Json::array();
    for (std::size_t m = 0; m < table.rows; m++) {
        Json row = Json::array();
        for (std::size_t n = 0; n < table.cols; n++) {
            row.push_back(table.at(m, n));
        }
        probs.push_back(std::move(row));
    }
    out.results["table"] = {{"probs", probs}, {"e0", table.e0}, {"etau", table.etau}};
    out.results["jarzynski_average"] = jarzynski_average(table);
    out.results["exp_minus_beta_delta_f"] = std::exp(-t.beta() * free_energy_difference(h0, ht, t));
    out.results["delta_f"] = free_energy_difference(h0, ht, t);
    out.results["average_unitary_work"] = unitary_work;
    out.results["projection_heat"] = {
        {"heat", heat.heat}, {"extra_work", heat.extra_work}, {"decohering_heat", heat.decohering_heat}};
    out.results["work_delta_e_accounting"] = unitary_work;
    out.results["work_projection_corrected"] = unitary_work + heat.extra_work;

    if (n_samples > 0) {
        ctx.seeds.push_back(seed);
        auto stats = sample_trajectories(table, n_samples, seed);
        std::vector<double> xs;
        std::vector<double> ys;
        for (const auto &bin : stats.histogram) {
            xs.push_back(bin.delta_e);
            ys.push_back(static_cast<double>(bin.count));
        }
        out.results["samples"] = {{"n_samples", stats.n_samples},
                                  {"seed", stats.seed},
                                  {"mean_exp_beta_w", stats.mean_exp_beta_w},
                                  {"stderr_exp_beta_w", stats.stderr_exp_beta_w},
                                  {"mean_work", stats.mean_work},
                                  {"stderr_work", stats.stderr_work}};
        out.series.push_back(series_json("delta_e_histogram", "delta_e", "count", xs, ys));
    }
    return out;
}

std::vector<std::size_t> parse_copies(const std::optional<Node> &n) {
    std::vector<std::size_t> copies{1, 8, 16, 32, 64};
    if (n) {
        copies.clear();
        for (std::size_t i = 0; i < n->array_size(1); i++) {
            copies.push_back((*n)[i].unsigned_integer(1, 100000));
        }
    }
    return copies;
}

double parse_eps(const Node &root) {
    double eps = root.at("eps").number();
    if (eps < 0.0 || eps >= 1.0) {
        root.at("eps").fail("must lie in [0, 1)");
    }
    return eps;
}

Output run_singleshot(const Node &root, Context &ctx) {
    Output out;
    if (root.has("p")) {
        root.allow_only({"kind", "p", "q", "eps", "n_copies"});
        double eps = parse_eps(root);
        Distribution p(root.at("p").reals());
        Distribution q(root.at("q").reals());
        out.results["d_min"] = d_min_eps(p, q, eps);
        out.results["d_max"] = d_max_eps(p, q, eps);
        out.results["relative_entropy_bits"] = relative_entropy_bits(p, q);
        Json rates = Json::array();
        std::vector<double> xs;
        std::vector<double> lo;
        std::vector<double> hi;
        for (std::size_t n : parse_copies(root.get("n_copies"))) {
            auto r = iid_rate(p, q, eps, n);
            rates.push_back({{"n_copies", n}, {"rate_min", r.rate_min}, {"rate_max", r.rate_max},
                             {"type_classes", r.type_classes}});
            xs.push_back(static_cast<double>(n));
            lo.push_back(r.rate_min);
            hi.push_back(r.rate_max);
        }
        out.results["iid_rates"] = rates;
        out.series.push_back(series_json("rate_min", "n_copies", "bits_per_copy", xs, lo));
        out.series.push_back(series_json("rate_max", "n_copies", "bits_per_copy", xs, hi));
        return out;
    }
    root.allow_only({"kind", "state", "hamiltonian", "beta", "eps", "n_copies"});
    auto t = parse_beta(root);
    auto h = parse_hamiltonian(root.at("hamiltonian"), ctx);
    auto rho = parse_state(root.at("state"), &h, t, ctx);
    require_dims(root.at("state"), rho.dim(), h.dim());
    double eps = parse_eps(root);
    double optimum = optimal_projection_work(rho, h, ProjectorSet::from_hamiltonian(h), t).work;

    Json runs = Json::array();
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t n : parse_copies(root.get("n_copies"))) {
        auto c = consistency_work(rho, h, t, eps, n);
        runs.push_back({{"n_copies", n},
                        {"work", c.work},
                        {"rotation_work", c.rotation_work},
                        {"rate_min", c.rate_min},
                        {"rate_max", c.rate_max},
                        {"failure_probability", c.failure_probability}});
        xs.push_back(static_cast<double>(n));
        ys.push_back(c.work);
    }
    out.results["optimal_work"] = optimum;
    out.results["consistency"] = runs;
    out.series.push_back(series_json("consistency_work", "n_copies", "work", xs, ys));
    return out;
}

BipartiteState parse_bipartite(const Node &n, Context &ctx) {
    std::string type = n.at("type").choice({"purification", "product", "matrix", "random_extension"});
    if (type == "purification") {
        n.allow_only({"type", "system"});
        return BipartiteState::purification(parse_state(n.at("system"), nullptr, std::nullopt, ctx));
    }
    if (type == "product") {
        n.allow_only({"type", "system", "ancilla"});
        return BipartiteState::product(parse_state(n.at("system"), nullptr, std::nullopt, ctx),
                                       parse_state(n.at("ancilla"), nullptr, std::nullopt, ctx));
    }
    if (type == "matrix") {
        n.allow_only({"type", "dim_s", "dim_a", "entries"});
        std::size_t ds = n.at("dim_s").unsigned_integer(1, kMaxDim);
        std::size_t da = n.at("dim_a").unsigned_integer(1, kMaxDim);
        return BipartiteState(DensityMatrix(n.at("entries").matrix()), ds, da);
    }
    n.allow_only({"type", "system", "dim_a", "dim_env", "seed"});
    auto rho_s = parse_state(n.at("system"), nullptr, std::nullopt, ctx);
    std::size_t da = n.at("dim_a").unsigned_integer(1, kMaxDim);
    std::size_t de = n.has("dim_env") ? n.at("dim_env").unsigned_integer(1, kMaxDim) : rho_s.dim();
    std::uint64_t seed = n.at("seed").unsigned_integer();
    ctx.seeds.push_back(seed);
    Rng rng(seed);
    return random_extension(rng, rho_s, da, de);
}

Output run_correlations(const Node &root, Context &ctx) {
    root.allow_only({"kind", "bipartite", "hamiltonian", "beta", "projectors"});
    auto t = parse_beta(root);
    auto h = parse_hamiltonian(root.at("hamiltonian"), ctx);
    auto state = parse_bipartite(root.at("bipartite"), ctx);
    require_dims(root.at("bipartite"), state.dims().system, h.dim());
    auto p = parse_projectors(root.get("projectors"), h);
    if (auto n = root.get("projectors")) {
        require_dims(*n, p.dim(), h.dim());
    }

    auto rho_s = state.system();
    auto global = global_optimal_work(state, h, p, t);
    auto local = optimal_projection_work(rho_s, h, p, t);
    auto lemma = verify_lemma1(state, p);
    double delta = delta_correlation(state, p);

    Output out;
    out.results["delta"] = delta;
    out.results["global_work"] = work_json(global);
    out.results["system_work"] = work_json(local);
    out.results["decomposition_residual"] = std::abs(global.work - local.work - delta * t.kt());
    out.results["lemma1"] = {{"lhs", lemma.lhs}, {"rhs", lemma.rhs}, {"holds", lemma.holds}};
    out.results["system_entropy"] = von_neumann_entropy(rho_s);
    out.results["dim_s"] = state.dims().system;
    out.results["dim_a"] = state.dims().ancilla;
    return out;
}

}  // namespace

Json run_scenario(const Json &scenario) {
    Node root(scenario, "");
    root.require_object();
    std::string kind =
        root.at("kind").choice({"project", "protocol", "bound_scan", "jarzynski", "singleshot", "correlations"});
    Context ctx;
    Output out;
    if (kind == "project") {
        out = run_project(root, ctx);
    } else if (kind == "protocol") {
        out = run_protocol(root, ctx);
    } else if (kind == "bound_scan") {
        out = run_bound_scan(root, ctx);
    } else if (kind == "jarzynski") {
        out = run_jarzynski(root, ctx);
    } else if (kind == "singleshot") {
        out = run_singleshot(root, ctx);
    } else {
        out = run_correlations(root, ctx);
    }
    Json provenance = {{"tool", "coherework"},
                       {"version", std::string(kToolVersion)},
                       {"seeds", ctx.seeds},
                       {"tolerances",
                        {{"state", DensityMatrix::kTolerance},
                         {"projectors", ProjectorSet::kTolerance},
                         {"jacobi", kJacobiTolerance},
                         {"cluster_gap", Hamiltonian::kClusterGap},
                         {"branch_cutoff", kBranchCutoff}}}};
    return {{"kind", kind},
            {"scenario", scenario},
            {"results", out.results},
            {"provenance", provenance},
            {"series", out.series}};
}

namespace {

void dump_to(const Json &j, std::string &out) {
    switch (j.type()) {
        case Json::value_t::object: {
            out += '{';
            bool first = true;
            // nlohmann::json objects are std::map backed, so keys iterate sorted.
            for (const auto &item : j.items()) {
                if (!first) {
                    out += ',';
                }
                first = false;
                out += Json(item.key()).dump();
                out += ':';
                dump_to(item.value(), out);
            }
            out += '}';
            break;
        }
        case Json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); i++) {
                if (i != 0) {
                    out += ',';
                }
                dump_to(j[i], out);
            }
            out += ']';
            break;
        }
        case Json::value_t::number_float: {
            double x = j.get<double>();
            if (!std::isfinite(x)) {
                out += "null";
                break;
            }
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.17g", x);
            out += buf;
            break;
        }
        default:
            out += j.dump();
    }
}

}  // namespace

std::string canonical_dump(const Json &j) {
    std::string out;
    dump_to(j, out);
    return out;
}

}  // namespace coherework::cli
