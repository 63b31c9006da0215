#include "qchrom/experiments.hpp"

#include <chrono>
#include <cmath>

#include "json.hpp"
#include "qchrom/errors.hpp"

namespace qchrom {

using nlohmann::json;

GnpResult run_gnp_experiment(const GnpParams& params) {
    if (params.p <= 0.0 || params.p >= 1.0)
        throw InvalidInput("gnp experiment needs 0 < p < 1 (the clique bound divides by ln 1/p)");
    if (params.trials < 1) throw InvalidInput("gnp experiment needs at least one trial");
    if (params.ns.empty()) throw InvalidInput("gnp experiment needs at least one n");
    for (int n : params.ns)
        if (n < 1 || n > 200)
            throw InvalidInput("gnp experiment supports 1 <= n <= 200, got " + std::to_string(n));

    GnpResult result;
    result.params = params;
    std::uint64_t index = 0;
    for (int n : params.ns) {
        const double bound = 2.0 * std::log(static_cast<double>(n)) / std::log(1.0 / params.p);
        for (int t = 0; t < params.trials; ++t, ++index) {
            ExperimentRecord rec;
            rec.seed = params.seed + index;
            rec.n = n;
            rec.p = params.p;
            rec.bound = bound;
            const auto t0 = std::chrono::steady_clock::now();
            const Graph g = gnp(n, params.p, rec.seed);
            const CliqueResult clique = max_clique(g, params.budget);
            rec.omega = clique.value;
            rec.omega_exact = clique.status == SolveStatus::Exact;
            if (n <= params.chi_cap) {
                const ChromaticResult chi = chromatic_number(g, params.budget);
                if (chi.status == SolveStatus::Exact) rec.chi = chi.value;
            }
            rec.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();

            ++result.summary.total;
            if (rec.omega_exact) {
                ++result.summary.exact;
                if (rec.omega > (1.0 + params.epsilon) * bound) ++result.summary.violations;
            } else {
                ++result.summary.inconclusive;
            }
            result.records.push_back(std::move(rec));
        }
    }
    if (result.summary.exact > 0)
        result.summary.violation_fraction =
            static_cast<double>(result.summary.violations) / result.summary.exact;
    return result;
}

std::string gnp_result_to_json_text(const GnpResult& result, bool include_timings) {
    json j;
    json params;
    params["ns"] = result.params.ns;
    params["p"] = result.params.p;
    params["trials"] = result.params.trials;
    params["seed"] = result.params.seed;
    params["epsilon"] = result.params.epsilon;
    params["chi_cap"] = result.params.chi_cap;
    j["params"] = std::move(params);

    json records = json::array();
    for (const ExperimentRecord& rec : result.records) {
        json r;
        r["seed"] = rec.seed;
        r["n"] = rec.n;
        r["p"] = rec.p;
        r["omega"] = rec.omega;
        r["omega_exact"] = rec.omega_exact;
        if (rec.chi) r["chi"] = *rec.chi;
        r["bound"] = rec.bound;
        if (include_timings) r["elapsed_ms"] = rec.elapsed_ms;
        records.push_back(std::move(r));
    }
    j["records"] = std::move(records);

    json summary;
    summary["total"] = result.summary.total;
    summary["exact"] = result.summary.exact;
    summary["inconclusive"] = result.summary.inconclusive;
    summary["violations"] = result.summary.violations;
    summary["violation_fraction"] = result.summary.violation_fraction;
    j["summary"] = std::move(summary);
    return j.dump();
}

}  // namespace qchrom
