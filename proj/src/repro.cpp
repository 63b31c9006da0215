#include "qchrom/repro.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "qchrom/datasets.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/jsoncert.hpp"
#include "qchrom/transforms.hpp"
#include "qchrom/vecrep.hpp"

namespace qchrom {

namespace {

struct Check {
    std::string expected;
    std::string computed;
    bool inconclusive = false;
};

void run_item(std::vector<ReproOutcome>& out, const std::string& item, const std::string& claim,
              const std::function<Check()>& body) {
    ReproOutcome outcome;
    outcome.item = item;
    outcome.claim = claim;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        Check c = body();
        outcome.expected = c.expected;
        outcome.computed = c.computed;
        outcome.inconclusive = c.inconclusive;
        outcome.pass = !c.inconclusive && c.expected == c.computed;
    } catch (const std::exception& e) {
        outcome.expected = "(no error)";
        outcome.computed = std::string("error: ") + e.what();
        outcome.pass = false;
    }
    outcome.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(outcome));
}

Check int_check(const std::string& expected, SolveStatus status, int value) {
    Check c;
    c.expected = expected;
    if (status == SolveStatus::Inconclusive) {
        c.computed = "inconclusive (budget exhausted; best bound " + std::to_string(value) + ")";
        c.inconclusive = true;
    } else {
        c.computed = std::to_string(value);
    }
    return c;
}

std::string residual_str(double r) {
    std::ostringstream ss;
    ss.precision(3);
    ss << std::scientific << r;
    return ss.str();
}

}  // namespace

std::vector<ReproOutcome> repro_all(std::uint64_t budget) {
    std::vector<ReproOutcome> out;

    // ---- the 18-vertex / 44-edge example --------------------------------
    const auto [g18, g18rep] = g18_dataset();
    run_item(out, "g18-edges", "published value: the example graph has 18 vertices and 44 edges",
             [&] {
                 return Check{"18 vertices, 44 edges",
                              std::to_string(g18.vertex_count()) + " vertices, " +
                                  std::to_string(g18.edge_count()) + " edges"};
             });
    run_item(out, "g18-od-lift",
             "published construction: the orthogonal-design lift of the published vectors is a "
             "4-colour quantum certificate",
             [&] {
                 const Rank1Cert cert = real_rep_to_rank1_od(g18, g18rep);
                 const VerifyReport report = verify_rank1(g18, cert);
                 const bool ok = report.pass && cert.c == 4 && report.worst_residual <= 1e-12;
                 return Check{"4 colours, pass, residual <= 1e-12",
                              ok ? "4 colours, pass, residual <= 1e-12"
                                 : "fail (c=" + std::to_string(cert.c) +
                                       ", residual " + residual_str(report.worst_residual) + ")"};
             });
    run_item(out, "g18-chi", "published value: chromatic number 5", [&] {
        const ChromaticResult r = chromatic_number(g18, budget);
        return int_check("5", r.status, r.value);
    });
    run_item(out, "g18-omega", "published value: clique number 4", [&] {
        const CliqueResult r = max_clique(g18, budget);
        return int_check("4", r.status, r.value);
    });

    // ---- the 64-vertex fourth-roots graph -------------------------------
    const auto [dim4, dim4rep] = fourth_roots_dim4_graph();
    run_item(out, "dim4-colouring",
             "published colouring: the 64-entry 4-colouring of the fourth-roots graph is proper",
             [&] {
                 const ClassicalColouring col = dim4_published_colouring();
                 const Report r = verify_proper_colouring(dim4, col);
                 return Check{"proper with 4 colours",
                              r.pass && col.c == 4 ? "proper with 4 colours"
                                                   : "improper: " + r.summary};
             });
    run_item(out, "dim4-chi", "published value: chromatic number 4", [&] {
        const ChromaticResult r = chromatic_number(dim4, budget);
        return int_check("4", r.status, r.value);
    });
    run_item(out, "dim4-omega", "published value: clique number 4", [&] {
        const CliqueResult r = max_clique(dim4, budget);
        return int_check("4", r.status, r.value);
    });

    // ---- the 27-vertex root-of-unity graph ------------------------------
    const auto [roots3, roots3rep] = roots_of_unity_graph(3);
    run_item(out, "roots3-colouring",
             "published construction: colour(x) = (x_0 - x_1) mod 3 properly 3-colours the graph",
             [&] {
                 const ClassicalColouring col = roots_of_unity_colouring(3);
                 const Report r = verify_proper_colouring(roots3, col);
                 return Check{"proper with 3 colours",
                              r.pass && col.c == 3 ? "proper with 3 colours"
                                                   : "improper: " + r.summary};
             });
    run_item(out, "roots3-chi", "published value: chromatic number 3", [&] {
        const ChromaticResult r = chromatic_number(roots3, budget);
        return int_check("3", r.status, r.value);
    });
    run_item(out, "roots3-omega", "published value: clique number 3", [&] {
        const CliqueResult r = max_clique(roots3, budget);
        return int_check("3", r.status, r.value);
    });
    run_item(out, "roots3-alpha", "published value: independence number 9", [&] {
        const CliqueResult r = max_independent_set(roots3, budget);
        return int_check("9", r.status, r.value);
    });
    run_item(out, "roots3-product",
             "published identity: alpha * omega = n = 27 for this vertex-transitive graph", [&] {
                 const GodsilReport r = godsil_identity_check(roots3, budget);
                 Check c;
                 c.expected = "27";
                 if (r.status == SolveStatus::Inconclusive) {
                     c.computed = "inconclusive (budget exhausted)";
                     c.inconclusive = true;
                 } else {
                     c.computed = std::to_string(r.alpha * r.omega);
                 }
                 return c;
             });

    // ---- Hadamard graph n = 4 -------------------------------------------
    const Graph h4 = hadamard_graph(4);
    run_item(out, "hadamard4-counts", "published parameters: 16 vertices, 48 edges", [&] {
        return Check{"16 vertices, 48 edges", std::to_string(h4.vertex_count()) + " vertices, " +
                                                  std::to_string(h4.edge_count()) + " edges"};
    });
    run_item(out, "hadamard4-chi", "published value: chromatic number 4", [&] {
        const ChromaticResult r = chromatic_number(h4, budget);
        return int_check("4", r.status, r.value);
    });
    run_item(out, "hadamard4-cert",
             "published construction: the +-1 Fourier lift is a 4-colour quantum certificate",
             [&] {
                 const Rank1Cert cert = unit_modulus_rep_to_rank1(h4, hadamard_pm_rep(4));
                 const VerifyReport report = verify_rank1(h4, cert);
                 return Check{"4 colours, pass",
                              report.pass && cert.c == 4
                                  ? "4 colours, pass"
                                  : "fail (residual " + residual_str(report.worst_residual) + ")"};
             });

    // ---- transform round-trip battery ------------------------------------
    run_item(out, "transforms-roundtrip", "internal consistency of the certificate transforms",
             [&] {
                 int passed = 0, total = 0;
                 auto tick = [&](bool ok) {
                     ++total;
                     if (ok) ++passed;
                 };
                 const Graph c5 = cycle_graph(5);
                 const ChromaticResult chi5 = chromatic_number(c5, budget);
                 const ClassicalColouring col5 = *chi5.witness;
                 const Rank1Cert r1 = classical_to_rank1(c5, col5);
                 tick(verify_rank1(c5, r1).pass);
                 tick(verify_projector(c5, rank1_to_projector(r1)).pass);
                 tick(verify_general(c5, rank1_to_general(r1)).pass);
                 const ClassicalColouring back = extract_classical_3col(c5, r1);
                 tick(verify_proper_colouring(c5, back).pass);

                 // equalization: K_2 rank-1 measurement of c=2 in d=2 -> rank-2 in d=4
                 const Graph k2 = complete_graph(2);
                 const Rank1Cert k2cert = classical_to_rank1(k2, ClassicalColouring{2, {0, 1}});
                 const ProjectorCert k2proj = rank1_to_projector(k2cert);
                 const ProjectorCert eq =
                     equalize_ranks(k2, MixedMeasurements{2, 2, k2proj.projectors});
                 tick(eq.r == 2 && eq.d == 4 && verify_projector(k2, eq).pass);

                 // tensor union of two K_2 pieces on 4 vertices
                 const Graph ga(4, {{0, 1}});
                 const Graph gb(4, {{2, 3}});
                 ClassicalColouring ca{2, {0, 1, 0, 0}}, cb{2, {0, 0, 0, 1}};
                 const ProjectorCert pa = rank1_to_projector(classical_to_rank1(ga, ca));
                 const ProjectorCert pb = rank1_to_projector(classical_to_rank1(gb, cb));
                 const ProjectorCert un = tensor_union(ga, gb, pa, pb);
                 tick(un.c == 4 && verify_projector(union_same_vertices(ga, gb), un).pass);

                 // normal form of an embedded rank-1 certificate recovers its lift
                 const NormalFormResult nf = normal_form(k2, rank1_to_general(k2cert));
                 bool nf_ok = nf.ok && !nf.equalized && nf.cert.r == 1 && nf.cert.d == 2 &&
                              verify_projector(k2, nf.cert).pass &&
                              nf.max_commutation_residual <= 1e-9;
                 if (nf_ok) {
                     double diff = 0.0;
                     const ProjectorCert lift = rank1_to_projector(k2cert);
                     for (int v = 0; v < 2; ++v)
                         for (int a = 0; a < 2; ++a)
                             diff = std::max(
                                 diff, (nf.cert.projectors[v][a] - lift.projectors[v][a]).max_abs());
                     nf_ok = diff <= 1e-9;
                 }
                 tick(nf_ok);

                 return Check{"7/7 checks pass", std::to_string(passed) + "/" +
                                                     std::to_string(total) + " checks pass"};
             });

    // ---- Hadamard graph n = 8: clique + certificate pinch (stretch) ------
    run_item(out, "hadamard8-quantum",
             "published bound: quantum chromatic number 8, pinched between an explicit "
             "orthogonal-row clique and the 8-colour Fourier lift",
             [&] {
                 const Graph h8 = hadamard_graph(8);
                 // vertex ids of the 8 rows of the order-8 +-1 matrix
                 // H(i,k) = (-1)^{popcount(i & k)}; entry k maps to id bit 7-k
                 std::vector<int> rows(8, 0);
                 for (int i = 0; i < 8; ++i)
                     for (int k = 0; k < 8; ++k)
                         if (std::popcount(static_cast<unsigned>(i & k)) & 1) rows[i] |= 1 << (7 - k);
                 bool clique = true;
                 for (int a = 0; a < 8 && clique; ++a)
                     for (int b = a + 1; b < 8 && clique; ++b)
                         clique = h8.adjacent(rows[a], rows[b]);
                 const Rank1Cert cert = unit_modulus_rep_to_rank1(h8, hadamard_pm_rep(8));
                 const bool cert_ok = verify_rank1(h8, cert).pass && cert.c == 8;
                 return Check{"clique of 8 and a passing 8-colour certificate",
                              clique && cert_ok
                                  ? "clique of 8 and a passing 8-colour certificate"
                                  : std::string(clique ? "clique ok" : "clique broken") + ", " +
                                        (cert_ok ? "certificate ok" : "certificate failed")};
             });

    return out;
}

bool repro_all_pass(const std::vector<ReproOutcome>& outcomes) {
    for (const ReproOutcome& o : outcomes)
        if (!o.pass) return false;
    return true;
}

std::string repro_to_json_text(const std::vector<ReproOutcome>& outcomes, bool include_timings) {
    nlohmann::json items = nlohmann::json::array();
    for (const ReproOutcome& o : outcomes) {
        nlohmann::json j;
        j["item"] = o.item;
        j["claim"] = o.claim;
        j["expected"] = o.expected;
        j["computed"] = o.computed;
        j["pass"] = o.pass;
        j["inconclusive"] = o.inconclusive;
        if (include_timings) j["elapsed_ms"] = o.elapsed_ms;
        items.push_back(std::move(j));
    }
    nlohmann::json root;
    root["items"] = std::move(items);
    root["pass"] = repro_all_pass(outcomes);
    return root.dump();
}

}  // namespace qchrom
