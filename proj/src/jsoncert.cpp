#include "qchrom/jsoncert.hpp"

#include "json.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/io.hpp"

namespace qchrom {

using nlohmann::json;

namespace {

json complex_to_json(const std::complex<double>& z) {
    return json::array({z.real(), z.imag()});
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::complex<double> complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2)
        throw InvalidInput("certificate json: complex entries must be [re, im]");
    return {j[0].get<double>(), j[1].get<double>()};
}

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InvalidInput("certificate json: matrix must be a row list");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols)
            throw InvalidInput("certificate json: ragged matrix rows");
        for (int k = 0; k < cols; ++k) m(i, k) = complex_from_json(j[i][k]);
    }
    return m;
}

json matrix_lists_to_json(const std::vector<std::vector<Matrix>>& lists) {
    json out = json::array();
    for (const auto& per_vertex : lists) {
        json inner = json::array();
        for (const Matrix& m : per_vertex) inner.push_back(matrix_to_json(m));
        out.push_back(std::move(inner));
    }
    return out;
}

std::vector<std::vector<Matrix>> matrix_lists_from_json(const json& j) {
    std::vector<std::vector<Matrix>> out;
    for (const auto& per_vertex : j) {
        std::vector<Matrix> inner;
        for (const auto& m : per_vertex) inner.push_back(matrix_from_json(m));
        out.push_back(std::move(inner));
    }
    return out;
}

json parse_object(const std::string& text, const char* what) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string(what) + " json: " + e.what());
    }
    if (!j.is_object()) throw InvalidInput(std::string(what) + " json: expected an object");
    return j;
}

void require_fields(const json& j, std::initializer_list<const char*> fields) {
    for (const char* f : fields)
        if (!j.contains(f))
            throw InvalidInput(std::string("certificate json: missing field '") + f + "'");
}

}  // namespace

std::string rank1_to_json_text(const Graph& g, const Rank1Cert& cert) {
    json j;
    j["kind"] = "rank1";
    j["c"] = cert.c;
    j["graph"] = json::parse(graph_to_json_text(g));
    json matrices = json::array();
    for (const Matrix& u : cert.unitaries) matrices.push_back(matrix_to_json(u));
    j["matrices"] = std::move(matrices);
    return j.dump();
}

std::string projector_to_json_text(const Graph& g, const ProjectorCert& cert) {
    json j;
    j["kind"] = "projector";
    j["c"] = cert.c;
    j["r"] = cert.r;
    j["graph"] = json::parse(graph_to_json_text(g));
    j["matrices"] = matrix_lists_to_json(cert.projectors);
    return j.dump();
}

std::string general_to_json_text(const Graph& g, const GeneralCert& cert) {
    json j;
    j["kind"] = "general";
    j["dA"] = cert.dA;
    j["dB"] = cert.dB;
    j["graph"] = json::parse(graph_to_json_text(g));
    json state = json::array();
    for (const auto& z : cert.state) state.push_back(complex_to_json(z));
    j["state"] = std::move(state);
    j["alice"] = matrix_lists_to_json(cert.alice);
    j["bob"] = matrix_lists_to_json(cert.bob);
    return j.dump();
}

std::string measurements_to_json_text(const Graph& g, const MixedMeasurements& m) {
    json j;
    j["kind"] = "measurements";
    j["c"] = m.c;
    j["d"] = m.d;
    j["graph"] = json::parse(graph_to_json_text(g));
    j["matrices"] = matrix_lists_to_json(m.ops);
    return j.dump();
}

CertBundle cert_from_json_text(const std::string& text) {
    json j = parse_object(text, "certificate");
    require_fields(j, {"kind", "graph"});
    CertBundle bundle;
    bundle.kind = j.at("kind").get<std::string>();
    bundle.graph = graph_from_json_text(j.at("graph").dump());
    if (bundle.kind == "rank1") {
        require_fields(j, {"c", "matrices"});
        bundle.rank1.c = j.at("c").get<int>();
        for (const auto& m : j.at("matrices")) bundle.rank1.unitaries.push_back(matrix_from_json(m));
    } else if (bundle.kind == "projector") {
        require_fields(j, {"c", "r", "matrices"});
        bundle.projector.c = j.at("c").get<int>();
        bundle.projector.r = j.at("r").get<int>();
        bundle.projector.d = bundle.projector.r * bundle.projector.c;
        bundle.projector.projectors = matrix_lists_from_json(j.at("matrices"));
    } else if (bundle.kind == "general") {
        require_fields(j, {"dA", "dB", "state", "alice", "bob"});
        bundle.general.dA = j.at("dA").get<int>();
        bundle.general.dB = j.at("dB").get<int>();
        for (const auto& z : j.at("state")) bundle.general.state.push_back(complex_from_json(z));
        bundle.general.alice = matrix_lists_from_json(j.at("alice"));
        bundle.general.bob = matrix_lists_from_json(j.at("bob"));
    } else if (bundle.kind == "measurements") {
        require_fields(j, {"c", "d", "matrices"});
        bundle.measurements.c = j.at("c").get<int>();
        bundle.measurements.d = j.at("d").get<int>();
        bundle.measurements.ops = matrix_lists_from_json(j.at("matrices"));
    } else {
        throw InvalidInput("certificate json: unknown kind '" + bundle.kind + "'");
    }
    return bundle;
}

CertBundle load_cert_file(const std::string& path) {
    return cert_from_json_text(read_file(path));
}

VerifyReport verify_bundle(const CertBundle& bundle, double tol) {
    if (bundle.kind == "rank1") return verify_rank1(bundle.graph, bundle.rank1, tol);
    if (bundle.kind == "projector") return verify_projector(bundle.graph, bundle.projector, tol);
    if (bundle.kind == "general") return verify_general(bundle.graph, bundle.general, tol);
    throw InvalidInput("'" + bundle.kind + "' is not a verifiable certificate kind");
}

std::string report_to_json_text(const VerifyReport& report) {
    json j;
    j["pass"] = report.pass;
    j["worst_residual"] = report.worst_residual;
    json violations = json::array();
    for (const Violation& v : report.violations) {
        json jv;
        jv["kind"] = v.kind;
        jv["u"] = v.u;
        jv["v"] = v.v;
        jv["colour_a"] = v.colour_a;
        jv["colour_b"] = v.colour_b;
        jv["residual"] = v.residual;
        if (!v.note.empty()) jv["note"] = v.note;
        violations.push_back(std::move(jv));
    }
    j["violations"] = std::move(violations);
    return j.dump();
}

}  // namespace qchrom
