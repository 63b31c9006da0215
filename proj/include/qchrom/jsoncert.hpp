#pragma once

#include <string>

#include "qchrom/certificates.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/transforms.hpp"

namespace qchrom {

// Certificate files bundle the graph with the certificate so one file is a
// self-contained claim. Complex entries serialize as [re, im].
//   rank1:        {"kind":"rank1","c":..,"graph":..,"matrices":[v][row][col]}
//   projector:    {"kind":"projector","c":..,"r":..,"graph":..,"matrices":[v][colour][row][col]}
//   general:      {"kind":"general","dA":..,"dB":..,"graph":..,"state":[..],
//                  "alice":[v][colour][row][col],"bob":[v][colour][row][col]}
//   measurements: {"kind":"measurements","c":..,"d":..,"graph":..,"matrices":[v][colour][row][col]}
//                 (mixed-rank projective measurements, the input of equalize_ranks)
struct CertBundle {
    std::string kind;
    Graph graph = Graph(1);
    Rank1Cert rank1;              // kind == "rank1"
    ProjectorCert projector;      // kind == "projector"
    GeneralCert general;          // kind == "general"
    MixedMeasurements measurements;  // kind == "measurements"
};

std::string rank1_to_json_text(const Graph& g, const Rank1Cert& cert);
std::string projector_to_json_text(const Graph& g, const ProjectorCert& cert);
std::string general_to_json_text(const Graph& g, const GeneralCert& cert);
std::string measurements_to_json_text(const Graph& g, const MixedMeasurements& m);

CertBundle cert_from_json_text(const std::string& text);
CertBundle load_cert_file(const std::string& path);

// dispatch on kind; "measurements" is not a verifiable certificate and is rejected
VerifyReport verify_bundle(const CertBundle& bundle, double tol = kCertTolerance);

std::string report_to_json_text(const VerifyReport& report);

}  // namespace qchrom
