#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hdg/analysis.hpp"
#include "hdg/cubelike.hpp"
#include "hdg/graph.hpp"
#include "hdg/hadamard.hpp"
#include "hdg/pst.hpp"

namespace hdg {

// Graph JSON: {"n": int, "edges": [[i, j, "p/q"], ...]}, 1-based i < j,
// canonical sorted edge order.
std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);

// Hadamard text: one row per line; reader accepts +/- or 1/-1 tokens,
// writer emits "1 -1 ...".
std::string hadamard_to_text(const HadamardMatrix& h);
HadamardMatrix hadamard_from_text(const std::string& text);

// Certificate JSON carries the graph for round-tripping.
std::string certificate_to_json(const SpectralCertificate& cert);
SpectralCertificate certificate_from_json(const std::string& text);

// {"verdict": str, "pairs": [[j,k]...], "time": "r/s * pi", "rule": str,
//  "fidelity": float|null}
std::string report_to_json(const PstReport& report);
PstReport report_from_json(const std::string& text);

// Exact pi-multiple strings: "1/2pi", "3pi", "0".
std::string time_to_string(const PiTime& t);
PiTime time_from_string(const std::string& text);

// CSV with header "t,p", 17 significant digits.
std::string fidelity_to_csv(const std::vector<FidelityPoint>& points);

// Connection-set file: first line "d=<int>", then one MSB-first bitstring
// per line, sorted.
std::string connection_set_to_text(const ConnectionSet& c);
ConnectionSet connection_set_from_text(const std::string& text);

std::string sparsity_report_to_json(const SparsityReport& report);

}  // namespace hdg
