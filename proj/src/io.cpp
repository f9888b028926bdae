#include "hdg/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "hdg/errors.hpp"

namespace hdg {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw domain_error("invalid JSON input");
    return j;
}

}  // namespace

std::string graph_to_json(const WeightedGraph& g) {
    json edges = json::array();
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = i + 1; j < g.order(); ++j)
            if (g.weight(i, j) != 0)
                edges.push_back({i + 1, j + 1, to_string(g.weight(i, j))});
    json out{{"n", g.order()}, {"edges", std::move(edges)}};
    return out.dump();
}

WeightedGraph graph_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("n") || !j["n"].is_number_unsigned())
        throw domain_error("graph JSON: missing vertex count");
    WeightedGraph g(j["n"].get<std::size_t>());
    for (const auto& e : j.value("edges", json::array())) {
        if (!e.is_array() || e.size() != 3)
            throw domain_error("graph JSON: edge must be [i, j, weight]");
        std::size_t a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
        if (a < 1 || b < 1 || a > g.order() || b > g.order() || a == b)
            throw domain_error("graph JSON: edge endpoints out of range");
        g.set_edge(a - 1, b - 1, parse_rational(e[2].get<std::string>()));
    }
    return g;
}

std::string hadamard_to_text(const HadamardMatrix& h) {
    std::ostringstream out;
    for (std::size_t i = 0; i < h.order(); ++i) {
        for (std::size_t j = 0; j < h.order(); ++j) {
            if (j) out << ' ';
            out << h(i, j);
        }
        out << '\n';
    }
    return out.str();
}

HadamardMatrix hadamard_from_text(const std::string& text) {
    std::vector<std::vector<int>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<int> row;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "+" || tok == "1")
                row.push_back(1);
            else if (tok == "-" || tok == "-1")
                row.push_back(-1);
            else if (tok.find_first_not_of("+-") == std::string::npos)
                for (char c : tok) row.push_back(c == '+' ? 1 : -1);  // compact "+--+" rows
            else
                throw domain_error("Hadamard text: unexpected token '" + tok + "'");
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return HadamardMatrix(std::move(rows));
}

std::string certificate_to_json(const SpectralCertificate& cert) {
    json h = json::array();
    for (const auto& row : cert.hadamard().entries()) h.push_back(row);
    json lam = json::array();
    for (const Rat& v : cert.eigenvalues()) lam.push_back(to_string(v));
    json out{{"graph", json::parse(graph_to_json(cert.graph()))},
             {"hadamard", std::move(h)},
             {"eigenvalues", std::move(lam)}};
    return out.dump();
}

SpectralCertificate certificate_from_json(const std::string& text) {
    json j = parse(text);
    if (!j.contains("graph") || !j.contains("hadamard") || !j.contains("eigenvalues"))
        throw domain_error("certificate JSON: missing field");
    WeightedGraph g = graph_from_json(j["graph"].dump());
    std::vector<std::vector<int>> rows;
    for (const auto& row : j["hadamard"]) rows.push_back(row.get<std::vector<int>>());
    HadamardMatrix h(std::move(rows));
    // re-derive eigenvalues from scratch; stored values must agree
    SpectralCertificate cert = certify(g, h);
    std::size_t idx = 0;
    for (const auto& v : j["eigenvalues"]) {
        if (idx >= cert.order() || parse_rational(v.get<std::string>()) != cert.eigenvalues()[idx])
            throw certification_error("certificate JSON: eigenvalues do not match the graph");
        ++idx;
    }
    if (idx != cert.order())
        throw certification_error("certificate JSON: wrong eigenvalue count");
    return cert;
}

std::string time_to_string(const PiTime& t) {
    if (t.coefficient == 0) return "0";
    if (t.coefficient == 1) return "pi";
    return to_string(t.coefficient) + "pi";
}

PiTime time_from_string(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '*') s += c;
    if (s == "0") return PiTime{Rat(0)};
    if (s == "pi") return PiTime{Rat(1)};
    auto pos = s.find("pi");
    if (pos == std::string::npos || pos + 2 != s.size())
        throw domain_error("time string must look like 'r/s pi' or '0': '" + text + "'");
    std::string coeff = s.substr(0, pos);
    if (coeff == "-") coeff = "-1";
    return PiTime{parse_rational(coeff)};
}

std::string report_to_json(const PstReport& report) {
    json pairs = json::array();
    for (const auto& [j, k] : report.pairs) pairs.push_back({j, k});
    json out{{"verdict", to_string(report.verdict)},
             {"pairs", std::move(pairs)},
             {"time", time_to_string(report.time)},
             {"rule", report.certifying_rule}};
    if (report.fidelity_checked)
        out["fidelity"] = *report.fidelity_checked;
    else
        out["fidelity"] = nullptr;
    return out.dump();
}

PstReport report_from_json(const std::string& text) {
    json j = parse(text);
    PstReport report;
    std::string verdict = j.at("verdict").get<std::string>();
    if (verdict == "PST")
        report.verdict = Verdict::PST;
    else if (verdict == "PERIODIC")
        report.verdict = Verdict::PERIODIC;
    else if (verdict == "NONE")
        report.verdict = Verdict::NONE;
    else if (verdict == "PGST")
        report.verdict = Verdict::PGST;
    else
        throw domain_error("report JSON: unknown verdict '" + verdict + "'");
    for (const auto& p : j.value("pairs", json::array())) {
        if (!p.is_array() || p.size() != 2) throw domain_error("report JSON: bad pair");
        report.pairs.push_back({p[0].get<std::size_t>(), p[1].get<std::size_t>()});
    }
    report.time = time_from_string(j.at("time").get<std::string>());
    report.certifying_rule = j.value("rule", "");
    if (j.contains("fidelity") && !j["fidelity"].is_null())
        report.fidelity_checked = j["fidelity"].get<double>();
    return report;
}

std::string fidelity_to_csv(const std::vector<FidelityPoint>& points) {
    std::string out = "t,p\n";
    char buf[64];
    for (const auto& pt : points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", pt.t, pt.p);
        out += buf;
    }
    return out;
}

std::string connection_set_to_text(const ConnectionSet& c) {
    std::string out = "d=" + std::to_string(c.dimension()) + "\n";
    for (std::uint32_t e : c.elements()) {
        for (unsigned b = c.dimension(); b-- > 0;) out += (e >> b & 1) ? '1' : '0';
        out += '\n';
    }
    return out;
}

ConnectionSet connection_set_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line.rfind("d=", 0) != 0)
        throw domain_error("connection-set file must start with 'd=<int>'");
    unsigned d = 0;
    try {
        d = static_cast<unsigned>(std::stoul(line.substr(2)));
    } catch (const std::exception&) {
        throw domain_error("connection-set file: bad dimension '" + line + "'");
    }
    std::vector<std::uint32_t> elements;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.size() != d || line.find_first_not_of("01") != std::string::npos)
            throw domain_error("connection-set file: bad bitstring '" + line + "'");
        std::uint32_t e = 0;
        for (char c : line) e = e << 1 | (c == '1');
        elements.push_back(e);
    }
    return ConnectionSet(d, std::move(elements));
}

std::string sparsity_report_to_json(const SparsityReport& report) {
    json hits = json::array();
    for (const auto& hit : report.hits) {
        json elements = json::array();
        for (std::uint32_t e : hit.set.elements()) {
            std::string bits;
            for (unsigned b = hit.set.dimension(); b-- > 0;) bits += (e >> b & 1) ? '1' : '0';
            elements.push_back(bits);
        }
        json counts = json::array();
        for (const Int& c : hit.eigencounts) counts.push_back(c.get_str());
        hits.push_back({{"d", hit.set.dimension()},
                        {"elements", std::move(elements)},
                        {"n", hit.n},
                        {"eigencounts", std::move(counts)}});
    }
    json out{{"r", report.r},
             {"max_k", report.max_k},
             {"corpus_size", report.corpus_size},
             {"hits", std::move(hits)},
             {"max_order", report.max_order},
             {"bound_satisfied", report.bound_satisfied}};
    return out.dump();
}

}  // namespace hdg
