#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdg/analysis.hpp"
#include "hdg/cubelike.hpp"
#include "hdg/errors.hpp"
#include "hdg/families.hpp"
#include "hdg/io.hpp"

using namespace hdg;

namespace {

// exit codes: 0 ok / verdict found, 1 verdict NONE, 2 usage or domain
// error, 3 numeric or capacity error
constexpr int kExitNone = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNumeric = 3;

std::string read_source(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_sink(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw domain_error("cannot write '" + path + "'");
    out << text;
}

// "catalog:12" or a file in the Hadamard text format
HadamardMatrix load_hadamard(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0)
        return catalog(static_cast<std::size_t>(std::stoul(spec.substr(8))));
    return hadamard_from_text(read_source(spec));
}

HadamardMatrix default_hadamard(std::size_t n) { return catalog(n); }

WeightedGraph load_graph(const std::string& path) { return graph_from_json(read_source(path)); }

// tokens: "e3", a 0/1 bitstring, or a plain integer
ConnectionSet parse_set(const std::string& list, unsigned d_flag) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char c : list + ",") {
        if (c == ',') {
            if (!cur.empty()) tokens.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    unsigned d = d_flag;
    std::vector<std::uint32_t> elements;
    for (const std::string& t : tokens) {
        std::uint32_t e;
        if (t[0] == 'e') {
            unsigned i = static_cast<unsigned>(std::stoul(t.substr(1)));
            if (i == 0) throw domain_error("basis index starts at e1");
            e = std::uint32_t{1} << (i - 1);
            if (d_flag == 0) d = std::max(d, i);
        } else if (t.find_first_not_of("01") == std::string::npos && t.size() > 1) {
            e = 0;
            for (char c : t) e = e << 1 | (c == '1');
            if (d_flag == 0) d = std::max<unsigned>(d, static_cast<unsigned>(t.size()));
        } else {
            e = static_cast<std::uint32_t>(std::stoul(t));
            unsigned bits = 0;
            while (e >> bits) ++bits;
            if (d_flag == 0) d = std::max(d, bits);
        }
        elements.push_back(e);
    }
    return ConnectionSet(d, std::move(elements));
}

// "p/q", "sqrt(d)", or "(a+b*sqrt(d))/c"
MergeWeight parse_weight(std::string s) {
    std::erase(s, ' ');
    auto root = s.find("sqrt(");
    if (root == std::string::npos) return Rat(parse_rational(s));
    Int a = 0, b = 1, c = 1;
    std::string head = s.substr(0, root);
    if (!head.empty() && head.front() == '(') head.erase(head.begin());
    auto close = s.find(')', root);
    if (close == std::string::npos) throw domain_error("bad weight '" + s + "'");
    Int d(s.substr(root + 5, close - root - 5));
    std::string tail = s.substr(close + 1);
    if (!tail.empty() && tail.front() == ')') tail.erase(tail.begin());
    if (!tail.empty()) {
        if (tail.front() != '/') throw domain_error("bad weight '" + s + "'");
        c = Int(tail.substr(1));
    }
    if (!head.empty()) {
        // forms: "b*", "a+b*", "a-b*", "-", "a+", ...
        auto star = head.rfind('*');
        std::string bpart;
        if (star != std::string::npos) {
            auto split = head.find_last_of("+-", star);
            if (split == std::string::npos || split == 0) {
                bpart = head.substr(0, star);
            } else {
                a = Int(head.substr(0, split));
                bpart = head.substr(split, star - split);
            }
        } else {
            auto split = head.find_last_of("+-");
            if (split == std::string::npos || split == 0) {
                bpart = head;
            } else {
                a = Int(head.substr(0, split));
                bpart = head.substr(split);
            }
        }
        if (bpart.empty() || bpart == "+")
            b = 1;
        else if (bpart == "-")
            b = -1;
        else
            b = Int(bpart);
    }
    return QuadraticIrrational(a, b, c, d);
}

int run(int argc, char** argv) {
    CLI::App app{"Hadamard-diagonalizable graph toolkit"};
    app.require_subcommand(1);
    unsigned long seed = 0;
    app.add_option("--seed", seed, "seed for randomized corpus generation");

    std::string in = "-", out = "-", aux, hspec, set_list, weights_csv, w1s = "1", w2s = "1";
    std::string time_str = "1/2pi";
    std::size_t order = 0, steps = 11, count = 5;
    unsigned k = 3, d_flag = 0, r = 3, max_k = 4, parallel = 1;
    std::size_t deg = 4;
    std::vector<std::size_t> pair{1, 2};
    std::string w1_rat = "1", w2_rat = "1", scale_str = "1";
    double h = 0.0, tmax = 3.2;

    // hadamard
    auto* had = app.add_subcommand("hadamard", "Hadamard matrix tools")->require_subcommand(1);
    auto* had_gen = had->add_subcommand("gen", "emit a catalog Hadamard");
    had_gen->add_option("--order", order)->required();
    had_gen->add_option("--out", out);
    auto* had_check = had->add_subcommand("check", "verify the Hadamard identity");
    had_check->add_option("--in", in);
    auto* had_norm = had->add_subcommand("normalize", "sign rows/columns to all-ones border");
    had_norm->add_option("--in", in);
    had_norm->add_option("--out", out);

    // graph
    auto* graph = app.add_subcommand("graph", "graph constructions")->require_subcommand(1);
    std::size_t complete_n = 0, empty_n = 0;
    auto* g_build = graph->add_subcommand("build", "build a named graph");
    g_build->add_option("--complete", complete_n);
    g_build->add_option("--empty", empty_n);
    g_build->add_option("--out", out);
    auto* g_comp = graph->add_subcommand("complement", "unweighted complement");
    g_comp->add_option("--in", in);
    g_comp->add_option("--out", out);
    auto* g_join = graph->add_subcommand("join", "join of two graphs");
    g_join->add_option("--a", in)->required();
    g_join->add_option("--b", aux)->required();
    g_join->add_option("--out", out);
    auto* g_prod = graph->add_subcommand("product", "Cartesian product");
    g_prod->add_option("--a", in)->required();
    g_prod->add_option("--b", aux)->required();
    g_prod->add_option("--out", out);
    auto* g_merge = graph->add_subcommand("merge", "weighted merge on 2n vertices");
    g_merge->add_option("--a", in)->required();
    g_merge->add_option("--b", aux)->required();
    g_merge->add_option("--w1", w1_rat);
    g_merge->add_option("--w2", w2_rat);
    g_merge->add_option("--out", out);
    auto* g_add = graph->add_subcommand("add", "same-order Laplacian sum");
    g_add->add_option("--a", in)->required();
    g_add->add_option("--b", aux)->required();
    g_add->add_option("--out", out);
    auto* g_scale = graph->add_subcommand("scale", "scale all edge weights");
    g_scale->add_option("--in", in);
    g_scale->add_option("--c", scale_str)->required();
    g_scale->add_option("--out", out);

    // certify
    auto* cert_cmd = app.add_subcommand("certify", "graph + Hadamard -> certificate JSON");
    cert_cmd->add_option("--in", in);
    cert_cmd->add_option("--hadamard", hspec);
    cert_cmd->add_option("--out", out);

    // pst
    auto* pst = app.add_subcommand("pst", "PST certification")->require_subcommand(1);
    auto* pst_check = pst->add_subcommand("check", "check one vertex pair");
    pst_check->add_option("--graph", in);
    pst_check->add_option("--hadamard", hspec);
    pst_check->add_option("--pair", pair)->expected(2);
    auto* pst_pairs_cmd = pst->add_subcommand("pairs", "all-pairs sweep");
    pst_pairs_cmd->add_option("--in", in);
    pst_pairs_cmd->add_option("--hadamard", hspec);
    pst_pairs_cmd->add_option("--out", out);

    // cubelike
    auto* cube = app.add_subcommand("cubelike", "cubelike graph tools")->require_subcommand(1);
    auto* cb_build = cube->add_subcommand("build", "graph of a connection set");
    cb_build->add_option("--set", set_list);
    cb_build->add_option("--file", aux);
    cb_build->add_option("--d", d_flag);
    cb_build->add_option("--out", out);
    auto* cb_sigma = cube->add_subcommand("sigma", "sigma verdict of a connection set");
    cb_sigma->add_option("--set", set_list);
    cb_sigma->add_option("--file", aux);
    cb_sigma->add_option("--d", d_flag);
    auto* cb_enum = cube->add_subcommand("enum", "enumerate connection sets");
    bool want_connected = false, want_sigma = false, want_nonbipartite = false;
    std::size_t want_degree = 0;
    cb_enum->add_option("--d", d_flag)->required();
    cb_enum->add_flag("--connected", want_connected);
    cb_enum->add_flag("--sigma-nonzero", want_sigma);
    cb_enum->add_flag("--non-bipartite", want_nonbipartite);
    cb_enum->add_option("--degree", want_degree);
    cb_enum->add_option("--parallel", parallel);
    auto* cb_dec = cube->add_subcommand("decompose", "connection set of a standard graph");
    cb_dec->add_option("--in", in);
    cb_dec->add_option("--out", out);
    auto* cb_family = cube->add_subcommand("family", "deg-regular PST cubelike graph");
    cb_family->add_option("--k", k)->required();
    cb_family->add_option("--deg", deg)->required();
    cb_family->add_option("--out", out);

    // family
    auto* family = app.add_subcommand("family", "PST graph families")->require_subcommand(1);
    auto* fam_t46 = family->add_subcommand("thm4.6", "merge-recursion regular family");
    fam_t46->add_option("--k", k)->required();
    fam_t46->add_option("--deg", deg)->required();
    fam_t46->add_option("--out", out);
    auto* fam_cube = family->add_subcommand("hypercube", "weighted hypercube");
    fam_cube->add_option("--weights", weights_csv)->required();
    fam_cube->add_option("--out", out);
    auto* fam_ex = family->add_subcommand("example4.4", "order-24 merge example");
    fam_ex->add_option("--out", out);

    // pgst
    auto* pgst = app.add_subcommand("pgst", "pretty good state transfer")->require_subcommand(1);
    auto* pgst_approx = pgst->add_subcommand("approx", "parity-class approximants");
    std::string weight_str = "sqrt(2)", class_str = "oe";
    pgst_approx->add_option("--w", weight_str);
    pgst_approx->add_option("--class", class_str);
    pgst_approx->add_option("--count", count);
    auto* pgst_seq = pgst->add_subcommand("sequence", "fidelity-approach sequence");
    pgst_seq->add_option("--g1", in)->required();
    pgst_seq->add_option("--g2", aux)->required();
    pgst_seq->add_option("--hadamard", hspec);
    pgst_seq->add_option("--w1", w1s);
    pgst_seq->add_option("--w2", w2s);
    pgst_seq->add_option("--pair", pair)->expected(2);
    pgst_seq->add_option("--count", count);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "sensitivity and sparsity")->require_subcommand(1);
    auto* an_timing = analyze->add_subcommand("timing", "fidelity drop under timing error");
    an_timing->add_option("--graph", in);
    an_timing->add_option("--hadamard", hspec);
    an_timing->add_option("--time", time_str);
    an_timing->add_option("--shift", h)->required();
    auto* an_sparse = analyze->add_subcommand("sparsity", "order bound over the cubelike corpus");
    an_sparse->add_option("--r", r)->required();
    an_sparse->add_option("--max-k", max_k);
    an_sparse->add_option("--parallel", parallel);
    an_sparse->add_option("--out", out);

    // fidelity
    auto* fid = app.add_subcommand("fidelity", "numeric oracle output")->require_subcommand(1);
    auto* fid_curve = fid->add_subcommand("curve", "fidelity curve CSV");
    fid_curve->add_option("--graph", in);
    fid_curve->add_option("--pair", pair)->expected(2);
    fid_curve->add_option("--tmax", tmax);
    fid_curve->add_option("--steps", steps);
    fid_curve->add_option("--out", out);

    CLI11_PARSE(app, argc, argv);

    auto certified = [&](const WeightedGraph& g) {
        HadamardMatrix hm = hspec.empty() ? default_hadamard(g.order()) : load_hadamard(hspec);
        return certify(g, hm);
    };
    auto load_set = [&] {
        if (!aux.empty()) return connection_set_from_text(read_source(aux));
        if (set_list.empty()) throw domain_error("need --set or --file");
        return parse_set(set_list, d_flag);
    };

    if (*had_gen) {
        write_sink(out, hadamard_to_text(catalog(order)));
    } else if (*had_check) {
        try {
            hadamard_from_text(read_source(in));
        } catch (const domain_error&) {
            std::cout << "false\n";
            return kExitNone;
        }
        std::cout << "true\n";
    } else if (*had_norm) {
        write_sink(out, hadamard_to_text(normalize(hadamard_from_text(read_source(in))).matrix));
    } else if (*g_build) {
        if ((complete_n == 0) == (empty_n == 0))
            throw domain_error("graph build: give exactly one of --complete or --empty");
        WeightedGraph g =
            complete_n ? WeightedGraph::complete(complete_n) : WeightedGraph::empty(empty_n);
        write_sink(out, graph_to_json(g));
    } else if (*g_comp) {
        write_sink(out, graph_to_json(complement(load_graph(in))));
    } else if (*g_join) {
        write_sink(out, graph_to_json(join(load_graph(in), load_graph(aux))));
    } else if (*g_prod) {
        write_sink(out, graph_to_json(cartesian_product(load_graph(in), load_graph(aux))));
    } else if (*g_merge) {
        write_sink(out, graph_to_json(merge(load_graph(in), load_graph(aux),
                                            MergeWeights{parse_rational(w1_rat),
                                                         parse_rational(w2_rat)})));
    } else if (*g_add) {
        write_sink(out, graph_to_json(add(load_graph(in), load_graph(aux))));
    } else if (*g_scale) {
        write_sink(out, graph_to_json(scale(load_graph(in), parse_rational(scale_str))));
    } else if (*cert_cmd) {
        write_sink(out, certificate_to_json(certified(load_graph(in))));
    } else if (*pst_check) {
        SpectralCertificate cert = certified(load_graph(in));
        bool hit = pst_mod4(cert, pair[0] - 1, pair[1] - 1);
        double p = evolve_fidelity(cert, PiTime{ratio(1, 2)}.seconds(), pair[0] - 1, pair[1] - 1);
        PstReport report;
        report.time = PiTime{ratio(1, 2)};
        report.verdict = hit ? Verdict::PST : Verdict::NONE;
        report.certifying_rule = hit ? "Thm3.2" : "Thm3.2-no-pair";
        if (hit) report.pairs.push_back({pair[0], pair[1]});
        report.fidelity_checked = p;
        std::cout << report_to_json(report) << '\n';
        return hit ? 0 : kExitNone;
    } else if (*pst_pairs_cmd) {
        PstReport report = pst_pairs(certified(load_graph(in)));
        write_sink(out, report_to_json(report));
        return report.verdict == Verdict::NONE ? kExitNone : 0;
    } else if (*cb_build) {
        write_sink(out, graph_to_json(build(load_set())));
    } else if (*cb_sigma) {
        ConnectionSet c = load_set();
        std::uint32_t s = sigma(c);
        std::string bits;
        for (unsigned b = c.dimension(); b-- > 0;) bits += (s >> b & 1) ? '1' : '0';
        std::cout << "sigma=" << bits << '\n' << report_to_json(pst_by_sigma(c)) << '\n';
    } else if (*cb_enum) {
        auto sets = enumerate(
            d_flag,
            [&](const ConnectionSet& c) {
                if (want_connected && !spans_space(c)) return false;
                if (want_sigma && sigma(c) == 0) return false;
                if (want_nonbipartite && all_odd_weight(c)) return false;
                if (want_degree && c.size() != want_degree) return false;
                return true;
            },
            parallel);
        for (const auto& c : sets) {
            std::string line;
            for (std::uint32_t e : c.elements()) {
                if (!line.empty()) line += ',';
                for (unsigned b = c.dimension(); b-- > 0;) line += (e >> b & 1) ? '1' : '0';
            }
            std::cout << line << '\n';
        }
        std::cerr << sets.size() << " sets\n";
    } else if (*cb_dec) {
        Decomposition dec = decompose_standard(load_graph(in).adjacency());
        write_sink(out, connection_set_to_text(dec.set));
        if (dec.loop_adjusted) std::cerr << "loop-adjusted (identity removed)\n";
    } else if (*cb_family) {
        write_sink(out, graph_to_json(regular_pst_family(k, deg)));
    } else if (*fam_t46) {
        CertifiedPst fam = regular_family(k, deg);
        write_sink(out, graph_to_json(fam.certificate.graph()));
        std::cerr << report_to_json(fam.report) << '\n';
    } else if (*fam_cube) {
        std::vector<Int> ws;
        std::string cur;
        for (char c : weights_csv + ",") {
            if (c == ',') {
                if (!cur.empty()) ws.push_back(Int(cur));
                cur.clear();
            } else if (c != ' ') {
                cur += c;
            }
        }
        CertifiedPst fam = weighted_hypercube(ws);
        write_sink(out, graph_to_json(fam.certificate.graph()));
        std::cerr << report_to_json(fam.report) << '\n';
    } else if (*fam_ex) {
        CertifiedPst fam = example_4_4();
        write_sink(out, graph_to_json(fam.certificate.graph()));
        std::cerr << report_to_json(fam.report) << '\n';
    } else if (*pgst_approx) {
        MergeWeight w = parse_weight(weight_str);
        if (!std::holds_alternative<QuadraticIrrational>(w))
            throw domain_error("pgst approx: weight must be irrational");
        for (const auto& [u, v] :
             pgst_approximants(std::get<QuadraticIrrational>(w), parse_parity_class(class_str),
                               count))
            std::cout << u.get_str() << '/' << v.get_str() << '\n';
    } else if (*pgst_seq) {
        WeightedGraph g1 = load_graph(in), g2 = load_graph(aux);
        HadamardMatrix hm = hspec.empty() ? default_hadamard(g1.order()) : load_hadamard(hspec);
        PgstResult res = pgst_sequence(certify(g1, hm), certify(g2, hm), parse_weight(w1s),
                                       parse_weight(w2s), pair[0], pair[1], count);
        std::cout << "rule=" << res.certifying_rule << '\n';
        for (const auto& step : res.steps)
            std::cout << step.u.get_str() << '/' << step.v.get_str() << " t0="
                      << time_to_string(step.t0) << " fidelity=" << step.fidelity
                      << " lower_bound=" << step.lower_bound << '\n';
    } else if (*an_timing) {
        TimingDrop td = timing_drop(certified(load_graph(in)), time_from_string(time_str), h);
        std::cout << "{\"drop\": " << td.drop << ", \"ring_sum\": " << td.ring_sum << "}\n";
    } else if (*an_sparse) {
        SparsityReport report = verify_sparsity_corpus(r, max_k, parallel);
        write_sink(out, sparsity_report_to_json(report));
        return report.bound_satisfied ? 0 : kExitNone;
    } else if (*fid_curve) {
        WeightedGraph g = load_graph(in);
        write_sink(out, fidelity_to_csv(fidelity_curve(g, pair[0] - 1, pair[1] - 1, tmax, steps)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const capacity_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const numeric_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const horizon_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
