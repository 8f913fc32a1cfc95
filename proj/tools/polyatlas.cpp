#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "polyatlas/analysis.hpp"
#include "polyatlas/canonical.hpp"
#include "polyatlas/corpus.hpp"
#include "polyatlas/decomp.hpp"
#include "polyatlas/expression.hpp"
#include "polyatlas/witness.hpp"

using namespace polyatlas;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUnknown = 2, kError = 3 };

void emit(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    return Json::parse(in);
}

// Accepts either a bare polytope document or one wrapped under "polytope".
Polytope polytope_in(const Json& j) { return polytope_from_json(j.contains("polytope") ? j.at("polytope") : j); }

int status_code(Status s) {
    switch (s) {
        case Status::Feasible: return kOk;
        case Status::Infeasible: return kNegative;
        case Status::Unknown: return kUnknown;
    }
    return kError;
}

Json verdict_json(int d, int f0, int f1, const FeasibilityVerdict& v) {
    Json j{{"dim", d}, {"f0", f0}, {"f1", f1}, {"status", to_string(v.status)}};
    if (v.rule != FeasibilityRule::None) j["rule"] = to_string(v.rule);
    if (!v.witness.empty()) j["witness"] = v.witness;
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

int default_max_vertices(int d) {
    switch (d) {
        case 3: return 12;
        case 4: return 10;
        case 5: return 13;
        default: return 2 * d + 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope toolkit: construction, excess analysis, decomposability, (f0, f1) atlas"};
    app.require_subcommand(1);

    std::string family, out_path;
    std::vector<std::string> params;
    auto* construct = app.add_subcommand("construct", "Build a polytope from a family name or expression");
    construct->add_option("family", family, "family name, e.g. pentasm, or a full expression")->required();
    construct->add_option("params", params, "integer parameters");
    construct->add_option("-o,--output", out_path, "output file (stdout if omitted)");

    std::string file;
    auto* analyze = app.add_subcommand("analyze", "Excess, facet properties and small-excess structure");
    analyze->add_option("file", file)->required();

    int depth = 1;
    auto* classify_cmd = app.add_subcommand("classify", "Decomposability verdict with a replayable certificate");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("--depth", depth, "facet recursion depth")->check(CLI::NonNegativeNumber);
    classify_cmd->add_option("-o,--output", out_path, "write polytope and certificate here");

    auto* verify = app.add_subcommand("verify-cert", "Replay a certificate produced by classify");
    verify->add_option("file", file)->required();

    std::string file_b;
    auto* iso = app.add_subcommand("iso", "Combinatorial equivalence of two polytopes");
    iso->add_option("a", file)->required();
    iso->add_option("b", file_b)->required();

    int dim = 0, vertices = 0, edges = 0;
    auto* wit = app.add_subcommand("witness", "Feasibility of (d, f0, f1) with a constructive witness");
    wit->add_option("--dim", dim)->required();
    wit->add_option("--vertices", vertices)->required();
    wit->add_option("--edges", edges)->required();

    int max_vertices = 0;
    auto* table = app.add_subcommand("table", "E(f0, d) rows with verdicts");
    table->add_option("--dim", dim)->required();
    table->add_option("--max-vertices", max_vertices)->required();

    auto* spec = app.add_subcommand("spectrum", "Achieved excess values");
    spec->add_option("--dim", dim)->required();
    spec->add_option("--max-vertices", max_vertices);

    int corpus_depth = 1;
    std::string catalog_path;
    auto* corpus = app.add_subcommand("corpus", "Generate a corpus and append it to a catalog");
    corpus->add_option("--dim", dim)->required();
    corpus->add_option("--depth", corpus_depth)->check(CLI::Range(0, 2));
    corpus->add_option("--catalog", catalog_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kError;
    }

    try {
        if (*construct) {
            std::string expr = family;
            if (!params.empty()) {
                expr += "(";
                for (size_t i = 0; i < params.size(); ++i) expr += (i ? "," : "") + params[i];
                expr += ")";
            }
            emit(to_json(evaluate_expression(expr)), out_path);
            return kOk;
        }
        if (*analyze) {
            emit(analysis_report(polytope_in(read_json(file))), "");
            return kOk;
        }
        if (*classify_cmd) {
            Polytope p = polytope_in(read_json(file));
            DecompCertificate c = classify(p, depth);
            emit(Json{{"polytope", to_json(p)}, {"certificate", certificate_to_json(c)}}, out_path);
            if (!out_path.empty()) std::cout << to_string(c.verdict) << '\n';
            return c.verdict == Verdict::Unknown ? kUnknown : kOk;
        }
        if (*verify) {
            Json j = read_json(file);
            Polytope p = polytope_in(j);
            CertificateCheck r = verify_certificate(p, certificate_from_json(j.at("certificate")));
            std::cout << (r.ok ? "valid" : "invalid: " + r.message) << '\n';
            return r.ok ? kOk : kNegative;
        }
        if (*iso) {
            bool same = is_isomorphic(polytope_in(read_json(file)), polytope_in(read_json(file_b)));
            std::cout << (same ? "isomorphic" : "not isomorphic") << '\n';
            return same ? kOk : kNegative;
        }
        if (*wit) {
            FeasibilityVerdict v = witness(dim, vertices, edges);
            emit(verdict_json(dim, vertices, edges, v), "");
            return status_code(v.status);
        }
        if (*table) {
            if (dim == 4 || dim == 5) shared_witness_search().extend(dim, max_vertices);
            for (int f0 = dim + 1; f0 <= max_vertices; ++f0)
                for (long long f1 = (1LL * dim * f0 + 1) / 2; f1 <= binomial2(f0); ++f1) {
                    FeasibilityVerdict v = witness(dim, f0, static_cast<int>(f1));
                    std::cout << verdict_json(dim, f0, static_cast<int>(f1), v).dump() << '\n';
                }
            return kOk;
        }
        if (*spec) {
            int bound = max_vertices > 0 ? max_vertices : default_max_vertices(dim);
            std::cout << Json{{"dim", dim}, {"max_vertices", bound}, {"excess", spectrum(dim, bound)}}.dump() << '\n';
            return kOk;
        }
        if (*corpus) {
            Catalog c = generate_corpus(dim, corpus_depth);
            catalog_store(c, catalog_path);
            std::cout << c.size() << " entries appended to " << catalog_path << '\n';
            return kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
