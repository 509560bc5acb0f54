// Command-line front end: classification tables, per-graph analysis,
// graph operations, Clifford/point-scheme/rank invariants, matrix
// factorization tooling and the exhaustive conjecture scanner.
//
// Exit codes: 0 success, 1 mathematical failure (invalid factorization,
// violated check, stuck reduction), 2 usage or format error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "skewq/hilbert.hpp"
#include "skewq/json_io.hpp"
#include "skewq/report.hpp"

using nlohmann::json;
using namespace skewq;

namespace {

json read_json(const std::string& path) {
    if (path.empty() || path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    return json::parse(in);
}

void write_json(const std::string& path, const json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open '" + path + "'");
    out << j.dump(2) << "\n";
}

std::vector<int> parse_signs(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+" || tok == "+1" || tok == "1")
            out.push_back(1);
        else if (tok == "-" || tok == "-1")
            out.push_back(-1);
        else
            throw std::invalid_argument("bad sign '" + tok + "'");
    }
    return out;
}

void print_row(const ClassRow& row, bool as_json) {
    ClassificationReport rep;
    rep.n = row.representative.n();
    rep.rows.push_back(row);
    if (as_json)
        std::cout << rep.json()["classes"][0].dump(2) << "\n";
    else
        std::cout << rep.table();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"(+/-1)-skew quadric calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    bool use_json = false, use_table = false;
    int threads = 1;
    long long budget = 100000;
    unsigned long long seed = 0;
    app.add_flag("--json", use_json, "JSON output");
    app.add_flag("--table", use_table, "plain-text table output (default)");
    app.add_option("--threads", threads, "worker threads for scans");
    app.add_option("--budget", budget, "orbit search budget for reductions");
    app.add_option("--seed", seed, "seed for randomized harnesses (reserved)");

    int n = 0;
    std::string graph_text, in_path = "-", out_path = "-", signs_text;
    int at = 0, target = 0, by = 0, base = 0, max_degree = 10;
    bool force = false, oracle = false;

    auto* c_classify = app.add_subcommand("classify", "mutation classes with all invariants");
    c_classify->add_option("--n", n, "vertex count")->required();

    auto* c_analyze = app.add_subcommand("analyze", "full analysis of one graph");
    c_analyze->add_option("--graph", graph_text, "graph text form")->required();

    auto* c_reduce = app.add_subcommand("reduce", "reduction trace to a base case");
    c_reduce->add_option("--graph", graph_text)->required();

    auto* c_mutate = app.add_subcommand("mutate", "mutation at a vertex");
    c_mutate->add_option("--graph", graph_text)->required();
    c_mutate->add_option("--at", at, "vertex")->required();

    auto* c_rel = app.add_subcommand("relmutate", "relative mutation");
    c_rel->add_option("--graph", graph_text)->required();
    c_rel->add_option("--target", target, "vertex whose edges change")->required();
    c_rel->add_option("--by", by, "vertex XOR-ed in")->required();
    c_rel->add_flag("--force", force, "skip the isolated-vertex hypothesis");

    auto* c_cliff = app.add_subcommand("clifford", "Clifford algebra structure");
    c_cliff->add_option("--graph", graph_text)->required();
    c_cliff->add_option("--base", base, "base vertex (default n)");
    c_cliff->add_flag("--oracle", oracle, "run the brute-force center oracle");

    auto* c_ps = app.add_subcommand("pointscheme", "point scheme components");
    c_ps->add_option("--graph", graph_text)->required();

    auto* c_rank = app.add_subcommand("rank", "rank bounds of the quadric");
    c_rank->add_option("--graph", graph_text)->required();

    auto* c_mf = app.add_subcommand("mf", "matrix factorization tools");
    c_mf->require_subcommand(1);
    auto* mf_verify = c_mf->add_subcommand("verify", "check the factorization identities");
    auto* mf_reduce = c_mf->add_subcommand("reduce", "split off trivial summands");
    auto* mf_knorrer = c_mf->add_subcommand("knorrer", "double to a factorization of f+uv");
    mf_knorrer->add_option("--signs", signs_text, "commutation signs of u against x_i")->required();
    auto* mf_cone = c_mf->add_subcommand("cone", "mapping cone of a morphism");
    auto* mf_hilbert = c_mf->add_subcommand("hilbert", "Hilbert series of the cokernel");
    mf_hilbert->add_option("--max-degree", max_degree);
    mf_hilbert->add_flag("--oracle", oracle, "cross-check by exact linear algebra");
    for (auto* sc : {mf_verify, mf_reduce, mf_knorrer, mf_cone, mf_hilbert}) {
        sc->add_option("--in", in_path, "input JSON ('-' = stdin)");
        sc->add_option("--out", out_path, "output JSON ('-' = stdout)");
    }

    auto* c_scan = app.add_subcommand("conjecture-scan", "check the ell -> N bands per class");
    c_scan->add_option("--n", n)->required();

    auto* c_hc = app.add_subcommand("hilbert-check", "closed-form Hilbert series identities");
    c_hc->add_option("--n", n)->required();
    c_hc->add_option("--max-degree", max_degree);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*c_classify) {
            ClassificationReport rep = classification_report(n, budget, threads);
            if (use_json)
                std::cout << rep.json().dump(2) << "\n";
            else
                std::cout << rep.table();
            return 0;
        }
        if (*c_analyze) {
            print_row(analyze_graph(QuadGraph::parse(graph_text), budget), use_json);
            return 0;
        }
        if (*c_reduce) {
            QuadGraph g = QuadGraph::parse(graph_text);
            ReductionTrace trace = reduce_to_base(g, budget);
            if (use_json) {
                json steps = json::array();
                for (const auto& s : trace.steps)
                    steps.push_back(
                        {{"op", s.op}, {"params", s.params}, {"result", to_json(s.result)}});
                json j{{"steps", steps},
                       {"multiplicity_log2", trace.multiplicity_log2},
                       {"stuck", trace.stuck()}};
                if (!trace.stuck()) {
                    j["terminal"] = to_json(*trace.terminal);
                    j["descriptor"] = *trace.descriptor();
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& s : trace.steps) {
                    std::cout << s.op << "(";
                    for (size_t i = 0; i < s.params.size(); ++i)
                        std::cout << (i ? "," : "") << s.params[i];
                    std::cout << ") -> " << s.result.str() << "\n";
                }
                if (trace.stuck())
                    std::cout << "stuck\n";
                else
                    std::cout << "terminal " << trace.terminal->str() << "; descriptor 2^"
                              << trace.multiplicity_log2 << " x "
                              << (trace.terminal->n() == 1 ? 1 : 2) << " = "
                              << *trace.descriptor() << "\n";
            }
            return trace.stuck() ? 1 : 0;
        }
        if (*c_mutate) {
            QuadGraph g = mutate(QuadGraph::parse(graph_text), at);
            std::cout << (use_json ? to_json(g).dump() : g.str()) << "\n";
            return 0;
        }
        if (*c_rel) {
            QuadGraph g = QuadGraph::parse(graph_text);
            QuadGraph h = force ? relative_mutate_forced(g, target, by)
                                : relative_mutate(g, target, by);
            std::cout << (use_json ? to_json(h).dump() : h.str()) << "\n";
            return 0;
        }
        if (*c_cliff) {
            QuadGraph g = QuadGraph::parse(graph_text);
            SignSystem eps = g.to_sign_system();
            int b = base == 0 ? eps.n() : base;
            CliffordStructure s = structure(eps, b);
            json j{{"m", s.m},
                   {"rankB", s.rankB},
                   {"components", s.components},
                   {"block", s.block},
                   {"descriptor", s.descriptor()}};
            if (oracle) {
                CenterOracleReport rep = center_oracle(CliffordPresentation::build(eps, b));
                j["center_dim"] = rep.center_dim;
                j["radical_zero"] = rep.radical_zero;
                if (rep.center_dim != s.components || !rep.radical_zero) {
                    std::cerr << "oracle disagrees with the structure computation\n";
                    std::cout << j.dump(2) << "\n";
                    return 1;
                }
            }
            if (use_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "C(A) = " << s.components << " x M_" << s.block
                          << "(k); descriptor N = " << s.descriptor() << "\n";
            return 0;
        }
        if (*c_ps) {
            QuadGraph g = QuadGraph::parse(graph_text);
            PointScheme ps = point_scheme(g.to_sign_system());
            if (use_json) {
                std::cout << json{{"n", ps.n},
                                  {"neg_triangles", ps.neg_triangles},
                                  {"components", ps.components},
                                  {"ell", ps.ell}}
                                 .dump(2)
                          << "\n";
            } else {
                for (const auto& comp : ps.components) {
                    if (comp.empty()) {
                        std::cout << "P^" << ps.n - 1 << "\n";
                        continue;
                    }
                    std::cout << "V(";
                    for (size_t i = 0; i < comp.size(); ++i)
                        std::cout << (i ? "," : "") << "x" << comp[i];
                    std::cout << ") ~ P^" << ps.n - 1 - (int)comp.size() << "\n";
                }
                std::cout << "l = " << ps.ell << "\n";
            }
            return 0;
        }
        if (*c_rank) {
            QuadGraph g = QuadGraph::parse(graph_text);
            SignSystem eps = g.to_sign_system();
            RankBounds rb = rank_bounds(eps);
            json j{{"lo", rb.lo},
                   {"hi", rb.hi},
                   {"high_rank", high_rank_str(high_rank(eps))},
                   {"smooth", is_smooth(eps)}};
            if (rb.exact) j["exact"] = *rb.exact;
            if (use_json)
                std::cout << j.dump(2) << "\n";
            else
                std::cout << "rank in [" << rb.lo << "," << rb.hi << "]"
                          << (rb.exact ? " (exact)" : "")
                          << "; high rank: " << j["high_rank"].get<std::string>()
                          << "; smooth: " << (j["smooth"].get<bool>() ? "yes" : "no") << "\n";
            return 0;
        }
        if (*c_mf) {
            if (*mf_verify) {
                MatrixFactorization mf = mf_from_json(read_json(in_path));
                MFVerifyReport rep = verify(mf);
                std::cout << rep.summary() << "\n";
                return rep.valid ? 0 : 1;
            }
            if (*mf_reduce) {
                MatrixFactorization mf = mf_from_json(read_json(in_path));
                ReduceResult res = reduce(mf);
                std::cerr << "split " << res.split_count << " trivial summand(s)\n";
                write_json(out_path, to_json(res.mf));
                return 0;
            }
            if (*mf_knorrer) {
                MatrixFactorization mf = mf_from_json(read_json(in_path));
                write_json(out_path, to_json(knorrer_extend(mf, parse_signs(signs_text))));
                return 0;
            }
            if (*mf_cone) {
                json j = read_json(in_path);
                MFMorphism mu;
                mu.source = mf_from_json(j.at("source"));
                mu.target = mf_from_json(j.at("target"));
                auto matrix = [&](const json& rows, int r, int c) {
                    if ((int)rows.size() != r) throw std::invalid_argument("bad morphism shape");
                    PolyMatrix m;
                    for (const json& row : rows) {
                        if ((int)row.size() != c)
                            throw std::invalid_argument("bad morphism shape");
                        std::vector<SkewPoly> out;
                        for (const json& cell : row)
                            out.push_back(poly_from_terms_json(mu.source.ctx, cell));
                        m.push_back(std::move(out));
                    }
                    return m;
                };
                mu.M0 = matrix(j.at("M0"), mu.target.r, mu.source.r);
                mu.M1 = matrix(j.at("M1"), mu.target.r, mu.source.r);
                std::string bad = morphism_violation(mu);
                if (!bad.empty()) {
                    std::cerr << "not a morphism: " << bad << "\n";
                    return 1;
                }
                write_json(out_path, to_json(cone(mu)));
                return 0;
            }
            if (*mf_hilbert) {
                MatrixFactorization mf = mf_from_json(read_json(in_path));
                std::vector<long long> h = coker_hilbert(mf, max_degree);
                json j{{"max_degree", max_degree}, {"coefficients", h}};
                if (oracle) {
                    std::vector<long long> o = coker_dims_oracle(mf, max_degree);
                    j["oracle"] = o;
                    if (o != h) {
                        std::cerr << "oracle disagrees with the closed form\n";
                        std::cout << j.dump(2) << "\n";
                        return 1;
                    }
                }
                std::cout << j.dump(2) << "\n";
                return 0;
            }
        }
        if (*c_scan) {
            ConjectureScanReport rep = conjecture_scan(n, threads);
            if (use_json)
                std::cout << rep.json().dump(2) << "\n";
            else
                std::cout << rep.table();
            // Violations are findings, not failures: the scan itself
            // succeeded. Callers read the report.
            return 0;
        }
        if (*c_hc) {
            HilbertCheckReport rep = hilbert_checks(n, max_degree);
            if (use_json) {
                std::cout << json{{"n", rep.n},
                                  {"max_degree", rep.max_degree},
                                  {"ok", rep.ok},
                                  {"failures", rep.failures},
                                  {"H_S", rep.h_S},
                                  {"H_A", rep.h_A},
                                  {"H_A_shriek", rep.h_A_shriek}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << (rep.ok ? "ok" : "FAILED") << "\n";
                for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
            }
            return rep.ok ? 0 : 1;
        }
    } catch (const json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NoIsolatedVertex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const RelationViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
