#include "lscat/category.hpp"
#include "lscat/certificates.hpp"
#include "lscat/collapse.hpp"
#include "lscat/contiguity.hpp"
#include "lscat/homology.hpp"
#include "lscat/io.hpp"
#include "lscat/pipeline.hpp"
#include "lscat/reconstruct.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

namespace fs = std::filesystem;
using namespace lscat;

namespace {

constexpr int kExitDecided = 0;
constexpr int kExitFail = 1;
constexpr int kExitIndeterminate = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;

struct GlobalOptions {
    int threads = 0; // 0 = all cores; results never depend on it
    unsigned seed = 0;
    long state_cap = kDefaultStateCap;
};

void print_complex(const SimplicialComplex& k) {
    std::cout << format_facets(k);
}

int cmd_core(const std::string& file, const std::string& out) {
    auto k = read_facets_file(file);
    auto seq = core(k);
    std::cout << "# core: " << seq.end.vertex_count() << " vertices, " << seq.steps.size()
              << " collapse steps\n";
    print_complex(seq.end);
    if (!out.empty()) write_collapse_certificate(seq, out);
    return kExitDecided;
}

int cmd_collapse(const std::string& file_m, const std::string& file_k, const std::string& out) {
    auto m = read_facets_file(file_m);
    auto k = read_facets_file(file_k);
    auto seq = find_collapse_to(m, k);
    if (!seq) {
        std::cout << "no strong collapse found\n";
        return kExitFail;
    }
    std::cout << "# strong collapse in " << seq->steps.size() << " steps\n";
    for (const auto& s : seq->steps)
        std::cout << s.removed << " dominated by " << s.dominator << "\n";
    if (!out.empty()) write_collapse_certificate(*seq, out);
    return kExitDecided;
}

int cmd_categorical(const std::string& file_u, const std::string& file_k,
                    const GlobalOptions& g, const std::string& out) {
    auto u = read_facets_file(file_u);
    auto k = read_facets_file(file_k);
    auto res = is_categorical(u, k, g.state_cap);
    switch (res.verdict) {
    case Tri::Yes:
        std::cout << "categorical: yes (constant at " << *res.witness_vertex << ", chain length "
                  << res.chain.size() - 1 << ", " << res.visited << " maps visited)\n";
        if (!out.empty()) write_contiguity_chain_certificate(res, u, k, out);
        return kExitDecided;
    case Tri::No:
        std::cout << "categorical: no (" << res.visited << " maps visited)\n";
        return kExitDecided;
    default:
        std::cout << "categorical: unknown (state cap " << g.state_cap << " hit)\n";
        return kExitIndeterminate;
    }
}

int cmd_cover_search(const std::string& file, int pieces, CoverMode mode,
                     const GlobalOptions& g, int attempts, const std::string& out) {
    auto k = read_facets_file(file);
    SearchBudget budget{attempts, g.seed, g.state_cap};
    auto cover = search_cover(k, pieces, mode, budget);
    if (!cover) {
        std::cout << "no cover found within budget (" << attempts << " attempts)\n";
        return kExitIndeterminate;
    }
    auto verified = verify_cover(k, cover->pieces, mode, g.state_cap);
    if (verified.verdict != Tri::Yes) {
        std::cout << "search produced a cover that failed verification: " << verified.diagnosis
                  << "\n";
        return kExitFail;
    }
    std::cout << "# verified " << to_string(mode) << " cover with " << cover->pieces.size()
              << " pieces\n";
    for (size_t i = 0; i < cover->pieces.size(); ++i) {
        std::cout << "# piece " << i << " (" << cover->pieces[i].facets().size() << " facets)\n";
        print_complex(cover->pieces[i]);
    }
    if (!out.empty()) write_cover_certificate(*verified.certificate, out);
    return kExitDecided;
}

int cmd_prove_no_2_cover(const std::string& file, const GlobalOptions& g, const std::string& out) {
    (void)g;
    auto k = read_facets_file(file);
    auto outcome = two_cover_prover(k);
    switch (outcome.kind) {
    case TwoCoverOutcome::Kind::Cover:
        std::cout << "a two-piece strongly collapsible cover exists\n";
        for (size_t i = 0; i < outcome.cover->cover.pieces.size(); ++i) {
            std::cout << "# piece " << i << "\n";
            print_complex(outcome.cover->cover.pieces[i]);
        }
        if (!out.empty()) write_cover_certificate(*outcome.cover, out);
        return kExitDecided;
    case TwoCoverOutcome::Kind::Impossible:
        std::cout << "impossible: no cover by two strongly collapsible subcomplexes\n"
                  << outcome.impossibility->digest() << "\n";
        if (!out.empty()) write_impossibility_certificate(*outcome.impossibility, out);
        return kExitDecided;
    default:
        std::cout << "resource cap hit: " << outcome.resource_note << "\n";
        return kExitResource;
    }
}

int cmd_h1(const std::string& file) {
    auto k = read_facets_file(file);
    std::cout << h1_rank_mod2(k) << "\n";
    return kExitDecided;
}

int cmd_reconstruct(const std::string& out_dir, int limit, long budget, bool full_pool) {
    fs::create_directories(out_dir);
    auto cs = ConstraintSet::bundled_example();
    SearchOutcome outcome;
    std::string phase;
    if (full_pool) {
        outcome = search_K(cs, limit, budget);
        phase = "full pool";
    } else {
        auto restricted = cs;
        restricted.candidate_pool = column_local_pool(cs);
        outcome = search_K(restricted, limit, budget);
        phase = "column-local pool";
        if (outcome.solutions.empty()) {
            outcome = search_K(cs, limit, budget);
            phase = "full pool (fallback)";
        }
    }
    std::cout << "# " << phase << ": " << outcome.nodes << " nodes, "
              << outcome.solutions.size() << " solution(s)"
              << (outcome.exhausted ? "" : " (budget hit)") << "\n";

    nlohmann::json audit_report = nlohmann::json::array();
    for (size_t i = 0; i < outcome.solutions.size(); ++i) {
        const auto& k = outcome.solutions[i];
        std::string name = "K" + std::to_string(i + 1);
        write_facets_file(k, (fs::path(out_dir) / (name + ".cplx")).string());
        auto audit = audit_constraints(k, cs);
        audit_report.push_back({{"solution", name + ".cplx"},
                                {"constraints_satisfied", audit.ok},
                                {"failures", audit.failures},
                                {"f_vector", k.f_vector().str()}});
        std::cout << "# wrote " << name << ".cplx (constraints "
                  << (audit.ok ? "satisfied" : "VIOLATED") << ")\n";
    }
    {
        nlohmann::json j{{"nodes", outcome.nodes},
                         {"exhausted", outcome.exhausted},
                         {"solutions", audit_report}};
        std::ofstream f(fs::path(out_dir) / "audit.json");
        f << dump_canonical(envelope("reconstruction-audit", std::move(j)));
    }
    if (!outcome.solutions.empty()) return kExitDecided;
    return outcome.exhausted ? kExitFail : kExitIndeterminate;
}

int cmd_verify_paper(const std::string& k_file, const std::string& out_report,
                     const GlobalOptions& g, int limit, long budget) {
    std::optional<SimplicialComplex> k;
    if (!k_file.empty()) {
        k = read_facets_file(k_file);
    } else {
        std::cout << "# no --k given; reconstructing first\n";
        PipelineOptions opt{g.seed, g.state_cap, 400, kForestCapPerLeaf};
        auto res = find_verified_example(limit, budget, opt);
        bool budget_ok = res.heuristic.exhausted && (!res.full || res.full->exhausted);
        if (!res.k) {
            std::cout << "no reconstructed solution passed the full verification ("
                      << res.solutions_tried << " tried)\n";
            return budget_ok ? kExitFail : kExitIndeterminate;
        }
        if (!out_report.empty()) write_report(*res.report, out_report);
        for (const auto& c : res.report->checks)
            std::cout << c.id << " " << c.status << ": " << c.claim << "\n";
        std::cout << "overall: pass\n";
        return kExitDecided;
    }

    PipelineOptions opt{g.seed, g.state_cap, 400, kForestCapPerLeaf};
    auto rep = verify_paper(*k, opt);
    if (!out_report.empty()) write_report(rep, out_report);
    for (const auto& c : rep.checks)
        std::cout << c.id << " " << c.status << ": " << c.claim << "\n";
    std::cout << "overall: " << rep.overall << "\n";
    if (rep.overall == "pass") return kExitDecided;
    return rep.overall == "fail" ? kExitFail : kExitIndeterminate;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong homotopy toolkit: cores, contiguity, simplicial LS category"};
    app.require_subcommand(1);

    GlobalOptions g;
    app.add_option("--threads", g.threads, "worker threads (results are thread-count independent)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "seed for heuristic searches");
    app.add_option("--state-cap", g.state_cap, "visited-map cap for contiguity searches")
        ->check(CLI::PositiveNumber);

    std::string file, file2, out, out_dir = "reconstructed";
    int pieces = 2;
    int attempts = 400;
    int limit = 4;
    long budget = 200'000'000;

    auto* c_core = app.add_subcommand("core", "strong-collapse a complex to its core");
    c_core->add_option("file", file)->required();
    c_core->add_option("--out", out, "write the collapse certificate here");

    auto* c_collapse = app.add_subcommand("collapse", "find a strong collapse from M down to K");
    c_collapse->add_option("fileM", file)->required();
    c_collapse->add_option("fileK", file2)->required();
    c_collapse->add_option("--out", out);

    auto* c_cat = app.add_subcommand("categorical", "is U a categorical subcomplex of K");
    c_cat->add_option("fileU", file)->required();
    c_cat->add_option("fileK", file2)->required();
    c_cat->add_option("--out", out, "write the contiguity-chain certificate here");

    auto* c_scat = app.add_subcommand("scat", "search for a categorical cover with k pieces");
    c_scat->add_option("file", file)->required();
    c_scat->add_option("--pieces", pieces)->check(CLI::PositiveNumber);
    c_scat->add_option("--attempts", attempts)->check(CLI::PositiveNumber);
    c_scat->add_option("--out", out);

    auto* c_gscat =
        app.add_subcommand("gscat", "search for a strongly collapsible cover with k pieces");
    c_gscat->add_option("file", file)->required();
    c_gscat->add_option("--pieces", pieces)->check(CLI::PositiveNumber);
    c_gscat->add_option("--attempts", attempts)->check(CLI::PositiveNumber);
    c_gscat->add_option("--out", out);

    auto* c_prove = app.add_subcommand(
        "prove-no-2-cover", "decide exactly whether two strongly collapsible pieces cover the input");
    c_prove->add_option("file", file)->required();
    c_prove->add_option("--out", out);

    auto* c_h1 = app.add_subcommand("h1", "first Z/2 Betti number");
    c_h1->add_option("file", file)->required();

    bool full_pool = false;
    auto* c_rec = app.add_subcommand("reconstruct",
                                     "search for complexes matching the bundled constraint set");
    c_rec->add_option("--out", out_dir);
    c_rec->add_option("--limit", limit)->check(CLI::PositiveNumber);
    c_rec->add_option("--budget", budget)->check(CLI::PositiveNumber);
    c_rec->add_flag("--full-pool", full_pool,
                    "skip the column-locality heuristic and search the full pool only");

    auto* c_verify = app.add_subcommand("verify-paper",
                                        "run the full category-gap verification pipeline");
    c_verify->add_option("--k", file, "facet file for K (otherwise reconstruct first)");
    c_verify->add_option("--out", out, "write the JSON report here");
    c_verify->add_option("--limit", limit)->check(CLI::PositiveNumber);
    c_verify->add_option("--budget", budget)->check(CLI::PositiveNumber);

    // global flags may follow the subcommand
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (g.threads == 0) g.threads = (int)std::thread::hardware_concurrency();

    try {
        if (c_core->parsed()) return cmd_core(file, out);
        if (c_collapse->parsed()) return cmd_collapse(file, file2, out);
        if (c_cat->parsed()) return cmd_categorical(file, file2, g, out);
        if (c_scat->parsed())
            return cmd_cover_search(file, pieces, CoverMode::Categorical, g, attempts, out);
        if (c_gscat->parsed())
            return cmd_cover_search(file, pieces, CoverMode::StronglyCollapsible, g, attempts, out);
        if (c_prove->parsed()) return cmd_prove_no_2_cover(file, g, out);
        if (c_h1->parsed()) return cmd_h1(file);
        if (c_rec->parsed()) return cmd_reconstruct(out_dir, limit, budget, full_pool);
        if (c_verify->parsed()) return cmd_verify_paper(file, out, g, limit, budget);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
