// bookem: dispersable (3-page matching) subhamiltonian book embeddings of
// cubic planar bipartite multigraphs.
//
// Exit codes: 0 success / 1 verification failure / 2 hypothesis failure
//             3 search exhausted / 4 parse or input error.

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "bookem/bipartition.hpp"
#include "bookem/dispersable.hpp"
#include "bookem/generators.hpp"
#include "bookem/mel.hpp"
#include "bookem/solver.hpp"
#include "bookem/svg.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitExhausted = 3;
constexpr int kExitParse = 4;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bookem::ParseError("cannot open '" + path + "'", 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string violation_line(const bookem::Multigraph& g, const bookem::Violation& v) {
    auto edge_str = [&](bookem::EdgeId e) {
        return std::to_string(e) + " (" + std::to_string(g.edge(e).a) + "-" +
               std::to_string(g.edge(e).b) + ")";
    };
    switch (v.kind) {
        case bookem::Violation::Kind::Uncolored:
            return "violation: uncolored edge " + edge_str(v.e);
        case bookem::Violation::Kind::SharedEndpoint:
            return "violation: shared endpoint on page " + std::to_string(v.page) + ": edges " +
                   edge_str(v.e) + " and " + edge_str(v.f);
        case bookem::Violation::Kind::Crossing:
            return "violation: crossing on page " + std::to_string(v.page) + ": edges " +
                   edge_str(v.e) + " and " + edge_str(v.f);
    }
    return "violation: ?";
}

struct EmbedOutcome {
    int code = kExitOk;
    std::string summary;   // one line
    std::string embedding; // bytes to write
};

EmbedOutcome embed_one(const std::string& path, long long node_limit) {
    EmbedOutcome out;
    try {
        bookem::Multigraph g = bookem::read_mel(read_input(path));
        bookem::Embedding emb = bookem::embed_dispersable(g, node_limit);
        bookem::VerifyReport report =
            bookem::verify_matching_book_embedding(g, emb.order, emb.coloring);
        out.embedding = bookem::write_embedding(g, emb.order, emb.coloring);
        out.summary = "pages=" + std::to_string(report.page_count) +
                      " crossings_per_page=0 subhamiltonian=" +
                      (report.subhamiltonian ? "true" : "false");
    } catch (const bookem::NotCubic& e) {
        out.code = kExitHypothesis;
        out.summary = std::string("error: not cubic: ") + e.what();
    } catch (const bookem::NotBipartite& e) {
        out.code = kExitHypothesis;
        out.summary = std::string("error: not bipartite: ") + e.what();
    } catch (const bookem::NotPlanar& e) {
        std::string kind;
        if (e.verdict.witness) {
            kind = e.verdict.witness->kind == bookem::KuratowskiWitness::Kind::K5
                       ? " (K5 subdivision found)"
                       : " (K3,3 subdivision found)";
        }
        out.code = kExitHypothesis;
        out.summary = "error: not planar" + kind;
    } catch (const bookem::BaseCaseExhausted& e) {
        out.code = kExitExhausted;
        out.summary = std::string("error: ") + e.what();
    } catch (const bookem::GraphError& e) {
        out.code = kExitParse;
        out.summary = std::string("error: ") + e.what();
    }
    return out;
}

std::string derived_output_path(const std::string& input) {
    std::filesystem::path p(input);
    p.replace_extension(".emb");
    return p.string();
}

int run_embed(const std::vector<std::string>& inputs, const std::string& output,
              long long node_limit, int jobs) {
    if (inputs.size() > 1 && !output.empty()) {
        std::cerr << "error: -o is only valid with a single input\n";
        return kExitParse;
    }
    std::vector<EmbedOutcome> outcomes(inputs.size());
    if (jobs < 1) jobs = 1;
    if (inputs.size() == 1) {
        outcomes[0] = embed_one(inputs[0], node_limit);
        if (outcomes[0].code == kExitOk) {
            if (output.empty() || output == "-") {
                std::cout << outcomes[0].embedding;
            } else {
                std::ofstream out(output, std::ios::binary);
                out << outcomes[0].embedding;
            }
        }
        std::cerr << outcomes[0].summary << "\n";
        return outcomes[0].code;
    }

    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            size_t i = cursor.fetch_add(1);
            if (i >= inputs.size()) break;
            outcomes[i] = embed_one(inputs[i], node_limit);
            if (outcomes[i].code == kExitOk) {
                std::ofstream out(derived_output_path(inputs[i]), std::ios::binary);
                out << outcomes[i].embedding;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int code = kExitOk;
    for (size_t i = 0; i < inputs.size(); ++i) {
        std::cerr << inputs[i] << ": " << outcomes[i].summary << "\n";
        code = std::max(code, outcomes[i].code);
    }
    return code;
}

int run_verify(const std::string& graph_path, const std::string& emb_path) {
    bookem::Multigraph g = bookem::read_mel(read_input(graph_path));
    auto [omega, coloring] = bookem::read_embedding(read_input(emb_path), g);
    bookem::VerifyReport report = bookem::verify_matching_book_embedding(g, omega, coloring);

    std::cout << "pages=" << report.page_count << " max_degree=" << report.max_degree
              << " subhamiltonian=" << (report.subhamiltonian ? "true" : "false")
              << " dispersable=" << (report.dispersable_subhamiltonian() ? "true" : "false")
              << " ok=" << (report.ok ? "true" : "false") << "\n";
    for (const auto& v : report.violations) std::cout << violation_line(g, v) << "\n";
    return report.ok ? kExitOk : kExitVerifyFail;
}

int run_mbt(const std::string& graph_path, int pages, long long node_limit) {
    bookem::Multigraph g = bookem::read_mel(read_input(graph_path));
    bookem::MbtResult result = bookem::exact_mbt(g, pages, node_limit);
    switch (result.status) {
        case bookem::MbtResult::Status::Found:
            std::cout << "mbt=" << result.value << "\n";
            std::cout << bookem::write_embedding(g, result.order, result.coloring);
            return kExitOk;
        case bookem::MbtResult::Status::NoneWithinBudget:
            std::cout << "mbt>" << pages << "\n";
            return kExitOk;
        case bookem::MbtResult::Status::Exhausted:
            std::cerr << "error: node limit reached after " << result.nodes
                      << " nodes; value unknown\n";
            return kExitExhausted;
    }
    return kExitParse;
}

int run_gen(const std::string& kind, int prism_k, std::uint64_t seed, int pieces,
            const std::vector<std::string>& menu_names) {
    using bookem::PieceKind;
    if (kind == "theta") {
        std::cout << bookem::write_mel(bookem::gen_theta());
        return kExitOk;
    }
    if (kind == "prism") {
        std::cout << bookem::write_mel(bookem::gen_prism(prism_k));
        return kExitOk;
    }
    if (kind == "doubled-c4") {
        std::cout << bookem::write_mel(bookem::gen_doubled_c4());
        return kExitOk;
    }
    // glued
    std::vector<PieceKind> menu;
    for (const std::string& name : menu_names) {
        if (name == "theta") menu.push_back(PieceKind::Theta);
        else if (name == "cube") menu.push_back(PieceKind::Cube);
        else if (name == "hexprism") menu.push_back(PieceKind::HexPrism);
        else if (name == "doubled-c4") menu.push_back(PieceKind::DoubledC4);
        else {
            std::cerr << "error: unknown piece '" << name << "'\n";
            return kExitParse;
        }
    }
    bookem::GluedInstance inst = bookem::gen_random_glued(seed, pieces, menu);
    std::cout << "# glued corpus instance: seed=" << seed << " pieces=" << pieces << "\n";
    for (auto [a, b] : inst.planted_cuts) std::cout << "# planted-cut " << a << " " << b << "\n";
    std::cout << bookem::write_mel(inst.graph);
    return kExitOk;
}

int run_render(const std::string& graph_path, const std::string& emb_path, bool force) {
    bookem::Multigraph g = bookem::read_mel(read_input(graph_path));
    auto [omega, coloring] = bookem::read_embedding(read_input(emb_path), g);
    bookem::VerifyReport report = bookem::verify_matching_book_embedding(g, omega, coloring);
    if (!report.ok && !force) {
        std::cerr << "error: embedding fails verification (" << report.violations.size()
                  << " violations); pass --force to render anyway\n";
        return kExitVerifyFail;
    }
    bookem::RenderOptions opts;
    opts.highlight_conflicts = !report.ok;
    std::cout << bookem::render_arc_diagram(g, omega, coloring, opts);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dispersable book embeddings of cubic planar bipartite multigraphs"};
    app.require_subcommand(1);

    // embed
    auto* embed = app.add_subcommand("embed", "compute a 3-page matching book embedding");
    std::vector<std::string> embed_inputs;
    std::string embed_output;
    long long embed_nodes = bookem::kDefaultNodeLimit;
    int embed_jobs = 1;
    embed->add_option("input", embed_inputs, "MEL file(s), or - for stdin")->required();
    embed->add_option("-o,--output", embed_output, "embedding output path (single input)");
    embed->add_option("--node-limit", embed_nodes, "search node limit per base case");
    embed->add_option("--jobs", embed_jobs, "parallel workers across multiple inputs");

    // verify
    auto* verify = app.add_subcommand("verify", "check an embedding against its graph");
    std::string verify_graph, verify_emb;
    verify->add_option("graph", verify_graph, "MEL file")->required();
    verify->add_option("embedding", verify_emb, "embedding file")->required();

    // mbt
    auto* mbt = app.add_subcommand("mbt", "exact matching book thickness");
    std::string mbt_graph;
    int mbt_pages = 8;
    long long mbt_nodes = bookem::kDefaultNodeLimit;
    mbt->add_option("graph", mbt_graph, "MEL file")->required();
    mbt->add_option("--pages", mbt_pages, "page budget (proves mbt>budget if exceeded)");
    mbt->add_option("--node-limit", mbt_nodes, "total search node limit");

    // gen
    auto* gen = app.add_subcommand("gen", "generate corpus graphs as MEL");
    std::string gen_kind;
    int gen_prism_k = 2;
    std::uint64_t gen_seed = 1;
    int gen_pieces = 2;
    std::vector<std::string> gen_menu = {"theta", "cube", "hexprism", "doubled-c4"};
    gen->add_option("kind", gen_kind, "theta | prism | doubled-c4 | glued")
        ->required()
        ->check(CLI::IsMember({"theta", "prism", "doubled-c4", "glued"}));
    gen->add_option("k", gen_prism_k, "ring half-length for prism (>= 2)");
    gen->add_option("--seed", gen_seed, "random seed for glued");
    gen->add_option("--pieces", gen_pieces, "piece count for glued");
    gen->add_option("--menu", gen_menu, "piece kinds for glued")->delimiter(',');

    // render
    auto* render = app.add_subcommand("render", "arc-diagram SVG of an embedding");
    std::string render_graph, render_emb;
    bool render_force = false;
    render->add_option("graph", render_graph, "MEL file")->required();
    render->add_option("embedding", render_emb, "embedding file")->required();
    render->add_flag("--force", render_force, "render even if verification fails");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(embed)) return run_embed(embed_inputs, embed_output, embed_nodes, embed_jobs);
        if (app.got_subcommand(verify)) return run_verify(verify_graph, verify_emb);
        if (app.got_subcommand(mbt)) return run_mbt(mbt_graph, mbt_pages, mbt_nodes);
        if (app.got_subcommand(gen)) return run_gen(gen_kind, gen_prism_k, gen_seed, gen_pieces, gen_menu);
        if (app.got_subcommand(render)) return run_render(render_graph, render_emb, render_force);
    } catch (const bookem::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bookem::LoopRejected& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bookem::NotCubicBipartite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const bookem::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
