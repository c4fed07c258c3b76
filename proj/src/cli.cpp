#include "orecycle/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "orecycle/closure.hpp"
#include "orecycle/cycles.hpp"
#include "orecycle/errors.hpp"
#include "orecycle/gallery.hpp"
#include "orecycle/graph6.hpp"
#include "orecycle/report.hpp"
#include "orecycle/verify.hpp"

namespace orecycle {

namespace {

struct Inputs {
    int n = 0;
    int k = 0;
    std::string g6;
    std::string file;
    std::string gallery;
    std::vector<int> params;
    int jobs = 1;
    std::string format = "text";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NamedGraph {
    std::string label;
    Graph graph;
    std::optional<GalleryEntry> entry;
};

bool looks_like_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        return line.find_first_of(" \t") != std::string::npos &&
               line.find_first_not_of("0123456789 \t\r") == std::string::npos;
    }
    return false;
}

std::vector<Graph> read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::istringstream reader(text);
    if (looks_like_edge_list(text)) return {read_edge_list(reader)};
    return read_graph6_lines(reader);
}

std::vector<NamedGraph> graphs_from(const Inputs& in) {
    const int sources = !in.g6.empty() + !in.file.empty() + !in.gallery.empty();
    if (sources != 1) throw UsageError("give exactly one of --g6, --file, --gallery");
    std::vector<NamedGraph> out;
    if (!in.g6.empty()) {
        out.push_back({in.g6, graph6_decode(in.g6), std::nullopt});
    } else if (!in.file.empty()) {
        for (Graph& g : read_file(in.file)) {
            std::string key = g.order() <= kGraph6MaxOrder ? graph6_encode(g) : in.file;
            out.push_back({std::move(key), std::move(g), std::nullopt});
        }
    } else {
        GalleryEntry e = gallery_entry(in.gallery, in.params);
        out.push_back({e.name, e.graph, e});
    }
    return out;
}

OutputFormat format_of(const Inputs& in) { return in.format == "records" ? OutputFormat::records : OutputFormat::text; }

void emit(std::ostream& out, const Inputs& in, const NamedGraph& ng, const std::string& command,
          const nlohmann::json& properties, const std::optional<Cycle>& witness, const std::string& text) {
    if (format_of(in) == OutputFormat::records) {
        nlohmann::json rec = graph_record(ng.graph, command, properties, witness);
        if (ng.entry) rec["gallery"] = ng.entry->name;
        out << rec.dump() << '\n';
    } else {
        out << ng.label << ": " << text << '\n';
    }
}

int cmd_closure(const Inputs& in, std::ostream& out) {
    for (const auto& ng : graphs_from(in)) {
        const ClosureTrace t = n_closure_with_trace(ng.graph);
        nlohmann::json added = nlohmann::json::array();
        std::ostringstream text;
        text << "added edges:";
        if (t.added.empty()) text << " none";
        for (const auto& step : t.added) {
            added.push_back({step.edge.first, step.edge.second, step.degree_sum});
            text << " " << step.edge.first << "-" << step.edge.second << "(" << step.degree_sum << ")";
        }
        const std::string result_key = graph6_encode(t.result);
        text << "; closure " << result_key << ", min degree " << t.result.min_degree()
             << (t.result.is_complete() ? ", complete" : "");
        emit(out, in, ng, "closure",
             {{"added", added},
              {"closure", result_key},
              {"closure_min_degree", t.result.min_degree()},
              {"complete", t.result.is_complete()}},
             std::nullopt, text.str());
    }
    return kExitClean;
}

int cmd_circumference(const Inputs& in, std::ostream& out) {
    for (const auto& ng : graphs_from(in)) {
        const auto c = circumference(ng.graph);
        if (c) {
            emit(out, in, ng, "circumference", {{"length", c->length}}, c->witness,
                 "circumference " + std::to_string(c->length) + " [cycle " + format_cycle(c->witness) + "]");
        } else {
            emit(out, in, ng, "circumference", {{"length", nullptr}, {"acyclic", true}}, std::nullopt, "acyclic");
        }
    }
    return kExitClean;
}

int cmd_hamilton(const Inputs& in, std::ostream& out) {
    for (const auto& ng : graphs_from(in)) {
        const auto c = find_hamiltonian_cycle(ng.graph);
        emit(out, in, ng, "hamilton", {{"hamiltonian", c.has_value()}}, c,
             c ? "hamiltonian [cycle " + format_cycle(*c) + "]" : std::string("not hamiltonian"));
    }
    return kExitClean;
}

int cmd_spectrum(const Inputs& in, std::ostream& out) {
    for (const auto& ng : graphs_from(in)) {
        const CycleSpectrum s = cycle_spectrum(ng.graph);
        std::ostringstream text;
        text << "cycle lengths {";
        bool first = true;
        for (int l : s.lengths) {
            text << (first ? "" : ",") << l;
            first = false;
        }
        text << "}" << (s.pancyclic ? ", pancyclic" : "");
        emit(out, in, ng, "spectrum", {{"lengths", s.lengths}, {"pancyclic", s.pancyclic}}, std::nullopt,
             text.str());
    }
    return kExitClean;
}

int cmd_long_cycle(const Inputs& in, std::ostream& out, std::ostream& err) {
    int status = kExitClean;
    for (const auto& ng : graphs_from(in)) {
        try {
            const GuaranteedCycle gc = guaranteed_long_cycle(ng.graph);
            nlohmann::json props{{"length", gc.cycle.length()}, {"route", to_string(gc.route)}};
            std::string text = "cycle of length " + std::to_string(gc.cycle.length()) + " via " + to_string(gc.route);
            if (gc.path_case) {
                props["case"] = to_string(*gc.path_case);
                text += std::string(" (") + to_string(*gc.path_case) + ")";
            }
            emit(out, in, ng, "long-cycle", props, gc.cycle, text + " [cycle " + format_cycle(gc.cycle) + "]");
        } catch (const TheoremViolation& e) {
            err << ng.label << ": " << e.what() << '\n';
            status = kExitViolations;
        }
    }
    return status;
}

int cmd_gallery(const Inputs& in, std::ostream& out) {
    if (in.gallery.empty()) {
        for (const auto& name : gallery_names()) out << name << '\n';
        return kExitClean;
    }
    const GalleryEntry e = gallery_entry(in.gallery, in.params);
    const auto checks = check_claims(e);
    bool ok = true;
    nlohmann::json claims = nlohmann::json::object();
    std::ostringstream text;
    text << graph6_encode(e.graph);
    for (const auto& c : checks) {
        ok = ok && c.ok;
        claims[c.property] = {{"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}};
        text << "\n  " << c.property << ": expected " << c.expected << ", actual " << c.actual
             << (c.ok ? "" : "  MISMATCH");
    }
    NamedGraph ng{e.name, e.graph, e};
    emit(out, in, ng, "gallery", {{"claims", claims}, {"all_claims_hold", ok}}, std::nullopt, text.str());
    return ok ? kExitClean : kExitViolations;
}

int cmd_ingest(const Inputs& in, std::ostream& out) {
    if (in.file.empty() && in.g6.empty()) throw UsageError("ingest needs --file or --g6");
    for (const auto& ng : graphs_from(in)) {
        const ConditionReport c = condition_report(ng.graph);
        nlohmann::json props = condition_properties(c);
        props["edges"] = ng.graph.edge_count();
        std::ostringstream text;
        text << "n " << c.n << ", edges " << ng.graph.edge_count() << ", sigma2 "
             << (c.sigma2.is_complete() ? std::string("complete") : std::to_string(c.sigma2.value())) << ", delta "
             << c.delta << ", " << (c.biconnected ? "2-connected" : "not 2-connected") << ", "
             << (c.bipartite ? "bipartite" : "not bipartite");
        emit(out, in, ng, "ingest", props, std::nullopt, text.str());
    }
    return kExitClean;
}

std::vector<Graph> corpus_of(const Inputs& in) {
    if (in.file.empty()) return {};
    return read_file(in.file);
}

int finish(const VerificationReport& r, const Inputs& in, std::ostream& out) {
    write_report(out, r, format_of(in));
    return r.clean() ? kExitClean : kExitViolations;
}

int cmd_verify_theorem2(const Inputs& in, std::ostream& out) {
    const VerifyOptions opts{in.jobs};
    if (!in.file.empty()) {
        const auto corpus = corpus_of(in);
        return finish(verify_theorem2(std::span<const Graph>(corpus), opts), in, out);
    }
    if (in.n == 0) throw UsageError("verify-theorem2 needs --n or --file");
    return finish(verify_theorem2(in.n, opts), in, out);
}

int cmd_verify_conjecture(const Inputs& in, std::ostream& out) {
    const VerifyOptions opts{in.jobs};
    if (in.k == 0) throw UsageError("verify-conjecture needs --k");
    if (!in.file.empty()) {
        const auto corpus = corpus_of(in);
        return finish(verify_conjecture(std::span<const Graph>(corpus), in.k, opts), in, out);
    }
    if (in.n == 0) throw UsageError("verify-conjecture needs --n or --file");
    return finish(verify_conjecture(in.n, in.k, opts), in, out);
}

int cmd_verify_hfs(const Inputs& in, std::ostream& out) {
    const VerifyOptions opts{in.jobs};
    if (!in.file.empty()) {
        const auto corpus = corpus_of(in);
        return finish(verify_hfs(std::span<const Graph>(corpus), opts), in, out);
    }
    if (in.n == 0) throw UsageError("verify-hfs needs --n or --file");
    return finish(verify_hfs(in.n, opts), in, out);
}

void add_graph_options(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--g6", in.g6, "graph as a graph6 string");
    cmd->add_option("--file", in.file, "graph6 lines or an edge list (\"n m\" then \"u v\" lines)");
    cmd->add_option("--gallery", in.gallery, "named gallery graph");
    cmd->add_option("--params", in.params, "gallery parameters, comma separated")->delimiter(',');
}

void add_common_options(CLI::App* cmd, Inputs& in) {
    cmd->add_option("--format", in.format, "output format")->check(CLI::IsMember({"text", "records"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Degree-sum conditions for Hamilton and long cycles"};
    app.name("orecycle");
    app.require_subcommand(1);
    Inputs in;

    struct Command {
        const char* name;
        const char* help;
        bool graph_input;
        bool verification;
    };
    const std::vector<Command> commands{
        {"verify-theorem2", "exhaustive check of the k=1 long-cycle theorem", false, true},
        {"verify-conjecture", "counterexample search for sigma2 >= n-k", false, true},
        {"verify-hfs", "exhaustive check of the pancyclicity edge threshold", false, true},
        {"closure", "n-closure with its trace", true, false},
        {"circumference", "longest cycle with a witness", true, false},
        {"hamilton", "exact Hamilton cycle search", true, false},
        {"long-cycle", "constructive cycle of length >= n-1", true, false},
        {"spectrum", "set of cycle lengths", true, false},
        {"gallery", "named constructions and their claims", true, false},
        {"ingest", "condition summary for each graph of a corpus", true, false},
    };
    std::map<std::string, CLI::App*> subs;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        add_common_options(sub, in);
        if (c.graph_input) add_graph_options(sub, in);
        if (c.verification) {
            sub->add_option("--n", in.n, "graph order")->check(CLI::Range(3, 64));
            sub->add_option("--file", in.file, "graph6 corpus, one graph per line");
            sub->add_option("--jobs", in.jobs, "worker threads")->check(CLI::PositiveNumber);
        }
        if (std::string(c.name) == "verify-conjecture") sub->add_option("--k", in.k, "deficiency k (cycle length n-k)");
        subs[c.name] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitClean;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (subs["verify-theorem2"]->parsed()) return cmd_verify_theorem2(in, out);
        if (subs["verify-conjecture"]->parsed()) return cmd_verify_conjecture(in, out);
        if (subs["verify-hfs"]->parsed()) return cmd_verify_hfs(in, out);
        if (subs["closure"]->parsed()) return cmd_closure(in, out);
        if (subs["circumference"]->parsed()) return cmd_circumference(in, out);
        if (subs["hamilton"]->parsed()) return cmd_hamilton(in, out);
        if (subs["long-cycle"]->parsed()) return cmd_long_cycle(in, out, err);
        if (subs["spectrum"]->parsed()) return cmd_spectrum(in, out);
        if (subs["gallery"]->parsed()) return cmd_gallery(in, out);
        if (subs["ingest"]->parsed()) return cmd_ingest(in, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Graph6Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "error: no subcommand\n";
    return kExitUsage;
}

}  // namespace orecycle
