#include "orecycle/report.hpp"

#include <ostream>
#include <sstream>

#include "orecycle/graph6.hpp"

namespace orecycle {

nlohmann::json to_json(const Sigma2& s) {
    if (s.is_complete()) return "complete";
    return s.value();
}

nlohmann::json to_json(const Cycle& c) { return c.canonical().vertices; }

std::string format_cycle(const Cycle& c) {
    std::ostringstream s;
    const Cycle canon = c.canonical();
    for (std::size_t i = 0; i < canon.vertices.size(); ++i) s << (i ? " " : "") << canon.vertices[i];
    return s.str();
}

nlohmann::json condition_properties(const ConditionReport& c) {
    return {{"n", c.n},
            {"sigma2", to_json(c.sigma2)},
            {"delta", c.delta},
            {"biconnected", c.biconnected},
            {"bipartite", c.bipartite}};
}

nlohmann::json graph_record(const Graph& g, const std::string& command, nlohmann::json properties,
                            const std::optional<Cycle>& witness) {
    nlohmann::json r;
    r["key"] = graph6_encode(g);
    r["command"] = command;
    r["properties"] = std::move(properties);
    r["witness"] = witness ? to_json(*witness) : nlohmann::json(nullptr);
    return r;
}

namespace {

void write_list(std::ostream& out, const char* label, const std::vector<std::string>& keys) {
    out << "  " << label << " (" << keys.size() << "):";
    for (const auto& k : keys) out << ' ' << k;
    out << '\n';
}

}  // namespace

void write_report(std::ostream& out, const VerificationReport& r, OutputFormat format) {
    if (format == OutputFormat::records) {
        nlohmann::json summary{{"record", "summary"},
                               {"check", r.check},
                               {"n", r.n},
                               {"graphs_scanned", r.graphs_scanned},
                               {"condition_satisfying", r.condition_satisfying},
                               {"violations", r.violations},
                               {"exceptions", r.exceptions},
                               {"elapsed_seconds", r.elapsed.count()}};
        if (r.k) summary["k"] = *r.k;
        if (r.edge_threshold) summary["edge_threshold"] = *r.edge_threshold;
        out << summary.dump() << '\n';
        for (const auto& f : r.findings) {
            nlohmann::json rec{{"record", to_string(f.kind)},
                               {"key", f.key},
                               {"check", r.check},
                               {"detail", f.detail},
                               {"witness", f.witness ? to_json(*f.witness) : nlohmann::json(nullptr)}};
            out << rec.dump() << '\n';
        }
        return;
    }
    out << r.check;
    if (r.n > 0) out << " n=" << r.n;
    if (r.k) out << " k=" << *r.k;
    out << '\n';
    out << "  graphs scanned: " << r.graphs_scanned << '\n';
    out << "  condition satisfying: " << r.condition_satisfying << '\n';
    if (r.edge_threshold) out << "  edge threshold: " << *r.edge_threshold << '\n';
    write_list(out, "violations", r.violations);
    write_list(out, "exceptions", r.exceptions);
    for (const auto& f : r.findings) {
        out << "  " << to_string(f.kind) << ' ' << f.key << ": " << f.detail;
        if (f.witness) out << " [cycle " << format_cycle(*f.witness) << ']';
        out << '\n';
    }
    out << "  elapsed: " << r.elapsed.count() << " s\n";
}

}  // namespace orecycle
