#include "orecycle/enumerate.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <string>
#include <unordered_set>

#include "orecycle/errors.hpp"

namespace orecycle {

namespace {

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), total_bits_(n_ * (n_ - 1) / 2) {
        std::vector<std::pair<int, Vertex>> by_degree;
        for (Vertex v = 0; v < n_; ++v) by_degree.emplace_back(g.degree(v), v);
        std::sort(by_degree.begin(), by_degree.end());
        for (int p = 0; p < n_; ++p) {
            const int d = by_degree[p].first;
            VertexSet cls = 0;
            for (auto [dv, v] : by_degree)
                if (dv == d) cls |= singleton(v);
            allowed_at_[p] = cls;
        }
    }

    CanonicalForm run() {
        assign(0, 0, 0);
        return {n_, best_, count_, best_labeling_};
    }

private:
    void assign(int position, VertexSet used, std::uint64_t prefix) {
        if (position == n_) {
            if (count_ == 0 || prefix < best_) {
                best_ = prefix;
                count_ = 1;
                best_labeling_.assign(labeling_.begin(), labeling_.begin() + n_);
            } else if (prefix == best_) {
                ++count_;
            }
            return;
        }
        const int known = (position + 1) * position / 2;
        for_each_member(allowed_at_[position] & ~used, [&](Vertex w) {
            std::uint64_t column = 0;
            for (int i = 0; i < position; ++i) column = (column << 1) | (g_.adjacent(labeling_[i], w) ? 1U : 0U);
            const std::uint64_t next = (prefix << position) | column;
            if (count_ != 0 && next > (best_ >> (total_bits_ - known))) return;
            labeling_[position] = w;
            assign(position + 1, used | singleton(w), next);
        });
    }

    const Graph& g_;
    int n_;
    int total_bits_;
    std::array<VertexSet, kMaxOrder> allowed_at_{};
    std::array<Vertex, kMaxOrder> labeling_{};
    std::uint64_t best_ = 0;
    std::uint64_t count_ = 0;
    std::vector<Vertex> best_labeling_;
};

Graph extend(const Graph& g, VertexSet neighborhood) {
    const int n = g.order();
    std::array<VertexSet, kMaxOrder> rows{};
    for (Vertex v = 0; v < n; ++v) rows[v] = g.neighbors(v) | (contains(neighborhood, v) ? singleton(n) : 0);
    rows[n] = neighborhood;
    return graph_from_adjacency(n + 1, std::span<const VertexSet>(rows.data(), static_cast<std::size_t>(n + 1)));
}

std::vector<GraphClass> next_level(const std::vector<GraphClass>& previous, int n) {
    std::vector<GraphClass> out;
    std::unordered_set<std::uint64_t> seen;
    for (const auto& cls : previous) {
        // Neighborhoods are tried from the largest mask down.
        for (std::uint64_t mask = first_n(n - 1) + 1; mask-- > 0;) {
            Graph g = extend(cls.graph, mask);
            CanonicalForm form = canonical_form(g);
            if (seen.insert(form.bits).second) out.push_back({std::move(g), std::move(form)});
        }
    }
    return out;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kCanonicalMaxOrder) {
        throw PreconditionError("canonical_form supports order <= " + std::to_string(kCanonicalMaxOrder));
    }
    return CanonicalSearch(g).run();
}

Graph canonical_graph(const Graph& g) {
    const CanonicalForm form = canonical_form(g);
    std::vector<Vertex> new_label(g.order());
    for (int p = 0; p < g.order(); ++p) new_label[form.labeling[p]] = p;
    return g.relabeled(new_label);
}

const std::vector<GraphClass>& enumerate_classes(int n) {
    if (n < 3 || n > kEnumerateMaxOrder) {
        throw PreconditionError("built-in enumeration covers 3 <= n <= " + std::to_string(kEnumerateMaxOrder) +
                                "; supply a graph6 corpus for other orders");
    }
    static std::mutex guard;
    static std::map<int, std::vector<GraphClass>> levels;
    std::lock_guard lock(guard);
    if (levels.empty()) {
        const Graph single = Graph::empty(1);
        levels[1].push_back({single, canonical_form(single)});
    }
    for (int k = levels.rbegin()->first + 1; k <= n; ++k) levels[k] = next_level(levels[k - 1], k);
    return levels.at(n);
}

std::vector<Graph> enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter) {
    std::vector<Graph> out;
    for (const auto& cls : enumerate_classes(n)) {
        if (!filter || filter(cls.graph)) out.push_back(cls.graph);
    }
    return out;
}

}  // namespace orecycle
