#include "ramsey/clique.hpp"

#include <algorithm>
#include <numeric>

namespace ramsey {

namespace {

class CliqueSearch {
public:
    explicit CliqueSearch(const AdjacencyView& adj) : adj_(adj), order_(static_cast<std::size_t>(adj.vertex_count)) {
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<std::size_t> deg(order_.size());
        for (Vertex v = 0; v < adj.vertex_count; ++v) deg[static_cast<std::size_t>(v)] = simd::popcount(adj.row(v));
        std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
            return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)];
        });
    }

    std::optional<VertexSet> find(std::span<const Word> candidates, int k) {
        prepare(candidates, static_cast<std::size_t>(k) + 1);
        VertexSet clique;
        if (!extend(0, k, clique)) return std::nullopt;
        std::sort(clique.begin(), clique.end());
        return clique;
    }

    VertexSet maximum(std::span<const Word> candidates) {
        prepare(candidates, static_cast<std::size_t>(adj_.vertex_count) + 1);
        VertexSet clique;
        best_.clear();
        grow(0, clique);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    void prepare(std::span<const Word> candidates, std::size_t depth) {
        scratch_.assign(depth * adj_.words, 0);
        std::copy_n(candidates.begin(), std::min(candidates.size(), adj_.words), scratch_.begin());
    }

    std::span<Word> level(std::size_t depth) { return {scratch_.data() + depth * adj_.words, adj_.words}; }

    bool extend(std::size_t depth, int need, VertexSet& clique) {
        if (need <= 0) return true;
        auto cand = level(depth);
        for (const Vertex v : order_) {
            if (!test_bit(cand, static_cast<std::size_t>(v))) continue;
            if (simd::popcount(cand) < static_cast<std::size_t>(need)) return false;
            clique.push_back(v);
            if (need == 1) return true;
            simd::and_into(level(depth + 1), cand, adj_.row(v));
            if (extend(depth + 1, need - 1, clique)) return true;
            clique.pop_back();
            clear_bit(cand, static_cast<std::size_t>(v));
        }
        return false;
    }

    void grow(std::size_t depth, VertexSet& clique) {
        auto cand = level(depth);
        if (clique.size() > best_.size()) best_ = clique;
        for (const Vertex v : order_) {
            if (!test_bit(cand, static_cast<std::size_t>(v))) continue;
            if (clique.size() + simd::popcount(cand) <= best_.size()) return;
            clique.push_back(v);
            simd::and_into(level(depth + 1), cand, adj_.row(v));
            grow(depth + 1, clique);
            clique.pop_back();
            clear_bit(cand, static_cast<std::size_t>(v));
        }
    }

    AdjacencyView adj_;
    std::vector<Vertex> order_;
    std::vector<Word> scratch_;
    VertexSet best_;
};

std::vector<Word> all_vertices(int n) {
    std::vector<Word> mask((static_cast<std::size_t>(n) + 63) / 64, 0);
    for (int v = 0; v < n; ++v) set_bit(mask, static_cast<std::size_t>(v));
    return mask;
}

}  // namespace

std::optional<VertexSet> find_clique(const AdjacencyView& adj, std::span<const Word> candidates, int k) {
    if (k < 1) throw GraphError(GraphError::Code::InvalidArgument, "clique size must be at least 1");
    if (k > adj.vertex_count) return std::nullopt;
    return CliqueSearch(adj).find(candidates, k);
}

VertexSet max_clique(const AdjacencyView& adj, std::span<const Word> candidates) {
    return CliqueSearch(adj).maximum(candidates);
}

std::optional<VertexSet> find_mono_clique(const BichromaticGraph& g, Color c, int k) {
    return find_clique(AdjacencyView::of(g, c), all_vertices(g.vertex_count()), k);
}

std::optional<VertexSet> incremental_clique_check(const BichromaticGraph& g, const Pair& last_edge, Color c, int k) {
    if (k < 1) throw GraphError(GraphError::Code::InvalidArgument, "clique size must be at least 1");
    if (g.color(last_edge.u, last_edge.v) != c) return std::nullopt;
    if (k <= 2) {
        if (k == 1) return VertexSet{last_edge.u};
        return VertexSet{last_edge.u, last_edge.v};
    }
    std::vector<Word> common(g.words_per_row());
    simd::and_into(common, g.neighbors(last_edge.u, c), g.neighbors(last_edge.v, c));
    auto rest = find_clique(AdjacencyView::of(g, c), common, k - 2);
    if (!rest) return std::nullopt;
    rest->push_back(last_edge.u);
    rest->push_back(last_edge.v);
    std::sort(rest->begin(), rest->end());
    return rest;
}

int largest_clique_through(const BichromaticGraph& g, const Pair& p, Color c) {
    std::vector<Word> common(g.words_per_row());
    simd::and_into(common, g.neighbors(p.u, c), g.neighbors(p.v, c));
    return 2 + static_cast<int>(max_clique(AdjacencyView::of(g, c), common).size());
}

VertexSet max_mono_clique(const BichromaticGraph& g, Color c) {
    return max_clique(AdjacencyView::of(g, c), all_vertices(g.vertex_count()));
}

}  // namespace ramsey
