#pragma once

#include <optional>
#include <span>

#include "ramsey/graph.hpp"

namespace ramsey {

// Row-major adjacency bitsets: row v is words [v*words, (v+1)*words).
struct AdjacencyView {
    std::span<const Word> data;
    int vertex_count = 0;
    std::size_t words = 0;

    std::span<const Word> row(Vertex v) const { return data.subspan(static_cast<std::size_t>(v) * words, words); }

    static AdjacencyView of(const BichromaticGraph& g, Color c) {
        return {g.rows(c), g.vertex_count(), g.words_per_row()};
    }
};

// Exact k-clique search restricted to `candidates`. Vertices are tried by
// descending degree; a branch is cut once fewer candidates remain than are
// still needed. Returns the clique sorted ascending.
std::optional<VertexSet> find_clique(const AdjacencyView& adj, std::span<const Word> candidates, int k);

// Exact maximum clique within `candidates` (branch and bound).
VertexSet max_clique(const AdjacencyView& adj, std::span<const Word> candidates);

std::optional<VertexSet> find_mono_clique(const BichromaticGraph& g, Color c, int k);

// A c-colored k-clique through `last_edge`, found as a (k-2)-clique of color c
// in the common c-neighborhood of its endpoints. Absent unless the pair is
// currently built with color c.
std::optional<VertexSet> incremental_clique_check(const BichromaticGraph& g, const Pair& last_edge, Color c, int k);

// Size of the largest c-clique that would contain `p` if p were colored c
// (2 + the maximum c-clique in the common c-neighborhood).
int largest_clique_through(const BichromaticGraph& g, const Pair& p, Color c);

VertexSet max_mono_clique(const BichromaticGraph& g, Color c);

}  // namespace ramsey
