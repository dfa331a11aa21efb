#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

struct CrossCounts {
    std::size_t red = 0;
    std::size_t blue = 0;
    std::size_t built() const { return red + blue; }
};

// Built edge counts between disjoint nonempty vertex sets.
CrossCounts cross_counts(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b);

// |red cross edges| / |built cross edges|; throws GraphError{NoBuiltEdges}.
Rational red_density(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b);
Rational blue_density(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b);

// eps <= d_R <= 1 - eps (closed on both ends).
bool is_color_balanced(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b, const Rational& eps);
bool is_balanced_density(const Rational& d_red, const Rational& eps);

class PartitionLayout {
public:
    // Validates disjointness, equal part sizes and range.
    PartitionLayout(std::vector<VertexSet> parts, int vertex_count);

    // Parts {0..Y-1}, {Y..2Y-1}, ... over the first X*Y vertices.
    static PartitionLayout contiguous(int vertex_count, int part_count, int part_size);

    int part_count() const { return static_cast<int>(parts_.size()); }
    int part_size() const { return parts_.empty() ? 0 : static_cast<int>(parts_.front().size()); }
    const VertexSet& part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<VertexSet>& parts() const { return parts_; }

    // Every pair with endpoints in two different parts, lexicographic.
    std::vector<Pair> cross_pairs() const;
    // Every pair inside one part, lexicographic.
    std::vector<Pair> within_pairs(int part) const;

private:
    std::vector<VertexSet> parts_;
};

enum class ReducedLabel { Red, Blue, None };

// Parts as vertices; (i,j) is Red when d_R > 1 - eps, Blue when d_R < eps.
class ReducedGraph {
public:
    ReducedGraph(int part_count, Rational eps);

    int part_count() const { return parts_; }
    const Rational& epsilon() const { return eps_; }
    ReducedLabel label(int i, int j) const { return labels_[index(i, j)]; }
    const Rational& density(int i, int j) const { return densities_[index(i, j)]; }
    bool is_complete() const;

    void set(int i, int j, ReducedLabel label, Rational d_red);

    // Largest set of parts pairwise joined by one color; ties prefer Blue.
    struct MonoPartClique {
        Color color;
        std::vector<int> parts;
    };
    std::optional<MonoPartClique> largest_mono_clique() const;

private:
    std::size_t index(int i, int j) const;

    int parts_;
    Rational eps_;
    std::vector<ReducedLabel> labels_;
    std::vector<Rational> densities_;
};

ReducedLabel threshold_label(const Rational& d_red, const Rational& eps);

// Throws GraphError{IncompleteCrossEdges} if some cross-part pair is unbuilt.
ReducedGraph reduced_graph(const BichromaticGraph& g, const PartitionLayout& layout, const Rational& eps);

enum class IncidenceSide { Left, Right };

// Bipartite graph joining single vertices of one class to pairs of the other:
// (u, {v1, v2}) is an edge iff uv1 and uv2 are built with different colors.
class IncidenceGraph {
public:
    IncidenceGraph(IncidenceSide side, VertexSet left, std::vector<Pair> right);

    IncidenceSide side() const { return side_; }
    const VertexSet& left_vertices() const { return left_; }
    const std::vector<Pair>& right_pairs() const { return right_; }
    std::size_t left_count() const { return left_.size(); }
    std::size_t right_count() const { return right_.size(); }
    std::size_t words_per_row() const { return words_; }

    std::span<const Word> row(std::size_t left_index) const {
        return {rows_.data() + left_index * words_, words_};
    }
    bool has_edge(std::size_t left_index, std::size_t right_index) const {
        return test_bit(row(left_index), right_index);
    }
    std::size_t degree(std::size_t left_index) const { return simd::popcount(row(left_index)); }
    std::size_t edge_count() const;

    void add_edge(std::size_t left_index, std::size_t right_index);

private:
    IncidenceSide side_;
    VertexSet left_;
    std::vector<Pair> right_;
    std::size_t words_;
    std::vector<Word> rows_;
};

// Left: singles from v1, pairs from v2. Right: the classes swapped.
IncidenceGraph incidence_graph(const BichromaticGraph& g, const VertexSet& v1, const VertexSet& v2, IncidenceSide side);

// Vertex-disjoint, both unbuilt, and the four cross pairs include at least
// one red and one blue built edge.
bool are_independent(const BichromaticGraph& g, const Pair& p, const Pair& q);

}  // namespace ramsey
