#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

class ExtremalError : public std::runtime_error {
public:
    enum class Code { DomainError, NotBipartiteComplete, NotBalanced, TooLarge };
    ExtremalError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// (t-1)^{1/s} (m-s+1) n^{1-1/s} + (s-1) n, with the root taken to 20 binary
// places and rounded up. Requires m >= s >= 1 and n >= t >= 1.
Rational kst_bound(long m, long n, long s, long t);

// Uncolored graph as bitset rows.
class SimpleGraph {
public:
    explicit SimpleGraph(int n);

    int vertex_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }
    std::size_t edge_count() const;
    bool has_edge(Vertex u, Vertex v) const { return test_bit(row(u), static_cast<std::size_t>(v)); }
    void add_edge(Vertex u, Vertex v);
    std::span<const Word> row(Vertex v) const {
        return {rows_.data() + static_cast<std::size_t>(v) * words_, words_};
    }
    std::span<const Word> rows() const { return rows_; }
    SimpleGraph complement() const;

    // Every built pair of g becomes an edge, whatever its color.
    static SimpleGraph underlying(const BichromaticGraph& g);
    // `N` then one `u v` line per edge; a trailing color letter is ignored.
    static SimpleGraph parse(std::string_view text);

private:
    int n_;
    std::size_t words_;
    std::vector<Word> rows_;
};

enum class SetKind { Clique, Independent };

struct HomogeneousSet {
    VertexSet vertices;
    SetKind kind = SetKind::Clique;
};

// The larger of a maximum clique of g and a maximum clique of its complement
// (the clique on a tie). Exact; at most 40 vertices.
HomogeneousSet es_extract(const SimpleGraph& g);
inline constexpr int kMaxExtractVertices = 40;

struct LeastDensityWitness {
    Rational eps;
    Rational delta;  // eps^5 / (2 (1 + eps))
    Rational mu;     // eps^2
    Rational nu;     // eps / (2 (1 + eps))
    int n0 = 0;
    // Vertices of the left class with at least mu*N0 neighbors of each color.
    VertexSet balanced_vertices;
    // Left vertices with at least (1 - mu) N0 red (blue) neighbors.
    VertexSet s_red;
    VertexSet s_blue;
    std::size_t e_hl = 0;
    std::size_t e_hr = 0;
    // max(e_HL, e_HR) >= delta * N0^3.
    bool dense_incidence = false;
    // |balanced| < nu * N0, and then whether e_HR >= |S_R| |S_B| (1 - 2mu) N0.
    bool few_balanced = false;
    bool intermediate_holds = true;
    // Every left vertex is balanced or lies in S_R or S_B.
    bool classes_cover = false;
};

// g restricted to left x right must be a complete bipartite bichromatic graph
// with |left| = |right| = N0 and eps <= d_R <= 1 - eps.
LeastDensityWitness verify_least_density(const BichromaticGraph& g, const VertexSet& left, const VertexSet& right,
                                         const Rational& eps);

}  // namespace ramsey
