#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramsey/simd/bitset_kernels.hpp"

namespace ramsey {

using Vertex = int;
using VertexSet = std::vector<Vertex>;
using simd::Word;

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
constexpr char color_letter(Color c) { return c == Color::Red ? 'R' : 'B'; }
const char* color_name(Color c);

enum class PairState : std::uint8_t { Unbuilt = 0, Red = 1, Blue = 2 };

constexpr PairState built_state(Color c) { return c == Color::Red ? PairState::Red : PairState::Blue; }

// Unordered vertex pair, stored with u < v.
struct Pair {
    Vertex u = 0;
    Vertex v = 0;

    static constexpr Pair of(Vertex a, Vertex b) { return a < b ? Pair{a, b} : Pair{b, a}; }
    constexpr bool touches(Vertex w) const { return u == w || v == w; }
    constexpr bool shares_vertex(const Pair& o) const { return touches(o.u) || touches(o.v); }

    friend constexpr bool operator==(const Pair&, const Pair&) = default;
    friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

struct ColoredEdge {
    Pair pair;
    Color color;
    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

class GraphError : public std::runtime_error {
public:
    enum class Code { SelfLoop, OutOfRange, AlreadyBuilt, NoBuiltEdges, IncompleteCrossEdges, InvalidArgument, Parse };

    GraphError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

// A graph on N vertices whose pairs are Unbuilt, Red or Blue. Pair states live
// in a triangular array indexed by pair rank; red and blue neighborhoods are
// mirrored as per-vertex bitset rows so clique search is word intersection.
class BichromaticGraph {
public:
    explicit BichromaticGraph(int vertex_count);

    int vertex_count() const { return n_; }
    std::size_t words_per_row() const { return words_; }
    std::size_t pair_count() const { return states_.size(); }

    std::size_t built_count() const { return red_count_ + blue_count_; }
    std::size_t red_count() const { return red_count_; }
    std::size_t blue_count() const { return blue_count_; }
    std::size_t unbuilt_count() const { return pair_count() - built_count(); }

    PairState state(Vertex u, Vertex v) const;
    PairState state(const Pair& p) const { return state(p.u, p.v); }
    bool is_built(Vertex u, Vertex v) const { return state(u, v) != PairState::Unbuilt; }
    std::optional<Color> color(Vertex u, Vertex v) const;

    // Throws GraphError{SelfLoop|OutOfRange|AlreadyBuilt} and leaves the graph untouched.
    void build(Vertex u, Vertex v, Color c);
    void build(const Pair& p, Color c) { build(p.u, p.v, c); }

    // Overwrites a pair's state without the Unbuilt precondition. Used for
    // hypothetical completions and by the solver's position decoder.
    void set_state(Vertex u, Vertex v, PairState s);

    std::span<const Word> neighbors(Vertex v, Color c) const {
        return {(c == Color::Red ? red_rows_ : blue_rows_).data() + static_cast<std::size_t>(v) * words_, words_};
    }
    // All N rows of one color, row-major.
    std::span<const Word> rows(Color c) const { return c == Color::Red ? red_rows_ : blue_rows_; }
    int degree(Vertex v, Color c) const { return static_cast<int>(simd::popcount(neighbors(v, c))); }

    std::size_t rank(Vertex u, Vertex v) const;
    Pair pair_at(std::size_t rank) const;

    // Lexicographic by (u, v).
    std::vector<Pair> unbuilt_pairs() const;
    std::vector<ColoredEdge> built_edges() const;

    BichromaticGraph color_swapped() const;

    // Line 1 `N`, then one `u v R|B` line per built edge in pair-rank order.
    std::string serialize() const;
    static BichromaticGraph parse(std::string_view text);

    friend bool operator==(const BichromaticGraph& a, const BichromaticGraph& b) {
        return a.n_ == b.n_ && a.states_ == b.states_;
    }

private:
    void check_pair(Vertex u, Vertex v) const;
    Word* row(std::vector<Word>& rows, Vertex v) { return rows.data() + static_cast<std::size_t>(v) * words_; }

    int n_;
    std::size_t words_;
    std::vector<PairState> states_;
    std::vector<Word> red_rows_;
    std::vector<Word> blue_rows_;
    std::size_t red_count_ = 0;
    std::size_t blue_count_ = 0;
};

// Value-returning form of BichromaticGraph::build.
BichromaticGraph build_edge(const BichromaticGraph& g, Vertex u, Vertex v, Color c);

constexpr std::size_t choose2(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// Bitset of `vertex_count` bits with the listed vertices set.
std::vector<Word> vertex_mask(int vertex_count, std::span<const Vertex> vertices);

inline bool test_bit(std::span<const Word> bits, std::size_t i) { return (bits[i >> 6] >> (i & 63)) & 1U; }
inline void set_bit(std::span<Word> bits, std::size_t i) { bits[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(std::span<Word> bits, std::size_t i) { bits[i >> 6] &= ~(Word{1} << (i & 63)); }

}  // namespace ramsey
