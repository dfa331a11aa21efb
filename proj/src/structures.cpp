#include "ramsey/structures.hpp"

#include <algorithm>

#include "ramsey/clique.hpp"

namespace ramsey {

CrossCounts cross_counts(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw GraphError(GraphError::Code::InvalidArgument, "density needs nonempty sets");
    const int n = g.vertex_count();
    for (const Vertex v : a) {
        if (v < 0 || v >= n) throw GraphError(GraphError::Code::OutOfRange, "vertex out of range");
    }
    for (const Vertex v : b) {
        if (v < 0 || v >= n) throw GraphError(GraphError::Code::OutOfRange, "vertex out of range");
    }
    const auto mask_a = vertex_mask(n, a);
    const auto mask_b = vertex_mask(n, b);
    if (simd::and_popcount(mask_a, mask_b) != 0) {
        throw GraphError(GraphError::Code::InvalidArgument, "density needs disjoint sets");
    }
    CrossCounts counts;
    for (const Vertex u : a) {
        counts.red += simd::and_popcount(g.neighbors(u, Color::Red), mask_b);
        counts.blue += simd::and_popcount(g.neighbors(u, Color::Blue), mask_b);
    }
    return counts;
}

Rational red_density(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b) {
    const auto counts = cross_counts(g, a, b);
    if (counts.built() == 0) throw GraphError(GraphError::Code::NoBuiltEdges, "no built edges between the sets");
    return {static_cast<std::int64_t>(counts.red), static_cast<std::int64_t>(counts.built())};
}

Rational blue_density(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b) {
    const auto counts = cross_counts(g, a, b);
    if (counts.built() == 0) throw GraphError(GraphError::Code::NoBuiltEdges, "no built edges between the sets");
    return {static_cast<std::int64_t>(counts.blue), static_cast<std::int64_t>(counts.built())};
}

bool is_balanced_density(const Rational& d_red, const Rational& eps) { return eps <= d_red && d_red <= 1 - eps; }

bool is_color_balanced(const BichromaticGraph& g, const VertexSet& a, const VertexSet& b, const Rational& eps) {
    return is_balanced_density(red_density(g, a, b), eps);
}

// ---------------------------------------------------------------------------

PartitionLayout::PartitionLayout(std::vector<VertexSet> parts, int vertex_count) : parts_(std::move(parts)) {
    std::vector<bool> seen(static_cast<std::size_t>(vertex_count), false);
    for (const auto& part : parts_) {
        if (part.size() != parts_.front().size()) {
            throw GraphError(GraphError::Code::InvalidArgument, "layout parts must have equal sizes");
        }
        for (const Vertex v : part) {
            if (v < 0 || v >= vertex_count) throw GraphError(GraphError::Code::OutOfRange, "layout vertex out of range");
            if (seen[static_cast<std::size_t>(v)]) {
                throw GraphError(GraphError::Code::InvalidArgument, "layout parts must be disjoint");
            }
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
}

PartitionLayout PartitionLayout::contiguous(int vertex_count, int part_count, int part_size) {
    if (part_count < 1 || part_size < 1 || part_count * part_size > vertex_count) {
        throw GraphError(GraphError::Code::InvalidArgument, "layout does not fit in the vertex set");
    }
    std::vector<VertexSet> parts(static_cast<std::size_t>(part_count));
    for (int i = 0; i < part_count; ++i) {
        for (int j = 0; j < part_size; ++j) parts[static_cast<std::size_t>(i)].push_back(i * part_size + j);
    }
    return {std::move(parts), vertex_count};
}

std::vector<Pair> PartitionLayout::cross_pairs() const {
    std::vector<Pair> out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        for (std::size_t j = i + 1; j < parts_.size(); ++j) {
            for (const Vertex a : parts_[i]) {
                for (const Vertex b : parts_[j]) out.push_back(Pair::of(a, b));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Pair> PartitionLayout::within_pairs(int part_index) const {
    const auto& p = part(part_index);
    std::vector<Pair> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = i + 1; j < p.size(); ++j) out.push_back(Pair::of(p[i], p[j]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------

ReducedLabel threshold_label(const Rational& d_red, const Rational& eps) {
    if (d_red > 1 - eps) return ReducedLabel::Red;
    if (d_red < eps) return ReducedLabel::Blue;
    return ReducedLabel::None;
}

ReducedGraph::ReducedGraph(int part_count, Rational eps)
    : parts_(part_count),
      eps_(eps),
      labels_(choose2(static_cast<std::size_t>(part_count)), ReducedLabel::None),
      densities_(labels_.size()) {
    if (!(Rational(0) < eps && eps < Rational(1, 2))) {
        throw GraphError(GraphError::Code::InvalidArgument, "epsilon must lie in (0, 1/2)");
    }
}

std::size_t ReducedGraph::index(int i, int j) const {
    if (i == j || i < 0 || j < 0 || i >= parts_ || j >= parts_) {
        throw GraphError(GraphError::Code::OutOfRange, "bad part pair");
    }
    if (i > j) std::swap(i, j);
    const auto a = static_cast<std::size_t>(i);
    const auto n = static_cast<std::size_t>(parts_);
    return a * (2 * n - a - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

void ReducedGraph::set(int i, int j, ReducedLabel label, Rational d_red) {
    const auto k = index(i, j);
    labels_[k] = label;
    densities_[k] = d_red;
}

bool ReducedGraph::is_complete() const {
    return std::none_of(labels_.begin(), labels_.end(), [](ReducedLabel l) { return l == ReducedLabel::None; });
}

std::optional<ReducedGraph::MonoPartClique> ReducedGraph::largest_mono_clique() const {
    if (parts_ < 1) return std::nullopt;
    BichromaticGraph parts_graph(parts_);
    for (int i = 0; i < parts_; ++i) {
        for (int j = i + 1; j < parts_; ++j) {
            const auto l = label(i, j);
            if (l != ReducedLabel::None) parts_graph.build(i, j, l == ReducedLabel::Red ? Color::Red : Color::Blue);
        }
    }
    const auto blue = max_mono_clique(parts_graph, Color::Blue);
    const auto red = max_mono_clique(parts_graph, Color::Red);
    const bool pick_red = red.size() > blue.size();
    return MonoPartClique{pick_red ? Color::Red : Color::Blue, pick_red ? red : blue};
}

ReducedGraph reduced_graph(const BichromaticGraph& g, const PartitionLayout& layout, const Rational& eps) {
    ReducedGraph reduced(layout.part_count(), eps);
    for (int i = 0; i < layout.part_count(); ++i) {
        for (int j = i + 1; j < layout.part_count(); ++j) {
            const auto counts = cross_counts(g, layout.part(i), layout.part(j));
            const auto expected = layout.part(i).size() * layout.part(j).size();
            if (counts.built() != expected) {
                throw GraphError(GraphError::Code::IncompleteCrossEdges,
                                 "parts " + std::to_string(i) + " and " + std::to_string(j) +
                                     " have unbuilt cross pairs");
            }
            const Rational d(static_cast<std::int64_t>(counts.red), static_cast<std::int64_t>(counts.built()));
            reduced.set(i, j, threshold_label(d, eps), d);
        }
    }
    return reduced;
}

// ---------------------------------------------------------------------------

IncidenceGraph::IncidenceGraph(IncidenceSide side, VertexSet left, std::vector<Pair> right)
    : side_(side),
      left_(std::move(left)),
      right_(std::move(right)),
      words_((right_.size() + 63) / 64),
      rows_(left_.size() * words_, 0) {}

void IncidenceGraph::add_edge(std::size_t left_index, std::size_t right_index) {
    set_bit({rows_.data() + left_index * words_, words_}, right_index);
}

std::size_t IncidenceGraph::edge_count() const { return simd::popcount(rows_); }

IncidenceGraph incidence_graph(const BichromaticGraph& g, const VertexSet& v1, const VertexSet& v2,
                               IncidenceSide side) {
    const auto& singles = side == IncidenceSide::Left ? v1 : v2;
    const auto& paired = side == IncidenceSide::Left ? v2 : v1;
    if (simd::and_popcount(vertex_mask(g.vertex_count(), v1), vertex_mask(g.vertex_count(), v2)) != 0) {
        throw GraphError(GraphError::Code::InvalidArgument, "incidence classes must be disjoint");
    }
    std::vector<Pair> right;
    right.reserve(choose2(paired.size()));
    for (std::size_t i = 0; i < paired.size(); ++i) {
        for (std::size_t j = i + 1; j < paired.size(); ++j) right.push_back(Pair::of(paired[i], paired[j]));
    }
    IncidenceGraph h(side, singles, right);
    for (std::size_t li = 0; li < singles.size(); ++li) {
        const Vertex u = singles[li];
        for (std::size_t ri = 0; ri < right.size(); ++ri) {
            const auto a = g.state(u, right[ri].u);
            const auto b = g.state(u, right[ri].v);
            if (a != PairState::Unbuilt && b != PairState::Unbuilt && a != b) h.add_edge(li, ri);
        }
    }
    return h;
}

bool are_independent(const BichromaticGraph& g, const Pair& p, const Pair& q) {
    if (p.u == p.v || q.u == q.v || p.shares_vertex(q)) return false;
    if (g.is_built(p.u, p.v) || g.is_built(q.u, q.v)) return false;
    bool red = false;
    bool blue = false;
    for (const Vertex a : {p.u, p.v}) {
        for (const Vertex b : {q.u, q.v}) {
            const auto s = g.state(a, b);
            red = red || s == PairState::Red;
            blue = blue || s == PairState::Blue;
        }
    }
    return red && blue;
}

}  // namespace ramsey
