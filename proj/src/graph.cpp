#include "ramsey/graph.hpp"

#include <charconv>
#include <sstream>

namespace ramsey {

const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

BichromaticGraph::BichromaticGraph(int vertex_count)
    : n_(vertex_count),
      words_(vertex_count > 0 ? (static_cast<std::size_t>(vertex_count) + 63) / 64 : 0),
      states_(choose2(vertex_count > 0 ? static_cast<std::size_t>(vertex_count) : 0), PairState::Unbuilt),
      red_rows_(static_cast<std::size_t>(vertex_count > 0 ? vertex_count : 0) * words_, 0),
      blue_rows_(red_rows_.size(), 0) {
    if (vertex_count < 1) throw GraphError(GraphError::Code::InvalidArgument, "vertex count must be positive");
}

void BichromaticGraph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw GraphError(GraphError::Code::OutOfRange,
                         "pair (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for N=" +
                             std::to_string(n_));
    }
    if (u == v) throw GraphError(GraphError::Code::SelfLoop, "self-pair at vertex " + std::to_string(u));
}

std::size_t BichromaticGraph::rank(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    const auto a = static_cast<std::size_t>(u);
    const auto b = static_cast<std::size_t>(v);
    const auto n = static_cast<std::size_t>(n_);
    return a * (2 * n - a - 1) / 2 + (b - a - 1);
}

Pair BichromaticGraph::pair_at(std::size_t r) const {
    Vertex u = 0;
    std::size_t row_len = static_cast<std::size_t>(n_) - 1;
    while (r >= row_len) {
        r -= row_len;
        --row_len;
        ++u;
    }
    return Pair{u, u + 1 + static_cast<Vertex>(r)};
}

PairState BichromaticGraph::state(Vertex u, Vertex v) const {
    check_pair(u, v);
    return states_[rank(u, v)];
}

std::optional<Color> BichromaticGraph::color(Vertex u, Vertex v) const {
    switch (state(u, v)) {
        case PairState::Red: return Color::Red;
        case PairState::Blue: return Color::Blue;
        case PairState::Unbuilt: break;
    }
    return std::nullopt;
}

void BichromaticGraph::build(Vertex u, Vertex v, Color c) {
    check_pair(u, v);
    if (states_[rank(u, v)] != PairState::Unbuilt) {
        throw GraphError(GraphError::Code::AlreadyBuilt,
                         "pair (" + std::to_string(u) + "," + std::to_string(v) + ") already built");
    }
    set_state(u, v, built_state(c));
}

void BichromaticGraph::set_state(Vertex u, Vertex v, PairState s) {
    check_pair(u, v);
    auto& slot = states_[rank(u, v)];
    if (slot == s) return;
    const auto bu = static_cast<std::size_t>(u);
    const auto bv = static_cast<std::size_t>(v);
    if (slot == PairState::Red) {
        clear_bit({row(red_rows_, u), words_}, bv);
        clear_bit({row(red_rows_, v), words_}, bu);
        --red_count_;
    } else if (slot == PairState::Blue) {
        clear_bit({row(blue_rows_, u), words_}, bv);
        clear_bit({row(blue_rows_, v), words_}, bu);
        --blue_count_;
    }
    if (s == PairState::Red) {
        set_bit({row(red_rows_, u), words_}, bv);
        set_bit({row(red_rows_, v), words_}, bu);
        ++red_count_;
    } else if (s == PairState::Blue) {
        set_bit({row(blue_rows_, u), words_}, bv);
        set_bit({row(blue_rows_, v), words_}, bu);
        ++blue_count_;
    }
    slot = s;
}

std::vector<Pair> BichromaticGraph::unbuilt_pairs() const {
    std::vector<Pair> out;
    out.reserve(unbuilt_count());
    for (std::size_t r = 0, u = 0; u < static_cast<std::size_t>(n_); ++u) {
        for (auto v = u + 1; v < static_cast<std::size_t>(n_); ++v, ++r) {
            if (states_[r] == PairState::Unbuilt) out.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
    }
    return out;
}

std::vector<ColoredEdge> BichromaticGraph::built_edges() const {
    std::vector<ColoredEdge> out;
    out.reserve(built_count());
    for (std::size_t r = 0, u = 0; u < static_cast<std::size_t>(n_); ++u) {
        for (auto v = u + 1; v < static_cast<std::size_t>(n_); ++v, ++r) {
            if (states_[r] == PairState::Unbuilt) continue;
            out.push_back({{static_cast<Vertex>(u), static_cast<Vertex>(v)},
                           states_[r] == PairState::Red ? Color::Red : Color::Blue});
        }
    }
    return out;
}

BichromaticGraph BichromaticGraph::color_swapped() const {
    BichromaticGraph out(n_);
    for (const auto& e : built_edges()) out.build(e.pair, opposite(e.color));
    return out;
}

std::string BichromaticGraph::serialize() const {
    std::string out = std::to_string(n_) + "\n";
    for (const auto& e : built_edges()) {
        out += std::to_string(e.pair.u);
        out += ' ';
        out += std::to_string(e.pair.v);
        out += ' ';
        out += color_letter(e.color);
        out += '\n';
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& why) {
    throw GraphError(GraphError::Code::Parse, "graph line " + std::to_string(line) + ": " + why);
}

}  // namespace

BichromaticGraph BichromaticGraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<BichromaticGraph> g;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream fields(line);
        if (!g) {
            int n = 0;
            std::string extra;
            if (!(fields >> n) || (fields >> extra) || n < 1) parse_fail(line_no, "expected a positive vertex count");
            g.emplace(n);
            continue;
        }
        Vertex u = 0;
        Vertex v = 0;
        std::string c;
        std::string extra;
        if (!(fields >> u >> v >> c) || (fields >> extra) || (c != "R" && c != "B")) {
            parse_fail(line_no, "expected `u v R|B`");
        }
        try {
            g->build(u, v, c == "R" ? Color::Red : Color::Blue);
        } catch (const GraphError& e) {
            parse_fail(line_no, e.what());
        }
    }
    if (!g) parse_fail(line_no, "missing vertex count");
    return std::move(*g);
}

BichromaticGraph build_edge(const BichromaticGraph& g, Vertex u, Vertex v, Color c) {
    BichromaticGraph out = g;
    out.build(u, v, c);
    return out;
}

std::vector<Word> vertex_mask(int vertex_count, std::span<const Vertex> vertices) {
    std::vector<Word> mask((static_cast<std::size_t>(vertex_count) + 63) / 64, 0);
    for (const Vertex v : vertices) set_bit(mask, static_cast<std::size_t>(v));
    return mask;
}

}  // namespace ramsey
