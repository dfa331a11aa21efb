#include "ramsey/extremal.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>

#include "ramsey/clique.hpp"
#include "ramsey/structures.hpp"

namespace ramsey {

namespace {

using BigInt = boost::multiprecision::cpp_int;

constexpr int kRootBits = 20;
constexpr long kMaxKstSide = 10'000;

// Smallest r with r^s >= x.
BigInt ceil_root(const BigInt& x, long s, const BigInt& upper) {
    BigInt lo = 0;
    BigInt hi = upper;
    while (lo < hi) {
        const BigInt mid = (lo + hi) / 2;
        if (boost::multiprecision::pow(mid, static_cast<unsigned>(s)) >= x) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return lo;
}

}  // namespace

Rational kst_bound(long m, long n, long s, long t) {
    if (!(m >= s && s >= 1 && n >= t && t >= 1)) {
        throw ExtremalError(ExtremalError::Code::DomainError, "kst_bound needs m >= s >= 1 and n >= t >= 1");
    }
    if (m > kMaxKstSide || n > kMaxKstSide) {
        throw ExtremalError(ExtremalError::Code::DomainError,
                            "kst_bound supports sides up to " + std::to_string(kMaxKstSide));
    }
    // (t-1)^{1/s} n^{1-1/s} = ((t-1) n^{s-1})^{1/s}; scale by D = 2^20 first.
    const BigInt scale = BigInt{1} << kRootBits;
    const BigInt x = BigInt{t - 1} * boost::multiprecision::pow(BigInt{n}, static_cast<unsigned>(s - 1)) *
                     boost::multiprecision::pow(scale, static_cast<unsigned>(s));
    const BigInt root = ceil_root(x, s, BigInt{t} * n * scale + 1);
    const Rational k(static_cast<std::int64_t>(root), std::int64_t{1} << kRootBits);
    return Rational(m - s + 1) * k + Rational((s - 1) * n);
}

// ---------------------------------------------------------------------------

SimpleGraph::SimpleGraph(int n) : n_(n), words_(static_cast<std::size_t>(std::max(n, 1) + 63) / 64) {
    if (n < 1) throw GraphError(GraphError::Code::InvalidArgument, "graph needs at least one vertex");
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
}

std::size_t SimpleGraph::edge_count() const { return simd::popcount(rows_) / 2; }

void SimpleGraph::add_edge(Vertex u, Vertex v) {
    if (u == v) throw GraphError(GraphError::Code::SelfLoop, "self-loop at " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw GraphError(GraphError::Code::OutOfRange, "vertex out of range");
    }
    set_bit({rows_.data() + static_cast<std::size_t>(u) * words_, words_}, static_cast<std::size_t>(v));
    set_bit({rows_.data() + static_cast<std::size_t>(v) * words_, words_}, static_cast<std::size_t>(u));
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph out(n_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v = u + 1; v < n_; ++v) {
            if (!has_edge(u, v)) out.add_edge(u, v);
        }
    }
    return out;
}

SimpleGraph SimpleGraph::underlying(const BichromaticGraph& g) {
    SimpleGraph out(g.vertex_count());
    for (const auto& e : g.built_edges()) out.add_edge(e.pair.u, e.pair.v);
    return out;
}

SimpleGraph SimpleGraph::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n = 0;
    if (!(in >> n) || n < 1) throw GraphError(GraphError::Code::Parse, "expected a vertex count on the first line");
    SimpleGraph g(n);
    std::string line;
    std::getline(in, line);
    for (std::size_t line_no = 2; std::getline(in, line); ++line_no) {
        std::istringstream fields(line);
        Vertex u = 0;
        Vertex v = 0;
        if (!(fields >> u)) continue;
        if (!(fields >> v)) {
            throw GraphError(GraphError::Code::Parse, "line " + std::to_string(line_no) + ": expected `u v`");
        }
        g.add_edge(u, v);
    }
    return g;
}

HomogeneousSet es_extract(const SimpleGraph& g) {
    if (g.vertex_count() > kMaxExtractVertices) {
        throw ExtremalError(ExtremalError::Code::TooLarge,
                            "es_extract supports at most " + std::to_string(kMaxExtractVertices) + " vertices");
    }
    const auto everyone = [&] {
        std::vector<Word> all(g.words_per_row(), 0);
        for (Vertex v = 0; v < g.vertex_count(); ++v) set_bit(all, static_cast<std::size_t>(v));
        return all;
    }();
    const SimpleGraph co = g.complement();
    auto clique = max_clique({g.rows(), g.vertex_count(), g.words_per_row()}, everyone);
    auto independent = max_clique({co.rows(), co.vertex_count(), co.words_per_row()}, everyone);
    if (independent.size() > clique.size()) return {std::move(independent), SetKind::Independent};
    return {std::move(clique), SetKind::Clique};
}

// ---------------------------------------------------------------------------

LeastDensityWitness verify_least_density(const BichromaticGraph& g, const VertexSet& left, const VertexSet& right,
                                         const Rational& eps) {
    if (left.empty() || left.size() != right.size()) {
        throw ExtremalError(ExtremalError::Code::NotBipartiteComplete, "both classes must have the same nonempty size");
    }
    const auto counts = cross_counts(g, left, right);
    if (counts.built() != left.size() * right.size()) {
        throw ExtremalError(ExtremalError::Code::NotBipartiteComplete,
                            std::to_string(left.size() * right.size() - counts.built()) + " cross pairs are unbuilt");
    }
    if (!is_color_balanced(g, left, right, eps)) {
        throw ExtremalError(ExtremalError::Code::NotBalanced,
                            "red density " + red_density(g, left, right).str() + " is outside [eps, 1 - eps]");
    }

    LeastDensityWitness w;
    w.eps = eps;
    w.delta = eps * eps * eps * eps * eps / (Rational(2) * (Rational(1) + eps));
    w.mu = eps * eps;
    w.nu = eps / (Rational(2) * (Rational(1) + eps));
    w.n0 = static_cast<int>(left.size());
    const Rational n0(w.n0);

    for (const Vertex u : left) {
        std::int64_t red = 0;
        for (const Vertex v : right) red += g.state(u, v) == PairState::Red ? 1 : 0;
        const std::int64_t blue = w.n0 - red;
        if (Rational(red) >= w.mu * n0 && Rational(blue) >= w.mu * n0) w.balanced_vertices.push_back(u);
        if (Rational(red) >= (Rational(1) - w.mu) * n0) w.s_red.push_back(u);
        if (Rational(blue) >= (Rational(1) - w.mu) * n0) w.s_blue.push_back(u);
    }
    w.classes_cover = w.balanced_vertices.size() + w.s_red.size() + w.s_blue.size() >= left.size();
    if (w.classes_cover) {
        for (const Vertex u : left) {
            const auto in = [u](const VertexSet& s) { return std::find(s.begin(), s.end(), u) != s.end(); };
            if (!in(w.balanced_vertices) && !in(w.s_red) && !in(w.s_blue)) w.classes_cover = false;
        }
    }

    w.e_hl = incidence_graph(g, left, right, IncidenceSide::Left).edge_count();
    w.e_hr = incidence_graph(g, left, right, IncidenceSide::Right).edge_count();
    const auto e_max = static_cast<std::int64_t>(std::max(w.e_hl, w.e_hr));
    w.dense_incidence = Rational(e_max) >= w.delta * n0 * n0 * n0;

    w.few_balanced = Rational(static_cast<std::int64_t>(w.balanced_vertices.size())) < w.nu * n0;
    if (w.few_balanced) {
        const Rational floor = Rational(static_cast<std::int64_t>(w.s_red.size() * w.s_blue.size())) *
                               (Rational(1) - Rational(2) * w.mu) * n0;
        w.intermediate_holds = Rational(static_cast<std::int64_t>(w.e_hr)) >= floor;
    }
    return w;
}

}  // namespace ramsey
