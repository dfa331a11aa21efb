#include "ramsey/builders.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>

#include "ramsey/clique.hpp"

namespace ramsey {

PaperStrategyParams PaperStrategyParams::defaults(int N) {
    PaperStrategyParams p;
    p.parts = std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(N)))));
    return p;
}

Rational PaperStrategyParams::delta() const {
    const Rational e5 = eps * eps * eps * eps * eps;
    return e5 / (Rational(2) * (Rational(1) + eps));
}

int PaperStrategyParams::default_a(int part_size) const {
    const double v = delta().to_double() * std::log(static_cast<double>(part_size));
    return std::max(1, static_cast<int>(std::ceil(v)));
}

int PaperStrategyParams::default_b(int part_size) const {
    const double v = part_size * std::log(static_cast<double>(part_size));
    return std::max(1, static_cast<int>(std::ceil(v)));
}

void PaperStrategyParams::validate() const {
    if (parts < 2) throw StrategyError(StrategyError::Code::InvalidParams, "need at least 2 parts");
    if (!(Rational(0) < eps && eps < Rational(1, 2))) {
        throw StrategyError(StrategyError::Code::InvalidParams, "eps must lie in (0, 1/2)");
    }
    if ((a_target && *a_target < 1) || (b_target && *b_target < 1)) {
        throw StrategyError(StrategyError::Code::InvalidParams, "biclique targets must be positive");
    }
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::size_t> first_set_bits(std::span<const Word> bits, std::size_t limit) {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < bits.size() && out.size() < limit; ++w) {
        for (Word x = bits[w]; x != 0 && out.size() < limit; x &= x - 1) {
            out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        }
    }
    return out;
}

class ExactBicliqueSearch {
public:
    ExactBicliqueSearch(const IncidenceGraph& h, int a, int b)
        : h_(h), a_(static_cast<std::size_t>(a)), b_(static_cast<std::size_t>(b)),
          scratch_((a_ + 1) * h.words_per_row(), ~Word{0}) {}

    std::optional<Biclique> run() {
        std::vector<std::size_t> chosen;
        if (!extend(0, 0, chosen)) return std::nullopt;
        return Biclique{chosen, first_set_bits(level(a_), b_)};
    }

private:
    std::span<Word> level(std::size_t d) { return {scratch_.data() + d * h_.words_per_row(), h_.words_per_row()}; }

    bool extend(std::size_t depth, std::size_t from, std::vector<std::size_t>& chosen) {
        if (depth == a_) return true;
        for (std::size_t v = from; v + (a_ - depth) <= h_.left_count(); ++v) {
            auto next = level(depth + 1);
            if (depth == 0) {
                std::copy(h_.row(v).begin(), h_.row(v).end(), next.begin());
            } else {
                simd::and_into(next, level(depth), h_.row(v));
            }
            if (simd::popcount(next) < b_) continue;
            chosen.push_back(v);
            if (extend(depth + 1, v + 1, chosen)) return true;
            chosen.pop_back();
        }
        return false;
    }

    const IncidenceGraph& h_;
    std::size_t a_;
    std::size_t b_;
    std::vector<Word> scratch_;
};

std::optional<Biclique> greedy_biclique(const IncidenceGraph& h, std::size_t a, std::size_t b) {
    std::vector<std::size_t> starts(h.left_count());
    std::iota(starts.begin(), starts.end(), std::size_t{0});
    std::stable_sort(starts.begin(), starts.end(),
                     [&](std::size_t x, std::size_t y) { return h.degree(x) > h.degree(y); });
    std::vector<Word> current(h.words_per_row());
    std::vector<Word> trial(h.words_per_row());
    for (const std::size_t start : starts) {
        if (h.degree(start) < b) break;
        std::vector<std::size_t> chosen{start};
        std::copy(h.row(start).begin(), h.row(start).end(), current.begin());
        while (chosen.size() < a) {
            std::size_t best = h.left_count();
            std::size_t best_count = 0;
            for (std::size_t v = 0; v < h.left_count(); ++v) {
                if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
                const auto c = simd::and_popcount(current, h.row(v));
                if (best == h.left_count() || c > best_count) {
                    best = v;
                    best_count = c;
                }
            }
            if (best == h.left_count() || best_count < b) break;
            simd::and_into(trial, current, h.row(best));
            current.swap(trial);
            chosen.push_back(best);
        }
        if (chosen.size() == a) {
            std::sort(chosen.begin(), chosen.end());
            return Biclique{chosen, first_set_bits(current, b)};
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Biclique> biclique_mine(const IncidenceGraph& h, int a, int b) {
    if (a < 1 || b < 1) throw StrategyError(StrategyError::Code::InvalidParams, "biclique sides must be positive");
    if (static_cast<std::size_t>(a) > h.left_count() || static_cast<std::size_t>(b) > h.right_count()) {
        return std::nullopt;
    }
    if (a <= kExactBicliqueLimit) return ExactBicliqueSearch(h, a, b).run();
    return greedy_biclique(h, static_cast<std::size_t>(a), static_cast<std::size_t>(b));
}

PairFamilies assemble_pair_families(const BichromaticGraph& g, const IncidenceGraph& h, const Biclique& biclique) {
    std::set<Pair> p;
    for (const std::size_t li : biclique.left) {
        const Vertex u = h.left_vertices()[li];
        for (const Vertex other : h.left_vertices()) {
            if (other == u) continue;
            const Pair pair = Pair::of(u, other);
            if (!g.is_built(pair.u, pair.v)) p.insert(pair);
        }
    }
    std::vector<Pair> q;
    for (const std::size_t ri : biclique.right) {
        const Pair& pair = h.right_pairs()[ri];
        if (!g.is_built(pair.u, pair.v)) q.push_back(pair);
    }
    std::sort(q.begin(), q.end());
    if (p.empty() || q.empty()) {
        throw StrategyError(StrategyError::Code::EmptyFamily, "every candidate pair of a family is already built");
    }
    return {{p.begin(), p.end()}, std::move(q)};
}

bool families_cross_independent(const BichromaticGraph& g, const PairFamilies& fams) {
    for (const auto& p : fams.p) {
        for (const auto& q : fams.q) {
            if (!are_independent(g, p, q)) return false;
        }
    }
    return true;
}

std::size_t generalized_family_savings(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) return 0;
    std::size_t total = 0;
    for (const auto s : sizes) total += s;
    return total - *std::max_element(sizes.begin(), sizes.end());
}

std::optional<std::pair<int, int>> balanced_pair_search(const BichromaticGraph& g, const PartitionLayout& layout,
                                                        const Rational& eps) {
    for (int i = 0; i < layout.part_count(); ++i) {
        for (int j = i + 1; j < layout.part_count(); ++j) {
            const auto counts = cross_counts(g, layout.part(i), layout.part(j));
            if (counts.built() == 0) continue;
            const Rational d(static_cast<std::int64_t>(counts.red), static_cast<std::int64_t>(counts.built()));
            if (is_balanced_density(d, eps)) return std::pair{i, j};
        }
    }
    return std::nullopt;
}

PartitionLayout multipartite_layout(int N, const PaperStrategyParams& params) {
    params.validate();
    if (params.parts > N) throw StrategyError(StrategyError::Code::InvalidParams, "more parts than vertices");
    return PartitionLayout::contiguous(N, params.parts, N / params.parts);
}

std::vector<Pair> multipartite_endgame_plan(const BichromaticGraph& g, const PartitionLayout& layout,
                                            const std::vector<int>& chosen_parts) {
    std::vector<Pair> out;
    for (const int part : chosen_parts) {
        for (const auto& p : layout.within_pairs(part)) {
            if (!g.is_built(p.u, p.v)) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

PairwisePlan pairwise_endgame_plan(const BichromaticGraph& g, const PairFamilies& fams) {
    const std::set<Pair> in_families = [&] {
        std::set<Pair> s(fams.p.begin(), fams.p.end());
        s.insert(fams.q.begin(), fams.q.end());
        return s;
    }();
    PairwisePlan plan;
    for (const auto& p : g.unbuilt_pairs()) {
        if (!in_families.contains(p)) plan.rest.push_back(p);
    }
    const bool p_smaller = fams.p.size() <= fams.q.size();
    plan.smaller = p_smaller ? fams.p : fams.q;
    plan.larger = p_smaller ? fams.q : fams.p;
    return plan;
}

bool is_forced(const BichromaticGraph& g, const Pair& p, int m) {
    if (g.is_built(p.u, p.v)) return false;
    if (m <= 2) return true;
    std::vector<Word> common(g.words_per_row());
    simd::and_into(common, g.neighbors(p.u, Color::Red), g.neighbors(p.v, Color::Red));
    return find_clique(AdjacencyView::of(g, Color::Red), common, m - 2).has_value();
}

// ---------------------------------------------------------------------------

namespace {

std::size_t drive(GameState& state, PainterPolicy& painter, const std::vector<Pair>& pairs) {
    std::size_t moves = 0;
    for (const auto& p : pairs) {
        if (state.finished()) break;
        if (state.graph().is_built(p.u, p.v)) continue;
        state.apply(p, painter.choose(state, p));
        ++moves;
    }
    return moves;
}

std::size_t fill_remaining(GameState& state, PainterPolicy& painter) {
    return drive(state, painter, state.graph().unbuilt_pairs());
}

}  // namespace

MultipartitePhaseResult multipartite_phase(GameState& state, PainterPolicy& painter,
                                           const PaperStrategyParams& params) {
    auto layout = multipartite_layout(state.config().N, params);
    const auto moves = drive(state, painter, layout.cross_pairs());
    std::optional<ReducedGraph> reduced;
    if (!state.finished()) reduced = reduced_graph(state.graph(), layout, params.eps);
    return {std::move(layout), std::move(reduced), moves};
}

EndgameResult multipartite_endgame(GameState& state, PainterPolicy& painter, const PartitionLayout& layout,
                                   const ReducedGraph& reduced) {
    EndgameResult result;
    const auto clique = reduced.largest_mono_clique();
    if (clique) {
        result.chosen_parts = clique->parts;
        result.part_clique_color = clique->color;
        result.moves += drive(state, painter, multipartite_endgame_plan(state.graph(), layout, clique->parts));
    }
    result.moves += fill_remaining(state, painter);
    result.won = state.status().outcome == GameOutcome::BuilderWon;
    return result;
}

EndgameResult pairwise_endgame(GameState& state, PainterPolicy& painter, const PairFamilies& fams) {
    EndgameResult result;
    const auto plan = pairwise_endgame_plan(state.graph(), fams);
    result.moves += drive(state, painter, plan.rest);
    result.moves += drive(state, painter, plan.smaller);
    const auto larger_moves = drive(state, painter, plan.larger);
    result.larger_family_touched = larger_moves > 0;
    result.moves += larger_moves;
    result.moves += fill_remaining(state, painter);
    result.won = state.status().outcome == GameOutcome::BuilderWon;
    return result;
}

// ---------------------------------------------------------------------------

namespace {

nlohmann::json pairs_json(const std::vector<Pair>& pairs) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& p : pairs) out.push_back({p.u, p.v});
    return out;
}

// Queue of planned segments, each charged to one phase-log entry.
class PlannedBuilder : public BuilderPolicy {
public:
    std::optional<Pair> next_move(const GameState& state) final {
        for (int guard = 0; guard < 64; ++guard) {
            while (!segments_.empty()) {
                auto& seg = segments_.front();
                while (!seg.pairs.empty()) {
                    const Pair p = seg.pairs.front();
                    seg.pairs.pop_front();
                    if (state.graph().is_built(p.u, p.v)) continue;
                    ++log_[seg.phase].moves;
                    if (seg.larger_family && pairwise_) pairwise_->larger_family_touched = true;
                    return p;
                }
                segments_.pop_front();
            }
            if (!advance(state)) return std::nullopt;
        }
        return std::nullopt;
    }

    std::vector<PhaseRecord> phase_log() const override { return log_; }
    std::optional<PairwiseRecord> pairwise() const override { return pairwise_; }

protected:
    // Queues the next segment(s); false when the policy has nothing more.
    virtual bool advance(const GameState& state) = 0;

    std::size_t open_phase(std::string name, nlohmann::json witness = nlohmann::json::object()) {
        log_.push_back({std::move(name), 0, std::move(witness)});
        return log_.size() - 1;
    }
    void enqueue(std::size_t phase, const std::vector<Pair>& pairs, bool larger_family = false) {
        segments_.push_back({phase, {pairs.begin(), pairs.end()}, larger_family});
    }
    bool enqueue_fill(const GameState& state, const std::string& name = "fallback") {
        auto pairs = state.graph().unbuilt_pairs();
        if (pairs.empty()) return false;
        enqueue(open_phase(name), pairs);
        return true;
    }
    PhaseRecord& phase(std::size_t i) { return log_[i]; }

    std::optional<PairwiseRecord> pairwise_;

private:
    struct Segment {
        std::size_t phase;
        std::deque<Pair> pairs;
        bool larger_family;
    };
    std::deque<Segment> segments_;
    std::vector<PhaseRecord> log_;
};

class NaiveBuilder final : public PlannedBuilder {
public:
    std::string name() const override { return "naive"; }

protected:
    bool advance(const GameState& state) override { return enqueue_fill(state, "fill"); }
};

class PaperBuilder final : public PlannedBuilder {
public:
    PaperBuilder(const GameConfig& config, PaperStrategyParams params) : params_(std::move(params)) {
        params_.validate();
        if (params_.parts > config.N) throw StrategyError(StrategyError::Code::InvalidParams, "more parts than vertices");
    }

    std::string name() const override { return "paper"; }

protected:
    bool advance(const GameState& state) override {
        switch (stage_) {
            case Stage::Start: {
                layout_ = multipartite_layout(state.config().N, params_);
                enqueue(open_phase("multipartite", {{"parts", layout_->part_count()},
                                                    {"part_size", layout_->part_size()}}),
                        layout_->cross_pairs());
                stage_ = Stage::Branch;
                return true;
            }
            case Stage::Branch:
                stage_ = Stage::Fallback;
                branch(state);
                return true;
            case Stage::Fallback:
                stage_ = Stage::Done;
                return enqueue_fill(state);
            case Stage::Done: break;
        }
        return false;
    }

private:
    enum class Stage { Start, Branch, Fallback, Done };

    void branch(const GameState& state) {
        const auto& g = state.graph();
        const auto reduced = reduced_graph(g, *layout_, params_.eps);
        std::size_t none_labels = 0;
        for (int i = 0; i < reduced.part_count(); ++i) {
            for (int j = i + 1; j < reduced.part_count(); ++j) none_labels += reduced.label(i, j) == ReducedLabel::None;
        }
        const auto balanced = balanced_pair_search(g, *layout_, params_.eps);
        open_phase("reduced-graph",
                   {{"eps", params_.eps.str()}, {"complete", reduced.is_complete()}, {"none_labels", none_labels}});
        if (!balanced) {
            const auto clique = reduced.largest_mono_clique();
            enqueue(open_phase("multipartite-endgame", {{"color", color_name(clique->color)}, {"parts", clique->parts}}),
                    multipartite_endgame_plan(g, *layout_, clique->parts));
            return;
        }
        const auto [i, j] = *balanced;
        const auto& ui = layout_->part(i);
        const auto& uj = layout_->part(j);
        const auto h_left = incidence_graph(g, ui, uj, IncidenceSide::Left);
        const auto h_right = incidence_graph(g, ui, uj, IncidenceSide::Right);
        const bool use_left = h_left.edge_count() >= h_right.edge_count();
        const auto& h = use_left ? h_left : h_right;
        open_phase("balanced-pair", {{"parts", {i, j}},
                                     {"red_density", red_density(g, ui, uj).str()},
                                     {"e_HL", h_left.edge_count()},
                                     {"e_HR", h_right.edge_count()},
                                     {"side", use_left ? "left" : "right"}});
        if (h.right_count() == 0 || h.edge_count() == 0) return;

        const int n0 = layout_->part_size();
        const int a = std::min(params_.a_target.value_or(params_.default_a(n0)), static_cast<int>(h.left_count()));
        const int b = std::min(params_.b_target.value_or(params_.default_b(n0)), static_cast<int>(h.right_count()));
        std::string mode = "mined";
        auto biclique = biclique_mine(h, a, b);
        if (!biclique) {
            // Best star: the left vertex of largest incidence degree with all its pairs.
            std::size_t best = 0;
            for (std::size_t v = 1; v < h.left_count(); ++v) {
                if (h.degree(v) > h.degree(best)) best = v;
            }
            biclique = Biclique{{best}, first_set_bits(h.row(best), h.degree(best))};
            mode = "star";
        }
        nlohmann::json witness = {{"a_target", a}, {"b_target", b}, {"mode", mode},
                                  {"a", biclique->left.size()}, {"b", biclique->right.size()}};
        PairFamilies fams;
        try {
            fams = assemble_pair_families(g, h, *biclique);
        } catch (const StrategyError&) {
            witness["families"] = "empty";
            open_phase("biclique", std::move(witness));
            return;
        }
        open_phase("biclique", std::move(witness));
        pairwise_ = PairwiseRecord{fams.p.size(), fams.q.size(), false};
        const auto plan = pairwise_endgame_plan(g, fams);
        enqueue(open_phase("pairwise-rest", {{"P", pairs_json(fams.p)}, {"Q", pairs_json(fams.q)}}), plan.rest);
        enqueue(open_phase("pairwise-smaller", {{"size", plan.smaller.size()}}), plan.smaller);
        enqueue(open_phase("pairwise-larger", {{"size", plan.larger.size()}}), plan.larger, true);
    }

    PaperStrategyParams params_;
    Stage stage_ = Stage::Start;
    std::optional<PartitionLayout> layout_;
};

class ForcedEdgeBuilder final : public PlannedBuilder {
public:
    explicit ForcedEdgeBuilder(const GameConfig& config) : m_(config.m), n_(config.n), N_(config.N) {}

    std::string name() const override { return "forced-edge"; }

protected:
    bool advance(const GameState& state) override {
        const auto& g = state.graph();
        if (stage_ == Stage::Sweep) {
            if (sweep_phase_ == kNone) sweep_phase_ = open_phase("sweep");
            // One vertex step per call: pairs (j, i) for j < i that are not forced.
            while (next_vertex_ < N_) {
                const Vertex i = next_vertex_++;
                if (i > 0 && certify(g)) return true;
                std::vector<Pair> step;
                for (Vertex j = 0; j < i; ++j) {
                    const Pair p{j, i};
                    if (g.is_built(p.u, p.v)) continue;
                    if (is_forced(g, p, m_)) {
                        skipped_.insert(p);
                        continue;
                    }
                    step.push_back(p);
                }
                phase(sweep_phase_).witness["skipped"] = skipped_.size();
                if (!step.empty()) {
                    // Later pairs of the step may become forced once earlier
                    // ones are painted; queue one pair and re-plan.
                    next_vertex_ = i;
                    enqueue(sweep_phase_, {step.front()});
                    return true;
                }
            }
            stage_ = Stage::Fallback;
            if (certify(g)) return true;
        }
        if (stage_ == Stage::Certified) stage_ = Stage::Fallback;
        if (stage_ == Stage::Fallback) {
            stage_ = Stage::Done;
            return enqueue_fill(state);
        }
        return false;
    }

private:
    enum class Stage { Sweep, Certified, Fallback, Done };
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    // A blue K_n exists once every skipped forced pair is counted blue.
    bool certify(const BichromaticGraph& g) {
        if (skipped_.empty()) return false;
        BichromaticGraph hypothetical = g;
        for (const auto& p : skipped_) {
            if (!g.is_built(p.u, p.v)) hypothetical.set_state(p.u, p.v, PairState::Blue);
        }
        const auto clique = find_mono_clique(hypothetical, Color::Blue, n_);
        if (!clique) return false;
        std::vector<Pair> plan;
        for (std::size_t a = 0; a < clique->size(); ++a) {
            for (std::size_t b = a + 1; b < clique->size(); ++b) {
                const Pair p = Pair::of((*clique)[a], (*clique)[b]);
                if (!g.is_built(p.u, p.v)) plan.push_back(p);
            }
        }
        stage_ = Stage::Certified;
        enqueue(open_phase("certified", {{"clique", *clique}, {"forced_pairs", plan.size()}}), plan);
        return true;
    }

    int m_;
    int n_;
    int N_;
    Stage stage_ = Stage::Sweep;
    Vertex next_vertex_ = 0;
    std::size_t sweep_phase_ = kNone;
    std::set<Pair> skipped_;
};

Rational parse_eps(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw StrategyError(StrategyError::Code::InvalidParams, "bad eps '" + text + "': " + e.what());
    }
}

int parse_positive(const std::string& key, const std::string& text) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw StrategyError(StrategyError::Code::InvalidParams, "bad value for " + key + ": '" + text + "'");
}

}  // namespace

std::unique_ptr<BuilderPolicy> naive_builder(const GameConfig& /*config*/) { return std::make_unique<NaiveBuilder>(); }

std::unique_ptr<BuilderPolicy> paper_builder(const GameConfig& config, PaperStrategyParams params) {
    return std::make_unique<PaperBuilder>(config, std::move(params));
}

std::unique_ptr<BuilderPolicy> forced_edge_builder(const GameConfig& config) {
    return std::make_unique<ForcedEdgeBuilder>(config);
}

std::unique_ptr<BuilderPolicy> make_builder(const std::string& name, const GameConfig& config,
                                            const std::vector<std::string>& overrides) {
    if (name == "paper") {
        auto params = PaperStrategyParams::defaults(config.N);
        for (const auto& o : overrides) {
            const auto eq = o.find('=');
            if (eq == std::string::npos) throw StrategyError(StrategyError::Code::InvalidParams, "bad override " + o);
            const auto key = o.substr(0, eq);
            const auto value = o.substr(eq + 1);
            if (key == "C") {
                params.parts = parse_positive(key, value);
            } else if (key == "eps") {
                params.eps = parse_eps(value);
            } else if (key == "a") {
                params.a_target = parse_positive(key, value);
            } else if (key == "b") {
                params.b_target = parse_positive(key, value);
            } else {
                throw StrategyError(StrategyError::Code::InvalidParams, "unknown paper parameter " + key);
            }
        }
        return paper_builder(config, params);
    }
    if (!overrides.empty()) {
        throw StrategyError(StrategyError::Code::InvalidParams, "builder '" + name + "' takes no parameters");
    }
    if (name == "naive") return naive_builder(config);
    if (name == "forced-edge") return forced_edge_builder(config);
    throw StrategyError(StrategyError::Code::UnknownPolicy, "unknown builder '" + name + "'");
}

}  // namespace ramsey
