#include "dgspec/toughness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

#include "dgspec/errors.hpp"
#include "dgspec/mixing.hpp"
#include "parallel.hpp"

namespace dgspec {

namespace {

using Mask = std::uint32_t;

// Tarjan's SCC count on the subgraph induced by `alive`, with adjacency
// given as out-neighbour bitmasks. Scratch buffers are caller-owned.
class MaskScc {
public:
    explicit MaskScc(const std::vector<Mask>& out) : out_(out), n_(out.size()) {
        index_.resize(n_);
        low_.resize(n_);
        stack_.resize(n_);
        frame_vertex_.resize(n_);
        frame_pending_.resize(n_);
    }

    std::size_t count(Mask alive) {
        constexpr int unvisited = -1;
        std::fill(index_.begin(), index_.end(), unvisited);
        Mask on_stack = 0;
        int next_index = 0;
        std::size_t stack_size = 0;
        std::size_t components = 0;

        for (Mask roots = alive; roots != 0; roots &= roots - 1) {
            const int root = std::countr_zero(roots);
            if (index_[root] != unvisited) continue;
            std::size_t depth = 0;
            auto enter = [&](int v) {
                index_[v] = low_[v] = next_index++;
                stack_[stack_size++] = v;
                on_stack |= Mask{1} << v;
                frame_vertex_[depth] = v;
                frame_pending_[depth] = out_[v] & alive;
                ++depth;
            };
            enter(root);
            while (depth > 0) {
                const int v = frame_vertex_[depth - 1];
                Mask& pending = frame_pending_[depth - 1];
                if (pending != 0) {
                    const int w = std::countr_zero(pending);
                    pending &= pending - 1;
                    if (index_[w] == unvisited) {
                        enter(w);
                    } else if (on_stack >> w & 1u) {
                        low_[v] = std::min(low_[v], index_[w]);
                    }
                    continue;
                }
                --depth;
                if (depth > 0) {
                    const int parent = frame_vertex_[depth - 1];
                    low_[parent] = std::min(low_[parent], low_[v]);
                }
                if (low_[v] == index_[v]) {
                    int w;
                    do {
                        w = stack_[--stack_size];
                        on_stack &= ~(Mask{1} << w);
                    } while (w != v);
                    ++components;
                }
            }
        }
        return components;
    }

private:
    const std::vector<Mask>& out_;
    std::size_t n_;
    std::vector<int> index_, low_, stack_, frame_vertex_;
    std::vector<Mask> frame_pending_;
};

struct Candidate {
    Mask removed = 0;
    std::size_t size = 0;
    std::size_t components = 0;  // 0 = none found

    bool better_than(const Candidate& other) const {
        if (components == 0) return false;
        if (other.components == 0) return true;
        const std::size_t lhs = size * other.components;
        const std::size_t rhs = other.size * components;
        if (lhs != rhs) return lhs < rhs;
        if (size != other.size) return size < other.size;
        return removed < other.removed;
    }
};

}  // namespace

ToughnessResult exact_toughness(const DirectedGraph& g, const ToughnessOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n > kToughnessHardLimit || (n > options.enumeration_cap && !options.allow_over_cap)) {
        throw PreconditionError("exact toughness enumerates 2^n subsets; n = " + std::to_string(n) +
                                " exceeds the cap of " +
                                std::to_string(std::min(options.enumeration_cap, kToughnessHardLimit)));
    }
    if (!is_strongly_connected(g)) {
        throw PreconditionError("toughness needs a strongly connected graph");
    }

    std::vector<Mask> out(n, 0);
    for (const Edge& e : g.edges()) out[e.tail] |= Mask{1} << e.head;
    const std::uint64_t total = std::uint64_t{1} << n;
    const Mask full = static_cast<Mask>(total - 1);

    constexpr std::uint64_t chunk = 1 << 12;
    const std::size_t chunks = static_cast<std::size_t>((total + chunk - 1) / chunk);
    std::vector<Candidate> best(chunks);
    detail::parallel_for(chunks, options.threads, [&](std::size_t c) {
        MaskScc scc_counter(out);
        Candidate local;
        const std::uint64_t begin = std::max<std::uint64_t>(1, c * chunk);
        const std::uint64_t end = std::min(total, (c + 1) * chunk);
        for (std::uint64_t i = begin; i < end; ++i) {
            // Gray-code order; i -> i ^ (i >> 1) is a bijection on [1, 2^n).
            const auto removed = static_cast<Mask>(i ^ (i >> 1));
            if (removed == full) continue;
            const std::size_t components = scc_counter.count(full & ~removed);
            if (components < 2) continue;
            Candidate cand{removed, static_cast<std::size_t>(std::popcount(removed)), components};
            if (cand.better_than(local)) local = cand;
        }
        best[c] = local;
    });

    Candidate winner;
    for (const Candidate& cand : best) {
        if (cand.better_than(winner)) winner = cand;
    }

    ToughnessResult result;
    if (winner.components == 0) return result;
    result.value = static_cast<double>(winner.size) / static_cast<double>(winner.components);
    result.component_count_at_witness = winner.components;
    for (Vertex v = 0; v < n; ++v) {
        if (winner.removed >> v & 1u) result.witness.push_back(v);
    }
    return result;
}

double toughness_spectral_bound(const SpectralProfile& profile) {
    if (profile.rho == 0.0) return kInfinite;
    const double ratio = profile.pi_min / profile.pi_max;
    const double first = ratio / (profile.rho * profile.kappa);
    const double second =
        1.0 / (1.0 + profile.rho * profile.norm_c * profile.norm_c * ratio / profile.kappa);
    return (first - second - 1.0) / 3.0;
}

double alon_toughness_formula(double k, double mu) {
    if (mu == 0.0) return kInfinite;
    return (k * k / (k * mu + mu * mu) - 1.0) / 3.0;
}

double alon_toughness_bound(const DirectedGraph& g) {
    const RegularSpectrum spectrum = regular_adjacency_spectrum(g);
    return alon_toughness_formula(static_cast<double>(spectrum.k), spectrum.mu);
}

namespace {

BoundComparison combine(ToughnessResult exact, double spectral_bound) {
    BoundComparison out;
    out.exact = std::move(exact);
    out.spectral_bound = spectral_bound;
    if (out.exact.is_infinite()) {
        out.gap = kInfinite;
        out.holds = true;
        out.note = "no vertex set disconnects the graph";
    } else if (std::isinf(out.spectral_bound)) {
        out.gap = -kInfinite;
        out.holds = false;
        out.note = "rho = 0: spectral bound is unbounded";
    } else {
        out.gap = out.exact.value - out.spectral_bound;
        out.holds = out.exact.value >= out.spectral_bound - kBoundHoldsTolerance;
    }
    return out;
}

}  // namespace

BoundComparison compare_bounds(const DirectedGraph& g, const SpectralProfile& profile,
                               const ToughnessOptions& toughness) {
    return combine(exact_toughness(g, toughness), toughness_spectral_bound(profile));
}

BoundComparison compare_bounds(const DirectedGraph& g, const SpectralOptions& spectral,
                               const ToughnessOptions& toughness) {
    // Exact toughness first: its precondition (strong connectivity) is the
    // weaker one and gives the clearer diagnostic.
    ToughnessResult exact = exact_toughness(g, toughness);
    return combine(std::move(exact), toughness_spectral_bound(spectral_profile(g, spectral)));
}

}  // namespace dgspec
