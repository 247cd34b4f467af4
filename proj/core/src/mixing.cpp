#include "dgspec/mixing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "dgspec/errors.hpp"
#include "parallel.hpp"

namespace dgspec {

namespace {

double stationary_mass(const SpectralProfile& profile, const VertexSubset& subset) {
    double mass = 0.0;
    for (Vertex v : subset) mass += profile.pi[v];
    return mass;
}

double transition_mass(const SpectralProfile& profile, const SubsetPair& pair) {
    double sum = 0.0;
    for (Vertex i : pair.u) {
        for (Vertex j : pair.w) sum += profile.transition.p(i, j).real();
    }
    return sum;
}

double clipped_factor(double value, const char* which) {
    if (value < -kRadicandFailure) {
        std::ostringstream msg;
        msg << "mixing bound radicand factor for " << which << " is " << value
            << " (expected >= 0); spectral data is inconsistent";
        throw NumericalError(msg.str());
    }
    return value < 0.0 ? 0.0 : value;
}

double u_factor(const SpectralProfile& profile, double u_size) {
    const double n = static_cast<double>(profile.size());
    return clipped_factor(profile.norm_c * profile.norm_c * u_size - u_size * u_size / n, "U");
}

double w_factor(const SpectralProfile& profile, double w_size, double w_mass) {
    const double n = static_cast<double>(profile.size());
    return clipped_factor(
        profile.norm_c_inv * profile.norm_c_inv * w_size - w_mass * w_mass * n, "W");
}

void check_pair(const SpectralProfile& profile, const SubsetPair& pair) {
    const std::size_t n = profile.size();
    for (const VertexSubset* s : {&pair.u, &pair.w}) {
        for (Vertex v : *s) {
            if (v >= n) throw PreconditionError("subset vertex " + std::to_string(v) + " out of range");
        }
    }
}

// Running aggregate for one bound. Pairs must be added in enumeration order
// and partials merged in that order for the worst-pair tie-break to hold.
struct Accumulator {
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t worst = 0;  // opaque pair id
    double sum_slack = 0.0;
    double tightness = 0.0;
    std::size_t violations = 0;

    void add(double lhs, double bound, std::size_t id, double tol) {
        const double slack = bound - lhs;
        if (slack < min_slack) {
            min_slack = slack;
            worst = id;
        }
        sum_slack += slack;
        if (bound > tol) tightness = std::max(tightness, lhs / bound);
        if (-slack > tol) ++violations;
    }

    void merge(const Accumulator& later) {
        if (later.min_slack < min_slack) {
            min_slack = later.min_slack;
            worst = later.worst;
        }
        sum_slack += later.sum_slack;
        tightness = std::max(tightness, later.tightness);
        violations += later.violations;
    }
};

struct Partial {
    Accumulator bound, bound_simple, u_mass;
    double max_form_gap = -std::numeric_limits<double>::infinity();
    std::vector<EmlRow> rows;
};

template <typename PairOf>
BoundSummary summarize(const Accumulator& acc, std::size_t pair_count, PairOf&& pair_of) {
    BoundSummary s;
    if (pair_count == 0) return s;
    s.min_slack = acc.min_slack;
    s.max_violation = 0.0 - acc.min_slack;  // never -0
    s.mean_slack = acc.sum_slack / static_cast<double>(pair_count);
    s.tightness_ratio = acc.tightness;
    s.violations = acc.violations;
    s.worst_pair = pair_of(acc.worst);
    return s;
}

EmlReport sweep_exhaustive(const SpectralProfile& profile, const EmlPolicy& policy) {
    const std::size_t n = profile.size();
    const std::uint64_t full = std::uint64_t{1} << n;
    const std::uint64_t first = policy.nonempty_only ? 1 : 0;
    const std::size_t subsets = static_cast<std::size_t>(full - first);
    const double tol = policy.slack_tolerance;

    // Per-W tables: stationary mass and the W radicand factor.
    std::vector<double> mass(full, 0.0), w_fac(full, 0.0);
    for (std::uint64_t w = 1; w < full; ++w) {
        const std::uint64_t rest = w & (w - 1);
        mass[w] = mass[rest] + profile.pi[std::countr_zero(w)];
    }
    for (std::uint64_t w = 0; w < full; ++w) {
        w_fac[w] = w_factor(profile, std::popcount(w), mass[w]);
    }

    std::vector<Partial> partials(subsets);
    const std::size_t rows_per_u = subsets;
    detail::parallel_for(subsets, policy.threads, [&](std::size_t index) {
        const std::uint64_t u = first + index;
        const double u_size = std::popcount(u);
        const double u_fac = u_factor(profile, u_size);
        std::vector<double> row_mass(n, 0.0);
        for (std::uint64_t rest = u; rest != 0; rest &= rest - 1) {
            const auto i = static_cast<std::size_t>(std::countr_zero(rest));
            for (std::size_t j = 0; j < n; ++j) row_mass[j] += profile.transition.p(i, j).real();
        }
        std::vector<double> block(full, 0.0);  // sum_{i in U, j in W} p_ij
        for (std::uint64_t w = 1; w < full; ++w) {
            block[w] = block[w & (w - 1)] + row_mass[std::countr_zero(w)];
        }

        Partial& part = partials[index];
        const std::size_t row_budget =
            policy.max_rows > index * rows_per_u ? policy.max_rows - index * rows_per_u : 0;
        for (std::uint64_t w = first; w < full; ++w) {
            const double lhs = std::abs(block[w] - u_size * mass[w]);
            const double bound = profile.rho * std::sqrt(u_fac * w_fac[w]);
            const double simple =
                profile.rho * std::sqrt(u_size * std::popcount(w)) * profile.kappa;
            const std::size_t id = static_cast<std::size_t>((u << n) | w);
            part.bound.add(lhs, bound, id, tol);
            part.bound_simple.add(lhs, simple, id, tol);
            part.max_form_gap = std::max(part.max_form_gap, bound - simple);
            if (policy.include_u_mass_form) {
                part.u_mass.add(std::abs(block[w] - u_size * mass[u]), bound, id, tol);
            }
            if (part.rows.size() < row_budget) {
                part.rows.push_back({{subset_from_mask(u, n), subset_from_mask(w, n)}, lhs, bound, simple});
            }
        }
    });

    Partial total = std::move(partials.front());
    for (std::size_t i = 1; i < partials.size(); ++i) {
        total.bound.merge(partials[i].bound);
        total.bound_simple.merge(partials[i].bound_simple);
        total.u_mass.merge(partials[i].u_mass);
        total.max_form_gap = std::max(total.max_form_gap, partials[i].max_form_gap);
        for (auto& row : partials[i].rows) {
            if (total.rows.size() >= policy.max_rows) break;
            total.rows.push_back(std::move(row));
        }
    }

    EmlReport report;
    report.n = n;
    report.exhaustive = true;
    report.nonempty_only = policy.nonempty_only;
    report.slack_tolerance = tol;
    report.pair_count = subsets * subsets;
    const std::uint64_t low_mask = full - 1;
    auto pair_of = [&](std::size_t id) {
        const auto packed = static_cast<std::uint64_t>(id);
        return SubsetPair{subset_from_mask(packed >> n, n), subset_from_mask(packed & low_mask, n)};
    };
    report.bound = summarize(total.bound, report.pair_count, pair_of);
    report.bound_simple = summarize(total.bound_simple, report.pair_count, pair_of);
    report.max_form_gap = total.max_form_gap;
    if (policy.include_u_mass_form) {
        report.u_mass_form = summarize(total.u_mass, report.pair_count, pair_of);
    }
    report.rows = std::move(total.rows);
    return report;
}

VertexSubset random_subset(std::mt19937_64& engine, std::size_t n) {
    VertexSubset out;
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i % 64 == 0) bits = engine();
        if (bits & 1u) out.push_back(static_cast<Vertex>(i));
        bits >>= 1;
    }
    return out;
}

EmlReport sweep_sampled(const SpectralProfile& profile, const EmlPolicy& policy) {
    const std::size_t n = profile.size();
    const double tol = policy.slack_tolerance;
    std::mt19937_64 engine(policy.seed);
    std::vector<SubsetPair> pairs(policy.sample_count);
    for (SubsetPair& pair : pairs) {
        do {
            pair.u = random_subset(engine, n);
        } while (policy.nonempty_only && pair.u.empty());
        do {
            pair.w = random_subset(engine, n);
        } while (policy.nonempty_only && pair.w.empty());
    }

    constexpr std::size_t chunk = 256;
    const std::size_t chunks = (pairs.size() + chunk - 1) / chunk;
    std::vector<Partial> partials(chunks);
    detail::parallel_for(chunks, policy.threads, [&](std::size_t c) {
        Partial& part = partials[c];
        const std::size_t end = std::min(pairs.size(), (c + 1) * chunk);
        for (std::size_t id = c * chunk; id < end; ++id) {
            const SubsetPair& pair = pairs[id];
            const double lhs = eml_lhs(profile, pair);
            const double bound = eml_bound(profile, pair);
            const double simple = eml_bound_simple(profile, pair);
            part.bound.add(lhs, bound, id, tol);
            part.bound_simple.add(lhs, simple, id, tol);
            part.max_form_gap = std::max(part.max_form_gap, bound - simple);
            if (policy.include_u_mass_form) {
                part.u_mass.add(eml_lhs(profile, pair, DeviationForm::u_mass), bound, id, tol);
            }
            if (id < policy.max_rows) part.rows.push_back({pair, lhs, bound, simple});
        }
    });

    Partial total = std::move(partials.front());
    for (std::size_t i = 1; i < partials.size(); ++i) {
        total.bound.merge(partials[i].bound);
        total.bound_simple.merge(partials[i].bound_simple);
        total.u_mass.merge(partials[i].u_mass);
        total.max_form_gap = std::max(total.max_form_gap, partials[i].max_form_gap);
        for (auto& row : partials[i].rows) total.rows.push_back(std::move(row));
    }

    EmlReport report;
    report.n = n;
    report.exhaustive = false;
    report.nonempty_only = policy.nonempty_only;
    report.slack_tolerance = tol;
    report.pair_count = pairs.size();
    auto pair_of = [&](std::size_t id) { return pairs[id]; };
    report.bound = summarize(total.bound, report.pair_count, pair_of);
    report.bound_simple = summarize(total.bound_simple, report.pair_count, pair_of);
    report.max_form_gap = total.max_form_gap;
    if (policy.include_u_mass_form) {
        report.u_mass_form = summarize(total.u_mass, report.pair_count, pair_of);
    }
    report.rows = std::move(total.rows);
    return report;
}

}  // namespace

VertexSubset subset_from_mask(std::uint64_t mask, std::size_t n) {
    VertexSubset out;
    for (std::size_t i = 0; i < n && i < 64; ++i) {
        if (mask >> i & 1u) out.push_back(static_cast<Vertex>(i));
    }
    return out;
}

VertexSubset make_subset(std::vector<Vertex> vertices, std::size_t n) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
        throw PreconditionError("subset lists a vertex twice");
    }
    if (!vertices.empty() && vertices.back() >= n) {
        throw PreconditionError("subset vertex " + std::to_string(vertices.back()) +
                                " out of range for n = " + std::to_string(n));
    }
    return vertices;
}

double eml_lhs(const SpectralProfile& profile, const SubsetPair& pair, DeviationForm form) {
    check_pair(profile, pair);
    const double mass = stationary_mass(profile, form == DeviationForm::expansion ? pair.w : pair.u);
    return std::abs(transition_mass(profile, pair) - static_cast<double>(pair.u.size()) * mass);
}

double eml_bound(const SpectralProfile& profile, const SubsetPair& pair) {
    check_pair(profile, pair);
    const double u_fac = u_factor(profile, static_cast<double>(pair.u.size()));
    const double w_fac = w_factor(profile, static_cast<double>(pair.w.size()),
                                  stationary_mass(profile, pair.w));
    return profile.rho * std::sqrt(u_fac * w_fac);
}

double eml_bound_simple(const SpectralProfile& profile, const SubsetPair& pair) {
    check_pair(profile, pair);
    return profile.rho *
           std::sqrt(static_cast<double>(pair.u.size()) * static_cast<double>(pair.w.size())) *
           profile.kappa;
}

EmlReport verify_eml(const SpectralProfile& profile, const EmlPolicy& policy) {
    if (policy.kind == EmlPolicy::Kind::sample) {
        if (policy.sample_count == 0) throw PreconditionError("sampling needs at least one pair");
        return sweep_sampled(profile, policy);
    }
    const std::size_t cap = std::min<std::size_t>(policy.exhaustive_cap, 31);
    if (profile.size() > cap) {
        throw PreconditionError("exhaustive sweep needs n <= " + std::to_string(cap) + ", got n = " +
                                std::to_string(profile.size()) + "; use sampling");
    }
    return sweep_exhaustive(profile, policy);
}

RegularSpectrum regular_adjacency_spectrum(const DirectedGraph& g) {
    const auto degree = symmetric_regular_degree(g);
    if (!degree) throw PreconditionError("graph is not a symmetric regular graph");
    const std::size_t n = g.vertex_count();
    DenseMatrix adjacency(n, n);
    for (const Edge& e : g.edges()) adjacency(e.tail, e.head) = 1.0;
    std::vector<Complex> theta = eigenvalues_nonsymmetric(adjacency);

    RegularSpectrum out;
    out.k = *degree;
    const double k = static_cast<double>(out.k);
    std::size_t top = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(theta[i] - k) < std::abs(theta[top] - k)) top = i;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (i != top) out.mu = std::max(out.mu, std::abs(theta[i]));
    }
    return out;
}

AlonChungValues alon_chung_bound(const DirectedGraph& g, const RegularSpectrum& spectrum,
                                 const SubsetPair& pair) {
    const double n = static_cast<double>(g.vertex_count());
    std::vector<bool> in_w(g.vertex_count(), false);
    for (Vertex v : pair.w) {
        if (v >= g.vertex_count()) throw PreconditionError("subset vertex out of range");
        in_w[v] = true;
    }
    double edges = 0.0;
    for (Vertex u : pair.u) {
        if (u >= g.vertex_count()) throw PreconditionError("subset vertex out of range");
        for (Vertex v : g.out_neighbors(u)) edges += in_w[v] ? 1.0 : 0.0;
    }
    const double su = static_cast<double>(pair.u.size());
    const double sw = static_cast<double>(pair.w.size());
    const double k = static_cast<double>(spectrum.k);
    AlonChungValues out;
    out.lhs = std::abs(edges - k * su * sw / n);
    out.rhs = spectrum.mu * std::sqrt(su * sw * (1.0 - su / n) * (1.0 - sw / n));
    return out;
}

AlonChungValues alon_chung_bound(const DirectedGraph& g, const SubsetPair& pair) {
    return alon_chung_bound(g, regular_adjacency_spectrum(g), pair);
}

}  // namespace dgspec
