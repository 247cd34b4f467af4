// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only
// when every criterion passes.

#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "corpus.hpp"
#include "dgspec/cli/report.hpp"
#include "dgspec/edge_list.hpp"
#include "dgspec/errors.hpp"
#include "dgspec/generators.hpp"
#include "dgspec/linalg.hpp"
#include "dgspec/markov.hpp"
#include "dgspec/mixing.hpp"
#include "dgspec/toughness.hpp"
#include "oracles.hpp"

using namespace dgspec;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::vector<std::string> failures;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 8) failures.push_back(what);
        }
    }
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<corpus::Entry>& full_corpus() {
    static const std::vector<corpus::Entry> c = corpus::full();
    return c;
}

SubsetPair pair_of(std::uint64_t u, std::uint64_t w, std::size_t n) {
    return {subset_from_mask(u, n), subset_from_mask(w, n)};
}

// 1. Exhaustive mixing-lemma sweep, both bound forms.
Outcome eml_exhaustive() {
    Outcome out;
    const auto start = Clock::now();
    double worst_bound = -1e300, worst_simple = -1e300, worst_gap = -1e300;
    std::size_t pairs = 0;
    for (const auto& entry : full_corpus()) {
        const SpectralProfile p = spectral_profile(entry.graph);
        const EmlReport r = verify_eml(p, {});
        const std::size_t n = entry.graph.vertex_count();
        out.require(r.pair_count == (std::size_t{1} << (2 * n)), entry.name + ": pair count");
        out.require(r.bound.max_violation <= 1e-9, entry.name + ": bound violated by " + num(r.bound.max_violation));
        out.require(r.bound_simple.max_violation <= 1e-9,
                    entry.name + ": simplified bound violated by " + num(r.bound_simple.max_violation));
        out.require(r.max_form_gap <= 1e-9, entry.name + ": bound exceeds simplified bound by " + num(r.max_form_gap));
        // independent pair-by-pair recomputation
        const oracle::EmlSweep o = oracle::eml_sweep(p);
        out.require(o.bound_violation <= 1e-9 && o.simple_violation <= 1e-9 && o.form_gap <= 1e-9,
                    entry.name + ": brute-force recomputation disagrees");
        worst_bound = std::max(worst_bound, r.bound.max_violation);
        worst_simple = std::max(worst_simple, r.bound_simple.max_violation);
        worst_gap = std::max(worst_gap, r.max_form_gap);
        pairs += r.pair_count;
    }
    const double elapsed = seconds_since(start);
    out.require(elapsed < 120.0, "runtime " + num(elapsed) + " s exceeds 120 s");
    out.detail = std::to_string(full_corpus().size()) + " graphs, " + std::to_string(pairs) +
                 " pairs; max violation " + num(worst_bound) + " / " + num(worst_simple) +
                 " (limit 1e-09), max bound - simplified " + num(worst_gap) + ", " + num(elapsed) + " s";
    return out;
}

// 2. Regular undirected graphs: classical edge-count form.
// Pairs with U = V or W = V have a radicand factor that is exactly zero in
// exact arithmetic, so roundoff in ||C||^2 is amplified by the square root.
// Those pairs are reported separately but still count against the limit.
Outcome classical_reduction() {
    Outcome out;
    double worst_excess = -1e300, worst_inner = 0.0, worst_full = 0.0;
    std::size_t mismatched = 0, mismatched_full = 0;
    std::string norms;
    for (const auto& entry : corpus::named_graphs()) {
        if (entry.name != "undirected_cycle_5" && entry.name != "petersen") continue;
        const DirectedGraph& g = entry.graph;
        const std::size_t n = g.vertex_count();
        const SpectralProfile p = spectral_profile(g);
        const RegularSpectrum s = regular_adjacency_spectrum(g);
        out.require(s.k == *entry.k, entry.name + ": degree");
        out.require(std::abs(s.mu - *entry.mu) <= 1e-9, entry.name + ": adjacency mu " + num(s.mu));
        norms += " " + entry.name + " ||C||^2 - 1 = " + num(p.norm_c * p.norm_c - 1.0) + ";";
        const double k = static_cast<double>(s.k);
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        for (std::uint64_t u = 0; u <= full; ++u) {
            for (std::uint64_t w = 0; w <= full; ++w) {
                const SubsetPair pair = pair_of(u, w, n);
                const AlonChungValues v = alon_chung_bound(g, s, pair);
                worst_excess = std::max(worst_excess, v.lhs - v.rhs);
                if (v.lhs > v.rhs + 1e-9) out.require(false, entry.name + ": edge-count inequality fails");
                const double diff = std::abs(k * eml_bound(p, pair) - v.rhs);
                const bool touches_full = u == full || w == full;
                (touches_full ? worst_full : worst_inner) = std::max(touches_full ? worst_full : worst_inner, diff);
                if (diff > 1e-8) {
                    ++mismatched;
                    mismatched_full += touches_full;
                    out.require(false, entry.name + ": U=" + std::to_string(u) + " W=" + std::to_string(w) +
                                           ": k * bound differs by " + num(diff));
                }
            }
        }
    }
    out.detail = "C5 and Petersen, all pairs; max lhs - rhs " + num(worst_excess) +
                 "; max |k * bound - classical bound| " + num(std::max(worst_inner, worst_full)) +
                 " (limit 1e-08); " + std::to_string(mismatched) + " pairs over the limit, " +
                 std::to_string(mismatched_full) + " of them with U or W the full vertex set; max on other pairs " +
                 num(worst_inner) + ";" + norms;
    return out;
}

// 3. Closed-form spectra.
Outcome closed_forms() {
    Outcome out;
    double worst = 0.0, worst_kappa = 0.0;
    for (std::size_t n = 3; n <= 8; ++n) {
        const double rho = spectral_profile(complete_bidirected(n)).rho;
        const double err = std::abs(rho - 1.0 / static_cast<double>(n - 1));
        worst = std::max(worst, err);
        out.require(err <= 1e-9, "complete_bidirected(" + std::to_string(n) + "): rho " + num(rho));
    }
    const double chord = spectral_profile(chord_cycle(3, default_chords())).rho;
    out.require(std::abs(chord - std::numbers::sqrt2 / 2.0) <= 1e-9, "chord cycle rho " + num(chord));
    worst = std::max(worst, std::abs(chord - std::numbers::sqrt2 / 2.0));
    const double c5 = spectral_profile(undirected_cycle(5)).rho;
    out.require(std::abs(c5 - std::cos(std::numbers::pi / 5.0)) <= 1e-9, "C5 rho " + num(c5));
    worst = std::max(worst, std::abs(c5 - std::cos(std::numbers::pi / 5.0)));

    std::vector<DirectedGraph> symmetric;
    for (std::size_t n = 3; n <= 8; ++n) symmetric.push_back(complete_bidirected(n));
    for (const auto& entry : full_corpus())
        if (is_symmetric(entry.graph)) symmetric.push_back(entry.graph);
    for (const DirectedGraph& g : symmetric) {
        const double kappa = spectral_profile(g).kappa;
        worst_kappa = std::max(worst_kappa, std::abs(kappa - 1.0));
        out.require(std::abs(kappa - 1.0) <= 1e-8, "symmetric graph with kappa " + num(kappa));
    }
    out.detail = "max rho error " + num(worst) + " (limit 1e-09), max |kappa - 1| on " +
                 std::to_string(symmetric.size()) + " symmetric graphs " + num(worst_kappa) + " (limit 1e-08)";
    return out;
}

// 4. Stationary distribution.
Outcome stationary() {
    Outcome out;
    double worst_fixed = 0.0, worst_sum = 0.0, worst_row = 0.0;
    for (const auto& entry : full_corpus()) {
        const SpectralProfile p = spectral_profile(entry.graph);
        const std::size_t n = p.size();
        double fixed = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < n; ++i) s += p.pi[i] * p.transition.p(i, j).real();
            fixed = std::max(fixed, std::abs(s - p.pi[j]));
        }
        const double sum = std::abs(std::accumulate(p.pi.begin(), p.pi.end(), 0.0) - 1.0);
        double row = 0.0;
        const double root_n = std::sqrt(static_cast<double>(n));
        for (std::size_t j = 0; j < n; ++j) {
            row = std::max(row, std::abs(p.decomposition.basis_inverse(0, j) - root_n * p.pi[j]));
        }
        out.require(fixed <= 1e-12, entry.name + ": fixed-point error " + num(fixed));
        out.require(sum <= 1e-12, entry.name + ": mass error " + num(sum));
        out.require(row <= 1e-8, entry.name + ": first row of C^-1 off by " + num(row));
        worst_fixed = std::max(worst_fixed, fixed);
        worst_sum = std::max(worst_sum, sum);
        worst_row = std::max(worst_row, row);
    }
    const auto pi = spectral_profile(chord_cycle(3, default_chords())).pi;
    const double chord = std::max({std::abs(pi[0] - 0.4), std::abs(pi[1] - 0.2), std::abs(pi[2] - 0.4)});
    out.require(chord <= 1e-10, "chord cycle pi off by " + num(chord));
    out.detail = "max |pi P - pi| " + num(worst_fixed) + ", max |sum - 1| " + num(worst_sum) +
                 " (limits 1e-12); chord cycle error " + num(chord) + " (limit 1e-10); max first-row deviation " +
                 num(worst_row) + " (limit 1e-08)";
    return out;
}

// 5. Eigensolver health.
Outcome eigensolver() {
    Outcome out;
    double worst_residual = 0.0;
    for (const auto& entry : full_corpus()) {
        const SpectralProfile p = spectral_profile(entry.graph);
        const DenseMatrix& a = p.transition.p;
        const EigenDecomposition& e = p.decomposition;
        const std::size_t n = a.rows();
        DenseMatrix r = a * e.basis;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) r(i, k) -= e.basis(i, k) * e.eigenvalues[k];
        const double rel = r.frobenius_norm() / a.frobenius_norm();
        worst_residual = std::max(worst_residual, rel);
        out.require(rel <= 1e-10, entry.name + ": relative residual " + num(rel));

        Complex sum = 0.0, product = 1.0;
        for (const Complex& z : e.eigenvalues) {
            sum += z;
            product *= z;
            bool paired = false;
            for (const Complex& y : e.eigenvalues) paired = paired || std::abs(y - std::conj(z)) <= 1e-10;
            out.require(paired, entry.name + ": eigenvalue without conjugate");
        }
        out.require(std::abs(sum - a.trace()) <= 1e-9 * a.frobenius_norm(), entry.name + ": trace identity");
        const Complex det = determinant(a);
        out.require(std::abs(product - det) <= 1e-8 * std::abs(det) + 1e-14, entry.name + ": determinant identity");
    }
    bool rejected = false;
    try {
        (void)spectral_profile(de_bruijn(2, 2));
    } catch (const DefectiveMatrixError&) {
        rejected = true;
    }
    out.require(rejected, "de_bruijn(2,2) was not rejected as defective");
    out.detail = "max relative residual " + num(worst_residual) +
                 " (limit 1e-10); conjugate closure, trace and determinant checked; de_bruijn(2,2) " +
                 (rejected ? "rejected as defective" : "ACCEPTED");
    return out;
}

// 6. Exact toughness against the independent enumeration.
Outcome toughness_oracle() {
    Outcome out;
    std::size_t checked = 0;
    for (const auto& entry : full_corpus()) {
        if (entry.graph.vertex_count() > 10) continue;
        const ToughnessResult r = exact_toughness(entry.graph);
        const oracle::Toughness o = oracle::toughness(entry.graph);
        std::uint64_t mask = 0;
        for (Vertex v : r.witness) mask |= std::uint64_t{1} << v;
        out.require(r.is_infinite() == o.infinite && (o.infinite || (r.value == o.value() && mask == o.mask)),
                    entry.name + ": exact " + num(r.value) + " vs oracle " + num(o.value()));
        ++checked;
    }
    const double chord = exact_toughness(chord_cycle(3, default_chords())).value;
    const double c5 = exact_toughness(undirected_cycle(5)).value;
    const double pg = exact_toughness(petersen()).value;
    out.require(chord == 0.5, "chord cycle toughness " + num(chord));
    out.require(c5 == 1.0, "C5 toughness " + num(c5));
    out.require(pg == 4.0 / 3.0, "Petersen toughness " + num(pg));
    for (std::size_t n = 3; n <= 6; ++n) {
        out.require(exact_toughness(complete_bidirected(n)).is_infinite(),
                    "complete_bidirected(" + std::to_string(n) + ") not infinite");
    }
    out.detail = std::to_string(checked) + " graphs match the Kosaraju enumeration; chord cycle " + num(chord) +
                 ", C5 " + num(c5) + ", Petersen " + num(pg) + ", complete graphs infinite";
    return out;
}

// 7. Toughness bound on regular undirected graphs.
Outcome regular_toughness() {
    Outcome out;
    double worst = 0.0;
    std::size_t count = 0;
    for (const auto& entry : full_corpus()) {
        if (!entry.k) continue;
        const double k = static_cast<double>(*entry.k), mu = *entry.mu;
        const double want = (k * k / (k * mu + mu * mu) - 1.0) / 3.0;
        const double bound = toughness_spectral_bound(spectral_profile(entry.graph));
        const double exact = exact_toughness(entry.graph).value;
        worst = std::max(worst, std::abs(bound - want));
        out.require(std::abs(bound - want) <= 1e-9, entry.name + ": bound " + num(bound) + " vs " + num(want));
        out.require(exact >= want - 1e-9, entry.name + ": exact toughness below the bound");
        ++count;
    }
    out.detail = std::to_string(count) + " regular graphs; max |bound - closed form| " + num(worst) +
                 " (limit 1e-09); exact >= bound everywhere";
    return out;
}

// 8. Toughness bound sweep over the whole corpus.
Outcome toughness_sweep() {
    Outcome out;
    const auto start = Clock::now();
    auto table = [](unsigned threads) {
        std::vector<cli::CompareRow> rows;
        ToughnessOptions options;
        options.threads = threads;
        for (const auto& entry : full_corpus()) {
            rows.push_back({entry.name, entry.graph.vertex_count(), compare_bounds(entry.graph, SpectralOptions{}, options)});
        }
        return rows;
    };
    const auto rows = table(0);
    const std::string first = cli::compare_table_csv(rows);
    const std::string second = cli::compare_table_csv(table(1));
    const double elapsed = seconds_since(start);
    out.require(first == second, "table differs between runs");
    out.require(rows.size() == full_corpus().size(), "table incomplete");
    out.require(elapsed < 60.0, "runtime " + num(elapsed) + " s exceeds 60 s");
    const fs::path path = fs::path(DGSPEC_ACCEPTANCE_TMPDIR) / "toughness_compare.csv";
    std::ofstream(path) << first;
    std::size_t holds = 0;
    for (const auto& r : rows) holds += r.comparison.holds;
    out.detail = std::to_string(rows.size()) + " rows, identical across two runs; bound holds on " +
                 std::to_string(holds) + "/" + std::to_string(rows.size()) + "; " + num(elapsed) + " s; table at " +
                 path.string();
    return out;
}

// 9. CLI determinism.
struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& command) {
    Run r;
    FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_determinism() {
    Outcome out;
    const fs::path dir = DGSPEC_ACCEPTANCE_TMPDIR;
    const std::string cli = std::string("\"") + DGSPEC_CLI_PATH + "\" --format json --seed 7 ";
    auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };
    write_edge_list(chord_cycle(3, default_chords()), dir / "chord.txt");
    write_edge_list(undirected_cycle(5), dir / "c5.txt");
    write_edge_list(petersen(), dir / "petersen.txt");
    write_edge_list(complete_bidirected(14), dir / "k14.txt");

    struct Case {
        std::string args;
        fs::path written;
    };
    const std::vector<Case> cases = {
        {"generate random_strongly_connected 8 0.3 -o " + q(dir / "random.txt"), dir / "random.txt"},
        {"generate de_bruijn 2 2 -o " + q(dir / "db.txt"), dir / "db.txt"},
        {"analyze " + q(dir / "chord.txt"), {}},
        {"analyze --eml --toughness " + q(dir / "c5.txt"), {}},
        {"eml verify " + q(dir / "c5.txt"), {}},
        {"eml verify --nonempty-only --rows 4 " + q(dir / "chord.txt"), {}},
        {"eml verify --sample 10000 " + q(dir / "k14.txt"), {}},
        {"-v eml bound " + q(dir / "chord.txt") + " --u 0 --w 1,2", {}},
        {"toughness exact " + q(dir / "petersen.txt"), {}},
        {"toughness bound " + q(dir / "chord.txt"), {}},
        {"toughness compare " + q(dir / "random.txt"), {}},
    };
    for (const Case& c : cases) {
        std::string first_out, first_file;
        for (int attempt = 0; attempt < 3; ++attempt) {
            const Run r = run(cli + c.args);
            const std::string file = c.written.empty() ? std::string() : slurp(c.written);
            out.require(r.status == 0, c.args + ": exit " + std::to_string(r.status));
            out.require(!r.out.empty() && r.out.front() == '{', c.args + ": no JSON output");
            if (attempt == 0) {
                first_out = r.out;
                first_file = file;
            } else {
                out.require(r.out == first_out, c.args + ": output differs on run " + std::to_string(attempt + 1));
                out.require(file == first_file, c.args + ": written file differs");
            }
        }
    }
    out.detail = std::to_string(cases.size()) + " commands x 3 runs, byte-identical JSON and files";
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "mixing lemma exhaustive validity", eml_exhaustive},
        {2, "classical regular-graph reduction", classical_reduction},
        {3, "spectral closed forms", closed_forms},
        {4, "stationary distribution", stationary},
        {5, "eigensolver health", eigensolver},
        {6, "toughness oracle agreement", toughness_oracle},
        {7, "toughness bound on regular graphs", regular_toughness},
        {8, "toughness bound sweep", toughness_sweep},
        {9, "CLI determinism", cli_determinism},
    };
    std::size_t passed = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str());
        for (const auto& f : o.failures) std::printf("        %s\n", f.c_str());
        passed += o.pass;
    }
    std::printf("%zu/%zu criteria passed\n", passed, criteria.size());
    return passed == criteria.size() ? 0 : 1;
}
