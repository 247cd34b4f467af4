#include "dgspec/cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dgspec/errors.hpp"

namespace dgspec::cli {

using nlohmann::json;

std::string_view mode_name(ToughnessMode mode) {
    switch (mode) {
        case ToughnessMode::exact: return "exact";
        case ToughnessMode::bound: return "bound";
        case ToughnessMode::compare: return "compare";
    }
    return "exact";
}

ToughnessMode parse_mode(std::string_view name) {
    if (name == "exact") return ToughnessMode::exact;
    if (name == "bound") return ToughnessMode::bound;
    if (name == "compare") return ToughnessMode::compare;
    throw PreconditionError("unknown toughness mode '" + std::string(name) +
                            "' (expected exact, bound or compare)");
}

GraphSummary summarize_graph(const DirectedGraph& g) {
    GraphSummary s;
    s.n = g.vertex_count();
    s.edge_count = g.edge_count();
    s.strongly_connected = is_strongly_connected(g);
    if (s.strongly_connected) s.period = period(g);
    for (Vertex v = 0; v < s.n; ++v) s.labels.push_back(g.label(v));
    return s;
}

SpectralSection summarize_spectrum(const SpectralProfile& profile) {
    SpectralSection s;
    const EigenDecomposition& eig = profile.decomposition;
    s.eigenvalues = eig.eigenvalues;
    s.rho = profile.rho;
    s.pi = profile.pi;
    s.pi_min = profile.pi_min;
    s.pi_max = profile.pi_max;
    s.norm_c = profile.norm_c;
    s.norm_c_inv = profile.norm_c_inv;
    s.kappa = profile.kappa;
    s.residual = eig.residual;
    s.inverse_residual = eig.inverse_residual;
    const SymbolCheck check = eml_symbol_check(profile);
    s.first_row_deviation = check.first_row_deviation;
    s.dominant_eigenvalue_deviation = check.dominant_eigenvalue_deviation;
    return s;
}

ToughnessSection toughness_section(const BoundComparison& comparison) {
    ToughnessSection s;
    s.mode = ToughnessMode::compare;
    s.exact = comparison.exact;
    s.spectral_bound = comparison.spectral_bound;
    s.gap = comparison.gap;
    s.holds = comparison.holds;
    s.note = comparison.note;
    return s;
}

// ---- JSON ----------------------------------------------------------------

namespace {

json real(double x) {
    if (std::isfinite(x)) return x;
    if (x > 0) return "infinite";
    if (x < 0) return "-infinite";
    return "nan";
}

double real_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "infinite") return kInfinite;
        if (s == "-infinite") return -kInfinite;
        if (s == "nan") return std::nan("");
    }
    throw ParseError("expected a number or \"infinite\", got " + j.dump());
}

json subset_json(const VertexSubset& s) { return json(s); }

json pair_json(const SubsetPair& p) { return {{"u", subset_json(p.u)}, {"w", subset_json(p.w)}}; }

SubsetPair pair_from(const json& j) {
    return {j.at("u").get<VertexSubset>(), j.at("w").get<VertexSubset>()};
}

json summary_json(const BoundSummary& s) {
    return {{"max_violation", real(s.max_violation)},
            {"worst_pair", pair_json(s.worst_pair)},
            {"min_slack", real(s.min_slack)},
            {"mean_slack", real(s.mean_slack)},
            {"tightness_ratio", real(s.tightness_ratio)},
            {"violations", s.violations}};
}

BoundSummary summary_from(const json& j) {
    BoundSummary s;
    s.max_violation = real_from(j.at("max_violation"));
    s.worst_pair = pair_from(j.at("worst_pair"));
    s.min_slack = real_from(j.at("min_slack"));
    s.mean_slack = real_from(j.at("mean_slack"));
    s.tightness_ratio = real_from(j.at("tightness_ratio"));
    s.violations = j.at("violations").get<std::size_t>();
    return s;
}

json eml_json(const EmlReport& r) {
    json j = {{"n", r.n},
              {"pair_count", r.pair_count},
              {"exhaustive", r.exhaustive},
              {"nonempty_only", r.nonempty_only},
              {"slack_tolerance", real(r.slack_tolerance)},
              {"passed", r.passed()},
              {"bound", summary_json(r.bound)},
              {"bound_simple", summary_json(r.bound_simple)},
              {"max_form_gap", real(r.max_form_gap)}};
    if (r.u_mass_form) j["u_mass_form"] = summary_json(*r.u_mass_form);
    if (!r.rows.empty()) {
        json rows = json::array();
        for (const EmlRow& row : r.rows) {
            rows.push_back({{"u", subset_json(row.pair.u)},
                            {"w", subset_json(row.pair.w)},
                            {"lhs", real(row.lhs)},
                            {"bound", real(row.bound)},
                            {"bound_simple", real(row.bound_simple)}});
        }
        j["rows"] = std::move(rows);
    }
    return j;
}

EmlReport eml_from(const json& j) {
    EmlReport r;
    r.n = j.at("n").get<std::size_t>();
    r.pair_count = j.at("pair_count").get<std::size_t>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    r.nonempty_only = j.at("nonempty_only").get<bool>();
    r.slack_tolerance = real_from(j.at("slack_tolerance"));
    r.bound = summary_from(j.at("bound"));
    r.bound_simple = summary_from(j.at("bound_simple"));
    r.max_form_gap = real_from(j.at("max_form_gap"));
    if (j.contains("u_mass_form")) r.u_mass_form = summary_from(j.at("u_mass_form"));
    if (j.contains("rows")) {
        for (const json& row : j.at("rows")) {
            r.rows.push_back({pair_from(row), real_from(row.at("lhs")), real_from(row.at("bound")),
                              real_from(row.at("bound_simple"))});
        }
    }
    return r;
}

json toughness_json(const ToughnessSection& t) {
    json j = {{"mode", std::string(mode_name(t.mode))}};
    if (t.exact) {
        json e = {{"value", real(t.exact->value)}};
        if (!t.exact->is_infinite()) {
            e["witness"] = subset_json(t.exact->witness);
            e["component_count"] = t.exact->component_count_at_witness;
        }
        j["exact"] = std::move(e);
    }
    if (t.spectral_bound) j["spectral_bound"] = real(*t.spectral_bound);
    if (t.gap) j["gap"] = real(*t.gap);
    if (t.holds) j["holds"] = *t.holds;
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

ToughnessSection toughness_from(const json& j) {
    ToughnessSection t;
    t.mode = parse_mode(j.at("mode").get<std::string>());
    if (j.contains("exact")) {
        const json& e = j.at("exact");
        ToughnessResult r;
        r.value = real_from(e.at("value"));
        if (e.contains("witness")) {
            r.witness = e.at("witness").get<std::vector<Vertex>>();
            r.component_count_at_witness = e.at("component_count").get<std::size_t>();
        }
        t.exact = std::move(r);
    }
    if (j.contains("spectral_bound")) t.spectral_bound = real_from(j.at("spectral_bound"));
    if (j.contains("gap")) t.gap = real_from(j.at("gap"));
    if (j.contains("holds")) t.holds = j.at("holds").get<bool>();
    if (j.contains("note")) t.note = j.at("note").get<std::string>();
    return t;
}

}  // namespace

json to_json(const AnalysisReport& report) {
    json j;
    j["command"] = report.command;
    const GraphSummary& g = report.graph;
    j["graph"] = {{"n", g.n},
                  {"edge_count", g.edge_count},
                  {"strongly_connected", g.strongly_connected},
                  {"labels", g.labels}};
    if (g.period) j["graph"]["period"] = *g.period;

    if (report.spectral) {
        const SpectralSection& s = *report.spectral;
        json eigenvalues = json::array();
        for (const Complex& z : s.eigenvalues) {
            eigenvalues.push_back({{"re", real(z.real())}, {"im", real(z.imag())}});
        }
        j["spectral"] = {{"eigenvalues", std::move(eigenvalues)},
                         {"rho", real(s.rho)},
                         {"pi", s.pi},
                         {"pi_min", real(s.pi_min)},
                         {"pi_max", real(s.pi_max)},
                         {"norm_c", real(s.norm_c)},
                         {"norm_c_inv", real(s.norm_c_inv)},
                         {"kappa", real(s.kappa)},
                         {"residual", real(s.residual)},
                         {"inverse_residual", real(s.inverse_residual)},
                         {"first_row_deviation", real(s.first_row_deviation)},
                         {"dominant_eigenvalue_deviation", real(s.dominant_eigenvalue_deviation)}};
    }
    if (report.eml) j["eml"] = eml_json(*report.eml);
    if (report.pair) {
        const PairEvaluation& p = *report.pair;
        j["pair"] = {{"u", subset_json(p.pair.u)},
                     {"w", subset_json(p.pair.w)},
                     {"lhs", real(p.lhs)},
                     {"bound", real(p.bound)},
                     {"bound_simple", real(p.bound_simple)},
                     {"holds", p.holds}};
        if (p.lhs_u_mass) j["pair"]["lhs_u_mass"] = real(*p.lhs_u_mass);
    }
    if (report.toughness) j["toughness"] = toughness_json(*report.toughness);
    if (report.output) j["output"] = *report.output;
    return j;
}

AnalysisReport report_from_json(const json& doc) {
    try {
        AnalysisReport r;
        r.command = doc.at("command").get<std::string>();
        const json& g = doc.at("graph");
        r.graph.n = g.at("n").get<std::size_t>();
        r.graph.edge_count = g.at("edge_count").get<std::size_t>();
        r.graph.strongly_connected = g.at("strongly_connected").get<bool>();
        r.graph.labels = g.at("labels").get<std::vector<std::string>>();
        if (g.contains("period")) r.graph.period = g.at("period").get<std::size_t>();

        if (doc.contains("spectral")) {
            const json& s = doc.at("spectral");
            SpectralSection out;
            for (const json& z : s.at("eigenvalues")) {
                out.eigenvalues.emplace_back(real_from(z.at("re")), real_from(z.at("im")));
            }
            out.rho = real_from(s.at("rho"));
            for (const json& x : s.at("pi")) out.pi.push_back(real_from(x));
            out.pi_min = real_from(s.at("pi_min"));
            out.pi_max = real_from(s.at("pi_max"));
            out.norm_c = real_from(s.at("norm_c"));
            out.norm_c_inv = real_from(s.at("norm_c_inv"));
            out.kappa = real_from(s.at("kappa"));
            out.residual = real_from(s.at("residual"));
            out.inverse_residual = real_from(s.at("inverse_residual"));
            out.first_row_deviation = real_from(s.at("first_row_deviation"));
            out.dominant_eigenvalue_deviation = real_from(s.at("dominant_eigenvalue_deviation"));
            r.spectral = std::move(out);
        }
        if (doc.contains("eml")) r.eml = eml_from(doc.at("eml"));
        if (doc.contains("pair")) {
            const json& p = doc.at("pair");
            PairEvaluation out;
            out.pair = pair_from(p);
            out.lhs = real_from(p.at("lhs"));
            out.bound = real_from(p.at("bound"));
            out.bound_simple = real_from(p.at("bound_simple"));
            out.holds = p.at("holds").get<bool>();
            if (p.contains("lhs_u_mass")) out.lhs_u_mass = real_from(p.at("lhs_u_mass"));
            r.pair = std::move(out);
        }
        if (doc.contains("toughness")) r.toughness = toughness_from(doc.at("toughness"));
        if (doc.contains("output")) r.output = doc.at("output").get<std::string>();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

std::string render_json(const AnalysisReport& report) { return to_json(report).dump(2) + "\n"; }

// ---- text ----------------------------------------------------------------

namespace {

std::string fmt(double x, int digits) {
    if (std::isinf(x)) return x > 0 ? "infinite" : "-infinite";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

std::string text_real(double x) { return fmt(x, 7); }

std::string text_complex(Complex z) {
    if (z.imag() == 0.0) return text_real(z.real());
    const char sign = z.imag() < 0 ? '-' : '+';
    return text_real(z.real()) + " " + sign + " " + text_real(std::abs(z.imag())) + "i";
}

std::string text_subset(const VertexSubset& s, const std::vector<std::string>& labels) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += s[i] < labels.size() ? labels[s[i]] : std::to_string(s[i]);
    }
    return out + "}";
}

void text_summary(std::ostream& os, const char* name, const BoundSummary& s,
                  const std::vector<std::string>& labels) {
    os << "  " << name << ": max violation " << text_real(s.max_violation) << ", mean slack "
       << text_real(s.mean_slack) << ", tightness " << text_real(s.tightness_ratio) << ", "
       << s.violations << " violation(s); worst U = " << text_subset(s.worst_pair.u, labels)
       << ", W = " << text_subset(s.worst_pair.w, labels) << "\n";
}

}  // namespace

std::string render_text(const AnalysisReport& report) {
    std::ostringstream os;
    const GraphSummary& g = report.graph;
    os << "graph: " << g.n << " vertices, " << g.edge_count << " edges, "
       << (g.strongly_connected ? "strongly connected" : "not strongly connected");
    if (g.period) os << ", period " << *g.period;
    os << "\n";
    if (report.output) os << "wrote " << *report.output << "\n";

    if (report.spectral) {
        const SpectralSection& s = *report.spectral;
        os << "eigenvalues:\n";
        for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
            os << "  lambda_" << k + 1 << " = " << text_complex(s.eigenvalues[k]) << "\n";
        }
        os << "rho = " << text_real(s.rho) << "\n";
        os << "pi = (";
        for (std::size_t i = 0; i < s.pi.size(); ++i) os << (i ? ", " : "") << text_real(s.pi[i]);
        os << ")\n";
        os << "pi_min = " << text_real(s.pi_min) << ", pi_max = " << text_real(s.pi_max) << "\n";
        os << "||C|| = " << text_real(s.norm_c) << ", ||C^-1|| = " << text_real(s.norm_c_inv)
           << ", kappa(C) = " << text_real(s.kappa) << "\n";
        os << "residual ||PC - C diag(lambda)||_F = " << text_real(s.residual) << "\n";
        os << "first row of C^-1 vs sqrt(n) pi: deviation " << text_real(s.first_row_deviation)
           << "\n";
    }

    if (report.eml) {
        const EmlReport& e = *report.eml;
        os << "EML sweep: " << (e.exhaustive ? "exhaustive" : "sampled") << ", " << e.pair_count
           << " pairs" << (e.nonempty_only ? " (nonempty subsets only)" : "")
           << ", slack tolerance " << text_real(e.slack_tolerance) << "\n";
        text_summary(os, "bound       ", e.bound, g.labels);
        text_summary(os, "bound_simple", e.bound_simple, g.labels);
        if (e.u_mass_form) text_summary(os, "|U|pi(U) form", *e.u_mass_form, g.labels);
        os << "  max(bound - simplified bound) = " << text_real(e.max_form_gap) << "\n";
        for (const EmlRow& row : e.rows) {
            os << "  U = " << text_subset(row.pair.u, g.labels)
               << ", W = " << text_subset(row.pair.w, g.labels) << ": lhs " << text_real(row.lhs)
               << ", bound " << text_real(row.bound) << ", simplified " << text_real(row.bound_simple)
               << "\n";
        }
        os << "result: " << (e.passed() ? "PASS" : "FAIL") << "\n";
    }

    if (report.pair) {
        const PairEvaluation& p = *report.pair;
        os << "U = " << text_subset(p.pair.u, g.labels) << ", W = " << text_subset(p.pair.w, g.labels)
           << "\n";
        os << "lhs = " << text_real(p.lhs) << "\n";
        if (p.lhs_u_mass) os << "lhs with |U|pi(U) = " << text_real(*p.lhs_u_mass) << "\n";
        os << "bound = " << text_real(p.bound) << "\n";
        os << "simplified bound = " << text_real(p.bound_simple) << "\n";
        os << "result: " << (p.holds ? "holds" : "VIOLATED") << "\n";
    }

    if (report.toughness) {
        const ToughnessSection& t = *report.toughness;
        if (t.exact) {
            const ToughnessResult& r = *t.exact;
            os << "exact toughness = " << text_real(r.value);
            if (!r.is_infinite()) {
                os << " (" << r.witness.size() << "/" << r.component_count_at_witness
                   << ", witness S = " << text_subset(r.witness, g.labels) << ")";
            }
            os << "\n";
        }
        if (t.spectral_bound) os << "spectral bound = " << text_real(*t.spectral_bound) << "\n";
        if (t.gap) os << "gap = " << text_real(*t.gap) << "\n";
        if (t.holds) os << "bound holds: " << (*t.holds ? "yes" : "no") << "\n";
        if (!t.note.empty()) os << "note: " << t.note << "\n";
    }
    return os.str();
}

// ---- CSV -----------------------------------------------------------------

namespace {

std::string csv_real(double x) { return fmt(x, 17); }

std::string csv_subset(const VertexSubset& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(s[i]);
    }
    return out;
}

class CsvWriter {
public:
    void row(const std::string& section, const std::string& key, const std::string& value) {
        os_ << section << ',' << key << ',' << quote(value) << '\n';
    }
    void real(const std::string& section, const std::string& key, double x) {
        row(section, key, csv_real(x));
    }
    std::string str() const { return os_.str(); }

private:
    static std::string quote(const std::string& v) {
        if (v.find_first_of(",\"\n") == std::string::npos) return v;
        std::string out = "\"";
        for (char c : v) {
            if (c == '"') out += '"';
            out += c;
        }
        return out + "\"";
    }
    std::ostringstream os_;
};

void csv_summary(CsvWriter& w, const std::string& section, const BoundSummary& s) {
    w.real(section, "max_violation", s.max_violation);
    w.row(section, "worst_u", csv_subset(s.worst_pair.u));
    w.row(section, "worst_w", csv_subset(s.worst_pair.w));
    w.real(section, "min_slack", s.min_slack);
    w.real(section, "mean_slack", s.mean_slack);
    w.real(section, "tightness_ratio", s.tightness_ratio);
    w.row(section, "violations", std::to_string(s.violations));
}

}  // namespace

std::string render_csv(const AnalysisReport& report) {
    CsvWriter w;
    w.row("section", "key", "value");
    w.row("report", "command", report.command);
    const GraphSummary& g = report.graph;
    w.row("graph", "n", std::to_string(g.n));
    w.row("graph", "edge_count", std::to_string(g.edge_count));
    w.row("graph", "strongly_connected", g.strongly_connected ? "true" : "false");
    if (g.period) w.row("graph", "period", std::to_string(*g.period));
    for (std::size_t i = 0; i < g.labels.size(); ++i) {
        w.row("graph", "label[" + std::to_string(i) + "]", g.labels[i]);
    }
    if (report.output) w.row("report", "output", *report.output);

    if (report.spectral) {
        const SpectralSection& s = *report.spectral;
        for (std::size_t k = 0; k < s.eigenvalues.size(); ++k) {
            const std::string key = "eigenvalue[" + std::to_string(k) + "]";
            w.real("spectral", key + ".re", s.eigenvalues[k].real());
            w.real("spectral", key + ".im", s.eigenvalues[k].imag());
        }
        w.real("spectral", "rho", s.rho);
        for (std::size_t i = 0; i < s.pi.size(); ++i) {
            w.real("spectral", "pi[" + std::to_string(i) + "]", s.pi[i]);
        }
        w.real("spectral", "pi_min", s.pi_min);
        w.real("spectral", "pi_max", s.pi_max);
        w.real("spectral", "norm_c", s.norm_c);
        w.real("spectral", "norm_c_inv", s.norm_c_inv);
        w.real("spectral", "kappa", s.kappa);
        w.real("spectral", "residual", s.residual);
        w.real("spectral", "inverse_residual", s.inverse_residual);
        w.real("spectral", "first_row_deviation", s.first_row_deviation);
        w.real("spectral", "dominant_eigenvalue_deviation", s.dominant_eigenvalue_deviation);
    }

    if (report.eml) {
        const EmlReport& e = *report.eml;
        w.row("eml", "n", std::to_string(e.n));
        w.row("eml", "pair_count", std::to_string(e.pair_count));
        w.row("eml", "exhaustive", e.exhaustive ? "true" : "false");
        w.row("eml", "nonempty_only", e.nonempty_only ? "true" : "false");
        w.real("eml", "slack_tolerance", e.slack_tolerance);
        w.row("eml", "passed", e.passed() ? "true" : "false");
        w.real("eml", "max_form_gap", e.max_form_gap);
        csv_summary(w, "eml.bound", e.bound);
        csv_summary(w, "eml.bound_simple", e.bound_simple);
        if (e.u_mass_form) csv_summary(w, "eml.u_mass_form", *e.u_mass_form);
        for (std::size_t i = 0; i < e.rows.size(); ++i) {
            const std::string key = "row[" + std::to_string(i) + "]";
            const EmlRow& r = e.rows[i];
            w.row("eml", key + ".u", csv_subset(r.pair.u));
            w.row("eml", key + ".w", csv_subset(r.pair.w));
            w.real("eml", key + ".lhs", r.lhs);
            w.real("eml", key + ".bound", r.bound);
            w.real("eml", key + ".bound_simple", r.bound_simple);
        }
    }

    if (report.pair) {
        const PairEvaluation& p = *report.pair;
        w.row("pair", "u", csv_subset(p.pair.u));
        w.row("pair", "w", csv_subset(p.pair.w));
        w.real("pair", "lhs", p.lhs);
        if (p.lhs_u_mass) w.real("pair", "lhs_u_mass", *p.lhs_u_mass);
        w.real("pair", "bound", p.bound);
        w.real("pair", "bound_simple", p.bound_simple);
        w.row("pair", "holds", p.holds ? "true" : "false");
    }

    if (report.toughness) {
        const ToughnessSection& t = *report.toughness;
        w.row("toughness", "mode", std::string(mode_name(t.mode)));
        if (t.exact) {
            w.real("toughness", "exact", t.exact->value);
            if (!t.exact->is_infinite()) {
                w.row("toughness", "witness", csv_subset(t.exact->witness));
                w.row("toughness", "component_count",
                      std::to_string(t.exact->component_count_at_witness));
            }
        }
        if (t.spectral_bound) w.real("toughness", "spectral_bound", *t.spectral_bound);
        if (t.gap) w.real("toughness", "gap", *t.gap);
        if (t.holds) w.row("toughness", "holds", *t.holds ? "true" : "false");
        if (!t.note.empty()) w.row("toughness", "note", t.note);
    }
    return w.str();
}

std::string render(const AnalysisReport& report, OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return render_json(report);
        case OutputFormat::csv: return render_csv(report);
        case OutputFormat::text: break;
    }
    return render_text(report);
}

std::string compare_table_csv(const std::vector<CompareRow>& rows) {
    std::ostringstream os;
    os << "graph,n,exact,spectral_bound,gap,holds\n";
    for (const CompareRow& row : rows) {
        const BoundComparison& c = row.comparison;
        os << row.graph << ',' << row.n << ',' << csv_real(c.exact.value) << ',' << csv_real(c.spectral_bound)
           << ',' << csv_real(c.gap) << ',' << (c.holds ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace dgspec::cli
