#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <variant>

#include <CLI11.hpp>

#include "planardist/bounds.hpp"
#include "planardist/classify.hpp"
#include "planardist/connectivity.hpp"
#include "planardist/discrepancy.hpp"
#include "planardist/embedding.hpp"
#include "planardist/enumerate.hpp"
#include "planardist/families.hpp"
#include "planardist/graph6.hpp"
#include "planardist/lemmas.hpp"
#include "planardist/report_json.hpp"
#include "planardist/sweep.hpp"

namespace planardist {

namespace {

// An operational problem; the message names the offending field.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Request {
    std::string command;
    std::string in_path;
    std::string g6;
    std::string family;
    int n = 0;
    int kappa = 0;
    int d = 0;
    int n_max = 0;
    std::string cls;
    std::string format;
    std::string out_path;
    std::uint64_t seed = 1;
    std::string resume;
    std::string lemma;
    std::size_t count = 0;
    std::size_t stop_after = 0;
    int recount_max = 8;
    bool timing = false;

    CLI::Option* in_opt = nullptr;
    CLI::Option* g6_opt = nullptr;
    CLI::Option* family_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* kappa_opt = nullptr;
    CLI::Option* d_opt = nullptr;
    CLI::Option* n_max_opt = nullptr;
    CLI::Option* class_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* count_opt = nullptr;
    CLI::Option* stop_opt = nullptr;
};

const std::vector<std::string> kCommands = {"params", "family",   "classify", "lemmas",
                                            "check",  "enumerate", "sweep",   "discrepancy"};

std::vector<std::string> formats_for(const std::string& command) {
    if (command == "family") return {"g6", "json", "text", "csv"};
    if (command == "enumerate") return {"g6", "json", "text"};
    if (command == "lemmas" || command == "discrepancy") return {"json", "text"};
    return {"json", "csv", "text"};
}

std::string join(const std::vector<std::string>& items) {
    std::string s;
    for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
    return s;
}

void resolve_format(Request& r) {
    const auto allowed = formats_for(r.command);
    if (r.format.empty()) {
        r.format = allowed.front();
        return;
    }
    if (std::find(allowed.begin(), allowed.end(), r.format) == allowed.end())
        throw UsageError("format: '" + r.format + "' is not valid for " + r.command + " (expected " + join(allowed) +
                         ")");
}

FamilySpec family_spec(const Request& r) {
    FamilySpec spec;
    try {
        spec.name = parse_family_name(r.family);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("family: ") + e.what());
    }
    if (!r.n_opt->count()) throw UsageError("n: --family needs --n");
    spec.n = r.n;
    if (r.kappa_opt->count()) spec.kappa = r.kappa;
    if (r.d_opt->count()) spec.d = r.d;
    const std::string why = admissibility_error(spec);
    if (!why.empty()) throw UsageError("family " + describe(spec) + " inadmissible: " + why);
    return spec;
}

std::vector<Graph> input_graphs(const Request& r, std::istream& in) {
    const int sources = static_cast<int>(r.in_opt->count() > 0) + static_cast<int>(r.g6_opt->count() > 0) +
                        static_cast<int>(r.family_opt->count() > 0);
    if (sources != 1) throw UsageError("input: give exactly one of --in, --g6, --family");
    try {
        if (r.g6_opt->count()) return {from_graph6(r.g6)};
        if (r.family_opt->count()) return {generate(family_spec(r)).graph};
        std::vector<Graph> graphs;
        if (r.in_path == "-") {
            graphs = read_graph6_stream(in);
        } else {
            std::ifstream file(r.in_path);
            if (!file) throw UsageError("in: cannot read '" + r.in_path + "'");
            graphs = read_graph6_stream(file);
        }
        if (graphs.empty()) throw UsageError("in: no graphs in '" + r.in_path + "'");
        return graphs;
    } catch (const UsageError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string(r.g6_opt->count() ? "g6: " : "in: ") + e.what());
    }
}

void require_connected(const Graph& g) {
    if (g.order() < 2 || !is_connected(g))
        throw UsageError("input: graph " + to_graph6(g) + " must be connected with at least 2 vertices");
}

// Joins per-graph outputs: a JSON array for several graphs, CSV with one
// header, text blocks separated by blank lines.
class Collector {
public:
    explicit Collector(std::string format) : format_(std::move(format)) {}

    void json(Json j) { items_.push_back(std::move(j)); }
    void csv(const std::string& block) {
        if (text_.empty()) {
            text_ = block;
        } else {
            const auto eol = block.find('\n');
            text_ += eol == std::string::npos ? "" : block.substr(eol + 1);
        }
    }
    void text(const std::string& block) { text_ += (text_.empty() ? "" : "\n") + block; }

    std::string str() const {
        if (format_ != "json") return text_;
        const Json j = items_.size() == 1 ? items_.front() : Json(items_);
        return j.dump(2) + "\n";
    }

private:
    std::string format_;
    std::vector<Json> items_;
    std::string text_;
};

int cmd_params(const Request& r, std::istream& in, std::string& result) {
    Collector c(r.format);
    for (const Graph& g : input_graphs(r, in)) {
        require_connected(g);
        const ParamSummary p = param_summary(g);
        const int kappa = connectivity_number(g);
        if (r.format == "json") c.json(params_json(g, p, kappa));
        else if (r.format == "csv") c.csv(params_csv(g, p, kappa));
        else c.text(params_text(g, p, kappa));
    }
    result = c.str();
    return kExitOk;
}

int cmd_family(const Request& r, std::string& result) {
    if (!r.family_opt->count()) throw UsageError("family: the family command needs --family");
    const FamilySpec spec = family_spec(r);
    const LabeledGraph g = generate(spec);
    if (r.format == "g6") {
        result = to_graph6(g.graph) + "\n";
        return kExitOk;
    }
    if (r.format == "csv") {
        std::ostringstream out;
        out << "vertex,label\n";
        for (std::size_t v = 0; v < g.labels.size(); ++v) out << v << ',' << g.labels[v] << '\n';
        result = out.str();
        return kExitOk;
    }
    const ClosedForms f = closed_forms(spec);
    const ParamSummary p = param_summary(g.graph);
    const Json j = closed_forms_json(f, g, p);
    if (r.format == "json") {
        result = j.dump(2) + "\n";
        return kExitOk;
    }
    std::ostringstream out;
    out << describe(spec) << '\n' << "graph6: " << to_graph6(g.graph) << '\n' << "labels:";
    for (std::size_t v = 0; v < g.labels.size(); ++v) out << ' ' << v << '=' << g.labels[v];
    out << '\n';
    for (const auto& [name, field] : j["closed_forms"].items()) {
        out << name << ": stated " << field["stated"]["num"].get<std::int64_t>() << '/'
            << field["stated"]["den"].get<std::int64_t>() << ", computed "
            << field["computed"]["num"].get<std::int64_t>() << '/' << field["computed"]["den"].get<std::int64_t>()
            << " (" << field["provenance"].get<std::string>() << (field["matches"].get<bool>() ? ", match" : ", differ")
            << ")\n";
    }
    result = out.str();
    return kExitOk;
}

Json classify_json(const Graph& g) {
    Json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    const ClassFlags f = classify(g);
    j["flags"] = flags_json(f);
    const ConnectivityResult kc = vertex_connectivity(g);
    j["kappa"] = kc.kappa;
    j["separator"] = kc.witness_cut ? Json(*kc.witness_cut) : Json(nullptr);
    if (f.connected && g.order() >= 1) {
        auto emb = embed_planar(g);
        if (const auto* e = std::get_if<Embedding>(&emb)) {
            j["faces"] = e->faces;
            j["rotation"] = e->rotation;
        } else {
            const auto& w = std::get<KuratowskiWitness>(emb);
            j["kuratowski"] = {{"kind", w.kind == KuratowskiKind::K5 ? "K5" : "K3,3"},
                               {"branch_vertices", w.branch_vertices},
                               {"paths", w.paths}};
        }
    }
    return j;
}

int cmd_classify(const Request& r, std::istream& in, std::string& result) {
    Collector c(r.format);
    for (const Graph& g : input_graphs(r, in)) {
        const Json j = classify_json(g);
        if (r.format == "json") {
            c.json(j);
        } else if (r.format == "csv") {
            std::ostringstream out;
            out << "graph6,n,m,kappa";
            for (const auto& [k, v] : j["flags"].items()) out << ',' << k;
            out << "\n\"" << j["graph6"].get<std::string>() << "\"," << g.order() << ',' << g.edge_count() << ','
                << j["kappa"].get<int>();
            for (const auto& [k, v] : j["flags"].items()) out << ',' << (v.get<bool>() ? 1 : 0);
            out << '\n';
            c.csv(out.str());
        } else {
            std::ostringstream out;
            out << "graph6: " << j["graph6"].get<std::string>() << "  n: " << g.order() << "  m: " << g.edge_count()
                << "  kappa: " << j["kappa"].get<int>() << '\n';
            for (const auto& [k, v] : j["flags"].items()) out << k << ": " << (v.get<bool>() ? "yes" : "no") << '\n';
            if (j.contains("rotation")) {
                out << "rotation:\n" << rotation_text(j["rotation"].get<RotationSystem>());
            } else if (j.contains("kuratowski")) {
                out << "kuratowski: " << j["kuratowski"]["kind"].get<std::string>() << " on";
                for (const auto& v : j["kuratowski"]["branch_vertices"]) out << ' ' << v.get<int>();
                out << '\n';
            }
            c.text(out.str());
        }
    }
    result = c.str();
    return kExitOk;
}

int cmd_lemmas(const Request& r, std::istream& in, std::string& result) {
    Collector c(r.format);
    bool failed = false;
    for (const Graph& g : input_graphs(r, in)) {
        require_connected(g);
        std::vector<LemmaId> ids;
        if (!r.lemma.empty()) {
            LemmaId id;
            try {
                id = parse_lemma_id(r.lemma);
            } catch (const std::invalid_argument& e) {
                throw UsageError(std::string("lemma: ") + e.what());
            }
            try {
                require_lemma_class(g, id);
            } catch (const std::invalid_argument& e) {
                throw UsageError("lemma: " + to_string(id) + " does not apply to " + to_graph6(g) + ": " + e.what());
            }
            ids.push_back(id);
        } else {
            for (LemmaId id : {LemmaId::L3_1a, LemmaId::L3_1b, LemmaId::L3_1c, LemmaId::L3_2, LemmaId::L3_3}) {
                try {
                    require_lemma_class(g, id);
                    ids.push_back(id);
                } catch (const std::invalid_argument&) {
                }
            }
            if (ids.empty()) throw UsageError("lemma: no lemma applies to " + to_graph6(g));
        }
        for (LemmaId id : ids) {
            const auto reports = check_lemma(g, id);
            const Json j = lemma_reports_json(g, id, reports);
            failed = failed || !j["pass"].get<bool>();
            if (r.format == "json") {
                c.json(j);
            } else {
                std::ostringstream out;
                out << to_string(id) << ' ' << to_graph6(g) << ": " << (j["pass"].get<bool>() ? "pass" : "FAIL")
                    << " (" << reports.size() << " root/level checks)\n";
                for (const auto& rep : reports) {
                    if (rep.pass) continue;
                    out << "  root " << rep.root << " level " << rep.level << " counterexample";
                    for (Vertex v : rep.counterexample->vertices) out << ' ' << v;
                    out << '\n';
                }
                c.text(out.str());
            }
        }
    }
    result = c.str();
    return failed ? kExitFinding : kExitOk;
}

int cmd_check(const Request& r, std::istream& in, std::string& result) {
    Collector c(r.format);
    bool violation = false;
    for (const Graph& g : input_graphs(r, in)) {
        require_connected(g);
        const BoundReport rep = check_bounds(g);
        violation = violation || rep.has_violation();
        if (r.format == "json") c.json(bound_report_json(rep));
        else if (r.format == "csv") c.csv(bound_report_csv(rep));
        else c.text(bound_report_text(rep));
    }
    result = c.str();
    return violation ? kExitFinding : kExitOk;
}

GraphClass graph_class(const Request& r) {
    if (!r.class_opt->count()) throw UsageError("class: --class is required for " + r.command);
    try {
        return parse_graph_class(r.cls);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("class: ") + e.what());
    }
}

int cmd_enumerate(const Request& r, std::string& result) {
    const GraphClass cls = graph_class(r);
    std::vector<Graph> graphs;
    if (cls == GraphClass::random_connected) {
        if (!r.n_max_opt->count()) throw UsageError("n-max: random_connected needs --n-max");
        const OrderRange range = enumeration_range(cls);
        if (r.n_max < range.lo || r.n_max > range.hi)
            throw UsageError("n-max: must lie in [" + std::to_string(range.lo) + ", " + std::to_string(range.hi) + "]");
        std::mt19937_64 rng(r.seed);
        const std::size_t count = r.count_opt->count() ? r.count : 10;
        for (std::size_t i = 0; i < count; ++i) graphs.push_back(random_connected_graph(rng, r.n_max));
    } else {
        if (r.n_opt->count() == r.n_max_opt->count())
            throw UsageError("n: give exactly one of --n (one order) or --n-max (all orders up to it)");
        const OrderRange range = enumeration_range(cls);
        const int lo = r.n_opt->count() ? r.n : range.lo;
        const int hi = r.n_opt->count() ? r.n : r.n_max;
        if (lo < range.lo || hi > range.hi)
            throw UsageError(std::string(r.n_opt->count() ? "n" : "n-max") + ": " + to_string(cls) +
                             " enumeration supports " + std::to_string(range.lo) + " <= n <= " +
                             std::to_string(range.hi));
        for (int n = lo; n <= hi; ++n)
            for (auto& g : enumerate_class(cls, n)) graphs.push_back(std::move(g));
    }
    std::ostringstream out;
    if (r.format == "json") {
        Json list = Json::array();
        for (const auto& g : graphs) list.push_back({{"n", g.order()}, {"m", g.edge_count()}, {"graph6", to_graph6(g)}});
        out << Json{{"class", to_string(cls)}, {"count", graphs.size()}, {"graphs", list}}.dump(2) << '\n';
    } else if (r.format == "text") {
        for (const auto& g : graphs) out << g.order() << ' ' << g.edge_count() << ' ' << to_graph6(g) << '\n';
        out << "total: " << graphs.size() << '\n';
    } else {
        for (const auto& g : graphs) out << to_graph6(g) << '\n';
    }
    result = out.str();
    return kExitOk;
}

std::string sweep_text(const SweepReport& s) {
    std::ostringstream out;
    out << to_string(s.cls) << " up to n=" << s.n_max;
    if (s.cls == GraphClass::random_connected) out << " (seed " << s.seed << ", " << s.random_count << " graphs)";
    out << (s.complete ? "" : " [incomplete]") << '\n';
    for (const auto& l : s.levels) {
        out << "n=" << l.n << " count=" << l.count;
        if (l.recount) out << " recount=" << *l.recount << (l.recount_agrees() ? "" : " MISMATCH");
        out << " violations=" << l.violations() << " lemma_failures=" << l.lemma_failures();
        if (l.rad_minus_pi.set) out << " max(rad-pi)=" << to_string(l.rad_minus_pi.value);
        if (l.rho_minus_pi.set) out << " max(rho-pi)=" << to_string(l.rho_minus_pi.value);
        if (l.diam_minus_pi.set) out << " max(diam-pi)=" << to_string(l.diam_minus_pi.value);
        out << '\n';
        for (const auto& b : l.bounds)
            if (b.violations) out << "  VIOLATION " << b.id << " on " << b.violation_witnesses.front() << '\n';
    }
    out << "total violations: " << s.violations() << ", lemma failures: " << s.lemma_failures() << '\n';
    return out.str();
}

int cmd_sweep(const Request& r, std::string& result) {
    const GraphClass cls = graph_class(r);
    if (!r.n_max_opt->count()) throw UsageError("n-max: sweep needs --n-max");
    SweepOptions opts;
    opts.seed = r.seed;
    if (r.count_opt->count()) opts.random_count = r.count;
    opts.recount_max = r.recount_max;
    opts.checkpoint = r.resume;
    if (r.stop_opt->count()) opts.stop_after = r.stop_after;
    SweepReport s;
    try {
        s = sweep(cls, r.n_max, opts);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (r.format == "json") result = sweep_json(s, r.timing).dump(2) + "\n";
    else if (r.format == "csv") result = sweep_csv(s);
    else result = sweep_text(s) + (r.timing ? "seconds: " + std::to_string(s.seconds) + "\n" : "");
    const bool finding = s.violations() > 0 || s.lemma_failures() > 0 || !s.recounts_agree();
    return finding ? kExitFinding : kExitOk;
}

int cmd_discrepancy(const Request& r, std::string& result) {
    const auto items = discrepancy_report();
    const std::string breach = quarantine_breach();
    bool ok = breach.empty();
    for (const auto& i : items) ok = ok && i.reproduced;
    if (r.format == "json") {
        result = discrepancy_json(items, breach).dump(2) + "\n";
    } else {
        std::ostringstream out;
        for (const auto& i : items) {
            out << i.id << (i.reproduced ? " reproduced: " : " NOT reproduced: ") << i.summary << '\n'
                << "  printed " << i.printed_formula << " vs " << i.reference_formula << '\n';
            for (const auto& e : i.evidence)
                out << "  n=" << e.n << ": " << e.printed << " vs " << e.reference << '\n';
        }
        out << "quarantine isolated: " << (breach.empty() ? "yes" : "no (" + breach + ")") << '\n';
        result = out.str();
    }
    return ok ? kExitOk : kExitFinding;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Request r;
    CLI::App app{"Exact distance parameters and bound verification for planar graph classes", "planardist"};
    app.add_option("command", r.command, "params | family | classify | lemmas | check | enumerate | sweep | discrepancy")
        ->required()
        ->check(CLI::IsMember(kCommands));
    r.in_opt = app.add_option("--in", r.in_path, "graph6 file, one graph per line ('-' for stdin)");
    r.g6_opt = app.add_option("--g6", r.g6, "inline graph6 string");
    r.family_opt = app.add_option("--family", r.family, "T, Q, MOP, Gnk, GnkBar or DiamExtremal");
    r.n_opt = app.add_option("--n", r.n, "order");
    r.kappa_opt = app.add_option("--kappa", r.kappa, "connectivity parameter of the family");
    r.d_opt = app.add_option("--d", r.d, "diameter parameter of DiamExtremal");
    r.n_max_opt = app.add_option("--n-max", r.n_max, "largest order for enumerate and sweep");
    r.class_opt = app.add_option("--class", r.cls,
                                 "maximal_outerplanar, maximal_planar, quadrangulation or random_connected");
    r.format_opt = app.add_option("--format", r.format, "json, csv, g6 or text");
    app.add_option("--out", r.out_path, "write the result to this file instead of stdout");
    app.add_option("--seed", r.seed, "seed for random_connected");
    app.add_option("--resume", r.resume, "sweep checkpoint file (created if missing)");
    app.add_option("--lemma", r.lemma, "L3.1a, L3.1b, L3.1c, L3.2 or L3.3");
    r.count_opt = app.add_option("--count", r.count, "number of random graphs");
    app.add_option("--recount-max", r.recount_max, "recount catalogs independently up to this order");
    r.stop_opt = app.add_option("--stop-after", r.stop_after, "pause a sweep after this many work units");
    app.add_flag("--timing", r.timing, "include wall time in sweep reports");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        resolve_format(r);
        std::string result;
        int code = kExitOk;
        if (r.command == "params") code = cmd_params(r, in, result);
        else if (r.command == "family") code = cmd_family(r, result);
        else if (r.command == "classify") code = cmd_classify(r, in, result);
        else if (r.command == "lemmas") code = cmd_lemmas(r, in, result);
        else if (r.command == "check") code = cmd_check(r, in, result);
        else if (r.command == "enumerate") code = cmd_enumerate(r, result);
        else if (r.command == "sweep") code = cmd_sweep(r, result);
        else code = cmd_discrepancy(r, result);

        if (r.out_path.empty()) {
            out << result;
        } else {
            std::ofstream file(r.out_path);
            if (!file) throw UsageError("out: cannot write '" + r.out_path + "'");
            file << result;
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace planardist
