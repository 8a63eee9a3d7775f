#include "planardist/report_json.hpp"

#include <sstream>

#include "planardist/graph6.hpp"

namespace planardist {

namespace {

Json vertex_list(const std::vector<Vertex>& vs) {
    Json a = Json::array();
    for (Vertex v : vs) a.push_back(v);
    return a;
}

void put_rational(Json& j, const std::string& prefix, const Rational& r) {
    j[prefix + "_num"] = r.numerator();
    j[prefix + "_den"] = r.denominator();
    j[prefix + "_decimal"] = to_double(r);
}

std::string csv_rational(const Rational& r) {
    return std::to_string(r.numerator()) + "," + std::to_string(r.denominator());
}

Json extreme_json(const Extreme& e) {
    if (!e.set) return nullptr;
    Json j;
    j["value"] = rational_json(e.value);
    j["certificate"] = e.certificate;
    j["attained_by"] = e.attained_by;
    return j;
}

Extreme extreme_from_json(const Json& j) {
    Extreme e;
    if (j.is_null()) return e;
    e.set = true;
    e.value = rational_from_json(j.at("value"));
    e.certificate = j.at("certificate").get<std::string>();
    e.attained_by = j.at("attained_by").get<std::size_t>();
    return e;
}

Json aggregate_json(const BoundAggregate& a) {
    Json j;
    j["id"] = a.id;
    j["checked"] = a.checked;
    j["equalities"] = a.equalities;
    j["violations"] = a.violations;
    j["min_slack"] = a.checked ? rational_json(a.min_slack) : Json(nullptr);
    j["min_slack_certificate"] = a.min_slack_certificate;
    j["equality_witness"] = a.equality_witness;
    j["violation_witnesses"] = a.violation_witnesses;
    return j;
}

BoundAggregate aggregate_from_json(const Json& j) {
    BoundAggregate a;
    a.id = j.at("id").get<std::string>();
    a.checked = j.at("checked").get<std::size_t>();
    a.equalities = j.at("equalities").get<std::size_t>();
    a.violations = j.at("violations").get<std::size_t>();
    if (!j.at("min_slack").is_null()) a.min_slack = rational_from_json(j["min_slack"]);
    a.min_slack_certificate = j.at("min_slack_certificate").get<std::string>();
    a.equality_witness = j.at("equality_witness").get<std::string>();
    a.violation_witnesses = j.at("violation_witnesses").get<std::vector<std::string>>();
    return a;
}

}  // namespace

Json rational_json(const Rational& r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["decimal"] = to_double(r);
    return j;
}

Rational rational_from_json(const Json& j) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
}

Json flags_json(const ClassFlags& f) {
    Json j;
    j["connected"] = f.connected;
    j["planar"] = f.planar;
    j["outerplanar"] = f.outerplanar;
    j["bipartite"] = f.bipartite;
    j["maximal_planar"] = f.maximal_planar;
    j["quadrangulation"] = f.quadrangulation;
    j["maximal_outerplanar"] = f.maximal_outerplanar;
    return j;
}

Json params_json(const Graph& g, const ParamSummary& p, int kappa) {
    Json j;
    j["graph6"] = to_graph6(g);
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["kappa"] = kappa;
    j["rad"] = p.radius;
    j["diam"] = p.diameter;
    j["pi"] = rational_json(p.proximity);
    j["rho"] = rational_json(p.remoteness);
    j["status"] = p.status;
    j["eccentricity"] = p.ecc;
    j["median_vertices"] = vertex_list(p.median_vertices);
    j["remote_vertices"] = vertex_list(p.remote_vertices);
    return j;
}

std::string params_csv(const Graph& g, const ParamSummary& p, int kappa) {
    std::ostringstream out;
    out << "graph6,n,m,kappa,rad,diam,pi_num,pi_den,rho_num,rho_den\n";
    out << '"' << to_graph6(g) << "\"," << g.order() << ',' << g.edge_count() << ',' << kappa << ','
        << p.radius << ',' << p.diameter << ',' << csv_rational(p.proximity) << ',' << csv_rational(p.remoteness)
        << '\n';
    return out.str();
}

std::string params_text(const Graph& g, const ParamSummary& p, int kappa) {
    std::ostringstream out;
    out << "graph6: " << to_graph6(g) << '\n'
        << "n: " << g.order() << "  m: " << g.edge_count() << "  kappa: " << kappa << '\n'
        << "rad: " << p.radius << "  diam: " << p.diameter << '\n'
        << "pi: " << to_string(p.proximity) << "  rho: " << to_string(p.remoteness) << '\n'
        << "median:";
    for (Vertex v : p.median_vertices) out << ' ' << v;
    out << "\nremote:";
    for (Vertex v : p.remote_vertices) out << ' ' << v;
    out << '\n';
    return out.str();
}

Json bound_report_json(const BoundReport& r) {
    Json j;
    j["graph6"] = r.graph6;
    j["canonical"] = r.canonical;
    j["n"] = r.n;
    j["m"] = r.m;
    j["kappa"] = r.kappa;
    j["flags"] = flags_json(r.flags);
    Json p;
    p["rad"] = r.params.radius;
    p["diam"] = r.params.diameter;
    p["pi"] = rational_json(r.params.proximity);
    p["rho"] = rational_json(r.params.remoteness);
    j["params"] = std::move(p);
    Json bounds = Json::array();
    for (const auto& c : r.applicable) {
        Json b;
        b["id"] = c.id;
        b["quantity"] = to_string(c.quantity);
        put_rational(b, "value", c.bound);
        put_rational(b, "computed", c.computed);
        b["verdict"] = to_string(c.verdict);
        put_rational(b, "slack", c.slack);
        bounds.push_back(std::move(b));
    }
    j["bounds"] = std::move(bounds);
    Json skipped = Json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"id", s.id}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    Json quarantine = Json::array();
    for (const auto& q : r.quarantine) {
        Json b;
        b["id"] = q.id;
        b["quantity"] = to_string(q.quantity);
        b["derived_from"] = q.derived_from;
        put_rational(b, "printed", q.printed_bound);
        put_rational(b, "derived", q.derived_bound);
        put_rational(b, "computed", q.computed);
        b["printed_verdict"] = to_string(q.printed_verdict);
        b["derived_verdict"] = to_string(q.derived_verdict);
        quarantine.push_back(std::move(b));
    }
    j["quarantine"] = std::move(quarantine);
    j["discrepancy_notes"] = r.discrepancy_notes;
    j["violation"] = r.has_violation();
    return j;
}

std::string bound_report_csv(const BoundReport& r) {
    std::ostringstream out;
    out << "graph6,role,id,quantity,value_num,value_den,computed_num,computed_den,verdict\n";
    const std::string g6 = '"' + r.graph6 + '"';
    for (const auto& c : r.applicable)
        out << g6 << ",bound," << c.id << ',' << to_string(c.quantity) << ',' << csv_rational(c.bound) << ','
            << csv_rational(c.computed) << ',' << to_string(c.verdict) << '\n';
    for (const auto& q : r.quarantine) {
        out << g6 << ",quarantine-printed," << q.id << ',' << to_string(q.quantity) << ','
            << csv_rational(q.printed_bound) << ',' << csv_rational(q.computed) << ','
            << to_string(q.printed_verdict) << '\n';
        out << g6 << ",quarantine-derived," << q.id << ',' << to_string(q.quantity) << ','
            << csv_rational(q.derived_bound) << ',' << csv_rational(q.computed) << ','
            << to_string(q.derived_verdict) << '\n';
    }
    return out.str();
}

std::string bound_report_text(const BoundReport& r) {
    std::ostringstream out;
    out << "graph6: " << r.graph6 << "  n: " << r.n << "  m: " << r.m << "  kappa: " << r.kappa << '\n'
        << "rad: " << r.params.radius << "  diam: " << r.params.diameter
        << "  pi: " << to_string(r.params.proximity) << "  rho: " << to_string(r.params.remoteness) << '\n';
    for (const auto& c : r.applicable) {
        out << "  " << c.id << ' ' << to_string(c.quantity) << " bound " << to_string(c.bound) << " computed "
            << to_string(c.computed) << ' ' << to_string(c.verdict);
        if (c.verdict == Verdict::slack) out << ' ' << to_string(c.slack);
        out << '\n';
    }
    for (const auto& s : r.skipped) out << "  " << s.id << " skipped: " << s.reason << '\n';
    for (const auto& q : r.quarantine)
        out << "  [quarantine] " << q.id << " printed " << to_string(q.printed_bound) << " ("
            << to_string(q.printed_verdict) << "), " << q.derived_from << ' ' << to_string(q.derived_bound) << " ("
            << to_string(q.derived_verdict) << ")\n";
    return out.str();
}

Json closed_forms_json(const ClosedForms& f, const LabeledGraph& g, const ParamSummary& computed) {
    Json j;
    j["family"] = to_string(f.family.name);
    j["n"] = f.family.n;
    j["kappa"] = f.family.kappa ? Json(*f.family.kappa) : Json(nullptr);
    j["d"] = f.family.d ? Json(*f.family.d) : Json(nullptr);
    j["graph6"] = to_graph6(g.graph);
    j["labels"] = g.labels;
    Json fields;
    auto field = [&](const char* name, const std::optional<ClosedField>& cf, const Rational& value) {
        if (!cf) return;
        Json x;
        x["stated"] = rational_json(cf->value);
        x["provenance"] = to_string(cf->provenance);
        x["computed"] = rational_json(value);
        x["matches"] = cf->value == value;
        if (!cf->note.empty()) x["note"] = cf->note;
        fields[name] = std::move(x);
    };
    field("rad", f.rad, Rational(computed.radius));
    field("diam", f.diam, Rational(computed.diameter));
    field("pi", f.pi, computed.proximity);
    field("rho", f.rho, computed.remoteness);
    j["closed_forms"] = std::move(fields);
    auto named = [&](const std::string& label, const std::vector<Vertex>& attaining) -> Json {
        if (label.empty()) return nullptr;
        const Vertex v = g.vertex(label);
        return {{"label", label},
                {"vertex", v},
                {"attains", std::find(attaining.begin(), attaining.end(), v) != attaining.end()}};
    };
    j["median_vertex"] = named(f.median_label, computed.median_vertices);
    j["remote_vertex"] = named(f.remote_label, computed.remote_vertices);
    return j;
}

Json lemma_reports_json(const Graph& g, LemmaId id, const std::vector<LemmaReport>& reports) {
    Json j;
    j["graph6"] = to_graph6(g);
    j["lemma"] = to_string(id);
    bool pass = true;
    Json checks = Json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass;
        Json c;
        c["root"] = r.root;
        c["level"] = r.level;
        c["pass"] = r.pass;
        if (r.counterexample)
            c["counterexample"] = {{"vertices", vertex_list(r.counterexample->vertices)},
                                   {"level", r.counterexample->level}};
        checks.push_back(std::move(c));
    }
    j["pass"] = pass;
    j["checks"] = std::move(checks);
    return j;
}

Json discrepancy_json(const std::vector<DiscrepancyItem>& items, const std::string& breach) {
    Json j;
    Json list = Json::array();
    for (const auto& item : items) {
        Json x;
        x["id"] = item.id;
        x["summary"] = item.summary;
        x["printed_formula"] = item.printed_formula;
        x["reference_formula"] = item.reference_formula;
        x["reproduced"] = item.reproduced;
        Json ev = Json::array();
        for (const auto& e : item.evidence)
            ev.push_back({{"n", e.n}, {"printed", e.printed}, {"reference", e.reference}, {"differs", e.differs}});
        x["evidence"] = std::move(ev);
        list.push_back(std::move(x));
    }
    j["items"] = std::move(list);
    j["quarantine_isolated"] = breach.empty();
    j["breach"] = breach;
    return j;
}

Json level_json(const LevelReport& l) {
    Json j;
    j["n"] = l.n;
    j["count"] = l.count;
    j["recount"] = l.recount ? Json(*l.recount) : Json(nullptr);
    j["recount_codes_match"] = l.recount_codes_match;
    Json hist = Json::object();
    for (const auto& [k, c] : l.kappa_histogram) hist[std::to_string(k)] = c;
    j["kappa_histogram"] = std::move(hist);
    j["rad_minus_pi"] = extreme_json(l.rad_minus_pi);
    j["rho_minus_pi"] = extreme_json(l.rho_minus_pi);
    j["diam_minus_pi"] = extreme_json(l.diam_minus_pi);
    Json bounds = Json::array();
    for (const auto& b : l.bounds) bounds.push_back(aggregate_json(b));
    j["bounds"] = std::move(bounds);
    Json quarantined = Json::array();
    for (const auto& b : l.quarantined) quarantined.push_back(aggregate_json(b));
    j["quarantined"] = std::move(quarantined);
    Json lemmas = Json::array();
    for (const auto& x : l.lemmas)
        lemmas.push_back({{"lemma", to_string(x.lemma)},
                          {"graphs", x.graphs},
                          {"checks", x.checks},
                          {"failures", x.failures},
                          {"failure_witnesses", x.failure_witnesses}});
    j["lemmas"] = std::move(lemmas);
    j["violations"] = l.violations();
    return j;
}

LevelReport level_from_json(const Json& j) {
    LevelReport l;
    l.n = j.at("n").get<int>();
    l.count = j.at("count").get<std::size_t>();
    if (!j.at("recount").is_null()) l.recount = j["recount"].get<std::size_t>();
    l.recount_codes_match = j.at("recount_codes_match").get<bool>();
    for (const auto& [k, c] : j.at("kappa_histogram").items()) l.kappa_histogram[std::stoi(k)] = c.get<std::size_t>();
    l.rad_minus_pi = extreme_from_json(j.at("rad_minus_pi"));
    l.rho_minus_pi = extreme_from_json(j.at("rho_minus_pi"));
    l.diam_minus_pi = extreme_from_json(j.at("diam_minus_pi"));
    for (const auto& b : j.at("bounds")) l.bounds.push_back(aggregate_from_json(b));
    for (const auto& b : j.at("quarantined")) l.quarantined.push_back(aggregate_from_json(b));
    for (const auto& x : j.at("lemmas")) {
        LemmaAggregate a;
        a.lemma = parse_lemma_id(x.at("lemma").get<std::string>());
        a.graphs = x.at("graphs").get<std::size_t>();
        a.checks = x.at("checks").get<std::size_t>();
        a.failures = x.at("failures").get<std::size_t>();
        a.failure_witnesses = x.at("failure_witnesses").get<std::vector<std::string>>();
        l.lemmas.push_back(std::move(a));
    }
    return l;
}

Json sweep_json(const SweepReport& r, bool include_timing) {
    Json j;
    j["class"] = to_string(r.cls);
    j["n_max"] = r.n_max;
    if (r.cls == GraphClass::random_connected) {
        j["seed"] = r.seed;
        j["random_count"] = r.random_count;
    }
    j["complete"] = r.complete;
    j["violations"] = r.violations();
    j["lemma_failures"] = r.lemma_failures();
    j["recounts_agree"] = r.recounts_agree();
    Json levels = Json::array();
    for (const auto& l : r.levels) levels.push_back(level_json(l));
    j["levels"] = std::move(levels);
    if (include_timing) j["seconds"] = r.seconds;
    return j;
}

std::string sweep_csv(const SweepReport& r) {
    std::ostringstream out;
    out << "class,n,count,kind,id,checked,equalities,violations,value_num,value_den,certificate\n";
    const std::string cls = to_string(r.cls);
    for (const auto& l : r.levels) {
        const std::string head = cls + "," + std::to_string(l.n) + "," + std::to_string(l.count) + ",";
        auto extreme = [&](const char* name, const Extreme& e) {
            if (!e.set) return;
            out << head << "extreme," << name << ',' << l.count << ',' << e.attained_by << ",0,"
                << csv_rational(e.value) << ",\"" << e.certificate << "\"\n";
        };
        extreme("rad_minus_pi", l.rad_minus_pi);
        extreme("rho_minus_pi", l.rho_minus_pi);
        extreme("diam_minus_pi", l.diam_minus_pi);
        auto aggregates = [&](const char* kind, const std::vector<BoundAggregate>& list) {
            for (const auto& b : list)
                out << head << kind << ',' << b.id << ',' << b.checked << ',' << b.equalities << ','
                    << b.violations << ',' << csv_rational(b.min_slack) << ",\"" << b.min_slack_certificate
                    << "\"\n";
        };
        aggregates("bound", l.bounds);
        aggregates("quarantine", l.quarantined);
        for (const auto& x : l.lemmas)
            out << head << "lemma," << to_string(x.lemma) << ',' << x.checks << ",0," << x.failures << ",0,1,\""
                << (x.failure_witnesses.empty() ? "" : x.failure_witnesses.front()) << "\"\n";
    }
    return out.str();
}

}  // namespace planardist
