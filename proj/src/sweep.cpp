#include "planardist/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "planardist/bounds.hpp"
#include "planardist/canonical.hpp"
#include "planardist/classify.hpp"
#include "planardist/connectivity.hpp"
#include "planardist/graph6.hpp"
#include "planardist/report_json.hpp"

namespace planardist {

namespace {

constexpr int kCheckpointVersion = 1;
constexpr std::size_t kFlipBudget = 64;
constexpr std::size_t kRandomSaveEvery = 500;

void offer(Extreme& e, const Rational& v, const std::string& code) {
    if (!e.set || v > e.value) {
        e.set = true;
        e.value = v;
        e.certificate = code;
        e.attained_by = 1;
    } else if (v == e.value) {
        ++e.attained_by;
        e.certificate = std::min(e.certificate, code);
    }
}

BoundAggregate& aggregate(std::vector<BoundAggregate>& list, const std::string& id) {
    auto it = std::lower_bound(list.begin(), list.end(), id,
                               [](const BoundAggregate& a, const std::string& key) { return a.id < key; });
    if (it == list.end() || it->id != id) {
        BoundAggregate a;
        a.id = id;
        it = list.insert(it, std::move(a));
    }
    return *it;
}

void record(BoundAggregate& a, Verdict v, const Rational& slack, const std::string& code) {
    if (a.checked == 0 || slack < a.min_slack || (slack == a.min_slack && code < a.min_slack_certificate)) {
        a.min_slack = slack;
        a.min_slack_certificate = code;
    }
    ++a.checked;
    if (v == Verdict::equality) {
        ++a.equalities;
        if (a.equality_witness.empty() || code < a.equality_witness) a.equality_witness = code;
    } else if (v == Verdict::violation) {
        ++a.violations;
        auto pos = std::lower_bound(a.violation_witnesses.begin(), a.violation_witnesses.end(), code);
        if (pos == a.violation_witnesses.end() || *pos != code) a.violation_witnesses.insert(pos, code);
    }
}

LemmaAggregate& lemma_aggregate(std::vector<LemmaAggregate>& list, LemmaId id) {
    for (auto& l : list)
        if (l.lemma == id) return l;
    LemmaAggregate l;
    l.lemma = id;
    list.push_back(l);
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) { return a.lemma < b.lemma; });
    for (auto& x : list)
        if (x.lemma == id) return x;
    throw std::logic_error("lemma aggregate lost");
}

void absorb(LevelReport& level, const Graph& g, GraphClass cls, const SweepOptions& opts) {
    const ClassFlags flags = classify(g);
    const int kappa = connectivity_number(g);
    const BoundReport rep = check_bounds(g, flags, kappa);
    const std::string& code = rep.canonical;
    const ParamSummary& p = rep.params;

    ++level.count;
    ++level.kappa_histogram[kappa];
    offer(level.rad_minus_pi, Rational(p.radius) - p.proximity, code);
    offer(level.rho_minus_pi, p.remoteness - p.proximity, code);
    offer(level.diam_minus_pi, Rational(p.diameter) - p.proximity, code);

    for (const auto& c : rep.applicable) record(aggregate(level.bounds, c.id), c.verdict, c.slack, code);
    for (const auto& q : rep.quarantine) {
        record(aggregate(level.quarantined, q.id + ":printed"), q.printed_verdict,
               slack_of(q.quantity, q.printed_bound, q.computed), code);
        record(aggregate(level.quarantined, q.id + ":derived"), q.derived_verdict,
               slack_of(q.quantity, q.derived_bound, q.computed), code);
    }

    if (!opts.check_lemmas) return;
    for (LemmaId id : class_lemmas(cls, kappa)) {
        LemmaAggregate& agg = lemma_aggregate(level.lemmas, id);
        ++agg.graphs;
        bool failed = false;
        for (const auto& r : check_lemma(g, id)) {
            ++agg.checks;
            if (!r.pass) {
                ++agg.failures;
                failed = true;
            }
        }
        if (failed) agg.failure_witnesses.push_back(code);
    }
}

void recount(LevelReport& level, GraphClass cls, int n, const std::vector<Graph>& catalog,
             const SweepOptions& opts) {
    const auto limit = independent_limit(cls);
    if (!limit || n > std::min(*limit, opts.recount_max)) return;
    const auto other = independent_catalog(cls, n);
    level.recount = other.size();
    std::vector<std::string> mine;
    mine.reserve(catalog.size());
    for (const auto& g : catalog) mine.push_back(to_graph6(g));
    std::sort(mine.begin(), mine.end());
    level.recount_codes_match = mine == other;
}

struct State {
    std::vector<LevelReport> levels;
    int next_n = 0;
    std::optional<FlipClosure> flip;
    std::size_t random_processed = 0;
    std::mt19937_64 rng;
};

Json header(GraphClass cls, int n_max, const SweepOptions& opts) {
    Json j;
    j["format"] = "planardist-sweep-checkpoint";
    j["version"] = kCheckpointVersion;
    j["class"] = to_string(cls);
    j["n_max"] = n_max;
    j["seed"] = opts.seed;
    j["random_count"] = cls == GraphClass::random_connected ? opts.random_count : 0;
    j["recount_max"] = opts.recount_max;
    j["check_lemmas"] = opts.check_lemmas;
    return j;
}

void save(const std::string& path, const Json& head, const State& s) {
    if (path.empty()) return;
    Json j = head;
    j["next_n"] = s.next_n;
    Json levels = Json::array();
    for (const auto& l : s.levels) levels.push_back(level_json(l));
    j["levels"] = std::move(levels);
    if (s.flip) {
        Json f;
        f["n"] = s.flip->n;
        f["frontier"] = s.flip->frontier;
        f["seen"] = std::vector<std::string>(s.flip->seen.begin(), s.flip->seen.end());
        j["flip"] = std::move(f);
    } else {
        j["flip"] = nullptr;
    }
    j["random_processed"] = s.random_processed;
    std::ostringstream rng;
    rng << s.rng;
    j["rng"] = rng.str();
    // Write then rename so an interrupted save leaves the old checkpoint.
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
        out << j.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, path);
}

bool load(const std::string& path, const Json& head, State& s) {
    if (path.empty() || !std::filesystem::exists(path)) return false;
    std::ifstream in(path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("checkpoint " + path + ": " + e.what());
    }
    for (const auto& [key, value] : head.items())
        if (!j.contains(key) || j[key] != value)
            throw std::invalid_argument("checkpoint " + path + ": field '" + key + "' does not match this sweep");
    s.next_n = j.at("next_n").get<int>();
    for (const auto& l : j.at("levels")) s.levels.push_back(level_from_json(l));
    if (!j.at("flip").is_null()) {
        FlipClosure f;
        f.n = j["flip"].at("n").get<int>();
        f.frontier = j["flip"].at("frontier").get<std::vector<std::string>>();
        for (const auto& c : j["flip"].at("seen")) f.seen.insert(c.get<std::string>());
        s.flip = std::move(f);
    }
    s.random_processed = j.at("random_processed").get<std::size_t>();
    std::istringstream rng(j.at("rng").get<std::string>());
    rng >> s.rng;
    if (!rng) throw std::invalid_argument("checkpoint " + path + ": bad rng state");
    return true;
}

}  // namespace

std::size_t LevelReport::violations() const {
    std::size_t v = 0;
    for (const auto& b : bounds) v += b.violations;
    return v;
}

std::size_t LevelReport::lemma_failures() const {
    std::size_t v = 0;
    for (const auto& l : lemmas) v += l.failures;
    return v;
}

std::size_t SweepReport::violations() const {
    std::size_t v = 0;
    for (const auto& l : levels) v += l.violations();
    return v;
}

std::size_t SweepReport::lemma_failures() const {
    std::size_t v = 0;
    for (const auto& l : levels) v += l.lemma_failures();
    return v;
}

bool SweepReport::recounts_agree() const {
    return std::all_of(levels.begin(), levels.end(), [](const LevelReport& l) { return l.recount_agrees(); });
}

const LevelReport* SweepReport::level(int n) const {
    for (const auto& l : levels)
        if (l.n == n) return &l;
    return nullptr;
}

std::vector<LemmaId> class_lemmas(GraphClass c, int kappa) {
    switch (c) {
        case GraphClass::maximal_planar: {
            std::vector<LemmaId> out{LemmaId::L3_1a};
            if (kappa >= 4) out.push_back(LemmaId::L3_1b);
            if (kappa >= 5) out.push_back(LemmaId::L3_1c);
            return out;
        }
        case GraphClass::quadrangulation: return {LemmaId::L3_2};
        case GraphClass::maximal_outerplanar: return {LemmaId::L3_3};
        case GraphClass::random_connected: break;
    }
    return {};
}

SweepReport sweep(GraphClass cls, int n_max, const SweepOptions& opts) {
    const auto started = std::chrono::steady_clock::now();
    const OrderRange range = enumeration_range(cls);
    if (n_max < range.lo || n_max > range.hi)
        throw std::invalid_argument("n-max: " + to_string(cls) + " sweeps support " + std::to_string(range.lo) +
                                    " <= n-max <= " + std::to_string(range.hi));
    if (cls == GraphClass::random_connected && opts.random_count == 0)
        throw std::invalid_argument("count: random sweeps need at least one graph");

    const Json head = header(cls, n_max, opts);
    State s;
    s.rng.seed(opts.seed);
    s.next_n = range.lo;
    load(opts.checkpoint, head, s);

    SweepReport out;
    out.cls = cls;
    out.n_max = n_max;
    if (cls == GraphClass::random_connected) {
        out.seed = opts.seed;
        out.random_count = opts.random_count;
    }
    std::size_t units = 0;
    auto stop = [&] { return opts.stop_after && units >= *opts.stop_after; };
    auto finish = [&](bool complete) {
        out.levels = s.levels;
        out.complete = complete;
        out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return out;
    };

    if (cls == GraphClass::random_connected) {
        std::map<int, LevelReport> by_n;
        for (auto& l : s.levels) by_n[l.n] = std::move(l);
        auto flush = [&] {
            s.levels.clear();
            for (const auto& [n, l] : by_n) s.levels.push_back(l);
        };
        while (s.random_processed < opts.random_count) {
            if (stop()) {
                flush();
                save(opts.checkpoint, head, s);
                return finish(false);
            }
            const Graph g = random_connected_graph(s.rng, n_max);
            LevelReport& l = by_n[g.order()];
            l.n = g.order();
            absorb(l, g, cls, opts);
            ++s.random_processed;
            ++units;
            if (s.random_processed % kRandomSaveEvery == 0) {
                flush();
                save(opts.checkpoint, head, s);
            }
        }
        flush();
        save(opts.checkpoint, head, s);
        return finish(true);
    }

    for (int n = s.next_n; n <= n_max; ++n) {
        std::vector<Graph> catalog;
        if (cls == GraphClass::maximal_planar) {
            if (!s.flip || s.flip->n != n) s.flip = flip_closure_start(n);
            while (!s.flip->done()) {
                if (stop()) {
                    save(opts.checkpoint, head, s);
                    return finish(false);
                }
                std::size_t budget = kFlipBudget;
                if (opts.stop_after) budget = std::min(budget, *opts.stop_after - units);
                units += flip_closure_step(*s.flip, budget);
                save(opts.checkpoint, head, s);
            }
            for (const auto& code : s.flip->seen) catalog.push_back(from_graph6(code));
        } else {
            catalog = enumerate_class(cls, n);
        }
        if (stop()) {
            save(opts.checkpoint, head, s);
            return finish(false);
        }
        LevelReport level;
        level.n = n;
        for (const auto& g : catalog) absorb(level, g, cls, opts);
        recount(level, cls, n, catalog, opts);
        units += catalog.size();
        s.levels.push_back(std::move(level));
        s.next_n = n + 1;
        s.flip.reset();
        save(opts.checkpoint, head, s);
    }
    return finish(true);
}

}  // namespace planardist
