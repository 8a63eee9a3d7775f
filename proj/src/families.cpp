#include "planardist/families.hpp"

#include <stdexcept>

#include "planardist/bounds.hpp"
#include "planardist/distance.hpp"

namespace planardist {

namespace {

LabeledGraph clique(int size, bool joined, const std::vector<std::string>& labels) {
    std::vector<Edge> edges;
    if (joined)
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j) edges.emplace_back(i, j);
    return {Graph::from_edges(size, edges), labels};
}

LabeledGraph single(const std::string& label) { return clique(1, true, {label}); }

std::vector<std::string> layer_labels(int layer, int size) {
    std::vector<std::string> out;
    for (int j = 1; j <= size; ++j) out.push_back("v" + std::to_string(layer) + "_" + std::to_string(j));
    return out;
}

// Builds a graph from labeled edges over a fixed label order.
class Builder {
public:
    Vertex add(const std::string& label) {
        labels_.push_back(label);
        return static_cast<Vertex>(labels_.size()) - 1;
    }
    void join(Vertex u, Vertex v) { edges_.emplace_back(u, v); }
    LabeledGraph done() const {
        return {Graph::from_edges(static_cast<int>(labels_.size()), edges_), labels_};
    }

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
};

std::string idx(const char* letter, int i) { return letter + std::to_string(i); }

LabeledGraph make_t(int n) {
    const int k = (n - 2) / 3;
    Builder b;
    const Vertex b0 = b.add("b0");
    std::vector<Vertex> a(k + 2), bb(k + 2), c(k + 2);
    bb[0] = b0;
    for (int i = 1; i <= k; ++i) {
        a[i] = b.add(idx("a", i));
        bb[i] = b.add(idx("b", i));
        c[i] = b.add(idx("c", i));
    }
    bb[k + 1] = b.add(idx("b", k + 1));
    for (int i = 1; i <= k; ++i) {
        b.join(a[i], bb[i]);
        b.join(bb[i], c[i]);
        b.join(c[i], a[i]);
    }
    b.join(b0, a[1]);
    b.join(b0, bb[1]);
    b.join(b0, c[1]);
    for (int i = 1; i <= k - 1; ++i) {
        b.join(a[i], a[i + 1]);
        b.join(bb[i], bb[i + 1]);
        b.join(c[i], c[i + 1]);
        b.join(c[i], a[i + 1]);
    }
    for (int i = 1; i <= (k - 1) / 2; ++i) {
        b.join(a[i], bb[i + 1]);
        b.join(c[i], bb[i + 1]);
    }
    for (int i = (k + 1) / 2; i <= k - 1; ++i) {
        b.join(bb[i], a[i + 1]);
        b.join(bb[i], c[i + 1]);
    }
    // The closing list repeats the b0 edges; the normalizer collapses them.
    b.join(b0, a[1]);
    b.join(b0, bb[1]);
    b.join(b0, c[1]);
    b.join(a[k], bb[k + 1]);
    b.join(bb[k], bb[k + 1]);
    b.join(c[k], bb[k + 1]);
    return b.done();
}

LabeledGraph make_mop(int n) {
    const int k = (n - 2) / 2;
    Builder b;
    std::vector<Vertex> a(k + 2), bb(k + 2);
    bb[0] = b.add("b0");
    for (int i = 1; i <= k; ++i) {
        a[i] = b.add(idx("a", i));
        bb[i] = b.add(idx("b", i));
    }
    bb[k + 1] = b.add(idx("b", k + 1));
    for (int i = 1; i <= k; ++i) b.join(a[i], bb[i]);
    b.join(bb[0], a[1]);
    b.join(bb[0], bb[1]);
    for (int i = 1; i <= k - 1; ++i) {
        b.join(a[i], a[i + 1]);
        b.join(bb[i], bb[i + 1]);
    }
    for (int i = 1; i <= (k - 1) / 2; ++i) b.join(a[i], bb[i + 1]);
    for (int i = (k + 1) / 2; i <= k - 1; ++i) b.join(bb[i], a[i + 1]);
    b.join(a[k], bb[k + 1]);
    b.join(bb[k], bb[k + 1]);
    return b.done();
}

LabeledGraph make_q(int n) {
    // Order n = 2k + 2, so k = (n - 2) / 2.
    const int k = (n - 2) / 2;
    std::vector<LabeledGraph> parts{single("b0")};
    for (int i = 1; i <= k; ++i) parts.push_back(clique(2, false, {idx("a", i), idx("b", i)}));
    parts.push_back(single(idx("b", k + 1)));
    return sequential_sum(parts);
}

LabeledGraph make_layered(int n, int kappa, bool joined) {
    const int layers = (n - 2) / kappa;
    std::vector<LabeledGraph> parts{single("b0")};
    for (int i = 1; i <= layers; ++i) parts.push_back(clique(kappa, joined, layer_labels(i, kappa)));
    parts.push_back(single(idx("b", layers + 1)));
    return sequential_sum(parts);
}

LabeledGraph make_diam_extremal(int n, int kappa, int d) {
    const int mid = n - kappa * (d - 2) - 2;
    const int left = d % 2 == 0 ? d / 2 - 1 : (d - 1) / 2;
    const int right = d % 2 == 0 ? d / 2 - 1 : (d - 1) / 2 - 1;
    std::vector<LabeledGraph> parts{single("b0")};
    int layer = 1;
    for (int i = 0; i < left; ++i, ++layer) parts.push_back(clique(kappa, true, layer_labels(layer, kappa)));
    parts.push_back(clique(mid, true, layer_labels(layer++, mid)));
    for (int i = 0; i < right; ++i, ++layer) parts.push_back(clique(kappa, true, layer_labels(layer, kappa)));
    parts.push_back(single(idx("b", layer)));
    return sequential_sum(parts);
}

ClosedField stated(const Rational& v) { return ClosedField{v, Provenance::paper_stated, std::nullopt, {}}; }

}  // namespace

std::string to_string(FamilyName f) {
    switch (f) {
        case FamilyName::T: return "T";
        case FamilyName::Q: return "Q";
        case FamilyName::MOP: return "MOP";
        case FamilyName::Gnk: return "Gnk";
        case FamilyName::GnkBar: return "GnkBar";
        case FamilyName::DiamExtremal: return "DiamExtremal";
    }
    return "?";
}

FamilyName parse_family_name(const std::string& text) {
    for (FamilyName f : {FamilyName::T, FamilyName::Q, FamilyName::MOP, FamilyName::Gnk, FamilyName::GnkBar,
                         FamilyName::DiamExtremal})
        if (to_string(f) == text) return f;
    throw std::invalid_argument("unknown family '" + text + "' (expected T, Q, MOP, Gnk, GnkBar, DiamExtremal)");
}

std::string to_string(Provenance p) {
    switch (p) {
        case Provenance::paper_stated: return "paper-stated";
        case Provenance::derived: return "derived";
        case Provenance::known_discrepancy: return "known-discrepancy";
    }
    return "?";
}

std::string describe(const FamilySpec& spec) {
    std::string s = to_string(spec.name) + "(n=" + std::to_string(spec.n);
    if (spec.kappa) s += ", kappa=" + std::to_string(*spec.kappa);
    if (spec.d) s += ", d=" + std::to_string(*spec.d);
    return s + ")";
}

std::string admissibility_error(const FamilySpec& spec) {
    const int n = spec.n;
    switch (spec.name) {
        case FamilyName::T:
            if (n < 5 || n % 6 != 5) return "n: T needs n = 5 (mod 6), n >= 5";
            return {};
        case FamilyName::Q:
            // At n = 4 the construction is C4, whose radius is 2, not n/4.
            if (n < 8 || n % 4 != 0) return "n: Q needs n = 0 (mod 4), n >= 8";
            return {};
        case FamilyName::MOP:
            if (n < 4 || n % 4 != 0) return "n: MOP needs n = 0 (mod 4), n >= 4";
            return {};
        case FamilyName::Gnk:
        case FamilyName::GnkBar: {
            if (!spec.kappa) return "kappa: required for " + to_string(spec.name);
            const int k = *spec.kappa;
            if (k < 1) return "kappa: must be >= 1";
            if (n < k + 2 || (n - k - 2) % (2 * k) != 0) return "n: needs n = kappa+2 (mod 2 kappa), n >= kappa+2";
            // With a single independent layer the graph is K_{2,kappa}, only 2-connected.
            if (spec.name == FamilyName::GnkBar && k >= 3 && n == k + 2)
                return "n: GnkBar with kappa >= 3 needs at least three layers (n >= 3 kappa + 2)";
            return {};
        }
        case FamilyName::DiamExtremal: {
            if (!spec.kappa) return "kappa: required for DiamExtremal";
            if (!spec.d) return "d: required for DiamExtremal";
            const int k = *spec.kappa, d = *spec.d;
            if (k < 1) return "kappa: must be >= 1";
            if (d < 2) return "d: must be >= 2";
            if (k * (d - 1) > n - 2) return "d: needs d <= (n-2)/kappa + 1";
            return {};
        }
    }
    return "unknown family";
}

bool admissible(const FamilySpec& spec) { return admissibility_error(spec).empty(); }

Vertex LabeledGraph::vertex(const std::string& label) const {
    for (std::size_t v = 0; v < labels.size(); ++v)
        if (labels[v] == label) return static_cast<Vertex>(v);
    throw std::out_of_range("no vertex labeled '" + label + "'");
}

Graph sequential_sum(std::span<const Graph> parts) {
    std::vector<LabeledGraph> labeled;
    for (const auto& p : parts) labeled.push_back({p, std::vector<std::string>(p.order())});
    return sequential_sum(labeled).graph;
}

LabeledGraph sequential_sum(std::span<const LabeledGraph> parts) {
    if (parts.empty()) throw std::invalid_argument("sequential_sum: empty list of parts");
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    int offset = 0, prev_offset = 0, prev_size = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        const Graph& g = parts[p].graph;
        for (const auto& [u, v] : g.edges()) edges.emplace_back(u + offset, v + offset);
        if (p > 0)
            for (int x = 0; x < prev_size; ++x)
                for (int y = 0; y < g.order(); ++y) edges.emplace_back(prev_offset + x, offset + y);
        for (int v = 0; v < g.order(); ++v)
            labels.push_back(v < static_cast<int>(parts[p].labels.size()) ? parts[p].labels[v] : std::string{});
        prev_offset = offset;
        prev_size = g.order();
        offset += g.order();
    }
    return {Graph::from_edges(offset, edges), labels};
}

LabeledGraph generate(const FamilySpec& spec) {
    if (const std::string why = admissibility_error(spec); !why.empty())
        throw std::invalid_argument(describe(spec) + " inadmissible: " + why);
    switch (spec.name) {
        case FamilyName::T: return make_t(spec.n);
        case FamilyName::Q: return make_q(spec.n);
        case FamilyName::MOP: return make_mop(spec.n);
        case FamilyName::Gnk: return make_layered(spec.n, *spec.kappa, true);
        case FamilyName::GnkBar: return make_layered(spec.n, *spec.kappa, false);
        case FamilyName::DiamExtremal: return make_diam_extremal(spec.n, *spec.kappa, *spec.d);
    }
    throw std::invalid_argument("unknown family");
}

ClosedForms closed_forms(const FamilySpec& spec) {
    if (const std::string why = admissibility_error(spec); !why.empty())
        throw std::invalid_argument(describe(spec) + " inadmissible: " + why);
    const std::int64_t n = spec.n;
    auto r = [](std::int64_t a, std::int64_t b) { return Rational(a, b); };
    ClosedForms f;
    f.family = spec;
    switch (spec.name) {
        case FamilyName::T: {
            const int k = (spec.n - 2) / 3;
            f.rad = stated(r(n + 1, 6));
            f.diam = stated(r(n + 1, 3));
            f.pi = stated(r(n + 1, 12) + r(2, n - 1));
            f.rho = stated(r(n + 2, 6) + r(1, 3 * (n - 1)));
            f.median_label = "b" + std::to_string((k + 1) / 2);
            f.remote_label = "b0";
            break;
        }
        case FamilyName::Q: {
            const int k = (spec.n - 2) / 2;
            f.rad = stated(r(n, 4));
            f.diam = stated(r(n, 2));
            f.rho = stated(r(n + 1, 4) + r(1, 4 * (n - 1)));
            ClosedField pi;
            pi.value = r(n + 17, 8) + r(17, 8 * (n - 1));
            pi.provenance = Provenance::known_discrepancy;
            pi.oracle = param_summary(generate(spec).graph).proximity;
            const Rational candidate = r(n + 1, 8) + r(17, 8 * (n - 1));
            pi.note = "printed (n+17)/8 + 17/(8(n-1)); computed value " +
                      std::string(*pi.oracle == candidate ? "matches" : "does not match") +
                      " (n+1)/8 + 17/(8(n-1))";
            f.pi = pi;
            f.median_label = "b" + std::to_string((k + 1) / 2);
            f.remote_label = "b0";
            break;
        }
        case FamilyName::MOP: {
            const int k = (spec.n - 2) / 2;
            f.rad = stated(r(n, 4));
            f.diam = stated(r(n, 2));
            f.pi = stated(r(n + 1, 8) + r(9, 8 * (n - 1)));
            f.rho = stated(r(n + 1, 4) + r(1, 4 * (n - 1)));
            f.median_label = "b" + std::to_string((k + 1) / 2);
            f.remote_label = "b0";
            break;
        }
        case FamilyName::Gnk:
        case FamilyName::GnkBar: {
            const std::int64_t k = *spec.kappa;
            const int mid_layer = ((spec.n - 2) / static_cast<int>(k) + 1) / 2;
            f.diam = stated(r(n + k - 2, k));
            f.rho = stated(r(n + k - 1, 2 * k) + r(k - 1, 2 * k * (n - 1)));
            if (spec.name == FamilyName::Gnk)
                f.pi = stated(r(n + 1, 4 * k) + r(3 * (k * k - 1), 4 * k * (n - 1)));
            else
                f.pi = stated(r(n + 1, 4 * k) + r(7 * k * k - 4 * k - 3, 4 * k * (n - 1)));
            f.median_label = "v" + std::to_string(mid_layer) + "_1";
            f.remote_label = "b0";
            break;
        }
        case FamilyName::DiamExtremal: {
            const int d = *spec.d;
            f.diam = stated(Rational(d));
            f.pi = stated(diameter_pi_lower_bound(spec.n, *spec.kappa, d));
            const int mid_layer = d % 2 == 0 ? d / 2 : (d - 1) / 2 + 1;
            f.median_label = "v" + std::to_string(mid_layer) + "_1";
            break;
        }
    }
    return f;
}

}  // namespace planardist
