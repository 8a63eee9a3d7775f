#include "planardist/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "planardist/canonical.hpp"
#include "planardist/connectivity.hpp"
#include "planardist/graph6.hpp"

namespace planardist {

namespace {

using A = const BoundArgs&;

Rational q(std::int64_t a, std::int64_t b = 1) { return Rational(a, b); }
bool odd(std::int64_t x) { return x % 2 != 0; }

std::string kappa_half_domain(A a) {
    if (2 * a.kappa > a.n + 1) return "kappa <= (n+1)/2";
    return {};
}

std::string diameter_domain(A a) {
    if (a.d < 2) return "d >= 2";
    return {};
}

ClassGuard any(int min_kappa = 0) {
    ClassGuard g;
    g.min_kappa = min_kappa;
    return g;
}
ClassGuard maximal_planar(int min_kappa = 0) {
    ClassGuard g = any(min_kappa);
    g.maximal_planar = true;
    return g;
}
ClassGuard quadrangulation(int min_kappa = 0) {
    ClassGuard g = any(min_kappa);
    g.quadrangulation = true;
    return g;
}
ClassGuard mop() {
    ClassGuard g;
    g.maximal_outerplanar = true;
    return g;
}
ClassGuard bipartite(int min_kappa) {
    ClassGuard g = any(min_kappa);
    g.bipartite = true;
    return g;
}

Rational thm51(A a) {
    const auto k = a.kappa;
    return q(a.n + 2 * k - 3, 4 * k) - q((3 * k + 1) * (k - 1), 4 * k * (a.n - 1));
}

Rational thm53(A a) {
    const auto k = a.kappa;
    return q(a.n + 2 * k - 3, 4 * k) - q((k - 1) * (7 * k + 1), 4 * k * (a.n - 1));
}

Rational thm61b(A a) {
    const auto k = a.kappa;
    return q(3 * a.n - 9, 4 * k) + 1 - q(3 * k * k - 3, 4 * k * (a.n - 1));
}

Rational thm61a(A a) {
    const auto k = a.kappa, d = a.d, n = a.n;
    const Rational head = q(k * (d - 3) * (d - 3), 4 * (n - 1)) + 1;
    if (d % 2 == 0) return head + q(4 * (d - 2) - k, 4 * (n - 1));
    return head + q(d - 2, n - 1);
}

BoundSpec spec(std::string id, Quantity qty, ClassGuard guard, int min_n, std::string formula, BoundFormula eval,
               bool uses_kappa = false, BoundDomain domain = nullptr, bool uses_d = false) {
    BoundSpec s;
    s.id = std::move(id);
    s.quantity = qty;
    s.guard = guard;
    s.min_n = min_n;
    s.formula = std::move(formula);
    s.eval = eval;
    s.uses_kappa = uses_kappa;
    s.domain = domain;
    s.uses_d = uses_d;
    return s;
}

std::vector<BoundSpec> build_registry() {
    using Q = Quantity;
    std::vector<BoundSpec> r;
    r.push_back(spec("THM1.1a", Q::pi_max, any(), 2, "(n+1)/4, plus 1/(4(n-1)) for even n", [](A a) {
        return q(a.n + 1, 4) + (odd(a.n) ? q(0) : q(1, 4 * (a.n - 1)));
    }));
    r.push_back(spec("THM1.1b", Q::rho_max, any(), 2, "n/2", [](A a) { return q(a.n, 2); }));
    r.push_back(spec("THM1.3a-rho", Q::rho_max, maximal_planar(), 3, "(n+2)/6 + eps_n (mod 3)", [](A a) {
        return q(a.n + 2, 6) + (a.n % 3 == 1 ? q(0) : q(1, 3 * (a.n - 1)));
    }));
    r.push_back(spec("THM1.3a-pi", Q::pi_max, maximal_planar(), 3, "(n+19)/12 + 25/(3(n-1))",
                     [](A a) { return q(a.n + 19, 12) + q(25, 3 * (a.n - 1)); }));
    r.push_back(spec("THM1.3b-rho", Q::rho_max, maximal_planar(4), 6, "(n+3)/8 + eps_n (mod 4)", [](A a) {
        const auto m = a.n % 4;
        return q(a.n + 3, 8) + (m == 1 ? q(0) : m == 3 ? q(1, 2 * (a.n - 1)) : q(3, 8 * (a.n - 1)));
    }));
    r.push_back(spec("THM1.3b-pi", Q::pi_max, maximal_planar(4), 6, "(n+35)/16 + 91/(4(n-1))",
                     [](A a) { return q(a.n + 35, 16) + q(91, 4 * (a.n - 1)); }));
    r.push_back(spec("THM1.3c-rho", Q::rho_max, maximal_planar(5), 12, "(n+4)/10 + eps_n (mod 5)", [](A a) {
        const auto m = a.n % 5;
        const Rational eps = m == 0   ? q(-3, 5 * (a.n - 1))
                             : m == 1 ? q(-1, a.n - 1)
                             : m == 2 ? q(2, 5 * (a.n - 1))
                                      : q(-2, 5 * (a.n - 1));
        return q(a.n + 4, 10) + eps;
    }));
    r.push_back(spec("THM1.3c-pi", Q::pi_max, maximal_planar(5), 12, "(n+57)/20 + 393/(10(n-1))",
                     [](A a) { return q(a.n + 57, 20) + q(393, 10 * (a.n - 1)); }));
    r.push_back(spec("THM1.4", Q::rho_minus_pi_max, any(), 3, "(n-1)/4, minus 1/(4(n-1)) for even n", [](A a) {
        return q(a.n - 1, 4) - (odd(a.n) ? q(0) : q(1, 4 * (a.n - 1)));
    }));
    r.push_back(spec("THM1.5", Q::diam_minus_pi_max, any(), 3, "(3n-5)/4, minus 1/(4n-4) for even n", [](A a) {
        return q(3 * a.n - 5, 4) - (odd(a.n) ? q(0) : q(1, 4 * a.n - 4));
    }));
    r.push_back(spec("THM1.6", Q::rad_minus_pi_max, any(), 3, "(n-1)/4 - 1/(n-1) odd n; (n-1)/4 - 1/(4n-4) even n",
                     [](A a) { return q(a.n - 1, 4) - (odd(a.n) ? q(1, a.n - 1) : q(1, 4 * a.n - 4)); }));
    r.push_back(spec("PROP3.4", Q::rad_max, any(), 2, "floor(n/2)", [](A a) { return q(a.n / 2); }));
    r.push_back(spec("THM4.1", Q::rad_minus_pi_max, maximal_planar(), 4, "(n+1)/12 + 4/3 + 27/(4(n-1))",
                     [](A a) { return q(a.n + 1, 12) + q(4, 3) + q(27, 4 * (a.n - 1)); }));
    r.push_back(spec("THM4.3a", Q::rad_minus_pi_max, maximal_planar(4), 6, "(n+31)/16 + 16/(n-1)",
                     [](A a) { return q(a.n + 31, 16) + q(16, a.n - 1); }));
    r.push_back(spec("THM4.3b", Q::rad_minus_pi_max, maximal_planar(5), 6, "(n+49)/20 + 125/(4(n-1))",
                     [](A a) { return q(a.n + 49, 20) + q(125, 4 * (a.n - 1)); }));
    r.push_back(spec("THM4.4a", Q::rad_minus_pi_max, quadrangulation(), 4, "(n+11)/8 + 9/(2(n-1))",
                     [](A a) { return q(a.n + 11, 8) + q(9, 2 * (a.n - 1)); }));
    r.push_back(spec("THM4.4b", Q::rad_minus_pi_max, quadrangulation(3), 4, "(n+17)/12 + 27/(4(n-1))",
                     [](A a) { return q(a.n + 17, 12) + q(27, 4 * (a.n - 1)); }));
    r.push_back(spec("THM4.6", Q::rad_minus_pi_max, mop(), 3, "(n+7)/8 + 2/(n-1)",
                     [](A a) { return q(a.n + 7, 8) + q(2, a.n - 1); }));
    r.push_back(spec("THM5.1", Q::rho_minus_pi_max, any(1), 2, "(n+2k-3)/(4k) - (3k+1)(k-1)/(4k(n-1))", thm51, true,
                     kappa_half_domain));
    r.push_back(spec("THM5.3", Q::rho_minus_pi_max, bipartite(1), 2, "(n+2k-3)/(4k) - (k-1)(7k+1)/(4k(n-1))", thm53,
                     true, kappa_half_domain));
    r.push_back(spec("COR5.5a", Q::rho_minus_pi_max, maximal_planar(), 4, "(n+3)/12 - 5/(3(n-1))",
                     [](A a) { return q(a.n + 3, 12) - q(5, 3 * (a.n - 1)); }));
    r.push_back(spec("COR5.6a", Q::rho_minus_pi_max, quadrangulation(), 4, "(n+1)/8 - 15/(8(n-1))",
                     [](A a) { return q(a.n + 1, 8) - q(15, 8 * (a.n - 1)); }));
    r.push_back(spec("COR5.6b", Q::rho_minus_pi_max, quadrangulation(3), 4, "(n+3)/12 - 11/(3(n-1))",
                     [](A a) { return q(a.n + 3, 12) - q(11, 3 * (a.n - 1)); }));
    r.push_back(spec("PROP6.W", Q::diam_max, any(1), 2, "floor((n+k-2)/k)",
                     [](A a) { return q(floor_div(a.n + a.kappa - 2, a.kappa)); }, true));
    r.push_back(spec("THM6.1a", Q::pi_min_given_d, any(1), 2,
                     "k(d-3)^2/(4(n-1)) + 1 + (4(d-2)-k)/(4(n-1)) even d; ... + (d-2)/(n-1) odd d", thm61a, true,
                     diameter_domain, true));
    r.push_back(spec("THM6.1b", Q::diam_minus_pi_max, any(1), 2, "(3n-9)/(4k) + 1 - (3k^2-3)/(4k(n-1))", thm61b,
                     true));
    r.push_back(spec("COR6.3a", Q::diam_minus_pi_max, maximal_planar(), 4, "(n+1)/4 - 2/(n-1)",
                     [](A a) { return q(a.n + 1, 4) - q(2, a.n - 1); }));
    r.push_back(spec("COR6.3b", Q::diam_minus_pi_max, maximal_planar(4), 4, "(3n+7)/16 - 45/(16(n-1))",
                     [](A a) { return q(3 * a.n + 7, 16) - q(45, 16 * (a.n - 1)); }));
    r.push_back(spec("COR6.3c", Q::diam_minus_pi_max, maximal_planar(5), 4, "(3n+11)/20 - 18/(5(n-1))",
                     [](A a) { return q(3 * a.n + 11, 20) - q(18, 5 * (a.n - 1)); }));
    r.push_back(spec("COR6.3d", Q::diam_minus_pi_max, quadrangulation(), 4, "(3n-1)/8 - 9/(8(n-1))",
                     [](A a) { return q(3 * a.n - 1, 8) - q(9, 8 * (a.n - 1)); }));
    r.push_back(spec("COR6.3e", Q::diam_minus_pi_max, quadrangulation(3), 4, "(n+1)/4 - 2/(n-1)",
                     [](A a) { return q(a.n + 1, 4) - q(2, a.n - 1); }));
    return r;
}

QuarantineSpec quarantined(std::string id, Quantity qty, ClassGuard guard, std::string printed_formula,
                           BoundFormula printed, std::string derived_formula, BoundFormula derived,
                           std::string derived_from) {
    QuarantineSpec s;
    s.id = std::move(id);
    s.quantity = qty;
    s.guard = guard;
    s.min_n = 4;
    s.printed_formula = std::move(printed_formula);
    s.printed = printed;
    s.derived_formula = std::move(derived_formula);
    s.derived = derived;
    s.derived_from = std::move(derived_from);
    return s;
}

std::vector<QuarantineSpec> build_quarantine() {
    using Q = Quantity;
    std::vector<QuarantineSpec> r;
    r.push_back(quarantined(
        "COR5.5b", Q::rho_minus_pi_max, maximal_planar(4), "(n+5)/16 - 55/(16(n-1))",
        [](A a) { return q(a.n + 5, 16) - q(55, 16 * (a.n - 1)); }, "(n+5)/16 - 39/(16(n-1))",
        [](A a) { return thm51(BoundArgs{a.n, 4, 0}); }, "THM5.1 at kappa=4"));
    r.push_back(quarantined(
        "COR5.5c", Q::rho_minus_pi_max, maximal_planar(5), "(n+7)/20 - 26/(5(n-1))",
        [](A a) { return q(a.n + 7, 20) - q(26, 5 * (a.n - 1)); }, "(n+7)/20 - 16/(5(n-1))",
        [](A a) { return thm51(BoundArgs{a.n, 5, 0}); }, "THM5.1 at kappa=5"));
    r.push_back(quarantined(
        "COR5.5d", Q::rho_minus_pi_max, mop(), "(n+1)/8 + 1/(8(n-1))",
        [](A a) { return q(a.n + 1, 8) + q(1, 8 * (a.n - 1)); }, "(n+1)/8 - 7/(8(n-1))",
        [](A a) { return thm51(BoundArgs{a.n, 2, 0}); }, "THM5.1 at kappa=2"));
    r.push_back(quarantined(
        "COR6.3f", Q::diam_minus_pi_max, mop(), "(3n-1)/8 + 9/(8(n-1))",
        [](A a) { return q(3 * a.n - 1, 8) + q(9, 8 * (a.n - 1)); }, "(3n-1)/8 - 9/(8(n-1))",
        [](A a) { return thm61b(BoundArgs{a.n, 2, 0}); }, "THM6.1b at kappa=2"));
    return r;
}

}  // namespace

std::string to_string(Quantity qty) {
    switch (qty) {
        case Quantity::pi_max: return "pi_max";
        case Quantity::rho_max: return "rho_max";
        case Quantity::rad_minus_pi_max: return "rad_minus_pi_max";
        case Quantity::rho_minus_pi_max: return "rho_minus_pi_max";
        case Quantity::diam_minus_pi_max: return "diam_minus_pi_max";
        case Quantity::pi_min_given_d: return "pi_min_given_d";
        case Quantity::diam_max: return "diam_max";
        case Quantity::rad_max: return "rad_max";
    }
    return "?";
}

bool is_lower_bound(Quantity qty) { return qty == Quantity::pi_min_given_d; }

bool ClassGuard::admits(const ClassFlags& f, int kappa) const {
    return (!planar || f.planar) && (!outerplanar || f.outerplanar) && (!bipartite || f.bipartite) &&
           (!maximal_planar || f.maximal_planar) && (!quadrangulation || f.quadrangulation) &&
           (!maximal_outerplanar || f.maximal_outerplanar) && kappa >= min_kappa;
}

std::string ClassGuard::describe() const {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ", ";
        s += name;
    };
    add(planar, "planar");
    add(outerplanar, "outerplanar");
    add(bipartite, "bipartite");
    add(maximal_planar, "maximal planar");
    add(quadrangulation, "quadrangulation");
    add(maximal_outerplanar, "maximal outerplanar");
    if (min_kappa > 0) {
        if (!s.empty()) s += ", ";
        s += "kappa >= " + std::to_string(min_kappa);
    }
    return s.empty() ? "connected" : s;
}

const std::vector<BoundSpec>& bound_registry() {
    static const std::vector<BoundSpec> registry = build_registry();
    return registry;
}

const std::vector<QuarantineSpec>& quarantine_registry() {
    static const std::vector<QuarantineSpec> list = build_quarantine();
    return list;
}

const BoundSpec* find_bound(const std::string& id) {
    for (const auto& b : bound_registry())
        if (b.id == id) return &b;
    return nullptr;
}

const QuarantineSpec* find_quarantined(const std::string& id) {
    for (const auto& b : quarantine_registry())
        if (b.id == id) return &b;
    return nullptr;
}

Rational bound_value(const std::string& id, int n, std::optional<int> kappa, std::optional<int> d) {
    const BoundSpec* b = find_bound(id);
    if (!b) {
        if (find_quarantined(id)) throw std::invalid_argument(id + " is quarantined and has no single value");
        throw std::invalid_argument("unknown bound id '" + id + "'");
    }
    if (n < b->min_n) throw std::invalid_argument(id + " requires n >= " + std::to_string(b->min_n));
    if (b->uses_kappa && !kappa) throw std::invalid_argument(id + " requires kappa");
    if (b->uses_d && !d) throw std::invalid_argument(id + " requires d");
    const int kappa_floor = std::max(b->uses_kappa ? 1 : 0, b->guard.min_kappa);
    if (kappa && *kappa < kappa_floor)
        throw std::invalid_argument(id + " requires kappa >= " + std::to_string(kappa_floor));
    const BoundArgs args{n, kappa.value_or(0), d.value_or(0)};
    if (b->domain) {
        const std::string why = b->domain(args);
        if (!why.empty()) throw std::invalid_argument(id + " requires " + why);
    }
    return b->eval(args);
}

Rational diameter_pi_lower_bound(int n, int kappa, int d) { return thm61a(BoundArgs{n, kappa, d}); }

ClassFlags close_flags(ClassFlags f) {
    if (f.maximal_planar || f.quadrangulation || f.outerplanar || f.maximal_outerplanar) f.planar = true;
    if (f.maximal_outerplanar) f.outerplanar = true;
    if (f.quadrangulation) f.bipartite = true;
    return f;
}

std::vector<std::string> applicable_bounds(const ClassFlags& flags, int kappa) {
    const ClassFlags f = close_flags(flags);
    std::vector<std::string> out;
    for (const auto& b : bound_registry())
        if (b.guard.admits(f, kappa)) out.push_back(b.id);
    return out;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::equality: return "equality";
        case Verdict::slack: return "slack";
        case Verdict::violation: return "VIOLATION";
    }
    return "?";
}

Rational slack_of(Quantity qty, const Rational& bound, const Rational& computed) {
    return is_lower_bound(qty) ? computed - bound : bound - computed;
}

Verdict judge(Quantity qty, const Rational& bound, const Rational& computed) {
    const Rational s = slack_of(qty, bound, computed);
    // Mixed rational/int comparisons recurse under C++20 rewritten operators
    // in this Boost version, so compare against a Rational zero.
    const Rational zero(0);
    if (s == zero) return Verdict::equality;
    return s > zero ? Verdict::slack : Verdict::violation;
}

Rational computed_value(Quantity qty, const ParamSummary& p) {
    switch (qty) {
        case Quantity::pi_max:
        case Quantity::pi_min_given_d: return p.proximity;
        case Quantity::rho_max: return p.remoteness;
        case Quantity::rad_minus_pi_max: return Rational(p.radius) - p.proximity;
        case Quantity::rho_minus_pi_max: return p.remoteness - p.proximity;
        case Quantity::diam_minus_pi_max: return Rational(p.diameter) - p.proximity;
        case Quantity::diam_max: return Rational(p.diameter);
        case Quantity::rad_max: return Rational(p.radius);
    }
    return Rational(0);
}

bool BoundReport::has_violation() const {
    return std::any_of(applicable.begin(), applicable.end(),
                       [](const BoundCheck& c) { return c.verdict == Verdict::violation; });
}

const BoundCheck* BoundReport::find(const std::string& id) const {
    for (const auto& c : applicable)
        if (c.id == id) return &c;
    return nullptr;
}

BoundReport check_bounds(const Graph& g) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("check_bounds: graph must be connected with n >= 2");
    return check_bounds(g, classify(g), connectivity_number(g));
}

BoundReport check_bounds(const Graph& g, const ClassFlags& flags, int kappa) {
    if (g.order() < 2 || !is_connected(g))
        throw std::invalid_argument("check_bounds: graph must be connected with n >= 2");
    BoundReport r;
    r.graph6 = to_graph6(g);
    r.canonical = canonical_code(g);
    r.n = g.order();
    r.m = g.edge_count();
    r.kappa = kappa;
    r.flags = close_flags(flags);
    r.params = param_summary(g);
    const BoundArgs args{r.n, kappa, r.params.diameter};

    for (const auto& b : bound_registry()) {
        if (!b.guard.admits(r.flags, kappa)) continue;
        std::string why;
        if (r.n < b.min_n) why = "n >= " + std::to_string(b.min_n);
        else if (b.domain) why = b.domain(args);
        if (!why.empty()) {
            r.skipped.push_back({b.id, "requires " + why});
            continue;
        }
        BoundCheck c;
        c.id = b.id;
        c.quantity = b.quantity;
        c.bound = b.eval(args);
        c.computed = computed_value(b.quantity, r.params);
        c.slack = slack_of(b.quantity, c.bound, c.computed);
        c.verdict = judge(b.quantity, c.bound, c.computed);
        r.applicable.push_back(c);
    }
    for (const auto& qs : quarantine_registry()) {
        if (!qs.guard.admits(r.flags, kappa) || r.n < qs.min_n) continue;
        QuarantineCheck c;
        c.id = qs.id;
        c.derived_from = qs.derived_from;
        c.quantity = qs.quantity;
        c.printed_bound = qs.printed(args);
        c.derived_bound = qs.derived(args);
        c.computed = computed_value(qs.quantity, r.params);
        c.printed_verdict = judge(qs.quantity, c.printed_bound, c.computed);
        c.derived_verdict = judge(qs.quantity, c.derived_bound, c.computed);
        if (c.printed_bound != c.derived_bound)
            r.discrepancy_notes.push_back(qs.id + ": printed " + to_string(c.printed_bound) + " vs " + qs.derived_from +
                                          " " + to_string(c.derived_bound));
        r.quarantine.push_back(c);
    }
    return r;
}

}  // namespace planardist
