#include "hirzewahl/wahl.hpp"

#include <algorithm>

#include "hirzewahl/sections.hpp"

namespace hirzewahl {

namespace {

Hypothesis hyp(std::string name, std::string text, bool ok) {
    return Hypothesis{std::move(name), std::move(text), ok};
}

std::string tight_note(const std::vector<std::pair<std::string, Int>>& bounds, const Int& b) {
    // records which lower bound for b is the binding one
    const std::pair<std::string, Int>* best = nullptr;
    for (const auto& cand : bounds)
        if (!best || cand.second > best->second) best = &cand;
    return "binding bound for b: " + best->first + " = " + best->second.get_str() +
           (b >= best->second ? " (met)" : " (not met)");
}

}  // namespace

Int anticanonical_h0(long n) {
    if (n < 0) throw std::invalid_argument("anticanonical_h0: n must be >= 0");
    return n <= 2 ? Int(9) : Int(n + 6);
}

CorankReport corank_delta_nodal(long n, long a, long b, long delta) {
    GenusPair gp = genus(n, a, b, delta);
    CorankReport rep;
    rep.g = gp.arithmetic;
    rep.g_tilde = gp.geometric;

    std::vector<std::pair<std::string, Int>> bounds = {
        {"(a+7)n", Int(a + 7) * n},
        {"(a-1)n + delta + 2", Int(a - 1) * n + delta + 2},
        {"6*delta - 3n + 3", Int(6) * delta - 3 * n + 3},
    };
    Int need = std::max({bounds[0].second, bounds[1].second, bounds[2].second});
    rep.hypotheses.push_back(hyp("nodal", "delta >= 1", delta >= 1));
    rep.hypotheses.push_back(hyp("a-bound", "a >= 6", a >= 6));
    rep.hypotheses.push_back(
        hyp("b-bound", "b >= max{(a+7)n, (a-1)n + delta + 2, 6*delta - 3n + 3} = " + need.get_str(),
            Int(b) >= need));
    rep.notes = tight_note(bounds, Int(b));

    if (delta >= 1 && a >= 6 && Int(b) >= need) rep.corank = anticanonical_h0(n);
    return rep;
}

CorankReport corank_one_nodal(long n, long a, long b) {
    GenusPair gp = genus(n, a, b, 1);
    CorankReport rep;
    rep.g = gp.arithmetic;
    rep.g_tilde = gp.geometric;

    std::vector<std::pair<std::string, Int>> bounds = {
        {"(a-2)n + 6", Int(a - 2) * n + 6},
        {"an + 3", Int(a) * n + 3},
    };
    Int need = std::max(bounds[0].second, bounds[1].second);
    rep.hypotheses.push_back(hyp("a-bound", "a >= 6", a >= 6));
    rep.hypotheses.push_back(
        hyp("b-bound", "b >= max{(a-2)n + 6, an + 3} = " + need.get_str(), Int(b) >= need));
    rep.notes = tight_note(bounds, Int(b));

    if (a >= 6 && Int(b) >= need) {
        rep.corank = anticanonical_h0(n);
        if (!corank_delta_nodal(n, a, b, 1).fired())
            rep.notes += "; extends beyond the delta-nodal bounds";
    }
    return rep;
}

bool corank_zero_regime(long n, long a, long b, long delta) {
    bool base = a >= 5 && (Int(b) >= Int(a - 2) * n + 6 || (n == 0 && b >= 5));
    if (!base) return false;
    // delta > a + b - an/2, kept integral as 2*delta > 2a + 2b - an
    bool many_nodes = Int(2) * delta > Int(2) * a + Int(2) * b - Int(a) * n;
    GenusPair gp = genus(n, a, b, delta);
    return many_nodes && gp.geometric >= 2;
}

EmbeddingVerdict embedding_obstruction(long n, long m, long a, long b, long delta) {
    if (m == n) throw std::invalid_argument("embedding_obstruction: m must differ from n");
    EmbeddingVerdict v;
    if (m < 4) {
        v.reason = "no conclusion: the corank separates twists only for m >= 4";
        return v;
    }
    CorankReport rep = corank_delta_nodal(n, a, b, delta);
    if (!rep.fired()) {
        v.reason = "no conclusion: corank hypotheses not satisfied at (n, a, b, delta)";
        return v;
    }
    v.corank_source = *rep.corank;
    v.corank_target = anticanonical_h0(m);
    v.cannot_embed = *v.corank_source != *v.corank_target;
    v.reason = v.cannot_embed
                   ? "cannot embed: corank " + v.corank_source->get_str() + " on the twist-" +
                         std::to_string(n) + " surface vs " + v.corank_target->get_str() +
                         " required on the twist-" + std::to_string(m) + " surface"
                   : "no conclusion: corank values coincide";
    return v;
}

ConjectureResult wahl_conjecture_check(long n, long delta, std::uint64_t seed) {
    ConjectureResult r;
    r.seed = seed;
    HirzebruchSurface f(n);
    DivisorClass antik(2, n + 2);
    MonomialBasis basis = monomial_basis(f, antik);
    r.lhs = basis.size();

    std::vector<ChartPoint> pts = pick_generic_points(n, delta, seed);
    BlownSurface x = BlownSurface::at_points(f, pts);
    r.rhs = h0_blowup(x, DivisorClass::uniform(2, n + 2, delta, 1));
    r.holds = r.lhs >= r.rhs;
    return r;
}

WahlDims wahl_dims(const Int& g_tilde) {
    if (g_tilde < 2) throw std::invalid_argument("wahl_dims: genus must be >= 2");
    WahlDims d;
    d.wedge_dim = half_exact(g_tilde * (g_tilde - 1));
    d.codomain_dim = 5 * g_tilde - 5;
    d.surjectivity_possible = d.wedge_dim >= d.codomain_dim;
    return d;
}

}  // namespace hirzewahl
