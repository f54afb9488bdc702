#include "hirzewahl/positivity.hpp"

#include <algorithm>

namespace hirzewahl {

bool is_bpf(const HirzebruchSurface& s, const DivisorClass& d) {
    if (!d.m.empty()) throw std::invalid_argument("is_bpf: class must live on F_n");
    return d.a >= 0 && d.b >= 0 && d.b >= d.a * s.n;
}

bool is_very_ample(const HirzebruchSurface& s, const DivisorClass& d) {
    if (!d.m.empty()) throw std::invalid_argument("is_very_ample: class must live on F_n");
    return d.a >= 1 && d.b > d.a * s.n;
}

DecompositionABM abm_decomposition(long a, long b, long delta) {
    if (a < 0 || b < 0) throw std::invalid_argument("abm_decomposition: a, b must be >= 0");
    long fa = a / 3, fb = b / 3;
    DecompositionABM r;
    r.a_part = DivisorClass(fa, fb);
    r.b_part = DivisorClass(a - 2 * fa, b - 2 * fb);
    r.m_class = DivisorClass::uniform(a, b, delta, 3);
    return r;
}

namespace {

// cases excluded by the criterion, plus anything meeting N in degree < 2
// (the certification argument needs N.G >= 2 on every candidate)
bool chain_blocker(const Int& x, const Int& s) {
    return x < 2 || (x == 2 && s == 0);
}

Int dot(const DivisorClass& n_class, const DivisorClass& g, long n) {
    Int v = -n_class.a * g.a * n + n_class.a * g.b + g.a * n_class.b;
    for (std::size_t j = 0; j < g.m.size(); ++j) v -= n_class.m[j] * g.m[j];
    return v;
}

Int self_int(const DivisorClass& g, long n) { return dot(g, g, n); }

void consider(ReiderReport& rep, const DivisorClass& g, long n, const std::string& family) {
    Int x = dot(rep.n_class, g, n);
    Int s = self_int(g, n);
    if (chain_blocker(x, s)) {
        for (const auto& bl : rep.blockers)
            if (bl.n_dot == x && bl.self_int == s && bl.family == family) return;
        rep.blockers.push_back({g, x, s, family});
    }
}

// Is there a cone point with N.G == 2 and G^2 == 0?  Such points have
// beta = alpha*n and alpha*c <= 2, so alpha is 1 or 2; the exceptional
// multiplicities n_j in [0, alpha] must satisfy sum w_j n_j = alpha*v - 2
// and sum n_j^2 = alpha^2 * n.  Feasibility by a small DP over the points.
std::optional<std::vector<long>> square_zero_witness(const std::vector<Int>& w, long alpha,
                                                     const Int& target_wsum, const Int& target_sqsum) {
    if (target_wsum < 0 || target_sqsum < 0) return std::nullopt;
    Int wmax = 0;
    for (const auto& wj : w) wmax += std::max(wj, Int(0)) * alpha;
    Int smax = Int(alpha) * alpha * static_cast<long>(w.size());
    if (target_wsum > wmax || target_sqsum > smax) return std::nullopt;
    long tw = target_wsum.get_si(), ts = target_sqsum.get_si();
    std::size_t count = w.size();
    // reachable[j][sw][ss] via first j points; reconstruct greedily afterwards
    std::vector<std::vector<std::vector<bool>>> reach(
        count + 1, std::vector<std::vector<bool>>(tw + 1, std::vector<bool>(ts + 1, false)));
    reach[0][0][0] = true;
    for (std::size_t j = 0; j < count; ++j) {
        long wj = w[j].get_si();
        for (long sw = 0; sw <= tw; ++sw)
            for (long ss = 0; ss <= ts; ++ss) {
                if (!reach[j][sw][ss]) continue;
                for (long nj = 0; nj <= alpha; ++nj) {
                    long nsw = sw + wj * nj, nss = ss + nj * nj;
                    if (nsw <= tw && nss <= ts) reach[j + 1][nsw][nss] = true;
                }
            }
    }
    if (!reach[count][tw][ts]) return std::nullopt;
    std::vector<long> pick(count, 0);
    long sw = tw, ss = ts;
    for (std::size_t j = count; j-- > 0;) {
        long wj = w[j].get_si();
        for (long nj = 0; nj <= alpha; ++nj) {
            long psw = sw - wj * nj, pss = ss - nj * nj;
            if (psw >= 0 && pss >= 0 && reach[j][psw][pss]) {
                pick[j] = nj;
                sw = psw;
                ss = pss;
                break;
            }
        }
    }
    return pick;
}

DivisorClass cone_class(long alpha, const Int& beta, const std::vector<long>& nj) {
    std::vector<Int> m(nj.begin(), nj.end());
    return DivisorClass(Int(alpha), beta, std::move(m));
}

// Candidate classes G = alpha s^*C0 + beta s^*F - sum n_j E_j with
// alpha >= 1, beta >= alpha*n, 0 <= n_j <= alpha.  Minimizes N.G over the
// cone in closed form; the minimum sits at beta = alpha*n, n_j = alpha.
void cone_search(ReiderReport& rep, long n, long delta) {
    const Int& u = rep.n_class.a;
    const Int& v = rep.n_class.b;
    const std::vector<Int>& w = rep.n_class.m;

    if (u <= 0) {
        // N.G decreases without bound as beta grows
        std::vector<long> ones(static_cast<std::size_t>(delta), 1);
        DivisorClass g = cone_class(1, Int(n) + 1, ones);
        rep.blockers.push_back({g, dot(rep.n_class, g, n), self_int(g, n), "cone (unbounded)"});
        return;
    }

    Int wsum = 0;
    for (const auto& wj : w) wsum += std::max(wj, Int(0));
    Int c = v - wsum;

    if (c <= 1) {
        // minimum c attained at alpha = 1, beta = n, n_j = 1 wherever w_j > 0
        std::vector<long> nj(static_cast<std::size_t>(delta), 0);
        for (long j = 0; j < delta; ++j)
            if (w[static_cast<std::size_t>(j)] > 0) nj[static_cast<std::size_t>(j)] = 1;
        DivisorClass g = cone_class(1, Int(n), nj);
        rep.blockers.push_back({g, dot(rep.n_class, g, n), self_int(g, n), "cone (minimum)"});
        return;
    }

    // minimum is c >= 2; points with N.G == 2 require alpha*c <= 2
    for (long alpha = 1; Int(alpha) * c <= 2; ++alpha) {
        Int target_wsum = Int(alpha) * v - 2;
        Int target_sqsum = Int(alpha) * alpha * n;
        auto nj = square_zero_witness(w, alpha, target_wsum, target_sqsum);
        if (nj) {
            DivisorClass g = cone_class(alpha, Int(alpha) * n, *nj);
            rep.blockers.push_back({g, dot(rep.n_class, g, n), self_int(g, n), "cone (degree 2, square 0)"});
            return;
        }
    }
}

ReiderReport reider_on_base(const HirzebruchSurface& f, const DivisorClass& d) {
    // pullback classes are checked on the base surface: the delta-independent limit
    ReiderReport rep;
    DivisorClass k = canonical(f);
    rep.n_class = DivisorClass(d.a - k.a, d.b - k.b);
    rep.n_squared = self_int(rep.n_class, f.n);
    rep.note = "exceptional part zero; certified on the base surface";
    consider(rep, DivisorClass(0, 1), f.n, "fiber");
    consider(rep, DivisorClass(1, 0), f.n, "special section");
    // cone alpha >= 1, beta >= alpha*n with no exceptional multiplicities
    if (rep.n_class.a <= 0) {
        DivisorClass g(1, Int(f.n) + 1);
        rep.blockers.push_back({g, dot(rep.n_class, g, f.n), self_int(g, f.n), "cone (unbounded)"});
    } else {
        Int c = rep.n_class.b;  // minimum of N.G at alpha = 1, beta = n
        if (c <= 2) consider(rep, DivisorClass(1, Int(f.n)), f.n, "cone (minimum)");
    }
    rep.verdict = rep.n_squared >= 10 && rep.blockers.empty();
    return rep;
}

}  // namespace

ReiderReport reider_very_ample(const BlownSurface& x, const DivisorClass& d) {
    long n = x.base.n;
    long delta = x.delta;
    if (static_cast<long>(d.m.size()) != delta)
        throw std::invalid_argument("reider_very_ample: divisor does not live on this surface");
    for (const auto& mj : d.m)
        if (mj < 0) throw std::invalid_argument("reider_very_ample: exceptional multiplicities must be >= 0");

    bool pullback = true;
    for (const auto& mj : d.m) pullback = pullback && mj == 0;
    if (delta == 0 || pullback) return reider_on_base(x.base, DivisorClass(d.a, d.b));

    ReiderReport rep;
    rep.n_class = d - canonical(x);
    rep.n_squared = self_int(rep.n_class, n);

    if (!x.generic_declared) {
        rep.conclusive = false;
        rep.verdict = false;
        rep.note = "inconclusive: point genericity (distinct fibers, off the special section) not declared";
        return rep;
    }

    for (long j = 0; j < delta; ++j) {
        std::vector<Int> ej(static_cast<std::size_t>(delta), 0);
        ej[static_cast<std::size_t>(j)] = 1;
        consider(rep, DivisorClass(0, 1, ej), n, "fiber through point");
        std::vector<Int> eneg(static_cast<std::size_t>(delta), 0);
        eneg[static_cast<std::size_t>(j)] = -1;
        consider(rep, DivisorClass(0, 0, eneg), n, "exceptional curve");
    }
    consider(rep, DivisorClass::uniform(0, 1, delta, 0), n, "fiber");
    consider(rep, DivisorClass::uniform(1, 0, delta, 0), n, "special section");
    cone_search(rep, n, delta);

    rep.verdict = rep.n_squared >= 10 && rep.blockers.empty();
    return rep;
}

bool nakai_moishezon_delta1(const BlownSurface& x, const DivisorClass& d) {
    if (x.delta != 1)
        throw std::invalid_argument("nakai_moishezon_delta1: requires a one-point blow-up");
    if (d.m.size() != 1)
        throw std::invalid_argument("nakai_moishezon_delta1: divisor does not live on this surface");
    if (!x.generic_declared)
        throw std::invalid_argument("nakai_moishezon_delta1: point genericity not declared");

    long n = x.base.n;
    const Int& u = d.a;
    const Int& v = d.b;
    const Int& w = d.m[0];

    if (self_int(d, n) <= 0) return false;
    if (u <= 0) return false;          // fiber, and boundedness of the cone in beta
    if (u - w <= 0) return false;      // fiber through the point
    if (v - u * n <= 0) return false;  // special section (point off it)
    if (w <= 0) return false;          // exceptional curve
    // cone alpha >= 1, beta >= alpha*n, gamma <= alpha: the minimum of D.G is
    // alpha*(v - w) at beta = alpha*n, gamma = alpha
    return v - w > 0;
}

JetCertificate jet_ample_F(long n, long a, long b, long delta) {
    JetCertificate cert;
    cert.jet_order = 2 * delta - 1;
    cert.jet_part = DivisorClass(2 * delta - 1, Int(2 * delta) * n + 2 * delta - n - 1);
    cert.spanned_coeff_a = Int(2) * a - 3 - 2 * delta;
    cert.spanned_coeff_b = Int(2) * b - 3 - n - Int(2 * delta) * n - 2 * delta;
    cert.globally_generated =
        cert.spanned_coeff_a >= 0 && cert.spanned_coeff_b >= cert.spanned_coeff_a * n;
    cert.jet_ample = a >= delta + 2 && Int(b) >= Int(a - 1) * n + delta + 2;
    return cert;
}

PipelineReport surjectivity_pipeline(long n, long a, long b, long delta) {
    PipelineReport rep;
    Int bound = std::max(Int(Int(a + 7) * n), Int(Int(6) * delta - 3 * n + 3));
    rep.hypothesis = a >= 6 && Int(b) >= bound;
    rep.hypothesis_detail =
        "a >= 6 and b >= max{(a+7)n, 6*delta - 3n + 3} = " + bound.get_str();
    if (a < 0 || b < 0) {
        rep.hypothesis = false;
        rep.verdict = false;
        return rep;
    }

    DecompositionABM abm = abm_decomposition(a, b, delta);
    HirzebruchSurface f(n);
    if (delta == 0) {
        rep.subchecks.push_back({"very-ample:A", is_very_ample(f, abm.a_part), std::nullopt});
        rep.subchecks.push_back({"very-ample:B", is_very_ample(f, abm.b_part), std::nullopt});
    } else {
        BlownSurface x = BlownSurface::generic(f, delta);
        auto add = [&rep](std::string name, ReiderReport r) {
            bool ok = r.verdict;
            rep.subchecks.push_back({std::move(name), ok, std::move(r)});
        };
        add("very-ample:A-E",
            reider_very_ample(x, DivisorClass::uniform(abm.a_part.a, abm.a_part.b, delta, 1)));
        add("very-ample:B-E",
            reider_very_ample(x, DivisorClass::uniform(abm.b_part.a, abm.b_part.b, delta, 1)));
        // the partial sums B - E_1 - ... - E_j are honest classes on the
        // j-point blow-up; checked there so no exceptional curve is contracted
        for (long j = 1; j <= delta; ++j) {
            BlownSurface xj = BlownSurface::generic(f, j);
            add("very-ample:B-E[1.." + std::to_string(j) + "]",
                reider_very_ample(xj, DivisorClass::uniform(abm.b_part.a, abm.b_part.b, j, 1)));
        }
    }

    bool all_ok = true;
    for (const auto& sub : rep.subchecks)
        if (!sub.verdict) {
            all_ok = false;
            rep.failed.push_back(sub.name);
        }
    if (!rep.hypothesis) rep.failed.insert(rep.failed.begin(), "hypothesis");
    rep.verdict = rep.hypothesis && all_ok;
    return rep;
}

}  // namespace hirzewahl
