#include "hirzewahl/gaussian.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "hirzewahl/cohomology.hpp"

namespace hirzewahl {

namespace {

struct Term {
    long i;
    long k;
    Int c;
};

using Poly = std::vector<Term>;

Poly to_poly(const MonomialBasis& basis, const std::vector<std::pair<long, Int>>& section) {
    Poly p;
    p.reserve(section.size());
    for (const auto& [idx, c] : section) {
        auto [i, k] = basis.exponents[static_cast<std::size_t>(idx)];
        p.push_back({i, k, c});
    }
    return p;
}

Poly d_dt(const Poly& f) {
    Poly out;
    for (const auto& t : f)
        if (t.i > 0) out.push_back({t.i - 1, t.k, t.c * t.i});
    return out;
}

Poly d_ds(const Poly& f) {
    Poly out;
    for (const auto& t : f)
        if (t.k > 0) out.push_back({t.i, t.k - 1, t.c * t.k});
    return out;
}

void accumulate_product(std::map<std::pair<long, long>, Int>& acc, const Poly& f, const Poly& g,
                        int sign) {
    for (const auto& x : f)
        for (const auto& y : g) {
            Int& slot = acc[{x.i + y.i, x.k + y.k}];
            if (sign > 0)
                slot += x.c * y.c;
            else
                slot -= x.c * y.c;
        }
}

}  // namespace

ExactMatrix gaussian_matrix(const SectionBasis& basis) {
    long count = basis.size();
    long wedge = count * (count - 1) / 2;

    long tmax = 0, smax = 0;
    for (const auto& [i, k] : basis.monomials.exponents) {
        tmax = std::max(tmax, i);
        smax = std::max(smax, k);
    }
    // dt block: t-degree <= 2*tmax - 1, s-degree <= 2*smax; ds block symmetric
    long dt_rows = (tmax >= 1 ? 2 * tmax : 0) * (2 * smax + 1);
    long ds_rows = (2 * tmax + 1) * (smax >= 1 ? 2 * smax : 0);
    ExactMatrix m(dt_rows + ds_rows, wedge);
    if (count < 2) return m;

    auto dt_index = [&](long i, long k) { return i * (2 * smax + 1) + k; };
    auto ds_index = [&](long i, long k) { return dt_rows + i * 2 * smax + k; };

    std::vector<Poly> polys;
    polys.reserve(static_cast<std::size_t>(count));
    std::vector<Poly> dts, dss;
    for (long idx = 0; idx < count; ++idx) {
        polys.push_back(to_poly(basis.monomials, basis.sections[static_cast<std::size_t>(idx)]));
        dts.push_back(d_dt(polys.back()));
        dss.push_back(d_ds(polys.back()));
    }

    long col = 0;
    for (long f = 0; f < count; ++f)
        for (long g = f + 1; g < count; ++g, ++col) {
            std::map<std::pair<long, long>, Int> dt_part, ds_part;
            accumulate_product(dt_part, polys[static_cast<std::size_t>(f)], dts[static_cast<std::size_t>(g)], +1);
            accumulate_product(dt_part, polys[static_cast<std::size_t>(g)], dts[static_cast<std::size_t>(f)], -1);
            accumulate_product(ds_part, polys[static_cast<std::size_t>(f)], dss[static_cast<std::size_t>(g)], +1);
            accumulate_product(ds_part, polys[static_cast<std::size_t>(g)], dss[static_cast<std::size_t>(f)], -1);
            for (const auto& [ik, c] : dt_part)
                if (c != 0) m.set(dt_index(ik.first, ik.second), col, Rat(c));
            for (const auto& [ik, c] : ds_part)
                if (c != 0) m.set(ds_index(ik.first, ik.second), col, Rat(c));
        }
    return m;
}

GaussianReport check_gaussian_surjectivity(long n, long a, long b, long delta, std::uint64_t seed,
                                           long max_wedge) {
    auto started = std::chrono::steady_clock::now();
    NodalClasses ncl = nodal_classes(n, a, b, delta);
    std::vector<ChartPoint> points = pick_generic_points(n, delta, seed);

    SectionBasis basis = section_basis(ncl.surface.base, ncl.adjoint, points);

    GaussianReport rep;
    rep.seed = seed;
    rep.domain_dim = basis.size();
    rep.wedge_dim = rep.domain_dim * (rep.domain_dim - 1) / 2;
    if (rep.wedge_dim > max_wedge)
        throw std::runtime_error("check_gaussian_surjectivity: wedge dimension " +
                                 std::to_string(rep.wedge_dim) + " exceeds the budget of " +
                                 std::to_string(max_wedge));

    DimTable dims = dim_table(n, a, b, delta);
    rep.target_dim = dims.h0_twist_twice;
    rep.asserted = dims.hypothesis;
    if (!dims.hypothesis)
        rep.note = "target dimension is a formal Euler characteristic here; surjectivity not asserted";

    ExactMatrix m = gaussian_matrix(basis);
    rep.rank = rank_exact(m);
    if (rep.asserted && Int(rep.rank) > rep.target_dim)
        throw std::logic_error("check_gaussian_surjectivity: rank exceeds the asserted target");
    rep.surjective = Int(rep.rank) == rep.target_dim;
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

}  // namespace hirzewahl
