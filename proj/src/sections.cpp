#include "hirzewahl/sections.hpp"

#include <algorithm>
#include <map>

namespace hirzewahl {

namespace {

long to_long(const Int& v, const char* what) {
    if (!v.fits_slong_p()) throw std::invalid_argument(std::string(what) + ": value out of range");
    return v.get_si();
}

// falling factorial x(x-1)...(x-p+1)
Int falling(long x, long p) {
    Int r = 1;
    for (long q = 0; q < p; ++q) r *= x - q;
    return r;
}

std::vector<Rat> power_table(const Rat& x, long up_to) {
    std::vector<Rat> pw(static_cast<std::size_t>(up_to) + 1);
    pw[0] = 1;
    for (long e = 1; e <= up_to; ++e) pw[static_cast<std::size_t>(e)] = pw[static_cast<std::size_t>(e - 1)] * x;
    return pw;
}

// dense polynomial in t with Int coefficients, index = degree
using TPoly = std::vector<Int>;

TPoly mul_linear(const TPoly& f, const Int& c1, const Int& c0) {
    // f * (c1 t + c0)
    TPoly out(f.size() + 1, Int(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
        out[i + 1] += c1 * f[i];
        out[i] += c0 * f[i];
    }
    return out;
}

struct KernelBuilder {
    const MonomialBasis& basis;
    std::vector<std::vector<std::pair<long, Int>>> sections;

    void push_poly(const std::map<std::pair<long, long>, Int>& poly) {
        std::vector<std::pair<long, Int>> vec;
        for (const auto& [ik, c] : poly) {
            if (c == 0) continue;
            long idx = basis.index_of(ik.first, ik.second);
            if (idx < 0) throw std::logic_error("section_basis: monomial outside the box");
            vec.emplace_back(idx, c);
        }
        std::sort(vec.begin(), vec.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        sections.push_back(std::move(vec));
    }
};

// kernel basis through exact Gauss-Jordan on the constraint matrix
std::vector<std::vector<std::pair<long, Int>>> kernel_by_elimination(const ExactMatrix& con) {
    long rows = con.rows(), cols = con.cols();
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(rows),
                                    std::vector<Rat>(static_cast<std::size_t>(cols), Rat(0)));
    for (const auto& [rc, v] : con.entries())
        a[static_cast<std::size_t>(rc.first)][static_cast<std::size_t>(rc.second)] = v;

    std::vector<long> pivot_col;
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long pr = -1;
        for (long i = r; i < rows; ++i)
            if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[static_cast<std::size_t>(r)], a[static_cast<std::size_t>(pr)]);
        Rat inv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (long j = c; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r) continue;
            Rat f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            if (f == 0) continue;
            for (long j = c; j < cols; ++j)
                a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                    f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (long c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<std::pair<long, Int>>> out;
    for (long f = 0; f < cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        // x_f = 1, x_{pivot_col[i]} = -a[i][f]
        std::vector<std::pair<long, Rat>> vec;
        vec.emplace_back(f, Rat(1));
        for (std::size_t i = 0; i < pivot_col.size(); ++i) {
            Rat v = -a[i][static_cast<std::size_t>(f)];
            if (v != 0) vec.emplace_back(pivot_col[i], v);
        }
        std::sort(vec.begin(), vec.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        Int den_lcm = 1;
        for (const auto& [idx, v] : vec)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
        std::vector<std::pair<long, Int>> ivec;
        Int content = 0;
        for (const auto& [idx, v] : vec) {
            Int c = v.get_num() * (den_lcm / v.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
            ivec.emplace_back(idx, std::move(c));
        }
        if (content > 1)
            for (auto& [idx, c] : ivec) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
        out.push_back(std::move(ivec));
    }
    return out;
}

}  // namespace

long MonomialBasis::index_of(long i, long k) const {
    // exponents are ordered k-major, i ascending; binary search is overkill
    // for the sizes involved, but the scan must stay deterministic
    for (std::size_t idx = 0; idx < exponents.size(); ++idx)
        if (exponents[idx].first == i && exponents[idx].second == k)
            return static_cast<long>(idx);
    return -1;
}

MonomialBasis monomial_basis(const HirzebruchSurface& s, const DivisorClass& d) {
    if (!d.m.empty())
        throw std::invalid_argument("monomial_basis: divisor must have no exceptional part");
    MonomialBasis basis;
    basis.divisor = d;
    if (d.a < 0) return basis;
    long a = to_long(d.a, "monomial_basis");
    for (long k = 0; k <= a; ++k) {
        Int imax = d.b - Int(k) * s.n;
        if (imax < 0) continue;
        long im = to_long(imax, "monomial_basis");
        for (long i = 0; i <= im; ++i) basis.exponents.emplace_back(i, k);
    }
    return basis;
}

std::vector<ChartPoint> pick_generic_points(long n, long delta, std::uint64_t seed) {
    (void)n;  // the chart does not depend on the twist
    if (delta < 0) throw std::invalid_argument("pick_generic_points: delta must be >= 0");
    SplitMix64 rng(seed);
    std::vector<ChartPoint> pts;
    pts.reserve(static_cast<std::size_t>(delta));
    while (static_cast<long>(pts.size()) < delta) {
        Rat t(static_cast<unsigned long>(rng.one_to(1009)), static_cast<unsigned long>(rng.one_to(1009)));
        t.canonicalize();
        bool fresh = true;
        for (const auto& p : pts) fresh = fresh && p.t != t;
        if (!fresh) continue;
        Rat s(static_cast<unsigned long>(rng.one_to(1009)), static_cast<unsigned long>(rng.one_to(1009)));
        s.canonicalize();
        pts.push_back(ChartPoint{t, s});
    }
    return pts;
}

ExactMatrix vanishing_constraints(const MonomialBasis& basis, const std::vector<ChartPoint>& points,
                                  const std::vector<long>& orders) {
    if (points.size() != orders.size())
        throw std::invalid_argument("vanishing_constraints: one order per point");
    long row_count = 0;
    for (long m : orders) {
        if (m < 0) throw std::invalid_argument("vanishing_constraints: negative order");
        row_count += m * (m + 1) / 2;
    }
    long imax = 0, kmax = 0;
    for (const auto& [i, k] : basis.exponents) {
        imax = std::max(imax, i);
        kmax = std::max(kmax, k);
    }
    ExactMatrix con(row_count, basis.size());
    long row = 0;
    for (std::size_t j = 0; j < points.size(); ++j) {
        auto tp = power_table(points[j].t, imax);
        auto sp = power_table(points[j].s, kmax);
        for (long p = 0; p < orders[j]; ++p)
            for (long q = 0; p + q < orders[j]; ++q) {
                for (long col = 0; col < basis.size(); ++col) {
                    auto [i, k] = basis.exponents[static_cast<std::size_t>(col)];
                    if (i < p || k < q) continue;
                    Rat v = Rat(falling(i, p) * falling(k, q)) * tp[static_cast<std::size_t>(i - p)] *
                            sp[static_cast<std::size_t>(k - q)];
                    con.set(row, col, v);
                }
                ++row;
            }
    }
    return con;
}

Int h0_blowup(const BlownSurface& x, const DivisorClass& d) {
    if (static_cast<long>(d.m.size()) != x.delta)
        throw std::invalid_argument("h0_blowup: divisor does not live on this surface");
    if (x.delta > 0 && !x.points)
        throw std::invalid_argument("h0_blowup: point coordinates required");
    for (const auto& mj : d.m)
        if (mj < 0) throw std::invalid_argument("h0_blowup: multiplicities must be >= 0");

    MonomialBasis basis = monomial_basis(x.base, DivisorClass(d.a, d.b));
    if (x.delta == 0) return basis.size();

    std::vector<long> orders;
    orders.reserve(d.m.size());
    for (const auto& mj : d.m) orders.push_back(to_long(mj, "h0_blowup"));
    ExactMatrix con = vanishing_constraints(basis, *x.points, orders);
    return Int(basis.size()) - rank_exact(con);
}

SectionBasis section_basis(const HirzebruchSurface& s, const DivisorClass& d,
                           const std::vector<ChartPoint>& points) {
    if (d.m.size() != points.size())
        throw std::invalid_argument("section_basis: one multiplicity per point");
    validate_points(points);

    SectionBasis out;
    out.monomials = monomial_basis(s, DivisorClass(d.a, d.b));
    if (out.monomials.size() == 0) return out;

    if (points.empty()) {
        for (long idx = 0; idx < out.monomials.size(); ++idx)
            out.sections.push_back({{idx, Int(1)}});
        return out;
    }

    std::vector<long> orders;
    for (const auto& mj : d.m) {
        if (mj < 0) throw std::invalid_argument("section_basis: multiplicities must be >= 0");
        orders.push_back(to_long(mj, "section_basis"));
    }

    long a = to_long(d.a, "section_basis");
    long delta = static_cast<long>(points.size());
    bool simple = std::all_of(orders.begin(), orders.end(), [](long m) { return m == 1; });
    bool wide = d.b - d.a * s.n >= delta - 1;

    ExactMatrix con = vanishing_constraints(out.monomials, points, orders);
    Int kernel_dim = Int(out.monomials.size()) - rank_exact(con);

    if (simple && wide) {
        // Product basis adapted to simple points on distinct fibers.  With
        // t_j = p_j/q_j the factor (q_j t - p_j) vanishes on the fiber
        // through point j; L_j collects the factors of the other points.
        KernelBuilder kb{out.monomials, {}};
        TPoly full{Int(1)};
        std::vector<TPoly> lagrange(static_cast<std::size_t>(delta), TPoly{Int(1)});
        for (long j = 0; j < delta; ++j) {
            Int qj(points[static_cast<std::size_t>(j)].t.get_den());
            Int pj(points[static_cast<std::size_t>(j)].t.get_num());
            full = mul_linear(full, qj, -pj);
            for (long l = 0; l < delta; ++l)
                if (l != j)
                    lagrange[static_cast<std::size_t>(l)] =
                        mul_linear(lagrange[static_cast<std::size_t>(l)], qj, -pj);
        }
        for (long k = 0; k <= a; ++k) {
            Int width = d.b - Int(k) * s.n;
            if (width - delta < 0) continue;
            long top = to_long(width - delta, "section_basis");
            for (long i = 0; i <= top; ++i) {
                std::map<std::pair<long, long>, Int> poly;
                for (std::size_t degree = 0; degree < full.size(); ++degree)
                    poly[{static_cast<long>(degree) + i, k}] = full[degree];
                kb.push_poly(poly);
            }
        }
        for (long j = 0; j < delta; ++j) {
            Int qs(points[static_cast<std::size_t>(j)].s.get_den());
            Int ps(points[static_cast<std::size_t>(j)].s.get_num());
            const TPoly& lj = lagrange[static_cast<std::size_t>(j)];
            for (long k = 1; k <= a; ++k) {
                std::map<std::pair<long, long>, Int> poly;
                for (std::size_t degree = 0; degree < lj.size(); ++degree) {
                    poly[{static_cast<long>(degree), k}] += qs * lj[degree];
                    poly[{static_cast<long>(degree), k - 1}] += -ps * lj[degree];
                }
                kb.push_poly(poly);
            }
        }
        out.sections = std::move(kb.sections);
        if (Int(out.size()) != kernel_dim)
            throw std::logic_error("section_basis: product basis does not match kernel dimension");
    } else {
        out.sections = kernel_by_elimination(con);
        if (Int(out.size()) != kernel_dim)
            throw std::logic_error("section_basis: kernel dimension mismatch");
    }

    // every section must satisfy every constraint exactly
    for (const auto& sec : out.sections) {
        std::vector<Rat> image(static_cast<std::size_t>(con.rows()), Rat(0));
        for (const auto& [idx, c] : sec)
            for (long r = 0; r < con.rows(); ++r) {
                Rat e = con.get(r, idx);
                if (e != 0) image[static_cast<std::size_t>(r)] += Rat(c) * e;
            }
        for (const auto& v : image)
            if (v != 0) throw std::logic_error("section_basis: constructed section misses a constraint");
    }
    return out;
}

}  // namespace hirzewahl
