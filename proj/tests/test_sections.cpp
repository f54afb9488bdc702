#include <doctest.h>

#include <set>

#include "hirzewahl/cohomology.hpp"
#include "hirzewahl/positivity.hpp"
#include "hirzewahl/sections.hpp"

using namespace hirzewahl;

TEST_CASE("monomial bases") {
    CHECK(monomial_basis(HirzebruchSurface(0), DivisorClass(4, 7)).size() == 40);

    MonomialBasis small = monomial_basis(HirzebruchSurface(1), DivisorClass(1, 1));
    REQUIRE(small.size() == 3);
    std::set<std::pair<long, long>> got(small.exponents.begin(), small.exponents.end());
    CHECK(got == std::set<std::pair<long, long>>{{0, 0}, {1, 0}, {0, 1}});

    CHECK(monomial_basis(HirzebruchSurface(2), DivisorClass(-1, 9)).size() == 0);
}

TEST_CASE("monomial basis size equals h0") {
    for (long n = 0; n <= 4; ++n)
        for (long a = 0; a <= 7; ++a)
            for (long b = -3; b <= 9; ++b) {
                HirzebruchSurface f(n);
                DivisorClass d(a, b);
                CHECK(Int(monomial_basis(f, d).size()) == h_line(f, d).h0);
            }
}

TEST_CASE("generic point picking") {
    CHECK(pick_generic_points(1, 0, 9).empty());

    auto pts = pick_generic_points(0, 2, 42);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].t != pts[1].t);
    CHECK(pick_generic_points(0, 2, 42)[0].t == pts[0].t);  // same seed, same points

    auto many = pick_generic_points(3, 5, 7);
    CHECK_NOTHROW(validate_points(many));
    for (const auto& p : many) {
        CHECK(p.t != 0);
        CHECK(p.s != 0);
        CHECK(p.t.get_num() <= 1009);
        CHECK(p.t.get_den() <= 1009);
        CHECK(p.s.get_num() <= 1009);
        CHECK(p.s.get_den() <= 1009);
    }
}

TEST_CASE("h0 on the blow-up") {
    HirzebruchSurface f0(0);
    auto pts = pick_generic_points(0, 1, 42);
    BlownSurface x = BlownSurface::at_points(f0, pts);

    CHECK(h0_blowup(x, DivisorClass(2, 2, {Int(1)})) == 8);
    CHECK(h0_blowup(x, DivisorClass(2, 2, {Int(0)})) == 9);
    CHECK(h0_blowup(x, DivisorClass(4, 7, {Int(1)})) == 39);

    BlownSurface no_pts = BlownSurface::generic(f0, 1);
    CHECK_THROWS_AS(h0_blowup(no_pts, DivisorClass(2, 2, {Int(1)})), std::invalid_argument);
    CHECK_THROWS_AS(BlownSurface::at_points(f0, {pts[0], pts[0]}), std::invalid_argument);
}

TEST_CASE("constraint rank is stable across seeds") {
    for (long n = 0; n <= 2; ++n)
        for (long delta = 1; delta <= 3; ++delta) {
            DivisorClass d = DivisorClass::uniform(3, 3 * n + 4, delta, 1);
            HirzebruchSurface f(n);
            Int first = h0_blowup(BlownSurface::at_points(f, pick_generic_points(n, delta, 11)), d);
            Int second = h0_blowup(BlownSurface::at_points(f, pick_generic_points(n, delta, 12)), d);
            CHECK(first == second);
        }
}

TEST_CASE("order-2 vanishing under the jet-ample hypothesis") {
    // each order-2 point imposes three independent conditions
    for (long n = 0; n <= 2; ++n)
        for (long delta = 1; delta <= 2; ++delta) {
            long a = delta + 2;
            long b_long = (a - 1) * n + delta + 2;
            REQUIRE(jet_ample_F(n, a, b_long, delta).jet_ample);
            DivisorClass twist(2 * a - 4, 2 * b_long - 2 * n - 4);
            HirzebruchSurface f(n);
            BlownSurface x = BlownSurface::at_points(f, pick_generic_points(n, delta, 5));
            Int expected = h_line(f, twist).h0 - 3 * delta;
            DivisorClass on_x(twist.a, twist.b,
                              std::vector<Int>(static_cast<std::size_t>(delta), Int(2)));
            CHECK(h0_blowup(x, on_x) == expected);
        }
}

TEST_CASE("section bases match the kernel dimension") {
    HirzebruchSurface f0(0);

    // product basis: simple points on distinct fibers
    for (long delta = 1; delta <= 3; ++delta) {
        auto pts = pick_generic_points(0, delta, 31);
        DivisorClass d = DivisorClass::uniform(3, 4, delta, 1);
        SectionBasis basis = section_basis(f0, d, pts);
        CHECK(Int(basis.size()) == h0_blowup(BlownSurface::at_points(f0, pts), d));
    }

    // elimination fallback: an order-2 point
    auto pts = pick_generic_points(0, 1, 77);
    DivisorClass d2(2, 2, {Int(2)});
    SectionBasis fallback = section_basis(f0, d2, pts);
    CHECK(fallback.size() == 6);

    // no points at all: the monomials themselves
    SectionBasis plain = section_basis(f0, DivisorClass(1, 1), {});
    CHECK(plain.size() == 4);
}

TEST_CASE("section basis on a twisted base") {
    HirzebruchSurface f2(2);
    auto pts = pick_generic_points(2, 2, 13);
    DivisorClass d = DivisorClass::uniform(2, 7, 2, 1);
    SectionBasis basis = section_basis(f2, d, pts);
    CHECK(Int(basis.size()) == h0_blowup(BlownSurface::at_points(f2, pts), d));
}
