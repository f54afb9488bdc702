#include "hirzewahl/divisors.hpp"

namespace hirzewahl {

namespace {

void check_length(const DivisorClass& d, long delta, const char* what) {
    if (static_cast<long>(d.m.size()) != delta)
        throw std::invalid_argument(std::string(what) + ": divisor does not live on this surface");
}

Int pairing(const DivisorClass& d1, const DivisorClass& d2, long n) {
    Int v = -d1.a * d2.a * n + d1.a * d2.b + d2.a * d1.b;
    for (std::size_t j = 0; j < d1.m.size(); ++j)
        v -= d1.m[j] * d2.m[j];
    return v;
}

}  // namespace

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
    if (x.m.size() != y.m.size())
        throw std::invalid_argument("divisor sum: mismatched exceptional parts");
    DivisorClass r(x.a + y.a, x.b + y.b, x.m);
    for (std::size_t j = 0; j < y.m.size(); ++j) r.m[j] += y.m[j];
    return r;
}

DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
    if (x.m.size() != y.m.size())
        throw std::invalid_argument("divisor difference: mismatched exceptional parts");
    DivisorClass r(x.a - y.a, x.b - y.b, x.m);
    for (std::size_t j = 0; j < y.m.size(); ++j) r.m[j] -= y.m[j];
    return r;
}

DivisorClass operator*(const Int& c, const DivisorClass& x) {
    DivisorClass r(c * x.a, c * x.b, x.m);
    for (auto& mj : r.m) mj *= c;
    return r;
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2, const HirzebruchSurface& s) {
    check_length(d1, 0, "intersect");
    check_length(d2, 0, "intersect");
    return pairing(d1, d2, s.n);
}

Int intersect(const DivisorClass& d1, const DivisorClass& d2, const BlownSurface& s) {
    check_length(d1, s.delta, "intersect");
    check_length(d2, s.delta, "intersect");
    return pairing(d1, d2, s.base.n);
}

DivisorClass canonical(const HirzebruchSurface& s) {
    return DivisorClass(-2, -(2 + s.n));
}

DivisorClass canonical(const BlownSurface& s) {
    // K_X = s^*K + E, so every exceptional multiplicity is -1
    return DivisorClass::uniform(-2, -(2 + s.base.n), s.delta, -1);
}

NodalClasses nodal_classes(long n, long a, long b, long delta) {
    if (a < 0 || b < 0) throw std::invalid_argument("nodal_classes: a, b must be >= 0");
    BlownSurface x = BlownSurface::generic(HirzebruchSurface(n), delta);
    DivisorClass pullback = DivisorClass::uniform(a, b, delta, 0);
    DivisorClass tilde = DivisorClass::uniform(a, b, delta, 2);
    DivisorClass k = canonical(x);
    return NodalClasses{x,
                        pullback,
                        tilde,
                        k,
                        k + tilde,
                        Int(2) * k + tilde,
                        Int(2) * (k + tilde)};
}

GenusPair genus(long n, long a, long b, long delta) {
    if (a < 0 || b < 0) throw std::invalid_argument("genus: a, b must be >= 0");
    Int ia(a), ib(b);
    Int g = 1 + ia * ib - ia - ib + half_exact(ia * n * (1 - ia));
    return GenusPair{g, g - delta};
}

}  // namespace hirzewahl
