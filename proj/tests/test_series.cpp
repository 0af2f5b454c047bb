#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mrat/series.hpp"
#include "mrat/updown.hpp"

using namespace mrat;

namespace {

RationalSeries exp_series(int order) {
    RationalSeries s(order);
    for (int k = 0; k <= order; ++k) s.set_coeff(k, Rat(1, factorial(k)));
    return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
    RationalSeries one(6);
    one.set_coeff(0, 1);
    auto e = exp_series(6);
    CHECK(e * e.reciprocal() == one);
    CHECK(e - e == RationalSeries(6));
    CHECK(e.shifted(2).coeff(2) == 1);
    CHECK(e.shifted(2).coeff(1) == 0);
    CHECK(e.scaled(Rat(1, 2)).coeff(0) == Rat(1, 2));
    CHECK_THROWS_AS(e + RationalSeries(4), std::invalid_argument);
    CHECK_THROWS_AS(RationalSeries(4).reciprocal(), std::domain_error);
}

TEST_CASE("residue-class exponential pieces") {
    const int N = 12;
    auto p0 = exp_section(0, N), p1 = exp_section(1, N), p2 = exp_section(2, N), p3 = exp_section(3, N);
    // they partition exp by residue of the exponent mod 4
    CHECK(p0 + p1 + p2 + p3 == exp_series(N));
    CHECK(p0.coeff(0) == 1);
    CHECK(p0.coeff(4) == Rat(1, 24));
    CHECK(p1.coeff(1) == 1);
    CHECK(p1.coeff(5) == Rat(1, 120));
    CHECK(p2.coeff(2) == Rat(1, 2));
    CHECK(p3.coeff(3) == Rat(1, 6));
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k <= N; ++k)
            if (k % 4 != j) CHECK(exp_section(j, N).coeff(k) == 0);
    CHECK_THROWS_AS(exp_section(4, N), std::invalid_argument);
}

TEST_CASE("path generating series") {
    const int N = 20;
    auto fp = fp_series(N);
    // odd coefficients vanish
    for (int k = 1; k <= N; k += 2) CHECK(fp.coeff(k) == 0);
    // coefficient of x^{2n}/(2n)! is #(P_n)
    CHECK(fp.coeff(4) * factorial(4) == 2);
    CHECK(fp.coeff(6) * factorial(6) == 18);
    CHECK(fp.coeff(8) * factorial(8) == 284);
    for (int n = 1; n <= N / 2; ++n)
        CHECK(fp.coeff(2 * n) * factorial(2 * n) == sharp_path(n));
}

TEST_CASE("2up-2down generating series match the determinant values") {
    const int N = 24;
    auto a1 = a_series(1, N);
    auto a3 = a_series(3, N);
    for (int k = 1; k <= N; k += 2) {
        const auto& s = (k % 4 == 1) ? a1 : a3;
        CHECK(s.coeff(k) * factorial(k) == two_up_two_down(k));
    }
    CHECK_THROWS_AS(a_series(2, N), std::invalid_argument);
}

TEST_CASE("sec + tan identity and coefficients") {
    const int N = 12;
    auto st = sec_tan_series(N);
    // (sec t + tan t)(1 - sin t) = cos t
    RationalSeries sin_s(N), cos_s(N), one(N);
    one.set_coeff(0, 1);
    for (int k = 0; k <= N; ++k) {
        if (k % 2 == 1) sin_s.set_coeff(k, Rat((k % 4 == 1) ? 1 : -1, factorial(k)));
        else cos_s.set_coeff(k, Rat((k % 4 == 0) ? 1 : -1, factorial(k)));
    }
    CHECK(st * (one - sin_s) == cos_s);
    for (int k = 0; k <= N; ++k)
        CHECK(st.coeff(k) * factorial(k) == euler_bernoulli(k));
}

TEST_CASE("growth constant") {
    auto g = gamma_root();
    CHECK(g > Real50("1.8750"));
    CHECK(g < Real50("1.8752"));
    // residual of cos z cosh z + 1 at the root
    Real50 residual = cos(g) * cosh(g) + 1;
    CHECK(abs(residual) < Real50("1e-10"));
    // leading digits
    CHECK(abs(g - Real50("1.87510407")) < Real50("1e-8"));
}

TEST_CASE("successive asymptotic ratios settle toward 1") {
    std::vector<Real50> r;
    for (int n = 2; n <= 9; ++n) r.push_back(asymptotic_ratio(n));
    // r_n stays in a fixed bounded interval
    for (const auto& v : r) {
        CHECK(v > Real50("0.1"));
        CHECK(v < Real50("10"));
    }
    // |r_{n+1}/r_n - 1| decreases for n = 3..8
    Real50 prev_dev = -1;
    for (size_t i = 1; i + 1 < r.size(); ++i) {
        Real50 dev = abs(r[i + 1] / r[i] - 1);
        if (i > 1) CHECK(dev < prev_dev);
        prev_dev = dev;
    }
}

TEST_CASE("reference Hurwitz counts") {
    CHECK(hurwitz_reference(3, HurwitzKind::polynomial) == 1);
    CHECK(hurwitz_reference(4, HurwitzKind::polynomial) == 4);
    CHECK(hurwitz_reference(4, HurwitzKind::rational) == 120);
    CHECK(hurwitz_reference(5, HurwitzKind::polynomial) == 25);
    CHECK_THROWS_AS(hurwitz_reference(2, HurwitzKind::polynomial), std::invalid_argument);
}
