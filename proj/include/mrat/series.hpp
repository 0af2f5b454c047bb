#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <vector>

#include "mrat/bigint.hpp"

namespace mrat {

using Real50 = boost::multiprecision::cpp_bin_float_50;

// Truncated power series with exact rational coefficients c_0..c_N.
class RationalSeries {
public:
    explicit RationalSeries(int order);  // zero series
    RationalSeries(int order, std::vector<Rat> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int k) const { return c_.at(k); }
    void set_coeff(int k, Rat v) { c_.at(k) = std::move(v); }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;
    // requires an invertible constant term
    RationalSeries reciprocal() const;
    RationalSeries operator/(const RationalSeries& o) const { return *this * o.reciprocal(); }
    // multiply by x^k (coefficients shift, truncation preserved)
    RationalSeries shifted(int k) const;
    RationalSeries scaled(const Rat& f) const;

    bool operator==(const RationalSeries&) const = default;

private:
    std::vector<Rat> c_;
};

// phi_j(x) = sum_k x^{4k+j}/(4k+j)!, j = 0..3; they partition exp.
RationalSeries exp_section(int j, int order);

// F_P(x) = (x/2) (phi0 phi1 - phi2 phi3 + phi3) / (phi0^2 - phi1 phi3);
// coefficient of x^{2n}/(2n)! is #(P_n).
RationalSeries fp_series(int order);

// Generating series of A(4n+1) (residue 1) or A(4n+3) (residue 3).
RationalSeries a_series(int residue, int order);

// sec t + tan t, the EGF of the Euler-Bernoulli numbers.
RationalSeries sec_tan_series(int order);

// Smallest positive root of cos z cosh z + 1 = 0 (certified bracket
// bisection at 50-digit precision, then Newton polish).
Real50 gamma_root();

// r_n = #(P_n) gamma^{2n} / (n (2n-1)!); the ratios r_{n+1}/r_n approach 1.
Real50 asymptotic_ratio(int n);

enum class HurwitzKind { polynomial, rational };

// Reference Hurwitz counts: n^{n-3} and n^{n-3} (2n-2)!/n!.
Int hurwitz_reference(int n, HurwitzKind kind);

}  // namespace mrat
