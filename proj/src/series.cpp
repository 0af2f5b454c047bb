#include "mrat/series.hpp"

#include <stdexcept>

#include "mrat/updown.hpp"

namespace mrat {

RationalSeries::RationalSeries(int order) : c_(order + 1) {
    if (order < 0) throw std::invalid_argument("truncation order must be >= 0");
}

RationalSeries::RationalSeries(int order, std::vector<Rat> coeffs) : RationalSeries(order) {
    if (static_cast<int>(coeffs.size()) > order + 1)
        throw std::invalid_argument("too many coefficients");
    std::copy(coeffs.begin(), coeffs.end(), c_.begin());
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("order mismatch");
    RationalSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("order mismatch");
    RationalSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("order mismatch");
    RationalSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= order(); ++j) {
            if (o.c_[j] == 0) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    return r;
}

RationalSeries RationalSeries::reciprocal() const {
    if (c_[0] == 0) throw std::domain_error("constant term not invertible");
    RationalSeries r(order());
    r.c_[0] = Rat(1) / c_[0];
    for (int k = 1; k <= order(); ++k) {
        Rat acc = 0;
        for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
        r.c_[k] = -acc / c_[0];
    }
    return r;
}

RationalSeries RationalSeries::shifted(int k) const {
    RationalSeries r(order());
    for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
    return r;
}

RationalSeries RationalSeries::scaled(const Rat& f) const {
    RationalSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] * f;
    return r;
}

RationalSeries exp_section(int j, int order) {
    if (j < 0 || j > 3) throw std::invalid_argument("exp_section index must be 0..3");
    RationalSeries r(order);
    for (int k = j; k <= order; k += 4) r.set_coeff(k, Rat(1) / Rat(factorial(k)));
    return r;
}

namespace {

RationalSeries exp_section_denominator(int order) {
    auto p0 = exp_section(0, order), p1 = exp_section(1, order), p3 = exp_section(3, order);
    return p0 * p0 - p1 * p3;
}

}  // namespace

RationalSeries fp_series(int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    auto p0 = exp_section(0, order), p1 = exp_section(1, order);
    auto p2 = exp_section(2, order), p3 = exp_section(3, order);
    auto num = p0 * p1 - p2 * p3 + p3;
    auto f = num / exp_section_denominator(order);
    return f.shifted(1).scaled(Rat(1, 2));
}

RationalSeries a_series(int residue, int order) {
    auto p0 = exp_section(0, order), p1 = exp_section(1, order);
    auto p2 = exp_section(2, order), p3 = exp_section(3, order);
    if (residue == 1) return (p0 * p1 - p2 * p3) / exp_section_denominator(order);
    if (residue == 3) return p3 / exp_section_denominator(order);
    throw std::invalid_argument("residue must be 1 or 3");
}

RationalSeries sec_tan_series(int order) {
    RationalSeries cos(order), sin(order), one(order);
    one.set_coeff(0, 1);
    for (int k = 0; k <= order; ++k) {
        Rat c = Rat((k / 2) % 2 == 0 ? 1 : -1) / Rat(factorial(k));
        if (k % 2 == 0)
            cos.set_coeff(k, c);
        else
            sin.set_coeff(k, c);
    }
    return (one + sin) / cos;  // sec + tan = (1 + sin)/cos
}

namespace {

Real50 gamma_f(const Real50& z) { return cos(z) * cosh(z) + 1; }
Real50 gamma_df(const Real50& z) { return -sin(z) * cosh(z) + cos(z) * sinh(z); }

}  // namespace

Real50 gamma_root() {
    Real50 lo = Real50("1.8"), hi = Real50("1.9");
    if (gamma_f(lo) * gamma_f(hi) >= 0) throw std::logic_error("root bracket failed");
    for (int i = 0; i < 120; ++i) {
        Real50 mid = (lo + hi) / 2;
        if (gamma_f(lo) * gamma_f(mid) <= 0)
            hi = mid;
        else
            lo = mid;
    }
    Real50 z = (lo + hi) / 2;
    for (int i = 0; i < 8; ++i) z -= gamma_f(z) / gamma_df(z);
    return z;
}

Real50 asymptotic_ratio(int n) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    Real50 g = gamma_root();
    Real50 num = Real50(sharp_path(n).str()) * pow(g, 2 * n);
    Real50 den = Real50(n) * Real50(factorial(2 * n - 1).str());
    return num / den;
}

Int hurwitz_reference(int n, HurwitzKind kind) {
    if (n < 3) throw std::invalid_argument("hurwitz reference needs n >= 3");
    Int base = 1;
    for (int i = 0; i < n - 3; ++i) base *= n;
    if (kind == HurwitzKind::polynomial) return base;
    return base * factorial(2 * n - 2) / factorial(n);
}

}  // namespace mrat
