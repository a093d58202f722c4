// Truncated complex power series arithmetic.
#pragma once

#include <complex>
#include <vector>

namespace mmrad {

using cplx = std::complex<double>;

// Order used when a caller passes order <= 0.
inline constexpr int kDefaultOrder = 64;
// Hard ceiling for tail-driven escalation.
inline constexpr int kMaxOrder = 512;
// Tail indicator threshold for evaluation at |z| = 1.
inline constexpr double kTailTol = 1e-10;

// Polynomial c[0] + c[1] z + ... + c[N] z^N standing in for an analytic
// function truncated at order N. Binary operations truncate to the smaller
// operand order.
class PowerSeries {
  public:
    PowerSeries() : c_(1, 0.0) {}
    explicit PowerSeries(int order) : c_(static_cast<size_t>(order) + 1, 0.0) {}
    explicit PowerSeries(std::vector<cplx> coeffs);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const cplx& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    cplx& operator[](int n) { return c_[static_cast<size_t>(n)]; }
    const std::vector<cplx>& coeffs() const { return c_; }

    PowerSeries truncated(int order) const;

    // Horner evaluation of the truncated polynomial.
    cplx eval(cplx z) const;

    // Conservative truncation indicator at radius r: |c_N| r^N N.
    double tail_indicator(double r) const;

    PowerSeries operator+(const PowerSeries& b) const;
    PowerSeries operator-(const PowerSeries& b) const;
    PowerSeries operator*(const PowerSeries& b) const;  // Cauchy product
    PowerSeries operator/(const PowerSeries& b) const;  // requires b[0] != 0
    PowerSeries scaled(cplx s) const;

    // exp(a) for a with a[0] = 0, by d' = a' d recurrence.
    PowerSeries exp() const;

    // Principal square root for a series with a[0] = 1.
    PowerSeries sqrt() const;

    // For psi with psi[0] = 1: integral of (psi(t) - 1)/t from 0 to z,
    // i.e. sum_{n>=1} c_n z^n / n.
    PowerSeries integrate_kernel() const;

    PowerSeries derivative() const;

    // Multiply by z, keeping the same order (top coefficient drops off).
    PowerSeries shift_up() const;

    // this(inner(z)) for inner with inner[0] = 0, by Horner on series.
    PowerSeries compose(const PowerSeries& inner) const;

  private:
    std::vector<cplx> c_;
};

}  // namespace mmrad
