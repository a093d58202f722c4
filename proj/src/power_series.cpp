#include "mmrad/power_series.hpp"

#include <algorithm>
#include <cmath>

#include "mmrad/errors.hpp"

namespace mmrad {

PowerSeries::PowerSeries(std::vector<cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, 0.0);
}

PowerSeries PowerSeries::truncated(int order) const {
    PowerSeries r(order);
    int m = std::min(order, this->order());
    for (int n = 0; n <= m; ++n) r[n] = c_[static_cast<size_t>(n)];
    return r;
}

cplx PowerSeries::eval(cplx z) const {
    cplx acc = 0.0;
    for (int n = order(); n >= 0; --n) acc = acc * z + c_[static_cast<size_t>(n)];
    return acc;
}

double PowerSeries::tail_indicator(double r) const {
    int n = order();
    return std::abs(c_.back()) * std::pow(r, n) * static_cast<double>(std::max(n, 1));
}

PowerSeries PowerSeries::operator+(const PowerSeries& b) const {
    int m = std::min(order(), b.order());
    PowerSeries r(m);
    for (int n = 0; n <= m; ++n) r[n] = (*this)[n] + b[n];
    return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& b) const {
    int m = std::min(order(), b.order());
    PowerSeries r(m);
    for (int n = 0; n <= m; ++n) r[n] = (*this)[n] - b[n];
    return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& b) const {
    int m = std::min(order(), b.order());
    PowerSeries r(m);
    for (int i = 0; i <= m; ++i) {
        if ((*this)[i] == cplx(0.0)) continue;
        for (int j = 0; i + j <= m; ++j) r[i + j] += (*this)[i] * b[j];
    }
    return r;
}

PowerSeries PowerSeries::operator/(const PowerSeries& b) const {
    if (std::abs(b[0]) < 1e-300) throw domain_error("series division by series with zero constant term");
    int m = std::min(order(), b.order());
    PowerSeries q(m);
    for (int n = 0; n <= m; ++n) {
        cplx s = (*this)[n];
        for (int k = 1; k <= n; ++k) s -= b[k] * q[n - k];
        q[n] = s / b[0];
    }
    return q;
}

PowerSeries PowerSeries::scaled(cplx s) const {
    PowerSeries r(order());
    for (int n = 0; n <= order(); ++n) r[n] = (*this)[n] * s;
    return r;
}

PowerSeries PowerSeries::exp() const {
    if (std::abs((*this)[0]) > 1e-14) throw domain_error("series exp requires zero constant term");
    int m = order();
    PowerSeries d(m);
    d[0] = 1.0;
    // d_n = (1/n) sum_{k=1..n} k a_k d_{n-k}
    for (int n = 1; n <= m; ++n) {
        cplx s = 0.0;
        for (int k = 1; k <= n; ++k) s += static_cast<double>(k) * (*this)[k] * d[n - k];
        d[n] = s / static_cast<double>(n);
    }
    return d;
}

PowerSeries PowerSeries::sqrt() const {
    if (std::abs((*this)[0] - cplx(1.0)) > 1e-14) throw domain_error("series sqrt requires constant term 1");
    int m = order();
    PowerSeries s(m);
    s[0] = 1.0;
    // s*s = this, solved coefficient by coefficient.
    for (int n = 1; n <= m; ++n) {
        cplx acc = (*this)[n];
        for (int k = 1; k <= n - 1; ++k) acc -= s[k] * s[n - k];
        s[n] = acc / 2.0;
    }
    return s;
}

PowerSeries PowerSeries::integrate_kernel() const {
    if (std::abs((*this)[0] - cplx(1.0)) > 1e-12)
        throw domain_error("kernel integration requires constant term 1");
    int m = order();
    PowerSeries r(m);
    for (int n = 1; n <= m; ++n) r[n] = (*this)[n] / static_cast<double>(n);
    return r;
}

PowerSeries PowerSeries::derivative() const {
    int m = order();
    PowerSeries r(std::max(m - 1, 0));
    for (int n = 1; n <= m; ++n) r[n - 1] = (*this)[n] * static_cast<double>(n);
    return r;
}

PowerSeries PowerSeries::shift_up() const {
    int m = order();
    PowerSeries r(m);
    for (int n = 1; n <= m; ++n) r[n] = (*this)[n - 1];
    return r;
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (std::abs(inner[0]) > 1e-14) throw domain_error("series composition requires inner constant term 0");
    int m = std::min(order(), inner.order());
    PowerSeries acc(m);
    PowerSeries in = inner.truncated(m);
    for (int n = order(); n >= 0; --n) {
        acc = acc * in;
        acc[0] += (*this)[n];
    }
    return acc;
}

}  // namespace mmrad
