#include "plap/tridiag.hpp"

#include <cmath>
#include <utility>

namespace plap::tridiag {

bool solve_spd(std::span<const double> diag, std::span<const double> off, std::span<const double> rhs,
               std::span<double> x) {
    const std::size_t n = diag.size();
    std::vector<double> d(n), l(n > 0 ? n - 1 : 0);
    d[0] = diag[0];
    if (!(d[0] > 0.0)) return false;
    for (std::size_t i = 1; i < n; ++i) {
        l[i - 1] = off[i - 1] / d[i - 1];
        d[i] = diag[i] - l[i - 1] * off[i - 1];
        if (!(d[i] > 0.0)) return false;
    }
    // L y = rhs, D z = y, L^T x = z
    x[0] = rhs[0];
    for (std::size_t i = 1; i < n; ++i) x[i] = rhs[i] - l[i - 1] * x[i - 1];
    for (std::size_t i = 0; i < n; ++i) x[i] /= d[i];
    for (std::size_t i = n - 1; i-- > 0;) x[i] -= l[i] * x[i + 1];
    return true;
}

bool solve_general(std::span<const double> sub, std::span<const double> diag, std::span<const double> super,
                   std::span<const double> rhs, std::span<double> x) {
    const std::size_t n = diag.size();
    std::vector<double> dl(sub.begin(), sub.end()), d(diag.begin(), diag.end()), du(super.begin(), super.end());
    std::vector<double> b(rhs.begin(), rhs.end());
    if (n == 1) {
        if (d[0] == 0.0) return false;
        x[0] = b[0] / d[0];
        return std::isfinite(x[0]);
    }
    // Same elimination order as LAPACK dgtsv; dl is reused for the second
    // super-diagonal created by row interchanges.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const bool last = i + 2 == n;
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) return false;
            const double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            dl[i] = 0.0;
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            const double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (!last) {
                dl[i] = du[i + 1];
                du[i + 1] = -fact * dl[i];
            } else {
                dl[i] = 0.0;
            }
            du[i] = temp;
            const double bt = b[i];
            b[i] = b[i + 1];
            b[i + 1] = bt - fact * b[i + 1];
        }
    }
    if (d[n - 1] == 0.0) return false;
    x[n - 1] = b[n - 1] / d[n - 1];
    x[n - 2] = (b[n - 2] - du[n - 2] * x[n - 1]) / d[n - 2];
    for (std::size_t i = n - 2; i-- > 0;) x[i] = (b[i] - du[i] * x[i + 1] - dl[i] * x[i + 2]) / d[i];
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(x[i])) return false;
    }
    return true;
}

}  // namespace plap::tridiag
