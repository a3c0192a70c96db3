#pragma once

// Reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

/// Cyclic Jacobi rotations on a dense symmetric matrix; returns sorted eigenvalues.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a)
{
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
    std::sort(out.begin(), out.end());
    return out;
}

/// H_n coefficients from the explicit sum n! sum_m (-1)^m (2y)^(n-2m) / (m! (n-2m)!).
inline std::vector<std::int64_t> hermite_explicit(int n)
{
    auto factorial = [](int k) {
        std::int64_t f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    std::vector<std::int64_t> c(static_cast<std::size_t>(n + 1), 0);
    for (int m = 0; 2 * m <= n; ++m) {
        const int power = n - 2 * m;
        const std::int64_t term = factorial(n) / (factorial(m) * factorial(power)) * (std::int64_t{1} << power);
        c[static_cast<std::size_t>(power)] = (m % 2 ? -term : term);
    }
    return c;
}

inline double poly_value(const std::vector<std::int64_t>& c, double y)
{
    double v = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * y + static_cast<double>(c[i]);
    return v;
}

/// Composite Simpson rule over [a, b] with an even number of panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels)
{
    if (panels % 2) ++panels;
    const double h = (b - a) / panels;
    double sum = f(a) + f(b);
    for (int i = 1; i < panels; ++i) sum += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return sum * h / 3.0;
}

/// |eps| for level n in sector s, printed with 12 significant digits.
inline std::string closed_form_eps(double a, double m, int n, int s)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%#.12g", std::sqrt(a * m * (n + (1 + s) / 2.0)));
    return buf;
}

}  // namespace oracle
