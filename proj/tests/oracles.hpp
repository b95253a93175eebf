// Independent reference computations for the tests. Nothing here calls the library's
// combinatorics or series code; only mpq_class arithmetic and plain loops.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Series = std::vector<Q>;  // dense, index = degree

inline Q q(std::int64_t n, std::int64_t d = 1) {
    Q r(static_cast<long>(n), static_cast<unsigned long>(d));
    r.canonicalize();
    return r;
}

inline Q rising(const Q& a, std::int64_t n) {
    Q r = 1;
    for (std::int64_t i = 0; i < n; ++i) r *= a + i;
    return r;
}

inline Q fact(std::int64_t n) {
    Q r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

/// a(a-1)...(a-k+1)/k!: the falling-factorial binomial, valid for every integer a.
inline Q binom(std::int64_t a, std::int64_t k) {
    if (k < 0) return 0;
    Q r = 1;
    for (std::int64_t i = 0; i < k; ++i) r *= Q(a - i);
    return r / fact(k);
}

inline Q power(const Q& b, std::int64_t e) {
    Q r = 1;
    if (e >= 0) {
        for (std::int64_t i = 0; i < e; ++i) r *= b;
    } else {
        for (std::int64_t i = 0; i < -e; ++i) r /= b;
    }
    return r;
}

inline Series mul(const Series& a, const Series& b) {
    Series c(a.size(), Q(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

/// (1 + c mu)^e up to mu^cap, by repeated products with (1 + c mu) or with its geometric
/// inverse sum (-c)^k mu^k.
inline Series linear_power(std::int64_t c, std::int64_t e, std::size_t cap) {
    Series one(cap + 1, Q(0));
    one[0] = 1;
    Series factor(cap + 1, Q(0));
    if (e >= 0) {
        factor[0] = 1;
        if (cap >= 1) factor[1] = c;
    } else {
        Q t = 1;
        for (std::size_t k = 0; k <= cap; ++k) {
            factor[k] = t;
            t *= -c;
        }
    }
    Series r = one;
    for (std::int64_t i = 0; i < (e >= 0 ? e : -e); ++i) r = mul(r, factor);
    return r;
}

/// Coefficients of (1+2mu)^{-ns1} (1+mu)^{-ns2}.
inline Series segre(std::int64_t ns1, std::int64_t ns2, std::size_t imax) {
    return mul(linear_power(2, -ns1, imax), linear_power(1, -ns2, imax));
}

/// Coefficient of mu^d in (1+2mu)^{delta_p - ns1} (1+mu)^{-ns2}: the link constant.
inline Q link_constant(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p, std::int64_t d) {
    auto s = mul(linear_power(2, delta_p - ns1, static_cast<std::size_t>(d)),
                 linear_power(1, -ns2, static_cast<std::size_t>(d)));
    return s[static_cast<std::size_t>(d)];
}

/// Power form in (x-1)/2 with Gamma ratios written as rising factorials; polynomial in a, b
/// and free of the binomial expansion the library uses. Includes the usual normalization.
inline Q jacobi(std::int64_t a, std::int64_t b, std::int64_t n, const Q& x) {
    Q sum = 0;
    const Q y = (x - 1) / 2;
    for (std::int64_t m = 0; m <= n; ++m)
        sum += binom(n, m) * rising(Q(a + m + 1), n - m) * rising(Q(a + b + n + 1), m) *
               power(y, m);
    return sum / fact(n);
}

/// sum_k (-n)_k (b)_k / ((c)_k k!) x^k; caller guarantees (c)_k != 0.
inline Q hypergeom(std::int64_t n, const Q& b, const Q& c, const Q& x) {
    Q sum = 0;
    for (std::int64_t k = 0; k <= n; ++k)
        sum += rising(Q(-n), k) * rising(b, k) / (rising(c, k) * fact(k)) * power(x, k);
    return sum;
}

inline bool hypergeom_defined(std::int64_t n, const Q& c) {
    for (std::int64_t k = 0; k < n; ++k)
        if (c + k == 0) return false;
    return true;
}

/// u^T G v over int64.
inline std::int64_t dot(const std::vector<std::vector<std::int64_t>>& g,
                        const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += u[i] * g[i][j] * v[j];
    return s;
}

inline Q dot(const std::vector<std::vector<std::int64_t>>& g, const std::vector<std::int64_t>& u,
             const std::vector<Q>& v) {
    Q s = 0;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) s += Q(u[i] * g[i][j]) * v[j];
    return s;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace oracle
