#include "monopole/combinatorics.hpp"

#include "monopole/error.hpp"

namespace monopole {

Rational pochhammer(const Rational& a, std::uint64_t n) {
    Rational r(1);
    Rational f = a;
    for (std::uint64_t i = 0; i < n; ++i) {
        r *= f;
        f += 1;
    }
    return r;
}

Integer factorial(std::uint64_t n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Rational gen_binomial(const Rational& a, std::uint64_t k) {
    Rational r = pochhammer(-a, k) / Rational(factorial(k));
    return (k % 2 == 0) ? r : Rational(-r);
}

Rational gen_binomial(std::int64_t a, std::uint64_t k) {
    return gen_binomial(make_rational(a), k);
}

Rational jacobi_standard(const JacobiParams& p) {
    const auto n = static_cast<std::int64_t>(p.n);
    Rational sum(0);
    for (std::int64_t k = 0; k <= n; ++k) {
        Rational t = gen_binomial(p.a + n, static_cast<std::uint64_t>(n - k)) *
                     gen_binomial(n + p.b, static_cast<std::uint64_t>(k));
        if (t == 0) continue;
        sum += t * pow(p.xi - 1, k) * pow(p.xi + 1, n - k);
    }
    return sum * pow2(-n);
}

Rational hypergeom_terminating(std::uint64_t neg_n, const Rational& b, const Rational& c,
                               const Rational& xi) {
    Rational sum(0);
    Rational term(1);  // (-n)_k (b)_k / ((c)_k k!) xi^k, built incrementally
    const Rational mn = -make_rational(static_cast<std::int64_t>(neg_n));
    for (std::uint64_t k = 0; k <= neg_n; ++k) {
        if (k > 0) {
            const Rational ck = c + make_rational(static_cast<std::int64_t>(k - 1));
            if (ck == 0) throw DegenerateParameter(k);
            term *= (mn + make_rational(static_cast<std::int64_t>(k - 1))) *
                    (b + make_rational(static_cast<std::int64_t>(k - 1))) * xi /
                    (ck * make_rational(static_cast<std::int64_t>(k)));
        }
        sum += term;
    }
    return sum;
}

Rational link_constant_direct(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p,
                              std::uint64_t d) {
    Rational sum(0);
    for (std::uint64_t u = 0; u <= d; ++u)
        sum += pow2(static_cast<std::int64_t>(u)) * gen_binomial(-ns2, d - u) *
               gen_binomial(delta_p - ns1, u);
    return sum;
}

Rational link_constant_double_sum(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p,
                                  std::uint64_t d) {
    Rational sum(0);
    for (std::uint64_t i = 0; i <= d; ++i)
        for (std::uint64_t j = 0; i + j <= d; ++j)
            sum += pow2(static_cast<std::int64_t>(i + j)) * gen_binomial(delta_p, i) *
                   gen_binomial(-ns1, j) * gen_binomial(-ns2, d - i - j);
    return sum;
}

Rational link_constant_closed(std::int64_t ns2, std::int64_t ns1, std::int64_t delta_p,
                              std::uint64_t d) {
    const auto dd = static_cast<std::int64_t>(d);
    JacobiParams p{ns2 + ns1 - delta_p - 1, delta_p - ns1 - dd, d, Rational(0)};
    return pow(Rational(-2), dd) * jacobi_standard(p);
}

Rational jacobi_constant(std::int64_t deg_z, std::int64_t delta_c, std::int64_t d_a,
                         std::int64_t d_s, std::int64_t delta1, std::int64_t chi_plus_sigma) {
    if (d_s < delta1 || (d_s - delta1) % 2 != 0)
        throw HypothesisError("C needs d_s - delta1 even and nonnegative");
    const std::int64_t d = (d_s - delta1) / 2;
    const std::int64_t twice_b_num = 2 * (deg_z - d_a - d_s) - chi_plus_sigma;  // 4b
    if (twice_b_num % 4 != 0)
        throw HypothesisError("Jacobi parameter b = (deg z - d_a - d_s)/2 - (chi+sigma)/4 is not an integer");
    JacobiParams p{delta_c - d, twice_b_num / 4, static_cast<std::uint64_t>(d), Rational(0)};
    return pow(Rational(-2), d) * jacobi_standard(p);
}

Rational h_constant_literal(std::int64_t a, std::int64_t b, std::uint64_t d) {
    const auto dd = static_cast<std::int64_t>(d);
    Rational sum(0);
    for (std::int64_t u = 0; u <= dd; ++u) {
        Rational t = gen_binomial(a + dd, static_cast<std::uint64_t>(dd - u)) *
                     gen_binomial(b + dd, static_cast<std::uint64_t>(u));
        sum += (u % 2 == 0) ? t : Rational(-t);
    }
    return pow2(dd) * sum;
}

}  // namespace monopole
