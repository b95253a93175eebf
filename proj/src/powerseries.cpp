#include "monopole/powerseries.hpp"

#include "monopole/combinatorics.hpp"
#include "monopole/error.hpp"

#include <charconv>
#include <numeric>

namespace monopole {

std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

std::string exponent_key(const Exponents& e) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(e[i]);
    }
    return s;
}

Exponents parse_exponent_key(const std::string& key, std::size_t num_vars) {
    Exponents e;
    const char* p = key.data();
    const char* end = p + key.size();
    while (p <= end && !key.empty()) {
        std::uint32_t v = 0;
        auto [q, ec] = std::from_chars(p, end, v);
        if (ec != std::errc()) throw InputError("bad exponent key \"" + key + "\"");
        e.push_back(v);
        if (q == end) break;
        if (*q != ',') throw InputError("bad exponent key \"" + key + "\"");
        p = q + 1;
    }
    if (e.size() != num_vars)
        throw InputError("exponent key \"" + key + "\" has " + std::to_string(e.size()) +
                         " entries, expected " + std::to_string(num_vars));
    return e;
}

TruncatedMultiPoly::TruncatedMultiPoly(std::size_t num_vars, std::uint32_t cap)
    : num_vars_(num_vars), cap_(cap) {}

TruncatedMultiPoly TruncatedMultiPoly::constant(std::size_t num_vars, std::uint32_t cap,
                                                const Rational& c) {
    TruncatedMultiPoly p(num_vars, cap);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::variable(std::size_t num_vars, std::uint32_t cap,
                                                std::size_t i) {
    TruncatedMultiPoly p(num_vars, cap);
    Exponents e(num_vars, 0);
    e.at(i) = 1;
    p.add_term(e, Rational(1));
    return p;
}

TruncatedMultiPoly TruncatedMultiPoly::linear(std::uint32_t cap, std::span<const Rational> coeffs) {
    TruncatedMultiPoly p(coeffs.size(), cap);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponents e(coeffs.size(), 0);
        e[i] = 1;
        p.add_term(e, coeffs[i]);
    }
    return p;
}

Rational TruncatedMultiPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedMultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != num_vars_) throw InputError("exponent vector has wrong length");
    if (c == 0 || total_degree(e) > cap_) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TruncatedMultiPoly TruncatedMultiPoly::homogeneous_part(std::uint32_t k) const {
    TruncatedMultiPoly p(num_vars_, cap_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == k) p.terms_.emplace(e, c);
    return p;
}

std::uint32_t TruncatedMultiPoly::lowest_degree() const {
    std::uint64_t low = std::uint64_t{cap_} + 1;
    for (const auto& [e, c] : terms_) low = std::min(low, total_degree(e));
    return static_cast<std::uint32_t>(low);
}

TruncatedMultiPoly TruncatedMultiPoly::recapped(std::uint32_t cap) const {
    TruncatedMultiPoly p(num_vars_, cap);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) <= cap) p.terms_.emplace(e, c);
    return p;
}

Rational TruncatedMultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) throw InputError("evaluation point has wrong length");
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < num_vars_ && t != 0; ++i)
            if (e[i]) t *= pow(point[i], e[i]);
        sum += t;
    }
    return sum;
}

void TruncatedMultiPoly::check_shape(const TruncatedMultiPoly& q) const {
    if (q.num_vars_ != num_vars_ || q.cap_ != cap_)
        throw InputError("polynomial shape mismatch (num_vars/cap)");
}

TruncatedMultiPoly& TruncatedMultiPoly::operator+=(const TruncatedMultiPoly& q) {
    check_shape(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator-=(const TruncatedMultiPoly& q) {
    check_shape(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

TruncatedMultiPoly& TruncatedMultiPoly::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

TruncatedMultiPoly operator+(TruncatedMultiPoly p, const TruncatedMultiPoly& q) { return p += q; }
TruncatedMultiPoly operator-(TruncatedMultiPoly p, const TruncatedMultiPoly& q) { return p -= q; }
TruncatedMultiPoly operator-(TruncatedMultiPoly p) { return p *= Rational(-1); }
TruncatedMultiPoly operator*(TruncatedMultiPoly p, const Rational& s) { return p *= s; }
TruncatedMultiPoly operator*(const Rational& s, TruncatedMultiPoly p) { return p *= s; }

TruncatedMultiPoly poly_mul(const TruncatedMultiPoly& p, const TruncatedMultiPoly& q) {
    if (p.num_vars() != q.num_vars() || p.cap() != q.cap())
        throw InputError("polynomial shape mismatch (num_vars/cap)");
    TruncatedMultiPoly r(p.num_vars(), p.cap());
    Exponents e(p.num_vars());
    for (const auto& [ea, ca] : p.terms()) {
        const auto da = total_degree(ea);
        for (const auto& [eb, cb] : q.terms()) {
            if (da + total_degree(eb) > p.cap()) continue;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

TruncatedMultiPoly poly_pow(const TruncatedMultiPoly& p, std::uint32_t n) {
    TruncatedMultiPoly r = TruncatedMultiPoly::constant(p.num_vars(), p.cap(), Rational(1));
    for (std::uint32_t i = 0; i < n; ++i) r = poly_mul(r, p);
    return r;
}

TruncatedMultiPoly poly_exp(const TruncatedMultiPoly& p) {
    if (p.coefficient(Exponents(p.num_vars(), 0)) != 0)
        throw InputError("poly_exp needs a zero constant term");
    TruncatedMultiPoly sum = TruncatedMultiPoly::constant(p.num_vars(), p.cap(), Rational(1));
    TruncatedMultiPoly term = sum;
    for (std::uint32_t n = 1; n <= p.cap(); ++n) {
        term = poly_mul(term, p) * Rational(1, n);
        if (term.is_zero()) break;
        sum += term;
    }
    return sum;
}

TruncatedUniSeries::TruncatedUniSeries(std::uint32_t cap) : cap_(cap), coeffs_(cap + 1) {}

TruncatedUniSeries::TruncatedUniSeries(std::uint32_t cap, std::vector<Rational> coeffs)
    : cap_(cap), coeffs_(std::move(coeffs)) {
    coeffs_.resize(cap + 1);
}

TruncatedUniSeries series_mul(const TruncatedUniSeries& s, const TruncatedUniSeries& t) {
    if (s.cap() != t.cap()) throw InputError("series cap mismatch");
    TruncatedUniSeries r(s.cap());
    for (std::uint32_t i = 0; i <= s.cap(); ++i) {
        if (s[i] == 0) continue;
        for (std::uint32_t j = 0; i + j <= s.cap(); ++j) r[i + j] += s[i] * t[j];
    }
    return r;
}

TruncatedUniSeries series_inverse(const TruncatedUniSeries& s) {
    if (s[0] != 1) throw InputError("series_inverse needs constant coefficient 1");
    TruncatedUniSeries t(s.cap());
    t[0] = 1;
    for (std::uint32_t n = 1; n <= s.cap(); ++n) {
        Rational acc(0);
        for (std::uint32_t k = 1; k <= n; ++k) acc += s[k] * t[n - k];
        t[n] = -acc;
    }
    return t;
}

TruncatedUniSeries series_pow(const TruncatedUniSeries& s, std::int64_t n) {
    TruncatedUniSeries base = n < 0 ? series_inverse(s) : s;
    TruncatedUniSeries r(s.cap());
    r[0] = 1;
    for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) r = series_mul(r, base);
    return r;
}

Rational segre_closed_form(std::int64_t ns1, std::int64_t ns2, std::uint32_t i,
                           SegreSumStart start) {
    Rational sum(0);
    for (std::uint32_t j = (start == SegreSumStart::FromZero ? 0 : 1); j <= i; ++j)
        sum += pow2(j) * gen_binomial(-ns1, j) * gen_binomial(-ns2, i - j);
    return sum;
}

TruncatedUniSeries segre_by_inversion(std::int64_t ns1, std::int64_t ns2, std::uint32_t imax) {
    TruncatedUniSeries one_plus_2mu(imax, {Rational(1), Rational(2)});
    TruncatedUniSeries one_plus_mu(imax, {Rational(1), Rational(1)});
    TruncatedUniSeries chern = series_mul(series_pow(one_plus_2mu, ns1), series_pow(one_plus_mu, ns2));
    return series_inverse(chern);
}

std::vector<Rational> segre_classes(std::int64_t ns1, std::int64_t ns2, std::uint32_t imax,
                                    SegreSumStart start) {
    std::vector<Rational> s(imax + 1);
    for (std::uint32_t i = 0; i <= imax; ++i) s[i] = segre_closed_form(ns1, ns2, i, start);
    const TruncatedUniSeries oracle = segre_by_inversion(ns1, ns2, imax);
    for (std::uint32_t i = 0; i <= imax; ++i)
        if (s[i] != oracle[i])
            throw OracleMismatch("Segre class s_" + std::to_string(i) + " at (ns1=" +
                                 std::to_string(ns1) + ", ns2=" + std::to_string(ns2) +
                                 "): closed form " + to_string(s[i]) + ", inversion " +
                                 to_string(oracle[i]));
    return s;
}

}  // namespace monopole
