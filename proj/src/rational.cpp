#include "monopole/rational.hpp"

#include "monopole/error.hpp"

#include <cctype>

namespace monopole {

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw InputError("zero denominator");
    Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

bool valid_integer_text(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

Integer integer_from(std::string_view s) {
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                           : text.substr(slash + 1);
    if (!valid_integer_text(num) || !valid_integer_text(den) || den[0] == '-' || den[0] == '+')
        throw InputError("not a rational \"p/q\": \"" + std::string(text) + "\"");
    Integer d = integer_from(den);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    Rational q(integer_from(num), d);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& base, std::int64_t e) {
    if (e < 0) {
        if (base == 0) throw InputError("negative power of zero");
        return pow(Rational(1) / base, -e);
    }
    Rational num, den;
    mpz_pow_ui(num.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(den.get_num_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    Rational r = num / den;
    return r;
}

Rational pow2(std::int64_t e) {
    Rational r(1);
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Rational& q, const char* what) {
    if (!is_integer(q)) throw InputError(std::string(what) + " is not an integer: " + to_string(q));
    if (!q.get_num().fits_slong_p()) throw InputError(std::string(what) + " does not fit in 64 bits");
    return q.get_num().get_si();
}

}  // namespace monopole
