#include "monopole/manifold.hpp"

#include "monopole/error.hpp"

#include <charconv>

namespace monopole {

std::string to_string(const SwKey& key) { return std::to_string(key.d) + ":" + key.theta_tag; }

SwKey parse_sw_key(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos || colon == 0)
        throw InputError("sw_higher key must look like \"d:theta_tag\", got \"" + std::string(text) + "\"");
    SwKey key;
    auto [p, ec] = std::from_chars(text.data(), text.data() + colon, key.d);
    if (ec != std::errc() || p != text.data() + colon || key.d < 0)
        throw InputError("sw_higher key has a bad degree: \"" + std::string(text) + "\"");
    key.theta_tag = std::string(text.substr(colon + 1));
    return key;
}

std::vector<CohClass> ManifoldData::basic_class_vectors() const {
    std::vector<CohClass> out;
    out.reserve(basic_classes.size());
    for (const auto& e : basic_classes) out.push_back(e.c1);
    return out;
}

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

}  // namespace

void validate(const ManifoldData& x) {
    if (x.b1 < 0) throw InputError("must be >= 0", "b1");
    if (x.b2_plus < 1) throw InputError("must be >= 1", "b2_plus");
    if (x.b2_minus < 0) throw InputError("must be >= 0", "b2_minus");
    if (static_cast<std::int64_t>(x.lattice.sig_plus()) != x.b2_plus ||
        static_cast<std::int64_t>(x.lattice.sig_minus()) != x.b2_minus)
        throw InputError("lattice signature does not match (b2_plus, b2_minus)", "gram");
    if (x.w2.size() != x.lattice.rank())
        throw InputError("length " + std::to_string(x.w2.size()) + " != rank " +
                             std::to_string(x.lattice.rank()),
                         "w2");
    if (!x.lattice.is_characteristic(x.w2))
        throw InputError("w2 is not characteristic for the intersection form", "w2");
    if (mod(x.chi_plus_sigma(), 2) != 0) throw InputError("chi + sigma must be even", "b1");
    if (x.b1 == 0 && x.b2_plus % 2 == 1 && mod(x.chi_plus_sigma(), 4) != 0)
        throw InputError("chi + sigma must be divisible by 4 when b1 = 0 and b2_plus is odd", "b2_plus");
    if (x.b1 > 0 && !x.h1_cup_trivial)
        throw InputError("b1 > 0 requires the cup product on H^1 to vanish", "h1_cup_trivial");

    const std::int64_t sigma = x.sigma();
    const std::int64_t two_chi_three_sigma = 2 * x.chi() + 3 * sigma;
    for (std::size_t i = 0; i < x.basic_classes.size(); ++i) {
        const auto& entry = x.basic_classes[i];
        const std::string path = "basic_classes[" + std::to_string(i) + "]";
        if (entry.c1.size() != x.lattice.rank())
            throw InputError("length " + std::to_string(entry.c1.size()) + " != rank " +
                                 std::to_string(x.lattice.rank()),
                             path + ".c1");
        if (!x.lattice.is_characteristic(entry.c1))
            throw InputError("not characteristic", path + ".c1");
        const std::int64_t k2 = x.lattice.square(entry.c1);
        if (mod(k2 - sigma, 8) != 0)
            throw InputError("c1^2 = " + std::to_string(k2) + " is not congruent to sigma = " +
                                 std::to_string(sigma) + " mod 8",
                             path + ".c1");
        if (k2 - two_chi_three_sigma < 0)
            throw InputError("SW moduli dimension d_s = (c1^2 - 2chi - 3sigma)/4 is negative",
                             path + ".c1");
        for (std::size_t j = 0; j < i; ++j)
            if (x.basic_classes[j].c1 == entry.c1)
                throw InputError("duplicate of basic_classes[" + std::to_string(j) + "]", path + ".c1");
        const std::int64_t d_s = (k2 - two_chi_three_sigma) / 4;
        if (!entry.sw_higher.empty() && x.b1 == 0 && d_s == 0)
            throw InputError("higher SW values given although b1 = 0 and d_s = 0", path + ".sw_higher");
        for (const auto& [key, value] : entry.sw_higher)
            if (2 * key.d > d_s)
                throw InputError("key degree " + std::to_string(key.d) + " exceeds d_s/2",
                                 path + ".sw_higher." + to_string(key));
    }
}

void validate(const ManifoldData& x, const SpinUData& t) {
    x.lattice.check_dimension(t.lambda, "lambda");
    x.lattice.check_dimension(t.w, "w");
    if (!congruent_mod2(t.w - t.lambda, x.w2))
        throw InputError("w - lambda is not congruent to w2(X) mod 2", "w");
    if (mod(x.lattice.square(t.w) - x.sigma(), 2) != 0)
        throw InputError("w^2 and sigma have different parity", "w");
}

std::string_view to_string(CaseLabel c) {
    switch (c) {
        case CaseLabel::VanishBelowR: return "VANISH_BELOW_R";
        case CaseLabel::AtR: return "AT_R";
        case CaseLabel::RelationRange: return "RELATION_RANGE";
        case CaseLabel::Mod8Fail: return "MOD8_FAIL";
        case CaseLabel::OutOfTheorem: return "OUT_OF_THEOREM";
    }
    return "OUT_OF_THEOREM";
}

}  // namespace monopole
