#include "monopole/walls.hpp"

#include "monopole/error.hpp"

#include <set>

namespace monopole {

std::vector<WallClass> enumerate_walls(const IntegralLattice& l, const CohClass& w, std::int64_t p1,
                                       std::int64_t level_max, Coord coeff_bound) {
    if (l.sig_plus() != 1) throw InputError("wall enumeration needs b2_plus = 1");
    l.check_dimension(w, "w");
    std::vector<WallClass> out;
    const std::size_t n = l.rank();
    if (coeff_bound < 0 || level_max < 0 || n == 0) return out;

    // Coordinate i runs over values in [-bound, bound] with the parity of w_i.
    std::vector<Coord> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Coord par = w[i] & 1;
        lo[i] = ((-coeff_bound) & 1) == par ? -coeff_bound : -coeff_bound + 1;
        hi[i] = (coeff_bound & 1) == par ? coeff_bound : coeff_bound - 1;
        if (lo[i] > hi[i]) return out;
    }
    CohClass a(lo);
    while (true) {
        if (!a.is_zero()) {
            const std::int64_t num = l.square(a) - p1;
            if (num >= 0 && num % 4 == 0 && num / 4 <= level_max) out.push_back({a, num / 4});
        }
        std::size_t i = n;
        while (i > 0 && a.coords[i - 1] == hi[i - 1]) {
            a.coords[i - 1] = lo[i - 1];
            --i;
        }
        if (i == 0) break;
        a.coords[i - 1] += 2;
    }
    return out;
}

std::vector<WallImage> wall_correspondence(const IntegralLattice& l, const SpinUData& t,
                                           const std::vector<WallClass>& walls) {
    if (l.sig_plus() != 1) throw InputError("wall correspondence needs b2_plus = 1");
    l.check_dimension(t.lambda, "lambda");
    std::vector<WallImage> out;
    std::set<CohClass> seen;
    for (std::size_t i = 0; i < walls.size(); ++i) {
        const auto& wc = walls[i];
        WallImage img{wc.alpha, t.lambda - wc.alpha, wc.level};
        if (!l.is_characteristic(img.c1_s))
            throw InputError("Lambda - alpha is not characteristic; w2 data inconsistent",
                             "walls[" + std::to_string(i) + "]");
        if (l.square(img.c1_s - t.lambda) != t.p1 + 4 * wc.level)
            throw InputError("(c1(s) - Lambda)^2 != p1 + 4 level", "walls[" + std::to_string(i) + "]");
        if (!seen.insert(img.c1_s).second)
            throw OracleMismatch("wall correspondence is not injective");
        out.push_back(std::move(img));
    }
    return out;
}

CohClass wall_from_class(const SpinUData& t, const CohClass& c1_s) { return t.lambda - c1_s; }

int chamber_sign(const IntegralLattice& l, std::span<const Rational> omega, const CohClass& alpha) {
    if (l.pairing(omega, omega) <= 0) throw InputError("omega is not in the positive cone", "omega");
    const Rational q = l.pairing(alpha, omega);
    return q > 0 ? 1 : (q < 0 ? -1 : 0);
}

}  // namespace monopole
