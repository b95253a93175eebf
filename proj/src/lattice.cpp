#include "monopole/lattice.hpp"

#include "monopole/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace monopole {

CohClass CohClass::unit(std::size_t rank, std::size_t i) {
    CohClass u = zero(rank);
    u.coords.at(i) = 1;
    return u;
}

bool CohClass::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](Coord c) { return c == 0; });
}

CohClass CohClass::extended(Coord last) const {
    CohClass u = *this;
    u.coords.push_back(last);
    return u;
}

namespace {

void require_same_size(const CohClass& a, const CohClass& b) {
    if (a.size() != b.size())
        throw InputError("class length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

}  // namespace

CohClass operator+(const CohClass& a, const CohClass& b) {
    require_same_size(a, b);
    CohClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

CohClass operator-(const CohClass& a, const CohClass& b) {
    require_same_size(a, b);
    CohClass r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r.coords[i] -= b.coords[i];
    return r;
}

CohClass operator-(const CohClass& a) {
    CohClass r = a;
    for (auto& c : r.coords) c = -c;
    return r;
}

CohClass operator*(Coord s, const CohClass& a) {
    CohClass r = a;
    for (auto& c : r.coords) c *= s;
    return r;
}

Mod2Class::Mod2Class(std::vector<std::uint8_t> b) : bits(std::move(b)) {
    for (auto x : bits)
        if (x > 1) throw InputError("mod-2 class entries must be 0 or 1");
}

bool Mod2Class::is_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

Mod2Class reduce_mod2(const CohClass& u) {
    std::vector<std::uint8_t> bits(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) bits[i] = static_cast<std::uint8_t>(u[i] & 1);
    return Mod2Class(std::move(bits));
}

bool congruent_mod2(const CohClass& u, const CohClass& v) {
    require_same_size(u, v);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (((u[i] - v[i]) & 1) != 0) return false;
    return true;
}

bool congruent_mod2(const CohClass& u, const Mod2Class& v) {
    if (u.size() != v.size()) throw InputError("mod-2 class length mismatch");
    for (std::size_t i = 0; i < u.size(); ++i)
        if (static_cast<std::uint8_t>(u[i] & 1) != v.bits[i]) return false;
    return true;
}

FormInvariants diagonalize(const Gram& gram) {
    const std::size_t n = gram.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (gram[i].size() != n) throw InputError("gram is not square", "gram");
        for (std::size_t j = 0; j < i; ++j)
            if (gram[i][j] != gram[j][i])
                throw InputError("gram is not symmetric at (" + std::to_string(i) + "," +
                                     std::to_string(j) + ")",
                                 "gram");
    }
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(Integer(static_cast<long>(gram[i][j])));

    // Congruences used: simultaneous row/column swaps and adding a multiple of one
    // basis vector to another. Both have determinant +-1, so det is the pivot product.
    auto swap_basis = [&](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (auto& row : a) std::swap(row[i], row[j]);
    };
    auto add_basis = [&](std::size_t target, std::size_t src, const Rational& f) {
        for (std::size_t c = 0; c < n; ++c) a[target][c] += f * a[src][c];
        for (std::size_t r = 0; r < n; ++r) a[r][target] += f * a[r][src];
    };

    FormInvariants out;
    Rational det(1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t piv = n;
        for (std::size_t j = i; j < n && piv == n; ++j)
            if (a[j][j] != 0) piv = j;
        if (piv == n) {
            std::size_t pj = n, pk = n;
            for (std::size_t j = i; j < n && pj == n; ++j)
                for (std::size_t k = j + 1; k < n; ++k)
                    if (a[j][k] != 0) {
                        pj = j;
                        pk = k;
                        break;
                    }
            if (pj == n) {
                out.null = n - i;
                out.determinant = 0;
                return out;
            }
            add_basis(pj, pk, Rational(1));
            piv = pj;
        }
        swap_basis(i, piv);
        const Rational p = a[i][i];
        for (std::size_t r = i + 1; r < n; ++r)
            if (a[r][i] != 0) add_basis(r, i, -a[r][i] / p);
        det *= p;
        if (p > 0)
            ++out.positive;
        else
            ++out.negative;
    }
    out.determinant = det.get_num();
    return out;
}

IntegralLattice::IntegralLattice(Gram gram, std::size_t sig_plus, std::size_t sig_minus) {
    FormInvariants inv = diagonalize(gram);
    if (inv.null != 0 || abs(inv.determinant) != 1)
        throw InputError("gram is not unimodular (det = " + inv.determinant.get_str() + ")", "gram");
    if (gram.size() != sig_plus + sig_minus)
        throw InputError("rank " + std::to_string(gram.size()) + " != b2_plus + b2_minus", "gram");
    if (inv.positive != sig_plus || inv.negative != sig_minus)
        throw InputError("signature of gram is (" + std::to_string(inv.positive) + "," +
                             std::to_string(inv.negative) + "), expected (" +
                             std::to_string(sig_plus) + "," + std::to_string(sig_minus) + ")",
                         "gram");
    gram_ = std::move(gram);
    sig_plus_ = sig_plus;
    sig_minus_ = sig_minus;
}

IntegralLattice IntegralLattice::from_gram(Gram gram) {
    FormInvariants inv = diagonalize(gram);
    return IntegralLattice(std::move(gram), inv.positive, inv.negative);
}

void IntegralLattice::check_dimension(std::size_t n, const char* what) const {
    if (n != rank())
        throw InputError(std::string(what) + " has length " + std::to_string(n) +
                         ", lattice rank is " + std::to_string(rank()));
}

void IntegralLattice::check_dimension(const CohClass& u, const char* what) const {
    check_dimension(u.size(), what);
}

Coord IntegralLattice::pairing(const CohClass& u, const CohClass& v) const {
    check_dimension(u);
    check_dimension(v);
    Coord s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (u[i] == 0) continue;
        Coord row = 0;
        for (std::size_t j = 0; j < rank(); ++j) row += gram_[i][j] * v[j];
        s += u[i] * row;
    }
    return s;
}

Rational IntegralLattice::pairing(const CohClass& u, std::span<const Rational> eta) const {
    check_dimension(u);
    check_dimension(eta.size());
    Rational s(0);
    auto lf = linear_form(u);
    for (std::size_t i = 0; i < rank(); ++i)
        if (lf[i] != 0) s += Rational(Integer(static_cast<long>(lf[i]))) * eta[i];
    return s;
}

Rational IntegralLattice::pairing(std::span<const Rational> a, std::span<const Rational> b) const {
    check_dimension(a.size());
    check_dimension(b.size());
    Rational s(0);
    for (std::size_t i = 0; i < rank(); ++i) {
        if (a[i] == 0) continue;
        Rational row(0);
        for (std::size_t j = 0; j < rank(); ++j)
            if (gram_[i][j] != 0) row += Rational(Integer(static_cast<long>(gram_[i][j]))) * b[j];
        s += a[i] * row;
    }
    return s;
}

std::vector<Coord> IntegralLattice::linear_form(const CohClass& u) const {
    check_dimension(u);
    std::vector<Coord> c(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) c[j] += u[i] * gram_[i][j];
    return c;
}

bool IntegralLattice::is_characteristic(const CohClass& k) const {
    auto lf = linear_form(k);
    for (std::size_t i = 0; i < rank(); ++i)
        if (((lf[i] - gram_[i][i]) & 1) != 0) return false;
    return true;
}

bool IntegralLattice::is_characteristic(const Mod2Class& k) const {
    check_dimension(k.size(), "mod-2 class");
    CohClass lift = CohClass::zero(rank());
    for (std::size_t i = 0; i < rank(); ++i) lift.coords[i] = k.bits[i];
    return is_characteristic(lift);
}

bool IntegralLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if ((gram_[i][i] & 1) != 0) return false;
    return true;
}

IntegralLattice IntegralLattice::with_exceptional() const {
    IntegralLattice out;
    out.gram_ = block_sum({gram_, Gram{{-1}}});
    out.sig_plus_ = sig_plus_;
    out.sig_minus_ = sig_minus_ + 1;
    return out;
}

Gram hyperbolic_gram() { return {{0, 1}, {1, 0}}; }

Gram e8_gram(int sign) {
    // Cartan matrix of E8 in Bourbaki numbering (node 2 hangs off node 4).
    Gram g(8, std::vector<Coord>(8, 0));
    const int edges[7][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    for (int i = 0; i < 8; ++i) g[i][i] = 2 * sign;
    for (auto& e : edges) g[e[0]][e[1]] = g[e[1]][e[0]] = -sign;
    return g;
}

Gram diagonal_gram(std::span<const Coord> entries) {
    Gram g(entries.size(), std::vector<Coord>(entries.size(), 0));
    for (std::size_t i = 0; i < entries.size(); ++i) g[i][i] = entries[i];
    return g;
}

Gram block_sum(const std::vector<Gram>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    Gram g(n, std::vector<Coord>(n, 0));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) g[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return g;
}

bool is_good(const Mod2Class& v) { return !v.is_zero(); }

namespace {

bool orthogonal_to_all(const IntegralLattice& lattice, const std::vector<CohClass>& basic,
                       const CohClass& v) {
    for (const auto& k : basic)
        if (lattice.pairing(v, k) != 0) return false;
    return true;
}

}  // namespace

std::vector<CohClass> find_orthogonal_classes(const IntegralLattice& lattice,
                                              const std::vector<CohClass>& basic,
                                              Coord target_square, Coord coeff_bound) {
    for (const auto& k : basic) lattice.check_dimension(k, "basic class");
    std::vector<CohClass> out;
    const std::size_t n = lattice.rank();
    CohClass v(std::vector<Coord>(n, -coeff_bound));
    if (coeff_bound < 0) return out;
    // Odometer with the last coordinate fastest gives ascending lexicographic order.
    while (true) {
        if (lattice.square(v) == target_square && orthogonal_to_all(lattice, basic, v))
            out.push_back(v);
        std::size_t i = n;
        while (i > 0 && v.coords[i - 1] == coeff_bound) {
            v.coords[i - 1] = -coeff_bound;
            --i;
        }
        if (i == 0) break;
        ++v.coords[i - 1];
    }
    return out;
}

std::vector<CohClass> find_orthogonal_classes_sparse(const IntegralLattice& lattice,
                                                     const std::vector<CohClass>& basic,
                                                     Coord target_square, Coord coeff_bound,
                                                     std::size_t max_support) {
    for (const auto& k : basic) lattice.check_dimension(k, "basic class");
    std::vector<CohClass> out;
    const std::size_t n = lattice.rank();
    CohClass v = CohClass::zero(n);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t used) {
        if (lattice.square(v) == target_square && orthogonal_to_all(lattice, basic, v))
            out.push_back(v);
        if (used == max_support) return;
        for (std::size_t i = start; i < n; ++i)
            for (Coord c = -coeff_bound; c <= coeff_bound; ++c) {
                if (c == 0) continue;
                v.coords[i] = c;
                rec(i + 1, used + 1);
                v.coords[i] = 0;
            }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace monopole
