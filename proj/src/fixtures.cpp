#include "monopole/fixtures.hpp"

#include "monopole/error.hpp"
#include "monopole/invariants.hpp"

namespace monopole {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    // Written out instead of uniform_int_distribution so the stream is the same on every
    // standard library.
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(rng() % span);
}

/// Random integer in [lo, hi] with the given parity.
std::int64_t uniform_parity(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi, int parity) {
    for (;;) {
        const std::int64_t v = uniform(rng, lo, hi);
        if (((v % 2) + 2) % 2 == parity) return v;
    }
}

ManifoldData k3_lattice_manifold(const std::string& name) {
    ManifoldData x;
    x.name = name;
    x.b1 = 0;
    x.b2_plus = 3;
    x.b2_minus = 19;
    const Gram h = hyperbolic_gram();
    x.lattice = IntegralLattice(block_sum({h, h, h, e8_gram(-1), e8_gram(-1)}), 3, 19);
    x.w2 = Mod2Class(std::vector<std::uint8_t>(22, 0));
    x.simple_type = true;
    x.effective = true;
    return x;
}

ManifoldData en_like(std::int64_t n, std::int64_t sw_plus, std::int64_t sw_minus, const std::string& name) {
    if (n < 2) throw InputError("en_like needs n >= 2", "n");
    const std::size_t pos = static_cast<std::size_t>(2 * n - 2);
    const std::size_t neg = static_cast<std::size_t>(10 * n - 2);
    std::vector<Coord> diag(pos, 1);
    diag.insert(diag.end(), neg, -1);
    ManifoldData x;
    x.name = name;
    x.b1 = 0;
    x.b2_plus = 2 * n - 1;
    x.b2_minus = 10 * n - 1;
    x.lattice = IntegralLattice(block_sum({hyperbolic_gram(), diagonal_gram(diag)}), pos + 1, neg + 1);
    const std::size_t rank = x.lattice.rank();
    std::vector<std::uint8_t> w2(rank, 1);
    w2[0] = w2[1] = 0;
    x.w2 = Mod2Class(std::move(w2));
    std::vector<Coord> k(rank, 1);
    k[0] = k[1] = 0;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) k[2 + i] = 3;
    const CohClass kc(k);
    x.basic_classes.push_back({kc, sw_plus, {}});
    x.basic_classes.push_back({-kc, sw_minus, {}});
    x.simple_type = true;
    x.effective = true;
    return x;
}

}  // namespace

FixtureKind parse_fixture_kind(const std::string& s) {
    if (s == "empty") return FixtureKind::Empty;
    if (s == "k3_like") return FixtureKind::K3Like;
    if (s == "en_like") return FixtureKind::EnLike;
    if (s == "asymmetric") return FixtureKind::Asymmetric;
    throw InputError("unknown fixture kind \"" + s + "\" (empty, k3_like, en_like, asymmetric)", "kind");
}

std::string_view to_string(FixtureKind k) {
    switch (k) {
        case FixtureKind::Empty: return "empty";
        case FixtureKind::K3Like: return "k3_like";
        case FixtureKind::EnLike: return "en_like";
        case FixtureKind::Asymmetric: return "asymmetric";
    }
    return "empty";
}

ManifoldData gen_fixture(FixtureKind kind, std::int64_t n) {
    ManifoldData x;
    switch (kind) {
        case FixtureKind::Empty:
            x = k3_lattice_manifold("synthetic:empty");
            break;
        case FixtureKind::K3Like:
            x = k3_lattice_manifold("synthetic:k3_like");
            x.basic_classes.push_back({CohClass::zero(22), 1, {}});
            break;
        case FixtureKind::EnLike:
            x = en_like(n, -1, 1, "synthetic:en_like(" + std::to_string(n) + ")");
            break;
        case FixtureKind::Asymmetric:
            x = en_like(3, 1, 1, "synthetic:asymmetric");
            break;
    }
    validate(x);
    return x;
}

Request fixture_request(const ManifoldData& x) {
    const std::size_t rank = x.lattice.rank();
    if (rank < 2 || x.lattice.gram()[0][1] != 1 || x.lattice.gram()[0][0] != 0 || x.lattice.gram()[1][1] != 0)
        throw InputError("fixture requests need a hyperbolic block first", "gram");
    const std::int64_t target = 2 - x.chi_plus_sigma();
    if (target % 2 != 0) throw InputError("Lambda^2 = 2 - (chi + sigma) is odd", "lambda");
    Request r;
    std::vector<Coord> lam(rank, 0);
    lam[0] = 1;
    lam[1] = target / 2;
    r.lambda = CohClass(lam);
    std::vector<Coord> w = lam;
    for (std::size_t i = 0; i < rank; ++i) w[i] += x.w2.bits[i];
    r.w = CohClass(w);
    SpinUData t{r.lambda, 0, r.w};
    const RValues rv = r_values(x, t);
    const std::int64_t rr = rv.r_min ? to_int64(*rv.r_min, "r") : 0;
    r.z.delta2 = rr < 0 ? 0 : rr;
    for (std::size_t i = 0; i < rank; ++i) r.h_pd.push_back(make_rational(static_cast<std::int64_t>(1 + i % 3)));
    const Rational c = c_invariant(x);
    r.truncation = static_cast<std::uint32_t>(std::max<std::int64_t>(to_int64(c, "c(X)") - 1, 0));
    r.method = PairingMethod::Both;
    return r;
}

RationalVector random_rational_vector(std::mt19937_64& rng, std::size_t n, std::int64_t num_bound,
                                      std::int64_t den_bound) {
    RationalVector v;
    for (std::size_t i = 0; i < n; ++i)
        v.push_back(make_rational(uniform(rng, -num_bound, num_bound), uniform(rng, 1, den_bound)));
    return v;
}

RandomCase random_level_zero_case(std::mt19937_64& rng, std::size_t extra_classes) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const std::int64_t a = uniform(rng, 0, 2), p = uniform(rng, 0, 3), q = uniform(rng, 0, 5);
        if (a + p == 0) continue;
        ManifoldData x;
        x.name = "synthetic:random";
        x.b1 = uniform(rng, 0, 2);
        x.b2_plus = a + p;
        x.b2_minus = a + q;
        std::vector<Gram> blocks(static_cast<std::size_t>(a), hyperbolic_gram());
        std::vector<Coord> diag(static_cast<std::size_t>(p), 1);
        diag.insert(diag.end(), static_cast<std::size_t>(q), -1);
        blocks.push_back(diagonal_gram(diag));
        x.lattice = IntegralLattice(block_sum(blocks), static_cast<std::size_t>(x.b2_plus),
                                    static_cast<std::size_t>(x.b2_minus));
        const std::size_t rank = x.lattice.rank();
        const std::size_t hyp = static_cast<std::size_t>(2 * a);
        std::vector<std::uint8_t> w2(rank, 1);
        for (std::size_t i = 0; i < hyp; ++i) w2[i] = 0;
        x.w2 = Mod2Class(w2);
        x.h1_cup_trivial = x.b1 > 0;
        x.effective = true;

        auto random_char = [&] {
            std::vector<Coord> k(rank);
            for (std::size_t i = 0; i < rank; ++i) k[i] = uniform_parity(rng, -5, 5, w2[i]);
            return CohClass(k);
        };
        const CohClass kc = random_char();
        const std::int64_t d_s = sw_dimension(x, kc);
        if (d_s < 0 || d_s > 8) continue;

        std::vector<Coord> lam(rank), w(rank);
        for (std::size_t i = 0; i < rank; ++i) {
            lam[i] = uniform(rng, -3, 3);
            w[i] = lam[i] + w2[i] + 2 * uniform(rng, -1, 1);
        }
        SpinUData t{CohClass(lam), 0, CohClass(w)};
        if (x.lattice.square(t.lambda) % 2 != 0) continue;  // w^2 = sigma mod 2 needs Lambda^2 even
        t.p1 = x.lattice.square(t.lambda - kc);

        BasicClassEntry s{kc, uniform(rng, 1, 3) * (uniform(rng, 0, 1) ? 1 : -1), {}};
        x.basic_classes.push_back(s);
        const auto dr = dimension_report(x, t);
        const std::int64_t total = dr.d_a + 2 * dr.n_a - 2;
        if (total < 0) continue;

        std::vector<std::int64_t> d1_choices;
        for (std::int64_t v = d_s % 2; v <= std::min<std::int64_t>(x.b1, d_s); v += 2) d1_choices.push_back(v);
        if (d1_choices.empty()) continue;
        MonomialZ z;
        z.delta1 = d1_choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(d1_choices.size()) - 1))];
        z.delta0 = uniform(rng, 0, 2);
        z.delta2 = uniform(rng, 0, 4);
        z.theta_tag = z.delta1 > 0 ? "theta" : "";
        const std::int64_t deg = z.degree();
        if (deg > total || (total - deg) % 2 != 0) continue;

        const std::int64_t d = (d_s - z.delta1) / 2;
        if (d > 0 || z.delta1 > 0)
            x.basic_classes[0].sw_higher[SwKey{d, z.theta_tag}] = uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1);

        for (std::size_t e = 0; e < extra_classes; ++e) {
            const CohClass extra = random_char();
            if (sw_dimension(x, extra) < 0) continue;
            bool dup = false;
            for (const auto& b : x.basic_classes) dup = dup || b.c1 == extra;
            if (dup) continue;
            x.basic_classes.push_back({extra, uniform(rng, 1, 3), {}});
        }
        bool st = true;
        for (const auto& b : x.basic_classes) st = st && x.lattice.square(b.c1) == 2 * x.chi() + 3 * x.sigma();
        x.simple_type = st;
        validate(x);
        validate(x, t);

        RandomCase out;
        out.x = std::move(x);
        out.t = std::move(t);
        out.class_index = 0;
        out.z = z;
        out.delta_c = (total - deg) / 2;
        out.h = random_rational_vector(rng, rank, 5, 3);
        return out;
    }
    throw OracleMismatch("random case generator gave up");
}

}  // namespace monopole
