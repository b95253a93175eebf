#include "monopole/app.hpp"

#include "monopole/error.hpp"
#include "monopole/invariants.hpp"
#include "monopole/walls.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace monopole {

namespace {

constexpr const char* kTool = "monopole-ledger";
constexpr const char* kVersion = "0.1.0";

OrderedJson q(const Rational& v) { return to_string(v); }
OrderedJson q(const std::optional<Rational>& v) { return v ? OrderedJson(to_string(*v)) : OrderedJson(nullptr); }

bool synthetic(const ManifoldData& x) { return x.name.rfind("synthetic:", 0) == 0; }

OrderedJson manifest_summary(const ManifoldData& x) {
    OrderedJson j;
    j["name"] = x.name;
    j["b1"] = x.b1;
    j["b2_plus"] = x.b2_plus;
    j["b2_minus"] = x.b2_minus;
    j["rank"] = x.lattice.rank();
    j["simple_type"] = x.simple_type;
    j["effective"] = x.effective;
    j["h1_cup_trivial"] = x.h1_cup_trivial;
    OrderedJson classes = OrderedJson::array();
    for (const auto& s : x.basic_classes) {
        OrderedJson e;
        e["c1"] = class_to_json(s.c1);
        e["sw"] = s.sw;
        classes.push_back(e);
    }
    j["basic_classes"] = classes;
    return j;
}

/// Hypotheses of the simple-type formula, without throwing.
std::optional<std::string> simple_type_obstruction(const ManifoldData& x, const SpinUData& t) {
    if (x.b1 != 0) return "b1 != 0";
    if (x.b2_plus < 3 || x.b2_plus % 2 == 0) return "b2_plus is not odd and >= 3";
    if (!x.effective) return "not effective";
    if (!simple_type_check(x)) return "not of SW-simple type";
    for (const auto& s : x.basic_classes)
        if (x.lattice.pairing(t.lambda, s.c1) != 0) return "Lambda is not orthogonal to every basic class";
    return std::nullopt;
}

OrderedJson witten_to_json(const WittenReport& w, std::uint32_t cap) {
    OrderedJson j;
    j["truncation"] = cap;
    j["sw_vanish_order"] = w.sw_vanish_order;
    j["d_vanish_order"] = w.d_vanish_order;
    j["sw_vanishes"] = w.sw_vanishes;
    j["d_vanishes"] = w.d_vanishes;
    j["congruence"] = w.congruence;
    j["relations_hold"] = w.relations_hold;
    j["congruence_ok"] = w.congruence_ok;
    OrderedJson rel = OrderedJson::array();
    for (const auto& r : w.relations) {
        OrderedJson e;
        e["lambda_name"] = r.lambda_name;
        e["lambda"] = class_to_json(r.lambda);
        e["d"] = r.d;
        e["residual"] = series_to_json(r.residual);
        rel.push_back(e);
    }
    j["relations"] = rel;
    j["d_series"] = series_to_json(w.d_series);
    j["sw_series"] = series_to_json(w.sw_series);
    j["rhs_series"] = series_to_json(w.rhs_series);
    return j;
}

void flatten(const OrderedJson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object()) {
        if (j.empty()) rows.emplace_back(prefix, "{}");
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
        return;
    }
    if (j.is_array()) {
        bool scalars = true;
        for (const auto& e : j) scalars = scalars && !e.is_structured();
        if (scalars) {
            std::string s;
            for (std::size_t i = 0; i < j.size(); ++i)
                s += (i ? ", " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            rows.emplace_back(prefix, "[" + s + "]");
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
        return;
    }
    rows.emplace_back(prefix, j.is_string() ? j.get<std::string>() : j.dump());
}

}  // namespace

ReportFormat parse_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "table") return ReportFormat::Table;
    throw InputError("format must be json or table", "format");
}

OrderedJson wrap(const std::string& command, OrderedJson body) {
    OrderedJson j;
    j["tool"] = kTool;
    j["version"] = kVersion;
    j["command"] = command;
    for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
    return j;
}

Outcome run_compute(const ManifoldData& x, const Request& req) {
    validate(x);
    SpinUData t{req.lambda, 0, req.w};
    const std::int64_t deg = req.z.degree();
    std::string p1_source = "request";
    std::optional<std::int64_t> p1 = req.p1;
    if (!p1) {
        try {
            p1 = p1_for_degree(x, deg);
            p1_source = "derived";
            // n_a must be integral too; it fails exactly when deg z misses the mod-8 gate
            dimension_report(x, SpinUData{req.lambda, *p1, req.w});
        } catch (const InputError&) {
            p1.reset();
            p1_source = "not derivable from deg z";
        }
    }
    if (p1) t.p1 = *p1;
    validate(x, t);

    OrderedJson body;
    body["synthetic_data"] = synthetic(x);
    body["manifest"] = manifest_summary(x);
    body["request"] = request_to_json(req);

    // derived quantities
    OrderedJson derived;
    derived["chi"] = x.chi();
    derived["sigma"] = x.sigma();
    derived["c_x"] = q(c_invariant(x));
    derived["i_lambda"] = q(index_i(x, t.lambda));
    derived["deg_z"] = deg;
    derived["kappa"] = q(make_rational(2 * deg + 3 * x.chi_plus_sigma(), 16));
    derived["p1"] = p1 ? OrderedJson(*p1) : OrderedJson(nullptr);
    derived["p1_source"] = p1_source;
    if (p1) {
        const auto dr = dimension_report(x, t);
        derived["d_a"] = dr.d_a;
        derived["n_a"] = dr.n_a;
    } else {
        derived["d_a"] = nullptr;
        derived["n_a"] = nullptr;
    }
    const RValues rv = r_values(x, t);
    derived["r_min"] = rv.r_min ? q(*rv.r_min) : OrderedJson("inf");
    derived["mod8_ok"] = mod8_condition(x, t.w, deg);
    OrderedJson classes = OrderedJson::array();
    for (std::size_t i = 0; i < x.basic_classes.size(); ++i) {
        const auto& s = x.basic_classes[i];
        OrderedJson e;
        e["index"] = i;
        e["d_s"] = sw_dimension(x, s.c1);
        e["r"] = q(rv.per_class[i]);
        if (p1) {
            const auto lv = level(t, s.c1, x.lattice);
            e["level"] = lv ? OrderedJson(*lv) : OrderedJson(nullptr);
            const auto ns = normal_indices(x, t, s.c1);
            e["ns1"] = ns.ns1;
            e["ns2"] = ns.ns2;
        } else {
            e["level"] = nullptr;
            e["ns1"] = nullptr;
            e["ns2"] = nullptr;
        }
        e["orientation"] = orientation_sign(t, s.c1, x.lattice);
        classes.push_back(e);
    }
    derived["classes"] = classes;
    body["derived"] = derived;

    // main formula
    const DonaldsonResult res = donaldson_invariant(x, t, req.z, req.h_pd, req.period_point);
    OrderedJson don;
    don["case"] = std::string(to_string(res.label));
    don["delta"] = q(res.delta);
    don["value"] = q(res.value);
    don["residual"] = q(res.residual);
    don["h_literal_agrees"] = res.h_literal_agrees;
    OrderedJson terms = OrderedJson::array();
    for (const auto& tm : res.terms) {
        OrderedJson e;
        e["class_index"] = tm.class_index;
        e["sign"] = tm.sign;
        e["h_constant"] = q(tm.h_constant);
        e["sw"] = tm.sw;
        e["pairing_power"] = q(tm.pairing_power);
        terms.push_back(e);
    }
    don["terms"] = terms;
    body["donaldson"] = don;

    if (req.period_point) {
        OrderedJson ch;
        ch["period_point"] = rationals_to_json(*req.period_point);
        OrderedJson signs = OrderedJson::array();
        for (const auto& c : res.chamber) {
            OrderedJson e;
            e["class_index"] = c.class_index;
            e["sign"] = c.sign;
            signs.push_back(e);
        }
        ch["signs"] = signs;
        body["chamber"] = ch;
    } else {
        body["chamber"] = nullptr;
    }

    // cross-checks
    bool mismatch = false;
    OrderedJson cross;
    cross["link_constant_routes"] = std::string(to_string(req.method));
    if (res.label == CaseLabel::AtR) {
        OrderedJson b;
        try {
            const Rational via = donaldson_via_blowup(x, t, req.z, req.h_pd, req.method);
            b["value"] = q(via);
            b["agrees"] = via == *res.value;
            mismatch = mismatch || via != *res.value;
        } catch (const HypothesisError& e) {
            b["skipped"] = e.message();
        }
        cross["blowup_route"] = b;
    } else {
        cross["blowup_route"] = nullptr;
    }
    const auto obstruction = simple_type_obstruction(x, t);
    const bool gated = res.label == CaseLabel::AtR || res.label == CaseLabel::VanishBelowR ||
                       res.label == CaseLabel::RelationRange;
    if (!obstruction && gated && req.z.delta1 == 0 && !req.z.contains_h3) {
        OrderedJson s;
        const std::int64_t delta = req.z.delta2 + 2 * req.z.delta0;
        const auto st = donaldson_simple_type_poly(x, t, delta, req.z.delta0);
        s["case"] = std::string(to_string(st.label));
        if (st.label == CaseLabel::OutOfTheorem) {
            s["value"] = nullptr;
            s["residual"] = nullptr;
            s["agrees"] = false;
        } else {
            const Rational v = st.poly.evaluate(req.h_pd);
            std::optional<Rational> resid;
            if (st.residual) resid = st.residual->evaluate(req.h_pd);
            s["value"] = q(v);
            s["residual"] = q(resid);
            const bool ok = st.label == res.label && v == *res.value &&
                            resid.value_or(Rational(0)) == res.residual.value_or(Rational(0));
            s["agrees"] = ok;
            mismatch = mismatch || !ok;
        }
        cross["simple_type"] = s;
    } else {
        cross["simple_type"] = nullptr;
    }
    body["cross_checks"] = cross;

    // Witten comparison when Lambda^2 = 2 - (chi + sigma)
    const std::int64_t c_x = is_integer(c_invariant(x)) ? to_int64(c_invariant(x), "c(X)") : 0;
    if (!obstruction && x.lattice.square(t.lambda) == 2 - x.chi_plus_sigma() && c_x >= 1) {
        const auto cap = static_cast<std::uint32_t>(std::max<std::int64_t>(req.truncation, c_x - 1));
        try {
            body["witten"] = witten_to_json(witten_compare(x, t, cap), cap);
        } catch (const HypothesisError& e) {
            OrderedJson w;
            w["skipped"] = e.message();
            body["witten"] = w;
        }
    } else {
        body["witten"] = nullptr;
    }

    Outcome out;
    out.exit_code = mismatch ? exit_code(ErrorKind::OracleMismatch)
                    : res.label == CaseLabel::OutOfTheorem ? exit_code(ErrorKind::Hypothesis)
                                                           : 0;
    body["exit_code"] = out.exit_code;
    out.report = wrap("compute", std::move(body));
    return out;
}

Outcome run_check(const std::string& suite, const CheckOptions& opts) {
    std::vector<std::string> names;
    if (suite == "all")
        names = suite_names();
    else
        names = {suite};
    OrderedJson suites = OrderedJson::array();
    bool pass = true;
    for (const auto& n : names) {
        const SuiteResult r = run_suite(n, opts);
        OrderedJson s;
        s["suite"] = r.suite;
        s["grid_bound"] = r.grid_bound;
        s["pass"] = r.pass();
        OrderedJson props = OrderedJson::array();
        for (const auto& p : r.properties) {
            OrderedJson e;
            e["name"] = p.name;
            e["pass"] = p.pass();
            e["cases"] = p.cases;
            e["skipped"] = p.skipped;
            e["counterexample"] = p.counterexample ? OrderedJson(*p.counterexample) : OrderedJson(nullptr);
            props.push_back(e);
        }
        s["properties"] = props;
        suites.push_back(s);
        pass = pass && r.pass();
    }
    OrderedJson body;
    body["seed"] = opts.seed;
    body["literal_segre"] = opts.literal_segre;
    body["pass"] = pass;
    body["suites"] = suites;
    Outcome out;
    out.exit_code = pass ? 0 : exit_code(ErrorKind::OracleMismatch);
    body["exit_code"] = out.exit_code;
    out.report = wrap("check", std::move(body));
    return out;
}

Outcome run_walls(const ManifoldData& x, const WallsRequest& req) {
    const auto& l = x.lattice;
    l.check_dimension(req.w, "w");
    CohClass lambda = req.w;
    if (req.lambda) {
        l.check_dimension(*req.lambda, "lambda");
        lambda = *req.lambda;
    } else {
        for (std::size_t i = 0; i < lambda.size(); ++i) lambda.coords[i] -= x.w2.bits[i];
    }
    SpinUData t{lambda, req.p1, req.w};
    validate(x, t);
    const auto walls = enumerate_walls(l, req.w, req.p1, req.level_max, req.bound);
    const auto images = wall_correspondence(l, t, walls);

    OrderedJson body;
    body["synthetic_data"] = synthetic(x);
    body["manifest"] = manifest_summary(x);
    body["w"] = class_to_json(req.w);
    body["lambda"] = class_to_json(lambda);
    body["p1"] = req.p1;
    body["level_max"] = req.level_max;
    body["bound"] = req.bound;
    body["omega"] = req.omega ? rationals_to_json(*req.omega) : OrderedJson(nullptr);
    OrderedJson rows = OrderedJson::array();
    for (const auto& im : images) {
        OrderedJson e;
        e["alpha"] = class_to_json(im.alpha);
        e["square"] = l.square(im.alpha);
        e["level"] = im.level;
        e["c1_s"] = class_to_json(im.c1_s);
        e["chamber_sign"] = req.omega ? OrderedJson(chamber_sign(l, *req.omega, im.alpha)) : OrderedJson(nullptr);
        rows.push_back(e);
    }
    body["count"] = rows.size();
    body["walls"] = rows;
    body["exit_code"] = 0;
    return {wrap("walls", std::move(body)), 0};
}

std::string render(const OrderedJson& report, ReportFormat format) {
    if (format == ReportFormat::Json) return report.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(report, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows) width = std::max(width, r.first.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows) os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    return os.str();
}

void emit_report(const OrderedJson& report, const std::optional<std::filesystem::path>& path,
                 ReportFormat format) {
    const std::string text = render(report, format);
    if (!path || path->empty()) {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream out(*path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot open for writing", path->string());
    out << text;
    if (!out) throw InputError("write failed", path->string());
}

}  // namespace monopole
