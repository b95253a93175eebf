#include "monopole/io.hpp"

#include "monopole/error.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace monopole {

namespace {

std::string at(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string idx(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& path) {
    if (!obj.is_object()) throw InputError("expected an object", path.empty() ? "$" : path);
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key())) throw InputError("unknown key", at(path, it.key()));
}

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError("missing required key", at(path, key));
    return *it;
}

std::int64_t as_int(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    throw InputError("expected an integer", path);
}

std::int64_t as_natural(const Json& j, const std::string& path) {
    const std::int64_t v = as_int(j, path);
    if (v < 0) throw InputError("expected a nonnegative integer", path);
    return v;
}

bool as_bool(const Json& j, const std::string& path) {
    if (!j.is_boolean()) throw InputError("expected true or false", path);
    return j.get<bool>();
}

std::string as_string(const Json& j, const std::string& path) {
    if (!j.is_string()) throw InputError("expected a string", path);
    return j.get<std::string>();
}

std::vector<std::int64_t> as_int_vector(const Json& j, const std::string& path) {
    if (!j.is_array()) throw InputError("expected an array of integers", path);
    std::vector<std::int64_t> v;
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(as_int(j[i], idx(path, i)));
    return v;
}

CohClass as_class(const Json& j, const std::string& path, std::size_t rank) {
    CohClass c(as_int_vector(j, path));
    if (c.size() != rank)
        throw InputError("length " + std::to_string(c.size()) + " != rank " + std::to_string(rank), path);
    return c;
}

RationalVector as_rational_vector(const Json& j, const std::string& path, std::size_t rank) {
    if (!j.is_array()) throw InputError("expected an array of \"p/q\" strings", path);
    RationalVector v;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string p = idx(path, i);
        try {
            if (j[i].is_number_integer())
                v.push_back(make_rational(j[i].get<std::int64_t>()));
            else
                v.push_back(parse_rational(as_string(j[i], p)));
        } catch (const InputError& e) {
            if (e.path().empty()) throw InputError(e.message(), p);
            throw;
        }
    }
    if (v.size() != rank)
        throw InputError("length " + std::to_string(v.size()) + " != rank " + std::to_string(rank), path);
    return v;
}

/// Rethrows an InputError without a path under the given path.
template <class F>
auto with_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        if (e.path().empty()) throw InputError(e.message(), path);
        throw;
    }
}

}  // namespace

Json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file", path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("JSON parse error: ") + e.what(), path.string());
    }
}

ManifoldData manifest_from_json(const Json& j) {
    reject_unknown_keys(j, {"name", "b1", "b2_plus", "b2_minus", "gram", "w2", "basic_classes",
                            "simple_type", "effective", "h1_cup_trivial"},
                        "");
    ManifoldData x;
    x.name = as_string(require(j, "name", ""), "name");
    x.b1 = as_natural(require(j, "b1", ""), "b1");
    x.b2_plus = as_natural(require(j, "b2_plus", ""), "b2_plus");
    x.b2_minus = as_natural(require(j, "b2_minus", ""), "b2_minus");

    const Json& gj = require(j, "gram", "");
    if (!gj.is_array()) throw InputError("expected a matrix", "gram");
    Gram gram;
    for (std::size_t i = 0; i < gj.size(); ++i) gram.push_back(as_int_vector(gj[i], idx("gram", i)));
    x.lattice = IntegralLattice(std::move(gram), static_cast<std::size_t>(x.b2_plus),
                                static_cast<std::size_t>(x.b2_minus));
    const std::size_t rank = x.lattice.rank();

    const auto w2 = as_int_vector(require(j, "w2", ""), "w2");
    std::vector<std::uint8_t> bits;
    for (std::size_t i = 0; i < w2.size(); ++i) {
        if (w2[i] != 0 && w2[i] != 1) throw InputError("expected 0 or 1", idx("w2", i));
        bits.push_back(static_cast<std::uint8_t>(w2[i]));
    }
    x.w2 = Mod2Class(std::move(bits));

    const Json& bj = require(j, "basic_classes", "");
    if (!bj.is_array()) throw InputError("expected an array", "basic_classes");
    for (std::size_t i = 0; i < bj.size(); ++i) {
        const std::string p = idx("basic_classes", i);
        reject_unknown_keys(bj[i], {"c1", "sw", "sw_higher"}, p);
        BasicClassEntry e;
        e.c1 = as_class(require(bj[i], "c1", p), at(p, "c1"), rank);
        e.sw = as_int(require(bj[i], "sw", p), at(p, "sw"));
        if (auto it = bj[i].find("sw_higher"); it != bj[i].end()) {
            if (!it->is_object()) throw InputError("expected an object", at(p, "sw_higher"));
            for (auto kv = it->begin(); kv != it->end(); ++kv) {
                const std::string kp = at(at(p, "sw_higher"), kv.key());
                SwKey key = with_path(kp, [&] { return parse_sw_key(kv.key()); });
                e.sw_higher[key] = as_int(kv.value(), kp);
            }
        }
        x.basic_classes.push_back(std::move(e));
    }
    x.simple_type = as_bool(require(j, "simple_type", ""), "simple_type");
    x.effective = as_bool(require(j, "effective", ""), "effective");
    if (auto it = j.find("h1_cup_trivial"); it != j.end())
        x.h1_cup_trivial = as_bool(*it, "h1_cup_trivial");

    validate(x);
    const std::int64_t target = 2 * x.chi() + 3 * x.sigma();
    bool actual = true;
    for (const auto& s : x.basic_classes) actual = actual && x.lattice.square(s.c1) == target;
    if (actual != x.simple_type)
        throw InputError(std::string("claim disagrees with the data (K^2 = 2chi + 3sigma for all K is ") +
                             (actual ? "true" : "false") + ")",
                         "simple_type");
    return x;
}

ManifoldData load_manifest(const std::filesystem::path& path) {
    return manifest_from_json(parse_json_file(path));
}

OrderedJson class_to_json(const CohClass& c) {
    OrderedJson a = OrderedJson::array();
    for (auto v : c.coords) a.push_back(v);
    return a;
}

OrderedJson rationals_to_json(const RationalVector& v) {
    OrderedJson a = OrderedJson::array();
    for (const auto& q : v) a.push_back(to_string(q));
    return a;
}

OrderedJson manifest_to_json(const ManifoldData& x) {
    OrderedJson j;
    j["name"] = x.name;
    j["b1"] = x.b1;
    j["b2_plus"] = x.b2_plus;
    j["b2_minus"] = x.b2_minus;
    OrderedJson gram = OrderedJson::array();
    for (const auto& row : x.lattice.gram()) gram.push_back(row);
    j["gram"] = gram;
    OrderedJson w2 = OrderedJson::array();
    for (auto b : x.w2.bits) w2.push_back(static_cast<int>(b));
    j["w2"] = w2;
    OrderedJson classes = OrderedJson::array();
    for (const auto& s : x.basic_classes) {
        OrderedJson e;
        e["c1"] = class_to_json(s.c1);
        e["sw"] = s.sw;
        if (!s.sw_higher.empty()) {
            OrderedJson h = OrderedJson::object();
            for (const auto& [k, v] : s.sw_higher) h[to_string(k)] = v;
            e["sw_higher"] = h;
        }
        classes.push_back(e);
    }
    j["basic_classes"] = classes;
    j["simple_type"] = x.simple_type;
    j["effective"] = x.effective;
    j["h1_cup_trivial"] = x.h1_cup_trivial;
    return j;
}

std::string_view to_string(PairingMethod m) {
    switch (m) {
        case PairingMethod::Direct: return "direct";
        case PairingMethod::Closed: return "closed";
        case PairingMethod::Both: return "both";
    }
    return "both";
}

PairingMethod parse_method(const std::string& s) {
    if (s == "direct") return PairingMethod::Direct;
    if (s == "closed") return PairingMethod::Closed;
    if (s == "both") return PairingMethod::Both;
    throw InputError("method must be closed, direct or both", "method");
}

Request request_from_json(const Json& j, const ManifoldData& x) {
    reject_unknown_keys(j, {"w", "lambda", "p1", "z", "h_pd", "period_point", "truncation", "method"}, "");
    const std::size_t rank = x.lattice.rank();
    Request r;
    r.w = as_class(require(j, "w", ""), "w", rank);
    r.lambda = as_class(require(j, "lambda", ""), "lambda", rank);
    if (auto it = j.find("p1"); it != j.end() && !it->is_null()) r.p1 = as_int(*it, "p1");
    const Json& zj = require(j, "z", "");
    reject_unknown_keys(zj, {"delta0", "delta1", "delta2", "theta_tag", "contains_h3"}, "z");
    r.z.delta0 = as_natural(require(zj, "delta0", "z"), "z.delta0");
    r.z.delta1 = as_natural(require(zj, "delta1", "z"), "z.delta1");
    r.z.delta2 = as_natural(require(zj, "delta2", "z"), "z.delta2");
    if (auto it = zj.find("theta_tag"); it != zj.end()) r.z.theta_tag = as_string(*it, "z.theta_tag");
    if (auto it = zj.find("contains_h3"); it != zj.end()) r.z.contains_h3 = as_bool(*it, "z.contains_h3");
    r.h_pd = as_rational_vector(require(j, "h_pd", ""), "h_pd", rank);
    if (auto it = j.find("period_point"); it != j.end() && !it->is_null())
        r.period_point = as_rational_vector(*it, "period_point", rank);
    if (auto it = j.find("truncation"); it != j.end())
        r.truncation = static_cast<std::uint32_t>(as_natural(*it, "truncation"));
    if (auto it = j.find("method"); it != j.end()) r.method = parse_method(as_string(*it, "method"));
    SpinUData t{r.lambda, r.p1.value_or(0), r.w};
    validate(x, t);
    return r;
}

Request load_request(const std::filesystem::path& path, const ManifoldData& x) {
    return request_from_json(parse_json_file(path), x);
}

OrderedJson request_to_json(const Request& r) {
    OrderedJson j;
    j["w"] = class_to_json(r.w);
    j["lambda"] = class_to_json(r.lambda);
    j["p1"] = r.p1 ? OrderedJson(*r.p1) : OrderedJson(nullptr);
    OrderedJson z;
    z["delta0"] = r.z.delta0;
    z["delta1"] = r.z.delta1;
    z["delta2"] = r.z.delta2;
    z["theta_tag"] = r.z.theta_tag;
    z["contains_h3"] = r.z.contains_h3;
    j["z"] = z;
    j["h_pd"] = rationals_to_json(r.h_pd);
    j["period_point"] = r.period_point ? rationals_to_json(*r.period_point) : OrderedJson(nullptr);
    j["truncation"] = r.truncation;
    j["method"] = std::string(to_string(r.method));
    return j;
}

OrderedJson series_to_json(const TruncatedMultiPoly& p) {
    OrderedJson j;
    j["num_vars"] = p.num_vars();
    j["cap"] = p.cap();
    OrderedJson terms = OrderedJson::object();
    for (const auto& [e, c] : p.terms()) terms[exponent_key(e)] = to_string(c);
    j["terms"] = terms;
    return j;
}

TruncatedMultiPoly series_from_json(const Json& j) {
    reject_unknown_keys(j, {"num_vars", "cap", "terms"}, "series");
    const auto n = static_cast<std::size_t>(as_natural(require(j, "num_vars", "series"), "series.num_vars"));
    const auto cap = static_cast<std::uint32_t>(as_natural(require(j, "cap", "series"), "series.cap"));
    TruncatedMultiPoly p(n, cap);
    const Json& terms = require(j, "terms", "series");
    if (!terms.is_object()) throw InputError("expected an object", "series.terms");
    for (auto it = terms.begin(); it != terms.end(); ++it) {
        const std::string path = "series.terms." + it.key();
        const Exponents e = with_path(path, [&] { return parse_exponent_key(it.key(), n); });
        if (total_degree(e) > cap) throw InputError("term above the cap", path);
        p.add_term(e, with_path(path, [&] { return parse_rational(as_string(it.value(), path)); }));
    }
    return p;
}

}  // namespace monopole
