#include "monopole/app.hpp"
#include "monopole/error.hpp"
#include "monopole/io.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace monopole;
namespace fs = std::filesystem;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Json minimal_manifest() {
    return Json::parse(R"({"name": "minimal", "b1": 0, "b2_plus": 1, "b2_minus": 1,
        "gram": [[0, 1], [1, 0]], "w2": [0, 0], "basic_classes": [],
        "simple_type": true, "effective": true})");
}

std::string rejection_path(const Json& j) {
    try {
        manifest_from_json(j);
    } catch (const Error& e) {
        return e.path();
    }
    return "<accepted>";
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("monopole_unit_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

int run(const std::string& args) {
    const std::string cmd = std::string(MONOPOLE_CLI) + " " + args + " >/dev/null 2>&1";
    const int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

}  // namespace

TEST_CASE("manifest loading") {
    const auto x = manifest_from_json(minimal_manifest());
    CHECK(x.chi() == 4);
    CHECK(x.sigma() == 0);
    CHECK(c_invariant(x) == -7);

    auto asym = minimal_manifest();
    asym["gram"] = Json::parse("[[0, 1], [2, 0]]");
    CHECK(rejection_path(asym) == "gram");

    auto unknown = minimal_manifest();
    unknown["colour"] = "red";
    CHECK(rejection_path(unknown) == "colour");

    auto j = manifest_to_json(gen_fixture(FixtureKind::EnLike, 3));
    Json plain = Json::parse(j.dump());
    plain["basic_classes"][0]["c1"][2] = 2;  // no longer characteristic
    CHECK(rejection_path(plain) == "basic_classes[0].c1");

    auto claim = Json::parse(j.dump());
    claim["simple_type"] = false;
    CHECK(rejection_path(claim) == "simple_type");

    auto sig = minimal_manifest();
    sig["b2_plus"] = 2;
    sig["b2_minus"] = 0;
    CHECK(rejection_path(sig) != "<accepted>");

    auto b1 = minimal_manifest();
    b1["b1"] = 1;
    CHECK(rejection_path(b1) != "<accepted>");
}

TEST_CASE("manifest and request round-trip through JSON") {
    for (auto kind : {FixtureKind::Empty, FixtureKind::K3Like, FixtureKind::EnLike, FixtureKind::Asymmetric}) {
        const auto x = gen_fixture(kind, 3);
        const auto j = manifest_to_json(x);
        const auto y = manifest_from_json(Json::parse(j.dump()));
        CHECK(manifest_to_json(y).dump() == j.dump());
        const auto req = fixture_request(x);
        const auto rj = request_to_json(req);
        const auto req2 = request_from_json(Json::parse(rj.dump()), x);
        CHECK(request_to_json(req2).dump() == rj.dump());
    }
}

TEST_CASE("series blocks round-trip") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        TruncatedMultiPoly p(3, 4);
        for (int k = 0; k < 8; ++k)
            p.add_term({static_cast<std::uint32_t>(rng() % 3), static_cast<std::uint32_t>(rng() % 2), 0},
                       r(static_cast<std::int64_t>(rng() % 13) - 6, 1 + static_cast<std::int64_t>(rng() % 4)));
        const auto j = series_to_json(p);
        const auto q = series_from_json(Json::parse(j.dump()));
        CHECK(q == p);
        CHECK(series_to_json(q).dump() == j.dump());
    }
}

TEST_CASE("run_compute reports") {
    const auto x = gen_fixture(FixtureKind::EnLike, 3);
    const auto req = fixture_request(x);
    const auto out = run_compute(x, req);
    CHECK(out.exit_code == 0);
    const auto& d = out.report["donaldson"];
    CHECK(d["case"] == "AT_R");
    const std::string v = d["value"];
    CHECK(v.find('/') != std::string::npos);
    CHECK(parse_rational(v) == *donaldson_invariant(x, {req.lambda, 0, req.w}, req.z, req.h_pd, std::nullopt).value);
    CHECK(render(out.report, ReportFormat::Json) == render(run_compute(x, req).report, ReportFormat::Json));
    CHECK(render(out.report, ReportFormat::Table).find("AT_R") != std::string::npos);

    // mod-8 violating degree
    auto bad = req;
    bad.z.delta2 = req.z.delta2 + 1;
    const auto m8 = run_compute(x, bad);
    CHECK(m8.exit_code == 0);
    CHECK(m8.report["donaldson"]["case"] == "MOD8_FAIL");
    CHECK(m8.report["donaldson"]["value"] == "0/1");

    // b2+ = 1 without a period point
    const auto m = manifest_from_json(minimal_manifest());
    Request rq;
    rq.w = CohClass({1, 0});
    rq.lambda = CohClass({1, 0});
    rq.p1 = 0;
    rq.h_pd = {r(1), r(1)};
    try {
        run_compute(m, rq);
        FAIL("expected a hypothesis failure");
    } catch (const Error& e) {
        CHECK(exit_code(e.kind()) == 2);
    }
}

TEST_CASE("command line exit codes and determinism") {
    const auto dir = scratch();
    const auto man = (dir / "en3.json").string();
    const auto req = (dir / "en3_req.json").string();
    REQUIRE(run("fixture --kind en_like --n 3 --out " + man + " --request-out " + req) == 0);
    CHECK(run("compute -m " + man + " -r " + req + " --out " + (dir / "a.json").string()) == 0);
    CHECK(run("compute -m " + man + " -r " + req + " --out " + (dir / "b.json").string()) == 0);
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
    CHECK(run("compute -m " + man + " -r " + req + " --format table --out " + (dir / "t.txt").string()) == 0);

    write(dir / "broken.json", "{ not json");
    CHECK(run("compute -m " + (dir / "broken.json").string() + " -r " + req) == 1);
    CHECK(run("compute -m " + man + " -r " + (dir / "missing.json").string()) == 1);

    write(dir / "min.json", minimal_manifest().dump());
    write(dir / "min_req.json", R"({"w": [1, 0], "lambda": [1, 0], "p1": 0, "z": {"delta0": 0, "delta1": 0, "delta2": 0},
        "h_pd": ["1", "1"], "truncation": 0, "method": "both"})");
    CHECK(run("compute -m " + (dir / "min.json").string() + " -r " + (dir / "min_req.json").string()) == 2);

    CHECK(run("check --suite segre") == 0);
    CHECK(run("check --suite segre --literal-segre") == 3);
    CHECK(run("check --suite nosuch") == 1);
    CHECK(run("walls -m " + (dir / "min.json").string() + " --w 1,1 --p1 -2 --level-max 1 --bound 2 --omega 2,1") == 0);
    CHECK(run("fixture --kind nosuch --out " + (dir / "x.json").string()) == 1);
    CHECK(run("check --help-grid") == 0);
    CHECK(run("check") == 1);
    fs::remove_all(dir);
}
