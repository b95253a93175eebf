// pybind11 module monopole_ledger._core. Reports cross the boundary as JSON text; the
// Python package turns them into dicts.

#include "monopole/app.hpp"
#include "monopole/combinatorics.hpp"
#include "monopole/error.hpp"
#include "monopole/powerseries.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace monopole;

namespace {

std::pair<std::string, int> as_pair(const Outcome& o) { return {render(o.report, ReportFormat::Json), o.exit_code}; }

std::pair<std::string, int> compute(const std::string& manifest, const std::string& request,
                                    std::optional<std::string> method) {
    const ManifoldData x = manifest_from_json(Json::parse(manifest));
    Request req = request_from_json(Json::parse(request), x);
    if (method) req.method = parse_method(*method);
    return as_pair(run_compute(x, req));
}

std::pair<std::string, int> check(const std::string& suite, std::optional<std::int64_t> grid_bound,
                                  bool literal_segre, std::uint64_t seed) {
    CheckOptions opts;
    opts.grid_bound = grid_bound;
    opts.literal_segre = literal_segre;
    opts.seed = seed;
    return as_pair(run_check(suite, opts));
}

RationalVector rationals(const std::vector<std::string>& v) {
    RationalVector out;
    for (const auto& s : v) out.push_back(parse_rational(s));
    return out;
}

std::pair<std::string, int> walls(const std::string& manifest, const std::vector<Coord>& w, std::int64_t p1,
                                  std::int64_t level_max, Coord bound, std::optional<std::vector<Coord>> lambda,
                                  std::optional<std::vector<std::string>> omega) {
    const ManifoldData x = manifest_from_json(Json::parse(manifest));
    WallsRequest req;
    req.w = CohClass(w);
    req.p1 = p1;
    req.level_max = level_max;
    req.bound = bound;
    if (lambda) req.lambda = CohClass(*lambda);
    if (omega) req.omega = rationals(*omega);
    return as_pair(run_walls(x, req));
}

std::pair<std::string, std::string> fixture(const std::string& kind, std::int64_t n) {
    const ManifoldData x = gen_fixture(parse_fixture_kind(kind), n);
    return {manifest_to_json(x).dump(2) + "\n", request_to_json(fixture_request(x)).dump(2) + "\n"};
}

std::vector<std::string> strings(const std::vector<Rational>& v) {
    std::vector<std::string> out;
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact low-degree Donaldson/Seiberg-Witten bookkeeping";

    static py::exception<Error> base(m, "MonopoleError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = base;
            py::object inst = exc(e.message(), exit_code(e.kind()), e.path());
            PyErr_SetObject(base.ptr(), inst.ptr());
        }
    });

    m.def("compute", &compute, py::arg("manifest"), py::arg("request"), py::arg("method") = py::none(),
          "Run the main formula and its cross-checks. Returns (report JSON, exit code).");
    m.def("check", &check, py::arg("suite"), py::arg("grid_bound") = py::none(), py::arg("literal_segre") = false,
          py::arg("seed") = CheckOptions{}.seed, "Run a property suite. Returns (report JSON, exit code).");
    m.def("walls", &walls, py::arg("manifest"), py::arg("w"), py::arg("p1"), py::arg("level_max"), py::arg("bound"),
          py::arg("lambda_") = py::none(), py::arg("omega") = py::none(),
          "Enumerate walls for b2+ = 1. Returns (report JSON, exit code).");
    m.def("fixture", &fixture, py::arg("kind"), py::arg("n") = 3,
          "Synthetic manifest and matching request, both as JSON text.");
    m.def("suite_names", &suite_names);

    m.def("link_constant_direct",
          [](std::int64_t ns2, std::int64_t ns1, std::int64_t dp, std::uint64_t d) {
              return to_string(link_constant_direct(ns2, ns1, dp, d));
          },
          py::arg("ns2"), py::arg("ns1"), py::arg("delta_p"), py::arg("d"));
    m.def("link_constant_closed",
          [](std::int64_t ns2, std::int64_t ns1, std::int64_t dp, std::uint64_t d) {
              return to_string(link_constant_closed(ns2, ns1, dp, d));
          },
          py::arg("ns2"), py::arg("ns1"), py::arg("delta_p"), py::arg("d"));
    m.def("jacobi",
          [](std::int64_t a, std::int64_t b, std::uint64_t n, const std::string& xi) {
              return to_string(jacobi_standard({a, b, n, parse_rational(xi)}));
          },
          py::arg("a"), py::arg("b"), py::arg("n"), py::arg("xi"));
    m.def("segre_classes",
          [](std::int64_t ns1, std::int64_t ns2, std::uint32_t imax) { return strings(segre_classes(ns1, ns2, imax)); },
          py::arg("ns1"), py::arg("ns2"), py::arg("imax"));
}
