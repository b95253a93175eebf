// monopole-ledger: command-line front end.

#include "monopole/app.hpp"
#include "monopole/error.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace monopole;

namespace {

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return out;
}

CohClass parse_int_csv(const std::string& s, const char* what) {
    std::vector<Coord> v;
    for (const auto& item : split_csv(s)) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError("not an integer: \"" + item + "\"", what);
        }
    }
    return CohClass(v);
}

RationalVector parse_rational_csv(const std::string& s, const char* what) {
    RationalVector v;
    for (const auto& item : split_csv(s)) {
        try {
            v.push_back(parse_rational(item));
        } catch (const InputError& e) {
            throw InputError(e.message(), what);
        }
    }
    return v;
}

void write_json(const OrderedJson& j, const std::string& path) {
    emit_report(j, path.empty() ? std::nullopt : std::optional<std::filesystem::path>(path), ReportFormat::Json);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Low-degree Donaldson invariants from Seiberg-Witten data, in exact arithmetic"};
    app.require_subcommand(1);

    std::string manifest_path, request_path, out_path, format = "json", method;
    auto* compute = app.add_subcommand("compute", "Evaluate D^w_X(z) and its cross-checks");
    compute->add_option("-m,--manifest", manifest_path, "Manifest JSON")->required();
    compute->add_option("-r,--request", request_path, "Request JSON")->required();
    compute->add_option("--method", method, "Link constant route: closed, direct or both");
    compute->add_option("--out", out_path, "Write the report here instead of stdout");
    compute->add_option("--format", format, "json or table");

    std::string suite;
    std::optional<std::int64_t> grid_bound;
    bool literal_segre = false;
    std::uint64_t seed = CheckOptions{}.seed;
    auto* check = app.add_subcommand("check", "Run a property suite");
    check->add_option("--suite", suite, "identities, segre, pairing, blowup, witten, structure, walls or all");
    check->add_option("--grid-bound", grid_bound, "Suite-specific size, see --help-grid");
    check->add_flag("--literal-segre", literal_segre, "Start the Segre closed form at j = 1");
    check->add_option("--seed", seed, "Seed for the random suites");
    check->add_option("--out", out_path, "Write the report here instead of stdout");
    check->add_option("--format", format, "json or table");
    bool help_grid = false;
    check->add_flag("--help-grid", help_grid, "Describe --grid-bound per suite and exit");

    std::string w_csv, lambda_csv, omega_csv;
    std::int64_t p1 = 0, level_max = 0, bound = 0;
    auto* walls = app.add_subcommand("walls", "Enumerate (w, p1)-walls for b2+ = 1");
    walls->add_option("-m,--manifest", manifest_path, "Manifest JSON")->required();
    walls->add_option("--w", w_csv, "Comma-separated integers")->required();
    walls->add_option("--p1", p1, "p1 of the spin-u structure")->required();
    walls->add_option("--level-max", level_max, "Largest level")->required();
    walls->add_option("--bound", bound, "Coefficient bound")->required();
    walls->add_option("--lambda", lambda_csv, "c1(t); defaults to w - w2");
    walls->add_option("--omega", omega_csv, "Period point, comma-separated rationals");
    walls->add_option("--out", out_path, "Write the report here instead of stdout");
    walls->add_option("--format", format, "json or table");

    std::string kind, request_out;
    std::int64_t n = 3;
    auto* fixture = app.add_subcommand("fixture", "Write a synthetic manifest");
    fixture->add_option("--kind", kind, "empty, k3_like, en_like or asymmetric")->required();
    fixture->add_option("--n", n, "n for en_like");
    fixture->add_option("--out", out_path, "Manifest path (stdout if omitted)");
    fixture->add_option("--request-out", request_out, "Also write a matching request here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : exit_code(ErrorKind::Input);
    }

    try {
        const std::optional<std::filesystem::path> out =
            out_path.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_path);
        Outcome result;
        if (*compute) {
            const ManifoldData x = load_manifest(manifest_path);
            Request req = load_request(request_path, x);
            if (!method.empty()) req.method = parse_method(method);
            result = run_compute(x, req);
        } else if (*check) {
            if (help_grid) {
                std::cout << suite_grid_help();
                return 0;
            }
            if (suite.empty()) throw InputError("--suite is required", "suite");
            CheckOptions opts;
            opts.grid_bound = grid_bound;
            opts.literal_segre = literal_segre;
            opts.seed = seed;
            result = run_check(suite, opts);
        } else if (*walls) {
            const ManifoldData x = load_manifest(manifest_path);
            WallsRequest wr;
            wr.w = parse_int_csv(w_csv, "w");
            wr.p1 = p1;
            wr.level_max = level_max;
            wr.bound = bound;
            if (!lambda_csv.empty()) wr.lambda = parse_int_csv(lambda_csv, "lambda");
            if (!omega_csv.empty()) wr.omega = parse_rational_csv(omega_csv, "omega");
            result = run_walls(x, wr);
        } else {
            const FixtureKind k = parse_fixture_kind(kind);
            const ManifoldData x = gen_fixture(k, n);
            write_json(manifest_to_json(x), out_path);
            if (!request_out.empty()) write_json(request_to_json(fixture_request(x)), request_out);
            return 0;
        }
        emit_report(result.report, out, parse_format(format));
        return result.exit_code;
    } catch (const Error& e) {
        std::cerr << "error";
        if (!e.path().empty()) std::cerr << " at " << e.path();
        std::cerr << ": " << e.message() << "\n";
        return exit_code(e.kind());
    }
}
