/// @file io.hpp
/// @brief JSON manifests, requests and series blocks.
#pragma once

#include "monopole/invariants.hpp"
#include "monopole/manifold.hpp"
#include "monopole/powerseries.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace monopole {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Parses and fully validates; also checks the simple_type claim against the data.
ManifoldData manifest_from_json(const Json& j);
ManifoldData load_manifest(const std::filesystem::path& path);
OrderedJson manifest_to_json(const ManifoldData& x);

struct Request {
    CohClass w;
    CohClass lambda;
    std::optional<std::int64_t> p1;
    MonomialZ z;
    RationalVector h_pd;
    std::optional<RationalVector> period_point;
    std::uint32_t truncation = 0;
    PairingMethod method = PairingMethod::Both;
};

Request request_from_json(const Json& j, const ManifoldData& x);
Request load_request(const std::filesystem::path& path, const ManifoldData& x);
OrderedJson request_to_json(const Request& r);

Json parse_json_file(const std::filesystem::path& path);

std::string_view to_string(PairingMethod m);
PairingMethod parse_method(const std::string& s);

OrderedJson class_to_json(const CohClass& c);
OrderedJson rationals_to_json(const RationalVector& v);
/// {"num_vars": n, "cap": N, "terms": {"e1,e2,...": "p/q"}}
OrderedJson series_to_json(const TruncatedMultiPoly& p);
TruncatedMultiPoly series_from_json(const Json& j);

}  // namespace monopole
