#pragma once

#include "json.hpp"

#include "bdcluster/verify.hpp"

namespace bdc {

using Json = nlohmann::ordered_json;

Json to_json(Label l);
Json to_json(const ClusterFunction& f);
Json to_json(const std::vector<ClusterFunction>& cluster);
Json to_json(const ExchangeMatrix& m);
Json to_json(const Seed& s);
Json to_json(const Quiver& q);
Json to_json(const QMatrix& m);
Json to_json(const VerificationReport& r);

// Parses a cluster array back; polynomials go through parse_poly.
std::vector<ClusterFunction> cluster_from_json(const Json& j);

}  // namespace bdc
