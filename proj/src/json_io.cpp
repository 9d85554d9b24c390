#include "bdcluster/json_io.hpp"

namespace bdc {

Json to_json(Label l) { return Json::array({l.row, l.col}); }

Json to_json(const ClusterFunction& f) {
  return Json{{"label", to_json(f.label)},
              {"frozen", f.frozen},
              {"kind", to_string(f.kind)},
              {"polynomial", f.value.to_string()}};
}

Json to_json(const std::vector<ClusterFunction>& cluster) {
  Json out = Json::array();
  for (const auto& f : cluster) out.push_back(to_json(f));
  return out;
}

Json to_json(const ExchangeMatrix& m) {
  Json rows = Json::array(), cols = Json::array();
  for (Label l : m.rows) rows.push_back(to_json(l));
  for (Label l : m.cols) cols.push_back(to_json(l));
  return Json{{"rows", rows}, {"cols", cols}, {"entries", m.b}};
}

Json to_json(const Seed& s) { return Json{{"cluster", to_json(s.cluster)}, {"exchange", to_json(s.exchange)}}; }

Json to_json(const Quiver& q) {
  Json nodes = Json::array(), arcs = Json::array();
  for (Label l : q.nodes()) nodes.push_back(Json{{"label", to_json(l)}, {"frozen", q.is_frozen(l)}});
  for (const auto& [arc, w] : q.arcs()) {
    arcs.push_back(Json{{"from", to_json(arc.first)}, {"to", to_json(arc.second)}, {"weight", w}});
  }
  return Json{{"n", q.n()}, {"nodes", nodes}, {"arcs", arcs}};
}

Json to_json(const QMatrix& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(rational_to_string(m.at(r, c)));
    out.push_back(row);
  }
  return out;
}

Json to_json(const VerificationReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json labels = Json::array();
    for (Label l : w.labels) labels.push_back(to_json(l));
    Json item{{"labels", labels}, {"expected", w.expected}, {"actual", w.actual}};
    if (!w.note.empty()) item["note"] = w.note;
    witnesses.push_back(item);
  }
  Json out{{"check", r.check},
           {"n", r.triple.n},
           {"alpha", r.triple.alpha},
           {"beta", r.triple.beta},
           {"status", r.passed() ? "pass" : "fail"},
           {"witnesses", witnesses},
           {"seconds", r.seconds}};
  if (!r.details.empty()) {
    Json details = Json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    out["details"] = details;
  }
  if (r.omega || r.product) {
    Json labels = Json::array();
    for (Label l : r.labels) labels.push_back(to_json(l));
    out["labels"] = labels;
  }
  if (r.omega) out["omega"] = to_json(*r.omega);
  if (r.product) out["product"] = to_json(*r.product);
  return out;
}

std::vector<ClusterFunction> cluster_from_json(const Json& j) {
  std::vector<ClusterFunction> out;
  for (const auto& item : j) {
    ClusterFunction f;
    f.label = {item.at("label").at(0).get<int>(), item.at("label").at(1).get<int>()};
    f.frozen = item.at("frozen").get<bool>();
    std::string kind = item.at("kind").get<std::string>();
    for (FunctionKind k : {FunctionKind::Standard, FunctionKind::Theta, FunctionKind::Psi, FunctionKind::Mutated}) {
      if (to_string(k) == kind) f.kind = k;
    }
    f.value = parse_poly(item.at("polynomial").get<std::string>());
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace bdc
