#include "qlr/verify/json_io.hpp"

#include <stdexcept>

namespace qlr {

Json to_json(const QPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) coeffs[std::to_string(e)] = c;
  return Json{{"coeffs", coeffs}};
}

QPoly qpoly_from_json(const Json& j) {
  QPoly p;
  for (const auto& [e, c] : j.at("coeffs").items()) p.add_term(std::stoi(e), c.get<QPoly::Coeff>());
  return p;
}

Json to_json(const Tableau& t) { return Json{{"inner", t.inner}, {"rows", t.rows}}; }

Tableau tableau_from_json(const Json& j) {
  auto rows = j.at("rows").get<std::vector<std::vector<int>>>();
  std::vector<int> inner = j.contains("inner") ? j.at("inner").get<std::vector<int>>() : std::vector<int>{};
  return Tableau(inner, rows);
}

Json to_json(const RectSequence& r) { return Json{{"eta", r.eta()}, {"gamma", r.gamma()}}; }

RectSequence rects_from_json(const Json& j) {
  if (j.is_array()) return RectSequence::from_blocks(j.get<std::vector<Weight>>());
  return RectSequence(j.at("eta").get<Composition>(), j.at("gamma").get<Weight>());
}

Json to_json(const KIndex& k) { return Json{{"lambda", k.lambda}, {"gamma", k.gamma}, {"eta", k.eta}}; }

KIndex kindex_from_json(const Json& j) {
  KIndex k;
  k.lambda = j.at("lambda").get<Weight>();
  if (j.contains("rects")) {
    RectSequence r = rects_from_json(j.at("rects"));
    k.gamma = r.gamma();
    k.eta = r.eta();
  } else {
    k.gamma = j.at("gamma").get<Weight>();
    k.eta = j.at("eta").get<Composition>();
  }
  if (k.lambda.size() < k.gamma.size()) k.lambda.resize(k.gamma.size(), 0);
  if (k.lambda.size() != k.gamma.size()) throw std::invalid_argument("lambda has more parts than the rank");
  return k;
}

}  // namespace qlr
