#include "brauer/serialize.hpp"

#include <limits>
#include <stdexcept>

namespace brauer {

Json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.sorted_terms()) terms.push_back(Json::array({e, to_json(c)}));
  return {{"terms", terms}};
}

Json to_json(const Diagram& d) {
  Json pairs = Json::array();
  for (auto [a, b] : d.pairs()) pairs.push_back(Json::array({a, b}));
  return {{"n", d.strands()}, {"pairs", pairs}};
}

Json to_json(const Monomial& m) {
  Json j = to_json(m.diagram);
  j["delta_exp"] = m.delta_exp;
  return j;
}

Json to_json(const WordA& w) { return tokens(w); }
Json to_json(const WordC& w) { return tokens(w); }
Json to_json(const RootA& r) { return Json::array({r.i, r.j}); }

Json to_json(const AdmissibleSetA& b) {
  Json out = Json::array();
  for (const auto& r : b.roots()) out.push_back(to_json(r));
  return out;
}

Json to_json(const RootC& r) {
  return {{"coeffs", r.coeffs}, {"norm", r.norm == RootNorm::Long ? "long" : "short"}};
}

Json to_json(const NormalForm& nf, const WeylGroup& w) {
  return {{"k", nf.k},
          {"i", nf.i},
          {"p", nf.p},
          {"pp", nf.pp},
          {"u_word", to_json(w[nf.u].word)},
          {"v_word", to_json(w[nf.v].word)},
          {"w_word", to_json(w[nf.w].word)}};
}

Json to_json(const UVWDecomposition& d) {
  return {{"k", d.k}, {"B", to_json(d.B)}, {"U", to_json(d.U)}, {"V", to_json(d.V)}, {"W", to_json(d.W)}};
}

Json to_json(const CellDatum& datum, const WeylGroup& w) {
  Json layers = Json::array();
  for (const auto& layer : datum.layers) {
    Json T = Json::array();
    for (const auto& x : layer.T)
      T.push_back({{"u_word", to_json(w[x.u].word)}, {"strip", to_json(e_strip(layer.i, x.p))},
                   {"s_word", to_json(w[x.s].word)}});
    Json C = Json::array();
    for (const auto& row : layer.C) {
      Json r = Json::array();
      for (const auto& m : row) r.push_back(to_json(m));
      C.push_back(std::move(r));
    }
    layers.push_back({{"i", layer.i}, {"T", std::move(T)}, {"C", std::move(C)}});
  }
  return {{"n", datum.n}, {"lambda", datum.lambda}, {"order", "B_a > B_b iff a < b"}, {"layers", layers}};
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json j = {{"name", c.name}, {"instance", c.instance}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
  }
  return {{"title", r.title()},
          {"passed", r.passed()},
          {"total", r.size()},
          {"failures", r.failures()},
          {"checks", std::move(checks)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  LaurentPoly p;
  for (const auto& t : j.at("terms")) {
    const Json& c = t.at(1);
    BigInt v = c.is_string() ? BigInt(c.get<std::string>()) : BigInt(c.get<std::int64_t>());
    p += LaurentPoly::monomial(t.at(0).get<int>(), v);
  }
  return p;
}

Diagram diagram_from_json(const Json& j) {
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : j.at("pairs")) pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
  return Diagram::from_pairs(j.at("n").get<int>(), pairs);
}

Monomial monomial_from_json(const Json& j) {
  return {j.value("delta_exp", 0), diagram_from_json(j)};
}

}  // namespace brauer
