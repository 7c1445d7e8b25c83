#include "chromhess/json_io.hpp"

#include "chromhess/errors.hpp"

namespace chromhess {

namespace {

Json coeff_list(const QPoly& p) {
  Json list = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    list.push_back(p.coeff(k).fraction_str());
  }
  if (p.is_zero()) list.push_back(Rational(0).fraction_str());
  return list;
}

QPoly poly_from_list(const Json& list) {
  std::vector<Rational> coeffs;
  for (const auto& item : list) {
    coeffs.push_back(Rational::parse(item.get<std::string>()));
  }
  return QPoly(std::move(coeffs));
}

}  // namespace

Json to_json(const QRational& x) {
  return Json{{"num", coeff_list(x.num())}, {"den", coeff_list(x.den())}};
}

QRational qrational_from_json(const Json& j) {
  return QRational(poly_from_list(j.at("num")), poly_from_list(j.at("den")));
}

namespace {

template <typename Element>
Json element_json(const Element& x, const char* basis) {
  Json terms = Json::array();
  for (const auto& [index, coeff] : x.terms()) {
    terms.push_back(Json{{"index", index}, {"coeff", to_json(coeff)}});
  }
  return Json{{"basis", basis}, {"terms", terms}};
}

}  // namespace

Json to_json(const QSymElement& x) { return element_json(x, "M"); }

Json to_json(const SymElementP& x) { return element_json(x, "p"); }

Json frobenius_json(const SymElementP& x, const HessenbergFunction& h,
                    const char* ring) {
  Json j = to_json(x);
  std::vector<int> values;
  for (int v : h.values()) values.push_back(v + 1);
  j["h"] = values;
  j["ring"] = ring;
  return j;
}

Json to_json(const CancellationReport& report) {
  return Json{{"graph", report.graph},
              {"terms", report.terms},
              {"paired", report.paired},
              {"fixed_points", report.fixed_points},
              {"sum", to_json(report.sum)},
              {"base_case", report.base_case},
              {"pass", report.pass}};
}

}  // namespace chromhess
