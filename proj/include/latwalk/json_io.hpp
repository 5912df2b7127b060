#pragma once

#include "latwalk/qperiod.hpp"
#include "latwalk/walks.hpp"

#include "json.hpp"

namespace latwalk {

using Json = nlohmann::ordered_json;

// Canonical sorted-term forms. Rationals travel as "num" or "num/den"
// strings; MPFR values as exact hex-float strings plus a decimal rendering.

inline Json to_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json gens = Json::object();
    for (int i = 0; i < kGenCount; ++i)
      if (e[i] != 0) gens[gen_name(static_cast<Gen>(i))] = e[i];
    terms.push_back({{"gens", gens}, {"coeff", rational_to_string(c)}});
  }
  return Json{{"terms", terms}};
}

inline MultiPoly multipoly_from_json(const Json& j) {
  MultiPoly p;
  for (const auto& t : j.at("terms")) {
    ExpVec e = exp_zero();
    for (const auto& [name, power] : t.at("gens").items()) {
      auto g = gen_from_name(name);
      if (!g) throw std::invalid_argument("unknown generator '" + name + "'");
      e[static_cast<int>(*g)] = static_cast<int16_t>(power.get<int>());
    }
    p.add_term(e, rational_from_string(t.at("coeff").get<std::string>()));
  }
  return p;
}

inline Json to_json(const QLaurent<MultiPoly>& l) {
  Json terms = Json::array();
  for (const auto& [d, c] : l.terms())
    terms.push_back({{"q2", d}, {"poly", to_json(c)}});
  return Json{{"qlaurent", terms}};
}

inline QLaurent<MultiPoly> qlaurent_from_json(const Json& j) {
  QLaurent<MultiPoly> l;
  for (const auto& t : j.at("qlaurent"))
    l.add_term(t.at("q2").get<int>(), multipoly_from_json(t.at("poly")));
  return l;
}

inline Json to_json(const AreaGF& gf) {
  Json entries = Json::array();
  for (const auto& [d, poly] : gf.entries)
    entries.push_back({{"area2", d}, {"poly", to_json(poly)}});
  return Json{{"lattice", lattice_name(gf.lattice)}, {"entries", entries}};
}

inline AreaGF areagf_from_json(const Json& j) {
  AreaGF gf;
  std::string lat = j.at("lattice").get<std::string>();
  if (lat == "square")
    gf.lattice = Lattice::Square;
  else if (lat == "triangular")
    gf.lattice = Lattice::Triangular;
  else if (lat == "chiral-triangular")
    gf.lattice = Lattice::ChiralTriangular;
  else
    throw std::invalid_argument("unknown lattice tag '" + lat + "'");
  for (const auto& e : j.at("entries"))
    gf.add(e.at("area2").get<int>(), multipoly_from_json(e.at("poly")));
  return gf;
}

inline Json to_json(const Complex& c) {
  return Json{{"re", c.re.str()}, {"im", c.im.str()},
              {"re_hex", c.re.hex_str()}, {"im_hex", c.im.hex_str()}};
}

inline Complex complex_from_json(const Json& j) {
  return Complex(Real::parse(j.at("re_hex").get<std::string>()),
                 Real::parse(j.at("im_hex").get<std::string>()));
}

inline Json to_json(const PeriodSeriesSym& t) {
  Json coeffs = Json::array();
  for (int n = 0; n <= t.order(); ++n) coeffs.push_back(to_json(t.coeffs[n]));
  return Json{{"leading", "-log(z)"}, {"order", t.order()}, {"coeffs", coeffs}};
}

inline PeriodSeriesSym period_sym_from_json(const Json& j) {
  PeriodSeriesSym t;
  int order = j.at("order").get<int>();
  t.coeffs = ZSeries<QLaurent<MultiPoly>>(order);
  int n = 0;
  for (const auto& c : j.at("coeffs")) t.coeffs[n++] = qlaurent_from_json(c);
  return t;
}

inline Json to_json(const PeriodSeriesNum& t) {
  Json coeffs = Json::array();
  for (int n = 0; n <= t.order(); ++n) coeffs.push_back(to_json(t.coeffs[n]));
  return Json{{"leading", "-log(z)"}, {"order", t.order()}, {"coeffs", coeffs}};
}

inline PeriodSeriesNum period_num_from_json(const Json& j) {
  PeriodSeriesNum t;
  int order = j.at("order").get<int>();
  t.coeffs = ZSeries<Complex>(order);
  int n = 0;
  for (const auto& c : j.at("coeffs")) t.coeffs[n++] = complex_from_json(c);
  return t;
}

inline Json to_json(const ConjectureReport& r) {
  Json orders = Json::array();
  for (std::size_t n = 0; n < r.max_diff.size(); ++n) {
    Json row{{"order", n}, {"max_diff", r.max_diff[n]}};
    if (r.symbolic) row["exact_zero"] = static_cast<bool>(r.exact_zero[n]);
    orders.push_back(row);
  }
  return Json{{"geometry", geometry_name(r.geometry)},
              {"order", r.order},
              {"mode", r.symbolic ? "symbolic" : "numeric"},
              {"tolerance", r.tolerance},
              {"per_order", orders},
              {"pass", r.pass}};
}

inline Json to_json(const DualityResult& d) {
  return Json{{"energy", d.energy},
              {"dual_energy", d.dual_energy},
              {"stability", d.stability},
              {"char_poly", d.lhs},
              {"dual_char_poly", d.rhs},
              {"residual", d.residual},
              {"fock_dim", d.fock_dim},
              {"precision_bits", d.precision_bits}};
}

} // namespace latwalk
