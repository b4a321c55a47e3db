#include "mostow/serialization.hpp"

#include <stdexcept>

namespace mostow {

namespace {

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("config: complex values are [re, im]");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json matrix_to_json(double m00, double m01, double m10, double m11) {
  return Json::array({Json::array({m00, m01}), Json::array({m10, m11})});
}

void matrix_from_json(const Json& j, double& m00, double& m01, double& m10, double& m11) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
      !j[1].is_array() || j[1].size() != 2)
    throw std::invalid_argument("config: matrix must be [[m00,m01],[m10,m11]]");
  m00 = j[0][0].get<double>();
  m01 = j[0][1].get<double>();
  m10 = j[1][0].get<double>();
  m11 = j[1][1].get<double>();
}

}  // namespace

Json to_json(const MobiusMap& m) {
  return Json{{"kind", "mobius"},
              {"a", complex_to_json(m.a)},
              {"b", complex_to_json(m.b)},
              {"c", complex_to_json(m.c)},
              {"d", complex_to_json(m.d)},
              {"conjugate_first", m.conjugate_first}};
}

MobiusMap mobius_from_json(const Json& j) {
  MobiusMap m;
  m.a = complex_from_json(j.at("a"));
  m.b = complex_from_json(j.at("b"));
  m.c = complex_from_json(j.at("c"));
  m.d = complex_from_json(j.at("d"));
  m.conjugate_first = j.value("conjugate_first", false);
  return m.normalized();
}

Json to_json(const BLMap& H) {
  Json prims = Json::array();
  for (const BLPrimitive& prim : H.primitives) {
    if (const auto* mob = std::get_if<MobiusMap>(&prim)) {
      prims.push_back(to_json(*mob));
    } else {
      const LinearStretch& s = std::get<LinearStretch>(prim);
      prims.push_back(Json{{"kind", "stretch"},
                           {"matrix", matrix_to_json(s.m00, s.m01, s.m10, s.m11)}});
    }
  }
  return Json{{"primitives", prims}, {"K", H.K}};
}

BLMap blmap_from_json(const Json& j) {
  std::vector<BLMap> parts;
  for (const Json& p : j.at("primitives")) {
    std::string kind = p.at("kind").get<std::string>();
    if (kind == "mobius") {
      parts.push_back(make_isometry(mobius_from_json(p)));
    } else if (kind == "stretch") {
      double m00, m01, m10, m11;
      matrix_from_json(p.at("matrix"), m00, m01, m10, m11);
      parts.push_back(make_stretch(m00, m01, m10, m11));
    } else {
      throw std::invalid_argument("config: unknown bl primitive kind '" + kind + "'");
    }
  }
  if (parts.empty()) return BLMap::identity();
  return compose_bl(parts);
}

Json to_json(const BoundaryHomeo& h) {
  Json prims = Json::array();
  for (const BoundaryPrimitive& prim : h.primitives) {
    if (const auto* mob = std::get_if<MobiusMap>(&prim)) {
      prims.push_back(to_json(*mob));
    } else if (const auto* aff = std::get_if<RealAffine>(&prim)) {
      prims.push_back(Json{{"kind", "affine"},
                           {"matrix", matrix_to_json(aff->m00, aff->m01, aff->m10, aff->m11)},
                           {"shift", complex_to_json(aff->shift)}});
    } else if (const auto* pow = std::get_if<RadialPower>(&prim)) {
      prims.push_back(Json{{"kind", "radial_power"}, {"exponent", pow->exponent}});
    } else {
      const Shear& sh = std::get<Shear>(prim);
      prims.push_back(Json{{"kind", "shear"},
                           {"profile", shear_profile_name(sh.profile)},
                           {"sign", sh.sign}});
    }
  }
  return Json{{"primitives", prims}};
}

BoundaryHomeo homeo_from_json(const Json& j) {
  BoundaryHomeo h;
  for (const Json& p : j.at("primitives")) {
    std::string kind = p.at("kind").get<std::string>();
    if (kind == "mobius") {
      h.primitives.emplace_back(mobius_from_json(p));
    } else if (kind == "affine") {
      double m00, m01, m10, m11;
      matrix_from_json(p.at("matrix"), m00, m01, m10, m11);
      Complex shift = p.contains("shift") ? complex_from_json(p.at("shift")) : Complex{};
      h.primitives.emplace_back(RealAffine::from_matrix(m00, m01, m10, m11, shift));
    } else if (kind == "radial_power") {
      double e = p.at("exponent").get<double>();
      if (!(e > 0.0)) throw std::invalid_argument("config: radial_power exponent must be > 0");
      h.primitives.emplace_back(RadialPower{e});
    } else if (kind == "shear") {
      Shear sh;
      sh.profile = shear_profile_by_name(p.at("profile").get<std::string>());
      sh.sign = p.value("sign", 1.0);
      h.primitives.emplace_back(sh);
    } else {
      throw std::invalid_argument("config: unknown homeo primitive kind '" + kind + "'");
    }
  }
  return h;
}

Json to_json(const DyadicSet& s) {
  Json cells = Json::array();
  for (std::uint64_t key : s.keys()) {
    if (s.dim() == 1)
      cells.push_back(Json::array({static_cast<std::uint32_t>(key)}));
    else
      cells.push_back(Json::array({DyadicSet::key_i(key), DyadicSet::key_j(key)}));
  }
  return Json{{"d", s.dim()}, {"L", s.level()}, {"cells", cells}};
}

DyadicSet dyadic_set_from_json(const Json& j) {
  int d = j.at("d").get<int>();
  int level = j.at("L").get<int>();
  DyadicSet s(d, level);
  for (const Json& cell : j.at("cells")) {
    if (!cell.is_array() || cell.size() != static_cast<std::size_t>(d))
      throw std::invalid_argument("config: cell arity must match d");
    if (d == 1)
      s.insert(DyadicSet::key1(cell[0].get<std::uint32_t>()));
    else
      s.insert(DyadicSet::key2(cell[0].get<std::uint32_t>(), cell[1].get<std::uint32_t>()));
  }
  return s;
}

}  // namespace mostow
