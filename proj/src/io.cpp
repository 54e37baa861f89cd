#include "facering/io.hpp"

#include <fstream>
#include <sstream>

#include "facering/errors.hpp"

namespace facering {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SimplicialComplex complex_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("facets")) throw ParseError("complex JSON needs a 'facets' array");
    std::vector<std::vector<Vertex>> facets;
    for (const auto& f : j.at("facets")) {
      std::vector<Vertex> face;
      for (const auto& v : f) face.push_back(v.get<Vertex>());
      facets.push_back(std::move(face));
    }
    std::vector<Vertex> vertices;
    if (j.contains("vertices")) {
      for (const auto& v : j.at("vertices")) vertices.push_back(v.get<Vertex>());
    }
    auto c = SimplicialComplex::from_facets(std::move(facets), vertices);
    if (j.contains("name")) c.name = j.at("name").get<std::string>();
    if (j.contains("meta") && j.at("meta").is_object()) {
      const auto& meta = j.at("meta");
      if (meta.contains("is_simplicial_sphere") && meta.at("is_simplicial_sphere").is_boolean()) {
        c.declared_sphere = meta.at("is_simplicial_sphere").get<bool>();
      }
      if (meta.contains("declared_collapsible") && meta.at("declared_collapsible").is_boolean()) {
        c.declared_collapsible = meta.at("declared_collapsible").get<bool>();
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  }
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["name"] = c.name;
  j["vertices"] = c.vertices();
  j["facets"] = c.facets();
  Json meta = Json::object();
  if (c.declared_sphere) meta["is_simplicial_sphere"] = *c.declared_sphere;
  if (c.declared_collapsible) meta["declared_collapsible"] = *c.declared_collapsible;
  j["meta"] = meta;
  return j;
}

SimplicialComplex load_complex(const std::string& path) {
  const std::string text = read_text_file(path);
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
  return complex_from_json(j);
}

Json matrix_to_json(const ExactMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json t = Json::array();
  for (const auto& e : m.triplets()) t.push_back({e.row, e.col, rational_to_fraction_string(e.value)});
  j["triplets"] = t;
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  try {
    std::vector<Triplet> t;
    for (const auto& e : j.at("triplets")) {
      t.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
                   parse_rational(e.at(2).get<std::string>())});
    }
    return ExactMatrix::from_triplets(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                                      std::move(t));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed matrix JSON: ") + e.what());
  }
}

std::vector<Polynomial> polynomials_from_json(const Json& j) {
  if (j.is_string()) return parse_polynomial_list(j.get<std::string>());
  if (!j.is_array()) throw ParseError("expected a string or an array of polynomial strings");
  std::vector<Polynomial> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("polynomial entries must be strings");
    out.push_back(Polynomial::parse(e.get<std::string>()));
  }
  return out;
}

Json polynomials_to_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

Json fh_to_json(const FHProfile& p) {
  return Json{{"f", p.f}, {"h", p.h}, {"h_degree", p.h_degree}};
}

Json homology_to_json(const HomologyReport& h) {
  Json j;
  j["ranks"] = h.ranks;
  if (h.top_cycle) {
    Json c = Json::array();
    for (const auto& q : *h.top_cycle) c.push_back(rational_to_fraction_string(q));
    j["top_cycle"] = c;
  } else {
    j["top_cycle"] = nullptr;
  }
  return j;
}

Json coloring_to_json(const Coloring& c) {
  Json a = Json::object();
  for (const auto& [v, color] : c.assignment) a[std::to_string(v)] = color;
  return Json{{"k", c.k}, {"assignment", a}};
}

Json collapse_to_json(const CollapseCertificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back({{"free_face", s.free_face}, {"coface", s.coface}});
  return Json{{"steps", steps}, {"residual", complex_to_json(c.residual)}};
}

Json hesd_to_json(const HesdComplex& h) {
  Json j = complex_to_json(h.complex);
  Json labels = Json::object();
  for (std::size_t i = 0; i < h.labels.size(); ++i) labels[std::to_string(i + 1)] = h.labels[i].coords;
  j["labels"] = labels;
  return j;
}

Json incidence_to_json(const IncidenceComplex& ic) {
  Json j = complex_to_json(ic.complex);
  Json labels = Json::object();
  for (std::size_t i = 0; i < ic.faces.size(); ++i) labels[std::to_string(i + 1)] = ic.faces[i];
  j["labels"] = labels;
  return j;
}

Json map_rank_to_json(const MapRank& r) {
  Json j;
  j["degree"] = r.degree;
  j["power"] = r.power;
  j["dim_source"] = r.dim_source;
  j["dim_target"] = r.dim_target;
  j["rank"] = r.rank;
  j["full_rank"] = r.full_rank;
  j["failure_mode"] = failure_mode_name(r.failure_mode);
  if (r.matrix) j["matrix"] = matrix_to_json(*r.matrix);
  return j;
}

Json wlp_to_json(const WlpReport& r) {
  Json per = Json::array();
  for (const auto& m : r.per_degree) per.push_back(map_rank_to_json(m));
  return Json{{"holds", r.holds}, {"per_degree", per}};
}

Json slp_to_json(const SlpReport& r) {
  Json maps = Json::array();
  for (const auto& m : r.maps) maps.push_back(map_rank_to_json(m));
  return Json{{"holds", r.holds}, {"maps", maps}};
}

Json sop_to_json(const SopCandidate& s) {
  return Json{{"theta", polynomials_to_json(s.theta)},
              {"degrees", s.degrees},
              {"total_degree_t", s.total_degree_t}};
}

Json unexpected_to_json(const UnexpectedReport& r) {
  Json j;
  j["u1"] = {{"pass", r.u1},
             {"quotient_hilbert", r.u1_hilbert},
             {"vanishing_degree", r.u1_vanishing_degree ? Json(*r.u1_vanishing_degree) : Json(nullptr)}};
  j["u2"] = {{"pass", r.u2}, {"degree_sum_plus_h_minus_dim", r.u2_lhs}};
  j["u3"] = {{"pass", r.u3}};
  j["u4"] = {{"pass", r.u4}, {"failing_variables", r.u4_failing}};
  j["u5"] = {{"pass", r.u5}, {"hf_t", r.u5_hf_t}, {"hf_t_minus_deg_f", r.u5_hf_t_minus}};
  j["overall"] = r.overall;
  return j;
}

}  // namespace facering
