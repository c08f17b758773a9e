#include "reflectinv/groupfile.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace reflectinv {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::InvalidInput, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t as_count(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

Gauss as_entry(const Json& j, const std::string& where) {
  std::string text = as_string(j, where);
  try {
    return gauss_parse(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, where + ": " + e.what());
  }
}

QiMatrix as_matrix(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw Error(ErrorKind::DimensionMismatch, where + ": expected " + std::to_string(n) + " rows");
  QiMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw Error(ErrorKind::DimensionMismatch, where + ": row " + std::to_string(r) + " needs " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) m(r, c) = as_entry(row[c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  }
  return m;
}

// Representation images may have any common size; it is read off the first.
std::vector<QiMatrix> as_images(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) bad(where, "expected a non-empty list of matrices");
  if (!j[0].is_array() || j[0].empty()) bad(where, "expected a matrix");
  std::size_t m = j[0].size();
  std::vector<QiMatrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_matrix(j[k], m, where + "[" + std::to_string(k) + "]"));
  return out;
}

Poly as_poly(const Json& j, std::size_t n, const std::string& where) {
  std::string text = as_string(j, where);
  try {
    return Poly::parse(text, n);
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, where + ": " + e.what());
  }
}

std::vector<unsigned> as_degrees(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected a list of integers");
  std::vector<unsigned> out;
  for (const auto& x : j) out.push_back(static_cast<unsigned>(as_count(x, where)));
  return out;
}

ExpectedData as_expected(const Json& j, std::size_t n) {
  const std::string w = "expected";
  ExpectedData x;
  x.group_order = as_count(field(j, "group_order", w), w + ".group_order");
  const Json& orders = field(j, "image_orders", w);
  if (!orders.is_object()) bad(w + ".image_orders", "expected an object");
  for (const auto& [k, v] : orders.items()) x.image_orders.emplace_back(k, as_count(v, w + ".image_orders." + k));
  x.theta = as_poly(field(j, "theta", w), n, w + ".theta");
  x.phi = as_poly(field(j, "phi", w), n, w + ".phi");
  auto prim = as_degrees(field(j, "prim_degrees", w), w + ".prim_degrees");
  if (prim.size() != 2) bad(w + ".prim_degrees", "expected two degrees");
  x.theta_degree = prim[0];
  x.phi_degree = prim[1];
  const Json& mods = field(j, "modules", w);
  if (!mods.is_array()) bad(w + ".modules", "expected a list");
  for (std::size_t k = 0; k < mods.size(); ++k) {
    const std::string wm = w + ".modules[" + std::to_string(k) + "]";
    ExpectedModule m;
    m.rep = as_string(field(mods[k], "rep", wm), wm + ".rep");
    const Json& num = field(mods[k], "numerator", wm);
    if (!num.is_array()) bad(wm + ".numerator", "expected a list of coefficients");
    for (const auto& c : num) {
      Gauss g = as_entry(c, wm + ".numerator");
      if (!g.is_integer() || !g.re().get_num().fits_slong_p()) bad(wm + ".numerator", "coefficients must be integers");
      m.numerator.push_back(g.re().get_num().get_si());
    }
    m.generator_degrees = as_degrees(field(mods[k], "generator_degrees", wm), wm + ".generator_degrees");
    const Json& gens = field(mods[k], "generators", wm);
    if (!gens.is_array()) bad(wm + ".generators", "expected a list of vectors");
    for (std::size_t v = 0; v < gens.size(); ++v) {
      const std::string wv = wm + ".generators[" + std::to_string(v) + "]";
      if (!gens[v].is_array()) bad(wv, "expected a list of polynomials");
      std::vector<Poly> comps;
      for (const auto& p : gens[v]) comps.push_back(as_poly(p, n, wv));
      m.generators.emplace_back(std::move(comps));
    }
    x.modules.push_back(std::move(m));
  }
  return x;
}

Json matrix_json(const QiMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(gauss_print(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

CatalogEntry parse_group_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("document", "expected an object");

  CatalogEntry e;
  e.name = doc.contains("name") ? as_string(doc["name"], "name") : "file";
  e.n = as_count(field(doc, "n", "document"), "n");
  if (e.n == 0) bad("n", "must be positive");

  const Json& gens = field(doc, "generators", "document");
  if (!gens.is_array() || gens.empty()) bad("generators", "expected a non-empty list of matrices");
  for (std::size_t k = 0; k < gens.size(); ++k)
    e.generators.push_back(as_matrix(gens[k], e.n, "generators[" + std::to_string(k) + "]"));

  const Json& reps = field(doc, "representations", "document");
  if (!reps.is_object()) bad("representations", "expected an object of named image lists");
  for (const auto& [name, images] : reps.items()) {
    RepSeed seed{name, as_images(images, "representations." + name)};
    if (seed.images.size() != e.generators.size())
      throw Error(ErrorKind::GeneratorCountMismatch, "representations." + name + ": " + std::to_string(seed.images.size()) +
                                                         " images for " + std::to_string(e.generators.size()) + " generators");
    e.reps.push_back(std::move(seed));
  }

  if (doc.contains("relations")) {
    const Json& rels = doc["relations"];
    if (!rels.is_object()) bad("relations", "expected an object of label -> expression");
    for (const auto& [label, expr] : rels.items()) {
      Relation rel{label, {}};
      std::string s = as_string(expr, "relations." + label);
      std::stringstream ss(s);
      for (std::string part; std::getline(ss, part, '*');) {
        if (part.empty()) bad("relations." + label, "malformed expression '" + s + "'");
        rel.factors.push_back(part);
      }
      if (rel.factors.empty()) bad("relations." + label, "empty expression");
      e.relations.push_back(std::move(rel));
    }
  }

  if (doc.contains("expected")) e.expected = as_expected(doc["expected"], e.n);
  return e;
}

CatalogEntry load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_json(buf.str());
}

std::string export_group_json(const CatalogEntry& entry) {
  Json doc;
  doc["name"] = entry.name;
  doc["n"] = entry.n;
  doc["generators"] = Json::array();
  for (const auto& g : entry.generators) doc["generators"].push_back(matrix_json(g));
  doc["representations"] = Json::object();
  for (const auto& r : entry.reps) {
    Json images = Json::array();
    for (const auto& m : r.images) images.push_back(matrix_json(m));
    doc["representations"][r.name] = std::move(images);
  }
  if (!entry.relations.empty()) {
    doc["relations"] = Json::object();
    for (const auto& r : entry.relations) doc["relations"][r.label] = r.expr();
  }
  if (entry.expected) {
    const ExpectedData& x = *entry.expected;
    Json ex;
    ex["group_order"] = x.group_order;
    ex["image_orders"] = Json::object();
    for (const auto& [name, order] : x.image_orders) ex["image_orders"][name] = order;
    ex["theta"] = x.theta.str();
    ex["phi"] = x.phi.str();
    ex["prim_degrees"] = {x.theta_degree, x.phi_degree};
    ex["modules"] = Json::array();
    for (const auto& m : x.modules) {
      Json jm;
      jm["rep"] = m.rep;
      jm["numerator"] = Json::array();
      for (long c : m.numerator) jm["numerator"].push_back(std::to_string(c));
      jm["generator_degrees"] = m.generator_degrees;
      jm["generators"] = Json::array();
      for (const auto& v : m.generators) {
        Json comps = Json::array();
        for (const auto& p : v) comps.push_back(p.str());
        jm["generators"].push_back(std::move(comps));
      }
      ex["modules"].push_back(std::move(jm));
    }
    doc["expected"] = std::move(ex);
  }
  return doc.dump(2) + "\n";
}

}  // namespace reflectinv
