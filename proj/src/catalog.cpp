#include "reflectinv/catalog.hpp"

#include <functional>

namespace reflectinv {

std::string Relation::expr() const {
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += '*';
    s += factors[k];
  }
  return s;
}

const RepSeed* CatalogEntry::find_rep(const std::string& rep_name) const {
  for (const auto& r : reps)
    if (r.name == rep_name) return &r;
  return nullptr;
}

const Relation* CatalogEntry::find_relation(const std::string& label) const {
  for (const auto& r : relations)
    if (r.label == label) return &r;
  return nullptr;
}

std::vector<Relation> relation_table() {
  return {
      {"rho2", {"rho3", "rho3"}},   {"rho4", {"rho2", "rho3"}},   {"rho6", {"rho3", "rho5"}},
      {"rho7", {"rho3", "rho10"}},  {"rho8", {"rho2", "rho10"}},  {"rho9", {"rho4", "rho10"}},
      {"rho11", {"rho3", "rho13"}}, {"rho12", {"rho2", "rho13"}}, {"rho14", {"rho4", "rho13"}},
      {"rho16", {"rho3", "rho15"}},
  };
}

namespace {

PolyVec vec(std::initializer_list<const char*> comps) {
  std::vector<Poly> ps;
  for (const char* c : comps) ps.push_back(Poly::parse(c));
  return PolyVec(std::move(ps));
}

Poly P(const char* text) { return Poly::parse(text); }

CatalogEntry make_st8() {
  const Gauss i = Gauss::i();
  const Gauss half_1pi = (Gauss(1) + i) * frac(1, 2);

  CatalogEntry e;
  e.name = "st8";
  e.n = 2;
  QiMatrix t = half_1pi * QiMatrix{{1, 1}, {1, -1}};
  QiMatrix d = QiMatrix::diag({1, i});
  e.generators = {t, d};

  e.reps.push_back({"rho1", {QiMatrix{{1}}, QiMatrix{{1}}}});
  e.reps.push_back({"rho3", {QiMatrix{{-i}}, QiMatrix{{i}}}});
  e.reps.push_back({"rho5", {frac(-1, 2) * QiMatrix{{1, 1}, {3, -1}}, QiMatrix::diag({1, -1})}});
  e.reps.push_back({"rho10", {t, d}});
  e.reps.push_back({"rho13", {i * frac(1, 2) * QiMatrix{{1, 2, 1}, {1, 0, -1}, {1, -2, 1}}, QiMatrix::diag({1, i, -1})}});
  e.reps.push_back({"rho15",
                    {(Gauss(-1) + i) * frac(1, 4) *
                         QiMatrix{{1, 3, 3, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -3, 3, -1}},
                     QiMatrix::diag({1, i, -1, -i})}});
  e.relations = relation_table();

  ExpectedData x;
  x.group_order = 96;
  x.image_orders = {{"rho1", 1}, {"rho3", 4}, {"rho5", 6}, {"rho10", 96}, {"rho13", 48}, {"rho15", 96}};
  x.theta = P("x^8 + 14*x^4*y^4 + y^8");
  x.phi = P("x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
  x.theta_degree = 8;
  x.phi_degree = 12;

  x.modules.push_back({"rho1", {1}, {0}, {vec({"1"})}});
  x.modules.push_back({"rho3", {0, 0, 0, 0, 0, 0, 1}, {6}, {vec({"-x^5*y + x*y^5"})}});
  x.modules.push_back({"rho5",
                       {0, 0, 0, 0, 1, 0, 0, 0, 1},
                       {4, 8},
                       {vec({"x^4 + y^4", "6*x^2*y^2"}), vec({"-x^8 + 10*x^4*y^4 - y^8", "12*x^6*y^2 + 12*x^2*y^6"})}});
  x.modules.push_back({"rho10",
                       {0, 1, 0, 0, 0, 1},
                       {1, 5},
                       {vec({"x", "y"}), vec({"-x^5 + 5*x*y^4", "5*x^4*y - y^5"})}});
  {
    const Poly a = P("x^4 - 5*y^4");
    const Poly b = P("5*x^4 - y^4");
    PolyVec third(std::vector<Poly>{P("-x^2") * pow(a, 2), P("x*y") * b * a, P("-y^2") * pow(b, 2)});
    x.modules.push_back({"rho13",
                         {0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                         {2, 6, 10},
                         {vec({"x^2", "x*y", "y^2"}), vec({"-x^6 + 5*x^2*y^4", "2*x^5*y + 2*x*y^5", "5*x^4*y^2 - y^6"}),
                          third}});
  }
  x.modules.push_back({"rho15",
                       {0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 1},
                       {3, 7, 11, 15},
                       {vec({"x^3", "x^2*y", "x*y^2", "y^3"}),
                        vec({"-x^7 + 5*x^3*y^4", "x^6*y + 3*x^2*y^5", "3*x^5*y^2 + x*y^6", "5*x^4*y^3 - y^7"}),
                        vec({"-6*x^7*y^4 + 6*x^3*y^8", "-x^10*y + x^2*y^9", "x^9*y^2 - x*y^10", "6*x^8*y^3 - 6*x^4*y^7"}),
                        vec({"-24*x^11*y^4 + 24*x^7*y^8", "x^14*y - 7*x^10*y^5 + 3*x^6*y^9 + 3*x^2*y^13",
                             "3*x^13*y^2 + 3*x^9*y^6 - 7*x^5*y^10 + x*y^14", "24*x^8*y^7 - 24*x^4*y^11"})}});
  e.expected = std::move(x);
  return e;
}

}  // namespace

std::vector<std::string> catalog_names() { return {"st8"}; }

CatalogEntry catalog_get(const std::string& name) {
  if (name == "st8") {
    static const CatalogEntry st8 = make_st8();
    return st8;
  }
  throw Error(ErrorKind::UnknownCatalogName, "no catalog entry named '" + name + "'");
}

Representation resolve_rep(const CatalogEntry& entry, const std::string& expr) {
  std::function<Representation(const std::string&, int)> single = [&](const std::string& name, int depth) {
    if (depth > 64) throw Error(ErrorKind::InvalidInput, "relation table is cyclic near '" + name + "'");
    if (const RepSeed* seed = entry.find_rep(name)) return Representation(name, seed->images);
    if (const Relation* rel = entry.find_relation(name)) {
      Representation acc = single(rel->factors.at(0), depth + 1);
      for (std::size_t k = 1; k < rel->factors.size(); ++k) acc = tensor(acc, single(rel->factors[k], depth + 1));
      return Representation(name, acc.gen_images());
    }
    throw Error(ErrorKind::UnknownRepresentation, "unknown representation '" + name + "'");
  };

  std::vector<std::string> names;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= expr.size(); ++k) {
    if (k == expr.size() || expr[k] == '*') {
      std::string part = expr.substr(start, k - start);
      while (!part.empty() && part.front() == ' ') part.erase(part.begin());
      while (!part.empty() && part.back() == ' ') part.pop_back();
      if (part.empty()) throw Error(ErrorKind::UnknownRepresentation, "malformed expression '" + expr + "'");
      names.push_back(part);
      start = k + 1;
    }
  }
  Representation acc = single(names.front(), 0);
  for (std::size_t k = 1; k < names.size(); ++k) acc = tensor(acc, single(names[k], 0));
  if (entry.generators.size() != acc.gen_images().size())
    throw Error(ErrorKind::GeneratorCountMismatch, "'" + expr + "' has the wrong number of generator images");
  return Representation(expr, acc.gen_images());
}

std::vector<std::string> rep_names(const CatalogEntry& entry) {
  std::vector<std::string> names;
  for (const auto& r : entry.reps) names.push_back(r.name);
  for (const auto& r : entry.relations) names.push_back(r.label);
  return names;
}

}  // namespace reflectinv
