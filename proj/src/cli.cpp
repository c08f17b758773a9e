#include "reflectinv/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "reflectinv/catalog.hpp"
#include "reflectinv/equivar.hpp"
#include "reflectinv/groupfile.hpp"
#include "reflectinv/molien.hpp"
#include "reflectinv/rep.hpp"
#include "reflectinv/verify.hpp"

namespace reflectinv {

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonTerminatingNumerator:
    case ErrorKind::FreenessViolation:
    case ErrorKind::MethodDisagreement:
    case ErrorKind::NonIntegralCoefficient:
    case ErrorKind::NonUnitConstantTerm:
    case ErrorKind::NoSuchDegrees:
    case ErrorKind::NotOneDimensional:
    case ErrorKind::ZeroVector:
    case ErrorKind::Internal:
      return kExitMath;
    default:
      return kExitInput;
  }
}

namespace {

using Json = nlohmann::ordered_json;

constexpr unsigned kDefaultMaxDegree = 40;

struct Options {
  std::string catalog;
  std::string file;
  std::string rep;
  std::optional<unsigned> degree;
  std::optional<unsigned> max_degree;
  std::vector<unsigned> denom;
  std::vector<unsigned> prim_degrees;
  std::string method;
  bool json = false;
  std::size_t cap = kDefaultGroupCap;
};

CatalogEntry load_source(const Options& o) {
  if (!o.file.empty()) return load_group_file(o.file);
  return catalog_get(o.catalog.empty() ? "st8" : o.catalog);
}

unsigned max_degree(const Options& o) {
  if (o.max_degree) return *o.max_degree;
  if (const char* env = std::getenv("REFLECTINV_MAX_DEGREE")) {
    std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6)
      throw Error(ErrorKind::InvalidInput, "REFLECTINV_MAX_DEGREE must be a non-negative integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
  }
  return kDefaultMaxDegree;
}

Method method_or(const Options& o, Method fallback) {
  return o.method.empty() ? fallback : parse_method(o.method);
}

std::optional<std::pair<unsigned, unsigned>> prim_degrees(const Options& o) {
  if (o.prim_degrees.empty()) return std::nullopt;
  if (o.prim_degrees.size() != 2) throw Error(ErrorKind::InvalidInput, "--prim-degrees takes exactly two degrees");
  return std::make_pair(o.prim_degrees[0], o.prim_degrees[1]);
}

Json series_json(const TruncatedSeries& s) {
  Json arr = Json::array();
  for (const auto& c : s.coeffs()) arr.push_back(gauss_print(c));
  return arr;
}

std::string word_text(const std::vector<std::size_t>& word) {
  if (word.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) s += (k ? "*g" : "g") + std::to_string(word[k] + 1);
  return s;
}

int cmd_order(const Options& o, std::ostream& out) {
  CatalogEntry e = load_source(o);
  if (o.rep.empty()) {
    MatrixGroup g = close(e.generators, o.cap);
    out << g.order() << '\n';
  } else {
    out << image_group(resolve_rep(e, o.rep), o.cap).order() << '\n';
  }
  return kExitOk;
}

int cmd_molien(const Options& o, std::ostream& out) {
  CatalogEntry e = load_source(o);
  MatrixGroup g = close(e.generators, o.cap);
  const unsigned n = max_degree(o);
  std::optional<Representation> rep;
  if (!o.rep.empty()) rep = rep_extend(resolve_rep(e, o.rep), g);
  TruncatedSeries s = rep ? molien_equivariant(g, *rep, n) : molien_scalar(g, n);
  std::optional<HilbertData> hd;
  if (!o.denom.empty()) hd = numerator_wrt(s, o.denom);

  if (o.json) {
    Json j;
    j["rep"] = rep ? rep->label() : "invariants";
    j["max_degree"] = n;
    j["series"] = series_json(s);
    if (hd) {
      j["denominator_degrees"] = hd->denominator_degrees;
      Json num = Json::array();
      for (const auto& c : hd->numerator) num.push_back(c.get_str());
      j["numerator"] = std::move(num);
      j["closed_form"] = hd->str();
      j["verified_to"] = hd->verified_to;
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << s.str() << '\n';
  if (hd) {
    out << hd->str() << '\n';
    out << "numerator: " << hd->numerator_str() << '\n';
  }
  return kExitOk;
}

int cmd_equivariants(const Options& o, std::ostream& out) {
  if (!o.degree) throw Error(ErrorKind::InvalidInput, "equivariants needs --degree");
  CatalogEntry e = load_source(o);
  MatrixGroup g = close(e.generators, o.cap);
  Representation rep = rep_extend(resolve_rep(e, o.rep.empty() ? "rho1" : o.rep), g);
  EquivariantSolver solver(g, rep);
  EquivariantSpace space = solver.space(*o.degree, method_or(o, Method::Crosscheck));
  if (o.json) {
    Json j;
    j["rep"] = rep.label();
    j["degree"] = *o.degree;
    j["dim"] = space.dim();
    Json basis = Json::array();
    for (const auto& v : space.basis) {
      Json comps = Json::array();
      for (const auto& p : v) comps.push_back(p.str());
      basis.push_back(std::move(comps));
    }
    j["basis"] = std::move(basis);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << "dim " << space.dim() << '\n';
  for (const auto& v : space.basis) out << v.str() << '\n';
  return kExitOk;
}

int cmd_generators(const Options& o, std::ostream& out) {
  CatalogEntry e = load_source(o);
  MatrixGroup g = close(e.generators, o.cap);
  Representation rep = rep_extend(resolve_rep(e, o.rep.empty() ? "rho1" : o.rep), g);
  PrimaryInvariants prim = primary_invariants(g, prim_degrees(o));
  EquivariantSolver solver(g, rep);
  ModuleGenerators gens = module_generators(solver, prim, max_degree(o), true, method_or(o, Method::Crosscheck));
  if (o.json) {
    Json j;
    j["rep"] = rep.label();
    j["prim_degrees"] = {prim.theta_degree, prim.phi_degree};
    j["theta"] = prim.theta.str();
    j["phi"] = prim.phi.str();
    j["verified_to"] = gens.verified_to;
    Json arr = Json::array();
    for (const auto& gen : gens.gens) {
      Json comps = Json::array();
      for (const auto& p : gen.vec) comps.push_back(p.str());
      arr.push_back({{"degree", gen.degree}, {"components", std::move(comps)}});
    }
    j["generators"] = std::move(arr);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << rep.label() << ": " << gens.gens.size() << " generators over theta, phi of degrees " << prim.theta_degree
      << ", " << prim.phi_degree << '\n';
  for (const auto& gen : gens.gens) out << "degree " << gen.degree << ": " << gen.vec.str() << '\n';
  return kExitOk;
}

int cmd_character(const Options& o, std::ostream& out) {
  CatalogEntry e = load_source(o);
  MatrixGroup g = close(e.generators, o.cap);
  Representation rep = rep_extend(resolve_rep(e, o.rep.empty() ? "rho1" : o.rep), g);
  Character ch = character(rep);
  Gauss inner = char_inner(ch, ch, g);
  if (o.json) {
    Json j;
    j["rep"] = rep.label();
    j["degree"] = rep.degree();
    j["inner_product"] = gauss_print(inner);
    Json vals = Json::array();
    for (std::size_t i = 0; i < ch.values.size(); ++i)
      vals.push_back({{"element", i}, {"word", word_text(g.word(i))}, {"value", gauss_print(ch.values[i])}});
    j["values"] = std::move(vals);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  out << rep.label() << ": degree " << rep.degree() << ", <chi, chi> = " << gauss_print(inner) << '\n';
  for (std::size_t i = 0; i < ch.values.size(); ++i)
    out << i << ' ' << word_text(g.word(i)) << ": " << gauss_print(ch.values[i]) << '\n';
  return kExitOk;
}

int cmd_relations(const Options& o, std::ostream& out) {
  CatalogEntry e = load_source(o);
  MatrixGroup g = close(e.generators, o.cap);
  std::vector<Character> seen;
  for (const auto& seed : e.reps) seen.push_back(character(rep_extend(Representation(seed.name, seed.images), g)));
  bool ok = true;
  Json rows = Json::array();
  std::ostringstream text;
  for (const auto& rel : e.relations) {
    Representation r = rep_extend(resolve_rep(e, rel.label), g);
    Character ch = character(r);
    bool irreducible = char_inner(ch, ch, g).is_one();
    bool fresh = std::find(seen.begin(), seen.end(), ch) == seen.end();
    seen.push_back(ch);
    ok = ok && irreducible && fresh;
    text << rel.label << " = " << rel.expr() << ": degree " << r.degree() << (irreducible ? ", irreducible" : ", REDUCIBLE")
         << (fresh ? "" : ", DUPLICATE") << '\n';
    rows.push_back({{"label", rel.label}, {"expr", rel.expr()}, {"degree", r.degree()}, {"irreducible", irreducible},
                    {"distinct", fresh}});
  }
  if (o.json) {
    Json j;
    j["relations"] = std::move(rows);
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    out << text.str() << (ok ? "all relations give distinct irreducible representations" : "relation check FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  CatalogEntry e = load_source(o);
  VerifyOptions vo;
  vo.max_degree = max_degree(o);
  vo.cap = o.cap;
  VerifyReport report = verify_paper(e, vo);
  if (o.json) {
    out << report.json();
  } else {
    out << report.str();
    if (report.all_passed()) {
      out << "all checks passed\n";
    } else {
      out << "failed checks:";
      for (int id : report.failed()) out << ' ' << id;
      out << '\n';
    }
  }
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const Options& o, const std::string& output, std::ostream& out) {
  CatalogEntry e = load_source(o);
  std::string text = export_group_json(e);
  if (output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(output);
  if (!f || !(f << text)) throw Error(ErrorKind::InvalidInput, "cannot write '" + output + "'");
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants and equivariants of finite matrix groups over Q(i)", "reflectinv"};
  app.require_subcommand(1);
  Options o;
  std::string output;

  auto source = [&](CLI::App* sub) {
    auto* cat = sub->add_option("--catalog", o.catalog, "built-in group (default st8)");
    auto* file = sub->add_option("--file", o.file, "group file in the JSON interchange format");
    cat->excludes(file);
    sub->add_option("--cap", o.cap, "maximum group order during closure")->capture_default_str();
  };
  auto rep = [&](CLI::App* sub) { sub->add_option("--rep", o.rep, "representation name or tensor expression, e.g. rho3*rho13"); };
  auto maxdeg = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "truncation degree (default $REFLECTINV_MAX_DEGREE or 40)");
  };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  auto method = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "reynolds|nullspace|crosscheck (default crosscheck)")
        ->check(CLI::IsMember({"reynolds", "nullspace", "crosscheck"}));
  };

  auto* order = app.add_subcommand("order", "group order, or image-group order with --rep");
  source(order);
  rep(order);
  auto* molien = app.add_subcommand("molien", "Molien series, equivariant with --rep");
  source(molien);
  rep(molien);
  maxdeg(molien);
  molien->add_option("--denom", o.denom, "closed form over prod (1 - t^d)")->delimiter(',');
  json(molien);
  auto* equiv = app.add_subcommand("equivariants", "basis of one degree slice");
  source(equiv);
  rep(equiv);
  equiv->add_option("--degree", o.degree, "polynomial degree")->required();
  method(equiv);
  json(equiv);
  auto* gens = app.add_subcommand("generators", "free-module generators over the primary invariants");
  source(gens);
  rep(gens);
  maxdeg(gens);
  gens->add_option("--prim-degrees", o.prim_degrees, "degrees of the primary invariants")->delimiter(',');
  method(gens);
  json(gens);
  auto* chr = app.add_subcommand("character", "character values on every group element");
  source(chr);
  rep(chr);
  json(chr);
  auto* rel = app.add_subcommand("relations", "check the tensor relation table");
  source(rel);
  json(rel);
  auto* ver = app.add_subcommand("verify-paper", "run the full verification suite");
  source(ver);
  maxdeg(ver);
  json(ver);
  auto* exp = app.add_subcommand("export", "write the group in the JSON interchange format");
  source(exp);
  exp->add_option("-o,--output", output, "output path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (order->parsed()) return cmd_order(o, out);
    if (molien->parsed()) return cmd_molien(o, out);
    if (equiv->parsed()) return cmd_equivariants(o, out);
    if (gens->parsed()) return cmd_generators(o, out);
    if (chr->parsed()) return cmd_character(o, out);
    if (rel->parsed()) return cmd_relations(o, out);
    if (ver->parsed()) return cmd_verify(o, out);
    if (exp->parsed()) return cmd_export(o, output, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace reflectinv
