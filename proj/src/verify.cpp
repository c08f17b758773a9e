#include "reflectinv/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

#include "reflectinv/equivar.hpp"
#include "reflectinv/molien.hpp"
#include "reflectinv/rep.hpp"

namespace reflectinv {

const char* status_name(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "N/A";
  }
  return "?";
}

bool VerifyReport::all_passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::vector<int> VerifyReport::failed() const {
  std::vector<int> ids;
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) ids.push_back(c.id);
  return ids;
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  for (const auto& c : checks) os << status_name(c.status) << "  " << c.id << "  " << c.title << ": " << c.detail << '\n';
  return os.str();
}

std::string VerifyReport::json() const {
  nlohmann::ordered_json j;
  j["passed"] = all_passed();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    arr.push_back({{"id", c.id}, {"title", c.title}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

namespace {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

Outcome pass(std::string d) { return {CheckStatus::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {CheckStatus::Fail, std::move(d)}; }
Outcome verdict(bool ok, std::string d) { return {ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(d)}; }

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? sep : "") + parts[k];
  return s;
}

std::string degree_list(const std::vector<unsigned>& d) {
  std::vector<std::string> parts;
  for (unsigned x : d) parts.push_back(std::to_string(x));
  return "[" + join(parts) + "]";
}

std::vector<Integer> trimmed(std::vector<Integer> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

std::vector<Integer> to_integers(const std::vector<long>& v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return trimmed(out);
}

// Lazily built shared state; every check reuses groups, extended
// representations and per-representation solvers.
class Context {
 public:
  Context(const CatalogEntry& e, const VerifyOptions& o) : entry(e), opts(o) {}

  const CatalogEntry& entry;
  const VerifyOptions& opts;

  const MatrixGroup& group() {
    if (!group_) group_ = close(entry.generators, opts.cap);
    return *group_;
  }

  const Representation& rep(const std::string& name) {
    auto it = reps_.find(name);
    if (it == reps_.end()) it = reps_.emplace(name, rep_extend(resolve_rep(entry, name), group())).first;
    return it->second;
  }

  EquivariantSolver& solver(const std::string& name) {
    auto it = solvers_.find(name);
    if (it == solvers_.end())
      it = solvers_.emplace(name, std::make_unique<EquivariantSolver>(group(), rep(name), opts.backend, substitutions())).first;
    return *it->second;
  }

  std::shared_ptr<SubstitutionCache> substitutions() {
    if (!subst_) subst_ = std::make_shared<SubstitutionCache>(group(), opts.backend);
    return subst_;
  }

  std::pair<unsigned, unsigned> degrees() {
    if (entry.expected) return {entry.expected->theta_degree, entry.expected->phi_degree};
    const PrimaryInvariants& p = primary();
    return {p.theta_degree, p.phi_degree};
  }

  // Computed, never taken from the expected data, so a corrupted expectation
  // only affects the check that compares against it.
  const PrimaryInvariants& primary() {
    if (!prim_) {
      std::optional<std::pair<unsigned, unsigned>> d;
      if (entry.expected) d = std::make_pair(entry.expected->theta_degree, entry.expected->phi_degree);
      prim_ = primary_invariants(group(), d);
    }
    return *prim_;
  }

  const ModuleGenerators& generators(const std::string& name) {
    auto it = gens_.find(name);
    if (it == gens_.end()) it = gens_.emplace(name, module_generators(solver(name), primary(), opts.max_degree)).first;
    return it->second;
  }

 private:
  std::optional<MatrixGroup> group_;
  std::shared_ptr<SubstitutionCache> subst_;
  std::map<std::string, Representation> reps_;
  std::map<std::string, std::unique_ptr<EquivariantSolver>> solvers_;
  std::optional<PrimaryInvariants> prim_;
  std::map<std::string, ModuleGenerators> gens_;
};

Outcome check_group_order(Context& c) {
  const std::size_t order = c.group().order();
  if (!c.entry.expected) return pass("closure has " + std::to_string(order) + " elements");
  const std::size_t want = c.entry.expected->group_order;
  return verdict(order == want, "closure has " + std::to_string(order) + " elements, expected " + std::to_string(want));
}

Outcome check_image_orders(Context& c) {
  const auto& x = *c.entry.expected;
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& [name, want] : x.image_orders) {
    std::size_t have = image_group(resolve_rep(c.entry, name), c.opts.cap).order();
    ok = ok && have == want;
    parts.push_back(name + "=" + std::to_string(have) + (have == want ? "" : " (expected " + std::to_string(want) + ")"));
  }
  return verdict(ok, join(parts));
}

Outcome check_primary(Context& c) {
  const auto& x = *c.entry.expected;
  const MatrixGroup& g = c.group();
  Representation triv = rep_extend(trivial_rep(g.generators().size()), g);
  EquivariantSolver solver(g, triv, c.opts.backend, c.substitutions());
  std::vector<std::string> problems;

  EquivariantSpace low = solver.space(x.theta_degree, Method::Crosscheck);
  EquivariantSpace high = solver.space(x.phi_degree, Method::Crosscheck);
  if (low.dim() != 1)
    problems.push_back("degree " + std::to_string(x.theta_degree) + " has dimension " + std::to_string(low.dim()));
  else if (low.basis[0][0] != x.theta)
    problems.push_back("theta is " + low.basis[0][0].str() + ", expected " + x.theta.str());
  // Without powers of theta in degree d2 the slice itself must be the line of phi.
  const bool multiple = x.phi_degree % x.theta_degree == 0;
  if (!multiple && high.dim() != 1)
    problems.push_back("degree " + std::to_string(x.phi_degree) + " has dimension " + std::to_string(high.dim()));
  else if (!multiple && high.basis[0][0] != x.phi)
    problems.push_back("phi is " + high.basis[0][0].str() + ", expected " + x.phi.str());

  PrimaryInvariants explicit_deg = primary_invariants(g, std::make_pair(x.theta_degree, x.phi_degree));
  if (explicit_deg.phi != x.phi) problems.push_back("phi is " + explicit_deg.phi.str() + ", expected " + x.phi.str());
  PrimaryInvariants automatic = primary_invariants(g);
  if (automatic.theta_degree != x.theta_degree || automatic.phi_degree != x.phi_degree)
    problems.push_back("automatic degree search found " + degree_list({automatic.theta_degree, automatic.phi_degree}));
  else if (automatic.theta != x.theta || automatic.phi != x.phi)
    problems.push_back("automatic primary invariants differ from the expected pair");
  if (jacobian_determinant(automatic.theta, automatic.phi).is_zero()) problems.push_back("Jacobian vanishes");

  if (!problems.empty()) return fail(join(problems, "; "));
  return pass("dims " + std::to_string(low.dim()) + ", " + std::to_string(high.dim()) + "; theta = " + x.theta.str() +
              ", phi = " + x.phi.str());
}

Outcome check_scalar_molien(Context& c) {
  const auto [d1, d2] = c.degrees();
  const unsigned n = c.opts.max_degree;
  TruncatedSeries s = molien_scalar(c.group(), n, c.opts.backend);
  // Independent count of a*d1 + b*d2 = k by enumeration.
  for (unsigned k = 0; k <= n; ++k) {
    long count = 0;
    for (unsigned a = 0; a * d1 <= k; ++a)
      for (unsigned b = 0; a * d1 + b * d2 <= k; ++b)
        if (a * d1 + b * d2 == k) ++count;
    if (s[k] != Gauss(count))
      return fail("coefficient of t^" + std::to_string(k) + " is " + gauss_print(s[k]) + ", expected " + std::to_string(count));
  }
  HilbertData hd = numerator_wrt(s, {d1, d2});
  return verdict(trimmed(hd.numerator) == std::vector<Integer>{1},
                 "matches 1/((1 - t^" + std::to_string(d1) + ")*(1 - t^" + std::to_string(d2) + ")) through t^" +
                     std::to_string(n) + ", numerator " + hd.numerator_str());
}

Outcome check_numerators(Context& c) {
  const auto [d1, d2] = c.degrees();
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& m : c.entry.expected->modules) {
    TruncatedSeries s = molien_equivariant(c.group(), c.rep(m.rep), c.opts.max_degree, c.opts.backend);
    HilbertData hd = numerator_wrt(s, {d1, d2});
    bool good = trimmed(hd.numerator) == to_integers(m.numerator);
    ok = ok && good;
    parts.push_back(m.rep + " -> " + hd.numerator_str() + (good ? "" : " (mismatch)"));
  }
  return verdict(ok, join(parts) + " through t^" + std::to_string(c.opts.max_degree));
}

Outcome check_known_equivariant(Context& c) {
  std::size_t count = 0;
  std::vector<std::string> problems;
  for (const auto& m : c.entry.expected->modules) {
    EquivariantSolver& solver = c.solver(m.rep);
    for (std::size_t k = 0; k < m.generators.size(); ++k) {
      const PolyVec& f = m.generators[k];
      ++count;
      if (f.size() != solver.rep_degree()) {
        problems.push_back(m.rep + " #" + std::to_string(k + 1) + " has the wrong length");
        continue;
      }
      if (!solver.satisfies_generators(f)) problems.push_back(m.rep + " #" + std::to_string(k + 1) + " fails at a generator");
      else if (auto bad = solver.violations(f); !bad.empty())
        problems.push_back(m.rep + " #" + std::to_string(k + 1) + " fails at " + std::to_string(bad.size()) + " elements");
    }
  }
  if (!problems.empty()) return fail(join(problems, "; "));
  return pass(std::to_string(count) + " vectors equivariant at the generators and all " +
              std::to_string(c.group().order()) + " elements");
}

Outcome check_recovery(Context& c) {
  bool ok = true;
  std::vector<std::string> parts;
  for (const auto& m : c.entry.expected->modules) {
    EquivariantSolver& solver = c.solver(m.rep);
    const ModuleGenerators& gens = c.generators(m.rep);
    std::vector<unsigned> degs = gens.degrees();
    std::string note = m.rep + " " + degree_list(degs);
    if (degs != m.generator_degrees) {
      ok = false;
      note += " (expected " + degree_list(m.generator_degrees) + ")";
    }
    for (std::size_t k = 0; k < m.generators.size(); ++k) {
      const PolyVec& f = m.generators[k];
      const int d = f.degree();
      if (d < 0 || f.size() != solver.rep_degree()) {
        ok = false;
        note += ", #" + std::to_string(k + 1) + " malformed";
        continue;
      }
      const unsigned ud = static_cast<unsigned>(d);
      const std::size_t cols = solver.rep_degree() * solver.monomial_basis(ud).size();
      std::vector<QiVector> rows = submodule_slice(solver, c.primary(), gens.gens, ud);
      for (const auto& g : gens.gens)
        if (g.degree == ud) rows.push_back(solver.coords(g.vec));
      std::size_t before = rows.empty() ? 0 : rank(QiMatrix::from_rows(rows, cols));
      rows.push_back(solver.coords(f));
      std::size_t after = rank(QiMatrix::from_rows(rows, cols));
      if (after != before) {
        ok = false;
        note += ", #" + std::to_string(k + 1) + " outside the computed span";
      }
    }
    parts.push_back(note);
  }
  return verdict(ok, join(parts, "; "));
}

Outcome check_freeness(Context& c) {
  const auto [d1, d2] = c.degrees();
  const unsigned n = c.opts.max_degree;
  bool ok = true;
  std::vector<std::string> bad;
  const auto names = rep_names(c.entry);
  for (const auto& name : names) {
    EquivariantSolver& solver = c.solver(name);
    TruncatedSeries s = molien_equivariant(c.group(), c.rep(name), n + std::max(d1, d2), c.opts.backend);
    HilbertData hd = numerator_wrt(s, {d1, d2});
    FreenessReport report = verify_free_resolution(c.generators(name), hd, solver, c.primary(), n);
    if (!report.all_ok()) {
      ok = false;
      bad.push_back(name + " module counts");
    }
    for (unsigned d = 0; d <= std::min(c.opts.oracle_degree, n); ++d)
      if (Gauss(static_cast<long>(solver.dim(d))) != s[d]) {
        ok = false;
        bad.push_back(name + " dimension at degree " + std::to_string(d));
        break;
      }
  }
  if (!ok) return fail(join(bad, "; "));
  return pass(std::to_string(names.size()) + " representations free through degree " + std::to_string(n) +
              ", slice dimensions equal Molien coefficients through degree " + std::to_string(c.opts.oracle_degree));
}

Outcome check_rep_algebra(Context& c) {
  const MatrixGroup& g = c.group();
  const auto names = rep_names(c.entry);
  std::vector<Character> chars;
  Integer square_sum = 0;
  std::vector<std::string> problems;
  for (const auto& name : names) {
    const Representation& r = c.rep(name);
    Character ch = character(r);
    if (!char_inner(ch, ch, g).is_one()) problems.push_back(name + " is reducible");
    for (std::size_t k = 0; k < chars.size(); ++k)
      if (chars[k] == ch) problems.push_back(name + " repeats " + names[k]);
    chars.push_back(std::move(ch));
    square_sum += static_cast<unsigned long>(r.degree() * r.degree());
  }
  if (square_sum != static_cast<unsigned long>(g.order()))
    problems.push_back("sum of squared degrees is " + square_sum.get_str());
  if (!problems.empty()) return fail(join(problems, "; "));
  return pass(std::to_string(c.entry.relations.size()) + " relations, " + std::to_string(names.size()) +
              " distinct irreducible characters, sum of squared degrees " + square_sum.get_str());
}

PolyVec random_input(std::mt19937_64& rng, std::size_t m, std::size_t nvars, unsigned d) {
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  std::uniform_int_distribution<int> terms(0, 3);
  auto monos = monomials_of_degree(nvars, d);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  PolyVec f = PolyVec::zero(m, nvars);
  for (std::size_t comp = 0; comp < m; ++comp)
    for (int t = terms(rng); t >= 0; --t) {
      Rational re(num(rng), den(rng)), im(num(rng), den(rng));
      f[comp].add_term(monos[pick(rng)], Gauss(re, im));
    }
  return f;
}

Outcome check_methods(Context& c) {
  const auto names = rep_names(c.entry);
  std::mt19937_64 rng(c.opts.seed);
  std::uniform_int_distribution<unsigned> degree(0, c.opts.random_max_degree);
  std::size_t slices = 0;
  for (const auto& name : names) {
    EquivariantSolver& solver = c.solver(name);
    for (unsigned d = 0; d <= c.opts.oracle_degree; ++d) {
      try {
        solver.basis_coords(d, Method::Crosscheck);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::MethodDisagreement) throw;
        return fail(name + " at degree " + std::to_string(d) + ": " + e.what());
      }
      ++slices;
    }
    for (unsigned k = 0; k < c.opts.random_inputs; ++k) {
      PolyVec f = random_input(rng, solver.rep_degree(), c.group().dim(), degree(rng));
      PolyVec r = reynolds(c.group(), solver.rep(), f, c.opts.backend);
      if (!solver.satisfies_generators(r)) return fail(name + ": projection is not equivariant");
      if (reynolds(c.group(), solver.rep(), r, c.opts.backend) != r) return fail(name + ": projection is not idempotent");
      if (solver.reynolds(f) != r) return fail(name + ": matrix and elementwise projections differ");
    }
  }
  return pass(std::to_string(slices) + " slices agree through degree " + std::to_string(c.opts.oracle_degree) + ", " +
              std::to_string(c.opts.random_inputs * names.size()) + " random projections idempotent");
}

Outcome check_out_of_scope(Context&) {
  return {CheckStatus::NotApplicable,
          "not verified: the modular-forms isomorphism for the invariant ring, and the order-192 extension by eta_8, "
          "which is undefined and not representable over Q(i); no other check depends on them"};
}

struct CheckDef {
  int id;
  const char* title;
  bool needs_expected;
  std::function<Outcome(Context&)> run;
};

}  // namespace

VerifyReport verify_paper(const CatalogEntry& entry, const VerifyOptions& opts) {
  const std::vector<CheckDef> defs = {
      {1, "Group order", false, check_group_order},
      {2, "Image-group orders", true, check_image_orders},
      {3, "Primary invariants", true, check_primary},
      {4, "Scalar Molien series", false, check_scalar_molien},
      {5, "Equivariant Molien numerators", true, check_numerators},
      {6, "Known generators are equivariant", true, check_known_equivariant},
      {7, "Generator recovery", true, check_recovery},
      {8, "Freeness", false, check_freeness},
      {9, "Representation algebra", false, check_rep_algebra},
      {10, "Method cross-check and Reynolds properties", false, check_methods},
      {11, "Out of scope", false, check_out_of_scope},
  };

  Context ctx(entry, opts);
  VerifyReport report;
  for (const auto& def : defs) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), def.id) == opts.only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.id = def.id;
    r.title = def.title;
    if (def.needs_expected && !entry.expected) {
      r.status = CheckStatus::NotApplicable;
      r.detail = "no expected data for this group";
    } else {
      try {
        Outcome o = def.run(ctx);
        r.status = o.status;
        r.detail = std::move(o.detail);
      } catch (const Error& e) {
        r.status = CheckStatus::Fail;
        r.detail = e.what();
      }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.checks.push_back(std::move(r));
  }
  return report;
}

}  // namespace reflectinv
