#include "reflectinv/equivar.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace reflectinv {

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::Reynolds: return "reynolds";
    case Method::Nullspace: return "nullspace";
    case Method::Crosscheck: return "crosscheck";
  }
  return "?";
}

Method parse_method(const std::string& text) {
  if (text == "reynolds") return Method::Reynolds;
  if (text == "nullspace") return Method::Nullspace;
  if (text == "crosscheck") return Method::Crosscheck;
  throw Error(ErrorKind::InvalidInput, "unknown method '" + text + "'");
}

// ---------------------------------------------------------------------------
// EquivariantSolver

const std::vector<QiMatrix>& SubstitutionCache::get(const MonomialBasis& basis) {
  if (basis.nvars() != group_.dim()) throw Error(ErrorKind::DimensionMismatch, "basis variable count differs from group dimension");
  auto it = by_degree_.find(basis.degree());
  if (it == by_degree_.end())
    it = by_degree_.emplace(basis.degree(), kernels::substitution_matrices(group_.elements(), basis, backend_)).first;
  return it->second;
}

EquivariantSolver::EquivariantSolver(const MatrixGroup& g, const Representation& rep, kernels::Backend backend,
                                     std::shared_ptr<SubstitutionCache> substitutions)
    : group_(g), rep_(rep), backend_(backend), substitutions_(std::move(substitutions)) {
  if (!rep.extended() || rep.image_table().size() != g.order())
    throw Error(ErrorKind::InvalidInput, "representation '" + rep.label() + "' is not extended over this group");
  if (!substitutions_) substitutions_ = std::make_shared<SubstitutionCache>(g, backend);
}

const MonomialBasis& EquivariantSolver::monomial_basis(unsigned d) {
  auto it = monomial_bases_.find(d);
  if (it == monomial_bases_.end()) it = monomial_bases_.emplace(d, MonomialBasis(group_.dim(), d)).first;
  return it->second;
}

const std::vector<QiMatrix>& EquivariantSolver::generator_substitutions(unsigned d) {
  auto it = generator_subst_.find(d);
  if (it == generator_subst_.end()) {
    std::vector<QiMatrix> subs;
    for (const auto& gen : group_.generators()) subs.push_back(substitution_matrix(gen, monomial_basis(d)));
    it = generator_subst_.emplace(d, std::move(subs)).first;
  }
  return it->second;
}

std::vector<QiVector> EquivariantSolver::nullspace_basis(unsigned d) {
  const std::size_t m = rep_.degree();
  const std::size_t monos = monomial_basis(d).size();
  const std::size_t n = m * monos;
  const auto& subs = generator_substitutions(d);

  // One linear constraint block per generator: (I (x) S_g - rho(g) (x) I) c = 0.
  std::vector<QiMatrix> constraints;
  for (std::size_t j = 0; j < subs.size(); ++j)
    constraints.push_back(kron(QiMatrix::identity(m), subs[j]) - kron(rep_.gen_images()[j], QiMatrix::identity(monos)));

  // Intersect kernels one generator at a time, sparsest constraint first.
  std::vector<std::size_t> order(constraints.size());
  std::vector<std::size_t> nonzeros(constraints.size());
  for (std::size_t j = 0; j < constraints.size(); ++j) {
    order[j] = j;
    auto e = constraints[j].entries();
    nonzeros[j] = static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](const Gauss& x) { return !x.is_zero(); }));
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return nonzeros[a] < nonzeros[b]; });

  std::vector<QiVector> kernel;
  bool first = true;
  for (std::size_t j : order) {
    if (first) {
      kernel = kernel_basis(constraints[j]);
      first = false;
      continue;
    }
    if (kernel.empty()) break;
    // Restrict the constraint to the current kernel: columns C * k_i.
    QiMatrix restricted(n, kernel.size());
    for (std::size_t c = 0; c < kernel.size(); ++c) {
      QiVector col = constraints[j].apply(kernel[c]);
      for (std::size_t r = 0; r < n; ++r) restricted(r, c) = std::move(col[r]);
    }
    std::vector<QiVector> next;
    for (const QiVector& z : kernel_basis(restricted)) {
      QiVector v(n);
      for (std::size_t c = 0; c < z.size(); ++c) {
        if (z[c].is_zero()) continue;
        for (std::size_t r = 0; r < n; ++r)
          if (!kernel[c][r].is_zero()) v[r] += z[c] * kernel[c][r];
      }
      next.push_back(std::move(v));
    }
    kernel = std::move(next);
  }
  if (first) {
    // A group without generators constrains nothing.
    for (std::size_t k = 0; k < n; ++k) {
      QiVector v(n);
      v[k] = 1;
      kernel.push_back(std::move(v));
    }
  }
  if (kernel.empty()) return {};
  return echelon_basis(kernel, n);
}

const QiMatrix& EquivariantSolver::reynolds_matrix(unsigned d) {
  auto it = reynolds_.find(d);
  if (it != reynolds_.end()) return it->second;
  const std::vector<QiMatrix>& subs = substitutions_->get(monomial_basis(d));
  std::vector<QiMatrix> inv_images;
  inv_images.reserve(group_.order());
  for (std::size_t i = 0; i < group_.order(); ++i) inv_images.push_back(rep_.image(group_.inverse_of(i)));
  QiMatrix r = kernels::kron_sum(inv_images, subs, backend_);
  r *= frac(1, static_cast<long>(group_.order()));
  return reynolds_.emplace(d, std::move(r)).first->second;
}

std::vector<QiVector> EquivariantSolver::reynolds_basis(unsigned d) {
  // Image of the projector = span of its columns = row space of R^T.
  QiMatrix rt = reynolds_matrix(d).transpose();
  RrefResult red = rref(std::move(rt));
  std::vector<QiVector> rows;
  for (std::size_t r = 0; r < red.rank(); ++r) {
    auto row = red.matrix.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  return rows;
}

const std::vector<QiVector>& EquivariantSolver::basis_coords(unsigned d, Method method) {
  auto key = std::make_pair(d, method);
  if (auto it = bases_.find(key); it != bases_.end()) return it->second;
  std::vector<QiVector> basis;
  switch (method) {
    case Method::Nullspace:
      basis = nullspace_basis(d);
      break;
    case Method::Reynolds:
      basis = reynolds_basis(d);
      break;
    case Method::Crosscheck: {
      const auto& a = basis_coords(d, Method::Nullspace);
      const auto& b = basis_coords(d, Method::Reynolds);
      if (a != b)
        throw Error(ErrorKind::MethodDisagreement, "reynolds and nullspace bases differ for '" + rep_.label() +
                                                       "' at degree " + std::to_string(d) + " (dims " +
                                                       std::to_string(b.size()) + " vs " + std::to_string(a.size()) + ")");
      basis = a;
      break;
    }
  }
  return bases_.emplace(key, std::move(basis)).first->second;
}

EquivariantSpace EquivariantSolver::space(unsigned d, Method method) {
  EquivariantSpace s;
  s.degree = d;
  s.label = rep_.label();
  for (const auto& v : basis_coords(d, method)) s.basis.push_back(vec(v, d));
  return s;
}

QiVector EquivariantSolver::coords(const PolyVec& f) {
  if (f.size() != rep_.degree()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from representation degree");
  int d = f.degree();
  if (d < 0) throw Error(ErrorKind::ZeroVector, "zero vector has no degree");
  return f.coords(monomial_basis(static_cast<unsigned>(d)));
}

PolyVec EquivariantSolver::vec(const QiVector& coords, unsigned d) {
  return PolyVec::from_coords(coords, rep_.degree(), monomial_basis(d));
}

PolyVec EquivariantSolver::reynolds(const PolyVec& f) {
  if (f.size() != rep_.degree()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from representation degree");
  if (!f.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "Reynolds input must be homogeneous");
  if (f.is_zero()) return f;
  auto d = static_cast<unsigned>(f.degree());
  return vec(reynolds_matrix(d).apply(coords(f)), d);
}

bool EquivariantSolver::satisfies_generators(const PolyVec& f) {
  for (std::size_t j = 0; j < group_.generators().size(); ++j)
    if (act_vec(group_.generators()[j], f) != mat_apply(rep_.gen_images()[j], f)) return false;
  return true;
}

std::vector<std::size_t> EquivariantSolver::violations(const PolyVec& f) {
  return kernels::equivariance_defects(group_.elements(), rep_.image_table(), f, backend_);
}

// ---------------------------------------------------------------------------
// Free functions

PolyVec reynolds(const MatrixGroup& g, const Representation& rep, const PolyVec& f, kernels::Backend backend) {
  if (!rep.extended() || rep.image_table().size() != g.order())
    throw Error(ErrorKind::InvalidInput, "representation '" + rep.label() + "' is not extended over this group");
  if (f.size() != rep.degree()) throw Error(ErrorKind::DimensionMismatch, "vector length differs from representation degree");
  if (!f.is_homogeneous()) throw Error(ErrorKind::InvalidInput, "Reynolds input must be homogeneous");
  std::vector<QiMatrix> inv_images;
  inv_images.reserve(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) inv_images.push_back(rep.image(g.inverse_of(i)));
  PolyVec out = kernels::reynolds_sum(g.elements(), inv_images, f, backend);
  out *= frac(1, static_cast<long>(g.order()));
  for (std::size_t j = 0; j < g.generators().size(); ++j)
    if (act_vec(g.generators()[j], out) != mat_apply(rep.gen_images()[j], out))
      throw Error(ErrorKind::Internal, "Reynolds output is not equivariant");
  return out;
}

EquivariantSpace equivariant_basis(const MatrixGroup& g, const Representation& rep, unsigned d, Method method) {
  EquivariantSolver solver(g, rep);
  return solver.space(d, method);
}

std::vector<QiVector> echelon_complement(const std::vector<QiVector>& sub, const std::vector<QiVector>& space,
                                         std::size_t cols) {
  std::vector<QiVector> reduced_sub = sub.empty() ? std::vector<QiVector>{} : echelon_basis(sub, cols);
  std::vector<std::size_t> pivots;
  for (const auto& row : reduced_sub) {
    auto it = std::find_if(row.begin(), row.end(), [](const Gauss& x) { return !x.is_zero(); });
    pivots.push_back(static_cast<std::size_t>(it - row.begin()));
  }
  std::vector<QiVector> residues;
  for (QiVector v : space) {
    for (std::size_t k = 0; k < reduced_sub.size(); ++k) {
      Gauss f = v[pivots[k]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots[k]; c < cols; ++c)
        if (!reduced_sub[k][c].is_zero()) v[c] -= f * reduced_sub[k][c];
    }
    if (std::any_of(v.begin(), v.end(), [](const Gauss& x) { return !x.is_zero(); })) residues.push_back(std::move(v));
  }
  if (residues.empty()) return {};
  return echelon_basis(residues, cols);
}

Poly jacobian_determinant(const Poly& theta, const Poly& phi) {
  if (theta.nvars() != 2 || phi.nvars() != 2)
    throw Error(ErrorKind::InvalidInput, "Jacobian criterion implemented for two variables");
  return theta.derivative(0) * phi.derivative(1) - theta.derivative(1) * phi.derivative(0);
}

PrimaryInvariants primary_invariants(const MatrixGroup& g, std::optional<std::pair<unsigned, unsigned>> degrees) {
  if (g.dim() != 2) throw Error(ErrorKind::InvalidInput, "primary invariants require a two-dimensional group");
  unsigned d1 = 0;
  unsigned d2 = 0;
  if (degrees) {
    std::tie(d1, d2) = *degrees;
    if (d1 == 0 || d2 == 0) throw Error(ErrorKind::InvalidInput, "primary degrees must be positive");
    if (d1 > d2) std::swap(d1, d2);
  } else {
    const std::size_t order = g.order();
    TruncatedSeries dims = molien_scalar(g, order);
    for (std::size_t a = 1; a * a <= order; ++a) {
      if (order % a != 0) continue;
      std::size_t b = order / a;
      if (!dims[a].is_zero() && !dims[b].is_zero()) {
        d1 = static_cast<unsigned>(a);
        d2 = static_cast<unsigned>(b);
        break;
      }
    }
    if (d1 == 0) throw Error(ErrorKind::NoSuchDegrees, "no degree pair d1*d2 = |G| carries invariants; pass explicit degrees");
  }

  Representation triv = rep_extend(trivial_rep(g.generators().size()), g);
  EquivariantSolver solver(g, triv);

  const auto& low = solver.basis_coords(d1);
  if (low.size() != 1)
    throw Error(ErrorKind::NotOneDimensional,
                "degree-" + std::to_string(d1) + " invariant space has dimension " + std::to_string(low.size()));
  PrimaryInvariants prim;
  prim.theta_degree = d1;
  prim.phi_degree = d2;
  prim.theta = solver.vec(low.front(), d1)[0];

  std::vector<QiVector> lower;
  if (d2 % d1 == 0) {
    Poly power = pow(prim.theta, d2 / d1);
    lower.push_back(solver.monomial_basis(d2).coords(power));
  }
  const std::size_t cols = solver.monomial_basis(d2).size();
  std::vector<QiVector> fresh = echelon_complement(lower, solver.basis_coords(d2), cols);
  if (fresh.size() != 1)
    throw Error(ErrorKind::NotOneDimensional, "degree-" + std::to_string(d2) + " invariants leave " +
                                                  std::to_string(fresh.size()) + " new directions");
  prim.phi = solver.vec(fresh.front(), d2)[0];

  if (jacobian_determinant(prim.theta, prim.phi).is_zero())
    throw Error(ErrorKind::InvalidInput, "primary invariants are algebraically dependent");
  return prim;
}

std::vector<unsigned> ModuleGenerators::degrees() const {
  std::vector<unsigned> d;
  for (const auto& g : gens) d.push_back(g.degree);
  return d;
}

std::size_t count_pairs(unsigned d1, unsigned d2, int n) {
  if (n < 0) return 0;
  std::size_t count = 0;
  for (int a = 0; a * static_cast<int>(d1) <= n; ++a)
    if ((n - a * static_cast<int>(d1)) % static_cast<int>(d2) == 0) ++count;
  return count;
}

std::vector<QiVector> submodule_slice(EquivariantSolver& solver, const PrimaryInvariants& prim,
                                      const std::vector<ModuleGenerator>& gens, unsigned d) {
  const MonomialBasis& basis = solver.monomial_basis(d);
  std::vector<QiVector> rows;
  for (const auto& gen : gens) {
    if (gen.degree >= d) continue;
    const unsigned rest = d - gen.degree;
    for (unsigned a = 0; a * prim.theta_degree <= rest; ++a) {
      unsigned left = rest - a * prim.theta_degree;
      if (left % prim.phi_degree != 0) continue;
      unsigned b = left / prim.phi_degree;
      Poly mult = pow(prim.theta, a) * pow(prim.phi, b);
      rows.push_back((mult * gen.vec).coords(basis));
    }
  }
  return rows;
}

ModuleGenerators module_generators(EquivariantSolver& solver, const PrimaryInvariants& prim, unsigned max_degree,
                                   bool stop_early, Method method) {
  const std::size_t m = solver.rep_degree();
  ModuleGenerators out;
  out.label = solver.rep().label();

  int numerator_degree = -1;
  if (stop_early) {
    try {
      unsigned lookahead = max_degree + std::max(prim.theta_degree, prim.phi_degree);
      TruncatedSeries s = molien_equivariant(solver.group(), solver.rep(), lookahead);
      numerator_degree = numerator_wrt(s, {prim.theta_degree, prim.phi_degree}).numerator_degree();
    } catch (const Error&) {
      numerator_degree = -1;
      stop_early = false;
    }
  }

  for (unsigned d = 0; d <= max_degree; ++d) {
    const std::size_t cols = m * solver.monomial_basis(d).size();
    const auto& space = solver.basis_coords(d, method);
    std::vector<QiVector> slice = submodule_slice(solver, prim, out.gens, d);
    std::size_t slice_rank = slice.empty() ? 0 : rank(QiMatrix::from_rows(slice, cols));
    if (slice_rank < slice.size())
      throw Error(ErrorKind::FreenessViolation, "products of generators are dependent at degree " + std::to_string(d) +
                                                    " (rank " + std::to_string(slice_rank) + " < " +
                                                    std::to_string(slice.size()) + ")");
    if (slice_rank > 0) {
      std::vector<QiVector> both = space;
      both.insert(both.end(), slice.begin(), slice.end());
      if (rank(QiMatrix::from_rows(both, cols)) != space.size())
        throw Error(ErrorKind::Internal, "submodule slice leaves the equivariant space at degree " + std::to_string(d));
    }
    for (const auto& v : echelon_complement(slice, space, cols))
      out.gens.push_back(ModuleGenerator{d, normalize(solver.vec(v, d))});
    out.verified_to = d;
    if (stop_early && out.gens.size() == m && static_cast<int>(d) >= numerator_degree) break;
  }
  return out;
}

ModuleGenerators module_generators(const MatrixGroup& g, const Representation& rep, const PrimaryInvariants& prim,
                                   unsigned max_degree) {
  EquivariantSolver solver(g, rep);
  return module_generators(solver, prim, max_degree);
}

bool FreenessReport::all_ok() const noexcept {
  return numerator_matches && std::all_of(rows.begin(), rows.end(), [](const FreenessRow& r) { return r.ok; });
}

std::string FreenessReport::str() const {
  std::ostringstream os;
  for (const auto& r : rows)
    os << r.degree << ": expected=" << r.expected << " computed=" << r.computed << (r.ok ? " OK" : " FAIL") << '\n';
  return os.str();
}

std::string FreenessReport::json() const {
  nlohmann::ordered_json j;
  j["label"] = label;
  j["numerator_matches"] = numerator_matches;
  j["all_ok"] = all_ok();
  auto& arr = j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    arr.push_back({{"degree", r.degree}, {"expected", r.expected}, {"computed", r.computed}, {"ok", r.ok}});
  return j.dump();
}

FreenessReport verify_free_resolution(const ModuleGenerators& gens, const HilbertData& hd, EquivariantSolver& solver,
                                      const PrimaryInvariants& prim, unsigned max_degree) {
  FreenessReport report;
  report.label = gens.label;

  std::map<unsigned, std::size_t> per_degree;
  for (const auto& g : gens.gens) ++per_degree[g.degree];
  report.numerator_matches = true;
  const std::size_t span = std::max<std::size_t>(hd.numerator.size(), per_degree.empty() ? 0 : per_degree.rbegin()->first + 1);
  for (std::size_t e = 0; e < span; ++e) {
    Integer want = e < hd.numerator.size() ? hd.numerator[e] : Integer(0);
    auto it = per_degree.find(static_cast<unsigned>(e));
    Integer have = it == per_degree.end() ? 0 : static_cast<unsigned long>(it->second);
    if (want != have) report.numerator_matches = false;
  }

  for (unsigned d = 0; d <= max_degree; ++d) {
    FreenessRow row;
    row.degree = d;
    for (const auto& g : gens.gens)
      row.expected += count_pairs(prim.theta_degree, prim.phi_degree, static_cast<int>(d) - static_cast<int>(g.degree));
    row.computed = solver.dim(d);
    row.ok = row.expected == row.computed;
    report.rows.push_back(row);
  }
  return report;
}

FreenessReport verify_free_resolution(const ModuleGenerators& gens, const HilbertData& hd, const Representation& rep,
                                      const MatrixGroup& g, const PrimaryInvariants& prim, unsigned max_degree) {
  EquivariantSolver solver(g, rep);
  return verify_free_resolution(gens, hd, solver, prim, max_degree);
}

}  // namespace reflectinv
