#pragma once

// Vector-valued invariants: polynomial vectors F with F(g x) = rho(g) F(x).

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reflectinv/group.hpp"
#include "reflectinv/kernels.hpp"
#include "reflectinv/molien.hpp"
#include "reflectinv/poly.hpp"
#include "reflectinv/rep.hpp"

namespace reflectinv {

enum class Method { Reynolds, Nullspace, Crosscheck };

const char* method_name(Method m) noexcept;
Method parse_method(const std::string& text);

/// Degree-d slice of M(rho) with an echelonized, normalized basis.
struct EquivariantSpace {
  unsigned degree = 0;
  std::string label;
  std::vector<PolyVec> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

/// Substitution matrices of every group element, by degree. Depends only on
/// the group, so solvers for different representations can share one.
class SubstitutionCache {
 public:
  explicit SubstitutionCache(const MatrixGroup& g, kernels::Backend backend = kernels::default_backend())
      : group_(g), backend_(backend) {}

  const std::vector<QiMatrix>& get(const MonomialBasis& basis);

 private:
  const MatrixGroup& group_;
  kernels::Backend backend_;
  std::map<unsigned, std::vector<QiMatrix>> by_degree_;
};

/// Per-(group, representation) workspace that memoizes monomial bases,
/// substitution matrices, Reynolds matrices and slice bases by degree.
/// Holds references: group and representation must outlive it. Not safe for
/// concurrent use; the kernels it calls parallelize internally.
class EquivariantSolver {
 public:
  EquivariantSolver(const MatrixGroup& g, const Representation& rep,
                    kernels::Backend backend = kernels::default_backend(),
                    std::shared_ptr<SubstitutionCache> substitutions = nullptr);

  const MatrixGroup& group() const noexcept { return group_; }
  const Representation& rep() const noexcept { return rep_; }
  std::size_t rep_degree() const noexcept { return rep_.degree(); }

  const MonomialBasis& monomial_basis(unsigned d);
  /// Echelon coordinates (component-major) of a basis of the degree-d slice.
  const std::vector<QiVector>& basis_coords(unsigned d, Method method = Method::Nullspace);
  EquivariantSpace space(unsigned d, Method method = Method::Nullspace);
  std::size_t dim(unsigned d) { return basis_coords(d, Method::Nullspace).size(); }

  /// (1/|G|) sum_g rho(g)^{-1} (x) S_g on degree-d coordinates.
  const QiMatrix& reynolds_matrix(unsigned d);
  /// Reynolds projection through the cached matrix.
  PolyVec reynolds(const PolyVec& f);

  /// F(g x) = rho(g) F(x) for each group generator g.
  bool satisfies_generators(const PolyVec& f);
  /// Element indices where the equivariance condition fails.
  std::vector<std::size_t> violations(const PolyVec& f);

  QiVector coords(const PolyVec& f);
  PolyVec vec(const QiVector& coords, unsigned d);

 private:
  std::vector<QiVector> nullspace_basis(unsigned d);
  std::vector<QiVector> reynolds_basis(unsigned d);
  const std::vector<QiMatrix>& generator_substitutions(unsigned d);

  const MatrixGroup& group_;
  const Representation& rep_;
  kernels::Backend backend_;
  std::shared_ptr<SubstitutionCache> substitutions_;
  std::map<unsigned, MonomialBasis> monomial_bases_;
  std::map<unsigned, std::vector<QiMatrix>> generator_subst_;
  std::map<unsigned, QiMatrix> reynolds_;
  std::map<std::pair<unsigned, Method>, std::vector<QiVector>> bases_;
};

/// (1/|G|) sum_g rho(g)^{-1} F(g x), evaluated term by term over the group.
PolyVec reynolds(const MatrixGroup& g, const Representation& rep, const PolyVec& f,
                 kernels::Backend backend = kernels::default_backend());

EquivariantSpace equivariant_basis(const MatrixGroup& g, const Representation& rep, unsigned d,
                                   Method method = Method::Crosscheck);

/// Rows spanning a complement of span(sub) inside span(space), returned in
/// reduced echelon form. `sub` must lie in span(space).
std::vector<QiVector> echelon_complement(const std::vector<QiVector>& sub, const std::vector<QiVector>& space,
                                         std::size_t cols);

struct PrimaryInvariants {
  Poly theta;
  Poly phi;
  unsigned theta_degree = 0;
  unsigned phi_degree = 0;
};

/// Jacobian determinant d(theta, phi)/d(x, y).
Poly jacobian_determinant(const Poly& theta, const Poly& phi);

/// Basic invariants of a two-dimensional group. Without explicit degrees the
/// smallest pair d1 <= d2 with d1 * d2 = |G| and nonzero invariant
/// dimensions is chosen.
PrimaryInvariants primary_invariants(const MatrixGroup& g,
                                     std::optional<std::pair<unsigned, unsigned>> degrees = std::nullopt);

struct ModuleGenerator {
  unsigned degree = 0;
  PolyVec vec;
};

struct ModuleGenerators {
  std::string label;
  std::vector<ModuleGenerator> gens;
  std::size_t verified_to = 0;

  std::vector<unsigned> degrees() const;
};

/// Number of (a, b) >= 0 with a*d1 + b*d2 = n.
std::size_t count_pairs(unsigned d1, unsigned d2, int n);

/// Coordinates of theta^a phi^b G for every generator G of degree e < d with
/// a*d1 + b*d2 = d - e.
std::vector<QiVector> submodule_slice(EquivariantSolver& solver, const PrimaryInvariants& prim,
                                      const std::vector<ModuleGenerator>& gens, unsigned d);

/// Degree-by-degree extraction of free generators: new generators at degree d
/// are the echelon complement of the submodule slice in the equivariant
/// slice. Throws FreenessViolation when the slice products are dependent.
ModuleGenerators module_generators(EquivariantSolver& solver, const PrimaryInvariants& prim, unsigned max_degree,
                                   bool stop_early = true, Method method = Method::Nullspace);
ModuleGenerators module_generators(const MatrixGroup& g, const Representation& rep, const PrimaryInvariants& prim,
                                   unsigned max_degree);

struct FreenessRow {
  unsigned degree = 0;
  std::size_t expected = 0;
  std::size_t computed = 0;
  bool ok = false;
};

struct FreenessReport {
  std::string label;
  std::vector<FreenessRow> rows;
  /// Generator counts per degree agree with the Hilbert numerator.
  bool numerator_matches = false;

  bool all_ok() const noexcept;
  /// One `d: expected=K computed=K OK|FAIL` line per degree.
  std::string str() const;
  std::string json() const;
};

FreenessReport verify_free_resolution(const ModuleGenerators& gens, const HilbertData& hd,
                                      EquivariantSolver& solver, const PrimaryInvariants& prim, unsigned max_degree);
FreenessReport verify_free_resolution(const ModuleGenerators& gens, const HilbertData& hd, const Representation& rep,
                                      const MatrixGroup& g, const PrimaryInvariants& prim, unsigned max_degree);

}  // namespace reflectinv
