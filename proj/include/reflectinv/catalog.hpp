#pragma once

// Built-in group data: Shephard-Todd group No. 8, its fundamental
// representations, basic invariants and the known free-module generators.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reflectinv/exactmath.hpp"
#include "reflectinv/poly.hpp"
#include "reflectinv/rep.hpp"

namespace reflectinv {

struct RepSeed {
  std::string name;
  std::vector<QiMatrix> images;
};

/// label = factors[0] (x) factors[1] (x) ...
struct Relation {
  std::string label;
  std::vector<std::string> factors;

  std::string expr() const;
};

/// Known results for one representation.
struct ExpectedModule {
  std::string rep;
  std::vector<long> numerator;  // coefficient list over (1 - t^d1)(1 - t^d2)
  std::vector<unsigned> generator_degrees;
  std::vector<PolyVec> generators;
};

struct ExpectedData {
  std::size_t group_order = 0;
  std::vector<std::pair<std::string, std::size_t>> image_orders;
  Poly theta;
  Poly phi;
  unsigned theta_degree = 0;
  unsigned phi_degree = 0;
  std::vector<ExpectedModule> modules;
};

struct CatalogEntry {
  std::string name;
  std::size_t n = 0;
  std::vector<QiMatrix> generators;
  std::vector<RepSeed> reps;
  std::vector<Relation> relations;
  std::optional<ExpectedData> expected;

  const RepSeed* find_rep(const std::string& name) const;
  const Relation* find_relation(const std::string& label) const;
};

std::vector<std::string> catalog_names();
/// Throws UnknownCatalogName.
CatalogEntry catalog_get(const std::string& name);

/// The ten tensor relations expressing rho2, rho4, rho6..rho9, rho11, rho12,
/// rho14 and rho16 through the fundamental representations.
std::vector<Relation> relation_table();

/// Resolves a representation name, a relation label, or a `*`-separated
/// tensor expression such as `rho3*rho13` to an unextended representation.
Representation resolve_rep(const CatalogEntry& entry, const std::string& expr);

/// Every name the entry can resolve: seeds first, then relation labels.
std::vector<std::string> rep_names(const CatalogEntry& entry);

}  // namespace reflectinv
