#pragma once

#include <string>
#include <vector>

#include "core/catalog.hpp"

namespace ssmthom {

using WeightVector = std::vector<long>;  // torus character, length = rank

// Torus-weighted stable unfolding of a genotype. Weight lists are multisets,
// stored sorted; unfoldingWeights is contained in both source and target.
struct PrototypeModel {
  std::string name;
  int l = 1;
  int rank = 0;
  long scodim = 0;
  long tcodim = 0;
  std::vector<WeightVector> source_weights;
  std::vector<WeightVector> target_weights;
  std::vector<WeightVector> unfolding_weights;
  std::vector<WeightVector> generator_weights;
  std::vector<WeightVector> component_weights;
  // Chosen complement basis: (monomial exponents, component index).
  std::vector<std::pair<std::vector<int>, int>> complement_basis;
};

// Graded jet-space computation of the unfolding complement V. jet_bound = 0
// uses the default 2*dim_C(Q) + max component degree.
PrototypeModel build_prototype(const CatalogEntry& entry, int jet_bound = 0);

// Dimension of the local algebra presented by the genotype; also the
// finiteness check (throws NonFinite when the ideal never saturates).
int algebra_dimension(const CatalogEntry& entry, int degree_cutoff = 64);

// True iff the jet computation reproduces the family closed-form scodim.
bool closed_form_check(const CatalogEntry& entry, std::string* diagnostics = nullptr);

}  // namespace ssmthom
