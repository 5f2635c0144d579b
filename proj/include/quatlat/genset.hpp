/** @file genset.hpp
 *  @brief Spans of lattice vectors with prescribed norms.
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quatlat/classes.hpp"
#include "quatlat/lattice.hpp"

namespace quatlat {

struct NormSpanStep {
  Integer norm;
  std::size_t vectors = 0;        ///< vectors of exactly this norm
  std::optional<Integer> index;   ///< index of the running span; nullopt while rank deficient
};

struct NormSpanReport {
  std::vector<NormSpanStep> trajectory;
  std::optional<Integer> final_index;
  IntegerMatrix span;  ///< HNF basis of the span, lattice coordinates
};

std::vector<IntegerVector> elements_of_norm(const GramMatrix& g, const Integer& s);
std::vector<IntegerVector> elements_of_norm(const ExactLattice& l, const Integer& s);

/// Span of all vectors whose norm is in the list, processed in the given order.
NormSpanReport span_by_norms(const GramMatrix& g, const std::vector<Integer>& norms);
NormSpanReport span_by_norms(const ExactLattice& l, const std::vector<Integer>& norms);

/// Index in Zⁿ of the span of the given integer vectors, nullopt when rank deficient.
std::optional<Integer> span_index(const std::vector<IntegerVector>& vectors, std::size_t n);

struct ClassGeneration {
  std::size_t class_index = 0;
  std::optional<int> minimal_k;  ///< nullopt: inconclusive up to k_max
  NormSpanReport span;
};

struct NormGenerationReport {
  long p = 0, ell = 0;
  int k_max = 0;
  std::vector<ClassGeneration> classes;
  bool all_generated() const;
};

/// For each maximal-order class of B_p: least K with norms {ℓ⁰..ℓᴷ} generating the order.
NormGenerationReport verify_norm_generation(long p, long ell, int k_max);

struct CounterexampleReport {
  std::string name;
  bool reproduced = false;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<NormSpanReport> spans;
};

/// One of ex19, ex37, ex-strong-lsc, eichler-even, eichler-three.
CounterexampleReport verify_counterexample(const std::string& name);
std::vector<std::string> counterexample_names();

}  // namespace quatlat
