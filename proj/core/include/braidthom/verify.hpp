#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidthom/random.hpp"

namespace braidthom {

struct Failure {
  std::uint64_t trial;
  std::string message;
  /// Counterexample elements as text literals (parse_element reads them back).
  std::vector<std::string> elements;
};

struct SuiteReport {
  std::string name;
  std::uint64_t trials = 0;
  GenConfig config;
  std::vector<Failure> failures;  // sorted by trial
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return failures.empty(); }
  std::string to_json(int indent = -1) const;
};

/// group_axioms, confluence, braid_oracle_crosscheck, lemma_conjugate,
/// lemma_push_into_1, lemma_commconj, lemma_normal_bP, lemma_onto_bP,
/// chi1_hom, hnn_roundtrip, center, three_factor, fig5_conventions.
std::span<const std::string_view> suite_names();

/// Runs `trials` samples of the named property. Trial t draws from
/// Rng(cfg.seed, t), so the report does not depend on `threads` (0 picks
/// the hardware concurrency). cfg.constrain is ignored; each suite samples
/// from the subgroups its property is about. Throws DomainError for an
/// unknown suite.
SuiteReport run_suite(std::string_view name, std::uint64_t trials, const GenConfig& cfg,
                      unsigned threads = 1);

}  // namespace braidthom
