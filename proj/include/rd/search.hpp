#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rd/homothetism.hpp"
#include "rd/rota_baxter.hpp"

namespace rd {

enum class SearchTarget {
  weighted_rb,      // single operator, fixed weight
  generalized_rb,   // single operator, fixed weight pair
  rb_system,        // pair (R, S)
  bimultiplication, // pair (left, right)
  self_permutable,  // bimultiplication + commuting halves
  homothetic_triple // (R, S, sigma) satisfying everything at once
};

// Number of matrices a candidate for the target consists of.
int matrices_per_target(SearchTarget t);

std::string target_name(SearchTarget t);
std::optional<SearchTarget> target_from_name(const std::string& name);

inline constexpr std::uint64_t kDefaultGuard = 10'000'000;

struct SearchSpec {
  Algebra algebra;  // must be over a prime field
  SearchTarget target = SearchTarget::rb_system;
  std::optional<Scalar> weight;  // weighted_rb
  std::optional<Scalar> alpha;   // generalized_rb
  std::optional<Scalar> beta;    // generalized_rb
  std::uint64_t guard = kDefaultGuard;
};

// Operators of one hit, in role order: [R] for the single-operator targets,
// [R, S] for systems, [left, right] for bimultiplications, and
// [R, S, left, right] for homothetic triples.
struct SearchHit {
  std::vector<LinOp> ops;
};

struct SearchResult {
  SearchSpec spec;
  std::vector<SearchHit> hits;
  std::uint64_t total_scanned = 0;
};

// Exact candidate-space size p^(n^2 * k); throws SpaceTooLarge when it
// exceeds the guard (the scan refuses rather than sampling).
std::uint64_t candidate_space(const SearchSpec& spec);

// Scans every candidate tuple in row-major scalar order (candidate index is
// a base-p number over the concatenated matrix entries, last entry moving
// fastest). The scan itself runs on the residue kernel, partitioned across
// threads by index range; hits are merged back into scan order and each one
// is re-verified through the public predicates before inclusion. Results
// are identical regardless of thread count.
SearchResult enumerate_search(const SearchSpec& spec);

// Reference scan: same order, no kernel, no threading; every candidate is
// decided by the public predicates directly. Kept for testing and for the
// benchmark; must produce results identical to enumerate_search.
SearchResult enumerate_search_serial(const SearchSpec& spec);

// True when the tuple satisfies the target predicate, via the public checks.
bool passes_target(const SearchSpec& spec, const std::vector<LinOp>& ops);

struct CrossValidateReport {
  std::uint64_t hits_validated = 0;
  std::uint64_t constructions_run = 0;
  // One line per failed construction postcondition; empty on success.
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Runs every applicable downstream construction on each hit and re-checks
// the advertised postconditions: weighted hits through from_weighted and
// the scalar-homothetism tower, generalized hits through from_generalized /
// gamma_from_weights, systems through the triple-algebra embedding and the
// always-compatible sigma = 0, homothetic triples through the full level
// 1..6 construction.
CrossValidateReport cross_validate(const SearchResult& result);

}  // namespace rd
