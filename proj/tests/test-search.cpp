#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "rd/errors.hpp"
#include "rd/io.hpp"
#include "rd/search.hpp"

using namespace rd;
using namespace rd::testing;

namespace {

SearchSpec spec_for(const Algebra& a, SearchTarget t) {
  SearchSpec s;
  s.algebra = a;
  s.target = t;
  return s;
}

}  // namespace

TEST_CASE("weighted census on the zero line finds everything", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  SearchSpec spec = spec_for(line_algebra(f2, Scalar::zero(f2)), SearchTarget::weighted_rb);
  spec.weight = Scalar::zero(f2);
  SearchResult result = enumerate_search(spec);
  REQUIRE(result.total_scanned == 2);
  REQUIRE(result.hits.size() == 2);
}

TEST_CASE("weighted census on idempotent lines matches the closed form", "[search]") {
  // On e^2 = e the weight-w identity for a 1x1 matrix r reads
  // r^2 = r(2r + w), i.e. r(r + w) = 0, so the hits are r = 0 and r = -w.
  struct Case {
    std::int64_t p;
    std::int64_t weight;
  };
  for (Case c : {Case{2, 0}, Case{2, 1}, Case{3, 1}, Case{5, 2}}) {
    FieldDescriptor f = FieldDescriptor::prime_field(c.p);
    Algebra a = line_algebra(f, Scalar::one(f));
    SearchSpec spec = spec_for(a, SearchTarget::weighted_rb);
    spec.weight = Scalar::of_int(f, c.weight);
    SearchResult result = enumerate_search(spec);
    std::vector<std::int64_t> expected = {0};
    if (c.weight != 0) {
      expected.push_back(c.p - c.weight);
    }
    REQUIRE(result.hits.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      REQUIRE(result.hits[i].ops[0].at(0, 0).residue_value() == expected[i]);
    }
  }
}

TEST_CASE("system census on the idempotent line over F2", "[search]") {
  // Both system equations reduce to r s = 0 here, so (1,1) is not a hit.
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  Algebra a = line_algebra(f2, Scalar::one(f2));
  SearchResult result = enumerate_search(spec_for(a, SearchTarget::rb_system));
  REQUIRE(result.total_scanned == 4);
  REQUIRE(result.hits.size() == 3);
  auto pair_of = [&](const SearchHit& h) {
    return std::pair<std::int64_t, std::int64_t>{h.ops[0].at(0, 0).residue_value(),
                                                 h.ops[1].at(0, 0).residue_value()};
  };
  REQUIRE(pair_of(result.hits[0]) == std::pair<std::int64_t, std::int64_t>{0, 0});
  REQUIRE(pair_of(result.hits[1]) == std::pair<std::int64_t, std::int64_t>{0, 1});
  REQUIRE(pair_of(result.hits[2]) == std::pair<std::int64_t, std::int64_t>{1, 0});
}

TEST_CASE("homothetic census contains the zero triple", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  Algebra a = truncated_poly_algebra(f2, 2);
  SearchResult result = enumerate_search(spec_for(a, SearchTarget::homothetic_triple));
  REQUIRE(result.total_scanned == 65536);
  REQUIRE(!result.hits.empty());
  for (const LinOp& op : result.hits[0].ops) {
    REQUIRE(op == zero_op(a));
  }
}

TEST_CASE("kernel scan and serial reference agree", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  FieldDescriptor f3 = FieldDescriptor::prime_field(3);
  std::vector<SearchSpec> specs;
  specs.push_back(spec_for(truncated_poly_algebra(f2, 2), SearchTarget::rb_system));
  specs.push_back(spec_for(line_algebra(f3, Scalar::one(f3)), SearchTarget::homothetic_triple));
  specs.push_back(spec_for(truncated_poly_algebra(f2, 2), SearchTarget::bimultiplication));
  specs.push_back(spec_for(truncated_poly_algebra(f3, 2), SearchTarget::self_permutable));
  {
    SearchSpec weighted = spec_for(truncated_poly_algebra(f3, 2), SearchTarget::weighted_rb);
    weighted.weight = Scalar::of_int(f3, 2);
    specs.push_back(weighted);
    SearchSpec generalized = spec_for(line_algebra(f3, Scalar::one(f3)),
                                      SearchTarget::generalized_rb);
    generalized.alpha = Scalar::of_int(f3, 1);
    generalized.beta = Scalar::of_int(f3, 0);
    specs.push_back(generalized);
  }
  for (const SearchSpec& spec : specs) {
    SearchResult fast = enumerate_search(spec);
    SearchResult reference = enumerate_search_serial(spec);
    REQUIRE(fast.total_scanned == reference.total_scanned);
    REQUIRE(fast.hits.size() == reference.hits.size());
    for (std::size_t i = 0; i < fast.hits.size(); ++i) {
      REQUIRE(fast.hits[i].ops == reference.hits[i].ops);
    }
  }
}

TEST_CASE("repeated scans serialize identically", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  SearchSpec spec = spec_for(truncated_poly_algebra(f2, 2), SearchTarget::homothetic_triple);
  std::string first = search_result_to_json(enumerate_search(spec)).dump();
  std::string second = search_result_to_json(enumerate_search(spec)).dump();
  REQUIRE(first == second);
}

TEST_CASE("every hit passes its public predicate", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  SearchSpec spec = spec_for(direct_sum_lines(f2), SearchTarget::rb_system);
  SearchResult result = enumerate_search(spec);
  REQUIRE(!result.hits.empty());
  for (const SearchHit& hit : result.hits) {
    REQUIRE(passes_target(spec, hit.ops));
  }
}

TEST_CASE("the guard refuses oversized spaces", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  SearchSpec spec = spec_for(truncated_poly_algebra(f2, 2), SearchTarget::homothetic_triple);
  spec.guard = 100;
  REQUIRE_THROWS_AS(enumerate_search(spec), SpaceTooLarge);
  spec.guard = 65536;
  REQUIRE(candidate_space(spec) == 65536);

  SearchSpec big = spec_for(truncated_poly_algebra(FieldDescriptor::prime_field(7), 2),
                            SearchTarget::homothetic_triple);
  REQUIRE_THROWS_AS(candidate_space(big), SpaceTooLarge);  // 7^16 over the default guard
}

TEST_CASE("searches demand prime fields and parameters", "[search]") {
  SearchSpec spec = spec_for(truncated_poly_algebra(FieldDescriptor::rationals(), 2),
                             SearchTarget::rb_system);
  REQUIRE_THROWS_AS(enumerate_search(spec), InvalidInput);
  SearchSpec missing = spec_for(line_algebra(FieldDescriptor::prime_field(2),
                                             Scalar::one(FieldDescriptor::prime_field(2))),
                                SearchTarget::weighted_rb);
  REQUIRE_THROWS_AS(enumerate_search(missing), InvalidInput);
}

TEST_CASE("cross validation of weighted hits", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  SearchSpec spec = spec_for(truncated_poly_algebra(f2, 2), SearchTarget::weighted_rb);
  spec.weight = Scalar::one(f2);
  SearchResult result = enumerate_search(spec);
  REQUIRE(!result.hits.empty());
  CrossValidateReport report = cross_validate(result);
  REQUIRE(report.ok());
  REQUIRE(report.hits_validated == result.hits.size());
  REQUIRE(report.constructions_run > report.hits_validated);
}

TEST_CASE("cross validation of generalized hits over F2", "[search]") {
  // Weights (1, 0): on the idempotent line r^2 = r, so both 1x1 matrices hit;
  // the split roots of t^2 - t are {0, 1}.
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  SearchSpec spec = spec_for(line_algebra(f2, Scalar::one(f2)), SearchTarget::generalized_rb);
  spec.alpha = Scalar::one(f2);
  spec.beta = Scalar::zero(f2);
  SearchResult result = enumerate_search(spec);
  REQUIRE(result.hits.size() == 2);
  GeneralizedSplitResult split = from_generalized(
      {spec.algebra, result.hits[0].ops[0], *spec.alpha, *spec.beta});
  REQUIRE(split.systems.size() == 2);
  REQUIRE(split.systems[0].lambda.residue_value() == 0);
  REQUIRE(split.systems[0].mu.residue_value() == 1);
  CrossValidateReport report = cross_validate(result);
  REQUIRE(report.ok());
}

TEST_CASE("cross validation of an empty census is empty", "[search]") {
  // Weights (0, 2) over F_3: r^2 = 2 has no solution, 2 is not a square mod 3.
  FieldDescriptor f3 = FieldDescriptor::prime_field(3);
  SearchSpec spec = spec_for(line_algebra(f3, Scalar::one(f3)), SearchTarget::generalized_rb);
  spec.alpha = Scalar::zero(f3);
  spec.beta = Scalar::of_int(f3, 2);
  SearchResult result = enumerate_search(spec);
  REQUIRE(result.hits.empty());
  CrossValidateReport report = cross_validate(result);
  REQUIRE(report.hits_validated == 0);
  REQUIRE(report.constructions_run == 0);
  REQUIRE(report.ok());
}

TEST_CASE("self-permutable hits are bimultiplications with commuting halves", "[search]") {
  FieldDescriptor f2 = FieldDescriptor::prime_field(2);
  Algebra a = truncated_poly_algebra(f2, 2);
  SearchResult bimult = enumerate_search(spec_for(a, SearchTarget::bimultiplication));
  SearchResult selfperm = enumerate_search(spec_for(a, SearchTarget::self_permutable));
  REQUIRE(selfperm.hits.size() <= bimult.hits.size());
  REQUIRE(!selfperm.hits.empty());
  for (const SearchHit& hit : selfperm.hits) {
    DoubleOperator sigma{hit.ops[0], hit.ops[1]};
    REQUIRE(check_bimultiplication(a, sigma).ok());
    REQUIRE(check_self_permutable(sigma).ok());
  }
}

TEST_CASE("scan order is the base-p odometer over matrix entries", "[search]") {
  // On the zero line every candidate hits, so the census lists the scan
  // order itself.
  FieldDescriptor f3 = FieldDescriptor::prime_field(3);
  Algebra a = line_algebra(f3, Scalar::zero(f3));
  SearchResult result = enumerate_search(spec_for(a, SearchTarget::rb_system));
  REQUIRE(result.total_scanned == 9);
  REQUIRE(result.hits.size() == 9);
  for (std::int64_t idx = 0; idx < 9; ++idx) {
    REQUIRE(result.hits[static_cast<std::size_t>(idx)].ops[0].at(0, 0).residue_value() ==
            idx / 3);
    REQUIRE(result.hits[static_cast<std::size_t>(idx)].ops[1].at(0, 0).residue_value() ==
            idx % 3);
  }
}
