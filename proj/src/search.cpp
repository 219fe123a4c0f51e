#include "rd/search.hpp"

#include <algorithm>
#include <utility>

#include "rd/dyck.hpp"
#include "rd/errors.hpp"
#include "rd/modp_kernel.hpp"

namespace rd {

namespace {

void require_spec(const SearchSpec& spec) {
  if (!spec.algebra.field.is_prime_field()) {
    throw InvalidInput("search requires a prime-field algebra");
  }
  if (spec.target == SearchTarget::weighted_rb && !spec.weight) {
    throw InvalidInput("weighted-rb search needs a weight");
  }
  if (spec.target == SearchTarget::generalized_rb && (!spec.alpha || !spec.beta)) {
    throw InvalidInput("generalized-rb search needs both weights");
  }
}

bool kernel_check(const SearchSpec& spec, const modp::AlgebraTable& table,
                  const modp::Mat* mats) {
  switch (spec.target) {
    case SearchTarget::weighted_rb:
      return modp::rb_weight_ok(table, mats[0], spec.weight->residue_value());
    case SearchTarget::generalized_rb:
      return modp::generalized_ok(table, mats[0], spec.alpha->residue_value(),
                                  spec.beta->residue_value());
    case SearchTarget::rb_system:
      return modp::system_ok(table, mats[0], mats[1]);
    case SearchTarget::bimultiplication:
      return modp::bimult_ok(table, mats[0], mats[1]);
    case SearchTarget::self_permutable:
      return modp::bimult_ok(table, mats[0], mats[1]) &&
             modp::self_permutable_ok(mats[0], mats[1], table.p);
    case SearchTarget::homothetic_triple:
      return modp::system_ok(table, mats[0], mats[1]) &&
             modp::bimult_ok(table, mats[2], mats[3]) &&
             modp::self_permutable_ok(mats[2], mats[3], table.p) &&
             modp::compat_ok(table, mats[0], mats[1], mats[2], mats[3]);
  }
  return false;
}

SearchHit decode_hit(const SearchSpec& spec, std::uint64_t index) {
  int k = matrices_per_target(spec.target);
  modp::Mat mats[4];
  modp::decode(index, k, spec.algebra.dim, spec.algebra.field.modulus(), mats);
  SearchHit hit;
  hit.ops.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    hit.ops.push_back(modp::to_linop(mats[i], spec.algebra.field));
  }
  return hit;
}

}  // namespace

int matrices_per_target(SearchTarget t) {
  switch (t) {
    case SearchTarget::weighted_rb:
    case SearchTarget::generalized_rb:
      return 1;
    case SearchTarget::rb_system:
    case SearchTarget::bimultiplication:
    case SearchTarget::self_permutable:
      return 2;
    case SearchTarget::homothetic_triple:
      return 4;
  }
  return 0;
}

std::string target_name(SearchTarget t) {
  switch (t) {
    case SearchTarget::weighted_rb:
      return "weighted-rb";
    case SearchTarget::generalized_rb:
      return "generalized-rb";
    case SearchTarget::rb_system:
      return "rb-system";
    case SearchTarget::bimultiplication:
      return "bimult";
    case SearchTarget::self_permutable:
      return "self-permutable";
    case SearchTarget::homothetic_triple:
      return "homothetic-triple";
  }
  return "?";
}

std::optional<SearchTarget> target_from_name(const std::string& name) {
  for (SearchTarget t :
       {SearchTarget::weighted_rb, SearchTarget::generalized_rb, SearchTarget::rb_system,
        SearchTarget::bimultiplication, SearchTarget::self_permutable,
        SearchTarget::homothetic_triple}) {
    if (target_name(t) == name) {
      return t;
    }
  }
  return std::nullopt;
}

std::uint64_t candidate_space(const SearchSpec& spec) {
  require_spec(spec);
  int digits = matrices_per_target(spec.target) * spec.algebra.dim * spec.algebra.dim;
  std::uint64_t p = static_cast<std::uint64_t>(spec.algebra.field.modulus());
  std::uint64_t space = 1;
  for (int d = 0; d < digits; ++d) {
    if (space > spec.guard / p) {
      throw SpaceTooLarge("candidate space " + std::to_string(p) + "^" +
                          std::to_string(digits) + " exceeds the guard of " +
                          std::to_string(spec.guard));
    }
    space *= p;
  }
  return space;
}

bool passes_target(const SearchSpec& spec, const std::vector<LinOp>& ops) {
  const Algebra& a = spec.algebra;
  switch (spec.target) {
    case SearchTarget::weighted_rb:
      return check_rb_weight(a, ops[0], *spec.weight).ok();
    case SearchTarget::generalized_rb:
      return check_generalized_rb(a, ops[0], *spec.alpha, *spec.beta).ok();
    case SearchTarget::rb_system:
      return check_rb_system(a, ops[0], ops[1]).ok();
    case SearchTarget::bimultiplication:
      return check_bimultiplication(a, DoubleOperator{ops[0], ops[1]}).ok();
    case SearchTarget::self_permutable: {
      DoubleOperator sigma{ops[0], ops[1]};
      return check_bimultiplication(a, sigma).ok() &&
             check_self_permutable(sigma).ok();
    }
    case SearchTarget::homothetic_triple: {
      DoubleOperator sigma{ops[2], ops[3]};
      RBSystem sys{a, ops[0], ops[1]};
      return check_rb_system(a, ops[0], ops[1]).ok() &&
             check_bimultiplication(a, sigma).ok() &&
             check_self_permutable(sigma).ok() &&
             check_homothetic_compat(sys, sigma).ok();
    }
  }
  return false;
}

SearchResult enumerate_search(const SearchSpec& spec) {
  std::uint64_t space = candidate_space(spec);
  modp::AlgebraTable table = modp::make_table(spec.algebra);
  int k = matrices_per_target(spec.target);
  int n = spec.algebra.dim;
  std::int64_t p = spec.algebra.field.modulus();

  std::vector<std::uint64_t> hit_indices;
#pragma omp parallel
  {
    std::vector<std::uint64_t> local;
    modp::Mat mats[4];
#pragma omp for schedule(static) nowait
    for (long long idx = 0; idx < static_cast<long long>(space); ++idx) {
      modp::decode(static_cast<std::uint64_t>(idx), k, n, p, mats);
      if (kernel_check(spec, table, mats)) {
        local.push_back(static_cast<std::uint64_t>(idx));
      }
    }
#pragma omp critical
    hit_indices.insert(hit_indices.end(), local.begin(), local.end());
  }
  std::sort(hit_indices.begin(), hit_indices.end());

  SearchResult result;
  result.spec = spec;
  result.total_scanned = space;
  result.hits.reserve(hit_indices.size());
  for (std::uint64_t idx : hit_indices) {
    SearchHit hit = decode_hit(spec, idx);
    if (!passes_target(spec, hit.ops)) {
      throw Error("internal: kernel hit rejected by the public predicate at index " +
                  std::to_string(idx));
    }
    result.hits.push_back(std::move(hit));
  }
  return result;
}

SearchResult enumerate_search_serial(const SearchSpec& spec) {
  std::uint64_t space = candidate_space(spec);
  SearchResult result;
  result.spec = spec;
  result.total_scanned = space;
  for (std::uint64_t idx = 0; idx < space; ++idx) {
    SearchHit hit = decode_hit(spec, idx);
    if (passes_target(spec, hit.ops)) {
      result.hits.push_back(std::move(hit));
    }
  }
  return result;
}

namespace {

void check_dyck_tower(const HomotheticRBSystem& h, const std::string& context,
                      std::uint64_t& constructions, std::vector<std::string>& failures) {
  for (int level = 1; level <= 6; ++level) {
    ++constructions;
    try {
      DyckAlgebra d = build_dyck(h, level);
      DyckCheckReport report = check_dyck_axioms(d);
      if (!report.passed()) {
        failures.push_back(context + ": level-" + std::to_string(level) +
                           " construction violates " +
                           report.violations.front().axiom.str());
      }
    } catch (const Error& e) {
      failures.push_back(context + ": level-" + std::to_string(level) +
                         " construction failed: " + e.what());
    }
  }
}

}  // namespace

CrossValidateReport cross_validate(const SearchResult& result) {
  CrossValidateReport report;
  const SearchSpec& spec = result.spec;
  const Algebra& a = spec.algebra;
  std::vector<std::vector<std::string>> failures_per_hit(result.hits.size());
  std::vector<std::uint64_t> constructions_per_hit(result.hits.size(), 0);

#pragma omp parallel for schedule(dynamic)
  for (long long idx = 0; idx < static_cast<long long>(result.hits.size()); ++idx) {
    const SearchHit& hit = result.hits[static_cast<std::size_t>(idx)];
    std::vector<std::string>& failures = failures_per_hit[static_cast<std::size_t>(idx)];
    std::uint64_t& constructions = constructions_per_hit[static_cast<std::size_t>(idx)];
    std::string context = "hit " + std::to_string(idx);
    try {
      switch (spec.target) {
        case SearchTarget::weighted_rb: {
          ++constructions;
          RBSystem sys = from_weighted({a, hit.ops[0], *spec.weight});
          if (!check_rb_system(sys.algebra, sys.r, sys.s).ok()) {
            failures.push_back(context + ": weighted split fails the system equations");
            break;
          }
          DoubleOperator sigma = scalar_homothetism(a, *spec.weight);
          if (!check_homothetic_compat(sys, sigma).ok()) {
            failures.push_back(context + ": weight rescaling fails compatibility");
            break;
          }
          check_dyck_tower({sys, sigma}, context, constructions, failures);
          break;
        }
        case SearchTarget::generalized_rb: {
          ++constructions;
          GeneralizedRBOperator g{a, hit.ops[0], *spec.alpha, *spec.beta};
          GeneralizedSplitResult split = from_generalized(g);
          for (const GeneralizedSplit& sp : split.systems) {
            if (!check_rb_system(sp.system.algebra, sp.system.r, sp.system.s).ok()) {
              failures.push_back(context + ": split system fails its equations");
              continue;
            }
            if (!(sp.lambda + sp.mu == *spec.alpha) || !(sp.lambda * sp.mu == *spec.beta)) {
              failures.push_back(context + ": root pair fails the weight relations");
              continue;
            }
            ++constructions;
            HomotheticRBSystem h = gamma_from_weights(g, sp.lambda, sp.mu);
            if (!is_valid_homothetic(h)) {
              failures.push_back(context + ": gamma system fails an invariant");
              continue;
            }
            check_dyck_tower(h, context, constructions, failures);
          }
          break;
        }
        case SearchTarget::rb_system: {
          ++constructions;
          Algebra b = build_triple_algebra(a);
          LinOp nij = build_nijenhuis_matrix(a, hit.ops[0], hit.ops[1]);
          if (!check_nijenhuis(b, nij).ok()) {
            failures.push_back(context + ": embedding is not a Nijenhuis operator");
            break;
          }
          RBSystem sys{a, hit.ops[0], hit.ops[1]};
          check_dyck_tower({sys, scalar_homothetism(a, Scalar::zero(a.field))},
                           context, constructions, failures);
          break;
        }
        case SearchTarget::bimultiplication: {
          ++constructions;
          if (!check_bimultiplication(a, DoubleOperator{hit.ops[0], hit.ops[1]}).ok()) {
            failures.push_back(context + ": re-check failed");
          }
          break;
        }
        case SearchTarget::self_permutable: {
          ++constructions;
          DoubleOperator sigma{hit.ops[0], hit.ops[1]};
          if (!check_bimultiplication(a, sigma).ok() || !check_self_permutable(sigma).ok()) {
            failures.push_back(context + ": re-check failed");
          }
          break;
        }
        case SearchTarget::homothetic_triple: {
          RBSystem sys{a, hit.ops[0], hit.ops[1]};
          DoubleOperator sigma{hit.ops[2], hit.ops[3]};
          check_dyck_tower({sys, sigma}, context, constructions, failures);
          break;
        }
      }
    } catch (const Error& e) {
      failures.push_back(context + ": " + e.what());
    }
  }

  report.hits_validated = result.hits.size();
  for (std::size_t i = 0; i < result.hits.size(); ++i) {
    report.constructions_run += constructions_per_hit[i];
    report.failures.insert(report.failures.end(), failures_per_hit[i].begin(),
                           failures_per_hit[i].end());
  }
  return report;
}

}  // namespace rd
