#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"
#include "rd/dyck.hpp"
#include "rd/homothetism.hpp"
#include "rd/rota_baxter.hpp"
#include "rd/search.hpp"

namespace rd {

// Insertion-ordered so that emitted artifacts are byte-stable.
using Json = nlohmann::ordered_json;

// ---- scalars and fields ----
// {"type":"Q"} or {"type":"Fp","p":3}
Json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const Json& j);

// Q: "n" or "n/d" strings; F_p: integer in [0, p).
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const FieldDescriptor& f, const Json& j);

// ---- algebras and operators ----
// {"field":…, "dim":n, "label":…, "structure_constants": c[i][j] = n scalars}
Json algebra_to_json(const Algebra& a);
// Refuses tables failing check_associative, quoting the violating triples.
Algebra algebra_from_json(const Json& j);

// Bare matrix value: n columns of n scalars, column j = image of e_j.
Json matrix_to_json(const LinOp& t);
LinOp matrix_from_json(const FieldDescriptor& f, int dim, const Json& j);

// {"matrix": …}
Json linop_to_json(const LinOp& t);
LinOp linop_from_json(const FieldDescriptor& f, int dim, const Json& j);

// {"left": matrix, "right": matrix}
Json double_operator_to_json(const DoubleOperator& d);
DoubleOperator double_operator_from_json(const FieldDescriptor& f, int dim, const Json& j);

Json element_to_json(const Element& e);

// ---- Dyck algebras ----
// {"field":…, "dim":n, "m":m, "products":[tensor_0 … tensor_m]}, each tensor
// in the structure-constant layout.
Json dyck_to_json(const DyckAlgebra& d);
DyckAlgebra dyck_from_json(const Json& j);

// ---- check reports ----
Json associativity_report_to_json(const AssociativityReport& r);
Json rb_weight_report_to_json(const RBWeightReport& r);
Json generalized_report_to_json(const GeneralizedRBReport& r);
Json system_report_to_json(const RBSystemReport& r);
Json nijenhuis_report_to_json(const NijenhuisReport& r);
Json bimult_report_to_json(const BimultReport& r);
Json self_perm_report_to_json(const SelfPermReport& r);
Json compat_report_to_json(const CompatReport& r);
Json dyck_report_to_json(const DyckCheckReport& r);

// ---- search ----
Json search_spec_to_json(const SearchSpec& s);
SearchSpec search_spec_from_json(const Json& j);
Json search_hit_to_json(SearchTarget t, const SearchHit& h);
Json search_result_to_json(const SearchResult& r);
SearchResult search_result_from_json(const Json& j);
Json cross_validate_report_to_json(const CrossValidateReport& r);

// ---- workspace ----
struct OperatorEntry {
  std::string algebra;
  std::variant<LinOp, DoubleOperator> op;
};

struct TargetEntry {
  std::string check;
  std::string algebra;
  std::map<std::string, std::string> refs;  // role -> name (R, S, Rbar, N, sigma, lambda, alpha, beta, dyck)
};

struct Workspace {
  std::map<std::string, Algebra> algebras;
  std::map<std::string, OperatorEntry> operators;
  std::map<std::string, Scalar> scalars;
  std::map<std::string, DyckAlgebra> dyck_algebras;
  std::map<std::string, TargetEntry> targets;
};

// Parses and validates: every algebra associative, every reference resolved,
// operator dimensions consistent. Throws ParseError otherwise.
Workspace workspace_from_json(const Json& j);

// Fully resolved verify/construct source.
struct ResolvedTarget {
  std::string check;
  std::optional<Algebra> algebra;
  std::optional<LinOp> r;
  std::optional<LinOp> s;
  std::optional<LinOp> rbar;
  std::optional<LinOp> nop;
  std::optional<DoubleOperator> sigma;
  std::optional<Scalar> lambda;
  std::optional<Scalar> alpha;
  std::optional<Scalar> beta;
  std::optional<DyckAlgebra> dyck;
};

ResolvedTarget resolve_target(const Workspace& ws, const std::string& name);

// ---- files ----
Json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace rd
