#include "rd/io.hpp"

#include <fstream>
#include <utility>

#include "rd/errors.hpp"

namespace rd {

namespace {

const Json& expect_member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(where + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

int expect_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ParseError(where + ": expected an integer");
  }
  return j.get<int>();
}

std::string expect_string(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    throw ParseError(where + ": expected a string");
  }
  return j.get<std::string>();
}

bool all_digits(const std::string& s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

Scalar parse_rational_string(const std::string& text, const std::string& where) {
  std::string num = text;
  std::string den = "1";
  if (auto slash = text.find('/'); slash != std::string::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string digits = num;
  if (!digits.empty() && digits[0] == '-') {
    digits = digits.substr(1);
  }
  if (!all_digits(digits) || !all_digits(den)) {
    throw ParseError(where + ": malformed rational \"" + text + "\"");
  }
  BigInt d(den);
  if (d.is_zero()) {
    throw ParseError(where + ": zero denominator in \"" + text + "\"");
  }
  return Scalar::rational(BigRational(BigInt(num), d));
}

}  // namespace

Json field_to_json(const FieldDescriptor& f) {
  if (f.is_rationals()) {
    return Json{{"type", "Q"}};
  }
  return Json{{"type", "Fp"}, {"p", f.modulus()}};
}

FieldDescriptor field_from_json(const Json& j) {
  std::string type = expect_string(expect_member(j, "type", "field"), "field.type");
  if (type == "Q") {
    return FieldDescriptor::rationals();
  }
  if (type == "Fp") {
    const Json& pj = expect_member(j, "p", "field");
    if (!pj.is_number_integer() && !pj.is_number_unsigned()) {
      throw ParseError("field.p: expected an integer");
    }
    try {
      return FieldDescriptor::prime_field(pj.get<std::int64_t>());
    } catch (const InvalidInput& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field.type must be \"Q\" or \"Fp\"");
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_prime_field()) {
    return Json(s.residue_value());
  }
  return Json(s.str());
}

Scalar scalar_from_json(const FieldDescriptor& f, const Json& j) {
  if (f.is_prime_field()) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) {
      throw ParseError("scalar: prime-field value must be an integer");
    }
    std::int64_t v = j.get<std::int64_t>();
    if (v < 0 || v >= f.modulus()) {
      throw ParseError("scalar: residue " + std::to_string(v) +
                       " outside [0, " + std::to_string(f.modulus()) + ")");
    }
    return Scalar::residue(f, v);
  }
  if (!j.is_string()) {
    throw ParseError("scalar: rational value must be a string");
  }
  return parse_rational_string(j.get<std::string>(), "scalar");
}

Json algebra_to_json(const Algebra& a) {
  Json j;
  j["field"] = field_to_json(a.field);
  j["dim"] = a.dim;
  if (!a.label.empty()) {
    j["label"] = a.label;
  }
  Json rows = Json::array();
  for (int i = 0; i < a.dim; ++i) {
    Json row = Json::array();
    for (int jj = 0; jj < a.dim; ++jj) {
      Json cell = Json::array();
      for (int k = 0; k < a.dim; ++k) {
        cell.push_back(scalar_to_json(a.sc(i, jj, k)));
      }
      row.push_back(std::move(cell));
    }
    rows.push_back(std::move(row));
  }
  j["structure_constants"] = std::move(rows);
  return j;
}

Algebra algebra_from_json(const Json& j) {
  FieldDescriptor f = field_from_json(expect_member(j, "field", "algebra"));
  int dim = expect_int(expect_member(j, "dim", "algebra"), "algebra.dim");
  if (dim < 1) {
    throw ParseError("algebra.dim must be at least 1");
  }
  Algebra a = make_zero_algebra(f, dim);
  if (j.contains("label")) {
    a.label = expect_string(j.at("label"), "algebra.label");
  }
  const Json& rows = expect_member(j, "structure_constants", "algebra");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim) {
    throw ParseError("algebra.structure_constants must have dim rows");
  }
  for (int i = 0; i < dim; ++i) {
    const Json& row = rows.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<int>(row.size()) != dim) {
      throw ParseError("algebra.structure_constants rows must have dim cells");
    }
    for (int jj = 0; jj < dim; ++jj) {
      const Json& cell = row.at(static_cast<std::size_t>(jj));
      if (!cell.is_array() || static_cast<int>(cell.size()) != dim) {
        throw ParseError("algebra.structure_constants cells must list dim coordinates");
      }
      for (int k = 0; k < dim; ++k) {
        a.sc(i, jj, k) = scalar_from_json(f, cell.at(static_cast<std::size_t>(k)));
      }
    }
  }
  AssociativityReport report = check_associative(a);
  if (!report.ok()) {
    std::string triples;
    for (const auto& t : report.violations) {
      triples += " (" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                 std::to_string(t[2]) + ")";
      if (triples.size() > 120) {
        triples += " …";
        break;
      }
    }
    throw ParseError("algebra \"" + a.label + "\" is not associative; violating triples:" +
                     triples);
  }
  return a;
}

Json matrix_to_json(const LinOp& t) {
  Json cols = Json::array();
  for (int j = 0; j < t.dim; ++j) {
    Json col = Json::array();
    for (int i = 0; i < t.dim; ++i) {
      col.push_back(scalar_to_json(t.at(i, j)));
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

LinOp matrix_from_json(const FieldDescriptor& f, int dim, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim) {
    throw ParseError("matrix must have " + std::to_string(dim) + " columns");
  }
  LinOp t;
  t.dim = dim;
  t.m.assign(static_cast<std::size_t>(dim) * dim, Scalar::zero(f));
  for (int col = 0; col < dim; ++col) {
    const Json& c = j.at(static_cast<std::size_t>(col));
    if (!c.is_array() || static_cast<int>(c.size()) != dim) {
      throw ParseError("matrix column must have " + std::to_string(dim) + " entries");
    }
    for (int row = 0; row < dim; ++row) {
      t.at(row, col) = scalar_from_json(f, c.at(static_cast<std::size_t>(row)));
    }
  }
  return t;
}

Json linop_to_json(const LinOp& t) {
  return Json{{"matrix", matrix_to_json(t)}};
}

LinOp linop_from_json(const FieldDescriptor& f, int dim, const Json& j) {
  return matrix_from_json(f, dim, expect_member(j, "matrix", "operator"));
}

Json double_operator_to_json(const DoubleOperator& d) {
  return Json{{"left", matrix_to_json(d.left)}, {"right", matrix_to_json(d.right)}};
}

DoubleOperator double_operator_from_json(const FieldDescriptor& f, int dim, const Json& j) {
  return DoubleOperator{
      matrix_from_json(f, dim, expect_member(j, "left", "double operator")),
      matrix_from_json(f, dim, expect_member(j, "right", "double operator"))};
}

Json element_to_json(const Element& e) {
  Json arr = Json::array();
  for (const Scalar& c : e.coords) {
    arr.push_back(scalar_to_json(c));
  }
  return arr;
}

Json dyck_to_json(const DyckAlgebra& d) {
  Json j;
  j["field"] = field_to_json(d.field);
  j["dim"] = d.dim;
  j["m"] = d.level;
  Json products = Json::array();
  for (int op = 0; op <= d.level; ++op) {
    Json tensor = Json::array();
    for (int a = 0; a < d.dim; ++a) {
      Json row = Json::array();
      for (int b = 0; b < d.dim; ++b) {
        Json cell = Json::array();
        for (int c = 0; c < d.dim; ++c) {
          cell.push_back(scalar_to_json(d.pc(op, a, b, c)));
        }
        row.push_back(std::move(cell));
      }
      tensor.push_back(std::move(row));
    }
    products.push_back(std::move(tensor));
  }
  j["products"] = std::move(products);
  return j;
}

DyckAlgebra dyck_from_json(const Json& j) {
  DyckAlgebra d;
  d.field = field_from_json(expect_member(j, "field", "dyck algebra"));
  d.dim = expect_int(expect_member(j, "dim", "dyck algebra"), "dyck.dim");
  d.level = expect_int(expect_member(j, "m", "dyck algebra"), "dyck.m");
  if (d.dim < 1 || d.level < 0) {
    throw ParseError("dyck algebra needs dim >= 1 and m >= 0");
  }
  const Json& products = expect_member(j, "products", "dyck algebra");
  if (!products.is_array() || static_cast<int>(products.size()) != d.level + 1) {
    throw ParseError("dyck algebra must list m + 1 product tensors");
  }
  d.products.assign(static_cast<std::size_t>(d.level) + 1,
                    std::vector<Scalar>(static_cast<std::size_t>(d.dim) * d.dim * d.dim,
                                        Scalar::zero(d.field)));
  for (int op = 0; op <= d.level; ++op) {
    const Json& tensor = products.at(static_cast<std::size_t>(op));
    if (!tensor.is_array() || static_cast<int>(tensor.size()) != d.dim) {
      throw ParseError("dyck product tensor has wrong shape");
    }
    for (int a = 0; a < d.dim; ++a) {
      const Json& row = tensor.at(static_cast<std::size_t>(a));
      if (!row.is_array() || static_cast<int>(row.size()) != d.dim) {
        throw ParseError("dyck product tensor has wrong shape");
      }
      for (int b = 0; b < d.dim; ++b) {
        const Json& cell = row.at(static_cast<std::size_t>(b));
        if (!cell.is_array() || static_cast<int>(cell.size()) != d.dim) {
          throw ParseError("dyck product tensor has wrong shape");
        }
        for (int c = 0; c < d.dim; ++c) {
          d.pc(op, a, b, c) = scalar_from_json(d.field, cell.at(static_cast<std::size_t>(c)));
        }
      }
    }
  }
  return d;
}

namespace {

Json pair_witnesses(const std::vector<PairWitness>& ws) {
  Json arr = Json::array();
  for (const auto& w : ws) {
    arr.push_back(Json{{"i", w.i}, {"j", w.j}});
  }
  return arr;
}

}  // namespace

Json associativity_report_to_json(const AssociativityReport& r) {
  Json arr = Json::array();
  for (const auto& t : r.violations) {
    arr.push_back(Json{{"triple", Json::array({t[0], t[1], t[2]})}});
  }
  return Json{{"passed", r.ok()}, {"witnesses", std::move(arr)}};
}

Json rb_weight_report_to_json(const RBWeightReport& r) {
  return Json{{"passed", r.ok()}, {"witnesses", pair_witnesses(r.violations)}};
}

Json generalized_report_to_json(const GeneralizedRBReport& r) {
  return Json{{"passed", r.ok()}, {"witnesses", pair_witnesses(r.violations)}};
}

Json system_report_to_json(const RBSystemReport& r) {
  Json arr = Json::array();
  for (const auto& w : r.violations) {
    arr.push_back(Json{{"equation", w.equation == SystemEquation::r_equation ? "R" : "S"},
                       {"i", w.i},
                       {"j", w.j}});
  }
  return Json{{"passed", r.ok()}, {"witnesses", std::move(arr)}};
}

Json nijenhuis_report_to_json(const NijenhuisReport& r) {
  return Json{{"passed", r.ok()}, {"witnesses", pair_witnesses(r.violations)}};
}

Json bimult_report_to_json(const BimultReport& r) {
  Json arr = Json::array();
  for (const auto& w : r.violations) {
    const char* id = w.identity == BimultIdentity::product_left    ? "product_left"
                     : w.identity == BimultIdentity::product_right ? "product_right"
                                                                   : "middle";
    arr.push_back(Json{{"identity", id}, {"i", w.i}, {"j", w.j}});
  }
  return Json{{"passed", r.ok()}, {"witnesses", std::move(arr)}};
}

Json self_perm_report_to_json(const SelfPermReport& r) {
  Json arr = Json::array();
  for (const auto& w : r.violations) {
    arr.push_back(Json{{"i", w.i}});
  }
  return Json{{"passed", r.ok()}, {"witnesses", std::move(arr)}};
}

Json compat_report_to_json(const CompatReport& r) {
  Json arr = Json::array();
  for (const auto& w : r.violations) {
    arr.push_back(Json{{"i", w.i}});
  }
  return Json{{"passed", r.ok()}, {"witnesses", std::move(arr)}};
}

Json dyck_report_to_json(const DyckCheckReport& r) {
  Json arr = Json::array();
  for (const auto& v : r.violations) {
    arr.push_back(Json{{"axiom", v.axiom.str()},
                       {"triple", Json::array({v.triple[0], v.triple[1], v.triple[2]})},
                       {"lhs", element_to_json(v.lhs)},
                       {"rhs", element_to_json(v.rhs)}});
  }
  return Json{{"passed", r.passed()},
              {"checks", r.checks},
              {"witnesses", std::move(arr)}};
}

Json search_spec_to_json(const SearchSpec& s) {
  Json params = Json::object();
  if (s.weight) {
    params["lambda"] = scalar_to_json(*s.weight);
  }
  if (s.alpha) {
    params["alpha"] = scalar_to_json(*s.alpha);
  }
  if (s.beta) {
    params["beta"] = scalar_to_json(*s.beta);
  }
  return Json{{"algebra", algebra_to_json(s.algebra)},
              {"target", target_name(s.target)},
              {"params", std::move(params)},
              {"guard", s.guard}};
}

SearchSpec search_spec_from_json(const Json& j) {
  SearchSpec s;
  s.algebra = algebra_from_json(expect_member(j, "algebra", "search spec"));
  std::string target =
      expect_string(expect_member(j, "target", "search spec"), "search.target");
  auto t = target_from_name(target);
  if (!t) {
    throw ParseError("unknown search target \"" + target + "\"");
  }
  s.target = *t;
  if (j.contains("params")) {
    const Json& params = j.at("params");
    if (params.contains("lambda")) {
      s.weight = scalar_from_json(s.algebra.field, params.at("lambda"));
    }
    if (params.contains("alpha")) {
      s.alpha = scalar_from_json(s.algebra.field, params.at("alpha"));
    }
    if (params.contains("beta")) {
      s.beta = scalar_from_json(s.algebra.field, params.at("beta"));
    }
  }
  if (j.contains("guard")) {
    s.guard = j.at("guard").get<std::uint64_t>();
  }
  return s;
}

Json search_hit_to_json(SearchTarget t, const SearchHit& h) {
  switch (t) {
    case SearchTarget::weighted_rb:
      return Json{{"R", linop_to_json(h.ops[0])}};
    case SearchTarget::generalized_rb:
      return Json{{"Rbar", linop_to_json(h.ops[0])}};
    case SearchTarget::rb_system:
      return Json{{"R", linop_to_json(h.ops[0])}, {"S", linop_to_json(h.ops[1])}};
    case SearchTarget::bimultiplication:
    case SearchTarget::self_permutable:
      return Json{{"sigma", double_operator_to_json({h.ops[0], h.ops[1]})}};
    case SearchTarget::homothetic_triple:
      return Json{{"R", linop_to_json(h.ops[0])},
                  {"S", linop_to_json(h.ops[1])},
                  {"sigma", double_operator_to_json({h.ops[2], h.ops[3]})}};
  }
  return Json();
}

Json search_result_to_json(const SearchResult& r) {
  Json hits = Json::array();
  for (const SearchHit& h : r.hits) {
    hits.push_back(search_hit_to_json(r.spec.target, h));
  }
  return Json{{"spec", search_spec_to_json(r.spec)},
              {"total_scanned", r.total_scanned},
              {"hits", std::move(hits)}};
}

SearchResult search_result_from_json(const Json& j) {
  SearchResult r;
  r.spec = search_spec_from_json(expect_member(j, "spec", "search result"));
  r.total_scanned = expect_member(j, "total_scanned", "search result").get<std::uint64_t>();
  const Json& hits = expect_member(j, "hits", "search result");
  if (!hits.is_array()) {
    throw ParseError("search result hits must be an array");
  }
  const FieldDescriptor& f = r.spec.algebra.field;
  int dim = r.spec.algebra.dim;
  for (const Json& hj : hits) {
    SearchHit hit;
    switch (r.spec.target) {
      case SearchTarget::weighted_rb:
        hit.ops.push_back(linop_from_json(f, dim, expect_member(hj, "R", "hit")));
        break;
      case SearchTarget::generalized_rb:
        hit.ops.push_back(linop_from_json(f, dim, expect_member(hj, "Rbar", "hit")));
        break;
      case SearchTarget::rb_system:
        hit.ops.push_back(linop_from_json(f, dim, expect_member(hj, "R", "hit")));
        hit.ops.push_back(linop_from_json(f, dim, expect_member(hj, "S", "hit")));
        break;
      case SearchTarget::bimultiplication:
      case SearchTarget::self_permutable: {
        DoubleOperator d =
            double_operator_from_json(f, dim, expect_member(hj, "sigma", "hit"));
        hit.ops.push_back(std::move(d.left));
        hit.ops.push_back(std::move(d.right));
        break;
      }
      case SearchTarget::homothetic_triple: {
        hit.ops.push_back(linop_from_json(f, dim, expect_member(hj, "R", "hit")));
        hit.ops.push_back(linop_from_json(f, dim, expect_member(hj, "S", "hit")));
        DoubleOperator d =
            double_operator_from_json(f, dim, expect_member(hj, "sigma", "hit"));
        hit.ops.push_back(std::move(d.left));
        hit.ops.push_back(std::move(d.right));
        break;
      }
    }
    r.hits.push_back(std::move(hit));
  }
  return r;
}

Json cross_validate_report_to_json(const CrossValidateReport& r) {
  Json failures = Json::array();
  for (const std::string& f : r.failures) {
    failures.push_back(f);
  }
  return Json{{"hits_validated", r.hits_validated},
              {"constructions_run", r.constructions_run},
              {"failures", std::move(failures)}};
}

namespace {

const Algebra& workspace_algebra(const Workspace& ws, const std::string& name,
                                 const std::string& where) {
  auto it = ws.algebras.find(name);
  if (it == ws.algebras.end()) {
    throw ParseError(where + ": unknown algebra \"" + name + "\"");
  }
  return it->second;
}

}  // namespace

Workspace workspace_from_json(const Json& j) {
  Workspace ws;
  if (j.contains("algebras")) {
    for (const auto& [name, aj] : j.at("algebras").items()) {
      Algebra a = algebra_from_json(aj);
      if (a.label.empty()) {
        a.label = name;
      }
      ws.algebras.emplace(name, std::move(a));
    }
  }
  if (j.contains("operators")) {
    for (const auto& [name, oj] : j.at("operators").items()) {
      std::string aname =
          expect_string(expect_member(oj, "algebra", "operator \"" + name + "\""),
                        "operator.algebra");
      const Algebra& a = workspace_algebra(ws, aname, "operator \"" + name + "\"");
      OperatorEntry entry;
      entry.algebra = aname;
      if (oj.contains("matrix")) {
        entry.op = matrix_from_json(a.field, a.dim, oj.at("matrix"));
      } else if (oj.contains("left") && oj.contains("right")) {
        entry.op = double_operator_from_json(a.field, a.dim, oj);
      } else {
        throw ParseError("operator \"" + name +
                         "\" needs a \"matrix\" or a \"left\"/\"right\" pair");
      }
      ws.operators.emplace(name, std::move(entry));
    }
  }
  if (j.contains("scalars")) {
    for (const auto& [name, sj] : j.at("scalars").items()) {
      FieldDescriptor f =
          field_from_json(expect_member(sj, "field", "scalar \"" + name + "\""));
      ws.scalars.emplace(name, scalar_from_json(f, expect_member(sj, "value",
                                                                 "scalar \"" + name + "\"")));
    }
  }
  if (j.contains("dyck_algebras")) {
    for (const auto& [name, dj] : j.at("dyck_algebras").items()) {
      ws.dyck_algebras.emplace(name, dyck_from_json(dj));
    }
  }
  if (j.contains("targets")) {
    for (const auto& [name, tj] : j.at("targets").items()) {
      TargetEntry t;
      t.check = expect_string(expect_member(tj, "check", "target \"" + name + "\""),
                              "target.check");
      for (const auto& [key, val] : tj.items()) {
        if (key == "check") {
          continue;
        }
        if (key == "algebra") {
          t.algebra = expect_string(val, "target.algebra");
        } else {
          t.refs[key] = expect_string(val, "target." + key);
        }
      }
      ws.targets.emplace(name, std::move(t));
    }
  }
  // Fail on dangling references now rather than at use time.
  for (const auto& [name, _] : ws.targets) {
    resolve_target(ws, name);
  }
  return ws;
}

ResolvedTarget resolve_target(const Workspace& ws, const std::string& name) {
  auto it = ws.targets.find(name);
  if (it == ws.targets.end()) {
    throw ParseError("unknown target \"" + name + "\"");
  }
  const TargetEntry& t = it->second;
  const std::string where = "target \"" + name + "\"";
  ResolvedTarget out;
  out.check = t.check;

  auto linop_ref = [&](const std::string& role) -> LinOp {
    auto rit = t.refs.find(role);
    if (rit == t.refs.end()) {
      throw ParseError(where + ": missing \"" + role + "\"");
    }
    auto oit = ws.operators.find(rit->second);
    if (oit == ws.operators.end()) {
      throw ParseError(where + ": unknown operator \"" + rit->second + "\"");
    }
    if (oit->second.algebra != t.algebra) {
      throw ParseError(where + ": operator \"" + rit->second +
                       "\" lives over a different algebra");
    }
    const LinOp* op = std::get_if<LinOp>(&oit->second.op);
    if (op == nullptr) {
      throw ParseError(where + ": \"" + rit->second + "\" is not a plain operator");
    }
    return *op;
  };
  auto sigma_ref = [&]() -> DoubleOperator {
    auto rit = t.refs.find("sigma");
    if (rit == t.refs.end()) {
      throw ParseError(where + ": missing \"sigma\"");
    }
    auto oit = ws.operators.find(rit->second);
    if (oit == ws.operators.end()) {
      throw ParseError(where + ": unknown operator \"" + rit->second + "\"");
    }
    if (oit->second.algebra != t.algebra) {
      throw ParseError(where + ": operator \"" + rit->second +
                       "\" lives over a different algebra");
    }
    const DoubleOperator* op = std::get_if<DoubleOperator>(&oit->second.op);
    if (op == nullptr) {
      throw ParseError(where + ": \"" + rit->second + "\" is not a double operator");
    }
    return *op;
  };
  auto scalar_ref = [&](const std::string& role) -> Scalar {
    auto rit = t.refs.find(role);
    if (rit == t.refs.end()) {
      throw ParseError(where + ": missing \"" + role + "\"");
    }
    auto sit = ws.scalars.find(rit->second);
    if (sit == ws.scalars.end()) {
      throw ParseError(where + ": unknown scalar \"" + rit->second + "\"");
    }
    return sit->second;
  };
  auto need_algebra = [&]() {
    if (t.algebra.empty()) {
      throw ParseError(where + ": missing \"algebra\"");
    }
    out.algebra = workspace_algebra(ws, t.algebra, where);
  };

  if (t.check == "rb-weight") {
    need_algebra();
    out.r = linop_ref("R");
    out.lambda = scalar_ref("lambda");
  } else if (t.check == "generalized-rb") {
    need_algebra();
    out.rbar = linop_ref("Rbar");
    out.alpha = scalar_ref("alpha");
    out.beta = scalar_ref("beta");
  } else if (t.check == "rb-system") {
    need_algebra();
    out.r = linop_ref("R");
    out.s = linop_ref("S");
  } else if (t.check == "nijenhuis") {
    need_algebra();
    out.nop = linop_ref("N");
  } else if (t.check == "bimult" || t.check == "self-permutable") {
    need_algebra();
    out.sigma = sigma_ref();
  } else if (t.check == "homothetic") {
    need_algebra();
    out.r = linop_ref("R");
    out.s = linop_ref("S");
    out.sigma = sigma_ref();
  } else if (t.check == "dyck") {
    auto rit = t.refs.find("dyck");
    if (rit == t.refs.end()) {
      throw ParseError(where + ": missing \"dyck\"");
    }
    auto dit = ws.dyck_algebras.find(rit->second);
    if (dit == ws.dyck_algebras.end()) {
      throw ParseError(where + ": unknown dyck algebra \"" + rit->second + "\"");
    }
    out.dyck = dit->second;
  } else {
    throw ParseError(where + ": unknown check \"" + t.check + "\"");
  }
  return out;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"");
  }
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("\"" + path + "\": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) {
    throw Error("cannot write \"" + path + "\"");
  }
  out << j.dump(2) << "\n";
}

}  // namespace rd
