#include "curvpos/expr.hpp"

#include <algorithm>
#include <set>

#include "curvpos/constructions.hpp"
#include "curvpos/models.hpp"

namespace curvpos {

using nlohmann::ordered_json;

namespace {

constexpr const char* kSpecSchema = "curvpos-spec/1";

const std::set<std::string>& known_tests() {
  static const std::set<std::string> tests = {"nakano", "dual_nakano", "griffiths"};
  return tests;
}

[[noreturn]] void fail(const std::string& message, const std::string& path) {
  throw SpecError(message, path);
}

int require_int(const ordered_json& node, const char* key, const std::string& path) {
  if (!node.contains(key) || !node[key].is_number_integer())
    fail(std::string("missing or non-integer field '") + key + "'", path);
  return node[key].get<int>();
}

std::unique_ptr<BundleExpr> parse_node(const ordered_json& node, const std::string& path,
                                       int depth) {
  if (depth > BundleExpr::kMaxDepth) fail("expression tree deeper than 32", path);
  if (!node.is_object()) fail("expression node must be an object", path);
  if (!node.contains("op") || !node["op"].is_string()) fail("missing 'op' field", path);
  const std::string op = node["op"].get<std::string>();

  auto expr = std::make_unique<BundleExpr>();
  auto child = [&](const char* key) {
    if (!node.contains(key)) fail(std::string("missing '") + key + "' subtree", path);
    return parse_node(node[key], path + "/" + key, depth + 1);
  };

  if (op == "model") {
    expr->kind = BundleExpr::Kind::model;
    if (!node.contains("name") || !node["name"].is_string()) fail("missing model 'name'", path);
    expr->model_name = node["name"].get<std::string>();
    if (expr->model_name == "fubini_study_tangent" || expr->model_name == "canonical_bundle" ||
        expr->model_name == "hyperbolic_cotangent") {
      expr->n = require_int(node, "n", path);
    } else if (expr->model_name == "projective_line_bundle") {
      expr->n = require_int(node, "n", path);
      expr->m = require_int(node, "m", path);
    } else if (expr->model_name == "direct_sum_lines") {
      expr->n = require_int(node, "n", path);
      if (!node.contains("degrees") || !node["degrees"].is_array() || node["degrees"].empty())
        fail("direct_sum_lines needs a non-empty 'degrees' array", path);
      for (const auto& d : node["degrees"]) {
        if (!d.is_number_integer()) fail("'degrees' entries must be integers", path);
        expr->degrees.push_back(d.get<int>());
      }
    } else {
      fail("unknown model '" + expr->model_name + "'", path);
    }
  } else if (op == "literal") {
    expr->kind = BundleExpr::Kind::literal;
    expr->literal_base_dim = require_int(node, "base_dim", path);
    expr->literal_rank = require_int(node, "rank", path);
    if (expr->literal_base_dim < 1 || expr->literal_rank < 1)
      fail("literal base_dim and rank must be >= 1", path);
    if (!node.contains("values") || !node["values"].is_array())
      fail("literal needs nested 'values' array", path);
    const int n = expr->literal_base_dim, r = expr->literal_rank;
    const auto& vi = node["values"];
    if (static_cast<int>(vi.size()) != n) fail("literal values: wrong outer length", path);
    for (int i = 0; i < n; ++i) {
      if (!vi[i].is_array() || static_cast<int>(vi[i].size()) != n)
        fail("literal values: wrong shape at level 2", path);
      for (int j = 0; j < n; ++j) {
        if (!vi[i][j].is_array() || static_cast<int>(vi[i][j].size()) != r)
          fail("literal values: wrong shape at level 3", path);
        for (int a = 0; a < r; ++a) {
          if (!vi[i][j][a].is_array() || static_cast<int>(vi[i][j][a].size()) != r)
            fail("literal values: wrong shape at level 4", path);
          for (int b = 0; b < r; ++b) {
            const auto& cell = vi[i][j][a][b];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number())
              fail("literal entries must be [re, im] pairs", path);
            expr->literal_values.emplace_back(cell[0].get<double>(), cell[1].get<double>());
          }
        }
      }
    }
  } else if (op == "dual" || op == "det" || op == "orthonormalize") {
    expr->kind = op == "dual" ? BundleExpr::Kind::dual
               : op == "det" ? BundleExpr::Kind::det
                             : BundleExpr::Kind::orthonormalize;
    expr->children.push_back(child("of"));
  } else if (op == "tensor" || op == "direct_sum") {
    expr->kind = op == "tensor" ? BundleExpr::Kind::tensor : BundleExpr::Kind::direct_sum;
    expr->children.push_back(child("left"));
    expr->children.push_back(child("right"));
  } else if (op == "twist") {
    expr->kind = BundleExpr::Kind::twist;
    expr->children.push_back(child("of"));
    expr->children.push_back(child("line"));
  } else if (op == "sym_power") {
    expr->kind = BundleExpr::Kind::sym_power;
    expr->sym_degree = require_int(node, "k", path);
    if (expr->sym_degree < 1) fail("sym_power degree must be >= 1", path);
    expr->children.push_back(child("of"));
  } else if (op == "scale") {
    expr->kind = BundleExpr::Kind::scale;
    if (!node.contains("factor") || !node["factor"].is_number())
      fail("scale needs a numeric 'factor'", path);
    expr->factor = node["factor"].get<double>();
    expr->children.push_back(child("of"));
  } else {
    fail("unknown op '" + op + "'", path);
  }
  return expr;
}

ordered_json print_node(const BundleExpr& expr) {
  ordered_json node;
  switch (expr.kind) {
    case BundleExpr::Kind::model:
      node["op"] = "model";
      node["name"] = expr.model_name;
      node["n"] = expr.n;
      if (expr.model_name == "projective_line_bundle") node["m"] = expr.m;
      if (expr.model_name == "direct_sum_lines") node["degrees"] = expr.degrees;
      break;
    case BundleExpr::Kind::literal: {
      node["op"] = "literal";
      node["base_dim"] = expr.literal_base_dim;
      node["rank"] = expr.literal_rank;
      const int n = expr.literal_base_dim, r = expr.literal_rank;
      ordered_json values = ordered_json::array();
      std::size_t flat = 0;
      for (int i = 0; i < n; ++i) {
        ordered_json level_i = ordered_json::array();
        for (int j = 0; j < n; ++j) {
          ordered_json level_j = ordered_json::array();
          for (int a = 0; a < r; ++a) {
            ordered_json level_a = ordered_json::array();
            for (int b = 0; b < r; ++b) {
              const Complex& v = expr.literal_values[flat++];
              level_a.push_back(ordered_json::array({v.real(), v.imag()}));
            }
            level_j.push_back(std::move(level_a));
          }
          level_i.push_back(std::move(level_j));
        }
        values.push_back(std::move(level_i));
      }
      node["values"] = std::move(values);
      break;
    }
    case BundleExpr::Kind::dual:
      node["op"] = "dual";
      node["of"] = print_node(*expr.children[0]);
      break;
    case BundleExpr::Kind::det:
      node["op"] = "det";
      node["of"] = print_node(*expr.children[0]);
      break;
    case BundleExpr::Kind::orthonormalize:
      node["op"] = "orthonormalize";
      node["of"] = print_node(*expr.children[0]);
      break;
    case BundleExpr::Kind::tensor:
      node["op"] = "tensor";
      node["left"] = print_node(*expr.children[0]);
      node["right"] = print_node(*expr.children[1]);
      break;
    case BundleExpr::Kind::direct_sum:
      node["op"] = "direct_sum";
      node["left"] = print_node(*expr.children[0]);
      node["right"] = print_node(*expr.children[1]);
      break;
    case BundleExpr::Kind::twist:
      node["op"] = "twist";
      node["of"] = print_node(*expr.children[0]);
      node["line"] = print_node(*expr.children[1]);
      break;
    case BundleExpr::Kind::sym_power:
      node["op"] = "sym_power";
      node["k"] = expr.sym_degree;
      node["of"] = print_node(*expr.children[0]);
      break;
    case BundleExpr::Kind::scale:
      node["op"] = "scale";
      node["factor"] = expr.factor;
      node["of"] = print_node(*expr.children[0]);
      break;
  }
  return node;
}

ExprShape infer_shape_at(const BundleExpr& expr, const std::string& path) {
  switch (expr.kind) {
    case BundleExpr::Kind::model: {
      if (expr.n < 1) fail("model parameter n must be >= 1", path);
      if (expr.model_name == "fubini_study_tangent") return {expr.n, expr.n};
      if (expr.model_name == "hyperbolic_cotangent") {
        if (expr.n < 2) fail("hyperbolic_cotangent needs n >= 2", path);
        return {expr.n, expr.n};
      }
      if (expr.model_name == "projective_line_bundle" || expr.model_name == "canonical_bundle")
        return {expr.n, 1};
      return {expr.n, static_cast<int>(expr.degrees.size())};  // direct_sum_lines
    }
    case BundleExpr::Kind::literal:
      return {expr.literal_base_dim, expr.literal_rank};
    case BundleExpr::Kind::dual:
    case BundleExpr::Kind::orthonormalize:
    case BundleExpr::Kind::scale:
      return infer_shape_at(*expr.children[0], path + "/of");
    case BundleExpr::Kind::det: {
      ExprShape inner = infer_shape_at(*expr.children[0], path + "/of");
      return {inner.base_dim, 1};
    }
    case BundleExpr::Kind::tensor:
    case BundleExpr::Kind::direct_sum: {
      ExprShape left = infer_shape_at(*expr.children[0], path + "/left");
      ExprShape right = infer_shape_at(*expr.children[1], path + "/right");
      if (left.base_dim != right.base_dim)
        fail("base dimension mismatch: " + std::to_string(left.base_dim) + " vs " +
                 std::to_string(right.base_dim),
             path);
      if (expr.kind == BundleExpr::Kind::tensor)
        return {left.base_dim, left.rank * right.rank};
      return {left.base_dim, left.rank + right.rank};
    }
    case BundleExpr::Kind::twist: {
      ExprShape base = infer_shape_at(*expr.children[0], path + "/of");
      ExprShape line = infer_shape_at(*expr.children[1], path + "/line");
      if (line.rank != 1) fail("twist line must have rank 1", path + "/line");
      if (base.base_dim != line.base_dim)
        fail("base dimension mismatch between bundle and twisting line", path);
      return base;
    }
    case BundleExpr::Kind::sym_power: {
      ExprShape inner = infer_shape_at(*expr.children[0], path + "/of");
      return {inner.base_dim, static_cast<int>(sym_basis_size(inner.rank, expr.sym_degree))};
    }
  }
  fail("unreachable expression kind", path);
}

EvalValue evaluate_at(const BundleExpr& expr, const std::string& path) {
  auto require_orthonormal = [&](EvalValue value, const char* what) {
    if (value.gram.has_value())
      fail(std::string(what) +
               " requires an orthonormal frame; insert an 'orthonormalize' node above the "
               "sym_power first",
           path);
    return std::move(value.tensor);
  };

  switch (expr.kind) {
    case BundleExpr::Kind::model: {
      if (expr.model_name == "fubini_study_tangent")
        return {fubini_study_tangent(expr.n), std::nullopt};
      if (expr.model_name == "hyperbolic_cotangent")
        return {hyperbolic_cotangent(expr.n), std::nullopt};
      if (expr.model_name == "projective_line_bundle")
        return {projective_line_bundle(expr.n, expr.m).as_tensor(), std::nullopt};
      if (expr.model_name == "canonical_bundle")
        return {canonical_bundle(expr.n).as_tensor(), std::nullopt};
      return {direct_sum_lines(expr.n, expr.degrees), std::nullopt};
    }
    case BundleExpr::Kind::literal: {
      CurvatureTensor tensor(expr.literal_base_dim, expr.literal_rank);
      std::copy(expr.literal_values.begin(), expr.literal_values.end(), tensor.flat().begin());
      try {
        tensor.check_valid(1e-9);
      } catch (const std::exception& e) {
        fail(e.what(), path);
      }
      return {std::move(tensor), std::nullopt};
    }
    case BundleExpr::Kind::dual: {
      CurvatureTensor inner =
          require_orthonormal(evaluate_at(*expr.children[0], path + "/of"), "dual");
      return {dual_curvature(inner), std::nullopt};
    }
    case BundleExpr::Kind::det: {
      CurvatureTensor inner =
          require_orthonormal(evaluate_at(*expr.children[0], path + "/of"), "det");
      return {det_curvature(inner).as_tensor(), std::nullopt};
    }
    case BundleExpr::Kind::tensor: {
      CurvatureTensor left =
          require_orthonormal(evaluate_at(*expr.children[0], path + "/left"), "tensor");
      CurvatureTensor right =
          require_orthonormal(evaluate_at(*expr.children[1], path + "/right"), "tensor");
      return {tensor_curvature(left, right), std::nullopt};
    }
    case BundleExpr::Kind::direct_sum: {
      CurvatureTensor left =
          require_orthonormal(evaluate_at(*expr.children[0], path + "/left"), "direct_sum");
      CurvatureTensor right =
          require_orthonormal(evaluate_at(*expr.children[1], path + "/right"), "direct_sum");
      return {direct_sum_curvature(left, right), std::nullopt};
    }
    case BundleExpr::Kind::twist: {
      EvalValue base = evaluate_at(*expr.children[0], path + "/of");
      CurvatureTensor line_tensor =
          require_orthonormal(evaluate_at(*expr.children[1], path + "/line"), "twist line");
      if (line_tensor.rank() != 1) fail("twist line must have rank 1", path + "/line");
      Eigen::MatrixXcd c(line_tensor.base_dim(), line_tensor.base_dim());
      for (int i = 0; i < line_tensor.base_dim(); ++i)
        for (int j = 0; j < line_tensor.base_dim(); ++j) c(i, j) = line_tensor.at(i, j, 0, 0);
      if (!base.gram.has_value())
        return {twist_by_line(base.tensor, LineCurvature(std::move(c))), std::nullopt};
      // general-frame twist: add c_ij * gram_ab instead of c_ij * delta_ab
      CurvatureTensor out = base.tensor;
      const Eigen::MatrixXcd& gram = base.gram->values;
      const int n = out.base_dim(), r = out.rank();
      if (line_tensor.base_dim() != n) fail("twist: base dimension mismatch", path);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int a = 0; a < r; ++a)
            for (int b = 0; b < r; ++b) out.at(i, j, a, b) += c(i, j) * gram(a, b);
      return {std::move(out), base.gram};
    }
    case BundleExpr::Kind::sym_power: {
      CurvatureTensor inner =
          require_orthonormal(evaluate_at(*expr.children[0], path + "/of"), "sym_power");
      SymPowerCurvature sym = sym_power_curvature(inner, expr.sym_degree);
      return {std::move(sym.tensor), std::move(sym.gram)};
    }
    case BundleExpr::Kind::orthonormalize: {
      EvalValue inner = evaluate_at(*expr.children[0], path + "/of");
      if (!inner.gram.has_value()) return inner;  // already orthonormal
      return {orthonormalize_frame(inner.tensor, *inner.gram), std::nullopt};
    }
    case BundleExpr::Kind::scale: {
      EvalValue inner = evaluate_at(*expr.children[0], path + "/of");
      return {scale_curvature(inner.tensor, expr.factor), inner.gram};
    }
  }
  fail("unreachable expression kind", path);
}

}  // namespace

ParsedSpec parse_spec(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("JSON syntax error: ") + e.what(), "");
  }
  if (!root.is_object()) fail("spec must be a JSON object", "");
  if (!root.contains("schema") || root["schema"] != kSpecSchema)
    fail(std::string("missing or unsupported schema (expected \"") + kSpecSchema + "\")",
         "/schema");

  ParsedSpec spec;
  if (root.contains("seed")) {
    if (!root["seed"].is_number_unsigned() && !root["seed"].is_number_integer())
      fail("seed must be an integer", "/seed");
    spec.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("tolerance")) {
    if (!root["tolerance"].is_number() || root["tolerance"].get<double>() <= 0.0)
      fail("tolerance must be a positive number", "/tolerance");
    spec.tolerance = root["tolerance"].get<double>();
  }
  if (root.contains("tests")) {
    if (!root["tests"].is_array() || root["tests"].empty())
      fail("tests must be a non-empty array", "/tests");
    for (const auto& t : root["tests"]) {
      if (!t.is_string() || known_tests().count(t.get<std::string>()) == 0)
        fail("unknown test name (expected nakano, dual_nakano or griffiths)", "/tests");
      spec.tests.push_back(t.get<std::string>());
    }
  } else {
    spec.tests = {"nakano", "dual_nakano", "griffiths"};
  }
  if (root.contains("griffiths")) {
    const auto& g = root["griffiths"];
    if (!g.is_object()) fail("griffiths options must be an object", "/griffiths");
    if (g.contains("starts")) {
      spec.griffiths_starts = g["starts"].get<int>();
      if (spec.griffiths_starts < 1) fail("griffiths starts must be >= 1", "/griffiths/starts");
    }
    if (g.contains("max_iters")) {
      spec.griffiths_max_iters = g["max_iters"].get<int>();
      if (spec.griffiths_max_iters < 1)
        fail("griffiths max_iters must be >= 1", "/griffiths/max_iters");
    }
  }
  if (!root.contains("expr")) fail("missing 'expr'", "/expr");
  spec.expr = parse_node(root["expr"], "/expr", 1);
  infer_shape_at(*spec.expr, "/expr");  // dimension consistency before evaluation
  return spec;
}

nlohmann::ordered_json print_spec(const ParsedSpec& spec) {
  ordered_json root;
  root["schema"] = kSpecSchema;
  root["seed"] = spec.seed;
  root["tolerance"] = spec.tolerance;
  root["tests"] = spec.tests;
  root["griffiths"] = {{"starts", spec.griffiths_starts}, {"max_iters", spec.griffiths_max_iters}};
  root["expr"] = print_node(*spec.expr);
  return root;
}

ExprShape infer_shape(const BundleExpr& expr) { return infer_shape_at(expr, "/expr"); }

EvalValue evaluate_value(const BundleExpr& expr) { return evaluate_at(expr, "/expr"); }

CurvatureTensor evaluate_expr(const BundleExpr& expr) {
  EvalValue value = evaluate_at(expr, "/expr");
  if (value.gram.has_value())
    fail("expression result is in a non-orthonormal frame; wrap it in an 'orthonormalize' node",
         "/expr");
  return std::move(value.tensor);
}

}  // namespace curvpos
