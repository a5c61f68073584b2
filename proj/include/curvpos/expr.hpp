#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvpos/positivity.hpp"
#include "curvpos/tensor.hpp"

namespace curvpos {

/// Diagnostic for malformed bundle specs; path points at the offending node
/// (JSON-pointer style, e.g. "/expr/of/line").
class SpecError : public std::runtime_error {
 public:
  SpecError(const std::string& message, std::string path)
      : std::runtime_error(path.empty() ? message : message + " (at " + path + ")"),
        path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

/// Construction tree for a pointwise-curvature bundle expression.
struct BundleExpr {
  enum class Kind {
    model,        // named built-in geometry
    literal,      // inline curvature components
    dual,
    tensor,
    det,
    direct_sum,
    twist,        // twist by a rank-1 subtree ("line")
    sym_power,
    orthonormalize,
    scale
  };

  Kind kind = Kind::model;

  // model leaf
  std::string model_name;
  int n = 0;
  int m = 0;
  std::vector<int> degrees;

  // literal leaf
  int literal_base_dim = 0;
  int literal_rank = 0;
  std::vector<Complex> literal_values;  // R(i,j,a,b) order, b fastest

  int sym_degree = 0;     // sym_power
  double factor = 1.0;    // scale

  std::vector<std::unique_ptr<BundleExpr>> children;  // of / (left,right) / (of,line)

  static constexpr int kMaxDepth = 32;
};

struct ParsedSpec {
  std::unique_ptr<BundleExpr> expr;
  std::vector<std::string> tests;  // subset of {nakano, dual_nakano, griffiths}
  double tolerance = kDefaultRelTolerance;
  std::uint64_t seed = 0;
  int griffiths_starts = 32;
  int griffiths_max_iters = 200;
};

/// Parses and validates a JSON bundle spec (schema "curvpos-spec/1"); checks
/// rank/base-dim consistency of every node before returning. Throws SpecError.
ParsedSpec parse_spec(const std::string& text);

/// Canonical re-serialization; parse_spec(print_spec(s).dump()) reproduces s.
nlohmann::ordered_json print_spec(const ParsedSpec& spec);

/// Evaluated node: curvature components plus the Gram of the frame they are
/// expressed in (identity unless a sym_power has not been orthonormalized yet).
struct EvalValue {
  CurvatureTensor tensor;
  std::optional<MetricGram> gram;  // engaged = non-orthonormal monomial frame
};

/// Bottom-up evaluation. Frame discipline: sym_power yields monomial-frame
/// components carrying their Gram; only twist, scale and orthonormalize accept
/// such a value (twist adds c * gram, the correct general-frame rule); every
/// other construction and the final certification require an orthonormal
/// frame and raise SpecError telling the user to insert "orthonormalize".
EvalValue evaluate_value(const BundleExpr& expr);

/// evaluate_value + the requirement that the result is orthonormal.
CurvatureTensor evaluate_expr(const BundleExpr& expr);

/// (base_dim, rank) of every node, used for upfront validation.
struct ExprShape {
  int base_dim = 0;
  int rank = 0;
};
ExprShape infer_shape(const BundleExpr& expr);

}  // namespace curvpos
