#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fivevec/curvature.hpp"
#include "fivevec/frames.hpp"
#include "fivevec/gauge.hpp"

namespace fv {

// Load failure with the location that caused it: "line 12: sform[3].poly: ...".
struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MatterTables {
  Matrix<Poly4> Theta = Matrix<Poly4>(4, 4);  // Theta_{mn}
  Table3<Poly4, 4, 4, 4> Sigma{};             // Sigma^a_{mn}
  Matrix<Poly4> Xi = Matrix<Poly4>(4, 4);     // Xi_{mn}
};

struct GaugeSection {
  GaugeC C;
  Rational coupling = 1;
};

struct TransportCurve {
  Curve curve;  // components are polynomials in x0, read as the curve parameter
  std::array<Rational, 5> u0{};
};

struct ModelFile {
  std::string name;
  Rational kappa = 1, xi = 1, k = 1, varrho = 1;
  int h55_sign = 1;
  MetricG metric = MetricG::minkowski();
  SForm S;
  std::optional<MatterTables> matter;
  std::vector<LorentzChart> charts;
  std::optional<GaugeSection> gauge;
  std::vector<TransportCurve> curves;

  FieldEqInputs field_inputs() const;
};

ModelFile load_model(const std::string& path);
ModelFile parse_model(std::string_view text, const std::string& source = "<model>");

enum class CheckStatus { Pass, Fail, Flagged };

struct Check {
  std::string id;  // "<module>.<invariant>"
  CheckStatus status = CheckStatus::Pass;
  std::string max_residual = "0";
  std::string details;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::string tol = "1e-9";
  std::string holonomy_tol = "1e-6";
  std::vector<Check> checks;  // sorted by id

  bool any(CheckStatus s) const;
};

// Raised for a suite that the model cannot serve; maps to exit code 2.
struct SuiteError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"flat", "curved", "gauge", "clifford", "all"};
  return names;
}

// tol is the decimal text from the command line; it is echoed verbatim in the report.
Report run_suite(const ModelFile& model, const std::string& suite, std::uint64_t seed, const std::string& tol);

std::string emit_report(const Report& r, const std::string& format);
std::string to_string(CheckStatus s);

// 0 all pass (flagged allowed unless strict), 1 any fail or strict with a flag.
int exit_code(const Report& r, bool strict);

}  // namespace fv
