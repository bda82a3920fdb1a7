#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace liefrenet {

/// Scalar function of arc length: a named closed form (constant,
/// polynomial, sinusoid) or a sampled table with linear interpolation.
class ScalarProfile {
 public:
  static ScalarProfile constant(double value);
  /// coeffs[0] + coeffs[1] s + coeffs[2] s^2 + ...
  static ScalarProfile polynomial(std::vector<double> coeffs);
  /// offset + amplitude * sin(frequency * s + phase)
  static ScalarProfile sinusoid(double offset, double amplitude,
                                double frequency, double phase);
  /// Abscissae must be strictly increasing, at least two of them.
  static ScalarProfile table(std::vector<double> s, std::vector<double> value);

  /// Evaluates at s. Table profiles throw std::domain_error naming s when
  /// s falls outside the tabulated range.
  double operator()(double s) const;

  /// Smallest abscissa gap for table profiles, nullopt for closed forms.
  /// Integration grids must not step finer data than the table carries:
  /// callers enforce grid step <= this spacing.
  std::optional<double> min_table_spacing() const;

  /// Tabulated range for table profiles, nullopt for closed forms.
  std::optional<std::pair<double, double>> table_domain() const;

 private:
  struct Constant {
    double value;
  };
  struct Polynomial {
    std::vector<double> coeffs;
  };
  struct Sinusoid {
    double offset, amplitude, frequency, phase;
  };
  struct Table {
    std::vector<double> s, value;
  };

  using Form = std::variant<Constant, Polynomial, Sinusoid, Table>;

  explicit ScalarProfile(Form form) : form_(std::move(form)) {}

  Form form_;
};

/// The curvature pair (kappa, tau) prescribing a transport run. kappa
/// must stay positive wherever a Frenet frame is integrated; the spinor
/// equation itself is regular at kappa = 0 and tolerates it.
struct CurvatureProfile {
  ScalarProfile kappa, tau;
};

}  // namespace liefrenet
