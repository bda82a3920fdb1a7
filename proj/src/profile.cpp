#include "liefrenet/profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace liefrenet {

namespace {

bool all_finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(),
                     [](double x) { return std::isfinite(x); });
}

}  // namespace

ScalarProfile ScalarProfile::constant(double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("constant profile: value must be finite");
  return ScalarProfile(Constant{value});
}

ScalarProfile ScalarProfile::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("polynomial profile: needs coefficients");
  if (!all_finite(coeffs))
    throw std::invalid_argument("polynomial profile: coefficients must be finite");
  return ScalarProfile(Polynomial{std::move(coeffs)});
}

ScalarProfile ScalarProfile::sinusoid(double offset, double amplitude,
                                      double frequency, double phase) {
  if (!std::isfinite(offset) || !std::isfinite(amplitude) ||
      !std::isfinite(frequency) || !std::isfinite(phase))
    throw std::invalid_argument("sinusoid profile: parameters must be finite");
  return ScalarProfile(Sinusoid{offset, amplitude, frequency, phase});
}

ScalarProfile ScalarProfile::table(std::vector<double> s,
                                   std::vector<double> value) {
  if (s.size() != value.size() || s.size() < 2)
    throw std::invalid_argument(
        "table profile: needs matching columns with at least two rows");
  if (!all_finite(s) || !all_finite(value))
    throw std::invalid_argument("table profile: entries must be finite");
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1]))
      throw std::invalid_argument(
          "table profile: abscissae must be strictly increasing");
  }
  return ScalarProfile(Table{std::move(s), std::move(value)});
}

double ScalarProfile::operator()(double s) const {
  if (const auto* c = std::get_if<Constant>(&form_)) return c->value;
  if (const auto* p = std::get_if<Polynomial>(&form_)) {
    double acc = 0.0;
    for (auto it = p->coeffs.rbegin(); it != p->coeffs.rend(); ++it)
      acc = acc * s + *it;
    return acc;
  }
  if (const auto* w = std::get_if<Sinusoid>(&form_))
    return w->offset + w->amplitude * std::sin(w->frequency * s + w->phase);
  const auto& t = std::get<Table>(form_);
  if (s < t.s.front() || s > t.s.back()) {
    std::ostringstream msg;
    msg << "table profile: s = " << s << " outside tabulated range ["
        << t.s.front() << ", " << t.s.back() << "]";
    throw std::domain_error(msg.str());
  }
  if (s == t.s.back()) return t.value.back();
  const auto it = std::upper_bound(t.s.begin(), t.s.end(), s);
  const std::size_t k = static_cast<std::size_t>(it - t.s.begin()) - 1;
  const double f = (s - t.s[k]) / (t.s[k + 1] - t.s[k]);
  return t.value[k] + f * (t.value[k + 1] - t.value[k]);
}

std::optional<double> ScalarProfile::min_table_spacing() const {
  const auto* t = std::get_if<Table>(&form_);
  if (t == nullptr) return std::nullopt;
  double gap = t->s[1] - t->s[0];
  for (std::size_t i = 2; i < t->s.size(); ++i)
    gap = std::min(gap, t->s[i] - t->s[i - 1]);
  return gap;
}

std::optional<std::pair<double, double>> ScalarProfile::table_domain() const {
  const auto* t = std::get_if<Table>(&form_);
  if (t == nullptr) return std::nullopt;
  return std::make_pair(t->s.front(), t->s.back());
}

}  // namespace liefrenet
