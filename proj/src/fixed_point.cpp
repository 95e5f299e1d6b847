#include "hbm/fixed_point.hpp"

#include "hbm/error.hpp"

#include <set>

namespace hbm {

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

std::string join(const std::vector<Rational>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + to_string(xs[i]);
  return out;
}

void require_distinct(const std::vector<Rational>& mu) {
  std::set<Rational> seen;
  for (const auto& m : mu)
    if (!seen.insert(m).second)
      throw Error(ErrorKind::RepeatedMomentValues, "moment value " + to_string(m) + " repeats");
}

void require_count(const FixedPointData& data) {
  if (data.n < 0) throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
  long total = 0;
  for (const auto& comp : data.components) {
    if (comp.multiplicity < 1) throw Error(ErrorKind::InvalidArgument, "multiplicities must be positive");
    total += comp.multiplicity;
  }
  if (total != data.n + 1)
    throw Error(ErrorKind::EulerCharacteristicMismatch, "multiplicities sum to " + std::to_string(total) +
                                                            ", expected n + 1 = " + std::to_string(data.n + 1));
}

}  // namespace

std::vector<Rational> FixedPointData::expanded() const {
  std::vector<Rational> out;
  for (const auto& comp : components)
    for (int k = 0; k < comp.multiplicity; ++k) out.push_back(comp.value);
  return out;
}

FixedPointData FixedPointData::isolated(const std::vector<Rational>& mu, const std::vector<Rational>& euler) {
  if (!euler.empty() && euler.size() != mu.size())
    throw Error(ErrorKind::InvalidArgument, "need one Euler class per moment value");
  FixedPointData data;
  data.n = static_cast<int>(mu.size()) - 1;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    FixedComponent comp{mu[i], 1, std::nullopt};
    if (!euler.empty()) comp.euler = euler[i];
    data.components.push_back(comp);
  }
  return data;
}

Rational elementary_symmetric(const std::vector<Rational>& vals, int i) {
  if (i < 0 || i > static_cast<int>(vals.size())) throw Error(ErrorKind::InvalidArgument, "index out of range");
  Rational sum = 0;
  const std::size_t n = vals.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (__builtin_popcountl(mask) != i) continue;
    Rational prod = 1;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) prod *= vals[k];
    sum += prod;
  }
  return sum;
}

namespace {

void multisets(const std::vector<Rational>& vals, std::size_t from, int left, const Rational& acc, Rational& sum) {
  if (left == 0) {
    sum += acc;
    return;
  }
  for (std::size_t k = from; k < vals.size(); ++k) multisets(vals, k, left - 1, acc * vals[k], sum);
}

}  // namespace

Rational complete_homogeneous(const std::vector<Rational>& vals, int j) {
  if (j < 0) throw Error(ErrorKind::InvalidArgument, "degree must be nonnegative");
  Rational sum = 0;
  multisets(vals, 0, j, Rational(1), sum);
  return sum;
}

CoefficientVector coefficients_from_moments(const FixedPointData& data) {
  require_count(data);
  const std::vector<Rational> mu = data.expanded();
  // poly[k] is the coefficient of w^{deg - k} t^k in prod (w - mu_i t).
  std::vector<Rational> poly{Rational(1)};
  for (const auto& m : mu) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k] += poly[k];
      next[k + 1] -= m * poly[k];
    }
    poly = std::move(next);
  }
  CoefficientVector out;
  for (std::size_t i = 1; i < poly.size(); ++i) out.c.push_back(-poly[i]);

  const int n1 = data.n + 1;
  for (const auto& m : mu) {
    Rational value = power(m, n1);
    for (int i = 1; i <= n1; ++i) value -= out.at(i) * power(m, n1 - i);
    if (value != 0)
      throw Error(ErrorKind::IdentityFailed, "relation does not vanish at w = " + to_string(m) + " t");
  }
  return out;
}

std::vector<Rational> complete_homogeneous_series(const std::vector<Rational>& mu, int j_max) {
  std::vector<Rational> h(static_cast<std::size_t>(j_max + 1), Rational(0));
  h[0] = 1;
  for (const auto& m : mu) {
    // multiply by 1 / (1 - m x): h'_j = h_j + m h'_{j-1}
    for (int j = 1; j <= j_max; ++j) h[j] += m * h[j - 1];
  }
  return h;
}

Rational moment_average(const FixedPointData& data, int j) {
  require_count(data);
  const auto h = complete_homogeneous_series(data.expanded(), j);
  return h[j] / Rational(binomial(data.n + j, j));
}

Rational lagrange_sum(const std::vector<Rational>& mu, int d) {
  require_distinct(mu);
  Rational sum = 0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Rational denom = 1;
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (k != i) denom *= mu[i] - mu[k];
    sum += power(mu[i], d) / denom;
  }
  return sum;
}

std::vector<MomentPower> moment_powers(const FixedPointData& data, int j_max) {
  require_count(data);
  const std::vector<Rational> mu = data.expanded();
  require_distinct(mu);
  const auto h = complete_homogeneous_series(mu, j_max);
  std::vector<MomentPower> out;
  for (int j = 0; j <= j_max; ++j) {
    MomentPower p;
    p.j = j;
    p.lagrange = lagrange_sum(mu, data.n + j);
    const Rational binom(binomial(data.n + j, j));
    p.average = h[j] / binom;
    p.scaled = binom * p.average;
    if (p.lagrange != p.scaled)
      throw Error(ErrorKind::IdentityFailed, "moment identity fails at j = " + std::to_string(j) + ": " +
                                                 to_string(p.lagrange) + " != " + to_string(p.scaled));
    out.push_back(p);
  }
  return out;
}

Report recursion_check(const FixedPointData& data, int j_max) {
  const CoefficientVector c = coefficients_from_moments(data);
  const auto h = complete_homogeneous_series(data.expanded(), j_max + 1);
  const int n1 = data.n + 1;
  Report rep;
  for (int j = 0; j <= j_max; ++j) {
    Rational rhs = 0;
    for (int i = 1; i <= std::min(1 + j, n1); ++i) rhs += c.at(i) * h[1 + j - i];
    rep.check("recursion j=" + std::to_string(j), h[1 + j] == rhs,
              "h = " + to_string(h[1 + j]) + ", sum = " + to_string(rhs));
  }
  const Rational H1 = moment_average(data, 1);
  const Rational H2 = moment_average(data, 2);
  const Rational c1 = Rational(n1) * H1;
  rep.check("c_1 = (n+1) H(mu)", c.at(1) == c1, to_string(c.at(1)) + " != " + to_string(c1));
  if (n1 >= 2) {
    const Rational c2 = Rational(binomial(data.n + 2, 2)) * H2 - Rational(n1 * n1) * H1 * H1;
    rep.check("c_2 = binom(n+2,2) H(mu^2) - (n+1)^2 H(mu)^2", c.at(2) == c2,
              to_string(c.at(2)) + " != " + to_string(c2));
  }
  return rep;
}

VolumeResult volume_from_data(const FixedPointData& data) {
  require_count(data);
  for (const auto& comp : data.components) {
    if (comp.multiplicity != 1)
      throw Error(ErrorKind::RepeatedMomentValues, "component at " + to_string(comp.value) + " is not isolated");
    if (!comp.euler) throw Error(ErrorKind::MissingEuler, "no Euler class at " + to_string(comp.value));
    if (*comp.euler == 0) throw Error(ErrorKind::InvalidArgument, "Euler class at " + to_string(comp.value) + " is 0");
  }
  const std::vector<Rational> mu = data.expanded();
  require_distinct(mu);
  VolumeResult out;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Rational v = 1 / *data.components[i].euler;
    for (std::size_t k = 0; k < mu.size(); ++k)
      if (k != i) v *= mu[i] - mu[k];
    out.values.push_back(v);
  }
  for (const auto& v : out.values)
    if (v != out.values.front())
      throw Error(ErrorKind::InconsistentFixedPointData, "volumes disagree: " + join(out.values));
  out.volume = out.values.front();
  return out;
}

WeightedCP2 cp2_weighted(long a, long b, const Rational& s) {
  if (!(0 < a && a < b))
    throw Error(ErrorKind::InvalidWeights, "need 0 < a < b, got a = " + std::to_string(a) + ", b = " + std::to_string(b));
  if (s <= 0) throw Error(ErrorKind::InvalidArgument, "s must be positive");
  WeightedCP2 out;
  out.a = a;
  out.b = b;
  out.s = s;
  const Rational A(a), B(b);
  const Rational third = s / 3;
  out.data = FixedPointData::isolated({third * -(A + B), third * (2 * A - B), third * (2 * B - A)},
                                      {A * B, A * (A - B), B * (B - A)});
  out.area = volume_from_data(out.data).volume;
  out.coefficients = coefficients_from_moments(out.data);
  out.c2_closed = out.area / 3 * (A * A - A * B + B * B);
  out.c3_closed = out.area * s / 27 * (2 * A * A * A - 3 * A * A * B - 3 * A * B * B + 2 * B * B * B);
  out.c3_factored = -(out.area * s / 27) * (A + B) * (2 * A - B) * (2 * B - A);

  Report& rep = out.report;
  rep.section("inputs");
  rep.line("a", std::to_string(a));
  rep.line("b", std::to_string(b));
  rep.line("s", to_string(s));
  rep.line("mu", join(out.data.expanded()));
  std::vector<Rational> euler;
  for (const auto& comp : out.data.components) euler.push_back(*comp.euler);
  rep.line("euler", join(euler));
  rep.section("results");
  rep.line("A", to_string(out.area));
  for (int i = 1; i <= 3; ++i) rep.line("c_" + std::to_string(i), to_string(out.coefficients.at(i)));
  rep.line("c_2 closed form", to_string(out.c2_closed));
  rep.line("c_3 closed form", to_string(out.c3_closed));
  rep.line("relation", relation_string(out.coefficients));
  rep.section("checks");
  rep.check("A = s^2", out.area == s * s, to_string(out.area));
  rep.check("c_1 = 0", out.coefficients.at(1) == 0, to_string(out.coefficients.at(1)));
  rep.check("c_2 = (A/3)(a^2-ab+b^2)", out.coefficients.at(2) == out.c2_closed,
            to_string(out.coefficients.at(2)) + " != " + to_string(out.c2_closed));
  rep.check("c_3 = (As/27)(2a^3-3a^2b-3ab^2+2b^3)", out.coefficients.at(3) == out.c3_closed,
            to_string(out.coefficients.at(3)) + " != " + to_string(out.c3_closed));
  rep.check("c_3 = -(As/27)(a+b)(2a-b)(2b-a)", out.coefficients.at(3) == out.c3_factored,
            to_string(out.coefficients.at(3)) + " != " + to_string(out.c3_factored));
  return out;
}

std::string relation_string(const CoefficientVector& c) {
  const int n1 = static_cast<int>(c.c.size());
  auto pw = [](const char* var, int e) -> std::string {
    if (e == 0) return "";
    return e == 1 ? var : std::string(var) + "^" + std::to_string(e);
  };
  std::string rhs;
  for (int i = 1; i <= n1; ++i) {
    const Rational& ci = c.at(i);
    if (ci == 0) continue;
    std::string factors = pw("w", n1 - i);
    factors += (factors.empty() ? "" : "*") + pw("t", i);
    const Rational mag = abs(ci);
    std::string term = mag == 1 ? factors : to_string(mag) + "*" + factors;
    if (rhs.empty())
      rhs = ci < 0 ? "-" + term : term;
    else
      rhs += (ci < 0 ? " - " : " + ") + term;
  }
  return pw("w", n1) + " = " + (rhs.empty() ? "0" : rhs);
}

Report relation_report(const FixedPointData& data, int j_max) {
  const CoefficientVector c = coefficients_from_moments(data);
  const std::vector<Rational> mu = data.expanded();
  Report rep;
  rep.section("inputs");
  rep.line("n", std::to_string(data.n));
  rep.line("mu", join(mu));
  rep.section("relation");
  for (int i = 1; i <= data.n + 1; ++i) rep.line("c_" + std::to_string(i), to_string(c.at(i)));
  rep.line("relation", relation_string(c));
  rep.section("checks");
  rep.check("localization vanishing", true);
  rep.append(recursion_check(data, j_max));

  bool distinct = true;
  for (std::size_t i = 0; i < mu.size() && distinct; ++i)
    for (std::size_t k = i + 1; k < mu.size(); ++k)
      if (mu[i] == mu[k]) distinct = false;
  if (distinct) {
    const auto powers = moment_powers(data, j_max);
    for (const auto& p : powers) rep.line("H(mu^" + std::to_string(p.j) + ")", to_string(p.average));
    rep.check("moment identity j=0.." + std::to_string(j_max), true);
  } else {
    rep.line("moment identity", "skipped (repeated moment values)");
  }

  bool any_euler = false;
  for (const auto& comp : data.components) any_euler = any_euler || comp.euler.has_value();
  if (any_euler) {
    const VolumeResult vol = volume_from_data(data);
    rep.line("volumes", join(vol.values));
    rep.line("A", to_string(vol.volume));
    rep.check("integration formula constancy", true);
  }
  return rep;
}

}  // namespace hbm
