// Copyright 2026 The Hermite Surface Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hermite/g1_connection.hpp"

#include <cmath>

#include <Eigen/Dense>

namespace hermite {
namespace {

Vec3 field_at(const VecField1D& f, int idx) {
  return (idx >= 0 && idx <= f.degree()) ? f.coeffs[idx] : Vec3::Zero();
}

void require_frame(const EdgeFrame& frame) {
  if (frame.b.degree() != 4 || frame.d.degree() != 4 || frame.e.degree() != 4) {
    raise(ErrorKind::kInvalidInput, "edge frame fields must have degree 4");
  }
}

struct FG {
  double f;
  double g;
};

FG end_fg(const Vec3& b, const Vec3& d, const Vec3& e, double g_scale) {
  const Vec3 bd = b.cross(d);
  const double nn = bd.squaredNorm();
  if (nn <= 1e-28 * b.squaredNorm() * d.squaredNorm() || nn == 0.0) {
    raise(ErrorKind::kCollinearFrame, "b and d are parallel at an edge end");
  }
  return {bd.dot(b.cross(e)) / nn, -g_scale * bd.dot(d.cross(e)) / nn};
}

EndParameters params_with(const EdgeFrame& frame, double g_scale) {
  require_frame(frame);
  const FG a = end_fg(frame.b.coeffs[0], frame.d.coeffs[0], frame.e.coeffs[0], g_scale);
  const FG z = end_fg(frame.b.coeffs[4], frame.d.coeffs[4], frame.e.coeffs[4], g_scale);
  return {a.f, a.g, z.f, z.g};
}

}  // namespace

void check_orientation(const EdgeFrame& frame, double tol) {
  require_frame(frame);
  for (int l : {0, 4}) {
    const Vec3& b = frame.b.coeffs[l];
    const Vec3 eb = frame.e.coeffs[l].cross(b);
    const Vec3 bd = b.cross(frame.d.coeffs[l]);
    if (eb.norm() == 0.0 || bd.norm() == 0.0) {
      raise(ErrorKind::kCollinearFrame, "degenerate edge frame at end " + std::to_string(l));
    }
    if ((eb.normalized() - bd.normalized()).norm() > tol) {
      raise(ErrorKind::kOrientation, "cross-boundary derivatives are not on opposite sides at end " +
                                         std::to_string(l));
    }
  }
}

EndParameters end_parameters(const EdgeFrame& frame) { return params_with(frame, 5.0 / 8.0); }

EndParameters exact_end_parameters(const EdgeFrame& frame) { return params_with(frame, 1.0); }

NuXi solve_nu_xi(const std::vector<double>& lambda, const std::vector<double>& mu, const EndParameters& params) {
  if (lambda.size() != 4 || mu.size() != 4) raise(ErrorKind::kInvalidInput, "four coefficients expected");
  NuXi out;
  for (int m = 0; m < 4; ++m) {
    if (!(mu[m] > 0.0)) raise(ErrorKind::kOrientation, "mu coefficients must be positive");
    const double f = m < 2 ? params.f0 : params.f4;
    const double g = m < 2 ? params.g0 : params.g4;
    out.xi.push_back(f * mu[m]);
    out.nu.push_back(f * lambda[m] + g);
  }
  return out;
}

double product_weight(int r, int l, int m) {
  if (m < 0 || m > r || l - m < 0 || l - m > 4) return 0.0;
  return binomial(4, l - m) * binomial(r, m) / binomial(4 + r, l);
}

CrossDerivatives assemble_cross_derivatives(const EdgeFrame& frame, const ConnectingFunctionSet& cfs) {
  require_frame(frame);
  const int r = cfs.r;
  auto sized = [r](const std::vector<double>& c) { return static_cast<int>(c.size()) == r + 1; };
  if (!sized(cfs.lambda) || !sized(cfs.mu) || !sized(cfs.nu) || !sized(cfs.xi) || cfs.v.degree() != 4) {
    raise(ErrorKind::kInvalidInput, "incomplete connecting function set");
  }
  CrossDerivatives out;
  out.d_prime.coeffs.assign(static_cast<std::size_t>(5 + r), Vec3::Zero());
  out.e_prime.coeffs.assign(static_cast<std::size_t>(5 + r), Vec3::Zero());
  for (int l = 0; l <= 4 + r; ++l) {
    for (int m = 0; m <= r; ++m) {
      const double w = product_weight(r, l, m);
      if (w == 0.0) continue;
      const Vec3 b = field_at(frame.b, l - m);
      const Vec3 v = field_at(cfs.v, l - m);
      out.d_prime.coeffs[l] += w * (cfs.lambda[m] * b + cfs.mu[m] * v);
      out.e_prime.coeffs[l] += w * (cfs.nu[m] * b + cfs.xi[m] * v);
    }
  }
  return out;
}

std::array<Vec3, 5> simple_transversal(const EdgeFrame& frame) {
  require_frame(frame);
  std::array<Vec3, 5> v;
  for (int l = 0; l < 5; ++l) v[l] = l == 2 ? Vec3::Zero() : Vec3(frame.d.coeffs[l] - frame.e.coeffs[l]);
  return v;
}

EndpointLambdaMu endpoint_lambda_mu(const EdgeFrame& frame, const Vec3& v0, const Vec3& v4) {
  require_frame(frame);
  EndpointLambdaMu out;
  auto fit = [&](const Vec3& b, const Vec3& v, const Vec3& d, double& lambda, double& mu) {
    Eigen::Matrix<double, 3, 2> a;
    a << b, v;
    if (v.norm() == 0.0) raise(ErrorKind::kDegenerateTransversal, "transversal vector vanishes");
    if (b.cross(v).norm() <= 1e-12 * b.norm() * v.norm()) {
      raise(ErrorKind::kCollinearFrame, "transversal vector parallel to the boundary");
    }
    // Projecting d onto span{b, v} first is what the normal equations do.
    const Eigen::Vector2d x = (a.transpose() * a).ldlt().solve(a.transpose() * d);
    lambda = x(0);
    mu = x(1);
    out.residual = std::max(out.residual, (a * x - d).norm());
    if (!(mu > 0.0)) raise(ErrorKind::kOrientation, "transversal gives non-positive mu");
  };
  fit(frame.b.coeffs[0], v0, frame.d.coeffs[0], out.lambda0, out.mu0);
  fit(frame.b.coeffs[4], v4, frame.d.coeffs[4], out.lambda3, out.mu3);
  return out;
}

QuadraticReduction reduce_to_quadratic(const EndParameters& params, double lambda0, double lambda3, double mu0,
                                       double mu3, double oscillation_threshold) {
  QuadraticReduction out;
  const double df = params.f0 - params.f4;
  const double dg = params.g0 - params.g4;
  const double scale = 1e-12 * (1.0 + std::abs(params.f0) + std::abs(params.f4));
  if (std::abs(df) > scale) {
    const double shift = -2.0 * dg / (3.0 * df);
    out.status = ReductionStatus::kReduced;
    out.mu1 = mu0 / 3.0;
    out.mu2 = mu3 / 3.0;
    out.lambda1 = lambda0 / 3.0 + shift;
    out.lambda2 = lambda3 / 3.0 + shift;
    out.oscillation_warning = std::abs(dg) / std::abs(df) > oscillation_threshold;
    if (out.oscillation_warning) out.note = "large |g0-g4|/|f0-f4|: connecting functions may oscillate";
    return out;
  }
  if (std::abs(dg) <= 1e-12 * (1.0 + std::abs(params.g0) + std::abs(params.g4))) {
    out.status = ReductionStatus::kConstantSuffices;
    out.lambda1 = lambda0;
    out.lambda2 = lambda3;
    out.mu1 = mu0;
    out.mu2 = mu3;
    out.note = "mu0 - 3 mu1 + 3 mu2 - mu3 = 0, lambda0 - 3 lambda1 + 3 lambda2 - lambda3 = 0; constant functions suffice";
    return out;
  }
  out.status = ReductionStatus::kNotReducible;
  out.note = "f0 = f4 but g0 != g4: lambda and nu cannot both be quadratic";
  return out;
}

std::array<Vec3, 5> solve_transversal(const EdgeFrame& frame, const std::vector<double>& lambda,
                                      const std::vector<double>& mu, const Vec3& v2) {
  require_frame(frame);
  const int r = static_cast<int>(lambda.size()) - 1;
  if (r < 1 || mu.size() != lambda.size()) raise(ErrorKind::kInvalidInput, "mismatched connecting coefficients");
  for (double m : mu) {
    if (!(m > 0.0)) raise(ErrorKind::kOrientation, "mu coefficients must be positive");
  }
  const VecField1D target = elevate_field(frame.d, r);
  std::array<Vec3, 5> v;
  v.fill(Vec3::Zero());
  v[2] = v2;
  // Row l of lambda b + mu v, solved for the single unknown v[unknown].
  auto solve_row = [&](int l, int unknown) {
    Vec3 rest = target.coeffs[l];
    double coef = 0.0;
    for (int m = 0; m <= r; ++m) {
      const double w = product_weight(r, l, m);
      if (w == 0.0) continue;
      rest -= w * lambda[m] * field_at(frame.b, l - m);
      if (l - m == unknown) {
        coef += w * mu[m];
      } else {
        rest -= w * mu[m] * v[l - m];
      }
    }
    v[unknown] = rest / coef;
  };
  solve_row(0, 0);
  solve_row(1, 1);
  solve_row(4 + r, 4);
  solve_row(3 + r, 3);
  return v;
}

double fixed_row_residual(const EdgeFrame& frame, const CrossDerivatives& cross, int r) {
  const VecField1D d = elevate_field(frame.d, r);
  const VecField1D e = elevate_field(frame.e, r);
  double res = 0.0;
  for (int l : {0, 1, r + 3, r + 4}) {
    res = std::max(res, (cross.d_prime.coeffs[l] - d.coeffs[l]).norm());
    res = std::max(res, (cross.e_prime.coeffs[l] - e.coeffs[l]).norm());
  }
  return res;
}

double eval_scalar(const std::vector<double>& coeffs, double t) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  double acc = 0.0;
  for (int m = 0; m <= n; ++m) acc += coeffs[m] * bernstein1(n, m, t);
  return acc;
}

double identity_residual(const EdgeFrame& frame, const ConnectingFunctionSet& cfs, const CrossDerivatives& cross,
                         int samples) {
  double res = 0.0;
  for (int s = 0; s < samples; ++s) {
    const double t = samples == 1 ? 0.5 : static_cast<double>(s) / (samples - 1);
    const Vec3 b = frame.b.eval(t);
    const Vec3 v = cfs.v.eval(t);
    const Vec3 d = eval_scalar(cfs.lambda, t) * b + eval_scalar(cfs.mu, t) * v;
    const Vec3 e = eval_scalar(cfs.nu, t) * b + eval_scalar(cfs.xi, t) * v;
    res = std::max(res, (cross.d_prime.eval(t) - d).norm());
    res = std::max(res, (cross.e_prime.eval(t) - e).norm());
  }
  return res;
}

ConnectingFunctionSet default_connection(const EdgeFrame& frame) {
  const auto v = simple_transversal(frame);
  const EndpointLambdaMu ep = endpoint_lambda_mu(frame, v[0], v[4]);
  ConnectingFunctionSet cfs;
  cfs.r = 3;
  cfs.lambda = {ep.lambda0, ep.lambda0, ep.lambda3, ep.lambda3};
  cfs.mu = {ep.mu0, ep.mu0, ep.mu3, ep.mu3};
  const NuXi nx = solve_nu_xi(cfs.lambda, cfs.mu, exact_end_parameters(frame));
  cfs.nu = nx.nu;
  cfs.xi = nx.xi;
  cfs.v = VecField1D(std::vector<Vec3>(v.begin(), v.end()));
  return cfs;
}

}  // namespace hermite
