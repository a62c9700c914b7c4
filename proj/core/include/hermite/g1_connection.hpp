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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hermite/bezier.hpp"

namespace hermite {

// Boundary derivative b and cross-boundary derivatives d (second patch) and
// e (first patch) along a shared edge, all of degree 4.
struct EdgeFrame {
  VecField1D b;
  VecField1D d;
  VecField1D e;
};

struct ConnectingFunctionSet {
  int r = 3;
  std::vector<double> lambda;
  std::vector<double> mu;
  std::vector<double> nu;
  std::vector<double> xi;
  VecField1D v;  // transversal field v_0..v_4
};

struct EndParameters {
  double f0 = 0.0;
  double g0 = 0.0;
  double f4 = 0.0;
  double g4 = 0.0;
};

// Throws kOrientation unless normalized e x b equals normalized b x d at both
// ends of the edge (within tol).
void check_orientation(const EdgeFrame& frame, double tol = 1e-8);

// f = <b x d, b x e>/|b x d|^2 and g = -(5/8) <b x d, d x e>/|b x d|^2 at both ends.
EndParameters end_parameters(const EdgeFrame& frame);

// Same f, with g = -<b x d, d x e>/|b x d|^2: the exact decomposition
// e = g b + f d at the edge ends, which the assembled rows reproduce.
EndParameters exact_end_parameters(const EdgeFrame& frame);

struct NuXi {
  std::vector<double> nu;
  std::vector<double> xi;
};

// xi_m = f mu_m, nu_m = f lambda_m + g with (f0, g0) for m = 0, 1 and (f4, g4)
// for m = 2, 3.
NuXi solve_nu_xi(const std::vector<double>& lambda, const std::vector<double>& mu, const EndParameters& params);

struct CrossDerivatives {
  VecField1D d_prime;
  VecField1D e_prime;
};

// Degree (4 + r) coefficients of lambda b + mu v and nu b + xi v.
CrossDerivatives assemble_cross_derivatives(const EdgeFrame& frame, const ConnectingFunctionSet& cfs);

// Weight of (lambda_m, b_{l-m}) in the degree-(4+r) product coefficient l.
double product_weight(int r, int l, int m);

// v_l = d_l - e_l for l = 0, 1, 3, 4 (v_2 left zero).
std::array<Vec3, 5> simple_transversal(const EdgeFrame& frame);

struct EndpointLambdaMu {
  double lambda0 = 0.0;
  double mu0 = 0.0;
  double lambda3 = 0.0;
  double mu3 = 0.0;
  double residual = 0.0;  // distance of d_0, d_4 from the fitted combinations
};

EndpointLambdaMu endpoint_lambda_mu(const EdgeFrame& frame, const Vec3& v0, const Vec3& v4);

enum class ReductionStatus { kReduced, kConstantSuffices, kNotReducible };

struct QuadraticReduction {
  ReductionStatus status = ReductionStatus::kNotReducible;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double mu1 = 0.0;
  double mu2 = 0.0;
  bool oscillation_warning = false;
  std::string note;
};

QuadraticReduction reduce_to_quadratic(const EndParameters& params, double lambda0, double lambda3, double mu0,
                                       double mu3, double oscillation_threshold = 10.0);

// Transversal vectors v_0, v_1, v_3, v_4 that make the d-side rows 0, 1,
// r+3, r+4 match the elevated d field for given lambda, mu (v_2 kept).
std::array<Vec3, 5> solve_transversal(const EdgeFrame& frame, const std::vector<double>& lambda,
                                      const std::vector<double>& mu, const Vec3& v2);

// Max defect of the rows fixed by the endpoint data: d'_l and e'_l against
// the elevated d and e fields for l in {0, 1, r+3, r+4}.
double fixed_row_residual(const EdgeFrame& frame, const CrossDerivatives& cross, int r);

// Max pointwise defect of d' = lambda b + mu v and e' = nu b + xi v at
// `samples` uniform parameters.
double identity_residual(const EdgeFrame& frame, const ConnectingFunctionSet& cfs, const CrossDerivatives& cross,
                         int samples = 20);

// Scalar Bezier polynomial evaluation.
double eval_scalar(const std::vector<double>& coeffs, double t);

// Default set: simple transversal, endpoint fit, equal partners, exact end
// parameters; v_2 is supplied separately (midpoint transversal).
ConnectingFunctionSet default_connection(const EdgeFrame& frame);

}  // namespace hermite
