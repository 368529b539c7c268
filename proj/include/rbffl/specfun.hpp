#pragma once

// Real-argument special functions used throughout the solver:
// Gamma (Lanczos), digamma, the confluent (1F1) and Gauss (2F1)
// hypergeometric functions, and the two normalization constants
// c_{d,alpha} and C_{d,alpha} of the fractional Laplacian.

namespace rbffl {

struct SpecFunResult {
    double value = 0.0;
    double est_abs_error = 0.0;  // heuristic bound from the truncation term
};

// Gamma function. Throws std::domain_error at the poles (x = 0, -1, -2, ...)
// and std::range_error when |x| > 170 (double overflow guard).
double gamma_fn(double x);

// Reciprocal gamma; returns exactly 0 at the poles of Gamma.
double rgamma(double x);

// Digamma (psi) function for non-pole real arguments.
double digamma(double x);

// Confluent hypergeometric 1F1(a; b; z). Requires b > 0 and finite inputs;
// accurate for z <= 0 (the solver's range), |z| up to ~700.
SpecFunResult hyp1f1(double a, double b, double z);

// Gauss hypergeometric 2F1(a, b; c; z) for z < 1 and c not a non-positive
// integer. Exact (up to rounding) when a or b is a non-positive integer.
SpecFunResult hyp2f1(double a, double b, double c, double z);

// c_{d,alpha} = 2^alpha Gamma((d+alpha)/2) / Gamma(d/2)  (Lemma 1 constant).
double coeff_c(int d, double alpha);

// C_{d,alpha} = 2^{alpha-1} alpha Gamma((alpha+d)/2) / (pi^{d/2} Gamma(1-alpha/2)),
// the integral-fractional-Laplacian normalization; requires alpha in (0,2).
double coeff_C(int d, double alpha);

}  // namespace rbffl
