#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dblab/db_space.hpp"
#include "dblab/defaults.hpp"
#include "dblab/majorization.hpp"

namespace dblab {

struct ShippedFunction {
  std::string name;
  FunctionExpr f;
  bool in_space = false;                  // claimed membership in the instance's space H
  std::optional<bool> in_subspace;        // claimed membership in the subspace L, when there is one
};

struct ExampleInstance {
  std::string id;
  std::vector<std::pair<std::string, double>> parameters;
  std::optional<DbSpace> space;     // H
  std::optional<DbSpace> subspace;  // L, when the instance has one
  std::vector<ShippedFunction> functions;
  std::map<std::string, FunctionExpr> objects;  // auxiliary functions (G, G~, q, Theta, ...)
  std::vector<Majorant> majorants;
  std::vector<std::string> notes;
};

/// Ids accepted by build_example: pw, a20, a38, a41, a45, poly.
std::vector<std::string> example_ids();
ExampleInstance build_example(const std::string& id, const std::map<std::string, double>& params = {});

// --- Paley-Wiener -----------------------------------------------------------

/// sin(a (z - x)) / (pi (z - x)), the PW_a kernel at x.
FunctionExpr pw_kernel(double a, double x);
ExampleInstance build_pw(double a);

// --- E = cos z - i (z cos z + sin z) -----------------------------------------

FunctionExpr a20_E();
ExampleInstance build_a20(double h = 1.0);

// --- order 1/2 products with zeros n^2 - i and n^2 - i n --------------------

/// prod (1 - i/n^2) = sin(pi sqrt i) / (pi sqrt i).
cplx a38_constant_closed_form();
/// The same constant from the truncated product, cached per truncation.
EvalResult a38_constant(std::size_t n_max = defaults::kA38Truncation);
/// prod (1 - z/(n^2 - i)) in closed form: sin(pi sqrt(z+i)) / (pi sqrt(z+i)) divided by the constant.
cplx a38_G_closed_form(cplx z);
ExampleInstance build_a38(std::size_t n_max = defaults::kA38Truncation);

// --- poles |n|^alpha with weights |n|^(2 alpha - 2) --------------------------

struct A41Data {
  double alpha = 2.0;
  double y0 = 1.0;
  std::size_t n_max = defaults::kA41Truncation;
  FunctionExpr q;      // sum mu_n (1/(t_n - z) - 1/t_n)
  FunctionExpr theta;  // (i - q)/(i + q), so that q = i (1 - Theta)/(1 + Theta)

  double im_q(double x) const;  // Im q(x + i y0)
  /// Lower bound for Im q(x + i y0) from the single pair of poles at +-k^alpha
  /// with k^alpha <= x < (k+1)^alpha; zero for x < 1.
  double bracket_bound(double x) const;
};

A41Data a41_data(double alpha, double y0, std::size_t n_max = defaults::kA41Truncation);
/// sum over n != 0 of mu_n / t_n^2 for |n| <= n_max (no tail).
double a41_weight_sum(double alpha, std::size_t n_max);
ExampleInstance build_a41(double alpha = 2.0, double y0 = 1.0, std::size_t n_max = defaults::kA41Truncation);

// --- zeros sign(n) log|n| + i/(|n| log^2|n|) ---------------------------------

/// Term of the phase-derivative series for the zero with index n >= 2 at x.
double a45_term(std::size_t n, double x);
/// phi'(x) from the zeros with 2 <= |n| <= n_max.
double a45_phase_derivative(std::size_t n_max, double x);
/// (e^x - 1)/x^2 / (1 + 1/log(2)^4).
double a45_bound(double x);
ExampleInstance build_a45(std::size_t n_max = defaults::kA45Truncation);

// --- polynomial spaces -------------------------------------------------------

/// H = H((z+i)^3) (polynomials of degree <= 2), L = H((z+i)^2).
ExampleInstance build_poly();

}  // namespace dblab
