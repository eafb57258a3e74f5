#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "lvpert/polynomial.hpp"
#include "lvpert/series.hpp"

namespace lvpert {

enum class MethodKind { Taylor, Adomian, HPM, VIM };

inline constexpr MethodKind kAllMethods[] = {MethodKind::Taylor, MethodKind::Adomian, MethodKind::HPM,
                                             MethodKind::VIM};

/// "taylor", "adomian", "hpm", "vim".
std::string_view to_string(MethodKind kind) noexcept;
std::optional<MethodKind> parse_method(std::string_view name) noexcept;

struct PolynomialPair {
  Polynomial x;
  Polynomial y;
};

/// Approximants produced by an iterative scheme; iterates[0] is the constant
/// pair (x0, y0).
struct IterateSequence {
  MethodKind method;
  std::vector<PolynomialPair> iterates;
};

// ---------------------------------------------------------------------------
// Adomian decomposition
//
// x = sum u_n, y = sum v_n with
//   u_{n+1}(t) = int_0^t (a u_n - b A_n),  v_{n+1}(t) = int_0^t (-c v_n + d A_n)
// where A_n is the n-th Adomian polynomial of the product x y. Every
// component is a single monomial of degree n.

struct Monomial {
  double coeff = 0.0;
  std::size_t degree = 0;
};

struct AdomianComponent {
  Monomial u;
  Monomial v;
  /// A_n, the Adomian polynomial of x y built from components 0..n.
  Monomial nonlinear;
};

std::vector<AdomianComponent> adomian_components(const InitialValueProblem& ivp, int order);
SeriesSolution adomian_series(const InitialValueProblem& ivp, int order);

// ---------------------------------------------------------------------------
// Homotopy perturbation with linear operator L = d/dt and initial guess
// (x0, y0). Matching powers of the embedding parameter p gives
//   x_0 = x0,  x_{n+1}' = a x_n - b sum_k x_k y_{n-k},  x_{n+1}(0) = 0
// and the analogous y cascade; the approximant is the sum at p = 1.

/// Per-power terms (x_n, y_n), n = 0..order.
std::vector<PolynomialPair> hpm_components(const InitialValueProblem& ivp, int order);
SeriesSolution hpm_series(const InitialValueProblem& ivp, int order);

// ---------------------------------------------------------------------------
// Variational iteration with Lagrange multiplier -1:
//   x_{k+1} = x_k - int_0^t [x_k' - x_k (a - b y_k)] ds
//   y_{k+1} = y_k - int_0^t [y_k' + y_k (c - d x_k)] ds
// Iterate k is kept up to degree min(2k, 64).

inline constexpr std::size_t kVimDegreeCeiling = 64;

std::size_t vim_degree_cap(int iteration) noexcept;
IterateSequence vim_iterates(const InitialValueProblem& ivp, int iterations);
/// Iterate `order` truncated to degree `order`.
SeriesSolution vim_series(const InitialValueProblem& ivp, int order);

// ---------------------------------------------------------------------------

/// Max over n <= order of |c_method - c_taylor| / (1 + |c_taylor|), both components.
struct AgreementReport {
  double adomian = 0.0;
  double hpm = 0.0;
  double vim = 0.0;

  double worst() const noexcept;
};

double max_relative_deviation(const SeriesSolution& candidate, const SeriesSolution& reference);

/// Throws ArgumentError for order < 1.
AgreementReport methods_agree(const InitialValueProblem& ivp, int order);

/// The approximant a method produces at the given order. Taylor, Adomian
/// and HPM give their truncated series; VIM gives the full (capped) iterate.
PolynomialPair approximant(const InitialValueProblem& ivp, MethodKind method, int order);

PolynomialPair to_polynomials(const SeriesSolution& s);

}  // namespace lvpert
