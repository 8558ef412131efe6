#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsv/polynomial.hpp"

namespace gsv {

/// Closed axis-parallel box with rational corners.
struct Box {
  std::vector<Rational> lo;
  std::vector<Rational> hi;

  static Box cube(std::size_t n, const Rational& radius);
  std::size_t dim() const { return lo.size(); }
};

struct OracleVerdict {
  int value = 0;
  std::string method;
  bool certified = false;
  std::size_t effort = 0;  ///< sign certificates attempted
  std::vector<std::string> notes;
};

struct DegreeOptions {
  std::size_t max_cells = 400000;
  bool allow_fallback = true;
};

/// Brouwer degree of X on the box by the recursive boundary sign-vector
/// method over exact cubical chains. Throws MathError::BoundaryZero when a
/// zero of X is found on the boundary. When the cell budget runs out the
/// verdict falls back to numeric preimage counting and is marked uncertified
/// (or throws BudgetExceeded if the fallback is disabled).
OracleVerdict degree(const VectorField& X, const Box& box, const DegreeOptions& options = {});

/// Degree on cubes of half-width 1, 1/2, 1/4, ... until a certified value.
OracleVerdict degree_at_origin(const VectorField& X, const Rational& start_radius = 1,
                               int max_halvings = 20);

/// Relative index sum of X on the smoothed plane curve f = epsilon inside
/// the disk of the given radius, from the boundary crossings of the curve.
/// Requires two variables and sgn(epsilon) == side.
OracleVerdict curve_gsv(const Polynomial& f, const VectorField& X, int side,
                        const Rational& radius, const Rational& epsilon);

struct ConservationResult {
  OracleVerdict before;
  OracleVerdict after;
  int trace_count = 0;        ///< signed real zeros of the perturbed field in the box
  int trace_total = 0;        ///< signed real zeros anywhere
  std::size_t global_dim = 0;  ///< number of complex zeros with multiplicity
  std::vector<std::vector<double>> numeric_zeros;
  bool consistent() const {
    return before.value == after.value && after.value == trace_count;
  }
};

/// Degree of X and of X + scale * perturbation on the box, and the signed
/// count of real zeros of the perturbed field in the box from trace forms on
/// its global quotient algebra. Requires simple perturbed zeros, none on the
/// box boundary.
ConservationResult conservation_check(const VectorField& X, const VectorField& perturbation,
                                      const Rational& scale, const Box& box);

/// Real zeros of X in the box located by damped Newton from a start grid.
std::vector<std::vector<double>> numeric_zeros(const VectorField& X, const Box& box);

}  // namespace gsv
