#pragma once

#include <stdexcept>
#include <string>

namespace manprox {

// Primal value fell below the dual value by more than the weak-duality floor.
// Signals a bug in a dual evaluation, not a numerical hiccup.
class DualityViolation : public std::runtime_error {
 public:
  DualityViolation(double primal, double dual, std::string what)
      : std::runtime_error(std::move(what)), primal(primal), dual(dual) {}
  double primal;
  double dual;
};

// No shrink factor within the halving budget satisfied both retraction
// line-search conditions.
class LineSearchFailure : public std::runtime_error {
 public:
  LineSearchFailure(std::string what, int halvings, double alpha,
                    double step_norm_sq, int outer_iteration = -1)
      : std::runtime_error(std::move(what)),
        halvings(halvings),
        alpha(alpha),
        step_norm_sq(step_norm_sq),
        outer_iteration(outer_iteration) {}
  int halvings;
  double alpha;
  double step_norm_sq;
  int outer_iteration;
};

// A subproblem solver hit its iteration budget before certifying its
// stopping condition. Carries the last certified gap for diagnostics.
class SubsolverFailure : public std::runtime_error {
 public:
  SubsolverFailure(std::string what, int iterations, double gap,
                   int outer_iteration = -1)
      : std::runtime_error(std::move(what)),
        iterations(iterations),
        gap(gap),
        outer_iteration(outer_iteration) {}
  int iterations;
  double gap;
  int outer_iteration;
};

// Malformed input file; line/column are 1-based, 0 when not applicable.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string what, std::string path, long line, long column = 0)
      : std::runtime_error(std::move(what)),
        path(std::move(path)),
        line(line),
        column(column) {}
  std::string path;
  long line;
  long column;
};

}  // namespace manprox
