#pragma once

// Affine hyperplane arrangements a.x = b and their sign structure. All
// arithmetic runs on exact rationals; inputs that arrived as floating point
// switch the zero test to a configurable epsilon band instead of exactness.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "coms/reconstruction.hpp"
#include "coms/sign_system.hpp"

namespace coms {

using Rational = mpq_class;

struct Hyperplane {
  std::vector<Rational> coeffs;  // not all zero
  Rational offset;
  std::string label;

  Hyperplane(std::vector<Rational> coeffs, Rational offset, std::string label);
};

struct Point {
  std::vector<Rational> coords;
};

struct Arrangement {
  int dimension = 0;
  std::vector<Hyperplane> hyperplanes;  // distinct labels, coeff lengths = dimension

  Arrangement(int dimension, std::vector<Hyperplane> hyperplanes);
  GroundSet ground() const;
};

// exact = true: sign decided by exact comparison with zero.
// exact = false: |a.v - b| <= epsilon counts as zero.
struct SignPolicy {
  bool exact = true;
  double epsilon = 1e-9;
};

Rational evaluate(const Hyperplane& h, const Point& v);  // a.v - b
Sign sign_map(const Hyperplane& h, const Point& v, const SignPolicy& policy = {});
SignVector arrangement_sign(const Arrangement& a, const Point& v, const SignPolicy& policy = {});

// Sign vectors of the sample points, deduplicated, as a tope set. A point on
// (or within tolerance of) any hyperplane raises OnHyperplaneError naming both.
TopeSet topes_from_points(const Arrangement& a, const std::vector<Point>& points,
                          const SignPolicy& policy = {});

// topes_from_points chained into reconstruct_com.
SignSystem apartment_to_com(const Arrangement& a, const std::vector<Point>& points,
                            const SignPolicy& policy = {}, const ReconstructOptions& opts = {});

// Deletes every coordinate that carries the same nonzero sign in all covectors
// (hyperplanes disjoint from the sampled region). Identity when none exist.
SignSystem drop_constant_coordinates(const SignSystem& s);

// JSON input: {"dimension": n, "hyperplanes": [{"label", "coeffs", "offset"}...],
// "points": [[...], ...]}. Numbers may be JSON integers, decimal strings, or
// rational strings "p/q"; a floating JSON number flips exact_inputs off.
struct ArrangementInput {
  Arrangement arrangement;
  std::vector<Point> points;
  bool exact_inputs = true;
};

ArrangementInput read_arrangement_json(std::istream& in);

std::string rational_to_string(const Rational& q);

}  // namespace coms
