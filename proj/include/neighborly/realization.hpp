#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "neighborly/chirotope.hpp"
#include "neighborly/extension.hpp"

namespace neighborly {

using Rational = boost::multiprecision::cpp_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Vector configuration in homogeneous coordinates. Affine points carry a
/// leading 1; rank() is the common vector length.
struct PointConfig {
  std::vector<RationalVector> points;

  int size() const { return static_cast<int>(points.size()); }
  int rank() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }

  /// Prepends the homogenizing coordinate 1 to every affine point.
  static PointConfig from_affine(const std::vector<RationalVector>& affine);
  /// Affine coordinates (drops the leading coordinate after scaling it to 1).
  std::vector<RationalVector> affine() const;
};

Rational determinant(RationalMatrix m);
int determinant_sign(const RationalMatrix& m);

/// Points (1, t, t^2, ..., t^(rank-1)) for t = 1..n.
PointConfig moment_curve(int n, int rank);

/// Sign of every maximal minor, rows taken in ascending label order.
/// Throws std::invalid_argument if some maximal minor vanishes.
Chirotope chirotope_of_points(const PointConfig& cfg);

struct RealizedExtension {
  PointConfig config;
  /// Value of epsilon at which agreement was reached, as 1/K.
  Rational epsilon;
  int iterations = 0;
};

/// Appends v = s_1 v_1 + eps s_2 v_2 + eps^2 s_3 v_3 + ... with eps = 1/K,
/// doubling K from 2 until the chirotope matches lex_extend.
RealizedExtension realize_lex_extension(const PointConfig& cfg, const LexSignature& sig,
                                        int max_iterations = 64);

/// Maximal cells of a polyhedral subdivision, each a set of point labels.
struct Subdivision {
  std::vector<ElementSet> cells;
  bool operator==(const Subdivision&) const = default;
  std::string to_string() const;
};

/// Recursive pushing/pulling subdivision of an affine configuration in
/// convex and general position.
Subdivision lex_subdivision(const PointConfig& cfg, const LexSignature& sig);

struct LiftedSubdivision {
  Subdivision lower;
  /// Facets through the apex, without the apex label.
  std::vector<ElementSet> apex_facets;
  Rational epsilon;
};

/// Lifts v_i by -s_i eps^(i-1) (0 beyond the signature), adds the apex
/// (0, ..., 0, 1) and reads off the facets that avoid the apex. eps is
/// halved until every maximal minor has its eps -> 0 limit sign.
LiftedSubdivision lift_and_lower_faces(const PointConfig& cfg, const LexSignature& sig,
                                       int max_iterations = 64);

/// Facets of conv(points) for an affine configuration of full dimension,
/// each given by the labels on its supporting hyperplane.
std::vector<ElementSet> hull_facets(const PointConfig& cfg, ElementSet subset);

/// d! times the Euclidean volume of the convex hull of the given points.
Rational normalized_volume(const PointConfig& cfg, ElementSet subset);

/// Rational point on the unit circle (d = 2) or sphere (d = 3), pseudo-randomly
/// chosen; resampled by the caller if not in general position.
RationalVector random_sphere_point(int d, std::mt19937_64& rng);

/// Affine configuration of n points in convex and general position.
PointConfig random_convex_config(int n, int d, std::mt19937_64& rng);

/// Vector configuration with small integer entries whose maximal minors are
/// all nonzero.
PointConfig random_general_vectors(int n, int rank, std::mt19937_64& rng);

}  // namespace neighborly
