#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "neighborly/chirotope.hpp"
#include "neighborly/polytope.hpp"

namespace neighborly {

enum class Family { S, E, O, G };
std::string to_string(Family f);
Family parse_family(const std::string& text);

struct FamilySpec {
  Family family = Family::G;
  /// Polytope dimension (even).
  int dim = 4;
  /// Number of vertices.
  int vertices = 8;
  /// Extra sewing depth for O.
  int budget = 2;
  int jobs = 1;
  /// For O: stop early once O equals G (O is contained in G, so further
  /// sewing depth cannot add types).
  bool stop_at_g = false;
};

struct FamilyResult {
  FamilySpec spec;
  /// Sorted canonical types of the polytopes in the family.
  std::vector<CombType> types;
  /// One polytope per type, aligned with `types`.
  std::vector<Chirotope> members;
  /// Every member passed the neighborliness check.
  bool verified = false;
  std::string note;
};

/// Generates a family up to combinatorial type. Throws std::invalid_argument
/// outside the supported envelope (even d in [2, 8], d < n <= 12).
FamilyResult enumerate_family(const FamilySpec& spec);

struct ContainmentReport {
  int dim = 0;
  int vertices = 0;
  std::size_t s = 0, e = 0, o = 0, g = 0;
  bool s_in_e = false, e_in_o = false, o_in_g = false;
  bool ok() const { return s_in_e && e_in_o && o_in_g; }
};

ContainmentReport containment_check(int dim, int vertices, int budget = 2, int jobs = 1, bool stop_at_g = false);

/// Number of distinct sign tables among all full lexicographic extensions
/// (new element labeled n).
std::uint64_t brute_lex_extension_count(const Chirotope& m);

/// Distinct labeled oriented matroids among duals of all labelings of a
/// convex (r+3)-gon.
std::uint64_t labeled_corank3_count(int r);

enum class GraphShape { complete, cycle, chains, other };
std::string to_string(GraphShape s);

struct InseparabilityGraph {
  int n = 0;
  std::vector<InseparablePair> edges;
  GraphShape shape = GraphShape::other;
  /// Shapes allowed for this (rank, size).
  std::vector<GraphShape> expected;
  bool consistent() const;
};

InseparabilityGraph inseparability_graph(const Chirotope& chi);

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

struct BoundValue {
  std::string id;
  /// Exact value when the formula is integral.
  std::optional<BigInt> exact;
  /// Natural logarithm of the value.
  BigFloat log_value;
};

struct BoundReport {
  int n = 0, d = 0, r = 0, m = 0;
  std::vector<BoundValue> values;
  std::optional<std::uint64_t> brute_force;
  bool product_ge_closed = false;
  /// Closed form >= corollary form; only evaluated when n > 2d.
  std::optional<bool> closed_ge_corollary;
  /// Product form >= closed form, and the recursive form equals the product.
  bool consistent = false;
  std::string text() const;
  const BoundValue* find(const std::string& id) const;
};

/// 2 n! / (n - r + 1)!
BigInt lle_lower_bound(int n, int r);
/// 2^(r-1) n! / ((n - 1) (n - r)!), as a rational floor.
BigInt lle_remark_bound(int n, int r);

/// Number of vertex-labeled polytopes represented: sum of n!/|Aut| over types.
BigInt labeled_count(const FamilyResult& result);

/// Evaluates the lower bounds on labeled neighborly d-polytopes with n vertices.
BoundReport eval_bounds(int n, int d);

}  // namespace neighborly
