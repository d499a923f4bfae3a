#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "neighborly/element_set.hpp"

namespace neighborly {

using Sign = std::int8_t;

/// Uniform oriented matroid given by its basis orientations.
///
/// Elements are labeled 0..n-1. The sign table holds one entry per r-subset,
/// indexed in colexicographic order, each entry +1 or -1. Evaluation on an
/// unsorted tuple is alternating (see eval()).
///
/// Rank 0 is admitted as a degenerate value (a single sign for the empty
/// basis) so that the dual of a free matroid stays representable.
class Chirotope {
 public:
  Chirotope() = default;
  Chirotope(int n, int rank, std::vector<Sign> signs);

  /// Builds a chirotope by calling sign_of(basis) on every r-subset.
  template <typename Fn>
  static Chirotope from_function(int n, int rank, Fn&& sign_of) {
    std::vector<Sign> signs;
    signs.reserve(binomial(n, rank));
    for_each_subset(n, rank, [&](ElementSet basis) { signs.push_back(sign_of(basis)); });
    return Chirotope(n, rank, std::move(signs));
  }

  /// All bases positive: the alternating chirotope of the moment curve.
  static Chirotope alternating(int n, int rank);

  int size() const { return n_; }
  int rank() const { return rank_; }
  ElementSet ground() const { return full_set(n_); }

  /// Sign of a basis given as an ascending set.
  Sign operator()(ElementSet basis) const { return signs_[colex_rank(basis)]; }

  /// Alternating evaluation: 0 on repeated entries, otherwise the sign of
  /// the sorted basis times the parity of the sorting permutation.
  Sign eval(std::span<const int> tuple) const;
  Sign eval(std::initializer_list<int> tuple) const {
    return eval(std::span<const int>(tuple.begin(), tuple.size()));
  }

  /// Sign of the tuple (H ascending, e): the cocircuit of H evaluated at e.
  Sign eval_hyperplane(ElementSet hyperplane, int e) const {
    if (contains(hyperplane, e)) return 0;
    const Sign s = (*this)(hyperplane | singleton(e));
    return (count_above(hyperplane, e) & 1) ? static_cast<Sign>(-s) : s;
  }

  const std::vector<Sign>& signs() const { return signs_; }
  std::string sign_string() const;

  Chirotope negated() const;
  /// Representative of {chi, -chi} whose first basis is positive.
  Chirotope normalized() const;
  /// Equality of oriented matroids: tables equal up to a global sign.
  bool same_oriented_matroid(const Chirotope& other) const;

  bool operator==(const Chirotope&) const = default;

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Sign> signs_;
};

/// Signed subset (X+, X-) of a ground set.
struct SignedSet {
  int ground = 0;
  ElementSet plus = 0;
  ElementSet minus = 0;

  ElementSet support() const { return plus | minus; }
  ElementSet zeros() const { return full_set(ground) & ~support(); }
  Sign operator()(int e) const { return contains(plus, e) ? 1 : (contains(minus, e) ? -1 : 0); }
  SignedSet negated() const { return {ground, minus, plus}; }
  bool operator==(const SignedSet&) const = default;
  auto operator<=>(const SignedSet&) const = default;
};

std::string format_signed_set(const SignedSet& x);

struct ValidityReport {
  bool ok = true;
  /// (tau..., a, b, c, d) of the first violated three-term relation.
  std::vector<int> violating_tuple;
  std::string message;
};

/// Brute-force three-term Grassmann-Pluecker check. For uniform alternating
/// maps these relations characterize chirotopes.
ValidityReport validate(const Chirotope& chi);

/// Dual chirotope, rank n - r. The global sign convention makes dual an
/// exact involution on sign tables.
Chirotope dual(const Chirotope& chi);

struct Minor {
  ElementSet deleted = 0;
  ElementSet contracted = 0;
  Chirotope result;
  /// survivors[new_label] = original label.
  std::vector<int> survivors;
};

/// Deletion of `remove` and contraction of `contract` (in ascending order).
/// Survivors are relabeled 0.. in ascending original order.
Minor minor(const Chirotope& chi, ElementSet remove, ElementSet contract);
Chirotope deletion(const Chirotope& chi, ElementSet remove);
Chirotope contraction(const Chirotope& chi, ElementSet contract);

/// One representative per +/- pair, positive at its smallest support element.
/// Cocircuits are listed in colexicographic order of their zero sets.
std::vector<SignedSet> cocircuits(const Chirotope& chi);
std::vector<SignedSet> circuits(const Chirotope& chi);

/// Cocircuit vanishing on the (r-1)-set `hyperplane`, with C(e) = chi(H, e).
SignedSet cocircuit_of(const Chirotope& chi, ElementSet hyperplane);

/// perm[old_label] = new_label; flips lists (old) labels to reorient.
Chirotope relabel_reorient(const Chirotope& chi, std::span<const int> perm, ElementSet flips = 0);

struct InseparablePair {
  int first = 0;
  int second = 0;
  /// +1 covariant, -1 contravariant.
  int sign = 0;
  bool operator==(const InseparablePair&) const = default;
};

std::vector<InseparablePair> inseparable_pairs(const Chirotope& chi);
/// Inseparability sign of a pair, or nullopt when separable.
std::optional<int> inseparability(const Chirotope& chi, int a, int b);

}  // namespace neighborly
