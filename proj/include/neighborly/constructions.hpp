#pragma once

#include <string>
#include <vector>

#include "neighborly/chirotope.hpp"
#include "neighborly/extension.hpp"
#include "neighborly/polytope.hpp"

namespace neighborly {

/// The totally cyclic configuration e_1, ..., e_r, -(e_1 + ... + e_r).
Chirotope stc(int r);

/// Cyclic polytope C(n, d) with vertices in cyclic order: the all-plus
/// chirotope of rank d+1.
Chirotope cyclic_polytope(int n, int d);

/// Universal subflag and split bookkeeping of a flag.
struct FlagStructure {
  bool has_universal_subflag = false;
  /// Universal faces T_1 < ... < T_m (sizes 2, 4, ..., 2m) found in the flag.
  std::vector<ElementSet> universal;
  /// x_i is the split element when T_i is split, else the smaller new element.
  std::vector<int> x, y;
  std::vector<bool> split;
  /// The flag with roles annotated.
  Flag annotated;
};

FlagStructure analyze_flag(const Chirotope& chi, const Flag& flag);

/// Signature [T_1^+, U_2^-, U_3^+, ...] truncated to the rank; elements of
/// each block ascending, U_{k+1} the elements outside the flag.
LexSignature sewing_signature(const Chirotope& chi, const Flag& flag);

/// Lexicographic extension sewn through the flag. The new element is n.
ExtensionResult sew(const Chirotope& chi, const Flag& flag);

/// F_1 \ (F_2 \ (... \ F_k)) where F_j are the facets containing the j-th face.
std::vector<ElementSet> facets_beyond(const Chirotope& chi, const Flag& flag);

struct UniversalPropagation {
  /// Predicted universal faces of the sewn matroid (new element labeled n).
  std::vector<ElementSet> faces;
  /// Predictions that failed verification.
  std::vector<ElementSet> failures;
  bool ok() const { return failures.empty(); }
};

/// Universal faces of the sewn matroid predicted from the split/parity
/// pattern of the flag, each checked against the sewn result.
UniversalPropagation propagate_universal(const Chirotope& chi, const Flag& flag);

/// Gale sewing step: p by `p_signature`, then q by [p-, a_1-, ..., a_{r-1}-].
struct GaleStep {
  LexSignature p_signature;
  /// [p-, a_1-, ..., a_{r-1}-] with p labeled `p_label`.
  LexSignature q_signature(int p_label) const;
};

/// M[p][q]; p gets label n and q label n+1. Rejects unbalanced input.
Chirotope gale_sew(const Chirotope& m, const GaleStep& step);
/// Same without the balancedness guard.
Chirotope gale_double_extension(const Chirotope& m, const GaleStep& step);

/// Contraction of the second Gale element: (M[p][q])/q against
/// (M/a_1)[p'][q'] with p' = [a_2^{-s_1 s_2}, ...], q' = [p'-, a_2-, ...].
IdentityReport gale_quotient_check(const Chirotope& m, const GaleStep& step);

/// Exchanges within a Gale sewing: M[p][q] against M[p'][q'] with all signs
/// of p reversed (p and q swap roles), and against M[p''][q''] with
/// p'' = [a_1^+, a_2^{-s_1 s_2}, ...] (a_1 trades places with p or q).
IdentityReport gale_order_check(const Chirotope& m, const GaleStep& step);

enum class GaleDeletionCase { second, first, signature, other };
std::string to_string(GaleDeletionCase c);

struct GaleDeletionReport {
  GaleDeletionCase which = GaleDeletionCase::other;
  bool ok = false;
  /// M' = M / e' and the step for which M[p][q] / e = M'[p'][q'].
  Chirotope base;
  GaleStep step;
};

/// For e in M[p][q], identifies which element e' of M and which step give
/// (M[p][q]) / e as a Gale sewing of M / e', and verifies it.
GaleDeletionReport gale_deletion_check(const Chirotope& m, const GaleStep& step, int e);

/// M[s_{n-1}^-, s_{n-2}^-, ...] truncated to the rank, for M dual to a
/// cyclic polytope labeled in cyclic order.
Chirotope cyclic_dual_extend(const Chirotope& m);

struct DoubleExtension {
  Chirotope result;
  /// The contraction of the two new elements reproduces the input.
  bool verified = false;
};

/// dual, Gale sew, dual back: rank and size both grow by two.
DoubleExtension primal_double_extension(const Chirotope& p, const GaleStep& step);

struct PipelineStage {
  std::string operation;
  int rank = 0;
  int size = 0;
};

struct PipelineResult {
  Chirotope result;
  std::vector<PipelineStage> stages;
};

/// From a neighborly rank-5 seed with a universal flag: sewing at rank 5,
/// double extensions up to the largest odd rank <= target_rank, then one
/// extension of the dual when target_rank is even.
PipelineResult nonrealizable_pipeline(const Chirotope& seed, int target_rank, int target_n);

}  // namespace neighborly
