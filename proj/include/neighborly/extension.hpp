#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "neighborly/chirotope.hpp"

namespace neighborly {

struct LexEntry {
  int element = 0;
  Sign sign = 1;
  bool operator==(const LexEntry&) const = default;
};

/// Ordered signature [a_1^{s_1}, ..., a_k^{s_k}] of a lexicographic extension.
class LexSignature {
 public:
  LexSignature() = default;
  explicit LexSignature(std::vector<LexEntry> entries);

  /// Parses "0+,1-,2+" (a Unicode minus sign is accepted too).
  static LexSignature parse(std::string_view text);

  const std::vector<LexEntry>& entries() const { return entries_; }
  int length() const { return static_cast<int>(entries_.size()); }
  const LexEntry& operator[](int i) const { return entries_[i]; }
  ElementSet elements() const;

  /// First `k` entries.
  LexSignature truncated(int k) const;
  /// Every sign flipped.
  LexSignature reversed_signs() const;
  std::string to_string() const;

  bool operator==(const LexSignature&) const = default;

 private:
  std::vector<LexEntry> entries_;
};

struct ExtensionResult {
  /// Chirotope on n+1 elements; the new element has label n.
  Chirotope extended;
  Chirotope base;
  LexSignature signature;
};

/// Lexicographic extension by a full-length signature (k = rank). The new
/// element p satisfies chi(p, B) = s_i chi(a_i, B) for the first a_i not in B.
ExtensionResult lex_extend(const Chirotope& chi, const LexSignature& sig);

/// Same as lex_extend but returns only the extended chirotope.
Chirotope lex_extend_chirotope(const Chirotope& chi, const LexSignature& sig);

/// Cocircuit signature of the extension, computed from the cocircuits of chi:
/// sigma(C) = s_i C(a_i) for the first i with C(a_i) != 0, else 0.
/// Values follow the order and representatives of cocircuits(chi).
std::vector<Sign> signature_of_extension(const Chirotope& chi, const LexSignature& sig);

struct IdentityCheck {
  std::string name;
  bool ok = true;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool ok() const;
  std::vector<std::string> failures() const;
};

/// Verifies the contraction formulas for lexicographic extensions: the
/// contraction by the new element (with a_1 playing the new element), by each
/// a_i, by each element outside the signature, and the deletion/contraction
/// exchange between the new element and a_1.
IdentityReport contraction_identities_check(const Chirotope& chi, const LexSignature& sig);

/// Maps a signature through a minor's relabeling, dropping elements not in it.
LexSignature restrict_signature(const LexSignature& sig, const std::vector<int>& survivors);

}  // namespace neighborly
