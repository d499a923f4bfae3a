#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "neighborly/chirotope.hpp"

namespace neighborly {

/// Facets of an acyclic chirotope, each the zero set of a nonnegative cocircuit.
struct FacetList {
  int n = 0;
  /// Ascending numeric (colex) order.
  std::vector<ElementSet> facets;
  bool operator==(const FacetList&) const = default;
};

enum class FaceRole : std::uint8_t { universal, split, extra };

/// Strictly nested chain of faces with per-face annotations.
struct Flag {
  std::vector<ElementSet> faces;
  std::vector<FaceRole> roles;

  /// Parses "0,1 < 0,1,2,3"; roles default to `extra` until annotated.
  static Flag parse(const std::string& text);
  std::string to_string() const;
  bool operator==(const Flag&) const = default;
};

bool is_acyclic(const Chirotope& chi);

/// R is a face iff the contraction chi / R is acyclic. Requires |R| < rank.
bool is_face(const Chirotope& chi, ElementSet subset);

FacetList facets(const Chirotope& chi);

struct Classification {
  bool acyclic = false;
  bool neighborly = false;
  bool balanced = false;
  int discrepancy = 0;
};

Classification classify(const Chirotope& chi);
bool is_neighborly(const Chirotope& chi);
bool is_balanced(const Chirotope& chi);
int discrepancy(const Chirotope& chi);

/// Faces F of the given size whose contraction chi / F is neighborly.
std::vector<ElementSet> universal_faces(const Chirotope& chi, int size);
bool is_universal_face(const Chirotope& chi, ElementSet face);

/// All chains T_1 < ... < T_m (|T_j| = 2j, m = floor((r-1)/2)) of universal
/// faces. Every face of a returned flag is annotated universal.
std::vector<Flag> universal_flags(const Chirotope& chi);

/// Canonical form of a vertex-facet incidence system up to vertex relabeling.
struct CombType {
  int n = 0;
  /// Relabeled facets, each encoded as its ascending label tuple packed
  /// 5 bits per label (label + 1, most significant first), sorted ascending.
  std::vector<std::uint64_t> canonical;
  std::uint64_t automorphisms = 0;

  bool operator==(const CombType& o) const { return n == o.n && canonical == o.canonical; }
  bool operator<(const CombType& o) const {
    return n != o.n ? n < o.n : canonical < o.canonical;
  }
  FacetList facet_list() const;
  /// One facet per line, labels ascending and space separated, lines sorted.
  std::string text() const;
};

/// Lexicographic minimum of the packed facet list over the leaves of an
/// individualization/refinement search tree on the vertex-facet incidences.
CombType canonical_type(const FacetList& fl);

/// One facet per line, labels ascending and space separated, lines sorted.
std::string face_lattice_text(const FacetList& fl);
FacetList parse_face_lattice(const std::string& text, int n);

struct CombTypeHash {
  std::size_t operator()(const CombType& t) const noexcept;
};

}  // namespace neighborly
