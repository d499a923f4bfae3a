#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "neighborly/chirotope.hpp"
#include "neighborly/extension.hpp"
#include "neighborly/constructions.hpp"
#include "neighborly/polytope.hpp"
#include "neighborly/realization.hpp"

namespace test_support {

using namespace neighborly;

inline Chirotope random_chirotope(int n, int r, std::mt19937_64& rng) {
  return chirotope_of_points(random_general_vectors(n, r, rng));
}

inline LexSignature random_signature(int n, int k, std::mt19937_64& rng) {
  std::vector<int> labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  std::shuffle(labels.begin(), labels.end(), rng);
  std::vector<LexEntry> entries;
  for (int i = 0; i < k; ++i) entries.push_back({labels[i], static_cast<Sign>(rng() % 2 ? 1 : -1)});
  return LexSignature(entries);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Cyclic polytope C(n, d) from the moment curve, as a rank d+1 chirotope.
inline Chirotope moment_polytope(int n, int d) { return chirotope_of_points(moment_curve(n, d + 1)); }

/// Rows of a basis of the kernel of V^T: a Gale dual vector configuration.
inline PointConfig gale_dual_config(const PointConfig& cfg) {
  const int n = cfg.size();
  const int r = cfg.rank();
  // Row-reduce the r x n matrix V^T.
  RationalMatrix a(r, RationalVector(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < r; ++j) a[j][i] = cfg.points[i][j];
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < n && row < r; ++col) {
    int p = row;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[row]);
    const Rational lead = a[row][col];
    for (auto& x : a[row]) x /= lead;
    for (int other = 0; other < r; ++other) {
      if (other == row || a[other][col] == 0) continue;
      const Rational f = a[other][col];
      for (int k = 0; k < n; ++k) a[other][k] -= f * a[row][k];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);
  PointConfig out;
  out.points.assign(n, RationalVector(free_cols.size(), Rational(0)));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    out.points[free_cols[k]][k] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) out.points[pivot_cols[i]][k] = -a[i][free_cols[k]];
  }
  return out;
}

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

// Universal flag of P, randomly enriched with split faces and, in even rank,
// a top face of size r-1.
inline Flag random_flag_with_universal_subflag(const Chirotope& p, std::mt19937_64& rng) {
  const Flag base = pick(universal_flags(p), rng);
  Flag out;
  ElementSet previous = 0;
  for (ElementSet t : base.faces) {
    if (rng() % 2) {
      const std::vector<int> fresh = elements_of(t & ~previous);
      out.faces.push_back(previous | singleton(pick(fresh, rng)));
    }
    out.faces.push_back(t);
    previous = t;
  }
  if (cardinality(previous) + 1 < p.rank() && rng() % 2) {
    std::vector<ElementSet> tops;
    for (int e : elements_of(p.ground() & ~previous))
      if (is_face(p, previous | singleton(e))) tops.push_back(previous | singleton(e));
    if (!tops.empty()) out.faces.push_back(pick(tops, rng));
  }
  return out;
}

// A chain of prefixes of a random facet; every member is a face.
inline Flag random_flag_of_faces(const Chirotope& p, std::mt19937_64& rng) {
  const ElementSet facet = pick(facets(p).facets, rng);
  std::vector<int> order = elements_of(facet);
  std::shuffle(order.begin(), order.end(), rng);
  Flag out;
  ElementSet acc = 0;
  for (int e : order) {
    acc |= singleton(e);
    if (rng() % 2) out.faces.push_back(acc);
  }
  if (out.faces.empty()) out.faces.push_back(singleton(order[0]));
  return out;
}

// Neighborly chirotope of the given rank and size, grown from a cyclic
// polytope (or simplex) by random sewings, then randomly relabeled.
inline Chirotope random_neighborly(int rank, int n, std::mt19937_64& rng) {
  const int start = rank + static_cast<int>(rng() % (n - rank + 1));
  Chirotope p = cyclic_polytope(start, rank - 1);
  while (p.size() < n) p = sew(p, random_flag_with_universal_subflag(p, rng)).extended;
  return relabel_reorient(p, random_permutation(n, rng));
}

inline Chirotope random_balanced(int rank, int n, std::mt19937_64& rng) {
  return dual(random_neighborly(n - rank, n, rng));
}

inline GaleStep random_step(const Chirotope& m, std::mt19937_64& rng) {
  return GaleStep{random_signature(m.size(), m.rank(), rng)};
}

}  // namespace test_support
