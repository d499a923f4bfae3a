#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neighborly/constructions.hpp"
#include "neighborly/realization.hpp"
#include "support.hpp"

using namespace neighborly;
using namespace test_support;

namespace {

PointConfig polygon_config(const std::vector<std::pair<int, int>>& pts) {
  std::vector<RationalVector> affine;
  for (auto [x, y] : pts) affine.push_back({Rational(x), Rational(y)});
  return PointConfig::from_affine(affine);
}

PointConfig pentagon() { return polygon_config({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}); }

PointConfig with_point(PointConfig cfg, const LexSignature& sig, const Rational& eps) {
  RationalVector v(cfg.rank(), Rational(0));
  Rational scale = 1;
  for (int i = 0; i < sig.length(); ++i) {
    for (int k = 0; k < cfg.rank(); ++k) v[k] += scale * sig[i].sign * cfg.points[sig[i].element][k];
    scale *= eps;
  }
  cfg.points.push_back(v);
  return cfg;
}

std::vector<ElementSet> sorted(std::vector<ElementSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Rational cell_volume_sum(const PointConfig& cfg, const Subdivision& s) {
  Rational total = 0;
  for (ElementSet c : s.cells) total += normalized_volume(cfg, c);
  return total;
}

}  // namespace

TEST_CASE("moment curve chirotopes are all plus") {
  for (int rank = 1; rank <= 7; ++rank)
    for (int n = rank; n <= 10; ++n) {
      const Chirotope c = chirotope_of_points(moment_curve(n, rank));
      CHECK(std::all_of(c.signs().begin(), c.signs().end(), [](Sign s) { return s == 1; }));
    }
}

TEST_CASE("determinants") {
  CHECK(determinant({{2, 1}, {1, 1}}) == 1);
  CHECK(determinant({{0, 1}, {1, 0}}) == -1);
  CHECK(determinant({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
  CHECK(determinant_sign({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
  PointConfig degenerate = polygon_config({{0, 0}, {1, 1}, {2, 2}});
  CHECK_THROWS_AS(chirotope_of_points(degenerate), std::invalid_argument);
}

TEST_CASE("realized extensions commute with lex_extend") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const int rank = 2 + static_cast<int>(rng() % 4);
    const int n = rank + 1 + static_cast<int>(rng() % (8 - rank));
    const PointConfig cfg = trial % 2 ? random_general_vectors(n, rank, rng)
                                      : (rank >= 3 ? random_convex_config(n, rank - 1, rng)
                                                   : random_general_vectors(n, rank, rng));
    const LexSignature sig = random_signature(n, rank, rng);
    CAPTURE(sig.to_string());
    const RealizedExtension r = realize_lex_extension(cfg, sig);
    const Chirotope expected = lex_extend_chirotope(chirotope_of_points(cfg), sig);
    CHECK(chirotope_of_points(r.config) == expected);
    // Agreement persists at half the epsilon.
    CHECK(chirotope_of_points(with_point(cfg, sig, r.epsilon / 2)) == expected);
    CHECK(inseparability(expected, n, sig[0].element) == std::optional<int>(-sig[0].sign));
  }
}

TEST_CASE("realized cyclic dual extension") {
  const PointConfig gale = gale_dual_config(moment_curve(5, 3));
  const Chirotope m = chirotope_of_points(gale);
  CHECK(m.same_oriented_matroid(dual(moment_polytope(5, 2))));
  const Chirotope ext = cyclic_dual_extend(m);
  const RealizedExtension r = realize_lex_extension(gale, LexSignature::parse("4-,3-"));
  CHECK(chirotope_of_points(r.config) == ext);
  CHECK(dual(ext).same_oriented_matroid(moment_polytope(6, 3)));
}

TEST_CASE("lexicographic subdivisions of small polygons") {
  const PointConfig pent = pentagon();
  const Subdivision fig = lex_subdivision(pent, LexSignature::parse("0+,3-"));
  CHECK(sorted(fig.cells) == sorted({make_set({0, 1, 4}), make_set({1, 2, 3}), make_set({1, 3, 4})}));

  const Subdivision pulled = lex_subdivision(pent, LexSignature::parse("2-"));
  CHECK(pulled.cells.size() == 3);
  for (ElementSet c : pulled.cells) CHECK(contains(c, 2));

  const PointConfig square = polygon_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  const Subdivision pushed = lex_subdivision(square, LexSignature::parse("0+"));
  CHECK(sorted(pushed.cells) == sorted({make_set({0, 1, 3}), make_set({1, 2, 3})}));
  // Pushing alone leaves the rest unsubdivided.
  const PointConfig hex = polygon_config({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}});
  const Subdivision hp = lex_subdivision(hex, LexSignature::parse("0+"));
  CHECK(hp.cells.size() == 2);
  CHECK(std::find(hp.cells.begin(), hp.cells.end(), make_set({1, 2, 3, 4, 5})) != hp.cells.end());

  CHECK_THROWS_AS(lex_subdivision(pent, LexSignature::parse("7+")), std::invalid_argument);
  const PointConfig inner = polygon_config({{0, 0}, {4, 0}, {1, 1}, {0, 4}});
  CHECK_THROWS_AS(lex_subdivision(inner, LexSignature::parse("2+")), std::invalid_argument);
}

TEST_CASE("volumes") {
  const PointConfig square = polygon_config({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(normalized_volume(square, full_set(4)) == 2);
  CHECK(normalized_volume(square, make_set({0, 1, 2})) == 1);
  std::vector<RationalVector> cube;
  for (int i = 0; i < 8; ++i) cube.push_back({Rational(i & 1), Rational((i >> 1) & 1), Rational((i >> 2) & 1)});
  CHECK(normalized_volume(PointConfig::from_affine(cube), full_set(8)) == 6);
}

TEST_CASE("subdivisions cover the hull") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const int n = d + 2 + static_cast<int>(rng() % (7 - d));
    const PointConfig cfg = random_convex_config(n, d, rng);
    const int k = 1 + static_cast<int>(rng() % n);
    const LexSignature sig = random_signature(n, k, rng);
    const Subdivision s = lex_subdivision(cfg, sig);
    CAPTURE(sig.to_string());
    CHECK(cell_volume_sum(cfg, s) == normalized_volume(cfg, full_set(n)));
    if (k == n)
      for (ElementSet c : s.cells) CHECK(cardinality(c) == d + 1);
  }
}

TEST_CASE("lifted subdivisions agree with the recursive construction") {
  const PointConfig pent = pentagon();
  const LexSignature ext = LexSignature::parse("0-,3+");
  const LiftedSubdivision lifted = lift_and_lower_faces(pent, ext);
  CHECK(sorted(lifted.lower.cells) == sorted(lex_subdivision(pent, LexSignature::parse("0+,3-")).cells));
  CHECK(sorted(lifted.apex_facets) == sorted(hull_facets(pent, full_set(5))));

  std::mt19937_64 rng(43);
  const PointConfig hex = polygon_config({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}});
  for (int trial = 0; trial < 50; ++trial) {
    const LexSignature sig = random_signature(6, 6, rng);
    CAPTURE(sig.to_string());
    CHECK(sorted(lift_and_lower_faces(hex, sig).lower.cells) ==
          sorted(lex_subdivision(hex, sig.reversed_signs()).cells));
  }
  for (int trial = 0; trial < 60; ++trial) {
    const int d = 2 + static_cast<int>(rng() % 2);
    const int n = d + 2 + static_cast<int>(rng() % (7 - d));
    const PointConfig cfg = random_convex_config(n, d, rng);
    const LexSignature sig = random_signature(n, 1 + static_cast<int>(rng() % n), rng);
    CAPTURE(sig.to_string());
    const LiftedSubdivision l = lift_and_lower_faces(cfg, sig);
    CHECK(sorted(l.lower.cells) == sorted(lex_subdivision(cfg, sig.reversed_signs()).cells));
    CHECK(sorted(l.apex_facets) == sorted(hull_facets(cfg, full_set(n))));
  }
}

TEST_CASE("random configurations") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    const PointConfig cfg = random_convex_config(7, d, rng);
    CHECK(cfg.rank() == d + 1);
    CHECK(hull_facets(cfg, full_set(7)).size() == facets(chirotope_of_points(cfg)).facets.size());
    for (int v = 0; v < 7; ++v) CHECK(is_face(chirotope_of_points(cfg), singleton(v)));
    const RationalVector s = random_sphere_point(d, rng);
    Rational norm = 0;
    for (const Rational& x : s) norm += x * x;
    CHECK(norm == 1);
  }
}
