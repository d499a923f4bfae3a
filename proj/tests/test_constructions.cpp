#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "neighborly/constructions.hpp"
#include "support.hpp"

using namespace neighborly;
using namespace test_support;

namespace {

PointConfig polygon_config(const std::vector<std::pair<int, int>>& pts) {
  std::vector<RationalVector> affine;
  for (auto [x, y] : pts) affine.push_back({Rational(x), Rational(y)});
  return PointConfig::from_affine(affine);
}

CombType type_of(const Chirotope& chi) { return canonical_type(facets(chi)); }

bool alternates(const SignedSet& x) {
  const std::vector<int> s = elements_of(x.support());
  for (std::size_t i = 1; i < s.size(); ++i)
    if (x(s[i]) == x(s[i - 1])) return false;
  return true;
}

}  // namespace

TEST_CASE("stc") {
  for (int r = 1; r <= 6; ++r) {
    const Chirotope s = stc(r);
    CHECK(s.size() == r + 1);
    CHECK(s.rank() == r);
    CHECK(validate(s).ok);
    CHECK(is_balanced(s));
  }
  CHECK_THROWS_AS(stc(0), std::invalid_argument);
}

TEST_CASE("cyclic polytope matches the moment curve") {
  for (int d = 2; d <= 6; ++d)
    for (int n = d + 1; n <= 9; ++n)
      CHECK(cyclic_polytope(n, d).same_oriented_matroid(moment_polytope(n, d)));
}

TEST_CASE("sewing small examples") {
  const Chirotope pent = chirotope_of_points(polygon_config({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}));
  const Chirotope hex = chirotope_of_points(polygon_config({{2, 0}, {4, 1}, {4, 3}, {2, 4}, {0, 3}, {0, 1}}));
  for (int i = 0; i < 5; ++i) {
    const Flag flag{{singleton(i), make_set({i, (i + 1) % 5})}, {}};
    CHECK(type_of(sew(pent, flag).extended) == type_of(hex));
  }
  CHECK_THROWS_AS(sew(pent, Flag::parse("0,2")), std::invalid_argument);

  const Chirotope c64 = cyclic_polytope(6, 4);
  const CombType c74 = type_of(moment_polytope(7, 4));
  for (const Flag& f : universal_flags(c64)) {
    const Chirotope sewn = sew(c64, f).extended;
    CHECK(is_neighborly(sewn));
    CHECK(type_of(sewn) == c74);
  }
}

TEST_CASE("sewing signature layout") {
  const Chirotope c = cyclic_polytope(8, 4);
  CHECK(sewing_signature(c, Flag::parse("0,1 < 0,1,2,3")).to_string() == "0+,1+,2-,3-,4+");
  CHECK(sewing_signature(c, Flag::parse("2 < 1,2 < 1,2,5")).to_string() == "2+,1-,5+,0-,3-");
}

TEST_CASE("sewing through universal subflags keeps neighborliness") {
  std::mt19937_64 rng(31);
  int cases = 0;
  while (cases < 200) {
    const int rank = 3 + static_cast<int>(rng() % 4);
    const int n = rank + 1 + static_cast<int>(rng() % std::max(1, 9 - rank));
    const Chirotope p = random_neighborly(rank, n, rng);
    const Flag flag = random_flag_with_universal_subflag(p, rng);
    REQUIRE(analyze_flag(p, flag).has_universal_subflag);
    CAPTURE(flag.to_string());
    CHECK(classify(sew(p, flag).extended).neighborly);
    ++cases;
  }
}

TEST_CASE("sewing without a universal subflag breaks neighborliness in odd rank") {
  std::mt19937_64 rng(32);
  int cases = 0;
  int attempts = 0;
  while (cases < 60 && attempts < 5000) {
    ++attempts;
    const int rank = rng() % 2 ? 3 : 5;
    const int n = rank + 2 + static_cast<int>(rng() % (rank == 3 ? 5 : 3));
    const Chirotope p = random_neighborly(rank, n, rng);
    const Flag flag = random_flag_of_faces(p, rng);
    if (analyze_flag(p, flag).has_universal_subflag) continue;
    CAPTURE(flag.to_string());
    CHECK_FALSE(is_neighborly(sew(p, flag).extended));
    ++cases;
  }
  CHECK(cases == 60);
}

TEST_CASE("sewn element lies exactly beyond facets_beyond") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 120; ++trial) {
    const int rank = 3 + static_cast<int>(rng() % 3);
    const int n = rank + 1 + static_cast<int>(rng() % 4);
    const Chirotope p = trial % 2 ? random_neighborly(rank, n, rng)
                                  : chirotope_of_points(random_convex_config(n, rank - 1, rng));
    if (!is_acyclic(p)) continue;
    const Flag flag = random_flag_of_faces(p, rng);
    const Chirotope sewn = sew(p, flag).extended;
    const std::vector<ElementSet> beyond = facets_beyond(p, flag);
    CAPTURE(flag.to_string());
    for (ElementSet f : facets(p).facets) {
      SignedSet c = cocircuit_of(sewn, f);
      if (c.minus & p.ground()) c = c.negated();
      REQUIRE((c.minus & p.ground()) == 0);
      const bool is_beyond = std::find(beyond.begin(), beyond.end(), f) != beyond.end();
      CHECK(c(n) == (is_beyond ? -1 : 1));
    }
  }
  const Chirotope c = cyclic_polytope(7, 4);
  const Flag one = Flag::parse("0,1");
  std::vector<ElementSet> containing;
  for (ElementSet f : facets(c).facets)
    if ((f & make_set({0, 1})) == make_set({0, 1})) containing.push_back(f);
  CHECK(facets_beyond(c, one) == containing);
}

TEST_CASE("flag analysis") {
  const Chirotope c = cyclic_polytope(7, 4);
  const FlagStructure a = analyze_flag(c, Flag::parse("0 < 0,1 < 0,1,2,3"));
  REQUIRE(a.has_universal_subflag);
  CHECK(a.split == std::vector<bool>{true, false});
  CHECK(a.x == std::vector<int>{0, 2});
  CHECK(a.y == std::vector<int>{1, 3});
  CHECK(a.annotated.roles ==
        std::vector<FaceRole>{FaceRole::split, FaceRole::universal, FaceRole::universal});
  const FlagStructure b = analyze_flag(c, Flag::parse("0,1 < 0,1,3 < 0,1,2,3"));
  REQUIRE(b.has_universal_subflag);
  CHECK(b.split == std::vector<bool>{false, true});
  CHECK(b.x == std::vector<int>{0, 3});
  CHECK_FALSE(analyze_flag(c, Flag::parse("0,2 < 0,1,2,3")).has_universal_subflag);
  CHECK_FALSE(analyze_flag(c, Flag::parse("0,1")).has_universal_subflag);
}

TEST_CASE("universal faces of the rank five example") {
  // Columns: ab, pb, ap, abcd, pbcd, apcd, abpd, abcp with a,b,c,d = 0,1,2,3.
  const Chirotope c = cyclic_polytope(7, 4);
  const int p = 7;
  const std::vector<ElementSet> columns{
      make_set({0, 1}),       make_set({p, 1}),       make_set({0, p}),       make_set({0, 1, 2, 3}),
      make_set({p, 1, 2, 3}), make_set({0, p, 2, 3}), make_set({0, 1, p, 3}), make_set({0, 1, 2, p})};
  const std::vector<std::pair<std::string, std::vector<bool>>> rows{
      {"0,1 < 0,1,2,3", {false, true, true, true, false, false, true, true}},
      {"0 < 0,1 < 0,1,2,3", {true, false, true, false, true, false, true, true}},
      {"0,1 < 0,1,2 < 0,1,2,3", {false, true, true, false, true, true, false, true}},
      {"0 < 0,1 < 0,1,2 < 0,1,2,3", {true, false, true, true, false, true, false, true}},
  };
  for (const auto& [text, expected] : rows) {
    CAPTURE(text);
    const Flag flag = Flag::parse(text);
    const Chirotope sewn = sew(c, flag).extended;
    for (std::size_t k = 0; k < columns.size(); ++k) {
      CAPTURE(format_set(columns[k]));
      CHECK(is_universal_face(sewn, columns[k]) == expected[k]);
    }
    const UniversalPropagation prop = propagate_universal(c, flag);
    CHECK(prop.ok());
    for (ElementSet f : prop.faces) {
      const auto it = std::find(columns.begin(), columns.end(), f);
      if (it != columns.end()) CHECK(expected[it - columns.begin()]);
    }
  }
}

TEST_CASE("universal edges through the new element") {
  const Chirotope c = cyclic_polytope(8, 4);
  const int p = 8;
  const UniversalPropagation unsplit = propagate_universal(c, Flag::parse("2,3 < 2,3,4,5"));
  for (ElementSet e : {make_set({2, p}), make_set({3, p})})
    CHECK(std::find(unsplit.faces.begin(), unsplit.faces.end(), e) != unsplit.faces.end());
  const UniversalPropagation split = propagate_universal(c, Flag::parse("3 < 2,3 < 2,3,4,5"));
  for (ElementSet e : {make_set({3, p}), make_set({2, 3})})
    CHECK(std::find(split.faces.begin(), split.faces.end(), e) != split.faces.end());
  CHECK(unsplit.ok());
  CHECK(split.ok());
}

TEST_CASE("universal propagation on random instances") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 60; ++trial) {
    const int rank = 3 + static_cast<int>(rng() % 5);
    const int n = rank + 1 + static_cast<int>(rng() % std::max(1, 9 - rank));
    const Chirotope p = random_neighborly(rank, n, rng);
    const Flag flag = random_flag_with_universal_subflag(p, rng);
    const UniversalPropagation prop = propagate_universal(p, flag);
    CAPTURE(flag.to_string());
    for (ElementSet f : prop.failures) CAPTURE(format_set(f));
    CHECK(prop.ok());
  }
}

TEST_CASE("gale sewing") {
  const Chirotope pent = chirotope_of_points(polygon_config({{0, 0}, {4, 0}, {5, 3}, {2, 5}, {-1, 3}}));
  std::mt19937_64 rng(35);
  for (int i = 0; i < 10; ++i) {
    const Chirotope g = gale_sew(stc(2), random_step(stc(2), rng));
    CHECK(g.size() == 5);
    CHECK(is_balanced(g));
    CHECK(type_of(dual(g)) == type_of(pent));
  }
  CHECK_THROWS_AS(gale_sew(Chirotope::alternating(6, 2), GaleStep{LexSignature::parse("0+,1+")}),
                  std::invalid_argument);
  CHECK(GaleStep{LexSignature::parse("2+,0-,1+")}.q_signature(5).to_string() == "5-,2-,0-");
}

TEST_CASE("gale sewing preserves discrepancy") {
  std::mt19937_64 rng(36);
  int cases = 0;
  while (cases < 500) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const int rank = 1 + static_cast<int>(rng() % (n - 1));
    Chirotope m = random_chirotope(n, rank, rng);
    if (!is_balanced(m)) {
      if (n - rank < 3) continue;
      m = random_balanced(rank, n, rng);
    }
    const Chirotope g = gale_sew(m, random_step(m, rng));
    CHECK(discrepancy(g) == discrepancy(m));
    CHECK(is_balanced(g));
    ++cases;
  }
}

TEST_CASE("gale sewing identities") {
  std::mt19937_64 rng(37);
  CHECK(gale_quotient_check(stc(3), GaleStep{LexSignature::parse("0+,1+,2+")}).ok());
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int rank = 2 + static_cast<int>(rng() % (n - 2));
    const Chirotope m = trial % 2 ? random_chirotope(n, rank, rng) : stc(rank);
    const GaleStep step = random_step(m, rng);
    CAPTURE(m.sign_string());
    CAPTURE(step.p_signature.to_string());
    const IdentityReport quotient = gale_quotient_check(m, step);
    for (const auto& name : quotient.failures()) CAPTURE(name);
    CHECK(quotient.ok());
    const IdentityReport order = gale_order_check(m, step);
    for (const auto& name : order.failures()) CAPTURE(name);
    CHECK(order.ok());
  }
}

TEST_CASE("deleting from a gale sewn dual") {
  std::mt19937_64 rng(38);
  std::map<GaleDeletionCase, int> seen;
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int rank = 2 + static_cast<int>(rng() % (n - 2));
    const Chirotope m = trial % 3 ? random_chirotope(n, rank, rng) : stc(rank);
    const GaleStep step = random_step(m, rng);
    const int e = static_cast<int>(rng() % (m.size() + 2));
    const GaleDeletionReport report = gale_deletion_check(m, step, e);
    CAPTURE(step.p_signature.to_string());
    CAPTURE(e);
    CHECK(report.ok);
    ++seen[report.which];
  }
  CHECK(seen.size() == 4);
}

TEST_CASE("cyclic dual extensions") {
  // dual(C(n, d)) has rank n - d - 1, which the extension keeps.
  for (auto [n0, d0] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {7, 2}}) {
    Chirotope m = dual(moment_polytope(n0, d0));
    for (int n = n0 + 1, d = d0 + 1; n <= 9; ++n, ++d) {
      CAPTURE(n);
      CAPTURE(d);
      m = cyclic_dual_extend(m);
      REQUIRE(m.size() == n);
      const Chirotope primal = dual(m);
      CHECK(type_of(primal) == type_of(moment_polytope(n, d)));
      CHECK(primal.same_oriented_matroid(moment_polytope(n, d)));
      for (const SignedSet& x : cocircuits(m)) CHECK(alternates(x));
    }
  }
}

TEST_CASE("primal double extensions") {
  const DoubleExtension c = primal_double_extension(cyclic_polytope(6, 4), GaleStep{LexSignature::parse("0+")});
  CHECK(c.result.rank() == 7);
  CHECK(c.result.size() == 8);
  CHECK(c.verified);
  CHECK(is_neighborly(c.result));

  std::mt19937_64 rng(39);
  for (int trial = 0; trial < 100; ++trial) {
    const int rank = 3 + static_cast<int>(rng() % 3);
    const int n = rank + 1 + static_cast<int>(rng() % 3);
    const Chirotope p = random_neighborly(rank, n, rng);
    const DoubleExtension ext = primal_double_extension(p, random_step(dual(p), rng));
    CHECK(ext.verified);
    CHECK(ext.result.rank() == rank + 2);
    CHECK(type_of(contraction(ext.result, make_set({n, n + 1}))) == type_of(p));
    if (rank % 2) CHECK(is_neighborly(ext.result));
  }
}

TEST_CASE("pipeline on the cyclic stand-in seed") {
  const Chirotope seed = cyclic_polytope(10, 4);
  for (int i = 0; i < 10; i += 2) {
    const Chirotope q = contraction(seed, make_set({i, i + 1}));
    CHECK(is_acyclic(q));
    CHECK(facets(q).facets.size() == 8);
  }
  CHECK(analyze_flag(seed, Flag::parse("0,1 < 0,1,2,3")).has_universal_subflag);

  const PipelineResult a = nonrealizable_pipeline(seed, 5, 11);
  CHECK(a.result.rank() == 5);
  CHECK(a.result.size() == 11);
  CHECK(is_neighborly(a.result));

  const PipelineResult b = nonrealizable_pipeline(seed, 7, 12);
  CHECK(b.result.rank() == 7);
  CHECK(b.result.size() == 12);
  CHECK(is_neighborly(b.result));

  const PipelineResult c = nonrealizable_pipeline(seed, 6, 11);
  CHECK(c.result.rank() == 6);
  CHECK(c.result.size() == 11);
  CHECK(is_neighborly(c.result));

  CHECK_THROWS_AS(nonrealizable_pipeline(seed, 5, 9), std::invalid_argument);
  CHECK_THROWS_AS(nonrealizable_pipeline(seed, 9, 12), std::invalid_argument);
  CHECK_THROWS_AS(nonrealizable_pipeline(cyclic_polytope(8, 3), 6, 12), std::invalid_argument);
}
