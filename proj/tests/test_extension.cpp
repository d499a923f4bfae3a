#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "neighborly/extension.hpp"
#include "support.hpp"

using namespace neighborly;
using namespace test_support;

TEST_CASE("signature parsing") {
  const LexSignature sig = LexSignature::parse("0+,1-,2+");
  REQUIRE(sig.length() == 3);
  CHECK(sig[1].element == 1);
  CHECK(sig[1].sign == -1);
  CHECK(sig.to_string() == "0+,1-,2+");
  CHECK(LexSignature::parse("3\xE2\x88\x92, 4+") == LexSignature({{3, -1}, {4, 1}}));
  CHECK_THROWS_AS(LexSignature::parse("0+,0-"), std::invalid_argument);
  CHECK_THROWS_AS(LexSignature::parse("0*"), std::invalid_argument);
  CHECK_THROWS_AS(LexSignature::parse("0+,"), std::invalid_argument);
}

TEST_CASE("rank two example") {
  const Chirotope chi(3, 2, {1, -1, 1});
  const LexSignature sig({{0, 1}, {1, 1}});
  const Chirotope ext = lex_extend(chi, sig).extended;
  CHECK(ext.eval({3, 0}) == -1);
  CHECK(ext.eval({3, 1}) == 1);
  CHECK(ext.eval({3, 2}) == -1);
  const std::vector<Sign> sigma = signature_of_extension(chi, sig);
  REQUIRE(sigma.size() == 3);
  // Stored representative for H = {0} is (0, +, -); the first nonzero a_i is 1.
  CHECK(sigma[0] == 1);
}

TEST_CASE("full-length signatures only") {
  const Chirotope chi = Chirotope::alternating(5, 3);
  CHECK_THROWS_AS(lex_extend(chi, LexSignature({{0, 1}, {1, 1}})), std::invalid_argument);
  CHECK_THROWS_AS(lex_extend(chi, LexSignature({{0, 1}, {1, 1}, {7, 1}})), std::invalid_argument);
}

TEST_CASE("random extensions") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const int r = 1 + static_cast<int>(rng() % (n - 1));
    const Chirotope chi = random_chirotope(n, r, rng);
    const LexSignature sig = random_signature(n, r, rng);
    const Chirotope ext = lex_extend(chi, sig).extended;
    CAPTURE(chi.sign_string());
    CAPTURE(sig.to_string());

    CHECK(validate(ext).ok);
    CHECK(deletion(ext, singleton(n)) == chi);

    // Oracle: the cocircuit of the extension over each old hyperplane takes
    // the value sigma(C_H) at the new element.
    const std::vector<Sign> sigma = signature_of_extension(chi, sig);
    std::size_t idx = 0;
    for_each_subset(n, r - 1, [&](ElementSet h) {
      const SignedSet raw = cocircuit_of(chi, h);
      const int orient = contains(raw.plus, lowest_element(raw.support())) ? 1 : -1;
      CHECK(sigma[idx] != 0);
      CHECK(ext.eval_hyperplane(h, n) == orient * sigma[idx]);
      ++idx;
    });

    if (r < n) CHECK(inseparability(ext, n, sig[0].element) == std::optional<int>(-sig[0].sign));
  }
}

TEST_CASE("contraction identities") {
  SUBCASE("all-plus rank 3 example") {
    const IdentityReport report =
        contraction_identities_check(Chirotope::alternating(5, 3), LexSignature::parse("0+,1-,2+"));
    CHECK(report.ok());
    CHECK(report.failures().empty());
  }
  SUBCASE("random instances") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      const int n = 4 + static_cast<int>(rng() % 5);
      const int r = 2 + static_cast<int>(rng() % (n - 2));
      const Chirotope chi = random_chirotope(n, r, rng);
      const LexSignature sig = random_signature(n, r, rng);
      const IdentityReport report = contraction_identities_check(chi, sig);
      CAPTURE(sig.to_string());
      for (const auto& name : report.failures()) CAPTURE(name);
      CHECK(report.ok());
    }
  }
}
