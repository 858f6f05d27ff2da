#include "braidlef/braid.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace braidlef;

namespace {
FreeWord a_gen(int n, int i, long long e = 1) {
  return FreeWord::generator(n, Basis::a, i, e);
}
}  // namespace

TEST_CASE("braid parsing follows the CLI grammar") {
  const BraidWord b = parse_braid("1 -2", 3);
  CHECK(b.letters == std::vector<int>{1, -2});
  CHECK(braid_str(b) == "1 -2");
  CHECK(parse_braid("", 4).letters.empty());
  CHECK_THROWS_AS(parse_braid("0", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("3", 3), ParseError);
  CHECK_THROWS_AS(parse_braid("1 x", 3), ParseError);
}

TEST_CASE("defining relations hold through the action") {
  for (int n = 4; n <= 6; ++n) {
    // Far commutation sigma_i sigma_j = sigma_j sigma_i, |i-j| >= 2.
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        const BraidWord si = parse_braid(std::to_string(i), n);
        const BraidWord sj = parse_braid(std::to_string(j), n);
        CHECK(equal_via_action(compose(si, sj), compose(sj, si)));
      }
    // Braid relation sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}.
    for (int i = 1; i <= n - 2; ++i) {
      const std::string s = std::to_string(i), t = std::to_string(i + 1);
      CHECK(equal_via_action(parse_braid(s + " " + t + " " + s, n),
                             parse_braid(t + " " + s + " " + t, n)));
    }
  }
}

TEST_CASE("composition acts left to right") {
  std::mt19937 rng(90125);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    const BraidWord b1 = testutil::random_braid(rng, n, 5);
    const BraidWord b2 = testutil::random_braid(rng, n, 5);
    const FreeWord w = testutil::random_word(
        rng, n, trial % 2 ? Basis::a : Basis::xi, 5, 2);
    CHECK(act(compose(b1, b2), w) == act(b2, act(b1, w)));
    CHECK(act(inverse(b1), act(b1, w)) == w);
  }
}

TEST_CASE("the boundary word a_n is fixed") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 4;
    const BraidWord b = testutil::random_braid(rng, n, 8);
    CHECK(act(b, a_gen(n, n)) == a_gen(n, n));
  }
}

TEST_CASE("rho shifts the a-basis") {
  // a_i^rho = a_{i+1} a_1^{-1} for 1 <= i <= n-1, and a_n^rho = a_n.
  for (int n = 3; n <= 6; ++n) {
    const BraidWord r = rho(n);
    for (int i = 1; i <= n - 1; ++i)
      CHECK(act(r, a_gen(n, i)) == a_gen(n, i + 1) * a_gen(n, 1, -1));
    CHECK(act(r, a_gen(n, n)) == a_gen(n, n));
  }
}

TEST_CASE("rho conjugates the generators along the cycle") {
  // sigma_i rho = rho sigma_{i+1} for 1 <= i <= n-2.
  for (int n = 3; n <= 6; ++n)
    for (int i = 1; i <= n - 2; ++i) {
      const BraidWord si = parse_braid(std::to_string(i), n);
      const BraidWord sj = parse_braid(std::to_string(i + 1), n);
      CHECK(equal_via_action(compose(si, rho(n)), compose(rho(n), sj)));
    }
}

TEST_CASE("full twist identities") {
  for (int n = 3; n <= 6; ++n) {
    const BraidWord th = theta(n);
    CHECK(equal_via_action(power(rho(n), n), th));
    const BraidWord s1rho = compose(parse_braid("1", n), rho(n));
    CHECK(equal_via_action(power(s1rho, n - 1), th));
    // Centrality, sampled.
    std::mt19937 rng(511 + n);
    for (int trial = 0; trial < 10; ++trial) {
      const BraidWord b = testutil::random_braid(rng, n, 6);
      CHECK(equal_via_action(compose(th, b), compose(b, th)));
    }
  }
}

TEST_CASE("beta words") {
  CHECK(beta_atom(4, 3).letters == std::vector<int>{1, 1, 1, 1, 2, 1});
  CHECK(beta_seq({2, 1}, 3).letters == std::vector<int>{1, 1, 2, 1, 1, 2, 1});
  CHECK_THROWS_AS(beta_atom(0, 3), UsageError);
}

TEST_CASE("images of the a-basis under beta(m)") {
  // a_1^beta(m) is conjugate to a_3 a_2^-1 (m odd) or a_2 a_1^-1 (m even)
  // by (a_3 a_1^-1)^floor(m/2); a_i^beta(m) = a_{i+1} a_1^-1 for i >= 2.
  for (int n = 3; n <= 5; ++n)
    for (long long m = 1; m <= 6; ++m) {
      const BraidWord bm = beta_atom(m, n);
      const FreeWord c = (a_gen(n, 3) * a_gen(n, 1, -1)).pow(m / 2);
      const FreeWord core = m % 2 ? a_gen(n, 3) * a_gen(n, 2, -1)
                                  : a_gen(n, 2) * a_gen(n, 1, -1);
      CHECK(act(bm, a_gen(n, 1)) == c * core * c.inverse());
      for (int i = 2; i <= n - 1; ++i)
        CHECK(act(bm, a_gen(n, i)) == a_gen(n, i + 1) * a_gen(n, 1, -1));
      CHECK(act(bm, a_gen(n, n)) == a_gen(n, n));
    }
}

TEST_CASE("induced permutations") {
  for (int n = 3; n <= 7; ++n) {
    const std::vector<int> p = induced_permutation(rho(n));
    for (int i = 1; i <= n; ++i) CHECK(p[i - 1] == i % n + 1);
  }
  // Compatible with composition.
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 3;
    const BraidWord b1 = testutil::random_braid(rng, n, 6);
    const BraidWord b2 = testutil::random_braid(rng, n, 6);
    const auto p1 = induced_permutation(b1);
    const auto p2 = induced_permutation(b2);
    const auto p12 = induced_permutation(compose(b1, b2));
    for (int i = 1; i <= n; ++i) CHECK(p12[i - 1] == p2[p1[i - 1] - 1]);
  }
}

TEST_CASE("equal_via_action distinguishes unequal braids") {
  CHECK_FALSE(equal_via_action(parse_braid("1", 3), parse_braid("2", 3)));
  CHECK_FALSE(equal_via_action(parse_braid("1", 3), parse_braid("-1", 3)));
  CHECK(equal_via_action(parse_braid("1 -1", 3), parse_braid("", 3)));
}
