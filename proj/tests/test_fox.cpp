#include <vector>

#include "braidlef/braid.hpp"
#include "braidlef/errors.hpp"
#include "braidlef/fox.hpp"
#include "braidlef/freeword.hpp"
#include "braidlef/groupring.hpp"
#include "braidlef/lefschetz.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace braidlef;

namespace {

RingElem word_elem(int n, const char* text) {
  return RingElem::from_word(FreeWord::parse(text, n, Basis::a));
}

}  // namespace

TEST_CASE("fox derivative on short words") {
  const int n = 4;
  const FreeWord a1a2 = FreeWord::parse("a1 a2", n, Basis::a);
  CHECK(fox_derivative(a1a2, 1) == RingElem::one(n));
  CHECK(fox_derivative(a1a2, 2) == word_elem(n, "a1"));
  CHECK(fox_derivative(a1a2, 3).is_zero());

  const FreeWord a1inv = FreeWord::parse("a1^-1", n, Basis::a);
  CHECK(fox_derivative(a1inv, 1) == -word_elem(n, "a1^-1"));

  CHECK(fox_derivative(FreeWord::identity(n, Basis::a), 2).is_zero());

  RingElem cube = fox_derivative(FreeWord::parse("a2^3", n, Basis::a), 2);
  RingElem cube_expect = RingElem::one(n) + word_elem(n, "a2") + word_elem(n, "a2^2");
  CHECK(cube == cube_expect);

  RingElem anticube = fox_derivative(FreeWord::parse("a2^-3", n, Basis::a), 2);
  RingElem anticube_expect =
      -(word_elem(n, "a2^-1") + word_elem(n, "a2^-2") + word_elem(n, "a2^-3"));
  CHECK(anticube == anticube_expect);

  CHECK_THROWS_AS(fox_derivative(a1a2, 0), UsageError);
  CHECK_THROWS_AS(fox_derivative(a1a2, n + 1), UsageError);
}

TEST_CASE("fox derivative is linear over ring elements") {
  const int n = 4;
  std::mt19937 rng(411);
  for (int rep = 0; rep < 30; ++rep) {
    RingElem x = RingElem::from_word(testutil::random_word(rng, n, Basis::a, 5, 3));
    RingElem y = RingElem::from_word(testutil::random_word(rng, n, Basis::a, 5, 3), -2);
    for (int j = 1; j <= n; ++j)
      CHECK(fox_derivative(x + y, j) == fox_derivative(x, j) + fox_derivative(y, j));
  }
}

TEST_CASE("derivative of a conjugate splits into conjugator and core parts") {
  const int n = 4;
  std::mt19937 rng(412);
  for (int rep = 0; rep < 25; ++rep) {
    const FreeWord v = testutil::random_word(rng, n, Basis::a, 4, 3);
    const FreeWord w = testutil::random_word(rng, n, Basis::a, 4, 3);
    const FreeWord conj = v * w * v.inverse();
    for (int j = 1; j <= n; ++j) {
      const RingElem lhs = fox_derivative(conj, j);
      const RingElem rhs = (RingElem::one(n) - RingElem::from_word(conj)) *
                               fox_derivative(v, j) +
                           RingElem::from_word(v) * fox_derivative(w, j);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("derivatives recover the word through the augmentation identity") {
  // sum_j dw/da_j (a_j - e) = w - e for every word w.
  std::mt19937 rng(413);
  for (int n : {3, 5}) {
    for (int rep = 0; rep < 25; ++rep) {
      const Basis basis = rep % 2 == 0 ? Basis::a : Basis::xi;
      const FreeWord w = testutil::random_word(rng, n, basis, 5, 3);
      RingElem acc = RingElem::zero(n);
      for (int j = 1; j <= n; ++j) {
        const FreeWord aj = FreeWord::generator(n, Basis::a, j);
        acc += fox_derivative(w, j) *
               (RingElem::from_word(aj) - RingElem::one(n));
      }
      const RingElem expect =
          RingElem::from_word(w.to_basis(Basis::a)) - RingElem::one(n);
      CHECK(acc == expect);
    }
  }
}

TEST_CASE("jacobian last row is the unit vector of a_n") {
  std::mt19937 rng(414);
  for (int n : {3, 4}) {
    for (int rep = 0; rep < 10; ++rep) {
      const BraidWord b = testutil::random_braid(rng, n, 6);
      const RingMatrix J = jacobian(b);
      REQUIRE(J.dim == static_cast<std::size_t>(n));
      for (int j = 0; j < n - 1; ++j) CHECK(J.at(n - 1, j).is_zero());
      CHECK(J.at(n - 1, n - 1) == RingElem::one(n));
      // Reduced trace differs from the full trace by exactly that unit.
      CHECK(reduced_jacobian(b).trace() == J.trace() - RingElem::one(n));
    }
  }
}

TEST_CASE("reduced jacobian of the trivial braid and of the full twist") {
  for (int n : {3, 4, 5}) {
    CHECK(reduced_jacobian(BraidWord{n, {}}) ==
          RingMatrix::identity(n, static_cast<std::size_t>(n - 1)));

    const RingMatrix Jtheta = reduced_jacobian(theta(n));
    const RingElem an = RingElem::from_word(FreeWord::generator(n, Basis::a, n));
    for (std::size_t i = 0; i < Jtheta.dim; ++i)
      for (std::size_t j = 0; j < Jtheta.dim; ++j)
        CHECK(Jtheta.at(i, j) == (i == j ? an : RingElem::zero(n)));
  }
}

TEST_CASE("jacobian chain rule over random pairs") {
  std::mt19937 rng(415);
  for (int n : {3, 4}) {
    for (int rep = 0; rep < 8; ++rep) {
      const BraidWord b1 = testutil::random_braid(rng, n, 5);
      const BraidWord b2 = testutil::random_braid(rng, n, 5);
      const BraidWord both = compose(b1, b2);
      CHECK(jacobian(both) == mat_apply_aut(jacobian(b1), b2) * jacobian(b2));
      CHECK(reduced_jacobian(both) ==
            mat_apply_aut(reduced_jacobian(b1), b2) * reduced_jacobian(b2));
    }
  }
}

TEST_CASE("a central power scales the reduced jacobian by a power of a_n") {
  const int n = 4;
  std::mt19937 rng(416);
  for (long long mu : {-2LL, -1LL, 1LL, 2LL}) {
    const BraidWord b = testutil::random_braid(rng, n, 5);
    const RingMatrix lhs = reduced_jacobian(compose(power(theta(n), mu), b));
    RingMatrix scale = RingMatrix::zero(n, static_cast<std::size_t>(n - 1));
    const RingElem an_mu =
        RingElem::from_word(FreeWord::generator(n, Basis::a, n, mu));
    for (std::size_t i = 0; i < scale.dim; ++i) scale.at(i, i) = an_mu;
    CHECK(lhs == scale * reduced_jacobian(b));
  }
}

TEST_CASE("seed matrix layout") {
  const int n = 5;
  const RingMatrix A1 = lemma3_matrix(1, n);
  REQUIRE(A1.dim == 4);
  CHECK(A1.at(0, 0).is_zero());
  CHECK(A1.at(0, 1) == -word_elem(n, "a1"));
  CHECK(A1.at(0, 2) == RingElem::one(n));
  CHECK(A1.at(0, 3).is_zero());
  for (std::size_t i = 1; i < A1.dim; ++i) {
    CHECK(A1.at(i, 0) ==
          -RingElem::from_word(FreeWord::generator(n, Basis::a, static_cast<int>(i) + 1)));
    for (std::size_t j = 1; j < A1.dim; ++j)
      CHECK(A1.at(i, j) == (j == i + 1 ? RingElem::one(n) : RingElem::zero(n)));
  }

  const RingMatrix A4 = lemma3_matrix(4, n);
  const RingElem G4 = g_sum(2, 4, n);
  CHECK(A4.at(0, 0) == G4);
  CHECK(A4.at(0, 1) == -g_elem(4, n));
  CHECK(A4.at(0, 2) == -(G4 * word_elem(n, "a2^-1") + g_elem(3, n)));

  CHECK_THROWS_AS(lemma3_matrix(0, n), UsageError);
}

TEST_CASE("twisted seed matrix reproduces the reduced jacobian of an atom") {
  for (int n : {3, 4, 5}) {
    for (long long m = 1; m <= 6; ++m) {
      const BraidWord atom = beta_atom(m, n);
      CHECK(reduced_jacobian(atom) == mat_apply_aut(lemma3_matrix(m, n), atom));
    }
  }
}
