#include <doctest.h>

#include "monomial.hpp"
#include "support.hpp"

using namespace midr;
using namespace midr::testing;

TEST_CASE("multiply adds exponent vectors") {
  CHECK(multiply(mono2(1, 1, 0, 1), mono2(0, 1, 1, 1)) == mono2(1, 1, 1, 1));
  CHECK(multiply(mono2(1, 2, 1, 2), mono2(1, 2, 1, 2)) == mono2(1, 1, 1, 1));
  Monomial f = mono2(3, 4, 7, 5);
  CHECK(multiply(f, Monomial::identity(2)) == f);
  CHECK_THROWS_AS(multiply(f, Monomial::identity(3)), dim_error);
}

TEST_CASE("divisibility is the coordinatewise order") {
  CHECK(divides(mono2(1, 1, 2, 1), mono2(2, 1, 2, 1)));
  CHECK_FALSE(divides(mono2(1, 1, 2, 1), mono2(2, 1, 1, 1)));
  CHECK(divides(Monomial::identity(2), mono2(17, 3, 0, 1)));
  CHECK_THROWS_AS(divides(Monomial::identity(2), Monomial::identity(1)),
                  dim_error);
}

TEST_CASE("lcm is the coordinatewise maximum") {
  // max{2, 5/3} = 2 and max{3/2, 1} = 3/2
  Monomial fs[] = {mono2(2, 1, 3, 2), mono2(5, 3, 1, 1)};
  CHECK(lcm(fs) == mono2(2, 1, 3, 2));
  Monomial same[] = {fs[0], fs[0]};
  CHECK(lcm(same) == fs[0]);
  Monomial axes[] = {mono2(1, 1, 0, 1), mono2(0, 1, 1, 1)};
  CHECK(lcm(axes) == mono2(1, 1, 1, 1));
  CHECK_THROWS_AS(lcm(std::span<const Monomial>{}), value_error);
  Monomial mixed[] = {Monomial::identity(2), Monomial::identity(3)};
  CHECK_THROWS_AS(lcm(mixed), dim_error);
}

TEST_CASE("monomials reject negative exponents") {
  CHECK_THROWS_AS(Monomial({rat(1), rat(-1, 2)}), value_error);
}

TEST_CASE("lcm and divisibility laws") {
  Rng rng(21);
  for (int n = 0; n < 200; ++n) {
    std::size_t dim = static_cast<std::size_t>(rng.pick(1, 4));
    Monomial f = rng.monomial(dim), g = rng.monomial(dim), h = rng.monomial(dim);

    Monomial fg[] = {f, g};
    Monomial m = lcm(fg);
    CHECK(divides(f, m));
    CHECK(divides(g, m));

    // least upper bound: any common multiple is a multiple of the lcm
    Monomial cm = multiply(m, h);
    CHECK(divides(m, cm));

    // divides(f, g) exactly when g = f * (g - f)
    if (divides(f, g)) {
      std::vector<Rational> diff;
      for (std::size_t i = 0; i < dim; ++i) diff.push_back(g[i] - f[i]);
      CHECK(multiply(f, Monomial(diff)) == g);
    }

    Monomial gf[] = {g, f};
    CHECK(lcm(gf) == m);  // commutative
    Monomial fgh1[] = {f, g, h};
    Monomial gh[] = {g, h};
    Monomial fgh2[] = {f, lcm(gh)};
    CHECK(lcm(fgh1) == lcm(fgh2));  // associative
    Monomial mm[] = {m, m};
    CHECK(lcm(mm) == m);  // idempotent
  }
}
