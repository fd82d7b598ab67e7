#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/algebra.hpp"
#include "catkit/wcat.hpp"

using namespace catkit;
using namespace catkit::algebra;

TEST_CASE("triangle certifies the identity monad") {
  const TabMonad t = identity_tabmonad(2);
  CHECK(check_triangle(t, 2).ok());
  // Three objects: carriers 0, 1, 2.
  CHECK(enumerate_algebras(t, 2).cat.n_obj == 3);
}

TEST_CASE("triangle certifies the pointed-set monad") {
  const TabMonad t = tabulate(pointed_presentation(), 2, 8);
  CHECK(check_triangle(t, 2).ok());
}

TEST_CASE("triangle certifies the semilattice monad") {
  const TabMonad t = tabulate(semilattice_presentation(), 2, 8);
  CHECK(check_triangle(t, 2).ok());
  // Two two-element objects on both sides.
  const ModelCategory mc = enumerate_algebras(t, 2);
  int two = 0;
  for (const auto& o : mc.objects)
    if (o.carrier == 2) ++two;
  CHECK(two == 2);
}

TEST_CASE("triangle at the full fixture truncation") {
  const TabMonad t = tabulate(semilattice_presentation(), 3, 8);
  CHECK(check_triangle(t, 2).ok());
}
