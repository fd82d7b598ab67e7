#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "catkit/lexprof.hpp"

using namespace catkit;
using namespace catkit::fincat;
using namespace catkit::lexprof;

namespace {
LexBasePtr C2 = make_lattice_base(chain_lattice(2), "chain2");
LexBasePtr C3 = make_lattice_base(chain_lattice(3), "chain3");
LexBasePtr DIA = make_lattice_base(diamond_lattice(), "diamond");
LexBasePtr T2 = make_trunc_base(2);

// non-lex diagnostic cell over chain2 with a 2-element value at (0,1)
LexProf1Cell fat_cell() {
  LexProf1Cell w;
  w.src = C2;
  w.dst = C2;
  w.name = "fat";
  w.value = {{0, 2}, {0, 0}};
  alloc_cell(w);
  w.lact[0][0][1][0] = {0, 1};  // identity actions
  w.ract[0][1][1][0] = {0, 1};
  return w;
}
}  // namespace

TEST_CASE("identity_prof matches the hom-sets and is lex") {
  LexProf1Cell i2 = identity_prof(C2);
  CHECK(i2.val(0, 1) == 1);
  CHECK(i2.val(1, 0) == 0);
  CHECK(check_prof(i2).ok());

  LexProf1Cell idia = identity_prof(DIA);
  for (int a = 0; a < 4; ++a) CHECK(idia.val(a, 3) == 1);
  CHECK(check_prof(idia).ok());

  LexProf1Cell it2 = identity_prof(T2);
  CHECK(it2.val(2, 2) == 4);
  CHECK(it2.val(1, 2) == 1);
  CHECK(it2.val(2, 1) == 2);
  CHECK(check_prof(it2).ok());
}

TEST_CASE("random lex cells pass the full check") {
  std::mt19937 rng(42);
  for (int t = 0; t < 50; ++t) {
    LexProf1Cell m = random_lex_cell(C3, DIA, rng);
    CHECK(check_prof(m).ok());
    LexProf1Cell n = random_lex_cell(DIA, C2, rng);
    CHECK(check_prof(n).ok());
  }
}

TEST_CASE("unit laws via unitors on random cells") {
  std::mt19937 rng(7);
  for (int t = 0; t < 30; ++t) {
    LexProf1Cell m = random_lex_cell(C2, DIA, rng);
    LexProf1Cell iy = identity_prof(DIA);
    LexProf1Cell ix = identity_prof(C2);
    CoendComposite im = compose_prof(iy, m);
    CoendComposite mi = compose_prof(m, ix);
    ProfMorphism lu = left_unitor(m, im);
    ProfMorphism ru = right_unitor(m, mi);
    CHECK(is_prof_iso(im.cell, m, lu));
    CHECK(is_prof_iso(mi.cell, m, ru));
  }
}

TEST_CASE("associator is a natural isomorphism") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    LexProf1Cell m = random_lex_cell(C2, C3, rng);
    LexProf1Cell n = random_lex_cell(C3, DIA, rng);
    LexProf1Cell p = random_lex_cell(DIA, C2, rng);
    CoendComposite pn = compose_prof(p, n);
    CoendComposite nm = compose_prof(n, m);
    CoendComposite pn_m = compose_prof(pn.cell, m);
    CoendComposite p_nm = compose_prof(p, nm.cell);
    ProfMorphism al = associator(pn, nm, pn_m, p_nm);
    CHECK(is_prof_iso(pn_m.cell, p_nm.cell, al));
  }
}

TEST_CASE("composition over a chain has existential semantics") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    LexProf1Cell m = random_lex_cell(C3, C2, rng);
    LexProf1Cell n = random_lex_cell(C2, C3, rng);
    CoendComposite nm = compose_prof(n, m);
    for (int a = 0; a < 3; ++a)
      for (int c = 0; c < 3; ++c) {
        bool wit = false;
        for (int b = 0; b < 2; ++b)
          if (m.val(a, b) == 1 && n.val(b, c) == 1) wit = true;
        CHECK(nm.cell.val(a, c) == (wit ? 1 : 0));
      }
  }
}

TEST_CASE("companion and conjoint of the identity are the identity 1-cell") {
  FunctorData idf = identity_functor(DIA->cat);
  LexProf1Cell comp = companion(DIA, DIA, idf);
  LexProf1Cell conj = conjoint(DIA, DIA, idf);
  LexProf1Cell ident = identity_prof(DIA);
  CHECK(comp.value == ident.value);
  CHECK(conj.value == ident.value);
  CHECK(cell_equal(comp, ident));
  CHECK(cell_equal(conj, ident));
}

TEST_CASE("conjoint of bottom-to-top embedding has singleton values") {
  // F: chain2 -> diamond, 0 -> bottom, 1 -> top
  auto maps = enumerate_lex_maps(*C2, *DIA);
  const FunctorData* F = nullptr;
  for (const auto& m : maps)
    if (m.obj_map == std::vector<int>{0, 3}) F = &m;
  REQUIRE(F != nullptr);
  LexProf1Cell cj = conjoint(C2, DIA, *F);
  for (int b = 0; b < 4; ++b) CHECK(cj.val(0, b) == 1);  // bottom <= everything
  CHECK(check_prof(cj).ok());
  LexProf1Cell cp = companion(C2, DIA, *F);
  CHECK(check_prof(cp).ok());
}

TEST_CASE("right closure: [I,P] is isomorphic to P") {
  std::mt19937 rng(19);
  for (int t = 0; t < 10; ++t) {
    LexProf1Cell p = random_lex_cell(DIA, C3, rng);
    ClosureCell cl = right_closure(identity_prof(DIA), p);
    CHECK(find_prof_iso(cl.cell, p).has_value());
  }
}

TEST_CASE("right closure over subsingletons is the pointwise implication") {
  std::mt19937 rng(23);
  for (int t = 0; t < 25; ++t) {
    LexProf1Cell m = random_lex_cell(C2, C3, rng);
    LexProf1Cell p = random_lex_cell(C2, DIA, rng);
    ClosureCell cl = right_closure(m, p);
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 4; ++c) {
        bool impl = true;
        for (int a = 0; a < 2; ++a)
          if (m.val(a, b) == 1 && p.val(a, c) == 0) impl = false;
        CHECK(cl.cell.val(b, c) == (impl ? 1 : 0));
      }
  }
}

TEST_CASE("closure adjunction: transpositions are mutually inverse bijections") {
  std::mt19937 rng(31);
  for (int t = 0; t < 10; ++t) {
    LexProf1Cell m = random_lex_cell(C2, DIA, rng);
    LexProf1Cell n = random_lex_cell(DIA, C3, rng);
    LexProf1Cell p = random_lex_cell(C2, C3, rng);
    CoendComposite nm = compose_prof(n, m);
    ClosureCell mp = right_closure(m, p);
    auto homLeft = enumerate_prof_morphisms(nm.cell, p);
    auto homRight = enumerate_prof_morphisms(n, mp.cell);
    CHECK(homLeft.size() == homRight.size());
    for (const auto& h : homLeft) {
      ProfMorphism k = transpose_to_closure(n, m, p, nm, mp, h);
      CHECK(check_prof_morphism(n, mp.cell, k).ok());
      ProfMorphism h2 = transpose_from_closure(n, m, p, nm, mp, k);
      CHECK(h2.component == h.component);
    }
    for (const auto& k : homRight) {
      ProfMorphism h = transpose_from_closure(n, m, p, nm, mp, k);
      CHECK(check_prof_morphism(nm.cell, p, h).ok());
      ProfMorphism k2 = transpose_to_closure(n, m, p, nm, mp, h);
      CHECK(k2.component == k.component);
    }
  }
}

TEST_CASE("search_left_dual finds the dual of the identity 1-cell") {
  auto cert = search_left_dual(identity_prof(C2));
  REQUIRE(cert.has_value());
  CHECK(check_duality(*cert).ok());
  auto cert3 = search_left_dual(identity_prof(DIA));
  REQUIRE(cert3.has_value());
  CHECK(check_duality(*cert3).ok());
}

TEST_CASE("companions of lex lattice maps have left duals, the conjoints") {
  std::vector<std::pair<LexBasePtr, LexBasePtr>> pairs = {
      {C2, C2}, {C2, C3}, {C3, C2}, {C2, DIA}, {DIA, C2}, {DIA, DIA}};
  for (const auto& [A, B] : pairs)
    for (const auto& F : enumerate_lex_maps(*A, *B)) {
      DualityCertificate direct = companion_duality(A, B, F);
      CHECK(check_duality(direct).ok());
      auto found = search_left_dual(companion(A, B, F));
      REQUIRE(found.has_value());
      CHECK(check_duality(*found).ok());
      LexProf1Cell cj = conjoint(A, B, F);
      CHECK(find_prof_iso(found->Wstar, cj).has_value());
    }
}

TEST_CASE("a cell with a fat non-representable value has no dual") {
  LexProf1Cell w = fat_cell();
  CHECK(check_prof_cell(w).ok());
  CHECK_FALSE(check_prof_lex(w).ok());
  auto cert = search_left_dual(w);
  CHECK_FALSE(cert.has_value());
}

TEST_CASE("trunc identity: composites match the coend oracle via unitors") {
  LexProf1Cell it = identity_prof(T2);
  CoendComposite ii = compose_prof(it, it);
  ProfMorphism lu = left_unitor(it, ii);
  CHECK(is_prof_iso(ii.cell, it, lu));
}
