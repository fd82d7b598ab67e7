#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "catkit/fincat.hpp"

using namespace catkit;
using namespace catkit::fincat;

namespace {
int total_morphisms(const FinCategory& c) {
  int n = 0;
  for (int a = 0; a < c.n_obj; ++a)
    for (int b = 0; b < c.n_obj; ++b) n += c.hom_size(a, b);
  return n;
}

FinCategory terminal_category() {
  FinCategory c;
  c.n_obj = 1;
  c.hom = {{1}};
  c.id = {0};
  alloc_comp(c);
  c.comp[0][0][0][0] = 0;
  return c;
}
}  // namespace

TEST_CASE("check_category accepts the terminal category and trunc bases") {
  CHECK(check_category(terminal_category()).ok());
  CHECK(check_category(trunc_category(2)).ok());
  CHECK(check_category(trunc_category(3)).ok());
}

TEST_CASE("check_category reports a broken unit") {
  // 2-object category: one non-identity arrow 0 -> 1
  FinCategory c;
  c.n_obj = 2;
  c.hom = {{1, 1}, {0, 1}};
  c.id = {0, 0};
  alloc_comp(c);
  c.comp[0][0][0][0] = 0;
  c.comp[0][0][1][0] = 0;
  c.comp[0][1][1][0] = 0;
  c.comp[1][1][1][0] = 0;
  CHECK(check_category(c).ok());
  c.comp[0][1][1][0] = -1;  // break id_1 ∘ f
  Report r = check_category(c);
  CHECK_FALSE(r.ok());
}

TEST_CASE("lattice fixtures and their categories") {
  FinLattice c2 = chain_lattice(2);
  FinLattice c3 = chain_lattice(3);
  FinLattice dia = diamond_lattice();
  FinLattice at3 = antichain_top(3);
  CHECK(check_lattice(c2).ok());
  CHECK(check_lattice(c3).ok());
  CHECK(check_lattice(dia).ok());
  CHECK(check_poset(at3).ok());
  CHECK_FALSE(check_lattice(at3).ok());  // two antichain elements have no meet

  CHECK(total_morphisms(lattice_to_category(c2)) == 3);
  CHECK(total_morphisms(lattice_to_category(dia)) == 9);
  CHECK(total_morphisms(lattice_to_category(at3)) == 7);
  CHECK(check_category(lattice_to_category(c2)).ok());
  CHECK(check_category(lattice_to_category(c3)).ok());
  CHECK(check_category(lattice_to_category(dia)).ok());
  CHECK(check_category(lattice_to_category(at3)).ok());

  CHECK(lattice_top(dia) == 3);
  CHECK(lattice_meet(dia, 1, 2) == 0);
  CHECK(lattice_meet(dia, 1, 3) == 1);
}

TEST_CASE("lattice base categories are preorders (subsingleton homs)") {
  for (const auto& p : {chain_lattice(2), chain_lattice(3), diamond_lattice()}) {
    auto base = make_lattice_base(p, p.name);
    for (int a = 0; a < base->cat->n_obj; ++a)
      for (int b = 0; b < base->cat->n_obj; ++b)
        CHECK(base->cat->hom_size(a, b) <= 1);
  }
}

TEST_CASE("trunc category structure") {
  FinCategory t2 = trunc_category(2);
  CHECK(t2.hom_size(2, 2) == 4);
  CHECK(t2.hom_size(0, 2) == 0);
  CHECK(t2.hom_size(2, 0) == 1);
  CHECK(t2.hom_size(0, 0) == 1);
  // composition read contravariantly agrees with function composition
  FinCategory t3 = trunc_category(3);
  // f: 3 -> 2 given by [2]->[3] table (1,2); g: 2 -> 3 given by [3]->[2] table (0,1,1)
  int f = static_cast<int>(finset::tuple_code({1, 2}, 3));
  int g = static_cast<int>(finset::tuple_code({0, 1, 1}, 2));
  int gf = t3.compose(3, 2, 3, g, f);
  CHECK(finset::tuple_decode(gf, 3, 3) == std::vector<int>{1, 2, 2});
}

TEST_CASE("trunc base records in-bounds product cones") {
  auto base = make_trunc_base(3);
  CHECK(base->terminal_obj == 0);
  int cones = 0;
  for (const auto& c : base->products) {
    CHECK(c.apex == c.left + c.right);
    CHECK(c.apex <= 3);
    ++cones;
  }
  CHECK(cones == 10);  // pairs (n,m) with n+m <= 3
}

TEST_CASE("functor data: identity, composition, checks") {
  auto dia = std::make_shared<FinCategory>(lattice_to_category(diamond_lattice()));
  FunctorData id = identity_functor(dia);
  CHECK(check_functor(id).ok());
  CHECK(functor_equal(compose_functor(id, id), id));

  auto t2 = std::make_shared<FinCategory>(trunc_category(2));
  FunctorData idt = identity_functor(t2);
  CHECK(check_functor(idt).ok());

  FunctorData bad = id;
  bad.mor_map[0][3][0] = 0;  // still in range (hom is subsingleton) – stays valid
  CHECK(check_functor(bad).ok());
  bad.obj_map[0] = 3;  // now 0 -> top but hom maps claim arrows out of hom(3,-)
  CHECK_FALSE(check_functor(bad).ok());
}

TEST_CASE("natural transformations on poset functors") {
  auto c2base = make_lattice_base(chain_lattice(2), "chain2");
  auto diabase = make_lattice_base(diamond_lattice(), "diamond");
  auto maps = enumerate_lex_maps(*c2base, *diabase);
  CHECK(maps.size() == 4);  // f(1)=top, f(0) arbitrary
  for (const auto& F : maps) {
    CHECK(check_functor(F).ok());
    CHECK(check_lex_functor(*diabase, F).ok() ==
          (F.src.get() == diabase->cat.get()));  // wrong base is reported
    CHECK(check_lex_functor(*c2base, F).ok());
    auto iso = find_nat_iso(F, F);
    REQUIRE(iso.has_value());
    CHECK(is_nat_iso(F, F, *iso));
  }
  // between distinct monotone maps into a poset there is no iso
  CHECK_FALSE(find_nat_iso(maps[0], maps[1]).has_value());
}

TEST_CASE("enumerate_lex_maps counts on fixtures") {
  auto c2 = make_lattice_base(chain_lattice(2), "chain2");
  auto c3 = make_lattice_base(chain_lattice(3), "chain3");
  auto dia = make_lattice_base(diamond_lattice(), "diamond");
  CHECK(enumerate_lex_maps(*c2, *c2).size() == 2);
  CHECK(enumerate_lex_maps(*dia, *c2).size() == 4);
  for (const auto& F : enumerate_lex_maps(*dia, *c3)) {
    CHECK(check_functor(F).ok());
    CHECK(check_lex_functor(*dia, F).ok());
  }
  auto t1 = make_trunc_base(1);
  auto t3 = make_trunc_base(3);
  auto mult = enumerate_lex_maps(*t1, *t3);
  CHECK(mult.size() == 4);  // multiplication by 0..3
  for (const auto& F : mult) {
    CHECK(check_functor(F).ok());
    CHECK(check_lex_functor(*t1, F).ok());
  }
}

TEST_CASE("check_lex_functor flags a meet-collapsing functor") {
  auto dia = make_lattice_base(diamond_lattice(), "diamond");
  auto c2 = make_lattice_base(chain_lattice(2), "chain2");
  // send bottom to 0 and everything else to 1: a∧b = bottom is no longer
  // the product of a and b in the image
  FunctorData F;
  F.src = dia->cat;
  F.dst = c2->cat;
  F.obj_map = {0, 1, 1, 1};
  F.mor_map.assign(4, std::vector<std::vector<int>>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      F.mor_map[a][b].assign(static_cast<size_t>(dia->cat->hom_size(a, b)), 0);
  CHECK(check_functor(F).ok());
  Report r = check_lex_functor(*dia, F);
  CHECK_FALSE(r.ok());
  bool cites_meet_cone = false;
  for (const auto& v : r.violations)
    if (v.find("(1,2)") != std::string::npos) cites_meet_cone = true;
  CHECK(cites_meet_cone);
}

TEST_CASE("lex points of lattices are exactly the filters") {
  auto c2 = make_lattice_base(chain_lattice(2), "chain2");
  auto dia = make_lattice_base(diamond_lattice(), "diamond");
  CHECK(enumerate_lex_points(*c2, 1).size() == 2);
  auto pts = enumerate_lex_points(*dia, 1);
  CHECK(pts.size() == 4);  // {top}, up(a), up(b), everything — {a,b,top} fails meet closure
  for (const auto& X : pts) {
    CHECK(check_set_functor(X).ok());
    CHECK(check_lex_point(*dia, X).ok());
  }
  // independent cross-check: every subsingleton-valued functor passing the
  // lex-point axioms must appear in the enumeration, and vice versa
  int found = 0;
  for (unsigned mask = 0; mask < 16; ++mask) {
    SetFunctor X;
    X.src = dia->cat;
    X.obj_size.assign(4, 0);
    for (int i = 0; i < 4; ++i) X.obj_size[i] = (mask >> i) & 1u ? 1 : 0;
    X.mor.assign(4, std::vector<std::vector<std::vector<int>>>(4));
    bool functorial = true;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        X.mor[a][b].assign(static_cast<size_t>(dia->cat->hom_size(a, b)), {});
        for (auto& tab : X.mor[a][b]) {
          if (X.obj_size[a] == 1 && X.obj_size[b] == 1) tab = {0};
          else if (X.obj_size[a] == 1) functorial = false;  // no map 1 -> 0
        }
      }
    if (!functorial) continue;
    if (check_set_functor(X).ok() && check_lex_point(*dia, X).ok()) ++found;
  }
  CHECK(found == static_cast<int>(pts.size()));
}

TEST_CASE("lex points of trunc bases are power functors") {
  auto t2 = make_trunc_base(2);
  auto pts = enumerate_lex_points(*t2, 2);
  REQUIRE(pts.size() == 3);  // carriers 0, 1, 2
  for (const auto& X : pts) {
    CHECK(check_set_functor(X).ok());
    CHECK(check_lex_point(*t2, X).ok());
  }
  CHECK(pts[2].obj_size == std::vector<int>{1, 2, 4});
  CHECK(set_functor_iso(pts[2], pts[2]));
  CHECK_FALSE(set_functor_iso(pts[1], pts[2]));
}
