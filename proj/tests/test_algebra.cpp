#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "catkit/algebra.hpp"
#include "catkit/fincat.hpp"
#include "catkit/finset.hpp"

using namespace catkit;
using namespace catkit::algebra;
using finset::tuple_code;
using finset::tuple_decode;

namespace {

// Free-semilattice semantics: a term over n variables denotes the nonempty
// subset of variables occurring in it (join = union).
int subset_of_term(const Term& t) {
  if (t.op == -1) return 1 << t.var;
  int m = 0;
  for (const Term& a : t.args) m |= subset_of_term(a);
  return m;
}

// Free-pointed-set semantics: a term is either a variable or the point.
int pointed_value(const Term& t, int n) { return t.op == -1 ? t.var : n; }

}  // namespace

TEST_CASE("presentation validation") {
  CHECK(check_presentation(semilattice_presentation()).ok());
  CHECK(check_presentation(monoid_presentation()).ok());
  Presentation bad = semilattice_presentation();
  bad.eqs[0].lhs = tapp(0, {tvar(0)});  // join applied to one argument
  CHECK_FALSE(check_presentation(bad).ok());
  Presentation bad2 = semilattice_presentation();
  bad2.eqs[2].rhs = tvar(5);  // variable out of range
  CHECK_FALSE(check_presentation(bad2).ok());
}

TEST_CASE("empty signature tabulates to the identity monad") {
  TabMonad t = tabulate(empty_presentation(), 3, 8);
  CHECK(t.tsize == std::vector<int>{0, 1, 2, 3});
  CHECK(check_kleisli(t).ok());
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i < n; ++i) CHECK(t.unit[n][i] == i);
  // extension of a tuple is the tuple itself, read as a function
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (size_t f = 0; f < t.ext[n][m].size(); ++f) {
        std::vector<int> fv = tuple_decode(static_cast<long long>(f), n, m);
        for (int c = 0; c < m; ++c) CHECK(t.ext[n][m][f][c] == fv[c]);
      }
  CHECK(monad_equal(t, identity_tabmonad(3)));
}

TEST_CASE("pointed sets tabulate to sizes n+1 with adjoined-point semantics") {
  TabMonad t = tabulate(pointed_presentation(), 3, 8);
  CHECK(t.tsize == std::vector<int>{1, 2, 3, 4});
  CHECK(check_kleisli(t).ok());
  // identify each class with a variable or the adjoined point
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> value(t.tsize[n]);
    std::set<int> seen;
    for (int c = 0; c < t.tsize[n]; ++c) {
      value[c] = pointed_value(t.reps[n][c], n);
      seen.insert(value[c]);
    }
    CHECK(static_cast<int>(seen.size()) == t.tsize[n]);
    for (int i = 0; i < n; ++i) CHECK(value[t.unit[n][i]] == i);
  }
  // extension: variables are substituted, the point is preserved
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= 3; ++m)
      for (size_t f = 0; f < t.ext[n][m].size(); ++f) {
        std::vector<int> fv =
            tuple_decode(static_cast<long long>(f), t.tsize[n], m);
        for (int c = 0; c < t.tsize[m]; ++c) {
          int vc = pointed_value(t.reps[m][c], m);
          int expect = vc == m ? pointed_value(t.reps[n].back(), n) : -1;
          int got = pointed_value(t.reps[n][t.ext[n][m][f][c]], n);
          if (vc == m)
            CHECK(got == expect);
          else
            CHECK(got == pointed_value(t.reps[n][fv[vc]], n));
        }
      }
}

TEST_CASE("semilattices tabulate to nonempty subsets") {
  TabMonad t = tabulate(semilattice_presentation(), 3, 8);
  CHECK(t.tsize == std::vector<int>{0, 1, 3, 7});
  CHECK(check_kleisli(t).ok());
  for (int n = 0; n <= 3; ++n) {
    std::vector<int> mask(t.tsize[n]);
    std::set<int> seen;
    for (int c = 0; c < t.tsize[n]; ++c) {
      mask[c] = subset_of_term(t.reps[n][c]);
      CHECK(mask[c] != 0);
      seen.insert(mask[c]);
    }
    CHECK(static_cast<int>(seen.size()) == t.tsize[n]);  // classes = subsets
    for (int i = 0; i < n; ++i) CHECK(mask[t.unit[n][i]] == (1 << i));
    // cross-validate the extension against union semantics
    for (int m = 0; m <= 3; ++m) {
      std::vector<int> mask_m(t.tsize[m]);
      for (int c = 0; c < t.tsize[m]; ++c)
        mask_m[c] = subset_of_term(t.reps[m][c]);
      for (size_t f = 0; f < t.ext[n][m].size(); ++f) {
        std::vector<int> fv =
            tuple_decode(static_cast<long long>(f), t.tsize[n], m);
        for (int c = 0; c < t.tsize[m]; ++c) {
          int expect = 0;
          for (int j = 0; j < m; ++j)
            if (mask_m[c] & (1 << j)) expect |= mask[fv[j]];
          CHECK(mask[t.ext[n][m][f][c]] == expect);
        }
      }
    }
  }
}

TEST_CASE("monoids fail to stabilize") {
  CHECK_THROWS_AS(tabulate(monoid_presentation(), 1, 6), StabilizationError);
  try {
    tabulate(monoid_presentation(), 1, 6);
  } catch (const StabilizationError& e) {
    CHECK(std::string(e.what()) ==
          "not locally finite within bounds (arity 1)");
    CHECK(e.arity == 1);
  }
}

TEST_CASE("tabulation respects the size bound") {
  CHECK_THROWS_AS(tabulate(pointed_presentation(), 3, 8, 2), ResourceError);
  // an exploding congruence hits the bound too, but reports non-stabilization
  CHECK_THROWS_AS(tabulate(monoid_presentation(), 1, 12, 500),
                  StabilizationError);
}

TEST_CASE("monad_to_theory produces a lawful theory with lex J") {
  for (const Presentation& p :
       {empty_presentation(), pointed_presentation(),
        semilattice_presentation()}) {
    TabMonad t = tabulate(p, 3, 8);
    LawTheory l = monad_to_theory(t);
    CHECK(check_theory(l).ok());
    CHECK(fincat::check_lex_functor(*l.base, l.J).ok());
    // hom sizes follow the closed form |T n|^m
    for (int n = 0; n <= 3; ++n)
      for (int m = 0; m <= 3; ++m) {
        long long expect = finset::checked_pow(t.tsize[n], m, 1'000'000'000);
        CHECK(l.cat->hom[n][m] == expect);
      }
  }
}

TEST_CASE("theory round trip is the identity in both directions") {
  for (const Presentation& p :
       {empty_presentation(), pointed_presentation(),
        semilattice_presentation()}) {
    TabMonad t = tabulate(p, 3, 8);
    LawTheory l = monad_to_theory(t);
    TabMonad t2 = theory_to_monad(l);
    CHECK(monad_equal(t, t2));
    LawTheory l2 = monad_to_theory(t2);
    CHECK(theory_equal(l, l2));
  }
}

namespace {

// A lawful category with identity-on-objects J whose tupling bijection
// fails: object 2 is relabeled onto object 1 of the pointed theory, so
// hom(2,2) has 2 elements instead of hom(2,1)^2 = 4.
LawTheory broken_tupling_theory() {
  TabMonad t = tabulate(pointed_presentation(), 2, 8);
  LawTheory l = monad_to_theory(t);
  const int r[3] = {0, 1, 1};
  auto c = std::make_shared<fincat::FinCategory>();
  c->name = "broken-tupling";
  c->n_obj = 3;
  c->hom.assign(3, std::vector<int>(3));
  c->id.resize(3);
  for (int a = 0; a < 3; ++a) {
    c->id[a] = l.cat->id[r[a]];
    for (int b = 0; b < 3; ++b) c->hom[a][b] = l.cat->hom[r[a]][r[b]];
  }
  c->comp.resize(3);
  for (int a = 0; a < 3; ++a) {
    c->comp[a].resize(3);
    for (int b = 0; b < 3; ++b) {
      c->comp[a][b].resize(3);
      for (int k = 0; k < 3; ++k)
        c->comp[a][b][k] = l.cat->comp[r[a]][r[b]][r[k]];
    }
  }
  LawTheory bad;
  bad.N = 2;
  bad.name = "broken-tupling";
  bad.base = l.base;
  bad.trunc = l.trunc;
  bad.cat = c;
  bad.J.src = bad.trunc;
  bad.J.dst = c;
  bad.J.name = "J";
  bad.J.obj_map = {0, 1, 2};
  bad.J.mor_map.resize(3);
  for (int n = 0; n < 3; ++n) {
    bad.J.mor_map[n].resize(3);
    for (int m = 0; m < 3; ++m) {
      bad.J.mor_map[n][m].resize(bad.trunc->hom[n][m]);
      for (int u = 0; u < bad.trunc->hom[n][m]; ++u) {
        // collapse the base arrow onto the relabeled arities, then apply J
        std::vector<int> uv = finset::tuple_decode(u, n, m);
        std::vector<int> w(r[m]);
        for (int i = 0; i < r[m]; ++i) w[i] = std::min(uv[i], r[n] - 1);
        long long code = finset::tuple_code(w, r[n]);
        bad.J.mor_map[n][m][u] = l.J.mor_map[r[n]][r[m]][code];
      }
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("theory_to_monad rejects a broken tupling bijection") {
  LawTheory bad = broken_tupling_theory();
  CHECK(fincat::check_category(*bad.cat).ok());
  CHECK(fincat::check_functor(bad.J).ok());
  Report r = check_theory(bad);
  CHECK_FALSE(r.ok());
  bool mentions_tupling = false;
  for (const std::string& v : r.violations)
    if (v.find("tupling") != std::string::npos) mentions_tupling = true;
  CHECK(mentions_tupling);
  CHECK_THROWS_AS(theory_to_monad(bad), PreconditionError);
}

TEST_CASE("models of the identity theory are plain sets") {
  LawTheory l = monad_to_theory(identity_tabmonad(3));
  ModelCategory mc = enumerate_models(l, 3);
  CHECK(mc.objects.size() == 4);  // carriers 0,1,2,3
  for (size_t i = 0; i < mc.objects.size(); ++i)
    CHECK(mc.objects[i].carrier == static_cast<int>(i));
  // hom sets are all functions between the carriers
  for (int i = 0; i < mc.cat.n_obj; ++i)
    for (int j = 0; j < mc.cat.n_obj; ++j) {
      long long expect = finset::checked_pow(mc.objects[j].carrier,
                                             mc.objects[i].carrier,
                                             1'000'000'000);
      if (mc.objects[j].carrier == 0 && mc.objects[i].carrier > 0) expect = 0;
      CHECK(mc.cat.hom[i][j] == expect);
    }
  CHECK(fincat::check_category(mc.cat).ok());
}

TEST_CASE("models of the semilattice theory at k=2") {
  TabMonad t = tabulate(semilattice_presentation(), 3, 8);
  LawTheory l = monad_to_theory(t);
  ModelCategory mc = enumerate_models(l, 2);
  CHECK(fincat::check_category(mc.cat).ok());
  // semilattices with carrier at most {0,1}: empty, singleton, and the two
  // labelings of the chain (join as min or as max)
  REQUIRE(mc.objects.size() == 4);
  CHECK(mc.objects[0].carrier == 0);
  CHECK(mc.objects[1].carrier == 1);
  CHECK(mc.objects[2].carrier == 2);
  CHECK(mc.objects[3].carrier == 2);
  // the join class at arity 2 is the non-variable class
  int join2 = -1;
  for (int c = 0; c < t.tsize[2]; ++c)
    if (subset_of_term(t.reps[2][c]) == 3) join2 = c;
  REQUIRE(join2 >= 0);
  for (int obj : {2, 3}) {
    const std::vector<int>& jt = mc.objects[obj].op[2][join2];
    CHECK(jt[0] == 0);  // 0 v 0
    CHECK(jt[3] == 1);  // 1 v 1
    CHECK(jt[1] == jt[2]);
    // every recorded morphism preserves the join
    for (const auto& f : mc.hom_maps[obj][obj])
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          CHECK(f[jt[a * 2 + b]] == jt[f[a] * 2 + f[b]]);
  }
  CHECK(mc.objects[2].op != mc.objects[3].op);
}

TEST_CASE("models of the pointed theory at k=2") {
  TabMonad t = tabulate(pointed_presentation(), 2, 8);
  LawTheory l = monad_to_theory(t);
  ModelCategory mc = enumerate_models(l, 2);
  CHECK(fincat::check_category(mc.cat).ok());
  // pointed sets of size 1 and 2 (with either point): no empty model
  CHECK(mc.objects.size() == 3);
  CHECK(mc.objects[0].carrier == 1);
  CHECK(mc.objects[1].carrier == 2);
  CHECK(mc.objects[2].carrier == 2);
  // maps must preserve the point: hom sizes 1,2,2 out of the singleton
  CHECK(mc.cat.hom[0][0] == 1);
  CHECK(mc.cat.hom[0][1] == 1);
  CHECK(mc.cat.hom[1][0] == 1);
  CHECK(mc.cat.hom[1][1] == 2);  // identity and the point-collapse
  CHECK(mc.cat.hom[1][2] == 2);
}

TEST_CASE("enumerate_algebras matches enumerate_models through the theory") {
  TabMonad t = tabulate(semilattice_presentation(), 3, 8);
  ModelCategory alg = enumerate_algebras(t, 2);
  ModelCategory mod = enumerate_models(monad_to_theory(t), 2);
  CHECK(alg.objects.size() == mod.objects.size());
  for (size_t i = 0; i < alg.objects.size(); ++i) {
    CHECK(alg.objects[i].carrier == mod.objects[i].carrier);
    CHECK(alg.objects[i].op == mod.objects[i].op);
  }
  CHECK(alg.cat.hom == mod.cat.hom);
  CHECK(alg.cat.comp == mod.cat.comp);
}

TEST_CASE("model enumeration respects the candidate bound") {
  TabMonad t = tabulate(semilattice_presentation(), 3, 8);
  CHECK_THROWS_AS(enumerate_models(monad_to_theory(t), 3, 10), ResourceError);
}
