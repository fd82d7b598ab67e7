// Acceptance run: one pass/fail line per criterion; exit nonzero on failure.
#include <chrono>
#include <iostream>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "catkit/algebra.hpp"
#include "catkit/wcat.hpp"

using namespace catkit;
using namespace catkit::fincat;
using namespace catkit::lexprof;
using namespace catkit::wcat;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void begin() { t0 = std::chrono::steady_clock::now(); }

void line(int i, const std::string& desc, bool ok) {
  const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i << ": " << desc << " ("
            << dt / 1000.0 << " s)\n";
  if (!ok) ++failures;
}

const LexBasePtr C2 = make_lattice_base(chain_lattice(2), "chain2");
const LexBasePtr C3 = make_lattice_base(chain_lattice(3), "chain3");
const LexBasePtr DIA = make_lattice_base(diamond_lattice(), "diamond");

FunctorData const_top_endo(const LexBasePtr& base) {
  const FinCategory& A = *base->cat;
  const int top = lattice_top(base->lattice);
  FunctorData F;
  F.src = base->cat;
  F.dst = base->cat;
  F.name = "const-top";
  F.obj_map.assign(static_cast<size_t>(A.n_obj), top);
  F.mor_map.assign(static_cast<size_t>(A.n_obj), {});
  for (int a = 0; a < A.n_obj; ++a) {
    F.mor_map[static_cast<size_t>(a)].assign(static_cast<size_t>(A.n_obj), {});
    for (int b = 0; b < A.n_obj; ++b)
      F.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)].assign(
          static_cast<size_t>(A.hom_size(a, b)), A.id[static_cast<size_t>(top)]);
  }
  return F;
}

ParflCategory lattice_parfl(const LexBasePtr& base, bool with_const_top) {
  ParflCategory p;
  p.cat = base->cat;
  p.name = base->name + (with_const_top ? "+top" : "");
  p.gens.push_back({base, identity_functor(base->cat), "id"});
  if (with_const_top) p.gens.push_back({base, const_top_endo(base), "top"});
  return p;
}

FunctorData lattice_map_functor(const LexBasePtr& A, const LexBasePtr& B,
                                const FunctorData& F) {
  FunctorData G = F;  // enumerate_lex_maps already yields the functor form
  G.src = A->cat;
  G.dst = B->cat;
  return G;
}

ProfMorphism zero_filled(const LexProf1Cell& src_cell) {
  ProfMorphism m;
  m.component.assign(src_cell.value.size(), {});
  for (size_t a = 0; a < src_cell.value.size(); ++a) {
    m.component[a].assign(src_cell.value[a].size(), {});
    for (size_t b = 0; b < src_cell.value[a].size(); ++b)
      m.component[a][b].assign(static_cast<size_t>(src_cell.value[a][b]), 0);
  }
  return m;
}

void criterion1() {
  begin();
  bool ok = true;
  for (const auto& base : {C2, C3, DIA})
    for (const auto& m : enumerate_lattice_monads(base)) {
      const LawvereWCat lw = theory_from_monad(m);
      ok = ok && check_lawvere(lw).ok();
      const MonadData m2 = monad_from_theory(lw);
      ok = ok && monad_data_iso(m, m2);
      ok = ok && lawvere_equal(lw, theory_from_monad(m2));
    }
  line(1, "exhaustive monad/theory round trips on chain2, chain3, diamond", ok);
}

void criterion2() {
  begin();
  bool ok = true;
  const std::vector<algebra::TabMonad> fixtures = {
      algebra::identity_tabmonad(3), algebra::tabulate(algebra::pointed_presentation(), 3, 8),
      algebra::tabulate(algebra::semilattice_presentation(), 3, 8)};
  for (const auto& t : fixtures) {
    const LawvereWCat lw = theory_from_monad(monad_from_tabmonad(t));
    for (int n = 0; n <= 3 && ok; ++n)
      for (int m = 0; m <= 3 && ok; ++m) {
        long long want = 1;
        for (int u = 0; u < m; ++u) want *= t.tsize[static_cast<size_t>(n)];
        if (lw.theory.cat->hom_size(n, m) != want) ok = false;
      }
  }
  // The identity monad gives exactly n^m.
  const LawvereWCat idlw = theory_from_monad(identity_monad(make_trunc_base(3)));
  for (int n = 0; n <= 3 && ok; ++n)
    for (int m = 0; m <= 3 && ok; ++m) {
      long long want = 1;
      for (int u = 0; u < m; ++u) want *= n;
      if (idlw.theory.cat->hom_size(n, m) != want) ok = false;
    }
  line(2, "theory hom sizes |hom(n,m)| = |Tn|^m for all fixtures at N=3", ok);
}

void criterion3() {
  begin();
  bool ok = true;
  const algebra::TabMonad sl = algebra::tabulate(algebra::semilattice_presentation(), 3, 8);
  for (int n = 1; n <= 3; ++n)
    ok = ok && sl.tsize[static_cast<size_t>(n)] == (1 << n) - 1;  // nonempty subsets
  const algebra::TabMonad pt = algebra::tabulate(algebra::pointed_presentation(), 3, 8);
  ok = ok && pt.tsize == std::vector<int>{1, 2, 3, 4};
  bool stabilization_seen = false;
  try {
    algebra::tabulate(algebra::monoid_presentation(), 2, 6);
  } catch (const StabilizationError&) {
    stabilization_seen = true;
  }
  line(3, "tabulation: semilattice (1,3,7), pointed (1,2,3,4), monoid rejected",
       ok && stabilization_seen);
}

void criterion4() {
  begin();
  bool ok = true;
  const std::vector<algebra::TabMonad> fixtures = {
      algebra::identity_tabmonad(3), algebra::tabulate(algebra::pointed_presentation(), 3, 8),
      algebra::tabulate(algebra::semilattice_presentation(), 3, 8)};
  for (const auto& t : fixtures) {
    ok = ok && algebra::check_triangle(t, 2).ok();
    const MonadData m = monad_from_tabmonad(t);
    const SemanticsResult s1 = semantics(monad_to_oneobject(m), 2);
    const SemanticsResult s2 = semantics(gamma(theory_from_monad(m).theory), 2);
    ok = ok && s1.cat.n_obj == s2.cat.n_obj && s1.cat.hom == s2.cat.hom;
    ok = ok && find_equivalence(std::make_shared<const FinCategory>(s1.cat),
                                std::make_shared<const FinCategory>(s2.cat))
                   .has_value();
  }
  line(4, "semantics triangle at k=2 for identity, pointed, semilattice", ok);
}

void criterion5() {
  begin();
  bool ok = true;
  // Counit an equivalence (fully faithful + essentially surjective +
  // sieve-reflecting) on every fixture parfl category.
  std::vector<ParflCategory> parfls = {lattice_parfl(C2, false), lattice_parfl(C2, true),
                                       lattice_parfl(C3, false), lattice_parfl(DIA, false)};
  ParflCategory dup = lattice_parfl(C2, false);
  dup.gens.push_back({C2, identity_functor(C2->cat), "id-again"});
  parfls.push_back(dup);
  parfls.push_back(
      theory_from_monad(monad_from_tabmonad(algebra::tabulate(algebra::pointed_presentation(),
                                                              2, 8)))
          .theory);
  for (const auto& p : parfls) ok = ok && epsilon(p).report.ok();

  // Transpositions mutually inverse on fixture (c, d) pairs.
  const std::vector<std::pair<WCategory, ParflCategory>> pairs = {
      {unit_wcategory(C2), lattice_parfl(C2, true)},
      {unit_wcategory(C3), lattice_parfl(C3, false)},
      {gamma(lattice_parfl(C2, true)), lattice_parfl(C2, true)}};
  for (const auto& [c, d] : pairs) {
    const IntegrateResult ic = integrate(c);
    const WCategory gd = gamma(d);
    const auto downs = enumerate_parfl_morphisms(ic, d);
    const auto ups = enumerate_wfunctors(c, gd);
    ok = ok && downs.size() == ups.size();
    for (const auto& G : downs) {
      const WFunctorData F = transpose_up(c, ic, d, gd, G);
      ok = ok && functor_equal(G, transpose_down(c, ic, d, gd, F));
    }
    for (const auto& F : ups) {
      const WFunctorData F2 = transpose_up(c, ic, d, gd, transpose_down(c, ic, d, gd, F));
      ok = ok && F.obj_map == F2.obj_map;
      for (size_t x = 0; x < F.hom_map.size() && ok; ++x)
        for (size_t y = 0; y < F.hom_map[x].size() && ok; ++y)
          ok = F.hom_map[x][y].component == F2.hom_map[x][y].component;
    }
  }

  // Unit fully faithful on every fixture W-category; the tensor certificate
  // passes exactly on the closed fixtures.
  std::vector<WCategory> wcats = {unit_wcategory(C2), unit_wcategory(C3),
                                  gamma(lattice_parfl(C2, true))};
  for (const auto& m : enumerate_lattice_monads(C2)) wcats.push_back(monad_to_oneobject(m));
  for (const auto& c : wcats) {
    const WFunctorData f = eta(c);
    const WCategory gg = gamma(integrate(c).parfl);
    ok = ok && wfunctor_fully_faithful(c, gg, f);
  }
  ok = ok && check_absolute_tensored(gamma(lattice_parfl(C2, true)), {C2}).ok();
  ok = ok && !check_absolute_tensored(unit_wcategory(C2), {C2}).ok();
  line(5, "counit equivalence, inverse transpositions, unit faithfulness/tensors", ok);
}

void criterion6() {
  begin();
  bool ok = true;
  std::mt19937 rng(20260826);
  const LexBasePtr bases[3] = {C2, C3, DIA};
  int generated = 0;
  for (int t = 0; t < 36 && ok; ++t) {
    const LexBasePtr& X = bases[t % 3];
    const LexBasePtr& Y = bases[(t + 1) % 3];
    const LexBasePtr& Z = bases[(t + 2) % 3];
    const LexProf1Cell m = random_lex_cell(X, Y, rng);
    const LexProf1Cell n = random_lex_cell(Y, Z, rng);
    const LexProf1Cell p = random_lex_cell(Z, X, rng);
    generated += 3;
    // Unit laws.
    const CoendComposite im = compose_prof(identity_prof(Y), m);
    const CoendComposite mi = compose_prof(m, identity_prof(X));
    ok = ok && is_prof_iso(im.cell, m, left_unitor(m, im));
    ok = ok && is_prof_iso(mi.cell, m, right_unitor(m, mi));
    // Associativity.
    const CoendComposite pn = compose_prof(p, n);
    const CoendComposite nm = compose_prof(n, m);
    const CoendComposite pn_m = compose_prof(pn.cell, m);
    const CoendComposite p_nm = compose_prof(p, nm.cell);
    ok = ok && is_prof_iso(pn_m.cell, p_nm.cell, associator(pn, nm, pn_m, p_nm));
    // Lexness of every composite (compose_prof certifies; re-check anyway).
    ok = ok && check_prof_lex(im.cell).ok() && check_prof_lex(nm.cell).ok() &&
         check_prof_lex(pn_m.cell).ok();
    // Closure adjunction bijection.
    const LexProf1Cell q = random_lex_cell(X, Z, rng);
    ++generated;
    const ClosureCell mq = right_closure(m, q);
    const auto hom_left = enumerate_prof_morphisms(nm.cell, q);
    const auto hom_right = enumerate_prof_morphisms(n, mq.cell);
    ok = ok && hom_left.size() == hom_right.size();
    for (const auto& h : hom_left) {
      const ProfMorphism k = transpose_to_closure(n, m, q, nm, mq, h);
      ok = ok && transpose_from_closure(n, m, q, nm, mq, k).component == h.component;
    }
    for (const auto& k : hom_right) {
      const ProfMorphism h = transpose_from_closure(n, m, q, nm, mq, k);
      ok = ok && transpose_to_closure(n, m, q, nm, mq, h).component == k.component;
    }
  }
  ok = ok && generated >= 100;
  line(6, "coend unit/associativity/closure laws on " + std::to_string(generated) +
              " random lex 1-cells",
       ok);
}

void criterion7() {
  begin();
  bool ok = true;
  for (const auto& A : {C2, C3, DIA})
    for (const auto& B : {C2, C3, DIA})
      for (const auto& F : enumerate_lex_maps(*A, *B)) {
        const LexProf1Cell W = companion(A, B, F);
        const auto cert = search_left_dual(W);
        ok = ok && cert.has_value() && check_duality(*cert).ok();
        if (!ok) return line(7, "duality certificates and tensor witnesses", false);
        // The corresponding tensor in a gamma image carries the certificate.
        ParflCategory d;
        d.cat = B->cat;
        d.name = "tensor-fixture";
        d.gens.push_back({B, identity_functor(B->cat), "id"});
        d.gens.push_back({A, lattice_map_functor(A, B, F), "map"});
        const WCategory g = gamma(d);
        TensorWitness w;
        w.X = 0;
        w.WX = 1;
        w.W = W;
        w.u = zero_filled(W);  // subsingleton target hom(X, WX) = B(b, Fa)
        w.dual = cert;
        w.ustar = zero_filled(cert->Wstar);
        ok = ok && is_tensor(g, w).ok();
      }
  // A lex map without a right adjoint: its conjoint has no left dual.
  FunctorData F0;
  F0.src = C2->cat;
  F0.dst = DIA->cat;
  F0.name = "no-right-adjoint";
  F0.obj_map = {1, 3};  // bottom to one midpoint, top to top
  F0.mor_map.assign(2, {});
  for (int a = 0; a < 2; ++a) {
    F0.mor_map[static_cast<size_t>(a)].assign(2, {});
    for (int b = 0; b < 2; ++b)
      for (int f = 0; f < C2->cat->hom_size(a, b); ++f) {
        int fa = F0.obj_map[static_cast<size_t>(a)], fb = F0.obj_map[static_cast<size_t>(b)];
        F0.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)].push_back(
            DIA->cat->hom_size(fa, fb) - 1);
      }
  }
  ok = ok && check_lex_functor(*C2, F0).ok();
  ok = ok && !search_left_dual(conjoint(C2, DIA, F0)).has_value();
  line(7, "duality certificates, tensor witnesses, and a dual-free cell", ok);
}

void criterion8() {
  begin();
  bool ok = true;
  const std::vector<algebra::TabMonad> fixtures = {
      algebra::identity_tabmonad(2),
      algebra::identity_tabmonad(3),
      algebra::tabulate(algebra::pointed_presentation(), 2, 8),
      algebra::tabulate(algebra::pointed_presentation(), 3, 8),
      algebra::tabulate(algebra::semilattice_presentation(), 2, 8),
      algebra::tabulate(algebra::semilattice_presentation(), 3, 8)};
  for (const auto& t : fixtures) {
    const algebra::LawTheory l = algebra::monad_to_theory(t);
    const LawvereWCat lw = theory_from_monad(monad_from_tabmonad(t));
    ok = ok && lw.theory.cat->hom == l.cat->hom && lw.theory.cat->id == l.cat->id &&
         lw.theory.cat->comp == l.cat->comp && lw.J.obj_map == l.J.obj_map &&
         lw.J.mor_map == l.J.mor_map;
  }
  line(8, "theory tables identical across the two pipelines on all fixtures", ok);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
