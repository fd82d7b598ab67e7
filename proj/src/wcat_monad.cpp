#include "catkit/wcat.hpp"

#include <algorithm>

namespace catkit::wcat {

using fincat::check_functor;
using fincat::check_lex_functor;
using fincat::functor_equal;
using fincat::lattice_meet;
using fincat::LexBase;
using lexprof::check_duality;
using lexprof::check_prof;
using lexprof::check_prof_morphism;
using lexprof::coend_prof;
using lexprof::enumerate_prof_morphisms;
using lexprof::identity_prof;
using lexprof::is_prof_iso;

namespace {

void merge_with(Report& r, const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations) r.add(prefix + v);
}

}  // namespace

Report check_monad(const MonadData& m) {
  Report r;
  if (!m.T.src || m.T.src.get() != m.T.dst.get()) {
    r.add("monad '" + m.name + "': 1-cell is not an endo-cell");
    return r;
  }
  merge_with(r, check_prof(m.T), "monad '" + m.name + "': ");
  if (!r.ok()) return r;
  const LexProf1Cell I = identity_prof(m.T.src);
  merge_with(r, check_prof_morphism(I, m.T, m.unit), "monad '" + m.name + "' unit: ");
  if (!r.ok()) return r;
  const CoendComposite TT = coend_prof(m.T, m.T);
  merge_with(r, check_prof_morphism(TT.cell, m.T, m.mult), "monad '" + m.name + "' mult: ");
  if (!r.ok()) return r;
  const FinCategory& A = *m.T.src->cat;
  const int n = A.n_obj;
  auto unit_at = [&](int a) {
    return m.unit.component[static_cast<size_t>(a)][static_cast<size_t>(a)]
                           [static_cast<size_t>(A.id[static_cast<size_t>(a)])];
  };
  auto mu = [&](int a, int b, int k) {
    return m.mult.component[static_cast<size_t>(a)][static_cast<size_t>(b)]
                           [static_cast<size_t>(k)];
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int t = 0; t < m.T.val(a, b); ++t) {
        if (mu(a, b, TT.cls(a, b, b, unit_at(b), t)) != t) {
          r.add("monad '" + m.name + "': left unit law fails at (" + std::to_string(a) + "," +
                std::to_string(b) + ") element " + std::to_string(t));
          goto next_unit;
        }
        if (mu(a, b, TT.cls(a, b, a, t, unit_at(a))) != t) {
          r.add("monad '" + m.name + "': right unit law fails at (" + std::to_string(a) + "," +
                std::to_string(b) + ") element " + std::to_string(t));
          goto next_unit;
        }
      }
next_unit:;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int z = 0; z < m.T.val(c, d); ++z)
            for (int y = 0; y < m.T.val(b, c); ++y)
              for (int x = 0; x < m.T.val(a, b); ++x) {
                const int lhs = mu(a, d, TT.cls(a, d, c, z, mu(a, c, TT.cls(a, c, b, y, x))));
                const int rhs = mu(a, d, TT.cls(a, d, b, mu(b, d, TT.cls(b, d, c, z, y)), x));
                if (lhs != rhs) {
                  r.add("monad '" + m.name + "': associativity fails at (" + std::to_string(a) +
                        "," + std::to_string(b) + "," + std::to_string(c) + "," +
                        std::to_string(d) + ") elements (" + std::to_string(x) + "," +
                        std::to_string(y) + "," + std::to_string(z) + ")");
                  return r;
                }
              }
  return r;
}

WCategory monad_to_oneobject(const MonadData& m) {
  {
    Report rep = check_monad(m);
    if (!rep.ok()) throw PreconditionError("monad_to_oneobject: " + rep.summary());
  }
  const CoendComposite TT = coend_prof(m.T, m.T);
  WCategory c;
  c.extent = {m.T.src};
  c.obj_names = {m.name};
  c.name = m.name;
  c.hom = {{m.T}};
  alloc_wcomp(c);
  const int n = m.T.src->cat->n_obj;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Tab& t = c.comp[0][0][0][static_cast<size_t>(i)][static_cast<size_t>(j)]
                       [static_cast<size_t>(k)];
        for (int g = 0; g < m.T.val(j, k); ++g)
          for (int f = 0; f < m.T.val(i, j); ++f)
            t[static_cast<size_t>(g) * static_cast<size_t>(m.T.val(i, j)) +
              static_cast<size_t>(f)] =
                m.mult.component[static_cast<size_t>(i)][static_cast<size_t>(k)]
                                [static_cast<size_t>(TT.cls(i, k, j, g, f))];
      }
  c.iota = {m.unit};
  return c;
}

MonadData identity_monad(LexBasePtr base) {
  MonadData m;
  m.name = "identity(" + base->name + ")";
  m.T = identity_prof(base);
  m.unit = lexprof::identity_prof_morphism(m.T);
  const CoendComposite TT = coend_prof(m.T, m.T);
  const FinCategory& A = *base->cat;
  m.mult.component.assign(static_cast<size_t>(A.n_obj), {});
  for (int a = 0; a < A.n_obj; ++a) {
    m.mult.component[static_cast<size_t>(a)].assign(static_cast<size_t>(A.n_obj), {});
    for (int c = 0; c < A.n_obj; ++c) {
      Tab t(static_cast<size_t>(TT.cell.val(a, c)));
      for (int k = 0; k < TT.cell.val(a, c); ++k) {
        const auto rep = TT.rep(a, c, k);
        t[static_cast<size_t>(k)] = A.compose(a, rep.b, c, rep.x, rep.y);
      }
      m.mult.component[static_cast<size_t>(a)][static_cast<size_t>(c)] = std::move(t);
    }
  }
  return m;
}

std::vector<MonadData> enumerate_lattice_monads(LexBasePtr base) {
  if (base->kind != fincat::BaseKind::lattice)
    throw PreconditionError("enumerate_lattice_monads: base is not a lattice");
  const fincat::FinLattice& L = base->lattice;
  const int n = L.n;
  std::vector<std::pair<int, int>> free_pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !L.le(a, b)) free_pairs.emplace_back(a, b);
  if (free_pairs.size() > 20)
    throw ResourceError("enumerate_lattice_monads: too many candidate relations");
  std::vector<MonadData> out;
  const FinCategory& A = *base->cat;
  for (unsigned long long mask = 0; mask < (1ULL << free_pairs.size()); ++mask) {
    std::vector<std::vector<char>> R(static_cast<size_t>(n),
                                     std::vector<char>(static_cast<size_t>(n), 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (L.le(a, b)) R[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    std::string tag;
    for (size_t u = 0; u < free_pairs.size(); ++u)
      if (mask & (1ULL << u)) {
        R[static_cast<size_t>(free_pairs[u].first)][static_cast<size_t>(free_pairs[u].second)] =
            1;
        tag += "+" + std::to_string(free_pairs[u].first) + ">" +
               std::to_string(free_pairs[u].second);
      }
    bool good = true;
    for (int a = 0; a < n && good; ++a)
      for (int b = 0; b < n && good; ++b)
        for (int c = 0; c < n && good; ++c) {
          if (R[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
              R[static_cast<size_t>(b)][static_cast<size_t>(c)] &&
              !R[static_cast<size_t>(a)][static_cast<size_t>(c)])
            good = false;
          if (R[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
              R[static_cast<size_t>(a)][static_cast<size_t>(c)] &&
              !R[static_cast<size_t>(a)][static_cast<size_t>(lattice_meet(L, b, c))])
            good = false;
        }
    if (!good) continue;
    MonadData m;
    m.name = base->name + "-relation" + (tag.empty() ? "-order" : tag);
    LexProf1Cell& T = m.T;
    T.src = base;
    T.dst = base;
    T.name = m.name;
    T.value.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        T.value[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            R[static_cast<size_t>(a)][static_cast<size_t>(b)] ? 1 : 0;
    lexprof::alloc_cell(T);
    for (auto& row : T.lact)
      for (auto& col : row)
        for (auto& tabs : col)
          for (auto& tab : tabs) std::fill(tab.begin(), tab.end(), 0);
    for (auto& row : T.ract)
      for (auto& col : row)
        for (auto& tabs : col)
          for (auto& tab : tabs) std::fill(tab.begin(), tab.end(), 0);
    m.unit.component.assign(static_cast<size_t>(n), {});
    for (int a = 0; a < n; ++a) {
      m.unit.component[static_cast<size_t>(a)].assign(static_cast<size_t>(n), {});
      for (int b = 0; b < n; ++b)
        m.unit.component[static_cast<size_t>(a)][static_cast<size_t>(b)].assign(
            static_cast<size_t>(A.hom_size(a, b)), 0);
    }
    const CoendComposite TT = coend_prof(T, T);
    m.mult.component.assign(static_cast<size_t>(n), {});
    for (int a = 0; a < n; ++a) {
      m.mult.component[static_cast<size_t>(a)].assign(static_cast<size_t>(n), {});
      for (int b = 0; b < n; ++b) {
        if (TT.cell.val(a, b) > 0 && T.val(a, b) == 0)
          throw InvariantError("enumerate_lattice_monads: composite escapes the relation");
        m.mult.component[static_cast<size_t>(a)][static_cast<size_t>(b)].assign(
            static_cast<size_t>(TT.cell.val(a, b)), 0);
      }
    }
    Report rep = check_monad(m);
    if (!rep.ok()) throw InvariantError("enumerate_lattice_monads: " + rep.summary());
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

/// The monad T(i,j) = L(o(i), o(j)) induced by an identity-on-objects functor
/// J into a category L, with actions by pre/post-composition with J-arrows,
/// unit from J, and multiplication from composition in L.
MonadData monad_from_category(LexBasePtr base, const FinCategory& L, const FunctorData& J,
                              const std::string& name) {
  const FinCategory& A = *base->cat;
  const int n = A.n_obj;
  auto o = [&](int i) { return J.obj_map[static_cast<size_t>(i)]; };
  MonadData m;
  m.name = name;
  LexProf1Cell& T = m.T;
  T.src = base;
  T.dst = base;
  T.name = name;
  T.value.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      T.value[static_cast<size_t>(i)][static_cast<size_t>(j)] = L.hom_size(o(i), o(j));
  lexprof::alloc_cell(T);
  for (int i2 = 0; i2 < n; ++i2)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int al = 0; al < A.hom_size(i2, i); ++al) {
          Tab& t = T.lact[static_cast<size_t>(i2)][static_cast<size_t>(i)][static_cast<size_t>(j)]
                         [static_cast<size_t>(al)];
          for (int f = 0; f < T.val(i, j); ++f)
            t[static_cast<size_t>(f)] = L.compose(o(i2), o(i), o(j), f, J.map_mor(i2, i, al));
        }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int j2 = 0; j2 < n; ++j2)
        for (int be = 0; be < A.hom_size(j, j2); ++be) {
          Tab& t = T.ract[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(j2)]
                         [static_cast<size_t>(be)];
          for (int f = 0; f < T.val(i, j); ++f)
            t[static_cast<size_t>(f)] = L.compose(o(i), o(j), o(j2), J.map_mor(j, j2, be), f);
        }
  m.unit.component.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    m.unit.component[static_cast<size_t>(i)].assign(static_cast<size_t>(n), {});
    for (int j = 0; j < n; ++j) {
      Tab t(static_cast<size_t>(A.hom_size(i, j)));
      for (int ph = 0; ph < A.hom_size(i, j); ++ph)
        t[static_cast<size_t>(ph)] = J.map_mor(i, j, ph);
      m.unit.component[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
    }
  }
  const CoendComposite TT = coend_prof(T, T);
  m.mult.component.assign(static_cast<size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    m.mult.component[static_cast<size_t>(i)].assign(static_cast<size_t>(n), {});
    for (int k = 0; k < n; ++k) {
      Tab t(static_cast<size_t>(TT.cell.val(i, k)), -1);
      for (int b = 0; b < n; ++b)
        for (int x = 0; x < T.val(b, k); ++x)
          for (int y = 0; y < T.val(i, b); ++y) {
            const int cls = TT.cls(i, k, b, x, y);
            const int comp = L.compose(o(i), o(b), o(k), x, y);
            if (t[static_cast<size_t>(cls)] >= 0 && t[static_cast<size_t>(cls)] != comp)
              throw InvariantError(
                  "monad multiplication does not descend to the coend at (" + std::to_string(i) +
                  "," + std::to_string(k) + ")");
            t[static_cast<size_t>(cls)] = comp;
          }
      m.mult.component[static_cast<size_t>(i)][static_cast<size_t>(k)] = std::move(t);
    }
  }
  return m;
}

}  // namespace

MonadData monad_from_tabmonad(const algebra::TabMonad& t) {
  const algebra::LawTheory l = algebra::monad_to_theory(t);
  return monad_from_category(l.base, *l.cat, l.J, t.name);
}

bool monad_data_iso(const MonadData& a, const MonadData& b, long long max_candidates) {
  if (a.T.src.get() != b.T.src.get() && !base_equal(*a.T.src, *b.T.src)) return false;
  const FinCategory& A = *a.T.src->cat;
  const int n = A.n_obj;
  // Fast path: identical tables need no search (coend class numbering is
  // deterministic in the cell tables, so equal cells give equal classes).
  if (lexprof::cell_equal(a.T, b.T) && a.unit.component == b.unit.component &&
      a.mult.component == b.mult.component)
    return true;
  const CoendComposite TTa = coend_prof(a.T, a.T);
  const CoendComposite TTb = coend_prof(b.T, b.T);
  for (const ProfMorphism& m : enumerate_prof_morphisms(a.T, b.T, max_candidates)) {
    if (!is_prof_iso(a.T, b.T, m)) continue;
    bool good = true;
    for (int i = 0; i < n && good; ++i)
      for (int j = 0; j < n && good; ++j)
        for (int ph = 0; ph < A.hom_size(i, j); ++ph)
          if (m.component[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(
                  a.unit.component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                  [static_cast<size_t>(ph)])] !=
              b.unit.component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                              [static_cast<size_t>(ph)]) {
            good = false;
            break;
          }
    for (int i = 0; i < n && good; ++i)
      for (int k = 0; k < n && good; ++k)
        for (int mid = 0; mid < n && good; ++mid)
          for (int x = 0; x < a.T.val(mid, k) && good; ++x)
            for (int y = 0; y < a.T.val(i, mid); ++y) {
              const int ca = TTa.cls(i, k, mid, x, y);
              const int cb = TTb.cls(
                  i, k, mid,
                  m.component[static_cast<size_t>(mid)][static_cast<size_t>(k)]
                             [static_cast<size_t>(x)],
                  m.component[static_cast<size_t>(i)][static_cast<size_t>(mid)]
                             [static_cast<size_t>(y)]);
              if (m.component[static_cast<size_t>(i)][static_cast<size_t>(k)][static_cast<size_t>(
                      a.mult.component[static_cast<size_t>(i)][static_cast<size_t>(k)]
                                      [static_cast<size_t>(ca)])] !=
                  b.mult.component[static_cast<size_t>(i)][static_cast<size_t>(k)]
                                  [static_cast<size_t>(cb)]) {
                good = false;
                break;
              }
            }
    if (good) return true;
  }
  return false;
}

Report check_lawvere(const LawvereWCat& lw) {
  Report r;
  if (!lw.base || !lw.base->cat || !lw.theory.cat) {
    r.add("theory '" + lw.name + "': missing base or category");
    return r;
  }
  merge_with(r, check_parfl(lw.theory), "theory '" + lw.name + "': ");
  if (!r.ok()) return r;
  if (lw.J.src.get() != lw.base->cat.get() || lw.J.dst.get() != lw.theory.cat.get()) {
    r.add("theory '" + lw.name + "': J boundaries mismatch");
    return r;
  }
  merge_with(r, check_functor(lw.J), "theory '" + lw.name + "' J: ");
  if (!r.ok()) return r;
  merge_with(r, check_lex_functor(*lw.base, lw.J), "theory '" + lw.name + "' J: ");
  if (lw.theory.cat->n_obj != lw.base->cat->n_obj) {
    r.add("theory '" + lw.name + "': J is not identity-on-objects (object counts differ)");
    return r;
  }
  for (int i = 0; i < lw.base->cat->n_obj; ++i)
    if (lw.J.obj_map[static_cast<size_t>(i)] != i) {
      r.add("theory '" + lw.name + "': J is not identity-on-objects at " + std::to_string(i));
      return r;
    }
  bool generated = false;
  for (const SieveGen& g : lw.theory.gens)
    if (base_equal(*g.base, *lw.base) && functor_equal(g.F, lw.J)) generated = true;
  if (!generated) r.add("theory '" + lw.name + "': J does not generate the sieve");
  return r;
}

bool lawvere_equal(const LawvereWCat& a, const LawvereWCat& b) {
  if (!base_equal(*a.base, *b.base)) return false;
  const FinCategory& L = *a.theory.cat;
  const FinCategory& M = *b.theory.cat;
  if (L.n_obj != M.n_obj || L.hom != M.hom || L.id != M.id || L.comp != M.comp) return false;
  return a.J.obj_map == b.J.obj_map && a.J.mor_map == b.J.mor_map;
}

LawvereWCat theory_from_monad(const MonadData& m) {
  const WCategory w = monad_to_oneobject(m);
  IntegrateResult ic = integrate(w);
  LawvereWCat lw;
  lw.base = m.T.src;
  lw.theory = std::move(ic.parfl);
  lw.J = lw.theory.gens[0].F;
  lw.name = "theory(" + m.name + ")";
  return lw;
}

MonadData monad_from_theory(const LawvereWCat& lw) {
  {
    Report rep = check_lawvere(lw);
    if (!rep.ok()) throw PreconditionError("monad_from_theory: " + rep.summary());
  }
  return monad_from_category(lw.base, *lw.theory.cat, lw.J, "monad(" + lw.name + ")");
}

}  // namespace catkit::wcat
