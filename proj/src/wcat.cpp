#include "catkit/wcat.hpp"

#include <algorithm>
#include <functional>

namespace catkit::wcat {

using fincat::check_category;
using fincat::check_functor;
using fincat::check_lex_functor;
using fincat::compose_functor;
using fincat::functor_equal;
using fincat::LexBase;
using lexprof::check_prof;
using lexprof::check_prof_morphism;
using lexprof::enumerate_prof_morphisms;
using lexprof::identity_prof;
using lexprof::is_prof_iso;

namespace {

void merge_with(Report& r, const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations) r.add(prefix + v);
}

std::string triple(int x, int y, int z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

bool lattice_equal(const fincat::FinLattice& a, const fincat::FinLattice& b) {
  return a.n == b.n && a.leq == b.leq;
}

}  // namespace

bool base_equal(const LexBase& a, const LexBase& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == fincat::BaseKind::lattice) return lattice_equal(a.lattice, b.lattice);
  return a.max_arity == b.max_arity;
}

int WCategory::compose(int X, int Y, int Z, int i, int j, int k, int g, int f) const {
  const Tab& t = comp[static_cast<size_t>(X)][static_cast<size_t>(Y)][static_cast<size_t>(Z)]
                     [static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
  return t[static_cast<size_t>(g) * static_cast<size_t>(hom_val(X, Y, i, j)) +
           static_cast<size_t>(f)];
}

int WCategory::id_elt(int X, int i, int j, int phi) const {
  return iota[static_cast<size_t>(X)]
      .component[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(phi)];
}

void alloc_wcomp(WCategory& c) {
  const int n = c.n_obj();
  c.comp.assign(static_cast<size_t>(n), {});
  for (int X = 0; X < n; ++X) {
    const int nA = c.extent[static_cast<size_t>(X)]->cat->n_obj;
    c.comp[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
    for (int Y = 0; Y < n; ++Y) {
      const int nB = c.extent[static_cast<size_t>(Y)]->cat->n_obj;
      c.comp[static_cast<size_t>(X)][static_cast<size_t>(Y)].assign(static_cast<size_t>(n), {});
      for (int Z = 0; Z < n; ++Z) {
        const int nC = c.extent[static_cast<size_t>(Z)]->cat->n_obj;
        auto& box = c.comp[static_cast<size_t>(X)][static_cast<size_t>(Y)][static_cast<size_t>(Z)];
        box.assign(static_cast<size_t>(nA), {});
        for (int i = 0; i < nA; ++i) {
          box[static_cast<size_t>(i)].assign(static_cast<size_t>(nB), {});
          for (int j = 0; j < nB; ++j) {
            box[static_cast<size_t>(i)][static_cast<size_t>(j)].assign(static_cast<size_t>(nC),
                                                                       {});
            for (int k = 0; k < nC; ++k)
              box[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)].assign(
                  static_cast<size_t>(c.hom_val(Y, Z, j, k)) *
                      static_cast<size_t>(c.hom_val(X, Y, i, j)),
                  -1);
          }
        }
      }
    }
  }
}

Report check_wcategory(const WCategory& c) {
  Report r;
  const int n = c.n_obj();
  for (int X = 0; X < n; ++X)
    if (!c.extent[static_cast<size_t>(X)] || !c.extent[static_cast<size_t>(X)]->cat) {
      r.add("object " + std::to_string(X) + ": missing extent");
      return r;
    }
  if (static_cast<int>(c.hom.size()) != n || static_cast<int>(c.iota.size()) != n ||
      static_cast<int>(c.comp.size()) != n) {
    r.add("hom/iota/comp shape does not match object count");
    return r;
  }
  for (int X = 0; X < n; ++X) {
    if (static_cast<int>(c.hom[static_cast<size_t>(X)].size()) != n) {
      r.add("hom row " + std::to_string(X) + " has wrong length");
      return r;
    }
    for (int Y = 0; Y < n; ++Y) {
      const LexProf1Cell& h = c.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)];
      if (h.src.get() != c.extent[static_cast<size_t>(X)].get() ||
          h.dst.get() != c.extent[static_cast<size_t>(Y)].get()) {
        r.add("hom(" + std::to_string(X) + "," + std::to_string(Y) +
              "): boundaries are not the object extents");
        return r;
      }
    }
  }
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      merge_with(r, check_prof(c.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)]),
                 "hom(" + std::to_string(X) + "," + std::to_string(Y) + "): ");
  if (!r.ok()) return r;
  for (int X = 0; X < n; ++X) {
    const LexProf1Cell I = identity_prof(c.extent[static_cast<size_t>(X)]);
    merge_with(r,
               check_prof_morphism(I, c.hom[static_cast<size_t>(X)][static_cast<size_t>(X)],
                                   c.iota[static_cast<size_t>(X)]),
               "iota " + std::to_string(X) + ": ");
  }
  if (!r.ok()) return r;

  // Composition table shapes and ranges.
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
        const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
        const FinCategory& C = *c.extent[static_cast<size_t>(Z)]->cat;
        for (int i = 0; i < A.n_obj; ++i)
          for (int j = 0; j < B.n_obj; ++j)
            for (int k = 0; k < C.n_obj; ++k) {
              const Tab& t = c.comp[static_cast<size_t>(X)][static_cast<size_t>(Y)]
                                   [static_cast<size_t>(Z)][static_cast<size_t>(i)]
                                   [static_cast<size_t>(j)][static_cast<size_t>(k)];
              const size_t want = static_cast<size_t>(c.hom_val(Y, Z, j, k)) *
                                  static_cast<size_t>(c.hom_val(X, Y, i, j));
              if (t.size() != want) {
                r.add("comp " + triple(X, Y, Z) + triple(i, j, k) + ": table length wrong");
                return r;
              }
              for (int v : t)
                if (v < 0 || v >= c.hom_val(X, Z, i, k)) {
                  r.add("comp " + triple(X, Y, Z) + triple(i, j, k) + ": entry out of range");
                  return r;
                }
            }
      }

  // Naturality of comp in the source object (contravariant action).
  for (int X = 0; X < n && r.ok(); ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
        const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
        const FinCategory& C = *c.extent[static_cast<size_t>(Z)]->cat;
        const LexProf1Cell& XY = c.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)];
        const LexProf1Cell& XZ = c.hom[static_cast<size_t>(X)][static_cast<size_t>(Z)];
        for (int i2 = 0; i2 < A.n_obj; ++i2)
          for (int i = 0; i < A.n_obj; ++i)
            for (int al = 0; al < A.hom_size(i2, i); ++al)
              for (int j = 0; j < B.n_obj; ++j)
                for (int k = 0; k < C.n_obj; ++k)
                  for (int g = 0; g < c.hom_val(Y, Z, j, k); ++g)
                    for (int f = 0; f < c.hom_val(X, Y, i, j); ++f) {
                      const int lhs = c.compose(X, Y, Z, i2, j, k, g,
                                                XY.lact_tab(i2, i, j, al)[static_cast<size_t>(f)]);
                      const int rhs = XZ.lact_tab(i2, i, k, al)[static_cast<size_t>(
                          c.compose(X, Y, Z, i, j, k, g, f))];
                      if (lhs != rhs) {
                        r.add("comp not natural in the source at " + triple(X, Y, Z) +
                              triple(i2, j, k));
                        goto next_nat_i;
                      }
                    }
      next_nat_i:;
      }

  // Naturality of comp in the target object (covariant action).
  for (int X = 0; X < n && r.ok(); ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
        const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
        const FinCategory& C = *c.extent[static_cast<size_t>(Z)]->cat;
        const LexProf1Cell& YZ = c.hom[static_cast<size_t>(Y)][static_cast<size_t>(Z)];
        const LexProf1Cell& XZ = c.hom[static_cast<size_t>(X)][static_cast<size_t>(Z)];
        for (int i = 0; i < A.n_obj; ++i)
          for (int j = 0; j < B.n_obj; ++j)
            for (int k = 0; k < C.n_obj; ++k)
              for (int k2 = 0; k2 < C.n_obj; ++k2)
                for (int ga = 0; ga < C.hom_size(k, k2); ++ga)
                  for (int g = 0; g < c.hom_val(Y, Z, j, k); ++g)
                    for (int f = 0; f < c.hom_val(X, Y, i, j); ++f) {
                      const int lhs = c.compose(X, Y, Z, i, j, k2,
                                                YZ.ract_tab(j, k, k2, ga)[static_cast<size_t>(g)],
                                                f);
                      const int rhs = XZ.ract_tab(i, k, k2, ga)[static_cast<size_t>(
                          c.compose(X, Y, Z, i, j, k, g, f))];
                      if (lhs != rhs) {
                        r.add("comp not natural in the target at " + triple(X, Y, Z) +
                              triple(i, j, k2));
                        goto next_nat_k;
                      }
                    }
      next_nat_k:;
      }

  // Dinaturality in the middle object: comp descends to the coend.
  for (int X = 0; X < n && r.ok(); ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
        const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
        const FinCategory& C = *c.extent[static_cast<size_t>(Z)]->cat;
        const LexProf1Cell& XY = c.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)];
        const LexProf1Cell& YZ = c.hom[static_cast<size_t>(Y)][static_cast<size_t>(Z)];
        for (int i = 0; i < A.n_obj; ++i)
          for (int j = 0; j < B.n_obj; ++j)
            for (int j2 = 0; j2 < B.n_obj; ++j2)
              for (int be = 0; be < B.hom_size(j, j2); ++be)
                for (int k = 0; k < C.n_obj; ++k)
                  for (int g = 0; g < c.hom_val(Y, Z, j2, k); ++g)
                    for (int f = 0; f < c.hom_val(X, Y, i, j); ++f) {
                      const int lhs = c.compose(X, Y, Z, i, j, k,
                                                YZ.lact_tab(j, j2, k, be)[static_cast<size_t>(g)],
                                                f);
                      const int rhs = c.compose(X, Y, Z, i, j2, k, g,
                                                XY.ract_tab(i, j, j2, be)[static_cast<size_t>(f)]);
                      if (lhs != rhs) {
                        r.add("comp not dinatural in the middle at " + triple(X, Y, Z) +
                              triple(i, j, k) + " via arrow " + std::to_string(be) + ": " +
                              std::to_string(j) + "->" + std::to_string(j2));
                        goto next_dinat;
                      }
                    }
      next_dinat:;
      }
  if (!r.ok()) return r;

  // Unit laws.
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
      const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
      for (int i = 0; i < A.n_obj; ++i)
        for (int j = 0; j < B.n_obj; ++j)
          for (int f = 0; f < c.hom_val(X, Y, i, j); ++f) {
            if (c.compose(X, Y, Y, i, j, j, c.id_elt(Y, j, j, B.id[static_cast<size_t>(j)]), f) !=
                f) {
              r.add("left unit law fails at hom(" + std::to_string(X) + "," + std::to_string(Y) +
                    ")(" + std::to_string(i) + "," + std::to_string(j) + ") element " +
                    std::to_string(f));
              goto next_unit;
            }
            if (c.compose(X, X, Y, i, i, j, f, c.id_elt(X, i, i, A.id[static_cast<size_t>(i)])) !=
                f) {
              r.add("right unit law fails at hom(" + std::to_string(X) + "," + std::to_string(Y) +
                    ")(" + std::to_string(i) + "," + std::to_string(j) + ") element " +
                    std::to_string(f));
              goto next_unit;
            }
          }
    next_unit:;
    }

  // Associativity, elementwise.
  for (int X = 0; X < n && r.ok(); ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z)
        for (int U = 0; U < n; ++U) {
          const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
          const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
          const FinCategory& C = *c.extent[static_cast<size_t>(Z)]->cat;
          const FinCategory& D = *c.extent[static_cast<size_t>(U)]->cat;
          for (int i = 0; i < A.n_obj; ++i)
            for (int j = 0; j < B.n_obj; ++j)
              for (int k = 0; k < C.n_obj; ++k)
                for (int l = 0; l < D.n_obj; ++l)
                  for (int h = 0; h < c.hom_val(Z, U, k, l); ++h)
                    for (int g = 0; g < c.hom_val(Y, Z, j, k); ++g)
                      for (int f = 0; f < c.hom_val(X, Y, i, j); ++f) {
                        const int lhs = c.compose(X, Y, U, i, j, l,
                                                  c.compose(Y, Z, U, j, k, l, h, g), f);
                        const int rhs = c.compose(X, Z, U, i, k, l, h,
                                                  c.compose(X, Y, Z, i, j, k, g, f));
                        if (lhs != rhs) {
                          r.add("associativity fails at objects " + triple(X, Y, Z) + "->" +
                                std::to_string(U) + " base " + triple(i, j, k) + "->" +
                                std::to_string(l));
                          goto next_assoc;
                        }
                      }
        next_assoc:;
        }

  // iota is functorial for base composition.
  for (int X = 0; X < n; ++X) {
    const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
    for (int i = 0; i < A.n_obj; ++i)
      for (int j = 0; j < A.n_obj; ++j)
        for (int k = 0; k < A.n_obj; ++k)
          for (int ph = 0; ph < A.hom_size(i, j); ++ph)
            for (int ps = 0; ps < A.hom_size(j, k); ++ps) {
              const int lhs = c.id_elt(X, i, k, A.compose(i, j, k, ps, ph));
              const int rhs = c.compose(X, X, X, i, j, k, c.id_elt(X, j, k, ps),
                                        c.id_elt(X, i, j, ph));
              if (lhs != rhs) {
                r.add("iota " + std::to_string(X) + " not functorial at " + triple(i, j, k));
                goto next_iota;
              }
            }
  next_iota:;
  }
  return r;
}

WCategory unit_wcategory(LexBasePtr x) {
  WCategory c;
  c.extent = {x};
  c.obj_names = {"*"};
  c.name = "unit(" + x->name + ")";
  c.hom.assign(1, {identity_prof(x)});
  alloc_wcomp(c);
  const FinCategory& A = *x->cat;
  for (int i = 0; i < A.n_obj; ++i)
    for (int j = 0; j < A.n_obj; ++j)
      for (int k = 0; k < A.n_obj; ++k) {
        Tab& t = c.comp[0][0][0][static_cast<size_t>(i)][static_cast<size_t>(j)]
                       [static_cast<size_t>(k)];
        for (int g = 0; g < A.hom_size(j, k); ++g)
          for (int f = 0; f < A.hom_size(i, j); ++f)
            t[static_cast<size_t>(g) * static_cast<size_t>(A.hom_size(i, j)) +
              static_cast<size_t>(f)] = A.compose(i, j, k, g, f);
      }
  ProfMorphism io;
  io.component.assign(static_cast<size_t>(A.n_obj), {});
  for (int i = 0; i < A.n_obj; ++i) {
    io.component[static_cast<size_t>(i)].assign(static_cast<size_t>(A.n_obj), {});
    for (int j = 0; j < A.n_obj; ++j) {
      Tab t(static_cast<size_t>(A.hom_size(i, j)));
      for (int ph = 0; ph < A.hom_size(i, j); ++ph) t[static_cast<size_t>(ph)] = ph;
      io.component[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
    }
  }
  c.iota = {std::move(io)};
  return c;
}

Report check_wfunctor(const WCategory& src, const WCategory& dst, const WFunctorData& F) {
  Report r;
  const int n = src.n_obj();
  if (static_cast<int>(F.obj_map.size()) != n ||
      static_cast<int>(F.hom_map.size()) != n) {
    r.add("functor '" + F.name + "': shape does not match source object count");
    return r;
  }
  for (int X = 0; X < n; ++X) {
    const int FX = F.obj_map[static_cast<size_t>(X)];
    if (FX < 0 || FX >= dst.n_obj()) {
      r.add("functor '" + F.name + "': object image out of range at " + std::to_string(X));
      return r;
    }
    if (src.extent[static_cast<size_t>(X)].get() != dst.extent[static_cast<size_t>(FX)].get() &&
        !base_equal(*src.extent[static_cast<size_t>(X)], *dst.extent[static_cast<size_t>(FX)])) {
      r.add("functor '" + F.name + "': extent not preserved at " + std::to_string(X));
      return r;
    }
    if (static_cast<int>(F.hom_map[static_cast<size_t>(X)].size()) != n) {
      r.add("functor '" + F.name + "': hom_map row " + std::to_string(X) + " wrong length");
      return r;
    }
  }
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      merge_with(
          r,
          check_prof_morphism(src.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)],
                              dst.hom[static_cast<size_t>(F.obj_map[static_cast<size_t>(X)])]
                                     [static_cast<size_t>(F.obj_map[static_cast<size_t>(Y)])],
                              F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)]),
          "functor '" + F.name + "' hom 2-cell (" + std::to_string(X) + "," + std::to_string(Y) +
              "): ");
  if (!r.ok()) return r;

  for (int X = 0; X < n; ++X) {
    const int FX = F.obj_map[static_cast<size_t>(X)];
    const FinCategory& A = *src.extent[static_cast<size_t>(X)]->cat;
    for (int i = 0; i < A.n_obj; ++i)
      for (int j = 0; j < A.n_obj; ++j)
        for (int ph = 0; ph < A.hom_size(i, j); ++ph)
          if (F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(X)]
                  .component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                            [static_cast<size_t>(src.id_elt(X, i, j, ph))] !=
              dst.id_elt(FX, i, j, ph)) {
            r.add("functor '" + F.name + "': identities not preserved at object " +
                  std::to_string(X));
            goto next_id;
          }
  next_id:;
  }

  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const int FX = F.obj_map[static_cast<size_t>(X)];
        const int FY = F.obj_map[static_cast<size_t>(Y)];
        const int FZ = F.obj_map[static_cast<size_t>(Z)];
        const FinCategory& A = *src.extent[static_cast<size_t>(X)]->cat;
        const FinCategory& B = *src.extent[static_cast<size_t>(Y)]->cat;
        const FinCategory& C = *src.extent[static_cast<size_t>(Z)]->cat;
        const auto& mXY = F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)];
        const auto& mYZ = F.hom_map[static_cast<size_t>(Y)][static_cast<size_t>(Z)];
        const auto& mXZ = F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Z)];
        for (int i = 0; i < A.n_obj; ++i)
          for (int j = 0; j < B.n_obj; ++j)
            for (int k = 0; k < C.n_obj; ++k)
              for (int g = 0; g < src.hom_val(Y, Z, j, k); ++g)
                for (int f = 0; f < src.hom_val(X, Y, i, j); ++f) {
                  const int lhs = mXZ.component[static_cast<size_t>(i)][static_cast<size_t>(k)]
                                               [static_cast<size_t>(
                                                   src.compose(X, Y, Z, i, j, k, g, f))];
                  const int rhs = dst.compose(
                      FX, FY, FZ, i, j, k,
                      mYZ.component[static_cast<size_t>(j)][static_cast<size_t>(k)]
                                   [static_cast<size_t>(g)],
                      mXY.component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                   [static_cast<size_t>(f)]);
                  if (lhs != rhs) {
                    r.add("functor '" + F.name + "': composition not preserved at " +
                          triple(X, Y, Z) + triple(i, j, k));
                    goto next_comp;
                  }
                }
      next_comp:;
      }
  return r;
}

bool wfunctor_fully_faithful(const WCategory& src, const WCategory& dst, const WFunctorData& F) {
  const int n = src.n_obj();
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      if (!is_prof_iso(src.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)],
                       dst.hom[static_cast<size_t>(F.obj_map[static_cast<size_t>(X)])]
                              [static_cast<size_t>(F.obj_map[static_cast<size_t>(Y)])],
                       F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)]))
        return false;
  return true;
}

std::vector<WFunctorData> enumerate_wfunctors(const WCategory& src, const WCategory& dst,
                                              long long max_candidates) {
  std::vector<WFunctorData> out;
  const int n = src.n_obj();
  const int m = dst.n_obj();
  std::vector<std::vector<int>> allowed(static_cast<size_t>(n));
  for (int X = 0; X < n; ++X) {
    for (int Y = 0; Y < m; ++Y)
      if (base_equal(*src.extent[static_cast<size_t>(X)], *dst.extent[static_cast<size_t>(Y)]))
        allowed[static_cast<size_t>(X)].push_back(Y);
    if (allowed[static_cast<size_t>(X)].empty()) return out;
  }
  long long count = 0;
  std::vector<int> pick(static_cast<size_t>(n), 0);
  while (true) {
    std::vector<int> om(static_cast<size_t>(n));
    for (int X = 0; X < n; ++X)
      om[static_cast<size_t>(X)] = allowed[static_cast<size_t>(X)][static_cast<size_t>(
          pick[static_cast<size_t>(X)])];
    // Candidate 2-cells per hom pair, then the product odometer.
    std::vector<std::vector<std::vector<ProfMorphism>>> cands(static_cast<size_t>(n));
    bool feasible = true;
    for (int X = 0; X < n && feasible; ++X) {
      cands[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
      for (int Y = 0; Y < n; ++Y) {
        cands[static_cast<size_t>(X)][static_cast<size_t>(Y)] = enumerate_prof_morphisms(
            src.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)],
            dst.hom[static_cast<size_t>(om[static_cast<size_t>(X)])]
                   [static_cast<size_t>(om[static_cast<size_t>(Y)])],
            max_candidates);
        if (cands[static_cast<size_t>(X)][static_cast<size_t>(Y)].empty()) {
          feasible = false;
          break;
        }
      }
    }
    if (feasible) {
      std::vector<int> sel(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
      while (true) {
        if (++count > max_candidates)
          throw ResourceError("enumerate_wfunctors: candidate bound exceeded");
        WFunctorData F;
        F.obj_map = om;
        F.hom_map.assign(static_cast<size_t>(n), {});
        for (int X = 0; X < n; ++X) {
          F.hom_map[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
          for (int Y = 0; Y < n; ++Y)
            F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)] =
                cands[static_cast<size_t>(X)][static_cast<size_t>(Y)][static_cast<size_t>(
                    sel[static_cast<size_t>(X) * static_cast<size_t>(n) +
                        static_cast<size_t>(Y)])];
        }
        if (check_wfunctor(src, dst, F).ok()) out.push_back(std::move(F));
        size_t p = 0;
        while (p < sel.size()) {
          const size_t X = p / static_cast<size_t>(n);
          const size_t Y = p % static_cast<size_t>(n);
          if (++sel[p] < static_cast<int>(cands[X][Y].size())) break;
          sel[p] = 0;
          ++p;
        }
        if (p == sel.size()) break;
      }
    }
    size_t q = 0;
    while (q < pick.size()) {
      if (++pick[q] < static_cast<int>(allowed[q].size())) break;
      pick[q] = 0;
      ++q;
    }
    if (q == pick.size()) break;
  }
  return out;
}

std::optional<WFunctorData> find_wcat_iso(const WCategory& c, const WCategory& d,
                                          long long max_candidates) {
  if (c.n_obj() != d.n_obj()) return std::nullopt;
  for (auto& F : enumerate_wfunctors(c, d, max_candidates)) {
    std::vector<char> hit(static_cast<size_t>(d.n_obj()), 0);
    for (int v : F.obj_map) hit[static_cast<size_t>(v)] = 1;
    if (std::find(hit.begin(), hit.end(), 0) != hit.end()) continue;
    if (wfunctor_fully_faithful(c, d, F)) return F;
  }
  return std::nullopt;
}

Report check_wtransformation(const WCategory& src, const WCategory& dst, const WFunctorData& F,
                             const WFunctorData& G, const WTransformationData& t) {
  Report r;
  const int n = src.n_obj();
  if (static_cast<int>(t.component.size()) != n) {
    r.add("transformation: component count does not match source objects");
    return r;
  }
  for (int X = 0; X < n; ++X) {
    const LexProf1Cell I = identity_prof(src.extent[static_cast<size_t>(X)]);
    merge_with(r,
               check_prof_morphism(I,
                                   dst.hom[static_cast<size_t>(F.obj_map[static_cast<size_t>(X)])]
                                          [static_cast<size_t>(G.obj_map[static_cast<size_t>(X)])],
                                   t.component[static_cast<size_t>(X)]),
               "transformation component " + std::to_string(X) + ": ");
  }
  if (!r.ok()) return r;
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y) {
      const int FX = F.obj_map[static_cast<size_t>(X)];
      const int FY = F.obj_map[static_cast<size_t>(Y)];
      const int GX = G.obj_map[static_cast<size_t>(X)];
      const int GY = G.obj_map[static_cast<size_t>(Y)];
      const FinCategory& A = *src.extent[static_cast<size_t>(X)]->cat;
      const FinCategory& B = *src.extent[static_cast<size_t>(Y)]->cat;
      for (int i = 0; i < A.n_obj; ++i)
        for (int j = 0; j < B.n_obj; ++j)
          for (int f = 0; f < src.hom_val(X, Y, i, j); ++f) {
            const int tY = t.component[static_cast<size_t>(Y)]
                               .component[static_cast<size_t>(j)][static_cast<size_t>(j)]
                                         [static_cast<size_t>(B.id[static_cast<size_t>(j)])];
            const int tX = t.component[static_cast<size_t>(X)]
                               .component[static_cast<size_t>(i)][static_cast<size_t>(i)]
                                         [static_cast<size_t>(A.id[static_cast<size_t>(i)])];
            const int Ff = F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)]
                               .component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                         [static_cast<size_t>(f)];
            const int Gf = G.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)]
                               .component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                         [static_cast<size_t>(f)];
            if (dst.compose(FX, FY, GY, i, j, j, tY, Ff) !=
                dst.compose(FX, GX, GY, i, i, j, Gf, tX)) {
              r.add("transformation not natural at pair (" + std::to_string(X) + "," +
                    std::to_string(Y) + ") base (" + std::to_string(i) + "," + std::to_string(j) +
                    ") element " + std::to_string(f));
              goto next_pair;
            }
          }
    next_pair:;
    }
  return r;
}

Report check_parfl(const ParflCategory& p) {
  Report r;
  if (!p.cat) {
    r.add("parfl '" + p.name + "': missing category");
    return r;
  }
  merge_with(r, check_category(*p.cat), "parfl '" + p.name + "': ");
  if (!r.ok()) return r;
  std::vector<char> covered(static_cast<size_t>(p.cat->n_obj), 0);
  for (size_t t = 0; t < p.gens.size(); ++t) {
    const SieveGen& g = p.gens[t];
    if (!g.base || !g.base->cat || g.F.src.get() != g.base->cat.get() ||
        g.F.dst.get() != p.cat.get()) {
      r.add("parfl '" + p.name + "': generator " + std::to_string(t) +
            " has mismatched boundaries");
      return r;
    }
    merge_with(r, check_functor(g.F), "generator " + std::to_string(t) + ": ");
    if (!r.ok()) return r;
    merge_with(r, check_lex_functor(*g.base, g.F), "generator " + std::to_string(t) + ": ");
    if (!r.ok()) return r;
    for (int v : g.F.obj_map) covered[static_cast<size_t>(v)] = 1;
  }
  for (int o = 0; o < p.cat->n_obj; ++o)
    if (!covered[static_cast<size_t>(o)])
      r.add("parfl '" + p.name + "': object " + std::to_string(o) +
            " not covered by any generator");
  return r;
}

FinCategory underlying_category(const WCategory& c, LexBasePtr x, long long max_candidates) {
  std::vector<int> objs;
  for (int X = 0; X < c.n_obj(); ++X)
    if (c.extent[static_cast<size_t>(X)].get() == x.get() ||
        base_equal(*c.extent[static_cast<size_t>(X)], *x))
      objs.push_back(X);
  const int n = static_cast<int>(objs.size());
  const LexProf1Cell I = identity_prof(x);
  std::vector<std::vector<std::vector<ProfMorphism>>> cells(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    cells[static_cast<size_t>(a)].assign(static_cast<size_t>(n), {});
    for (int b = 0; b < n; ++b)
      cells[static_cast<size_t>(a)][static_cast<size_t>(b)] = enumerate_prof_morphisms(
          I,
          c.hom[static_cast<size_t>(objs[static_cast<size_t>(a)])]
               [static_cast<size_t>(objs[static_cast<size_t>(b)])],
          max_candidates);
  }
  auto find_cell = [&](int a, int b, const ProfMorphism& m) {
    const auto& list = cells[static_cast<size_t>(a)][static_cast<size_t>(b)];
    for (size_t u = 0; u < list.size(); ++u)
      if (list[u].component == m.component) return static_cast<int>(u);
    throw InvariantError("underlying_category: composite 2-cell not found");
  };
  FinCategory out;
  out.n_obj = n;
  out.name = c.name + " | " + x->name;
  out.hom.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out.hom[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          static_cast<int>(cells[static_cast<size_t>(a)][static_cast<size_t>(b)].size());
  out.id.assign(static_cast<size_t>(n), -1);
  for (int a = 0; a < n; ++a)
    out.id[static_cast<size_t>(a)] =
        find_cell(a, a, c.iota[static_cast<size_t>(objs[static_cast<size_t>(a)])]);
  fincat::alloc_comp(out);
  const FinCategory& A = *x->cat;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int d = 0; d < n; ++d)
        for (int g = 0; g < out.hom_size(b, d); ++g)
          for (int f = 0; f < out.hom_size(a, b); ++f) {
            const ProfMorphism& mg = cells[static_cast<size_t>(b)][static_cast<size_t>(d)]
                                          [static_cast<size_t>(g)];
            const ProfMorphism& mf = cells[static_cast<size_t>(a)][static_cast<size_t>(b)]
                                          [static_cast<size_t>(f)];
            ProfMorphism comp;
            comp.component.assign(static_cast<size_t>(A.n_obj), {});
            for (int i = 0; i < A.n_obj; ++i) {
              comp.component[static_cast<size_t>(i)].assign(static_cast<size_t>(A.n_obj), {});
              for (int j = 0; j < A.n_obj; ++j) {
                Tab t(static_cast<size_t>(A.hom_size(i, j)));
                for (int ph = 0; ph < A.hom_size(i, j); ++ph)
                  t[static_cast<size_t>(ph)] = c.compose(
                      objs[static_cast<size_t>(a)], objs[static_cast<size_t>(b)],
                      objs[static_cast<size_t>(d)], i, j, j,
                      mg.component[static_cast<size_t>(j)][static_cast<size_t>(j)]
                                  [static_cast<size_t>(A.id[static_cast<size_t>(j)])],
                      mf.component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                  [static_cast<size_t>(ph)]);
                comp.component[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
              }
            }
            out.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)]
                    [static_cast<size_t>(g) * static_cast<size_t>(out.hom_size(a, b)) +
                     static_cast<size_t>(f)] = find_cell(a, d, comp);
          }
  {
    Report rep = check_category(out);
    if (!rep.ok()) throw InvariantError("underlying_category: " + rep.summary());
  }
  return out;
}

WCategory gamma(const ParflCategory& p) {
  {
    Report rep = check_parfl(p);
    if (!rep.ok()) throw PreconditionError("gamma: " + rep.summary());
  }
  const FinCategory& C = *p.cat;
  const int n = static_cast<int>(p.gens.size());
  WCategory w;
  w.name = "gamma(" + p.name + ")";
  w.extent.reserve(static_cast<size_t>(n));
  for (const SieveGen& g : p.gens) {
    w.extent.push_back(g.base);
    w.obj_names.push_back(g.name);
  }
  w.hom.assign(static_cast<size_t>(n), {});
  for (int X = 0; X < n; ++X) {
    w.hom[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
    for (int Y = 0; Y < n; ++Y) {
      const FunctorData& FX = p.gens[static_cast<size_t>(X)].F;
      const FunctorData& FY = p.gens[static_cast<size_t>(Y)].F;
      const FinCategory& A = *p.gens[static_cast<size_t>(X)].base->cat;
      const FinCategory& B = *p.gens[static_cast<size_t>(Y)].base->cat;
      LexProf1Cell h;
      h.src = p.gens[static_cast<size_t>(X)].base;
      h.dst = p.gens[static_cast<size_t>(Y)].base;
      h.name = "hom(" + std::to_string(X) + "," + std::to_string(Y) + ")";
      h.value.assign(static_cast<size_t>(A.n_obj),
                     std::vector<int>(static_cast<size_t>(B.n_obj), 0));
      for (int i = 0; i < A.n_obj; ++i)
        for (int j = 0; j < B.n_obj; ++j)
          h.value[static_cast<size_t>(i)][static_cast<size_t>(j)] =
              C.hom_size(FX.obj_map[static_cast<size_t>(i)], FY.obj_map[static_cast<size_t>(j)]);
      lexprof::alloc_cell(h);
      for (int i2 = 0; i2 < A.n_obj; ++i2)
        for (int i = 0; i < A.n_obj; ++i)
          for (int j = 0; j < B.n_obj; ++j)
            for (int al = 0; al < A.hom_size(i2, i); ++al) {
              Tab& t = h.lact[static_cast<size_t>(i2)][static_cast<size_t>(i)]
                             [static_cast<size_t>(j)][static_cast<size_t>(al)];
              for (int f = 0; f < h.val(i, j); ++f)
                t[static_cast<size_t>(f)] =
                    C.compose(FX.obj_map[static_cast<size_t>(i2)],
                              FX.obj_map[static_cast<size_t>(i)],
                              FY.obj_map[static_cast<size_t>(j)], f, FX.map_mor(i2, i, al));
            }
      for (int i = 0; i < A.n_obj; ++i)
        for (int j = 0; j < B.n_obj; ++j)
          for (int j2 = 0; j2 < B.n_obj; ++j2)
            for (int be = 0; be < B.hom_size(j, j2); ++be) {
              Tab& t = h.ract[static_cast<size_t>(i)][static_cast<size_t>(j)]
                             [static_cast<size_t>(j2)][static_cast<size_t>(be)];
              for (int f = 0; f < h.val(i, j); ++f)
                t[static_cast<size_t>(f)] =
                    C.compose(FX.obj_map[static_cast<size_t>(i)],
                              FY.obj_map[static_cast<size_t>(j)],
                              FY.obj_map[static_cast<size_t>(j2)], FY.map_mor(j, j2, be), f);
            }
      w.hom[static_cast<size_t>(X)][static_cast<size_t>(Y)] = std::move(h);
    }
  }
  alloc_wcomp(w);
  for (int X = 0; X < n; ++X)
    for (int Y = 0; Y < n; ++Y)
      for (int Z = 0; Z < n; ++Z) {
        const FunctorData& FX = p.gens[static_cast<size_t>(X)].F;
        const FunctorData& FY = p.gens[static_cast<size_t>(Y)].F;
        const FunctorData& FZ = p.gens[static_cast<size_t>(Z)].F;
        const FinCategory& A = *p.gens[static_cast<size_t>(X)].base->cat;
        const FinCategory& B = *p.gens[static_cast<size_t>(Y)].base->cat;
        const FinCategory& D = *p.gens[static_cast<size_t>(Z)].base->cat;
        for (int i = 0; i < A.n_obj; ++i)
          for (int j = 0; j < B.n_obj; ++j)
            for (int k = 0; k < D.n_obj; ++k) {
              Tab& t = w.comp[static_cast<size_t>(X)][static_cast<size_t>(Y)]
                             [static_cast<size_t>(Z)][static_cast<size_t>(i)]
                             [static_cast<size_t>(j)][static_cast<size_t>(k)];
              for (int g = 0; g < w.hom_val(Y, Z, j, k); ++g)
                for (int f = 0; f < w.hom_val(X, Y, i, j); ++f)
                  t[static_cast<size_t>(g) * static_cast<size_t>(w.hom_val(X, Y, i, j)) +
                    static_cast<size_t>(f)] =
                      C.compose(FX.obj_map[static_cast<size_t>(i)],
                                FY.obj_map[static_cast<size_t>(j)],
                                FZ.obj_map[static_cast<size_t>(k)], g, f);
            }
      }
  w.iota.assign(static_cast<size_t>(n), {});
  for (int X = 0; X < n; ++X) {
    const FunctorData& FX = p.gens[static_cast<size_t>(X)].F;
    const FinCategory& A = *p.gens[static_cast<size_t>(X)].base->cat;
    ProfMorphism io;
    io.component.assign(static_cast<size_t>(A.n_obj), {});
    for (int i = 0; i < A.n_obj; ++i) {
      io.component[static_cast<size_t>(i)].assign(static_cast<size_t>(A.n_obj), {});
      for (int j = 0; j < A.n_obj; ++j) {
        Tab t(static_cast<size_t>(A.hom_size(i, j)));
        for (int ph = 0; ph < A.hom_size(i, j); ++ph)
          t[static_cast<size_t>(ph)] = FX.map_mor(i, j, ph);
        io.component[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
      }
    }
    w.iota[static_cast<size_t>(X)] = std::move(io);
  }
  return w;
}

IntegrateResult integrate(const WCategory& c) {
  IntegrateResult out;
  const int n = c.n_obj();
  out.obj_index.assign(static_cast<size_t>(n), {});
  for (int X = 0; X < n; ++X) {
    const int nA = c.extent[static_cast<size_t>(X)]->cat->n_obj;
    out.obj_index[static_cast<size_t>(X)].assign(static_cast<size_t>(nA), -1);
    for (int i = 0; i < nA; ++i) {
      out.obj_index[static_cast<size_t>(X)][static_cast<size_t>(i)] =
          static_cast<int>(out.obj_pair.size());
      out.obj_pair.emplace_back(X, i);
    }
  }
  const int m = static_cast<int>(out.obj_pair.size());
  FinCategory cat;
  cat.n_obj = m;
  cat.name = "integral(" + c.name + ")";
  cat.hom.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      cat.hom[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          c.hom_val(out.obj_pair[static_cast<size_t>(a)].first,
                    out.obj_pair[static_cast<size_t>(b)].first,
                    out.obj_pair[static_cast<size_t>(a)].second,
                    out.obj_pair[static_cast<size_t>(b)].second);
  cat.id.assign(static_cast<size_t>(m), -1);
  for (int a = 0; a < m; ++a) {
    const auto [X, i] = out.obj_pair[static_cast<size_t>(a)];
    cat.id[static_cast<size_t>(a)] =
        c.id_elt(X, i, i, c.extent[static_cast<size_t>(X)]->cat->id[static_cast<size_t>(i)]);
  }
  fincat::alloc_comp(cat);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d) {
        const auto [X, i] = out.obj_pair[static_cast<size_t>(a)];
        const auto [Y, j] = out.obj_pair[static_cast<size_t>(b)];
        const auto [Z, k] = out.obj_pair[static_cast<size_t>(d)];
        cat.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)] =
            c.comp[static_cast<size_t>(X)][static_cast<size_t>(Y)][static_cast<size_t>(Z)]
                  [static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)];
      }
  {
    Report rep = check_category(cat);
    if (!rep.ok()) throw InvariantError("integrate: " + rep.summary());
  }
  auto catp = std::make_shared<const FinCategory>(std::move(cat));
  out.parfl.cat = catp;
  out.parfl.name = "integral(" + c.name + ")";
  for (int X = 0; X < n; ++X) {
    const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
    SieveGen g;
    g.base = c.extent[static_cast<size_t>(X)];
    g.name = (X < static_cast<int>(c.obj_names.size()) && !c.obj_names[static_cast<size_t>(X)]
                                                               .empty())
                 ? c.obj_names[static_cast<size_t>(X)]
                 : ("iota" + std::to_string(X));
    g.F.src = c.extent[static_cast<size_t>(X)]->cat;
    g.F.dst = catp;
    g.F.name = "iota" + std::to_string(X);
    g.F.obj_map = out.obj_index[static_cast<size_t>(X)];
    g.F.mor_map.assign(static_cast<size_t>(A.n_obj), {});
    for (int i = 0; i < A.n_obj; ++i) {
      g.F.mor_map[static_cast<size_t>(i)].assign(static_cast<size_t>(A.n_obj), {});
      for (int j = 0; j < A.n_obj; ++j) {
        std::vector<int> t(static_cast<size_t>(A.hom_size(i, j)));
        for (int ph = 0; ph < A.hom_size(i, j); ++ph)
          t[static_cast<size_t>(ph)] = c.id_elt(X, i, j, ph);
        g.F.mor_map[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
      }
    }
    {
      Report rep = check_functor(g.F);
      if (!rep.ok()) throw InvariantError("integrate: generator not a functor: " + rep.summary());
      rep = check_lex_functor(*g.base, g.F);
      if (!rep.ok()) throw InvariantError("integrate: generator not lex: " + rep.summary());
    }
    out.parfl.gens.push_back(std::move(g));
  }
  return out;
}

WFunctorData eta(const WCategory& c) {
  const IntegrateResult ic = integrate(c);
  const WCategory gd = gamma(ic.parfl);
  const int n = c.n_obj();
  WFunctorData F;
  F.name = "eta(" + c.name + ")";
  F.obj_map.resize(static_cast<size_t>(n));
  for (int X = 0; X < n; ++X) F.obj_map[static_cast<size_t>(X)] = X;
  F.hom_map.assign(static_cast<size_t>(n), {});
  for (int X = 0; X < n; ++X) {
    F.hom_map[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
    for (int Y = 0; Y < n; ++Y) {
      const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
      const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
      ProfMorphism m;
      m.component.assign(static_cast<size_t>(A.n_obj), {});
      for (int i = 0; i < A.n_obj; ++i) {
        m.component[static_cast<size_t>(i)].assign(static_cast<size_t>(B.n_obj), {});
        for (int j = 0; j < B.n_obj; ++j) {
          Tab t(static_cast<size_t>(c.hom_val(X, Y, i, j)));
          for (int f = 0; f < c.hom_val(X, Y, i, j); ++f) t[static_cast<size_t>(f)] = f;
          m.component[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
        }
      }
      F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)] = std::move(m);
    }
  }
  {
    Report rep = check_wfunctor(c, gd, F);
    if (!rep.ok()) throw InvariantError("eta: " + rep.summary());
    if (!wfunctor_fully_faithful(c, gd, F))
      throw InvariantError("eta: unit is not fully faithful");
  }
  return F;
}

namespace {

bool objects_isomorphic(const FinCategory& c, int a, int b) {
  for (int f = 0; f < c.hom_size(a, b); ++f)
    for (int g = 0; g < c.hom_size(b, a); ++g)
      if (c.compose(a, b, a, g, f) == c.id[static_cast<size_t>(a)] &&
          c.compose(b, a, b, f, g) == c.id[static_cast<size_t>(b)])
        return true;
  return false;
}

}  // namespace

EpsilonResult epsilon(const ParflCategory& p) {
  const WCategory g = gamma(p);
  const IntegrateResult ic = integrate(g);
  const FinCategory& D = *p.cat;
  const FinCategory& S = *ic.parfl.cat;
  EpsilonResult out;
  out.F.src = ic.parfl.cat;
  out.F.dst = p.cat;
  out.F.name = "epsilon(" + p.name + ")";
  out.F.obj_map.resize(static_cast<size_t>(S.n_obj));
  for (int a = 0; a < S.n_obj; ++a) {
    const auto [X, i] = ic.obj_pair[static_cast<size_t>(a)];
    out.F.obj_map[static_cast<size_t>(a)] =
        p.gens[static_cast<size_t>(X)].F.obj_map[static_cast<size_t>(i)];
  }
  out.F.mor_map.assign(static_cast<size_t>(S.n_obj), {});
  for (int a = 0; a < S.n_obj; ++a) {
    out.F.mor_map[static_cast<size_t>(a)].assign(static_cast<size_t>(S.n_obj), {});
    for (int b = 0; b < S.n_obj; ++b) {
      std::vector<int> t(static_cast<size_t>(S.hom_size(a, b)));
      for (int f = 0; f < S.hom_size(a, b); ++f) t[static_cast<size_t>(f)] = f;
      out.F.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(t);
    }
  }
  Report& r = out.report;
  merge_with(r, check_functor(out.F), "counit: ");
  for (int a = 0; a < S.n_obj && r.ok(); ++a)
    for (int b = 0; b < S.n_obj; ++b)
      if (S.hom_size(a, b) != D.hom_size(out.F.obj_map[static_cast<size_t>(a)],
                                         out.F.obj_map[static_cast<size_t>(b)])) {
        r.add("counit not fully faithful at pair (" + std::to_string(a) + "," +
              std::to_string(b) + ")");
      }
  for (int o = 0; o < D.n_obj && r.ok(); ++o) {
    bool hit = false;
    for (int a = 0; a < S.n_obj && !hit; ++a)
      hit = objects_isomorphic(D, out.F.obj_map[static_cast<size_t>(a)], o);
    if (!hit) r.add("counit not essentially surjective at object " + std::to_string(o));
  }
  if (r.ok()) {
    for (size_t X = 0; X < p.gens.size(); ++X) {
      const FunctorData lifted = compose_functor(out.F, ic.parfl.gens[X].F);
      if (!functor_equal(lifted, p.gens[X].F))
        r.add("counit does not reflect the sieve generator " + std::to_string(static_cast<int>(X)));
    }
  }
  return out;
}

namespace {

/// All functors s -> d, by odometer over object and morphism assignments.
std::vector<FunctorData> enumerate_functors(fincat::FinCategoryPtr s, fincat::FinCategoryPtr d,
                                            long long max_candidates) {
  std::vector<FunctorData> out;
  const FinCategory& S = *s;
  const FinCategory& D = *d;
  if (S.n_obj > 0 && D.n_obj == 0) return out;
  long long count = 0;
  std::vector<int> om(static_cast<size_t>(S.n_obj), 0);
  while (true) {
    bool feasible = true;
    for (int a = 0; a < S.n_obj && feasible; ++a)
      for (int b = 0; b < S.n_obj && feasible; ++b)
        if (S.hom_size(a, b) > 0 &&
            D.hom_size(om[static_cast<size_t>(a)], om[static_cast<size_t>(b)]) == 0)
          feasible = false;
    if (feasible) {
      struct Slot {
        int a, b, f, choices;
      };
      std::vector<Slot> slots;
      for (int a = 0; a < S.n_obj; ++a)
        for (int b = 0; b < S.n_obj; ++b)
          for (int f = 0; f < S.hom_size(a, b); ++f)
            if (!(a == b && f == S.id[static_cast<size_t>(a)]))
              slots.push_back(
                  {a, b, f, D.hom_size(om[static_cast<size_t>(a)], om[static_cast<size_t>(b)])});
      std::vector<int> sel(slots.size(), 0);
      while (true) {
        if (++count > max_candidates)
          throw ResourceError("enumerate_functors: candidate bound exceeded");
        FunctorData F;
        F.src = s;
        F.dst = d;
        F.obj_map = om;
        F.mor_map.assign(static_cast<size_t>(S.n_obj), {});
        for (int a = 0; a < S.n_obj; ++a) {
          F.mor_map[static_cast<size_t>(a)].assign(static_cast<size_t>(S.n_obj), {});
          for (int b = 0; b < S.n_obj; ++b)
            F.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)].assign(
                static_cast<size_t>(S.hom_size(a, b)), -1);
        }
        for (int a = 0; a < S.n_obj; ++a)
          F.mor_map[static_cast<size_t>(a)][static_cast<size_t>(a)]
                   [static_cast<size_t>(S.id[static_cast<size_t>(a)])] =
              D.id[static_cast<size_t>(om[static_cast<size_t>(a)])];
        for (size_t u = 0; u < slots.size(); ++u)
          F.mor_map[static_cast<size_t>(slots[u].a)][static_cast<size_t>(slots[u].b)]
                   [static_cast<size_t>(slots[u].f)] = sel[u];
        if (check_functor(F).ok()) out.push_back(std::move(F));
        size_t p = 0;
        while (p < sel.size()) {
          if (++sel[p] < slots[p].choices) break;
          sel[p] = 0;
          ++p;
        }
        if (p == sel.size() || slots.empty()) break;
      }
    }
    size_t q = 0;
    while (q < om.size()) {
      if (++om[q] < D.n_obj) break;
      om[q] = 0;
      ++q;
    }
    if (q == om.size() || om.empty()) break;
  }
  return out;
}

/// The strict transposability condition: G carries each integral generator
/// exactly onto a generator of d.
bool carries_generators(const IntegrateResult& ic, const ParflCategory& d, const FunctorData& G) {
  for (const SieveGen& g : ic.parfl.gens) {
    const FunctorData lifted = compose_functor(G, g.F);
    bool hit = false;
    for (const SieveGen& h : d.gens)
      if (base_equal(*g.base, *h.base) && functor_equal(lifted, h.F)) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

}  // namespace

std::vector<FunctorData> enumerate_parfl_morphisms(const IntegrateResult& ic,
                                                   const ParflCategory& d,
                                                   long long max_candidates) {
  std::vector<FunctorData> out;
  for (auto& G : enumerate_functors(ic.parfl.cat, d.cat, max_candidates))
    if (carries_generators(ic, d, G)) out.push_back(std::move(G));
  return out;
}

FunctorData transpose_down(const WCategory& c, const IntegrateResult& ic, const ParflCategory& d,
                           const WCategory& gd, const WFunctorData& F) {
  const FinCategory& S = *ic.parfl.cat;
  FunctorData G;
  G.src = ic.parfl.cat;
  G.dst = d.cat;
  G.name = "transpose(" + F.name + ")";
  G.obj_map.resize(static_cast<size_t>(S.n_obj));
  for (int a = 0; a < S.n_obj; ++a) {
    const auto [X, i] = ic.obj_pair[static_cast<size_t>(a)];
    const int t = F.obj_map[static_cast<size_t>(X)];
    G.obj_map[static_cast<size_t>(a)] =
        d.gens[static_cast<size_t>(t)].F.obj_map[static_cast<size_t>(i)];
  }
  G.mor_map.assign(static_cast<size_t>(S.n_obj), {});
  for (int a = 0; a < S.n_obj; ++a) {
    G.mor_map[static_cast<size_t>(a)].assign(static_cast<size_t>(S.n_obj), {});
    for (int b = 0; b < S.n_obj; ++b) {
      const auto [X, i] = ic.obj_pair[static_cast<size_t>(a)];
      const auto [Y, j] = ic.obj_pair[static_cast<size_t>(b)];
      std::vector<int> t(static_cast<size_t>(S.hom_size(a, b)));
      for (int f = 0; f < S.hom_size(a, b); ++f)
        t[static_cast<size_t>(f)] =
            F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)]
                .component[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(f)];
      G.mor_map[static_cast<size_t>(a)][static_cast<size_t>(b)] = std::move(t);
    }
  }
  {
    Report rep = check_functor(G);
    if (!rep.ok()) throw InvariantError("transpose_down: " + rep.summary());
  }
  (void)gd;
  (void)c;
  return G;
}

WFunctorData transpose_up(const WCategory& c, const IntegrateResult& ic, const ParflCategory& d,
                          const WCategory& gd, const FunctorData& G) {
  const int n = c.n_obj();
  WFunctorData F;
  F.name = "transpose(" + G.name + ")";
  F.obj_map.assign(static_cast<size_t>(n), -1);
  for (int X = 0; X < n; ++X) {
    const FunctorData lifted = compose_functor(G, ic.parfl.gens[static_cast<size_t>(X)].F);
    for (size_t t = 0; t < d.gens.size(); ++t)
      if (base_equal(*c.extent[static_cast<size_t>(X)], *d.gens[t].base) &&
          functor_equal(lifted, d.gens[t].F)) {
        F.obj_map[static_cast<size_t>(X)] = static_cast<int>(t);
        break;
      }
    if (F.obj_map[static_cast<size_t>(X)] < 0)
      throw PreconditionError(
          "transpose_up: functor does not carry generator " + std::to_string(X) +
          " onto a generator of the target");
  }
  F.hom_map.assign(static_cast<size_t>(n), {});
  for (int X = 0; X < n; ++X) {
    F.hom_map[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
    for (int Y = 0; Y < n; ++Y) {
      const FinCategory& A = *c.extent[static_cast<size_t>(X)]->cat;
      const FinCategory& B = *c.extent[static_cast<size_t>(Y)]->cat;
      ProfMorphism m;
      m.component.assign(static_cast<size_t>(A.n_obj), {});
      for (int i = 0; i < A.n_obj; ++i) {
        m.component[static_cast<size_t>(i)].assign(static_cast<size_t>(B.n_obj), {});
        for (int j = 0; j < B.n_obj; ++j) {
          const int a = ic.obj_index[static_cast<size_t>(X)][static_cast<size_t>(i)];
          const int b = ic.obj_index[static_cast<size_t>(Y)][static_cast<size_t>(j)];
          Tab t(static_cast<size_t>(c.hom_val(X, Y, i, j)));
          for (int f = 0; f < c.hom_val(X, Y, i, j); ++f)
            t[static_cast<size_t>(f)] = G.map_mor(a, b, f);
          m.component[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(t);
        }
      }
      F.hom_map[static_cast<size_t>(X)][static_cast<size_t>(Y)] = std::move(m);
    }
  }
  {
    Report rep = check_wfunctor(c, gd, F);
    if (!rep.ok()) throw InvariantError("transpose_up: " + rep.summary());
  }
  return F;
}

std::optional<FunctorData> find_equivalence(FinCategoryPtr a, FinCategoryPtr b,
                                            long long max_candidates) {
  const FinCategory& A = *a;
  const FinCategory& B = *b;
  if (A.n_obj == 0) return (B.n_obj == 0) ? std::optional<FunctorData>(identity_functor(a))
                                          : std::nullopt;
  if (B.n_obj == 0) return std::nullopt;
  long long count = 0;
  std::vector<int> om(static_cast<size_t>(A.n_obj), 0);
  while (true) {
    if (++count > max_candidates)
      throw ResourceError("find_equivalence: candidate bound exceeded");
    bool feasible = true;
    for (int x = 0; x < A.n_obj && feasible; ++x)
      for (int y = 0; y < A.n_obj && feasible; ++y)
        if (A.hom_size(x, y) !=
            B.hom_size(om[static_cast<size_t>(x)], om[static_cast<size_t>(y)]))
          feasible = false;
    if (feasible) {
      // Per-pair bijections on morphisms, by backtracking with identity
      // forcing and composition consistency against already-assigned slots.
      struct Slot {
        int a, b, f;
      };
      std::vector<Slot> slots;
      for (int x = 0; x < A.n_obj; ++x)
        for (int y = 0; y < A.n_obj; ++y)
          for (int f = 0; f < A.hom_size(x, y); ++f)
            if (!(x == y && f == A.id[static_cast<size_t>(x)])) slots.push_back({x, y, f});
      std::vector<std::vector<std::vector<int>>> mor(static_cast<size_t>(A.n_obj));
      std::vector<std::vector<std::vector<char>>> used(static_cast<size_t>(A.n_obj));
      for (int x = 0; x < A.n_obj; ++x) {
        mor[static_cast<size_t>(x)].assign(static_cast<size_t>(A.n_obj), {});
        used[static_cast<size_t>(x)].assign(static_cast<size_t>(A.n_obj), {});
        for (int y = 0; y < A.n_obj; ++y) {
          mor[static_cast<size_t>(x)][static_cast<size_t>(y)].assign(
              static_cast<size_t>(A.hom_size(x, y)), -1);
          used[static_cast<size_t>(x)][static_cast<size_t>(y)].assign(
              static_cast<size_t>(A.hom_size(x, y)), 0);
        }
      }
      bool id_ok = true;
      for (int x = 0; x < A.n_obj; ++x) {
        const int target = B.id[static_cast<size_t>(om[static_cast<size_t>(x)])];
        mor[static_cast<size_t>(x)][static_cast<size_t>(x)]
           [static_cast<size_t>(A.id[static_cast<size_t>(x)])] = target;
        if (used[static_cast<size_t>(x)][static_cast<size_t>(x)][static_cast<size_t>(target)]) {
          id_ok = false;
          break;
        }
        used[static_cast<size_t>(x)][static_cast<size_t>(x)][static_cast<size_t>(target)] = 1;
      }
      std::optional<FunctorData> found;
      std::function<bool(size_t)> rec = [&](size_t s) -> bool {
        if (++count > max_candidates)
          throw ResourceError("find_equivalence: candidate bound exceeded");
        if (s == slots.size()) {
          FunctorData F;
          F.src = a;
          F.dst = b;
          F.obj_map = om;
          F.mor_map = mor;
          F.name = "equivalence";
          if (!check_functor(F).ok()) return false;
          for (int o = 0; o < B.n_obj; ++o) {
            bool hit = false;
            for (int x = 0; x < A.n_obj && !hit; ++x)
              hit = objects_isomorphic(B, om[static_cast<size_t>(x)], o);
            if (!hit) return false;
          }
          found = std::move(F);
          return true;
        }
        const Slot& sl = slots[s];
        for (int cand = 0;
             cand < B.hom_size(om[static_cast<size_t>(sl.a)], om[static_cast<size_t>(sl.b)]);
             ++cand) {
          if (used[static_cast<size_t>(sl.a)][static_cast<size_t>(sl.b)]
                  [static_cast<size_t>(cand)])
            continue;
          bool consistent = true;
          // Check composites with already-assigned slots when the composite
          // slot is itself assigned.
          for (int z = 0; z < A.n_obj && consistent; ++z) {
            for (int g = 0; g < A.hom_size(sl.b, z) && consistent; ++g) {
              const int mg = mor[static_cast<size_t>(sl.b)][static_cast<size_t>(z)]
                                [static_cast<size_t>(g)];
              if (mg < 0) continue;
              const int cc = A.compose(sl.a, sl.b, z, g, sl.f);
              const int mc = mor[static_cast<size_t>(sl.a)][static_cast<size_t>(z)]
                                [static_cast<size_t>(cc)];
              if (mc >= 0 &&
                  mc != B.compose(om[static_cast<size_t>(sl.a)], om[static_cast<size_t>(sl.b)],
                                  om[static_cast<size_t>(z)], mg, cand))
                consistent = false;
            }
            for (int g = 0; g < A.hom_size(z, sl.a) && consistent; ++g) {
              const int mg = mor[static_cast<size_t>(z)][static_cast<size_t>(sl.a)]
                                [static_cast<size_t>(g)];
              if (mg < 0) continue;
              const int cc = A.compose(z, sl.a, sl.b, sl.f, g);
              const int mc = mor[static_cast<size_t>(z)][static_cast<size_t>(sl.b)]
                                [static_cast<size_t>(cc)];
              if (mc >= 0 &&
                  mc != B.compose(om[static_cast<size_t>(z)], om[static_cast<size_t>(sl.a)],
                                  om[static_cast<size_t>(sl.b)], cand, mg))
                consistent = false;
            }
          }
          if (!consistent) continue;
          mor[static_cast<size_t>(sl.a)][static_cast<size_t>(sl.b)][static_cast<size_t>(sl.f)] =
              cand;
          used[static_cast<size_t>(sl.a)][static_cast<size_t>(sl.b)][static_cast<size_t>(cand)] =
              1;
          if (rec(s + 1)) return true;
          mor[static_cast<size_t>(sl.a)][static_cast<size_t>(sl.b)][static_cast<size_t>(sl.f)] =
              -1;
          used[static_cast<size_t>(sl.a)][static_cast<size_t>(sl.b)][static_cast<size_t>(cand)] =
              0;
        }
        return false;
      };
      if (id_ok && rec(0)) return found;
    }
    size_t q = 0;
    while (q < om.size()) {
      if (++om[q] < B.n_obj) break;
      om[q] = 0;
      ++q;
    }
    if (q == om.size()) break;
  }
  return std::nullopt;
}

}  // namespace catkit::wcat
