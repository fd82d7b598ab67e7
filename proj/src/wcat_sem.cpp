#include "catkit/wcat.hpp"

#include <algorithm>
#include <map>

#include "catkit/finset.hpp"

namespace catkit::wcat {

using fincat::check_lex_point;
using fincat::check_set_functor;
using fincat::compose_functor;
using fincat::enumerate_lex_maps;
using fincat::find_nat_iso;
using fincat::LexBase;
using finset::checked_pow;
using lexprof::cell_equal;
using lexprof::check_duality;
using lexprof::check_prof;
using lexprof::check_prof_morphism;
using lexprof::companion;
using lexprof::coend_prof;
using lexprof::conjoint;
using lexprof::enumerate_prof_morphisms;
using lexprof::identity_prof;

namespace {

void merge_with(Report& r, const Report& other, const std::string& prefix) {
  for (const auto& v : other.violations) r.add(prefix + v);
}

}  // namespace

SetFunctor act_S(const LexProf1Cell& M, const SetFunctor& X, long long max_candidates) {
  const FinCategory& A = *M.src->cat;
  const FinCategory& B = *M.dst->cat;
  if (X.src.get() != M.src->cat.get())
    throw PreconditionError("act_S: point does not live on the 1-cell's source base");
  SetFunctor Y;
  Y.src = M.dst->cat;
  Y.name = M.name + "*" + X.name;
  Y.obj_size.assign(static_cast<size_t>(B.n_obj), 0);
  // Per target object: raw pool = disjoint union over a of M(a,b) x X(a).
  std::vector<std::vector<int>> offset(static_cast<size_t>(B.n_obj),
                                       std::vector<int>(static_cast<size_t>(A.n_obj) + 1, 0));
  std::vector<std::vector<int>> raw_class(static_cast<size_t>(B.n_obj));
  std::vector<std::vector<int>> class_rep(static_cast<size_t>(B.n_obj));
  long long total = 0;
  for (int b = 0; b < B.n_obj; ++b) {
    for (int a = 0; a < A.n_obj; ++a)
      offset[static_cast<size_t>(b)][static_cast<size_t>(a) + 1] =
          offset[static_cast<size_t>(b)][static_cast<size_t>(a)] +
          M.val(a, b) * X.obj_size[static_cast<size_t>(a)];
    total += offset[static_cast<size_t>(b)][static_cast<size_t>(A.n_obj)];
    if (total > max_candidates) throw ResourceError("act_S: coend carrier exceeds bound");
  }
  auto raw = [&](int b, int a, int m, int x) {
    return offset[static_cast<size_t>(b)][static_cast<size_t>(a)] +
           m * X.obj_size[static_cast<size_t>(a)] + x;
  };
  for (int b = 0; b < B.n_obj; ++b) {
    finset::Partition part(offset[static_cast<size_t>(b)][static_cast<size_t>(A.n_obj)]);
    for (int a2 = 0; a2 < A.n_obj; ++a2)
      for (int a = 0; a < A.n_obj; ++a)
        for (int al = 0; al < A.hom_size(a2, a); ++al)
          for (int m = 0; m < M.val(a, b); ++m)
            for (int x2 = 0; x2 < X.obj_size[static_cast<size_t>(a2)]; ++x2)
              part.unite(raw(b, a2, M.lact_tab(a2, a, b, al)[static_cast<size_t>(m)], x2),
                         raw(b, a, m, X.table(a2, a, al)[static_cast<size_t>(x2)]));
    class_rep[static_cast<size_t>(b)] = part.representatives();
    Y.obj_size[static_cast<size_t>(b)] =
        static_cast<int>(class_rep[static_cast<size_t>(b)].size());
    raw_class[static_cast<size_t>(b)].assign(
        static_cast<size_t>(part.carrier_size()), -1);
    for (int v = 0; v < part.carrier_size(); ++v) {
      const int root = part.find(v);
      const auto& reps = class_rep[static_cast<size_t>(b)];
      raw_class[static_cast<size_t>(b)][static_cast<size_t>(v)] = static_cast<int>(
          std::lower_bound(reps.begin(), reps.end(), root) - reps.begin());
    }
  }
  Y.mor.assign(static_cast<size_t>(B.n_obj), {});
  for (int b = 0; b < B.n_obj; ++b) {
    Y.mor[static_cast<size_t>(b)].assign(static_cast<size_t>(B.n_obj), {});
    for (int b2 = 0; b2 < B.n_obj; ++b2) {
      Y.mor[static_cast<size_t>(b)][static_cast<size_t>(b2)].assign(
          static_cast<size_t>(B.hom_size(b, b2)),
          std::vector<int>(static_cast<size_t>(Y.obj_size[static_cast<size_t>(b)]), -1));
      for (int be = 0; be < B.hom_size(b, b2); ++be) {
        auto& tab = Y.mor[static_cast<size_t>(b)][static_cast<size_t>(b2)][static_cast<size_t>(be)];
        for (int a = 0; a < A.n_obj; ++a)
          for (int m = 0; m < M.val(a, b); ++m)
            for (int x = 0; x < X.obj_size[static_cast<size_t>(a)]; ++x) {
              const int src_cls = raw_class[static_cast<size_t>(b)][static_cast<size_t>(
                  raw(b, a, m, x))];
              const int dst_cls = raw_class[static_cast<size_t>(b2)][static_cast<size_t>(
                  raw(b2, a, M.ract_tab(a, b, b2, be)[static_cast<size_t>(m)], x))];
              if (tab[static_cast<size_t>(src_cls)] >= 0 &&
                  tab[static_cast<size_t>(src_cls)] != dst_cls)
                throw InvariantError("act_S: induced action does not descend to the coend");
              tab[static_cast<size_t>(src_cls)] = dst_cls;
            }
      }
    }
  }
  {
    Report rep = check_set_functor(Y);
    if (!rep.ok()) throw InvariantError("act_S: " + rep.summary());
    rep = check_lex_point(*M.dst, Y);
    if (!rep.ok()) throw InvariantError("act_S: result is not a lex point: " + rep.summary());
  }
  return Y;
}

namespace {

/// The power point of carrier x over a truncated base: values x^n with
/// reindexing actions, elements coded little-endian.
SetFunctor power_point(const LexBasePtr& base, int x) {
  const FinCategory& A = *base->cat;
  SetFunctor P;
  P.src = base->cat;
  P.name = "power" + std::to_string(x);
  P.obj_size.assign(static_cast<size_t>(A.n_obj), 0);
  for (int n = 0; n < A.n_obj; ++n)
    P.obj_size[static_cast<size_t>(n)] = static_cast<int>(checked_pow(x, n, 1LL << 30));
  P.mor.assign(static_cast<size_t>(A.n_obj), {});
  for (int i = 0; i < A.n_obj; ++i) {
    P.mor[static_cast<size_t>(i)].assign(static_cast<size_t>(A.n_obj), {});
    for (int j = 0; j < A.n_obj; ++j) {
      P.mor[static_cast<size_t>(i)][static_cast<size_t>(j)].assign(
          static_cast<size_t>(A.hom_size(i, j)),
          std::vector<int>(static_cast<size_t>(P.obj_size[static_cast<size_t>(i)]), 0));
      for (int th = 0; th < A.hom_size(i, j); ++th)
        for (int v = 0; v < P.obj_size[static_cast<size_t>(i)]; ++v)
          P.mor[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(th)]
               [static_cast<size_t>(v)] = A.compose(x, i, j, th, v);
    }
  }
  return P;
}

SemanticsResult semantics_lattice(const WCategory& c, int carrier_bound,
                                  long long max_candidates) {
  const int n = c.n_obj();
  std::vector<std::vector<SetFunctor>> points(static_cast<size_t>(n));
  for (int X = 0; X < n; ++X)
    points[static_cast<size_t>(X)] = fincat::enumerate_lex_points(
        *c.extent[static_cast<size_t>(X)], carrier_bound, max_candidates);
  SemanticsResult out;
  long long count = 0;
  std::vector<int> pick(static_cast<size_t>(n), 0);
  while (true) {
    if (++count > max_candidates) throw ResourceError("semantics: candidate bound exceeded");
    bool feasible = true;
    for (int X = 0; X < n && feasible; ++X) {
      if (points[static_cast<size_t>(X)].empty()) {
        feasible = false;
        break;
      }
      const SetFunctor& PX =
          points[static_cast<size_t>(X)][static_cast<size_t>(pick[static_cast<size_t>(X)])];
      for (int Y = 0; Y < n && feasible; ++Y) {
        const SetFunctor& PY =
            points[static_cast<size_t>(Y)][static_cast<size_t>(pick[static_cast<size_t>(Y)])];
        const int nA = c.extent[static_cast<size_t>(X)]->cat->n_obj;
        const int nB = c.extent[static_cast<size_t>(Y)]->cat->n_obj;
        for (int i = 0; i < nA && feasible; ++i)
          for (int j = 0; j < nB; ++j)
            if (c.hom_val(X, Y, i, j) > 0 && PX.obj_size[static_cast<size_t>(i)] == 1 &&
                PY.obj_size[static_cast<size_t>(j)] == 0) {
              feasible = false;
              break;
            }
      }
    }
    if (feasible) {
      SemFunctor F;
      for (int X = 0; X < n; ++X)
        F.point.push_back(
            points[static_cast<size_t>(X)][static_cast<size_t>(pick[static_cast<size_t>(X)])]);
      F.phi.assign(static_cast<size_t>(n), {});
      for (int X = 0; X < n; ++X) {
        F.phi[static_cast<size_t>(X)].assign(static_cast<size_t>(n), {});
        for (int Y = 0; Y < n; ++Y) {
          const int nA = c.extent[static_cast<size_t>(X)]->cat->n_obj;
          const int nB = c.extent[static_cast<size_t>(Y)]->cat->n_obj;
          auto& box = F.phi[static_cast<size_t>(X)][static_cast<size_t>(Y)];
          box.assign(static_cast<size_t>(nA), {});
          for (int i = 0; i < nA; ++i) {
            box[static_cast<size_t>(i)].assign(static_cast<size_t>(nB), {});
            for (int j = 0; j < nB; ++j) {
              const Tab one = (F.point[static_cast<size_t>(X)].obj_size[static_cast<size_t>(i)] ==
                               1)
                                  ? Tab{0}
                                  : Tab{};
              box[static_cast<size_t>(i)][static_cast<size_t>(j)].assign(
                  static_cast<size_t>(c.hom_val(X, Y, i, j)), one);
            }
          }
        }
      }
      out.objects.push_back(std::move(F));
    }
    size_t q = 0;
    while (q < pick.size()) {
      if (++pick[q] < static_cast<int>(points[q].size())) break;
      pick[q] = 0;
      ++q;
    }
    if (q == pick.size() || pick.empty()) break;
  }
  const int m = static_cast<int>(out.objects.size());
  FinCategory& cat = out.cat;
  cat.n_obj = m;
  cat.name = "semantics(" + c.name + ")";
  cat.hom.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
  out.mor.assign(static_cast<size_t>(m), {});
  for (int u = 0; u < m; ++u) {
    out.mor[static_cast<size_t>(u)].assign(static_cast<size_t>(m), {});
    for (int v = 0; v < m; ++v) {
      bool below = true;
      for (int X = 0; X < n && below; ++X) {
        const auto& FP = out.objects[static_cast<size_t>(u)].point[static_cast<size_t>(X)];
        const auto& GP = out.objects[static_cast<size_t>(v)].point[static_cast<size_t>(X)];
        for (size_t i = 0; i < FP.obj_size.size(); ++i)
          if (FP.obj_size[i] == 1 && GP.obj_size[i] == 0) {
            below = false;
            break;
          }
      }
      if (below) {
        cat.hom[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        SemMorphism t;
        t.nat.assign(static_cast<size_t>(n), {});
        for (int X = 0; X < n; ++X) {
          const auto& FP = out.objects[static_cast<size_t>(u)].point[static_cast<size_t>(X)];
          for (size_t i = 0; i < FP.obj_size.size(); ++i)
            t.nat[static_cast<size_t>(X)].push_back(FP.obj_size[i] == 1 ? Tab{0} : Tab{});
        }
        out.mor[static_cast<size_t>(u)][static_cast<size_t>(v)].push_back(std::move(t));
      }
    }
  }
  cat.id.assign(static_cast<size_t>(m), 0);
  fincat::alloc_comp(cat);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int d = 0; d < m; ++d)
        if (cat.hom_size(a, b) == 1 && cat.hom_size(b, d) == 1)
          cat.comp[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(d)] = {0};
  {
    Report rep = fincat::check_category(cat);
    if (!rep.ok()) throw InvariantError("semantics: " + rep.summary());
  }
  return out;
}

SemanticsResult semantics_trunc(const WCategory& c, int carrier_bound, long long max_candidates) {
  const LexBasePtr base = c.extent[0];
  const FinCategory& A = *base->cat;
  const int N = base->max_arity;
  if (carrier_bound > N)
    throw PreconditionError(
        "semantics: carrier bound exceeds the arity truncation of the extent");
  const LexProf1Cell& T = c.hom[0][0];
  const ProfMorphism& io = c.iota[0];
  long long count = 0;
  struct Model {
    int carrier;
    std::vector<int> a;  // structure map T(x,1) -> [x]
    SemFunctor fun;
  };
  std::vector<Model> models;
  for (int x = 0; x <= carrier_bound; ++x) {
    if (x == 0) {
      bool feasible = true;
      for (int mm = 1; mm <= N && feasible; ++mm)
        if (T.val(0, mm) > 0) feasible = false;
      if (!feasible) continue;
    }
    // Pin the structure map on the image of iota at the tautological points.
    std::vector<int> pin(static_cast<size_t>(T.val(x, 1)), -1);
    bool consistent = true;
    for (int th = 0; th < A.hom_size(x, 1) && consistent; ++th) {
      const int elt = io.component[static_cast<size_t>(x)][1][static_cast<size_t>(th)];
      if (pin[static_cast<size_t>(elt)] >= 0 && pin[static_cast<size_t>(elt)] != th)
        consistent = false;
      pin[static_cast<size_t>(elt)] = th;
    }
    if (!consistent) continue;
    std::vector<int> free_slots;
    for (int t = 0; t < T.val(x, 1); ++t)
      if (pin[static_cast<size_t>(t)] < 0) free_slots.push_back(t);
    if (x == 0 && !free_slots.empty()) continue;
    std::vector<int> sel(free_slots.size(), 0);
    while (true) {
      if (++count > max_candidates) throw ResourceError("semantics: candidate bound exceeded");
      std::vector<int> a = pin;
      for (size_t u = 0; u < free_slots.size(); ++u)
        a[static_cast<size_t>(free_slots[u])] = sel[u];
      // Build the hom tables forced by the structure map.
      SemFunctor F;
      F.point = {power_point(base, x)};
      const SetFunctor& P = F.point[0];
      std::vector<long long> xpow(static_cast<size_t>(N) + 1, 1);
      for (int u = 1; u <= N; ++u) xpow[static_cast<size_t>(u)] = xpow[static_cast<size_t>(u) - 1] * x;
      F.phi.assign(1, {});
      F.phi[0].assign(1, {});
      auto& box = F.phi[0][0];
      box.assign(static_cast<size_t>(A.n_obj), {});
      for (int nn = 0; nn < A.n_obj; ++nn) {
        box[static_cast<size_t>(nn)].assign(static_cast<size_t>(A.n_obj), {});
        for (int mm = 0; mm < A.n_obj; ++mm) {
          box[static_cast<size_t>(nn)][static_cast<size_t>(mm)].assign(
              static_cast<size_t>(T.val(nn, mm)),
              Tab(static_cast<size_t>(P.obj_size[static_cast<size_t>(nn)]), 0));
          for (int t = 0; t < T.val(nn, mm); ++t) {
            Tab& tab = box[static_cast<size_t>(nn)][static_cast<size_t>(mm)]
                          [static_cast<size_t>(t)];
            for (int v = 0; v < P.obj_size[static_cast<size_t>(nn)]; ++v) {
              long long out_code = 0;
              for (int rcomp = 0; rcomp < mm; ++rcomp) {
                const int s = T.ract_tab(nn, mm, 1, rcomp)[static_cast<size_t>(t)];
                const int w = T.lact_tab(x, nn, 1, v)[static_cast<size_t>(s)];
                out_code += static_cast<long long>(a[static_cast<size_t>(w)]) *
                            xpow[static_cast<size_t>(rcomp)];
              }
              tab[static_cast<size_t>(v)] = static_cast<int>(out_code);
            }
          }
        }
      }
      // Verify: identities, both actions, and composition.
      bool good = true;
      for (int i = 0; i < A.n_obj && good; ++i)
        for (int j = 0; j < A.n_obj && good; ++j)
          for (int th = 0; th < A.hom_size(i, j); ++th)
            if (box[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(
                    io.component[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                [static_cast<size_t>(th)])] != P.table(i, j, th)) {
              good = false;
              break;
            }
      for (int i2 = 0; i2 < A.n_obj && good; ++i2)
        for (int i = 0; i < A.n_obj && good; ++i)
          for (int al = 0; al < A.hom_size(i2, i) && good; ++al)
            for (int j = 0; j < A.n_obj && good; ++j)
              for (int t = 0; t < T.val(i, j); ++t) {
                const Tab& lhs = box[static_cast<size_t>(i2)][static_cast<size_t>(j)]
                                    [static_cast<size_t>(
                                        T.lact_tab(i2, i, j, al)[static_cast<size_t>(t)])];
                const Tab& rhs = box[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                    [static_cast<size_t>(t)];
                const auto& re = P.table(i2, i, al);
                for (int v = 0; v < P.obj_size[static_cast<size_t>(i2)]; ++v)
                  if (lhs[static_cast<size_t>(v)] != rhs[static_cast<size_t>(re[static_cast<size_t>(v)])]) {
                    good = false;
                    break;
                  }
                if (!good) break;
              }
      for (int i = 0; i < A.n_obj && good; ++i)
        for (int j = 0; j < A.n_obj && good; ++j)
          for (int j2 = 0; j2 < A.n_obj && good; ++j2)
            for (int be = 0; be < A.hom_size(j, j2) && good; ++be)
              for (int t = 0; t < T.val(i, j); ++t) {
                const Tab& lhs = box[static_cast<size_t>(i)][static_cast<size_t>(j2)]
                                    [static_cast<size_t>(
                                        T.ract_tab(i, j, j2, be)[static_cast<size_t>(t)])];
                const Tab& rhs = box[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                    [static_cast<size_t>(t)];
                const auto& po = P.table(j, j2, be);
                for (int v = 0; v < P.obj_size[static_cast<size_t>(i)]; ++v)
                  if (lhs[static_cast<size_t>(v)] !=
                      po[static_cast<size_t>(rhs[static_cast<size_t>(v)])]) {
                    good = false;
                    break;
                  }
                if (!good) break;
              }
      for (int i = 0; i < A.n_obj && good; ++i)
        for (int j = 0; j < A.n_obj && good; ++j)
          for (int k = 0; k < A.n_obj && good; ++k)
            for (int g = 0; g < T.val(j, k) && good; ++g)
              for (int f = 0; f < T.val(i, j); ++f) {
                const Tab& lhs = box[static_cast<size_t>(i)][static_cast<size_t>(k)]
                                    [static_cast<size_t>(c.compose(0, 0, 0, i, j, k, g, f))];
                const Tab& tg = box[static_cast<size_t>(j)][static_cast<size_t>(k)]
                                   [static_cast<size_t>(g)];
                const Tab& tf = box[static_cast<size_t>(i)][static_cast<size_t>(j)]
                                   [static_cast<size_t>(f)];
                for (int v = 0; v < P.obj_size[static_cast<size_t>(i)]; ++v)
                  if (lhs[static_cast<size_t>(v)] !=
                      tg[static_cast<size_t>(tf[static_cast<size_t>(v)])]) {
                    good = false;
                    break;
                  }
                if (!good) break;
              }
      if (good) models.push_back({x, a, std::move(F)});
      size_t p = 0;
      while (p < sel.size()) {
        if (++sel[p] < x) break;
        sel[p] = 0;
        ++p;
      }
      if (p == sel.size() || sel.empty()) break;
    }
  }
  // Morphisms: componentwise powers of structure-compatible carrier maps.
  SemanticsResult out;
  const int m = static_cast<int>(models.size());
  std::vector<std::vector<std::vector<std::vector<int>>>> hmaps(static_cast<size_t>(m));
  for (int u = 0; u < m; ++u) {
    hmaps[static_cast<size_t>(u)].assign(static_cast<size_t>(m), {});
    for (int v = 0; v < m; ++v) {
      const Model& FM = models[static_cast<size_t>(u)];
      const Model& GM = models[static_cast<size_t>(v)];
      const int x = FM.carrier;
      const int y = GM.carrier;
      if (x > 0 && y == 0) continue;
      std::vector<int> h(static_cast<size_t>(x), 0);
      while (true) {
        if (++count > max_candidates) throw ResourceError("semantics: candidate bound exceeded");
        bool good = true;
        // h^n commutes with every hom element's table.
        std::vector<std::vector<int>> hn(static_cast<size_t>(A.n_obj));
        for (int nn = 0; nn < A.n_obj && good; ++nn) {
          const int dom = FM.fun.point[0].obj_size[static_cast<size_t>(nn)];
          hn[static_cast<size_t>(nn)].assign(static_cast<size_t>(dom), 0);
          for (int v2 = 0; v2 < dom; ++v2) {
            long long code = 0;
            long long ypow = 1;
            int rem = v2;
            for (int d = 0; d < nn; ++d) {
              code += static_cast<long long>(h[static_cast<size_t>(rem % std::max(x, 1))]) * ypow;
              rem /= std::max(x, 1);
              ypow *= y;
            }
            hn[static_cast<size_t>(nn)][static_cast<size_t>(v2)] = static_cast<int>(code);
          }
        }
        for (int nn = 0; nn < A.n_obj && good; ++nn)
          for (int mm = 0; mm < A.n_obj && good; ++mm)
            for (int t = 0; t < T.val(nn, mm); ++t) {
              const Tab& tf = FM.fun.phi[0][0][static_cast<size_t>(nn)][static_cast<size_t>(mm)]
                                        [static_cast<size_t>(t)];
              const Tab& tg = GM.fun.phi[0][0][static_cast<size_t>(nn)][static_cast<size_t>(mm)]
                                        [static_cast<size_t>(t)];
              for (int v2 = 0; v2 < FM.fun.point[0].obj_size[static_cast<size_t>(nn)]; ++v2)
                if (hn[static_cast<size_t>(mm)][static_cast<size_t>(tf[static_cast<size_t>(v2)])] !=
                    tg[static_cast<size_t>(hn[static_cast<size_t>(nn)][static_cast<size_t>(v2)])]) {
                  good = false;
                  break;
                }
              if (!good) break;
            }
        if (good) hmaps[static_cast<size_t>(u)][static_cast<size_t>(v)].push_back(h);
        size_t p = 0;
        while (p < h.size()) {
          if (++h[p] < y) break;
          h[p] = 0;
          ++p;
        }
        if (p == h.size() || h.empty()) break;
      }
    }
  }
  FinCategory& cat = out.cat;
  cat.n_obj = m;
  cat.name = "semantics(" + c.name + ")";
  cat.hom.assign(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m), 0));
  out.mor.assign(static_cast<size_t>(m), {});
  for (int u = 0; u < m; ++u) {
    out.mor[static_cast<size_t>(u)].assign(static_cast<size_t>(m), {});
    for (int v = 0; v < m; ++v) {
      cat.hom[static_cast<size_t>(u)][static_cast<size_t>(v)] =
          static_cast<int>(hmaps[static_cast<size_t>(u)][static_cast<size_t>(v)].size());
      for (const auto& h : hmaps[static_cast<size_t>(u)][static_cast<size_t>(v)]) {
        SemMorphism t;
        t.nat.assign(1, {});
        const Model& FM = models[static_cast<size_t>(u)];
        const int y = models[static_cast<size_t>(v)].carrier;
        const int x = FM.carrier;
        for (int nn = 0; nn < A.n_obj; ++nn) {
          const int dom = FM.fun.point[0].obj_size[static_cast<size_t>(nn)];
          Tab tab(static_cast<size_t>(dom), 0);
          for (int v2 = 0; v2 < dom; ++v2) {
            long long code = 0;
            long long ypow = 1;
            int rem = v2;
            for (int d = 0; d < nn; ++d) {
              code += static_cast<long long>(h[static_cast<size_t>(rem % std::max(x, 1))]) * ypow;
              rem /= std::max(x, 1);
              ypow *= y;
            }
            tab[static_cast<size_t>(v2)] = static_cast<int>(code);
          }
          t.nat[0].push_back(std::move(tab));
        }
        out.mor[static_cast<size_t>(u)][static_cast<size_t>(v)].push_back(std::move(t));
      }
    }
  }
  cat.id.assign(static_cast<size_t>(m), -1);
  auto find_h = [&](int u, int v, const std::vector<int>& h) {
    const auto& list = hmaps[static_cast<size_t>(u)][static_cast<size_t>(v)];
    for (size_t w = 0; w < list.size(); ++w)
      if (list[w] == h) return static_cast<int>(w);
    throw InvariantError("semantics: composite carrier map not found");
  };
  for (int u = 0; u < m; ++u) {
    std::vector<int> idh(static_cast<size_t>(models[static_cast<size_t>(u)].carrier));
    for (size_t w = 0; w < idh.size(); ++w) idh[w] = static_cast<int>(w);
    cat.id[static_cast<size_t>(u)] = find_h(u, u, idh);
  }
  fincat::alloc_comp(cat);
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < m; ++v)
      for (int w = 0; w < m; ++w)
        for (int g = 0; g < cat.hom_size(v, w); ++g)
          for (int f = 0; f < cat.hom_size(u, v); ++f) {
            const auto& hg = hmaps[static_cast<size_t>(v)][static_cast<size_t>(w)]
                                  [static_cast<size_t>(g)];
            const auto& hf = hmaps[static_cast<size_t>(u)][static_cast<size_t>(v)]
                                  [static_cast<size_t>(f)];
            std::vector<int> hc(hf.size());
            for (size_t z = 0; z < hf.size(); ++z)
              hc[z] = hg[static_cast<size_t>(hf[z])];
            cat.comp[static_cast<size_t>(u)][static_cast<size_t>(v)][static_cast<size_t>(w)]
                    [static_cast<size_t>(g) * static_cast<size_t>(cat.hom_size(u, v)) +
                     static_cast<size_t>(f)] = find_h(u, w, hc);
          }
  {
    Report rep = fincat::check_category(cat);
    if (!rep.ok()) throw InvariantError("semantics: " + rep.summary());
  }
  for (auto& mdl : models) out.objects.push_back(std::move(mdl.fun));
  return out;
}

}  // namespace

SemanticsResult semantics(const WCategory& c, int carrier_bound, long long max_candidates) {
  bool all_lattice = true;
  for (const auto& e : c.extent)
    if (e->kind != fincat::BaseKind::lattice) all_lattice = false;
  if (all_lattice) return semantics_lattice(c, carrier_bound, max_candidates);
  if (c.n_obj() == 1 && c.extent[0]->kind == fincat::BaseKind::trunc_arity)
    return semantics_trunc(c, carrier_bound, max_candidates);
  throw PreconditionError(
      "semantics: supported inputs are lattice-extent W-categories and one-object "
      "truncated-extent W-categories");
}

Report is_tensor(const WCategory& c, const TensorWitness& w, long long max_candidates) {
  Report r;
  const int n = c.n_obj();
  if (w.X < 0 || w.X >= n || w.WX < 0 || w.WX >= n) {
    r.add("tensor witness: object indices out of range");
    return r;
  }
  if (w.W.src.get() != c.extent[static_cast<size_t>(w.X)].get() ||
      w.W.dst.get() != c.extent[static_cast<size_t>(w.WX)].get()) {
    r.add("tensor witness: 1-cell boundaries do not match the object extents");
    return r;
  }
  merge_with(r, check_prof(w.W), "tensor witness 1-cell: ");
  if (!r.ok()) return r;
  merge_with(r,
             check_prof_morphism(w.W,
                                 c.hom[static_cast<size_t>(w.X)][static_cast<size_t>(w.WX)], w.u),
             "tensor witness u: ");
  if (!r.ok()) return r;

  if (w.dual.has_value() && w.ustar.has_value()) {
    const lexprof::DualityCertificate& cert = *w.dual;
    if (!cell_equal(cert.W, w.W)) {
      r.add("tensor witness: duality certificate is for a different 1-cell");
      return r;
    }
    merge_with(r, check_duality(cert), "tensor witness duality: ");
    merge_with(r,
               check_prof_morphism(cert.Wstar,
                                   c.hom[static_cast<size_t>(w.WX)][static_cast<size_t>(w.X)],
                                   *w.ustar),
               "tensor witness u*: ");
    if (!r.ok()) return r;
    const FinCategory& A = *c.extent[static_cast<size_t>(w.X)]->cat;
    const FinCategory& B = *c.extent[static_cast<size_t>(w.WX)]->cat;
    auto uval = [&](int a, int b, int e) {
      return w.u.component[static_cast<size_t>(a)][static_cast<size_t>(b)]
                          [static_cast<size_t>(e)];
    };
    auto usval = [&](int b, int a, int e) {
      return w.ustar->component[static_cast<size_t>(b)][static_cast<size_t>(a)]
                               [static_cast<size_t>(e)];
    };
    for (int b1 = 0; b1 < B.n_obj; ++b1)
      for (int b2 = 0; b2 < B.n_obj; ++b2)
        for (int be = 0; be < B.hom_size(b1, b2); ++be) {
          const int cls = cert.eta.component[static_cast<size_t>(b1)][static_cast<size_t>(b2)]
                                            [static_cast<size_t>(be)];
          const auto rep = cert.WWstar.rep(b1, b2, cls);
          const int lhs = c.compose(w.WX, w.X, w.WX, b1, rep.b, b2, uval(rep.b, b2, rep.x),
                                    usval(b1, rep.b, rep.y));
          if (lhs != c.id_elt(w.WX, b1, b2, be)) {
            r.add("tensor unit square fails at (" + std::to_string(b1) + "," +
                  std::to_string(b2) + ") arrow " + std::to_string(be));
            return r;
          }
        }
    for (int a1 = 0; a1 < A.n_obj; ++a1)
      for (int a2 = 0; a2 < A.n_obj; ++a2)
        for (int k = 0; k < cert.WstarW.cell.val(a1, a2); ++k) {
          const auto rep = cert.WstarW.rep(a1, a2, k);
          const int lhs = c.compose(w.X, w.WX, w.X, a1, rep.b, a2, usval(rep.b, a2, rep.x),
                                    uval(a1, rep.b, rep.y));
          const int eps = cert.eps.component[static_cast<size_t>(a1)][static_cast<size_t>(a2)]
                                            [static_cast<size_t>(k)];
          if (lhs != c.id_elt(w.X, a1, a2, eps)) {
            r.add("tensor counit square fails at (" + std::to_string(a1) + "," +
                  std::to_string(a2) + ") element " + std::to_string(k));
            return r;
          }
        }
    return r;
  }

  // Bounded verification of the universal bijection over a finite test family.
  for (int Z = 0; Z < n; ++Z) {
    std::vector<LexProf1Cell> tests;
    const LexBasePtr eWX = c.extent[static_cast<size_t>(w.WX)];
    const LexBasePtr eZ = c.extent[static_cast<size_t>(Z)];
    if (eWX.get() == eZ.get()) tests.push_back(identity_prof(eWX));
    if (eWX->kind == eZ->kind) {
      for (const auto& F : enumerate_lex_maps(*eZ, *eWX))
        tests.push_back(companion(eZ, eWX, F));
      for (const auto& F : enumerate_lex_maps(*eWX, *eZ))
        tests.push_back(conjoint(eWX, eZ, F));
    }
    const FinCategory& A = *c.extent[static_cast<size_t>(w.X)]->cat;
    const FinCategory& CZ = *eZ->cat;
    for (size_t ti = 0; ti < tests.size(); ++ti) {
      const LexProf1Cell& U = tests[ti];
      const CoendComposite UW = coend_prof(U, w.W);
      const auto lhs = enumerate_prof_morphisms(
          U, c.hom[static_cast<size_t>(w.WX)][static_cast<size_t>(Z)], max_candidates);
      const auto rhs = enumerate_prof_morphisms(
          UW.cell, c.hom[static_cast<size_t>(w.X)][static_cast<size_t>(Z)], max_candidates);
      std::vector<ProfMorphism> images;
      for (const ProfMorphism& t : lhs) {
        ProfMorphism s;
        s.component.assign(static_cast<size_t>(A.n_obj), {});
        for (int a = 0; a < A.n_obj; ++a) {
          s.component[static_cast<size_t>(a)].assign(static_cast<size_t>(CZ.n_obj), {});
          for (int z = 0; z < CZ.n_obj; ++z) {
            Tab tab(static_cast<size_t>(UW.cell.val(a, z)));
            for (int k = 0; k < UW.cell.val(a, z); ++k) {
              const auto rep = UW.rep(a, z, k);
              tab[static_cast<size_t>(k)] = c.compose(
                  w.X, w.WX, Z, a, rep.b, z,
                  t.component[static_cast<size_t>(rep.b)][static_cast<size_t>(z)]
                             [static_cast<size_t>(rep.x)],
                  w.u.component[static_cast<size_t>(a)][static_cast<size_t>(rep.b)]
                               [static_cast<size_t>(rep.y)]);
            }
            s.component[static_cast<size_t>(a)][static_cast<size_t>(z)] = std::move(tab);
          }
        }
        images.push_back(std::move(s));
      }
      bool injective = true;
      for (size_t u = 0; u < images.size() && injective; ++u)
        for (size_t v = u + 1; v < images.size(); ++v)
          if (images[u].component == images[v].component) {
            injective = false;
            break;
          }
      bool contained = true;
      for (const auto& s : images) {
        bool hit = false;
        for (const auto& cand : rhs)
          if (cand.component == s.component) {
            hit = true;
            break;
          }
        if (!hit) contained = false;
      }
      if (!injective || !contained || images.size() != rhs.size())
        r.add("bounded tensor bijection fails at target object " + std::to_string(Z) +
              ", test 1-cell " + std::to_string(static_cast<int>(ti)) + " (" +
              std::to_string(images.size()) + " transposes vs " + std::to_string(rhs.size()) +
              " 2-cells)");
    }
  }
  return r;
}

Report check_absolute_tensored(const WCategory& c, const std::vector<LexBasePtr>& family,
                               long long max_candidates) {
  Report r;
  const IntegrateResult ic = integrate(c);
  for (int X = 0; X < c.n_obj(); ++X) {
    for (size_t fa = 0; fa < family.size(); ++fa) {
      const LexBasePtr& A = family[fa];
      if (A->kind != c.extent[static_cast<size_t>(X)]->kind) continue;
      const auto maps = enumerate_lex_maps(*A, *c.extent[static_cast<size_t>(X)]);
      for (size_t mi = 0; mi < maps.size(); ++mi) {
        const FunctorData composite =
            compose_functor(ic.parfl.gens[static_cast<size_t>(X)].F, maps[mi]);
        bool found = false;
        for (int Y = 0; Y < c.n_obj() && !found; ++Y) {
          if (!base_equal(*c.extent[static_cast<size_t>(Y)], *A)) continue;
          if (find_nat_iso(composite, ic.parfl.gens[static_cast<size_t>(Y)].F, max_candidates)
                  .has_value())
            found = true;
        }
        if (!found)
          r.add("object " + std::to_string(X) + " has no tensor witness for lex map " +
                std::to_string(static_cast<int>(mi)) + " from family base '" + A->name + "'");
      }
    }
  }
  return r;
}

}  // namespace catkit::wcat
