#include "catkit/lexprof.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace catkit::lexprof {

using fincat::FinCategory;
using finset::pair_index;

void alloc_cell(LexProf1Cell& cell) {
  const FinCategory& A = *cell.src->cat;
  const FinCategory& B = *cell.dst->cat;
  cell.lact.assign(static_cast<size_t>(A.n_obj), {});
  for (int a2 = 0; a2 < A.n_obj; ++a2) {
    cell.lact[static_cast<size_t>(a2)].assign(static_cast<size_t>(A.n_obj), {});
    for (int a = 0; a < A.n_obj; ++a) {
      cell.lact[static_cast<size_t>(a2)][static_cast<size_t>(a)].assign(
          static_cast<size_t>(B.n_obj), {});
      for (int b = 0; b < B.n_obj; ++b)
        cell.lact[static_cast<size_t>(a2)][static_cast<size_t>(a)][static_cast<size_t>(b)].assign(
            static_cast<size_t>(A.hom_size(a2, a)),
            Tab(static_cast<size_t>(cell.val(a, b)), -1));
    }
  }
  cell.ract.assign(static_cast<size_t>(A.n_obj), {});
  for (int a = 0; a < A.n_obj; ++a) {
    cell.ract[static_cast<size_t>(a)].assign(static_cast<size_t>(B.n_obj), {});
    for (int b = 0; b < B.n_obj; ++b) {
      cell.ract[static_cast<size_t>(a)][static_cast<size_t>(b)].assign(
          static_cast<size_t>(B.n_obj), {});
      for (int b2 = 0; b2 < B.n_obj; ++b2)
        cell.ract[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(b2)].assign(
            static_cast<size_t>(B.hom_size(b, b2)),
            Tab(static_cast<size_t>(cell.val(a, b)), -1));
    }
  }
}

namespace {
bool table_in_range(const Tab& t, int dom, int cod) {
  if (static_cast<int>(t.size()) != dom) return false;
  for (int v : t)
    if (v < 0 || v >= cod) return false;
  return true;
}
}  // namespace

Report check_prof_cell(const LexProf1Cell& cell) {
  Report r;
  const FinCategory& A = *cell.src->cat;
  const FinCategory& B = *cell.dst->cat;
  if (static_cast<int>(cell.value.size()) != A.n_obj) {
    r.add("cell '" + cell.name + "': value shape wrong");
    return r;
  }
  for (const auto& row : cell.value)
    if (static_cast<int>(row.size()) != B.n_obj) {
      r.add("cell '" + cell.name + "': value shape wrong");
      return r;
    }
  for (int a2 = 0; a2 < A.n_obj; ++a2)
    for (int a = 0; a < A.n_obj; ++a)
      for (int b = 0; b < B.n_obj; ++b)
        for (int al = 0; al < A.hom_size(a2, a); ++al)
          if (!table_in_range(cell.lact_tab(a2, a, b, al), cell.val(a, b), cell.val(a2, b))) {
            r.add("cell '" + cell.name + "': lact table malformed at (" + std::to_string(a2) +
                  "," + std::to_string(a) + "," + std::to_string(b) + ")");
            return r;
          }
  for (int a = 0; a < A.n_obj; ++a)
    for (int b = 0; b < B.n_obj; ++b)
      for (int b2 = 0; b2 < B.n_obj; ++b2)
        for (int be = 0; be < B.hom_size(b, b2); ++be)
          if (!table_in_range(cell.ract_tab(a, b, b2, be), cell.val(a, b), cell.val(a, b2))) {
            r.add("cell '" + cell.name + "': ract table malformed at (" + std::to_string(a) +
                  "," + std::to_string(b) + "," + std::to_string(b2) + ")");
            return r;
          }
  // identities act as identities
  for (int a = 0; a < A.n_obj; ++a)
    for (int b = 0; b < B.n_obj; ++b) {
      const Tab& tl = cell.lact_tab(a, a, b, A.id[static_cast<size_t>(a)]);
      const Tab& tr = cell.ract_tab(a, b, b, B.id[static_cast<size_t>(b)]);
      for (int v = 0; v < cell.val(a, b); ++v) {
        if (tl[static_cast<size_t>(v)] != v)
          r.add("lact identity fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        if (tr[static_cast<size_t>(v)] != v)
          r.add("ract identity fails at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      }
    }
  // contravariant functoriality of lact
  for (int a3 = 0; a3 < A.n_obj; ++a3)
    for (int a2 = 0; a2 < A.n_obj; ++a2)
      for (int a1 = 0; a1 < A.n_obj; ++a1)
        for (int al2 = 0; al2 < A.hom_size(a3, a2); ++al2)
          for (int al1 = 0; al1 < A.hom_size(a2, a1); ++al1) {
            int comp = A.compose(a3, a2, a1, al1, al2);
            for (int b = 0; b < B.n_obj; ++b) {
              const Tab& t12 = cell.lact_tab(a3, a1, b, comp);
              const Tab& t1 = cell.lact_tab(a2, a1, b, al1);
              const Tab& t2 = cell.lact_tab(a3, a2, b, al2);
              for (int v = 0; v < cell.val(a1, b); ++v)
                if (t12[static_cast<size_t>(v)] !=
                    t2[static_cast<size_t>(t1[static_cast<size_t>(v)])]) {
                  r.add("lact functoriality fails at (" + std::to_string(a3) + "," +
                        std::to_string(a2) + "," + std::to_string(a1) + "), b=" +
                        std::to_string(b));
                  break;
                }
            }
          }
  // covariant functoriality of ract
  for (int b1 = 0; b1 < B.n_obj; ++b1)
    for (int b2 = 0; b2 < B.n_obj; ++b2)
      for (int b3 = 0; b3 < B.n_obj; ++b3)
        for (int be1 = 0; be1 < B.hom_size(b1, b2); ++be1)
          for (int be2 = 0; be2 < B.hom_size(b2, b3); ++be2) {
            int comp = B.compose(b1, b2, b3, be2, be1);
            for (int a = 0; a < A.n_obj; ++a) {
              const Tab& t12 = cell.ract_tab(a, b1, b3, comp);
              const Tab& t1 = cell.ract_tab(a, b1, b2, be1);
              const Tab& t2 = cell.ract_tab(a, b2, b3, be2);
              for (int v = 0; v < cell.val(a, b1); ++v)
                if (t12[static_cast<size_t>(v)] !=
                    t2[static_cast<size_t>(t1[static_cast<size_t>(v)])]) {
                  r.add("ract functoriality fails at (" + std::to_string(b1) + "," +
                        std::to_string(b2) + "," + std::to_string(b3) + "), a=" +
                        std::to_string(a));
                  break;
                }
            }
          }
  // the actions commute
  for (int a2 = 0; a2 < A.n_obj; ++a2)
    for (int a = 0; a < A.n_obj; ++a)
      for (int al = 0; al < A.hom_size(a2, a); ++al)
        for (int b = 0; b < B.n_obj; ++b)
          for (int b2 = 0; b2 < B.n_obj; ++b2)
            for (int be = 0; be < B.hom_size(b, b2); ++be) {
              const Tab& l = cell.lact_tab(a2, a, b, al);
              const Tab& rr = cell.ract_tab(a2, b, b2, be);
              const Tab& r1 = cell.ract_tab(a, b, b2, be);
              const Tab& l2 = cell.lact_tab(a2, a, b2, al);
              for (int v = 0; v < cell.val(a, b); ++v)
                if (rr[static_cast<size_t>(l[static_cast<size_t>(v)])] !=
                    l2[static_cast<size_t>(r1[static_cast<size_t>(v)])]) {
                  r.add("actions do not commute at (" + std::to_string(a2) + "," +
                        std::to_string(a) + ";" + std::to_string(b) + "," + std::to_string(b2) +
                        ")");
                  break;
                }
            }
  return r;
}

Report check_prof_lex(const LexProf1Cell& cell) {
  Report r;
  const LexBase& B = *cell.dst;
  for (int a = 0; a < cell.src->cat->n_obj; ++a) {
    if (cell.val(a, B.terminal_obj) != 1)
      r.add("value at (" + std::to_string(a) + ", terminal) is not a singleton");
    for (const auto& cone : B.products) {
      int na = cell.val(a, cone.apex);
      int nl = cell.val(a, cone.left);
      int nr = cell.val(a, cone.right);
      if (na != nl * nr) {
        r.add("product comparison fails (size) at a=" + std::to_string(a) + ", cone (" +
              std::to_string(cone.left) + "," + std::to_string(cone.right) + ")");
        continue;
      }
      const Tab& pl = cell.ract_tab(a, cone.apex, cone.left, cone.proj_left);
      const Tab& pr = cell.ract_tab(a, cone.apex, cone.right, cone.proj_right);
      std::vector<char> hit(static_cast<size_t>(nl * nr), 0);
      bool inj = true;
      for (int v = 0; v < na; ++v) {
        int idx = pair_index(pl[static_cast<size_t>(v)], pr[static_cast<size_t>(v)], nr);
        if (hit[static_cast<size_t>(idx)]) inj = false;
        hit[static_cast<size_t>(idx)] = 1;
      }
      if (!inj)
        r.add("product comparison not injective at a=" + std::to_string(a) + ", cone (" +
              std::to_string(cone.left) + "," + std::to_string(cone.right) + ")");
    }
  }
  return r;
}

Report check_prof(const LexProf1Cell& cell) {
  Report r = check_prof_cell(cell);
  if (!r.ok()) return r;
  r.merge(check_prof_lex(cell));
  return r;
}

bool cell_equal(const LexProf1Cell& x, const LexProf1Cell& y) {
  return x.src.get() == y.src.get() && x.dst.get() == y.dst.get() && x.value == y.value &&
         x.lact == y.lact && x.ract == y.ract;
}

LexProf1Cell identity_prof(LexBasePtr base) {
  const FinCategory& C = *base->cat;
  LexProf1Cell cell;
  cell.src = base;
  cell.dst = base;
  cell.name = "I_" + base->name;
  cell.value.assign(static_cast<size_t>(C.n_obj), std::vector<int>(static_cast<size_t>(C.n_obj)));
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      cell.value[static_cast<size_t>(a)][static_cast<size_t>(b)] = C.hom_size(a, b);
  alloc_cell(cell);
  for (int a2 = 0; a2 < C.n_obj; ++a2)
    for (int a = 0; a < C.n_obj; ++a)
      for (int b = 0; b < C.n_obj; ++b)
        for (int al = 0; al < C.hom_size(a2, a); ++al) {
          Tab& t = cell.lact[static_cast<size_t>(a2)][static_cast<size_t>(a)]
                            [static_cast<size_t>(b)][static_cast<size_t>(al)];
          for (int f = 0; f < C.hom_size(a, b); ++f)
            t[static_cast<size_t>(f)] = C.compose(a2, a, b, f, al);
        }
  for (int a = 0; a < C.n_obj; ++a)
    for (int b = 0; b < C.n_obj; ++b)
      for (int b2 = 0; b2 < C.n_obj; ++b2)
        for (int be = 0; be < C.hom_size(b, b2); ++be) {
          Tab& t = cell.ract[static_cast<size_t>(a)][static_cast<size_t>(b)]
                            [static_cast<size_t>(b2)][static_cast<size_t>(be)];
          for (int f = 0; f < C.hom_size(a, b); ++f)
            t[static_cast<size_t>(f)] = C.compose(a, b, b2, be, f);
        }
  return cell;
}

Report check_prof_morphism(const LexProf1Cell& S, const LexProf1Cell& D, const ProfMorphism& m) {
  Report r;
  const FinCategory& A = *S.src->cat;
  const FinCategory& B = *S.dst->cat;
  if (S.src.get() != D.src.get() || S.dst.get() != D.dst.get()) {
    r.add("2-cell: 1-cells are not parallel");
    return r;
  }
  if (static_cast<int>(m.component.size()) != A.n_obj) {
    r.add("2-cell: component shape wrong");
    return r;
  }
  for (int a = 0; a < A.n_obj; ++a)
    for (int b = 0; b < B.n_obj; ++b)
      if (!table_in_range(m.component[static_cast<size_t>(a)][static_cast<size_t>(b)],
                          S.val(a, b), std::max(D.val(a, b), 1))) {
        r.add("2-cell: component malformed at (" + std::to_string(a) + "," + std::to_string(b) +
              ")");
        return r;
      }
  for (int a = 0; a < A.n_obj; ++a)
    for (int b = 0; b < B.n_obj; ++b) {
      for (int v : m.component[static_cast<size_t>(a)][static_cast<size_t>(b)])
        if (v >= D.val(a, b)) {
          r.add("2-cell: component out of range at (" + std::to_string(a) + "," +
                std::to_string(b) + ")");
          return r;
        }
    }
  for (int a2 = 0; a2 < A.n_obj; ++a2)
    for (int a = 0; a < A.n_obj; ++a)
      for (int al = 0; al < A.hom_size(a2, a); ++al)
        for (int b = 0; b < B.n_obj; ++b) {
          const Tab& ma = m.component[static_cast<size_t>(a)][static_cast<size_t>(b)];
          const Tab& ma2 = m.component[static_cast<size_t>(a2)][static_cast<size_t>(b)];
          const Tab& ls = S.lact_tab(a2, a, b, al);
          const Tab& ld = D.lact_tab(a2, a, b, al);
          for (int v = 0; v < S.val(a, b); ++v)
            if (ma2[static_cast<size_t>(ls[static_cast<size_t>(v)])] !=
                ld[static_cast<size_t>(ma[static_cast<size_t>(v)])]) {
              r.add("2-cell naturality (left) fails at (" + std::to_string(a2) + "," +
                    std::to_string(a) + "), b=" + std::to_string(b));
              break;
            }
        }
  for (int a = 0; a < A.n_obj; ++a)
    for (int b = 0; b < B.n_obj; ++b)
      for (int b2 = 0; b2 < B.n_obj; ++b2)
        for (int be = 0; be < B.hom_size(b, b2); ++be) {
          const Tab& ma = m.component[static_cast<size_t>(a)][static_cast<size_t>(b)];
          const Tab& mb2 = m.component[static_cast<size_t>(a)][static_cast<size_t>(b2)];
          const Tab& rs = S.ract_tab(a, b, b2, be);
          const Tab& rd = D.ract_tab(a, b, b2, be);
          for (int v = 0; v < S.val(a, b); ++v)
            if (mb2[static_cast<size_t>(rs[static_cast<size_t>(v)])] !=
                rd[static_cast<size_t>(ma[static_cast<size_t>(v)])]) {
              r.add("2-cell naturality (right) fails at (" + std::to_string(b) + "," +
                    std::to_string(b2) + "), a=" + std::to_string(a));
              break;
            }
        }
  return r;
}

bool is_prof_iso(const LexProf1Cell& S, const LexProf1Cell& D, const ProfMorphism& m) {
  if (!check_prof_morphism(S, D, m).ok()) return false;
  for (int a = 0; a < S.src->cat->n_obj; ++a)
    for (int b = 0; b < S.dst->cat->n_obj; ++b) {
      if (S.val(a, b) != D.val(a, b)) return false;
      std::vector<char> hit(static_cast<size_t>(D.val(a, b)), 0);
      for (int v : m.component[static_cast<size_t>(a)][static_cast<size_t>(b)]) {
        if (hit[static_cast<size_t>(v)]) return false;
        hit[static_cast<size_t>(v)] = 1;
      }
    }
  return true;
}

ProfMorphism identity_prof_morphism(const LexProf1Cell& S) {
  ProfMorphism m;
  int na = S.src->cat->n_obj, nb = S.dst->cat->n_obj;
  m.component.assign(static_cast<size_t>(na), std::vector<Tab>(static_cast<size_t>(nb)));
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      Tab& t = m.component[static_cast<size_t>(a)][static_cast<size_t>(b)];
      t.resize(static_cast<size_t>(S.val(a, b)));
      std::iota(t.begin(), t.end(), 0);
    }
  return m;
}

ProfMorphism vcompose(const ProfMorphism& g, const ProfMorphism& f) {
  ProfMorphism h;
  h.component.resize(f.component.size());
  for (size_t a = 0; a < f.component.size(); ++a) {
    h.component[a].resize(f.component[a].size());
    for (size_t b = 0; b < f.component[a].size(); ++b) {
      const Tab& tf = f.component[a][b];
      const Tab& tg = g.component[a][b];
      Tab& t = h.component[a][b];
      t.resize(tf.size());
      for (size_t v = 0; v < tf.size(); ++v) t[v] = tg[static_cast<size_t>(tf[v])];
    }
  }
  return h;
}

std::vector<ProfMorphism> enumerate_prof_morphisms(const LexProf1Cell& S, const LexProf1Cell& D,
                                                   long long max_candidates) {
  int na = S.src->cat->n_obj, nb = S.dst->cat->n_obj;
  // all tables per slot, lexicographic
  std::vector<std::vector<Tab>> slot_tabs;
  long long total = 1;
  for (int a = 0; a < na; ++a)
    for (int b = 0; b < nb; ++b) {
      std::vector<Tab> tabs;
      long long count = finset::checked_pow(D.val(a, b), S.val(a, b), max_candidates);
      if (count < 0) throw ResourceError("enumerate_prof_morphisms: slot too large");
      if (S.val(a, b) == 0) {
        tabs.push_back({});
      } else if (D.val(a, b) == 0) {
        return {};
      } else {
        for (const auto& f :
             finset::enumerate_fns(finset::make_set(S.val(a, b)), finset::make_set(D.val(a, b)),
                                   max_candidates))
          tabs.push_back(f.table);
      }
      long long k = static_cast<long long>(tabs.size());
      if (total > max_candidates / k + 1) total = max_candidates + 1;
      else total *= k;
      slot_tabs.push_back(std::move(tabs));
    }
  if (total > max_candidates)
    throw ResourceError("enumerate_prof_morphisms: candidate count exceeds bound");
  std::vector<ProfMorphism> out;
  std::vector<size_t> pick(slot_tabs.size(), 0);
  for (;;) {
    ProfMorphism m;
    m.component.assign(static_cast<size_t>(na), std::vector<Tab>(static_cast<size_t>(nb)));
    size_t s = 0;
    for (int a = 0; a < na; ++a)
      for (int b = 0; b < nb; ++b, ++s)
        m.component[static_cast<size_t>(a)][static_cast<size_t>(b)] = slot_tabs[s][pick[s]];
    if (check_prof_morphism(S, D, m).ok()) out.push_back(std::move(m));
    size_t pos = 0;
    while (pos < slot_tabs.size() && pick[pos] == slot_tabs[pos].size() - 1) {
      pick[pos] = 0;
      ++pos;
    }
    if (pos == slot_tabs.size()) break;
    ++pick[pos];
  }
  return out;
}

std::optional<ProfMorphism> find_prof_iso(const LexProf1Cell& S, const LexProf1Cell& D,
                                          long long max_candidates) {
  if (S.src.get() != D.src.get() || S.dst.get() != D.dst.get()) return std::nullopt;
  if (S.value != D.value) return std::nullopt;
  for (const auto& m : enumerate_prof_morphisms(S, D, max_candidates))
    if (is_prof_iso(S, D, m)) return m;
  return std::nullopt;
}

int CoendComposite::raw_index(int a, int c, int b, int x, int y) const {
  return offset[static_cast<size_t>(a)][static_cast<size_t>(c)][static_cast<size_t>(b)] +
         x * msize[static_cast<size_t>(a)][static_cast<size_t>(b)] + y;
}

int CoendComposite::cls(int a, int c, int b, int x, int y) const {
  return raw_to_class[static_cast<size_t>(a)][static_cast<size_t>(c)]
                     [static_cast<size_t>(raw_index(a, c, b, x, y))];
}

CoendComposite::RawTriple CoendComposite::decode_raw(int a, int c, int raw) const {
  const auto& off = offset[static_cast<size_t>(a)][static_cast<size_t>(c)];
  int b = n_mid - 1;
  while (b > 0 && off[static_cast<size_t>(b)] > raw) --b;
  int rel = raw - off[static_cast<size_t>(b)];
  int ms = msize[static_cast<size_t>(a)][static_cast<size_t>(b)];
  return RawTriple{b, rel / ms, rel % ms};
}

CoendComposite coend_prof(const LexProf1Cell& N, const LexProf1Cell& M) {
  if (M.dst.get() != N.src.get())
    throw CompositionError("compose_prof: middle bases do not match");
  const FinCategory& A = *M.src->cat;
  const FinCategory& B = *M.dst->cat;
  const FinCategory& C = *N.dst->cat;
  CoendComposite co;
  co.n_mid = B.n_obj;
  co.msize = M.value;
  co.nsize = N.value;
  co.cell.src = M.src;
  co.cell.dst = N.dst;
  co.cell.name = N.name + "(x)" + M.name;
  co.cell.value.assign(static_cast<size_t>(A.n_obj),
                       std::vector<int>(static_cast<size_t>(C.n_obj), 0));
  co.offset.assign(static_cast<size_t>(A.n_obj),
                   std::vector<std::vector<int>>(static_cast<size_t>(C.n_obj)));
  co.raw_to_class.assign(static_cast<size_t>(A.n_obj),
                         std::vector<Tab>(static_cast<size_t>(C.n_obj)));
  co.class_rep.assign(static_cast<size_t>(A.n_obj),
                      std::vector<Tab>(static_cast<size_t>(C.n_obj)));
  for (int a = 0; a < A.n_obj; ++a)
    for (int c = 0; c < C.n_obj; ++c) {
      auto& off = co.offset[static_cast<size_t>(a)][static_cast<size_t>(c)];
      off.assign(static_cast<size_t>(B.n_obj), 0);
      int total = 0;
      for (int b = 0; b < B.n_obj; ++b) {
        off[static_cast<size_t>(b)] = total;
        total += N.val(b, c) * M.val(a, b);
      }
      std::vector<std::pair<int, int>> rel;
      for (int b = 0; b < B.n_obj; ++b)
        for (int b2 = 0; b2 < B.n_obj; ++b2)
          for (int be = 0; be < B.hom_size(b, b2); ++be) {
            const Tab& nl = N.lact_tab(b, b2, c, be);   // N(b2,c) -> N(b,c)
            const Tab& mr = M.ract_tab(a, b, b2, be);   // M(a,b) -> M(a,b2)
            for (int x2 = 0; x2 < N.val(b2, c); ++x2)
              for (int y = 0; y < M.val(a, b); ++y)
                rel.emplace_back(co.raw_index(a, c, b, nl[static_cast<size_t>(x2)], y),
                                 co.raw_index(a, c, b2, x2, mr[static_cast<size_t>(y)]));
          }
      auto q = finset::coequalize(rel, finset::make_set(total));
      co.raw_to_class[static_cast<size_t>(a)][static_cast<size_t>(c)] = q.quot.table;
      co.cell.value[static_cast<size_t>(a)][static_cast<size_t>(c)] = q.quot.cod.size;
      auto& reps = co.class_rep[static_cast<size_t>(a)][static_cast<size_t>(c)];
      reps.assign(static_cast<size_t>(q.quot.cod.size), -1);
      for (int i = 0; i < total; ++i)
        if (reps[static_cast<size_t>(q.quot(i))] == -1) reps[static_cast<size_t>(q.quot(i))] = i;
    }
  alloc_cell(co.cell);
  // induced actions, defined via raw elements and verified to descend
  for (int a2 = 0; a2 < A.n_obj; ++a2)
    for (int a = 0; a < A.n_obj; ++a)
      for (int al = 0; al < A.hom_size(a2, a); ++al)
        for (int c = 0; c < C.n_obj; ++c) {
          Tab& t = co.cell.lact[static_cast<size_t>(a2)][static_cast<size_t>(a)]
                               [static_cast<size_t>(c)][static_cast<size_t>(al)];
          for (int b = 0; b < B.n_obj; ++b) {
            const Tab& ml = M.lact_tab(a2, a, b, al);
            for (int x = 0; x < N.val(b, c); ++x)
              for (int y = 0; y < M.val(a, b); ++y) {
                int srcc = co.cls(a, c, b, x, y);
                int dstc = co.cls(a2, c, b, x, ml[static_cast<size_t>(y)]);
                if (t[static_cast<size_t>(srcc)] == -1) t[static_cast<size_t>(srcc)] = dstc;
                else if (t[static_cast<size_t>(srcc)] != dstc)
                  throw InvariantError("compose_prof: left action does not descend");
              }
          }
        }
  for (int a = 0; a < A.n_obj; ++a)
    for (int c = 0; c < C.n_obj; ++c)
      for (int c2 = 0; c2 < C.n_obj; ++c2)
        for (int ga = 0; ga < C.hom_size(c, c2); ++ga) {
          Tab& t = co.cell.ract[static_cast<size_t>(a)][static_cast<size_t>(c)]
                               [static_cast<size_t>(c2)][static_cast<size_t>(ga)];
          for (int b = 0; b < B.n_obj; ++b) {
            const Tab& nr = N.ract_tab(b, c, c2, ga);
            for (int x = 0; x < N.val(b, c); ++x)
              for (int y = 0; y < M.val(a, b); ++y) {
                int srcc = co.cls(a, c, b, x, y);
                int dstc = co.cls(a, c2, b, nr[static_cast<size_t>(x)], y);
                if (t[static_cast<size_t>(srcc)] == -1) t[static_cast<size_t>(srcc)] = dstc;
                else if (t[static_cast<size_t>(srcc)] != dstc)
                  throw InvariantError("compose_prof: right action does not descend");
              }
          }
        }
  Report rc = check_prof_cell(co.cell);
  if (!rc.ok()) throw InvariantError("compose_prof: composite malformed: " + rc.summary());
  return co;
}

CoendComposite compose_prof(const LexProf1Cell& N, const LexProf1Cell& M) {
  CoendComposite co = coend_prof(N, M);
  if (check_prof_lex(N).ok() && check_prof_lex(M).ok()) {
    Report rl = check_prof_lex(co.cell);
    if (!rl.ok())
      throw InvariantError("compose_prof: composite of lex cells not lex: " + rl.summary());
  }
  return co;
}

ProfMorphism left_unitor(const LexProf1Cell& M, const CoendComposite& IM) {
  const FinCategory& A = *M.src->cat;
  const FinCategory& B = *M.dst->cat;
  ProfMorphism m;
  m.component.assign(static_cast<size_t>(A.n_obj), std::vector<Tab>(static_cast<size_t>(B.n_obj)));
  for (int a = 0; a < A.n_obj; ++a)
    for (int b2 = 0; b2 < B.n_obj; ++b2) {
      Tab& t = m.component[static_cast<size_t>(a)][static_cast<size_t>(b2)];
      t.resize(static_cast<size_t>(IM.cell.val(a, b2)));
      for (int k = 0; k < IM.cell.val(a, b2); ++k) {
        auto rt = IM.rep(a, b2, k);  // (b, e: b -> b2, y in M(a,b))
        t[static_cast<size_t>(k)] = M.ract_tab(a, rt.b, b2, rt.x)[static_cast<size_t>(rt.y)];
      }
    }
  return m;
}

ProfMorphism right_unitor(const LexProf1Cell& M, const CoendComposite& MI) {
  const FinCategory& A = *M.src->cat;
  const FinCategory& B = *M.dst->cat;
  ProfMorphism m;
  m.component.assign(static_cast<size_t>(A.n_obj), std::vector<Tab>(static_cast<size_t>(B.n_obj)));
  for (int a = 0; a < A.n_obj; ++a)
    for (int b = 0; b < B.n_obj; ++b) {
      Tab& t = m.component[static_cast<size_t>(a)][static_cast<size_t>(b)];
      t.resize(static_cast<size_t>(MI.cell.val(a, b)));
      for (int k = 0; k < MI.cell.val(a, b); ++k) {
        auto rt = MI.rep(a, b, k);  // (a1, x in M(a1,b), alpha: a -> a1)
        t[static_cast<size_t>(k)] = M.lact_tab(a, rt.b, b, rt.y)[static_cast<size_t>(rt.x)];
      }
    }
  return m;
}

ProfMorphism associator(const CoendComposite& PN, const CoendComposite& NM,
                        const CoendComposite& PN_M, const CoendComposite& P_NM) {
  int na = static_cast<int>(PN_M.cell.value.size());
  int nd = na == 0 ? 0 : static_cast<int>(PN_M.cell.value[0].size());
  ProfMorphism m;
  m.component.assign(static_cast<size_t>(na), std::vector<Tab>(static_cast<size_t>(nd)));
  for (int a = 0; a < na; ++a)
    for (int d = 0; d < nd; ++d) {
      Tab& t = m.component[static_cast<size_t>(a)][static_cast<size_t>(d)];
      t.resize(static_cast<size_t>(PN_M.cell.val(a, d)));
      for (int k = 0; k < PN_M.cell.val(a, d); ++k) {
        auto outer = PN_M.rep(a, d, k);        // (b, u in (P⊗N)(b,d), y in M(a,b))
        auto inner = PN.rep(outer.b, d, outer.x);  // (c, p in P(c,d), x in N(b,c))
        int s = NM.cls(a, inner.b, outer.b, inner.y, outer.y);
        t[static_cast<size_t>(k)] = P_NM.cls(a, d, inner.b, inner.x, s);
      }
    }
  return m;
}

ClosureCell right_closure(const LexProf1Cell& M, const LexProf1Cell& P,
                          long long max_candidates) {
  if (M.src.get() != P.src.get())
    throw CompositionError("right_closure: cells do not share their source base");
  const FinCategory& A = *M.src->cat;
  const FinCategory& B = *M.dst->cat;
  const FinCategory& C = *P.dst->cat;
  ClosureCell cl;
  cl.cell.src = M.dst;
  cl.cell.dst = P.dst;
  cl.cell.name = "[" + M.name + "," + P.name + "]";
  cl.cell.value.assign(static_cast<size_t>(B.n_obj),
                       std::vector<int>(static_cast<size_t>(C.n_obj), 0));
  cl.families.assign(static_cast<size_t>(B.n_obj), {});
  long long explored = 0;
  for (int b = 0; b < B.n_obj; ++b) {
    cl.families[static_cast<size_t>(b)].assign(static_cast<size_t>(C.n_obj), {});
    for (int c = 0; c < C.n_obj; ++c) {
      // per-object candidate tables M(a,b) -> P(a,c)
      std::vector<std::vector<Tab>> cands(static_cast<size_t>(A.n_obj));
      bool empty = false;
      for (int a = 0; a < A.n_obj; ++a) {
        if (M.val(a, b) == 0) {
          cands[static_cast<size_t>(a)].push_back({});
        } else if (P.val(a, c) == 0) {
          empty = true;
        } else {
          for (const auto& f : finset::enumerate_fns(finset::make_set(M.val(a, b)),
                                                     finset::make_set(P.val(a, c)),
                                                     max_candidates))
            cands[static_cast<size_t>(a)].push_back(f.table);
        }
      }
      auto& fams = cl.families[static_cast<size_t>(b)][static_cast<size_t>(c)];
      if (!empty) {
        std::vector<Tab> cur(static_cast<size_t>(A.n_obj));
        // backtracking over objects of A with naturality pruning
        std::function<void(int)> rec = [&](int a) {
          if (a == A.n_obj) {
            fams.push_back(cur);
            return;
          }
          for (const auto& cand : cands[static_cast<size_t>(a)]) {
            if (++explored > max_candidates)
              throw ResourceError("right_closure: family enumeration exceeds bound");
            cur[static_cast<size_t>(a)] = cand;
            bool good = true;
            for (int a2 = 0; a2 <= a && good; ++a2) {
              // alpha: a2 -> a gives phi_{a2} ∘ lactM = lactP ∘ phi_a
              for (int al = 0; al < A.hom_size(a2, a) && good; ++al) {
                const Tab& lm = M.lact_tab(a2, a, b, al);
                const Tab& lp = P.lact_tab(a2, a, c, al);
                for (int v = 0; v < M.val(a, b); ++v)
                  if (cur[static_cast<size_t>(a2)][static_cast<size_t>(lm[static_cast<size_t>(v)])] !=
                      lp[static_cast<size_t>(cur[static_cast<size_t>(a)][static_cast<size_t>(v)])]) {
                    good = false;
                    break;
                  }
              }
              // alpha: a -> a2 gives phi_a ∘ lactM = lactP ∘ phi_{a2}
              for (int al = 0; al < A.hom_size(a, a2) && good; ++al) {
                const Tab& lm = M.lact_tab(a, a2, b, al);
                const Tab& lp = P.lact_tab(a, a2, c, al);
                for (int v = 0; v < M.val(a2, b); ++v)
                  if (cur[static_cast<size_t>(a)][static_cast<size_t>(lm[static_cast<size_t>(v)])] !=
                      lp[static_cast<size_t>(cur[static_cast<size_t>(a2)][static_cast<size_t>(v)])]) {
                    good = false;
                    break;
                  }
              }
            }
            if (good) rec(a + 1);
          }
        };
        rec(0);
      }
      cl.cell.value[static_cast<size_t>(b)][static_cast<size_t>(c)] =
          static_cast<int>(fams.size());
    }
  }
  alloc_cell(cl.cell);
  auto find_family = [&](int b, int c, const std::vector<Tab>& fam) {
    const auto& fams = cl.families[static_cast<size_t>(b)][static_cast<size_t>(c)];
    for (size_t k = 0; k < fams.size(); ++k)
      if (fams[k] == fam) return static_cast<int>(k);
    throw InvariantError("right_closure: action image is not a natural family");
  };
  // lact along beta: b2 -> b precomposes with M's right action
  for (int b2 = 0; b2 < B.n_obj; ++b2)
    for (int b = 0; b < B.n_obj; ++b)
      for (int be = 0; be < B.hom_size(b2, b); ++be)
        for (int c = 0; c < C.n_obj; ++c) {
          Tab& t = cl.cell.lact[static_cast<size_t>(b2)][static_cast<size_t>(b)]
                               [static_cast<size_t>(c)][static_cast<size_t>(be)];
          const auto& fams = cl.families[static_cast<size_t>(b)][static_cast<size_t>(c)];
          for (size_t k = 0; k < fams.size(); ++k) {
            std::vector<Tab> img(static_cast<size_t>(A.n_obj));
            for (int a = 0; a < A.n_obj; ++a) {
              const Tab& mr = M.ract_tab(a, b2, b, be);  // M(a,b2) -> M(a,b)
              Tab& g = img[static_cast<size_t>(a)];
              g.resize(static_cast<size_t>(M.val(a, b2)));
              for (int v = 0; v < M.val(a, b2); ++v)
                g[static_cast<size_t>(v)] =
                    fams[k][static_cast<size_t>(a)][static_cast<size_t>(mr[static_cast<size_t>(v)])];
            }
            t[k] = find_family(b2, c, img);
          }
        }
  // ract along gamma: c -> c2 postcomposes with P's right action
  for (int b = 0; b < B.n_obj; ++b)
    for (int c = 0; c < C.n_obj; ++c)
      for (int c2 = 0; c2 < C.n_obj; ++c2)
        for (int ga = 0; ga < C.hom_size(c, c2); ++ga) {
          Tab& t = cl.cell.ract[static_cast<size_t>(b)][static_cast<size_t>(c)]
                               [static_cast<size_t>(c2)][static_cast<size_t>(ga)];
          const auto& fams = cl.families[static_cast<size_t>(b)][static_cast<size_t>(c)];
          for (size_t k = 0; k < fams.size(); ++k) {
            std::vector<Tab> img(static_cast<size_t>(A.n_obj));
            for (int a = 0; a < A.n_obj; ++a) {
              const Tab& pr = P.ract_tab(a, c, c2, ga);
              Tab& g = img[static_cast<size_t>(a)];
              g.resize(static_cast<size_t>(M.val(a, b)));
              for (int v = 0; v < M.val(a, b); ++v)
                g[static_cast<size_t>(v)] =
                    pr[static_cast<size_t>(fams[k][static_cast<size_t>(a)][static_cast<size_t>(v)])];
            }
            t[k] = find_family(b, c2, img);
          }
        }
  Report rc = check_prof_cell(cl.cell);
  if (!rc.ok()) throw InvariantError("right_closure: result malformed: " + rc.summary());
  return cl;
}

ProfMorphism transpose_to_closure(const LexProf1Cell& N, const LexProf1Cell& M,
                                  const LexProf1Cell& P, const CoendComposite& NM,
                                  const ClosureCell& MP, const ProfMorphism& h) {
  const FinCategory& A = *M.src->cat;
  const FinCategory& B = *N.src->cat;
  const FinCategory& C = *N.dst->cat;
  ProfMorphism k;
  k.component.assign(static_cast<size_t>(B.n_obj), std::vector<Tab>(static_cast<size_t>(C.n_obj)));
  for (int b = 0; b < B.n_obj; ++b)
    for (int c = 0; c < C.n_obj; ++c) {
      Tab& t = k.component[static_cast<size_t>(b)][static_cast<size_t>(c)];
      t.resize(static_cast<size_t>(N.val(b, c)));
      for (int x = 0; x < N.val(b, c); ++x) {
        std::vector<Tab> fam(static_cast<size_t>(A.n_obj));
        for (int a = 0; a < A.n_obj; ++a) {
          Tab& g = fam[static_cast<size_t>(a)];
          g.resize(static_cast<size_t>(M.val(a, b)));
          for (int y = 0; y < M.val(a, b); ++y)
            g[static_cast<size_t>(y)] =
                h.component[static_cast<size_t>(a)][static_cast<size_t>(c)]
                           [static_cast<size_t>(NM.cls(a, c, b, x, y))];
        }
        const auto& fams = MP.families[static_cast<size_t>(b)][static_cast<size_t>(c)];
        int idx = -1;
        for (size_t q = 0; q < fams.size(); ++q)
          if (fams[q] == fam) idx = static_cast<int>(q);
        if (idx == -1)
          throw InvariantError("transpose_to_closure: transposed family not natural");
        t[static_cast<size_t>(x)] = idx;
      }
    }
  return k;
}

ProfMorphism transpose_from_closure(const LexProf1Cell& N, const LexProf1Cell& M,
                                    const LexProf1Cell& P, const CoendComposite& NM,
                                    const ClosureCell& MP, const ProfMorphism& k) {
  const FinCategory& A = *M.src->cat;
  const FinCategory& C = *N.dst->cat;
  ProfMorphism h;
  h.component.assign(static_cast<size_t>(A.n_obj), std::vector<Tab>(static_cast<size_t>(C.n_obj)));
  for (int a = 0; a < A.n_obj; ++a)
    for (int c = 0; c < C.n_obj; ++c) {
      Tab& t = h.component[static_cast<size_t>(a)][static_cast<size_t>(c)];
      t.assign(static_cast<size_t>(NM.cell.val(a, c)), -1);
      for (int b = 0; b < NM.n_mid; ++b)
        for (int x = 0; x < N.val(b, c); ++x)
          for (int y = 0; y < M.val(a, b); ++y) {
            int cls = NM.cls(a, c, b, x, y);
            int fidx = k.component[static_cast<size_t>(b)][static_cast<size_t>(c)]
                                  [static_cast<size_t>(x)];
            int v = MP.families[static_cast<size_t>(b)][static_cast<size_t>(c)]
                               [static_cast<size_t>(fidx)][static_cast<size_t>(a)]
                               [static_cast<size_t>(y)];
            if (t[static_cast<size_t>(cls)] == -1) t[static_cast<size_t>(cls)] = v;
            else if (t[static_cast<size_t>(cls)] != v)
              throw InvariantError("transpose_from_closure: assignment does not descend");
          }
    }
  return h;
}

LexProf1Cell companion(LexBasePtr A, LexBasePtr B, const FunctorData& F) {
  Report rf = fincat::check_functor(F);
  if (rf.ok()) rf.merge(fincat::check_lex_functor(*A, F));
  if (!rf.ok()) throw PreconditionError("companion: functor not lex: " + rf.summary());
  const FinCategory& Bc = *B->cat;
  const FinCategory& Ac = *A->cat;
  LexProf1Cell cell;
  cell.src = B;
  cell.dst = A;
  cell.name = "companion(" + F.name + ")";
  cell.value.assign(static_cast<size_t>(Bc.n_obj),
                    std::vector<int>(static_cast<size_t>(Ac.n_obj)));
  for (int b = 0; b < Bc.n_obj; ++b)
    for (int a = 0; a < Ac.n_obj; ++a)
      cell.value[static_cast<size_t>(b)][static_cast<size_t>(a)] =
          Bc.hom_size(b, F.obj_map[static_cast<size_t>(a)]);
  alloc_cell(cell);
  for (int b2 = 0; b2 < Bc.n_obj; ++b2)
    for (int b = 0; b < Bc.n_obj; ++b)
      for (int be = 0; be < Bc.hom_size(b2, b); ++be)
        for (int a = 0; a < Ac.n_obj; ++a) {
          int fa = F.obj_map[static_cast<size_t>(a)];
          Tab& t = cell.lact[static_cast<size_t>(b2)][static_cast<size_t>(b)]
                            [static_cast<size_t>(a)][static_cast<size_t>(be)];
          for (int g = 0; g < Bc.hom_size(b, fa); ++g)
            t[static_cast<size_t>(g)] = Bc.compose(b2, b, fa, g, be);
        }
  for (int b = 0; b < Bc.n_obj; ++b)
    for (int a = 0; a < Ac.n_obj; ++a)
      for (int a2 = 0; a2 < Ac.n_obj; ++a2)
        for (int al = 0; al < Ac.hom_size(a, a2); ++al) {
          int fa = F.obj_map[static_cast<size_t>(a)], fa2 = F.obj_map[static_cast<size_t>(a2)];
          Tab& t = cell.ract[static_cast<size_t>(b)][static_cast<size_t>(a)]
                            [static_cast<size_t>(a2)][static_cast<size_t>(al)];
          for (int g = 0; g < Bc.hom_size(b, fa); ++g)
            t[static_cast<size_t>(g)] = Bc.compose(b, fa, fa2, F.map_mor(a, a2, al), g);
        }
  return cell;
}

LexProf1Cell conjoint(LexBasePtr A, LexBasePtr B, const FunctorData& F) {
  Report rf = fincat::check_functor(F);
  if (rf.ok()) rf.merge(fincat::check_lex_functor(*A, F));
  if (!rf.ok()) throw PreconditionError("conjoint: functor not lex: " + rf.summary());
  const FinCategory& Bc = *B->cat;
  const FinCategory& Ac = *A->cat;
  LexProf1Cell cell;
  cell.src = A;
  cell.dst = B;
  cell.name = "conjoint(" + F.name + ")";
  cell.value.assign(static_cast<size_t>(Ac.n_obj),
                    std::vector<int>(static_cast<size_t>(Bc.n_obj)));
  for (int a = 0; a < Ac.n_obj; ++a)
    for (int b = 0; b < Bc.n_obj; ++b)
      cell.value[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          Bc.hom_size(F.obj_map[static_cast<size_t>(a)], b);
  alloc_cell(cell);
  for (int a2 = 0; a2 < Ac.n_obj; ++a2)
    for (int a = 0; a < Ac.n_obj; ++a)
      for (int al = 0; al < Ac.hom_size(a2, a); ++al)
        for (int b = 0; b < Bc.n_obj; ++b) {
          int fa = F.obj_map[static_cast<size_t>(a)], fa2 = F.obj_map[static_cast<size_t>(a2)];
          Tab& t = cell.lact[static_cast<size_t>(a2)][static_cast<size_t>(a)]
                            [static_cast<size_t>(b)][static_cast<size_t>(al)];
          for (int g = 0; g < Bc.hom_size(fa, b); ++g)
            t[static_cast<size_t>(g)] = Bc.compose(fa2, fa, b, g, F.map_mor(a2, a, al));
        }
  for (int a = 0; a < Ac.n_obj; ++a)
    for (int b = 0; b < Bc.n_obj; ++b)
      for (int b2 = 0; b2 < Bc.n_obj; ++b2)
        for (int be = 0; be < Bc.hom_size(b, b2); ++be) {
          int fa = F.obj_map[static_cast<size_t>(a)];
          Tab& t = cell.ract[static_cast<size_t>(a)][static_cast<size_t>(b)]
                            [static_cast<size_t>(b2)][static_cast<size_t>(be)];
          for (int g = 0; g < Bc.hom_size(fa, b); ++g)
            t[static_cast<size_t>(g)] = Bc.compose(fa, b, b2, be, g);
        }
  return cell;
}

Report check_duality(const DualityCertificate& cert) {
  Report r;
  LexProf1Cell Ix = identity_prof(cert.W.src);
  LexProf1Cell Iy = identity_prof(cert.W.dst);
  r.merge(check_prof_morphism(Iy, cert.WWstar.cell, cert.eta));
  r.merge(check_prof_morphism(cert.WstarW.cell, Ix, cert.eps));
  if (!r.ok()) return r;
  const FinCategory& X = *cert.W.src->cat;
  const FinCategory& Y = *cert.W.dst->cat;
  for (int b = 0; b < Y.n_obj; ++b) {
    int etab = cert.eta.component[static_cast<size_t>(b)][static_cast<size_t>(b)]
                                 [static_cast<size_t>(Y.id[static_cast<size_t>(b)])];
    auto u = cert.WWstar.rep(b, b, etab);  // (a1, w2 in W(a1,b), v in W*(b,a1))
    // first triangle: chase every w in W(a,b)
    for (int a = 0; a < X.n_obj; ++a)
      for (int w = 0; w < cert.W.val(a, b); ++w) {
        int s = cert.WstarW.cls(a, u.b, b, u.y, w);
        int e = cert.eps.component[static_cast<size_t>(a)][static_cast<size_t>(u.b)]
                                  [static_cast<size_t>(s)];
        int res = cert.W.lact_tab(a, u.b, b, e)[static_cast<size_t>(u.x)];
        if (res != w)
          r.add("triangle identity on W fails at (a=" + std::to_string(a) + ", b=" +
                std::to_string(b) + ", w=" + std::to_string(w) + ")");
      }
    // second triangle: chase every v in W*(b,a)
    for (int a = 0; a < X.n_obj; ++a)
      for (int v = 0; v < cert.Wstar.val(b, a); ++v) {
        int s = cert.WstarW.cls(u.b, a, b, v, u.x);
        int e = cert.eps.component[static_cast<size_t>(u.b)][static_cast<size_t>(a)]
                                  [static_cast<size_t>(s)];
        int res = cert.Wstar.ract_tab(b, u.b, a, e)[static_cast<size_t>(u.y)];
        if (res != v)
          r.add("triangle identity on W* fails at (b=" + std::to_string(b) + ", a=" +
                std::to_string(a) + ", v=" + std::to_string(v) + ")");
      }
  }
  return r;
}

std::optional<DualityCertificate> search_left_dual(const LexProf1Cell& W,
                                                   long long max_candidates) {
  LexProf1Cell Ix = identity_prof(W.src);
  LexProf1Cell Iy = identity_prof(W.dst);
  ClosureCell cl = right_closure(W, Ix, max_candidates);
  DualityCertificate cert;
  cert.W = W;
  cert.Wstar = cl.cell;
  cert.WWstar = compose_prof(W, cert.Wstar);
  cert.WstarW = compose_prof(cert.Wstar, W);
  // counit: evaluate the family at the paired element
  const FinCategory& X = *W.src->cat;
  cert.eps.component.assign(static_cast<size_t>(X.n_obj),
                            std::vector<Tab>(static_cast<size_t>(X.n_obj)));
  for (int a = 0; a < X.n_obj; ++a)
    for (int a2 = 0; a2 < X.n_obj; ++a2) {
      Tab& t = cert.eps.component[static_cast<size_t>(a)][static_cast<size_t>(a2)];
      t.assign(static_cast<size_t>(cert.WstarW.cell.val(a, a2)), -1);
      for (int b = 0; b < cert.WstarW.n_mid; ++b)
        for (int x = 0; x < cert.Wstar.val(b, a2); ++x)
          for (int y = 0; y < W.val(a, b); ++y) {
            int cls = cert.WstarW.cls(a, a2, b, x, y);
            int v = cl.families[static_cast<size_t>(b)][static_cast<size_t>(a2)]
                               [static_cast<size_t>(x)][static_cast<size_t>(a)]
                               [static_cast<size_t>(y)];
            if (t[static_cast<size_t>(cls)] == -1) t[static_cast<size_t>(cls)] = v;
            else if (t[static_cast<size_t>(cls)] != v)
              throw InvariantError("search_left_dual: evaluation does not descend");
          }
    }
  for (const auto& eta : enumerate_prof_morphisms(Iy, cert.WWstar.cell, max_candidates)) {
    cert.eta = eta;
    if (check_duality(cert).ok()) return cert;
  }
  return std::nullopt;
}

DualityCertificate companion_duality(LexBasePtr A, LexBasePtr B, const FunctorData& F) {
  DualityCertificate cert;
  cert.W = companion(A, B, F);      // B ↛ A
  cert.Wstar = conjoint(A, B, F);   // A ↛ B
  cert.WWstar = compose_prof(cert.W, cert.Wstar);  // A ↛ A
  cert.WstarW = compose_prof(cert.Wstar, cert.W);  // B ↛ B
  const FinCategory& Ac = *A->cat;
  const FinCategory& Bc = *B->cat;
  // unit sends alpha: a -> a2 to (b = Fa, F(alpha), id_{Fa})
  cert.eta.component.assign(static_cast<size_t>(Ac.n_obj),
                            std::vector<Tab>(static_cast<size_t>(Ac.n_obj)));
  for (int a = 0; a < Ac.n_obj; ++a)
    for (int a2 = 0; a2 < Ac.n_obj; ++a2) {
      int fa = F.obj_map[static_cast<size_t>(a)];
      Tab& t = cert.eta.component[static_cast<size_t>(a)][static_cast<size_t>(a2)];
      t.resize(static_cast<size_t>(Ac.hom_size(a, a2)));
      for (int al = 0; al < Ac.hom_size(a, a2); ++al)
        t[static_cast<size_t>(al)] = cert.WWstar.cls(a, a2, fa, F.map_mor(a, a2, al),
                                                     Bc.id[static_cast<size_t>(fa)]);
    }
  // counit composes the two sides: (g: Fa -> b2, f: b -> Fa) -> g∘f
  cert.eps.component.assign(static_cast<size_t>(Bc.n_obj),
                            std::vector<Tab>(static_cast<size_t>(Bc.n_obj)));
  for (int b = 0; b < Bc.n_obj; ++b)
    for (int b2 = 0; b2 < Bc.n_obj; ++b2) {
      Tab& t = cert.eps.component[static_cast<size_t>(b)][static_cast<size_t>(b2)];
      t.assign(static_cast<size_t>(cert.WstarW.cell.val(b, b2)), -1);
      for (int a = 0; a < Ac.n_obj; ++a) {
        int fa = F.obj_map[static_cast<size_t>(a)];
        for (int g = 0; g < Bc.hom_size(fa, b2); ++g)
          for (int f = 0; f < Bc.hom_size(b, fa); ++f) {
            int cls = cert.WstarW.cls(b, b2, a, g, f);
            int v = Bc.compose(b, fa, b2, g, f);
            if (t[static_cast<size_t>(cls)] == -1) t[static_cast<size_t>(cls)] = v;
            else if (t[static_cast<size_t>(cls)] != v)
              throw InvariantError("companion_duality: counit does not descend");
          }
      }
    }
  return cert;
}

LexProf1Cell random_lex_cell(LexBasePtr A, LexBasePtr B, std::mt19937& rng) {
  if (A->kind != fincat::BaseKind::lattice || B->kind != fincat::BaseKind::lattice)
    throw PreconditionError("random_lex_cell: lattice bases required");
  const fincat::FinLattice& pa = A->lattice;
  const fincat::FinLattice& pb = B->lattice;
  // filters of B as bitmasks
  std::vector<unsigned> filters;
  int top = fincat::lattice_top(pb);
  for (unsigned mask = 0; mask < (1u << pb.n); ++mask) {
    if (!((mask >> top) & 1u)) continue;
    bool good = true;
    for (int i = 0; i < pb.n && good; ++i) {
      if (!((mask >> i) & 1u)) continue;
      for (int j = 0; j < pb.n && good; ++j) {
        if (pb.le(i, j) && !((mask >> j) & 1u)) good = false;
        if (((mask >> j) & 1u) && !((mask >> fincat::lattice_meet(pb, i, j)) & 1u)) good = false;
      }
    }
    if (good) filters.push_back(mask);
  }
  // an antitone assignment of filters: a <= a2 forces F(a2) ⊆ F(a)
  std::vector<unsigned> assign(static_cast<size_t>(pa.n));
  for (int tries = 0;; ++tries) {
    for (int a = 0; a < pa.n; ++a)
      assign[static_cast<size_t>(a)] = filters[rng() % filters.size()];
    bool good = true;
    for (int a = 0; a < pa.n && good; ++a)
      for (int a2 = 0; a2 < pa.n && good; ++a2)
        if (pa.le(a, a2) &&
            (assign[static_cast<size_t>(a2)] & ~assign[static_cast<size_t>(a)]) != 0)
          good = false;
    if (good) break;
    if (tries > 10000) {
      // the everywhere-top assignment is always antitone
      std::fill(assign.begin(), assign.end(), filters.front());
      break;
    }
  }
  LexProf1Cell cell;
  cell.src = A;
  cell.dst = B;
  cell.name = "random";
  cell.value.assign(static_cast<size_t>(pa.n), std::vector<int>(static_cast<size_t>(pb.n), 0));
  for (int a = 0; a < pa.n; ++a)
    for (int b = 0; b < pb.n; ++b)
      cell.value[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          (assign[static_cast<size_t>(a)] >> b) & 1u ? 1 : 0;
  alloc_cell(cell);
  for (int a2 = 0; a2 < pa.n; ++a2)
    for (int a = 0; a < pa.n; ++a)
      for (int b = 0; b < pb.n; ++b)
        if (pa.le(a2, a) && cell.val(a, b) == 1)
          cell.lact[static_cast<size_t>(a2)][static_cast<size_t>(a)][static_cast<size_t>(b)][0] =
              {0};
  for (int a = 0; a < pa.n; ++a)
    for (int b = 0; b < pb.n; ++b)
      for (int b2 = 0; b2 < pb.n; ++b2)
        if (pb.le(b, b2) && cell.val(a, b) == 1)
          cell.ract[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(b2)][0] =
              {0};
  return cell;
}

}  // namespace catkit::lexprof
