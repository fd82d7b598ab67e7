#include <memory>

#include "catkit/algebra.hpp"
#include "catkit/wcat.hpp"

namespace catkit::algebra {

Report check_triangle(const TabMonad& t, int k, long long max_candidates) {
  Report r;
  const ModelCategory alg = enumerate_algebras(t, k, max_candidates);
  const ModelCategory mod = enumerate_models(monad_to_theory(t), k, max_candidates);

  // The comparison functor sends each algebra to the model it presents; both
  // enumerations use the same canonical object order, so it is the identity
  // assignment and being an isomorphism amounts to table identity.
  if (alg.cat.n_obj != mod.cat.n_obj) {
    r.add("triangle: object counts differ: " + std::to_string(alg.cat.n_obj) +
          " algebras vs " + std::to_string(mod.cat.n_obj) + " models");
    return r;
  }
  for (int i = 0; i < alg.cat.n_obj; ++i) {
    const ModelData& a = alg.objects[static_cast<size_t>(i)];
    const ModelData& m = mod.objects[static_cast<size_t>(i)];
    if (a.carrier != m.carrier || a.op != m.op)
      r.add("triangle: comparison functor not object-identical at object " +
            std::to_string(i));
  }
  if (alg.cat.hom != mod.cat.hom) r.add("triangle: hom tables differ");
  if (alg.cat.id != mod.cat.id) r.add("triangle: identity tables differ");
  if (alg.cat.comp != mod.cat.comp) r.add("triangle: composition tables differ");
  if (alg.hom_maps != mod.hom_maps) r.add("triangle: morphism carrier tables differ");
  if (!r.ok()) return r;

  // Enriched cross-check: the semantics of the one-object embedding must be
  // equivalent to the algebra category.
  const wcat::MonadData md = wcat::monad_from_tabmonad(t);
  const wcat::WCategory w = wcat::monad_to_oneobject(md);
  const wcat::SemanticsResult s = wcat::semantics(w, k, max_candidates);
  if (s.cat.n_obj != alg.cat.n_obj) {
    r.add("triangle: enriched semantics has " + std::to_string(s.cat.n_obj) +
          " objects, algebra category has " + std::to_string(alg.cat.n_obj));
    return r;
  }
  const auto eq = wcat::find_equivalence(
      std::make_shared<const fincat::FinCategory>(s.cat),
      std::make_shared<const fincat::FinCategory>(alg.cat), max_candidates);
  if (!eq)
    r.add("triangle: no equivalence between the enriched semantics and the "
          "algebra category");
  return r;
}

}  // namespace catkit::algebra
