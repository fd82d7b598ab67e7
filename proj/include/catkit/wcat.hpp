#pragma once

#include <optional>

#include "catkit/algebra.hpp"
#include "catkit/lexprof.hpp"

namespace catkit::wcat {

using fincat::FinCategory;
using fincat::FinCategoryPtr;
using fincat::FunctorData;
using fincat::LexBasePtr;
using fincat::SetFunctor;
using lexprof::CoendComposite;
using lexprof::LexProf1Cell;
using lexprof::ProfMorphism;
using lexprof::Tab;

/// Structural equality of extent bases (same lattice order, or same arity
/// truncation); pointer-distinct copies compare equal.
bool base_equal(const fincat::LexBase& a, const fincat::LexBase& b);

/// A category enriched in lex profunctors: every object carries an extent
/// base, homs are 1-cells between the extents, composition is stored
/// elementwise, and identities are 2-cells out of the unit 1-cell.
struct WCategory {
  std::vector<LexBasePtr> extent;
  std::vector<std::string> obj_names;
  std::vector<std::vector<LexProf1Cell>> hom;  // hom[X][Y]: extent[X] ↛ extent[Y]
  // comp[X][Y][Z][i][j][k]: flat table with entry g*|hom(X,Y)(i,j)|+f giving
  // the composite of g in hom(Y,Z)(j,k) after f in hom(X,Y)(i,j)
  std::vector<std::vector<std::vector<std::vector<std::vector<std::vector<Tab>>>>>> comp;
  std::vector<ProfMorphism> iota;  // iota[X]: I_{extent[X]} -> hom[X][X]
  std::string name;

  int n_obj() const { return static_cast<int>(extent.size()); }
  int hom_val(int X, int Y, int i, int j) const {
    return hom[static_cast<size_t>(X)][static_cast<size_t>(Y)].val(i, j);
  }
  int compose(int X, int Y, int Z, int i, int j, int k, int g, int f) const;
  /// iota[X] evaluated at a base arrow phi: i -> j.
  int id_elt(int X, int i, int j, int phi) const;
};

/// Allocates comp shells (right lengths, entries -1) once extents and homs
/// are in place.
void alloc_wcomp(WCategory& c);

/// All enrichment axioms: hom well-formedness and lexness, iota 2-cells,
/// naturality/dinaturality of comp (it descends to the coend), elementwise
/// associativity and unit laws, and derived functoriality of iota.
Report check_wcategory(const WCategory& c);

/// The unit W-category on one object of extent x.
WCategory unit_wcategory(LexBasePtr x);

/// An extent-preserving object map plus a 2-cell per hom pair.
struct WFunctorData {
  std::vector<int> obj_map;
  std::vector<std::vector<ProfMorphism>> hom_map;  // [X][Y]
  std::string name;
};

Report check_wfunctor(const WCategory& src, const WCategory& dst, const WFunctorData& F);
bool wfunctor_fully_faithful(const WCategory& src, const WCategory& dst,
                             const WFunctorData& F);
std::vector<WFunctorData> enumerate_wfunctors(const WCategory& src, const WCategory& dst,
                                              long long max_candidates = 10'000'000);
/// Exhaustive search over extent-preserving object bijections with
/// invertible hom 2-cells.
std::optional<WFunctorData> find_wcat_iso(const WCategory& c, const WCategory& d,
                                          long long max_candidates = 10'000'000);

/// A W-natural transformation: one 2-cell I_{extent X} -> hom_dst(FX, GX)
/// per object, subject to the naturality square against every hom element.
struct WTransformationData {
  std::vector<ProfMorphism> component;
};

Report check_wtransformation(const WCategory& src, const WCategory& dst,
                             const WFunctorData& F, const WFunctorData& G,
                             const WTransformationData& t);

/// A partially finitely complete category: a finite category with a
/// left-exact sieve presented by a finite generating family of lex functors.
struct SieveGen {
  LexBasePtr base;
  FunctorData F;  // F.src == base->cat, F.dst == the parfl category
  std::string name;
};

struct ParflCategory {
  FinCategoryPtr cat;
  std::vector<SieveGen> gens;
  std::string name;
};

/// Generator lexness and joint surjectivity on objects.
Report check_parfl(const ParflCategory& p);

/// Objects of extent x with morphisms the 2-cells I_x -> hom(X,Y).
FinCategory underlying_category(const WCategory& c, LexBasePtr x,
                                long long max_candidates = 10'000'000);

/// One object per sieve generator; hom(X,Y)(i,j) = cat-hom(Xi, Yj).
WCategory gamma(const ParflCategory& p);

/// The integral category of a W-category: objects are pairs (X,i), morphisms
/// are hom-cell elements, the sieve is generated by the functors iota_X.
struct IntegrateResult {
  ParflCategory parfl;
  std::vector<std::pair<int, int>> obj_pair;  // integral object -> (X, i)
  std::vector<std::vector<int>> obj_index;    // [X][i] -> integral object
};

IntegrateResult integrate(const WCategory& c);

/// The unit X ↦ iota_X of the adjunction; always fully faithful (re-checked).
WFunctorData eta(const WCategory& c);

/// The counit (X,i) ↦ Xi with its equivalence certificate: fully faithful,
/// essentially surjective, sieve-reflecting.
struct EpsilonResult {
  FunctorData F;
  Report report;
};

EpsilonResult epsilon(const ParflCategory& p);

/// Functors integrate(c).cat -> d.cat that carry each sieve generator
/// iota_X exactly onto a generator of d (the strict transposable form).
std::vector<FunctorData> enumerate_parfl_morphisms(const IntegrateResult& ic,
                                                   const ParflCategory& d,
                                                   long long max_candidates = 10'000'000);

/// The adjunction transpositions: a W-functor c -> gamma(d) flattens to a
/// functor integrate(c).cat -> d.cat and conversely.
FunctorData transpose_down(const WCategory& c, const IntegrateResult& ic,
                           const ParflCategory& d, const WCategory& gd,
                           const WFunctorData& F);
WFunctorData transpose_up(const WCategory& c, const IntegrateResult& ic,
                          const ParflCategory& d, const WCategory& gd,
                          const FunctorData& G);

/// A claimed tensor W · X = WX: the coevaluation u, and optionally the
/// counit-side witness u* together with a left-dual certificate for W,
/// enabling the exact two-square criterion.
struct TensorWitness {
  int X = 0;
  int WX = 0;
  LexProf1Cell W;  // extent[X] ↛ extent[WX]
  ProfMorphism u;  // W -> hom(X, WX)
  std::optional<lexprof::DualityCertificate> dual;
  std::optional<ProfMorphism> ustar;  // W* -> hom(WX, X)
};

/// With dual+ustar: exact elementwise verification of both squares; without:
/// bounded verification of the universal bijection over a finite family of
/// test 1-cells (identities and companions/conjoints of lex maps between the
/// extents involved).
Report is_tensor(const WCategory& c, const TensorWitness& w,
                 long long max_candidates = 10'000'000);

/// For every object X and every lex map F from a family base into extent[X],
/// searches an object Y and an invertible natural transformation
/// iota_X after F ≅ iota_Y inside integrate(c).
Report check_absolute_tensored(const WCategory& c,
                               const std::vector<LexBasePtr>& family,
                               long long max_candidates = 10'000'000);

/// A monad in the one-object sense: a 1-cell on a base with unit and
/// multiplication 2-cells (the multiplication is read on coend_prof(T,T)).
struct MonadData {
  LexProf1Cell T;
  ProfMorphism unit;  // I -> T
  ProfMorphism mult;  // T⊗T -> T
  std::string name;
};

/// 2-cell validity plus the unit and associativity laws, chased through
/// coend representatives.
Report check_monad(const MonadData& m);

WCategory monad_to_oneobject(const MonadData& m);

MonadData identity_monad(LexBasePtr base);

/// All monads on a lattice base: subsingleton 1-cells are relations, so this
/// enumerates relations containing the order, transitive, and stable under
/// meets in the second argument.
std::vector<MonadData> enumerate_lattice_monads(LexBasePtr base);

/// The truncated-arity embedding T(n,m) = (T n)^m with actions by
/// reindexing/substitution; the monad structure comes from the Kleisli data.
MonadData monad_from_tabmonad(const algebra::TabMonad& t);

/// Monad 1-cell isomorphism commuting with unit and mult.
bool monad_data_iso(const MonadData& a, const MonadData& b,
                    long long max_candidates = 10'000'000);

struct LawvereWCat {
  LexBasePtr base;
  ParflCategory theory;
  FunctorData J;
  std::string name;
};

Report check_lawvere(const LawvereWCat& lw);
bool lawvere_equal(const LawvereWCat& a, const LawvereWCat& b);

/// integrate of the one-object W-category, with J = iota as the single
/// sieve generator.
LawvereWCat theory_from_monad(const MonadData& m);

/// One object, hom T(i,j) = theory-hom(i,j), actions along J, unit from J,
/// multiplication from composition.
MonadData monad_from_theory(const LawvereWCat& lw);

/// The coend action of a 1-cell on a lex point: (M * X)(b) = coend over a of
/// M(a,b) × Xa, computed by coequalize; the result is checked to be a point.
SetFunctor act_S(const LexProf1Cell& M, const SetFunctor& X,
                 long long max_candidates = 10'000'000);

/// A W-functor into the semantics W-category S_k, stored by value tables:
/// each object gets a lex point, each hom element a concrete function
/// between point values (explicit tables; over truncated bases the ambient
/// function spaces are too large to index).
struct SemFunctor {
  std::vector<SetFunctor> point;  // per object X of c
  // phi[X][Y][i][j][t]: the function point[X](i) -> point[Y](j) assigned to
  // hom(X,Y)(i,j) element t
  std::vector<std::vector<std::vector<std::vector<std::vector<Tab>>>>> phi;
};

/// A W-transformation between semantics functors: a natural family of
/// carrier maps per object of c.
struct SemMorphism {
  std::vector<std::vector<Tab>> nat;  // [X][a]: table F.point[X](a) -> G.point[X](a)
};

/// The category of W-functors c -> S_k and W-transformations, where S_k has
/// the bounded lex points as objects and function sets as homs.
struct SemanticsResult {
  FinCategory cat;
  std::vector<SemFunctor> objects;
  std::vector<std::vector<std::vector<SemMorphism>>> mor;  // [i][j][k]
};

SemanticsResult semantics(const WCategory& c, int carrier_bound,
                          long long max_candidates = 10'000'000);

/// Exhaustive search for an equivalence (fully faithful + essentially
/// surjective functor) between two finite categories.
std::optional<FunctorData> find_equivalence(FinCategoryPtr a, FinCategoryPtr b,
                                            long long max_candidates = 10'000'000);

}  // namespace catkit::wcat
