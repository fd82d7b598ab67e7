#pragma once

#include <optional>
#include <random>

#include "catkit/fincat.hpp"

namespace catkit::lexprof {

using fincat::FunctorData;
using fincat::LexBase;
using fincat::LexBasePtr;

using Tab = std::vector<int>;
using TabList = std::vector<Tab>;

/// A finite-set-valued 1-cell src ↛ dst: a set value(a,b) per object pair,
/// contravariant action of src arrows (lact) and covariant action of dst
/// arrows (ract).
struct LexProf1Cell {
  LexBasePtr src, dst;
  std::vector<std::vector<int>> value;                  // [a][b]
  std::vector<std::vector<std::vector<TabList>>> lact;  // [a2][a][b][alpha: a2->a]
  std::vector<std::vector<std::vector<TabList>>> ract;  // [a][b][b2][beta: b->b2]
  std::string name;

  int val(int a, int b) const { return value[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
  const Tab& lact_tab(int a2, int a, int b, int alpha) const {
    return lact[static_cast<size_t>(a2)][static_cast<size_t>(a)][static_cast<size_t>(b)]
               [static_cast<size_t>(alpha)];
  }
  const Tab& ract_tab(int a, int b, int b2, int beta) const {
    return ract[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(b2)]
               [static_cast<size_t>(beta)];
  }
};

/// Allocates action shells (tables of the right length, entries -1) once
/// `value` and the bases are set.
void alloc_cell(LexProf1Cell& cell);

/// Functoriality and bifunctoriality of the two actions.
Report check_prof_cell(const LexProf1Cell& cell);
/// Lexness in the second variable, relative to dst's terminal and cones.
Report check_prof_lex(const LexProf1Cell& cell);
Report check_prof(const LexProf1Cell& cell);

bool cell_equal(const LexProf1Cell& x, const LexProf1Cell& y);

LexProf1Cell identity_prof(LexBasePtr base);

/// A 2-cell between parallel 1-cells, stored componentwise.
struct ProfMorphism {
  std::vector<std::vector<Tab>> component;  // [a][b]: table src.value(a,b) -> dst.value(a,b)
};

Report check_prof_morphism(const LexProf1Cell& S, const LexProf1Cell& D, const ProfMorphism& m);
bool is_prof_iso(const LexProf1Cell& S, const LexProf1Cell& D, const ProfMorphism& m);
ProfMorphism identity_prof_morphism(const LexProf1Cell& S);
ProfMorphism vcompose(const ProfMorphism& g, const ProfMorphism& f);
std::vector<ProfMorphism> enumerate_prof_morphisms(const LexProf1Cell& S, const LexProf1Cell& D,
                                                   long long max_candidates = 10'000'000);
std::optional<ProfMorphism> find_prof_iso(const LexProf1Cell& S, const LexProf1Cell& D,
                                          long long max_candidates = 10'000'000);

/// Composite N⊗M with the coend bookkeeping needed to chase elements:
/// raw summand indices, quotient classes, and canonical representatives.
struct CoendComposite {
  LexProf1Cell cell;  // the composite M.src ↛ N.dst
  int n_mid = 0;      // object count of the middle base
  std::vector<std::vector<int>> msize, nsize;        // copies of the factor value sizes
  std::vector<std::vector<std::vector<int>>> offset; // [a][c][b]: first raw index of summand b
  std::vector<std::vector<Tab>> raw_to_class;        // [a][c]
  std::vector<std::vector<Tab>> class_rep;           // [a][c]: least raw index per class

  int raw_index(int a, int c, int b, int x, int y) const;
  /// class of summand element (b, x, y)
  int cls(int a, int c, int b, int x, int y) const;
  struct RawTriple { int b, x, y; };
  RawTriple decode_raw(int a, int c, int raw) const;
  RawTriple rep(int a, int c, int k) const { // canonical representative of class k
    return decode_raw(a, c, class_rep[static_cast<size_t>(a)][static_cast<size_t>(c)]
                                     [static_cast<size_t>(k)]);
  }
};

/// Coend composite: (N⊗M)(a,c) = coequalized disjoint union over the middle
/// object b of N(b,c) × M(a,b); throws CompositionError on base mismatch and
/// InvariantError if the induced actions fail to descend or (for lex inputs)
/// the result fails the lexness check.
CoendComposite compose_prof(const LexProf1Cell& N, const LexProf1Cell& M);

/// The same coend quotient without the lexness certification. Over truncated
/// arity bases the quotient of two lex cells can fail to be lex when middle
/// supports exceed the truncation bound; monad multiplication only needs the
/// descent data, so it is computed through this entry point.
CoendComposite coend_prof(const LexProf1Cell& N, const LexProf1Cell& M);

/// Canonical unitor/associator 2-cells, always isomorphisms.
ProfMorphism left_unitor(const LexProf1Cell& M, const CoendComposite& IM);
ProfMorphism right_unitor(const LexProf1Cell& M, const CoendComposite& MI);
/// From (P⊗N)⊗M to P⊗(N⊗M).
ProfMorphism associator(const CoendComposite& PN, const CoendComposite& NM,
                        const CoendComposite& PN_M, const CoendComposite& P_NM);

/// Right closure [M,P](b,c): natural families (φ_a : M(a,b) -> P(a,c)),
/// with the family tables kept for evaluation.
struct ClosureCell {
  LexProf1Cell cell;  // M.dst ↛ P.dst
  // families[b][c][k][a]: table M(a,b) -> P(a,c) of the k-th family
  std::vector<std::vector<std::vector<TabList>>> families;
};

ClosureCell right_closure(const LexProf1Cell& M, const LexProf1Cell& P,
                          long long max_candidates = 10'000'000);

/// Closure adjunction transpositions between 2-cells N⊗M -> P and N -> [M,P].
ProfMorphism transpose_to_closure(const LexProf1Cell& N, const LexProf1Cell& M,
                                  const LexProf1Cell& P, const CoendComposite& NM,
                                  const ClosureCell& MP, const ProfMorphism& h);
ProfMorphism transpose_from_closure(const LexProf1Cell& N, const LexProf1Cell& M,
                                    const LexProf1Cell& P, const CoendComposite& NM,
                                    const ClosureCell& MP, const ProfMorphism& k);

/// Companion F_*(b,a) = B(b,Fa) as a 1-cell B ↛ A; conjoint F^*(a,b) = B(Fa,b)
/// as a 1-cell A ↛ B, for a lex functor F between the base categories.
LexProf1Cell companion(LexBasePtr A, LexBasePtr B, const FunctorData& F);
LexProf1Cell conjoint(LexBasePtr A, LexBasePtr B, const FunctorData& F);

/// Adjunction W* ⊣ W exhibited by unit eta: I -> W⊗W* and counit
/// eps: W*⊗W -> I, with the composites carried along.
struct DualityCertificate {
  LexProf1Cell W;      // X ↛ Y
  LexProf1Cell Wstar;  // Y ↛ X
  CoendComposite WWstar;  // W ⊗ W*: Y ↛ Y
  CoendComposite WstarW;  // W* ⊗ W: X ↛ X
  ProfMorphism eta;  // I_Y -> W⊗W*
  ProfMorphism eps;  // W*⊗W -> I_X
};

/// Verifies both triangle identities elementwise through the coend
/// representatives, plus 2-cell well-formedness of eta and eps.
Report check_duality(const DualityCertificate& cert);

/// Candidate dual [W, I_src] with eps = evaluation; eta found by 2-cell
/// enumeration. Absence of a dual is a legitimate nullopt.
std::optional<DualityCertificate> search_left_dual(const LexProf1Cell& W,
                                                   long long max_candidates = 10'000'000);

/// Direct unit/counit construction for the adjunction conjoint(F) ⊣ companion(F).
DualityCertificate companion_duality(LexBasePtr A, LexBasePtr B, const FunctorData& F);

/// Random subsingleton-valued lex 1-cell between lattice bases (an antitone
/// family of filters), for property tests.
LexProf1Cell random_lex_cell(LexBasePtr A, LexBasePtr B, std::mt19937& rng);

}  // namespace catkit::lexprof
