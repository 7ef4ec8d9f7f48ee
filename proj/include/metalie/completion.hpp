#ifndef METALIE_COMPLETION_HPP_
#define METALIE_COMPLETION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "metalie/compositions.hpp"
#include "metalie/presentation.hpp"
#include "metalie/reduction.hpp"

namespace metalie {

  struct CompletionConfig {
    // Compositions with |w| above this are not examined; 0 means 2 * |X|.
    std::size_t        max_word_degree = 0;
    std::size_t        max_passes      = 100000;
    unsigned           workers         = 1;
    CompositionOptions compositions;
    bool               record_events = true;
  };

  enum class CompletionStatus { complete, degree_capped };

  std::string to_string(CompletionStatus s);

  // One examined (or skipped) composition.
  struct CompletionEvent {
    CompositionKind     kind;
    std::size_t         f;
    std::size_t         g;
    std::vector<Gen>    params;
    Word                w;
    bool                over_cap = false;
    bool                trivial  = false;
    std::optional<Word> adjoined;  // leading word of the adjoined element
  };

  struct CompletionStats {
    std::size_t examined   = 0;
    std::size_t nontrivial = 0;
    std::size_t adjoined   = 0;
    std::size_t passes     = 0;
    std::size_t over_cap   = 0;
  };

  struct CompletionResult {
    std::vector<Poly>            basis;
    std::vector<std::string>     origins;
    CompletionStatus             status       = CompletionStatus::complete;
    std::size_t                  degree_bound = 0;
    std::size_t                  input_count  = 0;
    CompletionStats              stats;
    std::vector<CompletionEvent> events;
  };

  // Rewrites f so that no word of its (1)-part contains the leading letter of
  // f^(0) as a strict subword, by repeated self compositions of type II. The
  // ideal, the (0)-part and the bound on the leading word are preserved.
  Poly preprocess_relation(Poly f);

  // Shirshov's algorithm. Deterministic for any worker count.
  CompletionResult shirshov_complete(Presentation const& p, CompletionConfig const& cfg = {});

  struct GsCheckConfig {
    std::size_t        max_word_degree = 0;  // 0: no bound on |w|
    unsigned           workers         = 1;
    CompositionOptions compositions;
  };

  struct GsCheckResult {
    bool                               ok       = true;
    std::size_t                        examined = 0;
    std::optional<CompositionInstance> witness;
  };

  // True iff every enumerated composition of S is trivial modulo S. On failure
  // the witness is the first nontrivial instance in processing order.
  GsCheckResult is_gs_basis(RelationSet const& s, std::size_t k,
                            GsCheckConfig const& cfg = {});

  // Drops elements whose leading word is reducible by the others, then
  // normal-forms the lower terms of each survivor against the rest. Output is
  // sorted by leading word.
  std::vector<Poly> reduce_basis(std::vector<Poly> const& s);

  // Completion of a presentation whose relations are single R-word monomials,
  // by pairwise head-sharing expansion with set-union tails.
  CompletionResult monomial_complete(Presentation const& p);

  // Completes both presentations (relations without (0)-part) separately and
  // checks that the union is a Groebner-Shirshov basis over the disjoint union
  // of the generator sets (P1's generators below P2's).
  bool check_free_product(Presentation const& p1, Presentation const& p2,
                    CompletionConfig const& cfg = {});

  // Renames generators through an order-preserving map.
  Poly remap_generators(Poly const& f, std::span<Gen const> map);

}  // namespace metalie

#endif  // METALIE_COMPLETION_HPP_
