#ifndef METALIE_COMPOSITIONS_HPP_
#define METALIE_COMPOSITIONS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "metalie/poly.hpp"
#include "metalie/reduction.hpp"

namespace metalie {

  enum class CompositionKind { I = 1, II, III, IV, V, VI, VII };

  std::string to_string(CompositionKind k);

  struct CompositionOptions {
    // Enforce lcm(A, B) != <A B> for type I, i.e. skip coprime tails.
    bool strict_type1 = false;
  };

  // Thrown when a composition's side conditions do not hold.
  class SideConditionError : public Error {
   public:
    using Error::Error;
  };

  struct CompositionInstance {
    CompositionKind  kind = CompositionKind::I;
    std::size_t      f    = 0;
    std::size_t      g    = 0;
    // IV: {a}; VI: {a0, a1}; VII: {a0}; empty otherwise.
    std::vector<Gen> params;
    Word             w;
    Poly             value;
  };

  // Deterministic processing order: |w|, w, kind, params, f, g.
  bool composition_before(CompositionInstance const& a, CompositionInstance const& b);

  // Evaluates one composition of the monic polynomials f and g. The indices are
  // only recorded. Throws SideConditionError naming the failed condition.
  CompositionInstance compose(CompositionKind kind, Poly const& f, Poly const& g,
                              std::vector<Gen> const& params,
                              CompositionOptions const& opts = {},
                              std::size_t f_index = 0, std::size_t g_index = 0);

  // Every composition of the ordered pair (S[f], S[g]) with parameters ranging
  // over k generators, minus the instances known to be trivial: self
  // compositions of types I, V and VI, and type IV with f^(0) = 0 and a = a1.
  // Type I is produced only for the orientation with the larger leading word
  // first (lower index first on ties).
  std::vector<CompositionInstance> enumerate_compositions(std::size_t f, std::size_t g,
                                                          RelationSet const& s,
                                                          std::size_t k,
                                                          CompositionOptions const& opts = {});

  bool is_trivial(CompositionInstance const& c, RelationSet const& s);

}  // namespace metalie

#endif  // METALIE_COMPOSITIONS_HPP_
