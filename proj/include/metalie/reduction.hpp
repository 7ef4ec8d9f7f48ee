#ifndef METALIE_REDUCTION_HPP_
#define METALIE_REDUCTION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "metalie/poly.hpp"

namespace metalie {

  // A normal S-word.
  //
  // KindI is s * a1 * a2 * ... * an with an ascending tail and s-bar != a1.
  // KindII is u * s with u an R-word, s-bar != u and s^(0) != 0 (u * s is zero
  // otherwise).
  struct NormalSWord {
    enum class Kind { I, II };
    Kind        kind = Kind::I;
    std::size_t rel  = 0;
    Tail        tail;  // KindI only
    Word        u;     // KindII only

    static NormalSWord kind_i(std::size_t rel, Tail tail) {
      return {Kind::I, rel, std::move(tail), Word()};
    }
    static NormalSWord kind_ii(Word u, std::size_t rel) {
      return {Kind::II, rel, Tail(), std::move(u)};
    }
    friend bool operator==(NormalSWord const&, NormalSWord const&) = default;
  };

  // An indexed set of monic relations with the per-element data reductions need.
  class RelationSet {
   public:
    RelationSet() = default;
    explicit RelationSet(std::vector<Poly> relations);

    // Appends a relation; it must be monic. Returns its index.
    std::size_t add(Poly relation);

    std::size_t size() const noexcept { return rels_.size(); }
    bool        empty() const noexcept { return rels_.empty(); }
    Poly const& operator[](std::size_t i) const { return rels_[i]; }
    std::vector<Poly> const& polys() const noexcept { return rels_; }

    // Throws Error when ns violates the normal S-word conditions.
    void validate(NormalSWord const& ns) const;
    Poly value(NormalSWord const& ns) const;
    // Closed-form leading word of a valid normal S-word.
    Word leading(NormalSWord const& ns) const;

    // Some normal S-word whose leading word is w. KindI candidates are preferred
    // over KindII; within a kind the lowest relation index wins.
    std::optional<NormalSWord> find_reducer(Word const& w) const;
    bool is_irreducible(Word const& w) const { return !find_reducer(w); }

   private:
    struct Info {
      Word lead;
      bool has0 = false;
      Word lead0;  // leading letter of the (0)-part when has0
    };
    std::vector<Poly> rels_;
    std::vector<Info> info_;
    // Relations with an R-word leading word, bucketed by head.
    std::vector<std::vector<std::size_t>> by_head_;
    // Relations whose leading word is a letter, bucketed by that letter.
    std::vector<std::vector<std::size_t>> by_letter_;
    // Relations with a (0)-part, bucketed by the leading letter of that part.
    std::vector<std::vector<std::size_t>> by_lead0_;
  };

  Word normal_sword_leading(NormalSWord const& ns, RelationSet const& s);

  struct ReductionStep {
    Scalar      coefficient;
    NormalSWord word;
  };

  // Full normal form: every remaining word is S-irreducible.
  Poly normal_form(Poly f, RelationSet const& s);
  // As above, and records f - NF(f) as a combination of normal S-words.
  Poly normal_form(Poly f, RelationSet const& s, std::vector<ReductionStep>& log);

  // All irreducible words of length 1..max_len, ascending.
  std::vector<Word> irr_up_to(RelationSet const& s, std::size_t k, std::size_t max_len);
  // counts[l] = number of irreducible words of length l (counts[0] unused).
  std::vector<std::size_t> irr_counts(RelationSet const& s, std::size_t k,
                                      std::size_t max_len);

  // Rewrites the S-word s * u1 * ... * un (left-normed, u_i regular words) as a
  // linear combination of normal {s}-words, where s is relation 0 of `single`.
  std::vector<ReductionStep> rewrite_sword(RelationSet const& single,
                                           std::span<Word const> factors);

}  // namespace metalie

#endif  // METALIE_REDUCTION_HPP_
