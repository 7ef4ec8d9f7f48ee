#ifndef METALIE_POLY_HPP_
#define METALIE_POLY_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "metalie/scalar.hpp"
#include "metalie/word.hpp"

namespace metalie {

  // An element of the free metabelian Lie algebra: a finite linear combination
  // of regular words with nonzero coefficients.
  //
  // Terms are kept in a map ordered by the degree-lexicographic order, so all
  // letters (the (0)-part) come first and the leading word is the last entry.
  class Poly {
   public:
    using Terms = std::map<Word, Scalar>;

    Poly() = default;
    Poly(Word const& w, Scalar c = Scalar(1));  // NOLINT(google-explicit-constructor)
    static Poly letter(Gen g) { return Poly(Word::letter(g)); }

    bool         is_zero() const noexcept { return terms_.empty(); }
    std::size_t  size() const noexcept { return terms_.size(); }
    Terms const& terms() const& noexcept { return terms_; }
    Terms const& terms() const&& = delete;
    Scalar       coefficient(Word const& w) const;

    // Throws Error on the zero polynomial.
    std::pair<Word const&, Scalar const&> leading() const;
    Word const& leading_word() const { return leading().first; }
    Scalar const& leading_coefficient() const { return leading().second; }

    // f = f^(1) + f^(0): R-word part and letter part.
    Poly part1() const;
    Poly part0() const;
    bool has_part0() const noexcept {
      return !terms_.empty() && terms_.begin()->first.is_letter();
    }
    bool has_part1() const noexcept {
      return !terms_.empty() && terms_.rbegin()->first.is_rword();
    }
    // Leading letter of the (0)-part with its coefficient; throws when absent.
    std::pair<Word const&, Scalar const&> leading0() const;
    std::pair<Word const&, Scalar const&> leading1() const;

    // this += c * w
    void add_term(Word const& w, Scalar const& c);
    // this += c * other
    void add_scaled(Poly const& other, Scalar const& c);

    Poly& operator+=(Poly const& o) {
      add_scaled(o, Scalar(1));
      return *this;
    }
    Poly& operator-=(Poly const& o) {
      add_scaled(o, Scalar(-1));
      return *this;
    }
    Poly& operator*=(Scalar const& c);

    friend Poly operator+(Poly a, Poly const& b) { return a += b; }
    friend Poly operator-(Poly a, Poly const& b) { return a -= b; }
    friend Poly operator*(Poly a, Scalar const& c) { return a *= c; }
    friend Poly operator*(Scalar const& c, Poly a) { return a *= c; }
    Poly operator-() const { return *this * Scalar(-1); }

    friend bool operator==(Poly const& a, Poly const& b) {
      return a.terms_ == b.terms_;
    }

    // Maps every coefficient into `field`.
    Poly in(Field const& field) const;

    // "2*[x,y] - x" style; "0" for the zero polynomial.
    std::string to_string(Alphabet const& alphabet) const;

   private:
    Terms terms_;
  };

  Poly make_monic(Poly const& f);
  Poly make_0_monic(Poly const& f);
  Poly make_1_monic(Poly const& f);

  // The multiplication table of the free metabelian Lie algebra.
  Poly mul_rword_gen(Word const& u, Gen b);
  Poly mul_gen_gen(Gen a, Gen b);
  Poly mul_words(Word const& u, Word const& v);
  Poly mul(Poly const& f, Poly const& g);
  // f * b for a single generator b.
  Poly mul(Poly const& f, Gen b);
  // ((g1 g2) g3) ... gm. Throws Error on an empty sequence.
  Poly bracket_left_normed(std::span<Gen const> gens);
  // f * t1 * t2 * ... (left-normed).
  Poly mul_left_normed(Poly f, std::span<Gen const> letters);

}  // namespace metalie

#endif  // METALIE_POLY_HPP_
