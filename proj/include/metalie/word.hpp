#ifndef METALIE_WORD_HPP_
#define METALIE_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "metalie/scalar.hpp"

namespace metalie {

  // A generator is identified by its rank; larger rank = larger generator.
  using Gen = std::uint16_t;

  // A weakly ascending sequence of generators (a commutative word).
  using Tail = std::vector<Gen>;

  // Ordered generator names. Declaration order is ascending order.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);
    static Alphabet numbered(std::size_t k);  // names "0", "1", ..., "k-1"

    std::size_t size() const noexcept { return names_.size(); }
    bool        empty() const noexcept { return names_.empty(); }
    std::string const& name(Gen g) const { return names_.at(g); }
    std::vector<std::string> const& names() const noexcept { return names_; }
    // Throws Error for unknown names.
    Gen  rank(std::string const& name) const;
    bool contains(std::string const& name) const {
      return index_.count(name) != 0;
    }

    friend bool operator==(Alphabet const& a, Alphabet const& b) {
      return a.names_ == b.names_;
    }

   private:
    std::vector<std::string>             names_;
    std::unordered_map<std::string, Gen> index_;
  };

  // A regular word: a single letter, or a left-normed word a0 a1 ... an with
  // a0 > a1 <= a2 <= ... <= an. Stored canonically as (head, ascending tail).
  class Word {
   public:
    Word() = default;
    static Word letter(Gen g) { return Word(std::vector<Gen>{g}); }
    // Throws Error unless tail is nonempty, ascending and head > tail[0].
    static Word rword(Gen head, Tail tail);
    // Builds head <sorted tail> without validation; callers guarantee regularity.
    static Word make_unchecked(Gen head, std::span<Gen const> sorted_tail);
    static Word from_letters(std::initializer_list<Gen> letters);

    bool        is_letter() const noexcept { return letters_.size() == 1; }
    bool        is_rword() const noexcept { return letters_.size() >= 2; }
    std::size_t length() const noexcept { return letters_.size(); }
    Gen         head() const noexcept { return letters_.front(); }
    // Letter following the head (a1); only valid for R-words.
    Gen first() const noexcept { return letters_[1]; }
    std::span<Gen const> tail() const noexcept {
      return std::span<Gen const>(letters_).subspan(1);
    }
    std::vector<Gen> const& letters() const noexcept { return letters_; }

    std::string to_string(Alphabet const& alphabet) const;

    friend bool operator==(Word const&, Word const&) = default;
    // Degree-lexicographic: length first, then position-wise by rank.
    friend std::strong_ordering operator<=>(Word const& u, Word const& v) {
      if (u.letters_.size() != v.letters_.size()) {
        return u.letters_.size() <=> v.letters_.size();
      }
      return u.letters_ <=> v.letters_;
    }

   private:
    explicit Word(std::vector<Gen> letters) : letters_(std::move(letters)) {}
    std::vector<Gen> letters_;
  };

  std::strong_ordering compare(Word const& u, Word const& v);

  Tail sorted_tail(std::vector<Gen> multiset);

  // Multiset operations on ascending tails.
  bool tail_divides(std::span<Gen const> a, std::span<Gen const> l);
  Tail lcm_tail(std::span<Gen const> a, std::span<Gen const> b);
  // Throws Error unless a divides l.
  Tail quotient_tail(std::span<Gen const> l, std::span<Gen const> a);
  Tail merge_tail(std::span<Gen const> a, std::span<Gen const> b);

  // Every regular word of exactly `length` letters over k generators, ascending.
  std::vector<Word> enumerate_regular_words(std::size_t k, std::size_t length);
  // Number of regular words of the given length (without enumerating them).
  std::size_t count_regular_words(std::size_t k, std::size_t length);

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

}  // namespace metalie

#endif  // METALIE_WORD_HPP_
