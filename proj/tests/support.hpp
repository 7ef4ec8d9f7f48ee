#ifndef METALIE_TESTS_SUPPORT_HPP_
#define METALIE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "metalie/completion.hpp"
#include "metalie/presentation.hpp"
#include "metalie/reduction.hpp"

namespace metalie::testing {

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline Gen random_gen(Rng& rng, std::size_t k) {
    return static_cast<Gen>(uniform(rng, 0, k - 1));
  }

  // Uniform-ish regular word of the given length (k >= 2 for length >= 2).
  inline Word random_word_of_length(Rng& rng, std::size_t k, std::size_t len) {
    if (len == 1) {
      return Word::letter(random_gen(rng, k));
    }
    while (true) {
      Tail t(len - 1);
      for (auto& g : t) {
        g = random_gen(rng, k);
      }
      std::sort(t.begin(), t.end());
      if (t.front() + 1U >= k) {
        continue;
      }
      auto const head = static_cast<Gen>(uniform(rng, t.front() + 1U, k - 1));
      return Word::rword(head, t);
    }
  }

  inline Word random_word(Rng& rng, std::size_t k, std::size_t max_len) {
    return random_word_of_length(rng, k, uniform(rng, 1, max_len));
  }

  inline Word random_rword(Rng& rng, std::size_t k, std::size_t max_len) {
    return random_word_of_length(rng, k, uniform(rng, 2, max_len));
  }

  inline Scalar random_coefficient(Rng& rng) {
    static int const values[] = {-3, -2, -1, 1, 2, 3};
    return Scalar(values[uniform(rng, 0, 5)]);
  }

  inline Poly random_poly(Rng& rng, std::size_t k, std::size_t max_len, std::size_t terms) {
    Poly f;
    for (std::size_t i = 0; i < terms; ++i) {
      f.add_term(random_word(rng, k, max_len), random_coefficient(rng));
    }
    return f;
  }

  inline Poly random_letter_poly(Rng& rng, std::size_t k) {
    Poly f;
    for (std::size_t i = 0; i < k; ++i) {
      f.add_term(Word::letter(static_cast<Gen>(i)), Scalar(static_cast<int>(uniform(rng, 0, 6)) - 3));
    }
    return f;
  }

  // Random presentation: relations are sums of 1..3 words of length <= max_len
  // with coefficients +-1.
  inline Presentation random_presentation(Rng& rng, std::size_t k, std::size_t nrels,
                                          std::size_t max_len) {
    Presentation p;
    p.generators = Alphabet::numbered(k);
    while (p.relations.size() < nrels) {
      Poly        f;
      std::size_t terms = uniform(rng, 1, 3);
      for (std::size_t i = 0; i < terms; ++i) {
        f.add_term(random_word(rng, k, max_len), uniform(rng, 0, 1) == 0 ? Scalar(1) : Scalar(-1));
      }
      if (!f.is_zero()) {
        p.relations.push_back(make_monic(f));
      }
    }
    return p;
  }

  // A random valid normal S-word, or nullopt after a few failed draws.
  inline std::optional<NormalSWord> random_normal_sword(Rng& rng, RelationSet const& s,
                                                        std::size_t k, std::size_t max_extra) {
    for (int attempt = 0; attempt < 20; ++attempt) {
      std::size_t const rel = uniform(rng, 0, s.size() - 1);
      NormalSWord       ns;
      if (uniform(rng, 0, 2) != 0) {
        Tail t(uniform(rng, 0, max_extra));
        for (auto& g : t) {
          g = random_gen(rng, k);
        }
        std::sort(t.begin(), t.end());
        ns = NormalSWord::kind_i(rel, t);
      } else {
        if (k < 2) {
          continue;
        }
        ns = NormalSWord::kind_ii(random_rword(rng, k, max_extra + 1), rel);
      }
      try {
        s.validate(ns);
        return ns;
      } catch (Error const&) {
      }
    }
    return std::nullopt;
  }

  // Random linear combination of normal S-word values; an element of Id(S).
  inline Poly random_ideal_element(Rng& rng, RelationSet const& s, std::size_t k,
                                   std::size_t terms, std::size_t max_extra) {
    Poly f;
    for (std::size_t i = 0; i < terms; ++i) {
      if (auto ns = random_normal_sword(rng, s, k, max_extra)) {
        f.add_scaled(s.value(*ns), random_coefficient(rng));
      }
    }
    return f;
  }

  inline std::set<Word> leading_set(std::vector<Poly> const& v) {
    std::set<Word> out;
    for (auto const& f : v) {
      out.insert(f.leading_word());
    }
    return out;
  }

  // Exact row space keyed by leading word.
  class Span {
   public:
    void insert(Poly row) {
      row = reduce(std::move(row));
      if (!row.is_zero()) {
        Word w = row.leading_word();
        rows_.emplace(std::move(w), make_monic(row));
      }
    }
    Poly reduce(Poly row) const {
      // leading-term elimination, then the rest of the terms from the top down
      Poly rest;
      while (!row.is_zero()) {
        auto const [w, c] = row.leading();
        auto       it     = rows_.find(w);
        if (it == rows_.end()) {
          rest.add_term(w, c);
          row.add_term(Word(w), -Scalar(c));
          continue;
        }
        row.add_scaled(it->second, -Scalar(c));
      }
      return rest;
    }
    bool contains(Poly const& f) const { return reduce(f).is_zero(); }

   private:
    std::map<Word, Poly> rows_;
  };

  // All normal S-words with leading word below w.
  inline std::vector<NormalSWord> normal_swords_below(RelationSet const& s, Word const& w,
                                                      std::size_t k) {
    std::vector<NormalSWord> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::size_t const ls = s[i].leading_word().length();
      for (std::size_t extra = 0; ls + extra <= w.length(); ++extra) {
        // ascending tails of the given size
        Tail t(extra, 0);
        while (true) {
          NormalSWord ns = NormalSWord::kind_i(i, t);
          try {
            s.validate(ns);
            if (s.leading(ns) < w) {
              out.push_back(ns);
            }
          } catch (Error const&) {
          }
          std::size_t pos = extra;
          while (pos > 0 && t[pos - 1] + 1U == k) {
            --pos;
          }
          if (pos == 0) {
            break;
          }
          Gen const next = static_cast<Gen>(t[pos - 1] + 1);
          for (std::size_t j = pos - 1; j < extra; ++j) {
            t[j] = next;
          }
        }
      }
      if (!s[i].has_part0()) {
        continue;
      }
      for (std::size_t l = 2; l < w.length(); ++l) {
        for (auto const& u : enumerate_regular_words(k, l)) {
          NormalSWord ns = NormalSWord::kind_ii(u, i);
          try {
            s.validate(ns);
            if (s.leading(ns) < w) {
              out.push_back(ns);
            }
          } catch (Error const&) {
          }
        }
      }
    }
    return out;
  }

  // f == 0 mod (S, w): f lies in the span of normal S-words with leading < w.
  inline bool trivial_mod(Poly const& f, RelationSet const& s, Word const& w, std::size_t k) {
    Span span;
    for (auto const& ns : normal_swords_below(s, w, k)) {
      span.insert(s.value(ns));
    }
    return span.contains(f);
  }

}  // namespace metalie::testing

#endif  // METALIE_TESTS_SUPPORT_HPP_
