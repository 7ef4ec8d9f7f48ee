#include "metalie/word.hpp"

#include <algorithm>
#include <limits>

namespace metalie {

  Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > std::numeric_limits<Gen>::max()) {
      throw Error("too many generators");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) {
        throw Error("empty generator name");
      }
      if (!index_.emplace(names_[i], static_cast<Gen>(i)).second) {
        throw Error("duplicate generator '" + names_[i] + "'");
      }
    }
  }

  Alphabet Alphabet::numbered(std::size_t k) {
    std::vector<std::string> names;
    names.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      names.push_back(std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  Gen Alphabet::rank(std::string const& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) {
      throw Error("unknown generator '" + name + "'");
    }
    return it->second;
  }

  Word Word::rword(Gen head, Tail tail) {
    if (tail.empty()) {
      throw Error("an R-word needs a nonempty tail");
    }
    if (!std::is_sorted(tail.begin(), tail.end())) {
      throw Error("tail is not ascending");
    }
    if (!(head > tail.front())) {
      throw Error("head must exceed the first tail letter");
    }
    std::vector<Gen> letters;
    letters.reserve(tail.size() + 1);
    letters.push_back(head);
    letters.insert(letters.end(), tail.begin(), tail.end());
    return Word(std::move(letters));
  }

  Word Word::make_unchecked(Gen head, std::span<Gen const> sorted_tail) {
    std::vector<Gen> letters;
    letters.reserve(sorted_tail.size() + 1);
    letters.push_back(head);
    letters.insert(letters.end(), sorted_tail.begin(), sorted_tail.end());
    return Word(std::move(letters));
  }

  Word Word::from_letters(std::initializer_list<Gen> letters) {
    if (letters.size() == 0) {
      throw Error("empty word");
    }
    if (letters.size() == 1) {
      return letter(*letters.begin());
    }
    return rword(*letters.begin(), Tail(letters.begin() + 1, letters.end()));
  }

  std::string Word::to_string(Alphabet const& alphabet) const {
    if (is_letter()) {
      return alphabet.name(head());
    }
    std::string out = "[";
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += alphabet.name(letters_[i]);
    }
    out += ']';
    return out;
  }

  std::strong_ordering compare(Word const& u, Word const& v) {
    return u <=> v;
  }

  Tail sorted_tail(std::vector<Gen> multiset) {
    std::sort(multiset.begin(), multiset.end());
    return multiset;
  }

  bool tail_divides(std::span<Gen const> a, std::span<Gen const> l) {
    return std::includes(l.begin(), l.end(), a.begin(), a.end());
  }

  Tail lcm_tail(std::span<Gen const> a, std::span<Gen const> b) {
    Tail out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Tail quotient_tail(std::span<Gen const> l, std::span<Gen const> a) {
    if (!tail_divides(a, l)) {
      throw Error("quotient_tail: divisor does not divide");
    }
    Tail out;
    out.reserve(l.size() - a.size());
    std::set_difference(
        l.begin(), l.end(), a.begin(), a.end(), std::back_inserter(out));
    return out;
  }

  Tail merge_tail(std::span<Gen const> a, std::span<Gen const> b) {
    Tail out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  namespace {
    // Calls f(tail) for every ascending tail of `len` letters drawn from
    // [lo, k), in lexicographic order.
    template <typename F>
    void for_each_tail(std::size_t k, std::size_t len, Tail& cur, Gen lo, F&& f) {
      if (cur.size() == len) {
        f(cur);
        return;
      }
      for (std::size_t g = lo; g < k; ++g) {
        cur.push_back(static_cast<Gen>(g));
        for_each_tail(k, len, cur, static_cast<Gen>(g), f);
        cur.pop_back();
      }
    }

    std::size_t binomial(std::size_t n, std::size_t r) {
      if (r > n) {
        return 0;
      }
      r = std::min(r, n - r);
      std::size_t out = 1;
      for (std::size_t i = 1; i <= r; ++i) {
        out = out * (n - r + i) / i;
      }
      return out;
    }
  }  // namespace

  std::vector<Word> enumerate_regular_words(std::size_t k, std::size_t length) {
    std::vector<Word> out;
    if (length == 0 || k == 0) {
      return out;
    }
    if (length == 1) {
      for (std::size_t g = 0; g < k; ++g) {
        out.push_back(Word::letter(static_cast<Gen>(g)));
      }
      return out;
    }
    out.reserve(count_regular_words(k, length));
    Tail cur;
    for (std::size_t h = 1; h < k; ++h) {
      for (std::size_t first = 0; first < h; ++first) {
        cur.assign(1, static_cast<Gen>(first));
        for_each_tail(k, length - 1, cur, static_cast<Gen>(first), [&](Tail const& t) {
          out.push_back(Word::make_unchecked(static_cast<Gen>(h), t));
        });
      }
    }
    return out;
  }

  std::size_t count_regular_words(std::size_t k, std::size_t length) {
    if (length == 0) {
      return 0;
    }
    if (length == 1) {
      return k;
    }
    std::size_t const m     = length - 1;
    std::size_t       total = 0;
    for (std::size_t h = 0; h < k; ++h) {
      // ascending tails of length m over k letters, minus those with min >= h
      total += binomial(k + m - 1, m) - binomial(k - h + m - 1, m);
    }
    return total;
  }

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = w.length();
    for (Gen g : w.letters()) {
      h = h * 1000003U ^ g;
    }
    return h;
  }

}  // namespace metalie
