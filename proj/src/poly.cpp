#include "metalie/poly.hpp"

#include <algorithm>

namespace metalie {

  Poly::Poly(Word const& w, Scalar c) {
    if (!c.is_zero()) {
      terms_.emplace(w, std::move(c));
    }
  }

  Scalar Poly::coefficient(Word const& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
  }

  std::pair<Word const&, Scalar const&> Poly::leading() const {
    if (terms_.empty()) {
      throw Error("leading word of the zero polynomial");
    }
    auto const& [w, c] = *terms_.rbegin();
    return {w, c};
  }

  std::pair<Word const&, Scalar const&> Poly::leading0() const {
    if (!has_part0()) {
      throw Error("polynomial has no (0)-part");
    }
    auto it = terms_.lower_bound(Word::letter(0));
    auto last = it;
    for (; it != terms_.end() && it->first.is_letter(); ++it) {
      last = it;
    }
    return {last->first, last->second};
  }

  std::pair<Word const&, Scalar const&> Poly::leading1() const {
    if (!has_part1()) {
      throw Error("polynomial has no (1)-part");
    }
    return leading();
  }

  Poly Poly::part1() const {
    Poly out;
    for (auto const& [w, c] : terms_) {
      if (w.is_rword()) {
        out.terms_.emplace_hint(out.terms_.end(), w, c);
      }
    }
    return out;
  }

  Poly Poly::part0() const {
    Poly out;
    for (auto const& [w, c] : terms_) {
      if (!w.is_letter()) {
        break;
      }
      out.terms_.emplace_hint(out.terms_.end(), w, c);
    }
    return out;
  }

  void Poly::add_term(Word const& w, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  void Poly::add_scaled(Poly const& other, Scalar const& c) {
    if (c.is_zero()) {
      return;
    }
    bool const unit = c.is_one();
    for (auto const& [w, d] : other.terms_) {
      add_term(w, unit ? d : d * c);
    }
  }

  Poly& Poly::operator*=(Scalar const& c) {
    if (c.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, d] : terms_) {
      d *= c;
    }
    return *this;
  }

  Poly Poly::in(Field const& field) const {
    Poly out;
    for (auto const& [w, c] : terms_) {
      out.add_term(w, c.in(field));
    }
    return out;
  }

  std::string Poly::to_string(Alphabet const& alphabet) const {
    if (terms_.empty()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      auto const& [w, c] = *it;
      std::string coef;
      bool        negative = false;
      if (c.is_residue()) {
        coef = c.is_one() ? "" : c.to_string();
      } else {
        negative     = sgn(c.rational()) < 0;
        mpq_class ab = abs(c.rational());
        coef         = ab == 1 ? "" : ab.get_str();
      }
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (!coef.empty()) {
        out += coef + "*";
      }
      out += w.to_string(alphabet);
      first = false;
    }
    return out;
  }

  Poly make_monic(Poly const& f) {
    return f * f.leading_coefficient().inverse();
  }

  Poly make_0_monic(Poly const& f) {
    return f * f.leading0().second.inverse();
  }

  Poly make_1_monic(Poly const& f) {
    return f * f.leading1().second.inverse();
  }

  Poly mul_rword_gen(Word const& u, Gen b) {
    if (!u.is_rword()) {
      throw Error("mul_rword_gen expects an R-word");
    }
    auto const& letters = u.letters();
    Gen const   a0      = letters[0];
    Gen const   a1      = letters[1];
    Tail        t;
    t.reserve(letters.size());
    if (b >= a1) {
      // a0 <a1 ... an b>
      t.assign(letters.begin() + 1, letters.end());
      t.insert(std::upper_bound(t.begin(), t.end(), b), b);
      return Poly(Word::make_unchecked(a0, t));
    }
    // a0 b a1 ... an - a1 b <a0 a2 ... an>; b is the minimum of both tails
    t.push_back(b);
    t.insert(t.end(), letters.begin() + 1, letters.end());
    Poly out(Word::make_unchecked(a0, t));
    t.assign(1, b);
    t.insert(t.end(), letters.begin() + 2, letters.end());
    t.insert(std::upper_bound(t.begin() + 1, t.end(), a0), a0);
    out.add_term(Word::make_unchecked(a1, t), Scalar(-1));
    return out;
  }

  Poly mul_gen_gen(Gen a, Gen b) {
    if (a == b) {
      return {};
    }
    Gen const hi = std::max(a, b);
    Gen const lo = std::min(a, b);
    return Poly(Word::make_unchecked(hi, std::span<Gen const>(&lo, 1)),
                Scalar(a > b ? 1 : -1));
  }

  Poly mul_words(Word const& u, Word const& v) {
    if (u.is_rword()) {
      return v.is_rword() ? Poly() : mul_rword_gen(u, v.head());
    }
    if (v.is_rword()) {
      return -mul_rword_gen(v, u.head());
    }
    return mul_gen_gen(u.head(), v.head());
  }

  Poly mul(Poly const& f, Poly const& g) {
    Poly out;
    for (auto const& [u, c] : f.terms()) {
      for (auto const& [v, d] : g.terms()) {
        if (u.is_rword() && v.is_rword()) {
          continue;
        }
        out.add_scaled(mul_words(u, v), c * d);
      }
    }
    return out;
  }

  Poly mul(Poly const& f, Gen b) {
    Poly out;
    for (auto const& [u, c] : f.terms()) {
      out.add_scaled(u.is_rword() ? mul_rword_gen(u, b) : mul_gen_gen(u.head(), b), c);
    }
    return out;
  }

  Poly bracket_left_normed(std::span<Gen const> gens) {
    if (gens.empty()) {
      throw Error("empty bracket");
    }
    return mul_left_normed(Poly::letter(gens.front()), gens.subspan(1));
  }

  Poly mul_left_normed(Poly f, std::span<Gen const> letters) {
    for (Gen b : letters) {
      if (f.is_zero()) {
        break;
      }
      f = mul(f, b);
    }
    return f;
  }

}  // namespace metalie
