#include "metalie/reduction.hpp"

#include <algorithm>
#include <map>

namespace metalie {

  RelationSet::RelationSet(std::vector<Poly> relations) {
    for (auto& r : relations) {
      add(std::move(r));
    }
  }

  std::size_t RelationSet::add(Poly relation) {
    if (relation.is_zero() || !relation.leading_coefficient().is_one()) {
      throw Error("relations must be monic and nonzero");
    }
    Info info{relation.leading_word(), relation.has_part0(), Word()};
    if (info.has0) {
      info.lead0 = relation.leading0().first;
    }
    std::size_t const idx = rels_.size();
    auto bucket = [](std::vector<std::vector<std::size_t>>& b, Gen g) -> auto& {
      if (b.size() <= g) {
        b.resize(static_cast<std::size_t>(g) + 1);
      }
      return b[g];
    };
    if (info.lead.is_rword()) {
      bucket(by_head_, info.lead.head()).push_back(idx);
    } else {
      bucket(by_letter_, info.lead.head()).push_back(idx);
    }
    if (info.has0) {
      bucket(by_lead0_, info.lead0.head()).push_back(idx);
    }
    rels_.push_back(std::move(relation));
    info_.push_back(std::move(info));
    return idx;
  }

  void RelationSet::validate(NormalSWord const& ns) const {
    if (ns.rel >= rels_.size()) {
      throw Error("normal S-word refers to a missing relation");
    }
    Info const& info = info_[ns.rel];
    if (ns.kind == NormalSWord::Kind::I) {
      if (!std::is_sorted(ns.tail.begin(), ns.tail.end())) {
        throw Error("normal S-word tail is not ascending");
      }
      if (!ns.tail.empty() && info.lead.is_letter()
          && info.lead.head() == ns.tail.front()) {
        throw Error("normal S-word of kind I with s-bar equal to a1");
      }
      return;
    }
    if (!ns.u.is_rword()) {
      throw Error("normal S-word of kind II needs an R-word factor");
    }
    if (ns.u == info.lead) {
      throw Error("normal S-word of kind II with s-bar equal to u");
    }
    if (!info.has0) {
      throw Error("normal S-word of kind II with zero (0)-part");
    }
  }

  Poly RelationSet::value(NormalSWord const& ns) const {
    Poly const& s = rels_[ns.rel];
    if (ns.kind == NormalSWord::Kind::I) {
      return mul_left_normed(s, ns.tail);
    }
    // u * s = -(s^(0) * u); u kills s^(1)
    Poly out;
    for (auto const& [w, c] : s.terms()) {
      if (!w.is_letter()) {
        break;
      }
      out.add_scaled(mul_rword_gen(ns.u, w.head()), c);
    }
    return out;
  }

  Word RelationSet::leading(NormalSWord const& ns) const {
    validate(ns);
    Info const& info = info_[ns.rel];
    if (ns.kind == NormalSWord::Kind::II) {
      auto t = Tail(ns.u.tail().begin(), ns.u.tail().end());
      t.insert(std::upper_bound(t.begin(), t.end(), info.lead0.head()),
               info.lead0.head());
      return Word::make_unchecked(ns.u.head(), t);
    }
    if (ns.tail.empty()) {
      return info.lead;
    }
    if (info.lead.is_rword()) {
      return Word::make_unchecked(info.lead.head(), merge_tail(info.lead.tail(), ns.tail));
    }
    Gen const c0 = info.lead.head();
    if (c0 > ns.tail.front()) {
      return Word::make_unchecked(c0, ns.tail);
    }
    // a1 c0 a2 ... an
    Tail t;
    t.reserve(ns.tail.size());
    t.push_back(c0);
    t.insert(t.end(), ns.tail.begin() + 1, ns.tail.end());
    return Word::make_unchecked(ns.tail.front(), t);
  }

  std::optional<NormalSWord> RelationSet::find_reducer(Word const& w) const {
    std::optional<NormalSWord> best;
    auto consider = [&](std::size_t idx, auto&& make) {
      if (!best || idx < best->rel) {
        best = make();
      }
    };
    auto const bucket = [](std::vector<std::vector<std::size_t>> const& b,
                           Gen g) -> std::vector<std::size_t> const* {
      return g < b.size() ? &b[g] : nullptr;
    };

    if (w.is_letter()) {
      if (auto const* b = bucket(by_letter_, w.head()); b != nullptr && !b->empty()) {
        return NormalSWord::kind_i(b->front(), Tail());
      }
      return std::nullopt;
    }

    auto const tail = w.tail();
    // Kind I with an R-word leading word: same head, tail containment.
    if (auto const* b = bucket(by_head_, w.head())) {
      for (std::size_t idx : *b) {
        if (best && idx > best->rel) {
          break;
        }
        auto const st = info_[idx].lead.tail();
        if (tail_divides(st, tail)) {
          consider(idx, [&] { return NormalSWord::kind_i(idx, quotient_tail(tail, st)); });
          break;
        }
      }
    }
    // Kind I with a letter leading word c0 > a1: w = c0 a1 ... an.
    if (auto const* b = bucket(by_letter_, w.head()); b != nullptr && !b->empty()) {
      consider(b->front(), [&] {
        return NormalSWord::kind_i(b->front(), Tail(tail.begin(), tail.end()));
      });
    }
    // Kind I with a letter leading word c0 < a1: w = a1 c0 a2 ... an.
    if (tail.size() == 1 || w.head() <= tail[1]) {
      if (auto const* b = bucket(by_letter_, tail[0]); b != nullptr && !b->empty()) {
        consider(b->front(), [&] {
          Tail t;
          t.reserve(tail.size());
          t.push_back(w.head());
          t.insert(t.end(), tail.begin() + 1, tail.end());
          return NormalSWord::kind_i(b->front(), std::move(t));
        });
      }
    }
    if (best) {
      return best;
    }
    // Kind II: remove one occurrence of d = lead0(s) from the tail; the rest
    // must form an R-word u != s-bar.
    if (tail.size() < 2) {
      return std::nullopt;
    }
    Gen prev = static_cast<Gen>(-1);
    for (std::size_t i = 0; i < tail.size(); ++i) {
      Gen const d = tail[i];
      if (d == prev) {
        continue;
      }
      prev              = d;
      auto const* b     = bucket(by_lead0_, d);
      if (b == nullptr || b->empty()) {
        continue;
      }
      Tail rest;
      rest.reserve(tail.size() - 1);
      rest.insert(rest.end(), tail.begin(), tail.begin() + static_cast<std::ptrdiff_t>(i));
      rest.insert(rest.end(), tail.begin() + static_cast<std::ptrdiff_t>(i) + 1, tail.end());
      if (!(w.head() > rest.front())) {
        continue;
      }
      Word u = Word::make_unchecked(w.head(), rest);
      for (std::size_t idx : *b) {
        if (best && idx > best->rel) {
          break;
        }
        if (info_[idx].lead != u) {
          consider(idx, [&] { return NormalSWord::kind_ii(u, idx); });
          break;
        }
      }
    }
    return best;
  }

  Word normal_sword_leading(NormalSWord const& ns, RelationSet const& s) {
    return s.leading(ns);
  }

  namespace {
    template <typename Log>
    Poly reduce_impl(Poly f, RelationSet const& s, Log&& log) {
      Poly rem;
      while (!f.is_zero()) {
        auto [w, c] = f.leading();
        Word   word = w;
        Scalar coef = c;
        if (auto ns = s.find_reducer(word)) {
          Poly   v = s.value(*ns);
          Scalar q = coef / v.leading_coefficient();
          f.add_scaled(v, -q);
          log(q, std::move(*ns));
        } else {
          rem.add_term(word, coef);
          f.add_term(word, -coef);
        }
      }
      return rem;
    }
  }  // namespace

  Poly normal_form(Poly f, RelationSet const& s) {
    if (s.empty()) {
      return f;
    }
    return reduce_impl(std::move(f), s, [](Scalar const&, NormalSWord&&) {});
  }

  Poly normal_form(Poly f, RelationSet const& s, std::vector<ReductionStep>& log) {
    return reduce_impl(std::move(f), s, [&](Scalar const& q, NormalSWord&& ns) {
      log.push_back({q, std::move(ns)});
    });
  }

  std::vector<Word> irr_up_to(RelationSet const& s, std::size_t k, std::size_t max_len) {
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
      for (auto& w : enumerate_regular_words(k, len)) {
        if (s.is_irreducible(w)) {
          out.push_back(std::move(w));
        }
      }
    }
    return out;
  }

  std::vector<std::size_t> irr_counts(RelationSet const& s, std::size_t k,
                                      std::size_t max_len) {
    std::vector<std::size_t> counts(max_len + 1, 0);
    for (auto const& w : irr_up_to(s, k, max_len)) {
      ++counts[w.length()];
    }
    return counts;
  }

  // Rewriting of an S-word into normal S-words.
  namespace {
    class SWordRewriter {
     public:
      explicit SWordRewriter(RelationSet const& single)
          : s_(single[0]), lead_(single[0].leading_word()) {}

      using Combo = std::vector<ReductionStep>;

      // s * a  (a single letter)
      Combo s_times_letter(Gen a) const {
        if (!(lead_.is_letter() && lead_.head() == a)) {
          return {{Scalar(1), NormalSWord::kind_i(0, Tail{a})}};
        }
        // s-bar = a: s*a = -sum alpha_j s*v_j over the lower letters v_j
        Combo out;
        for (auto const& [v, alpha] : s_.terms()) {
          if (v == lead_) {
            continue;
          }
          append(out, s_times_letter(v.head()), -alpha);
        }
        return out;
      }

      // v * s for a regular R-word v.
      Combo r_times_s(Word const& v) const {
        if (!s_.has_part0()) {
          return {};
        }
        if (v != lead_) {
          return {{Scalar(1), NormalSWord::kind_ii(v, 0)}};
        }
        // s-bar * s = -(lower terms) * s
        Combo out;
        for (auto const& [vj, alpha] : s_.terms()) {
          if (vj == lead_) {
            continue;
          }
          if (vj.is_rword()) {
            append(out, r_times_s(vj), -alpha);
          } else {
            // vj * s = -s * vj
            append(out, s_times_letter(vj.head()), alpha);
          }
        }
        return out;
      }

      // s * P for P in the span of R-words: s*v = -v*s.
      Combo s_times_rpoly(Poly const& p) const {
        Combo out;
        for (auto const& [v, c] : p.terms()) {
          append(out, r_times_s(v), -c);
        }
        return out;
      }

      // (normal word) * a
      Combo times_letter(NormalSWord const& ns, Gen a) const {
        if (ns.kind == NormalSWord::Kind::II) {
          // (u s) a = (u a) s
          Combo      out;
          Poly const ua = mul_rword_gen(ns.u, a);
          for (auto const& [v, c] : ua.terms()) {
            append(out, r_times_s(v), c);
          }
          return out;
        }
        if (ns.tail.empty()) {
          return s_times_letter(a);
        }
        if (a >= ns.tail.front()) {
          Tail t = ns.tail;
          t.insert(std::upper_bound(t.begin(), t.end(), a), a);
          return {{Scalar(1), NormalSWord::kind_i(0, std::move(t))}};
        }
        // s a1 a a2..an = s a a1 a2..an - (a1 a a2 .. an) s
        Combo out;
        Tail  rest(ns.tail.begin() + 1, ns.tail.end());
        Combo head = s_times_letter(a);
        for (auto const& step : head) {
          Combo cur{{Scalar(1), step.word}};
          cur = times_letters(cur, std::span<Gen const>(&ns.tail.front(), 1));
          cur = times_letters(cur, rest);
          append(out, cur, step.coefficient);
        }
        std::vector<Gen> br{ns.tail.front(), a};
        br.insert(br.end(), rest.begin(), rest.end());
        Poly p = bracket_left_normed(br);
        // -(p * s) = s * p
        append(out, s_times_rpoly(p), Scalar(1));
        return out;
      }

      Combo times_letters(Combo c, std::span<Gen const> letters) const {
        for (Gen a : letters) {
          Combo next;
          for (auto const& step : c) {
            append(next, times_letter(step.word, a), step.coefficient);
          }
          c = std::move(next);
        }
        return c;
      }

      static void append(Combo& out, Combo const& in, Scalar const& c) {
        for (auto const& step : in) {
          out.push_back({step.coefficient * c, step.word});
        }
      }

     private:
      Poly const&        s_;
      Word               lead_;
    };

    struct NormalSWordLess {
      bool operator()(NormalSWord const& a, NormalSWord const& b) const {
        if (a.kind != b.kind) {
          return a.kind < b.kind;
        }
        if (a.kind == NormalSWord::Kind::I) {
          return a.tail < b.tail;
        }
        return a.u < b.u;
      }
    };
  }  // namespace

  std::vector<ReductionStep> rewrite_sword(RelationSet const& single,
                                           std::span<Word const> factors) {
    if (single.size() != 1) {
      throw Error("rewrite_sword expects exactly one relation");
    }
    SWordRewriter             rw(single);
    SWordRewriter::Combo      combo;
    if (factors.empty()) {
      combo = {{Scalar(1), NormalSWord::kind_i(0, Tail())}};
    } else {
      for (std::size_t i = 1; i < factors.size(); ++i) {
        if (factors[i].is_rword()) {
          return {};
        }
      }
      std::vector<Gen> rest;
      for (std::size_t i = 1; i < factors.size(); ++i) {
        rest.push_back(factors[i].head());
      }
      if (factors[0].is_rword()) {
        // (s u1) a2..an = s (u1 a2 .. an)
        Poly p = mul_left_normed(Poly(factors[0]), rest);
        combo  = rw.s_times_rpoly(p);
      } else {
        combo = rw.times_letters(rw.s_times_letter(factors[0].head()), rest);
      }
    }
    std::map<NormalSWord, Scalar, NormalSWordLess> merged;
    for (auto& step : combo) {
      auto [it, inserted] = merged.try_emplace(step.word, step.coefficient);
      if (!inserted) {
        it->second += step.coefficient;
      }
    }
    std::vector<ReductionStep> out;
    for (auto& [ns, c] : merged) {
      if (!c.is_zero()) {
        out.push_back({c, ns});
      }
    }
    return out;
  }

}  // namespace metalie
