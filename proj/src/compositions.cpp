#include "metalie/compositions.hpp"

#include <algorithm>
#include <tuple>

namespace metalie {

  std::string to_string(CompositionKind k) {
    static char const* const names[] = {"I", "II", "III", "IV", "V", "VI", "VII"};
    return names[static_cast<int>(k) - 1];
  }

  bool composition_before(CompositionInstance const& a, CompositionInstance const& b) {
    return std::forward_as_tuple(a.w, a.kind, a.params, a.f, a.g)
           < std::forward_as_tuple(b.w, b.kind, b.params, b.f, b.g);
  }

  namespace {
    [[noreturn]] void fail(CompositionKind k, std::string const& what) {
      throw SideConditionError("composition of type " + to_string(k) + ": " + what);
    }

    Word with_letter(Word const& u, Gen b) {
      Tail t(u.tail().begin(), u.tail().end());
      t.insert(std::upper_bound(t.begin(), t.end(), b), b);
      return Word::make_unchecked(u.head(), t);
    }

    // Position of d in the tail of r if d is a strict subword of r, else -1.
    std::ptrdiff_t strict_position(Word const& r, Gen d) {
      auto const t = r.tail();
      auto it = std::find(t.begin() + 1, t.end(), d);
      if (it != t.end()) {
        return it - t.begin();
      }
      if (t.size() >= 2 && t[0] == d && r.head() > t[1]) {
        return 0;
      }
      return -1;
    }

    // a0 <= a2 or n = 1
    bool head_below_second(Word const& r) {
      return r.tail().size() == 1 || r.head() <= r.tail()[1];
    }

    Word rword2(Gen hi, Gen lo) {
      return Word::make_unchecked(hi, std::span<Gen const>(&lo, 1));
    }
  }  // namespace

  CompositionInstance compose(CompositionKind kind, Poly const& f, Poly const& g,
                              std::vector<Gen> const& params,
                              CompositionOptions const& opts, std::size_t f_index,
                              std::size_t g_index) {
    if (f.is_zero() || g.is_zero() || !f.leading_coefficient().is_one()
        || !g.leading_coefficient().is_one()) {
      fail(kind, "operands must be monic");
    }
    CompositionInstance c;
    c.kind   = kind;
    c.f      = f_index;
    c.g      = g_index;
    c.params = params;
    Word const& fl = f.leading_word();
    Word const& gl = g.leading_word();
    auto        need_params = [&](std::size_t n) {
      if (params.size() != n) {
        fail(kind, "expected " + std::to_string(n) + " parameter(s)");
      }
    };

    switch (kind) {
      case CompositionKind::I: {
        need_params(0);
        if (fl.head() != gl.head()) {
          fail(kind, "leading words do not share a head");
        }
        auto const a = fl.tail();
        auto const b = gl.tail();
        Tail       l = lcm_tail(a, b);
        if (opts.strict_type1 && l == merge_tail(a, b)) {
          fail(kind, "lcm(AB) equals <AB>");
        }
        c.w     = l.empty() ? Word::letter(fl.head()) : Word::make_unchecked(fl.head(), l);
        c.value = mul_left_normed(f, quotient_tail(l, a));
        c.value -= mul_left_normed(g, quotient_tail(l, b));
        break;
      }
      case CompositionKind::II: {
        need_params(0);
        if (!f.has_part1()) {
          fail(kind, "f-bar is not an R-word");
        }
        if (!g.has_part0()) {
          fail(kind, "g has no (0)-part");
        }
        auto const [d, beta] = g.leading0();
        auto const pos       = strict_position(fl, d.head());
        if (pos < 0) {
          fail(kind, "g0-bar is not a strict subword of f-bar");
        }
        Tail t(fl.tail().begin(), fl.tail().end());
        t.erase(t.begin() + pos);
        Word u  = Word::make_unchecked(fl.head(), t);
        c.w     = fl;
        c.value = f - mul(Poly(u), g) * beta.inverse();
        break;
      }
      case CompositionKind::III: {
        need_params(0);
        if (!f.has_part1()) {
          fail(kind, "f-bar is not an R-word");
        }
        if (!(gl.is_letter() && gl.head() == fl.first())) {
          fail(kind, "g-bar is not the letter a1");
        }
        if (!head_below_second(fl)) {
          fail(kind, "requires a0 <= a2 or n = 1");
        }
        std::vector<Gen> letters{fl.head()};
        letters.insert(letters.end(), fl.tail().begin() + 1, fl.tail().end());
        c.w     = fl;
        c.value = f + mul_left_normed(g, letters);
        break;
      }
      case CompositionKind::IV: {
        need_params(1);
        if (!f.has_part1()) {
          fail(kind, "f-bar is not an R-word");
        }
        if (!g.has_part1() || !g.has_part0()) {
          fail(kind, "g needs nonzero (1)- and (0)-parts");
        }
        auto const [d, beta] = g.leading0();
        if (d.head() != fl.first()) {
          fail(kind, "g0-bar is not a1");
        }
        if (!head_below_second(fl)) {
          fail(kind, "requires a0 <= a2 or n = 1");
        }
        Gen const a = params[0];
        if (!(a < fl.head())) {
          fail(kind, "parameter a must be below a0");
        }
        std::vector<Gen> br{fl.head(), a};
        br.insert(br.end(), fl.tail().begin() + 1, fl.tail().end());
        c.w     = with_letter(fl, a);
        c.value = mul(f, a) - mul(bracket_left_normed(br), g) * beta.inverse();
        break;
      }
      case CompositionKind::V: {
        need_params(0);
        if (!f.has_part1() || !f.has_part0()) {
          fail(kind, "f needs nonzero (1)- and (0)-parts");
        }
        if (!g.has_part1() || !g.has_part0()) {
          fail(kind, "g needs nonzero (1)- and (0)-parts");
        }
        auto const [d, beta] = g.leading0();
        Gen const b          = d.head();
        if (std::find(fl.tail().begin(), fl.tail().end(), b) != fl.tail().end()) {
          fail(kind, "g0-bar occurs in the tail of f-bar");
        }
        c.w     = with_letter(fl, b);
        c.value = mul(f, b) - mul(Poly(fl), g) * beta.inverse();
        break;
      }
      case CompositionKind::VI: {
        need_params(2);
        if (!f.has_part0() || !g.has_part0()) {
          fail(kind, "both operands need (0)-parts");
        }
        if (!f.has_part1()) {
          fail(kind, "f has no (1)-part");
        }
        auto const [fa, alpha] = f.leading0();
        auto const [ga, beta]  = g.leading0();
        if (fa != ga) {
          fail(kind, "(0)-leading letters differ");
        }
        Gen const a0 = params[0];
        Gen const a1 = params[1];
        if (!(a0 > a1)) {
          fail(kind, "parameters must satisfy a0 > a1");
        }
        Word const r = rword2(a0, a1);
        c.w          = with_letter(r, fa.head());
        c.value = mul(Poly(r), f * alpha.inverse() - g * beta.inverse());
        break;
      }
      case CompositionKind::VII: {
        need_params(1);
        if (!f.has_part1() || !g.has_part1()) {
          fail(kind, "both operands need (1)-parts");
        }
        if (!f.has_part0() || !g.has_part0()) {
          fail(kind, "both operands need (0)-parts");
        }
        auto const [fa, alpha] = f.leading0();
        auto const [gb, beta]  = g.leading0();
        Gen const a            = fa.head();
        Gen const b            = gb.head();
        if (!(a > b)) {
          fail(kind, "requires f0-bar > g0-bar");
        }
        Gen const a0 = params[0];
        if (!(a0 > a)) {
          fail(kind, "parameter a0 must exceed f0-bar");
        }
        Gen const t[] = {b, a};
        c.w           = Word::make_unchecked(a0, t);
        c.value       = mul(Poly(rword2(a0, b)), f) * alpha.inverse()
                  - mul(Poly(rword2(a0, a)), g) * beta.inverse();
        break;
      }
    }
    if (!c.value.is_zero() && !(c.value.leading_word() < c.w)) {
      throw Error("composition of type " + to_string(kind)
                  + " did not cancel its ambiguity word");
    }
    return c;
  }

  std::vector<CompositionInstance> enumerate_compositions(std::size_t fi, std::size_t gi,
                                                          RelationSet const& s,
                                                          std::size_t k,
                                                          CompositionOptions const& opts) {
    std::vector<CompositionInstance> out;
    Poly const& f    = s[fi];
    Poly const& g    = s[gi];
    bool const  self = fi == gi;
    Word const& fl   = f.leading_word();
    Word const& gl   = g.leading_word();
    auto emit = [&](CompositionKind kind, std::vector<Gen> params) {
      out.push_back(compose(kind, f, g, params, opts, fi, gi));
    };

    // I
    if (!self && fl.head() == gl.head() && (gl < fl || (gl == fl && fi < gi))) {
      bool skip = false;
      if (opts.strict_type1) {
        skip = lcm_tail(fl.tail(), gl.tail()) == merge_tail(fl.tail(), gl.tail());
      }
      if (!skip) {
        emit(CompositionKind::I, {});
      }
    }
    bool const f1 = f.has_part1();
    bool const f0 = f.has_part0();
    bool const g1 = g.has_part1();
    bool const g0 = g.has_part0();
    if (f1) {
      // II
      if (g0 && strict_position(fl, g.leading0().first.head()) >= 0) {
        emit(CompositionKind::II, {});
      }
      // III
      if (gl.is_letter() && gl.head() == fl.first() && head_below_second(fl)) {
        emit(CompositionKind::III, {});
      }
      // IV
      if (g1 && g0 && g.leading0().first.head() == fl.first() && head_below_second(fl)) {
        for (Gen a = 0; a < fl.head(); ++a) {
          if (!f0 && a == fl.first()) {
            continue;
          }
          emit(CompositionKind::IV, {a});
        }
      }
      // V
      if (!self && f0 && g1 && g0) {
        Gen const b = g.leading0().first.head();
        if (std::find(fl.tail().begin(), fl.tail().end(), b) == fl.tail().end()) {
          emit(CompositionKind::V, {});
        }
      }
      // VI
      if (!self && f0 && g0 && f.leading0().first == g.leading0().first) {
        for (std::size_t a0 = 1; a0 < k; ++a0) {
          for (std::size_t a1 = 0; a1 < a0; ++a1) {
            emit(CompositionKind::VI, {static_cast<Gen>(a0), static_cast<Gen>(a1)});
          }
        }
      }
      // VII
      if (g1 && f0 && g0) {
        Gen const a = f.leading0().first.head();
        Gen const b = g.leading0().first.head();
        if (a > b) {
          for (std::size_t a0 = static_cast<std::size_t>(a) + 1; a0 < k; ++a0) {
            emit(CompositionKind::VII, {static_cast<Gen>(a0)});
          }
        }
      }
    }
    return out;
  }

  bool is_trivial(CompositionInstance const& c, RelationSet const& s) {
    return c.value.is_zero() || normal_form(c.value, s).is_zero();
  }

}  // namespace metalie
