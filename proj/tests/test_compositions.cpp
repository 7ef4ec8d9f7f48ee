#include <doctest.h>

#include "metalie/compositions.hpp"
#include "metalie/presentations.hpp"
#include "metalie/text_io.hpp"
#include "support.hpp"

using namespace metalie;
using metalie::testing::Rng;
using metalie::testing::trivial_mod;
using metalie::testing::uniform;

namespace {
  Alphabet const n4 = Alphabet::numbered(4);

  Poly P(std::string const& e, Alphabet const& a = n4) {
    return parse_expression(e, a, Field::rationals());
  }
  Word W(std::string const& e) { return P(e).leading_word(); }

  std::size_t count_kind(std::vector<CompositionInstance> const& v, CompositionKind k) {
    return static_cast<std::size_t>(
        std::count_if(v.begin(), v.end(), [&](auto const& c) { return c.kind == k; }));
  }

  // Strict-subword test: a_i (i >= 2), or a_1 when a_0 > a_2.
  bool strict_subword(Word const& r, Gen d) {
    auto const t = r.tail();
    if (std::find(t.begin() + 1, t.end(), d) != t.end()) {
      return true;
    }
    return t.size() >= 2 && t[0] == d && r.head() > t[1];
  }

  // Random polynomial supported on R-words only.
  Poly random_rpoly(Rng& rng, std::size_t k, std::size_t max_len, std::size_t terms) {
    Poly f;
    for (std::size_t i = 0; i < terms; ++i) {
      f.add_term(metalie::testing::random_rword(rng, k, max_len),
                 metalie::testing::random_coefficient(rng));
    }
    return f;
  }

  // Letters all below `top`, plus `top` itself with coefficient beta.
  Poly random_zero_part(Rng& rng, Gen top) {
    Poly f(Word::letter(top), metalie::testing::random_coefficient(rng));
    for (Gen g = 0; g < top; ++g) {
      if (uniform(rng, 0, 1) == 0) {
        f.add_term(Word::letter(g), metalie::testing::random_coefficient(rng));
      }
    }
    return f;
  }
}  // namespace

TEST_CASE("circuit overlap of type I") {
  Poly const f3 = P("[3,2]");
  Poly const f0 = P("[3,0]");
  auto const c  = compose(CompositionKind::I, f3, f0, {});
  CHECK(c.w == W("[3,0,2]"));
  CHECK(c.value == P("-[2,0,3]"));
  CHECK(compose(CompositionKind::I, f3, f3, {}).value.is_zero());

  RelationSet edges(graph_presentation(circuit(4)).relations);
  CHECK_FALSE(is_trivial(c, edges));
  edges.add(P("[2,0,3]"));
  CHECK(is_trivial(c, edges));

  CompositionInstance zero;
  CHECK(is_trivial(zero, edges));
}

TEST_CASE("strict reading of type I refuses coprime tails") {
  CompositionOptions strict;
  strict.strict_type1 = true;
  CHECK_THROWS_AS(compose(CompositionKind::I, P("[3,2]"), P("[3,0]"), {}, strict),
                  SideConditionError);
  auto const c = compose(CompositionKind::I, P("[3,0,1]"), P("[3,0,2]"), {}, strict);
  CHECK(c.w == W("[3,0,1,2]"));
}

TEST_CASE("type II self composition lowers the leading word") {
  Poly const f = P("[2,0,1] + 1");
  auto const c = compose(CompositionKind::II, f, f, {});
  CHECK(c.w == W("[2,0,1]"));
  CHECK(c.value == f - mul(P("[2,0]"), f));
  CHECK(c.value.leading_word() < f.leading_word());
}

TEST_CASE("side conditions are checked") {
  CHECK_THROWS_AS(compose(CompositionKind::I, P("[3,2]"), P("[2,1]"), {}), SideConditionError);
  CHECK_THROWS_AS(compose(CompositionKind::II, P("[3,2]"), P("[2,1]"), {}), SideConditionError);
  CHECK_THROWS_AS(compose(CompositionKind::IV, P("[2,1] + 1"), P("[3,1] + 1"), {3}),
                  SideConditionError);
  CHECK_THROWS_AS(compose(CompositionKind::VI, P("[2,1] + 0"), P("[3,1] + 0"), {1, 2}),
                  SideConditionError);
  CHECK_THROWS_AS(compose(CompositionKind::VI, P("[2,1] + 0"), P("[3,1] + 0"), {2}),
                  SideConditionError);
}

TEST_CASE("enumeration") {
  RelationSet const mono({P("[3,1,2]")});
  CHECK(enumerate_compositions(0, 0, mono, 4).empty());

  RelationSet const edges({P("[3,2]"), P("[1,0]")});
  CHECK(enumerate_compositions(0, 1, edges, 4).empty());
  CHECK(enumerate_compositions(1, 0, edges, 4).empty());

  RelationSet const shared({P("[2,1] + 0"), P("[3,1] + 0")});
  for (std::size_t k : {4, 5, 6}) {
    CHECK(count_kind(enumerate_compositions(0, 1, shared, k), CompositionKind::VI)
          == k * (k - 1) / 2);
  }
  // type I appears once per unordered pair
  RelationSet const heads({P("[3,2]"), P("[3,0]")});
  CHECK(enumerate_compositions(0, 1, heads, 4).size() + enumerate_compositions(1, 0, heads, 4).size()
        == 1);
}

TEST_CASE("values lie below w and compositions are scale invariant") {
  Rng               rng(3);
  std::size_t const k = 4;
  for (int round = 0; round < 150; ++round) {
    std::vector<Poly> rels;
    for (int j = 0; j < 3; ++j) {
      Poly f = metalie::testing::random_poly(rng, k, 3, 3);
      if (!f.is_zero()) {
        rels.push_back(make_monic(f));
      }
    }
    if (rels.size() < 2) {
      continue;
    }
    RelationSet const s(rels);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        for (auto const& c : enumerate_compositions(i, j, s, k)) {
          if (!c.value.is_zero()) {
            CHECK(c.value.leading_word() < c.w);
          }
          Poly const scaled_f = make_monic(s[i] * Scalar(-7));
          auto const again    = compose(c.kind, scaled_f, s[j], c.params, {}, i, j);
          CHECK(again.value == c.value);
          CHECK(again.w == c.w);
          if (c.kind == CompositionKind::I) {
            auto const flip = compose(CompositionKind::I, s[j], s[i], {}, {}, j, i);
            CHECK(flip.value == -c.value);
          }
        }
      }
    }
  }
}

TEST_CASE("self compositions of types I, V and VI are trivial") {
  Rng               rng(17);
  std::size_t const k = 4;
  int               n1 = 0, n5 = 0, n6 = 0;
  while (n1 < 200 || n5 < 200 || n6 < 200) {
    Poly f = random_rpoly(rng, k, 3, 2);
    if (f.is_zero()) {
      continue;
    }
    Gen const top = metalie::testing::random_gen(rng, k);
    f += random_zero_part(rng, top);
    f                  = make_monic(f);
    RelationSet const s({f});
    Word const        fl = f.leading_word();

    auto const c1 = compose(CompositionKind::I, f, f, {});
    CHECK(c1.value.is_zero());
    ++n1;

    if (std::find(fl.tail().begin(), fl.tail().end(), top) == fl.tail().end()) {
      auto const c5 = compose(CompositionKind::V, f, f, {});
      CHECK(trivial_mod(c5.value, s, c5.w, k));
      ++n5;
    }
    Gen const a1 = static_cast<Gen>(uniform(rng, 0, k - 2));
    Gen const a0 = static_cast<Gen>(uniform(rng, a1 + 1U, k - 1));
    auto const c6 = compose(CompositionKind::VI, f, f, {a0, a1});
    CHECK(c6.value.is_zero());
    CHECK(trivial_mod(c6.value, s, c6.w, k));
    ++n6;
  }
}

TEST_CASE("type IV with f^(0) = 0 and a = a1 is trivial") {
  Rng               rng(19);
  std::size_t const k = 4;
  int               checked = 0;
  while (checked < 200) {
    Poly f = random_rpoly(rng, k, 4, 2);
    if (f.is_zero()) {
      continue;
    }
    f                = make_monic(f);
    Word const fl    = f.leading_word();
    auto const tail  = fl.tail();
    bool const shape = tail.size() == 1 || fl.head() <= tail[1];
    if (!shape) {
      continue;
    }
    Gen const a1 = tail[0];
    Poly      g  = random_rpoly(rng, k, 3, 2);
    if (g.is_zero()) {
      continue;
    }
    g += random_zero_part(rng, a1);
    g = make_monic(g);
    auto const c = compose(CompositionKind::IV, f, g, {a1});
    RelationSet const s({f, g});
    CHECK(trivial_mod(c.value, s, c.w, k));
    ++checked;
  }
}

TEST_CASE("enumerated instances of random sets are never on the skip lists") {
  Rng               rng(23);
  std::size_t const k = 3;
  for (int round = 0; round < 100; ++round) {
    auto const        p = metalie::testing::random_presentation(rng, k, 3, 3);
    RelationSet const s(p.relations);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (auto const& c : enumerate_compositions(i, i, s, k)) {
        bool const skipped = c.kind == CompositionKind::I || c.kind == CompositionKind::V
                             || c.kind == CompositionKind::VI;
        CHECK_FALSE(skipped);
      }
      for (std::size_t j = 0; j < s.size(); ++j) {
        for (auto const& c : enumerate_compositions(i, j, s, k)) {
          if (c.kind == CompositionKind::IV && !s[i].has_part0()) {
            CHECK(c.params[0] != s[i].leading_word().first());
          }
        }
      }
    }
  }
}

TEST_CASE("strict subword helper agrees with type II applicability") {
  Rng rng(29);
  for (int i = 0; i < 300; ++i) {
    Word const r = metalie::testing::random_rword(rng, 4, 5);
    Gen const  d = metalie::testing::random_gen(rng, 4);
    Poly const f = Poly(r) + Poly::letter(d);
    bool const ok = strict_subword(r, d);
    if (ok) {
      CHECK_NOTHROW(compose(CompositionKind::II, f, f, {}));
    } else {
      CHECK_THROWS_AS(compose(CompositionKind::II, f, f, {}), SideConditionError);
    }
  }
}
