// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <iostream>
#include <sstream>

#include "metalie/commands.hpp"
#include "metalie/compositions.hpp"
#include "metalie/oracle.hpp"
#include "metalie/presentations.hpp"
#include "metalie/text_io.hpp"
#include "support.hpp"

using namespace metalie;
using metalie::testing::Rng;
using metalie::testing::uniform;

namespace {

  struct Outcome {
    bool        pass = true;
    std::string detail;

    void require(bool ok, std::string const& what) {
      if (!ok && pass) {
        detail = what;
      }
      pass = pass && ok;
    }
  };

  // Completed bases gathered along the way, reused by the soundness check.
  struct Basis {
    std::vector<Poly> polys;
    std::size_t       k;
  };
  std::vector<Basis> g_bases;

  std::vector<std::uint64_t> const tree_seeds = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t s = 1; s <= 50; ++s) {
      v.push_back(1000 + s);
    }
    return v;
  }();

  std::size_t tree_size(std::uint64_t seed) { return 2 + seed % 24; }  // 2..25

  CompletionConfig workers(unsigned n) {
    CompletionConfig c;
    c.workers = n;
    return c;
  }

  // ---------------------------------------------------------------- 1
  Outcome cu4_count() {
    Outcome    o;
    auto const rep = verify_cu4();
    o.require(rep.pass, rep.text.substr(0, rep.text.find('\n')));
    if (o.pass) {
      o.detail = rep.text.substr(0, rep.text.find('\n'));
    }
    return o;
  }

  // ---------------------------------------------------------------- 2
  Outcome circuits() {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
      auto const t0  = std::chrono::steady_clock::now();
      auto const rep = verify_circuit(n, {});
      auto const dt  = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(rep.pass, "n=" + std::to_string(n) + ": " + rep.text);
      o.require(dt < 5.0, "n=" + std::to_string(n) + " took " + std::to_string(dt) + " s");
      g_bases.push_back({circuit_theorem_basis(n), n});
    }
    return o;
  }

  bool predicted_irreducible(Graph const& g, Word const& w) {
    if (w.is_letter()) {
      return true;
    }
    for (Gen v : w.tail()) {
      if (w.head() > v && g.adjacent(w.head(), v)) {
        return false;
      }
    }
    return true;
  }

  // ---------------------------------------------------------------- 3
  Outcome trees() {
    Outcome o;
    for (std::uint64_t seed : tree_seeds) {
      auto const rep = verify_tree(random_tree(tree_size(seed), seed), {});
      o.require(rep.pass, "seed " + std::to_string(seed) + ": " + rep.text);
      if (seed % 10 == 0) {
        auto const p = tree_presentation(random_tree(tree_size(seed), seed), 0);
        g_bases.push_back({p.relations, p.rank()});
      }
    }
    std::size_t words = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      std::size_t const n = 3 + seed % 10;  // 3..12
      Graph const       t = tree_bfs_order(random_tree(n, seed), 0);
      RelationSet const s(graph_presentation(t).relations);
      for (std::size_t l = 1; l <= 5; ++l) {
        for (auto const& w : enumerate_regular_words(n, l)) {
          o.require(s.is_irreducible(w) == predicted_irreducible(t, w),
                    "adjacency predicate differs on a tree of " + std::to_string(n));
          ++words;
        }
      }
    }
    if (o.pass) {
      o.detail = "50 trees, " + std::to_string(words) + " words checked";
    }
    return o;
  }

  // ---------------------------------------------------------------- 4
  Outcome cu3() {
    Outcome    o;
    auto const rep = verify_cu3({});
    o.require(rep.pass, rep.text);
    auto const rc = complete_and_reduce(graph_presentation(cube(3)), {});
    g_bases.push_back({rc.basis, 8});
    if (o.pass) {
      auto const fam = rep.text.find("families:");
      o.detail       = rep.text.substr(fam, rep.text.find('\n', fam) - fam);
    }
    return o;
  }

  // ---------------------------------------------------------------- 5
  Outcome oracle_equivalence() {
    Outcome           o;
    Rng               rng(20240501);
    std::size_t const max_len  = 6;
    std::size_t       capped   = 0;
    std::size_t const samples  = 60;
    for (std::size_t i = 0; i < samples; ++i) {
      std::size_t const k     = uniform(rng, 2, 3);
      std::size_t const nrels = uniform(rng, 1, 3);
      auto const        p     = metalie::testing::random_presentation(rng, k, nrels, 3);
      CompletionConfig  cfg;
      cfg.max_word_degree = 10;
      auto const r        = shirshov_complete(p, cfg);
      capped += r.status == CompletionStatus::degree_capped ? 1 : 0;
      auto const   irr = irr_counts(RelationSet(r.basis), k, max_len);
      OracleConfig oc;
      oc.max_len      = max_len;
      oc.degree_bound = 10;
      auto const orc  = oracle_quotient_dims(k, p.relations, oc);
      std::ostringstream why;
      why << "sample " << i << ":\n" << print_presentation(p) << "irr";
      for (std::size_t l = 1; l <= max_len; ++l) {
        why << " " << irr[l];
      }
      why << " vs oracle";
      for (std::size_t l = 1; l <= max_len; ++l) {
        why << " " << orc[l];
      }
      o.require(irr == orc, why.str());
      g_bases.push_back({r.basis, k});
    }
    if (o.pass) {
      o.detail = std::to_string(samples) + " presentations, " + std::to_string(capped) + " capped";
    }
    return o;
  }

  // ---------------------------------------------------------------- 6
  Outcome soundness() {
    Outcome     o;
    Rng         rng(606);
    std::size_t members = 0, irreducibles = 0;
    for (std::size_t b = 0; b < g_bases.size(); ++b) {
      auto const& [polys, k] = g_bases[b];
      if (polys.empty()) {
        continue;
      }
      RelationSet const s(polys);
      for (int i = 0; i < 100; ++i) {
        Poly const f = metalie::testing::random_ideal_element(rng, s, k, 3, 3);
        o.require(normal_form(f, s).is_zero(),
                  "basis " + std::to_string(b) + ": ideal element with nonzero normal form");
        ++members;
      }
      int found = 0;
      for (int attempt = 0; attempt < 5000 && found < 100; ++attempt) {
        Word const w = metalie::testing::random_word(rng, k, 6);
        if (!s.is_irreducible(w)) {
          continue;
        }
        o.require(normal_form(Poly(w), s) == Poly(w),
                  "basis " + std::to_string(b) + ": irreducible word changed by reduction");
        ++found;
      }
      irreducibles += static_cast<std::size_t>(found);
    }
    if (o.pass) {
      o.detail = std::to_string(g_bases.size()) + " bases, " + std::to_string(members)
                 + " ideal elements, " + std::to_string(irreducibles) + " irreducible words";
    }
    return o;
  }

  // ---------------------------------------------------------------- 7
  Outcome axioms() {
    Outcome           o;
    Rng               rng(707);
    std::size_t const k = 4;
    for (int i = 0; i < 1000; ++i) {
      Poly const f = metalie::testing::random_poly(rng, k, 4, 3);
      Poly const g = metalie::testing::random_poly(rng, k, 4, 3);
      Poly const h = metalie::testing::random_poly(rng, k, 4, 3);
      o.require((mul(f, g) + mul(g, f)).is_zero(), "anticommutativity");
      o.require((mul(mul(f, g), h) + mul(mul(g, h), f) + mul(mul(h, f), g)).is_zero(), "Jacobi");
      Poly const a = metalie::testing::random_poly(rng, k, 3, 2);
      Poly const b = metalie::testing::random_poly(rng, k, 3, 2);
      Poly const c = metalie::testing::random_poly(rng, k, 3, 2);
      Poly const d = metalie::testing::random_poly(rng, k, 3, 2);
      o.require(mul(mul(a, b), mul(c, d)).is_zero(), "metabelian identity");
    }
    int ordered = 0;
    while (ordered < 1000) {
      Word const u  = metalie::testing::random_word(rng, k, 5);
      Word const v  = metalie::testing::random_word(rng, k, 5);
      Gen const  x  = metalie::testing::random_gen(rng, k);
      Poly const ux = mul(Poly(u), Poly::letter(x));
      Poly const vx = mul(Poly(v), Poly::letter(x));
      if (!(v < u) || ux.is_zero() || vx.is_zero()) {
        continue;
      }
      o.require(vx.leading_word() < ux.leading_word(), "products are not monotone");
      ++ordered;
    }
    int normal = 0;
    while (normal < 1000) {
      Poly f = metalie::testing::random_poly(rng, k, 3, 3);
      if (f.is_zero()) {
        continue;
      }
      RelationSet const s({make_monic(f)});
      auto              ns = metalie::testing::random_normal_sword(rng, s, k, 2);
      if (!ns) {
        continue;
      }
      Word const w  = metalie::testing::random_word(rng, k, 5);
      Gen const  a  = metalie::testing::random_gen(rng, k);
      Poly const wa = mul(Poly(w), Poly::letter(a));
      Poly const ua = mul(s.value(*ns), Poly::letter(a));
      if (!(s.leading(*ns) < w) || wa.is_zero() || ua.is_zero()) {
        continue;
      }
      o.require(ua.leading_word() < wa.leading_word(), "S-word products are not monotone");
      ++normal;
    }
    if (o.pass) {
      o.detail = "1000 axiom triples, 1000 + 1000 monotonicity instances";
    }
    return o;
  }

  // ---------------------------------------------------------------- 8
  Outcome engines() {
    Outcome                   o;
    std::vector<Presentation> cases;
    for (std::size_t n = 3; n <= 8; ++n) {
      cases.push_back(graph_presentation(circuit(n)));
    }
    cases.push_back(graph_presentation(cube(3)));
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      cases.push_back(graph_presentation(random_graph(3 + seed % 6, 0.4, seed)));
    }
    for (std::size_t i = 0; i < cases.size(); ++i) {
      auto const m = metalie::testing::leading_set(reduce_basis(monomial_complete(cases[i]).basis));
      auto const s = metalie::testing::leading_set(reduce_basis(shirshov_complete(cases[i]).basis));
      o.require(m == s, "case " + std::to_string(i) + " differs");
    }
    if (o.pass) {
      o.detail = std::to_string(cases.size()) + " graphs";
    }
    return o;
  }

  // ---------------------------------------------------------------- 9
  Poly random_rpoly(Rng& rng, std::size_t k, std::size_t max_len, std::size_t terms) {
    Poly f;
    for (std::size_t i = 0; i < terms; ++i) {
      f.add_term(metalie::testing::random_rword(rng, k, max_len),
                 metalie::testing::random_coefficient(rng));
    }
    return f;
  }

  Poly random_zero_part(Rng& rng, Gen top) {
    Poly f(Word::letter(top), metalie::testing::random_coefficient(rng));
    for (Gen g = 0; g < top; ++g) {
      if (uniform(rng, 0, 1) == 0) {
        f.add_term(Word::letter(g), metalie::testing::random_coefficient(rng));
      }
    }
    return f;
  }

  bool strict_subword(Word const& r, Gen d) {
    auto const t = r.tail();
    if (std::find(t.begin() + 1, t.end(), d) != t.end()) {
      return true;
    }
    return t.size() >= 2 && t[0] == d && r.head() > t[1];
  }

  Word above_length(std::size_t l) { return Word::make_unchecked(1, Tail(l, 0)); }

  bool in_ideal_of(Poly const& f, Poly const& g, std::size_t k) {
    RelationSet const s({make_monic(g)});
    std::size_t const l = std::max(f.is_zero() ? 1 : f.leading_word().length(),
                                   g.leading_word().length());
    return metalie::testing::trivial_mod(f, s, above_length(l), k);
  }

  Presentation random_zero_free(Rng& rng) {
    Presentation p;
    std::size_t const k = uniform(rng, 2, 3);
    p.generators        = Alphabet::numbered(k);
    std::size_t const n = uniform(rng, 1, 2);
    while (p.relations.size() < n) {
      Poly const f = random_rpoly(rng, k, 3, uniform(rng, 1, 2));
      if (!f.is_zero()) {
        p.relations.push_back(make_monic(f));
      }
    }
    return p;
  }

  Outcome properties() {
    Outcome           o;
    Rng               rng(909);
    std::size_t const k = 4;

    int n1 = 0, n5 = 0, n6 = 0;
    while (n1 < 200 || n5 < 200 || n6 < 200) {
      Poly f = random_rpoly(rng, k, 3, 2);
      if (f.is_zero()) {
        continue;
      }
      Gen const top = metalie::testing::random_gen(rng, k);
      f += random_zero_part(rng, top);
      f = make_monic(f);
      RelationSet const s({f});
      Word const        fl = f.leading_word();
      o.require(compose(CompositionKind::I, f, f, {}).value.is_zero(), "self type I");
      ++n1;
      if (std::find(fl.tail().begin(), fl.tail().end(), top) == fl.tail().end()) {
        auto const c5 = compose(CompositionKind::V, f, f, {});
        o.require(metalie::testing::trivial_mod(c5.value, s, c5.w, k), "self type V");
        ++n5;
      }
      Gen const  a1 = static_cast<Gen>(uniform(rng, 0, k - 2));
      Gen const  a0 = static_cast<Gen>(uniform(rng, a1 + 1U, k - 1));
      auto const c6 = compose(CompositionKind::VI, f, f, {a0, a1});
      o.require(metalie::testing::trivial_mod(c6.value, s, c6.w, k), "self type VI");
      ++n6;
    }

    int n4 = 0;
    while (n4 < 200) {
      Poly f = random_rpoly(rng, k, 4, 2);
      if (f.is_zero()) {
        continue;
      }
      f               = make_monic(f);
      Word const fl   = f.leading_word();
      auto const tail = fl.tail();
      if (!(tail.size() == 1 || fl.head() <= tail[1])) {
        continue;
      }
      Poly g = random_rpoly(rng, k, 3, 2);
      if (g.is_zero()) {
        continue;
      }
      g += random_zero_part(rng, tail[0]);
      g                 = make_monic(g);
      auto const        c = compose(CompositionKind::IV, f, g, {tail[0]});
      RelationSet const s({f, g});
      o.require(metalie::testing::trivial_mod(c.value, s, c.w, k), "type IV exclusion");
      ++n4;
    }

    int npre = 0;
    while (npre < 200) {
      Poly f = metalie::testing::random_poly(rng, k, 4, 4);
      if (f.is_zero() || !f.has_part0() || !f.has_part1()) {
        continue;
      }
      f            = make_monic(f);
      Poly const g = preprocess_relation(f);
      Gen const  d = f.leading0().first.head();
      o.require(g.part0() == f.part0(), "preprocessing changed the (0)-part");
      o.require(g.leading_word() <= f.leading_word(), "preprocessing raised the leading word");
      Poly const g1 = g.part1();
      for (auto const& [w, c] : g1.terms()) {
        o.require(!strict_subword(w, d), "preprocessing left a strict subword");
      }
      o.require(in_ideal_of(g - f, f, k) && in_ideal_of(f - g, g, k),
                "preprocessing changed the ideal");
      ++npre;
    }

    int pairs = 0, attempts = 0;
    while (pairs < 20 && attempts < 1000) {
      ++attempts;
      auto const       p1 = random_zero_free(rng);
      auto const       p2 = random_zero_free(rng);
      CompletionConfig cfg;
      cfg.max_word_degree = 10;
      if (shirshov_complete(p1, cfg).status != CompletionStatus::complete
          || shirshov_complete(p2, cfg).status != CompletionStatus::complete) {
        continue;
      }
      o.require(check_free_product(p1, p2, cfg), "free product check failed on pair "
                                               + std::to_string(pairs));
      ++pairs;
    }
    o.require(pairs == 20, "only " + std::to_string(pairs) + " completable pairs");
    if (o.pass) {
      o.detail = "200 each of I/V/VI, IV, preprocessing; 20 free product pairs";
    }
    return o;
  }

  // ---------------------------------------------------------------- 10
  std::string run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return std::to_string(code) + "\n" + out.str() + err.str();
  }

  std::string outputs(unsigned w) {
    std::string const ws = std::to_string(w);
    std::string       all = verify_cu4().text;
    for (std::size_t n = 3; n <= 10; ++n) {
      all += run({"verify", "circuit", std::to_string(n), "--workers", ws});
    }
    for (std::uint64_t seed : tree_seeds) {
      all += run({"verify", "tree", "--random", std::to_string(tree_size(seed)), "--seed",
                  std::to_string(seed), "--workers", ws});
    }
    all += run({"verify", "cu3", "--workers", ws});
    return all;
  }

  std::string json_outputs(unsigned w) {
    std::string all;
    for (auto const& p : {graph_presentation(circuit(8)), graph_presentation(cube(3))}) {
      auto const         rc = complete_and_reduce(p, workers(w));
      std::ostringstream os;
      for (std::size_t i = 0; i < rc.basis.size(); ++i) {
        os << rc.basis[i].to_string(p.generators) << " # " << rc.origins[i] << "\n";
      }
      all += os.str();
    }
    return all;
  }

  Outcome determinism() {
    Outcome           o;
    std::string const a = outputs(1);
    std::string const b = outputs(1);
    std::string const c = outputs(4);
    o.require(a == b, "two runs differ");
    o.require(a == c, "workers 1 and 4 differ");
    o.require(json_outputs(1) == json_outputs(4), "completed bases differ across workers");
    if (o.pass) {
      o.detail = std::to_string(a.size()) + " bytes compared";
    }
    return o;
  }

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    Outcome (*run)();
  };
  Criterion const criteria[] = {
      {"Cu4 relation count", cu4_count},     {"circuit theorem", circuits},
      {"tree theorem", trees},               {"Cu3", cu3},
      {"oracle equivalence", oracle_equivalence},
      {"ideal membership soundness", soundness},
      {"algebra axioms", axioms},            {"engine agreement", engines},
      {"composition and preprocessing properties", properties},               {"determinism", determinism},
  };
  int failed = 0;
  int index  = 0;
  for (auto const& c : criteria) {
    ++index;
    auto const t0 = std::chrono::steady_clock::now();
    Outcome    r;
    try {
      r = c.run();
    } catch (std::exception const& e) {
      r.pass   = false;
      r.detail = std::string("exception: ") + e.what();
    }
    double const dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << index << ". " << c.name;
    std::cout << "  (" << std::fixed;
    std::cout.precision(1);
    std::cout << dt << " s)";
    if (!r.detail.empty()) {
      std::cout << "\n      " << r.detail;
    }
    std::cout << std::endl;
    failed += r.pass ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
