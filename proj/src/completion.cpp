#include "metalie/completion.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"

namespace metalie {

  std::string to_string(CompletionStatus s) {
    return s == CompletionStatus::complete ? "complete" : "degree_capped";
  }

  namespace {
    // Position in r's tail of a strict-subword occurrence of d, or -1.
    std::ptrdiff_t strict_occurrence(Word const& r, Gen d) {
      auto const t  = r.tail();
      auto       it = std::find(t.begin() + 1, t.end(), d);
      if (it != t.end()) {
        return it - t.begin();
      }
      if (t.size() >= 2 && t[0] == d && r.head() > t[1]) {
        return 0;
      }
      return -1;
    }

    std::string describe(CompositionInstance const& c) {
      return to_string(c.kind) + "(" + std::to_string(c.f) + "," + std::to_string(c.g) + ")";
    }

    Poly normalize_relation(Poly f) {
      f = preprocess_relation(make_monic(f));
      return make_monic(f);
    }
  }  // namespace

  Poly preprocess_relation(Poly f) {
    if (!f.has_part0()) {
      return f;
    }
    auto const [lead0, beta_ref] = f.leading0();
    Gen const    d               = lead0.head();
    Scalar const beta            = beta_ref;
    while (true) {
      // largest (1)-part word with d as a strict subword
      std::optional<Word> offender;
      for (auto it = f.terms().rbegin(); it != f.terms().rend() && it->first.is_rword(); ++it) {
        if (strict_occurrence(it->first, d) >= 0) {
          offender = it->first;
          break;
        }
      }
      if (!offender) {
        return f;
      }
      Tail t(offender->tail().begin(), offender->tail().end());
      t.erase(t.begin() + strict_occurrence(*offender, d));
      Word const   u = Word::make_unchecked(offender->head(), t);
      Scalar const c = f.coefficient(*offender);
      f.add_scaled(mul(Poly(u), f), -(c / beta));
    }
  }

  CompletionResult shirshov_complete(Presentation const& p, CompletionConfig const& cfg) {
    std::size_t const k = p.rank();
    if (k == 0) {
      throw Error("presentation has no generators");
    }
    CompletionResult res;
    res.degree_bound = cfg.max_word_degree != 0 ? cfg.max_word_degree : 2 * k;

    RelationSet s;
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      Poly r = p.relations[i].in(p.field);
      if (r.is_zero()) {
        continue;
      }
      for (auto const& [w, c] : r.terms()) {
        for (Gen g : w.letters()) {
          if (g >= k) {
            throw Error("relation refers to an unknown generator");
          }
        }
      }
      s.add(normalize_relation(std::move(r)));
      res.origins.push_back(i < p.origins.size() && !p.origins[i].empty()
                                ? p.origins[i]
                                : "relation " + std::to_string(i));
    }
    res.input_count = s.size();

    using Pair = std::pair<std::size_t, std::size_t>;
    std::vector<Pair> pending;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        pending.emplace_back(i, j);
      }
    }

    bool capped = false;
    while (!pending.empty()) {
      if (res.stats.passes == cfg.max_passes) {
        capped = true;
        break;
      }
      ++res.stats.passes;

      std::vector<std::vector<CompositionInstance>> per_pair(pending.size());
      detail::parallel_for(pending.size(), cfg.workers, [&](std::size_t i) {
        per_pair[i] = enumerate_compositions(pending[i].first, pending[i].second, s, k,
                                             cfg.compositions);
      });
      std::vector<CompositionInstance> instances;
      for (auto& v : per_pair) {
        for (auto& c : v) {
          if (c.w.length() > res.degree_bound) {
            capped = true;
            ++res.stats.over_cap;
            if (cfg.record_events) {
              res.events.push_back({c.kind, c.f, c.g, c.params, c.w, true, false, {}});
            }
            continue;
          }
          instances.push_back(std::move(c));
        }
      }
      std::sort(instances.begin(), instances.end(), composition_before);

      // Reduce against the frozen snapshot in parallel, then adjoin in order.
      std::size_t const snapshot = s.size();
      std::vector<Poly> reduced(instances.size());
      detail::parallel_for(instances.size(), cfg.workers, [&](std::size_t i) {
        reduced[i] = normal_form(instances[i].value, s);
      });

      pending.clear();
      for (std::size_t i = 0; i < instances.size(); ++i) {
        auto const& c = instances[i];
        ++res.stats.examined;
        Poly r = std::move(reduced[i]);
        if (!r.is_zero() && s.size() > snapshot) {
          r = normal_form(std::move(r), s);
        }
        CompletionEvent ev{c.kind, c.f, c.g, c.params, c.w, false, r.is_zero(), {}};
        if (!r.is_zero()) {
          ++res.stats.nontrivial;
          ++res.stats.adjoined;
          r                     = normalize_relation(std::move(r));
          ev.adjoined           = r.leading_word();
          std::size_t const idx = s.add(std::move(r));
          res.origins.push_back(describe(c) + " w=" + c.w.to_string(p.generators));
          for (std::size_t j = 0; j <= idx; ++j) {
            pending.emplace_back(idx, j);
            if (j != idx) {
              pending.emplace_back(j, idx);
            }
          }
        }
        if (cfg.record_events) {
          res.events.push_back(std::move(ev));
        }
      }
    }
    res.status = capped ? CompletionStatus::degree_capped : CompletionStatus::complete;
    res.basis  = s.polys();
    return res;
  }

  GsCheckResult is_gs_basis(RelationSet const& s, std::size_t k, GsCheckConfig const& cfg) {
    std::vector<CompositionInstance> instances;
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        for (auto& c : enumerate_compositions(i, j, s, k, cfg.compositions)) {
          if (cfg.max_word_degree != 0 && c.w.length() > cfg.max_word_degree) {
            continue;
          }
          instances.push_back(std::move(c));
        }
      }
    }
    std::sort(instances.begin(), instances.end(), composition_before);
    std::vector<char> trivial(instances.size(), 0);
    detail::parallel_for(instances.size(), cfg.workers, [&](std::size_t i) {
      trivial[i] = is_trivial(instances[i], s) ? 1 : 0;
    });
    GsCheckResult out;
    out.examined = instances.size();
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (trivial[i] == 0) {
        out.ok      = false;
        out.witness = std::move(instances[i]);
        break;
      }
    }
    return out;
  }

  std::vector<Poly> reduce_basis(std::vector<Poly> const& input) {
    std::vector<Poly> cur;
    cur.reserve(input.size());
    for (auto const& f : input) {
      if (!f.is_zero()) {
        cur.push_back(make_monic(f));
      }
    }
    // Largest leading words first; among equal leading words the later copy goes.
    std::vector<std::size_t> order(cur.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      auto const& wa = cur[a].leading_word();
      auto const& wb = cur[b].leading_word();
      return wa != wb ? wb < wa : a > b;
    });
    std::vector<char> keep(cur.size(), 1);
    auto others = [&](std::size_t skip) {
      RelationSet rs;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (keep[i] != 0 && i != skip) {
          rs.add(cur[i]);
        }
      }
      return rs;
    };
    for (std::size_t idx : order) {
      if (others(idx).find_reducer(cur[idx].leading_word())) {
        keep[idx] = 0;
      }
    }
    std::vector<std::size_t> survivors;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (keep[i] != 0) {
        survivors.push_back(i);
      }
    }
    for (std::size_t idx : survivors) {
      Poly const& f     = cur[idx];
      Word const  lead  = f.leading_word();
      Poly        lower = f;
      lower.add_term(lead, Scalar(-1));
      Poly reduced = normal_form(std::move(lower), others(idx));
      reduced.add_term(lead, Scalar(1));
      cur[idx] = std::move(reduced);
    }
    std::vector<Poly> out;
    out.reserve(survivors.size());
    for (std::size_t idx : survivors) {
      out.push_back(cur[idx]);
    }
    std::sort(out.begin(), out.end(), [](Poly const& a, Poly const& b) {
      return a.leading_word() < b.leading_word();
    });
    return out;
  }

  CompletionResult monomial_complete(Presentation const& p) {
    std::vector<Word> h;
    for (auto const& r : p.relations) {
      if (r.size() != 1 || !r.leading_word().is_rword()) {
        throw Error("monomial_complete needs single R-word monomial relations");
      }
      h.push_back(r.leading_word());
    }
    CompletionResult res;
    res.degree_bound = 0;
    res.input_count  = h.size();
    for (std::size_t i = 0; i < h.size(); ++i) {
      res.origins.push_back("relation " + std::to_string(i));
    }
    auto covered = [&](Word const& cand) {
      return std::any_of(h.begin(), h.end(), [&](Word const& f) {
        return f.head() == cand.head() && tail_divides(f.tail(), cand.tail());
      });
    };
    bool changed = true;
    while (changed) {
      changed = false;
      ++res.stats.passes;
      for (std::size_t i = 0; i < h.size(); ++i) {
        for (std::size_t j = i + 1; j < h.size(); ++j) {
          if (h[i].head() != h[j].head() || h[i].first() == h[j].first()) {
            continue;
          }
          ++res.stats.examined;
          Word const& fi = h[i];
          Word const& fj = h[j];
          Gen const   hi = std::max(fi.first(), fj.first());
          Gen const   lo = std::min(fi.first(), fj.first());
          Tail        rest{fi.head()};
          rest.insert(rest.end(), fi.tail().begin() + 1, fi.tail().end());
          rest.insert(rest.end(), fj.tail().begin() + 1, fj.tail().end());
          std::sort(rest.begin(), rest.end());
          rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
          Tail t{lo};
          t.insert(t.end(), rest.begin(), rest.end());
          std::sort(t.begin(), t.end());
          Word cand = Word::make_unchecked(hi, t);
          if (!covered(cand)) {
            ++res.stats.nontrivial;
            ++res.stats.adjoined;
            res.origins.push_back("pair(" + std::to_string(i) + "," + std::to_string(j) + ")");
            h.push_back(std::move(cand));
            changed = true;
          }
        }
      }
    }
    for (auto const& w : h) {
      res.basis.emplace_back(w);
    }
    return res;
  }

  Poly remap_generators(Poly const& f, std::span<Gen const> map) {
    Poly out;
    for (auto const& [w, c] : f.terms()) {
      Tail t;
      for (Gen g : w.tail()) {
        t.push_back(map[g]);
      }
      out.add_term(Word::make_unchecked(map[w.head()], t), c);
    }
    return out;
  }

  bool check_free_product(Presentation const& p1, Presentation const& p2,
                    CompletionConfig const& cfg) {
    for (auto const* p : {&p1, &p2}) {
      for (auto const& r : p->relations) {
        if (r.has_part0()) {
          throw Error("check_free_product: relations must have zero (0)-part");
        }
      }
    }
    auto const c1 = shirshov_complete(p1, cfg);
    auto const c2 = shirshov_complete(p2, cfg);
    std::size_t const k1 = p1.rank();
    std::size_t const k2 = p2.rank();
    std::vector<Gen>  shift(k2);
    std::iota(shift.begin(), shift.end(), static_cast<Gen>(k1));
    RelationSet u;
    for (auto const& f : c1.basis) {
      u.add(f);
    }
    for (auto const& f : c2.basis) {
      u.add(remap_generators(f, shift));
    }
    GsCheckConfig gc;
    gc.workers      = cfg.workers;
    gc.compositions = cfg.compositions;
    return is_gs_basis(u, k1 + k2, gc).ok;
  }

}  // namespace metalie
