#include "metalie/oracle.hpp"

#include <map>

namespace metalie {

  namespace {
    // Row space with pivots on leading words; every stored row is monic.
    class Echelon {
     public:
      void insert(Poly row) {
        while (!row.is_zero()) {
          auto it = pivots_.find(row.leading_word());
          if (it == pivots_.end()) {
            Word w = row.leading_word();
            pivots_.emplace(std::move(w), make_monic(row));
            return;
          }
          row.add_scaled(it->second, -row.leading_coefficient());
        }
      }
      std::map<Word, Poly> const& pivots() const { return pivots_; }

     private:
      std::map<Word, Poly> pivots_;
    };

    // Leading length of s * a1 * ... * an, n >= 1, is |s-bar| + n.
    void extend(Echelon& e, Poly const& cur, std::size_t len, std::size_t bound, Gen lo,
                std::size_t k) {
      for (std::size_t a = lo; a < k && len < bound; ++a) {
        Poly next = mul(cur, static_cast<Gen>(a));
        if (next.is_zero()) {
          continue;
        }
        e.insert(next);
        extend(e, next, len + 1, bound, static_cast<Gen>(a), k);
      }
    }
  }  // namespace

  std::vector<std::size_t> oracle_quotient_dims(std::size_t k,
                                                std::span<Poly const> relations,
                                                OracleConfig const& cfg) {
    std::size_t const bound = std::max(cfg.degree_bound, cfg.max_len);
    std::size_t       cols  = 0;
    for (std::size_t l = 1; l <= bound; ++l) {
      cols += count_regular_words(k, l);
    }
    if (cols > cfg.size_cap) {
      throw Error("oracle size cap exceeded: " + std::to_string(cols) + " words");
    }
    Echelon e;
    for (auto const& s : relations) {
      if (s.is_zero() || s.leading_word().length() > bound) {
        continue;
      }
      std::size_t const ls = s.leading_word().length();
      e.insert(s);
      // s * a1 * (ascending a2 ... an); the order of a2.. does not matter
      for (std::size_t a1 = 0; a1 < k && ls < bound; ++a1) {
        Poly p = mul(s, static_cast<Gen>(a1));
        if (p.is_zero()) {
          continue;
        }
        e.insert(p);
        extend(e, p, ls + 1, bound, 0, k);
      }
      // s * u for R-words u; its leading length is |u| + 1
      if (s.has_part0()) {
        for (std::size_t l = 2; l < bound; ++l) {
          for (auto const& u : enumerate_regular_words(k, l)) {
            e.insert(mul(s, Poly(u)));
          }
        }
      }
    }
    std::vector<std::size_t> dims(cfg.max_len + 1, 0);
    for (std::size_t l = 1; l <= cfg.max_len; ++l) {
      dims[l] = count_regular_words(k, l);
    }
    for (auto const& [w, row] : e.pivots()) {
      if (w.length() <= cfg.max_len) {
        --dims[w.length()];
      }
    }
    return dims;
  }

}  // namespace metalie
