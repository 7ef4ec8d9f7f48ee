#ifndef METALIE_ORACLE_HPP_
#define METALIE_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "metalie/poly.hpp"

namespace metalie {

  struct OracleConfig {
    std::size_t max_len = 4;
    // S-words are generated up to this leading length; 0 means max_len. A
    // larger bound lets inhomogeneous relations cancel down into max_len.
    std::size_t degree_bound = 0;
    // Refuse to build more columns than this.
    std::size_t size_cap = 50000;
  };

  // Brute-force graded dimensions of L(X | S) through max_len.
  //
  // Spans every S-word s, s*a1*...*an and s*u (u an R-word) up to the degree
  // bound, row-reduces exactly, and returns dims[l] = |N_l| - #pivots of length l
  // (dims[0] unused). Uses only the multiplication table, never the reduction or
  // composition machinery.
  std::vector<std::size_t> oracle_quotient_dims(std::size_t k,
                                                std::span<Poly const> relations,
                                                OracleConfig const& cfg);

}  // namespace metalie

#endif  // METALIE_ORACLE_HPP_
