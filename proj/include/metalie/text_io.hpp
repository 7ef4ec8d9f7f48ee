#ifndef METALIE_TEXT_IO_HPP_
#define METALIE_TEXT_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "metalie/presentation.hpp"
#include "metalie/presentations.hpp"

namespace metalie {

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Grammar:
  //   field Q | field GF(p)            (optional, default Q)
  //   generators: g1 < g2 < ... < gk
  //   relations:
  //   <expression>                     one per line
  // '#' starts a comment. A number is a coefficient only when followed by '*';
  // otherwise a token names a generator.
  // Zero relations are dropped and reported in `warnings` if given.
  Presentation parse_presentation(std::string_view text,
                                  std::vector<std::string>* warnings = nullptr);

  // One expression over the given generators; `line` is used in error positions.
  Poly parse_expression(std::string_view text, Alphabet const& gens, Field const& field,
                        std::size_t line = 1);

  // Canonical file text; parse_presentation(print_presentation(p)) reproduces
  // generators, field and relations.
  std::string print_presentation(Presentation const& p);

  // Adjacency list, one "u: v w ..." line per vertex; vertex order = line order.
  // Neighbours not listed as a line of their own are appended in order of
  // first mention.
  Graph parse_graph(std::string_view text);
  std::string print_graph(Graph const& g);

}  // namespace metalie

#endif  // METALIE_TEXT_IO_HPP_
