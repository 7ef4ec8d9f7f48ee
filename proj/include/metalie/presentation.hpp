#ifndef METALIE_PRESENTATION_HPP_
#define METALIE_PRESENTATION_HPP_

#include <string>
#include <vector>

#include "metalie/poly.hpp"

namespace metalie {

  // Generators (ascending), defining relations and coefficient field.
  struct Presentation {
    Alphabet          generators;
    Field             field;
    std::vector<Poly> relations;
    // Optional human-readable origin of each relation (e.g. "[x,y]").
    std::vector<std::string> origins;

    std::size_t rank() const noexcept { return generators.size(); }
  };

}  // namespace metalie

#endif  // METALIE_PRESENTATION_HPP_
