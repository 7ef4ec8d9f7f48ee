#ifndef METALIE_PRESENTATIONS_HPP_
#define METALIE_PRESENTATIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "metalie/presentation.hpp"

namespace metalie {

  // Simple undirected graph; vertex order doubles as generator order.
  struct Graph {
    std::vector<std::string>                         vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // (larger, smaller)

    // Adds {u, v}; ignores duplicates, rejects loops and unknown vertices.
    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const;
    std::vector<std::vector<std::size_t>> adjacency() const;
  };

  // One monomial relation max(u,v) min(u,v) per edge.
  Presentation graph_presentation(Graph const& g);

  Graph circuit(std::size_t n);
  // f0 = [n-1,0], f_i = [i,i-1], g_j = [j,0,j+1,...,n-1] (2 <= j <= n-2).
  std::vector<Poly> circuit_theorem_basis(std::size_t n);

  // Reorders a tree by breadth-first levels from `root` (root smallest, discovery
  // order within a level) and emits one relation child*parent per non-root vertex.
  // Throws Error if g is not a tree.
  Presentation tree_presentation(Graph const& g, std::size_t root = 0);
  // Same from a parent map (child name -> parent name).
  Presentation tree_presentation(std::map<std::string, std::string> const& parent,
                                 std::string const& root);
  // The reordered graph used by tree_presentation.
  Graph tree_bfs_order(Graph const& g, std::size_t root = 0);

  // Random labelled tree on n vertices (vertex i attaches to a random earlier one).
  Graph random_tree(std::size_t n, std::uint64_t seed);
  // Random simple graph on n vertices with edge probability p.
  Graph random_graph(std::size_t n, double p, std::uint64_t seed);

  // 0/1 tuples ordered lexicographically, (0,...,0) smallest; Hamming-1 edges.
  Graph cube(std::size_t n);

  // Soft classification of a computed Cu3 basis into the families R2, R3, R4,
  // R5 and R5' by leading-word shape.
  struct FamilyReport {
    std::map<std::string, std::size_t> counts;
    std::vector<std::string>           unmatched;
  };
  struct FamilyDescriptor {
    std::string name;
    std::size_t length;        // leading-word length
    std::size_t head_distance; // Hamming distance of the first two letters
    std::string description;
  };
  std::vector<FamilyDescriptor> cu3_theorem_families();
  FamilyReport classify_cu3(std::vector<Poly> const& basis);

  // Structure constants of a metabelian algebra with basis a_1..a_p of the
  // derived part and b_1..b_q of a complement. Generator order: b's below a's.
  struct StructureConstants {
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;
    // gamma[i][j][k]: a_i b_j = sum_k gamma a_k
    std::vector<std::vector<std::vector<Scalar>>> gamma;
    // delta[i][j][k] for i > j: b_i b_j = sum_k delta a_k
    std::vector<std::vector<std::vector<Scalar>>> delta;

    static StructureConstants zero(std::size_t dim_a, std::size_t dim_b);
  };
  Presentation structure_constant_presentation(StructureConstants const& sc);

}  // namespace metalie

#endif  // METALIE_PRESENTATIONS_HPP_
