#include "metalie/presentations.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>
#include <set>

namespace metalie {

  void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertices.size() || v >= vertices.size()) {
      throw Error("edge refers to a missing vertex");
    }
    if (u == v) {
      throw Error("loop at vertex '" + vertices[u] + "'");
    }
    auto e = std::make_pair(std::max(u, v), std::min(u, v));
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
      edges.push_back(e);
    }
  }

  bool Graph::adjacent(std::size_t u, std::size_t v) const {
    auto e = std::make_pair(std::max(u, v), std::min(u, v));
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }

  std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) {
      std::sort(a.begin(), a.end());
    }
    return adj;
  }

  Presentation graph_presentation(Graph const& g) {
    Presentation p;
    p.generators = Alphabet(g.vertices);
    for (auto [u, v] : g.edges) {
      Gen const hi = static_cast<Gen>(std::max(u, v));
      Gen const lo = static_cast<Gen>(std::min(u, v));
      p.relations.emplace_back(Word::make_unchecked(hi, std::span<Gen const>(&lo, 1)));
      p.origins.push_back("[" + g.vertices[hi] + "," + g.vertices[lo] + "]");
    }
    return p;
  }

  Graph circuit(std::size_t n) {
    if (n < 3) {
      throw Error("a circuit needs at least 3 vertices");
    }
    Graph g;
    g.vertices = Alphabet::numbered(n).names();
    // f0 = [n-1, 0] first, then f_i = [i, i-1]
    g.add_edge(n - 1, 0);
    for (std::size_t i = 1; i < n; ++i) {
      g.add_edge(i, i - 1);
    }
    return g;
  }

  std::vector<Poly> circuit_theorem_basis(std::size_t n) {
    if (n < 3) {
      throw Error("a circuit needs at least 3 vertices");
    }
    std::vector<Poly> out;
    auto bracket = [&](std::vector<Gen> gens) { out.push_back(bracket_left_normed(gens)); };
    bracket({static_cast<Gen>(n - 1), 0});
    for (std::size_t i = 1; i < n; ++i) {
      bracket({static_cast<Gen>(i), static_cast<Gen>(i - 1)});
    }
    for (std::size_t j = 2; j + 2 <= n; ++j) {
      std::vector<Gen> gens{static_cast<Gen>(j), 0};
      for (std::size_t t = j + 1; t < n; ++t) {
        gens.push_back(static_cast<Gen>(t));
      }
      bracket(gens);
    }
    return out;
  }

  Graph tree_bfs_order(Graph const& g, std::size_t root) {
    std::size_t const n = g.vertices.size();
    if (n == 0 || root >= n) {
      throw Error("tree needs a root vertex");
    }
    if (g.edges.size() + 1 != n) {
      throw Error("graph is not a tree: " + std::to_string(g.edges.size())
                  + " edges on " + std::to_string(n) + " vertices");
    }
    auto const               adj = g.adjacency();
    std::vector<std::size_t> order;
    std::vector<std::size_t> parent(n, n);
    std::vector<char>        seen(n, 0);
    std::deque<std::size_t>  queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (std::size_t w : adj[v]) {
        if (seen[w] == 0) {
          seen[w]   = 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (order.size() != n) {
      throw Error("graph is not connected, hence not a tree");
    }
    std::vector<std::size_t> rank(n);
    Graph                    out;
    for (std::size_t i = 0; i < n; ++i) {
      rank[order[i]] = i;
      out.vertices.push_back(g.vertices[order[i]]);
    }
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t v = order[i];
      out.add_edge(rank[v], rank[parent[v]]);
    }
    return out;
  }

  Presentation tree_presentation(Graph const& g, std::size_t root) {
    return graph_presentation(tree_bfs_order(g, root));
  }

  Presentation tree_presentation(std::map<std::string, std::string> const& parent,
                                 std::string const& root) {
    if (parent.count(root) != 0) {
      throw Error("root '" + root + "' has a parent");
    }
    std::set<std::string> names{root};
    for (auto const& [c, p] : parent) {
      names.insert(c);
      names.insert(p);
    }
    // every chain of parents must reach the root without revisiting a vertex
    for (auto const& [c, p] : parent) {
      std::set<std::string> path{c};
      std::string           cur = p;
      while (cur != root) {
        if (!path.insert(cur).second) {
          throw Error("cycle detected at '" + cur + "'");
        }
        auto it = parent.find(cur);
        if (it == parent.end()) {
          throw Error("vertex '" + cur + "' does not reach the root");
        }
        cur = it->second;
      }
    }
    Graph g;
    g.vertices.push_back(root);
    for (auto const& n : names) {
      if (n != root) {
        g.vertices.push_back(n);
      }
    }
    auto index = [&](std::string const& n) {
      return static_cast<std::size_t>(
          std::find(g.vertices.begin(), g.vertices.end(), n) - g.vertices.begin());
    };
    for (auto const& [c, p] : parent) {
      g.add_edge(index(c), index(p));
    }
    return tree_presentation(g, 0);
  }

  Graph random_tree(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Graph           g;
    g.vertices = Alphabet::numbered(n).names();
    for (std::size_t i = 1; i < n; ++i) {
      std::uniform_int_distribution<std::size_t> pick(0, i - 1);
      g.add_edge(i, pick(rng));
    }
    return g;
  }

  Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64                        rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph                                  g;
    g.vertices = Alphabet::numbered(n).names();
    for (std::size_t i = 1; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (coin(rng) < p) {
          g.add_edge(i, j);
        }
      }
    }
    return g;
  }

  Graph cube(std::size_t n) {
    if (n == 0 || n > 12) {
      throw Error("cube dimension must be in 1..12");
    }
    Graph             g;
    std::size_t const count = std::size_t{1} << n;
    for (std::size_t v = 0; v < count; ++v) {
      std::string name(n, '0');
      for (std::size_t i = 0; i < n; ++i) {
        if ((v >> (n - 1 - i)) & 1U) {
          name[i] = '1';
        }
      }
      g.vertices.push_back(name);
    }
    for (std::size_t v = 0; v < count; ++v) {
      for (std::size_t bit = 0; bit < n; ++bit) {
        std::size_t u = v ^ (std::size_t{1} << bit);
        if (u < v) {
          g.add_edge(v, u);
        }
      }
    }
    return g;
  }

  std::vector<FamilyDescriptor> cu3_theorem_families() {
    return {
        {"R2", 2, 1, "edge monomials floor(eps delta), d = 1"},
        {"R3", 3, 2, "floor(eps delta) mu, d = 2, mu adjacent to both"},
        {"R4", 4, 3, "floor(eps delta) mu gamma, d = 3"},
        {"R5", 5, 2, "floor(d1 d2) gamma <mu1 mu2>, d = 2, gamma at distance 2 from both"},
        {"R5'", 5, 2, "floor(d1 d2) gamma mu mu', d = 2, gamma adjacent to d1"},
    };
  }

  FamilyReport classify_cu3(std::vector<Poly> const& basis) {
    FamilyReport rep;
    for (auto const& f : cu3_theorem_families()) {
      rep.counts[f.name] = 0;
    }
    auto dist = [](Gen a, Gen b) { return std::popcount(static_cast<unsigned>(a ^ b)); };
    Alphabet const names(cube(3).vertices);
    for (auto const& f : basis) {
      Word const& w = f.leading_word();
      std::string family;
      if (w.is_rword()) {
        Gen const   e   = w.head();
        Gen const   d   = w.first();
        int const   ed  = dist(e, d);
        auto const  rest = w.tail().subspan(1);
        if (w.length() == 2 && ed == 1) {
          family = "R2";
        } else if (w.length() == 3 && ed == 2 && dist(rest[0], e) == 1
                   && dist(rest[0], d) == 1) {
          family = "R3";
        } else if (w.length() == 4 && ed == 3) {
          family = "R4";
        } else if (w.length() == 5 && ed == 2) {
          bool r5  = false;
          bool r5p = false;
          for (Gen g : rest) {
            r5  = r5 || (dist(g, e) == 2 && dist(g, d) == 2);
            r5p = r5p || dist(g, e) == 1 || dist(g, d) == 1;
          }
          family = r5 ? "R5" : (r5p ? "R5'" : "");
        }
      }
      if (family.empty()) {
        rep.unmatched.push_back(w.to_string(names));
      } else {
        ++rep.counts[family];
      }
    }
    return rep;
  }

  StructureConstants StructureConstants::zero(std::size_t dim_a, std::size_t dim_b) {
    StructureConstants sc;
    sc.dim_a = dim_a;
    sc.dim_b = dim_b;
    sc.gamma.assign(dim_a, std::vector<std::vector<Scalar>>(dim_b, std::vector<Scalar>(dim_a)));
    sc.delta.assign(dim_b, std::vector<std::vector<Scalar>>(dim_b, std::vector<Scalar>(dim_a)));
    return sc;
  }

  Presentation structure_constant_presentation(StructureConstants const& sc) {
    std::size_t const p = sc.dim_a;
    std::size_t const q = sc.dim_b;
    auto check = [&](auto const& t, std::size_t d0, std::size_t d1) {
      if (t.size() != d0) {
        throw Error("inconsistent structure-constant dimensions");
      }
      for (auto const& row : t) {
        if (row.size() != d1) {
          throw Error("inconsistent structure-constant dimensions");
        }
        for (auto const& v : row) {
          if (v.size() != p) {
            throw Error("inconsistent structure-constant dimensions");
          }
        }
      }
    };
    check(sc.gamma, p, q);
    check(sc.delta, q, q);

    std::vector<std::string> names;
    for (std::size_t j = 0; j < q; ++j) {
      names.push_back("b" + std::to_string(j + 1));
    }
    for (std::size_t i = 0; i < p; ++i) {
      names.push_back("a" + std::to_string(i + 1));
    }
    Presentation out;
    out.generators = Alphabet(names);
    auto a = [&](std::size_t i) { return static_cast<Gen>(q + i); };
    auto b = [&](std::size_t j) { return static_cast<Gen>(j); };
    auto word2 = [](Gen hi, Gen lo) {
      return Word::make_unchecked(hi, std::span<Gen const>(&lo, 1));
    };
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        Poly m(word2(a(i), b(j)));
        for (std::size_t k = 0; k < p; ++k) {
          m.add_term(Word::letter(a(k)), -sc.gamma[i][j][k]);
        }
        out.relations.push_back(std::move(m));
        out.origins.push_back("m1");
      }
    }
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Poly m(word2(b(i), b(j)));
        for (std::size_t k = 0; k < p; ++k) {
          m.add_term(Word::letter(a(k)), -sc.delta[i][j][k]);
        }
        out.relations.push_back(std::move(m));
        out.origins.push_back("m2");
      }
    }
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        out.relations.emplace_back(word2(a(i), a(j)));
        out.origins.push_back("m3");
      }
    }
    return out;
  }

}  // namespace metalie
