#include "metalie/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace metalie {

  ParseError::ParseError(std::string const& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": "
              + what),
        line_(line),
        column_(column) {}

  namespace {
    bool name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '\'';
    }

    std::string_view trim(std::string_view s) {
      auto const b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return {};
      }
      auto const e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    }

    std::string_view strip_comment(std::string_view s) {
      return s.substr(0, s.find('#'));
    }

    class ExprParser {
     public:
      ExprParser(std::string_view text, Alphabet const& gens, Field const& field,
                 std::size_t line)
          : text_(text), gens_(gens), field_(field), line_(line) {}

      Poly parse() {
        Poly out;
        skip();
        Scalar sign(1);
        if (peek() == '-' || peek() == '+') {
          sign = next() == '-' ? Scalar(-1) : Scalar(1);
        }
        out.add_scaled(term(), sign);
        while (true) {
          skip();
          if (done()) {
            break;
          }
          char const op = peek();
          if (op != '+' && op != '-') {
            fail("expected '+' or '-'");
          }
          ++pos_;
          out.add_scaled(term(), op == '-' ? Scalar(-1) : Scalar(1));
        }
        return out;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(msg, line_, pos_ + 1);
      }
      bool done() const { return pos_ >= text_.size(); }
      char peek() const { return done() ? '\0' : text_[pos_]; }
      char next() { return text_[pos_++]; }
      void skip() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
          ++pos_;
        }
      }

      std::string token() {
        std::size_t const start = pos_;
        while (!done() && (name_char(peek()) || peek() == '/')) {
          ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
      }

      Gen generator() {
        skip();
        std::size_t const start = pos_;
        std::string const name  = token();
        if (name.empty()) {
          fail("expected a generator");
        }
        if (!gens_.contains(name)) {
          pos_ = start;
          fail("unknown generator '" + name + "'");
        }
        return gens_.rank(name);
      }

      Poly bracket() {
        ++pos_;  // '['
        std::vector<Gen> gs{generator()};
        while (true) {
          skip();
          if (peek() == ',') {
            ++pos_;
            gs.push_back(generator());
          } else if (peek() == ']') {
            ++pos_;
            break;
          } else {
            fail("expected ',' or ']'");
          }
        }
        if (gs.size() < 2) {
          fail("a bracket needs at least 2 entries");
        }
        return bracket_left_normed(gs);
      }

      Poly term() {
        skip();
        if (peek() == '[') {
          return bracket();
        }
        std::size_t const start = pos_;
        std::string const tok   = token();
        if (tok.empty()) {
          fail("expected a term");
        }
        skip();
        if (peek() != '*') {
          if (!gens_.contains(tok)) {
            pos_ = start;
            fail("unknown generator '" + tok + "'");
          }
          return Poly::letter(gens_.rank(tok));
        }
        ++pos_;
        Scalar c;
        try {
          c = Scalar::parse(tok).in(field_);
        } catch (Error const& e) {
          pos_ = start;
          fail(e.what());
        }
        skip();
        Poly body = peek() == '[' ? bracket() : Poly::letter(generator());
        return body * c;
      }

      std::string_view text_;
      Alphabet const&  gens_;
      Field const&     field_;
      std::size_t      line_;
      std::size_t      pos_ = 0;
    };

    Field parse_field(std::string_view spec, std::size_t line, std::size_t col) {
      if (spec == "Q") {
        return Field::rationals();
      }
      if (spec.size() > 4 && spec.substr(0, 3) == "GF(" && spec.back() == ')') {
        std::string const p(spec.substr(3, spec.size() - 4));
        if (!p.empty() && std::all_of(p.begin(), p.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c)) != 0;
            })) {
          try {
            return Field::prime(std::stoull(p));
          } catch (std::exception const& e) {
            throw ParseError(e.what(), line, col);
          }
        }
      }
      throw ParseError("unknown field '" + std::string(spec) + "'", line, col);
    }
  }  // namespace

  Poly parse_expression(std::string_view text, Alphabet const& gens, Field const& field,
                        std::size_t line) {
    return ExprParser(text, gens, field, line).parse().in(field);
  }

  Presentation parse_presentation(std::string_view text, std::vector<std::string>* warnings) {
    Presentation p;
    bool         have_gens = false;
    bool         in_rels   = false;
    std::size_t  lineno    = 0;
    std::size_t  pos       = 0;
    while (pos <= text.size()) {
      auto const       eol  = std::min(text.find('\n', pos), text.size());
      std::string_view raw  = strip_comment(text.substr(pos, eol - pos));
      pos                   = eol + 1;
      ++lineno;
      std::string_view const line = trim(raw);
      if (line.empty()) {
        continue;
      }
      std::size_t const col = static_cast<std::size_t>(line.data() - raw.data()) + 1;
      if (in_rels) {
        Poly r = parse_expression(raw, p.generators, p.field, lineno);
        if (r.is_zero()) {
          if (warnings != nullptr) {
            warnings->push_back("line " + std::to_string(lineno)
                                + ": relation is zero, dropped");
          }
          continue;
        }
        p.relations.push_back(std::move(r));
        p.origins.emplace_back(line);
        continue;
      }
      if (line.substr(0, 6) == "field " || line == "field") {
        if (have_gens) {
          throw ParseError("field must precede generators", lineno, col);
        }
        p.field = parse_field(trim(line.substr(5)), lineno, col + 6);
      } else if (line.substr(0, 11) == "generators:") {
        if (have_gens) {
          throw ParseError("generators declared twice", lineno, col);
        }
        std::vector<std::string> names;
        std::set<std::string>    seen;
        std::string_view         rest = line.substr(11);
        std::size_t              off  = col + 11;
        while (true) {
          auto const       lt   = rest.find('<');
          std::string_view item = rest.substr(0, lt);
          std::string_view name = trim(item);
          std::size_t      c    = off + static_cast<std::size_t>(
                                        name.empty() ? 0 : name.data() - item.data());
          if (name.empty()) {
            if (names.empty() && lt == std::string_view::npos) {
              throw ParseError("empty generator list", lineno, c);
            }
            throw ParseError("missing generator name", lineno, c);
          }
          if (!std::all_of(name.begin(), name.end(), name_char)) {
            throw ParseError("invalid generator name '" + std::string(name) + "'", lineno, c);
          }
          if (!seen.insert(std::string(name)).second) {
            throw ParseError("duplicate generator '" + std::string(name) + "'", lineno, c);
          }
          names.emplace_back(name);
          if (lt == std::string_view::npos) {
            break;
          }
          rest = rest.substr(lt + 1);
          off += lt + 1;
        }
        p.generators = Alphabet(std::move(names));
        have_gens    = true;
      } else if (line == "relations:") {
        if (!have_gens) {
          throw ParseError("relations before generators", lineno, col);
        }
        in_rels = true;
      } else {
        throw ParseError("unexpected line", lineno, col);
      }
    }
    if (!have_gens) {
      throw ParseError("missing generators declaration", lineno, 1);
    }
    return p;
  }

  std::string print_presentation(Presentation const& p) {
    std::ostringstream os;
    os << "field " << p.field.to_string() << "\n";
    os << "generators:";
    for (std::size_t i = 0; i < p.rank(); ++i) {
      os << (i == 0 ? " " : " < ") << p.generators.name(static_cast<Gen>(i));
    }
    os << "\nrelations:\n";
    for (auto const& r : p.relations) {
      if (!r.is_zero()) {
        os << r.to_string(p.generators) << "\n";
      }
    }
    return os.str();
  }

  Graph parse_graph(std::string_view text) {
    Graph                                           g;
    std::vector<std::pair<std::size_t, std::string>> pending;  // (vertex, neighbour)
    std::vector<std::size_t>                        pending_line;
    auto index_of = [&](std::string const& name) -> std::size_t {
      auto it = std::find(g.vertices.begin(), g.vertices.end(), name);
      return static_cast<std::size_t>(it - g.vertices.begin());
    };
    std::size_t lineno = 0;
    std::size_t pos    = 0;
    while (pos <= text.size()) {
      auto const       eol  = std::min(text.find('\n', pos), text.size());
      std::string_view line = trim(strip_comment(text.substr(pos, eol - pos)));
      pos                   = eol + 1;
      ++lineno;
      if (line.empty()) {
        continue;
      }
      auto const colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'vertex: neighbours'", lineno, 1);
      }
      std::string const v(trim(line.substr(0, colon)));
      if (v.empty() || !std::all_of(v.begin(), v.end(), name_char)) {
        throw ParseError("invalid vertex name '" + v + "'", lineno, 1);
      }
      if (index_of(v) != g.vertices.size()) {
        throw ParseError("vertex '" + v + "' listed twice", lineno, 1);
      }
      g.vertices.push_back(v);
      std::istringstream rest{std::string(line.substr(colon + 1))};
      std::string        w;
      while (rest >> w) {
        if (!std::all_of(w.begin(), w.end(), name_char)) {
          throw ParseError("invalid vertex name '" + w + "'", lineno, colon + 2);
        }
        pending.emplace_back(g.vertices.size() - 1, w);
        pending_line.push_back(lineno);
      }
    }
    for (auto const& [v, w] : pending) {
      if (index_of(w) == g.vertices.size()) {
        g.vertices.push_back(w);
      }
    }
    for (std::size_t i = 0; i < pending.size(); ++i) {
      std::size_t const u = pending[i].first;
      std::size_t const w = index_of(pending[i].second);
      if (u == w) {
        throw ParseError("loop at vertex '" + g.vertices[u] + "'", pending_line[i], 1);
      }
      g.add_edge(u, w);
    }
    return g;
  }

  std::string print_graph(Graph const& g) {
    auto const         adj = g.adjacency();
    std::ostringstream os;
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
      os << g.vertices[v] << ":";
      for (std::size_t w : adj[v]) {
        if (w > v) {
          os << " " << g.vertices[w];
        }
      }
      os << "\n";
    }
    return os.str();
  }

}  // namespace metalie
