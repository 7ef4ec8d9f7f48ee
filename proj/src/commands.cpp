#include "metalie/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "metalie/oracle.hpp"
#include "metalie/text_io.hpp"

namespace metalie {

  ReducedCompletion complete_and_reduce(Presentation const& p, CompletionConfig const& cfg) {
    ReducedCompletion out;
    out.raw   = shirshov_complete(p, cfg);
    out.basis = reduce_basis(out.raw.basis);
    // reduce_basis keeps leading words, so origins are found by leading word
    std::map<Word, std::string> origin;
    for (std::size_t i = 0; i < out.raw.basis.size(); ++i) {
      origin.emplace(out.raw.basis[i].leading_word(), out.raw.origins[i]);
    }
    for (auto const& f : out.basis) {
      out.origins.push_back(origin.at(f.leading_word()));
    }
    return out;
  }

  namespace {
    std::string join_sizes(std::vector<std::size_t> const& v, std::size_t from) {
      std::string s;
      for (std::size_t i = from; i < v.size(); ++i) {
        s += (i == from ? "" : " ") + std::to_string(v[i]);
      }
      return s;
    }

    std::vector<Poly> sorted_monic(std::vector<Poly> v) {
      for (auto& f : v) {
        f = make_monic(f);
      }
      std::sort(v.begin(), v.end(), [](Poly const& a, Poly const& b) {
        return a.leading_word() < b.leading_word();
      });
      return v;
    }
  }  // namespace

  VerifyReport verify_circuit(std::size_t n, CompletionConfig const& cfg) {
    Presentation const p   = graph_presentation(circuit(n));
    auto const         rc  = complete_and_reduce(p, cfg);
    auto const         exp = sorted_monic(circuit_theorem_basis(n));
    std::ostringstream os;
    os << "circuit " << n << ": status " << to_string(rc.raw.status) << ", basis size "
       << rc.basis.size() << " (expected " << exp.size() << ")\n";
    VerifyReport rep;
    rep.pass = rc.raw.status == CompletionStatus::complete && rc.basis == exp;
    if (!rep.pass) {
      for (std::size_t i = 0; i < std::max(exp.size(), rc.basis.size()); ++i) {
        std::string const got = i < rc.basis.size() ? rc.basis[i].to_string(p.generators) : "-";
        std::string const want = i < exp.size() ? exp[i].to_string(p.generators) : "-";
        if (got != want) {
          os << "first discrepancy at " << i << ": got " << got << ", expected " << want << "\n";
          break;
        }
      }
    }
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    return rep;
  }

  VerifyReport verify_tree(Graph const& tree, CompletionConfig const& cfg) {
    Presentation const p  = tree_presentation(tree, 0);
    auto const         cr = shirshov_complete(p, cfg);
    RelationSet const  s(cr.basis);
    GsCheckConfig      gc;
    gc.workers      = cfg.workers;
    gc.compositions = cfg.compositions;
    auto const         gs = is_gs_basis(s, p.rank(), gc);
    std::ostringstream os;
    os << "tree on " << p.rank() << " vertices: status " << to_string(cr.status)
       << ", adjoined " << cr.stats.adjoined << ", is_gs_basis "
       << (gs.ok ? "true" : "false") << "\n";
    VerifyReport rep;
    rep.pass = cr.status == CompletionStatus::complete && cr.stats.adjoined == 0 && gs.ok;
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    return rep;
  }

  VerifyReport verify_cu3(CompletionConfig const& cfg) {
    std::size_t constexpr max_len = 6;
    Presentation const p          = graph_presentation(cube(3));
    auto const         rc         = complete_and_reduce(p, cfg);
    RelationSet const  s(rc.basis);
    GsCheckConfig      gc;
    gc.workers      = cfg.workers;
    gc.compositions = cfg.compositions;
    auto const   gs = is_gs_basis(s, p.rank(), gc);
    auto const   irr = irr_counts(s, p.rank(), max_len);
    OracleConfig oc;
    oc.max_len      = max_len;
    auto const orc  = oracle_quotient_dims(p.rank(), p.relations, oc);
    auto const fam  = classify_cu3(rc.basis);

    std::ostringstream os;
    os << "cu3: status " << to_string(rc.raw.status) << ", reduced basis " << rc.basis.size()
       << ", is_gs_basis " << (gs.ok ? "true" : "false") << "\n";
    os << "irr counts 1.." << max_len << ": " << join_sizes(irr, 1) << "\n";
    os << "oracle dims 1.." << max_len << ": " << join_sizes(orc, 1) << "\n";
    os << "families:";
    for (auto const& [name, count] : fam.counts) {
      os << " " << name << "=" << count;
    }
    os << " unmatched=" << fam.unmatched.size() << "\n";
    for (auto const& w : fam.unmatched) {
      os << "  unmatched " << w << "\n";
    }
    VerifyReport rep;
    rep.pass = rc.raw.status == CompletionStatus::complete && gs.ok && irr == orc;
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    return rep;
  }

  VerifyReport verify_cu4() {
    std::size_t constexpr expected = 268;
    Presentation const p           = graph_presentation(cube(4));
    auto const         mc          = monomial_complete(p);
    auto const         reduced     = reduce_basis(mc.basis);
    std::map<std::size_t, std::size_t> by_len;
    for (auto const& f : reduced) {
      ++by_len[f.leading_word().length()];
    }
    std::ostringstream os;
    os << "cu4: completed " << mc.basis.size() << ", reduced basis " << reduced.size()
       << " (expected " << expected << ")\n";
    os << "by length:";
    for (auto const& [l, c] : by_len) {
      os << " " << l << ":" << c;
    }
    os << "\n";
    VerifyReport rep;
    rep.pass = reduced.size() == expected;
    os << (rep.pass ? "PASS" : "FAIL") << "\n";
    rep.text = os.str();
    return rep;
  }

  namespace {
    std::string read_file(std::string const& path) {
      if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Error("cannot open '" + path + "'");
      }
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    struct Options {
      std::string   file;
      std::size_t   max_deg    = 0;
      bool          strict     = false;
      unsigned      workers    = 1;
      std::string   format     = "text";
      std::string   expression;
      std::size_t   max_len    = 4;
      bool          oracle     = false;
      std::uint64_t seed       = 1;
      std::size_t   random_n   = 0;
      std::size_t   n          = 0;

      CompletionConfig completion() const {
        CompletionConfig c;
        c.max_word_degree           = max_deg;
        c.workers                   = workers;
        c.compositions.strict_type1 = strict;
        c.record_events             = false;
        return c;
      }
    };

    Presentation load(Options const& o, std::ostream& err) {
      std::vector<std::string> warnings;
      Presentation             p = parse_presentation(read_file(o.file), &warnings);
      for (auto const& w : warnings) {
        err << "warning: " << w << "\n";
      }
      return p;
    }

    int status_code(CompletionResult const& r) {
      return r.status == CompletionStatus::complete ? 0 : 2;
    }

    void add_completion_flags(CLI::App* sub, Options& o) {
      sub->add_option("--max-deg", o.max_deg, "cap on composition word length (0: 2|X|)");
      sub->add_flag("--strict-type1", o.strict, "require lcm != <AB> for type I compositions");
      sub->add_option("--workers", o.workers, "worker threads")->check(CLI::Range(1U, 256U));
    }

    int cmd_complete(Options const& o, std::ostream& out, std::ostream& err) {
      Presentation const p  = load(o, err);
      auto const         rc = complete_and_reduce(p, o.completion());
      auto const&        st = rc.raw.stats;
      if (o.format == "json") {
        nlohmann::ordered_json j;
        j["status"]       = to_string(rc.raw.status);
        j["degree_bound"] = rc.raw.degree_bound;
        j["basis"]        = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < rc.basis.size(); ++i) {
          j["basis"].push_back({{"leading", rc.basis[i].leading_word().to_string(p.generators)},
                                {"polynomial", rc.basis[i].to_string(p.generators)},
                                {"origin", rc.origins[i]}});
        }
        j["stats"] = {{"input", rc.raw.input_count},   {"examined", st.examined},
                      {"nontrivial", st.nontrivial},   {"adjoined", st.adjoined},
                      {"passes", st.passes},           {"over_cap", st.over_cap},
                      {"completed_size", rc.raw.basis.size()},
                      {"reduced_size", rc.basis.size()}};
        out << j.dump(2) << "\n";
      } else {
        out << "status: " << to_string(rc.raw.status) << "\n";
        out << "degree_bound: " << rc.raw.degree_bound << "\n";
        out << "basis: " << rc.basis.size() << "\n";
        for (std::size_t i = 0; i < rc.basis.size(); ++i) {
          out << "  " << rc.basis[i].to_string(p.generators) << "  # " << rc.origins[i] << "\n";
        }
        out << "stats: input=" << rc.raw.input_count << " examined=" << st.examined
            << " nontrivial=" << st.nontrivial << " adjoined=" << st.adjoined
            << " passes=" << st.passes << " over_cap=" << st.over_cap
            << " completed_size=" << rc.raw.basis.size() << "\n";
      }
      return status_code(rc.raw);
    }

    int cmd_nf(Options const& o, std::ostream& out, std::ostream& err) {
      Presentation const p  = load(o, err);
      Poly const         f  = parse_expression(o.expression, p.generators, p.field);
      auto const         rc = complete_and_reduce(p, o.completion());
      out << normal_form(f, RelationSet(rc.basis)).to_string(p.generators) << "\n";
      return status_code(rc.raw);
    }

    int cmd_irr(Options const& o, std::ostream& out, std::ostream& err) {
      Presentation const p  = load(o, err);
      auto const         rc = complete_and_reduce(p, o.completion());
      auto const         words = irr_up_to(RelationSet(rc.basis), p.rank(), o.max_len);
      for (std::size_t l = 1; l <= o.max_len; ++l) {
        out << l << ":";
        for (auto const& w : words) {
          if (w.length() == l) {
            out << " " << w.to_string(p.generators);
          }
        }
        out << "\n";
      }
      return status_code(rc.raw);
    }

    int cmd_dims(Options const& o, std::ostream& out, std::ostream& err) {
      Presentation const p    = load(o, err);
      auto const         rc   = complete_and_reduce(p, o.completion());
      auto const         dims = irr_counts(RelationSet(rc.basis), p.rank(), o.max_len);
      out << "dims: " << join_sizes(dims, 1) << "\n";
      if (!o.oracle) {
        return status_code(rc.raw);
      }
      OracleConfig oc;
      oc.max_len = o.max_len;
      for (auto const& r : p.relations) {
        oc.degree_bound = std::max(oc.degree_bound, r.leading_word().length());
      }
      auto const orc = oracle_quotient_dims(p.rank(), p.relations, oc);
      out << "oracle: " << join_sizes(orc, 1) << "\n";
      bool const match = orc == dims;
      out << (match ? "MATCH" : "MISMATCH") << "\n";
      return match ? status_code(rc.raw) : 1;
    }

    Graph random_or_file_tree(Options const& o) {
      if (o.random_n != 0) {
        return random_tree(o.random_n, o.seed);
      }
      if (o.file.empty()) {
        throw Error("tree needs a graph file or --random N");
      }
      return parse_graph(read_file(o.file));
    }
  }  // namespace

  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Groebner-Shirshov bases for metabelian Lie algebras", "metalie"};
    app.require_subcommand(1);
    Options o;

    auto* complete = app.add_subcommand("complete", "complete a presentation file");
    complete->add_option("file", o.file, "presentation file ('-' for stdin)")->required();
    complete->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    add_completion_flags(complete, o);

    auto* nf = app.add_subcommand("nf", "normal form of an expression");
    nf->add_option("file", o.file, "presentation file")->required();
    nf->add_option("-e,--expression", o.expression, "expression")->required();
    add_completion_flags(nf, o);

    auto* irr = app.add_subcommand("irr", "irreducible words per length");
    irr->add_option("file", o.file, "presentation file")->required();
    irr->add_option("--max-len", o.max_len, "maximum length");
    add_completion_flags(irr, o);

    auto* dims = app.add_subcommand("dims", "graded dimensions of the quotient");
    dims->add_option("file", o.file, "presentation file")->required();
    dims->add_option("--max-len", o.max_len, "maximum length");
    dims->add_flag("--oracle", o.oracle, "compare against brute-force linear algebra");
    add_completion_flags(dims, o);

    auto* gen = app.add_subcommand("gen", "emit a presentation file");
    gen->require_subcommand(1);
    auto* gen_circuit = gen->add_subcommand("circuit", "circuit on n vertices");
    gen_circuit->add_option("n", o.n)->required();
    auto* gen_cube = gen->add_subcommand("cube", "n-cube");
    gen_cube->add_option("n", o.n)->required();
    auto* gen_tree = gen->add_subcommand("tree", "tree from an adjacency file or at random");
    gen_tree->add_option("file", o.file, "adjacency-list file");
    gen_tree->add_option("--random", o.random_n, "random tree on N vertices");
    gen_tree->add_option("--seed", o.seed, "random seed");

    auto* verify = app.add_subcommand("verify", "check a theorem instance");
    verify->require_subcommand(1);
    add_completion_flags(verify, o);
    auto* ver_circuit = verify->add_subcommand("circuit", "circuit theorem");
    ver_circuit->add_option("n", o.n)->required();
    auto* ver_tree = verify->add_subcommand("tree", "tree theorem");
    ver_tree->add_option("file", o.file, "adjacency-list file");
    ver_tree->add_option("--random", o.random_n, "random tree on N vertices");
    ver_tree->add_option("--seed", o.seed, "random seed");
    auto* ver_cu3 = verify->add_subcommand("cu3", "3-cube");
    auto* ver_cu4 = verify->add_subcommand("cu4", "4-cube relation count");
    for (auto* sub : {ver_circuit, ver_tree, ver_cu3, ver_cu4}) {
      sub->fallthrough();
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      return app.exit(e, out, err);
    }

    try {
      if (complete->parsed()) {
        return cmd_complete(o, out, err);
      }
      if (nf->parsed()) {
        return cmd_nf(o, out, err);
      }
      if (irr->parsed()) {
        return cmd_irr(o, out, err);
      }
      if (dims->parsed()) {
        return cmd_dims(o, out, err);
      }
      if (gen->parsed()) {
        Presentation p;
        if (gen_circuit->parsed()) {
          p = graph_presentation(circuit(o.n));
        } else if (gen_cube->parsed()) {
          p = graph_presentation(cube(o.n));
        } else {
          p = tree_presentation(random_or_file_tree(o), 0);
        }
        out << print_presentation(p);
        return 0;
      }
      VerifyReport rep;
      if (ver_circuit->parsed()) {
        rep = verify_circuit(o.n, o.completion());
      } else if (ver_tree->parsed()) {
        rep = verify_tree(random_or_file_tree(o), o.completion());
      } else if (ver_cu3->parsed()) {
        rep = verify_cu3(o.completion());
      } else if (ver_cu4->parsed()) {
        rep = verify_cu4();
      }
      out << rep.text;
      return rep.pass ? 0 : 1;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << "\n";
      return 1;
    }
  }

}  // namespace metalie
