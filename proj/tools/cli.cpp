#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pt/corpus.hpp"
#include "pt/oracle.hpp"
#include "pt/parser.hpp"
#include "pt/presupposition.hpp"
#include "pt/serialize.hpp"
#include "pt/tableau.hpp"

namespace ptab {

  namespace {

    using namespace pt;

    enum class Format { Text, Json };

    struct Options {
      std::string input;
      std::string rules = "pt";
      std::string format;
      std::size_t max_atoms = 12;
      std::size_t max_branches = 1'000'000;
      bool cross_check = false;
      bool valid = false;
      bool sat = false;
      std::string target;
      std::string path;
    };

    // Failure that maps directly onto an exit code.
    struct Exit {
      int code;
      std::string message;
    };

    Format format_of(const Options& o) {
      std::string f = o.format;
      if (f.empty()) {
        const char* env = std::getenv("PTAB_FORMAT");
        f = env ? env : "text";
      }
      if (f == "json") return Format::Json;
      if (f == "text") return Format::Text;
      throw Exit{Usage, "unknown format \"" + f + "\" (expected text or json)"};
    }

    RuleSet rules_of(const Options& o) { return o.rules == "st" ? RuleSet::ST : RuleSet::PT; }

    ExpansionLimits limits_of(const Options& o) { return {o.max_branches}; }

    std::string read_input(const std::string& text, std::istream& in) {
      if (text != "-") return text;
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }

    void check_atoms(const std::vector<Formula>& fs, const Options& o) {
      std::set<AtomId> atoms;
      for (const auto& f : fs) {
        auto a = atoms_of(f);
        atoms.insert(a.begin(), a.end());
      }
      if (atoms.size() > o.max_atoms)
        throw Exit{Resource, "input has " + std::to_string(atoms.size()) + " atoms, more than --max-atoms " +
                                 std::to_string(o.max_atoms)};
    }

    Discourse load_discourse(const Options& o, std::istream& in) {
      auto d = parse_discourse(read_input(o.input, in));
      check_atoms(d.formulas, o);
      return d;
    }

    void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

    // -------------------------------------------------------------------------

    int cmd_parse(const Options& o, std::istream& in, std::ostream& out) {
      auto d = parse_discourse(read_input(o.input, in));
      if (format_of(o) == Format::Json) {
        print(out, to_json(d));
      } else {
        for (const auto& f : d.formulas) out << render(f, d.presup_map) << "\n";
      }
      return Ok;
    }

    int cmd_tableau(const Options& o, std::istream& in, std::ostream& out) {
      auto d = load_discourse(o, in);
      auto t = discourse_tableau(d, rules_of(o), limits_of(o));
      if (format_of(o) == Format::Json)
        print(out, to_json(t));
      else
        out << render_text(t);
      return t.is_closed() ? Closed : Ok;
    }

    int cmd_presup(const Options& o, std::istream& in, std::ostream& out) {
      auto d = load_discourse(o, in);
      auto report = discourse_presuppositions(d, rules_of(o), limits_of(o));
      if (format_of(o) == Format::Json)
        print(out, to_json(report));
      else
        out << render_text(report);
      return report.consistent ? Ok : Inconsistent;
    }

    int cmd_decide(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
      if (o.valid == o.sat) throw Exit{Usage, "decide needs exactly one of --valid or --sat"};
      auto parsed = parse_formula(read_input(o.input, in));
      check_atoms({parsed.formula}, o);

      // Validity is refutation of the negation; satisfiability is openness.
      const Formula probe = o.valid ? Formula::negation(parsed.formula) : parsed.formula;
      auto verdict_of = [&](bool closed) { return o.valid ? closed : !closed; };
      const bool pt = verdict_of(expand(probe, {}, RuleSet::PT, limits_of(o)).is_closed());

      Json j = Json::object();
      j["mode"] = o.valid ? "valid" : "sat";
      j["verdict"] = pt;
      bool agree = true;
      if (o.cross_check) {
        const bool st = verdict_of(expand(probe, {}, RuleSet::ST, limits_of(o)).is_closed());
        const bool oracle = o.valid ? is_valid(parsed.formula, {o.max_atoms}) : is_satisfiable({parsed.formula}, {o.max_atoms});
        agree = pt == st && st == oracle;
        j["pt"] = pt;
        j["st"] = st;
        j["oracle"] = oracle;
        j["agree"] = agree;
      }

      const std::string word = o.valid ? (pt ? "valid" : "not valid") : (pt ? "satisfiable" : "unsatisfiable");
      if (format_of(o) == Format::Json) {
        print(out, j);
      } else {
        out << word << "\n";
        if (o.cross_check) {
          auto yn = [&](bool v) { return o.valid ? (v ? "valid" : "not valid") : (v ? "satisfiable" : "unsatisfiable"); };
          out << "pt: " << yn(j["pt"]) << ", st: " << yn(j["st"]) << ", oracle: " << yn(j["oracle"]) << "\n";
          out << (agree ? "all engines agree" : "ENGINES DISAGREE") << "\n";
        }
      }
      if (!agree) {
        err << "error: decision procedures disagree\n";
        return Disagreement;
      }
      return pt ? Ok : Closed;
    }

    int cmd_status(const Options& o, std::istream& in, std::ostream& out) {
      auto d = load_discourse(o, in);
      Literal phi = [&] {
        try {
          return parse_literal(o.target);
        } catch (const std::invalid_argument& e) {
          throw Exit{Usage, e.what()};
        }
      }();
      auto t = discourse_tableau(d, rules_of(o), limits_of(o));
      if (t.is_closed()) throw Exit{Inconsistent, "inconsistent: every branch is closed"};
      auto s = classify_status(t, phi);
      if (format_of(o) == Format::Json)
        print(out, to_json(s, phi));
      else
        out << to_string(s.status) << "\n";
      return Ok;
    }

    int cmd_corpus(const Options& o, std::ostream& out) {
      std::ifstream file(o.path);
      if (!file) throw Exit{Usage, "cannot read corpus file " + o.path};
      std::ostringstream ss;
      ss << file.rdbuf();
      auto entries = parse_corpus(ss.str());
      for (const auto& e : entries) check_atoms(e.input.formulas, o);
      auto results = run_corpus(entries, limits_of(o));

      std::size_t passed = 0;
      for (const auto& r : results) passed += r.pass;
      if (format_of(o) == Format::Json) {
        Json j = Json::object();
        j["entries"] = Json::array();
        for (const auto& r : results) {
          Json e = {{"label", r.label},
                    {"pass", r.pass},
                    {"consistent", r.consistent},
                    {"expected", to_json(r.expected)},
                    {"actual", to_json(r.actual)}};
          e["statuses"] = Json::array();
          for (const auto& s : r.statuses) {
            e["statuses"].push_back({{"target", to_string(s.target)},
                                     {"expected", to_string(s.expected)},
                                     {"actual", s.actual ? Json(to_string(*s.actual)) : Json(nullptr)}});
          }
          if (!r.pass) e["message"] = r.message;
          j["entries"].push_back(std::move(e));
        }
        j["passed"] = passed;
        j["total"] = results.size();
        print(out, j);
      } else {
        for (const auto& r : results) {
          out << (r.pass ? "PASS  " : "FAIL  ") << r.label;
          if (!r.pass) out << ": " << r.message;
          out << "\n";
        }
        out << passed << "/" << results.size() << " entries passed\n";
      }
      return passed == results.size() ? Ok : CorpusFailure;
    }

    int cmd_oracle(const Options& o, std::istream& in, std::ostream& out) {
      auto d = load_discourse(o, in);
      std::set<AtomId> universe;
      for (const auto& f : d.formulas) {
        auto a = atoms_of(f);
        universe.insert(a.begin(), a.end());
      }
      auto models = enumerate_models(d.formulas, universe, {o.max_atoms});
      if (format_of(o) == Format::Json) {
        Json j = Json::object();
        j["universe"] = Json::array();
        for (const auto& a : universe) j["universe"].push_back(a.name());
        j["models"] = Json::array();
        for (const auto& m : models) j["models"].push_back(to_json(m));
        print(out, j);
      } else {
        for (const auto& a : universe) out << a.name() << " ";
        out << "\n";
        for (const auto& m : models) {
          for (const auto& [atom, v] : m) out << std::string(atom.name().size() - 1, ' ') << (v ? "T" : "F") << " ";
          out << "\n";
        }
        out << models.size() << (models.size() == 1 ? " model" : " models") << "\n";
      }
      return models.empty() ? Closed : Ok;
    }

    void add_common(CLI::App* sub, Options& o, bool with_rules, bool with_limits) {
      sub->add_option("--format", o.format, "Output format: text or json (default $PTAB_FORMAT or text)")
          ->check(CLI::IsMember({"text", "json"}));
      if (with_rules) sub->add_option("--rules", o.rules, "Rule set: pt or st")->check(CLI::IsMember({"pt", "st"}));
      if (with_limits) {
        sub->add_option("--max-atoms", o.max_atoms, "Atom-count cap")->check(CLI::PositiveNumber);
        sub->add_option("--max-branches", o.max_branches, "Branch cap")->check(CLI::PositiveNumber);
      }
    }

  }  // namespace

  int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Presuppositional tableaux for propositional logic", "ptab"};
    app.require_subcommand(1);
    Options o;

    auto* parse = app.add_subcommand("parse", "Parse a formula or discourse and print it back");
    parse->add_option("input", o.input, "Formula or discourse text (\"-\" for stdin)")->required();
    add_common(parse, o, false, false);

    auto* tableau = app.add_subcommand("tableau", "Expand a formula or discourse into a tableau");
    tableau->add_option("input", o.input, "Formula or discourse text (\"-\" for stdin)")->required();
    add_common(tableau, o, true, true);

    auto* presup = app.add_subcommand("presup", "Compute the presuppositions of a formula or discourse");
    presup->add_option("input", o.input, "Formula or discourse text (\"-\" for stdin)")->required();
    add_common(presup, o, true, true);

    auto* decide = app.add_subcommand("decide", "Decide validity or satisfiability with the PT tableau");
    decide->add_option("input", o.input, "Formula text (\"-\" for stdin)")->required();
    decide->add_flag("--valid", o.valid, "Decide validity");
    decide->add_flag("--sat", o.sat, "Decide satisfiability");
    decide->add_flag("--cross-check", o.cross_check, "Also run the ST tableau and the truth-table oracle");
    add_common(decide, o, false, true);

    auto* status = app.add_subcommand("status", "Classify a presupposition as satisfied, canceled, hybrid or independent");
    status->add_option("input", o.input, "Discourse text (\"-\" for stdin)")->required();
    status->add_option("target", o.target, "Presupposed literal, e.g. b or ~b")->required();
    add_common(status, o, true, true);

    auto* corpus = app.add_subcommand("corpus", "Run a golden corpus file");
    corpus->add_option("path", o.path, "Corpus file")->required();
    add_common(corpus, o, false, true);

    auto* oracle = app.add_subcommand("oracle", "Enumerate the models of a formula or discourse by truth table");
    oracle->add_option("input", o.input, "Formula or discourse text (\"-\" for stdin)")->required();
    add_common(oracle, o, false, true);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return Ok;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return Ok;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << "\n";
      return Usage;
    }

    try {
      if (parse->parsed()) return cmd_parse(o, in, out);
      if (tableau->parsed()) return cmd_tableau(o, in, out);
      if (presup->parsed()) return cmd_presup(o, in, out);
      if (decide->parsed()) return cmd_decide(o, in, out, err);
      if (status->parsed()) return cmd_status(o, in, out);
      if (corpus->parsed()) return cmd_corpus(o, out);
      if (oracle->parsed()) return cmd_oracle(o, in, out);
    } catch (const Exit& e) {
      err << "error: " << e.message << "\n";
      return e.code;
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return Usage;
    } catch (const CorpusFormatError& e) {
      err << "corpus error: " << e.what() << "\n";
      return Usage;
    } catch (const AnnotationConflict& e) {
      err << "error: " << e.what() << "\n";
      return Usage;
    } catch (const InvalidPresupMap& e) {
      err << "error: " << e.what() << "\n";
      return Usage;
    } catch (const ResourceLimitError& e) {
      err << "error: " << e.what() << "\n";
      return Resource;
    }
    return Usage;
  }

}  // namespace ptab
