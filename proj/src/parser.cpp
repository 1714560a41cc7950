#include "pt/parser.hpp"

#include <cctype>
#include <sstream>

#include "pt/presupposition.hpp"

namespace pt {

  ParseError::ParseError(std::size_t line_, std::size_t column_, const std::string& what) :
      std::runtime_error(std::to_string(line_) + ":" + std::to_string(column_) + ": " + what),
      line(line_),
      column(column_) {}

  CorpusFormatError::CorpusFormatError(std::string label_, std::size_t line_, const std::string& what) :
      std::runtime_error("corpus line " + std::to_string(line_) + (label_.empty() ? "" : " (entry \"" + label_ + "\")") +
                         ": " + what),
      label(std::move(label_)),
      line(line_) {}

  namespace {

    enum class Tok { Ident, Not, And, Or, Implies, LParen, RParen, LBracket, RBracket, Separator, End };

    struct Token {
      Tok kind;
      std::string text;
      std::size_t line, column;
    };

    std::string describe(const Token& t) {
      switch (t.kind) {
        case Tok::Ident: return "identifier \"" + t.text + "\"";
        case Tok::Separator: return t.text == ";" ? "\";\"" : "end of line";
        case Tok::End: return "end of input";
        default: return "\"" + t.text + "\"";
      }
    }

    class Lexer {
    public:
      // With `separators` off, newlines are whitespace and ";" is rejected.
      Lexer(std::string_view src, bool separators) : src_(src), separators_(separators) {}

      std::vector<Token> run() {
        std::vector<Token> res;
        while (true) {
          skip_blank();
          if (pos_ >= src_.size()) break;
          std::size_t l = line_, c = col_;
          char ch = src_[pos_];
          if (ch == '\n') {
            advance(1);
            if (separators_) res.push_back({Tok::Separator, "\n", l, c});
            continue;
          }
          if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
              advance(1);
            res.push_back({Tok::Ident, std::string(src_.substr(start, pos_ - start)), l, c});
            continue;
          }
          if (auto t = symbol()) {
            res.push_back({t->first, t->second, l, c});
            continue;
          }
          throw ParseError(l, c, "unexpected character '" + std::string(1, ch) + "'");
        }
        res.push_back({Tok::End, "", line_, col_});
        return res;
      }

    private:
      std::optional<std::pair<Tok, std::string>> symbol() {
        static const std::pair<std::string_view, Tok> table[] = {
            {"->", Tok::Implies}, {"→", Tok::Implies}, {"~", Tok::Not},      {"¬", Tok::Not},
            {"&", Tok::And},      {"∧", Tok::And},     {"|", Tok::Or},       {"∨", Tok::Or},
            {"(", Tok::LParen},   {")", Tok::RParen},  {"[", Tok::LBracket}, {"]", Tok::RBracket},
            {";", Tok::Separator},
        };
        auto rest = src_.substr(pos_);
        for (const auto& [spelling, kind] : table) {
          if (!rest.starts_with(spelling)) continue;
          if (kind == Tok::Separator && !separators_) return std::nullopt;
          advance(spelling.size());
          return std::pair{kind, std::string(spelling)};
        }
        return std::nullopt;
      }

      void skip_blank() {
        while (pos_ < src_.size()) {
          char ch = src_[pos_];
          if (ch == '#') {
            while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
          } else if (ch == '\n' && separators_) {
            return;
          } else if (std::isspace(static_cast<unsigned char>(ch))) {
            advance(1);
          } else {
            return;
          }
        }
      }

      void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; i++, pos_++) {
          if (src_[pos_] == '\n') {
            line_++;
            col_ = 1;
          } else {
            col_++;
          }
        }
      }

      std::string_view src_;
      bool separators_;
      std::size_t pos_ = 0, line_ = 1, col_ = 1;
    };

    // Recursive descent over the token stream; annotations accumulate in `map`.
    class Parser {
    public:
      explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

      const Token& peek() const { return toks_[pos_]; }
      bool at(Tok k) const { return peek().kind == k; }
      Token take() { return toks_[pos_++]; }

      Token expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what + ", found " + describe(peek()));
        return take();
      }

      [[noreturn]] void fail(const std::string& msg) const { throw ParseError(peek().line, peek().column, msg); }

      Formula formula() { return implication(); }

      PresupMap map;

    private:
      Formula implication() {
        Formula lhs = disjunction();
        if (at(Tok::Implies)) {
          take();
          return Formula::implication(std::move(lhs), implication());
        }
        return lhs;
      }

      Formula disjunction() {
        Formula res = conjunction();
        while (at(Tok::Or)) {
          take();
          res = Formula::disjunction(std::move(res), conjunction());
        }
        return res;
      }

      Formula conjunction() {
        Formula res = negation();
        while (at(Tok::And)) {
          take();
          res = Formula::conjunction(std::move(res), negation());
        }
        return res;
      }

      Formula negation() {
        if (at(Tok::Not)) {
          take();
          return Formula::negation(negation());
        }
        return primary();
      }

      Formula primary() {
        if (at(Tok::LParen)) {
          take();
          Formula f = formula();
          expect(Tok::RParen, "\")\"");
          return f;
        }
        if (!at(Tok::Ident)) fail("expected atom or \"(\", found " + describe(peek()));
        Token name = take();
        AtomId id(name.text);
        if (at(Tok::LBracket)) {
          take();
          Sign sign = Sign::Positive;
          if (at(Tok::Not)) {
            take();
            sign = Sign::Negative;
          }
          Token target = expect(Tok::Ident, "presupposed atom");
          expect(Tok::RBracket, "\"]\"");
          annotate(name, id, Literal{AtomId(target.text), sign});
        }
        return Formula::atom(std::move(id));
      }

      void annotate(const Token& at_tok, const AtomId& id, const Literal& target) {
        try {
          map.annotate(id, target);
        } catch (const AnnotationConflict& e) {
          throw ParseError(at_tok.line, at_tok.column, e.what());
        }
      }

      std::vector<Token> toks_;
      std::size_t pos_ = 0;
    };

    void validate(const PresupMap& m) {
      auto v = validate_presup_map(m);
      if (!v.empty()) throw InvalidPresupMap(std::move(v));
    }

  }  // namespace

  ParsedFormula parse_formula(std::string_view text) {
    Parser p(Lexer(text, false).run());
    Formula f = p.formula();
    p.expect(Tok::End, "end of input");
    validate(p.map);
    return {std::move(f), std::move(p.map)};
  }

  Discourse parse_discourse(std::string_view text) {
    Parser p(Lexer(text, true).run());
    Discourse d;
    while (true) {
      while (p.at(Tok::Separator)) p.take();
      if (p.at(Tok::End)) break;
      d.formulas.push_back(p.formula());
      if (!p.at(Tok::End)) p.expect(Tok::Separator, "\";\" or end of line");
    }
    validate(p.map);
    d.presup_map = std::move(p.map);
    return d;
  }

  // ---------------------------------------------------------------------------

  namespace {

    int precedence(Formula::Kind k) {
      switch (k) {
        case Formula::Kind::Implies: return 1;
        case Formula::Kind::Or: return 2;
        case Formula::Kind::And: return 3;
        case Formula::Kind::Not: return 4;
        case Formula::Kind::Atom: return 5;
      }
      return 0;
    }

    class Renderer {
    public:
      explicit Renderer(const PresupMap& m) : map_(m) {}

      void emit(const Formula& f, std::ostringstream& out) {
        switch (f.kind()) {
          case Formula::Kind::Atom: {
            out << f.atom_id().name();
            if (auto target = map_.lookup(f.atom_id()); target && annotated_.insert(f.atom_id()).second)
              out << "[" << to_string(*target) << "]";
            return;
          }
          case Formula::Kind::Not:
            out << "~";
            child(f.operand(), precedence(f.operand().kind()) < precedence(Formula::Kind::Not), out);
            return;
          default: {
            int p = precedence(f.kind());
            bool right_assoc = f.kind() == Formula::Kind::Implies;
            int lp = precedence(f.lhs().kind()), rp = precedence(f.rhs().kind());
            child(f.lhs(), right_assoc ? lp <= p : lp < p, out);
            out << (f.kind() == Formula::Kind::And ? " & " : f.kind() == Formula::Kind::Or ? " | " : " -> ");
            child(f.rhs(), right_assoc ? rp < p : rp <= p, out);
          }
        }
      }

    private:
      void child(const Formula& f, bool paren, std::ostringstream& out) {
        if (paren) out << "(";
        emit(f, out);
        if (paren) out << ")";
      }

      const PresupMap& map_;
      std::set<AtomId> annotated_;
    };

  }  // namespace

  std::string render(const Formula& f, const PresupMap& m) {
    std::ostringstream out;
    Renderer(m).emit(f, out);
    return out.str();
  }

  std::string render(const Discourse& d) {
    std::ostringstream out;
    Renderer r(d.presup_map);
    for (std::size_t i = 0; i < d.formulas.size(); i++) {
      if (i > 0) out << " ; ";
      r.emit(d.formulas[i], out);
    }
    return out.str();
  }

  // ---------------------------------------------------------------------------

  namespace {

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
      return s;
    }

    struct RawEntry {
      std::vector<std::tuple<std::string, std::string, std::size_t>> fields;   // key, value, line
      std::size_t first_line = 0;
    };

    CorpusEntry build_entry(const RawEntry& raw) {
      std::string label;
      std::optional<Discourse> input;
      std::optional<std::set<Literal>> presups;
      std::vector<std::pair<Literal, PresupStatus>> status;

      for (const auto& [key, value, line] : raw.fields)
        if (key == "label") label = value;

      for (const auto& [key, value, line] : raw.fields) {
        auto fail = [&, l = line](const std::string& msg) -> CorpusFormatError { return {label, l, msg}; };
        try {
          if (key == "label") {
            continue;
          } else if (key == "formula" || key == "discourse") {
            if (input) throw fail("more than one formula/discourse line");
            if (key == "formula") {
              auto pf = parse_formula(value);
              input = Discourse{{std::move(pf.formula)}, std::move(pf.presup_map)};
            } else {
              input = parse_discourse(value);
            }
          } else if (key == "expect-presup") {
            if (presups) throw fail("duplicate expect-presup");
            presups.emplace();
            if (value != "(none)") {
              std::string_view rest = value;
              while (true) {
                auto comma = rest.find(',');
                presups->insert(parse_literal(rest.substr(0, comma)));
                if (comma == std::string_view::npos) break;
                rest.remove_prefix(comma + 1);
              }
            }
          } else if (key == "expect-status") {
            auto eq = value.find('=');
            if (eq == std::string::npos) throw fail("expect-status needs \"<literal> = <status>\"");
            auto name = std::string(trim(std::string_view(value).substr(eq + 1)));
            auto st = parse_status(name);
            if (!st) throw fail("unknown status \"" + name + "\"");
            status.emplace_back(parse_literal(std::string_view(value).substr(0, eq)), *st);
          } else {
            throw fail("unknown key \"" + key + "\"");
          }
        } catch (const CorpusFormatError&) {
          throw;
        } catch (const std::exception& e) {
          throw fail(e.what());
        }
      }

      if (!input) throw CorpusFormatError(label, raw.first_line, "missing formula: or discourse: line");
      if (!presups) throw CorpusFormatError(label, raw.first_line, "missing expect-presup: line");
      std::set<AtomId> targets;
      for (const auto& [src, target] : input->presup_map.entries()) targets.insert(target.atom);
      for (const auto& l : *presups) {
        if (!targets.contains(l.atom))
          throw CorpusFormatError(label, raw.first_line,
                                  "expected presupposition " + to_string(l) + " is not an annotation target");
      }
      return {std::move(label), std::move(*input), std::move(*presups), std::move(status), raw.first_line};
    }

  }  // namespace

  std::vector<CorpusEntry> parse_corpus(std::string_view text) {
    std::vector<RawEntry> raws(1);
    std::size_t line_no = 0;
    while (!text.empty()) {
      auto nl = text.find('\n');
      auto line = text.substr(0, nl);
      text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
      line_no++;

      auto t = trim(line);
      if (t.empty() || t.starts_with('#')) continue;
      if (t == "---") {
        raws.emplace_back();
        continue;
      }
      auto colon = t.find(':');
      if (colon == std::string_view::npos) throw CorpusFormatError("", line_no, "expected \"key: value\"");
      auto& raw = raws.back();
      if (raw.fields.empty()) raw.first_line = line_no;
      raw.fields.emplace_back(std::string(trim(t.substr(0, colon))), std::string(trim(t.substr(colon + 1))), line_no);
    }

    std::vector<CorpusEntry> res;
    for (const auto& raw : raws) {
      if (raw.fields.empty()) continue;
      res.push_back(build_entry(raw));
    }
    return res;
  }

}  // namespace pt
