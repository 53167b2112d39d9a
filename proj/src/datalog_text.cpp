#include "mser/datalog_text.hpp"

#include <cctype>

#include "mser/ontology.hpp"

namespace mser {

std::string format_term(const Term& t) {
  if (t.is_variable()) return t.value;
  std::string out = "\"";
  for (char c : t.value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_atom(const Atom& a) {
  std::string out = a.pred;
  if (a.args.empty()) return out;
  out.push_back('(');
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out.push_back(',');
    out += format_term(a.args[i]);
  }
  out.push_back(')');
  return out;
}

std::string format_rule(const Rule& r) {
  std::string out = format_atom(r.head);
  if (!r.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < r.body.size(); ++i) {
      if (i) out += ", ";
      out += format_atom(r.body[i]);
    }
  }
  out.push_back('.');
  return out;
}

void write_facts(std::ostream& os, const std::vector<Atom>& facts) {
  for (const auto& f : facts) os << format_atom(f) << ".\n";
}

void write_rules(std::ostream& os, const std::vector<Rule>& rules) {
  for (const auto& r : rules) os << format_rule(r) << "\n";
}

namespace {

class ProgramReader {
 public:
  explicit ProgramReader(std::string_view s) : s_(s) {}

  std::vector<Rule> read() {
    std::vector<Rule> out;
    skip();
    while (pos_ < s_.size()) {
      Rule r;
      r.head = atom();
      skip();
      if (lit(":-")) {
        do {
          skip();
          r.body.push_back(atom());
          skip();
        } while (lit(","));
      }
      expect('.');
      out.push_back(std::move(r));
      skip();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, what);
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (s_[pos_] == '%') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool lit(std::string_view t) {
    if (s_.substr(pos_).starts_with(t)) {
      pos_ += t.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '@'; }

  std::string ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
    if (start == pos_) fail("expected identifier");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term term() {
    skip();
    if (pos_ < s_.size() && s_[pos_] == '"') {
      ++pos_;
      std::string v;
      while (pos_ < s_.size() && s_[pos_] != '"') {
        if (s_[pos_] == '\\' && pos_ + 1 < s_.size()) ++pos_;
        v.push_back(s_[pos_++]);
      }
      if (pos_ >= s_.size()) fail("unterminated string");
      ++pos_;
      return Term::constant(std::move(v));
    }
    auto id = ident();
    if (std::isupper(static_cast<unsigned char>(id[0])) || id[0] == '_') return Term::variable(std::move(id));
    return Term::constant(std::move(id));
  }

  Atom atom() {
    skip();
    auto name = ident();
    std::vector<Term> args;
    skip();
    if (lit("(")) {
      do {
        args.push_back(term());
        skip();
      } while (lit(","));
      expect(')');
    }
    try {
      return Atom(std::move(name), std::move(args));
    } catch (const ArityMismatch& e) {
      fail(e.what());
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Rule> parse_program(std::string_view text) { return ProgramReader(text).read(); }

}  // namespace mser
