#include "mser/sparql.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace mser {

UnsupportedFeature::UnsupportedFeature(std::string feature, std::size_t line)
    : Error("unsupported SPARQL feature '" + feature + "' at line " + std::to_string(line)),
      feature_(std::move(feature)) {}

namespace {

struct Token {
  enum class Type { Word, Iri, Prefixed, Var, Punct, End };
  Type type = Type::End;
  std::string text;
  std::size_t line = 1, col = 1;
};

std::string upper(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

const std::set<std::string> kUnsupportedKeywords = {
    "OPTIONAL", "FILTER", "UNION", "MINUS", "GRAPH", "BIND", "VALUES", "SERVICE", "ASK",
    "CONSTRUCT", "DESCRIBE", "ORDER", "LIMIT", "OFFSET", "GROUP", "HAVING", "FROM", "REDUCED"};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : src_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip();
      Token t;
      t.line = line_;
      t.col = col_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (c == '<') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != '>' && src_[pos_] != '\n') step();
        if (pos_ >= src_.size() || src_[pos_] != '>') throw SyntaxError(t.line, t.col, "unterminated IRI");
        step();
        t.type = Token::Type::Iri;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (c == '?' || c == '$') {
        step();
        std::size_t start = pos_;
        while (pos_ < src_.size() && word_char(src_[pos_])) step();
        if (pos_ == start) throw UnsupportedFeature("property paths", t.line);
        t.type = Token::Type::Var;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (c == '"' || c == '\'' || std::isdigit(static_cast<unsigned char>(c))) {
        throw UnsupportedFeature("literals", t.line);
      } else if (c == '_' && pos_ + 1 < src_.size() && src_[pos_ + 1] == ':') {
        throw UnsupportedFeature("blank nodes", t.line);
      } else if (c == '[') {
        throw UnsupportedFeature("blank nodes", t.line);
      } else if (c == '(' || c == ')') {
        throw UnsupportedFeature("collections and expressions", t.line);
      } else if (c == '/' || c == '|' || c == '^' || c == '+') {
        throw UnsupportedFeature("property paths", t.line);
      } else if (c == '{' || c == '}' || c == '.' || c == ';' || c == ',' || c == '*') {
        step();
        t.type = Token::Type::Punct;
        t.text = std::string(1, c);
      } else if (word_char(c) || c == ':') {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (word_char(src_[pos_]) || src_[pos_] == ':' ||
                                      (src_[pos_] == '.' && pos_ + 1 < src_.size() && word_char(src_[pos_ + 1]))))
          step();
        t.text = std::string(src_.substr(start, pos_ - start));
        t.type = t.text.find(':') == std::string::npos ? Token::Type::Word : Token::Type::Prefixed;
      } else {
        throw SyntaxError(t.line, t.col, std::string("unexpected character '") + c + "'");
      }
      out.push_back(std::move(t));
    }
  }

 private:
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  void step() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') step();
      } else if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        step();
      } else {
        return;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  SparqlQuery run() {
    SparqlQuery q;
    q.prefixes = standard_prefixes();
    while (keyword("PREFIX")) {
      next();
      const Token& name = expect(Token::Type::Prefixed, "prefix name");
      if (name.text.back() != ':') fail(name, "prefix name must end with ':'");
      const Token& iri = expect(Token::Type::Iri, "IRI");
      q.prefixes[name.text.substr(0, name.text.size() - 1)] = iri.text.substr(1, iri.text.size() - 2);
    }
    if (keyword("BASE")) throw UnsupportedFeature("BASE", peek().line);
    if (!keyword("SELECT")) {
      if (peek().type == Token::Type::Word && kUnsupportedKeywords.count(upper(peek().text)))
        throw UnsupportedFeature(upper(peek().text), peek().line);
      fail(peek(), "expected SELECT");
    }
    next();
    if (keyword("DISTINCT")) next();
    if (keyword("REDUCED")) throw UnsupportedFeature("REDUCED", peek().line);

    bool star = false;
    std::vector<std::string> projection;
    if (punct("*")) {
      next();
      star = true;
    } else {
      while (peek().type == Token::Type::Var) projection.push_back(next().text);
      if (projection.empty()) fail(peek(), "expected projection variables or '*'");
    }
    if (keyword("FROM")) throw UnsupportedFeature("FROM", peek().line);
    if (keyword("WHERE")) next();
    if (!punct("{")) fail(peek(), "expected '{'");
    next();
    prefixes_ = &q.prefixes;
    parse_bgp(q.patterns);
    if (!punct("}")) fail(peek(), "expected '}'");
    std::size_t close_line = peek().line, close_col = peek().col;
    next();
    if (peek().type != Token::Type::End) {
      if (peek().type == Token::Type::Word && kUnsupportedKeywords.count(upper(peek().text)))
        throw UnsupportedFeature(upper(peek().text), peek().line);
      fail(peek(), "trailing input after query");
    }
    if (q.patterns.empty()) throw SyntaxError(close_line, close_col, "empty WHERE clause");

    if (star) {
      std::set<std::string> seen;
      for (const auto& t : q.patterns)
        for (const auto* term : {&t.s, &t.p, &t.o})
          if (term->is_variable() && seen.insert(term->value).second) q.answer_vars.push_back(term->value);
    } else {
      q.answer_vars = std::move(projection);
    }
    return q;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& what) { throw SyntaxError(t.line, t.col, what); }

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool keyword(std::string_view kw) const {
    return peek().type == Token::Type::Word && upper(peek().text) == kw;
  }
  bool punct(std::string_view p) const { return peek().type == Token::Type::Punct && peek().text == p; }

  const Token& expect(Token::Type type, const std::string& what) {
    if (peek().type != type) fail(peek(), "expected " + what);
    return next();
  }

  SparqlTerm term(bool predicate_position) {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Var:
        next();
        return SparqlTerm::variable(t.text);
      case Token::Type::Iri:
      case Token::Type::Prefixed: {
        next();
        return SparqlTerm::iri(canonical_entity(intern(t.text, *prefixes_).iri).iri);
      }
      case Token::Type::Word:
        if (predicate_position && t.text == "a") {
          next();
          return SparqlTerm::iri(std::string(vocab::kRdf) + "type");
        }
        if (kUnsupportedKeywords.count(upper(t.text))) throw UnsupportedFeature(upper(t.text), t.line);
        if (t.text == "true" || t.text == "false") throw UnsupportedFeature("literals", t.line);
        fail(t, "unexpected '" + t.text + "'");
      default:
        if (punct("{")) throw UnsupportedFeature("nested groups", t.line);
        if (predicate_position && punct("*")) throw UnsupportedFeature("property paths", t.line);
        fail(t, "expected a term");
    }
  }

  void parse_bgp(std::vector<TriplePattern>& out) {
    while (!punct("}") && peek().type != Token::Type::End) {
      SparqlTerm s = term(false);
      for (;;) {
        SparqlTerm p = term(true);
        if (punct("*")) throw UnsupportedFeature("property paths", peek().line);
        for (;;) {
          out.push_back({s, p, term(false)});
          if (!punct(",")) break;
          next();
        }
        if (!punct(";")) break;
        next();
        if (punct(".") || punct("}")) break;  // trailing ';'
      }
      if (punct(".")) {
        next();
      } else if (!punct("}")) {
        if (peek().type == Token::Type::Word && kUnsupportedKeywords.count(upper(peek().text)))
          throw UnsupportedFeature(upper(peek().text), peek().line);
        fail(peek(), "expected '.' or '}'");
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const PrefixMap* prefixes_ = nullptr;
};

bool in_namespace(const std::string& iri, std::string_view ns) { return iri.rfind(ns, 0) == 0; }

}  // namespace

SparqlQuery parse_query(std::string_view text) { return Parser(Lexer(text).run()).run(); }

std::string datalog_variable(std::string_view sparql_name) {
  std::string v(sparql_name);
  if (!v.empty()) v[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(v[0])));
  if (v.empty() || !std::isupper(static_cast<unsigned char>(v[0]))) v = "V" + v;
  return v;
}

TranslatedQuery translate_query(const SparqlQuery& q) {
  std::map<std::string, std::string> names;
  std::set<std::string> taken;
  auto var = [&](const std::string& sparql) {
    auto it = names.find(sparql);
    if (it != names.end()) return it->second;
    std::string base = datalog_variable(sparql), v = base;
    for (int k = 2; taken.count(v); ++k) v = base + "_" + std::to_string(k);
    taken.insert(v);
    return names[sparql] = v;
  };
  auto term = [&](const SparqlTerm& t) { return t.is_variable() ? Term::variable(var(t.value)) : Term::constant(t.value); };

  const std::string rdf_type = std::string(vocab::kRdf) + "type";
  std::vector<Atom> body;
  for (const auto& tp : q.patterns) {
    Term s = term(tp.s), o = term(tp.o);
    if (tp.p.is_variable()) {
      body.push_back(Atom("instr", {term(tp.p), s, o}));
      continue;
    }
    const std::string& p = tp.p.value;
    if (p == rdf_type) {
      body.push_back(Atom("instc", {o, s}));
    } else if (in_namespace(p, vocab::kRdfs)) {
      std::string local = lower(p.substr(vocab::kRdfs.size()));
      if (local == "subclassof") body.push_back(Atom("isacCC", {s, o}));
      else if (local == "subpropertyof") body.push_back(Atom("isarRR", {s, o}));
      else throw UnsupportedFeature(p, 0);
    } else if (p == std::string(vocab::kOwl) + "disjointWith") {
      body.push_back(Atom("disjcCC", {s, o}));
    } else if (p == std::string(vocab::kOwl) + "propertyDisjointWith") {
      body.push_back(Atom("disjrRR", {s, o}));
    } else if (p == std::string(vocab::kOwl) + "differentFrom") {
      body.push_back(Atom("diff", {s, o}));
    } else if (in_namespace(p, vocab::kRdf) || in_namespace(p, vocab::kOwl) ||
               in_namespace(p, vocab::kXsd)) {
      throw UnsupportedFeature(p, 0);
    } else {
      body.push_back(Atom("instr", {Term::constant(p), s, o}));
    }
  }

  TranslatedQuery out;
  std::vector<Term> head;
  for (const auto& v : q.answer_vars) {
    bool present = std::any_of(q.patterns.begin(), q.patterns.end(), [&](const TriplePattern& t) {
      return (t.s.is_variable() && t.s.value == v) || (t.p.is_variable() && t.p.value == v) ||
             (t.o.is_variable() && t.o.value == v);
    });
    if (!present) throw UnsafeQuery("answer variable ?" + v + " does not occur in the WHERE clause");
    head.push_back(Term::variable(var(v)));
    out.cq.answer_vars.push_back(head.back().value);
  }
  out.query = Atom("q", head);
  out.rule = Rule{out.query, body};
  out.cq.body = std::move(body);
  check_query(out.cq);
  return out;
}

}  // namespace mser
