#include <cctype>
#include <fstream>
#include <sstream>

#include "mser/ontology.hpp"

namespace mser {

SyntaxError::SyntaxError(std::size_t line, std::size_t col, const std::string& what)
    : Error("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) +
            ": " + what),
      line_(line),
      col_(col) {}

UnsupportedAxiom::UnsupportedAxiom(std::string keyword, std::size_t line, const std::string& detail)
    : Error("unsupported construct '" + keyword + "' at line " + std::to_string(line) +
            (detail.empty() ? std::string() : ": " + detail)),
      keyword_(std::move(keyword)) {}

void Ontology::add(Axiom a) {
  if (is_abox(a))
    abox.insert(std::move(a));
  else
    tbox.insert(std::move(a));
}

namespace {

struct Node {
  enum class Type { Call, Iri, Name, String };
  Type type;
  std::string text;  // keyword for calls, lexeme otherwise
  std::vector<Node> args;
  std::size_t line = 0, col = 0;

  bool is_call(std::string_view kw) const { return type == Type::Call && text == kw; }
};

class Reader {
 public:
  explicit Reader(std::string_view text) : src_(text) {}

  std::vector<Node> read_all() {
    std::vector<Node> out;
    skip_space();
    while (pos_ < src_.size()) {
      out.push_back(read_node());
      skip_space();
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(line_, col_, what); }

  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  static bool name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != '<' &&
           c != '>' && c != '"' && c != '=' && c != '\0';
  }

  Node read_node() {
    Node n;
    n.line = line_;
    n.col = col_;
    char c = peek();
    if (c == '<') {
      advance();
      std::size_t start = pos_;
      while (pos_ < src_.size() && src_[pos_] != '>') {
        if (src_[pos_] == '\n') fail("unterminated IRI");
        advance();
      }
      if (pos_ >= src_.size()) fail("unterminated IRI");
      n.type = Node::Type::Iri;
      n.text = "<" + std::string(src_.substr(start, pos_ - start)) + ">";
      advance();
      return n;
    }
    if (c == '"') {
      advance();
      std::string s;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) advance();
        s.push_back(src_[pos_]);
        advance();
      }
      if (pos_ >= src_.size()) fail("unterminated string");
      advance();
      // language tag or datatype suffix
      if (peek() == '@') {
        while (name_char(peek())) advance();
      } else if (peek() == '^' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '^') {
        advance();
        advance();
        skip_space();
        read_node();
      }
      n.type = Node::Type::String;
      n.text = std::move(s);
      return n;
    }
    if (c == '(' || c == ')' || c == '=') fail(std::string("unexpected '") + c + "'");
    std::size_t start = pos_;
    while (name_char(peek())) advance();
    n.text = std::string(src_.substr(start, pos_ - start));
    skip_space();
    if (peek() == '(') {
      n.type = Node::Type::Call;
      advance();
      skip_space();
      if (n.text == "Prefix") return read_prefix(std::move(n));
      while (peek() != ')') {
        if (pos_ >= src_.size()) fail("missing ')' for " + n.text);
        n.args.push_back(read_node());
        skip_space();
      }
      advance();
      return n;
    }
    n.type = Node::Type::Name;
    return n;
  }

  // Prefix(name:=<iri>) with the '=' glued to the name.
  Node read_prefix(Node n) {
    Node name;
    name.type = Node::Type::Name;
    name.line = line_;
    name.col = col_;
    std::size_t start = pos_;
    while (name_char(peek())) advance();
    name.text = std::string(src_.substr(start, pos_ - start));
    skip_space();
    if (peek() != '=') fail("expected '=' in Prefix declaration");
    advance();
    skip_space();
    if (peek() != '<') fail("expected IRI in Prefix declaration");
    Node iri = read_node();
    skip_space();
    if (peek() != ')') fail("expected ')' after Prefix declaration");
    advance();
    n.args.push_back(std::move(name));
    n.args.push_back(std::move(iri));
    return n;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

bool ignored_axiom(std::string_view kw) {
  return kw == "Declaration" || kw == "AnnotationAssertion" || kw == "SubAnnotationPropertyOf" ||
         kw == "AnnotationPropertyDomain" || kw == "AnnotationPropertyRange";
}

class Builder {
 public:
  explicit Builder(Ontology& o) : o_(o) {}

  void axiom(const Node& n) {
    if (n.type != Node::Type::Call) throw SyntaxError(n.line, n.col, "expected an axiom, got '" + n.text + "'");
    if (ignored_axiom(n.text)) return;
    if (n.text == "Import") throw UnsupportedAxiom("Import", n.line, "imports are not supported");
    if (n.text == "Annotation") return;

    auto args = logical_args(n);
    const auto& kw = n.text;
    if (kw == "SubClassOf") {
      arity(n, args, 2);
      auto sub = basic_class(*args[0], kw);
      sub_super(sub, *args[1]);
    } else if (kw == "EquivalentClasses") {
      min_arity(n, args, 2);
      std::vector<ClassExpr> cs;
      for (auto* a : args) cs.push_back(basic_class(*a, kw));
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) {
          o_.add(ax::ClassInclusion{cs[i], cs[j]});
          o_.add(ax::ClassInclusion{cs[j], cs[i]});
        }
    } else if (kw == "DisjointClasses") {
      min_arity(n, args, 2);
      std::vector<ClassExpr> cs;
      for (auto* a : args) cs.push_back(basic_class(*a, kw));
      for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j) o_.add(ax::ClassDisjoint{cs[i], cs[j]});
    } else if (kw == "SubObjectPropertyOf") {
      arity(n, args, 2);
      o_.add(ax::PropInclusion{prop(*args[0]), prop(*args[1])});
    } else if (kw == "EquivalentObjectProperties") {
      min_arity(n, args, 2);
      std::vector<PropExpr> ps;
      for (auto* a : args) ps.push_back(prop(*a));
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          o_.add(ax::PropInclusion{ps[i], ps[j]});
          o_.add(ax::PropInclusion{ps[j], ps[i]});
        }
    } else if (kw == "DisjointObjectProperties") {
      min_arity(n, args, 2);
      std::vector<PropExpr> ps;
      for (auto* a : args) ps.push_back(prop(*a));
      for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = i + 1; j < ps.size(); ++j) o_.add(ax::PropDisjoint{ps[i], ps[j]});
    } else if (kw == "InverseObjectProperties") {
      arity(n, args, 2);
      auto p = prop(*args[0]), q = prop(*args[1]);
      o_.add(ax::PropInclusion{p, q.inverted()});
      o_.add(ax::PropInclusion{q, p.inverted()});
    } else if (kw == "ObjectPropertyDomain") {
      arity(n, args, 2);
      sub_super(ClassExpr::exists(prop(*args[0])), *args[1]);
    } else if (kw == "ObjectPropertyRange") {
      arity(n, args, 2);
      sub_super(ClassExpr::exists(prop(*args[0]).inverted()), *args[1]);
    } else if (kw == "ReflexiveObjectProperty") {
      arity(n, args, 1);
      o_.add(ax::Reflexive{prop(*args[0]).prop});
    } else if (kw == "IrreflexiveObjectProperty") {
      arity(n, args, 1);
      o_.add(ax::Irreflexive{prop(*args[0]).prop});
    } else if (kw == "ClassAssertion") {
      arity(n, args, 2);
      if (args[0]->type == Node::Type::Call)
        throw UnsupportedAxiom(kw, n.line, "class assertions need an atomic class");
      o_.add(ax::ClassAssertion{entity(*args[0]), individual(*args[1])});
    } else if (kw == "ObjectPropertyAssertion") {
      arity(n, args, 3);
      auto p = prop(*args[0]);
      auto s = individual(*args[1]), t = individual(*args[2]);
      if (p.is_inverse()) std::swap(s, t);
      o_.add(ax::PropAssertion{p.prop, s, t});
    } else if (kw == "DifferentIndividuals") {
      min_arity(n, args, 2);
      std::vector<Entity> is;
      for (auto* a : args) is.push_back(individual(*a));
      for (std::size_t i = 0; i < is.size(); ++i)
        for (std::size_t j = i + 1; j < is.size(); ++j) o_.add(ax::DifferentIndividuals{is[i], is[j]});
    } else {
      throw UnsupportedAxiom(kw, n.line, "outside the supported OWL 2 QL fragment");
    }
  }

  Entity entity(const Node& n) const {
    if (n.type == Node::Type::Iri) return intern(n.text, o_.prefixes);
    if (n.type == Node::Type::Name) {
      if (n.text.starts_with("_:")) throw UnsupportedAxiom("AnonymousIndividual", n.line);
      if (n.text.find(':') == std::string::npos)
        throw SyntaxError(n.line, n.col, "expected IRI or prefixed name, got '" + n.text + "'");
      return intern(n.text, o_.prefixes);
    }
    if (n.type == Node::Type::String) throw UnsupportedAxiom("Literal", n.line, "literals are not supported");
    throw UnsupportedAxiom(n.text, n.line, "expected a named entity");
  }

 private:
  static std::vector<const Node*> logical_args(const Node& n) {
    std::vector<const Node*> out;
    for (const auto& a : n.args)
      if (!a.is_call("Annotation")) out.push_back(&a);
    return out;
  }

  static void arity(const Node& n, const std::vector<const Node*>& args, std::size_t k) {
    if (args.size() != k)
      throw SyntaxError(n.line, n.col,
                        n.text + " expects " + std::to_string(k) + " arguments, got " + std::to_string(args.size()));
  }
  static void min_arity(const Node& n, const std::vector<const Node*>& args, std::size_t k) {
    if (args.size() < k)
      throw SyntaxError(n.line, n.col, n.text + " expects at least " + std::to_string(k) + " arguments");
  }

  Entity individual(const Node& n) const { return entity(n); }

  PropExpr prop(const Node& n) const {
    if (n.is_call("ObjectInverseOf")) {
      if (n.args.size() != 1) throw SyntaxError(n.line, n.col, "ObjectInverseOf expects 1 argument");
      return prop(n.args[0]).inverted();
    }
    if (n.type == Node::Type::Call)
      throw UnsupportedAxiom(n.text, n.line, "expected an object property expression");
    return PropExpr::direct(entity(n));
  }

  ClassExpr class_expr(const Node& n) const {
    if (n.is_call("ObjectSomeValuesFrom")) {
      if (n.args.size() != 2) throw SyntaxError(n.line, n.col, "ObjectSomeValuesFrom expects 2 arguments");
      if (n.args[1].type == Node::Type::Call)
        throw UnsupportedAxiom("ObjectSomeValuesFrom", n.line, "filler must be a named class");
      return ClassExpr::some(prop(n.args[0]), entity(n.args[1]));
    }
    if (n.type == Node::Type::Call) throw UnsupportedAxiom(n.text, n.line);
    return ClassExpr::atomic(entity(n));
  }

  ClassExpr basic_class(const Node& n, const std::string& ctx) const {
    auto c = class_expr(n);
    if (!c.is_basic())
      throw UnsupportedAxiom(ctx, n.line, "qualified existential not allowed in this position");
    return c;
  }

  void sub_super(const ClassExpr& sub, const Node& super) {
    if (super.is_call("ObjectComplementOf")) {
      if (super.args.size() != 1) throw SyntaxError(super.line, super.col, "ObjectComplementOf expects 1 argument");
      o_.add(ax::ClassDisjoint{sub, basic_class(super.args[0], "ObjectComplementOf")});
      return;
    }
    o_.add(ax::ClassInclusion{sub, class_expr(super)});
  }

  Ontology& o_;
};

}  // namespace

Ontology parse_ontology(std::string_view text) {
  Ontology o;
  o.prefixes = standard_prefixes();
  auto nodes = Reader(text).read_all();
  bool seen_ontology = false;
  for (const auto& n : nodes) {
    if (n.is_call("Prefix")) {
      if (seen_ontology) throw SyntaxError(n.line, n.col, "Prefix after Ontology");
      auto name = n.args[0].text;
      if (!name.ends_with(':')) throw SyntaxError(n.line, n.col, "prefix name must end with ':'");
      name.pop_back();
      const auto& iri = n.args[1].text;
      o.prefixes[name] = iri.substr(1, iri.size() - 2);
    } else if (n.is_call("Ontology")) {
      if (seen_ontology) throw SyntaxError(n.line, n.col, "more than one Ontology block");
      seen_ontology = true;
      Builder b(o);
      std::size_t i = 0;
      // ontology IRI and version IRI
      while (i < n.args.size() && n.args[i].type != Node::Type::Call) {
        if (i == 0) o.iri = b.entity(n.args[i]).iri;
        if (i >= 2) throw SyntaxError(n.args[i].line, n.args[i].col, "unexpected '" + n.args[i].text + "'");
        ++i;
      }
      for (; i < n.args.size(); ++i) b.axiom(n.args[i]);
    } else {
      throw SyntaxError(n.line, n.col, "expected Prefix(...) or Ontology(...), got '" + n.text + "'");
    }
  }
  if (!seen_ontology) throw SyntaxError(1, 1, "missing Ontology(...) block");
  return o;
}

Ontology load_ontology(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ontology(ss.str());
}

}  // namespace mser
