#include "workspace.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace comatrix::cli {

WorkspaceError::WorkspaceError(const std::string& kind, std::size_t line, std::size_t column,
                               const std::string& message)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + kind + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

const std::vector<std::string>& task_kinds() {
  static const std::vector<std::string> kinds = {"validate", "coring", "endos",        "inv",        "gamma",
                                                 "hat",      "separability", "adjunction", "theorems"};
  return kinds;
}

std::string TaskDef::signature() const {
  std::string out = kind + "(";
  for (std::size_t i = 0; i < args.size(); ++i) out += (i ? ", " : "") + args[i];
  if (!options.empty()) {
    out += "; ";
    for (std::size_t i = 0; i < options.size(); ++i) {
      out += (i ? ", " : "") + options[i].first + " = " + options[i].second;
    }
  }
  return out + ")";
}

std::vector<TaskDef> Workspace::tasks() const {
  std::vector<TaskDef> out;
  for (const auto& s : statements)
    if (const auto* t = std::get_if<TaskDef>(&s)) out.push_back(*t);
  return out;
}

namespace {

enum class Tok { Ident, Number, Punct, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Location at;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&] {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t;
    t.at = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::Ident;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
        t.text += text[i];
        advance();
      }
    } else if (std::isdigit(static_cast<unsigned char>(c)) ||
               (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      t.kind = Tok::Number;
      t.text += c;
      advance();
      while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) {
        t.text += text[i];
        advance();
      }
    } else if (std::string_view("=(){}[],;").find(c) != std::string_view::npos) {
      t.kind = Tok::Punct;
      t.text = c;
      advance();
    } else {
      throw SyntaxError(line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.at = {line, col};
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(lex(text)) {}

  Workspace run() {
    Workspace w;
    if (is_ident("format")) {
      Token t = next();
      Token v = expect_number("format version");
      if (v.text != "1") throw SyntaxError(v.at.line, v.at.column, "unsupported format version " + v.text);
      (void)t;
    }
    while (true) {
      skip_separators();
      if (peek().kind == Tok::End) break;
      Token kw = peek();
      if (kw.kind != Tok::Ident) throw SyntaxError(kw.at.line, kw.at.column, "expected a statement, got '" + kw.text + "'");
      if (kw.text == "field") {
        next();
        Token name = expect_ident("field name");
        if (w.field) throw SyntaxError(kw.at.line, kw.at.column, "field declared twice");
        try {
          w.field = Field::parse_name(name.text);
        } catch (const std::exception& e) {
          throw SyntaxError(name.at.line, name.at.column, e.what());
        }
        field_ = w.field;
      } else if (kw.text == "algebra") {
        require_field(kw);
        AlgebraDef d = algebra();
        resolve(w.objects, d);
        w.statements.emplace_back(std::move(d));
      } else if (kw.text == "bimodule") {
        require_field(kw);
        BimoduleDef d = bimodule();
        resolve(w.objects, d);
        w.statements.emplace_back(std::move(d));
      } else if (kw.text == "task") {
        TaskDef t = task();
        resolve(w.objects, t);
        w.statements.emplace_back(std::move(t));
      } else {
        throw SyntaxError(kw.at.line, kw.at.column, "unknown statement '" + kw.text + "'");
      }
    }
    return w;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::optional<Field> field_;
  std::set<std::string> names_;

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
  bool is_ident(const char* s) const { return peek().kind == Tok::Ident && peek().text == s; }
  bool is_punct(char c) const { return peek().kind == Tok::Punct && peek().text[0] == c; }

  [[noreturn]] void fail(const Token& t, const std::string& what) {
    std::string got = t.kind == Tok::End ? "end of file" : "'" + t.text + "'";
    throw SyntaxError(t.at.line, t.at.column, "expected " + what + ", got " + got);
  }
  Token expect_ident(const std::string& what) {
    if (peek().kind != Tok::Ident) fail(peek(), what);
    return next();
  }
  Token expect_keyword(const char* kw) {
    if (!is_ident(kw)) fail(peek(), std::string("'") + kw + "'");
    return next();
  }
  Token expect_number(const std::string& what) {
    if (peek().kind != Tok::Number) fail(peek(), what);
    return next();
  }
  Token expect_punct(char c) {
    if (!is_punct(c)) fail(peek(), std::string("'") + c + "'");
    return next();
  }
  std::size_t natural(const std::string& what) {
    Token t = expect_number(what);
    if (t.text.find_first_not_of("0123456789") != std::string::npos) fail(t, what);
    try {
      return static_cast<std::size_t>(std::stoull(t.text));
    } catch (const std::exception&) {
      throw SyntaxError(t.at.line, t.at.column, what + " out of range");
    }
  }
  void require_field(const Token& at) {
    if (!field_) throw SyntaxError(at.at.line, at.at.column, "field must be declared before definitions");
  }
  Token new_name() {
    Token t = expect_ident("a name");
    if (!names_.insert(t.text).second) throw SyntaxError(t.at.line, t.at.column, "'" + t.text + "' is already defined");
    return t;
  }
  void skip_separators() {
    while (is_punct(';')) next();
  }

  Scalar scalar() {
    Token t = expect_number("a coefficient");
    try {
      return field_->parse(t.text);
    } catch (const std::exception& e) {
      throw SyntaxError(t.at.line, t.at.column, e.what());
    }
  }

  // [a b c]
  Matrix vector() {
    expect_punct('[');
    std::vector<Scalar> xs;
    while (!is_punct(']')) xs.push_back(scalar());
    next();
    Matrix v(*field_, xs.size(), 1);
    for (std::size_t i = 0; i < xs.size(); ++i) v.set(i, 0, xs[i]);
    return v;
  }

  // [[a b] [c d]]
  Matrix matrix() {
    Token open = expect_punct('[');
    std::vector<Matrix> rows;
    while (!is_punct(']')) {
      Token at = peek();
      rows.push_back(vector());
      if (rows.back().rows() != rows.front().rows()) {
        throw DimensionError(at.at.line, at.at.column, "matrix rows have different lengths");
      }
    }
    next();
    if (rows.empty()) return Matrix(*field_, 0, 0);
    Matrix m(*field_, rows.size(), rows.front().rows());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rows[r](c, 0));
    (void)open;
    return m;
  }

  AlgebraDef algebra() {
    next();
    Token name = new_name();
    AlgebraDef d;
    d.name = name.text;
    d.at = name.at;
    if (is_punct('=')) {
      next();
      Token b = expect_ident("an algebra builder");
      expect_punct('(');
      if (b.text == "matrix") {
        d.form = MatrixAlgebra{natural("matrix size")};
      } else if (b.text == "product") {
        std::string x = expect_ident("an algebra name").text;
        expect_punct(',');
        d.form = ProductAlgebra{x, expect_ident("an algebra name").text};
      } else if (b.text == "subalgebra") {
        SubalgebraDef s;
        s.parent = expect_ident("an algebra name").text;
        expect_punct(';');
        expect_keyword("gens");
        expect_punct('=');
        s.gens.push_back(vector());
        while (is_punct(',')) {
          next();
          s.gens.push_back(vector());
        }
        d.form = std::move(s);
      } else {
        throw SyntaxError(b.at.line, b.at.column, "unknown algebra builder '" + b.text + "'");
      }
      expect_punct(')');
      return d;
    }
    expect_keyword("dim");
    ExplicitAlgebra e;
    e.dim = natural("dimension");
    expect_punct('{');
    bool has_unit = false;
    skip_separators();
    while (!is_punct('}')) {
      Token kw = expect_ident("'mult' or 'unit'");
      if (kw.text == "mult") {
        MultEntry m;
        m.at = kw.at;
        m.i = natural("basis index");
        m.j = natural("basis index");
        expect_punct('=');
        m.coeffs = vector();
        e.mult.push_back(std::move(m));
      } else if (kw.text == "unit") {
        expect_punct('=');
        e.unit = vector();
        has_unit = true;
      } else {
        fail(kw, "'mult' or 'unit'");
      }
      skip_separators();
    }
    Token close = next();
    if (!has_unit) throw SyntaxError(close.at.line, close.at.column, "algebra '" + d.name + "' has no unit");
    d.form = std::move(e);
    return d;
  }

  BimoduleDef bimodule() {
    next();
    Token name = new_name();
    BimoduleDef d;
    d.name = name.text;
    d.at = name.at;
    if (is_punct('=')) {
      next();
      Token b = expect_ident("a bimodule builder");
      expect_punct('(');
      if (b.text == "free") {
        std::string a = expect_ident("an algebra name").text;
        expect_punct(',');
        d.form = FreeDef{a, natural("rank")};
      } else if (b.text == "dual") {
        d.form = DualDef{expect_ident("a bimodule name").text};
      } else if (b.text == "opposite") {
        d.form = OppositeDef{expect_ident("a bimodule name").text};
      } else {
        throw SyntaxError(b.at.line, b.at.column, "unknown bimodule builder '" + b.text + "'");
      }
      expect_punct(')');
      return d;
    }
    ExplicitBimodule e;
    expect_keyword("over");
    e.left = expect_ident("an algebra name").text;
    expect_punct(',');
    e.right = expect_ident("an algebra name").text;
    expect_keyword("dim");
    e.dim = natural("dimension");
    expect_punct('{');
    skip_separators();
    while (!is_punct('}')) {
      Token kw = expect_ident("'left' or 'right'");
      if (kw.text != "left" && kw.text != "right") fail(kw, "'left' or 'right'");
      ActionEntry a;
      a.at = kw.at;
      a.index = natural("basis index");
      expect_punct('=');
      a.matrix = matrix();
      (kw.text == "left" ? e.left_entries : e.right_entries).push_back(std::move(a));
      skip_separators();
    }
    next();
    d.form = std::move(e);
    return d;
  }

  TaskDef task() {
    next();
    Token kind = expect_ident("a task kind");
    const auto& kinds = task_kinds();
    if (std::find(kinds.begin(), kinds.end(), kind.text) == kinds.end()) {
      throw SyntaxError(kind.at.line, kind.at.column, "unknown task kind '" + kind.text + "'");
    }
    TaskDef t;
    t.kind = kind.text;
    t.at = kind.at;
    expect_punct('(');
    if (peek().kind == Tok::Ident) {
      t.args.push_back(next().text);
      while (is_punct(',')) {
        next();
        t.args.push_back(expect_ident("a name").text);
      }
    }
    if (is_punct(';')) {
      next();
      do {
        if (is_punct(',')) next();
        Token key = expect_ident("an option name");
        expect_punct('=');
        Token value = next();
        if (value.kind != Tok::Ident && value.kind != Tok::Number) fail(value, "an option value");
        if (key.text != "perturb" || t.kind != "coring") {
          throw SyntaxError(key.at.line, key.at.column, "unknown option '" + key.text + "' for task " + t.kind);
        }
        t.options.emplace_back(key.text, value.text);
      } while (is_punct(','));
    }
    expect_punct(')');
    if (t.args.size() != 1) throw SyntaxError(kind.at.line, kind.at.column, "task " + t.kind + " takes one name");
    return t;
  }

  // ---- resolution ----

  const AlgebraPtr& algebra_named(const Objects& o, const std::string& name, const Location& at) {
    auto it = o.algebras.find(name);
    if (it == o.algebras.end()) throw UnresolvedName(at.line, at.column, name);
    return it->second;
  }
  const Bimodule& bimodule_named(const Objects& o, const std::string& name, const Location& at) {
    auto it = o.bimodules.find(name);
    if (it == o.bimodules.end()) throw UnresolvedName(at.line, at.column, name);
    return it->second;
  }

  void resolve(Objects& o, const AlgebraDef& d) {
    const Field& f = *field_;
    const Location& at = d.at;
    AlgebraPtr out;
    try {
      if (const auto* e = std::get_if<ExplicitAlgebra>(&d.form)) {
        const std::size_t n = e->dim;
        std::vector<Scalar> constants(n * n * n, f.zero());
        for (const auto& m : e->mult) {
          if (m.i >= n || m.j >= n) {
            throw DimensionError(m.at.line, m.at.column,
                                 "mult " + std::to_string(m.i) + " " + std::to_string(m.j) + " on a dim-" +
                                     std::to_string(n) + " algebra");
          }
          if (m.coeffs.rows() != n) {
            throw DimensionError(m.at.line, m.at.column, "product vector has " + std::to_string(m.coeffs.rows()) +
                                                         " entries, expected " + std::to_string(n));
          }
          for (std::size_t k = 0; k < n; ++k) constants[(m.i * n + m.j) * n + k] = m.coeffs(k, 0);
        }
        if (e->unit.rows() != n) throw DimensionError(at.line, at.column, "unit vector has the wrong length");
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
        out = Algebra::create(f, labels, constants, e->unit);
      } else if (const auto* m = std::get_if<MatrixAlgebra>(&d.form)) {
        if (m->n == 0) throw DimensionError(at.line, at.column, "matrix(0) is not an algebra");
        out = matrix_algebra(f, m->n);
      } else if (const auto* p = std::get_if<ProductAlgebra>(&d.form)) {
        out = product_algebra(algebra_named(o, p->a, at), algebra_named(o, p->b, at));
      } else {
        const auto& s = std::get<SubalgebraDef>(d.form);
        const AlgebraPtr& parent = algebra_named(o, s.parent, at);
        for (const auto& g : s.gens) {
          if (g.rows() != parent->dim()) throw DimensionError(at.line, at.column, "generator has the wrong length");
        }
        out = subalgebra_spanned(parent, s.gens).algebra;
      }
    } catch (const WorkspaceError&) {
      throw;
    } catch (const DimensionMismatch& e) {
      throw DimensionError(at.line, at.column, e.what());
    } catch (const Error& e) {
      throw StructureError(at.line, at.column, e.what());
    }
    o.algebras.emplace(d.name, out);
  }

  void resolve(Objects& o, const BimoduleDef& d) {
    const Location& at = d.at;
    try {
      if (const auto* e = std::get_if<ExplicitBimodule>(&d.form)) {
        const AlgebraPtr& b = algebra_named(o, e->left, at);
        const AlgebraPtr& a = algebra_named(o, e->right, at);
        const Matrix zero(*field_, e->dim, e->dim);
        std::vector<Matrix> left(b->dim(), zero), right(a->dim(), zero);
        auto place = [&](const std::vector<ActionEntry>& entries, std::vector<Matrix>& into, const char* side) {
          for (const auto& x : entries) {
            if (x.index >= into.size()) {
              throw DimensionError(x.at.line, x.at.column,
                                   std::string(side) + " index " + std::to_string(x.index) + " on a dim-" +
                                       std::to_string(into.size()) + " algebra");
            }
            if (x.matrix.rows() != e->dim || x.matrix.cols() != e->dim) {
              throw DimensionError(x.at.line, x.at.column,
                                   std::string(side) + " " + std::to_string(x.index) + " is " +
                                       std::to_string(x.matrix.rows()) + "x" + std::to_string(x.matrix.cols()) +
                                       ", expected " + std::to_string(e->dim) + "x" + std::to_string(e->dim));
            }
            into[x.index] = x.matrix;
          }
        };
        place(e->left_entries, left, "left");
        place(e->right_entries, right, "right");
        o.bimodules.emplace(d.name, Bimodule(b, a, e->dim, std::move(left), std::move(right)));
      } else if (const auto* fdef = std::get_if<FreeDef>(&d.form)) {
        o.bimodules.emplace(d.name, free_bimodule(algebra_named(o, fdef->algebra, at), fdef->rank));
      } else if (const auto* dd = std::get_if<DualDef>(&d.form)) {
        o.bimodules.emplace(d.name, right_dual(bimodule_named(o, dd->of, at)).module);
      } else {
        const auto& od = std::get<OppositeDef>(d.form);
        o.bimodules.emplace(d.name, opposite_bimodule(bimodule_named(o, od.of, at)));
      }
    } catch (const WorkspaceError&) {
      throw;
    } catch (const DimensionMismatch& e) {
      throw DimensionError(at.line, at.column, e.what());
    } catch (const Error& e) {
      throw StructureError(at.line, at.column, e.what());
    }
  }

  void resolve(const Objects& o, const TaskDef& t) {
    for (const auto& a : t.args) {
      if (!o.algebras.count(a) && !o.bimodules.count(a)) throw UnresolvedName(t.at.line, t.at.column, a);
      if (t.kind != "validate" && !o.bimodules.count(a)) {
        throw SyntaxError(t.at.line, t.at.column, "task " + t.kind + " needs a bimodule, '" + a + "' is an algebra");
      }
    }
    for (const auto& [key, value] : t.options) {
      if (value.find_first_not_of("0123456789") != std::string::npos) {
        throw SyntaxError(t.at.line, t.at.column, "option " + key + " needs a non-negative integer");
      }
    }
  }
};

std::string vec_text(const Matrix& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.rows(); ++i) out += (i ? " " : "") + v.field().format(v(i, 0));
  return out + "]";
}

}  // namespace

Workspace parse_workspace(const std::string& text) { return Parser(text).run(); }

Workspace load_workspace(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_workspace(ss.str());
}

std::string serialize(const Workspace& w) {
  std::ostringstream os;
  os << "format 1\n";
  if (w.field) os << "field " << w.field->name() << "\n";
  for (const auto& s : w.statements) {
    if (const auto* a = std::get_if<AlgebraDef>(&s)) {
      os << "algebra " << a->name;
      if (const auto* e = std::get_if<ExplicitAlgebra>(&a->form)) {
        os << " dim " << e->dim << " {\n";
        for (const auto& m : e->mult) os << "  mult " << m.i << " " << m.j << " = " << vec_text(m.coeffs) << "\n";
        os << "  unit = " << vec_text(e->unit) << "\n}\n";
      } else if (const auto* m = std::get_if<MatrixAlgebra>(&a->form)) {
        os << " = matrix(" << m->n << ")\n";
      } else if (const auto* p = std::get_if<ProductAlgebra>(&a->form)) {
        os << " = product(" << p->a << ", " << p->b << ")\n";
      } else {
        const auto& sub = std::get<SubalgebraDef>(a->form);
        os << " = subalgebra(" << sub.parent << "; gens = ";
        for (std::size_t i = 0; i < sub.gens.size(); ++i) os << (i ? ", " : "") << vec_text(sub.gens[i]);
        os << ")\n";
      }
    } else if (const auto* b = std::get_if<BimoduleDef>(&s)) {
      os << "bimodule " << b->name;
      if (const auto* e = std::get_if<ExplicitBimodule>(&b->form)) {
        os << " over " << e->left << ", " << e->right << " dim " << e->dim << " {\n";
        for (const auto& x : e->left_entries) os << "  left " << x.index << " = " << x.matrix.bracketed() << "\n";
        for (const auto& x : e->right_entries) os << "  right " << x.index << " = " << x.matrix.bracketed() << "\n";
        os << "}\n";
      } else if (const auto* f = std::get_if<FreeDef>(&b->form)) {
        os << " = free(" << f->algebra << ", " << f->rank << ")\n";
      } else if (const auto* d = std::get_if<DualDef>(&b->form)) {
        os << " = dual(" << d->of << ")\n";
      } else {
        os << " = opposite(" << std::get<OppositeDef>(b->form).of << ")\n";
      }
    } else {
      os << "task " << std::get<TaskDef>(s).signature() << "\n";
    }
  }
  return os.str();
}

}  // namespace comatrix::cli
