#include "hopf/identity.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "hopf/errors.hpp"

namespace hopf {

std::string_view sort_name(Sort s) {
  switch (s) {
    case Sort::element:
      return "A";
    case Sort::dual_element:
      return "Ahat";
    case Sort::scalar:
      return "scalar";
  }
  return "?";
}

bool Expr::operator==(const Expr& other) const {
  return kind == other.kind && name == other.name && leg == other.leg && args == other.args;
}

bool IdentityProgram::operator==(const IdentityProgram& other) const {
  return name == other.name && decls == other.decls && lhs == other.lhs && rhs == other.rhs;
}

namespace {

const std::set<std::string, std::less<>> kUnary = {"S",     "Sinv",     "S2",     "Sinv2",
                                                   "sigma", "sigmainv", "sigmap", "sigmapinv",
                                                   "eps",   "phi",      "psi"};
const std::set<std::string, std::less<>> kBinary = {"lact", "ract", "lacthat", "racthat"};

std::optional<Sort> constant_sort(std::string_view name) {
  if (name == "one" || name == "delta" || name == "deltainv") return Sort::element;
  if (name == "onehat" || name == "dhat" || name == "dhatinv") return Sort::dual_element;
  if (name == "tau" || name == "tauhat") return Sort::scalar;
  return std::nullopt;
}

bool is_reserved(std::string_view word) {
  return kUnary.contains(word) || kBinary.contains(word) || constant_sort(word) ||
         word == "forall" || word == "in" || word == "A" || word == "Ahat";
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  Parser(std::string_view text, std::size_t first_line) : text_(text), line_(first_line) {}

  IdentityProgram parse() {
    IdentityProgram prog;
    skip_space();
    prog.line = line_;
    prog.name = read_name();
    expect(':');
    expect_word("forall");
    do {
      Declaration d;
      d.var = read_identifier("variable name");
      if (is_reserved(d.var)) error("'" + d.var + "' is reserved and cannot be a variable");
      for (const auto& other : prog.decls)
        if (other.var == d.var) error("variable '" + d.var + "' declared twice");
      expect_word("in");
      const std::string space = read_identifier("A or Ahat");
      if (space == "A") {
        d.sort = Sort::element;
      } else if (space == "Ahat") {
        d.sort = Sort::dual_element;
      } else {
        error("expected A or Ahat, found '" + space + "'");
      }
      prog.decls.push_back(d);
    } while (accept(','));
    expect('.');
    decls_ = &prog.decls;
    prog.lhs = parse_expr();
    expect('=');
    prog.rhs = parse_expr();
    skip_space();
    if (pos_ < text_.size()) error("unexpected text after the identity");
    return prog;
  }

 private:
  [[noreturn]] void error(const std::string& what) const { throw SyntaxError(what, line_, column_); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char found = peek();
      error(std::string("expected '") + c + "', found " +
            (found ? std::string("'") + found + "'" : std::string("end of input")));
    }
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string read_identifier(const char* what) {
    if (!ident_start(peek())) error(std::string("expected ") + what);
    std::string out;
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  void expect_word(std::string_view word) {
    const std::size_t line = line_, column = column_;
    skip_space();
    const std::string got = ident_start(peek()) ? read_identifier("") : std::string();
    if (got != word)
      throw SyntaxError("expected '" + std::string(word) + "'", line, column);
  }

  std::string read_name() {
    std::string out;
    while (pos_ < text_.size() &&
           (ident_char(text_[pos_]) || text_[pos_] == '.' || text_[pos_] == '-')) {
      out += text_[pos_];
      advance();
    }
    if (out.empty()) error("expected an identity name");
    return out;
  }

  bool starts_term() {
    const char c = peek();
    return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) || c == '<' ||
           c == '(' || c == '-';
  }

  Expr node(Expr::Kind kind) {
    Expr e;
    e.kind = kind;
    e.line = line_;
    e.column = column_;
    return e;
  }

  Expr parse_expr() {
    skip_space();
    Expr first = parse_term();
    std::vector<Expr> factors;
    factors.push_back(std::move(first));
    while (true) {
      if (accept('*')) {
        factors.push_back(parse_term());
      } else if (starts_term()) {
        factors.push_back(parse_term());
      } else {
        break;
      }
    }
    if (factors.size() == 1) return std::move(factors.front());
    Expr product = node(Expr::Kind::product);
    product.line = factors.front().line;
    product.column = factors.front().column;
    product.args = std::move(factors);
    return product;
  }

  std::string read_digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  Expr parse_term() {
    skip_space();
    const char c = peek();
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::scalar);
      if (c == '-') {
        advance();
        e.name = "-";
      }
      const std::string num = read_digits();
      if (num.empty()) error("expected digits in scalar literal");
      e.name += num;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        advance();
        const std::string den = read_digits();
        if (den.empty() || den.find_first_not_of('0') == std::string::npos)
          error("invalid denominator in scalar literal");
        e.name += "/" + den;
      }
      return e;
    }
    if (c == '(') {
      advance();
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == '<') {
      Expr e = node(Expr::Kind::pairing);
      advance();
      e.args.push_back(parse_expr());
      expect(',');
      e.args.push_back(parse_expr());
      expect('>');
      return e;
    }
    if (!ident_start(c)) {
      if (c == '\0') error("unexpected end of input, expected a term");
      error(std::string("unexpected '") + c + "'");
    }
    const std::size_t line = line_, column = column_;
    const std::string word = read_identifier("term");
    Expr e;
    e.line = line;
    e.column = column;
    e.name = word;
    if (kUnary.contains(word) || kBinary.contains(word)) {
      e.kind = Expr::Kind::call;
      expect('(');
      do {
        e.args.push_back(parse_expr());
      } while (accept(','));
      expect(')');
      return e;
    }
    if (constant_sort(word)) {
      e.kind = Expr::Kind::constant;
      return e;
    }
    const bool declared = std::any_of(decls_->begin(), decls_->end(),
                                      [&](const Declaration& d) { return d.var == word; });
    if (!declared) throw SyntaxError("unknown identifier '" + word + "'", line, column);
    e.kind = Expr::Kind::variable;
    // a(1): a leg index directly after the variable.
    const std::size_t save_pos = pos_, save_line = line_, save_column = column_;
    if (accept('(')) {
      skip_space();
      const std::string digits = read_digits();
      if (!digits.empty() && accept(')')) {
        e.leg = static_cast<unsigned>(std::stoul(digits));
        if (e.leg == 0) throw SyntaxError("Sweedler legs are numbered from 1", line, column);
        return e;
      }
      pos_ = save_pos;
      line_ = save_line;
      column_ = save_column;
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_ = 1;
  const std::vector<Declaration>* decls_ = nullptr;
};

// ---------------------------------------------------------------------------
// Sort checking

[[noreturn]] void sort_error(const Expr& e, const std::string& what) {
  throw SortError("sort error in '" + to_string(e) + "' (line " + std::to_string(e.line) +
                  ", column " + std::to_string(e.column) + "): " + what);
}

Sort infer(const Expr& e, const std::vector<Declaration>& decls) {
  switch (e.kind) {
    case Expr::Kind::scalar:
      return Sort::scalar;
    case Expr::Kind::constant:
      return *constant_sort(e.name);
    case Expr::Kind::variable:
      for (const auto& d : decls)
        if (d.var == e.name) return d.sort;
      sort_error(e, "undeclared variable");
    case Expr::Kind::pairing: {
      const Sort l = infer(e.args[0], decls);
      const Sort r = infer(e.args[1], decls);
      if (l != Sort::element || r != Sort::dual_element)
        sort_error(e, "pairing needs an A term and an Ahat term, got " +
                          std::string(sort_name(l)) + " and " + std::string(sort_name(r)));
      return Sort::scalar;
    }
    case Expr::Kind::product: {
      Sort acc = Sort::scalar;
      for (const auto& f : e.args) {
        const Sort s = infer(f, decls);
        if (s == Sort::scalar) continue;
        if (acc == Sort::scalar) {
          acc = s;
        } else if (acc != s) {
          sort_error(e, "cannot multiply an element of A by an element of Ahat");
        }
      }
      return acc;
    }
    case Expr::Kind::call: {
      if (kUnary.contains(e.name)) {
        if (e.args.size() != 1) sort_error(e, e.name + " takes one argument");
        const Sort s = infer(e.args[0], decls);
        if (s == Sort::scalar) sort_error(e, e.name + " needs an element of A or Ahat");
        if (e.name == "eps" || e.name == "phi" || e.name == "psi") return Sort::scalar;
        return s;
      }
      if (e.args.size() != 2) sort_error(e, e.name + " takes two arguments");
      const Sort l = infer(e.args[0], decls);
      const Sort r = infer(e.args[1], decls);
      auto need = [&](Sort a, Sort b, Sort result) {
        if (l != a || r != b)
          sort_error(e, e.name + " expects (" + std::string(sort_name(a)) + ", " +
                            std::string(sort_name(b)) + "), got (" +
                            std::string(sort_name(l)) + ", " + std::string(sort_name(r)) + ")");
        return result;
      };
      if (e.name == "lact") return need(Sort::element, Sort::dual_element, Sort::dual_element);
      if (e.name == "ract") return need(Sort::dual_element, Sort::element, Sort::dual_element);
      if (e.name == "lacthat") return need(Sort::dual_element, Sort::element, Sort::element);
      return need(Sort::element, Sort::dual_element, Sort::element);
    }
  }
  return Sort::scalar;
}

struct VariableUse {
  unsigned plain = 0;
  std::vector<unsigned> legs;
};

void collect_uses(const Expr& e, std::map<std::string, VariableUse>& uses) {
  if (e.kind == Expr::Kind::variable) {
    auto& u = uses[e.name];
    if (e.leg == 0) {
      ++u.plain;
    } else {
      u.legs.push_back(e.leg);
    }
  }
  for (const auto& a : e.args) collect_uses(a, uses);
}

// Variable -> number of legs (0 when unlegged) for one side.
std::map<std::string, unsigned> check_legs(const Expr& side, const char* which) {
  std::map<std::string, VariableUse> uses;
  collect_uses(side, uses);
  std::map<std::string, unsigned> out;
  for (auto& [var, u] : uses) {
    if (u.legs.empty()) {
      out[var] = 0;
      continue;
    }
    if (u.plain > 0)
      throw SortError(std::string("sort error: variable '") + var + "' is used both with and " +
                      "without Sweedler legs on the " + which + " side");
    std::sort(u.legs.begin(), u.legs.end());
    for (std::size_t i = 0; i < u.legs.size(); ++i)
      if (u.legs[i] != i + 1)
        throw SortError(std::string("sort error: Sweedler legs of '") + var + "' on the " + which +
                        " side must be 1.." + std::to_string(u.legs.size()) +
                        ", each used once");
    out[var] = static_cast<unsigned>(u.legs.size());
  }
  return out;
}

void sort_check(const IdentityProgram& p) {
  const Sort l = infer(p.lhs, p.decls);
  const Sort r = infer(p.rhs, p.decls);
  if (l != r)
    throw SortError("sort error in identity '" + p.name + "': left side is " +
                    std::string(sort_name(l)) + ", right side is " + std::string(sort_name(r)));
  const auto left = check_legs(p.lhs, "left");
  const auto right = check_legs(p.rhs, "right");
  for (const auto& d : p.decls) {
    if (!left.contains(d.var) || !right.contains(d.var))
      throw SortError("sort error in identity '" + p.name + "': variable '" + d.var +
                      "' must occur on both sides");
  }
}

}  // namespace

IdentityProgram parse_identity(std::string_view text, std::size_t first_line) {
  IdentityProgram prog = Parser(text, first_line).parse();
  sort_check(prog);
  return prog;
}

std::vector<IdentityProgram> parse_corpus(std::string_view text) {
  std::vector<IdentityProgram> out;
  std::string block;
  std::size_t block_line = 0, line_no = 0;
  bool has_content = false;
  auto flush = [&] {
    if (has_content) out.push_back(parse_identity(block, block_line));
    block.clear();
    has_content = false;
  };
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_no;
    const std::string_view code = line.substr(0, line.find('#'));
    const bool blank = code.find_first_not_of(" \t\r") == std::string_view::npos;
    if (blank && line.find_first_not_of(" \t\r") == std::string_view::npos) {
      flush();
    } else {
      if (!has_content && !blank) {
        // Comment lines before the identity are dropped so positions stay exact.
        block_line = line_no;
        has_content = true;
      }
      if (has_content) {
        block.append(line);
        block += '\n';
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  flush();
  return out;
}

std::vector<IdentityProgram> read_corpus_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_corpus(buf.str());
  } catch (const SyntaxError& err) {
    throw SyntaxError(path.filename().string() + ": " + err.what(), err.line(), err.column());
  } catch (const SortError& err) {
    throw SortError(path.filename().string() + ": " + err.what());
  }
}

std::vector<IdentityProgram> read_corpus_dir(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".hid") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<IdentityProgram> out;
  for (const auto& f : files) {
    auto part = read_corpus_file(f);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::scalar:
    case Expr::Kind::constant:
      return e.name;
    case Expr::Kind::variable:
      return e.leg ? e.name + "(" + std::to_string(e.leg) + ")" : e.name;
    case Expr::Kind::pairing:
      return "<" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ">";
    case Expr::Kind::call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        out += to_string(e.args[i]);
      }
      return out + ")";
    }
    case Expr::Kind::product: {
      std::string out;
      for (std::size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += " * ";
        const bool wrap = e.args[i].kind == Expr::Kind::product;
        out += wrap ? "(" + to_string(e.args[i]) + ")" : to_string(e.args[i]);
      }
      return out;
    }
  }
  return {};
}

std::string to_string(const IdentityProgram& p) {
  std::string out = p.name + ": forall ";
  for (std::size_t i = 0; i < p.decls.size(); ++i) {
    if (i) out += ", ";
    out += p.decls[i].var + " in " + std::string(sort_name(p.decls[i].sort));
  }
  return out + " . " + to_string(p.lhs) + " = " + to_string(p.rhs);
}

// ---------------------------------------------------------------------------
// Values

bool Value::operator==(const Value& other) const {
  if (sort != other.sort) return false;
  return sort == Sort::scalar ? scalar == other.scalar : coords == other.coords;
}

std::string Value::to_string() const {
  return sort == Sort::scalar ? scalar.to_string() : format_vec(coords);
}

namespace {

Value make_scalar(Scalar s) {
  Value v;
  v.sort = Sort::scalar;
  v.scalar = std::move(s);
  return v;
}

Value make_vec(Sort sort, Vec coords) {
  Value v;
  v.sort = sort;
  v.coords = std::move(coords);
  return v;
}

Value scaled(const Scalar& c, const Value& v) {
  if (v.sort == Sort::scalar) return make_scalar(c * v.scalar);
  return make_vec(v.sort, scale(c, v.coords));
}

void accumulate(Value& acc, const Scalar& c, const Value& v) {
  if (v.sort == Sort::scalar) {
    acc.scalar += c * v.scalar;
  } else {
    axpy(acc.coords, c, v.coords);
  }
}

// The maps and constants an identity can refer to, on both sides.
struct Side {
  const HopfAlgebra* algebra;
  std::map<std::string, Matrix, std::less<>> maps;
  std::map<std::string, Vec, std::less<>> functionals;
};

Side make_side(const ValidatedAlgebra& h, const ModularData& md) {
  const Matrix& s = h->antipode();
  const Matrix& s_inv = h.antipode_inverse();
  Side side{&*h, {}, {}};
  side.maps.emplace("S", s);
  side.maps.emplace("Sinv", s_inv);
  side.maps.emplace("S2", s * s);
  side.maps.emplace("Sinv2", s_inv * s_inv);
  side.maps.emplace("sigma", md.sigma);
  side.maps.emplace("sigmainv", md.sigma_inverse);
  side.maps.emplace("sigmap", md.sigma_prime);
  side.maps.emplace("sigmapinv", md.sigma_prime_inverse);
  side.functionals.emplace("eps", h->counit());
  side.functionals.emplace("phi", md.phi);
  side.functionals.emplace("psi", md.psi);
  return side;
}

class Evaluator {
 public:
  Evaluator(const IdentityProgram& prog, const PairedSystem& sys)
      : prog_(prog),
        sys_(sys),
        primal_(make_side(sys.primal(), sys.primal_modular())),
        dual_(make_side(sys.dual(), sys.dual_modular())) {
    for (bool left : {true, false}) {
      SideInfo& info = left ? lhs_ : rhs_;
      info.root = left ? &prog.lhs : &prog.rhs;
      const auto legs = check_legs(*info.root, left ? "left" : "right");
      for (std::size_t d = 0; d < prog.decls.size(); ++d) {
        const unsigned k = legs.at(prog.decls[d].var);
        info.legs.push_back(k);
        info.first_slot.push_back(info.slot_count);
        info.slot_count += k == 0 ? 1 : k;
      }
      index_dependencies(*info.root, info);
    }
  }

  // Evaluates one side. `values[d]` are the coordinates assigned to decl d and
  // `keys[d]` its basis index (or -1 for a general vector, which disables
  // memoisation).
  Value side(bool left, const std::vector<Vec>& values, const std::vector<long>& keys) {
    SideInfo& info = left ? lhs_ : rhs_;
    std::vector<const Vec*> slots(info.slot_count, nullptr);
    std::vector<long> slot_keys(info.slot_count, -1);
    const bool memo = std::all_of(keys.begin(), keys.end(), [](long k) { return k >= 0; });
    if (!memo) info.memo.clear();

    // Expansion of legged variables into sums of basis tensors.
    struct Expansion {
      std::size_t decl;
      std::vector<std::pair<Scalar, std::vector<std::size_t>>> terms;
    };
    std::vector<Expansion> expansions;
    for (std::size_t d = 0; d < prog_.decls.size(); ++d) {
      if (info.legs[d] == 0) {
        slots[info.first_slot[d]] = &values[d];
        slot_keys[info.first_slot[d]] = keys[d];
      } else {
        expansions.push_back({d, expand(d, values[d], keys[d], info.legs[d])});
      }
    }

    const Sort sort = infer(*info.root, prog_.decls);
    Value total = sort == Sort::scalar ? make_scalar(Scalar::zero(field()))
                                       : make_vec(sort, zero_vec(field(), dim()));
    std::vector<std::size_t> pick(expansions.size(), 0);
    for (const auto& ex : expansions)
      if (ex.terms.empty()) return total;
    while (true) {
      Scalar coeff = Scalar::one(field());
      for (std::size_t x = 0; x < expansions.size(); ++x) {
        const auto& term = expansions[x].terms[pick[x]];
        coeff *= term.first;
        const std::size_t base = info.first_slot[expansions[x].decl];
        for (std::size_t leg = 0; leg < term.second.size(); ++leg) {
          slots[base + leg] = &basis_of(prog_.decls[expansions[x].decl].sort, term.second[leg]);
          slot_keys[base + leg] = static_cast<long>(term.second[leg]);
        }
      }
      accumulate(total, coeff, eval(*info.root, info, slots, slot_keys, memo));
      std::size_t x = 0;
      while (x < expansions.size() && ++pick[x] == expansions[x].terms.size()) pick[x++] = 0;
      if (x == expansions.size()) break;
    }
    return total;
  }

  const HopfAlgebra& algebra_of(Sort s) const {
    return s == Sort::element ? *sys_.primal() : *sys_.dual();
  }

 private:
  struct SideInfo {
    const Expr* root = nullptr;
    std::vector<unsigned> legs;
    std::vector<std::size_t> first_slot;
    std::size_t slot_count = 0;
    std::map<const Expr*, std::vector<std::size_t>> deps;
    std::map<const Expr*, std::map<std::vector<long>, Value>> memo;
  };

  const FieldSpec& field() const { return sys_.primal()->field(); }
  std::size_t dim() const { return sys_.primal()->dim(); }

  const Vec& basis_of(Sort s, std::size_t i) {
    auto& cache = s == Sort::element ? basis_a_ : basis_d_;
    if (cache.empty())
      for (std::size_t j = 0; j < dim(); ++j) cache.push_back(unit_vec(field(), dim(), j));
    return cache[i];
  }

  std::vector<std::pair<Scalar, std::vector<std::size_t>>> expand(std::size_t d, const Vec& value,
                                                                  long key, unsigned legs) {
    const Sort s = prog_.decls[d].sort;
    auto compute = [&] {
      const Vec flat = algebra_of(s).ops().iterated_coproduct(value, legs);
      std::vector<std::pair<Scalar, std::vector<std::size_t>>> terms;
      for (std::size_t idx = 0; idx < flat.size(); ++idx) {
        if (flat[idx].is_zero()) continue;
        std::vector<std::size_t> digits(legs);
        std::size_t rest = idx;
        for (unsigned l = legs; l-- > 0;) {
          digits[l] = rest % dim();
          rest /= dim();
        }
        terms.emplace_back(flat[idx], std::move(digits));
      }
      return terms;
    };
    if (key < 0) return compute();
    auto& slot = expansion_cache_[{static_cast<int>(s), legs, key}];
    if (slot.empty()) slot = compute();
    return slot;
  }

  // Slots each node depends on, in increasing order.
  const std::vector<std::size_t>& index_dependencies(const Expr& e, SideInfo& info) {
    std::vector<std::size_t> out;
    if (e.kind == Expr::Kind::variable) {
      std::size_t d = 0;
      while (prog_.decls[d].var != e.name) ++d;
      out.push_back(info.first_slot[d] + (e.leg ? e.leg - 1 : 0));
    }
    for (const auto& a : e.args) {
      const auto& sub = index_dependencies(a, info);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return info.deps[&e] = std::move(out);
  }

  Value eval(const Expr& e, SideInfo& info, const std::vector<const Vec*>& slots,
             const std::vector<long>& slot_keys, bool memo) {
    if (!memo) return compute(e, info, slots, slot_keys, memo);
    const auto& deps = info.deps.at(&e);
    std::vector<long> key;
    key.reserve(deps.size());
    for (std::size_t s : deps) key.push_back(slot_keys[s]);
    auto& table = info.memo[&e];
    if (auto it = table.find(key); it != table.end()) return it->second;
    Value v = compute(e, info, slots, slot_keys, memo);
    table.emplace(std::move(key), v);
    return v;
  }

  Value compute(const Expr& e, SideInfo& info, const std::vector<const Vec*>& slots,
                const std::vector<long>& slot_keys, bool memo) {
    switch (e.kind) {
      case Expr::Kind::scalar:
        return make_scalar(Scalar::parse(field(), e.name));
      case Expr::Kind::constant:
        return constant(e.name);
      case Expr::Kind::variable: {
        std::size_t d = 0;
        while (prog_.decls[d].var != e.name) ++d;
        return make_vec(prog_.decls[d].sort, *slots[info.first_slot[d] + (e.leg ? e.leg - 1 : 0)]);
      }
      case Expr::Kind::pairing: {
        const Value a = eval(e.args[0], info, slots, slot_keys, memo);
        const Value y = eval(e.args[1], info, slots, slot_keys, memo);
        return make_scalar(pairing(a.coords, y.coords));
      }
      case Expr::Kind::product: {
        Value acc = eval(e.args[0], info, slots, slot_keys, memo);
        for (std::size_t i = 1; i < e.args.size(); ++i)
          acc = multiply(acc, eval(e.args[i], info, slots, slot_keys, memo));
        return acc;
      }
      case Expr::Kind::call: {
        const Value x = eval(e.args[0], info, slots, slot_keys, memo);
        const HopfAlgebra& a = *sys_.primal();
        if (e.args.size() == 2) {
          const Value y = eval(e.args[1], info, slots, slot_keys, memo);
          if (e.name == "lact") return make_vec(Sort::dual_element, act_on_dual_left(a, x.coords, y.coords));
          if (e.name == "ract") return make_vec(Sort::dual_element, act_on_dual_right(a, x.coords, y.coords));
          if (e.name == "lacthat") return make_vec(Sort::element, dual_act_left(a, x.coords, y.coords));
          return make_vec(Sort::element, dual_act_right(a, x.coords, y.coords));
        }
        const Side& side = x.sort == Sort::element ? primal_ : dual_;
        if (auto f = side.functionals.find(e.name); f != side.functionals.end())
          return make_scalar(dot(f->second, x.coords));
        return make_vec(x.sort, side.maps.at(e.name).apply(x.coords));
      }
    }
    return {};
  }

  Value multiply(const Value& l, const Value& r) const {
    if (l.sort == Sort::scalar) return scaled(l.scalar, r);
    if (r.sort == Sort::scalar) return scaled(r.scalar, l);
    return make_vec(l.sort, algebra_of(l.sort).multiply(l.coords, r.coords));
  }

  Value constant(const std::string& name) const {
    const ModularData& md = sys_.primal_modular();
    const ModularData& dm = sys_.dual_modular();
    if (name == "one") return make_vec(Sort::element, sys_.primal()->unit());
    if (name == "delta") return make_vec(Sort::element, md.delta);
    if (name == "deltainv") return make_vec(Sort::element, md.delta_inverse);
    if (name == "onehat") return make_vec(Sort::dual_element, sys_.dual()->unit());
    if (name == "dhat") return make_vec(Sort::dual_element, dm.delta);
    if (name == "dhatinv") return make_vec(Sort::dual_element, dm.delta_inverse);
    if (name == "tau") return make_scalar(md.tau);
    return make_scalar(dm.tau);
  }

  const IdentityProgram& prog_;
  const PairedSystem& sys_;
  Side primal_;
  Side dual_;
  SideInfo lhs_;
  SideInfo rhs_;
  std::vector<Vec> basis_a_;
  std::vector<Vec> basis_d_;
  std::map<std::tuple<int, unsigned, long>,
           std::vector<std::pair<Scalar, std::vector<std::size_t>>>>
      expansion_cache_;
};

}  // namespace

IdentityOutcome evaluate(const IdentityProgram& prog, const PairedSystem& sys) {
  Evaluator ev(prog, sys);
  IdentityOutcome out{prog.name, true, {}};
  const std::size_t n = sys.primal()->dim();
  const std::size_t vars = prog.decls.size();
  std::vector<std::size_t> pick(vars, 0);
  std::vector<Vec> values(vars);
  std::vector<long> keys(vars);
  while (true) {
    for (std::size_t d = 0; d < vars; ++d) {
      values[d] = unit_vec(sys.primal()->field(), n, pick[d]);
      keys[d] = static_cast<long>(pick[d]);
    }
    const Value lhs = ev.side(true, values, keys);
    const Value rhs = ev.side(false, values, keys);
    if (!(lhs == rhs)) {
      std::string where;
      for (std::size_t d = 0; d < vars; ++d)
        where += prog.decls[d].var + "=" + ev.algebra_of(prog.decls[d].sort).basis()[pick[d]] + " ";
      out.pass = false;
      out.counterexample = where + "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
      return out;
    }
    std::size_t d = 0;
    while (d < vars && ++pick[d] == n) pick[d++] = 0;
    if (d == vars) break;
  }
  return out;
}

Value evaluate_side(const IdentityProgram& prog, bool left, const PairedSystem& sys,
                    const std::map<std::string, Vec>& assignment) {
  Evaluator ev(prog, sys);
  std::vector<Vec> values;
  for (const auto& d : prog.decls) {
    auto it = assignment.find(d.var);
    if (it == assignment.end()) throw Error("no value assigned to '" + d.var + "'");
    if (it->second.size() != sys.primal()->dim()) throw ShapeError("assignment has wrong length");
    values.push_back(it->second);
  }
  return ev.side(left, values, std::vector<long>(values.size(), -1));
}

Report evaluate_corpus(const std::vector<IdentityProgram>& corpus, const PairedSystem& sys) {
  Report report{sys.primal()->name(), {}};
  for (const auto& prog : corpus) {
    const IdentityOutcome outcome = evaluate(prog, sys);
    std::string quantifier;
    for (const auto& d : prog.decls)
      quantifier += (quantifier.empty() ? "" : ", ") + d.var + " in " + std::string(sort_name(d.sort));
    report.results.push_back({outcome.name, quantifier, outcome.pass, outcome.counterexample});
  }
  return report;
}

}  // namespace hopf
