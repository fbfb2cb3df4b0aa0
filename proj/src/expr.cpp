#include "sigmaq/expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace sigmaq {

namespace {

enum class Tok { plus, minus, star, caret, lparen, rparen, gen, q, number, end };

struct Token {
  Tok kind;
  size_t pos = 0;
  Gen g = Gen::number;
  Rational value;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : s_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token next() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
    cur_.pos = i_;
    if (i_ >= s_.size()) {
      cur_.kind = Tok::end;
      return;
    }
    char c = s_[i_];
    switch (c) {
      case '+': cur_.kind = Tok::plus; ++i_; return;
      case '-': cur_.kind = Tok::minus; ++i_; return;
      case '*': cur_.kind = Tok::star; ++i_; return;
      case '^': cur_.kind = Tok::caret; ++i_; return;
      case '(': cur_.kind = Tok::lparen; ++i_; return;
      case ')': cur_.kind = Tok::rparen; ++i_; return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[i_])))
        ++i_;
      Integer num(s_.substr(start, i_ - start));
      Integer den(1);
      if (i_ < s_.size() && s_[i_] == '/') {
        ++i_;
        size_t dstart = i_;
        while (i_ < s_.size() &&
               std::isdigit(static_cast<unsigned char>(s_[i_])))
          ++i_;
        if (dstart == i_)
          throw ParseError("expected denominator digits", i_);
        den = Integer(s_.substr(dstart, i_ - dstart));
        if (den == 0) throw ParseError("zero denominator", dstart);
      }
      cur_.kind = Tok::number;
      cur_.value = Rational(num, den);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = i_;
      while (i_ < s_.size() &&
             std::isalpha(static_cast<unsigned char>(s_[i_])))
        ++i_;
      std::string word = s_.substr(start, i_ - start);
      if (word == "q") {
        cur_.kind = Tok::q;
        return;
      }
      try {
        cur_.g = gen_from_name(word);
      } catch (const std::invalid_argument&) {
        throw ParseError("unknown token '" + word + "'", start);
      }
      cur_.kind = Tok::gen;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_);
  }

  const std::string& s_;
  size_t i_ = 0;
  Token cur_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (lex_.peek().kind != Tok::end)
      throw ParseError("trailing input", lex_.peek().pos);
    return e;
  }

 private:
  ExprPtr parse_expr() {
    size_t pos = lex_.peek().pos;
    SumNode sum;
    sum.terms.emplace_back(1, parse_term());
    while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
      int sign = lex_.next().kind == Tok::plus ? 1 : -1;
      sum.terms.emplace_back(sign, parse_term());
    }
    if (sum.terms.size() == 1) return sum.terms[0].second;
    auto node = std::make_shared<ExprNode>();
    node->v = std::move(sum);
    node->pos = pos;
    return node;
  }

  ExprPtr parse_term() {
    size_t pos = lex_.peek().pos;
    ProductNode prod;
    prod.factors.push_back(parse_factor());
    while (lex_.peek().kind == Tok::star) {
      lex_.next();
      prod.factors.push_back(parse_factor());
    }
    if (prod.factors.size() == 1) return prod.factors[0];
    auto node = std::make_shared<ExprNode>();
    node->v = std::move(prod);
    node->pos = pos;
    return node;
  }

  ExprPtr parse_factor() {
    ExprPtr atom = parse_atom();
    if (lex_.peek().kind != Tok::caret) return atom;
    size_t cpos = lex_.next().pos;
    Token t = lex_.next();
    if (t.kind != Tok::number)
      throw ParseError("expected nonnegative integer exponent", t.pos);
    if (denominator(t.value) != 1)
      throw ParseError("expected integer exponent", t.pos);
    Integer n = numerator(t.value);
    if (n > 4096) throw ParseError("exponent too large", t.pos);
    PowerNode p;
    p.base = atom;
    p.exp = n.convert_to<unsigned>();
    auto node = std::make_shared<ExprNode>();
    node->v = std::move(p);
    node->pos = cpos;
    return node;
  }

  ExprPtr parse_atom() {
    Token t = lex_.next();
    auto node = std::make_shared<ExprNode>();
    node->pos = t.pos;
    switch (t.kind) {
      case Tok::gen: {
        node->v = GenLeaf{t.g};
        return node;
      }
      case Tok::q: {
        ScalarLeaf s;
        s.is_q_power = true;
        s.q_exp = 1;
        if (lex_.peek().kind == Tok::caret) {
          lex_.next();
          long sign = 1;
          if (lex_.peek().kind == Tok::minus) {
            lex_.next();
            sign = -1;
          }
          Token e = lex_.next();
          if (e.kind != Tok::number || denominator(e.value) != 1)
            throw ParseError("expected integer exponent after q^", e.pos);
          Integer n = numerator(e.value);
          if (n > 1 << 20) throw ParseError("exponent too large", e.pos);
          s.q_exp = sign * n.convert_to<long>();
        }
        node->v = s;
        return node;
      }
      case Tok::number: {
        ScalarLeaf s;
        s.value = t.value;
        node->v = s;
        return node;
      }
      case Tok::lparen: {
        ExprPtr inner = parse_expr();
        Token close = lex_.next();
        if (close.kind != Tok::rparen)
          throw ParseError("expected ')'", close.pos);
        return inner;
      }
      default:
        throw ParseError("expected atom", t.pos);
    }
  }

  Lexer lex_;
};

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

namespace {

void render_node(const ExprPtr& e, std::ostringstream& os) {
  if (const auto* s = std::get_if<ScalarLeaf>(&e->v)) {
    if (s->is_q_power) {
      if (s->q_exp == 1)
        os << "q";
      else
        os << "q^" << s->q_exp;
    } else {
      os << s->value.str();
    }
    return;
  }
  if (const auto* g = std::get_if<GenLeaf>(&e->v)) {
    os << gen_name(g->g);
    return;
  }
  if (const auto* p = std::get_if<PowerNode>(&e->v)) {
    bool paren = std::holds_alternative<SumNode>(p->base->v) ||
                 std::holds_alternative<ProductNode>(p->base->v);
    if (paren) os << "(";
    render_node(p->base, os);
    if (paren) os << ")";
    os << "^" << p->exp;
    return;
  }
  if (const auto* prod = std::get_if<ProductNode>(&e->v)) {
    bool first = true;
    for (const auto& f : prod->factors) {
      if (!first) os << "*";
      first = false;
      bool paren = std::holds_alternative<SumNode>(f->v);
      if (paren) os << "(";
      render_node(f, os);
      if (paren) os << ")";
    }
    return;
  }
  const auto& sum = std::get<SumNode>(e->v);
  bool first = true;
  for (const auto& [sign, term] : sum.terms) {
    if (first) {
      first = false;
    } else {
      os << (sign > 0 ? " + " : " - ");
    }
    render_node(term, os);
  }
}

}  // namespace

std::string render(const ExprPtr& e) {
  std::ostringstream os;
  render_node(e, os);
  return os.str();
}

bool ast_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->v.index() != b->v.index()) return false;
  if (const auto* s = std::get_if<ScalarLeaf>(&a->v)) {
    const auto& t = std::get<ScalarLeaf>(b->v);
    return s->is_q_power == t.is_q_power &&
           (s->is_q_power ? s->q_exp == t.q_exp : s->value == t.value);
  }
  if (const auto* g = std::get_if<GenLeaf>(&a->v))
    return g->g == std::get<GenLeaf>(b->v).g;
  if (const auto* p = std::get_if<PowerNode>(&a->v)) {
    const auto& q = std::get<PowerNode>(b->v);
    return p->exp == q.exp && ast_equal(p->base, q.base);
  }
  if (const auto* prod = std::get_if<ProductNode>(&a->v)) {
    const auto& other = std::get<ProductNode>(b->v);
    if (prod->factors.size() != other.factors.size()) return false;
    for (size_t i = 0; i < prod->factors.size(); ++i)
      if (!ast_equal(prod->factors[i], other.factors[i])) return false;
    return true;
  }
  const auto& sa = std::get<SumNode>(a->v);
  const auto& sb = std::get<SumNode>(b->v);
  if (sa.terms.size() != sb.terms.size()) return false;
  for (size_t i = 0; i < sa.terms.size(); ++i)
    if (sa.terms[i].first != sb.terms[i].first ||
        !ast_equal(sa.terms[i].second, sb.terms[i].second))
      return false;
  return true;
}

namespace {

struct RawTerm {
  Cyclotomic scalar;
  std::vector<Gen> word;
};

std::vector<RawTerm> expand(const ExprPtr& e, int k);

bool is_ladder(Gen g) { return g != Gen::number; }

// True when the word has k consecutive copies of one ladder generator.
bool killed_by_nilpotency(const std::vector<Gen>& w, int k) {
  int run = 0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] == w[i - 1] && is_ladder(w[i]))
      ++run;
    else
      run = is_ladder(w[i]) ? 1 : 0;
    if (run >= k) return true;
  }
  return false;
}

std::vector<RawTerm> expand_product(const std::vector<RawTerm>& a,
                                    const std::vector<RawTerm>& b, int k) {
  std::vector<RawTerm> out;
  for (const auto& ta : a)
    for (const auto& tb : b) {
      RawTerm t{ta.scalar * tb.scalar, ta.word};
      t.word.insert(t.word.end(), tb.word.begin(), tb.word.end());
      if (t.scalar.is_zero() || killed_by_nilpotency(t.word, k)) continue;
      out.push_back(std::move(t));
    }
  return out;
}

std::vector<RawTerm> expand(const ExprPtr& e, int k) {
  const CycloField& f = CycloField::get(k);
  if (const auto* s = std::get_if<ScalarLeaf>(&e->v)) {
    Cyclotomic c = s->is_q_power ? q_power(k, s->q_exp)
                                 : Cyclotomic::from_rational(f, s->value);
    return {RawTerm{c, {}}};
  }
  if (const auto* g = std::get_if<GenLeaf>(&e->v))
    return {RawTerm{Cyclotomic::one(f), {g->g}}};
  if (const auto* p = std::get_if<PowerNode>(&e->v)) {
    std::vector<RawTerm> acc = {RawTerm{Cyclotomic::one(f), {}}};
    std::vector<RawTerm> base = expand(p->base, k);
    for (unsigned i = 0; i < p->exp && !acc.empty(); ++i)
      acc = expand_product(acc, base, k);
    return acc;
  }
  if (const auto* prod = std::get_if<ProductNode>(&e->v)) {
    std::vector<RawTerm> acc = {RawTerm{Cyclotomic::one(f), {}}};
    for (const auto& factor : prod->factors)
      acc = expand_product(acc, expand(factor, k), k);
    return acc;
  }
  const auto& sum = std::get<SumNode>(e->v);
  std::vector<RawTerm> out;
  for (const auto& [sign, term] : sum.terms)
    for (auto& t : expand(term, k)) {
      if (sign < 0) t.scalar = -t.scalar;
      out.push_back(std::move(t));
    }
  return out;
}

// Oriented rewrite of the leftmost reducible adjacent pair. Returns true
// and fills the results when a rule applied. Each output is strictly
// smaller in (inversion count, length), so rewriting terminates.
struct RewriteOut {
  // swapped-word continuation, with its scalar multiplier
  Cyclotomic swap_scalar;
  std::vector<Gen> swapped;
  // optional contracted continuation (pair removed or shortened)
  bool has_extra = false;
  Cyclotomic extra_scalar;
  std::vector<Gen> extra;
};

bool rewrite_step(const std::vector<Gen>& w, int k, RewriteOut& out) {
  const CycloField& f = CycloField::get(k);
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    Gen a = w[i], b = w[i + 1];
    auto swap_with = [&](const Cyclotomic& c) {
      out.swap_scalar = c;
      out.swapped = w;
      std::swap(out.swapped[i], out.swapped[i + 1]);
      out.has_extra = false;
    };
    auto drop_pair = [&](const Cyclotomic& c) {
      out.has_extra = true;
      out.extra_scalar = c;
      out.extra.clear();
      out.extra.insert(out.extra.end(), w.begin(),
                       w.begin() + static_cast<long>(i));
      out.extra.insert(out.extra.end(), w.begin() + static_cast<long>(i + 2),
                       w.end());
    };
    auto drop_one = [&](Gen keep, const Cyclotomic& c) {
      out.has_extra = true;
      out.extra_scalar = c;
      out.extra.clear();
      out.extra.insert(out.extra.end(), w.begin(),
                       w.begin() + static_cast<long>(i));
      out.extra.push_back(keep);
      out.extra.insert(out.extra.end(), w.begin() + static_cast<long>(i + 2),
                       w.end());
    };
    Cyclotomic one = Cyclotomic::one(f);
    if (a == Gen::a_minus && b == Gen::a_plus) {
      // a_- a_+ = q a_+ a_- + 1
      swap_with(q_power(k, 1));
      drop_pair(one);
      return true;
    }
    if (a == Gen::a_plus_dag && b == Gen::a_minus_dag) {
      // a_+^+ a_-^+ = qbar a_-^+ a_+^+ + 1
      swap_with(q_power(k, -1));
      drop_pair(one);
      return true;
    }
    if (a == Gen::number && b == Gen::a_plus) {
      // N a_+ = a_+ N + a_+
      swap_with(one);
      drop_one(Gen::a_plus, one);
      return true;
    }
    if (a == Gen::a_minus && b == Gen::number) {
      // a_- N = N a_- + a_-
      swap_with(one);
      drop_one(Gen::a_minus, one);
      return true;
    }
    if (a == Gen::a_plus_dag && b == Gen::number) {
      // a_+^+ N = N a_+^+ + a_+^+
      swap_with(one);
      drop_one(Gen::a_plus_dag, one);
      return true;
    }
    if (a == Gen::number && b == Gen::a_minus_dag) {
      // N a_-^+ = a_-^+ N + a_-^+
      swap_with(one);
      drop_one(Gen::a_minus_dag, one);
      return true;
    }
    if (a == Gen::a_minus && b == Gen::a_plus_dag) {
      // a_- a_+^+ = qbar^(1/2) a_+^+ a_-
      swap_with(q_half_power(k, -1));
      return true;
    }
    if (a == Gen::a_plus && b == Gen::a_minus_dag) {
      // a_+ a_-^+ = q^(1/2) a_-^+ a_+
      swap_with(q_half_power(k, 1));
      return true;
    }
  }
  return false;
}

}  // namespace

NormalForm normal_order(const ExprPtr& ast, int k) {
  constexpr size_t kStepCeiling = 1u << 22;
  const CycloField& f = CycloField::get(k);
  NormalForm nf;
  nf.k = k;

  std::vector<RawTerm> work = expand(ast, k);
  std::map<std::vector<Gen>, Cyclotomic> done;
  while (!work.empty()) {
    RawTerm t = std::move(work.back());
    work.pop_back();
    if (t.scalar.is_zero()) continue;
    if (killed_by_nilpotency(t.word, k)) continue;
    RewriteOut step{Cyclotomic::one(f), {}, false, Cyclotomic::one(f), {}};
    if (rewrite_step(t.word, k, step)) {
      if (++nf.rewrite_steps > kStepCeiling)
        throw std::runtime_error("rewrite step ceiling exceeded");
      work.push_back(RawTerm{t.scalar * step.swap_scalar, step.swapped});
      if (step.has_extra)
        work.push_back(RawTerm{t.scalar * step.extra_scalar, step.extra});
      continue;
    }
    auto it = done.find(t.word);
    if (it == done.end())
      done.emplace(t.word, t.scalar);
    else
      it->second += t.scalar;
  }

  for (auto& [word, scalar] : done) {
    if (scalar.is_zero()) continue;
    nf.terms.push_back(NormalTerm{scalar, word});
  }
  // Longer words first, then generator order; keeps output deterministic.
  std::sort(nf.terms.begin(), nf.terms.end(),
            [](const NormalTerm& a, const NormalTerm& b) {
              if (a.word.size() != b.word.size())
                return a.word.size() > b.word.size();
              return a.word < b.word;
            });
  // Surface cross-sector adjacencies the relations leave untouched.
  for (size_t ti = 0; ti < nf.terms.size(); ++ti) {
    const auto& w = nf.terms[ti].word;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
      Gen a = w[i], b = w[i + 1];
      bool crossing =
          (a == Gen::a_minus && b == Gen::a_minus_dag) ||
          (a == Gen::a_minus_dag && b == Gen::a_minus) ||
          (a == Gen::a_plus && b == Gen::a_plus_dag) ||
          (a == Gen::a_plus_dag && b == Gen::a_plus);
      if (crossing) nf.residuals.push_back(ResidualCrossing{ti, i, a, b});
    }
  }
  return nf;
}

namespace {

// Renders a cyclotomic scalar in expression syntax when it is a plain
// rational times an integer power of q; otherwise falls back to the
// canonical field rendering in parentheses.
std::string scalar_text(const Cyclotomic& c) {
  int k = c.field().k();
  if (c.is_rational()) return c.rational_part().str();
  for (long j = 1; j < k; ++j) {
    // c == r * q^j for rational r exactly when c * q^-j is rational.
    Cyclotomic ratio = c * q_power(k, -j);
    if (ratio.is_rational()) {
      std::string qs = (j == 1) ? "q" : "q^" + std::to_string(j);
      if (ratio.rational_part() == 1) return qs;
      if (ratio.rational_part() == -1) return "-" + qs;
      return ratio.rational_part().str() + "*" + qs;
    }
  }
  return "(" + c.str() + ")";
}

}  // namespace

std::string render(const NormalForm& nf) {
  if (nf.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : nf.terms) {
    std::string s = scalar_text(t.scalar);
    bool negative = !s.empty() && s[0] == '-';
    if (first) {
      first = false;
    } else {
      os << (negative ? " - " : " + ");
      if (negative) s = s.substr(1);
    }
    if (t.word.empty()) {
      os << s;
      continue;
    }
    if (s != "1") os << s << "*";
    bool fw = true;
    for (Gen g : t.word) {
      if (!fw) os << "*";
      fw = false;
      os << gen_name(g);
    }
  }
  return os.str();
}

OpMatrix eval_matrix(const ExprPtr& ast, int k) {
  const CycloField& f = CycloField::get(k);
  if (const auto* s = std::get_if<ScalarLeaf>(&ast->v)) {
    Cyclotomic c = s->is_q_power ? q_power(k, s->q_exp)
                                 : Cyclotomic::from_rational(f, s->value);
    return OpMatrix::identity(f, k).scale(c);
  }
  if (const auto* g = std::get_if<GenLeaf>(&ast->v))
    return generator_matrix(k, g->g);
  if (const auto* p = std::get_if<PowerNode>(&ast->v)) {
    OpMatrix base = eval_matrix(p->base, k);
    OpMatrix acc = OpMatrix::identity(f, k);
    for (unsigned i = 0; i < p->exp; ++i) acc = acc * base;
    return acc;
  }
  if (const auto* prod = std::get_if<ProductNode>(&ast->v)) {
    OpMatrix acc = OpMatrix::identity(f, k);
    for (const auto& factor : prod->factors) acc = acc * eval_matrix(factor, k);
    return acc;
  }
  const auto& sum = std::get<SumNode>(ast->v);
  OpMatrix acc(f, k);
  for (const auto& [sign, term] : sum.terms) {
    OpMatrix m = eval_matrix(term, k);
    acc = (sign > 0) ? acc + m : acc - m;
  }
  return acc;
}

OpMatrix eval_matrix(const NormalForm& nf) {
  const CycloField& f = CycloField::get(nf.k);
  OpMatrix acc(f, nf.k);
  for (const auto& t : nf.terms) {
    OpMatrix m = OpMatrix::identity(f, nf.k);
    for (Gen g : t.word) m = m * generator_matrix(nf.k, g);
    acc = acc + m.scale(t.scalar);
  }
  return acc;
}

}  // namespace sigmaq
