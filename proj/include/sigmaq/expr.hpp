#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "sigmaq/fock.hpp"

namespace sigmaq {

/// Lexical or syntax error with the 0-based offset into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position)
      : std::runtime_error(msg), position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

/// Scalar atom: either a nonnegative rational literal or q^e (bare q is
/// q^1); which one is remembered so rendering round-trips.
struct ScalarLeaf {
  Rational value;   // used when is_q_power is false
  long q_exp = 0;   // used when is_q_power is true
  bool is_q_power = false;
};

struct GenLeaf {
  Gen g;
};

struct SumNode {
  // Signs are +1/-1; the first term always carries +1 (no unary minus in
  // the grammar).
  std::vector<std::pair<int, ExprPtr>> terms;
};

struct ProductNode {
  std::vector<ExprPtr> factors;  // written order, noncommutative
};

struct PowerNode {
  ExprPtr base;
  unsigned exp = 0;
};

struct ExprNode {
  std::variant<ScalarLeaf, GenLeaf, SumNode, ProductNode, PowerNode> v;
  size_t pos = 0;  // source offset, for error reporting
};

/// Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := atom ['^' uint]
///   atom   := 'ap'|'am'|'apd'|'amd'|'N'|'q'['^'int]|rational|'('expr')'
/// Whitespace insensitive. Throws ParseError.
ExprPtr parse(const std::string& text);

/// Emits the same grammar; render(parse(t)) reparses to an identical AST.
std::string render(const ExprPtr& e);

bool ast_equal(const ExprPtr& a, const ExprPtr& b);

/// One monomial of a normal form: an exact cyclotomic scalar times a word
/// in the generators.
struct NormalTerm {
  Cyclotomic scalar;
  std::vector<Gen> word;
};

/// An irreducible cross-sector adjacency the relations cannot reorder,
/// surfaced instead of guessed away.
struct ResidualCrossing {
  size_t term_index;
  size_t position;  // index of the left generator of the pair in the word
  Gen left;
  Gen right;
};

struct NormalForm {
  int k = 0;
  std::vector<NormalTerm> terms;
  std::vector<ResidualCrossing> residuals;
  size_t rewrite_steps = 0;
};

/// Rewrites toward the canonical order (a_+ < N < a_- within the q sector,
/// a_-^+ < N < a_+^+ within the conjugate sector, conjugate-sector
/// generators left of q-sector ones where the mixed relations allow) until
/// no oriented rule applies. Words with k consecutive equal ladder
/// generators are dropped. Terminates; a step ceiling guards against
/// regressions and throws std::runtime_error if ever hit.
NormalForm normal_order(const ExprPtr& ast, int k);

std::string render(const NormalForm& nf);

/// Evaluation in the Fock representation, the rewriter's soundness oracle.
OpMatrix eval_matrix(const ExprPtr& ast, int k);
OpMatrix eval_matrix(const NormalForm& nf);

}  // namespace sigmaq
