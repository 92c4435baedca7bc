#include "wres/pipeline/anchor_expr.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "wres/clifford/connection.hpp"

namespace wres {

using cd = std::complex<double>;

NumericMatrix AnchorValue::as_matrix(int dim) const {
  return matrix ? m : NumericMatrix(NumericMatrix::Identity(dim, dim) * s);
}

AnchorEnv make_anchor_env(const ExactMatrix& A) {
  AnchorEnv env;
  env.gens = build_generators<cd>(kDim);
  env.A = to_numeric(A);
  BoundaryConnection bc = build_boundary_connection(build_generators<GaussianRational>(kDim));
  for (const auto& b : bc.B) env.B.push_back(to_numeric(b));
  env.P1 = to_numeric(bc.P1);
  env.P2 = to_numeric(bc.P2);
  return env;
}

struct AnchorExpression::Node {
  enum Kind { Number, Atom, Indexed, Neg, Add, Sub, Mul, Div, Pow, Sum, Trace } kind;
  cd value = 0;
  std::string name;                // atom, indexed atom, or sum variable
  std::vector<std::string> index;  // literal digits or bound variables
  bool all_slots = false;          // sum_a
  int exponent = 0;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using NodePtr = std::shared_ptr<const AnchorExpression::Node>;
using Node = AnchorExpression::Node;

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExpressionError(what + " at offset " + std::to_string(pos_) + " in: " + s_);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  static NodePtr make(Node::Kind k, std::vector<NodePtr> kids = {}) {
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    return n;
  }

  NodePtr expr() {
    NodePtr left = term();
    for (;;) {
      if (eat('+'))
        left = make(Node::Add, {left, term()});
      else if (eat('-'))
        left = make(Node::Sub, {left, term()});
      else
        return left;
    }
  }
  NodePtr term() {
    NodePtr left = unary();
    for (;;) {
      if (eat('*'))
        left = make(Node::Mul, {left, unary()});
      else if (eat('/'))
        left = make(Node::Div, {left, unary()});
      else
        return left;
    }
  }
  NodePtr unary() {
    if (eat('-')) return make(Node::Neg, {unary()});
    if (eat('+')) return unary();
    return power();
  }
  NodePtr power() {
    NodePtr base = primary();
    if (!eat('^')) return base;
    skip();
    bool neg = eat('-');
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    auto n = std::make_shared<Node>();
    n->kind = Node::Pow;
    n->exponent = std::stoi(s_.substr(start, pos_ - start)) * (neg ? -1 : 1);
    n->kids = {base};
    return n;
  }
  std::string identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  NodePtr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    if (eat('(')) {
      NodePtr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.') {
      std::size_t used = 0;
      double v = std::stod(s_.substr(pos_), &used);
      pos_ += used;
      auto n = std::make_shared<Node>();
      n->kind = Node::Number;
      n->value = v;
      return n;
    }
    std::string id = identifier();
    if (id.empty()) fail("expected a value");
    if (id == "i") {
      auto n = std::make_shared<Node>();
      n->kind = Node::Number;
      n->value = cd(0, 1);
      return n;
    }
    if (id == "sum_t" || id == "sum_a") {
      expect('(');
      auto n = std::make_shared<Node>();
      n->kind = Node::Sum;
      n->all_slots = id == "sum_a";
      n->name = identifier();
      if (n->name.empty()) fail("expected a summation index");
      expect(',');
      n->kids = {expr()};
      expect(')');
      return n;
    }
    if (id == "tr") {
      expect('(');
      NodePtr e = expr();
      expect(')');
      return make(Node::Trace, {e});
    }
    auto n = std::make_shared<Node>();
    n->name = id;
    n->kind = Node::Atom;
    if (eat('[')) {
      n->kind = Node::Indexed;
      do {
        std::string ix = identifier();
        if (ix.empty()) fail("expected an index");
        n->index.push_back(ix);
      } while (eat(','));
      expect(']');
    }
    return n;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

class Evaluator {
 public:
  explicit Evaluator(const AnchorEnv& env) : env_(env), dim_(env.gens.dim()) {}

  AnchorValue eval(const Node& n) {
    switch (n.kind) {
      case Node::Number:
        return scalar(n.value);
      case Node::Atom:
        return atom(n.name);
      case Node::Indexed:
        return indexed(n);
      case Node::Neg: {
        AnchorValue v = eval(*n.kids[0]);
        v.s = -v.s;
        if (v.matrix) v.m = -v.m;
        return v;
      }
      case Node::Add:
      case Node::Sub: {
        AnchorValue a = eval(*n.kids[0]), b = eval(*n.kids[1]);
        const double sign = n.kind == Node::Add ? 1.0 : -1.0;
        if (!a.matrix && !b.matrix) return scalar(a.s + sign * b.s);
        return matrix(a.as_matrix(dim_) + sign * b.as_matrix(dim_));
      }
      case Node::Mul: {
        AnchorValue a = eval(*n.kids[0]), b = eval(*n.kids[1]);
        if (!a.matrix && !b.matrix) return scalar(a.s * b.s);
        if (!a.matrix) return matrix(a.s * b.m);
        if (!b.matrix) return matrix(a.m * b.s);
        return matrix(a.m * b.m);
      }
      case Node::Div: {
        AnchorValue a = eval(*n.kids[0]), b = eval(*n.kids[1]);
        if (b.matrix) throw ExpressionError("division by a matrix");
        if (!a.matrix) return scalar(a.s / b.s);
        return matrix(a.m / b.s);
      }
      case Node::Pow: {
        AnchorValue base = eval(*n.kids[0]);
        if (base.matrix) {
          if (n.exponent < 0) throw ExpressionError("negative power of a matrix");
          NumericMatrix r = NumericMatrix::Identity(dim_, dim_);
          for (int e = 0; e < n.exponent; ++e) r = r * base.m;
          return matrix(r);
        }
        return scalar(std::pow(base.s, n.exponent));
      }
      case Node::Sum: {
        const int top = n.all_slots ? kDim : kNormal;
        AnchorValue acc = scalar(0);
        for (int k = 1; k <= top; ++k) {
          bound_[n.name] = k;
          AnchorValue v = eval(*n.kids[0]);
          if (!acc.matrix && !v.matrix)
            acc.s += v.s;
          else
            acc = matrix(acc.as_matrix(dim_) + v.as_matrix(dim_));
        }
        bound_.erase(n.name);
        return acc;
      }
      case Node::Trace: {
        AnchorValue v = eval(*n.kids[0]);
        return scalar(v.matrix ? v.m.trace() : v.s * double(dim_));
      }
    }
    throw ExpressionError("bad node");
  }

 private:
  static AnchorValue scalar(cd v) {
    AnchorValue r;
    r.s = v;
    return r;
  }
  static AnchorValue matrix(NumericMatrix m) {
    AnchorValue r;
    r.matrix = true;
    r.m = std::move(m);
    return r;
  }

  int slot(const std::string& ix) const {
    int k = 0;
    if (auto it = bound_.find(ix); it != bound_.end())
      k = it->second;
    else if (!ix.empty() && std::isdigit(static_cast<unsigned char>(ix[0])))
      k = std::stoi(ix);
    else
      throw ExpressionError("unbound index " + ix);
    if (k < 1 || k > kDim) throw ExpressionError("index out of range: " + ix);
    return k - 1;
  }

  cd xi(int k) const { return k == kNormal ? env_.pt.xi_n : cd(env_.pt.xi_prime[k]); }

  NumericMatrix c_of(const std::array<double, kDim>& v) const {
    NumericMatrix m = NumericMatrix::Zero(dim_, dim_);
    for (int k = 0; k < kDim; ++k) m += env_.gens.c[k] * v[k];
    return m;
  }
  NumericMatrix b_of(const std::array<double, kDim>& v) const {
    NumericMatrix m = NumericMatrix::Zero(dim_, dim_);
    for (int k = 0; k < kDim; ++k) m += env_.B[k] * (v[k] * env_.pt.h_prime);
    return m;
  }
  NumericMatrix c_xi_prime() const {
    NumericMatrix m = NumericMatrix::Zero(dim_, dim_);
    for (int k = 0; k < kNormal; ++k) m += env_.gens.c[k] * env_.pt.xi_prime[k];
    return m;
  }

  AnchorValue atom(const std::string& name) const {
    const SamplePoint& p = env_.pt;
    if (name == "xn") return scalar(p.xi_n);
    if (name == "h") return scalar(p.h_prime);
    if (name == "XYT" || name == "XTxi" || name == "YTxi") {
      cd x = 0, y = 0;
      for (int k = 0; k < kNormal; ++k) {
        x += p.X[k] * p.xi_prime[k];
        y += p.Y[k] * p.xi_prime[k];
      }
      return scalar(name == "XYT" ? x * y : name == "XTxi" ? x : y);
    }
    if (name == "id") return matrix(NumericMatrix::Identity(dim_, dim_));
    if (name == "A") return matrix(env_.A);
    if (name == "cxi") return matrix(c_xi_prime());
    if (name == "cn") return matrix(env_.gens.c[kNormal]);
    if (name == "cfull") return matrix(c_xi_prime() + env_.gens.c[kNormal] * p.xi_n);
    if (name == "dcxi") return matrix(c_xi_prime() * (p.h_prime / 2));
    if (name == "cX") return matrix(c_of(p.X));
    if (name == "cY") return matrix(c_of(p.Y));
    if (name == "BX") return matrix(b_of(p.X));
    if (name == "BY") return matrix(b_of(p.Y));
    if (name == "P1") return matrix(env_.P1 * p.h_prime);
    if (name == "P2") return matrix(env_.P2 * p.h_prime);
    throw ExpressionError("unknown name " + name);
  }

  AnchorValue indexed(const Node& n) const {
    const SamplePoint& p = env_.pt;
    auto one = [&] {
      if (n.index.size() != 1) throw ExpressionError(n.name + " takes one index");
      return slot(n.index[0]);
    };
    if (n.name == "xi") return scalar(xi(one()));
    if (n.name == "X") return scalar(p.X[one()]);
    if (n.name == "Y") return scalar(p.Y[one()]);
    if (n.name == "c") return matrix(env_.gens.c[one()]);
    if (n.name == "ch") return matrix(env_.gens.c_hat[one()]);
    if (n.name == "dY") {
      if (n.index.size() != 2) throw ExpressionError("dY takes two indices");
      return scalar(p.dY[slot(n.index[0])][slot(n.index[1])]);
    }
    throw ExpressionError("unknown indexed name " + n.name);
  }

  const AnchorEnv& env_;
  int dim_;
  std::map<std::string, int> bound_;
};

}  // namespace

AnchorExpression AnchorExpression::parse(const std::string& text) {
  AnchorExpression e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  // reject unknown names early by evaluating once at a neutral point
  static const AnchorEnv env = make_anchor_env(ExactMatrix::Zero(1 << kDim, 1 << kDim));
  e.evaluate(env);
  return e;
}

AnchorValue AnchorExpression::evaluate(const AnchorEnv& env) const { return Evaluator(env).eval(*root_); }

}  // namespace wres
