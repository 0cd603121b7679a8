#include "cayley/arith/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cayley/errors.hpp"

namespace cayley {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Exponent> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(nvars, 0);
  // Lex-descending enumeration of compositions of `degree`.
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == nvars) {
      e[pos] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {}

MultiPoly MultiPoly::constant(std::vector<std::string> variables, const Rational& c) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponent(p.num_vars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> variables, std::size_t index) {
  if (index >= variables.size()) throw InputError("variable index out of range");
  Exponent e(variables.size(), 0);
  e[index] = 1;
  return monomial(std::move(variables), std::move(e));
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponent exponent, const Rational& c) {
  if (exponent.size() != variables.size()) throw InputError("exponent length does not match variable count");
  MultiPoly p(std::move(variables));
  p.add_term(exponent, c);
  return p;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return cayley::total_degree(terms_.rbegin()->first);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return cayley::total_degree(terms_.begin()->first) == cayley::total_degree(terms_.rbegin()->first);
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size()) throw InputError("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) {
    throw InputError("evaluation point has " + std::to_string(point.size()) + " coordinates, polynomial has " +
                     std::to_string(vars_.size()) + " variables");
  }
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t *= pow(point[i], e[i]);
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw InputError("derivative variable out of range");
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    out.add_term(f, c * e[var]);
  }
  return out;
}

MultiPoly MultiPoly::compose(std::span<const MultiPoly> subs) const {
  if (subs.size() != vars_.size()) throw InputError("compose: substitution count does not match variable count");
  std::vector<std::string> target = subs.empty() ? std::vector<std::string>{} : subs[0].variables();
  for (const auto& s : subs) {
    if (s.variables() != target) throw InputError("compose: substitutions use different variable lists");
  }
  // Cache powers of each substitution.
  std::vector<std::vector<MultiPoly>> powers(subs.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(target, 1));
    while (static_cast<int>(pw.size()) <= k) pw.push_back(pw.back() * subs[i]);
    return pw[static_cast<std::size_t>(k)];
  };
  MultiPoly out(target);
  for (const auto& [e, c] : terms_) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] != 0) t = t * power(i, e[i]);
    }
    out += t;
  }
  return out;
}

void MultiPoly::unify_variables(const MultiPoly& o) {
  if (vars_ == o.vars_) return;
  if (vars_.empty() && terms_.size() <= 1) {
    // Variable-free constant adopts the other operand's variables.
    Rational c = terms_.empty() ? Rational(0) : terms_.begin()->second;
    *this = MultiPoly::constant(o.vars_, c);
    return;
  }
  throw InputError("polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.vars_.empty() && o.vars_ != vars_) {
    if (!o.terms_.empty()) add_term(Exponent(vars_.size(), 0), o.terms_.begin()->second);
    return *this;
  }
  unify_variables(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    if (b.vars_.empty()) return a * (b.terms_.empty() ? Rational(0) : b.terms_.begin()->second);
    if (a.vars_.empty()) return b * (a.terms_.empty() ? Rational(0) : a.terms_.begin()->second);
    throw InputError("polynomials over different variable lists");
  }
  MultiPoly out(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  // Variable-free constants compare by value.
  if ((a.vars_.empty() || b.vars_.empty()) && a.total_degree() <= 0 && b.total_degree() <= 0) {
    auto cst = [](const MultiPoly& p) { return p.terms_.empty() ? Rational(0) : p.terms_.begin()->second; };
    return cst(a) == cst(b);
  }
  return false;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

MultiPoly pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.variables(), 1);
  MultiPoly base = p;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Text parser: expr := ['+'|'-'] term (('+'|'-') term)*
//              term := power ('*' power)*
//              power := primary ['^' int]
//              primary := int ['/' int] | ident | '(' expr ')'

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at offset " + std::to_string(pos_) + " (" + what + ") in '" +
                     std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  MultiPoly expr() {
    MultiPoly acc = MultiPoly::constant(vars_, 0);
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    MultiPoly t = term();
    acc += negative ? -t : t;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      const std::string d = digits();
      if (d.size() > 6) fail("exponent too large");
      return cayley::pow(base, static_cast<unsigned>(std::stoul(d)));
    }
    return base;
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(digits(), 10);
      Integer den = 1;
      if (accept('/')) {
        den = Integer(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      Rational q(num, den);
      q.canonicalize();
      return MultiPoly::constant(vars_, q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(s_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) fail("unknown variable '" + name + "'");
      return MultiPoly::variable(vars_, static_cast<std::size_t>(it - vars_.begin()));
    }
    fail("unexpected character");
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).parse();
}

}  // namespace cayley
