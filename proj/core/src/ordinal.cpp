#include "wqo/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

#include "wqo/error.hpp"

namespace wqo {

std::size_t Ordinal::Terms::size() const { return p_ ? p_->size() : 0; }
const OrdinalTerm& Ordinal::Terms::front() const { return p_->front(); }
const OrdinalTerm& Ordinal::Terms::operator[](std::size_t i) const { return (*p_)[i]; }

Ordinal::Terms::Vec::const_iterator Ordinal::Terms::begin() const {
  static const Vec none;
  return p_ ? p_->begin() : none.begin();
}

Ordinal::Terms::Vec::const_iterator Ordinal::Terms::end() const {
  static const Vec none;
  return p_ ? p_->end() : none.end();
}

Ordinal::Terms::Vec& Ordinal::Terms::own() {
  if (!p_) {
    p_ = std::make_shared<Vec>();
  } else if (p_.use_count() > 1) {
    p_ = std::make_shared<Vec>(*p_);
  }
  return const_cast<Vec&>(*p_);  // created non-const above, and unshared
}

void Ordinal::Terms::push_back(const OrdinalTerm& t) { own().push_back(t); }

void Ordinal::Terms::append(Vec::const_iterator first, Vec::const_iterator last) {
  if (first == last) return;
  Vec tmp(first, last);  // the range may alias our own storage
  auto& v = own();
  v.insert(v.end(), tmp.begin(), tmp.end());
}

OrdinalTerm& Ordinal::Terms::front_mut() { return own().front(); }

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& e) {
  if (e.is_zero()) return Ordinal(1);
  Ordinal r;
  r.terms_.push_back(OrdinalTerm{e, 1});
  return r;
}

Ordinal Ordinal::from_terms(const std::vector<std::pair<Ordinal, std::uint64_t>>& terms) {
  Ordinal r;
  for (const auto& [e, c] : terms) {
    if (c == 0) throw InputError("ordinal coefficient must be positive");
    r = r + omega_pow(e).times(c);
  }
  return r;
}

Ordinal Ordinal::pred() const {
  if (!is_successor()) throw InputError("not a successor");
  Ordinal r = *this;
  --r.finite_;
  return r;
}

std::vector<std::pair<Ordinal, std::uint64_t>> Ordinal::cnf() const {
  std::vector<std::pair<Ordinal, std::uint64_t>> out;
  out.reserve(terms_.size() + 1);
  for (const auto& t : terms_) out.emplace_back(t.exponent, t.coefficient);
  if (finite_ > 0) out.emplace_back(Ordinal(), finite_);
  return out;
}

Ordinal Ordinal::leading_exponent() const {
  if (terms_.empty()) return Ordinal();
  return terms_.front().exponent;
}

std::uint64_t Ordinal::leading_coefficient() const {
  if (terms_.empty()) return finite_;
  return terms_.front().coefficient;
}

Ordinal Ordinal::add(const Ordinal& b) const {
  if (b.terms_.empty()) {
    Ordinal r = *this;
    r.finite_ += b.finite_;
    return r;
  }
  const Ordinal& e = b.terms_.front().exponent;
  Ordinal r;
  std::size_t i = 0;
  for (; i < terms_.size(); ++i) {
    auto c = terms_[i].exponent <=> e;
    if (c == std::strong_ordering::less) break;
    if (c == std::strong_ordering::equal) {
      r.terms_.push_back(OrdinalTerm{e, terms_[i].coefficient + b.terms_.front().coefficient});
      r.terms_.append(b.terms_.begin() + 1, b.terms_.end());
      r.finite_ = b.finite_;
      return r;
    }
    r.terms_.push_back(terms_[i]);
  }
  r.terms_.append(b.terms_.begin(), b.terms_.end());
  r.finite_ = b.finite_;
  return r;
}

Ordinal Ordinal::times(std::uint64_t k) const {
  if (k == 0 || is_zero()) return Ordinal();
  Ordinal r = *this;
  if (r.terms_.empty())
    r.finite_ *= k;
  else
    r.terms_.front_mut().coefficient *= k;
  return r;
}

Ordinal Ordinal::minus_left_of(const Ordinal& b) const {
  if (*this > b) throw InputError("left subtraction needs a <= b");
  // Walk the common prefix of the two normal forms.
  std::size_t i = 0;
  for (; i < terms_.size(); ++i) {
    const auto& x = terms_[i];
    const auto& y = b.terms_[i];  // exists: a <= b and a still has infinite terms
    auto c = x.exponent <=> y.exponent;
    if (c == std::strong_ordering::equal && x.coefficient == y.coefficient) continue;
    Ordinal r;
    if (c == std::strong_ordering::equal) {
      r.terms_.push_back(OrdinalTerm{y.exponent, y.coefficient - x.coefficient});
      r.terms_.append(b.terms_.begin() + i + 1, b.terms_.end());
    } else {
      r.terms_.append(b.terms_.begin() + i, b.terms_.end());
    }
    r.finite_ = b.finite_;
    return r;
  }
  Ordinal r;
  r.terms_.append(b.terms_.begin() + i, b.terms_.end());
  r.finite_ = r.terms_.empty() ? b.finite_ - finite_ : b.finite_;
  return r;
}

std::strong_ordering Ordinal::compare(const Ordinal& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exponent <=> o.terms_[i].exponent; c != 0) return c;
    if (auto c = terms_[i].coefficient <=> o.terms_[i].coefficient; c != 0) return c;
  }
  if (auto c = terms_.size() <=> o.terms_.size(); c != 0) return c;
  return finite_ <=> o.finite_;
}

bool Ordinal::equals(const Ordinal& o) const {
  if (finite_ != o.finite_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coefficient != o.terms_[i].coefficient || !(terms_[i].exponent == o.terms_[i].exponent))
      return false;
  return true;
}

std::string Ordinal::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += "w";
    if (!(t.exponent == Ordinal(1))) s += "^{" + t.exponent.str() + "}";
    if (t.coefficient > 1) s += "*" + std::to_string(t.coefficient);
  }
  if (finite_ > 0) {
    if (!s.empty()) s += " + ";
    s += std::to_string(finite_);
  }
  return s;
}

std::size_t Ordinal::hash() const {
  std::size_t h = std::hash<std::uint64_t>{}(finite_);
  for (const auto& t : terms_) {
    h = h * 1000003u ^ t.exponent.hash();
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(t.coefficient);
  }
  return h;
}

Cmp ord_cmp(const Ordinal& a, const Ordinal& b) {
  auto c = a <=> b;
  if (c < 0) return Cmp::less;
  if (c > 0) return Cmp::greater;
  return Cmp::equal;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& a) { return os << a.str(); }

namespace {

struct Parser {
  std::string_view s;
  std::size_t p = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("ordinal parse error at " + std::to_string(p) + ": " + what);
  }
  void ws() {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }
  bool eat(char c) {
    ws();
    if (p < s.size() && s[p] == c) {
      ++p;
      return true;
    }
    return false;
  }
  std::uint64_t number() {
    ws();
    if (p >= s.size() || !std::isdigit(static_cast<unsigned char>(s[p]))) fail("expected digits");
    std::uint64_t v = 0;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) v = v * 10 + static_cast<std::uint64_t>(s[p++] - '0');
    return v;
  }
  Ordinal term() {
    ws();
    if (eat('w')) {
      Ordinal e(1);
      if (eat('^')) {
        if (eat('{')) {
          e = sum();
          if (!eat('}')) fail("expected '}'");
        } else {
          e = Ordinal(number());
        }
      }
      std::uint64_t c = 1;
      if (eat('*')) c = number();
      if (c == 0) fail("zero coefficient");
      return Ordinal::omega_pow(e).times(c);
    }
    return Ordinal(number());
  }
  Ordinal sum() {
    Ordinal r = term();
    while (eat('+')) r = r + term();
    return r;
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  Parser ps{text};
  Ordinal r = ps.sum();
  ps.ws();
  if (ps.p != text.size()) ps.fail("trailing characters");
  return r;
}

}  // namespace wqo
