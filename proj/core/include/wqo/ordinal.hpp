#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wqo {

struct OrdinalTerm;

// Ordinal below epsilon_0 in Cantor normal form. The infinite terms are kept
// in a vector; the trailing natural lives in `finite_` so that plain numbers
// never allocate.
class Ordinal {
 public:
  Ordinal() = default;
  Ordinal(std::uint64_t n) : finite_(n) {}  // NOLINT: naturals convert implicitly

  static Ordinal omega();
  static Ordinal omega_pow(const Ordinal& e);
  // Builds a + ... from (exponent, coefficient) pairs in any order.
  static Ordinal from_terms(const std::vector<std::pair<Ordinal, std::uint64_t>>& terms);
  static Ordinal parse(std::string_view text);

  bool is_zero() const { return terms_.empty() && finite_ == 0; }
  bool is_finite() const { return terms_.empty(); }
  std::uint64_t finite_part() const { return finite_; }
  bool is_successor() const { return finite_ > 0; }
  bool is_limit() const { return finite_ == 0 && !terms_.empty(); }
  Ordinal pred() const;

  // Full CNF as (exponent, coefficient), exponents strictly decreasing.
  std::vector<std::pair<Ordinal, std::uint64_t>> cnf() const;
  // Exponent of the leading term; 0 for nonzero naturals. Undefined on 0.
  Ordinal leading_exponent() const;
  std::uint64_t leading_coefficient() const;

  Ordinal operator+(const Ordinal& b) const {
    if (terms_.empty() && b.terms_.empty()) return Ordinal(finite_ + b.finite_);
    return add(b);
  }
  Ordinal& operator+=(const Ordinal& b) { return *this = *this + b; }
  // this * r for a natural r.
  Ordinal times(std::uint64_t r) const;
  // The unique d with *this + d == b; requires *this <= b.
  Ordinal minus_left_of(const Ordinal& b) const;

  std::strong_ordering operator<=>(const Ordinal& o) const {
    if (terms_.empty() && o.terms_.empty()) return finite_ <=> o.finite_;
    return compare(o);
  }
  bool operator==(const Ordinal& o) const {
    if (terms_.empty() && o.terms_.empty()) return finite_ == o.finite_;
    return equals(o);
  }

  std::string str() const;
  std::size_t hash() const;

 private:
  Ordinal add(const Ordinal& b) const;
  std::strong_ordering compare(const Ordinal& o) const;
  bool equals(const Ordinal& o) const;

  // Immutable, shared between copies; null for naturals so they copy for free.
  class Terms {
   public:
    using Vec = std::vector<OrdinalTerm>;
    bool empty() const { return !p_; }
    std::size_t size() const;
    const OrdinalTerm& front() const;
    const OrdinalTerm& operator[](std::size_t i) const;
    Vec::const_iterator begin() const;
    Vec::const_iterator end() const;
    void push_back(const OrdinalTerm& t);
    void append(Vec::const_iterator first, Vec::const_iterator last);
    OrdinalTerm& front_mut();

   private:
    Vec& own();
    std::shared_ptr<const Vec> p_;
  };

  Terms terms_;  // exponents > 0, strictly decreasing
  std::uint64_t finite_ = 0;
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coefficient = 1;
};

enum class Cmp { less, equal, greater };

Cmp ord_cmp(const Ordinal& a, const Ordinal& b);
inline Ordinal ord_add(const Ordinal& a, const Ordinal& b) { return a + b; }
inline Ordinal ord_omega_pow(const Ordinal& a) { return Ordinal::omega_pow(a); }
inline bool ord_is_successor(const Ordinal& a) { return a.is_successor(); }
inline Ordinal ord_pred(const Ordinal& a) { return a.pred(); }

std::ostream& operator<<(std::ostream& os, const Ordinal& a);

}  // namespace wqo
