#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace wqo {

class CoUpset;
struct QoImpl;

// A point of some registered quasi-order. Finite-order points are stored by
// index; the owning QoHandle maps indices to names.
class Element {
 public:
  enum class Kind : std::uint8_t { Named, Natural, Pair, Product, Set };

  Element() = default;
  static Element named(std::uint32_t index);
  static Element natural(std::uint64_t n);
  static Element pair(std::uint64_t i, std::uint64_t j);
  static Element product(const Element& l, const Element& r);
  static Element set(std::shared_ptr<const CoUpset> d);

  Kind kind() const { return kind_; }
  std::uint64_t index() const { return a_; }  // Named index, Natural value
  std::uint64_t first() const { return a_; }  // Pair
  std::uint64_t second() const { return b_; }
  const Element& left() const;
  const Element& right() const;
  const CoUpset& downset() const;

  std::strong_ordering operator<=>(const Element& o) const;
  bool operator==(const Element& o) const { return (*this <=> o) == 0; }
  std::size_t hash() const;

 private:
  struct Boxed;
  Kind kind_ = Kind::Natural;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 0;
  std::shared_ptr<const Boxed> boxed_;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const { return e.hash(); }
};

class QoHandle {
 public:
  enum class Kind : std::uint8_t { Finite, Omega, Rado, Product, Level };

  QoHandle() = default;
  explicit QoHandle(std::shared_ptr<const QoImpl> impl) : impl_(std::move(impl)) {}

  Kind kind() const;
  const QoImpl& impl() const { return *impl_; }
  bool valid() const { return static_cast<bool>(impl_); }

  // Finite variant.
  const std::vector<std::string>& names() const;
  std::optional<std::uint32_t> find_name(const std::string& name) const;
  // Product variant.
  const QoHandle& left() const;
  const QoHandle& right() const;
  // Level variant: the original base and the previous level.
  const QoHandle& base() const;
  const QoHandle& previous() const;
  unsigned level() const;

  // Number of points, if finite.
  std::optional<std::uint64_t> size() const;

  bool operator==(const QoHandle& o) const;

 private:
  std::shared_ptr<const QoImpl> impl_;
};

QoHandle finite_qo(std::vector<std::string> names, std::vector<std::vector<bool>> leq);
QoHandle omega_qo();
QoHandle rado_qo();
QoHandle product(const QoHandle& p, const QoHandle& q);

// Convenience finite orders; points are named a, b, c, ...
QoHandle chain_qo(unsigned n);
QoHandle antichain_qo(unsigned n);
QoHandle point_qo(const std::string& name = "*");

// Throws InputError when e does not belong to qo.
void check_member(const QoHandle& qo, const Element& e);
bool belongs(const QoHandle& qo, const Element& e);

bool leq(const QoHandle& qo, const Element& a, const Element& b);
inline bool equiv(const QoHandle& qo, const Element& a, const Element& b) {
  return leq(qo, a, b) && leq(qo, b, a);
}

Element enumerate(const QoHandle& qo, std::uint64_t n);
// Position of e in the enumeration, when the variant has a closed form
// (everything but Level). Used for tie-breaking.
std::optional<std::uint64_t> enumeration_index(const QoHandle& qo, const Element& e);
// All points of a finite carrier, deduplicated; nullopt if the carrier is
// infinite or exceeds `limit` points.
std::optional<std::vector<Element>> finite_carrier(const QoHandle& qo, std::size_t limit = 1u << 16);

// Rado: the j-bound T corresponds to the first T(T+1)/2 enumerated pairs.
std::uint64_t rado_count_upto(std::uint64_t max_j);

std::string element_str(const QoHandle& qo, const Element& e);
std::string qo_str(const QoHandle& qo);

}  // namespace wqo
