#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wqo/qo.hpp"

namespace wqo {

inline constexpr std::uint64_t kNonemptySearchBound = 10'000;

// {p in base : a </= p for every generator a}. Generators are normalized to an
// antichain of minimal elements, sorted syntactically.
class CoUpset {
 public:
  // Throws InputError if a generator is outside the base or the denoted set is
  // empty (decided exactly on finite carriers, by bounded search otherwise).
  CoUpset(QoHandle base, std::vector<Element> generators, std::uint64_t nonempty_bound = kNonemptySearchBound);

  const QoHandle& base() const { return base_; }
  const std::vector<Element>& generators() const { return gens_; }
  bool contains(const Element& p) const;

  std::strong_ordering operator<=>(const CoUpset& o) const;
  bool operator==(const CoUpset& o) const { return (*this <=> o) == 0; }

 private:
  struct Unchecked {};
  CoUpset(QoHandle base, std::vector<Element> gens, Unchecked);
  friend std::optional<CoUpset> try_couset(const QoHandle&, std::vector<Element>, std::uint64_t);

  QoHandle base_;
  std::vector<Element> gens_;
};

// nullopt where the constructor would throw for emptiness.
std::optional<CoUpset> try_couset(const QoHandle& base, std::vector<Element> generators,
                                  std::uint64_t nonempty_bound = kNonemptySearchBound);

// Minimal-element antichain of `gens`, sorted; stable under repetition.
std::vector<Element> normalize_generators(const QoHandle& base, std::vector<Element> gens);

// First member among the first `bound` enumerated points (or exact on a finite carrier).
std::optional<Element> find_member(const QoHandle& base, const std::vector<Element>& gens,
                                   std::uint64_t bound = kNonemptySearchBound);

bool couset_subset(const CoUpset& x, const CoUpset& y);

CoUpset rado_bad_downset(std::uint64_t n);

QoHandle next_level(const QoHandle& base, unsigned k);

struct DescentStep {
  std::size_t upper;  // chain[upper] strictly contains chain[upper+1]
  Element witness;    // member of chain[upper], not of chain[upper+1]
};

struct DescentChain {
  QoHandle level;              // the qo the y_i live over
  std::vector<CoUpset> chain;  // y_1..y_k
  Element entry_witness;       // x_0: in the whole level, not in y_1
  std::vector<DescentStep> steps;
};

// y_i has generators {x_0..x_{i-1}}. Throws NotBadError on the first pair
// i<j with x_i contained in x_j.
DescentChain descend_chain(const std::vector<CoUpset>& bad_prefix);

}  // namespace wqo
