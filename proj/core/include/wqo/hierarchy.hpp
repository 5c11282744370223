#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wqo/downset.hpp"
#include "wqo/ordinal.hpp"
#include "wqo/qo.hpp"
#include "wqo/tuple.hpp"

namespace wqo {

// Hereditarily finite set term over urelements; no empty set anywhere.
// Sets are kept sorted and deduplicated.
class VTerm {
 public:
  static VTerm ur(Element e);
  static VTerm set(std::vector<VTerm> members);  // InputError when empty

  bool is_ur() const { return n_->ur; }
  const Element& element() const;
  const std::vector<VTerm>& members() const;
  std::size_t depth() const { return n_->depth; }
  std::size_t hash() const { return n_->hash; }
  // Node identity, stable for the lifetime of the term.
  const void* id() const { return n_.get(); }

  std::strong_ordering operator<=>(const VTerm& o) const;
  bool operator==(const VTerm& o) const;

 private:
  struct Node {
    bool ur;
    Element e;
    std::vector<VTerm> members;
    std::size_t depth;
    std::size_t hash;
  };
  explicit VTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct VTermHash {
  std::size_t operator()(const VTerm& t) const { return t.hash(); }
};

// Least bound on the ranks of set members; urelement members are ignored.
std::size_t v_rank(const VTerm& x);
std::vector<Element> supp(const VTerm& x);

bool lesssim(const QoHandle& qo, const VTerm& x, const VTerm& y, bool starred);
inline bool sim_equiv(const QoHandle& qo, const VTerm& x, const VTerm& y, bool starred) {
  return lesssim(qo, x, y, starred) && lesssim(qo, y, x, starred);
}
// Recursively drops members dominated by another member; result is sim-equivalent.
VTerm sim_minimize(const QoHandle& qo, const VTerm& x, bool starred);

// Members of d among the first `bound` enumerated points of its base.
VTerm truncate_downset(const CoUpset& d, std::uint64_t bound);

// All terms of depth <= depth over the given urelements; sets at each level
// range over nonempty subsets of size <= width of the previous level.
std::vector<VTerm> vterm_universe(const std::vector<Element>& urs, unsigned depth, std::size_t width);

// nullopt if bad, otherwise the first offending (i, j), i < j.
std::optional<std::pair<std::size_t, std::size_t>> check_bad_prefix(const QoHandle& qo, const std::vector<VTerm>& prefix,
                                                                    bool starred);

struct ArrayValue {
  Element q;
  std::uint64_t tag = 0;  // second component in Q x omega; unused when starred
  bool operator==(const ArrayValue& o) const { return q == o.q && tag == o.tag; }
};

struct PartialArray {
  QoHandle qo;
  bool starred = false;
  std::vector<Tuple> front;
  std::map<Tuple, ArrayValue> values;
  Ordinal rank_note;
  std::size_t pairs_checked = 0;
  std::vector<std::pair<Tuple, Tuple>> violations;
  // Tuples of maximal length whose h-value was still a set.
  std::vector<Tuple> uncovered;
};

// Order on array values: product order on Q x omega, or the order of Q.
bool array_leq(const PartialArray& a, const ArrayValue& x, const ArrayValue& y);
// Recomputes violations over every triangleleft pair of the front.
std::vector<std::pair<Tuple, Tuple>> array_violations(const PartialArray& a, std::size_t* pairs_checked = nullptr);

PartialArray unwind(const QoHandle& qo, const std::vector<VTerm>& bad_prefix, unsigned depth, bool starred);

std::string vterm_str(const QoHandle& qo, const VTerm& x);

}  // namespace wqo
