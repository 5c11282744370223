#include "wqo/downset.hpp"

#include <algorithm>

#include "wqo/error.hpp"

namespace wqo {

std::vector<Element> normalize_generators(const QoHandle& base, std::vector<Element> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Element> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
      if (i == j || !leq(base, gens[j], gens[i])) continue;
      // Strictly below, or an equivalent generator that sorts earlier.
      dominated = !leq(base, gens[i], gens[j]) || j < i;
    }
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

std::optional<Element> find_member(const QoHandle& base, const std::vector<Element>& gens, std::uint64_t bound) {
  auto inside = [&](const Element& p) {
    for (const auto& g : gens)
      if (leq(base, g, p)) return false;
    return true;
  };
  if (auto c = finite_carrier(base)) {
    for (const auto& p : *c)
      if (inside(p)) return p;
    return std::nullopt;
  }
  for (std::uint64_t n = 0; n < bound; ++n) {
    Element p = enumerate(base, n);
    if (inside(p)) return p;
  }
  return std::nullopt;
}

CoUpset::CoUpset(QoHandle base, std::vector<Element> gens, Unchecked) : base_(std::move(base)), gens_(std::move(gens)) {}

CoUpset::CoUpset(QoHandle base, std::vector<Element> generators, std::uint64_t nonempty_bound) : base_(std::move(base)) {
  for (const auto& g : generators) check_member(base_, g);
  gens_ = normalize_generators(base_, std::move(generators));
  if (!find_member(base_, gens_, nonempty_bound)) throw InputError("empty downset (no member found within bound)");
}

std::optional<CoUpset> try_couset(const QoHandle& base, std::vector<Element> generators, std::uint64_t nonempty_bound) {
  for (const auto& g : generators) check_member(base, g);
  auto gens = normalize_generators(base, std::move(generators));
  if (!find_member(base, gens, nonempty_bound)) return std::nullopt;
  return CoUpset(base, std::move(gens), CoUpset::Unchecked{});
}

bool CoUpset::contains(const Element& p) const {
  for (const auto& g : gens_)
    if (leq(base_, g, p)) return false;
  return true;
}

std::strong_ordering CoUpset::operator<=>(const CoUpset& o) const {
  if (auto c = gens_.size() <=> o.gens_.size(); c != 0) return c;
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (auto c = gens_[i] <=> o.gens_[i]; c != 0) return c;
  if (base_ == o.base_) return std::strong_ordering::equal;
  return qo_str(base_) <=> qo_str(o.base_);
}

bool couset_subset(const CoUpset& x, const CoUpset& y) {
  if (!(x.base() == y.base())) throw InputError("base mismatch");
  for (const auto& b : y.generators()) {
    bool covered = false;
    for (const auto& a : x.generators())
      if (leq(x.base(), a, b)) {
        covered = true;
        break;
      }
    if (!covered) return false;
  }
  return true;
}

CoUpset rado_bad_downset(std::uint64_t n) {
  // n = 0 denotes {(0,j)}, the complement of the upset of (1,2) and (2,3).
  if (n == 0) return CoUpset(rado_qo(), {Element::pair(1, 2), Element::pair(2, 3)});
  std::vector<Element> gens;
  for (std::uint64_t i = 0; i < n; ++i) gens.push_back(Element::pair(i, n));
  return CoUpset(rado_qo(), gens);
}

DescentChain descend_chain(const std::vector<CoUpset>& prefix) {
  DescentChain out;
  if (prefix.empty()) return out;
  const QoHandle& base = prefix.front().base();
  for (const auto& x : prefix)
    if (!(x.base() == base)) throw InputError("base mismatch");
  for (std::size_t i = 0; i < prefix.size(); ++i)
    for (std::size_t j = i + 1; j < prefix.size(); ++j)
      if (couset_subset(prefix[i], prefix[j])) throw NotBadError(i, j);

  out.level = next_level(base, 1);
  std::vector<Element> xs;
  for (const auto& x : prefix) xs.push_back(Element::set(std::make_shared<const CoUpset>(x)));
  std::vector<Element> gens;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    gens.push_back(xs[i]);
    out.chain.emplace_back(out.level, gens);
  }
  out.entry_witness = xs[0];
  if (out.chain[0].contains(xs[0])) throw Error("descent certificate failed at entry step");
  for (std::size_t i = 1; i < xs.size(); ++i) {
    const CoUpset& upper = out.chain[i - 1];
    const CoUpset& lower = out.chain[i];
    if (!upper.contains(xs[i]) || lower.contains(xs[i]) || !couset_subset(lower, upper))
      throw Error("descent certificate failed at step " + std::to_string(i));
    out.steps.push_back(DescentStep{i - 1, xs[i]});
  }
  return out;
}

}  // namespace wqo
