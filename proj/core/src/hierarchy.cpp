#include "wqo/hierarchy.hpp"

#include <algorithm>
#include <set>

#include "wqo/error.hpp"

namespace wqo {

// ---- VTerm ---------------------------------------------------------------

VTerm VTerm::ur(Element e) {
  std::size_t h = e.hash() * 0x9e3779b97f4a7c15ull + 1;
  return VTerm(std::make_shared<const Node>(Node{true, std::move(e), {}, 0, h}));
}

VTerm VTerm::set(std::vector<VTerm> members) {
  if (members.empty()) throw InputError("empty set is not a term");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::size_t d = 0, h = 0x51ed27u + members.size();
  for (const auto& m : members) {
    d = std::max(d, m.depth());
    h = h * 1000003u ^ m.hash();
  }
  return VTerm(std::make_shared<const Node>(Node{false, Element(), std::move(members), d + 1, h}));
}

const Element& VTerm::element() const {
  if (!n_->ur) throw InputError("term is a set");
  return n_->e;
}

const std::vector<VTerm>& VTerm::members() const {
  if (n_->ur) throw InputError("term is an urelement");
  return n_->members;
}

std::strong_ordering VTerm::operator<=>(const VTerm& o) const {
  if (n_ == o.n_) return std::strong_ordering::equal;
  if (n_->ur != o.n_->ur) return n_->ur ? std::strong_ordering::less : std::strong_ordering::greater;
  if (n_->ur) return n_->e <=> o.n_->e;
  const auto& a = n_->members;
  const auto& b = o.n_->members;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return a.size() <=> b.size();
}

bool VTerm::operator==(const VTerm& o) const {
  if (n_ == o.n_) return true;
  if (n_->hash != o.n_->hash) return false;
  return (*this <=> o) == 0;
}

// ---- rank, supp ----------------------------------------------------------

std::size_t v_rank(const VTerm& x) {
  if (x.is_ur()) throw InputError("rank undefined on urelements");
  std::size_t r = 0;
  for (const auto& m : x.members())
    if (!m.is_ur()) r = std::max(r, v_rank(m) + 1);
  return r;
}

namespace {

void collect_supp(const VTerm& x, std::set<Element>& out) {
  if (x.is_ur()) {
    out.insert(x.element());
    return;
  }
  for (const auto& m : x.members()) collect_supp(m, out);
}

}  // namespace

std::vector<Element> supp(const VTerm& x) {
  std::set<Element> s;
  collect_supp(x, s);
  return {s.begin(), s.end()};
}

// ---- comparisons ---------------------------------------------------------

bool lesssim(const QoHandle& qo, const VTerm& x, const VTerm& y, bool starred) {
  if (x.is_ur() && y.is_ur()) return leq(qo, x.element(), y.element());
  if (x.is_ur()) {
    for (const auto& b : y.members())
      if (lesssim(qo, x, b, starred)) return true;
    return false;
  }
  if (y.is_ur()) {
    if (!starred) return false;
    for (const auto& a : x.members())
      if (!lesssim(qo, a, y, starred)) return false;
    return true;
  }
  for (const auto& a : x.members()) {
    bool found = false;
    for (const auto& b : y.members())
      if (lesssim(qo, a, b, starred)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

VTerm sim_minimize(const QoHandle& qo, const VTerm& x, bool starred) {
  if (x.is_ur()) return x;
  std::vector<VTerm> ms;
  for (const auto& m : x.members()) ms.push_back(sim_minimize(qo, m, starred));
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<VTerm> keep;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ms.size() && !dominated; ++j) {
      if (i == j || !lesssim(qo, ms[i], ms[j], starred)) continue;
      dominated = !lesssim(qo, ms[j], ms[i], starred) || j < i;
    }
    if (!dominated) keep.push_back(ms[i]);
  }
  return VTerm::set(std::move(keep));
}

VTerm truncate_downset(const CoUpset& d, std::uint64_t bound) {
  std::vector<VTerm> ms;
  auto carrier = finite_carrier(d.base());
  for (std::uint64_t n = 0; n < bound; ++n) {
    if (carrier && n >= carrier->size()) break;
    Element p = carrier ? (*carrier)[n] : enumerate(d.base(), n);
    if (d.contains(p)) ms.push_back(VTerm::ur(p));
  }
  if (ms.empty()) throw BoundError("truncation too small: no member among the first " + std::to_string(bound) + " points");
  return VTerm::set(std::move(ms));
}

std::vector<VTerm> vterm_universe(const std::vector<Element>& urs, unsigned depth, std::size_t width) {
  std::vector<VTerm> level;
  for (const auto& e : urs) level.push_back(VTerm::ur(e));
  std::vector<VTerm> base = level;
  for (unsigned d = 1; d <= depth; ++d) {
    std::vector<VTerm> next = base;
    const std::size_t n = level.size();
    std::size_t w = std::min(width, n);
    // Subsets of `level` with 1..w elements, by combination index.
    std::vector<std::size_t> idx;
    for (std::size_t k = 1; k <= w; ++k) {
      idx.resize(k);
      for (std::size_t i = 0; i < k; ++i) idx[i] = i;
      while (true) {
        std::vector<VTerm> ms;
        for (auto i : idx) ms.push_back(level[i]);
        next.push_back(VTerm::set(std::move(ms)));
        std::size_t p = k;
        while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
        if (p == 0) break;
        ++idx[p - 1];
        for (std::size_t i = p; i < k; ++i) idx[i] = idx[i - 1] + 1;
      }
    }
    level = std::move(next);
  }
  return level;
}

std::optional<std::pair<std::size_t, std::size_t>> check_bad_prefix(const QoHandle& qo, const std::vector<VTerm>& prefix,
                                                                    bool starred) {
  for (std::size_t j = 1; j < prefix.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (lesssim(qo, prefix[i], prefix[j], starred)) return std::make_pair(i, j);
  return std::nullopt;
}

// ---- unwinding -----------------------------------------------------------

bool array_leq(const PartialArray& a, const ArrayValue& x, const ArrayValue& y) {
  if (!leq(a.qo, x.q, y.q)) return false;
  return a.starred || x.tag <= y.tag;
}

std::vector<std::pair<Tuple, Tuple>> array_violations(const PartialArray& a, std::size_t* pairs_checked) {
  std::vector<std::pair<Tuple, Tuple>> bad;
  std::size_t count = 0;
  for (const auto& s : a.front)
    for (const auto& t : a.front) {
      if (!triangleleft(s, t)) continue;
      ++count;
      if (array_leq(a, a.values.at(s), a.values.at(t))) bad.emplace_back(s, t);
    }
  if (pairs_checked) *pairs_checked = count;
  return bad;
}

namespace {

// Value of h: either a point of Q (x omega) or a set term.
struct HVal {
  bool point = false;
  Element q;
  std::uint64_t tag = 0;
  VTerm set = VTerm::ur(Element());
};

std::vector<Element> supp_in_enum_order(const QoHandle& qo, const VTerm& x) {
  auto s = supp(x);
  std::stable_sort(s.begin(), s.end(), [&](const Element& a, const Element& b) {
    auto ia = enumeration_index(qo, a), ib = enumeration_index(qo, b);
    if (ia && ib) return *ia < *ib;
    return a < b;
  });
  return s;
}

void for_each_increasing(std::uint32_t n, std::size_t len, const std::function<void(const Tuple&)>& fn) {
  if (len == 0 || len > n) return;
  Tuple t(len);
  for (std::size_t i = 0; i < len; ++i) t[i] = static_cast<std::uint32_t>(i);
  while (true) {
    fn(t);
    std::size_t p = len;
    while (p > 0 && t[p - 1] == n - len + p - 1) --p;
    if (p == 0) return;
    ++t[p - 1];
    for (std::size_t i = p; i < len; ++i) t[i] = t[i - 1] + 1;
  }
}

}  // namespace

PartialArray unwind(const QoHandle& qo, const std::vector<VTerm>& prefix, unsigned depth, bool starred) {
  if (auto off = check_bad_prefix(qo, prefix, starred)) throw NotBadError(off->first, off->second);
  if (depth == 0) throw InputError("depth must be positive");

  PartialArray out;
  out.qo = qo;
  out.starred = starred;
  std::size_t rank = 0;
  for (const auto& x : prefix)
    if (!x.is_ur()) rank = std::max(rank, v_rank(x) + 1);
  out.rank_note = Ordinal(rank);

  const auto n = static_cast<std::uint32_t>(prefix.size());
  std::map<Tuple, HVal> h;

  for (std::uint32_t i = 0; i < n; ++i) {
    HVal v;
    if (prefix[i].is_ur()) {
      v.point = true;  // clause 1
      v.q = prefix[i].element();
    } else {
      v.set = prefix[i];  // clause 2
    }
    h[{i}] = v;
  }

  for (std::size_t len = 2; len <= depth; ++len) {
    for_each_increasing(n, len, [&](const Tuple& t) {
      const HVal& prev = h.at(Tuple(t.begin(), t.end() - 1));
      const HVal& next = h.at(Tuple(t.begin() + 1, t.end()));
      const std::uint64_t k = len - 1;
      HVal v;
      if (prev.point) {  // clause 3
        h[t] = prev;
        return;
      }
      // clause 4: least urelement of the support not below the shifted value
      for (const auto& q : supp_in_enum_order(qo, prev.set)) {
        bool fires;
        if (next.point)
          fires = starred ? !leq(qo, q, next.q) : true;
        else
          fires = !lesssim(qo, VTerm::ur(q), next.set, starred);
        if (fires) {
          v.point = true;
          v.q = q;
          v.tag = starred ? 0 : k;
          h[t] = v;
          return;
        }
      }
      // clause 5: least member (a set, in the plain variant) below nothing in the shifted value
      for (const auto& x : prev.set.members()) {
        if (!starred && x.is_ur()) continue;
        bool ok = true;
        if (!next.point)
          for (const auto& y : next.set.members())
            if (lesssim(qo, x, y, starred)) {
              ok = false;
              break;
            }
        if (ok) {
          if (x.is_ur()) {
            v.point = true;
            v.q = x.element();
          } else {
            v.set = x;
          }
          h[t] = v;
          return;
        }
      }
      throw BoundError("truncation too small: no unwinding clause applies at " + tuple_str(t));
    });
  }

  // Front: minimal tuples whose value is a point.
  for (const auto& [t, v] : h) {
    if (!v.point) {
      if (t.size() == depth) out.uncovered.push_back(t);
      continue;
    }
    bool minimal = true;
    for (std::size_t l = 1; l < t.size() && minimal; ++l)
      if (h.at(Tuple(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(l))).point) minimal = false;
    if (!minimal) continue;
    out.front.push_back(t);
    out.values[t] = ArrayValue{v.q, v.tag};
  }
  out.violations = array_violations(out, &out.pairs_checked);
  return out;
}

std::string vterm_str(const QoHandle& qo, const VTerm& x) {
  if (x.is_ur()) return element_str(qo, x.element());
  std::string s = "{";
  for (std::size_t i = 0; i < x.members().size(); ++i) s += (i ? ", " : "") + vterm_str(qo, x.members()[i]);
  return s + "}";
}

}  // namespace wqo
