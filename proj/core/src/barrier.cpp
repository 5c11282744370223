#include "wqo/barrier.hpp"

#include <algorithm>
#include <set>

#include "wqo/error.hpp"

namespace wqo {

// ---- fronts --------------------------------------------------------------

bool FrontTemplate::in_carrier(std::uint32_t n) const {
  return !carrier || std::binary_search(carrier->begin(), carrier->end(), n);
}

bool FrontTemplate::contains(const Tuple& s) const {
  if (s.size() != k || !is_increasing(s)) return false;
  for (auto x : s)
    if (!in_carrier(x)) return false;
  return true;
}

int FrontTemplate::rank(const Tuple& s) const {
  if (s.size() >= k) throw InputError("rank is defined on proper prefixes of front elements only");
  return static_cast<int>(k) - 1 - static_cast<int>(s.size());
}

std::vector<std::uint32_t> FrontTemplate::carrier_upto(std::uint32_t bound) const {
  std::vector<std::uint32_t> out;
  if (!carrier) {
    for (std::uint32_t i = 0; i <= bound; ++i) out.push_back(i);
    return out;
  }
  for (auto x : *carrier)
    if (x <= bound) out.push_back(x);
  return out;
}

FrontTemplate uniform_front(unsigned k) {
  if (k == 0) throw InputError("uniform front needs k >= 1");
  return FrontTemplate{k, std::nullopt};
}

FrontTemplate restrict_front(const FrontTemplate& f, std::vector<std::uint32_t> h) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  std::vector<std::uint32_t> c;
  for (auto x : h)
    if (f.in_carrier(x)) c.push_back(x);
  return FrontTemplate{f.k, c};
}

FrontTemplate fprime_front(const FrontTemplate& f) { return FrontTemplate{2 * f.k - 1, f.carrier}; }

// ---- tame arrays ---------------------------------------------------------

std::vector<std::uint32_t> abstraction_key(Abstraction a, unsigned param, const Tuple& s) {
  std::vector<std::uint32_t> key;
  key.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (a == Abstraction::Mod) {
      key.push_back(s[i] % param);
    } else {
      std::uint32_t gap = i == 0 ? s[0] + 1 : s[i] - s[i - 1];
      key.push_back(std::min<std::uint32_t>(gap, param));
    }
  }
  return key;
}

namespace {

void for_each_key(Abstraction a, unsigned param, unsigned k, const std::function<void(const std::vector<std::uint32_t>&)>& fn) {
  const std::uint32_t lo = a == Abstraction::Mod ? 0 : 1;
  const std::uint32_t hi = a == Abstraction::Mod ? param - 1 : param;
  std::vector<std::uint32_t> key(k, lo);
  while (true) {
    fn(key);
    std::size_t i = 0;
    while (i < k && key[i] == hi) key[i++] = lo;
    if (i == k) return;
    ++key[i];
  }
}

}  // namespace

void check_tame(const TameArray& g) {
  const auto& v = g.valuer;
  const unsigned k = g.front.k;
  if (!g.qo.valid()) throw InputError("non-tame array: no qo");
  switch (v.kind) {
    case Valuer::Kind::RadoPair:
      if (g.qo.kind() != QoHandle::Kind::Rado || k < 2) throw InputError("non-tame array: rado-pair needs Rado and k >= 2");
      return;
    case Valuer::Kind::ShiftPair:
      if (g.qo.kind() != QoHandle::Kind::Rado) throw InputError("non-tame array: shift-pair needs Rado");
      return;
    case Valuer::Kind::MinEntry:
      if (g.qo.kind() != QoHandle::Kind::Omega) throw InputError("non-tame array: min-entry needs omega");
      return;
    case Valuer::Kind::Constant:
      check_member(g.qo, v.constant);
      return;
    case Valuer::Kind::Table: {
      if (v.param == 0) throw InputError("non-tame array: abstraction parameter must be positive");
      for (const auto& [key, e] : v.table) {
        if (key.size() != k) throw InputError("non-tame array: table key of wrong length");
        check_member(g.qo, e);
      }
      for_each_key(v.abstraction, v.param, k, [&](const std::vector<std::uint32_t>& key) {
        if (!v.table.count(key)) {
          std::string s;
          for (auto x : key) s += (s.empty() ? "" : ",") + std::to_string(x);
          throw InputError("non-tame array: table misses key [" + s + "]");
        }
      });
      return;
    }
    case Valuer::Kind::Explicit:
      for (const auto& [t, e] : v.values) {
        if (t.size() != k || !is_increasing(t)) throw InputError("non-tame array: explicit tuple " + tuple_str(t) + " not in the front");
        check_member(g.qo, e);
      }
      return;
  }
}

Element array_value(const TameArray& g, const Tuple& s) {
  if (s.size() != g.front.k) throw InputError("tuple " + tuple_str(s) + " is not in the front");
  const auto& v = g.valuer;
  switch (v.kind) {
    case Valuer::Kind::RadoPair:
      return Element::pair(s[0], s[1]);
    case Valuer::Kind::ShiftPair:
      return Element::pair(s[0], s[0] + 1);
    case Valuer::Kind::MinEntry:
      return Element::natural(s[0]);
    case Valuer::Kind::Constant:
      return v.constant;
    case Valuer::Kind::Table: {
      auto it = v.table.find(abstraction_key(v.abstraction, v.param, s));
      if (it == v.table.end()) throw InputError("non-tame array: no value at " + tuple_str(s));
      return it->second;
    }
    case Valuer::Kind::Explicit: {
      auto it = v.values.find(s);
      if (it == v.values.end()) throw InputError("non-tame array: value undefined at " + tuple_str(s));
      return it->second;
    }
  }
  throw Error("unreachable");
}

std::optional<std::size_t> support_bound(const TameArray& g) {
  const auto& v = g.valuer;
  switch (v.kind) {
    case Valuer::Kind::RadoPair:
      return std::nullopt;
    case Valuer::Kind::ShiftPair:
    case Valuer::Kind::MinEntry:
    case Valuer::Kind::Constant:
      return 1;
    case Valuer::Kind::Table: {
      std::set<Element> s;
      for (const auto& [key, e] : v.table) s.insert(e);
      return s.size();
    }
    case Valuer::Kind::Explicit: {
      std::set<Element> s;
      for (const auto& [t, e] : v.values) s.insert(e);
      return s.size();
    }
  }
  return std::nullopt;
}

TameArray rado_array() {
  TameArray g{rado_qo(), uniform_front(2), {}};
  g.valuer.kind = Valuer::Kind::RadoPair;
  return g;
}

TameArray constant_array(const QoHandle& qo, const Element& q, unsigned k) {
  TameArray g{qo, uniform_front(k), {}};
  g.valuer.kind = Valuer::Kind::Constant;
  g.valuer.constant = q;
  return g;
}

TameArray min_entry_array(unsigned k) {
  TameArray g{omega_qo(), uniform_front(k), {}};
  g.valuer.kind = Valuer::Kind::MinEntry;
  return g;
}

TameArray shift_pair_array(unsigned k) {
  TameArray g{rado_qo(), uniform_front(k), {}};
  g.valuer.kind = Valuer::Kind::ShiftPair;
  return g;
}

// ---- badness -------------------------------------------------------------

namespace {

// Increasing len-subsets of `pool` (as tuples of pool entries), lexicographic.
// Stops early when fn returns false.
void for_each_subset(const std::vector<std::uint32_t>& pool, std::size_t len, const std::function<bool(const Tuple&)>& fn) {
  const std::size_t n = pool.size();
  if (len == 0 || len > n) return;
  std::vector<std::size_t> idx(len);
  for (std::size_t i = 0; i < len; ++i) idx[i] = i;
  Tuple t(len);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) t[i] = pool[idx[i]];
    if (!fn(t)) return;
    std::size_t p = len;
    while (p > 0 && idx[p - 1] == n - len + p - 1) --p;
    if (p == 0) return;
    ++idx[p - 1];
    for (std::size_t i = p; i < len; ++i) idx[i] = idx[i - 1] + 1;
  }
}

}  // namespace

BadCheck is_bad_on(const TameArray& g, std::uint32_t bound) {
  check_tame(g);
  BadCheck r;
  r.bound = bound;
  const unsigned k = g.front.k;
  // For [H]^k the pairs s <| t are exactly s = u[0..k), t = u[1..k] for an
  // increasing (k+1)-tuple u.
  for_each_subset(g.front.carrier_upto(bound), k + 1, [&](const Tuple& u) {
    Tuple s(u.begin(), u.end() - 1), t(u.begin() + 1, u.end());
    ++r.pairs_checked;
    if (leq(g.qo, array_value(g, s), array_value(g, t))) {
      r.bad = false;
      r.counterexample = std::make_pair(s, t);
      return false;
    }
    return true;
  });
  return r;
}

// ---- Ramsey --------------------------------------------------------------

namespace {

struct RamseySearch {
  unsigned k;
  const Coloring& c;
  std::size_t m;
  const std::vector<std::uint32_t>& pool;
  std::vector<std::uint32_t> h;
  int color = -1;

  // Colors of all k-subsets with maximum x agree with `col` (or fix it).
  bool extend_ok(std::uint32_t x, int& col) const {
    if (h.size() + 1 < k) return true;
    bool ok = true;
    Tuple t;
    for_each_subset(h, k - 1, [&](const Tuple& s) {
      t = s;
      t.push_back(x);
      int v = c(t);
      if (col < 0)
        col = v;
      else if (v != col)
        ok = false;
      return ok;
    });
    if (k == 1) {
      int v = c(Tuple{x});
      if (col < 0)
        col = v;
      else if (v != col)
        ok = false;
    }
    return ok;
  }

  bool dfs(std::size_t from) {
    if (h.size() == m) return true;
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (h.size() + (pool.size() - i) < m) return false;
      int col = color;
      if (!extend_ok(pool[i], col)) continue;
      int saved = color;
      color = col;
      h.push_back(pool[i]);
      if (dfs(i + 1)) return true;
      h.pop_back();
      color = saved;
    }
    return false;
  }
};

std::optional<std::vector<std::uint32_t>> ramsey_over(unsigned k, const Coloring& c, std::size_t m,
                                                      const std::vector<std::uint32_t>& pool, int* color) {
  if (k == 0) throw InputError("k must be positive");
  RamseySearch s{k, c, m, pool, {}, -1};
  if (!s.dfs(0)) return std::nullopt;
  if (color) *color = s.color < 0 ? 0 : s.color;
  return s.h;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> ramsey_homogeneous(unsigned k, const Coloring& c, std::size_t m,
                                                             std::uint32_t bound, int* color) {
  std::vector<std::uint32_t> pool;
  for (std::uint32_t i = 0; i < bound; ++i) pool.push_back(i);
  return ramsey_over(k, c, m, pool, color);
}

Coloring fprime_coloring(const TameArray& g) {
  const unsigned k = g.front.k;
  return [g, k](const Tuple& t) {
    if (t.size() != 2 * k - 1) throw InputError("tuple not in the derived front");
    Tuple s0{t[0]}, s1{t[0]};
    for (unsigned i = 1; i < k; ++i) s0.push_back(t[i]);
    for (unsigned i = k; i < 2 * k - 1; ++i) s1.push_back(t[i]);
    return array_value(g, s0) == array_value(g, s1) ? 0 : 1;
  };
}

ExtractVerdict extract_bad_sequence(const TameArray& g, std::uint32_t bound, std::size_t target) {
  check_tame(g);
  auto support = support_bound(g);
  if (!support) throw InputError("supports not finite");
  const unsigned k = g.front.k;
  const std::size_t m = target ? target : 2 * k + 1;
  if (m < 2 * k - 1) throw InputError("target smaller than the derived front size");

  ExtractVerdict out;
  out.bound = bound;
  out.support = support;
  std::vector<std::uint32_t> pool;
  for (auto x : g.front.carrier_upto(bound == 0 ? 0 : bound - 1))
    if (x < bound) pool.push_back(x);
  int color = 0;
  auto h = ramsey_over(2 * k - 1, fprime_coloring(g), m, pool, &color);
  if (!h) throw BoundError("bound too small: no homogeneous set of size " + std::to_string(m) + " below " + std::to_string(bound));
  out.homogeneous = *h;
  out.color = color;
  const auto& H = *h;

  auto value_at = [&](std::size_t i, std::size_t j) {
    // {H[i]} u H[j .. j+k-2]
    Tuple s{H[i]};
    for (std::size_t l = 0; l + 1 < k; ++l) s.push_back(H[j + l]);
    return s;
  };

  if (color == 1) {
    out.kind = ExtractVerdict::Kind::Pigeonhole;
    std::set<Element> vals;
    for (std::size_t j = 1; j + k - 1 <= H.size() && k > 1; j += k - 1) vals.insert(array_value(g, value_at(0, j)));
    out.distinct_values = vals.size();
    return out;
  }

  for (std::size_t i = 0; i + k - 1 < H.size(); ++i) out.fprime.emplace_back(H[i], array_value(g, value_at(i, i + 1)));
  for (std::size_t i = 0; i < out.fprime.size(); ++i)
    for (std::size_t j = i + 1; j + k - 1 < H.size() && j < out.fprime.size(); ++j) {
      if (!leq(g.qo, out.fprime[i].second, out.fprime[j].second)) continue;
      Tuple sigma = value_at(i, j);
      Tuple tau(H.begin() + static_cast<std::ptrdiff_t>(j), H.begin() + static_cast<std::ptrdiff_t>(j + k));
      Element gs = array_value(g, sigma), gt = array_value(g, tau);
      if (!triangleleft(sigma, tau) || !leq(g.qo, gs, gt)) throw Error("internal: homogeneity did not transfer the ascending pair");
      out.kind = ExtractVerdict::Kind::Goodness;
      out.sigma = sigma;
      out.tau = tau;
      out.g_sigma = gs;
      out.g_tau = gt;
      return out;
    }
  out.kind = ExtractVerdict::Kind::StillBad;
  return out;
}

}  // namespace wqo
