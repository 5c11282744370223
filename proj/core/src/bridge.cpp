#include "wqo/bridge.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "wqo/error.hpp"

namespace wqo {

SeqTerm iota(const QoHandle& qo, const VTerm& x) {
  if (x.is_ur()) return SeqTerm::atom(x.element());
  std::vector<SeqTerm> blocks;
  for (const auto& m : x.members()) blocks.push_back(iota(qo, m));
  return SeqTerm::rep(std::move(blocks));
}

namespace {

struct EtaInfo {
  VTerm eta;
  std::set<VTerm> pe;
};

EtaInfo eta_rec(const SeqTerm& u, std::unordered_map<const void*, EtaInfo>& memo) {
  if (auto it = memo.find(u.id()); it != memo.end()) return it->second;
  EtaInfo r{VTerm::ur(Element()), {}};
  switch (u.kind()) {
    case SeqTerm::Kind::Atom:
      r.eta = VTerm::ur(u.element());
      r.pe.insert(r.eta);
      break;
    case SeqTerm::Kind::Cat:
      for (const auto& p : u.children()) {
        auto c = eta_rec(p, memo);
        r.pe.insert(c.pe.begin(), c.pe.end());
        r.eta = c.eta;
      }
      break;
    case SeqTerm::Kind::Rep: {
      std::set<VTerm> all;
      for (const auto& b : u.children()) {
        auto c = eta_rec(b, memo);
        all.insert(c.pe.begin(), c.pe.end());
      }
      r.eta = VTerm::set(std::vector<VTerm>(all.begin(), all.end()));
      r.pe = std::move(all);
      r.pe.insert(r.eta);
      break;
    }
  }
  memo.emplace(u.id(), r);
  return r;
}

}  // namespace

VTerm eta(const QoHandle&, const SeqTerm& u, bool) {
  std::unordered_map<const void*, EtaInfo> memo;
  return eta_rec(u, memo).eta;
}

std::vector<VTerm> prefix_eta_set(const QoHandle&, const SeqTerm& u) {
  std::unordered_map<const void*, EtaInfo> memo;
  auto r = eta_rec(u, memo);
  return {r.pe.begin(), r.pe.end()};
}

namespace {

struct Direct {
  const QoHandle& qo;
  bool starred;
  std::unordered_map<SeqTerm, VTerm, SeqTermHash> memo;

  // eta-values of the proper nonempty initial segments of t.
  void proper_prefixes(const SeqTerm& t, std::set<VTerm>& out) {
    switch (t.kind()) {
      case SeqTerm::Kind::Atom:
        return;
      case SeqTerm::Kind::Cat: {
        const auto& cs = t.children();
        for (std::size_t i = 0; i < cs.size(); ++i) {
          proper_prefixes(cs[i], out);
          if (i + 1 < cs.size()) out.insert(value(cs[i]));
        }
        return;
      }
      case SeqTerm::Kind::Rep:
        for (const auto& b : t.children()) {
          proper_prefixes(b, out);
          out.insert(value(b));
        }
        return;
    }
  }

  VTerm value(const SeqTerm& u) {
    if (auto it = memo.find(u); it != memo.end()) return it->second;
    VTerm r = VTerm::ur(Element());
    if (u.length().is_successor()) {
      r = VTerm::ur(seq_at(u, u.length().pred()));
    } else {
      std::vector<VTerm> cands;
      for (const auto& tc : tail_classes(u)) {
        std::set<VTerm> s;
        proper_prefixes(tc.tail, s);
        cands.push_back(VTerm::set(std::vector<VTerm>(s.begin(), s.end())));
      }
      bool found = false;
      for (const auto& c : cands) {
        bool least = true;
        for (const auto& d : cands)
          if (!lesssim(qo, c, d, starred)) {
            least = false;
            break;
          }
        if (least) {
          r = c;
          found = true;
          break;
        }
      }
      if (!found) throw Error("eta: no minimum over tail classes of " + seq_str(qo, u));
    }
    memo.emplace(u, r);
    return r;
  }
};

}  // namespace

VTerm eta_direct(const QoHandle& qo, const SeqTerm& u, bool starred) {
  Direct d{qo, starred, {}};
  return d.value(u);
}

bool roundtrip_check(const QoHandle& qo, const VTerm& x, bool starred) {
  return sim_equiv(qo, eta(qo, iota(qo, x), starred), x, starred);
}

bool cofembeds(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak, bool cross_check) {
  bool via_eta = lesssim(qo, eta(qo, u, weak), eta(qo, v, weak), weak);
  if (cross_check && via_eta != cofembeds_direct(qo, u, v, weak))
    throw Error("cofembeds: eta comparison and tail search disagree on " + seq_str(qo, u) + " vs " + seq_str(qo, v));
  return via_eta;
}

namespace {

struct Winder {
  const TameArray& g;
  std::uint32_t trunc;
  std::map<Tuple, VTerm> memo;

  VTerm h(const Tuple& s) {
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    VTerm r = VTerm::ur(Element());
    if (s.size() == g.front.k) {
      r = VTerm::ur(array_value(g, s));
    } else {
      std::vector<VTerm> ms;
      for (std::uint32_t m = s.back() + 1; m <= trunc; ++m) {
        if (!g.front.in_carrier(m)) continue;
        Tuple t = s;
        t.push_back(m);
        ms.push_back(h(t));
      }
      if (ms.empty()) throw BoundError("truncation too small: no extension of " + tuple_str(s) + " up to " + std::to_string(trunc));
      r = VTerm::set(std::move(ms));
    }
    memo.emplace(s, r);
    return r;
  }
};

}  // namespace

VTerm wind(const TameArray& g, std::uint32_t n, std::uint32_t trunc) {
  check_tame(g);
  if (!g.front.in_carrier(n)) throw InputError("index " + std::to_string(n) + " outside the front's carrier");
  Winder w{g, trunc, {}};
  return w.h(Tuple{n});
}

}  // namespace wqo
