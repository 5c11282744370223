#include "wqo/sequence.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "qo_impl.hpp"
#include "wqo/error.hpp"

namespace wqo {

// ---- terms ---------------------------------------------------------------

namespace {

std::size_t mix(std::size_t h, std::size_t v) { return (h ^ v) * 0x100000001b3ull + (h >> 29); }

}  // namespace

SeqTerm SeqTerm::atom(Element e) {
  std::size_t h = mix(0xa70f, e.hash());
  return SeqTerm(std::make_shared<const Node>(Node{Kind::Atom, std::move(e), {}, Ordinal(1), Ordinal(1), h, 1}));
}

SeqTerm SeqTerm::cat(std::vector<SeqTerm> parts) {
  std::vector<SeqTerm> flat;
  for (auto& p : parts) {
    if (p.kind() == Kind::Cat)
      flat.insert(flat.end(), p.children().begin(), p.children().end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.empty()) throw InputError("empty concatenation");
  if (flat.size() == 1) return flat.front();
  Ordinal len;
  std::size_t h = 0xca7, count = 1;
  for (const auto& p : flat) {
    len = len + p.length();
    h = mix(h, p.hash());
    count += p.node_count();
  }
  return SeqTerm(std::make_shared<const Node>(Node{Kind::Cat, Element(), std::move(flat), len, len, h, count}));
}

SeqTerm SeqTerm::rep(std::vector<SeqTerm> blocks) {
  if (blocks.empty()) throw InputError("Rep needs at least one block");
  Ordinal round;
  std::size_t h = 0x4e9, count = 1;
  for (const auto& b : blocks) {
    round = round + b.length();
    h = mix(h, b.hash());
    count += b.node_count();
  }
  Ordinal len = Ordinal::omega_pow(round.leading_exponent() + Ordinal(1));
  return SeqTerm(std::make_shared<const Node>(Node{Kind::Rep, Element(), std::move(blocks), len, round, h, count}));
}

const Element& SeqTerm::element() const {
  if (!is_atom()) throw InputError("term is not an atom");
  return n_->e;
}

std::strong_ordering SeqTerm::operator<=>(const SeqTerm& o) const {
  if (n_ == o.n_) return std::strong_ordering::equal;
  if (auto c = n_->kind <=> o.n_->kind; c != 0) return c;
  if (n_->kind == Kind::Atom) return n_->e <=> o.n_->e;
  const auto& a = n_->children;
  const auto& b = o.n_->children;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return a.size() <=> b.size();
}

bool SeqTerm::operator==(const SeqTerm& o) const {
  if (n_ == o.n_) return true;
  if (n_->hash != o.n_->hash) return false;
  return (*this <=> o) == 0;
}

// ---- positions -----------------------------------------------------------

namespace {

// pos = round * r + delta with delta < round.
std::pair<std::uint64_t, Ordinal> split_rounds(const Ordinal& round, const Ordinal& pos) {
  if (pos < round) return {0, pos};
  std::uint64_t c = round.leading_coefficient();
  std::uint64_t r0 = pos.leading_coefficient() / c;
  for (std::uint64_t r : {r0, r0 - 1, r0 + 1}) {
    if (r == 0) continue;
    Ordinal lr = round.times(r);
    if (lr > pos) continue;
    Ordinal d = lr.minus_left_of(pos);
    if (d < round) return {r, d};
  }
  throw Error("internal: cannot split position " + pos.str() + " by round " + round.str());
}

// Index of the child holding `pos` (relative to the start of the children) and
// the offset of that child.
std::pair<std::size_t, Ordinal> locate_child(const std::vector<SeqTerm>& cs, const Ordinal& pos) {
  Ordinal off;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    Ordinal end = off + cs[i].length();
    if (pos < end) return {i, off};
    off = end;
  }
  throw InputError("position beyond the end of the term");
}

}  // namespace

Element seq_at(const SeqTerm& u0, const Ordinal& pos0) {
  if (pos0 >= u0.length()) throw InputError("position " + pos0.str() + " outside a term of length " + u0.length().str());
  const SeqTerm* u = &u0;
  Ordinal pos = pos0;
  while (true) {
    switch (u->kind()) {
      case SeqTerm::Kind::Atom:
        return u->element();
      case SeqTerm::Kind::Cat: {
        if (u->length().is_finite()) {
          std::uint64_t p = pos.finite_part();
          for (const auto& c : u->children()) {
            const std::uint64_t len = c.length().finite_part();
            if (p < len) {
              u = &c;
              break;
            }
            p -= len;
          }
          pos = Ordinal(p);
          break;
        }
        auto [i, off] = locate_child(u->children(), pos);
        pos = off.minus_left_of(pos);
        u = &u->children()[i];
        break;
      }
      case SeqTerm::Kind::Rep: {
        auto [r, d] = split_rounds(u->round_length(), pos);
        auto [i, off] = locate_child(u->children(), d);
        pos = off.minus_left_of(d);
        u = &u->children()[i];
        break;
      }
    }
  }
}

// ---- greedy embedding ----------------------------------------------------

class EmbedEngine {
 public:
  using Node = SeqTerm::Node;

  // A cursor into v is a stack of frames, bottom first; the remaining
  // sequence is the concatenation of the frames from top to bottom.
  //   Atom frame: that single atom (only kept by weak matching).
  //   Cat frame:  children[next..].
  //   Rep frame:  the Rep restarted at block `next`, forever.
  // `pos` is the position in v of the frame's first remaining item.
  struct Frame {
    const Node* node;
    std::uint32_t next;
    Ordinal pos;
  };
  using State = std::vector<Frame>;

  EmbedEngine(const QoHandle& qo, bool weak, EmbedWitness* wit)
      : qo_(qo), weak_(weak), wit_(wit), track_(wit != nullptr), scratch_(take()) {
    if (qo.kind() == QoHandle::Kind::Finite) {
      flat_ = qo.impl().leq_flat.data();
      flat_n_ = qo.impl().names.size();
    }
  }
  ~EmbedEngine() { give(std::move(scratch_)); }
  EmbedEngine(const EmbedEngine&) = delete;
  EmbedEngine& operator=(const EmbedEngine&) = delete;

  bool run(const SeqTerm& u, const SeqTerm& v) {
    if (track_) vlen_ = v.length();
    State st = take();
    st.push_back(Frame{v.n_.get(), 0, Ordinal()});
    std::size_t low = st.size();
    bool ok = consume(u.n_.get(), st, low, Ordinal());
    give(std::move(st));
    return ok;
  }

 private:
  // Cursor buffers are recycled per thread: embeds runs in tight loops.
  static std::vector<State>& pool() {
    thread_local std::vector<State> p;
    return p;
  }
  static State take() {
    auto& p = pool();
    if (p.empty()) {
      State s;
      s.reserve(8);
      return s;
    }
    State s = std::move(p.back());
    p.pop_back();
    s.clear();
    return s;
  }
  static void give(State&& s) {
    auto& p = pool();
    if (p.size() < 16) p.push_back(std::move(s));
  }

  bool le(const Element& a, const Element& b) const {
    if (flat_ && a.kind() == Element::Kind::Named && b.kind() == Element::Kind::Named && a.index() < flat_n_ &&
        b.index() < flat_n_)
      return flat_[a.index() * flat_n_ + b.index()] != 0;
    return leq(qo_, a, b);
  }

  enum class Found { No, Same, Changed };

  struct KeyHash {
    std::size_t operator()(const std::vector<std::uintptr_t>& k) const {
      std::size_t h = 0xcbf29ce484222325ull;
      for (auto x : k) h = mix(h, x);
      return h;
    }
  };
  using Key = std::vector<std::uintptr_t>;

  struct Memo {
    bool ok;
    State st;
    std::size_t low;
  };

  static Key key_of(std::uintptr_t head, const State& st) {
    Key k;
    k.reserve(2 * st.size() + 1);
    k.push_back(head);
    for (const auto& f : st) {
      k.push_back(reinterpret_cast<std::uintptr_t>(f.node));
      k.push_back(f.next);
    }
    return k;
  }

  void advance(Ordinal& pos, const Node* c) const {
    if (track_) pos = pos + c->length;
  }

  // Searches children[start..] (cyclically for a Rep) of n for an atom above q.
  // On success appends the continuation frames to `out`.
  bool scan(const Element& q, const Node* n, std::uint32_t start, const Ordinal& pos0, State& out, Ordinal& vpos) {
    Ordinal pos;
    if (track_) pos = pos0;
    const bool cyclic = n->kind == SeqTerm::Kind::Rep;
    const std::size_t m = n->children.size();
    const std::size_t steps = cyclic ? m : m - start;
    for (std::size_t t = 0; t < steps; ++t) {
      const std::size_t i = cyclic ? (start + t) % m : start + t;
      const Node* c = n->children[i].n_.get();
      const std::size_t mark = out.size();
      out.push_back(Frame{n, 0, Ordinal()});
      if (find_term(q, c, pos, out, vpos)) {
        const std::size_t nx = cyclic ? (i + 1) % m : i + 1;
        if (nx == m) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(mark));
        } else {
          out[mark].next = static_cast<std::uint32_t>(nx);
          if (track_) out[mark].pos = pos + c->length;
        }
        return true;
      }
      out.resize(mark);
      advance(pos, c);
    }
    return false;
  }

  bool find_term(const Element& q, const Node* n, const Ordinal& pos, State& out, Ordinal& vpos) {
    if (n->kind == SeqTerm::Kind::Atom) {
      if (!le(q, n->e)) return false;
      if (track_) vpos = pos;
      if (weak_) out.push_back(Frame{n, 0, pos});
      return true;
    }
    return scan(q, n, 0, pos, out, vpos);
  }

  Found find_frame(const Element& q, const Frame& f, State& out, Ordinal& vpos) {
    if (f.node->kind == SeqTerm::Kind::Atom) {
      if (!le(q, f.node->e)) return Found::No;
      if (track_) vpos = f.pos;
      return weak_ ? Found::Same : Found::Changed;
    }
    return scan(q, f.node, f.next, f.pos, out, vpos) ? Found::Changed : Found::No;
  }

  bool match(const Element& q, State& st, std::size_t& low, Ordinal& vpos) {
    while (!st.empty()) {
      const std::size_t h = st.size() - 1;
      scratch_.clear();
      Found r = find_frame(q, st[h], scratch_, vpos);
      if (r == Found::Same) return true;
      low = std::min(low, h);
      st.pop_back();
      if (r == Found::Changed) {
        st.insert(st.end(), scratch_.begin(), scratch_.end());
        return true;
      }
    }
    return false;
  }

  bool consume(const Node* u, State& st, std::size_t& low, const Ordinal& upos) {
    switch (u->kind) {
      case SeqTerm::Kind::Atom: {
        Ordinal vpos;
        if (!match(u->e, st, low, vpos)) return false;
        if (wit_) wit_->pairs.push_back(EmbedPair{upos, vpos});
        return true;
      }
      case SeqTerm::Kind::Cat: {
        Ordinal p;
        if (track_) p = upos;
        for (const auto& c : u->children) {
          if (!consume(c.n_.get(), st, low, p)) return false;
          advance(p, c.n_.get());
        }
        return true;
      }
      case SeqTerm::Kind::Rep:
        break;
    }

    Key memo_key;
    if (!track_) {
      memo_key = key_of(reinterpret_cast<std::uintptr_t>(u), st);
      if (auto it = memo_.find(memo_key); it != memo_.end()) {
        st = it->second.st;
        low = std::min(low, it->second.low);
        return it->second.ok;
      }
    }
    const std::size_t low_in = low;
    std::size_t my_low = st.size();
    bool ok = consume_rep(u, st, my_low, upos);
    low = std::min(low_in, my_low);
    if (!track_) memo_.emplace(std::move(memo_key), Memo{ok, st, my_low});
    return ok;
  }

  // Runs the blocks of u round-robin until a configuration (block index,
  // cursor) repeats. Frames below the lowest one touched during the cycle
  // survive every further round; the frames above them are used up in the
  // limit, since the touched frame can only return to its old value by
  // cycling through a Rep of v. If nothing was touched the cursor is
  // stationary, which only happens for weak matching.
  bool consume_rep(const Node* u, State& st, std::size_t& low, const Ordinal& upos) {
    const std::size_t m = u->children.size();
    std::unordered_map<Key, std::size_t, KeyHash> seen;
    std::vector<std::size_t> lows;
    std::vector<std::size_t> marks;
    std::vector<Ordinal> ups;
    Ordinal p = upos;
    for (std::size_t t = 0;; ++t) {
      const std::size_t b = t % m;
      auto [it, fresh] = seen.emplace(key_of(b, st), t);
      if (!fresh) {
        const std::size_t t0 = it->second;
        std::size_t L = st.size();
        for (std::size_t s = t0; s < t; ++s) L = std::min(L, lows[s]);
        for (auto l : lows) low = std::min(low, l);
        const bool stationary = L >= st.size();
        if (!stationary) st.resize(L);
        if (wit_) {
          EmbedLoop lp;
          lp.first_pair = marks[t0];
          lp.end_pair = wit_->pairs.size();
          lp.u_begin = ups[t0];
          lp.u_end = upos + u->length;
          lp.stationary = stationary;
          lp.v_limit = st.empty() ? vlen_ : st.back().pos;
          wit_->loops.push_back(lp);
        }
        return true;
      }
      if (wit_) {
        marks.push_back(wit_->pairs.size());
        ups.push_back(p);
      }
      const Node* c = u->children[b].n_.get();
      std::size_t step_low = st.size();
      if (!consume(c, st, step_low, p)) {
        for (auto l : lows) low = std::min(low, l);
        low = std::min(low, step_low);
        return false;
      }
      lows.push_back(step_low);
      advance(p, c);
    }
  }

  const QoHandle& qo_;
  bool weak_;
  EmbedWitness* wit_;
  bool track_;
  Ordinal vlen_;
  State scratch_;
  const char* flat_ = nullptr;
  std::size_t flat_n_ = 0;
  std::unordered_map<Key, Memo, KeyHash> memo_;
};

bool embeds(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak) {
  EmbedEngine e(qo, weak, nullptr);
  return e.run(u, v);
}

std::optional<EmbedWitness> embed_witness(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak) {
  EmbedWitness w;
  w.weak = weak;
  w.pairs.reserve(std::min<std::size_t>(u.node_count(), 64));
  EmbedEngine e(qo, weak, &w);
  if (!e.run(u, v)) return std::nullopt;
  return w;
}

std::optional<std::string> check_witness(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, const EmbedWitness& w) {
  if (w.pairs.empty()) return "no matched pairs";
  if (!w.pairs.front().u_pos.is_zero()) return "first matched position of u is not 0";
  for (std::size_t k = 0; k < w.pairs.size(); ++k) {
    const auto& pr = w.pairs[k];
    if (pr.u_pos >= u.length()) return "pair " + std::to_string(k) + ": u position out of range";
    if (pr.v_pos >= v.length()) return "pair " + std::to_string(k) + ": v position out of range";
    if (!leq(qo, seq_at(u, pr.u_pos), seq_at(v, pr.v_pos))) return "pair " + std::to_string(k) + ": labels not ordered";
    if (k > 0) {
      const auto& pv = w.pairs[k - 1];
      if (!(pv.u_pos < pr.u_pos)) return "pair " + std::to_string(k) + ": u positions not increasing";
      if (w.weak ? pr.v_pos < pv.v_pos : !(pv.v_pos < pr.v_pos))
        return "pair " + std::to_string(k) + ": v positions not increasing";
    }
  }
  for (std::size_t k = 0; k < w.loops.size(); ++k) {
    const auto& lp = w.loops[k];
    std::string tag = "loop " + std::to_string(k) + ": ";
    if (lp.first_pair > lp.end_pair || lp.end_pair > w.pairs.size()) return tag + "bad pair range";
    if (!(lp.u_begin < lp.u_end) || lp.u_end > u.length()) return tag + "bad u range";
    if (lp.v_limit > v.length()) return tag + "v limit out of range";
    if (lp.stationary && !w.weak) return tag + "stationary loop in a strict witness";
    for (std::size_t i = lp.first_pair; i < lp.end_pair; ++i) {
      const auto& pr = w.pairs[i];
      if (pr.u_pos < lp.u_begin || pr.u_pos >= lp.u_end) return tag + "pair outside the u range";
      if (lp.stationary ? !(pr.v_pos == lp.v_limit) : !(pr.v_pos < lp.v_limit)) return tag + "pair beyond the v limit";
    }
    for (std::size_t i = lp.end_pair; i < w.pairs.size(); ++i) {
      const auto& pr = w.pairs[i];
      if (pr.u_pos < lp.u_end) return tag + "later pair re-enters the loop";
      if (pr.v_pos < lp.v_limit) return tag + "later pair below the v limit";
    }
  }
  if (u.length().is_finite() && w.loops.empty()) {
    if (w.pairs.size() != u.length().finite_part()) return "witness does not cover u";
  }
  return std::nullopt;
}

// ---- tails ---------------------------------------------------------------

namespace {

std::vector<SeqTerm> rotate_blocks(const std::vector<SeqTerm>& bs, std::size_t k) {
  std::vector<SeqTerm> r;
  r.reserve(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) r.push_back(bs[(k + i) % bs.size()]);
  return r;
}

}  // namespace

SeqTerm tail_at(const SeqTerm& u, const Ordinal& gamma) {
  if (gamma >= u.length()) throw InputError("cut not representable: " + gamma.str() + " >= " + u.length().str());
  if (gamma.is_zero()) return u;
  switch (u.kind()) {
    case SeqTerm::Kind::Atom:
      throw InputError("cut not representable");
    case SeqTerm::Kind::Cat: {
      auto [i, off] = locate_child(u.children(), gamma);
      std::vector<SeqTerm> parts{tail_at(u.children()[i], off.minus_left_of(gamma))};
      parts.insert(parts.end(), u.children().begin() + static_cast<std::ptrdiff_t>(i) + 1, u.children().end());
      return SeqTerm::cat(std::move(parts));
    }
    case SeqTerm::Kind::Rep: {
      auto [r, d] = split_rounds(u.round_length(), gamma);
      auto [i, off] = locate_child(u.children(), d);
      Ordinal inner = off.minus_left_of(d);
      if (inner.is_zero()) return SeqTerm::rep(rotate_blocks(u.children(), i));
      return SeqTerm::cat({tail_at(u.children()[i], inner), SeqTerm::rep(rotate_blocks(u.children(), i + 1))});
    }
  }
  throw Error("unreachable");
}

std::vector<TailClass> tail_classes(const SeqTerm& u) {
  std::vector<TailClass> out;
  std::unordered_set<SeqTerm, SeqTermHash> seen;
  auto add = [&](const Ordinal& cut, const SeqTerm& t) {
    if (seen.insert(t).second) out.push_back(TailClass{cut, t});
  };
  switch (u.kind()) {
    case SeqTerm::Kind::Atom:
      add(Ordinal(), u);
      break;
    case SeqTerm::Kind::Cat: {
      const auto& cs = u.children();
      Ordinal off;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        std::vector<SeqTerm> rest(cs.begin() + static_cast<std::ptrdiff_t>(i) + 1, cs.end());
        for (const auto& tc : tail_classes(cs[i])) {
          std::vector<SeqTerm> parts{tc.tail};
          parts.insert(parts.end(), rest.begin(), rest.end());
          add(off + tc.cut, SeqTerm::cat(std::move(parts)));
        }
        off = off + cs[i].length();
      }
      break;
    }
    case SeqTerm::Kind::Rep: {
      const auto& bs = u.children();
      Ordinal off;
      for (std::size_t i = 0; i < bs.size(); ++i) {
        add(off, SeqTerm::rep(rotate_blocks(bs, i)));
        SeqTerm after = SeqTerm::rep(rotate_blocks(bs, i + 1));
        for (const auto& tc : tail_classes(bs[i]))
          if (!tc.cut.is_zero()) add(off + tc.cut, SeqTerm::cat({tc.tail, after}));
        off = off + bs[i].length();
      }
      break;
    }
  }
  return out;
}

bool is_indecomposable(const QoHandle& qo, const SeqTerm& u, bool weak) {
  for (const auto& tc : tail_classes(u))
    if (!embeds(qo, u, tc.tail, weak)) return false;
  return true;
}

std::vector<SeqTerm> decompose(const QoHandle& qo, const SeqTerm& u, bool weak) {
  std::vector<SeqTerm> items = u.kind() == SeqTerm::Kind::Cat ? u.children() : std::vector<SeqTerm>{u};
  std::vector<SeqTerm> out;
  std::size_t j = items.size();
  while (j > 0) {
    std::size_t i = 0;
    for (; i + 1 < j; ++i) {
      SeqTerm cand = SeqTerm::cat(std::vector<SeqTerm>(items.begin() + static_cast<std::ptrdiff_t>(i),
                                                        items.begin() + static_cast<std::ptrdiff_t>(j)));
      if (is_indecomposable(qo, cand, weak)) break;
    }
    out.push_back(SeqTerm::cat(std::vector<SeqTerm>(items.begin() + static_cast<std::ptrdiff_t>(i),
                                                     items.begin() + static_cast<std::ptrdiff_t>(j))));
    j = i;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool cofembeds_direct(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak) {
  auto us = tail_classes(u);
  for (const auto& vt : tail_classes(v)) {
    bool found = false;
    for (const auto& ut : us)
      if (embeds(qo, ut.tail, vt.tail, weak)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

// ---- misc ----------------------------------------------------------------

namespace {

void unroll(const SeqTerm& u, std::size_t rounds, std::size_t max_len, std::vector<Element>& out) {
  switch (u.kind()) {
    case SeqTerm::Kind::Atom:
      if (out.size() >= max_len) throw BoundError("bound too small: unrolled word exceeds " + std::to_string(max_len));
      out.push_back(u.element());
      return;
    case SeqTerm::Kind::Cat:
      for (const auto& c : u.children()) unroll(c, rounds, max_len, out);
      return;
    case SeqTerm::Kind::Rep:
      for (std::size_t r = 0; r < rounds; ++r)
        for (const auto& c : u.children()) unroll(c, rounds, max_len, out);
      return;
  }
}

}  // namespace

std::vector<Element> seq_unroll(const SeqTerm& u, std::size_t rounds, std::size_t max_len) {
  std::vector<Element> out;
  unroll(u, rounds, max_len, out);
  return out;
}

std::vector<SeqTerm> seq_terms_by_size(const std::vector<Element>& atoms, const SeqShape& shape) {
  // by[d][s]: terms of node count s with Rep nesting <= d
  const std::size_t S = shape.max_size;
  std::vector<std::vector<std::vector<SeqTerm>>> by(shape.max_depth + 1, std::vector<std::vector<SeqTerm>>(S + 1));
  // Sequences of `count` items drawn from pools, with total size `total`.
  auto tuples = [&](const std::vector<std::vector<SeqTerm>>& pool, std::size_t count, std::size_t total, auto&& emit) {
    std::vector<SeqTerm> cur;
    auto rec = [&](auto&& self, std::size_t left) -> void {
      if (cur.size() == count) {
        if (left == 0) emit(cur);
        return;
      }
      const std::size_t remaining = count - cur.size() - 1;
      for (std::size_t s = 1; s + remaining <= left; ++s)
        for (const auto& t : pool[s]) {
          cur.push_back(t);
          self(self, left - s);
          cur.pop_back();
        }
    };
    rec(rec, total);
  };
  for (std::size_t d = 0; d <= shape.max_depth; ++d) {
    for (std::size_t s = 1; s <= S; ++s) {
      std::set<SeqTerm> out;
      if (s == 1)
        for (const auto& a : atoms) out.insert(SeqTerm::atom(a));
      if (d > 0)
        for (std::size_t k = 1; k <= shape.max_blocks; ++k)
          tuples(by[d - 1], k, s - 1, [&](const std::vector<SeqTerm>& bs) { out.insert(SeqTerm::rep(bs)); });
      // Cat parts: non-Cat terms of depth <= d
      std::vector<std::vector<SeqTerm>> flat(S + 1);
      for (std::size_t t = 1; t < s; ++t)
        for (const auto& x : by[d][t])
          if (x.kind() != SeqTerm::Kind::Cat) flat[t].push_back(x);
      for (std::size_t k = 2; k <= shape.max_parts; ++k)
        tuples(flat, k, s - 1, [&](const std::vector<SeqTerm>& ps) { out.insert(SeqTerm::cat(ps)); });
      by[d][s].assign(out.begin(), out.end());
    }
  }
  std::vector<SeqTerm> all;
  for (std::size_t s = 1; s <= S; ++s) all.insert(all.end(), by[shape.max_depth][s].begin(), by[shape.max_depth][s].end());
  return all;
}

std::string seq_str(const QoHandle& qo, const SeqTerm& u) {
  if (u.is_atom()) return element_str(qo, u.element());
  std::string s = u.kind() == SeqTerm::Kind::Cat ? "Cat[" : "Rep[";
  for (std::size_t i = 0; i < u.children().size(); ++i) s += (i ? ", " : "") + seq_str(qo, u.children()[i]);
  return s + "]";
}

}  // namespace wqo
