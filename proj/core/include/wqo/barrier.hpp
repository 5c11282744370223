#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wqo/qo.hpp"
#include "wqo/tuple.hpp"

namespace wqo {

// [H]^k for an index set H (all of omega when `carrier` is empty).
struct FrontTemplate {
  unsigned k = 1;
  std::optional<std::vector<std::uint32_t>> carrier;  // sorted

  bool in_carrier(std::uint32_t n) const;
  bool contains(const Tuple& s) const;
  // Rank of a proper prefix: singletons of [omega]^1 sit at rank 0, so
  // rk(s) = k - 1 - |s| for |s| < k. Throws for |s| >= k.
  int rank(const Tuple& s) const;
  // Carrier elements in [0, bound].
  std::vector<std::uint32_t> carrier_upto(std::uint32_t bound) const;
};

FrontTemplate uniform_front(unsigned k);
FrontTemplate restrict_front(const FrontTemplate& f, std::vector<std::uint32_t> h);
// The front {n} u s0 u s1 built from [omega]^k: again uniform, of size 2k-1.
FrontTemplate fprime_front(const FrontTemplate& f);

// Tuple features a value table may depend on.
enum class Abstraction { GapCap, Mod };

struct Valuer {
  enum class Kind {
    RadoPair,   // {i,j,..} -> (i,j)
    ShiftPair,  // {i,..}   -> (i,i+1)
    MinEntry,   // {i,..}   -> i
    Constant,
    Table,      // abstraction key -> value
    Explicit,   // finite domain, tuple -> value
  };
  Kind kind = Kind::Constant;
  Element constant;
  Abstraction abstraction = Abstraction::GapCap;
  unsigned param = 8;  // G for GapCap, m for Mod
  std::map<std::vector<std::uint32_t>, Element> table;
  std::map<Tuple, Element> values;
};

struct TameArray {
  QoHandle qo;
  FrontTemplate front;
  Valuer valuer;
};

// Gap abstraction: (min(s0+1,G), min(s1-s0,G), ...); mod abstraction: s_i mod m.
std::vector<std::uint32_t> abstraction_key(Abstraction a, unsigned param, const Tuple& s);
// Throws InputError("non-tame array: ...") when a table misses a key or the
// valuer does not fit the front and qo.
void check_tame(const TameArray& g);
Element array_value(const TameArray& g, const Tuple& s);
// Bound on |{g(s) : min s = n}| when finite for every n.
std::optional<std::size_t> support_bound(const TameArray& g);

TameArray rado_array();
TameArray constant_array(const QoHandle& qo, const Element& q, unsigned k);
TameArray min_entry_array(unsigned k);    // over omega
TameArray shift_pair_array(unsigned k);   // over Rado

struct BadCheck {
  bool bad = true;
  std::optional<std::pair<Tuple, Tuple>> counterexample;
  std::size_t pairs_checked = 0;
  std::uint32_t bound = 0;
};

// All triangleleft pairs of the front with entries <= bound, in lexicographic
// order of s u t.
BadCheck is_bad_on(const TameArray& g, std::uint32_t bound);

using Coloring = std::function<int(const Tuple&)>;

// Lexicographically least H in {0..bound-1} with |H| = m whose k-subsets all
// get one color; nullopt when none exists.
std::optional<std::vector<std::uint32_t>> ramsey_homogeneous(unsigned k, const Coloring& c, std::size_t m,
                                                             std::uint32_t bound, int* color = nullptr);

// c({n} u s0 u s1) = 0 iff g({n} u s0) == g({n} u s1).
Coloring fprime_coloring(const TameArray& g);

struct ExtractVerdict {
  enum class Kind { Goodness, StillBad, Pigeonhole };
  Kind kind = Kind::StillBad;
  std::uint32_t bound = 0;
  std::vector<std::uint32_t> homogeneous;
  int color = 0;
  std::vector<std::pair<std::uint32_t, Element>> fprime;  // f' on H where defined
  // Goodness
  Tuple sigma, tau;
  Element g_sigma, g_tau;
  // Pigeonhole
  std::size_t distinct_values = 0;
  std::optional<std::size_t> support;
};

// target 0 picks 2k+1.
ExtractVerdict extract_bad_sequence(const TameArray& g, std::uint32_t bound, std::size_t target = 0);

}  // namespace wqo
