#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wqo/ordinal.hpp"
#include "wqo/qo.hpp"

namespace wqo {

// Regular transfinite sequence: an atom, a finite concatenation, or the
// omega-sum of its blocks visited round-robin.
class SeqTerm {
 public:
  enum class Kind : std::uint8_t { Atom, Cat, Rep };

  static SeqTerm atom(Element e);
  // Flattens nested Cats; a single part is returned unchanged.
  static SeqTerm cat(std::vector<SeqTerm> parts);
  static SeqTerm rep(std::vector<SeqTerm> blocks);

  Kind kind() const { return n_->kind; }
  bool is_atom() const { return n_->kind == Kind::Atom; }
  const Element& element() const;
  const std::vector<SeqTerm>& children() const { return n_->children; }
  const Ordinal& length() const { return n_->length; }
  // Length of one round of a Rep.
  const Ordinal& round_length() const { return n_->round; }
  std::size_t hash() const { return n_->hash; }
  std::size_t node_count() const { return n_->count; }
  const void* id() const { return n_.get(); }

  std::strong_ordering operator<=>(const SeqTerm& o) const;
  bool operator==(const SeqTerm& o) const;

 private:
  friend class EmbedEngine;
  struct Node {
    Kind kind;
    Element e;
    std::vector<SeqTerm> children;
    Ordinal length;
    Ordinal round;
    std::size_t hash;
    std::size_t count;
  };
  explicit SeqTerm(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

struct SeqTermHash {
  std::size_t operator()(const SeqTerm& t) const { return t.hash(); }
};

inline Ordinal seq_len(const SeqTerm& u) { return u.length(); }
// u(pos); InputError when pos >= |u|.
Element seq_at(const SeqTerm& u, const Ordinal& pos);

struct EmbedPair {
  Ordinal u_pos, v_pos;
};

// pairs[first_pair, end_pair) were produced by one period of a Rep of u that
// repeats forever; every later repetition stays in [u_begin, u_end) on the
// left and below v_limit on the right.
struct EmbedLoop {
  std::size_t first_pair = 0, end_pair = 0;
  Ordinal u_begin, u_end, v_limit;
  bool stationary = false;  // weak only: the cursor never moved during the period
};

struct EmbedWitness {
  bool weak = false;
  std::vector<EmbedPair> pairs;
  std::vector<EmbedLoop> loops;
};

bool embeds(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak);
// The witness is present exactly when the embedding holds.
std::optional<EmbedWitness> embed_witness(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak);
// nullopt when the witness is valid, otherwise the reason it is not.
std::optional<std::string> check_witness(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, const EmbedWitness& w);

SeqTerm tail_at(const SeqTerm& u, const Ordinal& gamma);

struct TailClass {
  Ordinal cut;
  SeqTerm tail;
};
// One representative cut per structurally distinct tail, starting with u itself.
std::vector<TailClass> tail_classes(const SeqTerm& u);

bool is_indecomposable(const QoHandle& qo, const SeqTerm& u, bool weak);
std::vector<SeqTerm> decompose(const QoHandle& qo, const SeqTerm& u, bool weak = false);

// Decided through eta (see bridge.hpp), cross-checked against the tail-class
// search when `cross_check` is set; a disagreement throws Error.
bool cofembeds(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak, bool cross_check = true);
// Every tail class of v admits an embedding from some tail class of u.
bool cofembeds_direct(const QoHandle& qo, const SeqTerm& u, const SeqTerm& v, bool weak);

// Finite word obtained by unrolling every Rep for `rounds` rounds.
std::vector<Element> seq_unroll(const SeqTerm& u, std::size_t rounds, std::size_t max_len = 1u << 20);

std::string seq_str(const QoHandle& qo, const SeqTerm& u);

struct SeqShape {
  std::size_t max_size = 6;    // node count
  unsigned max_depth = 2;      // Rep nesting
  std::size_t max_blocks = 2;  // per Rep
  std::size_t max_parts = 2;   // per Cat
};

// Every term over `atoms` within the shape, ordered by node count and then
// by the term order. Cats are flat, so their parts are atoms or Reps.
std::vector<SeqTerm> seq_terms_by_size(const std::vector<Element>& atoms, const SeqShape& shape);

}  // namespace wqo
