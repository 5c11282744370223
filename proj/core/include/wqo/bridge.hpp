#pragma once

#include <vector>

#include "wqo/barrier.hpp"
#include "wqo/hierarchy.hpp"
#include "wqo/sequence.hpp"

namespace wqo {

SeqTerm iota(const QoHandle& qo, const VTerm& x);

// eta and eta* coincide as terms; `starred` only selects which equivalence
// the result is meant up to.
VTerm eta(const QoHandle& qo, const SeqTerm& u, bool starred);
// eta-values of all nonempty initial segments of u, u itself included.
std::vector<VTerm> prefix_eta_set(const QoHandle& qo, const SeqTerm& u);
// The definition evaluated head-on: last label on successor lengths, else the
// minimum over tail classes of the eta-values of proper initial segments.
// Throws Error if no minimum exists.
VTerm eta_direct(const QoHandle& qo, const SeqTerm& u, bool starred);

bool roundtrip_check(const QoHandle& qo, const VTerm& x, bool starred);

// h({n}) with every entry of the explored tuples in (n, trunc].
VTerm wind(const TameArray& g, std::uint32_t n, std::uint32_t trunc);

}  // namespace wqo
