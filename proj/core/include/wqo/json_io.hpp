#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "wqo/barrier.hpp"
#include "wqo/downset.hpp"
#include "wqo/hierarchy.hpp"
#include "wqo/sequence.hpp"

namespace wqo::io {

using nlohmann::json;

// Parses text; malformed input raises InputError carrying the byte position.
json parse_json(const std::string& text);

QoHandle qo_from_json(const json& j);
json qo_to_json(const QoHandle& qo);

Element element_from_json(const QoHandle& qo, const json& j);
json element_to_json(const QoHandle& qo, const Element& e);

VTerm vterm_from_json(const QoHandle& qo, const json& j);
json vterm_to_json(const QoHandle& qo, const VTerm& x);

SeqTerm seq_from_json(const QoHandle& qo, const json& j);
json seq_to_json(const QoHandle& qo, const SeqTerm& u);

// When `base` is given the "base" field is optional.
CoUpset couset_from_json(const json& j, const QoHandle* base = nullptr);
json couset_to_json(const CoUpset& d);

json witness_to_json(const EmbedWitness& w);
EmbedWitness witness_from_json(const json& j);

json array_to_json(const PartialArray& a);

TameArray tame_array_from_json(const json& j);
json tame_array_to_json(const TameArray& g);

json tuple_to_json(const Tuple& t);
Tuple tuple_from_json(const json& j);

}  // namespace wqo::io
