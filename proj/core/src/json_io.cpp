#include "wqo/json_io.hpp"

#include "qo_impl.hpp"

#include "wqo/error.hpp"

namespace wqo::io {

namespace {

[[noreturn]] void bad(const std::string& what, const json& j) {
  std::string s = j.dump();
  if (s.size() > 80) s = s.substr(0, 77) + "...";
  throw InputError(what + ": " + s);
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"", j);
  return j.at(name);
}

std::uint64_t natural(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) bad("expected a natural number", j);
  return j.get<std::uint64_t>();
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

// ---- qo ------------------------------------------------------------------

QoHandle qo_from_json(const json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "finite") {
    auto names = field(j, "elements").get<std::vector<std::string>>();
    std::vector<std::vector<bool>> m;
    for (const auto& row : field(j, "leq")) {
      std::vector<bool> r;
      for (const auto& b : row) {
        if (!b.is_boolean()) bad("leq entries must be booleans", b);
        r.push_back(b.get<bool>());
      }
      m.push_back(r);
    }
    return finite_qo(std::move(names), std::move(m));
  }
  if (type == "omega") return omega_qo();
  if (type == "rado") return rado_qo();
  if (type == "product") return product(qo_from_json(field(j, "left")), qo_from_json(field(j, "right")));
  if (type == "level") return next_level(qo_from_json(field(j, "base")), static_cast<unsigned>(natural(field(j, "k"))));
  if (type == "chain") return chain_qo(static_cast<unsigned>(natural(field(j, "n"))));
  if (type == "antichain") return antichain_qo(static_cast<unsigned>(natural(field(j, "n"))));
  bad("unknown qo type", j);
}

json qo_to_json(const QoHandle& qo) {
  switch (qo.kind()) {
    case QoHandle::Kind::Finite:
      return json{{"type", "finite"}, {"elements", qo.names()}, {"leq", qo.impl().leq}};
    case QoHandle::Kind::Omega:
      return json{{"type", "omega"}};
    case QoHandle::Kind::Rado:
      return json{{"type", "rado"}};
    case QoHandle::Kind::Product:
      return json{{"type", "product"}, {"left", qo_to_json(qo.left())}, {"right", qo_to_json(qo.right())}};
    case QoHandle::Kind::Level:
      return json{{"type", "level"}, {"base", qo_to_json(qo.base())}, {"k", qo.level()}};
  }
  return json();
}

// ---- elements ------------------------------------------------------------

Element element_from_json(const QoHandle& qo, const json& j) {
  switch (qo.kind()) {
    case QoHandle::Kind::Finite: {
      if (!j.is_string()) bad("expected an element name", j);
      auto idx = qo.find_name(j.get<std::string>());
      if (!idx) bad("unknown element", j);
      return Element::named(*idx);
    }
    case QoHandle::Kind::Omega:
      return Element::natural(natural(j));
    case QoHandle::Kind::Rado: {
      if (!j.is_array() || j.size() != 2) bad("expected a pair [i,j]", j);
      auto e = Element::pair(natural(j[0]), natural(j[1]));
      if (e.first() >= e.second()) bad("Rado pairs need i < j", j);
      return e;
    }
    case QoHandle::Kind::Product:
      if (!j.is_array() || j.size() != 2) bad("expected a pair [left,right]", j);
      return Element::product(element_from_json(qo.left(), j[0]), element_from_json(qo.right(), j[1]));
    case QoHandle::Kind::Level:
      if (j.is_object() && j.contains("downset")) {
        CoUpset d = couset_from_json(j.at("downset"), &qo.previous());
        return Element::set(std::make_shared<const CoUpset>(d));
      }
      return element_from_json(qo.base(), j);
  }
  bad("cannot read element", j);
}

json element_to_json(const QoHandle& qo, const Element& e) {
  check_member(qo, e);
  switch (qo.kind()) {
    case QoHandle::Kind::Finite:
      return qo.names()[e.index()];
    case QoHandle::Kind::Omega:
      return e.index();
    case QoHandle::Kind::Rado:
      return json::array({e.first(), e.second()});
    case QoHandle::Kind::Product:
      return json::array({element_to_json(qo.left(), e.left()), element_to_json(qo.right(), e.right())});
    case QoHandle::Kind::Level:
      if (e.kind() == Element::Kind::Set) return json{{"downset", couset_to_json(e.downset())}};
      return element_to_json(qo.base(), e);
  }
  return json();
}

// ---- terms ---------------------------------------------------------------

VTerm vterm_from_json(const QoHandle& qo, const json& j) {
  if (j.is_object() && j.contains("ur")) {
    Element e = element_from_json(qo, j.at("ur"));
    check_member(qo, e);
    return VTerm::ur(e);
  }
  if (j.is_object() && j.contains("set")) {
    const auto& arr = j.at("set");
    if (!arr.is_array() || arr.empty()) bad("a set needs a nonempty member list", j);
    std::vector<VTerm> ms;
    for (const auto& m : arr) ms.push_back(vterm_from_json(qo, m));
    return VTerm::set(std::move(ms));
  }
  bad("expected {\"ur\":...} or {\"set\":[...]}", j);
}

json vterm_to_json(const QoHandle& qo, const VTerm& x) {
  if (x.is_ur()) return json{{"ur", element_to_json(qo, x.element())}};
  json arr = json::array();
  for (const auto& m : x.members()) arr.push_back(vterm_to_json(qo, m));
  return json{{"set", arr}};
}

SeqTerm seq_from_json(const QoHandle& qo, const json& j) {
  if (j.is_object() && j.contains("atom")) {
    Element e = element_from_json(qo, j.at("atom"));
    check_member(qo, e);
    return SeqTerm::atom(e);
  }
  for (const char* k : {"cat", "rep"}) {
    if (!j.is_object() || !j.contains(k)) continue;
    const auto& arr = j.at(k);
    if (!arr.is_array() || arr.empty()) bad(std::string(k) + " needs a nonempty list", j);
    std::vector<SeqTerm> cs;
    for (const auto& c : arr) cs.push_back(seq_from_json(qo, c));
    return k[0] == 'c' ? SeqTerm::cat(std::move(cs)) : SeqTerm::rep(std::move(cs));
  }
  bad("expected {\"atom\":...}, {\"cat\":[...]} or {\"rep\":[...]}", j);
}

json seq_to_json(const QoHandle& qo, const SeqTerm& u) {
  if (u.is_atom()) return json{{"atom", element_to_json(qo, u.element())}};
  json arr = json::array();
  for (const auto& c : u.children()) arr.push_back(seq_to_json(qo, c));
  return json{{u.kind() == SeqTerm::Kind::Cat ? "cat" : "rep", arr}};
}

CoUpset couset_from_json(const json& j, const QoHandle* base) {
  QoHandle b = j.is_object() && j.contains("base") ? qo_from_json(j.at("base")) : (base ? *base : QoHandle());
  if (!b.valid()) bad("downset without a base", j);
  if (base && !(b == *base)) throw InputError("base mismatch");
  std::vector<Element> gens;
  for (const auto& g : field(j, "generators")) gens.push_back(element_from_json(b, g));
  return CoUpset(b, std::move(gens));
}

json couset_to_json(const CoUpset& d) {
  json gens = json::array();
  for (const auto& g : d.generators()) gens.push_back(element_to_json(d.base(), g));
  return json{{"base", qo_to_json(d.base())}, {"generators", gens}};
}

// ---- witnesses and arrays ------------------------------------------------

json witness_to_json(const EmbedWitness& w) {
  json pairs = json::array(), loops = json::array();
  for (const auto& p : w.pairs) pairs.push_back(json::array({p.u_pos.str(), p.v_pos.str()}));
  for (const auto& l : w.loops)
    loops.push_back(json{{"first_pair", l.first_pair},
                         {"end_pair", l.end_pair},
                         {"u_begin", l.u_begin.str()},
                         {"u_end", l.u_end.str()},
                         {"v_limit", l.v_limit.str()},
                         {"stationary", l.stationary}});
  return json{{"weak", w.weak}, {"pairs", pairs}, {"loops", loops}};
}

EmbedWitness witness_from_json(const json& j) {
  EmbedWitness w;
  w.weak = field(j, "weak").get<bool>();
  for (const auto& p : field(j, "pairs")) {
    if (!p.is_array() || p.size() != 2) bad("witness pairs are [u_pos, v_pos]", p);
    w.pairs.push_back(EmbedPair{Ordinal::parse(p[0].get<std::string>()), Ordinal::parse(p[1].get<std::string>())});
  }
  if (j.contains("loops"))
    for (const auto& l : j.at("loops")) {
      EmbedLoop lp;
      lp.first_pair = natural(field(l, "first_pair"));
      lp.end_pair = natural(field(l, "end_pair"));
      lp.u_begin = Ordinal::parse(field(l, "u_begin").get<std::string>());
      lp.u_end = Ordinal::parse(field(l, "u_end").get<std::string>());
      lp.v_limit = Ordinal::parse(field(l, "v_limit").get<std::string>());
      lp.stationary = l.value("stationary", false);
      w.loops.push_back(lp);
    }
  return w;
}

json tuple_to_json(const Tuple& t) { return json(t); }

Tuple tuple_from_json(const json& j) {
  if (!j.is_array()) bad("expected a tuple", j);
  Tuple t;
  for (const auto& x : j) t.push_back(static_cast<std::uint32_t>(natural(x)));
  if (!is_increasing(t)) bad("tuples must be strictly increasing", j);
  return t;
}

json array_to_json(const PartialArray& a) {
  json front = json::array(), values = json::object(), viol = json::array(), unc = json::array();
  for (const auto& t : a.front) {
    front.push_back(tuple_to_json(t));
    std::string key;
    for (auto x : t) key += (key.empty() ? "" : ",") + std::to_string(x);
    const auto& v = a.values.at(t);
    if (a.starred)
      values[key] = element_to_json(a.qo, v.q);
    else
      values[key] = json::array({element_to_json(a.qo, v.q), v.tag});
  }
  for (const auto& [s, t] : a.violations) viol.push_back(json::array({tuple_to_json(s), tuple_to_json(t)}));
  for (const auto& t : a.uncovered) unc.push_back(tuple_to_json(t));
  return json{{"front", front},
              {"values", values},
              {"starred", a.starred},
              {"rank_note", a.rank_note.str()},
              {"pairs_checked", a.pairs_checked},
              {"violations", viol},
              {"uncovered", unc}};
}

TameArray tame_array_from_json(const json& j) {
  TameArray g;
  g.qo = qo_from_json(field(j, "qo"));
  const json& f = field(j, "front");
  g.front = uniform_front(static_cast<unsigned>(natural(field(f, "k"))));
  if (f.contains("carrier")) {
    std::vector<std::uint32_t> h;
    for (const auto& x : f.at("carrier")) h.push_back(static_cast<std::uint32_t>(natural(x)));
    g.front = restrict_front(g.front, h);
  }
  const json& v = field(j, "valuer");
  const std::string kind = field(v, "kind").get<std::string>();
  if (kind == "rado-pair") {
    g.valuer.kind = Valuer::Kind::RadoPair;
  } else if (kind == "shift-pair") {
    g.valuer.kind = Valuer::Kind::ShiftPair;
  } else if (kind == "min-entry") {
    g.valuer.kind = Valuer::Kind::MinEntry;
  } else if (kind == "constant") {
    g.valuer.kind = Valuer::Kind::Constant;
    g.valuer.constant = element_from_json(g.qo, field(v, "value"));
  } else if (kind == "table") {
    g.valuer.kind = Valuer::Kind::Table;
    const std::string abs = v.value("abstraction", std::string("gap"));
    if (abs == "gap")
      g.valuer.abstraction = Abstraction::GapCap;
    else if (abs == "mod")
      g.valuer.abstraction = Abstraction::Mod;
    else
      bad("abstraction must be \"gap\" or \"mod\"", v);
    g.valuer.param = static_cast<unsigned>(v.contains("param") ? natural(v.at("param")) : 8);
    for (const auto& row : field(v, "table")) {
      std::vector<std::uint32_t> key;
      for (const auto& x : field(row, "key")) key.push_back(static_cast<std::uint32_t>(natural(x)));
      g.valuer.table[key] = element_from_json(g.qo, field(row, "value"));
    }
  } else if (kind == "explicit") {
    g.valuer.kind = Valuer::Kind::Explicit;
    for (const auto& row : field(v, "values"))
      g.valuer.values[tuple_from_json(field(row, "tuple"))] = element_from_json(g.qo, field(row, "value"));
  } else {
    bad("unknown valuer kind", v);
  }
  return g;
}

json tame_array_to_json(const TameArray& g) {
  json front{{"k", g.front.k}};
  if (g.front.carrier) front["carrier"] = *g.front.carrier;
  json v;
  switch (g.valuer.kind) {
    case Valuer::Kind::RadoPair:
      v = {{"kind", "rado-pair"}};
      break;
    case Valuer::Kind::ShiftPair:
      v = {{"kind", "shift-pair"}};
      break;
    case Valuer::Kind::MinEntry:
      v = {{"kind", "min-entry"}};
      break;
    case Valuer::Kind::Constant:
      v = {{"kind", "constant"}, {"value", element_to_json(g.qo, g.valuer.constant)}};
      break;
    case Valuer::Kind::Table: {
      json rows = json::array();
      for (const auto& [k, e] : g.valuer.table) rows.push_back(json{{"key", k}, {"value", element_to_json(g.qo, e)}});
      v = {{"kind", "table"},
           {"abstraction", g.valuer.abstraction == Abstraction::Mod ? "mod" : "gap"},
           {"param", g.valuer.param},
           {"table", rows}};
      break;
    }
    case Valuer::Kind::Explicit: {
      json rows = json::array();
      for (const auto& [t, e] : g.valuer.values) rows.push_back(json{{"tuple", t}, {"value", element_to_json(g.qo, e)}});
      v = {{"kind", "explicit"}, {"values", rows}};
      break;
    }
  }
  return json{{"qo", qo_to_json(g.qo)}, {"front", front}, {"valuer", v}};
}

}  // namespace wqo::io
