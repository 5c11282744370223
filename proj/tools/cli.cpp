#include "cli.hpp"

#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "wqo/bridge.hpp"
#include "wqo/error.hpp"
#include "wqo/json_io.hpp"

namespace wqo::cli {

using io::json;

namespace {

struct Report {
  int exit_code = 0;
  json j = json::object();
  std::vector<std::string> text;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QoHandle load_qo(const std::string& spec) {
  if (spec.empty()) throw InputError("--qo is required");
  static const std::regex named(R"((chain|antichain)(\d+))");
  std::smatch m;
  if (spec == "rado") return rado_qo();
  if (spec == "omega") return omega_qo();
  if (spec == "point") return point_qo();
  if (std::regex_match(spec, m, named)) {
    unsigned n = static_cast<unsigned>(std::stoul(m[2]));
    return m[1] == "chain" ? chain_qo(n) : antichain_qo(n);
  }
  std::string text = spec.front() == '{' ? spec : read_file(spec);
  return io::qo_from_json(io::parse_json(text));
}

const std::string& input(const RunConfig& c, const std::string& name) {
  auto it = c.inputs.find(name);
  if (it == c.inputs.end() || it->second.empty()) throw InputError("--" + name + " is required");
  return it->second;
}

bool has_input(const RunConfig& c, const std::string& name) {
  auto it = c.inputs.find(name);
  return it != c.inputs.end() && !it->second.empty();
}

json input_json(const RunConfig& c, const std::string& name) { return io::parse_json(input(c, name)); }

std::int64_t int_opt(const RunConfig& c, const std::string& name, std::int64_t dflt) {
  auto it = c.ints.find(name);
  return it == c.ints.end() ? dflt : it->second;
}

std::uint32_t nat_opt(const RunConfig& c, const std::string& name, std::int64_t dflt) {
  auto v = int_opt(c, name, dflt);
  if (v < 0) throw InputError("--" + name + " must be non-negative");
  return static_cast<std::uint32_t>(v);
}

bool flag(const RunConfig& c, const std::string& name) { return c.flags.count(name) > 0; }

std::string b(bool v) { return v ? "true" : "false"; }

std::string verified_on(std::uint64_t n) { return "verified on bound " + std::to_string(n); }

TameArray load_array(const RunConfig& c) {
  if (!has_input(c, "array")) return rado_array();
  const std::string& s = input(c, "array");
  if (s == "rado") return rado_array();
  if (s == "shift-pair") return shift_pair_array(2);
  if (s == "min-entry") return min_entry_array(2);
  return io::tame_array_from_json(io::parse_json(s));
}

std::vector<VTerm> rado_prefix(std::uint32_t n, std::uint64_t trunc) {
  std::vector<VTerm> p;
  for (std::uint32_t i = 0; i < n; ++i) p.push_back(truncate_downset(rado_bad_downset(i), rado_count_upto(trunc)));
  return p;
}

// ---- sequences -----------------------------------------------------------

Report cmd_embed(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  SeqTerm u = io::seq_from_json(qo, input_json(c, "u")), v = io::seq_from_json(qo, input_json(c, "v"));
  bool weak = flag(c, "weak");
  auto w = embed_witness(qo, u, v, weak);
  r.j = {{"command", "embed"}, {"weak", weak}, {"verdict", w.has_value()}, {"u", io::seq_to_json(qo, u)}, {"v", io::seq_to_json(qo, v)},
         {"len_u", seq_len(u).str()}, {"len_v", seq_len(v).str()}};
  std::string rel = weak ? " <=emb* " : " <=emb ";
  r.text.push_back(seq_str(qo, u) + rel + seq_str(qo, v) + " : " + b(w.has_value()));
  if (w) {
    auto err = check_witness(qo, u, v, *w);
    if (err) throw Error("internal: produced witness fails its check: " + *err);
    r.j["witness"] = io::witness_to_json(*w);
    r.text.push_back("witness: " + std::to_string(w->pairs.size()) + " pairs, " + std::to_string(w->loops.size()) + " loops (validated)");
    for (const auto& p : w->pairs) r.text.push_back("  " + p.u_pos.str() + " -> " + p.v_pos.str());
  } else {
    r.exit_code = 1;
  }
  return r;
}

Report cmd_verify_witness(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  SeqTerm u = io::seq_from_json(qo, input_json(c, "u")), v = io::seq_from_json(qo, input_json(c, "v"));
  json wj = input_json(c, "witness");
  if (wj.contains("witness")) wj = wj.at("witness");  // accept a whole embed report
  auto err = check_witness(qo, u, v, io::witness_from_json(wj));
  r.j = {{"command", "verify-witness"}, {"valid", !err.has_value()}};
  if (err) {
    r.j["reason"] = *err;
    r.exit_code = 1;
  }
  r.text.push_back(std::string("witness ") + (err ? "invalid: " + *err : "valid"));
  return r;
}

Report cmd_cofembeds(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  SeqTerm u = io::seq_from_json(qo, input_json(c, "u")), v = io::seq_from_json(qo, input_json(c, "v"));
  bool weak = flag(c, "weak");
  bool cf = cofembeds(qo, u, v, weak, true);
  r.j = {{"command", "cofembeds"}, {"weak", weak}, {"verdict", cf}, {"embeds", embeds(qo, u, v, weak)},
         {"eta_u", io::vterm_to_json(qo, eta(qo, u, weak))}, {"eta_v", io::vterm_to_json(qo, eta(qo, v, weak))}};
  r.text.push_back(seq_str(qo, u) + (weak ? " <=cof* " : " <=cof ") + seq_str(qo, v) + " : " + b(cf));
  r.text.push_back("embeds: " + b(r.j["embeds"].get<bool>()));
  r.exit_code = cf ? 0 : 1;
  return r;
}

Report cmd_decompose(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  SeqTerm u = io::seq_from_json(qo, input_json(c, "u"));
  bool weak = flag(c, "weak");
  json parts = json::array();
  for (const auto& p : decompose(qo, u, weak)) {
    parts.push_back(io::seq_to_json(qo, p));
    r.text.push_back(seq_str(qo, p));
  }
  r.j = {{"command", "decompose"}, {"weak", weak}, {"parts", parts}, {"indecomposable", is_indecomposable(qo, u, weak)}};
  return r;
}

// ---- bridge --------------------------------------------------------------

Report cmd_iota(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  VTerm x = io::vterm_from_json(qo, input_json(c, "x"));
  SeqTerm u = iota(qo, x);
  r.j = {{"command", "iota"}, {"result", io::seq_to_json(qo, u)}, {"length", seq_len(u).str()}};
  r.text.push_back(seq_str(qo, u));
  return r;
}

Report cmd_eta(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  SeqTerm u = io::seq_from_json(qo, input_json(c, "u"));
  bool starred = flag(c, "starred");
  VTerm e = eta(qo, u, starred);
  bool agrees = sim_equiv(qo, e, eta_direct(qo, u, starred), starred);
  if (!agrees) throw Error("internal: eta disagrees with direct evaluation");
  r.j = {{"command", "eta"}, {"starred", starred}, {"result", io::vterm_to_json(qo, e)},
         {"minimized", io::vterm_to_json(qo, sim_minimize(qo, e, starred))}};
  r.text.push_back(vterm_str(qo, e));
  return r;
}

Report cmd_roundtrip(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  VTerm x = io::vterm_from_json(qo, input_json(c, "x"));
  bool starred = flag(c, "starred");
  VTerm back = eta(qo, iota(qo, x), starred);
  bool ok = sim_equiv(qo, back, x, starred);
  r.j = {{"command", "roundtrip"}, {"starred", starred}, {"verdict", ok}, {"eta_iota", io::vterm_to_json(qo, back)}};
  r.text.push_back("eta(iota(" + vterm_str(qo, x) + ")) = " + vterm_str(qo, back) + (ok ? " ~ " : " !~ ") + vterm_str(qo, x));
  r.exit_code = ok ? 0 : 1;
  return r;
}

Report cmd_unwind(const RunConfig& c) {
  Report r;
  QoHandle qo;
  std::vector<VTerm> prefix;
  if (has_input(c, "prefix")) {
    qo = load_qo(c.qo_spec);
    json p = input_json(c, "prefix");
    if (!p.is_array()) throw InputError("--prefix must be a JSON array of terms");
    for (const auto& x : p) prefix.push_back(io::vterm_from_json(qo, x));
  } else {
    qo = rado_qo();
    prefix = rado_prefix(nat_opt(c, "n", 4), c.trunc);
  }
  bool starred = flag(c, "starred");
  unsigned depth = nat_opt(c, "depth", 2);
  PartialArray a = unwind(qo, prefix, depth, starred);
  std::size_t supp_bad = 0;
  for (const auto& s : a.front) {
    auto sp = supp(prefix[s[0]]);
    if (!std::binary_search(sp.begin(), sp.end(), a.values.at(s).q)) ++supp_bad;
  }
  r.j = io::array_to_json(a);
  r.j["command"] = "unwind";
  r.j["support_violations"] = supp_bad;
  r.text.push_back("front: " + std::to_string(a.front.size()) + " tuples, rank note " + a.rank_note.str());
  for (const auto& s : a.front) {
    const auto& v = a.values.at(s);
    r.text.push_back("  g" + tuple_str(s) + " = " + element_str(qo, v.q) + (starred ? "" : " @" + std::to_string(v.tag)));
  }
  r.text.push_back("<|-pairs checked: " + std::to_string(a.pairs_checked) + ", violations: " + std::to_string(a.violations.size()) +
                   ", support violations: " + std::to_string(supp_bad));
  r.exit_code = a.violations.empty() && supp_bad == 0 ? 0 : 1;
  return r;
}

Report cmd_wind(const RunConfig& c) {
  Report r;
  TameArray g = load_array(c);
  std::uint32_t n = nat_opt(c, "n", 1);
  VTerm h = wind(g, n, static_cast<std::uint32_t>(c.trunc));
  r.j = {{"command", "wind"}, {"n", n}, {"trunc", c.trunc}, {"result", io::vterm_to_json(g.qo, h)}};
  r.text.push_back("h({" + std::to_string(n) + "}) = " + vterm_str(g.qo, h));
  if (g.valuer.kind == Valuer::Kind::RadoPair && n >= 1 && c.trunc > n) {
    bool eq = sim_equiv(g.qo, h, truncate_downset(rado_bad_downset(n), rado_count_upto(c.trunc)), false);
    r.j["sim_truncated_B_n"] = eq;
    r.text.push_back("~ trunc(B_" + std::to_string(n) + ", " + std::to_string(c.trunc) + "): " + b(eq));
  }
  return r;
}

// ---- downsets ------------------------------------------------------------

Report cmd_rado_suite(const RunConfig& c) {
  Report r;
  const std::uint32_t n = nat_opt(c, "n", 10);
  const std::uint64_t T = c.trunc;
  bool ok = true;
  auto rado = rado_qo();

  auto brute_subset = [&](const CoUpset& x, const CoUpset& y) {
    for (std::uint64_t l = 1; l <= T; ++l)
      for (std::uint64_t k = 0; k < l; ++k) {
        Element p = Element::pair(k, l);
        if (x.contains(p) && !y.contains(p)) return false;
      }
    return true;
  };
  json inc = json::array();
  std::size_t inc_ok = 0;
  for (std::uint32_t a = 1; a <= n; ++a)
    for (std::uint32_t bb = a + 1; bb <= n; ++bb) {
      auto x = rado_bad_downset(a), y = rado_bad_downset(bb);
      bool xy = couset_subset(x, y), yx = couset_subset(y, x);
      bool agree = brute_subset(x, y) == xy && brute_subset(y, x) == yx;
      bool good = !xy && !yx && agree;
      inc_ok += good;
      ok = ok && good;
      inc.push_back({{"n", a}, {"m", bb}, {"subset_n_m", xy}, {"subset_m_n", yx}, {"bruteforce_agrees", agree}});
    }
  r.text.push_back("B_n pairwise incomparable for 1 <= n < m <= " + std::to_string(n) + ": " + std::to_string(inc_ok) + "/" +
                   std::to_string(inc.size()) + " (brute force " + verified_on(T) + ")");

  std::vector<CoUpset> bs;
  for (std::uint32_t i = 0; i < n; ++i) bs.push_back(rado_bad_downset(i));
  json desc = json::array();
  if (n >= 1) {
    DescentChain dc = descend_chain(bs);
    desc.push_back({{"step", 0}, {"kind", "entry"}, {"witness", "B_0"}, {"in", "level"}, {"not_in", "y_1"}});
    for (const auto& s : dc.steps)
      desc.push_back({{"step", s.upper + 1},
                      {"kind", "strict"},
                      {"witness", "B_" + std::to_string(s.upper + 1)},
                      {"in", "y_" + std::to_string(s.upper + 1)},
                      {"not_in", "y_" + std::to_string(s.upper + 2)}});
  }
  r.text.push_back("level-2 descent y_1 > ... > y_" + std::to_string(n) + ": " + std::to_string(desc.size()) + " witnesses certified");

  json unw;
  {
    std::uint32_t len = std::min<std::uint32_t>(n, 4);
    auto prefix = rado_prefix(len, T);
    PartialArray a = unwind(rado, prefix, 2, false);
    std::size_t supp_bad = 0;
    for (const auto& s : a.front) {
      auto sp = supp(prefix[s[0]]);
      if (!std::binary_search(sp.begin(), sp.end(), a.values.at(s).q)) ++supp_bad;
    }
    ok = ok && a.violations.empty() && supp_bad == 0;
    unw = {{"prefix_length", len}, {"front", a.front.size()}, {"pairs_checked", a.pairs_checked},
           {"violations", a.violations.size()}, {"support_violations", supp_bad}};
    r.text.push_back("unwound array on trunc(B_0..B_" + std::to_string(len - 1) + "): " + std::to_string(a.pairs_checked) +
                     " <|-pairs, " + std::to_string(a.violations.size()) + " violations");
  }
  r.j = {{"command", "rado-suite"}, {"n", n}, {"trunc", T}, {"incomparability", inc}, {"incomparability_checks", inc.size()},
         {"descent", desc}, {"descent_witnesses", desc.size()}, {"unwind", unw}, {"verdict", ok}};
  r.exit_code = ok ? 0 : 1;
  return r;
}

// ---- barrier -------------------------------------------------------------

Coloring load_coloring(const RunConfig& c, unsigned k, std::uint32_t bound) {
  std::string spec = has_input(c, "coloring") ? input(c, "coloring") : "random";
  auto table_from = [](std::map<Tuple, int> m, int dflt) -> Coloring {
    return [m = std::move(m), dflt](const Tuple& s) {
      auto it = m.find(s);
      return it == m.end() ? dflt : it->second;
    };
  };
  if (spec == "random") {
    std::mt19937_64 rng(c.seed);
    std::map<Tuple, int> m;
    Tuple t;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t from) {
      if (t.size() == k) {
        m[t] = static_cast<int>(rng() & 1);
        return;
      }
      for (std::uint32_t x = from; x < bound; ++x) {
        t.push_back(x);
        rec(x + 1);
        t.pop_back();
      }
    };
    rec(0);
    return table_from(std::move(m), 0);
  }
  if (spec == "zero") return [](const Tuple&) { return 0; };
  if (spec == "sum-parity")
    return [](const Tuple& s) {
      std::uint64_t sum = 0;
      for (auto x : s) sum += x;
      return static_cast<int>(sum % 2);
    };
  if (spec == "min-parity") return [](const Tuple& s) { return static_cast<int>(s[0] % 2); };
  json j = io::parse_json(spec);
  std::map<Tuple, int> m;
  for (const auto& row : j.at("colors")) {
    if (!row.is_array() || row.size() != 2) throw InputError("colors are [tuple, color] pairs");
    m[io::tuple_from_json(row[0])] = row[1].get<int>();
  }
  return table_from(std::move(m), j.value("default", 0));
}

Report cmd_ramsey(const RunConfig& c) {
  Report r;
  unsigned k = nat_opt(c, "k", 2);
  std::size_t m = nat_opt(c, "target", 4);
  std::uint32_t bound = nat_opt(c, "bound", 18);
  int color = 0;
  auto h = ramsey_homogeneous(k, load_coloring(c, k, bound), m, bound, &color);
  r.j = {{"command", "ramsey"}, {"k", k}, {"target", m}, {"bound", bound}, {"found", h.has_value()}, {"scope", verified_on(bound)}};
  if (h) {
    r.j["homogeneous"] = *h;
    r.j["color"] = color;
    std::string s;
    for (auto x : *h) s += (s.empty() ? "" : ",") + std::to_string(x);
    r.text.push_back("H = {" + s + "}, color " + std::to_string(color) + " (" + verified_on(bound) + ")");
  } else {
    r.exit_code = 1;
    r.text.push_back("no homogeneous set of size " + std::to_string(m) + " in {0.." + std::to_string(bound - 1) + "}");
  }
  return r;
}

Report cmd_is_bad(const RunConfig& c) {
  Report r;
  TameArray g = load_array(c);
  std::uint32_t bound = nat_opt(c, "bound", 20);
  BadCheck bc = is_bad_on(g, bound);
  r.j = {{"command", "is-bad"}, {"bad", bc.bad}, {"pairs_checked", bc.pairs_checked}, {"scope", verified_on(bound)}};
  if (bc.counterexample) {
    const auto& [s, t] = *bc.counterexample;
    r.j["counterexample"] = {{"sigma", s}, {"tau", t}, {"g_sigma", io::element_to_json(g.qo, array_value(g, s))},
                             {"g_tau", io::element_to_json(g.qo, array_value(g, t))}};
    r.text.push_back("not bad: " + tuple_str(s) + " <| " + tuple_str(t) + " with " + element_str(g.qo, array_value(g, s)) +
                     " <= " + element_str(g.qo, array_value(g, t)));
    r.exit_code = 1;
  } else {
    r.text.push_back("bad on all " + std::to_string(bc.pairs_checked) + " <|-pairs (" + verified_on(bound) + ")");
  }
  return r;
}

Report cmd_extract(const RunConfig& c) {
  Report r;
  TameArray g = load_array(c);
  std::uint32_t bound = nat_opt(c, "bound", 12);
  auto v = extract_bad_sequence(g, bound, nat_opt(c, "target", 0));
  static const char* kinds[] = {"goodness", "still-bad", "pigeonhole"};
  r.j = {{"command", "extract"}, {"kind", kinds[static_cast<int>(v.kind)]}, {"homogeneous", v.homogeneous},
         {"color", v.color}, {"scope", verified_on(bound)}};
  std::string hs;
  for (auto x : v.homogeneous) hs += (hs.empty() ? "" : ",") + std::to_string(x);
  r.text.push_back("homogeneous H = {" + hs + "}, color " + std::to_string(v.color));
  switch (v.kind) {
    case ExtractVerdict::Kind::Goodness:
      r.j["sigma"] = v.sigma;
      r.j["tau"] = v.tau;
      r.j["g_sigma"] = io::element_to_json(g.qo, v.g_sigma);
      r.j["g_tau"] = io::element_to_json(g.qo, v.g_tau);
      r.text.push_back("goodness witness " + tuple_str(v.sigma) + " <| " + tuple_str(v.tau) + ": " + element_str(g.qo, v.g_sigma) +
                       " <= " + element_str(g.qo, v.g_tau));
      break;
    case ExtractVerdict::Kind::Pigeonhole:
      r.j["distinct_values"] = v.distinct_values;
      r.j["support"] = *v.support;
      r.text.push_back("color 1: " + std::to_string(v.distinct_values) + " distinct values against support bound " +
                       std::to_string(*v.support));
      break;
    case ExtractVerdict::Kind::StillBad: {
      json fp = json::array();
      for (const auto& [n, e] : v.fprime) fp.push_back({n, io::element_to_json(g.qo, e)});
      r.j["fprime"] = fp;
      r.text.push_back("f' has no ascending pair on H (" + verified_on(bound) + ")");
      r.exit_code = 1;
      break;
    }
  }
  return r;
}

Report cmd_goodness_scan(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  bool weak = flag(c, "weak");
  std::vector<SeqTerm> stream;
  if (has_input(c, "stream")) {
    json s = input_json(c, "stream");
    if (!s.is_array()) throw InputError("--stream must be a JSON array of terms");
    for (const auto& t : s) stream.push_back(io::seq_from_json(qo, t));
  } else {
    auto carrier = finite_carrier(qo);
    if (!carrier) throw InputError("generated streams need a finite qo");
    SeqShape shape{nat_opt(c, "max-size", 7), nat_opt(c, "depth", 2), nat_opt(c, "blocks", 2), nat_opt(c, "parts", 2)};
    stream = seq_terms_by_size(*carrier, shape);
  }
  std::size_t limit = std::min<std::size_t>(stream.size(), nat_opt(c, "limit", 200));
  r.j = {{"command", "goodness-scan"}, {"weak", weak}, {"scanned", limit}, {"stream_size", stream.size()}};
  for (std::size_t j = 1; j < limit; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      auto w = embed_witness(qo, stream[i], stream[j], weak);
      if (!w) continue;
      r.j["found"] = true;
      r.j["i"] = i;
      r.j["j"] = j;
      r.j["u_i"] = io::seq_to_json(qo, stream[i]);
      r.j["u_j"] = io::seq_to_json(qo, stream[j]);
      r.j["witness"] = io::witness_to_json(*w);
      r.text.push_back("good pair (" + std::to_string(i) + "," + std::to_string(j) + "): " + seq_str(qo, stream[i]) +
                       (weak ? " <=emb* " : " <=emb ") + seq_str(qo, stream[j]));
      return r;
    }
  r.j["found"] = false;
  r.text.push_back("no good pair among the first " + std::to_string(limit) + " terms");
  r.exit_code = 1;
  return r;
}

Report cmd_quotient(const RunConfig& c) {
  Report r;
  QoHandle qo = load_qo(c.qo_spec);
  auto carrier = finite_carrier(qo);
  if (!carrier) throw InputError("quotient needs a finite qo");
  bool starred = flag(c, "starred");
  const unsigned depth = nat_opt(c, "depth", 1);
  const std::size_t width = nat_opt(c, "width", 3);
  // Size the universe before building it.
  double size = static_cast<double>(carrier->size());
  for (unsigned d = 0; d < depth; ++d) {
    double next = static_cast<double>(carrier->size()), binom = 1;
    for (std::size_t k = 1; k <= width && k <= size; ++k) {
      binom = binom * (size - static_cast<double>(k) + 1) / static_cast<double>(k);
      next += binom;
    }
    size = next;
  }
  if (size > 4000) throw BoundError("bound too small: universe of " + std::to_string(static_cast<std::uint64_t>(size)) +
                                    " terms exceeds 4000; lower --depth or --width");
  auto uni = vterm_universe(*carrier, depth, width);
  const std::size_t n = uni.size();
  std::vector<std::vector<char>> le(n, std::vector<char>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = lesssim(qo, uni[i], uni[j], starred);
  std::vector<std::size_t> cls(n, SIZE_MAX);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (cls[i] != SIZE_MAX) continue;
    cls[i] = classes.size();
    classes.push_back({i});
    for (std::size_t j = i + 1; j < n; ++j)
      if (cls[j] == SIZE_MAX && le[i][j] && le[j][i]) {
        cls[j] = cls[i];
        classes.back().push_back(j);
      }
  }
  const std::size_t m = classes.size();
  auto below = [&](std::size_t a, std::size_t bb) { return a != bb && le[classes[a][0]][classes[bb][0]]; };
  json cj = json::array(), edges = json::array();
  for (std::size_t a = 0; a < m; ++a) {
    json members = json::array();
    for (auto i : classes[a]) members.push_back(vterm_str(qo, uni[i]));
    cj.push_back({{"id", a}, {"members", members}});
    std::string line = "[" + std::to_string(a) + "] ";
    for (std::size_t t = 0; t < classes[a].size(); ++t) line += (t ? " ~ " : "") + vterm_str(qo, uni[classes[a][t]]);
    r.text.push_back(line);
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t bb = 0; bb < m; ++bb) {
      if (!below(a, bb)) continue;
      bool cover = true;
      for (std::size_t z = 0; z < m && cover; ++z)
        if (below(a, z) && below(z, bb)) cover = false;
      if (!cover) continue;
      edges.push_back({a, bb});
      r.text.push_back("[" + std::to_string(a) + "] " + (starred ? "<~*" : "<~") + " [" + std::to_string(bb) + "]");
    }
  r.j = {{"command", "quotient"}, {"starred", starred}, {"terms", n}, {"classes", cj}, {"covers", edges}};
  return r;
}

const std::map<std::string, std::function<Report(const RunConfig&)>>& commands() {
  static const std::map<std::string, std::function<Report(const RunConfig&)>> m{
      {"embed", cmd_embed},
      {"verify-witness", cmd_verify_witness},
      {"cofembeds", cmd_cofembeds},
      {"decompose", cmd_decompose},
      {"iota", cmd_iota},
      {"eta", cmd_eta},
      {"roundtrip", cmd_roundtrip},
      {"unwind", cmd_unwind},
      {"wind", cmd_wind},
      {"rado-suite", cmd_rado_suite},
      {"ramsey", cmd_ramsey},
      {"is-bad", cmd_is_bad},
      {"extract", cmd_extract},
      {"goodness-scan", cmd_goodness_scan},
      {"quotient", cmd_quotient},
  };
  return m;
}

std::string render(const Report& rep, Format f) {
  if (f == Format::Json) return rep.j.dump(2) + "\n";
  std::string s;
  for (const auto& line : rep.text) s += line + "\n";
  return s;
}

}  // namespace

std::string resolve_argument(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') return read_file(arg.substr(1));
  return arg;
}

RunResult run(const RunConfig& cfg) {
  auto it = commands().find(cfg.command);
  Report rep;
  try {
    if (it == commands().end()) throw InputError("unknown command '" + cfg.command + "'");
    if (cfg.trunc < 1) throw InputError("--trunc must be at least 1");
    rep = it->second(cfg);
  } catch (const BoundError& e) {
    std::string msg = e.what();
    if (msg.rfind("bound too small", 0) != 0) msg = "bound too small: " + msg;
    rep = Report{2, {{"command", cfg.command}, {"error", msg}}, {"error: " + msg}};
  } catch (const NotBadError& e) {
    rep = Report{2, {{"command", cfg.command}, {"error", e.what()}, {"pair", {e.first, e.second}}}, {std::string("error: ") + e.what()}};
  } catch (const Error& e) {
    rep = Report{2, {{"command", cfg.command}, {"error", e.what()}}, {std::string("error: ") + e.what()}};
  } catch (const nlohmann::json::exception& e) {
    rep = Report{2, {{"command", cfg.command}, {"error", std::string("bad input: ") + e.what()}},
                 {std::string("error: bad input: ") + e.what()}};
  }
  return RunResult{rep.exit_code, render(rep, cfg.format)};
}

}  // namespace wqo::cli
