#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

namespace {

struct Spec {
  const char* name;
  const char* help;
  std::vector<const char*> docs;   // JSON inputs
  std::vector<const char*> ints;   // integer options
  std::vector<const char*> flags;  // boolean switches
  bool needs_qo = true;
};

const std::vector<Spec> specs = {
    {"embed", "decide u <=emb v and print a witness", {"u", "v"}, {}, {"weak"}},
    {"verify-witness", "check an embedding witness", {"u", "v", "witness"}, {}, {}},
    {"cofembeds", "decide cofinal embeddability", {"u", "v"}, {}, {"weak"}},
    {"decompose", "split u into indecomposable parts", {"u"}, {}, {"weak"}},
    {"iota", "map a set term to a sequence", {"x"}, {}, {}},
    {"eta", "map a sequence to a set term", {"u"}, {}, {"starred"}},
    {"roundtrip", "check eta(iota(x)) ~ x", {"x"}, {}, {"starred"}},
    {"unwind", "unwind a bad prefix into a partial array (default: truncated Rado prefix)", {"prefix"}, {"n", "depth"}, {"starred"}, false},
    {"wind", "wind a tame array at {n}", {"array"}, {"n"}, {}, false},
    {"rado-suite", "incomparability, descent and unwinding checks on B_n", {}, {"n"}, {}, false},
    {"ramsey", "search a homogeneous set for a coloring of [N]^k", {"coloring"}, {"k", "target", "bound"}, {}, false},
    {"is-bad", "check badness of a tame array on a bound", {"array"}, {"bound"}, {}, false},
    {"extract", "extract a goodness witness or a contradiction", {"array"}, {"bound", "target"}, {}, false},
    {"goodness-scan", "find the first good pair in a stream of sequences", {"stream"}, {"limit", "max-size", "depth", "blocks", "parts"}, {"weak"}},
    {"quotient", "print the ~ classes and covers of a finite term universe", {}, {"depth", "width"}, {"starred"}},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wqo: ordinals, downsets, hereditary sets and sequences"};
  app.require_subcommand(1);

  wqo::cli::RunConfig cfg;
  std::string format = "json";
  std::map<std::string, std::string> raw;
  std::map<std::string, std::int64_t> ints;
  std::map<std::string, bool> flags;

  for (const auto& s : specs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--qo", cfg.qo_spec, "qo: built-in name (rado, omega, point, chainN, antichainN), JSON or @file")
        ->required(s.needs_qo);
    sub->add_option("--trunc", cfg.trunc, "truncation bound")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    sub->add_option("--output,-o", cfg.output, "write the report to a file");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    for (const char* d : s.docs) sub->add_option(std::string("--") + d, raw[d], "JSON document or @file");
    for (const char* i : s.ints) sub->add_option(std::string("--") + i, ints[i]);
    for (const char* f : s.flags) sub->add_flag(std::string("--") + f, flags[f]);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  cfg.format = format == "text" ? wqo::cli::Format::Text : wqo::cli::Format::Json;
  auto given = [&](const std::string& name) {
    auto* opt = sub->get_option_no_throw("--" + name);
    return opt != nullptr && opt->count() > 0;
  };
  try {
    cfg.qo_spec = cfg.qo_spec.empty() ? "" : wqo::cli::resolve_argument(cfg.qo_spec);
    for (auto& [k, v] : raw)
      if (given(k)) cfg.inputs[k] = wqo::cli::resolve_argument(v);
    for (auto& [k, v] : ints)
      if (given(k)) cfg.ints[k] = v;
    for (auto& [k, v] : flags)
      if (v) cfg.flags.insert(k);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  auto res = wqo::cli::run(cfg);
  if (cfg.output.empty()) {
    std::cout << res.report;
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    out << res.report;
  }
  return res.exit_code;
}
