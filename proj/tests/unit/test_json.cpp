#include <gtest/gtest.h>

#include "wqo/bridge.hpp"
#include "wqo/error.hpp"
#include "wqo/json_io.hpp"

using namespace wqo;
using wqo::io::json;

TEST(Json, QoRoundtrip) {
  const char* specs[] = {
      R"({"type":"finite","elements":["a","b"],"leq":[[true,false],[false,true]]})",
      R"({"type":"omega"})",
      R"({"type":"rado"})",
      R"({"type":"product","left":{"type":"rado"},"right":{"type":"omega"}})",
      R"({"type":"level","base":{"type":"antichain","n":2},"k":1})",
  };
  for (const char* s : specs) {
    auto qo = io::qo_from_json(io::parse_json(s));
    auto back = io::qo_from_json(io::qo_to_json(qo));
    EXPECT_TRUE(qo == back) << s;
  }
  EXPECT_EQ(io::qo_from_json(io::parse_json(R"({"type":"chain","n":3})")).size(), 3u);
}

TEST(Json, ParseErrorsCarryPosition) {
  try {
    io::parse_json("{\"type\": omega}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte 10"), std::string::npos) << e.what();
  }
  EXPECT_THROW(io::qo_from_json(io::parse_json(R"({"type":"weird"})")), InputError);
  EXPECT_THROW(io::qo_from_json(io::parse_json(R"({"kind":"omega"})")), InputError);
}

TEST(Json, ElementsAndTerms) {
  auto ac = antichain_qo(2);
  auto u = io::seq_from_json(ac, io::parse_json(R"({"rep":[{"atom":"a"},{"cat":[{"atom":"b"},{"rep":[{"atom":"a"}]}]}]})"));
  EXPECT_EQ(io::seq_from_json(ac, io::seq_to_json(ac, u)), u);
  auto x = io::vterm_from_json(ac, io::parse_json(R"({"set":[{"ur":"a"},{"set":[{"ur":"b"}]}]})"));
  EXPECT_EQ(io::vterm_from_json(ac, io::vterm_to_json(ac, x)), x);
  EXPECT_THROW(io::vterm_from_json(ac, io::parse_json(R"({"set":[]})")), InputError);
  EXPECT_THROW(io::seq_from_json(ac, io::parse_json(R"({"atom":"z"})")), InputError);
  auto rado = rado_qo();
  EXPECT_EQ(io::element_from_json(rado, io::parse_json("[1,3]")), Element::pair(1, 3));
  EXPECT_THROW(io::element_from_json(rado, io::parse_json("[3,1]")), InputError);
  auto p = product(chain_qo(2), omega_qo());
  auto e = io::element_from_json(p, io::parse_json(R"(["b", 4])"));
  EXPECT_EQ(io::element_to_json(p, e).dump(), R"(["b",4])");
}

TEST(Json, DownsetsAndLevels) {
  auto d = rado_bad_downset(3);
  auto j = io::couset_to_json(d);
  EXPECT_EQ(j["generators"].dump(), "[[0,3],[1,3],[2,3]]");
  EXPECT_EQ(io::couset_from_json(j), d);
  auto lvl = next_level(antichain_qo(2), 1);
  auto e = io::element_from_json(lvl, io::parse_json(R"({"downset":{"generators":["a"]}})"));
  EXPECT_EQ(e.kind(), Element::Kind::Set);
  EXPECT_EQ(io::element_from_json(lvl, io::element_to_json(lvl, e)), e);
}

TEST(Json, WitnessRoundtrip) {
  auto ac = antichain_qo(2);
  auto u = SeqTerm::rep({SeqTerm::atom(Element::named(0))});
  auto v = SeqTerm::rep({SeqTerm::atom(Element::named(0)), SeqTerm::atom(Element::named(1))});
  auto w = embed_witness(ac, u, v, false);
  ASSERT_TRUE(w);
  auto back = io::witness_from_json(io::witness_to_json(*w));
  EXPECT_FALSE(check_witness(ac, u, v, back).has_value());
  EXPECT_EQ(io::witness_to_json(back), io::witness_to_json(*w));
}

TEST(Json, TameArrays) {
  auto g = io::tame_array_from_json(io::parse_json(R"({"qo":{"type":"rado"},"front":{"k":2},"valuer":{"kind":"rado-pair"}})"));
  EXPECT_EQ(array_value(g, {2, 5}), Element::pair(2, 5));
  auto t = io::tame_array_from_json(io::parse_json(R"({"qo":{"type":"antichain","n":2},"front":{"k":1},
      "valuer":{"kind":"table","abstraction":"mod","param":2,"table":[{"key":[0],"value":"a"},{"key":[1],"value":"b"}]}})"));
  EXPECT_EQ(array_value(t, {3}), Element::named(1));
  auto back = io::tame_array_from_json(io::tame_array_to_json(t));
  EXPECT_EQ(array_value(back, {4}), Element::named(0));
}

TEST(Json, ArrayDump) {
  auto ac = antichain_qo(2);
  auto a = unwind(ac, {VTerm::ur(Element::named(0)), VTerm::ur(Element::named(1))}, 2, false);
  auto j = io::array_to_json(a);
  EXPECT_EQ(j["front"].dump(), "[[0],[1]]");
  EXPECT_EQ(j["values"]["1"].dump(), R"(["b",0])");
}
