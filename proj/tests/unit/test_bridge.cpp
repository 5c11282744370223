#include <gtest/gtest.h>

#include "wqo/bridge.hpp"
#include "wqo/error.hpp"

using namespace wqo;

namespace {

Element A(unsigned i) { return Element::named(i); }
Element R(std::uint64_t i, std::uint64_t j) { return Element::pair(i, j); }
VTerm U(const Element& e) { return VTerm::ur(e); }
VTerm S(std::vector<VTerm> ms) { return VTerm::set(std::move(ms)); }
SeqTerm at(unsigned i) { return SeqTerm::atom(A(i)); }
SeqTerm cat(std::vector<SeqTerm> ps) { return SeqTerm::cat(std::move(ps)); }
SeqTerm rep(std::vector<SeqTerm> bs) { return SeqTerm::rep(std::move(bs)); }

}  // namespace

TEST(Bridge, IotaExamples) {
  auto pt = point_qo();
  EXPECT_EQ(iota(pt, U(A(0))), at(0));
  EXPECT_EQ(iota(pt, S({U(A(0))})), rep({at(0)}));
  auto ac = antichain_qo(2);
  EXPECT_EQ(iota(ac, S({U(A(0)), S({U(A(1))})})), rep({at(0), rep({at(1)})}));
}

TEST(Bridge, EtaExamples) {
  auto ac = antichain_qo(2);
  for (bool s : {false, true}) {
    EXPECT_EQ(eta(ac, at(0), s), U(A(0)));
    EXPECT_EQ(eta(ac, rep({at(0)}), s), S({U(A(0))}));
    EXPECT_EQ(eta(ac, cat({rep({at(0)}), at(1)}), s), U(A(1)));
    auto e = eta(ac, rep({at(0), rep({at(1)})}), s);
    EXPECT_EQ(e, S({U(A(0)), U(A(1)), S({U(A(1))})}));
    EXPECT_TRUE(sim_equiv(ac, e, S({U(A(0)), S({U(A(1))})}), s));
  }
  // eta of a Cat is the eta of its last part
  EXPECT_EQ(eta(ac, cat({at(1), rep({at(0)})}), false), S({U(A(0))}));
}

TEST(Bridge, PrefixEtaSet) {
  auto ac = antichain_qo(2);
  auto pe = prefix_eta_set(ac, rep({at(1)}));
  EXPECT_EQ(pe, (std::vector<VTerm>{U(A(1)), S({U(A(1))})}));
  auto u = rep({at(0), rep({at(1)})});
  auto pu = prefix_eta_set(ac, u);
  EXPECT_TRUE(std::find(pu.begin(), pu.end(), eta(ac, u, false)) != pu.end());
}

TEST(Bridge, EtaAgreesWithDirectEvaluation) {
  for (const auto& qo : {antichain_qo(2), chain_qo(2)}) {
    auto ts = seq_terms_by_size({A(0), A(1)}, SeqShape{6, 2, 2, 2});
    for (const auto& u : ts)
      for (bool s : {false, true}) ASSERT_TRUE(sim_equiv(qo, eta(qo, u, s), eta_direct(qo, u, s), s)) << seq_str(qo, u);
  }
}

TEST(Bridge, TailInvariance) {
  auto ac = antichain_qo(2);
  auto ts = seq_terms_by_size({A(0), A(1)}, SeqShape{6, 2, 2, 2});
  for (const auto& u : ts) {
    if (u.length().is_successor()) continue;
    for (const auto& tc : tail_classes(u))
      for (bool s : {false, true}) ASSERT_TRUE(sim_equiv(ac, eta(ac, u, s), eta(ac, tc.tail, s), s)) << seq_str(ac, u);
  }
}

TEST(Bridge, Roundtrip) {
  auto pt = point_qo();
  EXPECT_TRUE(roundtrip_check(pt, U(A(0)), false));
  auto ac = antichain_qo(2);
  for (bool s : {false, true}) EXPECT_TRUE(roundtrip_check(ac, S({U(A(0)), U(A(1))}), s));
  for (const auto& qo : {chain_qo(2), antichain_qo(2), antichain_qo(3)})
    for (const auto& x : vterm_universe(*finite_carrier(qo), 2, 3))
      for (bool s : {false, true}) ASSERT_TRUE(roundtrip_check(qo, x, s)) << vterm_str(qo, x);
}

TEST(Bridge, IotaPreservesAndReflects) {
  for (const auto& qo : {chain_qo(2), antichain_qo(2)}) {
    auto uni = vterm_universe(*finite_carrier(qo), 2, 3);
    std::vector<SeqTerm> is;
    for (const auto& x : uni) is.push_back(iota(qo, x));
    for (bool s : {false, true})
      for (std::size_t i = 0; i < uni.size(); ++i)
        for (std::size_t j = 0; j < uni.size(); ++j)
          ASSERT_EQ(lesssim(qo, uni[i], uni[j], s), embeds(qo, is[i], is[j], s))
              << vterm_str(qo, uni[i]) << " vs " << vterm_str(qo, uni[j]) << " starred=" << s;
  }
}

TEST(Bridge, IotaImagesIndecomposable) {
  for (const auto& qo : {chain_qo(2), antichain_qo(3)})
    for (const auto& x : vterm_universe(*finite_carrier(qo), 2, 2))
      for (bool s : {false, true}) ASSERT_TRUE(is_indecomposable(qo, iota(qo, x), s)) << vterm_str(qo, x);
}

TEST(Bridge, CofembedsMatchesEta) {
  for (const auto& qo : {antichain_qo(2), chain_qo(2)}) {
    auto ts = seq_terms_by_size({A(0), A(1)}, SeqShape{5, 2, 2, 2});
    for (bool s : {false, true})
      for (const auto& u : ts)
        for (const auto& v : ts) {
          bool direct = cofembeds_direct(qo, u, v, s);
          ASSERT_EQ(direct, lesssim(qo, eta(qo, u, s), eta(qo, v, s), s)) << seq_str(qo, u) << " vs " << seq_str(qo, v);
        }
  }
}

TEST(Bridge, WindExamples) {
  auto g = rado_array();
  auto h2 = wind(g, 2, 6);
  EXPECT_EQ(h2, S({U(R(2, 3)), U(R(2, 4)), U(R(2, 5)), U(R(2, 6))}));
  EXPECT_TRUE(sim_equiv(rado_qo(), h2, truncate_downset(rado_bad_downset(2), rado_count_upto(6)), false));
  auto c = constant_array(antichain_qo(2), A(1), 1);
  for (std::uint32_t n = 0; n < 5; ++n) EXPECT_EQ(wind(c, n, 6), U(A(1)));
  EXPECT_THROW(wind(g, 6, 6), BoundError);
  TameArray broken = g;
  broken.qo = omega_qo();
  EXPECT_THROW(wind(broken, 1, 6), InputError);
}

TEST(Bridge, WindInvertsUnwindOnRado) {
  auto rado = rado_qo();
  for (std::uint32_t n = 1; n <= 10; ++n) {
    std::uint32_t T = std::max<std::uint32_t>(6, n + 1);
    auto h = wind(rado_array(), n, T);
    ASSERT_TRUE(sim_equiv(rado, h, truncate_downset(rado_bad_downset(n), rado_count_upto(T)), false)) << n;
  }
  // the wound sequence is bad, and unwinding it recovers the Rado array
  std::vector<VTerm> f;
  for (std::uint32_t n = 0; n < 5; ++n) f.push_back(wind(rado_array(), n, 8));
  EXPECT_FALSE(check_bad_prefix(rado, f, false).has_value());
  auto a = unwind(rado, f, 2, false);
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) EXPECT_EQ(a.values.at({i, j}).q, R(i, j));
  EXPECT_TRUE(a.violations.empty());
}

TEST(Bridge, WindOfTable) {
  TameArray g;
  g.qo = antichain_qo(2);
  g.front = uniform_front(2);
  g.valuer.kind = Valuer::Kind::Table;
  g.valuer.abstraction = Abstraction::Mod;
  g.valuer.param = 2;
  g.valuer.table = {{{0, 0}, A(0)}, {{0, 1}, A(1)}, {{1, 0}, A(1)}, {{1, 1}, A(0)}};
  auto h = wind(g, 0, 5);
  EXPECT_EQ(h, S({U(A(0)), U(A(1))}));
}
