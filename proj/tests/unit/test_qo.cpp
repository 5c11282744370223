#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "wqo/downset.hpp"
#include "wqo/error.hpp"
#include "wqo/qo.hpp"

using namespace wqo;

namespace {

Element N(std::uint64_t n) { return Element::natural(n); }
Element R(std::uint64_t i, std::uint64_t j) { return Element::pair(i, j); }
Element A(unsigned i) { return Element::named(i); }

std::vector<QoHandle> registered() {
  return {chain_qo(3),
          antichain_qo(3),
          point_qo(),
          finite_qo({"p", "q", "r"}, {{true, true, true}, {false, true, true}, {false, true, true}}),
          omega_qo(),
          rado_qo(),
          product(chain_qo(2), omega_qo()),
          product(rado_qo(), omega_qo()),
          product(omega_qo(), omega_qo()),
          next_level(antichain_qo(2), 1),
          next_level(chain_qo(2), 2)};
}

}  // namespace

TEST(Qo, LeqExamples) {
  auto ch = chain_qo(2);
  EXPECT_TRUE(leq(ch, A(0), A(1)));
  EXPECT_FALSE(leq(ch, A(1), A(0)));
  auto rado = rado_qo();
  EXPECT_TRUE(leq(rado, R(0, 1), R(2, 3)));
  EXPECT_FALSE(leq(rado, R(0, 3), R(3, 4)));
  EXPECT_TRUE(leq(rado, R(0, 2), R(0, 5)));
}

TEST(Qo, RadoMatchesFormula) {
  auto rado = rado_qo();
  auto ps = oracle::rado_pairs_upto(9);
  for (auto [i, j] : ps)
    for (auto [k, l] : ps) ASSERT_EQ(leq(rado, R(i, j), R(k, l)), oracle::rado_leq(i, j, k, l));
}

TEST(Qo, EnumerateExamples) {
  EXPECT_EQ(enumerate(rado_qo(), 0), R(0, 1));
  EXPECT_EQ(enumerate(rado_qo(), 2), R(1, 2));
  EXPECT_EQ(enumerate(omega_qo(), 7), N(7));
  std::vector<Element> want{R(0, 1), R(0, 2), R(1, 2), R(0, 3), R(1, 3), R(2, 3)};
  for (std::size_t n = 0; n < want.size(); ++n) EXPECT_EQ(enumerate(rado_qo(), n), want[n]);
}

TEST(Qo, ProductExamples) {
  auto p = product(chain_qo(2), omega_qo());
  EXPECT_TRUE(leq(p, Element::product(A(0), N(0)), Element::product(A(1), N(1))));
  EXPECT_FALSE(leq(p, Element::product(A(1), N(0)), Element::product(A(0), N(1))));
  auto q = product(rado_qo(), omega_qo());
  EXPECT_TRUE(leq(q, Element::product(R(0, 1), N(5)), Element::product(R(0, 2), N(5))));
}

TEST(Qo, MembershipErrors) {
  EXPECT_THROW(leq(rado_qo(), N(1), N(2)), InputError);
  EXPECT_THROW(leq(chain_qo(2), A(0), A(5)), InputError);
  EXPECT_THROW(check_member(rado_qo(), R(3, 3)), InputError);
  EXPECT_FALSE(belongs(omega_qo(), R(0, 1)));
}

TEST(Qo, FiniteValidation) {
  EXPECT_THROW(finite_qo({"a", "b"}, {{false, true}, {false, true}}), InputError);  // not reflexive
  EXPECT_THROW(finite_qo({"a", "b", "c"}, {{true, true, false}, {false, true, true}, {false, false, true}}),
               InputError);  // not transitive
  EXPECT_THROW(finite_qo({"a", "b"}, {{true, true}}), InputError);
  EXPECT_THROW(finite_qo({"a", "a"}, {{true, false}, {false, true}}), InputError);
}

TEST(Qo, LawsOnSampledTriples) {
  std::mt19937_64 rng(11);
  for (const auto& qo : registered()) {
    auto size = qo.size();
    std::uint64_t range = size ? *size : 400;
    int violations = 0;
    for (int t = 0; t < 1000; ++t) {
      Element a = enumerate(qo, rng() % range), b = enumerate(qo, rng() % range), c = enumerate(qo, rng() % range);
      if (!leq(qo, a, a)) ++violations;
      if (leq(qo, a, b) && leq(qo, b, c) && !leq(qo, a, c)) ++violations;
    }
    EXPECT_EQ(violations, 0) << qo_str(qo);
  }
}

TEST(Qo, RadoDiagonalPrefixIsGood) {
  auto rado = rado_qo();
  std::vector<Element> seq;
  for (int n = 0; n < 100; ++n) seq.push_back(enumerate(rado, n));
  // every diagonal prefix of length >= 2 has a good pair
  for (std::size_t len = 2; len <= seq.size(); ++len) {
    bool good = false;
    for (std::size_t i = 0; i < len && !good; ++i)
      for (std::size_t j = i + 1; j < len && !good; ++j) good = leq(rado, seq[i], seq[j]);
    ASSERT_TRUE(good) << len;
  }
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    std::set<std::uint64_t> idx;
    while (idx.size() < 100) idx.insert(rng() % 10000);
    std::vector<Element> s;
    for (auto i : idx) s.push_back(enumerate(rado, i));
    std::shuffle(s.begin(), s.end(), rng);
    bool good = false;
    for (std::size_t i = 0; i < s.size() && !good; ++i)
      for (std::size_t j = i + 1; j < s.size() && !good; ++j) good = leq(rado, s[i], s[j]);
    ASSERT_TRUE(good);
  }
}

TEST(Qo, EnumerationInjectiveAndInvertible) {
  for (const auto& qo : {omega_qo(), rado_qo(), product(rado_qo(), omega_qo()), product(chain_qo(2), omega_qo()),
                         product(omega_qo(), omega_qo())}) {
    std::set<Element> seen;
    for (std::uint64_t n = 0; n < 10000; ++n) {
      Element e = enumerate(qo, n);
      ASSERT_TRUE(belongs(qo, e));
      ASSERT_TRUE(seen.insert(e).second) << qo_str(qo) << " n=" << n;
      ASSERT_EQ(enumeration_index(qo, e), n) << qo_str(qo);
    }
  }
}

TEST(Qo, FiniteCarrier) {
  EXPECT_EQ(finite_carrier(antichain_qo(3))->size(), 3u);
  EXPECT_EQ(finite_carrier(product(chain_qo(2), antichain_qo(3)))->size(), 6u);
  EXPECT_FALSE(finite_carrier(rado_qo()).has_value());
  EXPECT_EQ(rado_count_upto(6), 21u);
  // pairs with j <= T come first in the diagonal order
  for (std::uint64_t n = 0; n < rado_count_upto(6); ++n) EXPECT_LE(enumerate(rado_qo(), n).second(), 6u);
  EXPECT_EQ(enumerate(rado_qo(), rado_count_upto(6)).second(), 7u);
}

TEST(Qo, Strings) {
  EXPECT_EQ(element_str(rado_qo(), R(1, 3)), "(1,3)");
  EXPECT_EQ(element_str(antichain_qo(2), A(1)), "b");
}
