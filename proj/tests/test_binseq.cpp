#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "twochain/binseq.hpp"
#include "twochain/enumerate.hpp"

#include "oracles.hpp"

using namespace twochain;

namespace {

BinarySeq seq(const std::string& s) { return BinarySeq(s); }

std::vector<std::string> strs(const std::vector<BinarySeq>& v) {
  std::vector<std::string> out;
  for (const auto& b : v) out.push_back(b.str());
  return out;
}

template <class F>
void for_each_word(int max_len, F&& fn) {
  for (int n = 0; n <= max_len; ++n)
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      std::string s(n, '0');
      for (int i = 0; i < n; ++i)
        if (bits & (1u << i)) s[i] = '1';
      fn(BinarySeq(s));
    }
}

Poset qn(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i <= j - 2) rel.emplace_back(i, j);
  return Poset::from_relation(n, rel);
}

}  // namespace

TEST_CASE("BinarySeq parsing and order") {
  CHECK(seq("").size() == 0);
  CHECK(seq("1101").size() == 4);
  CHECK(seq("1101").bit(0) == 1);
  CHECK(seq("1101").bit(2) == 0);
  CHECK_THROWS_AS(seq("10a1"), ParseError);
  CHECK(seq("0101") < seq("1010"));
  CHECK(seq("") < seq("0"));
}

TEST_CASE("lower insertions") {
  CHECK(strs(lower_insertions(seq("1101"))) ==
        std::vector<std::string>{"11101", "01101", "10101", "11011", "11001", "11010"});
  CHECK(strs(lower_insertions(seq(""))) == std::vector<std::string>{"1", "0"});
  SECTION("outputs are exactly the single-symbol insertions") {
    for_each_word(8, [](const BinarySeq& a) {
      auto lower = strs(lower_insertions(a));
      std::set<std::string> got(lower.begin(), lower.end());
      CHECK(got.size() == lower.size());  // pairwise distinct
      CHECK(got == oracles::all_single_insertions(a.str()));
    });
  }
}

TEST_CASE("upper insertions") {
  CHECK(strs(upper_insertions(seq("1101"))) ==
        std::vector<std::string>{"01101", "10101", "11001", "11101", "11010", "11011"});
  CHECK(strs(upper_insertions(seq(""))) == std::vector<std::string>{"0", "1"});
  SECTION("same set as the lower list") {
    for_each_word(8, [](const BinarySeq& a) {
      auto lower = strs(lower_insertions(a));
      auto upper = strs(upper_insertions(a));
      CHECK(std::set<std::string>(lower.begin(), lower.end()) ==
            std::set<std::string>(upper.begin(), upper.end()));
    });
  }
}

TEST_CASE("matching permutation w") {
  CHECK(w_of(seq("1101")).images() == std::vector<int>{3, 0, 1, 5, 2, 4});
  CHECK(w_of(seq("")).images() == std::vector<int>{1, 0});
  SECTION("a(i) = a[w(i)] for every word up to length 10") {
    for_each_word(10, [](const BinarySeq& a) {
      auto lower = lower_insertions(a);
      auto upper = upper_insertions(a);
      auto w = w_of(a);
      for (int i = 0; i < a.size() + 2; ++i) REQUIRE(lower[i] == upper[w(i)]);
    });
  }
}

TEST_CASE("opposed") {
  CHECK(opposed(seq("01101"), seq("10101")));
  CHECK_FALSE(opposed(seq("11011"), seq("11010")));
  CHECK_FALSE(opposed(seq("1101"), seq("1101")));
  CHECK_THROWS_AS(opposed(seq("01"), seq("011")), LengthMismatchError);
}

TEST_CASE("seq_poset") {
  SECTION("the 6-element example") {
    auto lp = seq_poset(seq("1101"));
    CHECK(covers(lp.order) == std::vector<std::pair<int, int>>{
                                  {0, 3}, {0, 5}, {1, 2}, {2, 3}, {2, 4}, {4, 5}});
    CHECK(lp.order.strict_pair_count() == 10);
    CHECK(is_two_chain_fast(lp.order));
  }
  SECTION("alternating words give the two-column posets") {
    CHECK(are_isomorphic(seq_poset(seq("10")).order, qn(4)));
    CHECK(are_isomorphic(seq_poset(seq("101")).order, qn(5)));
    CHECK(are_isomorphic(seq_poset(seq("1010")).order, qn(6)));
  }
  SECTION("empty word gives the 2-element antichain") {
    CHECK(seq_poset(seq("")).order == antichain_poset(2));
  }
  SECTION("order is the intersection of the two index orders") {
    for_each_word(8, [](const BinarySeq& a) {
      auto lp = seq_poset(a);
      const int m = a.size() + 2;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          REQUIRE(lp.order.less(i, j) == (i < j && lp.w(i) < lp.w(j)));
    });
  }
  SECTION("opposedness relation is transitive as-is") {
    for_each_word(8, [](const BinarySeq& a) {
      auto els = lower_insertions(a);
      const int m = a.size() + 2;
      auto rel = [&](int i, int j) { return i < j && opposed(els[i], els[j]); };
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k)
            if (rel(i, j) && rel(j, k)) REQUIRE(rel(i, k));
    });
  }
  SECTION("every sequence poset is a 2-chain") {
    for_each_word(9, [](const BinarySeq& a) { REQUIRE(is_two_chain_fast(seq_poset(a).order)); });
    for_each_word(5, [](const BinarySeq& a) {
      REQUIRE(is_two_chain_by_definition(seq_poset(a).order));
    });
  }
}

TEST_CASE("complement and reverse") {
  CHECK(complement(seq("1101")) == seq("0010"));
  CHECK(reverse(seq("1101")) == seq("1011"));
  for_each_word(6, [](const BinarySeq& a) {
    CHECK(complement(complement(a)) == a);
    CHECK(reverse(reverse(a)) == a);
  });
}

TEST_CASE("complement symmetry and duality") {
  SECTION("explicit complement isomorphism, no size cap") {
    for_each_word(9, [](const BinarySeq& a) {
      // a(i) -> complement(a(i)) maps the insertions of a onto those of
      // complement(a), preserving the order
      auto pa = seq_poset(a);
      auto pb = seq_poset(complement(a));
      const int m = a.size() + 2;
      std::vector<int> map(m, -1);
      for (int i = 0; i < m; ++i) {
        auto target = complement(pa.elements[i]);
        for (int j = 0; j < m; ++j)
          if (pb.elements[j] == target) map[i] = j;
        REQUIRE(map[i] >= 0);
      }
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          REQUIRE(pa.order.less(i, j) == pb.order.less(map[i], map[j]));
    });
  }
  SECTION("explicit reversal isomorphism onto the dual") {
    for_each_word(9, [](const BinarySeq& a) {
      auto pa = seq_poset(a);
      auto pb = seq_poset(reverse(a));
      const int m = a.size() + 2;
      std::vector<int> map(m, -1);
      for (int i = 0; i < m; ++i) {
        auto target = reverse(pa.elements[i]);
        for (int j = 0; j < m; ++j)
          if (pb.elements[j] == target) map[i] = j;
        REQUIRE(map[i] >= 0);
      }
      auto d = dual(pa.order);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          REQUIRE(d.less(i, j) == pb.order.less(map[i], map[j]));
    });
  }
  SECTION("backtracking oracle agrees at small sizes") {
    for_each_word(6, [](const BinarySeq& a) {
      CHECK(are_isomorphic(seq_poset(a).order, seq_poset(complement(a)).order));
      CHECK(are_isomorphic(dual(seq_poset(a).order), seq_poset(reverse(a)).order));
    });
  }
}

TEST_CASE("canonical sequences") {
  CHECK(canonical_sequence(antichain_poset(2)) == seq(""));
  CHECK(canonical_sequence(qn(5)) == seq("010"));
  CHECK(canonical_sequence(qn(8)) == seq("010101"));
  CHECK_THROWS_AS(canonical_sequence(chain_poset(3)), NotTwoChainError);
  SECTION("canonical_sequence(seq_poset(a)) = min(a, complement(a))") {
    for_each_word(9, [](const BinarySeq& a) {
      REQUIRE(canonical_sequence(seq_poset(a).order) == std::min(a, complement(a)));
    });
  }
  SECTION("classification: canonical representatives biject with classes") {
    for (int n = 2; n <= 9; ++n) {
      std::set<BinarySeq> expect;
      for_each_word(n - 2, [&](const BinarySeq& a) {
        if (a.size() == n - 2 && a <= complement(a)) expect.insert(a);
      });
      auto got = enumerate_two_chain_sequences(n);
      CHECK(std::set<BinarySeq>(got.begin(), got.end()) == expect);
      CHECK(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST_CASE("self-duality") {
  auto d1010 = is_self_dual(seq("1010"));
  CHECK(d1010.self_dual);
  CHECK(d1010.swaps_chains);
  CHECK_FALSE(d1010.preserves_chains);

  auto d11 = is_self_dual(seq("11"));
  CHECK(d11.self_dual);
  CHECK(d11.preserves_chains);
  CHECK_FALSE(d11.swaps_chains);

  auto d110 = is_self_dual(seq("110"));
  CHECK_FALSE(d110.self_dual);

  auto dempty = is_self_dual(seq(""));
  CHECK(dempty.self_dual);
  CHECK(dempty.preserves_chains);
  CHECK(dempty.swaps_chains);

  SECTION("agrees with the isomorphism oracle") {
    for_each_word(6, [](const BinarySeq& a) {
      auto p = seq_poset(a).order;
      CHECK(is_self_dual(a).self_dual == are_isomorphic(p, dual(p)));
    });
  }
}
