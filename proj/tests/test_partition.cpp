#include <catch_amalgamated.hpp>

#include "hookpair/partition.hpp"
#include "oracle.hpp"

using namespace hookpair;

namespace {
std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }
}  // namespace

TEST_CASE("partition_new accepts valid input", "[partition]") {
  const auto p = Partition::make({6, 5, 3, 1}, 4, 6);
  CHECK(p.k() == 4);
  CHECK(p.n() == 6);
  CHECK(p.weight() == 15);
  CHECK(p.part(1) == 6);
  CHECK(p.part(4) == 1);
  CHECK(p.part(5) == 0);

  const auto empty = Partition::make({0, 0}, 2, 3);
  CHECK(empty.weight() == 0);
}

TEST_CASE("partition_new names the violated invariant", "[partition]") {
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::IoError;
  };
  CHECK(code_of([] { Partition::make({3, 5}, 2, 5); }) == ErrorCode::NotWeaklyDecreasing);
  CHECK(code_of([] { Partition::make({7, 1}, 2, 6); }) == ErrorCode::PartExceedsN);
  CHECK(code_of([] { Partition::make({2, 1}, 3, 6); }) == ErrorCode::WrongLength);
  CHECK(code_of([] { Partition::make({1, -1}, 2, 6); }) == ErrorCode::NotWeaklyDecreasing);
  CHECK(code_of([] { Partition::make({1}, 1, 0); }) == ErrorCode::InvalidBound);
}

TEST_CASE("padded fills trailing zeros", "[partition]") {
  CHECK(parts_of(Partition::padded({11, 11, 9, 8, 8, 6, 3, 1}, 9, 11)) ==
        std::vector<int>{11, 11, 9, 8, 8, 6, 3, 1, 0});
}

TEST_CASE("conjugate", "[partition]") {
  CHECK(parts_of(conjugate(Partition::make({2, 1}, 2, 2))) == std::vector<int>{2, 1});
  const auto c = conjugate(Partition::make({5, 4, 2, 1, 0}, 5, 6));
  CHECK(parts_of(c) == std::vector<int>{4, 3, 2, 2, 1, 0});
  CHECK(c.k() == 6);
  CHECK(c.n() == 5);
  CHECK(parts_of(conjugate(Partition::make({0, 0, 0}, 3, 2))) == std::vector<int>{0, 0});

  // Against column lengths counted from cells, and conjugation is an involution.
  for (int k = 1; k <= 5; ++k) {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& p : enumerate_partitions(k, n)) {
        REQUIRE(parts_of(conjugate(p)) == oracle::conjugate(parts_of(p), n));
        REQUIRE(conjugate(conjugate(p)) == p);
      }
    }
  }
}

TEST_CASE("enumerate_partitions", "[partition]") {
  const auto small = enumerate_partitions(1, 2);
  REQUIRE(small.size() == 3);
  CHECK(parts_of(small[0]) == std::vector<int>{0});
  CHECK(parts_of(small[2]) == std::vector<int>{2});
  CHECK(enumerate_partitions(2, 2).size() == 6);

  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 6; ++n) {
      const auto all = enumerate_partitions(k, n);
      std::vector<std::vector<int>> seqs;
      for (const auto& p : all) seqs.push_back(parts_of(p));
      INFO("k=" << k << " n=" << n);
      CHECK(static_cast<long long>(all.size()) == oracle::binomial(n + k, k));
      // Lexicographic order and exactly the recursive oracle's set.
      CHECK(seqs == oracle::partitions(k, n));
    }
  }
}
