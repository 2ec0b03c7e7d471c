#include <catch_amalgamated.hpp>

#include "hookpair/projective.hpp"
#include "hookpair/serialize.hpp"
#include "hookpair/sweep.hpp"
#include "oracle.hpp"

using namespace hookpair;

namespace {

ClassBPartition from_strict(std::vector<int> l, int k) { return alpha_from_strict(StrictPartition::make(std::move(l), k)); }

std::vector<int> parts_of(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

oracle::Cells filter_sum(const oracle::Cells& g, int sum, bool below) {
  oracle::Cells out;
  for (const auto& [r, c] : g) {
    if ((r + c <= sum) == below) out.emplace_back(r, c);
  }
  return out;
}

}  // namespace

TEST_CASE("alpha_from_strict", "[projective]") {
  CHECK(parts_of(from_strict({4, 2}, 5).alpha) == std::vector<int>{5, 4, 2, 1, 0});
  CHECK(parts_of(from_strict({11, 9, 8, 5, 3, 2}, 12).alpha) ==
        std::vector<int>{12, 11, 11, 9, 8, 8, 6, 4, 3, 3, 1, 0});
  CHECK(parts_of(from_strict({}, 3).alpha) == std::vector<int>{0, 0, 0});
  CHECK(parts_of(from_strict({3, 2, 1}, 3).alpha) == std::vector<int>{4, 4, 4});
  CHECK(from_strict({4, 2}, 5).alpha.n() == 6);

  CHECK_THROWS_AS(StrictPartition::make({2, 2}, 3), Error);
  CHECK_THROWS_AS(StrictPartition::make({4}, 3), Error);
  CHECK_THROWS_AS(StrictPartition::make({1, 0}, 3), Error);
}

TEST_CASE("is_class_B", "[projective]") {
  CHECK(is_class_B(Partition::make({5, 4, 2, 1, 0}, 5, 6)).has_value());
  CHECK(is_class_B(Partition::make({5, 4, 2, 1, 0}, 5, 6))->lambda.parts() == std::vector<int>{4, 2});
  CHECK_FALSE(is_class_B(Partition::make({5, 4, 2, 2, 0}, 5, 6)).has_value());
  CHECK_FALSE(is_class_B(Partition::make({1, 1}, 2, 3)).has_value());
  CHECK_THROWS_AS(is_class_B(Partition::make({1}, 1, 1)), Error);

  // Round trip, and the accepted set has exactly 2^k members.
  for (int k = 1; k <= 8; ++k) {
    std::size_t accepted = 0;
    for_each_partition(k, k + 1, [&](const Partition& p) {
      if (auto b = is_class_B(p)) {
        ++accepted;
        REQUIRE(alpha_from_strict(b->lambda).alpha == p);
      }
    });
    REQUIRE(accepted == (std::size_t{1} << k));
    for (const auto& b : enumerate_class_B(k)) REQUIRE(is_class_B(b.alpha)->lambda == b.lambda);
  }
}

TEST_CASE("diagonals and the p/q split", "[projective]") {
  const ClassBPartition b = from_strict({4, 2}, 5);
  const CellSet d = build_region(b.alpha, RegionKind::D);
  const PQSplit pq = split_pq(d, RegionKind::D, b);
  CHECK(d.size() == 12);
  CHECK(pq.p.size() == 6);
  CHECK(pq.q.size() == 6);

  const DiagonalSpec dd = diagonal_spec(DiagonalKind::D, b);
  CHECK(dd.sum == 6);
  CHECK(dd.cells == std::vector<Cell>{{5, 1}, {4, 2}});
  CHECK(diagonal_spec(DiagonalKind::T, b).sum == 11);
  CHECK(diagonal_spec(DiagonalKind::T, b).cells.size() == 3);
  CHECK(diagonal_spec(DiagonalKind::Tstar, b).sum == 12);
  for (const Cell& x : dd.cells) CHECK(d.contains(x));

  CHECK_THROWS_AS(split_pq(d, RegionKind::V, b), Error);

  for (int k = 1; k <= 8; ++k) {
    for (const auto& c : enumerate_class_B(k)) {
      int weight = 0;
      for (int l : c.lambda.parts()) weight += l;
      const CellSet dk = build_region(c.alpha, RegionKind::D);
      const PQSplit s = split_pq(dk, RegionKind::D, c);
      REQUIRE(static_cast<int>(s.q.size()) == weight);
      REQUIRE(static_cast<int>(s.p.size()) == weight);
      const CellSet sq = build_region(c.alpha, RegionKind::SQ);
      const CellSet t = build_region(c.alpha, RegionKind::T);
      REQUIRE(split_pq(sq, RegionKind::SQ, c).p == split_pq(t, RegionKind::T, c).p);
      for (const Cell& x : diagonal_spec(DiagonalKind::T, c).cells) REQUIRE(t.contains(x));
      for (const Cell& x : diagonal_spec(DiagonalKind::Tstar, c).cells) {
        REQUIRE(build_region(c.alpha, RegionKind::Tstar).contains(x));
      }
    }
  }
}

TEST_CASE("shift row and T^i", "[projective]") {
  const ClassBPartition b = from_strict({11, 9, 8, 5, 3, 2}, 12);
  CHECK(shift_row(b, 5) == 9);
  CHECK(split_index(b.alpha, 5) == 8);
  const ShiftedT ti = shift_Ti(b, 5);
  CHECK(ti.u == 9);
  const CellSet t = build_region(b.alpha, RegionKind::T);
  CHECK(ti.cells.size() == t.size());
  for (const auto& r : ti.cells.rows()) {
    if (r.row >= 9) {
      CHECK(r.col_min == 13);
      CHECK(r.col_max == 25);
    } else {
      CHECK(ti.cells.row(r.row) == t.row(r.row));
    }
  }
  CHECK_THROWS_AS(shift_row(b, 0), Error);
  CHECK_THROWS_AS(shift_row(b, 14), Error);

  const ClassBPartition rect = from_strict({3, 2, 1}, 3);
  for (int i = 1; i <= 4; ++i) {
    CHECK_FALSE(shift_row(rect, i).has_value());
    CHECK(shift_Ti(rect, i).cells == build_region(rect.alpha, RegionKind::T));
    CHECK_THROWS_AS(check_prop_techprop(rect, i), Error);
    CHECK_THROWS_AS(m_decomposition(rect, i), Error);
  }

  for (int k = 1; k <= 8; ++k) {
    for (const auto& c : enumerate_class_B(k)) {
      for (int i = 1; i <= k + 1; ++i) {
        const int expected = oracle::shift_row(parts_of(c.alpha), i);
        REQUIRE(shift_row(c, i).value_or(0) == expected);
      }
    }
  }
}

TEST_CASE("techprop inequalities", "[projective]") {
  const auto rep = check_prop_techprop(from_strict({11, 9, 8, 5, 3, 2}, 12), 5);
  CHECK(rep.u == 9);
  CHECK(rep.all());

  for (int k = 1; k <= 8; ++k) {
    for (const auto& c : enumerate_class_B(k)) {
      for (int i = 1; i <= k + 1; ++i) {
        if (!shift_row(c, i)) continue;
        const auto r = check_prop_techprop(c, i);
        INFO("alpha=" << c.alpha.to_string() << " i=" << i);
        REQUIRE(r.all());
      }
    }
  }
}

TEST_CASE("M decomposition on the worked example", "[projective]") {
  const ClassBPartition b = from_strict({11, 9, 8, 5, 3, 2}, 12);
  const MDecomposition md = m_decomposition(b, 5);
  CHECK(md.u == 9);
  CHECK(md.s == 8);
  CHECK(md.split_row == 8);
  CHECK(md.passes());
  CHECK(md.ranges_at_split_row_ok());
  CHECK(md.m12 == integer_range(1, 4));
  CHECK(md.m21 == integer_range(0, 4));
  CHECK(md.m22 == integer_range(1, 3));
  CHECK(md.m3 == md.m4 + integer_range(0, 3));
}

TEST_CASE("M decomposition at i = 1", "[projective]") {
  const ClassBPartition b = from_strict({4, 2}, 5);
  for (int i = 1; i <= 6; ++i) {
    if (!shift_row(b, i)) continue;
    const MDecomposition md = m_decomposition(b, i);
    INFO("i=" << i);
    CHECK(md.structural_ok());
    if (i == 1) CHECK(md.m3 == md.m4);
  }
}

TEST_CASE("closed-form ranges in s fail once s exceeds u", "[projective]") {
  const ClassBPartition b = from_strict({2}, 2);
  REQUIRE(parts_of(b.alpha) == std::vector<int>{3, 1});
  const MDecomposition md = m_decomposition(b, 1);
  CHECK(md.u == 2);
  CHECK(md.s == 3);
  CHECK(md.split_row == 2);
  CHECK(md.m12 == integer_range(0, 0));
  CHECK(integer_range(md.u - md.s, 2 - md.s) == integer_range(-1, -1));
  CHECK(md.structural_ok());
  CHECK(md.ranges_at_split_row_ok());
  CHECK_FALSE(md.ranges_ok());
  CHECK_FALSE(md.passes());
}

TEST_CASE("split row is min(s, u)", "[projective][property]") {
  for (int k = 1; k <= 8; ++k) {
    for (const auto& c : enumerate_class_B(k)) {
      for (int i = 1; i <= k + 1; ++i) {
        const auto u = shift_row(c, i);
        if (!u) continue;
        const MDecomposition md = m_decomposition(c, i);
        INFO("alpha=" << c.alpha.to_string() << " i=" << i);
        REQUIRE(md.split_row == std::min(md.s, *u));
        REQUIRE(md.structural_ok());
        REQUIRE(md.ranges_at_split_row_ok());
        REQUIRE(md.ranges_ok() == (md.s <= *u));
      }
    }
  }
}

TEST_CASE("projective identity against a brute-force count", "[projective][property]") {
  for (int k = 1; k <= 7; ++k) {
    for (const auto& c : enumerate_class_B(k)) {
      const auto a = parts_of(c.alpha);
      const int n = k + 1;
      const oracle::Cells d = oracle::young(a);
      oracle::Cells r;
      for (int row = 1; row <= k; ++row) {
        for (int col = 1; col <= n; ++col) r.emplace_back(row, col);
      }
      oracle::Cells sq = oracle::skew_T(a, n);
      for (int row = k + 1; row <= 2 * k; ++row) {
        for (int col = n + a[0] - a[static_cast<std::size_t>(row - k - 1)] + 1; col <= n + a[0]; ++col) {
          sq.emplace_back(row, col);
        }
      }
      sq = oracle::sorted(sq);
      const auto lhs = oracle::al_list(sq, filter_sum(sq, k + 1 + a[0], true));
      const auto rhs = oracle::concat_sorted(oracle::al_list(r, filter_sum(r, k + 1, true)),
                                             oracle::al_list(d, filter_sum(d, k + 1, false)));
      INFO("alpha=" << c.alpha.to_string());
      REQUIRE(lhs == rhs);
      const auto rep = verify_projective(c);
      REQUIRE(rep.theorem_ok());
      REQUIRE(rep.passed());
      REQUIRE(rep.lhs.size() == lhs.size());
    }
  }
}

TEST_CASE("projective report JSON", "[projective][json]") {
  const json j = to_json(verify_projective(from_strict({4, 2}, 5)));
  CHECK(j["alpha"] == json::array({5, 4, 2, 1, 0}));
  CHECK(j["lambda"] == json::array({4, 2}));
  CHECK(j["m"] == 2);
  CHECK(j["theorem"] == "pass");
  CHECK(j["verdict"] == "pass");
  CHECK(j["perI"].size() == 6);
  CHECK(j["perI"][0]["i"] == 1);
}
