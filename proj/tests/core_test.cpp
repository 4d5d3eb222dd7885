#include <gtest/gtest.h>

#include "mwdp/instance.hpp"
#include "mwdp/rational.hpp"
#include "support.hpp"

namespace mwdp {
namespace {

using testing::sample_oriented;
using testing::sample_symmetric;
using testing::M;
using testing::R;

TEST(Rational, ParsesIntegersDecimalsAndFractions) {
  EXPECT_EQ(Rational::parse("12"), R(12));
  EXPECT_EQ(Rational::parse("-3"), R(-3));
  EXPECT_EQ(Rational::parse("0.25"), R(1, 4));
  EXPECT_EQ(Rational::parse("-1.5"), R(-3, 2));
  EXPECT_EQ(Rational::parse("6/4"), R(3, 2));
  EXPECT_EQ(Rational::parse("-6/4"), R(-3, 2));
  EXPECT_EQ(Rational::parse(".5"), R(1, 2));
  EXPECT_EQ(Rational::parse("007"), R(7));
  EXPECT_EQ(Rational::parse("010/08"), R(5, 4));
}

TEST(Rational, LowestTermsAndPrinting) {
  Rational r = Rational::parse("10/4");
  EXPECT_EQ(r.numerator(), Integer(5));
  EXPECT_EQ(r.denominator(), Integer(2));
  EXPECT_EQ(r.str(), "5/2");
  EXPECT_EQ(R(-4, 2).str(), "-2");
  EXPECT_EQ(R(0, 7).str(), "0");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "abc", "1/0", "1/-2", "1.2.3", "1e5", "--1", "/3"})
    EXPECT_THROW(Rational::parse(bad), Error) << bad;
}

TEST(Rational, BigValuesStayExact) {
  Rational big = Rational::parse("123456789012345678901234567890/7");
  EXPECT_EQ(big * R(7), Rational::parse("123456789012345678901234567890"));
  EXPECT_FALSE(big.as_int64());
}

TEST(Matrix, Properties) {
  const Matrix2x2 m1 = M(4, 2, 2, 6), m2 = M(7, 5, 6, 2);
  EXPECT_TRUE(m1.property_a());
  EXPECT_FALSE(m1.property_b());
  EXPECT_TRUE(m1.property_c());
  EXPECT_FALSE(m2.property_a());
  EXPECT_TRUE(m2.property_b());
  EXPECT_FALSE(m2.property_c());
  // negative entries are allowed
  EXPECT_TRUE(M(-1, -3, -3, -1).property_a());
  EXPECT_TRUE(M(-1, -3, -3, -1).property_b());
}

TEST(Validate, AcceptsSampleInstance) { EXPECT_NO_THROW(sample_oriented()); }

InstanceData two_vertex(Kind kind) {
  InstanceData d;
  d.kind = kind;
  d.vertices = {"x", "y"};
  d.family = {{"M", M(1, 0, 0, 1)}};
  return d;
}

ErrorCode code_of(const InstanceData& d) {
  try {
    validate(d);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return ErrorCode::Internal;
}

TEST(Validate, OrientedRejectsOppositeArcs) {
  InstanceData d = two_vertex(Kind::Oriented);
  d.arcs = {{"x", "y", R(1), "M"}, {"y", "x", R(1), "M"}};
  EXPECT_EQ(code_of(d), ErrorCode::KindViolation);
}

TEST(Validate, SymmetricRequiresOppositeArcs) {
  InstanceData d = two_vertex(Kind::Symmetric);
  d.arcs = {{"x", "y", R(1), "M"}};
  EXPECT_EQ(code_of(d), ErrorCode::KindViolation);
}

TEST(Validate, NegativeCost) {
  InstanceData d = two_vertex(Kind::General);
  d.arcs = {{"x", "y", R(-1), "M"}};
  EXPECT_EQ(code_of(d), ErrorCode::NegativeCost);
}

TEST(Validate, OtherErrorsNameTheArc) {
  InstanceData d = two_vertex(Kind::General);
  d.arcs = {{"x", "x", R(1), "M"}};
  EXPECT_EQ(code_of(d), ErrorCode::SelfLoop);
  d.arcs = {{"x", "y", R(1), "M"}, {"x", "y", R(2), "M"}};
  EXPECT_EQ(code_of(d), ErrorCode::DuplicateArc);
  d.arcs = {{"x", "y", R(1), "Q"}};
  EXPECT_EQ(code_of(d), ErrorCode::UnknownMatrix);
  d.arcs = {{"x", "w", R(1), "M"}};
  EXPECT_EQ(code_of(d), ErrorCode::UnknownVertex);
  try {
    d.arcs = {{"x", "y", R(1), "Q"}};
    validate(d);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("x->y"), std::string::npos);
  }
}

TEST(ArcWeight, ReadsTheRightEntry) {
  const Instance inst = sample_oriented();
  Partition p(3);
  p.set(1, Side::X2);  // x in X1, y in X2
  EXPECT_EQ(arc_weight(inst.arcs()[0], inst.matrix_of(inst.arcs()[0]), p), R(2));

  Partition q(3);
  q.set(1, Side::X2);  // y in X2, z in X1
  EXPECT_EQ(arc_weight(inst.arcs()[1], inst.matrix_of(inst.arcs()[1]), q), R(12));

  Arc zero{0, 1, R(0), 0};
  EXPECT_EQ(arc_weight(zero, M(9, 9, 9, 9), p), R(0));
}

TEST(PartitionWeight, SampleValues) {
  EXPECT_EQ(partition_weight(sample_oriented(), Partition(3, Side::X1)), R(18));
  EXPECT_EQ(partition_weight(sample_symmetric(), Partition(3, Side::X2)), R(24));

  InstanceData d;
  d.vertices = {"a", "b", "c"};
  d.family = {{"M", M(1, 2, 3, 4)}};
  const Instance empty(d);
  EXPECT_EQ(partition_weight(empty, Partition::from_x2_bits(3, 5)), R(0));
}

TEST(PartitionWeight, SamplesByEnumeration) {
  // Both sample instances, by full enumeration of the 8 partitions.
  Rational best_i, best_ii;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    best_i = max(best_i, partition_weight(sample_oriented(), Partition::from_x2_bits(3, bits)));
    best_ii = max(best_ii, partition_weight(sample_symmetric(), Partition::from_x2_bits(3, bits)));
  }
  EXPECT_EQ(best_i, R(18));
  EXPECT_EQ(best_ii, R(24));
}

class PartitionWeightProperty : public ::testing::TestWithParam<int> {};

TEST_P(PartitionWeightProperty, MatchesOracleAndSymmetries) {
  testing::Gen gen(1000 + GetParam());
  const Kind kinds[] = {Kind::General, Kind::Oriented, Kind::Symmetric};
  const Instance inst = gen.instance(
      static_cast<std::size_t>(gen.uniform(1, 7)), kinds[GetParam() % 3], 3,
      [&] { return gen.any_matrix(); });

  // transposed-by-side copy of the instance
  InstanceData swapped = inst.data();
  for (auto& [id, m] : swapped.family) m = m.side_swapped();
  const Instance inst_swapped(swapped);

  const Rational lambda = gen.rational(1, 5);
  InstanceData scaled = inst.data();
  for (auto& a : scaled.arcs) a.cost *= lambda;
  const Instance inst_scaled(scaled);

  const std::size_t n = inst.num_vertices();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    const Partition p = Partition::from_x2_bits(n, bits);
    const Rational w = partition_weight(inst, p);
    EXPECT_EQ(w, testing::oracle_weight(inst, p.sides()));
    EXPECT_EQ(partition_weight(inst_swapped, p.swapped()), w);
    EXPECT_EQ(partition_weight(inst_scaled, p), w * lambda);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, PartitionWeightProperty, ::testing::Range(0, 60));

TEST(Partition, PreferenceIsX1First) {
  Partition all_x1(3), only_z(3);
  only_z.set(0, Side::X2);
  only_z.set(1, Side::X2);
  EXPECT_TRUE(preferred(all_x1, only_z));
  EXPECT_FALSE(preferred(only_z, all_x1));
}

}  // namespace
}  // namespace mwdp
