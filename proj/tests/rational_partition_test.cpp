#include <gtest/gtest.h>

#include "gwq/errors.hpp"
#include "gwq/partition.hpp"
#include "gwq/rational.hpp"

using namespace gwq;

TEST(Rational, PrintsLowestTerms) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-8, 4)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(to_string(Integer("123456789012345678901234567890")), "123456789012345678901234567890");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "3/2", "-1/3", "87304"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1/0", "x", "1/", "/2", "1.5", "2 "}) {
    EXPECT_THROW(parse_rational(s), ParameterError) << s;
  }
}

TEST(Rational, Binomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 4), 0);
  EXPECT_EQ(binomial(3, -1), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(60, 30), Integer("118264581564861424"));
}

TEST(Partition, NormalizesAndValidates) {
  Partition p({3, 1, 0, 0});
  EXPECT_EQ(p.length(), 2);
  EXPECT_EQ(p.weight(), 4);
  EXPECT_EQ(p.to_string(), "(3,1)");
  EXPECT_EQ(Partition().to_string(), "()");
  EXPECT_THROW(Partition({1, 2}), ParameterError);
  EXPECT_THROW(Partition({2, -1}), ParameterError);
}

TEST(Partition, ConjugateAndComplement) {
  Partition p{3, 1};
  EXPECT_EQ(p.conjugate(), (Partition{2, 1, 1}));
  EXPECT_EQ(p.conjugate().conjugate(), p);
  EXPECT_EQ(p.complement(2, 3), (Partition{2}));
  EXPECT_EQ(Partition().complement(2, 2), (Partition{2, 2}));
  EXPECT_TRUE(p.fits(2, 3));
  EXPECT_FALSE(p.fits(1, 3));
  EXPECT_TRUE(p.contains(Partition{2, 1}));
  EXPECT_FALSE(p.contains(Partition{2, 2}));
}

TEST(Partition, BoxEnumerationCountsBinomial) {
  for (int r = 0; r <= 4; ++r)
    for (int c = 0; c <= 4; ++c) {
      auto all = partitions_in_box(r, c);
      EXPECT_EQ(Integer(static_cast<long>(all.size())), binomial(r + c, r));
      for (std::size_t i = 1; i < all.size(); ++i) {
        EXPECT_LE(all[i - 1].weight(), all[i].weight());
      }
    }
}
