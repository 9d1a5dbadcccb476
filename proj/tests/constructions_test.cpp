#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "test_support.hpp"
#include "triff/affine_plane.hpp"
#include "triff/constructions.hpp"

using namespace triff;
using namespace triff::testing;

TEST(Primes, SmallValues) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(smallest_prime_at_least(0), 2u);
  EXPECT_EQ(smallest_prime_at_least(8), 11u);
  EXPECT_EQ(smallest_prime_at_least(13), 13u);
}

TEST(OneBounded, TwoCoordinates) {
  const auto c = one_bounded(2);
  EXPECT_EQ(strings_of(c), (std::vector<std::string>{"02", "12", "20", "21"}));
  EXPECT_TRUE(verify_trifferent(c).ok());
}

TEST(OneBounded, SizesAndTwos) {
  EXPECT_EQ(strings_of(one_bounded(1)), std::vector<std::string>{"2"});
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto c = one_bounded(n);
    EXPECT_EQ(c.size(), 2 * n);
    EXPECT_EQ(c.r_bound(), 1u);
    EXPECT_TRUE(naive_trifferent(strings_of(c))) << n;
  }
  EXPECT_THROW(one_bounded(0), std::invalid_argument);
}

TEST(AffinePlaneTest, Counts) {
  for (std::size_t q : {2u, 3u, 5u, 7u}) {
    const AffinePlane plane(q);
    EXPECT_EQ(plane.point_count(), q * q);
    EXPECT_EQ(plane.line_count(), q * q + q);
    EXPECT_EQ(plane.flags().size(), q * q * q + q * q);
    for (std::size_t l = 0; l < plane.line_count(); ++l)
      EXPECT_EQ(plane.points_on(l).size(), q);
    for (std::size_t p = 0; p < plane.point_count(); ++p)
      EXPECT_EQ(plane.lines_through(p).size(), q + 1);
  }
  EXPECT_THROW(AffinePlane(4), std::invalid_argument);
  EXPECT_THROW(AffinePlane(1), std::invalid_argument);
}

TEST(AffinePlaneTest, IncidenceAxioms) {
  for (std::size_t q : {2u, 3u, 5u}) {
    const AffinePlane plane(q);
    // Two distinct points lie on exactly one common line.
    for (std::size_t a = 0; a < plane.point_count(); ++a)
      for (std::size_t b = a + 1; b < plane.point_count(); ++b) {
        std::size_t common = 0;
        for (std::size_t l = 0; l < plane.line_count(); ++l)
          common += plane.incident(a, l) && plane.incident(b, l);
        EXPECT_EQ(common, 1u);
      }
    for (std::size_t l = 0; l < plane.line_count(); ++l) {
      EXPECT_EQ(plane.line_index(plane.line(l)), l);
      for (std::size_t p : plane.points_on(l)) {
        EXPECT_TRUE(plane.incident(p, l));
        const auto pt = plane.point(p);
        EXPECT_EQ(plane.point_index(pt), p);
        const auto &line = plane.line(l);
        if (line.vertical)
          EXPECT_EQ(pt.x, line.intercept);
        else
          EXPECT_EQ(pt.y, (line.slope * pt.x + line.intercept) % q);
      }
    }
  }
}

TEST(AffinePlaneTest, SigmaIsFixedPointFree) {
  for (std::size_t q : {2u, 3u, 5u, 7u})
    for (SigmaChoice sc : {SigmaChoice{}, SigmaChoice{SigmaChoice::Kind::random, 9}}) {
      const AffinePlane plane(q, sc);
      for (std::size_t l = 0; l < plane.line_count(); ++l) {
        const auto perm = fpf_permutation(plane, l);
        ASSERT_EQ(perm.size(), q);
        std::set<std::size_t> images;
        for (auto [p, img] : perm) {
          EXPECT_NE(p, img);
          EXPECT_TRUE(plane.incident(img, l));
          images.insert(img);
        }
        EXPECT_EQ(images.size(), q);
      }
    }
}

TEST(AffinePlaneTest, OrderTwoLinesSwap) {
  const AffinePlane plane(2);
  for (std::size_t l = 0; l < plane.line_count(); ++l) {
    const auto &pts = plane.points_on(l);
    EXPECT_EQ(plane.sigma(l, pts[0]), pts[1]);
    EXPECT_EQ(plane.sigma(l, pts[1]), pts[0]);
  }
  EXPECT_THROW(fpf_permutation(plane, 6), std::out_of_range);
}

TEST(AffinePlaneTest, RandomSigmaIsSeeded) {
  const SigmaChoice sc{SigmaChoice::Kind::random, 1234};
  const AffinePlane a(5, sc), b(5, sc);
  for (std::size_t l = 0; l < a.line_count(); ++l)
    EXPECT_EQ(fpf_permutation(a, l), fpf_permutation(b, l));
}

// For flags e1 = (p, l'), e2 = (p, l), e3 = (p', l) with l ≠ l' and p ≠ p'
// the images σ_l'(p), σ_l(p), σ_l(p') are pairwise distinct.
TEST(AffinePlaneTest, ThetaImagesOfFlagTriplesAreDistinct) {
  for (std::size_t q : {2u, 3u})
    for (SigmaChoice sc : {SigmaChoice{}, SigmaChoice{SigmaChoice::Kind::random, 77}}) {
      const AffinePlane plane(q, sc);
      std::size_t checked = 0;
      for (std::size_t p = 0; p < plane.point_count(); ++p)
        for (std::size_t l : plane.lines_through(p))
          for (std::size_t l2 : plane.lines_through(p)) {
            if (l2 == l)
              continue;
            for (std::size_t p2 : plane.points_on(l)) {
              if (p2 == p)
                continue;
              const auto x = plane.sigma(l2, p);
              const auto y = plane.sigma(l, p);
              const auto z = plane.sigma(l, p2);
              EXPECT_TRUE(x != y && y != z && x != z);
              ++checked;
            }
          }
      EXPECT_GT(checked, 0u);
    }
}

TEST(TripleConstruction, SizesLengthsAndTwos) {
  struct Case {
    std::size_t q, base_n, size, length;
  };
  for (const Case c : {Case{2, 3, 12, 9}, Case{3, 6, 36, 18}, Case{5, 15, 150, 45}}) {
    const auto code = triple_construction(c.q, one_bounded(c.base_n));
    EXPECT_EQ(code.size(), c.size);
    EXPECT_EQ(code.block_length(), c.length);
    EXPECT_EQ(code.r_bound(), 3u);
    for (const auto &w : code)
      EXPECT_EQ(w.count_twos(), 3u);
    EXPECT_TRUE(verify_trifferent(code).ok());
    EXPECT_LE(max_two_location_multiplicity(code), 2u);
  }
}

TEST(TripleConstruction, BruteForceAgreesForSmallestPlane) {
  const auto code = triple_construction(2, one_bounded(3));
  EXPECT_TRUE(naive_trifferent(strings_of(code)));
}

TEST(TripleConstruction, RandomSigmaStillTrifferent) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const AffinePlane plane(3, {SigmaChoice::Kind::random, seed});
    const auto code = triple_construction(plane, one_bounded(6));
    EXPECT_EQ(code.size(), 36u);
    EXPECT_TRUE(verify_trifferent(code).ok());
  }
}

TEST(TripleConstruction, RejectsBadBases) {
  EXPECT_THROW(triple_construction(2, one_bounded(2)), std::invalid_argument);
  EXPECT_THROW(triple_construction(2, Code::from_strings({"00", "01", "02", "10", "11", "12"})),
               std::invalid_argument);
  // Seven words with one 2 each at length 3 cannot be trifferent.
  std::vector<std::string> seven;
  for (const auto &s : all_strings(3))
    if (twos(s) == 1 && seven.size() < 7)
      seven.push_back(s);
  EXPECT_THROW(triple_construction(2, Code::from_strings(seven)),
               std::invalid_argument);
}

TEST(Recursive, DepthZero) {
  const auto rc = recursive_construction(0, 10);
  EXPECT_EQ(rc.code, one_bounded(5));
  EXPECT_EQ(recursive_construction(0, 2).code.size(), 4u);
  EXPECT_EQ(recursive_construction(0, 1).code.size(), 1u);
}

TEST(Recursive, DepthOneMatchesTripleConstruction) {
  const auto rc = recursive_construction(1, 12);
  EXPECT_EQ(rc.primes, std::vector<std::size_t>{2});
  EXPECT_EQ(rc.code, triple_construction(2, one_bounded(3)));
}

TEST(Recursive, DepthTwoIsNineBounded) {
  const auto rc = recursive_construction(2, 12);
  EXPECT_EQ(rc.code.r_bound(), 9u);
  EXPECT_EQ(rc.code.size(), 12u);
  EXPECT_EQ(rc.code.block_length(), 27u);
  EXPECT_TRUE(verify_trifferent(rc.code).ok());
  const auto meta = describe(rc, {});
  EXPECT_FALSE(meta.empty());
}

TEST(Recursive, LargerTargetsPickLargerPrimes) {
  const auto rc = recursive_construction(1, 37);
  EXPECT_EQ(rc.primes, std::vector<std::size_t>{5});
  EXPECT_GE(rc.code.size(), 37u);
  EXPECT_TRUE(verify_trifferent(rc.code).ok());
}
