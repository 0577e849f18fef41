#include <gtest/gtest.h>

#include <cmath>

#include "efpm/error.hpp"
#include "efpm/student_t.hpp"
#include "oracle/oracle_values.hpp"

using namespace efpm;

TEST(IncompleteBeta, ClosedForms) {
  for (double x : {0.0, 0.1, 0.37, 0.5, 0.9, 1.0}) {
    EXPECT_NEAR(regularized_incomplete_beta(1.0, 1.0, x), x, 1e-14);
    EXPECT_NEAR(regularized_incomplete_beta(3.0, 1.0, x), x * x * x, 1e-14);
    EXPECT_NEAR(regularized_incomplete_beta(1.0, 2.0, x), 1.0 - (1.0 - x) * (1.0 - x), 1e-14);
    // I_x(1/2, 1/2) = (2/pi) asin(sqrt(x))
    EXPECT_NEAR(regularized_incomplete_beta(0.5, 0.5, x), 2.0 / M_PI * std::asin(std::sqrt(x)),
                1e-13);
  }
  EXPECT_THROW(regularized_incomplete_beta(0.0, 1.0, 0.5), ValidationError);
  EXPECT_THROW(regularized_incomplete_beta(1.0, 1.0, 1.5), ValidationError);
}

TEST(StudentT, TwoTailedMatchesQuadratureOracle) {
  for (const auto& c : oracle::kTails) {
    const double p = student_t_two_tailed_p(c.t, c.df);
    EXPECT_NEAR(p, c.p, 1e-9 * c.p) << "t=" << c.t << " df=" << c.df;
    EXPECT_EQ(student_t_two_tailed_p(-c.t, c.df), p);
  }
}

TEST(StudentT, SignificanceCells) {
  const double p = student_t_two_tailed_p(3.020, 58);
  EXPECT_NEAR(p, 0.0038, 0.00005);
  EXPECT_EQ(std::round(p * 1000.0) / 1000.0, 0.004);
  EXPECT_LT(student_t_two_tailed_p(12.162, 58), 0.0005);
  EXPECT_EQ(student_t_two_tailed_p(0.0, 58), 1.0);
}

TEST(StudentT, MonotoneDecreasingInAbsT) {
  for (int df : {1, 2, 5, 30, 58, 200}) {
    double prev = 1.0;
    for (double t = 0.05; t < 40.0; t += 0.05) {
      const double p = student_t_two_tailed_p(t, df);
      EXPECT_LT(p, prev) << "df=" << df << " t=" << t;
      EXPECT_GT(p, 0.0);
      prev = p;
    }
  }
  EXPECT_EQ(student_t_two_tailed_p(INFINITY, 3), 0.0);
  EXPECT_THROW(student_t_two_tailed_p(1.0, 0), ValidationError);
}

TEST(StudentT, QuantileInvertsTail) {
  EXPECT_NEAR(student_t_quantile(0.975, 58), oracle::kT975Df58, 1e-12);
  EXPECT_NEAR(student_t_quantile(0.975, 1), 12.706204736174707, 1e-9);
  EXPECT_EQ(student_t_quantile(0.5, 10), 0.0);
  for (int df : {1, 3, 10, 58}) {
    for (double prob : {0.6, 0.9, 0.95, 0.99, 0.999}) {
      const double q = student_t_quantile(prob, df);
      EXPECT_NEAR(student_t_two_tailed_p(q, df), 2.0 * (1.0 - prob), 1e-12);
      EXPECT_NEAR(student_t_quantile(1.0 - prob, df), -q, 1e-9 * q);
    }
  }
  EXPECT_THROW(student_t_quantile(1.0, 5), ValidationError);
  EXPECT_THROW(student_t_quantile(0.0, 5), ValidationError);
}
