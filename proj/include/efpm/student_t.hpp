#pragma once

namespace efpm {

/// Regularized incomplete beta function I_x(a, b) for a, b > 0 and
/// x in [0, 1], evaluated by continued fraction (modified Lentz).
double regularized_incomplete_beta(double a, double b, double x);

/// P(|T| >= |t|) for Student's t with `df` degrees of freedom.
/// Throws ValidationError if df < 1.
double student_t_two_tailed_p(double t, int df);

/// The value q with P(T <= q) = prob, for prob in (0, 1). Found by bisection
/// on student_t_two_tailed_p.
double student_t_quantile(double prob, int df);

}  // namespace efpm
