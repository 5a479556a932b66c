#pragma once

namespace ctrans {

/// Quadratic density r(t) = c0 + c1*t + c2*t^2 on [0,1] together with its
/// cubic antiderivative R(t) = c0*t + (c1/2)*t^2 + (c2/3)*t^3, so R(0) = 0.
/// Every family coefficient map satisfies mass() == 1 exactly in exact
/// arithmetic, making R a polynomial cdf on [0,1] whenever r >= 0 there.
struct TransmutationKernel {
    double c0 = 1.0;
    double c1 = 0.0;
    double c2 = 0.0;

    double density(double t) const { return c0 + t * (c1 + t * c2); }
    double cdf(double t) const { return t * (c0 + t * (c1 / 2.0 + t * (c2 / 3.0))); }
    double mass() const { return c0 + c1 / 2.0 + c2 / 3.0; }

    /// Solves R(t) = u on [0,1] to |R(t) - u| <= 1e-12 by bracketed bisection
    /// with Newton acceleration (200-iteration cap). R must be non-decreasing
    /// for the result to be the unique inverse; kernels that are valid only up
    /// to the boundary (r = 0 at isolated points) are handled, which is why
    /// pure Newton is not used.
    double inverse_cdf(double u) const;
};

}  // namespace ctrans
