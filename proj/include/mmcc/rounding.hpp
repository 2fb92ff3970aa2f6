#pragma once

// Ball-growing rounding over a distance oracle. Each step picks the
// unclustered vertex w maximizing
//   L_t(w) = sum over v in Ball(w, r1) of (r1 - d(w,v)),
// w contributing r1 for itself (d(w,w) = 0), and cuts Ball(w, r2) as the next
// cluster. Ball tests use closed comparisons (d <= radius), exact rational
// arithmetic when the oracle is exact. L scores are doubles accumulated in
// ascending-vertex order so the dense array implementation and the heap-based
// sparse implementation produce bit-identical clusterings. Ties in L break
// toward the smaller vertex id.

#include <string>

#include "mmcc/clustering.hpp"
#include "mmcc/metric_sampled.hpp"
#include "mmcc/oracle.hpp"
#include "mmcc/rational.hpp"

namespace mmcc {

// Closed-form rounding parameters for a (delta1, delta2)-approximate triangle
// inequality. Construction derives r, c1, b, c2 and verifies the ten
// feasibility inequalities in exact rational arithmetic; violations throw
// with the failing inequality named.
struct ApproxRoundingConstants {
    BigRat delta1, delta2;
    BigRat r, c1, b, c2;
    double r_value() const { return r.convert_to<double>(); }
    double b_value() const { return b.convert_to<double>(); }
};

ApproxRoundingConstants derive_rounding_constants(const BigRat& delta1, const BigRat& delta2);
ApproxRoundingConstants derive_rounding_constants(double delta1, double delta2);

struct RoundingParams {
    enum class Mode { theory, approx, swept };
    Mode mode = Mode::theory;

    // Exact radii drive rational ball tests on exact oracles. approx-mode
    // radii derived from huge rationals may only exist as doubles.
    bool exact_radii = true;
    Rational r1{1, 5};
    Rational r2{2, 5};
    double r1_value = 0.2;
    double r2_value = 0.4;

    // Swept radii outside the analyzed regime (r2 < 2*r1) are legal; the CLI
    // surfaces this flag as a warning.
    bool outside_theory_regime = false;

    static RoundingParams theory();
    static RoundingParams swept(const Rational& r1, const Rational& r2);
    static RoundingParams approx_from(const ApproxRoundingConstants& c);
};

// O(n^2) array implementation; accepts any oracle kind.
Clustering round_dense(const DistanceOracle& oracle, const RoundingParams& params);

// Heap-based implementation over a sparse oracle; touches only stored rows.
// Produces the identical clustering to round_dense on the same oracle.
Clustering round_sparse(const DistanceOracle& oracle, const RoundingParams& params);

// Rounds with r1 = r(delta1, delta2), r2 = b*r derived from the ladder.
// Parameter errors from the derivation propagate.
Clustering round_approx(const DistanceOracle& oracle, const ConstantLadder& ladder);

}  // namespace mmcc
