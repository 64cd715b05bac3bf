#include <doctest.h>

#include <cmath>

#include "genfrac/operator_model.hpp"
#include "support.hpp"

using namespace genfrac;
using testing::code_of;

namespace {

OperatorParams left(double alpha, double beta, double rho, double eta, double kappa, double a = 0.0,
                    double b = INFINITY) {
  OperatorParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.rho = rho;
  p.eta = eta;
  p.kappa = kappa;
  p.domain = {a, b};
  return p;
}

OperatorParams right(double alpha, double beta, double rho, double eta, double kappa, double a = 0.0,
                     double b = INFINITY) {
  OperatorParams p = left(alpha, beta, rho, eta, kappa, a, b);
  p.side = RightSided{};
  return p;
}

}  // namespace

TEST_CASE("validate") {
  CHECK_NOTHROW(validate(left(0.5, 0.5, 2.0, 0.0, 0.0, 0.0, 1.0)));
  CHECK(code_of([] { validate(left(-1.0, 0.5, 2.0, 0.0, 0.0)); }) == ErrorCode::NonPositiveAlpha);
  CHECK(code_of([] { validate(left(0.5, 0.5, 2.0, -1.5, 0.0)); }) == ErrorCode::EtaTooSmall);
  CHECK(code_of([] { validate(left(0.5, 0.5, 2.0, -1.0, 0.0)); }) == ErrorCode::EtaTooSmall);
  CHECK_NOTHROW(validate(left(0.5, 0.5, 2.0, -1.5, 0.0, 1.0, 2.0)));
  CHECK_NOTHROW(validate(right(0.5, 0.5, 2.0, -1.5, 0.0)));
  CHECK(code_of([] { validate(left(0.5, 0.5, 0.0, 0.0, 0.0)); }) == ErrorCode::NonPositiveRho);
  CHECK(code_of([] { validate(left(0.5, 0.5, -2.0, 0.0, 0.0)); }) == ErrorCode::NonPositiveRho);
  CHECK(code_of([] { validate(left(0.5, 0.5, 1.0, 0.0, 0.0, 2.0, 2.0)); }) == ErrorCode::BadDomain);
  CHECK(code_of([] { validate(left(0.5, 0.5, 1.0, 0.0, 0.0, -1.0, 2.0)); }) == ErrorCode::BadDomain);
  CHECK(code_of([] { validate(left(0.5, 0.5, 2.0, 0.0, 0.0, -INFINITY, 2.0)); }) == ErrorCode::BadDomain);
  CHECK_NOTHROW(validate(left(0.5, 0.5, 1.0, 0.0, 0.0, -INFINITY, 2.0)));
  CHECK(code_of([] { validate(left(NAN, 0.5, 1.0, 0.0, 0.0)); }) == ErrorCode::NonPositiveAlpha);
  CHECK(code_of([] { validate(left(0.5, NAN, 1.0, 0.0, 0.0)); }) == ErrorCode::ArgsOutOfRange);
}

TEST_CASE("classify examples and precedence") {
  CHECK(classify(left(0.7, 0.3, 1.0, 0.0, 0.0)) == ClassicalReduction::RiemannLiouville);
  CHECK(classify(left(0.5, 0.5, 2.0, 0.0, 0.0)) == ClassicalReduction::Katugampola);
  CHECK(classify(left(0.5, 0.0, 2.0, 1.0, -3.0)) == ClassicalReduction::ErdelyiKober);
  CHECK(classify(left(0.5, 0.2, 2.0, 1.0, 0.7)) == ClassicalReduction::General);
  CHECK(classify(left(0.5, 0.2, 1.0, 0.0, 0.0, -INFINITY, 3.0)) == ClassicalReduction::WeylType);
  CHECK(classify(right(0.5, 0.2, 2.0, 0.3, 0.1, 0.0, INFINITY)) == ClassicalReduction::LiouvilleType);
  CHECK(classify(right(0.5, 0.2, 1.0, 0.0, 0.0, 0.0, 3.0)) == ClassicalReduction::RiemannLiouville);
  // rho = 1 with beta = 0, kappa = -(alpha + eta) and eta != 0 is Erdelyi-Kober, not RL
  CHECK(classify(left(0.5, 0.0, 1.0, 0.5, -1.0)) == ClassicalReduction::ErdelyiKober);
  // Katugampola needs rho != 1; at rho = 1 the RL test wins
  CHECK(classify(left(0.5, 0.5, 1.0, 0.0, 0.0)) == ClassicalReduction::RiemannLiouville);
  OperatorParams general = right(0.5, 0.2, 2.0, 0.3, 0.1, 0.0, 4.0);
  general.side = RightSidedGeneral{1.5};
  CHECK(classify(general) == ClassicalReduction::General);
  CHECK(code_of([] { classify(left(-1.0, 0.0, 1.0, 0.0, 0.0)); }) == ErrorCode::NonPositiveAlpha);
}

TEST_CASE("classify is exact, not tolerant") {
  CHECK(classify(left(0.5, 0.5, 1.0 + 1e-15, 0.0, 0.0)) == ClassicalReduction::Katugampola);
  CHECK(classify(left(0.5, 0.4, 1.0 + 1e-15, 0.0, 0.0)) == ClassicalReduction::General);
}

TEST_CASE("RL classification does not depend on beta") {
  for (double beta = -5.0; beta <= 5.0; beta += 0.25) {
    CAPTURE(beta);
    CHECK(classify(left(1.3, beta, 1.0, 0.0, 0.0)) == ClassicalReduction::RiemannLiouville);
    CHECK(classify(left(1.3, beta, 1.0, 0.0, 0.0)) == classify(left(1.3, beta, 1.0, 0.0, 0.0)));
  }
}

TEST_CASE("to_string names") {
  CHECK(to_string(ClassicalReduction::RiemannLiouville) == "riemann-liouville");
  CHECK(to_string(ClassicalReduction::ErdelyiKober) == "erdelyi-kober");
  CHECK(to_string(ClassicalReduction::General) == "general");
}

TEST_CASE("shift_params") {
  CHECK(shift_params(left(0.5, 0.5, 2.0, 0.0, 0.0), 1.0).eta == 1.0);
  const OperatorParams r = shift_params(right(0.5, 0.5, 2.0, 0.0, 0.0), 2.0);
  CHECK(r.kappa == 2.0);
  CHECK(r.eta == 0.0);
  const OperatorParams p = left(0.3, -0.2, 1.7, 0.4, 0.9, 0.5, 2.0);
  CHECK(shift_params(p, 0.0) == p);
  // exact round trip needs sums that do not round
  for (double g : {0.25, 0.5, 2.0, -0.75, 1.125}) {
    const OperatorParams d = left(0.3, -0.2, 1.7, 0.375, 0.625, 0.5, 2.0);
    CHECK(shift_params(shift_params(d, g), -g) == d);
    const OperatorParams q = right(0.3, -0.2, 1.7, 0.375, 0.625, 0.5, 2.0);
    CHECK(shift_params(shift_params(q, g), -g) == q);
  }
}

TEST_CASE("compose_params examples") {
  const OperatorParams outer = left(0.3, 0.1, 2.0, 1.0, 2.0);
  const OperatorParams inner = left(0.7, 0.4, 2.0, 0.0, -2.0);
  const OperatorParams c = compose_params(outer, inner);
  CHECK(c.alpha == doctest::Approx(1.0));
  CHECK(c.beta == doctest::Approx(0.5));
  CHECK(c.eta == 0.0);
  CHECK(c.kappa == 2.0);

  const OperatorParams zero = compose_params(left(0.25, 0.5, 3.0, 0.0, 0.0), left(0.5, 0.25, 3.0, 0.0, 0.0));
  CHECK(zero.alpha == 0.75);
  CHECK(zero.beta == 0.75);
  CHECK(zero.eta == 0.0);
  CHECK(zero.kappa == 0.0);

  CHECK(code_of([] { compose_params(left(0.3, 0.1, 2.0, 1.0, 2.0), left(0.7, 0.4, 2.0, 0.0, 1.0)); }) ==
        ErrorCode::IncompatibleComposition);
  CHECK(code_of([] { compose_params(left(0.3, 0.1, 2.0, 0.0, 0.0), left(0.7, 0.4, 1.0, 0.0, 0.0)); }) ==
        ErrorCode::MismatchedRhoOrSide);
  CHECK(code_of([] { compose_params(left(0.3, 0.1, 2.0, 0.0, 0.0), right(0.7, 0.4, 2.0, 0.0, 0.0)); }) ==
        ErrorCode::MismatchedRhoOrSide);
}

TEST_CASE("compose_params on the right side") {
  const OperatorParams inner = right(0.4, 0.2, 2.0, 1.5, 0.25);
  const OperatorParams outer = right(0.6, 0.3, 2.0, 0.5, -3.0);
  const OperatorParams c = compose_params(outer, inner);
  CHECK(c.alpha == 1.0);
  CHECK(c.eta == 0.5);
  CHECK(c.kappa == 0.25);
  CHECK(code_of([&] { compose_params(inner, outer); }) == ErrorCode::IncompatibleComposition);
}

TEST_CASE("compose_params is associative with dyadic parameters") {
  const double rho = 2.0;
  // pairwise matching: B.kappa = -rho A.eta, C.kappa = -rho B.eta
  const OperatorParams A = left(0.25, 0.5, rho, 0.75, 1.5);
  const OperatorParams B = left(0.5, -0.25, rho, 0.5, -rho * 0.75);
  const OperatorParams C = left(0.125, 0.375, rho, 0.25, -rho * 0.5);
  const OperatorParams ab_c = compose_params(compose_params(A, B), C);
  const OperatorParams a_bc = compose_params(A, compose_params(B, C));
  CHECK(ab_c == a_bc);
  CHECK(ab_c.alpha == 0.875);
  CHECK(ab_c.beta == 0.625);
}
