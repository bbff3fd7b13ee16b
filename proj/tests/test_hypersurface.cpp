#include <gtest/gtest.h>

#include <algorithm>

#include "mld/errors.hpp"
#include "mld/hypersurface.hpp"
#include "oracles.hpp"

using mld::AlphaTuple;
using mld::Integer;
using mld::Status;
using mld::Support;
using mld::Verdict;

namespace {

std::vector<std::vector<Integer>> raw(const std::vector<oracle::IVec>& pts) {
  std::vector<std::vector<Integer>> out;
  for (const auto& p : pts) out.push_back(oracle::to_lv(p).entries());
  return out;
}

Support sup(const std::vector<oracle::IVec>& pts) { return mld::require_integral(raw(pts)); }

const std::vector<oracle::IVec> kWhitney{{2, 0, 0}, {0, 2, 1}};
const std::vector<oracle::IVec> kCurve{{2, 0}, {0, 2}, {1, 1}, {0, 3}};
const std::vector<oracle::IVec> kA1ThreeFold{{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}};

std::vector<oracle::IVec> d_surface(long k) { return {{k - 1, 0, 0}, {1, 2, 0}, {0, 0, 2}}; }

bool has_clause(const mld::SupportValidation& v, const std::string& clause) {
  for (const auto& x : v.violations) {
    if (x.clause == clause) return true;
  }
  return false;
}

}  // namespace

TEST(ValidateSupport, Whitney) {
  auto v = mld::validate_support(raw(kWhitney));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.affine_dimension, 1u);
  EXPECT_EQ(v.support->num_vars, 3u);
}

TEST(ValidateSupport, Curve) {
  auto v = mld::validate_support(raw(kCurve));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.affine_dimension, 2u);
}

TEST(ValidateSupport, CollinearWithContentTwo) {
  auto v = mld::validate_support(raw({{2, 0}, {4, 0}}));
  EXPECT_FALSE(v.ok());
  EXPECT_TRUE(has_clause(v, "coordinate-plane"));
  EXPECT_TRUE(has_clause(v, "dimension"));
  EXPECT_THROW(mld::require_integral(raw({{2, 0}, {4, 0}})), mld::InputError);
}

TEST(ValidateSupport, OriginRejected) {
  auto v = mld::validate_support(raw({{0, 0, 0}, {2, 0, 0}, {0, 2, 1}}));
  EXPECT_TRUE(has_clause(v, "origin"));
}

TEST(ValidateSupport, BinomialWithTwoInteriorPoints) {
  // x^3 - y^3: the segment holds four lattice points.
  auto v = mld::validate_support(raw({{3, 0}, {0, 3}}));
  EXPECT_TRUE(has_clause(v, "dimension"));
}

TEST(ValidateSupport, DropsUnusedVariables) {
  auto v = mld::validate_support(raw({{2, 0, 0}, {0, 0, 3}}));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(v.dropped_variables, (std::vector<std::size_t>{1}));
  EXPECT_EQ(v.support->num_vars, 2u);
  EXPECT_EQ(v.support->original_num_vars, 3u);
}

TEST(ValidateSupport, ShapeErrors) {
  EXPECT_FALSE(mld::validate_support({}).ok());
  EXPECT_TRUE(has_clause(mld::validate_support(raw({{1, 0}, {0, 1, 2}})), "shape"));
  EXPECT_TRUE(has_clause(mld::validate_support(raw({{1, -1}, {0, 1}})), "shape"));
}

TEST(AlphaTuple, RejectsNonPositive) {
  EXPECT_THROW(AlphaTuple({1, 0, 2}), mld::InputError);
  EXPECT_THROW(AlphaTuple(std::vector<Integer>{}), mld::InputError);
  EXPECT_EQ(AlphaTuple({2, 1, 2}).sum(), 5);
  EXPECT_EQ(AlphaTuple({2, 1, 2}).max(), 2);
}

TEST(Feasibility, Examples) {
  EXPECT_FALSE(mld::is_feasible(sup(kWhitney), {1, 1, 1}));
  EXPECT_TRUE(mld::is_feasible(sup(kWhitney), {2, 1, 2}));
  EXPECT_TRUE(mld::is_feasible(sup(kA1ThreeFold), {1, 1, 1, 1}));
}

TEST(MuN0, Examples) {
  auto w = mld::mu_and_n0(sup(kWhitney), {2, 1, 2});
  EXPECT_EQ(w.n0, 4);
  EXPECT_EQ(w.mu, 2);
  using P = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(w.mu_pairs, (std::vector<P>{{0, 0}, {1, 2}}));
  EXPECT_EQ(w.n0_terms, (std::vector<std::size_t>{0, 1}));

  auto a = mld::mu_and_n0(sup(kA1ThreeFold), {1, 1, 1, 1});
  EXPECT_EQ(a.n0, 2);
  EXPECT_EQ(a.mu, 1);

  for (long k = 4; k <= 8; ++k) {
    auto d = mld::mu_and_n0(sup(d_surface(k)), {2, 1, 2});
    EXPECT_EQ(d.n0, 4);
    EXPECT_EQ(d.mu, 2);
  }
}

TEST(Objective, Examples) {
  EXPECT_EQ(mld::objective(sup(kWhitney), {2, 1, 2}), 1);
  EXPECT_EQ(mld::objective(sup(kA1ThreeFold), {1, 1, 1, 1}), 0);
  EXPECT_EQ(mld::objective(sup({{3, 1, 0}, {0, 3, 0}, {0, 0, 2}}), {2, 2, 3}), 2);
  EXPECT_THROW(mld::objective(sup(kWhitney), {1, 1, 1}), mld::InputError);
}

TEST(MinimizeObjective, AdeSurfaces) {
  auto w = mld::minimize_objective(sup(kWhitney));
  EXPECT_EQ(w.value, 1);
  EXPECT_EQ(w.witness, AlphaTuple({2, 1, 2}));
  EXPECT_FALSE(w.heuristic);

  for (long k = 1; k <= 6; ++k) {
    auto a = mld::minimize_objective(sup({{k + 1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
    EXPECT_EQ(a.value, 0) << "A_" << k;
    EXPECT_EQ(a.witness, AlphaTuple({1, 1, 1}));
  }
  auto e8 = mld::minimize_objective(sup({{5, 0, 0}, {0, 3, 0}, {0, 0, 2}}));
  EXPECT_EQ(e8.value, 2);
  EXPECT_EQ(e8.witness, AlphaTuple({2, 2, 3}));
}

TEST(MinimizeObjective, MatchesBoxOracle) {
  // Whitney: radius 6 box brute force.
  auto o = oracle::min_objective_box(kWhitney, 6);
  ASSERT_TRUE(o);
  EXPECT_EQ(o->first, 1);
  EXPECT_EQ(o->second, (oracle::IVec{2, 1, 2}));
  auto c = oracle::min_objective_box(kCurve, 6);
  ASSERT_TRUE(c);
  EXPECT_EQ(mld::minimize_objective(sup(kCurve)).value, oracle::z(c->first));
}

TEST(MinimizeObjective, OverrideIsHeuristic) {
  auto w = mld::minimize_objective(sup(kWhitney), {.box_bound = Integer(3)});
  EXPECT_TRUE(w.heuristic);
  EXPECT_EQ(w.box_bound, 3);
  EXPECT_EQ(w.value, 1);
}

TEST(MinimizeObjective, VisitCap) {
  EXPECT_THROW(mld::minimize_objective(sup({{5, 0, 0}, {0, 3, 0}, {0, 0, 2}}), {.max_visits = 10}),
               mld::LimitExceeded);
}

TEST(Certificate, Whitney) {
  auto c = mld::equality_certificate(sup(kWhitney), {2, 1, 2});
  EXPECT_EQ(c.verdict, Verdict::kCertified);
  EXPECT_EQ(c.j0, 0u);
  EXPECT_EQ(c.p0.terms.size(), 2u);
  ASSERT_TRUE(c.t0.is_monomial());
  EXPECT_EQ(c.t0.terms[0].multiplier, 2);
  EXPECT_EQ(c.t0.to_string(), "2*a1*x1");
}

TEST(Certificate, AkAndDkInFourVariables) {
  for (long k = 1; k <= 5; ++k) {
    auto c = mld::equality_certificate(sup({{k + 1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}),
                                       {1, 1, 1, 1});
    EXPECT_EQ(c.verdict, Verdict::kCertified) << "A_" << k;
  }
  for (long k = 4; k <= 7; ++k) {
    auto s = sup({{k - 1, 0, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
    auto c = mld::equality_certificate(s, {1, 1, 1, 1});
    EXPECT_EQ(c.verdict, Verdict::kCertified) << "D_" << k;
    EXPECT_EQ(c.p0.to_string(), "a3*x3^2 + a4*x4^2");
    EXPECT_EQ(c.t0.to_string(), "2*a3*x3");
  }
}

TEST(Certificate, CurveNeedsTheSampler) {
  auto s = sup(kCurve);
  auto plain = mld::equality_certificate(s, {1, 1});
  EXPECT_EQ(plain.verdict, Verdict::kUndecided);
  auto sampled = mld::equality_certificate(s, {1, 1}, {.enabled = true, .prime = 10007, .trials = 50, .seed = 1});
  EXPECT_EQ(sampled.verdict, Verdict::kCertifiedProbabilistic);
  EXPECT_TRUE(sampled.sampled);
  EXPECT_GT(sampled.sample_successes, 0u);
}

TEST(Binomial, ClosedForm) {
  auto w = mld::binomial_lambda(sup(kWhitney));
  EXPECT_TRUE(w.closed_form);
  EXPECT_EQ(w.lambda, 1);
  EXPECT_EQ(w.witness, AlphaTuple({2, 1, 2}));

  auto t = mld::binomial_lambda(sup({{1, 1, 1, 0}, {0, 0, 0, 2}}));
  EXPECT_EQ(t.lambda, 1);
  EXPECT_EQ(mld::objective(sup({{1, 1, 1, 0}, {0, 0, 0, 2}}), {1, 1, 2, 2}), 1);

  auto c = mld::binomial_lambda(sup({{1, 1, 0, 0}, {0, 0, 1, 1}}));
  EXPECT_EQ(c.lambda, 0);
  EXPECT_EQ(c.witness, AlphaTuple({1, 1, 1, 1}));
  auto o = oracle::min_objective_box({{1, 1, 0, 0}, {0, 0, 1, 1}}, 5);
  EXPECT_EQ(o->first, 0);
}

TEST(Binomial, OverlappingSupportFallsBack) {
  // An integral binomial never shares a variable, so build the support directly.
  Support s(2, {{2, 1}, {1, 3}});
  EXPECT_FALSE(mld::binomial_applicable(s));
  auto r = mld::binomial_lambda(s);
  EXPECT_FALSE(r.closed_form);
  EXPECT_EQ(r.lambda, mld::minimize_objective(s).value);
}

TEST(Report, Whitney) {
  auto r = mld::hypersurface_report(sup(kWhitney));
  EXPECT_EQ(r.lambda_lower_bound, 1);
  EXPECT_EQ(r.mather_mld_lower_bound, 3);
  EXPECT_EQ(r.status, Status::kExact);
  EXPECT_EQ(r.route, "binomial");
  EXPECT_EQ(r.certificate.verdict, Verdict::kCertified);
}

TEST(Report, E6) {
  auto r = mld::hypersurface_report(sup({{4, 0, 0}, {0, 3, 0}, {0, 0, 2}}));
  EXPECT_EQ(r.lambda_lower_bound, 1);
  EXPECT_EQ(r.status, Status::kExact);
  EXPECT_EQ(r.witness_alpha, AlphaTuple({1, 2, 2}));
  EXPECT_EQ(r.mather_mld_lower_bound, 3);
}

TEST(Report, DkSurfaceAttainsAt212) {
  for (long k = 4; k <= 8; ++k) {
    auto s = sup(d_surface(k));
    auto r = mld::hypersurface_report(s, {.sampler = {.enabled = false}});
    EXPECT_EQ(r.lambda_lower_bound, 1) << "D_" << k;
    EXPECT_EQ(r.status, Status::kExact) << "D_" << k;
    EXPECT_EQ(r.certificate.verdict, Verdict::kCertified) << "D_" << k;
    EXPECT_EQ(mld::objective(s, r.witness_alpha), 1);
    EXPECT_EQ(mld::objective(s, {2, 1, 2}), 1);
    EXPECT_EQ(mld::equality_certificate(s, {2, 1, 2}).verdict, Verdict::kCertified);
  }
}

TEST(Report, D4PrefersACertifiedMinimizer) {
  auto s = sup(d_surface(4));
  auto m = mld::minimize_objective(s);
  EXPECT_EQ(m.witness, AlphaTuple({1, 1, 2}));
  EXPECT_EQ(mld::equality_certificate(s, m.witness).verdict, Verdict::kUndecided);
  EXPECT_TRUE(std::is_sorted(m.minimizers.begin(), m.minimizers.end()));
  EXPECT_NE(std::find(m.minimizers.begin(), m.minimizers.end(), AlphaTuple({2, 1, 2})), m.minimizers.end());
  for (const auto& a : m.minimizers) EXPECT_EQ(mld::objective(s, a), m.value);
  auto r = mld::hypersurface_report(s, {.sampler = {.enabled = false}});
  EXPECT_EQ(r.witness_alpha, AlphaTuple({2, 1, 2}));
  EXPECT_EQ(r.certificate.verdict, Verdict::kCertified);
}

TEST(Report, CurveIsLowerBoundWithoutSampler) {
  auto r = mld::hypersurface_report(sup(kCurve), {.sampler = {.enabled = false}});
  EXPECT_EQ(r.lambda_lower_bound, 0);
  EXPECT_EQ(r.status, Status::kLowerBound);
  auto e = mld::hypersurface_report(sup(kCurve));
  EXPECT_EQ(e.status, Status::kExact);
  EXPECT_EQ(e.witness_alpha, AlphaTuple({1, 1}));
}

TEST(Report, BoxOverrideIsHeuristic) {
  auto r = mld::hypersurface_report(sup(kWhitney), {.search = {.box_bound = Integer(4)}});
  EXPECT_EQ(r.status, Status::kHeuristic);
  EXPECT_EQ(r.route, "general");
  EXPECT_EQ(r.lambda_lower_bound, 1);
}

TEST(Report, DroppedVariableShiftsDimension) {
  // x^2 - z^3 in three variables: the cusp times a line.
  auto r = mld::hypersurface_report(sup({{2, 0, 0}, {0, 0, 3}}));
  EXPECT_EQ(r.num_vars, 2u);
  EXPECT_EQ(r.original_num_vars, 3u);
  EXPECT_EQ(r.dropped_variables, (std::vector<std::size_t>{1}));
  EXPECT_EQ(r.lambda_lower_bound, 1);
  EXPECT_EQ(r.witness_alpha, AlphaTuple({3, 2}));
  EXPECT_EQ(r.mather_mld_lower_bound, 3);
}

TEST(Report, AssumptionsAlwaysListed) {
  auto r = mld::hypersurface_report(sup(kWhitney));
  ASSERT_GE(r.assumptions.size(), 2u);
  EXPECT_EQ(r.assumptions[0], "integral support");
  EXPECT_EQ(r.assumptions[1], "very general coefficients");
}
