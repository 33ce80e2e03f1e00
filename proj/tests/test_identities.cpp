#include <doctest.h>

#include <json.hpp>

#include "eulerian2/identities.hpp"
#include "eulerian2/report_io.hpp"

using namespace eulerian2;

namespace {

// Recurrence table with <<5,3>> overwritten; later rows are left as filled.
EulerianSource corrupted_source()
{
    auto table = std::make_shared<TriangleTable>(TriangleKind::Eulerian2);
    table->fill_to(60);
    table->set(5, 3, table->at(5, 3) + 1);
    return [table](Index n, Index m) { return table->at(n, m); };
}

}  // namespace

TEST_CASE("r_coeff hand values")
{
    CHECK(r_coeff(0, 0) == 1);
    CHECK(r_coeff(0, 1) == 0);
    CHECK(r_coeff(0, 2) == 1);
    CHECK(r_coeff(0, 3) == make_rat(5, 2));
    CHECK(r_coeff(1, 1) == 0);
    CHECK(r_coeff(1, 2) == 1);
    CHECK(r_coeff(2, 2) == 0);
}

TEST_CASE("r_coeff agrees with the k-shifted summation")
{
    for (Index n = 0; n <= 8; ++n) {
        for (Index m = 0; m <= 8; ++m) {
            CHECK(r_coeff_shifted(n, m) == r_coeff(n, m));
        }
    }
}

TEST_CASE("pointwise sides")
{
    auto s = evaluate_case(IdentityId::Stirling, {{"n", 2}, {"m", 2}});
    REQUIRE(s);
    CHECK(s->lhs == 7);
    CHECK(s->rhs == 7);

    s = evaluate_case(IdentityId::Stirling, {{"n", 1}, {"m", 1}});
    CHECK(s->lhs == 1);
    CHECK(s->rhs == 1);

    for (Index m = 0; m <= 6; ++m) {
        s = evaluate_case(IdentityId::Stirling, {{"n", 0}, {"m", m}});
        CHECK(s->lhs == 1);
        CHECK(s->rhs == 1);
    }

    s = evaluate_case(IdentityId::Tree, {{"n", 1}});
    CHECK(s->lhs == 0);
    CHECK(s->rhs == 0);
    s = evaluate_case(IdentityId::Tree, {{"n", 3}});
    CHECK(s->lhs == 5);
    CHECK(s->rhs == 5);

    s = evaluate_case(IdentityId::AlternatingR, {{"m", 0}});
    CHECK(s->lhs == 1);
    s = evaluate_case(IdentityId::AlternatingR, {{"m", 2}});
    CHECK(s->lhs == 0);

    CHECK_FALSE(evaluate_case(IdentityId::GFCoeffs, {{"n", 0}, {"m", 0}}));
    CHECK_THROWS_AS(evaluate_case(IdentityId::Tree, {{"m", 1}}), UsageError);
}

TEST_CASE("small sweeps pass")
{
    CHECK(check_explicit_a(10).passed());
    CHECK(check_explicit_b(10).passed());
    CHECK(check_stirling_identity(10, 10).passed());
    CHECK(check_stirling_identity(10, 10).cases == 121);
    CHECK(check_tree_identity(10).passed());
    CHECK(check_alternating_identity(8).passed());
    CHECK(check_r_support(8).passed());
    CHECK(check_r_against_series(4, 4).passed());
    CHECK(check_r_against_series(6, 3).passed());
    CHECK(check_gf_coeffs(5, 5).passed());
    CHECK(check_gf_derivative(5, 5).passed());
    CHECK(check_compositional_inverse(5, 5).passed());
    CHECK(check_z_substitution(5, 5).passed());
    CHECK(check_lagrange(5, 5, 3).passed());
    CHECK(check_lambert_functional(10).passed());
    CHECK(check_tree_series(10).passed());
}

TEST_CASE("printed quadruple sum is evaluated, not assumed")
{
    const auto report = check_printed_quad_sum(6);
    CHECK(report.cases == 7);
    CHECK(is_informational(report.id));
    // Whatever the outcome, a counterexample must be a genuine nonzero value.
    if (report.counterexample) {
        CHECK(report.counterexample->lhs != 0);
    }
}

TEST_CASE("zero bounds give empty or trivial sweeps")
{
    const auto reports = run_all(SuiteBounds::zero());
    CHECK(reports.size() == all_identities().size());
    for (const auto& r : reports) {
        INFO(identity_name(r.id));
        CHECK(r.passed());
    }
    CHECK(check_tree_identity(0).cases == 0);
    CHECK(check_explicit_b(0).cases == 0);
}

TEST_CASE("a corrupted table yields self-verifying counterexamples")
{
    const auto bad = corrupted_source();
    SuiteBounds bounds;
    bounds.explicit_n = 8;
    bounds.stirling_n = bounds.stirling_m = 8;
    bounds.tree_n = 8;
    bounds.alternating_m = 8;
    bounds.r_box = 8;
    bounds.gf_box_n = bounds.gf_box_t = 6;
    bounds.quad_n = 8;

    const auto reports = run_all(bounds, bad);
    int failures = 0;
    for (const auto& r : reports) {
        CHECK(r.passed() == !r.counterexample.has_value());
        if (!r.counterexample) {
            continue;
        }
        ++failures;
        const auto& cx = *r.counterexample;
        CHECK(cx.lhs != cx.rhs);
        if (const auto sides = evaluate_case(r.id, cx.params, bad)) {
            CHECK(sides->lhs == cx.lhs);
            CHECK(sides->rhs == cx.rhs);
        }
    }
    CHECK(failures >= 6);

    const auto a = check_explicit_a(8, bad);
    REQUIRE(a.counterexample);
    CHECK(a.counterexample->params == Params{{"n", 5}, {"m", 3}});
    CHECK(a.counterexample->lhs == 328);
    CHECK(a.counterexample->rhs == 329);

    // Identities that never read the triangle are unaffected.
    CHECK(check_lambert_functional(8).passed());
    CHECK(check_compositional_inverse(4, 4).passed());
}

TEST_CASE("identity names")
{
    for (const auto id : all_identities()) {
        CHECK(parse_identity(identity_name(id)) == id);
    }
    CHECK_FALSE(parse_identity("bogus"));
}

TEST_CASE("report serialization")
{
    const auto ok = check_stirling_identity(2, 2);
    const auto j = to_json(ok);
    CHECK(j["identity"] == "stirling");
    CHECK(j["passed"] == true);
    CHECK(j["informational"] == false);
    CHECK(j["cases"] == 9);
    CHECK(j["range"]["n_max"] == 2);
    CHECK(j["counterexample"].is_null());
    CHECK(to_plain(ok) == "PASS stirling n_max=2 m_max=2 (9 cases)");

    const auto bad = check_explicit_a(6, corrupted_source());
    const auto jb = to_json(bad);
    CHECK(jb["passed"] == false);
    CHECK(jb["counterexample"]["params"]["n"] == 5);
    CHECK(jb["counterexample"]["lhs"] == "328");
    CHECK(jb["counterexample"]["rhs"] == "329");
    CHECK(to_plain(bad) == "FAIL explicit-a n_max=6 (28 cases): counterexample n=5 m=3 lhs=328 rhs=329");

    IdentityReport frac{IdentityId::Tree, {}, 1, Counterexample{{{"n", 3}}, make_rat(5, 2), 3}};
    CHECK(to_json(frac)["counterexample"]["lhs"] == "5/2");
}
