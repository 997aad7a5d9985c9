#include <doctest.h>

#include "f2alg/checker.hpp"
#include "f2alg/errors.hpp"
#include "f2alg/spaces.hpp"

using namespace f2alg;

namespace {

Presentation quotient_model()
{
    Presentation bpu4 = bundled_model(ModelId::BPU4);
    KunnethProduct kp = kunneth_product(bpu4, bundled_model(ModelId::BS1));
    int tg = kp.pres.gen_index("t");
    return quotient_by_ideal(kp.pres,
                             {kp.pres.generator_poly(static_cast<std::size_t>(tg))});
}

std::string mutated_bpu4_text(const std::string& from, const std::string& to)
{
    std::string text(model_text(ModelId::BPU4));
    auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, from.size(), to);
    return text;
}

const CheckResult& check_named(const VerificationReport& report, const std::string& name)
{
    for (const CheckResult& c : report.checks)
        if (c.name == name)
            return c;
    FAIL("no check named " << name);
    static CheckResult dummy;
    return dummy;
}

}  // namespace

TEST_CASE("coniveau >= 1 certificate on the declared BPU4 data")
{
    GradedAlgebra alg(bundled_model(ModelId::BPU4));
    Poly x3 = parse_poly(alg.pres(), "x3");

    ConiveauCertificate good = check_coniveau_ge1({3, 4, x3}, alg);
    CHECK(good.kind == "coniveau_ge_1");
    CHECK(good.established());
    for (const Fact& f : good.evidence)
        CHECK(f.verified);

    // reduction that dies in the quotient (x2*x3 is homogeneous of degree 5)
    ConiveauCertificate dead = check_coniveau_ge1({5, 4, parse_poly(alg.pres(), "x2*x3")}, alg);
    CHECK(dead.verdict == "inconclusive");

    // a vanishing reduction declared at the certificate's own degree
    ConiveauCertificate zero = check_coniveau_ge1({3, 4, Poly()}, alg);
    CHECK(zero.verdict == "inconclusive");

    // infinite group: the torsion hypothesis fails
    ConiveauCertificate infinite = check_coniveau_ge1({3, std::nullopt, x3}, alg);
    CHECK(infinite.verdict == "inconclusive");

    CHECK_THROWS_AS(check_coniveau_ge1({5, 4, x3}, alg), DimensionError);
}

TEST_CASE("verdicts are the conjunction of the evidence")
{
    GradedAlgebra alg(bundled_model(ModelId::BPU4));
    Poly x3 = parse_poly(alg.pres(), "x3");
    for (const ConiveauCertificate& cert :
         {check_coniveau_ge1({3, 4, x3}, alg), check_coniveau_ge1({3, std::nullopt, x3}, alg)}) {
        bool all = true;
        for (const Fact& f : cert.evidence)
            all = all && f.verified;
        CHECK(cert.established() == all);
    }
}

TEST_CASE("strong coniveau < 1 on the quotient model")
{
    GradedAlgebra alg(quotient_model(), GradedAlgebra::kDefaultMaxDegree);
    Poly x3 = parse_poly(alg.pres(), "x3");

    ConiveauCertificate cert = check_strong_coniveau_lt1(alg, x3);
    CHECK(cert.kind == "strong_coniveau_lt_1");
    CHECK(cert.established());
    bool saw_q2 = false, saw_h7 = false;
    for (const Fact& f : cert.evidence) {
        if (f.name == "q2-nonzero") {
            saw_q2 = true;
            CHECK(f.verified);
            CHECK(f.value == "x5^2");
        }
        if (f.name == "degree-7-vanishes") {
            saw_h7 = true;
            CHECK(f.verified);
            CHECK(f.value == "dim = 0");
        }
    }
    CHECK(saw_q2);
    CHECK(saw_h7);
}

TEST_CASE("adding the relation x5^2 makes the strong-coniveau check inconclusive")
{
    Presentation q = quotient_model();
    Presentation crushed = quotient_by_ideal(q, {parse_poly(q, "x5^2")});
    GradedAlgebra alg(crushed, GradedAlgebra::kDefaultMaxDegree);
    ConiveauCertificate cert = check_strong_coniveau_lt1(alg, parse_poly(alg.pres(), "x3"));
    CHECK(cert.verdict == "inconclusive");
}

TEST_CASE("F2[x1] passes the dimension hypothesis but fails in degree 7")
{
    GradedAlgebra alg(bundled_model(ModelId::P1), GradedAlgebra::kDefaultMaxDegree);
    Poly x1cubed = parse_poly(alg.pres(), "x1^3");
    ConiveauCertificate cert = check_strong_coniveau_lt1(alg, x1cubed);
    CHECK(cert.verdict == "inconclusive");
    for (const Fact& f : cert.evidence) {
        if (f.name == "q2-nonzero") {
            CHECK(f.verified);  // Q_2(x1^3) = x1^10 != 0
            CHECK(f.value == "x1^10");
        }
        if (f.name == "degree-7-vanishes")
            CHECK_FALSE(f.verified);  // x1^7 survives
    }
}

TEST_CASE("hypothesis violations are errors, not verdicts")
{
    GradedAlgebra p1x4(bundled_model(ModelId::P1x4));
    // degree-3 part is 20-dimensional
    CHECK_THROWS_AS(check_strong_coniveau_lt1(p1x4, parse_poly(p1x4.pres(), "a1^3")),
                    HypothesisError);

    GradedAlgebra quotient(quotient_model(), GradedAlgebra::kDefaultMaxDegree);
    CHECK_THROWS_AS(check_strong_coniveau_lt1(quotient, Poly()), HypothesisError);
    CHECK_THROWS_AS(check_strong_coniveau_lt1(quotient, parse_poly(quotient.pres(), "x5")),
                    HypothesisError);
    // a degree-3 class that vanishes in the quotient
    Presentation q = quotient_model();
    Presentation killed = quotient_by_ideal(q, {parse_poly(q, "x3")});
    GradedAlgebra dead(killed, GradedAlgebra::kDefaultMaxDegree);
    CHECK_THROWS_AS(check_strong_coniveau_lt1(dead, parse_poly(dead.pres(), "x3")),
                    HypothesisError);
}

TEST_CASE("the strong-coniveau check never establishes when a hypothesis fails")
{
    // systematic mutations of the bundled model, each breaking one hypothesis
    Presentation q = quotient_model();

    // kill Q_2(x3) by adding x5^2
    GradedAlgebra no_q2(quotient_by_ideal(q, {parse_poly(q, "x5^2")}),
                        GradedAlgebra::kDefaultMaxDegree);
    CHECK_FALSE(check_strong_coniveau_lt1(no_q2, parse_poly(q, "x3")).established());

    // resurrect degree 7 by dropping the relation x2*x5
    std::string text = mutated_bpu4_text("rel x2*x5\n", "");
    Presentation bpu4_mut = parse_presentation(text);
    KunnethProduct kp = kunneth_product(bpu4_mut, bundled_model(ModelId::BS1));
    int tg = kp.pres.gen_index("t");
    Presentation q_mut = quotient_by_ideal(
        kp.pres, {kp.pres.generator_poly(static_cast<std::size_t>(tg))});
    GradedAlgebra with_h7(q_mut, GradedAlgebra::kDefaultMaxDegree);
    CHECK(with_h7.degree_basis(7).dim() > 0);
    CHECK_FALSE(check_strong_coniveau_lt1(with_h7, parse_poly(q_mut, "x3")).established());
}

TEST_CASE("the replay suite passes on the bundled models")
{
    VerificationReport report = verify_paper_suite();
    REQUIRE(report.checks.size() == 10);
    for (const CheckResult& c : report.checks) {
        INFO(c.name << ": " << c.value);
        CHECK(c.pass);
    }
    CHECK(report.overall);
}

TEST_CASE("the replay suite is deterministic")
{
    VerificationReport a = verify_paper_suite();
    VerificationReport b = verify_paper_suite();
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("deleting the relation x2*x3 breaks the dimension check at degree 5")
{
    Presentation mutated = parse_presentation(mutated_bpu4_text("rel x2*x3\n", ""));
    VerificationReport report = verify_paper_suite(mutated);
    CHECK_FALSE(report.overall);
    const CheckResult& dims = check_named(report, "bpu4-dims");
    CHECK_FALSE(dims.pass);
    // degree 5 gains x2*x3 and degree 7 keeps x2^2*x3
    CHECK(dims.value == "[1, 2, 1]");
}

TEST_CASE("zeroing the Sq^2 entry breaks the operation checks")
{
    Presentation mutated =
        parse_presentation(mutated_bpu4_text("sq 2 x3 = x5", "sq 2 x3 = 0"));
    VerificationReport report = verify_paper_suite(mutated);
    CHECK_FALSE(report.overall);
    CHECK_FALSE(check_named(report, "q1-x3").pass);
    CHECK_FALSE(check_named(report, "sq2-x3-unique").pass);
    CHECK_FALSE(check_named(report, "q2-x3").pass);
    CHECK_FALSE(check_named(report, "strong-coniveau-lt-1").pass);
}

TEST_CASE("adding the relation x5^2 breaks the square and Milnor checks")
{
    Presentation mutated =
        parse_presentation(mutated_bpu4_text("rel x2*x9\n", "rel x2*x9\nrel x5^2\n"));
    VerificationReport report = verify_paper_suite(mutated);
    CHECK_FALSE(report.overall);
    CHECK_FALSE(check_named(report, "squares-nonzero").pass);
    CHECK_FALSE(check_named(report, "q2-x3").pass);
    CHECK_FALSE(check_named(report, "strong-coniveau-lt-1").pass);
}

TEST_CASE("reports render in both formats")
{
    VerificationReport report = verify_paper_suite();
    std::string text = report.to_text();
    CHECK(text.find("overall: PASS (10/10 checks)") != std::string::npos);
    std::string json = report.to_json();
    CHECK(json.find("\"overall\": true") != std::string::npos);
    CHECK(json.find("\"bpu4-dims\"") != std::string::npos);
}
