#include <doctest.h>

#include <random>
#include <thread>

#include "f2alg/algebra.hpp"
#include "f2alg/errors.hpp"
#include "f2alg/spaces.hpp"
#include "oracles.hpp"

using namespace f2alg;

namespace {

GradedAlgebra bpu4_algebra(int max_degree = GradedAlgebra::kDefaultMaxDegree)
{
    return GradedAlgebra(bundled_model(ModelId::BPU4), max_degree);
}

std::vector<std::string> names(const Presentation& pres, const std::vector<Monomial>& ms)
{
    std::vector<std::string> out;
    for (const auto& m : ms)
        out.push_back(format_monomial(pres, m));
    return out;
}

Poly random_homogeneous(const GradedAlgebra& alg, std::mt19937& rng, int degree)
{
    std::vector<Monomial> all = alg.monomials_of_degree(degree);
    std::vector<Monomial> terms;
    for (const auto& m : all)
        if (rng() & 1)
            terms.push_back(m);
    return Poly::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("monomials_of_degree lists the fixed order")
{
    GradedAlgebra alg = bpu4_algebra();
    CHECK(names(alg.pres(), alg.monomials_of_degree(5)) ==
          std::vector<std::string>{"x2*x3", "x5"});
    CHECK(alg.monomials_of_degree(1).empty());
    CHECK(names(alg.pres(), alg.monomials_of_degree(0)) == std::vector<std::string>{"1"});
    CHECK_THROWS_AS(alg.monomials_of_degree(21), BoundError);
}

TEST_CASE("monomial enumeration agrees with the odometer oracle through degree 16")
{
    GradedAlgebra alg = bpu4_algebra();
    std::vector<int> degrees;
    for (const auto& g : alg.pres().generators())
        degrees.push_back(g.degree);
    for (int d = 0; d <= 16; ++d) {
        auto engine = alg.monomials_of_degree(d);
        auto expected = oracle::monomials_of_degree(degrees, d);
        REQUIRE(engine.size() == expected.size());
        // same set, and the engine order matches the documented listing order
        std::set<oracle::Mono> engine_set;
        for (const auto& m : engine)
            engine_set.insert(oracle::from_engine(m));
        CHECK(engine_set == std::set<oracle::Mono>(expected.begin(), expected.end()));
        for (std::size_t k = 1; k < engine.size(); ++k)
            CHECK(oracle::listed_before(degrees, oracle::from_engine(engine[k - 1]),
                                        oracle::from_engine(engine[k])));
    }
}

TEST_CASE("relation spans in low degrees")
{
    GradedAlgebra alg = bpu4_algebra();
    const Presentation& pres = alg.pres();

    F2Matrix d5 = alg.relation_span(5);
    CHECK(d5.row_count() == 1);  // only x2*x3 itself
    F2Matrix d7 = alg.relation_span(7);
    CHECK(d7.row_count() == 2);  // x2^2*x3 and x2*x5
    F2Matrix d4 = alg.relation_span(4);
    CHECK(d4.row_count() == 0);

    // the degree-7 span contains exactly the multiples enumerated by hand
    const DegreeBasis& db7 = alg.degree_basis(7);
    F2Vector v(db7.all_monomials.size());
    v.set(db7.index_of(parse_poly(pres, "x2^2*x3").terms()[0]));
    CHECK(span_membership(d7, v).member);
}

TEST_CASE("degree bases match the displayed dimensions")
{
    GradedAlgebra alg = bpu4_algebra();
    CHECK(names(alg.pres(), alg.degree_basis(3).basis_monomials) ==
          std::vector<std::string>{"x3"});
    CHECK(alg.degree_basis(7).dim() == 0);
    CHECK(names(alg.pres(), alg.degree_basis(10).basis_monomials) ==
          std::vector<std::string>{"x2^5", "x2*x8", "x5^2"});
}

TEST_CASE("normal forms of the presentation's defining classes")
{
    GradedAlgebra alg = bpu4_algebra();
    const Presentation& pres = alg.pres();
    CHECK(alg.normal_form(parse_poly(pres, "x2*x3")).is_zero());
    CHECK(format_poly(pres, alg.normal_form(parse_poly(pres, "x9^2"))) ==
          "x3^2*x12 + x5^2*x8");
    CHECK(format_poly(pres, alg.normal_form(parse_poly(pres, "x5^2"))) == "x5^2");
    for (const Poly& rel : pres.relations())
        CHECK(alg.normal_form(rel).is_zero());
    CHECK_THROWS_AS(alg.normal_form(parse_poly(pres, "x2 + x3")), HomogeneityError);
}

TEST_CASE("normal_form is linear and idempotent")
{
    GradedAlgebra alg = bpu4_algebra();
    std::mt19937 rng(20240806);
    for (int trial = 0; trial < 100; ++trial) {
        int d = 2 + static_cast<int>(rng() % 13);
        Poly p = random_homogeneous(alg, rng, d);
        Poly q = random_homogeneous(alg, rng, d);
        Poly np = alg.normal_form(p);
        CHECK(alg.normal_form(np) == np);
        CHECK(alg.normal_form(p + q) == np + alg.normal_form(q));
    }
}

TEST_CASE("multiplication in the quotient")
{
    GradedAlgebra alg = bpu4_algebra();
    const Presentation& pres = alg.pres();
    Poly x2 = parse_poly(pres, "x2");
    Poly x3 = parse_poly(pres, "x3");
    CHECK(alg.multiply(x2, x3).is_zero());
    CHECK_FALSE(alg.multiply(x3, x3).is_zero());
    CHECK_THROWS_AS(alg.multiply(parse_poly(pres, "x12"), parse_poly(pres, "x9")), BoundError);

    std::mt19937 rng(20240807);
    for (int trial = 0; trial < 50; ++trial) {
        int dp = 2 + static_cast<int>(rng() % 6);
        int dq = 2 + static_cast<int>(rng() % 6);
        Poly p = random_homogeneous(alg, rng, dp);
        Poly q = random_homogeneous(alg, rng, dq);
        CHECK(alg.multiply(p, q) == alg.multiply(q, p));
        CHECK(alg.multiply(alg.pres().unit_poly(), p) == alg.normal_form(p));
    }
}

TEST_CASE("Poincare series of the bundled models")
{
    GradedAlgebra alg = bpu4_algebra();
    CHECK(alg.poincare_series(10) == std::vector<int>{1, 0, 1, 1, 1, 1, 2, 0, 3, 2, 3});

    GradedAlgebra bs1(bundled_model(ModelId::BS1), 6);
    CHECK(bs1.poincare_series(6) == std::vector<int>{1, 0, 1, 0, 1, 0, 1});

    GradedAlgebra p1(bundled_model(ModelId::P1), 3);
    CHECK(p1.poincare_series(3) == std::vector<int>{1, 1, 1, 1});

    CHECK_THROWS_AS(alg.poincare_series(21), BoundError);
}

TEST_CASE("dimensions agree with the straight-line oracle through degree 16")
{
    for (ModelId id : all_models()) {
        Presentation pres = bundled_model(id);
        GradedAlgebra alg(pres, 16);
        for (int d = 0; d <= 16; ++d)
            CHECK(static_cast<int>(alg.degree_basis(d).dim()) == oracle::quotient_dim(pres, d));
    }
}

TEST_CASE("a free presentation has no relations to quotient by")
{
    GradedAlgebra p1x4(bundled_model(ModelId::P1x4), 12);
    for (int d = 0; d <= 12; ++d)
        CHECK(p1x4.degree_basis(d).dim() == p1x4.monomials_of_degree(d).size());
}

TEST_CASE("normal_form agrees with the independent elimination oracle")
{
    Presentation pres = bundled_model(ModelId::BPU4);
    GradedAlgebra alg(pres, 16);
    std::mt19937 rng(20240808);
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + static_cast<int>(rng() % 13);
        Poly p = random_homogeneous(alg, rng, d);
        if (p.is_zero())
            continue;
        oracle::PolySet expected = oracle::normal_form(pres, oracle::from_engine(p), d);
        CHECK(oracle::from_engine(alg.normal_form(p)) == expected);
    }
}

TEST_CASE("the zero polynomial is accepted at any degree")
{
    GradedAlgebra alg = bpu4_algebra();
    CHECK(alg.normal_form(Poly()).is_zero());
    CHECK(alg.multiply(Poly(), parse_poly(alg.pres(), "x12")).is_zero());
}

TEST_CASE("polynomials from a foreign presentation are rejected")
{
    GradedAlgebra alg = bpu4_algebra();
    Presentation other = parse_presentation("gen y 2\ngen z 3\nrel y*z");
    CHECK_THROWS_AS(alg.normal_form(parse_poly(other, "y*z")), DimensionError);
}

TEST_CASE("concurrent degree_basis readers see identical results")
{
    GradedAlgebra alg = bpu4_algebra();
    GradedAlgebra reference = bpu4_algebra();
    std::vector<std::vector<int>> results(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&alg, &results, t] {
            std::vector<int> dims;
            for (int d = 0; d <= 16; ++d)
                dims.push_back(static_cast<int>(alg.degree_basis(d).dim()));
            results[static_cast<std::size_t>(t)] = std::move(dims);
        });
    }
    for (auto& w : workers)
        w.join();
    std::vector<int> expected;
    for (int d = 0; d <= 16; ++d)
        expected.push_back(static_cast<int>(reference.degree_basis(d).dim()));
    for (const auto& r : results)
        CHECK(r == expected);
}
