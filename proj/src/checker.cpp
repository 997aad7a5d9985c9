#include "f2alg/checker.hpp"

#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "f2alg/errors.hpp"
#include "f2alg/spaces.hpp"
#include "f2alg/steenrod.hpp"

namespace f2alg {

namespace {

    void finalize(ConiveauCertificate& cert)
    {
        bool all = std::all_of(cert.evidence.begin(), cert.evidence.end(),
                               [](const Fact& f) { return f.verified; });
        cert.verdict = all ? "established" : "inconclusive";
    }

    std::string render_dims(const std::vector<int>& dims)
    {
        std::string s = "[";
        for (std::size_t i = 0; i < dims.size(); ++i)
            s += (i ? ", " : "") + std::to_string(dims[i]);
        return s + "]";
    }

}  // namespace

ConiveauCertificate check_coniveau_ge1(const IntegralCertificate& cert, const GradedAlgebra& alg)
{
    const Poly& red = cert.reduction_of_generator;
    if (!red.is_zero()) {
        if (!red.homogeneous())
            throw HomogeneityError("declared reduction must be homogeneous");
        if (red.degree() != cert.degree)
            throw DimensionError("declared degree " + std::to_string(cert.degree) +
                                 " does not match the reduction's degree " +
                                 std::to_string(red.degree()));
    }
    if (cert.group_order && *cert.group_order == 0)
        throw Error("declared group order must be positive");

    ConiveauCertificate out;
    out.kind = "coniveau_ge_1";
    out.subject = red;

    Fact torsion;
    torsion.name = "integral-group-finite";
    torsion.statement = "the declared integral cohomology group is a finite cyclic group";
    torsion.verified = cert.group_order.has_value();
    torsion.value =
        cert.group_order ? "order " + std::to_string(*cert.group_order) : "infinite";
    out.evidence.push_back(std::move(torsion));

    Poly nf = alg.normal_form(red);
    Fact nonzero;
    nonzero.name = "reduction-nonzero";
    nonzero.statement = "the mod-2 reduction of the declared generator is nonzero";
    nonzero.verified = !nf.is_zero();
    nonzero.value = format_poly(alg.pres(), nf);
    out.evidence.push_back(std::move(nonzero));

    Fact rule;
    rule.name = "torsion-coniveau-rule";
    rule.statement =
        "a torsion integral class vanishes on the complement of a codimension-1 "
        "subvariety, so its mod-2 reduction has coniveau >= 1 (trusted rule)";
    rule.verified = true;
    rule.value = "trusted";
    out.evidence.push_back(std::move(rule));

    finalize(out);
    return out;
}

ConiveauCertificate check_strong_coniveau_lt1(const GradedAlgebra& alg_mod_i, const Poly& x)
{
    if (x.is_zero() || !x.homogeneous() || x.degree() != 3)
        throw HypothesisError("subject class must be homogeneous of degree 3");
    if (alg_mod_i.degree_basis(3).dim() != 1)
        throw HypothesisError("degree-3 part of the quotient is not 1-dimensional");
    Poly xn = alg_mod_i.normal_form(x);
    if (xn.is_zero())
        throw HypothesisError("subject class vanishes in the quotient");

    ConiveauCertificate out;
    out.kind = "strong_coniveau_lt_1";
    out.subject = xn;

    Fact q2;
    q2.name = "q2-nonzero";
    q2.statement = "Q_2 of the subject class is nonzero in the quotient (degree 3 -> 10)";
    Poly q2v = milnor_q(alg_mod_i, 2, xn);
    q2.verified = !q2v.is_zero();
    q2.value = format_poly(alg_mod_i.pres(), q2v);
    out.evidence.push_back(std::move(q2));

    Fact h7;
    h7.name = "degree-7-vanishes";
    h7.statement =
        "the quotient vanishes in degree 7, so Q_1 kills every class there (degree 7 -> 10)";
    std::size_t dim7 = alg_mod_i.degree_basis(7).dim();
    h7.verified = dim7 == 0;
    h7.value = "dim = " + std::to_string(dim7);
    out.evidence.push_back(std::move(h7));

    Fact gysin;
    gysin.name = "gysin-commutation-rule";
    gysin.statement = "Milnor operations commute with Gysin pushforward maps (trusted rule)";
    gysin.verified = true;
    gysin.value = "trusted";
    out.evidence.push_back(std::move(gysin));

    Fact power;
    power.name = "degree-1-power-rule";
    power.statement =
        "for a degree-1 class y, Q_2(y) = Q_1(y^5) = y^8; sources of codimension > 1 "
        "land in negative degree (rule of inference)";
    power.verified = true;
    power.value = "cited";
    out.evidence.push_back(std::move(power));

    finalize(out);
    return out;
}

// ---------------------------------------------------------------------------
// Replay suite

namespace {

    std::optional<Poly> named_gen_poly(const Presentation& pres, std::string_view name)
    {
        int g = pres.gen_index(name);
        if (g < 0)
            return std::nullopt;
        return pres.generator_poly(static_cast<std::size_t>(g));
    }

    // (BPU4 x BS1) / (t), the quotient model the strong-coniveau argument
    // runs in. Renames are honored in case the base model already uses "t".
    Presentation make_quotient_model(const Presentation& bpu4)
    {
        KunnethProduct k = kunneth_product(bpu4, bundled_model(ModelId::BS1));
        std::string tname = "t";
        for (const auto& [from, to] : k.renames)
            if (from == "t")
                tname = to;
        int tg = k.pres.gen_index(tname);
        Poly t = k.pres.generator_poly(static_cast<std::size_t>(tg));
        return quotient_by_ideal(k.pres, {t});
    }

}  // namespace

VerificationReport verify_paper_suite(const Presentation& bpu4)
{
    VerificationReport report;
    GradedAlgebra alg(bpu4, GradedAlgebra::kDefaultMaxDegree);

    auto run = [&](const char* name, const char* statement,
                   auto&& body) {
        CheckResult r;
        r.name = name;
        r.statement = statement;
        try {
            auto [pass, value] = body();
            r.pass = pass;
            r.value = std::move(value);
        }
        catch (const Error& e) {
            r.pass = false;
            r.value = std::string("error: ") + e.what();
        }
        report.checks.push_back(std::move(r));
    };

    using Outcome = std::pair<bool, std::string>;

    run("bpu4-dims", "the quotient ring is 1, 1, 0 dimensional in degrees 3, 5, 7",
        [&]() -> Outcome {
            std::vector<int> got{static_cast<int>(alg.degree_basis(3).dim()),
                                 static_cast<int>(alg.degree_basis(5).dim()),
                                 static_cast<int>(alg.degree_basis(7).dim())};
            return {got == std::vector<int>{1, 1, 0}, render_dims(got)};
        });

    run("squares-nonzero", "x3^2 != 0 and x5^2 != 0 in the quotient ring", [&]() -> Outcome {
        auto x3 = named_gen_poly(bpu4, "x3");
        auto x5 = named_gen_poly(bpu4, "x5");
        if (!x3 || !x5)
            return {false, "generator x3 or x5 not found"};
        Poly s3 = alg.multiply(*x3, *x3);
        Poly s5 = alg.multiply(*x5, *x5);
        return {!s3.is_zero() && !s5.is_zero(),
                "x3^2 = " + format_poly(bpu4, s3) + "; x5^2 = " + format_poly(bpu4, s5)};
    });

    run("table-consistency", "the partial Steenrod table is Adem-consistent through degree 12",
        [&]() -> Outcome {
            TableCheckReport tc = check_table_consistency(alg, 12);
            return {tc.consistent(), "violations = " + std::to_string(tc.violations.size()) +
                                         ", undetermined pairs skipped = " +
                                         std::to_string(tc.skipped.size())};
        });

    run("q1-x3", "Q_1(x3) = x3^2 != 0", [&]() -> Outcome {
        auto x3 = named_gen_poly(bpu4, "x3");
        if (!x3)
            return {false, "generator x3 not found"};
        Poly got = milnor_q(alg, 1, *x3);
        Poly want = alg.multiply(*x3, *x3);
        return {!got.is_zero() && got == want, "Q_1(x3) = " + format_poly(bpu4, got)};
    });

    run("sq2-x3-unique",
        "Sq^2(x3) is forced to be x5: Sq^1 Sq^2(x3) != 0 and degree 5 is 1-dimensional",
        [&]() -> Outcome {
            auto x3 = named_gen_poly(bpu4, "x3");
            if (!x3)
                return {false, "generator x3 not found"};
            Poly s = apply_sq(alg, 2, *x3);
            Poly u = apply_sq(alg, 1, s);
            const DegreeBasis& db5 = alg.degree_basis(5);
            bool dim_ok = db5.dim() == 1;
            Poly unique;
            if (dim_ok)
                unique.toggle(db5.basis_monomials[0]);
            bool pass = !u.is_zero() && dim_ok && s == unique;
            return {pass, "Sq^2(x3) = " + format_poly(bpu4, s) +
                              "; Sq^1 Sq^2(x3) = " + format_poly(bpu4, u) +
                              "; dim degree 5 = " + std::to_string(db5.dim())};
        });

    run("q2-x3", "Q_2(x3) = x5^2 != 0 in degree 10", [&]() -> Outcome {
        auto x3 = named_gen_poly(bpu4, "x3");
        auto x5 = named_gen_poly(bpu4, "x5");
        if (!x3 || !x5)
            return {false, "generator x3 or x5 not found"};
        Poly got = milnor_q(alg, 2, *x3);
        Poly want = alg.multiply(*x5, *x5);
        return {!got.is_zero() && got == want, "Q_2(x3) = " + format_poly(bpu4, got)};
    });

    run("milnor-power-rule",
        "Q_i(x1^(2j+1)) = x1^(2j+2^(i+1)) and Q_i(x1^(2j)) = 0 in F2[x1] for i <= 3 through "
        "degree 20",
        [&]() -> Outcome {
            Presentation p1 = bundled_model(ModelId::P1);
            GradedAlgebra f(p1, GradedAlgebra::kDefaultMaxDegree);
            int cases = 0;
            bool ok = true;
            for (int i = 0; i <= 3; ++i) {
                int shift = (1 << (i + 1)) - 1;
                for (int j = 0; 2 * j + 1 + shift <= f.max_degree(); ++j) {
                    Poly odd;
                    odd.toggle(p1.generator_monomial(0, 2 * j + 1));
                    Poly expect;
                    expect.toggle(p1.generator_monomial(0, 2 * j + (1 << (i + 1))));
                    ok = ok && milnor_q(f, i, odd) == expect;
                    ++cases;
                    Poly even;
                    even.toggle(p1.generator_monomial(0, 2 * j));
                    ok = ok && milnor_q(f, i, even).is_zero();
                    ++cases;
                }
            }
            return {ok, std::to_string(cases) + " cases checked"};
        });

    run("kunneth-quotient",
        "the product with BS1 followed by the quotient by (t) reproduces the Poincare series "
        "through degree 10",
        [&]() -> Outcome {
            GradedAlgebra quotient(make_quotient_model(bpu4), GradedAlgebra::kDefaultMaxDegree);
            std::vector<int> got = quotient.poincare_series(10);
            std::vector<int> want = alg.poincare_series(10);
            return {got == want, render_dims(got) + " vs " + render_dims(want)};
        });

    run("coniveau-ge-1", "the declared integral certificate establishes coniveau >= 1 for x3",
        [&]() -> Outcome {
            auto x3 = named_gen_poly(bpu4, "x3");
            if (!x3)
                return {false, "generator x3 not found"};
            IntegralCertificate cert{3, 4, *x3};
            ConiveauCertificate c = check_coniveau_ge1(cert, alg);
            return {c.established(), "verdict: " + c.verdict};
        });

    run("strong-coniveau-lt-1",
        "Q_2(x3) != 0 and vanishing in degree 7 establish strong coniveau < 1 for x3",
        [&]() -> Outcome {
            Presentation q = make_quotient_model(bpu4);
            GradedAlgebra quotient(q, GradedAlgebra::kDefaultMaxDegree);
            auto x3 = named_gen_poly(q, "x3");
            if (!x3)
                return {false, "generator x3 not found"};
            ConiveauCertificate c = check_strong_coniveau_lt1(quotient, *x3);
            std::string detail;
            for (const Fact& f : c.evidence)
                if (f.name == "q2-nonzero")
                    detail = "; Q_2(x3) = " + f.value;
            return {c.established(), "verdict: " + c.verdict + detail};
        });

    report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                                 [](const CheckResult& c) { return c.pass; });
    return report;
}

VerificationReport verify_paper_suite()
{
    return verify_paper_suite(bundled_model(ModelId::BPU4));
}

std::string VerificationReport::to_text() const
{
    std::ostringstream out;
    std::size_t passed = 0;
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& c = checks[i];
        if (c.pass)
            ++passed;
        out << (c.pass ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << c.name << ": "
            << c.statement << "\n";
        out << "      value: " << c.value << "\n";
    }
    out << "overall: " << (overall ? "PASS" : "FAIL") << " (" << passed << "/" << checks.size()
        << " checks)\n";
    return out.str();
}

std::string VerificationReport::to_json() const
{
    nlohmann::ordered_json doc;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : checks) {
        nlohmann::ordered_json item;
        item["name"] = c.name;
        item["statement"] = c.statement;
        item["pass"] = c.pass;
        item["value"] = c.value;
        doc["checks"].push_back(std::move(item));
    }
    doc["overall"] = overall;
    return doc.dump(2) + "\n";
}

}  // namespace f2alg
