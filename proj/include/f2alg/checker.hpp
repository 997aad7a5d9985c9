// Certificate logic: the sufficient condition for coniveau >= 1 (declared
// torsion integral class with nonzero mod-2 reduction), the sufficient
// condition for strong coniveau < 1 (Q_2 nonzero in a quotient vanishing in
// degree 7), and the replay suite covering every finite computation the
// headline result rests on. Verdicts are one-directional: "established" or
// "inconclusive", never "disproved".
#ifndef F2ALG_CHECKER_HPP
#define F2ALG_CHECKER_HPP

#include <string>
#include <vector>

#include "f2alg/algebra.hpp"
#include "f2alg/presentation.hpp"

namespace f2alg {

struct Fact {
    std::string name;
    std::string statement;
    bool verified = false;
    std::string value;
};

struct ConiveauCertificate {
    std::string kind;  // "coniveau_ge_1" or "strong_coniveau_lt_1"
    Poly subject;
    std::vector<Fact> evidence;
    std::string verdict;  // "established" iff every fact verified

    bool established() const { return verdict == "established"; }
};

// Verdict "established" iff the declared integral group is finite cyclic and
// the declared reduction is nonzero in the quotient. Throws on a mismatch
// between the declared degree and the polynomial's degree.
ConiveauCertificate check_coniveau_ge1(const IntegralCertificate& cert,
                                       const GradedAlgebra& alg);

// Hypotheses (degree-3 subject, 1-dimensional degree-3 part, nonzero class)
// are hard preconditions; their failure throws HypothesisError. Verdict
// "established" iff Q_2(x) != 0 in the quotient and the quotient vanishes in
// degree 7.
ConiveauCertificate check_strong_coniveau_lt1(const GradedAlgebra& alg_mod_i, const Poly& x);

struct CheckResult {
    std::string name;
    std::string statement;
    bool pass = false;
    std::string value;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool overall = false;

    std::string to_text() const;
    std::string to_json() const;
};

// Runs the ten named checks of the replay suite against the bundled models.
VerificationReport verify_paper_suite();
// Same suite with a replacement for the BPU4 model (sensitivity analysis).
VerificationReport verify_paper_suite(const Presentation& bpu4);

}  // namespace f2alg

#endif
