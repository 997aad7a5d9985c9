// Data model for graded-algebra presentations over F2: generators with
// degrees, monomials as exponent vectors, polynomials as F2 term sets, the
// partial Steenrod table, and the line-oriented text format.
#ifndef F2ALG_PRESENTATION_HPP
#define F2ALG_PRESENTATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace f2alg {

struct Generator {
    std::string name;
    int degree = 0;  // cohomological degree, >= 1
};

// Exponent vector over a presentation's generators, with the total degree
// carried alongside. A monomial is always tied to the presentation that
// assigned its generator indices.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint16_t> exps, int degree)
        : exps_(std::move(exps)), degree_(degree)
    {
    }

    int degree() const { return degree_; }
    const std::vector<std::uint16_t>& exps() const { return exps_; }
    std::uint16_t exp(std::size_t g) const { return exps_[g]; }
    std::size_t width() const { return exps_.size(); }
    bool is_unit() const;

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.exps_ == b.exps_;
    }

private:
    std::vector<std::uint16_t> exps_;
    int degree_ = 0;
};

// Fixed global monomial order: graded, then lexicographic in generator
// declaration order. Terms are stored and printed greatest-first, so within
// one degree the listing is descending lexicographic.
bool lex_greater(const Monomial& a, const Monomial& b);
bool term_before(const Monomial& a, const Monomial& b);

// F2 polynomial: a finite set of monomials (coefficient 1 = membership).
// Terms are kept sorted by term_before; addition is symmetric difference.
class Poly {
public:
    Poly() = default;
    // Sorts and cancels duplicate monomials mod 2.
    static Poly from_terms(std::vector<Monomial> terms);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void toggle(const Monomial& m);
    bool homogeneous() const;
    // Degree of the top term. The zero polynomial has no degree of its own;
    // callers treat it as homogeneous of every degree.
    int degree() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

private:
    std::vector<Monomial> terms_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// Product in the free commutative algebra (no relations applied).
Poly poly_mul_free(const Poly& a, const Poly& b);
// Square in the free algebra: cross terms cancel mod 2, so exponents double.
Poly poly_square_free(const Poly& a);

class Presentation {
public:
    Presentation() = default;
    // Validates every invariant: unique well-formed names, degrees >= 1,
    // homogeneous relations (a zero relation loads with a warning), and the
    // unstable conditions on the Steenrod table. Throws on violation.
    Presentation(std::vector<Generator> gens, std::vector<Poly> relations,
                 std::map<std::pair<int, int>, Poly> sq_table);

    const std::vector<Generator>& generators() const { return gens_; }
    std::size_t gen_count() const { return gens_.size(); }
    int gen_index(std::string_view name) const;  // -1 when absent
    int gen_degree(std::size_t g) const { return gens_[g].degree; }
    const std::vector<Poly>& relations() const { return relations_; }
    const std::map<std::pair<int, int>, Poly>& sq_table() const { return sq_table_; }
    std::optional<Poly> sq_entry(int g, int i) const;
    const std::vector<std::string>& warnings() const { return warnings_; }

    Monomial unit() const;
    Monomial monomial(const std::vector<std::uint16_t>& exps) const;
    Monomial generator_monomial(std::size_t g, int exp = 1) const;
    Poly generator_poly(std::size_t g) const;
    Poly unit_poly() const;

private:
    std::vector<Generator> gens_;
    std::vector<Poly> relations_;
    std::map<std::pair<int, int>, Poly> sq_table_;
    std::vector<std::string> warnings_;
    std::map<std::string, int, std::less<>> index_;
};

// Integral cohomology data declared as certificate input, never computed:
// the order of a cyclic integral group in one degree and the mod-2
// reduction of its generator.
struct IntegralCertificate {
    int degree = 0;
    std::optional<std::uint64_t> group_order;  // nullopt means infinite
    Poly reduction_of_generator;
};

// Text format (line oriented, '#' comments):
//   gen <ident> <positive-int>
//   rel <poly>
//   sq <positive-int> <ident> = <poly>
// poly := term ('+' term)* | '0' ; term := '1' | factor ('*' factor)* ;
// factor := ident ('^' positive-int)? ; ident := [A-Za-z][A-Za-z0-9_]*.
Presentation parse_presentation(const std::string& text);

// Parses a standalone polynomial over the presentation's generators.
Poly parse_poly(const Presentation& pres, const std::string& text);

std::string format_monomial(const Presentation& pres, const Monomial& m);
// Canonical form: terms greatest-first in the fixed order, factors in
// declaration order; parse_poly(format_poly(p)) == p.
std::string format_poly(const Presentation& pres, const Poly& p);
// Emits the presentation in the text format above.
std::string format_presentation(const Presentation& pres);

}  // namespace f2alg

#endif
