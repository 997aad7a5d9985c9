// Degreewise linear algebra for the quotient of a free graded-commutative F2
// algebra by a homogeneous relation ideal: per-degree monomial bases,
// relation spans, normal forms, multiplication, Poincare series. Normal
// forms are computed by elimination on relation multiples, not Groebner
// bases; everything is bounded by max_degree.
#ifndef F2ALG_ALGEBRA_HPP
#define F2ALG_ALGEBRA_HPP

#include <map>
#include <mutex>
#include <vector>

#include "f2alg/f2linalg.hpp"
#include "f2alg/presentation.hpp"

namespace f2alg {

struct DegreeBasis {
    int degree = 0;
    // All degree-d monomials of the free algebra, in the fixed order.
    std::vector<Monomial> all_monomials;
    // Row-reduced span of { m * r : r relation, deg(m * r) = d }, in
    // coordinates over all_monomials; zero rows dropped.
    F2Matrix relation_span;
    std::vector<std::size_t> pivots;
    // The non-pivot monomials: a basis of the quotient in this degree.
    std::vector<Monomial> basis_monomials;

    std::size_t dim() const { return basis_monomials.size(); }
    // Position of m in all_monomials (npos when absent).
    std::size_t index_of(const Monomial& m) const;
};

class GradedAlgebra {
public:
    static constexpr int kDefaultMaxDegree = 20;

    explicit GradedAlgebra(Presentation pres, int max_degree = kDefaultMaxDegree);

    const Presentation& pres() const { return pres_; }
    int max_degree() const { return max_degree_; }

    // Monomials of total degree d in the fixed order; d = 0 yields the unit.
    std::vector<Monomial> monomials_of_degree(int d) const;
    // Per-degree basis data; memoized, safe under concurrent readers.
    const DegreeBasis& degree_basis(int d) const;
    F2Matrix relation_span(int d) const;

    // Unique representative supported on basis monomials. Linear and
    // idempotent; the zero polynomial is accepted at any degree.
    Poly normal_form(const Poly& p) const;
    Poly multiply(const Poly& p, const Poly& q) const;
    std::vector<int> poincare_series(int through) const;

private:
    void check_degree(int d) const;
    DegreeBasis build_basis(int d) const;
    Poly reduce_homogeneous(const Poly& p) const;

    Presentation pres_;
    int max_degree_;
    mutable std::mutex mu_;
    mutable std::map<int, DegreeBasis> cache_;
};

// Enumeration behind monomials_of_degree, independent of any degree bound.
std::vector<Monomial> enumerate_monomials(const Presentation& pres, int d);

}  // namespace f2alg

#endif
