#include "f2alg/algebra.hpp"

#include <algorithm>

#include "f2alg/errors.hpp"

namespace f2alg {

std::size_t DegreeBasis::index_of(const Monomial& m) const
{
    auto it = std::lower_bound(all_monomials.begin(), all_monomials.end(), m, term_before);
    if (it == all_monomials.end() || !(*it == m))
        return F2Vector::npos;
    return static_cast<std::size_t>(it - all_monomials.begin());
}

GradedAlgebra::GradedAlgebra(Presentation pres, int max_degree)
    : pres_(std::move(pres)), max_degree_(max_degree)
{
    if (max_degree_ < 0)
        throw BoundError("max_degree must be non-negative");
}

void GradedAlgebra::check_degree(int d) const
{
    if (d < 0 || d > max_degree_)
        throw BoundError("degree " + std::to_string(d) + " outside [0, " +
                         std::to_string(max_degree_) + "]");
}

std::vector<Monomial> enumerate_monomials(const Presentation& pres, int d)
{
    std::vector<Monomial> out;
    std::vector<std::uint16_t> current(pres.gen_count(), 0);
    // Descending exponent on the earliest generator first, so the output is
    // already in the fixed order (descending lex within the degree).
    auto recurse = [&](auto&& self, std::size_t g, int remaining) -> void {
        if (g == pres.gen_count()) {
            if (remaining == 0)
                out.emplace_back(current, d);
            return;
        }
        int dg = pres.gen_degree(g);
        for (int e = remaining / dg; e >= 0; --e) {
            current[g] = static_cast<std::uint16_t>(e);
            self(self, g + 1, remaining - e * dg);
        }
        current[g] = 0;
    };
    if (d >= 0)
        recurse(recurse, 0, d);
    return out;
}

std::vector<Monomial> GradedAlgebra::monomials_of_degree(int d) const
{
    check_degree(d);
    return enumerate_monomials(pres_, d);
}

DegreeBasis GradedAlgebra::build_basis(int d) const
{
    DegreeBasis db;
    db.degree = d;
    db.all_monomials = enumerate_monomials(pres_, d);
    std::size_t n = db.all_monomials.size();

    // Eliminate over the reversed column order, so that pivots fall on the
    // latest-listed monomial of each reduced relation. The surviving basis
    // is then the greedy one in listing order: each relation rewrites its
    // last listed monomial in terms of earlier ones (x9^2 in terms of
    // x3^2*x12 and x5^2*x8, not the other way around).
    F2Matrix span(n);
    for (const Poly& rel : pres_.relations()) {
        if (rel.is_zero())
            continue;
        int dr = rel.degree();
        if (dr > d)
            continue;
        for (const Monomial& m : enumerate_monomials(pres_, d - dr)) {
            F2Vector row(n);
            for (const Monomial& t : rel.terms())
                row.flip(n - 1 - db.index_of(mono_mul(m, t)));
            span.add_row(std::move(row));
        }
    }

    RowReduceResult rr = row_reduce(span);
    db.relation_span.cols = n;
    for (std::size_t r = 0; r < rr.rank; ++r) {
        F2Vector listed(n);
        for (std::size_t c = 0; c < n; ++c)
            if (rr.rref.rows[r].get(c))
                listed.set(n - 1 - c);
        db.relation_span.add_row(std::move(listed));
        db.pivots.push_back(n - 1 - rr.pivots[r]);
    }

    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : db.pivots)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c])
            db.basis_monomials.push_back(db.all_monomials[c]);
    return db;
}

const DegreeBasis& GradedAlgebra::degree_basis(int d) const
{
    check_degree(d);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(d);
    if (it == cache_.end())
        it = cache_.emplace(d, build_basis(d)).first;
    return it->second;
}

F2Matrix GradedAlgebra::relation_span(int d) const
{
    return degree_basis(d).relation_span;
}

Poly GradedAlgebra::reduce_homogeneous(const Poly& p) const
{
    if (p.is_zero())
        return p;
    const DegreeBasis& db = degree_basis(p.degree());
    if (db.relation_span.row_count() == 0)
        return p;

    F2Vector v(db.all_monomials.size());
    for (const Monomial& m : p.terms()) {
        std::size_t idx = db.index_of(m);
        if (idx == F2Vector::npos)
            throw DimensionError("polynomial does not live over this algebra's generators");
        v.flip(idx);
    }
    for (std::size_t r = 0; r < db.relation_span.row_count(); ++r)
        if (v.get(db.pivots[r]))
            v.xor_with(db.relation_span.rows[r]);

    std::vector<Monomial> terms;
    for (std::size_t c = 0; c < db.all_monomials.size(); ++c)
        if (v.get(c))
            terms.push_back(db.all_monomials[c]);
    return Poly::from_terms(std::move(terms));
}

Poly GradedAlgebra::normal_form(const Poly& p) const
{
    if (p.is_zero())
        return p;
    if (!p.homogeneous())
        throw HomogeneityError("normal_form requires a homogeneous polynomial");
    check_degree(p.degree());
    return reduce_homogeneous(p);
}

Poly GradedAlgebra::multiply(const Poly& p, const Poly& q) const
{
    if (p.is_zero() || q.is_zero())
        return Poly();
    if (!p.homogeneous() || !q.homogeneous())
        throw HomogeneityError("multiply requires homogeneous polynomials");
    if (p.degree() + q.degree() > max_degree_)
        throw BoundError("product degree " + std::to_string(p.degree() + q.degree()) +
                         " exceeds max_degree " + std::to_string(max_degree_));
    return reduce_homogeneous(poly_mul_free(p, q));
}

std::vector<int> GradedAlgebra::poincare_series(int through) const
{
    check_degree(through);
    std::vector<int> dims;
    dims.reserve(static_cast<std::size_t>(through) + 1);
    for (int d = 0; d <= through; ++d)
        dims.push_back(static_cast<int>(degree_basis(d).dim()));
    return dims;
}

}  // namespace f2alg
