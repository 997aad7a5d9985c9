#include "f2alg/steenrod.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "f2alg/errors.hpp"

namespace f2alg {

SqWord::SqWord(std::vector<int> s) : sup(std::move(s))
{
    for (int i : sup)
        if (i < 1)
            throw Error("SqWord entries must be >= 1");
}

int SqWord::total_degree() const
{
    return std::accumulate(sup.begin(), sup.end(), 0);
}

bool SqWord::admissible() const
{
    for (std::size_t j = 0; j + 1 < sup.size(); ++j)
        if (sup[j] < 2 * sup[j + 1])
            return false;
    return true;
}

bool binom_mod2(long long n, long long k)
{
    if (k < 0 || n < 0 || k > n)
        return false;
    return (n & k) == k;
}

AdmissibleSum adem_normalize(const SqWord& w)
{
    AdmissibleSum out;
    std::vector<std::vector<int>> queue{w.sup};
    while (!queue.empty()) {
        std::vector<int> word = std::move(queue.back());
        queue.pop_back();

        std::size_t j = 0;
        while (j + 1 < word.size() && word[j] >= 2 * word[j + 1])
            ++j;
        if (j + 1 >= word.size()) {
            SqWord adm(std::move(word));
            auto it = out.words.find(adm);
            if (it != out.words.end())
                out.words.erase(it);  // coefficients are mod 2
            else
                out.words.insert(std::move(adm));
            continue;
        }

        int a = word[j], b = word[j + 1];
        for (int c = 0; 2 * c <= a; ++c) {
            if (!binom_mod2(b - c - 1, a - 2 * c))
                continue;
            std::vector<int> next(word.begin(), word.begin() + j);
            next.push_back(a + b - c);
            if (c > 0)
                next.push_back(c);
            next.insert(next.end(), word.begin() + j + 2, word.end());
            queue.push_back(std::move(next));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Cartan expansion with lazy unknown tracking.
//
// The total square of a class is expanded factor by factor; a component
// whose value would require an unspecified table entry is carried as
// "unknown" together with the entries that would determine it. Known zeros
// annihilate unknowns under multiplication, and squaring doubles shifts
// without cross terms, so even powers stay determined whenever their halves
// are.

namespace {

    struct Component {
        Poly value;
        bool known = true;
        std::set<std::pair<int, int>> missing;  // (generator index, i)
    };

    // comp[t] = the part of the total square raising degree by t.
    using Components = std::vector<Component>;

    Component comp_zero()
    {
        return Component{};
    }

    Component comp_known(Poly p)
    {
        return Component{std::move(p), true, {}};
    }

    Component comp_unknown(int g, int i)
    {
        Component c;
        c.known = false;
        c.missing.insert({g, i});
        return c;
    }

    void comp_add(Component& acc, const Component& x)
    {
        if (!x.known) {
            acc.known = false;
            acc.missing.insert(x.missing.begin(), x.missing.end());
            return;
        }
        if (acc.known)
            acc.value = acc.value + x.value;
    }

    Component comp_mul(const Component& a, const Component& b)
    {
        if (a.known && a.value.is_zero())
            return comp_zero();
        if (b.known && b.value.is_zero())
            return comp_zero();
        if (a.known && b.known)
            return comp_known(poly_mul_free(a.value, b.value));
        Component c;
        c.known = false;
        c.missing.insert(a.missing.begin(), a.missing.end());
        c.missing.insert(b.missing.begin(), b.missing.end());
        return c;
    }

    Components unit_components(const Presentation& pres, int max_shift)
    {
        Components c(static_cast<std::size_t>(max_shift) + 1);
        c[0] = comp_known(pres.unit_poly());
        return c;
    }

    Components generator_components(const Presentation& pres, std::size_t g, int max_shift)
    {
        int dg = pres.gen_degree(g);
        Components c(static_cast<std::size_t>(max_shift) + 1);
        c[0] = comp_known(pres.generator_poly(g));
        for (int t = 1; t <= max_shift; ++t) {
            if (t < dg) {
                auto entry = pres.sq_entry(static_cast<int>(g), t);
                c[t] = entry ? comp_known(*entry) : comp_unknown(static_cast<int>(g), t);
            }
            else if (t == dg) {
                Poly sq;
                sq.toggle(pres.generator_monomial(g, 2));
                c[t] = comp_known(std::move(sq));
            }
            // t > dg: zero by the unstable condition
        }
        return c;
    }

    Components square_components(const Components& a, int max_shift)
    {
        Components c(static_cast<std::size_t>(max_shift) + 1);
        for (std::size_t t = 0; t < a.size() && 2 * t <= static_cast<std::size_t>(max_shift); ++t) {
            const Component& x = a[t];
            if (x.known)
                c[2 * t] = comp_known(poly_square_free(x.value));
            else
                c[2 * t] = x;
        }
        return c;
    }

    Components convolve(const Components& a, const Components& b, int max_shift)
    {
        Components c(static_cast<std::size_t>(max_shift) + 1);
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (a[s].known && a[s].value.is_zero())
                continue;
            for (std::size_t t = 0; s + t <= static_cast<std::size_t>(max_shift) && t < b.size();
                 ++t)
                comp_add(c[s + t], comp_mul(a[s], b[t]));
        }
        return c;
    }

    Components power_components(const Presentation& pres, std::size_t g, int e, int max_shift)
    {
        Components result = unit_components(pres, max_shift);
        Components base = generator_components(pres, g, max_shift);
        while (e > 0) {
            if (e & 1)
                result = convolve(result, base, max_shift);
            e >>= 1;
            if (e > 0)
                base = square_components(base, max_shift);
        }
        return result;
    }

    // One evaluation pass at a fixed shift; generator powers repeat across
    // the terms of a polynomial, so their components are memoized.
    struct Expander {
        const Presentation& pres;
        int shift;
        std::map<std::pair<std::size_t, int>, Components> powers;

        const Components& power(std::size_t g, int e)
        {
            auto key = std::make_pair(g, e);
            auto it = powers.find(key);
            if (it == powers.end())
                it = powers.emplace(key, power_components(pres, g, e, shift)).first;
            return it->second;
        }

        Component monomial_component(const Monomial& m)
        {
            Components acc = unit_components(pres, shift);
            for (std::size_t g = 0; g < m.width(); ++g)
                if (m.exp(g) > 0)
                    acc = convolve(acc, power(g, m.exp(g)), shift);
            return acc[static_cast<std::size_t>(shift)];
        }
    };

    [[noreturn]] void throw_unknown(const Presentation& pres,
                                    const std::set<std::pair<int, int>>& missing)
    {
        std::vector<std::pair<std::string, int>> named;
        for (const auto& [g, i] : missing)
            named.emplace_back(pres.generators()[static_cast<std::size_t>(g)].name, i);
        throw UnknownSqError(std::move(named));
    }

}  // namespace

Poly apply_sq(const GradedAlgebra& alg, int i, const Poly& p)
{
    if (i < 0)
        throw Error("Sq index must be non-negative");
    if (p.is_zero())
        return p;
    if (!p.homogeneous())
        throw HomogeneityError("apply_sq requires a homogeneous polynomial");
    if (p.degree() + i > alg.max_degree())
        throw BoundError("Sq^" + std::to_string(i) + " lands in degree " +
                         std::to_string(p.degree() + i) + " above max_degree " +
                         std::to_string(alg.max_degree()));
    if (i == 0)
        return alg.normal_form(p);

    Expander expander{alg.pres(), i, {}};
    std::set<std::pair<int, int>> missing;
    std::vector<Monomial> collected;
    for (const Monomial& m : p.terms()) {
        Component c = expander.monomial_component(m);
        if (!c.known) {
            missing.insert(c.missing.begin(), c.missing.end());
            continue;
        }
        if (missing.empty())
            collected.insert(collected.end(), c.value.terms().begin(), c.value.terms().end());
    }
    if (!missing.empty())
        throw_unknown(alg.pres(), missing);
    return alg.normal_form(Poly::from_terms(std::move(collected)));
}

Poly apply_sq_word(const GradedAlgebra& alg, const SqWord& w, const Poly& p)
{
    Poly result = alg.normal_form(p);
    for (auto it = w.sup.rbegin(); it != w.sup.rend(); ++it)
        result = apply_sq(alg, *it, result);
    return result;
}

MilnorIndex MilnorIndex::of(int i)
{
    if (i < 0)
        throw Error("Milnor index must be non-negative");
    return MilnorIndex{i, (1 << (i + 1)) - 1};
}

Poly milnor_q(const GradedAlgebra& alg, int i, const Poly& p)
{
    MilnorIndex idx = MilnorIndex::of(i);
    if (p.is_zero())
        return p;
    if (!p.homogeneous())
        throw HomogeneityError("milnor_q requires a homogeneous polynomial");
    if (p.degree() + idx.degree_shift > alg.max_degree())
        throw BoundError("Q_" + std::to_string(i) + " lands in degree " +
                         std::to_string(p.degree() + idx.degree_shift) + " above max_degree " +
                         std::to_string(alg.max_degree()));
    if (i == 0)
        return apply_sq(alg, 1, p);
    int s = 1 << i;
    return apply_sq(alg, s, milnor_q(alg, i - 1, p)) + milnor_q(alg, i - 1, apply_sq(alg, s, p));
}

TableCheckReport check_table_consistency(const GradedAlgebra& alg, int through)
{
    if (through > alg.max_degree())
        throw BoundError("consistency bound exceeds max_degree");
    TableCheckReport report;
    const Presentation& pres = alg.pres();
    for (std::size_t g = 0; g < pres.gen_count(); ++g) {
        int dg = pres.gen_degree(g);
        Poly pg = pres.generator_poly(g);
        for (int total = 2; dg + total <= through; ++total) {
            for (int b = 1; b < total; ++b) {
                int a = total - b;
                if (a >= 2 * b)
                    continue;  // admissible pair, nothing to compare
                SqWord word({a, b});
                std::set<std::pair<std::string, int>> missing;
                Poly lhs, rhs;
                bool determined = true;
                try {
                    lhs = apply_sq_word(alg, word, pg);
                }
                catch (const UnknownSqError& e) {
                    determined = false;
                    missing.insert(e.missing.begin(), e.missing.end());
                }
                if (determined) {
                    try {
                        for (const SqWord& adm : adem_normalize(word).words)
                            rhs = rhs + apply_sq_word(alg, adm, pg);
                    }
                    catch (const UnknownSqError& e) {
                        determined = false;
                        missing.insert(e.missing.begin(), e.missing.end());
                    }
                }
                if (!determined) {
                    report.skipped.push_back(
                        {g, word, {missing.begin(), missing.end()}});
                }
                else if (!(lhs == rhs)) {
                    report.violations.push_back({g, word, lhs, rhs});
                }
            }
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Word syntax

SqWord parse_sq_word(const std::string& text)
{
    std::istringstream in(text);
    std::vector<int> sup;
    std::string tok;
    while (in >> tok) {
        if (tok.size() < 3 || tok.compare(0, 2, "Sq") != 0)
            throw Error("bad Steenrod word token '" + tok + "' (expected Sq<k>)");
        long v = 0;
        for (std::size_t k = 2; k < tok.size(); ++k) {
            if (!std::isdigit(static_cast<unsigned char>(tok[k])))
                throw Error("bad Steenrod word token '" + tok + "' (expected Sq<k>)");
            v = v * 10 + (tok[k] - '0');
            if (v > 1000000)
                throw Error("Steenrod index out of range in '" + tok + "'");
        }
        if (v < 1)
            throw Error("Steenrod index must be >= 1 in '" + tok + "'");
        sup.push_back(static_cast<int>(v));
    }
    return SqWord(std::move(sup));
}

std::string format_sq_word(const SqWord& w)
{
    if (w.sup.empty())
        return "1";
    std::string s;
    for (std::size_t j = 0; j < w.sup.size(); ++j) {
        if (j)
            s += " ";
        s += "Sq" + std::to_string(w.sup[j]);
    }
    return s;
}

std::string format_admissible_sum(const AdmissibleSum& s)
{
    if (s.words.empty())
        return "0";
    // greatest word first for a stable, leading-term-style rendering
    std::string out;
    for (auto it = s.words.rbegin(); it != s.words.rend(); ++it) {
        if (!out.empty())
            out += " + ";
        out += format_sq_word(*it);
    }
    return out;
}

}  // namespace f2alg
