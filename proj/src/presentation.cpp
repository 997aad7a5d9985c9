#include "f2alg/presentation.hpp"

#include <algorithm>
#include <cctype>

#include "f2alg/errors.hpp"

namespace f2alg {

bool Monomial::is_unit() const
{
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint16_t e) { return e == 0; });
}

bool lex_greater(const Monomial& a, const Monomial& b)
{
    return a.exps() > b.exps();
}

bool term_before(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() > b.degree();
    return lex_greater(a, b);
}

Poly Poly::from_terms(std::vector<Monomial> terms)
{
    std::sort(terms.begin(), terms.end(), term_before);
    // cancel equal monomials pairwise (F2 coefficients)
    std::vector<Monomial> kept;
    kept.reserve(terms.size());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i])
            ++j;
        if ((j - i) & 1)
            kept.push_back(std::move(terms[i]));
        i = j;
    }
    Poly p;
    p.terms_ = std::move(kept);
    return p;
}

void Poly::toggle(const Monomial& m)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_before);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

bool Poly::homogeneous() const
{
    for (std::size_t i = 1; i < terms_.size(); ++i)
        if (terms_[i].degree() != terms_[0].degree())
            return false;
    return true;
}

int Poly::degree() const
{
    if (terms_.empty())
        throw HomogeneityError("the zero polynomial has no degree");
    return terms_[0].degree();
}

Poly operator+(const Poly& a, const Poly& b)
{
    // merge with cancellation
    Poly out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        if (a.terms_[i] == b.terms_[j]) {
            ++i;
            ++j;
        }
        else if (term_before(a.terms_[i], b.terms_[j]))
            out.terms_.push_back(a.terms_[i++]);
        else
            out.terms_.push_back(b.terms_[j++]);
    }
    out.terms_.insert(out.terms_.end(), a.terms_.begin() + i, a.terms_.end());
    out.terms_.insert(out.terms_.end(), b.terms_.begin() + j, b.terms_.end());
    return out;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    std::vector<std::uint16_t> e(a.exps());
    for (std::size_t g = 0; g < e.size(); ++g)
        e[g] = static_cast<std::uint16_t>(e[g] + b.exp(g));
    return Monomial(std::move(e), a.degree() + b.degree());
}

Poly poly_mul_free(const Poly& a, const Poly& b)
{
    std::vector<Monomial> terms;
    terms.reserve(a.term_count() * b.term_count());
    for (const auto& ma : a.terms())
        for (const auto& mb : b.terms())
            terms.push_back(mono_mul(ma, mb));
    return Poly::from_terms(std::move(terms));
}

Poly poly_square_free(const Poly& a)
{
    std::vector<Monomial> terms;
    terms.reserve(a.term_count());
    for (const auto& m : a.terms()) {
        std::vector<std::uint16_t> e(m.exps());
        for (auto& x : e)
            x = static_cast<std::uint16_t>(x * 2);
        terms.emplace_back(std::move(e), m.degree() * 2);
    }
    return Poly::from_terms(std::move(terms));
}

namespace {

    bool valid_ident(std::string_view s)
    {
        if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
            return false;
        for (char c : s)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                return false;
        return true;
    }

}  // namespace

Presentation::Presentation(std::vector<Generator> gens, std::vector<Poly> relations,
                           std::map<std::pair<int, int>, Poly> sq_table)
    : gens_(std::move(gens)), relations_(std::move(relations)), sq_table_(std::move(sq_table))
{
    for (std::size_t g = 0; g < gens_.size(); ++g) {
        const auto& gen = gens_[g];
        if (!valid_ident(gen.name))
            throw Error("invalid generator name '" + gen.name + "'");
        if (gen.degree < 1)
            throw Error("generator '" + gen.name + "' must have degree >= 1");
        if (!index_.emplace(gen.name, static_cast<int>(g)).second)
            throw Error("duplicate generator name '" + gen.name + "'");
    }
    for (std::size_t r = 0; r < relations_.size(); ++r) {
        const Poly& rel = relations_[r];
        if (rel.is_zero()) {
            warnings_.push_back("relation " + std::to_string(r + 1) + " is identically zero");
            continue;
        }
        if (!rel.homogeneous())
            throw HomogeneityError("relation " + std::to_string(r + 1) + " mixes degrees");
        for (const auto& m : rel.terms())
            if (m.width() != gens_.size())
                throw Error("relation monomial width does not match generator count");
    }
    for (const auto& [key, value] : sq_table_) {
        auto [g, i] = key;
        if (g < 0 || g >= static_cast<int>(gens_.size()))
            throw Error("Steenrod table entry for unknown generator index");
        if (i < 1)
            throw Error("Steenrod table index must be >= 1");
        int dg = gens_[static_cast<std::size_t>(g)].degree;
        if (!value.is_zero() && !value.homogeneous())
            throw HomogeneityError("Steenrod table entry Sq^" + std::to_string(i) + "(" +
                                   gens_[g].name + ") mixes degrees");
        if (!value.is_zero() && value.degree() != dg + i)
            throw HomogeneityError("Steenrod table entry Sq^" + std::to_string(i) + "(" +
                                   gens_[g].name + ") must be homogeneous of degree " +
                                   std::to_string(dg + i));
        if (i > dg && !value.is_zero())
            throw Error("unstable condition violated: Sq^" + std::to_string(i) + "(" +
                        gens_[g].name + ") must be 0");
        if (i == dg) {
            Poly square;
            square.toggle(generator_monomial(static_cast<std::size_t>(g), 2));
            if (!(value == square))
                throw Error("unstable condition violated: Sq^" + std::to_string(i) + "(" +
                            gens_[g].name + ") must be " + gens_[g].name + "^2");
        }
    }
}

int Presentation::gen_index(std::string_view name) const
{
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

std::optional<Poly> Presentation::sq_entry(int g, int i) const
{
    auto it = sq_table_.find({g, i});
    if (it == sq_table_.end())
        return std::nullopt;
    return it->second;
}

Monomial Presentation::unit() const
{
    return Monomial(std::vector<std::uint16_t>(gens_.size(), 0), 0);
}

Monomial Presentation::monomial(const std::vector<std::uint16_t>& exps) const
{
    if (exps.size() != gens_.size())
        throw DimensionError("exponent vector width does not match generator count");
    int deg = 0;
    for (std::size_t g = 0; g < exps.size(); ++g)
        deg += static_cast<int>(exps[g]) * gens_[g].degree;
    return Monomial(exps, deg);
}

Monomial Presentation::generator_monomial(std::size_t g, int exp) const
{
    std::vector<std::uint16_t> e(gens_.size(), 0);
    e[g] = static_cast<std::uint16_t>(exp);
    return Monomial(std::move(e), gens_[g].degree * exp);
}

Poly Presentation::generator_poly(std::size_t g) const
{
    Poly p;
    p.toggle(generator_monomial(g));
    return p;
}

Poly Presentation::unit_poly() const
{
    Poly p;
    p.toggle(unit());
    return p;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

    struct Cursor {
        std::string_view text;
        std::size_t pos = 0;
        int line;
        int col_base;  // column of text[0] within the original line

        int col() const { return col_base + static_cast<int>(pos); }

        void skip_ws()
        {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t'))
                ++pos;
        }

        bool eof()
        {
            skip_ws();
            return pos >= text.size();
        }

        char peek()
        {
            skip_ws();
            return pos < text.size() ? text[pos] : '\0';
        }

        bool accept(char c)
        {
            if (peek() == c) {
                ++pos;
                return true;
            }
            return false;
        }

        void expect(char c, const char* what)
        {
            if (!accept(c))
                throw ParseError(line, col() + 1, std::string("expected ") + what);
        }

        std::string ident()
        {
            skip_ws();
            std::size_t start = pos;
            if (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                             text[pos] == '_'))
                    ++pos;
            }
            if (start == pos)
                throw ParseError(line, col() + 1, "expected identifier");
            return std::string(text.substr(start, pos - start));
        }

        long positive_int(const char* what)
        {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                throw ParseError(line, col() + 1, std::string("expected ") + what);
            long value = 0;
            for (std::size_t k = start; k < pos; ++k) {
                value = value * 10 + (text[k] - '0');
                if (value > 1000000)
                    throw ParseError(line, col_base + static_cast<int>(start) + 1,
                                     std::string(what) + " out of range");
            }
            if (value < 1)
                throw ParseError(line, col_base + static_cast<int>(start) + 1,
                                 std::string(what) + " must be positive");
            return value;
        }
    };

    Monomial parse_term(Cursor& cur, const std::vector<Generator>& gens,
                        const std::map<std::string, int, std::less<>>& index)
    {
        std::vector<std::uint16_t> exps(gens.size(), 0);
        int degree = 0;
        if (cur.accept('1'))
            return Monomial(std::move(exps), 0);
        while (true) {
            int col0 = cur.col() + 1;
            std::string name = cur.ident();
            auto it = index.find(name);
            if (it == index.end())
                throw ParseError(cur.line, col0, "unknown generator '" + name + "'");
            long e = 1;
            if (cur.accept('^'))
                e = cur.positive_int("exponent");
            std::size_t g = static_cast<std::size_t>(it->second);
            long total = exps[g] + e;
            if (total > 0xffff)
                throw ParseError(cur.line, col0, "exponent too large");
            exps[g] = static_cast<std::uint16_t>(total);
            degree += static_cast<int>(e) * gens[g].degree;
            if (!cur.accept('*'))
                break;
        }
        return Monomial(std::move(exps), degree);
    }

    Poly parse_poly_line(Cursor& cur, const std::vector<Generator>& gens,
                         const std::map<std::string, int, std::less<>>& index)
    {
        if (cur.accept('0')) {
            if (!cur.eof())
                throw ParseError(cur.line, cur.col() + 1, "'0' must stand alone");
            return Poly();
        }
        std::vector<Monomial> terms;
        terms.push_back(parse_term(cur, gens, index));
        while (cur.accept('+'))
            terms.push_back(parse_term(cur, gens, index));
        if (!cur.eof())
            throw ParseError(cur.line, cur.col() + 1, "unexpected trailing input");
        return Poly::from_terms(std::move(terms));
    }

    std::string_view strip_comment(std::string_view line)
    {
        auto h = line.find('#');
        if (h != std::string_view::npos)
            line = line.substr(0, h);
        return line;
    }

    bool blank(std::string_view s)
    {
        return s.find_first_not_of(" \t\r") == std::string_view::npos;
    }

}  // namespace

Presentation parse_presentation(const std::string& text)
{
    std::vector<Generator> gens;
    std::map<std::string, int, std::less<>> index;
    std::vector<Poly> relations;
    std::map<std::pair<int, int>, Poly> sq_table;

    int lineno = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        ++lineno;
        std::string_view raw(text.data() + start, end - start);
        start = end + 1;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        std::string_view line = strip_comment(raw);
        if (blank(line)) {
            if (start > text.size())
                break;
            continue;
        }

        Cursor cur{line, 0, lineno, 0};
        int kw_col = cur.col() + 1;
        std::string kw = cur.ident();
        if (kw == "gen") {
            std::string name = cur.ident();
            long deg = cur.positive_int("degree");
            if (!cur.eof())
                throw ParseError(lineno, cur.col() + 1, "unexpected trailing input");
            if (index.count(name))
                throw ParseError(lineno, kw_col, "duplicate generator '" + name + "'");
            index.emplace(name, static_cast<int>(gens.size()));
            gens.push_back({std::move(name), static_cast<int>(deg)});
        }
        else if (kw == "rel") {
            Poly p = parse_poly_line(cur, gens, index);
            if (!p.is_zero() && !p.homogeneous())
                throw ParseError(lineno, kw_col, "relation mixes degrees");
            relations.push_back(std::move(p));
        }
        else if (kw == "sq") {
            long i = cur.positive_int("Steenrod index");
            int gcol = cur.col() + 1;
            std::string name = cur.ident();
            auto it = index.find(name);
            if (it == index.end())
                throw ParseError(lineno, gcol, "unknown generator '" + name + "'");
            cur.expect('=', "'='");
            Poly p = parse_poly_line(cur, gens, index);
            int g = it->second;
            int dg = gens[static_cast<std::size_t>(g)].degree;
            if (!p.is_zero() && p.degree() != dg + static_cast<int>(i))
                throw ParseError(lineno, kw_col,
                                 "Steenrod value must be homogeneous of degree " +
                                     std::to_string(dg + i));
            if (i > dg && !p.is_zero())
                throw ParseError(lineno, kw_col, "unstable condition: Sq^" + std::to_string(i) +
                                                     "(" + name + ") must be 0");
            if (i == dg) {
                std::vector<std::uint16_t> sq_exps(gens.size(), 0);
                sq_exps[static_cast<std::size_t>(g)] = 2;
                Poly square;
                square.toggle(Monomial(std::move(sq_exps), 2 * dg));
                if (!(p == square))
                    throw ParseError(lineno, kw_col,
                                     "unstable condition: Sq^" + std::to_string(i) + "(" + name +
                                         ") must be " + name + "^2");
            }
            if (!sq_table.emplace(std::make_pair(g, static_cast<int>(i)), std::move(p)).second)
                throw ParseError(lineno, kw_col,
                                 "duplicate Steenrod table entry for (" + name + ", " +
                                     std::to_string(i) + ")");
        }
        else {
            throw ParseError(lineno, kw_col, "unknown directive '" + kw + "'");
        }
        if (start > text.size())
            break;
    }
    return Presentation(std::move(gens), std::move(relations), std::move(sq_table));
}

Poly parse_poly(const Presentation& pres, const std::string& text)
{
    std::map<std::string, int, std::less<>> index;
    for (std::size_t g = 0; g < pres.gen_count(); ++g)
        index.emplace(pres.generators()[g].name, static_cast<int>(g));
    Cursor cur{text, 0, 1, 0};
    return parse_poly_line(cur, pres.generators(), index);
}

std::string format_monomial(const Presentation& pres, const Monomial& m)
{
    if (m.is_unit())
        return "1";
    std::string s;
    for (std::size_t g = 0; g < m.width(); ++g) {
        if (m.exp(g) == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += pres.generators()[g].name;
        if (m.exp(g) > 1)
            s += "^" + std::to_string(m.exp(g));
    }
    return s;
}

std::string format_poly(const Presentation& pres, const Poly& p)
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms().size(); ++i) {
        if (i)
            s += " + ";
        s += format_monomial(pres, p.terms()[i]);
    }
    return s;
}

std::string format_presentation(const Presentation& pres)
{
    std::string s;
    for (const auto& g : pres.generators())
        s += "gen " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const auto& r : pres.relations())
        s += "rel " + format_poly(pres, r) + "\n";
    for (const auto& [key, value] : pres.sq_table())
        s += "sq " + std::to_string(key.second) + " " +
             pres.generators()[static_cast<std::size_t>(key.first)].name + " = " +
             format_poly(pres, value) + "\n";
    return s;
}

}  // namespace f2alg
