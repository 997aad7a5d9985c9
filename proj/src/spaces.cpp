#include "f2alg/spaces.hpp"

#include <map>

#include "f2alg/errors.hpp"

namespace f2alg {

namespace {

    // H*(BPU(4); F2) in Toda's presentation. The table carries exactly the
    // three entries the model pins down; all other Steenrod values on
    // generators are either forced by the unstable condition or deliberately
    // unspecified.
    constexpr std::string_view kBpu4Text =
        "# Mod-2 cohomology of BPU(4), Toda's presentation.\n"
        "gen x2 2\n"
        "gen x3 3\n"
        "gen x5 5\n"
        "gen x8 8\n"
        "gen x9 9\n"
        "gen x12 12\n"
        "rel x2*x3\n"
        "rel x2*x5\n"
        "rel x2*x9\n"
        "rel x9^2 + x3^2*x12 + x5^2*x8\n"
        "sq 1 x3 = 0\n"
        "sq 2 x3 = x5\n"
        "sq 1 x5 = x3^2\n";

    constexpr std::string_view kBs1Text =
        "# Mod-2 cohomology of BS^1: a polynomial ring on one degree-2 generator.\n"
        "gen t 2\n";

    constexpr std::string_view kP1Text =
        "# F2[x1] with deg x1 = 1.\n"
        "gen x1 1\n";

    constexpr std::string_view kP1x4Text =
        "# Polynomial ring on four degree-1 generators.\n"
        "gen a1 1\n"
        "gen a2 1\n"
        "gen a3 1\n"
        "gen a4 1\n";

}  // namespace

const std::vector<ModelId>& all_models()
{
    static const std::vector<ModelId> ids{ModelId::BPU4, ModelId::BS1, ModelId::P1,
                                          ModelId::P1x4};
    return ids;
}

std::string_view model_name(ModelId id)
{
    switch (id) {
        case ModelId::BPU4: return "BPU4";
        case ModelId::BS1: return "BS1";
        case ModelId::P1: return "P1";
        case ModelId::P1x4: return "P1x4";
    }
    throw UnknownModelError("invalid model id");
}

std::optional<ModelId> find_model(std::string_view name)
{
    for (ModelId id : all_models())
        if (model_name(id) == name)
            return id;
    return std::nullopt;
}

std::string_view model_text(ModelId id)
{
    switch (id) {
        case ModelId::BPU4: return kBpu4Text;
        case ModelId::BS1: return kBs1Text;
        case ModelId::P1: return kP1Text;
        case ModelId::P1x4: return kP1x4Text;
    }
    throw UnknownModelError("invalid model id");
}

Presentation bundled_model(ModelId id)
{
    return parse_presentation(std::string(model_text(id)));
}

Presentation bundled_model(std::string_view name)
{
    auto id = find_model(name);
    if (!id)
        throw UnknownModelError("unknown model '" + std::string(name) + "'");
    return bundled_model(*id);
}

namespace {

    Poly remap_poly(const Poly& p, std::size_t new_width, std::size_t offset,
                    const std::vector<int>& new_degrees)
    {
        std::vector<Monomial> terms;
        terms.reserve(p.term_count());
        for (const Monomial& m : p.terms()) {
            std::vector<std::uint16_t> e(new_width, 0);
            int deg = 0;
            for (std::size_t g = 0; g < m.width(); ++g) {
                e[offset + g] = m.exp(g);
                deg += static_cast<int>(m.exp(g)) * new_degrees[offset + g];
            }
            terms.emplace_back(std::move(e), deg);
        }
        return Poly::from_terms(std::move(terms));
    }

}  // namespace

KunnethProduct kunneth_product(const Presentation& a, const Presentation& b)
{
    KunnethProduct out;
    std::vector<Generator> gens = a.generators();

    std::map<std::string, bool> taken;
    for (const auto& g : gens)
        taken[g.name] = true;

    for (const auto& g : b.generators()) {
        std::string name = g.name;
        int suffix = 0;
        while (taken.count(name)) {
            ++suffix;
            name = g.name + "_" + std::to_string(suffix);
        }
        if (name != g.name)
            out.renames.emplace_back(g.name, name);
        taken[name] = true;
        gens.push_back({std::move(name), g.degree});
    }

    std::size_t na = a.gen_count();
    std::size_t width = gens.size();
    std::vector<int> degrees;
    for (const auto& g : gens)
        degrees.push_back(g.degree);

    std::vector<Poly> relations;
    for (const Poly& r : a.relations())
        relations.push_back(remap_poly(r, width, 0, degrees));
    for (const Poly& r : b.relations())
        relations.push_back(remap_poly(r, width, na, degrees));

    std::map<std::pair<int, int>, Poly> table;
    for (const auto& [key, value] : a.sq_table())
        table.emplace(key, remap_poly(value, width, 0, degrees));
    for (const auto& [key, value] : b.sq_table())
        table.emplace(std::make_pair(key.first + static_cast<int>(na), key.second),
                      remap_poly(value, width, na, degrees));

    out.pres = Presentation(std::move(gens), std::move(relations), std::move(table));
    return out;
}

Presentation quotient_by_ideal(const Presentation& a, const std::vector<Poly>& ideal_gens)
{
    std::vector<Poly> relations = a.relations();
    for (const Poly& p : ideal_gens) {
        if (!p.is_zero() && !p.homogeneous())
            throw HomogeneityError("ideal generator must be homogeneous");
        relations.push_back(p);
    }
    return Presentation(a.generators(), std::move(relations),
                        std::map<std::pair<int, int>, Poly>(a.sq_table()));
}

}  // namespace f2alg
