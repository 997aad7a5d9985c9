// Bundled algebra models and the product/quotient constructions used to
// assemble the classifying-space computations.
#ifndef F2ALG_SPACES_HPP
#define F2ALG_SPACES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "f2alg/presentation.hpp"

namespace f2alg {

enum class ModelId { BPU4, BS1, P1, P1x4 };

const std::vector<ModelId>& all_models();
std::string_view model_name(ModelId id);
std::optional<ModelId> find_model(std::string_view name);

// Verbatim presentation text bundled with the artifact.
std::string_view model_text(ModelId id);
// Throws UnknownModelError for names that resolve to no model.
Presentation bundled_model(ModelId id);
Presentation bundled_model(std::string_view name);

struct KunnethProduct {
    Presentation pres;
    // (original name in b, renamed-to) for every collision with a.
    std::vector<std::pair<std::string, std::string>> renames;
};

// Tensor-product presentation: generators, relations and Steenrod tables of
// both factors side by side (the Cartan formula covers mixed products).
// Colliding generator names from b are renamed with a numeric suffix.
KunnethProduct kunneth_product(const Presentation& a, const Presentation& b);

// Presentation of a / (ideal_gens): the relation list extended by the ideal
// generators, which must be homogeneous.
Presentation quotient_by_ideal(const Presentation& a, const std::vector<Poly>& ideal_gens);

}  // namespace f2alg

#endif
