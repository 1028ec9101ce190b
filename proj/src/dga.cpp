#include "ndga/dga.hpp"

namespace ndga {

Dga ground_field_dga() {
    auto pres = std::make_shared<const Presentation>();
    return Dga{pres, Derivation(pres, 1), 1};
}

Dga tensor_dga(const Dga& A, const Dga& B) {
    const Presentation& a = *A.pres;
    const Presentation& b = *B.pres;
    auto clash = [&](const GVar& v) {
        if (a.is_known(v)) throw InvalidArgument("namespace collision on " + v.name());
    };
    for (const GVar& v : b.generators()) clash(v);
    for (const auto& kv : b.substitutions()) clash(kv.first);

    Presentation merged;
    for (const GVar& v : a.generators()) merged.add_generator(v);
    for (const GVar& v : b.generators()) merged.add_generator(v);
    for (const auto& [v, img] : a.substitutions()) merged.add_substitution(v, img);
    for (const auto& [v, img] : b.substitutions()) merged.add_substitution(v, img);
    for (const auto& [v, w] : a.annihilators()) merged.add_annihilator(v, w);
    for (const auto& [v, w] : b.annihilators()) merged.add_annihilator(v, w);
    for (const auto& r : a.residual_relations()) merged.add_residual_relation(r);
    for (const auto& r : b.residual_relations()) merged.add_residual_relation(r);

    auto pres = std::make_shared<const Presentation>(std::move(merged));
    if (A.d.degree() != B.d.degree() && !A.d.is_zero() && !B.d.is_zero())
        throw InvalidArgument("tensor factors carry differentials of different degree");
    Derivation d(pres, A.d.is_zero() ? B.d.degree() : A.d.degree());
    for (const auto& [g, img] : A.d.images()) d.set_image(g, img);
    for (const auto& [g, img] : B.d.images()) d.set_image(g, img);
    return Dga{pres, d, A.claimed_order + B.claimed_order - 1};
}

}  // namespace ndga
