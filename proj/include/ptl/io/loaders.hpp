#pragma once

#include <string>
#include <vector>

#include "ptl/canonbs/bs.hpp"
#include "ptl/canonbs/reduce.hpp"
#include "ptl/cycalg/cyclic.hpp"
#include "ptl/io/fixtures.hpp"

namespace ptl {

// norm/<name>.json: field, sigma images, base_depth, a.
inline CyclicAlgebraSpec<Rationals> load_cyclic_algebra(FixtureBundle& fx, const json& j) {
    auto L = fx.field(j.at("field").get<std::string>());
    std::vector<Element<Rationals>> im;
    for (auto& s : j.at("sigma")) im.push_back(parse_element(L, s.get<std::string>()));
    CyclicAlgebraSpec<Rationals> A{L, GaloisMap<Rationals>(L, im, 3, "sigma"), j.value("base_depth", std::size_t{0}),
                                   parse_element(L, j.at("a").get<std::string>()), j.value("anchor", std::string())};
    A.validate();
    return A;
}

inline BsInputs<Rationals> load_bs_inputs(FixtureBundle& fx, const std::string& phi_name = "phi10") {
    auto doc = fx.matrix_doc(phi_name);
    BsInputs<Rationals> in;
    in.L = fx.field(doc.at("field").get<std::string>());
    if (in.L->depth() < 2) throw FixtureError("splitting field needs zeta3 below the cube root");
    in.zeta = in.L->generator(1);
    in.phi = fx.matrix(phi_name);
    auto k = in.L->parent();
    auto eqs = fx.equations("bs_printed");
    std::size_t i = 0;
    for (auto& e : eqs.at("equations")) {
        in.printed.push_back(parse_equation(k, p9_vars(), e.get<std::string>()));
        in.printed_labels.push_back("P" + std::to_string(++i));
    }
    auto extra = fx.equations("twist_extra_printed");
    in.printed_extra = parse_equation(k, p9_vars(), extra.at("equation").get<std::string>());
    return in;
}

inline HasseInputs load_hasse_inputs(FixtureBundle& fx) {
    HasseInputs in;
    auto phi = fx.matrix_doc("eta_phi");
    for (auto& r : phi.at("rows")) in.phi_rows.push_back(r.get<std::vector<std::string>>());
    in.printed_model = fx.equations("hasse_model_printed").at("form").get<std::string>();
    for (auto n : {"R", "T", "U"}) in.group_maps.push_back(fx.matrix_doc(n).at("map").get<std::string>());
    return in;
}

}  // namespace ptl
