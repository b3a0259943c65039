#pragma once

#include <json.hpp>

#include "radford/classify.hpp"

namespace radford {

using ordered_json = nlohmann::ordered_json;

// Scalars are encoded exactly: the coefficient array of the reduced
// polynomial in zeta_N, each rational as [numerator, denominator] strings.
inline ordered_json scalar_to_json(const Cyc& c) {
    ordered_json arr = ordered_json::array();
    for (const auto& q : c.coeffs())
        arr.push_back({q.get_num().get_str(), q.get_den().get_str()});
    return arr;
}

inline ordered_json matrix_to_json(const CycMat& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline ordered_json fdhopf_to_json(const FDHopf& H) {
    ordered_json j;
    j["dim"] = H.dim;
    j["basis"] = H.labels;
    ordered_json mult = ordered_json::array();
    for (int a = 0; a < H.dim; ++a)
        for (int b = 0; b < H.dim; ++b)
            for (const auto& [k, c] : H.basis_product(a, b))
                mult.push_back({a, b, k, scalar_to_json(c)});
    j["mult"] = std::move(mult);
    ordered_json comult = ordered_json::array();
    for (int a = 0; a < H.dim; ++a)
        for (const auto& [t, c] : H.comult[static_cast<std::size_t>(a)])
            comult.push_back({a, t / H.dim, t % H.dim, scalar_to_json(c)});
    j["comult"] = std::move(comult);
    ordered_json antipode = ordered_json::array();
    for (int a = 0; a < H.dim; ++a)
        for (int r = 0; r < H.dim; ++r)
            if (!H.antipode.at(r, a).is_zero())
                antipode.push_back({a, r, scalar_to_json(H.antipode.at(r, a))});
    j["antipode"] = std::move(antipode);
    j["field_order"] = H.field_order;
    return j;
}

inline ordered_json dmodule_to_json(const DModule& M) {
    ordered_json j;
    j["n"] = M.n;
    j["m"] = M.m;
    j["dim"] = M.dim;
    j["field_order"] = M.N;
    if (M.label) j["label"] = {M.label->first, M.label->second};
    j["act_g"] = matrix_to_json(M.act_g);
    j["act_x"] = matrix_to_json(M.act_x);
    j["act_X"] = matrix_to_json(M.act_X);
    j["act_A"] = matrix_to_json(M.act_A);
    return j;
}

inline ordered_json ydmodule_to_json(const YDModule& Y) {
    ordered_json j;
    j["host"] = Y.kind == HostKind::DualRadford ? "dual_radford"
                : Y.kind == HostKind::Radford   ? "radford"
                                                : "taft";
    j["n"] = Y.n;
    j["m"] = Y.m;
    j["dim"] = Y.dim;
    j["field_order"] = Y.N;
    j["act_grouplike"] = matrix_to_json(Y.act_grp);
    j["act_nilpotent"] = matrix_to_json(Y.act_nil);
    ordered_json coact = ordered_json::array();
    for (int t = 0; t < Y.dim; ++t)
        for (const auto& [p, c, s] : Y.coaction[static_cast<std::size_t>(t)])
            coact.push_back({t, p, s, scalar_to_json(c)});
    j["coaction"] = std::move(coact);
    return j;
}

inline ordered_json graded_dims_to_json(const GradedDims& g) {
    ordered_json j;
    j["dims"] = g.dims;
    j["truncated"] = g.truncated;
    return j;
}

inline ordered_json finite_result_to_json(const FiniteResult& r) {
    ordered_json j;
    j["i"] = r.i;
    j["j"] = r.j;
    j["dim_module"] = r.dim_module;
    j["diagram"] = {{"q11", r.diagram.q11_exp}, {"edge", r.diagram.edge_exp}, {"q22", r.diagram.q22_exp}};
    j["finite"] = r.finite;
    j["certificate"] = r.certificate;
    j["probe"] = r.probe == 0 ? "truncated" : r.probe == 1 ? "no-truncation" : "budget-exhausted";
    j["probe_dims"] = r.probe_dims;
    return j;
}

}  // namespace radford
