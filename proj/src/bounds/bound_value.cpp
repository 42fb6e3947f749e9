#include "lcsb/bounds/bound_value.hpp"

#include "lcsb/bounds/lower.hpp"
#include "lcsb/bounds/upper.hpp"
#include "lcsb/error.hpp"

#include <cmath>

namespace lcsb {

std::vector<BoundValue> evaluate_bounds(const BoundRequest& req) {
    require(req.p > 0.0 && req.p < 1.0, "p must lie strictly between 0 and 1");
    std::vector<BoundValue> out;
    auto add = [&](std::string name, std::vector<std::pair<std::string, double>> inputs,
                   double value, std::string anchor) {
        if (!std::isfinite(value)) throw NumericGuardError("non-finite value for " + name);
        out.push_back({std::move(name), std::move(inputs), value, std::move(anchor)});
    };

    for (double r : req.r_values) {
        if (r >= 2.0) {
            add("C", {{"r", r}, {"K", req.K}}, upper_C(r, req.K),
                "central-moment upper bound via tail integration");
        }
        add("D", {{"r", r}, {"K", req.K}}, upper_D(r, req.K),
            "central-moment upper bound integrated from zero");
        if (r >= 2.0) {
            add("E", {{"r", r}, {"p", req.p}}, upper_E(r, req.p),
                "central-moment upper bound via tensorisation");
        }
    }
    add("b", {{"p", req.p}}, b_const(req.p), "local-limit constant of the zero count");

    if (req.eps0) {
        const double e0 = *req.eps0;
        for (double r : req.r_values) {
            if (r < 1.0) continue;
            std::vector<std::pair<std::string, double>> in{{"r", r}, {"eps0", e0}, {"p", req.p}};
            add("d1", in, lower_d1(r, e0, req.p), "moment lower bound, integral comparison");
            add("d2", in, lower_d2(r, e0, req.p), "moment lower bound, Gaussian limit");
            add("d3", in, lower_d3(r, e0, req.p), "moment lower bound, uniform approximation");
            add("d4", in, lower_d4(r, e0, req.p),
                "moment lower bound, refined uniform approximation");
        }
        add("lambda", {{"eps0", e0}, {"p", req.p}}, lambda_const(e0, req.p),
            "constant of the conditional MGF lower bound");
        for (double s : req.s_values) {
            add("mgf_lower_limit", {{"s", s}, {"eps0", e0}, {"p", req.p}},
                mgf_lower_limit(s, e0, req.p), "limiting MGF lower bound of the scaled score");
        }
    }
    for (double s : req.s_values) {
        const MgfUpper u = upper_mgf(s);
        add("mgf_upper_erf", {{"t", s}}, u.erf_form, "MGF upper bound with error function");
        add("mgf_upper_loose", {{"t", s}}, u.loose_form, "MGF upper bound, simplified");
    }
    if (req.n) {
        add("phi_floor_extended",
            {{"n", static_cast<double>(*req.n)}, {"p", req.p}, {"beta", req.beta},
             {"epsilon", req.epsilon}},
            phi_floor_extended(*req.n, req.p, req.beta, req.epsilon),
            "probability floor on the extended zero-count window");
    }
    return out;
}

}  // namespace lcsb
