#pragma once

#include <cmath>
#include <stdexcept>

namespace sevo {

// Parameters of the coupled system
//   u_tt + (-Delta)^sigma u + (-Delta)^sigma u_t = |v|^p
//   v_tt + (-Delta)^sigma v +              v_t   = |u|^q.
// dim is real-valued so the exponent formulas can be evaluated off the
// integer-dimension axis; simulations require an integer dim in {1,2,3}.
struct ModelParams {
    double sigma = 1.5;
    double dim = 2.0;
    double p = 2.0;
    double q = 2.0;
    double eps_slack = 0.01;  // the arbitrarily small decay-slack epsilon

    void validate() const {
        if (!(sigma > 0.0)) throw std::invalid_argument("params: sigma must be > 0");
        if (!(dim > 0.0)) throw std::invalid_argument("params: dim must be > 0");
        if (!(p > 1.0) || !(q > 1.0)) throw std::invalid_argument("params: p, q must be > 1");
        if (!(eps_slack > 0.0)) throw std::invalid_argument("params: eps_slack must be > 0");
    }

    int int_dim() const {
        const int n = static_cast<int>(std::lround(dim));
        if (std::abs(dim - n) > 1e-12 || n < 1 || n > 3)
            throw std::invalid_argument("params: simulation requires integer dim in {1,2,3}");
        return n;
    }

    // Holder conjugates p' = p/(p-1), q' = q/(q-1).
    double p_conj() const { return p / (p - 1.0); }
    double q_conj() const { return q / (q - 1.0); }
};

}  // namespace sevo
