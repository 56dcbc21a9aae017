#pragma once

#include <cstdint>

#include "wpcrs/model.hpp"
#include "wpcrs/quadrature.hpp"

namespace wpcrs {

/// One realization of the three Rayleigh-faded link power gains.
struct ChannelDraw {
    double gamma_sr;
    double gamma_sd;
    double gamma_rd;
};

/// Splittable counter-style generator: the (seed, stream_index) pair fully
/// determines the sequence on every platform, so per-trial substreams can
/// be evaluated on any number of threads without changing the output.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_index = 0);

    std::uint64_t next_u64();

    /// Uniform on (0, 1].
    double next_unit();

    /// Exponential with the given mean.
    double next_exponential(double mean);

private:
    std::uint64_t state_;
    std::uint64_t increment_;
};

/// Draws the three link gains; each gamma_k is exponential with mean
/// sigma_k^2, which is the distribution of |CN(0, sigma_k^2)|^2.
ChannelDraw sample_draw(const SystemParams& params, RngStream& rng);

/// Density of Y = min{gamma_sr, gamma_sd}.
double pdf_y(double y, const SystemParams& params);

/// Distribution of W = min{p*alpha, upsilon*gamma_rd}: a point mass at
/// w = p*alpha plus a truncated exponential density below it. The impulse
/// is kept symbolic as a mass so downstream integrals can treat it exactly.
struct WDensity {
    double atom_mass;  // probability that W == p*alpha
    double density;    // continuous density at the queried w
};
WDensity pdf_w(double w, const SystemParams& params, const PowerBudget& budget);

/// Density of Z = gamma_sr * W at z > 0: a closed-form term from the atom
/// of W plus an inner integral over w in (0, p*alpha], evaluated with
/// adaptive panels at a tolerance well under quad.rel_tol.
double pdf_z(double z, const SystemParams& params, const PowerBudget& budget,
             const QuadratureSpec& quad = {});

}  // namespace wpcrs
