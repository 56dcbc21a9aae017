#include "wpcrs/channel.hpp"

#include <algorithm>
#include <cmath>

namespace wpcrs {

namespace {

// Finalizer from SplitMix64; bijective scrambler of a 64-bit word.
std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : state_(mix64(seed + kGolden) ^ mix64(stream_index * kGolden + 1)),
      // distinct odd increment per stream gives disjoint sequences rather
      // than offsets into a shared one
      increment_(mix64(stream_index ^ (seed * kGolden)) | 1ULL) {}

std::uint64_t RngStream::next_u64() {
    std::uint64_t z = (state_ += increment_);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double RngStream::next_unit() {
    // 53 random bits mapped to (0, 1]; never 0, so log() below is safe.
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double RngStream::next_exponential(double mean) {
    return -mean * std::log(next_unit());
}

ChannelDraw sample_draw(const SystemParams& params, RngStream& rng) {
    ChannelDraw d;
    d.gamma_sr = rng.next_exponential(params.sigma2_sr);
    d.gamma_sd = rng.next_exponential(params.sigma2_sd);
    d.gamma_rd = rng.next_exponential(params.sigma2_rd);
    return d;
}

double pdf_y(double y, const SystemParams& params) {
    if (y < 0.0) throw std::domain_error("pdf_y: y must be nonnegative");
    const double rate = 1.0 / params.sigma2_sr + 1.0 / params.sigma2_sd;
    return rate * std::exp(-y * rate);
}

WDensity pdf_w(double w, const SystemParams& params, const PowerBudget& budget) {
    if (w < 0.0) throw std::domain_error("pdf_w: w must be nonnegative");
    if (!budget.upsilon)
        throw UnsupportedProtocol("pdf_w: benchmark has no harvested-power distribution");
    const double cap = params.alpha * budget.p_factor;  // p*alpha
    const double scale = *budget.upsilon * params.sigma2_rd;
    WDensity d;
    d.atom_mass = std::exp(-cap / scale);
    d.density = (w < cap) ? std::exp(-w / scale) / scale : 0.0;
    return d;
}

double pdf_z(double z, const SystemParams& params, const PowerBudget& budget,
             const QuadratureSpec& quad) {
    if (!(z > 0.0)) throw std::domain_error("pdf_z: z must be positive");
    if (!budget.upsilon)
        throw UnsupportedProtocol("pdf_z: benchmark has no harvested-power distribution");
    quad.validate();

    const double cap = params.alpha * budget.p_factor;  // p*alpha
    const double scale = *budget.upsilon * params.sigma2_rd;
    const double s_sr = params.sigma2_sr;

    const double atom_term =
        std::exp(-z / (cap * s_sr) - cap / scale) / (cap * s_sr);

    // The integrand vanishes superexponentially as w -> 0+ for z > 0; a
    // tiny cutoff keeps the 1/w factor away from w = 0 itself.
    const double eps = 1e-12 * cap;
    const double norm = scale * s_sr;
    auto integrand = [&](double w) {
        return std::exp(-z / (s_sr * w) - w / scale) / (norm * w);
    };
    const double inner =
        integrate_adaptive(integrand, eps, cap, 0.01 * quad.rel_tol,
                           quad.max_panels);
    return atom_term + inner;
}

}  // namespace wpcrs
