#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace wpcrs {

/// Converts a decibel quantity to linear scale (10^(dB/10)).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

/// Thrown when an operation is asked about a protocol it is not defined
/// for (the no-EH benchmark has no harvested-power distribution).
struct UnsupportedProtocol : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Energy-harvesting protocol selector. PowerSharing carries the power
/// split factor rho, TimeSharing the frame split factor xi; both must lie
/// strictly inside (0,1) because either endpoint makes one link power
/// degenerate (and xi = 1 divides the relay-power expression by zero).
class EhProtocol {
public:
    enum class Kind { PowerSharing, TimeSharing, Ideal, Benchmark };

    static EhProtocol power_sharing(double rho);
    static EhProtocol time_sharing(double xi);
    static EhProtocol ideal() { return EhProtocol(Kind::Ideal, 0.0); }
    static EhProtocol benchmark() { return EhProtocol(Kind::Benchmark, 0.0); }

    Kind kind() const { return kind_; }
    bool is_benchmark() const { return kind_ == Kind::Benchmark; }

    double rho() const;  // PowerSharing only
    double xi() const;   // TimeSharing only

    /// Short display label, e.g. "PS(rho=0.1)" or "Benchmark".
    std::string label() const;

    friend bool operator==(const EhProtocol&, const EhProtocol&) = default;

private:
    EhProtocol(Kind kind, double param) : kind_(kind), param_(param) {}

    Kind kind_;
    double param_;
};

/// Scenario constants. All powers and channel variances are linear scale;
/// dB-to-linear conversion happens once, at config parse time. N0 is
/// normalised to 1, so snr_total plays the role of Pt.
struct SystemParams {
    double sigma2_sr = 1.0;    // mean power gain of the S-R link
    double sigma2_sd = 1.0;    // mean power gain of the S-D link
    double sigma2_rd = 1.0;    // mean power gain of the R-D link
    double alpha = 0.2;        // NOMA power allocation coefficient, in (0, 0.5)
    double eta = 0.95;         // energy conversion coefficient, in (0, 1]
    double snr_total = 100.0;  // Pt/N0, linear
    EhProtocol protocol = EhProtocol::ideal();
    double frame_duration = 1.0;  // total frame time T; cancels everywhere
                                  // except the energy-conservation identity

    /// Throws std::domain_error when any field is outside its domain.
    void validate() const;
};

/// Per-protocol power arithmetic, assembled once per scenario.
struct PowerBudget {
    double p_source;  // source transmit power Ps, units of Pt (so of N0)
    double p_factor;  // information power factor p: 1-rho in PS, else 1
    double zeta;      // rate prefactor: 1/2, or (1-xi)/2 in TS
    std::optional<double> upsilon;  // harvested-power coefficient in
                                    // W = min{p*alpha, upsilon*gamma_rd};
                                    // absent for the benchmark
};

/// Source transmit power for a total power budget p_t.
double source_power(const EhProtocol& protocol, double p_t);

/// Relay transmit power given the source power and the instantaneous S-R
/// gain. For the benchmark the relay runs from its own grid power and the
/// caller passes that constant through p_s.
double relay_power(const EhProtocol& protocol, double p_s, double gamma_sr,
                   double eta);

/// Assembles the power budget for a validated scenario.
PowerBudget power_budget(const SystemParams& params);

/// Total source-side energy spent per frame of duration t. Equals
/// p_t * t for every protocol; the benchmark counts both the source and
/// the grid-powered relay half-frames.
double frame_energy(const EhProtocol& protocol, double p_t, double t);

}  // namespace wpcrs
