#include "wpcrs/model.hpp"

#include <cstdio>

namespace wpcrs {

EhProtocol EhProtocol::power_sharing(double rho) {
    if (!(rho > 0.0 && rho < 1.0))
        throw std::domain_error("EhProtocol: rho must lie in (0,1), got " +
                                std::to_string(rho));
    return EhProtocol(Kind::PowerSharing, rho);
}

EhProtocol EhProtocol::time_sharing(double xi) {
    if (!(xi > 0.0 && xi < 1.0))
        throw std::domain_error("EhProtocol: xi must lie in (0,1), got " +
                                std::to_string(xi));
    return EhProtocol(Kind::TimeSharing, xi);
}

double EhProtocol::rho() const {
    if (kind_ != Kind::PowerSharing)
        throw std::logic_error("EhProtocol: rho is only defined for PS");
    return param_;
}

double EhProtocol::xi() const {
    if (kind_ != Kind::TimeSharing)
        throw std::logic_error("EhProtocol: xi is only defined for TS");
    return param_;
}

std::string EhProtocol::label() const {
    char buf[48];
    switch (kind_) {
        case Kind::PowerSharing:
            std::snprintf(buf, sizeof buf, "PS(rho=%g)", param_);
            return buf;
        case Kind::TimeSharing:
            std::snprintf(buf, sizeof buf, "TS(xi=%g)", param_);
            return buf;
        case Kind::Ideal:
            return "Ideal";
        case Kind::Benchmark:
            return "Benchmark";
    }
    return "?";
}

void SystemParams::validate() const {
    if (!(sigma2_sr > 0.0 && sigma2_sd > 0.0 && sigma2_rd > 0.0))
        throw std::domain_error("SystemParams: channel variances must be positive");
    if (!(alpha > 0.0 && alpha < 0.5))
        throw std::domain_error("SystemParams: alpha must lie in (0, 0.5)");
    if (!(eta > 0.0 && eta <= 1.0))
        throw std::domain_error("SystemParams: eta must lie in (0, 1]");
    if (!(snr_total > 0.0))
        throw std::domain_error("SystemParams: snr_total must be positive");
    if (!(frame_duration > 0.0))
        throw std::domain_error("SystemParams: frame_duration must be positive");
}

double source_power(const EhProtocol& protocol, double p_t) {
    switch (protocol.kind()) {
        case EhProtocol::Kind::PowerSharing:
        case EhProtocol::Kind::Ideal:
            return 2.0 * p_t;
        case EhProtocol::Kind::TimeSharing:
            return 2.0 * p_t / (1.0 + protocol.xi());
        case EhProtocol::Kind::Benchmark:
            return p_t;
    }
    return 0.0;
}

double relay_power(const EhProtocol& protocol, double p_s, double gamma_sr,
                   double eta) {
    switch (protocol.kind()) {
        case EhProtocol::Kind::PowerSharing:
            return eta * protocol.rho() * p_s * gamma_sr;
        case EhProtocol::Kind::TimeSharing:
            return 2.0 * eta * (protocol.xi() / (1.0 - protocol.xi())) * p_s * gamma_sr;
        case EhProtocol::Kind::Ideal:
            return eta * p_s * gamma_sr;
        case EhProtocol::Kind::Benchmark:
            return p_s;  // grid powered, independent of gamma_sr
    }
    return 0.0;
}

PowerBudget power_budget(const SystemParams& params) {
    params.validate();
    PowerBudget b;
    b.p_source = source_power(params.protocol, params.snr_total);
    switch (params.protocol.kind()) {
        case EhProtocol::Kind::PowerSharing:
            b.p_factor = 1.0 - params.protocol.rho();
            b.zeta = 0.5;
            b.upsilon = params.eta * params.protocol.rho();
            break;
        case EhProtocol::Kind::TimeSharing: {
            const double xi = params.protocol.xi();
            b.p_factor = 1.0;
            b.zeta = (1.0 - xi) / 2.0;
            b.upsilon = 2.0 * params.eta * xi / (1.0 - xi);
            break;
        }
        case EhProtocol::Kind::Ideal:
            b.p_factor = 1.0;
            b.zeta = 0.5;
            b.upsilon = params.eta;
            break;
        case EhProtocol::Kind::Benchmark:
            b.p_factor = 1.0;
            b.zeta = 0.5;
            b.upsilon = std::nullopt;
            break;
    }
    return b;
}

double frame_energy(const EhProtocol& protocol, double p_t, double t) {
    const double p_s = source_power(protocol, p_t);
    switch (protocol.kind()) {
        case EhProtocol::Kind::PowerSharing:
        case EhProtocol::Kind::Ideal:
            return p_s * t / 2.0;
        case EhProtocol::Kind::TimeSharing:
            return p_s * (1.0 + protocol.xi()) * t / 2.0;
        case EhProtocol::Kind::Benchmark:
            return p_s * t / 2.0 + p_t * t / 2.0;
    }
    return 0.0;
}

}  // namespace wpcrs
