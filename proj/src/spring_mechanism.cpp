#include <vsa/spring_mechanism.hpp>

#include <cmath>
#include <numbers>

namespace vsa::spring {

namespace {

void throw_if_any(const std::vector<std::string>& violations,
                  const char* where) {
    if (violations.empty()) return;
    std::string msg = std::string(where) + ": invalid parameters:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw std::invalid_argument(msg);
}

}  // namespace

double SpringBankParams::second_moment() const {
    return vsa::spring::second_moment(width, thickness);
}

void SpringBankParams::collect_violations(std::vector<std::string>& out) const {
    if (!(youngs_modulus > 0.0))
        out.push_back("spring.E: Young's modulus must be positive");
    if (!(width > 0.0)) out.push_back("spring.b: width must be positive");
    if (!(thickness > 0.0))
        out.push_back("spring.t: thickness must be positive");
    if (!(free_length > 0.0))
        out.push_back("spring.L: free length must be positive");
    if (count < 1) out.push_back("spring.n: spring count must be at least 1");
    if (thickness > 0.0 && width > 0.0 && thickness > width)
        out.push_back("spring.t: thickness exceeds width (thin-leaf assumption)");
}

void SpringBankParams::validate() const {
    std::vector<std::string> violations;
    collect_violations(violations);
    throw_if_any(violations, "SpringBankParams");
}

void ScrewParams::collect_violations(std::vector<std::string>& out,
                                     double spring_free_length) const {
    if (!(lead > 0.0)) out.push_back("screw.lead: lead must be positive");
    if (!(x_min > 0.0))
        out.push_back(
            "screw.x_min: lower travel stop must be positive; the roller "
            "cannot reach the fixed end");
    if (!(x_min < x_max))
        out.push_back("screw.x_min/x_max: travel range must satisfy x_min < x_max");
    if (!(x_max <= spring_free_length))
        out.push_back("screw.x_max: upper travel stop exceeds spring free length");
    if (!(x_ref >= x_min) || !(x_ref <= x_max))
        out.push_back("screw.x_ref: reference position outside travel range");
    if (!(efficiency > 0.0) || !(efficiency <= 1.0))
        out.push_back("screw.efficiency: must be in (0, 1]");
}

void ScrewParams::validate(double spring_free_length) const {
    std::vector<std::string> violations;
    collect_violations(violations, spring_free_length);
    throw_if_any(violations, "ScrewParams");
}

void MechanismInput::collect_violations(std::vector<std::string>& out,
                                        const ScrewParams& screw) const {
    if (!(std::abs(deflection) < std::numbers::pi / 2.0))
        out.push_back("input.q_d: deflection magnitude must be below pi/2");
    if (!(roller_pos >= screw.x_min) || !(roller_pos <= screw.x_max))
        out.push_back("input.x_r: roller position outside travel range");
}

void MechanismInput::validate(const ScrewParams& screw) const {
    std::vector<std::string> violations;
    collect_violations(violations, screw);
    throw_if_any(violations, "MechanismInput");
}

}  // namespace vsa::spring
