// Closed-form model of the leaf-spring stiffness modulation mechanism.
//
// All quantities derive from a single elastic potential U(q_d, x_r), so the
// output torque and the screw-reflected reaction are exact partial
// derivatives of one another's antiderivative. The dynamics module relies on
// this for its energy audits.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsa::spring {

/// Geometry and material of the bank of n identical parallel leaf springs.
struct SpringBankParams {
    double youngs_modulus = 200e9;  ///< E [Pa]
    double width = 0.015;           ///< b [m]
    double thickness = 0.0015;      ///< t [m]
    double free_length = 0.08;      ///< L [m]
    int count = 8;                  ///< n, springs in parallel

    /// Second moment of area of one leaf, b*t^3/12 [m^4]. Always recomputed.
    double second_moment() const;

    /// E*I of one leaf [N*m^2].
    double flexural_rigidity() const { return youngs_modulus * second_moment(); }

    /// 3*n*E*I, the stiffness scale of the whole bank [N*m^2].
    double bank_rigidity() const { return 3.0 * count * flexural_rigidity(); }

    void collect_violations(std::vector<std::string>& out) const;
    void validate() const;
};

/// Ball-screw transmission between motor 2 and the roller carriage.
struct ScrewParams {
    double lead = 0.002;      ///< carriage travel per revolution [m/rev]
    double x_min = 0.01;      ///< roller travel lower stop [m], > 0 by design
    double x_max = 0.08;      ///< roller travel upper stop [m]
    double x_ref = 0.08;      ///< roller position at q_m2 = 0 [m]
    double efficiency = 1.0;  ///< mechanical efficiency, (0, 1]

    /// Carriage travel per radian of motor 2, lead/(2*pi) [m/rad].
    double travel_per_rad() const { return lead / (2.0 * std::numbers::pi); }

    /// spring_free_length bounds x_max; pass the associated bank's L.
    void collect_violations(std::vector<std::string>& out,
                            double spring_free_length) const;
    void validate(double spring_free_length) const;
};

/// Deflection/roller input pair with its admissibility rules.
struct MechanismInput {
    double deflection = 0.0;   ///< q_d = q_m1 - q_l [rad]
    double roller_pos = 0.0;   ///< x_r [m]

    void collect_violations(std::vector<std::string>& out,
                            const ScrewParams& screw) const;
    void validate(const ScrewParams& screw) const;
};

/// b*t^3/12 for a rectangular leaf section [m^4].
inline double second_moment(double width, double thickness) {
    if (!(width > 0.0) || !(thickness > 0.0)) {
        throw std::invalid_argument(
            "second_moment: width and thickness must be positive");
    }
    return width * thickness * thickness * thickness / 12.0;
}

namespace detail {
inline void check_deflection_domain(double deflection) {
    if (!(std::abs(deflection) < std::numbers::pi / 2.0)) {
        throw std::domain_error(
            "spring mechanism: |q_d| must be below pi/2, got " +
            std::to_string(deflection));
    }
}
inline void check_roller_domain(double roller_pos) {
    if (!(roller_pos > 0.0)) {
        throw std::domain_error(
            "spring mechanism: roller position must be positive, got " +
            std::to_string(roller_pos));
    }
}
}  // namespace detail

template <typename Scalar>
struct ContactGeometry {
    Scalar horizontal;  ///< a, horizontal coordinate of the contact [m]
    Scalar lateral;     ///< delta, imposed lateral deflection [m], signed
};

/// Contact point of a roller riding at radius x_r on the deflecting body:
/// a = x_r*cos(q_d), delta = x_r*sin(q_d).
template <typename Scalar>
ContactGeometry<Scalar> contact_kinematics(Scalar deflection, Scalar roller_pos) {
    using std::cos;
    using std::sin;
    detail::check_deflection_domain(static_cast<double>(deflection));
    detail::check_roller_domain(static_cast<double>(roller_pos));
    return {roller_pos * cos(deflection), roller_pos * sin(deflection)};
}

/// Stored elastic energy of the whole bank [J].
/// U = (3nEI/2) * sin^2(q_d) / (x_r * cos^3(q_d)); zero iff q_d = 0.
template <typename Scalar>
Scalar potential_energy(Scalar deflection, Scalar roller_pos,
                        const SpringBankParams& params) {
    using std::cos;
    using std::sin;
    detail::check_deflection_domain(static_cast<double>(deflection));
    detail::check_roller_domain(static_cast<double>(roller_pos));
    const Scalar s = sin(deflection);
    const Scalar c = cos(deflection);
    return Scalar(0.5 * params.bank_rigidity()) * s * s / (roller_pos * c * c * c);
}

/// Output spring torque tau_s = dU/dq_d [N*m]. Odd in q_d, zero at q_d = 0.
template <typename Scalar>
Scalar spring_torque(Scalar deflection, Scalar roller_pos,
                     const SpringBankParams& params) {
    using std::cos;
    using std::sin;
    detail::check_deflection_domain(static_cast<double>(deflection));
    detail::check_roller_domain(static_cast<double>(roller_pos));
    const Scalar s = sin(deflection);
    const Scalar c = cos(deflection);
    const Scalar c2 = c * c;
    return Scalar(0.5 * params.bank_rigidity()) / roller_pos * s *
           (Scalar(2) + s * s) / (c2 * c2);
}

/// Tangent joint stiffness k = dtau_s/dq_d [N*m/rad].
/// Reduces to 3nEI/x_r at q_d = 0; strictly decreasing in x_r.
template <typename Scalar>
Scalar joint_stiffness(Scalar deflection, Scalar roller_pos,
                       const SpringBankParams& params) {
    using std::cos;
    using std::sin;
    detail::check_deflection_domain(static_cast<double>(deflection));
    detail::check_roller_domain(static_cast<double>(roller_pos));
    const Scalar s = sin(deflection);
    const Scalar c = cos(deflection);
    const Scalar s2 = s * s;
    const Scalar c2 = c * c;
    return Scalar(0.5 * params.bank_rigidity()) / roller_pos *
           (Scalar(2) * c2 + Scalar(3) * s2 * c2 + Scalar(8) * s2 +
            Scalar(4) * s2 * s2) /
           (c2 * c2 * c);
}

struct ScrewReaction {
    double axial_force;   ///< Q_x = -dU/dx_r >= 0, pushes toward larger x_r [N]
    double motor_torque;  ///< tau_s^d on the motor-2 axis [N*m], <= 0
};

/// Spring reaction reflected through the screw onto motor 2.
/// tau_s^d = -(lead/2pi) * Q_x / efficiency; zero exactly at q_d = 0.
inline ScrewReaction screw_reaction(double deflection, double roller_pos,
                                    const SpringBankParams& params,
                                    const ScrewParams& screw) {
    detail::check_deflection_domain(deflection);
    detail::check_roller_domain(roller_pos);
    const double s = std::sin(deflection);
    const double c = std::cos(deflection);
    const double axial = 0.5 * params.bank_rigidity() * s * s /
                         (c * c * c * roller_pos * roller_pos);
    return {axial, -screw.travel_per_rad() * axial / screw.efficiency};
}

struct RollerPosition {
    double value;  ///< x_r [m], inside [x_min, x_max]
    bool clamped;  ///< true if the raw position hit a travel stop
};

/// Roller position implied by motor-2 angle, clamped to the travel stops.
inline RollerPosition roller_from_motor(double motor_angle,
                                        const ScrewParams& screw) {
    const double raw = screw.x_ref + screw.travel_per_rad() * motor_angle;
    if (raw < screw.x_min) return {screw.x_min, true};
    if (raw > screw.x_max) return {screw.x_max, true};
    return {raw, false};
}

/// Motor-2 angle that places the roller at x_r. Inverse of roller_from_motor.
inline double motor_from_roller(double roller_pos, const ScrewParams& screw) {
    if (!(roller_pos >= screw.x_min) || !(roller_pos <= screw.x_max)) {
        throw std::invalid_argument(
            "motor_from_roller: roller position " + std::to_string(roller_pos) +
            " outside travel [" + std::to_string(screw.x_min) + ", " +
            std::to_string(screw.x_max) + "]");
    }
    return (roller_pos - screw.x_ref) / screw.travel_per_rad();
}

/// Roller position realizing a target stiffness at q_d = 0: x_r = 3nEI/k.
/// Clamped to travel; the clamp flag reports an unreachable target.
inline RollerPosition stiffness_to_roller(double stiffness_target,
                                          const SpringBankParams& params,
                                          const ScrewParams& screw) {
    if (!(stiffness_target > 0.0)) {
        throw std::invalid_argument(
            "stiffness_to_roller: target must be positive, got " +
            std::to_string(stiffness_target));
    }
    const double raw = params.bank_rigidity() / stiffness_target;
    if (raw < screw.x_min) return {screw.x_min, true};
    if (raw > screw.x_max) return {screw.x_max, true};
    return {raw, false};
}

}  // namespace vsa::spring
