// Planar elastica solver for a clamped-free leaf under a concentrated
// transverse load. Validates the small-deflection closed forms in
// spring_mechanism.hpp and quantifies their error envelope.
#pragma once

#include <vsa/spring_mechanism.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace vsa::elastica {

/// Thrown when an iteration budget runs out; carries the last residual.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Thrown when the requested load or deflection leaves the model's domain
/// (slope beyond 90 degrees, constraint outside the validity envelope).
class DomainError : public std::domain_error {
    using std::domain_error::domain_error;
};

struct ElasticaParams {
    double flexural_rigidity = 1.0;  ///< EI [N*m^2]
    double load = 0.0;               ///< F, transverse force at the segment end [N]
    double arc_length = 1.0;         ///< S, loaded segment length [m]
    int steps = 10000;               ///< N_s, integration stations (>= 100)
    double tol = 1e-10;              ///< relative residual tolerance
    int max_iterations = 200;

    void validate() const;
};

struct Station {
    double s;    ///< arc length [m]
    double x;    ///< horizontal coordinate [m]
    double y;    ///< lateral coordinate [m]
    double phi;  ///< slope angle [rad]
};

struct ElasticaSolution {
    std::vector<Station> stations;  ///< root (s=0) to the last computed point
    std::size_t contact_index = 0;  ///< station where the load is applied
    double foreshortening = 0.0;    ///< delta_xr = s_c - x(s_c) >= 0 [m]
    double lateral = 0.0;           ///< delta_yr = y(s_c) [m]
    double slope = 0.0;             ///< phi_xr = phi(s_c) [rad]
    double load = 0.0;              ///< F actually applied/solved [N]
    double residual = 0.0;          ///< achieved constraint residual
};

/// Clamped-free elastica of arc length S under transverse end load F.
///
/// Integrates dphi/ds = F*(x_tip - x)/EI, dx/ds = cos(phi), dy/ds = sin(phi)
/// from the clamped root, closing the unknown tip abscissa x_tip by
/// fixed-point iteration until |x(S) - x_tip| < tol*S.
ElasticaSolution solve_tip_load(const ElasticaParams& params);

struct ConstraintOptions {
    int steps = 20000;
    double tol = 1e-10;
    int max_iterations = 60;
};

/// Inverse problem at the roller: find the force F and contact arc length
/// s_c such that the loaded elastica passes through (a, delta_y).
///
/// The roller sits at the fixed horizontal coordinate a, so the bending
/// moment arm is known and the two unknowns (F, s_c) are closed by damped
/// Newton iteration on the contact residual. F carries the sign of delta_y.
ElasticaSolution force_from_constraint(double lateral, double horizontal,
                                       double flexural_rigidity,
                                       const ConstraintOptions& options = {});

/// Appends the unloaded straight segment from the contact to the free end.
/// The extension carries no force; stations continue along the contact
/// tangent with the loaded part's spacing.
void extend_straight(ElasticaSolution& solution, double total_arc_length);

struct ComparisonRow {
    double deflection;   ///< q_d [rad]
    double roller_pos;   ///< x_r [m]
    double f_linear;     ///< per-spring 3*EI*delta/a^3 [N]
    double f_elastica;   ///< per-spring elastica contact force [N]
    double rel_dev;      ///< (f_elastica - f_linear)/f_linear, 0 at q_d = 0
    bool ok;             ///< false if the cell's solve failed
};

/// Per-spring contact force by both models over a (q_d, x_r) grid.
/// Failed cells are marked rather than aborting the table.
std::vector<ComparisonRow> compare_with_linear(
    const std::vector<double>& deflections, const std::vector<double>& rollers,
    const spring::SpringBankParams& params, const ConstraintOptions& options = {});

/// Largest |rel_dev| among ok rows with |q_d| <= band. NaN if none.
double max_abs_deviation(const std::vector<ComparisonRow>& rows, double band);

}  // namespace vsa::elastica
