#include <vsa/elastica.hpp>

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <numbers>

namespace vsa::elastica {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

struct TipState {
    double x = 0.0;
    double y = 0.0;
    double phi = 0.0;
    double max_abs_phi = 0.0;
};

// RK4 over arc length with the moment arm anchored at a fixed horizontal
// coordinate. State is (phi, x, y); the clamped root fixes all three to zero.
TipState integrate(double rigidity, double load, double arc_length, int steps,
                   double anchor_x, std::vector<Station>* stations) {
    using Vec3 = Eigen::Vector3d;
    const double h = arc_length / steps;
    const double moment_scale = load / rigidity;

    auto rhs = [&](const Vec3& v) -> Vec3 {
        return {moment_scale * (anchor_x - v[1]), std::cos(v[0]),
                std::sin(v[0])};
    };

    Vec3 v = Vec3::Zero();
    double max_abs_phi = 0.0;
    if (stations) {
        stations->clear();
        stations->reserve(static_cast<std::size_t>(steps) + 1);
        stations->push_back({0.0, 0.0, 0.0, 0.0});
    }
    for (int i = 0; i < steps; ++i) {
        const Vec3 k1 = rhs(v);
        const Vec3 k2 = rhs(v + 0.5 * h * k1);
        const Vec3 k3 = rhs(v + 0.5 * h * k2);
        const Vec3 k4 = rhs(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        max_abs_phi = std::max(max_abs_phi, std::abs(v[0]));
        if (stations)
            stations->push_back({(i + 1) * h, v[1], v[2], v[0]});
    }
    return {v[1], v[2], v[0], max_abs_phi};
}

ElasticaSolution make_solution(double rigidity, double load, double arc_length,
                               int steps, double anchor_x, double residual) {
    ElasticaSolution sol;
    const TipState tip =
        integrate(rigidity, load, arc_length, steps, anchor_x, &sol.stations);
    sol.contact_index = sol.stations.size() - 1;
    sol.foreshortening = arc_length - tip.x;
    sol.lateral = tip.y;
    sol.slope = tip.phi;
    sol.load = load;
    sol.residual = residual;
    return sol;
}

}  // namespace

void ElasticaParams::validate() const {
    std::vector<std::string> bad;
    if (!(flexural_rigidity > 0.0)) bad.push_back("EI must be positive");
    if (!(arc_length > 0.0)) bad.push_back("arc length must be positive");
    if (steps < 100) bad.push_back("steps must be at least 100");
    if (!(tol > 0.0)) bad.push_back("tol must be positive");
    if (max_iterations < 1) bad.push_back("max_iterations must be at least 1");
    if (!bad.empty()) {
        std::string msg = "ElasticaParams:";
        for (const auto& b : bad) msg += " " + b + ";";
        throw std::invalid_argument(msg);
    }
}

ElasticaSolution solve_tip_load(const ElasticaParams& params) {
    params.validate();
    const double S = params.arc_length;

    if (params.load == 0.0)
        return make_solution(params.flexural_rigidity, 0.0, S, params.steps, S,
                             0.0);

    double x_tip = S;  // straight-beam guess
    double residual = std::numeric_limits<double>::infinity();
    double relaxation = 1.0;
    for (int iter = 0; iter < params.max_iterations; ++iter) {
        const TipState tip = integrate(params.flexural_rigidity, params.load, S,
                                       params.steps, x_tip, nullptr);
        if (tip.max_abs_phi >= kHalfPi)
            throw DomainError(
                "solve_tip_load: load drives the slope beyond 90 degrees");
        const double r = tip.x - x_tip;
        if (std::abs(r) > std::abs(residual))
            relaxation = std::max(relaxation * 0.5, 1.0 / 64.0);
        residual = r;
        x_tip += relaxation * r;
        if (std::abs(r) < params.tol * S)
            return make_solution(params.flexural_rigidity, params.load, S,
                                 params.steps, x_tip, r);
    }
    throw ConvergenceError("solve_tip_load: fixed point did not converge",
                           residual);
}

ElasticaSolution force_from_constraint(double lateral, double horizontal,
                                       double flexural_rigidity,
                                       const ConstraintOptions& options) {
    if (!(horizontal > 0.0))
        throw std::invalid_argument(
            "force_from_constraint: contact coordinate must be positive");
    if (!(flexural_rigidity > 0.0))
        throw std::invalid_argument(
            "force_from_constraint: flexural rigidity must be positive");
    if (std::abs(lateral) / horizontal >= 0.5)
        throw DomainError(
            "force_from_constraint: |delta_y|/a >= 0.5 is outside the solver "
            "validity envelope");

    const double a = horizontal;
    if (lateral == 0.0)
        return make_solution(flexural_rigidity, 0.0, a, options.steps, a, 0.0);

    // Linear cantilever seed; the arc length starts at the chord value.
    double force = 3.0 * flexural_rigidity * lateral / (a * a * a);
    double arc = a;
    const double force_scale = std::abs(force);

    auto eval = [&](double f, double s) -> Eigen::Vector2d {
        const TipState tip =
            integrate(flexural_rigidity, f, s, options.steps, a, nullptr);
        if (tip.max_abs_phi >= kHalfPi)
            throw DomainError(
                "force_from_constraint: iterate left the sub-90-degree regime");
        return {tip.x - a, tip.y - lateral};
    };

    Eigen::Vector2d g = eval(force, arc);
    for (int iter = 0; iter < options.max_iterations; ++iter) {
        if (std::abs(g[0]) < options.tol * a && std::abs(g[1]) < options.tol * a) {
            ElasticaSolution sol = make_solution(flexural_rigidity, force, arc,
                                                 options.steps, a,
                                                 g.cwiseAbs().maxCoeff());
            return sol;
        }
        const double hf = force_scale * 1e-6;
        const double hs = arc * 1e-6;
        const Eigen::Vector2d gf = eval(force + hf, arc);
        const Eigen::Vector2d gs = eval(force, arc + hs);
        Eigen::Matrix2d jac;
        jac.col(0) = (gf - g) / hf;
        jac.col(1) = (gs - g) / hs;
        const Eigen::Vector2d step = jac.partialPivLu().solve(-g);

        // Step halving on residual increase, up to 8 times.
        double lambda = 1.0;
        Eigen::Vector2d g_next;
        double f_next = force, s_next = arc;
        for (int halving = 0;; ++halving) {
            f_next = force + lambda * step[0];
            // s_c >= a always (arc length dominates the horizontal projection)
            s_next = std::clamp(arc + lambda * step[1], a, 2.0 * a);
            g_next = eval(f_next, s_next);
            if (g_next.norm() < g.norm() || halving == 8) break;
            lambda *= 0.5;
        }
        force = f_next;
        arc = s_next;
        g = g_next;
    }
    throw ConvergenceError("force_from_constraint: Newton did not converge",
                           g.cwiseAbs().maxCoeff());
}

void extend_straight(ElasticaSolution& solution, double total_arc_length) {
    if (solution.stations.empty()) return;
    const Station& c = solution.stations[solution.contact_index];
    if (total_arc_length <= c.s) return;
    const double ds = solution.stations.size() > 1
                          ? solution.stations[1].s - solution.stations[0].s
                          : total_arc_length - c.s;
    const double cos_phi = std::cos(c.phi);
    const double sin_phi = std::sin(c.phi);
    for (double s = c.s + ds; s < total_arc_length + 0.5 * ds; s += ds) {
        const double seg = std::min(s, total_arc_length) - c.s;
        solution.stations.push_back(
            {c.s + seg, c.x + seg * cos_phi, c.y + seg * sin_phi, c.phi});
        if (s >= total_arc_length) break;
    }
}

std::vector<ComparisonRow> compare_with_linear(
    const std::vector<double>& deflections, const std::vector<double>& rollers,
    const spring::SpringBankParams& params, const ConstraintOptions& options) {
    const double rigidity = params.flexural_rigidity();
    std::vector<ComparisonRow> rows;
    rows.reserve(deflections.size() * rollers.size());
    for (double q_d : deflections) {
        for (double x_r : rollers) {
            const auto contact = spring::contact_kinematics(q_d, x_r);
            const double a = contact.horizontal;
            const double delta = contact.lateral;
            const double f_linear = 3.0 * rigidity * delta / (a * a * a);
            ComparisonRow row{q_d, x_r, f_linear,
                              std::numeric_limits<double>::quiet_NaN(),
                              std::numeric_limits<double>::quiet_NaN(), false};
            try {
                const ElasticaSolution sol =
                    force_from_constraint(delta, a, rigidity, options);
                row.f_elastica = sol.load;
                row.rel_dev = f_linear == 0.0
                                  ? 0.0
                                  : (sol.load - f_linear) / f_linear;
                row.ok = true;
            } catch (const ConvergenceError&) {
            } catch (const DomainError&) {
            }
            rows.push_back(row);
        }
    }
    return rows;
}

double max_abs_deviation(const std::vector<ComparisonRow>& rows, double band) {
    double worst = std::numeric_limits<double>::quiet_NaN();
    for (const auto& row : rows) {
        if (!row.ok || std::abs(row.deflection) > band) continue;
        const double dev = std::abs(row.rel_dev);
        if (std::isnan(worst) || dev > worst) worst = dev;
    }
    return worst;
}

}  // namespace vsa::elastica
