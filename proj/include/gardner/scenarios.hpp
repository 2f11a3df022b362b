#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gardner/basis.hpp"
#include "gardner/grid_field.hpp"
#include "gardner/stepper.hpp"

namespace gardner {

enum class ScenarioName { Bell, Kink, Generation, Interaction };

[[nodiscard]] std::string_view to_string(ScenarioName name) noexcept;
/// Throws ConfigError for anything but bell, kink, generation, interaction.
[[nodiscard]] ScenarioName parse_scenario_name(std::string_view name);


/// Closed-form solution u(x, t).
using AnalyticSolution = std::function<double(double x, double t)>;
using Profile = std::function<double(double x)>;

struct ReferenceConserved {
    double m = 0.0;
    double e = 0.0;
    double ham = 0.0;
};

/// Everything needed to reproduce one benchmark experiment.
struct Scenario {
    ScenarioName name = ScenarioName::Bell;
    GardnerParams params;
    double a = 0.0;
    double b = 0.0;
    std::size_t n = 100;
    double t_end = 0.0;
    std::vector<double> snapshot_times;
    FieldClosures polynomial_closures;
    FieldClosures trigonometric_closures;
    Profile initial;             // u(x, 0)
    Profile initial_derivative;  // u_x(x, 0)
    std::optional<AnalyticSolution> analytic;
    ReferenceConserved reference_conserved;

    [[nodiscard]] const FieldClosures& closures(BasisKind kind) const noexcept {
        return kind == BasisKind::Polynomial ? polynomial_closures : trigonometric_closures;
    }
};

/// Bell-shaped solitary wave for alpha = 4, beta = -3, mu = 1; peak at x = 5 + t/9.
[[nodiscard]] double bell_solution(double x, double t);
[[nodiscard]] double bell_solution_dx(double x, double t);

/// Kink moving right with speed 1/30 for alpha = 1, beta = -5, mu = 1.
[[nodiscard]] double kink_solution(double x, double t);
[[nodiscard]] double kink_solution_dx(double x, double t);

/// Initial pulse for the wave-generation run: five times the bell-type profile
/// (2/3) / (4 + sqrt(14) cosh(x/3 - 5/3)), height 0.43057 at x = 5.
[[nodiscard]] double generation_ic(double x);
[[nodiscard]] double generation_ic_dx(double x);

/// Two opposite-moving solitaries on a -1/2 background (alpha = beta = 6, mu = 1):
/// the mKdV two-soliton -1/2 + 2 (G'F - G F') / (G^2 + F^2) with
/// G = e^{x-5} + e^{2x+5}, F = 1 - e^{3x}/9. Heights 1.4996 near x = -2.5 and
/// 0.5000 near x = 7.2.
[[nodiscard]] double interaction_ic(double x);
[[nodiscard]] double interaction_ic_dx(double x);

/// Throws ConfigError for an unknown name (string overload).
[[nodiscard]] Scenario scenario_config(ScenarioName name);
[[nodiscard]] Scenario scenario_config(std::string_view name);

}  // namespace gardner
