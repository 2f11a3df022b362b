#include "gardner/scenarios.hpp"

#include <cmath>
#include <string>

#include "gardner/errors.hpp"

namespace gardner {

std::string_view to_string(ScenarioName name) noexcept {
    switch (name) {
        case ScenarioName::Bell: return "bell";
        case ScenarioName::Kink: return "kink";
        case ScenarioName::Generation: return "generation";
        case ScenarioName::Interaction: return "interaction";
    }
    return "unknown";
}

ScenarioName parse_scenario_name(std::string_view name) {
    if (name == "bell") return ScenarioName::Bell;
    if (name == "kink") return ScenarioName::Kink;
    if (name == "generation") return ScenarioName::Generation;
    if (name == "interaction") return ScenarioName::Interaction;
    throw ConfigError("unknown scenario '" + std::string(name) + "'");
}

namespace {

const double kSqrt14 = std::sqrt(14.0);
const double kKinkRate = std::sqrt(30.0) / 60.0;

}  // namespace

double bell_solution(double x, double t) {
    const double arg = -x / 3.0 + 5.0 / 3.0 + t / 27.0;
    return 2.0 / (12.0 + 3.0 * kSqrt14 * std::cosh(arg));
}

double bell_solution_dx(double x, double t) {
    const double arg = -x / 3.0 + 5.0 / 3.0 + t / 27.0;
    const double den = 12.0 + 3.0 * kSqrt14 * std::cosh(arg);
    return 2.0 * kSqrt14 * std::sinh(arg) / (den * den);
}

double kink_solution(double x, double t) {
    return 0.1 - 0.1 * std::tanh(kKinkRate * (x - t / 30.0));
}

double kink_solution_dx(double x, double t) {
    const double c = std::cosh(kKinkRate * (x - t / 30.0));
    return -0.1 * kKinkRate / (c * c);
}

double generation_ic(double x) {
    return 5.0 * (2.0 / 3.0) / (4.0 + kSqrt14 * std::cosh(x / 3.0 - 5.0 / 3.0));
}

double generation_ic_dx(double x) {
    const double arg = x / 3.0 - 5.0 / 3.0;
    const double den = 4.0 + kSqrt14 * std::cosh(arg);
    return -5.0 * (2.0 / 3.0) * kSqrt14 * std::sinh(arg) / (3.0 * den * den);
}

namespace {

struct TwoSolitonTerms {
    double g, g1, g2;  // G and its first two derivatives
    double f, f1, f2;  // F and its first two derivatives
};

TwoSolitonTerms two_soliton_terms(double x) {
    const double slow = std::exp(x - 5.0);
    const double fast = std::exp(2.0 * x + 5.0);
    const double cross = std::exp(3.0 * x);
    return {slow + fast,       slow + 2.0 * fast,  slow + 4.0 * fast,
            1.0 - cross / 9.0, -cross / 3.0,       -cross};
}

}  // namespace

double interaction_ic(double x) {
    const TwoSolitonTerms s = two_soliton_terms(x);
    const double num = s.g1 * s.f - s.g * s.f1;
    const double den = s.g * s.g + s.f * s.f;
    return -0.5 + 2.0 * num / den;
}

double interaction_ic_dx(double x) {
    const TwoSolitonTerms s = two_soliton_terms(x);
    const double num = s.g1 * s.f - s.g * s.f1;
    const double num_dx = s.g2 * s.f - s.g * s.f2;
    const double den = s.g * s.g + s.f * s.f;
    const double den_dx = 2.0 * (s.g * s.g1 + s.f * s.f1);
    return 2.0 * (num_dx * den - num * den_dx) / (den * den);
}

Scenario scenario_config(ScenarioName name) {
    Scenario s;
    s.name = name;
    const FieldClosures second{BoundaryClosure::both(Closure::Neumann2),
                               BoundaryClosure::both(Closure::Neumann2)};
    const FieldClosures first{BoundaryClosure::both(Closure::Neumann1),
                              BoundaryClosure::both(Closure::Neumann1)};
    switch (name) {
        case ScenarioName::Bell:
            s.params = {4.0, -3.0, 1.0, 0.1, 0.0};
            s.a = -20.0;
            s.b = 30.0;
            s.n = 100;
            s.t_end = 5.0;
            s.snapshot_times = {2.5, 5.0};
            // u_x = 0 paired with v_x = 0 drifts at the boundary; see README.
            s.polynomial_closures = second;
            s.trigonometric_closures = second;
            s.initial = [](double x) { return bell_solution(x, 0.0); };
            s.initial_derivative = [](double x) { return bell_solution_dx(x, 0.0); };
            s.analytic = AnalyticSolution(bell_solution);
            s.reference_conserved = {1.045100915, 0.06013455349, 0.004070220312};
            break;
        case ScenarioName::Kink:
            s.params = {1.0, -5.0, 1.0, 0.1, 0.0};
            s.a = -80.0;
            s.b = 80.0;
            s.n = 400;
            s.t_end = 12.0;
            s.snapshot_times = {4.0, 8.0, 12.0};
            s.polynomial_closures = second;
            s.trigonometric_closures = first;
            s.initial = [](double x) { return kink_solution(x, 0.0); };
            s.initial_derivative = [](double x) { return kink_solution_dx(x, 0.0); };
            s.analytic = AnalyticSolution(kink_solution);
            s.reference_conserved = {16.0, 2.980911178, 0.09692938338};
            break;
        case ScenarioName::Generation:
            s.params = {10.0, -3.0, 1.0, 0.01, 0.0};
            s.a = -40.0;
            s.b = 60.0;
            s.n = 400;
            s.t_end = 15.0;
            s.snapshot_times = {5.0, 10.0, 15.0};
            s.polynomial_closures = second;
            s.trigonometric_closures = second;
            s.initial = generation_ic;
            s.initial_derivative = generation_ic_dx;
            s.reference_conserved = {5.225504574, 1.503363838, 1.599480484};
            break;
        case ScenarioName::Interaction:
            s.params = {6.0, 6.0, 1.0, 0.01, 0.0};
            s.a = -10.0;
            s.b = 20.0;
            s.n = 600;
            s.t_end = 5.0;
            s.snapshot_times = {1.0, 2.0, 2.5, 4.0, 5.0};
            s.polynomial_closures = second;
            s.trigonometric_closures = second;
            s.initial = interaction_ic;
            s.initial_derivative = interaction_ic_dx;
            s.reference_conserved = {-8.716821423, 7.216821423, -2.34182152};
            break;
    }
    return s;
}

Scenario scenario_config(std::string_view name) {
    return scenario_config(parse_scenario_name(name));
}

}  // namespace gardner
