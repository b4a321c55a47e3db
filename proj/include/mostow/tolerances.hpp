#pragma once

// Central tolerance configuration. Every numeric threshold used by the
// library lives here so that verifier bounds stay auditable in one place.
namespace mostow::tol {

inline constexpr double geometry = 1e-9;        // distances, unit-speed checks
inline constexpr double mobius_det = 1e-12;     // |ad-bc-1| after normalization
inline constexpr double integrate_rel = 1e-8;   // arc-length refinement target
inline constexpr int max_refine_segments = 1 << 20;

inline constexpr double pole_chart = 1e-8;      // |cz+d| below this switches chart
inline constexpr double triple_eval = 1e-10;    // normalize_triple evaluation check

inline constexpr double bl_slack = 1e-9;        // sandwich slack factor
inline constexpr double tube_slack = 1e-3;      // ratio <= bound*(1+tube_slack)
inline constexpr double morse_abs = 1e-6;       // deviation <= bound + morse_abs

inline constexpr double deriv_residual = 1e-7;  // finite-difference settle target
inline constexpr double deriv_agree = 1e-5;     // forward/backward quotient gap
inline constexpr double asterisk_d1 = 1e-6;     // |D_1 h| must exceed this

}  // namespace mostow::tol
