#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <string>

#include "motorid/util.hpp"

namespace motorid {

using Vec2 = Eigen::Vector2d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Vec7 = Eigen::Matrix<double, 7, 1>;
using Mat5 = Eigen::Matrix<double, 5, 5>;
using Mat25 = Eigen::Matrix<double, 2, 5>;
using Mat27 = Eigen::Matrix<double, 2, 7>;
using Mat57 = Eigen::Matrix<double, 5, 7>;
using Mat7 = Eigen::Matrix<double, 7, 7>;

/// Machine state x = [psi_ds, psi_qs, psi_dr, psi_qr, omega_r].
/// Fluxes are flux linkages per time unit (nominal-frequency scaled),
/// omega_r is the electrical rotor speed in rad/s.
using MotorState = Vec5;

inline constexpr int kPsiDs = 0;
inline constexpr int kPsiQs = 1;
inline constexpr int kPsiDr = 2;
inline constexpr int kPsiQr = 3;
inline constexpr int kOmegaR = 4;

inline constexpr int kNumParams = 7;

/// Parameter vector component indices for p = [R_s, R_r, X_l, X_m, J_r, T_l0, T_l1].
inline constexpr int kRs = 0;
inline constexpr int kRr = 1;
inline constexpr int kXl = 2;
inline constexpr int kXm = 3;
inline constexpr int kJr = 4;
inline constexpr int kTl0 = 5;
inline constexpr int kTl1 = 6;

inline const std::array<std::string, kNumParams>& param_names() {
    static const std::array<std::string, kNumParams> names = {
        "r_s", "r_r", "x_l", "x_m", "j_r", "t_l0", "t_l1"};
    return names;
}

/// The seven lumped parameters identified from a startup record.
struct MotorParams {
    double r_s = 0.0;   ///< stator resistance [ohm]
    double r_r = 0.0;   ///< rotor resistance [ohm]
    double x_l = 0.0;   ///< stator (and rotor) leakage reactance [ohm]
    double x_m = 0.0;   ///< magnetizing reactance [ohm]
    double j_r = 0.0;   ///< rotor inertia [kg m^2]
    double t_l0 = 0.0;  ///< constant load torque [N m]
    double t_l1 = 0.0;  ///< viscous load coefficient [N m s]

    static MotorParams from_vector(const Vec7& v) {
        return MotorParams{v[kRs], v[kRr], v[kXl], v[kXm], v[kJr], v[kTl0], v[kTl1]};
    }

    Vec7 to_vector() const {
        Vec7 v;
        v << r_s, r_r, x_l, x_m, j_r, t_l0, t_l1;
        return v;
    }

    /// Parallel combination of the magnetizing branch with both leakage
    /// paths. This is the mutual term that enters the model matrices.
    double mutual_reactance() const { return x_l * x_m / (x_l + 2.0 * x_m); }

    bool valid() const {
        const auto fin = [](double v) { return std::isfinite(v); };
        return fin(r_s) && fin(r_r) && fin(x_l) && fin(x_m) && fin(j_r) &&
               fin(t_l0) && fin(t_l1) && r_s > 0.0 && r_r > 0.0 && x_l > 0.0 &&
               x_m > 0.0 && j_r > 0.0 && t_l0 >= 0.0 && t_l1 >= 0.0;
    }

    void validate() const {
        if (!valid())
            throw DataError("invalid motor parameters: resistances, reactances and "
                            "inertia must be finite and positive, load terms nonnegative");
    }
};

/// Known per-installation constants: nominal electrical frequency of the
/// supply and the motor's pole count (from the nameplate).
struct GridConstants {
    double omega_e = 100.0 * 3.14159265358979323846;  ///< [rad/s]
    int n_poles = 2;

    bool valid() const {
        return std::isfinite(omega_e) && omega_e > 0.0 && n_poles >= 2 &&
               n_poles % 2 == 0;
    }

    void validate() const {
        if (!valid())
            throw DataError("invalid grid constants: omega_e must be positive and "
                            "the pole count even and >= 2");
    }
};

}  // namespace motorid
