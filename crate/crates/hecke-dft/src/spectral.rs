//! The Bethe spectrum of the deformed Laplacian: the phase function, the
//! spectral roots with their parities, the Harish-Chandra c-function, the
//! one-dimensional Hall-Littlewood polynomials, and the node and dual
//! weights of the finite transform.

use crate::error::SpectralError;
use crate::lattice::{apply_i, apply_jcal, LatticeFunction, C64};
use crate::weyl::LatticeConfig;
use std::f64::consts::PI;

/// Residual target for the root solve, relative to the full phase range.
const ROOT_RESIDUAL: f64 = 1e-13;
/// Agreement required between the two dual-weight formulas.
const DUAL_WEIGHT_CONSISTENCY: f64 = 1e-12;
/// Residual allowed on the reflection equation at a solved root.
const REFLECTION_RESIDUAL: f64 = 1e-10;

/// The phase shift theta(xi) = 2 arctan(((1+tau^2)/(1-tau^2)) tan xi),
/// continued through the poles of tan so that theta(xi + pi) = theta(xi) +
/// 2 pi; odd, smooth and strictly increasing for tau in (0, 1).
pub fn theta(xi: f64, tau: f64) -> f64 {
    let k = (xi / PI + 0.5).floor();
    let x0 = xi - k * PI;
    let c = (1.0 + tau * tau) / (1.0 - tau * tau);
    2.0 * (c * x0.sin()).atan2(x0.cos()) + 2.0 * PI * k
}

/// The same phase from its integral form, by composite Simpson quadrature.
/// Slow; kept as an independent cross-check of the branch handling.
pub fn theta_integral(xi: f64, tau: f64) -> f64 {
    let t4 = tau.powi(4);
    let integrand = |x: f64| (1.0 - t4) / (1.0 + t4 - 2.0 * tau * tau * x.cos());
    let a = 0.0;
    let b = 2.0 * xi;
    let panels = 40_000usize;
    let h = (b - a) / panels as f64;
    let mut acc = integrand(a) + integrand(b);
    for i in 1..panels {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * integrand(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// The counting function V(xi) = M xi + theta(xi).
pub fn bethe_v(xi: f64, cfg: &LatticeConfig) -> f64 {
    cfg.period() as f64 * xi + theta(xi, cfg.tau())
}

/// 1 + tau^4 - 2 tau^2 cos(2 xi), rewritten as (1 - tau^2)^2 +
/// 4 tau^2 sin^2(xi) to avoid cancellation near the degenerate corner
/// tau -> 1, xi -> 0.
pub fn weight_denominator(xi: f64, tau: f64) -> f64 {
    let d = 1.0 - tau * tau;
    let s = xi.sin();
    d * d + 4.0 * tau * tau * s * s
}

/// V'(xi) = M + 2(1 - tau^4)/(1 + tau^4 - 2 tau^2 cos 2xi) > M.
pub fn bethe_v_prime(xi: f64, cfg: &LatticeConfig) -> f64 {
    let tau = cfg.tau();
    let t4 = tau.powi(4);
    cfg.period() as f64 + 2.0 * (1.0 - t4) / weight_denominator(xi, tau)
}

/// One spectral node: the root xi_m of V(xi) = (m+1) pi together with its
/// reflection parity, Laplacian eigenvalue and dual weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    pub m: usize,
    pub xi: f64,
    pub parity: i8,
    pub eigenvalue: f64,
    pub dual_weight: f64,
}

/// Deviation of e^{iM xi} from eps (1 - tau^2 e^{2i xi})/(tau^2 - e^{2i xi}).
pub fn reflection_residual(xi: f64, parity: i8, cfg: &LatticeConfig) -> f64 {
    let tau2 = cfg.tau() * cfg.tau();
    let e2 = C64::new(0.0, 2.0 * xi).exp();
    let lhs = C64::new(0.0, cfg.period() as f64 * xi).exp();
    let rhs = (C64::new(1.0, 0.0) - tau2 * e2) / (C64::new(tau2, 0.0) - e2) * parity as f64;
    (lhs - rhs).norm()
}

/// Solves V(xi) = (m+1) pi on (0, pi): bracketed bisection down to width
/// 1e-3 followed by Newton steps clamped to the bracket.  V is strictly
/// increasing, so the bracket certifies the root.
pub fn solve_bethe_root(m: i64, cfg: &LatticeConfig) -> Result<SpectralPoint, SpectralError> {
    let period = cfg.period();
    if m < 0 || m > period {
        return Err(SpectralError::ModeOutOfRange { m, max: period });
    }
    let target = (m + 1) as f64 * PI;
    let residual_target = ROOT_RESIDUAL * (period + 2) as f64 * PI;

    let (mut a, mut b) = (0.0f64, PI);
    while b - a > 1e-3 {
        let mid = 0.5 * (a + b);
        if bethe_v(mid, cfg) < target {
            a = mid;
        } else {
            b = mid;
        }
    }
    // Newton until the iterate stops moving; quadratic convergence lands at
    // machine precision well inside the residual target.
    let mut x = 0.5 * (a + b);
    for _ in 0..80 {
        let residual = bethe_v(x, cfg) - target;
        if residual == 0.0 {
            break;
        }
        if residual < 0.0 {
            a = x;
        } else {
            b = x;
        }
        let mut next = x - residual / bethe_v_prime(x, cfg);
        if next <= a || next >= b {
            next = 0.5 * (a + b);
        }
        if next == x {
            break;
        }
        x = next;
    }
    let residual = bethe_v(x, cfg) - target;
    if residual.abs() > residual_target {
        return Err(SpectralError::RootNotConverged {
            m,
            target: residual_target,
            achieved: residual.abs(),
        });
    }

    let parity = if m % 2 == 0 { 1i8 } else { -1 };
    let refl = reflection_residual(x, parity, cfg);
    if refl > REFLECTION_RESIDUAL {
        return Err(SpectralError::Inconsistent {
            what: format!("reflection equation residual at mode {m}"),
            dev: refl,
        });
    }

    Ok(SpectralPoint {
        m: m as usize,
        xi: x,
        parity,
        eigenvalue: 2.0 * x.cos(),
        dual_weight: dual_weight_value(x, cfg)?,
    })
}

/// The c-function c(xi) = (1 - tau^2 e^{-2i xi}) / (1 - e^{-2i xi}),
/// undefined at multiples of pi.
pub fn c_function(xi: f64, tau: f64) -> Result<C64, SpectralError> {
    let z = C64::new(0.0, -2.0 * xi).exp();
    let den = C64::new(1.0, 0.0) - z;
    if den.norm() < 1e-12 {
        return Err(SpectralError::CFunctionPole { xi });
    }
    Ok((C64::new(1.0, 0.0) - tau * tau * z) / den)
}

/// Chebyshev polynomial of the second kind at x = cos(xi), extended to
/// negative index by U_{-1} = 0 and U_{-n-1} = -U_{n-1}; evaluated by the
/// three-term recurrence, which stays finite where the c-function blows up.
pub fn chebyshev_u(n: i64, x: f64) -> f64 {
    if n >= 0 {
        let mut prev = 0.0; // U_{-1}
        let mut cur = 1.0; // U_0
        for _ in 0..n {
            let next = 2.0 * x * cur - prev;
            prev = cur;
            cur = next;
        }
        cur
    } else if n == -1 {
        0.0
    } else {
        -chebyshev_u(-n - 2, x)
    }
}

/// The one-dimensional Hall-Littlewood polynomial
/// phi_xi(n) = U_n(cos xi) + tau^2 U_{-n}(cos xi), a degree-|n| polynomial
/// in cos(xi).
pub fn phi_xi(xi: f64, n: i64, tau: f64) -> f64 {
    let x = xi.cos();
    chebyshev_u(n, x) + tau * tau * chebyshev_u(-n, x)
}

/// phi through the plane-wave expansion c(xi) e^{i xi n} + c(-xi) e^{-i xi n}.
/// Has removable poles at multiples of pi; used only to cross-check the
/// recurrence form.
pub fn phi_xi_cform(xi: f64, n: i64, tau: f64) -> Result<C64, SpectralError> {
    let cp = c_function(xi, tau)?;
    let cm = c_function(-xi, tau)?;
    let e = C64::new(0.0, xi * n as f64).exp();
    Ok(cp * e + cm * e.conj())
}

/// The symmetrized node weight: (1 + tau^2)^{-1} at the alcove endpoints,
/// 1 in the interior.
pub fn node_weight(n: i64, cfg: &LatticeConfig) -> f64 {
    if n == 0 || n == cfg.period() {
        1.0 / (1.0 + cfg.tau() * cfg.tau())
    } else {
        1.0
    }
}

/// The dual (Plancherel) weight at spectral parameter xi, computed through
/// both published routes, which must agree:
/// 1/(2 c(xi) c(-xi) V'(xi)) and the explicit cosine form.
pub fn dual_weight_value(xi: f64, cfg: &LatticeConfig) -> Result<f64, SpectralError> {
    let tau = cfg.tau();
    // 1 - cos(2 xi) = 2 sin^2(xi), cancellation-free
    let s = xi.sin();
    let explicit = 2.0 * s * s / weight_denominator(xi, tau) / bethe_v_prime(xi, cfg);

    let cc = (c_function(xi, tau)? * c_function(-xi, tau)?).re;
    let via_c = 1.0 / (2.0 * cc * bethe_v_prime(xi, cfg));

    let dev = (explicit - via_c).abs();
    if dev > DUAL_WEIGHT_CONSISTENCY {
        return Err(SpectralError::Inconsistent {
            what: format!("dual weight formulas at xi = {xi}"),
            dev,
        });
    }
    Ok(explicit)
}

/// The full spectrum for a configuration: M+1 ordered roots with parities,
/// eigenvalues and dual weights, plus the node weights on the alcove.
#[derive(Debug, Clone)]
pub struct SpectrumTable {
    cfg: LatticeConfig,
    points: Vec<SpectralPoint>,
    node_weights: Vec<f64>,
}

impl SpectrumTable {
    pub fn compute(cfg: &LatticeConfig) -> Result<Self, SpectralError> {
        let period = cfg.period();
        let points: Vec<SpectralPoint> =
            (0..=period).map(|m| solve_bethe_root(m, cfg)).collect::<Result<_, _>>()?;

        // strict interlacing in (0, pi)
        for w in points.windows(2) {
            if w[0].xi >= w[1].xi {
                return Err(SpectralError::Inconsistent {
                    what: format!("roots out of order at modes {} and {}", w[0].m, w[1].m),
                    dev: w[0].xi - w[1].xi,
                });
            }
        }
        if !(points[0].xi > 0.0 && points[period as usize].xi < PI) {
            return Err(SpectralError::Inconsistent {
                what: "roots escape (0, pi)".into(),
                dev: 0.0,
            });
        }
        // reflection symmetry xi_{M-m} = pi - xi_m
        for m in 0..=period as usize {
            let dev = (points[period as usize - m].xi - (PI - points[m].xi)).abs();
            if dev > 1e-12 {
                return Err(SpectralError::Inconsistent {
                    what: format!("root symmetry at mode {m}"),
                    dev,
                });
            }
        }

        let node_weights = (0..=period).map(|n| node_weight(n, cfg)).collect();
        Ok(SpectrumTable { cfg: *cfg, points, node_weights })
    }

    pub fn cfg(&self) -> &LatticeConfig {
        &self.cfg
    }

    pub fn points(&self) -> &[SpectralPoint] {
        &self.points
    }

    pub fn node_weights(&self) -> &[f64] {
        &self.node_weights
    }

    pub fn xi(&self, m: usize) -> f64 {
        self.points[m].xi
    }
}

/// The pre-image of the spherical function: phi_xi = (1 + tau I) e^{i xi}
/// as a lattice function.
pub fn phi_lattice(xi: f64, cfg: &LatticeConfig) -> LatticeFunction {
    let tau = cfg.tau();
    let wave = LatticeFunction::plane_wave(xi);
    let i_wave = apply_i(&wave, cfg);
    LatticeFunction::new(move |n| wave.at(n) + tau * i_wave.at(n))
}

/// The spherical function Phi_xi = Jcal phi_xi.
pub fn spherical_lattice(xi: f64, cfg: &LatticeConfig) -> LatticeFunction {
    apply_jcal(&phi_lattice(xi, cfg), cfg)
}
