//! The two representations of the Hecke algebra on functions over the
//! integer lattice, the intertwiner between them, and the deformed discrete
//! Laplacian.
//!
//! The difference-reflection side acts through the operators That and Xhat;
//! the integral-reflection side acts through I (a reflection plus a
//! step-two summation) and the shift D.  The intertwiner Jcal maps the
//! integral picture to the difference picture and is triangular with respect
//! to the chamber order, which is what makes it invertible by forward
//! substitution.

use crate::error::LatticeError;
use crate::weyl::{
    alcove_point, chamber_length, chamber_map, Generator, LatticeConfig, WeylElement,
};
use num_complex::Complex64;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub type C64 = Complex64;

/// A total function on the integer lattice with lazy memoized evaluation.
///
/// Values are cached behind a mutex so a shared function can be evaluated
/// from several threads; operator application produces a new function that
/// captures its inputs.  The optional support window promises the value is
/// exactly zero outside it.
#[derive(Clone)]
pub struct LatticeFunction {
    eval: Arc<dyn Fn(i64) -> C64 + Send + Sync>,
    support: Option<(i64, i64)>,
    cache: Arc<Mutex<HashMap<i64, C64>>>,
}

impl LatticeFunction {
    pub fn new(f: impl Fn(i64) -> C64 + Send + Sync + 'static) -> Self {
        LatticeFunction {
            eval: Arc::new(f),
            support: None,
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn with_support(f: impl Fn(i64) -> C64 + Send + Sync + 'static, lo: i64, hi: i64) -> Self {
        LatticeFunction {
            eval: Arc::new(f),
            support: Some((lo, hi)),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    /// Finitely supported function from explicit values starting at `lo`.
    pub fn from_values(lo: i64, values: Vec<C64>) -> Self {
        let hi = lo + values.len() as i64 - 1;
        LatticeFunction::with_support(
            move |n| {
                if n < lo || n > hi {
                    C64::new(0.0, 0.0)
                } else {
                    values[(n - lo) as usize]
                }
            },
            lo,
            hi,
        )
    }

    /// The indicator function of a single lattice point.
    pub fn indicator(k: i64) -> Self {
        LatticeFunction::with_support(
            move |n| if n == k { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) },
            k,
            k,
        )
    }

    /// The plane wave n -> exp(i xi n).
    pub fn plane_wave(xi: f64) -> Self {
        LatticeFunction::new(move |n| (C64::new(0.0, xi * n as f64)).exp())
    }

    pub fn zero() -> Self {
        LatticeFunction::with_support(|_| C64::new(0.0, 0.0), 0, 0)
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        self.support
    }

    /// Pointwise evaluation with memoization.
    pub fn at(&self, n: i64) -> C64 {
        if let Some((lo, hi)) = self.support {
            if n < lo || n > hi {
                return C64::new(0.0, 0.0);
            }
        }
        {
            let cache = self.cache.lock().unwrap();
            if let Some(v) = cache.get(&n) {
                return *v;
            }
        }
        let v = (self.eval)(n);
        self.cache.lock().unwrap().insert(n, v);
        v
    }
}

fn hull(a: Option<(i64, i64)>, f: impl Fn(i64, i64) -> (i64, i64)) -> Option<(i64, i64)> {
    a.map(|(lo, hi)| {
        let (x, y) = f(lo, hi);
        (x.min(y), x.max(y))
    })
}

/// (s f)_n = f_{-n}.
pub fn apply_s(f: &LatticeFunction) -> LatticeFunction {
    let g = f.clone();
    let support = hull(f.support(), |lo, hi| (-hi, -lo));
    match support {
        Some((lo, hi)) => LatticeFunction::with_support(move |n| g.at(-n), lo, hi),
        None => LatticeFunction::new(move |n| g.at(-n)),
    }
}

/// (u f)_n = f_{M-n}.
pub fn apply_u(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let g = f.clone();
    let m = cfg.period();
    let support = hull(f.support(), |lo, hi| (m - hi, m - lo));
    match support {
        Some((lo, hi)) => LatticeFunction::with_support(move |n| g.at(m - n), lo, hi),
        None => LatticeFunction::new(move |n| g.at(m - n)),
    }
}

/// The difference-reflection generator:
/// (That f)_n = tau f_{-n} for n >= 0, and tau^{-1} f_{-n} + (tau -
/// tau^{-1}) f_n for n < 0 (sign(0) = 0).
pub fn apply_that(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let g = f.clone();
    let tau = cfg.tau();
    let eval = move |n: i64| {
        if n >= 0 {
            tau * g.at(-n)
        } else {
            g.at(-n) / tau + (tau - 1.0 / tau) * g.at(n)
        }
    };
    match f.support() {
        Some((lo, hi)) => {
            let (a, b) = (lo.min(-hi), hi.max(-lo));
            LatticeFunction::with_support(eval, a, b)
        }
        None => LatticeFunction::new(eval),
    }
}

/// The step-two summation: (J f)_n sums f from n to -n exclusive of the top
/// end, with sign conventions that make J idempotent and J f always odd.
pub fn apply_j(f: &LatticeFunction) -> LatticeFunction {
    let g = f.clone();
    LatticeFunction::new(move |n| {
        let mut acc = C64::new(0.0, 0.0);
        if n > 0 {
            // -f_{n-2} - f_{n-4} - ... - f_{-n}
            for k in 1..=n {
                acc -= g.at(n - 2 * k);
            }
        } else if n < 0 {
            // f_n + f_{n+2} + ... + f_{-n-2}
            for k in 0..(-n) {
                acc += g.at(n + 2 * k);
            }
        }
        acc
    })
}

/// The integral-reflection generator I = tau s + (tau - tau^{-1}) J.
pub fn apply_i(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let tau = cfg.tau();
    let sf = apply_s(f);
    let jf = apply_j(f);
    LatticeFunction::new(move |n| tau * sf.at(n) + (tau - 1.0 / tau) * jf.at(n))
}

/// Shift operator: (D f)_n = f_{n-1}; power -1 shifts the other way.
pub fn apply_d(f: &LatticeFunction, power: i64) -> LatticeFunction {
    assert!(power == 1 || power == -1);
    let g = f.clone();
    let support = hull(f.support(), |lo, hi| (lo + power, hi + power));
    match support {
        Some((lo, hi)) => LatticeFunction::with_support(move |n| g.at(n - power), lo, hi),
        None => LatticeFunction::new(move |n| g.at(n - power)),
    }
}

/// I_{s1} = I in closed form:
/// tau^{-1} f_{-n} - (tau - tau^{-1}) sum_{k=1}^{n-1} f_{n-2k} for n > 0,
/// tau f_{-n} + (tau - tau^{-1}) sum_{k=0}^{-n-1} f_{n+2k} for n <= 0.
pub fn apply_i_s1(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let g = f.clone();
    let tau = cfg.tau();
    LatticeFunction::new(move |n| {
        let dt = tau - 1.0 / tau;
        if n > 0 {
            let mut acc = g.at(-n) / tau;
            for k in 1..n {
                acc -= dt * g.at(n - 2 * k);
            }
            acc
        } else {
            let mut acc = tau * g.at(-n);
            for k in 0..(-n) {
                acc += dt * g.at(n + 2 * k);
            }
            acc
        }
    })
}

/// I_{s0} = u I u in closed form:
/// tau^{-1} f_{2M-n} - (tau - tau^{-1}) sum_{k=1}^{M-n-1} f_{n+2k} for n < M,
/// tau f_{2M-n} + (tau - tau^{-1}) sum_{k=0}^{n-M-1} f_{n-2k} for n >= M.
pub fn apply_i_s0(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let g = f.clone();
    let tau = cfg.tau();
    let m = cfg.period();
    LatticeFunction::new(move |n| {
        let dt = tau - 1.0 / tau;
        if n < m {
            let mut acc = g.at(2 * m - n) / tau;
            for k in 1..(m - n) {
                acc -= dt * g.at(n + 2 * k);
            }
            acc
        } else {
            let mut acc = tau * g.at(2 * m - n);
            for k in 0..(n - m) {
                acc += dt * g.at(n - 2 * k);
            }
            acc
        }
    })
}

/// I_w for arbitrary w: the composition of I_{s_i} along the reduced word
/// (rightmost letter applied first), with the u-factor acting as u itself.
pub fn apply_i_w(w: &WeylElement, f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let (u_exp, word) = w.reduced_word();
    let mut g = f.clone();
    for gen in word.iter().rev() {
        g = match gen {
            Generator::S1 => apply_i_s1(&g, cfg),
            Generator::S0 => apply_i_s0(&g, cfg),
        };
    }
    if u_exp == 1 {
        g = apply_u(&g, cfg);
    }
    g
}

/// The intertwiner: (Jcal f)_n = tau^{-l(w_n)} (I_{w_n} f)_{n_+}.
///
/// The chamber words grow by one letter on the left as |n| leaves the
/// fundamental alcove, so the compositions I_{w_n} f are built incrementally
/// and shared across evaluation points; sharing keeps deep compositions
/// polynomial instead of exponential.
pub fn apply_jcal(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let cfg = *cfg;
    let tau = cfg.tau();
    // chains[side][p] = I over the length-p chamber word ending in
    // s_{side}, applied to f; side 0 covers n > M, side 1 covers n < 0.
    let chains: Arc<Mutex<[Vec<LatticeFunction>; 2]>> =
        Arc::new(Mutex::new([vec![f.clone()], vec![f.clone()]]));
    LatticeFunction::new(move |n| {
        let w = chamber_map(n, &cfg);
        let p = w.length() as usize;
        if p == 0 {
            let base = chains.lock().unwrap()[0][0].clone();
            return base.at(n);
        }
        let side = match w.last_generator().unwrap() {
            Generator::S0 => 0usize,
            Generator::S1 => 1usize,
        };
        let func = {
            let mut chains = chains.lock().unwrap();
            while chains[side].len() <= p {
                let q = chains[side].len();
                // leftmost letter of the length-q alternating word ending in
                // s_{side}
                let end = if side == 0 { Generator::S0 } else { Generator::S1 };
                let left = if q % 2 == 1 { end } else { end.flip() };
                let prev = chains[side][q - 1].clone();
                let next = match left {
                    Generator::S1 => apply_i_s1(&prev, &cfg),
                    Generator::S0 => apply_i_s0(&prev, &cfg),
                };
                chains[side].push(next);
            }
            chains[side][p].clone()
        };
        tau.powi(-(p as i32)) * func.at(alcove_point(n, &cfg))
    })
}

/// Function known only on a finite window of the lattice.
#[derive(Debug, Clone)]
pub struct WindowedFunction {
    lo: i64,
    values: Vec<C64>,
}

impl WindowedFunction {
    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.lo + self.values.len() as i64 - 1)
    }

    /// Value at n, or None outside the solved window.
    pub fn at(&self, n: i64) -> Option<C64> {
        let (lo, hi) = self.window();
        if n < lo || n > hi {
            None
        } else {
            Some(self.values[(n - lo) as usize])
        }
    }

    /// Zero-padded extension to a total lattice function.
    pub fn to_lattice(&self) -> LatticeFunction {
        LatticeFunction::from_values(self.lo, self.values.clone())
    }
}

/// Total order used for the triangular solve: chamber depth first, then
/// distance from the origin, positive points before negative ones at ties.
/// It extends the chamber precedence order, so every dependency of a row
/// comes earlier.
pub fn solve_order_key(n: i64, cfg: &LatticeConfig) -> (u32, i64, u8) {
    (chamber_length(n, cfg), n.abs(), (n < 0) as u8)
}

/// Whether k strictly precedes n in the chamber order: either w_k is
/// strictly shorter than w_n, or the chamber elements coincide and |k| < |n|.
pub fn chamber_precedes(k: i64, n: i64, cfg: &LatticeConfig) -> bool {
    let wk = chamber_map(k, cfg);
    let wn = chamber_map(n, cfg);
    wk.bruhat_less(&wn) || (wk == wn && k.abs() < n.abs())
}

/// Solves Jcal f = g for f on the window [-n_window, n_window] by forward
/// substitution in the solve order.
///
/// The solve closes over the lower set of the window, which reaches at most
/// 2M points beyond it; `known_radius`, when given, bounds where g may be
/// evaluated and produces an explicit error naming the first index outside
/// it.
pub fn invert_jcal(
    g: &LatticeFunction,
    cfg: &LatticeConfig,
    n_window: i64,
    known_radius: Option<i64>,
) -> Result<WindowedFunction, LatticeError> {
    assert!(n_window > 0);
    let m = cfg.period();
    let p_max = chamber_length(n_window, cfg).max(chamber_length(-n_window, cfg)) as i64;
    // points of chamber depth < p_max fill [-(p_max-1)M, p_max*M]
    let lo = (-n_window).min(-(p_max - 1) * m);
    let hi = n_window.max(p_max * m);
    if let Some(r) = known_radius {
        if hi > r {
            return Err(LatticeError::WindowTooSmall { missing: hi });
        }
        if lo < -r {
            return Err(LatticeError::WindowTooSmall { missing: lo });
        }
    }

    let size = (hi - lo + 1) as usize;
    let idx = |n: i64| (n - lo) as usize;

    // Column k of the intertwiner on the window: Jcal applied to the
    // indicator of k.
    let mut columns = vec![vec![C64::new(0.0, 0.0); size]; size];
    for k in lo..=hi {
        let col = apply_jcal(&LatticeFunction::indicator(k), cfg);
        for n in lo..=hi {
            columns[idx(k)][idx(n)] = col.at(n);
        }
    }

    let mut order: Vec<i64> = (lo..=hi).collect();
    order.sort_by_key(|&n| solve_order_key(n, cfg));

    let mut values = vec![C64::new(0.0, 0.0); size];
    let mut solved = vec![false; size];
    for &n in &order {
        let mut rhs = g.at(n);
        for k in lo..=hi {
            if k == n {
                continue;
            }
            let a = columns[idx(k)][idx(n)];
            if a == C64::new(0.0, 0.0) {
                continue;
            }
            if !solved[idx(k)] {
                // the value is needed but not yet available: only possible
                // if triangularity fails, since the solve order extends
                // the chamber order
                return Err(LatticeError::TriangularityViolated { row: n, col: k });
            }
            rhs -= a * values[idx(k)];
        }
        let diag = columns[idx(n)][idx(n)];
        values[idx(n)] = rhs / diag;
        solved[idx(n)] = true;
    }

    let out_lo = -n_window;
    let out: Vec<C64> = (out_lo..=n_window).map(|n| values[idx(n)]).collect();
    Ok(WindowedFunction { lo: out_lo, values: out })
}

/// Index convention for the lowering sum of the Xhat operator.  The two
/// published forms act through v or through v^{-1}; the lowering set is
/// closed under inversion and the coefficients depend only on length, so
/// both produce the same operator.  Both are kept so the verification suite
/// can demonstrate that.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum XhatConvention {
    #[default]
    AsPrinted,
    Inverted,
}

/// Numeric lowering coefficient a(k).
pub fn a_numeric(k: u32, tau: f64) -> f64 {
    let k = k as i32;
    let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
    ((1.0 - tau * tau) / (1.0 + tau * tau)) * (tau.powi(-k) + sign * tau.powi(k))
}

fn sign_of(n: i64) -> i64 {
    match n.cmp(&0) {
        std::cmp::Ordering::Greater => 1,
        std::cmp::Ordering::Equal => 0,
        std::cmp::Ordering::Less => -1,
    }
}

/// The difference-reflection image of X:
/// (Xhat f)_n = tau^{(l(w_{n-1}) - l(w_n))(1 + eta(w_{un}))} f_{n-1}
///   + sign(n) sum_{v < w_n} tau^{-(l(w_n)-l(v))} a(l(w_n)-l(v)) f_{v (n - sign n)_+}.
pub fn apply_xhat(
    f: &LatticeFunction,
    cfg: &LatticeConfig,
    convention: XhatConvention,
) -> LatticeFunction {
    let g = f.clone();
    let cfg = *cfg;
    let tau = cfg.tau();
    LatticeFunction::new(move |n| {
        let wn = chamber_map(n, &cfg);
        let pn = wn.length() as i64;
        let pm = chamber_length(n - 1, &cfg) as i64;
        let eta_un = chamber_map(cfg.period() - n, &cfg).eta() as i64;
        let mut acc = tau.powi(((pm - pn) * (1 + eta_un)) as i32) * g.at(n - 1);
        let s = sign_of(n);
        if s != 0 {
            let base = alcove_point(n - s, &cfg);
            let mut sum = C64::new(0.0, 0.0);
            for v in wn.enumerate_strictly_less() {
                let k = wn.length() - v.length();
                let arg = match convention {
                    XhatConvention::AsPrinted => v.act(base, &cfg),
                    XhatConvention::Inverted => v.inverse().act(base, &cfg),
                };
                sum += tau.powi(-(k as i32)) * a_numeric(k, tau) * g.at(arg);
            }
            acc += (s as f64) * sum;
        }
        acc
    })
}

/// The inverse, from Xhat^{-1} = u Xhat u:
/// (Xhat^{-1} f)_n = tau^{(l(w_{n+1}) - l(w_n))(1 + eta(w_n))} f_{n+1}
///   - sign(n) sum_{v < w_n} tau^{-(l(w_n)-l(v))} a(l(w_n)-l(v)) f_{v (n - sign n)_+}.
pub fn apply_xhat_inv(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let g = f.clone();
    let cfg = *cfg;
    let tau = cfg.tau();
    LatticeFunction::new(move |n| {
        let wn = chamber_map(n, &cfg);
        let pn = wn.length() as i64;
        let pp = chamber_length(n + 1, &cfg) as i64;
        let eta_n = wn.eta() as i64;
        let mut acc = tau.powi(((pp - pn) * (1 + eta_n)) as i32) * g.at(n + 1);
        let s = sign_of(n);
        if s != 0 {
            let base = alcove_point(n - s, &cfg);
            let mut sum = C64::new(0.0, 0.0);
            for v in wn.enumerate_strictly_less() {
                let k = wn.length() - v.length();
                sum += tau.powi(-(k as i32)) * a_numeric(k, tau) * g.at(v.act(base, &cfg));
            }
            acc -= (s as f64) * sum;
        }
        acc
    })
}

/// Hopping coefficient a_n of the Laplacian: tau^2 on positive multiples of
/// M, 1 elsewhere.
pub fn laplacian_a(n: i64, cfg: &LatticeConfig) -> f64 {
    if n > 0 && n % cfg.period() == 0 {
        cfg.tau() * cfg.tau()
    } else {
        1.0
    }
}

/// Hopping coefficient b_n: tau^2 on nonpositive multiples of M, 1 elsewhere.
pub fn laplacian_b(n: i64, cfg: &LatticeConfig) -> f64 {
    if n <= 0 && n % cfg.period() == 0 {
        cfg.tau() * cfg.tau()
    } else {
        1.0
    }
}

/// The deformed discrete Laplacian (L f)_n = a_n f_{n+1} + b_n f_{n-1},
/// equal to Xhat + Xhat^{-1}.
pub fn apply_l(f: &LatticeFunction, cfg: &LatticeConfig) -> LatticeFunction {
    let g = f.clone();
    let cfg = *cfg;
    let eval = move |n: i64| laplacian_a(n, &cfg) * g.at(n + 1) + laplacian_b(n, &cfg) * g.at(n - 1);
    match f.support() {
        Some((lo, hi)) => LatticeFunction::with_support(eval, lo - 1, hi + 1),
        None => LatticeFunction::new(eval),
    }
}

/// The orbit weight delta_n = tau^{2 l(w_n)}.
pub fn delta_weight(n: i64, cfg: &LatticeConfig) -> f64 {
    cfg.tau().powi(2 * chamber_length(n, cfg) as i32)
}

/// The weighted inner product <f, g> = sum_n f_n conj(g_n) delta_n over
/// finitely supported functions.
pub fn inner_delta(
    f: &LatticeFunction,
    g: &LatticeFunction,
    cfg: &LatticeConfig,
    support_bound: i64,
) -> Result<C64, LatticeError> {
    let (flo, fhi) = f.support().ok_or(LatticeError::UnboundedSupport)?;
    let (glo, ghi) = g.support().ok_or(LatticeError::UnboundedSupport)?;
    for (lo, hi) in [(flo, fhi), (glo, ghi)] {
        if lo < -support_bound || hi > support_bound {
            return Err(LatticeError::SupportExceedsBound { lo, hi, bound: support_bound });
        }
    }
    let lo = flo.min(glo);
    let hi = fhi.max(ghi);
    let mut acc = C64::new(0.0, 0.0);
    for n in lo..=hi {
        acc += f.at(n) * g.at(n).conj() * delta_weight(n, cfg);
    }
    Ok(acc)
}
