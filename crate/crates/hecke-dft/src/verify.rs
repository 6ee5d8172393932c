//! Named verification suites over every identity the crate implements.
//!
//! Each suite produces a list of check results with measured deviations and
//! the tolerance they were held to; the CLI renders them and the acceptance
//! tests assert on them.  Symbolic checks are exact and carry a zero
//! tolerance.

use crate::daha::{self, a_coeff, multiply, AlgebraElement};
use crate::lattice::{
    apply_d, apply_i, apply_i_s0, apply_i_w, apply_j, apply_jcal, apply_l, apply_that, apply_u,
    apply_xhat, apply_xhat_inv, chamber_precedes, delta_weight, inner_delta, invert_jcal,
    laplacian_a, laplacian_b, C64, LatticeFunction, XhatConvention,
};
use crate::spectral::{
    bethe_v_prime, c_function, phi_lattice, phi_xi, phi_xi_cform, spherical_lattice, theta,
    theta_integral, SpectrumTable,
};
use crate::transform::{
    dense_laplacian, hl_quadrature, laplacian_eigenvalues, KernelMatrix, Signal,
};
use crate::weyl::{
    alcove_point, chamber_length, chamber_map, Generator, LatticeConfig, WeylElement,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::f64::consts::PI;

/// Tolerances pinned per suite.  Exact symbolic checks use 0.
pub const TOL_REPS: f64 = 1e-12;
/// Compositions that cancel lowering coefficients of size tau^{-2 depth}
/// back to order one accumulate roundoff far beyond the single-application
/// identities; their tolerance reflects the measured growth (worst observed
/// 1e-8 at tau = 0.25 on the |n| <= 48 window).
pub const TOL_COMPOSED_CANCELLATION: f64 = 1e-6;
pub const TOL_INTERTWINER: f64 = 1e-12;
pub const TOL_UNITARITY: f64 = 1e-12;
pub const TOL_WEIGHT_ORBIT: f64 = 1e-14;
/// Reflection invariance of the spherical function on the |n| <= 4M window;
/// see the note where it is measured.
pub const TOL_INVARIANCE: f64 = 1e-3;
pub const TOL_ROOT_SYMMETRY: f64 = 1e-12;
pub const TOL_BETHE_RESIDUAL: f64 = 1e-10;
pub const TOL_MIDPOINT: f64 = 1e-13;
pub const TOL_EIGEN_ORACLE: f64 = 1e-9;
pub const TOL_EIGEN_EQUATION: f64 = 1e-10;
pub const TOL_ORTHO: f64 = 1e-10;
pub const TOL_ROUNDTRIP: f64 = 1e-10;
pub const TOL_PARSEVAL: f64 = 1e-10;
pub const TOL_PARITY: f64 = 1e-10;
pub const TOL_CROSS_REP: f64 = 1e-10;
pub const TOL_LIMIT_XI: f64 = 1e-5;
pub const TOL_LIMIT_PHI: f64 = 1e-4;
pub const TOL_LIMIT_WEIGHT: f64 = 1e-4;
pub const TOL_LIMIT_FORWARD: f64 = 1e-4;
pub const TOL_QUADRATURE: f64 = 1e-8;

/// Parameters of the degeneration check: tau = 1 - 1e-6 on the M = 8 alcove.
pub const LIMIT_TAU: f64 = 1.0 - 1e-6;
pub const LIMIT_PERIOD: i64 = 8;

/// One named check: measured deviation against its tolerance.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub max_dev: f64,
    pub tol: f64,
    pub exact: bool,
    pub pass: bool,
    pub note: Option<String>,
}

impl CheckResult {
    fn numeric(name: &str, max_dev: f64, tol: f64) -> Self {
        CheckResult {
            name: name.to_string(),
            max_dev,
            tol,
            exact: false,
            pass: max_dev <= tol,
            note: None,
        }
    }

    fn exact(name: &str, pass: bool) -> Self {
        CheckResult {
            name: name.to_string(),
            max_dev: if pass { 0.0 } else { 1.0 },
            tol: 0.0,
            exact: true,
            pass,
            note: None,
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }
}

/// Result of one suite run.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Options shared by the suites.
#[derive(Debug, Clone, Default)]
pub struct VerifyOptions {
    /// Half-width of the lattice window; defaults to 6M.
    pub window: Option<i64>,
    pub seed: u64,
    /// Tolerance overrides keyed by check name or by suite name.
    pub tol_overrides: BTreeMap<String, f64>,
    /// Test hook: perturb one kernel entry to demonstrate failure detection.
    pub tamper_kernel: bool,
}

impl VerifyOptions {
    fn window_for(&self, cfg: &LatticeConfig) -> i64 {
        self.window.unwrap_or(6 * cfg.period())
    }

    fn tol(&self, name: &str, default: f64) -> f64 {
        self.tol_overrides.get(name).copied().unwrap_or(default)
    }
}

/// The named suites, matching the command-line surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteKind {
    Daha,
    Reps,
    Intertwiner,
    Unitarity,
    Spectrum,
    Orthogonality,
    Limit,
    Quadrature,
}

impl SuiteKind {
    pub const ALL: [SuiteKind; 8] = [
        SuiteKind::Daha,
        SuiteKind::Reps,
        SuiteKind::Intertwiner,
        SuiteKind::Unitarity,
        SuiteKind::Spectrum,
        SuiteKind::Orthogonality,
        SuiteKind::Limit,
        SuiteKind::Quadrature,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteKind::Daha => "daha",
            SuiteKind::Reps => "reps",
            SuiteKind::Intertwiner => "intertwiner",
            SuiteKind::Unitarity => "unitarity",
            SuiteKind::Spectrum => "spectrum",
            SuiteKind::Orthogonality => "orthogonality",
            SuiteKind::Limit => "limit",
            SuiteKind::Quadrature => "quadrature",
        }
    }

    pub fn from_name(name: &str) -> Option<SuiteKind> {
        SuiteKind::ALL.iter().copied().find(|s| s.name() == name)
    }
}

/// Runs one suite for the given configuration.
///
/// Tolerance overrides are honored at two grains: an entry keyed by a check
/// name rewrites that check, one keyed by the suite name rewrites every
/// non-exact check of the suite that has no check-level entry.
pub fn run_suite(kind: SuiteKind, cfg: &LatticeConfig, opts: &VerifyOptions) -> SuiteReport {
    let mut checks = match kind {
        SuiteKind::Daha => daha_checks(opts),
        SuiteKind::Reps => reps_checks(cfg, opts),
        SuiteKind::Intertwiner => intertwiner_checks(cfg, opts),
        SuiteKind::Unitarity => unitarity_checks(cfg, opts),
        SuiteKind::Spectrum => spectrum_checks(cfg, opts),
        SuiteKind::Orthogonality => orthogonality_checks(cfg, opts),
        SuiteKind::Limit => limit_checks(opts),
        SuiteKind::Quadrature => quadrature_checks(opts),
    };
    if let Some(&suite_tol) = opts.tol_overrides.get(kind.name()) {
        for c in &mut checks {
            if !c.exact && !opts.tol_overrides.contains_key(&c.name) {
                c.tol = suite_tol;
                c.pass = c.max_dev <= suite_tol;
            }
        }
    }
    SuiteReport { suite: kind.name().to_string(), checks }
}

fn all_weyl_elements(max_len: u32) -> Vec<WeylElement> {
    let mut v = vec![WeylElement::identity(), WeylElement::u()];
    for l in 1..=max_len {
        for g in [Generator::S0, Generator::S1] {
            for r in [0u8, 1u8] {
                v.push(WeylElement::from_parts(r, l, Some(g)));
            }
        }
    }
    v
}

// ---------------------------------------------------------------------------
// daha: exact symbolic identities
// ---------------------------------------------------------------------------

fn daha_checks(_opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let t = AlgebraElement::t();
    let u = AlgebraElement::u();
    let one = AlgebraElement::one();
    let tau = crate::ratfun::RatFun::tau_pow(1);

    // (T - tau)(T + tau^{-1}) = 0
    let qa = &t - &one.scale(&tau);
    let qb = &t + &one.scale(&tau.inv());
    out.push(CheckResult::exact("quadratic-relation", multiply(&qa, &qb).is_zero()));

    out.push(CheckResult::exact("u-involution", multiply(&u, &u) == one));

    let uxu = multiply(&multiply(&u, &AlgebraElement::x(1)), &u);
    out.push(CheckResult::exact("u-x-conjugation", uxu == AlgebraElement::x(-1)));

    let ti = AlgebraElement::t_inv();
    let txt = multiply(&multiply(&ti, &AlgebraElement::x(1)), &ti);
    out.push(CheckResult::exact("t-x-braid", txt == AlgebraElement::x(-1)));

    out.push(CheckResult::exact("t-inverse", multiply(&t, &ti) == one));

    // classical commutation ladder for |k| <= 6
    let dt = crate::ratfun::RatFun::tau_minus_inv();
    let mut ladder_ok = true;
    for k in -6i64..=6 {
        let mut rhs = multiply(&AlgebraElement::x(-k), &t);
        if k != 0 {
            let sign = if k > 0 { 1 } else { -1 };
            for j in 0..k.abs() {
                rhs = &rhs
                    + &AlgebraElement::x(k.abs() - 2 * j)
                        .scale(&(&dt * &crate::ratfun::RatFun::from_int(sign)));
            }
        }
        ladder_ok &= rhs == AlgebraElement::basis_monomial(WeylElement::s1(), k);
    }
    out.push(CheckResult::exact("t-x-commutation-ladder", ladder_ok));

    // T_w T and T T_w absorption, letter-built against the closed rules
    let mut absorb_ok = true;
    for w in all_weyl_elements(6) {
        let tw = AlgebraElement::basis_monomial(w, 0);
        let letter_built = {
            let (r, word) = w.reduced_word();
            let mut acc = AlgebraElement::one();
            if r == 1 {
                acc = multiply(&acc, &u);
            }
            for g in word {
                let gen = match g {
                    Generator::S1 => t.clone(),
                    Generator::S0 => multiply(&multiply(&u, &t), &u),
                };
                acc = multiply(&acc, &gen);
            }
            acc
        };
        absorb_ok &= letter_built == tw;

        let ws = w.mul_gen(Generator::S1);
        let mut expect_right = AlgebraElement::basis_monomial(ws, 0);
        if w.eta() < 0 {
            expect_right = &expect_right + &tw.scale(&dt);
        }
        absorb_ok &= multiply(&tw, &t) == expect_right;

        let sw = w.inverse().mul_gen(Generator::S1).inverse();
        let mut expect_left = AlgebraElement::basis_monomial(sw, 0);
        if w.inverse().eta() < 0 {
            expect_left = &expect_left + &tw.scale(&dt);
        }
        absorb_ok &= multiply(&t, &tw) == expect_left;
    }
    out.push(CheckResult::exact("t-absorption-rules", absorb_ok));

    // full commutation of X^{eps} past T_w, exhaustive to length 6
    let mut comm_ok = true;
    for w in all_weyl_elements(6) {
        for eps in [1i64, -1] {
            comm_ok &= daha::verify_x_commutation(&w, eps);
        }
    }
    out.push(CheckResult::exact("x-commutation-exhaustive", comm_ok));

    // a(k-2) - (tau - tau^{-1}) a(k-1) = a(k)
    let mut rec_ok = true;
    for k in 2i64..=12 {
        rec_ok &= &a_coeff(k - 2) - &(&dt * &a_coeff(k - 1)) == a_coeff(k);
    }
    out.push(CheckResult::exact("lowering-recursion", rec_ok));

    // X + X^{-1} is central on basis monomials with l(w) <= 4, |k| <= 3
    let z = &AlgebraElement::x(1) + &AlgebraElement::x(-1);
    let mut central_ok = true;
    for w in all_weyl_elements(4) {
        for k in -3i64..=3 {
            let mono = AlgebraElement::basis_monomial(w, k);
            central_ok &= multiply(&z, &mono) == multiply(&mono, &z);
        }
    }
    out.push(CheckResult::exact("center-commutes", central_ok));

    out
}

// ---------------------------------------------------------------------------
// shared numeric helpers
// ---------------------------------------------------------------------------

fn random_supported(rng: &mut ChaCha8Rng, radius: i64) -> LatticeFunction {
    let values: Vec<C64> = (0..2 * radius + 1)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    LatticeFunction::from_values(-radius, values)
}

/// Max pointwise deviation between two functions over |n| <= window,
/// normalized by the largest magnitude of the reference.
fn rel_dev(a: &LatticeFunction, b: &LatticeFunction, window: i64) -> f64 {
    let mut dev = 0.0f64;
    let mut scale = 0.0f64;
    for n in -window..=window {
        dev = dev.max((a.at(n) - b.at(n)).norm());
        scale = scale.max(b.at(n).norm());
    }
    dev / scale.max(1e-300)
}

/// Max |residual(n)| over the window, normalized by the scale function.
fn residual_vs_scale(residual: &LatticeFunction, scale_fn: &LatticeFunction, window: i64) -> f64 {
    let mut dev = 0.0f64;
    let mut scale = 0.0f64;
    for n in -window..=window {
        dev = dev.max(residual.at(n).norm());
        scale = scale.max(scale_fn.at(n).norm());
    }
    dev / scale.max(1e-300)
}

// ---------------------------------------------------------------------------
// reps: the two representations satisfy the defining relations
// ---------------------------------------------------------------------------

fn reps_checks(cfg: &LatticeConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let window = opts.window_for(cfg);
    let tau = cfg.tau();
    let dt = tau - 1.0 / tau;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let trials = 20;

    let mut dev_that_quad = 0.0f64;
    let mut dev_uxu = 0.0f64;
    let mut dev_txt = 0.0f64;
    let mut dev_xx = 0.0f64;
    let mut dev_i_quad = 0.0f64;
    let mut dev_udu = 0.0f64;
    let mut dev_idi = 0.0f64;
    let mut dev_j = 0.0f64;
    let mut dev_is0 = 0.0f64;
    let mut dev_l = 0.0f64;
    let mut dev_l_closed = 0.0f64;

    for _ in 0..trials {
        let f = random_supported(&mut rng, 2 * cfg.period());

        // (That - tau)(That + tau^{-1}) = 0
        let tf = apply_that(&f, cfg);
        let ttf = apply_that(&tf, cfg);
        let quad = LatticeFunction::new({
            let (ttf, tf, f) = (ttf.clone(), tf.clone(), f.clone());
            move |n| ttf.at(n) - dt * tf.at(n) - f.at(n)
        });
        dev_that_quad = dev_that_quad.max(residual_vs_scale(&quad, &f, window));

        // u Xhat u = Xhat^{-1} = That^{-1} Xhat That^{-1}
        let xinv = apply_xhat_inv(&f, cfg);
        let uxu = apply_u(&apply_xhat(&apply_u(&f, cfg), cfg, XhatConvention::AsPrinted), cfg);
        dev_uxu = dev_uxu.max(rel_dev(&uxu, &xinv, window));

        let that_inv = |g: &LatticeFunction| {
            let tg = apply_that(g, cfg);
            let g = g.clone();
            LatticeFunction::new(move |n| tg.at(n) - dt * g.at(n))
        };
        let txt = that_inv(&apply_xhat(&that_inv(&f), cfg, XhatConvention::AsPrinted));
        dev_txt = dev_txt.max(rel_dev(&txt, &xinv, window));

        // Xhat Xhat^{-1} = id both ways
        let a = apply_xhat(&apply_xhat_inv(&f, cfg), cfg, XhatConvention::AsPrinted);
        let b = apply_xhat_inv(&apply_xhat(&f, cfg, XhatConvention::AsPrinted), cfg);
        dev_xx = dev_xx.max(rel_dev(&a, &f, window)).max(rel_dev(&b, &f, window));

        // (I - tau)(I + tau^{-1}) = 0
        let i_f = apply_i(&f, cfg);
        let iif = apply_i(&i_f, cfg);
        let iquad = LatticeFunction::new({
            let (iif, i_f, f) = (iif.clone(), i_f.clone(), f.clone());
            move |n| iif.at(n) - dt * i_f.at(n) - f.at(n)
        });
        dev_i_quad = dev_i_quad.max(residual_vs_scale(&iquad, &f, window));

        // u D u = D^{-1} = I^{-1} D I^{-1}
        let dinv = apply_d(&f, -1);
        let udu = apply_u(&apply_d(&apply_u(&f, cfg), 1), cfg);
        dev_udu = dev_udu.max(rel_dev(&udu, &dinv, window));
        let i_inv = |g: &LatticeFunction| {
            let ig = apply_i(g, cfg);
            let g = g.clone();
            LatticeFunction::new(move |n| ig.at(n) - dt * g.at(n))
        };
        let idi = i_inv(&apply_d(&i_inv(&f), 1));
        dev_idi = dev_idi.max(rel_dev(&idi, &dinv, window));

        // J^2 = J
        let jf = apply_j(&f);
        let jjf = apply_j(&jf);
        dev_j = dev_j.max(rel_dev(&jjf, &jf, window));

        // I_{s0} = u I u
        let lhs = apply_i_s0(&f, cfg);
        let rhs = apply_u(&apply_i(&apply_u(&f, cfg), cfg), cfg);
        dev_is0 = dev_is0.max(rel_dev(&lhs, &rhs, window));

        // L = Xhat + Xhat^{-1} and its closed two-term form
        let lf = apply_l(&f, cfg);
        let viasum = LatticeFunction::new({
            let xf = apply_xhat(&f, cfg, XhatConvention::AsPrinted);
            let xif = apply_xhat_inv(&f, cfg);
            move |n| xf.at(n) + xif.at(n)
        });
        dev_l = dev_l.max(rel_dev(&viasum, &lf, window));
        let closed = LatticeFunction::new({
            let f = f.clone();
            let cfg = *cfg;
            move |n| laplacian_a(n, &cfg) * f.at(n + 1) + laplacian_b(n, &cfg) * f.at(n - 1)
        });
        dev_l_closed = dev_l_closed.max(rel_dev(&closed, &lf, window));
    }

    vec![
        CheckResult::numeric("that-quadratic", dev_that_quad, opts.tol("that-quadratic", TOL_REPS)),
        CheckResult::numeric("u-xhat-conjugation", dev_uxu, opts.tol("u-xhat-conjugation", TOL_REPS)),
        CheckResult::numeric("that-xhat-braid", dev_txt, opts.tol("that-xhat-braid", TOL_REPS)),
        CheckResult::numeric("xhat-inverse-pair", dev_xx, opts.tol("xhat-inverse-pair", TOL_COMPOSED_CANCELLATION))
            .with_note("two lowering ladders cancel back to the identity; deviation is measured against the test function, not the large intermediates"),
        CheckResult::numeric("i-quadratic", dev_i_quad, opts.tol("i-quadratic", TOL_REPS)),
        CheckResult::numeric("u-shift-conjugation", dev_udu, opts.tol("u-shift-conjugation", TOL_REPS)),
        CheckResult::numeric("i-shift-braid", dev_idi, opts.tol("i-shift-braid", TOL_REPS)),
        CheckResult::numeric("summation-idempotent", dev_j, opts.tol("summation-idempotent", TOL_REPS)),
        CheckResult::numeric("i-s0-conjugation", dev_is0, opts.tol("i-s0-conjugation", TOL_REPS)),
        CheckResult::numeric("laplacian-as-sum", dev_l, opts.tol("laplacian-as-sum", TOL_REPS)),
        CheckResult::numeric("laplacian-closed-form", dev_l_closed, opts.tol("laplacian-closed-form", TOL_REPS)),
        cross_representation_check(opts),
    ]
}

/// Evaluates random symbolic products both as algebra elements and as
/// composed lattice operators in the integral-reflection picture; the two
/// routes must agree on random test functions.
fn cross_representation_check(opts: &VerifyOptions) -> CheckResult {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x5eed);
    let window = 12i64;
    let mut dev = 0.0f64;

    // apply a single monomial T_w X^k in the integral-reflection picture
    let apply_monomial = |w: &WeylElement, k: i64, f: &LatticeFunction, cfg: &LatticeConfig| {
        let mut g = f.clone();
        for _ in 0..k.abs() {
            g = apply_d(&g, if k > 0 { 1 } else { -1 });
        }
        apply_i_w(w, &g, cfg)
    };
    let apply_element = |e: &AlgebraElement, f: &LatticeFunction, cfg: &LatticeConfig| {
        let mut parts: Vec<(f64, LatticeFunction)> = Vec::new();
        for ((w, k), c) in e.terms() {
            parts.push((c.eval_f64(cfg.tau()), apply_monomial(w, *k, f, cfg)));
        }
        LatticeFunction::new(move |n| {
            parts.iter().map(|(c, g)| *c * g.at(n)).sum()
        })
    };

    let elements = all_weyl_elements(3);
    for trial in 0..50 {
        let w1 = elements[rng.gen_range(0..elements.len())];
        let w2 = elements[rng.gen_range(0..elements.len())];
        let k1 = rng.gen_range(-2i64..=2);
        let k2 = rng.gen_range(-2i64..=2);
        let e1 = AlgebraElement::basis_monomial(w1, k1);
        let e2 = AlgebraElement::basis_monomial(w2, k2);
        let prod = multiply(&e1, &e2);

        let tau = [0.25, 0.5, 0.75][trial % 3];
        let cfg = LatticeConfig::new(4, tau).unwrap();
        for _ in 0..10 {
            let f = random_supported(&mut rng, 6);
            let via_symbolic = apply_element(&prod, &f, &cfg);
            let e2f = apply_element(&e2, &f, &cfg);
            let via_composition = apply_element(&e1, &e2f, &cfg);
            dev = dev.max(rel_dev(&via_symbolic, &via_composition, window));
        }
    }
    CheckResult::numeric("cross-representation", dev, opts.tol("cross-representation", TOL_CROSS_REP))
}

// ---------------------------------------------------------------------------
// intertwiner
// ---------------------------------------------------------------------------

fn intertwiner_checks(cfg: &LatticeConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let window = opts.window_for(cfg);
    let m = cfg.period();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(1));
    let trials = 10;

    let mut dev_that = 0.0f64;
    let mut dev_u = 0.0f64;
    let mut dev_x_printed = 0.0f64;
    let mut dev_x_inverted = 0.0f64;
    let mut dev_fundamental = 0.0f64;
    let mut dev_invert = 0.0f64;
    let mut dev_conjugated = 0.0f64;

    for _ in 0..trials {
        let f = random_supported(&mut rng, 2 * m);

        let jf = apply_jcal(&f, cfg);

        // That Jcal = Jcal I
        let lhs = apply_that(&jf, cfg);
        let rhs = apply_jcal(&apply_i(&f, cfg), cfg);
        dev_that = dev_that.max(rel_dev(&lhs, &rhs, window));

        // u Jcal = Jcal u
        let lhs = apply_u(&jf, cfg);
        let rhs = apply_jcal(&apply_u(&f, cfg), cfg);
        dev_u = dev_u.max(rel_dev(&lhs, &rhs, window));

        // Xhat Jcal = Jcal D under both lowering-index conventions
        let jd = apply_jcal(&apply_d(&f, 1), cfg);
        let xp = apply_xhat(&jf, cfg, XhatConvention::AsPrinted);
        let xi = apply_xhat(&jf, cfg, XhatConvention::Inverted);
        dev_x_printed = dev_x_printed.max(rel_dev(&xp, &jd, window));
        dev_x_inverted = dev_x_inverted.max(rel_dev(&xi, &jd, window));

        // identity on the fundamental alcove
        for n in 0..=m {
            let d = (jf.at(n) - f.at(n)).norm();
            dev_fundamental = dev_fundamental.max(d);
        }

        // triangular solve inverts the intertwiner
        let solved = invert_jcal(&jf, cfg, 2 * m, None).expect("solvable window");
        let mut d = 0.0f64;
        let mut s = 0.0f64;
        for n in -2 * m..=2 * m {
            d = d.max((solved.at(n).unwrap() - f.at(n)).norm());
            s = s.max(f.at(n).norm());
        }
        dev_invert = dev_invert.max(d / s.max(1e-300));

        // Xhat agrees with the conjugated shift Jcal D Jcal^{-1} on the
        // interior of the window; the inverse is solved with enough margin
        // that the shift never reads outside the solved region
        let g = random_supported(&mut rng, m);
        let pre = invert_jcal(&g, cfg, 4 * m + 2, None).expect("solvable window");
        let conj = apply_jcal(&apply_d(&pre.to_lattice(), 1), cfg);
        let direct = apply_xhat(&g, cfg, XhatConvention::AsPrinted);
        dev_conjugated = dev_conjugated.max(rel_dev(&conj, &direct, 2 * m));
    }

    // triangularity of the intertwiner on indicators
    let tri_window = 3 * m;
    let mut dev_tri = 0.0f64;
    let tau = cfg.tau();
    for k in -tri_window..=tri_window {
        let col = apply_jcal(&LatticeFunction::indicator(k), cfg);
        for n in -tri_window..=tri_window {
            let v = col.at(n);
            if k == n {
                let lead = tau.powi(-2 * (chamber_length(n, cfg) as i32));
                dev_tri = dev_tri.max((v - C64::new(lead, 0.0)).norm() / lead);
            } else if !chamber_precedes(k, n, cfg) {
                dev_tri = dev_tri.max(v.norm());
            }
        }
    }
    // leading coefficient of (I_{w_n} f)_{n_+} is tau^{-l(w_n)}
    let mut dev_lead = 0.0f64;
    for n in -tri_window..=tri_window {
        let iw = apply_i_w(&chamber_map(n, cfg), &LatticeFunction::indicator(n), cfg);
        let lead = iw.at(alcove_point(n, cfg));
        let expect = tau.powi(-(chamber_length(n, cfg) as i32));
        dev_lead = dev_lead.max((lead - C64::new(expect, 0.0)).norm() / expect);
    }

    let convention_note = match (dev_x_printed <= TOL_INTERTWINER, dev_x_inverted <= TOL_INTERTWINER) {
        (true, true) => {
            "both lowering-index conventions satisfy the shift intertwining relation \
             (the lowering set is inverse-closed); the printed form is the default"
        }
        (true, false) => "only the printed convention is consistent",
        (false, true) => "only the inverted convention is consistent",
        (false, false) => "neither convention is consistent",
    };

    vec![
        CheckResult::numeric("that-intertwining", dev_that, opts.tol("that-intertwining", TOL_INTERTWINER)),
        CheckResult::numeric("u-intertwining", dev_u, opts.tol("u-intertwining", TOL_INTERTWINER)),
        CheckResult::numeric("shift-intertwining-printed", dev_x_printed, opts.tol("shift-intertwining-printed", TOL_INTERTWINER))
            .with_note(convention_note),
        CheckResult::numeric("shift-intertwining-inverted", dev_x_inverted, opts.tol("shift-intertwining-inverted", TOL_INTERTWINER)),
        CheckResult::numeric("fixes-fundamental-alcove", dev_fundamental, opts.tol("fixes-fundamental-alcove", TOL_INTERTWINER)),
        CheckResult::numeric("triangular-on-indicators", dev_tri, opts.tol("triangular-on-indicators", TOL_INTERTWINER)),
        CheckResult::numeric("leading-coefficient", dev_lead, opts.tol("leading-coefficient", TOL_INTERTWINER)),
        CheckResult::numeric("triangular-solve-inverts", dev_invert, opts.tol("triangular-solve-inverts", TOL_INTERTWINER)),
        CheckResult::numeric("conjugated-shift-agrees", dev_conjugated, opts.tol("conjugated-shift-agrees", TOL_INTERTWINER)),
    ]
}

// ---------------------------------------------------------------------------
// unitarity
// ---------------------------------------------------------------------------

fn unitarity_checks(cfg: &LatticeConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let m = cfg.period();
    let bound = 6 * m;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(2));
    let trials = 20;

    let mut dev_that = 0.0f64;
    let mut dev_u = 0.0f64;
    let mut dev_l = 0.0f64;
    for _ in 0..trials {
        let f = random_supported(&mut rng, 2 * m);
        let g = random_supported(&mut rng, 2 * m);
        let scale = inner_delta(&f, &f, cfg, bound).unwrap().norm().sqrt()
            * inner_delta(&g, &g, cfg, bound).unwrap().norm().sqrt();

        let lhs = inner_delta(&apply_that(&f, cfg), &g, cfg, bound).unwrap();
        let rhs = inner_delta(&f, &apply_that(&g, cfg), cfg, bound).unwrap();
        dev_that = dev_that.max((lhs - rhs).norm() / scale.max(1e-300));

        let lhs = inner_delta(&apply_u(&f, cfg), &g, cfg, bound).unwrap();
        let rhs = inner_delta(&f, &apply_u(&g, cfg), cfg, bound).unwrap();
        dev_u = dev_u.max((lhs - rhs).norm() / scale.max(1e-300));

        let lhs = inner_delta(&apply_l(&f, cfg), &g, cfg, bound).unwrap();
        let rhs = inner_delta(&f, &apply_l(&g, cfg), cfg, bound).unwrap();
        dev_l = dev_l.max((lhs - rhs).norm() / scale.max(1e-300));
    }

    // the exact hopping-weight identity behind self-adjointness:
    // a_n delta_n = b_{n+1} delta_{n+1}
    let mut dev_ab = 0.0f64;
    for n in -4 * m..=4 * m {
        let lhs = laplacian_a(n, cfg) * delta_weight(n, cfg);
        let rhs = laplacian_b(n + 1, cfg) * delta_weight(n + 1, cfg);
        dev_ab = dev_ab.max((lhs - rhs).abs() / lhs.abs().max(1e-300));
    }

    // node weights from orbit sums of the delta weights: Delta_n =
    // W_S(tau^2)^{-1} sum_{k in orbit(n)} delta_k with the geometric tail
    // restored analytically
    let tau = cfg.tau();
    let mut dev_orbit = 0.0f64;
    let max_len = 40u32;
    for n in 0..=m {
        let mut orbit: Vec<i64> = Vec::new();
        let reach = (max_len as i64 + 2) * m;
        for k in -reach..=reach {
            if (k - n).rem_euclid(2 * m) == 0 || (k + n).rem_euclid(2 * m) == 0 {
                orbit.push(k);
            }
        }
        let mut truncated = 0.0f64;
        let mut per_len = BTreeMap::new();
        for &k in &orbit {
            let l = chamber_length(k, cfg);
            if l <= max_len {
                truncated += delta_weight(k, cfg);
                *per_len.entry(l).or_insert(0u32) += 1;
            }
        }
        // orbit points per positive depth are constant (1 at the endpoints
        // of the alcove, 2 inside), so the tail sums in closed form
        let per_depth = *per_len.get(&1).unwrap_or(&1) as f64;
        let t2 = tau * tau;
        let tail = per_depth * t2.powi(max_len as i32 + 1) / (1.0 - t2);
        let ws_norm = (1.0 + t2) / (1.0 - t2);
        let reconstructed = (truncated + tail) / ws_norm;
        let expect = crate::spectral::node_weight(n, cfg);
        dev_orbit = dev_orbit.max((reconstructed - expect).abs());
    }

    vec![
        CheckResult::numeric("that-self-adjoint", dev_that, opts.tol("that-self-adjoint", TOL_UNITARITY)),
        CheckResult::numeric("u-self-adjoint", dev_u, opts.tol("u-self-adjoint", TOL_UNITARITY)),
        CheckResult::numeric("laplacian-self-adjoint", dev_l, opts.tol("laplacian-self-adjoint", TOL_UNITARITY)),
        CheckResult::numeric("hopping-weight-identity", dev_ab, opts.tol("hopping-weight-identity", TOL_UNITARITY)),
        CheckResult::numeric("node-weight-orbit-sum", dev_orbit, opts.tol("node-weight-orbit-sum", TOL_WEIGHT_ORBIT)),
    ]
}

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

fn spectrum_checks(cfg: &LatticeConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let m = cfg.period();
    let tau = cfg.tau();
    let mut out = Vec::new();

    let table = match SpectrumTable::compute(cfg) {
        Ok(t) => t,
        Err(e) => {
            return vec![CheckResult::exact("spectrum-computes", false)
                .with_note(format!("spectrum construction failed: {e}"))];
        }
    };

    // ordering and confinement to (0, pi)
    let mut ordered = table.points()[0].xi > 0.0 && table.points()[m as usize].xi < PI;
    for w in table.points().windows(2) {
        ordered &= w[0].xi < w[1].xi;
    }
    out.push(CheckResult::exact("roots-strictly-ordered", ordered));

    let mut dev_sym = 0.0f64;
    for mm in 0..=m as usize {
        dev_sym = dev_sym
            .max((table.points()[m as usize - mm].xi - (PI - table.points()[mm].xi)).abs());
    }
    out.push(CheckResult::numeric("root-reflection-symmetry", dev_sym, opts.tol("root-reflection-symmetry", TOL_ROOT_SYMMETRY)));

    let mut dev_bethe = 0.0f64;
    let mut parity_ok = true;
    for p in table.points() {
        dev_bethe = dev_bethe.max(crate::spectral::reflection_residual(p.xi, p.parity, cfg));
        parity_ok &= p.parity == if p.m % 2 == 0 { 1 } else { -1 };
    }
    out.push(CheckResult::numeric("reflection-equation-residual", dev_bethe, opts.tol("reflection-equation-residual", TOL_BETHE_RESIDUAL)));
    out.push(CheckResult::exact("parity-pattern", parity_ok));

    if m % 2 == 0 {
        let dev = (table.points()[(m / 2) as usize].xi - PI / 2.0).abs();
        out.push(CheckResult::numeric("midpoint-root", dev, opts.tol("midpoint-root", TOL_MIDPOINT)));
    }

    // monotone counting function certifies the bracketing
    let mut vp_min = f64::INFINITY;
    for i in 0..10_000 {
        let xi = i as f64 * PI / 9_999.0;
        vp_min = vp_min.min(bethe_v_prime(xi, cfg));
    }
    out.push(CheckResult::exact("counting-function-monotone", vp_min > m as f64));

    // phase function against its integral form
    let mut dev_theta = 0.0f64;
    for xi in [0.3, 1.1, 2.2, 3.0] {
        dev_theta = dev_theta.max((theta(xi, tau) - theta_integral(xi, tau)).abs());
    }
    out.push(CheckResult::numeric("phase-integral-crosscheck", dev_theta, opts.tol("phase-integral-crosscheck", 1e-8)));

    // Hall-Littlewood evaluation: recurrence vs plane-wave form
    let mut dev_phi = 0.0f64;
    for p in table.points() {
        for n in -10..=10i64 {
            let a = phi_xi(p.xi, n, tau);
            let b = phi_xi_cform(p.xi, n, tau).expect("roots lie inside (0, pi)");
            dev_phi = dev_phi.max((C64::new(a, 0.0) - b).norm());
            dev_phi = dev_phi.max(b.im.abs());
        }
    }
    out.push(CheckResult::numeric("hall-littlewood-two-forms", dev_phi, opts.tol("hall-littlewood-two-forms", TOL_ROOT_SYMMETRY)));

    // dual weight: the two published routes (already enforced at
    // construction) plus the origin sum rule
    let phi0 = 1.0 + tau * tau;
    let total: f64 = table.points().iter().map(|p| phi0 * phi0 * p.dual_weight).sum();
    out.push(CheckResult::numeric("dual-weight-sum-rule", (total - phi0).abs(), opts.tol("dual-weight-sum-rule", TOL_ROOT_SYMMETRY)));

    // c-function pairing identity at the roots
    let mut dev_c = 0.0f64;
    for p in table.points() {
        let cp = c_function(p.xi, tau).expect("no pole at interior roots");
        let cm = c_function(-p.xi, tau).expect("no pole at interior roots");
        dev_c = dev_c.max((cp + cm - C64::new(phi0, 0.0)).norm());
    }
    out.push(CheckResult::numeric("c-function-pairing", dev_c, opts.tol("c-function-pairing", TOL_ROOT_SYMMETRY)));

    // linear-algebra oracle: eigenvalues of the weighted-symmetrized dense
    // Laplacian match 2 cos(xi_m)
    let mut expect: Vec<f64> = table.points().iter().map(|p| p.eigenvalue).collect();
    expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let got = laplacian_eigenvalues(cfg);
    let dev_eig = got
        .iter()
        .zip(&expect)
        .map(|(g, e)| (g - e).abs())
        .fold(0.0f64, f64::max);
    out.push(CheckResult::numeric("dense-eigenvalue-oracle", dev_eig, opts.tol("dense-eigenvalue-oracle", TOL_EIGEN_ORACLE)));

    // eigen-equation of the restricted Laplacian per mode
    let kernel = KernelMatrix::from_spectrum(&table);
    let mut dev_eigen_eq = 0.0f64;
    let s = kernel.size();
    let dense = dense_laplacian(cfg);
    for mm in 0..s {
        let row = kernel.row(mm);
        let scale = row.iter().fold(0.0f64, |a, &b| a.max(b.abs()));
        for n in 0..s {
            let mut lv = 0.0;
            for j in 0..s {
                lv += dense[n * s + j] * row[j];
            }
            let resid = (lv - table.points()[mm].eigenvalue * row[n]).abs();
            dev_eigen_eq = dev_eigen_eq.max(resid / scale);
        }
    }
    out.push(CheckResult::numeric("restricted-eigen-equation", dev_eigen_eq, opts.tol("restricted-eigen-equation", TOL_EIGEN_EQUATION)));

    // spherical functions at the roots: reflection invariance on the wide
    // lattice window.  The intertwined evaluation runs through chamber
    // compositions whose intermediates reach (|tau - 1/tau| window)^depth
    // while the invariant result stays of order one, so the certification
    // tolerance is set from the measured accumulation (worst 1e-4 at
    // tau = 0.25, M = 8), not from single-application roundoff.
    let mut dev_inv = 0.0f64;
    for p in table.points().iter().step_by((s / 3).max(1)) {
        let phi = spherical_lattice(p.xi, cfg);
        let mut scale = 0.0f64;
        for n in -4 * m..=4 * m {
            scale = scale.max(phi.at(n).norm());
        }
        for n in -4 * m..=4 * m {
            let v = phi.at(n);
            dev_inv = dev_inv.max((phi.at(-n) - v).norm() / scale);
            dev_inv = dev_inv.max((phi.at(2 * m - n) - v).norm() / scale);
            let u_val = phi.at(m - n);
            dev_inv = dev_inv.max((u_val - v * p.parity as f64).norm() / scale);
        }
    }
    out.push(
        CheckResult::numeric("spherical-reflection-invariance", dev_inv, opts.tol("spherical-reflection-invariance", TOL_INVARIANCE))
            .with_note("deep-chamber evaluation accumulates roundoff through large cancelling intermediates"),
    );

    // sharper certification at moderate depth: the intertwined plane-wave
    // construction matches the closed two-wave form through the alcove
    // representative, which is exactly reflection invariant
    let mut dev_cform = 0.0f64;
    for p in table.points().iter().step_by((s / 3).max(1)) {
        let phi = spherical_lattice(p.xi, cfg);
        let scale = (1.0 + tau * tau).max(2.0); // |phi| is bounded by its value at the origin scale
        for n in -2 * m..=2 * m {
            let expect = C64::new(phi_xi(p.xi, alcove_point(n, cfg), tau), 0.0);
            dev_cform = dev_cform.max((phi.at(n) - expect).norm() / scale);
        }
    }
    out.push(CheckResult::numeric("spherical-vs-two-wave-form", dev_cform, opts.tol("spherical-vs-two-wave-form", TOL_EIGEN_EQUATION)));

    let mut dev_that_eigen = 0.0f64;
    for xi in [0.7, 1.9] {
        let phi = spherical_lattice(xi, cfg);
        let tphi = apply_that(&phi, cfg);
        let mut scale = 0.0f64;
        for n in -2 * m..=2 * m {
            scale = scale.max(phi.at(n).norm());
        }
        for n in -2 * m..=2 * m {
            dev_that_eigen = dev_that_eigen.max((tphi.at(n) - tau * phi.at(n)).norm() / scale);
        }
    }
    out.push(CheckResult::numeric("spherical-that-eigenfunction", dev_that_eigen, opts.tol("spherical-that-eigenfunction", TOL_EIGEN_EQUATION)));

    // kernel entries agree with the intertwined plane-wave construction
    let mut dev_kernel = 0.0f64;
    for p in table.points().iter().step_by((s / 3).max(1)) {
        let phi_fn = phi_lattice(p.xi, cfg);
        let jphi = apply_jcal(&phi_fn, cfg);
        for n in 0..=m {
            let direct = kernel.phi(p.m, n as usize);
            dev_kernel = dev_kernel.max((jphi.at(n) - C64::new(direct, 0.0)).norm());
        }
    }
    out.push(CheckResult::numeric("kernel-vs-intertwined-wave", dev_kernel, opts.tol("kernel-vs-intertwined-wave", TOL_EIGEN_EQUATION)));

    out
}

// ---------------------------------------------------------------------------
// orthogonality / Plancherel
// ---------------------------------------------------------------------------

fn orthogonality_checks(cfg: &LatticeConfig, opts: &VerifyOptions) -> Vec<CheckResult> {
    let table = match SpectrumTable::compute(cfg) {
        Ok(t) => t,
        Err(e) => {
            return vec![CheckResult::exact("spectrum-computes", false)
                .with_note(format!("spectrum construction failed: {e}"))];
        }
    };
    let mut kernel = KernelMatrix::from_spectrum(&table);
    if opts.tamper_kernel {
        kernel.tamper(0, 0, 1e-3);
    }
    let s = kernel.size();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(3));

    let report = kernel.verify_orthogonality();
    let mut out = vec![
        CheckResult::numeric("gram-rows", report.row_deviation, opts.tol("gram-rows", TOL_ORTHO)),
        CheckResult::numeric("gram-columns", report.col_deviation, opts.tol("gram-columns", TOL_ORTHO)),
        CheckResult::numeric("weighted-kernel-orthogonal", report.weighted_deviation, opts.tol("weighted-kernel-orthogonal", TOL_ORTHO)),
    ];

    let mut dev_rt = 0.0f64;
    let mut dev_parseval = 0.0f64;
    for _ in 0..100 {
        let f = Signal::new(
            (0..s)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        );
        let fhat = kernel.forward(&f).unwrap();
        let back = kernel.inverse(&fhat).unwrap();
        dev_rt = dev_rt.max(back.max_dev(&f) / f.max_abs().max(1e-300));

        let g = Signal::new(
            (0..s)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        );
        let ghat = kernel.forward(&g).unwrap();
        let lhs = kernel.inner_node(&f, &g);
        let rhs = kernel.inner_dual(&fhat, &ghat);
        dev_parseval = dev_parseval.max((lhs - rhs).norm() / lhs.norm().max(1e-300));
    }
    out.push(CheckResult::numeric("forward-inverse-roundtrip", dev_rt, opts.tol("forward-inverse-roundtrip", TOL_ROUNDTRIP)));
    out.push(CheckResult::numeric("plancherel-identity", dev_parseval, opts.tol("plancherel-identity", TOL_PARSEVAL)));

    // parity blocks
    let mut dev_parity = 0.0f64;
    for _ in 0..20 {
        let f = Signal::new(
            (0..s)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        );
        let (even, odd) = kernel.parity_split(&f).unwrap();
        let ehat = kernel.forward(&even).unwrap();
        let ohat = kernel.forward(&odd).unwrap();
        for mode in 0..s {
            if mode % 2 == 1 {
                dev_parity = dev_parity.max(ehat.values()[mode].norm());
            } else {
                dev_parity = dev_parity.max(ohat.values()[mode].norm());
            }
        }
    }
    out.push(CheckResult::numeric("parity-block-structure", dev_parity, opts.tol("parity-block-structure", TOL_PARITY)));

    // diagonalization: inverse(E . forward(f)) = dense L f
    let dense = dense_laplacian(cfg);
    let mut dev_diag = 0.0f64;
    for _ in 0..20 {
        let f = Signal::new(
            (0..s)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        );
        let fhat = kernel.forward(&f).unwrap();
        let scaled = Signal::new(
            fhat.values()
                .iter()
                .enumerate()
                .map(|(mm, v)| v * table.points()[mm].eigenvalue)
                .collect(),
        );
        let via_transform = kernel.inverse(&scaled).unwrap();
        let mut direct = vec![C64::new(0.0, 0.0); s];
        for n in 0..s {
            for j in 0..s {
                direct[n] += dense[n * s + j] * f.values()[j];
            }
        }
        let direct = Signal::new(direct);
        dev_diag = dev_diag.max(via_transform.max_dev(&direct) / direct.max_abs().max(1e-300));
    }
    out.push(CheckResult::numeric("transform-diagonalizes-laplacian", dev_diag, opts.tol("transform-diagonalizes-laplacian", TOL_ROUNDTRIP)));

    // eigenvalue gaps stay bounded away from zero
    let mut min_gap = f64::INFINITY;
    for w in table.points().windows(2) {
        min_gap = min_gap.min((w[1].eigenvalue - w[0].eigenvalue).abs());
    }
    out.push(CheckResult::exact("eigenvalues-nondegenerate", min_gap > 1e-12)
        .with_note(format!("minimum eigenvalue gap {min_gap:.3e}")));

    out
}

// ---------------------------------------------------------------------------
// limit: degeneration to the discrete cosine transform
// ---------------------------------------------------------------------------

fn limit_checks(opts: &VerifyOptions) -> Vec<CheckResult> {
    let cfg = LatticeConfig::new(LIMIT_PERIOD, LIMIT_TAU).unwrap();
    let m = LIMIT_PERIOD as usize;
    let table = SpectrumTable::compute(&cfg).unwrap();
    let kernel = KernelMatrix::from_spectrum(&table);

    // spectral nodes against the uniform cosine nodes m pi / M
    let mut dev_xi = 0.0f64;
    let mut worst = 0usize;
    for p in table.points() {
        let d = (p.xi - p.m as f64 * PI / m as f64).abs();
        if d > dev_xi {
            dev_xi = d;
            worst = p.m;
        }
    }
    let xi_note = format!(
        "worst mode m={worst}; endpoint nodes approach the cosine nodes at rate \
         sqrt((1-tau^2)/M) ~ {:.1e}, which exceeds this tolerance",
        ((1.0 - LIMIT_TAU * LIMIT_TAU) / m as f64).sqrt()
    );
    let mut xi_check =
        CheckResult::numeric("nodes-vs-cosine-nodes", dev_xi, opts.tol("nodes-vs-cosine-nodes", TOL_LIMIT_XI));
    if !xi_check.pass {
        xi_check = xi_check.with_note(xi_note);
    }

    // interior nodes converge much faster; recorded separately
    let mut dev_xi_interior = 0.0f64;
    for p in &table.points()[1..m] {
        dev_xi_interior = dev_xi_interior.max((p.xi - p.m as f64 * PI / m as f64).abs());
    }
    let interior_check = CheckResult::numeric(
        "interior-nodes-vs-cosine-nodes",
        dev_xi_interior,
        opts.tol("interior-nodes-vs-cosine-nodes", TOL_LIMIT_XI),
    );

    // kernel against the cosine kernel
    let mut dev_phi = 0.0f64;
    for mm in 0..=m {
        for n in 0..=m {
            let expect = 2.0 * (mm as f64 * n as f64 * PI / m as f64).cos();
            dev_phi = dev_phi.max((kernel.phi(mm, n) - expect).abs());
        }
    }

    // weights against the cosine-transform pattern
    let mut dev_w = 0.0f64;
    for (n, p) in table.points().iter().enumerate() {
        let expect = if n == 0 || n == m { 0.5 } else { 1.0 };
        dev_w = dev_w.max((2.0 * m as f64 * p.dual_weight - expect).abs());
    }

    // forward transform against a directly coded cosine sum
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(4));
    let f = Signal::new(
        (0..=m)
            .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect(),
    );
    let fhat = kernel.forward(&f).unwrap();
    let mut dev_fwd = 0.0f64;
    for mode in 0..=m {
        let mut acc = C64::new(0.0, 0.0);
        for n in 0..=m {
            let w = if n == 0 || n == m { 0.5 } else { 1.0 };
            acc += f.values()[n] * 2.0 * (mode as f64 * n as f64 * PI / m as f64).cos() * w;
        }
        dev_fwd = dev_fwd.max((fhat.values()[mode] - acc).norm());
    }

    vec![
        xi_check,
        interior_check,
        CheckResult::numeric("kernel-vs-cosine-kernel", dev_phi, opts.tol("kernel-vs-cosine-kernel", TOL_LIMIT_PHI)),
        CheckResult::numeric("dual-weights-vs-cosine-weights", dev_w, opts.tol("dual-weights-vs-cosine-weights", TOL_LIMIT_WEIGHT)),
        CheckResult::numeric("forward-vs-cosine-transform", dev_fwd, opts.tol("forward-vs-cosine-transform", TOL_LIMIT_FORWARD)),
    ]
}

// ---------------------------------------------------------------------------
// quadrature: continuous Hall-Littlewood orthogonality
// ---------------------------------------------------------------------------

fn quadrature_checks(opts: &VerifyOptions) -> Vec<CheckResult> {
    let mut dev = 0.0f64;
    for tau in [0.3, 0.5, 0.7] {
        for n in 0..=10i64 {
            for np in n..=10i64 {
                let val = hl_quadrature(n, np, tau, 64).expect("quadrature converges");
                let expect = if n != np {
                    0.0
                } else if n == 0 {
                    1.0 + tau * tau
                } else {
                    1.0
                };
                dev = dev.max((val - expect).abs());
            }
        }
    }
    vec![CheckResult::numeric("continuous-orthogonality", dev, opts.tol("continuous-orthogonality", TOL_QUADRATURE))]
}

/// Convenience: runs a suite over the standard parameter grid used by the
/// acceptance tests, returning one merged report with per-config check
/// names.
pub fn run_suite_grid(
    kind: SuiteKind,
    grid: &[(i64, f64)],
    opts: &VerifyOptions,
) -> SuiteReport {
    let mut checks = Vec::new();
    for &(m, tau) in grid {
        let cfg = LatticeConfig::new(m, tau).expect("valid grid entry");
        let rep = run_suite(kind, &cfg, opts);
        for mut c in rep.checks {
            c.name = format!("M={m},tau={tau}/{}", c.name);
            checks.push(c);
        }
    }
    SuiteReport { suite: kind.name().to_string(), checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn daha_suite_is_exact_and_green() {
        let report = run_suite(
            SuiteKind::Daha,
            &LatticeConfig::new(4, 0.5).unwrap(),
            &VerifyOptions::default(),
        );
        for c in &report.checks {
            assert!(c.exact);
            assert!(c.pass, "{} failed", c.name);
        }
    }

    #[test]
    fn numeric_suites_green_on_small_config() {
        let cfg = LatticeConfig::new(3, 0.5).unwrap();
        let opts = VerifyOptions { window: Some(12), ..Default::default() };
        for kind in [
            SuiteKind::Reps,
            SuiteKind::Intertwiner,
            SuiteKind::Unitarity,
            SuiteKind::Spectrum,
            SuiteKind::Orthogonality,
        ] {
            let report = run_suite(kind, &cfg, &opts);
            for c in &report.checks {
                assert!(c.pass, "[{}] {}: dev {} tol {}", report.suite, c.name, c.max_dev, c.tol);
            }
        }
    }

    #[test]
    fn tampering_is_detected() {
        let cfg = LatticeConfig::new(4, 0.5).unwrap();
        let opts = VerifyOptions { tamper_kernel: true, ..Default::default() };
        let report = run_suite(SuiteKind::Orthogonality, &cfg, &opts);
        assert!(!report.pass());
        assert!(report.checks.iter().any(|c| c.name.starts_with("gram") && !c.pass));
    }

    #[test]
    fn suite_names_round_trip() {
        for k in SuiteKind::ALL {
            assert_eq!(SuiteKind::from_name(k.name()), Some(k));
        }
        assert_eq!(SuiteKind::from_name("nope"), None);
    }
}
