//! The finite deformed Fourier transform on the fundamental alcove: kernel
//! matrix, forward and inverse transforms, orthogonality reports, the dense
//! Laplacian eigen-oracle, the reflection-parity decomposition, and the
//! continuous orthogonality quadrature that the finite picture discretizes.

use crate::error::TransformError;
use crate::lattice::C64;
use crate::spectral::{phi_xi, SpectrumTable};
use crate::weyl::LatticeConfig;
use nalgebra::DMatrix;
use std::f64::consts::PI;

/// A complex signal on the alcove, indexed by n = 0..=M.
#[derive(Debug, Clone, PartialEq)]
pub struct Signal {
    values: Vec<C64>,
}

impl Signal {
    pub fn new(values: Vec<C64>) -> Self {
        Signal { values }
    }

    pub fn from_real(values: &[f64]) -> Self {
        Signal { values: values.iter().map(|&x| C64::new(x, 0.0)).collect() }
    }

    pub fn zeros(len: usize) -> Self {
        Signal { values: vec![C64::new(0.0, 0.0); len] }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[C64] {
        &self.values
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_dev(&self, other: &Signal) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// The (M+1) x (M+1) transform kernel Phi_{m;n} together with the node
/// weights Delta_n and the dual weights Dhat_m.  The weighted matrix
/// sqrt(Dhat_m) Phi_{m;n} sqrt(Delta_n) is orthogonal.
#[derive(Debug, Clone)]
pub struct KernelMatrix {
    cfg: LatticeConfig,
    phi: Vec<f64>, // row-major, rows indexed by mode m
    delta: Vec<f64>,
    delta_hat: Vec<f64>,
}

impl KernelMatrix {
    pub fn from_spectrum(table: &SpectrumTable) -> Self {
        let cfg = *table.cfg();
        let size = cfg.alcove_size();
        let tau = cfg.tau();
        let mut phi = vec![0.0; size * size];
        for (m, p) in table.points().iter().enumerate() {
            for n in 0..size {
                phi[m * size + n] = phi_xi(p.xi, n as i64, tau);
            }
        }
        KernelMatrix {
            cfg,
            phi,
            delta: table.node_weights().to_vec(),
            delta_hat: table.points().iter().map(|p| p.dual_weight).collect(),
        }
    }

    pub fn cfg(&self) -> &LatticeConfig {
        &self.cfg
    }

    pub fn size(&self) -> usize {
        self.cfg.alcove_size()
    }

    pub fn phi(&self, m: usize, n: usize) -> f64 {
        self.phi[m * self.size() + n]
    }

    pub fn row(&self, m: usize) -> &[f64] {
        let s = self.size();
        &self.phi[m * s..(m + 1) * s]
    }

    pub fn delta(&self) -> &[f64] {
        &self.delta
    }

    pub fn delta_hat(&self) -> &[f64] {
        &self.delta_hat
    }

    /// Test hook: perturbs a single kernel entry so downstream checks can
    /// demonstrate failure detection.
    pub fn tamper(&mut self, m: usize, n: usize, amount: f64) {
        let s = self.size();
        self.phi[m * s + n] += amount;
    }

    fn check_len(&self, s: &Signal) -> Result<(), TransformError> {
        if s.len() != self.size() {
            return Err(TransformError::LengthMismatch { got: s.len(), expected: self.size() });
        }
        Ok(())
    }

    /// Forward transform: fhat_m = sum_n f_n Phi_{m;n} Delta_n.  The kernel
    /// is real, so no conjugation appears.
    pub fn forward(&self, f: &Signal) -> Result<Signal, TransformError> {
        self.check_len(f)?;
        let s = self.size();
        let mut out = vec![C64::new(0.0, 0.0); s];
        for (m, o) in out.iter_mut().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for n in 0..s {
                acc += f.values[n] * self.phi(m, n) * self.delta[n];
            }
            *o = acc;
        }
        Ok(Signal::new(out))
    }

    /// Inverse transform: f_n = sum_m fhat_m Phi_{m;n} Dhat_m.
    pub fn inverse(&self, fhat: &Signal) -> Result<Signal, TransformError> {
        self.check_len(fhat)?;
        let s = self.size();
        let mut out = vec![C64::new(0.0, 0.0); s];
        for (n, o) in out.iter_mut().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for m in 0..s {
                acc += fhat.values[m] * self.phi(m, n) * self.delta_hat[m];
            }
            *o = acc;
        }
        Ok(Signal::new(out))
    }

    /// Weighted inner product sum_n f_n conj(g_n) Delta_n on the alcove.
    pub fn inner_node(&self, f: &Signal, g: &Signal) -> C64 {
        f.values
            .iter()
            .zip(&g.values)
            .zip(&self.delta)
            .map(|((a, b), w)| a * b.conj() * *w)
            .sum()
    }

    /// Weighted inner product sum_m f_m conj(g_m) Dhat_m on the dual side.
    pub fn inner_dual(&self, f: &Signal, g: &Signal) -> C64 {
        f.values
            .iter()
            .zip(&g.values)
            .zip(&self.delta_hat)
            .map(|((a, b), w)| a * b.conj() * *w)
            .sum()
    }

    /// Gram deviations of the kernel rows against the node weights and of
    /// the kernel columns against the dual weights.
    pub fn verify_orthogonality(&self) -> OrthogonalityReport {
        let s = self.size();
        let mut row_dev = 0.0f64;
        for m in 0..s {
            for mp in 0..s {
                let mut acc = 0.0;
                for n in 0..s {
                    acc += self.phi(m, n) * self.phi(mp, n) * self.delta[n];
                }
                let expect = if m == mp { 1.0 / self.delta_hat[m] } else { 0.0 };
                row_dev = row_dev.max((acc - expect).abs());
            }
        }
        let mut col_dev = 0.0f64;
        for n in 0..s {
            for np in 0..s {
                let mut acc = 0.0;
                for m in 0..s {
                    acc += self.phi(m, n) * self.phi(m, np) * self.delta_hat[m];
                }
                let expect = if n == np { 1.0 / self.delta[n] } else { 0.0 };
                col_dev = col_dev.max((acc - expect).abs());
            }
        }
        let mut weighted_dev = 0.0f64;
        for m in 0..s {
            for mp in 0..s {
                let mut acc = 0.0;
                for n in 0..s {
                    acc += (self.delta_hat[m] * self.delta_hat[mp]).sqrt()
                        * self.phi(m, n)
                        * self.phi(mp, n)
                        * self.delta[n];
                }
                let expect = if m == mp { 1.0 } else { 0.0 };
                weighted_dev = weighted_dev.max((acc - expect).abs());
            }
        }
        OrthogonalityReport { row_deviation: row_dev, col_deviation: col_dev, weighted_deviation: weighted_dev }
    }

    /// Splits a signal into its reflection-even and reflection-odd parts
    /// under (u f)_n = f_{M-n}; the forward transform sends them to the even
    /// and odd modes respectively.
    pub fn parity_split(&self, f: &Signal) -> Result<(Signal, Signal), TransformError> {
        self.check_len(f)?;
        let s = self.size();
        let mut even = vec![C64::new(0.0, 0.0); s];
        let mut odd = vec![C64::new(0.0, 0.0); s];
        for n in 0..s {
            let refl = f.values[s - 1 - n];
            even[n] = 0.5 * (f.values[n] + refl);
            odd[n] = 0.5 * (f.values[n] - refl);
        }
        Ok((Signal::new(even), Signal::new(odd)))
    }
}

/// Maximal Gram deviations of a kernel.
#[derive(Debug, Clone, Copy)]
pub struct OrthogonalityReport {
    pub row_deviation: f64,
    pub col_deviation: f64,
    pub weighted_deviation: f64,
}

/// The restriction of the Laplacian to the alcove in the standard basis:
/// tridiagonal with (1 + tau^2) couplings at the two boundary rows.
pub fn dense_laplacian(cfg: &LatticeConfig) -> Vec<f64> {
    let s = cfg.alcove_size();
    let boundary = 1.0 + cfg.tau() * cfg.tau();
    let mut a = vec![0.0; s * s];
    a[1] = boundary; // row 0
    a[(s - 1) * s + s - 2] = boundary; // row M
    for n in 1..s - 1 {
        a[n * s + n - 1] = 1.0;
        a[n * s + n + 1] = 1.0;
    }
    a
}

/// Eigenvalues of the restricted Laplacian, via conjugation by the square
/// root of the node weights (which symmetrizes the matrix) and a dense
/// symmetric eigensolver.  Serves as the linear-algebra oracle for the
/// Bethe spectrum.
pub fn laplacian_eigenvalues(cfg: &LatticeConfig) -> Vec<f64> {
    let s = cfg.alcove_size();
    let a = dense_laplacian(cfg);
    let sqrt_w: Vec<f64> =
        (0..s).map(|n| crate::spectral::node_weight(n as i64, cfg).sqrt()).collect();
    let sym = DMatrix::from_fn(s, s, |i, j| sqrt_w[i] * a[i * s + j] / sqrt_w[j]);
    let mut ev: Vec<f64> = sym.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.partial_cmp(b).unwrap());
    ev
}

/// Continuous orthogonality of the Hall-Littlewood polynomials:
/// (1/2pi) int_0^pi phi_xi(n) phi_xi(n') dxi / (c(xi) c(-xi)),
/// evaluated with the pole-free weight (2 - 2cos 2xi)/(1 + tau^4 - 2 tau^2
/// cos 2xi) and the trapezoid rule with panel doubling; the integrand is
/// analytic and periodic, so convergence is spectral.
pub fn hl_quadrature(n: i64, nprime: i64, tau: f64, points: usize) -> Result<f64, TransformError> {
    if n < 0 {
        return Err(TransformError::NegativeIndex(n));
    }
    if nprime < 0 {
        return Err(TransformError::NegativeIndex(nprime));
    }
    let integrand = |x: f64| {
        let s = x.sin();
        let weight = 4.0 * s * s / crate::spectral::weight_denominator(x, tau);
        phi_xi(x, n, tau) * phi_xi(x, nprime, tau) * weight / (2.0 * PI)
    };
    let trapezoid = |panels: usize| {
        let h = PI / panels as f64;
        let mut acc = 0.5 * (integrand(0.0) + integrand(PI));
        for i in 1..panels {
            acc += integrand(i as f64 * h);
        }
        acc * h
    };

    let max_points = 1 << 22;
    let mut panels = points.max(8);
    let mut prev = trapezoid(panels);
    while panels < max_points {
        panels *= 2;
        let cur = trapezoid(panels);
        if (cur - prev).abs() < 1e-10 {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(TransformError::QuadratureNotConverged { target: 1e-10, max_points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg(m: i64, tau: f64) -> LatticeConfig {
        LatticeConfig::new(m, tau).unwrap()
    }

    fn kernel(m: i64, tau: f64) -> KernelMatrix {
        KernelMatrix::from_spectrum(&SpectrumTable::compute(&cfg(m, tau)).unwrap())
    }

    fn random_signal(rng: &mut ChaCha8Rng, len: usize) -> Signal {
        Signal::new(
            (0..len)
                .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect(),
        )
    }

    #[test]
    fn dense_laplacian_small_case() {
        let c = cfg(2, 0.5);
        let a = dense_laplacian(&c);
        let b = 1.25;
        assert_eq!(a, vec![0.0, b, 0.0, 1.0, 0.0, 1.0, 0.0, b, 0.0]);
    }

    #[test]
    fn eigenvalues_match_bethe_spectrum() {
        for (m, tau) in [(2i64, 0.5), (6, 0.3), (11, 0.8)] {
            let c = cfg(m, tau);
            let table = SpectrumTable::compute(&c).unwrap();
            let mut expect: Vec<f64> = table.points().iter().map(|p| p.eigenvalue).collect();
            expect.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let got = laplacian_eigenvalues(&c);
            for (g, e) in got.iter().zip(&expect) {
                assert!((g - e).abs() < 1e-9, "M={m} tau={tau}: {g} vs {e}");
            }
        }
    }

    #[test]
    fn kernel_origin_column() {
        let k = kernel(5, 0.7);
        for m in 0..k.size() {
            assert!((k.phi(m, 0) - (1.0 + 0.49)).abs() < 1e-12);
        }
    }

    #[test]
    fn forward_of_kernel_rows() {
        let k = kernel(4, 0.5);
        for mp in 0..k.size() {
            let f = Signal::from_real(k.row(mp));
            let fhat = k.forward(&f).unwrap();
            for m in 0..k.size() {
                let expect = if m == mp { 1.0 / k.delta_hat()[mp] } else { 0.0 };
                assert!((fhat.values()[m] - C64::new(expect, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn zero_maps_to_zero() {
        let k = kernel(3, 0.4);
        let z = Signal::zeros(4);
        assert_eq!(k.forward(&z).unwrap(), z);
        assert_eq!(k.inverse(&z).unwrap(), z);
    }

    #[test]
    fn round_trip_and_parseval() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for (m, tau) in [(2i64, 0.25), (7, 0.5), (16, 0.9)] {
            let k = kernel(m, tau);
            for _ in 0..20 {
                let f = random_signal(&mut rng, k.size());
                let fhat = k.forward(&f).unwrap();
                let back = k.inverse(&fhat).unwrap();
                let scale = f.max_abs().max(1e-30);
                assert!(back.max_dev(&f) / scale < 1e-10, "M={m} tau={tau}");

                let g = random_signal(&mut rng, k.size());
                let ghat = k.forward(&g).unwrap();
                let lhs = k.inner_node(&f, &g);
                let rhs = k.inner_dual(&fhat, &ghat);
                assert!((lhs - rhs).norm() / lhs.norm().max(1e-30) < 1e-10);
            }
        }
    }

    #[test]
    fn unit_dual_vector_inverts_to_kernel_row() {
        let k = kernel(5, 0.6);
        for m in 0..k.size() {
            let e = Signal::new(
                (0..k.size())
                    .map(|i| if i == m { C64::new(1.0, 0.0) } else { C64::new(0.0, 0.0) })
                    .collect(),
            );
            let f = k.inverse(&e).unwrap();
            for n in 0..k.size() {
                let expect = k.phi(m, n) * k.delta_hat()[m];
                assert!((f.values()[n] - C64::new(expect, 0.0)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn orthogonality_report() {
        let k = kernel(4, 0.5);
        let r = k.verify_orthogonality();
        assert!(r.row_deviation < 1e-11, "row {}", r.row_deviation);
        assert!(r.col_deviation < 1e-11, "col {}", r.col_deviation);
        assert!(r.weighted_deviation < 1e-11);

        // tampering must surface in the report
        let mut bad = k.clone();
        bad.tamper(0, 0, 1e-3);
        assert!(bad.verify_orthogonality().row_deviation > 1e-5);
    }

    #[test]
    fn gram_diagonal_matches_c_function_norm() {
        // the midpoint row of the smallest alcove: its squared node-norm is
        // 2 c(pi/2) c(-pi/2) V'(pi/2)
        use crate::spectral::{bethe_v_prime, c_function};
        for tau in [0.3, 0.5, 0.8] {
            let c = cfg(2, tau);
            let k = kernel(2, tau);
            let mut gram = 0.0;
            for n in 0..3 {
                gram += k.phi(1, n) * k.phi(1, n) * k.delta()[n];
            }
            let half_pi = PI / 2.0;
            let cc = (c_function(half_pi, tau).unwrap() * c_function(-half_pi, tau).unwrap()).re;
            let expect = 2.0 * cc * bethe_v_prime(half_pi, &c);
            assert!((gram - expect).abs() < 1e-12, "tau={tau}: {gram} vs {expect}");
        }
    }

    #[test]
    fn parity_split_structure() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for m in [4i64, 5] {
            let k = kernel(m, 0.55);
            let s = k.size();

            let constant = Signal::from_real(&vec![1.0; s]);
            let (even, odd) = k.parity_split(&constant).unwrap();
            assert!(odd.max_abs() < 1e-15);
            assert!(even.max_dev(&constant) < 1e-15);

            let ramp: Vec<f64> = (0..s).map(|n| n as f64 - m as f64 / 2.0).collect();
            let (even, odd) = k.parity_split(&Signal::from_real(&ramp)).unwrap();
            assert!(even.max_abs() < 1e-15);
            assert!(odd.max_dev(&Signal::from_real(&ramp)) < 1e-15);

            let f = random_signal(&mut rng, s);
            let (even, odd) = k.parity_split(&f).unwrap();
            let ehat = k.forward(&even).unwrap();
            let ohat = k.forward(&odd).unwrap();
            for mode in 0..s {
                if mode % 2 == 1 {
                    assert!(ehat.values()[mode].norm() < 1e-10);
                } else {
                    assert!(ohat.values()[mode].norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn transform_degenerates_to_cosine_transform() {
        let tau = 1.0 - 1e-6;
        let m = 8usize;
        let k = kernel(m as i64, tau);
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let f = random_signal(&mut rng, m + 1);
        let fhat = k.forward(&f).unwrap();
        for mode in 0..=m {
            let mut acc = C64::new(0.0, 0.0);
            for n in 0..=m {
                let w = if n == 0 || n == m { 0.5 } else { 1.0 };
                acc += f.values()[n] * 2.0 * (mode as f64 * n as f64 * PI / m as f64).cos() * w;
            }
            assert!((fhat.values()[mode] - acc).norm() < 1e-4, "mode={mode}");
        }
    }

    #[test]
    fn quadrature_orthogonality() {
        assert!((hl_quadrature(0, 0, 0.5, 16).unwrap() - 1.25).abs() < 1e-10);
        assert!(hl_quadrature(3, 5, 0.5, 16).unwrap().abs() < 1e-8);
        assert!((hl_quadrature(4, 4, 0.5, 16).unwrap() - 1.0).abs() < 1e-8);
        assert!(hl_quadrature(-1, 0, 0.5, 16).is_err());
        assert!(hl_quadrature(0, -2, 0.5, 16).is_err());
    }

    #[test]
    fn shape_errors() {
        let k = kernel(4, 0.5);
        let short = Signal::zeros(3);
        assert!(matches!(
            k.forward(&short),
            Err(TransformError::LengthMismatch { got: 3, expected: 5 })
        ));
    }
}
