//! Exact arithmetic in the field of rational functions in tau with integer
//! coefficients.
//!
//! Coefficients of the Hecke-algebra structure constants live in Q(tau)
//! rather than Laurent polynomials (the lowering coefficients carry a
//! denominator 1 + tau^2), so a full fraction field with canonical reduced
//! form is needed for decidable equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense polynomial in tau with arbitrary-precision integer coefficients.
/// `coeffs[i]` multiplies tau^i; no trailing zero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        IntPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        IntPoly::from_coeffs(vec![BigInt::from(c)])
    }

    /// c * tau^deg
    pub fn monomial(c: i64, deg: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = BigInt::from(c);
        IntPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    /// gcd of the coefficients, with the sign of the leading coefficient.
    fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().is_negative() {
            -g
        } else {
            g
        }
    }

    fn divide_scalar(&self, d: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| {
                    let (q, r) = c.div_rem(d);
                    debug_assert!(r.is_zero());
                    q
                })
                .collect(),
        )
    }

    fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        self.divide_scalar(&self.content())
    }

    fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Pseudo-remainder of self by rhs: lc(rhs)^(d+1) * self mod rhs in Z[tau].
    fn pseudo_rem(&self, rhs: &IntPoly) -> IntPoly {
        assert!(!rhs.is_zero());
        let mut rem = self.clone();
        let lc = rhs.leading().clone();
        while !rem.is_zero() && rem.degree() >= rhs.degree() {
            let shift = rem.degree() - rhs.degree();
            let top = rem.leading().clone();
            rem = rem.mul_scalar(&lc);
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|c| c * &top));
            rem = &rem - &IntPoly::from_coeffs(sub);
        }
        rem
    }

    /// gcd via the primitive Euclidean algorithm; result is primitive with
    /// positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    /// Exact division, panicking if the division leaves a remainder.
    pub fn div_exact(&self, rhs: &IntPoly) -> IntPoly {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut rem = self.clone();
        let mut quot = vec![BigInt::zero(); self.degree() - rhs.degree() + 1];
        while !rem.is_zero() && rem.degree() >= rhs.degree() {
            let shift = rem.degree() - rhs.degree();
            let (q, r) = rem.leading().div_rem(rhs.leading());
            assert!(r.is_zero(), "inexact polynomial division");
            quot[shift] = q.clone();
            let mut sub = vec![BigInt::zero(); shift];
            sub.extend(rhs.coeffs.iter().map(|c| c * &q));
            rem = &rem - &IntPoly::from_coeffs(sub);
        }
        assert!(rem.is_zero(), "inexact polynomial division");
        IntPoly::from_coeffs(quot)
    }

    pub fn eval_f64(&self, tau: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            // coefficients stay small enough for exact f64 conversion in
            // practice; conversion error is acceptable for numeric checks
            let cf = c.to_string().parse::<f64>().unwrap_or(f64::NAN);
            acc = acc * tau + cf;
        }
        acc
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        IntPoly::from_coeffs(out)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "t")?,
                1 => write!(f, "{a}*t")?,
                _ if a.is_one() => write!(f, "t^{i}")?,
                _ => write!(f, "{a}*t^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Reduced fraction of integer polynomials in tau.
///
/// Canonical form: gcd(num, den) = 1 as polynomials, the integer contents of
/// numerator and denominator are coprime, and the denominator has positive
/// leading coefficient.  Equality on canonical forms decides equality in
/// Q(tau).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatFun {
    num: IntPoly,
    den: IntPoly,
}

impl RatFun {
    pub fn new(num: IntPoly, den: IntPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFun { num, den: IntPoly::one() };
        }
        let g = num.gcd(&den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);
        let cg = num.content().gcd(&den.content());
        if !cg.is_one() {
            num = num.divide_scalar(&cg);
            den = den.divide_scalar(&cg);
        }
        if den.leading().is_negative() {
            num = -&num;
            den = -&den;
        }
        RatFun { num, den }
    }

    pub fn zero() -> Self {
        RatFun { num: IntPoly::zero(), den: IntPoly::one() }
    }

    pub fn one() -> Self {
        RatFun { num: IntPoly::one(), den: IntPoly::one() }
    }

    pub fn from_int(c: i64) -> Self {
        RatFun { num: IntPoly::constant(c), den: IntPoly::one() }
    }

    pub fn from_poly(p: IntPoly) -> Self {
        RatFun { num: p, den: IntPoly::one() }
    }

    /// tau^k for any integer k (negative powers go into the denominator).
    pub fn tau_pow(k: i64) -> Self {
        if k >= 0 {
            RatFun { num: IntPoly::monomial(1, k as usize), den: IntPoly::one() }
        } else {
            RatFun { num: IntPoly::one(), den: IntPoly::monomial(1, (-k) as usize) }
        }
    }

    /// tau - tau^{-1} = (tau^2 - 1) / tau
    pub fn tau_minus_inv() -> Self {
        RatFun::new(
            IntPoly::from_coeffs(vec![BigInt::from(-1), BigInt::zero(), BigInt::from(1)]),
            IntPoly::monomial(1, 1),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting zero");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn eval_f64(&self, tau: f64) -> f64 {
        self.num.eval_f64(tau) / self.den.eval_f64(tau)
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == IntPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tau() -> RatFun {
        RatFun::tau_pow(1)
    }

    #[test]
    fn canonical_reduction() {
        // (tau^2 - 1) / (tau - 1) = tau + 1
        let num = IntPoly::from_coeffs(vec![BigInt::from(-1), BigInt::zero(), BigInt::from(1)]);
        let den = IntPoly::from_coeffs(vec![BigInt::from(-1), BigInt::from(1)]);
        let r = RatFun::new(num, den);
        let expect = RatFun::from_poly(IntPoly::from_coeffs(vec![BigInt::one(), BigInt::one()]));
        assert_eq!(r, expect);

        // scalar contents reduce: 2 tau / 4 = tau / 2
        let r = RatFun::new(IntPoly::monomial(2, 1), IntPoly::constant(4));
        assert_eq!(r.numerator(), &IntPoly::monomial(1, 1));
        assert_eq!(r.denominator(), &IntPoly::constant(2));

        // denominator sign normalizes
        let r = RatFun::new(IntPoly::one(), IntPoly::constant(-3));
        assert_eq!(r.denominator(), &IntPoly::constant(3));
    }

    #[test]
    fn field_identities() {
        let t = tau();
        let a = &(&t * &t) - &RatFun::one(); // tau^2 - 1
        assert_eq!(&a * &a.inv(), RatFun::one());
        assert_eq!(&a + &(-&a), RatFun::zero());
        // tau - 1/tau
        let d = &t - &t.inv();
        assert_eq!(d, RatFun::tau_minus_inv());
    }

    #[test]
    fn eval_matches_structure() {
        let t = 0.37;
        let x = RatFun::tau_minus_inv();
        assert!((x.eval_f64(t) - (t - 1.0 / t)).abs() < 1e-14);
        let y = RatFun::new(
            IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::zero(), BigInt::from(-1)]),
            IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::zero(), BigInt::from(1)]),
        );
        assert!((y.eval_f64(t) - (1.0 - t * t) / (1.0 + t * t)).abs() < 1e-14);
    }

    fn arb_ratfun() -> impl Strategy<Value = RatFun> {
        (prop::collection::vec(-6i64..7, 1..4), prop::collection::vec(-6i64..7, 1..4))
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let den = IntPoly::from_coeffs(d.into_iter().map(BigInt::from).collect());
                if den.is_zero() {
                    return None;
                }
                let num = IntPoly::from_coeffs(n.into_iter().map(BigInt::from).collect());
                Some(RatFun::new(num, den))
            })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_ratfun(), b in arb_ratfun(), c in arb_ratfun()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn inverse_axiom(a in arb_ratfun()) {
            if !a.is_zero() {
                prop_assert_eq!(&a * &a.inv(), RatFun::one());
            }
        }
    }
}
