//! Exact arithmetic in the double affine Hecke algebra of type A1 at q = 1.
//!
//! Elements are finite linear combinations of the basis monomials T_w X^k
//! (w in the extended affine Weyl group, k an integer) with coefficients in
//! Q(tau).  Products reduce to the generator rules
//!
//!   (T - tau)(T + tau^{-1}) = 0,    U^2 = 1,    U X U = X^{-1},
//!
//! together with the commutation of X past T and the absorption of T into
//! the T_w basis; everything else is folded through these.

use crate::ratfun::{IntPoly, RatFun};
use crate::weyl::{Generator, WeylElement};
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// Basis monomial key: T_w X^k.
pub type Monomial = (WeylElement, i64);

/// Finite linear combination of T_w X^k with exact coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraElement {
    terms: BTreeMap<Monomial, RatFun>,
}

/// One generator letter in a product decomposition.
#[derive(Debug, Clone, Copy)]
enum Letter {
    T,
    U,
    X(i8), // +1 or -1
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        AlgebraElement::basis_monomial(WeylElement::identity(), 0)
    }

    /// Single basis monomial T_w X^k with coefficient 1.
    pub fn basis_monomial(w: WeylElement, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert((w, k), RatFun::one());
        AlgebraElement { terms }
    }

    /// The generator T = T_{s1}.
    pub fn t() -> Self {
        AlgebraElement::basis_monomial(WeylElement::s1(), 0)
    }

    /// The generator U.
    pub fn u() -> Self {
        AlgebraElement::basis_monomial(WeylElement::u(), 0)
    }

    /// X^k.
    pub fn x(k: i64) -> Self {
        AlgebraElement::basis_monomial(WeylElement::identity(), k)
    }

    /// T^{-1} = T - (tau - tau^{-1}), from the quadratic relation.
    pub fn t_inv() -> Self {
        &AlgebraElement::t() - &AlgebraElement::one().scale(&RatFun::tau_minus_inv())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &RatFun)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        if c.is_zero() {
            return AlgebraElement::zero();
        }
        AlgebraElement {
            terms: self.terms.iter().map(|(m, v)| (*m, c * v)).collect(),
        }
    }

    fn add_term(terms: &mut BTreeMap<Monomial, RatFun>, m: Monomial, c: RatFun) {
        if c.is_zero() {
            return;
        }
        match terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Right multiplication by T.  Each term T_w X^k first commutes X^k past
    /// T (the rearranged classical commutation, X^k T = T X^{-k} +
    /// sign(k)(tau - tau^{-1}) sum_{j} X^{|k|-2j}) and then absorbs T into
    /// T_w via T_w T = T_{ws} + (1 - eta(w))(tau - tau^{-1})/2 * T_w.
    pub fn mul_right_t(&self) -> Self {
        let dt = RatFun::tau_minus_inv();
        let mut terms = BTreeMap::new();
        for ((w, k), c) in &self.terms {
            let ws = w.mul_gen(Generator::S1);
            // T_w T X^{-k} part; the (1 - eta(w))/2 factor is 1 when the
            // word shortens and 0 otherwise
            Self::add_term(&mut terms, (ws, -k), c.clone());
            if w.eta() < 0 {
                Self::add_term(&mut terms, (*w, -k), c * &dt);
            }
            // lower-order ladder from commuting X^k across T
            if *k != 0 {
                let sign = if *k > 0 { 1 } else { -1 };
                let coeff = &(c * &dt) * &RatFun::from_int(sign);
                let ka = k.abs();
                for j in 0..ka {
                    Self::add_term(&mut terms, (*w, ka - 2 * j), coeff.clone());
                }
            }
        }
        AlgebraElement { terms }
    }

    /// Right multiplication by U: T_w X^k U = T_{wu} X^{-k}.
    pub fn mul_right_u(&self) -> Self {
        AlgebraElement {
            terms: self.terms.iter().map(|(&(w, k), c)| ((w.mul_u(), -k), c.clone())).collect(),
        }
    }

    /// Right multiplication by X^{power}, power = +1 or -1.  The abelian
    /// subalgebra generated by X makes this an exponent shift.
    pub fn mul_right_x(&self, power: i64) -> Self {
        assert!(power == 1 || power == -1);
        AlgebraElement {
            terms: self.terms.iter().map(|(&(w, k), c)| ((w, k + power), c.clone())).collect(),
        }
    }

    /// Left multiplication by T via T T_w = T_{sw} + (1 - eta(w^{-1}))(tau -
    /// tau^{-1})/2 * T_w.
    pub fn mul_left_t(&self) -> Self {
        let dt = RatFun::tau_minus_inv();
        let mut terms = BTreeMap::new();
        for ((w, k), c) in &self.terms {
            let sw = w.inverse().mul_gen(Generator::S1).inverse();
            Self::add_term(&mut terms, (sw, *k), c.clone());
            if w.inverse().eta() < 0 {
                Self::add_term(&mut terms, (*w, *k), c * &dt);
            }
        }
        AlgebraElement { terms }
    }

    /// Left multiplication by U: U T_w X^k = T_{uw} X^k.
    pub fn mul_left_u(&self) -> Self {
        AlgebraElement {
            terms: self.terms.iter().map(|(&(w, k), c)| ((w.u_mul(), k), c.clone())).collect(),
        }
    }

    /// Left multiplication by X^{power} (power = +1 or -1), reduced through
    /// the generic product since X must commute past every T_w.
    pub fn mul_left_x(&self, power: i64) -> Self {
        assert!(power == 1 || power == -1);
        multiply(&AlgebraElement::x(power), self)
    }

    fn mul_letter(&self, l: Letter) -> Self {
        match l {
            Letter::T => self.mul_right_t(),
            Letter::U => self.mul_right_u(),
            Letter::X(p) => self.mul_right_x(p as i64),
        }
    }
}

impl std::ops::Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            AlgebraElement::add_term(&mut terms, *m, c.clone());
        }
        AlgebraElement { terms }
    }
}

impl std::ops::Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self + &rhs.scale(&RatFun::from_int(-1))
    }
}

/// Letters of the monomial T_w X^k: U^{i0}, then T_{i1} ... T_{ir} with
/// T_0 expanded as U T U, then |k| copies of X^{sign k}.
fn monomial_letters(w: &WeylElement, k: i64) -> Vec<Letter> {
    let (r, word) = w.reduced_word();
    let mut letters = Vec::new();
    if r == 1 {
        letters.push(Letter::U);
    }
    for g in word {
        match g {
            Generator::S1 => letters.push(Letter::T),
            Generator::S0 => {
                letters.push(Letter::U);
                letters.push(Letter::T);
                letters.push(Letter::U);
            }
        }
    }
    let step = if k >= 0 { 1i8 } else { -1 };
    for _ in 0..k.abs() {
        letters.push(Letter::X(step));
    }
    letters
}

/// Bilinear associative product in normal form.  The right factor is
/// decomposed monomial by monomial into generator letters which are folded
/// onto the left factor.
pub fn multiply(e1: &AlgebraElement, e2: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for ((w, k), c) in e2.terms() {
        let mut acc = e1.clone();
        for l in monomial_letters(w, *k) {
            acc = acc.mul_letter(l);
        }
        out = &out + &acc.scale(c);
    }
    out
}

/// The lowering coefficient
/// a(k) = ((1 - tau^2)/(1 + tau^2)) (tau^{-k} + (-1)^{k+1} tau^k)
/// as an exact rational function.
pub fn a_coeff(k: i64) -> RatFun {
    assert!(k >= 0, "a(k) requires k >= 0, got {k}");
    let one_minus = IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)]);
    let one_plus = IntPoly::from_coeffs(vec![BigInt::from(1), BigInt::from(0), BigInt::from(1)]);
    let prefactor = RatFun::new(one_minus, one_plus);
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let inner = &RatFun::tau_pow(-k) + &(&RatFun::tau_pow(k) * &RatFun::from_int(sign));
    &prefactor * &inner
}

/// Checks the exact commutation of X^{eps} past T_w:
///
///   T_w X^eps = X^{eps (-1)^{l(w)+r}} T_w
///             + eps eta(w) X^{eta(w)(-1)^{l(w)+r}} sum_{v < w} a(l(w)-l(v)) T_v
///
/// with w = u^r w'.  Both sides are reduced to normal form through the
/// generic product; returns exact equality.
pub fn verify_x_commutation(w: &WeylElement, eps: i64) -> bool {
    assert!(eps == 1 || eps == -1);
    let lhs = AlgebraElement::basis_monomial(*w, eps);

    let parity = (w.length() as i64 + w.u_exponent() as i64) % 2;
    let flip = if parity == 0 { 1 } else { -1 };
    let eta = w.eta() as i64;

    let leading = multiply(&AlgebraElement::x(eps * flip), &AlgebraElement::basis_monomial(*w, 0));
    let mut sum = AlgebraElement::zero();
    for v in w.enumerate_strictly_less() {
        let a = a_coeff((w.length() - v.length()) as i64);
        sum = &sum + &AlgebraElement::basis_monomial(v, 0).scale(&a);
    }
    let ladder = multiply(&AlgebraElement::x(eta * flip), &sum).scale(&RatFun::from_int(eps * eta));
    let rhs = &leading + &ladder;

    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tau() -> RatFun {
        RatFun::tau_pow(1)
    }

    #[test]
    fn quadratic_relation() {
        // T^2 - (tau - tau^{-1}) T - 1 = 0
        let t = AlgebraElement::t();
        let tt = multiply(&t, &t);
        let expect = &AlgebraElement::one() + &t.scale(&RatFun::tau_minus_inv());
        assert_eq!(tt, expect);

        // factored form (T - tau)(T + tau^{-1}) = 0
        let a = &t - &AlgebraElement::one().scale(&tau());
        let b = &t + &AlgebraElement::one().scale(&tau().inv());
        assert!(multiply(&a, &b).is_zero());
    }

    #[test]
    fn u_involution_and_x_conjugation() {
        let u = AlgebraElement::u();
        assert_eq!(multiply(&u, &u), AlgebraElement::one());
        // U X U = X^{-1}
        let uxu = multiply(&multiply(&u, &AlgebraElement::x(1)), &u);
        assert_eq!(uxu, AlgebraElement::x(-1));
    }

    #[test]
    fn t_inverse() {
        let prod = multiply(&AlgebraElement::t(), &AlgebraElement::t_inv());
        assert_eq!(prod, AlgebraElement::one());
        let prod = multiply(&AlgebraElement::t_inv(), &AlgebraElement::t());
        assert_eq!(prod, AlgebraElement::one());
        // T^{-1} X T^{-1} = X^{-1}
        let p = multiply(
            &multiply(&AlgebraElement::t_inv(), &AlgebraElement::x(1)),
            &AlgebraElement::t_inv(),
        );
        assert_eq!(p, AlgebraElement::x(-1));
    }

    #[test]
    fn x_commutes_past_t() {
        // X T = T X^{-1} + (tau - tau^{-1}) X
        let xt = AlgebraElement::x(1).mul_right_t();
        let expect = &AlgebraElement::basis_monomial(WeylElement::s1(), -1)
            + &AlgebraElement::x(1).scale(&RatFun::tau_minus_inv());
        assert_eq!(xt, expect);
    }

    #[test]
    fn t_absorption() {
        // T_{s0} T = T_{s0 s1} (eta(s0) = +1, no correction term)
        let ts0 = AlgebraElement::basis_monomial(WeylElement::s0(), 0);
        let prod = ts0.mul_right_t();
        let s0s1 = WeylElement::s0().multiply(&WeylElement::s1());
        assert_eq!(prod, AlgebraElement::basis_monomial(s0s1, 0));
    }

    #[test]
    fn classical_commutation_ladder() {
        // X^{-k} T + sign(k)(tau - tau^{-1}) sum_j X^{|k|-2j}  ==  T X^k
        let dt = RatFun::tau_minus_inv();
        for k in -6i64..=6 {
            let mut rhs = multiply(&AlgebraElement::x(-k), &AlgebraElement::t());
            if k != 0 {
                let sign = if k > 0 { 1 } else { -1 };
                for j in 0..k.abs() {
                    rhs = &rhs
                        + &AlgebraElement::x(k.abs() - 2 * j).scale(&(&dt * &RatFun::from_int(sign)));
                }
            }
            assert_eq!(rhs, AlgebraElement::basis_monomial(WeylElement::s1(), k), "k={k}");
        }
    }

    #[test]
    fn lowering_coefficients() {
        assert!(a_coeff(0).is_zero());
        // a(1) = (1 - tau^2)/tau
        let a1 = RatFun::new(
            IntPoly::from_coeffs(vec![1.into(), 0.into(), (-1).into()]),
            IntPoly::monomial(1, 1),
        );
        assert_eq!(a_coeff(1), a1);
        // a(2) = (1 - tau^2)^2/tau^2
        let sq = IntPoly::from_coeffs(vec![1.into(), 0.into(), (-1).into()]);
        let a2 = RatFun::new(&sq * &sq, IntPoly::monomial(1, 2));
        assert_eq!(a_coeff(2), a2);
    }

    #[test]
    fn lowering_recursion() {
        // a(k-2) - (tau - tau^{-1}) a(k-1) = a(k)
        let dt = RatFun::tau_minus_inv();
        for k in 2i64..=12 {
            let lhs = &a_coeff(k - 2) - &(&dt * &a_coeff(k - 1));
            assert_eq!(lhs, a_coeff(k), "k={k}");
        }
    }

    #[test]
    fn x_commutation_small_cases() {
        // identity: reduces to X = X; s1: reduces to the k=1 ladder
        assert!(verify_x_commutation(&WeylElement::identity(), 1));
        assert!(verify_x_commutation(&WeylElement::s1(), 1));
        for len in 0..=3u32 {
            for g in [None, Some(Generator::S0), Some(Generator::S1)] {
                if (len == 0) != g.is_none() {
                    continue;
                }
                for r in [0, 1] {
                    let w = WeylElement::from_parts(r, len, g);
                    for eps in [1, -1] {
                        assert!(verify_x_commutation(&w, eps), "w={w:?} eps={eps}");
                    }
                }
            }
        }
    }

    #[test]
    fn center_element_commutes() {
        // X + X^{-1} commutes with T and U
        let z = &AlgebraElement::x(1) + &AlgebraElement::x(-1);
        for gen in [AlgebraElement::t(), AlgebraElement::u()] {
            assert_eq!(multiply(&z, &gen), multiply(&gen, &z));
        }
    }

    #[test]
    fn x_powers_are_abelian() {
        assert_eq!(AlgebraElement::x(1).mul_right_x(1), AlgebraElement::x(2));
        assert_eq!(AlgebraElement::x(2).mul_right_x(-1), AlgebraElement::x(1));
        assert_eq!(
            multiply(&AlgebraElement::x(3), &AlgebraElement::x(-5)),
            AlgebraElement::x(-2)
        );
    }

    #[test]
    fn multiply_unital_and_bilinear() {
        let e = &AlgebraElement::basis_monomial(WeylElement::s0(), 2).scale(&tau())
            + &AlgebraElement::x(-1);
        assert_eq!(multiply(&AlgebraElement::one(), &e), e);
        assert_eq!(multiply(&e, &AlgebraElement::one()), e);
    }

    #[test]
    fn left_multiplications_agree_with_generic() {
        let e = &AlgebraElement::basis_monomial(
            WeylElement::from_parts(1, 2, Some(Generator::S0)),
            -2,
        ) + &AlgebraElement::t().scale(&tau());
        assert_eq!(e.mul_left_t(), multiply(&AlgebraElement::t(), &e));
        assert_eq!(e.mul_left_u(), multiply(&AlgebraElement::u(), &e));
        assert_eq!(e.mul_left_x(1), multiply(&AlgebraElement::x(1), &e));
        assert_eq!(e.mul_left_x(-1), multiply(&AlgebraElement::x(-1), &e));
    }
}
