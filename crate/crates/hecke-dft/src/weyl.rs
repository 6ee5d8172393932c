//! The extended affine Weyl group W = <s, u | s^2 = u^2 = 1> and its action
//! on the integer lattice.
//!
//! W decomposes as Omega ⋉ W_S with Omega = {1, u} and W_S = <s0, s1> the
//! infinite dihedral group, where s1 = s and s0 = u s u.  In W_S there are
//! exactly two elements of each positive length (one per final generator),
//! so an element of W is encoded canonically by its u-exponent, its length,
//! and the last generator of its reduced word.

use crate::error::ConfigError;

/// One of the two simple reflections of the dihedral factor W_S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    /// s0 = u s u, acting on the lattice as n -> 2M - n.
    S0,
    /// s1 = s, acting on the lattice as n -> -n.
    S1,
}

impl Generator {
    pub fn index(self) -> u8 {
        match self {
            Generator::S0 => 0,
            Generator::S1 => 1,
        }
    }

    pub fn from_index(i: u8) -> Generator {
        if i == 0 {
            Generator::S0
        } else {
            Generator::S1
        }
    }

    /// Conjugation by u swaps the two simple reflections.
    pub fn flip(self) -> Generator {
        match self {
            Generator::S0 => Generator::S1,
            Generator::S1 => Generator::S0,
        }
    }
}

/// Element of the extended affine Weyl group in canonical form.
///
/// The triple (u_exponent, length, last generator) encodes w = u^r * w' with
/// w' in W_S uniquely; the word of w' is recovered by alternating generators
/// backwards from `last`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    u_exp: u8,
    len: u32,
    last: Option<Generator>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { u_exp: 0, len: 0, last: None }
    }

    pub fn u() -> Self {
        WeylElement { u_exp: 1, len: 0, last: None }
    }

    pub fn s0() -> Self {
        WeylElement { u_exp: 0, len: 1, last: Some(Generator::S0) }
    }

    pub fn s1() -> Self {
        WeylElement { u_exp: 0, len: 1, last: Some(Generator::S1) }
    }

    pub fn generator(g: Generator) -> Self {
        WeylElement { u_exp: 0, len: 1, last: Some(g) }
    }

    /// Builds u^r * (the length-p dihedral word ending in `last`).
    pub fn from_parts(u_exp: u8, len: u32, last: Option<Generator>) -> Self {
        assert!(u_exp <= 1, "u-exponent must be 0 or 1");
        assert_eq!(len == 0, last.is_none(), "last generator present iff length > 0");
        WeylElement { u_exp, len, last }
    }

    /// Word length; the u-factor contributes nothing.
    pub fn length(&self) -> u32 {
        self.len
    }

    pub fn u_exponent(&self) -> u8 {
        self.u_exp
    }

    pub fn last_generator(&self) -> Option<Generator> {
        self.last
    }

    pub fn is_identity(&self) -> bool {
        self.u_exp == 0 && self.len == 0
    }

    /// First letter of the dihedral word (alternating, so determined by
    /// length parity and the last letter).
    fn first_generator(&self) -> Option<Generator> {
        self.last.map(|last| if self.len % 2 == 1 { last } else { last.flip() })
    }

    /// The reduced expression as (u-exponent, generator sequence).
    pub fn reduced_word(&self) -> (u8, Vec<Generator>) {
        let mut word = Vec::with_capacity(self.len as usize);
        if let Some(last) = self.last {
            let mut g = last;
            for _ in 0..self.len {
                word.push(g);
                g = g.flip();
            }
            word.reverse();
        }
        (self.u_exp, word)
    }

    /// Right multiplication by a simple reflection (dihedral reduction).
    pub fn mul_gen(&self, g: Generator) -> Self {
        match self.last {
            None => WeylElement { u_exp: self.u_exp, len: 1, last: Some(g) },
            Some(last) if last == g => WeylElement {
                u_exp: self.u_exp,
                len: self.len - 1,
                last: if self.len == 1 { None } else { Some(g.flip()) },
            },
            Some(_) => WeylElement { u_exp: self.u_exp, len: self.len + 1, last: Some(g) },
        }
    }

    /// Right multiplication by u: w * u = u^(r+1) * (u w' u), and conjugation
    /// by u flips every letter of the dihedral word.
    pub fn mul_u(&self) -> Self {
        WeylElement { u_exp: self.u_exp ^ 1, len: self.len, last: self.last.map(Generator::flip) }
    }

    /// Left multiplication by u just toggles the u-exponent.
    pub fn u_mul(&self) -> Self {
        WeylElement { u_exp: self.u_exp ^ 1, ..*self }
    }

    /// Group product in canonical form.
    pub fn multiply(&self, other: &WeylElement) -> Self {
        let mut acc = *self;
        if other.u_exp == 1 {
            acc = acc.mul_u();
        }
        let (_, word) = other.reduced_word();
        for g in word {
            acc = acc.mul_gen(g);
        }
        acc
    }

    pub fn inverse(&self) -> Self {
        // The inverse dihedral word is the reverse, so its last letter is the
        // first letter of w'; conjugating past u^r flips letters when r = 1.
        let mut last = self.first_generator();
        if self.u_exp == 1 {
            last = last.map(Generator::flip);
        }
        WeylElement { u_exp: self.u_exp, len: self.len, last }
    }

    /// eta(w) = l(ws) - l(w), always +1 or -1.
    pub fn eta(&self) -> i8 {
        match self.last {
            Some(Generator::S1) => -1,
            _ => 1,
        }
    }

    /// Bruhat order used here: v < w iff v^{-1} w lies in W_S (same
    /// u-exponent) and l(v) < l(w).
    pub fn bruhat_less(&self, other: &WeylElement) -> bool {
        self.u_exp == other.u_exp && self.len < other.len
    }

    /// All v with v < w, sorted by (length, last generator).
    pub fn enumerate_strictly_less(&self) -> Vec<WeylElement> {
        let mut out = Vec::new();
        if self.len == 0 {
            return out;
        }
        out.push(WeylElement { u_exp: self.u_exp, len: 0, last: None });
        for l in 1..self.len {
            out.push(WeylElement { u_exp: self.u_exp, len: l, last: Some(Generator::S0) });
            out.push(WeylElement { u_exp: self.u_exp, len: l, last: Some(Generator::S1) });
        }
        out
    }

    /// Action on the lattice: s1 n = -n, s0 n = 2M - n, u n = M - n,
    /// folded right-to-left over the reduced word.
    pub fn act(&self, n: i64, cfg: &LatticeConfig) -> i64 {
        let m = cfg.period();
        let (_, word) = self.reduced_word();
        let mut x = n;
        for g in word.iter().rev() {
            x = match g {
                Generator::S1 => -x,
                Generator::S0 => 2 * m - x,
            };
        }
        if self.u_exp == 1 {
            x = m - x;
        }
        x
    }
}

/// Lattice parameters: the period M > 1 and the deformation tau in (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeConfig {
    m: i64,
    tau: f64,
}

impl LatticeConfig {
    pub fn new(m: i64, tau: f64) -> Result<Self, ConfigError> {
        if m < 2 {
            return Err(ConfigError::PeriodTooSmall(m));
        }
        if !(tau > 0.0 && tau < 1.0) {
            return Err(ConfigError::TauOutOfRange(tau));
        }
        Ok(LatticeConfig { m, tau })
    }

    pub fn period(&self) -> i64 {
        self.m
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// Number of fundamental-alcove points, M + 1.
    pub fn alcove_size(&self) -> usize {
        (self.m + 1) as usize
    }
}

/// The shortest element of W_S mapping n into the fundamental alcove
/// {0, ..., M}.
///
/// For n = pM + r with p > 0 and 0 < r <= M the word is ...s0 s1 s0 of
/// length p; for n = -pM + r with p > 0 and 0 <= r < M it is ...s1 s0 s1 of
/// length p; points already inside the alcove map to the identity.
pub fn chamber_map(n: i64, cfg: &LatticeConfig) -> WeylElement {
    let m = cfg.period();
    if (0..=m).contains(&n) {
        return WeylElement::identity();
    }
    if n > m {
        let p = (n - 1) / m; // remainder r = n - pM lands in (0, M]
        WeylElement::from_parts(0, p as u32, Some(Generator::S0))
    } else {
        let p = (-n + m - 1) / m; // smallest p > 0 with n + pM >= 0
        debug_assert!((0..m).contains(&(n + p * m)));
        WeylElement::from_parts(0, p as u32, Some(Generator::S1))
    }
}

/// n_+ = w_n n, the alcove representative of the orbit of n.
pub fn alcove_point(n: i64, cfg: &LatticeConfig) -> i64 {
    let np = chamber_map(n, cfg).act(n, cfg);
    debug_assert!((0..=cfg.period()).contains(&np));
    np
}

/// l(w_n), the chamber depth of n.
pub fn chamber_length(n: i64, cfg: &LatticeConfig) -> u32 {
    chamber_map(n, cfg).length()
}
