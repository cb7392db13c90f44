//! Arbitrary-precision numeric embedding `zeta -> exp(2*pi*i/n)`.
//!
//! Values are binary fixed-point: a `BigInt` mantissa scaled by `2^-prec`.
//! Pi comes from the Machin formula, sine and cosine from Taylor series after
//! quadrant reduction, so every digit is reproducible on any platform. The
//! worst-case rounding error of a full embedding at working precision `p` is
//! below `2^(8-p)` times the coefficient mass, which callers use as a rigorous
//! sign-separation bound.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::FieldElement;
use crate::rat::Rational;

/// Fixed-point real: `value = mant * 2^-prec`.
#[derive(Clone, Debug)]
pub struct Fx {
    mant: BigInt,
    prec: u32,
}

fn shr_round(v: &BigInt, s: u32) -> BigInt {
    if s == 0 {
        return v.clone();
    }
    let half = BigInt::from(1) << (s - 1);
    if v.is_negative() {
        -((-v + half) >> s)
    } else {
        (v + half) >> s
    }
}

impl Fx {
    pub fn zero(prec: u32) -> Fx {
        Fx { mant: BigInt::zero(), prec }
    }

    pub fn from_int(v: i64, prec: u32) -> Fx {
        Fx { mant: BigInt::from(v) << prec, prec }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Fx {
        let scaled = (r.numer() << (prec + 1)) / r.denom();
        Fx { mant: shr_round(&scaled, 1), prec }
    }

    pub fn add(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.prec, o.prec);
        Fx { mant: &self.mant + &o.mant, prec: self.prec }
    }

    pub fn sub(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.prec, o.prec);
        Fx { mant: &self.mant - &o.mant, prec: self.prec }
    }

    pub fn neg(&self) -> Fx {
        Fx { mant: -self.mant.clone(), prec: self.prec }
    }

    pub fn mul(&self, o: &Fx) -> Fx {
        debug_assert_eq!(self.prec, o.prec);
        Fx { mant: shr_round(&(&self.mant * &o.mant), self.prec), prec: self.prec }
    }

    pub fn div_int(&self, d: i64) -> Fx {
        let dd = BigInt::from(d);
        let doubled = (&self.mant << 1) / &dd;
        Fx { mant: shr_round(&doubled, 1), prec: self.prec }
    }

    /// Multiply by an exact rational.
    pub fn mul_rational(&self, r: &Rational) -> Fx {
        let scaled = (&self.mant * r.numer() << 1) / r.denom();
        Fx { mant: shr_round(&scaled, 1), prec: self.prec }
    }

    pub fn abs(&self) -> Fx {
        Fx { mant: self.mant.abs(), prec: self.prec }
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn to_f64(&self) -> f64 {
        crate::rat::rat_to_f64(&Rational::new(
            self.mant.clone(),
            BigInt::from(1) << self.prec,
        ))
    }

    fn lt(&self, o: &Fx) -> bool {
        self.mant < o.mant
    }
}

/// `atan(1/x)` by the alternating series, `x >= 2`.
fn atan_inv(x: i64, prec: u32) -> Fx {
    let mut power = (BigInt::from(1) << prec) / BigInt::from(x);
    let x2 = BigInt::from(x) * BigInt::from(x);
    let mut acc = power.clone();
    let mut k: i64 = 1;
    loop {
        power = &power / &x2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * k + 1);
        if k % 2 == 1 {
            acc -= &term;
        } else {
            acc += &term;
        }
        if term.is_zero() {
            break;
        }
        k += 1;
    }
    Fx { mant: acc, prec }
}

/// Pi via Machin: `pi = 16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> Fx {
    let work = prec + 16;
    let a = atan_inv(5, work);
    let b = atan_inv(239, work);
    let mant = (&a.mant << 4) - (&b.mant << 2);
    Fx { mant: shr_round(&mant, 16), prec }
}

/// `(cos, sin)` of the angle `2*pi*num/den`.
pub fn cos_sin_two_pi(num: i64, den: i64, prec: u32) -> (Fx, Fx) {
    debug_assert!(den > 0);
    let work = prec + 32;
    let pi_w = pi(work);
    // Reduce num/den mod 1, then express the angle as q*(pi/2) + r with
    // r in [-pi/4, pi/4].
    let m = num.rem_euclid(den);
    // quarter-turns: angle / (pi/2) = 4 m / den
    let q = ((8 * m + den) / (2 * den)) % 4; // nearest integer to 4m/den
    // r = 2*pi*m/den - q*pi/2
    let theta = pi_w.mul_rational(&Rational::new(BigInt::from(2 * m), BigInt::from(den)));
    let r = theta.sub(&pi_w.mul_rational(&Rational::new(BigInt::from(q), BigInt::from(2))));
    let (c, s) = cos_sin_small(&r);
    let (c, s) = match q {
        0 => (c, s),
        1 => (s.neg(), c),
        2 => (c.neg(), s.neg()),
        _ => (s, c.neg()),
    };
    (
        Fx { mant: shr_round(&c.mant, 32), prec },
        Fx { mant: shr_round(&s.mant, 32), prec },
    )
}

/// Taylor series for `|r| <= pi/4 + eps`.
fn cos_sin_small(r: &Fx) -> (Fx, Fx) {
    let prec = r.prec;
    let r2 = r.mul(r).neg();
    let mut cos = Fx::from_int(1, prec);
    let mut sin = r.clone();
    let mut cterm = Fx::from_int(1, prec);
    let mut sterm = r.clone();
    let mut k: i64 = 1;
    loop {
        cterm = cterm.mul(&r2).div_int((2 * k - 1) * (2 * k));
        sterm = sterm.mul(&r2).div_int((2 * k) * (2 * k + 1));
        if cterm.mant.is_zero() && sterm.mant.is_zero() {
            break;
        }
        cos = cos.add(&cterm);
        sin = sin.add(&sterm);
        k += 1;
    }
    (cos, sin)
}

/// Fixed-point embedding of a field element; returns `(re, im)` at `prec`.
pub fn embed_fx(elem: &FieldElement, prec: u32) -> (Fx, Fx) {
    let n = elem.modulus_index() as i64;
    let mut re = Fx::zero(prec);
    let mut im = Fx::zero(prec);
    for (t, c) in elem.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (ct, st) = cos_sin_two_pi(t as i64, n, prec);
        re = re.add(&ct.mul_rational(c));
        im = im.add(&st.mul_rational(c));
    }
    (re, im)
}

/// Numeric value of a field element under the standard embedding.
///
/// `precision` is the working precision in bits (>= 53); the result is the
/// correctly rounded `f64` pair of a value whose relative error is below
/// `2^(8 - precision)`.
pub fn embed(elem: &FieldElement, precision: u32) -> (f64, f64) {
    let prec = precision.max(53);
    let (re, im) = embed_fx(elem, prec);
    (re.to_f64(), im.to_f64())
}

/// Exact sign of a real element: `-1`, `0` or `1`.
///
/// Zero is decided exactly from the coordinates; otherwise the embedding is
/// refined until the error bound separates the value from zero (the standard
/// embedding is injective, so this terminates).
pub fn sign(elem: &FieldElement) -> i32 {
    if elem.is_zero() {
        return 0;
    }
    // coefficient mass: sum of |c| rounded up, for the error bound
    let mut mass = BigInt::from(1);
    for c in elem.coeffs() {
        mass += c.numer().abs() / c.denom() + 1;
    }
    let mut prec = 96u32;
    loop {
        let (re, _) = embed_fx(elem, prec);
        // per-term error below 2^(8-prec) relative to the mass
        let bound = Fx { mant: &mass << 8, prec };
        if bound.lt(&re.abs()) {
            return if re.is_negative() { -1 } else { 1 };
        }
        prec *= 2;
        assert!(prec <= 1 << 20, "sign refinement runaway");
    }
}

/// Convenience: does this real element embed to a positive number?
pub fn is_positive(elem: &FieldElement) -> bool {
    sign(elem) > 0
}

/// Exact sign of the imaginary part of an arbitrary element. The zero case is
/// decided exactly (`z = conj(z)`), so this works even when `i` is not in the
/// field.
pub fn sign_imaginary(elem: &FieldElement) -> i32 {
    if elem.conj() == *elem {
        return 0;
    }
    let mut mass = BigInt::from(1);
    for c in elem.coeffs() {
        mass += c.numer().abs() / c.denom() + 1;
    }
    let mut prec = 96u32;
    loop {
        let (_, im) = embed_fx(elem, prec);
        let bound = Fx { mant: &mass << 8, prec };
        if bound.lt(&im.abs()) {
            return if im.is_negative() { -1 } else { 1 };
        }
        prec *= 2;
        assert!(prec <= 1 << 20, "imaginary sign refinement runaway");
    }
}

/// All complex embeddings are available through `galois`; this helper returns
/// the vector of numeric conjugate values `sigma_j(elem)` for `gcd(j,n)=1`.
pub fn conjugate_values(elem: &FieldElement, precision: u32) -> Vec<(f64, f64)> {
    let n = elem.modulus_index();
    let mut out = Vec::new();
    for j in 1..n {
        if (j as i64).gcd(&(n as i64)) == 1 {
            out.push(embed(&elem.galois(j as i64), precision));
        }
    }
    out
}

/// Numeric shortcut used by float mirrors of exact constructions.
pub fn to_c64(elem: &FieldElement) -> (f64, f64) {
    embed(elem, 96)
}
