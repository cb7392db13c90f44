//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! Elements are coordinate vectors over the power basis
//! `{1, zeta, ..., zeta^(phi(n)-1)}` with rational coefficients, reduced mod
//! the n-th cyclotomic polynomial. All arithmetic is exact; the standard
//! embedding sends `zeta` to `exp(2*pi*i/n)`, so complex conjugation is the
//! Galois automorphism `zeta -> zeta^(n-1)`.

pub mod basis;
pub mod embed;
pub mod linalg;
pub mod minpoly;
pub mod tangent;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::PolyQ;
use crate::rat::{rat_i64, Rational};
use crate::{divisors, euler_phi};

/// The n-th cyclotomic polynomial, monic with integer coefficients, degree
/// `phi(n)`: the quotient of `x^n - 1` by the cyclotomic polynomials of the
/// proper divisors of `n`.
pub fn cyclotomic_poly(n: u32) -> PolyQ {
    fn compute(n: u32, memo: &mut alloc::collections::BTreeMap<u32, PolyQ>) -> PolyQ {
        if let Some(p) = memo.get(&n) {
            return p.clone();
        }
        // x^n - 1
        let mut coeffs = vec![Rational::zero(); n as usize + 1];
        coeffs[0] = -Rational::one();
        coeffs[n as usize] = Rational::one();
        let mut poly = PolyQ::from_coeffs(coeffs);
        for d in divisors(n) {
            if d < n {
                let phi_d = compute(d, memo);
                poly = poly.div_exact(&phi_d);
            }
        }
        memo.insert(n, poly.clone());
        poly
    }
    let mut memo = alloc::collections::BTreeMap::new();
    compute(n, &mut memo)
}

/// Shared context for one cyclotomic field: the modulus and the reduction
/// table of `zeta^t` for `0 <= t < n`.
#[derive(Debug)]
pub struct FieldCtx {
    n: u32,
    phi: usize,
    modulus: PolyQ,
    /// `rows[t]` = power-basis coordinates of `zeta^t`.
    rows: Vec<Vec<Rational>>,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl FieldCtx {
    pub fn new(n: u32) -> Arc<FieldCtx> {
        assert!(n >= 1);
        let modulus = cyclotomic_poly(n);
        let phi = euler_phi(n) as usize;
        debug_assert_eq!(modulus.degree(), phi);
        let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(n as usize);
        for t in 0..(n as usize) {
            if t < phi {
                let mut row = vec![Rational::zero(); phi];
                row[t] = Rational::one();
                rows.push(row);
            } else {
                // zeta^t = zeta * zeta^(t-1), reducing x^phi via the monic modulus.
                let prev = &rows[t - 1];
                let mut row = vec![Rational::zero(); phi];
                let top = prev[phi - 1].clone();
                for i in 1..phi {
                    row[i] = prev[i - 1].clone();
                }
                if !top.is_zero() {
                    for i in 0..phi {
                        let m = modulus.coeff(i);
                        if !m.is_zero() {
                            row[i] -= &top * m;
                        }
                    }
                }
                rows.push(row);
            }
        }
        Arc::new(FieldCtx { n, phi, modulus, rows })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn phi(&self) -> usize {
        self.phi
    }

    pub fn modulus(&self) -> &PolyQ {
        &self.modulus
    }

    fn row(&self, t: usize) -> &[Rational] {
        &self.rows[t % self.n as usize]
    }
}

/// An element of `Q(zeta_n)`.
#[derive(Clone, Debug)]
pub struct FieldElement {
    ctx: Arc<FieldCtx>,
    coeffs: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.coeffs == other.coeffs
    }
}
impl Eq for FieldElement {}

impl FieldElement {
    pub fn zero(ctx: &Arc<FieldCtx>) -> Self {
        FieldElement { ctx: ctx.clone(), coeffs: vec![Rational::zero(); ctx.phi] }
    }

    pub fn one(ctx: &Arc<FieldCtx>) -> Self {
        FieldElement::from_rational(ctx, Rational::one())
    }

    pub fn from_rational(ctx: &Arc<FieldCtx>, r: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); ctx.phi];
        coeffs[0] = r;
        FieldElement { ctx: ctx.clone(), coeffs }
    }

    pub fn from_i64(ctx: &Arc<FieldCtx>, v: i64) -> Self {
        FieldElement::from_rational(ctx, rat_i64(v))
    }

    /// `zeta^t` for any integer exponent (reduced mod n).
    pub fn zeta_pow(ctx: &Arc<FieldCtx>, t: i64) -> Self {
        let n = ctx.n as i64;
        let e = t.rem_euclid(n) as usize;
        FieldElement { ctx: ctx.clone(), coeffs: ctx.row(e).to_vec() }
    }

    /// Build from arbitrary-length power coordinates (exponents taken mod n).
    pub fn from_power_coeffs(ctx: &Arc<FieldCtx>, coeffs: &[Rational]) -> Self {
        let mut out = vec![Rational::zero(); ctx.phi];
        for (t, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = t % ctx.n as usize;
            if e < ctx.phi {
                out[e] += c;
            } else {
                for (i, r) in ctx.row(e).iter().enumerate() {
                    if !r.is_zero() {
                        out[i] += c * r;
                    }
                }
            }
        }
        FieldElement { ctx: ctx.clone(), coeffs: out }
    }

    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn modulus_index(&self) -> u32 {
        self.ctx.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Rational part if the element is rational, else `None`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    fn check_same(&self, other: &FieldElement) -> Result<()> {
        if self.ctx.n != other.ctx.n {
            return Err(Error::ModulusMismatch { left: self.ctx.n, right: other.ctx.n });
        }
        Ok(())
    }

    pub fn add(&self, other: &FieldElement) -> FieldElement {
        self.checked_add(other).expect("modulus mismatch")
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs })
    }

    pub fn sub(&self, other: &FieldElement) -> FieldElement {
        self.checked_sub(other).expect("modulus mismatch")
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> FieldElement {
        self.checked_mul(other).expect("modulus mismatch")
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        let phi = self.ctx.phi;
        let mut conv = vec![Rational::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                conv[i + j] += a * b;
            }
        }
        Ok(FieldElement::from_power_coeffs(&self.ctx, &conv))
    }

    pub fn scale(&self, r: &Rational) -> FieldElement {
        FieldElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| a * r).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = FieldElement::one(&self.ctx);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Galois automorphism `sigma_j : zeta -> zeta^j` (requires `gcd(j, n) = 1`).
    pub fn galois(&self, j: i64) -> FieldElement {
        let n = self.ctx.n as i64;
        let jj = j.rem_euclid(n);
        assert_eq!(jj.gcd(&n), 1, "sigma_j needs gcd(j, n) = 1");
        let mut out = vec![Rational::zero(); self.ctx.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as i64 * jj) % n) as usize;
            for (t, r) in self.ctx.row(e).iter().enumerate() {
                if !r.is_zero() {
                    out[t] += c * r;
                }
            }
        }
        FieldElement { ctx: self.ctx.clone(), coeffs: out }
    }

    /// Complex conjugation (`sigma_{-1}`), an involutive automorphism.
    pub fn conj(&self) -> FieldElement {
        if self.ctx.n <= 2 {
            return self.clone();
        }
        self.galois(self.ctx.n as i64 - 1)
    }

    /// True when complex conjugation fixes the element (it embeds into R).
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against the
    /// (irreducible) modulus.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = PolyQ::from_coeffs(self.coeffs.clone());
        let mut r0 = self.ctx.modulus.clone();
        let mut u0 = PolyQ::zero();
        let mut r1 = a.monic();
        let mut u1 = PolyQ::from_coeffs(vec![Rational::one() / a.leading()]);
        while !r1.is_zero() {
            let (q, mut r2) = r0.div_rem(&r1);
            let mut u2 = u0.sub(&q.mul(&u1));
            if !r2.is_zero() {
                let lead = r2.leading();
                r2 = r2.monic();
                u2 = u2.scale(&(Rational::one() / lead));
            }
            r0 = r1;
            u0 = u1;
            r1 = r2;
            u1 = u2;
        }
        // r0 is the monic gcd; the modulus is irreducible so r0 = 1 and
        // u0 * a = 1 mod modulus.
        debug_assert_eq!(r0.degree(), 0);
        let scale = Rational::one() / r0.coeff(0);
        let mut coeffs = u0.scale(&scale).coeffs().to_vec();
        coeffs.resize(self.ctx.phi, Rational::zero());
        Ok(FieldElement { ctx: self.ctx.clone(), coeffs })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same(other)?;
        Ok(self.mul(&other.inv()?))
    }

    /// Closed-form inverse of `zeta^m - 1`:
    /// `n / (zeta^m - 1) = sum_{j=0}^{n-1} j * zeta^(m j)` whenever `zeta^m != 1`.
    pub fn inv_zeta_pow_minus_one(ctx: &Arc<FieldCtx>, m: i64) -> Result<FieldElement> {
        let n = ctx.n as i64;
        if m.rem_euclid(n) == 0 {
            return Err(Error::DivisionByZero);
        }
        let mut conv = vec![Rational::zero(); ctx.n as usize];
        for j in 1..n {
            let e = (m * j).rem_euclid(n) as usize;
            conv[e] += rat_i64(j);
        }
        let sum = FieldElement::from_power_coeffs(ctx, &conv);
        Ok(sum.scale(&(Rational::one() / rat_i64(n))))
    }

    /// Embed into the larger field `Q(zeta_m)` where `n | m`.
    pub fn lift_to(&self, big: &Arc<FieldCtx>) -> FieldElement {
        assert_eq!(big.n % self.ctx.n, 0, "lift target must be a multiple modulus");
        let step = (big.n / self.ctx.n) as usize;
        let mut conv = vec![Rational::zero(); big.n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                conv[i * step] += c;
            }
        }
        FieldElement::from_power_coeffs(big, &conv)
    }

    /// Real part `(z + conj z)/2` as an element (always conjugation-fixed).
    pub fn re(&self) -> FieldElement {
        self.add(&self.conj()).scale(&crate::rat::rat(1, 2))
    }

    /// Imaginary part `(z - conj z)/(2i)`; requires `4 | n` so that `i` is in
    /// the field.
    pub fn im(&self) -> FieldElement {
        assert_eq!(self.ctx.n % 4, 0, "imaginary part needs i in the field");
        let minus_i = FieldElement::zeta_pow(&self.ctx, 3 * (self.ctx.n as i64) / 4);
        self.sub(&self.conj()).mul(&minus_i).scale(&crate::rat::rat(1, 2))
    }
}

/// Compare elements that may live in different cyclotomic fields by lifting
/// both into `Q(zeta_lcm)`.
pub fn eq_lifted(a: &FieldElement, b: &FieldElement) -> bool {
    if a.ctx().n() == b.ctx().n() {
        return a == b;
    }
    let l = (a.ctx().n() as u64).lcm(&(b.ctx().n() as u64)) as u32;
    let ctx = FieldCtx::new(l);
    a.lift_to(&ctx) == b.lift_to(&ctx)
}

/// An element of the maximal real subfield: a field element together with the
/// verified fact that conjugation fixes it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealElement(FieldElement);

impl RealElement {
    /// Wrap after checking the conjugation-fixed invariant exactly.
    pub fn new(fe: FieldElement) -> Result<Self> {
        if fe.is_real() {
            Ok(RealElement(fe))
        } else {
            Err(Error::Domain(alloc::string::String::from(
                "element is not fixed by conjugation",
            )))
        }
    }

    pub fn from_rational(ctx: &Arc<FieldCtx>, r: Rational) -> Self {
        RealElement(FieldElement::from_rational(ctx, r))
    }

    pub fn as_field(&self) -> &FieldElement {
        &self.0
    }

    pub fn into_field(self) -> FieldElement {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &RealElement) -> RealElement {
        RealElement(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &RealElement) -> RealElement {
        RealElement(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &RealElement) -> RealElement {
        RealElement(self.0.mul(&o.0))
    }

    pub fn div(&self, o: &RealElement) -> Result<RealElement> {
        Ok(RealElement(self.0.div(&o.0)?))
    }

    pub fn neg(&self) -> RealElement {
        RealElement(self.0.neg())
    }

    pub fn scale(&self, r: &Rational) -> RealElement {
        RealElement(self.0.scale(r))
    }

    pub fn lift_to(&self, big: &Arc<FieldCtx>) -> RealElement {
        RealElement(self.0.lift_to(big))
    }

    /// Numeric value via the standard embedding (the imaginary part is zero).
    pub fn to_f64(&self) -> f64 {
        embed::embed(&self.0, 96).0
    }

    /// Exact sign: 0 handled exactly, otherwise by refining the embedding
    /// until the error bound separates the value from zero.
    pub fn sign(&self) -> i32 {
        embed::sign(&self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn cyclotomic_small() {
        // n = 1: x - 1
        assert_eq!(cyclotomic_poly(1), PolyQ::from_int_coeffs(&[-1, 1]));
        // n = 7 by the independent route: (x^7 - 1)/(x - 1).
        let mut c = vec![Rational::zero(); 8];
        c[0] = -Rational::one();
        c[7] = Rational::one();
        let x7m1 = PolyQ::from_coeffs(c);
        let oracle = x7m1.div_exact(&PolyQ::from_int_coeffs(&[-1, 1]));
        assert_eq!(cyclotomic_poly(7), oracle);
        assert_eq!(oracle, PolyQ::from_int_coeffs(&[1, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn cyclotomic_12_by_division_oracle() {
        // (x^12 - 1) / (phi_1 phi_2 phi_3 phi_4 phi_6) with the five known
        // small factors written out literally.
        let mut c = vec![Rational::zero(); 13];
        c[0] = -Rational::one();
        c[12] = Rational::one();
        let mut oracle = PolyQ::from_coeffs(c);
        for f in [
            PolyQ::from_int_coeffs(&[-1, 1]),   // x - 1
            PolyQ::from_int_coeffs(&[1, 1]),    // x + 1
            PolyQ::from_int_coeffs(&[1, 1, 1]), // x^2 + x + 1
            PolyQ::from_int_coeffs(&[1, 0, 1]), // x^2 + 1
            PolyQ::from_int_coeffs(&[1, -1, 1]), // x^2 - x + 1
        ] {
            oracle = oracle.div_exact(&f);
        }
        assert_eq!(cyclotomic_poly(12), oracle);
        assert_eq!(oracle, PolyQ::from_int_coeffs(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn i_squared_is_minus_one() {
        let ctx = FieldCtx::new(4);
        let i = FieldElement::zeta_pow(&ctx, 1);
        assert_eq!(i.mul(&i), FieldElement::from_i64(&ctx, -1));
    }

    #[test]
    fn inverse_law() {
        let ctx = FieldCtx::new(5);
        let z = FieldElement::zeta_pow(&ctx, 1);
        let a = z.sub(&FieldElement::one(&ctx)); // zeta_5 - 1
        let prod = a.mul(&a.inv().unwrap());
        assert!(prod.is_one());
        assert_eq!(
            FieldElement::zero(&ctx).inv().unwrap_err(),
            Error::DivisionByZero
        );
    }

    #[test]
    fn closed_form_inverse_matches_euclid() {
        for n in [7u32, 12, 15] {
            let ctx = FieldCtx::new(n);
            for m in 1..(n as i64) {
                let a = FieldElement::zeta_pow(&ctx, m).sub(&FieldElement::one(&ctx));
                let fast = FieldElement::inv_zeta_pow_minus_one(&ctx, m).unwrap();
                assert_eq!(fast, a.inv().unwrap(), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn conjugation_fixes_real_combination() {
        let ctx = FieldCtx::new(7);
        let z = FieldElement::zeta_pow(&ctx, 1);
        let real = z.add(&z.conj()); // zeta + zeta^{-1}
        assert!(real.is_real());
        assert!(!z.is_real());
        RealElement::new(real).unwrap();
    }

    #[test]
    fn lift_preserves_arithmetic() {
        let small = FieldCtx::new(7);
        let big = FieldCtx::new(28);
        let a = FieldElement::zeta_pow(&small, 3).add(&FieldElement::from_i64(&small, 2));
        let b = FieldElement::zeta_pow(&small, 5).scale(&rat(1, 3));
        let lhs = a.mul(&b).lift_to(&big);
        let rhs = a.lift_to(&big).mul(&b.lift_to(&big));
        assert_eq!(lhs, rhs);
        assert!(eq_lifted(&a, &a.lift_to(&big)));
    }
}
