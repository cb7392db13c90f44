//! Dense univariate polynomials over Q, lowest degree first.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::{rat_to_string, Rational};

/// Polynomial with rational coefficients, `coeffs[i]` the coefficient of `x^i`.
/// The zero polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct PolyQ {
    coeffs: Vec<Rational>,
}

impl PolyQ {
    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        PolyQ::from_coeffs(vec![Rational::one()])
    }

    /// `x`
    pub fn x() -> Self {
        PolyQ::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// Build from low-to-high coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_int_coeffs(coeffs: &[i64]) -> Self {
        PolyQ::from_coeffs(coeffs.iter().map(|&c| crate::rat::rat_i64(c)).collect())
    }

    /// `x^n` with coefficient `c`.
    pub fn monomial(c: Rational, n: usize) -> Self {
        if c.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        PolyQ { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 by convention of callers
    /// that first check `is_zero`.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        PolyQ::from_coeffs(out)
    }

    pub fn sub(&self, other: &PolyQ) -> PolyQ {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        PolyQ::from_coeffs(out)
    }

    pub fn neg(&self) -> PolyQ {
        PolyQ::from_coeffs(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn scale(&self, c: &Rational) -> PolyQ {
        if c.is_zero() {
            return PolyQ::zero();
        }
        PolyQ::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &PolyQ) -> PolyQ {
        if self.is_zero() || other.is_zero() {
            return PolyQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        PolyQ::from_coeffs(out)
    }

    /// Euclidean division: `self = q * div + r` with `deg r < deg div`.
    /// Panics if `div` is zero.
    pub fn div_rem(&self, div: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!div.is_zero(), "polynomial division by zero");
        if self.degree() < div.degree() || self.is_zero() {
            return (PolyQ::zero(), self.clone());
        }
        let lead_inv = Rational::one() / div.leading();
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - div.degree();
        let mut quot = vec![Rational::zero(); dq + 1];
        for k in (0..=dq).rev() {
            let top = rem[k + div.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let factor = top * &lead_inv;
            for (j, dc) in div.coeffs.iter().enumerate() {
                let delta = dc * &factor;
                rem[k + j] -= delta;
            }
            quot[k] = factor;
        }
        (PolyQ::from_coeffs(quot), PolyQ::from_coeffs(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, div: &PolyQ) -> PolyQ {
        let (q, r) = self.div_rem(div);
        assert!(r.is_zero(), "polynomial division not exact");
        q
    }

    /// Horner evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Monic multiple: divide through by the leading coefficient.
    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return PolyQ::zero();
        }
        let inv = Rational::one() / self.leading();
        self.scale(&inv)
    }

    /// Substitute `-x` for `x`.
    pub fn compose_neg(&self) -> PolyQ {
        PolyQ::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// Primitive integer form: clear denominators, divide by the content, and
    /// normalize the leading coefficient positive. `3x^2 - 1` style output.
    pub fn integer_cleared(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut content = BigInt::zero();
        for v in &ints {
            content = content.gcd(v);
        }
        if !content.is_zero() && !content.is_one() {
            for v in &mut ints {
                *v /= &content;
            }
        }
        if ints.last().map_or(false, Signed::is_negative) {
            for v in &mut ints {
                *v = -v.clone();
            }
        }
        ints
    }

    /// True when every coefficient is an integer (denominator 1).
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    /// Human-readable form like `x^2 - 4x + 1` (highest degree first).
    pub fn display(&self) -> String {
        use core::fmt::Write;
        if self.is_zero() {
            return String::from("0");
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit_coeff = mag.is_one() && i > 0;
            if !unit_coeff {
                let _ = write!(s, "{}", rat_to_string(&mag));
            }
            if i > 0 {
                if !unit_coeff {
                    s.push('*');
                }
                s.push('x');
                if i > 1 {
                    let _ = write!(s, "^{i}");
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_i64;

    #[test]
    fn div_rem_reconstructs() {
        let a = PolyQ::from_int_coeffs(&[2, 0, -3, 1, 5]);
        let b = PolyQ::from_int_coeffs(&[1, 2, 3]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn integer_clearing() {
        // x^2 - 1/3 -> 3x^2 - 1
        let p = PolyQ::from_coeffs(vec![crate::rat::rat(-1, 3), Rational::zero(), Rational::one()]);
        let ints = p.integer_cleared();
        assert_eq!(ints, vec![BigInt::from(-1), BigInt::from(0), BigInt::from(3)]);
    }

    #[test]
    fn display_forms() {
        let p = PolyQ::from_int_coeffs(&[1, -4, 1]);
        assert_eq!(p.display(), "x^2 - 4*x + 1");
        assert_eq!(PolyQ::from_int_coeffs(&[-1, 0, 3]).display(), "3*x^2 - 1");
    }

    #[test]
    fn eval_horner() {
        let p = PolyQ::from_int_coeffs(&[1, -4, 1]);
        assert_eq!(p.eval(&rat_i64(2)), rat_i64(-3));
    }
}
