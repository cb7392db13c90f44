//! Minimal polynomials, norms and unit tests.

use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::{FieldElement, RealElement};
use crate::poly::PolyQ;
use crate::rat::Rational;

/// Monic minimal polynomial of `elem` over Q.
///
/// Exact kernel computation on the power-basis coordinate matrix of
/// `{1, a, a^2, ...}`: powers are appended until they become linearly
/// dependent; the first dependency gives the (necessarily irreducible)
/// minimal polynomial. Zero maps to `x`.
pub fn minimal_polynomial(elem: &FieldElement) -> PolyQ {
    if elem.is_zero() {
        return PolyQ::x();
    }
    let phi = elem.ctx().phi();
    // Row-reduced basis of the span so far, with the expression of each
    // reduced row in terms of the original powers.
    let mut reduced: Vec<(Vec<Rational>, Vec<Rational>)> = Vec::new();
    let mut power = FieldElement::one(elem.ctx());
    for d in 0..=phi {
        let mut row: Vec<Rational> = power.coeffs().to_vec();
        let mut combo = alloc::vec![Rational::zero(); d + 1];
        combo[d] = Rational::one();
        // reduce against the basis
        for (base, base_combo) in &reduced {
            let Some(pc) = base.iter().position(|v| !v.is_zero()) else {
                continue;
            };
            if row[pc].is_zero() {
                continue;
            }
            let f = row[pc].clone() / base[pc].clone();
            for j in 0..phi {
                let delta = &base[j] * &f;
                row[j] -= delta;
            }
            for (j, bc) in base_combo.iter().enumerate() {
                let delta = bc * &f;
                combo[j] -= delta;
            }
        }
        if row.iter().all(Zero::is_zero) {
            // combo expresses the dependency: sum combo[i] * a^i = 0 with
            // combo[d] = 1, so it is the monic minimal polynomial.
            return PolyQ::from_coeffs(combo);
        }
        reduced.push((row, combo));
        power = power.mul(elem);
    }
    unreachable!("every element of a degree-phi field satisfies a degree <= phi polynomial")
}

/// Field norm (over the field Q(elem) it generates), integrality and unit
/// flags for a real element.
///
/// The norm is the product of the Galois conjugates: `(-1)^d * p(0)` for the
/// monic minimal polynomial `p` of degree `d`. The element is an algebraic
/// integer iff `p` has integer coefficients, and a unit iff additionally the
/// norm is `+-1`.
pub fn norm_and_unit(elem: &RealElement) -> (Rational, bool, bool) {
    let p = minimal_polynomial(elem.as_field());
    let d = p.degree();
    let mut norm = p.coeff(0);
    if d % 2 == 1 {
        norm = -norm;
    }
    let integral = p.has_integer_coeffs();
    let unit = integral && norm.abs().is_one();
    (norm, integral, unit)
}
