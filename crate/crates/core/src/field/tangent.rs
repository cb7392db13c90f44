//! Exact trigonometric elements: `i*tan`, real tangents, sines, cosines and
//! `lambda_n = 2cos(2pi/n)`.
//!
//! `i*tan(k*pi/N) = (zeta_N^k - 1)/(zeta_N^k + 1)` lives in `Q(zeta_N)`
//! itself. The real value `tan(k*pi/N)` does not (unless `4 | N`), so real
//! tangents are always represented in `Q(zeta_4N)`, where `i = zeta_4N^N` is a
//! genuine field element.

use alloc::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement, RealElement};
use crate::rat::rat;

/// Does `tan(k*pi/n)` have a pole? (`2k = n mod 2n`)
pub fn is_tan_pole(n: u32, k: i64) -> bool {
    (2 * k - n as i64).rem_euclid(2 * n as i64) == 0
}

/// `i*tan(k*pi/N)` as the element `(zeta^k - 1)/(zeta^k + 1)` of `Q(zeta_N)`.
///
/// The division is carried out by the closed form
/// `1/(zeta^k + 1) = (zeta^k - 1) / (zeta^2k - 1)`, so no Euclidean inversion
/// is needed.
pub fn i_tan_element(ctx: &Arc<FieldCtx>, k: i64) -> Result<FieldElement> {
    let n = ctx.n();
    if k.rem_euclid(n as i64) == 0 {
        return Err(Error::IndexRange(alloc::format!(
            "i_tan_element: k = {k} is 0 mod {n}"
        )));
    }
    if is_tan_pole(n, k) {
        return Err(Error::TangentPole { n, k });
    }
    let zk_minus_1 = FieldElement::zeta_pow(ctx, k).sub(&FieldElement::one(ctx));
    let inv = FieldElement::inv_zeta_pow_minus_one(ctx, 2 * k)?;
    Ok(zk_minus_1.mul(&zk_minus_1).mul(&inv))
}

/// `tan(k*pi/N)` as a real element of `Q(zeta_4N)`.
pub fn tan_real(n: u32, k: i64) -> Result<RealElement> {
    let ctx = FieldCtx::new(4 * n);
    tan_real_in(&ctx, n, k)
}

/// `tan(k*pi/N)` inside a caller-provided `Q(zeta_m)` with `4N | m`.
pub fn tan_real_in(ctx: &Arc<FieldCtx>, n: u32, k: i64) -> Result<RealElement> {
    assert_eq!(ctx.n() % (4 * n), 0, "field must contain zeta_4N");
    if k.rem_euclid(n as i64) == 0 {
        return Ok(RealElement::new(FieldElement::zero(ctx)).unwrap());
    }
    if is_tan_pole(n, k) {
        return Err(Error::TangentPole { n, k });
    }
    let s = (ctx.n() / n) as i64; // zeta_n = omega^s; e^{2 i k pi / n} = omega^{s k}
    let i_exp = ctx.n() as i64 / 4;
    let zk_minus_1 = FieldElement::zeta_pow(ctx, s * k).sub(&FieldElement::one(ctx));
    let inv = FieldElement::inv_zeta_pow_minus_one(ctx, 2 * s * k)?;
    let itan = zk_minus_1.mul(&zk_minus_1).mul(&inv);
    let tan = itan.mul(&FieldElement::zeta_pow(ctx, -i_exp));
    RealElement::new(tan)
}

/// `cot(k*pi/N)` as a real element of the same `Q(zeta_m)` carrier.
pub fn cot_real_in(ctx: &Arc<FieldCtx>, n: u32, k: i64) -> Result<FieldElement> {
    assert_eq!(ctx.n() % (4 * n), 0);
    if k.rem_euclid(n as i64) == 0 {
        return Err(Error::TangentPole { n, k }); // cot pole at multiples of pi
    }
    let s = (ctx.n() / n) as i64;
    let i_exp = ctx.n() as i64 / 4;
    let zk_plus_1 = FieldElement::zeta_pow(ctx, s * k).add(&FieldElement::one(ctx));
    let inv = FieldElement::inv_zeta_pow_minus_one(ctx, s * k)?;
    Ok(zk_plus_1.mul(&inv).mul(&FieldElement::zeta_pow(ctx, i_exp)))
}

/// `cos(2*pi*k/n)` inside `Q(zeta_n)`.
pub fn cos_2pi_element(ctx: &Arc<FieldCtx>, k: i64) -> FieldElement {
    FieldElement::zeta_pow(ctx, k)
        .add(&FieldElement::zeta_pow(ctx, -k))
        .scale(&rat(1, 2))
}

/// `lambda_n = 2 cos(2*pi/n)`, the trace generator of the maximal real
/// subfield, inside `Q(zeta_n)`.
pub fn lambda_element(ctx: &Arc<FieldCtx>) -> RealElement {
    let fe = FieldElement::zeta_pow(ctx, 1).add(&FieldElement::zeta_pow(ctx, -1));
    RealElement::new(fe).unwrap()
}

/// `sin(2*pi*k/N)` as a real element of `Q(zeta_4N)`.
pub fn sin_2pi_real(n: u32, k: i64) -> RealElement {
    let ctx = FieldCtx::new(4 * n);
    let i_exp = n as i64;
    let diff = FieldElement::zeta_pow(&ctx, 4 * k).sub(&FieldElement::zeta_pow(&ctx, -4 * k));
    let val = diff
        .mul(&FieldElement::zeta_pow(&ctx, -i_exp))
        .scale(&rat(1, 2));
    RealElement::new(val).unwrap()
}

/// `tan(2*pi*k/N)` as a real element of `Q(zeta_4N)`; errors at the poles.
pub fn tan_2pi_real(n: u32, k: i64) -> Result<RealElement> {
    // tan(2 k pi / N) = tan(2k * pi / N) with the half-angle convention of
    // `tan_real` (argument k'*pi/N with k' = 2k).
    tan_real(n, 2 * k)
}
