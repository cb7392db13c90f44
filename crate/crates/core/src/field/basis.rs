//! Primitive-basis decompositions and generator expansions.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::linalg::solve_columns;
use crate::field::minpoly::minimal_polynomial;
use crate::field::tangent::i_tan_element;
use crate::field::{FieldCtx, FieldElement, RealElement};
use crate::half_n;
use crate::poly::PolyQ;
use crate::rat::Rational;

/// Indices `1 <= j < N/2` with `gcd(j, N) = 1`: the primitive star-point
/// indices of a regular `N`-gon.
pub fn primitive_indices(n: u32) -> Vec<u32> {
    (1..=half_n(n))
        .filter(|j| (*j as i64).gcd(&(n as i64)) == 1)
        .collect()
}

/// Write `s_k` over the primitive star points: coefficients `a_j` with
/// `s_k = sum a_j s_j` over primitive `j`, found by an exact linear solve on
/// the power-basis coordinates of the `i*tan` elements in `Q(zeta_N)`.
///
/// For primitive `k` the answer is the unit vector at `k`. The system is
/// guaranteed solvable; an inconsistency therefore signals an arithmetic bug
/// and is reported as an error rather than a panic.
pub fn decompose_in_primitive_basis(n: u32, k: u32) -> Result<BTreeMap<u32, Rational>> {
    if k < 1 || k > half_n(n) {
        return Err(Error::IndexRange(alloc::format!(
            "decompose: need 1 <= k <= {}, got {k}",
            half_n(n)
        )));
    }
    let ctx = FieldCtx::new(n);
    let prim = primitive_indices(n);
    let columns: Vec<Vec<Rational>> = prim
        .iter()
        .map(|&j| Ok(i_tan_element(&ctx, j as i64)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let target = i_tan_element(&ctx, k as i64)?;
    let sol = solve_columns(&columns, target.coeffs()).ok_or(Error::InconsistentSystem)?;
    Ok(prim.into_iter().zip(sol).collect())
}

/// Coefficients `c_0..c_{d-1}` with `target = sum c_i generator^i`, where `d`
/// is the degree of the generator's minimal polynomial.
///
/// Operands may live in different cyclotomic fields; both are lifted into the
/// least common one first. Errors when the target is outside `Q(generator)`.
pub fn express_in_generator(target: &RealElement, generator: &RealElement) -> Result<PolyQ> {
    let (t, g) = lift_pair(target.as_field(), generator.as_field());
    let d = minimal_polynomial(&g).degree();
    let mut columns = Vec::with_capacity(d);
    let mut power = FieldElement::one(t.ctx());
    for _ in 0..d {
        columns.push(power.coeffs().to_vec());
        power = power.mul(&g);
    }
    let sol = solve_columns(&columns, t.coeffs()).ok_or(Error::NotInGeneratedField)?;
    Ok(PolyQ::from_coeffs(sol))
}

fn lift_pair(a: &FieldElement, b: &FieldElement) -> (FieldElement, FieldElement) {
    let (na, nb) = (a.ctx().n(), b.ctx().n());
    if na == nb {
        return (a.clone(), b.clone());
    }
    let l = (na as u64).lcm(&(nb as u64)) as u32;
    let ctx = FieldCtx::new(l);
    (a.lift_to(&ctx), b.lift_to(&ctx))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::eq_lifted;
    use crate::rat::{rat, rat_i64};

    #[test]
    fn octagon_middle_star_point() {
        // s_2 = (-1/2) s_1 + (1/2) s_3 for N = 8
        let d = decompose_in_primitive_basis(8, 2).unwrap();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&1], rat(-1, 2));
        assert_eq!(d[&3], rat(1, 2));
    }

    #[test]
    fn nonagon_sqrt3_star_point() {
        // s_3 = (1/3)(s_1 - s_2 + s_4) for N = 9
        let d = decompose_in_primitive_basis(9, 3).unwrap();
        assert_eq!(d[&1], rat(1, 3));
        assert_eq!(d[&2], rat(-1, 3));
        assert_eq!(d[&4], rat(1, 3));
    }

    #[test]
    fn hexagon_degenerate_point() {
        // Exact solve gives s_2 = 3 s_1; oracle: 3 tan(pi/6) = sqrt(3) = tan(2pi/6)
        // checked by exact field reconstruction below.
        let d = decompose_in_primitive_basis(6, 2).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&1], rat_i64(3));
        let ctx = FieldCtx::new(6);
        let lhs = i_tan_element(&ctx, 1).unwrap().scale(&rat_i64(3));
        let rhs = i_tan_element(&ctx, 2).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn primitive_k_gives_unit_vector() {
        let d = decompose_in_primitive_basis(14, 5).unwrap();
        for (j, c) in d {
            if j == 5 {
                assert_eq!(c, rat_i64(1));
            } else {
                assert_eq!(c, rat_i64(0));
            }
        }
    }

    #[test]
    fn reconstruction_is_exact() {
        for n in [8u32, 9, 12, 15] {
            let ctx = FieldCtx::new(n);
            for k in 1..=half_n(n) {
                let d = decompose_in_primitive_basis(n, k).unwrap();
                let mut acc = FieldElement::zero(&ctx);
                for (j, a) in &d {
                    acc = acc.add(&i_tan_element(&ctx, *j as i64).unwrap().scale(a));
                }
                assert_eq!(acc, i_tan_element(&ctx, k as i64).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn express_identity() {
        let g = crate::field::tangent::tan_real(7, 1).unwrap();
        let p = express_in_generator(&g, &g).unwrap();
        assert_eq!(p, PolyQ::x());
    }

    #[test]
    fn express_rejects_foreign_target() {
        // sqrt(2) = tan(pi/4)+1 is not in Q(tan(pi/3)) = Q(sqrt 3)
        let g = crate::field::tangent::tan_real(3, 1).unwrap(); // sqrt(3)
        let t = crate::field::tangent::tan_real(8, 2).unwrap(); // 1 = tan(pi/4)
        // 1 IS rational so it lies in any field; use tan(pi/8) instead
        assert!(express_in_generator(&t, &g).is_ok());
        let t2 = crate::field::tangent::tan_real(8, 1).unwrap();
        assert_eq!(
            express_in_generator(&t2, &g).unwrap_err(),
            Error::NotInGeneratedField
        );
    }

    #[test]
    fn lifted_equality_of_itan_routes() {
        // tan(k pi / N) in Q(zeta_4N) embeds consistently with i*tan in Q(zeta_N):
        // (i tan) lifted equals i * tan lifted.
        let n = 12u32;
        let small = FieldCtx::new(n);
        let big = FieldCtx::new(4 * n);
        let itan = i_tan_element(&small, 5).unwrap();
        let tan = crate::field::tangent::tan_real_in(&big, n, 5).unwrap();
        let i = FieldElement::zeta_pow(&big, n as i64);
        assert!(eq_lifted(&itan, &tan.as_field().mul(&i)));
    }
}
