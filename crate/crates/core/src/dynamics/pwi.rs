//! Exactly-specified piecewise isometries: triangular-atom rotation maps in
//! complex form `T_i(z) = rho_i z + t_i` with `|rho_i| = 1`, atoms and
//! coefficients living in a cyclotomic field.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::embed::sign_imaginary;
use crate::field::{FieldCtx, FieldElement, RealElement};
use crate::geom::Vec2;
use crate::stargeom::cpoint_f64;

/// A piecewise rotation with convex polygonal atoms. Atoms have disjoint
/// interiors; each branch is `z -> rho z + t` with `rho` a root of unity.
pub struct PiecewiseIsometry {
    ctx: Arc<FieldCtx>,
    pub atoms: Vec<Vec<FieldElement>>,
    pub rotations: Vec<FieldElement>,
    pub translations: Vec<FieldElement>,
}

impl PiecewiseIsometry {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Exact point location: the index of the atom whose interior contains
    /// `z`. Boundary points and points outside every atom are errors.
    pub fn locate(&self, z: &FieldElement) -> Result<usize> {
        for (i, atom) in self.atoms.iter().enumerate() {
            match Self::in_convex_interior(atom, z)? {
                Containment::Interior => return Ok(i),
                Containment::Boundary => return Err(Error::OutsideAtoms),
                Containment::Outside => {}
            }
        }
        Err(Error::OutsideAtoms)
    }

    fn in_convex_interior(atom: &[FieldElement], z: &FieldElement) -> Result<Containment> {
        // orientation of the atom (vertices may wind either way)
        let orient = polygon_orientation(atom);
        let mut on_boundary = false;
        for i in 0..atom.len() {
            let a = &atom[i];
            let b = &atom[(i + 1) % atom.len()];
            let cr = cross_sign(&b.sub(a), &z.sub(a));
            if cr == 0 {
                on_boundary = true;
            } else if cr != orient {
                return Ok(Containment::Outside);
            }
        }
        Ok(if on_boundary { Containment::Boundary } else { Containment::Interior })
    }

    /// Apply the branch owning the atom that contains `z`.
    pub fn step(&self, z: &FieldElement) -> Result<FieldElement> {
        let i = self.locate(z)?;
        Ok(self.apply_branch(i, z))
    }

    pub fn apply_branch(&self, i: usize, z: &FieldElement) -> FieldElement {
        self.rotations[i].mul(z).add(&self.translations[i])
    }

    /// Fixed point of branch `i`: `t_i / (1 - rho_i)`.
    pub fn fixed_point(&self, i: usize) -> Result<FieldElement> {
        let one = FieldElement::one(&self.ctx);
        self.translations[i].div(&one.sub(&self.rotations[i]))
    }

    /// Exact image of atom `i` under its own branch.
    pub fn atom_image(&self, i: usize) -> Vec<FieldElement> {
        self.atoms[i]
            .iter()
            .map(|v| self.apply_branch(i, v))
            .collect()
    }

    /// Every rotation coefficient has unit modulus (`rho * conj(rho) = 1`),
    /// so each branch preserves area.
    pub fn rotations_are_unimodular(&self) -> bool {
        self.rotations
            .iter()
            .all(|r| r.mul(&r.conj()).is_one())
    }

    pub fn atom_f64(&self, i: usize) -> Vec<Vec2> {
        self.atoms[i].iter().map(cpoint_f64).collect()
    }
}

enum Containment {
    Interior,
    Boundary,
    Outside,
}

fn cross_sign(a: &FieldElement, b: &FieldElement) -> i32 {
    // sign of Im(conj(a) b); the product need not contain i, so the sign is
    // taken on the embedding directly
    sign_imaginary(&a.conj().mul(b))
}

fn polygon_orientation(verts: &[FieldElement]) -> i32 {
    // signed area sign via the first non-degenerate corner
    for i in 0..verts.len() {
        let a = &verts[i];
        let b = &verts[(i + 1) % verts.len()];
        let c = &verts[(i + 2) % verts.len()];
        let s = cross_sign(&b.sub(a), &c.sub(b));
        if s != 0 {
            return s;
        }
    }
    0
}

/// The two-atom piecewise rotation by `pi - pi/5` on a pentagon-generating
/// triangle pair, in `Q(zeta_10)` with `a = zeta_10`:
/// atoms `{0, a^2+a^4+a^6, -1}` and `{0, -1, a^6}`, branches
/// `T_0(z) = a^4 z + a^2 + a^4 + a^6` and `T_1(z) = a^6 z + a^6`.
pub fn goetz_pi5() -> PiecewiseIsometry {
    let ctx = FieldCtx::new(10);
    let a = |k: i64| FieldElement::zeta_pow(&ctx, k);
    let zero = FieldElement::zero(&ctx);
    let minus_one = FieldElement::from_i64(&ctx, -1);
    let sum246 = a(2).add(&a(4)).add(&a(6));
    PiecewiseIsometry {
        atoms: alloc::vec![
            alloc::vec![zero.clone(), sum246.clone(), minus_one.clone()],
            alloc::vec![zero, minus_one, a(6)],
        ],
        rotations: alloc::vec![a(4), a(6)],
        translations: alloc::vec![sum246, a(6)],
        ctx,
    }
}

/// The three-atom piecewise rotation by `pi - pi/7` in `Q(zeta_14)` with
/// `a = zeta_14`: atoms `{0, a^5-1, -1}`, `{0, -1, -a^3}`,
/// `{0, -a^3, -a^3+a^2}`; branches `T_0(z) = a^6 z + a^5 - 1`,
/// `T_1(z) = -a z - a^4 + a^5 - a^6 - 1`, `T_2(z) = a^6 z - a^3`.
pub fn goetz_pi7() -> PiecewiseIsometry {
    let ctx = FieldCtx::new(14);
    let a = |k: i64| FieldElement::zeta_pow(&ctx, k);
    let zero = FieldElement::zero(&ctx);
    let one = FieldElement::one(&ctx);
    let minus_one = FieldElement::from_i64(&ctx, -1);
    let t0 = a(5).sub(&one);
    let t1 = a(5).sub(&a(4)).sub(&a(6)).sub(&one);
    let t2 = a(3).neg();
    PiecewiseIsometry {
        atoms: alloc::vec![
            alloc::vec![zero.clone(), a(5).sub(&one), minus_one.clone()],
            alloc::vec![zero.clone(), minus_one, a(3).neg()],
            alloc::vec![zero, a(3).neg(), a(2).sub(&a(3))],
        ],
        rotations: alloc::vec![a(6), a(1).neg(), a(6)],
        translations: alloc::vec![t0, t1, t2],
        ctx,
    }
}

/// The geometric scale factor of the `pi/7` tower: `v = 4 sin^2(pi/14)`,
/// equal to `lambda_14 * GenScale[7]` (checked exactly in `Q(zeta_28)`).
pub fn pi7_tower_scale_identity_holds() -> bool {
    // v = 2 - lambda_14 in Q(zeta_14)
    let ctx14 = FieldCtx::new(14);
    let lam = crate::field::tangent::lambda_element(&ctx14);
    let v = RealElement::from_rational(&ctx14, crate::rat::rat(2, 1)).sub(&lam);
    // GenScale[7] lives in Q(zeta_28)
    let table = crate::stargeom::scale_table(7).expect("scale table of 7");
    let ctx28 = table.ctx().clone();
    let rhs = lam.lift_to(&ctx28).mul(table.gen_scale());
    v.lift_to(&ctx28) == rhs
}
