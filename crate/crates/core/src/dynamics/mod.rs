//! Piecewise isometric dynamics: the outer-billiards map, its singularity
//! webs, the Digital Filter sawtooth map and exactly-specified piecewise
//! rotations.

pub mod df;
pub mod pwi;
pub mod web;

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::embed::sign;
use crate::field::{FieldCtx, FieldElement, RealElement};
use crate::geom::{Segment, Vec2};
use crate::stargeom::{cpoint_f64, sec_real_in, PolygonSpec};

/// Traversal orientation used to pick the support vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    Clockwise,
    Counterclockwise,
}

/// The outer-billiards system of a convex regular polygon, clockwise by
/// convention: `tau(p) = 2c - p` with `c` the clockwise support vertex.
#[derive(Clone, Debug)]
pub struct OuterBilliards {
    pub polygon: PolygonSpec,
    vertices: Vec<Vec2>,
    singular_tol: f64,
}

impl OuterBilliards {
    pub fn new(polygon: PolygonSpec) -> Self {
        let vertices = polygon.vertices();
        OuterBilliards { polygon, vertices, singular_tol: 1e-12 }
    }

    pub fn standard(n: u32) -> Self {
        OuterBilliards::new(PolygonSpec::standard(n))
    }

    pub fn vertices(&self) -> &[Vec2] {
        &self.vertices
    }

    /// Signed interior margin: > 0 strictly inside, ~0 on the boundary.
    fn boundary_margin(&self, p: Vec2) -> f64 {
        // vertices run counterclockwise; inside means left of every edge
        let n = self.vertices.len();
        let mut worst = f64::INFINITY;
        for i in 0..n {
            let a = self.vertices[i];
            let b = self.vertices[(i + 1) % n];
            let c = b.sub(a).cross(p.sub(a)) / b.sub(a).norm();
            worst = worst.min(c);
        }
        worst
    }

    pub fn contains(&self, p: Vec2) -> bool {
        self.boundary_margin(p) > -self.singular_tol
    }

    /// Support vertex of `p` for the requested orientation: the vertex `c`
    /// such that the polygon lies entirely to the left (clockwise) or right
    /// (counterclockwise) of the ray `p -> c`. `Err(SingularPoint)` when `p`
    /// lies on an extended edge and the choice is ambiguous.
    pub fn support_vertex(&self, p: Vec2, orient: Orientation) -> Result<usize> {
        let n = self.vertices.len();
        for i in 0..n {
            let c = self.vertices[i];
            let d = c.sub(p);
            let mut ok = true;
            let mut min_cross = f64::INFINITY;
            for (j, &v) in self.vertices.iter().enumerate() {
                if j == i {
                    continue;
                }
                let mut cr = d.cross(v.sub(c));
                if orient == Orientation::Counterclockwise {
                    cr = -cr;
                }
                min_cross = min_cross.min(cr);
                if cr < -self.singular_tol {
                    ok = false;
                    break;
                }
            }
            if ok {
                if min_cross.abs() <= self.singular_tol {
                    return Err(Error::SingularPoint);
                }
                return Ok(i);
            }
        }
        Err(Error::SingularPoint)
    }

    /// One step of the outer-billiards map.
    pub fn tau(&self, p: Vec2) -> Result<Vec2> {
        self.step(p, Orientation::Clockwise).map(|(q, _)| q)
    }

    /// One step of the inverse map.
    pub fn tau_inverse(&self, p: Vec2) -> Result<Vec2> {
        self.step(p, Orientation::Counterclockwise).map(|(q, _)| q)
    }

    pub fn step(&self, p: Vec2, orient: Orientation) -> Result<(Vec2, usize)> {
        if self.contains(p) {
            return Err(Error::InsidePolygon);
        }
        let i = self.support_vertex(p, orient)?;
        let c = self.vertices[i];
        Ok((c.scale(2.0).sub(p), i))
    }
}

/// A finite orbit record.
#[derive(Clone, Debug)]
pub struct OrbitResult {
    /// Detected period, or `None` if `max_iter` was reached first.
    pub period: Option<usize>,
    /// Visited points, starting with the seed (length `period` when
    /// periodic).
    pub points: Vec<Vec2>,
    /// Support-vertex index at each step.
    pub signature: Vec<usize>,
}

/// Iterate `tau` until the orbit returns to its start (within `tol`, with the
/// step signature verified over a second loop) or `max_iter` steps elapse.
pub fn orbit(p0: Vec2, ob: &OuterBilliards, max_iter: usize, tol: f64) -> Result<OrbitResult> {
    let mut points = alloc::vec![p0];
    let mut signature = Vec::new();
    let mut p = p0;
    for step in 0..max_iter {
        let (q, i) = ob.step(p, Orientation::Clockwise).map_err(|e| match e {
            Error::SingularPoint => Error::SingularOrbit { at_step: step },
            other => other,
        })?;
        signature.push(i);
        if q.dist(p0) < tol {
            let period = step + 1;
            // guard against near-returns: the next loop must repeat the
            // signature exactly
            let mut r = q;
            for j in 0..period {
                let (nq, ni) = ob.step(r, Orientation::Clockwise).map_err(|e| match e {
                    Error::SingularPoint => Error::SingularOrbit { at_step: period + j },
                    other => other,
                })?;
                if ni != signature[j] {
                    return Err(Error::Domain(alloc::string::String::from(
                        "near-return with mismatched step signature",
                    )));
                }
                r = nq;
            }
            return Ok(OrbitResult { period: Some(period), points, signature });
        }
        points.push(q);
        p = q;
    }
    Ok(OrbitResult { period: None, points, signature })
}

/// Exact outer-billiards state: the polygon's vertices as elements of
/// `Q(zeta_4N)`. Opt-in (coefficients grow along orbits); the float backend
/// proposes each support vertex and exact sign tests certify it.
pub struct ExactOuterBilliards {
    pub n: u32,
    ctx: alloc::sync::Arc<FieldCtx>,
    vertices: Vec<FieldElement>,
    float: OuterBilliards,
}

impl ExactOuterBilliards {
    pub fn standard(n: u32) -> Result<Self> {
        let ctx = FieldCtx::new(4 * n);
        let r = sec_real_in(&ctx, n, 1)?;
        // vertex j at angle -1/4 + 1/(2n) + j/n turns = omega^(-n + 2 + 4j)
        let vertices = (0..n)
            .map(|j| {
                FieldElement::zeta_pow(&ctx, -(n as i64) + 2 + 4 * j as i64).mul(r.as_field())
            })
            .collect();
        Ok(ExactOuterBilliards { n, ctx, vertices, float: OuterBilliards::standard(n) })
    }

    pub fn ctx(&self) -> &alloc::sync::Arc<FieldCtx> {
        &self.ctx
    }

    /// Exact cross product `Im(conj(a) b)` as a real element.
    fn cross_exact(a: &FieldElement, b: &FieldElement) -> RealElement {
        RealElement::new(a.conj().mul(b).im()).unwrap()
    }

    /// Exact `tau` (clockwise).
    pub fn tau(&self, z: &FieldElement) -> Result<FieldElement> {
        let p = cpoint_f64(z);
        let candidates: Vec<usize> = match self.float.support_vertex(p, Orientation::Clockwise) {
            Ok(i) => alloc::vec![i],
            Err(_) => (0..self.n as usize).collect(),
        };
        'cand: for i in candidates {
            let c = &self.vertices[i];
            let d = c.sub(z);
            for (j, v) in self.vertices.iter().enumerate() {
                if j == i {
                    continue;
                }
                let cr = Self::cross_exact(&d, &v.sub(c));
                let s = sign(cr.as_field());
                if s == 0 {
                    return Err(Error::SingularPoint);
                }
                if s < 0 {
                    continue 'cand;
                }
            }
            return Ok(c.scale(&crate::rat::rat(2, 1)).sub(z));
        }
        Err(Error::SingularPoint)
    }

    /// Exact orbit period (exact equality of field elements).
    pub fn period(&self, z0: &FieldElement, max_iter: usize) -> Result<Option<usize>> {
        let mut z = z0.clone();
        for step in 0..max_iter {
            z = self.tau(&z).map_err(|e| match e {
                Error::SingularPoint => Error::SingularOrbit { at_step: step },
                other => other,
            })?;
            if z == *z0 {
                return Ok(Some(step + 1));
            }
        }
        Ok(None)
    }
}

/// Segment images under one application of the map: the segment is cut where
/// it crosses extended edge lines, each exterior piece reflects through its
/// support vertex, and pieces along singular rays (or inside the polygon) are
/// dropped.
pub fn map_segment(ob: &OuterBilliards, seg: Segment, orient: Orientation) -> Vec<Segment> {
    let verts = ob.vertices();
    let n = verts.len();
    let dir = seg.b.sub(seg.a);
    let mut cuts = alloc::vec![0.0f64, 1.0];
    for i in 0..n {
        let a = verts[i];
        let b = verts[(i + 1) % n];
        let ed = b.sub(a);
        let denom = dir.cross(ed);
        if denom == 0.0 {
            continue;
        }
        let t = a.sub(seg.a).cross(ed) / denom;
        if t > 0.0 && t < 1.0 {
            cuts.push(t);
        }
    }
    cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let mut out = Vec::new();
    for w in cuts.windows(2) {
        if w[1] - w[0] < 1e-13 {
            continue;
        }
        let a = seg.point_at(w[0]);
        let b = seg.point_at(w[1]);
        let mid = a.add(b).scale(0.5);
        let Ok((_, i)) = ob.step(mid, orient) else {
            continue;
        };
        let c = verts[i];
        out.push(Segment::new(c.scale(2.0).sub(a), c.scale(2.0).sub(b)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{first_family, Alias, Role};
    use crate::stargeom::{outer_dual_points, star_polygon};

    #[test]
    fn tau_round_trip() {
        let ob = OuterBilliards::standard(7);
        let p = Vec2::new(3.0, 0.2);
        let q = ob.tau(p).unwrap();
        let r = ob.tau_inverse(q).unwrap();
        assert!(r.dist(p) < 1e-12);
    }

    #[test]
    fn tau_rejects_interior_and_singular() {
        let ob = OuterBilliards::standard(14);
        assert_eq!(ob.tau(Vec2::new(0.0, 0.0)).unwrap_err(), Error::InsidePolygon);
        // each map is singular on its own family of edge-extension rays:
        // the leftward base extension for tau, the rightward one for its
        // inverse
        assert_eq!(ob.tau(Vec2::new(-3.0, -1.0)).unwrap_err(), Error::SingularPoint);
        assert_eq!(ob.tau_inverse(Vec2::new(3.0, -1.0)).unwrap_err(), Error::SingularPoint);
        assert!(ob.tau(Vec2::new(3.0, -1.0)).is_ok());
    }

    #[test]
    fn area_preservation_sampled() {
        // the Jacobian of p -> 2c - p is -I: the sampled determinant is 1
        let ob = OuterBilliards::standard(9);
        let p = Vec2::new(2.5, 1.3);
        let eps = 1e-6;
        let q0 = ob.tau(p).unwrap();
        let q1 = ob.tau(Vec2::new(p.x + eps, p.y)).unwrap();
        let q2 = ob.tau(Vec2::new(p.x, p.y + eps)).unwrap();
        let det = q1.sub(q0).cross(q2.sub(q0)) / (eps * eps);
        assert!((det.abs() - 1.0).abs() < 1e-6);
    }

    #[test]
    fn d_center_orbit_visits_outer_dual_star_vertices() {
        // cD lies on the vertex ring of OuterDual[{14,6}]; each tau step is
        // forced to jump 6 of the 14 ring positions (the midpoint of any
        // other pair misses the polygon's vertex radius), so the orbit closes
        // after lcm(14,6)/6 = 7 steps: one of the two {7,3} circuits. This is
        // the degeneracy rule N/gcd(6,14) for S[6].
        let fam = first_family(14).unwrap();
        let d = fam.d_tile();
        let ob = OuterBilliards::standard(14);
        let res = orbit(d.center_f64(), &ob, 100, 1e-9).unwrap();
        assert_eq!(res.period, Some(7));
        let star = star_polygon(14, 6).unwrap();
        let targets = outer_dual_points(&star.vertices_f64(), 14);
        for p in &res.points {
            let nearest = targets.iter().map(|t| t.dist(*p)).fold(f64::INFINITY, f64::min);
            assert!(nearest < 1e-10, "orbit point off the dual star vertex set");
        }
        // the mirrored D copy (LS side) runs the second circuit: together the
        // two orbits cover all 14 dual-star vertices
        let d_mirror = Vec2::new(-d.center_f64().x, d.center_f64().y);
        let res2 = orbit(d_mirror, &ob, 100, 1e-9).unwrap();
        assert_eq!(res2.period, Some(7));
        let mut covered = 0;
        for t in &targets {
            let hit = res
                .points
                .iter()
                .chain(&res2.points)
                .any(|p| p.dist(*t) < 1e-10);
            if hit {
                covered += 1;
            }
        }
        assert_eq!(covered, 14);
    }

    #[test]
    fn family_center_periods_obey_degeneracy_rule() {
        let fam = first_family(14).unwrap();
        let ob = OuterBilliards::standard(14);
        for k in 1..=6u32 {
            let t = fam.tile_with_role(Role::S(k)).unwrap();
            let res = orbit(t.center_f64(), &ob, 1000, 1e-9).unwrap();
            let period = res.period.unwrap();
            assert!(period == 14 || period == 7, "S[{k}] center period {period}");
            let gcd = num_integer::Integer::gcd(&(k as i64), &14);
            if gcd > 1 {
                assert_eq!(period as i64, 14 / gcd, "S[{k}]");
            } else {
                assert_eq!(period, 14, "S[{k}]");
            }
        }
    }

    #[test]
    fn dodecagon_s1_period() {
        let fam = first_family(12).unwrap();
        let ob = OuterBilliards::standard(12);
        let s1 = fam.tile_with_role(Role::S(1)).unwrap();
        let res = orbit(s1.center_f64(), &ob, 100, 1e-9).unwrap();
        assert_eq!(res.period, Some(12));
    }

    #[test]
    fn exact_tau_reproduces_periods() {
        let fam = first_family(14).unwrap();
        let exact = ExactOuterBilliards::standard(14).unwrap();
        // D = S[6] is degenerate (gcd 2): period 7, exactly
        assert_eq!(exact.period(&fam.d_tile().center, 20).unwrap(), Some(7));
        let s2 = fam.tile_with_role(Role::S(2)).unwrap();
        assert_eq!(exact.period(&s2.center, 20).unwrap(), Some(7));
        // M = S[5] is primitive: full period 14
        let m = fam.tile_with_alias(Alias::M).unwrap();
        assert_eq!(exact.period(&m.center, 20).unwrap(), Some(14));
    }
}
