//! Star points, scales, star polygons, outer duals and tile centers of a
//! regular N-gon.
//!
//! Standard position: apothem 1, center at the origin, bottom edge horizontal
//! (so the extended base edge is the line `y = -1`). The star points of `N`
//! are then `star[k] = (-s_k, -1)` with `s_k = tan(k*pi/N)`, `1 <= k <= <N/2>`,
//! and the scales are `scale[k] = s_1/s_k`, strictly decreasing from
//! `scale[1] = 1` down to `GenScale[N] = scale[<N/2>]`.
//!
//! Every constant is carried exactly in `Q(zeta_4N)` with a float mirror for
//! geometry consumers.

use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::embed::to_c64;
use crate::field::tangent::{cot_real_in, lambda_element, tan_real_in};
use crate::field::{FieldCtx, FieldElement, RealElement};
use crate::geom::Vec2;
use crate::half_n;
use crate::rat::rat;

/// A regular polygon placement: side count, apothem, center and phase (the
/// polar angle of vertex 0). Standard position is `standard(n)`.
#[derive(Clone, Debug)]
pub struct PolygonSpec {
    pub sides: u32,
    pub apothem: f64,
    pub center: Vec2,
    pub phase: f64,
}

impl PolygonSpec {
    /// Apothem 1, centered at the origin, bottom edge horizontal.
    pub fn standard(sides: u32) -> PolygonSpec {
        assert!(sides >= 3);
        PolygonSpec {
            sides,
            apothem: 1.0,
            center: Vec2::new(0.0, 0.0),
            phase: -core::f64::consts::FRAC_PI_2 + core::f64::consts::PI / sides as f64,
        }
    }

    pub fn circumradius(&self) -> f64 {
        self.apothem / libm::cos(core::f64::consts::PI / self.sides as f64)
    }

    pub fn vertices(&self) -> Vec<Vec2> {
        let r = self.circumradius();
        (0..self.sides)
            .map(|j| {
                let a = self.phase + 2.0 * core::f64::consts::PI * j as f64 / self.sides as f64;
                self.center.add(Vec2::new(r * libm::cos(a), r * libm::sin(a)))
            })
            .collect()
    }
}

/// One star point `(-s_k, -1)` of a regular N-gon.
#[derive(Clone, Debug)]
pub struct StarPoint {
    pub k: u32,
    /// `gcd(k, N) = 1`.
    pub primitive: bool,
    /// `s_k = tan(k*pi/N)` in `Q(zeta_4N)`.
    pub s: RealElement,
}

impl StarPoint {
    pub fn coords_f64(&self) -> Vec2 {
        Vec2::new(-self.s.to_f64(), -1.0)
    }
}

/// The star points of `N` in standard position.
pub fn star_points(n: u32) -> Result<Vec<StarPoint>> {
    if n < 3 {
        return Err(Error::BadPolygon(alloc::format!("star_points needs N >= 3, got {n}")));
    }
    let ctx = FieldCtx::new(4 * n);
    (1..=half_n(n))
        .map(|k| {
            Ok(StarPoint {
                k,
                primitive: (k as i64).gcd(&(n as i64)) == 1,
                s: tan_real_in(&ctx, n, k as i64)?,
            })
        })
        .collect()
}

/// The full per-N record of star points, dual points, scales and `GenScale`.
#[derive(Clone, Debug)]
pub struct ScaleTable {
    pub n: u32,
    ctx: Arc<FieldCtx>,
    /// `s_k = tan(k*pi/N)`, index 0 holding `s_1`.
    pub s: Vec<RealElement>,
    /// `c_k = cot(k*pi/N)` (the dual star points).
    pub duals: Vec<RealElement>,
    /// `scale[k] = s_1/s_k`.
    pub scales: Vec<RealElement>,
    /// `s_k/s_1` (reciprocals of the scales).
    pub dual_scales: Vec<RealElement>,
    pub primitive: Vec<bool>,
}

impl ScaleTable {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// 1-based accessors matching the `scale[k]` notation.
    pub fn s_k(&self, k: u32) -> &RealElement {
        &self.s[(k - 1) as usize]
    }

    pub fn scale(&self, k: u32) -> &RealElement {
        &self.scales[(k - 1) as usize]
    }

    pub fn dual(&self, k: u32) -> &RealElement {
        &self.duals[(k - 1) as usize]
    }

    pub fn dual_scale(&self, k: u32) -> &RealElement {
        &self.dual_scales[(k - 1) as usize]
    }

    pub fn is_primitive(&self, k: u32) -> bool {
        self.primitive[(k - 1) as usize]
    }

    /// `GenScale[N] = scale[<N/2>]`, the smallest scale.
    pub fn gen_scale(&self) -> &RealElement {
        self.scale(half_n(self.n))
    }

    pub fn scales_f64(&self) -> Vec<f64> {
        self.scales.iter().map(RealElement::to_f64).collect()
    }
}

/// Build the scale table of `N` exactly in `Q(zeta_4N)`.
pub fn scale_table(n: u32) -> Result<ScaleTable> {
    if n < 3 {
        return Err(Error::BadPolygon(alloc::format!("scale_table needs N >= 3, got {n}")));
    }
    let ctx = FieldCtx::new(4 * n);
    let h = half_n(n);
    let mut s = Vec::with_capacity(h as usize);
    let mut duals = Vec::with_capacity(h as usize);
    let mut primitive = Vec::with_capacity(h as usize);
    for k in 1..=h {
        s.push(tan_real_in(&ctx, n, k as i64)?);
        duals.push(RealElement::new(cot_real_in(&ctx, n, k as i64)?).unwrap());
        primitive.push((k as i64).gcd(&(n as i64)) == 1);
    }
    let s1 = s[0].clone();
    let c1 = duals[0].clone();
    let mut scales = Vec::with_capacity(h as usize);
    let mut dual_scales = Vec::with_capacity(h as usize);
    for k in 1..=h as usize {
        // scale[k] = s_1 * cot(k pi/N); dual scale[k] = s_k * cot(pi/N)
        scales.push(s1.mul(&duals[k - 1]));
        dual_scales.push(s[k - 1].mul(&c1));
    }
    Ok(ScaleTable { n, ctx, s, duals, scales, dual_scales, primitive })
}

/// `GenScale[N]` alone (still exact).
pub fn gen_scale(n: u32) -> Result<RealElement> {
    Ok(scale_table(n)?.gen_scale().clone())
}

/// `ScaleSwap[N, M] = tan(pi/N)/tan(pi/M)`: the side ratio of standard-position
/// N- and M-gons. Exact, in `Q(zeta_4L)` with `L = lcm(N, M)`.
pub fn scale_swap_exact(n: u32, m: u32) -> Result<RealElement> {
    if n < 3 || m < 3 {
        return Err(Error::BadPolygon(alloc::string::String::from(
            "scale_swap needs N, M >= 3",
        )));
    }
    let l = (n as u64).lcm(&(m as u64)) as u32;
    let ctx = FieldCtx::new(4 * l);
    let tan_n = tan_real_in(&ctx, n, 1)?;
    let cot_m = cot_real_in(&ctx, m, 1)?;
    Ok(RealElement::new(tan_n.as_field().mul(&cot_m)).unwrap())
}

pub fn scale_swap(n: u32, m: u32) -> Result<f64> {
    Ok(scale_swap_exact(n, m)?.to_f64())
}

/// A star polygon `{p, q}` in standard position: `gcd(p, q)` closed circuits
/// covering all `p` vertices, scaled and rotated so the embedded `{p, 1}` is
/// the standard-position p-gon (equivalently: every edge lies on an extended
/// edge line of that p-gon).
#[derive(Clone, Debug)]
pub struct StarPolygon {
    pub p: u32,
    pub q: u32,
    ctx: Arc<FieldCtx>,
    /// All `p` vertices, exact (complex elements of `Q(zeta_4p)`).
    pub vertices: Vec<FieldElement>,
    /// Vertex indices of each closed circuit, in traversal order.
    pub circuits: Vec<Vec<u32>>,
}

impl StarPolygon {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn vertices_f64(&self) -> Vec<Vec2> {
        self.vertices.iter().map(cpoint_f64).collect()
    }

    /// Circuits as f64 vertex loops.
    pub fn circuits_f64(&self) -> Vec<Vec<Vec2>> {
        let pts = self.vertices_f64();
        self.circuits
            .iter()
            .map(|c| c.iter().map(|&i| pts[i as usize]).collect())
            .collect()
    }

    /// All edges (each circuit closed).
    pub fn edges_f64(&self) -> Vec<crate::geom::Segment> {
        let pts = self.vertices_f64();
        let mut out = Vec::new();
        for c in &self.circuits {
            for w in 0..c.len() {
                let a = pts[c[w] as usize];
                let b = pts[c[(w + 1) % c.len()] as usize];
                out.push(crate::geom::Segment::new(a, b));
            }
        }
        out
    }
}

/// Float view of an exact complex point.
pub fn cpoint_f64(z: &FieldElement) -> Vec2 {
    let (re, im) = to_c64(z);
    Vec2::new(re, im)
}

/// `1/cos(q*pi/p)` as a real element of a field containing `zeta_4p`.
///
/// With `x = e^{2 i q pi/p}`, `1/cos(q pi/p) = 2 e^{i q pi/p}/(x + 1)` and
/// `1/(x + 1) = (x - 1)/(x^2 - 1)`, so only the closed-form inverse of
/// `x^2 - 1` is needed.
pub fn sec_real_in(ctx: &Arc<FieldCtx>, p: u32, q: i64) -> Result<RealElement> {
    assert_eq!(ctx.n() % (4 * p), 0);
    let s = (ctx.n() / (4 * p)) as i64; // zeta_4p = omega^s
    let e = 2 * q * s; // e^{i q pi/p} = omega^e
    let x_minus_1 = FieldElement::zeta_pow(ctx, 2 * e).sub(&FieldElement::one(ctx));
    let inv_sq = FieldElement::inv_zeta_pow_minus_one(ctx, 4 * e)?;
    let inv_xp1 = x_minus_1.mul(&inv_sq);
    let val = FieldElement::zeta_pow(ctx, e).mul(&inv_xp1).scale(&rat(2, 1));
    RealElement::new(val)
}

/// Build `{p, q}` with its exact vertex set.
pub fn star_polygon(p: u32, q: u32) -> Result<StarPolygon> {
    if p < 3 {
        return Err(Error::BadPolygon(alloc::format!("{{p,q}}: p >= 3 required, got {p}")));
    }
    if q < 1 || 2 * q >= p {
        return Err(Error::BadPolygon(alloc::format!(
            "{{p,q}}: 1 <= q < p/2 required, got q = {q}"
        )));
    }
    let ctx = FieldCtx::new(4 * p);
    let radius = sec_real_in(&ctx, p, q as i64)?;
    // vertex j at angle -pi/2 - q*pi/p + 2*pi*j/p, i.e. omega^(-p - 2q + 4j)
    let vertices: Vec<FieldElement> = (0..p)
        .map(|j| {
            let e = -(p as i64) - 2 * q as i64 + 4 * j as i64;
            FieldElement::zeta_pow(&ctx, e).mul(radius.as_field())
        })
        .collect();
    let d = (p as i64).gcd(&(q as i64)) as u32;
    let circuits = (0..d)
        .map(|start| {
            let mut c = Vec::with_capacity((p / d) as usize);
            let mut v = start;
            loop {
                c.push(v);
                v = (v + q) % p;
                if v == start {
                    break;
                }
            }
            c
        })
        .collect();
    Ok(StarPolygon { p, q, ctx, vertices, circuits })
}

/// Outer dual of a point: scale by `r_N/h_N` then rotate by `-pi/N` about the
/// origin (the circumscribed half-turned copy of the N-gon).
pub fn outer_dual_point(x: Vec2, n: u32) -> Vec2 {
    let factor = 1.0 / libm::cos(core::f64::consts::PI / n as f64);
    x.scale(factor).rotate(-core::f64::consts::PI / n as f64)
}

pub fn outer_dual_points(xs: &[Vec2], n: u32) -> Vec<Vec2> {
    xs.iter().map(|&x| outer_dual_point(x, n)).collect()
}

/// Exact outer dual inside a field containing `zeta_4N`: multiply by
/// `r_N * e^{-i pi/N}`.
pub fn outer_dual_exact(z: &FieldElement, n: u32) -> Result<FieldElement> {
    let ctx = z.ctx().clone();
    let r = sec_real_in(&ctx, n, 1)?;
    let s = (ctx.n() / (4 * n)) as i64 * 2; // e^{-i pi/N} = omega^{-2s'}
    Ok(z.mul(r.as_field()).mul(&FieldElement::zeta_pow(&ctx, -s)))
}

/// Exact complex star point `star[k] = -s_k - i` in a field containing
/// `zeta_4N`.
pub fn star_point_exact(ctx: &Arc<FieldCtx>, n: u32, k: u32) -> Result<FieldElement> {
    let s = tan_real_in(ctx, n, k as i64)?;
    let i = FieldElement::zeta_pow(ctx, ctx.n() as i64 / 4);
    Ok(s.as_field().neg().sub(&i))
}

/// Tile centers `cS[k] = OuterDual[star[k]]` for `k = 1..<N/2>`, exact.
///
/// Expanding the rotation gives the closed form
/// `cS[k] = (-(s_1 + s_k), s_1 s_k - 1)`: every center lies on the line
/// through `star[1] = (-s_1, -1)` with slope `-s_1` (the base edge line of
/// the outer dual).
pub fn tile_centers_exact(n: u32) -> Result<Vec<FieldElement>> {
    let ctx = FieldCtx::new(4 * n);
    (1..=half_n(n))
        .map(|k| outer_dual_exact(&star_point_exact(&ctx, n, k)?, n))
        .collect()
}

pub fn tile_centers(n: u32) -> Result<Vec<Vec2>> {
    Ok(tile_centers_exact(n)?.iter().map(cpoint_f64).collect())
}

/// `lambda_N = 2 cos(2 pi/N)`, `lambda_2N`, and the exact `GenScale`
/// conversion identities between them.
pub struct LambdaConversions {
    pub n: u32,
    pub lambda_n: RealElement,
    pub lambda_2n: RealElement,
    /// `GenScale[N] * lambda_2N^2 = 4 - lambda_2N^2` (N even) or
    /// `GenScale[N] * lambda_2N = 2 - lambda_2N` (N odd), checked exactly in
    /// `Q(zeta_4N)`.
    pub identity_holds: bool,
}

pub fn lambda_conversions(n: u32) -> Result<LambdaConversions> {
    let table = scale_table(n)?;
    let ctx4 = table.ctx().clone();
    let lambda_n = lambda_element(&FieldCtx::new(n));
    let lambda_2n = lambda_element(&FieldCtx::new(2 * n));
    let lam = lambda_2n.lift_to(&ctx4);
    let gs = table.gen_scale();
    let identity_holds = if n % 2 == 0 {
        let lam2 = lam.mul(&lam);
        gs.mul(&lam2) == RealElement::from_rational(&ctx4, rat(4, 1)).sub(&lam2)
    } else {
        gs.mul(&lam) == RealElement::from_rational(&ctx4, rat(2, 1)).sub(&lam)
    };
    Ok(LambdaConversions { n, lambda_n, lambda_2n, identity_holds })
}

/// Exact check of the `GenScale` closed forms: `tan^2(pi/N)` for even N,
/// `tan(pi/N) * tan(pi/2N)` for odd N (the odd case compares in `Q(zeta_8N)`).
pub fn gen_scale_closed_form_holds(n: u32) -> Result<bool> {
    let table = scale_table(n)?;
    let gs = table.gen_scale();
    if n % 2 == 0 {
        let s1 = table.s_k(1);
        Ok(*gs == s1.mul(s1))
    } else {
        let big = FieldCtx::new(8 * n);
        let t_n = tan_real_in(&big, n, 1)?;
        let t_2n = tan_real_in(&big, 2 * n, 1)?;
        Ok(gs.lift_to(&big) == t_n.mul(&t_2n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::eq_lifted;
    use crate::rat::rat_i64;

    #[test]
    fn star_points_of_small_ngons() {
        // N = 4: the single point (-1, -1)
        let sp = star_points(4).unwrap();
        assert_eq!(sp.len(), 1);
        assert_eq!(sp[0].s.as_field().as_rational(), Some(rat_i64(1)));
        assert_eq!(sp[0].coords_f64(), Vec2::new(-1.0, -1.0));
        // N = 6: s-values {1/sqrt3, sqrt3}, primitive flags {true, false}
        let sp6 = star_points(6).unwrap();
        assert_eq!(sp6.len(), 2);
        assert!(sp6[0].primitive);
        assert!(!sp6[1].primitive);
        assert!((sp6[0].s.to_f64() - 1.0 / libm::sqrt(3.0)).abs() < 1e-12);
        assert!((sp6[1].s.to_f64() - libm::sqrt(3.0)).abs() < 1e-12);
    }

    #[test]
    fn dodecagon_star_values() {
        // {2 - sqrt3, 1/sqrt3, 1, sqrt3, 2 + sqrt3}
        let sp = star_points(12).unwrap();
        let vals: Vec<f64> = sp.iter().map(|p| p.s.to_f64()).collect();
        let s3 = libm::sqrt(3.0);
        let expect = [2.0 - s3, 1.0 / s3, 1.0, s3, 2.0 + s3];
        for (v, e) in vals.iter().zip(expect) {
            assert!((v - e).abs() < 1e-12);
        }
        assert_eq!(sp[2].s.as_field().as_rational(), Some(rat_i64(1)));
    }

    #[test]
    fn scale_one_is_one_and_decreasing() {
        for n in [7u32, 12, 14, 24] {
            let t = scale_table(n).unwrap();
            assert!(t.scale(1).as_field().is_one());
            let vals = t.scales_f64();
            for w in vals.windows(2) {
                assert!(w[1] < w[0], "scales must strictly decrease for N={n}");
            }
            for k in 1..=half_n(n) {
                assert!(t.scale(k).mul(t.dual_scale(k)).as_field().is_one());
            }
        }
    }

    #[test]
    fn paper_constants() {
        assert!((gen_scale(7).unwrap().to_f64() - 0.109916).abs() < 1e-6);
        assert!((gen_scale(12).unwrap().to_f64() - 0.0717968).abs() < 1e-6);
        assert!((scale_swap(14, 7).unwrap() - 0.4739524).abs() < 1e-6);
        assert_eq!(scale_swap(9, 9).unwrap(), 1.0);
    }

    #[test]
    fn swap_of_divisor_is_a_scale() {
        // ScaleSwap[24, 8] equals scale[3] of N = 24, exactly.
        let sw = scale_swap_exact(24, 8).unwrap();
        let t = scale_table(24).unwrap();
        assert!(eq_lifted(sw.as_field(), t.scale(3).as_field()));
        // swap(N,M) * swap(M,N) = 1 exactly
        let a = scale_swap_exact(14, 9).unwrap();
        let b = scale_swap_exact(9, 14).unwrap();
        assert!(a.mul(&b).as_field().is_one());
    }

    #[test]
    fn gen_scale_closed_forms() {
        for n in [6u32, 7, 8, 9, 12, 15] {
            assert!(gen_scale_closed_form_holds(n).unwrap(), "closed form failed for N={n}");
        }
    }

    #[test]
    fn even_star_symmetry() {
        // star[N] = Reverse[1/star[N]] for even N: s_{<N/2>+1-k} = c_k exactly.
        for n in [8u32, 12, 14] {
            let t = scale_table(n).unwrap();
            let h = half_n(n);
            for k in 1..=h {
                assert_eq!(t.s_k(h + 1 - k), t.dual(k), "N={n} k={k}");
            }
        }
    }

    #[test]
    fn star_polygon_shapes() {
        // {7,1} is the heptagon itself (same vertex set as standard position)
        let s = star_polygon(7, 1).unwrap();
        assert_eq!(s.circuits.len(), 1);
        assert_eq!(s.circuits[0].len(), 7);
        let std7 = PolygonSpec::standard(7).vertices();
        for a in &s.vertices_f64() {
            assert!(std7.iter().any(|b| a.dist(*b) < 1e-12));
        }
        // {14,6}: two interleaved copies of {7,3}, 14 vertices total
        let s2 = star_polygon(14, 6).unwrap();
        assert_eq!(s2.circuits.len(), 2);
        assert_eq!(s2.vertices.len(), 14);
        assert_eq!(s2.circuits[0].len(), 7);
        // {10,2}: two pentagons
        let s3 = star_polygon(10, 2).unwrap();
        assert_eq!(s3.circuits.len(), 2);
        assert_eq!(s3.circuits[0].len(), 5);
        // boundary "asterisk" cases rejected
        assert!(star_polygon(14, 7).is_err());
        assert!(star_polygon(9, 0).is_err());
    }

    #[test]
    fn star_polygon_edges_on_extended_edge_lines() {
        // every edge of {N, q} lies on a line at distance 1 from the origin
        // (an extended edge line of the standard N-gon)
        for (p, q) in [(14u32, 6u32), (12, 5), (9, 4)] {
            let s = star_polygon(p, q).unwrap();
            for e in s.edges_f64() {
                let mid = e.midpoint();
                let d = e.b.sub(e.a);
                let nrm = Vec2::new(-d.y, d.x);
                let dist = libm::fabs(mid.dot(nrm)) / nrm.norm();
                assert!((dist - 1.0).abs() < 1e-10, "{{{p},{q}}} edge off the edge lines");
            }
        }
    }

    #[test]
    fn star_vertex_is_outermost_star_point() {
        // star[<N/2>] = (-s_h, -1) is a vertex of {N, <N/2>}
        let s = star_polygon(14, 6).unwrap();
        let sp = star_points(14).unwrap();
        let target = sp.last().unwrap().coords_f64();
        assert!(s.vertices_f64().iter().any(|v| v.dist(target) < 1e-12));
    }

    #[test]
    fn outer_dual_basics() {
        // origin fixed
        assert!(outer_dual_point(Vec2::new(0.0, 0.0), 14).norm() < 1e-15);
        // scale factor for N = 14
        let f = outer_dual_point(Vec2::new(1.0, 0.0), 14).norm();
        assert!((f - 1.025716863).abs() < 1e-8);
        // dual of the standard N-gon: its edges contain the original's vertices
        for n in [7u32, 14, 12] {
            let poly = PolygonSpec::standard(n);
            let dual = crate::geom::PolygonF::new(outer_dual_points(&poly.vertices(), n));
            for v in poly.vertices() {
                let best = dual
                    .edges()
                    .map(|e| e.dist_to_point(v))
                    .fold(f64::INFINITY, f64::min);
                assert!(best < 1e-12, "vertex of N={n} off dual edges: {best}");
            }
        }
    }

    #[test]
    fn centers_closed_form_and_collinearity() {
        for n in [7u32, 12, 14] {
            let centers = tile_centers_exact(n).unwrap();
            let t = scale_table(n).unwrap();
            let ctx = t.ctx().clone();
            let i = FieldElement::zeta_pow(&ctx, ctx.n() as i64 / 4);
            let one = RealElement::from_rational(&ctx, rat_i64(1));
            let s1 = t.s_k(1);
            for (idx, c) in centers.iter().enumerate() {
                let sk = t.s_k(idx as u32 + 1);
                // cS[k] = -(s_1 + s_k) + i (s_1 s_k - 1)
                let expect = s1
                    .add(sk)
                    .neg()
                    .as_field()
                    .add(&i.mul(s1.mul(sk).sub(&one).as_field()));
                assert_eq!(*c, expect, "closed form failed N={n} k={}", idx + 1);
            }
            // exact collinearity: all centers on the line through (-s_1, -1)
            // with direction (1, -s_1)
            for c in &centers {
                let re = RealElement::new(c.re()).unwrap();
                let im = RealElement::new(c.im()).unwrap();
                let dx = re.add(s1);
                let dy = im.add(&one);
                let cross = dx.mul(&s1.neg()).sub(&dy);
                assert!(cross.is_zero(), "centers not collinear for N={n}");
            }
        }
    }

    #[test]
    fn lemma3_distance_proportionality() {
        // dist(cS[k], cS[0])^2 * scale[k]^2 = s_1^2 (1 + s_1^2) for all k:
        // the scales are in direct proportion to the center distances.
        let n = 14u32;
        let t = scale_table(n).unwrap();
        let ctx = t.ctx().clone();
        let one = RealElement::from_rational(&ctx, rat_i64(1));
        let s1 = t.s_k(1);
        let expect = s1.mul(s1).mul(&one.add(&s1.mul(s1)));
        for k in 1..=half_n(n) {
            let sk = t.s_k(k);
            // cS[k] - cS[0] = (-s_k, s_1 s_k): squared length s_k^2 (1 + s_1^2)
            let d2 = sk.mul(sk).mul(&one.add(&s1.mul(s1)));
            let lhs = d2.mul(&t.scale(k).mul(t.scale(k)));
            assert_eq!(lhs, expect, "proportionality failed at k={k}");
        }
        // N=4: a single center, on the diagonal axis y = -x ... the line
        // through (-1,-1) with slope -1, i.e. x + y = -2 ... center (-2, 0).
        let c4 = tile_centers(4).unwrap();
        assert_eq!(c4.len(), 1);
        assert!((c4[0].x + c4[0].y + 2.0).abs() < 1e-12);
    }

    #[test]
    fn lambda_identities() {
        for n in [5u32, 7, 8, 12] {
            let lc = lambda_conversions(n).unwrap();
            assert!(lc.identity_holds, "lambda identity failed for N={n}");
        }
        // N=5: lambda_10 is the golden ratio
        let lc5 = lambda_conversions(5).unwrap();
        assert!((lc5.lambda_2n.to_f64() - 1.618033988749895).abs() < 1e-12);
    }
}
