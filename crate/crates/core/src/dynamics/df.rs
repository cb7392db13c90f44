//! The Digital Filter map: the area-preserving sawtooth rotation
//! `Df(x, y) = (y, f(-x + 2 y cos(theta)))` on the torus `[-1,1)^2`, with
//! `f(z) = Mod(z+1, 2) - 1`.
//!
//! Conjugating the linear part to a true rotation (the shear
//! `(x, y) -> (x, (y - x cos theta)/sin theta)`) rectifies the torus web; at
//! `theta = 2 pi/N` (N even) the rectified web reproduces the local
//! outer-billiards web of the N-gon up to a registration isometry derived in
//! `registration`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::geom::{Affine, PolygonF, Segment, Vec2};

use super::web::{merge_level, Web, WebMeta};

/// Sawtooth `f(z) = Mod(z+1, 2) - 1`, mapping R onto `[-1, 1)`.
pub fn sawtooth(z: f64) -> f64 {
    let w = z + 1.0;
    w - 2.0 * libm::floor(w / 2.0) - 1.0
}

/// One Digital Filter step.
pub fn df_map(x: f64, y: f64, theta: f64) -> (f64, f64) {
    (y, sawtooth(-x + 2.0 * y * libm::cos(theta)))
}

/// Which atom a point belongs to, by the raw (pre-sawtooth) value
/// `t = -x + 2 y cos(theta)`: `t >= 1` overflows (vertical translation -2),
/// `t < -1` underflows (+2), otherwise the map is linear (0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DfAtom {
    Overflow,
    Linear,
    Underflow,
}

impl DfAtom {
    pub fn translation(self) -> f64 {
        match self {
            DfAtom::Overflow => -2.0,
            DfAtom::Linear => 0.0,
            DfAtom::Underflow => 2.0,
        }
    }
}

pub fn df_atom(x: f64, y: f64, theta: f64) -> DfAtom {
    let t = -x + 2.0 * y * libm::cos(theta);
    if t >= 1.0 {
        DfAtom::Overflow
    } else if t < -1.0 {
        DfAtom::Underflow
    } else {
        DfAtom::Linear
    }
}

/// The two separatrices `-x + 2 y cos(theta) = +-1`, clipped to the square:
/// the atom boundaries whose iterates generate the torus web.
pub fn df_separatrices(theta: f64) -> Vec<Segment> {
    let c = 2.0 * libm::cos(theta);
    let square = torus_square();
    let mut out = Vec::new();
    for sign in [1.0f64, -1.0] {
        // line -x + c*y = sign
        let (a, b) = if libm::fabs(c) > 1e-12 {
            (
                Vec2::new(-3.0, (sign - 3.0) / c),
                Vec2::new(3.0, (sign + 3.0) / c),
            )
        } else {
            (Vec2::new(-sign, -3.0), Vec2::new(-sign, 3.0))
        };
        out.extend(square.clip_segment(Segment::new(a, b)));
    }
    out
}

pub fn torus_square() -> PolygonF {
    PolygonF::new(alloc::vec![
        Vec2::new(-1.0, -1.0),
        Vec2::new(1.0, -1.0),
        Vec2::new(1.0, 1.0),
        Vec2::new(-1.0, 1.0),
    ])
}

/// Image of a segment under one Df step: the segment is cut at the two atom
/// boundary lines and each piece maps by its atom's affine branch.
pub fn df_segment_images(seg: Segment, theta: f64) -> Vec<Segment> {
    let c = 2.0 * libm::cos(theta);
    let t_of = |p: Vec2| -p.x + c * p.y;
    let (ta, tb) = (t_of(seg.a), t_of(seg.b));
    let mut cuts = alloc::vec![0.0f64, 1.0];
    for level in [1.0f64, -1.0] {
        if (ta - level) * (tb - level) < 0.0 {
            cuts.push((level - ta) / (tb - ta));
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
        let tr = df_atom(mid.x, mid.y, theta).translation();
        let map = |p: Vec2| Vec2::new(p.y, -p.x + c * p.y + tr);
        out.push(Segment::new(map(a), map(b)));
    }
    out
}

/// Generate the Digital Filter web: iterate the separatrices forward `levels`
/// times on the torus.
pub fn df_web(theta: f64, levels: u32) -> Web {
    let mut store: BTreeMap<super::web::SegKey, (Segment, u32)> = BTreeMap::new();
    let mut frontier = merge_level(&mut store, df_separatrices(theta), 1);
    for level in 2..=levels {
        let mut candidates = Vec::new();
        for seg in &frontier {
            candidates.extend(df_segment_images(*seg, theta));
        }
        frontier = merge_level(&mut store, candidates, level);
        if frontier.is_empty() {
            break;
        }
    }
    Web {
        segments: store.into_values().collect(),
        levels,
        region: torus_square(),
        meta: WebMeta::Df { theta },
    }
}

/// The shear that conjugates the Df linear part to a clockwise rotation by
/// `theta`: `(x, y) -> (x, (y - x cos theta)/sin theta)`.
pub fn rectify_shear(theta: f64) -> Affine {
    let (s, c) = (libm::sin(theta), libm::cos(theta));
    Affine { m: [1.0, -c / s, 0.0, 1.0 / s], t: Vec2::new(0.0, 0.0) }
}

/// Registration of the rectified Df torus web onto the local outer-billiards
/// web of the N-gon (`theta = 2 pi/N`, N even).
///
/// In rectified coordinates the torus lattice is a rhombus with side
/// `2/sin(theta)` and angle `theta`; in the web frame this matches the ring of
/// D-tile centers (distance `s_1 + 1/s_1 = 2/sin(2 pi/N)` from the origin,
/// spaced `theta` apart). The Df fixed point `(0,0)` is a period-1 center and
/// corresponds to the D center `cD = (-(s_1 + 1/s_1), 0)`; matching the atom
/// boundary normals (angle `2 theta` after the shear) to the extended edge
/// lines at distance 1 from `cD` fixes the rotation, a pure rotation by
/// `pi/2 + 3 pi/N`.
pub fn df_registration(n: u32) -> Affine {
    let pi = core::f64::consts::PI;
    let s1 = libm::tan(pi / n as f64);
    let cd = Vec2::new(-(s1 + 1.0 / s1), 0.0);
    let rot = pi / 2.0 + 3.0 * pi / n as f64;
    Affine::rotate_translate(rot, cd)
}

/// Rectified-and-registered Df web segments in the N-gon's web frame.
pub fn df_web_in_local_frame(web: &Web, n: u32) -> Vec<Segment> {
    let WebMeta::Df { theta } = web.meta else {
        return Vec::new();
    };
    let to_frame = df_registration(n).after(&rectify_shear(theta));
    web.segments
        .iter()
        .map(|(s, _)| to_frame.apply_segment(*s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin_is_fixed() {
        let (x, y) = df_map(0.0, 0.0, 2.0 * core::f64::consts::PI / 14.0);
        assert_eq!((x, y), (0.0, 0.0));
    }

    #[test]
    fn atom_translations() {
        let theta = 2.0 * core::f64::consts::PI / 14.0;
        // linear region around the origin
        assert_eq!(df_atom(0.0, 0.0, theta), DfAtom::Linear);
        // overflow: t = -x + 2y cos(theta) >= 1
        let p = (-0.9, 0.9);
        assert_eq!(df_atom(p.0, p.1, theta), DfAtom::Overflow);
        let t = 0.9 + 2.0 * 0.9 * libm::cos(theta);
        let (_, y) = df_map(p.0, p.1, theta);
        assert!((y - (t - 2.0)).abs() < 1e-12, "overflow translates by -2");
        // underflow mirrors
        let q = (0.9, -0.9);
        assert_eq!(df_atom(q.0, q.1, theta), DfAtom::Underflow);
        let (_, y2) = df_map(q.0, q.1, theta);
        assert!((y2 - (-t + 2.0)).abs() < 1e-12, "underflow translates by +2");
    }

    #[test]
    fn linear_part_is_area_preserving() {
        // det [[0, 1], [-1, 2cos]] = 1
        let theta: f64 = 0.7;
        let c = 2.0 * libm::cos(theta);
        let det: f64 = 0.0 * c - 1.0 * -1.0;
        assert_eq!(det, 1.0);
        // and numerically: images of the unit frame
        let e = 1e-7;
        let p0 = Vec2::new(0.1, 0.2);
        let f = |p: Vec2| {
            let (x, y) = df_map(p.x, p.y, theta);
            Vec2::new(x, y)
        };
        let j1 = f(Vec2::new(p0.x + e, p0.y)).sub(f(p0)).scale(1.0 / e);
        let j2 = f(Vec2::new(p0.x, p0.y + e)).sub(f(p0)).scale(1.0 / e);
        assert!((j1.cross(j2) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn map_stays_on_torus() {
        let theta = 2.0 * core::f64::consts::PI / 14.0;
        let mut p = (0.37, -0.81);
        for _ in 0..1000 {
            p = df_map(p.0, p.1, theta);
            assert!((-1.0..1.0).contains(&p.0) && (-1.0..1.0).contains(&p.1));
        }
    }

    #[test]
    fn web_monotone_in_levels() {
        let theta = 2.0 * core::f64::consts::PI / 14.0;
        let w3 = df_web(theta, 3);
        let w6 = df_web(theta, 6);
        assert!(w3.len() <= w6.len());
        assert_eq!(w3.len(), w6.at_level(3).len());
    }

    #[test]
    fn rectified_lattice_matches_d_ring() {
        // |e2'| = 2/sin(theta) equals |cD| = s_1 + 1/s_1 at theta = 2 pi/N
        let n = 14.0f64;
        let theta = 2.0 * core::f64::consts::PI / n;
        let s1 = libm::tan(core::f64::consts::PI / n);
        let lattice = 2.0 / libm::sin(theta);
        assert!((lattice - (s1 + 1.0 / s1)).abs() < 1e-12);
        // the shear really conjugates Df's linear branch to a rotation
        let sh = rectify_shear(theta);
        let p = Vec2::new(0.21, 0.13); // linear atom
        let (ix, iy) = df_map(p.x, p.y, theta);
        let lhs = sh.apply(Vec2::new(ix, iy));
        let rhs = sh.apply(p).rotate(-theta);
        assert!(lhs.dist(rhs) < 1e-12);
    }
}
