//! Plain `f64` planar geometry: points, segments, polygons, clipping and
//! segment-set comparison. This is the float mirror used by the dynamics and
//! rendering layers; the exact layer lives in `field`/`stargeom`.

use alloc::vec::Vec;

/// 2D point / vector.
#[derive(Clone, Copy, Debug, PartialEq, Default)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }

    pub fn scale(self, s: f64) -> Vec2 {
        Vec2::new(self.x * s, self.y * s)
    }

    pub fn dot(self, o: Vec2) -> f64 {
        self.x * o.x + self.y * o.y
    }

    pub fn cross(self, o: Vec2) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        libm::hypot(self.x, self.y)
    }

    pub fn dist(self, o: Vec2) -> f64 {
        self.sub(o).norm()
    }

    /// Rotate by `angle` radians about the origin.
    pub fn rotate(self, angle: f64) -> Vec2 {
        let (s, c) = (libm::sin(angle), libm::cos(angle));
        Vec2::new(self.x * c - self.y * s, self.x * s + self.y * c)
    }
}

/// Affine map `p -> M p + t`, `M = [m00 m01; m10 m11]`.
#[derive(Clone, Copy, Debug)]
pub struct Affine {
    pub m: [f64; 4], // [m00, m10, m01, m11] (column-major)
    pub t: Vec2,
}

impl Affine {
    pub fn identity() -> Affine {
        Affine { m: [1.0, 0.0, 0.0, 1.0], t: Vec2::new(0.0, 0.0) }
    }

    /// Uniform scale about the origin followed by translation.
    pub fn scale_translate(s: f64, t: Vec2) -> Affine {
        Affine { m: [s, 0.0, 0.0, s], t }
    }

    /// Rotation about the origin, then translation.
    pub fn rotate_translate(angle: f64, t: Vec2) -> Affine {
        let (sn, cs) = (libm::sin(angle), libm::cos(angle));
        Affine { m: [cs, sn, -sn, cs], t }
    }

    pub fn apply(&self, p: Vec2) -> Vec2 {
        Vec2::new(
            self.m[0] * p.x + self.m[2] * p.y + self.t.x,
            self.m[1] * p.x + self.m[3] * p.y + self.t.y,
        )
    }

    pub fn apply_segment(&self, s: Segment) -> Segment {
        Segment::new(self.apply(s.a), self.apply(s.b))
    }

    /// Compose: `self` after `first`.
    pub fn after(&self, first: &Affine) -> Affine {
        Affine {
            m: [
                self.m[0] * first.m[0] + self.m[2] * first.m[1],
                self.m[1] * first.m[0] + self.m[3] * first.m[1],
                self.m[0] * first.m[2] + self.m[2] * first.m[3],
                self.m[1] * first.m[2] + self.m[3] * first.m[3],
            ],
            t: self.apply(first.t),
        }
    }
}

/// Closed segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Segment {
    pub a: Vec2,
    pub b: Vec2,
}

impl Segment {
    pub fn new(a: Vec2, b: Vec2) -> Self {
        Segment { a, b }
    }

    pub fn len(&self) -> f64 {
        self.a.dist(self.b)
    }

    pub fn point_at(&self, t: f64) -> Vec2 {
        self.a.add(self.b.sub(self.a).scale(t))
    }

    pub fn midpoint(&self) -> Vec2 {
        self.point_at(0.5)
    }

    /// Distance from a point to this segment.
    pub fn dist_to_point(&self, p: Vec2) -> f64 {
        let d = self.b.sub(self.a);
        let l2 = d.dot(d);
        if l2 == 0.0 {
            return p.dist(self.a);
        }
        let t = (p.sub(self.a).dot(d) / l2).clamp(0.0, 1.0);
        p.dist(self.point_at(t))
    }
}

/// A simple polygon given by its vertices in order (closed implicitly).
#[derive(Clone, Debug)]
pub struct PolygonF {
    pub vertices: Vec<Vec2>,
}

impl PolygonF {
    pub fn new(vertices: Vec<Vec2>) -> Self {
        PolygonF { vertices }
    }

    pub fn edges(&self) -> impl Iterator<Item = Segment> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Segment::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Even-odd point containment (boundary points are unreliable here; use
    /// distance-based tests for boundary-sensitive work).
    pub fn contains(&self, p: Vec2) -> bool {
        let mut inside = false;
        let n = self.vertices.len();
        let mut j = n - 1;
        for i in 0..n {
            let (vi, vj) = (self.vertices[i], self.vertices[j]);
            if (vi.y > p.y) != (vj.y > p.y) {
                let x_at = vi.x + (p.y - vi.y) / (vj.y - vi.y) * (vj.x - vi.x);
                if p.x < x_at {
                    inside = !inside;
                }
            }
            j = i;
        }
        inside
    }

    /// Clip a segment to this (possibly non-convex) polygon; returns the
    /// sub-segments inside, in parameter order.
    pub fn clip_segment(&self, seg: Segment) -> Vec<Segment> {
        let dir = seg.b.sub(seg.a);
        let mut cuts = alloc::vec![0.0f64, 1.0];
        for e in self.edges() {
            let ed = e.b.sub(e.a);
            let denom = dir.cross(ed);
            if denom == 0.0 {
                continue;
            }
            let t = e.a.sub(seg.a).cross(ed) / denom;
            let u = e.a.sub(seg.a).cross(dir) / denom;
            if t > 0.0 && t < 1.0 && (0.0..=1.0).contains(&u) {
                cuts.push(t);
            }
        }
        cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut out: Vec<Segment> = Vec::new();
        for w in cuts.windows(2) {
            let (t0, t1) = (w[0], w[1]);
            if t1 - t0 < 1e-14 {
                continue;
            }
            let mid = seg.point_at(0.5 * (t0 + t1));
            if self.contains(mid) {
                let piece = Segment::new(seg.point_at(t0), seg.point_at(t1));
                match out.last_mut() {
                    // merge adjacent kept pieces (a crossing that stayed inside)
                    Some(last) if last.b.dist(piece.a) < 1e-13 => {
                        last.b = piece.b;
                    }
                    _ => out.push(piece),
                }
            }
        }
        out
    }
}

/// Directed Hausdorff distance from set `a` to set `b`, estimated by sampling
/// points along every segment of `a` (endpoints plus `samples` interior
/// points) and taking the maximal distance to the nearest segment of `b`.
pub fn directed_hausdorff(a: &[Segment], b: &[Segment], samples: usize) -> f64 {
    let grid = SegmentGrid::build(b);
    let mut worst = 0.0f64;
    for s in a {
        for i in 0..=(samples + 1) {
            let t = i as f64 / (samples + 1) as f64;
            let d = grid.dist_to_point(s.point_at(t));
            if d > worst {
                worst = d;
            }
        }
    }
    worst
}

/// Symmetric sampled Hausdorff distance between segment sets.
pub fn hausdorff(a: &[Segment], b: &[Segment], samples: usize) -> f64 {
    directed_hausdorff(a, b, samples).max(directed_hausdorff(b, a, samples))
}

/// Uniform grid over segments for nearest-distance queries.
pub struct SegmentGrid {
    cell: f64,
    x0: f64,
    y0: f64,
    nx: usize,
    ny: usize,
    bins: Vec<Vec<u32>>,
    segs: Vec<Segment>,
}

impl SegmentGrid {
    pub fn build(segs: &[Segment]) -> SegmentGrid {
        if segs.is_empty() {
            return SegmentGrid {
                cell: 1.0,
                x0: 0.0,
                y0: 0.0,
                nx: 1,
                ny: 1,
                bins: alloc::vec![Vec::new()],
                segs: Vec::new(),
            };
        }
        let mut min = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for s in segs {
            for p in [s.a, s.b] {
                min.x = min.x.min(p.x);
                min.y = min.y.min(p.y);
                max.x = max.x.max(p.x);
                max.y = max.y.max(p.y);
            }
        }
        let span = (max.x - min.x).max(max.y - min.y).max(1e-9);
        let target = libm::ceil(libm::sqrt(segs.len() as f64)) as usize;
        let cell = span / target.clamp(8, 256) as f64;
        let nx = libm::ceil((max.x - min.x) / cell) as usize + 1;
        let ny = libm::ceil((max.y - min.y) / cell) as usize + 1;
        let mut bins = alloc::vec![Vec::new(); nx * ny];
        for (idx, s) in segs.iter().enumerate() {
            let bx0 = (((s.a.x.min(s.b.x)) - min.x) / cell) as usize;
            let bx1 = (((s.a.x.max(s.b.x)) - min.x) / cell) as usize;
            let by0 = (((s.a.y.min(s.b.y)) - min.y) / cell) as usize;
            let by1 = (((s.a.y.max(s.b.y)) - min.y) / cell) as usize;
            for gx in bx0..=bx1.min(nx - 1) {
                for gy in by0..=by1.min(ny - 1) {
                    bins[gy * nx + gx].push(idx as u32);
                }
            }
        }
        SegmentGrid { cell, x0: min.x, y0: min.y, nx, ny, bins, segs: segs.to_vec() }
    }

    /// Distance from `p` to the nearest segment (infinite when empty).
    pub fn dist_to_point(&self, p: Vec2) -> f64 {
        if self.segs.is_empty() {
            return f64::INFINITY;
        }
        let gx = (((p.x - self.x0) / self.cell) as isize).clamp(0, self.nx as isize - 1);
        let gy = (((p.y - self.y0) / self.cell) as isize).clamp(0, self.ny as isize - 1);
        let mut best = f64::INFINITY;
        let max_ring = (self.nx + self.ny) as isize;
        let mut ring = 0isize;
        while ring <= max_ring {
            for dy in -ring..=ring {
                for dx in -ring..=ring {
                    if dx.abs() != ring && dy.abs() != ring {
                        continue; // ring boundary only
                    }
                    let (cx, cy) = (gx + dx, gy + dy);
                    if cx < 0 || cy < 0 || cx >= self.nx as isize || cy >= self.ny as isize {
                        continue;
                    }
                    for &i in &self.bins[cy as usize * self.nx + cx as usize] {
                        let d = self.segs[i as usize].dist_to_point(p);
                        if d < best {
                            best = d;
                        }
                    }
                }
            }
            // the next ring cannot beat `best` once it is at least a full
            // ring-width away
            if best <= (ring as f64) * self.cell {
                break;
            }
            ring += 1;
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_square() {
        let sq = PolygonF::new(alloc::vec![
            Vec2::new(-1.0, -1.0),
            Vec2::new(1.0, -1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(-1.0, 1.0),
        ]);
        let pieces = sq.clip_segment(Segment::new(Vec2::new(-2.0, 0.0), Vec2::new(2.0, 0.0)));
        assert_eq!(pieces.len(), 1);
        assert!((pieces[0].a.x + 1.0).abs() < 1e-12);
        assert!((pieces[0].b.x - 1.0).abs() < 1e-12);
        assert!(sq.contains(Vec2::new(0.0, 0.0)));
        assert!(!sq.contains(Vec2::new(0.0, 1.5)));
    }

    #[test]
    fn clip_nonconvex() {
        let ell = PolygonF::new(alloc::vec![
            Vec2::new(0.0, 0.0),
            Vec2::new(2.0, 0.0),
            Vec2::new(2.0, 1.0),
            Vec2::new(1.0, 1.0),
            Vec2::new(1.0, 2.0),
            Vec2::new(0.0, 2.0),
        ]);
        let pieces = ell.clip_segment(Segment::new(Vec2::new(-1.0, 1.5), Vec2::new(3.0, 1.5)));
        assert_eq!(pieces.len(), 1);
        assert!((pieces[0].b.x - 1.0).abs() < 1e-12);
    }

    #[test]
    fn hausdorff_zero_for_equal_sets() {
        let a = alloc::vec![Segment::new(Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0))];
        let b = a.clone();
        assert!(hausdorff(&a, &b, 8) < 1e-15);
        let c = alloc::vec![Segment::new(Vec2::new(0.0, 0.1), Vec2::new(1.0, 0.1))];
        assert!((hausdorff(&a, &c, 8) - 0.1).abs() < 1e-12);
    }

    #[test]
    fn affine_compose() {
        let t1 = Affine::scale_translate(2.0, Vec2::new(1.0, 0.0));
        let t2 = Affine::rotate_translate(core::f64::consts::FRAC_PI_2, Vec2::new(0.0, 1.0));
        let p = Vec2::new(1.0, 1.0);
        let q1 = t2.apply(t1.apply(p));
        let q2 = t2.after(&t1).apply(p);
        assert!(q1.dist(q2) < 1e-12);
    }
}
