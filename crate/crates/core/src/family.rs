//! First Family construction for any regular N-gon.
//!
//! Each star point/scale pair defines a tile `S[k]`: a regular polygon with
//! center `cS[k] = OuterDual[star[k]] = (-(s_1 + s_k), s_1 s_k - 1)` and
//! height (apothem) `s_1 * s_k`, which is `GenScale[N]/scale[k]` for even N
//! and `hD * GenScale[N]/scale[k]` for odd N. Every tile therefore rests its
//! bottom edge on the extended base line `y = -1`, which fixes all phases:
//! bottom edge horizontal.
//!
//! The three construction cases:
//! * twice-odd `N`: `S[k]` alternates N-gons (k even) and N/2-gons (k odd);
//!   the mirror half `LS[k]` reflects about the vertical through `cM`.
//! * twice-even `N`: all `S[k]` are N-gons; the mirror half `DS[k]` reflects
//!   about the vertical through the central tile `C = S[<N/2>-1]`.
//! * odd `N`: `S[k]` are 2N-gons; the left half imports `FFLeft[2N]`, rescaled
//!   by `1/hM` and translated so `cM` lands on the origin (each `LS[k]` of the
//!   2N family becomes `DS[k]`).
//!
//! Mirror tiles that coincide with right-half tiles are merged: the reflected
//! parent, the reflected D and the self-symmetric M or C for even N; for odd N
//! additionally `DS[N-3] = S[(N-3)/2]` by the tangent addition formula. The
//! distinct-tile counts then reproduce the family sizes `N - 3` (even) and
//! `<N/2> + N - 3` (odd), parent included.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::tangent::{cot_real_in, tan_real_in};
use crate::field::{FieldCtx, FieldElement, RealElement};
use crate::geom::Vec2;
use crate::half_n;
use crate::rat::{rat, rat_i64, Rational};
use crate::stargeom::{cpoint_f64, sec_real_in};

/// Which half of the family a tile belongs to, and its star-point index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Parent,
    S(u32),
    Ls(u32),
    Ds(u32),
}

/// Distinguished tiles: D (maximal), M (the N/2-gon partner for twice-odd N),
/// C (the central tile for twice-even N).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alias {
    D,
    M,
    C,
}

impl Role {
    pub fn label(&self) -> String {
        match self {
            Role::Parent => String::from("parent"),
            Role::S(k) => format!("S[{k}]"),
            Role::Ls(k) => format!("LS[{k}]"),
            Role::Ds(k) => format!("DS[{k}]"),
        }
    }
}

/// One First Family tile, exact. The float mirror is available through the
/// accessor methods.
#[derive(Clone, Debug)]
pub struct Tile {
    pub sides: u32,
    /// Complex center in the family's cyclotomic frame.
    pub center: FieldElement,
    /// Apothem.
    pub height: RealElement,
    /// Vertex-0 polar angle as an exact fraction of a turn. All family tiles
    /// are bottom-edge-horizontal: `-1/4 + 1/(2*sides)`.
    pub phase_turns: Rational,
    pub role: Role,
    pub alias: Option<Alias>,
    /// `gcd(k, modulus) > 1` for the tile's star index: the necessary
    /// condition for mutation.
    pub degenerate: bool,
}

impl Tile {
    pub fn center_f64(&self) -> Vec2 {
        cpoint_f64(&self.center)
    }

    pub fn height_f64(&self) -> f64 {
        self.height.to_f64()
    }

    pub fn phase_f64(&self) -> f64 {
        2.0 * core::f64::consts::PI * crate::rat::rat_to_f64(&self.phase_turns)
    }

    /// Exact vertices: `center + h * (tan(pi/m) - i) * zeta_m^j`. Requires the
    /// ambient field to contain `zeta_4m`.
    pub fn vertices_exact(&self) -> Result<Vec<FieldElement>> {
        let ctx = self.center.ctx().clone();
        let m = self.sides;
        if ctx.n() % (4 * m) != 0 {
            return Err(Error::ModulusMismatch { left: ctx.n(), right: 4 * m });
        }
        let t = tan_real_in(&ctx, m, 1)?;
        let i = FieldElement::zeta_pow(&ctx, ctx.n() as i64 / 4);
        let corner = t.as_field().sub(&i); // bottom-right vertex direction * r_m
        let step = (ctx.n() / m) as i64;
        Ok((0..m)
            .map(|j| {
                let rot = FieldElement::zeta_pow(&ctx, step * j as i64);
                self.center.add(&self.height.as_field().mul(&corner).mul(&rot))
            })
            .collect())
    }

    pub fn vertices_f64(&self) -> Vec<Vec2> {
        let spec = crate::stargeom::PolygonSpec {
            sides: self.sides,
            apothem: self.height_f64(),
            center: self.center_f64(),
            phase: self.phase_f64(),
        };
        spec.vertices()
    }

    fn same_placement(&self, other: &Tile) -> bool {
        self.sides == other.sides && self.center == other.center && self.height == other.height
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyCase {
    Odd,
    TwiceOdd,
    TwiceEven,
}

impl FamilyCase {
    pub fn of(n: u32) -> FamilyCase {
        if n % 2 == 1 {
            FamilyCase::Odd
        } else if n % 4 == 2 {
            FamilyCase::TwiceOdd
        } else {
            FamilyCase::TwiceEven
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            FamilyCase::Odd => "odd",
            FamilyCase::TwiceOdd => "twice-odd",
            FamilyCase::TwiceEven => "twice-even",
        }
    }
}

/// The First Family of `N`: the parent plus all distinct `S`/`LS`/`DS` tiles.
#[derive(Clone, Debug)]
pub struct Family {
    pub n: u32,
    pub case: FamilyCase,
    ctx: Arc<FieldCtx>,
    /// Parent first, then the right half `S[1..]`, then the surviving mirror
    /// tiles in index order.
    pub tiles: Vec<Tile>,
}

impl Family {
    pub fn ctx(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    /// Number of distinct tiles, parent included: `N - 3` for even N and
    /// `<N/2> + N - 3` for odd N.
    pub fn counted_size(&self) -> usize {
        self.tiles.len()
    }

    pub fn parent(&self) -> &Tile {
        &self.tiles[0]
    }

    pub fn tile_with_alias(&self, alias: Alias) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.alias == Some(alias))
    }

    pub fn tile_with_role(&self, role: Role) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.role == role)
    }

    /// The maximal (D) tile.
    pub fn d_tile(&self) -> &Tile {
        self.tile_with_alias(Alias::D).expect("every family has a D tile")
    }
}

fn bottom_edge_phase(sides: u32) -> Rational {
    rat(-1, 4) + rat(1, 2 * sides as i64)
}

/// Raw right/left halves of an even-N family (no deduplication): used both by
/// `first_family` and by the odd-N import of `FFLeft[2N]`.
struct EvenHalves {
    parent: Tile,
    s: Vec<Tile>,
    ls: Vec<Tile>,
}

fn build_even_halves(n: u32, ctx: &Arc<FieldCtx>) -> Result<EvenHalves> {
    debug_assert_eq!(n % 2, 0);
    let h = half_n(n);
    let i = FieldElement::zeta_pow(ctx, ctx.n() as i64 / 4);
    let one = RealElement::from_rational(ctx, rat_i64(1));
    let s1 = tan_real_in(ctx, n, 1)?;

    let parent = Tile {
        sides: n,
        center: FieldElement::zero(ctx),
        height: one.clone(),
        phase_turns: bottom_edge_phase(n),
        role: Role::Parent,
        alias: None,
        degenerate: false,
    };

    let mut s_tiles = Vec::with_capacity(h as usize);
    for k in 1..=h {
        let sk = tan_real_in(ctx, n, k as i64)?;
        let sides = if k % 2 == 0 || n % 4 == 0 { n } else { n / 2 };
        let height = s1.mul(&sk); // GenScale[N]/scale[k]
        let center = s1
            .add(&sk)
            .neg()
            .as_field()
            .add(&i.mul(s1.mul(&sk).sub(&one).as_field()));
        let alias = if k == h {
            Some(Alias::D)
        } else if k == h - 1 {
            Some(if n % 4 == 0 { Alias::C } else { Alias::M })
        } else {
            None
        };
        s_tiles.push(Tile {
            sides,
            center,
            height,
            phase_turns: bottom_edge_phase(sides),
            role: Role::S(k),
            alias,
            degenerate: (k as i64).gcd(&(n as i64)) > 1,
        });
    }

    // mirror axis: the vertical through cM (twice-odd) or cC (twice-even)
    let axis_x = RealElement::new(s_tiles[(h - 2) as usize].center.re()).unwrap();
    let two_ax = axis_x.scale(&rat_i64(2));

    let mut ls_tiles = Vec::with_capacity(h as usize + 1);
    for (k, src) in core::iter::once(&parent).chain(s_tiles.iter()).enumerate() {
        let center = two_ax.as_field().sub(&src.center.conj());
        ls_tiles.push(Tile {
            sides: src.sides,
            center,
            height: src.height.clone(),
            phase_turns: src.phase_turns.clone(),
            role: if n % 4 == 0 { Role::Ds(k as u32) } else { Role::Ls(k as u32) },
            alias: None,
            degenerate: src.degenerate,
        });
    }

    Ok(EvenHalves { parent, s: s_tiles, ls: ls_tiles })
}

fn dedup_push(tiles: &mut Vec<Tile>, candidate: Tile) {
    if !tiles.iter().any(|t| t.same_placement(&candidate)) {
        tiles.push(candidate);
    }
}

/// Construct the First Family of `N` (N >= 3).
pub fn first_family(n: u32) -> Result<Family> {
    if n < 3 {
        return Err(Error::BadPolygon(format!("first_family needs N >= 3, got {n}")));
    }
    let case = FamilyCase::of(n);
    match case {
        FamilyCase::TwiceOdd | FamilyCase::TwiceEven => {
            let ctx = FieldCtx::new(4 * n);
            let halves = build_even_halves(n, &ctx)?;
            let mut tiles = Vec::new();
            tiles.push(halves.parent);
            tiles.extend(halves.s);
            for t in halves.ls {
                dedup_push(&mut tiles, t);
            }
            Ok(Family { n, case, ctx, tiles })
        }
        FamilyCase::Odd => {
            let ctx = FieldCtx::new(8 * n); // holds zeta_{4*2N}
            let one = RealElement::from_rational(&ctx, rat_i64(1));
            let i = FieldElement::zeta_pow(&ctx, ctx.n() as i64 / 4);
            let h = half_n(n);
            let s1 = tan_real_in(&ctx, n, 1)?;

            let parent = Tile {
                sides: n,
                center: FieldElement::zero(&ctx),
                height: one.clone(),
                phase_turns: bottom_edge_phase(n),
                role: Role::Parent,
                alias: None,
                degenerate: false,
            };
            let mut tiles = Vec::new();
            tiles.push(parent);
            for k in 1..=h {
                let sk = tan_real_in(&ctx, n, k as i64)?;
                // hS[k] = hD * GenScale[N]/scale[k], which reduces to s_1 s_k
                let height = s1.mul(&sk);
                let center = s1
                    .add(&sk)
                    .neg()
                    .as_field()
                    .add(&i.mul(s1.mul(&sk).sub(&one).as_field()));
                tiles.push(Tile {
                    sides: 2 * n,
                    center,
                    height,
                    phase_turns: bottom_edge_phase(2 * n),
                    role: Role::S(k),
                    alias: (k == h).then_some(Alias::D),
                    degenerate: (k as i64).gcd(&(n as i64)) > 1,
                });
            }

            // Import FFLeft[2N], promoted by TwokTok: translate cM to the
            // origin and rescale by 1/hM (hM = s'_1 s'_{N-2} in the 2N frame,
            // so 1/hM = cot(pi/2N) cot((N-2)pi/2N)).
            let halves_2n = build_even_halves(2 * n, &ctx)?;
            let m_index = n - 2; // <2N/2> - 1
            let c_m = halves_2n.s[(m_index - 1) as usize].center.clone();
            let inv_hm = RealElement::new(
                cot_real_in(&ctx, 2 * n, 1)?.mul(&cot_real_in(&ctx, 2 * n, m_index as i64)?),
            )
            .unwrap();
            for (k, src) in halves_2n.ls.iter().enumerate().take((n - 1) as usize) {
                let center = src.center.sub(&c_m).mul(inv_hm.as_field());
                let height = src.height.mul(&inv_hm);
                dedup_push(
                    &mut tiles,
                    Tile {
                        sides: src.sides,
                        center,
                        height,
                        phase_turns: src.phase_turns.clone(),
                        role: Role::Ds(k as u32),
                        alias: None,
                        degenerate: src.degenerate,
                    },
                );
            }
            Ok(Family { n, case, ctx, tiles })
        }
    }
}

/// Per-tile heights `hS[k]`, `k = 1..<N/2>` (strictly increasing, ending at
/// `hD`).
pub fn tile_heights(n: u32) -> Result<Vec<f64>> {
    let fam = first_family(n)?;
    Ok((1..=half_n(n))
        .map(|k| fam.tile_with_role(Role::S(k)).unwrap().height_f64())
        .collect())
}

/// The `TwokTok` promotion: rescale a twice-odd 2N family so that its M tile
/// becomes the standard-position N-gon (translate `cM` to the origin, scale by
/// `1/hM`). The anchor must be the family's M tile.
pub fn promote_2n_to_n(family: &Family, anchor: &Tile) -> Result<Vec<Tile>> {
    if anchor.alias != Some(Alias::M) {
        return Err(Error::WrongCase(String::from("promotion anchor must be the M tile")));
    }
    let inv_hm = RealElement::new(anchor.height.as_field().inv()?).unwrap();
    Ok(family
        .tiles
        .iter()
        .map(|t| Tile {
            sides: t.sides,
            center: t.center.sub(&anchor.center).mul(inv_hm.as_field()),
            height: t.height.mul(&inv_hm),
            phase_turns: t.phase_turns.clone(),
            role: t.role,
            alias: t.alias,
            degenerate: t.degenerate,
        })
        .collect())
}

/// The affine alignment between a twice-odd `N` family and the `N/2` family:
/// `T(x) = (x - cM) * ScaleSwap[N/2, N]`, which maps M to the standard
/// N/2-gon, D to the D of `N/2` and every `LS[k]` to `DS[k]`.
pub struct TwiceOddAlignment {
    pub n: u32,
    /// `cM` of the N family (complex, in the N family's frame).
    pub anchor: Vec2,
    /// `ScaleSwap[N/2, N] = 1/hM`.
    pub factor: f64,
}

impl TwiceOddAlignment {
    /// N-frame point to N/2-frame point.
    pub fn apply(&self, p: Vec2) -> Vec2 {
        p.sub(self.anchor).scale(self.factor)
    }

    /// N/2-frame point to N-frame point.
    pub fn unapply(&self, p: Vec2) -> Vec2 {
        p.scale(1.0 / self.factor).add(self.anchor)
    }
}

pub fn twice_odd_alignment(n: u32) -> Result<TwiceOddAlignment> {
    if n % 4 != 2 {
        return Err(Error::WrongCase(format!("N = {n} is not 2 mod 4")));
    }
    let fam = first_family(n)?;
    let m = fam.tile_with_alias(Alias::M).unwrap();
    Ok(TwiceOddAlignment {
        n,
        anchor: m.center_f64(),
        factor: 1.0 / m.height_f64(),
    })
}

/// How the tiles of `FirstFamily(N/2)` sit inside `FirstFamily(N)` under the
/// alignment: every tile of the half family except the non-maximal `S[k]`
/// (which land on second-generation slots) must coincide with an N-family
/// tile.
pub struct AlignmentReport {
    pub n: u32,
    pub matched: usize,
    pub expected_matched: usize,
    pub max_center_error: f64,
}

pub fn verify_twice_odd_alignment(n: u32) -> Result<AlignmentReport> {
    let align = twice_odd_alignment(n)?;
    let fam_n = first_family(n)?;
    let fam_half = first_family(n / 2)?;
    let mut matched = 0;
    let mut max_err = 0.0f64;
    for t in &fam_half.tiles {
        let skip = matches!(t.role, Role::S(k) if k < half_n(n / 2));
        if skip {
            continue;
        }
        let target = align.unapply(t.center_f64());
        let th = t.height_f64() / align.factor;
        let best = fam_n
            .tiles
            .iter()
            .filter(|u| u.sides == t.sides && (u.height_f64() - th).abs() < 1e-9)
            .map(|u| u.center_f64().dist(target))
            .fold(f64::INFINITY, f64::min);
        if best < 1e-9 {
            matched += 1;
            max_err = max_err.max(best);
        }
    }
    let expected_matched = fam_half.tiles.len() - (half_n(n / 2) as usize - 1);
    Ok(AlignmentReport { n, matched, expected_matched, max_center_error: max_err })
}

/// Exact check that for odd N the D tile and the parent form an edge-sharing
/// M-D pair: `hD = 1 + r_N`, so the D copy re-anchored across the parent's
/// base edge (center `(0, -1-hD)`) shares the full edge
/// `(-s_1, -1)..(s_1, -1)` with vertex-exact coordinates.
pub fn odd_d_shares_parent_side(fam: &Family) -> Result<bool> {
    if fam.case != FamilyCase::Odd {
        return Err(Error::WrongCase(String::from("D side-sharing check is for odd N")));
    }
    let n = fam.n;
    let ctx = fam.ctx().clone();
    let d = fam.d_tile();
    // hD = 1 + r_N exactly
    let r_n = sec_real_in(&ctx, n, 1)?;
    let one = RealElement::from_rational(&ctx, rat_i64(1));
    if d.height != one.add(&r_n) {
        return Ok(false);
    }
    // the pair copy: D translated to (0, -(1+hD)); its top edge must be the
    // parent's bottom edge
    let i = FieldElement::zeta_pow(&ctx, ctx.n() as i64 / 4);
    let pair_center = i.mul(&one.add(&d.height).as_field()).neg();
    let pair = Tile {
        sides: d.sides,
        center: pair_center,
        height: d.height.clone(),
        phase_turns: d.phase_turns.clone(),
        role: d.role,
        alias: d.alias,
        degenerate: d.degenerate,
    };
    let s1 = tan_real_in(&ctx, n, 1)?;
    let bl = s1.as_field().neg().sub(&i); // (-s_1, -1)
    let br = s1.as_field().sub(&i); // (s_1, -1)
    let verts = pair.vertices_exact()?;
    let has_bl = verts.iter().any(|v| *v == bl);
    let has_br = verts.iter().any(|v| *v == br);
    Ok(has_bl && has_br)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes_match_summary_table() {
        for (n, expect) in [(14u32, 11usize), (18, 15), (11, 13), (24, 21), (7, 7)] {
            let fam = first_family(n).unwrap();
            assert_eq!(fam.counted_size(), expect, "size mismatch for N={n}");
        }
    }

    #[test]
    fn twice_odd_shapes_alternate() {
        let fam = first_family(14).unwrap();
        for k in 1..=6u32 {
            let t = fam.tile_with_role(Role::S(k)).unwrap();
            assert_eq!(t.sides, if k % 2 == 0 { 14 } else { 7 }, "k={k}");
        }
        // D is an identical copy of the parent
        let d = fam.d_tile();
        assert_eq!(d.sides, 14);
        assert!(d.height.as_field().is_one());
        assert!(d.center_f64().x < -4.0);
        // M has the ScaleSwap height
        let m = fam.tile_with_alias(Alias::M).unwrap();
        assert_eq!(m.sides, 7);
        assert!((m.height_f64() - 0.4739).abs() < 1e-4);
    }

    #[test]
    fn heights_paper_values() {
        // N=7: {0.231914, 0.603875, 2.10992}
        let h = tile_heights(7).unwrap();
        let expect = [0.231914, 0.603875, 2.10992];
        for (a, b) in h.iter().zip(expect) {
            assert!((a - b).abs() < 1e-5, "{a} vs {b}");
        }
        // heights strictly increasing
        for n in [7u32, 12, 14, 24] {
            let hs = tile_heights(n).unwrap();
            for w in hs.windows(2) {
                assert!(w[1] > w[0]);
            }
        }
        // hS[<N/2>]/hD = 1 trivially
        let fam = first_family(14).unwrap();
        assert!(fam.d_tile().height.as_field().is_one());
    }

    #[test]
    fn all_tiles_rest_on_base_line() {
        // bottom edge of every tile lies on y = -1: center_y - height = -1
        for n in [7u32, 11, 14, 24] {
            let fam = first_family(n).unwrap();
            let ctx = fam.ctx().clone();
            let minus_one = RealElement::from_rational(&ctx, rat(-1, 1));
            for t in &fam.tiles {
                let cy = RealElement::new(t.center.im()).unwrap();
                assert_eq!(
                    cy.sub(&t.height),
                    minus_one,
                    "tile {} of N={n} off the base line",
                    t.role.label()
                );
            }
        }
    }

    #[test]
    fn no_tile_exceeds_two_n_sides() {
        for n in [7u32, 11, 12, 14] {
            let fam = first_family(n).unwrap();
            assert!(fam.tiles.iter().all(|t| t.sides <= 2 * n));
        }
    }

    #[test]
    fn mirror_symmetry_of_even_family() {
        // the LS half is the exact reflection of the S half about the
        // declared vertical axis
        let fam = first_family(14).unwrap();
        let m = fam.tile_with_alias(Alias::M).unwrap();
        let ax = m.center_f64().x;
        for t in &fam.tiles {
            if let Role::Ls(k) = t.role {
                let src = if k == 0 {
                    fam.parent()
                } else {
                    fam.tile_with_role(Role::S(k)).unwrap()
                };
                let c = t.center_f64();
                let s = src.center_f64();
                assert!((c.x - (2.0 * ax - s.x)).abs() < 1e-12);
                assert!((c.y - s.y).abs() < 1e-12);
                assert_eq!(t.sides, src.sides);
            }
        }
    }

    #[test]
    fn degenerate_flags() {
        let fam = first_family(12).unwrap();
        for k in 1..=5u32 {
            let t = fam.tile_with_role(Role::S(k)).unwrap();
            assert_eq!(t.degenerate, [2u32, 3, 4].contains(&k), "k={k}");
        }
    }

    #[test]
    fn odd_d_tile_properties() {
        let fam = first_family(7).unwrap();
        let d = fam.d_tile();
        assert_eq!(d.sides, 14);
        // side of D = side of parent: 2 hD tan(pi/14) = 2 tan(pi/7)
        let side_d = 2.0 * d.height_f64() * libm::tan(core::f64::consts::PI / 14.0);
        let side_n = 2.0 * libm::tan(core::f64::consts::PI / 7.0);
        assert!((side_d - side_n).abs() < 1e-12);
        assert!(odd_d_shares_parent_side(&fam).unwrap());
        assert!(odd_d_shares_parent_side(&first_family(11).unwrap()).unwrap());
    }

    #[test]
    fn promotion_maps_m_to_parent() {
        let fam14 = first_family(14).unwrap();
        let m = fam14.tile_with_alias(Alias::M).unwrap().clone();
        let promoted = promote_2n_to_n(&fam14, &m).unwrap();
        // M becomes the standard-position 7-gon
        let pm = promoted.iter().find(|t| t.alias == Some(Alias::M)).unwrap();
        assert!(pm.center.is_zero());
        assert!(pm.height.as_field().is_one());
        assert_eq!(pm.sides, 7);
        // D of the promoted family coincides with D of first_family(7)
        let fam7 = first_family(7).unwrap();
        let d7 = fam7.d_tile();
        let pd = promoted.iter().find(|t| t.alias == Some(Alias::D)).unwrap();
        assert!(pd.center_f64().dist(d7.center_f64()) < 1e-10);
        assert!((pd.height_f64() - d7.height_f64()).abs() < 1e-10);
        // wrong anchor is rejected
        let not_m = fam14.d_tile().clone();
        assert!(promote_2n_to_n(&fam14, &not_m).is_err());
    }

    #[test]
    fn alignment_14_7() {
        let rep = verify_twice_odd_alignment(14).unwrap();
        assert_eq!(rep.matched, rep.expected_matched);
        assert!(rep.max_center_error < 1e-10);
        assert!(twice_odd_alignment(12).is_err());
    }

    #[test]
    fn alignment_scale_relations() {
        // scale[k] of N/2 = scale[2k] * GenScale[N/2]/GenScale[N], and
        // scale[(N/2)-1] of N = GenScale[N/2], both exact.
        use crate::stargeom::scale_table;
        let n = 14u32;
        let t_n = scale_table(n).unwrap();
        let t_h = scale_table(n / 2).unwrap();
        let big = FieldCtx::new(4 * n);
        let gs_ratio = t_h
            .gen_scale()
            .lift_to(&big)
            .div(&t_n.gen_scale().lift_to(&big))
            .unwrap();
        for k in 1..=half_n(n / 2) {
            let lhs = t_h.scale(k).lift_to(&big);
            let rhs = t_n.scale(2 * k).lift_to(&big).mul(&gs_ratio);
            assert_eq!(lhs, rhs, "k={k}");
        }
        // the penultimate scale of N is GenScale[N/2]
        let lhs = t_n.scale(half_n(n) - 1).clone();
        let rhs = t_h.gen_scale().lift_to(&big);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn exact_vertices_of_parent() {
        let fam = first_family(14).unwrap();
        let verts = fam.parent().vertices_exact().unwrap();
        assert_eq!(verts.len(), 14);
        let float = fam.parent().vertices_f64();
        for (e, f) in verts.iter().zip(float) {
            assert!(cpoint_f64(e).dist(f) < 1e-10);
        }
    }
}
