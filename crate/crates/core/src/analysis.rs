//! Verification suites: scaling laws, even-N symmetry, independence ranks,
//! algebraic-degree profiles and fractal-dimension arithmetic.
//!
//! Every law is checked by exact field arithmetic; the reports carry the
//! checked statement and both sides' values so a failure names the exact
//! identity that broke.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::field::basis::{decompose_in_primitive_basis, primitive_indices};
use crate::field::embed::to_c64;
use crate::field::linalg::rank;
use crate::field::minpoly::{minimal_polynomial, norm_and_unit};
use crate::field::tangent::{cos_2pi_element, i_tan_element, sin_2pi_real, tan_2pi_real, tan_real};
use crate::field::{FieldCtx, FieldElement};
use crate::rat::Rational;
use crate::stargeom::{scale_swap_exact, scale_table};
use crate::{euler_phi, half_n};

/// One verified identity.
#[derive(Clone, Debug)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub pass: bool,
    pub lhs: String,
    pub rhs: String,
}

impl Check {
    fn exact(id: String, statement: String, lhs: &FieldElement, rhs: &FieldElement) -> Check {
        let pass = lhs == rhs;
        let (l, _) = to_c64(lhs);
        let (r, _) = to_c64(rhs);
        Check { id, statement, pass, lhs: format!("{l:.12}"), rhs: format!("{r:.12}") }
    }
}

/// A named bundle of checks.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub name: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(name: String) -> Report {
        Report { name, checks: Vec::new() }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn merge(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }
}

/// Scaling law for a divisor pair: `scale[j] of N/k = scale[kj]/scale[k]` for
/// every valid `j`, plus `scale[k] of N = ScaleSwap[N, N/k]`, all exact.
pub fn verify_scaling_lemma(n: u32, k: u32) -> Result<Report> {
    if k == 0 || n % k != 0 || n / k < 3 {
        return Err(Error::IndexRange(format!(
            "scaling lemma needs k | N with N/k >= 3; N={n}, k={k}"
        )));
    }
    let m = n / k;
    let mut report = Report::new(format!("scaling N={n} k={k}"));
    let t_n = scale_table(n)?;
    let big = t_n.ctx().clone();
    if k > 1 {
        let t_m = scale_table(m)?;
        for j in 1..=half_n(m) {
            let lhs = t_m.scale(j).lift_to(&big);
            // scale[kj]/scale[k] without division: multiply by the dual scale
            let rhs = t_n.scale(k * j).mul(t_n.dual_scale(k));
            report.checks.push(Check::exact(
                format!("scale[{j}]({m})"),
                format!("scale[{j}] of {m} = scale[{}]/scale[{k}] of {n}", k * j),
                lhs.as_field(),
                rhs.as_field(),
            ));
        }
        let swap = scale_swap_exact(n, m)?;
        report.checks.push(Check::exact(
            format!("swap({n},{m})"),
            format!("scale[{k}] of {n} = ScaleSwap[{n},{m}]"),
            t_n.scale(k).as_field(),
            swap.lift_to(&big).as_field(),
        ));
    } else {
        // k = 1 is the identity statement
        report.checks.push(Check::exact(
            format!("identity({n})"),
            format!("scale[1] of {n} = 1"),
            t_n.scale(1).as_field(),
            &FieldElement::one(&big),
        ));
    }
    Ok(report)
}

/// Even-N symmetry laws: reversal, twice-odd riffle, twice-even half-lists
/// with `scale[N/4]^2 = GenScale[N]`, and the `N/2` derivation via ScaleSwap.
pub fn verify_even_symmetry(n: u32) -> Result<Report> {
    if n % 2 != 0 {
        return Err(Error::WrongCase(format!("even symmetry requires even N, got {n}")));
    }
    let mut report = Report::new(format!("even symmetry N={n}"));
    let t = scale_table(n)?;
    let h = half_n(n);
    let gs = t.gen_scale();
    // (i) scales = Reverse[GenScale/scales]: scale[k] * scale[h+1-k] = GenScale
    for k in 1..=h {
        report.checks.push(Check::exact(
            format!("reversal k={k}"),
            format!("scale[{k}] * scale[{}] = GenScale[{n}]", h + 1 - k),
            t.scale(k).mul(t.scale(h + 1 - k)).as_field(),
            gs.as_field(),
        ));
    }
    if n % 4 == 2 {
        // (ii) riffle: odd- and even-indexed sublists interleave to the full
        // list, and each maps to the other under GenScale
        let odd: Vec<u32> = (1..=h).filter(|k| k % 2 == 1).collect();
        let even: Vec<u32> = (1..=h).filter(|k| k % 2 == 0).collect();
        let mut riffled = Vec::new();
        for i in 0..h as usize {
            riffled.push(if i % 2 == 0 { odd[i / 2] } else { even[i / 2] });
        }
        let interleaves = riffled == (1..=h).collect::<Vec<_>>();
        report.checks.push(Check {
            id: format!("riffle({n})"),
            statement: String::from("Riffle[OddScales, EvenScales] rebuilds the scale list"),
            pass: interleaves,
            lhs: format!("{riffled:?}"),
            rhs: format!("{:?}", (1..=h).collect::<Vec<_>>()),
        });
        for (i, &k) in odd.iter().enumerate() {
            // EvenScales = Reverse[GenScale/OddScales]
            let partner = even[even.len() - 1 - i];
            report.checks.push(Check::exact(
                format!("riffle pair {k}<->{partner}"),
                format!("scale[{partner}] * scale[{k}] = GenScale[{n}]"),
                t.scale(partner).mul(t.scale(k)).as_field(),
                gs.as_field(),
            ));
        }
    } else {
        // (iii) twice-even: halves map to each other and the central scale is
        // the square root of GenScale
        let q = n / 4;
        report.checks.push(Check::exact(
            format!("central({n})"),
            format!("scale[{q}]^2 = GenScale[{n}]"),
            t.scale(q).mul(t.scale(q)).as_field(),
            gs.as_field(),
        ));
        for j in 1..=q {
            report.checks.push(Check::exact(
                format!("halves j={j}"),
                format!("SecondHalf[{j}] = GenScale[{n}]/scale[{j}]"),
                t.scale(h + 1 - j).as_field(),
                gs.mul(t.dual_scale(j)).as_field(),
            ));
        }
    }
    // (iv) Scale[N/2] = EvenScales[N]/ScaleSwap[N, N/2] (the k = 2 scaling law)
    if n / 2 >= 3 {
        report.merge(verify_scaling_lemma(n, 2)?);
    }
    Ok(report)
}

/// Scales of `N` as elements of the base field `Q(zeta_N)` itself:
/// `scale[k] = i s_1 / i s_k` (no real tangent needed).
fn scale_in_base(ctx: &alloc::sync::Arc<FieldCtx>, k: u32) -> Result<FieldElement> {
    let n = ctx.n();
    let is1 = i_tan_element(ctx, 1)?;
    // 1/(i s_k) = (zeta^k + 1)/(zeta^k - 1)
    let zk_plus_1 = FieldElement::zeta_pow(ctx, k as i64).add(&FieldElement::one(ctx));
    let inv = FieldElement::inv_zeta_pow_minus_one(ctx, k as i64)?;
    let _ = n;
    Ok(is1.mul(&zk_plus_1).mul(&inv))
}

/// Exact rank over Q of the primitive scales of `N` (coordinate vectors in
/// `Q(zeta_N)`), which Theorem-level independence predicts to be `phi(N)/2`.
pub fn independence_rank(n: u32) -> Result<usize> {
    let ctx = FieldCtx::new(n);
    let rows: Vec<Vec<Rational>> = primitive_indices(n)
        .into_iter()
        .map(|k| Ok(scale_in_base(&ctx, k)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    Ok(rank(&rows))
}

/// Ranks of the three primitive coordinate families: the `i*tan` star points,
/// the scales and the dual scales. All must equal `phi(N)/2`.
pub struct RankProfile {
    pub n: u32,
    pub star_rank: usize,
    pub scale_rank: usize,
    pub dual_scale_rank: usize,
    pub expected: usize,
}

pub fn rank_profile(n: u32) -> Result<RankProfile> {
    let ctx = FieldCtx::new(n);
    let prim = primitive_indices(n);
    let stars: Vec<Vec<Rational>> = prim
        .iter()
        .map(|&k| Ok(i_tan_element(&ctx, k as i64)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let scales: Vec<Vec<Rational>> = prim
        .iter()
        .map(|&k| Ok(scale_in_base(&ctx, k)?.coeffs().to_vec()))
        .collect::<Result<_>>()?;
    let duals: Vec<Vec<Rational>> = prim
        .iter()
        .map(|&k| {
            // dual scale = s_k/s_1 = (i s_k) * 1/(i s_1)
            let isk = i_tan_element(&ctx, k as i64)?;
            let z1_plus_1 = FieldElement::zeta_pow(&ctx, 1).add(&FieldElement::one(&ctx));
            let inv = FieldElement::inv_zeta_pow_minus_one(&ctx, 1)?;
            Ok(isk.mul(&z1_plus_1).mul(&inv).coeffs().to_vec())
        })
        .collect::<Result<_>>()?;
    Ok(RankProfile {
        n,
        star_rank: rank(&stars),
        scale_rank: rank(&scales),
        dual_scale_rank: rank(&duals),
        expected: euler_phi(n) as usize / 2,
    })
}

/// Independence + basis suite for one N: ranks equal `phi(N)/2` and every
/// star point reconstructs exactly from its primitive-basis decomposition.
pub fn verify_independence(n: u32) -> Result<Report> {
    let mut report = Report::new(format!("independence N={n}"));
    let rp = rank_profile(n)?;
    for (what, got) in [
        ("primitive star points", rp.star_rank),
        ("primitive scales", rp.scale_rank),
        ("primitive dual scales", rp.dual_scale_rank),
    ] {
        report.checks.push(Check {
            id: format!("rank {what} N={n}"),
            statement: format!("rank of {what} = phi({n})/2"),
            pass: got == rp.expected,
            lhs: format!("{got}"),
            rhs: format!("{}", rp.expected),
        });
    }
    let ctx = FieldCtx::new(n);
    for k in 1..=half_n(n) {
        let coeffs = decompose_in_primitive_basis(n, k)?;
        let mut acc = FieldElement::zero(&ctx);
        for (j, a) in &coeffs {
            acc = acc.add(&i_tan_element(&ctx, *j as i64)?.scale(a));
        }
        let target = i_tan_element(&ctx, k as i64)?;
        report.checks.push(Check::exact(
            format!("basis reconstruction N={n} k={k}"),
            format!("sum a_j s_j = s_{k} over primitive j"),
            &acc,
            &target,
        ));
    }
    Ok(report)
}

/// `GenScale` unit laws: primitive iff `N != 2 mod 4`; primitive GenScales
/// are algebraic units.
pub fn verify_units(n: u32) -> Result<Report> {
    let mut report = Report::new(format!("units N={n}"));
    let t = scale_table(n)?;
    let h = half_n(n);
    let primitive = t.is_primitive(h);
    let expected_primitive = n % 4 != 2;
    report.checks.push(Check {
        id: format!("GenScale[{n}] primitivity"),
        statement: format!("GenScale[{n}] primitive iff N != 2 mod 4"),
        pass: primitive == expected_primitive,
        lhs: format!("{primitive}"),
        rhs: format!("{expected_primitive}"),
    });
    if expected_primitive {
        let (norm, integral, unit) = norm_and_unit(t.gen_scale());
        report.checks.push(Check {
            id: format!("GenScale[{n}] unit"),
            statement: format!("GenScale[{n}] is an algebraic unit"),
            pass: integral && unit,
            lhs: format!("norm {}", crate::rat::rat_to_string(&norm)),
            rhs: String::from("integral with norm +-1"),
        });
    }
    Ok(report)
}

/// Fractal dimension from a geometric contraction and a temporal (period)
/// scaling factor: `-ln(temporal)/ln(geometric)`.
#[derive(Clone, Debug)]
pub struct DimensionReport {
    pub geometric_scale: f64,
    pub temporal_scale: f64,
    pub dimension: f64,
    pub provenance: &'static str,
}

pub fn fractal_dimension(geometric: f64, temporal: f64) -> Result<DimensionReport> {
    if !(0.0 < geometric && geometric < 1.0) {
        return Err(Error::Domain(format!("geometric scale must be in (0,1): {geometric}")));
    }
    if temporal <= 1.0 {
        return Err(Error::Domain(format!("temporal scale must exceed 1: {temporal}")));
    }
    Ok(DimensionReport {
        geometric_scale: geometric,
        temporal_scale: temporal,
        dimension: -libm::log(temporal) / libm::log(geometric),
        provenance: "formula",
    })
}

/// Successive period ratios; the final ratio is the temporal-scaling
/// estimate. The ratio sequence is returned raw rather than asserted
/// convergent.
pub fn temporal_scaling_estimate(periods: &[u64]) -> Result<(Vec<f64>, f64)> {
    if periods.len() < 2 {
        return Err(Error::Domain(String::from("need at least two periods")));
    }
    if periods.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Domain(String::from("period sequence must increase strictly")));
    }
    let ratios: Vec<f64> = periods
        .windows(2)
        .map(|w| w[1] as f64 / w[0] as f64)
        .collect();
    let last = *ratios.last().unwrap();
    Ok((ratios, last))
}

/// Predicted and computed algebraic degrees of the four trigonometric values
/// attached to N.
#[derive(Clone, Debug)]
pub struct ComplexityProfile {
    pub n: u32,
    pub cos_2pi: DegreePair,
    pub sin_2pi: DegreePair,
    /// `None` when `tan(2 pi/N)` has a pole (N = 4).
    pub tan_2pi: Option<DegreePair>,
    pub tan_pi: DegreePair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreePair {
    pub predicted: u32,
    pub computed: u32,
}

impl DegreePair {
    pub fn consistent(&self) -> bool {
        self.predicted == self.computed
    }
}

impl ComplexityProfile {
    pub fn consistent(&self) -> bool {
        self.cos_2pi.consistent()
            && self.sin_2pi.consistent()
            && self.tan_2pi.map_or(true, |p| p.consistent())
            && self.tan_pi.consistent()
    }
}

/// Case analysis for the degrees plus the exact minimal-polynomial degrees.
pub fn complexity_profile(n: u32) -> Result<ComplexityProfile> {
    if n < 3 {
        return Err(Error::BadPolygon(format!("complexity profile needs N >= 3, got {n}")));
    }
    let phi = euler_phi(n);
    let cos_pred = phi / 2;
    let sin_pred = if n == 4 {
        1
    } else if n % 4 != 0 {
        phi
    } else if n % 8 == 0 {
        phi / 2
    } else {
        phi / 4
    };
    let tan2_pred = if n == 4 {
        None
    } else if n % 4 != 0 {
        Some(phi)
    } else if n % 8 == 4 {
        Some(phi / 2)
    } else {
        Some(phi / 4)
    };
    let tanpi_pred = if n % 4 == 0 { phi / 2 } else { phi };

    let ctx_n = FieldCtx::new(n);
    let cos_deg = minimal_polynomial(&cos_2pi_element(&ctx_n, 1)).degree() as u32;
    let sin_deg = minimal_polynomial(sin_2pi_real(n, 1).as_field()).degree() as u32;
    let tan2_deg = match tan_2pi_real(n, 1) {
        Ok(t) => Some(minimal_polynomial(t.as_field()).degree() as u32),
        Err(Error::TangentPole { .. }) => None,
        Err(e) => return Err(e),
    };
    let tanpi_deg = minimal_polynomial(tan_real(n, 1)?.as_field()).degree() as u32;

    Ok(ComplexityProfile {
        n,
        cos_2pi: DegreePair { predicted: cos_pred, computed: cos_deg },
        sin_2pi: DegreePair { predicted: sin_pred, computed: sin_deg },
        tan_2pi: match (tan2_pred, tan2_deg) {
            (Some(p), Some(c)) => Some(DegreePair { predicted: p, computed: c }),
            _ => None,
        },
        tan_pi: DegreePair { predicted: tanpi_pred, computed: tanpi_deg },
    })
}

/// All scaling-lemma checks for `3 <= N <= max_n`, every divisor `k` of `N`
/// with `N/k >= 3`.
pub fn verify_scaling_all(max_n: u32) -> Result<Report> {
    let mut report = Report::new(format!("scaling lemma, N <= {max_n}"));
    for n in 3..=max_n {
        for k in crate::divisors(n) {
            if n / k >= 3 {
                report.merge(verify_scaling_lemma(n, k)?);
            }
        }
    }
    Ok(report)
}

pub fn verify_symmetry_all(max_n: u32) -> Result<Report> {
    let mut report = Report::new(format!("even symmetry, N <= {max_n}"));
    for n in (4..=max_n).step_by(2) {
        report.merge(verify_even_symmetry(n)?);
    }
    Ok(report)
}

pub fn verify_independence_all(max_n: u32) -> Result<Report> {
    let mut report = Report::new(format!("independence, N <= {max_n}"));
    for n in 3..=max_n {
        report.merge(verify_independence(n)?);
        report.merge(verify_units(n)?);
    }
    Ok(report)
}

pub fn verify_complexity_all(max_n: u32) -> Result<Report> {
    let mut report = Report::new(format!("complexity, N <= {max_n}"));
    for n in 3..=max_n {
        let p = complexity_profile(n)?;
        for (what, pair) in [
            ("cos(2pi/N)", Some(p.cos_2pi)),
            ("sin(2pi/N)", Some(p.sin_2pi)),
            ("tan(2pi/N)", p.tan_2pi),
            ("tan(pi/N)", Some(p.tan_pi)),
        ] {
            if let Some(pair) = pair {
                report.checks.push(Check {
                    id: format!("degree {what} N={n}"),
                    statement: format!("degree of {what} matches the case analysis"),
                    pass: pair.consistent(),
                    lhs: format!("{}", pair.computed),
                    rhs: format!("{}", pair.predicted),
                });
            }
        }
    }
    Ok(report)
}
