//! Multiplication operators `M_psi : f -> psi * f` on the tree Hardy spaces:
//! operator norm, spectrum samples and classification, resolvent symbols,
//! compactness, essential-norm upper bounds and isometry.
//!
//! The backbone identities: `||M_psi|| = ||psi||_inf`, the spectrum is the
//! closure of the range of `psi`, `M_psi` is compact iff `psi` vanishes
//! uniformly at infinity, and `||M_psi||_e <= lim sup_n M_inf(n, psi)`.
//! Everything limit-dependent is certified from tail metadata or reported
//! `Inconclusive`.

use num_complex::Complex;

use crate::space::{
    Exponent, FunctionRep, LevelValues, MeanTail, NormReport, SpaceKind, Tail, Verdict,
};
use crate::tree::{TreeGeometry, VertexId};
use crate::{Error, Result, Scalar};

/// The multiplier `psi` of a multiplication operator.
#[derive(Debug, Clone)]
pub struct Symbol<S: Scalar> {
    pub rep: FunctionRep<S>,
}

impl<S: Scalar> Symbol<S> {
    pub fn new(rep: FunctionRep<S>) -> Self {
        Self { rep }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict3 {
    Yes,
    No,
    Inconclusive,
}

impl From<Verdict> for Verdict3 {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::InSpace => Verdict3::Yes,
            Verdict::NotInSpace => Verdict3::No,
            Verdict::Inconclusive => Verdict3::Inconclusive,
        }
    }
}

impl std::fmt::Display for Verdict3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict3::Yes => "yes",
            Verdict3::No => "no",
            Verdict3::Inconclusive => "inconclusive",
        })
    }
}

/// Sampled point spectrum: distinct values of `psi` on the examined region,
/// each with a witnessing vertex (an eigenvector is its indicator).
#[derive(Debug, Clone)]
pub struct SpectrumSample<S> {
    pub values: Vec<Complex<S>>,
    pub witnesses: Vec<VertexId>,
    pub depth: u64,
    pub closure_note: String,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SpectrumClassification<S> {
    /// `lambda` is within tolerance of an attained value of `psi`.
    PointSpectrum { witness: VertexId },
    /// `lambda` is certified to lie in the closure of the range without a
    /// witnessing vertex (a limit value of `psi`).
    InClosure,
    /// `lambda` is certified at positive distance from the closed range;
    /// `inverse_norm = 1 / distance` bounds the resolvent operator norm.
    Resolvent { distance: S, inverse_norm: S },
    Inconclusive,
}

/// Upper bounds `b_n >= sup_{m >= n} M_inf(m, psi)`; `bound` is the certified
/// limit bound on the essential norm (`infinity` when the tail declaration
/// cannot certify one).
#[derive(Debug, Clone)]
pub struct EssentialNormBound<S> {
    pub sequence: Vec<S>,
    pub bound: S,
}

#[derive(Debug, Clone)]
pub struct OperatorAnalysis<S: Scalar> {
    pub operator_norm: NormReport<S>,
    pub bounded: Verdict3,
    pub compact: Verdict3,
    pub compact_evidence: Vec<S>,
    pub essential_norm: EssentialNormBound<S>,
    pub isometry: Verdict3,
    pub isometry_witness: Option<VertexId>,
    pub spectrum: SpectrumSample<S>,
}

/// Report of a sequence tending to zero pointwise (uniformly on finite
/// subtrees) whose norms need not follow.
#[derive(Debug, Clone)]
pub struct NullSequenceReport<S> {
    pub sup_diffs: Vec<S>,
    pub norms: Vec<S>,
}

fn czero<S: Scalar>() -> Complex<S> {
    Complex::new(S::zero(), S::zero())
}

/// `psi * f`, staying in a structured representation when the product is
/// closed under one: radial multipliers preserve every variant, path/radial
/// products are path supported, and anything touching a finite support or a
/// dense truncation stays finitely supported/dense.
pub fn apply<S: Scalar>(psi: &Symbol<S>, f: &FunctionRep<S>) -> FunctionRep<S> {
    let p = &psi.rep;
    match (p, f) {
        (_, FunctionRep::FiniteSupport { entries }) => FunctionRep::FiniteSupport {
            entries: entries
                .iter()
                .map(|(v, z)| (*v, p.evaluate(*v) * *z))
                .collect(),
        },
        (FunctionRep::FiniteSupport { entries }, _) => FunctionRep::FiniteSupport {
            entries: entries
                .iter()
                .map(|(v, z)| (*v, *z * f.evaluate(*v)))
                .collect(),
        },
        (_, FunctionRep::DenseTruncated { levels }) if !matches!(p, FunctionRep::PointwiseRule { .. }) => {
            FunctionRep::DenseTruncated {
                levels: levels
                    .iter()
                    .enumerate()
                    .map(|(n, arr)| {
                        arr.iter()
                            .enumerate()
                            .map(|(i, z)| p.evaluate(VertexId::new(n as u64, i as u64)) * *z)
                            .collect()
                    })
                    .collect(),
            }
        }
        (FunctionRep::DenseTruncated { levels }, _) if !matches!(f, FunctionRep::PointwiseRule { .. }) => {
            FunctionRep::DenseTruncated {
                levels: levels
                    .iter()
                    .enumerate()
                    .map(|(n, arr)| {
                        arr.iter()
                            .enumerate()
                            .map(|(i, z)| *z * f.evaluate(VertexId::new(n as u64, i as u64)))
                            .collect()
                    })
                    .collect(),
            }
        }
        (
            FunctionRep::Radial { values: v1, .. },
            FunctionRep::Radial { values: v2, .. },
        ) => {
            let tail = tail_mul(p, f);
            let v1 = v1.clone();
            let v2 = v2.clone();
            FunctionRep::Radial {
                values: level_product(v1, v2),
                tail,
            }
        }
        (
            FunctionRep::Radial { values: v1, .. } | FunctionRep::PathSupported { coefficients: v1, .. },
            FunctionRep::Radial { values: v2, .. } | FunctionRep::PathSupported { coefficients: v2, .. },
        ) => {
            // at least one side is path supported, so the product is too
            let tail = tail_mul(p, f);
            FunctionRep::PathSupported {
                coefficients: level_product(v1.clone(), v2.clone()),
                tail,
            }
        }
        _ => {
            let p = p.clone();
            let f = f.clone();
            FunctionRep::pointwise(move |v| p.evaluate(v) * f.evaluate(v))
        }
    }
}

fn level_product<S: Scalar>(a: LevelValues<S>, b: LevelValues<S>) -> LevelValues<S> {
    if let (LevelValues::Stored(x), LevelValues::Stored(y)) = (&a, &b) {
        let len = x.len().min(y.len());
        return LevelValues::Stored((0..len).map(|i| x[i] * y[i]).collect());
    }
    LevelValues::Rule(std::sync::Arc::new(move |n| a.at(n) * b.at(n)))
}

/// Tail of a product of level-indexed representations: exact for matching
/// level-size powers and for unimodular factors, multiplied bounds otherwise.
fn tail_mul<S: Scalar>(a: &FunctionRep<S>, b: &FunctionRep<S>) -> Tail<S> {
    let (ta, tb) = match (a.level_tail(), b.level_tail()) {
        (Some(x), Some(y)) => (x, y),
        _ => return Tail::Unknown,
    };
    match (ta, tb) {
        (Tail::LevelSizePower { exponent: e1 }, Tail::LevelSizePower { exponent: e2 }) => {
            return Tail::LevelSizePower {
                exponent: e1 + e2,
            }
        }
        _ => {}
    }
    let unimodular = |t: &Tail<S>| {
        matches!(t, Tail::Bounded { lower, upper, .. } if *lower == S::one() && *upper == S::one())
    };
    if unimodular(&ta) {
        return tb;
    }
    if unimodular(&tb) {
        return ta;
    }
    match (a.value_bounds(), b.value_bounds()) {
        (Some((l1, u1, s1)), Some((l2, u2, s2))) => Tail::Bounded {
            lower: l1 * l2,
            upper: u1 * u2,
            limsup: (s1 * u2).min(u1 * s2),
        },
        _ => {
            // a divergent factor bounded away from zero on the other side
            // stays divergent
            let divergent = |t: &Tail<S>| matches!(t, Tail::Divergent);
            let away = |bounds: Option<(S, S, S)>| {
                matches!(bounds, Some((l, _, _)) if l > S::zero())
            };
            if (divergent(&ta) && away(b.value_bounds()))
                || (divergent(&tb) && away(a.value_bounds()))
            {
                Tail::Divergent
            } else {
                Tail::Unknown
            }
        }
    }
}

/// `||M_psi|| = ||psi||_inf`: the operator norm on every `T_p`, via the
/// sup-norm of the symbol.
pub fn operator_norm<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<NormReport<S>> {
    psi.rep.norm(geo, Exponent::Infinity, depth, cap)
}

/// `M_psi` is bounded on `T_p` iff `psi` is a bounded function.
pub fn boundedness<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<Verdict3> {
    Ok(psi
        .rep
        .membership(geo, Exponent::Infinity, SpaceKind::Full, depth, cap)?
        .verdict
        .into())
}

/// Lower bound on `||M_psi||` obtained by testing against normalized point
/// masses: `||M_psi delta_v|| / ||delta_v|| = |psi(v)|`. Enumerates vertices
/// directly, independently of the closed-form mean evaluation.
pub fn delta_lower_bound<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<S> {
    let mut best = S::zero();
    for n in 0..=depth {
        for v in geo.enumerate_level(n, cap)? {
            let m = psi.rep.evaluate(v).norm();
            if m > best {
                best = m;
            }
        }
    }
    Ok(best)
}

/// Candidate `(value, witness)` pairs for the point spectrum: every value
/// `psi` attains on the examined region, including the off-support /
/// off-path / beyond-truncation zeros that indicators witness.
fn sample_candidates<S: Scalar>(
    psi: &FunctionRep<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<Vec<(Complex<S>, VertexId)>> {
    let eff = depth.max(psi.stored_extent());
    let mut out = Vec::new();
    match psi {
        FunctionRep::Radial { values, .. } => {
            for n in 0..=eff {
                out.push((values.at(n), VertexId::new(n, 0)));
            }
            if matches!(values, LevelValues::Stored(_)) {
                out.push((czero(), VertexId::new(eff + 1, 0)));
            }
        }
        FunctionRep::PathSupported { coefficients, .. } => {
            for n in 0..=eff {
                out.push((coefficients.at(n), VertexId::new(n, 0)));
            }
            // every off-path vertex carries 0; (1, 1) always exists
            out.push((czero(), VertexId::new(1, 1)));
        }
        FunctionRep::FiniteSupport { entries } => {
            for (v, z) in entries {
                out.push((*z, *v));
            }
            // the level past the support extent is disjoint from it
            out.push((czero(), VertexId::new(eff + 1, 0)));
        }
        FunctionRep::DenseTruncated { levels } => {
            for (n, arr) in levels.iter().enumerate() {
                for (i, z) in arr.iter().enumerate() {
                    out.push((*z, VertexId::new(n as u64, i as u64)));
                }
            }
            out.push((czero(), VertexId::new(levels.len() as u64, 0)));
        }
        FunctionRep::PointwiseRule { rule } => {
            for n in 0..=eff {
                for v in geo.enumerate_level(n, cap)? {
                    out.push((rule(v), v));
                }
            }
        }
    }
    Ok(out)
}

/// Every eigenvalue of `M_psi` observed on the examined region. Each sampled
/// value `psi(v)` is an eigenvalue with eigenvector the indicator of `v`.
pub fn point_spectrum_sample<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<SpectrumSample<S>> {
    let eff = depth.max(psi.rep.stored_extent());
    let mut cands = sample_candidates(&psi.rep, geo, depth, cap)?;
    cands.sort_by(|(a, _), (b, _)| {
        a.re.partial_cmp(&b.re)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
    });
    cands.dedup_by(|(a, _), (b, _)| a == b);
    let (values, witnesses) = cands.into_iter().unzip();
    let closure_note = match psi.rep.mean_tail(geo, Exponent::Infinity, eff) {
        MeanTail::WithinObserved => {
            "symbol values vanish at infinity; 0 is a limit point of the spectrum".to_string()
        }
        MeanTail::BoundedBy { limsup, .. } if limsup == S::zero() => {
            "symbol values vanish at infinity; 0 is a limit point of the spectrum".to_string()
        }
        MeanTail::BoundedBy { sup, .. } => format!(
            "unexamined symbol values have modulus at most {sup}; the spectrum is the closure of the full range"
        ),
        MeanTail::DivergentMeans => "symbol values diverge; the spectrum is unbounded".to_string(),
        MeanTail::UnknownMeans => {
            "no tail declaration; values beyond the examined depth are unknown".to_string()
        }
    };
    Ok(SpectrumSample {
        values,
        witnesses,
        depth: eff,
        closure_note,
    })
}

/// Certified annulus containing the unexamined symbol values, plus whether 0
/// is a certified limit value.
fn tail_annulus<S: Scalar>(psi: &FunctionRep<S>) -> (Option<(S, S)>, bool) {
    match psi {
        // beyond the examined region everything is exactly 0, and that 0 is
        // already an attained sample candidate
        FunctionRep::FiniteSupport { .. } | FunctionRep::DenseTruncated { .. } => {
            (Some((S::zero(), S::zero())), false)
        }
        // stored prefixes are exactly 0 beyond the prefix; the zero is
        // already an attained sample candidate
        FunctionRep::Radial {
            values: LevelValues::Stored(_),
            ..
        }
        | FunctionRep::PathSupported {
            coefficients: LevelValues::Stored(_),
            ..
        } => (Some((S::zero(), S::zero())), false),
        FunctionRep::Radial { .. } | FunctionRep::PathSupported { .. } => {
            match psi.value_bounds() {
                Some((l, u, limsup)) => (Some((l, u)), limsup == S::zero()),
                None => (None, false),
            }
        }
        FunctionRep::PointwiseRule { .. } => (None, false),
    }
}

/// Locate `lambda` relative to the spectrum of `M_psi` (the closure of the
/// range of `psi`), within tolerance `tol`.
pub fn spectrum_classify<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    lambda: Complex<S>,
    depth: u64,
    cap: u64,
    tol: S,
) -> Result<SpectrumClassification<S>> {
    let cands = sample_candidates(&psi.rep, geo, depth, cap)?;
    let mut best: Option<(S, VertexId)> = None;
    for (z, v) in cands {
        let d = (z - lambda).norm();
        if best.map_or(true, |(bd, _)| d < bd) {
            best = Some((d, v));
        }
    }
    let (prefix_dist, witness) = best.expect("candidate list is never empty");
    if prefix_dist <= tol {
        return Ok(SpectrumClassification::PointSpectrum { witness });
    }
    let (annulus, zero_limit) = tail_annulus(&psi.rep);
    if zero_limit && lambda.norm() <= tol {
        return Ok(SpectrumClassification::InClosure);
    }
    let tail_dist = match annulus {
        Some((l, u)) => {
            let m = lambda.norm();
            if m < l {
                l - m
            } else if m > u {
                m - u
            } else {
                S::zero()
            }
        }
        None => return Ok(SpectrumClassification::Inconclusive),
    };
    let d = prefix_dist.min(tail_dist);
    if d > tol {
        Ok(SpectrumClassification::Resolvent {
            distance: d,
            inverse_norm: d.recip(),
        })
    } else {
        Ok(SpectrumClassification::Inconclusive)
    }
}

/// The inverse symbol `1 / (psi - lambda)` together with the certified
/// distance from `lambda` to the spectrum; `||(M_psi - lambda)^{-1}|| =
/// 1 / distance`. Fails unless the classification certifies a resolvent
/// point.
pub fn resolvent_symbol<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    lambda: Complex<S>,
    depth: u64,
    cap: u64,
    tol: S,
) -> Result<(Symbol<S>, S)> {
    let fmt_lambda = format!("{} + {}i", lambda.re, lambda.im);
    let distance = match spectrum_classify(psi, geo, lambda, depth, cap, tol)? {
        SpectrumClassification::Resolvent { distance, .. } => distance,
        SpectrumClassification::PointSpectrum { witness } => {
            return Err(Error::NotInvertible {
                lambda: fmt_lambda,
                reason: format!("eigenvalue with witness {witness}"),
            })
        }
        SpectrumClassification::InClosure => {
            return Err(Error::NotInvertible {
                lambda: fmt_lambda,
                reason: "lies in the closure of the symbol range".to_string(),
            })
        }
        SpectrumClassification::Inconclusive => {
            return Err(Error::NotInvertible {
                lambda: fmt_lambda,
                reason: "cannot certify a positive distance to the spectrum".to_string(),
            })
        }
    };
    let rep = match &psi.rep {
        FunctionRep::Radial { values, .. } => {
            // |1/(psi(n) - lambda)| lies between 1/(sup dist) and 1/distance
            let far = match psi.rep.value_bounds() {
                Some((_, u, _)) => u + lambda.norm(),
                None => S::infinity(),
            };
            let lower = if far.is_finite() { far.recip() } else { S::zero() };
            let values = values.clone();
            FunctionRep::radial_fn(
                move |n| (values.at(n) - lambda).inv(),
                Tail::Bounded {
                    lower,
                    upper: distance.recip(),
                    limsup: distance.recip(),
                },
            )
        }
        other => {
            let other = other.clone();
            FunctionRep::pointwise(move |v| (other.evaluate(v) - lambda).inv())
        }
    };
    Ok((Symbol::new(rep), distance))
}

/// `M_psi` is compact on `T_p` / `T_{p,0}` iff `psi` vanishes uniformly at
/// infinity, i.e. `M_inf(n, psi) -> 0`. Evidence is the observed sup-mean
/// sequence.
pub fn compactness_verdict<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<(Verdict3, Vec<S>)> {
    let eff = depth.max(psi.rep.stored_extent());
    let mut evidence = Vec::with_capacity(eff as usize + 1);
    for n in 0..=eff {
        evidence.push(psi.rep.level_mean(geo, n, Exponent::Infinity, cap)?);
    }
    let verdict = match psi.rep.mean_tail(geo, Exponent::Infinity, eff) {
        MeanTail::WithinObserved => Verdict3::Yes,
        MeanTail::BoundedBy { limsup, liminf, .. } => {
            if limsup == S::zero() {
                Verdict3::Yes
            } else if liminf > S::zero() {
                Verdict3::No
            } else {
                Verdict3::Inconclusive
            }
        }
        MeanTail::DivergentMeans => Verdict3::No,
        MeanTail::UnknownMeans => Verdict3::Inconclusive,
    };
    Ok((verdict, evidence))
}

/// Essential-norm upper bounds `b_n = sup_{m >= n} M_inf(m, psi)`, combining
/// the observed suffix maxima with the certified tail bound. The limit bound
/// is the tail limsup; `infinity` when the tail declaration certifies none.
pub fn essential_norm_upper<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
) -> Result<EssentialNormBound<S>> {
    let eff = depth.max(psi.rep.stored_extent());
    let mut means = Vec::with_capacity(eff as usize + 1);
    for n in 0..=eff {
        means.push(psi.rep.level_mean(geo, n, Exponent::Infinity, cap)?);
    }
    let observed_max = means.iter().fold(S::zero(), |a, &b| if b > a { b } else { a });
    let (floor, bound) = match psi.rep.mean_tail(geo, Exponent::Infinity, eff) {
        // vanishing tails stay below the observed maximum but their suffix
        // suprema are only bounded by it
        MeanTail::WithinObserved => (observed_max, S::zero()),
        MeanTail::BoundedBy { sup, limsup, .. } => (sup, limsup),
        MeanTail::DivergentMeans | MeanTail::UnknownMeans => (S::infinity(), S::infinity()),
    };
    let mut sequence = vec![S::zero(); means.len()];
    let mut running = floor;
    for n in (0..means.len()).rev() {
        if means[n] > running {
            running = means[n];
        }
        sequence[n] = running;
    }
    Ok(EssentialNormBound { sequence, bound })
}

/// `M_psi` is an isometry on `T_p` iff `|psi| = 1` everywhere. A witness is
/// returned for a `No` found on the examined region.
pub fn isometry_verdict<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
    tol: S,
) -> Result<(Verdict3, Option<VertexId>)> {
    for (z, v) in sample_candidates(&psi.rep, geo, depth, cap)? {
        if (z.norm() - S::one()).abs() > tol {
            return Ok((Verdict3::No, Some(v)));
        }
    }
    // the examined region passed; the tail decides
    let verdict = match psi.rep.level_tail() {
        Some(Tail::Bounded { lower, upper, .. }) => {
            if (lower - S::one()).abs() <= tol && (upper - S::one()).abs() <= tol {
                Verdict3::Yes
            } else {
                Verdict3::Inconclusive
            }
        }
        Some(Tail::LevelSizePower { exponent }) => {
            if exponent == S::zero() {
                Verdict3::Yes
            } else {
                // for q >= 2 the powers leave the unit circle; q = 1 keeps
                // |values| = 2^e != 1
                Verdict3::No
            }
        }
        Some(Tail::Vanishing) | Some(Tail::Divergent) => Verdict3::No,
        Some(Tail::Unknown) | None => Verdict3::Inconclusive,
    };
    Ok((verdict, None))
}

/// For each function in the sequence: its sup-distance to zero on the levels
/// up to `n_max` (uniform-on-finite-subtrees convergence) and its norm.
/// Exhibits sequences converging pointwise but not in norm.
pub fn pointwise_null_sequence_check<S: Scalar>(
    seq: &[FunctionRep<S>],
    geo: &TreeGeometry,
    p: Exponent<S>,
    n_max: u64,
    depth: u64,
    cap: u64,
) -> Result<NullSequenceReport<S>> {
    let zero = FunctionRep::zero();
    let mut sup_diffs = Vec::with_capacity(seq.len());
    let mut norms = Vec::with_capacity(seq.len());
    for f in seq {
        sup_diffs.push(crate::space::compact_sup_diff(f, &zero, geo, n_max, cap)?);
        norms.push(f.norm(geo, p, depth, cap)?.value);
    }
    Ok(NullSequenceReport { sup_diffs, norms })
}

/// Full multiplication-operator report.
pub fn analyze<S: Scalar>(
    psi: &Symbol<S>,
    geo: &TreeGeometry,
    depth: u64,
    cap: u64,
    tol: S,
) -> Result<OperatorAnalysis<S>> {
    let operator_norm = operator_norm(psi, geo, depth, cap)?;
    let bounded = boundedness(psi, geo, depth, cap)?;
    let (compact, compact_evidence) = compactness_verdict(psi, geo, depth, cap)?;
    let essential_norm = essential_norm_upper(psi, geo, depth, cap)?;
    let (isometry, isometry_witness) = isometry_verdict(psi, geo, depth, cap, tol)?;
    let spectrum = point_spectrum_sample(psi, geo, depth, cap)?;
    Ok(OperatorAnalysis {
        operator_norm,
        bounded,
        compact,
        compact_evidence,
        essential_norm,
        isometry,
        isometry_witness,
        spectrum,
    })
}
