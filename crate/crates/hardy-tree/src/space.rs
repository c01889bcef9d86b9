//! Function representations on the tree, level means `M_p(n, f)`, norms,
//! Lipschitz-type seminorms and membership evidence for `T_p` / `T_{p,0}`.
//!
//! A finite computation cannot observe a limit, so every representation with
//! infinitely many potentially nonzero values carries a caller-declared
//! [`Tail`] classification. Exact verdicts (norm exactness, membership,
//! compactness of the induced multiplication operator) flow only from that
//! metadata; everything else is reported as a depth-limited bound or
//! `Inconclusive`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_complex::Complex;

use crate::numeric::{Kahan, LogSumExp};
use crate::tree::{TreeGeometry, VertexId};
use crate::{Error, Result, Scalar};

/// The exponent `p` of a level mean; `(0, inf)` or `inf`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> Exponent<S> {
    pub fn finite(p: S) -> Result<Self> {
        if p.is_finite() && p > S::zero() {
            Ok(Exponent::Finite(p))
        } else {
            Err(Error::InvalidExponent(format!("{p}")))
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let t = text.trim();
        if t.eq_ignore_ascii_case("inf") || t.eq_ignore_ascii_case("infinity") || t == "∞" {
            return Ok(Exponent::Infinity);
        }
        let p: f64 = t
            .parse()
            .map_err(|_| Error::InvalidExponent(t.to_string()))?;
        Self::finite(S::from_f64(p).ok_or_else(|| Error::InvalidExponent(t.to_string()))?)
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Exponent::Finite(_))
    }
}

impl<S: Scalar> std::fmt::Display for Exponent<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

/// Caller-declared behavior of a level-value sequence beyond any examined
/// prefix. These are certificates, not observations; the library checks them
/// for consistency against the examined prefix but cannot prove them.
///
/// Semantics, for the modulus sequence `m_n` of the declared values:
///
/// * `Vanishing` — `m_n -> 0`, and the running maximum is attained within
///   every prefix: `m_n <= max(m_0, ..., m_d)` for all `n > d >= 0`.
///   Sequences whose peak occurs later should declare `Bounded` with
///   `limsup = 0` instead.
/// * `Bounded { lower, upper, limsup }` — `lower <= m_n <= upper` for all
///   `n`, and `limsup m_n <= limsup`.
/// * `Divergent` — `m_n -> inf`.
/// * `LevelSizePower { exponent }` — `m_n = level_size(n)^exponent` exactly
///   for every `n` (so `m_0 = 1`).
/// * `Unknown` — no claim; limit-dependent verdicts become `Inconclusive`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Tail<S> {
    Vanishing,
    Bounded { lower: S, upper: S, limsup: S },
    Divergent,
    LevelSizePower { exponent: S },
    Unknown,
}

impl<S: Scalar> Tail<S> {
    /// The exactly-zero tail used for stored prefixes.
    pub fn zero() -> Self {
        Tail::Bounded {
            lower: S::zero(),
            upper: S::zero(),
            limsup: S::zero(),
        }
    }

    /// `|values| <= b` everywhere with no decay claim.
    pub fn bounded(b: S) -> Self {
        Tail::Bounded {
            lower: S::zero(),
            upper: b,
            limsup: b,
        }
    }

    /// `|values| = 1` everywhere.
    pub fn unimodular() -> Self {
        Tail::Bounded {
            lower: S::one(),
            upper: S::one(),
            limsup: S::one(),
        }
    }
}

/// Values indexed by level: a stored prefix (zero beyond it) or a rule.
#[derive(Clone)]
pub enum LevelValues<S: Scalar> {
    Stored(Vec<Complex<S>>),
    Rule(Arc<dyn Fn(u64) -> Complex<S> + Send + Sync>),
}

impl<S: Scalar> LevelValues<S> {
    pub fn at(&self, n: u64) -> Complex<S> {
        match self {
            LevelValues::Stored(v) => {
                if n < v.len() as u64 {
                    v[n as usize]
                } else {
                    Complex::new(S::zero(), S::zero())
                }
            }
            LevelValues::Rule(f) => f(n),
        }
    }

    fn is_stored(&self) -> bool {
        matches!(self, LevelValues::Stored(_))
    }
}

/// A complex-valued function on the tree, in one of five representations.
///
/// Each variant has its own exact or enumerated mean evaluation; dense
/// enumeration is the representation of last resort and is refused above the
/// enumeration cap rather than truncated.
///
/// `evaluate` is defined everywhere: outside a finite support, beyond a
/// stored prefix and beyond a dense truncation the value is 0. For stored
/// `Radial`/`PathSupported` prefixes carrying a nonzero declared tail, the
/// tail refers to the underlying infinite function the document describes;
/// `evaluate` still returns 0 there, and only tail-aware verdicts (norms,
/// membership, operator analysis) use the declaration.
#[derive(Clone)]
pub enum FunctionRep<S: Scalar> {
    FiniteSupport {
        entries: BTreeMap<VertexId, Complex<S>>,
    },
    Radial {
        values: LevelValues<S>,
        tail: Tail<S>,
    },
    PathSupported {
        coefficients: LevelValues<S>,
        tail: Tail<S>,
    },
    PointwiseRule {
        rule: Arc<dyn Fn(VertexId) -> Complex<S> + Send + Sync>,
    },
    DenseTruncated {
        levels: Vec<Vec<Complex<S>>>,
    },
}

impl<S: Scalar> std::fmt::Debug for FunctionRep<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FunctionRep::FiniteSupport { entries } => f
                .debug_struct("FiniteSupport")
                .field("support", &entries.len())
                .finish(),
            FunctionRep::Radial { values, tail } => f
                .debug_struct("Radial")
                .field("stored", &values.is_stored())
                .field("tail", tail)
                .finish(),
            FunctionRep::PathSupported { coefficients, tail } => f
                .debug_struct("PathSupported")
                .field("stored", &coefficients.is_stored())
                .field("tail", tail)
                .finish(),
            FunctionRep::PointwiseRule { .. } => f.write_str("PointwiseRule"),
            FunctionRep::DenseTruncated { levels } => f
                .debug_struct("DenseTruncated")
                .field("levels", &levels.len())
                .finish(),
        }
    }
}

/// Result of a norm computation.
///
/// `exact == true` means `value` equals `sup_n M_p(n, f)` over all levels;
/// otherwise `value` is the maximum over the examined prefix, a certified
/// lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormReport<S> {
    pub value: S,
    pub depth_examined: u64,
    pub exact: bool,
    pub attained_level: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    InSpace,
    NotInSpace,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    /// `T_p`: bounded level means.
    Full,
    /// `T_{p,0}`: level means tending to zero.
    Little,
}

#[derive(Debug, Clone)]
pub struct MembershipVerdict<S> {
    pub verdict: Verdict,
    /// Observed mean sequence `M_p(n, f)` for the examined levels.
    pub evidence: Vec<S>,
    pub note: String,
}

#[derive(Debug, Clone, Copy)]
pub struct GrowthBound<S> {
    pub bound: S,
    pub value: S,
    pub ratio: S,
}

#[derive(Debug, Clone, Copy)]
pub struct HolderBounds<S> {
    pub norm_s: S,
    pub norm_r: S,
    pub upper: S,
}

/// Certified behavior of the mean sequence beyond the examined depth.
#[derive(Debug, Clone, Copy)]
pub(crate) enum MeanTail<S> {
    /// Means beyond the examined depth are `<= sup`; `limsup`/`liminf`
    /// bracket their limit behavior.
    BoundedBy { sup: S, limsup: S, liminf: S },
    /// Means beyond never exceed the observed prefix maximum and tend to 0.
    WithinObserved,
    /// Means tend to infinity.
    DivergentMeans,
    UnknownMeans,
}

fn czero<S: Scalar>() -> Complex<S> {
    Complex::new(S::zero(), S::zero())
}

impl<S: Scalar> FunctionRep<S> {
    pub fn zero() -> Self {
        FunctionRep::FiniteSupport {
            entries: BTreeMap::new(),
        }
    }

    pub fn finite_support(
        geo: &TreeGeometry,
        entries: impl IntoIterator<Item = (VertexId, Complex<S>)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (v, z) in entries {
            geo.validate(v)?;
            map.insert(v, z);
        }
        Ok(FunctionRep::FiniteSupport { entries: map })
    }

    pub fn point_mass(geo: &TreeGeometry, v: VertexId, z: Complex<S>) -> Result<Self> {
        Self::finite_support(geo, [(v, z)])
    }

    /// The characteristic function of a single vertex.
    pub fn indicator(geo: &TreeGeometry, v: VertexId) -> Result<Self> {
        Self::point_mass(geo, v, Complex::new(S::one(), S::zero()))
    }

    pub fn radial_stored(values: Vec<Complex<S>>) -> Self {
        FunctionRep::Radial {
            values: LevelValues::Stored(values),
            tail: Tail::zero(),
        }
    }

    pub fn radial_fn(
        rule: impl Fn(u64) -> Complex<S> + Send + Sync + 'static,
        tail: Tail<S>,
    ) -> Self {
        FunctionRep::Radial {
            values: LevelValues::Rule(Arc::new(rule)),
            tail,
        }
    }

    pub fn radial_const(z: Complex<S>) -> Self {
        let m = z.norm();
        FunctionRep::radial_fn(
            move |_| z,
            Tail::Bounded {
                lower: m,
                upper: m,
                limsup: m,
            },
        )
    }

    pub fn path_stored(coefficients: Vec<Complex<S>>) -> Self {
        FunctionRep::PathSupported {
            coefficients: LevelValues::Stored(coefficients),
            tail: Tail::zero(),
        }
    }

    pub fn path_fn(
        rule: impl Fn(u64) -> Complex<S> + Send + Sync + 'static,
        tail: Tail<S>,
    ) -> Self {
        FunctionRep::PathSupported {
            coefficients: LevelValues::Rule(Arc::new(rule)),
            tail,
        }
    }

    /// Opaque pointwise rule; means fall back to dense enumeration and every
    /// limit-dependent verdict is `Inconclusive`. The rule must be
    /// side-effect-free.
    pub fn pointwise(rule: impl Fn(VertexId) -> Complex<S> + Send + Sync + 'static) -> Self {
        FunctionRep::PointwiseRule {
            rule: Arc::new(rule),
        }
    }

    pub fn dense(geo: &TreeGeometry, levels: Vec<Vec<Complex<S>>>) -> Result<Self> {
        for (n, arr) in levels.iter().enumerate() {
            if num_bigint::BigUint::from(arr.len()) != geo.level_size(n as u64) {
                return Err(Error::InvalidDocument(format!(
                    "dense level {n} has {} entries, expected {}",
                    arr.len(),
                    geo.level_size(n as u64)
                )));
            }
        }
        Ok(FunctionRep::DenseTruncated { levels })
    }

    /// "closed-form" when means come from per-variant formulas,
    /// "enumerated" when they require walking level arrays or vertices.
    pub fn mean_method(&self) -> &'static str {
        match self {
            FunctionRep::PointwiseRule { .. } | FunctionRep::DenseTruncated { .. } => "enumerated",
            _ => "closed-form",
        }
    }

    pub fn evaluate(&self, v: VertexId) -> Complex<S> {
        match self {
            FunctionRep::FiniteSupport { entries } => {
                entries.get(&v).copied().unwrap_or_else(czero)
            }
            FunctionRep::Radial { values, .. } => values.at(v.level),
            FunctionRep::PathSupported { coefficients, .. } => {
                if v.index == 0 {
                    coefficients.at(v.level)
                } else {
                    czero()
                }
            }
            FunctionRep::PointwiseRule { rule } => rule(v),
            FunctionRep::DenseTruncated { levels } => levels
                .get(v.level as usize)
                .and_then(|arr| arr.get(v.index as usize))
                .copied()
                .unwrap_or_else(czero),
        }
    }

    /// Declared tail of a level-indexed representation, with stored prefixes
    /// reporting the exactly-zero tail of their evaluate semantics.
    pub(crate) fn level_tail(&self) -> Option<Tail<S>> {
        match self {
            FunctionRep::Radial { values, tail } => Some(if values.is_stored() {
                Tail::zero()
            } else {
                *tail
            }),
            FunctionRep::PathSupported { coefficients, tail } => Some(if coefficients.is_stored() {
                Tail::zero()
            } else {
                *tail
            }),
            _ => None,
        }
    }

    /// `(lower, upper, limsup)` certified bounds on this representation's
    /// level-value moduli, when it is level-indexed and the tail gives any.
    pub(crate) fn value_bounds(&self) -> Option<(S, S, S)> {
        let tail = self.level_tail()?;
        geo_free_bounds(self, tail, S::one())
    }

    /// Deepest level with stored (or supported) data; 0 for pure rules.
    pub(crate) fn stored_extent(&self) -> u64 {
        match self {
            FunctionRep::FiniteSupport { entries } => {
                entries.keys().map(|v| v.level).max().unwrap_or(0)
            }
            FunctionRep::Radial {
                values: LevelValues::Stored(v),
                ..
            }
            | FunctionRep::PathSupported {
                coefficients: LevelValues::Stored(v),
                ..
            } => (v.len() as u64).saturating_sub(1),
            FunctionRep::DenseTruncated { levels } => (levels.len() as u64).saturating_sub(1),
            _ => 0,
        }
    }

    /// The level mean `M_p(n, f)`.
    ///
    /// Closed forms are used where the representation admits them; pointwise
    /// rules are enumerated and refuse levels above `cap`.
    pub fn level_mean(&self, geo: &TreeGeometry, n: u64, p: Exponent<S>, cap: u64) -> Result<S> {
        if n == 0 {
            return Ok(self.evaluate(VertexId::ROOT).norm());
        }
        match self {
            FunctionRep::Radial { values, .. } => Ok(values.at(n).norm()),
            FunctionRep::PathSupported { coefficients, .. } => {
                let m = coefficients.at(n).norm();
                match p {
                    Exponent::Infinity => Ok(m),
                    Exponent::Finite(p) => {
                        if m == S::zero() {
                            Ok(S::zero())
                        } else {
                            Ok((m.ln() - geo.log_level_size::<S>(n) / p).exp())
                        }
                    }
                }
            }
            FunctionRep::FiniteSupport { entries } => {
                let moduli = entries
                    .iter()
                    .filter(|(v, _)| v.level == n)
                    .map(|(_, z)| z.norm());
                Ok(mean_of_moduli(moduli, geo, n, p))
            }
            FunctionRep::DenseTruncated { levels } => match levels.get(n as usize) {
                None => Ok(S::zero()),
                Some(arr) => Ok(mean_of_moduli(
                    arr.iter().map(|z| z.norm()),
                    geo,
                    n,
                    p,
                )),
            },
            FunctionRep::PointwiseRule { rule } => {
                let it = geo.enumerate_level(n, cap)?;
                Ok(mean_of_moduli(it.map(|v| rule(v).norm()), geo, n, p))
            }
        }
    }

    /// Certified mean behavior beyond `depth`; callers must have extended
    /// `depth` past the stored extent first.
    pub(crate) fn mean_tail(&self, geo: &TreeGeometry, p: Exponent<S>, depth: u64) -> MeanTail<S> {
        debug_assert!(depth >= self.stored_extent());
        match self {
            // Beyond the support everything is exactly zero.
            FunctionRep::FiniteSupport { .. } | FunctionRep::DenseTruncated { .. } => {
                MeanTail::BoundedBy {
                    sup: S::zero(),
                    limsup: S::zero(),
                    liminf: S::zero(),
                }
            }
            FunctionRep::Radial { tail, .. } => radial_mean_tail(geo, *tail, depth),
            FunctionRep::PathSupported { tail, .. } => match p {
                Exponent::Infinity => radial_mean_tail(geo, *tail, depth),
                Exponent::Finite(p) => path_mean_tail(geo, *tail, p, depth),
            },
            FunctionRep::PointwiseRule { .. } => MeanTail::UnknownMeans,
        }
    }

    /// `||f||_p` up to `depth`, with the tail declaration deciding whether
    /// the reported supremum is exact or a depth-limited lower bound.
    pub fn norm(
        &self,
        geo: &TreeGeometry,
        p: Exponent<S>,
        depth: u64,
        cap: u64,
    ) -> Result<NormReport<S>> {
        let eff = depth.max(self.stored_extent());
        let mut value = self.level_mean(geo, 0, p, cap)?;
        let mut attained = Some(0u64);
        for n in 1..=eff {
            let m = self.level_mean(geo, n, p, cap)?;
            if m > value {
                value = m;
                attained = Some(n);
            }
        }
        let (value, exact, attained) = match self.mean_tail(geo, p, eff) {
            MeanTail::WithinObserved => (value, true, attained),
            MeanTail::BoundedBy { sup, .. } => (value, sup <= value, attained),
            MeanTail::DivergentMeans => (S::infinity(), true, None),
            MeanTail::UnknownMeans => (value, false, attained),
        };
        Ok(NormReport {
            value,
            depth_examined: eff,
            exact,
            attained_level: attained,
        })
    }

    /// Membership in `T_p` or `T_{p,0}` with the observed mean sequence as
    /// evidence. Exact verdicts only where the tail declaration decides them.
    pub fn membership(
        &self,
        geo: &TreeGeometry,
        p: Exponent<S>,
        space: SpaceKind,
        depth: u64,
        cap: u64,
    ) -> Result<MembershipVerdict<S>> {
        let eff = depth.max(self.stored_extent());
        let mut evidence = Vec::with_capacity(eff as usize + 1);
        for n in 0..=eff {
            evidence.push(self.level_mean(geo, n, p, cap)?);
        }
        let (verdict, note) = match self.mean_tail(geo, p, eff) {
            MeanTail::WithinObserved => (
                Verdict::InSpace,
                "means vanish and never exceed the observed maximum".to_string(),
            ),
            MeanTail::BoundedBy {
                sup,
                limsup,
                liminf,
            } => match space {
                SpaceKind::Full => (
                    Verdict::InSpace,
                    format!("means beyond depth {eff} bounded by {sup}"),
                ),
                SpaceKind::Little => {
                    if limsup == S::zero() {
                        (Verdict::InSpace, "mean limsup is 0".to_string())
                    } else if liminf > S::zero() {
                        (
                            Verdict::NotInSpace,
                            format!("means stay at least {liminf} eventually"),
                        )
                    } else {
                        (
                            Verdict::Inconclusive,
                            "tail bounds do not decide the mean limit".to_string(),
                        )
                    }
                }
            },
            MeanTail::DivergentMeans => (Verdict::NotInSpace, "means diverge".to_string()),
            MeanTail::UnknownMeans => (
                Verdict::Inconclusive,
                "no tail declaration; only the observed prefix is known".to_string(),
            ),
        };
        Ok(MembershipVerdict {
            verdict,
            evidence,
            note,
        })
    }

    /// The truncation `f_n`: equal to `f` on levels `<= n`, zero beyond.
    /// Rule-based level representations are materialized into stored
    /// prefixes; pointwise rules are wrapped lazily.
    pub fn truncate(&self, n: u64) -> FunctionRep<S> {
        match self {
            FunctionRep::FiniteSupport { entries } => FunctionRep::FiniteSupport {
                entries: entries
                    .iter()
                    .filter(|(v, _)| v.level <= n)
                    .map(|(v, z)| (*v, *z))
                    .collect(),
            },
            FunctionRep::Radial { values, .. } => {
                FunctionRep::radial_stored((0..=n).map(|k| values.at(k)).collect())
            }
            FunctionRep::PathSupported { coefficients, .. } => {
                FunctionRep::path_stored((0..=n).map(|k| coefficients.at(k)).collect())
            }
            FunctionRep::DenseTruncated { levels } => FunctionRep::DenseTruncated {
                levels: levels
                    .iter()
                    .take(n as usize + 1)
                    .cloned()
                    .collect(),
            },
            FunctionRep::PointwiseRule { rule } => {
                let rule = rule.clone();
                FunctionRep::pointwise(move |v| if v.level <= n { rule(v) } else { czero() })
            }
        }
    }

    /// `a*f + b*g`, staying in a structured representation when the pair is
    /// closed under it and falling back to a pointwise rule otherwise.
    /// Operates on evaluate semantics; tail declarations are combined
    /// conservatively.
    pub fn combine(a: Complex<S>, f: &Self, b: Complex<S>, g: &Self) -> FunctionRep<S> {
        match (f, g) {
            (FunctionRep::FiniteSupport { entries: e1 }, FunctionRep::FiniteSupport { entries: e2 }) => {
                let mut out: BTreeMap<VertexId, Complex<S>> = BTreeMap::new();
                for (v, z) in e1 {
                    out.insert(*v, a * *z);
                }
                for (v, z) in e2 {
                    let cur = out.entry(*v).or_insert_with(czero);
                    *cur = *cur + b * *z;
                }
                FunctionRep::FiniteSupport { entries: out }
            }
            (
                FunctionRep::Radial { values: v1, .. },
                FunctionRep::Radial { values: v2, .. },
            ) => {
                let tail = combined_rule_tail(a, f, v1, b, g, v2);
                match (v1, v2) {
                    (LevelValues::Stored(x), LevelValues::Stored(y)) => {
                        let len = x.len().max(y.len());
                        let vals = (0..len)
                            .map(|i| {
                                a * x.get(i).copied().unwrap_or_else(czero)
                                    + b * y.get(i).copied().unwrap_or_else(czero)
                            })
                            .collect();
                        FunctionRep::Radial {
                            values: LevelValues::Stored(vals),
                            tail: Tail::zero(),
                        }
                    }
                    _ => {
                        let v1 = v1.clone();
                        let v2 = v2.clone();
                        FunctionRep::Radial {
                            values: LevelValues::Rule(Arc::new(move |n| {
                                a * v1.at(n) + b * v2.at(n)
                            })),
                            tail,
                        }
                    }
                }
            }
            (
                FunctionRep::PathSupported { coefficients: v1, .. },
                FunctionRep::PathSupported { coefficients: v2, .. },
            ) => {
                let tail = combined_rule_tail(a, f, v1, b, g, v2);
                match (v1, v2) {
                    (LevelValues::Stored(x), LevelValues::Stored(y)) => {
                        let len = x.len().max(y.len());
                        let vals = (0..len)
                            .map(|i| {
                                a * x.get(i).copied().unwrap_or_else(czero)
                                    + b * y.get(i).copied().unwrap_or_else(czero)
                            })
                            .collect();
                        FunctionRep::path_stored(vals)
                    }
                    _ => {
                        let v1 = v1.clone();
                        let v2 = v2.clone();
                        FunctionRep::PathSupported {
                            coefficients: LevelValues::Rule(Arc::new(move |n| {
                                a * v1.at(n) + b * v2.at(n)
                            })),
                            tail,
                        }
                    }
                }
            }
            (FunctionRep::DenseTruncated { levels: l1 }, FunctionRep::DenseTruncated { levels: l2 })
                if levels_compatible(l1, l2) =>
            {
                let count = l1.len().max(l2.len());
                let mut levels = Vec::with_capacity(count);
                for i in 0..count {
                    match (l1.get(i), l2.get(i)) {
                        (Some(x), Some(y)) => levels.push(
                            x.iter().zip(y).map(|(u, w)| a * *u + b * *w).collect(),
                        ),
                        (Some(x), None) => levels.push(x.iter().map(|u| a * *u).collect()),
                        (None, Some(y)) => levels.push(y.iter().map(|w| b * *w).collect()),
                        (None, None) => unreachable!(),
                    }
                }
                FunctionRep::DenseTruncated { levels }
            }
            _ => {
                let f = f.clone();
                let g = g.clone();
                FunctionRep::pointwise(move |v| a * f.evaluate(v) + b * g.evaluate(v))
            }
        }
    }

    /// `sup |f(v) - f(v^-)|` over `1 <= |v| <= depth`.
    pub fn lipschitz_seminorm(&self, geo: &TreeGeometry, depth: u64, cap: u64) -> Result<S> {
        self.lipschitz_impl(geo, depth, cap, false)
    }

    /// `sup |v| * |f(v) - f(v^-)|` over `1 <= |v| <= depth`.
    pub fn weighted_lipschitz_seminorm(
        &self,
        geo: &TreeGeometry,
        depth: u64,
        cap: u64,
    ) -> Result<S> {
        self.lipschitz_impl(geo, depth, cap, true)
    }

    fn lipschitz_impl(
        &self,
        geo: &TreeGeometry,
        depth: u64,
        cap: u64,
        weighted: bool,
    ) -> Result<S> {
        let w = |n: u64| {
            if weighted {
                S::from_u64(n).unwrap()
            } else {
                S::one()
            }
        };
        let mut sup = S::zero();
        let mut push = |x: S| {
            if x > sup {
                sup = x;
            }
        };
        match self {
            FunctionRep::Radial { values, .. } => {
                for n in 1..=depth {
                    push((values.at(n) - values.at(n - 1)).norm() * w(n));
                }
            }
            FunctionRep::PathSupported { coefficients, .. } => {
                for n in 1..=depth {
                    // on-path difference
                    push((coefficients.at(n) - coefficients.at(n - 1)).norm() * w(n));
                    // off-path children of the path vertex at level n-1: they
                    // exist at n=1 always (the root has q+1 children) and for
                    // n >= 2 exactly when q >= 2.
                    if n == 1 || geo.q() >= 2 {
                        push(coefficients.at(n - 1).norm() * w(n));
                    }
                }
            }
            FunctionRep::FiniteSupport { entries } => {
                for (v, z) in entries {
                    if v.level >= 1 && v.level <= depth {
                        let pz = self.evaluate(geo.parent(*v)?);
                        push((*z - pz).norm() * w(v.level));
                    }
                    if v.level + 1 <= depth {
                        for c in geo.children(*v) {
                            push((self.evaluate(c) - *z).norm() * w(c.level));
                        }
                    }
                }
            }
            FunctionRep::DenseTruncated { levels } => {
                let len = levels.len() as u64;
                for n in 1..=depth.min(len.saturating_sub(1)) {
                    for (i, z) in levels[n as usize].iter().enumerate() {
                        let parent = geo.parent(VertexId::new(n, i as u64))?;
                        push((*z - self.evaluate(parent)).norm() * w(n));
                    }
                }
                // boundary: children of the last stored level are zero
                if len >= 1 && len <= depth {
                    for z in &levels[len as usize - 1] {
                        push(z.norm() * w(len));
                    }
                }
            }
            FunctionRep::PointwiseRule { .. } => {
                for n in 1..=depth {
                    for v in geo.enumerate_level(n, cap)? {
                        let d = (self.evaluate(v) - self.evaluate(geo.parent(v)?)).norm();
                        push(d * w(n));
                    }
                }
            }
        }
        Ok(sup)
    }
}

fn levels_compatible<S: Scalar>(l1: &[Vec<Complex<S>>], l2: &[Vec<Complex<S>>]) -> bool {
    l1.iter().zip(l2).all(|(x, y)| x.len() == y.len())
}

/// Bounds on the scaled modulus sequence beyond the stored extent: exactly 0
/// for stored prefixes, the declared tail otherwise.
fn eventual_bounds<S: Scalar>(rep: &FunctionRep<S>, scale: S) -> Option<(S, S, S)> {
    let values = match rep {
        FunctionRep::Radial { values, .. } => values,
        FunctionRep::PathSupported { coefficients, .. } => coefficients,
        _ => return None,
    };
    if values.is_stored() {
        return Some((S::zero(), S::zero(), S::zero()));
    }
    rep.value_bounds().map(|(l, u, s)| (l * scale, u * scale, s * scale))
}

/// Tail of `a*f + b*g` materialized as a level rule: eventual bounds from the
/// constituent tails, widened over the stored prefixes so the bound is valid
/// at every level.
fn combined_rule_tail<S: Scalar>(
    a: Complex<S>,
    f: &FunctionRep<S>,
    v1: &LevelValues<S>,
    b: Complex<S>,
    g: &FunctionRep<S>,
    v2: &LevelValues<S>,
) -> Tail<S> {
    let tail = tail_add(eventual_bounds(f, a.norm()), eventual_bounds(g, b.norm()));
    match tail {
        Tail::Bounded {
            mut lower,
            mut upper,
            limsup,
        } => {
            let extent = f.stored_extent().max(g.stored_extent());
            for n in 0..=extent {
                let m = (a * v1.at(n) + b * v2.at(n)).norm();
                if m > upper {
                    upper = m;
                }
                if m < lower {
                    lower = m;
                }
            }
            Tail::Bounded {
                lower,
                upper,
                limsup,
            }
        }
        other => other,
    }
}

/// `(lower, upper, limsup)` bounds on the scaled modulus sequence of a
/// radial/path value list, or `None` when nothing global is certified.
fn geo_free_bounds<S: Scalar>(rep: &FunctionRep<S>, tail: Tail<S>, scale: S) -> Option<(S, S, S)> {
    let values = match rep {
        FunctionRep::Radial { values, .. } => values,
        FunctionRep::PathSupported { coefficients, .. } => coefficients,
        _ => return None,
    };
    let bounds = match (values, tail) {
        // stored prefixes: evaluate semantics are used, so the tail is zero,
        // and the prefix itself is bounded by its own maximum
        (LevelValues::Stored(v), _) => {
            let m = v
                .iter()
                .map(|z| z.norm())
                .fold(S::zero(), |a, b| if b > a { b } else { a });
            Some((S::zero(), m, S::zero()))
        }
        (_, Tail::Vanishing) => Some((S::zero(), values.at(0).norm(), S::zero())),
        (_, Tail::Bounded { lower, upper, limsup }) => Some((lower, upper, limsup)),
        (_, Tail::LevelSizePower { exponent }) => {
            // values are exactly level_size(n)^e with level_size(0) = 1
            if exponent <= S::zero() {
                Some((S::zero(), S::one(), S::zero()))
            } else {
                None
            }
        }
        (_, Tail::Divergent) | (_, Tail::Unknown) => None,
    };
    bounds.map(|(l, u, ls)| (l * scale, u * scale, ls * scale))
}

fn tail_add<S: Scalar>(a: Option<(S, S, S)>, b: Option<(S, S, S)>) -> Tail<S> {
    match (a, b) {
        (Some((l1, u1, s1)), Some((l2, u2, s2))) => {
            let lower = (l1 - u2).max(l2 - u1).max(S::zero());
            Tail::Bounded {
                lower,
                upper: u1 + u2,
                limsup: s1 + s2,
            }
        }
        _ => Tail::Unknown,
    }
}

fn mean_of_moduli<S: Scalar>(
    moduli: impl Iterator<Item = S>,
    geo: &TreeGeometry,
    n: u64,
    p: Exponent<S>,
) -> S {
    match p {
        Exponent::Infinity => moduli.fold(S::zero(), |a, b| if b > a { b } else { a }),
        Exponent::Finite(p) => {
            let mut acc = LogSumExp::new();
            for m in moduli {
                if m > S::zero() {
                    acc.push(p * m.ln());
                }
            }
            let total = acc.value();
            if total == S::neg_infinity() {
                S::zero()
            } else {
                ((total - geo.log_level_size::<S>(n)) / p).exp()
            }
        }
    }
}

fn radial_mean_tail<S: Scalar>(geo: &TreeGeometry, tail: Tail<S>, depth: u64) -> MeanTail<S> {
    match tail {
        Tail::Vanishing => MeanTail::WithinObserved,
        Tail::Bounded {
            lower,
            upper,
            limsup,
        } => MeanTail::BoundedBy {
            sup: upper,
            limsup,
            liminf: lower,
        },
        Tail::Divergent => MeanTail::DivergentMeans,
        Tail::LevelSizePower { exponent } => power_mean_tail(geo, exponent, depth),
        Tail::Unknown => MeanTail::UnknownMeans,
    }
}

fn path_mean_tail<S: Scalar>(geo: &TreeGeometry, tail: Tail<S>, p: S, depth: u64) -> MeanTail<S> {
    match tail {
        Tail::Vanishing => MeanTail::WithinObserved,
        Tail::Bounded {
            lower,
            upper,
            limsup,
        } => {
            if geo.q() >= 2 {
                // level sizes grow geometrically, so the path means vanish
                let sup = upper * (-geo.log_level_size::<S>(depth + 1) / p).exp();
                MeanTail::BoundedBy {
                    sup,
                    limsup: S::zero(),
                    liminf: S::zero(),
                }
            } else {
                // q = 1: level sizes are constant (= 2) from level 1 on
                let c = (-geo.log_level_size::<S>(1) / p).exp();
                MeanTail::BoundedBy {
                    sup: upper * c,
                    limsup: limsup * c,
                    liminf: lower * c,
                }
            }
        }
        Tail::Divergent => {
            if geo.q() >= 2 {
                MeanTail::UnknownMeans
            } else {
                MeanTail::DivergentMeans
            }
        }
        Tail::LevelSizePower { exponent } => {
            power_mean_tail(geo, exponent - p.recip(), depth)
        }
        Tail::Unknown => MeanTail::UnknownMeans,
    }
}

/// Mean tail when the means are exactly `level_size(n)^e` beyond `depth`.
fn power_mean_tail<S: Scalar>(geo: &TreeGeometry, e: S, depth: u64) -> MeanTail<S> {
    if geo.q() == 1 {
        let c = (e * geo.log_level_size::<S>(1)).exp();
        return MeanTail::BoundedBy {
            sup: c,
            limsup: c,
            liminf: c,
        };
    }
    if e > S::zero() {
        MeanTail::DivergentMeans
    } else if e == S::zero() {
        MeanTail::BoundedBy {
            sup: S::one(),
            limsup: S::one(),
            liminf: S::one(),
        }
    } else {
        MeanTail::BoundedBy {
            sup: (e * geo.log_level_size::<S>(depth + 1)).exp(),
            limsup: S::zero(),
            liminf: S::zero(),
        }
    }
}

/// Growth bound for point evaluation: `|f(v)| <= level_size(|v|)^(1/p) ||f||_p`.
///
/// `ratio = value / bound` is at most 1 (up to rounding) whenever the norm
/// report is exact; the bound doubles as the point-evaluation functional
/// bound `||e_v|| <= level_size(|v|)^(1/p)`.
pub fn growth_bound<S: Scalar>(
    geo: &TreeGeometry,
    p: Exponent<S>,
    f: &FunctionRep<S>,
    v: VertexId,
    depth: u64,
    cap: u64,
) -> Result<GrowthBound<S>> {
    let p = match p {
        Exponent::Finite(p) => p,
        Exponent::Infinity => {
            return Err(Error::InvalidExponent(
                "growth bound requires a finite exponent".to_string(),
            ))
        }
    };
    let report = f.norm(geo, Exponent::Finite(p), depth, cap)?;
    let bound = if report.value == S::zero() {
        S::zero()
    } else {
        (geo.log_level_size::<S>(v.level) / p + report.value.ln()).exp()
    };
    let value = f.evaluate(v).norm();
    let ratio = if bound > S::zero() {
        value / bound
    } else if value == S::zero() {
        S::zero()
    } else {
        S::infinity()
    };
    Ok(GrowthBound {
        bound,
        value,
        ratio,
    })
}

/// `sup_{|v| <= n_max} |f(v) - g(v)|`: the distance governing uniform
/// convergence on compact subsets (finite subsets) of the tree.
pub fn compact_sup_diff<S: Scalar>(
    f: &FunctionRep<S>,
    g: &FunctionRep<S>,
    geo: &TreeGeometry,
    n_max: u64,
    cap: u64,
) -> Result<S> {
    let mut sup = S::zero();
    for n in 0..=n_max {
        for v in geo.enumerate_level(n, cap)? {
            let d = (f.evaluate(v) - g.evaluate(v)).norm();
            if d > sup {
                sup = d;
            }
        }
    }
    Ok(sup)
}

/// The finite-dimensional norm comparison `||x||_s <= ||x||_r <=
/// N^(1/r - 1/s) ||x||_s` for `0 < r < s < inf`.
pub fn holder_vector_bounds<S: Scalar>(x: &[Complex<S>], r: S, s: S) -> Result<HolderBounds<S>> {
    if !(r > S::zero() && r < s && s.is_finite()) {
        return Err(Error::InvalidExponents);
    }
    if x.is_empty() {
        return Err(Error::InvalidDocument("empty vector".to_string()));
    }
    let norm_r = vector_p_norm(x, r);
    let norm_s = vector_p_norm(x, s);
    let n = S::from_usize(x.len()).unwrap();
    let upper = ((r.recip() - s.recip()) * n.ln()).exp() * norm_s;
    Ok(HolderBounds {
        norm_s,
        norm_r,
        upper,
    })
}

fn vector_p_norm<S: Scalar>(x: &[Complex<S>], p: S) -> S {
    let max = x
        .iter()
        .map(|z| z.norm())
        .fold(S::zero(), |a, b| if b > a { b } else { a });
    if max == S::zero() {
        return S::zero();
    }
    let mut sum = Kahan::new();
    for z in x {
        sum.push((z.norm() / max).powf(p));
    }
    max * sum.value().powf(p.recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::DEFAULT_CAP;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    fn geo3() -> TreeGeometry {
        TreeGeometry::new(3).unwrap()
    }

    #[test]
    fn evaluate_variants() {
        let geo = geo3();
        let f = FunctionRep::point_mass(&geo, VertexId::new(2, 7), c(3.0, 4.0)).unwrap();
        assert_eq!(f.evaluate(VertexId::new(2, 7)), c(3.0, 4.0));
        assert_eq!(f.evaluate(VertexId::new(2, 6)), c(0.0, 0.0));

        let r = FunctionRep::radial_fn(|n| c(1.0 / (n as f64 + 1.0), 0.0), Tail::Vanishing);
        assert_eq!(r.evaluate(VertexId::new(3, 5)), c(0.25, 0.0));

        let d = FunctionRep::dense(
            &geo,
            vec![vec![c(1.0, 0.0)], vec![c(2.0, 0.0); 4], vec![c(3.0, 0.0); 12]],
        )
        .unwrap();
        assert_eq!(d.evaluate(VertexId::new(5, 0)), c(0.0, 0.0));
        assert_eq!(d.evaluate(VertexId::new(2, 11)), c(3.0, 0.0));
    }

    #[test]
    fn level_mean_examples() {
        let geo = geo3();
        let p2 = Exponent::finite(2.0).unwrap();

        // constant radial function: mean 1 at every level and exponent
        let one = FunctionRep::radial_const(c(1.0, 0.0));
        for n in 0..6 {
            for p in [Exponent::finite(0.5).unwrap(), p2, Exponent::Infinity] {
                let m = one.level_mean(&geo, n, p, DEFAULT_CAP).unwrap();
                assert!((m - 1.0).abs() < 1e-14);
            }
        }

        // single indicator at level 2 of the q=3 tree: mean 12^(-1/2)
        let chi = FunctionRep::indicator(&geo, VertexId::new(2, 5)).unwrap();
        let m = chi.level_mean(&geo, 2, p2, DEFAULT_CAP).unwrap();
        assert!((m - 12f64.powf(-0.5)).abs() < 1e-14);

        // scaled point mass at level m has unit mean there
        for p in [0.5, 1.0, 2.0, 4.0] {
            let lvl = 4u64;
            let amp = (geo.log_level_size::<f64>(lvl) / p).exp();
            let f = FunctionRep::point_mass(&geo, VertexId::new(lvl, 1), c(amp, 0.0)).unwrap();
            let m = f
                .level_mean(&geo, lvl, Exponent::finite(p).unwrap(), DEFAULT_CAP)
                .unwrap();
            assert!((m - 1.0).abs() < 1e-12, "p={p} m={m}");
        }
    }

    #[test]
    fn norm_point_mass_sharp() {
        let geo = geo3();
        let p = 2.0;
        let lvl = 3u64;
        let amp = (geo.log_level_size::<f64>(lvl) / p).exp();
        let f = FunctionRep::point_mass(&geo, VertexId::new(lvl, 2), c(amp, 0.0)).unwrap();
        let report = f
            .norm(&geo, Exponent::finite(p).unwrap(), 1, DEFAULT_CAP)
            .unwrap();
        assert!(report.exact);
        assert!((report.value - 1.0).abs() < 1e-12);
        assert_eq!(report.attained_level, Some(lvl));
    }

    #[test]
    fn norm_homogeneity() {
        let geo = geo3();
        let f = FunctionRep::finite_support(
            &geo,
            [
                (VertexId::new(1, 0), c(1.0, 2.0)),
                (VertexId::new(2, 3), c(-0.5, 0.25)),
                (VertexId::new(3, 10), c(0.0, 3.0)),
            ],
        )
        .unwrap();
        let alpha = c(2.0, -1.0);
        let scaled = FunctionRep::combine(alpha, &f, c(0.0, 0.0), &FunctionRep::zero());
        for p in [Exponent::finite(0.5).unwrap(), Exponent::finite(1.0).unwrap(), Exponent::Infinity] {
            let n1 = f.norm(&geo, p, 4, DEFAULT_CAP).unwrap().value;
            let n2 = scaled.norm(&geo, p, 4, DEFAULT_CAP).unwrap().value;
            assert!((n2 - alpha.norm() * n1).abs() <= 1e-12 * n2.max(1.0));
        }
    }

    #[test]
    fn radial_vanishing_norm_exact() {
        let geo = TreeGeometry::new(2).unwrap();
        let f = FunctionRep::radial_fn(|n| c(1.0 / (n as f64 + 1.0), 0.0), Tail::Vanishing);
        let report = f
            .norm(&geo, Exponent::finite(0.5).unwrap(), 10, DEFAULT_CAP)
            .unwrap();
        assert!(report.exact);
        assert_eq!(report.value, 1.0);
        assert_eq!(report.attained_level, Some(0));
    }

    #[test]
    fn divergent_radial_norm_is_infinite() {
        let geo = geo3();
        let f = FunctionRep::radial_fn(|n| c(n as f64, 0.0), Tail::Divergent);
        let report = f.norm(&geo, Exponent::finite(1.0).unwrap(), 5, DEFAULT_CAP).unwrap();
        assert!(report.exact);
        assert!(report.value.is_infinite());
    }

    #[test]
    fn truncate_and_norm_gap() {
        let geo = geo3();
        let one = FunctionRep::radial_const(c(1.0, 0.0));
        let t = one.truncate(3);
        assert_eq!(t.evaluate(VertexId::new(5, 0)), c(0.0, 0.0));
        assert_eq!(t.evaluate(VertexId::new(3, 4)), c(1.0, 0.0));
        // || f - f_n ||_p = 1 for every n
        for n in [0u64, 3, 7] {
            let diff = FunctionRep::combine(c(1.0, 0.0), &one, c(-1.0, 0.0), &one.truncate(n));
            let report = diff
                .norm(&geo, Exponent::finite(2.0).unwrap(), n + 1, DEFAULT_CAP)
                .unwrap();
            assert!(report.exact, "n={n}");
            assert_eq!(report.value, 1.0);
        }
    }

    #[test]
    fn combine_indicators() {
        let geo = geo3();
        let u = FunctionRep::indicator(&geo, VertexId::new(1, 0)).unwrap();
        let w = FunctionRep::indicator(&geo, VertexId::new(2, 2)).unwrap();
        let s = FunctionRep::combine(c(1.0, 0.0), &u, c(1.0, 0.0), &w);
        match &s {
            FunctionRep::FiniteSupport { entries } => assert_eq!(entries.len(), 2),
            other => panic!("expected finite support, got {other:?}"),
        }
        // cancellation of equal radial rules gives the zero function
        let r = FunctionRep::radial_fn(|n| c((n as f64).sin(), 0.3), Tail::Unknown);
        let z = FunctionRep::combine(c(1.0, 0.0), &r, c(-1.0, 0.0), &r);
        for n in 0..6 {
            assert_eq!(z.evaluate(VertexId::new(n, 0)).norm(), 0.0);
        }
    }

    #[test]
    fn membership_examples() {
        let geo = geo3();
        let p = Exponent::finite(2.0).unwrap();
        let zero = FunctionRep::zero();
        for space in [SpaceKind::Full, SpaceKind::Little] {
            let v = zero.membership(&geo, p, space, 5, DEFAULT_CAP).unwrap();
            assert_eq!(v.verdict, Verdict::InSpace);
        }
        // f(v) = |v| diverges in mean for every finite p
        let f = FunctionRep::radial_fn(|n| c(n as f64, 0.0), Tail::Divergent);
        let v = f.membership(&geo, p, SpaceKind::Full, 5, DEFAULT_CAP).unwrap();
        assert_eq!(v.verdict, Verdict::NotInSpace);
        assert_eq!(v.evidence[4], 4.0);
        // opaque rules stay inconclusive
        let g = FunctionRep::pointwise(|v| c(v.level as f64, 0.0));
        let v = g.membership(&geo, p, SpaceKind::Little, 3, DEFAULT_CAP).unwrap();
        assert_eq!(v.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn lipschitz_examples() {
        let geo = geo3();
        // f(v) = |v|: increments 1 at every level
        let f = FunctionRep::radial_fn(|n| c(n as f64, 0.0), Tail::Divergent);
        let l = f.lipschitz_seminorm(&geo, 12, DEFAULT_CAP).unwrap();
        assert_eq!(l, 1.0);
        // constant function
        let one = FunctionRep::radial_const(c(1.0, 0.0));
        assert_eq!(one.lipschitz_seminorm(&geo, 8, DEFAULT_CAP).unwrap(), 0.0);
        assert_eq!(
            one.weighted_lipschitz_seminorm(&geo, 8, DEFAULT_CAP).unwrap(),
            0.0
        );
        // harmonic radial: |v| * increment = 1 at every level
        let h = FunctionRep::radial_fn(
            |n| {
                let mut acc = 0.0;
                for k in 1..=n {
                    acc += 1.0 / k as f64;
                }
                c(acc, 0.0)
            },
            Tail::Divergent,
        );
        let lw = h.weighted_lipschitz_seminorm(&geo, 15, DEFAULT_CAP).unwrap();
        assert!((lw - 1.0).abs() < 1e-12);
        // characteristic function of the leftmost path: weighted differences
        // grow with the branching-off depth
        let chi = FunctionRep::path_fn(|_| c(1.0, 0.0), Tail::unimodular());
        let lw = chi.weighted_lipschitz_seminorm(&geo, 9, DEFAULT_CAP).unwrap();
        assert_eq!(lw, 9.0);
    }

    #[test]
    fn growth_bound_examples() {
        let geo = geo3();
        let p = 2.0;
        let lvl = 4u64;
        let amp = (geo.log_level_size::<f64>(lvl) / p).exp();
        let v = VertexId::new(lvl, 3);
        let f = FunctionRep::point_mass(&geo, v, c(amp, 0.0)).unwrap();
        let gb = growth_bound(&geo, Exponent::finite(p).unwrap(), &f, v, 1, DEFAULT_CAP).unwrap();
        assert!((gb.ratio - 1.0).abs() < 1e-12);
        // at the root the bound reduces to the norm itself
        let gb = growth_bound(&geo, Exponent::finite(p).unwrap(), &f, VertexId::ROOT, 1, DEFAULT_CAP)
            .unwrap();
        assert!((gb.bound - 1.0).abs() < 1e-12);
        assert_eq!(gb.value, 0.0);
    }

    #[test]
    fn compact_sup_diff_vs_norm_gap() {
        let geo = TreeGeometry::new(2).unwrap();
        let one = FunctionRep::radial_const(c(1.0, 0.0));
        let f5 = one.truncate(5);
        assert_eq!(compact_sup_diff(&one, &f5, &geo, 3, DEFAULT_CAP).unwrap(), 0.0);
        let gap = FunctionRep::combine(c(1.0, 0.0), &one, c(-1.0, 0.0), &f5)
            .norm(&geo, Exponent::finite(1.0).unwrap(), 6, DEFAULT_CAP)
            .unwrap();
        assert_eq!(gap.value, 1.0);
        assert_eq!(compact_sup_diff(&one, &one, &geo, 4, DEFAULT_CAP).unwrap(), 0.0);
    }

    #[test]
    fn holder_bounds_cases() {
        // all-ones saturates the upper bound
        let x: Vec<Complex<f64>> = vec![c(1.0, 0.0); 8];
        let hb = holder_vector_bounds(&x, 1.0, 2.0).unwrap();
        assert!((hb.norm_r - 8.0).abs() < 1e-12);
        assert!((hb.norm_r - hb.upper).abs() < 1e-12 * hb.upper);
        // single spike makes both norms equal
        let x = vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        let hb = holder_vector_bounds(&x, 0.5, 3.0).unwrap();
        assert!((hb.norm_r - 1.0).abs() < 1e-14);
        assert!((hb.norm_s - 1.0).abs() < 1e-14);
        assert!(matches!(
            holder_vector_bounds(&x, 2.0, 1.0),
            Err(Error::InvalidExponents)
        ));
    }

    #[test]
    fn single_precision_scalars_work() {
        let geo = TreeGeometry::new(2).unwrap();
        let f: FunctionRep<f32> =
            FunctionRep::radial_fn(|n| Complex::new(1.0 / (n as f32 + 1.0), 0.0), Tail::Vanishing);
        let report = f
            .norm(&geo, Exponent::finite(2.0f32).unwrap(), 6, DEFAULT_CAP)
            .unwrap();
        assert!(report.exact);
        assert_eq!(report.value, 1.0f32);
    }

    #[test]
    fn level_too_large_propagates() {
        let geo = geo3();
        let f = FunctionRep::pointwise(|_| c(1.0, 0.0));
        assert!(matches!(
            f.level_mean(&geo, 50, Exponent::finite(1.0).unwrap(), DEFAULT_CAP),
            Err(Error::LevelTooLarge { .. })
        ));
    }
}
