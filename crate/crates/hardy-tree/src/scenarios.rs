//! Named worked examples: each scenario builds the witnessing functions,
//! runs the relevant computations, and reports one pass/fail assertion per
//! claim. Also home of the brute-force enumeration oracle used to cross-check
//! the closed-form mean evaluation.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::numeric::Kahan;
use crate::ops::{self, SpectrumClassification, Symbol, Verdict3};
use crate::space::{self, Exponent, FunctionRep, SpaceKind, Tail, Verdict};
use crate::tree::{TreeGeometry, VertexId};
use crate::{Error, Result, Scalar};

/// How an assertion is backed.
///
/// `Theorem`: a proved statement about the spaces or operators; a failure
/// here is a bug. `Derived`: a concrete value worked out independently of the
/// code under test. `Sanity`: configuration notes and internal consistency.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssertionClass {
    Theorem,
    Derived,
    Sanity,
}

impl std::fmt::Display for AssertionClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            AssertionClass::Theorem => "theorem",
            AssertionClass::Derived => "derived",
            AssertionClass::Sanity => "sanity",
        })
    }
}

#[derive(Debug, Clone)]
pub struct AssertionResult {
    pub name: String,
    pub class: AssertionClass,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ScenarioReport {
    pub name: String,
    pub q: u64,
    pub assertions: Vec<AssertionResult>,
}

impl ScenarioReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    /// Failures that falsify a proved statement, as opposed to derived values
    /// or sanity notes.
    pub fn theorem_failures(&self) -> usize {
        self.assertions
            .iter()
            .filter(|a| a.class == AssertionClass::Theorem && !a.passed)
            .count()
    }
}

pub const SCENARIOS: &[&str] = &[
    "sharp-growth",
    "proper-inclusion",
    "lipschitz-family",
    "truncation-vs-norm",
    "uniform-limit-escape",
    "separated-family",
    "point-mass-operator",
];

/// The normalized point mass at `(level, 0)`: norm exactly 1, with
/// `|f(v)| = level_size(level)^(1/p) ||f||_p`, saturating the growth bound.
pub fn sharp_growth_function<S: Scalar>(
    geo: &TreeGeometry,
    p: S,
    level: u64,
) -> Result<(FunctionRep<S>, VertexId)> {
    let v = VertexId::new(level, 0);
    let amp = (geo.log_level_size::<S>(level) / p).exp();
    Ok((
        FunctionRep::point_mass(geo, v, Complex::new(amp, S::zero()))?,
        v,
    ))
}

/// The path-supported function with `f(v_n) = level_size(n)^(1/r)`: unit norm
/// in `T_r`, divergent means for every exponent `s > r` (when `q >= 2`), so
/// the inclusion `T_s` in `T_r` is proper.
pub fn proper_inclusion_witness<S: Scalar>(geo: &TreeGeometry, r: S) -> FunctionRep<S> {
    let geo = *geo;
    let e = r.recip();
    FunctionRep::path_fn(
        move |n| Complex::new((e * geo.log_level_size::<S>(n)).exp(), S::zero()),
        Tail::LevelSizePower { exponent: e },
    )
}

/// The Lipschitz family: level function `|v|`, path mass, radial harmonic
/// partial sums, and a vertex indicator.
pub fn lipschitz_family<S: Scalar>(geo: &TreeGeometry) -> Result<Vec<(String, FunctionRep<S>)>> {
    let level_fn = FunctionRep::radial_fn(
        |n| Complex::new(S::from_u64(n).unwrap(), S::zero()),
        Tail::Divergent,
    );
    let path_mass = FunctionRep::path_fn(
        |_| Complex::new(S::one(), S::zero()),
        Tail::unimodular(),
    );
    let harmonic = FunctionRep::radial_fn(
        |n| {
            let mut acc = Kahan::new();
            for k in 1..=n {
                acc.push(S::from_u64(k).unwrap().recip());
            }
            Complex::new(acc.value(), S::zero())
        },
        Tail::Divergent,
    );
    let indicator = FunctionRep::indicator(geo, VertexId::new(1, 0))?;
    Ok(vec![
        ("level".to_string(), level_fn),
        ("path-mass".to_string(), path_mass),
        ("harmonic".to_string(), harmonic),
        ("indicator".to_string(), indicator),
    ])
}

/// A pairwise 1-separated family of `{0, 1}`-valued radial functions: any two
/// distinct members differ at some level, so their distance in every
/// `T_p`-norm is exactly 1. Samples `count` distinct members with `len`
/// levels each, deterministically from `seed`.
pub fn separated_family_sample<S: Scalar>(
    seed: u64,
    count: usize,
    len: usize,
) -> Vec<FunctionRep<S>> {
    assert!(count <= 1usize << len.min(20), "not enough distinct patterns");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let bits: Vec<bool> = (0..len).map(|_| rng.gen()).collect();
        if !seen.insert(bits.clone()) {
            continue;
        }
        out.push(FunctionRep::radial_stored(
            bits.iter()
                .map(|&b| {
                    Complex::new(if b { S::one() } else { S::zero() }, S::zero())
                })
                .collect(),
        ));
    }
    out
}

/// Brute-force level mean: enumerates every vertex of the level, evaluates
/// the function pointwise, and sums with compensated max-scaled accumulation.
/// Shares no code with the closed-form mean evaluation.
pub fn dense_oracle_mean<S: Scalar>(
    geo: &TreeGeometry,
    f: &FunctionRep<S>,
    n: u64,
    p: Exponent<S>,
    cap: u64,
) -> Result<S> {
    let count = geo.level_count_within(n, cap)?;
    let mut max = S::zero();
    for v in geo.enumerate_level(n, cap)? {
        let m = f.evaluate(v).norm();
        if m > max {
            max = m;
        }
    }
    match p {
        Exponent::Infinity => Ok(max),
        Exponent::Finite(p) => {
            if max == S::zero() {
                return Ok(S::zero());
            }
            let mut sum = Kahan::new();
            for v in geo.enumerate_level(n, cap)? {
                sum.push((f.evaluate(v).norm() / max).powf(p));
            }
            Ok(max * (sum.value() / S::from_u64(count).unwrap()).powf(p.recip()))
        }
    }
}

pub fn run_scenario(
    name: &str,
    q: u64,
    depth: u64,
    cap: u64,
    tol: f64,
) -> Result<ScenarioReport> {
    match name {
        "sharp-growth" => sharp_growth(q, depth, cap, tol),
        "proper-inclusion" => proper_inclusion(q, depth, cap, tol),
        "lipschitz-family" => lipschitz_scenario(q, depth, cap, tol),
        "truncation-vs-norm" => truncation_vs_norm(q, depth, cap, tol),
        "uniform-limit-escape" => uniform_limit_escape(q, depth, cap, tol),
        "separated-family" => separated_family(q, depth, cap, tol),
        "point-mass-operator" => point_mass_operator(q, depth, cap, tol),
        _ => Err(Error::UnknownScenario(name.to_string())),
    }
}

struct Checks {
    assertions: Vec<AssertionResult>,
}

impl Checks {
    fn new() -> Self {
        Self {
            assertions: Vec::new(),
        }
    }

    fn push(
        &mut self,
        name: impl Into<String>,
        class: AssertionClass,
        passed: bool,
        detail: impl Into<String>,
    ) {
        self.assertions.push(AssertionResult {
            name: name.into(),
            class,
            passed,
            detail: detail.into(),
        });
    }

    fn close(self, name: &str, q: u64) -> ScenarioReport {
        ScenarioReport {
            name: name.to_string(),
            q,
            assertions: self.assertions,
        }
    }
}

type C64 = Complex<f64>;

fn re(x: f64) -> C64 {
    Complex::new(x, 0.0)
}

fn sharp_growth(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let geo = TreeGeometry::new(q)?;
    let mut ck = Checks::new();
    let level = depth.clamp(1, 6);
    for p in [0.5, 1.0, 2.0] {
        let (f, v) = sharp_growth_function::<f64>(&geo, p, level)?;
        let exp = Exponent::finite(p)?;
        let report = f.norm(&geo, exp, level, cap)?;
        ck.push(
            format!("norm of normalized point mass is 1 (p = {p})"),
            AssertionClass::Derived,
            report.exact && (report.value - 1.0).abs() <= tol,
            format!("norm = {}, exact = {}", report.value, report.exact),
        );
        let gb = space::growth_bound(&geo, exp, &f, v, level, cap)?;
        ck.push(
            format!("growth bound |f(v)| <= level_size^(1/p) ||f||_p is attained (p = {p})"),
            AssertionClass::Theorem,
            (gb.ratio - 1.0).abs() <= tol,
            format!("ratio = {}", gb.ratio),
        );
    }
    // a generic function stays strictly under the bound
    let g = FunctionRep::finite_support(
        &geo,
        [
            (VertexId::ROOT, re(0.5)),
            (VertexId::new(1, 1), re(0.25)),
            (VertexId::new(2, 0), re(-0.75)),
        ],
    )?;
    for lvl in 0..=2u64 {
        for idx in [0u64, 1] {
            let v = VertexId::new(lvl, idx.min(if lvl == 0 { 0 } else { idx }));
            let gb = space::growth_bound(&geo, Exponent::finite(2.0)?, &g, v, 3, cap)?;
            ck.push(
                format!("growth bound holds at {v}"),
                AssertionClass::Theorem,
                gb.ratio <= 1.0 + tol,
                format!("ratio = {}", gb.ratio),
            );
        }
    }
    Ok(ck.close("sharp-growth", q))
}

fn proper_inclusion(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let mut ck = Checks::new();
    let q_eff = q.max(2);
    if q_eff != q {
        ck.push(
            "branching raised to q = 2",
            AssertionClass::Sanity,
            true,
            "the inclusion T_s in T_r is not proper when level sizes stay constant (q = 1)",
        );
    }
    let geo = TreeGeometry::new(q_eff)?;
    let (r, s) = (1.0, 2.0);
    let f = proper_inclusion_witness::<f64>(&geo, r);
    let er = Exponent::finite(r)?;
    let es = Exponent::finite(s)?;

    let norm_r = f.norm(&geo, er, depth, cap)?;
    ck.push(
        "witness has exact unit norm in T_r",
        AssertionClass::Derived,
        norm_r.exact && (norm_r.value - 1.0).abs() <= tol,
        format!("||f||_r = {}, exact = {}", norm_r.value, norm_r.exact),
    );
    let in_r = f.membership(&geo, er, SpaceKind::Full, depth, cap)?;
    ck.push(
        "witness belongs to T_r",
        AssertionClass::Theorem,
        in_r.verdict == Verdict::InSpace,
        in_r.note.clone(),
    );
    let in_s = f.membership(&geo, es, SpaceKind::Full, depth, cap)?;
    ck.push(
        "witness escapes T_s",
        AssertionClass::Theorem,
        in_s.verdict == Verdict::NotInSpace,
        in_s.note.clone(),
    );
    // closed-form path means against the enumeration oracle
    let enum_depth = depth.min(6);
    for n in 0..=enum_depth {
        let closed = f.level_mean(&geo, n, es, cap)?;
        let oracle = dense_oracle_mean(&geo, &f, n, es, cap)?;
        ck.push(
            format!("closed-form mean matches the oracle at level {n}"),
            AssertionClass::Derived,
            (closed - oracle).abs() <= 1e-10 * oracle.max(1.0),
            format!("closed = {closed}, oracle = {oracle}"),
        );
    }
    // mean monotonicity in p on a random dense function
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let levels: Vec<Vec<C64>> = (0..=enum_depth.min(4))
        .map(|n| {
            let size = geo.level_count_within(n, cap).unwrap();
            (0..size)
                .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect()
        })
        .collect();
    let g = FunctionRep::dense(&geo, levels)?;
    let ladder = [
        Exponent::finite(0.5)?,
        Exponent::finite(1.0)?,
        Exponent::finite(2.0)?,
        Exponent::Infinity,
    ];
    let mut monotone = true;
    let mut detail = String::new();
    for n in 0..=enum_depth.min(4) {
        for w in ladder.windows(2) {
            let lo = dense_oracle_mean(&geo, &g, n, w[0], cap)?;
            let hi = dense_oracle_mean(&geo, &g, n, w[1], cap)?;
            if lo > hi + tol {
                monotone = false;
                detail = format!("level {n}: M_{} = {lo} > M_{} = {hi}", w[0], w[1]);
            }
        }
    }
    ck.push(
        "level means are nondecreasing in the exponent",
        AssertionClass::Theorem,
        monotone,
        if detail.is_empty() {
            "checked exponent ladder 0.5, 1, 2, inf".to_string()
        } else {
            detail
        },
    );
    Ok(ck.close("proper-inclusion", q_eff))
}

fn lipschitz_scenario(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let geo = TreeGeometry::new(q)?;
    let mut ck = Checks::new();
    let depth = depth.max(4);
    let family = lipschitz_family::<f64>(&geo)?;
    let get = |name: &str| {
        family
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, f)| f)
            .unwrap()
    };

    let level_fn = get("level");
    let l = level_fn.lipschitz_seminorm(&geo, depth, cap)?;
    ck.push(
        "level function has unit Lipschitz seminorm",
        AssertionClass::Derived,
        (l - 1.0).abs() <= tol,
        format!("L = {l}"),
    );
    let lw = level_fn.weighted_lipschitz_seminorm(&geo, depth, cap)?;
    ck.push(
        "level function escapes the weighted class",
        AssertionClass::Derived,
        (lw - depth as f64).abs() <= tol,
        format!("weighted seminorm grows like the depth: {lw}"),
    );

    let harmonic = get("harmonic");
    let hw = harmonic.weighted_lipschitz_seminorm(&geo, depth, cap)?;
    ck.push(
        "harmonic radial function has unit weighted seminorm",
        AssertionClass::Derived,
        (hw - 1.0).abs() <= tol,
        format!("L_w = {hw}"),
    );
    let h = harmonic.lipschitz_seminorm(&geo, depth, cap)?;
    ck.push(
        "harmonic radial function has unit Lipschitz seminorm",
        AssertionClass::Derived,
        (h - 1.0).abs() <= tol,
        format!("L = {h}"),
    );

    let path_mass = get("path-mass");
    let pl = path_mass.lipschitz_seminorm(&geo, depth, cap)?;
    ck.push(
        "path mass has unit Lipschitz seminorm",
        AssertionClass::Derived,
        (pl - 1.0).abs() <= tol,
        format!("L = {pl}"),
    );
    let plw = path_mass.weighted_lipschitz_seminorm(&geo, depth, cap)?;
    let expected = if q >= 2 { depth as f64 } else { 1.0 };
    ck.push(
        "weighted seminorm of the path mass follows the branching",
        AssertionClass::Derived,
        (plw - expected).abs() <= tol,
        format!("L_w = {plw} (q = {q}: off-path drops at depth {})", if q >= 2 { "every level" } else { "level 1 only" }),
    );

    let indicator = get("indicator");
    let il = indicator.lipschitz_seminorm(&geo, depth, cap)?;
    ck.push(
        "vertex indicator has unit Lipschitz seminorm",
        AssertionClass::Derived,
        (il - 1.0).abs() <= tol,
        format!("L = {il}"),
    );

    // the seminorms are genuinely incomparable: level escapes weighted,
    // while every weighted-bounded function here has bounded increments
    ck.push(
        "weighted and unweighted seminorms are incomparable on the family",
        AssertionClass::Theorem,
        lw > 2.0 * l && (hw - 1.0).abs() <= tol,
        format!("level: L = {l}, L_w = {lw}; harmonic: L = {h}, L_w = {hw}"),
    );
    Ok(ck.close("lipschitz-family", q))
}

fn truncation_vs_norm(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let geo = TreeGeometry::new(q)?;
    let mut ck = Checks::new();
    let p = Exponent::finite(2.0)?;
    let depth = depth.max(4);

    // f(n) = 1/(n+1) lies in T_{p,0}; truncation error 1/(k+2) -> 0
    let f = FunctionRep::radial_fn(|n| re(1.0 / (n as f64 + 1.0)), Tail::Vanishing);
    let member = f.membership(&geo, p, SpaceKind::Little, depth, cap)?;
    ck.push(
        "vanishing radial function lies in T_{p,0}",
        AssertionClass::Theorem,
        member.verdict == Verdict::InSpace,
        member.note.clone(),
    );
    let mut errors = Vec::new();
    let mut ok = true;
    for k in 0..depth {
        let diff = FunctionRep::combine(re(1.0), &f, re(-1.0), &f.truncate(k));
        let err = diff.norm(&geo, p, depth + 2, cap)?.value;
        let expected = 1.0 / (k as f64 + 2.0);
        if (err - expected).abs() > tol {
            ok = false;
        }
        errors.push(err);
    }
    ck.push(
        "truncations converge in norm on T_{p,0}",
        AssertionClass::Theorem,
        ok && errors.windows(2).all(|w| w[0] >= w[1]),
        format!("truncation errors: {errors:?}"),
    );

    // the constant 1 lies in T_p but not T_{p,0}; truncations stay at
    // distance exactly 1
    let one = FunctionRep::radial_const(re(1.0));
    let member = one.membership(&geo, p, SpaceKind::Little, depth, cap)?;
    ck.push(
        "constant function escapes T_{p,0}",
        AssertionClass::Theorem,
        member.verdict == Verdict::NotInSpace,
        member.note.clone(),
    );
    let mut ok = true;
    for k in 0..depth {
        let diff = FunctionRep::combine(re(1.0), &one, re(-1.0), &one.truncate(k));
        let err = diff.norm(&geo, p, k + 1, cap)?;
        if !err.exact || (err.value - 1.0).abs() > tol {
            ok = false;
        }
    }
    ck.push(
        "truncations do not converge to the constant in T_p",
        AssertionClass::Theorem,
        ok,
        "||1 - 1_{<=k}||_p = 1 for every k",
    );
    Ok(ck.close("truncation-vs-norm", q))
}

fn uniform_limit_escape(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let geo = TreeGeometry::new(q)?;
    let mut ck = Checks::new();
    let p = 2.0;
    let compact_depth = 2u64;
    let start = compact_depth + 1;
    let end = start + depth.clamp(2, 6);
    let seq: Vec<FunctionRep<f64>> = (start..end)
        .map(|lvl| sharp_growth_function(&geo, p, lvl).map(|(f, _)| f))
        .collect::<Result<_>>()?;
    let report = ops::pointwise_null_sequence_check(
        &seq,
        &geo,
        Exponent::finite(p)?,
        compact_depth,
        end,
        cap,
    )?;
    ck.push(
        "sequence vanishes on the finite subtree",
        AssertionClass::Derived,
        report.sup_diffs.iter().all(|&d| d == 0.0),
        format!("sup-differences on levels <= {compact_depth}: {:?}", report.sup_diffs),
    );
    ck.push(
        "norms do not follow the pointwise limit",
        AssertionClass::Theorem,
        report.norms.iter().all(|&n| (n - 1.0).abs() <= tol),
        format!("norms: {:?}", report.norms),
    );
    Ok(ck.close("uniform-limit-escape", q))
}

fn separated_family(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let geo = TreeGeometry::new(q)?;
    let mut ck = Checks::new();
    let len = (depth.max(8) as usize).min(24);
    let count = 20;
    let family = separated_family_sample::<f64>(0x5eed, count, len);
    ck.push(
        "family members are pairwise distinct",
        AssertionClass::Sanity,
        family.len() == count,
        format!("{count} distinct {{0,1}} radial patterns over {len} levels"),
    );
    let mut separated = true;
    let mut checked = 0usize;
    for (i, f) in family.iter().enumerate() {
        for g in family.iter().skip(i + 1) {
            let diff = FunctionRep::combine(re(1.0), f, re(-1.0), g);
            for p in [Exponent::finite(1.0)?, Exponent::Infinity] {
                let d = diff.norm(&geo, p, len as u64, cap)?;
                if !d.exact || (d.value - 1.0).abs() > tol {
                    separated = false;
                }
            }
            checked += 1;
        }
    }
    ck.push(
        "distinct members are at distance exactly 1 in every norm",
        AssertionClass::Theorem,
        separated,
        format!("{checked} pairs checked; an uncountable 1-separated family rules out separability"),
    );
    Ok(ck.close("separated-family", q))
}

fn point_mass_operator(q: u64, depth: u64, cap: u64, tol: f64) -> Result<ScenarioReport> {
    let geo = TreeGeometry::new(q)?;
    let mut ck = Checks::new();
    let depth = depth.max(4);
    let psi = Symbol::new(FunctionRep::radial_fn(
        |n| re(1.0 / (n as f64 + 1.0)),
        Tail::Vanishing,
    ));

    let a = ops::analyze(&psi, &geo, depth, cap, tol)?;
    ck.push(
        "operator norm equals the symbol sup-norm",
        AssertionClass::Theorem,
        a.operator_norm.exact && (a.operator_norm.value - 1.0).abs() <= tol,
        format!("||M_psi|| = {}", a.operator_norm.value),
    );
    let lower = ops::delta_lower_bound(&psi, &geo, depth.min(5), cap)?;
    ck.push(
        "point-mass test functions reach the operator norm",
        AssertionClass::Derived,
        (lower - a.operator_norm.value).abs() <= tol,
        format!("sup_v ||M_psi delta_v|| / ||delta_v|| = {lower}"),
    );
    ck.push(
        "vanishing symbol gives a compact operator",
        AssertionClass::Theorem,
        a.compact == Verdict3::Yes,
        format!("sup-means: {:?}", &a.compact_evidence[..a.compact_evidence.len().min(5)]),
    );
    ck.push(
        "essential norm of a compact operator is 0",
        AssertionClass::Theorem,
        a.essential_norm.bound == 0.0,
        format!("certified bound = {}", a.essential_norm.bound),
    );
    ck.push(
        "non-unimodular symbol is not an isometry",
        AssertionClass::Theorem,
        a.isometry == Verdict3::No,
        format!("witness: {:?}", a.isometry_witness),
    );

    // spectrum: attained values are eigenvalues, 0 is a limit point, and
    // points away from the range are resolvent points with norm 1/distance
    let lambda = psi.rep.evaluate(VertexId::new(2, 0));
    let cls = ops::spectrum_classify(&psi, &geo, lambda, depth, cap, tol)?;
    ck.push(
        "attained symbol values are eigenvalues",
        AssertionClass::Theorem,
        matches!(cls, SpectrumClassification::PointSpectrum { .. }),
        format!("psi(v) = {lambda} classified as {cls:?}"),
    );
    let cls = ops::spectrum_classify(&psi, &geo, re(0.0), depth, cap, tol)?;
    ck.push(
        "0 lies in the closure of the spectrum",
        AssertionClass::Theorem,
        matches!(cls, SpectrumClassification::InClosure),
        format!("classified as {cls:?}"),
    );
    // a stored symbol has a fully known range, so the certified distance is
    // the true distance and the resolvent norm is exactly its reciprocal
    let stored = Symbol::new(FunctionRep::radial_stored(vec![
        re(1.0),
        re(0.5),
        re(1.0 / 3.0),
    ]));
    match ops::resolvent_symbol(&stored, &geo, re(-1.0), depth, cap, tol) {
        Ok((inv, distance)) => {
            let inv_norm = ops::operator_norm(&inv, &geo, depth, cap)?;
            ck.push(
                "resolvent norm is the reciprocal distance to the spectrum",
                AssertionClass::Theorem,
                (distance - 1.0).abs() <= tol
                    && inv_norm.exact
                    && (inv_norm.value - 1.0).abs() <= tol,
                format!("distance = {distance}, ||resolvent|| = {}", inv_norm.value),
            );
        }
        Err(e) => ck.push(
            "resolvent norm is the reciprocal distance to the spectrum",
            AssertionClass::Theorem,
            false,
            format!("resolvent construction failed: {e}"),
        ),
    }

    // the unimodular counterpart: an isometry with essential norm bound 1
    let rotation = Symbol::new(FunctionRep::radial_fn(
        |n| Complex::from_polar(1.0, 0.3 * n as f64),
        Tail::unimodular(),
    ));
    let a = ops::analyze(&rotation, &geo, depth, cap, tol)?;
    ck.push(
        "unimodular symbol gives an isometry",
        AssertionClass::Theorem,
        a.isometry == Verdict3::Yes && (a.operator_norm.value - 1.0).abs() <= tol,
        format!("||M_psi|| = {}", a.operator_norm.value),
    );
    ck.push(
        "isometry is not compact",
        AssertionClass::Theorem,
        a.compact == Verdict3::No && a.essential_norm.bound == 1.0,
        format!("essential norm bound = {}", a.essential_norm.bound),
    );
    Ok(ck.close("point-mass-operator", q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_scenarios_pass() {
        for &name in SCENARIOS {
            for q in [2u64, 3] {
                let report = run_scenario(name, q, 6, crate::DEFAULT_CAP, 1e-10).unwrap();
                for a in &report.assertions {
                    assert!(a.passed, "{name} (q = {q}): {} failed: {}", a.name, a.detail);
                }
            }
        }
    }

    #[test]
    fn q1_scenarios_do_not_crash() {
        for &name in SCENARIOS {
            let report = run_scenario(name, 1, 5, crate::DEFAULT_CAP, 1e-10).unwrap();
            assert_eq!(report.theorem_failures(), 0, "{name}: {:?}", report.assertions);
        }
    }

    #[test]
    fn unknown_scenario_is_an_error() {
        assert!(matches!(
            run_scenario("no-such-scenario", 2, 4, crate::DEFAULT_CAP, 1e-10),
            Err(Error::UnknownScenario(_))
        ));
    }

    #[test]
    fn oracle_agrees_with_closed_forms() {
        let geo = TreeGeometry::new(3).unwrap();
        let f = FunctionRep::radial_fn(|n| re(1.0 / (n as f64 + 1.0)), Tail::Vanishing);
        for n in 0..=5u64 {
            for p in [Exponent::finite(0.5).unwrap(), Exponent::finite(2.0).unwrap(), Exponent::Infinity] {
                let closed = f.level_mean(&geo, n, p, crate::DEFAULT_CAP).unwrap();
                let oracle = dense_oracle_mean(&geo, &f, n, p, crate::DEFAULT_CAP).unwrap();
                assert!(
                    (closed - oracle).abs() <= 1e-10 * oracle.max(1.0),
                    "n={n} closed={closed} oracle={oracle}"
                );
            }
        }
    }

    #[test]
    fn separated_family_is_deterministic() {
        let a = separated_family_sample::<f64>(42, 8, 10);
        let b = separated_family_sample::<f64>(42, 8, 10);
        for (f, g) in a.iter().zip(&b) {
            for n in 0..10u64 {
                assert_eq!(
                    f.evaluate(VertexId::new(n, 0)),
                    g.evaluate(VertexId::new(n, 0))
                );
            }
        }
    }
}
