//! JSON documents for functions and reports.
//!
//! Function documents:
//!
//! ```text
//! {"kind": "finite", "q": 3, "entries": [[level, index, re, im], ...]}
//! {"kind": "radial", "q": 3, "values": [[re, im], ...], "tail": "...", ...}
//! {"kind": "path",   "q": 3, "values": [[re, im], ...], "tail": "...", ...}
//! {"kind": "dense",  "q": 3, "levels": [[[re, im], ...], ...]}
//! ```
//!
//! `tail` is one of `"vanishing"`, `"bounded"`, `"divergent"`, `"power"`,
//! `"unknown"`; `"bounded"` reads the sibling keys `lower`, `bound`,
//! `limsup` (each defaulting to the given `bound`, or 0), `"power"` reads
//! `exponent`. Omitting `tail` declares the stored prefix exact (zero tail).
//!
//! Rule-based representations are serialized by sampling their level values
//! to a depth, keeping the declared tail; opaque pointwise rules are not
//! serializable. Non-finite numbers are encoded as the strings `"inf"`,
//! `"-inf"`, `"nan"`.

use num_complex::Complex;
use serde_json::{json, Map, Value};

use crate::ops::{OperatorAnalysis, Verdict3};
use crate::scenarios::ScenarioReport;
use crate::space::{FunctionRep, LevelValues, MembershipVerdict, NormReport, Tail, Verdict};
use crate::tree::{TreeGeometry, VertexId};
use crate::{Error, Result, Scalar};

fn real<S: Scalar>(x: S) -> Value {
    match x.to_f64() {
        Some(v) if v.is_finite() => json!(v),
        Some(v) if v.is_nan() => json!("nan"),
        Some(v) if v > 0.0 => json!("inf"),
        Some(_) => json!("-inf"),
        None => json!("nan"),
    }
}

fn complex<S: Scalar>(z: Complex<S>) -> Value {
    json!([real(z.re), real(z.im)])
}

fn vertex(v: VertexId) -> Value {
    json!([v.level, v.index])
}

fn verdict3(v: Verdict3) -> Value {
    json!(v.to_string())
}

fn verdict(v: Verdict) -> Value {
    json!(match v {
        Verdict::InSpace => "in-space",
        Verdict::NotInSpace => "not-in-space",
        Verdict::Inconclusive => "inconclusive",
    })
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidDocument(msg.into())
}

fn get_f64<S: Scalar>(v: &Value, what: &str) -> Result<S> {
    let x = v
        .as_f64()
        .ok_or_else(|| bad(format!("{what} must be a number")))?;
    S::from_f64(x).ok_or_else(|| bad(format!("{what} is not representable")))
}

fn get_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64()
        .ok_or_else(|| bad(format!("{what} must be a nonnegative integer")))
}

fn parse_complex<S: Scalar>(v: &Value, what: &str) -> Result<Complex<S>> {
    let arr = v
        .as_array()
        .filter(|a| a.len() == 2)
        .ok_or_else(|| bad(format!("{what} must be a [re, im] pair")))?;
    Ok(Complex::new(
        get_f64(&arr[0], what)?,
        get_f64(&arr[1], what)?,
    ))
}

fn tail_fields<S: Scalar>(tail: Tail<S>, obj: &mut Map<String, Value>) {
    match tail {
        Tail::Vanishing => {
            obj.insert("tail".into(), json!("vanishing"));
        }
        Tail::Bounded {
            lower,
            upper,
            limsup,
        } => {
            obj.insert("tail".into(), json!("bounded"));
            obj.insert("lower".into(), real(lower));
            obj.insert("bound".into(), real(upper));
            obj.insert("limsup".into(), real(limsup));
        }
        Tail::Divergent => {
            obj.insert("tail".into(), json!("divergent"));
        }
        Tail::LevelSizePower { exponent } => {
            obj.insert("tail".into(), json!("power"));
            obj.insert("exponent".into(), real(exponent));
        }
        Tail::Unknown => {
            obj.insert("tail".into(), json!("unknown"));
        }
    }
}

fn tail_from_fields<S: Scalar>(obj: &Map<String, Value>) -> Result<Tail<S>> {
    let kind = match obj.get("tail") {
        None => return Ok(Tail::zero()),
        Some(v) => v
            .as_str()
            .ok_or_else(|| bad("tail must be a string"))?,
    };
    match kind {
        "vanishing" => Ok(Tail::Vanishing),
        "divergent" => Ok(Tail::Divergent),
        "unknown" => Ok(Tail::Unknown),
        "power" => Ok(Tail::LevelSizePower {
            exponent: get_f64(
                obj.get("exponent")
                    .ok_or_else(|| bad("power tail requires an exponent"))?,
                "exponent",
            )?,
        }),
        "bounded" => {
            let upper = match obj.get("bound") {
                Some(v) => get_f64(v, "bound")?,
                None => S::zero(),
            };
            let lower = match obj.get("lower") {
                Some(v) => get_f64(v, "lower")?,
                None => S::zero(),
            };
            let limsup = match obj.get("limsup") {
                Some(v) => get_f64(v, "limsup")?,
                None => upper,
            };
            if lower > upper || limsup > upper {
                return Err(bad("bounded tail requires lower <= bound and limsup <= bound"));
            }
            Ok(Tail::Bounded {
                lower,
                upper,
                limsup,
            })
        }
        other => Err(bad(format!("unknown tail kind `{other}`"))),
    }
}

/// Serialize a function to a document; rule-based level representations are
/// sampled up to `sample_depth`.
pub fn function_to_document<S: Scalar>(
    rep: &FunctionRep<S>,
    q: u64,
    sample_depth: u64,
) -> Result<Value> {
    let mut obj = Map::new();
    obj.insert("q".into(), json!(q));
    match rep {
        FunctionRep::FiniteSupport { entries } => {
            obj.insert("kind".into(), json!("finite"));
            obj.insert(
                "entries".into(),
                Value::Array(
                    entries
                        .iter()
                        .map(|(v, z)| {
                            json!([json!(v.level), json!(v.index), real(z.re), real(z.im)])
                        })
                        .collect(),
                ),
            );
        }
        FunctionRep::Radial { values, tail }
        | FunctionRep::PathSupported {
            coefficients: values,
            tail,
        } => {
            obj.insert(
                "kind".into(),
                json!(if matches!(rep, FunctionRep::Radial { .. }) {
                    "radial"
                } else {
                    "path"
                }),
            );
            let extent = match values {
                LevelValues::Stored(v) => (v.len() as u64).saturating_sub(1),
                LevelValues::Rule(_) => sample_depth,
            };
            obj.insert(
                "values".into(),
                Value::Array((0..=extent).map(|n| complex(values.at(n))).collect()),
            );
            tail_fields(*tail, &mut obj);
        }
        FunctionRep::DenseTruncated { levels } => {
            obj.insert("kind".into(), json!("dense"));
            obj.insert(
                "levels".into(),
                Value::Array(
                    levels
                        .iter()
                        .map(|arr| Value::Array(arr.iter().map(|z| complex(*z)).collect()))
                        .collect(),
                ),
            );
        }
        FunctionRep::PointwiseRule { .. } => return Err(Error::NotSerializable),
    }
    Ok(Value::Object(obj))
}

/// Parse a function document; returns the geometry it declares and the
/// representation, fully validated against that geometry.
pub fn function_from_document<S: Scalar>(doc: &Value) -> Result<(TreeGeometry, FunctionRep<S>)> {
    let obj = doc
        .as_object()
        .ok_or_else(|| bad("function document must be an object"))?;
    let q = get_u64(
        obj.get("q").ok_or_else(|| bad("missing key `q`"))?,
        "q",
    )?;
    let geo = TreeGeometry::new(q).map_err(|_| bad("q must be at least 1"))?;
    let kind = obj
        .get("kind")
        .and_then(|v| v.as_str())
        .ok_or_else(|| bad("missing or non-string key `kind`"))?;
    let rep = match kind {
        "finite" => {
            let entries = obj
                .get("entries")
                .and_then(|v| v.as_array())
                .ok_or_else(|| bad("finite documents need an `entries` array"))?;
            let mut parsed = Vec::with_capacity(entries.len());
            for e in entries {
                let arr = e
                    .as_array()
                    .filter(|a| a.len() == 4)
                    .ok_or_else(|| bad("each entry must be [level, index, re, im]"))?;
                let v = VertexId::new(get_u64(&arr[0], "level")?, get_u64(&arr[1], "index")?);
                let z = Complex::new(get_f64(&arr[2], "re")?, get_f64(&arr[3], "im")?);
                parsed.push((v, z));
            }
            FunctionRep::finite_support(&geo, parsed)
                .map_err(|e| bad(format!("invalid entry: {e}")))?
        }
        "radial" | "path" => {
            let values = obj
                .get("values")
                .and_then(|v| v.as_array())
                .ok_or_else(|| bad("radial/path documents need a `values` array"))?
                .iter()
                .map(|v| parse_complex(v, "value"))
                .collect::<Result<Vec<_>>>()?;
            let tail = tail_from_fields(obj)?;
            let values = LevelValues::Stored(values);
            if kind == "radial" {
                FunctionRep::Radial { values, tail }
            } else {
                FunctionRep::PathSupported {
                    coefficients: values,
                    tail,
                }
            }
        }
        "dense" => {
            let levels = obj
                .get("levels")
                .and_then(|v| v.as_array())
                .ok_or_else(|| bad("dense documents need a `levels` array"))?
                .iter()
                .map(|arr| {
                    arr.as_array()
                        .ok_or_else(|| bad("each dense level must be an array"))?
                        .iter()
                        .map(|z| parse_complex(z, "dense value"))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            FunctionRep::dense(&geo, levels)?
        }
        other => return Err(bad(format!("unknown kind `{other}`"))),
    };
    Ok((geo, rep))
}

pub fn norm_report_json<S: Scalar>(r: &NormReport<S>) -> Value {
    json!({
        "value": real(r.value),
        "depth_examined": r.depth_examined,
        "exact": r.exact,
        "attained_level": r.attained_level,
    })
}

pub fn membership_json<S: Scalar>(m: &MembershipVerdict<S>) -> Value {
    json!({
        "verdict": verdict(m.verdict),
        "evidence": m.evidence.iter().map(|&x| real(x)).collect::<Vec<_>>(),
        "note": m.note,
    })
}

pub fn operator_report_json<S: Scalar>(a: &OperatorAnalysis<S>) -> Value {
    json!({
        "operator_norm": {
            "value": real(a.operator_norm.value),
            "exact": a.operator_norm.exact,
        },
        "bounded": verdict3(a.bounded),
        "compact": verdict3(a.compact),
        "compact_evidence": a.compact_evidence.iter().map(|&x| real(x)).collect::<Vec<_>>(),
        "essential_norm_upper": a.essential_norm.sequence.iter().map(|&x| real(x)).collect::<Vec<_>>(),
        "essential_norm_bound": real(a.essential_norm.bound),
        "isometry": verdict3(a.isometry),
        "isometry_witness": a.isometry_witness.map(vertex),
        "spectrum": {
            "values": a.spectrum.values.iter().map(|&z| complex(z)).collect::<Vec<_>>(),
            "witnesses": a.spectrum.witnesses.iter().map(|&v| vertex(v)).collect::<Vec<_>>(),
            "depth": a.spectrum.depth,
            "closure_note": a.spectrum.closure_note,
        },
    })
}

pub fn scenario_report_json(r: &ScenarioReport) -> Value {
    json!({
        "name": r.name,
        "q": r.q,
        "passed": r.passed(),
        "assertions": r.assertions.iter().map(|a| json!({
            "name": a.name,
            "class": a.class.to_string(),
            "passed": a.passed,
            "detail": a.detail,
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::Exponent;
    use crate::DEFAULT_CAP;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn finite_round_trip() {
        let geo = TreeGeometry::new(3).unwrap();
        let f = FunctionRep::finite_support(
            &geo,
            [
                (VertexId::new(0, 0), c(1.5, -2.0)),
                (VertexId::new(2, 11), c(0.0, 1.0)),
            ],
        )
        .unwrap();
        let doc = function_to_document(&f, 3, 4).unwrap();
        let (geo2, g) = function_from_document::<f64>(&doc).unwrap();
        assert_eq!(geo2.q(), 3);
        for v in [VertexId::ROOT, VertexId::new(2, 11), VertexId::new(1, 2)] {
            assert_eq!(f.evaluate(v), g.evaluate(v));
        }
        let doc2 = function_to_document(&g, 3, 4).unwrap();
        assert_eq!(doc, doc2);
    }

    #[test]
    fn radial_rule_is_sampled_with_tail() {
        let f = FunctionRep::radial_fn(|n| c(1.0 / (n as f64 + 1.0), 0.0), Tail::Vanishing);
        let doc = function_to_document(&f, 2, 5).unwrap();
        assert_eq!(doc["tail"], json!("vanishing"));
        assert_eq!(doc["values"].as_array().unwrap().len(), 6);
        let (geo, g) = function_from_document::<f64>(&doc).unwrap();
        // the stored prefix matches; membership still certified via the tail
        assert_eq!(g.evaluate(VertexId::new(4, 0)), c(0.2, 0.0));
        let m = g
            .membership(&geo, Exponent::Infinity, crate::space::SpaceKind::Little, 5, DEFAULT_CAP)
            .unwrap();
        assert_eq!(m.verdict, Verdict::InSpace);
    }

    #[test]
    fn path_power_round_trip() {
        let geo = TreeGeometry::new(2).unwrap();
        let f = crate::scenarios::proper_inclusion_witness::<f64>(&geo, 2.0);
        let doc = function_to_document(&f, 2, 6).unwrap();
        assert_eq!(doc["kind"], json!("path"));
        assert_eq!(doc["tail"], json!("power"));
        assert_eq!(doc["exponent"], json!(0.5));
        let (geo2, g) = function_from_document::<f64>(&doc).unwrap();
        for n in 0..=6u64 {
            let p = Exponent::finite(2.0).unwrap();
            let a = f.level_mean(&geo, n, p, DEFAULT_CAP).unwrap();
            let b = g.level_mean(&geo2, n, p, DEFAULT_CAP).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn dense_validation() {
        let doc = json!({
            "kind": "dense", "q": 2,
            "levels": [[[1.0, 0.0]], [[0.5, 0.0], [0.0, 0.0], [1.0, 1.0]]],
        });
        let (_, f) = function_from_document::<f64>(&doc).unwrap();
        assert_eq!(f.evaluate(VertexId::new(1, 2)), c(1.0, 1.0));
        // wrong level length
        let doc = json!({
            "kind": "dense", "q": 2,
            "levels": [[[1.0, 0.0]], [[0.5, 0.0]]],
        });
        assert!(matches!(
            function_from_document::<f64>(&doc),
            Err(Error::InvalidDocument(_))
        ));
    }

    #[test]
    fn document_errors() {
        for doc in [
            json!({"kind": "finite", "entries": []}),
            json!({"kind": "nope", "q": 2}),
            json!({"kind": "radial", "q": 2, "values": [[1.0]]}),
            json!({"kind": "finite", "q": 3, "entries": [[1, 9, 0.0, 0.0]]}),
            json!({"kind": "radial", "q": 2, "values": [], "tail": "bounded",
                   "lower": 2.0, "bound": 1.0}),
            json!(42),
        ] {
            assert!(
                matches!(function_from_document::<f64>(&doc), Err(Error::InvalidDocument(_))),
                "expected rejection: {doc}"
            );
        }
    }

    #[test]
    fn pointwise_is_not_serializable() {
        let f = FunctionRep::<f64>::pointwise(|_| c(1.0, 0.0));
        assert!(matches!(
            function_to_document(&f, 2, 4),
            Err(Error::NotSerializable)
        ));
    }

    #[test]
    fn non_finite_numbers_become_strings() {
        assert_eq!(real(f64::INFINITY), json!("inf"));
        assert_eq!(real(f64::NEG_INFINITY), json!("-inf"));
        assert_eq!(real(1.25f64), json!(1.25));
    }
}
