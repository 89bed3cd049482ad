//! JSON job files and result documents.
//!
//! A job names two curves `y^2 = x^3 + a2 x^2 + a4 x + a6` and an isogeny
//! `(x_num / x_den, y * y_num / y_den)`. Coefficients are integers or
//! `"p/q"` strings; polynomial arrays are in ascending degree.

use std::path::PathBuf;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::algebra::rational::format_rational;
use crate::algebra::{parse_rational, RatFunc, Rational, UniPoly, Var};
use crate::curves::ProjPoint;
use crate::elliptic::{ECPoint, EllipticCurve, RationalMap};
use crate::error::{Error, Result};
use crate::inose::{Branch, Computation, InoseData};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCurve {
    a2: Value,
    a4: Value,
    a6: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    x_num: Vec<Value>,
    x_den: Vec<Value>,
    y_num: Vec<Value>,
    y_den: Vec<Value>,
    degree: u32,
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    #[serde(default)]
    emit_intermediates: Option<PathBuf>,
    #[serde(default)]
    output: Option<PathBuf>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    #[serde(rename = "E1")]
    e1: RawCurve,
    #[serde(rename = "E2")]
    e2: RawCurve,
    phi: RawMap,
    #[serde(default)]
    options: RawOptions,
}

/// Output options; command-line flags override the ones in the file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JobOptions {
    pub emit_intermediates: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

#[derive(Clone, Debug)]
pub struct JobSpec {
    pub e1: EllipticCurve,
    pub e2: EllipticCurve,
    pub phi: RationalMap,
    pub options: JobOptions,
}

/// An exact rational from a JSON integer or a `"p/q"` string. Floats are
/// rejected.
pub fn parse_coefficient(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
        other => Err(Error::Parse(format!("not an exact coefficient: {other}"))),
    }
}

fn parse_array(vals: &[Value], var: Var, field: &str) -> Result<UniPoly> {
    let coeffs = vals
        .iter()
        .map(parse_coefficient)
        .collect::<Result<Vec<_>>>()
        .map_err(|e| Error::Parse(format!("{field}: {e}")))?;
    Ok(UniPoly::new(var, coeffs))
}

fn parse_curve(c: &RawCurve) -> Result<EllipticCurve> {
    EllipticCurve::new(
        parse_coefficient(&c.a2)?,
        parse_coefficient(&c.a4)?,
        parse_coefficient(&c.a6)?,
    )
}

impl JobSpec {
    /// Parses a job document. Malformed JSON, bad coefficients and singular
    /// curves are reported here; whether `phi` is an isogeny is not checked.
    pub fn from_json(text: &str) -> Result<JobSpec> {
        let raw: RawJob = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let m = &raw.phi;
        let phi = RationalMap::new(
            parse_array(&m.x_num, Var::X1, "x_num")?,
            parse_array(&m.x_den, Var::X1, "x_den")?,
            parse_array(&m.y_num, Var::X1, "y_num")?,
            parse_array(&m.y_den, Var::X1, "y_den")?,
            m.degree,
        )?;
        Ok(JobSpec {
            e1: parse_curve(&raw.e1)?,
            e2: parse_curve(&raw.e2)?,
            phi,
            options: JobOptions {
                emit_intermediates: raw.options.emit_intermediates,
                output: raw.options.output,
            },
        })
    }

    /// The job as a JSON document accepted by [`JobSpec::from_json`].
    pub fn to_json(&self) -> Value {
        let curve = |e: &EllipticCurve| json!({"a2": format_rational(&e.a2), "a4": format_rational(&e.a4), "a6": format_rational(&e.a6)});
        json!({
            "E1": curve(&self.e1),
            "E2": curve(&self.e2),
            "phi": {
                "x_num": coeff_array(self.phi.x_num()),
                "x_den": coeff_array(self.phi.x_den()),
                "y_num": coeff_array(self.phi.y_num()),
                "y_den": coeff_array(self.phi.y_den()),
                "degree": self.phi.degree(),
            }
        })
    }
}

/// Ascending coefficients as strings.
pub fn coeff_array(p: &UniPoly) -> Vec<String> {
    p.coeffs().iter().map(format_rational).collect()
}

/// `{num, den, text}` with `den` monic.
pub fn ratfunc_json(f: &RatFunc) -> Value {
    json!({
        "num": coeff_array(&f.num()),
        "den": coeff_array(&f.den()),
        "text": f.to_string(),
    })
}

/// Inverse of [`ratfunc_json`] (the `text` field is ignored).
pub fn ratfunc_from_json(v: &Value, var: Var) -> Result<RatFunc> {
    let arr = |key: &str| -> Result<UniPoly> {
        let vals = v
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse(format!("missing array {key:?}")))?;
        parse_array(vals, var, key)
    };
    RatFunc::new(&arr("num")?, &arr("den")?)
}

fn point_json(p: &ECPoint) -> Value {
    match p {
        ECPoint::Infinity => json!("infinity"),
        ECPoint::Affine { x, y } => json!({"X": ratfunc_json(x), "Y": ratfunc_json(y)}),
    }
}

fn proj_json(p: &ProjPoint) -> Value {
    let [x1, x2, z] = p.coords();
    json!({
        "x1": coeff_array(x1),
        "x2": coeff_array(x2),
        "z": coeff_array(z),
        "text": p.to_string(),
    })
}

pub fn model_json(data: &InoseData) -> Value {
    json!({
        "A": format_rational(&data.a),
        "B": format_rational(&data.b),
        "delta1": format_rational(&data.delta1),
        "delta2": format_rational(&data.delta2),
    })
}

/// Intermediates grouped by stage, as `(stage name, document)`.
pub fn intermediates(c: &Computation) -> Vec<(&'static str, Value)> {
    let both = |f: &dyn Fn(&Branch) -> Value| json!({"plus": f(&c.plus), "minus": f(&c.minus)});
    vec![
        ("split", both(&|b| json!(b.p.to_string()))),
        ("fitted", both(&|b| json!(b.q.to_string()))),
        ("ninth_point", both(&|b| proj_json(&b.point))),
        ("psi_image", both(&|b| point_json(&b.image))),
        ("section", point_json(&c.section.point)),
    ]
}

/// The result document of a successful run.
pub fn result_document(c: &Computation, with_intermediates: bool) -> Value {
    let mut doc = json!({
        "model": model_json(&c.setup.data),
        "degree": c.setup.degree(),
        "height": format_rational(&c.section.height),
        "intersection_with_zero": c.section.intersection,
    });
    if let ECPoint::Affine { x, y } = &c.section.point {
        doc["X"] = ratfunc_json(x);
        doc["Y"] = ratfunc_json(y);
    }
    if with_intermediates {
        doc["intermediates"] = intermediates(c)
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect::<serde_json::Map<_, _>>()
            .into();
    }
    doc
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO_ISOGENY: &str = r#"{
        "E1": {"a2": 1, "a4": -1, "a6": 0},
        "E2": {"a2": "-2", "a4": "5", "a6": "0/7"},
        "phi": {"x_num": [-1, 1, 1], "x_den": [0, 1], "y_num": [1, 0, 1], "y_den": [0, 0, 1], "degree": 2}
    }"#;

    #[test]
    fn parses_integers_and_fraction_strings() {
        let job = JobSpec::from_json(TWO_ISOGENY).unwrap();
        assert_eq!(job.e2.a2, crate::algebra::rational::int(-2));
        assert_eq!(job.phi.degree(), 2);
        assert_eq!(job.options, JobOptions::default());
        let again = JobSpec::from_json(&job.to_json().to_string()).unwrap();
        assert_eq!(again.phi, job.phi);
    }

    #[test]
    fn rejects_inexact_or_malformed_input() {
        for bad in ["\"1/0\"", "0.5", "\"x\"", "null"] {
            let text = TWO_ISOGENY.replacen("\"a4\": -1", &format!("\"a4\": {bad}"), 1);
            assert!(
                matches!(JobSpec::from_json(&text), Err(Error::Parse(_))),
                "{bad}"
            );
        }
        assert!(matches!(JobSpec::from_json("{"), Err(Error::Parse(_))));
        let singular = TWO_ISOGENY.replacen("\"a4\": -1", "\"a4\": 0", 1);
        assert!(matches!(
            JobSpec::from_json(&singular),
            Err(Error::SingularInput(_))
        ));
    }

    #[test]
    fn ratfunc_round_trip() {
        let f = RatFunc::new(
            &UniPoly::from_ints(Var::S, &[3, 0, -7]),
            &UniPoly::from_ints(Var::S, &[0, 6, 4]),
        )
        .unwrap();
        assert_eq!(ratfunc_from_json(&ratfunc_json(&f), Var::S).unwrap(), f);
    }
}
