//! JSON forms of the domain types.
//!
//! Rationals are always strings (`"p/q"`, or `"p"` when `q = 1`).
//!
//! ```text
//! matrix / sequence : {"order": N, "rows": [["1"], ["1","1"], ...]}
//! array             : {"order": N, "f": [...], "g": [...]}
//! params            : {"phi": [...], "u": [...], "sign": 1 | -1, "order": N}
//! ```
//!
//! Coefficient lists may be shorter than `order + 1`; they are zero-padded.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fps::Series;
use crate::involution::{InvolutionParams, Sign};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::riordan::{RiordanArray, TriangularMatrix};
use crate::sheffer::PolySequence;

/// Conversion to and from the JSON wire format.
pub trait JsonForm: Sized {
    fn to_json_value(&self) -> Value;

    fn from_json_value(value: Value) -> Result<Self>;

    fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    fn from_json(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::parse(format!("invalid json: {e}")))?;
        Self::from_json_value(value)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    order: usize,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrayJson {
    order: usize,
    f: Vec<String>,
    g: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ParamsJson {
    phi: Vec<String>,
    u: Vec<String>,
    sign: i64,
    order: usize,
}

fn decode<T: for<'de> Deserialize<'de>>(value: Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::parse(format!("invalid json: {e}")))
}

fn encode<T: Serialize>(raw: &T) -> Value {
    serde_json::to_value(raw).expect("plain data serializes")
}

fn strings(coeffs: &[Rational]) -> Vec<String> {
    coeffs.iter().map(format_rational).collect()
}

fn rationals(texts: &[String]) -> Result<Vec<Rational>> {
    texts.iter().map(|t| parse_rational(t)).collect()
}

fn series_at(texts: &[String], order: usize) -> Result<Series> {
    Series::new(rationals(texts)?, order)
}

impl JsonForm for Series {
    /// A plain list of `order + 1` coefficient strings.
    fn to_json_value(&self) -> Value {
        encode(&strings(self.coeffs()))
    }

    fn from_json_value(value: Value) -> Result<Self> {
        let texts: Vec<String> = decode(value)?;
        if texts.is_empty() {
            return Err(Error::invalid("series needs at least one coefficient"));
        }
        let order = texts.len() - 1;
        series_at(&texts, order)
    }
}

impl JsonForm for TriangularMatrix {
    fn to_json_value(&self) -> Value {
        encode(&MatrixJson {
            order: self.order(),
            rows: self.rows().iter().map(|r| strings(r)).collect(),
        })
    }

    fn from_json_value(value: Value) -> Result<Self> {
        let raw: MatrixJson = decode(value)?;
        if raw.rows.len() != raw.order + 1 {
            return Err(Error::invalid(format!(
                "order {} needs {} rows, got {}",
                raw.order,
                raw.order + 1,
                raw.rows.len()
            )));
        }
        let rows = raw
            .rows
            .iter()
            .map(|r| rationals(r))
            .collect::<Result<Vec<_>>>()?;
        TriangularMatrix::from_rows(rows)
    }
}

impl JsonForm for PolySequence {
    fn to_json_value(&self) -> Value {
        self.matrix().to_json_value()
    }

    fn from_json_value(value: Value) -> Result<Self> {
        TriangularMatrix::from_json_value(value).map(PolySequence::from_matrix)
    }
}

impl JsonForm for RiordanArray {
    fn to_json_value(&self) -> Value {
        encode(&ArrayJson {
            order: self.order(),
            f: strings(self.f().coeffs()),
            g: strings(self.g().coeffs()),
        })
    }

    fn from_json_value(value: Value) -> Result<Self> {
        let raw: ArrayJson = decode(value)?;
        RiordanArray::new(series_at(&raw.f, raw.order)?, series_at(&raw.g, raw.order)?)
    }
}

impl JsonForm for InvolutionParams {
    fn to_json_value(&self) -> Value {
        encode(&ParamsJson {
            phi: strings(self.phi().coeffs()),
            u: strings(self.u().coeffs()),
            sign: self.sign().as_i64(),
            order: self.order(),
        })
    }

    fn from_json_value(value: Value) -> Result<Self> {
        let raw: ParamsJson = decode(value)?;
        InvolutionParams::new(
            series_at(&raw.phi, raw.order)?,
            series_at(&raw.u, raw.order)?,
            Sign::from_i64(raw.sign)?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn matrix_wire_format() {
        let m = RiordanArray::pascal(2).to_matrix();
        assert_eq!(
            m.to_json(),
            r#"{"order":2,"rows":[["1"],["1","1"],["1","2","1"]]}"#
        );
        assert_eq!(TriangularMatrix::from_json(&m.to_json()).unwrap(), m);
    }

    #[test]
    fn params_wire_format() {
        let text = r#"{"phi": ["1"], "u": ["0", "-1/2"], "sign": -1, "order": 3}"#;
        let p = InvolutionParams::from_json(text).unwrap();
        assert_eq!(p.order(), 3);
        assert_eq!(p.sign(), Sign::Minus);
        assert_eq!(p.phi(), &Series::one(3));
        assert_eq!(
            p.to_json(),
            r#"{"order":3,"phi":["1","0","0","0"],"sign":-1,"u":["0","-1/2","0","0"]}"#
        );
        assert_eq!(InvolutionParams::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(TriangularMatrix::from_json(r#"{"order":1,"rows":[["1"]]}"#).is_err());
        assert!(TriangularMatrix::from_json(r#"{"order":0,"rows":[["x"]]}"#).is_err());
        assert!(TriangularMatrix::from_json("not json").is_err());
        let bad_sign = r#"{"phi":["1"],"u":["0"],"sign":2,"order":1}"#;
        assert!(InvolutionParams::from_json(bad_sign).is_err());
        let even_u = r#"{"phi":["1"],"u":["1"],"sign":1,"order":1}"#;
        assert!(InvolutionParams::from_json(even_u).is_err());
        assert!(Series::from_json("[]").is_err());
    }

    #[test]
    fn array_and_series() {
        let t = RiordanArray::new(
            Series::from_ints(&[-1], 2).unwrap(),
            Series::from_ints(&[-1, 1], 2).unwrap(),
        )
        .unwrap();
        assert_eq!(RiordanArray::from_json(&t.to_json()).unwrap(), t);
        let s = Series::new(vec![int(1), int(2)], 1).unwrap();
        assert_eq!(s.to_json(), r#"["1","2"]"#);
        assert_eq!(Series::from_json(&s.to_json()).unwrap(), s);
    }
}
