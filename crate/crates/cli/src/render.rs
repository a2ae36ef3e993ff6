use std::fmt::Write;

use serde_json::{json, Value};

use riordan_core::rational::format_rational;
use riordan_core::{polynomial_string, InvolutionParams, JsonForm, PolySequence, RiordanArray, Series};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Pretty,
    Json,
    Csv,
}

pub enum Report {
    Built { array: RiordanArray },
    Decomposed { params: InvolutionParams },
    Array { array: RiordanArray },
    ASequence { a: Series },
    Order { found: Option<usize>, max: usize },
    Pseudo { value: bool },
    Sequence { seq: PolySequence, neutral: Option<bool> },
    Prop1 { sheffer_side: bool, group_side: bool },
}

fn csv_series(label: &str, s: &Series) -> String {
    let cells: Vec<String> = s.coeffs().iter().map(format_rational).collect();
    format!("{label},{}\n", cells.join(","))
}

fn pretty_array(array: &RiordanArray) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "f = {}", array.f());
    let _ = writeln!(out, "g = {}", array.g());
    let _ = writeln!(out, "matrix (order {}):", array.order());
    out.push_str(&array.to_matrix().to_pretty());
    out
}

fn json_array(array: &RiordanArray) -> Value {
    json!({
        "array": array.to_json_value(),
        "matrix": array.to_matrix().to_json_value(),
    })
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Pretty => self.pretty(),
            Format::Json => {
                let mut text = self.json().to_string();
                text.push('\n');
                text
            }
            Format::Csv => self.csv(),
        }
    }

    fn pretty(&self) -> String {
        match self {
            Report::Built { array } => {
                let mut out = pretty_array(array);
                out.push_str("involution: verified\n");
                out
            }
            Report::Decomposed { params } => format!(
                "phi = {}\nu = {}\nsign = {}\nu parity: {}\nround-trip: ok\n",
                params.phi(),
                params.u(),
                params.sign(),
                params.u().parity()
            ),
            Report::Array { array } => pretty_array(array),
            Report::ASequence { a } => format!("A = {a}\ncoefficients = {}\n", literal(a)),
            Report::Order { found, max } => match found {
                Some(k) => format!("order: {k}\n"),
                None => format!("order: none up to {max}\n"),
            },
            Report::Pseudo { value } => format!("pseudo-involution: {value}\n"),
            Report::Sequence { seq, neutral } => {
                let mut out = String::new();
                for n in 0..=seq.order() {
                    let _ = writeln!(out, "p_{n}(x) = {}", polynomial_string(seq.polynomial(n)));
                }
                if let Some(v) = neutral {
                    let _ = writeln!(out, "neutral: {v}");
                }
                out
            }
            Report::Prop1 {
                sheffer_side,
                group_side,
            } => format!(
                "n-fold composition neutral: {sheffer_side}\nD^times = I: {group_side}\nconsistent: {}\n",
                sheffer_side == group_side
            ),
        }
    }

    fn json(&self) -> Value {
        match self {
            Report::Built { array } => {
                let mut v = json_array(array);
                v["involution"] = json!("verified");
                v
            }
            Report::Decomposed { params } => json!({
                "params": params.to_json_value(),
                "round_trip": "ok",
            }),
            Report::Array { array } => json_array(array),
            Report::ASequence { a } => json!({ "a": a.to_json_value() }),
            Report::Order { found, max } => json!({ "order": found, "max": max }),
            Report::Pseudo { value } => json!({ "pseudo_involution": value }),
            Report::Sequence { seq, neutral } => {
                let mut v = seq.to_json_value();
                if let Some(n) = neutral {
                    v["neutral"] = json!(n);
                }
                v
            }
            Report::Prop1 {
                sheffer_side,
                group_side,
            } => json!({
                "sheffer_side": sheffer_side,
                "group_side": group_side,
                "consistent": sheffer_side == group_side,
            }),
        }
    }

    fn csv(&self) -> String {
        match self {
            Report::Built { array } => {
                let mut out = array.to_matrix().to_csv();
                out.push_str("involution,verified\n");
                out
            }
            Report::Decomposed { params } => {
                let mut out = csv_series("phi", params.phi());
                out.push_str(&csv_series("u", params.u()));
                let _ = writeln!(out, "sign,{}", params.sign().as_i64());
                out.push_str("round_trip,ok\n");
                out
            }
            Report::Array { array } => array.to_matrix().to_csv(),
            Report::ASequence { a } => csv_series("a", a),
            Report::Order { found, .. } => match found {
                Some(k) => format!("order,{k}\n"),
                None => "order,none\n".to_string(),
            },
            Report::Pseudo { value } => format!("pseudo_involution,{value}\n"),
            Report::Sequence { seq, neutral } => {
                let mut out = seq.matrix().to_csv();
                if let Some(v) = neutral {
                    let _ = writeln!(out, "neutral,{v}");
                }
                out
            }
            Report::Prop1 {
                sheffer_side,
                group_side,
            } => format!(
                "sheffer_side,{sheffer_side}\ngroup_side,{group_side}\nconsistent,{}\n",
                sheffer_side == group_side
            ),
        }
    }
}

/// Full-length bracketed coefficient list.
fn literal(s: &Series) -> String {
    let cells: Vec<String> = s.coeffs().iter().map(format_rational).collect();
    format!("[{}]", cells.join(","))
}
