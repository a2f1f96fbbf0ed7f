use braid_zeta::algebra::{LaurentPoly, PolyS, RationalFn, RationalQ};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

/// A computed value together with its metadata, ready to be printed.
pub struct Output {
    pub kind: &'static str,
    pub value: Payload,
    pub meta: Map<String, Value>,
    /// Extra text lines printed after the value in text mode.
    pub notes: Vec<String>,
}

pub enum Payload {
    Zeta(RationalFn),
    Scalar(RationalQ),
    Poly(LaurentPoly),
    Report,
}

impl Output {
    pub fn new(kind: &'static str, value: Payload) -> Self {
        Output { kind, value, meta: Map::new(), notes: Vec::new() }
    }

    pub fn meta(mut self, key: &str, v: impl Into<Value>) -> Self {
        self.meta.insert(key.to_string(), v.into());
        self
    }

    pub fn note(mut self, line: impl Into<String>) -> Self {
        self.notes.push(line.into());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut lines = Vec::new();
                match &self.value {
                    Payload::Zeta(f) => lines.push(rational_fn_text(f)),
                    Payload::Scalar(r) => lines.push(r.to_string()),
                    Payload::Poly(p) => lines.push(p.to_string()),
                    Payload::Report => {}
                }
                lines.extend(self.notes.iter().cloned());
                lines.join("\n")
            }
            Format::Latex => match &self.value {
                Payload::Zeta(f) => rational_fn_latex(f),
                Payload::Scalar(r) => rational_q_latex(r),
                Payload::Poly(p) => p.to_latex(),
                Payload::Report => self.notes.join("\n"),
            },
            Format::Json => {
                let (num, den) = match &self.value {
                    Payload::Zeta(f) => (poly_s_json(f.num()), poly_s_json(f.den())),
                    Payload::Scalar(r) => (laurent_json(r.num()), laurent_json(r.den())),
                    Payload::Poly(p) => (laurent_json(p), laurent_json(&LaurentPoly::one())),
                    Payload::Report => (json!([]), json!([])),
                };
                json!({ "kind": self.kind, "num": num, "den": den, "meta": self.meta }).to_string()
            }
        }
    }
}

fn terms_json(p: &LaurentPoly) -> Value {
    Value::Array(p.terms().iter().map(|(e, c)| json!([e, c.to_string()])).collect())
}

/// `[[deg, [[exp, "coef"], ...]], ...]` over the nonzero coefficients in `s`.
pub fn poly_s_json(p: &PolyS) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| json!([d, terms_json(c)]))
            .collect(),
    )
}

/// A Laurent polynomial as a degree-zero element of the same schema.
pub fn laurent_json(p: &LaurentPoly) -> Value {
    if p.is_zero() {
        json!([])
    } else {
        json!([[0, terms_json(p)]])
    }
}

fn factor_text(p: &PolyS) -> String {
    if p.is_monomial() {
        p.to_string()
    } else {
        format!("({p})")
    }
}

fn product_text(k: usize, rest: &PolyS) -> String {
    let mut factors = Vec::new();
    match k {
        0 => {}
        1 => factors.push("(1-s)".to_string()),
        k => factors.push(format!("(1-s)^{k}")),
    }
    if !rest.is_one() || factors.is_empty() {
        factors.push(factor_text(rest));
    }
    if factors.len() == 1 {
        factors.pop().unwrap()
    } else {
        format!("({})", factors.join("*"))
    }
}

/// Powers of `1 - s` on each side, with the common power cancelled.
fn split(f: &RationalFn) -> (usize, PolyS, usize, PolyS) {
    let (a, num) = f.num().split_one_minus_s();
    let (b, den) = f.den().split_one_minus_s();
    let k = a.min(b);
    (a - k, num, b - k, den)
}

/// Factored text when a power of `1 - s` divides either side, else expanded.
pub fn rational_fn_text(f: &RationalFn) -> String {
    let (a, num, b, den) = split(f);
    if a == 0 && b == 0 {
        if den.is_one() {
            return num.to_string();
        }
        return format!("{} / {}", factor_text(&num), factor_text(&den));
    }
    let num_text = product_text(a, &num);
    if b == 0 && den.is_one() {
        return num_text;
    }
    format!("{} / {}", num_text, product_text(b, &den))
}

fn product_latex(k: usize, rest: &PolyS) -> String {
    let mut out = String::new();
    match k {
        0 => {}
        1 => out.push_str("(1 - s)"),
        k => out.push_str(&format!("(1 - s)^{{{k}}}")),
    }
    if !rest.is_one() || out.is_empty() {
        if out.is_empty() || rest.is_monomial() {
            out.push_str(&rest.to_latex());
        } else {
            out.push_str(&format!("\\left({}\\right)", rest.to_latex()));
        }
    }
    out
}

pub fn rational_fn_latex(f: &RationalFn) -> String {
    let (a, num, b, den) = split(f);
    format!("\\frac{{{}}}{{{}}}", product_latex(a, &num), product_latex(b, &den))
}

pub fn rational_q_latex(r: &RationalQ) -> String {
    if r.den().is_one() {
        return r.num().to_latex();
    }
    format!("\\frac{{{}}}{{{}}}", r.num().to_latex(), r.den().to_latex())
}
