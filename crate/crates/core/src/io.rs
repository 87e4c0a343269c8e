//! JSON containers for expansions, vector-valued forms, Jacobi forms and
//! cyclotomic numbers.

use std::fs;
use std::path::Path;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cyclo::CyclotomicNumber;
use crate::discform::DiscriminantForm;
use crate::error::{Result, WeilError};
use crate::expansions::{format_index, parse_index, Coeff, HarmonicExpansion, VectorForm};
use crate::jacobi::JacobiForm;

/// A coefficient on the wire: `"num/den"` (exact) or a bare number.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffValue {
    Text(String),
    Number(f64),
}

impl Default for CoeffValue {
    fn default() -> Self {
        CoeffValue::Text("0/1".into())
    }
}

impl From<&Coeff> for CoeffValue {
    fn from(c: &Coeff) -> Self {
        match c {
            Coeff::Exact(_) => CoeffValue::Text(c.to_string()),
            Coeff::Float(x) => CoeffValue::Number(*x),
        }
    }
}

impl TryFrom<&CoeffValue> for Coeff {
    type Error = WeilError;

    fn try_from(v: &CoeffValue) -> Result<Coeff> {
        match v {
            CoeffValue::Text(s) => s.parse(),
            CoeffValue::Number(x) => Ok(Coeff::Float(*x)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ExpansionKind {
    Scalar,
    Vector,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoeffRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
    pub n: String,
    #[serde(default)]
    pub c_plus: CoeffValue,
    #[serde(default)]
    pub c_minus: CoeffValue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExpansionFile {
    pub kind: ExpansionKind,
    pub m: u64,
    pub k: i64,
    #[serde(default)]
    pub dual: bool,
    pub weight_num: i64,
    pub coeffs: Vec<CoeffRecord>,
    pub window: [String; 2],
}

/// A decoded expansion container.
#[derive(Clone, Debug, PartialEq)]
pub enum Expansion {
    Scalar {
        f: HarmonicExpansion,
        m: u64,
        k: i64,
    },
    Vector {
        f: VectorForm,
        k: i64,
    },
}

fn window_strings(w: (Rational64, Rational64)) -> [String; 2] {
    [format_index(w.0), format_index(w.1)]
}

fn parse_window(w: &[String; 2]) -> Result<(Rational64, Rational64)> {
    let (lo, hi) = (parse_index(&w[0])?, parse_index(&w[1])?);
    if lo > hi {
        return Err(WeilError::Parse(format!("empty window [{lo}, {hi}]")));
    }
    Ok((lo, hi))
}

fn records(f: &HarmonicExpansion, gamma: Option<i64>) -> impl Iterator<Item = CoeffRecord> + '_ {
    f.terms().map(move |(n, t)| CoeffRecord {
        gamma,
        n: format_index(*n),
        c_plus: (&t.plus).into(),
        c_minus: (&t.minus).into(),
    })
}

impl ExpansionFile {
    pub fn from_scalar(f: &HarmonicExpansion, m: u64, k: i64) -> Self {
        ExpansionFile {
            kind: ExpansionKind::Scalar,
            m,
            k,
            dual: false,
            weight_num: f.weight_num(),
            coeffs: records(f, None).collect(),
            window: window_strings(f.window()),
        }
    }

    /// Fails if the components were built on different windows.
    pub fn from_vector(f: &VectorForm, k: i64) -> Result<Self> {
        let window = f.components()[0].window();
        if f.components().iter().any(|c| c.window() != window) {
            return Err(WeilError::Invalid(
                "components have different windows".into(),
            ));
        }
        Ok(ExpansionFile {
            kind: ExpansionKind::Vector,
            m: f.df.m,
            k,
            dual: f.dual,
            weight_num: f.weight_num(),
            coeffs: f
                .components()
                .iter()
                .enumerate()
                .flat_map(|(g, c)| records(c, Some(g as i64)))
                .collect(),
            window: window_strings(window),
        })
    }

    pub fn decode(&self) -> Result<Expansion> {
        if self.m == 0 {
            return Err(WeilError::Parse("m must be positive".into()));
        }
        let window = parse_window(&self.window)?;
        match self.kind {
            ExpansionKind::Scalar => {
                let mut f = HarmonicExpansion::new(self.weight_num, window);
                for r in &self.coeffs {
                    if r.gamma.is_some() {
                        return Err(WeilError::Parse("scalar coefficient with gamma".into()));
                    }
                    let n = parse_index(&r.n)?;
                    let sum = (
                        f.plus(n).add(&(&r.c_plus).try_into()?),
                        f.minus(n).add(&(&r.c_minus).try_into()?),
                    );
                    f.set(n, sum.0, sum.1)?;
                }
                Ok(Expansion::Scalar {
                    f,
                    m: self.m,
                    k: self.k,
                })
            }
            ExpansionKind::Vector => {
                let df = DiscriminantForm::new(self.m);
                let mut f = VectorForm::zero(df, self.dual, self.weight_num, window);
                for r in &self.coeffs {
                    let g = r.gamma.ok_or_else(|| {
                        WeilError::Parse("vector coefficient without gamma".into())
                    })?;
                    let n = parse_index(&r.n)?;
                    let comp = f.component(g);
                    let sum = (
                        comp.plus(n).add(&(&r.c_plus).try_into()?),
                        comp.minus(n).add(&(&r.c_minus).try_into()?),
                    );
                    f.set(g, n, sum.0, sum.1)?;
                }
                Ok(Expansion::Vector { f, k: self.k })
            }
        }
    }
}

impl Expansion {
    pub fn encode(&self) -> Result<ExpansionFile> {
        match self {
            Expansion::Scalar { f, m, k } => Ok(ExpansionFile::from_scalar(f, *m, *k)),
            Expansion::Vector { f, k } => ExpansionFile::from_vector(f, *k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiRecord {
    #[serde(rename = "D")]
    pub d: i64,
    pub r: i64,
    pub v: CoeffValue,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JacobiFile {
    pub kind: String,
    pub k: i64,
    pub m: u64,
    pub c_plus: Vec<JacobiRecord>,
    #[serde(default)]
    pub c_minus: Vec<JacobiRecord>,
    /// Range of D on which the data is complete; defaults to the hull of
    /// the stored keys.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d_window: Option<[i64; 2]>,
}

impl JacobiFile {
    pub fn from_form(phi: &JacobiForm) -> Self {
        let recs = |map: &std::collections::BTreeMap<(i64, u64), Coeff>| {
            map.iter()
                .map(|(&(d, r), c)| JacobiRecord {
                    d,
                    r: r as i64,
                    v: c.into(),
                })
                .collect()
        };
        let (lo, hi) = phi.d_window();
        JacobiFile {
            kind: "jacobi".into(),
            k: phi.k,
            m: phi.m,
            c_plus: recs(phi.plus()),
            c_minus: recs(phi.minus()),
            d_window: Some([lo, hi]),
        }
    }

    pub fn decode(&self) -> Result<JacobiForm> {
        if self.kind != "jacobi" {
            return Err(WeilError::Parse(format!(
                "expected kind \"jacobi\", got {:?}",
                self.kind
            )));
        }
        if self.m == 0 {
            return Err(WeilError::Parse("m must be positive".into()));
        }
        let [lo, hi] = match self.d_window {
            Some(w) => w,
            None => {
                let ds = self.c_plus.iter().chain(&self.c_minus).map(|r| r.d);
                [ds.clone().min().unwrap_or(0), ds.max().unwrap_or(0)]
            }
        };
        if lo > hi {
            return Err(WeilError::Parse(format!("empty D window [{lo}, {hi}]")));
        }
        let mut phi = JacobiForm::new(self.k, self.m, lo, hi);
        for r in &self.c_plus {
            phi.set_plus(r.d, r.r, (&r.v).try_into()?)?;
        }
        for r in &self.c_minus {
            phi.set_minus(r.d, r.r, (&r.v).try_into()?)?;
        }
        Ok(phi)
    }
}

/// {"N": order, "coeffs": [["num/den", j], ...]} over the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycloJson {
    #[serde(rename = "N")]
    pub order: u64,
    pub coeffs: Vec<(String, u64)>,
}

impl From<&CyclotomicNumber> for CycloJson {
    fn from(x: &CyclotomicNumber) -> Self {
        CycloJson {
            order: x.order(),
            coeffs: x
                .coefficients()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| (format!("{}/{}", c.numer(), c.denom()), j as u64))
                .collect(),
        }
    }
}

impl TryFrom<&CycloJson> for CyclotomicNumber {
    type Error = WeilError;

    fn try_from(v: &CycloJson) -> Result<CyclotomicNumber> {
        if v.order == 0 {
            return Err(WeilError::Parse("N must be positive".into()));
        }
        let mut acc = CyclotomicNumber::zero(v.order);
        for (c, j) in &v.coeffs {
            let q = match c.parse::<Coeff>()? {
                Coeff::Exact(q) => q,
                Coeff::Float(_) => {
                    return Err(WeilError::Parse(format!("inexact coefficient `{c}`")))
                }
            };
            let term = CyclotomicNumber::root_in((*j % v.order) as i64, v.order, v.order);
            acc += &term.scale(&q);
        }
        Ok(acc)
    }
}

/// {"m": int, "sig": [b+, b-]}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscformJson {
    pub m: u64,
    pub sig: [u32; 2],
}

impl From<&DiscriminantForm> for DiscformJson {
    fn from(d: &DiscriminantForm) -> Self {
        DiscformJson {
            m: d.m,
            sig: [d.sig.0, d.sig.1],
        }
    }
}

impl From<DiscformJson> for DiscriminantForm {
    fn from(d: DiscformJson) -> Self {
        DiscriminantForm::with_signature(d.m, (d.sig[0], d.sig[1]))
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    Ok(serde_json::from_str(&fs::read_to_string(path)?)?)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    fs::write(path, s)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use num_bigint::BigInt;
    use num_rational::BigRational;

    use super::*;
    use crate::isomap::split_to_vector;

    fn big_ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn scalar_round_trip() {
        let mut g = HarmonicExpansion::new(1, (Rational64::from(-4), Rational64::from(30)));
        g.set_plus(Rational64::from(0), Coeff::int(1)).unwrap();
        g.set_plus(Rational64::from(1), Coeff::int(2)).unwrap();
        g.set_minus(Rational64::from(-4), Coeff::Float(0.25))
            .unwrap();
        let file = ExpansionFile::from_scalar(&g, 1, 0);
        let text = serde_json::to_string(&file).unwrap();
        let back: ExpansionFile = serde_json::from_str(&text).unwrap();
        assert_eq!(
            back.decode().unwrap(),
            Expansion::Scalar { f: g, m: 1, k: 0 }
        );
        assert!(text.contains("\"c_plus\":\"2/1\""));
        assert!(text.contains("\"c_minus\":0.25"));
    }

    #[test]
    fn vector_round_trip() {
        let v = split_to_vector(&HarmonicExpansion::theta(40), 1, 0).unwrap();
        let file = ExpansionFile::from_vector(&v, 0).unwrap();
        assert_eq!(file.kind, ExpansionKind::Vector);
        assert_eq!(file.decode().unwrap(), Expansion::Vector { f: v, k: 0 });
    }

    #[test]
    fn minimal_documents_parse() {
        let text = r#"{"kind":"scalar","m":1,"k":0,"weight_num":1,
            "coeffs":[{"n":"0","c_plus":"1"},{"n":"1/1","c_plus":2}],
            "window":["0/1","3/1"]}"#;
        let file: ExpansionFile = serde_json::from_str(text).unwrap();
        let Expansion::Scalar { f, .. } = file.decode().unwrap() else {
            panic!("scalar expected")
        };
        assert_eq!(f.plus(Rational64::from(0)), Coeff::int(1));
        assert_eq!(f.plus(Rational64::from(1)), Coeff::Float(2.0));
        let bad = text.replace("\"0/1\",\"3/1\"", "\"3/1\",\"0/1\"");
        let file: ExpansionFile = serde_json::from_str(&bad).unwrap();
        assert!(file.decode().is_err());
    }

    #[test]
    fn jacobi_round_trip() {
        let mut phi = JacobiForm::new(2, 3, -12, 12);
        phi.set_plus(-12, 0, Coeff::int(1)).unwrap();
        phi.set_plus(1, 5, Coeff::ratio(2, 3)).unwrap();
        phi.set_minus(12, 0, Coeff::Float(-1.5)).unwrap();
        let file = JacobiFile::from_form(&phi);
        let text = serde_json::to_string(&file).unwrap();
        assert!(text.contains("\"D\":-12"));
        let back: JacobiFile = serde_json::from_str(&text).unwrap();
        assert_eq!(back.decode().unwrap(), phi);
    }

    #[test]
    fn cyclotomic_round_trip() {
        let x = &CyclotomicNumber::root_of_unity(3, 8)
            + &CyclotomicNumber::from_rational(8, &big_ratio(-2, 7));
        let j = CycloJson::from(&x);
        assert_eq!(j.order, 8);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with("{\"N\":8,"));
        let back: CycloJson = serde_json::from_str(&text).unwrap();
        assert_eq!(CyclotomicNumber::try_from(&back).unwrap(), x);
    }

    #[test]
    fn discform_json() {
        let d: DiscformJson = serde_json::from_str(r#"{"m":5,"sig":[2,1]}"#).unwrap();
        assert_eq!(DiscriminantForm::from(d), DiscriminantForm::new(5));
    }
}
