//! Family-tagged irrep labels and their text syntax.

use crate::casimir::{self, AlgebraId, CasimirValue, Family};
use crate::composite::{dim_composite, CompositePair};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::rootsys::{self, RootSystem, WeightVector};
use crate::young::{self, Partition};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Composite pair (sl), Young diagram (sl/so/sp), or Dynkin coefficients of the
/// fundamental weights λ_(1), λ_(2), … (any algebra; the usual label for exceptional ones).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IrrepLabel {
    Composite(CompositePair),
    Diagram(Partition),
    Weight { weight: Vec<u32> },
}

impl IrrepLabel {
    pub fn weight(coeffs: Vec<u32>) -> Self {
        IrrepLabel::Weight { weight: coeffs }
    }

    pub fn composite(upper: &[usize], lower: &[usize]) -> Self {
        IrrepLabel::Composite(CompositePair::new(Partition::of(upper), Partition::of(lower)))
    }

    pub fn diagram(rows: &[usize]) -> Self {
        IrrepLabel::Diagram(Partition::of(rows))
    }

    pub fn parse(s: &str) -> Result<Self> {
        parse_label(s)
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Composite(p) => write!(f, "{p}"),
            IrrepLabel::Diagram(p) => write!(f, "{p}"),
            IrrepLabel::Weight { weight } => {
                let terms: Vec<String> = weight
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c > 0)
                    .map(|(i, &c)| if c == 1 { format!("w{}", i + 1) } else { format!("{c}*w{}", i + 1) })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

fn perr(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(perr(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(perr(start, "expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| perr(start, "number too large"))
    }

    /// "[4,2,2]", "[2^3,1^2]", "[]", "[∅]".
    fn partition(&mut self) -> Result<Partition> {
        let start = self.pos;
        self.expect(b'[')?;
        let mut rows = Vec::new();
        if self.peek() == Some(b']') {
            self.pos += 1;
            return Ok(Partition::empty());
        }
        if self.s[self.pos..].starts_with("∅".as_bytes()) {
            self.pos += "∅".len();
            self.expect(b']')?;
            return Ok(Partition::empty());
        }
        loop {
            let r = self.number()?;
            let times = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.number()?
            } else {
                1
            };
            rows.extend(std::iter::repeat_n(r, times));
            match self.peek() {
                Some(b',') => self.pos += 1,
                Some(b']') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(perr(self.pos, "expected ',' or ']'")),
            }
        }
        Partition::new(rows).map_err(|e| perr(start, e.to_string()))
    }

    fn done(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(_) => Err(perr(self.pos, "trailing input")),
        }
    }
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0 };
    let p = c.partition()?;
    c.done()?;
    Ok(p)
}

pub fn parse_composite(s: &str) -> Result<CompositePair> {
    let mut c = Cursor { s: s.as_bytes(), pos: 0 };
    c.expect(b'(')?;
    let upper = c.partition()?;
    c.expect(b',')?;
    let lower = c.partition()?;
    c.expect(b')')?;
    c.done()?;
    Ok(CompositePair::new(upper, lower))
}

/// "1*w2", "w1 + 2*w4", "3w1", "0". Indices are 1-based.
pub fn parse_weight(s: &str) -> Result<Vec<u32>> {
    let t = s.trim();
    if t == "0" {
        return Ok(Vec::new());
    }
    let mut out: Vec<u32> = Vec::new();
    let mut offset = 0;
    for term in t.split('+') {
        let pos = offset + term.len() - term.trim_start().len();
        offset += term.len() + 1;
        let term = term.trim();
        let (coef, w) = match term.find('w') {
            Some(i) => (term[..i].trim().trim_end_matches('*').trim(), &term[i + 1..]),
            None => return Err(perr(pos, format!("term {term:?} lacks a fundamental weight wN"))),
        };
        let c: u32 = if coef.is_empty() { 1 } else { coef.parse().map_err(|_| perr(pos, format!("bad coefficient {coef:?}")))? };
        let i: usize = w.trim().parse().map_err(|_| perr(pos, format!("bad weight index {w:?}")))?;
        if i == 0 {
            return Err(perr(pos, "weights are numbered from 1"));
        }
        if out.len() < i {
            out.resize(i, 0);
        }
        out[i - 1] += c;
    }
    Ok(out)
}

pub fn parse_label(s: &str) -> Result<IrrepLabel> {
    let t = s.trim();
    if t.starts_with('(') {
        parse_composite(t).map(IrrepLabel::Composite)
    } else if t.starts_with('[') {
        parse_partition(t).map(IrrepLabel::Diagram)
    } else {
        parse_weight(t).map(IrrepLabel::weight)
    }
}

/// Pads weight labels to the rank of `g`, so equal representations compare equal.
pub fn normalize(g: &AlgebraId, label: &IrrepLabel) -> Result<IrrepLabel> {
    match label {
        IrrepLabel::Weight { weight } => {
            if weight.len() > g.rank() {
                return Err(Error::InvalidLabel(format!("{g} has rank {}, got {} coefficients", g.rank(), weight.len())));
            }
            let mut w = weight.clone();
            w.resize(g.rank(), 0);
            Ok(IrrepLabel::weight(w))
        }
        other => Ok(other.clone()),
    }
}

/// Parses `s` and normalizes it for `g`.
pub fn parse_for(g: &AlgebraId, s: &str) -> Result<IrrepLabel> {
    normalize(g, &parse_label(s)?)
}

/// Root systems are immutable; build each algebra once.
pub fn root_system(g: &AlgebraId) -> Result<Arc<RootSystem>> {
    static CACHE: OnceLock<Mutex<HashMap<AlgebraId, Arc<RootSystem>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(rs) = cache.lock().unwrap().get(g) {
        return Ok(rs.clone());
    }
    let rs = Arc::new(RootSystem::build(g)?);
    cache.lock().unwrap().insert(*g, rs.clone());
    Ok(rs)
}

/// Pads or checks Dynkin coefficients against the rank.
fn weight_vector(g: &AlgebraId, coeffs: &[u32]) -> Result<(Arc<RootSystem>, WeightVector)> {
    let rs = root_system(g)?;
    let mut c = coeffs.to_vec();
    if c.len() > g.rank() {
        return Err(Error::InvalidLabel(format!("{g} has rank {}, got {} coefficients", g.rank(), c.len())));
    }
    c.resize(g.rank(), 0);
    let w = rs.weight_from_labels(&c)?;
    Ok((rs, w))
}

/// Highest weight of a label in the ambient coordinates of `g`.
pub fn highest_weight(g: &AlgebraId, label: &IrrepLabel) -> Result<(Arc<RootSystem>, WeightVector)> {
    match label {
        IrrepLabel::Weight { weight } => weight_vector(g, weight),
        IrrepLabel::Diagram(p) => {
            let rs = root_system(g)?;
            let w = rs.weight_of_partition(p)?;
            Ok((rs, w))
        }
        IrrepLabel::Composite(p) => {
            let rs = root_system(g)?;
            let w = rs.weight_of_composite(p)?;
            Ok((rs, w))
        }
    }
}

/// Dimension through the closed forms where they exist, else the Weyl formula.
pub fn dim(g: &AlgebraId, label: &IrrepLabel) -> Result<Rational> {
    match (g.family(), label) {
        (Family::SL, IrrepLabel::Composite(p)) => Ok(dim_composite(p, g.big_n())),
        (Family::SL, IrrepLabel::Diagram(p)) => Ok(young::dim_sl(g.big_n(), p)),
        (Family::SO, IrrepLabel::Diagram(p)) => young::dim_so(g.big_n(), p),
        (Family::SP, IrrepLabel::Diagram(p)) => young::dim_sp(g.big_n(), p),
        (_, IrrepLabel::Composite(_)) => Err(Error::InvalidLabel(format!("composite labels need sl(N), got {g}"))),
        (f, IrrepLabel::Diagram(_)) if !f.is_classical() => Err(Error::InvalidLabel(format!("{g} labels are weights, e.g. \"1*w1\""))),
        _ => weyl_dim(g, label),
    }
}

/// Dimension through the Weyl formula only.
pub fn weyl_dim(g: &AlgebraId, label: &IrrepLabel) -> Result<Rational> {
    let (rs, w) = highest_weight(g, label)?;
    rootsys::weyl_dim(&rs, &w)
}

/// Casimir value through the closed forms where they exist, else (Λ, Λ+2ρ).
pub fn casimir(g: &AlgebraId, label: &IrrepLabel) -> Result<CasimirValue> {
    match (g.family(), label) {
        (Family::SL, IrrepLabel::Composite(p)) => casimir::casimir_sl_composite(g.big_n(), p),
        (Family::SL, IrrepLabel::Diagram(p)) => casimir::casimir_sl(g.big_n(), p),
        (Family::SO, IrrepLabel::Diagram(p)) => casimir::casimir_so(g.big_n(), p),
        (Family::SP, IrrepLabel::Diagram(p)) => casimir::casimir_sp(g.big_n(), p),
        _ => casimir_weyl(g, label),
    }
}

pub fn casimir_weyl(g: &AlgebraId, label: &IrrepLabel) -> Result<CasimirValue> {
    let (rs, w) = highest_weight(g, label)?;
    rootsys::casimir_weyl(&rs, &w)
}

/// The defining representation □.
pub fn box_label(g: &AlgebraId) -> IrrepLabel {
    match g.family() {
        Family::SL => IrrepLabel::composite(&[1], &[]),
        Family::SO | Family::SP => IrrepLabel::diagram(&[1]),
        f => {
            let mut w = vec![0; g.rank()];
            w[rootsys::box_index(f)] = 1;
            IrrepLabel::weight(w)
        }
    }
}

/// The adjoint representation Y₁.
pub fn adjoint_label(g: &AlgebraId) -> IrrepLabel {
    yn_label(g, 1)
}

/// The Cartan power Y_n.
pub fn yn_label(g: &AlgebraId, n: usize) -> IrrepLabel {
    match g.family() {
        Family::SL => IrrepLabel::composite(&[n], &[n]),
        Family::SO => IrrepLabel::Diagram(Partition::rect(2, n)),
        Family::SP => IrrepLabel::Diagram(Partition::rect(1, 2 * n)),
        f => {
            let mut w = vec![0; g.rank()];
            w[rootsys::adjoint_index(f).expect("exceptional")] = n as u32;
            IrrepLabel::weight(w)
        }
    }
}

/// Y_n′ for the classical series.
pub fn yn_prime_label(g: &AlgebraId, n: usize) -> Result<IrrepLabel> {
    match g.family() {
        Family::SL => Ok(IrrepLabel::Composite(CompositePair::new(Partition::rect(n, 1), Partition::rect(n, 1)))),
        Family::SO => Ok(IrrepLabel::Diagram(Partition::rect(2 * n, 1))),
        Family::SP => Ok(IrrepLabel::Diagram(Partition::rect(n, 2))),
        _ => Err(Error::Unsupported(format!("Y_n' is not a single family of labels for {g}"))),
    }
}
