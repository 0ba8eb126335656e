//! Versioned JSON tables used as ground truth.
//!
//! Every file is `{name, version, description, checksum, data}` where `checksum` is the
//! SHA-256 of the compact, key-sorted serialization of `data`. The files are embedded at
//! compile time; a directory given explicitly or through `CASIMIRLAB_FIXTURES` takes
//! precedence, and every file is validated before use.

use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::label::IrrepLabel;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

pub const ENV_VAR: &str = "CASIMIRLAB_FIXTURES";

pub const NAMES: [&str; 9] = [
    "table1",
    "tables_2",
    "table_4_1",
    "table_4_2",
    "sl_ad_powers",
    "so_ad_powers",
    "exceptional_box_y2prime",
    "e8_ad_yn",
    "yn_times_ad",
];

fn embedded(name: &str) -> Option<&'static str> {
    Some(match name {
        "table1" => include_str!("../fixtures/table1.json"),
        "tables_2" => include_str!("../fixtures/tables_2.json"),
        "table_4_1" => include_str!("../fixtures/table_4_1.json"),
        "table_4_2" => include_str!("../fixtures/table_4_2.json"),
        "sl_ad_powers" => include_str!("../fixtures/sl_ad_powers.json"),
        "so_ad_powers" => include_str!("../fixtures/so_ad_powers.json"),
        "exceptional_box_y2prime" => include_str!("../fixtures/exceptional_box_y2prime.json"),
        "e8_ad_yn" => include_str!("../fixtures/e8_ad_yn.json"),
        "yn_times_ad" => include_str!("../fixtures/yn_times_ad.json"),
        _ => return None,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    pub version: u32,
    pub description: String,
    pub checksum: String,
    pub data: serde_json::Value,
}

impl Fixture {
    pub fn parse(text: &str) -> Result<Fixture> {
        let f: Fixture = serde_json::from_str(text).map_err(|e| Error::Fixture(format!("malformed fixture: {e}")))?;
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        let actual = checksum(&self.data)?;
        if actual != self.checksum {
            return Err(Error::Fixture(format!(
                "checksum mismatch in {}: recorded {}, computed {}",
                self.name, self.checksum, actual
            )));
        }
        Ok(())
    }

    pub fn decode<T: DeserializeOwned>(&self) -> Result<T> {
        serde_json::from_value(self.data.clone()).map_err(|e| Error::Fixture(format!("{}: {e}", self.name)))
    }
}

/// SHA-256 (hex) of the compact serialization; `serde_json::Value` objects keep keys sorted.
pub fn checksum(data: &serde_json::Value) -> Result<String> {
    let text = serde_json::to_string(data).map_err(|e| Error::Fixture(e.to_string()))?;
    Ok(hex::encode(Sha256::digest(text.as_bytes())))
}

/// Where fixtures come from: a directory on disk or the embedded copies.
#[derive(Debug, Clone, Default)]
pub struct FixtureStore {
    dir: Option<PathBuf>,
}

impl FixtureStore {
    pub fn embedded() -> Self {
        FixtureStore { dir: None }
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Self {
        FixtureStore { dir: Some(dir.as_ref().to_path_buf()) }
    }

    /// An explicit directory wins over the environment, which wins over the embedded copies.
    pub fn resolve(explicit: Option<&Path>) -> Self {
        match explicit {
            Some(d) => Self::from_dir(d),
            None => match std::env::var_os(ENV_VAR) {
                Some(d) if !d.is_empty() => Self::from_dir(PathBuf::from(d)),
                _ => Self::embedded(),
            },
        }
    }

    pub fn dir(&self) -> Option<&Path> {
        self.dir.as_deref()
    }

    pub fn load(&self, name: &str) -> Result<Fixture> {
        let text = match &self.dir {
            Some(d) => {
                let path = d.join(format!("{name}.json"));
                std::fs::read_to_string(&path).map_err(|e| Error::Fixture(format!("{}: {e}", path.display())))?
            }
            None => embedded(name).ok_or_else(|| Error::Fixture(format!("unknown fixture {name}")))?.to_string(),
        };
        let f = Fixture::parse(&text)?;
        if f.name != name {
            return Err(Error::Fixture(format!("file {name}.json declares name {}", f.name)));
        }
        Ok(f)
    }

    pub fn get<T: DeserializeOwned>(&self, name: &str) -> Result<T> {
        self.load(name)?.decode()
    }

    pub fn table1(&self) -> Result<Table1> {
        self.get("table1")
    }
    pub fn tables_2(&self) -> Result<Tables2> {
        self.get("tables_2")
    }
    pub fn table_4_1(&self) -> Result<Table41> {
        self.get("table_4_1")
    }
    pub fn table_4_2(&self) -> Result<Table42> {
        self.get("table_4_2")
    }
    pub fn sl_ad_powers(&self) -> Result<SlAdPowers> {
        self.get("sl_ad_powers")
    }
    pub fn so_ad_powers(&self) -> Result<SoAdPowers> {
        self.get("so_ad_powers")
    }
    pub fn exceptional_box_y2prime(&self) -> Result<ExceptionalY2Prime> {
        self.get("exceptional_box_y2prime")
    }
    pub fn e8_ad_yn(&self) -> Result<E8AdYn> {
        self.get("e8_ad_yn")
    }
    pub fn yn_times_ad(&self) -> Result<YnTimesAd> {
        self.get("yn_times_ad")
    }
}

/// Loads through [`FixtureStore::resolve`] with no explicit directory.
pub fn load(name: &str) -> Result<Fixture> {
    FixtureStore::resolve(None).load(name)
}

/// A label written in the text syntax of [`crate::label`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LabelText(pub String);

impl LabelText {
    pub fn parse(&self) -> Result<IrrepLabel> {
        IrrepLabel::parse(&self.0)
    }

    /// "0" marks a zero-dimensional multiplet.
    pub fn is_absent(&self) -> bool {
        self.0.trim() == "0"
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Term {
    pub label: LabelText,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table1Row {
    pub algebra: String,
    #[serde(rename = "N")]
    pub big_n: Option<u32>,
    #[serde(with = "crate::exact::serde_str")]
    pub alpha: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub beta: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub gamma: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub t: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub alpha_hat: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub beta_hat: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub gamma_hat: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub dim_box: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub dim_g: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub c2_box: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub c2_box_times_dim_box: Rational,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table1 {
    pub rows: Vec<Table1Row>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Multiplet2 {
    pub name: String,
    pub sl: Vec<LabelText>,
    pub so: Vec<LabelText>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Tables2 {
    pub tables: BTreeMap<String, Vec<String>>,
    pub multiplets: Vec<Multiplet2>,
}

impl Tables2 {
    pub fn multiplet(&self, name: &str) -> Option<&Multiplet2> {
        self.multiplets.iter().find(|m| m.name == name)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row41 {
    #[serde(rename = "L1")]
    pub l1: LabelText,
    #[serde(rename = "L2")]
    pub l2: LabelText,
    #[serde(rename = "L3")]
    pub l3: LabelText,
    #[serde(rename = "L4")]
    pub l4: LabelText,
    #[serde(rename = "Yn")]
    pub yn: LabelText,
}

impl Row41 {
    pub fn multiplets(&self) -> [&LabelText; 4] {
        [&self.l1, &self.l2, &self.l3, &self.l4]
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table41 {
    pub eigenvalue_slots: BTreeMap<String, String>,
    /// n → family → row.
    pub levels: BTreeMap<String, BTreeMap<String, Row41>>,
}

impl Table41 {
    pub fn row(&self, family: &str, n: usize) -> Option<&Row41> {
        self.levels.get(&n.to_string())?.get(family)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Row42 {
    pub algebra: String,
    #[serde(rename = "N")]
    pub big_n: Option<u32>,
    #[serde(with = "crate::exact::serde_str")]
    pub alpha_hat: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub beta_hat_prime: Rational,
    #[serde(with = "crate::exact::serde_str")]
    pub gamma_hat_prime: Rational,
    #[serde(rename = "L1")]
    pub l1: LabelText,
    #[serde(rename = "L2")]
    pub l2: LabelText,
    #[serde(rename = "L3")]
    pub l3: LabelText,
    #[serde(rename = "L4")]
    pub l4: LabelText,
}

impl Row42 {
    pub fn multiplets(&self) -> [&LabelText; 4] {
        [&self.l1, &self.l2, &self.l3, &self.l4]
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Table42 {
    pub eigenvalues: BTreeMap<String, String>,
    pub rows: Vec<Row42>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FactorTerms {
    pub factor: LabelText,
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SlAdPowers {
    pub ad2: Vec<Term>,
    pub ad3: Vec<Term>,
    pub ad4: Vec<Term>,
    /// k → (a₀, …, a_k).
    pub coefficients: BTreeMap<String, Vec<u64>>,
    pub a0: Vec<u64>,
    pub box_powers: BTreeMap<String, Vec<Term>>,
    pub ad_times_3_21: FactorTerms,
}

impl SlAdPowers {
    pub fn ad(&self, k: usize) -> Option<&[Term]> {
        match k {
            2 => Some(&self.ad2),
            3 => Some(&self.ad3),
            4 => Some(&self.ad4),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SoAdPowers {
    pub valid_for_n_above: u32,
    pub ad2: Vec<Term>,
    pub ad3: Vec<Term>,
    pub ad4: Vec<Term>,
}

impl SoAdPowers {
    pub fn ad(&self, k: usize) -> Option<&[Term]> {
        match k {
            2 => Some(&self.ad2),
            3 => Some(&self.ad3),
            4 => Some(&self.ad4),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DimTerm {
    pub label: LabelText,
    pub dim: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Y2PrimeLine {
    pub algebra: String,
    pub y2prime: LabelText,
    pub y2prime_dim: u64,
    pub box_dim: u64,
    pub terms: Vec<DimTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExceptionalY2Prime {
    pub lines: Vec<Y2PrimeLine>,
}

impl ExceptionalY2Prime {
    pub fn line(&self, algebra: &str) -> Option<&Y2PrimeLine> {
        self.lines.iter().find(|l| l.algebra == algebra)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LinearTerm {
    /// Per fundamental weight: [slope, intercept] of the coefficient as a function of n.
    pub coefficients: Vec<[i64; 2]>,
    pub multiplicity: u64,
}

impl LinearTerm {
    /// The Dynkin coefficients at `n`, or `None` when one of them is negative.
    pub fn at(&self, n: i64) -> Option<Vec<u32>> {
        self.coefficients
            .iter()
            .map(|[s, c]| {
                let v = s * n + c;
                u32::try_from(v).ok()
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct E8AdYn {
    pub terms: Vec<LinearTerm>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HorizontalSumException {
    pub sl: String,
    pub unmatched_copies: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct YnTimesAd {
    /// n → family → terms.
    pub levels: BTreeMap<String, BTreeMap<String, Vec<Term>>>,
    pub horizontal_sum_exceptions: Vec<HorizontalSumException>,
}

impl YnTimesAd {
    pub fn terms(&self, family: &str, n: usize) -> Option<&[Term]> {
        self.levels.get(&n.to_string())?.get(family).map(|v| v.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_embedded_fixture_validates() {
        let store = FixtureStore::embedded();
        for name in NAMES {
            let f = store.load(name).unwrap();
            assert_eq!(f.name, name);
            assert_eq!(f.version, 1);
        }
    }

    #[test]
    fn typed_views_decode() {
        let s = FixtureStore::embedded();
        assert_eq!(s.table1().unwrap().rows.len(), 23);
        assert_eq!(s.tables_2().unwrap().multiplets.len(), 18);
        assert_eq!(s.table_4_1().unwrap().levels.len(), 5);
        assert_eq!(s.table_4_2().unwrap().rows.len(), 22);
        assert_eq!(s.sl_ad_powers().unwrap().a0.len(), 10);
        assert_eq!(s.so_ad_powers().unwrap().valid_for_n_above, 16);
        assert_eq!(s.exceptional_box_y2prime().unwrap().lines.len(), 5);
        assert_eq!(s.e8_ad_yn().unwrap().terms.len(), 6);
        assert_eq!(s.yn_times_ad().unwrap().horizontal_sum_exceptions.len(), 1);
    }

    #[test]
    fn every_label_in_every_fixture_parses() {
        let s = FixtureStore::embedded();
        let mut texts: Vec<LabelText> = Vec::new();
        let t2 = s.tables_2().unwrap();
        for m in &t2.multiplets {
            texts.extend(m.sl.iter().cloned());
            texts.extend(m.so.iter().cloned());
        }
        for fams in s.table_4_1().unwrap().levels.values() {
            for row in fams.values() {
                texts.extend(row.multiplets().into_iter().cloned());
                texts.push(row.yn.clone());
            }
        }
        for row in s.table_4_2().unwrap().rows {
            texts.extend(row.multiplets().into_iter().cloned());
        }
        let sl = s.sl_ad_powers().unwrap();
        for k in 2..=4 {
            texts.extend(sl.ad(k).unwrap().iter().map(|t| t.label.clone()));
        }
        let so = s.so_ad_powers().unwrap();
        for k in 2..=4 {
            texts.extend(so.ad(k).unwrap().iter().map(|t| t.label.clone()));
        }
        for l in s.exceptional_box_y2prime().unwrap().lines {
            texts.push(l.y2prime.clone());
            texts.extend(l.terms.iter().map(|t| t.label.clone()));
        }
        assert!(texts.len() > 200);
        for t in texts.iter().filter(|t| !t.is_absent()) {
            t.parse().unwrap_or_else(|e| panic!("{}: {e}", t.0));
        }
    }

    #[test]
    fn tampered_data_is_rejected() {
        let text = embedded("table1").unwrap().replacen("\"-2/1\"", "\"-3/1\"", 1);
        assert!(matches!(Fixture::parse(&text), Err(Error::Fixture(_))));
    }

    #[test]
    fn directory_override_reads_from_disk() {
        let dir = std::env::temp_dir().join(format!("casimirlab-fixtures-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        std::fs::write(dir.join("e8_ad_yn.json"), embedded("e8_ad_yn").unwrap()).unwrap();
        let store = FixtureStore::from_dir(&dir);
        assert_eq!(store.e8_ad_yn().unwrap().terms.len(), 6);
        assert!(store.load("table1").is_err());
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn linear_terms_drop_negative_coefficients() {
        let e8 = FixtureStore::embedded().e8_ad_yn().unwrap();
        let present = |n| e8.terms.iter().filter(|t| t.at(n).is_some()).count();
        assert_eq!(present(1), 5);
        assert_eq!(present(2), 6);
    }
}
