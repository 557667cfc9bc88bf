//! Knowledge base of known weight-enumerator parameters and an append-only,
//! verify-before-persist log of discovered codes.
//!
//! The known-parameter dataset ships as plain text, one record per line:
//!
//! ```text
//! <length> <type:I|II> <form> <gamma|-> <beta|alpha> <aut_orders:csv|-> <source>
//! ```
//!
//! `#` starts a comment; `#= <length> <form> <gamma|-> <count>` lines declare
//! per-bucket record counts that the loader re-verifies after merging, so a
//! truncated or mangled dataset fails loudly. Set-builder entries from the
//! literature are expanded at dataset-authoring time, not parse time.
//!
//! Result records use the same conventions:
//!
//! ```text
//! <group_id> <n> <hex_row> <d> <form> <gamma|-> <beta|alpha> <seed> <evaluations> [aut_order]
//! ```

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::code::{
    classify_code, CodeType, EnumeratorClass, Form, FormParams, SelfDualCode,
};
use crate::gf2::BitWord;
use crate::group::{FiniteGroup, GroupRingElement};

/// The known-parameter dataset shipped with the crate.
pub const SHIPPED_KNOWN_DATASET: &str = include_str!("../data/known_params.txt");

#[derive(Debug, Error)]
pub enum RegistryError {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("bucket count mismatch for {bucket}: header says {declared}, dataset has {actual}")]
    BucketMismatch {
        bucket: String,
        declared: usize,
        actual: usize,
    },
    #[error("record failed verification: {0}")]
    Verify(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// A known parameter point (length, form, γ, β/α) with any recorded
/// automorphism-group orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnownParamRecord {
    pub length: usize,
    pub code_type: CodeType,
    pub form: Form,
    pub gamma: Option<i64>,
    pub value: i64,
    pub aut_orders: BTreeSet<u64>,
    pub source: String,
}

/// Answer to "is this parameter combination new?".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NewnessVerdict {
    NewParameters,
    KnownParameters,
    /// The parameters are known but the supplied automorphism-group order is
    /// not among the recorded ones.
    KnownParametersNewAutOrder,
}

impl fmt::Display for NewnessVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NewnessVerdict::NewParameters => "new_parameters",
            NewnessVerdict::KnownParameters => "known_parameters",
            NewnessVerdict::KnownParametersNewAutOrder => "known_parameters_new_aut_order",
        })
    }
}

type ParamKey = (usize, Form, Option<i64>, i64);

/// In-memory index of known parameter points.
#[derive(Debug, Default)]
pub struct Registry {
    records: BTreeMap<ParamKey, KnownParamRecord>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry::default()
    }

    /// Parse a dataset, merge duplicate parameter points (union of aut
    /// orders), and check declared bucket counts.
    pub fn load_known(text: &str) -> Result<Self, RegistryError> {
        let mut reg = Registry::default();
        let mut declared: Vec<(String, usize, Form, Option<i64>, usize)> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("#=") {
                declared.push(parse_bucket_decl(rest, lineno + 1)?);
                continue;
            }
            if line.starts_with('#') {
                continue;
            }
            let rec = parse_known_line(line, lineno + 1)?;
            reg.merge(rec);
        }
        for (bucket, length, form, gamma, count) in declared {
            let actual = reg
                .records
                .values()
                .filter(|r| r.length == length && r.form == form && r.gamma == gamma)
                .count();
            if actual != count {
                return Err(RegistryError::BucketMismatch {
                    bucket,
                    declared: count,
                    actual,
                });
            }
        }
        Ok(reg)
    }

    /// The dataset shipped with the crate.
    pub fn shipped() -> Self {
        Self::load_known(SHIPPED_KNOWN_DATASET).expect("shipped dataset must parse")
    }

    fn merge(&mut self, rec: KnownParamRecord) {
        let key = (rec.length, rec.form, rec.gamma, rec.value);
        match self.records.get_mut(&key) {
            Some(existing) => {
                existing.aut_orders.extend(rec.aut_orders);
            }
            None => {
                self.records.insert(key, rec);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn records(&self) -> impl Iterator<Item = &KnownParamRecord> {
        self.records.values()
    }

    pub fn get(&self, length: usize, form: Form, gamma: Option<i64>, value: i64) -> Option<&KnownParamRecord> {
        self.records.get(&(length, form, gamma, value))
    }

    /// Parameter-level newness; the automorphism order refines the verdict
    /// only when the caller supplies one that the record lacks.
    pub fn is_new(
        &self,
        length: usize,
        params: &FormParams,
        aut_order: Option<u64>,
    ) -> NewnessVerdict {
        match self.get(length, params.form(), params.gamma(), params.value()) {
            None => NewnessVerdict::NewParameters,
            Some(rec) => match aut_order {
                Some(aut) if !rec.aut_orders.contains(&aut) => {
                    NewnessVerdict::KnownParametersNewAutOrder
                }
                _ => NewnessVerdict::KnownParameters,
            },
        }
    }

    /// Serialize to the dataset grammar (no header).
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for r in self.records.values() {
            let gamma = r.gamma.map_or("-".to_string(), |g| g.to_string());
            let auts = if r.aut_orders.is_empty() {
                "-".to_string()
            } else {
                r.aut_orders
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            out.push_str(&format!(
                "{} {} {} {} {} {} {}\n",
                r.length, r.code_type, r.form, gamma, r.value, auts, r.source
            ));
        }
        out
    }
}

fn parse_bucket_decl(
    rest: &str,
    line: usize,
) -> Result<(String, usize, Form, Option<i64>, usize), RegistryError> {
    let fields: Vec<&str> = rest.split_whitespace().collect();
    let err = |msg: &str| RegistryError::Parse {
        line,
        msg: msg.to_string(),
    };
    if fields.len() != 4 {
        return Err(err("bucket declaration needs: length form gamma count"));
    }
    let length = fields[0].parse().map_err(|_| err("bad length"))?;
    let form = Form::parse(fields[1]).ok_or_else(|| err("bad form"))?;
    let gamma = parse_opt_i64(fields[2]).map_err(|m| err(m))?;
    let count = fields[3].parse().map_err(|_| err("bad count"))?;
    Ok((rest.trim().to_string(), length, form, gamma, count))
}

fn parse_opt_i64(s: &str) -> Result<Option<i64>, &'static str> {
    if s == "-" {
        Ok(None)
    } else {
        s.parse().map(Some).map_err(|_| "bad integer")
    }
}

fn parse_known_line(line: &str, lineno: usize) -> Result<KnownParamRecord, RegistryError> {
    let err = |msg: String| RegistryError::Parse { line: lineno, msg };
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 7 {
        return Err(err(format!("expected 7 fields, got {}", fields.len())));
    }
    let length: usize = fields[0]
        .parse()
        .map_err(|_| err(format!("bad length {:?}", fields[0])))?;
    let code_type = match fields[1] {
        "I" => CodeType::TypeI,
        "II" => CodeType::TypeII,
        other => return Err(err(format!("bad type {other:?}"))),
    };
    let form = Form::parse(fields[2]).ok_or_else(|| err(format!("bad form {:?}", fields[2])))?;
    if form.length() != length {
        return Err(err(format!("form {form} does not belong to length {length}")));
    }
    let gamma = parse_opt_i64(fields[3]).map_err(|m| err(m.to_string()))?;
    let value: i64 = fields[4]
        .parse()
        .map_err(|_| err(format!("bad beta/alpha {:?}", fields[4])))?;
    let aut_orders = if fields[5] == "-" {
        BTreeSet::new()
    } else {
        fields[5]
            .split(',')
            .map(|a| a.parse().map_err(|_| err(format!("bad aut order {a:?}"))))
            .collect::<Result<_, _>>()?
    };
    Ok(KnownParamRecord {
        length,
        code_type,
        form,
        gamma,
        value,
        aut_orders,
        source: fields[6].to_string(),
    })
}

/// One verified discovery, reproducible from `group_id` and the hex row.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultRecord {
    pub group_id: String,
    pub n: usize,
    pub v: BitWord,
    pub d: usize,
    pub class: EnumeratorClass,
    pub seed: u64,
    pub evaluations: u64,
    pub aut_order: Option<u64>,
}

impl ResultRecord {
    /// Render in the results-line grammar.
    pub fn to_line(&self) -> String {
        let (form, gamma, value) = match &self.class.form {
            Some(p) => (
                p.form().as_str().to_string(),
                p.gamma().map_or("-".to_string(), |g| g.to_string()),
                p.value().to_string(),
            ),
            None => (self.class.code_type.to_string(), "-".into(), "-".into()),
        };
        let mut line = format!(
            "{} {} {} {} {} {} {} {} {}",
            self.group_id,
            self.n,
            self.v.to_hex(),
            self.d,
            form,
            gamma,
            value,
            self.seed,
            self.evaluations
        );
        if let Some(aut) = self.aut_order {
            line.push_str(&format!(" {aut}"));
        }
        line
    }

    pub fn parse_line(line: &str, lineno: usize) -> Result<Self, RegistryError> {
        let err = |msg: String| RegistryError::Parse { line: lineno, msg };
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 9 && fields.len() != 10 {
            return Err(err(format!("expected 9 or 10 fields, got {}", fields.len())));
        }
        let group_id = fields[0].to_string();
        let n: usize = fields[1].parse().map_err(|_| err("bad n".into()))?;
        let v = BitWord::from_hex(fields[2], n)
            .map_err(|e| err(format!("bad hex row: {e}")))?;
        let d: usize = fields[3].parse().map_err(|_| err("bad d".into()))?;
        let gamma = parse_opt_i64(fields[5]).map_err(|m| err(m.to_string()))?;
        let value = parse_opt_i64(fields[6]).map_err(|m| err(m.to_string()))?;
        let (code_type, form) = match fields[4] {
            "I" => (CodeType::TypeI, None),
            "II" => (CodeType::TypeII, None),
            tag => {
                let form = Form::parse(tag).ok_or_else(|| err(format!("bad form {tag:?}")))?;
                let value = value.ok_or_else(|| err("form record needs beta/alpha".into()))?;
                let params = match (form, gamma) {
                    (Form::W68_1, None) => FormParams::W68_1 { beta: value },
                    (Form::W68_2, Some(g)) => FormParams::W68_2 { gamma: g, beta: value },
                    (Form::W72_1, Some(g)) => FormParams::W72_1 { gamma: g, beta: value },
                    (Form::W72_2, Some(g)) => FormParams::W72_2 { gamma: g, beta: value },
                    (Form::TypeII72, None) => FormParams::TypeII72 { alpha: value },
                    _ => return Err(err(format!("form {form} and gamma field disagree"))),
                };
                let ty = match form {
                    Form::TypeII72 => CodeType::TypeII,
                    _ => CodeType::TypeI,
                };
                (ty, Some(params))
            }
        };
        let seed: u64 = fields[7].parse().map_err(|_| err("bad seed".into()))?;
        let evaluations: u64 = fields[8].parse().map_err(|_| err("bad evaluations".into()))?;
        let aut_order = match fields.get(9) {
            Some(a) => Some(a.parse().map_err(|_| err("bad aut order".into()))?),
            None => None,
        };
        Ok(ResultRecord {
            group_id,
            n,
            v,
            d,
            class: EnumeratorClass {
                code_type,
                d,
                form,
            },
            seed,
            evaluations,
            aut_order,
        })
    }

    /// Rebuild the code from `group_id` + row and recheck distance and
    /// classification.
    pub fn verify(&self) -> Result<SelfDualCode, RegistryError> {
        let group = FiniteGroup::from_id(&self.group_id)
            .map_err(|e| RegistryError::Verify(e.to_string()))?;
        let v = GroupRingElement::new(group, self.v)
            .map_err(|e| RegistryError::Verify(e.to_string()))?;
        let code =
            SelfDualCode::build(v).map_err(|e| RegistryError::Verify(e.to_string()))?;
        let class = classify_code(&code).map_err(|e| RegistryError::Verify(e.to_string()))?;
        if class.d != self.d {
            return Err(RegistryError::Verify(format!(
                "distance mismatch: recorded {}, recomputed {}",
                self.d, class.d
            )));
        }
        if class.form != self.class.form || class.code_type != self.class.code_type {
            return Err(RegistryError::Verify(format!(
                "class mismatch: recorded {}, recomputed {}",
                self.class, class
            )));
        }
        Ok(code)
    }
}

/// Append-only results file. Appends verify first, then rewrite through a
/// temp file in the same directory and rename into place. Duplicate
/// (group_id, row) keys are idempotent no-ops.
#[derive(Debug, Clone)]
pub struct ResultsFile {
    path: PathBuf,
}

impl ResultsFile {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        ResultsFile { path: path.into() }
    }

    pub fn path(&self) -> &Path {
        &self.path
    }

    pub fn load(&self) -> Result<Vec<ResultRecord>, RegistryError> {
        if !self.path.exists() {
            return Ok(Vec::new());
        }
        let text = std::fs::read_to_string(&self.path)?;
        text.lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| ResultRecord::parse_line(l, i + 1))
            .collect()
    }

    /// Verify and append. Returns true when the record was added, false when
    /// an identical (group_id, row) key was already present.
    pub fn append(&self, record: &ResultRecord) -> Result<bool, RegistryError> {
        record.verify()?;
        let existing = self.load()?;
        if existing
            .iter()
            .any(|r| r.group_id == record.group_id && r.v == record.v)
        {
            return Ok(false);
        }
        let dir = self
            .path
            .parent()
            .filter(|p| !p.as_os_str().is_empty())
            .unwrap_or(Path::new("."));
        std::fs::create_dir_all(dir)?;
        let name = self
            .path
            .file_name()
            .and_then(|s| s.to_str())
            .unwrap_or("results");
        let tmp_path = self.path.with_file_name(format!("{name}.tmp"));
        {
            let mut tmp = std::fs::File::create(&tmp_path)?;
            for r in &existing {
                writeln!(tmp, "{}", r.to_line())?;
            }
            writeln!(tmp, "{}", record.to_line())?;
            tmp.sync_all()?;
        }
        std::fs::rename(&tmp_path, &self.path)?;
        Ok(true)
    }
}
