//! Ingestion of published cyclotomic class-group data and the coinvariant
//! deduction built on it.
//!
//! For an odd prime `p`, complex conjugation acts on the class group
//! `Cl_p` of `Q(zeta_p)`, and the coinvariants `H_0(C_2; Cl_p)` sit in an
//! exact sequence
//!
//! ```text
//! (2-torsion of Cl_p^-) -> Cl_p^+ -> H_0(C_2; Cl_p) -> Cl_p^- / 2 -> 0
//! ```
//!
//! where `Cl_p^+` is the class group of the maximal real subfield and
//! `Cl_p^-` the minus part.  Published tables provide `Cl_p^+` (Miller) and
//! `Cl_p^-/2` (Schoof); [`h0_from_record`] turns a record of those two
//! groups into the coinvariants, exactly when the sequence forces them and
//! as an order interval otherwise.  [`minus_class_number`] is an independent
//! analytic oracle for `|Cl_p^-|` used to cross-check the ingested data.

mod bernoulli;

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_bigint::BigInt;
use num_integer::Integer as _;
use serde::{Deserialize, Serialize};

use crate::abelian::FgAbGroup;
use crate::modular::is_prime;
use crate::{Error, Result};

pub use bernoulli::{minus_class_number, MINUS_CLASS_NUMBER_CAP};

/// The assumption under which class-group data speaks about projective
/// class groups of group rings; recorded in output metadata whenever a
/// deduction relies on it.
pub const RIM_ASSUMPTION: &str =
    "Wh_0(C_p) is identified with the ideal class group of Q(zeta_p) (Rim's theorem)";

/// Assumption string attached to results that use GRH-conditional records.
pub const GRH_ASSUMPTION: &str =
    "plus-part class groups for 157 <= p <= 241 are conditional on GRH (Miller)";

/// One line of the class-group table for an odd prime `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassGroupRecord {
    /// The odd prime.
    pub p: u64,
    /// Class group of the maximal real subfield `Q(zeta_p)^+`.
    pub cl_plus: FgAbGroup,
    /// The quotient `Cl_p^- / 2` (an elementary abelian 2-group).
    pub cl_minus_mod2: FgAbGroup,
    /// The full minus part, when its structure is recorded.
    pub cl_minus: Option<FgAbGroup>,
    /// True when the record (its plus part) is conditional on GRH.
    pub grh_conditional: bool,
}

/// A set of class-group records, keyed by prime.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDataSet {
    records: BTreeMap<u64, ClassGroupRecord>,
}

impl ClassDataSet {
    /// Build from records; duplicate primes are a data error.
    pub fn from_records(records: impl IntoIterator<Item = ClassGroupRecord>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for rec in records {
            let p = rec.p;
            if map.insert(p, rec).is_some() {
                return Err(Error::data(format!("duplicate record for p = {p}")));
            }
        }
        Ok(ClassDataSet { records: map })
    }

    /// The record for `p`, if covered.
    pub fn get(&self, p: u64) -> Option<&ClassGroupRecord> {
        self.records.get(&p)
    }

    /// All records in increasing order of `p`.
    pub fn iter(&self) -> impl Iterator<Item = &ClassGroupRecord> {
        self.records.values()
    }

    /// Number of records.
    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// True when no records are loaded.
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }
}

/// The data file bundled with the crate (odd primes `p <= 241`).
pub fn bundled_data() -> &'static str {
    include_str!("../../data/class_groups.dat")
}

/// Parse and load the bundled data (a failure here is a build defect, so it
/// surfaces as an internal error rather than a data error).
pub fn load_bundled() -> Result<ClassDataSet> {
    load_records_from_str(bundled_data())
        .map_err(|e| Error::internal(format!("bundled class-group data is invalid: {e}")))
}

/// Parse a group field: `0` for the trivial group or comma-separated
/// invariant factors, each an integer `>= 2`.
fn parse_group(field: &str) -> std::result::Result<FgAbGroup, String> {
    let field = field.trim();
    if field == "0" {
        return Ok(FgAbGroup::trivial());
    }
    let mut factors = Vec::new();
    for part in field.split(',') {
        let part = part.trim();
        let d: u64 = part
            .parse()
            .map_err(|_| format!("invalid invariant factor {part:?}"))?;
        if d < 2 {
            return Err(format!("invariant factor must be at least 2, got {d}"));
        }
        factors.push(BigInt::from(d));
    }
    Ok(FgAbGroup::from_parts(0, factors))
}

fn parse_record_line(line: &str) -> std::result::Result<ClassGroupRecord, String> {
    let fields: Vec<&str> = line.split(';').map(str::trim).collect();
    if fields.len() != 5 {
        return Err(format!(
            "expected 5 fields `p; cl_plus; cl_minus_mod2; cl_minus; grh`, got {}",
            fields.len()
        ));
    }
    let p: u64 = fields[0]
        .parse()
        .map_err(|_| format!("invalid prime {:?}", fields[0]))?;
    if p < 3 || !is_prime(p) {
        return Err(format!("{p} is not an odd prime"));
    }
    let cl_plus = parse_group(fields[1])?;
    let cl_minus_mod2 = parse_group(fields[2])?;
    let cl_minus = match fields[3] {
        "?" => None,
        g => Some(parse_group(g)?),
    };
    let grh_conditional = match fields[4] {
        "*" => true,
        "-" => false,
        other => return Err(format!("grh flag must be `*` or `-`, got {other:?}")),
    };
    Ok(ClassGroupRecord {
        p,
        cl_plus,
        cl_minus_mod2,
        cl_minus,
        grh_conditional,
    })
}

/// Load records from text: one `p; cl_plus; cl_minus_mod2; cl_minus; grh`
/// record per line, `#` comments and blank lines ignored.  Parse failures
/// carry the 1-based line number.
pub fn load_records_from_str(text: &str) -> Result<ClassDataSet> {
    let mut records = Vec::new();
    let mut seen_lines: BTreeMap<u64, usize> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let rec = parse_record_line(line).map_err(|message| Error::DataLine {
            line: idx + 1,
            message,
        })?;
        if let Some(first) = seen_lines.insert(rec.p, idx + 1) {
            return Err(Error::DataLine {
                line: idx + 1,
                message: format!("duplicate record for p = {} (first at line {first})", rec.p),
            });
        }
        records.push(rec);
    }
    ClassDataSet::from_records(records)
}

/// Load records from a file on disk.
pub fn load_records(path: &Path) -> Result<ClassDataSet> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::data(format!("cannot read {}: {e}", path.display())))?;
    load_records_from_str(&text)
}

/// A consistency problem found in loaded records.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationIssue {
    /// The prime whose record is at fault.
    pub p: u64,
    /// Human-readable description.
    pub message: String,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p = {}: {}", self.p, self.message)
    }
}

/// Check internal consistency of a record set; returns one issue per
/// violated invariant (empty means the set is consistent).
///
/// Checked per record: `p` is an odd prime, the groups are finite,
/// `cl_minus_mod2` is an elementary abelian 2-group, and when the full
/// minus part is present its mod-2 quotient agrees with `cl_minus_mod2`.
pub fn validate_records(records: &ClassDataSet) -> Vec<ValidationIssue> {
    let mut issues = Vec::new();
    let mut push = |p: u64, message: String| issues.push(ValidationIssue { p, message });
    for rec in records.iter() {
        if rec.p < 3 || !is_prime(rec.p) {
            push(rec.p, format!("{} is not an odd prime", rec.p));
        }
        if !rec.cl_plus.is_finite() {
            push(rec.p, "cl_plus must be finite".to_string());
        }
        if !rec.cl_minus_mod2.is_elementary_abelian_2() {
            push(
                rec.p,
                format!(
                    "cl_minus_mod2 must be an elementary abelian 2-group, got {}",
                    rec.cl_minus_mod2
                ),
            );
        }
        if let Some(minus) = &rec.cl_minus {
            if !minus.is_finite() {
                push(rec.p, "cl_minus must be finite".to_string());
            } else if minus.mod2_quotient() != rec.cl_minus_mod2 {
                push(
                    rec.p,
                    format!(
                        "cl_minus = {} has mod-2 quotient {}, but cl_minus_mod2 = {}",
                        minus,
                        minus.mod2_quotient(),
                        rec.cl_minus_mod2
                    ),
                );
            }
        }
    }
    issues
}

/// Which branch of the exact-sequence deduction produced an `H0Result`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DeductionRule {
    /// `Cl_p^+ = 0`, so `H_0` is exactly `Cl_p^-/2`.
    PlusTrivial,
    /// `Cl_p^-/2 = 0`, so the 2-torsion dies and `H_0` is exactly `Cl_p^+`.
    MinusModTwoTrivial,
    /// `|Cl_p^+|` odd (and nonzero): the sequence splits off the odd part,
    /// `H_0` is exactly `Cl_p^+ x Cl_p^-/2`.
    PlusOdd,
    /// Only the order interval `[|Cl_p^-/2|, |Cl_p^+| * |Cl_p^-/2|]` is
    /// forced.
    Interval,
}

/// Computed coinvariants `H_0(C_2; Cl_p)` for one prime.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Result {
    /// The prime.
    pub p: u64,
    /// Exact group, when forced.
    pub exact: Option<FgAbGroup>,
    /// Inclusive order bounds (always present; equal to the exact order
    /// when `exact` is set), as decimal strings.
    pub order_min: String,
    /// See `order_min`.
    pub order_max: String,
    /// Which deduction branch fired.
    pub deduction_rule: DeductionRule,
    /// True when the inputs were GRH-conditional.
    pub grh_conditional: bool,
}

impl H0Result {
    /// True when the result is exactly the trivial group.
    pub fn is_exactly_trivial(&self) -> bool {
        self.exact.as_ref().is_some_and(|g| g.is_trivial())
    }
}

impl fmt::Display for H0Result {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.exact {
            Some(g) => write!(f, "{g}")?,
            None => write!(f, "order in [{}, {}]", self.order_min, self.order_max)?,
        }
        if self.grh_conditional {
            write!(f, " (GRH)")?;
        }
        Ok(())
    }
}

/// Deduce `H_0(C_2; Cl_p)` from a record via the exact sequence
/// `(2-torsion of Cl_p^-) -> Cl_p^+ -> H_0 -> Cl_p^-/2 -> 0`.
///
/// Branches, in order: (a) `Cl_p^+ = 0` gives `H_0 = Cl_p^-/2`;
/// (b) `Cl_p^-/2 = 0` gives `H_0 = Cl_p^+`; (c) `|Cl_p^+|` odd gives
/// `H_0 = Cl_p^+ x Cl_p^-/2`; (d) otherwise only the order interval
/// `[|Cl_p^-/2|, |Cl_p^+| * |Cl_p^-/2|]` is determined.  The GRH flag of
/// the record propagates to the result.
pub fn h0_from_record(rec: &ClassGroupRecord) -> Result<H0Result> {
    if !rec.cl_minus_mod2.is_elementary_abelian_2() {
        return Err(Error::data(format!(
            "record for p = {}: cl_minus_mod2 = {} is not elementary abelian 2",
            rec.p, rec.cl_minus_mod2
        )));
    }
    let plus_order = rec
        .cl_plus
        .order()
        .ok_or_else(|| Error::data(format!("record for p = {}: cl_plus is infinite", rec.p)))?;
    let mod2_order = rec
        .cl_minus_mod2
        .order()
        .expect("elementary abelian 2-groups are finite");

    let (exact, rule) = if rec.cl_plus.is_trivial() {
        (Some(rec.cl_minus_mod2.clone()), DeductionRule::PlusTrivial)
    } else if rec.cl_minus_mod2.is_trivial() {
        (Some(rec.cl_plus.clone()), DeductionRule::MinusModTwoTrivial)
    } else if plus_order.is_odd() {
        (
            Some(rec.cl_plus.direct_sum(&rec.cl_minus_mod2)),
            DeductionRule::PlusOdd,
        )
    } else {
        (None, DeductionRule::Interval)
    };

    let (order_min, order_max) = match &exact {
        Some(g) => {
            let o = g.order().expect("finite by construction").to_string();
            (o.clone(), o)
        }
        None => (
            mod2_order.to_string(),
            (&plus_order * &mod2_order).to_string(),
        ),
    };

    Ok(H0Result {
        p: rec.p,
        exact,
        order_min,
        order_max,
        deduction_rule: rule,
        grh_conditional: rec.grh_conditional,
    })
}

/// One emitted row of the headline table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    /// The prime.
    pub p: u64,
    /// Plus-part class group from the record.
    pub cl_plus: FgAbGroup,
    /// Mod-2 minus part from the record.
    pub cl_minus_mod2: FgAbGroup,
    /// The deduced coinvariants.
    pub h0: H0Result,
}

/// The reproduction of the headline table over all odd primes `p <= 241`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Report {
    /// The primes with nontrivial `H_0`, with full rows.
    pub rows: Vec<Table1Row>,
    /// Covered primes whose `H_0` is exactly trivial.
    pub vanishing: Vec<u64>,
    /// Odd primes `<= 241` with no record.
    pub gaps: Vec<u64>,
    /// Cross-check failures (expected-value mismatches, unexpected
    /// nonvanishing).  Empty on a faithful data set.
    pub mismatches: Vec<String>,
}

/// The seven primes `p <= 241` with nonvanishing `H_0(C_2; Cl_p)`, with
/// their expected results, used by the cross-check mode of
/// [`reproduce_table1`].
fn expected_nonvanishing() -> Vec<(u64, H0Result)> {
    let e3 = || FgAbGroup::from_parts(0, [2, 2, 2].map(BigInt::from));
    let exact = |p: u64, g: FgAbGroup, grh: bool, rule: DeductionRule| {
        let o = g.order().expect("finite").to_string();
        (
            p,
            H0Result {
                p,
                exact: Some(g),
                order_min: o.clone(),
                order_max: o,
                deduction_rule: rule,
                grh_conditional: grh,
            },
        )
    };
    vec![
        exact(29, e3(), false, DeductionRule::PlusTrivial),
        exact(113, e3(), false, DeductionRule::PlusTrivial),
        (
            163,
            H0Result {
                p: 163,
                exact: None,
                order_min: "4".to_string(),
                order_max: "16".to_string(),
                deduction_rule: DeductionRule::Interval,
                grh_conditional: true,
            },
        ),
        exact(
            191,
            FgAbGroup::cyclic(11),
            true,
            DeductionRule::MinusModTwoTrivial,
        ),
        exact(197, e3(), true, DeductionRule::PlusTrivial),
        exact(
            229,
            FgAbGroup::cyclic(3),
            true,
            DeductionRule::MinusModTwoTrivial,
        ),
        exact(239, e3(), true, DeductionRule::PlusTrivial),
    ]
}

/// Recompute the headline table from a record set.
///
/// Every covered odd prime `p <= 241` gets its `H_0` deduced; primes with
/// nontrivial (or undetermined) `H_0` become rows, the rest are listed as
/// vanishing.  Uncovered primes are reported as gaps.  With `cross_check`
/// set, the rows are compared against the expected published values and any
/// disagreement lands in `mismatches`.
pub fn reproduce_table1(records: &ClassDataSet, cross_check: bool) -> Result<Table1Report> {
    let expected: BTreeMap<u64, H0Result> = expected_nonvanishing().into_iter().collect();
    let mut report = Table1Report {
        rows: Vec::new(),
        vanishing: Vec::new(),
        gaps: Vec::new(),
        mismatches: Vec::new(),
    };
    for p in (3..=241).filter(|&p| is_prime(p)) {
        let Some(rec) = records.get(p) else {
            report.gaps.push(p);
            continue;
        };
        let h0 = h0_from_record(rec)?;
        if h0.is_exactly_trivial() {
            if expected.contains_key(&p) && cross_check {
                report
                    .mismatches
                    .push(format!("p = {p}: expected nonvanishing H_0, computed 0"));
            }
            report.vanishing.push(p);
        } else {
            if cross_check {
                match expected.get(&p) {
                    None => report
                        .mismatches
                        .push(format!("p = {p}: expected H_0 = 0, computed {h0}")),
                    Some(exp) if *exp != h0 => report
                        .mismatches
                        .push(format!("p = {p}: expected {exp}, computed {h0}")),
                    Some(_) => {}
                }
            }
            report.rows.push(Table1Row {
                p,
                cl_plus: rec.cl_plus.clone(),
                cl_minus_mod2: rec.cl_minus_mod2.clone(),
                h0,
            });
        }
    }
    Ok(report)
}
