//! The identity catalogue and its verification engine.
//!
//! Every classical identity handled by this crate is registered as an
//! [`IdentityRecord`]: a stable id, a human-readable statement, a list
//! of swept parameters with their domains, and two independent
//! evaluation routes (left- and right-hand side). The engine sweeps the
//! full Cartesian range of the parameters allowed by a [`Profile`],
//! compares both sides exactly (scalar or coefficient-wise polynomial
//! equality) and reports every counterexample with its full assignment.
//!
//! Statement notation: `[n, k]` and `[n, k]_r` are unsigned first-kind
//! (r-)Stirling numbers, `{n, k}` second-kind Stirling numbers,
//! `C(n, k)` binomials, `rf(x, k)` the rising factorial
//! x(x+1)...(x+k-1), `H_n` / `H_n^[k]` / `H(j,k;r)` harmonic sums,
//! `H_n^(r)` hyperharmonic numbers, `B_k` / `B_k(x)` / `B_k^(i)`
//! Bernoulli numbers, polynomials and higher-order numbers, `S_k(n)`
//! power sums, `S_k^(m)(n)` hyper-sums, `Y_n` complete Bell
//! polynomials, `P_i` / `P(i, n, r)` the signed-factorial Bell
//! polynomials and their values at shifted harmonic arguments, and
//! `S(j, q; a)` the Stirling-weighted power sum.

mod catalog;
mod profile;

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::exact::Rational;
use crate::poly::Poly;

pub use profile::Profile;

/// Domain of a single swept parameter.
pub enum ParamDomain {
    /// Nonnegative machine-width index swept from `min` to the
    /// profile-supplied cap (inclusive).
    Index { min: usize },
    /// A fixed set of rational values, independent of the profile.
    RationalSet(Vec<Rational>),
}

/// A named, swept parameter of an identity.
pub struct Param {
    pub name: &'static str,
    pub domain: ParamDomain,
}

impl Param {
    /// Index parameter swept from 0.
    pub fn index(name: &'static str) -> Param {
        Param {
            name,
            domain: ParamDomain::Index { min: 0 },
        }
    }

    /// Index parameter swept from `min`.
    pub fn index_min(name: &'static str, min: usize) -> Param {
        Param {
            name,
            domain: ParamDomain::Index { min },
        }
    }

    /// Parameter ranging over a fixed rational test set.
    pub fn rationals(name: &'static str, values: Vec<Rational>) -> Param {
        Param {
            name,
            domain: ParamDomain::RationalSet(values),
        }
    }
}

/// A concrete value bound to a parameter during a sweep.
#[derive(Clone, Debug, PartialEq)]
pub enum ParamValue {
    Index(usize),
    Rational(Rational),
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamValue::Index(v) => write!(f, "{v}"),
            ParamValue::Rational(q) => write!(f, "{q}"),
        }
    }
}

/// One full parameter assignment; lookups are by declared name.
pub struct Assignment<'a> {
    names: &'a [Param],
    values: &'a [ParamValue],
}

impl Assignment<'_> {
    /// The index parameter `name`. Panics if absent or rational-valued.
    pub fn idx(&self, name: &str) -> usize {
        match self.value(name) {
            ParamValue::Index(v) => *v,
            ParamValue::Rational(_) => panic!("parameter {name} is rational-valued"),
        }
    }

    /// The rational parameter `name`. Panics if absent or index-valued.
    pub fn rat(&self, name: &str) -> Rational {
        match self.value(name) {
            ParamValue::Rational(q) => q.clone(),
            ParamValue::Index(_) => panic!("parameter {name} is index-valued"),
        }
    }

    fn value(&self, name: &str) -> &ParamValue {
        self.names
            .iter()
            .position(|p| p.name == name)
            .map(|i| &self.values[i])
            .unwrap_or_else(|| panic!("unknown parameter {name}"))
    }

    fn render(&self) -> Vec<(String, String)> {
        self.names
            .iter()
            .zip(self.values)
            .map(|(p, v)| (p.name.to_string(), v.to_string()))
            .collect()
    }
}

type Constraint = Box<dyn Fn(&Assignment) -> bool + Send + Sync>;
type ScalarFn = Box<dyn Fn(&Assignment) -> Rational + Send + Sync>;
type PolyFn = Box<dyn Fn(&Assignment) -> Poly + Send + Sync>;

/// The two evaluation routes of a record, compared exactly.
pub enum Routes {
    Scalar { lhs: ScalarFn, rhs: ScalarFn },
    Poly { lhs: PolyFn, rhs: PolyFn },
}

/// How a record compares its sides.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Comparison {
    ScalarEquality,
    PolynomialEquality,
}

impl Comparison {
    pub fn name(&self) -> &'static str {
        match self {
            Comparison::ScalarEquality => "scalar-equality",
            Comparison::PolynomialEquality => "polynomial-equality",
        }
    }
}

/// A registered identity: citation-grade statement, parameter domains,
/// and the two evaluation routes. Both routes must be total over the
/// declared domain.
pub struct IdentityRecord {
    pub id: &'static str,
    pub statement: &'static str,
    pub params: Vec<Param>,
    /// Joint domain constraint over the parameter assignment (for
    /// bounds like `i <= m` that the per-parameter ranges cannot
    /// express); `None` means the whole Cartesian range.
    pub constraint: Option<Constraint>,
    pub routes: Routes,
}

impl IdentityRecord {
    pub fn comparison(&self) -> Comparison {
        match self.routes {
            Routes::Scalar { .. } => Comparison::ScalarEquality,
            Routes::Poly { .. } => Comparison::PolynomialEquality,
        }
    }
}

/// A single counterexample: the assignment and both exact values,
/// untruncated.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Failure {
    pub assignment: Vec<(String, String)>,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of sweeping one identity.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerificationReport {
    pub id: String,
    /// Human-readable swept range per parameter.
    pub ranges: Vec<(String, String)>,
    /// Number of in-domain cases evaluated.
    pub cases: u64,
    pub passed: bool,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    /// One text line per report, plus indented counterexamples.
    pub fn render_text(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let ranges: Vec<String> = self
            .ranges
            .iter()
            .map(|(name, range)| format!("{name}={range}"))
            .collect();
        let mut out = format!(
            "{status} {id} cases={cases} [{ranges}]",
            id = self.id,
            cases = self.cases,
            ranges = ranges.join(" ")
        );
        for f in &self.failures {
            let assign: Vec<String> = f
                .assignment
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect();
            out.push_str(&format!(
                "\n  counterexample {}: lhs = {} ; rhs = {}",
                assign.join(" "),
                f.lhs,
                f.rhs
            ));
        }
        out
    }
}

/// One row of the registry audit: the id against its statement and
/// declared parameters.
#[derive(Clone, Debug, Serialize)]
pub struct AuditEntry {
    pub id: String,
    pub statement: String,
    pub parameters: Vec<String>,
    pub comparison: String,
}

#[derive(Debug, Error, PartialEq)]
pub enum RegistryError {
    #[error("unknown identity id: {0}")]
    UnknownIdentity(String),
    #[error("invalid profile: {0}")]
    InvalidProfile(String),
}

/// The identity catalogue.
#[derive(Default)]
pub struct Registry {
    records: Vec<IdentityRecord>,
    by_id: HashMap<&'static str, usize>,
}

impl Registry {
    pub fn new() -> Registry {
        Registry::default()
    }

    /// Builds the full built-in catalogue.
    pub fn register_all() -> Registry {
        let mut reg = Registry::new();
        catalog::register_all(&mut reg);
        reg
    }

    /// Adds a record; a duplicate id is a hard error.
    pub fn register(&mut self, record: IdentityRecord) {
        if self.by_id.contains_key(record.id) {
            panic!("duplicate identity id: {}", record.id);
        }
        self.by_id.insert(record.id, self.records.len());
        self.records.push(record);
    }

    pub fn get(&self, id: &str) -> Option<&IdentityRecord> {
        self.by_id.get(id).map(|&i| &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// All ids in ascending order.
    pub fn ids(&self) -> Vec<&'static str> {
        let mut ids: Vec<&'static str> = self.records.iter().map(|r| r.id).collect();
        ids.sort_unstable();
        ids
    }

    /// The audit listing, in registration (catalogue) order.
    pub fn audit(&self) -> Vec<AuditEntry> {
        self.records
            .iter()
            .map(|r| AuditEntry {
                id: r.id.to_string(),
                statement: r.statement.to_string(),
                parameters: r.params.iter().map(|p| p.name.to_string()).collect(),
                comparison: r.comparison().name().to_string(),
            })
            .collect()
    }

    /// Sweeps a single identity under the profile's ranges.
    pub fn verify(&self, id: &str, profile: &Profile) -> Result<VerificationReport, RegistryError> {
        let record = self
            .get(id)
            .ok_or_else(|| RegistryError::UnknownIdentity(id.to_string()))?;
        Ok(run_record(record, profile))
    }

    /// Sweeps every identity selected by the profile, in ascending id
    /// order; per-identity failures are captured in the reports, never
    /// thrown.
    pub fn verify_suite(&self, profile: &Profile) -> Vec<VerificationReport> {
        let mut ids = self.ids();
        ids.retain(|id| profile.selects(id));
        ids.iter()
            .map(|id| run_record(self.get(id).unwrap(), profile))
            .collect()
    }
}

fn run_record(record: &IdentityRecord, profile: &Profile) -> VerificationReport {
    // Resolve each parameter's concrete sweep values.
    let mut ranges = Vec::new();
    let domains: Vec<Vec<ParamValue>> = record
        .params
        .iter()
        .map(|p| match &p.domain {
            ParamDomain::Index { min } => {
                let cap = profile.cap(record.id, p.name);
                ranges.push((p.name.to_string(), format!("{min}..={cap}")));
                if cap < *min {
                    Vec::new()
                } else {
                    (*min..=cap).map(ParamValue::Index).collect()
                }
            }
            ParamDomain::RationalSet(values) => {
                let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
                ranges.push((p.name.to_string(), format!("{{{}}}", rendered.join(", "))));
                values.iter().cloned().map(ParamValue::Rational).collect()
            }
        })
        .collect();

    let mut cases = 0u64;
    let mut failures = Vec::new();

    // Odometer sweep over the Cartesian product, in declaration order
    // (a single empty assignment when there are no parameters).
    let mut cursor = vec![0usize; domains.len()];
    let mut done = domains.iter().any(Vec::is_empty);
    while !done {
        let values: Vec<ParamValue> = cursor
            .iter()
            .zip(&domains)
            .map(|(&i, d)| d[i].clone())
            .collect();
        let assignment = Assignment {
            names: &record.params,
            values: &values,
        };
        let in_domain = record
            .constraint
            .as_ref()
            .map_or(true, |c| c(&assignment));
        if in_domain {
            cases += 1;
            let mismatch = match &record.routes {
                Routes::Scalar { lhs, rhs } => {
                    let l = lhs(&assignment);
                    let r = rhs(&assignment);
                    (l != r).then(|| (l.to_string(), r.to_string()))
                }
                Routes::Poly { lhs, rhs } => {
                    let l = lhs(&assignment);
                    let r = rhs(&assignment);
                    (l != r).then(|| (l.to_string(), r.to_string()))
                }
            };
            if let Some((lhs, rhs)) = mismatch {
                failures.push(Failure {
                    assignment: assignment.render(),
                    lhs,
                    rhs,
                });
            }
        }
        done = true;
        for pos in (0..cursor.len()).rev() {
            cursor[pos] += 1;
            if cursor[pos] < domains[pos].len() {
                done = false;
                break;
            }
            cursor[pos] = 0;
        }
    }

    let passed = failures.is_empty();
    VerificationReport {
        id: record.id.to_string(),
        ranges,
        cases,
        passed,
        failures,
    }
}
