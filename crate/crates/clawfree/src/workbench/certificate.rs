//! Self-describing JSON certificates for `check` and `solve` answers.
//!
//! Statuses: `claw-free-innocent`, `has-claw`, `not-innocent` from a check;
//! `found`, `fallback-found`, `none-exists` from a solve; `budget` from either.

use std::path::Path as FsPath;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forbidden::{innocence_certificate, is_innocent, verify_witness, ForbiddenWitness, Innocence};
use crate::graph::{is_strong_stable_set, Budget, Graph, VertexSet};
use crate::recognizers::{find_claw, is_claw_free, ClawWitness};
use crate::solver::{brute_force, SolveResult, Status};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphRecord {
    pub fn of(g: &Graph) -> Self {
        GraphRecord { n: g.n(), edges: g.edges() }
    }

    pub fn to_graph(&self) -> Result<Graph> {
        Graph::from_edge_list(self.n, &self.edges)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BudgetRecord {
    pub max_vertices: usize,
    pub max_enumerations: u64,
}

impl From<&Budget> for BudgetRecord {
    fn from(b: &Budget) -> Self {
        BudgetRecord { max_vertices: b.max_vertices, max_enumerations: b.max_enumerations }
    }
}

impl From<BudgetRecord> for Budget {
    fn from(b: BudgetRecord) -> Self {
        Budget { max_vertices: b.max_vertices, max_enumerations: b.max_enumerations }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClawTag {
    Claw,
}

/// A forbidden structure or a claw. Forbidden witnesses are tried first when
/// reading, and their kinds never equal `claw`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Forbidden(ForbiddenWitness),
    Claw {
        kind: ClawTag,
        #[serde(flatten)]
        claw: ClawWitness,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub status: String,
    pub graph: GraphRecord,
    #[serde(default)]
    pub witness: Option<Witness>,
    /// The strong stable set, for solve answers.
    #[serde(default)]
    pub s: Option<Vec<usize>>,
    #[serde(default)]
    pub required: Vec<usize>,
    /// Solver trace records; empty for checks.
    #[serde(default)]
    pub trace: serde_json::Value,
    pub budgets: BudgetRecord,
    /// Budget error message when the status is `budget`.
    #[serde(default)]
    pub detail: Option<String>,
    pub version: String,
}

impl Certificate {
    fn blank(status: &str, g: &Graph, b: &Budget) -> Self {
        Certificate {
            status: status.to_string(),
            graph: GraphRecord::of(g),
            witness: None,
            s: None,
            required: Vec::new(),
            trace: serde_json::Value::Array(Vec::new()),
            budgets: b.into(),
            detail: None,
            version: VERSION.to_string(),
        }
    }

    /// Claw-freeness first, then innocence. Only non-budget errors propagate.
    pub fn check(g: &Graph, b: &Budget) -> Result<Self> {
        if let Some(claw) = find_claw(g) {
            let mut c = Certificate::blank("has-claw", g, b);
            c.witness = Some(Witness::Claw { kind: ClawTag::Claw, claw });
            return Ok(c);
        }
        match innocence_certificate(g, b) {
            Ok(Innocence::Innocent) => Ok(Certificate::blank("claw-free-innocent", g, b)),
            Ok(Innocence::Guilty(w)) => {
                let mut c = Certificate::blank("not-innocent", g, b);
                c.witness = Some(Witness::Forbidden(w));
                Ok(c)
            }
            Err(e) if e.is_budget() => Ok(Certificate::budget(g, VertexSet::new(), b, &e)),
            Err(e) => Err(e),
        }
    }

    pub fn solved(g: &Graph, z: VertexSet, result: &SolveResult, b: &Budget) -> Self {
        let mut c = Certificate::blank(result.status.name(), g, b);
        c.s = result.s.map(|s| s.to_vec());
        c.required = z.to_vec();
        c.trace = serde_json::to_value(&result.trace).expect("trace records serialize");
        c
    }

    pub fn budget(g: &Graph, z: VertexSet, b: &Budget, e: &Error) -> Self {
        let mut c = Certificate::blank(Status::Budget.name(), g, b);
        c.required = z.to_vec();
        c.detail = Some(e.to_string());
        c
    }

    /// Canonical JSON: object keys sorted, no insignificant whitespace.
    pub fn to_json(&self) -> String {
        // `Value` keeps objects in a BTreeMap, which sorts the keys.
        let v = serde_json::to_value(self).expect("certificates serialize");
        v.to_string()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse { offset: 0, message: e.to_string() })
    }
}

pub fn write_certificate(path: &FsPath, c: &Certificate) -> Result<()> {
    std::fs::write(path, c.to_json() + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Re-derives the certificate's claim from its own graph and budgets.
/// Negative claims (`claw-free-innocent`, `none-exists`) are re-searched;
/// positive ones are checked against their witness or set.
pub fn verify_certificate(c: &Certificate) -> Result<bool> {
    let g = c.graph.to_graph()?;
    let b: Budget = c.budgets.into();
    let z: VertexSet = c.required.iter().collect();
    let in_range = |v: &[usize]| v.iter().all(|&x| x < g.n());
    if !in_range(&c.required) {
        return Ok(false);
    }
    Ok(match c.status.as_str() {
        "has-claw" => matches!(&c.witness, Some(Witness::Claw { claw, .. }) if claw.verify(&g)),
        "not-innocent" => matches!(&c.witness, Some(Witness::Forbidden(w)) if verify_witness(&g, w)),
        "claw-free-innocent" => c.witness.is_none() && is_claw_free(&g) && is_innocent(&g, &b)?,
        "found" | "fallback-found" => match &c.s {
            Some(s) if in_range(s) => {
                let s: VertexSet = s.iter().collect();
                z.is_subset(s) && is_strong_stable_set(&g, s, &b)?
            }
            _ => false,
        },
        "none-exists" => c.s.is_none() && brute_force(&g, z, &b)?.is_none(),
        "budget" => c.s.is_none() && c.witness.is_none(),
        _ => false,
    })
}
