//! JSON wire schema for solver reports and reduction artifacts.
//!
//! Exact values must survive the wire: every rational is rendered both as
//! a `p/q` string (the source of truth when parsing back) and as a decimal
//! string for human consumption. Serialization is deterministic, so
//! serialize → parse → serialize is byte-identical.

use crate::error::{Error, Result};
use crate::graph::{Graph, SubgraphCollection, VertexSet};
use crate::rational::{decimal_string, fraction_string, parse_rational, Rational};
use crate::reduction::{CliquePartition, HardnessInstance};
use crate::topk::{AlgorithmId, SolveReport};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;
const DECIMAL_DIGITS: usize = 12;

/// Dual rendering of an exact rational.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalRepr {
    pub fraction: String,
    pub decimal: String,
}

impl RationalRepr {
    pub fn of(r: &Rational) -> RationalRepr {
        RationalRepr {
            fraction: fraction_string(r),
            decimal: decimal_string(r, DECIMAL_DIGITS),
        }
    }

    /// The fraction field is authoritative; the decimal is display-only.
    pub fn value(&self) -> Result<Rational> {
        parse_rational(&self.fraction)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairDistanceDocument {
    pub i: usize,
    pub j: usize,
    pub value: RationalRepr,
}

/// Wire form of [`SolveReport`]; vertex sets carry external labels.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub algorithm: String,
    pub k: usize,
    pub lambda: RationalRepr,
    pub collection: Vec<Vec<String>>,
    pub densities: Vec<RationalRepr>,
    pub pair_distances: Vec<PairDistanceDocument>,
    pub r_value: RationalRepr,
    pub r_value_float: f64,
    pub phase_boundary: Option<usize>,
    pub wall_time_ms: f64,
}

impl ReportDocument {
    pub fn from_report(g: &Graph, report: &SolveReport) -> ReportDocument {
        ReportDocument {
            schema_version: SCHEMA_VERSION,
            algorithm: report.algorithm.as_str().to_string(),
            k: report.k,
            lambda: RationalRepr::of(&report.lambda),
            collection: report
                .collection
                .members()
                .iter()
                .map(|s| s.labels(g).iter().map(|l| l.to_string()).collect())
                .collect(),
            densities: report.densities.iter().map(RationalRepr::of).collect(),
            pair_distances: report
                .pair_distances
                .iter()
                .map(|(i, j, d)| PairDistanceDocument {
                    i: *i,
                    j: *j,
                    value: RationalRepr::of(d),
                })
                .collect(),
            r_value: RationalRepr::of(&report.r_value),
            r_value_float: report.r_value_float,
            phase_boundary: report.phase_boundary,
            wall_time_ms: report.wall_time.as_secs_f64() * 1e3,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serialization is infallible");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<ReportDocument> {
        let doc: ReportDocument = serde_json::from_str(text)
            .map_err(|e| Error::contract(format!("malformed report JSON: {e}")))?;
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::contract(format!(
                "unsupported report schema version {}",
                doc.schema_version
            )));
        }
        Ok(doc)
    }

    /// Rebuilds the in-memory report against `g` from the exact fields.
    pub fn to_report(&self, g: &Graph) -> Result<SolveReport> {
        let algorithm = AlgorithmId::parse(&self.algorithm)
            .ok_or_else(|| Error::contract(format!("unknown algorithm {:?}", self.algorithm)))?;
        let members = self
            .collection
            .iter()
            .map(|labels| resolve_labels(g, labels))
            .collect::<Result<Vec<_>>>()?;
        let collection = SubgraphCollection::new(members)?;
        let report = SolveReport::assemble(
            g,
            algorithm,
            collection,
            &self.lambda.value()?,
            self.phase_boundary,
            std::time::Duration::from_secs_f64(self.wall_time_ms.max(0.0) / 1e3),
        )?;
        if report.r_value != self.r_value.value()? {
            return Err(Error::contract(
                "report r_value does not match its own collection",
            ));
        }
        Ok(report)
    }
}

fn resolve_labels(g: &Graph, labels: &[String]) -> Result<VertexSet> {
    let ids = labels
        .iter()
        .map(|l| {
            g.vertex_by_label(l)
                .ok_or_else(|| Error::contract(format!("unknown vertex label {l:?}")))
        })
        .collect::<Result<Vec<u32>>>()?;
    VertexSet::new(ids)
}

/// Wire form of a hardness instance (the graph itself travels separately
/// as an edge list).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HardnessInstanceDocument {
    pub schema_version: u32,
    pub vertex_count: u32,
    pub edge_count: usize,
    pub k: usize,
    pub lambda: RationalRepr,
    pub threshold: RationalRepr,
}

impl HardnessInstanceDocument {
    pub fn from_instance(inst: &HardnessInstance) -> HardnessInstanceDocument {
        HardnessInstanceDocument {
            schema_version: SCHEMA_VERSION,
            vertex_count: inst.graph.vertex_count(),
            edge_count: inst.graph.edge_count(),
            k: inst.k,
            lambda: RationalRepr::of(&inst.lambda),
            threshold: RationalRepr::of(&inst.threshold),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serialization is infallible");
        s.push('\n');
        s
    }
}

/// Wire form of a single densest-subgraph result.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DensestDocument {
    pub schema_version: u32,
    pub vertices: Vec<String>,
    pub density: RationalRepr,
    pub certificate_lo: RationalRepr,
    pub certificate_hi: RationalRepr,
}

impl DensestDocument {
    pub fn from_result(g: &Graph, r: &crate::flow::DensestResult) -> DensestDocument {
        DensestDocument {
            schema_version: SCHEMA_VERSION,
            vertices: r.set.labels(g).iter().map(|l| l.to_string()).collect(),
            density: RationalRepr::of(&r.dens),
            certificate_lo: RationalRepr::of(&r.cut_certificate.0),
            certificate_hi: RationalRepr::of(&r.cut_certificate.1),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(self).expect("densest serialization is infallible");
        s.push('\n');
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PartitionDocument {
    pub schema_version: u32,
    pub parts: Vec<Vec<String>>,
}

impl PartitionDocument {
    pub fn from_partition(g: &Graph, p: &CliquePartition) -> PartitionDocument {
        PartitionDocument {
            schema_version: SCHEMA_VERSION,
            parts: p
                .parts
                .iter()
                .map(|s| s.labels(g).iter().map(|l| l.to_string()).collect())
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s =
            serde_json::to_string_pretty(self).expect("partition serialization is infallible");
        s.push('\n');
        s
    }
}
