//! JSON views of core values.

use exsuper_core::classifier::{Classification, Verdict};
use exsuper_core::euler::TopTerm;
use exsuper_core::lattice::MetricVector;
use exsuper_core::reflection::{Branch, ChainResult};
use exsuper_core::{Characteristic, ScalarContext, SuperType, Weight};
use serde::{Deserialize, Serialize};

/// The short name used on the command line and in reports.
pub fn type_tag(ty: SuperType) -> &'static str {
    match ty {
        SuperType::D21 => "d",
        SuperType::G3 => "g3",
        SuperType::F31 => "f4",
    }
}

pub fn parse_type(s: &str) -> Result<SuperType, String> {
    match s.to_ascii_lowercase().as_str() {
        "d" | "d21" => Ok(SuperType::D21),
        "g3" => Ok(SuperType::G3),
        "f4" | "f31" => Ok(SuperType::F31),
        other => Err(format!("unknown type `{other}` (expected d, g3 or f4)")),
    }
}

pub fn verdict_tag(v: Verdict) -> String {
    v.to_string()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CtxJson {
    /// 0 for characteristic zero.
    pub characteristic: u64,
    pub zeta: Option<String>,
}

impl From<&ScalarContext> for CtxJson {
    fn from(ctx: &ScalarContext) -> Self {
        CtxJson {
            characteristic: match ctx.characteristic() {
                Characteristic::Zero => 0,
                Characteristic::Prime(p) => p,
            },
            zeta: ctx.zeta().map(|z| z.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub node: usize,
    pub weight: Vec<i64>,
    pub dominant: bool,
    /// Source node of the incoming edge; `None` at node 0.
    pub src: Option<usize>,
    pub odd_root: Option<String>,
    /// `(λ^src, β)` as `q0` or `q0 + q1*zeta`.
    pub pairing: Option<String>,
    pub branch: Option<String>,
}

pub fn chain_json(ch: &ChainResult) -> Vec<NodeJson> {
    ch.nodes
        .iter()
        .enumerate()
        .map(|(i, n)| {
            let names = n.weight.super_type().odd_root_names();
            NodeJson {
                node: i,
                weight: n.weight.coords().to_vec(),
                dominant: n.weight.is_dominant(),
                src: n.step.map(|s| s.edge.src),
                odd_root: n.step.map(|s| names[s.edge.odd_root].to_string()),
                pairing: n.step.map(|s| s.pairing.to_string()),
                branch: n.step.map(|s| {
                    match s.branch {
                        Branch::Reflected => "reflected",
                        Branch::Fixed => "fixed",
                    }
                    .to_string()
                }),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub node: usize,
    pub weight: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub verdict: String,
    pub witness: Option<WitnessJson>,
    pub clause: Option<String>,
}

impl From<&Classification> for ClassJson {
    fn from(c: &Classification) -> Self {
        ClassJson {
            verdict: verdict_tag(c.verdict),
            witness: c.witness.map(|w| WitnessJson {
                node: w.node,
                weight: w.weight.coords().to_vec(),
            }),
            clause: c.clause.map(str::to_string),
        }
    }
}

pub fn metric_json(v: &MetricVector) -> Vec<f64> {
    v.halves().iter().map(|&h| h as f64 / 2.0).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TopJson {
    pub point: Vec<f64>,
    pub weight: Option<Vec<i64>>,
    pub coefficient: i64,
}

impl From<&TopTerm> for TopJson {
    fn from(t: &TopTerm) -> Self {
        TopJson {
            point: metric_json(&t.point),
            weight: t.weight.map(|w| w.coords().to_vec()),
            coefficient: t.coefficient,
        }
    }
}

pub fn coords(w: &Weight) -> Vec<i64> {
    w.coords().to_vec()
}
