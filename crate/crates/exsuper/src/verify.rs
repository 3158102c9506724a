//! Exhaustive cross-validation of the classification methods over weight boxes.

use std::collections::BTreeSet;
use std::time::Instant;

use exsuper_core::classifier::{
    classify_by_propositions, classify_by_theorem, classify_char0, classify_with_chain,
    Classification,
};
use exsuper_core::{Characteristic, Error, ScalarContext, SuperType, Weight, WeightBox, ZetaMode};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::report::{chain_json, coords, type_tag, verdict_tag, CtxJson, NodeJson};

/// What method A was compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Table {
    Theorem,
    Propositions,
    Remark,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub lambda: Vec<i64>,
    pub verdict_a: String,
    pub verdict_b: String,
    /// First non-dominant node of method A, if any.
    pub witness_node: Option<usize>,
    /// Clause that fired on the B side, if any.
    pub clause: Option<String>,
    pub table: Table,
    pub chain: Vec<NodeJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    #[serde(rename = "type")]
    pub super_type: String,
    pub ctx: CtxJson,
    #[serde(rename = "box")]
    pub bounds: Vec<i64>,
    pub total_weights: u64,
    pub finite_count: u64,
    pub mismatches: Vec<Mismatch>,
    /// Wall-clock seconds.
    pub elapsed: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

fn check_box(ctx: &ScalarContext, bx: &WeightBox) -> Result<(), Error> {
    if bx.super_type() != ctx.super_type() {
        return Err(Error::TypeMismatch {
            weight: bx.super_type(),
            context: ctx.super_type(),
        });
    }
    Ok(())
}

fn mismatch(
    lambda: &Weight,
    a: &Classification,
    b: &Classification,
    table: Table,
    chain: &exsuper_core::reflection::ChainResult,
) -> Mismatch {
    Mismatch {
        lambda: coords(lambda),
        verdict_a: verdict_tag(a.verdict),
        verdict_b: verdict_tag(b.verdict),
        witness_node: a.witness.map(|w| w.node),
        clause: b.clause.map(str::to_string),
        table,
        chain: chain_json(chain),
    }
}

/// Run `f` on every weight of `bx` in parallel; results come back in box order.
fn sweep<F>(bx: &WeightBox, f: F) -> Result<(u64, Vec<Mismatch>), Error>
where
    F: Fn(&Weight) -> Result<(bool, Vec<Mismatch>), Error> + Sync + Send,
{
    let weights: Vec<Weight> = bx.iter().collect();
    let per: Vec<(bool, Vec<Mismatch>)> = weights.par_iter().map(f).collect::<Result<_, _>>()?;
    let finite = per.iter().filter(|(f, _)| *f).count() as u64;
    let mismatches = per.into_iter().flat_map(|(_, m)| m).collect();
    Ok((finite, mismatches))
}

/// Method A against the closed-form clauses and the intermediate table, for
/// every weight of `bx`. In characteristic zero the clauses are read at `p = ∞`.
pub fn verify_box(ctx: &ScalarContext, bx: &WeightBox) -> Result<VerifyReport, Error> {
    check_box(ctx, bx)?;
    let start = Instant::now();
    let (finite_count, mismatches) = sweep(bx, |w| {
        let (a, chain) = classify_with_chain(w, ctx)?;
        let thm = match ctx.characteristic() {
            Characteristic::Zero => classify_char0(w, ctx.zeta())?,
            Characteristic::Prime(_) => classify_by_theorem(w, ctx)?,
        };
        let props = classify_by_propositions(w, ctx)?;
        let mut out = Vec::new();
        if thm.verdict != a.verdict {
            out.push(mismatch(w, &a, &thm, Table::Theorem, &chain));
        }
        if props.verdict != a.verdict {
            out.push(mismatch(w, &a, &props, Table::Propositions, &chain));
        }
        Ok((a.verdict.is_finite(), out))
    })?;
    Ok(VerifyReport {
        super_type: type_tag(ctx.super_type()).to_string(),
        ctx: ctx.into(),
        bounds: bx.upper().to_vec(),
        total_weights: bx.volume(),
        finite_count,
        mismatches,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// The characteristic-zero lists as stated in words, for comparison.
///
/// D(2|1;ζ) with generic ζ: `λ = 0` or `d ≥ 2`.
/// G(3): `d = r = s = 0`, `d = 2, s = 0`, or `d ≥ 3`.
/// F(3|1): `a = b = c = d = 0`, `d = 2, a = c = 0`, or `d ≥ 4`.
pub fn char0_remark(lambda: &Weight) -> bool {
    let c = lambda.coords();
    let zero = c.iter().all(|&x| x == 0);
    zero || match lambda.super_type() {
        SuperType::D21 => c[0] >= 2,
        SuperType::G3 => (c[0] == 2 && c[2] == 0) || c[0] >= 3,
        SuperType::F31 => (c[3] == 2 && c[0] == 0 && c[2] == 0) || c[3] >= 4,
    }
}

/// Characteristic-zero context: generic ζ for D(2|1;ζ).
pub fn char0_context(ty: SuperType) -> ScalarContext {
    let zeta = (ty == SuperType::D21).then_some(ZetaMode::Generic);
    ScalarContext::new(ty, Characteristic::Zero, zeta).expect("char 0 context is admissible")
}

/// Method A in characteristic zero against the stated lists and against the
/// clauses read at `p = ∞`.
pub fn char0_check(bx: &WeightBox) -> Result<VerifyReport, Error> {
    let ctx = char0_context(bx.super_type());
    let start = Instant::now();
    let (finite_count, mismatches) = sweep(bx, |w| {
        let (a, chain) = classify_with_chain(w, &ctx)?;
        let thm = classify_char0(w, ctx.zeta())?;
        let mut out = Vec::new();
        if thm.verdict != a.verdict {
            out.push(mismatch(w, &a, &thm, Table::Theorem, &chain));
        }
        if char0_remark(w) != a.verdict.is_finite() {
            let remark = Classification {
                verdict: exsuper_core::classifier::Verdict::from_bool(char0_remark(w)),
                witness: None,
                clause: None,
            };
            out.push(mismatch(w, &a, &remark, Table::Remark, &chain));
        }
        Ok((a.verdict.is_finite(), out))
    })?;
    Ok(VerifyReport {
        super_type: type_tag(ctx.super_type()).to_string(),
        ctx: (&ctx).into(),
        bounds: bx.upper().to_vec(),
        total_weights: bx.volume(),
        finite_count,
        mismatches,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

/// `finite(ζ)` with `a, b` swapped against `finite(ζ⁻¹)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryCheck {
    pub zeta: u64,
    pub inverse: u64,
    /// Weights (in ζ⁻¹ coordinates) in exactly one of the two sets.
    pub discrepancies: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub p: u64,
    pub reports: Vec<VerifyReport>,
    pub symmetry: Vec<SymmetryCheck>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerifyReport::passed)
            && self.symmetry.iter().all(|s| s.discrepancies.is_empty())
    }
}

fn swap_ab(c: &[i64]) -> Vec<i64> {
    vec![c[0], c[2], c[1]]
}

fn swapped_box(bx: &WeightBox) -> WeightBox {
    let mut out = WeightBox::new(SuperType::D21, &swap_ab(bx.upper())).expect("rank 3");
    for (i, &l) in swap_ab(bx.lower()).iter().enumerate() {
        if l > 0 {
            out = out.fix(i, l);
        }
    }
    out
}

fn finite_set(ctx: &ScalarContext, bx: &WeightBox) -> Result<BTreeSet<Vec<i64>>, Error> {
    Ok(exsuper_core::classifier::list_finite(ctx, bx)?
        .iter()
        .map(coords)
        .collect())
}

/// Sets in `bx` and the `a ↔ b` mirror of the box.
pub fn zeta_symmetry(ctx: &ScalarContext, bx: &WeightBox) -> Result<Vec<Vec<i64>>, Error> {
    let inv = ctx.zeta_inverse().ok_or(Error::ZetaRequired)?;
    let here: BTreeSet<Vec<i64>> = finite_set(ctx, bx)?.iter().map(|c| swap_ab(c)).collect();
    let there = finite_set(&inv, &swapped_box(bx))?;
    Ok(here.symmetric_difference(&there).cloned().collect())
}

/// One report per admissible ζ ∈ F_p and the ζ ↔ ζ⁻¹ symmetry for each.
pub fn zeta_sweep(p: u64, bx: &WeightBox) -> Result<SweepReport, Error> {
    if bx.super_type() != SuperType::D21 {
        return Err(Error::ZetaNotApplicable(bx.super_type()));
    }
    // Validates p before anything else.
    ScalarContext::new(
        SuperType::D21,
        Characteristic::Prime(p),
        Some(ZetaMode::Generic),
    )?;
    let mut reports = Vec::new();
    let mut symmetry = Vec::new();
    for z in 1..p - 1 {
        let ctx = ScalarContext::d21(p, z)?;
        reports.push(verify_box(&ctx, bx)?);
        let inverse = match ctx.zeta_inverse().and_then(|c| c.zeta()) {
            Some(ZetaMode::Fp(v)) => v,
            _ => unreachable!("prime-field zeta has a prime-field inverse"),
        };
        symmetry.push(SymmetryCheck {
            zeta: z,
            inverse,
            discrepancies: zeta_symmetry(&ctx, bx)?,
        });
    }
    Ok(SweepReport {
        p,
        reports,
        symmetry,
    })
}
