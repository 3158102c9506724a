//! Argument model and dispatch for the `exsuper` binary.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use exsuper_core::classifier::{
    classify_by_propositions, classify_by_theorem, classify_char0, classify_with_chain, list_finite,
};
use exsuper_core::euler::{euler_char, is_regular_dominant, top_term};
use exsuper_core::reflection::chain;
use exsuper_core::{Characteristic, ScalarContext, SuperType, Weight, WeightBox, ZetaMode};
use num_rational::Ratio;
use serde_json::{json, Value};
use thiserror::Error;

use crate::report::{
    chain_json, coords, metric_json, parse_type, type_tag, ClassJson, CtxJson, TopJson,
};
use crate::verify::{char0_check, verify_box, zeta_sweep};

#[derive(Debug, Parser)]
#[command(
    name = "exsuper",
    version,
    about = "Finite-dimensional simple modules of D(2|1;zeta), G(3) and F(3|1)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide one weight by odd reflections and by the closed-form clauses.
    Classify(Opts),
    /// Highest weights at every Borel node.
    Chain(Opts),
    /// Every finite weight in a box.
    List(Opts),
    /// Cross-check all methods over a box. `--char 0` checks the stated characteristic-zero lists.
    Verify(Opts),
    /// Euler characteristic and its top term.
    Chi(Opts),
    /// `verify` for every ζ of F_p, plus the ζ ↔ ζ⁻¹ symmetry (type d only).
    Sweep(Opts),
}

#[derive(Debug, Args)]
pub struct Opts {
    /// d, g3 or f4.
    #[arg(long = "type", value_parser = parse_type)]
    pub ty: SuperType,
    /// A prime, or 0 for characteristic zero.
    #[arg(long = "char")]
    pub characteristic: Option<u64>,
    /// Integer (or `p/q` in characteristic zero) or `generic`; type d only.
    #[arg(long, allow_hyphen_values = true)]
    pub zeta: Option<String>,
    /// Comma-separated coordinates: d,a,b / d,r,s / a,b,c,d.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub weight: Option<Vec<i64>>,
    /// Comma-separated inclusive upper bounds.
    #[arg(long = "box", value_delimiter = ',')]
    pub bounds: Option<Vec<i64>>,
    /// Output file; `-` or absent for stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] exsuper_core::Error),
    #[error("{0}")]
    Usage(String),
}

/// A finished command: the JSON document and whether it reports a failure.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub failed: bool,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome {
            json,
            failed: false,
        }
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed)
    }
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn parse_zeta(s: &str, ch: Characteristic) -> Result<ZetaMode, CliError> {
    if s.eq_ignore_ascii_case("generic") {
        return Ok(ZetaMode::Generic);
    }
    match ch {
        Characteristic::Prime(p) => match s.parse::<i64>() {
            Ok(v) => Ok(ZetaMode::Fp(v.rem_euclid(p as i64) as u64)),
            Err(_) => usage(format!("zeta `{s}` is not an integer or `generic`")),
        },
        Characteristic::Zero => match s.parse::<Ratio<i64>>() {
            Ok(q) => Ok(ZetaMode::Rational(q)),
            Err(_) => usage(format!("zeta `{s}` is not a rational number or `generic`")),
        },
    }
}

impl Opts {
    fn char_required(&self) -> Result<Characteristic, CliError> {
        match self.characteristic {
            None => usage("--char is required"),
            Some(0) => Ok(Characteristic::Zero),
            Some(p) => Ok(Characteristic::Prime(p)),
        }
    }

    fn context(&self) -> Result<ScalarContext, CliError> {
        let ch = self.char_required()?;
        let zeta = self
            .zeta
            .as_deref()
            .map(|s| parse_zeta(s, ch))
            .transpose()?;
        Ok(ScalarContext::new(self.ty, ch, zeta)?)
    }

    fn weight(&self) -> Result<Weight, CliError> {
        match &self.weight {
            None => usage("--weight is required"),
            Some(c) => Ok(Weight::new(self.ty, c)?),
        }
    }

    fn weight_box(&self, default: i64) -> Result<WeightBox, CliError> {
        match &self.bounds {
            None => Ok(WeightBox::cube(self.ty, default)),
            Some(b) if b.iter().any(|&x| x < 0) => usage("--box bounds must be nonnegative"),
            Some(b) => Ok(WeightBox::new(self.ty, b)?),
        }
    }

    fn forbid_extra(&self, weight: bool, bounds: bool) -> Result<(), CliError> {
        if !weight && self.weight.is_some() {
            return usage("--weight is not used by this subcommand");
        }
        if !bounds && self.bounds.is_some() {
            return usage("--box is not used by this subcommand");
        }
        Ok(())
    }
}

/// Default box bound: every residue class mod `p` appears at least twice.
fn default_bound(ch: Characteristic) -> i64 {
    match ch {
        Characteristic::Prime(p) => 2 * p as i64 + 1,
        Characteristic::Zero => 12,
    }
}

pub fn run(cmd: &Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Classify(o) => {
            o.forbid_extra(true, false)?;
            let ctx = o.context()?;
            let w = o.weight()?;
            let (a, _) = classify_with_chain(&w, &ctx)?;
            let b = match ctx.characteristic() {
                Characteristic::Zero => classify_char0(&w, ctx.zeta())?,
                Characteristic::Prime(_) => classify_by_theorem(&w, &ctx)?,
            };
            let props = classify_by_propositions(&w, &ctx)?;
            Ok(Outcome::ok(json!({
                "type": type_tag(o.ty),
                "ctx": CtxJson::from(&ctx),
                "lambda": coords(&w),
                "finite": a.verdict.is_finite(),
                "agree": a.verdict == b.verdict && a.verdict == props.verdict,
                "method_a": ClassJson::from(&a),
                "method_b": ClassJson::from(&b),
                "propositions": ClassJson::from(&props),
            })))
        }
        Command::Chain(o) => {
            o.forbid_extra(true, false)?;
            let ctx = o.context()?;
            let w = o.weight()?;
            let ch = chain(&w, &ctx)?;
            Ok(Outcome::ok(json!({
                "type": type_tag(o.ty),
                "ctx": CtxJson::from(&ctx),
                "lambda": coords(&w),
                "nodes": chain_json(&ch),
            })))
        }
        Command::List(o) => {
            o.forbid_extra(false, true)?;
            let ctx = o.context()?;
            let bx = o.weight_box(default_bound(ctx.characteristic()))?;
            let listed: Vec<Vec<i64>> = list_finite(&ctx, &bx)?.iter().map(coords).collect();
            Ok(Outcome::ok(json!(listed)))
        }
        Command::Verify(o) => {
            o.forbid_extra(false, true)?;
            let ch = o.char_required()?;
            let report = match ch {
                Characteristic::Zero if o.zeta.is_none() || o.ty != SuperType::D21 => {
                    // Checks against the stated lists; D uses generic ζ.
                    if o.zeta.is_some() {
                        o.context()?;
                    }
                    char0_check(&o.weight_box(default_bound(ch))?)?
                }
                _ => {
                    let ctx = o.context()?;
                    verify_box(&ctx, &o.weight_box(default_bound(ch))?)?
                }
            };
            let failed = !report.passed();
            Ok(Outcome {
                json: serde_json::to_value(report).expect("report serializes"),
                failed,
            })
        }
        Command::Chi(o) => {
            o.forbid_extra(true, false)?;
            if o.characteristic.is_some() || o.zeta.is_some() {
                return usage("chi takes neither --char nor --zeta");
            }
            let w = o.weight()?;
            let chi = euler_char(&w)?;
            let support: Vec<Value> = chi
                .terms()
                .map(|(m, c)| json!([metric_json(&m), c]))
                .collect();
            let (top, maximal) = match top_term(&chi) {
                Ok(t) => (Some(TopJson::from(&t)), Vec::new()),
                Err(exsuper_core::Error::AmbiguousTop(pts)) => {
                    (None, pts.iter().map(metric_json).collect())
                }
                Err(e) => return Err(e.into()),
            };
            Ok(Outcome::ok(json!({
                "type": type_tag(o.ty),
                "lambda": coords(&w),
                "regular_dominant": is_regular_dominant(&w),
                "support": support,
                "top": top,
                "maximal_points": maximal,
            })))
        }
        Command::Sweep(o) => {
            o.forbid_extra(false, true)?;
            if o.ty != SuperType::D21 {
                return usage("sweep is for type d only");
            }
            if o.zeta.is_some() {
                return usage("sweep runs every zeta; drop --zeta");
            }
            let p = match o.char_required()? {
                Characteristic::Prime(p) => p,
                Characteristic::Zero => return usage("sweep needs a prime --char"),
            };
            let report = zeta_sweep(p, &o.weight_box(default_bound(Characteristic::Prime(p)))?)?;
            let failed = !report.passed();
            Ok(Outcome {
                json: serde_json::to_value(report).expect("report serializes"),
                failed,
            })
        }
    }
}

impl Command {
    pub fn opts(&self) -> &Opts {
        match self {
            Command::Classify(o)
            | Command::Chain(o)
            | Command::List(o)
            | Command::Verify(o)
            | Command::Chi(o)
            | Command::Sweep(o) => o,
        }
    }
}
