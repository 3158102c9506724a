//! Two independent deciders of finite dimensionality.
//!
//! Method A ([`classify_by_reflections`]) is the reference: transport `λ`
//! along the odd-reflection graph and ask that every `λⁱ` be dominant.
//! Method B ([`classify_by_theorem`]) evaluates literal clause tables of the
//! closed-form classification. A third table of intermediate conditions
//! ([`classify_by_propositions`]) is kept for three-way cross-checks.

use alloc::vec::Vec;
use core::fmt;

use crate::field::{Characteristic, ScalarContext, ZetaMode};
use crate::lattice::{FormValue, SuperType, Weight, WeightBox};
use crate::reflection::{chain, ChainResult};
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Finite,
    Infinite,
}

impl Verdict {
    pub fn from_bool(finite: bool) -> Self {
        if finite {
            Verdict::Finite
        } else {
            Verdict::Infinite
        }
    }

    pub fn is_finite(self) -> bool {
        self == Verdict::Finite
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Finite => "FINITE",
            Verdict::Infinite => "INFINITE",
        })
    }
}

/// First node of the chain whose weight leaves the dominant cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Witness {
    pub node: usize,
    pub weight: Weight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Classification {
    pub verdict: Verdict,
    /// Set only for an INFINITE verdict of method A.
    pub witness: Option<Witness>,
    /// Set only for a FINITE verdict of a clause table.
    pub clause: Option<&'static str>,
}

/// `(c·λ + k) + (z·λ + zk)·ζ` over the weight coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lin {
    c: [i64; 4],
    k: i64,
    z: [i64; 4],
    zk: i64,
}

impl Lin {
    fn eval(&self, lambda: &Weight) -> FormValue {
        let x = lambda.coords();
        let dot = |v: &[i64; 4]| x.iter().zip(v).map(|(a, b)| a * b).sum::<i64>();
        FormValue::from_integers(dot(&self.c) + self.k, dot(&self.z) + self.zk)
    }
}

const fn lin(c: [i64; 4], k: i64) -> Lin {
    Lin {
        c,
        k,
        z: [0; 4],
        zk: 0,
    }
}

const fn lz(c: [i64; 4], k: i64, z: [i64; 4], zk: i64) -> Lin {
    Lin { c, k, z, zk }
}

/// One condition inside a clause.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    /// `L(λ) ≡ 0`.
    Zero(Lin),
    /// `L(λ) ≢ 0`.
    NonZero(Lin),
    /// Coordinate `i` is at least `k` (a genuine integer inequality).
    AtLeast(usize, i64),
}

/// Restriction on the δ-side coordinate `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DRange {
    Eq(i64),
    AtLeast(i64),
    Any,
}

/// One named clause of a classification table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClauseSpec {
    pub id: &'static str,
    pub d: DRange,
    pub atoms: &'static [Atom],
}

impl ClauseSpec {
    pub fn holds(&self, lambda: &Weight, ctx: &ScalarContext) -> Result<bool, Error> {
        let d = lambda.delta_coord();
        let d_ok = match self.d {
            DRange::Eq(k) => d == k,
            DRange::AtLeast(k) => d >= k,
            DRange::Any => true,
        };
        if !d_ok {
            return Ok(false);
        }
        for atom in self.atoms {
            let ok = match atom {
                Atom::Zero(l) => ctx.is_zero(l.eval(lambda))?,
                Atom::NonZero(l) => !ctx.is_zero(l.eval(lambda))?,
                Atom::AtLeast(i, k) => lambda.coords()[*i] >= *k,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

use Atom::{AtLeast, NonZero, Zero};

const fn c(id: &'static str, d: DRange, atoms: &'static [Atom]) -> ClauseSpec {
    ClauseSpec { id, d, atoms }
}

// D(2|1;ζ), coordinates (d, a, b).
const D_THEOREM: &[ClauseSpec] = &[
    c(
        "ThmD(1)",
        DRange::Eq(0),
        &[Zero(lin([0, 1, 0, 0], 0)), Zero(lin([0, 0, 1, 0], 0))],
    ),
    c(
        "ThmD(2)",
        DRange::Eq(1),
        &[Zero(lz([0, 1, 0, 0], 1, [0, 0, -1, 0], -1))],
    ),
    c(
        "ThmD(3)",
        DRange::Eq(1),
        &[Zero(lz([0, 1, 0, 0], 1, [0, 0, 1, 0], 1))],
    ),
    c("ThmD(4)", DRange::AtLeast(2), &[]),
];

// The mutually exclusive list from the case analysis, before simplification.
const D_X: Lin = lz([1, 1, 0, 0], 0, [1, 0, 1, 0], 0); // (a+d) + (b+d)ζ
const D_Y: Lin = lz([-1, 1, 0, 0], 0, [-1, 0, -1, 0], 0); // (a−d) − (b+d)ζ
const D_Z: Lin = lz([-1, -1, 0, 0], 0, [-1, 0, 1, 0], 0); // −(a+d) + (b−d)ζ
const D_Y2: Lin = lz([-1, 1, 0, 0], 2, [-1, 0, -1, 0], 0);
const D_Z2: Lin = lz([-1, -1, 0, 0], 0, [-1, 0, 1, 0], 2);

const D_CASES: &[ClauseSpec] = &[
    c(
        "DCase(i)",
        DRange::Eq(0),
        &[Zero(D_X), Zero(D_Y), Zero(D_Z)],
    ),
    c(
        "DCase(ii)",
        DRange::Eq(1),
        &[NonZero(D_X), Zero(D_Y2), Zero(D_Z2)],
    ),
    c(
        "DCase(iii-a)",
        DRange::Eq(1),
        &[
            Zero(D_X),
            NonZero(D_Y),
            AtLeast(1, 1),
            NonZero(D_Z),
            AtLeast(2, 1),
        ],
    ),
    c(
        "DCase(iii-b)",
        DRange::Eq(1),
        &[Zero(D_X), Zero(D_Y), NonZero(D_Z), AtLeast(2, 1)],
    ),
    c(
        "DCase(iv-a)",
        DRange::Eq(1),
        &[Zero(D_X), NonZero(D_Y), AtLeast(1, 1), Zero(D_Z)],
    ),
    c(
        "DCase(iv-b)",
        DRange::Eq(1),
        &[Zero(D_X), Zero(D_Y), Zero(D_Z)],
    ),
    c("DCase(v)", DRange::AtLeast(2), &[]),
];

// G(3), coordinates (d, r, s).
const G_THEOREM: &[ClauseSpec] = &[
    c(
        "ThmG3(1)",
        DRange::Eq(0),
        &[Zero(lin([0, 3, 0, 0], 0)), Zero(lin([0, 0, 1, 0], 0))],
    ),
    c(
        "ThmG3(2)(i)",
        DRange::Eq(1),
        &[Zero(lin([0, 0, 1, 0], -1)), Zero(lin([0, 3, 0, 0], 4))],
    ),
    c(
        "ThmG3(2)(ii)",
        DRange::Eq(1),
        &[Zero(lin([0, 0, 1, 0], 0)), Zero(lin([0, 3, 0, 0], 2))],
    ),
    c("ThmG3(3)(i)", DRange::Eq(2), &[Zero(lin([0, 0, 1, 0], 0))]),
    c("ThmG3(3)(ii)", DRange::Eq(2), &[Zero(lin([0, 3, 1, 0], 3))]),
    c(
        "ThmG3(3)(iii)",
        DRange::Eq(2),
        &[Zero(lin([0, 3, 2, 0], 4))],
    ),
    c("ThmG3(4)", DRange::AtLeast(3), &[]),
];

const G_THEOREM_P3: &[ClauseSpec] = &[
    c("ThmG3p3(1)", DRange::Eq(0), &[Zero(lin([0, 0, 1, 0], 0))]),
    c("ThmG3p3(2)", DRange::Eq(2), &[Zero(lin([0, 0, 1, 0], 0))]),
    c("ThmG3p3(2)", DRange::Eq(2), &[Zero(lin([0, 0, 1, 0], -1))]),
    c("ThmG3p3(3)", DRange::AtLeast(3), &[]),
];

const G_X: Lin = lin([2, 3, 2, 0], 0);

// Raw dominance conditions, valid for p = 3 as well.
const G_RAW: &[ClauseSpec] = &[
    c(
        "PropG3(1)(a)(i)",
        DRange::AtLeast(3),
        &[
            NonZero(G_X),
            NonZero(lin([2, 3, 1, 0], -1)),
            NonZero(lin([2, 0, 1, 0], -4)),
        ],
    ),
    c(
        "PropG3(1)(a)(ii)",
        DRange::AtLeast(2),
        &[
            Zero(lin([2, 0, 1, 0], -4)),
            NonZero(lin([0, 3, 0, 0], 3)),
            NonZero(G_X),
        ],
    ),
    c(
        "PropG3(1)(b)(i)",
        DRange::AtLeast(2),
        &[
            NonZero(lin([0, 3, 0, 0], 0)),
            Zero(lin([2, 3, 1, 0], -1)),
            NonZero(G_X),
        ],
    ),
    c(
        "PropG3(1)(b)(ii)",
        DRange::AtLeast(2),
        &[
            Zero(lin([0, 3, 0, 0], 0)),
            Zero(lin([2, 0, 1, 0], -1)),
            NonZero(G_X),
        ],
    ),
    c(
        "PropG3(2)(a)(i)",
        DRange::AtLeast(2),
        &[
            NonZero(lin([0, 0, 1, 0], 0)),
            Zero(G_X),
            NonZero(lin([0, 3, 1, 0], 3)),
        ],
    ),
    c(
        "PropG3(2)(a)(ii)",
        DRange::AtLeast(1),
        &[
            NonZero(lin([0, 0, 1, 0], 0)),
            Zero(G_X),
            Zero(lin([0, 3, 1, 0], 3)),
        ],
    ),
    c(
        "PropG3(2)(b)(i)",
        DRange::Any,
        &[
            Zero(lin([0, 0, 1, 0], 0)),
            NonZero(lin([2, 0, 0, 0], 0)),
            Zero(lin([2, 3, 0, 0], 0)),
        ],
    ),
    c(
        "PropG3(2)(b)(ii)",
        DRange::Any,
        &[
            Zero(lin([2, 0, 0, 0], 0)),
            Zero(lin([0, 3, 0, 0], 0)),
            Zero(lin([0, 0, 1, 0], 0)),
        ],
    ),
];

// F(3|1), coordinates (a, b, c, d).
macro_rules! f4_table {
    ($name:ident, $d0:literal, $d1:literal, $d2:literal, $d3:literal, $d4:literal) => {
        const $name: &[ClauseSpec] = &[
            c(
                $d0,
                DRange::Eq(0),
                &[
                    Zero(lin([1, 0, 0, 0], 0)),
                    Zero(lin([0, 1, 0, 0], 0)),
                    Zero(lin([0, 0, 1, 0], 0)),
                ],
            ),
            c(
                concat!($d1, "(i)"),
                DRange::Eq(1),
                &[
                    Zero(lin([1, 0, 0, 0], 0)),
                    Zero(lin([0, 2, 0, 0], 3)),
                    Zero(lin([0, 0, 1, 0], -1)),
                ],
            ),
            c(
                concat!($d1, "(ii)"),
                DRange::Eq(1),
                &[
                    Zero(lin([2, 0, 0, 0], 1)),
                    Zero(lin([0, 2, 0, 0], 1)),
                    Zero(lin([0, 0, 1, 0], 0)),
                ],
            ),
            c(
                concat!($d1, "(iii)"),
                DRange::Eq(1),
                &[
                    Zero(lin([2, 0, 0, 0], 3)),
                    Zero(lin([0, 1, 0, 0], 0)),
                    Zero(lin([0, 0, 1, 0], 0)),
                ],
            ),
            c(
                concat!($d2, "(i)"),
                DRange::Eq(2),
                &[Zero(lin([1, 0, 0, 0], 0)), Zero(lin([0, 0, 1, 0], 0))],
            ),
            c(
                concat!($d2, "(ii)"),
                DRange::Eq(2),
                &[Zero(lin([2, 0, -1, 0], 0)), Zero(lin([1, 1, 0, 0], 1))],
            ),
            c(
                concat!($d2, "(iii)"),
                DRange::Eq(2),
                &[Zero(lin([0, 1, 0, 0], 0)), Zero(lin([2, 0, 1, 0], 4))],
            ),
            c(
                concat!($d2, "(iv)"),
                DRange::Eq(2),
                &[
                    Zero(lin([2, 0, -1, 0], 2)),
                    Zero(lin([2, 1, 0, 0], 3)),
                    AtLeast(2, 2),
                ],
            ),
            c(
                concat!($d2, "(v)"),
                DRange::Eq(2),
                &[
                    Zero(lin([2, 0, 1, 0], 2)),
                    Zero(lin([1, -1, 0, 0], 0)),
                    AtLeast(0, 1),
                ],
            ),
            c(
                concat!($d2, "(vi)"),
                DRange::Eq(2),
                &[Zero(lin([1, 2, 0, 0], 3)), Zero(lin([0, 0, 1, 0], 0))],
            ),
            c(
                concat!($d3, "(i)"),
                DRange::Eq(3),
                &[Zero(lin([2, 0, -1, 0], 1))],
            ),
            c(
                concat!($d3, "(ii)"),
                DRange::Eq(3),
                &[Zero(lin([2, 0, 1, 0], 3))],
            ),
            c(
                concat!($d3, "(iii)"),
                DRange::Eq(3),
                &[Zero(lin([2, 4, 1, 0], 7))],
            ),
            c(
                concat!($d3, "(iv)"),
                DRange::Eq(3),
                &[Zero(lin([2, 0, 1, 0], 7)), Zero(lin([0, 1, 0, 0], 0))],
            ),
            c(
                concat!($d3, "(v)"),
                DRange::Eq(3),
                &[Zero(lin([2, 4, 3, 0], 9))],
            ),
            c($d4, DRange::AtLeast(4), &[]),
        ];
    };
}

f4_table!(F_THEOREM, "ThmF4(1)", "ThmF4(2)", "ThmF4(3)", "ThmF4(4)", "ThmF4(5)");
f4_table!(F_PROPS, "PropF4d0", "PropF4d1", "PropF4d2", "PropF4d3", "PropF4d4");

/// The closed-form clause table for `ctx`.
pub fn theorem_clauses(ctx: &ScalarContext) -> &'static [ClauseSpec] {
    match ctx.super_type() {
        SuperType::D21 => D_THEOREM,
        SuperType::G3 if ctx.characteristic() == Characteristic::Prime(3) => G_THEOREM_P3,
        SuperType::G3 => G_THEOREM,
        SuperType::F31 => F_THEOREM,
    }
}

/// The intermediate condition table: the unsimplified case list for
/// D(2|1;ζ), the raw dominance conditions for G(3), and the per-`d`
/// propositions for F(3|1).
pub fn proposition_clauses(ty: SuperType) -> &'static [ClauseSpec] {
    match ty {
        SuperType::D21 => D_CASES,
        SuperType::G3 => G_RAW,
        SuperType::F31 => F_PROPS,
    }
}

fn check(lambda: &Weight, ctx: &ScalarContext) -> Result<(), Error> {
    if lambda.super_type() != ctx.super_type() {
        return Err(Error::TypeMismatch {
            weight: lambda.super_type(),
            context: ctx.super_type(),
        });
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(alloc::format!("{}", lambda)));
    }
    Ok(())
}

fn first_clause(
    table: &'static [ClauseSpec],
    lambda: &Weight,
    ctx: &ScalarContext,
) -> Result<Classification, Error> {
    for clause in table {
        if clause.holds(lambda, ctx)? {
            return Ok(Classification {
                verdict: Verdict::Finite,
                witness: None,
                clause: Some(clause.id),
            });
        }
    }
    Ok(Classification {
        verdict: Verdict::Infinite,
        witness: None,
        clause: None,
    })
}

/// Method A, also returning the chain it was decided on.
pub fn classify_with_chain(
    lambda: &Weight,
    ctx: &ScalarContext,
) -> Result<(Classification, ChainResult), Error> {
    check(lambda, ctx)?;
    let ch = chain(lambda, ctx)?;
    let witness = ch.first_non_dominant().map(|node| Witness {
        node,
        weight: ch.weight(node),
    });
    let class = Classification {
        verdict: Verdict::from_bool(witness.is_none()),
        witness,
        clause: None,
    };
    Ok((class, ch))
}

/// Method A: FINITE iff every `λⁱ` along the graph is dominant.
pub fn classify_by_reflections(
    lambda: &Weight,
    ctx: &ScalarContext,
) -> Result<Classification, Error> {
    classify_with_chain(lambda, ctx).map(|(c, _)| c)
}

/// Method B: the literal closed-form clauses. Finite characteristic only.
pub fn classify_by_theorem(lambda: &Weight, ctx: &ScalarContext) -> Result<Classification, Error> {
    check(lambda, ctx)?;
    if ctx.characteristic() == Characteristic::Zero {
        return Err(Error::NeedsPrimeCharacteristic);
    }
    first_clause(theorem_clauses(ctx), lambda, ctx)
}

/// The intermediate condition table; any characteristic.
pub fn classify_by_propositions(
    lambda: &Weight,
    ctx: &ScalarContext,
) -> Result<Classification, Error> {
    check(lambda, ctx)?;
    first_clause(proposition_clauses(ctx.super_type()), lambda, ctx)
}

/// The closed-form clauses read with `p = ∞`: every congruence becomes an
/// exact equation. `zeta` is required for D(2|1;ζ) and must be rational or
/// generic.
pub fn classify_char0(lambda: &Weight, zeta: Option<ZetaMode>) -> Result<Classification, Error> {
    let ctx = ScalarContext::new(lambda.super_type(), Characteristic::Zero, zeta)?;
    check(lambda, &ctx)?;
    let table = match lambda.super_type() {
        SuperType::D21 => D_THEOREM,
        SuperType::G3 => G_THEOREM,
        SuperType::F31 => F_THEOREM,
    };
    first_clause(table, lambda, &ctx)
}

/// Every weight of `bx` that method A declares FINITE, in lexicographic order.
pub fn list_finite(ctx: &ScalarContext, bx: &WeightBox) -> Result<Vec<Weight>, Error> {
    let mut out = Vec::new();
    for lambda in bx.iter().filter(Weight::is_dominant) {
        if classify_by_reflections(&lambda, ctx)?.verdict.is_finite() {
            out.push(lambda);
        }
    }
    Ok(out)
}
