//! Scalar contexts: characteristic, the ζ parameter and reduction of pairings.

use core::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::lattice::{FormValue, SuperType};
use crate::Error;

/// Characteristic of the ground field. `Zero` plays the role of `p = ∞`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Characteristic {
    Zero,
    Prime(u64),
}

impl Characteristic {
    /// Is the integer `n` zero in the ground field?
    pub fn kills(self, n: i64) -> bool {
        match self {
            Characteristic::Zero => n == 0,
            Characteristic::Prime(p) => (n as i128).rem_euclid(p as i128) == 0,
        }
    }

    pub fn prime(self) -> Option<u64> {
        match self {
            Characteristic::Zero => None,
            Characteristic::Prime(p) => Some(p),
        }
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Characteristic::Zero => f.write_str("0"),
            Characteristic::Prime(p) => write!(f, "{}", p),
        }
    }
}

/// How ζ is specified for D(2|1;ζ).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZetaMode {
    /// An element of the prime field, given by a representative.
    Fp(u64),
    /// A rational value, characteristic zero only.
    Rational(Ratio<i64>),
    /// ζ transcendental over the prime field: `q0 + q1·ζ` vanishes only when both parts do.
    Generic,
}

impl fmt::Display for ZetaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZetaMode::Fp(v) => write!(f, "{}", v),
            ZetaMode::Rational(q) => write!(f, "{}", q),
            ZetaMode::Generic => f.write_str("generic"),
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// A validated (type, characteristic, ζ) triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScalarContext {
    ty: SuperType,
    characteristic: Characteristic,
    zeta: Option<ZetaMode>,
}

impl ScalarContext {
    pub fn new(
        ty: SuperType,
        characteristic: Characteristic,
        zeta: Option<ZetaMode>,
    ) -> Result<Self, Error> {
        if let Characteristic::Prime(p) = characteristic {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            match (ty, p) {
                (SuperType::F31, 3) => return Err(Error::F31CharacteristicThree),
                (_, 2) => return Err(Error::CharacteristicTooSmall { ty, p }),
                _ => {}
            }
        }
        match (ty, zeta) {
            (SuperType::D21, None) => return Err(Error::ZetaRequired),
            (SuperType::D21, Some(z)) => match (characteristic, z) {
                (Characteristic::Prime(p), ZetaMode::Fp(v)) => {
                    let v = v % p;
                    if v == 0 || v == p - 1 {
                        return Err(Error::DegenerateZeta);
                    }
                }
                (Characteristic::Zero, ZetaMode::Rational(q)) => {
                    if q == Ratio::from_integer(0) || q == Ratio::from_integer(-1) {
                        return Err(Error::DegenerateZeta);
                    }
                }
                (_, ZetaMode::Generic) => {}
                _ => return Err(Error::ZetaModeMismatch),
            },
            (_, Some(_)) => return Err(Error::ZetaNotApplicable(ty)),
            (_, None) => {}
        }
        let zeta = match (characteristic, zeta) {
            (Characteristic::Prime(p), Some(ZetaMode::Fp(v))) => Some(ZetaMode::Fp(v % p)),
            _ => zeta,
        };
        Ok(ScalarContext {
            ty,
            characteristic,
            zeta,
        })
    }

    /// Context over `F_p` for G(3) or F(3|1).
    pub fn prime(ty: SuperType, p: u64) -> Result<Self, Error> {
        Self::new(ty, Characteristic::Prime(p), None)
    }

    /// D(2|1;ζ) over `F_p` with `ζ = zeta mod p`.
    pub fn d21(p: u64, zeta: u64) -> Result<Self, Error> {
        Self::new(
            SuperType::D21,
            Characteristic::Prime(p),
            Some(ZetaMode::Fp(zeta)),
        )
    }

    pub fn super_type(&self) -> SuperType {
        self.ty
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn zeta(&self) -> Option<ZetaMode> {
        self.zeta
    }

    /// The same context with ζ replaced by ζ⁻¹. `None` outside D(2|1;ζ).
    pub fn zeta_inverse(&self) -> Option<ScalarContext> {
        let z = match (self.characteristic, self.zeta?) {
            (Characteristic::Prime(p), ZetaMode::Fp(v)) => {
                let inv = (v as i128)
                    .extended_gcd(&(p as i128))
                    .x
                    .rem_euclid(p as i128);
                ZetaMode::Fp(inv as u64)
            }
            (_, ZetaMode::Rational(q)) => ZetaMode::Rational(q.recip()),
            (_, ZetaMode::Generic) => ZetaMode::Generic,
            _ => return None,
        };
        Some(ScalarContext {
            zeta: Some(z),
            ..*self
        })
    }

    pub fn reduce(&self, x: FormValue) -> Result<Residue, Error> {
        reduce(x, self)
    }

    pub fn is_zero(&self, x: FormValue) -> Result<bool, Error> {
        is_zero(x, self)
    }
}

impl fmt::Display for ScalarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} char={}", self.ty, self.characteristic)?;
        if let Some(z) = self.zeta {
            write!(f, " zeta={}", z)?;
        }
        Ok(())
    }
}

/// A reduced scalar. Finite-characteristic residues represent `4x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Residue {
    Modular {
        value: u64,
        modulus: u64,
    },
    /// Generic ζ over `F_p`: the two components of `4x`.
    ModularPair {
        q0: u64,
        q1: u64,
        modulus: u64,
    },
    Exact(Ratio<i64>),
    /// Generic ζ in characteristic zero.
    Pair(Ratio<i64>, Ratio<i64>),
}

impl Residue {
    pub fn is_zero(&self) -> bool {
        match *self {
            Residue::Modular { value, .. } => value == 0,
            Residue::ModularPair { q0, q1, .. } => q0 == 0 && q1 == 0,
            Residue::Exact(q) => q == Ratio::from_integer(0),
            Residue::Pair(a, b) => a == Ratio::from_integer(0) && b == Ratio::from_integer(0),
        }
    }
}

fn modp(n: i128, p: u64) -> u64 {
    n.rem_euclid(p as i128) as u64
}

/// Reduce a pairing value in `ctx`.
pub fn reduce(x: FormValue, ctx: &ScalarContext) -> Result<Residue, Error> {
    let (q0, q1) = x.quarters();
    if q1 != 0 && ctx.zeta.is_none() {
        return Err(Error::ZetaMissing);
    }
    Ok(match (ctx.characteristic, ctx.zeta) {
        (Characteristic::Prime(p), Some(ZetaMode::Generic)) => Residue::ModularPair {
            q0: modp(q0 as i128, p),
            q1: modp(q1 as i128, p),
            modulus: p,
        },
        (Characteristic::Prime(p), Some(ZetaMode::Fp(v))) => Residue::Modular {
            value: modp(q0 as i128 + q1 as i128 * v as i128, p),
            modulus: p,
        },
        (Characteristic::Prime(p), _) => Residue::Modular {
            value: modp(q0 as i128, p),
            modulus: p,
        },
        (Characteristic::Zero, Some(ZetaMode::Generic)) => Residue::Pair(x.q0(), x.q1()),
        (Characteristic::Zero, Some(ZetaMode::Rational(z))) => Residue::Exact(x.q0() + x.q1() * z),
        (Characteristic::Zero, _) => Residue::Exact(x.q0()),
    })
}

/// `x ≡ 0` in `ctx`.
pub fn is_zero(x: FormValue, ctx: &ScalarContext) -> Result<bool, Error> {
    reduce(x, ctx).map(|r| r.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Ratio<i64> {
        Ratio::new(n, d)
    }

    #[test]
    fn reduce_examples() {
        let ctx = ScalarContext::d21(5, 4);
        // ζ = 4 ≡ −1 is excluded outright.
        assert_eq!(ctx, Err(Error::DegenerateZeta));

        // −1−ζ with generic ζ over F_5 keeps both components of 4x.
        let x = FormValue::from_integers(-1, -1);
        let gen = ScalarContext::new(
            SuperType::D21,
            Characteristic::Prime(5),
            Some(ZetaMode::Generic),
        )
        .unwrap();
        assert_eq!(
            reduce(x, &gen).unwrap(),
            Residue::ModularPair {
                q0: 1,
                q1: 1,
                modulus: 5
            }
        );
        let ctx3 = ScalarContext::d21(5, 3).unwrap();
        assert_eq!(
            reduce(x, &ctx3).unwrap(),
            Residue::Modular {
                value: (4 * (-1 - 3i64)).rem_euclid(5) as u64,
                modulus: 5
            }
        );

        let g = ScalarContext::prime(SuperType::F31, 5).unwrap();
        let half = FormValue::from_quarters(-6, 0);
        assert_eq!(
            reduce(half, &g).unwrap(),
            Residue::Modular {
                value: 4,
                modulus: 5
            }
        );
        assert!(!is_zero(half, &g).unwrap());
        assert!(is_zero(FormValue::ZERO, &g).unwrap());
    }

    #[test]
    fn is_zero_examples() {
        let ctx = ScalarContext::d21(5, 1).unwrap();
        let (d, a, b) = (0, 5, 10);
        let x = FormValue::from_integers(-(a + d), -(b + d));
        assert!(is_zero(x, &ctx).unwrap());

        let g0 = ScalarContext::new(SuperType::G3, Characteristic::Zero, None).unwrap();
        assert!(is_zero(FormValue::ZERO, &g0).unwrap());

        let gen = ScalarContext::new(
            SuperType::D21,
            Characteristic::Zero,
            Some(ZetaMode::Generic),
        )
        .unwrap();
        assert!(!is_zero(FormValue::from_integers(-1, 1), &gen).unwrap());
    }

    #[test]
    fn context_validation() {
        use Characteristic::*;
        assert_eq!(
            ScalarContext::prime(SuperType::F31, 3),
            Err(Error::F31CharacteristicThree)
        );
        assert!(ScalarContext::prime(SuperType::G3, 3).is_ok());
        assert!(ScalarContext::d21(3, 1).is_ok());
        assert_eq!(
            ScalarContext::prime(SuperType::G3, 9),
            Err(Error::NotPrime(9))
        );
        assert!(matches!(
            ScalarContext::prime(SuperType::G3, 2),
            Err(Error::CharacteristicTooSmall { .. })
        ));
        assert_eq!(ScalarContext::d21(7, 0), Err(Error::DegenerateZeta));
        assert_eq!(ScalarContext::d21(7, 13), Err(Error::DegenerateZeta));
        assert_eq!(
            ScalarContext::new(SuperType::D21, Prime(7), None),
            Err(Error::ZetaRequired)
        );
        assert_eq!(
            ScalarContext::new(SuperType::G3, Prime(7), Some(ZetaMode::Fp(2))),
            Err(Error::ZetaNotApplicable(SuperType::G3))
        );
        assert_eq!(
            ScalarContext::new(SuperType::D21, Zero, Some(ZetaMode::Fp(2))),
            Err(Error::ZetaModeMismatch)
        );
        assert_eq!(
            ScalarContext::new(SuperType::D21, Zero, Some(ZetaMode::Rational(q(-1, 1)))),
            Err(Error::DegenerateZeta)
        );
        assert!(ScalarContext::new(SuperType::D21, Prime(7), Some(ZetaMode::Generic)).is_ok());
    }

    #[test]
    fn zeta_inverse() {
        let ctx = ScalarContext::d21(5, 2).unwrap();
        assert_eq!(ctx.zeta_inverse().unwrap().zeta(), Some(ZetaMode::Fp(3)));
        let r = ScalarContext::new(
            SuperType::D21,
            Characteristic::Zero,
            Some(ZetaMode::Rational(q(2, 3))),
        )
        .unwrap();
        assert_eq!(
            r.zeta_inverse().unwrap().zeta(),
            Some(ZetaMode::Rational(q(3, 2)))
        );
        assert!(ScalarContext::prime(SuperType::G3, 5)
            .unwrap()
            .zeta_inverse()
            .is_none());
    }

    #[test]
    fn zeta_component_needs_zeta() {
        let g = ScalarContext::prime(SuperType::G3, 5).unwrap();
        assert_eq!(
            reduce(FormValue::from_integers(0, 1), &g),
            Err(Error::ZetaMissing)
        );
    }

    #[test]
    fn primes() {
        let small: alloc::vec::Vec<u64> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        fn ctx_strategy() -> impl Strategy<Value = ScalarContext> {
            prop_oneof![
                (
                    prop::sample::select(alloc::vec![3u64, 5, 7, 11, 13]),
                    1u64..12
                )
                    .prop_filter_map("degenerate", |(p, z)| ScalarContext::d21(p, z).ok()),
                prop::sample::select(alloc::vec![5u64, 7, 11, 13])
                    .prop_map(|p| ScalarContext::prime(SuperType::F31, p).unwrap()),
                Just(
                    ScalarContext::new(
                        SuperType::D21,
                        Characteristic::Zero,
                        Some(ZetaMode::Generic)
                    )
                    .unwrap()
                ),
            ]
        }

        fn value(ctx: &ScalarContext, q0: i64, q1: i64) -> FormValue {
            if ctx.super_type() == SuperType::D21 {
                FormValue::from_quarters(q0, q1)
            } else {
                FormValue::from_quarters(q0, 0)
            }
        }

        proptest! {
            #[test]
            fn zero_is_an_ideal(ctx in ctx_strategy(), a in -400i64..400, b in -400i64..400,
                                c in -400i64..400, e in -400i64..400, k in -20i64..20) {
                let x = value(&ctx, a, b);
                let y = value(&ctx, c, e);
                if is_zero(x, &ctx).unwrap() && is_zero(y, &ctx).unwrap() {
                    prop_assert!(is_zero(x + y, &ctx).unwrap());
                }
                if is_zero(x, &ctx).unwrap() {
                    prop_assert!(is_zero(x * k, &ctx).unwrap());
                }
            }

            #[test]
            fn scaling_by_four_is_sound(ctx in ctx_strategy(), a in -400i64..400, b in -400i64..400) {
                let x = value(&ctx, a, b);
                prop_assert_eq!(is_zero(x, &ctx).unwrap(), is_zero(x * 4, &ctx).unwrap());
            }

            #[test]
            fn generic_zero_implies_rational_zero(a in -400i64..400, b in -400i64..400,
                                                  zn in -30i64..30, zd in 1i64..30) {
                let x = FormValue::from_quarters(a, b);
                let gen = ScalarContext::new(SuperType::D21, Characteristic::Zero,
                                             Some(ZetaMode::Generic)).unwrap();
                if let Ok(rat) = ScalarContext::new(SuperType::D21, Characteristic::Zero,
                                                    Some(ZetaMode::Rational(Ratio::new(zn, zd)))) {
                    if is_zero(x, &gen).unwrap() {
                        prop_assert!(is_zero(x, &rat).unwrap());
                    }
                }
            }
        }
    }
}
