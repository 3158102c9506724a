//! Literal root data for the three exceptional types.
//!
//! Every vector is written in half-units over the metric basis: D(2|1;ζ) and
//! G(3) use `(δ, ε₁, ε₂)` (for G(3), `ε₃ = -ε₁ - ε₂`), F(3|1) uses
//! `(δ, ε₁, ε₂, ε₃)`. So `[2, -2, -2]` is `δ - ε₁ - ε₂`.

pub(crate) type Halves = [i64; 4];

/// Gram entries as `(constant, ζ-coefficient)`, integral in every type.
pub(crate) type GramRow = [(i64, i64); 4];

pub(crate) struct TypeData {
    pub gram: [GramRow; 4],
    pub odd_roots: &'static [Halves],
    pub simple_systems: &'static [&'static [Halves]],
    pub even_simple: &'static [Halves],
    pub even_positive: &'static [Halves],
    pub odd_positive: &'static [Halves],
    pub rho: Halves,
    pub rho0: Halves,
    pub rho1: Halves,
}

const Z: (i64, i64) = (0, 0);

// D(2|1;ζ): (δ,δ) = -(1+ζ), (ε₁,ε₁) = 1, (ε₂,ε₂) = ζ.
const D_BETA1: Halves = [2, -2, -2, 0];
const D_BETA2: Halves = [2, 2, -2, 0];
const D_BETA3: Halves = [2, -2, 2, 0];
const D_BETA4: Halves = [2, 2, 2, 0];
const D_2DELTA: Halves = [4, 0, 0, 0];
const D_2EPS1: Halves = [0, 4, 0, 0];
const D_2EPS2: Halves = [0, 0, 4, 0];

pub(crate) const D21: TypeData = TypeData {
    gram: [
        [(-1, -1), Z, Z, Z],
        [Z, (1, 0), Z, Z],
        [Z, Z, (0, 1), Z],
        [Z, Z, Z, Z],
    ],
    odd_roots: &[D_BETA1, D_BETA2, D_BETA3, D_BETA4],
    simple_systems: &[
        &[D_BETA1, D_2EPS1, D_2EPS2],
        &[[-2, 2, 2, 0], D_BETA2, D_BETA3],
        &[D_2EPS1, [-2, -2, 2, 0], D_2DELTA],
        &[D_2EPS2, D_2DELTA, [-2, 2, -2, 0]],
    ],
    even_simple: &[D_2DELTA, D_2EPS1, D_2EPS2],
    even_positive: &[D_2DELTA, D_2EPS1, D_2EPS2],
    odd_positive: &[D_BETA1, D_BETA2, D_BETA3, D_BETA4],
    rho: [-2, 2, 2, 0],
    rho0: [2, 2, 2, 0],
    rho1: [4, 0, 0, 0],
};

// G(3): (δ,δ) = -2, (εᵢ,εᵢ) = 2, (εᵢ,εⱼ) = -1.
const G_BETA1: Halves = [2, -2, -2, 0]; // δ + ε₃
const G_BETA2: Halves = [2, 0, -2, 0]; // δ - ε₂
const G_BETA3: Halves = [2, -2, 0, 0]; // δ - ε₁
const G_E2_MINUS_E1: Halves = [0, -2, 2, 0];
const G_E1: Halves = [0, 2, 0, 0];
const G_DELTA: Halves = [2, 0, 0, 0];

pub(crate) const G3: TypeData = TypeData {
    gram: [
        [(-2, 0), Z, Z, Z],
        [Z, (2, 0), (-1, 0), Z],
        [Z, (-1, 0), (2, 0), Z],
        [Z, Z, Z, Z],
    ],
    odd_roots: &[G_BETA1, G_BETA2, G_BETA3],
    simple_systems: &[
        &[G_E2_MINUS_E1, G_E1, G_BETA1],
        &[G_E2_MINUS_E1, G_BETA2, [-2, 2, 2, 0]],
        &[G_BETA3, [-2, 0, 2, 0], G_E1],
        &[[-2, 2, 0, 0], G_E2_MINUS_E1, G_DELTA],
    ],
    even_simple: &[G_E2_MINUS_E1, G_E1, [4, 0, 0, 0]],
    even_positive: &[
        [4, 0, 0, 0],  // 2δ
        G_E1,          // ε₁
        [0, 0, 2, 0],  // ε₂
        [0, 2, 2, 0],  // -ε₃
        G_E2_MINUS_E1, // ε₂ - ε₁
        [0, 4, 2, 0],  // ε₁ - ε₃
        [0, 2, 4, 0],  // ε₂ - ε₃
    ],
    odd_positive: &[
        G_DELTA,
        [2, 2, 0, 0],
        G_BETA3,
        [2, 0, 2, 0],
        G_BETA2,
        G_BETA1,
        [2, 2, 2, 0], // δ - ε₃
    ],
    rho: [-5, 4, 6, 0],
    rho0: [2, 4, 6, 0],
    rho1: [7, 0, 0, 0],
};

// F(3|1): (δ,δ) = -3, (εᵢ,εⱼ) = δᵢⱼ.
const F_GAMMA1: Halves = [1, -1, -1, -1];
const F_GAMMA2: Halves = [1, -1, -1, 1];
const F_GAMMA3: Halves = [1, -1, 1, -1];
const F_GAMMA4: Halves = [1, -1, 1, 1];
const F_GAMMA5: Halves = [1, 1, -1, -1];
const F_E1_MINUS_E2: Halves = [0, 2, -2, 0];
const F_E2_MINUS_E3: Halves = [0, 0, 2, -2];
const F_E3: Halves = [0, 0, 0, 2];
const F_DELTA: Halves = [2, 0, 0, 0];

const fn neg(v: Halves) -> Halves {
    [-v[0], -v[1], -v[2], -v[3]]
}

pub(crate) const F31: TypeData = TypeData {
    gram: [
        [(-3, 0), Z, Z, Z],
        [Z, (1, 0), Z, Z],
        [Z, Z, (1, 0), Z],
        [Z, Z, Z, (1, 0)],
    ],
    odd_roots: &[F_GAMMA1, F_GAMMA2, F_GAMMA3, F_GAMMA4, F_GAMMA5],
    simple_systems: &[
        &[F_E1_MINUS_E2, F_E2_MINUS_E3, F_E3, F_GAMMA1],
        &[F_E1_MINUS_E2, F_E2_MINUS_E3, F_GAMMA2, neg(F_GAMMA1)],
        &[F_E1_MINUS_E2, F_GAMMA3, neg(F_GAMMA2), F_E3],
        &[F_GAMMA5, neg(F_GAMMA3), F_E2_MINUS_E3, F_GAMMA4],
        &[F_DELTA, F_E3, F_E2_MINUS_E3, neg(F_GAMMA4)],
        &[neg(F_GAMMA5), F_E1_MINUS_E2, F_E2_MINUS_E3, F_DELTA],
    ],
    even_simple: &[F_E1_MINUS_E2, F_E2_MINUS_E3, F_E3, F_DELTA],
    even_positive: &[
        F_DELTA,
        F_E1_MINUS_E2,
        [0, 2, 0, -2],
        F_E2_MINUS_E3,
        [0, 2, 2, 0],
        [0, 2, 0, 2],
        [0, 0, 2, 2],
        [0, 2, 0, 0],
        [0, 0, 2, 0],
        F_E3,
    ],
    odd_positive: &[
        F_GAMMA1,
        F_GAMMA2,
        F_GAMMA3,
        F_GAMMA4,
        F_GAMMA5,
        [1, 1, -1, 1],
        [1, 1, 1, -1],
        [1, 1, 1, 1],
    ],
    rho: [-3, 5, 3, 1],
    rho0: [1, 5, 3, 1],
    rho1: [4, 0, 0, 0],
};
