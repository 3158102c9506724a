//! Root data, bilinear forms and weight coordinates for the three types.

mod data;

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;

use crate::Error;
use data::{Halves, TypeData};

/// One of the three exceptional basic types.
///
/// `D21` carries no value of ζ; the parameter lives in
/// [`ScalarContext`](crate::ScalarContext).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SuperType {
    D21,
    G3,
    F31,
}

impl SuperType {
    pub const ALL: [SuperType; 3] = [SuperType::D21, SuperType::G3, SuperType::F31];

    /// Number of integer coordinates of a weight.
    pub const fn rank(self) -> usize {
        match self {
            SuperType::D21 | SuperType::G3 => 3,
            SuperType::F31 => 4,
        }
    }

    /// Dimension of the metric basis. Equal to the rank for all three types.
    pub const fn metric_dim(self) -> usize {
        self.rank()
    }

    /// Number of Borel nodes in the odd-reflection graph.
    pub const fn node_count(self) -> usize {
        match self {
            SuperType::D21 | SuperType::G3 => 4,
            SuperType::F31 => 6,
        }
    }

    /// Position of the coordinate on the δ side (`d` in every type).
    pub const fn delta_index(self) -> usize {
        match self {
            SuperType::D21 | SuperType::G3 => 0,
            SuperType::F31 => 3,
        }
    }

    pub const fn coordinate_names(self) -> &'static [&'static str] {
        match self {
            SuperType::D21 => &["d", "a", "b"],
            SuperType::G3 => &["d", "r", "s"],
            SuperType::F31 => &["a", "b", "c", "d"],
        }
    }

    /// Labels of the listed odd roots, in index order.
    pub const fn odd_root_names(self) -> &'static [&'static str] {
        match self {
            SuperType::D21 => &["beta1", "beta2", "beta3", "beta4"],
            SuperType::G3 => &["beta1", "beta2", "beta3"],
            SuperType::F31 => &["gamma1", "gamma2", "gamma3", "gamma4", "gamma5"],
        }
    }

    pub const fn name(self) -> &'static str {
        match self {
            SuperType::D21 => "D(2|1;zeta)",
            SuperType::G3 => "G(3)",
            SuperType::F31 => "F(3|1)",
        }
    }

    pub(crate) const fn data(self) -> &'static TypeData {
        match self {
            SuperType::D21 => &data::D21,
            SuperType::G3 => &data::G3,
            SuperType::F31 => &data::F31,
        }
    }
}

impl fmt::Display for SuperType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An integral weight in the per-type standard basis.
///
/// D(2|1;ζ): `(d, a, b)` over `(δ, ε₁, ε₂)`; G(3): `(d, r, s)` over
/// `(δ, ω₁, ω₂)`; F(3|1): `(a, b, c, d)` over `(ω₁, ω₂, ω₃, ω₄)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    ty: SuperType,
    coords: [i64; 4],
}

impl Weight {
    pub fn new(ty: SuperType, coords: &[i64]) -> Result<Self, Error> {
        if coords.len() != ty.rank() {
            return Err(Error::Arity {
                ty,
                expected: ty.rank(),
                got: coords.len(),
            });
        }
        let mut c = [0; 4];
        c[..coords.len()].copy_from_slice(coords);
        Ok(Weight { ty, coords: c })
    }

    pub fn zero(ty: SuperType) -> Self {
        Weight { ty, coords: [0; 4] }
    }

    pub fn super_type(&self) -> SuperType {
        self.ty
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords[..self.ty.rank()]
    }

    /// The coefficient `d` on the δ side.
    pub fn delta_coord(&self) -> i64 {
        self.coords[self.ty.delta_index()]
    }

    /// Every coordinate nonnegative, i.e. membership in `X⁺(T)`.
    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&c| c >= 0)
    }

    pub(crate) fn sub_weight(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.ty, other.ty);
        let mut c = self.coords;
        for (x, y) in c.iter_mut().zip(other.coords) {
            *x -= y;
        }
        Weight {
            ty: self.ty,
            coords: c,
        }
    }

    pub(crate) fn add_weight(&self, other: &Weight) -> Weight {
        debug_assert_eq!(self.ty, other.ty);
        let mut c = self.coords;
        for (x, y) in c.iter_mut().zip(other.coords) {
            *x += y;
        }
        Weight {
            ty: self.ty,
            coords: c,
        }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", c)?;
        }
        f.write_str(")")
    }
}

/// Is `λ` in `X⁺(T)`?
pub fn is_dominant(lambda: &Weight) -> bool {
    lambda.is_dominant()
}

/// A rational vector over the metric basis, stored in half-units.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetricVector {
    dim: usize,
    halves: [i64; 4],
}

impl MetricVector {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= 4);
        MetricVector {
            dim,
            halves: [0; 4],
        }
    }

    /// Builds `½·halves`.
    pub fn from_halves(halves: &[i64]) -> Self {
        assert!(halves.len() <= 4);
        let mut h = [0; 4];
        h[..halves.len()].copy_from_slice(halves);
        MetricVector {
            dim: halves.len(),
            halves: h,
        }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        let mut v = Self::from_halves(coeffs);
        for h in v.halves.iter_mut() {
            *h *= 2;
        }
        v
    }

    pub(crate) fn from_const(dim: usize, halves: Halves) -> Self {
        MetricVector { dim, halves }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Twice the coefficients.
    pub fn halves(&self) -> &[i64] {
        &self.halves[..self.dim]
    }

    pub fn coefficient(&self, i: usize) -> Ratio<i64> {
        Ratio::new(self.halves[i], 2)
    }

    pub fn is_zero(&self) -> bool {
        self.halves.iter().all(|&h| h == 0)
    }

    /// All coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.halves().iter().all(|h| h % 2 == 0)
    }
}

impl fmt::Debug for MetricVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, h) in self.halves().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            if h % 2 == 0 {
                write!(f, "{}", h / 2)?;
            } else {
                write!(f, "{}/2", h)?;
            }
        }
        f.write_str("]")
    }
}

impl Add for MetricVector {
    type Output = MetricVector;
    fn add(mut self, rhs: MetricVector) -> MetricVector {
        debug_assert_eq!(self.dim, rhs.dim);
        for (x, y) in self.halves.iter_mut().zip(rhs.halves) {
            *x += y;
        }
        self
    }
}

impl Sub for MetricVector {
    type Output = MetricVector;
    fn sub(self, rhs: MetricVector) -> MetricVector {
        self + (-rhs)
    }
}

impl Neg for MetricVector {
    type Output = MetricVector;
    fn neg(mut self) -> MetricVector {
        for x in self.halves.iter_mut() {
            *x = -*x;
        }
        self
    }
}

impl Mul<i64> for MetricVector {
    type Output = MetricVector;
    fn mul(mut self, k: i64) -> MetricVector {
        for x in self.halves.iter_mut() {
            *x *= k;
        }
        self
    }
}

/// Exact value `q0 + q1·ζ` of a pairing, stored in quarter-units.
///
/// `q1` is zero outside D(2|1;ζ).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct FormValue {
    q0: i64,
    q1: i64,
}

impl FormValue {
    pub const ZERO: FormValue = FormValue { q0: 0, q1: 0 };

    /// `q0/4 + (q1/4)·ζ`.
    pub const fn from_quarters(q0: i64, q1: i64) -> Self {
        FormValue { q0, q1 }
    }

    pub const fn from_integers(q0: i64, q1: i64) -> Self {
        FormValue {
            q0: 4 * q0,
            q1: 4 * q1,
        }
    }

    pub fn q0(&self) -> Ratio<i64> {
        Ratio::new(self.q0, 4)
    }

    pub fn q1(&self) -> Ratio<i64> {
        Ratio::new(self.q1, 4)
    }

    /// `(4·q0, 4·q1)`, the integer pair every reduction starts from.
    pub fn quarters(&self) -> (i64, i64) {
        (self.q0, self.q1)
    }

    pub fn is_exact_zero(&self) -> bool {
        self.q0 == 0 && self.q1 == 0
    }
}

impl fmt::Debug for FormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FormValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q1 == 0 {
            write!(f, "{}", self.q0())
        } else {
            write!(f, "{} + {}*zeta", self.q0(), self.q1())
        }
    }
}

impl Add for FormValue {
    type Output = FormValue;
    fn add(self, rhs: FormValue) -> FormValue {
        FormValue {
            q0: self.q0 + rhs.q0,
            q1: self.q1 + rhs.q1,
        }
    }
}

impl Sub for FormValue {
    type Output = FormValue;
    fn sub(self, rhs: FormValue) -> FormValue {
        FormValue {
            q0: self.q0 - rhs.q0,
            q1: self.q1 - rhs.q1,
        }
    }
}

impl Neg for FormValue {
    type Output = FormValue;
    fn neg(self) -> FormValue {
        FormValue {
            q0: -self.q0,
            q1: -self.q1,
        }
    }
}

impl Mul<i64> for FormValue {
    type Output = FormValue;
    fn mul(self, k: i64) -> FormValue {
        FormValue {
            q0: self.q0 * k,
            q1: self.q1 * k,
        }
    }
}

/// The bilinear form on the metric basis.
pub fn pairing(u: &MetricVector, v: &MetricVector, ty: SuperType) -> Result<FormValue, Error> {
    let n = ty.metric_dim();
    if u.dim != n || v.dim != n {
        return Err(Error::DimensionMismatch {
            left: u.dim,
            right: if u.dim != n { n } else { v.dim },
        });
    }
    Ok(pair_raw(&u.halves, &v.halves, ty))
}

// Half-units times half-units give quarter-units directly.
pub(crate) fn pair_raw(u: &[i64; 4], v: &[i64; 4], ty: SuperType) -> FormValue {
    let gram = &ty.data().gram;
    let n = ty.metric_dim();
    let (mut q0, mut q1) = (0, 0);
    for i in 0..n {
        if u[i] == 0 {
            continue;
        }
        for j in 0..n {
            let (g0, g1) = gram[i][j];
            q0 += u[i] * v[j] * g0;
            q1 += u[i] * v[j] * g1;
        }
    }
    FormValue { q0, q1 }
}

/// Coordinates of `λ` over the metric basis.
pub fn to_metric(lambda: &Weight) -> MetricVector {
    let c = &lambda.coords;
    let halves = match lambda.ty {
        SuperType::D21 => [2 * c[0], 2 * c[1], 2 * c[2], 0],
        // dδ + r(ε₁ + 2ε₂) + s(ε₁ + ε₂)
        SuperType::G3 => [2 * c[0], 2 * (c[1] + c[2]), 2 * (2 * c[1] + c[2]), 0],
        // aε₁ + b(ε₁+ε₂) + (c/2)(ε₁+ε₂+ε₃) + (d/2)δ
        SuperType::F31 => [c[3], 2 * c[0] + 2 * c[1] + c[2], 2 * c[1] + c[2], c[2]],
    };
    MetricVector::from_const(lambda.ty.metric_dim(), halves)
}

/// Inverse of [`to_metric`]; rejects vectors outside the lattice image.
pub fn from_metric(v: &MetricVector, ty: SuperType) -> Result<Weight, Error> {
    if v.dim != ty.metric_dim() {
        return Err(Error::DimensionMismatch {
            left: v.dim,
            right: ty.metric_dim(),
        });
    }
    let h = v.halves;
    let even = |x: i64| x % 2 == 0;
    let coords = match ty {
        SuperType::D21 => {
            if !(even(h[0]) && even(h[1]) && even(h[2])) {
                return Err(Error::NotInLattice);
            }
            [h[0] / 2, h[1] / 2, h[2] / 2, 0]
        }
        SuperType::G3 => {
            if !(even(h[0]) && even(h[1]) && even(h[2])) {
                return Err(Error::NotInLattice);
            }
            let (x1, x2) = (h[1] / 2, h[2] / 2);
            [h[0] / 2, x2 - x1, 2 * x1 - x2, 0]
        }
        SuperType::F31 => {
            if !(even(h[1] - h[2]) && even(h[2] - h[3])) {
                return Err(Error::NotInLattice);
            }
            [(h[1] - h[2]) / 2, (h[2] - h[3]) / 2, h[3], h[0]]
        }
    };
    Ok(Weight { ty, coords })
}

/// `(λ, β)` for the `index`-th listed odd root.
pub fn pair_with_odd_root(lambda: &Weight, index: usize) -> Result<FormValue, Error> {
    let ty = lambda.ty;
    let roots = ty.data().odd_roots;
    let root = roots.get(index).ok_or(Error::OddRootIndex {
        ty,
        index,
        count: roots.len(),
    })?;
    Ok(pair_raw(&to_metric(lambda).halves, root, ty))
}

/// The `index`-th listed odd root as a weight (it is always integral).
pub fn odd_root_weight(ty: SuperType, index: usize) -> Result<Weight, Error> {
    let roots = ty.data().odd_roots;
    let root = roots.get(index).ok_or(Error::OddRootIndex {
        ty,
        index,
        count: roots.len(),
    })?;
    from_metric(&MetricVector::from_const(ty.metric_dim(), *root), ty)
}

/// Fixed root data of one type. Every vector is over the metric basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDatum {
    pub ty: SuperType,
    /// D: β₁..β₄, G(3): β₁..β₃, F(3|1): γ₁..γ₅.
    pub odd_roots: Vec<MetricVector>,
    /// Π⁰..Πᵏ as listed, in listed element order.
    pub simple_systems: Vec<Vec<MetricVector>>,
    pub even_simple_roots: Vec<MetricVector>,
    pub even_positive_roots: Vec<MetricVector>,
    pub odd_positive_roots: Vec<MetricVector>,
    pub rho: MetricVector,
    pub rho0: MetricVector,
    pub rho1: MetricVector,
    /// Gram matrix of the metric basis.
    pub gram: Vec<Vec<FormValue>>,
}

pub fn root_datum(ty: SuperType) -> RootDatum {
    let d = ty.data();
    let n = ty.metric_dim();
    let mv = |h: &Halves| MetricVector::from_const(n, *h);
    let list = |hs: &[Halves]| hs.iter().map(mv).collect::<Vec<_>>();
    RootDatum {
        ty,
        odd_roots: list(d.odd_roots),
        simple_systems: d.simple_systems.iter().map(|s| list(s)).collect(),
        even_simple_roots: list(d.even_simple),
        even_positive_roots: list(d.even_positive),
        odd_positive_roots: list(d.odd_positive),
        rho: mv(&d.rho),
        rho0: mv(&d.rho0),
        rho1: mv(&d.rho1),
        gram: (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| FormValue::from_integers(d.gram[i][j].0, d.gram[i][j].1))
                    .collect()
            })
            .collect(),
    }
}

impl RootDatum {
    /// The whole root system `Φ = ±Φ₀⁺ ∪ ±Φ₁⁺`.
    pub fn roots(&self) -> Vec<MetricVector> {
        self.even_positive_roots
            .iter()
            .chain(&self.odd_positive_roots)
            .flat_map(|&r| [r, -r])
            .collect()
    }

    pub fn is_root(&self, v: &MetricVector) -> bool {
        self.even_positive_roots
            .iter()
            .chain(&self.odd_positive_roots)
            .any(|r| r == v || -*r == *v)
    }

    pub fn is_odd_root(&self, v: &MetricVector) -> bool {
        self.odd_positive_roots.iter().any(|r| r == v || -*r == *v)
    }

    /// `½ΣΦ₀⁺ − ½ΣΦ₁⁺` from the stored positive roots.
    pub fn rho_from_roots(&self) -> MetricVector {
        let n = self.ty.metric_dim();
        let sum = |rs: &[MetricVector]| rs.iter().fold(MetricVector::zero(n), |a, &b| a + b);
        let even = sum(&self.even_positive_roots);
        let odd = sum(&self.odd_positive_roots);
        // Both sums have even half-units, so halving stays exact.
        let mut out = even - odd;
        for h in out.halves.iter_mut() {
            debug_assert!(*h % 2 == 0);
            *h /= 2;
        }
        out
    }

    /// Roots that are nonnegative combinations of `Πⁱ`.
    pub fn positive_system(&self, i: usize) -> Vec<MetricVector> {
        let n = self.ty.metric_dim();
        let basis: Vec<[i64; 4]> = self.simple_systems[i].iter().map(|v| v.halves).collect();
        self.roots()
            .into_iter()
            .filter(|r| {
                let (c, det) = crate::linalg::solve(&basis, &r.halves, n);
                c[..n].iter().all(|&x| x * det.signum() >= 0)
            })
            .collect()
    }

    /// Apply the odd reflection in the isotropic simple root `beta` to the
    /// simple system `pi`: `β ↦ −β`, and `α ↦ α + β` whenever `α + β` is a root.
    pub fn odd_reflect_system(
        &self,
        pi: &[MetricVector],
        beta: &MetricVector,
    ) -> Vec<MetricVector> {
        pi.iter()
            .map(|&alpha| {
                if alpha == *beta {
                    -alpha
                } else if self.is_root(&(alpha + *beta)) {
                    alpha + *beta
                } else {
                    alpha
                }
            })
            .collect()
    }
}

/// Inclusive per-coordinate ranges of weights, iterated lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeightBox {
    ty: SuperType,
    lower: [i64; 4],
    upper: [i64; 4],
}

impl WeightBox {
    /// All weights with `0 <= λᵢ <= upper[i]`.
    pub fn new(ty: SuperType, upper: &[i64]) -> Result<Self, Error> {
        let upper = Weight::new(ty, upper)?;
        Ok(WeightBox {
            ty,
            lower: [0; 4],
            upper: upper.coords,
        })
    }

    /// The same bound on every coordinate.
    pub fn cube(ty: SuperType, bound: i64) -> Self {
        let mut upper = [0; 4];
        upper[..ty.rank()].fill(bound);
        WeightBox {
            ty,
            lower: [0; 4],
            upper,
        }
    }

    /// Restrict coordinate `i` to the single value `value`.
    pub fn fix(mut self, i: usize, value: i64) -> Self {
        self.lower[i] = value;
        self.upper[i] = value;
        self
    }

    pub fn super_type(&self) -> SuperType {
        self.ty
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower[..self.ty.rank()]
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper[..self.ty.rank()]
    }

    pub fn volume(&self) -> u64 {
        self.lower()
            .iter()
            .zip(self.upper())
            .map(|(&l, &u)| if u < l { 0 } else { (u - l + 1) as u64 })
            .product()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        w.ty == self.ty
            && w.coords()
                .iter()
                .zip(self.lower().iter().zip(self.upper()))
                .all(|(c, (l, u))| l <= c && c <= u)
    }

    pub fn iter(&self) -> WeightBoxIter {
        WeightBoxIter {
            bx: *self,
            next: if self.volume() == 0 {
                None
            } else {
                Some(Weight {
                    ty: self.ty,
                    coords: self.lower,
                })
            },
        }
    }
}

impl IntoIterator for &WeightBox {
    type Item = Weight;
    type IntoIter = WeightBoxIter;
    fn into_iter(self) -> WeightBoxIter {
        self.iter()
    }
}

pub struct WeightBoxIter {
    bx: WeightBox,
    next: Option<Weight>,
}

impl Iterator for WeightBoxIter {
    type Item = Weight;

    fn next(&mut self) -> Option<Weight> {
        let current = self.next?;
        let mut w = current;
        let n = self.bx.ty.rank();
        let mut i = n;
        self.next = loop {
            if i == 0 {
                break None;
            }
            i -= 1;
            if w.coords[i] < self.bx.upper[i] {
                w.coords[i] += 1;
                break Some(w);
            }
            w.coords[i] = self.bx.lower[i];
        };
        Some(current)
    }
}
