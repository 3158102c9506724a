//! Euler characteristic `χ(λ)` as an exact Laurent polynomial.
//!
//! `χ(λ) = ∏_{β∈Φ₁⁺}(e^{β/2}+e^{−β/2}) · Σ_w (−1)^{ℓ(w)} e^{w(λ+ρ)} / ∏_{α∈Φ₀⁺}(e^{α/2}−e^{−α/2})`.
//!
//! Exponents are metric coordinates multiplied by a fixed per-type scale so
//! every exponent that occurs is an integer vector.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::lattice::{self, from_metric, root_datum, MetricVector, SuperType, Weight};
use crate::linalg;
use crate::Error;

type Exp = [i64; 4];

/// Exponent scale: 2 for D(2|1;ζ) and G(3), 4 for F(3|1).
pub const fn scale(ty: SuperType) -> i64 {
    match ty {
        SuperType::D21 | SuperType::G3 => 2,
        SuperType::F31 => 4,
    }
}

// Scaled exponent of a metric vector; `half` selects `v/2`.
fn exponent(v: &MetricVector, ty: SuperType, half: bool) -> Exp {
    let s = scale(ty);
    let mut out = [0; 4];
    for (o, h) in out.iter_mut().zip(v.halves()) {
        let num = h * s;
        let den = if half { 4 } else { 2 };
        debug_assert_eq!(num % den, 0);
        *o = num / den;
    }
    out
}

fn metric_of(e: &Exp, ty: SuperType) -> MetricVector {
    let s = scale(ty);
    let n = ty.metric_dim();
    let halves: Vec<i64> = e[..n]
        .iter()
        .map(|x| {
            debug_assert_eq!((2 * x) % s, 0);
            2 * x / s
        })
        .collect();
    MetricVector::from_halves(&halves)
}

// Integer Gram matrix used for reflections. D(2|1;ζ) uses its ζ = 1
// specialization; the group it generates does not depend on ζ.
fn weyl_gram(ty: SuperType) -> [[i64; 4]; 4] {
    match ty {
        SuperType::D21 => [[-2, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0; 4]],
        SuperType::G3 => [[-2, 0, 0, 0], [0, 2, -1, 0], [0, -1, 2, 0], [0; 4]],
        SuperType::F31 => [[-3, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
    }
}

fn form(g: &[[i64; 4]; 4], u: &Exp, v: &Exp) -> i64 {
    let mut t = 0;
    for i in 0..4 {
        for j in 0..4 {
            t += u[i] * g[i][j] * v[j];
        }
    }
    t
}

/// An element of the even Weyl group, as a matrix on metric coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    dim: usize,
    matrix: [[i64; 4]; 4],
    sign: i64,
}

impl WeylElement {
    fn identity(dim: usize) -> Self {
        let mut matrix = [[0; 4]; 4];
        for (i, row) in matrix.iter_mut().enumerate().take(dim) {
            row[i] = 1;
        }
        WeylElement {
            dim,
            matrix,
            sign: 1,
        }
    }

    pub fn matrix(&self) -> &[[i64; 4]; 4] {
        &self.matrix
    }

    /// `(−1)^{ℓ(w)}`.
    pub fn sign(&self) -> i64 {
        self.sign
    }

    pub fn determinant(&self) -> i64 {
        let m = self.matrix.map(|row| row.map(i128::from));
        linalg::det(&m, self.dim) as i64
    }

    fn act(&self, v: &Exp) -> Exp {
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate().take(self.dim) {
            *o = (0..self.dim).map(|j| self.matrix[i][j] * v[j]).sum();
        }
        out
    }

    pub fn apply(&self, v: &MetricVector) -> MetricVector {
        let mut h = [0; 4];
        h[..v.dim()].copy_from_slice(v.halves());
        MetricVector::from_halves(&self.act(&h)[..v.dim()])
    }

    #[allow(clippy::needless_range_loop)]
    fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut matrix = [[0; 4]; 4];
        for i in 0..self.dim {
            for j in 0..self.dim {
                matrix[i][j] = (0..self.dim)
                    .map(|k| self.matrix[i][k] * other.matrix[k][j])
                    .sum();
            }
        }
        WeylElement {
            dim: self.dim,
            matrix,
            sign: self.sign * other.sign,
        }
    }

    /// Does the matrix preserve the form used to build it?
    pub fn preserves_form(&self, ty: SuperType) -> bool {
        let g = weyl_gram(ty);
        let n = self.dim;
        let basis = |i: usize| {
            let mut e = [0; 4];
            e[i] = 1;
            e
        };
        (0..n).all(|i| {
            (0..n).all(|j| {
                form(&g, &self.act(&basis(i)), &self.act(&basis(j)))
                    == form(&g, &basis(i), &basis(j))
            })
        })
    }
}

// Reflection in α: v ↦ v − 2(v,α)/(α,α)·α, integral on the lattice.
fn reflection(ty: SuperType, alpha: &Exp) -> WeylElement {
    let k = alpha.iter().fold(0, |acc, &x| num_integer::gcd(acc, x));
    let alpha = &alpha.map(|x| x / k);
    let g = weyl_gram(ty);
    let n = ty.metric_dim();
    let aa = form(&g, alpha, alpha);
    let mut matrix = [[0; 4]; 4];
    for j in 0..n {
        let mut e = [0; 4];
        e[j] = 1;
        let num = 2 * form(&g, &e, alpha);
        assert_eq!(num % aa, 0, "reflection is not integral");
        let k = num / aa;
        for i in 0..n {
            matrix[i][j] = e[i] - k * alpha[i];
        }
    }
    WeylElement {
        dim: n,
        matrix,
        sign: -1,
    }
}

/// The Weyl group of the even part, generated by even simple reflections.
/// Sorted, so the order is deterministic; the identity is included.
pub fn weyl_group(ty: SuperType) -> Vec<WeylElement> {
    let rd = root_datum(ty);
    let gens: Vec<WeylElement> = rd
        .even_simple_roots
        .iter()
        .map(|a| {
            let mut h = [0; 4];
            h[..a.dim()].copy_from_slice(a.halves());
            reflection(ty, &h)
        })
        .collect();
    let id = WeylElement::identity(ty.metric_dim());
    let mut seen = BTreeSet::new();
    seen.insert(id);
    let mut frontier = alloc::vec![id];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = g.compose(&x);
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// A finitely supported integer combination of `e^μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    ty: SuperType,
    terms: BTreeMap<Exp, i64>,
}

impl Character {
    fn new(ty: SuperType) -> Self {
        Character {
            ty,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, e: Exp, c: i64) {
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn super_type(&self) -> SuperType {
        self.ty
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(scaled exponent, coefficient)`, exponents in lexicographic order.
    pub fn scaled_terms(&self) -> impl Iterator<Item = (&[i64], i64)> + '_ {
        let n = self.ty.metric_dim();
        self.terms.iter().map(move |(e, &c)| (&e[..n], c))
    }

    /// Terms as `(metric point, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (MetricVector, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (metric_of(e, self.ty), c))
    }

    pub fn coefficient(&self, mu: &MetricVector) -> i64 {
        let mut h = [0; 4];
        h[..mu.dim()].copy_from_slice(mu.halves());
        let e = exponent(&MetricVector::from_halves(&h[..mu.dim()]), self.ty, false);
        self.terms.get(&e).copied().unwrap_or(0)
    }

    /// `w·χ`: move every exponent by `w`.
    pub fn act(&self, w: &WeylElement) -> Character {
        let mut out = Character::new(self.ty);
        for (e, &c) in &self.terms {
            out.add_term(w.act(e), c);
        }
        out
    }

    // Multiply by e^u + sign·e^{−u}.
    fn mul_binomial(&self, u: &Exp, sign: i64) -> Character {
        let mut out = Character::new(self.ty);
        for (e, &c) in &self.terms {
            out.add_term(add(e, u), c);
            out.add_term(sub(e, u), sign * c);
        }
        out
    }

    // Exact division by e^u − e^{−u}, leading term first in lexicographic order.
    fn div_difference(&self, u: &Exp) -> Result<Character, Error> {
        // Make u lexicographically positive; flip the quotient's sign to compensate.
        let (u, flip) = if *u > [0; 4] { (*u, 1) } else { (neg(u), -1) };
        let floor = match self.terms.keys().next() {
            Some(m) => *m,
            None => return Ok(Character::new(self.ty)),
        };
        let two_u = add(&u, &u);
        let mut rem = self.terms.clone();
        let mut q = Character::new(self.ty);
        while let Some((&m, &c)) = rem.iter().next_back() {
            if sub(&m, &two_u) < floor {
                return Err(Error::NonzeroRemainder);
            }
            let t = sub(&m, &u);
            q.add_term(t, flip * c);
            rem.remove(&m);
            let low = sub(&t, &u);
            let slot = rem.entry(low).or_insert(0);
            *slot += c;
            if *slot == 0 {
                rem.remove(&low);
            }
        }
        Ok(q)
    }
}

fn add(a: &Exp, b: &Exp) -> Exp {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]]
}

fn sub(a: &Exp, b: &Exp) -> Exp {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]]
}

fn neg(a: &Exp) -> Exp {
    [-a[0], -a[1], -a[2], -a[3]]
}

/// `χ(λ)` for any integral `λ`.
pub fn euler_char(lambda: &Weight) -> Result<Character, Error> {
    let ty = lambda.super_type();
    let rd = root_datum(ty);
    let lr = exponent(&(lattice::to_metric(lambda) + rd.rho), ty, false);

    let mut num = Character::new(ty);
    for w in weyl_group(ty) {
        num.add_term(w.act(&lr), w.sign());
    }
    for beta in &rd.odd_positive_roots {
        num = num.mul_binomial(&exponent(beta, ty, true), 1);
    }
    for alpha in &rd.even_positive_roots {
        let u = exponent(alpha, ty, true);
        let q = num.div_difference(&u)?;
        // Multiply back: the division must be exact.
        if q.mul_binomial(&u, -1) != num {
            return Err(Error::NonzeroRemainder);
        }
        num = q;
    }
    Ok(num)
}

fn even_simple_exps(ty: SuperType) -> Vec<Exp> {
    root_datum(ty)
        .even_simple_roots
        .iter()
        .map(|a| exponent(a, ty, false))
        .collect()
}

// The standard simple system Π⁰; its cone orders weights by the standard Borel.
fn standard_simple_exps(ty: SuperType) -> Vec<Exp> {
    root_datum(ty).simple_systems[0]
        .iter()
        .map(|a| exponent(a, ty, false))
        .collect()
}

/// `ν − μ` is a nonnegative rational combination of `basis`.
fn cone_le(mu: &Exp, nu: &Exp, basis: &[Exp], n: usize) -> bool {
    let (coeffs, det) = linalg::solve(basis, &sub(nu, mu), n);
    coeffs[..n].iter().all(|&c| c * det.signum() >= 0)
}

/// Highest term of a character.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopTerm {
    pub point: MetricVector,
    /// The point as a weight, when it lies in the weight lattice.
    pub weight: Option<Weight>,
    pub coefficient: i64,
}

/// The unique maximal support point for the order `μ ≤ ν ⟺ ν − μ ∈ ℚ≥0·Π⁰`
/// of the standard positive system.
///
/// The cone of the even simple roots alone is too small: already `χ(3δ)` for
/// G(3) has four pairwise incomparable maximal points in it.
pub fn top_term(chi: &Character) -> Result<TopTerm, Error> {
    let ty = chi.ty;
    let n = ty.metric_dim();
    let basis = standard_simple_exps(ty);
    if chi.terms.is_empty() {
        return Err(Error::EmptyCharacter);
    }
    // Rank by the sum of Π⁰-coordinates, which is strictly increasing along the
    // order. A unique maximum must then be a top-ranked point that dominates
    // everything, so the common case costs one pass.
    let rank = |e: &Exp| {
        let (c, det) = linalg::solve(&basis, e, n);
        c[..n].iter().sum::<i128>() * det.signum()
    };
    let mut support: Vec<(i128, &Exp)> = chi.terms.keys().map(|e| (rank(e), e)).collect();
    support.sort_by_key(|s| core::cmp::Reverse(s.0));
    let best = support[0].1;
    let maximal: Vec<&Exp> = if support[1..]
        .iter()
        .all(|(_, o)| cone_le(o, best, &basis, n))
    {
        alloc::vec![best]
    } else {
        // Only points ranked strictly higher can dominate a point.
        support
            .iter()
            .enumerate()
            .filter(|&(i, (r, m))| {
                !support[..i]
                    .iter()
                    .any(|(ro, o)| ro > r && cone_le(m, o, &basis, n))
            })
            .map(|(_, (_, m))| *m)
            .collect()
    };
    if maximal.len() != 1 {
        return Err(Error::AmbiguousTop(
            maximal.iter().map(|e| metric_of(e, ty)).collect(),
        ));
    }
    let e = maximal[0];
    let point = metric_of(e, ty);
    Ok(TopTerm {
        point,
        weight: from_metric(&point, ty).ok(),
        coefficient: chi.terms[e],
    })
}

/// `2ρ` in the weight coordinates of the type.
pub const fn two_rho_coords(ty: SuperType) -> [i64; 4] {
    match ty {
        SuperType::D21 => [-2, 2, 2, 0],
        SuperType::G3 => [-5, 2, 2, 0],
        SuperType::F31 => [2, 2, 2, -6],
    }
}

/// Every fundamental coordinate of `λ + ρ` is strictly positive.
pub fn is_regular_dominant(lambda: &Weight) -> bool {
    let r = two_rho_coords(lambda.super_type());
    lambda.coords().iter().zip(r).all(|(&x, r)| 2 * x + r > 0)
}

/// Is every `W`-conjugate of every support point below `top` in the order of
/// the standard positive system?
///
/// Checked through dominant conjugates. This is the usable form of a hull
/// bound: `conv(W·(λ+ρ₁))` itself does not contain the support in general,
/// since the odd factor reaches `2ε₁` for D(2|1;ζ) while `W·(λ+ρ₁)` stays at
/// `|ε₁| = a`.
pub fn support_below(chi: &Character, top: &MetricVector) -> bool {
    let ty = chi.ty;
    let n = ty.metric_dim();
    let g = weyl_gram(ty);
    let even = even_simple_exps(ty);
    let basis = standard_simple_exps(ty);
    let group = weyl_group(ty);
    let top = exponent(top, ty, false);
    let dominant = |v: &Exp| even.iter().all(|a| form(&g, v, a) * form(&g, a, a) >= 0);
    chi.terms.keys().all(|m| {
        group
            .iter()
            .map(|w| w.act(m))
            .find(|v| dominant(v))
            .is_some_and(|d| cone_le(&d, &top, &basis, n))
    })
}
