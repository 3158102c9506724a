//! Transport of a highest weight across the odd-reflection graph.

use alloc::vec::Vec;

use crate::field::ScalarContext;
use crate::lattice::{odd_root_weight, pair_with_odd_root, FormValue, SuperType, Weight};
use crate::Error;

/// Which side of the odd-reflection rule was taken.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `(λ, β) ≢ 0`, so the new highest weight is `λ − β`.
    Reflected,
    /// `(λ, β) ≡ 0`, the highest weight is unchanged.
    Fixed,
}

/// `src → dst` by the odd reflection in the `odd_root`-th listed odd root.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub odd_root: usize,
}

const fn e(src: usize, dst: usize, odd_root: usize) -> Edge {
    Edge { src, dst, odd_root }
}

const D21_EDGES: [Edge; 3] = [e(0, 1, 0), e(1, 2, 1), e(1, 3, 2)];
const G3_EDGES: [Edge; 3] = [e(0, 1, 0), e(1, 2, 1), e(2, 3, 2)];
const F31_EDGES: [Edge; 5] = [e(0, 1, 0), e(1, 2, 1), e(2, 3, 2), e(3, 4, 3), e(3, 5, 4)];

/// The fixed graph of Borel nodes. Edges are stored in topological order of `dst`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReflectionDag {
    ty: SuperType,
    edges: &'static [Edge],
}

impl ReflectionDag {
    pub fn new(ty: SuperType) -> Self {
        let edges: &'static [Edge] = match ty {
            SuperType::D21 => &D21_EDGES,
            SuperType::G3 => &G3_EDGES,
            SuperType::F31 => &F31_EDGES,
        };
        ReflectionDag { ty, edges }
    }

    pub fn super_type(&self) -> SuperType {
        self.ty
    }

    pub fn node_count(&self) -> usize {
        self.ty.node_count()
    }

    pub fn edges(&self) -> &'static [Edge] {
        self.edges
    }

    /// The unique edge entering `node`; `None` for the source.
    pub fn incoming(&self, node: usize) -> Option<Edge> {
        self.edges.iter().copied().find(|e| e.dst == node)
    }
}

/// How one node of a chain was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Step {
    pub edge: Edge,
    pub pairing: FormValue,
    pub branch: Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainNode {
    pub weight: Weight,
    /// `None` at node 0.
    pub step: Option<Step>,
}

/// `λⁱ` at every node, in node order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainResult {
    pub nodes: Vec<ChainNode>,
}

impl ChainResult {
    pub fn weight(&self, node: usize) -> Weight {
        self.nodes[node].weight
    }

    pub fn weights(&self) -> impl Iterator<Item = Weight> + '_ {
        self.nodes.iter().map(|n| n.weight)
    }

    /// First node whose weight is not dominant.
    pub fn first_non_dominant(&self) -> Option<usize> {
        self.nodes.iter().position(|n| !n.weight.is_dominant())
    }
}

fn check_type(lambda: &Weight, ctx: &ScalarContext) -> Result<(), Error> {
    if lambda.super_type() != ctx.super_type() {
        return Err(Error::TypeMismatch {
            weight: lambda.super_type(),
            context: ctx.super_type(),
        });
    }
    Ok(())
}

/// One odd reflection: `λ` if `(λ, β) ≡ 0`, else `λ − β`.
pub fn odd_reflect(
    lambda: &Weight,
    odd_root: usize,
    ctx: &ScalarContext,
) -> Result<(Weight, Branch, FormValue), Error> {
    check_type(lambda, ctx)?;
    let x = pair_with_odd_root(lambda, odd_root)?;
    if ctx.is_zero(x)? {
        Ok((*lambda, Branch::Fixed, x))
    } else {
        let beta = odd_root_weight(lambda.super_type(), odd_root)?;
        Ok((lambda.sub_weight(&beta), Branch::Reflected, x))
    }
}

/// Undo a reflected step: `λʲ + β`. Valid because `β` is isotropic.
pub fn reflect_back(lambda: &Weight, odd_root: usize) -> Result<Weight, Error> {
    let beta = odd_root_weight(lambda.super_type(), odd_root)?;
    Ok(lambda.add_weight(&beta))
}

/// Transport `λ` to every node. `λ` need not be dominant.
pub fn chain(lambda: &Weight, ctx: &ScalarContext) -> Result<ChainResult, Error> {
    check_type(lambda, ctx)?;
    let dag = ReflectionDag::new(lambda.super_type());
    let mut nodes = Vec::with_capacity(dag.node_count());
    nodes.push(ChainNode {
        weight: *lambda,
        step: None,
    });
    for &edge in dag.edges() {
        debug_assert_eq!(edge.dst, nodes.len());
        let src = nodes[edge.src].weight;
        let (weight, branch, pairing) = odd_reflect(&src, edge.odd_root, ctx)?;
        nodes.push(ChainNode {
            weight,
            step: Some(Step {
                edge,
                pairing,
                branch,
            }),
        });
    }
    Ok(ChainResult { nodes })
}
