//! Shape of the adjoint bundle at a torus point, in split and regular form.

use serde::{Deserialize, Serialize};

use crate::elltorus::{ELambdaPoint, EPoint};
use crate::rootsys::RootSystem;

/// Decomposition type of an adjoint bundle: nontrivial unipotent blocks
/// `I_d(0)` listed by rank, plus degree-zero line summands listed by twist.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjointShape {
    /// Block ranks, largest first.
    pub unipotent_blocks: Vec<u64>,
    /// Twists of the line summands, in point order. Empty for the regular
    /// form, which absorbs every summand fixed by the torus into a block.
    pub line_summands: Vec<EPoint>,
}

impl AdjointShape {
    fn new(mut blocks: Vec<u64>, mut lines: Vec<EPoint>) -> AdjointShape {
        blocks.sort_unstable_by(|a, b| b.cmp(a));
        lines.sort();
        AdjointShape {
            unipotent_blocks: blocks,
            line_summands: lines,
        }
    }

    /// Rank of the whole adjoint bundle described by this shape.
    pub fn dimension(&self) -> u64 {
        self.unipotent_blocks.iter().sum::<u64>() + self.line_summands.len() as u64
    }
}

/// Adjoint decomposition of the split bundle at `mu`: one trivial line per
/// Cartan direction and one degree-zero line per root, twisted by the value
/// of that root at `mu`.
pub fn split_adjoint(mu: &ELambdaPoint) -> AdjointShape {
    let sys = mu.system();
    let blocks = vec![1; sys.rank()];
    let lines = (0..sys.num_roots())
        .map(|i| mu.root_value(i).expect("index ranges over the root list"))
        .collect();
    AdjointShape::new(blocks, lines)
}

/// Adjoint decomposition of the regular bundle in the automorphism class of
/// `mu`: the roots vanishing at `mu` close up into a subsystem, and each of
/// its irreducible components of rank `k` contributes blocks `I_{2 d_i - 1}(0)`
/// for the `k` invariant weights `d_i` of that component, the shape of a
/// principal nilpotent. Cartan directions outside the subsystem stay as
/// trivial lines, recorded here as rank-one blocks.
pub fn regular_adjoint_blocks(mu: &ELambdaPoint) -> AdjointShape {
    let sys = mu.system();
    let report = sys
        .classify_subsystem(&mu.vanishing_roots())
        .expect("roots vanishing at a point form a closed subsystem");
    let mut blocks = Vec::with_capacity(sys.rank());
    for comp in &report.components {
        let comp_sys = RootSystem::get(comp.kind, comp.rank)
            .expect("classified components have valid rank");
        for d in comp_sys.casimir_weights() {
            blocks.push(2 * d as u64 - 1);
        }
    }
    blocks.resize(sys.rank(), 1);
    AdjointShape::new(blocks, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Kind;

    fn point(kind: Kind, rank: usize, text: &str) -> ELambdaPoint {
        ELambdaPoint::parse(RootSystem::get(kind, rank).unwrap(), text).unwrap()
    }

    #[test]
    fn split_shape_counts_every_root() {
        let mu = point(Kind::A, 2, "1/2,0;0,0");
        let shape = split_adjoint(&mu);
        assert_eq!(shape.unipotent_blocks, vec![1, 1]);
        assert_eq!(shape.line_summands.len(), 6);
        assert_eq!(shape.dimension(), 8);
        // alpha_1 and its negative vanish at this two-torsion point.
        let zeros = shape.line_summands.iter().filter(|p| p.is_zero()).count();
        assert_eq!(zeros, 2);
        assert_eq!(shape.dimension(), mu.split_aut_dim() as u64 + 4);
    }

    #[test]
    fn regular_shape_at_zero_is_the_principal_nilpotent() {
        let a1 = ELambdaPoint::zero(RootSystem::get(Kind::A, 1).unwrap());
        assert_eq!(
            regular_adjoint_blocks(&a1),
            AdjointShape {
                unipotent_blocks: vec![3],
                line_summands: vec![],
            }
        );
        let g2 = ELambdaPoint::zero(RootSystem::get(Kind::G, 2).unwrap());
        // invariant weights 2 and 6 give blocks 3 and 11, dimension 14.
        assert_eq!(regular_adjoint_blocks(&g2).unipotent_blocks, vec![11, 3]);
        assert_eq!(regular_adjoint_blocks(&g2).dimension(), 14);
    }

    #[test]
    fn regular_shape_tracks_the_vanishing_subsystem() {
        // Generic point: nothing vanishes, r trivial blocks.
        let mu = point(Kind::B, 3, "1/5,0;1/25,0;1/125,0");
        assert!(mu.is_torus_regular());
        let shape = regular_adjoint_blocks(&mu);
        assert_eq!(shape.unipotent_blocks, vec![1, 1, 1]);

        // Half the last coroot pairs evenly with every root of B3, so the
        // whole system vanishes and the shape is the full principal one.
        let mu = point(Kind::B, 3, "0,0;0,0;1/2,0");
        assert_eq!(mu.vanishing_roots().len(), 18);
        let shape = regular_adjoint_blocks(&mu);
        assert_eq!(shape.unipotent_blocks, vec![11, 7, 3]);
        assert_eq!(shape.dimension(), 21);
        assert_eq!(shape.dimension(), mu.split_aut_dim() as u64);
    }

    #[test]
    fn block_count_always_equals_the_rank() {
        for (kind, rank, text) in [
            (Kind::A, 3, "1/2,0;0,0;1/2,0"),
            (Kind::C, 3, "1/2,0;1/2,0;1/2,0"),
            (Kind::D, 4, "1/2,0;0,0;1/2,0;1/2,0"),
            (Kind::F, 4, "0,0;0,0;1/3,0;2/3,0"),
        ] {
            let mu = point(kind, rank, text);
            let shape = regular_adjoint_blocks(&mu);
            assert_eq!(shape.unipotent_blocks.len(), rank);
            assert_eq!(shape.dimension(), mu.split_aut_dim() as u64);
            assert!(shape.line_summands.is_empty());
        }
    }
}
