//! A small calculus of bundle expressions with exact `h^0`/`h^1`.
//!
//! Expressions are built from three primitives: `W(d)`, the indecomposable
//! rank-`d` bundle of degree one; `OTwist(k)`, the degree-`k` line bundle
//! supported at the origin; and `Line(lambda)`, the degree-zero line bundle
//! of a curve point. Duals, tensor products, symmetric and exterior squares
//! and direct sums of these normalize to a sum of semistable pieces, and a
//! semistable piece of nonzero degree has cohomology read off from its
//! degree alone. Pieces of degree zero are refused rather than guessed,
//! since their `h^0` depends on more than the numerical data.

use crate::elltorus::EPoint;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BundleExpr {
    /// The indecomposable bundle of rank `d` and degree one.
    W(u64),
    /// A line bundle of degree `k`.
    OTwist(i64),
    /// The degree-zero line bundle attached to a point of the curve.
    Line(EPoint),
    Dual(Box<BundleExpr>),
    Tensor(Box<BundleExpr>, Box<BundleExpr>),
    Sym2(Box<BundleExpr>),
    Wedge2(Box<BundleExpr>),
    Sum(Vec<BundleExpr>),
}

/// Rank and degree of one semistable summand.
type Piece = (u64, i64);

fn sym2_piece((r, d): Piece) -> Piece {
    (r * (r + 1) / 2, (r as i64 + 1) * d)
}

fn wedge2_piece((r, d): Piece) -> Piece {
    (r * r.saturating_sub(1) / 2, (r as i64 - 1) * d)
}

fn tensor_piece((ra, da): Piece, (rb, db): Piece) -> Piece {
    (ra * rb, ra as i64 * db + rb as i64 * da)
}

impl BundleExpr {
    pub fn w(d: u64) -> BundleExpr {
        BundleExpr::W(d)
    }

    pub fn o(k: i64) -> BundleExpr {
        BundleExpr::OTwist(k)
    }

    pub fn line(lambda: EPoint) -> BundleExpr {
        BundleExpr::Line(lambda)
    }

    /// The rank-four sum of the trivial line and the three two-torsion
    /// lines, the degree-zero part of the rank-four regular orthogonal
    /// bundle.
    pub fn q4() -> BundleExpr {
        let mut parts = vec![BundleExpr::o(0)];
        parts.extend(EPoint::two_torsion_nonzero().into_iter().map(BundleExpr::Line));
        BundleExpr::Sum(parts)
    }

    pub fn dual(self) -> BundleExpr {
        BundleExpr::Dual(Box::new(self))
    }

    pub fn tensor(self, other: BundleExpr) -> BundleExpr {
        BundleExpr::Tensor(Box::new(self), Box::new(other))
    }

    pub fn sym2(self) -> BundleExpr {
        BundleExpr::Sym2(Box::new(self))
    }

    pub fn wedge2(self) -> BundleExpr {
        BundleExpr::Wedge2(Box::new(self))
    }

    pub fn plus(self, other: BundleExpr) -> BundleExpr {
        BundleExpr::Sum(vec![self, other])
    }

    pub fn rank(&self) -> u64 {
        self.pieces(false).iter().map(|p| p.0).sum()
    }

    pub fn degree(&self) -> i64 {
        self.pieces(false).iter().map(|p| p.1).sum()
    }

    /// Cohomology of the whole expression.
    pub fn h0_h1(&self) -> Result<(u64, u64)> {
        let mut h0 = 0u64;
        let mut h1 = 0u64;
        for (rank, degree) in self.pieces(false) {
            if rank == 0 {
                continue;
            }
            match degree.signum() {
                1 => h0 += degree as u64,
                -1 => h1 += (-degree) as u64,
                _ => return Err(Error::DegreeZeroCohomology),
            }
        }
        Ok((h0, h1))
    }

    /// Semistable summands as `(rank, degree)` pairs. Duality is threaded
    /// through as a flag so that `Dual` nodes distribute over every
    /// constructor on the way down.
    fn pieces(&self, dual: bool) -> Vec<Piece> {
        let sign = if dual { -1 } else { 1 };
        match self {
            BundleExpr::W(d) => vec![(*d, sign)],
            BundleExpr::OTwist(k) => vec![(1, sign * k)],
            BundleExpr::Line(_) => vec![(1, 0)],
            BundleExpr::Dual(e) => e.pieces(!dual),
            BundleExpr::Sum(parts) => parts.iter().flat_map(|e| e.pieces(dual)).collect(),
            BundleExpr::Tensor(a, b) => {
                let pa = a.pieces(dual);
                let pb = b.pieces(dual);
                pa.iter()
                    .flat_map(|&x| pb.iter().map(move |&y| tensor_piece(x, y)))
                    .collect()
            }
            BundleExpr::Sym2(e) => square_pieces(&e.pieces(dual), sym2_piece),
            BundleExpr::Wedge2(e) => square_pieces(&e.pieces(dual), wedge2_piece),
        }
    }
}

/// `Sym^2` and `Wedge^2` of a sum: the square of each summand plus the
/// tensor product of each unordered pair of distinct summands.
fn square_pieces(parts: &[Piece], square: fn(Piece) -> Piece) -> Vec<Piece> {
    let mut out = Vec::new();
    for (i, &p) in parts.iter().enumerate() {
        out.push(square(p));
        for &q in &parts[i + 1..] {
            out.push(tensor_piece(p, q));
        }
    }
    out
}

/// Cohomology of `expr`, as `(h^0, h^1)`.
pub fn h0_h1(expr: &BundleExpr) -> Result<(u64, u64)> {
    expr.h0_h1()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_degree_follow_the_rules() {
        let e = BundleExpr::w(3);
        assert_eq!((e.rank(), e.degree()), (3, 1));
        let e = BundleExpr::w(3).dual();
        assert_eq!((e.rank(), e.degree()), (3, -1));
        let e = BundleExpr::w(2).tensor(BundleExpr::w(5));
        assert_eq!((e.rank(), e.degree()), (10, 7));
        let e = BundleExpr::w(4).sym2();
        assert_eq!((e.rank(), e.degree()), (10, 5));
        let e = BundleExpr::w(4).wedge2();
        assert_eq!((e.rank(), e.degree()), (6, 3));
        let e = BundleExpr::o(-2).plus(BundleExpr::w(1));
        assert_eq!((e.rank(), e.degree()), (2, -1));
        assert_eq!((BundleExpr::q4().rank(), BundleExpr::q4().degree()), (4, 0));
    }

    #[test]
    fn line_bundle_cohomology() {
        assert_eq!(BundleExpr::o(3).h0_h1().unwrap(), (3, 0));
        assert_eq!(BundleExpr::o(-3).h0_h1().unwrap(), (0, 3));
        assert!(matches!(
            BundleExpr::o(0).h0_h1(),
            Err(Error::DegreeZeroCohomology)
        ));
        let eta = EPoint::parse("1/2,0").unwrap();
        assert!(matches!(
            BundleExpr::line(eta).h0_h1(),
            Err(Error::DegreeZeroCohomology)
        ));
    }

    #[test]
    fn deformation_counts_for_the_classical_strata() {
        for n in 3u64..=12 {
            for d in 1..n {
                let e = BundleExpr::w(n - d).tensor(BundleExpr::w(d)).dual();
                assert_eq!(e.h0_h1().unwrap(), (0, n));
            }
            let e = BundleExpr::w(n).sym2().dual();
            assert_eq!(e.h0_h1().unwrap(), (0, n + 1));
            let e = BundleExpr::q4().tensor(BundleExpr::w(n - 2).dual());
            assert_eq!(e.h0_h1().unwrap(), (0, 4));
            let e = BundleExpr::w(n - 2).wedge2().dual();
            assert_eq!(e.h0_h1().unwrap(), (0, n - 3));
        }
    }

    #[test]
    fn double_dual_and_distributed_squares_agree() {
        let e = BundleExpr::w(3).tensor(BundleExpr::o(-1));
        let dd = e.clone().dual().dual();
        assert_eq!(e.pieces(false), dd.pieces(false));
        assert_eq!(e.h0_h1().unwrap(), (0, 2));

        let a = BundleExpr::w(2);
        let b = BundleExpr::o(-1);
        let whole = a.clone().plus(b.clone()).sym2();
        let split = a
            .clone()
            .sym2()
            .plus(b.clone().sym2())
            .plus(a.tensor(b));
        assert_eq!(whole.rank(), split.rank());
        assert_eq!(whole.degree(), split.degree());
        assert_eq!(whole.h0_h1().unwrap(), split.h0_h1().unwrap());
    }

    #[test]
    fn rank_zero_square_contributes_nothing() {
        let e = BundleExpr::w(1).wedge2();
        assert_eq!((e.rank(), e.degree()), (0, 0));
        assert_eq!(e.h0_h1().unwrap(), (0, 0));
    }
}
