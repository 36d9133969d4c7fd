//! The weighted projective structure of the moduli space of semistable
//! bundles, its divisible strata, and the combinatorial data behind the
//! parabolic construction of the universal family.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Kind, RootSystem, SubsystemComponent};

/// A weighted projective space `WP(g_0, ..., g_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WPSpace {
    pub weights: Vec<i64>,
    pub dim: usize,
}

/// The moduli space of the given system: one weight-one coordinate for the
/// trivial character plus one coordinate of weight `g_i` per simple root,
/// the coefficient of the coroot in the highest one.
pub fn wp_space(sys: &RootSystem) -> WPSpace {
    let mut weights = Vec::with_capacity(sys.rank() + 1);
    weights.push(1);
    weights.extend_from_slice(sys.comarks());
    WPSpace {
        weights,
        dim: sys.rank(),
    }
}

/// Number of weighted coordinates divisible by `d`, the dimension count of
/// the stratum where a `d`-torsion pattern can concentrate. Requires
/// `d >= 2`: every weight divides by one, and the count would degenerate.
pub fn stratum_dim(sys: &RootSystem, d: i64) -> Result<usize> {
    if d < 2 {
        return Err(Error::StratumDivisor(d));
    }
    Ok(wp_space(sys)
        .weights
        .iter()
        .filter(|&&g| g % d == 0)
        .count())
}

/// How the marked simple root of the parabolic construction was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ParabolicRule {
    /// D and E types mark the unique trivalent node.
    Trivalent,
    /// B, C, F and G mark the long-root end of the multiple edge.
    MultipleEdgeLongRoot,
    /// A-type marks the `d`-th node, one choice per subspace dimension.
    ATypeChoice { d: usize },
}

/// Marked node, unipotent level counts, and Levi structure of the standard
/// maximal parabolic attached to a system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicData {
    pub marked_node: usize,
    pub rule: ParabolicRule,
    /// level `k` to the number of positive roots whose coefficient at the
    /// marked node is exactly `k`; keys run from 1 to the mark of the node.
    pub level_counts: BTreeMap<i64, usize>,
    /// Irreducible components of the Levi root system, the roots with
    /// coefficient zero at the marked node.
    pub levi_components: Vec<SubsystemComponent>,
}

fn trivalent_node(sys: &RootSystem) -> Result<usize> {
    let cartan = sys.cartan();
    let rank = sys.rank();
    let mut found = None;
    for i in 0..rank {
        let degree = (0..rank).filter(|&j| j != i && cartan[i][j] != 0).count();
        if degree == 3 {
            if found.is_some() {
                return Err(Error::ParabolicChoice(format!(
                    "{} has more than one trivalent node",
                    sys
                )));
            }
            found = Some(i);
        }
    }
    found.ok_or_else(|| Error::ParabolicChoice(format!("{} has no trivalent node", sys)))
}

fn long_end_of_multiple_edge(sys: &RootSystem) -> usize {
    let cartan = sys.cartan();
    let rank = sys.rank();
    for i in 0..rank {
        for j in 0..rank {
            if i == j || cartan[i][j] == 0 {
                continue;
            }
            if cartan[i][j] * cartan[j][i] >= 2 {
                let lengths = sys.simple_lengths();
                return if lengths[i] >= lengths[j] { i } else { j };
            }
        }
    }
    unreachable!("only called for kinds with a multiple edge")
}

/// Data of the distinguished maximal parabolic: the trivalent node for D and
/// E, the long end of the multiple edge for B, C, F and G, and the `d`-th
/// node for A, where `d` selects the subspace dimension of the flag.
pub fn parabolic_data(sys: &RootSystem, d: Option<usize>) -> Result<ParabolicData> {
    let (marked_node, rule) = match sys.kind() {
        Kind::A => {
            let n = sys.rank() + 1;
            let d = d.ok_or_else(|| {
                Error::ParabolicChoice("type A needs d, the dimension of the subspace".into())
            })?;
            if d == 0 || d >= n {
                return Err(Error::ParabolicChoice(format!(
                    "d = {d} is outside 1..{} for {}",
                    n - 1,
                    sys
                )));
            }
            (d - 1, ParabolicRule::ATypeChoice { d })
        }
        kind => {
            if let Some(d) = d {
                return Err(Error::ParabolicChoice(format!(
                    "d = {d} given, but the marked node of {sys} is canonical"
                )));
            }
            match kind {
                Kind::D | Kind::E => (trivalent_node(sys)?, ParabolicRule::Trivalent),
                _ => (long_end_of_multiple_edge(sys), ParabolicRule::MultipleEdgeLongRoot),
            }
        }
    };

    let mut level_counts: BTreeMap<i64, usize> = BTreeMap::new();
    let mut levi_roots = Vec::new();
    for (index, root) in sys.roots().iter().enumerate() {
        let level = root[marked_node];
        if level == 0 {
            levi_roots.push(index);
        } else if level > 0 {
            *level_counts.entry(level).or_insert(0) += 1;
        }
    }
    let levi_components = sys
        .classify_subsystem(&levi_roots)
        .expect("levi roots form a closed subsystem")
        .components;
    let mark = sys.marks()[marked_node];
    debug_assert!(level_counts.keys().eq((1..=mark).collect::<Vec<_>>().iter()));
    Ok(ParabolicData {
        marked_node,
        rule,
        level_counts,
        levi_components,
    })
}

/// One summand of the pushed-down universal family: a coordinate of weight
/// `weight` on the line-bundle factor of exponent `exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRow {
    pub weight: i64,
    pub exponent: i64,
}

/// The weight/exponent table of the family over the moduli space: a leading
/// `(1, 0)` row, then the sorted moduli weights paired with the invariant
/// weights of the system. D-type pairs them in the order
/// `2, 4, n, 6, 8, ..., 2n-2`, which places the middle invariant weight `n`
/// against a weight-one coordinate; everywhere else both lists are
/// ascending. Nothing is returned for E8, where the construction breaks
/// down on the cuspidal locus.
pub fn family_table(sys: &RootSystem) -> Result<Vec<FamilyRow>> {
    if sys.kind() == Kind::E && sys.rank() == 8 {
        return Err(Error::FamilyTableExcluded {
            kind: sys.kind(),
            rank: sys.rank(),
        });
    }
    let mut weights = sys.comarks().to_vec();
    weights.sort_unstable();
    let exponents: Vec<i64> = if sys.kind() == Kind::D {
        let n = sys.rank() as i64;
        let mut seq = vec![2, 4, n];
        seq.extend((3..n).map(|k| 2 * k));
        seq
    } else {
        let mut cas = sys.casimir_weights();
        cas.sort_unstable();
        cas
    };
    debug_assert_eq!(weights.len(), exponents.len());
    let mut rows = vec![FamilyRow { weight: 1, exponent: 0 }];
    rows.extend(
        weights
            .into_iter()
            .zip(exponents)
            .map(|(weight, exponent)| FamilyRow { weight, exponent }),
    );
    Ok(rows)
}

/// Order of the twist needed before the universal family descends to the
/// moduli space itself: `n / gcd(d, n)` for `SL(n)` with the `d`-th
/// parabolic, 2 for `Sp(2n)` always, for `Spin(2n+1)` with `n` even and for
/// `Spin(2n)` with `n` odd, and 1 in every other case.
pub fn n_p(sys: &RootSystem, d: Option<usize>) -> Result<u64> {
    let rank = sys.rank();
    match sys.kind() {
        Kind::A => {
            let n = rank as u64 + 1;
            let d = d.ok_or_else(|| {
                Error::ParabolicChoice("type A needs d, the dimension of the subspace".into())
            })? as u64;
            if d == 0 || d >= n {
                return Err(Error::ParabolicChoice(format!(
                    "d = {d} is outside 1..{} for {}",
                    n - 1,
                    sys
                )));
            }
            Ok(n / gcd(d, n))
        }
        kind => {
            if let Some(d) = d {
                return Err(Error::ParabolicChoice(format!(
                    "d = {d} given, but {sys} has a single parabolic choice"
                )));
            }
            let two = match kind {
                Kind::C => true,
                Kind::B => rank % 2 == 0,
                Kind::D => rank % 2 == 1,
                _ => false,
            };
            Ok(if two { 2 } else { 1 })
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(kind: Kind, rank: usize) -> std::sync::Arc<RootSystem> {
        RootSystem::get(kind, rank).unwrap()
    }

    #[test]
    fn wp_weights_follow_the_comarks() {
        assert_eq!(wp_space(&sys(Kind::A, 2)).weights, vec![1, 1, 1]);
        assert_eq!(wp_space(&sys(Kind::C, 3)).weights, vec![1, 1, 1, 1]);
        assert_eq!(wp_space(&sys(Kind::E, 8)).weights, vec![1, 2, 3, 4, 6, 5, 4, 3, 2]);
        assert_eq!(wp_space(&sys(Kind::E, 6)).weights, vec![1, 1, 2, 2, 3, 2, 1]);
        assert_eq!(wp_space(&sys(Kind::G, 2)).dim, 2);
    }

    #[test]
    fn strata_counts_for_e8() {
        let e8 = sys(Kind::E, 8);
        let dims: Vec<usize> = (2..=6).map(|d| stratum_dim(&e8, d).unwrap()).collect();
        assert_eq!(dims, vec![5, 3, 2, 1, 1]);
        assert_eq!(stratum_dim(&e8, 7).unwrap(), 0);
        assert!(matches!(stratum_dim(&e8, 1), Err(Error::StratumDivisor(1))));
        assert!(matches!(stratum_dim(&e8, -3), Err(Error::StratumDivisor(-3))));
    }

    #[test]
    fn a_type_parabolic_is_a_rectangle() {
        let a3 = sys(Kind::A, 3);
        let p = parabolic_data(&a3, Some(2)).unwrap();
        assert_eq!(p.marked_node, 1);
        assert_eq!(p.rule, ParabolicRule::ATypeChoice { d: 2 });
        assert_eq!(p.level_counts, BTreeMap::from([(1, 4)]));
        assert_eq!(p.levi_components.len(), 2);
        assert!(p.levi_components.iter().all(|c| c.kind == Kind::A && c.rank == 1));

        assert!(parabolic_data(&a3, None).is_err());
        assert!(parabolic_data(&a3, Some(0)).is_err());
        assert!(parabolic_data(&a3, Some(4)).is_err());
        assert!(parabolic_data(&sys(Kind::B, 3), Some(1)).is_err());
    }

    #[test]
    fn marked_nodes_for_the_multiple_edge_types() {
        let p = parabolic_data(&sys(Kind::B, 3), None).unwrap();
        assert_eq!(p.marked_node, 1);
        assert_eq!(p.level_counts, BTreeMap::from([(1, 6), (2, 1)]));
        let kinds: Vec<(Kind, usize)> =
            p.levi_components.iter().map(|c| (c.kind, c.rank)).collect();
        assert_eq!(kinds, vec![(Kind::A, 1), (Kind::A, 1)]);

        let p = parabolic_data(&sys(Kind::C, 4), None).unwrap();
        assert_eq!(p.marked_node, 3);
        assert_eq!(p.level_counts, BTreeMap::from([(1, 10)]));
        assert_eq!(p.levi_components.len(), 1);
        assert_eq!(p.levi_components[0].kind, Kind::A);
        assert_eq!(p.levi_components[0].rank, 3);

        let p = parabolic_data(&sys(Kind::F, 4), None).unwrap();
        assert_eq!(p.marked_node, 1);
        let p = parabolic_data(&sys(Kind::G, 2), None).unwrap();
        assert_eq!(p.marked_node, 1);
        assert_eq!(p.level_counts, BTreeMap::from([(1, 4), (2, 1)]));
    }

    #[test]
    fn trivalent_marks_for_d_and_e() {
        for n in 4..=8 {
            let p = parabolic_data(&sys(Kind::D, n), None).unwrap();
            assert_eq!(p.marked_node, n - 3);
            assert_eq!(p.rule, ParabolicRule::Trivalent);
            assert_eq!(
                p.level_counts,
                BTreeMap::from([(1, 4 * (n - 2) as usize), (2, (n - 2) * (n - 3) / 2)])
            );
        }
        assert!(parabolic_data(&sys(Kind::D, 3), None).is_err());

        let p = parabolic_data(&sys(Kind::E, 8), None).unwrap();
        assert_eq!(p.marked_node, 3);
        assert_eq!(sys(Kind::E, 8).marks()[3], 6);
        assert_eq!(p.level_counts.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4, 5, 6]);
        let unipotent: usize = p.level_counts.values().sum();
        let levi_positive: usize =
            p.levi_components.iter().map(|c| c.num_roots / 2).sum();
        assert_eq!(unipotent + levi_positive, 120);
        let mut levi: Vec<(Kind, usize)> =
            p.levi_components.iter().map(|c| (c.kind, c.rank)).collect();
        levi.sort();
        assert_eq!(levi, vec![(Kind::A, 1), (Kind::A, 2), (Kind::A, 4)]);
    }

    #[test]
    fn family_tables_pair_weights_with_invariant_degrees() {
        let rows = |kind, rank| {
            family_table(&sys(kind, rank))
                .unwrap()
                .iter()
                .map(|r| (r.weight, r.exponent))
                .collect::<Vec<_>>()
        };
        assert_eq!(rows(Kind::A, 2), vec![(1, 0), (1, 2), (1, 3)]);
        assert_eq!(rows(Kind::D, 4), vec![(1, 0), (1, 2), (1, 4), (1, 4), (2, 6)]);
        assert_eq!(
            rows(Kind::D, 7),
            vec![(1, 0), (1, 2), (1, 4), (1, 7), (2, 6), (2, 8), (2, 10), (2, 12)]
        );
        assert_eq!(rows(Kind::G, 2), vec![(1, 0), (1, 2), (2, 6)]);
        assert_eq!(
            rows(Kind::F, 4),
            vec![(1, 0), (1, 2), (2, 6), (2, 8), (3, 12)]
        );
        assert!(matches!(
            family_table(&sys(Kind::E, 8)),
            Err(Error::FamilyTableExcluded { kind: Kind::E, rank: 8 })
        ));

        // Row count and weight multiset match the moduli space everywhere.
        for (kind, rank) in [
            (Kind::A, 5),
            (Kind::B, 4),
            (Kind::C, 3),
            (Kind::D, 6),
            (Kind::E, 6),
            (Kind::E, 7),
        ] {
            let s = sys(kind, rank);
            let rows = family_table(&s).unwrap();
            assert_eq!(rows.len(), rank + 1);
            let mut weights: Vec<i64> = rows.iter().map(|r| r.weight).collect();
            weights.sort_unstable();
            let mut expected = wp_space(&s).weights;
            expected.sort_unstable();
            assert_eq!(weights, expected);
        }
    }

    #[test]
    fn descent_orders() {
        assert_eq!(n_p(&sys(Kind::A, 5), Some(2)).unwrap(), 3);
        assert_eq!(n_p(&sys(Kind::A, 5), Some(1)).unwrap(), 6);
        assert_eq!(n_p(&sys(Kind::A, 5), Some(3)).unwrap(), 2);
        assert_eq!(n_p(&sys(Kind::A, 1), Some(1)).unwrap(), 2);
        assert!(n_p(&sys(Kind::A, 3), None).is_err());
        assert!(n_p(&sys(Kind::A, 3), Some(4)).is_err());
        assert!(n_p(&sys(Kind::B, 3), Some(1)).is_err());

        assert_eq!(n_p(&sys(Kind::C, 5), None).unwrap(), 2);
        assert_eq!(n_p(&sys(Kind::B, 4), None).unwrap(), 2);
        assert_eq!(n_p(&sys(Kind::B, 3), None).unwrap(), 1);
        assert_eq!(n_p(&sys(Kind::D, 5), None).unwrap(), 2);
        assert_eq!(n_p(&sys(Kind::D, 6), None).unwrap(), 1);
        for (kind, rank) in [(Kind::E, 6), (Kind::E, 7), (Kind::E, 8), (Kind::F, 4), (Kind::G, 2)] {
            assert_eq!(n_p(&sys(kind, rank), None).unwrap(), 1);
        }
    }

    #[test]
    fn descent_order_divides_the_center() {
        for rank in 1..=8 {
            let s = sys(Kind::A, rank);
            let center = rank as u64 + 1;
            for d in 1..=rank {
                assert_eq!(center % n_p(&s, Some(d)).unwrap(), 0);
            }
        }
        for (kind, lo) in [(Kind::B, 2), (Kind::C, 2), (Kind::D, 3)] {
            for rank in lo..=8 {
                let s = sys(kind, rank);
                let center = if kind == Kind::D { 4 } else { 2 };
                assert_eq!(center % n_p(&s, None).unwrap(), 0);
            }
        }
    }
}
