//! Classification of closed symmetric root subsets by type.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{height, Kind, RootSystem};

/// One irreducible component of a closed subsystem.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemComponent {
    pub kind: Kind,
    pub rank: usize,
    /// Root indices (into the ambient system) of the component's simple basis.
    pub basis: Vec<usize>,
    pub num_roots: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubsystemReport {
    pub components: Vec<SubsystemComponent>,
    /// Size of the input subset.
    pub num_roots: usize,
    /// Sum of the component ranks.
    pub total_rank: usize,
}

impl RootSystem {
    /// Classifies a closed, negation-symmetric set of roots (given by
    /// indices) into irreducible components with their types.
    ///
    /// Errors if the subset is not closed: every root must come with its
    /// negative, and the sum of two members that is a root of the ambient
    /// system must again be a member.
    pub fn classify_subsystem(&self, subset: &[usize]) -> Result<SubsystemReport> {
        let mut members: Vec<usize> = Vec::new();
        let mut set: HashSet<usize> = HashSet::new();
        for &i in subset {
            if i >= self.num_roots() {
                return Err(Error::RootIndex {
                    index: i,
                    count: self.num_roots(),
                });
            }
            if set.insert(i) {
                members.push(i);
            }
        }
        for &i in &members {
            let neg: Vec<i64> = self.roots()[i].iter().map(|c| -c).collect();
            let j = self.root_index(&neg).expect("negative of a root is a root");
            if !set.contains(&j) {
                return Err(Error::SubsetNotClosed {
                    reason: format!("missing the negative of root {:?}", self.roots()[i]),
                });
            }
        }
        for &i in &members {
            for &j in &members {
                let sum: Vec<i64> = self.roots()[i]
                    .iter()
                    .zip(&self.roots()[j])
                    .map(|(a, b)| a + b)
                    .collect();
                if let Some(k) = self.root_index(&sum) {
                    if !set.contains(&k) {
                        return Err(Error::SubsetNotClosed {
                            reason: format!(
                                "contains {:?} and {:?} but not their sum",
                                self.roots()[i],
                                self.roots()[j]
                            ),
                        });
                    }
                }
            }
        }

        // Simple basis: positive members that are not sums of two positive
        // members.
        let positives: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&i| height(&self.roots()[i]) > 0)
            .collect();
        let pos_set: HashSet<usize> = positives.iter().copied().collect();
        let mut basis: Vec<usize> = Vec::new();
        'outer: for &i in &positives {
            for &j in &positives {
                let diff: Vec<i64> = self.roots()[i]
                    .iter()
                    .zip(&self.roots()[j])
                    .map(|(a, b)| a - b)
                    .collect();
                if let Some(k) = self.root_index(&diff) {
                    if pos_set.contains(&k) && pos_set.contains(&j) {
                        continue 'outer;
                    }
                }
            }
            basis.push(i);
        }
        basis.sort_by_key(|&i| (height(&self.roots()[i]), self.roots()[i].clone()));

        // Split the basis into connected components of the pairing graph.
        let b = basis.len();
        let mut comp_id = vec![usize::MAX; b];
        let mut n_comp = 0;
        for s in 0..b {
            if comp_id[s] != usize::MAX {
                continue;
            }
            let mut stack = vec![s];
            comp_id[s] = n_comp;
            while let Some(u) = stack.pop() {
                for v in 0..b {
                    if comp_id[v] == usize::MAX && self.pairing(basis[u], basis[v]) != 0 {
                        comp_id[v] = n_comp;
                        stack.push(v);
                    }
                }
            }
            n_comp += 1;
        }

        let mut components = Vec::with_capacity(n_comp);
        for c in 0..n_comp {
            let nodes: Vec<usize> = (0..b).filter(|&u| comp_id[u] == c).map(|u| basis[u]).collect();
            let (kind, rank) = self.identify_component(&nodes)?;
            // The full system keeps its own name across the A3 = D3 and
            // B2 = C2 coincidences.
            let (kind, rank) = if members.len() == self.num_roots() {
                (self.kind(), self.rank())
            } else {
                (kind, rank)
            };
            components.push(SubsystemComponent {
                num_roots: kind.num_roots(rank),
                kind,
                rank,
                basis: nodes,
            });
        }
        components.sort_by_key(|c| (c.kind, c.rank, c.basis.clone()));

        let counted: usize = components.iter().map(|c| c.num_roots).sum();
        if counted != members.len() {
            return Err(Error::SubsetNotClosed {
                reason: format!(
                    "component types account for {counted} roots, subset has {}",
                    members.len()
                ),
            });
        }
        let total_rank = components.iter().map(|c| c.rank).sum();
        Ok(SubsystemReport {
            components,
            num_roots: members.len(),
            total_rank,
        })
    }

    /// Type of one connected diagram given by basis root indices.
    fn identify_component(&self, nodes: &[usize]) -> Result<(Kind, usize)> {
        let n = nodes.len();
        if n == 1 {
            return Ok((Kind::A, 1));
        }
        let mut edges: Vec<(usize, usize, i64)> = Vec::new();
        let mut degree = vec![0usize; n];
        for u in 0..n {
            for v in u + 1..n {
                let m = self.pairing(nodes[u], nodes[v]) * self.pairing(nodes[v], nodes[u]);
                if m > 0 {
                    edges.push((u, v, m));
                    degree[u] += 1;
                    degree[v] += 1;
                }
            }
        }
        let bad = || Error::SubsetNotClosed {
            reason: "basis does not span a diagram of finite type".into(),
        };
        if edges.len() != n - 1 {
            return Err(bad());
        }
        let triples = edges.iter().filter(|e| e.2 == 3).count();
        let doubles = edges.iter().filter(|e| e.2 == 2).count();
        if triples > 0 {
            if n == 2 && triples == 1 {
                return Ok((Kind::G, 2));
            }
            return Err(bad());
        }
        if doubles > 1 {
            return Err(bad());
        }
        if doubles == 1 {
            let &(u, v, _) = edges.iter().find(|e| e.2 == 2).expect("counted");
            if n == 2 {
                return Ok((Kind::B, 2));
            }
            if degree[u] == 2 && degree[v] == 2 {
                if n == 4 && degree.iter().all(|&d| d <= 2) {
                    return Ok((Kind::F, 4));
                }
                return Err(bad());
            }
            if degree.iter().any(|&d| d > 2) {
                return Err(bad());
            }
            let leaf = if degree[u] == 1 { u } else { v };
            let other = if leaf == u { v } else { u };
            if self.root_length(nodes[leaf]) < self.root_length(nodes[other]) {
                return Ok((Kind::B, n));
            }
            return Ok((Kind::C, n));
        }
        // Single edges only: a path or a single trivalent vertex.
        let forks = degree.iter().filter(|&&d| d >= 3).count();
        if degree.iter().any(|&d| d > 3) || forks > 1 {
            return Err(bad());
        }
        if forks == 0 {
            return Ok((Kind::A, n));
        }
        let center = degree.iter().position(|&d| d == 3).expect("counted");
        let mut arms: Vec<usize> = Vec::new();
        for &(u, v, _) in &edges {
            for (s, o) in [(u, v), (v, u)] {
                if s == center {
                    // Walk away from the center.
                    let mut len = 1;
                    let mut prev = center;
                    let mut cur = o;
                    loop {
                        let next = edges
                            .iter()
                            .filter_map(|&(a, b, _)| {
                                if a == cur && b != prev {
                                    Some(b)
                                } else if b == cur && a != prev {
                                    Some(a)
                                } else {
                                    None
                                }
                            })
                            .next();
                        match next {
                            Some(x) => {
                                len += 1;
                                prev = cur;
                                cur = x;
                            }
                            None => break,
                        }
                    }
                    arms.push(len);
                }
            }
        }
        arms.sort_unstable();
        if arms.len() != 3 {
            return Err(bad());
        }
        match (arms[0], arms[1], arms[2]) {
            (1, 1, _) => Ok((Kind::D, n)),
            (1, 2, 2) => Ok((Kind::E, 6)),
            (1, 2, 3) => Ok((Kind::E, 7)),
            (1, 2, 4) => Ok((Kind::E, 8)),
            _ => Err(bad()),
        }
    }
}
