//! Sparse exact linear algebra: incremental row echelon bases and a dense solver.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// Sparse vector keyed by an ordered coordinate label. Zero entries are never stored.
pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// `acc += c * v`, dropping entries that cancel.
pub fn add_scaled<K: Ord + Clone>(acc: &mut SparseVec<K>, c: &Scalar, v: &SparseVec<K>) {
    if c.is_zero() {
        return;
    }
    for (k, x) in v {
        add_entry(acc, k.clone(), c * x);
    }
}

pub fn add_entry<K: Ord>(acc: &mut SparseVec<K>, k: K, x: Scalar) {
    if x.is_zero() {
        return;
    }
    match acc.entry(k) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(x);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += x;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Row echelon basis of a growing subspace. Each stored row is monic at its
/// pivot, which is the row's smallest key.
#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone> {
    rows: Vec<SparseVec<K>>,
    pivots: BTreeMap<K, usize>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self {
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Residue of `v` modulo the current span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut v = v.clone();
        let mut cursor: Option<K> = None;
        loop {
            // Eliminating a pivot only touches keys at or after it, so one
            // ascending sweep suffices.
            let next = match &cursor {
                None => v.keys().find(|k| self.pivots.contains_key(*k)).cloned(),
                Some(c) => v
                    .range((std::ops::Bound::Excluded(c.clone()), std::ops::Bound::Unbounded))
                    .map(|(k, _)| k)
                    .find(|k| self.pivots.contains_key(*k))
                    .cloned(),
            };
            let Some(k) = next else { break };
            let c = -v[&k].clone();
            add_scaled(&mut v, &c, &self.rows[self.pivots[&k]]);
            cursor = Some(k);
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_empty()
    }

    /// Adds `v` to the span. Returns `true` when the rank grew.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let r = self.reduce(v);
        let Some((k, lead)) = r.iter().next() else {
            return false;
        };
        let (k, inv) = (k.clone(), Scalar::one() / lead);
        let row: SparseVec<K> = r.into_iter().map(|(key, x)| (key, x * &inv)).collect();
        self.pivots.insert(k, self.rows.len());
        self.rows.push(row);
        true
    }

    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }
}

/// Rank of a family of sparse vectors.
pub fn rank_of<'a, K: Ord + Clone + 'a>(vs: impl IntoIterator<Item = &'a SparseVec<K>>) -> usize {
    let mut e = Echelon::new();
    for v in vs {
        e.insert(v);
    }
    e.rank()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    Unique(Vec<Scalar>),
    Inconsistent,
    Underdetermined,
}

/// Solves the square or overdetermined system `a · x = b` exactly by
/// Gauss–Jordan elimination.
pub fn solve(a: &[Vec<Scalar>], b: &[Scalar]) -> SolveOutcome {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Scalar>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| {
            let mut r = r.clone();
            r.push(x.clone());
            r
        })
        .collect();
    let mut pivot_row = 0;
    let mut pivot_cols = Vec::new();
    for col in 0..cols {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, p);
        let inv = Scalar::one() / &m[pivot_row][col];
        for x in m[pivot_row].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot = m[pivot_row].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * y;
                }
            }
        }
        pivot_cols.push(col);
        pivot_row += 1;
    }
    if m[pivot_row..].iter().any(|r| !r[cols].is_zero()) {
        return SolveOutcome::Inconsistent;
    }
    if pivot_cols.len() < cols {
        return SolveOutcome::Underdetermined;
    }
    SolveOutcome::Unique((0..cols).map(|i| m[i][cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn sv(entries: &[(u32, i64)]) -> SparseVec<u32> {
        entries.iter().map(|&(k, x)| (k, int(x))).collect()
    }

    #[test]
    fn echelon_rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(&sv(&[(0, 1), (1, 2)])));
        assert!(e.insert(&sv(&[(1, 1), (2, 1)])));
        assert!(!e.insert(&sv(&[(0, 1), (1, 3), (2, 1)])));
        assert!(e.contains(&sv(&[(0, 2), (1, 4)])));
        assert!(!e.contains(&sv(&[(2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.insert(&sv(&[(2, 5)])));
        assert_eq!(e.rank(), 3);
    }

    #[test]
    fn zero_vector_never_grows_rank() {
        let mut e: Echelon<u32> = Echelon::new();
        assert!(!e.insert(&SparseVec::new()));
        assert_eq!(e.rank(), 0);
    }

    #[test]
    fn solve_outcomes() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(
            solve(&a, &[int(1), int(2)]),
            SolveOutcome::Unique(vec![rat(1, 5), rat(3, 5)])
        );
        let sing = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(solve(&sing, &[int(1), int(2)]), SolveOutcome::Underdetermined);
        assert_eq!(solve(&sing, &[int(1), int(3)]), SolveOutcome::Inconsistent);
    }
}
