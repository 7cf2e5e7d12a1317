//! Sparse exact row echelon forms over Q.
//!
//! Columns are plain indices; a smaller index is "more leading". Rows are
//! kept with leading coefficient one and every incoming row is reduced
//! against all existing pivots, so membership is exact reduction to zero.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::ring::Rational;

/// A sparse vector: `(column, value)` pairs sorted by column, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_unsorted(mut entries: Vec<(usize, Rational)>) -> SparseVec {
    entries.sort_by_key(|e| e.0);
    let mut out: SparseVec = Vec::with_capacity(entries.len());
    for (c, v) in entries {
        match out.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|e| !e.1.is_zero());
    out
}

/// `v - a * w`.
pub fn sub_scaled(v: &[(usize, Rational)], a: &Rational, w: &[(usize, Rational)]) -> SparseVec {
    let mut out = Vec::with_capacity(v.len() + w.len());
    let (mut i, mut j) = (0, 0);
    while i < v.len() || j < w.len() {
        if j == w.len() || (i < v.len() && v[i].0 < w[j].0) {
            out.push(v[i].clone());
            i += 1;
        } else if i == v.len() || w[j].0 < v[i].0 {
            out.push((w[j].0, -(a * &w[j].1)));
            j += 1;
        } else {
            let x = &v[i].1 - a * &w[j].1;
            if !x.is_zero() {
                out.push((v[i].0, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remove every pivot column from `v`.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut start = 0usize;
        loop {
            let hit = v
                .iter()
                .enumerate()
                .skip(start)
                .find(|(_, (c, _))| self.pivot_row.contains_key(c))
                .map(|(i, (c, a))| (i, *c, a.clone()));
            let Some((i, c, a)) = hit else { break };
            let row = &self.rows[self.pivot_row[&c]];
            v = sub_scaled(&v, &a, row);
            // entries before position i are untouched and pivot-free
            start = i;
        }
        v
    }

    /// Insert `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        self.push_reduced(r)
    }

    fn push_reduced(&mut self, mut r: SparseVec) -> bool {
        let Some((c, lead)) = r.first().cloned() else { return false };
        if !lead.is_one() {
            let inv = Rational::one() / lead;
            for e in r.iter_mut() {
                e.1 *= &inv;
            }
        }
        self.pivot_row.insert(c, self.rows.len());
        self.rows.push(r);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.pivot_row.keys().copied().collect();
        p.sort_unstable();
        p
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Reduced row echelon form, rows sorted by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut rows = self.rows;
        rows.sort_by_key(|r| r[0].0);
        let pivots: HashMap<usize, usize> = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        for i in (0..rows.len()).rev() {
            loop {
                let hit = rows[i].iter().skip(1).find(|(c, _)| pivots.contains_key(c)).map(|(c, a)| (*c, a.clone()));
                let Some((c, a)) = hit else { break };
                let j = pivots[&c];
                debug_assert!(j > i);
                let new = sub_scaled(&rows[i], &a, &rows[j]);
                rows[i] = new;
            }
        }
        rows
    }
}

/// Rank of a set of sparse rows.
pub fn rank_of<I: IntoIterator<Item = SparseVec>>(rows: I) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{int, rat};

    fn v(entries: &[(usize, i64)]) -> SparseVec {
        sparse_from_unsorted(entries.iter().map(|&(c, x)| (c, int(x))).collect())
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(v(&[(2, 1)])));
    }

    #[test]
    fn rref_is_reduced() {
        let mut e = Echelon::new();
        e.insert(v(&[(0, 2), (1, 2), (3, 1)]));
        e.insert(v(&[(1, 3), (3, 1)]));
        let rows = e.into_rref();
        assert_eq!(rows[0], vec![(0, int(1)), (3, rat(1, 2) - rat(1, 3))]);
        assert_eq!(rows[1], vec![(1, int(1)), (3, rat(1, 3))]);
    }

    #[test]
    fn cancellation_in_sub() {
        let a = v(&[(0, 1), (2, 1)]);
        let b = v(&[(0, 1), (2, 1), (5, 1)]);
        assert_eq!(sub_scaled(&a, &int(1), &b), v(&[(5, -1)]));
    }
}
