//! Catalan and Narayana numbers, Dyck paths, doset minors and the
//! classification of monomials into unacceptable, initial and non-initial.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::apolar::DetOrPerm;
use crate::error::{Error, Result};
use crate::ring::{binomial, monomials_of_degree, Monomial, RingSpec};

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// Which indexing of the Narayana numbers to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NarayanaConvention {
    /// `N(n, t) = C(n, t) C(n, t - 1) / n`: Dyck paths of order `n` with
    /// `t` peaks.
    Standard,
    /// `C(n + 1, t) C(n + 1, t + 1) / (n + 1)`: the dimension of the span of
    /// the `t x t` minors of a symmetric `n x n` matrix.
    Table,
}

pub fn narayana(n: u64, t: u64, convention: NarayanaConvention) -> Result<BigInt> {
    if n == 0 || t == 0 || t > n {
        return Err(Error::DegreeOutOfRange { degree: t as usize, max: n as usize });
    }
    Ok(match convention {
        NarayanaConvention::Standard => binomial(n, t) * binomial(n, t - 1) / BigInt::from(n),
        NarayanaConvention::Table => binomial(n + 1, t) * binomial(n + 1, t + 1) / BigInt::from(n + 1),
    })
}

/// A minor `[a | b]` with `a_i <= b_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DosetMinor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl DosetMinor {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>) -> Result<Self> {
        let inc = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]);
        if rows.len() != cols.len() || !inc(&rows) || !inc(&cols) || rows.iter().zip(&cols).any(|(a, b)| a > b) {
            return Err(Error::Unsupported(format!("not a doset minor: {:?} | {:?}", rows, cols)));
        }
        Ok(DosetMinor { rows, cols })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `x[a_1,b_1] ... x[a_t,b_t]`.
    pub fn flag_monomial(&self, ring: &RingSpec) -> Result<Monomial> {
        let vars = self.rows.iter().zip(&self.cols).map(|(&a, &b)| ring.var(a, b)).collect::<Result<Vec<_>>>()?;
        Ok(Monomial::product_of(vars))
    }

    pub fn selector(&self, n: usize) -> Result<crate::invariants::SubmatrixSelector> {
        crate::invariants::SubmatrixSelector::new(self.rows.clone(), self.cols.clone(), n)
    }
}

pub fn enumerate_doset_minors(n: usize, t: usize) -> Vec<DosetMinor> {
    let subs = crate::invariants::subsets(n, t);
    let mut out = Vec::new();
    for a in &subs {
        for b in &subs {
            if a.iter().zip(b).all(|(x, y)| x <= y) {
                out.push(DosetMinor { rows: a.clone(), cols: b.clone() });
            }
        }
    }
    out
}

/// A lattice path of east (`true`) and north (`false`) unit steps from
/// `(0,0)` to `(n,n)` that never goes above the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DyckPath {
    pub steps: Vec<bool>,
}

impl DyckPath {
    pub fn new(steps: Vec<bool>) -> Result<Self> {
        let mut h: i64 = 0;
        for &s in &steps {
            h += if s { 1 } else { -1 };
            if h < 0 {
                return Err(Error::Unsupported("path rises above the diagonal".into()));
            }
        }
        if h != 0 {
            return Err(Error::Unsupported("path does not end on the diagonal".into()));
        }
        Ok(DyckPath { steps })
    }

    pub fn order(&self) -> usize {
        self.steps.len() / 2
    }

    /// Number of east steps immediately followed by a north step.
    pub fn corners(&self) -> usize {
        self.steps.windows(2).filter(|w| w[0] && !w[1]).count()
    }
}

/// All Dyck paths of order `n`, optionally only those with `corners` corners.
pub fn enumerate_dyck(n: usize, corners: Option<usize>) -> Vec<DyckPath> {
    fn go(n: usize, east: usize, north: usize, cur: &mut Vec<bool>, out: &mut Vec<DyckPath>) {
        if east == n && north == n {
            out.push(DyckPath { steps: cur.clone() });
            return;
        }
        if east < n {
            cur.push(true);
            go(n, east + 1, north, cur, out);
            cur.pop();
        }
        if north < east {
            cur.push(false);
            go(n, east, north + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    if let Some(t) = corners {
        out.retain(|p| p.corners() == t);
    }
    out
}

/// Path counts of order `n` by number of corners, index `t` for `t = 0..=n`.
pub fn dyck_corner_counts(n: usize) -> Vec<usize> {
    let mut counts = vec![0; n + 1];
    for p in enumerate_dyck(n, None) {
        counts[p.corners()] += 1;
    }
    counts
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialClass {
    Unacceptable,
    ConcaInitial,
    AcceptableNonInitial,
}

/// Classifies degree-`k` monomials for a fixed form and size. Building it
/// computes the acceptable and initial sets once.
#[derive(Debug, Clone)]
pub struct Classifier {
    pub form: DetOrPerm,
    pub n: usize,
    pub k: u32,
    acceptable: BTreeSet<Monomial>,
    initial: BTreeSet<Monomial>,
}

impl Classifier {
    pub fn new(form: DetOrPerm, n: usize, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::DegreeOutOfRange { degree: 0, max: n });
        }
        let acceptable = crate::invariants::acceptable_monomials(n, k)?;
        let initial = if k as usize <= n { crate::apolar::initial_set(form, n, k as usize)? } else { BTreeSet::new() };
        Ok(Classifier { form, n, k, acceptable, initial })
    }

    pub fn classify(&self, m: &Monomial) -> Result<MonomialClass> {
        if m.degree() != self.k {
            return Err(Error::DegreeOutOfRange { degree: m.degree() as usize, max: self.k as usize });
        }
        Ok(if !self.acceptable.contains(m) {
            MonomialClass::Unacceptable
        } else if self.initial.contains(m) {
            MonomialClass::ConcaInitial
        } else {
            MonomialClass::AcceptableNonInitial
        })
    }

    /// Class sizes `(unacceptable, initial, non-initial)`.
    pub fn counts(&self) -> Result<(usize, usize, usize)> {
        let ring = RingSpec::symmetric(self.n)?;
        let mut c = (0, 0, 0);
        for m in monomials_of_degree(&ring, self.k) {
            match self.classify(&m)? {
                MonomialClass::Unacceptable => c.0 += 1,
                MonomialClass::ConcaInitial => c.1 += 1,
                MonomialClass::AcceptableNonInitial => c.2 += 1,
            }
        }
        Ok(c)
    }
}

pub fn classify_monomial(m: &Monomial, form: DetOrPerm, n: usize) -> Result<MonomialClass> {
    Classifier::new(form, n, m.degree())?.classify(m)
}

/// Pairs `(b_i, b_j)` with `i < j` and `b_i >= b_j` in the column sequence.
pub fn reversal_pairs(cols: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..cols.len() {
        for j in i + 1..cols.len() {
            if cols[i] >= cols[j] {
                out.push((cols[i], cols[j]));
            }
        }
    }
    out
}

/// The pair notation `(a | b)` of a monomial in the symmetric layout: each
/// variable `x[i,j]` with `i <= j` contributes the pair `(i, j)`, sorted.
pub fn pair_notation(m: &Monomial) -> (Vec<usize>, Vec<usize>) {
    let mut pairs = Vec::new();
    for &(v, e) in m.exponents() {
        for _ in 0..e {
            pairs.push((v.row as usize, v.col as usize));
        }
    }
    pairs.sort();
    pairs.into_iter().unzip()
}

pub fn to_u64(b: &BigInt) -> u64 {
    b.to_u64().expect("fits in u64")
}
