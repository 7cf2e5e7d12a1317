//! Catalecticants, Hilbert functions, annihilator slices and generator
//! profiles.
//!
//! Every computation is split along the multigrading that gives `x[i,j]`
//! weight `e_i + e_j` (symmetric layout) or `(e_i, f_j)` (generic layout).
//! Determinants, permanents, hafnians and immanants are homogeneous for this
//! grading, so catalecticants and ideal slices become block diagonal with
//! small blocks. Inputs that are not multihomogeneous fall back to a single
//! block.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;
use crate::linalg::{Echelon, SparseVec};
use crate::pairing::{apply_monomial, apply_monomial_to, contraction_to_diff, Pairing};
use crate::ring::{binomial, monomials_of_degree, Layout, Monomial, Polynomial, Rational, RingSpec, VarId};
use crate::subspace::GradedSubspace;

type Weight = Vec<u16>;

fn weight(ring: &RingSpec, m: &Monomial) -> Weight {
    let n = ring.n;
    match ring.layout {
        Layout::Symmetric => {
            let mut w = vec![0u16; n];
            for &(v, e) in m.exponents() {
                w[v.row as usize - 1] += e as u16;
                w[v.col as usize - 1] += e as u16;
            }
            w
        }
        Layout::Generic => {
            let mut w = vec![0u16; 2 * n];
            for &(v, e) in m.exponents() {
                w[v.row as usize - 1] += e as u16;
                w[n + v.col as usize - 1] += e as u16;
            }
            w
        }
    }
}

fn var_weight(ring: &RingSpec, v: VarId) -> Weight {
    weight(ring, &Monomial::var(v))
}

/// Block key function: the multidegree, or a single block.
#[derive(Clone, Copy)]
struct Grading {
    ring: RingSpec,
    graded: bool,
}

impl Grading {
    fn key(&self, m: &Monomial) -> Weight {
        if self.graded {
            weight(&self.ring, m)
        } else {
            Vec::new()
        }
    }

    /// Key of `m / v` given the key of `m`, if it can be nonnegative.
    fn shift_down(&self, w: &Weight, v: VarId) -> Option<Weight> {
        if !self.graded {
            return Some(Vec::new());
        }
        let dv = var_weight(&self.ring, v);
        w.iter().zip(&dv).map(|(a, b)| a.checked_sub(*b)).collect()
    }

    fn shift_up(&self, w: &Weight, v: VarId) -> Weight {
        if !self.graded {
            return Vec::new();
        }
        let dv = var_weight(&self.ring, v);
        w.iter().zip(&dv).map(|(a, b)| a + b).collect()
    }

    fn for_polys<'a>(ring: RingSpec, polys: impl IntoIterator<Item = &'a Polynomial>) -> Grading {
        let graded = polys.into_iter().all(|p| {
            let mut ws = p.terms().map(|(m, _)| weight(&ring, m));
            match ws.next() {
                None => true,
                Some(w0) => ws.all(|w| w == w0),
            }
        });
        Grading { ring, graded }
    }
}

/// One block of a row space: columns are `monos` (largest first under the
/// block's order), rows are in reduced echelon form.
#[derive(Debug, Clone)]
struct Block {
    monos: Vec<Monomial>,
    rows: Vec<SparseVec>,
}

fn echelon_block(mut monos: Vec<Monomial>, rows: Vec<Vec<(Monomial, Rational)>>, order: MonomialOrder, cap: Option<usize>) -> Block {
    order.sort_desc(&mut monos);
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut ech = Echelon::new();
    for r in rows {
        if cap.is_some_and(|c| ech.rank() >= c) {
            break;
        }
        let mut v: SparseVec = r.into_iter().map(|(m, c)| (index[&m], c)).collect();
        v.sort_by_key(|e| e.0);
        ech.insert(v);
    }
    let rows = ech.into_rref();
    drop(index);
    Block { monos, rows }
}

/// Group rows by block key and echelonize each block. `caps` bounds the
/// rank of a block (used to stop early once a block is full).
fn echelon_blocks(
    grading: Grading,
    rows: Vec<Vec<(Monomial, Rational)>>,
    order: MonomialOrder,
    caps: Option<&BTreeMap<Weight, usize>>,
) -> BTreeMap<Weight, Block> {
    let mut grouped: BTreeMap<Weight, (BTreeSet<Monomial>, Vec<Vec<(Monomial, Rational)>>)> = BTreeMap::new();
    for r in rows {
        let Some((m0, _)) = r.first() else { continue };
        let key = grading.key(m0);
        let slot = grouped.entry(key).or_default();
        for (m, _) in &r {
            if !slot.0.contains(m) {
                slot.0.insert(m.clone());
            }
        }
        slot.1.push(r);
    }
    let work: Vec<(Weight, (BTreeSet<Monomial>, Vec<Vec<(Monomial, Rational)>>))> = grouped.into_iter().collect();
    work.into_par_iter()
        .map(|(k, (monos, rows))| {
            let cap = caps.and_then(|c| c.get(&k).copied());
            let b = echelon_block(monos.into_iter().collect(), rows, order, cap);
            (k, b)
        })
        .collect()
}

fn poly_row(p: &Polynomial) -> Vec<(Monomial, Rational)> {
    p.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

fn block_polys(ring: RingSpec, blocks: &BTreeMap<Weight, Block>) -> Vec<Polynomial> {
    blocks
        .values()
        .flat_map(|b| {
            b.rows.iter().map(move |r| Polynomial::from_terms(ring, r.iter().map(|(c, x)| (b.monos[*c].clone(), x.clone()))))
        })
        .collect()
}

/// Monomials of degree `k` grouped by block key.
fn monomial_blocks(grading: Grading, k: u32) -> BTreeMap<Weight, Vec<Monomial>> {
    let mut out: BTreeMap<Weight, Vec<Monomial>> = BTreeMap::new();
    for m in monomials_of_degree(&grading.ring, k) {
        out.entry(grading.key(&m)).or_default().push(m);
    }
    out
}

/// `dim S_k` for a ring with `nvars` variables.
pub fn dim_of_degree(ring: &RingSpec, k: u32) -> usize {
    binomial((ring.nvars() + k as usize - 1) as u64, k as u64).to_usize().expect("dimension fits in usize")
}

fn pairing_weight(pairing: Pairing, m: &Monomial) -> Rational {
    match pairing {
        Pairing::Diff => Rational::from_integer(m.factorial()),
        Pairing::Contract => Rational::one(),
    }
}

fn check_form(f: &Polynomial) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    f.homogeneous_degree().ok_or(Error::Inhomogeneous)
}

/// The form together with its pairing, and cached derivative spaces.
struct InverseSystem<'a> {
    f: &'a Polynomial,
    pairing: Pairing,
    d: u32,
    grading: Grading,
}

impl<'a> InverseSystem<'a> {
    fn new(f: &'a Polynomial, pairing: Pairing) -> Result<Self> {
        let d = check_form(f)?;
        if pairing == Pairing::Diff && f.ring().flavor != crate::ring::Flavor::Usual {
            return Err(Error::WrongFlavor { expected: "usual", got: f.ring() });
        }
        let grading = Grading::for_polys(f.ring(), [f]);
        Ok(InverseSystem { f, pairing, d, grading })
    }

    /// Rows `m . F` for every degree-`k` monomial `m` that divides a term of
    /// `F` (all other rows vanish). Keys are the row monomials.
    fn catalecticant_rows(&self, k: u32) -> BTreeMap<Monomial, Polynomial> {
        let mut rows: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        let ring = self.f.ring();
        for (u, c) in self.f.terms() {
            for m in u.divisors_of_degree(k) {
                let (q, k) = apply_monomial(self.pairing, &m, u).expect("divisor");
                rows.entry(m).or_insert_with(|| Polynomial::zero(ring)).add_term(q, k * c);
            }
        }
        rows.retain(|_, p| !p.is_zero());
        rows
    }

    /// The span of `S_k . F` inside `R_{d-k}`, blocked.
    fn derivative_blocks(&self, k: u32, order: MonomialOrder) -> BTreeMap<Weight, Block> {
        if k > self.d {
            return BTreeMap::new();
        }
        let rows: Vec<_> = self.catalecticant_rows(k).values().map(poly_row).collect();
        echelon_blocks(self.grading, rows, order, None)
    }

    fn hilbert_value(&self, k: u32) -> usize {
        self.derivative_blocks(k, MonomialOrder::ConcaLex).values().map(|b| b.rows.len()).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSequence {
    pub values: Vec<usize>,
    pub length: usize,
}

impl HilbertSequence {
    pub fn new(values: Vec<usize>) -> Self {
        let length = values.iter().sum();
        HilbertSequence { values, length }
    }

    pub fn max(&self) -> usize {
        self.values.iter().copied().max().unwrap_or(0)
    }

    pub fn is_palindromic(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }
}

pub fn hilbert_sequence(f: &Polynomial, pairing: Pairing) -> Result<HilbertSequence> {
    let sys = InverseSystem::new(f, pairing)?;
    let values: Vec<usize> = (0..=sys.d).into_par_iter().map(|k| sys.hilbert_value(k)).collect();
    Ok(HilbertSequence::new(values))
}

/// `H_k`, the rank of the degree-`k` catalecticant.
pub fn hilbert_value(f: &Polynomial, k: u32, pairing: Pairing) -> Result<usize> {
    let sys = InverseSystem::new(f, pairing)?;
    Ok(sys.hilbert_value(k))
}

/// The catalecticant `S_k -> R_{d-k}`, `h -> h . F`, over full monomial
/// bases (largest first).
#[derive(Debug, Clone)]
pub struct CatalecticantMatrix {
    pub rows: Vec<Monomial>,
    pub cols: Vec<Monomial>,
    /// Sparse rows over `cols`.
    pub entries: Vec<SparseVec>,
    pub pairing: Pairing,
}

impl CatalecticantMatrix {
    pub fn entry(&self, r: usize, c: usize) -> Rational {
        self.entries[r].iter().find(|e| e.0 == c).map(|e| e.1.clone()).unwrap_or_else(Rational::zero)
    }

    /// Exact rank by elimination over all rows.
    pub fn rank(&self) -> usize {
        crate::linalg::rank_of(self.entries.iter().cloned())
    }
}

pub fn catalecticant(f: &Polynomial, k: u32, pairing: Pairing) -> Result<CatalecticantMatrix> {
    let d = check_form(f)?;
    if k > d {
        return Err(Error::DegreeOutOfRange { degree: k as usize, max: d as usize });
    }
    let ring = f.ring();
    let rows = monomials_of_degree(&ring, k);
    let cols = monomials_of_degree(&ring, d - k);
    let index: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let entries = rows
        .iter()
        .map(|m| {
            let img = apply_monomial_to(pairing, m, f);
            let mut v: SparseVec = img.terms().map(|(q, c)| (index[q], c.clone())).collect();
            v.sort_by_key(|e| e.0);
            v
        })
        .collect();
    Ok(CatalecticantMatrix { rows, cols, entries, pairing })
}

/// The span of `S_k . F` in `R_{d-k}`.
pub fn derivative_space(f: &Polynomial, k: u32, pairing: Pairing, order: MonomialOrder) -> Result<GradedSubspace> {
    let sys = InverseSystem::new(f, pairing)?;
    let ring = f.ring();
    let deg = sys.d.saturating_sub(k);
    let blocks = sys.derivative_blocks(k, order);
    Ok(GradedSubspace::from_basis_unchecked(ring, deg, order, block_polys(ring, &blocks)))
}

/// `Ann(F)_k` in reduced echelon form under `order`.
pub fn ann_slice(f: &Polynomial, k: u32, pairing: Pairing, order: MonomialOrder) -> Result<GradedSubspace> {
    let sys = InverseSystem::new(f, pairing)?;
    let ring = f.ring().with_flavor(crate::ring::Flavor::Usual);
    let universe = monomial_blocks(sys.grading, k);
    if k > sys.d {
        let all: Vec<Monomial> = universe.into_values().flatten().collect();
        return Ok(GradedSubspace::of_monomials(ring, k, order, &all));
    }
    // D = S_{d-k} . F inside R_k, reduced under the opposite order: its
    // orthogonal complement then comes out reduced under `order`.
    let dual = sys.derivative_blocks(sys.d - k, order.reversed());
    let mut basis = Vec::new();
    for (key, monos) in universe {
        let empty = Block { monos: Vec::new(), rows: Vec::new() };
        let block = dual.get(&key).unwrap_or(&empty);
        let pivots: HashMap<&Monomial, usize> = block.rows.iter().enumerate().map(|(i, r)| (&block.monos[r[0].0], i)).collect();
        // entries of D rows at each non-pivot monomial
        let mut by_col: HashMap<&Monomial, Vec<(usize, &Rational)>> = HashMap::new();
        for (i, r) in block.rows.iter().enumerate() {
            for (c, x) in r.iter().skip(1) {
                by_col.entry(&block.monos[*c]).or_default().push((i, x));
            }
        }
        for m in &monos {
            if pivots.contains_key(m) {
                continue;
            }
            let mut h = Polynomial::monomial(ring, m.clone(), Rational::one());
            if let Some(hits) = by_col.get(m) {
                let wj = pairing_weight(sys.pairing, m);
                for &(i, x) in hits {
                    let p = &block.monos[block.rows[i][0].0];
                    let coeff = -(&wj * x) / pairing_weight(sys.pairing, p);
                    h.add_term(p.clone(), coeff);
                }
            }
            basis.push(h);
        }
    }
    Ok(GradedSubspace::from_basis_unchecked(ring, k, order, basis))
}

/// `dim Ann(F)_k = dim S_k - H_k`.
pub fn ann_dim(f: &Polynomial, k: u32, pairing: Pairing) -> Result<usize> {
    let sys = InverseSystem::new(f, pairing)?;
    let total = dim_of_degree(&f.ring(), k);
    Ok(total - if k > sys.d { 0 } else { sys.hilbert_value(k) })
}

fn ideal_rows(gens: &[Polynomial], k: u32) -> Result<Vec<Vec<(Monomial, Rational)>>> {
    let mut rows = Vec::new();
    let mut cache: HashMap<u32, Vec<Monomial>> = HashMap::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let dg = g.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
        if dg > k {
            continue;
        }
        let ring = g.ring();
        let monos = cache.entry(k - dg).or_insert_with(|| monomials_of_degree(&ring, k - dg));
        for m in monos.iter() {
            rows.push(g.terms().map(|(u, c)| (u.mul(m), c.clone())).collect());
        }
    }
    Ok(rows)
}

fn ideal_blocks(gens: &[Polynomial], k: u32, order: MonomialOrder) -> Result<(RingSpec, BTreeMap<Weight, Block>)> {
    let ring = gens.first().map(|g| g.ring()).ok_or(Error::Unsupported("empty generator list".into()))?;
    for g in gens {
        ring.check_same(&g.ring())?;
    }
    let grading = Grading::for_polys(ring, gens);
    let caps: BTreeMap<Weight, usize> = monomial_blocks(grading, k).into_iter().map(|(w, v)| (w, v.len())).collect();
    let rows = ideal_rows(gens, k)?;
    Ok((ring, echelon_blocks(grading, rows, order, Some(&caps))))
}

/// The degree-`k` part of the ideal generated by `gens`.
pub fn ideal_slice(ring: RingSpec, gens: &[Polynomial], k: u32, order: MonomialOrder) -> Result<GradedSubspace> {
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(GradedSubspace::zero(ring, k, order));
    }
    let (r, blocks) = ideal_blocks(gens, k, order)?;
    ring.check_same(&r)?;
    Ok(GradedSubspace::from_basis_unchecked(ring, k, order, block_polys(ring, &blocks)))
}

pub fn ideal_slice_dim(gens: &[Polynomial], k: u32) -> Result<usize> {
    if gens.iter().all(|g| g.is_zero()) {
        return Ok(0);
    }
    let (_, blocks) = ideal_blocks(gens, k, MonomialOrder::ConcaLex)?;
    Ok(blocks.values().map(|b| b.rows.len()).sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProfileMethod {
    /// `dim Ann_k - dim(S_1 Ann_{k-1})` with explicit annihilator bases.
    Direct,
    /// The same count through the inverse system: a form `G` of degree `k`
    /// with every partial derivative in `S_{d-k+1} . F` is orthogonal to
    /// `S_1 Ann_{k-1}`, and conversely.
    Dual,
}

/// Number of minimal generators of `Ann(F)` in each degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorProfile {
    /// Degrees `1..=d` with a nonzero count.
    pub counts: BTreeMap<u32, usize>,
    /// Generators in degree `d + 1`, reported separately.
    pub socle: usize,
    /// Highest degree `<= d` carrying a generator.
    pub max_degree: Option<u32>,
}

/// Generators in degrees `1..=up_to`. When `up_to > d` the degree `d + 1`
/// count goes to `socle`.
pub fn minimal_generator_profile(f: &Polynomial, pairing: Pairing, up_to: u32, method: ProfileMethod) -> Result<GeneratorProfile> {
    let d = check_form(f)?;
    let mut counts = BTreeMap::new();
    let mut socle = 0;
    for k in 1..=up_to.min(d + 1) {
        let c = match method {
            ProfileMethod::Direct => generator_count_direct(f, pairing, k)?,
            ProfileMethod::Dual => generator_count_dual(f, pairing, k)?,
        };
        if k == d + 1 {
            socle = c;
        } else if c > 0 {
            counts.insert(k, c);
        }
    }
    let max_degree = counts.keys().next_back().copied();
    Ok(GeneratorProfile { counts, socle, max_degree })
}

pub fn generator_count_direct(f: &Polynomial, pairing: Pairing, k: u32) -> Result<usize> {
    let a = ann_dim(f, k, pairing)?;
    if k == 0 {
        return Ok(a);
    }
    let prev = ann_slice(f, k - 1, pairing, MonomialOrder::ConcaLex)?;
    let vars: Vec<Polynomial> = f
        .ring()
        .variables()
        .into_iter()
        .map(|v| Polynomial::monomial(prev.ring(), Monomial::var(v), Rational::one()))
        .collect();
    let products: Vec<Polynomial> = prev.basis().iter().flat_map(|b| vars.iter().map(move |x| b * x)).collect();
    let j = if products.is_empty() { 0 } else { ideal_slice_dim(&products, k)? };
    Ok(a - j)
}

pub fn generator_count_dual(f: &Polynomial, pairing: Pairing, k: u32) -> Result<usize> {
    let g = match pairing {
        Pairing::Diff => f.clone(),
        Pairing::Contract => contraction_to_diff(f),
    };
    let sys = InverseSystem::new(&g, Pairing::Diff)?;
    let d = sys.d;
    if k == 0 || k > d + 1 {
        return Ok(0);
    }
    let ring = g.ring();
    let vars = ring.variables();
    // D_{k-1} and D_k inside R, blocked
    let lower = sys.derivative_blocks(d + 1 - k, MonomialOrder::ConcaLex);
    let upper: BTreeMap<Weight, usize> = if k <= d {
        sys.derivative_blocks(d - k, MonomialOrder::ConcaLex).into_iter().map(|(w, b)| (w, b.rows.len())).collect()
    } else {
        BTreeMap::new()
    };
    let lower_polys: BTreeMap<Weight, Vec<Polynomial>> = lower
        .iter()
        .filter(|(_, b)| !b.rows.is_empty())
        .map(|(w, b)| {
            let polys = b
                .rows
                .iter()
                .map(|r| Polynomial::from_terms(ring, r.iter().map(|(c, x)| (b.monos[*c].clone(), x.clone()))))
                .collect();
            (w.clone(), polys)
        })
        .collect();
    let mut targets: BTreeSet<Weight> = BTreeSet::new();
    for w in lower_polys.keys() {
        for &v in &vars {
            targets.insert(sys.grading.shift_up(w, v));
        }
    }
    let targets: Vec<Weight> = targets.into_iter().collect();
    let counts: Vec<usize> = targets
        .par_iter()
        .map(|w| {
            // unknowns c[i][j]: the i-th partial derivative is
            // sum_j c[i][j] * basis_j of the block below
            let mut offsets = Vec::with_capacity(vars.len());
            let mut bases: Vec<&[Polynomial]> = Vec::with_capacity(vars.len());
            let mut total = 0usize;
            for &v in &vars {
                offsets.push(total);
                let b: &[Polynomial] = sys
                    .grading
                    .shift_down(w, v)
                    .and_then(|lw| lower_polys.get(&lw))
                    .map(|x| x.as_slice())
                    .unwrap_or(&[]);
                total += b.len();
                bases.push(b);
            }
            if total == 0 {
                return 0;
            }
            let mut eqs: HashMap<(usize, usize, Monomial), Vec<(usize, Rational)>> = HashMap::new();
            for (i, bi) in bases.iter().enumerate() {
                for (j, b) in bi.iter().enumerate() {
                    let unknown = offsets[i] + j;
                    for (l, &vl) in vars.iter().enumerate() {
                        if l == i {
                            continue;
                        }
                        let dl = apply_monomial_to(Pairing::Diff, &Monomial::var(vl), b);
                        let (a, c, sign) = if i < l { (i, l, 1) } else { (l, i, -1) };
                        for (q, x) in dl.terms() {
                            let val = if sign > 0 { x.clone() } else { -x.clone() };
                            eqs.entry((a, c, q.clone())).or_default().push((unknown, val));
                        }
                    }
                }
            }
            let mut ech = Echelon::new();
            for (_, row) in eqs {
                ech.insert(crate::linalg::sparse_from_unsorted(row));
                if ech.rank() == total {
                    break;
                }
            }
            let nullity = total - ech.rank();
            let h = upper.get(w).copied().unwrap_or(0);
            nullity - h
        })
        .collect();
    Ok(counts.into_iter().sum())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerificationFailure {
    NonAnnihilating { index: usize, residual: String },
    DimensionGap { degree: u32, ideal_dim: usize, ann_dim: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub passed: bool,
    pub degrees_checked: Vec<u32>,
    pub failures: Vec<VerificationFailure>,
}

/// Check that `gens` annihilate `F` and generate `Ann(F)` in every degree
/// `2..=min(d, max_degree)`.
pub fn verify_generator_set(f: &Polynomial, gens: &[Polynomial], pairing: Pairing, max_degree: Option<u32>) -> Result<VerificationReport> {
    let d = check_form(f)?;
    let mut failures = Vec::new();
    for (index, g) in gens.iter().enumerate() {
        let r = crate::pairing::apply(pairing, g, f)?;
        if !r.is_zero() {
            failures.push(VerificationFailure::NonAnnihilating { index, residual: r.to_string() });
        }
    }
    let top = max_degree.map_or(d, |m| m.min(d));
    let mut degrees_checked = Vec::new();
    for k in 2..=top {
        let ideal_dim = if gens.is_empty() { 0 } else { ideal_slice_dim(gens, k)? };
        let ann = ann_dim(f, k, pairing)?;
        degrees_checked.push(k);
        if ideal_dim != ann {
            failures.push(VerificationFailure::DimensionGap { degree: k, ideal_dim, ann_dim: ann });
        }
    }
    Ok(VerificationReport { passed: failures.is_empty(), degrees_checked, failures })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DetOrPerm {
    Det,
    Perm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TriangularityReport {
    pub form: DetOrPerm,
    pub n: usize,
    pub k: u32,
    pub slice_dim: usize,
    pub unacceptable: usize,
    pub initial: usize,
    pub non_initial: usize,
    /// Unacceptable monomials outside the slice.
    pub unacceptable_missing: Vec<String>,
    /// Monomials of `C'_k` or `U_k` that are not leading monomials.
    pub uncovered: Vec<String>,
    /// Degree-`k` monomials that are not leading monomials of the slice.
    pub complement: Vec<String>,
    pub passed: bool,
}

/// Leading monomials of the echelon form of the span of the `k x k`
/// sub-permanents (`perm`) or the doset flag monomials (`det`).
pub fn initial_set(form: DetOrPerm, n: usize, k: usize) -> Result<BTreeSet<Monomial>> {
    let ring = RingSpec::symmetric(n)?;
    match form {
        DetOrPerm::Det => Ok(crate::combinatorics::enumerate_doset_minors(n, k)
            .iter()
            .map(|dm| dm.flag_monomial(&ring))
            .collect::<Result<_>>()?),
        DetOrPerm::Perm => {
            let space = crate::invariants::monomial_space(crate::invariants::SpaceKind::Permanents, &ring, k)?;
            Ok(space.leading_monomials().into_iter().collect())
        }
    }
}

/// Check that the degree-`k` slice of the ideal generated by `V` (det) or
/// `W` plus the cubics (perm) has reverse-order leading monomials covering
/// every unacceptable and every acceptable non-initial monomial.
pub fn check_triangularity(form: DetOrPerm, n: usize, k: u32) -> Result<TriangularityReport> {
    use crate::invariants::{build_generator_set, GeneratorKind};
    let ring = RingSpec::symmetric(n)?;
    let kind = match form {
        DetOrPerm::Det => GeneratorKind::V,
        DetOrPerm::Perm => GeneratorKind::WPlus,
    };
    let gens = build_generator_set(kind, n)?;
    let order = MonomialOrder::ReverseConcaLex;
    let slice = ideal_slice(ring, &gens.members, k, order)?;
    let leads: BTreeSet<Monomial> = slice.leading_monomials().into_iter().collect();
    let acceptable = crate::invariants::acceptable_monomials(n, k)?;
    let initial = initial_set(form, n, k as usize)?;
    let all = monomials_of_degree(&ring, k);
    let mut unacceptable_missing = Vec::new();
    let mut uncovered = Vec::new();
    let mut complement = Vec::new();
    let mut n_unacc = 0;
    let mut n_noninit = 0;
    for m in &all {
        let is_acc = acceptable.contains(m);
        let is_init = is_acc && initial.contains(m);
        if !is_acc {
            n_unacc += 1;
            if !slice.contains(&Polynomial::monomial(ring, m.clone(), Rational::one())) {
                unacceptable_missing.push(m.format('y'));
            }
        } else if !is_init {
            n_noninit += 1;
        }
        let lead = leads.contains(m);
        if !lead {
            complement.push(m.format('y'));
            if !is_init {
                uncovered.push(m.format('y'));
            }
        }
    }
    let passed = unacceptable_missing.is_empty() && uncovered.is_empty() && complement.len() == initial.len();
    Ok(TriangularityReport {
        form,
        n,
        k,
        slice_dim: slice.dim(),
        unacceptable: n_unacc,
        initial: initial.len(),
        non_initial: n_noninit,
        unacceptable_missing,
        uncovered,
        complement,
        passed,
    })
}

/// Monomials of degree `k` lying in `Ann(F)_k` but not in `S_1 Ann(F)_{k-1}`.
pub fn minimal_monomial_generators(f: &Polynomial, pairing: Pairing, k: u32) -> Result<Vec<Monomial>> {
    let ring = f.ring().with_flavor(crate::ring::Flavor::Usual);
    let ann = ann_slice(f, k, pairing, MonomialOrder::ConcaLex)?;
    let lower = if k >= 1 {
        let prev = ann_slice(f, k - 1, pairing, MonomialOrder::ConcaLex)?;
        let vars: Vec<Polynomial> =
            ring.variables().into_iter().map(|v| Polynomial::monomial(ring, Monomial::var(v), Rational::one())).collect();
        let products: Vec<Polynomial> = prev.basis().iter().flat_map(|b| vars.iter().map(move |x| b * x)).collect();
        ideal_slice(ring, &products, k, MonomialOrder::ConcaLex)?
    } else {
        GradedSubspace::zero(ring, k, MonomialOrder::ConcaLex)
    };
    let mut out = Vec::new();
    for m in monomials_of_degree(&ring, k) {
        let p = Polynomial::monomial(ring, m.clone(), Rational::one());
        if ann.contains(&p) && !lower.contains(&p) {
            out.push(m);
        }
    }
    Ok(out)
}

/// Length of the apolar algebra, `sum_k H_k`.
pub fn length(f: &Polynomial, pairing: Pairing) -> Result<usize> {
    Ok(hilbert_sequence(f, pairing)?.length)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{det_poly, perm_poly};
    use crate::parse::{parse_letters, parse_poly};

    fn sym(n: usize) -> RingSpec {
        RingSpec::symmetric(n).unwrap()
    }

    #[test]
    fn small_hilbert() {
        let f = det_poly(&sym(2)).unwrap();
        assert_eq!(hilbert_sequence(&f, Pairing::Diff).unwrap().values, vec![1, 3, 1]);
        let f = det_poly(&sym(3)).unwrap();
        assert_eq!(hilbert_sequence(&f, Pairing::Diff).unwrap().values, vec![1, 6, 6, 1]);
        let f = perm_poly(&sym(4)).unwrap();
        assert_eq!(hilbert_sequence(&f, Pairing::Diff).unwrap().values, vec![1, 10, 21, 10, 1]);
    }

    #[test]
    fn power_of_variable() {
        let f = parse_poly("x[1,1]^4", sym(2)).unwrap();
        assert_eq!(hilbert_sequence(&f, Pairing::Diff).unwrap().values, vec![1; 5]);
        assert_eq!(hilbert_sequence(&f, Pairing::Contract).unwrap().values, vec![1; 5]);
    }

    #[test]
    fn catalecticant_rank_matches_blocks() {
        let f = det_poly(&sym(3)).unwrap();
        for k in 0..=3 {
            let c = catalecticant(&f, k, Pairing::Diff).unwrap();
            assert_eq!(c.rank(), hilbert_value(&f, k, Pairing::Diff).unwrap());
        }
        let c = catalecticant(&f, 0, Pairing::Diff).unwrap();
        assert_eq!(c.rows.len(), 1);
    }

    #[test]
    fn perm2_annihilator() {
        let r = sym(2);
        let f = perm_poly(&r).unwrap();
        let a = ann_slice(&f, 2, Pairing::Diff, MonomialOrder::ConcaLex).unwrap();
        assert_eq!(a.dim(), 5);
        for s in ["C^2", "BC", "B^2 - 2AC", "AB", "A^2"] {
            assert!(a.contains(&parse_letters(s, r).unwrap()), "{}", s);
        }
        assert_eq!(ann_slice(&f, 0, Pairing::Diff, MonomialOrder::ConcaLex).unwrap().dim(), 0);
    }

    #[test]
    fn ann_basis_is_reduced_in_both_orders() {
        let f = det_poly(&sym(3)).unwrap();
        for ord in [MonomialOrder::ConcaLex, MonomialOrder::ReverseConcaLex] {
            let a = ann_slice(&f, 2, Pairing::Diff, ord).unwrap();
            assert_eq!(a.dim(), 21 - 6);
            let leads = a.leading_monomials();
            for (b, l) in a.basis().iter().zip(&leads) {
                assert_eq!(ord.leading(b).unwrap().1, &Rational::one());
                for (other, l2) in a.basis().iter().zip(&leads) {
                    if l2 != l {
                        assert!(other.coefficient(l).is_zero());
                    }
                }
                assert!(crate::pairing::diff_apply(b, &f).unwrap().is_zero());
            }
            assert!(leads.windows(2).all(|w| ord.cmp(&w[0], &w[1]).is_gt()));
        }
    }

    #[test]
    fn profile_methods_agree() {
        for f in [det_poly(&sym(3)).unwrap(), perm_poly(&sym(3)).unwrap(), parse_poly("x[1,1]^2*x[2,2] + x[1,2]^3", sym(2)).unwrap()] {
            for p in [Pairing::Diff, Pairing::Contract] {
                let a = minimal_generator_profile(&f, p, 5, ProfileMethod::Direct).unwrap();
                let b = minimal_generator_profile(&f, p, 5, ProfileMethod::Dual).unwrap();
                assert_eq!(a, b, "{} {}", f, p);
            }
        }
    }

    #[test]
    fn empty_generators_fail() {
        let f = det_poly(&sym(3)).unwrap();
        let rep = verify_generator_set(&f, &[], Pairing::Diff, None).unwrap();
        assert!(!rep.passed);
        assert_eq!(rep.failures.len(), 2);
        assert_eq!(ideal_slice(sym(3), &[], 2, MonomialOrder::ConcaLex).unwrap().dim(), 0);
    }

    #[test]
    fn rejects_bad_forms() {
        let r = sym(2);
        assert!(hilbert_sequence(&Polynomial::zero(r), Pairing::Diff).is_err());
        let f = parse_poly("x[1,1] + x[1,2]^2", r).unwrap();
        assert!(hilbert_sequence(&f, Pairing::Diff).is_err());
        assert!(catalecticant(&f, 1, Pairing::Diff).is_err());
    }
}
