//! The symmetric group: partitions, conjugacy classes, irreducible
//! characters by the Murnaghan-Nakayama rule, and the permutation action on
//! matrix variables.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{det_poly, perm_poly};
use crate::linalg::{sparse_from_unsorted, Echelon};
use crate::pairing::diff_apply;
use crate::ring::{factorial, Monomial, Polynomial, Rational, RingSpec};
use crate::subspace::GradedSubspace;

/// A partition with weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn all_parts_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Parse `"3,1"`, `"[3,1]"` or `"3 1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
        let mut parts = Vec::new();
        for tok in inner.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let v: u32 = tok.parse().map_err(|_| Error::BadPartition(s.to_string(), 0))?;
            if v == 0 {
                return Err(Error::BadPartition(s.to_string(), 0));
            }
            parts.push(v);
        }
        if parts.is_empty() {
            return Err(Error::BadPartition(s.to_string(), 0));
        }
        Ok(Partition::new(parts))
    }

    /// Dimension of the irreducible representation, by the hook length
    /// formula.
    pub fn dimension(&self) -> BigInt {
        let n = self.size() as u32;
        let mut hooks = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row as usize - j - 1;
                let leg = self.0[i + 1..].iter().filter(|&&r| r as usize > j).count();
                hooks *= arm + leg + 1;
            }
        }
        factorial(n) / hooks
    }

    /// Cycle-type notation such as `(1^2 2)`.
    pub fn cycle_notation(&self) -> String {
        let mut counts: Vec<(u32, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match counts.last_mut() {
                Some((q, c)) if *q == p => *c += 1,
                _ => counts.push((p, 1)),
            }
        }
        let parts: Vec<String> =
            counts.iter().map(|&(p, c)| if c == 1 { p.to_string() } else { format!("{}^{}", p, c) }).collect();
        format!("({})", parts.join(" "))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order: `[n]` first,
/// `[1^n]` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, n as u32, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ConjugacyClass {
    pub cycle_type: Partition,
    pub size: u64,
}

impl ConjugacyClass {
    pub fn new(cycle_type: Partition) -> Self {
        let n = cycle_type.size() as u32;
        let mut denom = BigInt::one();
        let mut counts: HashMap<u32, u32> = HashMap::new();
        for &p in cycle_type.parts() {
            *counts.entry(p).or_insert(0) += 1;
        }
        for (&j, &m) in &counts {
            denom *= BigInt::from(j).pow(m) * factorial(m);
        }
        let size = (factorial(n) / denom).to_u64().expect("class size fits in u64");
        ConjugacyClass { cycle_type, size }
    }

    pub fn label(&self) -> String {
        self.cycle_type.cycle_notation()
    }
}

/// Conjugacy classes of `S_n`, ordered lexicographically by the cycle
/// lengths listed in increasing order: `(1^n)` first, `(n)` last.
pub fn classes(n: usize) -> Vec<ConjugacyClass> {
    let mut types = partitions(n);
    types.sort_by(|a, b| {
        let x: Vec<u32> = a.parts().iter().rev().copied().collect();
        let y: Vec<u32> = b.parts().iter().rev().copied().collect();
        x.cmp(&y)
    });
    types.into_iter().map(ConjugacyClass::new).collect()
}

/// A permutation of `{1..n}`, stored 0-based: `images[i] = sigma(i+1) - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let distinct: BTreeSet<usize> = images.iter().copied().collect();
        if distinct.len() != n || images.iter().any(|&i| i >= n) {
            return Err(Error::Unsupported("not a permutation".into()));
        }
        Ok(Permutation { images })
    }

    /// Build from 1-based cycles, e.g. `&[&[1, 4]]` for the transposition
    /// `(14)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = BTreeSet::new();
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a == 0 || a > n || !seen.insert(a) {
                    return Err(Error::Unsupported(format!("bad cycle entry {}", a)));
                }
                let b = cyc[(k + 1) % cyc.len()];
                images[a - 1] = b - 1;
            }
        }
        Ok(Permutation { images })
    }

    /// Canonical class representative: cycles of decreasing length on
    /// consecutive integers starting from 1.
    pub fn representative(cycle_type: &Partition) -> Self {
        let n = cycle_type.size();
        let mut images = vec![0; n];
        let mut start = 0;
        for &len in cycle_type.parts() {
            let len = len as usize;
            for k in 0..len {
                images[start + k] = start + (k + 1) % len;
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn random<R: Rng>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// `sigma(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation { images: other.images.iter().map(|&j| self.images[j]).collect() }
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut parts = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        let even_cycles = ct.parts().iter().filter(|&&p| p % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Heap's algorithm over all permutations of `0..n`.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation { images: a.clone() }];
    let mut c = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(Permutation { images: a.clone() });
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn mn_rule(lambda: &[u32], mu: &[u32], memo: &mut HashMap<(Vec<u32>, Vec<u32>), i64>) -> i64 {
    if mu.is_empty() {
        return if lambda.is_empty() { 1 } else { 0 };
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = mu[0];
    let l = lambda.len() as u32;
    let beta: Vec<u32> = lambda.iter().enumerate().map(|(i, &p)| p + (l - 1 - i as u32)).collect();
    let set: BTreeSet<u32> = beta.iter().copied().collect();
    let mut total = 0i64;
    for &b in &beta {
        if b < r || set.contains(&(b - r)) {
            continue;
        }
        // removing a border strip of length r; its height is the number of
        // beads jumped over
        let jumped = set.range(b - r + 1..b).count();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        let mut nb: Vec<u32> = set.iter().copied().filter(|&x| x != b).collect();
        nb.push(b - r);
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let newlam: Vec<u32> =
            nb.iter().enumerate().map(|(i, &x)| x - (l - 1 - i as u32)).filter(|&p| p > 0).collect();
        total += sign * mn_rule(&newlam, &mu[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `chi_lambda` on the class of cycle type `mu`.
pub fn irreducible_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::BadPartition(mu.to_string(), lambda.size()));
    }
    let mut memo = HashMap::new();
    Ok(mn_rule(lambda.parts(), mu.parts(), &mut memo))
}

/// Character table: rows follow [`partitions`], columns follow [`classes`].
#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub n: usize,
    pub partitions: Vec<Partition>,
    pub classes: Vec<ConjugacyClass>,
    pub values: Vec<Vec<i64>>,
}

pub fn character_table(n: usize) -> CharacterTable {
    let parts = partitions(n);
    let cls = classes(n);
    let mut memo = HashMap::new();
    let values = parts
        .iter()
        .map(|l| cls.iter().map(|c| mn_rule(l.parts(), c.cycle_type.parts(), &mut memo)).collect())
        .collect();
    CharacterTable { n, partitions: parts, classes: cls, values }
}

impl CharacterTable {
    pub fn character(&self, lambda: &Partition) -> Option<CharacterVector> {
        let i = self.partitions.iter().position(|p| p == lambda)?;
        Some(CharacterVector { n: self.n, classes: self.classes.clone(), values: self.values[i].clone() })
    }
}

/// A class function with values listed in [`classes`] order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterVector {
    pub n: usize,
    pub classes: Vec<ConjugacyClass>,
    pub values: Vec<i64>,
}

impl CharacterVector {
    /// `(1/n!) sum size * chi(c) * psi(c)`.
    pub fn inner_product(&self, other: &CharacterVector) -> Rational {
        let mut s = BigInt::zero();
        for ((c, a), b) in self.classes.iter().zip(&self.values).zip(&other.values) {
            s += BigInt::from(c.size) * a * b;
        }
        Rational::new(s, factorial(self.n as u32))
    }

    pub fn norm2(&self) -> Rational {
        self.inner_product(self)
    }

    pub fn value_at(&self, cycle_type: &Partition) -> Option<i64> {
        self.classes.iter().position(|c| &c.cycle_type == cycle_type).map(|i| self.values[i])
    }
}

/// Multiplicities of the irreducibles in `chi`, in [`partitions`] order,
/// omitting zeros.
pub fn decompose(chi: &CharacterVector) -> Result<Vec<(Partition, u64)>> {
    let table = character_table(chi.n);
    let mut out = Vec::new();
    for (lambda, row) in table.partitions.iter().zip(&table.values) {
        let irr = CharacterVector { n: chi.n, classes: table.classes.clone(), values: row.clone() };
        let m = chi.inner_product(&irr);
        if !m.is_integer() || m.is_negative() {
            return Err(Error::Unsupported(format!("not a character: multiplicity {} for {}", m, lambda)));
        }
        let m = m.to_integer().to_u64().expect("small multiplicity");
        if m > 0 {
            out.push((lambda.clone(), m));
        }
    }
    Ok(out)
}

/// `sigma . x[i,j] = x[sigma^-1(i), sigma^-1(j)]`, extended to a ring
/// automorphism.
pub fn act_on_polynomial(sigma: &Permutation, p: &Polynomial) -> Result<Polynomial> {
    let ring = p.ring();
    if sigma.n() != ring.n {
        return Err(Error::InvalidSize(sigma.n()));
    }
    let inv = sigma.inverse();
    let mut out = Polynomial::zero(ring);
    for (m, c) in p.terms() {
        out.add_term(act_on_monomial_with(&inv, &ring, m), c.clone());
    }
    Ok(out)
}

fn act_on_monomial_with(inv: &Permutation, ring: &RingSpec, m: &Monomial) -> Monomial {
    Monomial::from_exponents(m.exponents().iter().map(|&(v, e)| {
        let w = ring.var(inv.apply(v.row as usize), inv.apply(v.col as usize)).expect("in range");
        (w, e)
    }))
}

pub fn act_on_monomial(sigma: &Permutation, ring: &RingSpec, m: &Monomial) -> Monomial {
    act_on_monomial_with(&sigma.inverse(), ring, m)
}

fn generators(n: usize) -> Vec<Permutation> {
    let mut g = vec![];
    if n >= 2 {
        g.push(Permutation::from_cycles(n, &[&[1, 2]]).expect("valid"));
        let cyc: Vec<usize> = (1..=n).collect();
        g.push(Permutation::from_cycles(n, &[&cyc]).expect("valid"));
    }
    g
}

/// Permutation character of a space spanned by monomials: the number of
/// basis monomials fixed by a class representative.
pub fn monomial_space_character(space: &GradedSubspace) -> Result<CharacterVector> {
    let ring = space.ring();
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    for b in space.basis() {
        if b.len() != 1 {
            return Err(Error::Unsupported("space is not spanned by monomials".into()));
        }
        monos.insert(b.terms().next().expect("one term").0.clone());
    }
    for g in generators(ring.n) {
        if monos.iter().any(|m| !monos.contains(&act_on_monomial(&g, &ring, m))) {
            return Err(Error::NotStable);
        }
    }
    let cls = classes(ring.n);
    let values = cls
        .iter()
        .map(|c| {
            let s = Permutation::representative(&c.cycle_type);
            monos.iter().filter(|m| act_on_monomial(&s, &ring, m) == **m).count() as i64
        })
        .collect();
    Ok(CharacterVector { n: ring.n, classes: cls, values })
}

/// Character of any stable subspace, computed as a trace.
pub fn subspace_character(space: &GradedSubspace) -> Result<CharacterVector> {
    let ring = space.ring();
    for g in generators(ring.n) {
        for b in space.basis() {
            if !space.contains(&act_on_polynomial(&g, b)?) {
                return Err(Error::NotStable);
            }
        }
    }
    let leads = space.leading_monomials();
    let cls = classes(ring.n);
    let mut values = Vec::with_capacity(cls.len());
    for c in &cls {
        let s = Permutation::representative(&c.cycle_type);
        let mut tr = Rational::zero();
        for (b, l) in space.basis().iter().zip(&leads) {
            tr += act_on_polynomial(&s, b)?.coefficient(l);
        }
        if !tr.is_integer() {
            return Err(Error::Unsupported("non-integral trace".into()));
        }
        values.push(tr.to_integer().to_i64().expect("small trace"));
    }
    Ok(CharacterVector { n: ring.n, classes: cls, values })
}

/// Linear map `h -> h . F` from the span of the hafnian monomials.
#[derive(Debug, Clone, Serialize)]
pub struct MonHafMap {
    pub rank: usize,
    pub kernel_dim: usize,
    /// Kernel basis in reduced echelon form (Conca-lex), written in `y`.
    pub kernel: Vec<String>,
    /// Image basis in reduced echelon form (Conca-lex), written in `x`.
    pub image: Vec<String>,
    /// Row `i` lists the coefficients of the image of basis monomial `i`
    /// over `columns`.
    pub matrix: Vec<Vec<String>>,
    pub columns: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PhiPsiReport {
    pub n: usize,
    pub monhaf: Vec<String>,
    pub phi: MonHafMap,
    pub psi: MonHafMap,
}

/// Basis monomials of the hafnian span, largest first.
pub fn monhaf_monomials(ring: &RingSpec) -> Result<Vec<Monomial>> {
    let hf = crate::invariants::hafnian_poly(ring)?;
    Ok(hf.support())
}

pub(crate) fn map_from_monhaf(ring: &RingSpec, basis: &[Monomial], target: &Polynomial) -> Result<(MonHafMap, Vec<Polynomial>)> {
    let images: Vec<Polynomial> = basis
        .iter()
        .map(|m| diff_apply(&Polynomial::monomial(*ring, m.clone(), Rational::one()), target))
        .collect::<Result<_>>()?;
    let mut cols: Vec<Monomial> = images.iter().flat_map(|p| p.support()).collect();
    cols.sort_by(|a, b| b.cmp(a));
    cols.dedup();
    let col_of: HashMap<&Monomial, usize> = cols.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let k = basis.len();
    let nc = cols.len();
    // augmented rows [image | identity]; rows ending up inside the identity
    // block are the kernel
    let mut ech = Echelon::new();
    let mut image_ech = Echelon::new();
    let mut matrix = Vec::with_capacity(k);
    for (i, p) in images.iter().enumerate() {
        let mut row: Vec<(usize, Rational)> = p.terms().map(|(m, c)| (col_of[m], c.clone())).collect();
        matrix.push(
            (0..nc)
                .map(|j| row.iter().find(|e| e.0 == j).map(|e| crate::ring::fmt_rational(&e.1)).unwrap_or_else(|| "0".into()))
                .collect(),
        );
        image_ech.insert(sparse_from_unsorted(row.clone()));
        row.push((nc + i, Rational::one()));
        ech.insert(sparse_from_unsorted(row));
    }
    let rows = ech.into_rref();
    let kernel: Vec<Polynomial> = rows
        .into_iter()
        .filter(|r| r[0].0 >= nc)
        .map(|r| Polynomial::from_terms(*ring, r.into_iter().map(|(c, x)| (basis[c - nc].clone(), x))))
        .collect();
    let kernel = GradedSubspace::span(*ring, (ring.n / 2) as u32, crate::groebner::MonomialOrder::ConcaLex, &kernel)?;
    let image: Vec<String> = image_ech
        .into_rref()
        .into_iter()
        .map(|r| Polynomial::from_terms(*ring, r.into_iter().map(|(c, x)| (cols[c].clone(), x))).format_with('x'))
        .collect();
    let report = MonHafMap {
        rank: image.len(),
        kernel_dim: kernel.dim(),
        kernel: kernel.to_strings('y'),
        image,
        matrix,
        columns: cols.iter().map(|m| m.format('x')).collect(),
    };
    Ok((report, kernel.basis().to_vec()))
}

/// The maps `h -> h . perm(X)` and `h -> h . det(X)` on the span of the
/// hafnian monomials of an even-size symmetric matrix.
pub fn phi_psi_maps(n: usize) -> Result<PhiPsiReport> {
    if n % 2 != 0 || n == 0 {
        return Err(Error::InvalidSize(n));
    }
    let ring = RingSpec::symmetric(n)?;
    let basis = monhaf_monomials(&ring)?;
    let (phi, _) = map_from_monhaf(&ring, &basis, &perm_poly(&ring)?)?;
    let (psi, _) = map_from_monhaf(&ring, &basis, &det_poly(&ring)?)?;
    Ok(PhiPsiReport { n, monhaf: basis.iter().map(|m| m.format('y')).collect(), phi, psi })
}

/// Kernel of `h -> h . perm(X)` on the hafnian monomial span.
pub fn phi_kernel(n: usize) -> Result<GradedSubspace> {
    let ring = RingSpec::symmetric(n)?;
    let basis = monhaf_monomials(&ring)?;
    let (_, ker) = map_from_monhaf(&ring, &basis, &perm_poly(&ring)?)?;
    GradedSubspace::span(ring, (n / 2) as u32, crate::groebner::MonomialOrder::ConcaLex, &ker)
}

/// Check `Phi(sigma . h) == sigma . Phi(h)` on `samples` random pairs, with
/// `h` a random integer combination of hafnian monomials. Returns the number
/// of failures.
pub fn check_phi_equivariance<R: Rng>(n: usize, samples: usize, rng: &mut R) -> Result<usize> {
    let ring = RingSpec::symmetric(n)?;
    let basis = monhaf_monomials(&ring)?;
    let perm = perm_poly(&ring)?;
    let mut failures = 0;
    for _ in 0..samples {
        let sigma = Permutation::random(n, rng);
        let h = Polynomial::from_terms(
            ring,
            basis.iter().map(|m| (m.clone(), Rational::from_integer(BigInt::from(rng.gen_range(-5i64..=5))))),
        );
        let lhs = diff_apply(&act_on_polynomial(&sigma, &h)?, &perm)?;
        let rhs = act_on_polynomial(&sigma, &diff_apply(&h, &perm)?)?;
        if lhs != rhs {
            failures += 1;
        }
    }
    Ok(failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions(4)[0], p(&[4]));
        assert_eq!(partitions(4)[4], p(&[1, 1, 1, 1]));
    }

    #[test]
    fn class_sizes_sum() {
        for n in 1..=8 {
            let total: u64 = classes(n).iter().map(|c| c.size).sum();
            assert_eq!(BigInt::from(total), factorial(n as u32));
        }
    }

    #[test]
    fn class_order_s6() {
        let labels: Vec<String> = classes(6).iter().map(|c| c.label()).collect();
        assert_eq!(
            labels,
            vec!["(1^6)", "(1^4 2)", "(1^3 3)", "(1^2 2^2)", "(1^2 4)", "(1 2 3)", "(1 5)", "(2^3)", "(2 4)", "(3^2)", "(6)"]
        );
    }

    #[test]
    fn representative_has_type() {
        for c in classes(7) {
            assert_eq!(Permutation::representative(&c.cycle_type).cycle_type(), c.cycle_type);
        }
    }

    #[test]
    fn heap_enumerates_all() {
        let all = all_permutations(5);
        assert_eq!(all.len(), 120);
        let set: BTreeSet<Vec<usize>> = all.iter().map(|p| p.images.clone()).collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn hook_dimensions() {
        assert_eq!(p(&[4, 2]).dimension(), BigInt::from(9));
        assert_eq!(p(&[2, 2, 2]).dimension(), BigInt::from(5));
        assert_eq!(p(&[3, 1]).dimension(), BigInt::from(3));
    }

    #[test]
    fn small_characters() {
        assert_eq!(irreducible_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(irreducible_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(irreducible_character(&p(&[1, 1, 1]), &p(&[2, 1])).unwrap(), -1);
        assert!(irreducible_character(&p(&[2, 1]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn permutation_basics() {
        let s = Permutation::from_cycles(4, &[&[1, 2, 3]]).unwrap();
        assert_eq!(s.apply(1), 2);
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(4));
        assert_eq!(s.sign(), 1);
        assert!(Permutation::from_cycles(3, &[&[1, 1]]).is_err());
        assert_eq!(Partition::parse("[3, 1]").unwrap(), p(&[3, 1]));
        assert!(Partition::parse("").is_err());
    }
}
