//! Determinants, permanents, hafnians, immanants and their minors, plus the
//! explicit generator sets for the apolar ideals of the symmetric
//! determinant and permanent.

use std::collections::{BTreeSet, HashMap};

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;
use crate::parse::parse_letters;
use crate::ring::{binomial, int, Flavor, Layout, Monomial, Polynomial, Rational, RingSpec};
use crate::subspace::GradedSubspace;
use crate::symgroup::{all_permutations, character_table, Partition};

/// Rows and columns of a square submatrix, 1-based and strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubmatrixSelector {
    rows: Vec<usize>,
    cols: Vec<usize>,
}

impl SubmatrixSelector {
    pub fn new(rows: Vec<usize>, cols: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = |v: &[usize]| v.windows(2).all(|w| w[0] < w[1]) && v.iter().all(|&i| i >= 1 && i <= n);
        if rows.len() != cols.len() || !increasing(&rows) || !increasing(&cols) {
            return Err(Error::Unsupported(format!("invalid selector {:?}|{:?} for n = {}", rows, cols, n)));
        }
        Ok(SubmatrixSelector { rows, cols })
    }

    pub fn full(n: usize) -> Self {
        SubmatrixSelector { rows: (1..=n).collect(), cols: (1..=n).collect() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }
}

fn check_usual(ring: &RingSpec) -> Result<()> {
    if ring.flavor != Flavor::Usual {
        return Err(Error::WrongFlavor { expected: "usual", got: *ring });
    }
    Ok(())
}

/// `sum_sigma w(sigma) prod_i x[rows_i, cols_sigma(i)]`.
fn weighted_expansion(ring: &RingSpec, sel: &SubmatrixSelector, weight: impl Fn(&crate::symgroup::Permutation) -> i64) -> Result<Polynomial> {
    let t = sel.size();
    let mut out = Polynomial::zero(*ring);
    for sigma in all_permutations(t) {
        let w = weight(&sigma);
        if w == 0 {
            continue;
        }
        let mut vars = Vec::with_capacity(t);
        for i in 0..t {
            vars.push(ring.var(sel.rows[i], sel.cols[sigma.apply(i + 1) - 1])?);
        }
        out.add_term(Monomial::product_of(vars), int(w));
    }
    Ok(out)
}

pub fn minor_poly(ring: &RingSpec, sel: &SubmatrixSelector) -> Result<Polynomial> {
    check_usual(ring)?;
    weighted_expansion(ring, sel, |s| s.sign())
}

pub fn subperm_poly(ring: &RingSpec, sel: &SubmatrixSelector) -> Result<Polynomial> {
    check_usual(ring)?;
    weighted_expansion(ring, sel, |_| 1)
}

pub fn det_poly(ring: &RingSpec) -> Result<Polynomial> {
    minor_poly(ring, &SubmatrixSelector::full(ring.n))
}

pub fn perm_poly(ring: &RingSpec) -> Result<Polynomial> {
    subperm_poly(ring, &SubmatrixSelector::full(ring.n))
}

/// `sum_sigma chi_lambda(sigma) prod_i x[i, sigma(i)]`.
pub fn immanant_poly(ring: &RingSpec, lambda: &Partition) -> Result<Polynomial> {
    check_usual(ring)?;
    if lambda.size() != ring.n {
        return Err(Error::BadPartition(lambda.to_string(), ring.n));
    }
    let table = character_table(ring.n);
    let row = table.partitions.iter().position(|p| p == lambda).expect("partition of n");
    let chi: HashMap<Partition, i64> =
        table.classes.iter().zip(&table.values[row]).map(|(c, &v)| (c.cycle_type.clone(), v)).collect();
    weighted_expansion(ring, &SubmatrixSelector::full(ring.n), |s| chi[&s.cycle_type()])
}

/// One of the invariant forms of a matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Form {
    Det,
    Perm,
    Hafnian,
    Immanant(Partition),
}

impl Form {
    pub fn poly(&self, ring: &RingSpec) -> Result<Polynomial> {
        match self {
            Form::Det => det_poly(ring),
            Form::Perm => perm_poly(ring),
            Form::Hafnian => hafnian_poly(ring),
            Form::Immanant(l) => immanant_poly(ring, l),
        }
    }

    /// Short name used in reports: `det`, `perm`, `hafnian` or `immanant`.
    pub fn kind_name(&self) -> &'static str {
        match self {
            Form::Det => "det",
            Form::Perm => "perm",
            Form::Hafnian => "hafnian",
            Form::Immanant(_) => "immanant",
        }
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Form::Immanant(l) => {
                let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
                write!(f, "imm:{}", parts.join(","))
            }
            other => f.write_str(other.kind_name()),
        }
    }
}

impl std::str::FromStr for Form {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        match t.as_str() {
            "det" => Ok(Form::Det),
            "perm" => Ok(Form::Perm),
            "hafnian" | "hf" => Ok(Form::Hafnian),
            _ => match t.strip_prefix("imm:") {
                Some(rest) => Ok(Form::Immanant(Partition::parse(rest)?)),
                None => Err(Error::Unsupported(format!("unknown form '{}'", s))),
            },
        }
    }
}

/// Hafnian of the principal submatrix on `indices` (even length).
pub fn hafnian_on(ring: &RingSpec, indices: &[usize]) -> Result<Polynomial> {
    if ring.layout != Layout::Symmetric {
        return Err(Error::WrongLayout { expected: "symmetric", got: *ring });
    }
    if indices.len() % 2 != 0 {
        return Err(Error::InvalidSize(indices.len()));
    }
    let mut out = Polynomial::zero(*ring);
    let mut cur = Vec::new();
    fn rec(ring: &RingSpec, rest: &[usize], cur: &mut Vec<crate::ring::VarId>, out: &mut Polynomial) -> Result<()> {
        let Some((&a, tail)) = rest.split_first() else {
            out.add_term(Monomial::product_of(cur.iter().copied()), Rational::one());
            return Ok(());
        };
        for k in 0..tail.len() {
            cur.push(ring.var(a, tail[k])?);
            let remaining: Vec<usize> = tail.iter().enumerate().filter(|&(j, _)| j != k).map(|(_, &x)| x).collect();
            rec(ring, &remaining, cur, out)?;
            cur.pop();
        }
        Ok(())
    }
    rec(ring, indices, &mut cur, &mut out)?;
    Ok(out)
}

pub fn hafnian_poly(ring: &RingSpec) -> Result<Polynomial> {
    let idx: Vec<usize> = (1..=ring.n).collect();
    hafnian_on(ring, &idx)
}

/// All `k`-subsets of `1..=n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    V,
    W,
    Hdeg3,
    /// `W` together with `Hdeg3` (just `W` below size 6).
    WPlus,
    AnnCo2,
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "v" => Ok(GeneratorKind::V),
            "w" => Ok(GeneratorKind::W),
            "hdeg3" | "h" => Ok(GeneratorKind::Hdeg3),
            "wplus" | "w+" => Ok(GeneratorKind::WPlus),
            "annco2" => Ok(GeneratorKind::AnnCo2),
            _ => Err(Error::Unsupported(format!("unknown generator set '{}'", s))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub kind: GeneratorKind,
    pub n: usize,
    pub members: Vec<Polynomial>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSetJson {
    pub kind: GeneratorKind,
    pub n: usize,
    pub members: Vec<String>,
}

impl GeneratorSet {
    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson { kind: self.kind, n: self.n, members: self.members.iter().map(|p| p.format_with('y')).collect() }
    }

    pub fn from_json(j: &GeneratorSetJson) -> Result<Self> {
        let ring = RingSpec::symmetric(j.n)?;
        let members = j.members.iter().map(|s| crate::parse::parse_poly(s, ring)).collect::<std::result::Result<_, _>>()?;
        Ok(GeneratorSet { kind: j.kind, n: j.n, members })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Closed-form size of a generator set.
pub fn expected_size(kind: GeneratorKind, n: usize) -> usize {
    let c = |a: usize, b: usize| binomial(a as u64, b as u64).try_into().unwrap_or(0usize);
    let w = n * n + c(n, 2) + n * c(n.saturating_sub(1), 2);
    match kind {
        GeneratorKind::V => w + c(n, 4),
        GeneratorKind::W => w,
        GeneratorKind::Hdeg3 => 5 * c(n, 6),
        GeneratorKind::WPlus => w + 5 * c(n, 6),
        GeneratorKind::AnnCo2 => n * n + c(n, 2),
    }
}

/// The five cubics on a 6x6 symmetric matrix, in letter shorthand.
pub const HDEG3_TEMPLATES: [&str; 5] = [
    "EIO - DJO - EHR + CJR + DHT - CIT",
    "DKN - DJO - CKQ + BOQ + CJR - BNR",
    "FIN - DJO - FHQ + BOQ + CJR - BNR + DHT - CIT",
    "EKM - DJO - CKQ + BOQ - EHR + CJR + DHT - BMT",
    "FJM - DJO - FHQ + BOQ + DHT - BMT",
];

/// Rename indices through `map` (1-based, `map[i-1]` is the new index).
pub fn substitute_indices(p: &Polynomial, target: RingSpec, map: &[usize]) -> Result<Polynomial> {
    let mut out = Polynomial::zero(target);
    for (m, c) in p.terms() {
        let mut exps = Vec::new();
        for &(v, e) in m.exponents() {
            exps.push((target.var(map[v.row as usize - 1], map[v.col as usize - 1])?, e));
        }
        out.add_term(Monomial::from_exponents(exps), c.clone());
    }
    Ok(out)
}

pub fn build_generator_set(kind: GeneratorKind, n: usize) -> Result<GeneratorSet> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let ring = RingSpec::symmetric(n)?;
    let y = |i: usize, j: usize| Polynomial::var(ring, i, j).expect("in range");
    let mut members = Vec::new();
    let diag_times_row = |members: &mut Vec<Polynomial>| {
        for i in 1..=n {
            for j in 1..=n {
                members.push(&y(i, i) * &y(i, j));
            }
        }
    };
    let binomials = |members: &mut Vec<Polynomial>, sign: i64| {
        for i in 1..=n {
            for j in (i + 1)..=n {
                members.push(&(&y(i, j) * &y(i, j)) + &(&y(i, i) * &y(j, j)).scale(&int(2 * sign)));
            }
        }
    };
    let one_diagonal = |members: &mut Vec<Polynomial>, sign: i64| {
        for i in 1..=n {
            for j in 1..=n {
                for k in (j + 1)..=n {
                    if j == i || k == i {
                        continue;
                    }
                    members.push(&(&y(i, i) * &y(j, k)) + &(&y(i, j) * &y(i, k)).scale(&int(sign)));
                }
            }
        }
    };
    let hdeg3 = |members: &mut Vec<Polynomial>| -> Result<()> {
        if n < 6 {
            return Ok(());
        }
        let r6 = RingSpec::symmetric(6)?;
        let templates: Vec<Polynomial> = HDEG3_TEMPLATES.iter().map(|t| parse_letters(t, r6)).collect::<std::result::Result<_, _>>()?;
        for s in subsets(n, 6) {
            for t in &templates {
                members.push(substitute_indices(t, ring, &s)?);
            }
        }
        Ok(())
    };
    match kind {
        GeneratorKind::V => {
            diag_times_row(&mut members);
            binomials(&mut members, 1);
            one_diagonal(&mut members, 1);
            for s in subsets(n, 4) {
                members.push(hafnian_on(&ring, &s)?);
            }
        }
        GeneratorKind::W => {
            diag_times_row(&mut members);
            binomials(&mut members, -1);
            one_diagonal(&mut members, -1);
        }
        GeneratorKind::Hdeg3 => {
            if n < 6 {
                return Err(Error::Unsupported("the cubic generators need n >= 6".into()));
            }
            hdeg3(&mut members)?;
        }
        GeneratorKind::WPlus => {
            diag_times_row(&mut members);
            binomials(&mut members, -1);
            one_diagonal(&mut members, -1);
            hdeg3(&mut members)?;
        }
        GeneratorKind::AnnCo2 => {
            diag_times_row(&mut members);
            for i in 1..=n {
                for j in (i + 1)..=n {
                    members.push(&(&y(i, i) * &y(j, j)) + &(&y(i, j) * &y(i, j)));
                }
            }
        }
    }
    debug_assert_eq!(members.len(), expected_size(kind, n));
    Ok(GeneratorSet { kind, n, members })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SpaceKind {
    /// Span of the `k x k` minors.
    Minors,
    /// Span of the `k x k` sub-permanents.
    Permanents,
    /// Span of the monomials of the hafnian (`k` must be `n/2`).
    MonHaf,
}

/// All `k x k` minors (or sub-permanents), indexed by row and column sets.
pub fn all_square_subpolys(ring: &RingSpec, k: usize, permanent: bool) -> Result<Vec<Polynomial>> {
    let mut out = Vec::new();
    let subs = subsets(ring.n, k);
    for (ai, a) in subs.iter().enumerate() {
        for (bi, b) in subs.iter().enumerate() {
            if ring.is_symmetric() && bi < ai {
                continue;
            }
            let sel = SubmatrixSelector { rows: a.clone(), cols: b.clone() };
            out.push(if permanent { subperm_poly(ring, &sel)? } else { minor_poly(ring, &sel)? });
        }
    }
    Ok(out)
}

pub fn monomial_space(space: SpaceKind, ring: &RingSpec, k: usize) -> Result<GradedSubspace> {
    if k > ring.n {
        return Err(Error::DegreeOutOfRange { degree: k, max: ring.n });
    }
    let ord = MonomialOrder::ConcaLex;
    match space {
        SpaceKind::Minors | SpaceKind::Permanents => {
            if k == 0 {
                return GradedSubspace::span(*ring, 0, ord, &[Polynomial::one(*ring)]);
            }
            let polys = all_square_subpolys(ring, k, space == SpaceKind::Permanents)?;
            GradedSubspace::span(*ring, k as u32, ord, &polys)
        }
        SpaceKind::MonHaf => {
            if 2 * k != ring.n {
                return Err(Error::DegreeOutOfRange { degree: k, max: ring.n / 2 });
            }
            let hf = hafnian_poly(ring)?;
            Ok(GradedSubspace::of_monomials(*ring, k as u32, ord, &hf.support()))
        }
    }
}

/// Support of the symmetric determinant.
pub fn det_support(n: usize) -> Result<BTreeSet<Monomial>> {
    let ring = RingSpec::symmetric(n)?;
    Ok(det_poly(&ring)?.support().into_iter().collect())
}

/// Degree-`k` monomials dividing some term of the symmetric determinant.
pub fn acceptable_monomials(n: usize, k: u32) -> Result<BTreeSet<Monomial>> {
    let mut out = BTreeSet::new();
    for m in det_support(n)? {
        out.extend(m.divisors_of_degree(k));
    }
    Ok(out)
}
