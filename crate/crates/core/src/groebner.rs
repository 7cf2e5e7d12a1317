//! Monomial orders, multivariate division and the Buchberger criterion.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{Monomial, Polynomial, Rational};

/// The two lexicographic orders used throughout.
///
/// `ConcaLex` is lex with `x[1,1] > x[1,2] > ... > x[n,n]` (row-major).
/// `ReverseConcaLex` is its reversal: the leading monomial of a polynomial is
/// the one that is smallest under `ConcaLex`. On monomials of one degree
/// this is a total order, which is all the homogeneous computations here
/// need.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MonomialOrder {
    ConcaLex,
    ReverseConcaLex,
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::ConcaLex => a.cmp(b),
            MonomialOrder::ReverseConcaLex => b.cmp(a),
        }
    }

    pub fn reversed(&self) -> MonomialOrder {
        match self {
            MonomialOrder::ConcaLex => MonomialOrder::ReverseConcaLex,
            MonomialOrder::ReverseConcaLex => MonomialOrder::ConcaLex,
        }
    }

    /// Leading term, or `None` for the zero polynomial.
    pub fn leading<'a>(&self, p: &'a Polynomial) -> Option<(&'a Monomial, &'a Rational)> {
        match self {
            MonomialOrder::ConcaLex => p.terms().next_back(),
            MonomialOrder::ReverseConcaLex => p.terms().next(),
        }
    }

    /// Sort monomials so the largest comes first.
    pub fn sort_desc(&self, v: &mut [Monomial]) {
        v.sort_by(|a, b| self.cmp(b, a));
    }
}

impl std::fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            MonomialOrder::ConcaLex => "conca",
            MonomialOrder::ReverseConcaLex => "revconca",
        })
    }
}

pub fn leading_term(p: &Polynomial, ord: MonomialOrder) -> Result<(Monomial, Rational)> {
    ord.leading(p).map(|(m, c)| (m.clone(), c.clone())).ok_or(Error::ZeroPolynomial)
}

/// The S-polynomial `lc(g) (L/lm f) f - lc(f) (L/lm g) g` with
/// `L = lcm(lm f, lm g)`. This avoids denominators and differs from the
/// monic version by the nonzero factor `lc(f) lc(g)`.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Result<Polynomial> {
    f.ring().check_same(&g.ring())?;
    let (mf, cf) = leading_term(f, ord)?;
    let (mg, cg) = leading_term(g, ord)?;
    let l = mf.lcm(&mg);
    let a = f.mul_monomial(&l.div(&mf).expect("lcm")).scale(&cg);
    let b = g.mul_monomial(&l.div(&mg).expect("lcm")).scale(&cf);
    a.checked_sub(&b)
}

struct Divisor<'a> {
    lm: Monomial,
    lc: Rational,
    poly: &'a Polynomial,
}

fn prepare<'a>(gens: &'a [Polynomial], ord: MonomialOrder) -> Result<Vec<Divisor<'a>>> {
    gens.iter()
        .map(|g| {
            if !g.is_homogeneous() {
                return Err(Error::Inhomogeneous);
            }
            let (lm, lc) = leading_term(g, ord)?;
            Ok(Divisor { lm, lc, poly: g })
        })
        .collect()
}

/// Normal form of `p` by full multivariate division. The first generator
/// (in list order) whose leading monomial divides the current leading
/// monomial is used. Inputs must be homogeneous.
pub fn reduce(p: &Polynomial, gens: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial> {
    if !p.is_homogeneous() {
        return Err(Error::Inhomogeneous);
    }
    for g in gens {
        p.ring().check_same(&g.ring())?;
    }
    let divs = prepare(gens, ord)?;
    Ok(reduce_with(p, &divs, ord))
}

fn reduce_with(p: &Polynomial, divs: &[Divisor<'_>], ord: MonomialOrder) -> Polynomial {
    let mut p = p.clone();
    let mut rem = Polynomial::zero(p.ring());
    while let Some((m, c)) = ord.leading(&p).map(|(m, c)| (m.clone(), c.clone())) {
        match divs.iter().find(|d| d.lm.divides(&m)) {
            Some(d) => {
                let q = m.div(&d.lm).expect("divides");
                let factor = &c / &d.lc;
                let sub = d.poly.mul_monomial(&q).scale(&factor);
                p = p.checked_sub(&sub).expect("same ring");
            }
            None => {
                p.add_term(m.clone(), -c.clone());
                rem.add_term(m, c);
            }
        }
    }
    rem
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairFailure {
    pub i: usize,
    pub j: usize,
    pub normal_form: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerReport {
    pub pairs_checked: usize,
    pub pairs_skipped: usize,
    pub failures: Vec<PairFailure>,
}

impl GroebnerReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Buchberger's criterion: every S-polynomial reduces to zero. Pairs whose
/// lcm exceeds `degree_cap` are skipped and counted.
pub fn is_groebner(gens: &[Polynomial], ord: MonomialOrder, degree_cap: Option<u32>) -> Result<GroebnerReport> {
    if let Some(g) = gens.first() {
        for h in gens {
            g.ring().check_same(&h.ring())?;
        }
    }
    let divs = prepare(gens, ord)?;
    let pairs: Vec<(usize, usize)> = (0..gens.len()).flat_map(|i| ((i + 1)..gens.len()).map(move |j| (i, j))).collect();
    let results: Vec<Option<Option<PairFailure>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let l = divs[i].lm.lcm(&divs[j].lm);
            if degree_cap.is_some_and(|cap| l.degree() > cap) {
                return None;
            }
            let s = s_polynomial(&gens[i], &gens[j], ord).expect("nonzero generators");
            let nf = reduce_with(&s, &divs, ord);
            Some((!nf.is_zero()).then(|| PairFailure { i, j, normal_form: nf.format_with('y') }))
        })
        .collect();
    let mut report = GroebnerReport { pairs_checked: 0, pairs_skipped: 0, failures: Vec::new() };
    for r in results {
        match r {
            None => report.pairs_skipped += 1,
            Some(f) => {
                report.pairs_checked += 1;
                report.failures.extend(f);
            }
        }
    }
    Ok(report)
}

/// Leading monomials of `gens` under `ord`.
pub fn leading_monomials(gens: &[Polynomial], ord: MonomialOrder) -> Vec<Monomial> {
    gens.iter().filter_map(|g| ord.leading(g).map(|(m, _)| m.clone())).collect()
}

/// Scale `p` so that its leading coefficient is one.
pub fn monic(p: &Polynomial, ord: MonomialOrder) -> Polynomial {
    match ord.leading(p) {
        Some((_, c)) if !c.is_one() && !c.is_zero() => p.scale(&(Rational::one() / c)),
        _ => p.clone(),
    }
}
