use std::collections::HashMap;

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;
use crate::linalg::{Echelon, SparseVec};
use crate::ring::{Monomial, Polynomial, RingSpec};

/// A subspace of the degree-`degree` forms, stored as a reduced row echelon
/// basis under `order`: leading coefficients are one, leading monomials are
/// strictly decreasing and no basis element involves another's leading
/// monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    ring: RingSpec,
    degree: u32,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
}

impl GradedSubspace {
    pub fn zero(ring: RingSpec, degree: u32, order: MonomialOrder) -> Self {
        GradedSubspace { ring, degree, order, basis: Vec::new() }
    }

    /// Echelonize the span of `polys`. Every input must be zero or
    /// homogeneous of degree `degree`.
    pub fn span(ring: RingSpec, degree: u32, order: MonomialOrder, polys: &[Polynomial]) -> Result<Self> {
        let mut index: HashMap<Monomial, usize> = HashMap::new();
        let mut monos: Vec<Monomial> = Vec::new();
        for p in polys {
            ring.check_same(&p.ring())?;
            for (m, _) in p.terms() {
                if m.degree() != degree {
                    return Err(Error::Inhomogeneous);
                }
                if !index.contains_key(m) {
                    index.insert(m.clone(), 0);
                    monos.push(m.clone());
                }
            }
        }
        order.sort_desc(&mut monos);
        for (i, m) in monos.iter().enumerate() {
            index.insert(m.clone(), i);
        }
        let mut ech = Echelon::new();
        for p in polys {
            let v: SparseVec = {
                let mut v: Vec<_> = p.terms().map(|(m, c)| (index[m], c.clone())).collect();
                v.sort_by_key(|e| e.0);
                v
            };
            ech.insert(v);
        }
        Ok(Self::from_rref(ring, degree, order, &monos, ech.into_rref()))
    }

    /// Build from RREF rows over the column basis `monos` (sorted largest
    /// first under `order`).
    pub(crate) fn from_rref(ring: RingSpec, degree: u32, order: MonomialOrder, monos: &[Monomial], rows: Vec<SparseVec>) -> Self {
        let basis = rows
            .into_iter()
            .map(|r| Polynomial::from_terms(ring, r.into_iter().map(|(c, x)| (monos[c].clone(), x))))
            .collect();
        GradedSubspace { ring, degree, order, basis }
    }

    /// Trusted constructor for a basis already in reduced echelon form.
    pub(crate) fn from_basis_unchecked(ring: RingSpec, degree: u32, order: MonomialOrder, mut basis: Vec<Polynomial>) -> Self {
        basis.sort_by(|a, b| {
            let la = order.leading(a).expect("nonzero").0;
            let lb = order.leading(b).expect("nonzero").0;
            order.cmp(lb, la)
        });
        GradedSubspace { ring, degree, order, basis }
    }

    /// The span of single monomials.
    pub fn of_monomials(ring: RingSpec, degree: u32, order: MonomialOrder, monos: &[Monomial]) -> Self {
        let mut ms: Vec<Monomial> = monos.to_vec();
        order.sort_desc(&mut ms);
        ms.dedup();
        let basis = ms.into_iter().map(|m| Polynomial::monomial(ring, m, num_traits::One::one())).collect();
        GradedSubspace { ring, degree, order, basis }
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|b| self.order.leading(b).expect("nonzero").0.clone()).collect()
    }

    /// `p` minus its projection onto the span along the leading monomials.
    /// Zero exactly when `p` lies in the subspace.
    pub fn residual(&self, p: &Polynomial) -> Polynomial {
        let mut r = p.clone();
        for b in &self.basis {
            let (lm, _) = self.order.leading(b).expect("nonzero");
            let c = p.coefficient(lm);
            if !c.is_zero() {
                r = r.checked_sub(&b.scale(&c)).expect("same ring");
            }
        }
        r
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        p.ring() == self.ring && (p.is_zero() || p.homogeneous_degree() == Some(self.degree)) && self.residual(p).is_zero()
    }

    /// Whether every basis element of `other` lies in `self`.
    pub fn contains_space(&self, other: &GradedSubspace) -> bool {
        other.basis.iter().all(|b| self.contains(b))
    }

    /// Re-echelonize under another order.
    pub fn reorder(&self, order: MonomialOrder) -> GradedSubspace {
        if order == self.order {
            return self.clone();
        }
        Self::span(self.ring, self.degree, order, &self.basis).expect("homogeneous basis")
    }

    pub fn to_strings(&self, letter: char) -> Vec<String> {
        self.basis.iter().map(|b| b.format_with(letter)).collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubspaceSummary {
    pub degree: u32,
    pub order: MonomialOrder,
    pub dim: usize,
    pub basis: Vec<String>,
}

impl From<&GradedSubspace> for SubspaceSummary {
    fn from(s: &GradedSubspace) -> Self {
        SubspaceSummary { degree: s.degree, order: s.order, dim: s.dim(), basis: s.to_strings('y') }
    }
}
