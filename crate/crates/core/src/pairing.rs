//! The action of the dual ring `S = Q[y_ij]` on `R = Q[x_ij]`.
//!
//! Two actions are provided. Differentiation sends
//! `y^V . x^U = U!/(U-V)! x^(U-V)`; contraction sends `y^V . x^U = x^(U-V)`
//! with coefficient one, on either flavor of ring. Both kill `x^U` unless
//! `V <= U`. They are intertwined by [`to_divided`]:
//! `to_divided(diff(h, F)) == contract(h, to_divided(F))`.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{falling, Flavor, Monomial, Polynomial, Rational, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pairing {
    #[serde(rename = "diff")]
    Diff,
    Contract,
}

impl std::fmt::Display for Pairing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Pairing::Diff => "diff",
            Pairing::Contract => "contract",
        })
    }
}

/// `y^v . x^u` for one pair of monomials, `None` when it vanishes.
pub fn apply_monomial(pairing: Pairing, v: &Monomial, u: &Monomial) -> Option<(Monomial, Rational)> {
    let q = u.div(v)?;
    let c = match pairing {
        Pairing::Contract => Rational::one(),
        Pairing::Diff => {
            let mut c = num_bigint::BigInt::one();
            for &(var, e) in v.exponents() {
                c *= falling(u.exponent(var), e);
            }
            Rational::from_integer(c)
        }
    };
    Some((q, c))
}

/// Apply a single monomial of `S` to `f`.
pub fn apply_monomial_to(pairing: Pairing, v: &Monomial, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.ring());
    for (u, c) in f.terms() {
        if let Some((q, k)) = apply_monomial(pairing, v, u) {
            out.add_term(q, k * c);
        }
    }
    out
}

pub fn apply(pairing: Pairing, h: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    match pairing {
        Pairing::Diff => diff_apply(h, f),
        Pairing::Contract => contract_apply(h, f),
    }
}

/// Differentiation action. Both arguments must live in usual rings of the
/// same shape.
pub fn diff_apply(h: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    h.ring().check_same_shape(&f.ring())?;
    if f.ring().flavor != Flavor::Usual {
        return Err(Error::WrongFlavor { expected: "usual", got: f.ring() });
    }
    Ok(act(Pairing::Diff, h, f))
}

/// Contraction action. `h` is read as an element of `S` regardless of its
/// flavor tag; `f` may be usual or divided.
pub fn contract_apply(h: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    h.ring().check_same_shape(&f.ring())?;
    Ok(act(Pairing::Contract, h, f))
}

fn act(pairing: Pairing, h: &Polynomial, f: &Polynomial) -> Polynomial {
    let mut out = Polynomial::zero(f.ring());
    for (v, a) in h.terms() {
        for (u, b) in f.terms() {
            if let Some((q, k)) = apply_monomial(pairing, v, u) {
                out.add_term(q, k * a * b);
            }
        }
    }
    out
}

/// Rewrite a usual polynomial in the divided-power basis:
/// `c x^U` becomes `c U! X^[U]`.
pub fn to_divided(f: &Polynomial) -> Result<Polynomial> {
    if f.ring().flavor != Flavor::Usual {
        return Err(Error::WrongFlavor { expected: "usual", got: f.ring() });
    }
    let ring = f.ring().with_flavor(Flavor::Divided);
    Ok(Polynomial::from_terms(
        ring,
        f.terms().map(|(m, c)| (m.clone(), c * Rational::from_integer(m.factorial()))),
    ))
}

/// Inverse of [`to_divided`].
pub fn from_divided(f: &Polynomial) -> Result<Polynomial> {
    if f.ring().flavor != Flavor::Divided {
        return Err(Error::WrongFlavor { expected: "divided", got: f.ring() });
    }
    let ring = f.ring().with_flavor(Flavor::Usual);
    Ok(Polynomial::from_terms(
        ring,
        f.terms().map(|(m, c)| (m.clone(), c / Rational::from_integer(m.factorial()))),
    ))
}

/// The usual polynomial `sum c_U x^U / U!`. Differentiation on the result
/// matches contraction on the input coefficient for coefficient, so the two
/// have the same annihilator.
pub fn contraction_to_diff(f: &Polynomial) -> Polynomial {
    let ring = f.ring().with_flavor(Flavor::Usual);
    Polynomial::from_terms(ring, f.terms().map(|(m, c)| (m.clone(), c / Rational::from_integer(m.factorial()))))
}

/// The divided power `L^[j] = sum_{|J| = j} a^J X^[J]` of a linear form
/// `L = sum a_i x_i`.
pub fn divided_power_linear(l: &Polynomial, j: u32) -> Result<Polynomial> {
    let ring: RingSpec = l.ring().with_flavor(Flavor::Divided);
    let mut coeffs = Vec::new();
    for (m, c) in l.terms() {
        if m.degree() != 1 {
            return Err(Error::NotLinear);
        }
        coeffs.push((m.exponents()[0].0, c.clone()));
    }
    let mut out = Polynomial::zero(ring);
    let mut cur = Vec::new();
    fn rec(
        coeffs: &[(crate::ring::VarId, Rational)],
        j: u32,
        cur: &mut Vec<(crate::ring::VarId, u32)>,
        acc: Rational,
        out: &mut Polynomial,
    ) {
        let Some(((v, a), rest)) = coeffs.split_first() else {
            if j == 0 {
                out.add_term(Monomial::from_exponents(cur.iter().copied()), acc);
            }
            return;
        };
        let mut pw = Rational::one();
        for e in 0..=j {
            if e > 0 {
                pw *= a;
            }
            if pw.is_zero() && e > 0 {
                break;
            }
            cur.push((*v, e));
            rec(rest, j - e, cur, &acc * &pw, out);
            cur.pop();
        }
    }
    rec(&coeffs, j, &mut cur, Rational::one(), &mut out);
    Ok(out)
}
