//! Rank lower bounds from Hilbert data: the length-over-degree bound for the
//! cactus rank, the differential rank, and the singular-locus bound for the
//! symmetric determinant.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::apolar::{hilbert_sequence, minimal_generator_profile, GeneratorProfile, ProfileMethod};
use crate::combinatorics::{narayana, NarayanaConvention};
use crate::error::{Error, Result};
use crate::invariants::Form;
use crate::pairing::Pairing;
use crate::ring::{binomial, fmt_rational, truncate_decimal, Polynomial, Rational, RingSpec};

/// Render `q` with at most `places` decimals: exact when the expansion
/// terminates in time, truncated otherwise. Trailing zeros are dropped.
pub fn render_decimal(q: &Rational, places: usize) -> String {
    let s = truncate_decimal(q, places);
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

/// `length / d`.
pub fn rs_value(length: usize, d: u32) -> Rational {
    Rational::new(BigInt::from(length), BigInt::from(d))
}

/// Length over the highest generator degree of `Ann(F)`, with that degree.
pub fn rs_bound(f: &Polynomial, pairing: Pairing) -> Result<(Rational, u32)> {
    let h = hilbert_sequence(f, pairing)?;
    let d = f.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    let profile = minimal_generator_profile(f, pairing, d, ProfileMethod::Dual)?;
    let top = profile.max_degree.unwrap_or(1);
    Ok((rs_value(h.length, top), top))
}

pub fn l_diff(f: &Polynomial, pairing: Pairing) -> Result<usize> {
    Ok(hilbert_sequence(f, pairing)?.max())
}

/// Dimension of the locus where the symmetric determinant vanishes to order
/// `t + 1`; the empty locus (`t = n`) has dimension -1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SigmaDimension {
    pub t: usize,
    pub value: i64,
}

pub fn sigma_dimension(n: usize, t: usize) -> Result<SigmaDimension> {
    if t == 0 || t > n {
        return Err(Error::DegreeOutOfRange { degree: t, max: n });
    }
    if t == n {
        return Ok(SigmaDimension { t, value: -1 });
    }
    let (n, ti) = (n as i64, t as i64);
    let value = (n - ti - 1) * (n - ti) / 2 + (ti + 1) * (n - ti - 1);
    Ok(SigmaDimension { t, value })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LtBound {
    pub n: usize,
    /// The `t` used for `value`.
    pub t: usize,
    pub value: i64,
    /// `(t, bound)` for every `t` in `1..=n`.
    pub by_t: Vec<(usize, i64)>,
    /// `floor(n/2)`, where the maximum is asserted to occur.
    pub claimed_argmax: usize,
    /// Smallest `t` maximizing the whole bound.
    pub computed_argmax: usize,
    /// Smallest `t` maximizing the minor-count term alone.
    pub bracket_argmax: usize,
}

fn minor_count(n: usize, t: usize) -> i64 {
    narayana(n as u64, t as u64, NarayanaConvention::Table).expect("1 <= t <= n").to_i64().expect("fits")
}

fn lt_value(n: usize, t: usize) -> Result<i64> {
    Ok(minor_count(n, t) + sigma_dimension(n, t)?.value + 1)
}

/// The bound at `t`, or at the maximizing `t` when none is given.
pub fn lt_bound_det(n: usize, t: Option<usize>) -> Result<LtBound> {
    if n < 2 {
        return Err(Error::InvalidSize(n));
    }
    let by_t: Vec<(usize, i64)> = (1..=n).map(|t| lt_value(n, t).map(|v| (t, v))).collect::<Result<_>>()?;
    let argmax = |vals: &[(usize, i64)]| {
        let best = vals.iter().map(|x| x.1).max().unwrap_or(0);
        vals.iter().find(|x| x.1 == best).map(|x| x.0).unwrap_or(1)
    };
    let computed_argmax = argmax(&by_t);
    let bracket: Vec<(usize, i64)> = (1..n).map(|t| (t, minor_count(n, t))).collect();
    let bracket_argmax = argmax(&bracket);
    let t = match t {
        Some(t) if t == 0 || t > n => return Err(Error::DegreeOutOfRange { degree: t, max: n }),
        Some(t) => t,
        None => computed_argmax,
    };
    let value = by_t[t - 1].1;
    Ok(LtBound { n, t, value, by_t, claimed_argmax: n / 2, computed_argmax, bracket_argmax })
}

/// The `t` used by the published determinant table: `ceil(n/2)`.
pub fn lt_table_t(n: usize) -> usize {
    n.div_ceil(2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankReport {
    pub n: usize,
    pub form: String,
    pub pairing: Pairing,
    pub hilbert: Vec<usize>,
    pub length: usize,
    pub generator_profile: GeneratorProfile,
    /// Highest generator degree from the profile.
    pub max_gen_degree: u32,
    /// `length / max_gen_degree`, exact.
    pub rs_bound: String,
    pub rs_decimal: String,
    pub l_diff: usize,
    pub lt: Option<LtBound>,
}

pub fn rank_report(form: &Form, n: usize, pairing: Pairing) -> Result<RankReport> {
    let ring = RingSpec::symmetric(n)?;
    let f = form.poly(&ring)?;
    let h = hilbert_sequence(&f, pairing)?;
    let d = f.homogeneous_degree().ok_or(Error::Inhomogeneous)?;
    let profile = minimal_generator_profile(&f, pairing, d, ProfileMethod::Dual)?;
    let top = profile.max_degree.unwrap_or(1);
    let rs = rs_value(h.length, top);
    let lt = match (form, pairing) {
        (Form::Det, Pairing::Diff) if n >= 2 => Some(lt_bound_det(n, Some(lt_table_t(n)))?),
        _ => None,
    };
    Ok(RankReport {
        n,
        form: form.to_string(),
        pairing,
        l_diff: h.max(),
        length: h.length,
        hilbert: h.values,
        generator_profile: profile,
        max_gen_degree: top,
        rs_bound: fmt_rational(&rs),
        rs_decimal: render_decimal(&rs, 2),
        lt,
    })
}

/// `C_{n+1}`, the length of the apolar algebra of the symmetric determinant.
pub fn det_length_closed_form(n: u64) -> BigInt {
    crate::combinatorics::catalan(n + 1)
}

/// `(C(2n, n) + 2^n) / 2`, the length for the symmetric permanent.
pub fn perm_length_closed_form(n: u64) -> BigInt {
    (binomial(2 * n, n) + (BigInt::from(1) << n as usize)) / BigInt::from(2)
}

/// `C(n, k) (C(n, k) + 1) / 2`.
pub fn perm_hilbert_closed_form(n: u64, k: u64) -> BigInt {
    let c = binomial(n, k);
    &c * (&c + BigInt::from(1)) / BigInt::from(2)
}

/// `H_k` of the symmetric determinant: the number of `(n-k) x (n-k)` doset
/// minors (1 at `k = n`).
pub fn det_hilbert_closed_form(n: u64, k: u64) -> BigInt {
    if k == n {
        return BigInt::from(1);
    }
    narayana(n, n - k, NarayanaConvention::Table).unwrap_or_else(|_| BigInt::zero())
}
