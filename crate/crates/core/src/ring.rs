//! Polynomial rings over Q in the entries of an n x n matrix.
//!
//! A [`RingSpec`] fixes the matrix size, whether the matrix is symmetric
//! (variables `x[i,j]` with `i <= j`) or generic (all `n^2` entries), and
//! whether polynomials are read in the usual monomial basis or in the
//! divided-power basis `X^[U] = X^U / U!`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub(crate) fn factorial(k: u32) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * i)
}

pub(crate) fn falling(u: u32, v: u32) -> BigInt {
    ((u - v + 1)..=u).fold(BigInt::one(), |acc, i| acc * i)
}

pub(crate) fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Layout {
    #[serde(rename = "sym")]
    Symmetric,
    Generic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Usual,
    Divided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RingSpec {
    pub n: usize,
    pub layout: Layout,
    pub flavor: Flavor,
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let layout = match self.layout {
            Layout::Symmetric => "sym",
            Layout::Generic => "generic",
        };
        let flavor = match self.flavor {
            Flavor::Usual => "usual",
            Flavor::Divided => "divided",
        };
        write!(f, "{}x{} {} {}", self.n, self.n, layout, flavor)
    }
}

/// Largest supported matrix size. Variable indices are stored in a byte.
pub const MAX_N: usize = 64;

impl RingSpec {
    pub fn new(n: usize, layout: Layout, flavor: Flavor) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return Err(Error::InvalidSize(n));
        }
        Ok(RingSpec { n, layout, flavor })
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        Self::new(n, Layout::Symmetric, Flavor::Usual)
    }

    pub fn generic(n: usize) -> Result<Self> {
        Self::new(n, Layout::Generic, Flavor::Usual)
    }

    pub fn with_flavor(self, flavor: Flavor) -> Self {
        RingSpec { flavor, ..self }
    }

    pub fn is_symmetric(&self) -> bool {
        self.layout == Layout::Symmetric
    }

    pub fn nvars(&self) -> usize {
        match self.layout {
            Layout::Symmetric => self.n * (self.n + 1) / 2,
            Layout::Generic => self.n * self.n,
        }
    }

    /// The variable at 1-based position (row, col). In the symmetric layout
    /// `(i,j)` and `(j,i)` name the same variable.
    pub fn var(&self, row: usize, col: usize) -> Result<VarId> {
        if row == 0 || col == 0 || row > self.n || col > self.n {
            return Err(Error::IndexOutOfRange { row, col, n: self.n });
        }
        let (r, c) = match self.layout {
            Layout::Symmetric if row > col => (col, row),
            _ => (row, col),
        };
        Ok(VarId { row: r as u8, col: c as u8 })
    }

    /// All variables, highest ranked first.
    pub fn variables(&self) -> Vec<VarId> {
        let mut out = Vec::with_capacity(self.nvars());
        for i in 1..=self.n {
            let start = if self.is_symmetric() { i } else { 1 };
            for j in start..=self.n {
                out.push(VarId { row: i as u8, col: j as u8 });
            }
        }
        out
    }

    pub fn contains(&self, v: VarId) -> bool {
        let (r, c) = (v.row as usize, v.col as usize);
        r >= 1 && c >= 1 && r <= self.n && c <= self.n && (!self.is_symmetric() || r <= c)
    }

    /// Position of `v` in [`RingSpec::variables`].
    pub fn var_index(&self, v: VarId) -> usize {
        let (r, c) = (v.row as usize, v.col as usize);
        match self.layout {
            Layout::Generic => (r - 1) * self.n + (c - 1),
            Layout::Symmetric => (r - 1) * (2 * self.n + 2 - r) / 2 + (c - r),
        }
    }

    pub(crate) fn check_same(&self, other: &RingSpec) -> Result<()> {
        if self != other {
            return Err(Error::RingMismatch { left: *self, right: *other });
        }
        Ok(())
    }

    pub(crate) fn check_same_shape(&self, other: &RingSpec) -> Result<()> {
        if self.n != other.n || self.layout != other.layout {
            return Err(Error::RingMismatch { left: *self, right: *other });
        }
        Ok(())
    }
}

/// A matrix-entry variable with 1-based indices. The derived order on
/// `(row, col)` is the variable ranking: `x[1,1]` ranks highest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VarId {
    pub row: u8,
    pub col: u8,
}

impl VarId {
    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.row, self.col)
    }
}

/// A monomial stored as a sparse exponent vector sorted by variable rank.
///
/// `Ord` is the lexicographic order with respect to the variable ranking:
/// at the first variable where the exponents differ, the larger exponent
/// wins.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(VarId, u32)>,
    degree: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Monomial { exps: vec![(v, 1)], degree: 1 }
    }

    pub fn from_exponents<I: IntoIterator<Item = (VarId, u32)>>(it: I) -> Self {
        let mut map: BTreeMap<VarId, u32> = BTreeMap::new();
        for (v, e) in it {
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        let degree = map.values().sum();
        Monomial { exps: map.into_iter().collect(), degree }
    }

    pub fn product_of<I: IntoIterator<Item = VarId>>(vars: I) -> Self {
        Self::from_exponents(vars.into_iter().map(|v| (v, 1)))
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.exps
    }

    pub fn exponent(&self, v: VarId) -> u32 {
        match self.exps.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    /// Variables with multiplicity, highest ranked first.
    pub fn variables(&self) -> impl Iterator<Item = VarId> + '_ {
        self.exps.iter().flat_map(|&(v, e)| std::iter::repeat(v).take(e as usize))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (a, b) = (&self.exps, &other.exps);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    exps.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    exps.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    exps.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        exps.extend_from_slice(&a[i..]);
        exps.extend_from_slice(&b[j..]);
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn mul_var(&self, v: VarId) -> Monomial {
        self.mul(&Monomial::var(v))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Vec<(VarId, u32)> = self
            .exps
            .iter()
            .filter_map(|&(v, e)| {
                let r = e - other.exponent(v);
                (r > 0).then_some((v, r))
            })
            .collect();
        Some(Monomial { exps, degree: self.degree - other.degree })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map: BTreeMap<VarId, u32> = self.exps.iter().copied().collect();
        for &(v, e) in &other.exps {
            let slot = map.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial::from_exponents(map)
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, _)| other.exponent(v) == 0)
    }

    /// `U!` for the exponent vector `U`.
    pub fn factorial(&self) -> BigInt {
        self.exps.iter().fold(BigInt::one(), |acc, &(_, e)| acc * factorial(e))
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&(_, e)| e == 1)
    }

    /// All divisors of total degree `k`.
    pub fn divisors_of_degree(&self, k: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(exps: &[(VarId, u32)], k: u32, cur: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
            if k == 0 {
                out.push(Monomial::from_exponents(cur.iter().copied()));
                return;
            }
            let Some((&(v, e), rest)) = exps.split_first() else { return };
            let room: u32 = rest.iter().map(|x| x.1).sum();
            for take in (0..=e.min(k)).rev() {
                if k - take > room {
                    continue;
                }
                cur.push((v, take));
                rec(rest, k - take, cur, out);
                cur.pop();
            }
        }
        rec(&self.exps, k, &mut cur, &mut out);
        out
    }

    pub(crate) fn format(&self, letter: char) -> String {
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|&(v, e)| {
                if e == 1 {
                    format!("{}{}", letter, v)
                } else {
                    format!("{}{}^{}", letter, v, e)
                }
            })
            .collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.exps, &other.exps);
        for (x, y) in a.iter().zip(b.iter()) {
            if x.0 != y.0 {
                // the monomial containing the higher-ranked variable is larger
                return y.0.cmp(&x.0);
            }
            if x.1 != y.1 {
                return x.1.cmp(&y.1);
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All monomials of degree `k` in the variables of `ring`, largest first.
pub fn monomials_of_degree(ring: &RingSpec, k: u32) -> Vec<Monomial> {
    let vars = ring.variables();
    let mut out = Vec::new();
    let mut cur: Vec<(VarId, u32)> = Vec::new();
    fn rec(vars: &[VarId], k: u32, cur: &mut Vec<(VarId, u32)>, out: &mut Vec<Monomial>) {
        if k == 0 {
            out.push(Monomial::from_exponents(cur.iter().copied()));
            return;
        }
        let Some((&v, rest)) = vars.split_first() else { return };
        let lo = if rest.is_empty() { k } else { 0 };
        for e in (lo..=k).rev() {
            cur.push((v, e));
            rec(rest, k - e, cur, out);
            cur.pop();
        }
    }
    rec(&vars, k, &mut cur, &mut out);
    out
}

/// A polynomial with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: RingSpec,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(ring: RingSpec) -> Self {
        Polynomial { ring, terms: BTreeMap::new() }
    }

    pub fn one(ring: RingSpec) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: RingSpec, c: Rational) -> Self {
        Self::monomial(ring, Monomial::one(), c)
    }

    pub fn monomial(ring: RingSpec, m: Monomial, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring, terms }
    }

    pub fn var(ring: RingSpec, row: usize, col: usize) -> Result<Self> {
        let v = ring.var(row, col)?;
        Ok(Self::monomial(ring, Monomial::var(v), Rational::one()))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(ring: RingSpec, it: I) -> Self {
        let mut p = Polynomial::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// The common degree of all terms, or `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|m| m.degree());
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Product in the ring's own basis. Divided powers multiply by
    /// `X^[U] X^[V] = C(U+V, U) X^[U+V]`.
    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_same(&other.ring)?;
        let mut out = Polynomial::zero(self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m = m1.mul(m2);
                let mut c = c1 * c2;
                if self.ring.flavor == Flavor::Divided {
                    c *= Rational::from_integer(divided_product_factor(m1, m2));
                }
                out.add_term(m, c);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ring);
        }
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    /// Multiply by a monomial in the usual basis.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().map(|(u, c)| (u.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.ring);
        for _ in 0..k {
            acc = acc.checked_mul(self).expect("same ring");
        }
        acc
    }

    /// Homogeneous component of degree `k`.
    pub fn component(&self, k: u32) -> Polynomial {
        Polynomial {
            ring: self.ring,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Support monomials, largest first.
    pub fn support(&self) -> Vec<Monomial> {
        self.terms.keys().rev().cloned().collect()
    }

    /// Canonical text with a chosen variable letter, terms largest first.
    pub fn format_with(&self, letter: char) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let body = m.format(letter);
            if m.is_one() {
                s.push_str(&fmt_rational(&a));
            } else if a.is_one() {
                s.push_str(&body);
            } else {
                s.push_str(&fmt_rational(&a));
                s.push('*');
                s.push_str(&body);
            }
        }
        s
    }

    /// Multiply through by the least common denominator and divide by the
    /// content so the result has coprime integer coefficients and a positive
    /// leading coefficient.
    pub fn primitive(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self.terms.values().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.terms.values().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let lead_neg = self.terms.values().next_back().map(|c| c.is_negative()).unwrap_or(false);
        if lead_neg {
            g = -g;
        }
        let factor = Rational::new(lcm, g);
        self.scale(&factor)
    }
}

pub(crate) fn divided_product_factor(m1: &Monomial, m2: &Monomial) -> BigInt {
    let mut f = BigInt::one();
    for &(v, e) in m1.exponents() {
        let e2 = m2.exponent(v);
        if e2 > 0 {
            f *= binomial((e + e2) as u64, e as u64);
        }
    }
    f
}

pub fn fmt_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.ring.flavor {
            Flavor::Usual => 'x',
            Flavor::Divided => 'X',
        };
        f.write_str(&self.format_with(letter))
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    /// Panics when the rings differ; see [`Polynomial::checked_add`].
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over different rings")
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over different rings")
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over different rings")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

/// Truncate `q` to `places` decimals. Integers print without a fractional
/// part.
pub fn truncate_decimal(q: &Rational, places: usize) -> String {
    if q.is_integer() {
        return q.numer().to_string();
    }
    let neg = q.is_negative();
    let a = q.abs();
    let scale = BigInt::from(10u32).pow(places as u32);
    let scaled = (a * Rational::from_integer(scale.clone())).to_integer();
    let (ip, fp) = scaled.div_rem(&scale);
    let mut s = String::new();
    if neg {
        s.push('-');
    }
    s.push_str(&ip.to_string());
    if places > 0 {
        let digits = fp.to_u64().unwrap_or(0);
        s.push('.');
        s.push_str(&format!("{:0width$}", digits, width = places));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn variable_count_and_rank() {
        let r = RingSpec::symmetric(4).unwrap();
        assert_eq!(r.nvars(), 10);
        let vars = r.variables();
        for (i, v) in vars.iter().enumerate() {
            assert_eq!(r.var_index(*v), i);
        }
        assert!(vars.windows(2).all(|w| w[0] < w[1]));
        let g = RingSpec::generic(3).unwrap();
        assert_eq!(g.nvars(), 9);
        for (i, v) in g.variables().iter().enumerate() {
            assert_eq!(g.var_index(*v), i);
        }
    }

    #[test]
    fn symmetric_var_canonicalizes() {
        let r = RingSpec::symmetric(3).unwrap();
        assert_eq!(r.var(3, 1).unwrap(), r.var(1, 3).unwrap());
        assert!(r.var(0, 1).is_err());
        assert!(r.var(1, 4).is_err());
    }

    #[test]
    fn lex_order() {
        let r = RingSpec::symmetric(2).unwrap();
        let x11 = r.var(1, 1).unwrap();
        let x12 = r.var(1, 2).unwrap();
        let x22 = r.var(2, 2).unwrap();
        let a = Monomial::product_of([x11, x22]);
        let b = Monomial::from_exponents([(x12, 2)]);
        assert!(a > b);
        assert!(Monomial::var(x11) > Monomial::from_exponents([(x12, 5)]));
        assert!(Monomial::from_exponents([(x11, 2)]) > a);
        let all = monomials_of_degree(&r, 2);
        assert_eq!(all.len(), 6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn divided_multiplication() {
        let r = RingSpec::symmetric(1).unwrap().with_flavor(Flavor::Divided);
        let x = Polynomial::var(r, 1, 1).unwrap();
        let x2 = &x * &x;
        let v = r.var(1, 1).unwrap();
        assert_eq!(x2.coefficient(&Monomial::from_exponents([(v, 2)])), int(2));
        let x3 = &x2 * &x;
        assert_eq!(x3.coefficient(&Monomial::from_exponents([(v, 3)])), int(6));
    }

    #[test]
    fn divisors() {
        let r = RingSpec::symmetric(3).unwrap();
        let m = Monomial::from_exponents([(r.var(1, 1).unwrap(), 2), (r.var(2, 3).unwrap(), 1)]);
        let d = m.divisors_of_degree(2);
        assert_eq!(d.len(), 2);
        assert!(d.iter().all(|x| x.divides(&m)));
    }

    #[test]
    fn truncation() {
        assert_eq!(truncate_decimal(&rat(5, 3), 1), "1.6");
        assert_eq!(truncate_decimal(&rat(55, 3), 2), "18.33");
        assert_eq!(truncate_decimal(&int(7), 2), "7");
        assert_eq!(truncate_decimal(&rat(429, 2), 1), "214.5");
        assert_eq!(truncate_decimal(&rat(889, 4), 2), "222.25");
        assert_eq!(truncate_decimal(&rat(1, 40), 1), "0.0");
    }

    #[test]
    fn primitive_normalizes() {
        let r = RingSpec::symmetric(2).unwrap();
        let p = Polynomial::from_terms(
            r,
            [
                (Monomial::var(r.var(1, 1).unwrap()), rat(-2, 3)),
                (Monomial::var(r.var(2, 2).unwrap()), rat(4, 3)),
            ],
        );
        assert_eq!(p.primitive().to_string(), "x[1,1] - 2*x[2,2]");
    }
}
