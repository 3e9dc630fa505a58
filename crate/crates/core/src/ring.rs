//! Exact Laurent polynomials in `v` with integer coefficients.
//!
//! A [`LaurentPoly`] stores a dense coefficient window `[low, low + len)`
//! trimmed so that the first and last stored coefficients are nonzero. The
//! zero polynomial is the empty window with `low == 0`, so equality and
//! hashing are structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `v`
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * v^e`
    pub fn monomial(c: impl Into<BigInt>, e: i32) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: e, coeffs: vec![c] }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, &c.into());
        }
        p
    }

    fn from_window(low: i32, coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn max_exponent(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, e: i32) -> BigInt {
        let idx = e as i64 - self.low as i64;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.low + i as i32, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// If the polynomial is `±v^e`, returns `(sign, e)`.
    pub fn as_signed_monomial(&self) -> Option<(i32, i32)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let c = &self.coeffs[0];
        if c.is_one() {
            Some((1, self.low))
        } else if (-c).is_one() {
            Some((-1, self.low))
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: i32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        if self.is_zero() {
            self.low = e;
            self.coeffs.push(c.clone());
            return;
        }
        if e < self.low {
            let pad = (self.low - e) as usize;
            let mut v = vec![BigInt::zero(); pad];
            v.append(&mut self.coeffs);
            self.coeffs = v;
            self.low = e;
        }
        let idx = (e - self.low) as usize;
        if idx >= self.coeffs.len() {
            self.coeffs.resize(idx + 1, BigInt::zero());
        }
        self.coeffs[idx] += c;
        self.normalize();
    }

    /// Multiplies by `v^e`.
    pub fn shift(&self, e: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Value at `v = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// The bar involution `v -> v^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -self.max_exponent().unwrap(), coeffs }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// True iff every exponent is strictly negative, i.e. `p ∈ v^{-1}Z[v^{-1}]`.
    pub fn in_negative_part(&self) -> bool {
        self.max_exponent().is_none_or(|e| e < 0)
    }

    /// True iff every exponent is strictly positive, i.e. `p ∈ vZ[v]`.
    pub fn in_positive_part(&self) -> bool {
        self.min_exponent().is_none_or(|e| e > 0)
    }

    /// True iff all coefficients are nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `v^2 + 1 + v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<_> = self.terms().collect();
        for (k, (e, c)) in terms.into_iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = match e {
                0 => String::new(),
                1 => "v".to_string(),
                _ => format!("v^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}{mono}")?;
            }
        }
        Ok(())
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but total order, used only to make containers deterministic.
impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        let a: Vec<_> = self.terms().collect();
        let b: Vec<_> = other.terms().collect();
        a.cmp(&b)
    }
}

impl<'a> Add<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl<'a> AddAssign<&'a LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &'a LaurentPoly) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.clone();
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.max_exponent().unwrap().max(rhs.max_exponent().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        *self = LaurentPoly::from_window(low, coeffs);
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl<'a> Sub<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl<'a> SubAssign<&'a LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &'a LaurentPoly) {
        *self += &(-rhs);
    }
}

impl<'a> Mul<&'a LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_window(self.low + rhs.low, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl<'a> MulAssign<&'a LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &'a LaurentPoly) {
        *self = &*self * rhs;
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

/// Balanced quantum integer `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}`.
pub fn qint(n: u32) -> LaurentPoly {
    LaurentPoly::from_terms((0..n).map(|j| (n as i32 - 1 - 2 * j as i32, 1)))
}

/// Signed quantum integer: `[n]` for `n >= 0` and `-[-n]` otherwise.
pub fn qint_signed(n: i64) -> LaurentPoly {
    if n >= 0 {
        qint(n as u32)
    } else {
        -qint((-n) as u32)
    }
}

/// `[n]! = [1][2]...[n]`
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, j| &acc * &qint(j))
}

/// Balanced Gaussian binomial. Zero when `k < 0` or `k > n`.
pub fn qbinom(n: i64, k: i64) -> LaurentPoly {
    if k < 0 || k > n {
        return LaurentPoly::zero();
    }
    let k = k.min(n - k);
    // [n, k] = v^{-k} [n-1, k] + v^{n-k} [n-1, k-1]
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let width = (k.min(m) + 1) as usize;
        let mut next = vec![LaurentPoly::zero(); width];
        for (j, slot) in next.iter_mut().enumerate() {
            let j = j as i64;
            let mut acc = LaurentPoly::zero();
            if let Some(p) = row.get(j as usize) {
                acc += &p.shift(-(j as i32));
            }
            if j >= 1 {
                if let Some(p) = row.get(j as usize - 1) {
                    acc += &p.shift((m - j) as i32);
                }
            }
            *slot = acc;
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

pub fn bar(p: &LaurentPoly) -> LaurentPoly {
    p.bar()
}

/// The unique bar-invariant `γ` with `p - γ ∈ v^{-1}Z[v^{-1}]`.
pub fn symmetrize_correction(p: &LaurentPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (e, c) in p.terms() {
        match e.cmp(&0) {
            Ordering::Less => {}
            Ordering::Equal => out.add_term(0, c),
            Ordering::Greater => {
                out.add_term(e, c);
                out.add_term(-e, c);
            }
        }
    }
    out
}

/// Exact quotient `p / q`, failing with [`Error::NonDivisible`] when `q` does
/// not divide `p` in `Z[v, v^{-1}]`.
pub fn exact_divide(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly> {
    if q.is_zero() {
        return Err(Error::NonDivisible);
    }
    if p.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    let q_hi = q.max_exponent().unwrap();
    let q_lead = q.coeff(q_hi);
    let min_quot_exp = p.min_exponent().unwrap() - q.min_exponent().unwrap();
    let mut rem = p.clone();
    let mut quot = LaurentPoly::zero();
    while let Some(r_hi) = rem.max_exponent() {
        let e = r_hi - q_hi;
        if e < min_quot_exp {
            return Err(Error::NonDivisible);
        }
        let (t, r) = rem.coeff(r_hi).div_rem(&q_lead);
        if !r.is_zero() {
            return Err(Error::NonDivisible);
        }
        let step = LaurentPoly::monomial(t, e);
        rem -= &(&step * q);
        quot += &step;
    }
    Ok(quot)
}

impl Serialize for LaurentPoly {
    /// `[[exponent, coefficient], ...]` in ascending exponent order.
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.num_terms()))?;
        for (e, c) in self.terms() {
            match c.to_i64() {
                Some(small) => seq.serialize_element(&(e, small))?,
                None => seq.serialize_element(&(e, c.to_string()))?,
            }
        }
        seq.end()
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Small(i64),
    Big(String),
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PolyVisitor;
        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of [exponent, coefficient] pairs")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<LaurentPoly, A::Error> {
                let mut p = LaurentPoly::zero();
                while let Some((e, c)) = seq.next_element::<(i32, CoeffRepr)>()? {
                    let c = match c {
                        CoeffRepr::Small(x) => BigInt::from(x),
                        CoeffRepr::Big(s) => s.parse::<BigInt>().map_err(de::Error::custom)?,
                    };
                    p.add_term(e, &c);
                }
                Ok(p)
            }
        }
        deserializer.deserialize_seq(PolyVisitor)
    }
}
