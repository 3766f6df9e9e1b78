//! Exact integer Laurent polynomials in `A`, and their extension by a
//! grading variable `h` subject to `h^2 = 1`.
//!
//! Coefficients are arbitrary precision. Both types are kept in canonical
//! form: no stored coefficient is ever zero, so derived equality is
//! coefficient-wise equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A sparse Laurent polynomial `sum c_e A^e` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * A^exp`.
    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs; repeated
    /// exponents are summed.
    pub fn from_terms<C: Into<BigInt>>(terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    /// Adds `c * A^exp` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `A^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Multiplies every coefficient by `k`.
    pub fn scaled(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// The set `{ e mod 4 : coeff(e) != 0 }`.
    pub fn exponent_residues(&self) -> BTreeSet<u8> {
        self.terms.keys().map(|e| e.rem_euclid(4) as u8).collect()
    }

    pub fn all_exponents_even(&self) -> bool {
        self.terms.keys().all(|e| e % 2 == 0)
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>, suffix: &str, first: &mut bool) -> fmt::Result {
        for (exp, coeff) in self.terms.iter().rev() {
            let negative = coeff.is_negative();
            if *first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            *first = false;

            let magnitude = coeff.abs();
            let has_var = *exp != 0 || !suffix.is_empty();
            let mut wrote = false;
            if !(magnitude.is_one() && has_var) {
                write!(f, "{magnitude}")?;
                wrote = true;
            }
            if *exp != 0 {
                if wrote {
                    f.write_str(" ")?;
                }
                if *exp == 1 {
                    f.write_str("A")?;
                } else {
                    write!(f, "A^{exp}")?;
                }
                wrote = true;
            }
            if !suffix.is_empty() {
                if wrote {
                    f.write_str(" ")?;
                }
                f.write_str(suffix)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        self.fmt_terms(f, "", &mut first)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
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

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c);
        }
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

/// An element `even + odd * h` of `Z[A, A^-1][h] / (h^2 - 1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct HLaurent {
    pub even: LaurentPoly,
    pub odd: LaurentPoly,
}

impl HLaurent {
    pub fn new(even: LaurentPoly, odd: LaurentPoly) -> Self {
        Self { even, odd }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    /// `p * h`.
    pub fn with_h(p: LaurentPoly) -> Self {
        Self {
            even: LaurentPoly::zero(),
            odd: p,
        }
    }

    /// `p * h^bit` for `bit` in {0, 1}; higher powers reduce mod 2.
    pub fn graded(p: LaurentPoly, h_exp: u32) -> Self {
        if h_exp.is_multiple_of(2) {
            p.into()
        } else {
            Self::with_h(p)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.even.is_zero() && self.odd.is_zero()
    }

    /// Substitutes `h = 1`.
    pub fn eval_h1(&self) -> LaurentPoly {
        &self.even + &self.odd
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Term records `(a_exponent, h_exponent, coefficient)`, sorted by
    /// `(h_exponent, a_exponent)`.
    pub fn records(&self) -> Vec<TermRecord> {
        let even = self.even.terms().map(|(e, c)| TermRecord(e, 0, c.to_string()));
        let odd = self.odd.terms().map(|(e, c)| TermRecord(e, 1, c.to_string()));
        even.chain(odd).collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<Self, ParsePolyError> {
        let mut out = Self::zero();
        for TermRecord(exp, h, coeff) in records {
            let c = BigInt::from_str(coeff).map_err(|_| ParsePolyError::BadCoefficient(coeff.clone()))?;
            match h {
                0 => out.even.add_term(*exp, c),
                1 => out.odd.add_term(*exp, c),
                other => return Err(ParsePolyError::BadHExponent(*other)),
            }
        }
        Ok(out)
    }
}

impl From<LaurentPoly> for HLaurent {
    fn from(even: LaurentPoly) -> Self {
        Self {
            even,
            odd: LaurentPoly::zero(),
        }
    }
}

impl fmt::Display for HLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        self.odd.fmt_terms(f, "h", &mut first)?;
        self.even.fmt_terms(f, "", &mut first)
    }
}

impl Add<&HLaurent> for &HLaurent {
    type Output = HLaurent;
    fn add(self, rhs: &HLaurent) -> HLaurent {
        HLaurent {
            even: &self.even + &rhs.even,
            odd: &self.odd + &rhs.odd,
        }
    }
}

impl Add for HLaurent {
    type Output = HLaurent;
    fn add(mut self, rhs: HLaurent) -> HLaurent {
        self += &rhs;
        self
    }
}

impl AddAssign<&HLaurent> for HLaurent {
    fn add_assign(&mut self, rhs: &HLaurent) {
        self.even += &rhs.even;
        self.odd += &rhs.odd;
    }
}

impl Neg for &HLaurent {
    type Output = HLaurent;
    fn neg(self) -> HLaurent {
        HLaurent {
            even: -&self.even,
            odd: -&self.odd,
        }
    }
}

impl Neg for HLaurent {
    type Output = HLaurent;
    fn neg(self) -> HLaurent {
        -&self
    }
}

impl Sub<&HLaurent> for &HLaurent {
    type Output = HLaurent;
    fn sub(self, rhs: &HLaurent) -> HLaurent {
        HLaurent {
            even: &self.even - &rhs.even,
            odd: &self.odd - &rhs.odd,
        }
    }
}

impl Sub for HLaurent {
    type Output = HLaurent;
    fn sub(self, rhs: HLaurent) -> HLaurent {
        &self - &rhs
    }
}

impl Mul<&HLaurent> for &HLaurent {
    type Output = HLaurent;
    fn mul(self, rhs: &HLaurent) -> HLaurent {
        // (a + bh)(c + dh) = (ac + bd) + (ad + bc)h
        let ac = &self.even * &rhs.even;
        let bd = &self.odd * &rhs.odd;
        let ad = &self.even * &rhs.odd;
        let bc = &self.odd * &rhs.even;
        HLaurent {
            even: ac + bd,
            odd: ad + bc,
        }
    }
}

impl Mul for HLaurent {
    type Output = HLaurent;
    fn mul(self, rhs: HLaurent) -> HLaurent {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for &HLaurent {
    type Output = HLaurent;
    fn mul(self, rhs: &LaurentPoly) -> HLaurent {
        HLaurent {
            even: &self.even * rhs,
            odd: &self.odd * rhs,
        }
    }
}

impl Sum for HLaurent {
    fn sum<I: Iterator<Item = HLaurent>>(iter: I) -> Self {
        iter.fold(HLaurent::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

/// One serialized term: `[a_exponent, h_exponent, "coefficient"]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord(pub i64, pub u8, pub String);

impl Serialize for HLaurent {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for HLaurent {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        HLaurent::from_records(&records).map_err(serde::de::Error::custom)
    }
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        HLaurent::from(self.clone()).serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let p = HLaurent::deserialize(deserializer)?;
        if !p.odd.is_zero() {
            return Err(serde::de::Error::custom(ParsePolyError::BadHExponent(1)));
        }
        Ok(p.even)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParsePolyError {
    #[error("unexpected character {found:?} at byte {pos}")]
    Unexpected { found: char, pos: usize },
    #[error("unexpected end of input")]
    Eof,
    #[error("invalid coefficient {0:?}")]
    BadCoefficient(String),
    #[error("h exponent must be 0 or 1, got {0}")]
    BadHExponent(u8),
}

/// Parses the display syntax, e.g. `A^12 h - A^4 h - A^6 - 2 A^2 - A^-2`.
impl FromStr for HLaurent {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parser = TermParser { src: s, pos: 0 };
        let mut out = HLaurent::zero();
        parser.skip_ws();
        if parser.peek().is_none() {
            return Err(ParsePolyError::Eof);
        }
        let mut first = true;
        while parser.peek().is_some() {
            let mut negative = false;
            match parser.peek() {
                Some('+') if !first => parser.bump(),
                Some('-') => {
                    negative = true;
                    parser.bump();
                }
                Some(c) if !first => {
                    return Err(ParsePolyError::Unexpected {
                        found: c,
                        pos: parser.pos,
                    })
                }
                _ => {}
            }
            parser.skip_ws();
            let (exp, has_h, mut coeff) = parser.term()?;
            if negative {
                coeff = -coeff;
            }
            if has_h {
                out.odd.add_term(exp, coeff);
            } else {
                out.even.add_term(exp, coeff);
            }
            parser.skip_ws();
            first = false;
        }
        Ok(out)
    }
}

impl FromStr for LaurentPoly {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let p: HLaurent = s.parse()?;
        if !p.odd.is_zero() {
            return Err(ParsePolyError::BadHExponent(1));
        }
        Ok(p.even)
    }
}

struct TermParser<'a> {
    src: &'a str,
    pos: usize,
}

impl TermParser<'_> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == '*') {
            self.bump();
        }
    }

    fn digits(&mut self) -> &str {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        &self.src[start..self.pos]
    }

    fn term(&mut self) -> Result<(i64, bool, BigInt), ParsePolyError> {
        let digits = self.digits();
        let mut coeff = if digits.is_empty() {
            None
        } else {
            Some(BigInt::from_str(digits).map_err(|_| ParsePolyError::BadCoefficient(digits.into()))?)
        };
        self.skip_ws();
        let mut exp = 0i64;
        let mut saw_var = false;
        if self.peek() == Some('A') {
            saw_var = true;
            self.bump();
            if self.peek() == Some('^') {
                self.bump();
                let negative = if self.peek() == Some('-') {
                    self.bump();
                    true
                } else {
                    false
                };
                let d = self.digits();
                if d.is_empty() {
                    return match self.peek() {
                        Some(c) => Err(ParsePolyError::Unexpected {
                            found: c,
                            pos: self.pos,
                        }),
                        None => Err(ParsePolyError::Eof),
                    };
                }
                let magnitude: i64 = d.parse().map_err(|_| ParsePolyError::BadCoefficient(d.into()))?;
                exp = if negative { -magnitude } else { magnitude };
            } else {
                exp = 1;
            }
            self.skip_ws();
        }
        let mut has_h = false;
        if self.peek() == Some('h') {
            saw_var = true;
            has_h = true;
            self.bump();
        }
        if coeff.is_none() {
            if !saw_var {
                return match self.peek() {
                    Some(c) => Err(ParsePolyError::Unexpected {
                        found: c,
                        pos: self.pos,
                    }),
                    None => Err(ParsePolyError::Eof),
                };
            }
            coeff = Some(BigInt::one());
        }
        Ok((exp, has_h, coeff.unwrap_or_default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn hp(s: &str) -> HLaurent {
        s.parse().unwrap()
    }

    fn circle() -> LaurentPoly {
        p("-A^2 - A^-2")
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((p("A^2") + p("-A^2")).is_zero());
    }

    #[test]
    fn doubling() {
        assert_eq!(circle() + circle(), p("-2 A^2 - 2 A^-2"));
    }

    #[test]
    fn add_mixed_grades() {
        let sum = hp("A^12 h - A^4 h") + hp("-A^6 - 2 A^2 - A^-2");
        assert_eq!(sum, hp("A^12 h - A^4 h - A^6 - 2 A^2 - A^-2"));
        assert_eq!(sum.odd, p("A^12 - A^4"));
        assert_eq!(sum.even, p("-A^6 - 2 A^2 - A^-2"));
    }

    #[test]
    fn circle_squared() {
        assert_eq!(circle() * circle(), p("A^4 + 2 + A^-4"));
    }

    #[test]
    fn h_squared_is_one() {
        let x = HLaurent::with_h(p("A^2"));
        let y = HLaurent::with_h(p("A^-2"));
        assert_eq!(&x * &y, HLaurent::one());
    }

    #[test]
    fn disoriented_singular_state_product() {
        // A^4 (-A^2 - A^-2)^2 (-A^4 - A^-4) h
        let term = HLaurent::with_h(LaurentPoly::monomial(4, 1))
            * HLaurent::from(circle().pow(2))
            * HLaurent::from(p("-A^4 - A^-4"));
        assert_eq!(term, hp("-A^12 h - 2 A^8 h - 2 A^4 h - 2 h - A^-4 h"));
    }

    #[test]
    fn powers_of_circle() {
        assert_eq!(circle().pow(0), LaurentPoly::one());
        assert_eq!(circle().pow(2), p("A^4 + 2 + A^-4"));
        // binomial expansion of (A^2 + A^-2)^4, sign (-1)^4
        let binomial = LaurentPoly::from_terms((0..=4).map(|k| {
            let c = [1, 4, 6, 4, 1][k as usize];
            (2 * (4 - k) - 2 * k, c)
        }));
        assert_eq!(circle().pow(4), binomial);
        assert_eq!(circle().pow(4), p("A^8 + 4 A^4 + 6 + 4 A^-4 + A^-8"));
        assert_eq!(HLaurent::from(circle()).pow(4), HLaurent::from(circle().pow(4)));
    }

    #[test]
    fn eval_at_h_one() {
        let r = hp("A^12 h - A^4 h - A^6 - 2 A^2 - A^-2");
        assert_eq!(r.eval_h1(), p("A^12 - A^6 - A^4 - 2 A^2 - A^-2"));
        assert!(HLaurent::zero().eval_h1().is_zero());
        assert_eq!(HLaurent::with_h(p("A^4")).eval_h1(), p("A^4"));
    }

    #[test]
    fn residues_mod_four() {
        assert_eq!(p("A^12 - A^4").exponent_residues(), BTreeSet::from([0]));
        assert_eq!(p("-A^6 - 2 A^2 - A^-2").exponent_residues(), BTreeSet::from([2]));
        assert!(LaurentPoly::zero().exponent_residues().is_empty());
        assert_eq!(p("A^-3 + A").exponent_residues(), BTreeSet::from([1]));
    }

    #[test]
    fn display_matches_conventional_order() {
        let r = hp("-A^6 - 2 A^2 - A^-2 + A^12 h - A^4 h");
        assert_eq!(r.to_string(), "A^12 h - A^4 h - A^6 - 2 A^2 - A^-2");
        assert_eq!(HLaurent::zero().to_string(), "0");
        assert_eq!(hp("-2 h + 3").to_string(), "-2 h + 3");
        assert_eq!(p("A - 1").to_string(), "A - 1");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!("".parse::<HLaurent>().is_err());
        assert!("A^".parse::<HLaurent>().is_err());
        assert!("A^2 A^3".parse::<HLaurent>().is_err());
        assert!("x".parse::<HLaurent>().is_err());
        assert!("A h".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn records_sorted_by_grade_then_exponent() {
        let r = hp("A^12 h - A^4 h - A^6 - 2 A^2 - A^-2");
        let recs = r.records();
        let keys: Vec<(u8, i64)> = recs.iter().map(|t| (t.1, t.0)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(recs[0], TermRecord(-2, 0, "-1".into()));
        assert_eq!(HLaurent::from_records(&recs).unwrap(), r);
        assert!(HLaurent::from_records(&[TermRecord(0, 2, "1".into())]).is_err());
    }

    #[test]
    fn huge_coefficients_do_not_overflow() {
        let big = LaurentPoly::monomial(0, 2).pow(200);
        assert_eq!(big.coeff(0), BigInt::from(2).pow(200));
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-8i64..8, -20i64..20), 0..6).prop_map(LaurentPoly::from_terms)
    }

    fn arb_h() -> impl Strategy<Value = HLaurent> {
        (arb_poly(), arb_poly()).prop_map(|(e, o)| HLaurent::new(e, o))
    }

    fn canonical(p: &HLaurent) -> bool {
        p.even.terms().chain(p.odd.terms()).all(|(_, c)| !c.is_zero())
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_h(), b in arb_h(), c in arb_h()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!(canonical(&(&a * &b)) && canonical(&(&a + &b)) && canonical(&(&a - &b)));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn h_twice_is_identity(x in arb_poly(), y in arb_poly()) {
            let hx = HLaurent::with_h(x.clone());
            let hy = HLaurent::with_h(y.clone());
            prop_assert_eq!(&hx * &hy, HLaurent::from(&x * &y));
        }

        #[test]
        fn eval_h1_is_a_ring_map(a in arb_h(), b in arb_h()) {
            prop_assert_eq!((&a * &b).eval_h1(), &a.eval_h1() * &b.eval_h1());
        }

        #[test]
        fn display_parse_round_trip(a in arb_h()) {
            let back: HLaurent = if a.is_zero() { HLaurent::zero() } else { a.to_string().parse().unwrap() };
            prop_assert_eq!(back, a);
        }
    }
}
