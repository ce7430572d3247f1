//! Sparse Laurent polynomials in `v` with integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exponent → non-zero coefficient. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i64>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `coeff · v^exp`.
    pub fn monomial(exp: i32, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    /// `v^exp`.
    pub fn v_pow(exp: i32) -> Self {
        Self::monomial(exp, 1)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i32, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (e, c * k)).collect(),
        }
    }

    /// The substitution `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    /// `Some(k)` iff the polynomial is exactly `v^k`.
    pub fn as_monomial(&self) -> Option<i32> {
        match self.terms.iter().next() {
            Some((&e, &1)) if self.terms.len() == 1 => Some(e),
            _ => None,
        }
    }

    /// A polynomial in `v` (no negative exponents).
    pub fn is_polynomial(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 0)
    }

    /// Lies in `vZ[v]` (zero included).
    pub fn is_divisible_by_v(&self) -> bool {
        self.min_degree().is_none_or(|d| d >= 1)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    /// The unique `α` with `α = ᾱ` and `self − α ∈ vZ[v]`, built from the
    /// terms of degree `≤ 0`.
    pub fn symmetric_correction(&self) -> Self {
        let mut out = Self::zero();
        for (&e, &c) in self.terms.range(..=0) {
            out.add_term(e, c);
            if e != 0 {
                out.add_term(-e, c);
            }
        }
        out
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, &c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        self.scale(-1)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, &c)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.unsigned_abs();
            match (e, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => f.write_str("v")?,
                (1, _) => write!(f, "{a}v")?,
                (_, 1) => write!(f, "v^{e}")?,
                _ => write!(f, "{a}v^{e}")?,
            }
        }
        Ok(())
    }
}

/// Serialized as a map from exponent (as a string) to coefficient.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<String, i64> = self
            .terms
            .iter()
            .map(|(e, c)| (e.to_string(), *c))
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let map = BTreeMap::<String, i64>::deserialize(deserializer)?;
        let mut p = LaurentPoly::zero();
        for (e, c) in map {
            let e: i32 = e.parse().map_err(serde::de::Error::custom)?;
            p.add_term(e, c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = LaurentPoly::monomial(2, 3);
        p.add_term(2, -3);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn arithmetic() {
        let a = LaurentPoly::from_terms([(-1, 1), (1, 1)]);
        let b = LaurentPoly::from_terms([(0, 2), (1, -1)]);
        assert_eq!(
            &a * &b,
            LaurentPoly::from_terms([(-1, 2), (0, -1), (1, 2), (2, -1)])
        );
        assert_eq!((&a + &b).eval_one(), 3);
        assert_eq!(a.bar(), a);
        assert!(a.is_bar_invariant());
        assert_eq!(b.shift(-1), LaurentPoly::from_terms([(-1, 2), (0, -1)]));
    }

    #[test]
    fn correction_is_symmetric_and_clears_nonpositive_part() {
        let a = LaurentPoly::from_terms([(-2, 3), (0, 1), (1, 4), (3, -2)]);
        let alpha = a.symmetric_correction();
        assert!(alpha.is_bar_invariant());
        assert!((&a - &alpha).is_divisible_by_v());
    }

    #[test]
    fn monomial_detection() {
        assert_eq!(LaurentPoly::v_pow(6).as_monomial(), Some(6));
        assert_eq!(LaurentPoly::monomial(6, 2).as_monomial(), None);
        assert_eq!(LaurentPoly::zero().as_monomial(), None);
    }

    #[test]
    fn display() {
        assert_eq!(
            LaurentPoly::from_terms([(0, 1), (1, 1)]).to_string(),
            "1 + v"
        );
        assert_eq!(
            LaurentPoly::from_terms([(-1, -2), (3, 1)]).to_string(),
            "-2v^-1 + v^3"
        );
    }

    #[test]
    fn json_round_trip() {
        let p = LaurentPoly::from_terms([(-1, 2), (10, 1), (2, -5)]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"-1":2,"10":1,"2":-5}"#);
        assert_eq!(serde_json::from_str::<LaurentPoly>(&s).unwrap(), p);
    }
}
