//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by the graded-lex monomial order, so
//! iteration, serialization and equality witnesses are deterministic. The
//! invariant throughout: no stored coefficient is zero.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::term(BigInt::one(), Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c.into(), Monomial::one())
    }

    /// Single-term polynomial `c * m`. The zero coefficient yields the zero
    /// polynomial.
    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in iter {
            p.add_term(m, &c);
        }
        p
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.times(m), v.clone()))
                .collect(),
        }
    }

    pub fn max_q_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.q_exp()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exp(v)).max().unwrap_or(0)
    }

    /// Drops every term whose q-exponent exceeds `t`.
    pub fn truncate_q(&self, t: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.q_exp() <= t)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// The substitution `q -> q^factor`.
    pub fn substitute_q_power(&self, factor: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.scale_q(factor), c.clone()))
                .collect(),
        }
    }

    /// The substitution `v -> -v`, realized as a sign flip on terms where
    /// `v` has odd exponent.
    pub fn flip_var_sign(&self, v: Var) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.exp(v) % 2 == 1 { -c } else { c.clone() };
                    (*m, c)
                })
                .collect(),
        }
    }

    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|m| m.without_q().is_one())
    }

    /// Coefficient of `q^e` as a polynomial in the remaining variables.
    pub fn coeff_of_q(&self, e: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.q_exp() == e)
                .map(|(m, c)| (m.without_q(), c.clone()))
                .collect(),
        }
    }

    fn mul_impl(&self, rhs: &Polynomial) -> Polynomial {
        #[cfg(feature = "parallel")]
        {
            const PAR_THRESHOLD: usize = 1 << 14;
            if self.num_terms() * rhs.num_terms() >= PAR_THRESHOLD {
                return self.mul_parallel(rhs);
            }
        }
        let mut out = Polynomial::zero();
        for (ml, cl) in &self.terms {
            for (mr, cr) in &rhs.terms {
                out.add_term(ml.times(mr), &(cl * cr));
            }
        }
        out
    }

    #[cfg(feature = "parallel")]
    fn mul_parallel(&self, rhs: &Polynomial) -> Polynomial {
        use rayon::prelude::*;
        let lhs: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        lhs.par_chunks(64)
            .map(|chunk| {
                let mut part = Polynomial::zero();
                for (ml, cl) in chunk {
                    for (mr, cr) in &rhs.terms {
                        part.add_term(ml.times(mr), &(*cl * cr));
                    }
                }
                part
            })
            .reduce(Polynomial::zero, |mut acc, part| {
                acc += &part;
                acc
            })
    }

    /// Renders the shared canonical text form, ascending graded-lex:
    /// `1 - q - q^2 + q^3`, `x + x^2`, `2*q^2*x`.
    pub(crate) fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", abs, m)?;
            }
        }
        Ok(())
    }

    /// JSON term array: `[{"coeff": "-1", "exps": {"q":1,"x":0,...}}, ...]`
    /// in ascending graded-lex order.
    pub fn to_json_terms(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = serde_json::Map::new();
                for v in Var::ALL {
                    exps.insert(v.symbol().to_string(), serde_json::json!(m.exp(v)));
                }
                serde_json::json!({ "coeff": c.to_string(), "exps": exps })
            })
            .collect();
        serde_json::Value::Array(terms)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c);
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, &(-c));
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.mul_impl(rhs)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(pairs: &[(u32, i64)]) -> Polynomial {
        Polynomial::from_terms(
            pairs
                .iter()
                .map(|&(e, c)| (Monomial::q(e), BigInt::from(c))),
        )
    }

    #[test]
    fn difference_of_squares() {
        let p = q_poly(&[(0, 1), (1, 1)]);
        let m = q_poly(&[(0, 1), (1, -1)]);
        assert_eq!(&p * &m, q_poly(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let p = q_poly(&[(0, 1), (1, 1)]);
        let sum = &p - &p;
        assert!(sum.is_zero());
        assert_eq!(sum.num_terms(), 0);
    }

    #[test]
    fn display_matches_canonical_form() {
        let p = q_poly(&[(0, 1), (1, -1), (2, -1), (3, 1)]);
        assert_eq!(p.to_string(), "1 - q - q^2 + q^3");
        let mixed = Polynomial::from_terms([
            (Monomial::x(1), BigInt::from(1)),
            (Monomial::x(2), BigInt::from(1)),
        ]);
        assert_eq!(mixed.to_string(), "x + x^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let c2 = Polynomial::term(2, Monomial::q(2).times(&Monomial::x(1)));
        assert_eq!(c2.to_string(), "2*q^2*x");
    }

    #[test]
    fn flip_var_sign_is_an_involution() {
        let p = Polynomial::from_terms([
            (Monomial::x(1).times(&Monomial::q(2)), BigInt::from(3)),
            (Monomial::x(2), BigInt::from(-5)),
            (Monomial::one(), BigInt::from(7)),
        ]);
        let flipped = p.flip_var_sign(Var::X);
        assert_eq!(flipped.coeff(&Monomial::x(1).times(&Monomial::q(2))), BigInt::from(-3));
        assert_eq!(flipped.coeff(&Monomial::x(2)), BigInt::from(-5));
        assert_eq!(flipped.flip_var_sign(Var::X), p);
    }
}
