//! The truncated series ring: polynomials valid modulo `q^(T+1)`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::monomial::{Monomial, Var};
use super::polynomial::Polynomial;
use super::SeriesError;

/// A formal power series known exactly up to and including `q^T`. Terms with
/// q-exponent above the truncation order are discarded on construction and
/// after every product; the auxiliary variables are never truncated.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    body: Polynomial,
    trunc: u32,
}

/// First point of disagreement between two series: the graded-lex least
/// monomial whose coefficients differ, with both coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub monomial: Monomial,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "first difference at {}: lhs={}, rhs={}",
            self.monomial, self.lhs, self.rhs
        )
    }
}

impl TruncatedSeries {
    pub fn new(body: Polynomial, trunc: u32) -> Self {
        TruncatedSeries {
            body: body.truncate_q(trunc),
            trunc,
        }
    }

    pub fn zero(trunc: u32) -> Self {
        TruncatedSeries {
            body: Polynomial::zero(),
            trunc,
        }
    }

    pub fn one(trunc: u32) -> Self {
        TruncatedSeries {
            body: Polynomial::one(),
            trunc,
        }
    }

    /// Single-term series; the term vanishes if its q-exponent exceeds `trunc`.
    pub fn term(c: impl Into<BigInt>, m: Monomial, trunc: u32) -> Self {
        TruncatedSeries::new(Polynomial::term(c, m), trunc)
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    pub fn body(&self) -> &Polynomial {
        &self.body
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.body.is_one()
    }

    fn check_trunc(&self, rhs: &TruncatedSeries) -> Result<(), SeriesError> {
        if self.trunc != rhs.trunc {
            return Err(SeriesError::TruncMismatch(self.trunc, rhs.trunc));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_trunc(rhs)?;
        Ok(TruncatedSeries {
            body: &self.body + &rhs.body,
            trunc: self.trunc,
        })
    }

    pub fn sub(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_trunc(rhs)?;
        Ok(TruncatedSeries {
            body: &self.body - &rhs.body,
            trunc: self.trunc,
        })
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
        self.check_trunc(rhs)?;
        Ok(TruncatedSeries::new(&self.body * &rhs.body, self.trunc))
    }

    /// Multiply by an exact polynomial, re-truncating the result.
    pub fn mul_poly(&self, rhs: &Polynomial) -> TruncatedSeries {
        TruncatedSeries::new(&self.body * rhs, self.trunc)
    }

    pub fn scale(&self, c: &BigInt) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.scale(c),
            trunc: self.trunc,
        }
    }

    /// Multiplicative inverse in the truncated ring.
    ///
    /// The full `q^0` coefficient must be exactly 1 (not merely the constant
    /// term): a unit `q^0` layer is what makes the inverse's coefficients
    /// polynomial in the auxiliary variables.
    pub fn invert(&self) -> Result<TruncatedSeries, SeriesError> {
        if !self.body.coeff_of_q(0).is_one() {
            return Err(SeriesError::NotInvertible);
        }
        // s = 1 - u with u supported on q^1..q^T, so 1/s = sum u^j, j <= T.
        let u = &Polynomial::one() - &self.body;
        let mut inv = Polynomial::one();
        let mut power = Polynomial::one();
        for _ in 1..=self.trunc {
            power = (&power * &u).truncate_q(self.trunc);
            if power.is_zero() {
                break;
            }
            inv += &power;
        }
        Ok(TruncatedSeries {
            body: inv,
            trunc: self.trunc,
        })
    }

    /// Coefficient of `q^e` as an exact polynomial in `{x, a, b, t}`.
    pub fn coeff_at(&self, e: u32) -> Result<Polynomial, SeriesError> {
        if e > self.trunc {
            return Err(SeriesError::CoeffOutOfRange {
                requested: e,
                trunc: self.trunc,
            });
        }
        Ok(self.body.coeff_of_q(e))
    }

    /// Restrict to a lower truncation order.
    pub fn truncate_to(&self, trunc: u32) -> Result<TruncatedSeries, SeriesError> {
        if trunc > self.trunc {
            return Err(SeriesError::TruncationRaise {
                from: self.trunc,
                to: trunc,
            });
        }
        Ok(TruncatedSeries {
            body: self.body.truncate_q(trunc),
            trunc,
        })
    }

    /// The substitution `v -> -v` as a parity-keyed sign flip.
    pub fn flip_var_sign(&self, v: Var) -> TruncatedSeries {
        TruncatedSeries {
            body: self.body.flip_var_sign(v),
            trunc: self.trunc,
        }
    }

    /// Compares coefficients; `Ok(None)` means equal through `q^T`, otherwise
    /// the graded-lex least differing monomial is reported.
    pub fn equal_witness(&self, rhs: &TruncatedSeries) -> Result<Option<Witness>, SeriesError> {
        self.check_trunc(rhs)?;
        Ok(first_difference(&self.body, &rhs.body))
    }
}

/// Graded-lex least monomial where the two polynomials disagree.
pub(crate) fn first_difference(lhs: &Polynomial, rhs: &Polynomial) -> Option<Witness> {
    let mut li = lhs.iter().peekable();
    let mut ri = rhs.iter().peekable();
    loop {
        match (li.peek(), ri.peek()) {
            (None, None) => return None,
            (Some((m, c)), None) => {
                return Some(Witness {
                    monomial: **m,
                    lhs: (*c).clone(),
                    rhs: BigInt::zero(),
                })
            }
            (None, Some((m, c))) => {
                return Some(Witness {
                    monomial: **m,
                    lhs: BigInt::zero(),
                    rhs: (*c).clone(),
                })
            }
            (Some((ml, cl)), Some((mr, cr))) => {
                if ml < mr {
                    return Some(Witness {
                        monomial: **ml,
                        lhs: (*cl).clone(),
                        rhs: BigInt::zero(),
                    });
                } else if mr < ml {
                    return Some(Witness {
                        monomial: **mr,
                        lhs: BigInt::zero(),
                        rhs: (*cr).clone(),
                    });
                } else if cl != cr {
                    return Some(Witness {
                        monomial: **ml,
                        lhs: (*cl).clone(),
                        rhs: (*cr).clone(),
                    });
                }
                li.next();
                ri.next();
            }
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.body.fmt_terms(f)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod q^{})", self.body, self.trunc + 1)
    }
}
