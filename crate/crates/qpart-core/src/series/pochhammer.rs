//! q-Pochhammer products and Gaussian binomial coefficients.
//!
//! Pochhammer constructors take an explicit step monomial so products in the
//! `q^2` ring, like `(q^2; q^2)_n` or `(x q^{2n+2}; q^2)_inf`, share one code
//! path with the plain base-`q` ones.

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::Monomial;
use super::polynomial::Polynomial;
use super::truncated::TruncatedSeries;
use super::SeriesError;

/// Sign of the base term in a Pochhammer factor `(1 - sign * base * step^i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn coeff(self) -> BigInt {
        match self {
            Sign::Plus => BigInt::from(-1),
            Sign::Minus => BigInt::one(),
        }
    }
}

/// Finite product `prod_{i=0}^{n-1} (1 - sign * base * step^i)`, truncated.
pub fn poch_finite(
    sign: Sign,
    base: Monomial,
    step: Monomial,
    n: u32,
    trunc: u32,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(trunc);
    let mut shifted = base;
    for _ in 0..n {
        // a factor entirely above the truncation order is 1 mod q^(T+1)
        if shifted.q_exp() <= trunc {
            let factor = TruncatedSeries::new(
                &Polynomial::one() + &Polynomial::term(sign.coeff(), shifted),
                trunc,
            );
            out = out.mul(&factor).expect("equal truncation by construction");
        }
        shifted = shifted.times(&step);
    }
    out
}

/// Infinite product `prod_{i>=0} (1 - sign * base * step^i)`, truncated.
///
/// Both the base and the step must carry a positive power of `q`; otherwise
/// infinitely many factors touch every coefficient and the product has no
/// truncated meaning.
pub fn poch_infinite(
    sign: Sign,
    base: Monomial,
    step: Monomial,
    trunc: u32,
) -> Result<TruncatedSeries, SeriesError> {
    if base.q_exp() == 0 || step.q_exp() == 0 {
        return Err(SeriesError::DivergentProduct);
    }
    let mut out = TruncatedSeries::one(trunc);
    let mut shifted = base;
    while shifted.q_exp() <= trunc {
        let factor = TruncatedSeries::new(
            &Polynomial::one() + &Polynomial::term(sign.coeff(), shifted),
            trunc,
        );
        out = out.mul(&factor).expect("equal truncation by construction");
        shifted = shifted.times(&step);
    }
    Ok(out)
}

/// `(base; q)_n`: the finite q-Pochhammer symbol with the default step `q`.
pub fn pochhammer_finite(base: Monomial, n: u32, trunc: u32) -> TruncatedSeries {
    poch_finite(Sign::Plus, base, Monomial::q(1), n, trunc)
}

/// `(base; q)_inf` with the default step `q`.
pub fn pochhammer_infinite(base: Monomial, trunc: u32) -> Result<TruncatedSeries, SeriesError> {
    poch_infinite(Sign::Plus, base, Monomial::q(1), trunc)
}

/// Exact polynomial `prod_{i=0}^{len-1} (1 - q^{base_exp + i*step_exp})`.
///
/// Returns `Some(zero)` as soon as a factor `(1 - q^0)` appears, and `None`
/// when a factor would need a negative exponent without any zero factor
/// killing the product (the value is then a Laurent expression, which this
/// ring does not represent).
pub fn poch_polynomial(base_exp: i64, step_exp: u32, len: u32) -> Option<Polynomial> {
    let mut exps = Vec::with_capacity(len as usize);
    let mut laurent = false;
    for i in 0..len {
        let e = base_exp + i64::from(i) * i64::from(step_exp);
        if e == 0 {
            return Some(Polynomial::zero());
        }
        if e < 0 {
            laurent = true;
        } else {
            exps.push(e as u32);
        }
    }
    if laurent {
        return None;
    }
    let mut out = Polynomial::one();
    for e in exps {
        out = &out * &(&Polynomial::one() - &Polynomial::term(1, Monomial::q(e)));
    }
    Some(out)
}

/// Gaussian binomial `[a+b over b]_q`: the generating function for
/// partitions fitting in an `a x b` box; zero when either argument is
/// negative.
pub fn q_binomial(a: i64, b: i64) -> Polynomial {
    if a < 0 || b < 0 {
        return Polynomial::zero();
    }
    q_binomial_top(a + b, b)
}

/// Gaussian binomial `[top over bottom]_q`, zero unless `0 <= bottom <= top`.
///
/// Computed by the Pascal-style recurrence
/// `[m over k] = [m-1 over k-1] + q^k [m-1 over k]`, which stays inside the
/// polynomial ring; the quotient-of-Pochhammers route exists as an
/// independent cross-check in the test suite.
pub fn q_binomial_top(top: i64, bottom: i64) -> Polynomial {
    if bottom < 0 || bottom > top {
        return Polynomial::zero();
    }
    // symmetry keeps the DP row short
    let k = bottom.min(top - bottom) as usize;
    let m = top as usize;
    if k == 0 {
        return Polynomial::one();
    }
    let mut row: Vec<Polynomial> = vec![Polynomial::zero(); k + 1];
    row[0] = Polynomial::one();
    for _mp in 1..=m {
        for kp in (1..=k).rev() {
            let shifted = row[kp].mul_monomial(&Monomial::q(kp as u32));
            row[kp] = &row[kp - 1] + &shifted;
        }
    }
    row.pop().expect("row is non-empty")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn finite_pochhammer_examples() {
        assert!(pochhammer_finite(Monomial::q(1), 0, 7).is_one());
        let p = pochhammer_finite(Monomial::q(1), 2, 5);
        assert_eq!(p.to_string(), "1 - q - q^2 + q^3");
        let atq = Monomial::q(1).times(&Monomial::a(1)).times(&Monomial::t(1));
        assert_eq!(pochhammer_finite(atq, 1, 5).to_string(), "1 - q*a*t");
    }

    #[test]
    fn infinite_pochhammer_euler_expansion() {
        // pentagonal numbers: 1 - q - q^2 + q^5 + q^7 - ...
        let p = pochhammer_infinite(Monomial::q(1), 3).unwrap();
        assert_eq!(p.to_string(), "1 - q - q^2");
        let p7 = pochhammer_infinite(Monomial::q(1), 7).unwrap();
        assert_eq!(p7.to_string(), "1 - q - q^2 + q^5 + q^7");
    }

    #[test]
    fn infinite_pochhammer_beyond_truncation_is_one() {
        assert!(pochhammer_infinite(Monomial::q(8), 7).unwrap().is_one());
    }

    #[test]
    fn infinite_pochhammer_with_step_q2() {
        let base = Monomial::x(1).times(&Monomial::q(2));
        let p = poch_infinite(Sign::Plus, base, Monomial::q(2), 4).unwrap();
        assert_eq!(p.to_string(), "1 - q^2*x - q^4*x");
    }

    #[test]
    fn infinite_pochhammer_divergent_base() {
        assert_eq!(
            pochhammer_infinite(Monomial::x(1), 5),
            Err(SeriesError::DivergentProduct)
        );
        assert_eq!(
            poch_infinite(Sign::Plus, Monomial::q(1), Monomial::t(1), 5),
            Err(SeriesError::DivergentProduct)
        );
    }

    #[test]
    fn negative_sign_base() {
        // (-q; q)_2 = (1 + q)(1 + q^2)
        let p = poch_finite(Sign::Minus, Monomial::q(1), Monomial::q(1), 2, 5);
        assert_eq!(p.to_string(), "1 + q + q^2 + q^3");
    }

    #[test]
    fn q_binomial_examples() {
        assert_eq!(q_binomial(2, 2).to_string(), "1 + q + 2*q^2 + q^3 + q^4");
        assert!(q_binomial(9, 0).is_one());
        assert!(q_binomial(0, -1).is_zero());
        assert!(q_binomial(-3, 2).is_zero());
        assert_eq!(q_binomial_top(4, 2), q_binomial(2, 2));
        assert!(q_binomial_top(3, 5).is_zero());
    }

    #[test]
    fn q_binomial_degree_and_palindrome() {
        for a in 0..=5i64 {
            for b in 0..=5i64 {
                let p = q_binomial(a, b);
                let deg = p.max_q_degree();
                assert_eq!(deg as i64, a * b);
                for e in 0..=deg {
                    assert_eq!(
                        p.coeff(&Monomial::q(e)),
                        p.coeff(&Monomial::q(deg - e)),
                        "palindrome fails at [{}+{} over {}], q^{}",
                        a,
                        b,
                        b,
                        e
                    );
                }
            }
        }
    }

    #[test]
    fn poch_polynomial_zero_and_laurent_cases() {
        // (q^0; q^2)_1 = 0
        assert!(poch_polynomial(0, 2, 1).unwrap().is_zero());
        // (q^-2; q^2)_2 contains the factor (1 - q^0)
        assert!(poch_polynomial(-2, 2, 2).unwrap().is_zero());
        // (q^-2; q^2)_1 = 1 - q^-2 is genuinely Laurent
        assert_eq!(poch_polynomial(-2, 2, 1), None);
        // empty product
        assert!(poch_polynomial(-5, 2, 0).unwrap().is_one());
        // ordinary case: (q^2; q^2)_2
        assert_eq!(
            poch_polynomial(2, 2, 2).unwrap().to_string(),
            "1 - q^2 - q^4 + q^6"
        );
    }
}
