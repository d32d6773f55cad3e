//! The two exact polynomial identities: both sides are polynomials for
//! fixed parameters, so comparison is absolute with no truncation.
//!
//! Division never happens. The bounded double sum divides its Pochhammer
//! numerators by `(q^2;q^2)_(n+k)` on paper; here each term is the
//! equivalent product of two Gaussian binomials,
//!
//! ```text
//! (u^(A-n-k+1);u)_n (u^(B-n-k+1);u)_k / (u;u)_(n+k) * [n+k over k]_u
//!     = [A-k over n]_u [B-n over k]_u,   u = q^2,
//! ```
//!
//! an identity of terms that [`thm4_literal_term`] exposes so tests can
//! verify the rewrite multiplicatively, term by term. The corollary is
//! compared after clearing `(q^2;q^2)_m` from both sides instead.

use num_bigint::BigInt;

use crate::series::{poch_polynomial, q_binomial_top, Monomial, Polynomial};

use super::builders::q_binom2;
use super::IdentityError;

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

/// Left side of the polynomial refinement at level `l`:
/// `sum_{n,k=0}^{floor(l/2)} q^(n^2+2nk+k(k+1)) x^(n+k) [A-k over n]_{q^2}
/// [B-n over k]_{q^2}` with `A = floor((l+1)/2)`, `B = floor(l/2)`.
pub fn thm4_lhs(l: i64) -> Polynomial {
    let a_cap = floor_div(l + 1, 2);
    let b_cap = floor_div(l, 2);
    let mut acc = Polynomial::zero();
    for n in 0..=b_cap {
        for k in 0..=b_cap {
            let f1 = q_binom2(a_cap - k, n);
            if f1.is_zero() {
                continue;
            }
            let f2 = q_binom2(b_cap - n, k);
            if f2.is_zero() {
                continue;
            }
            let q_exp = (n * n + 2 * n * k + k * (k + 1)) as u32;
            let head = Monomial::q(q_exp).times(&Monomial::x((n + k) as u32));
            acc += &(&f1 * &f2).mul_monomial(&head);
        }
    }
    acc
}

/// The paper-shaped numerator of the `(n, k)` term of [`thm4_lhs`], before
/// dividing by `(q^2;q^2)_(n+k)`:
/// `q^(...) x^(n+k) [n+k over k]_{q^2} (q^(2(A-n-k+1));q^2)_n
/// (q^(2(B-n-k+1));q^2)_k`. `None` when a factor is a genuine Laurent
/// expression (which only happens when the other factor vanishes).
pub fn thm4_literal_term(l: i64, n: i64, k: i64) -> Option<Polynomial> {
    let a_cap = floor_div(l + 1, 2);
    let b_cap = floor_div(l, 2);
    let p1 = poch_polynomial(2 * (a_cap - n - k + 1), 2, n as u32)?;
    let p2 = poch_polynomial(2 * (b_cap - n - k + 1), 2, k as u32)?;
    let q_exp = (n * n + 2 * n * k + k * (k + 1)) as u32;
    let head = Monomial::q(q_exp).times(&Monomial::x((n + k) as u32));
    Some((&(&p1 * &p2) * &q_binom2(n + k, k)).mul_monomial(&head))
}

/// Right side of the polynomial refinement:
/// `((-1)^l - 1)/2 * q^(l^2) x^l + sum_{n=0}^{l+1} q^(n^2) x^n
/// [l-n+1 over n]_q`. With `drop_odd_correction` the first addend is
/// omitted; on odd `l` this breaks the identity at exactly `q^(l^2) x^l`.
pub fn thm4_rhs(l: i64, drop_odd_correction: bool) -> Polynomial {
    let mut acc = Polynomial::zero();
    if l % 2 == 1 && !drop_odd_correction {
        let head = Monomial::q((l * l) as u32).times(&Monomial::x(l as u32));
        acc += &Polynomial::term(BigInt::from(-1), head);
    }
    for n in 0..=(l + 1) {
        let binom = q_binomial_top(l - n + 1, n);
        if binom.is_zero() {
            continue;
        }
        let head = Monomial::q((n * n) as u32).times(&Monomial::x(n as u32));
        acc += &binom.mul_monomial(&head);
    }
    acc
}

/// Term k of the corollary sum multiplied through by `(q^2;q^2)_m`:
/// `q^k (q^(2 c1); q^2)_(m-k) (q^(2 c2); q^2)_k [m over k]_{q^2}` with
/// `c1 = floor((l+m)/2) - m + 1` and `c2 = floor((l+m-1)/2) - m + 1`.
fn corollary_cleared_term(l: i64, m: i64, k: i64) -> Result<Polynomial, IdentityError> {
    let binom = q_binom2(m, k);
    if binom.is_zero() {
        return Ok(Polynomial::zero());
    }
    let c1 = floor_div(l + m, 2) - m + 1;
    let c2 = floor_div(l + m - 1, 2) - m + 1;
    let f1 = poch_polynomial(2 * c1, 2, (m - k) as u32);
    let f2 = poch_polynomial(2 * c2, 2, k as u32);
    let product = match (f1, f2) {
        (Some(p1), _) if p1.is_zero() => return Ok(Polynomial::zero()),
        (_, Some(p2)) if p2.is_zero() => return Ok(Polynomial::zero()),
        (Some(p1), Some(p2)) => &p1 * &p2,
        // a Laurent factor always coexists with a vanishing cofactor
        _ => {
            return Err(IdentityError::Internal(format!(
                "corollary term (l={}, m={}, k={}) is Laurent without a zero factor",
                l, m, k
            )))
        }
    };
    Ok((&product * &binom).mul_monomial(&Monomial::q(k as u32)))
}

/// Corollary left side times `(q^2;q^2)_m`.
pub fn corollary_lhs_cleared(l: i64, m: i64) -> Result<Polynomial, IdentityError> {
    let mut acc = Polynomial::zero();
    for k in 0..=m {
        acc += &corollary_cleared_term(l, m, k)?;
    }
    Ok(acc)
}

/// Corollary right side times `(q^2;q^2)_m`: `[l over m]_q (q^2;q^2)_m`.
pub fn corollary_rhs_cleared(l: i64, m: i64) -> Polynomial {
    let denom = poch_polynomial(2, 2, m as u32).expect("(q^2;q^2)_m is a plain polynomial");
    &q_binomial_top(l, m) * &denom
}

/// The corollary sum written directly through Gaussian binomials, with no
/// clearing: `sum_k q^k [c1+m-k-1 over m-k]_{q^2} [c2+k-1 over k]_{q^2}`.
/// Equals `[l over m]_q`; tests hold this route against the cleared one.
pub fn corollary_lhs_binom_route(l: i64, m: i64) -> Polynomial {
    let c1 = floor_div(l + m, 2) - m + 1;
    let c2 = floor_div(l + m - 1, 2) - m + 1;
    let mut acc = Polynomial::zero();
    for k in 0..=m {
        let b1 = q_binom2(c1 + m - k - 1, m - k);
        if b1.is_zero() {
            continue;
        }
        let b2 = q_binom2(c2 + k - 1, k);
        if b2.is_zero() {
            continue;
        }
        acc += &(&b1 * &b2).mul_monomial(&Monomial::q(k as u32));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::first_difference;

    #[test]
    fn thm4_trivial_levels() {
        assert!(thm4_lhs(0).is_one());
        assert!(thm4_rhs(0, false).is_one());
        // at l = 1 the correction -qx cancels the n = 1 binomial term
        assert!(thm4_lhs(1).is_one());
        assert!(thm4_rhs(1, false).is_one());
        assert!(!thm4_rhs(1, true).is_one());
    }

    #[test]
    fn thm4_small_levels_agree() {
        for l in 0..=6 {
            let lhs = thm4_lhs(l);
            let rhs = thm4_rhs(l, false);
            assert_eq!(
                first_difference(&lhs, &rhs),
                None,
                "level {} disagrees: {} vs {}",
                l,
                lhs,
                rhs
            );
        }
    }

    #[test]
    fn thm4_mutation_breaks_odd_levels_at_the_corner_term() {
        for l in [1i64, 3, 5, 7] {
            let lhs = thm4_lhs(l);
            let broken = thm4_rhs(l, true);
            let w = first_difference(&lhs, &broken).expect("mutation must be caught");
            assert_eq!(
                w.monomial,
                Monomial::q((l * l) as u32).times(&Monomial::x(l as u32))
            );
        }
    }

    #[test]
    fn corollary_trivial_cases() {
        assert!(corollary_lhs_cleared(5, 0).unwrap().is_one());
        assert!(corollary_rhs_cleared(5, 0).is_one());
        assert!(corollary_lhs_cleared(0, 0).unwrap().is_one());
    }

    #[test]
    fn corollary_cleared_vs_binom_route() {
        let denom = |m: i64| poch_polynomial(2, 2, m as u32).unwrap();
        for l in 0..=7 {
            for m in 0..=7 {
                let cleared = corollary_lhs_cleared(l, m).unwrap();
                let via_binoms = &corollary_lhs_binom_route(l, m) * &denom(m);
                assert_eq!(
                    first_difference(&cleared, &via_binoms),
                    None,
                    "routes disagree at l={}, m={}",
                    l,
                    m
                );
            }
        }
    }

    #[test]
    fn thm4_literal_terms_match_binomial_form() {
        // binomial-form term times (q^2;q^2)_(n+k) equals the literal
        // numerator, for every term in range
        for l in 0..=9i64 {
            let a_cap = (l + 1).div_euclid(2);
            let b_cap = l.div_euclid(2);
            for n in 0..=b_cap {
                for k in 0..=b_cap {
                    let binom_term = {
                        let f = &q_binom2(a_cap - k, n) * &q_binom2(b_cap - n, k);
                        let head = Monomial::q((n * n + 2 * n * k + k * (k + 1)) as u32)
                            .times(&Monomial::x((n + k) as u32));
                        f.mul_monomial(&head)
                    };
                    match thm4_literal_term(l, n, k) {
                        Some(literal) => {
                            let denom = poch_polynomial(2, 2, (n + k) as u32).unwrap();
                            assert_eq!(
                                first_difference(&(&binom_term * &denom), &literal),
                                None,
                                "term (l={}, n={}, k={})",
                                l,
                                n,
                                k
                            );
                        }
                        None => assert!(
                            binom_term.is_zero(),
                            "Laurent literal term must vanish in binomial form (l={}, n={}, k={})",
                            l,
                            n,
                            k
                        ),
                    }
                }
            }
        }
    }
}
