//! Series builders for both sides of every catalog identity.
//!
//! Each infinite sum stops at the first index whose term has minimal
//! q-degree above the truncation order; the minimal degrees are the closed
//! forms noted inline, so every cutoff is provably safe rather than
//! heuristic.

use num_bigint::BigInt;

use crate::series::{
    poch_finite, poch_infinite, q_binomial_top, Monomial, Sign, TruncatedSeries,
};

use super::IdentityError;

fn mono(q: u32, x: u32, a: u32, b: u32, t: u32) -> Monomial {
    Monomial::from_exps([q, x, a, b, t])
}

fn sign_pow(k: u32) -> BigInt {
    if k % 2 == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `1 / (q; q)_n` at truncation `t`.
fn inv_poch_q(n: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    Ok(poch_finite(Sign::Plus, Monomial::q(1), Monomial::q(1), n, t).invert()?)
}

/// `1 / (a t q; q)_n`.
fn inv_poch_atq(n: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    Ok(poch_finite(Sign::Plus, mono(1, 0, 1, 0, 1), Monomial::q(1), n, t).invert()?)
}

/// `1 / (q^2; q^2)_n`.
fn inv_poch_q2(n: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    Ok(poch_finite(Sign::Plus, Monomial::q(2), Monomial::q(2), n, t).invert()?)
}

/// `[top over bottom]` in base `q^2`.
pub(super) fn q_binom2(top: i64, bottom: i64) -> crate::series::Polynomial {
    q_binomial_top(top, bottom).substitute_q_power(2)
}

// --- the five-variable transformation ---------------------------------

/// Raw left side: `(atq;q)_inf / (q;q)_inf * sum_k (-bt)^k q^(k(k+1)/2) /
/// ((q;q)_k (atq;q)_k)`. Term k has minimal q-degree k(k+1)/2.
pub fn ismail_raw_lhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let prefactor = poch_infinite(Sign::Plus, mono(1, 0, 1, 0, 1), Monomial::q(1), t)?
        .mul(&poch_infinite(Sign::Plus, Monomial::q(1), Monomial::q(1), t)?.invert()?)?;
    let mut sum = TruncatedSeries::zero(t);
    let mut k = 0u32;
    while k * (k + 1) / 2 <= t {
        let head = TruncatedSeries::term(sign_pow(k), mono(k * (k + 1) / 2, 0, 0, k, k), t);
        let term = head.mul(&inv_poch_q(k, t)?)?.mul(&inv_poch_atq(k, t)?)?;
        sum = sum.add(&term)?;
        k += 1;
    }
    Ok(prefactor.mul(&sum)?)
}

/// Raw right side: `(atq,btq;q)_inf / (q;q)_inf * sum_k (-1)^k (abt^2 q)^k
/// q^(k(3k-1)/2) / ((atq;q)_k (btq;q)_k (q;q)_k)`. Term k has minimal
/// q-degree k(3k+1)/2.
pub fn ismail_raw_rhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let atq = mono(1, 0, 1, 0, 1);
    let btq = mono(1, 0, 0, 1, 1);
    let prefactor = poch_infinite(Sign::Plus, atq, Monomial::q(1), t)?
        .mul(&poch_infinite(Sign::Plus, btq, Monomial::q(1), t)?)?
        .mul(&poch_infinite(Sign::Plus, Monomial::q(1), Monomial::q(1), t)?.invert()?)?;
    let mut sum = TruncatedSeries::zero(t);
    let mut k = 0u32;
    while k * (3 * k + 1) / 2 <= t {
        // q^k from (abt^2 q)^k plus q^(k(3k-1)/2) combine to k(3k+1)/2
        let head = TruncatedSeries::term(sign_pow(k), mono(k * (3 * k + 1) / 2, 0, k, k, 2 * k), t);
        let inv_btq_k = poch_finite(Sign::Plus, btq, Monomial::q(1), k, t).invert()?;
        let term = head
            .mul(&inv_poch_atq(k, t)?)?
            .mul(&inv_btq_k)?
            .mul(&inv_poch_q(k, t)?)?;
        sum = sum.add(&term)?;
        k += 1;
    }
    Ok(prefactor.mul(&sum)?)
}

/// Simplified left side: `sum_k (bt)^k q^(k(k+1)/2) / ((q;q)_k (atq;q)_k)`.
pub fn ismail_simpl_lhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut k = 0u32;
    while k * (k + 1) / 2 <= t {
        let head = TruncatedSeries::term(1, mono(k * (k + 1) / 2, 0, 0, k, k), t);
        let term = head.mul(&inv_poch_q(k, t)?)?.mul(&inv_poch_atq(k, t)?)?;
        sum = sum.add(&term)?;
        k += 1;
    }
    Ok(sum)
}

/// Simplified right side: `sum_m (bt)^m q^(m(m+1)/2) (-btq^(m+1);q)_inf
/// (at)^m q^(m^2) / ((q;q)_m (atq;q)_m)`. Term m has minimal q-degree
/// m(m+1)/2 + m^2 = m(3m+1)/2.
pub fn ismail_simpl_rhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut m = 0u32;
    while m * (3 * m + 1) / 2 <= t {
        let head = TruncatedSeries::term(
            1,
            mono(m * (m + 1) / 2 + m * m, 0, m, m, 2 * m),
            t,
        );
        let tail = poch_infinite(Sign::Minus, mono(m + 1, 0, 0, 1, 1), Monomial::q(1), t)?;
        let term = head
            .mul(&tail)?
            .mul(&inv_poch_q(m, t)?)?
            .mul(&inv_poch_atq(m, t)?)?;
        sum = sum.add(&term)?;
        m += 1;
    }
    Ok(sum)
}

/// The double-sum rewrite: `sum_m sum_{k>=m} (bt)^k q^(k(k+1)/2) / (q;q)_k *
/// [k over m] * (at)^m q^(m^2) / (atq;q)_m`. The (m, k) term has minimal
/// q-degree m^2 + k(k+1)/2.
pub fn main_connection_lhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut m = 0u32;
    while m * m + m * (m + 1) / 2 <= t {
        let inv_atq_m = inv_poch_atq(m, t)?;
        let mut k = m;
        while m * m + k * (k + 1) / 2 <= t {
            let head = TruncatedSeries::term(
                1,
                mono(m * m + k * (k + 1) / 2, 0, m, k, k + m),
                t,
            );
            let term = head
                .mul(&inv_poch_q(k, t)?)?
                .mul_poly(&q_binomial_top(i64::from(k), i64::from(m)))
                .mul(&inv_atq_m)?;
            sum = sum.add(&term)?;
            k += 1;
        }
        m += 1;
    }
    Ok(sum)
}

/// Bounded refinement, left side: `sum_{k=0}^{N} (bt)^k q^(k(k+1)/2) /
/// (atq;q)_k * [N over k]`.
pub fn thml_lhs(n_bound: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    for k in 0..=n_bound {
        if k * (k + 1) / 2 > t {
            break;
        }
        let head = TruncatedSeries::term(1, mono(k * (k + 1) / 2, 0, 0, k, k), t);
        let term = head
            .mul(&inv_poch_atq(k, t)?)?
            .mul_poly(&q_binomial_top(i64::from(n_bound), i64::from(k)));
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

/// Bounded refinement, right side: `sum_{m=0}^{N} (bt)^m q^(m(m+1)/2)
/// (-btq^(m+1);q)_{N-m} (at)^m q^(m^2) / (atq;q)_m * [N over m]`.
pub fn thml_rhs(n_bound: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    for m in 0..=n_bound {
        if m * (3 * m + 1) / 2 > t {
            break;
        }
        let head = TruncatedSeries::term(
            1,
            mono(m * (m + 1) / 2 + m * m, 0, m, m, 2 * m),
            t,
        );
        let finite_tail = poch_finite(
            Sign::Minus,
            mono(m + 1, 0, 0, 1, 1),
            Monomial::q(1),
            n_bound - m,
            t,
        );
        let term = head
            .mul(&finite_tail)?
            .mul(&inv_poch_atq(m, t)?)?
            .mul_poly(&q_binomial_top(i64::from(n_bound), i64::from(m)));
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

// --- the two-variable transformation ----------------------------------

/// `sum_n q^(n^2) x^n / (q;q)_n`; term n has minimal q-degree n^2.
pub fn ramanujan_lhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut n = 0u32;
    while n * n <= t {
        let head = TruncatedSeries::term(1, mono(n * n, n, 0, 0, 0), t);
        sum = sum.add(&head.mul(&inv_poch_q(n, t)?)?)?;
        n += 1;
    }
    Ok(sum)
}

/// `sum_n q^(n^2) x^n / (q^2;q^2)_n * (-x q^(2n+2); q^2)_inf`.
pub fn ramanujan_rhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut n = 0u32;
    while n * n <= t {
        let head = TruncatedSeries::term(1, mono(n * n, n, 0, 0, 0), t);
        let tail = poch_infinite(Sign::Minus, mono(2 * n + 2, 1, 0, 0, 0), Monomial::q(2), t)?;
        sum = sum.add(&head.mul(&inv_poch_q2(n, t)?)?.mul(&tail)?)?;
        n += 1;
    }
    Ok(sum)
}

/// Raw form of [`ramanujan_lhs`]: the same sum with `(-x)^n` signs.
pub fn ramanujan_raw_lhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    Ok(ramanujan_lhs(t)?.flip_var_sign(crate::series::Var::X))
}

/// Raw right side: `(xq^2;q^2)_inf * sum_n q^(n^2) (-x)^n /
/// ((q^2;q^2)_n (xq^2;q^2)_n)`.
pub fn ramanujan_raw_rhs(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let xq2 = mono(2, 1, 0, 0, 0);
    let prefactor = poch_infinite(Sign::Plus, xq2, Monomial::q(2), t)?;
    let mut sum = TruncatedSeries::zero(t);
    let mut n = 0u32;
    while n * n <= t {
        let head = TruncatedSeries::term(sign_pow(n), mono(n * n, n, 0, 0, 0), t);
        let inv_xq2_n = poch_finite(Sign::Plus, xq2, Monomial::q(2), n, t).invert()?;
        sum = sum.add(&head.mul(&inv_poch_q2(n, t)?)?.mul(&inv_xq2_n)?)?;
        n += 1;
    }
    Ok(prefactor.mul(&sum)?)
}

/// Product form `(-x q^(2n+2); q^2)_inf` for distinct even parts >= 2n+2.
pub fn dist_even_lhs(n: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    Ok(poch_infinite(Sign::Minus, mono(2 * n + 2, 1, 0, 0, 0), Monomial::q(2), t)?)
}

/// Sum form `sum_k x^k q^(2nk + k(k+1)) / (q^2;q^2)_k`; term k has minimal
/// q-degree 2nk + k(k+1).
pub fn dist_even_rhs(n: u32, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut k = 0u32;
    while 2 * n * k + k * (k + 1) <= t {
        let head = TruncatedSeries::term(1, mono(2 * n * k + k * (k + 1), k, 0, 0, 0), t);
        sum = sum.add(&head.mul(&inv_poch_q2(k, t)?)?)?;
        k += 1;
    }
    Ok(sum)
}

/// `sum_{n,k} q^(n^2+2nk+k(k+1)) x^(n+k) / (q^2;q^2)_(n+k) * [n+k over k]
/// in base q^2`; the (n, k) term has minimal q-degree n^2 + 2nk + k(k+1).
pub fn nk_repr_combined(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut n = 0u32;
    while n * n <= t {
        let mut k = 0u32;
        while n * n + 2 * n * k + k * (k + 1) <= t {
            let head = TruncatedSeries::term(
                1,
                mono(n * n + 2 * n * k + k * (k + 1), n + k, 0, 0, 0),
                t,
            );
            let term = head
                .mul(&inv_poch_q2(n + k, t)?)?
                .mul_poly(&q_binom2(i64::from(n + k), i64::from(k)));
            sum = sum.add(&term)?;
            k += 1;
        }
        n += 1;
    }
    Ok(sum)
}

/// The same double sum with the denominators kept apart:
/// `sum_{n,k} q^(n^2+2nk+k(k+1)) x^(n+k) / ((q^2;q^2)_n (q^2;q^2)_k)`.
pub fn nk_repr_split(t: u32) -> Result<TruncatedSeries, IdentityError> {
    let mut sum = TruncatedSeries::zero(t);
    let mut n = 0u32;
    while n * n <= t {
        let inv_n = inv_poch_q2(n, t)?;
        let mut k = 0u32;
        while n * n + 2 * n * k + k * (k + 1) <= t {
            let head = TruncatedSeries::term(
                1,
                mono(n * n + 2 * n * k + k * (k + 1), n + k, 0, 0, 0),
                t,
            );
            sum = sum.add(&head.mul(&inv_n)?.mul(&inv_poch_q2(k, t)?)?)?;
            k += 1;
        }
        n += 1;
    }
    Ok(sum)
}

// --- bounded generating functions -------------------------------------

fn check_range(j: i64, n: i64) -> Result<(u32, u32), IdentityError> {
    if j > n {
        return Err(IdentityError::BadParams(format!(
            "j = {} must not exceed N = {}",
            j, n
        )));
    }
    Ok((j as u32, n as u32))
}

/// Geometric form: `1 / (x q^j; q)_(N-j+1)`.
pub fn gf_bdd_product(j: i64, n: i64, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let (j, n) = check_range(j, n)?;
    Ok(poch_finite(Sign::Plus, mono(j, 1, 0, 0, 0), Monomial::q(1), n - j + 1, t).invert()?)
}

/// Smallest-part split: `1 + sum_{i=j}^{N} x q^i / (x q^i; q)_(N-i+1)`.
pub fn gf_bdd_smallest_part(j: i64, n: i64, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let (j, n) = check_range(j, n)?;
    let mut sum = TruncatedSeries::one(t);
    for i in j..=n {
        if i > t {
            break;
        }
        let head = TruncatedSeries::term(1, mono(i, 1, 0, 0, 0), t);
        let inv =
            poch_finite(Sign::Plus, mono(i, 1, 0, 0, 0), Monomial::q(1), n - i + 1, t).invert()?;
        sum = sum.add(&head.mul(&inv)?)?;
    }
    Ok(sum)
}

/// Durfee-square split: `sum_{i=j}^{N} x^i q^(i^2) / (x q^j; q)_(i-j+1) *
/// [N over i] + sum_{i=0}^{j-1} x^i q^(ij) [N-j+i over i]`.
pub fn gf_bdd_durfee(j: i64, n: i64, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let (ju, nu) = check_range(j, n)?;
    let mut sum = TruncatedSeries::zero(t);
    for i in ju..=nu {
        if i * i > t {
            break;
        }
        let head = TruncatedSeries::term(1, mono(i * i, i, 0, 0, 0), t);
        let inv = poch_finite(Sign::Plus, mono(ju, 1, 0, 0, 0), Monomial::q(1), i - ju + 1, t)
            .invert()?;
        let term = head
            .mul(&inv)?
            .mul_poly(&q_binomial_top(i64::from(nu), i64::from(i)));
        sum = sum.add(&term)?;
    }
    for i in 0..ju {
        if i * ju > t {
            break;
        }
        let head = TruncatedSeries::term(1, mono(i * ju, i, 0, 0, 0), t);
        let term = head.mul_poly(&q_binomial_top(n - j + i64::from(i), i64::from(i)));
        sum = sum.add(&term)?;
    }
    Ok(sum)
}

/// `sum_{i=j}^{N} x^i q^i / (q;q)_i`: partitions with between j and N parts.
pub fn gf_parts_sum(j: i64, n: i64, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let (j, n) = check_range(j, n)?;
    let mut sum = TruncatedSeries::zero(t);
    for i in j..=n {
        if i > t {
            break;
        }
        let head = TruncatedSeries::term(1, mono(i, i, 0, 0, 0), t);
        sum = sum.add(&head.mul(&inv_poch_q(i, t)?)?)?;
    }
    Ok(sum)
}

/// `sum_{i=j}^{N} x^i q^(i(i+1)/2) / (q;q)_i`: distinct-part partitions with
/// between j and N parts.
pub fn gf_dist_sum(j: i64, n: i64, t: u32) -> Result<TruncatedSeries, IdentityError> {
    let (j, n) = check_range(j, n)?;
    let mut sum = TruncatedSeries::zero(t);
    for i in j..=n {
        if i * (i + 1) / 2 > t {
            break;
        }
        let head = TruncatedSeries::term(1, mono(i * (i + 1) / 2, i, 0, 0, 0), t);
        sum = sum.add(&head.mul(&inv_poch_q(i, t)?)?)?;
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramanujan_raw_lhs_low_order() {
        // signs follow (-x)^n: 1 - xq - xq^2 - xq^3 + (x^2 - x)q^4 + (x^2 - x)q^5
        let s = ramanujan_raw_lhs(5).unwrap();
        assert_eq!(
            s.to_string(),
            "1 - q*x - q^2*x - q^3*x - q^4*x + q^4*x^2 - q^5*x + q^5*x^2"
        );
    }

    #[test]
    fn ramanujan_lhs_matches_x_flip_of_raw() {
        let flipped = ramanujan_raw_lhs(12).unwrap().flip_var_sign(crate::series::Var::X);
        assert_eq!(flipped, ramanujan_lhs(12).unwrap());
    }

    #[test]
    fn builders_start_at_one() {
        for s in [
            ismail_raw_lhs(0).unwrap(),
            ismail_raw_rhs(0).unwrap(),
            ismail_simpl_lhs(0).unwrap(),
            ismail_simpl_rhs(0).unwrap(),
            main_connection_lhs(0).unwrap(),
            thml_lhs(3, 0).unwrap(),
            thml_rhs(3, 0).unwrap(),
            ramanujan_lhs(0).unwrap(),
            ramanujan_rhs(0).unwrap(),
            ramanujan_raw_lhs(0).unwrap(),
            ramanujan_raw_rhs(0).unwrap(),
            dist_even_lhs(2, 0).unwrap(),
            dist_even_rhs(2, 0).unwrap(),
            nk_repr_combined(0).unwrap(),
            nk_repr_split(0).unwrap(),
        ] {
            assert!(s.is_one(), "expected 1 at T = 0, got {}", s);
        }
    }

    #[test]
    fn gf_bdd_single_part_value() {
        // j = N = 2: partitions with all parts equal to 2
        let p = gf_bdd_product(2, 2, 6).unwrap();
        assert_eq!(p.to_string(), "1 + q^2*x + q^4*x^2 + q^6*x^3");
        let s = gf_bdd_smallest_part(2, 2, 6).unwrap();
        let d = gf_bdd_durfee(2, 2, 6).unwrap();
        assert_eq!(p.equal_witness(&s).unwrap(), None);
        assert_eq!(p.equal_witness(&d).unwrap(), None);
    }

    #[test]
    fn gf_range_check() {
        assert!(matches!(
            gf_bdd_product(3, 2, 5),
            Err(IdentityError::BadParams(_))
        ));
    }
}
