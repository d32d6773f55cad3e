//! Monomials over the fixed variable universe `{q, x, a, b, t}`.
//!
//! Exponents are stored densely in a fixed array; an absent variable means
//! exponent zero, so the representation is canonical by construction. The
//! ordering is graded lexicographic with `q > x > a > b > t`; it drives both
//! serialization order and first-difference witnesses.

use std::cmp::Ordering;
use std::fmt;

/// Number of variables in the fixed universe.
pub const VAR_COUNT: usize = 5;

/// The five formal variables, in significance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Q = 0,
    X = 1,
    A = 2,
    B = 3,
    T = 4,
}

impl Var {
    pub const ALL: [Var; VAR_COUNT] = [Var::Q, Var::X, Var::A, Var::B, Var::T];

    pub fn symbol(self) -> &'static str {
        match self {
            Var::Q => "q",
            Var::X => "x",
            Var::A => "a",
            Var::B => "b",
            Var::T => "t",
        }
    }

    pub fn parse(sym: &str) -> Option<Self> {
        Var::ALL.iter().copied().find(|v| v.symbol() == sym)
    }
}

/// A power product `q^e0 x^e1 a^e2 b^e3 t^e4` with non-negative exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u32; VAR_COUNT],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn from_exps(exps: [u32; VAR_COUNT]) -> Self {
        Monomial { exps }
    }

    pub fn var_pow(v: Var, e: u32) -> Self {
        let mut m = Monomial::default();
        m.exps[v as usize] = e;
        m
    }

    pub fn q(e: u32) -> Self {
        Monomial::var_pow(Var::Q, e)
    }

    pub fn x(e: u32) -> Self {
        Monomial::var_pow(Var::X, e)
    }

    pub fn a(e: u32) -> Self {
        Monomial::var_pow(Var::A, e)
    }

    pub fn b(e: u32) -> Self {
        Monomial::var_pow(Var::B, e)
    }

    pub fn t(e: u32) -> Self {
        Monomial::var_pow(Var::T, e)
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v as usize]
    }

    pub fn exps(&self) -> &[u32; VAR_COUNT] {
        &self.exps
    }

    pub fn q_exp(&self) -> u32 {
        self.exps[0]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Largest exponent among the non-`q` variables.
    pub fn max_aux_exp(&self) -> u32 {
        self.exps[1..].iter().copied().max().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    /// Product of two monomials (exponents add).
    pub fn times(&self, rhs: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, r) in exps.iter_mut().zip(rhs.exps.iter()) {
            *e += r;
        }
        Monomial { exps }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e *= k;
        }
        Monomial { exps }
    }

    /// The same monomial with the `q` exponent set to zero.
    pub fn without_q(&self) -> Monomial {
        let mut exps = self.exps;
        exps[0] = 0;
        Monomial { exps }
    }

    /// Applies `q -> q^factor`, leaving the other variables alone.
    pub fn scale_q(&self, factor: u32) -> Monomial {
        let mut exps = self.exps;
        exps[0] *= factor;
        Monomial { exps }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.symbol())?;
            } else {
                write!(f, "{}^{}", v.symbol(), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_is_graded_lex() {
        let one = Monomial::one();
        let q = Monomial::q(1);
        let x = Monomial::x(1);
        let q2 = Monomial::q(2);
        let qx = Monomial::q(1).times(&Monomial::x(1));
        assert!(one < x);
        assert!(x < q);
        assert!(q < q2);
        assert!(x < qx);
        assert!(qx < q2);
        // within equal total degree, q-heavy monomials sort last of their grade
        assert!(Monomial::x(2) < qx);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(Monomial::q(2).to_string(), "q^2");
        let m = Monomial::q(1).times(&Monomial::a(1)).times(&Monomial::t(3));
        assert_eq!(m.to_string(), "q*a*t^3");
    }

    #[test]
    fn canonical_zero_exponents() {
        // an exponent set to zero compares and hashes equal to an absent one
        assert_eq!(Monomial::var_pow(Var::X, 0), Monomial::one());
    }
}
