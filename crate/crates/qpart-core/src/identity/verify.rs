//! Side-by-side verification of catalog entries.

use std::time::{Duration, Instant};

use crate::series::{first_difference, Witness};

use super::{build_with, entry, Built, IdentityError, Kind, Params, SideId};

/// Deliberate builder defects, wired through as test hooks so the suite can
/// demonstrate that the checker catches them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mutation {
    /// Drop the `((-1)^L - 1)/2 q^(L^2) x^L` correction from the polynomial
    /// refinement's right side.
    Thm4DropOddCorrection,
}

impl Mutation {
    pub fn parse(s: &str) -> Option<Mutation> {
        match s {
            "thm4-drop-odd-correction" => Some(Mutation::Thm4DropOddCorrection),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Mutation::Thm4DropOddCorrection => "thm4-drop-odd-correction",
        }
    }
}

/// A failed comparison: which pair of sides disagreed and where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideWitness {
    pub left: SideId,
    pub right: SideId,
    pub witness: Witness,
}

impl std::fmt::Display for SideWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} vs {}: {}",
            self.left.label(),
            self.right.label(),
            self.witness
        )
    }
}

/// Result of verifying one identity at one parameter point.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub name: String,
    pub params: Params,
    /// `None` for polynomial-kind entries: the comparison is exact.
    pub trunc: Option<u32>,
    pub pass: bool,
    pub witness: Option<SideWitness>,
    pub wall: Duration,
}

impl VerificationReport {
    pub fn summary(&self) -> String {
        let mut s = format!("{}", self.name);
        for (k, v) in self.params.iter() {
            s.push_str(&format!(" {}={}", k, v));
        }
        if let Some(t) = self.trunc {
            s.push_str(&format!(" T={}", t));
        }
        if self.pass {
            s.push_str(": pass");
        } else {
            s.push_str(": FAIL");
            if let Some(w) = &self.witness {
                s.push_str(&format!(" ({})", w));
            }
        }
        s
    }
}

/// Builds every side of the named identity and compares them pairwise.
pub fn verify(name: &str, params: &Params, trunc: u32) -> Result<VerificationReport, IdentityError> {
    verify_with(name, params, trunc, None)
}

/// [`verify`] with an optional deliberate mutation (see [`Mutation`]).
pub fn verify_with(
    name: &str,
    params: &Params,
    trunc: u32,
    mutation: Option<Mutation>,
) -> Result<VerificationReport, IdentityError> {
    let e = entry(name)?;
    let start = Instant::now();
    let mut sides: Vec<(SideId, Built)> = Vec::with_capacity(e.sides.len());
    for &side in e.sides {
        sides.push((side, build_with(e.name, side, params, trunc, mutation)?));
    }
    let mut witness = None;
    'outer: for i in 0..sides.len() {
        for j in (i + 1)..sides.len() {
            let found = match (&sides[i].1, &sides[j].1) {
                (Built::Series(a), Built::Series(b)) => a.equal_witness(b)?,
                (Built::Poly(a), Built::Poly(b)) => first_difference(a, b),
                _ => {
                    return Err(IdentityError::Internal(format!(
                        "mixed side kinds for {}",
                        e.name
                    )))
                }
            };
            if let Some(w) = found {
                witness = Some(SideWitness {
                    left: sides[i].0,
                    right: sides[j].0,
                    witness: w,
                });
                break 'outer;
            }
        }
    }
    Ok(VerificationReport {
        name: e.name.to_string(),
        params: params.clone(),
        trunc: match e.kind {
            Kind::Polynomial => None,
            _ => Some(trunc),
        },
        pass: witness.is_none(),
        witness,
        wall: start.elapsed(),
    })
}

/// [`verify`] restricted to enumerative (oracle-backed) entries.
pub fn oracle_check(
    name: &str,
    params: &Params,
    trunc: u32,
) -> Result<VerificationReport, IdentityError> {
    let e = entry(name)?;
    if e.kind != Kind::Enumerative {
        return Err(IdentityError::NotEnumerative {
            identity: e.name.to_string(),
        });
    }
    verify(name, params, trunc)
}

/// The corollary at one `(L, m)` point; exact polynomial comparison.
pub fn corollary_check(l: i64, m: i64) -> Result<VerificationReport, IdentityError> {
    verify("corollary", &Params::from_pairs(&[("L", l), ("m", m)]), 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_small_entries() {
        for (name, t) in [
            ("ismail_simpl", 8),
            ("ramanujan", 10),
            ("ramanujan_raw", 10),
            ("nk_repr", 10),
            ("rr_last", 10),
            ("main_connection", 8),
            ("ismail_lhs_interp", 8),
            ("ismail_rhs_interp", 8),
            ("ramanujan_lhs_interp", 10),
            ("ramanujan_rhs_interp", 10),
            ("thm5", 8),
        ] {
            let r = verify(name, &Params::empty(), t).unwrap();
            assert!(r.pass, "{}", r.summary());
        }
    }

    #[test]
    fn verify_parametrized_entries() {
        for n in 0..=3 {
            let r = verify("thmL", &Params::from_pairs(&[("N", n)]), 10).unwrap();
            assert!(r.pass, "{}", r.summary());
            let r = verify("thm7", &Params::from_pairs(&[("N", n)]), 8).unwrap();
            assert!(r.pass, "{}", r.summary());
        }
        for n in 0..=2 {
            let r = verify("dist_even", &Params::from_pairs(&[("n", n)]), 12).unwrap();
            assert!(r.pass, "{}", r.summary());
        }
        for l in 0..=5 {
            let r = verify("thm4", &Params::from_pairs(&[("L", l)]), 0).unwrap();
            assert!(r.pass, "{}", r.summary());
            assert_eq!(r.trunc, None);
        }
        for (j, n) in [(1, 1), (1, 3), (2, 4), (3, 3)] {
            for name in ["gf_bdd", "gf_parts", "gf_dist"] {
                let r = verify(name, &Params::from_pairs(&[("j", j), ("N", n)]), 10).unwrap();
                assert!(r.pass, "{}", r.summary());
            }
        }
        assert!(corollary_check(4, 3).unwrap().pass);
    }

    #[test]
    fn mutation_is_caught_with_the_expected_witness() {
        let r = verify_with(
            "thm4",
            &Params::from_pairs(&[("L", 5)]),
            0,
            Some(Mutation::Thm4DropOddCorrection),
        )
        .unwrap();
        assert!(!r.pass);
        let w = r.witness.expect("failure carries a witness");
        assert_eq!(w.witness.monomial.to_string(), "q^25*x^5");
    }

    #[test]
    fn errors_are_usage_errors() {
        assert!(matches!(
            verify("nope", &Params::empty(), 5),
            Err(IdentityError::UnknownIdentity(_))
        ));
        assert!(matches!(
            verify("thm4", &Params::empty(), 5),
            Err(IdentityError::MissingParam { .. })
        ));
        assert!(matches!(
            verify("thm4", &Params::from_pairs(&[("L", -1)]), 5),
            Err(IdentityError::ParamOutOfRange { .. })
        ));
        assert!(matches!(
            oracle_check("ramanujan", &Params::empty(), 5),
            Err(IdentityError::NotEnumerative { .. })
        ));
    }
}
