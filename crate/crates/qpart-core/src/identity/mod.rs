//! The identity catalog and its verification harness.
//!
//! Every entry names a claimed equality and knows how to build each of its
//! sides: as truncated series, as exact polynomials (for the two
//! finite refinements, where no truncation is involved), or as
//! enumeration-derived series when one side is the brute-force oracle.
//! [`verify`] builds all sides and compares them pairwise, reporting the
//! first differing monomial on failure.

mod builders;
mod enumerative;
mod polynomial;
mod verify;

pub use polynomial::{corollary_lhs_binom_route, thm4_literal_term};
pub use verify::{corollary_check, oracle_check, verify, verify_with, Mutation, SideWitness, VerificationReport};

use std::collections::BTreeMap;

use thiserror::Error;

use crate::series::{Polynomial, SeriesError, TruncatedSeries};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("unknown identity {0:?}; see `catalog` for the available names")]
    UnknownIdentity(String),
    #[error("identity {identity:?} has no side {side:?}")]
    UnknownSide { identity: String, side: SideId },
    #[error("identity {identity:?} requires parameter {name}")]
    MissingParam { identity: String, name: &'static str },
    #[error("parameter {name}={value} is out of range {min}..={max}")]
    ParamOutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("identity {identity:?} is not an enumerative (oracle-backed) entry")]
    NotEnumerative { identity: String },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error("internal: {0}")]
    Internal(String),
}

/// Which side of an identity to build. `Alt` is the third form where an
/// equation is stated in three ways.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SideId {
    Lhs,
    Rhs,
    Alt,
}

impl SideId {
    pub fn label(self) -> &'static str {
        match self {
            SideId::Lhs => "lhs",
            SideId::Rhs => "rhs",
            SideId::Alt => "alt",
        }
    }

    pub fn parse(s: &str) -> Option<SideId> {
        match s.to_ascii_lowercase().as_str() {
            "l" | "lhs" | "left" => Some(SideId::Lhs),
            "r" | "rhs" | "right" => Some(SideId::Rhs),
            "alt" | "m" | "mid" => Some(SideId::Alt),
            _ => None,
        }
    }
}

/// How an entry is compared.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// Sides are truncated series; equality is checked through `q^T`.
    Series,
    /// Sides are exact polynomials; equality is absolute, no truncation.
    Polynomial,
    /// At least one side is the brute-force enumeration oracle.
    Enumerative,
}

impl Kind {
    pub fn label(self) -> &'static str {
        match self {
            Kind::Series => "series-identity",
            Kind::Polynomial => "polynomial-identity",
            Kind::Enumerative => "enumerative-identity",
        }
    }
}

/// Declared integer parameter with its admissible range (inclusive).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParamSpec {
    pub name: &'static str,
    pub min: i64,
    pub max: i64,
}

/// Named integer parameters for a catalog entry.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Params {
    values: BTreeMap<String, i64>,
}

impl Params {
    pub fn empty() -> Self {
        Params::default()
    }

    pub fn from_pairs(pairs: &[(&str, i64)]) -> Self {
        Params {
            values: pairs
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
        }
    }

    pub fn insert(&mut self, name: &str, value: i64) {
        self.values.insert(name.to_string(), value);
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.values.get(name).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &i64)> {
        self.values.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// A catalog entry: name, comparison kind, declared parameters, available
/// sides, and a one-line description of what the equality says.
#[derive(Debug, Clone, Copy)]
pub struct Entry {
    pub name: &'static str,
    pub kind: Kind,
    pub params: &'static [ParamSpec],
    pub sides: &'static [SideId],
    pub description: &'static str,
}

const LR: &[SideId] = &[SideId::Lhs, SideId::Rhs];
const LRA: &[SideId] = &[SideId::Lhs, SideId::Rhs, SideId::Alt];

const CATALOG: &[Entry] = &[
    Entry {
        name: "ismail_raw",
        kind: Kind::Series,
        params: &[],
        sides: LR,
        description: "Five-variable transformation between two Pochhammer-weighted sums, raw form with infinite-product prefactors",
    },
    Entry {
        name: "ismail_simpl",
        kind: Kind::Series,
        params: &[],
        sides: LR,
        description: "The same transformation after cancelling common infinite products and sending b to -b",
    },
    Entry {
        name: "ismail_lhs_interp",
        kind: Kind::Enumerative,
        params: &[],
        sides: LR,
        description: "Simplified left side equals the pair sum over (distinct, unrestricted) partitions with largest(second) <= parts(first), weights t^(n1+n2) a^n2 b^n1",
    },
    Entry {
        name: "ismail_rhs_interp",
        kind: Kind::Enumerative,
        params: &[],
        sides: LR,
        description: "Simplified right side equals the pair sum restricted by durfee(second) <= initial-run(first)",
    },
    Entry {
        name: "main_connection",
        kind: Kind::Series,
        params: &[],
        sides: LR,
        description: "Double-sum rewrite with a Gaussian binomial factor equals the simplified right side",
    },
    Entry {
        name: "thm5",
        kind: Kind::Enumerative,
        params: &[],
        sides: LR,
        description: "The two pair sums (largest <= parts vs durfee <= run) agree despite counting different pairs",
    },
    Entry {
        name: "thm7",
        kind: Kind::Enumerative,
        params: &[ParamSpec { name: "N", min: 0, max: 16 }],
        sides: LR,
        description: "Bounded refinement of the pair-sum equality with all parts at most N",
    },
    Entry {
        name: "thmL",
        kind: Kind::Series,
        params: &[ParamSpec { name: "N", min: 0, max: 16 }],
        sides: LR,
        description: "Finite refinement of the simplified transformation with Gaussian binomial bounds at level N",
    },
    Entry {
        name: "ramanujan_raw",
        kind: Kind::Series,
        params: &[],
        sides: LR,
        description: "Two-variable series transformation between the base-q sum and a base-q^2 sum with an infinite-product prefactor",
    },
    Entry {
        name: "ramanujan",
        kind: Kind::Series,
        params: &[],
        sides: LR,
        description: "The same transformation after x -> -x with the prefactor carried inside the sum",
    },
    Entry {
        name: "ramanujan_lhs_interp",
        kind: Kind::Enumerative,
        params: &[],
        sides: LR,
        description: "The base-q sum equals the generating function of gap-2 partitions weighted by x^parts",
    },
    Entry {
        name: "ramanujan_rhs_interp",
        kind: Kind::Enumerative,
        params: &[],
        sides: LR,
        description: "The base-q^2 sum equals the generating function of distinct-part partitions whose smallest even part exceeds twice the odd-part count",
    },
    Entry {
        name: "dist_even",
        kind: Kind::Series,
        params: &[ParamSpec { name: "n", min: 0, max: 20 }],
        sides: LR,
        description: "Product form for distinct even parts >= 2n+2 equals its sum form with the staircase extraction exponent",
    },
    Entry {
        name: "nk_repr",
        kind: Kind::Series,
        params: &[],
        sides: LRA,
        description: "Regrouping of the base-q^2 double sum through a Gaussian binomial over the combined index n+k",
    },
    Entry {
        name: "rr_last",
        kind: Kind::Enumerative,
        params: &[],
        sides: LR,
        description: "The regrouped double sum equals the gap-2 generating function, summing minimal configurations times even-column insertions",
    },
    Entry {
        name: "thm4",
        kind: Kind::Polynomial,
        params: &[ParamSpec { name: "L", min: 0, max: 40 }],
        sides: LR,
        description: "Polynomial refinement: bounded minimal-configuration sum equals a Gaussian binomial fan with an odd-L correction term",
    },
    Entry {
        name: "corollary",
        kind: Kind::Polynomial,
        params: &[
            ParamSpec { name: "L", min: 0, max: 40 },
            ParamSpec { name: "m", min: 0, max: 40 },
        ],
        sides: LR,
        description: "Coefficient-wise consequence of the polynomial refinement, compared after clearing the (q^2;q^2)_m denominator",
    },
    Entry {
        name: "gf_bdd",
        kind: Kind::Series,
        params: &[
            ParamSpec { name: "j", min: 1, max: 12 },
            ParamSpec { name: "N", min: 1, max: 12 },
        ],
        sides: LRA,
        description: "Three dissections of the generating function for partitions with parts in {j..N}: geometric product, smallest-part split, Durfee-square split",
    },
    Entry {
        name: "gf_parts",
        kind: Kind::Enumerative,
        params: &[
            ParamSpec { name: "j", min: 1, max: 12 },
            ParamSpec { name: "N", min: 1, max: 12 },
        ],
        sides: LR,
        description: "Sum form for partitions with between j and N parts against the enumeration oracle",
    },
    Entry {
        name: "gf_dist",
        kind: Kind::Enumerative,
        params: &[
            ParamSpec { name: "j", min: 1, max: 12 },
            ParamSpec { name: "N", min: 1, max: 12 },
        ],
        sides: LR,
        description: "Sum form for distinct-part partitions with between j and N parts against the enumeration oracle",
    },
];

pub fn catalog() -> &'static [Entry] {
    CATALOG
}

pub fn entry(name: &str) -> Result<&'static Entry, IdentityError> {
    CATALOG
        .iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
        .ok_or_else(|| IdentityError::UnknownIdentity(name.to_string()))
}

/// Validates `params` against the entry's declared specs and extracts them
/// in declaration order.
fn checked_params(e: &Entry, params: &Params) -> Result<Vec<i64>, IdentityError> {
    let mut out = Vec::with_capacity(e.params.len());
    for spec in e.params {
        let value = params.get(spec.name).ok_or(IdentityError::MissingParam {
            identity: e.name.to_string(),
            name: spec.name,
        })?;
        if value < spec.min || value > spec.max {
            return Err(IdentityError::ParamOutOfRange {
                name: spec.name,
                value,
                min: spec.min,
                max: spec.max,
            });
        }
        out.push(value);
    }
    Ok(out)
}

/// One built side of an identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Built {
    Series(TruncatedSeries),
    Poly(Polynomial),
}

impl Built {
    pub fn text(&self) -> String {
        match self {
            Built::Series(s) => s.to_string(),
            Built::Poly(p) => p.to_string(),
        }
    }

    pub fn json_terms(&self) -> serde_json::Value {
        match self {
            Built::Series(s) => s.body().to_json_terms(),
            Built::Poly(p) => p.to_json_terms(),
        }
    }
}

/// Builds one side of the named identity at truncation `trunc` (ignored for
/// polynomial-kind entries, which are exact).
pub fn build(name: &str, side: SideId, params: &Params, trunc: u32) -> Result<Built, IdentityError> {
    build_with(name, side, params, trunc, None)
}

/// [`build`] with an optional deliberate mutation, used to demonstrate that
/// the checker actually fails on broken builders.
pub fn build_with(
    name: &str,
    side: SideId,
    params: &Params,
    trunc: u32,
    mutation: Option<Mutation>,
) -> Result<Built, IdentityError> {
    let e = entry(name)?;
    if !e.sides.contains(&side) {
        return Err(IdentityError::UnknownSide {
            identity: e.name.to_string(),
            side,
        });
    }
    let p = checked_params(e, params)?;
    let t = trunc;
    let built = match (e.name, side) {
        ("ismail_raw", SideId::Lhs) => Built::Series(builders::ismail_raw_lhs(t)?),
        ("ismail_raw", SideId::Rhs) => Built::Series(builders::ismail_raw_rhs(t)?),
        ("ismail_simpl", SideId::Lhs) => Built::Series(builders::ismail_simpl_lhs(t)?),
        ("ismail_simpl", SideId::Rhs) => Built::Series(builders::ismail_simpl_rhs(t)?),
        ("ismail_lhs_interp", SideId::Lhs) => Built::Series(builders::ismail_simpl_lhs(t)?),
        ("ismail_lhs_interp", SideId::Rhs) => {
            Built::Series(enumerative::ismail_pair_oracle_largest(t))
        }
        ("ismail_rhs_interp", SideId::Lhs) => Built::Series(builders::ismail_simpl_rhs(t)?),
        ("ismail_rhs_interp", SideId::Rhs) => {
            Built::Series(enumerative::ismail_pair_oracle_durfee(t))
        }
        ("main_connection", SideId::Lhs) => Built::Series(builders::main_connection_lhs(t)?),
        ("main_connection", SideId::Rhs) => Built::Series(builders::ismail_simpl_rhs(t)?),
        ("thm5", SideId::Lhs) => Built::Series(enumerative::ismail_pair_oracle_largest(t)),
        ("thm5", SideId::Rhs) => Built::Series(enumerative::ismail_pair_oracle_durfee(t)),
        ("thm7", SideId::Lhs) => {
            Built::Series(enumerative::bounded_pair_oracle_largest(p[0] as u32, t))
        }
        ("thm7", SideId::Rhs) => {
            Built::Series(enumerative::bounded_pair_oracle_durfee(p[0] as u32, t))
        }
        ("thmL", SideId::Lhs) => Built::Series(builders::thml_lhs(p[0] as u32, t)?),
        ("thmL", SideId::Rhs) => Built::Series(builders::thml_rhs(p[0] as u32, t)?),
        ("ramanujan_raw", SideId::Lhs) => Built::Series(builders::ramanujan_raw_lhs(t)?),
        ("ramanujan_raw", SideId::Rhs) => Built::Series(builders::ramanujan_raw_rhs(t)?),
        ("ramanujan", SideId::Lhs) => Built::Series(builders::ramanujan_lhs(t)?),
        ("ramanujan", SideId::Rhs) => Built::Series(builders::ramanujan_rhs(t)?),
        ("ramanujan_lhs_interp", SideId::Lhs) => Built::Series(builders::ramanujan_lhs(t)?),
        ("ramanujan_lhs_interp", SideId::Rhs) => Built::Series(enumerative::gap2_oracle(t)),
        ("ramanujan_rhs_interp", SideId::Lhs) => Built::Series(builders::ramanujan_rhs(t)?),
        ("ramanujan_rhs_interp", SideId::Rhs) => {
            Built::Series(enumerative::distinct_se_oracle(t))
        }
        ("dist_even", SideId::Lhs) => Built::Series(builders::dist_even_lhs(p[0] as u32, t)?),
        ("dist_even", SideId::Rhs) => Built::Series(builders::dist_even_rhs(p[0] as u32, t)?),
        ("nk_repr", SideId::Lhs) => Built::Series(builders::ramanujan_rhs(t)?),
        ("nk_repr", SideId::Rhs) => Built::Series(builders::nk_repr_combined(t)?),
        ("nk_repr", SideId::Alt) => Built::Series(builders::nk_repr_split(t)?),
        ("rr_last", SideId::Lhs) => Built::Series(builders::nk_repr_combined(t)?),
        ("rr_last", SideId::Rhs) => Built::Series(enumerative::gap2_oracle(t)),
        ("thm4", SideId::Lhs) => Built::Poly(polynomial::thm4_lhs(p[0])),
        ("thm4", SideId::Rhs) => Built::Poly(polynomial::thm4_rhs(
            p[0],
            mutation == Some(Mutation::Thm4DropOddCorrection),
        )),
        ("corollary", SideId::Lhs) => Built::Poly(polynomial::corollary_lhs_cleared(p[0], p[1])?),
        ("corollary", SideId::Rhs) => Built::Poly(polynomial::corollary_rhs_cleared(p[0], p[1])),
        ("gf_bdd", SideId::Lhs) => Built::Series(builders::gf_bdd_product(p[0], p[1], t)?),
        ("gf_bdd", SideId::Rhs) => Built::Series(builders::gf_bdd_smallest_part(p[0], p[1], t)?),
        ("gf_bdd", SideId::Alt) => Built::Series(builders::gf_bdd_durfee(p[0], p[1], t)?),
        ("gf_parts", SideId::Lhs) => Built::Series(builders::gf_parts_sum(p[0], p[1], t)?),
        ("gf_parts", SideId::Rhs) => {
            Built::Series(enumerative::parts_range_oracle(p[0] as u32, p[1] as u32, t))
        }
        ("gf_dist", SideId::Lhs) => Built::Series(builders::gf_dist_sum(p[0], p[1], t)?),
        ("gf_dist", SideId::Rhs) => {
            Built::Series(enumerative::distinct_range_oracle(p[0] as u32, p[1] as u32, t))
        }
        (name, side) => {
            return Err(IdentityError::Internal(format!(
                "no builder for {} side {:?}",
                name, side
            )))
        }
    };
    Ok(built)
}
