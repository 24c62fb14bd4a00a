//! The eight families of cusp types known to occur on rational unicuspidal
//! curves, and the two types that pass the counting condition but are ruled
//! out by spectrum semicontinuity.
//!
//! | id   | type                                                      | degree                | C^2  |
//! |------|-----------------------------------------------------------|-----------------------|------|
//! | i    | `(l a^2 + b^2, l c^2 + a^2 + 2)(a^2, l a^2 + b^2)`        | `a c (l a^2 + b^2)`   | 0    |
//! | ii   | `(l a^2 + b^2, l c^2 + a^2 + 2)(a, l a + F_{2k-5})`       | `c (l a^2 + b^2)`     | -1   |
//! | iii  | `(n-1, n)(m, nm-1)`                                       | `nm`                  | m    |
//! | iv   | `(n, 4n-1)(m, nm-1)`                                      | `2nm`                 | m    |
//! | v    | `(n-1, n)(n, (n+1)^2)`                                    | `n^2 + 1`             | 1-n  |
//! | vi   | `(n, 4n+1)(4n+1, (2n+1)^2)`                               | `8n^2 + 4n + 1`       | -n   |
//! | vii  | `(F_{4k}/3, F_{4k+4}/3)(3, 1)`                            | `F_{4k+2}`            | -2   |
//! | viii | `(F_{4k}/3, F_{4k+4}/3)(6, 1)`                            | `2 F_{4k+2}`          | -2   |
//!
//! with `a = F_{2k-1}`, `b = F_{2k-3}`, `c = F_{2k+1}`. Family (i) at
//! `k = 2, l = 0` collapses to the one-pair type `(4, 25)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Overflow};
use crate::criterion::{cbar_squared, kodaira_hint, CriterionError, KodairaHint};
use crate::fibonacci::fibonacci;
use crate::newton::{validate_unsigned, NewtonPairType, SingularityType, TypeError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
}

impl FamilyId {
    pub const ALL: [FamilyId; 8] = [
        FamilyId::I,
        FamilyId::II,
        FamilyId::III,
        FamilyId::IV,
        FamilyId::V,
        FamilyId::VI,
        FamilyId::VII,
        FamilyId::VIII,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::I => "i",
            FamilyId::II => "ii",
            FamilyId::III => "iii",
            FamilyId::IV => "iv",
            FamilyId::V => "v",
            FamilyId::VI => "vi",
            FamilyId::VII => "vii",
            FamilyId::VIII => "viii",
        }
    }

    pub fn expected_kappa(self) -> ExpectedKappa {
        match self {
            FamilyId::I | FamilyId::II | FamilyId::III | FamilyId::IV => {
                ExpectedKappa::MinusInfinity
            }
            FamilyId::V | FamilyId::VI => ExpectedKappa::One,
            FamilyId::VII | FamilyId::VIII => ExpectedKappa::Two,
        }
    }

    /// Smallest admissible parameters.
    pub fn first_params(self) -> FamilyParams {
        match self {
            FamilyId::I => FamilyParams::KL { k: 2, l: 0 },
            FamilyId::II => FamilyParams::KL { k: 3, l: 0 },
            FamilyId::III => FamilyParams::NM { n: 3, m: 2 },
            FamilyId::IV => FamilyParams::NM { n: 2, m: 2 },
            FamilyId::V => FamilyParams::N { n: 3 },
            FamilyId::VI => FamilyParams::N { n: 2 },
            FamilyId::VII | FamilyId::VIII => FamilyParams::K { k: 2 },
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        FamilyId::ALL
            .into_iter()
            .find(|f| f.as_str() == lower)
            .ok_or_else(|| format!("unknown family {s:?} (expected i..viii)"))
    }
}

/// Family parameters. Which shape applies depends on the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FamilyParams {
    KL { k: u64, l: u64 },
    NM { n: u64, m: u64 },
    N { n: u64 },
    K { k: u64 },
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyParams::KL { k, l } => write!(f, "k={k},l={l}"),
            FamilyParams::NM { n, m } => write!(f, "n={n},m={m}"),
            FamilyParams::N { n } => write!(f, "n={n}"),
            FamilyParams::K { k } => write!(f, "k={k}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedKappa {
    MinusInfinity,
    One,
    Two,
}

impl ExpectedKappa {
    pub fn coarse(self) -> KodairaHint {
        match self {
            ExpectedKappa::MinusInfinity => KodairaHint::MinusInfinity,
            ExpectedKappa::One | ExpectedKappa::Two => KodairaHint::OneOrTwo,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub params: FamilyParams,
    #[serde(rename = "type")]
    pub ntype: SingularityType,
    #[serde(with = "crate::json_int::unsigned")]
    pub degree: u128,
    #[serde(with = "crate::json_int::signed")]
    pub cbar_sq: i128,
    pub expected_kappa: ExpectedKappa,
}

/// A `(family, params)` pair as returned by [`identify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyMatch {
    pub family: FamilyId,
    pub params: FamilyParams,
}

impl fmt::Display for FamilyMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.family, self.params)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExceptionalType {
    #[serde(rename = "type")]
    pub ntype: NewtonPairType,
    #[serde(with = "crate::json_int::unsigned")]
    pub degree: u128,
    pub exclusion_note: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameters {params} are out of range for family {family}")]
    ParamsOutOfRange {
        family: FamilyId,
        params: FamilyParams,
    },
    #[error("family {family}({params}) produced an inconsistent instance: {reason}")]
    ConstructionInconsistency {
        family: FamilyId,
        params: FamilyParams,
        reason: String,
    },
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

/// Raw type and degree from the printed formulas, before validation.
struct RawInstance {
    quad: (u128, u128, u128, u128),
    degree: u128,
    cbar_sq: i128,
}

fn fib(n: u64) -> Result<u128, Overflow> {
    let n = u32::try_from(n).map_err(|_| Overflow::new("Fibonacci index"))?;
    fibonacci(n)
}

fn sq(x: u128) -> Result<u128, Overflow> {
    arith::mul(x, x, "square")
}

fn raw(family: FamilyId, params: FamilyParams) -> Result<RawInstance, FamilyError> {
    use arith::{add, mul, signed};
    let out_of_range = || FamilyError::ParamsOutOfRange { family, params };
    let w = "family formula";
    let r = match (family, params) {
        (FamilyId::I | FamilyId::II, FamilyParams::KL { k, l }) => {
            let min_k = if family == FamilyId::I { 2 } else { 3 };
            if k < min_k {
                return Err(out_of_range());
            }
            let l = l as u128;
            let a = fib(2 * k - 1)?;
            let b = fib(2 * k - 3)?;
            let c = fib(2 * k + 1)?;
            let p1 = add(mul(l, sq(a)?, w)?, sq(b)?, w)?;
            let q1 = add(add(mul(l, sq(c)?, w)?, sq(a)?, w)?, 2, w)?;
            if family == FamilyId::I {
                RawInstance {
                    quad: (p1, q1, sq(a)?, p1),
                    degree: mul(mul(a, c, w)?, p1, w)?,
                    cbar_sq: 0,
                }
            } else {
                // k >= 3 keeps the index 2k-5 at 1 or more
                assert!(2 * k - 5 >= 1);
                let q2 = add(mul(l, a, w)?, fib(2 * k - 5)?, w)?;
                RawInstance {
                    quad: (p1, q1, a, q2),
                    degree: mul(c, p1, w)?,
                    cbar_sq: -1,
                }
            }
        }
        (FamilyId::III | FamilyId::IV, FamilyParams::NM { n, m }) => {
            let min_n = if family == FamilyId::III { 3 } else { 2 };
            if n < min_n || m < 2 {
                return Err(out_of_range());
            }
            let (n, m) = (n as u128, m as u128);
            let nm = mul(n, m, w)?;
            let cbar_sq = signed(m, w)?;
            if family == FamilyId::III {
                RawInstance {
                    quad: (n - 1, n, m, nm - 1),
                    degree: nm,
                    cbar_sq,
                }
            } else {
                let q1 = mul(4, n, w)? - 1;
                RawInstance {
                    quad: (n, q1, m, nm - 1),
                    degree: mul(2, nm, w)?,
                    cbar_sq,
                }
            }
        }
        (FamilyId::V, FamilyParams::N { n }) => {
            if n < 3 {
                return Err(out_of_range());
            }
            let n = n as u128;
            RawInstance {
                quad: (n - 1, n, n, sq(n + 1)?),
                degree: add(sq(n)?, 1, w)?,
                cbar_sq: 1 - signed(n, w)?,
            }
        }
        (FamilyId::VI, FamilyParams::N { n }) => {
            if n < 2 {
                return Err(out_of_range());
            }
            let n = n as u128;
            let four_n_1 = add(mul(4, n, w)?, 1, w)?;
            let two_n_1 = add(mul(2, n, w)?, 1, w)?;
            RawInstance {
                quad: (n, four_n_1, four_n_1, sq(two_n_1)?),
                degree: add(mul(8, sq(n)?, w)?, mul(4, n, w)?, w).and_then(|x| add(x, 1, w))?,
                cbar_sq: -signed(n, w)?,
            }
        }
        (FamilyId::VII | FamilyId::VIII, FamilyParams::K { k }) => {
            if k < 2 {
                return Err(out_of_range());
            }
            let f4k = fib(4 * k)?;
            let f4k4 = fib(4 * k + 4)?;
            if f4k % 3 != 0 || f4k4 % 3 != 0 {
                return Err(FamilyError::ConstructionInconsistency {
                    family,
                    params,
                    reason: "F_4k or F_4k+4 is not divisible by 3".into(),
                });
            }
            let f = fib(4 * k + 2)?;
            let (p2, degree) = if family == FamilyId::VII {
                (3, f)
            } else {
                (6, mul(2, f, w)?)
            };
            RawInstance {
                quad: (f4k / 3, f4k4 / 3, p2, 1),
                degree,
                cbar_sq: -2,
            }
        }
        _ => return Err(out_of_range()),
    };
    Ok(r)
}

/// Build and fully validate one family member.
pub fn instantiate(family: FamilyId, params: FamilyParams) -> Result<FamilyInstance, FamilyError> {
    let r = raw(family, params)?;
    let inconsistent = |reason: String| FamilyError::ConstructionInconsistency {
        family,
        params,
        reason,
    };
    let (p1, q1, p2, q2) = r.quad;
    let ntype = match validate_unsigned(p1, q1, p2, q2) {
        Ok(t) => t,
        Err(TypeError::Overflow(o)) => return Err(o.into()),
        Err(TypeError::Rejected(reason)) => {
            return Err(inconsistent(format!(
                "({p1},{q1})({p2},{q2}) rejected: {reason}"
            )))
        }
    };
    let cbar_sq = match cbar_squared(&ntype, r.degree) {
        Ok(v) => v,
        Err(CriterionError::Overflow(o)) => return Err(o.into()),
        Err(e) => return Err(inconsistent(e.to_string())),
    };
    if cbar_sq != r.cbar_sq {
        return Err(inconsistent(format!(
            "C^2 = {cbar_sq}, expected {}",
            r.cbar_sq
        )));
    }
    let expected_kappa = family.expected_kappa();
    if kodaira_hint(cbar_sq) != expected_kappa.coarse() {
        return Err(inconsistent(format!(
            "C^2 = {cbar_sq} contradicts kappa {expected_kappa:?}"
        )));
    }
    Ok(FamilyInstance {
        family,
        params,
        ntype,
        degree: r.degree,
        cbar_sq,
        expected_kappa,
    })
}

/// Degree of a member, or `None` if it does not fit in `u128`.
fn degree_of(family: FamilyId, params: FamilyParams) -> Option<u128> {
    match raw(family, params) {
        Ok(r) => Some(r.degree),
        Err(FamilyError::Overflow(_)) => None,
        Err(e) => panic!("degree of {family}({params}): {e}"),
    }
}

fn with_first(params: FamilyParams, v: u64) -> FamilyParams {
    match params {
        FamilyParams::KL { l, .. } => FamilyParams::KL { k: v, l },
        FamilyParams::NM { m, .. } => FamilyParams::NM { n: v, m },
        FamilyParams::N { .. } => FamilyParams::N { n: v },
        FamilyParams::K { .. } => FamilyParams::K { k: v },
    }
}

fn with_second(params: FamilyParams, v: u64) -> Option<FamilyParams> {
    match params {
        FamilyParams::KL { k, .. } => Some(FamilyParams::KL { k, l: v }),
        FamilyParams::NM { n, .. } => Some(FamilyParams::NM { n, m: v }),
        FamilyParams::N { .. } | FamilyParams::K { .. } => None,
    }
}

fn first(params: FamilyParams) -> u64 {
    match params {
        FamilyParams::KL { k, .. } | FamilyParams::K { k } => k,
        FamilyParams::NM { n, .. } | FamilyParams::N { n } => n,
    }
}

fn second(params: FamilyParams) -> Option<u64> {
    match params {
        FamilyParams::KL { l, .. } => Some(l),
        FamilyParams::NM { m, .. } => Some(m),
        _ => None,
    }
}

/// Visit every parameter tuple of `family` with degree at most `max_degree`,
/// in lexicographic order. Relies on the degree being strictly increasing in
/// each parameter, which is asserted along the way.
fn for_each_params(
    family: FamilyId,
    max_degree: u128,
    mut visit: impl FnMut(FamilyParams) -> bool,
) {
    let start = family.first_params();
    let mut prev_row_start: Option<u128> = None;
    let mut outer = first(start);
    loop {
        let row_start = with_first(start, outer);
        let Some(d0) = degree_of(family, row_start).filter(|d| *d <= max_degree) else {
            return;
        };
        if let Some(prev) = prev_row_start {
            assert!(
                d0 > prev,
                "family {family} degree not increasing in its first parameter"
            );
        }
        prev_row_start = Some(d0);
        if !visit(row_start) {
            return;
        }
        if let Some(mut inner) = second(row_start) {
            let mut prev = d0;
            loop {
                inner += 1;
                let p = with_second(row_start, inner).expect("two-parameter family");
                let Some(d) = degree_of(family, p).filter(|d| *d <= max_degree) else {
                    break;
                };
                assert!(
                    d > prev,
                    "family {family} degree not increasing in its second parameter"
                );
                prev = d;
                if !visit(p) {
                    return;
                }
            }
        }
        outer += 1;
    }
}

/// All members of `family` with degree at most `max_degree`, in parameter
/// order. The degenerate one-pair member of family (i) is included and can
/// be told apart by [`SingularityType::is_degenerate`].
pub fn enumerate_family(
    family: FamilyId,
    max_degree: u128,
) -> Result<Vec<FamilyInstance>, FamilyError> {
    let mut out = Vec::new();
    let mut err = None;
    for_each_params(family, max_degree, |p| match instantiate(family, p) {
        Ok(inst) => {
            out.push(inst);
            true
        }
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Every `(family, params)` whose member is exactly `(t, degree)`.
///
/// Parameters that are readable straight off the type are tried directly;
/// the Fibonacci families are searched in `k` until their degree exceeds
/// `degree`.
pub fn identify(t: &SingularityType, degree: u128) -> Vec<FamilyMatch> {
    let mut guesses: Vec<(FamilyId, FamilyParams)> = Vec::new();
    let (p1, q1, p2) = match t {
        SingularityType::TwoPairs(x) => (x.p1(), x.q1(), x.p2()),
        SingularityType::OnePair(x) => (1, 0, x.a()),
    };
    let small = |x: u128| u64::try_from(x).ok();
    if let (Some(q1), Some(p2)) = (small(q1), small(p2)) {
        guesses.push((FamilyId::III, FamilyParams::NM { n: q1, m: p2 }));
        guesses.push((FamilyId::V, FamilyParams::N { n: p2 }));
    }
    if let (Some(p1), Some(p2)) = (small(p1), small(p2)) {
        guesses.push((FamilyId::IV, FamilyParams::NM { n: p1, m: p2 }));
        guesses.push((FamilyId::VI, FamilyParams::N { n: p1 }));
    }
    for family in [FamilyId::I, FamilyId::II, FamilyId::VII, FamilyId::VIII] {
        let start = family.first_params();
        for k in first(start).. {
            let p = with_first(start, k);
            match degree_of(family, p) {
                Some(d) if d <= degree => {}
                _ => break,
            }
            match p {
                FamilyParams::KL { .. } => {
                    // p1 = l F_{2k-1}^2 + F_{2k-3}^2
                    let a2 = fib(2 * k - 1).and_then(sq);
                    let b2 = fib(2 * k - 3).and_then(sq);
                    let (Ok(a2), Ok(b2)) = (a2, b2) else { break };
                    if p1 >= b2 && (p1 - b2) % a2 == 0 {
                        if let Some(l) = small((p1 - b2) / a2) {
                            guesses.push((family, FamilyParams::KL { k, l }));
                        }
                    }
                }
                _ => guesses.push((family, p)),
            }
        }
    }
    let mut out: Vec<FamilyMatch> = guesses
        .into_iter()
        .filter_map(|(family, params)| {
            let inst = instantiate(family, params).ok()?;
            (inst.ntype == *t && inst.degree == degree).then_some(FamilyMatch { family, params })
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The two types that satisfy the counting condition yet do not occur.
pub fn known_exceptions() -> Vec<ExceptionalType> {
    let make = |p1, q1, p2, q2, degree, note: &str| ExceptionalType {
        ntype: NewtonPairType::new(p1, q1, p2, q2).expect("valid exceptional type"),
        degree,
        exclusion_note: note.to_string(),
    };
    vec![
        make(2, 7, 4, 17, 17, "SS fails at l = 12"),
        make(2, 3, 6, 31, 20, "SS fails at l = 13"),
    ]
}
