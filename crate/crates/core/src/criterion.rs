//! Realizability pipeline for a single type: candidate degree, the counting
//! condition `R(jd) = (j+1)(j+2)/2` for `j = 0..=d-3`, and the
//! self-intersection `C^2` of the strict transform.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{self, Overflow};
use crate::newton::SingularityType;
use crate::semigroup::{NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CriterionError {
    #[error("no integer degree d with (d-1)(d-2) = 2*{delta}")]
    NoIntegerDegree { delta: u128 },
    #[error("delta {delta} only fits a curve of degree below 3")]
    DegenerateDegree { delta: u128 },
    #[error("degree {degree} does not satisfy (d-1)(d-2) = 2*{delta}")]
    DegreeMismatch { degree: u128, delta: u128 },
    #[error("the two C^2 formulas disagree for degree {degree} (delta {delta})")]
    InconsistentDegree { degree: u128, delta: u128 },
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    /// Smallest `j` at which the condition fails.
    FailAt(u64),
}

impl Verdict {
    pub fn passed(self) -> bool {
        self == Verdict::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KodairaHint {
    /// `C^2 >= -1`
    MinusInfinity,
    OneOrTwo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionRow {
    pub j: u64,
    pub r: u64,
    pub target: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    #[serde(rename = "type")]
    pub ntype: SingularityType,
    #[serde(with = "crate::json_int::unsigned")]
    pub degree: u128,
    #[serde(with = "crate::json_int::unsigned")]
    pub delta: u128,
    pub rows: Vec<CriterionRow>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveCandidate {
    #[serde(rename = "type")]
    pub ntype: SingularityType,
    #[serde(with = "crate::json_int::unsigned")]
    pub degree: u128,
    #[serde(with = "crate::json_int::unsigned")]
    pub delta: u128,
    #[serde(with = "crate::json_int::signed")]
    pub cbar_sq: i128,
    pub verdict: Verdict,
}

/// The unique `d >= 3` with `(d-1)(d-2) = 2 delta`.
pub fn degree_from_delta(delta: u128) -> Result<u128, CriterionError> {
    // (2d - 3)^2 = 1 + 8 delta
    let disc = delta
        .checked_mul(8)
        .and_then(|x| x.checked_add(1))
        .ok_or(Overflow::new("1 + 8 delta"))?;
    let root = disc.isqrt();
    if root * root != disc {
        return Err(CriterionError::NoIntegerDegree { delta });
    }
    let d = (root + 3) / 2;
    if d < 3 {
        return Err(CriterionError::DegenerateDegree { delta });
    }
    debug_assert_eq!(arith::degree_genus(d)?, 2 * delta);
    Ok(d)
}

fn ensure_degree(delta: u128, degree: u128) -> Result<(), CriterionError> {
    if degree < 3 {
        return Err(CriterionError::DegenerateDegree { delta });
    }
    let two_delta = delta.checked_mul(2).ok_or(Overflow::new("2 delta"))?;
    if arith::degree_genus(degree)? != two_delta {
        return Err(CriterionError::DegreeMismatch { degree, delta });
    }
    Ok(())
}

fn target(j: u64) -> u64 {
    (j + 1) * (j + 2) / 2
}

fn semigroup_of(t: &SingularityType, delta: u128) -> Result<NumericalSemigroup, CriterionError> {
    Ok(NumericalSemigroup::build(&t.generators()?, delta)?)
}

/// Evaluate `R(jd)` against `(j+1)(j+2)/2` for every `j = 0..=d-3`.
pub fn check_sdp(t: &SingularityType, degree: u128) -> Result<CriterionReport, CriterionError> {
    let delta = t.delta()?;
    ensure_degree(delta, degree)?;
    let s = semigroup_of(t, delta)?;
    // the sieve holds 2 delta > (d-3) d entries, so d fits comfortably in u64
    let d = degree as u64;
    let rows: Vec<CriterionRow> = (0..=d - 3)
        .map(|j| CriterionRow {
            j,
            r: s.count_upto(j * d),
            target: target(j),
        })
        .collect();
    let verdict = rows
        .iter()
        .find(|row| row.r != row.target)
        .map_or(Verdict::Pass, |row| Verdict::FailAt(row.j));
    Ok(CriterionReport {
        ntype: *t,
        degree,
        delta,
        rows,
        verdict,
    })
}

/// Like [`check_sdp`] but stops at the first failing `j` and keeps no rows.
pub fn sdp_verdict(s: &NumericalSemigroup, degree: u64) -> Verdict {
    (0..=degree.saturating_sub(3))
        .find(|&j| s.count_upto(j * degree) != target(j))
        .map_or(Verdict::Pass, Verdict::FailAt)
}

/// `C^2 = 3d - 1 - p1 p2 - q1 p2 - q2`, cross-checked against
/// `C^2 = d^2 - p2 q2 - p1 q1 p2^2`. The two agree exactly when
/// `(d-1)(d-2) = 2 delta`.
///
/// For a one-pair type `(a,b)` the formulas read `3d - 1 - a - b` and
/// `d^2 - a b`.
pub fn cbar_squared(t: &SingularityType, degree: u128) -> Result<i128, CriterionError> {
    let ovf = "C^2";
    let d = arith::signed(degree, ovf)?;
    let (linear_loss, quad_loss) = match t {
        SingularityType::TwoPairs(t) => {
            let (p1, q1, p2, q2) = t.as_tuple();
            let lin = arith::add(
                arith::add(arith::mul(p1, p2, ovf)?, arith::mul(q1, p2, ovf)?, ovf)?,
                q2,
                ovf,
            )?;
            let quad = arith::add(
                arith::mul(p2, q2, ovf)?,
                arith::mul(arith::mul(arith::mul(p1, q1, ovf)?, p2, ovf)?, p2, ovf)?,
                ovf,
            )?;
            (lin, quad)
        }
        SingularityType::OnePair(t) => (
            arith::add(t.a(), t.b(), ovf)?,
            arith::mul(t.a(), t.b(), ovf)?,
        ),
    };
    let linear = d
        .checked_mul(3)
        .and_then(|x| x.checked_sub(1))
        .and_then(|x| x.checked_sub(arith::signed(linear_loss, ovf).ok()?))
        .ok_or(Overflow::new(ovf))?;
    let quadratic = d
        .checked_mul(d)
        .and_then(|x| x.checked_sub(arith::signed(quad_loss, ovf).ok()?))
        .ok_or(Overflow::new(ovf))?;
    if linear != quadratic {
        return Err(CriterionError::InconsistentDegree {
            degree,
            delta: t.delta()?,
        });
    }
    Ok(linear)
}

/// For unicuspidal curves the complement has log Kodaira dimension `-inf`
/// exactly when `C^2 >= -1`; otherwise it is 1 or 2.
pub fn kodaira_hint(cbar_sq: i128) -> KodairaHint {
    if cbar_sq >= -1 {
        KodairaHint::MinusInfinity
    } else {
        KodairaHint::OneOrTwo
    }
}

/// Run the full pipeline on one type.
pub fn evaluate(t: &SingularityType) -> Result<CurveCandidate, CriterionError> {
    let delta = t.delta()?;
    let degree = degree_from_delta(delta)?;
    let cbar_sq = cbar_squared(t, degree)?;
    let s = semigroup_of(t, delta)?;
    let verdict = sdp_verdict(&s, degree as u64);
    Ok(CurveCandidate {
        ntype: *t,
        degree,
        delta,
        cbar_sq,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> SingularityType {
        s.parse().unwrap()
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_from_delta(10), Ok(6));
        assert_eq!(degree_from_delta(120), Ok(17));
        assert_eq!(degree_from_delta(171), Ok(20));
        assert_eq!(
            degree_from_delta(11),
            Err(CriterionError::NoIntegerDegree { delta: 11 })
        );
        assert_eq!(
            degree_from_delta(0),
            Err(CriterionError::DegenerateDegree { delta: 0 })
        );
        assert_eq!(degree_from_delta(1), Ok(3));
    }

    #[test]
    fn degree_beyond_double_precision() {
        let d: u128 = (1 << 60) + 7;
        let delta = (d - 1) * (d - 2) / 2;
        assert_eq!(degree_from_delta(delta), Ok(d));
        assert!(matches!(
            degree_from_delta(delta + 1),
            Err(CriterionError::NoIntegerDegree { .. })
        ));
    }

    #[test]
    fn sdp_rows_for_2_3_2_5() {
        let r = check_sdp(&ty("(2,3)(2,5)"), 6).unwrap();
        let rows: Vec<_> = r.rows.iter().map(|x| (x.j, x.r, x.target)).collect();
        assert_eq!(rows, vec![(0, 1, 1), (1, 3, 3), (2, 6, 6), (3, 10, 10)]);
        assert_eq!(r.verdict, Verdict::Pass);
    }

    #[test]
    fn sdp_failure_is_first_j() {
        let r = check_sdp(&ty("(2,5)(2,3)"), 7).unwrap();
        assert_eq!(r.delta, 15);
        assert_eq!(r.verdict, Verdict::FailAt(1));
        assert_eq!((r.rows[1].r, r.rows[1].target), (2, 3));
        assert_eq!(r.rows.len(), 5);
    }

    #[test]
    fn sdp_exception_passes() {
        assert_eq!(
            check_sdp(&ty("(2,7)(4,17)"), 17).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn sdp_wrong_degree() {
        assert_eq!(
            check_sdp(&ty("(2,3)(2,5)"), 7),
            Err(CriterionError::DegreeMismatch {
                degree: 7,
                delta: 10
            })
        );
        assert!(matches!(
            check_sdp(&ty("(2,3)(2,5)"), 2),
            Err(CriterionError::DegenerateDegree { .. })
        ));
    }

    #[test]
    fn cbar_values() {
        assert_eq!(cbar_squared(&ty("(5,31)(4,5)"), 50), Ok(0));
        assert_eq!(cbar_squared(&ty("(4,27)(5,1)"), 52), Ok(-1));
        assert_eq!(cbar_squared(&ty("(7,48)(3,1)"), 55), Ok(-2));
        assert_eq!(cbar_squared(&ty("(4,25)"), 10), Ok(0));
    }

    #[test]
    fn cbar_formulas_disagree_off_degree() {
        for d in [49, 51] {
            assert!(matches!(
                cbar_squared(&ty("(5,31)(4,5)"), d),
                Err(CriterionError::InconsistentDegree { .. })
            ));
        }
    }

    #[test]
    fn hints() {
        assert_eq!(kodaira_hint(2), KodairaHint::MinusInfinity);
        assert_eq!(kodaira_hint(-1), KodairaHint::MinusInfinity);
        assert_eq!(kodaira_hint(-2), KodairaHint::OneOrTwo);
    }

    #[test]
    fn pipeline() {
        let c = evaluate(&ty("(7,48)(3,1)")).unwrap();
        assert_eq!(
            (c.delta, c.degree, c.cbar_sq, c.verdict),
            (1431, 55, -2, Verdict::Pass)
        );
        assert_eq!(
            evaluate(&ty("(2,3)(2,7)")),
            Err(CriterionError::NoIntegerDegree { delta: 11 })
        );
    }
}
