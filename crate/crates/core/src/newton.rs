//! Singularity types with two Newton pairs.
//!
//! A type `(p1,q1)(p2,q2)` stands for the branch parametrised by
//! `x = t^(p1 p2)`, `y = t^(q1 p2) + t^(q1 p2 + q2)`. When `p1 = 1` the first
//! pair is trivial and the branch has a single Puiseux pair
//! `(p2, p2 q1 + q2)`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::arith::{self, Overflow};

/// Why a quadruple was refused. The string codes are stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    NonPositiveEntry,
    SecondMultiplicityTooSmall,
    OrderingViolation,
    NonCoprimeFirstPair,
    NonCoprimeSecondPair,
}

impl RejectReason {
    pub fn code(self) -> &'static str {
        match self {
            RejectReason::NonPositiveEntry => "non-positive entry",
            RejectReason::SecondMultiplicityTooSmall => "p2 < 2",
            RejectReason::OrderingViolation => "ordering violation",
            RejectReason::NonCoprimeFirstPair => "non-coprime first pair",
            RejectReason::NonCoprimeSecondPair => "non-coprime second pair",
        }
    }
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("rejected type: {0}")]
    Rejected(RejectReason),
    #[error(transparent)]
    Overflow(#[from] Overflow),
}

impl From<RejectReason> for TypeError {
    fn from(r: RejectReason) -> Self {
        TypeError::Rejected(r)
    }
}

/// A validated type `(p1,q1)(p2,q2)` with `p1 >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NewtonPairType {
    p1: u128,
    q1: u128,
    p2: u128,
    q2: u128,
}

/// The single Puiseux pair `(a, b)` a type with `p1 = 1` collapses to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegeneratePuiseuxType {
    a: u128,
    b: u128,
}

/// Exponents of the normal-form parametrisation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParametrizationExponents {
    pub x_exp: u128,
    pub y_exp1: u128,
    pub y_exp2: u128,
}

/// Minimal generators of the value semigroup of a two-pair branch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SemigroupGenerators {
    pub g0: u128,
    pub g1: u128,
    pub g2: u128,
}

impl SemigroupGenerators {
    pub fn to_vec(self) -> Vec<u128> {
        vec![self.g0, self.g1, self.g2]
    }
}

/// Validate a raw quadruple.
///
/// `p1 = 1` is accepted and returned as the degenerate one-pair type.
pub fn validate_type(p1: i128, q1: i128, p2: i128, q2: i128) -> Result<SingularityType, TypeError> {
    if p1 <= 0 || q1 <= 0 || p2 <= 0 || q2 <= 0 {
        return Err(RejectReason::NonPositiveEntry.into());
    }
    validate_unsigned(p1 as u128, q1 as u128, p2 as u128, q2 as u128)
}

/// Same as [`validate_type`] for values already known to be non-negative.
pub fn validate_unsigned(
    p1: u128,
    q1: u128,
    p2: u128,
    q2: u128,
) -> Result<SingularityType, TypeError> {
    if p1 == 0 || q1 == 0 || p2 == 0 || q2 == 0 {
        return Err(RejectReason::NonPositiveEntry.into());
    }
    if p2 < 2 {
        return Err(RejectReason::SecondMultiplicityTooSmall.into());
    }
    if p1 >= q1 {
        return Err(RejectReason::OrderingViolation.into());
    }
    if p1.gcd(&q1) != 1 {
        return Err(RejectReason::NonCoprimeFirstPair.into());
    }
    if p2.gcd(&q2) != 1 {
        return Err(RejectReason::NonCoprimeSecondPair.into());
    }
    if p1 == 1 {
        let b = arith::add(arith::mul(p2, q1, "p2*q1")?, q2, "p2*q1+q2")?;
        return Ok(SingularityType::OnePair(DegeneratePuiseuxType { a: p2, b }));
    }
    let t = NewtonPairType { p1, q1, p2, q2 };
    // all derived invariants must be representable
    t.delta()?;
    t.semigroup_generators()?;
    Ok(SingularityType::TwoPairs(t))
}

impl NewtonPairType {
    /// Validate and require a genuine two-pair type.
    pub fn new(p1: u128, q1: u128, p2: u128, q2: u128) -> Result<Self, TypeError> {
        match validate_unsigned(p1, q1, p2, q2)? {
            SingularityType::TwoPairs(t) => Ok(t),
            SingularityType::OnePair(_) => Err(RejectReason::OrderingViolation.into()),
        }
    }

    pub fn p1(&self) -> u128 {
        self.p1
    }
    pub fn q1(&self) -> u128 {
        self.q1
    }
    pub fn p2(&self) -> u128 {
        self.p2
    }
    pub fn q2(&self) -> u128 {
        self.q2
    }

    pub fn as_tuple(&self) -> (u128, u128, u128, u128) {
        (self.p1, self.q1, self.p2, self.q2)
    }

    /// `g0 = p1 p2`, `g1 = q1 p2`, `g2 = p1 p2 q1 + q2`.
    pub fn semigroup_generators(&self) -> Result<SemigroupGenerators, Overflow> {
        let g0 = arith::mul(self.p1, self.p2, "g0")?;
        let g1 = arith::mul(self.q1, self.p2, "g1")?;
        let g2 = arith::add(arith::mul(g0, self.q1, "g2")?, self.q2, "g2")?;
        assert_eq!(
            g0.gcd(&g1).gcd(&g2),
            1,
            "generators of {self} are not coprime"
        );
        Ok(SemigroupGenerators { g0, g1, g2 })
    }

    /// `delta = (p1 q1 p2^2 + p2 q2 - p1 p2 - q1 p2 - q2 + 1) / 2`
    pub fn delta(&self) -> Result<u128, Overflow> {
        let (p1, q1, p2, q2) = self.as_tuple();
        let lead = arith::mul(
            arith::mul(arith::mul(p1, q1, "delta")?, p2, "delta")?,
            p2,
            "delta",
        )?;
        let pos = arith::add(
            arith::add(lead, arith::mul(p2, q2, "delta")?, "delta")?,
            1,
            "delta",
        )?;
        let neg = arith::add(
            arith::add(
                arith::mul(p1, p2, "delta")?,
                arith::mul(q1, p2, "delta")?,
                "delta",
            )?,
            q2,
            "delta",
        )?;
        let numerator = pos
            .checked_sub(neg)
            .expect("delta numerator is non-negative for valid types");
        assert!(
            numerator % 2 == 0,
            "odd delta numerator {numerator} for {self}"
        );
        Ok(numerator / 2)
    }

    pub fn parametrization_exponents(&self) -> Result<ParametrizationExponents, Overflow> {
        let x_exp = arith::mul(self.p1, self.p2, "x exponent")?;
        let y_exp1 = arith::mul(self.q1, self.p2, "y exponent")?;
        let y_exp2 = arith::add(y_exp1, self.q2, "y exponent")?;
        debug_assert!(x_exp < y_exp1 && y_exp1 < y_exp2);
        debug_assert_eq!(x_exp.gcd(&y_exp1).gcd(&y_exp2), 1);
        Ok(ParametrizationExponents {
            x_exp,
            y_exp1,
            y_exp2,
        })
    }
}

impl DegeneratePuiseuxType {
    pub fn new(a: u128, b: u128) -> Result<Self, TypeError> {
        if a == 0 || b == 0 {
            return Err(RejectReason::NonPositiveEntry.into());
        }
        if a < 2 {
            return Err(RejectReason::SecondMultiplicityTooSmall.into());
        }
        if a >= b {
            return Err(RejectReason::OrderingViolation.into());
        }
        if a.gcd(&b) != 1 {
            return Err(RejectReason::NonCoprimeSecondPair.into());
        }
        let t = DegeneratePuiseuxType { a, b };
        t.delta()?;
        Ok(t)
    }

    pub fn a(&self) -> u128 {
        self.a
    }
    pub fn b(&self) -> u128 {
        self.b
    }

    /// `(a - 1)(b - 1) / 2`
    pub fn delta(&self) -> Result<u128, Overflow> {
        let n = arith::mul(self.a - 1, self.b - 1, "delta")?;
        assert!(n % 2 == 0, "odd delta numerator for {self}");
        Ok(n / 2)
    }
}

impl fmt::Display for NewtonPairType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})({},{})", self.p1, self.q1, self.p2, self.q2)
    }
}

impl fmt::Display for DegeneratePuiseuxType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Either a genuine two-pair type or its one-pair degeneration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityType {
    TwoPairs(NewtonPairType),
    OnePair(DegeneratePuiseuxType),
}

impl SingularityType {
    pub fn delta(&self) -> Result<u128, Overflow> {
        match self {
            SingularityType::TwoPairs(t) => t.delta(),
            SingularityType::OnePair(t) => t.delta(),
        }
    }

    pub fn generators(&self) -> Result<Vec<u128>, Overflow> {
        match self {
            SingularityType::TwoPairs(t) => Ok(t.semigroup_generators()?.to_vec()),
            SingularityType::OnePair(t) => Ok(vec![t.a, t.b]),
        }
    }

    pub fn two_pairs(&self) -> Option<&NewtonPairType> {
        match self {
            SingularityType::TwoPairs(t) => Some(t),
            SingularityType::OnePair(_) => None,
        }
    }

    pub fn is_degenerate(&self) -> bool {
        matches!(self, SingularityType::OnePair(_))
    }
}

impl From<NewtonPairType> for SingularityType {
    fn from(t: NewtonPairType) -> Self {
        SingularityType::TwoPairs(t)
    }
}

impl fmt::Display for SingularityType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingularityType::TwoPairs(t) => t.fmt(f),
            SingularityType::OnePair(t) => t.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseTypeError {
    #[error("malformed type string {0:?}: expected \"(p1,q1)(p2,q2)\"")]
    Syntax(String),
    #[error(transparent)]
    Invalid(#[from] TypeError),
}

/// Parses `"(p1,q1)(p2,q2)"` or a single pair `"(a,b)"`. Whitespace is
/// tolerated anywhere.
fn parse_pairs(s: &str) -> Result<Vec<(i128, i128)>, ParseTypeError> {
    let syntax = || ParseTypeError::Syntax(s.to_string());
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = compact.as_str();
    let mut pairs = Vec::new();
    while !rest.is_empty() {
        let inner_end = rest.find(')').ok_or_else(syntax)?;
        let inner = rest.strip_prefix('(').ok_or_else(syntax)?;
        let inner = &inner[..inner_end - 1];
        let (a, b) = inner.split_once(',').ok_or_else(syntax)?;
        let a: i128 = a.parse().map_err(|_| syntax())?;
        let b: i128 = b.parse().map_err(|_| syntax())?;
        pairs.push((a, b));
        rest = &rest[inner_end + 1..];
    }
    Ok(pairs)
}

impl FromStr for SingularityType {
    type Err = ParseTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match parse_pairs(s)?.as_slice() {
            [(p1, q1), (p2, q2)] => Ok(validate_type(*p1, *q1, *p2, *q2)?),
            [(a, b)] => {
                if *a <= 0 || *b <= 0 {
                    return Err(TypeError::Rejected(RejectReason::NonPositiveEntry).into());
                }
                Ok(SingularityType::OnePair(DegeneratePuiseuxType::new(
                    *a as u128, *b as u128,
                )?))
            }
            _ => Err(ParseTypeError::Syntax(s.to_string())),
        }
    }
}

impl FromStr for NewtonPairType {
    type Err = ParseTypeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<SingularityType>()? {
            SingularityType::TwoPairs(t) => Ok(t),
            SingularityType::OnePair(_) => Err(ParseTypeError::Syntax(s.to_string())),
        }
    }
}

impl Serialize for SingularityType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingularityType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Serialize for NewtonPairType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for NewtonPairType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two(p1: u128, q1: u128, p2: u128, q2: u128) -> NewtonPairType {
        NewtonPairType::new(p1, q1, p2, q2).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(
            validate_type(2, 3, 2, 5),
            Ok(SingularityType::TwoPairs(two(2, 3, 2, 5)))
        );
        assert_eq!(
            validate_type(1, 6, 4, 1),
            Ok(SingularityType::OnePair(DegeneratePuiseuxType {
                a: 4,
                b: 25
            }))
        );
        assert_eq!(
            validate_type(2, 4, 2, 5),
            Err(TypeError::Rejected(RejectReason::NonCoprimeFirstPair))
        );
        assert_eq!(
            validate_type(3, 2, 2, 5),
            Err(TypeError::Rejected(RejectReason::OrderingViolation))
        );
    }

    #[test]
    fn remaining_reason_codes() {
        let reason = |r: Result<SingularityType, TypeError>| match r {
            Err(TypeError::Rejected(r)) => r,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(
            reason(validate_type(0, 3, 2, 5)),
            RejectReason::NonPositiveEntry
        );
        assert_eq!(
            reason(validate_type(2, 3, 2, -5)),
            RejectReason::NonPositiveEntry
        );
        assert_eq!(
            reason(validate_type(2, 3, 1, 5)),
            RejectReason::SecondMultiplicityTooSmall
        );
        assert_eq!(
            reason(validate_type(2, 3, 4, 6)),
            RejectReason::NonCoprimeSecondPair
        );
        assert_eq!(
            reason(validate_type(3, 3, 2, 5)),
            RejectReason::OrderingViolation
        );
    }

    #[test]
    fn second_pair_may_have_q2_below_p2() {
        assert!(validate_type(7, 48, 3, 1).is_ok());
        assert!(validate_type(4, 27, 5, 1).is_ok());
    }

    #[test]
    fn generators() {
        let g = two(2, 3, 2, 5).semigroup_generators().unwrap();
        assert_eq!((g.g0, g.g1, g.g2), (4, 6, 17));
        let g = two(2, 7, 4, 17).semigroup_generators().unwrap();
        assert_eq!((g.g0, g.g1, g.g2), (8, 28, 73));
        let g = two(7, 48, 3, 1).semigroup_generators().unwrap();
        assert_eq!((g.g0, g.g1, g.g2), (21, 144, 1009));
    }

    #[test]
    fn delta_values() {
        assert_eq!(two(2, 3, 2, 5).delta(), Ok(10));
        assert_eq!(two(2, 7, 4, 17).delta(), Ok(120));
        assert_eq!(two(2, 3, 6, 31).delta(), Ok(171));
        assert_eq!(two(7, 48, 3, 1).delta(), Ok(1431));
        assert_eq!(DegeneratePuiseuxType::new(4, 25).unwrap().delta(), Ok(36));
    }

    #[test]
    fn exponents() {
        let e = two(2, 3, 2, 5).parametrization_exponents().unwrap();
        assert_eq!((e.x_exp, e.y_exp1, e.y_exp2), (4, 6, 11));
        let e = two(2, 7, 2, 3).parametrization_exponents().unwrap();
        assert_eq!((e.x_exp, e.y_exp1, e.y_exp2), (4, 14, 17));
        let e = two(5, 31, 4, 5).parametrization_exponents().unwrap();
        assert_eq!((e.x_exp, e.y_exp1, e.y_exp2), (20, 124, 129));
    }

    #[test]
    fn third_generator_is_not_the_last_exponent() {
        let t = two(2, 3, 2, 5);
        let g = t.semigroup_generators().unwrap();
        let e = t.parametrization_exponents().unwrap();
        assert_eq!((g.g0, g.g1), (e.x_exp, e.y_exp1));
        assert_ne!(g.g2, e.y_exp2);
        assert_eq!((g.g2, e.y_exp2), (17, 11));
    }

    #[test]
    fn overflow_is_an_error() {
        let big = 1u128 << 64;
        assert!(matches!(
            validate_unsigned(big + 1, big + 2, big + 1, 1),
            Err(TypeError::Overflow(_))
        ));
    }

    #[test]
    fn canonical_string() {
        let t: SingularityType = " ( 2, 3 ) (2 ,5)".parse().unwrap();
        assert_eq!(t.to_string(), "(2,3)(2,5)");
        let d: SingularityType = "(1,6)(4,1)".parse().unwrap();
        assert_eq!(d.to_string(), "(4,25)");
        assert_eq!("(4,25)".parse::<SingularityType>().unwrap(), d);
        assert!(matches!(
            "(2,3)(2".parse::<SingularityType>(),
            Err(ParseTypeError::Syntax(_))
        ));
        assert!(matches!(
            "2,3,2,5".parse::<SingularityType>(),
            Err(ParseTypeError::Syntax(_))
        ));
        assert!(matches!(
            "(2,3)(2,5)(3,1)".parse::<SingularityType>(),
            Err(ParseTypeError::Syntax(_))
        ));
        assert!(matches!(
            "(2,4)(2,5)".parse::<SingularityType>(),
            Err(ParseTypeError::Invalid(TypeError::Rejected(
                RejectReason::NonCoprimeFirstPair
            )))
        ));
    }
}
