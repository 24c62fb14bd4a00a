//! Checked integer helpers. Every quantity in this crate is exact; values
//! that do not fit a `u128`/`i128` are reported, never wrapped.

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("integer overflow while computing {what}")]
pub struct Overflow {
    pub what: &'static str,
}

impl Overflow {
    pub const fn new(what: &'static str) -> Self {
        Overflow { what }
    }
}

pub(crate) fn add(a: u128, b: u128, what: &'static str) -> Result<u128, Overflow> {
    a.checked_add(b).ok_or(Overflow::new(what))
}

pub(crate) fn mul(a: u128, b: u128, what: &'static str) -> Result<u128, Overflow> {
    a.checked_mul(b).ok_or(Overflow::new(what))
}

pub(crate) fn signed(a: u128, what: &'static str) -> Result<i128, Overflow> {
    i128::try_from(a).map_err(|_| Overflow::new(what))
}

/// `(d - 1)(d - 2)`, i.e. twice the genus defect of a degree `d` plane curve.
pub(crate) fn degree_genus(d: u128) -> Result<u128, Overflow> {
    if d < 2 {
        return Ok(0);
    }
    mul(d - 1, d - 2, "(d-1)(d-2)")
}
