//! The value semigroup of a plane branch, stored as a membership sieve up to
//! its conductor.
//!
//! For the semigroups handled here the conductor is `2 delta` and the gaps are
//! symmetric: `n` is a member iff `2 delta - 1 - n` is not. Construction
//! checks this, so a successfully built [`NumericalSemigroup`] is known to be
//! consistent with the delta it was built for.

use bitvec::vec::BitVec;
use num_integer::Integer;
use thiserror::Error;

/// Sieves larger than this many entries are refused.
pub const MAX_CONDUCTOR: u128 = 1 << 28;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generators {0:?} are not coprime")]
    NonCoprimeGenerators(Vec<u128>),
    #[error(
        "generators {generators:?} do not give a symmetric semigroup with delta {expected_delta} \
         (found {gap_count} gaps, largest {largest_gap:?})"
    )]
    SymmetryViolation {
        generators: Vec<u128>,
        expected_delta: u128,
        gap_count: u64,
        largest_gap: Option<u64>,
    },
    #[error("conductor {0} exceeds the sieve limit")]
    TooLarge(u128),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<u128>,
    delta: u64,
    membership: BitVec,
    cumulative: Vec<u32>,
}

/// Sorted non-members of a semigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapSet(pub Vec<u64>);

impl GapSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.last().copied()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl NumericalSemigroup {
    /// Sieve `<generators>` on `[0, 2 expected_delta)`.
    pub fn build(generators: &[u128], expected_delta: u128) -> Result<Self, SemigroupError> {
        let g = generators.iter().fold(0u128, |acc, x| acc.gcd(x));
        if g != 1 {
            return Err(SemigroupError::NonCoprimeGenerators(generators.to_vec()));
        }
        let conductor = expected_delta
            .checked_mul(2)
            .filter(|c| *c <= MAX_CONDUCTOR)
            .ok_or(SemigroupError::TooLarge(expected_delta.saturating_mul(2)))?;
        let c = conductor as usize;

        let steps: Vec<usize> = generators
            .iter()
            .filter(|&&x| x > 0 && x < conductor)
            .map(|&x| x as usize)
            .collect();
        let mut sieve = vec![false; c];
        if c > 0 {
            sieve[0] = true;
        }
        for n in 0..c {
            if !sieve[n] {
                continue;
            }
            for &s in &steps {
                if n + s < c {
                    sieve[n + s] = true;
                }
            }
        }

        let gap_count = sieve.iter().filter(|m| !**m).count() as u64;
        let largest_gap = sieve.iter().rposition(|m| !*m).map(|n| n as u64);
        let violation = || SemigroupError::SymmetryViolation {
            generators: generators.to_vec(),
            expected_delta,
            gap_count,
            largest_gap,
        };
        let expected_largest = if conductor == 0 {
            None
        } else {
            Some(conductor as u64 - 1)
        };
        if conductor == 0 && !generators.contains(&1) {
            return Err(violation());
        }
        if gap_count as u128 != expected_delta || largest_gap != expected_largest {
            return Err(violation());
        }
        // n in S  <=>  c - 1 - n not in S
        if (0..c).any(|n| sieve[n] == sieve[c - 1 - n]) {
            return Err(violation());
        }

        let mut cumulative = Vec::with_capacity(c);
        let mut count = 0u32;
        for &m in &sieve {
            count += m as u32;
            cumulative.push(count);
        }
        Ok(NumericalSemigroup {
            generators: generators.to_vec(),
            delta: expected_delta as u64,
            membership: sieve.into_iter().collect(),
            cumulative,
        })
    }

    pub fn generators(&self) -> &[u128] {
        &self.generators
    }

    /// Number of gaps.
    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Smallest `c` with `[c, inf)` inside the semigroup.
    pub fn conductor(&self) -> u64 {
        2 * self.delta
    }

    pub fn is_member(&self, n: u64) -> bool {
        if n >= self.conductor() {
            return true;
        }
        self.membership[n as usize]
    }

    /// `R(n)`: the number of members in `[0, n]`.
    pub fn count_upto(&self, n: u64) -> u64 {
        let c = self.conductor();
        if c == 0 || n >= c - 1 {
            return n + 1 - self.delta;
        }
        self.cumulative[n as usize] as u64
    }

    pub fn gaps(&self) -> GapSet {
        GapSet(self.membership.iter_zeros().map(|n| n as u64).collect())
    }
}
