//! Fibonacci numbers with `F_0 = 0`, `F_1 = 1`.

use crate::arith::{self, Overflow};

/// Largest index whose Fibonacci number fits in a `u128`.
pub const MAX_INDEX: u32 = 186;

/// `F_n`, computed exactly. Fails with [`Overflow`] past [`MAX_INDEX`].
pub fn fibonacci(n: u32) -> Result<u128, Overflow> {
    if n == 0 {
        return Ok(0);
    }
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 1..n {
        let next = arith::add(a, b, "Fibonacci number")?;
        a = b;
        b = next;
    }
    Ok(b)
}
