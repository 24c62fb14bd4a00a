//! Brute-force references shared by the integration tests. Nothing here
//! calls into the sieve or the enumerator.

#![allow(dead_code)]

/// Membership in `<gens>` on `[0, limit]` by enumerating every combination
/// `a g0 + b g1 + c g2 <= limit`.
pub fn brute_members(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    fn rec(gens: &[u64], acc: u64, limit: u64, member: &mut [bool]) {
        match gens.split_first() {
            None => member[acc as usize] = true,
            Some((&g, rest)) => {
                let mut x = acc;
                while x <= limit {
                    rec(rest, x, limit, member);
                    x += g;
                }
            }
        }
    }
    rec(gens, 0, limit, &mut member);
    member
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Twice the delta invariant from the closed formula.
pub fn two_delta(p1: u64, q1: u64, p2: u64, q2: u64) -> u64 {
    p1 * q1 * p2 * p2 + p2 * q2 + 1 - p1 * p2 - q1 * p2 - q2
}

pub fn generators(p1: u64, q1: u64, p2: u64, q2: u64) -> [u64; 3] {
    [p1 * p2, q1 * p2, p1 * p2 * q1 + q2]
}

/// Degree d >= 3 with (d-1)(d-2) = two_delta, by linear search.
pub fn degree_by_search(two_delta: u64) -> Option<u64> {
    (3..)
        .map(|d: u64| (d, (d - 1) * (d - 2)))
        .take_while(|(_, v)| *v <= two_delta)
        .find(|(_, v)| *v == two_delta)
        .map(|(d, _)| d)
}

/// R(jd) == (j+1)(j+2)/2 for all j in 0..=d-3, counted from a brute-force
/// membership table.
pub fn passes_by_brute_force(gens: &[u64], d: u64) -> bool {
    let limit = (d - 3) * d;
    let member = brute_members(gens, limit);
    (0..=d - 3).all(|j| {
        let r = member[..=(j * d) as usize].iter().filter(|m| **m).count() as u64;
        r == (j + 1) * (j + 2) / 2
    })
}

/// Plain bounded loops over every quadruple with delta <= delta_max, without
/// early exits. Bounds: 2 delta >= p1 q1 p2 + 1 and 2 delta >= q2 + 1.
pub fn slow_pass_list(max_degree: u64) -> Vec<(u64, u64, u64, u64, u64)> {
    let tdm = (max_degree - 1) * (max_degree - 2);
    let mut out = Vec::new();
    for p2 in 2..=tdm / 6 {
        for p1 in 2..=tdm / (2 * p2) {
            for q1 in p1 + 1..=tdm / (p1 * p2) {
                if gcd(p1, q1) != 1 {
                    continue;
                }
                for q2 in 1..=tdm {
                    if gcd(p2, q2) != 1 {
                        continue;
                    }
                    let td = two_delta(p1, q1, p2, q2);
                    if td > tdm {
                        continue;
                    }
                    let Some(d) = degree_by_search(td) else {
                        continue;
                    };
                    if passes_by_brute_force(&generators(p1, q1, p2, q2), d) {
                        out.push((d, p1, q1, p2, q2));
                    }
                }
            }
        }
    }
    out.sort();
    out
}
