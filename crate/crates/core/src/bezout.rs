//! Strictly positive solutions of `|v*b - u*a| = 1`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BezoutPair {
    pub u: u64,
    pub v: u64,
    /// `v*b - u*a`, either `1` or `-1`.
    pub sign: i8,
}

/// The positive pair with least `u + v`, ties broken by least `u`, over
/// both signs of `v*b - u*a`.
pub fn positive_bezout(a: u64, b: u64) -> Result<BezoutPair> {
    if a == 0 || b == 0 {
        return Err(Error::OutOfRange(format!(
            "Bezout inputs must be positive, got ({a}, {b})"
        )));
    }
    if a.gcd(&b) != 1 {
        return Err(Error::NotCoprime { a, b });
    }
    let plus = smallest_on_branch(a, b, 1);
    let minus = smallest_on_branch(a, b, -1);
    let best = [plus, minus]
        .into_iter()
        .flatten()
        .min_by_key(|p| (p.u as u128 + p.v as u128, p.u))
        .expect("coprime inputs always admit a positive pair");
    Ok(best)
}

/// Least positive pair with `v*b - u*a = sign`. Along a branch the solutions
/// are `(u0 + b t, v0 + a t)`, so the smallest valid `v` also minimizes `u`
/// and `u + v`.
fn smallest_on_branch(a: u64, b: u64, sign: i8) -> Option<BezoutPair> {
    let (a, b) = (a as i128, b as i128);
    // a*x + b*y = 1
    let ext = a.extended_gcd(&b);
    debug_assert_eq!(ext.gcd, 1);
    // v*b ≡ sign (mod a)  =>  v ≡ sign*y (mod a)
    let mut v = (sign as i128 * ext.y).mod_floor(&a);
    loop {
        if v >= 1 {
            let num = v * b - sign as i128;
            debug_assert_eq!(num % a, 0);
            let u = num / a;
            if u >= 1 {
                return Some(BezoutPair {
                    u: u64::try_from(u).ok()?,
                    v: u64::try_from(v).ok()?,
                    sign,
                });
            }
        }
        v += a;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive oracle over a box large enough to contain the optimum.
    fn brute_force(a: u64, b: u64) -> BezoutPair {
        let bound = a + b + 2;
        let mut best: Option<BezoutPair> = None;
        for u in 1..=bound {
            for v in 1..=bound {
                let d = (v * b) as i128 - (u * a) as i128;
                if d.abs() != 1 {
                    continue;
                }
                let cand = BezoutPair {
                    u,
                    v,
                    sign: d as i8,
                };
                let better = match best {
                    None => true,
                    Some(p) => (u + v, u) < (p.u + p.v, p.u),
                };
                if better {
                    best = Some(cand);
                }
            }
        }
        best.unwrap()
    }

    #[test]
    fn frozen_examples() {
        // (3, 5): 1*5 - 2*3 = -1 beats 2*5 - 3*3 = 1 on u + v
        assert_eq!(
            brute_force(3, 5),
            BezoutPair {
                u: 2,
                v: 1,
                sign: -1
            }
        );
        assert_eq!(
            positive_bezout(3, 5).unwrap(),
            BezoutPair {
                u: 2,
                v: 1,
                sign: -1
            }
        );
        assert_eq!(
            positive_bezout(1, 1).unwrap(),
            BezoutPair {
                u: 1,
                v: 2,
                sign: 1
            }
        );
        assert_eq!(
            positive_bezout(8, 3).unwrap(),
            BezoutPair {
                u: 1,
                v: 3,
                sign: 1
            }
        );
    }

    #[test]
    fn errors() {
        assert_eq!(positive_bezout(6, 9), Err(Error::NotCoprime { a: 6, b: 9 }));
        assert!(matches!(positive_bezout(0, 1), Err(Error::OutOfRange(_))));
    }

    #[test]
    fn matches_exhaustive_search_up_to_30() {
        for a in 1..=30u64 {
            for b in 1..=30u64 {
                if a.gcd(&b) == 1 {
                    assert_eq!(
                        positive_bezout(a, b).unwrap(),
                        brute_force(a, b),
                        "({a}, {b})"
                    );
                }
            }
        }
    }

    #[test]
    fn large_inputs() {
        let a = 2 * 1_000_003u64 * 1_000_003;
        let b = 999_999_937u64;
        let p = positive_bezout(a, b).unwrap();
        let d = p.v as i128 * b as i128 - p.u as i128 * a as i128;
        assert_eq!(d, p.sign as i128);
        assert!(p.u >= 1 && p.v >= 1);
    }
}
