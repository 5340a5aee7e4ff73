//! Homomorphisms induced on homotopy groups by stabilization, direct sums
//! and tensor products of orthogonal groups.
//!
//! Every map is built as an explicit [`GroupHom`] between the groups returned
//! by [`crate::homotopy`], so the identification of `pi_i(O(n))` with its
//! stable value always appears as an actual stabilization map.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, GroupHom};
use crate::homotopy::{first_unstable, pi_of, GroupFamily};

/// The map `pi_i(O(n)) -> pi_i(O(target_degree))` induced by the block
/// inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizationMap {
    pub n: u64,
    pub target_degree: u64,
    pub i: u64,
    pub hom: GroupHom,
}

impl StabilizationMap {
    pub fn new(n: u64, target_degree: u64, i: u64) -> Result<Self> {
        if n == 0 || target_degree < n {
            return Err(Error::OutOfRange(format!(
                "stabilization needs 1 <= n <= target degree, got n={n}, target={target_degree}"
            )));
        }
        check_range(n, i)?;
        let source = pi_of(GroupFamily::O, n, i)?;
        let hom = if target_degree == n {
            GroupHom::identity(&source)
        } else if i + 1 < n || n == 1 {
            // Already stable (O(1) only has pi_0, which maps isomorphically).
            let target = pi_of(GroupFamily::O, target_degree, i)?;
            debug_assert_eq!(source, target);
            GroupHom::identity(&source)
        } else {
            first_unstable(n)?.stabilization
        };
        Ok(StabilizationMap {
            n,
            target_degree,
            i,
            hom,
        })
    }
}

pub fn stabilization(n: u64, target_degree: u64, i: u64) -> Result<GroupHom> {
    StabilizationMap::new(n, target_degree, i).map(|s| s.hom)
}

/// `pi_i(O(m)) x pi_i(O(n)) -> pi_i(O(m + n))`, `(x, y) -> s(x) + s(y)`.
pub fn direct_sum_induced(m: u64, n: u64, i: u64) -> Result<GroupHom> {
    check_pair_range(m, n, i)?;
    GroupHom::copair(&stabilization(m, m + n, i)?, &stabilization(n, m + n, i)?)
}

/// `pi_i(O(n)) -> pi_i(O(rn))`, `x -> r s(x)`.
pub fn r_fold_sum_induced(n: u64, r: u64, i: u64) -> Result<GroupHom> {
    check_multiplicity(r)?;
    let rn = n
        .checked_mul(r)
        .ok_or(Error::Overflow("r-fold direct sum degree"))?;
    Ok(stabilization(n, rn, i)?.scaled(&BigInt::from(r)))
}

/// `pi_i(O(m)) x pi_i(O(n)) -> pi_i(O(mn))`, `(x, y) -> n s(x) + m s(y)`.
pub fn tensor_induced(m: u64, n: u64, i: u64) -> Result<GroupHom> {
    check_pair_range(m, n, i)?;
    let mn = m.checked_mul(n).ok_or(Error::Overflow("tensor degree"))?;
    let left = stabilization(m, mn, i)?.scaled(&BigInt::from(n));
    let right = stabilization(n, mn, i)?.scaled(&BigInt::from(m));
    GroupHom::copair(&left, &right)
}

/// `pi_i(O(n)) -> pi_i(O(n^r))`, `x -> r n^(r-1) s(x)`.
pub fn r_fold_tensor_induced(n: u64, r: u64, i: u64) -> Result<GroupHom> {
    check_multiplicity(r)?;
    let exp = u32::try_from(r).map_err(|_| Error::Overflow("tensor power exponent"))?;
    let degree = n
        .checked_pow(exp)
        .ok_or(Error::Overflow("tensor power degree"))?;
    let factor = BigInt::from(r) * BigInt::from(n).pow(exp - 1);
    Ok(stabilization(n, degree, i)?.scaled(&factor))
}

/// `pi_i(PO(m)) x pi_i(SO(n)) -> pi_i(PO(mn))` for `m` even and `n` odd.
pub fn quotient_tensor_induced(m: u64, n: u64, i: u64) -> Result<GroupHom> {
    if m % 2 != 0 || m == 0 || n % 2 == 0 {
        return Err(Error::WrongParity(format!(
            "quotient tensor needs m even and n odd, got m={m}, n={n}"
        )));
    }
    check_pair_range(m, n, i)?;
    let mn = m.checked_mul(n).ok_or(Error::Overflow("tensor degree"))?;
    let source = pi_of(GroupFamily::PO, m, i)?.direct_sum(&pi_of(GroupFamily::SO, n, i)?);
    let target = pi_of(GroupFamily::PO, mn, i)?;
    match i {
        // pi_0(SO(n)) is trivial, so the source is pi_0(PO(m)) = Z/2.
        0 => GroupHom::from_rows(source, target, &[[1]]),
        1 if m % 4 == 0 => GroupHom::from_rows(source, target, &[[1, 0, 0], [0, 1, 0]]),
        // m = 2 has source Z + Z/2, otherwise Z/4 + Z/2; either way (a, b) -> n a.
        1 => GroupHom::from_rows(source, target, &[[n as i64 % 4, 0]]),
        _ => {
            let t = tensor_induced(m, n, i)?;
            debug_assert_eq!(t.source(), &source);
            GroupHom::new(source, target, t.matrix().clone())
        }
    }
}

fn check_range(n: u64, i: u64) -> Result<()> {
    if i + 1 > n {
        return Err(Error::UnsupportedRange { n, i });
    }
    Ok(())
}

fn check_pair_range(m: u64, n: u64, i: u64) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange(format!(
            "degrees must be positive, got {m} and {n}"
        )));
    }
    check_range(m.min(n), i)
}

fn check_multiplicity(r: u64) -> Result<()> {
    if r == 0 {
        return Err(Error::OutOfRange(
            "multiplicity r must be at least 1".into(),
        ));
    }
    Ok(())
}

/// Source group of a map on `pi_i(O(n))`, for callers assembling products.
pub fn orthogonal_group(n: u64, i: u64) -> Result<FgAbGroup> {
    pi_of(GroupFamily::O, n, i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fgab::compose;

    fn rows(h: &GroupHom) -> Vec<Vec<i64>> {
        h.matrix_i64().unwrap()
    }

    fn orders(g: &FgAbGroup) -> Vec<u64> {
        g.orders().to_vec()
    }

    #[test]
    fn stabilization_examples() {
        let s = stabilization(5, 15, 3).unwrap();
        assert_eq!(s, GroupHom::identity(&FgAbGroup::integers()));

        let s = stabilization(6, 18, 5).unwrap();
        assert_eq!(orders(s.source()), vec![0]);
        assert!(s.target().is_trivial());

        let s = stabilization(12, 36, 11).unwrap();
        assert_eq!(orders(s.source()), vec![0, 0]);
        assert_eq!(rows(&s), vec![vec![0, 1]]);

        let s = stabilization(2, 3, 1).unwrap();
        assert_eq!(orders(s.target()), vec![2]);
        assert_eq!(rows(&s), vec![vec![1]]);

        assert_eq!(
            stabilization(5, 10, 5),
            Err(Error::UnsupportedRange { n: 5, i: 5 })
        );
    }

    #[test]
    fn direct_sum_examples() {
        assert_eq!(
            rows(&direct_sum_induced(5, 7, 3).unwrap()),
            vec![vec![1, 1]]
        );
        let h = direct_sum_induced(3, 3, 1).unwrap();
        assert_eq!(orders(h.source()), vec![2, 2]);
        assert_eq!(rows(&h), vec![vec![1, 1]]);
        let h = direct_sum_induced(2, 2, 1).unwrap();
        assert_eq!(orders(h.source()), vec![0, 0]);
        assert_eq!(orders(h.target()), vec![2]);
        assert_eq!(rows(&h), vec![vec![1, 1]]);
    }

    #[test]
    fn direct_sum_on_z_by_z_matches_enumeration() {
        // (x, y) -> (x + y) mod 2 on a window of Z x Z
        let h = direct_sum_induced(2, 2, 1).unwrap();
        for x in -3i64..=3 {
            for y in -3i64..=3 {
                let img = h.apply(&[BigInt::from(x), BigInt::from(y)]).unwrap();
                assert_eq!(img, vec![BigInt::from((x + y).rem_euclid(2))]);
            }
        }
    }

    #[test]
    fn r_fold_sum_examples() {
        assert_eq!(rows(&r_fold_sum_induced(5, 3, 1).unwrap()), vec![vec![1]]);
        assert_eq!(rows(&r_fold_sum_induced(5, 2, 1).unwrap()), vec![vec![0]]);
        let h = r_fold_sum_induced(4, 2, 3).unwrap();
        let expected = stabilization(4, 8, 3).unwrap().scaled(&BigInt::from(2));
        assert_eq!(h, expected);
        assert_eq!(rows(&h), vec![vec![0, 2]]);
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(rows(&tensor_induced(3, 5, 1).unwrap()), vec![vec![1, 1]]);
        let h = tensor_induced(2, 3, 1).unwrap();
        assert_eq!(orders(h.source()), vec![0, 2]);
        assert_eq!(rows(&h), vec![vec![1, 0]]);
        // O(1) x O(1) -> O(1): (x, y) -> x + y on Z/2 x Z/2
        let h = tensor_induced(1, 1, 0).unwrap();
        assert_eq!(orders(h.source()), vec![2, 2]);
        assert_eq!(rows(&h), vec![vec![1, 1]]);
    }

    #[test]
    fn r_fold_tensor_examples() {
        assert_eq!(
            rows(&r_fold_tensor_induced(3, 2, 1).unwrap()),
            vec![vec![0]]
        );
        assert_eq!(
            r_fold_tensor_induced(5, 1, 3).unwrap(),
            GroupHom::identity(&FgAbGroup::integers())
        );
        let h = r_fold_tensor_induced(2, 2, 1).unwrap();
        assert_eq!(orders(h.source()), vec![0]);
        assert_eq!(rows(&h), vec![vec![0]]);
    }

    #[test]
    fn quotient_tensor_examples() {
        let h = quotient_tensor_induced(4, 3, 1).unwrap();
        assert_eq!(orders(h.source()), vec![2, 2, 2]);
        assert_eq!(orders(h.target()), vec![2, 2]);
        assert_eq!(rows(&h), vec![vec![1, 0, 0], vec![0, 1, 0]]);

        let h = quotient_tensor_induced(6, 5, 1).unwrap();
        assert_eq!(orders(h.source()), vec![4, 2]);
        assert_eq!(orders(h.target()), vec![4]);
        assert_eq!(rows(&h), vec![vec![1, 0]]);

        // degree 3 is unstable for PO(4): pi_3 = Z + Z, and n s(x) kills the kernel summand
        let h = quotient_tensor_induced(4, 5, 3).unwrap();
        assert_eq!(orders(h.source()), vec![0, 0, 0]);
        assert_eq!(rows(&h), vec![vec![0, 5, 4]]);
        assert_eq!(
            rows(&quotient_tensor_induced(6, 5, 3).unwrap()),
            vec![vec![5, 6]]
        );

        let h = quotient_tensor_induced(2, 3, 1).unwrap();
        assert_eq!(orders(h.source()), vec![0, 2]);
        assert_eq!(rows(&h), vec![vec![3, 0]]);

        assert!(matches!(
            quotient_tensor_induced(3, 5, 1),
            Err(Error::WrongParity(_))
        ));
        assert!(matches!(
            quotient_tensor_induced(4, 6, 1),
            Err(Error::WrongParity(_))
        ));
    }

    #[test]
    fn quotient_tensor_in_degree_zero_is_bijective() {
        for (m, n) in [(2, 1), (4, 3), (6, 5), (8, 9)] {
            assert!(quotient_tensor_induced(m, n, 0).unwrap().is_isomorphism());
        }
    }

    #[test]
    fn stable_range_coherence() {
        for n in 1..=12u64 {
            for i in 0..n.saturating_sub(1) {
                for t in n..=n + 4 {
                    for t2 in t..=t + 4 {
                        let direct = stabilization(n, t2, i).unwrap();
                        let via = compose(
                            &stabilization(t, t2, i).unwrap(),
                            &stabilization(n, t, i).unwrap(),
                        )
                        .unwrap();
                        assert_eq!(direct, via, "n={n} t={t} t2={t2} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn tensor_is_weighted_sum_in_stable_range() {
        for m in 1..=10u64 {
            for n in 1..=10u64 {
                for i in 0..m.min(n).saturating_sub(1) {
                    let h = tensor_induced(m, n, i).unwrap();
                    let g = orthogonal_group(m, i).unwrap();
                    let k = g.num_summands();
                    let mut expected = vec![Vec::new(); k];
                    for (j, row) in expected.iter_mut().enumerate() {
                        for c in 0..2 * k {
                            let coeff = match (c < k, c % k == j) {
                                (true, true) => n as i64,
                                (false, true) => m as i64,
                                _ => 0,
                            };
                            row.push(coeff);
                        }
                    }
                    let expected =
                        GroupHom::from_rows(h.source().clone(), h.target().clone(), &expected)
                            .unwrap();
                    assert_eq!(h, expected, "m={m} n={n} i={i}");
                }
            }
        }
    }

    #[test]
    fn r_fold_sum_is_iterated_direct_sum() {
        for n in 1..=12u64 {
            for i in 0..n {
                let mut acc = GroupHom::identity(&orthogonal_group(n, i).unwrap());
                for r in 2..=4u64 {
                    // x -> (x, ..., x) -> s(x) + ... + s(x), one summand at a time
                    let diag =
                        GroupHom::pair(&acc, &GroupHom::identity(&orthogonal_group(n, i).unwrap()))
                            .unwrap();
                    acc = compose(&direct_sum_induced((r - 1) * n, n, i).unwrap(), &diag).unwrap();
                    assert_eq!(
                        acc,
                        r_fold_sum_induced(n, r, i).unwrap(),
                        "n={n} r={r} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn quotient_tensor_agrees_with_tensor_above_degree_one() {
        for m in (2..=12u64).step_by(2) {
            for n in (1..=11u64).step_by(2) {
                for i in 2..m.min(n) {
                    let q = quotient_tensor_induced(m, n, i).unwrap();
                    let t = tensor_induced(m, n, i).unwrap();
                    assert_eq!(q.matrix(), t.matrix());
                    assert_eq!(q.source(), t.source());
                    assert_eq!(q.target(), t.target());
                }
            }
        }
    }
}
