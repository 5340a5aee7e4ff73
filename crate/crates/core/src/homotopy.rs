//! Low-degree homotopy groups of O(n), SO(n), PO(n) and PSO(n).
//!
//! Coverage stops at the first unstable degree `i = n - 1`. Below it the
//! groups are the Bott-periodic stable values, with the exceptions in
//! degrees 0 and 1 coming from components and the centre of Spin(n).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fgab::{FgAbGroup, GroupHom};
use crate::zmatrix::ZMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GroupFamily {
    O,
    SO,
    PO,
    PSO,
}

impl GroupFamily {
    pub const ALL: [GroupFamily; 4] = [
        GroupFamily::O,
        GroupFamily::SO,
        GroupFamily::PO,
        GroupFamily::PSO,
    ];
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GroupFamily::O => "O",
            GroupFamily::SO => "SO",
            GroupFamily::PO => "PO",
            GroupFamily::PSO => "PSO",
        };
        f.write_str(s)
    }
}

impl FromStr for GroupFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "O" => Ok(GroupFamily::O),
            "SO" => Ok(GroupFamily::SO),
            "PO" => Ok(GroupFamily::PO),
            "PSO" => Ok(GroupFamily::PSO),
            other => Err(Error::OutOfRange(format!(
                "unknown group family {other:?}; expected one of O, SO, PO, PSO"
            ))),
        }
    }
}

/// Stable homotopy group `pi_i(O)`.
pub fn bott_stable(i: u64) -> FgAbGroup {
    match i % 8 {
        0 | 1 => FgAbGroup::cyclic(2),
        3 | 7 => FgAbGroup::integers(),
        _ => FgAbGroup::trivial(),
    }
}

/// Centre of Spin(n), which is also `pi_1(PSO(n))`.
pub fn spin_center(n: u64) -> Result<FgAbGroup> {
    if n < 3 {
        return Err(Error::OutOfRange(format!(
            "Spin(n) centre needs n >= 3, got {n}"
        )));
    }
    Ok(match n % 4 {
        0 => FgAbGroup::from_orders([2, 2]),
        2 => FgAbGroup::cyclic(4),
        _ => FgAbGroup::cyclic(2),
    })
}

/// `pi_{n-1}(O(n))` split along `0 -> kernel -> total -> stable -> 0`,
/// kernel summands first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnstablePi {
    pub n: u64,
    pub kernel: FgAbGroup,
    pub stable: FgAbGroup,
    pub total: FgAbGroup,
    /// False only for n = 2, where `Z -> Z/2` does not split.
    pub splits: bool,
    /// The map induced by stabilization, `total -> stable`.
    pub stabilization: GroupHom,
}

pub fn first_unstable(n: u64) -> Result<UnstablePi> {
    if n < 2 {
        return Err(Error::OutOfRange(format!(
            "first unstable group needs n >= 2, got {n}"
        )));
    }
    let stable = bott_stable(n - 1);
    if n == 2 {
        let total = FgAbGroup::integers();
        let stabilization = GroupHom::from_rows(total.clone(), stable.clone(), &[[1]])?;
        return Ok(UnstablePi {
            n,
            kernel: FgAbGroup::trivial(),
            stable,
            total,
            splits: false,
            stabilization,
        });
    }
    let kernel = match n {
        3 | 7 => FgAbGroup::trivial(),
        _ if n % 2 == 0 => FgAbGroup::integers(),
        _ => FgAbGroup::cyclic(2),
    };
    let total = kernel.direct_sum(&stable);
    let k = kernel.num_summands();
    let matrix = ZMatrix::zeros(stable.num_summands(), k)
        .hstack(&ZMatrix::identity(stable.num_summands()))?;
    let stabilization = GroupHom::new(total.clone(), stable.clone(), matrix)?;
    Ok(UnstablePi {
        n,
        kernel,
        stable,
        total,
        splits: true,
        stabilization,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PiQuery {
    pub family: GroupFamily,
    pub n: u64,
    pub i: u64,
}

pub fn pi(q: PiQuery) -> Result<FgAbGroup> {
    let PiQuery { family, n, i } = q;
    if n == 0 {
        return Err(Error::OutOfRange("group degree must be positive".into()));
    }
    if i > n - 1 {
        return Err(Error::UnsupportedRange { n, i });
    }
    use GroupFamily::*;
    let g = match (n, i) {
        // O(1) = {±1}; SO(1), PO(1), PSO(1) are trivial.
        (1, _) => match family {
            O => FgAbGroup::cyclic(2),
            _ => FgAbGroup::trivial(),
        },
        // SO(2) = PSO(2) = S^1 and PO(2) = O(2).
        (2, 0) => match family {
            O | PO => FgAbGroup::cyclic(2),
            SO | PSO => FgAbGroup::trivial(),
        },
        (2, _) => FgAbGroup::integers(),
        (_, 0) => match family {
            O => FgAbGroup::cyclic(2),
            PO if n % 2 == 0 => FgAbGroup::cyclic(2),
            _ => FgAbGroup::trivial(),
        },
        (_, 1) => match family {
            PO | PSO if n % 2 == 0 => spin_center(n)?,
            _ => FgAbGroup::cyclic(2),
        },
        _ if i == n - 1 => first_unstable(n)?.total,
        _ => bott_stable(i),
    };
    Ok(g)
}

/// Shorthand for [`pi`].
pub fn pi_of(family: GroupFamily, n: u64, i: u64) -> Result<FgAbGroup> {
    pi(PiQuery { family, n, i })
}

#[cfg(test)]
mod tests {
    use super::*;
    use GroupFamily::*;

    fn orders(g: &FgAbGroup) -> Vec<u64> {
        g.orders().to_vec()
    }

    #[test]
    fn bott_examples() {
        assert_eq!(bott_stable(3), FgAbGroup::integers());
        assert!(bott_stable(2).is_trivial());
        assert_eq!(bott_stable(8), FgAbGroup::cyclic(2));
        let period: Vec<_> = (0..8).map(|i| orders(&bott_stable(i))).collect();
        assert_eq!(
            period,
            vec![
                vec![2],
                vec![2],
                vec![],
                vec![0],
                vec![],
                vec![],
                vec![],
                vec![0]
            ]
        );
    }

    #[test]
    fn spin_center_examples() {
        assert_eq!(orders(&spin_center(8).unwrap()), vec![2, 2]);
        assert_eq!(orders(&spin_center(6).unwrap()), vec![4]);
        assert_eq!(orders(&spin_center(7).unwrap()), vec![2]);
        assert!(spin_center(2).is_err());
    }

    #[test]
    fn first_unstable_examples() {
        let u = first_unstable(6).unwrap();
        assert_eq!(orders(&u.total), vec![0]);
        assert!(u.stable.is_trivial());
        assert_eq!(orders(&u.kernel), vec![0]);

        let u = first_unstable(9).unwrap();
        assert_eq!(orders(&u.total), vec![2, 2]);
        assert_eq!(orders(&u.stable), vec![2]);

        let u = first_unstable(12).unwrap();
        assert_eq!(orders(&u.total), vec![0, 0]);
        assert_eq!(orders(&u.stable), vec![0]);
        assert_eq!(u.stabilization.matrix_i64().unwrap(), vec![vec![0, 1]]);
    }

    #[test]
    fn first_unstable_small_cases() {
        let two = first_unstable(2).unwrap();
        assert!(!two.splits);
        assert!(two.kernel.is_trivial());
        assert_eq!(two.stabilization.matrix_i64().unwrap(), vec![vec![1]]);
        assert!(two.stabilization.is_epimorphism());
        for n in [3, 7] {
            let u = first_unstable(n).unwrap();
            assert!(u.total.is_trivial() && u.kernel.is_trivial() && u.stable.is_trivial());
        }
        assert!(first_unstable(1).is_err());
    }

    #[test]
    fn split_bookkeeping() {
        for n in 3..=40 {
            let u = first_unstable(n).unwrap();
            assert!(u.splits);
            let mut cat = orders(&u.kernel);
            cat.extend(orders(&u.stable));
            assert_eq!(orders(&u.total), cat);
            assert_eq!(u.stable, bott_stable(n - 1));
            assert!(u.stabilization.is_epimorphism());
        }
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_of(O, 5, 3).unwrap(), FgAbGroup::integers());
        assert_eq!(orders(&pi_of(PO, 8, 1).unwrap()), vec![2, 2]);
        assert_eq!(orders(&pi_of(PO, 7, 1).unwrap()), vec![2]);
        assert_eq!(pi_of(O, 5, 9), Err(Error::UnsupportedRange { n: 5, i: 9 }));
    }

    #[test]
    fn small_degree_groups() {
        assert_eq!(orders(&pi_of(O, 1, 0).unwrap()), vec![2]);
        for f in [SO, PO, PSO] {
            assert!(pi_of(f, 1, 0).unwrap().is_trivial());
        }
        assert_eq!(orders(&pi_of(PO, 2, 0).unwrap()), vec![2]);
        assert!(pi_of(PSO, 2, 0).unwrap().is_trivial());
        for f in GroupFamily::ALL {
            assert_eq!(pi_of(f, 2, 1).unwrap(), FgAbGroup::integers());
        }
    }

    #[test]
    fn family_identifications() {
        for n in 3..=30u64 {
            for i in 1..=n - 2 {
                assert_eq!(pi_of(O, n, i), pi_of(SO, n, i), "O/SO n={n} i={i}");
            }
            for i in 0..n {
                let so = pi_of(SO, n, i).unwrap();
                if n % 2 == 1 {
                    assert_eq!(pi_of(PO, n, i).unwrap(), so);
                    assert_eq!(pi_of(PSO, n, i).unwrap(), so);
                } else if n >= 4 && i >= 2 {
                    assert_eq!(pi_of(PO, n, i).unwrap(), so);
                    assert_eq!(pi_of(PSO, n, i).unwrap(), so);
                }
            }
            if n % 2 == 0 && n >= 4 {
                assert_eq!(pi_of(PSO, n, 1).unwrap(), spin_center(n).unwrap());
            }
        }
    }

    #[test]
    fn family_parsing() {
        for f in GroupFamily::ALL {
            assert_eq!(f.to_string().parse::<GroupFamily>().unwrap(), f);
        }
        assert!("Sp".parse::<GroupFamily>().is_err());
    }
}
