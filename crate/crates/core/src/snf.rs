//! Smith normal form over the integers.
//!
//! Row and column reduction, always pivoting on the entry of least absolute
//! value in the remaining block. The transforms are accumulated so that
//! `U * M * V = D` holds exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::zmatrix::ZMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: ZMatrix,
    pub d: ZMatrix,
    pub v: ZMatrix,
}

impl SnfResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|x| !x.is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.rows().min(self.d.cols());
        (0..k).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Nonzero diagonal entries, in divisibility order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.diagonal()
            .into_iter()
            .filter(|x| !x.is_zero())
            .collect()
    }
}

pub fn smith_normal_form(m: &ZMatrix) -> SnfResult {
    let (rows, cols) = m.shape();
    let mut d = m.clone();
    let mut u = ZMatrix::identity(rows);
    let mut v = ZMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&d, t) else {
            break;
        };
        move_pivot(&mut d, &mut u, &mut v, t, pi, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                let neg = -q;
                d.add_row_multiple(i, t, &neg);
                u.add_row_multiple(i, t, &neg);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                let neg = -q;
                d.add_col_multiple(j, t, &neg);
                v.add_col_multiple(j, t, &neg);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }

            if clean {
                // Divisibility: fold any row whose entries the pivot does not
                // divide into the pivot row and reduce again.
                let bad = (t + 1..rows)
                    .find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&d[(t, t)])));
                match bad {
                    Some(i) => {
                        let one = BigInt::one();
                        d.add_row_multiple(t, i, &one);
                        u.add_row_multiple(t, i, &one);
                    }
                    None => break,
                }
            }

            // Remainders are strictly smaller than the pivot, so re-pivoting on
            // the smallest entry of row/column t terminates.
            let (pi, pj) = min_abs_in_cross(&d, t);
            move_pivot(&mut d, &mut u, &mut v, t, pi, pj);
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SnfResult { u, d, v }
}

fn move_pivot(d: &mut ZMatrix, u: &mut ZMatrix, v: &mut ZMatrix, t: usize, pi: usize, pj: usize) {
    d.swap_rows(t, pi);
    u.swap_rows(t, pi);
    d.swap_cols(t, pj);
    v.swap_cols(t, pj);
}

fn min_abs_entry(d: &ZMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.map_or(true, |(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}

fn min_abs_in_cross(d: &ZMatrix, t: usize) -> (usize, usize) {
    let mut best = (t, t);
    let candidates = (t..d.rows())
        .map(|i| (i, t))
        .chain((t + 1..d.cols()).map(|j| (t, j)));
    for (i, j) in candidates {
        let x = &d[(i, j)];
        if x.is_zero() {
            continue;
        }
        let cur = &d[best];
        if cur.is_zero() || x.abs() < cur.abs() {
            best = (i, j);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_contract(m: &ZMatrix) {
        let r = smith_normal_form(m);
        assert_eq!(&(&r.u * m) * &r.v, r.d, "U*M*V != D for {m}");
        assert!(r.d.is_diagonal());
        assert!(r.u.is_unimodular() && r.v.is_unimodular());
        let diag = r.diagonal();
        for w in diag.windows(2) {
            if w[1].is_zero() {
                continue;
            }
            assert!(
                !w[0].is_zero(),
                "zero before nonzero on the diagonal of {}",
                r.d
            );
            assert!(w[1].is_multiple_of(&w[0]), "divisibility fails in {}", r.d);
        }
        assert!(diag.iter().all(|x| !x.is_negative()));
    }

    #[test]
    fn diag_two_three() {
        let m = ZMatrix::from_rows(&[[2, 0], [0, 3]], 2).unwrap();
        let r = smith_normal_form(&m);
        assert_eq!(r.d, ZMatrix::from_rows(&[[1, 0], [0, 6]], 2).unwrap());
        check_contract(&m);
    }

    #[test]
    fn identity_is_fixed() {
        let m = ZMatrix::identity(4);
        assert_eq!(smith_normal_form(&m).d, m);
    }

    #[test]
    fn unimodular_two_by_two_reduces_to_identity() {
        // [[n, m], [u, v]] for (m, n, u, v) = (3, 5, 2, 1), and [[n, m], [2um, v]] for (2, 3, 1, 3)
        for rows in [[[5, 3], [2, 1]], [[3, 2], [4, 3]], [[1, 0], [7, 1]]] {
            let m = ZMatrix::from_rows(&rows, 2).unwrap();
            assert!(m.determinant().unwrap().abs().is_one());
            assert_eq!(smith_normal_form(&m).d, ZMatrix::identity(2));
        }
    }

    #[test]
    fn rectangular_and_degenerate_shapes() {
        check_contract(&ZMatrix::zeros(0, 3));
        check_contract(&ZMatrix::zeros(3, 0));
        check_contract(&ZMatrix::zeros(2, 2));
        let m = ZMatrix::from_rows(&[[4, 6, 0], [0, 0, 10]], 3).unwrap();
        check_contract(&m);
        // d1 = gcd of entries = 2, d1*d2 = gcd of 2x2 minors (0, 40, 60) = 20
        assert_eq!(
            smith_normal_form(&m).invariant_factors(),
            vec![BigInt::from(2), BigInt::from(10)]
        );
    }

    proptest! {
        #[test]
        fn snf_contract_holds(rows in 0usize..5, cols in 0usize..5, seed in proptest::collection::vec(-30i64..30, 25)) {
            let m = ZMatrix::from_fn(rows, cols, |i, j| BigInt::from(seed[i * 5 + j]));
            check_contract(&m);
        }
    }
}
