//! Finitely generated abelian groups presented as ordered direct sums of
//! cyclic groups, and homomorphisms between them given by integer matrices.
//!
//! Summands are kept in the order they were constructed in. An order of `0`
//! stands for an infinite cyclic summand. Homomorphism matrices have one row
//! per target summand and one column per source summand.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::snf::smith_normal_form;
use crate::zmatrix::ZMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    orders: Vec<u64>,
}

impl FgAbGroup {
    /// Drops unit summands and rejects negative orders.
    pub fn new(orders: &[i64]) -> Result<Self> {
        let mut kept = Vec::with_capacity(orders.len());
        for &k in orders {
            if k < 0 {
                return Err(Error::InvalidOrder(k));
            }
            if k != 1 {
                kept.push(k as u64);
            }
        }
        Ok(FgAbGroup { orders: kept })
    }

    pub fn from_orders(orders: impl IntoIterator<Item = u64>) -> Self {
        FgAbGroup {
            orders: orders.into_iter().filter(|&k| k != 1).collect(),
        }
    }

    pub fn trivial() -> Self {
        FgAbGroup::default()
    }

    pub fn integers() -> Self {
        FgAbGroup { orders: vec![0] }
    }

    pub fn cyclic(k: u64) -> Self {
        FgAbGroup::from_orders([k])
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn num_summands(&self) -> usize {
        self.orders.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&k| k != 0)
    }

    /// Free rank.
    pub fn rank(&self) -> usize {
        self.orders.iter().filter(|&&k| k == 0).count()
    }

    /// Cardinality, or `None` for infinite groups.
    pub fn order(&self) -> Option<BigInt> {
        if !self.is_finite() {
            return None;
        }
        Some(self.orders.iter().map(|&k| BigInt::from(k)).product())
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut orders = self.orders.clone();
        orders.extend_from_slice(&other.orders);
        FgAbGroup { orders }
    }

    /// Canonical invariant-factor form: finite factors `d1 | d2 | ...`
    /// followed by one `0` per free summand. Two groups are isomorphic iff
    /// these agree.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.orders.len();
        let rel = ZMatrix::from_fn(n, n, |i, j| {
            if i == j {
                BigInt::from(self.orders[i])
            } else {
                BigInt::zero()
            }
        });
        let snf = smith_normal_form(&rel);
        let mut factors: Vec<BigInt> = snf
            .invariant_factors()
            .into_iter()
            .filter(|d| !d.is_one())
            .collect();
        factors.extend(std::iter::repeat(BigInt::zero()).take(n - snf.rank()));
        factors
    }

    pub fn is_isomorphic_to(&self, other: &FgAbGroup) -> bool {
        self.invariant_factors() == other.invariant_factors()
    }

    /// Every element exactly once, as a tuple of residues, in lexicographic
    /// order.
    pub fn enumerate_elements(&self) -> Result<ElementIter> {
        if !self.is_finite() {
            return Err(Error::NotFinite(self.to_string()));
        }
        Ok(ElementIter {
            orders: self.orders.clone(),
            next: Some(vec![0; self.orders.len()]),
        })
    }

    fn relation(&self, j: usize) -> BigInt {
        BigInt::from(self.orders[j])
    }

    fn reduce_at(&self, j: usize, x: &BigInt) -> BigInt {
        match self.orders[j] {
            0 => x.clone(),
            k => x.mod_floor(&BigInt::from(k)),
        }
    }
}

impl fmt::Display for FgAbGroup {
    /// `Z/2 + Z`, positional; the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orders.is_empty() {
            return write!(f, "0");
        }
        for (idx, &k) in self.orders.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "Z")?,
                k => write!(f, "Z/{k}")?,
            }
        }
        Ok(())
    }
}

pub struct ElementIter {
    orders: Vec<u64>,
    next: Option<Vec<u64>>,
}

impl Iterator for ElementIter {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for idx in (0..succ.len()).rev() {
            succ[idx] += 1;
            if succ[idx] < self.orders[idx] {
                carried = false;
                break;
            }
            succ[idx] = 0;
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// A homomorphism `source -> target`. Entries are stored reduced modulo the
/// orders of the target summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupHom {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: ZMatrix,
}

impl GroupHom {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: ZMatrix) -> Result<Self> {
        if matrix.shape() != (target.num_summands(), source.num_summands()) {
            return Err(Error::DimensionMismatch(format!(
                "matrix is {}x{} but {source} -> {target} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.num_summands(),
                source.num_summands()
            )));
        }
        for j in 0..matrix.rows() {
            for i in 0..matrix.cols() {
                let entry = &matrix[(j, i)];
                if !entry_is_well_defined(entry, source.orders[i], target.orders[j]) {
                    return Err(Error::IllDefinedHom {
                        row: j,
                        col: i,
                        entry: entry.to_string(),
                        source_order: source.orders[i],
                        target_order: target.orders[j],
                    });
                }
            }
        }
        let matrix = ZMatrix::from_fn(matrix.rows(), matrix.cols(), |j, i| {
            target.reduce_at(j, &matrix[(j, i)])
        });
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(
        source: FgAbGroup,
        target: FgAbGroup,
        rows: &[R],
    ) -> Result<Self> {
        let matrix = ZMatrix::from_rows(rows, source.num_summands())?;
        Self::new(source, target, matrix)
    }

    pub fn identity(group: &FgAbGroup) -> Self {
        GroupHom {
            source: group.clone(),
            target: group.clone(),
            matrix: ZMatrix::identity(group.num_summands()),
        }
    }

    pub fn zero(source: &FgAbGroup, target: &FgAbGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: ZMatrix::zeros(target.num_summands(), source.num_summands()),
        }
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &ZMatrix {
        &self.matrix
    }

    /// `k * self`
    pub fn scaled(&self, k: &BigInt) -> GroupHom {
        Self::new(
            self.source.clone(),
            self.target.clone(),
            self.matrix.scale(k),
        )
        .expect("a multiple of a homomorphism is well defined")
    }

    /// `(x, y) -> f(x) + g(y)` on `f.source + g.source`.
    pub fn copair(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
        if f.target != g.target {
            return Err(Error::CompositionMismatch {
                left: f.target.to_string(),
                right: g.target.to_string(),
            });
        }
        Self::new(
            f.source.direct_sum(&g.source),
            f.target.clone(),
            f.matrix.hstack(&g.matrix)?,
        )
    }

    /// `x -> (f(x), g(x))` into `f.target + g.target`.
    pub fn pair(f: &GroupHom, g: &GroupHom) -> Result<GroupHom> {
        if f.source != g.source {
            return Err(Error::CompositionMismatch {
                left: f.source.to_string(),
                right: g.source.to_string(),
            });
        }
        Self::new(
            f.source.clone(),
            f.target.direct_sum(&g.target),
            f.matrix.vstack(&g.matrix)?,
        )
    }

    /// `(x, y) -> (f(x), g(y))`
    pub fn product(f: &GroupHom, g: &GroupHom) -> GroupHom {
        GroupHom {
            source: f.source.direct_sum(&g.source),
            target: f.target.direct_sum(&g.target),
            matrix: f.matrix.block_diag(&g.matrix),
        }
    }

    /// Image of an element given by integer coordinates, reduced.
    pub fn apply(&self, x: &[BigInt]) -> Result<Vec<BigInt>> {
        if x.len() != self.source.num_summands() {
            return Err(Error::DimensionMismatch(format!(
                "element has {} coordinates, source {} has {} summands",
                x.len(),
                self.source,
                self.source.num_summands()
            )));
        }
        Ok((0..self.matrix.rows())
            .map(|j| {
                let s: BigInt = self.matrix.row(j).iter().zip(x).map(|(a, b)| a * b).sum();
                self.target.reduce_at(j, &s)
            })
            .collect())
    }

    /// Presentation matrix of the cokernel: `[M | diag(target orders)]`.
    fn cokernel_presentation(&self) -> ZMatrix {
        let t = self.target.num_summands();
        let rel = ZMatrix::from_fn(t, t, |i, j| {
            if i == j {
                self.target.relation(i)
            } else {
                BigInt::zero()
            }
        });
        self.matrix
            .hstack(&rel)
            .expect("relation block has one row per target summand")
    }

    pub fn cokernel(&self) -> FgAbGroup {
        let pres = self.cokernel_presentation();
        let snf = smith_normal_form(&pres);
        let mut orders: Vec<u64> = snf
            .invariant_factors()
            .iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_u64().expect("cokernel order fits in u64"))
            .collect();
        orders.extend(std::iter::repeat(0).take(pres.rows() - snf.rank()));
        FgAbGroup::from_orders(orders)
    }

    pub fn is_epimorphism(&self) -> bool {
        let t = self.target.num_summands();
        if t == 0 {
            return true;
        }
        let snf = smith_normal_form(&self.cokernel_presentation());
        snf.rank() == t && snf.diagonal().iter().take(t).all(|d| d.is_one())
    }

    /// Integer kernel of `[M | diag(target orders)]`; the first `s` coordinates
    /// of each generator lift a kernel element of the map.
    fn kernel_lifts(&self) -> Vec<Vec<BigInt>> {
        let s = self.source.num_summands();
        let pres = self.cokernel_presentation();
        let snf = smith_normal_form(&pres);
        (snf.rank()..pres.cols())
            .map(|c| (0..s).map(|r| snf.v[(r, c)].clone()).collect())
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        self.kernel_lifts().iter().all(|x| {
            x.iter()
                .enumerate()
                .all(|(i, xi)| match self.source.orders[i] {
                    0 => xi.is_zero(),
                    k => xi.is_multiple_of(&BigInt::from(k)),
                })
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_epimorphism() && self.is_injective()
    }
}

/// `m * source_order == 0` in the target summand; a finite source summand can
/// only map trivially into `Z`.
fn entry_is_well_defined(m: &BigInt, source_order: u64, target_order: u64) -> bool {
    match (source_order, target_order) {
        (_, 0) if source_order != 0 => m.is_zero(),
        (0, _) => true,
        (a, b) => (m * BigInt::from(a)).is_multiple_of(&BigInt::from(b)),
    }
}

/// `g ∘ f`
pub fn compose(g: &GroupHom, f: &GroupHom) -> Result<GroupHom> {
    if f.target != g.source {
        return Err(Error::CompositionMismatch {
            left: f.target.to_string(),
            right: g.source.to_string(),
        });
    }
    GroupHom::new(f.source.clone(), g.target.clone(), &g.matrix * &f.matrix)
}

impl fmt::Display for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} by {}", self.source, self.target, self.matrix)
    }
}

impl GroupHom {
    /// Entries as signed machine integers, if they fit.
    pub fn matrix_i64(&self) -> Option<Vec<Vec<i64>>> {
        self.matrix.to_i64_rows()
    }

    pub fn is_zero(&self) -> bool {
        (0..self.matrix.rows()).all(|j| self.matrix.row(j).iter().all(|x| x.is_zero()))
    }
}
