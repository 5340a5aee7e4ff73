//! Exact checks of the matrix identities behind the homotopies between
//! stabilization maps and between `A ⊗ I` and `I ⊗ A`, plus the
//! classification of involutions by the symmetry of their defining matrix.
//!
//! Every identity here is linear in the entries of the test matrix, so random
//! integer matrices are a complete oracle; no orthogonality is needed.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::snf::smith_normal_form;
use crate::zmatrix::ZMatrix;

/// Dense matrix of machine integers with overflow-checked arithmetic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend_from_slice(r);
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Square matrix with entries drawn uniformly from `lo..=hi`.
    pub fn random(n: usize, lo: i64, hi: i64, rng: &mut impl Rng) -> Self {
        let data = (0..n * n).map(|_| rng.gen_range(lo..=hi)).collect();
        IntMatrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, x: i64) {
        self.data[i * self.cols + j] = x;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let prod = a
                        .checked_mul(rhs.get(k, j))
                        .ok_or(Error::Overflow("matrix product"))?;
                    let cur = out.get(i, j);
                    out.set(
                        i,
                        j,
                        cur.checked_add(prod)
                            .ok_or(Error::Overflow("matrix product"))?,
                    );
                }
            }
        }
        Ok(out)
    }

    /// Left-to-right product of a non-empty chain.
    pub fn product_of(chain: &[&IntMatrix]) -> Result<IntMatrix> {
        let (first, rest) = chain
            .split_first()
            .ok_or_else(|| Error::Shape("empty matrix product".into()))?;
        rest.iter()
            .try_fold((*first).clone(), |acc, m| acc.checked_mul(m))
    }

    pub fn neg(&self) -> Result<IntMatrix> {
        let data = self
            .data
            .iter()
            .map(|x| x.checked_neg().ok_or(Error::Overflow("negation")))
            .collect::<Result<_>>()?;
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square() && self.neg().is_ok_and(|n| n == self.transpose())
    }

    pub fn to_zmatrix(&self) -> ZMatrix {
        ZMatrix::from_fn(self.rows, self.cols, |i, j| BigInt::from(self.get(i, j)))
    }

    pub fn determinant(&self) -> Result<BigInt> {
        self.to_zmatrix().determinant()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        smith_normal_form(&self.to_zmatrix()).rank()
    }

    /// Inverse of a permutation matrix, read off from its nonzero pattern.
    pub fn permutation_inverse(&self) -> Result<IntMatrix> {
        if !self.is_permutation() {
            return Err(Error::Shape("not a permutation matrix".into()));
        }
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if self.get(i, j) == 1 {
                    inv.set(j, i, 1);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && self.data.iter().all(|&x| x == 0 || x == 1)
            && (0..self.rows).all(|i| (0..self.cols).filter(|&j| self.get(i, j) == 1).count() == 1)
            && (0..self.cols).all(|j| (0..self.rows).filter(|&i| self.get(i, j) == 1).count() == 1)
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn block_diag(blocks: &[&IntMatrix]) -> IntMatrix {
    let rows = blocks.iter().map(|b| b.rows).sum();
    let cols = blocks.iter().map(|b| b.cols).sum();
    let mut out = IntMatrix::zeros(rows, cols);
    let (mut r0, mut c0) = (0, 0);
    for b in blocks {
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(r0 + i, c0 + j, b.get(i, j));
            }
        }
        r0 += b.rows;
        c0 += b.cols;
    }
    out
}

pub fn kronecker(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let mut out = IntMatrix::zeros(a.rows * b.rows, a.cols * b.cols);
    for i in 0..a.rows {
        for j in 0..a.cols {
            for k in 0..b.rows {
                for l in 0..b.cols {
                    let x = a
                        .get(i, j)
                        .checked_mul(b.get(k, l))
                        .ok_or(Error::Overflow("Kronecker product"))?;
                    out.set(i * b.rows + k, j * b.cols + l, x);
                }
            }
        }
    }
    Ok(out)
}

/// Permutation matrix exchanging blocks `j` and `j + 1` (1-based) of size
/// `n` among `r` blocks.
pub fn perm_p_j(n: usize, r: usize, j: usize) -> Result<IntMatrix> {
    if j == 0 || j + 1 > r {
        return Err(Error::OutOfRange(format!(
            "block swap index j={j} needs 1 <= j <= r-1 with r={r}"
        )));
    }
    let size = r * n;
    let mut p = IntMatrix::zeros(size, size);
    for b in 0..r {
        let dest = match b + 1 {
            x if x == j => j,
            x if x == j + 1 => j - 1,
            _ => b,
        };
        for t in 0..n {
            p.set(dest * n + t, b * n + t, 1);
        }
    }
    Ok(p)
}

/// Identity with the last two basis vectors exchanged.
pub fn w_d(size: usize) -> Result<IntMatrix> {
    swap_matrix(size, size.wrapping_sub(2))
}

/// Identity with the first two basis vectors exchanged.
pub fn w_u(size: usize) -> Result<IntMatrix> {
    swap_matrix(size, 0)
}

fn swap_matrix(size: usize, at: usize) -> Result<IntMatrix> {
    if size < 2 {
        return Err(Error::OutOfRange(format!(
            "transposition matrix needs size >= 2, got {size}"
        )));
    }
    let mut w = IntMatrix::identity(size);
    w.set(at, at, 0);
    w.set(at + 1, at + 1, 0);
    w.set(at, at + 1, 1);
    w.set(at + 1, at, 1);
    Ok(w)
}

/// `diag(I, ..., I, A, I, ..., I)` with `A` in block `j` (1-based) of `r`.
pub fn s_j_embed(a: &IntMatrix, r: usize, j: usize) -> Result<IntMatrix> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "expected a square matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    if j == 0 || j > r {
        return Err(Error::OutOfRange(format!(
            "block index j={j} needs 1 <= j <= r={r}"
        )));
    }
    let n = a.rows;
    let mut out = IntMatrix::identity(r * n);
    let off = (j - 1) * n;
    for i in 0..n {
        for k in 0..n {
            out.set(off + i, off + k, a.get(i, k));
        }
    }
    Ok(out)
}

/// The perfect shuffle on `C^{mn}`: its columns are
/// `e_1, e_{n+1}, ..., e_{(m-1)n+1}, e_2, e_{n+2}, ...`.
pub fn perm_p_mn(m: usize, n: usize) -> IntMatrix {
    let mut p = IntMatrix::zeros(m * n, m * n);
    for q in 0..n {
        for s in 0..m {
            p.set(s * n + q, q * m + s, 1);
        }
    }
    p
}

/// `A ⊗ I_n`
pub fn left_tensor(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    kronecker(a, &IntMatrix::identity(n))
}

/// `I_n ⊗ A`
pub fn right_tensor(a: &IntMatrix, n: usize) -> Result<IntMatrix> {
    kronecker(&IntMatrix::identity(n), a)
}

/// One identity, evaluated exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(name: impl Into<String>, holds: bool) -> Self {
        IdentityCheck {
            name: name.into(),
            holds,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ConjugationReport {
    /// The identities as stated for the lemma.
    pub checks: Vec<IdentityCheck>,
    /// Related identities that are reported but do not affect the verdict.
    pub informational: Vec<IdentityCheck>,
}

impl ConjugationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// `C X C^{-1}` for a permutation-like conjugator `C`.
fn conjugate(c: &IntMatrix, x: &IntMatrix) -> Result<IntMatrix> {
    IntMatrix::product_of(&[c, x, &c.permutation_inverse()?])
}

fn det_is(m: &IntMatrix, expected: i64) -> Result<bool> {
    Ok(m.determinant()? == BigInt::from(expected))
}

/// Checks that consecutive block embeddings are conjugate by the stated
/// determinant-one matrices. For `n` even the conjugator is `P_j`; for `n`
/// odd it is `W_d P_1` when `j = 1` and `W_u P_j` for `j >= 2`.
pub fn verify_sj_conjugation(n: usize, r: usize, a: &IntMatrix) -> Result<ConjugationReport> {
    if !a.is_square() || a.rows != n {
        return Err(Error::Shape(format!(
            "expected a {n}x{n} matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    let mut report = ConjugationReport::default();
    let size = n * r;
    for j in 1..r {
        let p = perm_p_j(n, r, j)?;
        let sj = s_j_embed(a, r, j)?;
        let next = s_j_embed(a, r, j + 1)?;
        let parity = if n % 2 == 0 { 1 } else { -1 };
        report.checks.push(IdentityCheck::new(
            format!("det P_{j} = {parity}"),
            det_is(&p, parity)?,
        ));
        report.informational.push(IdentityCheck::new(
            format!("s_{}(A) = P_{j} s_{j}(A) P_{j}^-1", j + 1),
            conjugate(&p, &sj)? == next,
        ));
        if n % 2 == 0 {
            report.checks.push(IdentityCheck::new(
                format!("s_{}(A) = P_{j} s_{j}(A) P_{j}", j + 1),
                IntMatrix::product_of(&[&p, &sj, &p])? == next,
            ));
            continue;
        }
        let wd = w_d(size)?;
        let wu = w_u(size)?;
        let wdp = wd.checked_mul(&p)?;
        let wup = wu.checked_mul(&p)?;
        report.checks.push(IdentityCheck::new(
            format!("det W_d P_{j} = 1"),
            det_is(&wdp, 1)?,
        ));
        report.checks.push(IdentityCheck::new(
            format!("det W_u P_{j} = 1"),
            det_is(&wup, 1)?,
        ));
        if j == 1 {
            report.checks.push(IdentityCheck::new(
                "s_2(A) = (W_d P_1) s_1(A) (W_d P_1)^-1",
                conjugate(&wdp, &sj)? == next,
            ));
            report.informational.push(IdentityCheck::new(
                "s_2(A) = (W_u P_1) s_1(A) (W_u P_1)^-1",
                conjugate(&wup, &sj)? == next,
            ));
        } else {
            report.checks.push(IdentityCheck::new(
                format!("s_{}(A) = (W_u P_{j}) s_{j}(A) (W_u P_{j})^-1", j + 1),
                conjugate(&wup, &sj)? == next,
            ));
        }
        // diag(-1, 1, ..., 1) P_j has determinant one and always conjugates
        // s_j to s_{j+1}, because the sign flip only touches block 1.
        let mut flip = IntMatrix::identity(size);
        flip.set(0, 0, -1);
        let fp = flip.checked_mul(&p)?;
        let fp_inv = p.permutation_inverse()?.checked_mul(&flip)?;
        report.informational.push(IdentityCheck::new(
            format!(
                "s_{}(A) = (F P_{j}) s_{j}(A) (F P_{j})^-1 with F = diag(-1, 1, ..., 1), det F P_{j} = 1",
                j + 1
            ),
            IntMatrix::product_of(&[&fp, &sj, &fp_inv])? == next && det_is(&fp, 1)?,
        ));
    }
    Ok(report)
}

/// Checks `A ⊗ I_n = P_{m,n} (I_n ⊗ A) P_{m,n}^-1` and, when
/// `det P_{m,n} = -1`, the factorization into two conjugations by
/// determinant-one matrices through `W_d` and `W_u`.
pub fn verify_lr_conjugation(m: usize, n: usize, a: &IntMatrix) -> Result<ConjugationReport> {
    if !a.is_square() || a.rows != m {
        return Err(Error::Shape(format!(
            "expected a {m}x{m} matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    let mut report = ConjugationReport::default();
    let p = perm_p_mn(m, n);
    let pt = p.transpose();
    let l = left_tensor(a, n)?;
    let r = right_tensor(a, n)?;
    report.checks.push(IdentityCheck::new(
        "P_{m,n} P_{m,n}^T = I",
        p.checked_mul(&pt)? == IntMatrix::identity(m * n),
    ));
    report.checks.push(IdentityCheck::new(
        "L(A) = P_{m,n} R(A) P_{m,n}^T",
        IntMatrix::product_of(&[&p, &r, &pt])? == l,
    ));
    report.checks.push(IdentityCheck::new(
        "L(A) = P_{m,n} R(A) P_{m,n}^-1",
        conjugate(&p, &r)? == l,
    ));

    let s: Vec<IntMatrix> = (1..=n).map(|j| s_j_embed(a, n, j)).collect::<Result<_>>()?;
    let refs: Vec<&IntMatrix> = s.iter().collect();
    let prod = IntMatrix::product_of(&refs)?;
    report.checks.push(IdentityCheck::new(
        "R(A) = s_1(A) s_2(A) ... s_n(A)",
        prod == r,
    ));

    let det_p = p.determinant()?;
    if det_p == BigInt::from(-1) {
        let size = m * n;
        let wd = w_d(size)?;
        let wu = w_u(size)?;
        let pwd = p.checked_mul(&wd)?;
        let pwu = p.checked_mul(&wu)?;
        report
            .checks
            .push(IdentityCheck::new("det P_{m,n} W_d = 1", det_is(&pwd, 1)?));
        report
            .checks
            .push(IdentityCheck::new("det P_{m,n} W_u = 1", det_is(&pwu, 1)?));
        report.checks.push(IdentityCheck::new(
            "det W_d^-1 W_u = 1",
            det_is(&wd.permutation_inverse()?.checked_mul(&wu)?, 1)?,
        ));
        let head = IntMatrix::product_of(&refs[..n - 1])?;
        let tail = &s[n - 1];
        report.checks.push(IdentityCheck::new(
            "s_1(A) ... s_{n-1}(A) = W_d s_1(A) ... s_{n-1}(A) W_d^-1",
            conjugate(&wd, &head)? == head,
        ));
        report.checks.push(IdentityCheck::new(
            "s_n(A) = W_u s_n(A) W_u^-1",
            conjugate(&wu, tail)? == *tail,
        ));
        let factored = conjugate(&pwd, &head)?.checked_mul(&conjugate(&pwu, tail)?)?;
        report.checks.push(IdentityCheck::new(
            "L(A) = (P W_d) s_1(A) ... s_{n-1}(A) (P W_d)^-1 (P W_u) s_n(A) (P W_u)^-1",
            factored == l,
        ));
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvolutionType {
    Orthogonal,
    Symplectic,
}

impl fmt::Display for InvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionType::Orthogonal => "orthogonal",
            InvolutionType::Symplectic => "symplectic",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvolutionClass {
    pub kind: InvolutionType,
    /// `n(n+1)/2` for orthogonal, `n(n-1)/2` for symplectic.
    pub expected_fixed_dim: usize,
    /// Dimension of `{M : A M^T A^-1 = M}`, computed by a rank calculation.
    pub fixed_dim: usize,
}

/// Classifies `M -> A M^T A^-1` by the symmetry of `A`.
pub fn classify_involution(a: &IntMatrix) -> Result<InvolutionClass> {
    if !a.is_square() {
        return Err(Error::Shape(format!(
            "expected a square matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    let kind = if a.is_symmetric() {
        InvolutionType::Orthogonal
    } else if a.is_antisymmetric() {
        InvolutionType::Symplectic
    } else {
        return Err(Error::NotInvolutionDatum);
    };
    let n = a.rows;
    let za = a.to_zmatrix();
    let det = za.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let adj = adjugate(&za)?;
    // Fixed points of M -> A M^T adj(A) / det(A) are the kernel of
    // M -> A M^T adj(A) - det(A) M, acting on the n^2 entries of M.
    let dim = n * n;
    let mut op = ZMatrix::zeros(dim, dim);
    for p in 0..n {
        for q in 0..n {
            // image of the elementary matrix E_{pq}; E_{pq}^T = E_{qp}
            let col = p * n + q;
            for i in 0..n {
                for j in 0..n {
                    let mut x = &za[(i, q)] * &adj[(p, j)];
                    if i == p && j == q {
                        x -= &det;
                    }
                    op[(i * n + j, col)] = x;
                }
            }
        }
    }
    let rank = smith_normal_form(&op).rank();
    let expected_fixed_dim = match kind {
        InvolutionType::Orthogonal => n * (n + 1) / 2,
        InvolutionType::Symplectic => n * (n.saturating_sub(1)) / 2,
    };
    Ok(InvolutionClass {
        kind,
        expected_fixed_dim,
        fixed_dim: dim - rank,
    })
}

fn adjugate(a: &ZMatrix) -> Result<ZMatrix> {
    let n = a.rows();
    if n == 1 {
        return Ok(ZMatrix::identity(1));
    }
    let mut adj = ZMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let minor = ZMatrix::from_fn(n - 1, n - 1, |r, c| {
                let r = if r < j { r } else { r + 1 };
                let c = if c < i { c } else { c + 1 };
                a[(r, c)].clone()
            });
            let cof = minor.determinant()?;
            adj[(i, j)] = if (i + j) % 2 == 0 { cof } else { -cof };
        }
    }
    Ok(adj)
}

/// Dimension of the symmetric (`sign = 1`) or antisymmetric (`sign = -1`)
/// `n x n` matrices, as the rank of `M -> M + sign M^T`.
pub fn symmetrization_rank(n: usize, sign: i64) -> usize {
    let dim = n * n;
    let mut op = ZMatrix::zeros(dim, dim);
    for p in 0..n {
        for q in 0..n {
            let col = p * n + q;
            op[(p * n + q, col)] += BigInt::one();
            op[(q * n + p, col)] += BigInt::from(sign);
        }
    }
    smith_normal_form(&op).rank()
}

/// `J_{2k} = [[0, I_k], [-I_k, 0]]`
pub fn standard_symplectic(k: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * k, 2 * k);
    for i in 0..k {
        j.set(i, k + i, 1);
        j.set(k + i, i, -1);
    }
    j
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    Neither,
}

impl Symmetry {
    pub fn of(m: &IntMatrix) -> Symmetry {
        if m.is_symmetric() {
            Symmetry::Symmetric
        } else if m.is_antisymmetric() {
            Symmetry::Antisymmetric
        } else {
            Symmetry::Neither
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorForm {
    pub matrix: IntMatrix,
    pub symmetry: Symmetry,
}

/// Gram matrix of `B ⊗ B'`, `(v ⊗ v', w ⊗ w') -> B(v, w) B'(v', w')`.
pub fn tensor_bilinear(b: &IntMatrix, b2: &IntMatrix) -> Result<TensorForm> {
    for m in [b, b2] {
        if !m.is_square() {
            return Err(Error::Shape(format!(
                "expected a square matrix, got {}x{}",
                m.rows, m.cols
            )));
        }
        if m.determinant()?.is_zero() {
            return Err(Error::Singular);
        }
    }
    let matrix = kronecker(b, b2)?;
    let symmetry = Symmetry::of(&matrix);
    Ok(TensorForm { matrix, symmetry })
}

/// Tally for one family of identities across the suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaTally {
    pub name: &'static str,
    pub checked: usize,
    pub failed: usize,
    pub informational: bool,
    pub first_failure: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub identity: String,
    pub params: String,
    pub matrix: IntMatrix,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} fails at {} with A = {}",
            self.identity, self.params, self.matrix
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub max_size: usize,
    pub seed: u64,
    pub samples: usize,
    pub tallies: Vec<LemmaTally>,
}

impl SuiteReport {
    /// True when every non-informational identity held.
    pub fn all_pass(&self) -> bool {
        self.tallies
            .iter()
            .all(|t| t.informational || t.failed == 0)
    }

    pub fn tally(&self, name: &str) -> Option<&LemmaTally> {
        self.tallies.iter().find(|t| t.name == name)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "matrix identity suite: max size {}, seed {}, {} samples per shape",
            self.max_size, self.seed, self.samples
        )?;
        for t in &self.tallies {
            let status = match (t.failed, t.informational) {
                (0, _) => "ok",
                (_, true) => "info",
                (_, false) => "FAIL",
            };
            writeln!(
                f,
                "{status:>4}  {:<28} {}/{} hold",
                t.name,
                t.checked - t.failed,
                t.checked
            )?;
            if let Some(w) = &t.first_failure {
                writeln!(f, "      first failure: {w}")?;
            }
        }
        write!(
            f,
            "{}",
            if self.all_pass() {
                "all identities hold"
            } else {
                "some identities fail"
            }
        )
    }
}

pub const BLOCK_SWAP_DETERMINANT: &str = "block-swap determinant";
pub const BLOCK_SWAP_CONJUGATION: &str = "block-swap conjugation";
pub const SIGN_FLIP_CONJUGATION: &str = "sign-flip conjugation";
pub const PRODUCT_FORMULA: &str = "product formula";
pub const SHUFFLE_CONJUGATION: &str = "shuffle conjugation";
pub const FACTORED_SHUFFLE: &str = "factored shuffle conjugation";

struct Tallies(Vec<LemmaTally>);

impl Tallies {
    fn record(&mut self, name: &'static str, holds: bool, witness: impl FnOnce() -> Witness) {
        let t = self
            .0
            .iter_mut()
            .find(|t| t.name == name)
            .expect("known lemma");
        t.checked += 1;
        if !holds {
            t.failed += 1;
            if t.first_failure.is_none() {
                t.first_failure = Some(witness());
            }
        }
    }
}

/// Runs every identity for block sizes `1..=max_size`, `2..=max_size`
/// blocks, with `samples` random matrices (entries in `-9..=9`) per shape.
pub fn run_suite(max_size: usize, seed: u64, samples: usize) -> Result<SuiteReport> {
    if max_size < 2 {
        return Err(Error::OutOfRange(format!(
            "max size must be at least 2, got {max_size}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = [
        (BLOCK_SWAP_DETERMINANT, false),
        (BLOCK_SWAP_CONJUGATION, false),
        (SIGN_FLIP_CONJUGATION, true),
        (PRODUCT_FORMULA, false),
        (SHUFFLE_CONJUGATION, false),
        (FACTORED_SHUFFLE, false),
    ];
    let mut tallies = Tallies(
        names
            .iter()
            .map(|&(name, informational)| LemmaTally {
                name,
                checked: 0,
                failed: 0,
                informational,
                first_failure: None,
            })
            .collect(),
    );

    for n in 1..=max_size {
        for r in 2..=max_size {
            for _ in 0..samples {
                let a = IntMatrix::random(n, -9, 9, &mut rng);
                let report = verify_sj_conjugation(n, r, &a)?;
                let params = format!("n={n}, r={r}");
                for c in &report.checks {
                    let lemma = if c.name.starts_with("det") {
                        BLOCK_SWAP_DETERMINANT
                    } else {
                        BLOCK_SWAP_CONJUGATION
                    };
                    tallies.record(lemma, c.holds, || witness(c, &params, &a));
                }
                for c in report
                    .informational
                    .iter()
                    .filter(|c| c.name.contains("F P_"))
                {
                    tallies.record(SIGN_FLIP_CONJUGATION, c.holds, || witness(c, &params, &a));
                }
            }
        }
    }
    for m in 1..=max_size {
        for n in 1..=max_size {
            for _ in 0..samples {
                let a = IntMatrix::random(m, -9, 9, &mut rng);
                let report = verify_lr_conjugation(m, n, &a)?;
                let params = format!("m={m}, n={n}");
                for c in &report.checks {
                    let lemma = if c.name.starts_with("R(A)") {
                        PRODUCT_FORMULA
                    } else if c.name.starts_with("P_{m,n}") || c.name.starts_with("L(A) = P_{m,n}")
                    {
                        SHUFFLE_CONJUGATION
                    } else {
                        FACTORED_SHUFFLE
                    };
                    tallies.record(lemma, c.holds, || witness(c, &params, &a));
                }
            }
        }
    }
    Ok(SuiteReport {
        max_size,
        seed,
        samples,
        tallies: tallies.0,
    })
}

fn witness(c: &IdentityCheck, params: &str, a: &IntMatrix) -> Witness {
    Witness {
        identity: c.name.clone(),
        params: params.to_string(),
        matrix: a.clone(),
    }
}

/// `det` of a permutation matrix is `±1`; this returns the sign as `i64`.
pub fn permutation_sign(p: &IntMatrix) -> Result<i64> {
    let d = p.determinant()?;
    if d.abs() != BigInt::one() {
        return Err(Error::Singular);
    }
    Ok(if d.is_positive() { 1 } else { -1 })
}
