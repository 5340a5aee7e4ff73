//! Degree-by-degree certificate that the map
//! `J: BPO(m) x BSO(n) -> BPO(mn) x BSO(N)` is `d`-connected, `d = min(m, n)`.
//!
//! The first coordinate of `J` is induced by the tensor product, the second
//! by `Tr`, a combination of direct sums weighted by a positive Bezout pair.
//! On homotopy groups `pi_i` of classifying spaces this is a homomorphism on
//! `pi_{i-1}` of the groups themselves; `J` is `d`-connected when those maps
//! are isomorphisms for `i < d` and an epimorphism for `i = d`. A base of
//! dimension at most `d` then lifts through `J`, which splits off the
//! tensor-product decomposition.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bezout::positive_bezout;
use crate::error::{Error, Result};
use crate::fgab::{compose, FgAbGroup, GroupHom};
use crate::homotopy::{pi_of, GroupFamily};
use crate::induced::{
    direct_sum_induced, quotient_tensor_induced, r_fold_sum_induced, r_fold_tensor_induced,
    tensor_induced,
};
use crate::snf::smith_normal_form;
use crate::zmatrix::ZMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DecompositionProblem {
    pub m: u64,
    pub n: u64,
    /// CW dimension of the base space.
    pub dim_x: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParityCase {
    OddOdd,
    EvenOdd,
}

impl fmt::Display for ParityCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParityCase::OddOdd => "odd_odd",
            ParityCase::EvenOdd => "even_odd",
        })
    }
}

/// Coefficients of `Tr`. Odd/odd: `v n - u m = sign`, `N = u m + v n`.
/// Even/odd: `v n - 2 u m^2 = sign`, `N = u m^2 + v n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TrData {
    pub u: u64,
    pub v: u64,
    pub sign: i8,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub case: ParityCase,
}

/// Assignment of the undetermined coefficient of `Tr_1` in the even/odd case.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z: Option<u8>,
    #[serde(rename = "z'", skip_serializing_if = "Option::is_none", default)]
    pub z_prime: Option<u8>,
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.z, self.z_prime) {
            (Some(z), _) => write!(f, "z={z}"),
            (_, Some(z)) => write!(f, "z'={z}"),
            _ => f.write_str("-"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Iso,
    Epi,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Iso => "iso",
            Verdict::Epi => "epi",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Variant {
    pub params: Params,
    pub hom: GroupHom,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeReport {
    /// Degree on classifying spaces.
    pub i: u64,
    /// Degree on the groups, `i - 1`.
    pub i_group: u64,
    pub source: FgAbGroup,
    pub target: FgAbGroup,
    pub variants: Vec<Variant>,
}

impl DegreeReport {
    pub fn passes(&self) -> bool {
        self.variants.iter().all(|v| v.verdict != Verdict::Fail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CertificateStatus {
    /// All checks pass and the base is small enough.
    Decomposable,
    /// All checks pass but `dim_x > d`.
    DimensionGated,
    /// A degree check or the determinant recheck failed. Valid inputs never
    /// land here; it indicates a defect in the computation.
    CheckFailed { degree: Option<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionCertificate {
    pub problem: DecompositionProblem,
    pub tr: TrData,
    pub reports: Vec<DegreeReport>,
    pub connectivity: u64,
    /// `[[n, m], [u, v]]` or `[[n, m], [2um, v]]`: the action of `J` in the
    /// stable range, up to the identification of both groups with `Z`.
    pub stable_matrix: ZMatrix,
    pub stable_matrix_unimodular: bool,
    pub decomposable: bool,
    pub status: CertificateStatus,
    pub narrative: String,
}

fn parity_case(m: u64, n: u64) -> Result<ParityCase> {
    if m == 0 || n == 0 {
        return Err(Error::OutOfRange(format!(
            "degrees must be positive, got m={m}, n={n}"
        )));
    }
    match (m % 2, n % 2) {
        (1, 1) => Ok(ParityCase::OddOdd),
        (0, 1) => Ok(ParityCase::EvenOdd),
        (0, 0) => Err(Error::WrongParity(format!(
            "m={m} and n={n} are both even; no decomposition result covers this case"
        ))),
        _ => Err(Error::WrongParity(format!(
            "m={m} is odd and n={n} is even; pass the even degree as m"
        ))),
    }
}

pub fn build_tr(m: u64, n: u64) -> Result<TrData> {
    let case = parity_case(m, n)?;
    if m.gcd(&n) != 1 {
        return Err(Error::NotCoprime { a: m, b: n });
    }
    let overflow = || Error::Overflow("Tr coefficients");
    let (a, weight) = match case {
        ParityCase::OddOdd => (m, m),
        ParityCase::EvenOdd => {
            let m2 = m.checked_mul(m).ok_or_else(overflow)?;
            (m2.checked_mul(2).ok_or_else(overflow)?, m2)
        }
    };
    let p = positive_bezout(a, n)?;
    let big_n =
        p.u.checked_mul(weight)
            .and_then(|x| x.checked_add(p.v.checked_mul(n)?))
            .ok_or_else(overflow)?;
    Ok(TrData {
        u: p.u,
        v: p.v,
        sign: p.sign,
        big_n,
        case,
    })
}

fn check_group_degree(m: u64, n: u64, k: u64) -> Result<()> {
    let d = m.min(n);
    if k + 1 > d {
        return Err(Error::UnsupportedRange { n: d, i: k });
    }
    Ok(())
}

/// Source of `J` and `Tr` on `pi_k`.
fn source_group(tr: &TrData, m: u64, n: u64, k: u64) -> Result<FgAbGroup> {
    let first = match tr.case {
        ParityCase::OddOdd => pi_of(GroupFamily::SO, m, k)?,
        ParityCase::EvenOdd => pi_of(GroupFamily::PO, m, k)?,
    };
    Ok(first.direct_sum(&pi_of(GroupFamily::SO, n, k)?))
}

/// Relabels a hom built on `pi_k(O(.))` onto the matching `SO`/`PO` groups,
/// which coincide with the orthogonal ones in the degrees where it is used.
fn relabel(h: GroupHom, source: FgAbGroup, target: FgAbGroup) -> Result<GroupHom> {
    if h.source() != &source || h.target() != &target {
        return Err(Error::CompositionMismatch {
            left: format!("{} -> {}", h.source(), h.target()),
            right: format!("{source} -> {target}"),
        });
    }
    Ok(h)
}

/// `Tr` on `pi_k`, one hom per assignment of the undetermined coefficient
/// (a single hom with empty params when there is none).
pub fn tr_hom(tr: &TrData, m: u64, n: u64, k: u64) -> Result<Vec<(Params, GroupHom)>> {
    check_group_degree(m, n, k)?;
    let source = source_group(tr, m, n, k)?;
    let target = pi_of(GroupFamily::SO, tr.big_n, k)?;
    let (u, v) = (tr.u, tr.v);
    if k == 0 {
        return Ok(vec![(Params::default(), GroupHom::zero(&source, &target))]);
    }
    match tr.case {
        ParityCase::OddOdd => {
            // (x, y) -> s(u s(x)) + s(v s(y))
            let weighted =
                GroupHom::product(&r_fold_sum_induced(m, u, k)?, &r_fold_sum_induced(n, v, k)?);
            let h = compose(&direct_sum_induced(u * m, v * n, k)?, &weighted)?;
            Ok(vec![(Params::default(), relabel(h, source, target)?)])
        }
        ParityCase::EvenOdd if k == 1 => {
            let mut out = Vec::with_capacity(2);
            for z in 0..=1u8 {
                let zi = z as i64;
                let (params, rows): (Params, Vec<i64>) = if m % 4 == 0 {
                    // (alpha + beta, gamma) -> z beta + gamma
                    (
                        Params {
                            z: Some(z),
                            z_prime: None,
                        },
                        vec![0, zi, 1],
                    )
                } else {
                    // (delta, gamma) -> z' delta + gamma
                    (
                        Params {
                            z: None,
                            z_prime: Some(z),
                        },
                        vec![zi, 1],
                    )
                };
                out.push((
                    params,
                    GroupHom::from_rows(source.clone(), target.clone(), &[rows])?,
                ));
            }
            Ok(out)
        }
        ParityCase::EvenOdd => {
            // (x, y) -> s(u s(2m s(x))) + s(v s(y)) = 2um s(x) + v s(y)
            let m2 = m * m;
            let first = compose(
                &r_fold_sum_induced(m2, u, k)?,
                &r_fold_tensor_induced(m, 2, k)?,
            )?;
            let weighted = GroupHom::product(&first, &r_fold_sum_induced(n, v, k)?);
            let h = compose(&direct_sum_induced(u * m2, v * n, k)?, &weighted)?;
            Ok(vec![(Params::default(), relabel(h, source, target)?)])
        }
    }
}

/// First coordinate of `J` on `pi_k`.
fn tensor_coordinate(tr: &TrData, m: u64, n: u64, k: u64) -> Result<GroupHom> {
    match tr.case {
        ParityCase::EvenOdd => quotient_tensor_induced(m, n, k),
        ParityCase::OddOdd if k == 0 => {
            let source = source_group(tr, m, n, 0)?;
            Ok(GroupHom::zero(&source, &pi_of(GroupFamily::SO, m * n, 0)?))
        }
        ParityCase::OddOdd => {
            let source = source_group(tr, m, n, k)?;
            let target = pi_of(GroupFamily::SO, m * n, k)?;
            relabel(tensor_induced(m, n, k)?, source, target)
        }
    }
}

/// `J` on `pi_i` of classifying spaces, checked against the connectivity
/// requirement at that degree.
pub fn build_j(tr: &TrData, m: u64, n: u64, i: u64) -> Result<DegreeReport> {
    let d = m.min(n);
    if i == 0 || i > d {
        return Err(Error::OutOfRange(format!(
            "J is checked in degrees 1..={d}, got {i}"
        )));
    }
    let k = i - 1;
    let first = tensor_coordinate(tr, m, n, k)?;
    let mut variants = Vec::new();
    for (params, second) in tr_hom(tr, m, n, k)? {
        let hom = GroupHom::pair(&first, &second)?;
        let verdict = if i < d {
            if hom.is_isomorphism() {
                Verdict::Iso
            } else {
                Verdict::Fail
            }
        } else if hom.is_epimorphism() {
            Verdict::Epi
        } else {
            Verdict::Fail
        };
        variants.push(Variant {
            params,
            hom,
            verdict,
        });
    }
    Ok(DegreeReport {
        i,
        i_group: k,
        source: first.source().clone(),
        target: variants[0].hom.target().clone(),
        variants,
    })
}

fn stable_matrix(tr: &TrData, m: u64, n: u64) -> ZMatrix {
    let lower_left = match tr.case {
        ParityCase::OddOdd => BigInt::from(tr.u),
        ParityCase::EvenOdd => BigInt::from(2) * tr.u * m,
    };
    let mut a = ZMatrix::zeros(2, 2);
    a[(0, 0)] = BigInt::from(n);
    a[(0, 1)] = BigInt::from(m);
    a[(1, 0)] = lower_left;
    a[(1, 1)] = BigInt::from(tr.v);
    a
}

pub fn certify(problem: DecompositionProblem) -> Result<DecompositionCertificate> {
    let DecompositionProblem { m, n, dim_x } = problem;
    let tr = build_tr(m, n)?;
    let d = m.min(n);
    let reports = (1..=d)
        .map(|i| build_j(&tr, m, n, i))
        .collect::<Result<Vec<_>>>()?;

    let stable_matrix = stable_matrix(&tr, m, n);
    // Recheck |det| = 1 through the Smith form rather than the Bezout identity.
    let snf = smith_normal_form(&stable_matrix);
    let stable_matrix_unimodular =
        snf.invariant_factors().iter().all(|x| x.is_one()) && snf.rank() == 2;

    let first_failure = reports.iter().find(|r| !r.passes()).map(|r| r.i);
    let connectivity = first_failure.map_or(d, |i| i - 1);
    let status = match (first_failure, stable_matrix_unimodular) {
        (Some(i), _) => CertificateStatus::CheckFailed { degree: Some(i) },
        (None, false) => CertificateStatus::CheckFailed { degree: None },
        (None, true) if dim_x <= d => CertificateStatus::Decomposable,
        (None, true) => CertificateStatus::DimensionGated,
    };
    let decomposable = status == CertificateStatus::Decomposable;
    let narrative = narrative(&problem, &tr, d, status);

    Ok(DecompositionCertificate {
        problem,
        tr,
        reports,
        connectivity,
        stable_matrix,
        stable_matrix_unimodular,
        decomposable,
        status,
        narrative,
    })
}

fn narrative(p: &DecompositionProblem, tr: &TrData, d: u64, status: CertificateStatus) -> String {
    let (m, n, big_n) = (p.m, p.n, tr.big_n);
    let (group_m, tr_formula) = match tr.case {
        ParityCase::OddOdd => ("SO", format!("{}m + {}n", tr.u, tr.v)),
        ParityCase::EvenOdd => ("PO", format!("{}m^2 + {}n", tr.u, tr.v)),
    };
    let j = format!(
        "J: B{group_m}({m}) x BSO({n}) -> B{group_m}({}) x BSO({big_n})",
        m * n
    );
    match status {
        CertificateStatus::Decomposable => format!(
            "{j} is {d}-connected (N = {tr_formula} = {big_n}). Since dim X = {} <= {d}, \
             J_# : [X, B{group_m}({m}) x BSO({n})] -> [X, B{group_m}({}) x BSO({big_n})] is a \
             surjection. Composing the classifying map of the algebra of degree {} with a \
             section of the first projection gives a lift through J, so the algebra is a \
             tensor product of algebras of degrees {m} and {n} with orthogonal involution.",
            p.dim_x,
            m * n,
            m * n
        ),
        CertificateStatus::DimensionGated => format!(
            "{j} is {d}-connected (N = {tr_formula} = {big_n}), but dim X = {} exceeds {d}, \
             so surjectivity of J_# is not guaranteed and no decomposition is certified.",
            p.dim_x
        ),
        CertificateStatus::CheckFailed { degree: Some(i) } => format!(
            "{j}: the connectivity check failed in degree {i}. This contradicts the expected \
             {d}-connectivity and indicates a defect in the computation."
        ),
        CertificateStatus::CheckFailed { degree: None } => format!(
            "{j}: the stable-range matrix is not unimodular. This contradicts the Bezout \
             identity and indicates a defect in the computation."
        ),
    }
}

/// Serialized form with a fixed field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub m: u64,
    pub n: u64,
    pub dim_x: u64,
    pub case: ParityCase,
    pub u: u64,
    pub v: u64,
    pub sign: i8,
    #[serde(rename = "N")]
    pub big_n: u64,
    pub degrees: Vec<DegreeJson>,
    pub connectivity: u64,
    pub decomposable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub i: u64,
    pub i_group: u64,
    pub source_orders: Vec<u64>,
    pub target_orders: Vec<u64>,
    pub variants: Vec<VariantJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariantJson {
    pub params: Params,
    pub matrix: Vec<Vec<i64>>,
    pub verdict: Verdict,
}

impl DecompositionCertificate {
    pub fn to_json_value(&self) -> Result<CertificateJson> {
        let degrees = self
            .reports
            .iter()
            .map(|r| {
                let variants = r
                    .variants
                    .iter()
                    .map(|v| {
                        Ok(VariantJson {
                            params: v.params,
                            matrix: v
                                .hom
                                .matrix_i64()
                                .ok_or(Error::Overflow("certificate matrix entry"))?,
                            verdict: v.verdict,
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(DegreeJson {
                    i: r.i,
                    i_group: r.i_group,
                    source_orders: r.source.orders().to_vec(),
                    target_orders: r.target.orders().to_vec(),
                    variants,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CertificateJson {
            m: self.problem.m,
            n: self.problem.n,
            dim_x: self.problem.dim_x,
            case: self.tr.case,
            u: self.tr.u,
            v: self.tr.v,
            sign: self.tr.sign,
            big_n: self.tr.big_n,
            degrees,
            connectivity: self.connectivity,
            decomposable: self.decomposable,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        let value = self.to_json_value()?;
        Ok(serde_json::to_string_pretty(&value).expect("certificate serializes"))
    }

    pub fn to_text(&self) -> String {
        let p = &self.problem;
        let t = &self.tr;
        let mut out = String::new();
        out.push_str(&format!(
            "m = {}, n = {}, dim X = {}, case {}\n",
            p.m, p.n, p.dim_x, t.case
        ));
        let rel = match t.case {
            ParityCase::OddOdd => format!("{}*{} - {}*{}", t.v, p.n, t.u, p.m),
            ParityCase::EvenOdd => format!("{}*{} - 2*{}*{}^2", t.v, p.n, t.u, p.m),
        };
        out.push_str(&format!(
            "u = {}, v = {}, {rel} = {}, N = {}\n",
            t.u, t.v, t.sign, t.big_n
        ));
        out.push_str(&format!(
            "stable matrix {} unimodular: {}\n",
            self.stable_matrix, self.stable_matrix_unimodular
        ));
        for r in &self.reports {
            out.push_str(&format!(
                "J_{} on pi_{}: {} -> {}\n",
                r.i, r.i_group, r.source, r.target
            ));
            for v in &r.variants {
                out.push_str(&format!(
                    "  [{}] {} {}\n",
                    v.params,
                    v.hom.matrix(),
                    v.verdict
                ));
            }
        }
        out.push_str(&format!(
            "connectivity = {}, decomposable = {}\n",
            self.connectivity, self.decomposable
        ));
        out.push_str(&self.narrative);
        out.push('\n');
        out
    }
}
