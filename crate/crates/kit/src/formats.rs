//! JSON shapes for presentations, diagrams, braids, forms, matrices and
//! Burnside certificates.
//!
//! Indices inside triple entries are 1-based, matching how components and
//! basis vectors are numbered in print.

use congruence_core::burnside::{BurnsideCertificate, FiniteGroupTable, GroupKind, Unitriangular, WitnessGroup};
use congruence_core::cup::TrilinearFormZd;
use congruence_core::link::{BraidWord, LinkDiagram};
use congruence_core::surgery::{SurgeryCoefficient, SurgeryPresentation, TripleLinking};
use congruence_core::zmod::IntMatrix;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::{KitError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleEntry {
    pub ijk: [usize; 3],
    pub value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupJson {
    Free(usize),
    Abelian(Vec<u64>),
}

impl From<GroupJson> for GroupKind {
    fn from(g: GroupJson) -> Self {
        match g {
            GroupJson::Free(r) => GroupKind::Free(r),
            GroupJson::Abelian(f) => GroupKind::Abelian(f),
        }
    }
}

/// `{"coeffs": [[p, q], ...], "linking": [[...]], "triple": [{"ijk": [1, 2, 3], "value": 1}]}`
///
/// A missing `linking` means all zeros. A missing `triple` leaves the triple
/// linking numbers unknown, while `[]` declares them all zero. The optional
/// `group` declares the fundamental group as `{"free": r}` or
/// `{"abelian": [invariant factors, 0 for Z]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationJson {
    pub coeffs: Vec<[i64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linking: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triple: Option<Vec<TripleEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupJson>,
}

impl PresentationJson {
    pub fn to_presentation(&self) -> Result<SurgeryPresentation> {
        let n = self.coeffs.len();
        let coeffs = self
            .coeffs
            .iter()
            .map(|&[p, q]| SurgeryCoefficient::new(p, q))
            .collect::<Result<Vec<_>, _>>()?;
        let linking = self.linking.clone().unwrap_or_else(|| vec![vec![0; n]; n]);
        let triple = match &self.triple {
            None => None,
            Some(entries) => Some(TripleLinking::from_entries(n, &zero_based(entries, n)?)?),
        };
        Ok(SurgeryPresentation::new(coeffs, linking, triple)?)
    }

    pub fn from_presentation(p: &SurgeryPresentation) -> Self {
        let n = p.len();
        let linking = p.linking_rows();
        Self {
            coeffs: p.coeffs().iter().map(|c| [c.numerator(), c.denominator()]).collect(),
            linking: (n > 0 && linking.iter().flatten().any(|&v| v != 0)).then_some(linking),
            triple: p.triple().map(|t| one_based(&t.nonzero_entries())),
            group: None,
        }
    }
}

fn zero_based(entries: &[TripleEntry], n: usize) -> Result<Vec<([usize; 3], i64)>> {
    entries
        .iter()
        .map(|e| {
            if e.ijk.iter().any(|&i| i == 0 || i > n) {
                return Err(KitError::Usage(format!("triple index {:?} out of range 1..={n}", e.ijk)));
            }
            Ok((e.ijk.map(|i| i - 1), e.value))
        })
        .collect()
}

fn one_based<V: Copy + Into<i128>>(entries: &[([usize; 3], V)]) -> Vec<TripleEntry> {
    entries
        .iter()
        .map(|&(ijk, v)| TripleEntry { ijk: ijk.map(|i| i + 1), value: i64::try_from(v.into()).expect("fits in i64") })
        .collect()
}

/// `{"crossings": [[a, b, c, d], ...], "components": [[edge, ...], ...], "orientations": [±1, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PdJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub crossings: Vec<[u32; 4]>,
    pub components: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orientations: Option<Vec<i8>>,
}

impl PdJson {
    pub fn to_diagram(&self) -> Result<LinkDiagram> {
        Ok(LinkDiagram::new(self.crossings.clone(), self.components.clone(), self.orientations.clone())?)
    }

    pub fn from_diagram(l: &LinkDiagram, label: Option<&str>) -> Self {
        Self {
            label: label.map(str::to_string),
            crossings: l.pd(),
            components: l.components().to_vec(),
            orientations: Some(l.signs()),
        }
    }
}

/// `{"strands": n, "word": [±i, ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BraidJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub strands: usize,
    pub word: Vec<i32>,
}

impl BraidJson {
    pub fn to_braid(&self) -> Result<BraidWord> {
        Ok(BraidWord::new(self.strands, self.word.clone())?)
    }
}

/// `{"d": d, "n": n, "entries": [{"ijk": [i, j, k], "value": v}, ...]}`; the
/// alternating law fills in the rest.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormJson {
    pub d: u64,
    pub n: usize,
    pub entries: Vec<TripleEntry>,
}

impl FormJson {
    pub fn to_form(&self) -> Result<TrilinearFormZd> {
        Ok(TrilinearFormZd::from_entries(self.d, self.n, &zero_based(&self.entries, self.n)?)?)
    }

    /// Nonzero entries with `i <= j <= k`.
    pub fn from_form(t: &TrilinearFormZd) -> Self {
        Self { d: t.modulus(), n: t.rank(), entries: one_based(&t.nonzero_entries()) }
    }
}

/// `{"matrix": [["1", "-2"], ...]}`, entries as decimal strings so that
/// they may exceed 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixJson {
    pub matrix: Vec<Vec<String>>,
    /// Column count, needed only when there are no rows.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cols: Option<usize>,
}

impl MatrixJson {
    pub fn to_matrix(&self) -> Result<IntMatrix> {
        let rows = self.matrix.len();
        let cols = self.matrix.first().map_or(self.cols.unwrap_or(0), Vec::len);
        let mut entries = Vec::with_capacity(rows * cols);
        for (i, row) in self.matrix.iter().enumerate() {
            if row.len() != cols {
                return Err(KitError::Usage(format!("matrix row {} has {} entries, expected {cols}", i + 1, row.len())));
            }
            for s in row {
                let v: BigInt = s
                    .trim()
                    .parse()
                    .map_err(|_| KitError::Usage(format!("matrix entry {s:?} is not a decimal integer")))?;
                entries.push(v);
            }
        }
        Ok(IntMatrix::from_entries(rows, cols, entries)?)
    }

    pub fn from_matrix(m: &IntMatrix) -> Self {
        Self {
            matrix: (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect(),
            cols: (m.rows() == 0).then_some(m.cols()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    /// Row-major multiplication table on `0..order`.
    Table { order: usize, identity: usize, table: Vec<u32> },
    /// Upper unitriangular 3×3 matrices over `Z_p`; element `a + p·b + p²·c`
    /// has `a`, `b` above the diagonal and `c` in the corner.
    Unitriangular { p: u64 },
}

/// A Burnside certificate: `images[i]` is the image of the `i`-th free
/// generator in `group`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertificateJson {
    pub d: u64,
    pub r: usize,
    pub order: u64,
    pub group: GroupSpec,
    pub images: Vec<usize>,
}

impl CertificateJson {
    pub fn from_certificate(c: &BurnsideCertificate) -> Self {
        let group = match &c.group {
            WitnessGroup::Table(t) => {
                GroupSpec::Table { order: t.order(), identity: t.identity(), table: t.table().to_vec() }
            }
            WitnessGroup::Unitriangular(u) => GroupSpec::Unitriangular { p: u.p() },
        };
        Self { d: c.d, r: c.r, order: c.group.order(), group, images: c.images.clone() }
    }

    /// Rebuilds the certificate; the table must satisfy the group axioms.
    pub fn to_certificate(&self) -> Result<BurnsideCertificate> {
        let group = match &self.group {
            GroupSpec::Table { order, identity, table } => {
                WitnessGroup::Table(FiniteGroupTable::new(*order, table.clone(), *identity)?)
            }
            GroupSpec::Unitriangular { p } => WitnessGroup::Unitriangular(Unitriangular::new(*p)?),
        };
        if group.order() != self.order {
            return Err(KitError::Usage(format!(
                "certificate states order {} but its group has order {}",
                self.order,
                group.order()
            )));
        }
        Ok(BurnsideCertificate { d: self.d, r: self.r, group, images: self.images.clone() })
    }
}
