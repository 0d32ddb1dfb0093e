use alloc::collections::VecDeque;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::One;

use super::diagram::{LinkDiagram, Slot};
use super::{BraidWord, LinkError};
use crate::zmod::{cokernel_mod, IntMatrix, ZdModuleStructure};

/// A link whose double branched cover is meant, with a display label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DbcReference {
    label: String,
    braid: Option<BraidWord>,
    diagram: LinkDiagram,
}

impl DbcReference {
    pub fn diagram(diagram: LinkDiagram, label: &str) -> Self {
        Self { label: label.to_string(), braid: None, diagram }
    }

    pub fn braid_closure(braid: BraidWord, label: &str) -> Self {
        let diagram = braid.closure();
        Self { label: label.to_string(), braid: Some(braid), diagram }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn braid(&self) -> Option<&BraidWord> {
        self.braid.as_ref()
    }

    pub fn link(&self) -> &LinkDiagram {
        &self.diagram
    }
}

/// Goeritz matrix of a connected diagram with at least one crossing.
///
/// Regions are numbered in order of first appearance when the darts
/// `(crossing, slot)` are scanned in order; the white regions are the
/// colour class of region 0 and the first of them is deleted. A crossing
/// whose white corners sit between slots `0,1` and `2,3` contributes `-1`
/// to the entry of its two white regions, the other kind `+1`, and
/// diagonal entries make every row of the full matrix sum to zero.
pub fn goeritz_matrix(l: &LinkDiagram) -> Result<IntMatrix, LinkError> {
    if l.crossing_count() == 0 {
        return Err(LinkError::EmptyDiagram);
    }
    let (pieces, circles) = l.pieces();
    if pieces.len() + circles > 1 {
        return Err(LinkError::SplitDiagram { pieces: pieces.len() + circles });
    }
    goeritz_of_piece(l, &pieces[0])
}

fn goeritz_of_piece(l: &LinkDiagram, piece: &[usize]) -> Result<IntMatrix, LinkError> {
    let n = piece.len();
    let local = |c: usize| piece.binary_search(&c).expect("piece is closed under edges");
    // face[k][s]: region traced by the dart leaving crossing piece[k] through slot s
    let mut face = vec![[usize::MAX; 4]; n];
    let mut faces = 0;
    for k in 0..n {
        for s in 0..4 {
            if face[k][s] != usize::MAX {
                continue;
            }
            let (mut k0, mut s0) = (k, s);
            loop {
                face[k0][s0] = faces;
                let (c1, s1): Slot = l.partner((piece[k0], s0));
                let nxt = (local(c1), (s1 + 1) % 4);
                if nxt == (k, s) {
                    break;
                }
                if face[nxt.0][nxt.1] != usize::MAX {
                    return Err(LinkError::NotPlanar);
                }
                (k0, s0) = nxt;
            }
            faces += 1;
        }
    }
    // V - E + F = 2 with E = 2V
    if faces != n + 2 {
        return Err(LinkError::NotPlanar);
    }
    // corner[k][t]: region in the quadrant between slots t and t + 1
    let corner = |k: usize, t: usize| face[k][(t + 1) % 4];

    let mut adjacent = vec![Vec::new(); faces];
    for (k, &c) in piece.iter().enumerate() {
        for s in 0..4 {
            let (c1, s1) = l.partner((c, s));
            let (f, g) = (face[k][s], face[local(c1)][s1]);
            if f == g {
                return Err(LinkError::NotPlanar);
            }
            adjacent[f].push(g);
        }
    }
    let mut colour = vec![u8::MAX; faces];
    colour[0] = 0;
    let mut queue = VecDeque::from([0]);
    while let Some(f) = queue.pop_front() {
        for &g in &adjacent[f] {
            if colour[g] == u8::MAX {
                colour[g] = 1 - colour[f];
                queue.push_back(g);
            } else if colour[g] == colour[f] {
                return Err(LinkError::NotPlanar);
            }
        }
    }
    let white: Vec<usize> = (0..faces).filter(|&f| colour[f] == 0).collect();
    let index = |f: usize| white.binary_search(&f).expect("white region");
    let m = white.len();
    let mut g = vec![0i64; m * m];
    for k in 0..n {
        let (eta, t) = if colour[corner(k, 0)] == 0 { (1, 0) } else { (-1, 1) };
        let (i, j) = (index(corner(k, t)), index(corner(k, t + 2)));
        if i != j {
            g[i * m + j] -= eta;
            g[j * m + i] -= eta;
        }
    }
    for i in 0..m {
        let off: i64 = (0..m).filter(|&j| j != i).map(|j| g[i * m + j]).sum();
        g[i * m + i] = -off;
    }
    let rows: Vec<Vec<i64>> = (1..m).map(|i| (1..m).map(|j| g[i * m + j]).collect()).collect();
    Ok(if rows.is_empty() { IntMatrix::zeros(0, 0) } else { IntMatrix::from_i64_rows(&rows) })
}

/// A presentation matrix for `H_1` of the double branched cover.
///
/// A diagram falling into pieces (crossingless circles included) has the
/// connected sum of the pieces' covers as its cover, plus one
/// `S^1 × S^2` summand for each piece beyond the first.
pub fn dbc_presentation(l: &LinkDiagram) -> Result<IntMatrix, LinkError> {
    let (pieces, circles) = l.pieces();
    let mut m = IntMatrix::zeros(0, 0);
    for piece in &pieces {
        m = m.direct_sum(&goeritz_of_piece(l, piece)?);
    }
    let extra = (pieces.len() + circles).saturating_sub(1);
    for _ in 0..extra {
        m = m.direct_sum(&IntMatrix::zeros(1, 1));
    }
    Ok(m)
}

/// `|det|` of the Goeritz matrix, the order of `H_1` of the double
/// branched cover, with `0` when that group is infinite.
pub fn determinant(l: &LinkDiagram) -> Result<BigUint, LinkError> {
    let m = dbc_presentation(l)?;
    if m.rows() == 0 {
        return Ok(BigUint::one());
    }
    let det = m.determinant().expect("presentation matrices are square");
    Ok(det.magnitude().clone())
}

/// `H_1(Σ_2(L); Z_d)` for the double branched cover of the referenced link.
pub fn dbc_homology(r: &DbcReference, d: u64) -> Result<ZdModuleStructure, LinkError> {
    if d < 2 {
        return Err(LinkError::InvalidModulus(d));
    }
    Ok(cokernel_mod(&dbc_presentation(&r.diagram)?, d))
}
