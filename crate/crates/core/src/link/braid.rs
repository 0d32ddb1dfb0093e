use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{LinkDiagram, LinkError};

/// A braid word on `strands` strands: `i` stands for `σ_i` and `-i` for
/// `σ_i^{-1}`, with `1 <= i < strands`.
///
/// Strands run upwards and `σ_i` crosses the strand in position `i` over
/// the strand in position `i + 1`, giving a positive crossing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    word: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, word: Vec<i32>) -> Result<Self, LinkError> {
        if strands == 0 {
            return Err(LinkError::NoStrands);
        }
        if let Some(&generator) = word.iter().find(|&&g| g == 0 || g.unsigned_abs() as usize >= strands) {
            return Err(LinkError::GeneratorOutOfRange { generator, strands });
        }
        Ok(Self { strands, word })
    }

    /// `(σ_1 σ_2 ... σ_{n-1})^q`, whose closure is the torus link `T(n, q)`.
    /// Negative `q` gives the mirror image.
    pub fn torus(strands: usize, q: i32) -> Result<Self, LinkError> {
        let cycle: Vec<i32> = if q >= 0 {
            (1..strands as i32).collect()
        } else {
            (1..strands as i32).rev().map(|g| -g).collect()
        };
        let reps = q.unsigned_abs() as usize;
        Self::new(strands, cycle.iter().copied().cycle().take(cycle.len() * reps).collect())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `perm[j]` is the final position of the strand that starts in position `j`.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &g in &self.word {
            let p = g.unsigned_abs() as usize - 1;
            at.swap(p, p + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure: the cycles of the permutation.
    pub fn component_count(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for j in 0..self.strands {
            if !seen[j] {
                cycles += 1;
                let mut k = j;
                while !seen[k] {
                    seen[k] = true;
                    k = perm[k];
                }
            }
        }
        cycles
    }

    /// Inserts `σ_i^{±d}` before position `position`.
    pub fn apply_d_move(&self, position: usize, generator: usize, sign: i32, d: usize) -> Result<Self, LinkError> {
        let g = self.d_move_generator(position, generator, sign)?;
        let mut word = self.word.clone();
        word.splice(position..position, core::iter::repeat(g).take(d));
        Ok(Self { strands: self.strands, word })
    }

    /// Removes `σ_i^{±d}` starting at `position`; the inverse of [`apply_d_move`](Self::apply_d_move).
    pub fn remove_d_move(&self, position: usize, generator: usize, sign: i32, d: usize) -> Result<Self, LinkError> {
        let g = self.d_move_generator(position, generator, sign)?;
        let end = position + d;
        if end > self.word.len() || self.word[position..end].iter().any(|&x| x != g) {
            return Err(LinkError::NotADMove { position });
        }
        let mut word = self.word.clone();
        word.drain(position..end);
        Ok(Self { strands: self.strands, word })
    }

    fn d_move_generator(&self, position: usize, generator: usize, sign: i32) -> Result<i32, LinkError> {
        if position > self.word.len() {
            return Err(LinkError::PositionOutOfRange { position, len: self.word.len() });
        }
        let g = generator as i32 * if sign < 0 { -1 } else { 1 };
        if generator == 0 || generator >= self.strands || sign == 0 {
            return Err(LinkError::GeneratorOutOfRange { generator: g, strands: self.strands });
        }
        Ok(g)
    }

    /// The closure as a PD diagram.
    ///
    /// Edge labels run consecutively along each component, and components
    /// are ordered by the lowest strand position they pass through.
    pub fn closure(&self) -> LinkDiagram {
        let n = self.strands;
        let mut cur: Vec<u32> = (1..=n as u32).collect();
        let mut next = n as u32 + 1;
        let mut pd = Vec::with_capacity(self.word.len());
        let mut signs = Vec::with_capacity(self.word.len());
        // edges of the strand that started in each position, and who is where
        let mut seqs: Vec<Vec<u32>> = cur.iter().map(|&l| vec![l]).collect();
        let mut strand_at: Vec<usize> = (0..n).collect();
        for &g in &self.word {
            let p = g.unsigned_abs() as usize - 1;
            let q = p + 1;
            let (fp, fq) = (next, next + 1);
            next += 2;
            if g > 0 {
                pd.push([cur[q], fq, fp, cur[p]]);
                signs.push(1);
            } else {
                pd.push([cur[p], cur[q], fq, fp]);
                signs.push(-1);
            }
            cur[p] = fp;
            cur[q] = fq;
            strand_at.swap(p, q);
            seqs[strand_at[p]].push(fp);
            seqs[strand_at[q]].push(fq);
        }
        // the top of each position is glued to its bottom
        let mut rename = BTreeMap::new();
        for (j, &l) in cur.iter().enumerate() {
            if l != j as u32 + 1 {
                rename.insert(l, j as u32 + 1);
                seqs[strand_at[j]].pop();
            }
        }
        let perm = self.permutation();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for j in 0..n {
            if seen[j] {
                continue;
            }
            let mut comp = Vec::new();
            let mut k = j;
            while !seen[k] {
                seen[k] = true;
                comp.extend_from_slice(&seqs[k]);
                k = perm[k];
            }
            components.push(comp);
        }
        // relabel consecutively in traversal order
        let mut relabel = BTreeMap::new();
        for (i, &l) in components.iter().flatten().enumerate() {
            relabel.insert(l, i as u32 + 1);
        }
        let fix = |l: u32| relabel[rename.get(&l).unwrap_or(&l)];
        let pd = pd.into_iter().map(|x| x.map(fix)).collect();
        let components = components.into_iter().map(|c| c.into_iter().map(fix).collect()).collect();
        LinkDiagram::new(pd, components, Some(signs)).expect("braid closures are valid diagrams")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} strands: [", self.strands)?;
        for (k, g) in self.word.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("]")
    }
}
