use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::LinkError;

/// A crossing and slot index.
pub(crate) type Slot = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    pd: [u32; 4],
    sign: i8,
}

impl Crossing {
    pub fn pd(&self) -> [u32; 4] {
        self.pd
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Slot where the over-strand enters: `3` for positive crossings, `1` otherwise.
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self) -> usize {
        4 - self.over_in()
    }

    pub(crate) fn is_head(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }
}

/// An oriented link diagram in PD notation.
///
/// Every edge label appearing in a crossing appears exactly twice, and the
/// components traverse the edges consistently with the crossings. Planarity
/// is not checked here; the Goeritz computation rejects diagrams whose faces
/// fail Euler's formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    components: Vec<Vec<u32>>,
    component_of: BTreeMap<u32, usize>,
    /// `[tail, head]` of every edge that meets a crossing.
    ends: BTreeMap<u32, [Slot; 2]>,
}

fn other_end(slots: &BTreeMap<u32, Vec<Slot>>, label: u32, here: Slot) -> Slot {
    let v = &slots[&label];
    if v[0] == here {
        v[1]
    } else {
        v[0]
    }
}

impl LinkDiagram {
    /// Builds a diagram from PD tuples and components listed in traversal order.
    ///
    /// Crossing signs are read off the under-strands and the component
    /// order. `orientations`, one `±1` per crossing, is needed only when a
    /// component passes over everywhere and has at most two edges; when
    /// given it must agree with everything else.
    pub fn new(pd: Vec<[u32; 4]>, components: Vec<Vec<u32>>, orientations: Option<Vec<i8>>) -> Result<Self, LinkError> {
        if components.is_empty() {
            return Err(LinkError::NoComponents);
        }
        let mut slots: BTreeMap<u32, Vec<Slot>> = BTreeMap::new();
        for (c, x) in pd.iter().enumerate() {
            for (s, &l) in x.iter().enumerate() {
                slots.entry(l).or_default().push((c, s));
            }
        }
        if let Some((&label, v)) = slots.iter().find(|(_, v)| v.len() != 2) {
            return Err(LinkError::LabelCount { label, count: v.len() });
        }
        let mut component_of = BTreeMap::new();
        for (i, comp) in components.iter().enumerate() {
            if comp.is_empty() {
                return Err(LinkError::EmptyComponent(i));
            }
            for &l in comp {
                if component_of.insert(l, i).is_some() {
                    return Err(LinkError::DuplicateLabel(l));
                }
                if comp.len() > 1 && !slots.contains_key(&l) {
                    return Err(LinkError::UnknownLabel(l));
                }
            }
        }
        if let Some(&l) = slots.keys().find(|l| !component_of.contains_key(l)) {
            return Err(LinkError::UnassignedLabel(l));
        }
        let mut signs = match orientations {
            Some(o) => {
                if o.len() != pd.len() {
                    return Err(LinkError::OrientationLength { expected: pd.len(), found: o.len() });
                }
                if let Some((crossing, &sign)) = o.iter().enumerate().find(|(_, s)| s.abs() != 1) {
                    return Err(LinkError::InvalidSign { crossing, sign });
                }
                o
            }
            None => vec![0; pd.len()],
        };

        let mut ordered = Vec::with_capacity(components.len());
        for (i, comp) in components.iter().enumerate() {
            if comp.len() == 1 && !slots.contains_key(&comp[0]) {
                ordered.push(comp.clone());
                continue;
            }
            let (start, head) = starting_head(i, comp, &pd, &slots, &signs)?;
            let mut walk = walk(i, start, head, &pd, &slots, &component_of, &mut signs)?;
            if walk.len() != comp.len() {
                return Err(LinkError::ComponentOrder { component: i });
            }
            let p = walk.iter().position(|&e| e == comp[0]).expect("walk covers the component");
            walk.rotate_left(p);
            if walk != *comp {
                return Err(LinkError::ComponentOrder { component: i });
            }
            ordered.push(walk);
        }

        let crossings: Vec<Crossing> = pd.iter().zip(&signs).map(|(&pd, &sign)| Crossing { pd, sign }).collect();
        let mut ends = BTreeMap::new();
        for (&l, v) in &slots {
            let (a, b) = (v[0], v[1]);
            let (ha, hb) = (crossings[a.0].is_head(a.1), crossings[b.0].is_head(b.1));
            if ha == hb {
                return Err(LinkError::InconsistentOrientation { crossing: a.0 });
            }
            ends.insert(l, if hb { [a, b] } else { [b, a] });
        }
        Ok(Self { crossings, components: ordered, component_of, ends })
    }

    /// `c` crossingless circles labelled `1..=c`.
    pub fn unlink(c: usize) -> Result<Self, LinkError> {
        Self::new(Vec::new(), (1..=c as u32).map(|l| vec![l]).collect(), None)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn pd(&self) -> Vec<[u32; 4]> {
        self.crossings.iter().map(Crossing::pd).collect()
    }

    pub fn signs(&self) -> Vec<i8> {
        self.crossings.iter().map(Crossing::sign).collect()
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn component_of(&self, label: u32) -> Option<usize> {
        self.component_of.get(&label).copied()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|x| x.sign as i64).sum()
    }

    /// Component of the under-strand and the over-strand at crossing `c`.
    pub fn strands_at(&self, c: usize) -> (usize, usize) {
        let x = &self.crossings[c];
        (self.component_of[&x.pd[0]], self.component_of[&x.pd[1]])
    }

    pub(crate) fn head(&self, label: u32) -> Option<Slot> {
        self.ends.get(&label).map(|e| e[1])
    }

    /// The other end of the edge at `slot`.
    pub(crate) fn partner(&self, (c, s): Slot) -> Slot {
        let e = self.ends[&self.crossings[c].pd[s]];
        if e[0] == (c, s) {
            e[1]
        } else {
            e[0]
        }
    }

    fn check_component(&self, i: usize) -> Result<(), LinkError> {
        if i >= self.components.len() {
            return Err(LinkError::ComponentIndex { index: i, count: self.components.len() });
        }
        Ok(())
    }

    /// Half the signed count of crossings between components `i` and `j`.
    pub fn linking_number(&self, i: usize, j: usize) -> Result<i64, LinkError> {
        self.check_component(i)?;
        self.check_component(j)?;
        if i == j {
            return Err(LinkError::SameComponent(i));
        }
        let sum: i64 = (0..self.crossings.len())
            .filter(|&c| {
                let (u, o) = self.strands_at(c);
                (u, o) == (i, j) || (u, o) == (j, i)
            })
            .map(|c| self.crossings[c].sign as i64)
            .sum();
        if sum % 2 != 0 {
            return Err(LinkError::OddCrossingSum { i, j });
        }
        Ok(sum / 2)
    }

    /// The same diagram with component `i` traversed backwards.
    pub fn reverse_component(&self, i: usize) -> Result<Self, LinkError> {
        self.check_component(i)?;
        let mut pd = Vec::with_capacity(self.crossings.len());
        let mut signs = Vec::with_capacity(self.crossings.len());
        for (c, x) in self.crossings.iter().enumerate() {
            let (u, o) = self.strands_at(c);
            let p = x.pd;
            pd.push(if u == i { [p[2], p[3], p[0], p[1]] } else { p });
            signs.push(if (u == i) != (o == i) { -x.sign } else { x.sign });
        }
        let mut components = self.components.clone();
        components[i][1..].reverse();
        Self::new(pd, components, Some(signs))
    }

    /// The same diagram with components listed as `order[0], order[1], ...`.
    pub fn reorder_components(&self, order: &[usize]) -> Result<Self, LinkError> {
        let n = self.components.len();
        let mut seen = vec![false; n];
        if order.len() != n || order.iter().any(|&k| k >= n || core::mem::replace(&mut seen[k], true)) {
            return Err(LinkError::NotAPermutation);
        }
        let components = order.iter().map(|&k| self.components[k].clone()).collect();
        Self::new(self.pd(), components, Some(self.signs()))
    }

    /// Crossings grouped into connected pieces of the diagram, each sorted,
    /// with pieces ordered by their first crossing, plus the number of
    /// crossingless circles.
    pub fn pieces(&self) -> (Vec<Vec<usize>>, usize) {
        let n = self.crossings.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.ends.values() {
            let (a, b) = (find(&mut parent, e[0].0), find(&mut parent, e[1].0));
            parent[a.max(b)] = a.min(b);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for c in 0..n {
            let r = find(&mut parent, c);
            groups.entry(r).or_default().push(c);
        }
        let circles = self.components.iter().filter(|comp| !self.ends.contains_key(&comp[0])).count();
        (groups.into_values().collect(), circles)
    }
}

/// An edge of component `i` together with its head slot.
fn starting_head(
    i: usize,
    comp: &[u32],
    pd: &[[u32; 4]],
    slots: &BTreeMap<u32, Vec<Slot>>,
    signs: &[i8],
) -> Result<(u32, Slot), LinkError> {
    for &e in comp {
        for &(c, s) in &slots[&e] {
            match s {
                0 => return Ok((e, (c, 0))),
                2 => return Ok((e, other_end(slots, e, (c, 2)))),
                _ if signs[c] != 0 => {
                    let over_in = if signs[c] > 0 { 3 } else { 1 };
                    let head = if s == over_in { (c, s) } else { other_end(slots, e, (c, s)) };
                    return Ok((e, head));
                }
                _ => {}
            }
        }
    }
    // passes over everywhere: fall back on the listed order
    if comp.len() >= 3 {
        for &(c, s) in &slots[&comp[0]] {
            if pd[c][(s + 2) % 4] == comp[1] {
                return Ok((comp[0], (c, s)));
            }
        }
        return Err(LinkError::ComponentOrder { component: i });
    }
    Err(LinkError::AmbiguousOrientation { component: i })
}

/// Follows component `i` from `start`, fixing the sign of every crossing it
/// passes over. Returns the edges in traversal order.
fn walk(
    i: usize,
    start: u32,
    head: Slot,
    pd: &[[u32; 4]],
    slots: &BTreeMap<u32, Vec<Slot>>,
    component_of: &BTreeMap<u32, usize>,
    signs: &mut [i8],
) -> Result<Vec<u32>, LinkError> {
    let mut order = vec![start];
    let mut visited = BTreeSet::from([start]);
    let mut h = head;
    loop {
        let (c, s) = h;
        match s {
            0 => {}
            2 => return Err(LinkError::InconsistentOrientation { crossing: c }),
            _ => {
                let sign = if s == 3 { 1 } else { -1 };
                if signs[c] == 0 {
                    signs[c] = sign;
                } else if signs[c] != sign {
                    return Err(LinkError::InconsistentOrientation { crossing: c });
                }
            }
        }
        let out = (c, (s + 2) % 4);
        let next = pd[c][out.1];
        if next == start {
            if other_end(slots, start, head) != out {
                return Err(LinkError::InconsistentOrientation { crossing: c });
            }
            return Ok(order);
        }
        if component_of[&next] != i {
            return Err(LinkError::ComponentMismatch { component: i, label: next });
        }
        if !visited.insert(next) {
            return Err(LinkError::InconsistentOrientation { crossing: c });
        }
        order.push(next);
        h = other_end(slots, next, out);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf() -> LinkDiagram {
        // closure of the 2-braid with two positive crossings
        LinkDiagram::new(vec![[2, 4, 3, 1], [4, 2, 1, 3]], vec![vec![1, 4], vec![2, 3]], None).unwrap()
    }

    #[test]
    fn hopf_signs_and_linking() {
        let h = hopf();
        assert_eq!(h.signs(), [1, 1]);
        assert_eq!(h.linking_number(0, 1), Ok(1));
        assert_eq!(h.linking_number(1, 0), Ok(1));
        let r = h.reverse_component(1).unwrap();
        assert_eq!(r.signs(), [-1, -1]);
        assert_eq!(r.linking_number(0, 1), Ok(-1));
        assert_eq!(r.reverse_component(1).unwrap(), h);
    }

    #[test]
    fn trefoil_signs() {
        // left-handed and right-handed trefoils from the standard tables
        let t = LinkDiagram::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], vec![vec![1, 2, 3, 4, 5, 6]], None)
            .unwrap();
        assert_eq!(t.writhe().abs(), 3);
        assert_eq!(t.component_count(), 1);
    }

    #[test]
    fn kink() {
        // one-crossing unknots: edge 2 leaves the under-strand and re-enters on top
        let k = LinkDiagram::new(vec![[1, 1, 2, 2]], vec![vec![1, 2]], None).unwrap();
        assert_eq!(k.signs(), [1]);
        let k = LinkDiagram::new(vec![[1, 2, 2, 1]], vec![vec![1, 2]], None).unwrap();
        assert_eq!(k.signs(), [-1]);
    }

    #[test]
    fn rejects_malformed_codes() {
        assert_eq!(
            LinkDiagram::new(vec![[1, 4, 2, 3]], vec![vec![1, 2], vec![3, 4]], None),
            Err(LinkError::LabelCount { label: 1, count: 1 })
        );
        assert!(matches!(
            LinkDiagram::new(vec![[2, 4, 3, 1], [4, 2, 1, 3]], vec![vec![1, 2, 3, 4]], None),
            Err(LinkError::ComponentMismatch { .. } | LinkError::ComponentOrder { .. })
        ));
        assert_eq!(
            LinkDiagram::new(vec![[2, 4, 3, 1], [4, 2, 1, 3]], vec![vec![1, 4]], None),
            Err(LinkError::UnassignedLabel(2))
        );
        assert_eq!(
            LinkDiagram::new(vec![[2, 4, 3, 1], [4, 2, 1, 3]], vec![vec![1, 4], vec![2, 3]], Some(vec![1, -1])),
            Err(LinkError::InconsistentOrientation { crossing: 1 })
        );
        assert_eq!(LinkDiagram::new(vec![], vec![], None), Err(LinkError::NoComponents));
    }

    #[test]
    fn listed_order_must_match_orientation() {
        let t = LinkDiagram::new(vec![[1, 5, 2, 4], [3, 1, 4, 6], [5, 3, 6, 2]], vec![vec![1, 6, 5, 4, 3, 2]], None);
        assert_eq!(t, Err(LinkError::ComponentOrder { component: 0 }));
    }

    #[test]
    fn over_only_components_need_signs() {
        // a circle lying on top of another, met at two crossings
        let pd = vec![[1, 3, 2, 4], [2, 3, 1, 4]];
        let comps = vec![vec![1, 2], vec![3, 4]];
        assert_eq!(
            LinkDiagram::new(pd.clone(), comps.clone(), None),
            Err(LinkError::AmbiguousOrientation { component: 1 })
        );
        let d = LinkDiagram::new(pd, comps, Some(vec![-1, 1])).unwrap();
        assert_eq!(d.linking_number(0, 1), Ok(0));
    }

    #[test]
    fn unlink_and_pieces() {
        let u = LinkDiagram::unlink(3).unwrap();
        assert_eq!(u.component_count(), 3);
        assert_eq!(u.pieces(), (vec![], 3));
        assert_eq!(u.linking_number(0, 2), Ok(0));
        assert_eq!(hopf().pieces(), (vec![vec![0, 1]], 0));
    }

    #[test]
    fn reorder_checks_permutation() {
        let h = hopf();
        let r = h.reorder_components(&[1, 0]).unwrap();
        assert_eq!(r.components()[0], [2, 3]);
        assert_eq!(h.reorder_components(&[0, 0]), Err(LinkError::NotAPermutation));
    }
}
