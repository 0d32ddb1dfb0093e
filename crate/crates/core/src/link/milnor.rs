use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::diagram::LinkDiagram;
use super::magnus::Magnus;
use super::LinkError;

/// Fixes the overall sign so that the closure of `(σ1 σ2^{-1})^3`, the
/// Borromean rings with braid-closure orientation and component order,
/// has `μ̄(123) = +1`.
const SIGN: i64 = -1;

/// Milnor's `μ̄(123)` of a 3-component link with vanishing pairwise
/// linking numbers.
///
/// The Wirtinger arcs of the diagram are sent into `Z⟨X1, X2⟩` truncated
/// above degree 2, with meridians of components 1 and 2 going to
/// `1 + X1`, `1 + X2` and those of component 3 to `1`. Leaving a crossing
/// under an arc with meridian `x` and sign `ε` conjugates the current
/// meridian by `x^ε`, and the longitude of component 3 is the product of
/// these factors along its traversal. The answer is the coefficient of
/// `X1 X2` in that longitude.
pub fn milnor_triple(l: &LinkDiagram) -> Result<i64, LinkError> {
    if l.component_count() != 3 {
        return Err(LinkError::WrongComponentCount { expected: 3, found: l.component_count() });
    }
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let value = l.linking_number(i, j)?;
        if value != 0 {
            return Err(LinkError::NonzeroLinking { i, j, value });
        }
    }
    let arcs = Arcs::new(l);
    let mut image: BTreeMap<u32, Magnus> = BTreeMap::new();
    for (i, comp) in l.components().iter().enumerate() {
        for &e in comp {
            image.insert(arcs.find(e), Magnus::generator(i));
        }
    }
    let factor = |image: &BTreeMap<u32, Magnus>, c: usize| {
        let x = l.crossings()[c];
        image[&arcs.find(x.pd()[1])].pow(x.sign())
    };
    // every pass settles one more degree, so two passes reach the fixed point
    for _ in 0..4 {
        let mut next = image.clone();
        for (i, comp) in l.components().iter().enumerate() {
            let base = arcs.find(comp[0]);
            let mut cur = Magnus::generator(i);
            for &e in comp {
                let Some((c, 0)) = l.head(e) else { continue };
                let g = factor(&image, c);
                cur = g.inverse() * cur * g;
                let out = arcs.find(l.crossings()[c].pd()[2]);
                if out != base {
                    next.insert(out, cur);
                }
            }
        }
        if next == image {
            break;
        }
        image = next;
    }
    let mut longitude = Magnus::ONE;
    for &e in &l.components()[2] {
        if let Some((c, 0)) = l.head(e) {
            longitude = longitude * factor(&image, c);
        }
    }
    Ok(SIGN * longitude.b[0][1])
}

/// Wirtinger arcs: edges joined through the over-strand of each crossing,
/// named by their smallest edge label.
struct Arcs {
    root: BTreeMap<u32, u32>,
}

impl Arcs {
    fn new(l: &LinkDiagram) -> Self {
        let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
        for comp in l.components() {
            for &e in comp {
                parent.insert(e, e);
            }
        }
        fn find(parent: &mut BTreeMap<u32, u32>, mut x: u32) -> u32 {
            while parent[&x] != x {
                let up = parent[&parent[&x]];
                parent.insert(x, up);
                x = up;
            }
            x
        }
        for x in l.crossings() {
            let (a, b) = (find(&mut parent, x.pd()[1]), find(&mut parent, x.pd()[3]));
            parent.insert(a.max(b), a.min(b));
        }
        let labels: Vec<u32> = parent.keys().copied().collect();
        let root = labels.into_iter().map(|e| (e, find(&mut parent, e))).collect();
        Self { root }
    }

    fn find(&self, e: u32) -> u32 {
        self.root[&e]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::BraidWord;

    fn borromean() -> LinkDiagram {
        BraidWord::new(3, alloc::vec![1, -2, 1, -2, 1, -2]).unwrap().closure()
    }

    #[test]
    fn borromean_rings() {
        let b = borromean();
        assert_eq!(milnor_triple(&b), Ok(1));
        // cyclic relabelling keeps the value, transpositions negate it
        assert_eq!(milnor_triple(&b.reorder_components(&[1, 2, 0]).unwrap()), Ok(1));
        assert_eq!(milnor_triple(&b.reorder_components(&[2, 0, 1]).unwrap()), Ok(1));
        for swap in [[1, 0, 2], [0, 2, 1], [2, 1, 0]] {
            assert_eq!(milnor_triple(&b.reorder_components(&swap).unwrap()), Ok(-1));
        }
        for i in 0..3 {
            assert_eq!(milnor_triple(&b.reverse_component(i).unwrap()), Ok(-1));
        }
    }

    #[test]
    fn unlinks_and_errors() {
        assert_eq!(milnor_triple(&LinkDiagram::unlink(3).unwrap()), Ok(0));
        // three unlinked circles drawn with crossings
        let l = BraidWord::new(3, alloc::vec![1, -1, 2, -2]).unwrap().closure();
        assert_eq!(milnor_triple(&l), Ok(0));
        assert_eq!(
            milnor_triple(&LinkDiagram::unlink(2).unwrap()),
            Err(LinkError::WrongComponentCount { expected: 3, found: 2 })
        );
        let linked = BraidWord::new(3, alloc::vec![1, 1]).unwrap().closure();
        assert_eq!(milnor_triple(&linked), Err(LinkError::NonzeroLinking { i: 0, j: 1, value: 1 }));
    }
}
