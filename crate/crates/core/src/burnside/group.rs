use alloc::vec;
use alloc::vec::Vec;

use super::BurnsideError;

/// Tables up to this order get the full `O(n³)` associativity check;
/// larger ones use Light's test over a generating set.
pub const FULL_CHECK_LIMIT: usize = 512;

/// A finite group given by its multiplication table on `0..order`.
///
/// The constructor verifies closure, the identity, inverses and
/// associativity, so every value of this type is a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteGroupTable {
    order: usize,
    mult: Vec<u32>,
    identity: usize,
}

impl FiniteGroupTable {
    pub fn new(order: usize, mult: Vec<u32>, identity: usize) -> Result<Self, BurnsideError> {
        if order == 0 || mult.len() != order * order {
            return Err(BurnsideError::MalformedTable("table must be order × order and nonempty"));
        }
        if identity >= order || mult.iter().any(|&v| v as usize >= order) {
            return Err(BurnsideError::MalformedTable("entry out of range"));
        }
        let g = Self { order, mult, identity };
        if (0..order).any(|x| g.mul(identity, x) != x || g.mul(x, identity) != x) {
            return Err(BurnsideError::NotAGroup("identity"));
        }
        for x in 0..order {
            let has_inverse = (0..order).any(|y| g.mul(x, y) == identity && g.mul(y, x) == identity);
            if !has_inverse {
                return Err(BurnsideError::NotAGroup("inverses"));
            }
        }
        let associative = if order <= FULL_CHECK_LIMIT { g.fully_associative() } else { g.light_associative() };
        if !associative {
            return Err(BurnsideError::NotAGroup("associativity"));
        }
        Ok(g)
    }

    fn fully_associative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (0..n).all(|b| {
            let ab = self.mul(a, b);
            (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
        }))
    }

    /// Light's test: the elements `g` with `(xg)y = x(gy)` for all `x, y`
    /// are closed under products, so checking a generating set suffices.
    fn light_associative(&self) -> bool {
        let n = self.order;
        let gens = self.greedy_generators();
        gens.iter().all(|&g| {
            (0..n).all(|x| {
                let xg = self.mul(x, g);
                (0..n).all(|y| self.mul(xg, y) == self.mul(x, self.mul(g, y)))
            })
        })
    }

    /// Adds the smallest element outside the current closure until the
    /// closure (under right multiplication by generators) is everything.
    fn greedy_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut gens = Vec::new();
        let mut reached = vec![false; n];
        reached[self.identity] = true;
        while let Some(next) = (0..n).find(|&x| !reached[x]) {
            gens.push(next);
            reached.iter_mut().for_each(|r| *r = false);
            reached[self.identity] = true;
            let mut stack = vec![self.identity];
            while let Some(x) = stack.pop() {
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        gens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[u32] {
        &self.mult
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b] as usize
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> Vec<usize> {
        (0..self.order).filter(|&a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a))).collect()
    }

    pub fn from_rule(order: usize, identity: usize, rule: impl Fn(usize, usize) -> usize) -> Result<Self, BurnsideError> {
        let mut mult = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                mult.push(rule(a, b) as u32);
            }
        }
        Self::new(order, mult, identity)
    }

    pub fn cyclic(n: usize) -> Result<Self, BurnsideError> {
        Self::from_rule(n, 0, |a, b| (a + b) % n)
    }

    /// Dihedral group of order `2n`: `r^k s^f` is element `k + n·f`.
    pub fn dihedral(n: usize) -> Result<Self, BurnsideError> {
        Self::from_rule(2 * n, 0, |x, y| {
            let (a, f) = (x % n, x / n);
            let (b, g) = (y % n, y / n);
            let k = if f == 0 { (a + b) % n } else { (a + n - b) % n };
            k + n * ((f + g) % 2)
        })
    }

    /// Upper unitriangular `3×3` matrices over `F_p`; see [`Unitriangular`].
    pub fn heisenberg(p: u64) -> Result<Self, BurnsideError> {
        let h = Unitriangular::new(p)?;
        Self::from_rule(h.order() as usize, h.identity(), |a, b| h.mul(a, b))
    }
}

/// The group of upper unitriangular `3×3` matrices over `Z_p`,
/// `[[1, a, c], [0, 1, b], [0, 0, 1]]`, with `(a, b, c)` stored as the
/// index `a + p·b + p²·c`.
///
/// For odd primes `p` it is nonabelian of order `p³` and exponent `p`.
/// Multiplication is matrix multiplication, so no table is needed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Unitriangular {
    p: u64,
}

impl Unitriangular {
    pub fn new(p: u64) -> Result<Self, BurnsideError> {
        if p < 2 {
            return Err(BurnsideError::MalformedTable("unitriangular group needs p >= 2"));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn order(&self) -> u64 {
        self.p * self.p * self.p
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn encode(&self, a: u64, b: u64, c: u64) -> usize {
        let p = self.p;
        ((a % p) + p * (b % p) + p * p * (c % p)) as usize
    }

    pub fn decode(&self, x: usize) -> (u64, u64, u64) {
        let (p, x) = (self.p, x as u64);
        (x % p, (x / p) % p, x / (p * p))
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        let (a, b, c) = self.decode(x);
        let (a2, b2, c2) = self.decode(y);
        self.encode(a + a2, b + b2, c + c2 + a * b2)
    }
}

/// The finite group carried by a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WitnessGroup {
    Table(FiniteGroupTable),
    Unitriangular(Unitriangular),
}

impl WitnessGroup {
    pub fn order(&self) -> u64 {
        match self {
            Self::Table(t) => t.order() as u64,
            Self::Unitriangular(u) => u.order(),
        }
    }

    pub fn identity(&self) -> usize {
        match self {
            Self::Table(t) => t.identity(),
            Self::Unitriangular(u) => u.identity(),
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Self::Table(t) => t.mul(a, b),
            Self::Unitriangular(u) => u.mul(a, b),
        }
    }

    pub fn pow(&self, x: usize, mut e: u64) -> usize {
        let mut base = x;
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
}

/// `x^d = 1` for every element.
pub fn exponent_divides(g: &WitnessGroup, d: u64) -> bool {
    (0..g.order() as usize).all(|x| g.pow(x, d) == g.identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_exponent() {
        let c3 = WitnessGroup::Table(FiniteGroupTable::cyclic(3).unwrap());
        assert!(exponent_divides(&c3, 3));
        assert!(!exponent_divides(&c3, 2));
        assert!(exponent_divides(&c3, 6));
    }

    #[test]
    fn dihedral_of_order_eight() {
        let t = FiniteGroupTable::dihedral(4).unwrap();
        assert_eq!(t.order(), 8);
        assert!(!t.is_abelian());
        // brute-force powering over the table
        let fourth_powers_trivial = (0..8).all(|x| {
            let mut y = 0;
            for _ in 0..4 {
                y = t.mul(y, x);
            }
            y == 0
        });
        assert!(fourth_powers_trivial);
        let g = WitnessGroup::Table(t);
        assert!(exponent_divides(&g, 4));
        assert!(!exponent_divides(&g, 2));
    }

    #[test]
    fn heisenberg_tables() {
        for p in [3u64, 5, 7] {
            let t = FiniteGroupTable::heisenberg(p).unwrap();
            assert_eq!(t.order() as u64, p * p * p);
            assert_eq!(t.center().len() as u64, p);
            assert!(!t.is_abelian());
            let g = WitnessGroup::Table(t);
            assert!(exponent_divides(&g, p));
            assert!(!exponent_divides(&g, 1));
        }
    }

    #[test]
    fn heisenberg_at_two_has_exponent_four() {
        // over F_2 the group is dihedral of order 8, not of exponent 2
        let g = WitnessGroup::Unitriangular(Unitriangular::new(2).unwrap());
        assert!(!exponent_divides(&g, 2));
        assert!(exponent_divides(&g, 4));
    }

    #[test]
    fn constructor_rejects_non_groups() {
        // x*y = x - y mod 3 has a right identity only
        let sub = FiniteGroupTable::from_rule(3, 0, |a, b| (a + 3 - b) % 3);
        assert!(matches!(sub, Err(BurnsideError::NotAGroup("identity"))));
        // max(a, b) on {0,1}: 0 is an identity, 1 has no inverse
        assert!(matches!(FiniteGroupTable::new(2, vec![0, 1, 1, 1], 0), Err(BurnsideError::NotAGroup("inverses"))));
        assert!(FiniteGroupTable::new(2, vec![0, 1, 1], 0).is_err());
        assert!(FiniteGroupTable::new(2, vec![0, 1, 1, 2], 0).is_err());
    }

    #[test]
    fn non_associative_loop_is_rejected() {
        // a Latin square loop of order 5 with x*x = 0; the only group of order 5 is cyclic
        let rows: [[u32; 5]; 5] = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]];
        let mult: Vec<u32> = rows.iter().flatten().copied().collect();
        assert!(matches!(FiniteGroupTable::new(5, mult, 0), Err(BurnsideError::NotAGroup("associativity"))));
    }

    #[test]
    fn light_test_accepts_large_heisenberg() {
        let t = FiniteGroupTable::heisenberg(11).unwrap();
        assert_eq!(t.order(), 1331);
        assert!(t.greedy_generators().len() <= 3);
    }
}
