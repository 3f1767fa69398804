//! Finite groups given by Cayley tables.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::soft::Universe;
use crate::subset::Subset;

/// A finite group on the elements of a [`Universe`], with every axiom
/// checked when the table is supplied.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    elements: Arc<Universe>,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({:?})", self.elements.labels())
    }
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity (`O(n³)`).
    pub fn from_table(elements: Arc<Universe>, table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = elements.len();
        if table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidGroup(format!("table must be {n}×{n}")));
        }
        if table.iter().flatten().any(|&c| c >= n) {
            return Err(Error::InvalidGroup("table entry outside the element set".into()));
        }
        if identity >= n {
            return Err(Error::InvalidGroup("identity outside the element set".into()));
        }
        if let Some(a) = (0..n).find(|&a| table[identity][a] != a || table[a][identity] != a) {
            return Err(Error::InvalidGroup(format!(
                "`{}` is not an identity for `{}`",
                elements.label(identity),
                elements.label(a)
            )));
        }
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == identity && table[b][a] == identity) {
                Some(b) => inverses.push(b),
                None => return Err(Error::InvalidGroup(format!("`{}` has no inverse", elements.label(a)))),
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::InvalidGroup(format!(
                            "not associative at ({}, {}, {})",
                            elements.label(a),
                            elements.label(b),
                            elements.label(c)
                        )));
                    }
                }
            }
        }
        Ok(FiniteGroup { elements, table, identity, inverses })
    }

    /// Table given by element labels.
    pub fn from_named<S: AsRef<str>>(labels: &[S], table: &[Vec<S>], identity: &str) -> Result<Self> {
        let elements = Universe::new(labels.iter().map(|s| s.as_ref().to_string()))?;
        let idx = table
            .iter()
            .map(|row| row.iter().map(|c| elements.index_of(c.as_ref())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let e = elements.index_of(identity)?;
        FiniteGroup::from_table(elements, idx, e)
    }

    /// `ℤ_n` on labels `0..n-1`.
    pub fn cyclic(n: usize) -> Result<Self> {
        let elements = Universe::range(n)?;
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        FiniteGroup::from_table(elements, table, 0)
    }

    /// `{e, a, b, c}` with every non-identity element of order two.
    pub fn klein_four() -> Self {
        let elements = Universe::new(["e", "a", "b", "c"]).unwrap();
        let table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        FiniteGroup::from_table(elements, table, 0).unwrap()
    }

    /// The one-element group `{1}`.
    pub fn trivial() -> Self {
        FiniteGroup::from_table(Universe::new(["1"]).unwrap(), vec![vec![0]], 0).unwrap()
    }

    /// `G × H` on pairs indexed `i * |H| + j`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        let elements = g.elements.product(&h.elements)?;
        let m = h.order();
        let n = g.order() * m;
        let table = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m))
                    .collect()
            })
            .collect();
        Ok(FiniteGroup {
            elements,
            table,
            identity: g.identity * m + h.identity,
            inverses: (0..n).map(|x| g.inv(x / m) * m + h.inv(x % m)).collect(),
        })
    }

    pub fn elements(&self) -> &Arc<Universe> {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        self.elements.label(a)
    }

    /// `A ∗ B = { a∗b : a ∈ A, b ∈ B }`
    pub fn set_product(&self, a: Subset, b: Subset) -> Subset {
        let mut out = Subset::EMPTY;
        for x in a.iter() {
            for y in b.iter() {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    pub fn set_inverse(&self, a: Subset) -> Subset {
        a.map(|x| self.inv(x))
    }

    pub fn is_subgroup(&self, h: Subset) -> bool {
        h.contains(self.identity)
            && h.iter().all(|a| h.contains(self.inv(a)) && h.iter().all(|b| h.contains(self.mul(a, b))))
    }

    /// The subgroup generated by `s`.
    pub fn generate(&self, s: Subset) -> Subset {
        let mut h = Subset::singleton(self.identity);
        let mut queue: VecDeque<usize> = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for g in s.iter() {
                let y = self.mul(x, g);
                if !h.contains(y) {
                    h.insert(y);
                    queue.push_back(y);
                }
            }
        }
        h
    }

    /// All subgroups, ordered by size then bits.
    pub fn subgroups(&self) -> Vec<Subset> {
        let mut seen: HashSet<Subset> = HashSet::new();
        let trivial = Subset::singleton(self.identity);
        seen.insert(trivial);
        let mut queue = vec![trivial];
        while let Some(h) = queue.pop() {
            for g in 0..self.order() {
                if !h.contains(g) {
                    let k = self.generate(h.with(g));
                    if seen.insert(k) {
                        queue.push(k);
                    }
                }
            }
        }
        let mut out: Vec<Subset> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out
    }

    pub fn is_normal(&self, h: Subset) -> bool {
        self.is_subgroup(h)
            && (0..self.order()).all(|g| h.iter().all(|x| h.contains(self.mul(self.mul(g, x), self.inv(g)))))
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The subgroup `h` as a group in its own right, with elements in
    /// ambient order.
    pub fn subgroup(&self, h: Subset) -> Result<FiniteGroup> {
        if !self.is_subgroup(h) {
            return Err(Error::NotSubgroup(format!("{:?}", self.elements.names(h))));
        }
        let members: Vec<usize> = h.iter().collect();
        let pos = |x: usize| members.iter().position(|&m| m == x).unwrap();
        let table = members
            .iter()
            .map(|&a| members.iter().map(|&b| pos(self.mul(a, b))).collect())
            .collect();
        FiniteGroup::from_table(self.elements.restrict(h)?, table, pos(self.identity))
    }

    /// `G / N` for normal `N`, with the projection. Cosets are labelled by
    /// their smallest member and ordered by it.
    pub fn quotient(&self, nsub: Subset) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(nsub) {
            return Err(Error::NotSubgroup(format!("{:?} is not normal", self.elements.names(nsub))));
        }
        let mut reps: Vec<usize> = Vec::new();
        let mut proj = vec![usize::MAX; self.order()];
        for g in 0..self.order() {
            if proj[g] == usize::MAX {
                let k = reps.len();
                reps.push(g);
                for x in nsub.iter() {
                    proj[self.mul(g, x)] = k;
                }
            }
        }
        let labels: Vec<String> = reps.iter().map(|&r| format!("{}N", self.label(r))).collect();
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| proj[self.mul(a, b)]).collect())
            .collect();
        let q = FiniteGroup::from_table(Universe::new(labels)?, table, proj[self.identity])?;
        Ok((q, proj))
    }

    /// First pair `(a, b)` with `ρ(a∗b) ≠ ρ(a)∗ρ(b)`.
    pub fn homomorphism_failure(&self, target: &FiniteGroup, rho: &[usize]) -> Option<(usize, usize)> {
        if rho.len() != self.order() || rho.iter().any(|&y| y >= target.order()) {
            return Some((usize::MAX, usize::MAX));
        }
        (0..self.order())
            .flat_map(|a| (0..self.order()).map(move |b| (a, b)))
            .find(|&(a, b)| rho[self.mul(a, b)] != target.mul(rho[a], rho[b]))
    }

    pub fn is_homomorphism(&self, target: &FiniteGroup, rho: &[usize]) -> bool {
        self.homomorphism_failure(target, rho).is_none()
    }

    /// A small generating set, picked greedily in element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut h = Subset::singleton(self.identity);
        for g in 0..self.order() {
            if !h.contains(g) {
                gens.push(g);
                h = self.generate(gens.iter().copied().collect());
            }
        }
        gens
    }

    /// Every homomorphism into `target`, as point maps in lexicographic
    /// order of the generator images.
    pub fn homomorphisms(&self, target: &FiniteGroup) -> Vec<Vec<usize>> {
        let gens = self.generators();
        let m = target.order();
        let mut out = Vec::new();
        let total = m.checked_pow(gens.len() as u32).expect("too many generator assignments");
        for code in 0..total {
            let mut images = Vec::with_capacity(gens.len());
            let mut c = code;
            for _ in 0..gens.len() {
                images.push(c % m);
                c /= m;
            }
            images.reverse();
            if let Some(rho) = self.extend(target, &gens, &images) {
                out.push(rho);
            }
        }
        out.sort();
        out
    }

    /// Extends generator images along words; `None` on a conflict.
    fn extend(&self, target: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
        let mut rho = vec![usize::MAX; self.order()];
        rho[self.identity] = target.identity;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (g, &img) in gens.iter().zip(images) {
                let y = self.mul(x, *g);
                let v = target.mul(rho[x], img);
                if rho[y] == usize::MAX {
                    rho[y] = v;
                    queue.push_back(y);
                } else if rho[y] != v {
                    return None;
                }
            }
        }
        self.is_homomorphism(target, &rho).then_some(rho)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_broken_tables() {
        let u = Universe::range(2).unwrap();
        assert!(FiniteGroup::from_table(u.clone(), vec![vec![0, 1], vec![1, 1]], 0).is_err());
        assert!(FiniteGroup::from_table(u.clone(), vec![vec![0, 1], vec![1, 0]], 1).is_err());
        // A quasigroup that is not associative.
        let u3 = Universe::range(3).unwrap();
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(FiniteGroup::from_table(u3, t, 0).is_err());
        assert!(FiniteGroup::from_named(&["0", "1"], &[vec!["0", "1"], vec!["1", "0"]], "0").is_ok());
    }

    #[test]
    fn subgroup_lattices() {
        assert_eq!(FiniteGroup::cyclic(4).unwrap().subgroups().len(), 3);
        assert_eq!(FiniteGroup::klein_four().subgroups().len(), 5);
        assert_eq!(FiniteGroup::cyclic(6).unwrap().subgroups().len(), 4);
        assert_eq!(FiniteGroup::trivial().subgroups(), vec![Subset::singleton(0)]);
    }

    #[test]
    fn set_products() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.set_product(Subset::singleton(0), Subset::singleton(1)), Subset::singleton(1));
        assert_eq!(z2.set_product(Subset::full(2), Subset::singleton(1)), Subset::full(2));
        let z3 = FiniteGroup::cyclic(3).unwrap();
        assert_eq!(z3.set_inverse(Subset::singleton(1)), Subset::singleton(2));
    }

    #[test]
    fn homomorphism_counts() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let v = FiniteGroup::klein_four();
        assert_eq!(z4.homomorphisms(&z4).len(), 4);
        assert_eq!(z2.homomorphisms(&z4), vec![vec![0, 0], vec![0, 2]]);
        assert_eq!(v.homomorphisms(&z2).len(), 4);
        assert_eq!(v.homomorphisms(&v).len(), 16);
        assert_eq!(z4.homomorphisms(&FiniteGroup::trivial()), vec![vec![0; 4]]);
    }

    #[test]
    fn products_and_quotients() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let p = FiniteGroup::direct_product(&z2, &z2).unwrap();
        assert_eq!(p.order(), 4);
        assert!(p.is_abelian());
        assert_eq!(p.elements().labels(), ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let (q, proj) = z4.quotient(Subset::from_bits(0b0101)).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj, vec![0, 1, 0, 1]);
        assert!(z4.is_homomorphism(&q, &proj));
        let h = z4.subgroup(Subset::from_bits(0b0101)).unwrap();
        assert_eq!(h.elements().labels(), ["0", "2"]);
    }
}
