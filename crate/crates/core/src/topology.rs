//! Finite soft topologies, stored extensionally as a canonical list of opens.
//!
//! Every topology caches, for each point `x`, its *minimal open*
//! `M_x = ⊓ { W ∈ ζ : x ∈̃ W }`. Since ζ is finite and closed under ⊓,
//! `M_x` is itself open and is the smallest soft open neighbourhood of `x`,
//! which turns every neighbourhood quantifier into a single comparison.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::soft::{slices_le, ParamSet, SoftMapping, SoftSet, Universe};
use crate::subset::Subset;
use crate::verdict::Verdict;

/// Hard cap on the number of opens produced by a closure computation.
pub const MAX_OPENS: usize = 1 << 20;

pub(crate) fn canonical_cmp(a: &[Subset], b: &[Subset]) -> Ordering {
    let ca: usize = a.iter().map(|s| s.len()).sum();
    let cb: usize = b.iter().map(|s| s.len()).sum();
    ca.cmp(&cb).then_with(|| a.cmp(b))
}

pub(crate) fn meet(a: &[Subset], b: &[Subset]) -> Vec<Subset> {
    a.iter().zip(b).map(|(x, y)| x.intersection(*y)).collect()
}

pub(crate) fn join(a: &[Subset], b: &[Subset]) -> Vec<Subset> {
    a.iter().zip(b).map(|(x, y)| x.union(*y)).collect()
}

/// Closes `seed` under pairwise joins, adding one generator at a time.
fn union_closure(seed: Vec<Subset>, gens: &[Vec<Subset>]) -> Result<HashSet<Vec<Subset>>> {
    let mut out: HashSet<Vec<Subset>> = HashSet::new();
    out.insert(seed);
    for g in gens {
        if out.contains(g) {
            continue;
        }
        let fresh: Vec<Vec<Subset>> = out
            .iter()
            .map(|s| join(s, g))
            .filter(|j| !out.contains(j))
            .collect();
        out.extend(fresh);
        if out.len() > MAX_OPENS {
            return Err(Error::SizeLimit(format!("closure exceeds {MAX_OPENS} opens")));
        }
    }
    Ok(out)
}

/// A soft topology ζ over `(X, ξ)`.
pub struct SoftTopology {
    universe: Arc<Universe>,
    params: Arc<ParamSet>,
    opens: Vec<Vec<Subset>>,
    index: HashMap<Vec<Subset>, usize>,
    minimal: OnceLock<Vec<Vec<Subset>>>,
}

impl Clone for SoftTopology {
    fn clone(&self) -> Self {
        SoftTopology {
            universe: self.universe.clone(),
            params: self.params.clone(),
            opens: self.opens.clone(),
            index: self.index.clone(),
            minimal: self.minimal.clone(),
        }
    }
}

impl PartialEq for SoftTopology {
    fn eq(&self, other: &Self) -> bool {
        self.opens == other.opens && self.universe == other.universe && self.params == other.params
    }
}

impl Eq for SoftTopology {}

impl fmt::Debug for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.opens()).finish()
    }
}

/// Outcome of checking the soft topology axioms on a family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TopologyReport {
    Valid,
    MissingEmpty,
    MissingAbsolute,
    /// Two members whose soft intersection is not in the family.
    IntersectionNotClosed(SoftSet, SoftSet),
    /// A sub-family whose soft union is not in the family.
    UnionNotClosed(Vec<SoftSet>),
}

impl TopologyReport {
    pub fn is_valid(&self) -> bool {
        matches!(self, TopologyReport::Valid)
    }

    /// Which axiom fails: 1 for the extremes, 2 for ⊓, 3 for ⊔.
    pub fn failed_axiom(&self) -> Option<u8> {
        match self {
            TopologyReport::Valid => None,
            TopologyReport::MissingEmpty | TopologyReport::MissingAbsolute => Some(1),
            TopologyReport::IntersectionNotClosed(..) => Some(2),
            TopologyReport::UnionNotClosed(_) => Some(3),
        }
    }
}

impl fmt::Display for TopologyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopologyReport::Valid => f.write_str("valid"),
            TopologyReport::MissingEmpty => f.write_str("axiom 1: empty soft set missing"),
            TopologyReport::MissingAbsolute => f.write_str("axiom 1: absolute soft set missing"),
            TopologyReport::IntersectionNotClosed(u, v) => {
                write!(f, "axiom 2: {u} ⊓ {v} is not in the family")
            }
            TopologyReport::UnionNotClosed(fam) => {
                let parts: Vec<String> = fam.iter().map(ToString::to_string).collect();
                write!(f, "axiom 3: union of [{}] is not in the family", parts.join(", "))
            }
        }
    }
}

fn common_space(family: &[SoftSet]) -> Result<(Arc<Universe>, Arc<ParamSet>)> {
    let first = family.first().ok_or(Error::Empty("family"))?;
    for w in &family[1..] {
        if w.universe() != first.universe() {
            return Err(Error::UniverseMismatch);
        }
        if w.params() != first.params() {
            return Err(Error::ParamMismatch);
        }
    }
    Ok((first.universe().clone(), first.params().clone()))
}

/// Checks the three soft topology axioms on a finite family. For a finite
/// family, closure under arbitrary unions reduces to pairwise unions.
pub fn verify_topology(family: &[SoftSet]) -> Result<TopologyReport> {
    let (u, p) = common_space(family)?;
    let members: HashSet<&[Subset]> = family.iter().map(|w| w.slices()).collect();
    let m = p.len();
    if !members.contains(&vec![Subset::EMPTY; m][..]) {
        return Ok(TopologyReport::MissingEmpty);
    }
    if !members.contains(&vec![u.full(); m][..]) {
        return Ok(TopologyReport::MissingAbsolute);
    }
    let mut sorted: Vec<&SoftSet> = family.iter().collect();
    sorted.sort_by(|a, b| canonical_cmp(a.slices(), b.slices()));
    sorted.dedup_by(|a, b| a.slices() == b.slices());
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            if !members.contains(&meet(a.slices(), b.slices())[..]) {
                return Ok(TopologyReport::IntersectionNotClosed((*a).clone(), (*b).clone()));
            }
        }
    }
    for (i, a) in sorted.iter().enumerate() {
        for b in &sorted[i + 1..] {
            if !members.contains(&join(a.slices(), b.slices())[..]) {
                return Ok(TopologyReport::UnionNotClosed(vec![(*a).clone(), (*b).clone()]));
            }
        }
    }
    Ok(TopologyReport::Valid)
}

impl SoftTopology {
    /// Validates `family` and builds the topology.
    pub fn new(family: &[SoftSet]) -> Result<Self> {
        let report = verify_topology(family)?;
        if !report.is_valid() {
            return Err(Error::NotTopology(report.to_string()));
        }
        let (u, p) = common_space(family)?;
        Ok(SoftTopology::from_trusted(u, p, family.iter().map(|w| w.slices().to_vec())))
    }

    /// Builds a topology from raw slice vectors that are known to satisfy
    /// the axioms. Duplicates are removed and the opens sorted canonically.
    pub(crate) fn from_trusted<I>(universe: Arc<Universe>, params: Arc<ParamSet>, opens: I) -> Self
    where
        I: IntoIterator<Item = Vec<Subset>>,
    {
        let mut opens: Vec<Vec<Subset>> = opens.into_iter().collect();
        opens.sort_by(|a, b| canonical_cmp(a, b));
        opens.dedup();
        let index = opens.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let t = SoftTopology { universe, params, opens, index, minimal: OnceLock::new() };
        debug_assert!(t.opens.len() > 256 || t.axioms_hold(), "trusted family is not a topology");
        t
    }

    /// Like [`SoftTopology::new`] but over raw slice vectors.
    pub fn from_slices<I>(universe: Arc<Universe>, params: Arc<ParamSet>, opens: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Subset>>,
    {
        let family = opens
            .into_iter()
            .map(|s| SoftSet::new(universe.clone(), params.clone(), s))
            .collect::<Result<Vec<_>>>()?;
        if family.is_empty() {
            return Err(Error::Empty("family"));
        }
        SoftTopology::new(&family)
    }

    fn axioms_hold(&self) -> bool {
        let m = self.params.len();
        self.index.contains_key(&vec![Subset::EMPTY; m])
            && self.index.contains_key(&vec![self.universe.full(); m])
            && self.opens.iter().enumerate().all(|(i, a)| {
                self.opens[i + 1..]
                    .iter()
                    .all(|b| self.index.contains_key(&meet(a, b)) && self.index.contains_key(&join(a, b)))
            })
    }

    /// `{∅_ξ, X_ξ}`
    pub fn indiscrete(universe: Arc<Universe>, params: Arc<ParamSet>) -> Self {
        let m = params.len();
        let full = universe.full();
        SoftTopology::from_trusted(universe, params, [vec![Subset::EMPTY; m], vec![full; m]])
    }

    /// The topology whose opens are exactly the absolute soft sets `A_ξ`
    /// for `A` in a classical topology on `X`.
    pub fn from_absolute(universe: Arc<Universe>, params: Arc<ParamSet>, opens: &[Subset]) -> Result<Self> {
        let m = params.len();
        SoftTopology::from_slices(universe, params, opens.iter().map(|&a| vec![a; m]))
    }

    /// Every soft set over `(X, ξ)` is open.
    pub fn discrete(universe: Arc<Universe>, params: Arc<ParamSet>) -> Result<Self> {
        let bits = universe.len() * params.len();
        if bits > 20 {
            return Err(Error::SizeLimit(format!("discrete topology on {bits} slice bits")));
        }
        let n = universe.len();
        let m = params.len();
        let opens = (0u64..1 << bits).map(|code| {
            (0..m)
                .map(|e| Subset::from_bits((code >> (e * n)) & Subset::full(n).bits()))
                .collect()
        });
        Ok(SoftTopology::from_trusted(universe, params, opens))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.opens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.opens.is_empty()
    }

    /// Raw slice vectors of the opens, in canonical order.
    pub fn open_slices(&self) -> &[Vec<Subset>] {
        &self.opens
    }

    pub fn open(&self, i: usize) -> SoftSet {
        SoftSet::from_parts(self.universe.clone(), self.params.clone(), self.opens[i].clone())
    }

    pub fn opens(&self) -> Vec<SoftSet> {
        (0..self.opens.len()).map(|i| self.open(i)).collect()
    }

    pub fn soft_set(&self, slices: Vec<Subset>) -> SoftSet {
        SoftSet::from_parts(self.universe.clone(), self.params.clone(), slices)
    }

    pub fn absolute_set(&self, a: Subset) -> SoftSet {
        SoftSet::make_absolute(self.universe.clone(), self.params.clone(), a)
    }

    pub fn contains_slices(&self, slices: &[Subset]) -> bool {
        self.index.contains_key(slices)
    }

    fn check_space(&self, w: &SoftSet) -> Result<()> {
        if **w.universe() != *self.universe {
            return Err(Error::UniverseMismatch);
        }
        if **w.params() != *self.params {
            return Err(Error::ParamMismatch);
        }
        Ok(())
    }

    pub fn is_soft_open(&self, w: &SoftSet) -> Result<bool> {
        self.check_space(w)?;
        Ok(self.contains_slices(w.slices()))
    }

    pub fn is_soft_closed(&self, w: &SoftSet) -> Result<bool> {
        self.check_space(w)?;
        let n = self.universe.len();
        let comp: Vec<Subset> = w.slices().iter().map(|s| s.complement(n)).collect();
        Ok(self.contains_slices(&comp))
    }

    pub fn is_absolute_open(&self, a: Subset) -> bool {
        self.contains_slices(&vec![a; self.params.len()])
    }

    pub fn is_indiscrete(&self) -> bool {
        self.opens.len() == 2
    }

    fn minimal_table(&self) -> &Vec<Vec<Subset>> {
        self.minimal.get_or_init(|| {
            let full = vec![self.universe.full(); self.params.len()];
            (0..self.universe.len())
                .map(|x| {
                    self.opens
                        .iter()
                        .filter(|o| o.iter().all(|s| s.contains(x)))
                        .fold(full.clone(), |acc, o| meet(&acc, o))
                })
                .collect()
        })
    }

    /// Slices of `M_x`, the smallest soft open neighbourhood of `x`.
    pub fn minimal_open_slices(&self, x: usize) -> &[Subset] {
        &self.minimal_table()[x]
    }

    pub fn minimal_open(&self, x: usize) -> SoftSet {
        self.soft_set(self.minimal_open_slices(x).to_vec())
    }

    /// `core(M_x)`: the smallest core of an open having `x` as a soft element.
    pub fn minimal_core(&self, x: usize) -> Subset {
        crate::soft::core_of(self.minimal_open_slices(x), self.universe.full())
    }

    /// All opens with `x` as a soft element, in canonical order.
    pub fn soft_open_neighborhoods(&self, x: usize) -> Vec<SoftSet> {
        self.neighborhood_indices(x).map(|i| self.open(i)).collect()
    }

    pub(crate) fn neighborhood_indices(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.opens.len()).filter(move |&i| self.opens[i].iter().all(|s| s.contains(x)))
    }

    /// `⋂ { core(W) : W ∈ ζ, x ∈ core(W) }`.
    pub fn minimal_core_neighborhood(&self, x: &str) -> Result<Subset> {
        Ok(self.minimal_core(self.universe.index_of(x)?))
    }

    /// The classical topology `{ W(e) : W ∈ ζ }`.
    pub fn parameter_topology(&self, param: &str) -> Result<ClassicalTopology> {
        let e = self.params.index_of(param)?;
        Ok(self.parameter_topology_at(e))
    }

    pub fn parameter_topology_at(&self, e: usize) -> ClassicalTopology {
        ClassicalTopology::from_family(self.universe.len(), self.opens.iter().map(|o| o[e]))
    }

    /// The family of cores of opens. It is closed under intersection but in
    /// general not under union; its generated topology governs step paths.
    pub fn cores(&self) -> Vec<Subset> {
        let full = self.universe.full();
        let mut out: Vec<Subset> = self.opens.iter().map(|o| crate::soft::core_of(o, full)).collect();
        out.sort();
        out.dedup();
        out
    }
}

/// A classical topology on `{0, .., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalTopology {
    n: usize,
    opens: Vec<Subset>,
}

impl ClassicalTopology {
    pub fn from_family(n: usize, family: impl IntoIterator<Item = Subset>) -> Self {
        let mut opens: Vec<Subset> = family.into_iter().collect();
        opens.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        opens.dedup();
        ClassicalTopology { n, opens }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn opens(&self) -> &[Subset] {
        &self.opens
    }

    pub fn is_open(&self, s: Subset) -> bool {
        self.opens.contains(&s)
    }

    /// Contains ∅ and the whole set and is closed under pairwise ∪ and ∩.
    pub fn check_axioms(&self) -> bool {
        let set: HashSet<Subset> = self.opens.iter().copied().collect();
        set.contains(&Subset::EMPTY)
            && set.contains(&Subset::full(self.n))
            && self.opens.iter().all(|&a| {
                self.opens
                    .iter()
                    .all(|&b| set.contains(&a.union(b)) && set.contains(&a.intersection(b)))
            })
    }
}

/// A soft subbase: any finite family of soft sets over one space.
#[derive(Debug, Clone)]
pub struct SoftSubbase {
    universe: Arc<Universe>,
    params: Arc<ParamSet>,
    members: Vec<Vec<Subset>>,
}

impl SoftSubbase {
    pub fn new(universe: Arc<Universe>, params: Arc<ParamSet>, members: &[SoftSet]) -> Result<Self> {
        for w in members {
            if **w.universe() != *universe {
                return Err(Error::UniverseMismatch);
            }
            if **w.params() != *params {
                return Err(Error::ParamMismatch);
            }
        }
        Ok(SoftSubbase { universe, params, members: members.iter().map(|w| w.slices().to_vec()).collect() })
    }

    pub(crate) fn from_slices(universe: Arc<Universe>, params: Arc<ParamSet>, members: Vec<Vec<Subset>>) -> Self {
        SoftSubbase { universe, params, members }
    }

    pub fn members(&self) -> Vec<SoftSet> {
        self.members
            .iter()
            .map(|m| SoftSet::from_parts(self.universe.clone(), self.params.clone(), m.clone()))
            .collect()
    }

    /// All finite intersections of members, the empty one being `X_ξ`.
    pub fn base(&self) -> Vec<Vec<Subset>> {
        let full = vec![self.universe.full(); self.params.len()];
        let mut seen: HashSet<Vec<Subset>> = HashSet::new();
        let mut base = vec![full.clone()];
        seen.insert(full);
        for g in &self.members {
            let fresh: Vec<Vec<Subset>> = base.iter().map(|b| meet(b, g)).filter(|b| !seen.contains(b)).collect();
            for b in fresh {
                if seen.insert(b.clone()) {
                    base.push(b);
                }
            }
        }
        base.sort_by(|a, b| canonical_cmp(a, b));
        base
    }
}

/// The topology generated by a subbase: `∅_ξ` together with all unions of
/// finite intersections of members.
pub fn generate_from_subbase(s: &SoftSubbase) -> Result<SoftTopology> {
    let base = s.base();
    let empty = vec![Subset::EMPTY; s.params.len()];
    let opens = union_closure(empty, &base)?;
    Ok(SoftTopology::from_trusted(s.universe.clone(), s.params.clone(), opens))
}

/// Maps the members of `a` onto `0..|a|`, preserving order.
pub(crate) fn compress(s: Subset, a: Subset) -> Subset {
    a.iter()
        .enumerate()
        .filter(|&(_, x)| s.contains(x))
        .map(|(i, _)| i)
        .collect()
}

/// Inverse of [`compress`].
pub(crate) fn expand(s: Subset, a: Subset) -> Subset {
    a.iter().enumerate().filter(|&(i, _)| s.contains(i)).map(|(_, x)| x).collect()
}

/// The soft subtopology `ζ_A = { W_A : W ∈ ζ }` on the universe `A`, whose
/// elements keep their labels and relative order.
pub fn subspace_topology(t: &SoftTopology, a: Subset) -> Result<SoftTopology> {
    if a.is_empty() {
        return Err(Error::Empty("subspace"));
    }
    if !a.is_subset(t.universe.full()) {
        return Err(Error::UnknownElement(format!("index in {a:?}")));
    }
    let u = t.universe.restrict(a)?;
    let opens = t
        .opens
        .iter()
        .map(|o| o.iter().map(|&s| compress(s, a)).collect::<Vec<_>>());
    Ok(SoftTopology::from_trusted(u, t.params.clone(), opens))
}

pub fn subspace_topology_named<S: AsRef<str>>(t: &SoftTopology, names: &[S]) -> Result<SoftTopology> {
    subspace_topology(t, t.universe.subset_of(names)?)
}

/// Slice `(e, f)` of the rectangle `W ×̃ W′`, indexed `i * n′ + j`.
pub(crate) fn rectangle_slice(a: Subset, b: Subset, n2: usize) -> Subset {
    Subset::from_bits(a.iter().fold(0u64, |acc, i| acc | b.bits() << (i * n2)))
}

pub(crate) fn rectangle(w: &[Subset], w2: &[Subset], n2: usize) -> Vec<Subset> {
    w.iter()
        .flat_map(|&a| w2.iter().map(move |&b| rectangle_slice(a, b, n2)))
        .collect()
}

/// The soft product space over `(X × X′, ξ × ξ′)`, generated by the base of
/// rectangles `W ×̃ W′`. Rectangles are closed under ⊓, so their union
/// closure is already a topology.
pub fn product_topology(t: &SoftTopology, t2: &SoftTopology) -> Result<SoftTopology> {
    let u = t.universe.product(&t2.universe)?;
    let p = t.params.product(&t2.params);
    let n2 = t2.universe.len();
    let mut base: Vec<Vec<Subset>> = t
        .opens
        .iter()
        .flat_map(|w| t2.opens.iter().map(move |w2| rectangle(w, w2, n2)))
        .collect();
    base.sort_by(|a, b| canonical_cmp(a, b));
    base.dedup();
    let empty = vec![Subset::EMPTY; p.len()];
    let opens = union_closure(empty, &base)?;
    Ok(SoftTopology::from_trusted(u, p, opens))
}

fn check_mapping(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology) -> Result<()> {
    if **m.src_universe() != *t.universe || **m.dst_universe() != *t2.universe {
        return Err(Error::UniverseMismatch);
    }
    if **m.src_params() != *t.params || **m.dst_params() != *t2.params {
        return Err(Error::ParamMismatch);
    }
    Ok(())
}

fn continuous_at(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology, x: usize) -> bool {
    m.image_le(t.minimal_open_slices(x), t2.minimal_open_slices(m.rho()[x]))
}

/// Hida soft continuity at the point `x`.
pub fn is_soft_continuous_at(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology, x: usize) -> Result<bool> {
    check_mapping(m, t, t2)?;
    if x >= t.universe.len() {
        return Err(Error::UnknownElement(format!("index {x}")));
    }
    Ok(continuous_at(m, t, t2, x))
}

/// Hida soft continuity: for every `x` and every open `W′ ∋̃ ρ(x)` some open
/// `W ∋̃ x` has `(φ,ρ)(W) ⊑ W′`. Because the condition is monotone in `W`,
/// it suffices to test `W = M_x` against `W′ = M′_{ρ(x)}`.
///
/// The witness is the first failing point together with the first open
/// neighbourhood of its image, in canonical order, that no `W` serves.
pub fn is_soft_continuous(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology) -> Result<Verdict<(usize, SoftSet)>> {
    check_mapping(m, t, t2)?;
    Ok(continuity_verdict(m, t, t2))
}

pub(crate) fn continuity_holds(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology) -> bool {
    (0..t.universe.len()).all(|x| continuous_at(m, t, t2, x))
}

fn continuity_verdict(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology) -> Verdict<(usize, SoftSet)> {
    for x in 0..t.universe.len() {
        if continuous_at(m, t, t2, x) {
            continue;
        }
        let mx = t.minimal_open_slices(x);
        let w2 = t2
            .neighborhood_indices(m.rho()[x])
            .find(|&i| !m.image_le(mx, &t2.opens[i]))
            .expect("M'_{ρ(x)} itself is a failing neighbourhood");
        return Verdict::Fails((x, t2.open(w2)));
    }
    Verdict::Holds
}

/// Whether every open of the target pulls back to an open of the source;
/// the witness is the first target open (canonical order) that does not.
pub fn inverse_images_all_open(m: &SoftMapping, t: &SoftTopology, t2: &SoftTopology) -> Result<Verdict<SoftSet>> {
    check_mapping(m, t, t2)?;
    let n = t.universe.len();
    for (i, w2) in t2.opens.iter().enumerate() {
        let pre: Vec<Subset> = m
            .phi()
            .iter()
            .map(|&d| w2[d].preimage(n, |x| m.rho()[x]))
            .collect();
        if !t.contains_slices(&pre) {
            return Ok(Verdict::Fails(t2.open(i)));
        }
    }
    Ok(Verdict::Holds)
}

/// Whether `W ⊑ V` for two opens given as slice vectors.
pub fn slices_subset(a: &[Subset], b: &[Subset]) -> bool {
    slices_le(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pspace() -> SoftTopology {
        let x = Universe::new(["1", "2", "3"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let u1 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1"][..]), ("e2", &["2"][..])]).unwrap();
        let u2 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1", "3"][..]), ("e2", &["2"][..])]).unwrap();
        SoftTopology::new(&[
            SoftSet::empty(x.clone(), p.clone()),
            SoftSet::absolute(x, p),
            u1,
            u2,
        ])
        .unwrap()
    }

    fn sierpinski() -> SoftTopology {
        let x = Universe::new(["a", "b"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        SoftTopology::from_absolute(x, p, &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)]).unwrap()
    }

    #[test]
    fn verify_reports_each_axiom() {
        let t = pspace();
        assert_eq!(verify_topology(&t.opens()).unwrap(), TopologyReport::Valid);
        let x = t.universe().clone();
        let p = t.params().clone();
        let fam = vec![SoftSet::empty(x.clone(), p.clone()), t.open(1)];
        assert_eq!(verify_topology(&fam).unwrap().failed_axiom(), Some(1));
        let a = SoftSet::make_absolute(x.clone(), p.clone(), Subset::singleton(0));
        let b = SoftSet::make_absolute(x.clone(), p.clone(), Subset::singleton(1));
        let fam = vec![SoftSet::empty(x.clone(), p.clone()), SoftSet::absolute(x.clone(), p.clone()), a.clone(), b.clone()];
        assert_eq!(verify_topology(&fam).unwrap(), TopologyReport::UnionNotClosed(vec![a, b]));
        assert_eq!(verify_topology(&[]), Err(Error::Empty("family")));
    }

    #[test]
    fn subbase_generation() {
        let t = pspace();
        let x = t.universe().clone();
        let p = t.params().clone();
        let empty = SoftSubbase::new(x.clone(), p.clone(), &[]).unwrap();
        assert_eq!(generate_from_subbase(&empty).unwrap(), SoftTopology::indiscrete(x.clone(), p.clone()));
        let sb = SoftSubbase::new(x.clone(), p.clone(), &[t.open(1), t.open(2)]).unwrap();
        assert_eq!(generate_from_subbase(&sb).unwrap(), t);
        let a = Subset::singleton(0);
        let sb = SoftSubbase::new(
            x.clone(),
            p.clone(),
            &[t.absolute_set(a), t.absolute_set(a.complement(3))],
        )
        .unwrap();
        assert_eq!(generate_from_subbase(&sb).unwrap().len(), 4);
    }

    #[test]
    fn parameter_topologies_of_pspace() {
        let t = pspace();
        let e1 = t.parameter_topology("e1").unwrap();
        assert_eq!(e1.opens(), &[Subset::EMPTY, Subset::singleton(0), Subset::from_bits(0b101), Subset::full(3)]);
        assert!(e1.check_axioms());
        let e2 = t.parameter_topology("e2").unwrap();
        assert_eq!(e2.opens(), &[Subset::EMPTY, Subset::singleton(1), Subset::full(3)]);
        assert!(t.parameter_topology("e9").is_err());
    }

    #[test]
    fn subspace_collapses_pspace_opens() {
        let t = pspace();
        let s = subspace_topology_named(&t, &["1", "2"]).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.universe().labels(), ["1", "2"]);
        assert!(s.contains_slices(&[Subset::singleton(0), Subset::singleton(1)]));
        assert_eq!(subspace_topology(&t, Subset::full(3)).unwrap(), t);
        assert_eq!(subspace_topology(&t, Subset::EMPTY), Err(Error::Empty("subspace")));
    }

    #[test]
    fn open_and_closed_membership() {
        let t = pspace();
        let u1 = t.open(1);
        assert!(t.is_soft_open(&u1).unwrap());
        assert!(!t.is_soft_closed(&u1).unwrap());
        let x = t.absolute_set(Subset::full(3));
        assert!(t.is_soft_open(&x).unwrap() && t.is_soft_closed(&x).unwrap());
    }

    #[test]
    fn neighbourhoods_and_minimal_cores() {
        let t = pspace();
        assert_eq!(t.soft_open_neighborhoods(0), vec![t.absolute_set(Subset::full(3))]);
        assert_eq!(t.minimal_core_neighborhood("1").unwrap(), Subset::full(3));
        let s = sierpinski();
        assert_eq!(s.minimal_core_neighborhood("a").unwrap(), Subset::singleton(0));
        assert_eq!(s.minimal_core_neighborhood("b").unwrap(), Subset::full(2));
    }

    #[test]
    fn continuity_witness_is_first_failing_neighbourhood() {
        let s = sierpinski();
        let ind = SoftTopology::indiscrete(s.universe().clone(), s.params().clone());
        let id = SoftMapping::identity(s.universe().clone(), s.params().clone());
        let v = is_soft_continuous(&id, &ind, &s).unwrap();
        assert_eq!(v, Verdict::Fails((0, s.absolute_set(Subset::singleton(0)))));
        assert!(is_soft_continuous(&id, &s, &ind).unwrap().holds());
        assert!(inverse_images_all_open(&id, &s, &ind).unwrap().holds());
        assert!(inverse_images_all_open(&id, &s, &s).unwrap().holds());
    }

    #[test]
    fn continuous_without_open_preimages() {
        let x = Universe::new(["v"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let h = SoftSet::from_named(x.clone(), p.clone(), &[("e2", &["v"][..])]).unwrap();
        let z = SoftTopology::indiscrete(x.clone(), p.clone());
        let z2 = SoftTopology::new(&[SoftSet::empty(x.clone(), p.clone()), SoftSet::absolute(x.clone(), p.clone()), h.clone()]).unwrap();
        let id = SoftMapping::identity(x, p);
        assert!(is_soft_continuous(&id, &z, &z2).unwrap().holds());
        assert_eq!(inverse_images_all_open(&id, &z, &z2).unwrap(), Verdict::Fails(h));
    }

    #[test]
    fn product_with_point_copies_the_factor() {
        let t = pspace();
        let one = SoftTopology::indiscrete(Universe::new(["0"]).unwrap(), ParamSet::new(["f"]).unwrap());
        let pr = product_topology(&t, &one).unwrap();
        assert_eq!(pr.len(), t.len());
        assert_eq!(pr.universe().labels(), ["(1,0)", "(2,0)", "(3,0)"]);
        assert_eq!(pr.open_slices(), t.open_slices());
    }

    #[test]
    fn product_of_split_topologies() {
        let x = Universe::new(["a", "b"]).unwrap();
        let p = ParamSet::numbered(1).unwrap();
        let a = Subset::singleton(0);
        let t = SoftTopology::from_absolute(x, p, &[Subset::EMPTY, a, a.complement(2), Subset::full(2)]).unwrap();
        let pr = product_topology(&t, &t).unwrap();
        assert_eq!(pr.len(), 16);
        assert!(verify_topology(&pr.opens()).unwrap().is_valid());
    }
}
