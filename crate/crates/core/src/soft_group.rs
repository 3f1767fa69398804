//! Soft topological groups: a finite group together with a soft topology on
//! its elements in which multiplication satisfies the neighbourhood
//! condition and inversion is soft continuous.
//!
//! Soft sets are multiplied slice by slice, `(U∗V)(e) = U(e)∗V(e)`. The
//! product is monotone in both arguments, so every "there exist
//! neighbourhoods `U ∋̃ a`, `V ∋̃ b`" reduces to the minimal opens `M_a`,
//! `M_b`.

use std::fmt;
use std::sync::Arc;

use crate::connectivity::{is_soft_connected, is_soft_connected_subset, is_soft_path, is_soft_path_connected, StepPath};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::soft::{slices_le, ParamSet, SoftMapping, SoftSet};
use crate::subset::Subset;
use crate::topology::{is_soft_continuous, product_topology, subspace_topology, SoftTopology};
use crate::verdict::Verdict;

fn check_group_space(g: &FiniteGroup, t: &SoftTopology) -> Result<()> {
    if **t.universe() != **g.elements() {
        return Err(Error::UniverseMismatch);
    }
    Ok(())
}

/// `U ∗ V`, slice by slice.
pub fn softset_product(u: &SoftSet, v: &SoftSet, g: &FiniteGroup) -> Result<SoftSet> {
    if **u.universe() != **g.elements() || **v.universe() != **g.elements() {
        return Err(Error::UniverseMismatch);
    }
    if u.params() != v.params() {
        return Err(Error::ParamMismatch);
    }
    Ok(SoftSet::from_parts(u.universe().clone(), u.params().clone(), slice_product(g, u.slices(), v.slices())))
}

/// `V⁻¹`, slice by slice.
pub fn softset_inverse(v: &SoftSet, g: &FiniteGroup) -> Result<SoftSet> {
    if **v.universe() != **g.elements() {
        return Err(Error::UniverseMismatch);
    }
    let slices = v.slices().iter().map(|&s| g.set_inverse(s)).collect();
    Ok(SoftSet::from_parts(v.universe().clone(), v.params().clone(), slices))
}

pub(crate) fn slice_product(g: &FiniteGroup, u: &[Subset], v: &[Subset]) -> Vec<Subset> {
    u.iter().zip(v).map(|(&a, &b)| g.set_product(a, b)).collect()
}

/// Why a candidate fails to be a soft topological group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupWitness {
    /// No neighbourhoods `U ∋̃ a`, `V ∋̃ b` have `U∗V ⊑ open`, where
    /// `open ∋̃ a∗b`.
    Multiplication { a: usize, b: usize, open: SoftSet },
    /// Inversion is not soft continuous at `a`: no neighbourhood of `a` is
    /// carried into `open ∋̃ a⁻¹`.
    Inversion { a: usize, open: SoftSet },
    /// No neighbourhoods `U ∋̃ a`, `V ∋̃ b` have `U∗V⁻¹ ⊑ open`, where
    /// `open ∋̃ a∗b⁻¹`.
    Division { a: usize, b: usize, open: SoftSet },
}

impl GroupWitness {
    pub fn describe(&self, g: &FiniteGroup) -> String {
        match self {
            GroupWitness::Multiplication { a, b, open } => {
                format!("multiplication at ({}, {}) fails for {open}", g.label(*a), g.label(*b))
            }
            GroupWitness::Inversion { a, open } => format!("inversion at {} fails for {open}", g.label(*a)),
            GroupWitness::Division { a, b, open } => {
                format!("division at ({}, {}) fails for {open}", g.label(*a), g.label(*b))
            }
        }
    }
}

fn first_failing_open(t: &SoftTopology, x: usize, cand: &[Subset]) -> SoftSet {
    let i = t
        .open_slices()
        .iter()
        .position(|o| o.iter().all(|s| s.contains(x)) && !slices_le(cand, o))
        .expect("the minimal open itself fails");
    t.open(i)
}

fn multiplication_failure(g: &FiniteGroup, t: &SoftTopology) -> Option<GroupWitness> {
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            let prod = slice_product(g, t.minimal_open_slices(a), t.minimal_open_slices(b));
            if !slices_le(&prod, t.minimal_open_slices(ab)) {
                return Some(GroupWitness::Multiplication { a, b, open: first_failing_open(t, ab, &prod) });
            }
        }
    }
    None
}

fn inversion_map(g: &FiniteGroup, t: &SoftTopology) -> SoftMapping {
    SoftMapping::with_identity_params(t.universe().clone(), t.universe().clone(), t.params().clone(), (0..g.order()).map(|a| g.inv(a)).collect())
        .expect("inversion is total")
}

/// Both group conditions; the witness reports the first failing condition,
/// then the first element pair, then the first open in canonical order.
pub fn verify_soft_topological_group(g: &FiniteGroup, t: &SoftTopology) -> Result<Verdict<GroupWitness>> {
    check_group_space(g, t)?;
    if let Some(w) = multiplication_failure(g, t) {
        return Ok(Verdict::Fails(w));
    }
    let inv = inversion_map(g, t);
    Ok(is_soft_continuous(&inv, t, t)?.map(|(a, open)| GroupWitness::Inversion { a, open }))
}

/// The single division condition `U∗V⁻¹ ⊑ W` for every `W ∋̃ a∗b⁻¹`.
pub fn verify_via_division(g: &FiniteGroup, t: &SoftTopology) -> Result<Verdict<GroupWitness>> {
    check_group_space(g, t)?;
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            let target = g.mul(a, g.inv(b));
            let vinv: Vec<Subset> = t.minimal_open_slices(b).iter().map(|&s| g.set_inverse(s)).collect();
            let q = slice_product(g, t.minimal_open_slices(a), &vinv);
            if !slices_le(&q, t.minimal_open_slices(target)) {
                return Ok(Verdict::Fails(GroupWitness::Division { a, b, open: first_failing_open(t, target, &q) }));
            }
        }
    }
    Ok(Verdict::Holds)
}

/// A group with a soft topology that passed [`verify_soft_topological_group`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftTopGroup {
    group: FiniteGroup,
    topology: SoftTopology,
}

impl SoftTopGroup {
    pub fn new(group: FiniteGroup, topology: SoftTopology) -> Result<Self> {
        match verify_soft_topological_group(&group, &topology)? {
            Verdict::Holds => Ok(SoftTopGroup { group, topology }),
            Verdict::Fails(w) => Err(Error::NotSoftTopGroup(w.describe(&group))),
        }
    }

    pub fn indiscrete(group: FiniteGroup, params: Arc<ParamSet>) -> Self {
        let t = SoftTopology::indiscrete(group.elements().clone(), params);
        SoftTopGroup { group, topology: t }
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn topology(&self) -> &SoftTopology {
        &self.topology
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        self.topology.params()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

impl fmt::Display for SoftTopGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "group {:?} over {:?} with {} opens",
            self.group.elements().labels(),
            self.params().labels(),
            self.topology.len()
        )
    }
}

/// The neighbourhood condition on multiplication, searched literally over
/// pairs of open neighbourhoods (no reduction to minimal opens).
pub fn multiplication_soft_continuous(stg: &SoftTopGroup) -> Verdict<(usize, usize, SoftSet)> {
    let g = &stg.group;
    let t = &stg.topology;
    let n = g.order();
    let nbhd: Vec<Vec<&Vec<Subset>>> = (0..n)
        .map(|x| t.open_slices().iter().filter(|o| o.iter().all(|s| s.contains(x))).collect())
        .collect();
    for a in 0..n {
        for b in 0..n {
            let ab = g.mul(a, b);
            for w in &nbhd[ab] {
                let found = nbhd[a]
                    .iter()
                    .any(|u| nbhd[b].iter().any(|v| slices_le(&slice_product(g, u, v), w)));
                if !found {
                    return Verdict::Fails((a, b, t.soft_set((*w).clone())));
                }
            }
        }
    }
    Verdict::Holds
}

/// `(H, ζ_H)_ξ` for a subgroup `H`, re-verified.
pub fn subgroup_soft_top_group(stg: &SoftTopGroup, h: Subset) -> Result<SoftTopGroup> {
    let sub = stg.group.subgroup(h)?;
    let t = subspace_topology(&stg.topology, h)?;
    SoftTopGroup::new(sub, t)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenSubgroup {
    pub subgroup: Subset,
    /// Whether `H_ξ` is also soft closed.
    pub closed: bool,
}

/// Subgroups `H` with `H_ξ` soft open, each with the closedness of `H_ξ`.
pub fn open_subgroups(stg: &SoftTopGroup) -> Vec<OpenSubgroup> {
    let n = stg.order();
    stg.group
        .subgroups()
        .into_iter()
        .filter(|&h| stg.topology.is_absolute_open(h))
        .map(|h| OpenSubgroup { subgroup: h, closed: stg.topology.is_absolute_open(h.complement(n)) })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedSubgroupReport {
    pub connected: bool,
    /// Proper subgroups with open absolute soft set, found although the
    /// group is soft connected.
    pub violations: Vec<Subset>,
}

impl ConnectedSubgroupReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A soft connected group has no proper subgroup `H` with `H_ξ` open.
/// `H = G` is excluded: `G_ξ = X_ξ` is always open.
pub fn connected_group_open_subgroup_check(stg: &SoftTopGroup) -> ConnectedSubgroupReport {
    let connected = is_soft_connected(&stg.topology).connected;
    let full = stg.group.elements().full();
    let violations = if connected {
        open_subgroups(stg)
            .into_iter()
            .map(|o| o.subgroup)
            .filter(|&h| h != full)
            .collect()
    } else {
        Vec::new()
    };
    ConnectedSubgroupReport { connected, violations }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub fn translation(stg: &SoftTopGroup, h: usize, side: Side) -> SoftMapping {
    let g = &stg.group;
    let rho = (0..g.order())
        .map(|x| match side {
            Side::Left => g.mul(h, x),
            Side::Right => g.mul(x, h),
        })
        .collect();
    let u = stg.topology.universe().clone();
    SoftMapping::with_identity_params(u.clone(), u, stg.params().clone(), rho).expect("translation is total")
}

/// Translation by `h` and by `h⁻¹` are both soft continuous.
pub fn translation_check(stg: &SoftTopGroup, h: usize, side: Side) -> Result<bool> {
    if h >= stg.order() {
        return Err(Error::UnknownElement(format!("index {h}")));
    }
    let t = &stg.topology;
    let fwd = is_soft_continuous(&translation(stg, h, side), t, t)?.holds();
    let back = is_soft_continuous(&translation(stg, stg.group.inv(h), side), t, t)?.holds();
    Ok(fwd && back)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetProductReport {
    pub product: Subset,
    pub factors_connected: (bool, bool),
    pub product_connected: bool,
    pub factors_path_connected: (bool, bool),
    pub product_path_connected: bool,
}

impl SubsetProductReport {
    /// Connected factors give a connected product, and likewise for paths.
    pub fn holds(&self) -> bool {
        let c = !(self.factors_connected.0 && self.factors_connected.1) || self.product_connected;
        let p = !(self.factors_path_connected.0 && self.factors_path_connected.1) || self.product_path_connected;
        c && p
    }
}

fn subset_path_connected(t: &SoftTopology, a: Subset) -> Result<bool> {
    Ok(is_soft_path_connected(&subspace_topology(t, a)?).holds())
}

/// Connectedness of `H`, `K` and `H∗K` as soft subspaces.
pub fn subset_product_connectivity(stg: &SoftTopGroup, h: Subset, k: Subset) -> Result<SubsetProductReport> {
    if h.is_empty() || k.is_empty() {
        return Err(Error::Empty("subset"));
    }
    let t = &stg.topology;
    let product = stg.group.set_product(h, k);
    Ok(SubsetProductReport {
        product,
        factors_connected: (is_soft_connected_subset(t, h)?.connected, is_soft_connected_subset(t, k)?.connected),
        product_connected: is_soft_connected_subset(t, product)?.connected,
        factors_path_connected: (subset_path_connected(t, h)?, subset_path_connected(t, k)?),
        product_path_connected: subset_path_connected(t, product)?,
    })
}

/// `t ↦ p(t) ∗ q(t)` on the common refinement of both breakpoint lists.
/// Fails if either input is not a soft path, or if the product is not.
pub fn pointwise_product_path(stg: &SoftTopGroup, p: &StepPath, q: &StepPath) -> Result<StepPath> {
    let t = &stg.topology;
    for (name, path) in [("first", p), ("second", q)] {
        if let Verdict::Fails(f) = is_soft_path(path, t)? {
            return Err(Error::NotContinuous(format!("{name} input is not a soft path: {f}")));
        }
    }
    let p2 = p.refine(q.breakpoints());
    let q2 = q.refine(p.breakpoints());
    let g = &stg.group;
    let pieces = p2.pieces().iter().zip(q2.pieces()).map(|(&a, &b)| g.mul(a, b)).collect();
    let points = p2.points().iter().zip(q2.points()).map(|(&a, &b)| g.mul(a, b)).collect();
    let r = StepPath::new(p2.breakpoints().to_vec(), pieces, points)?;
    if let Verdict::Fails(f) = is_soft_path(&r, t)? {
        return Err(Error::NotContinuous(format!("pointwise product is not a soft path: {f}")));
    }
    Ok(r)
}

/// `x ↦ ρ(x) ∗ ρ′(x)`.
pub fn pointwise_product_map(g: &FiniteGroup, rho: &[usize], rho2: &[usize]) -> Vec<usize> {
    rho.iter().zip(rho2).map(|(&a, &b)| g.mul(a, b)).collect()
}

/// Direct product group with the soft product topology over `ξ₁ × ξ₂`.
pub fn product_soft_top_group(a: &SoftTopGroup, b: &SoftTopGroup) -> Result<SoftTopGroup> {
    let g = FiniteGroup::direct_product(&a.group, &b.group)?;
    let t = product_topology(&a.topology, &b.topology)?;
    SoftTopGroup::new(g, t)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdentityContinuityReport {
    pub at_identity: bool,
    pub everywhere: bool,
}

impl IdentityContinuityReport {
    pub fn agree(&self) -> bool {
        self.at_identity == self.everywhere
    }
}

/// For a homomorphism `ρ`, soft continuity of `(𝕀_ξ, ρ)` at the identity
/// against soft continuity everywhere.
pub fn continuity_at_identity_equivalence(a: &SoftTopGroup, b: &SoftTopGroup, rho: &[usize]) -> Result<IdentityContinuityReport> {
    if a.params() != b.params() {
        return Err(Error::ParamMismatch);
    }
    if let Some((x, y)) = a.group.homomorphism_failure(&b.group, rho) {
        return Err(Error::NotHomomorphism(if x == usize::MAX {
            "point map is not total".into()
        } else {
            format!("at ({}, {})", a.group.label(x), a.group.label(y))
        }));
    }
    let m = SoftMapping::with_identity_params(
        a.topology.universe().clone(),
        b.topology.universe().clone(),
        a.params().clone(),
        rho.to_vec(),
    )?;
    let at_identity = crate::topology::is_soft_continuous_at(&m, &a.topology, &b.topology, a.group.identity())?;
    let everywhere = is_soft_continuous(&m, &a.topology, &b.topology)?.holds();
    Ok(IdentityContinuityReport { at_identity, everywhere })
}

/// Small verified soft topological groups used as fixtures throughout.
pub mod fixtures {
    use super::*;
    use crate::soft::Universe;

    fn params(m: usize) -> Arc<ParamSet> {
        ParamSet::numbered(m).unwrap()
    }

    fn absolute(g: FiniteGroup, m: usize, opens: &[u64]) -> SoftTopGroup {
        let subsets: Vec<Subset> = opens.iter().map(|&b| Subset::from_bits(b)).collect();
        let t = SoftTopology::from_absolute(g.elements().clone(), params(m), &subsets).unwrap();
        SoftTopGroup::new(g, t).unwrap()
    }

    pub fn z2_indiscrete(m: usize) -> SoftTopGroup {
        SoftTopGroup::indiscrete(FiniteGroup::cyclic(2).unwrap(), params(m))
    }

    /// ℤ₂ with all four absolute soft sets open.
    pub fn z2_all_absolute(m: usize) -> SoftTopGroup {
        absolute(FiniteGroup::cyclic(2).unwrap(), m, &[0b00, 0b01, 0b10, 0b11])
    }

    pub fn z3_all_absolute(m: usize) -> SoftTopGroup {
        absolute(FiniteGroup::cyclic(3).unwrap(), m, &(0..8).collect::<Vec<_>>())
    }

    /// ℤ₃ with one non-absolute open whose core is empty.
    pub fn z3_ragged() -> SoftTopGroup {
        let g = FiniteGroup::cyclic(3).unwrap();
        let p = params(2);
        let w = SoftSet::new(g.elements().clone(), p.clone(), vec![Subset::singleton(0), Subset::singleton(1)]).unwrap();
        let t = SoftTopology::new(&[
            SoftSet::empty(g.elements().clone(), p.clone()),
            SoftSet::absolute(g.elements().clone(), p),
            w,
        ])
        .unwrap();
        SoftTopGroup::new(g, t).unwrap()
    }

    pub fn z4_indiscrete(m: usize) -> SoftTopGroup {
        SoftTopGroup::indiscrete(FiniteGroup::cyclic(4).unwrap(), params(m))
    }

    /// ℤ₄ with the cosets of `{0, 2}` open.
    pub fn z4_coset(m: usize) -> SoftTopGroup {
        absolute(FiniteGroup::cyclic(4).unwrap(), m, &[0b0000, 0b0101, 0b1010, 0b1111])
    }

    /// Klein four-group with the cosets of `{e, a}` open.
    pub fn klein_coset(m: usize) -> SoftTopGroup {
        absolute(FiniteGroup::klein_four(), m, &[0b0000, 0b0011, 0b1100, 0b1111])
    }

    pub fn klein_indiscrete(m: usize) -> SoftTopGroup {
        SoftTopGroup::indiscrete(FiniteGroup::klein_four(), params(m))
    }

    pub fn trivial(m: usize) -> SoftTopGroup {
        SoftTopGroup::indiscrete(FiniteGroup::trivial(), params(m))
    }

    /// The zoo over ℤ₃, ℤ₄ and the Klein four-group.
    pub fn zoo() -> Vec<(&'static str, SoftTopGroup)> {
        vec![
            ("z3-indiscrete", SoftTopGroup::indiscrete(FiniteGroup::cyclic(3).unwrap(), params(2))),
            ("z3-discrete", z3_all_absolute(1)),
            ("z3-ragged", z3_ragged()),
            ("z4-indiscrete", z4_indiscrete(2)),
            ("z4-coset", z4_coset(1)),
            ("z4-coset-2", z4_coset(2)),
            ("klein-coset", klein_coset(2)),
            ("klein-indiscrete", klein_indiscrete(1)),
        ]
    }

    /// Sierpiński-style candidate on ℤ₂ that fails the group conditions.
    pub fn z2_sierpinski_topology(m: usize) -> SoftTopology {
        let u = Universe::range(2).unwrap();
        SoftTopology::from_absolute(u, params(m), &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn verification_cases() {
        for m in 1..=2 {
            let z = z2_indiscrete(m);
            assert!(verify_soft_topological_group(z.group(), z.topology()).unwrap().holds());
            let z = z2_all_absolute(m);
            assert!(verify_via_division(z.group(), z.topology()).unwrap().holds());
        }
        let g = FiniteGroup::cyclic(2).unwrap();
        let t = z2_sierpinski_topology(2);
        let w = verify_soft_topological_group(&g, &t).unwrap();
        assert_eq!(
            w,
            Verdict::Fails(GroupWitness::Multiplication { a: 1, b: 1, open: t.absolute_set(Subset::singleton(0)) })
        );
        assert!(!verify_via_division(&g, &t).unwrap().holds());
        assert!(SoftTopGroup::new(g, t).is_err());
    }

    #[test]
    fn slice_products() {
        let z = z2_all_absolute(1);
        let t = z.topology();
        let p = softset_product(&t.absolute_set(Subset::full(2)), &t.absolute_set(Subset::singleton(1)), z.group()).unwrap();
        assert_eq!(p, t.absolute_set(Subset::full(2)));
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let u = crate::soft::Universe::range(3).unwrap();
        let v = SoftSet::make_absolute(u, ParamSet::numbered(1).unwrap(), Subset::singleton(1));
        assert_eq!(softset_inverse(&v, &z3).unwrap().slice(0), Subset::singleton(2));
    }

    #[test]
    fn multiplication_condition_on_fixtures() {
        for (_, z) in zoo() {
            assert!(multiplication_soft_continuous(&z).holds());
        }
    }

    #[test]
    fn subgroups_and_translations() {
        let z = z4_coset(1);
        let h = subgroup_soft_top_group(&z, Subset::from_bits(0b0101)).unwrap();
        assert_eq!(h.topology().len(), 2);
        let opens = open_subgroups(&z);
        assert_eq!(opens.iter().map(|o| (o.subgroup.bits(), o.closed)).collect::<Vec<_>>(), vec![(0b0101, true), (0b1111, true)]);
        assert!(translation_check(&z, 1, Side::Left).unwrap());
        let r = connected_group_open_subgroup_check(&z);
        assert!(!r.connected && r.holds());
        let r = connected_group_open_subgroup_check(&z4_indiscrete(1));
        assert!(r.connected && r.holds());
        let z2 = z2_all_absolute(1);
        assert_eq!(open_subgroups(&z2)[0], OpenSubgroup { subgroup: Subset::singleton(0), closed: true });
    }

    #[test]
    fn subset_products() {
        let z = z4_indiscrete(1);
        let r = subset_product_connectivity(&z, Subset::from_bits(0b0011), Subset::from_bits(0b0101)).unwrap();
        assert_eq!(r.product, Subset::full(4));
        assert!(r.product_connected && r.holds());
        let c = z4_coset(1);
        let r = subset_product_connectivity(&c, Subset::from_bits(0b0101), Subset::from_bits(0b0101)).unwrap();
        assert_eq!(r.product, Subset::from_bits(0b0101));
        assert!(r.product_connected);
    }

    #[test]
    fn product_paths() {
        use crate::real_line::{int, rat};
        let z = z2_indiscrete(1);
        let p = StepPath::left_closed(vec![int(0), rat(1, 2), int(1)], vec![0, 1]).unwrap();
        let q = StepPath::constant(1);
        let r = pointwise_product_path(&z, &p, &q).unwrap();
        assert_eq!(r, StepPath::left_closed(vec![int(0), rat(1, 2), int(1)], vec![1, 0]).unwrap());
        let z4 = z4_indiscrete(1);
        let r = pointwise_product_path(&z4, &StepPath::constant(1), &StepPath::constant(3)).unwrap();
        assert_eq!(r, StepPath::constant(0));
    }

    #[test]
    fn product_groups() {
        let p = product_soft_top_group(&z2_all_absolute(1), &trivial(1)).unwrap();
        assert_eq!(p.order(), 2);
        assert_eq!(p.topology().len(), 4);
        let p = product_soft_top_group(&z2_all_absolute(2), &z2_indiscrete(1)).unwrap();
        assert_eq!(p.order(), 4);
    }

    #[test]
    fn identity_continuity() {
        let z = z4_coset(1);
        let r = continuity_at_identity_equivalence(&z, &z, &[0, 1, 2, 3]).unwrap();
        assert!(r.at_identity && r.everywhere);
        let src = z2_all_absolute(1);
        let r = continuity_at_identity_equivalence(&src, &z, &[0, 2]).unwrap();
        assert!(r.agree());
        let triv = trivial(1);
        assert!(continuity_at_identity_equivalence(&z, &triv, &[0; 4]).unwrap().everywhere);
        assert!(matches!(continuity_at_identity_equivalence(&z, &z, &[1, 2, 3, 0]), Err(Error::NotHomomorphism(_))));
    }
}
