//! Soft sets over finite universes and finite parameter sets, and soft
//! mappings between them.
//!
//! A soft set assigns a subset of the universe (a *slice*) to every
//! parameter. Slices are stored as [`Subset`] bitmasks in parameter order,
//! so equality and hashing are structural.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_UNIVERSE};

fn check_labels(labels: &[String], what: &'static str) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::Empty(what));
    }
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn same<T: PartialEq>(a: &Arc<T>, b: &Arc<T>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// The initial universe: an ordered list of distinct element names.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Universe {
    labels: Vec<String>,
}

impl Universe {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels, "universe")?;
        if labels.len() > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(labels.len()));
        }
        Ok(Arc::new(Universe { labels }))
    }

    /// Universe with elements labelled `0`, `1`, ... `n-1`.
    pub fn range(n: usize) -> Result<Arc<Self>> {
        Universe::new((0..n).map(|i| i.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownElement(label.to_string()))
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn subset_of<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset> {
        names
            .iter()
            .map(|n| self.index_of(n.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(|v| v.into_iter().collect())
    }

    pub fn names(&self, s: Subset) -> Vec<&str> {
        s.iter().map(|i| self.label(i)).collect()
    }

    pub fn format_subset(&self, s: Subset) -> String {
        format!("{{{}}}", self.names(s).join(","))
    }

    /// The sub-universe on `a`, keeping element order.
    pub fn restrict(&self, a: Subset) -> Result<Arc<Universe>> {
        Universe::new(a.iter().map(|i| self.labels[i].clone()))
    }

    /// Universe of pairs `(x,y)`, indexed `i * other.len() + j`.
    pub fn product(&self, other: &Universe) -> Result<Arc<Universe>> {
        let n = self.len() * other.len();
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        Universe::new(
            self.labels
                .iter()
                .flat_map(|a| other.labels.iter().map(move |b| format!("({a},{b})"))),
        )
    }
}

/// A finite parameter set ξ.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParamSet {
    labels: Vec<String>,
}

impl ParamSet {
    pub fn new<I, S>(labels: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        check_labels(&labels, "parameter set")?;
        Ok(Arc::new(ParamSet { labels }))
    }

    /// Parameters `e1`, ..., `en`.
    pub fn numbered(n: usize) -> Result<Arc<Self>> {
        ParamSet::new((1..=n).map(|i| format!("e{i}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.position(label)
            .ok_or_else(|| Error::UnknownParameter(label.to_string()))
    }

    pub fn position(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn is_subset(&self, other: &ParamSet) -> bool {
        self.labels.iter().all(|l| other.position(l).is_some())
    }

    /// Parameters of pairs `(e,f)`, indexed `i * other.len() + j`.
    pub fn product(&self, other: &ParamSet) -> Arc<ParamSet> {
        Arc::new(ParamSet {
            labels: self
                .labels
                .iter()
                .flat_map(|a| other.labels.iter().map(move |b| format!("({a},{b})")))
                .collect(),
        })
    }
}

/// A soft set `W_ξ`: one slice of the universe per parameter.
#[derive(Clone)]
pub struct SoftSet {
    universe: Arc<Universe>,
    params: Arc<ParamSet>,
    slices: Vec<Subset>,
}

impl SoftSet {
    pub fn new(universe: Arc<Universe>, params: Arc<ParamSet>, slices: Vec<Subset>) -> Result<Self> {
        if slices.len() != params.len() {
            return Err(Error::Schema(format!(
                "expected {} slices, got {}",
                params.len(),
                slices.len()
            )));
        }
        let full = universe.full();
        if let Some(bad) = slices.iter().find(|s| !s.is_subset(full)) {
            return Err(Error::UnknownElement(format!("index in {bad:?}")));
        }
        Ok(SoftSet { universe, params, slices })
    }

    pub(crate) fn from_parts(universe: Arc<Universe>, params: Arc<ParamSet>, slices: Vec<Subset>) -> Self {
        debug_assert_eq!(slices.len(), params.len());
        SoftSet { universe, params, slices }
    }

    /// `∅_ξ`
    pub fn empty(universe: Arc<Universe>, params: Arc<ParamSet>) -> Self {
        let n = params.len();
        SoftSet::from_parts(universe, params, vec![Subset::EMPTY; n])
    }

    /// `X_ξ`
    pub fn absolute(universe: Arc<Universe>, params: Arc<ParamSet>) -> Self {
        let full = universe.full();
        SoftSet::make_absolute(universe, params, full)
    }

    /// The absolute soft subset `A_ξ` whose every slice is `a`.
    pub fn make_absolute(universe: Arc<Universe>, params: Arc<ParamSet>, a: Subset) -> Self {
        debug_assert!(a.is_subset(universe.full()));
        let n = params.len();
        SoftSet::from_parts(universe, params, vec![a; n])
    }

    pub fn make_absolute_named<S: AsRef<str>>(
        universe: Arc<Universe>,
        params: Arc<ParamSet>,
        names: &[S],
    ) -> Result<Self> {
        let a = universe.subset_of(names)?;
        Ok(SoftSet::make_absolute(universe, params, a))
    }

    /// Builds a soft set from `(parameter, elements)` pairs. Parameters that
    /// are not listed get an empty slice.
    pub fn from_named<P, S>(
        universe: Arc<Universe>,
        params: Arc<ParamSet>,
        entries: &[(P, &[S])],
    ) -> Result<Self>
    where
        P: AsRef<str>,
        S: AsRef<str>,
    {
        let mut slices = vec![Subset::EMPTY; params.len()];
        for (p, elems) in entries {
            let e = params.index_of(p.as_ref())?;
            slices[e] = slices[e].union(universe.subset_of(elems)?);
        }
        Ok(SoftSet::from_parts(universe, params, slices))
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    pub fn slices(&self) -> &[Subset] {
        &self.slices
    }

    pub fn into_slices(self) -> Vec<Subset> {
        self.slices
    }

    pub fn slice(&self, e: usize) -> Subset {
        self.slices[e]
    }

    pub fn slice_named(&self, param: &str) -> Result<Subset> {
        Ok(self.slices[self.params.index_of(param)?])
    }

    /// Soft elements: the intersection of all slices.
    pub fn core(&self) -> Subset {
        core_of(&self.slices, self.universe.full())
    }

    pub fn is_soft_empty(&self) -> bool {
        self.slices.iter().all(|s| s.is_empty())
    }

    /// `Some(A)` when this is the absolute soft subset `A_ξ`.
    pub fn as_absolute(&self) -> Option<Subset> {
        let first = self.slices[0];
        self.slices.iter().all(|&s| s == first).then_some(first)
    }

    pub fn total_cardinality(&self) -> usize {
        self.slices.iter().map(|s| s.len()).sum()
    }

    /// `x ∈̃ W`: `x` lies in every slice.
    pub fn has_soft_element(&self, x: usize) -> bool {
        self.slices.iter().all(|s| s.contains(x))
    }

    pub(crate) fn same_space(&self, other: &SoftSet) -> bool {
        same(&self.universe, &other.universe) && same(&self.params, &other.params)
    }
}

pub(crate) fn core_of(slices: &[Subset], full: Subset) -> Subset {
    slices.iter().fold(full, |acc, &s| acc.intersection(s))
}

pub(crate) fn slices_le(a: &[Subset], b: &[Subset]) -> bool {
    a.iter().zip(b).all(|(x, y)| x.is_subset(*y))
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.slices == other.slices && self.same_space(other)
    }
}

impl Eq for SoftSet {}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.slices.hash(state);
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (e, s) in self.slices.iter().enumerate() {
            if e > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{})", self.params.label(e), self.universe.format_subset(*s))?;
        }
        f.write_str("}")
    }
}

fn check_universe(u: &SoftSet, v: &SoftSet) -> Result<()> {
    if same(&u.universe, &v.universe) {
        Ok(())
    } else {
        Err(Error::UniverseMismatch)
    }
}

/// Soft union over `ξ ∪ ξ′`: shared parameters take `U(e) ∪ V(e)`, the
/// others keep the slice of the operand that owns them.
pub fn soft_union(u: &SoftSet, v: &SoftSet) -> Result<SoftSet> {
    check_universe(u, v)?;
    if same(&u.params, &v.params) {
        let slices = u.slices.iter().zip(&v.slices).map(|(a, b)| a.union(*b)).collect();
        return Ok(SoftSet::from_parts(u.universe.clone(), u.params.clone(), slices));
    }
    let mut labels = u.params.labels.clone();
    let mut slices = u.slices.clone();
    for (j, l) in v.params.labels.iter().enumerate() {
        match u.params.position(l) {
            Some(i) => slices[i] = slices[i].union(v.slices[j]),
            None => {
                labels.push(l.clone());
                slices.push(v.slices[j]);
            }
        }
    }
    Ok(SoftSet::from_parts(u.universe.clone(), ParamSet::new(labels)?, slices))
}

/// Soft intersection over `ξ ∩ ξ′`.
pub fn soft_intersection(u: &SoftSet, v: &SoftSet) -> Result<SoftSet> {
    check_universe(u, v)?;
    if same(&u.params, &v.params) {
        let slices = u
            .slices
            .iter()
            .zip(&v.slices)
            .map(|(a, b)| a.intersection(*b))
            .collect();
        return Ok(SoftSet::from_parts(u.universe.clone(), u.params.clone(), slices));
    }
    let mut labels = Vec::new();
    let mut slices = Vec::new();
    for (i, l) in u.params.labels.iter().enumerate() {
        if let Some(j) = v.params.position(l) {
            labels.push(l.clone());
            slices.push(u.slices[i].intersection(v.slices[j]));
        }
    }
    if labels.is_empty() {
        return Err(Error::DisjointParams);
    }
    Ok(SoftSet::from_parts(u.universe.clone(), ParamSet::new(labels)?, slices))
}

pub fn soft_complement(u: &SoftSet) -> SoftSet {
    let n = u.universe.len();
    let slices = u.slices.iter().map(|s| s.complement(n)).collect();
    SoftSet::from_parts(u.universe.clone(), u.params.clone(), slices)
}

/// `U ⊑ V`: `ξ ⊆ ξ′` and `U(e) ⊆ V(e)` on every parameter of `U`.
pub fn is_soft_subset(u: &SoftSet, v: &SoftSet) -> Result<bool> {
    check_universe(u, v)?;
    if same(&u.params, &v.params) {
        return Ok(slices_le(&u.slices, &v.slices));
    }
    Ok(u.params.labels.iter().enumerate().all(|(i, l)| {
        v.params
            .position(l)
            .is_some_and(|j| u.slices[i].is_subset(v.slices[j]))
    }))
}

/// Soft equality: mutual soft inclusion.
pub fn soft_equal(u: &SoftSet, v: &SoftSet) -> Result<bool> {
    Ok(is_soft_subset(u, v)? && is_soft_subset(v, u)?)
}

pub fn is_soft_element(x: &str, u: &SoftSet) -> Result<bool> {
    let i = u.universe.index_of(x)?;
    Ok(u.has_soft_element(i))
}

/// A soft mapping `(φ, ρ)`: a parameter map and a point map, both total.
#[derive(Clone, PartialEq, Eq)]
pub struct SoftMapping {
    src_universe: Arc<Universe>,
    src_params: Arc<ParamSet>,
    dst_universe: Arc<Universe>,
    dst_params: Arc<ParamSet>,
    phi: Vec<usize>,
    rho: Vec<usize>,
}

impl SoftMapping {
    pub fn new(
        src_universe: Arc<Universe>,
        src_params: Arc<ParamSet>,
        dst_universe: Arc<Universe>,
        dst_params: Arc<ParamSet>,
        phi: Vec<usize>,
        rho: Vec<usize>,
    ) -> Result<Self> {
        if phi.len() != src_params.len() || phi.iter().any(|&d| d >= dst_params.len()) {
            return Err(Error::InvalidMapping("parameter map is not total".into()));
        }
        if rho.len() != src_universe.len() || rho.iter().any(|&y| y >= dst_universe.len()) {
            return Err(Error::InvalidMapping("point map is not total".into()));
        }
        Ok(SoftMapping { src_universe, src_params, dst_universe, dst_params, phi, rho })
    }

    /// `(𝕀_ξ, ρ)` between two universes sharing the parameter set.
    pub fn with_identity_params(
        src_universe: Arc<Universe>,
        dst_universe: Arc<Universe>,
        params: Arc<ParamSet>,
        rho: Vec<usize>,
    ) -> Result<Self> {
        let phi = (0..params.len()).collect();
        SoftMapping::new(src_universe, params.clone(), dst_universe, params, phi, rho)
    }

    pub fn identity(universe: Arc<Universe>, params: Arc<ParamSet>) -> Self {
        let rho = (0..universe.len()).collect();
        let phi = (0..params.len()).collect();
        SoftMapping {
            src_universe: universe.clone(),
            src_params: params.clone(),
            dst_universe: universe,
            dst_params: params,
            phi,
            rho,
        }
    }

    /// Builds a mapping from label-to-label tables.
    pub fn from_named<S: AsRef<str>>(
        src_universe: Arc<Universe>,
        src_params: Arc<ParamSet>,
        dst_universe: Arc<Universe>,
        dst_params: Arc<ParamSet>,
        phi: &[(S, S)],
        rho: &[(S, S)],
    ) -> Result<Self> {
        let mut phi_idx = vec![None; src_params.len()];
        for (a, b) in phi {
            phi_idx[src_params.index_of(a.as_ref())?] = Some(dst_params.index_of(b.as_ref())?);
        }
        let mut rho_idx = vec![None; src_universe.len()];
        for (a, b) in rho {
            rho_idx[src_universe.index_of(a.as_ref())?] = Some(dst_universe.index_of(b.as_ref())?);
        }
        let phi = phi_idx
            .iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| Error::InvalidMapping(format!("phi misses `{}`", src_params.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        let rho = rho_idx
            .iter()
            .enumerate()
            .map(|(i, d)| d.ok_or_else(|| Error::InvalidMapping(format!("rho misses `{}`", src_universe.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        SoftMapping::new(src_universe, src_params, dst_universe, dst_params, phi, rho)
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn src_universe(&self) -> &Arc<Universe> {
        &self.src_universe
    }

    pub fn src_params(&self) -> &Arc<ParamSet> {
        &self.src_params
    }

    pub fn dst_universe(&self) -> &Arc<Universe> {
        &self.dst_universe
    }

    pub fn dst_params(&self) -> &Arc<ParamSet> {
        &self.dst_params
    }

    pub fn has_identity_params(&self) -> bool {
        same(&self.src_params, &self.dst_params) && self.phi.iter().enumerate().all(|(i, &d)| i == d)
    }

    /// `φ(ξ)` as a set of target parameter indices.
    pub fn phi_image(&self) -> Vec<bool> {
        let mut hit = vec![false; self.dst_params.len()];
        for &d in &self.phi {
            hit[d] = true;
        }
        hit
    }

    pub(crate) fn map_points(&self, s: Subset) -> Subset {
        s.map(|i| self.rho[i])
    }

    /// Image slices indexed by target parameter; `None` outside `φ(ξ)`.
    pub(crate) fn image_slices(&self, slices: &[Subset]) -> Vec<Option<Subset>> {
        let mut out = vec![None; self.dst_params.len()];
        for (e, &s) in slices.iter().enumerate() {
            let img = self.map_points(s);
            let slot = &mut out[self.phi[e]];
            *slot = Some(slot.map_or(img, |acc: Subset| acc.union(img)));
        }
        out
    }

    /// `(φ,ρ)(W) ⊑ W′` with `W′` over the target parameter set.
    pub(crate) fn image_le(&self, slices: &[Subset], target: &[Subset]) -> bool {
        slices
            .iter()
            .enumerate()
            .all(|(e, &s)| self.map_points(s).is_subset(target[self.phi[e]]))
    }

    /// The soft image `ρ(W)_{φ(ξ)}`, whose slice at `d` is the union of
    /// `ρ(W(e))` over all `e` with `φ(e) = d`.
    pub fn image(&self, w: &SoftSet) -> Result<SoftSet> {
        if !same(&w.universe, &self.src_universe) {
            return Err(Error::UniverseMismatch);
        }
        if !same(&w.params, &self.src_params) {
            return Err(Error::ParamMismatch);
        }
        let slots = self.image_slices(&w.slices);
        if slots.iter().all(Option::is_some) {
            let slices = slots.into_iter().map(Option::unwrap).collect();
            return Ok(SoftSet::from_parts(self.dst_universe.clone(), self.dst_params.clone(), slices));
        }
        let mut labels = Vec::new();
        let mut slices = Vec::new();
        for (d, s) in slots.into_iter().enumerate() {
            if let Some(s) = s {
                labels.push(self.dst_params.label(d).to_string());
                slices.push(s);
            }
        }
        Ok(SoftSet::from_parts(self.dst_universe.clone(), ParamSet::new(labels)?, slices))
    }

    /// The inverse soft image over the source parameters:
    /// slice `e` is `ρ⁻¹(U(φ(e)))`.
    pub fn inverse_image(&self, u: &SoftSet) -> Result<SoftSet> {
        if !same(&u.universe, &self.dst_universe) {
            return Err(Error::UniverseMismatch);
        }
        let n = self.src_universe.len();
        let direct = same(&u.params, &self.dst_params);
        let slices = self
            .phi
            .iter()
            .map(|&d| {
                let j = if direct {
                    d
                } else {
                    let l = self.dst_params.label(d);
                    u.params.position(l).ok_or_else(|| Error::MissingSlice(l.to_string()))?
                };
                Ok(u.slices[j].preimage(n, |i| self.rho[i]))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SoftSet::from_parts(self.src_universe.clone(), self.src_params.clone(), slices))
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &SoftMapping) -> Result<SoftMapping> {
        if !same(&first.dst_universe, &self.src_universe) || !same(&first.dst_params, &self.src_params) {
            return Err(Error::Composition("codomain of the first map is not the domain of the second".into()));
        }
        Ok(SoftMapping {
            src_universe: first.src_universe.clone(),
            src_params: first.src_params.clone(),
            dst_universe: self.dst_universe.clone(),
            dst_params: self.dst_params.clone(),
            phi: first.phi.iter().map(|&e| self.phi[e]).collect(),
            rho: first.rho.iter().map(|&x| self.rho[x]).collect(),
        })
    }
}

impl fmt::Debug for SoftMapping {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phi: Vec<String> = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, &d)| format!("{}->{}", self.src_params.label(i), self.dst_params.label(d)))
            .collect();
        let rho: Vec<String> = self
            .rho
            .iter()
            .enumerate()
            .map(|(i, &y)| format!("{}->{}", self.src_universe.label(i), self.dst_universe.label(y)))
            .collect();
        write!(f, "SoftMapping(phi: [{}], rho: [{}])", phi.join(", "), rho.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex33() -> (Arc<Universe>, Arc<ParamSet>, SoftSet, SoftSet) {
        let x = Universe::new(["u", "u'", "u''"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let a = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["u", "u'"][..]), ("e2", &["u''"][..])]).unwrap();
        let b = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["u''"][..]), ("e2", &["u", "u'"][..])]).unwrap();
        (x, p, a, b)
    }

    fn pspace_sets() -> (Arc<Universe>, Arc<ParamSet>, SoftSet, SoftSet) {
        let x = Universe::new(["1", "2", "3"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let u1 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1"][..]), ("e2", &["2"][..])]).unwrap();
        let u2 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1", "3"][..]), ("e2", &["2"][..])]).unwrap();
        (x, p, u1, u2)
    }

    #[test]
    fn make_absolute_cases() {
        let x = Universe::new(["v"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let e = SoftSet::make_absolute(x.clone(), p.clone(), Subset::EMPTY);
        assert_eq!(e, SoftSet::empty(x.clone(), p.clone()));
        let f = SoftSet::make_absolute_named(x.clone(), p.clone(), &["v"]).unwrap();
        assert_eq!(f, SoftSet::absolute(x.clone(), p.clone()));
        assert_eq!(f.to_string(), "{(e1,{v}),(e2,{v})}");
        assert_eq!(
            SoftSet::make_absolute_named(x, p, &["w"]),
            Err(Error::UnknownElement("w".into()))
        );
    }

    #[test]
    fn union_and_intersection_of_example_sets() {
        let (x, p, a, b) = ex33();
        assert_eq!(soft_union(&a, &b).unwrap(), SoftSet::absolute(x.clone(), p.clone()));
        assert_eq!(soft_intersection(&a, &b).unwrap(), SoftSet::empty(x.clone(), p.clone()));
        let e = SoftSet::empty(x.clone(), p.clone());
        assert_eq!(soft_union(&a, &e).unwrap(), a);
        assert_eq!(soft_intersection(&a, &SoftSet::absolute(x, p)).unwrap(), a);
    }

    #[test]
    fn union_over_different_parameter_sets() {
        let x = Universe::new(["a", "b", "c"]).unwrap();
        let p1 = ParamSet::new(["e1"]).unwrap();
        let p2 = ParamSet::new(["e1", "e2"]).unwrap();
        let u = SoftSet::from_named(x.clone(), p1, &[("e1", &["a"][..])]).unwrap();
        let v = SoftSet::from_named(x.clone(), p2.clone(), &[("e1", &["b"][..]), ("e2", &["c"][..])]).unwrap();
        let w = soft_union(&u, &v).unwrap();
        let expect = SoftSet::from_named(x, p2, &[("e1", &["a", "b"][..]), ("e2", &["c"][..])]).unwrap();
        assert!(soft_equal(&w, &expect).unwrap());
        assert_eq!(w.params().labels(), ["e1", "e2"]);
        let i = soft_intersection(&u, &v).unwrap();
        assert_eq!(i.params().labels(), ["e1"]);
        assert!(i.slice(0).is_empty());
    }

    #[test]
    fn intersection_needs_shared_parameters() {
        let x = Universe::new(["a"]).unwrap();
        let u = SoftSet::absolute(x.clone(), ParamSet::new(["e1"]).unwrap());
        let v = SoftSet::absolute(x, ParamSet::new(["e2"]).unwrap());
        assert_eq!(soft_intersection(&u, &v), Err(Error::DisjointParams));
    }

    #[test]
    fn universes_must_match() {
        let p = ParamSet::numbered(1).unwrap();
        let u = SoftSet::absolute(Universe::new(["a"]).unwrap(), p.clone());
        let v = SoftSet::absolute(Universe::new(["b"]).unwrap(), p);
        assert_eq!(soft_union(&u, &v), Err(Error::UniverseMismatch));
        assert_eq!(is_soft_subset(&u, &v), Err(Error::UniverseMismatch));
    }

    #[test]
    fn pspace_intersection_and_subsets() {
        let (x, p, u1, u2) = pspace_sets();
        assert_eq!(soft_intersection(&u1, &u2).unwrap(), u1);
        assert!(is_soft_subset(&u1, &u2).unwrap());
        assert!(!is_soft_subset(&u2, &u1).unwrap());
        assert!(is_soft_subset(&SoftSet::empty(x, p), &u2).unwrap());
        assert!(!is_soft_element("1", &u2).unwrap());
    }

    #[test]
    fn complement_cases() {
        let x = Universe::new(["v"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let h = SoftSet::from_named(x.clone(), p.clone(), &[("e2", &["v"][..])]).unwrap();
        let hc = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["v"][..])]).unwrap();
        assert_eq!(soft_complement(&h), hc);
        assert_eq!(soft_complement(&hc), h);
        assert_eq!(soft_complement(&SoftSet::empty(x.clone(), p.clone())), SoftSet::absolute(x, p));
    }

    #[test]
    fn soft_elements() {
        let (_, _, a, _) = ex33();
        for x in ["u", "u'", "u''"] {
            assert!(!is_soft_element(x, &a).unwrap());
        }
        assert_eq!(is_soft_element("q", &a), Err(Error::UnknownElement("q".into())));
    }

    #[test]
    fn image_merges_slices_with_the_same_target_parameter() {
        let x = Universe::new(["a", "b"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let d = ParamSet::new(["d"]).unwrap();
        let m = SoftMapping::new(x.clone(), p.clone(), x.clone(), d.clone(), vec![0, 0], vec![0, 1]).unwrap();
        let w = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["a"][..]), ("e2", &["b"][..])]).unwrap();
        let img = m.image(&w).unwrap();
        assert_eq!(img, SoftSet::absolute(x.clone(), d));
        let id = SoftMapping::identity(x.clone(), p.clone());
        assert_eq!(id.image(&w).unwrap(), w);
    }

    #[test]
    fn image_over_a_proper_part_of_the_target_parameters() {
        let x = Universe::new(["a", "b"]).unwrap();
        let p = ParamSet::numbered(1).unwrap();
        let q = ParamSet::numbered(2).unwrap();
        let m = SoftMapping::new(x.clone(), p.clone(), x.clone(), q, vec![1], vec![1, 1]).unwrap();
        let img = m.image(&SoftSet::make_absolute(x.clone(), p, Subset::singleton(0))).unwrap();
        assert_eq!(img.params().labels(), ["e2"]);
        assert_eq!(img.slice(0), Subset::singleton(1));
    }

    #[test]
    fn inverse_image_cases() {
        let x = Universe::new(["v"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let id = SoftMapping::identity(x.clone(), p.clone());
        let h = SoftSet::from_named(x.clone(), p.clone(), &[("e2", &["v"][..])]).unwrap();
        assert_eq!(id.inverse_image(&h).unwrap(), h);

        let y = Universe::new(["z", "w"]).unwrap();
        let c = SoftMapping::with_identity_params(x.clone(), y.clone(), p.clone(), vec![0]).unwrap();
        let u = SoftSet::make_absolute(y.clone(), p.clone(), Subset::singleton(1));
        assert_eq!(c.inverse_image(&u).unwrap(), SoftSet::empty(x.clone(), p.clone()));
        assert_eq!(
            c.inverse_image(&SoftSet::absolute(y, p.clone())).unwrap(),
            SoftSet::absolute(x, p)
        );
    }

    #[test]
    fn inverse_image_reports_missing_slices() {
        let x = Universe::new(["v"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let id = SoftMapping::identity(x.clone(), p);
        let only_e1 = SoftSet::absolute(x, ParamSet::new(["e1"]).unwrap());
        assert_eq!(id.inverse_image(&only_e1), Err(Error::MissingSlice("e2".into())));
    }

    #[test]
    fn composition_applies_right_map_first() {
        let x = Universe::range(3).unwrap();
        let p = ParamSet::numbered(1).unwrap();
        let f = SoftMapping::with_identity_params(x.clone(), x.clone(), p.clone(), vec![1, 2, 0]).unwrap();
        let g = SoftMapping::with_identity_params(x.clone(), x.clone(), p.clone(), vec![0, 0, 2]).unwrap();
        assert_eq!(g.after(&f).unwrap().rho(), &[0, 2, 0]);
    }
}
