//! The category of soft topological groups: objects are verified soft
//! topological groups, morphisms are pairs `(φ, ρ)` of a parameter map and
//! a group homomorphism that are jointly soft continuous.
//!
//! Composition is written in the usual order: `compose(g, f)` runs `f`
//! first and has components `(φ_g ∘ φ_f, ρ_g ∘ ρ_f)`.
//!
//! Mono/epi are decided by brute force over a finite probe family, so those
//! verdicts hold *up to the probe family*; see [`default_probes`].

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::enumerate::enumerated_group_spaces;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::soft::{ParamSet, SoftMapping};
use crate::soft_group::{fixtures, product_soft_top_group, subgroup_soft_top_group, SoftTopGroup};
use crate::subset::Subset;
use crate::topology::{is_soft_continuous, SoftTopology};
use crate::verdict::Verdict;

/// An object of the category.
#[derive(Clone, PartialEq, Eq)]
pub struct STGrpObject(Arc<SoftTopGroup>);

impl STGrpObject {
    pub fn new(stg: SoftTopGroup) -> Self {
        STGrpObject(Arc::new(stg))
    }

    pub fn stg(&self) -> &SoftTopGroup {
        &self.0
    }

    pub fn group(&self) -> &FiniteGroup {
        self.0.group()
    }

    pub fn topology(&self) -> &SoftTopology {
        self.0.topology()
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        self.0.params()
    }

    fn same(&self, other: &STGrpObject) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl fmt::Debug for STGrpObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A verified morphism. Two morphisms are equal when they share source and
/// target and both components agree.
#[derive(Clone)]
pub struct STGrpMorphism {
    source: STGrpObject,
    target: STGrpObject,
    phi: Vec<usize>,
    rho: Vec<usize>,
}

impl PartialEq for STGrpMorphism {
    fn eq(&self, other: &Self) -> bool {
        self.phi == other.phi && self.rho == other.rho && self.source.same(&other.source) && self.target.same(&other.target)
    }
}

impl Eq for STGrpMorphism {}

impl fmt::Debug for STGrpMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(phi {:?}, rho {:?})", self.phi, self.rho)
    }
}

impl STGrpMorphism {
    pub fn source(&self) -> &STGrpObject {
        &self.source
    }

    pub fn target(&self) -> &STGrpObject {
        &self.target
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn rho(&self) -> &[usize] {
        &self.rho
    }

    pub fn mapping(&self) -> SoftMapping {
        soft_mapping(&self.source, &self.target, self.phi.clone(), self.rho.clone()).expect("verified morphism")
    }
}

fn soft_mapping(src: &STGrpObject, tgt: &STGrpObject, phi: Vec<usize>, rho: Vec<usize>) -> Result<SoftMapping> {
    SoftMapping::new(
        src.topology().universe().clone(),
        src.params().clone(),
        tgt.topology().universe().clone(),
        tgt.params().clone(),
        phi,
        rho,
    )
}

/// Checks the homomorphism property and soft continuity of `(φ, ρ)`.
pub fn make_morphism(src: &STGrpObject, tgt: &STGrpObject, phi: Vec<usize>, rho: Vec<usize>) -> Result<STGrpMorphism> {
    let m = soft_mapping(src, tgt, phi, rho)?;
    if let Some((a, b)) = src.group().homomorphism_failure(tgt.group(), m.rho()) {
        return Err(Error::NotHomomorphism(format!(
            "rho(a*b) != rho(a)*rho(b) at ({}, {})",
            src.group().label(a),
            src.group().label(b)
        )));
    }
    if let Verdict::Fails((x, w)) = is_soft_continuous(&m, src.topology(), tgt.topology())? {
        return Err(Error::NotContinuous(format!(
            "at {} for the open {w}",
            src.topology().universe().label(x)
        )));
    }
    Ok(STGrpMorphism { source: src.clone(), target: tgt.clone(), phi: m.phi().to_vec(), rho: m.rho().to_vec() })
}

pub fn identity(a: &STGrpObject) -> STGrpMorphism {
    STGrpMorphism {
        source: a.clone(),
        target: a.clone(),
        phi: (0..a.params().len()).collect(),
        rho: (0..a.group().order()).collect(),
    }
}

/// `g ∘ f`. Continuity of the composite is re-verified as a safety check.
pub fn compose(g: &STGrpMorphism, f: &STGrpMorphism) -> Result<STGrpMorphism> {
    if !f.target.same(&g.source) {
        return Err(Error::Composition("target of the first morphism is not the source of the second".into()));
    }
    let phi = f.phi.iter().map(|&e| g.phi[e]).collect();
    let rho = f.rho.iter().map(|&x| g.rho[x]).collect();
    make_morphism(&f.source, &g.target, phi, rho)
}

/// Every morphism `a → b`, ordered by parameter map then point map.
pub fn homset(a: &STGrpObject, b: &STGrpObject) -> Vec<STGrpMorphism> {
    let homs = a.group().homomorphisms(b.group());
    let (ma, mb) = (a.params().len(), b.params().len());
    let total = mb.checked_pow(ma as u32).expect("too many parameter maps");
    let mut out = Vec::new();
    for code in 0..total {
        let mut phi = vec![0; ma];
        let mut c = code;
        for slot in phi.iter_mut().rev() {
            *slot = c % mb;
            c /= mb;
        }
        for rho in &homs {
            let m = soft_mapping(a, b, phi.clone(), rho.clone()).expect("total maps");
            if is_soft_continuous(&m, a.topology(), b.topology()).expect("matching spaces").holds() {
                out.push(STGrpMorphism { source: a.clone(), target: b.clone(), phi: phi.clone(), rho: rho.clone() });
            }
        }
    }
    out
}

/// Verdict of a mono/epi test.
#[derive(Debug, Clone)]
pub struct CancellationVerdict {
    /// Both components injective (mono) or surjective (epi).
    pub certificate: bool,
    /// Two distinct morphisms that the tested morphism does not tell apart.
    pub brute_force: Verdict<(STGrpMorphism, STGrpMorphism)>,
    pub probes: usize,
}

impl CancellationVerdict {
    pub fn holds(&self) -> bool {
        self.brute_force.holds()
    }

    pub fn label(&self) -> String {
        format!("certified up to probe family ({} objects)", self.probes)
    }
}

fn injective(f: &[usize]) -> bool {
    let mut seen = vec![false; f.iter().max().map_or(0, |m| m + 1)];
    f.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
}

fn surjective(f: &[usize], n: usize) -> bool {
    let mut hit = vec![false; n];
    for &y in f {
        hit[y] = true;
    }
    hit.into_iter().all(|b| b)
}

/// Left-cancellation: `m∘u = m∘v ⟹ u = v` for all `u, v : P → source`.
pub fn is_monomorphism(m: &STGrpMorphism, probes: &[STGrpObject]) -> CancellationVerdict {
    let certificate = injective(&m.phi) && injective(&m.rho);
    let mut witness = None;
    'outer: for p in probes {
        let hs = homset(p, &m.source);
        let composed: Vec<STGrpMorphism> = hs.iter().map(|u| compose(m, u).expect("composable")).collect();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                if composed[i] == composed[j] {
                    witness = Some((hs[i].clone(), hs[j].clone()));
                    break 'outer;
                }
            }
        }
    }
    CancellationVerdict { certificate, brute_force: Verdict::from_witness(witness), probes: probes.len() }
}

/// Right-cancellation: `u∘m = v∘m ⟹ u = v` for all `u, v : target → P`.
pub fn is_epimorphism(m: &STGrpMorphism, probes: &[STGrpObject]) -> CancellationVerdict {
    let certificate = surjective(&m.phi, m.target.params().len()) && surjective(&m.rho, m.target.group().order());
    let mut witness = None;
    'outer: for p in probes {
        let hs = homset(&m.target, p);
        let composed: Vec<STGrpMorphism> = hs.iter().map(|u| compose(u, m).expect("composable")).collect();
        for i in 0..hs.len() {
            for j in i + 1..hs.len() {
                if composed[i] == composed[j] {
                    witness = Some((hs[i].clone(), hs[j].clone()));
                    break 'outer;
                }
            }
        }
    }
    CancellationVerdict { certificate, brute_force: Verdict::from_witness(witness), probes: probes.len() }
}

/// The kernel of `m` as a subobject of its source.
pub fn kernel_object(m: &STGrpMorphism) -> Result<STGrpObject> {
    let e = m.target.group().identity();
    let k: Subset = (0..m.rho.len()).filter(|&x| m.rho[x] == e).collect();
    Ok(STGrpObject::new(subgroup_soft_top_group(m.source.stg(), k)?))
}

/// `target / image(ρ)` with the indiscrete soft topology over the target's
/// parameters, when the image is normal.
pub fn cokernel_object(m: &STGrpObject, image: Subset) -> Result<STGrpObject> {
    let (q, _) = m.group().quotient(image)?;
    Ok(STGrpObject::new(SoftTopGroup::indiscrete(q, m.params().clone())))
}

/// Every verified object over the small enumerated groups (see
/// [`enumerated_group_spaces`]), the fixture zoo and the terminal object.
pub fn probe_family() -> &'static [STGrpObject] {
    static FAMILY: OnceLock<Vec<STGrpObject>> = OnceLock::new();
    FAMILY.get_or_init(|| {
        let mut out = vec![terminal_object()];
        for (_, g, t) in enumerated_group_spaces() {
            if let Ok(s) = SoftTopGroup::new(g, t) {
                out.push(STGrpObject::new(s));
            }
        }
        out.extend(fixtures::zoo().into_iter().map(|(_, s)| STGrpObject::new(s)));
        out
    })
}

/// Probe family for mono/epi tests on `m`: [`probe_family`] plus the
/// source, the target, the kernel of `m` and the indiscrete quotient of the
/// target by the image.
pub fn default_probes(m: &STGrpMorphism) -> Vec<STGrpObject> {
    let mut out = probe_family().to_vec();
    out.push(m.source.clone());
    out.push(m.target.clone());
    if let Ok(k) = kernel_object(m) {
        out.push(k);
    }
    let image: Subset = m.rho.iter().copied().collect();
    if let Ok(q) = cokernel_object(&m.target, image) {
        out.push(q);
    }
    out
}

/// A product object with its two projections.
#[derive(Debug, Clone)]
pub struct ProductCone {
    pub object: STGrpObject,
    pub first: STGrpMorphism,
    pub second: STGrpMorphism,
}

pub fn product_object(a: &STGrpObject, b: &STGrpObject) -> Result<ProductCone> {
    let p = STGrpObject::new(product_soft_top_group(a.stg(), b.stg())?);
    let (mb, nb) = (b.params().len(), b.group().order());
    let np = p.group().order();
    let mp = p.params().len();
    let first = make_morphism(&p, a, (0..mp).map(|i| i / mb).collect(), (0..np).map(|x| x / nb).collect())?;
    let second = make_morphism(&p, b, (0..mp).map(|i| i % mb).collect(), (0..np).map(|x| x % nb).collect())?;
    Ok(ProductCone { object: p, first, second })
}

/// `⟨f₁, f₂⟩ : h → a × b` with `ϑ(e) = (φ₁(e), φ₂(e))`, `χ(x) = (ρ₁(x), ρ₂(x))`.
pub fn mediating_morphism(cone: &ProductCone, f1: &STGrpMorphism, f2: &STGrpMorphism) -> Result<STGrpMorphism> {
    if !f1.source.same(&f2.source) {
        return Err(Error::Composition("cone legs have different sources".into()));
    }
    if !f1.target.same(&cone.first.target) || !f2.target.same(&cone.second.target) {
        return Err(Error::Composition("cone legs do not end at the factors".into()));
    }
    let mb = cone.second.target.params().len();
    let nb = cone.second.target.group().order();
    let phi = f1.phi.iter().zip(&f2.phi).map(|(&e, &f)| e * mb + f).collect();
    let rho = f1.rho.iter().zip(&f2.rho).map(|(&x, &y)| x * nb + y).collect();
    make_morphism(&f1.source, &cone.object, phi, rho)
}

/// Every morphism `h → a × b` whose projections are `f₁` and `f₂`.
pub fn mediating_candidates(cone: &ProductCone, f1: &STGrpMorphism, f2: &STGrpMorphism) -> Vec<STGrpMorphism> {
    homset(&f1.source, &cone.object)
        .into_iter()
        .filter(|u| {
            compose(&cone.first, u).is_ok_and(|c| c == *f1) && compose(&cone.second, u).is_ok_and(|c| c == *f2)
        })
        .collect()
}

/// `({1}, indiscrete)` over a single parameter.
pub fn terminal_object() -> STGrpObject {
    STGrpObject::new(SoftTopGroup::indiscrete(FiniteGroup::trivial(), ParamSet::new(["e"]).unwrap()))
}

pub fn unique_to_terminal(a: &STGrpObject) -> STGrpMorphism {
    make_morphism(a, &terminal_object(), vec![0; a.params().len()], vec![0; a.group().order()])
        .expect("constant maps into the terminal object are morphisms")
}

/// The swap `a × b → b × a`.
pub fn braiding(ab: &ProductCone, ba: &ProductCone) -> Result<STGrpMorphism> {
    mediating_morphism(ba, &ab.second, &ab.first)
}

/// `f × g : a × b → c × d`.
pub fn product_morphism(ab: &ProductCone, cd: &ProductCone, f: &STGrpMorphism, g: &STGrpMorphism) -> Result<STGrpMorphism> {
    mediating_morphism(cd, &compose(f, &ab.first)?, &compose(g, &ab.second)?)
}

/// `(a × b) × c → a × (b × c)`, built from projections.
pub fn associator(ab_c: &ProductCone, ab: &ProductCone, a_bc: &ProductCone, bc: &ProductCone) -> Result<STGrpMorphism> {
    let to_a = compose(&ab.first, &ab_c.first)?;
    let to_b = compose(&ab.second, &ab_c.first)?;
    let to_bc = mediating_morphism(bc, &to_b, &ab_c.second)?;
    mediating_morphism(a_bc, &to_a, &to_bc)
}

/// Outcome of the coherence checks, one list of failures per law.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MonoidalReport {
    pub braiding_involution: Vec<String>,
    pub naturality: Vec<String>,
    pub pentagon: Vec<String>,
    pub triangle: Vec<String>,
}

impl MonoidalReport {
    pub fn holds(&self) -> bool {
        self.braiding_involution.is_empty() && self.naturality.is_empty() && self.pentagon.is_empty() && self.triangle.is_empty()
    }
}

fn check(out: &mut Vec<String>, what: &str, r: Result<bool>) {
    match r {
        Ok(true) => {}
        Ok(false) => out.push(format!("{what}: diagram does not commute")),
        Err(e) => out.push(format!("{what}: {e}")),
    }
}

/// Checks the symmetric monoidal laws for the cartesian structure on four
/// objects and one morphism out of each of the first two.
pub fn monoidal_law_check(objs: [&STGrpObject; 4], f: &STGrpMorphism, g: &STGrpMorphism) -> MonoidalReport {
    let mut r = MonoidalReport::default();
    let [a, b, c, d] = objs;
    check(&mut r.braiding_involution, "braiding twice", (|| {
        let ab = product_object(a, b)?;
        let ba = product_object(b, a)?;
        Ok(compose(&braiding(&ba, &ab)?, &braiding(&ab, &ba)?)? == identity(&ab.object))
    })());
    check(&mut r.naturality, "braiding naturality", (|| {
        let ab = product_object(f.source(), g.source())?;
        let ba = product_object(g.source(), f.source())?;
        let cd = product_object(f.target(), g.target())?;
        let dc = product_object(g.target(), f.target())?;
        let left = compose(&braiding(&cd, &dc)?, &product_morphism(&ab, &cd, f, g)?)?;
        let right = compose(&product_morphism(&ba, &dc, g, f)?, &braiding(&ab, &ba)?)?;
        Ok(left == right)
    })());
    check(&mut r.pentagon, "pentagon", (|| {
        let ab = product_object(a, b)?;
        let ab_c = product_object(&ab.object, c)?;
        let ab_c_d = product_object(&ab_c.object, d)?;
        let cd = product_object(c, d)?;
        let ab_cd = product_object(&ab.object, &cd.object)?;
        let b_cd = product_object(b, &cd.object)?;
        let a_b_cd = product_object(a, &b_cd.object)?;
        let bc = product_object(b, c)?;
        let a_bc = product_object(a, &bc.object)?;
        let a_bc_d = product_object(&a_bc.object, d)?;
        let bc_d = product_object(&bc.object, d)?;
        let a_bc_d2 = product_object(a, &bc_d.object)?;
        let id_a = identity(a);
        let id_d = identity(d);
        // ((ab)c)d → (ab)(cd) → a(b(cd))
        let top = compose(&associator(&ab_cd, &ab, &a_b_cd, &b_cd)?, &associator(&ab_c_d, &ab_c, &ab_cd, &cd)?)?;
        // ((ab)c)d → (a(bc))d → a((bc)d) → a(b(cd))
        let s1 = product_morphism(&ab_c_d, &a_bc_d, &associator(&ab_c, &ab, &a_bc, &bc)?, &id_d)?;
        let s2 = associator(&a_bc_d, &a_bc, &a_bc_d2, &bc_d)?;
        let s3 = product_morphism(&a_bc_d2, &a_b_cd, &id_a, &associator(&bc_d, &bc, &b_cd, &cd)?)?;
        let bottom = compose(&s3, &compose(&s2, &s1)?)?;
        Ok(top == bottom)
    })());
    check(&mut r.triangle, "triangle", (|| {
        let one = terminal_object();
        let a1 = product_object(a, &one)?;
        let a1_b = product_object(&a1.object, b)?;
        let one_b = product_object(&one, b)?;
        let a_1b = product_object(a, &one_b.object)?;
        let ab = product_object(a, b)?;
        let left = compose(
            &product_morphism(&a_1b, &ab, &identity(a), &one_b.second)?,
            &associator(&a1_b, &a1, &a_1b, &one_b)?,
        )?;
        let right = product_morphism(&a1_b, &ab, &a1.first, &identity(b))?;
        Ok(left == right)
    })());
    r
}
