//! Theorem-backed property suite and counterexample search.
//!
//! A [`PropertyCase`] aggregates one property over one population of
//! instances (an exhaustive enumeration, a fixture list, or a seeded random
//! sample). Failing cases carry the first failing instance as single-line
//! JSON, in the interchange format where one applies, so it can be replayed
//! through the corresponding `check-*` command.

use std::fmt::Write as _;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

mod categorical;
mod groups;
mod reals;
mod spaces;

pub use spaces::replay;

/// A property the suite knows how to check.
#[derive(Debug, Clone, Copy)]
pub struct Property {
    pub id: &'static str,
    pub summary: &'static str,
    /// Run by default; the deliberately false probes are opt-in.
    pub default: bool,
}

const fn prop(id: &'static str, summary: &'static str) -> Property {
    Property { id, summary, default: true }
}

pub const PROPERTIES: &[Property] = &[
    prop("soft-set-laws", "lattice laws, absolute sets, and W below the preimage of its image"),
    prop("constructions", "subbase closures, subspaces and products satisfy the topology axioms"),
    prop("prop-2.8", "every parameter topology is a classical topology"),
    prop("prop-2.16", "open preimages imply soft continuity"),
    prop("ex-2.17", "a soft continuous identity with a non-open preimage"),
    prop("composition", "composites of soft continuous mappings are soft continuous"),
    prop("ex-3.3", "two crossed opens with empty cores leave the space connected"),
    prop("thm-3.4", "continuous images of connected spaces are connected"),
    prop("thm-4.7", "continuous images of path connected subspaces are path connected"),
    prop("thm-4.12", "path connected spaces are connected"),
    prop("oracle-path", "fence reachability agrees with brute-force path search"),
    prop("path-refinement", "refining breakpoints does not change the soft path verdict"),
    prop("ex-4.3", "the doubling path maps (t-e/2, t+e/2) onto (2t-e, 2t+e)"),
    prop("ex-4.5", "step paths in the nested space and their non-open preimages"),
    prop("ex-4.7", "convex combinations are soft paths with the right endpoints"),
    prop("prop-4.8", "non-intervals split at a gap point into two relative opens"),
    prop("thm-4.9", "affine paths attain every intermediate value exactly"),
    prop("prop-4.10", "no two nonempty opens partition the reals"),
    prop("prop-4.11", "no two nonempty relative opens partition the unit interval"),
    prop("prop-2.20", "group verification agrees with the division criterion"),
    prop("thm-5.2", "multiplication meets the neighbourhood condition"),
    prop("prop-5.3", "subgroups with the subspace topology are soft topological groups"),
    prop("prop-5.4", "open subgroups are closed"),
    prop("prop-5.5", "connected groups have no proper open subgroup"),
    prop("prop-5.6", "pointwise products of soft continuous maps are soft continuous"),
    prop("ex-5.7", "pointwise products of soft paths are soft paths"),
    prop("prop-5.8", "translations are homeomorphisms; products of connected subsets are connected"),
    prop("thm-5.9", "products of path connected spaces are path connected"),
    prop("thm-5.10", "products of path connected subsets are path connected"),
    prop("thm-5.11", "homomorphisms continuous at the identity are continuous"),
    prop("product-group", "direct products of soft topological groups verify"),
    prop("prop-6.4", "composites of morphisms re-verify"),
    prop("thm-6.5", "identity and associativity laws"),
    prop("prop-6.6", "injective/surjective components give mono/epi"),
    prop("prop-6.8", "monomorphisms have injective point maps"),
    prop("prop-6.9", "epimorphisms have surjective point maps"),
    prop("thm-6.12", "projections out of products are morphisms"),
    prop("thm-6.13", "mediating morphisms exist and are unique"),
    prop("thm-6.14", "exactly one morphism into the terminal object"),
    prop("cor-6.15", "braiding, naturality, pentagon and triangle instances commute"),
    Property { id: "not-thm-3.4", summary: "deliberately false: continuous images of connected spaces are disconnected", default: false },
    Property { id: "prop-2.16-converse", summary: "false in general: soft continuity implies open preimages", default: false },
];

pub fn property(id: &str) -> Result<&'static Property> {
    PROPERTIES.iter().find(|p| p.id == id).ok_or_else(|| Error::UnknownProperty(id.to_string()))
}

/// One property over one population.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCase {
    pub property: String,
    pub population: String,
    pub checked: usize,
    pub violations: usize,
    /// First failing instance, as compact JSON.
    pub witness: Option<String>,
}

impl PropertyCase {
    pub fn holds(&self) -> bool {
        self.violations == 0
    }

    /// Hex digest identifying the case: property, population and witness.
    pub fn hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.property.as_bytes());
        h.update([0]);
        h.update(self.population.as_bytes());
        h.update([0]);
        h.update(self.witness.as_deref().unwrap_or("").as_bytes());
        let d = h.finalize();
        d.iter().take(8).map(|b| format!("{b:02x}")).collect()
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} {} checked={} violations={} population=\"{}\" witness={}",
            self.property,
            self.hash(),
            if self.holds() { "HOLDS" } else { "FAILS" },
            self.checked,
            self.violations,
            self.population,
            self.witness.as_deref().unwrap_or("-"),
        )
    }
}

/// Running count of checked instances and failures.
#[derive(Debug, Default)]
pub(crate) struct Tally {
    checked: usize,
    violations: usize,
    witness: Option<Value>,
}

impl Tally {
    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> Value) {
        self.checked += 1;
        if !ok {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    pub(crate) fn merge(mut self, other: Tally) -> Tally {
        self.checked += other.checked;
        self.violations += other.violations;
        if self.witness.is_none() {
            self.witness = other.witness;
        }
        self
    }

    pub(crate) fn into_case(self, property: &str, population: impl Into<String>) -> PropertyCase {
        PropertyCase {
            property: property.to_string(),
            population: population.into(),
            checked: self.checked,
            violations: self.violations,
            witness: self.witness.map(|w| w.to_string()),
        }
    }
}

/// Maps `f` over `items` in parallel and merges the tallies in item order,
/// so the first witness does not depend on scheduling.
pub(crate) fn par_tally<T: Sync>(items: &[T], f: impl Fn(&T) -> Tally + Sync + Send) -> Tally {
    items.par_iter().map(f).collect::<Vec<_>>().into_iter().fold(Tally::default(), Tally::merge)
}

/// Parameters shared by every property of a run.
#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random instances per random population; also caps search attempts.
    pub budget: usize,
    /// Worker threads; `None` uses the global pool.
    pub threads: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 0, budget: 64, threads: None }
    }
}

pub(crate) struct Ctx {
    pub seed: u64,
    pub budget: usize,
}

impl Ctx {
    /// Independent stream per property and population tag.
    pub(crate) fn rng(&self, id: &str, tag: &str) -> ChaCha8Rng {
        let mut h = Sha256::new();
        h.update(self.seed.to_le_bytes());
        h.update(id.as_bytes());
        h.update([0]);
        h.update(tag.as_bytes());
        let d = h.finalize();
        ChaCha8Rng::from_seed(d.into())
    }

    pub(crate) fn random_label(&self, what: &str) -> String {
        format!("random {what} seed={} n={}", self.seed, self.budget)
    }
}

fn run_property(id: &str, ctx: &Ctx) -> Vec<PropertyCase> {
    if let Some(c) = spaces::run(id, ctx) {
        return c;
    }
    if let Some(c) = reals::run(id, ctx) {
        return c;
    }
    if let Some(c) = groups::run(id, ctx) {
        return c;
    }
    categorical::run(id, ctx).unwrap_or_else(|| unreachable!("property {id} has no runner"))
}

fn with_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .map_err(|e| Error::Schema(format!("thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

/// Runs the selected properties (all default ones when `ids` is empty), in
/// the order of [`PROPERTIES`].
pub fn run_suite(ids: &[String], cfg: &SuiteConfig) -> Result<Vec<PropertyCase>> {
    for id in ids {
        property(id)?;
    }
    let selected: Vec<&Property> = PROPERTIES
        .iter()
        .filter(|p| if ids.is_empty() { p.default } else { ids.iter().any(|i| i == p.id) })
        .collect();
    let ctx = Ctx { seed: cfg.seed, budget: cfg.budget };
    with_pool(cfg.threads, || {
        selected.par_iter().map(|p| run_property(p.id, &ctx)).collect::<Vec<_>>().into_iter().flatten().collect()
    })
}

/// Report text: a header, one line per case, and a summary block.
pub fn format_report(cases: &[PropertyCase], cfg: &SuiteConfig) -> String {
    let mut out = String::new();
    writeln!(out, "# softtop suite seed={} budget={}", cfg.seed, cfg.budget).unwrap();
    for c in cases {
        writeln!(out, "{}", c.line()).unwrap();
    }
    let failing: Vec<&str> = {
        let mut v: Vec<&str> = cases.iter().filter(|c| !c.holds()).map(|c| c.property.as_str()).collect();
        v.dedup();
        v
    };
    let props = {
        let mut v: Vec<&str> = cases.iter().map(|c| c.property.as_str()).collect();
        v.dedup();
        v.len()
    };
    writeln!(out, "# summary").unwrap();
    writeln!(out, "properties: {props}").unwrap();
    writeln!(out, "cases: {}", cases.len()).unwrap();
    writeln!(out, "instances: {}", cases.iter().map(|c| c.checked).sum::<usize>()).unwrap();
    writeln!(out, "failing cases: {}", cases.iter().filter(|c| !c.holds()).count()).unwrap();
    writeln!(out, "failing properties: {}", if failing.is_empty() { "none".to_string() } else { failing.join(", ") })
        .unwrap();
    out
}

/// Result of a counterexample search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(PropertyCase),
    Exhausted { tried: usize },
}

/// Looks for a failing instance of one property. Random-instance properties
/// are searched size class by size class (smallest first), up to `budget`
/// candidates in total; the others scan their suite populations.
pub fn search_counterexample(id: &str, budget: usize, seed: u64, threads: Option<usize>) -> Result<SearchOutcome> {
    property(id)?;
    let ctx = Ctx { seed, budget };
    with_pool(threads, || {
        if let Some(r) = spaces::search(id, &ctx) {
            return r;
        }
        let cases = run_property(id, &ctx);
        let tried = cases.iter().map(|c| c.checked).sum();
        match cases.into_iter().find(|c| !c.holds()) {
            Some(c) => SearchOutcome::Found(c),
            None => SearchOutcome::Exhausted { tried },
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_property_is_rejected() {
        assert!(matches!(run_suite(&["thm-9.9".into()], &SuiteConfig::default()), Err(Error::UnknownProperty(_))));
    }

    #[test]
    fn tallies_keep_the_first_witness() {
        let mut a = Tally::default();
        a.record(true, || Value::Null);
        let mut b = Tally::default();
        b.record(false, || Value::from(1));
        b.record(false, || Value::from(2));
        let t = a.merge(b);
        assert_eq!((t.checked, t.violations, t.witness), (3, 2, Some(Value::from(1))));
    }
}
