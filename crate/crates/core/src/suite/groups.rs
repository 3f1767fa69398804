//! Properties of soft topological groups.

use std::sync::OnceLock;

use serde_json::{json, Value};

use super::spaces::{enumerated, mapping_json, space_json};
use super::{par_tally, Ctx, PropertyCase, Tally};
use crate::connectivity::{is_soft_path, is_soft_path_connected, StepPath};
use crate::enumerate::{all_functions, enumerated_group_spaces};
use crate::group::FiniteGroup;
use crate::io::{GroupBlock, SpaceDocument};
use crate::soft::SoftMapping;
use crate::soft_group::{
    connected_group_open_subgroup_check, continuity_at_identity_equivalence, fixtures, multiplication_soft_continuous,
    open_subgroups, pointwise_product_map, pointwise_product_path, product_soft_top_group, subgroup_soft_top_group,
    subset_product_connectivity, translation_check, verify_soft_topological_group, verify_via_division, Side, SoftTopGroup,
};
use crate::subset::Subset;
use crate::topology::{continuity_holds, product_topology, SoftTopology};

pub(crate) fn group_json(g: &FiniteGroup, t: &SoftTopology) -> Value {
    let mut d = SpaceDocument::from_topology(t);
    d.group = Some(GroupBlock {
        table: g.table().iter().map(|row| row.iter().map(|&c| g.label(c).to_string()).collect()).collect(),
        identity: g.label(g.identity()).to_string(),
    });
    serde_json::to_value(d).unwrap()
}

fn stg_json(s: &SoftTopGroup) -> Value {
    group_json(s.group(), s.topology())
}

/// Every soft topology on the small groups, then the fixture zoo.
pub(crate) fn candidates() -> &'static [(String, FiniteGroup, SoftTopology)] {
    static C: OnceLock<Vec<(String, FiniteGroup, SoftTopology)>> = OnceLock::new();
    C.get_or_init(|| {
        let mut v = enumerated_group_spaces();
        for (name, s) in fixtures::zoo() {
            v.push((name.to_string(), s.group().clone(), s.topology().clone()));
        }
        v
    })
}

/// The candidates that verify as soft topological groups.
pub(crate) fn verified() -> &'static [(String, SoftTopGroup)] {
    static V: OnceLock<Vec<(String, SoftTopGroup)>> = OnceLock::new();
    V.get_or_init(|| {
        candidates()
            .iter()
            .filter_map(|(n, g, t)| SoftTopGroup::new(g.clone(), t.clone()).ok().map(|s| (n.clone(), s)))
            .collect()
    })
}

const POPULATION: &str = "all soft topologies on the trivial group and Z2 (<=2 params), Z3, Z4, Klein (1 param), plus the fixture zoo";

fn per_group(f: impl Fn(&str, &SoftTopGroup, &mut Tally) + Sync + Send) -> Tally {
    par_tally(verified(), |(name, s)| {
        let mut t = Tally::default();
        f(name, s, &mut t);
        t
    })
}

fn nonempty_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (1..1u64 << n).map(Subset::from_bits)
}

fn division_agrees() -> Tally {
    par_tally(candidates(), |(name, g, t)| {
        let mut tally = Tally::default();
        let a = verify_soft_topological_group(g, t).unwrap().holds();
        let b = verify_via_division(g, t).unwrap().holds();
        tally.record(a == b, || json!({"name": name, "space": group_json(g, t), "direct": a, "division": b}));
        tally
    })
}

fn continuous_point_maps(src: &SoftTopology, dst: &SoftTopGroup) -> Vec<Vec<usize>> {
    all_functions(src.universe().len(), dst.order())
        .filter(|rho| {
            let m = SoftMapping::with_identity_params(
                src.universe().clone(),
                dst.topology().universe().clone(),
                src.params().clone(),
                rho.clone(),
            )
            .unwrap();
            continuity_holds(&m, src, dst.topology())
        })
        .collect()
}

fn pointwise_products() -> Tally {
    per_group(|name, b, tally| {
        let m = b.params().len();
        if m > 2 {
            return;
        }
        for n in 1..=2 {
            for s in enumerated(n, m).iter() {
                let maps = continuous_point_maps(&s.t, b);
                for r1 in &maps {
                    for r2 in &maps {
                        let prod = pointwise_product_map(b.group(), r1, r2);
                        let map = SoftMapping::with_identity_params(
                            s.t.universe().clone(),
                            b.topology().universe().clone(),
                            s.t.params().clone(),
                            prod.clone(),
                        )
                        .unwrap();
                        tally.record(continuity_holds(&map, &s.t, b.topology()), || {
                            json!({"group": name, "first": mapping_json(&s.t, b.topology(), None, r1), "second": r2})
                        });
                    }
                }
            }
        }
    })
}

fn soft_paths(s: &SoftTopGroup) -> Vec<StepPath> {
    let n = s.order();
    let max_pieces = if n <= 2 { 2 } else { 1 };
    let mut out = Vec::new();
    for k in 1..=max_pieces {
        for pieces in all_functions(k, n) {
            for points in all_functions(k + 1, n) {
                let p = StepPath::equally_spaced(pieces.clone(), points).unwrap();
                if is_soft_path(&p, s.topology()).unwrap().holds() {
                    out.push(p);
                }
            }
        }
    }
    out
}

fn path_products() -> Tally {
    per_group(|name, s, tally| {
        let paths = soft_paths(s);
        for p in &paths {
            for q in &paths {
                let r = pointwise_product_path(s, p, q);
                tally.record(r.is_ok(), || {
                    json!({
                        "group": name,
                        "p": {"pieces": p.pieces(), "points": p.points()},
                        "q": {"pieces": q.pieces(), "points": q.points()},
                        "error": r.as_ref().err().map(|e| e.to_string()),
                    })
                });
            }
        }
    })
}

fn translations_and_connected_products() -> Tally {
    per_group(|name, s, tally| {
        for h in 0..s.order() {
            for side in [Side::Left, Side::Right] {
                let ok = translation_check(s, h, side).unwrap();
                tally.record(ok, || json!({"group": name, "space": stg_json(s), "translation": s.group().label(h), "side": format!("{side:?}")}));
            }
        }
        for h in nonempty_subsets(s.order()) {
            for k in nonempty_subsets(s.order()) {
                let r = subset_product_connectivity(s, h, k).unwrap();
                let ok = !(r.factors_connected.0 && r.factors_connected.1) || r.product_connected;
                tally.record(ok, || subset_witness(name, s, h, k));
            }
        }
    })
}

fn subset_witness(name: &str, s: &SoftTopGroup, h: Subset, k: Subset) -> Value {
    let u = s.topology().universe();
    json!({"group": name, "space": stg_json(s), "h": u.names(h), "k": u.names(k)})
}

fn path_connected_subset_products() -> Tally {
    per_group(|name, s, tally| {
        for h in nonempty_subsets(s.order()) {
            for k in nonempty_subsets(s.order()) {
                let r = subset_product_connectivity(s, h, k).unwrap();
                let ok = !(r.factors_path_connected.0 && r.factors_path_connected.1) || r.product_path_connected;
                tally.record(ok, || subset_witness(name, s, h, k));
            }
        }
    })
}

/// Spaces whose products are cheap to build: every soft topology with
/// `|X|·|ξ| ≤ 2` and every verified group with `|G|·|ξ| ≤ 4`.
fn product_factors() -> Vec<(String, SoftTopology)> {
    let mut out = Vec::new();
    for (n, m) in [(1, 1), (2, 1), (1, 2)] {
        for (i, s) in enumerated(n, m).iter().enumerate() {
            out.push((format!("space/{n}x{m}/#{i}"), s.t.clone()));
        }
    }
    for (name, s) in verified() {
        if s.order() * s.params().len() <= 4 {
            out.push((name.clone(), s.topology().clone()));
        }
    }
    out
}

fn path_connected_products() -> Tally {
    let factors = product_factors();
    let pc: Vec<bool> = factors.iter().map(|(_, t)| is_soft_path_connected(t).holds()).collect();
    let idx: Vec<usize> = (0..factors.len()).collect();
    par_tally(&idx, |&i| {
        let mut tally = Tally::default();
        for j in 0..factors.len() {
            if !(pc[i] && pc[j]) {
                continue;
            }
            let p = product_topology(&factors[i].1, &factors[j].1).unwrap();
            tally.record(is_soft_path_connected(&p).holds(), || {
                json!({"left": factors[i].0, "right": factors[j].0, "left_space": space_json(&factors[i].1), "right_space": space_json(&factors[j].1)})
            });
        }
        tally
    })
}

fn identity_continuity() -> Tally {
    let v = verified();
    par_tally(v, |(an, a)| {
        let mut tally = Tally::default();
        for (bn, b) in v {
            if a.params() != b.params() {
                continue;
            }
            for rho in a.group().homomorphisms(b.group()) {
                let r = continuity_at_identity_equivalence(a, b, &rho).unwrap();
                tally.record(r.agree(), || {
                    json!({"source": an, "target": bn, "rho": rho, "at_identity": r.at_identity, "everywhere": r.everywhere})
                });
            }
        }
        tally
    })
}

fn product_groups() -> Tally {
    let small: Vec<&(String, SoftTopGroup)> = verified().iter().filter(|(_, s)| s.order() * s.params().len() <= 4).collect();
    par_tally(&small, |(an, a)| {
        let mut tally = Tally::default();
        for (bn, b) in &small {
            let r = product_soft_top_group(a, b);
            tally.record(r.is_ok(), || json!({"left": an, "right": bn, "error": r.as_ref().err().map(|e| e.to_string())}));
        }
        tally
    })
}

pub(crate) fn run(id: &str, _ctx: &Ctx) -> Option<Vec<PropertyCase>> {
    let tally = match id {
        "prop-2.20" => division_agrees(),
        "thm-5.2" => per_group(|name, s, t| {
            let v = multiplication_soft_continuous(s);
            t.record(v.holds(), || json!({"group": name, "space": stg_json(s), "failure": format!("{:?}", v.witness())}));
        }),
        "prop-5.3" => per_group(|name, s, t| {
            for h in s.group().subgroups() {
                let r = subgroup_soft_top_group(s, h);
                t.record(r.is_ok(), || json!({"group": name, "space": stg_json(s), "subgroup": s.topology().universe().names(h)}));
            }
        }),
        "prop-5.4" => per_group(|name, s, t| {
            for o in open_subgroups(s) {
                t.record(o.closed, || json!({"group": name, "space": stg_json(s), "subgroup": s.topology().universe().names(o.subgroup)}));
            }
        }),
        "prop-5.5" => per_group(|name, s, t| {
            let r = connected_group_open_subgroup_check(s);
            t.record(r.holds(), || {
                let u = s.topology().universe();
                json!({"group": name, "space": stg_json(s), "open_proper_subgroups": r.violations.iter().map(|h| u.names(*h)).collect::<Vec<_>>()})
            });
        }),
        "prop-5.6" => pointwise_products(),
        "ex-5.7" => path_products(),
        "prop-5.8" => translations_and_connected_products(),
        "thm-5.9" => path_connected_products(),
        "thm-5.10" => path_connected_subset_products(),
        "thm-5.11" => identity_continuity(),
        "product-group" => product_groups(),
        _ => return None,
    };
    let population = match id {
        "thm-5.9" => "products of spaces with |X|x|params|<=2 and groups with |G|x|params|<=4".to_string(),
        "product-group" => "products of verified groups with |G|x|params|<=4".to_string(),
        "prop-2.20" => POPULATION.to_string(),
        _ => format!("verified groups among: {POPULATION}"),
    };
    Some(vec![tally.into_case(id, population)])
}
