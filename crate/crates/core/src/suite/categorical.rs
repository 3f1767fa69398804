//! Properties of the category of soft topological groups.

use std::sync::OnceLock;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::groups::verified;
use super::{par_tally, Ctx, PropertyCase, Tally};
use crate::category::{
    compose, default_probes, homset, identity, is_epimorphism, is_monomorphism, mediating_morphism, monoidal_law_check,
    product_object, terminal_object, CancellationVerdict, ProductCone, STGrpMorphism, STGrpObject,
};
use crate::soft_group::fixtures;

/// Named fixture objects, all with `|G| ≤ 4` and `|ξ| ≤ 2`.
fn objects() -> &'static [(&'static str, STGrpObject)] {
    static O: OnceLock<Vec<(&'static str, STGrpObject)>> = OnceLock::new();
    O.get_or_init(|| {
        vec![
            ("terminal", terminal_object()),
            ("trivial-2p", STGrpObject::new(fixtures::trivial(2))),
            ("z2-indiscrete", STGrpObject::new(fixtures::z2_indiscrete(1))),
            ("z2-discrete", STGrpObject::new(fixtures::z2_all_absolute(1))),
            ("z2-discrete-2p", STGrpObject::new(fixtures::z2_all_absolute(2))),
            ("z3-discrete", STGrpObject::new(fixtures::z3_all_absolute(1))),
            ("z4-coset", STGrpObject::new(fixtures::z4_coset(1))),
            ("klein-coset", STGrpObject::new(fixtures::klein_coset(1))),
        ]
    })
}

/// `homs[a][b]` for the fixture objects.
fn homsets() -> &'static Vec<Vec<Vec<STGrpMorphism>>> {
    static H: OnceLock<Vec<Vec<Vec<STGrpMorphism>>>> = OnceLock::new();
    H.get_or_init(|| {
        let o = objects();
        o.par_iter().map(|(_, a)| o.iter().map(|(_, b)| homset(a, b)).collect()).collect()
    })
}

fn morphism_json(f: &STGrpMorphism, src: &str, dst: &str) -> Value {
    json!({"source": src, "target": dst, "phi": f.phi(), "rho": f.rho()})
}

fn category_laws(assoc: bool) -> Tally {
    let o = objects();
    let h = homsets();
    let idx: Vec<usize> = (0..o.len()).collect();
    par_tally(&idx, |&a| {
        let mut tally = Tally::default();
        for b in 0..o.len() {
            for f in &h[a][b] {
                if !assoc {
                    let left = compose(f, &identity(&o[a].1)).ok();
                    let right = compose(&identity(&o[b].1), f).ok();
                    tally.record(left.as_ref() == Some(f) && right.as_ref() == Some(f), || {
                        json!({"law": "identity", "morphism": morphism_json(f, o[a].0, o[b].0)})
                    });
                }
                for c in 0..o.len() {
                    for g in &h[b][c] {
                        let gf = compose(g, f);
                        if !assoc {
                            tally.record(gf.is_ok(), || {
                                json!({"first": morphism_json(f, o[a].0, o[b].0), "second": morphism_json(g, o[b].0, o[c].0)})
                            });
                            continue;
                        }
                        let gf = gf.expect("composites verify");
                        for d in 0..o.len() {
                            for k in &h[c][d] {
                                let left = compose(k, &gf).ok();
                                let right = compose(&compose(k, g).expect("composites verify"), f).ok();
                                tally.record(left.is_some() && left == right, || {
                                    json!({
                                        "law": "associativity",
                                        "f": morphism_json(f, o[a].0, o[b].0),
                                        "g": morphism_json(g, o[b].0, o[c].0),
                                        "h": morphism_json(k, o[c].0, o[d].0),
                                    })
                                });
                            }
                        }
                    }
                }
            }
        }
        tally
    })
}

struct Cancellation {
    src: &'static str,
    dst: &'static str,
    m: STGrpMorphism,
    mono: CancellationVerdict,
    epi: CancellationVerdict,
}

fn cancellation_table() -> &'static [Cancellation] {
    static T: OnceLock<Vec<Cancellation>> = OnceLock::new();
    T.get_or_init(|| {
        let o = objects();
        let h = homsets();
        let all: Vec<(usize, usize, STGrpMorphism)> = (0..o.len())
            .flat_map(|a| (0..o.len()).flat_map(move |b| h[a][b].iter().map(move |m| (a, b, m.clone()))))
            .collect();
        all.into_par_iter()
            .map(|(a, b, m)| {
                let probes = default_probes(&m);
                let mono = is_monomorphism(&m, &probes);
                let epi = is_epimorphism(&m, &probes);
                Cancellation { src: o[a].0, dst: o[b].0, m, mono, epi }
            })
            .collect()
    })
}

fn injective(f: &[usize]) -> bool {
    let mut v = f.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len() == f.len()
}

fn surjective(f: &[usize], n: usize) -> bool {
    let mut v = f.to_vec();
    v.sort_unstable();
    v.dedup();
    v.len() == n
}

fn cancellation(id: &str) -> Tally {
    let mut tally = Tally::default();
    for c in cancellation_table() {
        let ok = match id {
            "prop-6.6" => (!c.mono.certificate || c.mono.holds()) && (!c.epi.certificate || c.epi.holds()),
            "prop-6.8" => !c.mono.holds() || injective(c.m.rho()),
            _ => !c.epi.holds() || surjective(c.m.rho(), c.m.target().group().order()),
        };
        tally.record(ok, || {
            json!({
                "morphism": morphism_json(&c.m, c.src, c.dst),
                "mono": {"certificate": c.mono.certificate, "brute_force": c.mono.holds()},
                "epi": {"certificate": c.epi.certificate, "brute_force": c.epi.holds()},
                "label": c.mono.label(),
            })
        });
    }
    tally
}

fn cones() -> &'static Vec<Vec<Option<ProductCone>>> {
    static C: OnceLock<Vec<Vec<Option<ProductCone>>>> = OnceLock::new();
    C.get_or_init(|| {
        let o = objects();
        o.par_iter().map(|(_, a)| o.iter().map(|(_, b)| product_object(a, b).ok()).collect()).collect()
    })
}

fn projections() -> Tally {
    let o = objects();
    let mut tally = Tally::default();
    for (a, row) in cones().iter().enumerate() {
        for (b, cone) in row.iter().enumerate() {
            tally.record(cone.is_some(), || json!({"left": o[a].0, "right": o[b].0}));
        }
    }
    tally
}

fn universal_property() -> Tally {
    let o = objects();
    let h = homsets();
    let triples: Vec<(usize, usize, usize)> =
        (0..o.len()).flat_map(|x| (0..o.len()).flat_map(move |a| (0..o.len()).map(move |b| (x, a, b)))).collect();
    par_tally(&triples, |&(x, a, b)| {
        let mut tally = Tally::default();
        let Some(cone) = &cones()[a][b] else {
            tally.record(false, || json!({"left": o[a].0, "right": o[b].0, "error": "no product"}));
            return tally;
        };
        let into_product = homset(&o[x].1, &cone.object);
        let legs: Vec<(STGrpMorphism, STGrpMorphism)> = into_product
            .iter()
            .map(|u| (compose(&cone.first, u).unwrap(), compose(&cone.second, u).unwrap()))
            .collect();
        for f1 in &h[x][a] {
            for f2 in &h[x][b] {
                let med = mediating_morphism(cone, f1, f2);
                let exists = med.as_ref().is_ok_and(|m| {
                    compose(&cone.first, m).ok().as_ref() == Some(f1) && compose(&cone.second, m).ok().as_ref() == Some(f2)
                });
                let count = legs.iter().filter(|(l1, l2)| l1 == f1 && l2 == f2).count();
                tally.record(exists && count == 1, || {
                    json!({
                        "apex": o[x].0,
                        "f1": morphism_json(f1, o[x].0, o[a].0),
                        "f2": morphism_json(f2, o[x].0, o[b].0),
                        "mediating_exists": exists,
                        "morphisms_with_these_projections": count,
                    })
                });
            }
        }
        tally
    })
}

fn terminal_homsets() -> Tally {
    let t = terminal_object();
    let mut tally = Tally::default();
    for (name, a) in objects() {
        tally.record(homset(a, &t).len() == 1, || json!({"object": name}));
    }
    for (name, s) in verified() {
        let a = STGrpObject::new(s.clone());
        tally.record(homset(&a, &t).len() == 1, || json!({"object": name}));
    }
    tally
}

fn monoidal() -> Tally {
    let o = objects();
    let h = homsets();
    // Objects whose fourfold products stay small.
    let small: Vec<usize> = (0..o.len()).filter(|&i| o[i].1.group().order() <= 2).collect();
    let mut quads: Vec<[usize; 4]> = Vec::new();
    for &a in &small {
        for &b in &small {
            for &c in &small {
                for &d in &small {
                    let q = [a, b, c, d];
                    if q.iter().map(|&i| o[i].1.params().len()).product::<usize>() <= 4 {
                        quads.push(q);
                    }
                }
            }
        }
    }
    par_tally(&quads, |&[a, b, c, d]| {
        let mut tally = Tally::default();
        let f = h[a][c].last().expect("constant morphisms always exist");
        let g = h[b][d].last().expect("constant morphisms always exist");
        let r = monoidal_law_check([&o[a].1, &o[b].1, &o[c].1, &o[d].1], f, g);
        tally.record(r.holds(), || {
            json!({"objects": [o[a].0, o[b].0, o[c].0, o[d].0], "report": format!("{r:?}")})
        });
        tally
    })
}

pub(crate) fn run(id: &str, _ctx: &Ctx) -> Option<Vec<PropertyCase>> {
    let names: Vec<&str> = objects().iter().map(|(n, _)| *n).collect();
    let fixtures = format!("fixture objects {{{}}}", names.join(","));
    let (tally, population) = match id {
        "prop-6.4" => (category_laws(false), format!("composable pairs and identities over {fixtures}")),
        "thm-6.5" => (category_laws(true), format!("composable triples over {fixtures}")),
        "prop-6.6" | "prop-6.8" | "prop-6.9" => {
            (cancellation(id), format!("every morphism between {fixtures}; probes: enumerated objects, zoo, source, target, kernel, quotient"))
        }
        "thm-6.12" => (projections(), format!("pairs of {fixtures}")),
        "thm-6.13" => (universal_property(), format!("all cones from and over {fixtures}")),
        "thm-6.14" => (terminal_homsets(), format!("{fixtures} and every verified enumerated group")),
        "cor-6.15" => (monoidal(), format!("quadruples of order <= 2 objects among {fixtures}")),
        _ => return None,
    };
    Some(vec![tally.into_case(id, population)])
}
