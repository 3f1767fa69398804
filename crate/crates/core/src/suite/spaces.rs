//! Properties of soft sets, soft topological spaces and mappings between them.

use std::collections::BTreeMap;
use std::sync::{Arc, Mutex};

use indexmap::IndexMap;
use rand::Rng;
use serde_json::{json, Value};

use super::{par_tally, Ctx, PropertyCase, SearchOutcome, Tally};
use crate::connectivity::{
    brute_force_path_exists, is_soft_connected, is_soft_connected_subset, is_soft_path, is_soft_path_connected, StepPath,
};
use crate::enumerate::{all_functions, all_soft_sets, enumerate_soft_topologies, random_space};
use crate::error::{Error, Result};
use crate::instances;
use crate::io::{MappingDocument, SpaceDocument, SpaceRef};
use crate::real_line::{int, rat, IntervalSet, SoftIntervalSet};
use crate::soft::{
    is_soft_element, is_soft_subset, soft_equal, soft_intersection, soft_union, ParamSet, SoftMapping, SoftSet, Universe,
};
use crate::subset::Subset;
use crate::topology::{
    continuity_holds, inverse_images_all_open, product_topology, subspace_topology, verify_topology, SoftTopology,
};

/// A space with its connectivity data precomputed for every subset.
pub(crate) struct SpaceInfo {
    pub t: SoftTopology,
    pub connected: bool,
    pub path_connected: bool,
    /// Indexed by subset bits; the empty subset counts as connected.
    pub conn_sub: Vec<bool>,
    pub path_sub: Vec<bool>,
}

pub(crate) fn info(t: SoftTopology) -> SpaceInfo {
    let n = t.universe().len();
    let mut conn_sub = vec![true; 1 << n];
    let mut path_sub = vec![true; 1 << n];
    for bits in 1..1u64 << n {
        let a = Subset::from_bits(bits);
        conn_sub[bits as usize] = is_soft_connected_subset(&t, a).expect("nonempty subset").connected;
        path_sub[bits as usize] = is_soft_path_connected(&subspace_topology(&t, a).expect("nonempty subset")).holds();
    }
    let full = (1usize << n) - 1;
    SpaceInfo { connected: conn_sub[full], path_connected: path_sub[full], conn_sub, path_sub, t }
}

/// All soft topologies of a size, with connectivity data; cached per run.
pub(crate) fn enumerated(n: usize, m: usize) -> Arc<Vec<SpaceInfo>> {
    static CACHE: Mutex<BTreeMap<(usize, usize), Arc<Vec<SpaceInfo>>>> = Mutex::new(BTreeMap::new());
    if let Some(v) = CACHE.lock().unwrap().get(&(n, m)) {
        return v.clone();
    }
    let v: Arc<Vec<SpaceInfo>> =
        Arc::new(enumerate_soft_topologies(n, m).expect("size within the enumeration limit").into_iter().map(info).collect());
    CACHE.lock().unwrap().entry((n, m)).or_insert(v).clone()
}

fn population(sizes: &[(usize, usize)]) -> String {
    let s: Vec<String> = sizes.iter().map(|(n, m)| format!("{n}x{m}")).collect();
    format!("exhaustive |X|x|params| in {{{}}}", s.join(","))
}

pub(crate) fn space_json(t: &SoftTopology) -> Value {
    serde_json::to_value(SpaceDocument::from_topology(t)).unwrap()
}

fn mapping_document(s: &SoftTopology, t: &SoftTopology, phi: Option<&[usize]>, rho: &[usize]) -> MappingDocument {
    let (su, tu) = (s.universe(), t.universe());
    let rho_map: IndexMap<String, String> = rho.iter().enumerate().map(|(x, &y)| (su.label(x).into(), tu.label(y).into())).collect();
    let phi_map = phi.map(|phi| {
        phi.iter()
            .enumerate()
            .map(|(e, &f)| (s.params().label(e).to_string(), t.params().label(f).to_string()))
            .collect()
    });
    MappingDocument {
        source: SpaceRef::Inline(Box::new(SpaceDocument::from_topology(s))),
        target: SpaceRef::Inline(Box::new(SpaceDocument::from_topology(t))),
        phi: phi_map,
        rho: rho_map,
    }
}

pub(crate) fn mapping_json(s: &SoftTopology, t: &SoftTopology, phi: Option<&[usize]>, rho: &[usize]) -> Value {
    serde_json::to_value(mapping_document(s, t, phi, rho)).unwrap()
}

fn identity_params_map(s: &SoftTopology, t: &SoftTopology, rho: &[usize]) -> SoftMapping {
    SoftMapping::with_identity_params(s.universe().clone(), t.universe().clone(), s.params().clone(), rho.to_vec())
        .expect("total map over shared parameters")
}

fn image_bits(rho: &[usize], a: Subset) -> usize {
    a.iter().fold(0usize, |acc, x| acc | 1 << rho[x])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum MapProp {
    ConnectedImage,
    ImageDisconnected,
    OpenPreimages,
    Converse,
    PathConnectedImage,
}

fn map_prop(id: &str) -> Option<MapProp> {
    Some(match id {
        "thm-3.4" => MapProp::ConnectedImage,
        "not-thm-3.4" => MapProp::ImageDisconnected,
        "prop-2.16" => MapProp::OpenPreimages,
        "prop-2.16-converse" => MapProp::Converse,
        "thm-4.7" => MapProp::PathConnectedImage,
        _ => return None,
    })
}

/// Checks one mapping `(𝕀_ξ, ρ)`; on failure returns extra witness detail.
fn check_map(p: MapProp, s: &SpaceInfo, t: &SpaceInfo, rho: &[usize]) -> std::result::Result<(), Value> {
    let m = identity_params_map(&s.t, &t.t, rho);
    let cont = continuity_holds(&m, &s.t, &t.t);
    let full = s.t.universe().full();
    match p {
        MapProp::ConnectedImage | MapProp::ImageDisconnected => {
            if cont && s.connected {
                let image_connected = t.conn_sub[image_bits(rho, full)];
                if image_connected != (p == MapProp::ConnectedImage) {
                    return Err(json!({"source_connected": true, "image_connected": image_connected}));
                }
            }
            Ok(())
        }
        MapProp::OpenPreimages | MapProp::Converse => {
            let open = inverse_images_all_open(&m, &s.t, &t.t).expect("matching spaces");
            let bad = if p == MapProp::OpenPreimages { open.holds() && !cont } else { cont && !open.holds() };
            if bad {
                return Err(json!({
                    "soft_continuous": cont,
                    "non_open_preimage_of": open.witness().map(|w| w.to_string()),
                }));
            }
            Ok(())
        }
        MapProp::PathConnectedImage => {
            if !cont {
                return Ok(());
            }
            for bits in 1..1u64 << s.t.universe().len() {
                if s.path_sub[bits as usize] && !t.path_sub[image_bits(rho, Subset::from_bits(bits))] {
                    let a = s.t.universe().names(Subset::from_bits(bits));
                    return Err(json!({"path_connected_subset": a}));
                }
            }
            Ok(())
        }
    }
}

fn map_witness(s: &SpaceInfo, t: &SpaceInfo, rho: &[usize], detail: Value) -> Value {
    json!({"mapping": mapping_json(&s.t, &t.t, None, rho), "detail": detail})
}

const MAP_SIZES: [(usize, usize, usize); 8] =
    [(1, 1, 1), (1, 2, 1), (2, 1, 1), (2, 2, 1), (1, 1, 2), (1, 2, 2), (2, 1, 2), (2, 2, 2)];

fn map_exhaustive(p: MapProp) -> Tally {
    MAP_SIZES.iter().fold(Tally::default(), |acc, &(n1, n2, m)| {
        let src = enumerated(n1, m);
        let dst = enumerated(n2, m);
        let maps: Vec<Vec<usize>> = all_functions(n1, n2).collect();
        acc.merge(par_tally(&src, |s| {
            let mut tally = Tally::default();
            for t in dst.iter() {
                for rho in &maps {
                    let r = check_map(p, s, t, rho);
                    tally.record(r.is_ok(), || map_witness(s, t, rho, r.clone().unwrap_err()));
                }
            }
            tally
        }))
    })
}

fn random_info<R: Rng>(rng: &mut R, n: usize, m: usize) -> SpaceInfo {
    let gens = rng.random_range(0..=4);
    info(random_space(rng.random(), n, m, gens).expect("valid size"))
}

fn random_map<R: Rng>(rng: &mut R, n: usize, n2: usize) -> Vec<usize> {
    (0..n).map(|_| rng.random_range(0..n2)).collect()
}

fn map_random(p: MapProp, id: &str, ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng(id, "maps");
    let instances: Vec<(SpaceInfo, SpaceInfo, Vec<usize>)> = (0..ctx.budget)
        .map(|_| {
            let s = random_info(&mut rng, 3, 2);
            let t = random_info(&mut rng, 3, 2);
            let rho = random_map(&mut rng, 3, 3);
            (s, t, rho)
        })
        .collect();
    par_tally(&instances, |(s, t, rho)| {
        let mut tally = Tally::default();
        let r = check_map(p, s, t, rho);
        tally.record(r.is_ok(), || map_witness(s, t, rho, r.clone().unwrap_err()));
        tally
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum SpaceProp {
    ParameterTopologies,
    PathImpliesConnected,
    OraclePath,
}

fn space_prop(id: &str) -> Option<SpaceProp> {
    Some(match id {
        "prop-2.8" => SpaceProp::ParameterTopologies,
        "thm-4.12" => SpaceProp::PathImpliesConnected,
        "oracle-path" => SpaceProp::OraclePath,
        _ => return None,
    })
}

fn check_space(p: SpaceProp, s: &SpaceInfo) -> std::result::Result<(), Value> {
    match p {
        SpaceProp::ParameterTopologies => {
            for e in 0..s.t.params().len() {
                if !s.t.parameter_topology_at(e).check_axioms() {
                    return Err(json!({"parameter": s.t.params().label(e)}));
                }
            }
            Ok(())
        }
        SpaceProp::PathImpliesConnected => {
            if s.path_connected && !s.connected {
                return Err(json!({"path_connected": true, "connected": false}));
            }
            Ok(())
        }
        SpaceProp::OraclePath => {
            let n = s.t.universe().len();
            let oracle = (0..n).all(|x| (0..n).all(|y| brute_force_path_exists(&s.t, x, y, n)));
            if oracle != s.path_connected {
                return Err(json!({"fence": s.path_connected, "brute_force": oracle}));
            }
            Ok(())
        }
    }
}

fn space_sizes(p: SpaceProp) -> &'static [(usize, usize)] {
    match p {
        SpaceProp::ParameterTopologies => &[(1, 1), (2, 1), (1, 2), (2, 2)],
        SpaceProp::PathImpliesConnected | SpaceProp::OraclePath => &[(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)],
    }
}

fn space_witness(s: &SpaceInfo, detail: Value) -> Value {
    json!({"space": space_json(&s.t), "detail": detail})
}

fn space_tally(p: SpaceProp, spaces: &[SpaceInfo]) -> Tally {
    par_tally(spaces, |s| {
        let mut tally = Tally::default();
        let r = check_space(p, s);
        tally.record(r.is_ok(), || space_witness(s, r.clone().unwrap_err()));
        tally
    })
}

fn random_spaces(ctx: &Ctx, id: &str, n: usize, m: usize) -> Vec<SpaceInfo> {
    let mut rng = ctx.rng(id, "spaces");
    (0..ctx.budget).map(|_| random_info(&mut rng, n, m)).collect()
}

fn soft_set_laws() -> Tally {
    let mut tally = Tally::default();
    for (n, m) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let x = Universe::range(n).unwrap();
        let p = ParamSet::numbered(m).unwrap();
        let sets: Vec<SoftSet> =
            all_soft_sets(n, m).map(|s| SoftSet::new(x.clone(), p.clone(), s).unwrap()).collect();
        for u in &sets {
            for v in &sets {
                let uv = soft_union(u, v).unwrap();
                let iv = soft_intersection(u, v).unwrap();
                let ok = uv == soft_union(v, u).unwrap()
                    && iv == soft_intersection(v, u).unwrap()
                    && soft_intersection(u, &uv).unwrap() == *u
                    && soft_union(u, &iv).unwrap() == *u
                    && (is_soft_subset(u, v).unwrap() && is_soft_subset(v, u).unwrap()) == soft_equal(u, v).unwrap();
                tally.record(ok, || json!({"laws": "commutativity/absorption/equality", "u": u.to_string(), "v": v.to_string()}));
                for w in &sets {
                    let ok = soft_union(&uv, w).unwrap() == soft_union(u, &soft_union(v, w).unwrap()).unwrap()
                        && soft_intersection(&iv, w).unwrap()
                            == soft_intersection(u, &soft_intersection(v, w).unwrap()).unwrap();
                    tally.record(ok, || json!({"laws": "associativity", "u": u.to_string(), "v": v.to_string(), "w": w.to_string()}));
                }
            }
        }
        for a in 0..1u64 << n {
            for b in 0..1u64 << n {
                let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
                let abs = |s| SoftSet::make_absolute(x.clone(), p.clone(), s);
                let ok = soft_union(&abs(a), &abs(b)).unwrap() == abs(a.union(b))
                    && soft_intersection(&abs(a), &abs(b)).unwrap() == abs(a.intersection(b))
                    && (0..n).all(|i| is_soft_element(x.label(i), &abs(a)).unwrap() == a.contains(i));
                tally.record(ok, || json!({"laws": "absolute sets", "a": x.names(a), "b": x.names(b)}));
            }
        }
    }
    // W ⊑ preimage(image(W)) for every mapping between small spaces.
    for (n, m, n2, m2) in [(1, 1, 2, 2), (2, 1, 2, 2), (2, 2, 1, 1), (2, 2, 2, 1), (2, 2, 2, 2), (1, 2, 2, 1)] {
        let (x, p) = (Universe::range(n).unwrap(), ParamSet::numbered(m).unwrap());
        let (x2, p2) = (Universe::range(n2).unwrap(), ParamSet::numbered(m2).unwrap());
        for phi in all_functions(m, m2) {
            for rho in all_functions(n, n2) {
                let map = SoftMapping::new(x.clone(), p.clone(), x2.clone(), p2.clone(), phi.clone(), rho.clone()).unwrap();
                for w in all_soft_sets(n, m) {
                    let w = SoftSet::new(x.clone(), p.clone(), w).unwrap();
                    let ok = image_preimage_contains(&map, &w).unwrap();
                    tally.record(ok, || json!({"laws": "preimage of image", "phi": phi, "rho": rho, "w": w.to_string()}));
                }
            }
        }
    }
    tally
}

/// The image lives over `φ(ξ)`; extend it by empty slices to all of `ξ′`
/// before pulling it back.
fn image_preimage_contains(map: &SoftMapping, w: &SoftSet) -> Result<bool> {
    let img = map.image(w)?;
    let p2 = map.dst_params();
    let slices = (0..p2.len())
        .map(|e| img.params().position(p2.label(e)).map_or(Subset::EMPTY, |i| img.slice(i)))
        .collect();
    let full = SoftSet::new(map.dst_universe().clone(), p2.clone(), slices)?;
    is_soft_subset(w, &map.inverse_image(&full)?)
}

fn valid(t: &SoftTopology) -> bool {
    verify_topology(&t.opens()).map(|r| r.is_valid()).unwrap_or(false)
}

fn constructions(ctx: &Ctx) -> Vec<PropertyCase> {
    let id = "constructions";
    let mut rng = ctx.rng(id, "subbases");
    let mut random = Tally::default();
    for _ in 0..ctx.budget {
        let gens = rng.random_range(0..=4);
        let t = random_space(rng.random(), 3, 2, gens).unwrap();
        random.record(valid(&t), || space_json(&t));
    }
    let mut sub = Tally::default();
    for (n, m) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)] {
        for s in enumerated(n, m).iter() {
            for bits in 1..1u64 << n {
                let a = Subset::from_bits(bits);
                let st = subspace_topology(&s.t, a).unwrap();
                sub.record(valid(&st), || json!({"space": space_json(&s.t), "subset": s.t.universe().names(a)}));
            }
        }
    }
    let small = small_spaces();
    let mut prod = Tally::default();
    for a in &small {
        for b in &small {
            let ok = product_topology(a, b).map(|t| valid(&t)).unwrap_or(false);
            prod.record(ok, || json!({"left": space_json(a), "right": space_json(b)}));
        }
    }
    vec![
        random.into_case(id, ctx.random_label("subbases of up to 4 soft sets, |X|=3 |params|=2")),
        sub.into_case(id, "subspaces of every enumerated space with |X|<=3, |X|x|params|<=4"),
        prod.into_case(id, "products of every pair of spaces with |X|x|params|<=2"),
    ]
}

fn small_spaces() -> Vec<SoftTopology> {
    [(1, 1), (2, 1), (1, 2)].iter().flat_map(|&(n, m)| enumerated(n, m).iter().map(|s| s.t.clone()).collect::<Vec<_>>()).collect()
}

fn general_maps(s: &SoftTopology, t: &SoftTopology) -> Vec<SoftMapping> {
    let (m, m2, n, n2) = (s.params().len(), t.params().len(), s.universe().len(), t.universe().len());
    let mut out = Vec::new();
    for phi in all_functions(m, m2) {
        for rho in all_functions(n, n2) {
            out.push(
                SoftMapping::new(s.universe().clone(), s.params().clone(), t.universe().clone(), t.params().clone(), phi.clone(), rho)
                    .unwrap(),
            );
        }
    }
    out
}

fn composition(ctx: &Ctx) -> Vec<PropertyCase> {
    let id = "composition";
    let spaces = small_spaces();
    let cont: Vec<Vec<Vec<SoftMapping>>> = spaces
        .iter()
        .map(|s| {
            spaces
                .iter()
                .map(|t| general_maps(s, t).into_iter().filter(|f| continuity_holds(f, s, t)).collect())
                .collect()
        })
        .collect();
    let idx: Vec<usize> = (0..spaces.len()).collect();
    let exhaustive = par_tally(&idx, |&a| {
        let mut tally = Tally::default();
        for b in 0..spaces.len() {
            for c in 0..spaces.len() {
                for f in &cont[a][b] {
                    for g in &cont[b][c] {
                        let h = g.after(f).unwrap();
                        tally.record(continuity_holds(&h, &spaces[a], &spaces[c]), || {
                            json!({
                                "first": mapping_json(&spaces[a], &spaces[b], Some(f.phi()), f.rho()),
                                "second": mapping_json(&spaces[b], &spaces[c], Some(g.phi()), g.rho()),
                            })
                        });
                    }
                }
            }
        }
        tally
    });
    let mut rng = ctx.rng(id, "maps");
    let mut random = Tally::default();
    let mut tries = 0;
    while random.checked < ctx.budget && tries < 50 * ctx.budget.max(1) {
        tries += 1;
        let sp: Vec<SoftTopology> = (0..3)
            .map(|_| {
                let (n, m) = (rng.random_range(1..=3), rng.random_range(1..=2));
                random_space(rng.random(), n, m, rng.random_range(0..=4)).unwrap()
            })
            .collect();
        let rand_map = |rng: &mut rand_chacha::ChaCha8Rng, s: &SoftTopology, t: &SoftTopology| {
            SoftMapping::new(
                s.universe().clone(),
                s.params().clone(),
                t.universe().clone(),
                t.params().clone(),
                random_map(rng, s.params().len(), t.params().len()),
                random_map(rng, s.universe().len(), t.universe().len()),
            )
            .unwrap()
        };
        let f = rand_map(&mut rng, &sp[0], &sp[1]);
        let g = rand_map(&mut rng, &sp[1], &sp[2]);
        if continuity_holds(&f, &sp[0], &sp[1]) && continuity_holds(&g, &sp[1], &sp[2]) {
            let h = g.after(&f).unwrap();
            random.record(continuity_holds(&h, &sp[0], &sp[2]), || {
                json!({
                    "first": mapping_json(&sp[0], &sp[1], Some(f.phi()), f.rho()),
                    "second": mapping_json(&sp[1], &sp[2], Some(g.phi()), g.rho()),
                })
            });
        }
    }
    vec![
        exhaustive.into_case(id, "all continuous pairs between spaces with |X|x|params|<=2, any parameter map"),
        random.into_case(id, ctx.random_label("continuous pairs, |X|<=3 |params|<=2")),
    ]
}

fn path_refinement() -> Tally {
    let extra = [rat(1, 3), rat(1, 2), rat(3, 4)];
    let sizes = [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)];
    sizes.iter().fold(Tally::default(), |acc, &(n, m)| {
        let spaces = enumerated(n, m);
        acc.merge(par_tally(&spaces, |s| {
            let mut tally = Tally::default();
            for k in 1..=2 {
                for pieces in all_functions(k, n) {
                    for points in all_functions(k + 1, n) {
                        let p = StepPath::equally_spaced(pieces.clone(), points).unwrap();
                        let before = is_soft_path(&p, &s.t).unwrap().holds();
                        let after = is_soft_path(&p.refine(&extra), &s.t).unwrap().holds();
                        tally.record(before == after, || {
                            json!({"space": space_json(&s.t), "pieces": p.pieces(), "points": p.points()})
                        });
                    }
                }
            }
            tally
        }))
    })
}

fn example_continuous_not_open() -> Tally {
    let (z, z2, h) = instances::single_point_pair();
    let id = SoftMapping::identity(z.universe().clone(), z.params().clone());
    let cont = continuity_holds(&id, &z, &z2);
    let open = inverse_images_all_open(&id, &z, &z2).unwrap();
    let mut tally = Tally::default();
    let ok = cont && open.witness() == Some(&h) && !z.is_soft_open(&id.inverse_image(&h).unwrap()).unwrap();
    tally.record(ok, || json!({"soft_continuous": cont, "non_open_preimage_of": open.witness().map(|w| w.to_string())}));
    tally
}

fn example_crossed_pair() -> Tally {
    let (t, u, v) = instances::crossed_pair_space();
    let x = t.universe();
    let union_full = soft_union(&u, &v).unwrap() == SoftSet::absolute(x.clone(), t.params().clone());
    let meet_empty = soft_intersection(&u, &v).unwrap().is_soft_empty();
    let no_elements = x.labels().iter().all(|l| !is_soft_element(l, &u).unwrap() && !is_soft_element(l, &v).unwrap());
    let connected = is_soft_connected(&t).connected;
    let mut tally = Tally::default();
    tally.record(union_full && meet_empty && no_elements && connected, || {
        json!({"union_is_absolute": union_full, "meet_is_empty": meet_empty, "no_soft_elements": no_elements, "connected": connected})
    });
    tally
}

fn example_step_paths() -> Tally {
    let (t, u1, _) = instances::nested_pair_space();
    let p = t.params().clone();
    let half_open = IntervalSet::from_interval(&crate::real_line::Interval {
        lo: int(0).into(),
        lo_closed: true,
        hi: rat(1, 2).into(),
        hi_closed: false,
    });
    let expect13 = SoftIntervalSet::new(p.clone(), vec![half_open, IntervalSet::empty()]).unwrap();
    let expect22 = SoftIntervalSet::new(p, vec![IntervalSet::empty(), IntervalSet::unit()]).unwrap();
    let mut tally = Tally::default();
    for (name, path, expect) in
        [("jump 1 to 3", instances::jump_path_1_3(), expect13), ("constant 2", instances::constant_path_2(), expect22)]
    {
        let is_path = is_soft_path(&path, &t).unwrap().holds();
        let pre = path.soft_preimage(&u1);
        let ok = is_path && pre == expect && !pre.is_soft_open_in_unit();
        tally.record(ok, || json!({"path": name, "soft_path": is_path, "preimage_matches": pre == expect}));
    }
    tally
}

pub(crate) fn run(id: &str, ctx: &Ctx) -> Option<Vec<PropertyCase>> {
    if let Some(p) = map_prop(id) {
        return Some(vec![
            map_exhaustive(p).into_case(id, population(&[(1, 1), (2, 1), (1, 2), (2, 2)]) + ", identity parameter map, all point maps"),
            map_random(p, id, ctx).into_case(id, ctx.random_label("mappings between |X|=3 |params|=2 spaces")),
        ]);
    }
    if let Some(p) = space_prop(id) {
        let sizes = space_sizes(p);
        let exhaustive = sizes.iter().fold(Tally::default(), |acc, &(n, m)| acc.merge(space_tally(p, &enumerated(n, m))));
        let random = space_tally(p, &random_spaces(ctx, id, 3, 2));
        return Some(vec![
            exhaustive.into_case(id, population(sizes)),
            random.into_case(id, ctx.random_label("spaces |X|=3 |params|=2")),
        ]);
    }
    Some(match id {
        "soft-set-laws" => vec![soft_set_laws().into_case(id, "all soft sets and mappings with |X|<=2 |params|<=2")],
        "constructions" => constructions(ctx),
        "composition" => composition(ctx),
        "path-refinement" => vec![path_refinement().into_case(id, population(&[(1, 1), (2, 1), (3, 1), (1, 2), (2, 2)]) + ", paths with <=2 pieces")],
        "ex-2.17" => vec![example_continuous_not_open().into_case(id, "one point, two parameters")],
        "ex-3.3" => vec![example_crossed_pair().into_case(id, "three points, crossed opens")],
        "ex-4.5" => vec![example_step_paths().into_case(id, "nested space, two step paths")],
        _ => return None,
    })
}

const SEARCH_SIZES: [(usize, usize); 6] = [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (3, 2)];

/// Size-ordered random search for the map and space properties.
pub(crate) fn search(id: &str, ctx: &Ctx) -> Option<SearchOutcome> {
    let map = map_prop(id);
    let space = space_prop(id);
    if map.is_none() && space.is_none() {
        return None;
    }
    let mut rng = ctx.rng(id, "search");
    let per_size = (ctx.budget / SEARCH_SIZES.len()).max(1);
    let mut tried = 0;
    for (n, m) in SEARCH_SIZES {
        for attempt in 0..per_size {
            if tried >= ctx.budget {
                return Some(SearchOutcome::Exhausted { tried });
            }
            tried += 1;
            let s = random_info(&mut rng, n, m);
            let failure = match (map, space) {
                (Some(p), _) => {
                    let t = random_info(&mut rng, n, m);
                    let rho = random_map(&mut rng, n, n);
                    check_map(p, &s, &t, &rho).err().map(|d| map_witness(&s, &t, &rho, d))
                }
                (None, Some(p)) => check_space(p, &s).err().map(|d| space_witness(&s, d)),
                (None, None) => unreachable!(),
            };
            if let Some(w) = failure {
                let mut tally = Tally::default();
                tally.record(false, || w);
                return Some(SearchOutcome::Found(
                    tally.into_case(id, format!("search seed={} size={n}x{m} attempt={attempt}", ctx.seed)),
                ));
            }
        }
    }
    Some(SearchOutcome::Exhausted { tried })
}

/// Re-checks a witness produced by a map or space property.
pub fn replay(id: &str, witness: &str) -> Result<bool> {
    let v: Value = serde_json::from_str(witness).map_err(|e| Error::Schema(e.to_string()))?;
    if let Some(p) = map_prop(id) {
        let doc: MappingDocument =
            serde_json::from_value(v["mapping"].clone()).map_err(|e| Error::Schema(format!("mapping: {e}")))?;
        let (s, t, m) = doc.to_mapping(None)?;
        if !m.has_identity_params() {
            return Err(Error::Schema("mapping: expected the identity parameter map".into()));
        }
        return Ok(check_map(p, &info(s.topology), &info(t.topology), m.rho()).is_ok());
    }
    if let Some(p) = space_prop(id) {
        let doc: SpaceDocument = serde_json::from_value(v["space"].clone()).map_err(|e| Error::Schema(format!("space: {e}")))?;
        return Ok(check_space(p, &info(doc.to_space()?.topology)).is_ok());
    }
    Err(Error::UnknownProperty(format!("{id} has no replayable witnesses")))
}
