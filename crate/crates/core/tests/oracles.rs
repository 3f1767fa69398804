//! Library verdicts against independent brute-force reimplementations of the
//! definitions.

use std::collections::BTreeSet;

use softtop::enumerate::{all_functions, enumerate_group_topologies, enumerate_soft_topologies, small_groups, topology_key};
use softtop::group::FiniteGroup;
use softtop::soft::is_soft_subset;
use softtop::soft_group::verify_soft_topological_group;
use softtop::topology::{inverse_images_all_open, is_soft_continuous, verify_topology};
use softtop::{SoftMapping, SoftTopology, Subset};

/// Topologies on `n` points are in bijection with preorders; count the
/// reflexive, transitive relations directly.
fn preorders(n: usize) -> usize {
    let cells = n * n;
    (0u64..1 << cells)
        .filter(|&r| {
            let rel = |i: usize, j: usize| r >> (i * n + j) & 1 == 1;
            (0..n).all(|i| rel(i, i))
                && (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| !(rel(i, j) && rel(j, k)) || rel(i, k))))
        })
        .count()
}

#[test]
fn preorder_counts_are_the_classical_sequence() {
    assert_eq!((1..=4).map(preorders).collect::<Vec<_>>(), vec![1, 4, 29, 355]);
}

#[test]
fn enumeration_matches_preorder_counts() {
    for n in 1..=4 {
        let want = preorders(n);
        // One parameter: classical topologies on n points.
        assert_eq!(enumerate_soft_topologies(n, 1).unwrap().len(), want, "{n} points");
        // One point: soft sets are subsets of the parameter set.
        assert_eq!(enumerate_soft_topologies(1, n).unwrap().len(), want, "{n} parameters");
    }
    // Two points, two parameters: soft sets are subsets of a 4-element set.
    assert_eq!(enumerate_soft_topologies(2, 2).unwrap().len(), preorders(4));
}

#[test]
fn enumeration_is_complete_and_duplicate_free() {
    for (n, m) in [(1, 1), (2, 1), (3, 1), (1, 2), (2, 2), (1, 3), (4, 1), (1, 4)] {
        let all = enumerate_soft_topologies(n, m).unwrap();
        let keys: BTreeSet<_> = all.iter().map(topology_key).collect();
        assert_eq!(keys.len(), all.len());
        assert!(all.iter().all(|t| verify_topology(&t.opens()).unwrap().is_valid()));
        assert_eq!(all, enumerate_soft_topologies(n, m).unwrap(), "order must be deterministic");
    }
    assert!(enumerate_soft_topologies(3, 2).is_err());
    assert!(enumerate_soft_topologies(0, 1).is_err());
}

/// Soft continuity spelled out: for every `x` and open `W′ ∋̃ ρ(x)` some open
/// `W ∋̃ x` has `ρ(x) ∈̃ image(W) ⊑ W′`.
fn literal_continuity(m: &SoftMapping, s: &SoftTopology, t: &SoftTopology) -> bool {
    let (src, dst) = (s.opens(), t.opens());
    (0..s.universe().len()).all(|x| {
        let y = m.rho()[x];
        dst.iter().filter(|w2| w2.has_soft_element(y)).all(|w2| {
            src.iter().filter(|w| w.has_soft_element(x)).any(|w| {
                let img = m.image(w).unwrap();
                img.has_soft_element(y) && is_soft_subset(&img, w2).unwrap()
            })
        })
    })
}

fn literal_open_preimages(m: &SoftMapping, s: &SoftTopology, t: &SoftTopology) -> bool {
    let src = s.opens();
    t.opens().iter().all(|w2| src.contains(&m.inverse_image(w2).unwrap()))
}

#[test]
fn continuity_agrees_with_the_literal_definition() {
    let mut checked = 0;
    for m_params in 1..=2 {
        for n1 in 1..=2 {
            for n2 in 1..=2 {
                let sources = enumerate_soft_topologies(n1, m_params).unwrap();
                let targets = enumerate_soft_topologies(n2, m_params).unwrap();
                for s in &sources {
                    for t in &targets {
                        for rho in all_functions(n1, n2) {
                            let m = SoftMapping::with_identity_params(
                                s.universe().clone(),
                                t.universe().clone(),
                                s.params().clone(),
                                rho,
                            )
                            .unwrap();
                            assert_eq!(is_soft_continuous(&m, s, t).unwrap().holds(), literal_continuity(&m, s, t));
                            assert_eq!(inverse_images_all_open(&m, s, t).unwrap().holds(), literal_open_preimages(&m, s, t));
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 100_000, "only {checked} mappings");
}

#[test]
fn continuity_with_general_parameter_maps() {
    let spaces: Vec<SoftTopology> =
        [(1, 1), (2, 1), (1, 2), (2, 2)].iter().flat_map(|&(n, m)| enumerate_soft_topologies(n, m).unwrap()).collect();
    let small: Vec<&SoftTopology> = spaces.iter().filter(|t| t.universe().len() * t.params().len() <= 2).collect();
    for s in &small {
        for t in &small {
            for phi in all_functions(s.params().len(), t.params().len()) {
                for rho in all_functions(s.universe().len(), t.universe().len()) {
                    let m = SoftMapping::new(
                        s.universe().clone(),
                        s.params().clone(),
                        t.universe().clone(),
                        t.params().clone(),
                        phi.clone(),
                        rho,
                    )
                    .unwrap();
                    assert_eq!(is_soft_continuous(&m, s, t).unwrap().holds(), literal_continuity(&m, s, t));
                }
            }
        }
    }
}

fn slice_product(g: &FiniteGroup, a: Subset, b: Subset) -> Subset {
    let mut out = Subset::EMPTY;
    for x in a.iter() {
        for y in b.iter() {
            out = out.union(Subset::singleton(g.mul(x, y)));
        }
    }
    out
}

/// Multiplication and inversion soft continuous, checked neighbourhood by
/// neighbourhood with slice-wise products.
fn literal_group(g: &FiniteGroup, t: &SoftTopology) -> bool {
    let opens = t.opens();
    let n = g.order();
    let nbhd = |x: usize| opens.iter().filter(move |w| w.has_soft_element(x));
    let mult = (0..n).all(|a| {
        (0..n).all(|b| {
            nbhd(g.mul(a, b)).all(|w| {
                nbhd(a).any(|u| {
                    nbhd(b).any(|v| {
                        (0..t.params().len()).all(|e| slice_product(g, u.slice(e), v.slice(e)).is_subset(w.slice(e)))
                    })
                })
            })
        })
    });
    let inv = (0..n).all(|a| {
        nbhd(g.inv(a)).all(|w| {
            nbhd(a).any(|u| {
                (0..t.params().len()).all(|e| u.slice(e).iter().all(|x| w.slice(e).contains(g.inv(x))))
            })
        })
    });
    mult && inv
}

#[test]
fn group_verification_agrees_with_the_literal_definition() {
    let mut verified = 0;
    for (name, g) in small_groups() {
        let max_params = if g.order() <= 2 { 2 } else { 1 };
        for m in 1..=max_params {
            for t in enumerate_group_topologies(&g, m).unwrap() {
                let want = literal_group(&g, &t);
                assert_eq!(verify_soft_topological_group(&g, &t).unwrap().holds(), want, "{name}, {m} params");
                verified += want as usize;
            }
        }
    }
    assert!(verified > 10);
}
