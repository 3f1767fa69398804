//! Exhaustive and seeded-random generation of small soft topological spaces.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::soft::{ParamSet, Universe};
use crate::subset::Subset;
use crate::topology::{generate_from_subbase, SoftSubbase, SoftTopology};

/// Largest `|X|·|ξ|` accepted by [`enumerate_soft_topologies`].
pub const MAX_ENUMERATION_BITS: usize = 4;

/// Largest subbase accepted by [`random_space`].
pub const MAX_GENERATORS: usize = 6;

fn decode(code: u64, n: usize, m: usize) -> Vec<Subset> {
    let mask = Subset::full(n).bits();
    (0..m).map(|e| Subset::from_bits((code >> (e * n)) & mask)).collect()
}

fn encode(slices: &[Subset], n: usize) -> u64 {
    slices.iter().enumerate().fold(0, |acc, (e, s)| acc | (s.bits() << (e * n)))
}

/// Every soft topology over `X = {0..nX-1}` and `ξ = {e1..e_nXi}`, each exactly
/// once. A soft set is encoded as an `nX·nXi`-bit word (slice `e` occupies bits
/// `e·nX..`), so `⊓`/`⊔` are bitwise and/or; families are scanned in increasing
/// order of their membership mask.
pub fn enumerate_soft_topologies(n_x: usize, n_xi: usize) -> Result<Vec<SoftTopology>> {
    if n_x == 0 || n_xi == 0 {
        return Err(Error::Empty("universe or parameter set"));
    }
    let bits = n_x * n_xi;
    if bits > MAX_ENUMERATION_BITS {
        return Err(Error::SizeLimit(format!(
            "enumeration needs |X|*|params| <= {MAX_ENUMERATION_BITS}, got {n_x}*{n_xi}"
        )));
    }
    let universe = Universe::range(n_x)?;
    let params = ParamSet::numbered(n_xi)?;
    let words = 1usize << bits;
    let full = words - 1;
    // Free members are the words strictly between 0 and `full`.
    let free: Vec<usize> = (1..full).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << free.len() {
        let mut member = vec![false; words];
        member[0] = true;
        member[full] = true;
        for (i, &w) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                member[w] = true;
            }
        }
        let present: Vec<usize> = (0..words).filter(|&w| member[w]).collect();
        let closed = present
            .iter()
            .all(|&a| present.iter().all(|&b| member[a & b] && member[a | b]));
        if closed {
            let opens = present.iter().map(|&w| decode(w as u64, n_x, n_xi));
            out.push(SoftTopology::from_trusted(universe.clone(), params.clone(), opens));
        }
    }
    Ok(out)
}

/// Every soft topology on the elements of `g` over `m` parameters; same
/// order and limit as [`enumerate_soft_topologies`].
pub fn enumerate_group_topologies(g: &FiniteGroup, m: usize) -> Result<Vec<SoftTopology>> {
    Ok(enumerate_soft_topologies(g.order(), m)?
        .into_iter()
        .map(|t| SoftTopology::from_trusted(g.elements().clone(), t.params().clone(), t.open_slices().iter().cloned()))
        .collect())
}

/// The trivial group, ℤ₂, ℤ₃, ℤ₄ and the Klein four-group.
pub fn small_groups() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("trivial", FiniteGroup::trivial()),
        ("z2", FiniteGroup::cyclic(2).unwrap()),
        ("z3", FiniteGroup::cyclic(3).unwrap()),
        ("z4", FiniteGroup::cyclic(4).unwrap()),
        ("klein", FiniteGroup::klein_four()),
    ]
}

/// Every soft topology on a small group, over the parameter counts kept
/// within the enumeration limit: up to two parameters for the trivial group
/// and ℤ₂, one for the groups of order 3 and 4. Entries are named
/// `{group}/{m}p/#{index}`.
pub fn enumerated_group_spaces() -> Vec<(String, FiniteGroup, SoftTopology)> {
    let mut out = Vec::new();
    for (name, g) in small_groups() {
        let max_m = if g.order() <= 2 { 2 } else { 1 };
        for m in 1..=max_m {
            for (i, t) in enumerate_group_topologies(&g, m).unwrap().into_iter().enumerate() {
                out.push((format!("{name}/{m}p/#{i}"), g.clone(), t));
            }
        }
    }
    out
}

/// Every soft set over `(X, ξ)` as raw slices.
pub fn all_soft_sets(n_x: usize, n_xi: usize) -> impl Iterator<Item = Vec<Subset>> {
    let bits = n_x * n_xi;
    assert!(bits < 32, "too many soft sets");
    (0u64..1 << bits).map(move |c| decode(c, n_x, n_xi))
}

/// Every function `{0..domain-1} → {0..codomain-1}` in lexicographic order.
pub fn all_functions(domain: usize, codomain: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = if domain == 0 { 1 } else { codomain.pow(domain as u32) };
    (0..total).map(move |mut c| {
        let mut f = vec![0; domain];
        for slot in f.iter_mut().rev() {
            *slot = c % codomain;
            c /= codomain;
        }
        f
    })
}

/// The topology generated by `generators` random soft sets drawn from a
/// ChaCha stream seeded with `seed`.
pub fn random_space(seed: u64, n_x: usize, n_xi: usize, generators: usize) -> Result<SoftTopology> {
    if generators > MAX_GENERATORS {
        return Err(Error::SizeLimit(format!("at most {MAX_GENERATORS} generators, got {generators}")));
    }
    let universe = Universe::range(n_x)?;
    let params = ParamSet::numbered(n_xi)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bits = n_x * n_xi;
    let members = (0..generators)
        .map(|_| {
            let code = if bits == 64 { rng.random::<u64>() } else { rng.random_range(0..1u64 << bits) };
            decode(code, n_x, n_xi)
        })
        .collect();
    generate_from_subbase(&SoftSubbase::from_slices(universe, params, members))
}

/// Dense encoding of a topology's opens, handy as a set key.
pub fn topology_key(t: &SoftTopology) -> Vec<u64> {
    let n = t.universe().len();
    let mut key: Vec<u64> = t.open_slices().iter().map(|o| encode(o, n)).collect();
    key.sort_unstable();
    key
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_soft_topologies(1, 1).unwrap().len(), 1);
        assert_eq!(enumerate_soft_topologies(2, 1).unwrap().len(), 4);
        assert_eq!(enumerate_soft_topologies(1, 2).unwrap().len(), 4);
        assert!(matches!(enumerate_soft_topologies(3, 2), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn random_spaces() {
        let t = random_space(7, 3, 2, 0).unwrap();
        assert!(t.is_indiscrete());
        assert_eq!(random_space(11, 3, 2, 4).unwrap(), random_space(11, 3, 2, 4).unwrap());
        let t = random_space(5, 3, 2, 3).unwrap();
        let report = crate::topology::verify_topology(&t.opens()).unwrap();
        assert!(report.is_valid());
        assert!(random_space(1, 2, 2, 7).is_err());
    }

    #[test]
    fn functions_are_lexicographic() {
        let fs: Vec<_> = all_functions(2, 2).collect();
        assert_eq!(fs, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_functions(0, 3).count(), 1);
    }
}
