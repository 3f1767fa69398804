//! Named small spaces and seeded generators for real-line test cases.

use rand::Rng;

use crate::connectivity::StepPath;
use crate::real_line::{ExtRational, Interval, IntervalSet, RatOpenSet, Rational, AffinePath, rat, int};
use crate::soft::{ParamSet, SoftSet, Universe};
use crate::topology::SoftTopology;

/// One point `v`, two parameters: the indiscrete topology and the one that
/// adds `{(e1,∅),(e2,{v})}`. The identity between them is soft continuous
/// although that extra open has a non-open preimage.
pub fn single_point_pair() -> (SoftTopology, SoftTopology, SoftSet) {
    let x = Universe::new(["v"]).unwrap();
    let p = ParamSet::numbered(2).unwrap();
    let h = SoftSet::from_named(x.clone(), p.clone(), &[("e2", &["v"][..])]).unwrap();
    let z = SoftTopology::indiscrete(x.clone(), p.clone());
    let z2 = SoftTopology::new(&[SoftSet::empty(x.clone(), p.clone()), SoftSet::absolute(x, p), h.clone()]).unwrap();
    (z, z2, h)
}

/// `X = {v, v', v''}` with two opens that partition every slice but have
/// empty cores: `U = {(e1,{v,v'}),(e2,{v''})}`, `V = {(e1,{v''}),(e2,{v,v'})}`.
pub fn crossed_pair_space() -> (SoftTopology, SoftSet, SoftSet) {
    let x = Universe::new(["v", "v'", "v''"]).unwrap();
    let p = ParamSet::numbered(2).unwrap();
    let u = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["v", "v'"][..]), ("e2", &["v''"][..])]).unwrap();
    let v = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["v''"][..]), ("e2", &["v", "v'"][..])]).unwrap();
    let t = SoftTopology::new(&[SoftSet::empty(x.clone(), p.clone()), SoftSet::absolute(x, p), u.clone(), v.clone()]).unwrap();
    (t, u, v)
}

/// `X = {1,2,3}` with `U1 = {(e1,{1}),(e2,{2})} ⊑ U2 = {(e1,{1,3}),(e2,{2})}`.
pub fn nested_pair_space() -> (SoftTopology, SoftSet, SoftSet) {
    let x = Universe::new(["1", "2", "3"]).unwrap();
    let p = ParamSet::numbered(2).unwrap();
    let u1 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1"][..]), ("e2", &["2"][..])]).unwrap();
    let u2 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1", "3"][..]), ("e2", &["2"][..])]).unwrap();
    let t = SoftTopology::new(&[SoftSet::empty(x.clone(), p.clone()), SoftSet::absolute(x, p), u1.clone(), u2.clone()]).unwrap();
    (t, u1, u2)
}

/// In [`nested_pair_space`]: `[0,½) → 1`, `[½,1] → 3`.
pub fn jump_path_1_3() -> StepPath {
    StepPath::left_closed(vec![int(0), rat(1, 2), int(1)], vec![0, 2]).unwrap()
}

/// In [`nested_pair_space`]: constant `2`.
pub fn constant_path_2() -> StepPath {
    StepPath::constant(1)
}

/// A rational in `[lo, hi]` with denominator at most `den`.
pub fn random_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, den: i64) -> Rational {
    let q = rng.random_range(1..=den);
    rat(rng.random_range(lo * q..=hi * q), q)
}

/// Strictly increasing rationals in `[lo, hi]`.
pub fn random_sorted<R: Rng>(rng: &mut R, k: usize, lo: i64, hi: i64) -> Vec<Rational> {
    loop {
        let mut v: Vec<Rational> = (0..k).map(|_| random_rational(rng, lo, hi, 8)).collect();
        v.sort();
        v.dedup();
        if v.len() == k {
            return v;
        }
    }
}

/// A nonempty open subset of ℝ made of up to `max` intervals, some of them rays.
pub fn random_open_set<R: Rng>(rng: &mut R, max: usize) -> RatOpenSet {
    let k = rng.random_range(1..=max);
    let cuts = random_sorted(rng, 2 * k, -4, 4);
    let mut ivs = Vec::new();
    for i in 0..k {
        let lo = if i == 0 && rng.random_bool(0.2) { ExtRational::NegInf } else { cuts[2 * i].clone().into() };
        let hi = if i + 1 == k && rng.random_bool(0.2) { ExtRational::PosInf } else { cuts[2 * i + 1].clone().into() };
        ivs.push(Interval::open(lo, hi));
    }
    RatOpenSet::new(IntervalSet::from_intervals(&ivs)).unwrap()
}

/// The largest open subset of `space` missing `g`: components of
/// `space ∖ g` with their inner endpoints removed. Endpoints that are ends
/// of `space` itself stay, which keeps the result relatively open there.
fn relative_interior_of_rest(space: &IntervalSet, g: &IntervalSet) -> IntervalSet {
    let rest = space.difference(g);
    let ends: Vec<Interval> = space.intervals();
    let ivs: Vec<Interval> = rest
        .intervals()
        .into_iter()
        .map(|iv| {
            let keep_lo = iv.lo_closed && ends.iter().any(|e| e.lo_closed && e.lo == iv.lo);
            let keep_hi = iv.hi_closed && ends.iter().any(|e| e.hi_closed && e.hi == iv.hi);
            Interval { lo_closed: keep_lo, hi_closed: keep_hi, ..iv }
        })
        .collect();
    IntervalSet::from_intervals(&ivs)
}

/// Two nonempty opens of ℝ posing as a separation: usually `g` and the
/// interior of its complement (missing only boundary points), sometimes two
/// independent random opens.
pub fn random_partition_candidate<R: Rng>(rng: &mut R) -> (RatOpenSet, RatOpenSet) {
    loop {
        let g = random_open_set(rng, 6);
        let g2 = if rng.random_bool(0.75) {
            RatOpenSet::new(relative_interior_of_rest(&IntervalSet::reals(), g.set())).unwrap()
        } else {
            random_open_set(rng, 6)
        };
        if !g2.set().is_empty() {
            return (g, g2);
        }
    }
}

/// The same for relative opens of `I = [0,1]`.
pub fn random_unit_partition_candidate<R: Rng>(rng: &mut R) -> (IntervalSet, IntervalSet) {
    let unit = IntervalSet::unit();
    loop {
        let g = unit.intersection(random_open_set_in(rng, 6, -1, 2).set());
        let g2 = if rng.random_bool(0.75) {
            relative_interior_of_rest(&unit, &g)
        } else {
            unit.intersection(random_open_set_in(rng, 6, -1, 2).set())
        };
        if !g.is_empty() && !g2.is_empty() {
            return (g, g2);
        }
    }
}

fn random_open_set_in<R: Rng>(rng: &mut R, max: usize, lo: i64, hi: i64) -> RatOpenSet {
    let k = rng.random_range(1..=max);
    let cuts = random_sorted(rng, 2 * k, lo, hi);
    let ivs: Vec<Interval> =
        (0..k).map(|i| Interval::open(cuts[2 * i].clone().into(), cuts[2 * i + 1].clone().into())).collect();
    RatOpenSet::new(IntervalSet::from_intervals(&ivs)).unwrap()
}

/// A union of 2 to 4 separated intervals with random endpoint closedness.
pub fn random_non_interval<R: Rng>(rng: &mut R) -> IntervalSet {
    let k = rng.random_range(2..=4);
    let cuts = random_sorted(rng, 2 * k, -4, 4);
    let ivs: Vec<Interval> = (0..k)
        .map(|i| Interval {
            lo: cuts[2 * i].clone().into(),
            lo_closed: rng.random_bool(0.5),
            hi: cuts[2 * i + 1].clone().into(),
            hi_closed: rng.random_bool(0.5),
        })
        .collect();
    IntervalSet::from_intervals(&ivs)
}

/// A continuous piecewise-affine path through random values at random
/// breakpoints, with 1 to 4 pieces.
pub fn random_affine_path<R: Rng>(rng: &mut R) -> AffinePath {
    let n = rng.random_range(1..=4);
    let mut bps = vec![int(0)];
    bps.extend(random_sorted(rng, n - 1, 0, 1).into_iter().filter(|t| *t > int(0) && *t < int(1)));
    bps.push(int(1));
    let vals: Vec<Rational> = (0..bps.len()).map(|_| random_rational(rng, -5, 5, 6)).collect();
    let pieces = (1..bps.len())
        .map(|i| {
            let alpha = (&vals[i] - &vals[i - 1]) / (&bps[i] - &bps[i - 1]);
            let beta = &vals[i - 1] - &alpha * &bps[i - 1];
            (alpha, beta)
        })
        .collect();
    AffinePath::new(bps, pieces).unwrap()
}
