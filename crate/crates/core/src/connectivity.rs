//! Soft connectedness and soft path connectedness of finite soft spaces.
//!
//! Opens of the soft interval are absolute, so a step map `γ : I → X` is a
//! soft path exactly when, at each point `t`, some neighbourhood of `t` is
//! sent into `core(W′)` for every open `W′ ∋̃ γ(t)`. Only breakpoints need
//! checking: inside a piece the map is constant.
//!
//! The minimal cores `core(M_x)` form the minimal neighbourhoods of an
//! Alexandrov topology on `X`; soft paths are the classical paths into it,
//! and two points are joined by one exactly when they are linked by a fence
//! of comparable points. [`is_soft_path_connected`] decides that fence
//! relation; [`brute_force_path_exists`] is the independent oracle that
//! enumerates step paths and checks them open by open.

use std::fmt;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::real_line::{check_breakpoints, int, Interval, IntervalSet, SoftIntervalSet};
use crate::soft::SoftSet;
use crate::subset::Subset;
use crate::topology::{expand, subspace_topology, SoftTopology};
use crate::verdict::Verdict;

/// Outcome of a connectedness test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectivityReport {
    pub connected: bool,
    /// `(A, X \ A)` with both absolute soft sets open.
    pub witness: Option<(Subset, Subset)>,
}

impl ConnectivityReport {
    fn from_split(split: Option<(Subset, Subset)>) -> Self {
        ConnectivityReport { connected: split.is_none(), witness: split }
    }
}

/// All `A ⊆ X` with `A_ξ` soft open, ordered by size then bits.
pub fn absolute_open_subsets(t: &SoftTopology) -> Vec<Subset> {
    let mut out: Vec<Subset> = t
        .open_slices()
        .iter()
        .filter(|o| o.iter().all(|s| *s == o[0]))
        .map(|o| o[0])
        .collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

/// All `A` with `A_ξ` both soft open and soft closed.
pub fn clopen_absolute_subsets(t: &SoftTopology) -> Vec<Subset> {
    let n = t.universe().len();
    absolute_open_subsets(t)
        .into_iter()
        .filter(|a| t.is_absolute_open(a.complement(n)))
        .collect()
}

/// Disconnected iff some proper nonempty `A` has `A_ξ` and `(X∖A)_ξ` open.
/// The witness takes the lexicographically smallest such `A`.
pub fn is_soft_connected(t: &SoftTopology) -> ConnectivityReport {
    let n = t.universe().len();
    let full = t.universe().full();
    let split = clopen_absolute_subsets(t)
        .into_iter()
        .filter(|a| !a.is_empty() && *a != full)
        .min_by(|a, b| a.lex_cmp(*b))
        .map(|a| (a, a.complement(n)));
    ConnectivityReport::from_split(split)
}

/// Connectedness of the soft subspace on `a`; the witness is given in the
/// ambient indices.
pub fn is_soft_connected_subset(t: &SoftTopology, a: Subset) -> Result<ConnectivityReport> {
    let sub = subspace_topology(t, a)?;
    let r = is_soft_connected(&sub);
    Ok(ConnectivityReport::from_split(r.witness.map(|(p, q)| (expand(p, a), expand(q, a)))))
}

/// A step map `I → X`: a value on each open piece `(t_{i-1}, t_i)` and a
/// value at each breakpoint `t_0 = 0 < … < t_n = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepPath {
    breakpoints: Vec<BigRational>,
    pieces: Vec<usize>,
    points: Vec<usize>,
}

impl StepPath {
    pub fn new(breakpoints: Vec<BigRational>, pieces: Vec<usize>, points: Vec<usize>) -> Result<Self> {
        check_breakpoints(&breakpoints)?;
        if pieces.len() + 1 != breakpoints.len() || points.len() != breakpoints.len() {
            return Err(Error::MalformedPath(format!(
                "{} breakpoints need {} piece values and {} point values",
                breakpoints.len(),
                breakpoints.len() - 1,
                breakpoints.len()
            )));
        }
        Ok(StepPath { breakpoints, pieces, points })
    }

    /// Pieces `[t_{i-1}, t_i)` with the last one closed: each breakpoint
    /// takes the value of the piece it starts, and 1 takes the last value.
    pub fn left_closed(breakpoints: Vec<BigRational>, values: Vec<usize>) -> Result<Self> {
        let mut points = values.clone();
        if let Some(&last) = values.last() {
            points.push(last);
        }
        StepPath::new(breakpoints, values, points)
    }

    pub fn constant(x: usize) -> Self {
        StepPath { breakpoints: vec![int(0), int(1)], pieces: vec![x], points: vec![x, x] }
    }

    /// `n` pieces over equally spaced breakpoints.
    pub fn equally_spaced(pieces: Vec<usize>, points: Vec<usize>) -> Result<Self> {
        let n = pieces.len() as i64;
        let bps = (0..=n).map(|i| crate::real_line::rat(i, n.max(1))).collect();
        StepPath::new(bps, pieces, points)
    }

    pub fn breakpoints(&self) -> &[BigRational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[usize] {
        &self.pieces
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn start(&self) -> usize {
        self.points[0]
    }

    pub fn end(&self) -> usize {
        *self.points.last().unwrap()
    }

    pub fn value_at(&self, t: &BigRational) -> Result<usize> {
        match self.breakpoints.binary_search(t) {
            Ok(i) => Ok(self.points[i]),
            Err(0) => Err(Error::OutOfRange("t < 0".into())),
            Err(i) if i == self.breakpoints.len() => Err(Error::OutOfRange("t > 1".into())),
            Err(i) => Ok(self.pieces[i - 1]),
        }
    }

    /// Values attained at breakpoint `i` and on the pieces touching it.
    fn local_values(&self, i: usize) -> Subset {
        let mut s = Subset::singleton(self.points[i]);
        if i > 0 {
            s.insert(self.pieces[i - 1]);
        }
        if i < self.pieces.len() {
            s.insert(self.pieces[i]);
        }
        s
    }

    /// Every element the path visits.
    pub fn values(&self) -> Subset {
        self.pieces.iter().chain(&self.points).copied().collect()
    }

    /// Splits every piece at `extra` breakpoints without changing the map.
    pub fn refine(&self, extra: &[BigRational]) -> StepPath {
        let mut bps: Vec<BigRational> = self.breakpoints.iter().chain(extra).cloned().collect();
        bps.retain(|t| *t >= int(0) && *t <= int(1));
        bps.sort();
        bps.dedup();
        let points = bps.iter().map(|t| self.value_at(t).unwrap()).collect();
        let pieces = bps
            .windows(2)
            .map(|w| self.value_at(&((&w[0] + &w[1]) / int(2))).unwrap())
            .collect();
        StepPath { breakpoints: bps, pieces, points }
    }

    /// `γ⁻¹(S)` as a subset of `I`.
    pub fn preimage(&self, s: Subset) -> IntervalSet {
        let mut ivs = Vec::new();
        for (i, t) in self.breakpoints.iter().enumerate() {
            if s.contains(self.points[i]) {
                ivs.push(Interval::closed(t.clone(), t.clone()));
            }
            if i < self.pieces.len() && s.contains(self.pieces[i]) {
                ivs.push(Interval::open(t.clone().into(), self.breakpoints[i + 1].clone().into()));
            }
        }
        IntervalSet::from_intervals(&ivs)
    }

    /// The inverse soft image of `W` under `(𝕀_ξ, γ)`.
    pub fn soft_preimage(&self, w: &SoftSet) -> SoftIntervalSet {
        let slices = w.slices().iter().map(|&s| self.preimage(s)).collect();
        SoftIntervalSet::new(w.params().clone(), slices).expect("one slice per parameter")
    }
}

/// Why a step map fails to be a soft path.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathFailure {
    /// Breakpoint at which continuity fails.
    pub at: BigRational,
    /// An open `W′ ∋̃ γ(at)` that no neighbourhood of `at` maps into.
    pub open: SoftSet,
    /// A value attained arbitrarily close to `at` outside `core(W′)`.
    pub escaping: usize,
}

impl fmt::Display for PathFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "at t = {}: value {} escapes core of {}",
            crate::real_line::format_rational(&self.at),
            self.open.universe().label(self.escaping),
            self.open
        )
    }
}

fn check_values(p: &StepPath, t: &SoftTopology) -> Result<()> {
    let n = t.universe().len();
    if let Some(&bad) = p.pieces.iter().chain(&p.points).find(|&&v| v >= n) {
        return Err(Error::MalformedPath(format!("value index {bad} outside the universe")));
    }
    Ok(())
}

/// Soft path test for `(𝕀_ξ, γ)`, checking every open neighbourhood of each
/// breakpoint value directly. The failure names the first breakpoint, then
/// the first open in canonical order.
pub fn is_soft_path(p: &StepPath, t: &SoftTopology) -> Result<Verdict<PathFailure>> {
    check_values(p, t)?;
    let full = t.universe().full();
    for i in 0..p.breakpoints.len() {
        let local = p.local_values(i);
        for (k, o) in t.open_slices().iter().enumerate() {
            let core = crate::soft::core_of(o, full);
            if core.contains(p.points[i]) && !local.is_subset(core) {
                return Ok(Verdict::Fails(PathFailure {
                    at: p.breakpoints[i].clone(),
                    open: t.open(k),
                    escaping: local.difference(core).first().unwrap(),
                }));
            }
        }
    }
    Ok(Verdict::Holds)
}

pub(crate) fn step_path_ok(p: &StepPath, t: &SoftTopology) -> bool {
    matches!(is_soft_path(p, t), Ok(Verdict::Holds))
}

/// Points joined to `x` by a fence `x ~ z₁ ~ … ~ y`, where `u ~ v` iff one
/// lies in the other's minimal core.
pub fn fence_component(t: &SoftTopology, x: usize) -> Subset {
    let n = t.universe().len();
    let cores: Vec<Subset> = (0..n).map(|v| t.minimal_core(v)).collect();
    let mut seen = Subset::singleton(x);
    let mut stack = vec![x];
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !seen.contains(v) && (cores[u].contains(v) || cores[v].contains(u)) {
                seen.insert(v);
                stack.push(v);
            }
        }
    }
    seen
}

/// Soft path connectedness via fence reachability. The witness is the
/// lexicographically smallest pair `(x, y)` with no soft path between them.
pub fn is_soft_path_connected(t: &SoftTopology) -> Verdict<(usize, usize)> {
    let n = t.universe().len();
    for x in 0..n {
        let comp = fence_component(t, x);
        if let Some(y) = (x + 1..n).find(|&y| !comp.contains(y)) {
            return Verdict::Fails((x, y));
        }
    }
    Verdict::Holds
}

/// A soft path from `x` to `y` through a fence, if one exists.
pub fn find_soft_path(t: &SoftTopology, x: usize, y: usize) -> Option<StepPath> {
    let n = t.universe().len();
    let cores: Vec<Subset> = (0..n).map(|v| t.minimal_core(v)).collect();
    let mut prev = vec![usize::MAX; n];
    prev[x] = x;
    let mut queue = std::collections::VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if prev[v] == usize::MAX && (cores[u].contains(v) || cores[v].contains(u)) {
                prev[v] = u;
                queue.push_back(v);
            }
        }
    }
    if prev[y] == usize::MAX {
        return None;
    }
    let mut chain = vec![y];
    while *chain.last().unwrap() != x {
        chain.push(prev[*chain.last().unwrap()]);
    }
    chain.reverse();
    // One piece per fence point; each inner breakpoint takes whichever
    // neighbour has the other in its minimal core.
    let mut points = vec![x];
    for w in chain.windows(2) {
        points.push(if cores[w[0]].contains(w[1]) { w[0] } else { w[1] });
    }
    points.push(y);
    let p = StepPath::equally_spaced(chain, points).ok()?;
    debug_assert!(step_path_ok(&p, t));
    Some(p)
}

/// Exhaustive search over step paths with at most `k` pieces on equally
/// spaced breakpoints, all piece and inner point values free.
pub fn brute_force_path_exists(t: &SoftTopology, x: usize, y: usize, k: usize) -> bool {
    let n = t.universe().len();
    (1..=k).any(|pieces| {
        let free = 2 * pieces - 1;
        let total = (n as u64).checked_pow(free as u32).expect("search space too large");
        (0..total).any(|mut code| {
            let mut digits = Vec::with_capacity(free);
            for _ in 0..free {
                digits.push((code % n as u64) as usize);
                code /= n as u64;
            }
            let piece_vals = digits[..pieces].to_vec();
            let mut points = vec![x];
            points.extend_from_slice(&digits[pieces..]);
            points.push(y);
            let p = StepPath::equally_spaced(piece_vals, points).expect("well-formed");
            step_path_ok(&p, t)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::real_line::rat;
    use crate::soft::{ParamSet, Universe};

    fn pspace() -> SoftTopology {
        let x = Universe::new(["1", "2", "3"]).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        let u1 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1"][..]), ("e2", &["2"][..])]).unwrap();
        let u2 = SoftSet::from_named(x.clone(), p.clone(), &[("e1", &["1", "3"][..]), ("e2", &["2"][..])]).unwrap();
        SoftTopology::new(&[SoftSet::empty(x.clone(), p.clone()), SoftSet::absolute(x, p), u1, u2]).unwrap()
    }

    fn split(n: usize, a: Subset) -> SoftTopology {
        let x = Universe::range(n).unwrap();
        let p = ParamSet::numbered(2).unwrap();
        SoftTopology::from_absolute(x, p, &[Subset::EMPTY, a, a.complement(n), Subset::full(n)]).unwrap()
    }

    fn sierpinski() -> SoftTopology {
        let x = Universe::new(["a", "b"]).unwrap();
        let p = ParamSet::numbered(1).unwrap();
        SoftTopology::from_absolute(x, p, &[Subset::EMPTY, Subset::singleton(0), Subset::full(2)]).unwrap()
    }

    #[test]
    fn connectedness_cases() {
        let t = pspace();
        assert_eq!(absolute_open_subsets(&t), vec![Subset::EMPTY, Subset::full(3)]);
        assert!(is_soft_connected(&t).connected);
        let a = Subset::singleton(1);
        let s = split(3, a);
        assert_eq!(clopen_absolute_subsets(&s).len(), 4);
        let r = is_soft_connected(&s);
        assert!(!r.connected);
        assert_eq!(r.witness, Some((Subset::from_bits(0b101), a)));
    }

    #[test]
    fn connected_subsets() {
        let t = pspace();
        assert!(is_soft_connected_subset(&t, Subset::from_bits(0b101)).unwrap().connected);
        assert!(is_soft_connected_subset(&t, Subset::singleton(2)).unwrap().connected);
        let s = split(3, Subset::singleton(0));
        let r = is_soft_connected_subset(&s, Subset::from_bits(0b011)).unwrap();
        assert_eq!(r.witness, Some((Subset::singleton(0), Subset::singleton(1))));
    }

    #[test]
    fn example_step_paths() {
        let t = pspace();
        let half = vec![int(0), rat(1, 2), int(1)];
        let g13 = StepPath::left_closed(half.clone(), vec![0, 2]).unwrap();
        assert!(is_soft_path(&g13, &t).unwrap().holds());
        assert!(is_soft_path(&StepPath::constant(1), &t).unwrap().holds());
        let s = sierpinski();
        let down = StepPath::left_closed(half, vec![1, 0]).unwrap();
        let v = is_soft_path(&down, &s).unwrap();
        assert_eq!(v.witness().map(|f| (f.at.clone(), f.escaping)), Some((rat(1, 2), 1)));
    }

    #[test]
    fn downhill_needs_a_point_value() {
        // b on [0, ½], a on (½, 1]: the breakpoint carries b, whose minimal
        // core is everything.
        let s = sierpinski();
        let p = StepPath::new(vec![int(0), rat(1, 2), int(1)], vec![1, 0], vec![1, 1, 0]).unwrap();
        assert!(is_soft_path(&p, &s).unwrap().holds());
        assert!(brute_force_path_exists(&s, 1, 0, 2));
    }

    #[test]
    fn path_connectedness() {
        assert!(is_soft_path_connected(&pspace()).holds());
        assert_eq!(is_soft_path_connected(&split(2, Subset::singleton(0))), Verdict::Fails((0, 1)));
        let s = split(3, Subset::singleton(0));
        for k in 1..=4 {
            assert!(!brute_force_path_exists(&s, 0, 1, k));
        }
        assert!(brute_force_path_exists(&pspace(), 0, 1, 2));
        assert!(brute_force_path_exists(&s, 2, 2, 1));
    }

    #[test]
    fn fence_paths_are_soft_paths() {
        let s = sierpinski();
        for (x, y) in [(0, 1), (1, 0), (0, 0)] {
            let p = find_soft_path(&s, x, y).unwrap();
            assert_eq!((p.start(), p.end()), (x, y));
            assert!(is_soft_path(&p, &s).unwrap().holds());
        }
        assert!(find_soft_path(&split(2, Subset::singleton(0)), 0, 1).is_none());
    }

    #[test]
    fn preimages_of_step_paths() {
        let t = pspace();
        let g13 = StepPath::left_closed(vec![int(0), rat(1, 2), int(1)], vec![0, 2]).unwrap();
        let pre = g13.soft_preimage(&t.open(1));
        let half_open = IntervalSet::from_interval(&Interval {
            lo: int(0).into(),
            lo_closed: true,
            hi: rat(1, 2).into(),
            hi_closed: false,
        });
        assert_eq!(pre.slices(), &[half_open, IntervalSet::empty()]);
        assert!(!pre.is_soft_open_in_unit());
        let g22 = StepPath::constant(1);
        let pre = g22.soft_preimage(&t.open(1));
        assert_eq!(pre.slices(), &[IntervalSet::empty(), IntervalSet::unit()]);
        assert!(!pre.is_soft_open_in_unit());
    }

    #[test]
    fn refinement_keeps_the_map() {
        let g = StepPath::left_closed(vec![int(0), rat(1, 2), int(1)], vec![0, 2]).unwrap();
        let r = g.refine(&[rat(1, 4), rat(3, 4)]);
        assert_eq!(r.pieces(), &[0, 0, 2, 2]);
        assert_eq!(r.points(), &[0, 0, 2, 2, 2]);
    }
}
