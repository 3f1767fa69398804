//! Exact-rational model of the soft usual topology on ℝ and its subspace on
//! `I = [0, 1]`.
//!
//! Every soft usual open `H^G_ξ` is absolute, so it is represented by the
//! single classical set `G`. Soft continuity into `(ℝ, 𝒰_ξ)` then coincides
//! with classical continuity, and a piecewise-affine path is a soft path
//! exactly when its pieces agree at the shared breakpoints.
//!
//! Sets are finite unions of intervals, stored as cut points plus the
//! membership of each cut and of each open gap between cuts. Redundant cuts
//! are removed, which makes the representation canonical.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::soft::ParamSet;

pub type Rational = BigRational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Schema(format!("not a rational: `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(BigInt::from_str(s).map_err(|_| bad())?)),
    }
}

/// `p/q`, or just `p` for integers.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// A rational or one of the two infinities.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRational {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl ExtRational {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            ExtRational::Finite(q) => Some(q),
            _ => None,
        }
    }
}

impl From<Rational> for ExtRational {
    fn from(q: Rational) -> Self {
        ExtRational::Finite(q)
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::PosInf => f.write_str("inf"),
            ExtRational::Finite(q) => f.write_str(&format_rational(q)),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(ExtRational::NegInf),
            "inf" | "+inf" => Ok(ExtRational::PosInf),
            other => parse_rational(other).map(ExtRational::Finite),
        }
    }
}

/// One interval with open/closed ends. Infinite ends are always open.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    pub lo: ExtRational,
    pub lo_closed: bool,
    pub hi: ExtRational,
    pub hi_closed: bool,
}

impl Interval {
    pub fn open(lo: ExtRational, hi: ExtRational) -> Self {
        Interval { lo, lo_closed: false, hi, hi_closed: false }
    }

    pub fn closed(lo: Rational, hi: Rational) -> Self {
        Interval { lo: lo.into(), lo_closed: true, hi: hi.into(), hi_closed: true }
    }

    /// A point strictly inside, or the point itself for `[a, a]`.
    pub fn representative(&self) -> Rational {
        match (&self.lo, &self.hi) {
            (ExtRational::Finite(a), ExtRational::Finite(b)) => half(a, b),
            (ExtRational::NegInf, ExtRational::Finite(b)) => b - int(1),
            (ExtRational::Finite(a), ExtRational::PosInf) => a + int(1),
            _ => Rational::zero(),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            return write!(f, "{{{}}}", self.lo);
        }
        let l = if self.lo_closed { '[' } else { '(' };
        let r = if self.hi_closed { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

/// A finite union of rational intervals in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalSet {
    cuts: Vec<Rational>,
    at_cut: Vec<bool>,
    /// `gaps[i]` covers the open region just left of `cuts[i]`; the last
    /// entry covers the region right of every cut.
    gaps: Vec<bool>,
}

impl IntervalSet {
    pub fn empty() -> Self {
        IntervalSet { cuts: vec![], at_cut: vec![], gaps: vec![false] }
    }

    pub fn reals() -> Self {
        IntervalSet { cuts: vec![], at_cut: vec![], gaps: vec![true] }
    }

    /// `I = [0, 1]`
    pub fn unit() -> Self {
        IntervalSet::from_interval(&Interval::closed(int(0), int(1)))
    }

    pub fn point(q: Rational) -> Self {
        IntervalSet { cuts: vec![q], at_cut: vec![true], gaps: vec![false, false] }
    }

    pub fn from_interval(iv: &Interval) -> Self {
        use ExtRational::*;
        let s = match (&iv.lo, &iv.hi) {
            (_, NegInf) | (PosInf, _) => IntervalSet::empty(),
            (NegInf, PosInf) => IntervalSet::reals(),
            (NegInf, Finite(b)) => IntervalSet { cuts: vec![b.clone()], at_cut: vec![iv.hi_closed], gaps: vec![true, false] },
            (Finite(a), PosInf) => IntervalSet { cuts: vec![a.clone()], at_cut: vec![iv.lo_closed], gaps: vec![false, true] },
            (Finite(a), Finite(b)) => match a.cmp(b) {
                Ordering::Less => IntervalSet {
                    cuts: vec![a.clone(), b.clone()],
                    at_cut: vec![iv.lo_closed, iv.hi_closed],
                    gaps: vec![false, true, false],
                },
                Ordering::Equal if iv.lo_closed && iv.hi_closed => IntervalSet::point(a.clone()),
                _ => IntervalSet::empty(),
            },
        };
        s.canonical()
    }

    pub fn from_intervals<'a>(ivs: impl IntoIterator<Item = &'a Interval>) -> Self {
        ivs.into_iter()
            .fold(IntervalSet::empty(), |acc, iv| acc.union(&IntervalSet::from_interval(iv)))
    }

    /// Open interval `(a, b)`; empty when `a >= b`.
    pub fn open_interval(a: Rational, b: Rational) -> Self {
        IntervalSet::from_interval(&Interval::open(a.into(), b.into()))
    }

    fn canonical(mut self) -> Self {
        let mut cuts = Vec::with_capacity(self.cuts.len());
        let mut at = Vec::with_capacity(self.cuts.len());
        let mut gaps = vec![self.gaps[0]];
        for (i, c) in std::mem::take(&mut self.cuts).into_iter().enumerate() {
            let left = *gaps.last().unwrap();
            let right = self.gaps[i + 1];
            if left == self.at_cut[i] && self.at_cut[i] == right {
                continue;
            }
            cuts.push(c);
            at.push(self.at_cut[i]);
            gaps.push(right);
        }
        IntervalSet { cuts, at_cut: at, gaps }
    }

    pub fn contains(&self, q: &Rational) -> bool {
        match self.cuts.binary_search(q) {
            Ok(i) => self.at_cut[i],
            Err(i) => self.gaps[i],
        }
    }

    fn sample_gap(cuts: &[Rational], j: usize) -> Rational {
        match (j.checked_sub(1).map(|i| &cuts[i]), cuts.get(j)) {
            (None, None) => Rational::zero(),
            (None, Some(c)) => c - int(1),
            (Some(c), None) => c + int(1),
            (Some(a), Some(b)) => half(a, b),
        }
    }

    fn combine(&self, other: &IntervalSet, f: impl Fn(bool, bool) -> bool) -> IntervalSet {
        let mut cuts: Vec<Rational> = self.cuts.iter().chain(&other.cuts).cloned().collect();
        cuts.sort();
        cuts.dedup();
        let at_cut = cuts.iter().map(|c| f(self.contains(c), other.contains(c))).collect();
        let gaps = (0..=cuts.len())
            .map(|j| {
                let s = IntervalSet::sample_gap(&cuts, j);
                f(self.contains(&s), other.contains(&s))
            })
            .collect();
        IntervalSet { cuts, at_cut, gaps }.canonical()
    }

    pub fn union(&self, other: &IntervalSet) -> IntervalSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &IntervalSet) -> IntervalSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &IntervalSet) -> IntervalSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn complement(&self) -> IntervalSet {
        IntervalSet {
            cuts: self.cuts.clone(),
            at_cut: self.at_cut.iter().map(|b| !b).collect(),
            gaps: self.gaps.iter().map(|b| !b).collect(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.cuts.is_empty() && !self.gaps[0]
    }

    pub fn is_subset(&self, other: &IntervalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &IntervalSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Open in ℝ: no cut point belongs to the set (in canonical form a
    /// member cut always borders a non-member gap).
    pub fn is_open(&self) -> bool {
        self.at_cut.iter().all(|b| !b)
    }

    /// Open relative to `I = [0, 1]`: a subset of `I` of the form `G ∩ I`
    /// with `G` open, so member cuts may only sit at 0 or 1 and must face
    /// into `I`.
    pub fn is_relatively_open_in_unit(&self) -> bool {
        if !self.is_subset(&IntervalSet::unit()) {
            return false;
        }
        let (zero, one) = (int(0), int(1));
        self.cuts.iter().enumerate().all(|(i, c)| {
            !self.at_cut[i]
                || (*c == zero && self.gaps[i + 1])
                || (*c == one && self.gaps[i])
        })
    }

    /// Maximal intervals in increasing order.
    pub fn intervals(&self) -> Vec<Interval> {
        let k = self.cuts.len();
        let mut out = Vec::new();
        // Segment 2j is gap j, segment 2j+1 is cut j.
        let member = |s: usize| if s % 2 == 0 { self.gaps[s / 2] } else { self.at_cut[s / 2] };
        let lower = |s: usize| -> (ExtRational, bool) {
            if s % 2 == 1 {
                (self.cuts[s / 2].clone().into(), true)
            } else if s == 0 {
                (ExtRational::NegInf, false)
            } else {
                (self.cuts[s / 2 - 1].clone().into(), false)
            }
        };
        let upper = |s: usize| -> (ExtRational, bool) {
            if s % 2 == 1 {
                (self.cuts[s / 2].clone().into(), true)
            } else if s / 2 == k {
                (ExtRational::PosInf, false)
            } else {
                (self.cuts[s / 2].clone().into(), false)
            }
        };
        let mut s = 0;
        while s <= 2 * k {
            if !member(s) {
                s += 1;
                continue;
            }
            let start = s;
            while s < 2 * k && member(s + 1) {
                s += 1;
            }
            let (lo, lo_closed) = lower(start);
            let (hi, hi_closed) = upper(s);
            out.push(Interval { lo, lo_closed, hi, hi_closed });
            s += 1;
        }
        out
    }

    /// Order-convex (empty counts as an interval).
    pub fn is_interval(&self) -> bool {
        self.intervals().len() <= 1
    }

    /// A member point, chosen inside the first maximal interval.
    pub fn representative(&self) -> Option<Rational> {
        self.intervals().first().map(Interval::representative)
    }

    pub fn cut_points(&self) -> &[Rational] {
        &self.cuts
    }
}

impl fmt::Display for IntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ivs = self.intervals();
        if ivs.is_empty() {
            return f.write_str("{}");
        }
        let parts: Vec<String> = ivs.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" u "))
    }
}

/// A finite union of open rational intervals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatOpenSet(IntervalSet);

impl RatOpenSet {
    pub fn new(set: IntervalSet) -> Result<Self> {
        if set.is_open() {
            Ok(RatOpenSet(set))
        } else {
            Err(Error::Schema(format!("{set} is not open")))
        }
    }

    pub fn empty() -> Self {
        RatOpenSet(IntervalSet::empty())
    }

    pub fn reals() -> Self {
        RatOpenSet(IntervalSet::reals())
    }

    /// `(a, b)`, rejecting `a >= b`.
    pub fn interval(a: ExtRational, b: ExtRational) -> Result<Self> {
        if a >= b || a == ExtRational::PosInf || b == ExtRational::NegInf {
            return Err(Error::DegenerateInterval(format!("({a},{b})")));
        }
        Ok(RatOpenSet(IntervalSet::from_interval(&Interval::open(a, b))))
    }

    /// `M^a = (a, ∞)`
    pub fn ray_above(a: Rational) -> Self {
        RatOpenSet(IntervalSet::from_interval(&Interval::open(a.into(), ExtRational::PosInf)))
    }

    /// `N^b = (−∞, b)`
    pub fn ray_below(b: Rational) -> Self {
        RatOpenSet(IntervalSet::from_interval(&Interval::open(ExtRational::NegInf, b.into())))
    }

    pub fn set(&self) -> &IntervalSet {
        &self.0
    }

    pub fn into_set(self) -> IntervalSet {
        self.0
    }
}

impl fmt::Display for RatOpenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn ros_union(a: &RatOpenSet, b: &RatOpenSet) -> RatOpenSet {
    RatOpenSet(a.0.union(&b.0))
}

pub fn ros_intersection(a: &RatOpenSet, b: &RatOpenSet) -> RatOpenSet {
    RatOpenSet(a.0.intersection(&b.0))
}

/// A soft set over a subset of ℝ: one interval set per parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftIntervalSet {
    params: Arc<ParamSet>,
    slices: Vec<IntervalSet>,
}

impl SoftIntervalSet {
    pub fn new(params: Arc<ParamSet>, slices: Vec<IntervalSet>) -> Result<Self> {
        if slices.len() != params.len() {
            return Err(Error::Schema(format!("expected {} slices, got {}", params.len(), slices.len())));
        }
        Ok(SoftIntervalSet { params, slices })
    }

    pub fn absolute(params: Arc<ParamSet>, g: IntervalSet) -> Self {
        let slices = vec![g; params.len()];
        SoftIntervalSet { params, slices }
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    pub fn slices(&self) -> &[IntervalSet] {
        &self.slices
    }

    pub fn slice(&self, e: usize) -> &IntervalSet {
        &self.slices[e]
    }

    pub fn as_absolute(&self) -> Option<&IntervalSet> {
        let first = &self.slices[0];
        self.slices.iter().all(|s| s == first).then_some(first)
    }

    /// Membership in `(𝒰_ξ)_I`: absolute with a relatively open slice.
    pub fn is_soft_open_in_unit(&self) -> bool {
        self.as_absolute().is_some_and(IntervalSet::is_relatively_open_in_unit)
    }

    /// Membership in `𝒰_ξ`: absolute with an open slice.
    pub fn is_soft_open_in_reals(&self) -> bool {
        self.as_absolute().is_some_and(IntervalSet::is_open)
    }
}

impl fmt::Display for SoftIntervalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (e, s) in self.slices.iter().enumerate() {
            if e > 0 {
                f.write_str(",")?;
            }
            write!(f, "({},{s})", self.params.label(e))?;
        }
        f.write_str("}")
    }
}

/// A soft usual open `H^G_ξ`, stored as `G`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SoftUsualOpen {
    params: Arc<ParamSet>,
    g: RatOpenSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ray {
    /// `M^a = (a, ∞)`
    Above(Rational),
    /// `N^b = (−∞, b)`
    Below(Rational),
}

impl SoftUsualOpen {
    pub fn new(params: Arc<ParamSet>, g: RatOpenSet) -> Self {
        SoftUsualOpen { params, g }
    }

    pub fn set(&self) -> &RatOpenSet {
        &self.g
    }

    pub fn params(&self) -> &Arc<ParamSet> {
        &self.params
    }

    pub fn to_soft(&self) -> SoftIntervalSet {
        SoftIntervalSet::absolute(self.params.clone(), self.g.0.clone())
    }

    /// `(H^G_ξ)_I`, whose slices are `G ∩ I`.
    pub fn subspace_on_unit(&self) -> SoftIntervalSet {
        SoftIntervalSet::absolute(self.params.clone(), self.g.0.intersection(&IntervalSet::unit()))
    }
}

/// `H^{(a,b)}_ξ`
pub fn soft_usual_basic(params: Arc<ParamSet>, a: ExtRational, b: ExtRational) -> Result<SoftUsualOpen> {
    Ok(SoftUsualOpen::new(params, RatOpenSet::interval(a, b)?))
}

/// `M^a_ξ` or `N^b_ξ`.
pub fn soft_usual_subbasic(params: Arc<ParamSet>, ray: Ray) -> SoftUsualOpen {
    let g = match ray {
        Ray::Above(a) => RatOpenSet::ray_above(a),
        Ray::Below(b) => RatOpenSet::ray_below(b),
    };
    SoftUsualOpen::new(params, g)
}

/// Image of an interval set under `t ↦ α·t + β`.
pub fn affine_image(alpha: &Rational, beta: &Rational, s: &IntervalSet) -> IntervalSet {
    if s.is_empty() {
        return IntervalSet::empty();
    }
    if alpha.is_zero() {
        return IntervalSet::point(beta.clone());
    }
    let map = |x: &ExtRational| match x {
        ExtRational::Finite(q) => ExtRational::Finite(alpha * q + beta),
        inf if alpha.is_positive() => inf.clone(),
        ExtRational::NegInf => ExtRational::PosInf,
        _ => ExtRational::NegInf,
    };
    let ivs: Vec<Interval> = s
        .intervals()
        .iter()
        .map(|iv| {
            let (lo, hi) = (map(&iv.lo), map(&iv.hi));
            if alpha.is_positive() {
                Interval { lo, lo_closed: iv.lo_closed, hi, hi_closed: iv.hi_closed }
            } else {
                Interval { lo: hi, lo_closed: iv.hi_closed, hi: lo, hi_closed: iv.lo_closed }
            }
        })
        .collect();
    IntervalSet::from_intervals(&ivs)
}

/// A piecewise-affine map `I → ℝ` with closed pieces `[t_{i-1}, t_i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePath {
    breakpoints: Vec<Rational>,
    /// `(α, β)` per piece.
    pieces: Vec<(Rational, Rational)>,
}

pub(crate) fn check_breakpoints(bps: &[Rational]) -> Result<()> {
    if bps.len() < 2 {
        return Err(Error::MalformedPath("need at least two breakpoints".into()));
    }
    if bps[0] != int(0) || *bps.last().unwrap() != int(1) {
        return Err(Error::MalformedPath("breakpoints must run from 0 to 1".into()));
    }
    if bps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::MalformedPath("breakpoints must increase strictly".into()));
    }
    Ok(())
}

impl AffinePath {
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<(Rational, Rational)>) -> Result<Self> {
        check_breakpoints(&breakpoints)?;
        if pieces.len() + 1 != breakpoints.len() {
            return Err(Error::MalformedPath(format!(
                "{} breakpoints need {} pieces, got {}",
                breakpoints.len(),
                breakpoints.len() - 1,
                pieces.len()
            )));
        }
        Ok(AffinePath { breakpoints, pieces })
    }

    /// `t ↦ α·t + β` on all of `I`.
    pub fn single(alpha: Rational, beta: Rational) -> Self {
        AffinePath { breakpoints: vec![int(0), int(1)], pieces: vec![(alpha, beta)] }
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[(Rational, Rational)] {
        &self.pieces
    }

    fn piece_at(&self, i: usize, t: &Rational) -> Rational {
        let (a, b) = &self.pieces[i];
        a * t + b
    }

    /// Value at `t`, read from the first piece whose closed interval holds it.
    pub fn eval(&self, t: &Rational) -> Result<Rational> {
        if *t < int(0) || *t > int(1) {
            return Err(Error::OutOfRange(format!("t = {} is outside [0,1]", format_rational(t))));
        }
        let i = self.breakpoints[1..].iter().position(|b| t <= b).unwrap();
        Ok(self.piece_at(i, t))
    }

    pub fn start(&self) -> Rational {
        self.piece_at(0, &int(0))
    }

    pub fn end(&self) -> Rational {
        self.piece_at(self.pieces.len() - 1, &int(1))
    }

    /// Image of the sub-interval piece `i` restricted to `s`.
    pub fn image(&self, s: &IntervalSet) -> IntervalSet {
        self.pieces
            .iter()
            .enumerate()
            .map(|(i, (a, b))| {
                let dom = IntervalSet::from_interval(&Interval::closed(
                    self.breakpoints[i].clone(),
                    self.breakpoints[i + 1].clone(),
                ));
                affine_image(a, b, &s.intersection(&dom))
            })
            .fold(IntervalSet::empty(), |acc, x| acc.union(&x))
    }
}

/// Soft path test for piecewise-affine maps into `(ℝ, 𝒰_ξ)`: adjacent
/// pieces must agree at each interior breakpoint. Returns the first
/// breakpoint where they disagree.
pub fn affine_path_mismatch(p: &AffinePath) -> Option<Rational> {
    (1..p.pieces.len())
        .find(|&i| p.piece_at(i - 1, &p.breakpoints[i]) != p.piece_at(i, &p.breakpoints[i]))
        .map(|i| p.breakpoints[i].clone())
}

pub fn is_soft_path_affine(p: &AffinePath) -> bool {
    affine_path_mismatch(p).is_none()
}

/// `t ↦ (1 − t)·a + t·b`
pub fn convex_combination_path(a: Rational, b: Rational) -> AffinePath {
    AffinePath::single(&b - &a, a)
}

/// Smallest `t` with `γ(t) = c`, for `c` in the range of a continuous path.
pub fn ivt_solve(p: &AffinePath, c: &Rational) -> Result<Rational> {
    if let Some(t) = affine_path_mismatch(p) {
        return Err(Error::MalformedPath(format!("pieces disagree at t = {}", format_rational(&t))));
    }
    let vals: Vec<Rational> = p.breakpoints.iter().map(|t| p.eval(t).unwrap()).collect();
    let (lo, hi) = (vals.iter().min().unwrap(), vals.iter().max().unwrap());
    if c < lo || c > hi {
        return Err(Error::OutOfRange(format!(
            "{} is outside the range [{}, {}]",
            format_rational(c),
            format_rational(lo),
            format_rational(hi)
        )));
    }
    for (i, (a, b)) in p.pieces.iter().enumerate() {
        let (u, v) = (&vals[i], &vals[i + 1]);
        if (u <= c && c <= v) || (v <= c && c <= u) {
            if a.is_zero() {
                return Ok(p.breakpoints[i].clone());
            }
            return Ok((c - b) / a);
        }
    }
    unreachable!("a continuous path attains every value between its extremes")
}

/// Outcome of probing a claimed partition of ℝ (or of `I`) into two opens.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Separation {
    /// A point lying in both parts.
    InBoth(Rational),
    /// A point of the space lying in neither part.
    InNeither(Rational),
    /// The inputs are not two nonempty opens of the space.
    NoSeparation,
}

impl Separation {
    pub fn point(&self) -> Option<&Rational> {
        match self {
            Separation::InBoth(q) | Separation::InNeither(q) => Some(q),
            Separation::NoSeparation => None,
        }
    }
}

fn separation_in(space: &IntervalSet, g: &IntervalSet, g2: &IntervalSet) -> Separation {
    if g.is_empty() || g2.is_empty() {
        return Separation::NoSeparation;
    }
    if let Some(q) = g.intersection(g2).representative() {
        return Separation::InBoth(q);
    }
    match space.difference(&g.union(g2)).representative() {
        Some(q) => Separation::InNeither(q),
        None => Separation::NoSeparation,
    }
}

/// ℝ is connected: two nonempty opens either overlap or miss a point.
pub fn separation_witness(g: &RatOpenSet, g2: &RatOpenSet) -> Separation {
    separation_in(&IntervalSet::reals(), &g.0, &g2.0)
}

/// The same for relative opens of `I`.
pub fn separation_witness_unit(g: &IntervalSet, g2: &IntervalSet) -> Separation {
    if !g.is_relatively_open_in_unit() || !g2.is_relatively_open_in_unit() {
        return Separation::NoSeparation;
    }
    separation_in(&IntervalSet::unit(), g, g2)
}

/// Order-convexity test with the subspace separation used when it fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalCriterion {
    Interval,
    Split {
        /// A point outside `A` lying between two points of `A`.
        x: Rational,
        /// `(−∞, x) ∩ A`
        lower: IntervalSet,
        /// `(x, ∞) ∩ A`
        upper: IntervalSet,
    },
}

/// Picks `x` in the first gap of `A` (its midpoint, or the gap point when
/// the gap is a single point) and splits `A` at `x`.
pub fn interval_criterion(a: &IntervalSet) -> IntervalCriterion {
    let ivs = a.intervals();
    if ivs.len() <= 1 {
        return IntervalCriterion::Interval;
    }
    let (left, right) = (&ivs[0].hi, &ivs[1].lo);
    let (l, r) = (left.finite().unwrap(), right.finite().unwrap());
    let x = half(l, r);
    let lower = a.intersection(&IntervalSet::from_interval(&Interval::open(ExtRational::NegInf, x.clone().into())));
    let upper = a.intersection(&IntervalSet::from_interval(&Interval::open(x.clone().into(), ExtRational::PosInf)));
    IntervalCriterion::Split { x, lower, upper }
}

/// Unit rational, for callers that want to avoid importing num traits.
pub fn one() -> Rational {
    Rational::one()
}
