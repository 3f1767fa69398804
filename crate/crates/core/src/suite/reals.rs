//! Properties of the soft usual topology on ℝ and on the unit interval.

use rand::Rng;
use serde_json::json;

use super::{Ctx, PropertyCase, Tally};
use crate::instances::{
    random_affine_path, random_non_interval, random_partition_candidate, random_rational, random_unit_partition_candidate,
};
use crate::real_line::{
    affine_image, convex_combination_path, format_rational, int, interval_criterion, is_soft_path_affine, ivt_solve, rat,
    separation_witness, separation_witness_unit, ExtRational, Interval, IntervalCriterion, IntervalSet, Rational, Separation,
};

/// A returned point really is in both parts or in neither.
pub(crate) fn separation_is_valid(space: &IntervalSet, g: &IntervalSet, g2: &IntervalSet, s: &Separation) -> bool {
    match s {
        Separation::InBoth(q) => g.contains(q) && g2.contains(q),
        Separation::InNeither(q) => space.contains(q) && !g.contains(q) && !g2.contains(q),
        Separation::NoSeparation => false,
    }
}

/// `x ∉ A` lies between points of `A`, and the two halves are `A` cut at `x`.
pub(crate) fn split_is_valid(a: &IntervalSet, c: &IntervalCriterion) -> bool {
    match c {
        IntervalCriterion::Interval => false,
        IntervalCriterion::Split { x, lower, upper } => {
            let below = IntervalSet::from_interval(&Interval::open(ExtRational::NegInf, x.clone().into()));
            let above = IntervalSet::from_interval(&Interval::open(x.clone().into(), ExtRational::PosInf));
            !a.contains(x)
                && !lower.is_empty()
                && !upper.is_empty()
                && *lower == a.intersection(&below)
                && *upper == a.intersection(&above)
                && lower.union(upper) == *a
        }
    }
}

fn show(s: &IntervalSet) -> String {
    s.to_string()
}

fn doubling(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng("ex-4.3", "t-eps");
    let gamma = convex_combination_path(int(0), int(2));
    let mut tally = Tally::default();
    for _ in 0..ctx.budget {
        let t = random_rational(&mut rng, 0, 1, 16);
        let eps = rat(rng.random_range(1..=16), rng.random_range(1..=16));
        let half = &eps / int(2);
        let src = IntervalSet::open_interval(&t - &half, &t + &half);
        let two_t = &t * int(2);
        let want = IntervalSet::open_interval(&two_t - &eps, &two_t + &eps);
        let got = affine_image(&int(2), &int(0), &src);
        tally.record(got == want && is_soft_path_affine(&gamma), || {
            json!({"t": format_rational(&t), "eps": format_rational(&eps), "image": show(&got)})
        });
    }
    tally
}

fn convex(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng("ex-4.7", "endpoints");
    let mut tally = Tally::default();
    for _ in 0..ctx.budget {
        let a = random_rational(&mut rng, -10, 10, 12);
        let b = random_rational(&mut rng, -10, 10, 12);
        let p = convex_combination_path(a.clone(), b.clone());
        let ok = is_soft_path_affine(&p) && p.start() == a && p.end() == b;
        tally.record(ok, || json!({"a": format_rational(&a), "b": format_rational(&b)}));
    }
    tally
}

fn non_intervals(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng("prop-4.8", "unions");
    let mut tally = Tally::default();
    for _ in 0..ctx.budget {
        let a = random_non_interval(&mut rng);
        let c = interval_criterion(&a);
        tally.record(split_is_valid(&a, &c), || json!({"set": show(&a), "criterion": format!("{c:?}")}));
    }
    tally
}

fn between(rng: &mut impl Rng, a: &Rational, b: &Rational) -> Rational {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let k = rng.random_range(1..=15);
    lo + (hi - lo) * rat(k, 16)
}

fn ivt(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng("thm-4.9", "paths");
    let mut tally = Tally::default();
    for _ in 0..ctx.budget {
        let p = random_affine_path(&mut rng);
        let c = between(&mut rng, &p.start(), &p.end());
        let t = ivt_solve(&p, &c);
        let ok = t.as_ref().is_ok_and(|t| *t >= int(0) && *t <= int(1) && p.eval(t).ok().as_ref() == Some(&c));
        tally.record(ok, || {
            json!({
                "breakpoints": p.breakpoints().iter().map(format_rational).collect::<Vec<_>>(),
                "pieces": p.pieces().iter().map(|(a, b)| [format_rational(a), format_rational(b)]).collect::<Vec<_>>(),
                "c": format_rational(&c),
            })
        });
    }
    tally
}

fn reals_connected(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng("prop-4.10", "partitions");
    let mut tally = Tally::default();
    for _ in 0..ctx.budget {
        let (g, g2) = random_partition_candidate(&mut rng);
        let s = separation_witness(&g, &g2);
        tally.record(separation_is_valid(&IntervalSet::reals(), g.set(), g2.set(), &s), || {
            json!({"g": show(g.set()), "g2": show(g2.set()), "witness": format!("{s:?}")})
        });
    }
    tally
}

fn unit_connected(ctx: &Ctx) -> Tally {
    let mut rng = ctx.rng("prop-4.11", "partitions");
    let mut tally = Tally::default();
    for _ in 0..ctx.budget {
        let (g, g2) = random_unit_partition_candidate(&mut rng);
        let s = separation_witness_unit(&g, &g2);
        tally.record(separation_is_valid(&IntervalSet::unit(), &g, &g2, &s), || {
            json!({"g": show(&g), "g2": show(&g2), "witness": format!("{s:?}")})
        });
    }
    tally
}

pub(crate) fn run(id: &str, ctx: &Ctx) -> Option<Vec<PropertyCase>> {
    let (tally, what) = match id {
        "ex-4.3" => (doubling(ctx), "(t, eps) pairs"),
        "ex-4.7" => (convex(ctx), "endpoint pairs"),
        "prop-4.8" => (non_intervals(ctx), "unions of 2-4 separated intervals"),
        "thm-4.9" => (ivt(ctx), "affine paths with an intermediate value"),
        "prop-4.10" => (reals_connected(ctx), "candidate partitions of the reals"),
        "prop-4.11" => (unit_connected(ctx), "candidate partitions of the unit interval"),
        _ => return None,
    };
    Some(vec![tally.into_case(id, ctx.random_label(what))])
}
