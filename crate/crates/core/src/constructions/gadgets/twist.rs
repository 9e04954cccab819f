//! The full-twist finger: the first edge leaves its crossing-free end, runs
//! above everything to the crossing-free end of the second edge and wraps
//! around it.

use num::{One, Zero};

use super::plane::*;
use crate::diagram::Edge;
use crate::error::{Error, Result};
use crate::geometry::{Point3, Projection, SpatialGraph, Q};

fn last_crossing(g: &SpatialGraph, e: Edge) -> Result<Q> {
    Ok(g.crossing_parameters(Projection::Z, e, 0)?
        .pop()
        .unwrap_or_else(Q::zero))
}

/// Adds `twists` full twists of `a` around `b`, both straight edges of `g`.
/// `over_first` decides whether the finger starts by passing over `b`, which
/// fixes the sign of all `2·twists` new crossings.
pub(crate) fn add_twist(g: &mut SpatialGraph, a: Edge, b: Edge, twists: u64, over_first: bool) -> Result<()> {
    if twists == 0 {
        return Ok(());
    }
    if a == b || !g.corners(a).is_empty() || !g.corners(b).is_empty() {
        return Err(Error::InvalidArgument(format!(
            "twist needs two distinct straight edges, got {a} and {b}"
        )));
    }
    let top = max_height(g) + q(10);
    let (a0, a1) = (g.vertex(a.u).clone(), g.vertex(a.v).clone());
    let (b0, b1) = (g.vertex(b.u).clone(), g.vertex(b.v).clone());
    let ta = last_crossing(g, a)?;
    let tb = last_crossing(g, b)?;
    let on_a = |k: i64| lerp(&a0, &a1, &(&ta + (Q::one() - &ta) * frac(k, 5)));
    let x_out = on_a(1);
    let x_back = on_a(4);
    let r_out = lift(&flat(&on_a(2)), top.clone());
    let r_back = lift(&flat(&on_a(3)), top.clone());

    let dir = sub(&flat(&b1), &flat(&b0));
    let mut nrm = (-dir.1.clone(), dir.0.clone());
    if cross(&dir, &sub(&flat(&a1), &flat(&b0))) < Q::zero() {
        nrm = scale(&nrm, &q(-1));
    }
    let on_b = |t: &Q| lerp(&b0, &b1, t);
    let m = 2 * twists as i64;
    let mut delta = (Q::one() - &tb) / q(8);
    for _ in 0..40 {
        for forward in [true, false] {
            let mut params: Vec<Q> = (0..=m)
                .map(|i| &tb + (Q::one() - &tb) * (frac(1, 4) + frac(i, 2 * m)))
                .collect();
            if !forward {
                params.reverse();
            }
            let off = |t: &Q, k: i64| add(&flat(&on_b(t)), &scale(&nrm, &(&delta * q(k))));
            let first = &params[0];
            let last = &params[m as usize];
            let v_out = lift(&off(first, 4), top.clone());
            let v_back = lift(&off(last, 4), top.clone());
            if segments_meet(&flat(&r_out), &flat(&v_out), &flat(&v_back), &flat(&r_back)) {
                continue;
            }
            let mut corners: Vec<Point3> = vec![
                x_out.clone(),
                r_out.clone(),
                v_out,
                lift(&off(first, 2), top.clone()),
            ];
            let low_start = corners.len();
            for i in 0..=m as usize {
                let side = if i % 2 == 0 { 1 } else { -1 };
                corners.push(lift(&off(&params[i], side), on_b(&params[i])[2].clone()));
                if i < m as usize {
                    let over = (i % 2 == 0) == over_first;
                    let bump = if over { q(1) } else { q(-1) };
                    for f in [frac(1, 4), frac(3, 4)] {
                        let t = &params[i] + (&params[i + 1] - &params[i]) * &f;
                        let s = (if side > 0 { q(1) } else { q(-1) }) * (Q::one() - q(2) * &f);
                        corners.push(lift(&off(&t, 0), on_b(&t)[2].clone() + &bump));
                        let last = corners.last_mut().unwrap();
                        let shifted = add(&flat(last), &scale(&nrm, &(&delta * s)));
                        *last = lift(&shifted, last[2].clone());
                    }
                }
            }
            let low_end = corners.len();
            corners.push(lift(&off(last, 2), top.clone()));
            corners.push(v_back);
            corners.push(r_back.clone());
            corners.push(x_back.clone());
            let mut trial = g.clone();
            trial.set_corners(a, corners.clone())?;
            if accept(&trial, a, b, low_start, low_end, corners.len(), m as usize) {
                *g = trial;
                return Ok(());
            }
        }
        delta = delta / q(2);
    }
    Err(Error::Degenerate(format!("no room to twist {a} around {b}")))
}

/// The low part of the finger crosses only `b`, exactly `m` times, and the
/// rises off `a`'s line cross nothing.
fn accept(g: &SpatialGraph, a: Edge, b: Edge, low_start: usize, low_end: usize, corner_count: usize, m: usize) -> bool {
    let Ok(list) = g.arrangement(Projection::Z) else {
        return false;
    };
    // segment i runs from polyline point i to i+1; corner j is point j+1
    let rise = 1;
    let fall = corner_count - 1;
    let weave = low_start + 1..low_end;
    let descent = low_start;
    let ascent = low_end;
    let mut hits = 0;
    for c in &list {
        for (mine, other) in [(&c.first, &c.second), (&c.second, &c.first)] {
            if mine.0 != a {
                continue;
            }
            let i = mine.1;
            if i == rise || i == fall || i == descent || i == ascent {
                return false;
            }
            if weave.contains(&i) {
                if other.0 != b {
                    return false;
                }
                hits += 1;
            }
        }
    }
    hits == m
}
