//! The delta gadget: a closed Borromean braid drawn outside the embedding,
//! one component band-summed to each edge of a path of length three. The
//! bands run above everything else, so the only new knotting is the
//! Borromean tangle itself.

use std::collections::BTreeMap;

use num::{One, Signed, ToPrimitive, Zero};

use super::plane::*;
use crate::braid::{borromean_braid, BraidWord};
use crate::diagram::Edge;
use crate::error::{Error, Result};
use crate::geometry::{Point3, Projection, SegmentCrossing, SpatialGraph, Q};
use crate::graph::{Cycle, Vertex};
use crate::invariants::a2;

/// A point of the gadget drawing: plane coordinates in the gadget frame and
/// a height offset.
type GPoint = (Q, Q, Q);

/// Cyclic polylines of the closed braid, one per strand, in gadget
/// coordinates. Rows sit at `y = 0, -2, -4`; the closure arcs are nested
/// below them with the top row outermost.
fn closed_braid(word: &BraidWord) -> Vec<Vec<GPoint>> {
    let n = word.strands();
    let letters = word.letters();
    let cols = letters.len() as i64;
    let row = |p: usize| q(-2 * p as i64);
    let col = |k: i64| q(2 * k);
    let mut pos: Vec<usize> = (0..n).collect(); // pos[strand]
    let mut paths: Vec<Vec<GPoint>> = (0..n).map(|s| vec![(col(0), row(s), q(0))]).collect();
    for (k, l) in letters.iter().enumerate() {
        let (top, bottom) = (l.gen - 1, l.gen);
        let up = pos.iter().position(|&p| p == bottom).unwrap();
        let down = pos.iter().position(|&p| p == top).unwrap();
        let over = if l.exp > 0 { up } else { down };
        let x0 = col(k as i64);
        for s in [up, down] {
            let (y0, y1) = (row(pos[s]), row(if s == up { top } else { bottom }));
            if s == over {
                for f in [frac(1, 4), frac(3, 4)] {
                    paths[s].push((&x0 + q(2) * &f, &y0 + (&y1 - &y0) * &f, q(1)));
                }
            }
            paths[s].push((col(k as i64 + 1), y1, q(0)));
        }
        pos[up] = top;
        pos[down] = bottom;
        for s in 0..n {
            if s != up && s != down {
                paths[s].push((col(k as i64 + 1), row(pos[s]), q(0)));
            }
        }
    }
    for s in 0..n {
        assert_eq!(pos[s], s, "pure braid");
        let depth = (n - s) as i64;
        let (xr, xl) = (col(cols) + q(2 * depth), q(-2 * depth));
        let yb = row(n - 1) - q(2 * depth);
        let y = row(s);
        paths[s].push((xr.clone(), y.clone(), q(0)));
        paths[s].push((xr, yb.clone(), q(0)));
        paths[s].push((xl.clone(), yb, q(0)));
        paths[s].push((xl, y, q(0)));
    }
    paths
}

/// Opens each component at the middle of its first piece along the top row.
/// Returns the cut abscissa and the open path from just right of the cut,
/// around, to just left of it.
fn cut(paths: &[Vec<GPoint>]) -> Vec<(Q, Vec<GPoint>)> {
    let w = frac(1, 2);
    paths
        .iter()
        .map(|cyc| {
            let m = cyc.len();
            let i = (0..m)
                .find(|&i| {
                    let (a, b) = (&cyc[i], &cyc[(i + 1) % m]);
                    a.1.is_zero() && b.1.is_zero() && a.2.is_zero() && b.2.is_zero() && a.0 < b.0
                })
                .expect("every component reaches the top row");
            let (a, b) = (&cyc[i], &cyc[(i + 1) % m]);
            let xc = (&a.0 + &b.0) / q(2);
            let mut open = vec![(&xc + &w, q(0), q(0))];
            for j in 1..=m {
                open.push(cyc[(i + j) % m].clone());
            }
            open.push((&xc - &w, q(0), q(0)));
            (xc, open)
        })
        .collect()
}

const DIRECTIONS: [(i64, i64); 16] = [
    (0, -1),
    (1, -2),
    (-1, -2),
    (1, -1),
    (-1, -1),
    (2, -1),
    (-2, -1),
    (1, 0),
    (-1, 0),
    (2, 1),
    (-2, 1),
    (1, 1),
    (-1, 1),
    (1, 2),
    (-1, 2),
    (0, 1),
];

/// Bands that run through their component against the natural direction.
/// Reversing one strand of the tangle flips the sign of the move, so the
/// first mask that produces the requested change on a witness knot wins.
const VARIANTS: [[bool; 3]; 8] = [
    [false, false, false],
    [true, false, false],
    [false, true, false],
    [false, false, true],
    [true, true, false],
    [true, false, true],
    [false, true, true],
    [true, true, true],
];

struct Slot {
    /// Segment of the edge's polyline the gadget hangs from.
    segment: usize,
    x: Point3,
    rise: P2,
    fall: P2,
    x_back: Point3,
}

/// Four points on the longest crossing-free stretch of `e`, measured in the
/// projection. Once gadgets are stacked this is the far end of the newest
/// band, so each gadget only has to reach past the previous one.
fn slot(g: &SpatialGraph, e: Edge, hits: &BTreeMap<(Edge, usize), Vec<Q>>) -> Result<Slot> {
    let line = g.polyline(e);
    let mut best: Option<(f64, usize, Q, Q)> = None;
    for i in 0..line.len() - 1 {
        let mut stops = vec![Q::zero()];
        stops.extend(hits.get(&(e, i)).into_iter().flatten().cloned());
        stops.push(Q::one());
        let d = sub(&flat(&line[i + 1]), &flat(&line[i]));
        let len = dot(&d, &d).to_f64().unwrap_or(0.0).sqrt();
        for w in stops.windows(2) {
            let score = (&w[1] - &w[0]).to_f64().unwrap_or(0.0) * len;
            if best.as_ref().map_or(true, |b| score > b.0) {
                best = Some((score, i, w[0].clone(), w[1].clone()));
            }
        }
    }
    let (_, i, lo, hi) = best.expect("edges have segments");
    let width = &hi - &lo;
    let at = |k: i64| {
        let t = simplest_between(&(&lo + &width * frac(2 * k - 1, 10)), &(&lo + &width * frac(2 * k + 1, 10)));
        lerp(&line[i], &line[i + 1], &t)
    };
    Ok(Slot {
        segment: i,
        x: at(1),
        rise: flat(&at(2)),
        fall: flat(&at(3)),
        x_back: at(4),
    })
}

fn witness(path: [Vertex; 4], n: u32) -> Result<Cycle> {
    let mut vs = path.to_vec();
    vs.extend((1..=n).filter(|v| !path.contains(v)));
    Cycle::new(vs)
}

fn witness_a2(g: &SpatialGraph, list: Vec<SegmentCrossing>, c: &Cycle) -> Result<i64> {
    a2(&g.diagram_of(list).extract_knot(c)?)
}

/// Band-sums a Borromean gadget onto the three edges of `path`, changing
/// `a₂` by `sign` on every Hamiltonian knot through the whole path.
pub(crate) fn add_delta(g: &mut SpatialGraph, path: [Vertex; 4], sign: i8) -> Result<()> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument(format!("gadget sign must be ±1, got {sign}")));
    }
    let n = g.n();
    if path.iter().any(|&v| v == 0 || v > n) {
        return Err(Error::InvalidArgument(format!("path {path:?} leaves K_{n}")));
    }
    let mut sorted = path;
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!("path {path:?} repeats a vertex")));
    }
    let edges: Vec<Edge> = path.windows(2).map(|w| Edge::new(w[0], w[1])).collect();
    let list = g
        .arrangement(Projection::Z)
        .map_err(|v| Error::Degenerate(v.to_string()))?;
    let mut hits: BTreeMap<(Edge, usize), Vec<Q>> = BTreeMap::new();
    for c in &list {
        hits.entry(c.first).or_default().push(c.t_first.clone());
        hits.entry(c.second).or_default().push(c.t_second.clone());
    }
    for v in hits.values_mut() {
        v.sort();
    }
    let slots = edges.iter().map(|&e| slot(g, e, &hits)).collect::<Result<Vec<_>>>()?;
    let cycle = witness(path, n)?;
    let before = witness_a2(g, list, &cycle)?;

    let points = all_points(g);
    let (mut lo, mut hi) = (flat(&points[0]), flat(&points[0]));
    for p in &points {
        lo = (lo.0.min(p[0].clone()), lo.1.min(p[1].clone()));
        hi = (hi.0.max(p[0].clone()), hi.1.max(p[1].clone()));
    }
    let center = scale(&add(&lo, &hi), &frac(1, 2));
    let radius = points
        .iter()
        .map(|p| {
            let d = sub(&flat(p), &center);
            d.0.abs() + d.1.abs()
        })
        .max()
        .unwrap();
    let reach = q(radius.ceil().to_integer().to_i64().unwrap_or(i64::MAX / 4) + 25);
    let floor = max_height(g) + q(10);

    for &(dx, dy) in &DIRECTIONS {
        let d = (q(dx), q(dy));
        let origin = add(&center, &scale(&d, &reach));
        let up = scale(&d, &q(-1));
        let right = (up.1.clone(), -up.0.clone());
        for reverse in VARIANTS {
            let Some((trial, list)) = build(g, &edges, &slots, &floor, &origin, &up, &right, reverse)? else {
                continue;
            };
            let change = witness_a2(&trial, list, &cycle)? - before;
            if change == sign as i64 {
                *g = trial;
                return Ok(());
            }
        }
    }
    Err(Error::Degenerate(format!("no room for a delta gadget on {path:?}")))
}

#[allow(clippy::too_many_arguments)]
fn build(
    g: &SpatialGraph,
    edges: &[Edge],
    slots: &[Slot],
    floor: &Q,
    origin: &P2,
    up: &P2,
    right: &P2,
    reverse: [bool; 3],
) -> Result<Option<(SpatialGraph, Vec<SegmentCrossing>)>> {
    let word = borromean_braid();
    let pieces = cut(&closed_braid(&word));
    let place = |p: &GPoint, h: Q| lift(&add(origin, &add(&scale(right, &p.0), &scale(up, &p.1))), h);
    let along = |p: &P2| dot(&sub(p, origin), right);

    // bands keep their left-to-right order: edges sorted by where they
    // attach, components sorted by where they are cut
    let mut by_edge: Vec<usize> = (0..3).collect();
    by_edge.sort_by_key(|&i| along(&slots[i].rise));
    let mut by_cut: Vec<usize> = (0..3).collect();
    by_cut.sort_by(|&a, &b| pieces[a].0.cmp(&pieces[b].0));
    let mut component = [0usize; 3];
    for (rank, &i) in by_edge.iter().enumerate() {
        component[i] = by_cut[rank];
    }

    let mut trial = g.clone();
    let mut checks = Vec::new();
    for (i, &e) in edges.iter().enumerate() {
        let band = floor + q(10 + i as i64);
        let s = &slots[i];
        let mut open = pieces[component[i]].1.clone();
        if (along(&s.rise) < along(&s.fall)) != reverse[i] {
            open.reverse();
        }
        let above = |p: &GPoint| place(&(p.0.clone(), q(1), q(0)), band.clone());
        let mut corners = vec![
            s.x.clone(),
            lift(&s.rise, band.clone()),
            above(&open[0]),
        ];
        for p in &open {
            corners.push(place(p, floor + &p.2));
        }
        let back = &band + frac(1, 2);
        let last = open.last().unwrap();
        corners.push(place(&(last.0.clone(), q(1), q(0)), back.clone()));
        corners.push(lift(&s.fall, back));
        corners.push(s.x_back.clone());
        let k = corners.len();
        let at = s.segment;
        // segments that must stay clear: the rise, the drop onto the gadget,
        // the climb off it and the fall back
        checks.push((e, [at + 1, at + 3, at + k - 3, at + k - 1]));
        let mut all = trial.corners(e).to_vec();
        all.splice(at..at, corners);
        trial.set_corners(e, all)?;
    }
    let Ok(list) = trial.arrangement(Projection::Z) else {
        return Ok(None);
    };
    for c in &list {
        for (e, idx) in &checks {
            if (c.first.0 == *e && idx.contains(&c.first.1)) || (c.second.0 == *e && idx.contains(&c.second.1)) {
                return Ok(None);
            }
        }
    }
    Ok(Some((trial, list)))
}
