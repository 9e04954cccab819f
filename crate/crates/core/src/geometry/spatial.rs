//! Spatial graphs whose edges are polygonal arcs, and their diagrams.

use std::collections::{BTreeMap, HashMap};

use num::{Signed, ToPrimitive};

use super::{sign, GenericCertificate, GenericViolation, Point3, PointSet, Projection, Q};
use crate::diagram::{Diagram, Edge, Meta, Passage, Role};
use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A spatial embedding of `K_n`: vertex positions plus, per edge, the
/// interior corners of its polygonal arc listed from the lower to the higher
/// endpoint. Edges without corners are straight.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialGraph {
    vertices: Vec<Point3>,
    corners: BTreeMap<Edge, Vec<Point3>>,
    pub provenance: Option<Meta>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Node {
    Vertex(Vertex),
    Corner(Edge, usize),
}

struct Seg<'a> {
    edge: Edge,
    index: usize,
    a: (&'a Q, &'a Q),
    b: (&'a Q, &'a Q),
    ha: &'a Q,
    hb: &'a Q,
    start: Node,
    end: Node,
    bbox: [f64; 4],
    fa: (f64, f64),
    fb: (f64, f64),
}

impl Seg<'_> {
    fn dir(&self) -> (Q, Q) {
        (self.b.0 - self.a.0, self.b.1 - self.a.1)
    }

    fn height_at(&self, t: &Q) -> Q {
        self.ha + t * (self.hb - self.ha)
    }

    fn nodes(&self) -> [Node; 2] {
        [self.start, self.end]
    }
}

/// One crossing between segments `first < second` of the global segment list.
#[derive(Debug, Clone)]
pub(crate) struct SegmentCrossing {
    pub first: (Edge, usize),
    pub second: (Edge, usize),
    pub t_first: Q,
    pub t_second: Q,
    pub first_over: bool,
    pub sign: i8,
}

enum Contact {
    None,
    Proper { t: Q, u: Q },
    Touch { at_vertex: Option<Vertex> },
    Overlap,
}

fn cross(o: (&Q, &Q), a: (&Q, &Q), b: (&Q, &Q)) -> Q {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// `p` on the closed segment `ab`, assuming collinearity.
fn within(a: (&Q, &Q), b: (&Q, &Q), p: (&Q, &Q)) -> bool {
    let dot = (p.0 - a.0) * (p.0 - b.0) + (p.1 - a.1) * (p.1 - b.1);
    !dot.is_positive()
}

fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

fn contact(s: &Seg, t: &Seg) -> Contact {
    let d1 = sign(&cross(s.a, s.b, t.a));
    let d2 = sign(&cross(s.a, s.b, t.b));
    let d3 = sign(&cross(t.a, t.b, s.a));
    let d4 = sign(&cross(t.a, t.b, s.b));
    if d1 * d2 < 0 && d3 * d4 < 0 {
        let (ab, cd) = (s.dir(), t.dir());
        let ac = (t.a.0 - s.a.0, t.a.1 - s.a.1);
        let denom = &ab.0 * &cd.1 - &ab.1 * &cd.0;
        let tt = (&ac.0 * &cd.1 - &ac.1 * &cd.0) / &denom;
        let u = (&ac.0 * &ab.1 - &ac.1 * &ab.0) / &denom;
        return Contact::Proper { t: tt, u };
    }
    if d1 == 0 && d2 == 0 {
        // collinear: overlap unless they meet in at most one point
        let on: Vec<bool> = vec![
            within(s.a, s.b, t.a),
            within(s.a, s.b, t.b),
            within(t.a, t.b, s.a),
            within(t.a, t.b, s.b),
        ];
        if !on.iter().any(|&x| x) {
            return Contact::None;
        }
        let shared = [(s.a, t.a), (s.a, t.b), (s.b, t.a), (s.b, t.b)]
            .iter()
            .filter(|(p, q)| p == q)
            .count();
        let touching = on.iter().filter(|&&x| x).count();
        if shared == 1 && touching == 2 {
            return Contact::Touch { at_vertex: None };
        }
        return Contact::Overlap;
    }
    let probes = [
        (d1, s.a, s.b, t.a, t.start),
        (d2, s.a, s.b, t.b, t.end),
        (d3, t.a, t.b, s.a, s.start),
        (d4, t.a, t.b, s.b, s.end),
    ];
    let mut hit = false;
    let mut at_vertex = None;
    for (d, a, b, p, node) in probes {
        if d == 0 && within(a, b, p) {
            hit = true;
            if let Node::Vertex(v) = node {
                at_vertex = Some(v);
            }
        }
    }
    if hit {
        Contact::Touch { at_vertex }
    } else {
        Contact::None
    }
}

/// Whether floating point alone proves that `t` lies strictly on one side
/// of the line through `s` (or vice versa), so the pair cannot meet.
fn clearly_apart(s: &Seg, t: &Seg) -> bool {
    fn side(o: (f64, f64), a: (f64, f64), p: (f64, f64)) -> i8 {
        let (ux, uy, vx, vy) = (a.0 - o.0, a.1 - o.1, p.0 - o.0, p.1 - o.1);
        let v = ux * vy - uy * vx;
        let bound = 1e-9 * (ux.abs() + uy.abs()) * (vx.abs() + vy.abs());
        if v > bound {
            1
        } else if v < -bound {
            -1
        } else {
            0
        }
    }
    let one_side = |s: &Seg, t: &Seg| {
        let (x, y) = (side(s.fa, s.fb, t.fa), side(s.fa, s.fb, t.fb));
        x != 0 && x == y
    };
    one_side(s, t) || one_side(t, s)
}

fn boxes_meet(a: &[f64; 4], b: &[f64; 4]) -> bool {
    let scale = a.iter().chain(b).fold(1.0f64, |m, x| m.max(x.abs()));
    let eps = scale * 1e-9;
    !(a[2] + eps < b[0] || b[2] + eps < a[0] || a[3] + eps < b[1] || b[3] + eps < a[1])
}

impl SpatialGraph {
    /// The straight-line embedding on `points`.
    pub fn straight(points: &PointSet) -> Self {
        let n = points.n();
        let mut corners = BTreeMap::new();
        for u in 1..=n {
            for v in u + 1..=n {
                corners.insert(Edge { u, v }, Vec::new());
            }
        }
        Self {
            vertices: points.points().to_vec(),
            corners,
            provenance: points.provenance.clone(),
        }
    }

    pub fn n(&self) -> u32 {
        self.vertices.len() as u32
    }

    pub fn vertex(&self, v: Vertex) -> &Point3 {
        &self.vertices[v as usize - 1]
    }

    pub fn corners(&self, e: Edge) -> &[Point3] {
        self.corners.get(&e).map_or(&[], Vec::as_slice)
    }

    /// Replaces the interior corners of `e`.
    pub fn set_corners(&mut self, e: Edge, corners: Vec<Point3>) -> Result<()> {
        match self.corners.get_mut(&e) {
            Some(slot) => {
                *slot = corners;
                Ok(())
            }
            None => Err(Error::InvalidArgument(format!("edge {e} is not in K_{}", self.n()))),
        }
    }

    /// The whole arc of `e` from its lower to its higher endpoint.
    pub fn polyline(&self, e: Edge) -> Vec<Point3> {
        let mut out = vec![self.vertex(e.u).clone()];
        out.extend(self.corners(e).iter().cloned());
        out.push(self.vertex(e.v).clone());
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.corners.keys().copied()
    }

    fn segments(&self, proj: Projection) -> Vec<Seg<'_>> {
        let mut segs = Vec::new();
        for (&e, inner) in &self.corners {
            let mut pts: Vec<(&Point3, Node)> = vec![(self.vertex(e.u), Node::Vertex(e.u))];
            pts.extend(inner.iter().enumerate().map(|(i, p)| (p, Node::Corner(e, i))));
            pts.push((self.vertex(e.v), Node::Vertex(e.v)));
            for (index, w) in pts.windows(2).enumerate() {
                let (ax, ay, ha) = proj.split(w[0].0);
                let (bx, by, hb) = proj.split(w[1].0);
                let (fx, fy, gx, gy) = (to_f64(ax), to_f64(ay), to_f64(bx), to_f64(by));
                segs.push(Seg {
                    edge: e,
                    index,
                    a: (ax, ay),
                    b: (bx, by),
                    ha,
                    hb,
                    start: w[0].1,
                    end: w[1].1,
                    bbox: [fx.min(gx), fy.min(gy), fx.max(gx), fy.max(gy)],
                    fa: (fx, fy),
                    fb: (gx, gy),
                });
            }
        }
        segs
    }

    /// Exact general-position check and the list of projected crossings.
    pub(crate) fn arrangement(
        &self,
        proj: Projection,
    ) -> std::result::Result<Vec<SegmentCrossing>, GenericViolation> {
        let n = self.n();
        for a in 1..=n {
            for b in a + 1..=n {
                let (pa, pb) = (proj.split(self.vertex(a)), proj.split(self.vertex(b)));
                if (pa.0, pa.1) == (pb.0, pb.1) {
                    return Err(GenericViolation::SharedProjection { a, b });
                }
            }
        }
        let segs = self.segments(proj);
        for s in &segs {
            if s.a == s.b {
                return Err(GenericViolation::DegenerateSegment { edge: s.edge });
            }
        }
        let mut found: Vec<(usize, usize, Q, Q)> = Vec::new();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let (s, t) = (&segs[i], &segs[j]);
                if !boxes_meet(&s.bbox, &t.bbox) || clearly_apart(s, t) {
                    continue;
                }
                let linked = s.nodes().iter().any(|x| t.nodes().contains(x));
                match contact(s, t) {
                    Contact::None => {}
                    Contact::Proper { t: a, u: b } => found.push((i, j, a, b)),
                    Contact::Touch { .. } if linked => {}
                    Contact::Touch { at_vertex: Some(v) } => {
                        let other = if s.start == Node::Vertex(v) || s.end == Node::Vertex(v) {
                            t.edge
                        } else {
                            s.edge
                        };
                        return Err(GenericViolation::VertexOnSegment { vertex: v, edge: other });
                    }
                    Contact::Touch { at_vertex: None } => {
                        return Err(GenericViolation::CornerContact {
                            first: s.edge,
                            second: t.edge,
                        });
                    }
                    Contact::Overlap => {
                        return Err(GenericViolation::OverlappingSegments {
                            first: s.edge,
                            second: t.edge,
                        });
                    }
                }
            }
        }
        let mut at_point: HashMap<(Q, Q), Vec<usize>> = HashMap::new();
        for (i, j, t, _) in &found {
            let s = &segs[*i];
            let (d0, d1) = s.dir();
            let p = (s.a.0 + t * d0, s.a.1 + t * d1);
            at_point.entry(p).or_default().extend([*i, *j]);
        }
        let mut concurrent: Vec<Vec<Edge>> = at_point
            .values()
            .filter_map(|l| {
                let mut ids = l.clone();
                ids.sort_unstable();
                ids.dedup();
                (ids.len() > 2).then(|| {
                    let mut edges: Vec<Edge> = ids.iter().map(|&i| segs[i].edge).collect();
                    edges.sort();
                    edges.dedup();
                    edges
                })
            })
            .collect();
        concurrent.sort();
        if let Some(edges) = concurrent.into_iter().next() {
            return Err(GenericViolation::ConcurrentSegments { edges });
        }
        let mut out = Vec::with_capacity(found.len());
        for (i, j, t, u) in found {
            let (s, r) = (&segs[i], &segs[j]);
            let (hs, hr) = (s.height_at(&t), r.height_at(&u));
            if hs == hr {
                return Err(GenericViolation::EqualHeights {
                    first: s.edge,
                    second: r.edge,
                });
            }
            let first_over = hs > hr;
            let (dov, dun) = if first_over { (s.dir(), r.dir()) } else { (r.dir(), s.dir()) };
            let sg = sign(&(&dov.0 * &dun.1 - &dov.1 * &dun.0));
            out.push(SegmentCrossing {
                first: (s.edge, s.index),
                second: (r.edge, r.index),
                t_first: t,
                t_second: u,
                first_over,
                sign: sg,
            });
        }
        Ok(out)
    }

    pub fn validate(&self, proj: Projection) -> std::result::Result<GenericCertificate, GenericViolation> {
        self.arrangement(proj)
            .map(|c| GenericCertificate { crossings: c.len() })
    }

    /// The diagram of the projection along `proj`. Crossing ids follow the
    /// order of the segment pairs, segments ordered by edge and then along it.
    pub fn to_diagram(&self, proj: Projection) -> Result<Diagram> {
        let list = self
            .arrangement(proj)
            .map_err(|v| Error::Degenerate(v.to_string()))?;
        Ok(self.diagram_of(list))
    }

    /// The diagram whose crossings are `list`, as returned by
    /// [`arrangement`](Self::arrangement).
    pub(crate) fn diagram_of(&self, list: Vec<SegmentCrossing>) -> Diagram {
        let mut d = Diagram::empty(self.n());
        let mut along: HashMap<Edge, Vec<((usize, Q), Passage)>> = HashMap::new();
        for c in list {
            let (over, under) = if c.first_over {
                (c.first.0, c.second.0)
            } else {
                (c.second.0, c.first.0)
            };
            let id = d.push_crossing(over, under, c.sign);
            let (r1, r2) = if c.first_over {
                (Role::Over, Role::Under)
            } else {
                (Role::Under, Role::Over)
            };
            along
                .entry(c.first.0)
                .or_default()
                .push(((c.first.1, c.t_first), Passage { crossing: id, role: r1 }));
            along
                .entry(c.second.0)
                .or_default()
                .push(((c.second.1, c.t_second), Passage { crossing: id, role: r2 }));
        }
        for (e, mut list) in along {
            list.sort_by(|a, b| a.0.cmp(&b.0));
            *d.walk_mut(e).expect("edge of K_n") = list.into_iter().map(|(_, p)| p).collect();
        }
        d.meta = self.provenance.clone();
        d
    }

    /// Parameters in `[0, 1]` at which segment `index` of `e` is crossed,
    /// sorted.
    pub(crate) fn crossing_parameters(&self, proj: Projection, e: Edge, index: usize) -> Result<Vec<Q>> {
        let list = self
            .arrangement(proj)
            .map_err(|v| Error::Degenerate(v.to_string()))?;
        let mut out: Vec<Q> = Vec::new();
        for c in list {
            if c.first == (e, index) {
                out.push(c.t_first.clone());
            }
            if c.second == (e, index) {
                out.push(c.t_second);
            }
        }
        out.sort();
        Ok(out)
    }
}

