//! Straight-line spatial embeddings with exact rational coordinates, and
//! their conversion to [`Diagram`]s by projection.
//!
//! All predicates are evaluated exactly. Degenerate inputs are rejected,
//! never perturbed.

use std::fmt;

use num::{BigInt, BigRational, One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod spatial;

pub use spatial::SpatialGraph;
pub(crate) use spatial::SegmentCrossing;

use crate::diagram::{Diagram, Edge, Meta};
use crate::error::{Error, Result};
use crate::graph::Vertex;

pub type Q = BigRational;
pub type Point3 = [Q; 3];

pub const DEFAULT_RETRY_LIMIT: u32 = 1000;

/// Axis the drawing is projected along; the viewer sits on the positive side
/// of that axis, so larger coordinates along it are "over".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Projection {
    X,
    Y,
    #[default]
    Z,
}

impl Projection {
    /// (plane x, plane y, height), with the plane axes forming a right-handed
    /// frame together with the viewing axis.
    fn split<'a>(&self, p: &'a Point3) -> (&'a Q, &'a Q, &'a Q) {
        match self {
            Projection::Z => (&p[0], &p[1], &p[2]),
            Projection::X => (&p[1], &p[2], &p[0]),
            Projection::Y => (&p[2], &p[0], &p[1]),
        }
    }
}

/// Vertex positions of a straight-line embedding, vertex `i` at index `i - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSet {
    points: Vec<Point3>,
    pub provenance: Option<Meta>,
}

impl PointSet {
    pub fn new(points: Vec<Point3>) -> Result<Self> {
        if points.len() < 3 {
            return Err(Error::InvalidArgument(format!(
                "need at least 3 points, got {}",
                points.len()
            )));
        }
        Ok(Self {
            points,
            provenance: None,
        })
    }

    pub fn from_integers(coords: &[[i64; 3]]) -> Result<Self> {
        Self::new(
            coords
                .iter()
                .map(|c| c.map(|x| Q::from_integer(BigInt::from(x))))
                .collect(),
        )
    }

    pub fn n(&self) -> u32 {
        self.points.len() as u32
    }

    pub fn point(&self, v: Vertex) -> &Point3 {
        &self.points[v as usize - 1]
    }

    pub fn points(&self) -> &[Point3] {
        &self.points
    }

    /// Multiplies every coordinate by `factor`.
    pub fn scaled(&self, factor: &Q) -> Self {
        Self {
            points: self
                .points
                .iter()
                .map(|p| [&p[0] * factor, &p[1] * factor, &p[2] * factor])
                .collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Text form: `n` on the first line, then one line of three rationals
    /// `p/q` per vertex.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.points.len());
        for p in &self.points {
            s.push_str(&format!("{} {} {}\n", p[0], p[1], p[2]));
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines
            .next()
            .ok_or_else(|| Error::Parse("empty point file".into()))?;
        let n: usize = first
            .parse()
            .map_err(|e| Error::Parse(format!("line {ln}: bad vertex count {first:?}: {e}")))?;
        let mut points = Vec::with_capacity(n);
        for (ln, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.len() != 3 {
                return Err(Error::Parse(format!(
                    "line {ln}: expected 3 coordinates, found {}",
                    fields.len()
                )));
            }
            let mut p: Vec<Q> = Vec::with_capacity(3);
            for (j, f) in fields.iter().enumerate() {
                let q: Q = f.parse().map_err(|e| {
                    Error::Parse(format!("line {ln}, coordinate {}: {f:?}: {e}", j + 1))
                })?;
                p.push(q);
            }
            points.push([p[0].clone(), p[1].clone(), p[2].clone()]);
        }
        if points.len() != n {
            return Err(Error::Parse(format!(
                "declared {n} points but found {}",
                points.len()
            )));
        }
        Self::new(points)
    }
}

/// Vertices `1..=n` at `(t, t², t³)` with `t = i`.
pub fn moment_curve_points(n: u32) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "moment curve embedding needs n >= 3, got {n}"
        )));
    }
    moment_curve_at((1..=n).map(|i| Q::from_integer(i.into())).collect())
}

/// Moment-curve points at `t = i + 2^-i`, the fallback parameters.
pub fn moment_curve_points_offset(n: u32) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "moment curve embedding needs n >= 3, got {n}"
        )));
    }
    moment_curve_at(
        (1..=n)
            .map(|i| {
                Q::from_integer(i.into()) + Q::new(BigInt::one(), BigInt::one() << (i as usize))
            })
            .collect(),
    )
}

fn moment_curve_at(ts: Vec<Q>) -> Result<PointSet> {
    PointSet::new(
        ts.into_iter()
            .map(|t| {
                let t2 = &t * &t;
                let t3 = &t2 * &t;
                [t, t2, t3]
            })
            .collect(),
    )
}

/// Vertex positions of the standard rectilinear embedding `h(K_n)`: integer
/// moment-curve parameters when they are generic, dyadic offsets otherwise.
pub fn standard_points(n: u32) -> Result<PointSet> {
    let mut points = moment_curve_points(n)?;
    let mut params = "integer";
    if validate_generic(&points, Projection::Z).is_err() {
        points = moment_curve_points_offset(n)?;
        params = "dyadic-offset";
    }
    points.provenance = Some(
        Meta::new("standard")
            .param("n", n)
            .param("vertex_parameters", params),
    );
    Ok(points)
}

/// The standard rectilinear diagram `h(K_n)`, projected along z.
pub fn standard_diagram(n: u32) -> Result<Diagram> {
    diagram_from_points(&standard_points(n)?, Projection::Z)
}

/// Uniform integer coordinates in `[-bound, bound]³`, resampled until the
/// configuration is generic for the z projection.
pub fn random_embedding(n: u32, seed: u64, coordinate_bound: i64) -> Result<PointSet> {
    random_embedding_with_limit(n, seed, coordinate_bound, DEFAULT_RETRY_LIMIT)
}

pub fn random_embedding_with_limit(
    n: u32,
    seed: u64,
    coordinate_bound: i64,
    retry_limit: u32,
) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "random embedding needs n >= 3, got {n}"
        )));
    }
    if coordinate_bound < 1 {
        return Err(Error::InvalidArgument(format!(
            "coordinate bound must be positive, got {coordinate_bound}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=retry_limit {
        let coords: Vec<[i64; 3]> = (0..n)
            .map(|_| {
                [(); 3].map(|_| rng.gen_range(-coordinate_bound..=coordinate_bound))
            })
            .collect();
        let mut p = PointSet::from_integers(&coords)?;
        if validate_generic(&p, Projection::Z).is_ok() {
            let mut meta = Meta::new("random")
                .param("n", n)
                .param("coordinate_bound", coordinate_bound)
                .param("attempts", attempt);
            meta.seed = Some(seed);
            p.provenance = Some(meta);
            return Ok(p);
        }
    }
    Err(Error::GenerationFailure {
        attempts: retry_limit,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GenericViolation {
    /// (a) two vertices project to the same point.
    SharedProjection { a: Vertex, b: Vertex },
    /// (b) a projected vertex lies inside another projected segment.
    VertexOnSegment { vertex: Vertex, edge: Edge },
    /// (c) two projected segments overlap along a sub-segment.
    OverlappingSegments { first: Edge, second: Edge },
    /// (d) three or more projected segments pass through one point.
    ConcurrentSegments { edges: Vec<Edge> },
    /// (e) two segments cross in the projection at equal height, so they meet
    /// in space.
    EqualHeights { first: Edge, second: Edge },
    /// A segment of an arc projects to a single point.
    DegenerateSegment { edge: Edge },
    /// Corners of two arcs touch in the projection without crossing.
    CornerContact { first: Edge, second: Edge },
}

impl fmt::Display for GenericViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenericViolation::SharedProjection { a, b } => {
                write!(f, "vertices {a} and {b} have the same projection")
            }
            GenericViolation::VertexOnSegment { vertex, edge } => {
                write!(f, "vertex {vertex} projects into the interior of edge {edge}")
            }
            GenericViolation::OverlappingSegments { first, second } => {
                write!(f, "edges {first} and {second} overlap in the projection")
            }
            GenericViolation::ConcurrentSegments { edges } => {
                let names: Vec<String> = edges.iter().map(ToString::to_string).collect();
                write!(f, "edges {} are concurrent", names.join(", "))
            }
            GenericViolation::EqualHeights { first, second } => {
                write!(f, "edges {first} and {second} intersect in space")
            }
            GenericViolation::DegenerateSegment { edge } => {
                write!(f, "a segment of edge {edge} is vertical")
            }
            GenericViolation::CornerContact { first, second } => {
                write!(f, "edges {first} and {second} touch in the projection")
            }
        }
    }
}

/// Proof that a configuration is generic, with the number of projected
/// crossings found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericCertificate {
    pub crossings: usize,
}

fn sign(q: &Q) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

/// Exact general-position check for the straight-line drawing of `K_n` on
/// `points`, projected along `proj`.
pub fn validate_generic(
    points: &PointSet,
    proj: Projection,
) -> std::result::Result<GenericCertificate, GenericViolation> {
    SpatialGraph::straight(points).validate(proj)
}

/// Builds the diagram of the straight-line embedding. Crossing ids follow
/// the lexicographic order of the edge pairs.
pub fn diagram_from_points(points: &PointSet, proj: Projection) -> Result<Diagram> {
    SpatialGraph::straight(points).to_diagram(proj)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> Q {
        Q::new(BigInt::from(a), BigInt::from(b))
    }

    /// Interleaving oracle: chords {a,b} and {c,d} of a convex polygon cross
    /// iff exactly one of c, d lies strictly between a and b.
    fn interleaved_count(n: u32) -> usize {
        let edges: Vec<Edge> = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| Edge::new(u, v)))
            .collect();
        let mut count = 0;
        for (i, e) in edges.iter().enumerate() {
            for f in &edges[i + 1..] {
                let inside = |x: u32| e.u < x && x < e.v;
                let shared = e.has_endpoint(f.u) || e.has_endpoint(f.v);
                if !shared && inside(f.u) != inside(f.v) {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn moment_curve_examples() {
        let p = moment_curve_points(3).unwrap();
        assert_eq!(
            p.points(),
            &[
                [q(1, 1), q(1, 1), q(1, 1)],
                [q(2, 1), q(4, 1), q(8, 1)],
                [q(3, 1), q(9, 1), q(27, 1)]
            ]
        );
        let p = moment_curve_points(7).unwrap();
        for w in p.points().windows(2) {
            for c in 0..3 {
                assert!(w[0][c] < w[1][c]);
            }
        }
        assert!(moment_curve_points(1).is_err());
    }

    #[test]
    fn standard_crossings_are_exactly_interleaved_chords() {
        for n in 4..=9 {
            let d = standard_diagram(n).unwrap();
            assert_eq!(d.crossing_count(), interleaved_count(n));
            assert!(d.validate().is_valid());
            for c in d.crossings().values() {
                let (a, b) = (c.over, c.under);
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                assert!(lo.u < hi.u && hi.u < lo.v && lo.v < hi.v, "interleaved");
            }
        }
        assert_eq!(standard_diagram(6).unwrap().crossing_count(), 15);
        assert_eq!(standard_diagram(7).unwrap().crossing_count(), 35);
    }

    #[test]
    fn integer_moment_parameters_until_a_triple_point() {
        for n in 3..=8 {
            assert!(validate_generic(&moment_curve_points(n).unwrap(), Projection::Z).is_ok(), "n = {n}");
            let d = standard_diagram(n).unwrap();
            assert_eq!(d.meta.unwrap().params["vertex_parameters"], serde_json::json!("integer"));
        }
        // chords {1,6}, {3,7}, {4,9} of the parabola all pass through (5, 6)
        assert_eq!(
            validate_generic(&moment_curve_points(9).unwrap(), Projection::Z),
            Err(GenericViolation::ConcurrentSegments {
                edges: vec![Edge::new(1, 6), Edge::new(3, 7), Edge::new(4, 9)]
            })
        );
        for n in 9..=12 {
            assert!(validate_generic(&moment_curve_points_offset(n).unwrap(), Projection::Z).is_ok(), "n = {n}");
            let d = standard_diagram(n).unwrap();
            assert_eq!(d.meta.unwrap().params["vertex_parameters"], serde_json::json!("dyadic-offset"));
        }
    }

    #[test]
    fn shared_projection_is_rejected() {
        let p = PointSet::from_integers(&[[0, 0, 0], [0, 0, 5], [1, 2, 3]]).unwrap();
        assert_eq!(
            validate_generic(&p, Projection::Z),
            Err(GenericViolation::SharedProjection { a: 1, b: 2 })
        );
        assert!(matches!(
            diagram_from_points(&p, Projection::Z),
            Err(Error::Degenerate(_))
        ));
    }

    #[test]
    fn collinear_triple_is_rejected() {
        let p = PointSet::from_integers(&[[0, 0, 0], [1, 1, 3], [2, 2, 1], [5, -1, 0]]).unwrap();
        let v = validate_generic(&p, Projection::Z).unwrap_err();
        assert!(matches!(
            v,
            GenericViolation::OverlappingSegments { .. } | GenericViolation::VertexOnSegment { .. }
        ));
        assert!(diagram_from_points(&p, Projection::Z).is_err());
    }

    #[test]
    fn concurrent_diagonals_are_rejected() {
        // regular hexagon-like points where the three long diagonals meet
        let p = PointSet::from_integers(&[
            [2, 0, 0],
            [1, 2, 1],
            [-1, 2, 2],
            [-2, 0, 3],
            [-1, -2, 4],
            [1, -2, 5],
        ])
        .unwrap();
        match validate_generic(&p, Projection::Z) {
            Err(GenericViolation::ConcurrentSegments { edges }) => {
                assert!(edges.len() >= 3);
            }
            other => panic!("expected concurrency violation, got {other:?}"),
        }
    }

    #[test]
    fn intersecting_segments_are_rejected() {
        let p = PointSet::from_integers(&[[0, 0, 0], [2, 2, 2], [0, 2, 0], [2, 0, 2]]).unwrap();
        assert!(matches!(
            validate_generic(&p, Projection::Z),
            Err(GenericViolation::EqualHeights { .. })
        ));
    }

    #[test]
    fn scaling_preserves_the_diagram() {
        let p = random_embedding(7, 3, 20).unwrap();
        let d = diagram_from_points(&p, Projection::Z).unwrap();
        for f in [q(3, 7), q(5, 1), q(1, 1000)] {
            let ds = diagram_from_points(&p.scaled(&f), Projection::Z).unwrap();
            assert_eq!(ds, d);
        }
    }

    #[test]
    fn random_embedding_is_deterministic_and_generic() {
        let a = random_embedding(7, 1, 7).unwrap();
        let b = random_embedding(7, 1, 7).unwrap();
        assert_eq!(a, b);
        let p = random_embedding(6, 42, 6).unwrap();
        assert!(validate_generic(&p, Projection::Z).is_ok());
        let tiny = random_embedding(3, 5, 1).unwrap();
        let attempts = &tiny.provenance.as_ref().unwrap().params["attempts"];
        assert!(attempts.as_u64().unwrap() >= 1);
        assert!(matches!(
            random_embedding_with_limit(6, 0, 1, 3),
            Err(Error::GenerationFailure { attempts: 3 }) | Ok(_)
        ));
        assert!(random_embedding(7, 0, 0).is_err());
    }

    #[test]
    fn other_projections_build_valid_diagrams() {
        let p = random_embedding(6, 9, 30).unwrap();
        for proj in [Projection::X, Projection::Y] {
            if validate_generic(&p, proj).is_ok() {
                assert!(diagram_from_points(&p, proj).unwrap().validate().is_valid());
            }
        }
    }

    #[test]
    fn point_text_round_trip() {
        let p = moment_curve_points_offset(5).unwrap();
        let back = PointSet::parse(&p.to_text()).unwrap();
        assert_eq!(back.points(), p.points());
        assert!(matches!(PointSet::parse("3\n1 2 3\n"), Err(Error::Parse(_))));
        assert!(matches!(PointSet::parse("2\n1 2\n"), Err(Error::Parse(_))));
        assert!(matches!(PointSet::parse("1\n1 x 3\n"), Err(Error::Parse(_))));
    }
}
