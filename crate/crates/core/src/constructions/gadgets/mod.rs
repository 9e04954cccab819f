//! Gadgets built on top of straight-line embeddings: a full-twist finger
//! between two edges and a Borromean delta gadget on a path of three edges.
//! Both are genuine polygonal embeddings, so every diagram they produce is
//! the projection of an actual spatial graph.

mod delta;
mod plane;
mod twist;

use serde_json::{json, Value};

use crate::diagram::{Diagram, Edge, Meta};
use crate::error::{Error, Result};
use crate::geometry::{random_embedding, standard_points, PointSet, Projection, SpatialGraph};
use crate::graph::Vertex;

pub(crate) use delta::add_delta;
pub(crate) use twist::add_twist;

/// Parameters of the twist construction: `s` full twists between the edges
/// `{1, n-k}` and `{l+2, n-k-1}` of the standard embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TwistParams {
    pub n: u32,
    pub k: u64,
    pub l: u64,
    pub s: u64,
}

impl TwistParams {
    pub fn new(n: u32, k: u64, l: u64, s: u64) -> Result<Self> {
        if n < 6 {
            return Err(Error::InvalidArgument(format!(
                "twist construction needs n >= 6, got {n}"
            )));
        }
        if k + l > n as u64 - 4 {
            return Err(Error::InvalidArgument(format!(
                "twist parameters need k + l <= n - 4, got k = {k}, l = {l}, n = {n}"
            )));
        }
        Ok(Self { n, k, l, s })
    }

    /// The edge running from vertex 1 to `n-k`.
    pub fn first_edge(&self) -> Edge {
        Edge::new(1, self.n - self.k as u32)
    }

    /// The edge running from `l+2` to `n-k-1`.
    pub fn second_edge(&self) -> Edge {
        Edge::new(self.l as u32 + 2, self.n - self.k as u32 - 1)
    }

    /// Every admissible `(k, l)` for `n`.
    pub fn all_kl(n: u32) -> Vec<(u64, u64)> {
        let top = n as u64 - 4;
        (0..=top)
            .flat_map(|k| (0..=top - k).map(move |l| (k, l)))
            .collect()
    }
}

/// Which way the finger first meets the second edge. Frozen to the choice
/// whose Hamiltonian sums match the closed form for every `(k, l, s)`.
pub(crate) const TWIST_OVER_FIRST: bool = false;

/// The standard embedding with `s` full twists between the two gadget edges,
/// next to their endpoints `n-k` and `n-k-1`.
pub fn twist_spatial(p: TwistParams) -> Result<SpatialGraph> {
    let p = TwistParams::new(p.n, p.k, p.l, p.s)?;
    let mut g = SpatialGraph::straight(&standard_points(p.n)?);
    add_twist(&mut g, p.first_edge(), p.second_edge(), p.s, TWIST_OVER_FIRST)?;
    g.provenance = Some(
        Meta::new("twist")
            .param("n", p.n)
            .param("k", p.k)
            .param("l", p.l)
            .param("s", p.s),
    );
    Ok(g)
}

pub fn twist_embedding(p: TwistParams) -> Result<Diagram> {
    twist_spatial(p)?.to_diagram(Projection::Z)
}

/// Adds one delta gadget on `path` and records it in the provenance.
pub fn add_delta_step(g: &mut SpatialGraph, path: [Vertex; 4], sign: i8) -> Result<()> {
    add_delta(g, path, sign)?;
    let meta = g.provenance.get_or_insert_with(|| Meta::new("points"));
    meta.steps.push(json!({"gadget": "delta", "path": path, "sign": sign}));
    Ok(())
}

/// A delta gadget on `path` added to the embedding `d` was drawn from. Only
/// diagrams whose provenance names a reproducible builder qualify.
pub fn delta_gadget(d: &Diagram, path: [Vertex; 4], sign: i8) -> Result<Diagram> {
    let mut g = rebuild(d)?;
    add_delta_step(&mut g, path, sign)?;
    g.to_diagram(Projection::Z)
}

fn uint(meta: &Meta, key: &str) -> Result<u64> {
    let v = meta.params.get(key);
    v.and_then(Value::as_u64)
        .or_else(|| v.and_then(Value::as_str).and_then(|s| s.parse().ok()))
        .ok_or_else(|| Error::InvalidArgument(format!("provenance lacks integer `{key}`")))
}

/// Replays the provenance of `d` to recover its spatial embedding.
pub fn rebuild(d: &Diagram) -> Result<SpatialGraph> {
    let meta = d
        .meta
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("diagram has no provenance to rebuild from".into()))?;
    let n = uint(meta, "n")? as u32;
    let mut g = match meta.builder.as_str() {
        "standard" => SpatialGraph::straight(&standard_points(n)?),
        "twist" | "realize" => twist_spatial(TwistParams::new(
            n,
            uint(meta, "k")?,
            uint(meta, "l")?,
            uint(meta, "s")?,
        )?)?,
        "random" => SpatialGraph::straight(&random_embedding(
            n,
            meta.seed
                .ok_or_else(|| Error::InvalidArgument("provenance lacks a seed".into()))?,
            uint(meta, "coordinate_bound")? as i64,
        )?),
        "points" => {
            let text = meta
                .params
                .get("points")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::InvalidArgument("provenance lacks `points`".into()))?;
            SpatialGraph::straight(&PointSet::parse(text)?)
        }
        other => {
            return Err(Error::InvalidArgument(format!(
                "cannot rebuild an embedding from builder `{other}`"
            )))
        }
    };
    if g.n() != d.n() {
        return Err(Error::InconsistentInput(format!(
            "provenance describes K_{} but the diagram has {} vertices",
            g.n(),
            d.n()
        )));
    }
    for step in &meta.steps {
        let path: [Vertex; 4] = serde_json::from_value(step["path"].clone())
            .map_err(|e| Error::InvalidArgument(format!("bad delta step {step}: {e}")))?;
        let sign = step["sign"]
            .as_i64()
            .ok_or_else(|| Error::InvalidArgument(format!("bad delta step {step}")))?;
        add_delta(&mut g, path, sign as i8)?;
    }
    g.provenance = Some(meta.clone());
    Ok(g)
}
