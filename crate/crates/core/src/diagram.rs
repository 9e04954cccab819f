//! Combinatorial spatial-graph diagrams of `K_n`.
//!
//! A [`Diagram`] stores, for every edge `{u, v}` with `u < v`, the crossings met
//! when walking the edge from `u` to `v`, and a table giving each crossing's
//! over edge, under edge and sign. Signs refer to the reference orientation of
//! each edge (low label to high label); they are re-oriented when a knot or a
//! link is extracted for a particular cycle.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Cycle, CyclePair, Vertex};

/// An edge of `K_n`, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub u: Vertex,
    pub v: Vertex,
}

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Self { u: a, v: b }
        } else {
            Self { u: b, v: a }
        }
    }

    pub fn has_endpoint(&self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Role {
    #[serde(rename = "O")]
    Over,
    #[serde(rename = "U")]
    Under,
}

impl Role {
    pub fn flipped(self) -> Self {
        match self {
            Role::Over => Role::Under,
            Role::Under => Role::Over,
        }
    }
}

/// One pass of an edge through a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Passage {
    pub crossing: u32,
    pub role: Role,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub over: Edge,
    pub under: Edge,
    pub sign: i8,
}

/// Construction provenance carried in the serialized `meta` field.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub builder: String,
    #[serde(default, skip_serializing_if = "serde_json::Map::is_empty")]
    pub params: serde_json::Map<String, serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub steps: Vec<serde_json::Value>,
}

impl Meta {
    pub fn new(builder: impl Into<String>) -> Self {
        Self {
            builder: builder.into(),
            params: serde_json::Map::new(),
            seed: None,
            steps: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<serde_json::Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Diagram {
    n: u32,
    edge_walks: BTreeMap<Edge, Vec<Passage>>,
    crossings: BTreeMap<u32, Crossing>,
    pub meta: Option<Meta>,
}

impl Diagram {
    /// The crossing-free diagram of `K_n`: every edge present with an empty walk.
    pub fn empty(n: u32) -> Self {
        let mut edge_walks = BTreeMap::new();
        for u in 1..=n {
            for v in u + 1..=n {
                edge_walks.insert(Edge { u, v }, Vec::new());
            }
        }
        Self {
            n,
            edge_walks,
            crossings: BTreeMap::new(),
            meta: None,
        }
    }

    /// Assembles a diagram from raw parts without checking invariants; run
    /// [`Diagram::validate`] on the result.
    pub fn from_parts(
        n: u32,
        edge_walks: BTreeMap<Edge, Vec<Passage>>,
        crossings: BTreeMap<u32, Crossing>,
    ) -> Self {
        Self {
            n,
            edge_walks,
            crossings,
            meta: None,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &BTreeMap<u32, Crossing> {
        &self.crossings
    }

    pub fn crossing(&self, id: u32) -> Option<&Crossing> {
        self.crossings.get(&id)
    }

    pub fn edge_walks(&self) -> &BTreeMap<Edge, Vec<Passage>> {
        &self.edge_walks
    }

    pub fn walk(&self, e: Edge) -> Option<&[Passage]> {
        self.edge_walks.get(&e).map(Vec::as_slice)
    }

    pub fn walk_mut(&mut self, e: Edge) -> Option<&mut Vec<Passage>> {
        self.edge_walks.get_mut(&e)
    }

    pub fn next_crossing_id(&self) -> u32 {
        self.crossings.keys().next_back().map_or(0, |&k| k + 1)
    }

    /// Registers a crossing in the table. The caller places its two passages.
    pub fn push_crossing(&mut self, over: Edge, under: Edge, sign: i8) -> u32 {
        let id = self.next_crossing_id();
        self.crossings.insert(id, Crossing { over, under, sign });
        id
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let in_range = |e: &Edge| e.u >= 1 && e.u < e.v && e.v <= self.n;

        for e in self.edge_walks.keys() {
            if !in_range(e) {
                report.violations.push(Violation::EdgeOutOfRange { edge: *e });
            }
        }
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                let e = Edge { u, v };
                if !self.edge_walks.contains_key(&e) {
                    report.violations.push(Violation::MissingEdge { edge: e });
                }
            }
        }

        let mut seen: HashMap<u32, (u32, u32)> = HashMap::new();
        for (e, walk) in &self.edge_walks {
            for p in walk {
                let Some(c) = self.crossings.get(&p.crossing) else {
                    report.violations.push(Violation::UnknownCrossing {
                        crossing: p.crossing,
                        edge: *e,
                    });
                    continue;
                };
                let expected = match p.role {
                    Role::Over => c.over,
                    Role::Under => c.under,
                };
                if expected != *e {
                    report.violations.push(Violation::MisplacedPassage {
                        crossing: p.crossing,
                        edge: *e,
                        role: p.role,
                    });
                }
                let entry = seen.entry(p.crossing).or_default();
                match p.role {
                    Role::Over => entry.0 += 1,
                    Role::Under => entry.1 += 1,
                }
            }
        }

        for (&id, c) in &self.crossings {
            for e in [c.over, c.under] {
                if !in_range(&e) || !self.edge_walks.contains_key(&e) {
                    report
                        .violations
                        .push(Violation::DanglingEdge { crossing: id, edge: e });
                }
            }
            if c.sign != 1 && c.sign != -1 {
                report.violations.push(Violation::BadSign {
                    crossing: id,
                    sign: c.sign,
                });
            }
            let (over, under) = seen.get(&id).copied().unwrap_or((0, 0));
            if over != 1 || under != 1 {
                report.violations.push(Violation::UnpairedCrossing {
                    crossing: id,
                    over,
                    under,
                });
            }
            if c.over == c.under {
                report.warnings.push(Violation::SelfCrossing {
                    crossing: id,
                    edge: c.over,
                });
            }
        }
        report
    }

    /// Fails with [`Error::InvalidDiagram`] listing the first violations.
    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            let shown: Vec<String> = report
                .violations
                .iter()
                .take(5)
                .map(ToString::to_string)
                .collect();
            Err(Error::InvalidDiagram(shown.join("; ")))
        }
    }

    /// Walks the cycle along its canonical orientation, keeping crossings
    /// whose two edges both lie on the cycle. Each entry is the passage, its
    /// crossing, and the traversal direction factor of the walked edge.
    fn oriented_walk(&self, cycle: &Cycle) -> Result<Vec<(Passage, Edge)>> {
        let mut out = Vec::new();
        for (a, b) in cycle.steps() {
            let e = Edge::new(a, b);
            let walk = self.walk(e).ok_or_else(|| {
                Error::InconsistentInput(format!("edge {e} of cycle {cycle} is not in the diagram"))
            })?;
            if a < b {
                out.extend(walk.iter().map(|&p| (p, e)));
            } else {
                out.extend(walk.iter().rev().map(|&p| (p, e)));
            }
        }
        Ok(out)
    }

    fn check_cycle(&self, cycle: &Cycle) -> Result<()> {
        if let Some(v) = cycle.vertices().iter().find(|&&v| v > self.n) {
            return Err(Error::InconsistentInput(format!(
                "cycle {cycle} uses vertex {v} but the diagram has n = {}",
                self.n
            )));
        }
        Ok(())
    }

    fn lookup(&self, id: u32) -> Result<&Crossing> {
        self.crossings
            .get(&id)
            .ok_or_else(|| Error::InvalidDiagram(format!("walk references unknown crossing {id}")))
    }

    /// The knot diagram of the image of `cycle`, oriented along the cycle's
    /// canonical orientation.
    pub fn extract_knot(&self, cycle: &Cycle) -> Result<KnotDiagram> {
        self.check_cycle(cycle)?;
        let dirs = orientation_factors(cycle);
        let mut passages = Vec::new();
        for (p, _) in self.oriented_walk(cycle)? {
            let c = self.lookup(p.crossing)?;
            if let (Some(&a), Some(&b)) = (dirs.get(&c.over), dirs.get(&c.under)) {
                passages.push(KnotPassage {
                    crossing: p.crossing,
                    role: p.role,
                    sign: c.sign * a * b,
                });
            }
        }
        Ok(KnotDiagram { passages })
    }

    /// The two-component link diagram of the image of a disjoint cycle pair.
    pub fn extract_link(&self, pair: &CyclePair) -> Result<LinkDiagram> {
        self.extract_link_of(pair.first(), pair.second())
    }

    pub fn extract_link_of(&self, first: &Cycle, second: &Cycle) -> Result<LinkDiagram> {
        if first.vertices().iter().any(|v| second.vertices().contains(v)) {
            return Err(Error::InvalidArgument(format!(
                "cycles {first} and {second} overlap"
            )));
        }
        self.check_cycle(first)?;
        self.check_cycle(second)?;
        let mut dirs = orientation_factors(first);
        dirs.extend(orientation_factors(second));
        let mut components: [Vec<KnotPassage>; 2] = [Vec::new(), Vec::new()];
        for (slot, cycle) in components.iter_mut().zip([first, second]) {
            for (p, _) in self.oriented_walk(cycle)? {
                let c = self.lookup(p.crossing)?;
                if let (Some(&a), Some(&b)) = (dirs.get(&c.over), dirs.get(&c.under)) {
                    slot.push(KnotPassage {
                        crossing: p.crossing,
                        role: p.role,
                        sign: c.sign * a * b,
                    });
                }
            }
        }
        Ok(LinkDiagram { components })
    }

    pub fn to_json(&self) -> String {
        let doc = DiagramDoc::from(self);
        let mut s = serde_json::to_string_pretty(&doc).expect("diagram serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: DiagramDoc = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        doc.try_into()
    }
}

/// Direction factor of each cycle edge: `+1` if the canonical orientation
/// runs low to high along it.
fn orientation_factors(cycle: &Cycle) -> HashMap<Edge, i8> {
    cycle
        .steps()
        .map(|(a, b)| (Edge::new(a, b), if a < b { 1 } else { -1 }))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    UnpairedCrossing { crossing: u32, over: u32, under: u32 },
    DanglingEdge { crossing: u32, edge: Edge },
    UnknownCrossing { crossing: u32, edge: Edge },
    MisplacedPassage { crossing: u32, edge: Edge, role: Role },
    EdgeOutOfRange { edge: Edge },
    MissingEdge { edge: Edge },
    BadSign { crossing: u32, sign: i8 },
    SelfCrossing { crossing: u32, edge: Edge },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnpairedCrossing { crossing, over, under } => write!(
                f,
                "unpaired crossing {crossing}: {over} over and {under} under passages"
            ),
            Violation::DanglingEdge { crossing, edge } => {
                write!(f, "dangling edge {edge} referenced by crossing {crossing}")
            }
            Violation::UnknownCrossing { crossing, edge } => {
                write!(f, "walk of {edge} references unknown crossing {crossing}")
            }
            Violation::MisplacedPassage { crossing, edge, role } => write!(
                f,
                "crossing {crossing} has a {role:?} passage on {edge}, which is not its {role:?} edge"
            ),
            Violation::EdgeOutOfRange { edge } => write!(f, "edge {edge} out of range"),
            Violation::MissingEdge { edge } => write!(f, "missing edge {edge}"),
            Violation::BadSign { crossing, sign } => {
                write!(f, "crossing {crossing} has sign {sign}, expected +1 or -1")
            }
            Violation::SelfCrossing { crossing, edge } => {
                write!(f, "self-crossing {crossing} on edge {edge}")
            }
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub warnings: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A passage along an oriented knot or link component; `sign` is already
/// adjusted to the traversal orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KnotPassage {
    pub crossing: u32,
    pub role: Role,
    pub sign: i8,
}

/// A cyclic Gauss-style sequence of a single oriented knot.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KnotDiagram {
    passages: Vec<KnotPassage>,
}

impl KnotDiagram {
    pub fn new(passages: Vec<KnotPassage>) -> Result<Self> {
        check_pairing(std::slice::from_ref(&passages))?;
        Ok(Self { passages })
    }

    pub fn passages(&self) -> &[KnotPassage] {
        &self.passages
    }

    pub fn crossing_count(&self) -> usize {
        self.passages.len() / 2
    }

    pub fn writhe(&self) -> i64 {
        self.passages
            .iter()
            .filter(|p| p.role == Role::Over)
            .map(|p| p.sign as i64)
            .sum()
    }

    /// Same knot traversed the other way. Both strands at every crossing
    /// reverse, so signs are unchanged.
    pub fn reversed(&self) -> Self {
        let mut passages = self.passages.clone();
        passages.reverse();
        Self { passages }
    }

    /// Moves the basepoint forward by `k` passages.
    pub fn rotated(&self, k: usize) -> Self {
        let mut passages = self.passages.clone();
        if !passages.is_empty() {
            let k = k % passages.len();
            passages.rotate_left(k);
        }
        Self { passages }
    }

    pub fn mirrored(&self) -> Self {
        Self {
            passages: self
                .passages
                .iter()
                .map(|p| KnotPassage {
                    crossing: p.crossing,
                    role: p.role.flipped(),
                    sign: -p.sign,
                })
                .collect(),
        }
    }
}

/// A two-component link given by one passage sequence per component.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LinkDiagram {
    components: [Vec<KnotPassage>; 2],
}

impl LinkDiagram {
    pub fn new(first: Vec<KnotPassage>, second: Vec<KnotPassage>) -> Result<Self> {
        let components = [first, second];
        check_pairing(&components)?;
        Ok(Self { components })
    }

    pub fn component(&self, i: usize) -> &[KnotPassage] {
        &self.components[i]
    }

    pub fn swapped(&self) -> Self {
        let [a, b] = self.components.clone();
        Self { components: [b, a] }
    }

    fn ids(&self, i: usize) -> impl Iterator<Item = u32> + '_ {
        self.components[i].iter().map(|p| p.crossing)
    }

    /// Crossings between the two components, as passages of the first one.
    pub fn inter_component(&self) -> Vec<KnotPassage> {
        let other: std::collections::HashSet<u32> = self.ids(1).collect();
        self.components[0]
            .iter()
            .filter(|p| other.contains(&p.crossing))
            .copied()
            .collect()
    }

    /// Crossings with both passages on component `i`.
    pub fn intra_component(&self, i: usize) -> Vec<u32> {
        let other: std::collections::HashSet<u32> = self.ids(1 - i).collect();
        let mut ids: Vec<u32> = self
            .components[i]
            .iter()
            .filter(|p| p.role == Role::Over && !other.contains(&p.crossing))
            .map(|p| p.crossing)
            .collect();
        ids.sort_unstable();
        ids
    }
}

/// Every crossing occurs exactly twice across `seqs`, once over and once
/// under, with one sign.
fn check_pairing(seqs: &[Vec<KnotPassage>]) -> Result<()> {
    let mut seen: HashMap<u32, (u32, u32, i8, bool)> = HashMap::new();
    for p in seqs.iter().flatten() {
        if p.sign != 1 && p.sign != -1 {
            return Err(Error::InvalidDiagram(format!(
                "crossing {} has sign {}",
                p.crossing, p.sign
            )));
        }
        let e = seen.entry(p.crossing).or_insert((0, 0, p.sign, true));
        match p.role {
            Role::Over => e.0 += 1,
            Role::Under => e.1 += 1,
        }
        if e.2 != p.sign {
            e.3 = false;
        }
    }
    for (id, (o, u, _, same)) in seen {
        if o != 1 || u != 1 {
            return Err(Error::InvalidDiagram(format!(
                "unpaired crossing {id}: {o} over and {u} under passages"
            )));
        }
        if !same {
            return Err(Error::InvalidDiagram(format!(
                "crossing {id} carries two different signs"
            )));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DiagramDoc {
    n: u32,
    edges: Vec<EdgeDoc>,
    crossings: Vec<CrossingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<Meta>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeDoc {
    u: Vertex,
    v: Vertex,
    walk: Vec<(u32, Role)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CrossingDoc {
    id: u32,
    over: [Vertex; 2],
    under: [Vertex; 2],
    sign: i8,
}

impl From<&Diagram> for DiagramDoc {
    fn from(d: &Diagram) -> Self {
        Self {
            n: d.n,
            edges: d
                .edge_walks
                .iter()
                .map(|(e, walk)| EdgeDoc {
                    u: e.u,
                    v: e.v,
                    walk: walk.iter().map(|p| (p.crossing, p.role)).collect(),
                })
                .collect(),
            crossings: d
                .crossings
                .iter()
                .map(|(&id, c)| CrossingDoc {
                    id,
                    over: [c.over.u, c.over.v],
                    under: [c.under.u, c.under.v],
                    sign: c.sign,
                })
                .collect(),
            meta: d.meta.clone(),
        }
    }
}

impl TryFrom<DiagramDoc> for Diagram {
    type Error = Error;

    fn try_from(doc: DiagramDoc) -> Result<Self> {
        let mut edge_walks = BTreeMap::new();
        for (i, e) in doc.edges.into_iter().enumerate() {
            if e.u >= e.v {
                return Err(Error::Parse(format!(
                    "edges[{i}]: expected u < v, got u = {}, v = {}",
                    e.u, e.v
                )));
            }
            let walk = e
                .walk
                .into_iter()
                .map(|(crossing, role)| Passage { crossing, role })
                .collect();
            let key = Edge { u: e.u, v: e.v };
            if edge_walks.insert(key, walk).is_some() {
                return Err(Error::Parse(format!("edges[{i}]: duplicate edge {key}")));
            }
        }
        let mut crossings = BTreeMap::new();
        for (i, c) in doc.crossings.into_iter().enumerate() {
            let over = Edge::new(c.over[0], c.over[1]);
            let under = Edge::new(c.under[0], c.under[1]);
            if crossings
                .insert(c.id, Crossing { over, under, sign: c.sign })
                .is_some()
            {
                return Err(Error::Parse(format!(
                    "crossings[{i}]: duplicate crossing id {}",
                    c.id
                )));
            }
        }
        Ok(Diagram {
            n: doc.n,
            edge_walks,
            crossings,
            meta: doc.meta,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hopf_like() -> Diagram {
        // K_4 drawn with the two diagonals crossing once
        let mut d = Diagram::empty(4);
        let a = Edge::new(1, 3);
        let b = Edge::new(2, 4);
        let id = d.push_crossing(a, b, 1);
        d.walk_mut(a).unwrap().push(Passage { crossing: id, role: Role::Over });
        d.walk_mut(b).unwrap().push(Passage { crossing: id, role: Role::Under });
        d
    }

    #[test]
    fn empty_diagram_is_valid_and_round_trips() {
        let d = Diagram::empty(4);
        assert!(d.validate().is_valid());
        let text = d.to_json();
        assert_eq!(Diagram::from_json(&text).unwrap(), d);
    }

    #[test]
    fn unpaired_crossing_is_reported() {
        let mut d = hopf_like();
        let b = Edge::new(2, 4);
        d.walk_mut(b).unwrap()[0].role = Role::Over;
        let report = d.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::UnpairedCrossing { crossing: 0, over: 2, under: 0 })));
        assert!(report.violations[0].to_string().contains("crossing 0") || !report.is_valid());
        assert!(report
            .violations
            .iter()
            .any(|v| v.to_string().starts_with("unpaired crossing")));
    }

    #[test]
    fn dangling_edge_is_reported() {
        let mut d = Diagram::empty(7);
        let bad = Edge::new(1, 9);
        let ok = Edge::new(2, 5);
        let id = d.push_crossing(bad, ok, -1);
        d.walk_mut(ok).unwrap().push(Passage { crossing: id, role: Role::Under });
        let report = d.validate();
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::DanglingEdge { edge, .. } if *edge == bad)));
        assert!(d.ensure_valid().is_err());
    }

    #[test]
    fn self_crossings_are_warnings() {
        let mut d = Diagram::empty(3);
        let e = Edge::new(1, 2);
        let id = d.push_crossing(e, e, 1);
        let w = d.walk_mut(e).unwrap();
        w.push(Passage { crossing: id, role: Role::Over });
        w.push(Passage { crossing: id, role: Role::Under });
        let report = d.validate();
        assert!(report.is_valid());
        assert_eq!(report.warnings.len(), 1);
    }

    #[test]
    fn truncated_document_is_a_parse_error() {
        let text = hopf_like().to_json();
        let cut = &text[..text.len() / 2];
        match Diagram::from_json(cut) {
            Err(Error::Parse(msg)) => assert!(msg.contains("line")),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(matches!(Diagram::from_json("{\"n\": 3}"), Err(Error::Parse(_))));
    }

    #[test]
    fn meta_survives_round_trip() {
        let mut d = hopf_like();
        d.meta = Some(Meta::new("test").param("k", 1).param("s", 2));
        let back = Diagram::from_json(&d.to_json()).unwrap();
        assert_eq!(back, d);
    }

    #[test]
    fn link_extraction_classifies_crossings() {
        let d = hopf_like();
        // triangles need 6 vertices; use the 4-cycle as a knot instead
        let cyc = Cycle::new(vec![1, 2, 3, 4]).unwrap();
        let k = d.extract_knot(&cyc).unwrap();
        assert_eq!(k.crossing_count(), 0);
        let cyc = Cycle::new(vec![1, 3, 2, 4]).unwrap();
        let k = d.extract_knot(&cyc).unwrap();
        assert_eq!(k.crossing_count(), 1);
        assert!(KnotDiagram::new(k.passages().to_vec()).is_ok());
    }

    #[test]
    fn missing_cycle_edge_is_inconsistent_input() {
        let d = Diagram::empty(4);
        let cyc = Cycle::new(vec![1, 2, 5]).unwrap();
        assert!(matches!(d.extract_knot(&cyc), Err(Error::InconsistentInput(_))));
    }

    #[test]
    fn overlapping_pair_is_rejected() {
        let d = Diagram::empty(6);
        let a = Cycle::new(vec![1, 2, 3]).unwrap();
        let b = Cycle::new(vec![3, 4, 5]).unwrap();
        assert!(matches!(
            d.extract_link_of(&a, &b),
            Err(Error::InvalidArgument(_))
        ));
    }
}
