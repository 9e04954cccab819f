//! Combinatorics of the complete graph `K_n`: vertices `1..=n`, edges, and the
//! cycle families used by the invariant sums.

use std::fmt;

use num::{BigUint, One};

use crate::error::{Error, Result};

pub type Vertex = u32;

/// The complete graph on `n` labeled vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GraphSpec {
    n: u32,
}

impl GraphSpec {
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidGraph(format!("K_n needs n >= 3, got {n}")));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        (self.n as usize * (self.n as usize - 1)) / 2
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v)
    }
}

/// A cycle of `K_n` given by its vertex sequence, stored in canonical form:
/// smallest label first, and the direction whose second entry is smaller.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle(Vec<Vertex>);

impl Cycle {
    /// Builds a cycle from any rotation/direction of its vertex sequence.
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::InvalidArgument(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut seen = vertices.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument(format!(
                "cycle {vertices:?} repeats a vertex"
            )));
        }
        if seen[0] == 0 {
            return Err(Error::InvalidArgument("vertex labels start at 1".into()));
        }
        Ok(Self::canonicalize(vertices))
    }

    fn canonicalize(mut v: Vec<Vertex>) -> Self {
        let p = v.len();
        let min_pos = v
            .iter()
            .enumerate()
            .min_by_key(|(_, &x)| x)
            .map(|(i, _)| i)
            .unwrap();
        v.rotate_left(min_pos);
        if v[p - 1] < v[1] {
            v[1..].reverse();
        }
        Cycle(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Consecutive vertex pairs along the canonical orientation, closing up.
    pub fn steps(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let p = self.0.len();
        (0..p).map(move |i| (self.0[i], self.0[(i + 1) % p]))
    }

    pub fn contains_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.steps()
            .any(|(x, y)| (x == a && y == b) || (x == b && y == a))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// An unordered pair of vertex-disjoint triangles. The triangle holding the
/// smallest label comes first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CyclePair {
    first: Cycle,
    second: Cycle,
}

impl CyclePair {
    pub fn new(a: Cycle, b: Cycle) -> Result<Self> {
        if a.vertices().iter().any(|v| b.vertices().contains(v)) {
            return Err(Error::InvalidArgument(format!(
                "cycles {a} and {b} share a vertex"
            )));
        }
        if a.vertices()[0] < b.vertices()[0] {
            Ok(Self { first: a, second: b })
        } else {
            Ok(Self { first: b, second: a })
        }
    }

    pub fn first(&self) -> &Cycle {
        &self.first
    }

    pub fn second(&self) -> &Cycle {
        &self.second
    }
}

impl fmt::Display for CyclePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∪ {}", self.first, self.second)
    }
}

/// Lexicographic successor permutation; returns false after the last one.
fn next_permutation(v: &mut [Vertex]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Iterator over the canonical cycles on a fixed sorted vertex set, in
/// lexicographic order.
pub struct CyclesOn {
    head: Vertex,
    tail: Vec<Vertex>,
    done: bool,
}

impl CyclesOn {
    fn new(sorted: &[Vertex]) -> Self {
        Self {
            head: sorted[0],
            tail: sorted[1..].to_vec(),
            done: false,
        }
    }
}

impl Iterator for CyclesOn {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        while !self.done {
            let accept = self.tail.len() < 2 || self.tail[0] < self.tail[self.tail.len() - 1];
            let out = accept.then(|| {
                let mut v = Vec::with_capacity(self.tail.len() + 1);
                v.push(self.head);
                v.extend_from_slice(&self.tail);
                Cycle(v)
            });
            if !next_permutation(&mut self.tail) {
                self.done = true;
            }
            if out.is_some() {
                return out;
            }
        }
        None
    }
}

/// Every Hamiltonian cycle of `K_n` once, canonical, lexicographic order.
pub fn hamiltonian_cycles(spec: GraphSpec) -> CyclesOn {
    let all: Vec<Vertex> = (1..=spec.n).collect();
    CyclesOn::new(&all)
}

/// Lexicographic `p`-subsets of `1..=n`.
pub fn subsets(n: u32, p: usize) -> impl Iterator<Item = Vec<Vertex>> {
    let mut cur: Option<Vec<Vertex>> = if p as u32 <= n {
        Some((1..=p as u32).collect())
    } else {
        None
    };
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let c = cur.as_mut().unwrap();
        let mut i = p;
        loop {
            if i == 0 {
                cur = None;
                break;
            }
            i -= 1;
            if c[i] < n - (p - 1 - i) as u32 {
                c[i] += 1;
                for j in i + 1..p {
                    c[j] = c[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    })
}

/// Every `p`-cycle of `K_n` once, canonical, sorted lexicographically.
pub fn p_cycles(spec: GraphSpec, p: usize) -> Result<Vec<Cycle>> {
    if p < 3 || p > spec.n as usize {
        return Err(Error::InvalidArgument(format!(
            "p-cycles of K_{} need 3 <= p <= {}, got {p}",
            spec.n, spec.n
        )));
    }
    let mut out: Vec<Cycle> = subsets(spec.n, p)
        .flat_map(|s| CyclesOn::new(&s))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// Every unordered pair of disjoint triangles, sorted. Empty for `n < 6`.
pub fn disjoint_triangle_pairs(spec: GraphSpec) -> Vec<CyclePair> {
    let mut out = Vec::new();
    for six in subsets(spec.n, 6) {
        // the triangle through six[0] determines the pair
        for a in 1..6 {
            for b in a + 1..6 {
                let first = Cycle(vec![six[0], six[a], six[b]]);
                let rest: Vec<Vertex> = (1..6)
                    .filter(|&i| i != a && i != b)
                    .map(|i| six[i])
                    .collect();
                out.push(CyclePair {
                    first,
                    second: Cycle(rest),
                });
            }
        }
    }
    out.sort_unstable();
    out
}

/// Hamiltonian cycles of `K_n` containing the three edges of `path`, in
/// canonical form. The cycle is the path followed by an arrangement of the
/// remaining vertices.
pub fn hamiltonian_cycles_containing_path(
    spec: GraphSpec,
    path: [Vertex; 4],
) -> Result<Vec<Cycle>> {
    check_path(spec, path)?;
    let mut rest: Vec<Vertex> = (1..=spec.n).filter(|v| !path.contains(v)).collect();
    let mut out = Vec::new();
    loop {
        let mut seq = path.to_vec();
        seq.extend_from_slice(&rest);
        out.push(Cycle::canonicalize(seq));
        if !next_permutation(&mut rest) {
            break;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// Number of Hamiltonian cycles through a fixed path of three edges.
pub fn hamiltonian_cycles_through_path(spec: GraphSpec, path: [Vertex; 4]) -> Result<BigUint> {
    check_path(spec, path)?;
    Ok(factorial(spec.n - 4))
}

fn check_path(spec: GraphSpec, path: [Vertex; 4]) -> Result<()> {
    if let Some(v) = path.iter().find(|&&v| !spec.contains(v)) {
        return Err(Error::InvalidArgument(format!(
            "path vertex {v} outside 1..={}",
            spec.n
        )));
    }
    let mut s = path;
    s.sort_unstable();
    if s.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidArgument(format!(
            "path {path:?} repeats a vertex"
        )));
    }
    if spec.n < 4 {
        return Err(Error::InvalidArgument("a 4-vertex path needs n >= 4".into()));
    }
    Ok(())
}

pub fn factorial(k: u32) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Closed-form count of `p`-cycles: `C(n,p)·(p-1)!/2`.
pub fn p_cycle_count(n: u32, p: u32) -> BigUint {
    binomial(n as u64, p as u64) * factorial(p - 1) / 2u32
}
