//! Explicit construction of the three self-similar lattice families.
//!
//! Every generation is four copies of the previous one glued in a ring
//! through their special vertices. With copies numbered `0..4`, the `Y` of
//! copy `c` is identified with the `X` of copy `c + 1 (mod 4)`, producing
//! four hubs `h01, h12, h23, h30` (`hab` joins copy `a` and copy `b`).
//!
//! | family     | new `X` | new `Y` | extra edge     |
//! |------------|---------|---------|----------------|
//! | `Fractal`  | `h30`   | `h12`   | `h01 -- h23`   |
//! | `Flower22` | `h30`   | `h12`   | none           |
//! | `Flower13` | `h30`   | `h01`   | none           |
//!
//! Vertices are renumbered so that the special `X` is always `0` and the
//! special `Y` is always `|V| - 1`; every other vertex is numbered in order
//! of first appearance, copy-major then intra-copy index. Edges keep the
//! copy-major order and the extra edge comes last.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{check_cap, Error, Result};

/// Largest generation [`build_lattice`] will materialize.
pub const MAX_BUILD_GENERATION: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LatticeFamily {
    /// Four copies in a ring plus a chord between opposite hubs.
    Fractal,
    /// The (2,2)-flower: the fractal ring without the chord.
    Flower22,
    /// The (1,3)-flower: the same ring with adjacent hubs as special vertices.
    Flower13,
}

impl LatticeFamily {
    pub const ALL: [LatticeFamily; 3] = [
        LatticeFamily::Fractal,
        LatticeFamily::Flower22,
        LatticeFamily::Flower13,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LatticeFamily::Fractal => "fractal",
            LatticeFamily::Flower22 => "flower22",
            LatticeFamily::Flower13 => "flower13",
        }
    }
}

impl fmt::Display for LatticeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LatticeFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fractal" => Ok(LatticeFamily::Fractal),
            "flower22" => Ok(LatticeFamily::Flower22),
            "flower13" => Ok(LatticeFamily::Flower13),
            other => Err(Error::Parse(format!(
                "unknown family {other:?} (expected fractal, flower22 or flower13)"
            ))),
        }
    }
}

/// A multigraph with two marked vertices. Loops are edges `(a, a)`; parallel
/// edges are repeated entries.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    special_x: usize,
    special_y: usize,
}

impl Multigraph {
    pub fn new(
        vertex_count: usize,
        edges: Vec<(usize, usize)>,
        special_x: usize,
        special_y: usize,
    ) -> Result<Self> {
        if let Some(&(a, b)) = edges
            .iter()
            .find(|(a, b)| *a >= vertex_count || *b >= vertex_count)
        {
            return Err(Error::InvalidGraph(format!(
                "edge ({a}, {b}) out of range for {vertex_count} vertices"
            )));
        }
        if vertex_count > 0 && (special_x >= vertex_count || special_y >= vertex_count) {
            return Err(Error::InvalidGraph(format!(
                "special vertices ({special_x}, {special_y}) out of range for {vertex_count} vertices"
            )));
        }
        if vertex_count >= 2 && special_x == special_y {
            return Err(Error::InvalidGraph(
                "special vertices must be distinct".to_string(),
            ));
        }
        Ok(Self {
            vertex_count,
            edges,
            special_x,
            special_y,
        })
    }

    /// `K_2` with both endpoints marked.
    pub fn single_edge() -> Self {
        Self {
            vertex_count: 2,
            edges: vec![(0, 1)],
            special_x: 0,
            special_y: 1,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn special_x(&self) -> usize {
        self.special_x
    }

    pub fn special_y(&self) -> usize {
        self.special_y
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        degree_sequence(self)
    }

    pub fn component_count(&self) -> usize {
        let mut uf = UnionFind::new(self.vertex_count);
        for &(a, b) in &self.edges {
            uf.union(a, b);
        }
        uf.components
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// Serializes to the edge-list text format:
    /// `p <vertices> <edges> <special_x> <special_y>` then `e <a> <b>` per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::with_capacity(16 * (self.edges.len() + 1));
        writeln!(
            out,
            "p {} {} {} {}",
            self.vertex_count,
            self.edges.len(),
            self.special_x,
            self.special_y
        )
        .unwrap();
        for (a, b) in &self.edges {
            writeln!(out, "e {a} {b}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty edge list".into()))?;
        let fields = parse_record(header, "p", 4)?;
        let (vertex_count, edge_count, special_x, special_y) =
            (fields[0], fields[1], fields[2], fields[3]);

        let mut edges = Vec::with_capacity(edge_count);
        for line in lines {
            let f = parse_record(line, "e", 2)?;
            edges.push((f[0], f[1]));
        }
        if edges.len() != edge_count {
            return Err(Error::Parse(format!(
                "header declares {edge_count} edges but {} were listed",
                edges.len()
            )));
        }
        Self::new(vertex_count, edges, special_x, special_y)
    }
}

fn parse_record(line: &str, tag: &str, arity: usize) -> Result<Vec<usize>> {
    let mut parts = line.split_whitespace();
    if parts.next() != Some(tag) {
        return Err(Error::Parse(format!("expected a {tag:?} line, got {line:?}")));
    }
    let fields = parts
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {p:?} in {line:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if fields.len() != arity {
        return Err(Error::Parse(format!(
            "expected {arity} fields after {tag:?} in {line:?}"
        )));
    }
    Ok(fields)
}

/// Union-find with path halving and union by size.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    pub(crate) components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub(crate) fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    /// Returns `false` when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }
}

/// Builds generation `n` of `family`. Generation 0 is `K_2` for every family.
pub fn build_lattice(family: LatticeFamily, n: u32) -> Result<Multigraph> {
    check_cap("lattice generation", n as u64, MAX_BUILD_GENERATION as u64)?;
    let mut g = Multigraph::single_edge();
    for _ in 0..n {
        g = next_generation(family, &g);
    }
    Ok(g)
}

fn next_generation(family: LatticeFamily, g: &Multigraph) -> Multigraph {
    let v = g.vertex_count;
    let at = |copy: usize, local: usize| copy * v + local;

    let mut uf = UnionFind::new(4 * v);
    for c in 0..4 {
        uf.union(at(c, g.special_y), at((c + 1) % 4, g.special_x));
    }
    // hub(c) joins copy c and copy c + 1.
    let hub = |c: usize| at(c, g.special_y);
    let (new_x, new_y) = match family {
        LatticeFamily::Fractal | LatticeFamily::Flower22 => (hub(3), hub(1)),
        LatticeFamily::Flower13 => (hub(3), hub(0)),
    };
    let root_x = uf.find(new_x);
    let root_y = uf.find(new_y);

    let new_count = 4 * v - 4;
    let mut label = vec![usize::MAX; 4 * v];
    label[root_x] = 0;
    label[root_y] = new_count - 1;
    let mut next = 1;
    for old in 0..4 * v {
        let r = uf.find(old);
        if label[r] == usize::MAX {
            label[r] = next;
            next += 1;
        }
    }
    debug_assert_eq!(next, new_count - 1);

    let mut relabel = |old: usize| label[uf.find(old)];
    let mut edges = Vec::with_capacity(4 * g.edges.len() + 1);
    for c in 0..4 {
        for &(a, b) in &g.edges {
            edges.push((relabel(at(c, a)), relabel(at(c, b))));
        }
    }
    if family == LatticeFamily::Fractal {
        edges.push((relabel(hub(0)), relabel(hub(2))));
    }

    Multigraph {
        vertex_count: new_count,
        edges,
        special_x: 0,
        special_y: new_count - 1,
    }
}

/// Closed-form `(|V|, |E|)` of generation `n`.
pub fn lattice_counts(family: LatticeFamily, n: u32) -> (BigInt, BigInt) {
    let four_n = BigInt::from(4).pow(n);
    let vertices = (BigInt::from(2) * &four_n + 4) / 3;
    let edges = match family {
        LatticeFamily::Fractal => (four_n * 4 - 1) / 3,
        LatticeFamily::Flower22 | LatticeFamily::Flower13 => four_n,
    };
    (vertices, edges)
}

/// Vertex degrees in ascending order; a loop adds 2 to its vertex.
pub fn degree_sequence(g: &Multigraph) -> Vec<usize> {
    let mut deg = vec![0usize; g.vertex_count];
    for &(a, b) in &g.edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    deg.sort_unstable();
    deg
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generation_zero_is_k2() {
        for family in LatticeFamily::ALL {
            let g = build_lattice(family, 0).unwrap();
            assert_eq!(g, Multigraph::single_edge());
        }
    }

    #[test]
    fn fractal_generation_one() {
        let g = build_lattice(LatticeFamily::Fractal, 1).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edges(), &[(0, 1), (1, 3), (3, 2), (2, 0), (1, 2)]);
        assert_eq!((g.special_x(), g.special_y()), (0, 3));
        // Both specials have degree 2, the chord endpoints degree 3.
        assert_eq!(g.degree_sequence(), vec![2, 2, 3, 3]);
    }

    #[test]
    fn flowers_generation_one_are_four_cycles() {
        let f22 = build_lattice(LatticeFamily::Flower22, 1).unwrap();
        let f13 = build_lattice(LatticeFamily::Flower13, 1).unwrap();
        assert_eq!(f22.edges(), &[(0, 1), (1, 3), (3, 2), (2, 0)]);
        // Adjacent specials for the (1,3)-flower: 0 and 3 share an edge.
        assert_eq!(f13.edges(), &[(0, 3), (3, 1), (1, 2), (2, 0)]);
        for g in [&f22, &f13] {
            assert_eq!(g.degree_sequence(), vec![2, 2, 2, 2]);
        }
        assert!(!f22.edges().contains(&(0, 3)) && !f22.edges().contains(&(3, 0)));
    }

    #[test]
    fn counts_match_construction() {
        for family in LatticeFamily::ALL {
            for n in 0..=6 {
                let g = build_lattice(family, n).unwrap();
                let (v, e) = lattice_counts(family, n);
                assert_eq!(BigInt::from(g.vertex_count()), v, "{family} n={n}");
                assert_eq!(BigInt::from(g.edge_count()), e, "{family} n={n}");
                assert!(g.is_connected(), "{family} n={n}");
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let c = |f, n| {
            let (v, e) = lattice_counts(f, n);
            (v.to_string(), e.to_string())
        };
        assert_eq!(c(LatticeFamily::Fractal, 0), ("2".into(), "1".into()));
        assert_eq!(c(LatticeFamily::Fractal, 2), ("12".into(), "21".into()));
        assert_eq!(c(LatticeFamily::Flower22, 2), ("12".into(), "16".into()));
        // No upper bound on the closed form.
        let (v, _) = lattice_counts(LatticeFamily::Flower13, 40);
        assert_eq!(v, (BigInt::from(2) * BigInt::from(4).pow(40) + 4) / 3);
    }

    #[test]
    fn flower_degree_sequences_coincide() {
        for n in 0..=4 {
            let a = build_lattice(LatticeFamily::Flower22, n).unwrap();
            let b = build_lattice(LatticeFamily::Flower13, n).unwrap();
            assert_eq!(a.degree_sequence(), b.degree_sequence(), "n={n}");
        }
    }

    #[test]
    fn fractal_average_degree_approaches_four() {
        let g = build_lattice(LatticeFamily::Fractal, 6).unwrap();
        let avg = 2.0 * g.edge_count() as f64 / g.vertex_count() as f64;
        assert!((avg - 4.0).abs() < 0.01, "average degree {avg}");
    }

    #[test]
    fn specials_are_first_and_last() {
        for family in LatticeFamily::ALL {
            for n in 1..=3 {
                let g = build_lattice(family, n).unwrap();
                assert_eq!(g.special_x(), 0);
                assert_eq!(g.special_y(), g.vertex_count() - 1);
            }
        }
    }

    #[test]
    fn generation_cap() {
        assert!(matches!(
            build_lattice(LatticeFamily::Fractal, 13),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn degree_sequence_counts_loops_twice() {
        let g = Multigraph::new(2, vec![(0, 0), (0, 1), (0, 1)], 0, 1).unwrap();
        assert_eq!(degree_sequence(&g), vec![2, 4]);
        assert_eq!(degree_sequence(&Multigraph::single_edge()), vec![1, 1]);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = build_lattice(LatticeFamily::Fractal, 1).unwrap();
        let text = g.to_edge_list();
        assert!(text.starts_with("p 4 5 0 3\ne 0 1\n"));
        assert!(text.ends_with('\n'));
        assert_eq!(Multigraph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_rejects_malformed_input() {
        assert!(Multigraph::from_edge_list("").is_err());
        assert!(Multigraph::from_edge_list("p 2 1 0 1\n").is_err());
        assert!(Multigraph::from_edge_list("p 2 1 0 1\ne 0 2\n").is_err());
        assert!(Multigraph::from_edge_list("p 2 1 0 0\ne 0 1\n").is_err());
        assert!(Multigraph::from_edge_list("q 2 1 0 1\ne 0 1\n").is_err());
        assert!(Multigraph::from_edge_list("p 2 1 0 1\ne 0 x\n").is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for family in LatticeFamily::ALL {
            assert_eq!(family.as_str().parse::<LatticeFamily>().unwrap(), family);
        }
        assert!("flower31".parse::<LatticeFamily>().is_err());
    }
}
