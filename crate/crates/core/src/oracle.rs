//! Ground-truth Tutte polynomials for small multigraphs.
//!
//! Two independent routes are provided:
//!
//! * [`tutte_subgraph_expansion`] sums `(x-1)^(r(G)-r(H)) (y-1)^n(H)` over all
//!   `2^|E|` spanning subgraphs `H`, and [`split_tutte`] partitions that same
//!   sum by whether the two special vertices share a component of `H`.
//! * [`tutte_deletion_contraction`] applies the loop / bridge /
//!   delete-plus-contract rules with a memo keyed on a refined relabeling of
//!   the current multigraph.
//!
//! Neither route knows anything about the lattice recursions.

use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bigpoly::{BiPoly, BigIntVal};
use crate::error::{check_cap, Result};
use crate::lattice::{Multigraph, UnionFind};

/// Edge cap for the `2^|E|` enumerations.
pub const MAX_EXPANSION_EDGES: usize = 24;
/// Edge cap for deletion-contraction.
pub const MAX_DELETION_CONTRACTION_EDGES: usize = 64;

/// Number of leading edges whose in/out choices are fanned out to workers.
const PARALLEL_PREFIX_EDGES: usize = 8;

/// Rank, nullity and component count of a spanning subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubgraphStats {
    pub rank: usize,
    pub nullity: usize,
    pub components: usize,
}

impl SubgraphStats {
    /// Stats of the spanning subgraph of `g` on the listed edge indices.
    pub fn of(g: &Multigraph, edge_subset: &[usize]) -> Self {
        let mut uf = UnionFind::new(g.vertex_count());
        for &e in edge_subset {
            let (a, b) = g.edges()[e];
            uf.union(a, b);
        }
        let components = uf.components;
        let rank = g.vertex_count() - components;
        Self {
            rank,
            nullity: edge_subset.len() - rank,
            components,
        }
    }
}

/// Union-find without path compression so unions can be undone in LIFO order.
struct RollbackUnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<Option<u32>>,
    components: usize,
    cycles: usize,
}

impl RollbackUnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            history: Vec::new(),
            components: n,
            cycles: 0,
        }
    }

    fn find(&self, mut v: u32) -> u32 {
        while self.parent[v as usize] != v {
            v = self.parent[v as usize];
        }
        v
    }

    fn add_edge(&mut self, a: u32, b: u32) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.cycles += 1;
            self.history.push(None);
            return;
        }
        if self.size[ra as usize] < self.size[rb as usize] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb as usize] = ra;
        self.size[ra as usize] += self.size[rb as usize];
        self.components -= 1;
        self.history.push(Some(rb));
    }

    fn undo(&mut self) {
        match self.history.pop().expect("undo without a matching add") {
            None => self.cycles -= 1,
            Some(child) => {
                let root = self.parent[child as usize];
                self.size[root as usize] -= self.size[child as usize];
                self.parent[child as usize] = child;
                self.components += 1;
            }
        }
    }
}

/// Counts of spanning subgraphs by `(components, nullity, specials joined)`.
struct SubsetHistogram {
    vertex_count: usize,
    edge_count: usize,
    counts: Vec<u64>,
}

impl SubsetHistogram {
    fn new(vertex_count: usize, edge_count: usize) -> Self {
        Self {
            vertex_count,
            edge_count,
            counts: vec![0; (vertex_count + 1) * (edge_count + 1) * 2],
        }
    }

    fn index(&self, components: usize, nullity: usize, joined: bool) -> usize {
        (components * (self.edge_count + 1) + nullity) * 2 + joined as usize
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    fn entries(&self) -> impl Iterator<Item = (usize, usize, bool, u64)> + '_ {
        let stride = self.edge_count + 1;
        (0..=self.vertex_count).flat_map(move |k| {
            (0..stride).flat_map(move |nul| {
                [false, true].into_iter().filter_map(move |joined| {
                    let c = self.counts[(k * stride + nul) * 2 + joined as usize];
                    (c > 0).then_some((k, nul, joined, c))
                })
            })
        })
    }
}

fn enumerate_subsets(g: &Multigraph) -> SubsetHistogram {
    let edges: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|&(a, b)| (a as u32, b as u32))
        .collect();
    let n = g.vertex_count();
    let (sx, sy) = (g.special_x() as u32, g.special_y() as u32);
    let prefix = edges.len().min(PARALLEL_PREFIX_EDGES);

    (0u64..1 << prefix)
        .into_par_iter()
        .map(|mask| {
            let mut hist = SubsetHistogram::new(n, edges.len());
            let mut uf = RollbackUnionFind::new(n);
            for (i, &(a, b)) in edges[..prefix].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    uf.add_edge(a, b);
                }
            }
            walk(&edges[prefix..], &mut uf, &mut hist, sx, sy);
            hist
        })
        .reduce(
            || SubsetHistogram::new(n, edges.len()),
            SubsetHistogram::merge,
        )
}

fn walk(
    rest: &[(u32, u32)],
    uf: &mut RollbackUnionFind,
    hist: &mut SubsetHistogram,
    sx: u32,
    sy: u32,
) {
    match rest.split_first() {
        None => {
            let joined = uf.parent.is_empty() || uf.find(sx) == uf.find(sy);
            let idx = hist.index(uf.components, uf.cycles, joined);
            hist.counts[idx] += 1;
        }
        Some((&(a, b), tail)) => {
            walk(tail, uf, hist, sx, sy);
            uf.add_edge(a, b);
            walk(tail, uf, hist, sx, sy);
            uf.undo();
        }
    }
}

/// Expands `sum count * (x-1)^(k(H) - k(G)) * (y-1)^nullity` over the
/// histogram entries accepted by `keep`.
fn expand<F>(g: &Multigraph, hist: &SubsetHistogram, keep: F) -> BiPoly
where
    F: Fn(bool) -> bool,
{
    let base_components = g.component_count();
    let x_minus_1 = &BiPoly::x() - &BiPoly::one();
    let y_minus_1 = &BiPoly::y() - &BiPoly::one();
    let powers = |p: &BiPoly, up_to: usize| {
        let mut out = vec![BiPoly::one()];
        for i in 1..=up_to {
            out.push(&out[i - 1] * p);
        }
        out
    };
    let xp = powers(&x_minus_1, g.vertex_count());
    let yp = powers(&y_minus_1, g.edge_count());

    let mut terms = Vec::new();
    for (k, nullity, joined, count) in hist.entries() {
        if !keep(joined) {
            continue;
        }
        let monomial = &xp[k - base_components] * &yp[nullity];
        let count = BigInt::from(count);
        terms.extend(monomial.terms().map(|(e, c)| (e, c * &count)));
    }
    BiPoly::from_terms(terms)
}

/// Tutte polynomial by direct summation over every spanning subgraph.
pub fn tutte_subgraph_expansion(g: &Multigraph) -> Result<BiPoly> {
    check_cap("edge count", g.edge_count() as u64, MAX_EXPANSION_EDGES as u64)?;
    let hist = enumerate_subsets(g);
    Ok(expand(g, &hist, |_| true))
}

/// Splits the subgraph expansion by whether `special_x` and `special_y` lie
/// in the same component of `H`. Returns `(joined part, separated part)`.
pub fn split_tutte(g: &Multigraph) -> Result<(BiPoly, BiPoly)> {
    check_cap("edge count", g.edge_count() as u64, MAX_EXPANSION_EDGES as u64)?;
    let hist = enumerate_subsets(g);
    Ok((expand(g, &hist, |j| j), expand(g, &hist, |j| !j)))
}

/// Number of spanning trees, counted by enumerating edge subsets.
pub fn count_spanning_trees_bruteforce(g: &Multigraph) -> Result<BigIntVal> {
    check_cap("edge count", g.edge_count() as u64, MAX_EXPANSION_EDGES as u64)?;
    let hist = enumerate_subsets(g);
    let trees: u64 = hist
        .entries()
        .filter(|&(k, nullity, _, _)| k == 1 && nullity == 0)
        .map(|(_, _, _, c)| c)
        .sum();
    Ok(BigInt::from(trees))
}

/// Loopless working multigraph for deletion-contraction.
#[derive(Clone, Debug)]
struct DcGraph {
    vertex_count: usize,
    edges: Vec<(u32, u32)>,
}

/// A relabeled copy of a [`DcGraph`]; equal keys imply isomorphic graphs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct CanonicalKey {
    vertex_count: u32,
    edges: Vec<(u32, u32)>,
}

type Memo = HashMap<CanonicalKey, BiPoly>;

/// Tutte polynomial by memoized deletion-contraction.
pub fn tutte_deletion_contraction(g: &Multigraph) -> Result<BiPoly> {
    check_cap(
        "edge count",
        g.edge_count() as u64,
        MAX_DELETION_CONTRACTION_EDGES as u64,
    )?;
    let graph = DcGraph {
        vertex_count: g.vertex_count(),
        edges: g
            .edges()
            .iter()
            .map(|&(a, b)| (a as u32, b as u32))
            .collect(),
    };
    let mut memo = Memo::new();
    Ok(solve(graph, &mut memo))
}

fn solve(mut g: DcGraph, memo: &mut Memo) -> BiPoly {
    let before = g.edges.len();
    g.edges.retain(|(a, b)| a != b);
    let loops = (before - g.edges.len()) as u32;
    let mut factor = BiPoly::monomial(1, 0, loops);

    drop_isolated_vertices(&mut g);
    let bridges = find_bridges(&g);
    if !bridges.is_empty() {
        factor = &factor * &BiPoly::monomial(1, bridges.len() as u32, 0);
        g = contract_edges(&g, &bridges);
    }
    if g.edges.is_empty() {
        return factor;
    }

    let key = canonical_key(&g);
    if let Some(hit) = memo.get(&key) {
        return &factor * hit;
    }

    let e = pick_edge(&g);
    let mut deleted = g.clone();
    deleted.edges.swap_remove(e);
    let contracted = contract_edges(&g, &[e]);
    let value = &solve(deleted, memo) + &solve(contracted, memo);
    let result = &factor * &value;
    memo.insert(key, value);
    result
}

fn drop_isolated_vertices(g: &mut DcGraph) {
    let mut used = vec![false; g.vertex_count];
    for &(a, b) in &g.edges {
        used[a as usize] = true;
        used[b as usize] = true;
    }
    if used.iter().all(|&u| u) {
        return;
    }
    let mut label = vec![u32::MAX; g.vertex_count];
    let mut next = 0;
    for v in 0..g.vertex_count {
        if used[v] {
            label[v] = next;
            next += 1;
        }
    }
    for e in &mut g.edges {
        *e = (label[e.0 as usize], label[e.1 as usize]);
    }
    g.vertex_count = next as usize;
}

/// Contracts every listed edge; remaining parallels become loops.
fn contract_edges(g: &DcGraph, contract: &[usize]) -> DcGraph {
    let mut uf = UnionFind::new(g.vertex_count);
    let mut removed = vec![false; g.edges.len()];
    for &e in contract {
        let (a, b) = g.edges[e];
        uf.union(a as usize, b as usize);
        removed[e] = true;
    }
    let mut label = vec![u32::MAX; g.vertex_count];
    let mut next = 0;
    for v in 0..g.vertex_count {
        let r = uf.find(v);
        if label[r] == u32::MAX {
            label[r] = next;
            next += 1;
        }
    }
    let edges = g
        .edges
        .iter()
        .zip(&removed)
        .filter(|(_, r)| !**r)
        .map(|(&(a, b), _)| (label[uf.find(a as usize)], label[uf.find(b as usize)]))
        .collect();
    DcGraph {
        vertex_count: next as usize,
        edges,
    }
}

fn adjacency(g: &DcGraph) -> Vec<Vec<(u32, usize)>> {
    let mut adj = vec![Vec::new(); g.vertex_count];
    for (id, &(a, b)) in g.edges.iter().enumerate() {
        adj[a as usize].push((b, id));
        adj[b as usize].push((a, id));
    }
    adj
}

/// Bridge edge indices by lowlink; parallel edges are told apart by id.
fn find_bridges(g: &DcGraph) -> Vec<usize> {
    let adj = adjacency(g);
    let n = g.vertex_count;
    let mut disc = vec![u32::MAX; n];
    let mut low = vec![0u32; n];
    let mut bridges = Vec::new();
    let mut clock = 0;

    for root in 0..n {
        if disc[root] != u32::MAX {
            continue;
        }
        // (vertex, edge id used to enter it, next adjacency index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = clock;
        low[root] = clock;
        clock += 1;
        while let Some(top) = stack.last_mut() {
            let (v, via) = (top.0, top.1);
            if let Some(&(w, id)) = adj[v].get(top.2) {
                top.2 += 1;
                if id == via {
                    continue;
                }
                let w = w as usize;
                if disc[w] == u32::MAX {
                    disc[w] = clock;
                    low[w] = clock;
                    clock += 1;
                    stack.push((w, id, 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(parent, _, _)) = stack.last() {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > disc[parent] {
                        bridges.push(via);
                    }
                }
            }
        }
    }
    bridges.sort_unstable();
    bridges
}

/// First listed edge at a maximum-degree vertex. Called only on loopless,
/// bridgeless graphs, so any such edge is a valid deletion-contraction edge.
fn pick_edge(g: &DcGraph) -> usize {
    let mut degree = vec![0usize; g.vertex_count];
    for &(a, b) in &g.edges {
        degree[a as usize] += 1;
        degree[b as usize] += 1;
    }
    let hub = (0..g.vertex_count)
        .max_by_key(|&v| (degree[v], std::cmp::Reverse(v)))
        .expect("graph has edges");
    g.edges
        .iter()
        .position(|&(a, b)| a as usize == hub || b as usize == hub)
        .expect("maximum-degree vertex has an edge")
}

/// Relabels vertices by iterated degree refinement (ties by current index)
/// and sorts the edge multiset.
fn canonical_key(g: &DcGraph) -> CanonicalKey {
    let n = g.vertex_count;
    let adj = adjacency(g);
    let mut color: Vec<u32> = adj.iter().map(|nbrs| nbrs.len() as u32).collect();
    let mut distinct = 0;
    loop {
        let mut signatures: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<u32> = adj[v].iter().map(|&(w, _)| color[w as usize]).collect();
                nbr.sort_unstable();
                (color[v], nbr)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() == distinct {
            break;
        }
        distinct = sorted.len();
        for (v, sig) in signatures.drain(..).enumerate() {
            color[v] = sorted.binary_search(&sig).expect("signature present") as u32;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (color[v], v));
    let mut label = vec![0u32; n];
    for (new, &old) in order.iter().enumerate() {
        label[old] = new as u32;
    }
    let mut edges: Vec<(u32, u32)> = g
        .edges
        .iter()
        .map(|&(a, b)| {
            let (a, b) = (label[a as usize], label[b as usize]);
            (a.min(b), a.max(b))
        })
        .collect();
    edges.sort_unstable();
    CanonicalKey {
        vertex_count: n as u32,
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_lattice, LatticeFamily};
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn p(s: &str) -> BiPoly {
        s.parse().unwrap()
    }

    fn cycle(n: usize, sx: usize, sy: usize) -> Multigraph {
        Multigraph::new(n, (0..n).map(|i| (i, (i + 1) % n)).collect(), sx, sy).unwrap()
    }

    #[test]
    fn k2_both_routes() {
        let g = Multigraph::single_edge();
        assert_eq!(tutte_deletion_contraction(&g).unwrap(), p("x"));
        assert_eq!(tutte_subgraph_expansion(&g).unwrap(), p("x"));
        assert_eq!(split_tutte(&g).unwrap(), (p("1"), p("x-1")));
        assert_eq!(count_spanning_trees_bruteforce(&g).unwrap(), 1.into());
    }

    #[test]
    fn single_loop() {
        let g = Multigraph::new(1, vec![(0, 0)], 0, 0).unwrap();
        assert_eq!(tutte_deletion_contraction(&g).unwrap(), p("y"));
        assert_eq!(tutte_subgraph_expansion(&g).unwrap(), p("y"));
    }

    #[test]
    fn four_cycle() {
        let g = cycle(4, 0, 2);
        let t = p("x^3+x^2+x+y");
        assert_eq!(tutte_subgraph_expansion(&g).unwrap(), t);
        assert_eq!(tutte_deletion_contraction(&g).unwrap(), t);
        assert_eq!(count_spanning_trees_bruteforce(&g).unwrap(), 4.into());
        let (t1, t2) = split_tutte(&g).unwrap();
        assert_eq!(&t1 + &t2, t);
        assert!(t2.div_exact_x_minus_1().is_ok());
    }

    #[test]
    fn fractal_generation_one() {
        let g = build_lattice(LatticeFamily::Fractal, 1).unwrap();
        let t = p("x^3+2x^2+x+2xy+y+y^2");
        assert_eq!(tutte_deletion_contraction(&g).unwrap(), t);
        assert_eq!(tutte_subgraph_expansion(&g).unwrap(), t);
        let (t1, t2) = split_tutte(&g).unwrap();
        assert_eq!(t1, p("y^2+3y+2x+2"));
        assert_eq!(t2, &p("x-1") * &p("x^2+3x+2y+2"));
        assert_eq!(count_spanning_trees_bruteforce(&g).unwrap(), 8.into());
    }

    #[test]
    fn fractal_generation_two_oracles_agree() {
        let g = build_lattice(LatticeFamily::Fractal, 2).unwrap();
        assert_eq!(g.edge_count(), 21);
        let dc = tutte_deletion_contraction(&g).unwrap();
        assert_eq!(dc, tutte_subgraph_expansion(&g).unwrap());
        assert_eq!(dc.eval(&int(1), &int(1)), int(32768));
    }

    #[test]
    fn parallel_edges_and_loops() {
        // Two parallel edges: x + y. A third makes x + y + y^2.
        let g2 = Multigraph::new(2, vec![(0, 1), (0, 1)], 0, 1).unwrap();
        assert_eq!(tutte_deletion_contraction(&g2).unwrap(), p("x+y"));
        let g3 = Multigraph::new(2, vec![(0, 1), (1, 0), (0, 1)], 0, 1).unwrap();
        assert_eq!(tutte_deletion_contraction(&g3).unwrap(), p("x+y+y^2"));
        // A loop on a bridge endpoint multiplies by y.
        let gl = Multigraph::new(2, vec![(0, 1), (1, 1)], 0, 1).unwrap();
        assert_eq!(tutte_deletion_contraction(&gl).unwrap(), p("xy"));
        assert_eq!(tutte_subgraph_expansion(&gl).unwrap(), p("xy"));
    }

    #[test]
    fn disconnected_and_edgeless() {
        let empty = Multigraph::new(3, vec![], 0, 1).unwrap();
        assert_eq!(tutte_deletion_contraction(&empty).unwrap(), BiPoly::one());
        assert_eq!(tutte_subgraph_expansion(&empty).unwrap(), BiPoly::one());
        assert_eq!(count_spanning_trees_bruteforce(&empty).unwrap(), 0.into());
        // Two disjoint triangles: product of the two triangle polynomials.
        let tri = p("x^2+x+y");
        let two = Multigraph::new(
            6,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)],
            0,
            3,
        )
        .unwrap();
        assert_eq!(tutte_deletion_contraction(&two).unwrap(), &tri * &tri);
        assert_eq!(tutte_subgraph_expansion(&two).unwrap(), &tri * &tri);
    }

    #[test]
    fn caps_are_enforced() {
        let big = cycle(25, 0, 1);
        assert!(tutte_subgraph_expansion(&big).is_err());
        assert!(split_tutte(&big).is_err());
        assert!(count_spanning_trees_bruteforce(&big).is_err());
        assert!(tutte_deletion_contraction(&big).is_ok());
        assert!(tutte_deletion_contraction(&cycle(65, 0, 1)).is_err());
    }

    #[test]
    fn bridges_are_found() {
        let g = DcGraph {
            vertex_count: 5,
            edges: vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (3, 4)],
        };
        assert_eq!(find_bridges(&g), vec![3]);
    }

    #[test]
    fn subgraph_stats() {
        let g = build_lattice(LatticeFamily::Fractal, 1).unwrap();
        assert_eq!(
            SubgraphStats::of(&g, &[]),
            SubgraphStats { rank: 0, nullity: 0, components: 4 }
        );
        assert_eq!(
            SubgraphStats::of(&g, &[0, 1, 2, 3, 4]),
            SubgraphStats { rank: 3, nullity: 2, components: 1 }
        );
    }

    #[test]
    fn canonical_key_ignores_labelling() {
        // Two labellings of the 4-cycle plus a chord.
        let a = DcGraph { vertex_count: 4, edges: vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)] };
        let b = DcGraph { vertex_count: 4, edges: vec![(2, 0), (1, 3), (3, 2), (0, 1), (1, 2)] };
        assert_eq!(canonical_key(&a), canonical_key(&b));
        let c4 = DcGraph { vertex_count: 4, edges: vec![(0, 1), (1, 2), (2, 3), (3, 0)] };
        assert_ne!(canonical_key(&a), canonical_key(&c4));
    }

    /// Random multigraph on up to 5 vertices with up to 8 edges, loops and
    /// parallels allowed; `connected` threads a spanning path first.
    fn arb_multigraph(connected: bool) -> impl Strategy<Value = Multigraph> {
        (1usize..=5)
            .prop_flat_map(move |n| {
                let base = if connected { n - 1 } else { 0 };
                (Just(n), prop::collection::vec((0..n, 0..n), 0..=(8 - base)))
            })
            .prop_map(move |(n, extra)| {
                let mut edges: Vec<(usize, usize)> = if connected {
                    (1..n).map(|v| (v - 1, v)).collect()
                } else {
                    Vec::new()
                };
                edges.extend(extra);
                let sy = if n >= 2 { n - 1 } else { 0 };
                Multigraph::new(n, edges, 0, sy).unwrap()
            })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn oracles_agree(g in arb_multigraph(false)) {
            let dc = tutte_deletion_contraction(&g).unwrap();
            prop_assert_eq!(&dc, &tutte_subgraph_expansion(&g).unwrap());
            prop_assert!(dc.has_nonnegative_coefficients());
            prop_assert_eq!(
                dc.eval(&int(2), &int(2)),
                BigRational::from_integer(BigInt::from(2).pow(g.edge_count() as u32))
            );
        }

        #[test]
        fn connected_graph_laws(g in arb_multigraph(true)) {
            let t = tutte_deletion_contraction(&g).unwrap();
            prop_assert_eq!(
                t.eval(&int(1), &int(1)),
                BigRational::from_integer(count_spanning_trees_bruteforce(&g).unwrap())
            );
            let v = g.vertex_count() as u32;
            let e = g.edge_count() as u32;
            prop_assert!(t.degree_x().unwrap() < v);
            prop_assert!(t.degree_y().unwrap() <= e + 1 - v);
            let (t1, t2) = split_tutte(&g).unwrap();
            prop_assert_eq!(&t1 + &t2, t);
            if g.special_x() != g.special_y() {
                prop_assert!(t2.div_exact_x_minus_1().is_ok());
            }
        }
    }
}
