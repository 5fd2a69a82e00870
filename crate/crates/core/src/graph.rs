//! Undirected simple graphs with labeled vertices, plus the structural
//! queries the rewrite machinery preconditions on: connected components,
//! block decomposition, cut vertices, pendant paths, and proper cut edges.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`. Edges are stored as sorted
/// pairs in a `BTreeSet`, so edge iteration order is deterministic.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Wire form: `{"n": 5, "edges": [[0,1], [1,2]]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, &j.edges)
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        GraphJson {
            n: g.n,
            edges: g.edges.iter().copied().collect(),
        }
    }
}

fn ordered(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if !self.edges.insert(ordered(u, v)) {
            let (a, b) = ordered(u, v);
            return Err(Error::DuplicateEdge(a, b));
        }
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.edges.remove(&ordered(u, v)) {
            let (a, b) = ordered(u, v);
            return Err(Error::MissingEdge(a, b));
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&ordered(u, v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Sorted edge list (u < v).
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency lists, sorted, for all vertices at once.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Relabel vertex `i` as `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let mut g = Graph::new(self.n);
        for &(u, v) in &self.edges {
            g.edges.insert(ordered(perm[u], perm[v]));
        }
        g
    }

    /// Parse the edge-list interchange format: a header line `n m` followed
    /// by `m` lines `u v`. Blank lines are permitted and counted.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_no, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "empty input, expected header \"n m\"".into(),
        })?;
        let mut it = header.split_whitespace();
        let parse_usize = |tok: Option<&str>, line: usize, what: &str| -> Result<usize> {
            let tok = tok.ok_or(Error::Parse {
                line,
                msg: format!("missing {what}"),
            })?;
            tok.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("invalid {what}: {tok:?}"),
            })
        };
        let n = parse_usize(it.next(), header_no, "vertex count")?;
        let m = parse_usize(it.next(), header_no, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: header_no,
                msg: "trailing tokens after \"n m\" header".into(),
            });
        }
        if n == 0 {
            return Err(Error::Parse {
                line: header_no,
                msg: "vertex count must be at least 1".into(),
            });
        }

        let mut g = Graph::new(n);
        for _ in 0..m {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: header_no,
                msg: format!("expected {m} edge lines, input ended early"),
            })?;
            let mut it = line.split_whitespace();
            let u = parse_usize(it.next(), line_no, "edge endpoint")?;
            let v = parse_usize(it.next(), line_no, "edge endpoint")?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "trailing tokens after \"u v\"".into(),
                });
            }
            g.add_edge(u, v).map_err(|e| Error::Parse {
                line: line_no,
                msg: e.to_string(),
            })?;
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: "unexpected content after the last edge".into(),
            });
        }
        Ok(g)
    }

    /// Inverse of [`Graph::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// BFS distances from `source` (usize::MAX when unreachable).
    pub fn distances_from(&self, source: usize) -> Vec<usize> {
        let adj = self.adjacency();
        let mut dist = vec![usize::MAX; self.n];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Replace `remove` by `add`, returning a new graph. Removed edges must
    /// be present; added edges must be absent from the input.
    pub fn apply_edge_rewrite(
        &self,
        remove: &[(usize, usize)],
        add: &[(usize, usize)],
    ) -> Result<Graph> {
        let mut g = self.clone();
        for &(u, v) in remove {
            g.remove_edge(u, v)?;
        }
        for &(u, v) in add {
            if self.has_edge(u, v) {
                let (a, b) = ordered(u, v);
                return Err(Error::DuplicateEdge(a, b));
            }
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Full structural profile; see [`CactusProfile`].
    pub fn cactus_profile(&self) -> CactusProfile {
        let comps = self.components();
        let is_connected = comps.len() == 1;
        let (raw_blocks, cut_flags) = self.block_decomposition();

        let mut blocks: Vec<Block> = raw_blocks
            .into_iter()
            .map(|edges| Block::from_edges(self, edges))
            .collect();
        blocks.sort_by(|a, b| {
            let mut av = a.vertices.clone();
            let mut bv = b.vertices.clone();
            av.sort_unstable();
            bv.sort_unstable();
            av.cmp(&bv)
        });

        let cut_vertices: Vec<usize> = (0..self.n).filter(|&v| cut_flags[v]).collect();
        let cycle_count = blocks.iter().filter(|b| b.is_cycle).count();
        let is_cactus = is_connected && blocks.iter().all(|b| b.is_cycle || b.is_edge());

        CactusProfile {
            is_connected,
            is_cactus,
            cycle_count,
            blocks,
            cut_vertices,
            pendant_paths: self.pendant_paths(),
            proper_cut_edges: self.proper_cut_edges(&comps),
        }
    }

    /// Biconnected components as edge lists, plus articulation flags.
    fn block_decomposition(&self) -> (Vec<Vec<(usize, usize)>>, Vec<bool>) {
        let adj = self.adjacency();
        let n = self.n;
        let mut disc = vec![0usize; n]; // 0 = unvisited, else time
        let mut low = vec![0usize; n];
        let mut cut = vec![false; n];
        let mut timer = 0usize;
        let mut edge_stack: Vec<(usize, usize)> = Vec::new();
        let mut blocks: Vec<Vec<(usize, usize)>> = Vec::new();

        // Iterative DFS; each frame tracks (vertex, parent, neighbor cursor).
        for root in 0..n {
            if disc[root] != 0 {
                continue;
            }
            let mut root_children = 0usize;
            timer += 1;
            disc[root] = timer;
            low[root] = timer;
            let mut stack: Vec<(usize, Option<usize>, usize)> = vec![(root, None, 0)];
            while let Some(&(u, parent, cursor)) = stack.last() {
                if cursor < adj[u].len() {
                    stack.last_mut().expect("nonempty").2 += 1;
                    let v = adj[u][cursor];
                    if Some(v) == parent {
                        continue;
                    }
                    if disc[v] == 0 {
                        edge_stack.push((u, v));
                        if u == root {
                            root_children += 1;
                        }
                        timer += 1;
                        disc[v] = timer;
                        low[v] = timer;
                        stack.push((v, Some(u), 0));
                    } else if disc[v] < disc[u] {
                        edge_stack.push((u, v));
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            if p != root {
                                cut[p] = true;
                            }
                            let mut blk = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                blk.push(e);
                                if e == (p, u) {
                                    break;
                                }
                            }
                            blocks.push(blk);
                        }
                    }
                }
            }
            if root_children >= 2 {
                cut[root] = true;
            }
        }
        (blocks, cut)
    }

    /// Maximal paths from a vertex of degree >= 3 through degree-2 vertices
    /// to a degree-1 vertex. Sequences start at the anchor; path length is
    /// `sequence.len() - 1` edges (a pendant edge has length 1).
    pub fn pendant_paths(&self) -> Vec<Vec<usize>> {
        let deg = self.degrees();
        let adj = self.adjacency();
        let mut paths = Vec::new();
        for anchor in 0..self.n {
            if deg[anchor] < 3 {
                continue;
            }
            for &first in &adj[anchor] {
                let mut seq = vec![anchor, first];
                let (mut prev, mut cur) = (anchor, first);
                while deg[cur] == 2 {
                    let next = if adj[cur][0] == prev {
                        adj[cur][1]
                    } else {
                        adj[cur][0]
                    };
                    prev = cur;
                    cur = next;
                    seq.push(cur);
                    if cur == anchor {
                        break; // walked around a cycle
                    }
                }
                if cur != anchor && deg[cur] == 1 {
                    paths.push(seq);
                }
            }
        }
        paths.sort();
        paths
    }

    /// Cut edges whose removal leaves two components of at least two
    /// vertices each (within the edge's own component).
    fn proper_cut_edges(&self, comps: &[Vec<usize>]) -> Vec<(usize, usize)> {
        let mut comp_of = vec![0usize; self.n];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        let adj = self.adjacency();
        let mut out = Vec::new();
        for &(u, v) in &self.edges {
            // Size of u's side when (u, v) is deleted.
            let mut seen = vec![false; self.n];
            seen[u] = true;
            let mut queue = vec![u];
            let mut size_u = 1usize;
            let mut reached_v = false;
            while let Some(a) = queue.pop() {
                for &b in &adj[a] {
                    if (a, b) == (u, v) || (a, b) == (v, u) {
                        continue;
                    }
                    if b == v {
                        reached_v = true;
                    }
                    if !seen[b] {
                        seen[b] = true;
                        size_u += 1;
                        queue.push(b);
                    }
                }
            }
            if reached_v {
                continue; // not a cut edge
            }
            let comp_size = comps[comp_of[u]].len();
            let size_v = comp_size - size_u;
            if size_u >= 2 && size_v >= 2 {
                out.push((u, v));
            }
        }
        out
    }
}

/// One block of the block decomposition. For a cycle block `vertices` lists
/// the cycle order starting from the smallest label toward its smaller
/// neighbor; otherwise vertices are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub is_cycle: bool,
}

impl Block {
    fn from_edges(g: &Graph, mut edges: Vec<(usize, usize)>) -> Block {
        for e in &mut edges {
            *e = ordered(e.0, e.1);
        }
        edges.sort_unstable();
        edges.dedup();
        let mut vertices: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        // A biconnected block is a cycle exactly when |E| = |V|.
        let is_cycle = edges.len() >= 3 && edges.len() == vertices.len();
        if is_cycle {
            vertices = Block::cycle_order(g, &vertices);
        }
        Block {
            vertices,
            edges,
            is_cycle,
        }
    }

    fn cycle_order(g: &Graph, verts: &[usize]) -> Vec<usize> {
        let inside: BTreeSet<usize> = verts.iter().copied().collect();
        let start = *verts.iter().min().expect("cycle block is nonempty");
        let mut order = vec![start];
        let first = g
            .neighbors(start)
            .into_iter()
            .filter(|v| inside.contains(v))
            .min()
            .expect("cycle vertex has block neighbors");
        let (mut prev, mut cur) = (start, first);
        while cur != start {
            order.push(cur);
            let next = g
                .neighbors(cur)
                .into_iter()
                .filter(|&v| inside.contains(&v) && v != prev)
                .min()
                .expect("cycle vertex has two block neighbors");
            prev = cur;
            cur = next;
        }
        order
    }

    pub fn is_edge(&self) -> bool {
        self.edges.len() == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// Structural decomposition used by the rewrite preconditions.
#[derive(Clone, Debug, Serialize)]
pub struct CactusProfile {
    pub is_connected: bool,
    pub is_cactus: bool,
    /// Number of cycle blocks; equals m - n + 1 for a connected cactus.
    pub cycle_count: usize,
    pub blocks: Vec<Block>,
    pub cut_vertices: Vec<usize>,
    /// Anchor-first vertex sequences; see [`Graph::pendant_paths`].
    pub pendant_paths: Vec<Vec<usize>>,
    pub proper_cut_edges: Vec<(usize, usize)>,
}

impl CactusProfile {
    /// Cycle blocks of length >= 4, in deterministic order.
    pub fn long_cycles(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| b.is_cycle && b.vertices.len() >= 4)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) fn triangle() -> Graph {
        Graph::parse("3 3\n0 1\n1 2\n2 0").unwrap()
    }

    pub(crate) fn bowtie() -> Graph {
        // Two triangles sharing vertex 0.
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn star(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn parse_triangle() {
        let g = triangle();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        assert!(g.has_edge(2, 0));
    }

    #[test]
    fn parse_k2() {
        let g = Graph::parse("2 1\n0 1").unwrap();
        assert_eq!((g.n(), g.m()), (2, 1));
    }

    #[test]
    fn parse_duplicate_edge_names_line() {
        let err = Graph::parse("3 2\n0 1\n0 1").unwrap_err();
        match err {
            Error::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains("duplicate"), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_self_loop_and_range() {
        assert!(Graph::parse("3 1\n1 1").is_err());
        assert!(Graph::parse("3 1\n0 3").is_err());
        assert!(Graph::parse("3 2\n0 1").is_err());
        assert!(Graph::parse("3 1\n0 1\n1 2").is_err());
    }

    #[test]
    fn components_basic() {
        let g = Graph::parse("2 1\n0 1").unwrap();
        assert_eq!(g.components(), vec![vec![0, 1]]);

        let g = Graph::new(2);
        assert_eq!(g.components(), vec![vec![0], vec![1]]);

        let mut g = triangle();
        g = Graph::from_edges(4, &g.edges().collect::<Vec<_>>()).unwrap();
        assert_eq!(g.components().len(), 2);
    }

    #[test]
    fn profile_bowtie() {
        let p = bowtie().cactus_profile();
        assert!(p.is_cactus);
        assert_eq!(p.cycle_count, 2);
        assert_eq!(p.cut_vertices, vec![0]);
        assert!(p.proper_cut_edges.is_empty());
        assert_eq!(p.blocks.len(), 2);
        assert!(p.blocks.iter().all(|b| b.is_cycle));
    }

    #[test]
    fn profile_k4_not_cactus() {
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let p = g.cactus_profile();
        assert!(!p.is_cactus);
        assert_eq!(p.blocks.len(), 1);
        assert!(!p.blocks[0].is_cycle);
    }

    #[test]
    fn profile_two_triangles_joined_by_edge() {
        let g = Graph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)],
        )
        .unwrap();
        let p = g.cactus_profile();
        assert!(p.is_cactus);
        assert_eq!(p.cycle_count, 2);
        assert_eq!(p.proper_cut_edges, vec![(0, 3)]);
        assert_eq!(p.cut_vertices, vec![0, 3]);
    }

    #[test]
    fn profile_star() {
        let p = star(5).cactus_profile();
        assert!(p.is_cactus);
        assert_eq!(p.cycle_count, 0);
        assert_eq!(p.pendant_paths.len(), 4);
        assert!(p.pendant_paths.iter().all(|s| s.len() == 2));
        assert!(p.proper_cut_edges.is_empty());
    }

    #[test]
    fn profile_disconnected_reports_blocks() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let p = g.cactus_profile();
        assert!(!p.is_connected);
        assert!(!p.is_cactus);
        assert_eq!(p.blocks.len(), 1);
        assert_eq!(p.cycle_count, 1);
    }

    #[test]
    fn pendant_path_of_length_two() {
        // Triangle 0-1-2 with a path 0-3-4 hanging off vertex 0.
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let p = g.cactus_profile();
        assert_eq!(p.pendant_paths, vec![vec![0, 3, 4]]);
    }

    #[test]
    fn path_graph_has_no_pendant_paths() {
        assert!(path(5).pendant_paths().is_empty());
    }

    #[test]
    fn rewrite_path_to_star() {
        let g = path(4);
        let h = g.apply_edge_rewrite(&[(2, 3)], &[(1, 3)]).unwrap();
        assert_eq!(h.degree(1), 3);
        assert_eq!(g.degree(1), 2, "input must stay unmodified");
    }

    #[test]
    fn rewrite_identity_and_errors() {
        let g = triangle();
        assert_eq!(g.apply_edge_rewrite(&[], &[]).unwrap(), g);
        assert!(matches!(
            g.apply_edge_rewrite(&[], &[(0, 1)]),
            Err(Error::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            g.apply_edge_rewrite(&[(0, 4)], &[]),
            Err(Error::VertexRange { .. }) | Err(Error::MissingEdge(..))
        ));
    }

    #[test]
    fn cycle_block_order_is_cyclic() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let p = g.cactus_profile();
        let b = &p.blocks[0];
        assert!(b.is_cycle);
        assert_eq!(b.vertices.len(), 5);
        for i in 0..5 {
            let u = b.vertices[i];
            let v = b.vertices[(i + 1) % 5];
            assert!(g.has_edge(u, v));
        }
    }

    #[test]
    fn json_round_trip() {
        let g = bowtie();
        let s = serde_json::to_string(&g).unwrap();
        assert!(s.contains("\"n\":5"));
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }

    /// Random connected cactus by attaching edge/cycle blocks.
    pub(crate) fn random_cactus(rng: &mut crate::rng::SplitMix64, n: usize) -> Graph {
        let mut g = Graph::new(1);
        while g.n() < n {
            let at = rng.below(g.n());
            let room = n - g.n();
            let grown = if room >= 2 && rng.next_f64() < 0.4 {
                // A cycle of length `len` spends `len - 1` new vertices.
                let len = 3 + rng.below((room - 1).min(3));
                attach_cycle(&g, at, len)
            } else {
                attach_edge(&g, at)
            };
            g = grown;
        }
        g
    }

    fn attach_edge(g: &Graph, at: usize) -> Graph {
        let mut edges: Vec<_> = g.edges().collect();
        edges.push((at, g.n()));
        Graph::from_edges(g.n() + 1, &edges).unwrap()
    }

    fn attach_cycle(g: &Graph, at: usize, len: usize) -> Graph {
        let mut edges: Vec<_> = g.edges().collect();
        let base = g.n();
        let new = len - 1;
        edges.push((at, base));
        for i in 0..new - 1 {
            edges.push((base + i, base + i + 1));
        }
        edges.push((base + new - 1, at));
        Graph::from_edges(g.n() + new, &edges).unwrap()
    }

    #[test]
    fn cactus_cycle_count_matches_euler_formula() {
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..50 {
            let g = random_cactus(&mut rng, 9);
            let p = g.cactus_profile();
            assert!(p.is_cactus);
            assert_eq!(p.cycle_count, g.m() + 1 - g.n());
            // Blocks partition the edge set.
            let total: usize = p.blocks.iter().map(|b| b.edges.len()).sum();
            assert_eq!(total, g.m());
            // Cut vertices are exactly the vertices in >= 2 blocks.
            for v in 0..g.n() {
                let in_blocks = p.blocks.iter().filter(|b| b.contains(v)).count();
                assert_eq!(in_blocks >= 2, p.cut_vertices.contains(&v), "vertex {v}");
            }
        }
    }

    proptest! {
        #[test]
        fn parse_serialize_round_trip(seed in 0u64..500) {
            let mut rng = crate::rng::SplitMix64::new(seed);
            let n = 1 + rng.below(10);
            let g = random_cactus(&mut rng, n);
            let back = Graph::parse(&g.to_edge_list()).unwrap();
            prop_assert_eq!(back, g);
        }
    }
}
