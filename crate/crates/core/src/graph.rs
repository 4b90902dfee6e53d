//! Undirected graphs with optional self-loops, the Laplacian, the box
//! (Cartesian) product, the structured graph families used in experiments,
//! and the edge-list text format.

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::matrix::SymMatrix;
use crate::Error;

/// Simple undirected graph on vertices `0..n`. Self-loops are allowed and a
/// loop contributes 2 to its endpoint's degree. Edges are stored normalized
/// as `(i, j)` with `i <= j` and iterate in sorted order, so two graphs with
/// the same edge set compare equal regardless of construction order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Adds the edge `{i, j}` (`i == j` for a self-loop). Panics on an
    /// out-of-range endpoint or a duplicate edge: both are construction bugs.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i <= j, "edge endpoints must be given as (i, j) with i <= j");
        assert!(j < self.n, "edge endpoint {} out of range for n={}", j, self.n);
        let fresh = self.edges.insert((i, j));
        assert!(fresh, "duplicate edge ({}, {})", i, j);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted `(i, j)` order, `i <= j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.contains(&key)
    }

    /// Vertex degrees; a self-loop counts 2.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(i, j) in &self.edges {
            if i == j {
                d[i] += 2;
            } else {
                d[i] += 1;
                d[j] += 1;
            }
        }
        d
    }
}

/// Graph Laplacian `L = A - D` (adjacency minus degree diagonal). Negative
/// semidefinite; every row sums to zero, including rows touched by loops
/// (a loop adds 2 to both the diagonal adjacency entry and the degree).
pub fn laplacian(g: &Graph) -> SymMatrix {
    let n = g.n();
    let mut l = SymMatrix::zeros(n);
    let deg = g.degrees();
    for (i, j) in g.edges() {
        if i == j {
            l.set(i, i, l.get(i, i) + 2.0);
        } else {
            l.set(i, j, l.get(i, j) + 1.0);
        }
    }
    for i in 0..n {
        l.set(i, i, l.get(i, i) - deg[i] as f64);
    }
    l
}

/// Box (Cartesian) product. Vertex `(a, b)` of `g x h` maps to index
/// `a * h.n() + b`.
pub fn box_product(g: &Graph, h: &Graph) -> Graph {
    let m = h.n();
    let mut prod = Graph::new(g.n() * m);
    for a in 0..g.n() {
        for (b1, b2) in h.edges() {
            prod.add_edge(a * m + b1, a * m + b2);
        }
    }
    for (a1, a2) in g.edges() {
        if a1 == a2 {
            for b in 0..m {
                prod.add_edge(a1 * m + b, a1 * m + b);
            }
        } else {
            for b in 0..m {
                prod.add_edge(a1 * m + b, a2 * m + b);
            }
        }
    }
    prod
}

/// Structured families with members indexed by a size parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LineageFamily {
    Path,
    Cycle,
    SquareGrid,
    MultiBarbell,
}

impl LineageFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            LineageFamily::Path => "path",
            LineageFamily::Cycle => "cycle",
            LineageFamily::SquareGrid => "square-grid",
            LineageFamily::MultiBarbell => "multi-barbell",
        }
    }
}

fn path_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

fn cycle_graph(n: usize) -> Graph {
    let mut g = path_graph(n);
    g.add_edge(0, n - 1);
    g
}

fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            g.add_edge(i, j);
        }
    }
    g
}

/// Member `n` of a structured family, or an error when no such member exists
/// (cycles and multi-barbells need `n >= 3`; paths and grids need `n >= 1`).
/// The grid member `n` is the box product of two `n`-paths (`n^2` vertices);
/// the multi-barbell member `n` is the box product of an `n`-cycle with the
/// complete graph `K_n` (`n` cliques of size `n` in a ring, `n^2` vertices).
pub fn lineage_member(family: LineageFamily, n: usize) -> Result<Graph, Error> {
    let min_n = match family {
        LineageFamily::Path | LineageFamily::SquareGrid => 1,
        LineageFamily::Cycle | LineageFamily::MultiBarbell => 3,
    };
    if n < min_n {
        return Err(Error::InvalidFamilyMember {
            family: family.as_str(),
            n,
        });
    }
    Ok(match family {
        LineageFamily::Path => path_graph(n),
        LineageFamily::Cycle => cycle_graph(n),
        LineageFamily::SquareGrid => box_product(&path_graph(n), &path_graph(n)),
        LineageFamily::MultiBarbell => box_product(&cycle_graph(n), &complete_graph(n)),
    })
}

/// Erdos-Renyi G(n, p): each pair `i < j` (row-major order) gets an edge
/// independently with probability `p`. Same `(n, p, seed)` always yields the
/// same graph.
pub fn random_bernoulli_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen::<f64>() < p {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Parses the plain edge-list format: first non-comment line is the vertex
/// count, each following line one edge `i j` with `i <= j` (equal for a
/// loop). `#` starts a comment line; blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, Error> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("missing vertex-count line".into()))?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Parse(format!("invalid vertex count {:?}", header)))?;
    if n == 0 {
        return Err(Error::Parse("graph must have at least one vertex".into()));
    }
    let mut g = Graph::new(n);
    for line in lines {
        let mut tok = line.split_whitespace();
        let a = tok.next();
        let b = tok.next();
        let extra = tok.next();
        let (a, b) = match (a, b, extra) {
            (Some(a), Some(b), None) => (a, b),
            _ => return Err(Error::Parse(format!("malformed edge line {:?}", line))),
        };
        let i: usize = a
            .parse()
            .map_err(|_| Error::Parse(format!("invalid endpoint {:?}", a)))?;
        let j: usize = b
            .parse()
            .map_err(|_| Error::Parse(format!("invalid endpoint {:?}", b)))?;
        if i > j {
            return Err(Error::Parse(format!(
                "edge ({}, {}) not in i <= j order",
                i, j
            )));
        }
        if j >= n {
            return Err(Error::Parse(format!(
                "edge ({}, {}) endpoint out of range for n={}",
                i, j, n
            )));
        }
        if g.has_edge(i, j) {
            return Err(Error::Parse(format!("duplicate edge ({}, {})", i, j)));
        }
        g.add_edge(i, j);
    }
    Ok(g)
}

/// Inverse of `parse_edge_list`: vertex count line, then sorted edge lines.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&g.n().to_string());
    out.push('\n');
    for (i, j) in g.edges() {
        out.push_str(&format!("{} {}\n", i, j));
    }
    out
}
