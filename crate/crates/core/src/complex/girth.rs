//! Shortest simple cycles in small undirected simple graphs.

use std::collections::VecDeque;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> SimpleGraph {
        SimpleGraph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        let mut g = SimpleGraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Loops and repeated edges are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v || self.adj[u].contains(&v) {
            return;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }
}

/// A shortest simple cycle as a vertex sequence (closing edge implicit), or
/// `None` for a forest.
///
/// A BFS from every root; each non-tree edge `(u, v)` closes the cycle
/// `u → lca → v → u` through the BFS tree. Minimised over all roots this is
/// the girth.
pub fn shortest_cycle(g: &SimpleGraph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut best: Option<Vec<usize>> = None;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            if let Some(b) = &best {
                // any cycle found from here is at least 2·dist[u] + 1 long
                if 2 * dist[u] + 1 >= b.len() {
                    break;
                }
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let cycle = tree_cycle(&parent, &dist, u, v);
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best
}

fn tree_cycle(parent: &[usize], dist: &[usize], u: usize, v: usize) -> Vec<usize> {
    let (mut a, mut b) = (u, v);
    let mut left = vec![a];
    let mut right = vec![b];
    while dist[a] > dist[b] {
        a = parent[a];
        left.push(a);
    }
    while dist[b] > dist[a] {
        b = parent[b];
        right.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        left.push(a);
        right.push(b);
    }
    right.pop();
    right.reverse();
    left.extend(right);
    left
}

/// Length of a shortest simple cycle; `None` stands for infinity.
pub fn injective_girth(g: &SimpleGraph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// True iff `cycle` is a simple closed path in `g`.
pub fn is_simple_cycle(g: &SimpleGraph, cycle: &[usize]) -> bool {
    let mut seen = vec![false; g.order()];
    for &v in cycle {
        if v >= g.order() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    cycle.len() >= 3
        && (0..cycle.len()).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]))
}
