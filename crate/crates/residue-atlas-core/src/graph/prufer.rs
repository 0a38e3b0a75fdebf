use alloc::vec;
use alloc::vec::Vec;

/// Decode a Prüfer sequence over `0..n` into the edge list of its tree.
pub fn decode(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    if rest.len() == 2 {
        edges.push((rest[0], rest[1]));
    }
    edges
}

/// Every labeled tree on `n` vertices, as edge lists.
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

impl LabeledTrees {
    pub fn new(n: usize) -> Self {
        LabeledTrees { n, seq: vec![0; n.saturating_sub(2)], done: n == 0 }
    }
}

impl Iterator for LabeledTrees {
    type Item = Vec<(usize, usize)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = if self.n == 1 { Vec::new() } else { decode(&self.seq, self.n) };
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.seq[i] += 1;
            if self.seq[i] < self.n {
                break;
            }
            self.seq[i] = 0;
        }
        Some(out)
    }
}

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(a, b) in edges {
        d[a] += 1;
        d[b] += 1;
    }
    d
}

/// For each edge (a,b): the set of vertices on a's side once the edge is cut.
pub fn sides(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    edges
        .iter()
        .enumerate()
        .map(|(ei, &(a, _))| {
            let mut seen = vec![false; n];
            let mut stack = vec![a];
            seen[a] = true;
            while let Some(v) = stack.pop() {
                for &(w, e) in &adj[v] {
                    if e != ei && !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            seen
        })
        .collect()
}

pub fn is_tree(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 || edges.len() != n - 1 {
        return false;
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &(a, b) in edges {
        if a >= n || b >= n {
            return false;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}
