use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::prufer::{is_tree, sides};
use super::weight::Weight;
use crate::Error;

/// Weighted bipartite tree; edges join `pos[i]` to `neg[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectionGraph<W> {
    pub pos: Vec<W>,
    pub neg: Vec<W>,
    pub edges: Vec<(usize, usize)>,
}

impl<W: Weight> ConnectionGraph<W> {
    fn flat_edges(&self) -> Vec<(usize, usize)> {
        let p = self.pos.len();
        self.edges.iter().map(|&(i, j)| (i, p + j)).collect()
    }

    /// Signed flow across each edge, seen from its positive endpoint.
    pub fn flows(&self) -> Vec<W> {
        let n = self.pos.len() + self.neg.len();
        let flat = self.flat_edges();
        let p = self.pos.len();
        sides(n, &flat)
            .iter()
            .map(|side| {
                let mut plus = W::zero();
                let mut minus = W::zero();
                for (v, &inside) in side.iter().enumerate() {
                    if inside {
                        if v < p {
                            plus = plus.add(&self.pos[v]);
                        } else {
                            minus = minus.add(&self.neg[v - p]);
                        }
                    }
                }
                plus.sub(&minus)
            })
            .collect()
    }
}

/// Balanced weights and, under every order of leaf removals that leaves at
/// least one edge, strictly positive remaining weights. The latter holds
/// exactly when every edge carries a positive flow.
pub fn check_connection_graph<W: Weight>(g: &ConnectionGraph<W>) -> Result<bool, Error> {
    let n = g.pos.len() + g.neg.len();
    if g.edges.iter().any(|&(i, j)| i >= g.pos.len() || j >= g.neg.len()) {
        return Err(Error::InvalidGraph("edge endpoint out of range".into()));
    }
    if !is_tree(n, &g.flat_edges()) {
        return Err(Error::InvalidGraph("not a tree".into()));
    }
    let zero = W::zero();
    if g.pos.iter().chain(g.neg.iter()).any(|w| *w <= zero) {
        return Ok(false);
    }
    let total = |v: &[W]| v.iter().fold(W::zero(), |a, b| a.add(b));
    if total(&g.pos) != total(&g.neg) {
        return Ok(false);
    }
    Ok(g.flows().iter().all(|f| *f > zero))
}

type Key<W> = (Vec<W>, Vec<W>);

/// Search for a connection graph on the given positive and negative weights.
pub struct ConnectionSearch<W: Weight> {
    memo: BTreeMap<Key<W>, bool>,
}

impl<W: Weight> Default for ConnectionSearch<W> {
    fn default() -> Self {
        ConnectionSearch { memo: BTreeMap::new() }
    }
}

fn dedup_sorted<W: Weight>(v: &[W]) -> Vec<usize> {
    let mut idx = Vec::new();
    for i in 0..v.len() {
        if i == 0 || v[i] != v[i - 1] {
            idx.push(i);
        }
    }
    idx
}

fn replace_sorted<W: Weight>(v: &[W], i: usize, w: Option<W>) -> Vec<W> {
    let mut out: Vec<W> = v.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x.clone()).collect();
    if let Some(w) = w {
        let pos = out.partition_point(|x| *x < w);
        out.insert(pos, w);
    }
    out
}

enum Move {
    /// Positive vertex at index a becomes a leaf on negative vertex b.
    PosLeaf(usize, usize),
    NegLeaf(usize, usize),
}

impl<W: Weight> ConnectionSearch<W> {
    pub fn new() -> Self {
        Self::default()
    }

    fn moves(x: &[W], y: &[W]) -> Vec<(Move, Vec<W>, Vec<W>)> {
        let mut out = Vec::new();
        for a in dedup_sorted(x) {
            for b in dedup_sorted(y) {
                if x[a] < y[b] {
                    out.push((Move::PosLeaf(a, b), replace_sorted(x, a, None), replace_sorted(y, b, Some(y[b].sub(&x[a])))));
                } else if y[b] < x[a] {
                    out.push((Move::NegLeaf(a, b), replace_sorted(x, a, Some(x[a].sub(&y[b]))), replace_sorted(y, b, None)));
                }
            }
        }
        out
    }

    fn solve(&mut self, x: &[W], y: &[W]) -> bool {
        if x.is_empty() || y.is_empty() {
            return false;
        }
        if x.len() == 1 && y.len() == 1 {
            return x[0] == y[0];
        }
        let key = (x.to_vec(), y.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut ok = false;
        for (_, nx, ny) in Self::moves(x, y) {
            if self.solve(&nx, &ny) {
                ok = true;
                break;
            }
        }
        self.memo.insert(key, ok);
        ok
    }

    pub fn exists(&mut self, pos: &[W], neg: &[W]) -> bool {
        let mut x = pos.to_vec();
        let mut y = neg.to_vec();
        x.sort();
        y.sort();
        self.solve(&x, &y)
    }

    /// A connection graph on exactly these weights (indices refer to the inputs).
    pub fn find(&mut self, pos: &[W], neg: &[W]) -> Option<ConnectionGraph<W>> {
        let mut x: Vec<(W, usize)> = pos.iter().cloned().zip(0..).collect();
        let mut y: Vec<(W, usize)> = neg.iter().cloned().zip(0..).collect();
        x.sort();
        y.sort();
        let xs: Vec<W> = x.iter().map(|p| p.0.clone()).collect();
        let ys: Vec<W> = y.iter().map(|p| p.0.clone()).collect();
        if !self.solve(&xs, &ys) {
            return None;
        }
        let mut edges = Vec::new();
        self.build(x, y, &mut edges);
        Some(ConnectionGraph { pos: pos.to_vec(), neg: neg.to_vec(), edges })
    }

    fn build(&mut self, x: Vec<(W, usize)>, y: Vec<(W, usize)>, edges: &mut Vec<(usize, usize)>) {
        if x.len() == 1 && y.len() == 1 {
            edges.push((x[0].1, y[0].1));
            return;
        }
        let xs: Vec<W> = x.iter().map(|p| p.0.clone()).collect();
        let ys: Vec<W> = y.iter().map(|p| p.0.clone()).collect();
        for (mv, nx, ny) in Self::moves(&xs, &ys) {
            if !self.solve(&nx, &ny) {
                continue;
            }
            let (mut lx, mut ly) = (x.clone(), y.clone());
            match mv {
                Move::PosLeaf(a, b) => {
                    edges.push((x[a].1, y[b].1));
                    let w = y[b].0.sub(&x[a].0);
                    lx.remove(a);
                    ly[b].0 = w;
                }
                Move::NegLeaf(a, b) => {
                    edges.push((x[a].1, y[b].1));
                    let w = x[a].0.sub(&y[b].0);
                    ly.remove(b);
                    lx[a].0 = w;
                }
            }
            lx.sort();
            ly.sort();
            self.build(lx, ly, edges);
            return;
        }
        unreachable!("solve reported success without a move");
    }
}
