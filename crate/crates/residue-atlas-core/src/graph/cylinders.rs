use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::connection::ConnectionSearch;
use super::minimal::minimal_tuple_decision;
use super::untying::decide_multizero_abelian;
use crate::decision::{Certificate, Decision, EnrichedEdge, EnrichedVertex, Verdict};
use crate::field::{QComplex, QReal};
use crate::strata::Stratum;
use crate::Error;

pub const TAG_CYL: &str = "cylinders.enriched-graph";
pub const TAG_CYL_NONE: &str = "cylinders.no-enriched-graph";
pub const TAG_CYL_BOUND: &str = "cylinders.count-bound";

/// Set partitions of `items` into exactly `blocks` nonempty blocks, each
/// block sorted decreasingly, deduplicated up to reordering of blocks.
fn families(items: &[i64], blocks: usize) -> BTreeSet<Vec<Vec<i64>>> {
    let mut out = BTreeSet::new();
    let mut assign = vec![0usize; items.len()];
    fn rec(i: usize, used: usize, blocks: usize, items: &[i64], assign: &mut Vec<usize>, out: &mut BTreeSet<Vec<Vec<i64>>>) {
        if i == items.len() {
            if used == blocks {
                let mut fam = vec![Vec::new(); blocks];
                for (j, &b) in assign.iter().enumerate() {
                    fam[b].push(items[j]);
                }
                for f in fam.iter_mut() {
                    f.sort_unstable_by(|a, b| b.cmp(a));
                }
                fam.sort();
                out.insert(fam);
            }
            return;
        }
        for b in 0..(used + 1).min(blocks) {
            assign[i] = b;
            rec(i + 1, used.max(b + 1), blocks, items, assign, out);
        }
    }
    rec(0, 0, blocks, items, &mut assign, &mut out);
    out
}

fn connected_without(nv: usize, ends: &[(usize, usize)], skip: Option<usize>) -> bool {
    let mut parent: Vec<usize> = (0..nv).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (i, &(a, b)) in ends.iter().enumerate() {
        if Some(i) == skip {
            continue;
        }
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        parent[ra] = rb;
    }
    let r0 = find(&mut parent, 0);
    (1..nv).all(|v| find(&mut parent, v) == r0)
}

fn vertex_ok(genus: u32, family: &[i64], tuple: &[QComplex], search: &mut ConnectionSearch<QReal>) -> bool {
    if tuple.len() < 2 {
        return false;
    }
    if genus >= 1 {
        return true;
    }
    if family.len() == 1 {
        return minimal_tuple_decision(tuple, search).verdict == Verdict::Realizable;
    }
    let mut orders = family.to_vec();
    orders.extend(core::iter::repeat_n(-1, tuple.len()));
    let s = Stratum::abelian(0, orders);
    matches!(decide_multizero_abelian(&s, tuple), Ok(d) if d.verdict == Verdict::Realizable)
}

/// Whether a holomorphic abelian differential of the stratum has disjoint
/// cylinders with the given circumferences.
pub fn decide_cylinders(s: &Stratum, lambda: &[QComplex]) -> Result<Decision, Error> {
    if s.k != 1 || s.genus == 0 || s.orders.iter().any(|&m| m < 0) {
        return Err(Error::Precondition(format!("{} is not a holomorphic abelian stratum of genus >= 1", s)));
    }
    if lambda.is_empty() || lambda.iter().any(|l| l.is_zero()) {
        return Err(Error::InvalidTuple("circumferences must be nonzero and at least one".into()));
    }
    let zeros = s.zeros();
    let n = zeros.len();
    let t = lambda.len();
    if t > s.genus as usize + n - 1 {
        return Ok(Decision::not_realizable(TAG_CYL_BOUND).with(Certificate::Theorem {
            statement: format!("{} disjoint cylinders exceed g+n-1 = {}", t, s.genus as usize + n - 1),
        }));
    }
    let mut search = ConnectionSearch::<QReal>::new();
    for u in 0..n {
        let nv = u + 1;
        let pairs: Vec<(usize, usize)> = (0..nv).flat_map(|x| (x..nv).map(move |y| (x, y))).collect();
        for fam in families(&zeros, nv) {
            let sigma: Vec<i64> = fam.iter().map(|f| f.iter().sum()).collect();
            let mut choice = vec![0usize; t];
            loop {
                let ends: Vec<(usize, usize)> = choice.iter().map(|&c| pairs[c]).collect();
                if let Some(cert) = try_ends(&fam, &sigma, &ends, lambda, &mut search) {
                    return Ok(Decision::realizable(TAG_CYL).with(cert));
                }
                let mut i = 0;
                while i < t {
                    choice[i] += 1;
                    if choice[i] < pairs.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == t {
                    break;
                }
            }
        }
    }
    Ok(Decision::not_realizable(TAG_CYL_NONE).with(Certificate::Exhausted {
        searched: format!("enriched graphs with up to {} vertices and {} edges", n, t),
    }))
}

fn try_ends(
    fam: &[Vec<i64>],
    sigma: &[i64],
    ends: &[(usize, usize)],
    lambda: &[QComplex],
    search: &mut ConnectionSearch<QReal>,
) -> Option<Certificate> {
    let nv = fam.len();
    let mut val = vec![0i64; nv];
    for &(a, b) in ends {
        val[a] += 1;
        val[b] += 1;
    }
    let mut genus = Vec::with_capacity(nv);
    for v in 0..nv {
        let twice = sigma[v] - val[v] + 2;
        if twice < 0 || twice % 2 != 0 {
            return None;
        }
        genus.push((twice / 2) as u32);
    }
    if !connected_without(nv, ends, None) {
        return None;
    }
    for (i, &(a, b)) in ends.iter().enumerate() {
        if a != b && !connected_without(nv, ends, Some(i)) {
            return None;
        }
    }
    let free: Vec<usize> = (0..ends.len()).filter(|&i| ends[i].0 != ends[i].1).collect();
    for mask in 0u64..(1u64 << free.len()) {
        let mut orient: Vec<(usize, usize)> = ends.to_vec();
        for (bit, &i) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                orient[i] = (ends[i].1, ends[i].0);
            }
        }
        let mut tuples: Vec<Vec<QComplex>> = vec![Vec::new(); nv];
        for (i, &(p, m)) in orient.iter().enumerate() {
            tuples[p].push(lambda[i].clone());
            tuples[m].push(-lambda[i].clone());
        }
        if (0..nv).all(|v| vertex_ok(genus[v], &fam[v], &tuples[v], search)) {
            return Some(Certificate::Enriched {
                vertices: (0..nv).map(|v| EnrichedVertex { genus: genus[v], family: fam[v].clone() }).collect(),
                edges: orient
                    .iter()
                    .enumerate()
                    .map(|(i, &(p, m))| EnrichedEdge { plus: p, minus: m, lambda: lambda[i].clone() })
                    .collect(),
            });
        }
        if free.is_empty() {
            break;
        }
    }
    None
}
