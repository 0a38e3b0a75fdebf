use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::connection::ConnectionSearch;
use super::minimal::{decide_minimal_abelian, minimal_tuple_decision};
use super::prufer::{degrees, sides, LabeledTrees};
use crate::decision::{Certificate, Decision, UntyingVertex, Verdict};
use crate::field::{QComplex, QReal};
use crate::strata::{residue_tuple_valid, Stratum};
use crate::Error;

pub const TAG_UNTYING: &str = "genus0.abelian.multi-zero.untying-graph";
pub const TAG_NO_UNTYING: &str = "genus0.abelian.multi-zero.no-untying-graph";

pub fn is_simple_pole_abelian(s: &Stratum) -> bool {
    s.k == 1 && s.genus == 0 && s.orders.iter().all(|&m| m >= -1)
}

/// Distribute sorted values into bins of the given capacities, skipping
/// assignments that only permute equal values.
fn distributions(values: &[QComplex], caps: &[usize], f: &mut dyn FnMut(&[Vec<QComplex>]) -> bool) -> bool {
    let mut groups: Vec<(QComplex, usize)> = Vec::new();
    for v in values {
        match groups.last_mut() {
            Some((x, c)) if x == v => *c += 1,
            _ => groups.push((v.clone(), 1)),
        }
    }
    let mut bins: Vec<Vec<QComplex>> = vec![Vec::new(); caps.len()];
    let mut room: Vec<usize> = caps.to_vec();
    fn rec(
        g: usize,
        bin: usize,
        left: usize,
        groups: &[(QComplex, usize)],
        bins: &mut Vec<Vec<QComplex>>,
        room: &mut Vec<usize>,
        f: &mut dyn FnMut(&[Vec<QComplex>]) -> bool,
    ) -> bool {
        if g == groups.len() {
            return f(bins);
        }
        if left == 0 {
            let next = if g + 1 < groups.len() { groups[g + 1].1 } else { 0 };
            return rec(g + 1, 0, next, groups, bins, room, f);
        }
        if bin == bins.len() {
            return false;
        }
        let max = left.min(room[bin]);
        for c in (0..=max).rev() {
            for _ in 0..c {
                bins[bin].push(groups[g].0.clone());
            }
            room[bin] -= c;
            let stop = rec(g, bin + 1, left - c, groups, bins, room, f);
            room[bin] += c;
            for _ in 0..c {
                bins[bin].pop();
            }
            if stop {
                return true;
            }
        }
        false
    }
    if groups.is_empty() {
        return f(&bins);
    }
    let first = groups[0].1;
    rec(0, 0, first, &groups, &mut bins, &mut room, f)
}

pub fn decide_multizero_abelian(s: &Stratum, r: &[QComplex]) -> Result<Decision, Error> {
    if !is_simple_pole_abelian(s) {
        return Err(Error::Precondition(format!("{} is not abelian genus 0 with simple poles only", s)));
    }
    if !residue_tuple_valid(s, r)? {
        return Err(Error::InvalidTuple("entries must be nonzero and sum to zero".into()));
    }
    let zeros = s.zeros();
    let n = zeros.len();
    if n <= 1 {
        return decide_minimal_abelian(s, r);
    }
    let mut values = r.to_vec();
    values.sort();
    let mut search = ConnectionSearch::<QReal>::new();
    let mut found: Option<Certificate> = None;
    for edges in LabeledTrees::new(n) {
        let deg = degrees(n, &edges);
        let mut caps = Vec::with_capacity(n);
        let mut ok = true;
        for i in 0..n {
            let m = zeros[i] + 2 - deg[i] as i64;
            if m < 0 {
                ok = false;
                break;
            }
            caps.push(m as usize);
        }
        if !ok {
            continue;
        }
        let side = sides(n, &edges);
        let done = distributions(&values, &caps, &mut |bins| {
            let mark_sum: Vec<QComplex> = bins
                .iter()
                .map(|b| b.iter().fold(QComplex::zero(), |a, x| &a + x))
                .collect();
            let mut half: Vec<Vec<(usize, QComplex)>> = vec![Vec::new(); n];
            for (ei, &(a, b)) in edges.iter().enumerate() {
                let mut w = QComplex::zero();
                for v in 0..n {
                    if side[ei][v] {
                        w = &w + &mark_sum[v];
                    }
                }
                if w.is_zero() {
                    return false;
                }
                half[a].push((ei, -w.clone()));
                half[b].push((ei, w));
            }
            let mut vertices = Vec::with_capacity(n);
            for v in 0..n {
                let mut tuple = bins[v].clone();
                tuple.extend(half[v].iter().map(|h| h.1.clone()));
                if minimal_tuple_decision(&tuple, &mut search).verdict != Verdict::Realizable {
                    return false;
                }
                vertices.push(UntyingVertex { order: zeros[v], marks: bins[v].clone(), half_edges: half[v].clone() });
            }
            found = Some(Certificate::Untying { edges: edges.clone(), vertices });
            true
        });
        if done {
            break;
        }
    }
    Ok(match found {
        Some(c) => Decision::realizable(TAG_UNTYING).with(c),
        None => Decision::not_realizable(TAG_NO_UNTYING).with(Certificate::Exhausted {
            searched: format!("all labeled trees on {} vertices with every marking assignment", n),
        }),
    })
}

/// Re-validate an untying-graph certificate against its stratum and tuple.
pub fn check_untying(s: &Stratum, r: &[QComplex], cert: &Certificate) -> bool {
    let Certificate::Untying { edges, vertices } = cert else {
        return false;
    };
    let n = vertices.len();
    if !super::prufer::is_tree(n.max(1), edges) && n > 1 {
        return false;
    }
    let mut zs: Vec<i64> = vertices.iter().map(|v| v.order).collect();
    zs.sort_unstable_by(|a, b| b.cmp(a));
    if zs != s.zeros() {
        return false;
    }
    let mut marks: Vec<QComplex> = vertices.iter().flat_map(|v| v.marks.iter().cloned()).collect();
    let mut rs = r.to_vec();
    marks.sort();
    rs.sort();
    if marks != rs {
        return false;
    }
    let deg = degrees(n, edges);
    let mut search = ConnectionSearch::<QReal>::new();
    for (i, v) in vertices.iter().enumerate() {
        if v.marks.len() + deg[i] != (v.order + 2) as usize || v.half_edges.len() != deg[i] {
            return false;
        }
        let mut sum = QComplex::zero();
        for x in v.marks.iter().chain(v.half_edges.iter().map(|h| &h.1)) {
            sum = &sum + x;
        }
        if !sum.is_zero() {
            return false;
        }
        let mut tuple = v.marks.clone();
        tuple.extend(v.half_edges.iter().map(|h| h.1.clone()));
        if tuple.iter().any(|x| x.is_zero()) || minimal_tuple_decision(&tuple, &mut search).verdict != Verdict::Realizable {
            return false;
        }
    }
    for (ei, _) in edges.iter().enumerate() {
        let ws: Vec<&QComplex> = vertices
            .iter()
            .flat_map(|v| v.half_edges.iter().filter(move |h| h.0 == ei).map(|h| &h.1))
            .collect();
        if ws.len() != 2 || !(ws[0] + ws[1]).is_zero() {
            return false;
        }
    }
    true
}
