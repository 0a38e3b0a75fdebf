use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use super::connection::ConnectionSearch;

/// Partitions of `total` into exactly `parts` positive parts, each decreasing.
pub fn partitions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    fn rec(rem: i64, parts: usize, max: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if parts == 0 {
            if rem == 0 {
                out.push(cur.clone());
            }
            return;
        }
        if rem < parts as i64 {
            return;
        }
        let hi = max.min(rem - (parts as i64 - 1));
        for x in (1..=hi).rev() {
            if x * (parts as i64) < rem {
                break;
            }
            cur.push(x);
            rec(rem - x, parts - 1, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        return out;
    }
    rec(total, parts, total, &mut vec![], &mut out);
    out
}

/// `(x₁ ≥ … ≥ x_{s1}, −y₁ ≥ … ≥ −y_{s2})`: the tuple fully sorted in decreasing order.
pub fn canonical(xs: &[i64], ys: &[i64]) -> Vec<i64> {
    let mut out: Vec<i64> = xs.to_vec();
    out.sort_unstable_by(|a, b| b.cmp(a));
    let mut neg: Vec<i64> = ys.iter().map(|y| -y).collect();
    neg.sort_unstable_by(|a, b| b.cmp(a));
    out.extend(neg);
    out
}

pub fn forbidden_bound(s1: usize, s2: usize) -> i64 {
    (s1 * s2 / 2) as i64
}

fn candidates(s1: usize, s2: usize, max_sum: i64) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut out = Vec::new();
    for total in 1..=max_sum {
        let xs = partitions(total, s1);
        let ys = partitions(total, s2);
        for x in &xs {
            for y in &ys {
                let g = x.iter().chain(y.iter()).fold(0i64, |g, v| g.gcd(v));
                if g == 1 {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

/// One deterministic shard of the search: candidates whose index is
/// congruent to `shard` modulo `n_shards`.
pub fn enumerate_forbidden_shard(s1: usize, s2: usize, max_sum: i64, shard: usize, n_shards: usize) -> BTreeSet<Vec<i64>> {
    let mut search = ConnectionSearch::<i64>::new();
    let mut out = BTreeSet::new();
    if s1 == 0 || s2 == 0 || n_shards == 0 {
        return out;
    }
    for (i, (x, y)) in candidates(s1, s2, max_sum).into_iter().enumerate() {
        if i % n_shards != shard {
            continue;
        }
        if !search.exists(&x, &y) {
            out.insert(canonical(&x, &y));
        }
    }
    out
}

/// Primitive integer tuples with `s1` positive and `s2` negative entries,
/// positive part summing to at most `max_sum`, that admit no connection graph.
pub fn enumerate_forbidden_up_to(s1: usize, s2: usize, max_sum: i64) -> BTreeSet<Vec<i64>> {
    enumerate_forbidden_shard(s1, s2, max_sum, 0, 1)
}

/// Forbidden primitive tuples; none exist beyond `s1·s2/2`.
pub fn enumerate_forbidden(s1: usize, s2: usize) -> BTreeSet<Vec<i64>> {
    enumerate_forbidden_up_to(s1, s2, forbidden_bound(s1, s2))
}
