use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::QComplex;

/// Σ A_d·√d over distinct squarefree d.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Surd(Vec<(BigInt, BigRational)>);

impl Surd {
    fn add(&self, o: &Surd) -> Surd {
        let mut map: BTreeMap<BigInt, BigRational> = self.0.iter().cloned().collect();
        for (d, a) in &o.0 {
            let e = map.entry(d.clone()).or_insert_with(BigRational::zero);
            *e += a;
        }
        Surd(map.into_iter().filter(|(_, a)| !a.is_zero()).collect())
    }

    fn neg(&self) -> Surd {
        Surd(self.0.iter().map(|(d, a)| (d.clone(), -a.clone())).collect())
    }

    /// Sign, or `None` when floating point cannot separate it from zero.
    fn sign(&self) -> Option<i8> {
        if self.0.is_empty() {
            return Some(0);
        }
        if self.0.len() == 1 {
            return Some(if self.0[0].1.is_positive() { 1 } else { -1 });
        }
        let mut sum = 0.0;
        let mut scale = 0.0;
        for (d, a) in &self.0 {
            let t = a.to_f64()? * libm::sqrt(d.to_f64()?);
            sum += t;
            scale += t.abs();
        }
        if sum.abs() <= 1e-9 * scale {
            None
        } else if sum > 0.0 {
            Some(1)
        } else {
            Some(-1)
        }
    }
}

/// `n = f²·d` with d squarefree, by trial division; `None` if undetermined.
fn squarefree_split(n: &BigInt) -> Option<(BigInt, BigInt)> {
    let mut n = n.clone();
    let mut f = BigInt::one();
    let mut d = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(1_000_000);
    while &p * &p <= n && p <= limit {
        let mut e = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            e += 1;
        }
        for _ in 0..e / 2 {
            f *= &p;
        }
        if e % 2 == 1 {
            d *= &p;
        }
        p += 1;
    }
    if n > BigInt::one() {
        let r = n.sqrt();
        if &r * &r == n {
            f *= r;
        } else if &limit * &limit >= n || &p * &p > n {
            d *= n;
        } else {
            return None;
        }
    }
    Some((f, d))
}

/// √q for positive rational q as a surd.
fn sqrt_rational(q: &BigRational) -> Option<Surd> {
    let num = q.numer() * q.denom();
    let (f, d) = squarefree_split(&num)?;
    Some(Surd(vec![(d, BigRational::new(f, q.denom().clone()))]))
}

type State = Vec<(i8, Surd)>;

struct Search {
    memo: BTreeMap<State, Option<bool>>,
}

fn remove_merge(state: &State, y: usize, p: usize) -> State {
    let merged = (state[p].0, state[p].1.add(&state[y].1));
    let mut out: State = state.iter().enumerate().filter(|&(i, _)| i != y && i != p).map(|(_, x)| x.clone()).collect();
    out.push(merged);
    out.sort();
    out
}

impl Search {
    /// `None` when a sign could not be decided.
    fn solve(&mut self, state: &State) -> Option<bool> {
        if state.len() == 1 {
            return state[0].1.sign().map(|s| s == state[0].0);
        }
        if let Some(v) = self.memo.get(state) {
            return *v;
        }
        let mut undecided = false;
        let mut ok = false;
        'outer: for y in 0..state.len() {
            if y > 0 && state[y] == state[y - 1] {
                continue;
            }
            match state[y].1.sign() {
                None => {
                    undecided = true;
                    continue;
                }
                Some(sg) if sg != state[y].0 => continue,
                _ => {}
            }
            for p in 0..state.len() {
                if p == y || state[p].0 == state[y].0 || (p > 0 && p - 1 != y && state[p] == state[p - 1]) {
                    continue;
                }
                match self.solve(&remove_merge(state, y, p)) {
                    Some(true) => {
                        ok = true;
                        break 'outer;
                    }
                    None => undecided = true,
                    Some(false) => {}
                }
            }
        }
        let res = if ok { Some(true) } else if undecided { None } else { Some(false) };
        self.memo.insert(state.clone(), res);
        res
    }
}

/// Outcome of the symmetric connection-graph search for
/// (−1, 2s−3; (−2^s)) with residues on one ray.
pub enum SymmetricOutcome {
    Found { signs: Vec<i8>, parent: Vec<Option<usize>> },
    None,
    Unknown,
}

/// Residues `r` all on one ray. Searches for signs ε (ε₁ = +1) and a rooted
/// tree on the square roots with alternating signs along edges and every
/// subtree sum carrying the sign of its root vertex.
pub fn symmetric_connection_graph(r: &[QComplex]) -> SymmetricOutcome {
    let s = r.len();
    if s == 0 {
        return SymmetricOutcome::None;
    }
    let mut roots = Vec::with_capacity(s);
    for x in r {
        let Some(q) = x.div(&r[0]) else { return SymmetricOutcome::Unknown };
        if !q.is_real() || !q.re.is_rational() || q.re.signum() <= 0 {
            return SymmetricOutcome::Unknown;
        }
        match sqrt_rational(&q.re.a) {
            Some(v) => roots.push(v),
            None => return SymmetricOutcome::Unknown,
        }
    }
    let mut search = Search { memo: BTreeMap::new() };
    let mut unknown = false;
    for mask in 0u64..(1u64 << (s - 1)) {
        let signs: Vec<i8> = (0..s).map(|i| if i > 0 && mask >> (i - 1) & 1 == 1 { -1 } else { 1 }).collect();
        let mut state: State = (0..s)
            .map(|i| (signs[i], if signs[i] > 0 { roots[i].clone() } else { roots[i].neg() }))
            .collect();
        state.sort();
        match search.solve(&state) {
            Some(true) => {
                let parent = build(&mut search, &signs, &roots);
                return SymmetricOutcome::Found { signs, parent };
            }
            None => unknown = true,
            Some(false) => {}
        }
    }
    if unknown {
        SymmetricOutcome::Unknown
    } else {
        SymmetricOutcome::None
    }
}

fn build(search: &mut Search, signs: &[i8], roots: &[Surd]) -> Vec<Option<usize>> {
    let s = signs.len();
    let mut parent = vec![None; s];
    let mut items: Vec<(i8, Surd, usize)> = (0..s)
        .map(|i| (signs[i], if signs[i] > 0 { roots[i].clone() } else { roots[i].neg() }, i))
        .collect();
    while items.len() > 1 {
        let state: State = {
            let mut v: State = items.iter().map(|(c, x, _)| (*c, x.clone())).collect();
            v.sort();
            v
        };
        let mut step = None;
        'find: for y in 0..items.len() {
            if items[y].1.sign() != Some(items[y].0) {
                continue;
            }
            for p in 0..items.len() {
                if p == y || items[p].0 == items[y].0 {
                    continue;
                }
                let sy = state.iter().position(|e| e.0 == items[y].0 && e.1 == items[y].1).unwrap();
                let sp = state
                    .iter()
                    .enumerate()
                    .position(|(i, e)| i != sy && e.0 == items[p].0 && e.1 == items[p].1)
                    .unwrap();
                if search.solve(&remove_merge(&state, sy, sp)) == Some(true) {
                    step = Some((y, p));
                    break 'find;
                }
            }
        }
        let (y, p) = step.expect("search reported success");
        parent[items[y].2] = Some(items[p].2);
        let add = items[y].1.clone();
        items[p].1 = items[p].1.add(&add);
        items.remove(y);
    }
    parent
}
