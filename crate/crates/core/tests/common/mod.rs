#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use proptest::prelude::*;
use rkprofile::{catalog, parse, RkProfile};

pub fn entry(name: &str) -> RkProfile {
    catalog::get(name, &BTreeMap::new()).unwrap()
}

pub fn with_params(name: &str, kv: &[(&str, u64)]) -> RkProfile {
    let p = kv.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    catalog::get(name, &p).unwrap()
}

/// Sorted (down-set size, up-set size, class size, IL) per vertex.
type Invariant = Vec<(usize, usize, usize, u64)>;

/// A labelled preorder with a limit count on every vertex; members of one
/// class carry the same count.
#[derive(Debug, Clone)]
pub struct Labelled {
    pub n: usize,
    pub leq: Vec<bool>,
    pub il: Vec<u64>,
}

impl Labelled {
    fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    fn invariant(&self) -> Invariant {
        let mut v: Vec<_> = (0..self.n)
            .map(|a| {
                let down = (0..self.n).filter(|&b| self.le(b, a)).count();
                let up = (0..self.n).filter(|&b| self.le(a, b)).count();
                let twins = (0..self.n)
                    .filter(|&b| self.le(a, b) && self.le(b, a))
                    .count();
                (down, up, twins, self.il[a])
            })
            .collect();
        v.sort_unstable();
        v
    }

    fn isomorphic(&self, other: &Labelled) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut map = vec![usize::MAX; self.n];
        let mut used = vec![false; self.n];
        self.extend_map(other, 0, &mut map, &mut used)
    }

    fn extend_map(&self, other: &Labelled, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == self.n {
            return true;
        }
        for w in 0..other.n {
            if used[w] || self.il[v] != other.il[w] {
                continue;
            }
            let consistent = (0..v).all(|u| {
                self.le(u, v) == other.le(map[u], w) && self.le(v, u) == other.le(w, map[u])
            });
            if consistent {
                map[v] = w;
                used[w] = true;
                if self.extend_map(other, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }

    /// Parses back with one `il` line per class.
    pub fn to_profile(&self) -> RkProfile {
        let mut t = String::from("rkp 1\n");
        for v in 0..self.n {
            t += &format!("vertex x{v}\n");
            let first = (0..self.n)
                .find(|&u| self.le(u, v) && self.le(v, u))
                .unwrap();
            if first == v {
                t += &format!("il x{v} {}\n", self.il[v]);
            }
        }
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.le(a, b) {
                    t += &format!("le x{a} x{b}\n");
                }
            }
        }
        parse(&t).unwrap()
    }
}

/// All reflexive transitive relations on `0..n`.
fn labelled_preorders(n: usize) -> Vec<Vec<bool>> {
    fn grow(n: usize, v: usize, leq: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if v == n {
            out.push(leq.clone());
            return;
        }
        leq[v * n + v] = true;
        // each earlier vertex is unrelated, below, above or equivalent
        let choices = 4usize.pow(v as u32);
        for mut code in 0..choices {
            for u in 0..v {
                let c = code % 4;
                code /= 4;
                leq[u * n + v] = c == 1 || c == 3;
                leq[v * n + u] = c == 2 || c == 3;
            }
            // earlier vertices were already closed, so only triples through v
            let transitive = (0..=v).all(|a| {
                (0..=v).all(|b| {
                    if !leq[a * n + b] {
                        return true;
                    }
                    let ok = |c: usize| !leq[b * n + c] || leq[a * n + c];
                    if a == v || b == v {
                        (0..=v).all(ok)
                    } else {
                        ok(v)
                    }
                })
            });
            if transitive {
                grow(n, v + 1, leq, out);
            }
        }
        for u in 0..v {
            leq[u * n + v] = false;
            leq[v * n + u] = false;
        }
    }
    let mut out = Vec::new();
    grow(n, 0, &mut vec![false; n * n], &mut out);
    out
}

/// Mutual-domination classes, each listed from its smallest member.
fn classes(n: usize, leq: &[bool]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let members: Vec<usize> = (a..n)
            .filter(|&b| leq[a * n + b] && leq[b * n + a])
            .collect();
        for &m in &members {
            seen[m] = true;
        }
        out.push(members);
    }
    out
}

/// Admissible (least singleton with IL 0, unique greatest with IL at least
/// 1 when there are several vertices, every non-singleton class with IL at
/// least 1) labelled profiles with the given total, reduced by brute-force
/// isomorphism search.
pub fn naive_enumeration(total: u64) -> Vec<Labelled> {
    let mut reps: HashMap<Invariant, Vec<Labelled>> = HashMap::new();
    // beyond one vertex the greatest class needs a limit model, so n < total
    for n in 1..total.max(2) as usize {
        for leq in labelled_preorders(n) {
            let cls = classes(n, &leq);
            let le = |a: usize, b: usize| leq[a * n + b];
            let least: Vec<usize> = (0..cls.len())
                .filter(|&c| (0..n).all(|b| le(cls[c][0], b)))
                .collect();
            let greatest: Vec<usize> = (0..cls.len())
                .filter(|&c| (0..n).all(|b| le(b, cls[c][0])))
                .collect();
            if least.len() != 1 || greatest.len() != 1 || cls[least[0]].len() != 1 {
                continue;
            }
            let (bottom, top) = (least[0], greatest[0]);
            let minimum: Vec<u64> = (0..cls.len())
                .map(|c| {
                    let needs = (c == top && n > 1) || cls[c].len() > 1;
                    u64::from(needs && c != bottom)
                })
                .collect();
            let spare = total - n as u64;
            let mut il = vec![0u64; cls.len()];
            spread(&cls, bottom, &minimum, 0, spare, &mut il, &mut |il| {
                let mut per_vertex = vec![0; n];
                for (c, members) in cls.iter().enumerate() {
                    for &m in members {
                        per_vertex[m] = il[c];
                    }
                }
                let cand = Labelled {
                    n,
                    leq: leq.clone(),
                    il: per_vertex,
                };
                let bucket = reps.entry(cand.invariant()).or_default();
                if !bucket.iter().any(|r| r.isomorphic(&cand)) {
                    bucket.push(cand);
                }
            });
        }
    }
    reps.into_values().flatten().collect()
}

fn spread(
    cls: &[Vec<usize>],
    bottom: usize,
    minimum: &[u64],
    c: usize,
    left: u64,
    il: &mut [u64],
    emit: &mut impl FnMut(&[u64]),
) {
    if c == cls.len() {
        if left == 0 {
            emit(il);
        }
        return;
    }
    if c == bottom {
        il[c] = 0;
        return spread(cls, bottom, minimum, c + 1, left, il, emit);
    }
    for v in minimum[c]..=left {
        il[c] = v;
        spread(cls, bottom, minimum, c + 1, left - v, il, emit);
    }
}

/// Random admissible profile text: a least class, `k` middle classes with
/// random order among themselves, and a greatest class.
pub fn admissible_text() -> impl Strategy<Value = String> {
    (0usize..3)
        .prop_flat_map(|middle| {
            let k = middle + 2;
            (
                Just(k),
                proptest::collection::vec(any::<bool>(), k * k),
                proptest::collection::vec(1usize..3, k),
                proptest::collection::vec(0u64..3, k),
                any::<u64>(),
            )
        })
        .prop_map(|(k, edges, sizes, il, salt)| {
            let mut below = vec![false; k * k];
            for x in 0..k {
                for y in 0..k {
                    // forward edges only, so the relation is acyclic
                    let edge = x < y && (x == 0 || y == k - 1 || edges[x * k + y]);
                    below[x * k + y] = edge;
                }
            }
            let mut t = String::from("rkp 1\n");
            let mut reps = Vec::new();
            for c in 0..k {
                let size = if c == 0 { 1 } else { sizes[c] };
                let limit = match c {
                    0 => 0,
                    _ if c == k - 1 || size > 1 => il[c].max(1),
                    _ => il[c],
                };
                let names: Vec<String> = (0..size)
                    .map(|j| format!("n{}_{}", (salt as usize + c * 7 + j * 3) % 97, c * 3 + j))
                    .collect();
                for n in &names {
                    t += &format!("vertex {n}\n");
                }
                for w in names.windows(2) {
                    t += &format!("le {} {}\nle {} {}\n", w[0], w[1], w[1], w[0]);
                }
                t += &format!("il {} {limit}\n", names[0]);
                reps.push(names[0].clone());
            }
            for x in 0..k {
                for y in 0..k {
                    if below[x * k + y] {
                        t += &format!("le {} {}\n", reps[x], reps[y]);
                    }
                }
            }
            t
        })
}

pub fn admissible_profile() -> impl Strategy<Value = RkProfile> {
    admissible_text().prop_map(|t| parse(&t).unwrap())
}
