//! Definitions, evaluated by brute force.

use std::collections::{BTreeSet, VecDeque};

pub type Table = Vec<Vec<usize>>;
pub type Perm = Vec<usize>;

pub fn identity(t: &Table) -> Option<usize> {
    let n = t.len();
    (0..n).find(|&e| (0..n).all(|x| t[e][x] == x && t[x][e] == x))
}

pub fn is_latin(t: &Table) -> bool {
    let n = t.len();
    let distinct = |xs: Vec<usize>| xs.iter().collect::<BTreeSet<_>>().len() == n;
    (0..n).all(|i| distinct(t[i].clone()) && distinct((0..n).map(|j| t[j][i]).collect()))
}

/// `x` with `x + a = e`.
fn left_inverse(t: &Table, e: usize, a: usize) -> usize {
    (0..t.len()).find(|&x| t[x][a] == e).expect("loop")
}

fn right_inverse(t: &Table, e: usize, a: usize) -> usize {
    (0..t.len()).find(|&y| t[a][y] == e).expect("loop")
}

pub fn bol_witness(t: &Table) -> Option<(usize, usize, usize)> {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            let bab = t[a][t[b][a]];
            for c in 0..n {
                if t[a][t[b][t[a][c]]] != t[bab][c] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_aip(t: &Table) -> bool {
    let n = t.len();
    let e = identity(t).expect("loop");
    let neg: Vec<usize> = (0..n).map(|a| left_inverse(t, e, a)).collect();
    (0..n).all(|a| right_inverse(t, e, a) == neg[a])
        && (0..n).all(|a| (0..n).all(|b| neg[t[a][b]] == t[neg[a]][neg[b]]))
}

pub fn associativity_witness(t: &Table) -> Option<(usize, usize, usize)> {
    let n = t.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

pub fn is_commutative(t: &Table) -> bool {
    (0..t.len()).all(|a| (0..t.len()).all(|b| t[a][b] == t[b][a]))
}

pub fn is_u2d(t: &Table) -> bool {
    (0..t.len()).map(|x| t[x][x]).collect::<BTreeSet<_>>().len() == t.len()
}

/// The unique `y` with `y + y = x`.
pub fn half(t: &Table, x: usize) -> usize {
    let hits: Vec<usize> = (0..t.len()).filter(|&y| t[y][y] == x).collect();
    assert_eq!(hits.len(), 1, "not uniquely 2-divisible at {x}");
    hits[0]
}

/// `0 ∈ c`, closed under `+` and the two-sided inverse.
pub fn is_subloop(t: &Table, c: &[bool]) -> bool {
    let e = identity(t).expect("loop");
    let n = t.len();
    c[e] && (0..n)
        .filter(|&x| c[x])
        .all(|x| c[left_inverse(t, e, x)] && (0..n).filter(|&y| c[y]).all(|y| c[t[x][y]]))
}

/// `s(x,y) = y + (-x + y)`.
pub fn reflection(t: &Table) -> Table {
    let n = t.len();
    let e = identity(t).expect("loop");
    (0..n).map(|x| (0..n).map(|y| t[y][t[left_inverse(t, e, x)][y]]).collect()).collect()
}

/// The midpoint table: the unique `z` with `s(x,z) = y`.
pub fn midpoints(s: &Table) -> Table {
    let n = s.len();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let hits: Vec<usize> = (0..n).filter(|&z| s[x][z] == y).collect();
                    assert_eq!(hits.len(), 1, "midpoint of {x},{y} is not unique");
                    hits[0]
                })
                .collect()
        })
        .collect()
}

pub fn is_convex(s: &Table, y: &[bool]) -> bool {
    let n = s.len();
    (0..n).all(|a| !y[a] || (0..n).all(|b| !y[b] || y[s[a][b]]))
}

pub fn is_midpoint_closed(m: &Table, y: &[bool]) -> bool {
    let n = m.len();
    (0..n).all(|a| !y[a] || (0..n).all(|b| !y[b] || y[m[a][b]]))
}

/// `{x : s_x(Y) = Y}`.
pub fn symmetrizer(s: &Table, y: &[bool]) -> Vec<bool> {
    let n = s.len();
    (0..n)
        .map(|x| {
            let image: BTreeSet<usize> = (0..n).filter(|&a| y[a]).map(|a| s[a][x]).collect();
            image == (0..n).filter(|&a| y[a]).collect()
        })
        .collect()
}

pub fn mask(n: usize, members: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut m = vec![false; n];
    for x in members {
        m[x] = true;
    }
    m
}

/// Size of the group generated by `gens` (all of length `n`), by BFS.
pub fn group(gens: &[Perm], n: usize) -> BTreeSet<Perm> {
    let id: Perm = (0..n).collect();
    let mut seen = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let q: Perm = (0..n).map(|x| g[p[x]]).collect();
            if seen.insert(q.clone()) {
                queue.push_back(q);
            }
        }
    }
    seen
}

/// Left and right translations.
pub fn translations(t: &Table) -> Vec<Perm> {
    let n = t.len();
    let left = (0..n).map(|a| (0..n).map(|x| t[a][x]).collect());
    let right = (0..n).map(|a| (0..n).map(|x| t[x][a]).collect());
    left.chain(right).collect()
}

/// Precession maps `δ_{a,b}(c) = (a+b) \ (a + (b + c))`.
pub fn precessions(t: &Table) -> Vec<Perm> {
    let n = t.len();
    let ldiv = |a: usize, z: usize| (0..n).find(|&y| t[a][y] == z).expect("loop");
    (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .map(|(a, b)| (0..n).map(|c| ldiv(t[a][b], t[a][t[b][c]])).collect())
        .collect()
}
