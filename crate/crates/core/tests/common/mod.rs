//! Brute-force oracles written straight from the definitions. They share nothing with the
//! library beyond the `Face`, `Graph` and `SimplicialComplex` containers.

#![allow(dead_code)]

use std::collections::HashSet;

use shiftcx::{Face, Graph, SimplicialComplex};

pub fn subsets(n: usize) -> impl Iterator<Item = Face> {
    (0u32..1 << n).map(Face::from_mask)
}

/// Every face, by closing the facets downward one vertex at a time.
pub fn face_set(k: &SimplicialComplex) -> HashSet<u32> {
    let mut seen = HashSet::new();
    let mut stack: Vec<u32> = k.facets().iter().map(|f| f.mask()).collect();
    while let Some(m) = stack.pop() {
        if seen.insert(m) {
            for b in 0..32 {
                if m >> b & 1 == 1 {
                    stack.push(m & !(1 << b));
                }
            }
        }
    }
    seen
}

/// Swapping a member for any vertex of smaller rank stays inside the complex.
pub fn shifted_literal(k: &SimplicialComplex, rank: &[usize]) -> bool {
    let faces = face_set(k);
    let n = k.n();
    faces.iter().all(|&f| {
        (1..=n).filter(|&v| f >> (v - 1) & 1 == 1).all(|v| {
            (1..=n)
                .filter(|&w| f >> (w - 1) & 1 == 0 && rank[w - 1] < rank[v - 1])
                .all(|w| faces.contains(&(f & !(1 << (v - 1)) | 1 << (w - 1))))
        })
    })
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for v in 1..=n {
            if !prefix.contains(&v) {
                prefix.push(v);
                go(prefix, n, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), n, &mut out);
    out
}

pub fn shiftable_brute(k: &SimplicialComplex) -> bool {
    permutations(k.n()).iter().any(|r| shifted_literal(k, r))
}

/// `x <= y` after writing both as ascending lists left-padded with zeros to a common length.
pub fn padded_le(x: Face, y: Face, n: usize) -> bool {
    let pad = |f: Face| {
        let mut v = vec![0usize; n];
        let members: Vec<usize> = (1..=n).filter(|&i| f.contains(i)).collect();
        v[n - members.len()..].copy_from_slice(&members);
        v
    };
    pad(x).iter().zip(pad(y)).all(|(a, b)| *a <= b)
}

pub fn order_ideal_literal(k: &SimplicialComplex) -> bool {
    let faces = face_set(k);
    let n = k.n();
    faces
        .iter()
        .all(|&y| subsets(n).filter(|&x| padded_le(x, Face::from_mask(y), n)).all(|x| faces.contains(&x.mask())))
}

/// Complex generated by the given faces (non-maximal ones are allowed).
pub fn complex_from(faces: impl IntoIterator<Item = Face>, n: usize) -> SimplicialComplex {
    SimplicialComplex::from_facets(faces, n).unwrap()
}

/// Complex whose faces are exactly the subsets of `1..=n` satisfying `keep` (assumed closed
/// downward). Void when nothing qualifies.
pub fn complex_where(n: usize, keep: impl Fn(Face) -> bool) -> SimplicialComplex {
    let faces: Vec<Face> = subsets(n).filter(|&f| keep(f)).collect();
    if faces.is_empty() {
        SimplicialComplex::void(n)
    } else {
        complex_from(faces, n)
    }
}

pub fn independent(g: &Graph, s: Face) -> bool {
    let vs = s.to_vec();
    vs.iter().all(|&a| vs.iter().all(|&b| !g.has_edge(a, b)))
}

pub fn dominating(g: &Graph, s: Face) -> bool {
    (1..=g.n()).all(|v| s.contains(v) || s.iter().any(|u| g.has_edge(u, v)))
}

/// Contains an induced P4, C4 or 2K2 (the forbidden subgraphs of threshold graphs).
pub fn has_forbidden_induced(g: &Graph) -> bool {
    let n = g.n();
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                for d in c + 1..=n {
                    let q = [a, b, c, d];
                    let mut degs = [0usize; 4];
                    let mut edges = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if g.has_edge(q[i], q[j]) {
                                degs[i] += 1;
                                degs[j] += 1;
                                edges += 1;
                            }
                        }
                    }
                    degs.sort();
                    let p4 = edges == 3 && degs == [1, 1, 2, 2];
                    let c4 = edges == 4 && degs == [2, 2, 2, 2];
                    let two_k2 = edges == 2 && degs == [1, 1, 1, 1];
                    if p4 || c4 || two_k2 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Number of monotone boolean functions on `n` variables, from the pairs `f0 <= f1` of
/// monotone functions on `n - 1` variables, starting from a brute-force list on 4 variables.
pub fn dedekind(n: usize) -> u64 {
    assert!(n <= 5);
    let base = n.min(4);
    let points = 1usize << base;
    let monotone: Vec<u32> = (0u64..1 << points)
        .map(|t| t as u32)
        .filter(|&t| {
            (0..points).all(|x| (0..points).all(|y| x & y != x || t >> x & 1 <= t >> y & 1))
        })
        .collect();
    if n == base {
        return monotone.len() as u64;
    }
    let mut pairs = 0;
    for &f0 in &monotone {
        for &f1 in &monotone {
            if f0 & !f1 == 0 {
                pairs += 1;
            }
        }
    }
    pairs
}

pub fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}
