//! Brute-force symmetry enumeration, independent of the library's
//! geometric derivation: backtracking over vertex permutations that map
//! edges to edges and non-edges to non-edges, classified by the sign of a
//! hand-computed 3x3 determinant.

#![allow(dead_code)]

use kinesphere::Polyhedron;

pub struct OracleCounts {
    pub all: Vec<Vec<usize>>,
    pub rotations: Vec<Vec<usize>>,
}

fn squared_distance(a: [f64; 3], b: [f64; 3]) -> f64 {
    (0..3).map(|i| (a[i] - b[i]).powi(2)).sum()
}

fn det(a: [f64; 3], b: [f64; 3], c: [f64; 3]) -> f64 {
    a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
}

/// Adjacency matrix from minimal pairwise distance.
pub fn adjacency(coords: &[[f64; 3]]) -> Vec<Vec<bool>> {
    let n = coords.len();
    let mut min = f64::INFINITY;
    for i in 0..n {
        for j in (i + 1)..n {
            min = min.min(squared_distance(coords[i], coords[j]));
        }
    }
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| i != j && (squared_distance(coords[i], coords[j]) - min).abs() < 1e-6)
                .collect()
        })
        .collect()
}

pub fn enumerate(p: &Polyhedron) -> OracleCounts {
    let coords: Vec<[f64; 3]> = p.vertices().iter().map(|v| v.coords).collect();
    let adj = adjacency(&coords);
    let n = coords.len();
    let mut all = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search(0, &adj, &mut image, &mut used, &mut all);

    // A non-coplanar reference triple.
    let mut triple = None;
    'outer: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if det(coords[a], coords[b], coords[c]).abs() > 1e-6 {
                    triple = Some((a, b, c));
                    break 'outer;
                }
            }
        }
    }
    let (a, b, c) = triple.expect("solid spans space");
    let reference = det(coords[a], coords[b], coords[c]);
    let rotations = all
        .iter()
        .filter(|img| det(coords[img[a]], coords[img[b]], coords[img[c]]) * reference > 0.0)
        .cloned()
        .collect();
    OracleCounts { all, rotations }
}

fn search(
    v: usize,
    adj: &[Vec<bool>],
    image: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    let n = adj.len();
    if v == n {
        out.push(image.clone());
        return;
    }
    for candidate in 0..n {
        if used[candidate] {
            continue;
        }
        if (0..v).all(|u| adj[u][v] == adj[image[u]][candidate]) {
            image[v] = candidate;
            used[candidate] = true;
            search(v + 1, adj, image, used, out);
            used[candidate] = false;
        }
    }
    image[v] = usize::MAX;
}
