//! Finite simplicial complexes given by their faces, with f/h-vectors and
//! flagness.

use crate::flat::Flat;
use crate::poly::binomial;
use std::collections::BTreeSet;

/// Faces are sorted vertex-index lists; `vertices` gives the labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    pub vertices: Vec<Flat>,
    pub faces: BTreeSet<Vec<usize>>,
}

impl SimplicialComplex {
    /// Complex generated by the given faces (their subsets are added).
    pub fn generated(vertices: Vec<Flat>, gens: &[Vec<usize>]) -> SimplicialComplex {
        let mut faces = BTreeSet::new();
        for g in gens {
            let mut g = g.clone();
            g.sort_unstable();
            g.dedup();
            for mask in 0u64..1 << g.len() {
                let f: Vec<usize> = (0..g.len()).filter(|i| mask >> i & 1 == 1).map(|i| g[i]).collect();
                faces.insert(f);
            }
        }
        faces.insert(Vec::new());
        SimplicialComplex { vertices, faces }
    }

    /// Uses the given faces verbatim, without closing downward.
    pub fn from_faces(vertices: Vec<Flat>, faces: impl IntoIterator<Item = Vec<usize>>) -> SimplicialComplex {
        let faces = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        SimplicialComplex { vertices, faces }
    }

    /// Faces labeled by their vertices.
    pub fn labeled_faces(&self) -> Vec<Vec<Flat>> {
        self.faces.iter().map(|f| f.iter().map(|&i| self.vertices[i]).collect()).collect()
    }

    pub fn contains_labeled(&self, face: &[Flat]) -> bool {
        let mut idx = Vec::new();
        for f in face {
            match self.vertices.iter().position(|v| v == f) {
                Some(i) => idx.push(i),
                None => return false,
            }
        }
        idx.sort_unstable();
        self.faces.contains(&idx)
    }

    /// Faces missing one of their codimension-one subfaces.
    pub fn downward_violations(&self) -> Vec<Vec<usize>> {
        let mut bad = Vec::new();
        for f in &self.faces {
            for i in 0..f.len() {
                let mut g = f.clone();
                g.remove(i);
                if !self.faces.contains(&g) {
                    bad.push(f.clone());
                    break;
                }
            }
        }
        bad
    }

    pub fn is_downward_closed(&self) -> bool {
        !self.faces.is_empty() && self.downward_violations().is_empty()
    }

    /// Vertices lying in no face.
    pub fn unused_vertices(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|v| !self.faces.iter().any(|f| f.contains(v))).collect()
    }

    pub fn dim(&self) -> isize {
        self.faces.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn facets(&self) -> Vec<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| !self.faces.iter().any(|g| g.len() > f.len() && f.iter().all(|x| g.contains(x))))
            .cloned()
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let facets = self.facets();
        facets.iter().all(|f| f.len() == facets[0].len())
    }

    /// Minimal non-faces all have size 2: every clique of the 1-skeleton is
    /// a face.
    pub fn is_flag(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![vec![false; n]; n];
        for f in self.faces.iter().filter(|f| f.len() == 2) {
            adj[f[0]][f[1]] = true;
            adj[f[1]][f[0]] = true;
        }
        let mut ok = true;
        let mut stack: Vec<usize> = Vec::new();
        fn grow(adj: &[Vec<bool>], faces: &BTreeSet<Vec<usize>>, stack: &mut Vec<usize>, start: usize, ok: &mut bool) {
            if !*ok {
                return;
            }
            if !faces.contains(stack) {
                *ok = false;
                return;
            }
            for v in start..adj.len() {
                if stack.iter().all(|&u| adj[u][v]) {
                    stack.push(v);
                    grow(adj, faces, stack, v + 1, ok);
                    stack.pop();
                }
            }
        }
        grow(&adj, &self.faces, &mut stack, 0, &mut ok);
        ok
    }

    /// `f_k` counts faces with `k` vertices, starting at the empty face.
    pub fn f_vector(&self) -> Vec<u64> {
        let top = self.faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut f = vec![0u64; top + 1];
        for face in &self.faces {
            f[face.len()] += 1;
        }
        f
    }
}

/// f-vector, h-vector, flagness and dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexStats {
    pub f_vector: Vec<u64>,
    pub h_vector: Vec<i64>,
    pub is_flag: bool,
    pub dim: isize,
}

/// `h` from `f` through `Σ f_{i-1} (y-1)^{d-i} = Σ h_i y^{d-i}`, where
/// `f` starts at the empty face and `d = dim + 1`.
pub fn h_from_f(f: &[u64]) -> Vec<i64> {
    let d = f.len() - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                    sign * binomial(d - i, k - i) * f[i] as i64
                })
                .sum()
        })
        .collect()
}

pub fn complex_stats(c: &SimplicialComplex) -> ComplexStats {
    let f = c.f_vector();
    ComplexStats { h_vector: h_from_f(&f), f_vector: f, is_flag: c.is_flag(), dim: c.dim() }
}
