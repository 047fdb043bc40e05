//! Rooted binary trees with labeled leaves and their descent statistics,
//! an independent model for the γ-polynomial of the braid matroid with its
//! minimal building set.

use crate::families::complete_graph_edges;
use crate::flat::Flat;
use crate::poly::Polynomial;
use std::fmt;

/// Children are ordered by their smallest leaf.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LabeledBinaryTree {
    Leaf(usize),
    Node(Box<LabeledBinaryTree>, Box<LabeledBinaryTree>),
}

use LabeledBinaryTree::{Leaf, Node};

impl LabeledBinaryTree {
    fn join(a: LabeledBinaryTree, b: LabeledBinaryTree) -> LabeledBinaryTree {
        if a.min_leaf() <= b.min_leaf() {
            Node(Box::new(a), Box::new(b))
        } else {
            Node(Box::new(b), Box::new(a))
        }
    }

    pub fn min_leaf(&self) -> usize {
        match self {
            Leaf(x) => *x,
            Node(a, _) => a.min_leaf(),
        }
    }

    pub fn leaves(&self) -> Vec<usize> {
        match self {
            Leaf(x) => vec![*x],
            Node(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v.sort_unstable();
                v
            }
        }
    }

    /// `ℓ(v) = max(min Leaf(v₁), min Leaf(v₂))` for an internal vertex.
    pub fn label(&self) -> Option<usize> {
        match self {
            Leaf(_) => None,
            Node(a, b) => Some(a.min_leaf().max(b.min_leaf())),
        }
    }

    fn is_leaf(&self) -> bool {
        matches!(self, Leaf(_))
    }

    /// Every tree obtained by attaching leaf `k` to an edge, including the
    /// edge above the root.
    fn insertions(&self, k: usize) -> Vec<LabeledBinaryTree> {
        let mut out = vec![LabeledBinaryTree::join(self.clone(), Leaf(k))];
        if let Node(a, b) = self {
            for a2 in a.insertions(k) {
                out.push(LabeledBinaryTree::join(a2, (**b).clone()));
            }
            for b2 in b.insertions(k) {
                out.push(LabeledBinaryTree::join((**a).clone(), b2));
            }
        }
        out
    }

    /// Leaf sets of the internal vertices other than the root.
    pub fn internal_blocks(&self) -> Vec<Vec<usize>> {
        fn rec(t: &LabeledBinaryTree, root: bool, out: &mut Vec<Vec<usize>>) {
            if let Node(a, b) = t {
                if !root {
                    out.push(t.leaves());
                }
                rec(a, false, out);
                rec(b, false, out);
            }
        }
        let mut out = Vec::new();
        rec(self, true, &mut out);
        out
    }

    pub fn stats(&self) -> TreeStats {
        let mut st = TreeStats { des: 0, bottom: 0, double: 0 };
        fn is_descent(v: &LabeledBinaryTree, parent: Option<usize>) -> bool {
            matches!((v.label(), parent), (Some(a), Some(b)) if a > b)
        }
        fn rec(t: &LabeledBinaryTree, parent: Option<usize>, st: &mut TreeStats) {
            let Node(a, b) = t else { return };
            let me = t.label();
            if is_descent(t, parent) {
                st.des += 1;
                let internal: Vec<&LabeledBinaryTree> = [a.as_ref(), b.as_ref()].into_iter().filter(|c| !c.is_leaf()).collect();
                if internal.is_empty() {
                    st.bottom += 1;
                } else if internal.iter().all(|c| is_descent(c, me)) {
                    st.double += 1;
                }
            }
            rec(a, me, st);
            rec(b, me, st);
        }
        rec(self, None, &mut st);
        st
    }
}

impl fmt::Display for LabeledBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Leaf(x) => write!(f, "{x}"),
            Node(a, b) => write!(f, "({a},{b})"),
        }
    }
}

/// Descent data of a tree. Only internal vertices count as children: a
/// bottom descent has two leaves below it, a double descent has at least one
/// internal child and all internal children are descents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TreeStats {
    pub des: usize,
    pub bottom: usize,
    pub double: usize,
}

impl TreeStats {
    pub fn is_stable(&self) -> bool {
        self.bottom == 0 && self.double == 0
    }
}

/// All `(2n−3)!!` trees on leaves `1..=n`.
pub fn all_trees(n: usize) -> Vec<LabeledBinaryTree> {
    assert!(n >= 1);
    let mut cur = vec![Leaf(1)];
    for k in 2..=n {
        cur = cur.iter().flat_map(|t| t.insertions(k)).collect();
    }
    cur.sort();
    cur
}

pub fn stable_trees(n: usize) -> Vec<LabeledBinaryTree> {
    all_trees(n).into_iter().filter(|t| t.stats().is_stable()).collect()
}

/// Number of stable trees with each descent count.
pub fn stable_descent_counts(n: usize) -> Vec<usize> {
    let mut c = Vec::new();
    for t in all_trees(n) {
        let s = t.stats();
        if s.is_stable() {
            if c.len() <= s.des {
                c.resize(s.des + 1, 0);
            }
            c[s.des] += 1;
        }
    }
    c
}

/// `Σ t^des(T)` over the stable trees on `n` leaves.
pub fn m0n_gamma(n: usize) -> Polynomial {
    Polynomial::new(stable_descent_counts(n).into_iter().map(|x| x as i64).collect())
}

/// The flat of the braid matroid spanned by the edges inside a block of
/// leaves, with edges indexed as in [`complete_graph_edges`].
pub fn block_flat(n: usize, block: &[usize]) -> Flat {
    let edges = complete_graph_edges(n);
    Flat::from_elements(
        edges.iter().enumerate().filter(|(_, &(i, j))| block.contains(&(i + 1)) && block.contains(&(j + 1))).map(|(k, _)| k),
    )
}

/// The facet of the nested set complex of the braid matroid given by the
/// non-root internal vertices of `t`.
pub fn tree_to_nested(n: usize, t: &LabeledBinaryTree) -> Vec<Flat> {
    t.internal_blocks().iter().map(|b| block_flat(n, b)).collect()
}
