//! Star-shaped plumbing graphs built from Seifert invariants.
//!
//! The graph is not needed to compute HF+ (the tau function reads the Seifert
//! data directly); it is generated to check negative definiteness, unimodularity
//! and almost-rationality of the inputs.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Result;
use crate::exactmath::hj_expansion;
use crate::seifert::SeifertInvariants;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub weight: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<(usize, usize)>,
    pub center: usize,
}

impl PlumbingGraph {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn degree(&self, id: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(u, v)| u == id || v == id)
            .count()
    }

    /// The arms as weight lists, ordered outward from the center.
    pub fn arms(&self) -> Vec<Vec<i64>> {
        let mut arms = Vec::new();
        for &(u, v) in &self.edges {
            let start = if u == self.center {
                v
            } else if v == self.center {
                u
            } else {
                continue;
            };
            let mut chain = vec![self.vertices[start].weight];
            let (mut prev, mut cur) = (self.center, start);
            while let Some(next) = self.neighbors(cur).into_iter().find(|&w| w != prev) {
                chain.push(self.vertices[next].weight);
                (prev, cur) = (cur, next);
            }
            arms.push(chain);
        }
        arms
    }

    fn neighbors(&self, id: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(u, v)| {
                if u == id {
                    Some(v)
                } else if v == id {
                    Some(u)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Connected with `|E| = |V| - 1`, and every non-central vertex has degree <= 2.
    pub fn is_star_shaped_tree(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 || self.edges.len() != n - 1 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![self.center];
        while let Some(v) = stack.pop() {
            if std::mem::replace(&mut seen[v], true) {
                continue;
            }
            stack.extend(self.neighbors(v));
        }
        seen.iter().all(|&s| s) && (0..n).all(|v| v == self.center || self.degree(v) <= 2)
    }

    pub fn intersection_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.vertices.len();
        let mut m = vec![vec![0i64; n]; n];
        for v in &self.vertices {
            m[v.id][v.id] = v.weight;
        }
        for &(u, v) in &self.edges {
            m[u][v] = 1;
            m[v][u] = 1;
        }
        m
    }

    /// Negative definite iff `(-1)^k D_k > 0` for every leading principal minor.
    pub fn is_negative_definite(&self) -> bool {
        let minors = leading_principal_minors(&self.intersection_matrix());
        minors.len() == self.vertices.len()
            && minors.iter().enumerate().all(|(k, d)| {
                // D_{k+1}: sign must be (-1)^{k+1}
                if k % 2 == 0 {
                    d.is_negative()
                } else {
                    d.is_positive()
                }
            })
    }

    pub fn determinant(&self) -> BigInt {
        determinant(&self.intersection_matrix())
    }

    /// Vertices with `degree > |weight|`.
    pub fn bad_vertices(&self) -> Vec<usize> {
        self.vertices
            .iter()
            .filter(|v| self.degree(v.id) as u64 > v.weight.unsigned_abs())
            .map(|v| v.id)
            .collect()
    }

    pub fn is_almost_rational(&self) -> bool {
        self.bad_vertices().len() <= 1
    }

    /// One line per vertex: `id weight: neighbors`.
    pub fn adjacency_dump(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            let mut nb = self.neighbors(v.id);
            nb.sort_unstable();
            let nb: Vec<String> = nb.iter().map(|x| x.to_string()).collect();
            let center = if v.id == self.center { " (center)" } else { "" };
            let _ = writeln!(out, "{} [{}]{}: {}", v.id, v.weight, center, nb.join(" "));
        }
        out
    }

    /// Undirected DOT rendering with weights as labels.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name.replace('"', "'"));
        for v in &self.vertices {
            let shape = if v.id == self.center {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(
                out,
                "  v{} [label=\"{}\", shape={}];",
                v.id, v.weight, shape
            );
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }
}

/// Star-shaped plumbing: center weighted `e0`, arm `i` carrying the negated
/// Hirzebruch-Jung expansion of `a_i / b_i`, ordered outward.
pub fn star_plumbing(s: &SeifertInvariants) -> Result<PlumbingGraph> {
    let mut vertices = vec![Vertex {
        id: 0,
        weight: s.e0,
    }];
    let mut edges = Vec::new();
    for arm in &s.arms {
        let mut prev = 0;
        for k in hj_expansion(arm.a, arm.b)? {
            let id = vertices.len();
            vertices.push(Vertex { id, weight: -k });
            edges.push((prev, id));
            prev = id;
        }
    }
    Ok(PlumbingGraph {
        vertices,
        edges,
        center: 0,
    })
}

fn to_big(m: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    m.iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = to_big(m);
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Leading principal minors `D_1, D_2, ...` via Bareiss without pivoting.
///
/// The sequence stops early at the first vanishing minor (that minor is
/// included), since elimination cannot continue past a zero pivot.
pub fn leading_principal_minors(m: &[Vec<i64>]) -> Vec<BigInt> {
    let n = m.len();
    let mut a = to_big(m);
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(a[k][k].clone());
        if a[k][k].is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    out
}
