use std::fmt;

use serde::{Serialize, Serializer};

use super::Quiver;
use crate::error::{Error, Result};

/// Undirected multigraph; `mult[i][j] == mult[j][i]`, diagonal = loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiGraph {
    pub vertices: Vec<String>,
    pub mult: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new(vertices: Vec<String>) -> Self {
        let k = vertices.len();
        MultiGraph {
            vertices,
            mult: vec![vec![0; k]; k],
        }
    }

    /// Adds `m` edges between `i` and `j`.
    pub fn add_edge(&mut self, i: usize, j: usize, m: usize) {
        self.mult[i][j] += m;
        if i != j {
            self.mult[j][i] += m;
        }
    }

    /// Underlying graph of a quiver: orientation forgotten.
    pub fn underlying<V: fmt::Display>(q: &Quiver<V>) -> Self {
        let mut g = MultiGraph::new(q.vertices.iter().map(|v| v.to_string()).collect());
        for (i, row) in q.arrows.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                if m > 0 {
                    g.add_edge(i, j, m);
                }
            }
        }
        g
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn has_loop(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.mult[i][i] > 0)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let k = self.len();
        let mut seen = vec![false; k];
        let mut out = Vec::new();
        for start in 0..k {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in 0..k {
                    if self.mult[v][w] > 0 && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

/// Dynkin and extended Dynkin types; `None` for anything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
    ATilde(usize),
    DTilde(usize),
    E6Tilde,
    E7Tilde,
    E8Tilde,
    None,
}

impl DynkinType {
    pub fn is_dynkin(self) -> bool {
        matches!(
            self,
            DynkinType::A(_) | DynkinType::D(_) | DynkinType::E6 | DynkinType::E7 | DynkinType::E8
        )
    }

    pub fn is_extended(self) -> bool {
        matches!(
            self,
            DynkinType::ATilde(_)
                | DynkinType::DTilde(_)
                | DynkinType::E6Tilde
                | DynkinType::E7Tilde
                | DynkinType::E8Tilde
        )
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(k) => write!(f, "A{k}"),
            DynkinType::D(k) => write!(f, "D{k}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
            DynkinType::ATilde(k) => write!(f, "~A{k}"),
            DynkinType::DTilde(k) => write!(f, "~D{k}"),
            DynkinType::E6Tilde => write!(f, "~E6"),
            DynkinType::E7Tilde => write!(f, "~E7"),
            DynkinType::E8Tilde => write!(f, "~E8"),
            DynkinType::None => write!(f, "none"),
        }
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// One connected component and its type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentClass {
    pub vertices: Vec<String>,
    pub kind: DynkinType,
}

/// Classifies each connected component. Loops are rejected.
pub fn dynkin_classify(g: &MultiGraph) -> Result<Vec<ComponentClass>> {
    if let Some(i) = g.has_loop() {
        return Err(Error::LoopInGraph(i));
    }
    Ok(g.components()
        .into_iter()
        .map(|c| ComponentClass {
            vertices: c.iter().map(|&i| g.vertices[i].clone()).collect(),
            kind: classify_component(g, &c),
        })
        .collect())
}

fn classify_component(g: &MultiGraph, comp: &[usize]) -> DynkinType {
    let v = comp.len();
    if v == 1 {
        return DynkinType::A(1);
    }
    let mut edges = 0;
    let mut multi = false;
    for (a, &i) in comp.iter().enumerate() {
        for &j in &comp[a + 1..] {
            let m = g.mult[i][j];
            if m >= 3 {
                return DynkinType::None;
            }
            multi |= m == 2;
            edges += m;
        }
    }
    if multi {
        return if v == 2 {
            DynkinType::ATilde(1)
        } else {
            DynkinType::None
        };
    }
    let degree = |i: usize| comp.iter().filter(|&&j| g.mult[i][j] > 0).count();
    let degrees: Vec<usize> = comp.iter().map(|&i| degree(i)).collect();
    if edges == v {
        // unicyclic
        return if degrees.iter().all(|&d| d == 2) {
            DynkinType::ATilde(v - 1)
        } else {
            DynkinType::None
        };
    }
    if edges != v - 1 {
        return DynkinType::None;
    }
    let branch: Vec<usize> = comp
        .iter()
        .zip(&degrees)
        .filter(|&(_, &d)| d >= 3)
        .map(|(&i, _)| i)
        .collect();
    match branch.as_slice() {
        [] => DynkinType::A(v),
        [c] => {
            let mut arms = arm_lengths(g, comp, *c);
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, k] => DynkinType::D(k + 3),
                [1, 2, 2] => DynkinType::E6,
                [1, 2, 3] => DynkinType::E7,
                [1, 2, 4] => DynkinType::E8,
                [2, 2, 2] => DynkinType::E6Tilde,
                [1, 3, 3] => DynkinType::E7Tilde,
                [1, 2, 5] => DynkinType::E8Tilde,
                [1, 1, 1, 1] => DynkinType::DTilde(4),
                _ => DynkinType::None,
            }
        }
        [a, b] => {
            // D̃_k: two degree-3 vertices, each carrying two leaves
            let leaves = |c: usize| {
                comp.iter()
                    .filter(|&&j| g.mult[c][j] > 0 && degree(j) == 1)
                    .count()
            };
            if degree(*a) == 3 && degree(*b) == 3 && leaves(*a) == 2 && leaves(*b) == 2 {
                DynkinType::DTilde(v - 1)
            } else {
                DynkinType::None
            }
        }
        _ => DynkinType::None,
    }
}

/// Lengths of the paths hanging off `c`, the only vertex of degree > 2.
fn arm_lengths(g: &MultiGraph, comp: &[usize], c: usize) -> Vec<usize> {
    let mut out = Vec::new();
    for &start in comp.iter().filter(|&&j| g.mult[c][j] > 0) {
        let (mut prev, mut cur, mut len) = (c, start, 1);
        loop {
            let next = comp
                .iter()
                .copied()
                .find(|&j| j != prev && g.mult[cur][j] > 0);
            match next {
                Some(n) => {
                    prev = cur;
                    cur = n;
                    len += 1;
                }
                None => break,
            }
        }
        out.push(len);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(k: usize, edges: &[(usize, usize, usize)]) -> MultiGraph {
        let mut g = MultiGraph::new((0..k).map(|i| i.to_string()).collect());
        for &(a, b, m) in edges {
            g.add_edge(a, b, m);
        }
        g
    }

    fn kind(k: usize, edges: &[(usize, usize, usize)]) -> DynkinType {
        let c = dynkin_classify(&graph(k, edges)).unwrap();
        assert_eq!(c.len(), 1);
        c[0].kind
    }

    fn path(k: usize) -> Vec<(usize, usize, usize)> {
        (1..k).map(|i| (i - 1, i, 1)).collect()
    }

    /// Center 0 with arms of the given lengths.
    fn star(arms: &[usize]) -> (usize, Vec<(usize, usize, usize)>) {
        let mut edges = Vec::new();
        let mut next = 1;
        for &len in arms {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next, 1));
                prev = next;
                next += 1;
            }
        }
        (next, edges)
    }

    #[test]
    fn dynkin_types() {
        assert_eq!(kind(1, &[]), DynkinType::A(1));
        assert_eq!(kind(3, &path(3)), DynkinType::A(3));
        for (arms, want) in [
            (vec![1, 1, 1], DynkinType::D(4)),
            (vec![1, 1, 4], DynkinType::D(7)),
            (vec![1, 2, 2], DynkinType::E6),
            (vec![2, 3, 1], DynkinType::E7),
            (vec![4, 1, 2], DynkinType::E8),
            (vec![2, 2, 2], DynkinType::E6Tilde),
            (vec![1, 3, 3], DynkinType::E7Tilde),
            (vec![1, 2, 5], DynkinType::E8Tilde),
            (vec![1, 1, 1, 1], DynkinType::DTilde(4)),
            (vec![1, 2, 6], DynkinType::None),
            (vec![2, 2, 3], DynkinType::None),
            (vec![1, 1, 1, 2], DynkinType::None),
        ] {
            let (k, e) = star(&arms);
            assert_eq!(kind(k, &e), want, "{arms:?}");
        }
    }

    #[test]
    fn extended_types() {
        assert_eq!(kind(2, &[(0, 1, 2)]), DynkinType::ATilde(1));
        assert_eq!(kind(2, &[(0, 1, 3)]), DynkinType::None);
        assert_eq!(kind(3, &[(0, 1, 2), (1, 2, 1)]), DynkinType::None);
        let mut cyc = path(5);
        cyc.push((4, 0, 1));
        assert_eq!(kind(5, &cyc), DynkinType::ATilde(4));
        cyc.push((0, 2, 1));
        assert_eq!(kind(5, &cyc), DynkinType::None);
        // D̃_6: 2-0-1-...; branch vertices 2 and 4 joined through 3
        let e = [(0, 2, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (4, 6, 1)];
        assert_eq!(kind(7, &e), DynkinType::DTilde(6));
        let e = [(0, 2, 1), (1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 5, 1), (5, 6, 1), (5, 7, 1), (4, 8, 1)];
        assert_eq!(kind(9, &e), DynkinType::None);
    }

    #[test]
    fn components_and_loops() {
        let g = graph(5, &[(0, 1, 1), (3, 4, 2)]);
        let c = dynkin_classify(&g).unwrap();
        let kinds: Vec<_> = c.iter().map(|c| c.kind).collect();
        assert_eq!(kinds, vec![DynkinType::A(2), DynkinType::A(1), DynkinType::ATilde(1)]);
        assert!(matches!(
            dynkin_classify(&graph(2, &[(1, 1, 1)])),
            Err(Error::LoopInGraph(1))
        ));
        assert_eq!(DynkinType::DTilde(5).to_string(), "~D5");
    }
}
