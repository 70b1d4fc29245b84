//! Recognition of the connected components of type A, D and E, which are
//! exactly the simply laced graphs with finitely many fully commutative (and
//! hence freely braided) elements.

use std::fmt;

use serde::Serialize;

use crate::graph::{CoxeterGraph, Letter};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    A,
    D,
    E,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentType {
    pub label: Label,
    /// Vertex count.
    pub n: usize,
    pub vertices: Vec<String>,
}

impl fmt::Display for ComponentType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.label {
            Label::Other => write!(f, "other({})", self.n),
            l => write!(f, "{l:?}({})", self.n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    FcFinite,
    FcInfinite,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub components: Vec<ComponentType>,
    pub verdict: Verdict,
}

/// Connected components, each sorted, ordered by least vertex.
pub fn components(g: &CoxeterGraph) -> Vec<Vec<Letter>> {
    let n = g.rank();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut cursor = 0;
        while cursor < comp.len() {
            let v = comp[cursor];
            cursor += 1;
            for &u in g.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

fn label_component(g: &CoxeterGraph, comp: &[Letter]) -> Label {
    let n = comp.len();
    let edges: usize = comp.iter().map(|&v| g.neighbors(v).len()).sum::<usize>() / 2;
    if edges + 1 != n {
        return Label::Other;
    }
    let branch: Vec<Letter> = comp
        .iter()
        .copied()
        .filter(|&v| g.neighbors(v).len() >= 3)
        .collect();
    match branch.as_slice() {
        [] => Label::A,
        [b] if g.neighbors(*b).len() == 3 => {
            let mut legs: Vec<usize> = g
                .neighbors(*b)
                .iter()
                .map(|&start| leg_length(g, *b, start))
                .collect();
            legs.sort_unstable();
            match legs.as_slice() {
                [1, 1, _] => Label::D,
                [1, 2, _] => Label::E,
                _ => Label::Other,
            }
        }
        _ => Label::Other,
    }
}

/// Number of vertices on the path leaving `from` through `start`.
fn leg_length(g: &CoxeterGraph, from: Letter, start: Letter) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<Letter> = g
            .neighbors(cur)
            .iter()
            .copied()
            .filter(|&u| u != prev)
            .collect();
        match next.as_slice() {
            [u] => {
                prev = cur;
                cur = *u;
                len += 1;
            }
            _ => return len,
        }
    }
}

pub fn classify_graph(g: &CoxeterGraph) -> Classification {
    let components: Vec<ComponentType> = components(g)
        .into_iter()
        .map(|comp| ComponentType {
            label: label_component(g, &comp),
            n: comp.len(),
            vertices: comp.iter().map(|&v| g.name(v).to_string()).collect(),
        })
        .collect();
    let verdict = if components.iter().all(|c| c.label != Label::Other) {
        Verdict::FcFinite
    } else {
        Verdict::FcInfinite
    };
    Classification {
        components,
        verdict,
    }
}
