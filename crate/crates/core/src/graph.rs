//! Coxeter graphs, the Coxeter form, the reflection representation and
//! group elements.
//!
//! A simply laced Coxeter group is described by an undirected graph: an edge
//! between `i` and `j` means `m_ij = 3`, a non-edge means `m_ij = 2`. Letters
//! are vertex indices in file order. All arithmetic is over the integers; the
//! only rational quantity is the Coxeter form itself, whose doubled values
//! `2B(α_i, α_j)` are the integers `2`, `0` and `-1`.
//!
//! Words act left-composed: the word `i_1 i_2 … i_n` is the map
//! `v ↦ s_{i_1}(s_{i_2}(… s_{i_n}(v) …))`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A vertex index of a [`CoxeterGraph`].
pub type Letter = usize;

/// A finite sequence of letters. Ordering is lexicographic by letter index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The word with `letter` appended on the right.
    pub fn with_suffix(&self, letter: Letter) -> Word {
        let mut letters = self.0.clone();
        letters.push(letter);
        Word(letters)
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Integer coefficient vector over the simple roots.
///
/// Constructed values are always roots in the sign sense: nonzero with all
/// coefficients of one sign.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Result<Root> {
        let positive = coeffs.iter().all(|&c| c >= 0);
        let negative = coeffs.iter().all(|&c| c <= 0);
        let zero = coeffs.iter().all(|&c| c == 0);
        if zero || !(positive || negative) {
            return Err(Error::NotARoot(coeffs));
        }
        Ok(Root { coeffs })
    }

    pub(crate) fn from_coeffs_unchecked(coeffs: Vec<i64>) -> Root {
        debug_assert!(Root::new(coeffs.clone()).is_ok(), "not a root: {coeffs:?}");
        Root { coeffs }
    }

    pub fn simple(rank: usize, i: Letter) -> Root {
        let mut coeffs = vec![0; rank];
        coeffs[i] = 1;
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn is_negative(&self) -> bool {
        self.coeffs.iter().all(|&c| c <= 0)
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// The simple root index, if this is a simple root.
    pub fn simple_index(&self) -> Option<Letter> {
        let mut found = None;
        for (i, &c) in self.coeffs.iter().enumerate() {
            match c {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Coordinatewise sum; `None` when the result is not a root vector.
    pub fn checked_add(&self, other: &Root) -> Option<Root> {
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Root::new(coeffs).ok()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.coeffs)
    }
}

/// Sum of the coefficients of `r`.
pub fn height(r: &Root) -> i64 {
    r.height()
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GraphDocument {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// Undirected simple graph encoding a simply laced Coxeter matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    names: Vec<String>,
    adjacency: Vec<Vec<bool>>,
    neighbors: Vec<Vec<Letter>>,
}

impl CoxeterGraph {
    /// Builds a graph from vertex names and name pairs. Repeated edges are
    /// merged.
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<CoxeterGraph> {
        let mut index = HashMap::new();
        let mut names = Vec::with_capacity(vertices.len());
        for v in vertices {
            let v = v.as_ref();
            if index.insert(v.to_string(), names.len()).is_some() {
                return Err(Error::DuplicateVertex(v.to_string()));
            }
            names.push(v.to_string());
        }
        let mut pairs = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let ia = *index
                .get(a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::SelfLoop(a.to_string()));
            }
            pairs.push((ia, ib));
        }
        Ok(CoxeterGraph::from_index_edges(names, &pairs))
    }

    fn from_index_edges(names: Vec<String>, pairs: &[(Letter, Letter)]) -> CoxeterGraph {
        let n = names.len();
        let mut adjacency = vec![vec![false; n]; n];
        for &(a, b) in pairs {
            adjacency[a][b] = true;
            adjacency[b][a] = true;
        }
        let neighbors = (0..n)
            .map(|i| (0..n).filter(|&j| adjacency[i][j]).collect())
            .collect();
        CoxeterGraph {
            names,
            adjacency,
            neighbors,
        }
    }

    fn numbered(n: usize, pairs: &[(Letter, Letter)]) -> CoxeterGraph {
        let names = (1..=n).map(|i| i.to_string()).collect();
        CoxeterGraph::from_index_edges(names, pairs)
    }

    /// Path on `n` vertices named `1..=n`.
    pub fn type_a(n: usize) -> CoxeterGraph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        CoxeterGraph::numbered(n, &pairs)
    }

    /// Path `1 - … - (n-1)` with vertex `n` attached to `n-2`. Requires `n >= 4`.
    pub fn type_d(n: usize) -> CoxeterGraph {
        assert!(n >= 4, "type D needs at least 4 vertices");
        let mut pairs: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        pairs.push((n - 3, n - 1));
        CoxeterGraph::numbered(n, &pairs)
    }

    /// Path `1 - … - (n-1)` with vertex `n` attached to vertex `3`. Requires `n >= 6`.
    pub fn type_e(n: usize) -> CoxeterGraph {
        assert!(n >= 6, "type E needs at least 6 vertices");
        let mut pairs: Vec<_> = (1..n - 1).map(|i| (i - 1, i)).collect();
        pairs.push((2, n - 1));
        CoxeterGraph::numbered(n, &pairs)
    }

    /// Cycle on `n >= 3` vertices (affine type A). `cycle(3)` is the triangle.
    pub fn cycle(n: usize) -> CoxeterGraph {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let pairs: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        CoxeterGraph::numbered(n, &pairs)
    }

    /// Number of vertices.
    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: Letter) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<Letter> {
        self.names.iter().position(|n| n == name)
    }

    pub fn neighbors(&self, i: Letter) -> &[Letter] {
        &self.neighbors[i]
    }

    pub fn is_edge(&self, i: Letter, j: Letter) -> bool {
        self.adjacency[i][j]
    }

    /// Edges as index pairs `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(Letter, Letter)> {
        let n = self.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.adjacency[i][j] {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Coxeter matrix entry `m_ij`.
    pub fn m(&self, i: Letter, j: Letter) -> u8 {
        if i == j {
            1
        } else if self.adjacency[i][j] {
            3
        } else {
            2
        }
    }

    /// Letters `i != j` with `m_ij = 2`.
    pub fn commute(&self, i: Letter, j: Letter) -> bool {
        i != j && !self.adjacency[i][j]
    }

    pub fn coxeter_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.m(i, j)).collect())
            .collect()
    }

    pub fn check_letter(&self, i: Letter) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::UnknownLetter(i))
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        w.letters().iter().try_for_each(|&i| self.check_letter(i))
    }

    fn check_root(&self, r: &Root) -> Result<()> {
        if r.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: r.rank(),
            })
        }
    }

    /// `B(α_i, α_j) = -cos(π / m_ij)`: `1`, `0` or `-1/2`.
    pub fn coxeter_form(&self, i: Letter, j: Letter) -> Result<Ratio<i64>> {
        self.check_letter(i)?;
        self.check_letter(j)?;
        Ok(Ratio::new(self.twice_form_simple(i, j), 2))
    }

    fn twice_form_simple(&self, i: Letter, j: Letter) -> i64 {
        match self.m(i, j) {
            1 => 2,
            2 => 0,
            _ => -1,
        }
    }

    /// `2B(u, v)` for arbitrary coefficient vectors.
    pub fn twice_form(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut acc = 0;
        for i in 0..self.rank() {
            if u[i] == 0 {
                continue;
            }
            let mut row = 2 * v[i];
            for &j in &self.neighbors[i] {
                row -= v[j];
            }
            acc += u[i] * row;
        }
        acc
    }

    /// The Coxeter form extended bilinearly to roots.
    pub fn form_value(&self, r: &Root, s: &Root) -> Result<Ratio<i64>> {
        self.check_root(r)?;
        self.check_root(s)?;
        Ok(Ratio::new(self.twice_form(r.coeffs(), s.coeffs()), 2))
    }

    pub fn orthogonal(&self, r: &Root, s: &Root) -> bool {
        self.twice_form(r.coeffs(), s.coeffs()) == 0
    }

    /// `s_i(v) = v - 2B(v, α_i) α_i`, in place. Only coordinate `i` changes.
    pub(crate) fn reflect_in_place(&self, i: Letter, v: &mut [i64]) {
        let mut new = -v[i];
        for &j in &self.neighbors[i] {
            new += v[j];
        }
        v[i] = new;
    }

    pub fn reflect(&self, i: Letter, r: &Root) -> Result<Root> {
        self.check_letter(i)?;
        self.check_root(r)?;
        let mut coeffs = r.coeffs().to_vec();
        self.reflect_in_place(i, &mut coeffs);
        Root::new(coeffs)
    }

    pub fn simple_root(&self, i: Letter) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::identity(self.rank())
    }

    /// The element represented by `w`; its length is found by greedy descent.
    pub fn element_of(&self, w: &Word) -> Result<GroupElement> {
        self.check_word(w)?;
        let mut element = self.identity();
        for &i in w.letters() {
            element.right_multiply_in_place(self, i);
        }
        element.length = element.descent_word(self).len();
        Ok(element)
    }

    /// Parses a comma-separated list of vertex names.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Word::empty());
        }
        text.split(',')
            .map(|part| {
                let part = part.trim();
                self.index_of(part)
                    .ok_or_else(|| Error::UnknownVertex(part.to_string()))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn word_names(&self, w: &Word) -> Vec<String> {
        w.letters().iter().map(|&i| self.names[i].clone()).collect()
    }

    pub fn to_json(&self) -> String {
        let doc = GraphDocument {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(a, b)| (self.names[a].clone(), self.names[b].clone()))
                .collect(),
        };
        serde_json::to_string(&doc).expect("graph document serializes")
    }
}

/// Parses the JSON graph format `{"vertices": [...], "edges": [[a, b], ...]}`.
pub fn parse_graph(text: &str) -> Result<CoxeterGraph> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
    CoxeterGraph::new(&doc.vertices, &doc.edges)
}

/// An element of the Coxeter group, stored as the integer matrix of its
/// action on the simple-root basis. Column `j` holds `w(α_j)`.
///
/// Equality and hashing use the matrix only. The ordering is by length and
/// then lexicographically by the row-major matrix entries.
#[derive(Clone, Debug)]
pub struct GroupElement {
    rank: usize,
    matrix: Vec<i64>,
    length: usize,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.length
            .cmp(&other.length)
            .then_with(|| self.matrix.cmp(&other.matrix))
    }
}

impl GroupElement {
    pub fn identity(rank: usize) -> GroupElement {
        let mut matrix = vec![0; rank * rank];
        for i in 0..rank {
            matrix[i * rank + i] = 1;
        }
        GroupElement {
            rank,
            matrix,
            length: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn length(&self) -> usize {
        self.length
    }

    /// Row-major matrix entries.
    pub fn matrix(&self) -> &[i64] {
        &self.matrix
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        if self.rank == 0 {
            return Vec::new();
        }
        self.matrix.chunks(self.rank).map(|r| r.to_vec()).collect()
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.matrix[row * self.rank + col]
    }

    pub fn column(&self, j: Letter) -> Vec<i64> {
        (0..self.rank).map(|r| self.entry(r, j)).collect()
    }

    /// Applies the element to a coefficient vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|r| {
                self.matrix[r * self.rank..(r + 1) * self.rank]
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    pub fn apply_root(&self, r: &Root) -> Root {
        Root::from_coeffs_unchecked(self.apply(r.coeffs()))
    }

    /// True iff `w(α_i)` is negative, i.e. `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, i: Letter) -> bool {
        (0..self.rank)
            .map(|r| self.entry(r, i))
            .find(|&c| c != 0)
            .is_some_and(|c| c < 0)
    }

    /// `M ← M S_i`: column `i` is negated and `col_i` is added to every
    /// neighbour column.
    fn right_multiply_in_place(&mut self, g: &CoxeterGraph, i: Letter) {
        let n = self.rank;
        for r in 0..n {
            let ci = self.matrix[r * n + i];
            if ci == 0 {
                continue;
            }
            self.matrix[r * n + i] = -ci;
            for &j in g.neighbors(i) {
                self.matrix[r * n + j] += ci;
            }
        }
    }

    /// `w s_i`.
    pub fn times_generator(&self, g: &CoxeterGraph, i: Letter) -> GroupElement {
        let descent = self.is_right_descent(i);
        let mut out = self.clone();
        out.right_multiply_in_place(g, i);
        out.length = if descent {
            self.length - 1
        } else {
            self.length + 1
        };
        out
    }

    /// Letters removed by greedy descent (smallest descent first), in removal
    /// order. Reversed, they spell a reduced word.
    fn descent_word(&self, g: &CoxeterGraph) -> Vec<Letter> {
        let mut current = self.clone();
        let mut removed = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| current.is_right_descent(i)) {
            current.right_multiply_in_place(g, i);
            removed.push(i);
        }
        removed
    }

    /// A reduced word for the element, obtained by greedy descent.
    pub fn reduced_word(&self, g: &CoxeterGraph) -> Word {
        let mut letters = self.descent_word(g);
        letters.reverse();
        Word(letters)
    }

    /// Right descents `{ i : ℓ(w s_i) < ℓ(w) }`.
    pub fn right_descents(&self) -> Vec<Letter> {
        (0..self.rank)
            .filter(|&i| self.is_right_descent(i))
            .collect()
    }

    /// Checks `Mᵀ (2B) M = 2B`.
    pub fn preserves_form(&self, g: &CoxeterGraph) -> bool {
        let n = self.rank;
        let cols: Vec<Vec<i64>> = (0..n).map(|j| self.column(j)).collect();
        (0..n)
            .all(|a| (0..n).all(|b| g.twice_form(&cols[a], &cols[b]) == g.twice_form_simple(a, b)))
    }
}

/// All elements of length at most `max_len`, layered by length. Each layer
/// is sorted in the canonical element order. Empty layers past the longest
/// element are kept so the result always has `max_len + 1` layers.
pub fn enumerate_elements(
    g: &CoxeterGraph,
    max_len: usize,
    budget: usize,
) -> Result<Vec<Vec<GroupElement>>> {
    let mut layers = vec![vec![g.identity()]];
    let mut total = 1;
    if total > budget {
        return Err(Error::BudgetExceeded { budget });
    }
    for _ in 0..max_len {
        let previous = layers.last().expect("at least one layer");
        let mut seen = HashSet::new();
        for w in previous {
            for i in 0..g.rank() {
                if !w.is_right_descent(i) {
                    seen.insert(w.times_generator(g, i));
                }
            }
        }
        total += seen.len();
        if total > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let mut layer: Vec<_> = seen.into_iter().collect();
        layer.sort();
        layers.push(layer);
    }
    Ok(layers)
}
