//! Linear symmetries of the ray configuration.
//!
//! A permutation of a spanning vector configuration is induced by a linear
//! map iff it preserves every entry of `Q = Vᵗ (V Vᵗ)⁻¹ V`, so the symmetry
//! group is the automorphism group of the complete graph on the vectors with
//! vertices coloured by `Q(i,i)` and edges by `Q(i,j)`.
//!
//! Permutations compose left to right: `p.then(q)` applies `p` first, and a
//! word `t x s x` means "apply `t`, then `x`, then `s`, then `x`".

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::chamber::{ChamberComplex, Ray, BLOCK_ONE, BLOCK_TWO};
use crate::error::{Error, Result};
use crate::exactmath::{self, Rational, RationalMatrix};

pub trait GroupElement: Clone + Ord {
    /// `self` followed by `other`.
    fn then(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
}

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut i = self.0[start];
            while i != start {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            out.push(cycle);
        }
        out
    }
}

impl GroupElement for Permutation {
    fn then(&self, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Permutation(self.0.iter().map(|&i| other.0[i]).collect())
    }

    fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Permutation(inv)
    }
}

/// A finite group, stored as the full set of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup<T: Ord> {
    elements: BTreeSet<T>,
}

impl<T: GroupElement> PermGroup<T> {
    /// Smallest group containing `generators`, by breadth-first products.
    pub fn generate(identity: T, generators: &[T]) -> Self {
        let mut elements = BTreeSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h = g.then(s);
                if elements.insert(h.clone()) {
                    queue.push_back(h);
                }
            }
        }
        PermGroup { elements }
    }

    pub fn from_elements(elements: impl IntoIterator<Item = T>) -> Self {
        PermGroup {
            elements: elements.into_iter().collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &T) -> bool {
        self.elements.contains(g)
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.elements.iter()
    }

    pub fn elements(&self) -> &BTreeSet<T> {
        &self.elements
    }

    /// Checks the group axioms on the stored set.
    pub fn is_group(&self, identity: &T) -> bool {
        self.contains(identity)
            && self.elements.iter().all(|g| {
                self.contains(&g.inverse())
                    && self.elements.iter().all(|h| self.contains(&g.then(h)))
            })
    }
}

impl<T: Ord> IntoIterator for PermGroup<T> {
    type Item = T;
    type IntoIter = std::collections::btree_set::IntoIter<T>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.into_iter()
    }
}

/// Orbit of `seed` under the group generated by `elements`.
pub fn orbit<'a, T: 'a, E: Ord + Clone>(
    elements: impl IntoIterator<Item = &'a T>,
    seed: E,
    action: impl Fn(&T, &E) -> E,
) -> BTreeSet<E> {
    let elements: Vec<&T> = elements.into_iter().collect();
    let mut seen = BTreeSet::from([seed.clone()]);
    let mut queue = VecDeque::from([seed]);
    while let Some(e) = queue.pop_front() {
        for g in &elements {
            let image = action(g, &e);
            if seen.insert(image.clone()) {
                queue.push_back(image);
            }
        }
    }
    seen
}

/// A permutation of the nine ray labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayPermutation(Permutation);

impl RayPermutation {
    pub fn identity() -> Self {
        RayPermutation(Permutation::identity(Ray::ALL.len()))
    }

    pub fn from_images(images: [Ray; 9]) -> Result<Self> {
        Permutation::new(images.iter().map(|r| r.index()).collect()).map(RayPermutation)
    }

    pub fn from_permutation(p: Permutation) -> Result<Self> {
        if p.len() != Ray::ALL.len() {
            return Err(Error::Parse(format!(
                "permutation of {} points, expected 9",
                p.len()
            )));
        }
        Ok(RayPermutation(p))
    }

    pub fn from_cycles(cycles: &[&[Ray]]) -> Result<Self> {
        let mut images: [Ray; 9] = Ray::ALL;
        let mut touched = [false; 9];
        for cycle in cycles {
            for (k, &r) in cycle.iter().enumerate() {
                if std::mem::replace(&mut touched[r.index()], true) {
                    return Err(Error::Parse(format!("ray {r} appears in two cycles")));
                }
                images[r.index()] = cycle[(k + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn apply(&self, r: Ray) -> Ray {
        Ray::from_index(self.0.apply(r.index()))
    }

    pub fn permutation(&self) -> &Permutation {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn cycles(&self) -> Vec<Vec<Ray>> {
        self.0
            .cycles()
            .into_iter()
            .map(|c| c.into_iter().map(Ray::from_index).collect())
            .collect()
    }

    pub fn cycle_strings(&self) -> Vec<String> {
        self.cycles()
            .iter()
            .map(|c| {
                let labels: Vec<&str> = c.iter().map(|r| r.label()).collect();
                format!("({})", labels.join(","))
            })
            .collect()
    }

    /// Parses cycle notation such as `(d1,d2)(e1,e2)`; `()` or the empty
    /// string is the identity.
    pub fn parse_cycles(s: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<Ray>> = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("bad cycle notation {s:?}")))?;
            let (inside, tail) = body;
            if !inside.trim().is_empty() {
                let cycle = inside
                    .split(',')
                    .map(Ray::from_str)
                    .collect::<Result<Vec<Ray>>>()?;
                cycles.push(cycle);
            }
            rest = tail.trim_start();
        }
        let refs: Vec<&[Ray]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(&refs)
    }
}

impl GroupElement for RayPermutation {
    fn then(&self, other: &Self) -> Self {
        RayPermutation(self.0.then(&other.0))
    }

    fn inverse(&self) -> Self {
        RayPermutation(self.0.inverse())
    }
}

impl fmt::Display for RayPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("()");
        }
        f.write_str(&self.cycle_strings().concat())
    }
}

impl fmt::Debug for RayPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RayPermutation{self}")
    }
}

impl FromStr for RayPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_cycles(s)
    }
}

impl Serialize for RayPermutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.cycle_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RayPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let cycles = Vec::<String>::deserialize(d)?;
        Self::parse_cycles(&cycles.concat()).map_err(serde::de::Error::custom)
    }
}

/// Generator names used for the ray group.
pub mod generators {
    use super::RayPermutation;
    use crate::chamber::Ray::*;

    fn cycles(c: &[&[crate::chamber::Ray]]) -> RayPermutation {
        RayPermutation::from_cycles(c).expect("disjoint cycles")
    }

    /// Induced by exchanging λ and μ.
    pub fn s() -> RayPermutation {
        cycles(&[&[D1, D2], &[E1, E2], &[G1, G2]])
    }

    /// Induced by the complement-in-three-rectangles duality.
    pub fn t() -> RayPermutation {
        cycles(&[&[D1, D2], &[E1, G1], &[E2, G2], &[C, F]])
    }

    /// Induced by the second generator of the S₃ action.
    pub fn u() -> RayPermutation {
        cycles(&[&[D1, G2], &[D2, E2], &[E1, G1]])
    }

    /// Induced by the additional symmetry.
    pub fn x() -> RayPermutation {
        cycles(&[&[E1, G2]])
    }

    pub fn v() -> RayPermutation {
        cycles(&[&[C, F]])
    }

    pub fn y() -> RayPermutation {
        cycles(&[&[E1, D2]])
    }
}

/// Complete graph with exact rational vertex and edge colours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    labels: Vec<String>,
    colors: RationalMatrix,
}

impl ColoredGraph {
    /// Colours vertices and edges by the entries of the projection matrix of
    /// the configuration whose columns are `vectors`.
    pub fn build<V: AsRef<[i64]>>(labels: Vec<String>, vectors: &[V]) -> Result<Self> {
        if labels.len() != vectors.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("{} labels", vectors.len()),
                found: format!("{}", labels.len()),
            });
        }
        let v = RationalMatrix::from_integer_columns(vectors)?;
        let colors = exactmath::projection_matrix(&v)?;
        Ok(ColoredGraph { labels, colors })
    }

    /// Graph with explicitly given colours; `colors` must be symmetric.
    pub fn from_colors(labels: Vec<String>, colors: RationalMatrix) -> Result<Self> {
        if !colors.is_symmetric() || colors.rows() != labels.len() {
            return Err(Error::DimensionMismatch {
                expected: format!("symmetric {0}x{0} colour matrix", labels.len()),
                found: format!("{}x{}", colors.rows(), colors.cols()),
            });
        }
        Ok(ColoredGraph { labels, colors })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vertex_color(&self, i: usize) -> &Rational {
        &self.colors[(i, i)]
    }

    pub fn edge_color(&self, i: usize, j: usize) -> &Rational {
        &self.colors[(i, j)]
    }

    pub fn color_matrix(&self) -> &RationalMatrix {
        &self.colors
    }

    pub fn preserves_colors(&self, p: &Permutation) -> bool {
        let n = self.len();
        p.len() == n
            && (0..n).all(|i| {
                (0..n).all(|j| self.colors[(i, j)] == self.colors[(p.apply(i), p.apply(j))])
            })
    }

    /// Equitable refinement of the vertex colouring: vertices end up in the
    /// same cell only if they have the same colour and the same multiset of
    /// (edge colour, neighbour cell) pairs.
    fn refined_cells(&self) -> Vec<usize> {
        let n = self.len();
        let mut cells = relabel(
            &(0..n)
                .map(|i| self.vertex_color(i).clone())
                .collect::<Vec<_>>(),
        );
        loop {
            let keys: Vec<(usize, Vec<(Rational, usize)>)> = (0..n)
                .map(|i| {
                    let mut nbrs: Vec<(Rational, usize)> = (0..n)
                        .filter(|&j| j != i)
                        .map(|j| (self.edge_color(i, j).clone(), cells[j]))
                        .collect();
                    nbrs.sort();
                    (cells[i], nbrs)
                })
                .collect();
            let next = relabel(&keys);
            let before = cells.iter().collect::<BTreeSet<_>>().len();
            let after = next.iter().collect::<BTreeSet<_>>().len();
            cells = next;
            if after == before {
                return cells;
            }
        }
    }

    /// All colour-preserving vertex bijections.
    pub fn automorphisms(&self) -> Vec<Permutation> {
        let n = self.len();
        let cells = self.refined_cells();
        let mut found = Vec::new();
        let mut images = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend(0, &cells, &mut images, &mut used, &mut found);
        debug_assert!(found.iter().all(|p| self.preserves_colors(p)));
        found
    }

    fn extend(
        &self,
        i: usize,
        cells: &[usize],
        images: &mut [usize],
        used: &mut [bool],
        found: &mut Vec<Permutation>,
    ) {
        let n = self.len();
        if i == n {
            found.push(Permutation(images.to_vec()));
            return;
        }
        for j in 0..n {
            if used[j] || cells[j] != cells[i] {
                continue;
            }
            let consistent = (0..i).all(|k| self.edge_color(i, k) == self.edge_color(j, images[k]));
            if !consistent {
                continue;
            }
            images[i] = j;
            used[j] = true;
            self.extend(i + 1, cells, images, used, found);
            used[j] = false;
        }
        images[i] = usize::MAX;
    }
}

fn relabel<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let sorted: Vec<K> = keys
        .iter()
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

/// The coloured graph on the nine rays, vertices in `Ray::ALL` order.
pub fn ray_graph(complex: &ChamberComplex) -> Result<ColoredGraph> {
    let labels = Ray::ALL.iter().map(|r| r.label().to_string()).collect();
    ColoredGraph::build(labels, complex.ray_vectors())
}

/// The group of linear symmetries of the ray configuration.
pub fn ray_symmetry_group(complex: &ChamberComplex) -> Result<PermGroup<RayPermutation>> {
    let graph = ray_graph(complex)?;
    let elements = graph
        .automorphisms()
        .into_iter()
        .map(RayPermutation::from_permutation)
        .collect::<Result<Vec<_>>>()?;
    Ok(PermGroup::from_elements(elements))
}

/// Permutations fixing `b`, preserving `{c, f}` and preserving or swapping
/// the blocks `{d₁, e₂, g₁}` and `{d₂, e₁, g₂}`, found by scanning all 9!
/// permutations of the labels.
pub fn block_stabilizer() -> BTreeSet<RayPermutation> {
    let preserves = |p: &[usize]| {
        let image = |r: Ray| Ray::from_index(p[r.index()]);
        let maps_into = |from: &[Ray], to: &[Ray]| from.iter().all(|r| to.contains(&image(*r)));
        image(Ray::B) == Ray::B
            && maps_into(&[Ray::C, Ray::F], &[Ray::C, Ray::F])
            && (maps_into(&BLOCK_ONE, &BLOCK_ONE) || maps_into(&BLOCK_ONE, &BLOCK_TWO))
    };
    let mut out = BTreeSet::new();
    let mut p: Vec<usize> = (0..9).collect();
    heap_permutations(&mut p, 9, &mut |perm| {
        if preserves(perm) {
            out.insert(RayPermutation(Permutation(perm.to_vec())));
        }
    });
    out
}

fn heap_permutations(a: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        visit(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permutations(a, k - 1, visit);
        if k.is_multiple_of(2) {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permutations(a, k - 1, visit);
}

/// Applies a word left to right.
pub fn compose_word(word: &[&RayPermutation]) -> RayPermutation {
    word.iter()
        .fold(RayPermutation::identity(), |acc, g| acc.then(g))
}

/// Applies a word right to left (rightmost letter first).
pub fn compose_word_right_to_left(word: &[&RayPermutation]) -> RayPermutation {
    word.iter()
        .rev()
        .fold(RayPermutation::identity(), |acc, g| acc.then(g))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    pub left_to_right: bool,
    pub right_to_left: bool,
}

impl RelationCheck {
    pub fn new(relation: &str, lhs: &RayPermutation, word: &[&RayPermutation]) -> Self {
        RelationCheck {
            relation: relation.to_string(),
            left_to_right: compose_word(word) == *lhs,
            right_to_left: compose_word_right_to_left(word) == *lhs,
        }
    }

    /// Outcome under the crate's left-to-right convention.
    pub fn holds(&self) -> bool {
        self.left_to_right
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationsReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationsReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(RelationCheck::holds)
    }
}

/// Checks `v = t x s x` and `y = u s x s u`.
pub fn verify_relations() -> RelationsReport {
    use generators::*;
    let (s, t, u, x) = (s(), t(), u(), x());
    RelationsReport {
        checks: vec![
            RelationCheck::new("v = t x s x", &v(), &[&t, &x, &s, &x]),
            RelationCheck::new("y = u s x s u", &y(), &[&u, &s, &x, &s, &u]),
        ],
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;
    use crate::chamber::Ray::*;

    fn complex() -> &'static ChamberComplex {
        ChamberComplex::standard()
    }

    #[test]
    fn cycle_notation_round_trip() {
        let p = s();
        assert_eq!(p.to_string(), "(d1,d2)(e1,e2)(g1,g2)");
        assert_eq!(p.to_string().parse::<RayPermutation>().unwrap(), p);
        assert_eq!(
            "()".parse::<RayPermutation>().unwrap(),
            RayPermutation::identity()
        );
        assert!("(e1,e1)".parse::<RayPermutation>().is_err());
        assert!("(e1,z)".parse::<RayPermutation>().is_err());
        assert!("e1,g2".parse::<RayPermutation>().is_err());
        let json = serde_json::to_string(&x()).unwrap();
        assert_eq!(json, r#"["(e1,g2)"]"#);
        assert_eq!(serde_json::from_str::<RayPermutation>(&json).unwrap(), x());
        assert_eq!(
            serde_json::to_string(&RayPermutation::identity()).unwrap(),
            "[]"
        );
    }

    #[test]
    fn composition_is_left_to_right() {
        let a = RayPermutation::from_cycles(&[&[C, F]]).unwrap();
        let b = RayPermutation::from_cycles(&[&[F, D1]]).unwrap();
        // c -> f under a, then f -> d1 under b
        assert_eq!(a.then(&b).apply(C), D1);
        assert_eq!(b.then(&a).apply(C), F);
    }

    #[test]
    fn closure_examples() {
        let id = RayPermutation::identity();
        assert_eq!(
            PermGroup::generate(id.clone(), std::slice::from_ref(&id)).order(),
            1
        );
        assert_eq!(PermGroup::generate(id.clone(), &[s()]).order(), 2);
        let g = PermGroup::generate(id.clone(), &[s(), t(), u(), x()]);
        assert_eq!(g.order(), 144);
        assert!(g.is_group(&id));
    }

    #[test]
    fn ray_graph_colors() {
        let g = ray_graph(complex()).unwrap();
        assert_eq!(g.len(), 9);
        let q = g.color_matrix();
        assert!(q.is_symmetric());
        assert_eq!(q.mul(q).unwrap(), *q);
        assert_eq!(q.rank(), 6);
        // b's vertex colour is unique
        let b = g.vertex_color(0);
        assert!((1..9).all(|i| g.vertex_color(i) != b));
    }

    #[test]
    fn graph_is_functorial_under_relabeling() {
        let vectors = complex().ray_vectors();
        let g = ray_graph(complex()).unwrap();
        let order = [4usize, 0, 8, 2, 6, 1, 3, 7, 5];
        let permuted: Vec<[i64; 6]> = order.iter().map(|&i| vectors[i]).collect();
        let labels = order
            .iter()
            .map(|&i| Ray::from_index(i).label().to_string())
            .collect();
        let h = ColoredGraph::build(labels, &permuted).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                assert_eq!(h.edge_color(a, b), g.edge_color(order[a], order[b]));
            }
        }
    }

    #[test]
    fn duplicated_basis_colors() {
        let mut vectors: Vec<[i64; 6]> = (0..6)
            .map(|i| std::array::from_fn(|j| i64::from(i == j)))
            .collect();
        vectors.extend_from_slice(&[vectors[0], vectors[1], vectors[2]]);
        let labels = (0..9).map(|i| format!("v{i}")).collect();
        let g = ColoredGraph::build(labels, &vectors).unwrap();
        let v = RationalMatrix::from_integer_columns(&vectors).unwrap();
        let vt = v.transpose();
        let expected = vt
            .mul(&exactmath::inverse(&v.mul(&vt).unwrap()).unwrap())
            .unwrap()
            .mul(&v)
            .unwrap();
        assert_eq!(*g.color_matrix(), expected);
        let half = exactmath::ratio(1, 2);
        assert_eq!(*g.vertex_color(0), half);
        assert_eq!(*g.edge_color(0, 6), half);
        assert_eq!(*g.vertex_color(3), exactmath::rational(1));
        assert_eq!(*g.edge_color(0, 1), exactmath::rational(0));
        // swapping a vector with its duplicate, independently for each of three pairs,
        // and permuting the three duplicated pairs and the three singletons
        assert_eq!(g.automorphisms().len(), 8 * 6 * 6);
    }

    #[test]
    fn rank_deficient_configuration() {
        let vectors = [[1i64, 0, 0], [2, 0, 0], [0, 1, 0]];
        let labels = (0..3).map(|i| i.to_string()).collect();
        assert_eq!(
            ColoredGraph::build(labels, &vectors),
            Err(Error::RankDeficient)
        );
    }

    #[test]
    fn rigid_graph_has_trivial_group() {
        let n = 9;
        let mut colors = RationalMatrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                colors[(i, j)] = exactmath::rational(k);
                colors[(j, i)] = exactmath::rational(k);
                k += 1;
            }
        }
        let g = ColoredGraph::from_colors((0..n).map(|i| i.to_string()).collect(), colors).unwrap();
        let auts = g.automorphisms();
        assert_eq!(auts, vec![Permutation::identity(n)]);
    }

    #[test]
    fn ray_group_order_and_members() {
        let group = ray_symmetry_group(complex()).unwrap();
        assert_eq!(group.order(), 144);
        assert!(group.contains(&x()));
        for g in [s(), t(), u(), v(), y()] {
            assert!(group.contains(&g), "{g}");
        }
        assert!(group.is_group(&RayPermutation::identity()));
        let graph = ray_graph(complex()).unwrap();
        assert!(group
            .iter()
            .all(|g| graph.preserves_colors(g.permutation())));
    }

    #[test]
    fn ray_group_is_generated_by_s_t_u_x() {
        let group = ray_symmetry_group(complex()).unwrap();
        let generated = PermGroup::generate(RayPermutation::identity(), &[s(), t(), u(), x()]);
        assert_eq!(group.elements(), generated.elements());
    }

    #[test]
    fn ray_group_equals_block_stabilizer() {
        let group = ray_symmetry_group(complex()).unwrap();
        let stab = block_stabilizer();
        assert_eq!(stab.len(), 144);
        assert_eq!(group.elements(), &stab);
    }

    #[test]
    fn orbits_on_rays() {
        let group = ray_symmetry_group(complex()).unwrap();
        let act = |g: &RayPermutation, r: &Ray| g.apply(*r);
        assert_eq!(orbit(group.iter(), B, act), BTreeSet::from([B]));
        assert_eq!(orbit(group.iter(), C, act), BTreeSet::from([C, F]));
        assert_eq!(
            orbit(group.iter(), D1, act),
            BTreeSet::from([D1, E2, G1, D2, E1, G2])
        );
        let trivial = [RayPermutation::identity()];
        assert_eq!(orbit(trivial.iter(), E1, act), BTreeSet::from([E1]));
    }

    #[test]
    fn relations() {
        let report = verify_relations();
        assert!(report.all_hold(), "{report:?}");
        let (s, t, x) = (s(), t(), x());
        let broken = RelationCheck::new("v = t x s", &v(), &[&t, &x, &s]);
        assert!(!broken.holds());
        assert!(!broken.right_to_left);
    }
}
