//! Labeled triangulated polygons `Sigma_w`, the dual triangulation, the arc
//! `gamma_w`, skein resolutions `Res(w)` and dual resolutions (slides).
//!
//! Vertices are numbered clockwise from the start `a` of `gamma_w`, which is
//! vertex 0. Triangles are stored with clockwise vertex triples, and the
//! label at slot `k` names the edge from `verts[k]` to `verts[k + 1]`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::cluster_engine::LaurentPolynomial;
use crate::core::{Letter, Word};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TriangulationError {
    #[error("curve {curve} has no crossing at index {index}")]
    InvalidCrossing { curve: usize, index: usize },
    #[error("diagonal {0} is not present in the diagram")]
    MissingDiagonal(usize),
}

/// A triangle with clockwise vertices and the labels of its three sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub verts: [usize; 3],
    pub labels: [usize; 3],
}

impl Triangle {
    /// Label of the side opposite vertex `v`.
    pub fn opposite_label(&self, v: usize) -> Option<usize> {
        let k = self.verts.iter().position(|&x| x == v)?;
        Some(self.labels[(k + 1) % 3])
    }

    pub fn has_label(&self, l: usize) -> bool {
        self.labels.contains(&l)
    }
}

/// Triangulated `(n+3)`-gon with diagonals `1..=n` and boundary labels
/// `n+1..=2n+3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTriangulation {
    size: usize,
    n: usize,
    triangles: Vec<Triangle>,
    ends: Vec<(usize, usize)>,
    endpoints: (usize, usize),
}

/// Label triples `Delta_0..Delta_n` of `Delta_w`, each listed clockwise.
pub fn triangle_labels(w: &Word) -> Vec<[usize; 3]> {
    let n = w.len() + 1;
    let mut out = vec![[2 * n + 1, 1, 2 * n]];
    for (k, l) in w.letters().iter().enumerate() {
        let i = k + 1;
        if i == n {
            break;
        }
        out.push(match l {
            Letter::A => [i, n + i, i + 1],
            Letter::B => [i, i + 1, n + i],
        });
    }
    let len = w.len();
    let ends_doubled = len >= 2 && w.letters()[len - 1] == w.letters()[len - 2];
    if len % 2 == 1 || len == 0 || ends_doubled {
        out.push([n, 2 * n + 2, 2 * n + 3]);
    } else {
        out.push([n, 2 * n + 3, 2 * n + 2]);
    }
    out
}

impl LabeledTriangulation {
    /// `Delta_w`, glued triangle by triangle along the diagonals.
    pub fn from_word(w: &Word) -> Self {
        Self::from_triangle_labels(&triangle_labels(w))
    }

    /// Glue `Delta_i` to `Delta_{i-1}` along label `i` for a list of
    /// clockwise label triples whose first entry (from `Delta_1` on) is the
    /// shared diagonal.
    pub fn from_triangle_labels(tris: &[[usize; 3]]) -> Self {
        let n = tris.len() - 1;
        let size = n + 3;
        // boundary as (label, from, to) with provisional vertex ids
        let t0 = tris[0];
        let mut boundary: Vec<(usize, usize, usize)> = vec![(t0[0], 0, 1), (t0[1], 1, 2), (t0[2], 2, 0)];
        let mut triangles = vec![Triangle { verts: [0, 1, 2], labels: t0 }];
        for (i, t) in tris.iter().enumerate().skip(1) {
            assert_eq!(t[0], i, "triangle {i} must start with its diagonal");
            let pos = boundary.iter().position(|e| e.0 == i).expect("diagonal on the boundary");
            let (_, u, v) = boundary[pos];
            let nv = i + 2;
            boundary.splice(pos..=pos, [(t[1], u, nv), (t[2], nv, v)]);
            triangles.push(Triangle { verts: [v, u, nv], labels: *t });
        }
        let start = boundary.iter().position(|e| e.0 == t0[0]).unwrap();
        boundary.rotate_left(start);
        let mut pos_of = vec![0usize; size];
        for (k, e) in boundary.iter().enumerate() {
            pos_of[e.1] = k;
        }
        for t in &mut triangles {
            t.verts = t.verts.map(|v| pos_of[v]);
        }
        let mut ends = vec![(0, 0); 2 * n + 4];
        for t in &triangles {
            for k in 0..3 {
                let (x, y) = (t.verts[k], t.verts[(k + 1) % 3]);
                ends[t.labels[k]] = (x.min(y), x.max(y));
            }
        }
        let a = 0;
        let b = {
            let last = triangles[n];
            *last.verts.iter().find(|&&v| {
                let (x, y) = ends[n];
                v != x && v != y
            }).unwrap()
        };
        LabeledTriangulation { size, n, triangles, ends, endpoints: (a, b) }
    }

    pub fn polygon_size(&self) -> usize {
        self.size
    }

    pub fn num_diagonals(&self) -> usize {
        self.n
    }

    pub fn num_labels(&self) -> usize {
        2 * self.n + 3
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    /// Endpoints `(a, b)` of the arc `gamma`.
    pub fn endpoints(&self) -> (usize, usize) {
        self.endpoints
    }

    /// Sorted endpoints of the edge with the given label.
    pub fn ends(&self, label: usize) -> (usize, usize) {
        self.ends[label]
    }

    pub fn is_diagonal(&self, label: usize) -> bool {
        (1..=self.n).contains(&label)
    }

    /// Label of the edge between `a` and `b`, if it is an edge.
    pub fn label_of(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        (1..=self.num_labels()).find(|&l| self.ends[l] == key)
    }

    /// All edges as `(lo, hi, label)` sorted by label.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        (1..=self.num_labels()).map(|l| (self.ends[l].0, self.ends[l].1, l)).collect()
    }

    /// True when some vertex lies on every diagonal.
    pub fn is_fan(&self) -> bool {
        self.fan_vertex().is_some()
    }

    /// A vertex common to all diagonals.
    pub fn fan_vertex(&self) -> Option<usize> {
        (0..self.size).find(|&v| (1..=self.n).all(|l| self.ends[l].0 == v || self.ends[l].1 == v))
    }

    /// True when no three diagonals share an endpoint.
    pub fn is_zigzag(&self) -> bool {
        (0..self.size).all(|v| (1..=self.n).filter(|&l| self.ends[l].0 == v || self.ends[l].1 == v).count() < 3)
    }

    /// Whether vertex `v` lies clockwise strictly between `a` and `b`
    /// (the side to the left of `gamma` traversed from `a` to `b`).
    pub fn on_first_side(&self, v: usize) -> bool {
        let (a, b) = self.endpoints;
        a < v && v < b
    }

    /// Diagonals crossed by the chord `(s, t)`, ordered from `s`.
    pub fn crossings(&self, s: usize, t: usize) -> Vec<usize> {
        let mut crossed: Vec<(usize, usize)> = (1..=self.n)
            .filter(|&l| chords_cross(self.size, (s, t), self.ends[l]))
            .map(|l| (self.vertices_on_side(self.ends[l], s), l))
            .collect();
        crossed.sort_unstable();
        crossed.into_iter().map(|(_, l)| l).collect()
    }

    fn vertices_on_side(&self, (u, v): (usize, usize), s: usize) -> usize {
        // number of polygon vertices strictly on the side of (u, v) containing s
        let inside = v - u - 1;
        if u < s && s < v {
            inside
        } else {
            self.size - 2 - inside
        }
    }

    /// Side `(p, q)` of the triangle at `a` that the chord `(a, b)` crosses first.
    pub fn opposite_side_crossing(&self, a: usize, b: usize) -> Option<(usize, usize)> {
        for t in &self.triangles {
            if let Some(k) = t.verts.iter().position(|&x| x == a) {
                let p = t.verts[(k + 1) % 3];
                let q = t.verts[(k + 2) % 3];
                if chords_cross(self.size, (a, b), (p, q)) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    /// Triangle map: every odd-indexed triangle reversed, labels kept.
    pub fn dual(&self) -> LabeledTriangulation {
        let mut labels: Vec<[usize; 3]> = self.triangles.iter().map(|t| t.labels).collect();
        // put the shared diagonal first, as the gluing expects
        for (i, l) in labels.iter_mut().enumerate().skip(1) {
            let k = l.iter().position(|&x| x == i).unwrap();
            l.rotate_left(k);
            if i % 2 == 1 {
                l.swap(1, 2);
            }
        }
        LabeledTriangulation::from_triangle_labels(&labels)
    }

    /// JSON `{size, triangles:[{verts, edge_labels}], diagonals:[...]}`.
    pub fn to_json(&self) -> Value {
        let triangles: Vec<Value> = self
            .triangles
            .iter()
            .map(|t| json!({"verts": t.verts, "edge_labels": t.labels}))
            .collect();
        let diagonals: Vec<Value> = (1..=self.n).map(|l| json!({"label": l, "ends": [self.ends[l].0, self.ends[l].1]})).collect();
        let boundary: Vec<Value> =
            (self.n + 1..=self.num_labels()).map(|l| json!({"label": l, "ends": [self.ends[l].0, self.ends[l].1]})).collect();
        json!({
            "size": self.size,
            "gamma": [self.endpoints.0, self.endpoints.1],
            "triangles": triangles,
            "diagonals": diagonals,
            "boundary": boundary,
        })
    }
}

/// Free-function form of [`LabeledTriangulation::from_word`].
pub fn triangulation_from_word(w: &Word) -> LabeledTriangulation {
    LabeledTriangulation::from_word(w)
}

/// Free-function form of [`LabeledTriangulation::dual`].
pub fn dual_triangulation(t: &LabeledTriangulation) -> LabeledTriangulation {
    t.dual()
}

/// Whether chords `(a, b)` and `(c, d)` of a convex `size`-gon cross in
/// their interiors.
pub fn chords_cross(size: usize, (a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    let _ = size;
    let (a, b) = (a.min(b), a.max(b));
    if c == a || c == b || d == a || d == b {
        return false;
    }
    let inside = |x: usize| a < x && x < b;
    inside(c) != inside(d)
}

/// An open curve from `start` to `end` with the diagonals it still crosses.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Curve {
    pub start: usize,
    pub end: usize,
    pub crossings: Vec<usize>,
}

/// A multiset of curves in `Sigma_w`; closed components are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveDiagram {
    pub curves: Vec<Curve>,
    pub loops: usize,
}

impl CurveDiagram {
    /// True when no curve crosses a remaining diagonal.
    pub fn is_resolved(&self) -> bool {
        self.curves.iter().all(|c| c.crossings.is_empty())
    }

    /// Edge labels of the resolved curves, sorted, or `None` if a loop occurred.
    pub fn edge_labels(&self, t: &LabeledTriangulation) -> Option<Vec<usize>> {
        if self.loops > 0 {
            return None;
        }
        let mut out: Vec<usize> = self
            .curves
            .iter()
            .map(|c| t.label_of(c.start, c.end).expect("resolved curve is an edge"))
            .collect();
        out.sort_unstable();
        Some(out)
    }

    /// Product of edge variables, zero if there is a loop.
    pub fn weight(&self, t: &LabeledTriangulation) -> LaurentPolynomial {
        let nv = t.num_labels();
        match self.edge_labels(t) {
            None => LaurentPolynomial::zero(nv),
            Some(ls) => {
                let mut e = vec![0; nv];
                for l in ls {
                    e[l - 1] += 1;
                }
                LaurentPolynomial::monomial(e, BigInt::one())
            }
        }
    }

    /// First crossing in the diagram, as `(curve, index)`.
    pub fn first_crossing(&self) -> Option<(usize, usize)> {
        self.curves.iter().position(|c| !c.crossings.is_empty()).map(|i| (i, 0))
    }

    /// Location of the crossing with diagonal `d`, if any curve crosses it.
    pub fn crossing_of(&self, d: usize) -> Option<(usize, usize)> {
        self.curves
            .iter()
            .enumerate()
            .find_map(|(i, c)| c.crossings.iter().position(|&x| x == d).map(|k| (i, k)))
    }
}

/// Diagram of `gamma_w` together with its diagonals, the root of `Tree(w)`.
pub fn resolution_root(t: &LabeledTriangulation) -> CurveDiagram {
    let (a, b) = t.endpoints();
    let mut curves = vec![Curve { start: a, end: b, crossings: t.crossings(a, b) }];
    for l in 1..=t.num_diagonals() {
        let (u, v) = t.ends(l);
        curves.push(Curve { start: u, end: v, crossings: Vec::new() });
    }
    CurveDiagram { curves, loops: 0 }
}

/// Diagram of `gamma_w` alone, the root of `Tree(w)*`.
pub fn slide_root(t: &LabeledTriangulation) -> CurveDiagram {
    let (a, b) = t.endpoints();
    CurveDiagram { curves: vec![Curve { start: a, end: b, crossings: t.crossings(a, b) }], loops: 0 }
}

/// Turn a piece with equal endpoints into a closed component. A resolved
/// piece is straightened and keeps only the crossings it still has; a slid
/// piece keeps every crossing point, since each one is slid in turn.
fn push_piece(
    t: &LabeledTriangulation,
    d: &mut CurveDiagram,
    start: usize,
    end: usize,
    list: Vec<usize>,
    straighten: bool,
) {
    if start == end {
        d.loops += 1;
        return;
    }
    let crossings = if straighten {
        let geometric = t.crossings(start, end);
        list.into_iter().filter(|l| geometric.contains(l)).collect()
    } else {
        list
    };
    d.curves.push(Curve { start, end, crossings });
}

fn split(
    t: &LabeledTriangulation,
    d: &CurveDiagram,
    (ci, k): (usize, usize),
    slide: bool,
) -> Result<(CurveDiagram, CurveDiagram), TriangulationError> {
    let curve = d.curves.get(ci).ok_or(TriangulationError::InvalidCrossing { curve: ci, index: k })?;
    let diag = *curve.crossings.get(k).ok_or(TriangulationError::InvalidCrossing { curve: ci, index: k })?;
    let (l, r) = t.ends(diag);
    let mut base = d.clone();
    base.curves.remove(ci);
    if !slide {
        let pos = base
            .curves
            .iter()
            .position(|c| c.crossings.is_empty() && ((c.start, c.end) == (l, r) || (c.start, c.end) == (r, l)))
            .ok_or(TriangulationError::MissingDiagonal(diag))?;
        base.curves.remove(pos);
    }
    let prefix = curve.crossings[..k].to_vec();
    let suffix = curve.crossings[k + 1..].to_vec();
    let build = |p_end: usize, s_start: usize| {
        let mut out = base.clone();
        push_piece(t, &mut out, curve.start, p_end, prefix.clone(), !slide);
        push_piece(t, &mut out, s_start, curve.end, suffix.clone(), !slide);
        out.curves.sort();
        out
    };
    if slide {
        Ok((build(l, l), build(r, r)))
    } else {
        Ok((build(l, r), build(r, l)))
    }
}

/// Smooth the crossing `(curve, index)` with its diagonal in the two ways.
pub fn resolve(
    t: &LabeledTriangulation,
    d: &CurveDiagram,
    crossing: (usize, usize),
) -> Result<(CurveDiagram, CurveDiagram), TriangulationError> {
    split(t, d, crossing, false)
}

/// Slide the crossing point to either endpoint of its diagonal and delete it.
pub fn slide(
    t: &LabeledTriangulation,
    d: &CurveDiagram,
    crossing: (usize, usize),
) -> Result<(CurveDiagram, CurveDiagram), TriangulationError> {
    split(t, d, crossing, true)
}

/// Binary tree of diagrams produced by repeated resolution or sliding.
#[derive(Debug, Clone)]
pub enum ResolutionTree {
    Leaf(CurveDiagram),
    Node { diagram: CurveDiagram, diagonal: usize, children: Box<(ResolutionTree, ResolutionTree)> },
}

impl ResolutionTree {
    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&CurveDiagram> {
        match self {
            ResolutionTree::Leaf(d) => vec![d],
            ResolutionTree::Node { children, .. } => {
                let mut v = children.0.leaves();
                v.extend(children.1.leaves());
                v
            }
        }
    }

    /// Shape of the tree with leaf weights, for comparing trees.
    pub fn signature(&self, t: &LabeledTriangulation) -> String {
        match self {
            ResolutionTree::Leaf(d) => d.weight(t).to_string(),
            ResolutionTree::Node { children, .. } => {
                format!("({} | {})", children.0.signature(t), children.1.signature(t))
            }
        }
    }
}

fn grow(
    t: &LabeledTriangulation,
    d: CurveDiagram,
    order: &[usize],
    slide_mode: bool,
) -> ResolutionTree {
    if d.loops > 0 {
        return ResolutionTree::Leaf(d);
    }
    let next = order.iter().find_map(|&g| d.crossing_of(g).map(|c| (g, c)));
    match next {
        None => ResolutionTree::Leaf(d),
        Some((g, c)) => {
            let (x, y) = split(t, &d, c, slide_mode).expect("crossing exists");
            let children = Box::new((grow(t, x, order, slide_mode), grow(t, y, order, slide_mode)));
            ResolutionTree::Node { diagram: d, diagonal: g, children }
        }
    }
}

/// Resolution tree of `gamma_w`, resolving diagonals in the given order.
pub fn resolution_tree(t: &LabeledTriangulation, order: &[usize]) -> ResolutionTree {
    grow(t, resolution_root(t), order, false)
}

/// Dual resolution tree, sliding at diagonals in the given order.
pub fn dual_resolution_tree(t: &LabeledTriangulation, order: &[usize]) -> ResolutionTree {
    grow(t, slide_root(t), order, true)
}

fn leaf_multiset(t: &LabeledTriangulation, tree: &ResolutionTree) -> Vec<LaurentPolynomial> {
    let mut v: Vec<LaurentPolynomial> = tree.leaves().iter().map(|d| d.weight(t)).collect();
    v.sort();
    v
}

/// Leaf weights of `Res(w)` in the order `1..=n`, zero leaves included.
pub fn enumerate_resolutions(w: &Word) -> Vec<LaurentPolynomial> {
    let t = LabeledTriangulation::from_word(w);
    let order: Vec<usize> = (1..=t.num_diagonals()).collect();
    leaf_multiset(&t, &resolution_tree(&t, &order))
}

/// Leaf weights of `Res(w)*` in the order `1..=n`, zero leaves included.
pub fn enumerate_dual_resolutions(w: &Word) -> Vec<LaurentPolynomial> {
    let t = LabeledTriangulation::from_word(w);
    let order: Vec<usize> = (1..=t.num_diagonals()).collect();
    leaf_multiset(&t, &dual_resolution_tree(&t, &order))
}

/// Leaf weights for an arbitrary resolution order.
pub fn resolution_leaves(t: &LabeledTriangulation, order: &[usize], slides: bool) -> Vec<LaurentPolynomial> {
    let tree = if slides { dual_resolution_tree(t, order) } else { resolution_tree(t, order) };
    leaf_multiset(t, &tree)
}

/// `(1 / x_1 ... x_n) * sum of leaf weights`.
pub fn normalized_sum(t: &LabeledTriangulation, leaves: &[LaurentPolynomial]) -> LaurentPolynomial {
    let nv = t.num_labels();
    let total = leaves.iter().fold(LaurentPolynomial::zero(nv), |a, b| &a + b);
    let diag: Vec<(usize, i32)> = (0..t.num_diagonals()).map(|i| (i, 1)).collect();
    total.div_exact(&LaurentPolynomial::from_factors(nv, &diag)).expect("monomial division")
}

/// Count of each nonzero leaf weight, for order-independence checks.
pub fn nonzero_leaf_counts(leaves: &[LaurentPolynomial]) -> BTreeMap<LaurentPolynomial, usize> {
    let mut m = BTreeMap::new();
    for l in leaves.iter().filter(|l| !l.is_zero()) {
        *m.entry(l.clone()).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cluster_engine::cluster_variable;
    use crate::core::{dual_word, word};

    #[test]
    fn hexagon_ab_labels() {
        let t = LabeledTriangulation::from_word(&word("ab"));
        assert_eq!(t.polygon_size(), 6);
        // clockwise boundary from a: 7, 4, 9, 8, 5, 6
        let boundary: Vec<usize> = (0..6).map(|v| t.label_of(v, (v + 1) % 6).unwrap()).collect();
        assert_eq!(boundary, vec![7, 4, 9, 8, 5, 6]);
        assert_eq!(t.ends(1), (1, 5));
        assert_eq!(t.ends(2), (2, 5));
        assert_eq!(t.ends(3), (2, 4));
        assert_eq!(t.endpoints(), (0, 3));
        assert!(t.is_zigzag());
        assert!(!t.is_fan());
    }

    #[test]
    fn consecutive_triangles_share_labels() {
        for w in Word::all_up_to(7) {
            let t = LabeledTriangulation::from_word(&w);
            let mut seen = vec![0; t.num_labels() + 1];
            for tri in t.triangles() {
                for &l in &tri.labels {
                    seen[l] += 1;
                }
            }
            for (l, &c) in seen.iter().enumerate().skip(1).take(t.num_labels()) {
                assert_eq!(c, if t.is_diagonal(l) { 2 } else { 1 }, "{w} label {l}");
            }
            for i in 1..t.triangles().len() {
                let a = t.triangles()[i - 1].labels;
                let b = t.triangles()[i].labels;
                let shared: Vec<usize> = a.iter().filter(|l| b.contains(l)).copied().collect();
                assert_eq!(shared, vec![i], "{w}");
            }
            assert_eq!(t.crossings(t.endpoints().0, t.endpoints().1), (1..=t.num_diagonals()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn straight_words_give_fans() {
        for n in 0..7 {
            assert!(LabeledTriangulation::from_word(&Word::repeat(Letter::B, n)).is_fan());
            assert!(LabeledTriangulation::from_word(&Word::repeat(Letter::A, n)).is_fan());
        }
        let q = LabeledTriangulation::from_word(&word(""));
        assert!(q.is_fan() && q.is_zigzag());
        for w in Word::all_up_to(7).into_iter().filter(|w| w.is_zigzag()) {
            assert!(LabeledTriangulation::from_word(&w).is_zigzag(), "{w}");
        }
    }

    #[test]
    fn dual_triangulation_matches_dual_word() {
        for w in Word::all_up_to(7).into_iter().filter(|w| !w.is_empty()) {
            let t = LabeledTriangulation::from_word(&w);
            assert_eq!(t.dual(), LabeledTriangulation::from_word(&dual_word(&w)), "{w}");
            assert_eq!(t.dual().dual(), t, "{w}");
        }
    }

    #[test]
    fn dual_of_quadrilateral_swaps_boundary_labels() {
        let t = LabeledTriangulation::from_word(&word(""));
        let d = t.dual();
        assert_eq!(d.ends(4), t.ends(5));
        assert_eq!(d.ends(5), t.ends(4));
        assert_eq!(d.ends(1), t.ends(1));
    }

    #[test]
    fn resolutions_of_ab_give_x_ab() {
        let t = LabeledTriangulation::from_word(&word("ab"));
        let leaves = enumerate_resolutions(&word("ab"));
        assert_eq!(normalized_sum(&t, &leaves), cluster_variable(&word("ab")));
        assert_eq!(leaves.iter().filter(|l| !l.is_zero()).count(), 5);
    }

    #[test]
    fn quadrilateral_resolution_is_ptolemy() {
        let t = LabeledTriangulation::from_word(&word(""));
        let root = resolution_root(&t);
        let (x, y) = resolve(&t, &root, (0, 0)).unwrap();
        assert_eq!(x.loops + y.loops, 0);
        assert!(x.is_resolved() && y.is_resolved());
        let mut ls = vec![x.edge_labels(&t).unwrap(), y.edge_labels(&t).unwrap()];
        ls.sort();
        assert_eq!(ls, vec![vec![2, 4], vec![3, 5]]);
        let (x, y) = slide(&t, &slide_root(&t), (0, 0)).unwrap();
        assert_eq!(x.loops + y.loops, 0);
        assert!(resolve(&t, &root, (1, 0)).is_err());
    }

    #[test]
    fn resolution_sum_matches_oracle_and_order() {
        for w in Word::all_up_to(5) {
            let t = LabeledTriangulation::from_word(&w);
            let n = t.num_diagonals();
            let fwd: Vec<usize> = (1..=n).collect();
            let rev: Vec<usize> = (1..=n).rev().collect();
            let a = resolution_leaves(&t, &fwd, false);
            let b = resolution_leaves(&t, &rev, false);
            assert_eq!(normalized_sum(&t, &a), cluster_variable(&w), "{w}");
            assert_eq!(nonzero_leaf_counts(&a), nonzero_leaf_counts(&b), "{w}");
            for tree in [resolution_tree(&t, &fwd)] {
                for leaf in tree.leaves() {
                    assert!(leaf.loops > 0 || leaf.is_resolved());
                }
            }
        }
    }

    #[test]
    fn dual_resolutions_match_resolutions_of_dual() {
        for w in Word::all_up_to(5) {
            let t = LabeledTriangulation::from_word(&w);
            let ts = t.dual();
            let order: Vec<usize> = (1..=t.num_diagonals()).collect();
            let res = normalized_sum(&t, &enumerate_resolutions(&w));
            let dual = normalized_sum(&ts, &resolution_leaves(&ts, &order, true));
            assert_eq!(res, dual, "{w}");
            assert_eq!(
                nonzero_leaf_counts(&resolution_leaves(&t, &order, false)),
                nonzero_leaf_counts(&resolution_leaves(&ts, &order, true)),
                "{w}"
            );
        }
    }

    #[test]
    fn tree_bb_matches_tree_ab() {
        let t = LabeledTriangulation::from_word(&word("ab"));
        let ts = LabeledTriangulation::from_word(&word("bb"));
        let order = [1, 2, 3];
        let a = resolution_tree(&t, &order);
        let b = dual_resolution_tree(&ts, &order);
        assert_eq!(nonzero_leaf_counts(&leaf_multiset(&t, &a)), nonzero_leaf_counts(&leaf_multiset(&ts, &b)));
    }

    #[test]
    fn json_dump() {
        let j = LabeledTriangulation::from_word(&word("ab")).to_json();
        assert_eq!(j["size"], 6);
        assert_eq!(j["triangles"].as_array().unwrap().len(), 4);
        assert_eq!(j["diagonals"].as_array().unwrap().len(), 3);
    }
}
